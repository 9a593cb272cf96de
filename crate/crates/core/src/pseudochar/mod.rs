//! Pseudocharacters of finite groups: the axioms `t(1) = n`,
//! `t(ab) = t(ba)` and `T_{n+1} = 0`, and the kernel of the induced trace
//! form on the group algebra.

pub mod chartable;
pub mod group;

use std::collections::HashMap;

use num_traits::{FromPrimitive, Num, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use group::FiniteGroup;

use crate::chident::t_multilinear;
use crate::error::{Error, Result};
use crate::findim::{ch_degree, from_json_str, quotient, sorted_tuples, trace_kernel, TraceAlgebra};
use crate::linalg::{unit_vector, Subspace};
use crate::rational::{fmt_q, q, serde_q, Q};

/// A candidate pseudocharacter: degree `n` and a value per group element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoCharTable {
    pub group: FiniteGroup,
    pub n: usize,
    pub values: Vec<Q>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CharJson {
    n: usize,
    #[serde(with = "serde_q::vec")]
    values: Vec<Q>,
}

impl PseudoCharTable {
    pub fn new(group: FiniteGroup, n: usize, values: Vec<Q>) -> Result<Self> {
        if values.len() != group.order() {
            return Err(Error::Shape(format!("{} values for a group of order {}", values.len(), group.order())));
        }
        if n == 0 {
            return Err(Error::OutOfRange("degree must be positive".into()));
        }
        Ok(PseudoCharTable { group, n, values })
    }

    pub fn from_integers(group: FiniteGroup, n: usize, values: &[i64]) -> Result<Self> {
        Self::new(group, n, values.iter().map(|&v| q(v)).collect())
    }

    /// Reads `{n, values}`.
    pub fn from_json(group: FiniteGroup, s: &str) -> Result<Self> {
        let j: CharJson = from_json_str(s)?;
        Self::new(group, j.n, j.values)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&CharJson { n: self.n, values: self.values.clone() }).expect("serializable")
    }
}

/// How axiom (3) is checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    Exhaustive,
    /// Random tuples only; a pass is not a proof.
    Sampled {
        samples: usize,
        seed: u64,
    },
}

/// Outcome of [`check_pseudocharacter`], with the first witness per axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoCharReport {
    /// `Some(t(1))` when `t(1) != n`.
    pub trace_of_one: Option<Q>,
    /// The least pair `(a, b)` with `t(ab) != t(ba)`.
    pub asymmetric_pair: Option<(usize, usize)>,
    /// The least tuple where `T_{n+1}` does not vanish, with its value.
    pub frobenius_witness: Option<(Vec<usize>, Q)>,
    pub exhaustive: bool,
    pub tuples_checked: usize,
}

impl PseudoCharReport {
    pub fn passes(&self) -> bool {
        self.trace_of_one.is_none() && self.asymmetric_pair.is_none() && self.frobenius_witness.is_none()
    }

    pub fn render(&self) -> String {
        let mut lines = Vec::new();
        match &self.trace_of_one {
            None => lines.push("axiom 1 (t(1) = n): ok".to_string()),
            Some(t) => lines.push(format!("axiom 1 (t(1) = n): FAIL, t(1) = {}", fmt_q(t))),
        }
        match self.asymmetric_pair {
            None => lines.push("axiom 2 (t(ab) = t(ba)): ok".to_string()),
            Some((a, b)) => lines.push(format!("axiom 2 (t(ab) = t(ba)): FAIL at (g{a}, g{b})")),
        }
        let scope = if self.exhaustive { "exhaustive" } else { "sampled, not exhaustive" };
        match &self.frobenius_witness {
            None => lines.push(format!("axiom 3 (T_(n+1) = 0): ok ({scope}, {} tuples)", self.tuples_checked)),
            Some((t, v)) => {
                let names: Vec<String> = t.iter().map(|g| format!("g{g}")).collect();
                lines.push(format!(
                    "axiom 3 (T_(n+1) = 0): FAIL at ({}), value {} ({scope})",
                    names.join(", "),
                    fmt_q(v)
                ))
            }
        }
        lines.join("\n")
    }
}

/// `T_k` compiled to signed products of cycle traces over variable indices.
pub(crate) struct CompiledT {
    terms: Vec<(i64, Vec<Vec<usize>>)>,
}

impl CompiledT {
    pub(crate) fn new(k: usize) -> Self {
        let t = t_multilinear(k).expect("k >= 1");
        let terms = t
            .terms()
            .map(|(m, c)| {
                let sign = if c > &Q::zero() { 1 } else { -1 };
                let cycles = m
                    .traces
                    .iter()
                    .map(|cw| cw.representative().letters().iter().map(|&v| v as usize - 1).collect())
                    .collect();
                (sign, cycles)
            })
            .collect();
        CompiledT { terms }
    }

    /// `T_k(g_1..g_k)` with `tr` evaluated through `values` and products
    /// through the group.
    pub(crate) fn eval<S>(&self, g: &FiniteGroup, values: &[S], tuple: &[usize]) -> S
    where
        S: Clone + Num + FromPrimitive,
    {
        let mut total = S::zero();
        for (sign, cycles) in &self.terms {
            let mut prod = S::from_i64(*sign).unwrap();
            for c in cycles {
                let x = c.iter().fold(g.identity(), |acc, &v| g.mul(acc, tuple[v]));
                prod = prod * values[x].clone();
                if prod.is_zero() {
                    break;
                }
            }
            total = total + prod;
        }
        total
    }
}

/// The values as `i128` when every term of `T_k`, and their sum, provably fit.
fn integral(values: &[Q], k: usize) -> Option<Vec<i128>> {
    let bits = values.iter().map(|v| v.numer().bits()).max().unwrap_or(0);
    let factorial_bits: u64 = (1..=k as u64).map(|i| 64 - i.leading_zeros() as u64).sum();
    if values.iter().any(|v| !v.is_integer()) || bits * k as u64 + factorial_bits > 120 {
        return None;
    }
    values.iter().map(|v| v.numer().to_string().parse().ok()).collect()
}

/// `T_k` for a class function, memoized on sorted tuples. Symmetry of `T_k`
/// lets the recursion `T_k = T_{k-1} t(x_k) - sum_i T_{k-1}(.., x_i x_k, ..)`
/// share work across tuples.
struct SymmetricT<'a, S> {
    g: &'a FiniteGroup,
    values: &'a [S],
    memo: HashMap<Vec<usize>, S>,
}

impl<'a, S: Clone + Num> SymmetricT<'a, S> {
    fn new(g: &'a FiniteGroup, values: &'a [S]) -> Self {
        SymmetricT { g, values, memo: HashMap::new() }
    }

    fn eval(&mut self, tuple: &[usize]) -> S {
        match tuple.len() {
            0 => return S::one(),
            1 => return self.values[tuple[0]].clone(),
            _ => {}
        }
        let mut key = tuple.to_vec();
        key.sort_unstable();
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let (rest, last) = key.split_at(key.len() - 1);
        let last = last[0];
        let mut v = self.eval(rest) * self.values[last].clone();
        for i in 0..rest.len() {
            let mut r = rest.to_vec();
            r[i] = self.g.mul(r[i], last);
            v = v - self.eval(&r);
        }
        self.memo.insert(key, v.clone());
        v
    }
}

/// First tuple (in the given order) where `T_k` is nonzero. `symmetric`
/// means `t(ab) = t(ba)` holds.
fn frobenius_search(
    g: &FiniteGroup,
    values: &[Q],
    k: usize,
    tuples: &[Vec<usize>],
    symmetric: bool,
    parallel: bool,
) -> Option<(Vec<usize>, Q)> {
    let ints = integral(values, k);
    if symmetric {
        if let Some(ints) = &ints {
            let mut t = SymmetricT::new(g, ints);
            return tuples.iter().find_map(|tu| {
                let v = t.eval(tu);
                (v != 0).then(|| (tu.clone(), Q::from_integer(v.into())))
            });
        }
        let mut t = SymmetricT::new(g, values);
        return tuples.iter().find_map(|tu| {
            let v = t.eval(tu);
            (!v.is_zero()).then(|| (tu.clone(), v))
        });
    }
    let t = CompiledT::new(k);
    if let Some(ints) = ints {
        let test = |tu: &Vec<usize>| {
            let v = t.eval(g, &ints, tu);
            (v != 0).then(|| (tu.clone(), Q::from_integer(v.into())))
        };
        if parallel {
            tuples.par_iter().find_map_first(test)
        } else {
            tuples.iter().find_map(test)
        }
    } else {
        let test = |tu: &Vec<usize>| {
            let v = t.eval(g, values, tu);
            (!v.is_zero()).then(|| (tu.clone(), v))
        };
        if parallel {
            tuples.par_iter().find_map_first(test)
        } else {
            tuples.iter().find_map(test)
        }
    }
}

/// Checks the three axioms. In exhaustive mode with axiom (2) holding, only
/// non-decreasing tuples are tested: `T_{n+1}` is symmetric, and the least
/// failing tuple is non-decreasing. Failures are report content, not errors.
pub fn check_pseudocharacter(p: &PseudoCharTable, mode: CheckMode, parallel: bool) -> PseudoCharReport {
    let g = &p.group;
    let order = g.order();
    let t1 = &p.values[g.identity()];
    let trace_of_one = (t1 != &q(p.n as i64)).then(|| t1.clone());
    let asymmetric_pair = (0..order)
        .flat_map(|a| (0..order).map(move |b| (a, b)))
        .find(|&(a, b)| p.values[g.mul(a, b)] != p.values[g.mul(b, a)]);
    let k = p.n + 1;
    let (tuples, exhaustive) = match mode {
        CheckMode::Exhaustive if asymmetric_pair.is_none() => (sorted_tuples(order, k), true),
        CheckMode::Exhaustive => (all_tuples(order, k), true),
        CheckMode::Sampled { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            ((0..samples).map(|_| (0..k).map(|_| rng.gen_range(0..order)).collect()).collect(), false)
        }
    };
    let frobenius_witness = frobenius_search(g, &p.values, k, &tuples, asymmetric_pair.is_none(), parallel);
    PseudoCharReport { trace_of_one, asymmetric_pair, frobenius_witness, exhaustive, tuples_checked: tuples.len() }
}

/// Whether `T_k` vanishes on all tuples (using the symmetric reduction, so
/// `t` should be a class function).
pub fn vanishes_t(p: &PseudoCharTable, k: usize) -> bool {
    frobenius_search(&p.group, &p.values, k, &sorted_tuples(p.group.order(), k), true, false).is_none()
}

fn all_tuples(d: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut t = vec![0usize; k];
    loop {
        out.push(t.clone());
        let Some(i) = (0..k).rev().find(|&i| t[i] + 1 < d) else {
            break;
        };
        t[i] += 1;
        for x in t.iter_mut().skip(i + 1) {
            *x = 0;
        }
    }
    out
}

/// The group algebra with basis the group elements and trace `values`.
pub fn group_algebra(g: &FiniteGroup, values: &[Q]) -> Result<TraceAlgebra> {
    let n = g.order();
    let labels = (0..n).map(|i| format!("g{i}")).collect();
    TraceAlgebra::from_fn(labels, |a, b| unit_vector(n, g.mul(a, b)), unit_vector(n, g.identity()), values.to_vec())
}

/// `K_t` and the quotient `A[G] / K_t`, which is checked to be `n`-CH.
pub fn pseudochar_kernel(p: &PseudoCharTable) -> Result<(Subspace, TraceAlgebra)> {
    let report = check_pseudocharacter(p, CheckMode::Exhaustive, false);
    if !report.passes() {
        return Err(Error::AxiomFailure(report.render().replace('\n', "; ")));
    }
    let a = group_algebra(&p.group, &p.values)?;
    let k = trace_kernel(&a);
    let quo = quotient(&a, &k)?;
    if ch_degree(&quo, p.n) != Some(p.n) {
        return Err(Error::NotCayleyHamilton(format!("the quotient is not {}-CH", p.n)));
    }
    Ok((k, quo))
}
