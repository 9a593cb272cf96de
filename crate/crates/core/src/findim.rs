//! Finite-dimensional algebras with a scalar-valued trace, given by
//! structure constants over Q.

use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chident::ch_multilinear;
use crate::error::{Error, Result};
use crate::eval::{evaluate, TraceTarget};
use crate::freetrace::TracePoly;
use crate::linalg::{null_space, unit_vector, Subspace};
use crate::rational::{fmt_q, q, serde_q, to_usize, Q};

/// A matrix block `M_size` inside a split semisimple algebra, located by the
/// coordinates of its identity element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub size: usize,
    pub unit: Vec<Q>,
}

/// An associative unital algebra over Q with basis `u_0..u_{d-1}` and a
/// linear trace `t(u_i) = trace[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceAlgebra {
    labels: Vec<String>,
    /// `mul[i * d + j]` lists the nonzero `(k, c)` with `u_i u_j = sum c u_k`.
    mul: Vec<Vec<(usize, Q)>>,
    unit: Vec<Q>,
    trace: Vec<Q>,
    blocks: Option<Vec<Block>>,
}

/// Block sizes and weights of `F(m; a)`, kept sorted by `(m, a)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightedType {
    blocks: Vec<(usize, usize)>,
}

impl WeightedType {
    pub fn new(sizes: &[usize], weights: &[usize]) -> Result<Self> {
        if sizes.is_empty() || sizes.len() != weights.len() {
            return Err(Error::Shape("block sizes and weights must be nonempty lists of equal length".into()));
        }
        if sizes.iter().chain(weights).any(|&x| x == 0) {
            return Err(Error::OutOfRange("block sizes and weights must be positive".into()));
        }
        let mut blocks: Vec<(usize, usize)> = sizes.iter().copied().zip(weights.iter().copied()).collect();
        blocks.sort();
        Ok(WeightedType { blocks })
    }

    /// `(m, a)` pairs in canonical order.
    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.0).collect()
    }

    pub fn weights(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.1).collect()
    }

    /// `n = sum a_i m_i`.
    pub fn n(&self) -> usize {
        self.blocks.iter().map(|(m, a)| m * a).sum()
    }
}

impl fmt::Display for WeightedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ms: Vec<String> = self.sizes().iter().map(usize::to_string).collect();
        let a_s: Vec<String> = self.weights().iter().map(usize::to_string).collect();
        write!(f, "(({});({}))", ms.join(","), a_s.join(","))
    }
}

/// Builds and validates an algebra: associativity on all basis triples, the
/// unit law and `t(u_i u_j) = t(u_j u_i)`.
pub fn make_algebra(
    labels: Vec<String>,
    mul: Vec<Vec<(usize, Q)>>,
    unit: Vec<Q>,
    trace: Vec<Q>,
) -> Result<TraceAlgebra> {
    let d = labels.len();
    if mul.len() != d * d {
        return Err(Error::Shape(format!("expected {} products for dimension {d}, got {}", d * d, mul.len())));
    }
    if unit.len() != d || trace.len() != d {
        return Err(Error::Shape(format!("unit and trace must have length {d}")));
    }
    let mut clean = Vec::with_capacity(d * d);
    for (idx, entries) in mul.into_iter().enumerate() {
        let mut v = vec![Q::zero(); d];
        for (k, c) in entries {
            if k >= d {
                return Err(Error::Shape(format!("product u{} u{} refers to basis index {k}", idx / d, idx % d)));
            }
            v[k] += c;
        }
        clean.push(sparse(&v));
    }
    let a = TraceAlgebra { labels, mul: clean, unit, trace, blocks: None };
    a.validate()?;
    Ok(a)
}

fn sparse(v: &[Q]) -> Vec<(usize, Q)> {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect()
}

impl TraceAlgebra {
    /// Builds from a product function on basis indices, then validates.
    pub fn from_fn<F: Fn(usize, usize) -> Vec<Q>>(
        labels: Vec<String>,
        product: F,
        unit: Vec<Q>,
        trace: Vec<Q>,
    ) -> Result<Self> {
        let d = labels.len();
        let mut mul = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                mul.push(sparse(&product(i, j)));
            }
        }
        make_algebra(labels, mul, unit, trace)
    }

    fn validate(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let ij = self.basis_product(i, j);
                for k in 0..d {
                    let left = self.mul(&ij, &unit_vector(d, k));
                    let jk = self.basis_product(j, k);
                    let right = self.mul(&unit_vector(d, i), &jk);
                    if left != right {
                        return Err(Error::NonAssociative(i, j, k));
                    }
                }
            }
        }
        for i in 0..d {
            let e = unit_vector(d, i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Err(Error::UnitLaw(i));
            }
        }
        for i in 0..d {
            for j in i + 1..d {
                if self.trace_of(&self.basis_product(i, j)) != self.trace_of(&self.basis_product(j, i)) {
                    return Err(Error::TraceAsymmetric(i, j));
                }
            }
        }
        Ok(())
    }

    /// Attaches a block decomposition. Each block unit must be an idempotent
    /// and the block units must sum to 1.
    pub fn with_blocks(mut self, blocks: Vec<Block>) -> Result<Self> {
        let d = self.dim();
        let mut total = vec![Q::zero(); d];
        for (i, b) in blocks.iter().enumerate() {
            if b.unit.len() != d || b.size == 0 {
                return Err(Error::Shape(format!("block {i} is malformed")));
            }
            if self.mul(&b.unit, &b.unit) != b.unit {
                return Err(Error::Shape(format!("block {i} unit is not idempotent")));
            }
            for (t, x) in total.iter_mut().zip(&b.unit) {
                *t += x;
            }
        }
        if total != self.unit {
            return Err(Error::Shape("block units do not sum to 1".into()));
        }
        self.blocks = Some(blocks);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[Q] {
        &self.unit
    }

    pub fn trace_vector(&self) -> &[Q] {
        &self.trace
    }

    pub fn blocks(&self) -> Option<&[Block]> {
        self.blocks.as_deref()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Q> {
        let d = self.dim();
        let mut v = vec![Q::zero(); d];
        for (k, c) in &self.mul[i * d + j] {
            v[*k] = c.clone();
        }
        v
    }

    pub fn structure(&self, i: usize, j: usize) -> &[(usize, Q)] {
        &self.mul[i * self.dim() + j]
    }

    pub fn mul(&self, a: &[Q], b: &[Q]) -> Vec<Q> {
        let d = self.dim();
        let mut out = vec![Q::zero(); d];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in &self.mul[i * d + j] {
                    out[*k] += &xy * c;
                }
            }
        }
        out
    }

    pub fn trace_of(&self, a: &[Q]) -> Q {
        a.iter().zip(&self.trace).map(|(x, t)| x * t).sum()
    }

    pub fn trace_of_one(&self) -> Q {
        self.trace_of(&self.unit)
    }

    /// `G_ij = t(u_i u_j)`.
    pub fn gram(&self) -> Vec<Vec<Q>> {
        let d = self.dim();
        (0..d).map(|i| (0..d).map(|j| self.trace_of(&self.basis_product(i, j))).collect()).collect()
    }

    /// The same algebra with trace multiplied by `a`.
    pub fn rescale_trace(&self, a: usize) -> Result<TraceAlgebra> {
        if a == 0 {
            return Err(Error::OutOfRange("trace scale must be positive".into()));
        }
        let mut r = self.clone();
        r.trace = self.trace.iter().map(|t| t * q(a as i64)).collect();
        Ok(r)
    }

    /// Checks that `s` is a two-sided ideal, returning a witness otherwise.
    pub fn check_ideal(&self, s: &Subspace) -> Result<()> {
        let d = self.dim();
        for (bi, v) in s.basis().iter().enumerate() {
            for i in 0..d {
                let u = unit_vector(d, i);
                if !s.contains(&self.mul(&u, v)) {
                    return Err(Error::NotAnIdeal(format!("{} * v{bi} leaves the subspace", self.labels[i])));
                }
                if !s.contains(&self.mul(v, &u)) {
                    return Err(Error::NotAnIdeal(format!("v{bi} * {} leaves the subspace", self.labels[i])));
                }
            }
        }
        Ok(())
    }

    /// An ideal is trace-stable when `t(x) * 1` lies in it for every `x` in it.
    pub fn check_trace_stable(&self, s: &Subspace) -> Result<()> {
        if s.contains(&self.unit) {
            return Ok(());
        }
        for (bi, v) in s.basis().iter().enumerate() {
            let t = self.trace_of(v);
            if !t.is_zero() {
                return Err(Error::NotTraceStable(bi, fmt_q(&t)));
            }
        }
        Ok(())
    }

    /// `I . J = IJ + A t(IJ)`.
    pub fn ideal_product(&self, i: &Subspace, j: &Subspace) -> Subspace {
        let d = self.dim();
        let mut out = Subspace::zero(d);
        for x in i.basis() {
            for y in j.basis() {
                let xy = self.mul(x, y);
                if !self.trace_of(&xy).is_zero() {
                    return Subspace::full(d);
                }
                out.insert(&xy);
            }
        }
        out
    }

    /// The least `m <= max` with `I^{.m} = 0` under the dot product.
    pub fn ideal_nilpotency(&self, ideal: &Subspace, max: usize) -> Option<usize> {
        let mut p = ideal.clone();
        for m in 1..=max {
            if p.is_zero() {
                return Some(m);
            }
            p = self.ideal_product(&p, ideal);
        }
        None
    }

    /// The least `k <= max` with `a^k = 0`.
    pub fn nilpotency_index(&self, a: &[Q], max: usize) -> Option<usize> {
        let mut p = a.to_vec();
        for k in 1..=max {
            if p.iter().all(Zero::is_zero) {
                return Some(k);
            }
            p = self.mul(&p, a);
        }
        None
    }
}

impl TraceTarget for TraceAlgebra {
    type Elem = Vec<Q>;
    type Scalar = Q;

    fn one(&self) -> Vec<Q> {
        self.unit.clone()
    }
    fn zero(&self) -> Vec<Q> {
        vec![Q::zero(); self.dim()]
    }
    fn add(&self, a: &Vec<Q>, b: &Vec<Q>) -> Vec<Q> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }
    fn mul(&self, a: &Vec<Q>, b: &Vec<Q>) -> Vec<Q> {
        TraceAlgebra::mul(self, a, b)
    }
    fn scale(&self, c: &Q, a: &Vec<Q>) -> Vec<Q> {
        a.iter().map(|x| x * c).collect()
    }
    fn trace(&self, a: &Vec<Q>) -> Q {
        self.trace_of(a)
    }
    fn trace_of_one(&self) -> Q {
        TraceAlgebra::trace_of_one(self)
    }
}

fn label_e(i: usize, j: usize) -> String {
    format!("e{}{}", i + 1, j + 1)
}

/// `M_m(Q)` with the matrix trace, basis `e_ij` in row-major order.
pub fn matrix_algebra(m: usize) -> TraceAlgebra {
    weighted_semisimple(&WeightedType::new(&[m], &[1]).unwrap())
}

/// `F(m; a)`: the block-diagonal algebra `M_{m_1} + ... + M_{m_k}` with trace
/// `sum a_i tr(r_i)`, with its block decomposition attached.
pub fn weighted_semisimple(w: &WeightedType) -> TraceAlgebra {
    let mut labels = Vec::new();
    // (block, row, col) of each basis element
    let mut coords = Vec::new();
    for (b, &(m, _)) in w.blocks().iter().enumerate() {
        for i in 0..m {
            for j in 0..m {
                labels.push(if w.blocks().len() == 1 { label_e(i, j) } else { format!("{}_{}", label_e(i, j), b + 1) });
                coords.push((b, i, j));
            }
        }
    }
    let d = labels.len();
    let index = |b: usize, i: usize, j: usize| coords.iter().position(|&c| c == (b, i, j)).unwrap();
    let mut mul = Vec::with_capacity(d * d);
    for &(b1, i1, j1) in &coords {
        for &(b2, i2, j2) in &coords {
            if b1 == b2 && j1 == i2 {
                mul.push(vec![(index(b1, i1, j2), Q::one())]);
            } else {
                mul.push(Vec::new());
            }
        }
    }
    let mut unit = vec![Q::zero(); d];
    let mut trace = vec![Q::zero(); d];
    let mut blocks = Vec::new();
    for (b, &(m, a)) in w.blocks().iter().enumerate() {
        let mut bu = vec![Q::zero(); d];
        for i in 0..m {
            let k = index(b, i, i);
            unit[k] = Q::one();
            bu[k] = Q::one();
            trace[k] = q(a as i64);
        }
        blocks.push(Block { size: m, unit: bu });
    }
    let alg = TraceAlgebra { labels, mul, unit, trace, blocks: None };
    alg.with_blocks(blocks).expect("block units of F(m;a) are valid")
}

/// `Q[x]/(x^k)` with basis `1, x, .., x^{k-1}` and the given trace values.
pub fn truncated_polynomial(k: usize, trace: Vec<Q>) -> Result<TraceAlgebra> {
    if k == 0 {
        return Err(Error::OutOfRange("k must be positive".into()));
    }
    let labels = (0..k).map(|i| match i {
        0 => "1".to_string(),
        1 => "x".to_string(),
        _ => format!("x^{i}"),
    });
    TraceAlgebra::from_fn(
        labels.collect(),
        |i, j| if i + j < k { unit_vector(k, i + j) } else { vec![Q::zero(); k] },
        unit_vector(k, 0),
        trace,
    )
}

/// The dual numbers `Q[e]/(e^2)` with `t(a + b e) = 2a`.
pub fn dual_numbers() -> TraceAlgebra {
    let mut a = truncated_polynomial(2, vec![q(2), q(0)]).unwrap();
    a.labels = vec!["1".into(), "eps".into()];
    a
}

/// The kernel of the trace form: the null space of the Gram matrix.
pub fn trace_kernel(a: &TraceAlgebra) -> Subspace {
    let d = a.dim();
    let k = Subspace::span(d, &null_space(&a.gram(), d)).unwrap();
    debug_assert!(a.check_ideal(&k).is_ok());
    k
}

/// `A / I` for an ideal with `t(I) = 0`, with the induced trace. The
/// quotient basis is the image of the basis elements at the free columns of
/// `I`'s echelon form.
pub fn quotient(a: &TraceAlgebra, ideal: &Subspace) -> Result<TraceAlgebra> {
    a.check_ideal(ideal)?;
    if let Some((bi, v)) = ideal.basis().iter().enumerate().find(|(_, v)| !a.trace_of(v).is_zero()) {
        return Err(Error::NotTraceStable(bi, fmt_q(&a.trace_of(v))));
    }
    let free = ideal.free_columns();
    let project = |v: &[Q]| -> Vec<Q> {
        let r = ideal.reduce(v);
        free.iter().map(|&c| r[c].clone()).collect()
    };
    let labels = free.iter().map(|&c| a.labels[c].clone()).collect();
    let mut mul = Vec::new();
    for &i in &free {
        for &j in &free {
            mul.push(sparse(&project(&a.basis_product(i, j))));
        }
    }
    let unit = project(&a.unit);
    let trace = free.iter().map(|&c| a.trace[c].clone()).collect();
    make_algebra(labels, mul, unit, trace)
}

/// The preimage in `A` of the trace kernel of `A / I`, for a trace-stable
/// ideal `I`.
pub fn radical_kernel(a: &TraceAlgebra, ideal: &Subspace) -> Result<Subspace> {
    a.check_ideal(ideal)?;
    a.check_trace_stable(ideal)?;
    let d = a.dim();
    if ideal.contains(a.unit()) {
        return Ok(Subspace::full(d));
    }
    let quo = quotient(a, ideal)?;
    let k = trace_kernel(&quo);
    let free = ideal.free_columns();
    let mut r = ideal.clone();
    for v in k.basis() {
        let mut lift = vec![Q::zero(); d];
        for (x, &c) in v.iter().zip(&free) {
            lift[c] = x.clone();
        }
        r.insert(&lift);
    }
    Ok(r)
}

/// Outcome of testing the `n`-th Cayley-Hamilton identity on an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChCheck {
    Holds,
    /// `t(1)` differs from `n`.
    TraceOfOne(Q),
    /// The lexicographically least basis tuple where the identity fails, and
    /// the value there.
    Fails {
        tuple: Vec<usize>,
        value: Vec<Q>,
    },
}

impl ChCheck {
    pub fn holds(&self) -> bool {
        matches!(self, ChCheck::Holds)
    }
}

/// Non-decreasing tuples in `0..d` of length `n`, in lexicographic order.
pub(crate) fn sorted_tuples(d: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if d == 0 {
        return out;
    }
    let mut t = vec![0usize; n];
    loop {
        out.push(t.clone());
        let Some(i) = (0..n).rev().find(|&i| t[i] + 1 < d) else {
            break;
        };
        t[i] += 1;
        for j in i + 1..n {
            t[j] = t[i];
        }
    }
    out
}

/// Tests `t(1) = n` and the multilinear identity `CH(x_1..x_n) = 0` on basis
/// tuples. `CH` is symmetric in its arguments, so non-decreasing tuples
/// suffice, and the least failing one is also the least failing tuple overall.
pub fn check_cayley_hamilton(a: &TraceAlgebra, n: usize, parallel: bool) -> ChCheck {
    let t1 = a.trace_of_one();
    if t1 != q(n as i64) {
        return ChCheck::TraceOfOne(t1);
    }
    let ch = ch_multilinear(n).expect("n >= 1");
    let tuples = sorted_tuples(a.dim(), n);
    let test = |t: &Vec<usize>| -> Option<ChCheck> {
        let v = eval_on_basis(a, &ch, t);
        (!v.iter().all(Zero::is_zero)).then(|| ChCheck::Fails { tuple: t.clone(), value: v })
    };
    let found = if parallel { tuples.par_iter().find_map_first(test) } else { tuples.iter().find_map(test) };
    found.unwrap_or(ChCheck::Holds)
}

fn eval_on_basis(a: &TraceAlgebra, p: &TracePoly, tuple: &[usize]) -> Vec<Q> {
    let d = a.dim();
    evaluate(a, p, |v| tuple.get(v as usize - 1).map(|&i| unit_vector(d, i))).expect("all variables assigned")
}

/// The `n <= n_max` for which `A` is an `n`-CH algebra, if any. Only
/// `n = t(1)` can qualify.
pub fn ch_degree(a: &TraceAlgebra, n_max: usize) -> Option<usize> {
    ch_degree_with(a, n_max, false)
}

pub fn ch_degree_with(a: &TraceAlgebra, n_max: usize, parallel: bool) -> Option<usize> {
    let n = to_usize(&a.trace_of_one())?;
    if n == 0 || n > n_max {
        return None;
    }
    check_cayley_hamilton(a, n, parallel).holds().then_some(n)
}

/// Recovers `F(m; a)` from a split semisimple algebra with attached blocks:
/// `a_i = t(e_i) / m_i` must be a positive integer.
pub fn recover_weights(a: &TraceAlgebra) -> Result<WeightedType> {
    let blocks = a.blocks().ok_or_else(|| Error::Shape("recover_weights needs the block decomposition".into()))?;
    let mut sizes = Vec::new();
    let mut weights = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        let w = a.trace_of(&b.unit) / q(b.size as i64);
        match to_usize(&w) {
            Some(x) if x > 0 => {
                sizes.push(b.size);
                weights.push(x);
            }
            _ => {
                return Err(Error::NotCayleyHamilton(format!("block {i} of size {} has weight {}", b.size, fmt_q(&w))))
            }
        }
    }
    let w = WeightedType::new(&sizes, &weights)?;
    let t1 = a.trace_of_one();
    if q(w.n() as i64) != t1 {
        return Err(Error::NotCayleyHamilton(format!("t(1) = {} but the weights give n = {}", fmt_q(&t1), w.n())));
    }
    Ok(w)
}

#[derive(Serialize, Deserialize)]
struct EntryJson(usize, #[serde(with = "serde_q")] Q);

#[derive(Serialize, Deserialize)]
struct BlockJson {
    size: usize,
    #[serde(with = "serde_q::vec")]
    unit: Vec<Q>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraJson {
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<String>>,
    mul: Vec<Vec<EntryJson>>,
    #[serde(with = "serde_q::vec")]
    unit: Vec<Q>,
    #[serde(with = "serde_q::vec")]
    trace: Vec<Q>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    blocks: Option<Vec<BlockJson>>,
}

/// Deserializes JSON, reporting the failing field path and position.
pub(crate) fn from_json_str<T: serde::de::DeserializeOwned>(s: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(s);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        Error::Json(format!("line {} column {}, at `{}`: {}", inner.line(), inner.column(), path, inner))
    })
}

impl TraceAlgebra {
    /// Reads `{dim, basis, mul, unit, trace, blocks?}`; `mul` lists the `d^2`
    /// products `u_i u_j` in row-major order as `[k, "c"]` pairs.
    pub fn from_json(s: &str) -> Result<TraceAlgebra> {
        let j: AlgebraJson = from_json_str(s)?;
        let labels = j.basis.unwrap_or_else(|| (0..j.dim).map(|i| format!("u{i}")).collect());
        if labels.len() != j.dim {
            return Err(Error::Json(format!("basis has {} labels but dim is {}", labels.len(), j.dim)));
        }
        let mul = j.mul.into_iter().map(|v| v.into_iter().map(|EntryJson(k, c)| (k, c)).collect()).collect();
        let a = make_algebra(labels, mul, j.unit, j.trace)?;
        match j.blocks {
            Some(bs) => a.with_blocks(bs.into_iter().map(|b| Block { size: b.size, unit: b.unit }).collect()),
            None => Ok(a),
        }
    }

    pub fn to_json(&self) -> String {
        let j = AlgebraJson {
            dim: self.dim(),
            basis: Some(self.labels.clone()),
            mul: self.mul.iter().map(|v| v.iter().map(|(k, c)| EntryJson(*k, c.clone())).collect()).collect(),
            unit: self.unit.clone(),
            trace: self.trace.clone(),
            blocks: self
                .blocks
                .as_ref()
                .map(|bs| bs.iter().map(|b| BlockJson { size: b.size, unit: b.unit.clone() }).collect()),
        };
        serde_json::to_string_pretty(&j).expect("serializable")
    }
}

/// Renders a vector as `c*label + ...`.
pub fn format_element(a: &TraceAlgebra, v: &[Q]) -> String {
    let parts: Vec<String> = v
        .iter()
        .zip(a.labels())
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, l)| if c.is_one() { l.clone() } else { format!("{}*{l}", fmt_q(c)) })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ").replace("+ -", "- ")
    }
}

pub fn format_subspace(a: &TraceAlgebra, s: &Subspace) -> String {
    let parts: Vec<String> = s.basis().iter().map(|v| format_element(a, v)).collect();
    format!("span{{{}}}", parts.join(", "))
}
