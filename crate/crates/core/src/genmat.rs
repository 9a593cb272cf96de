//! Evaluation on generic and rational matrices, trace-identity checks,
//! one-variable diagonal models and ranks of generic-element algebras.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::eval::{evaluate, TraceTarget};
use crate::findim::{trace_kernel, TraceAlgebra};
use crate::freetrace::{TracePoly, Word};
use crate::linalg::{det_poly, rank_poly};
use crate::matrix::{PolyMatrix, QMatrix, SquareMatrix};
use crate::mpoly::{MPoly, Monomial, Var};
use crate::rational::{q, qf, Q};

/// Seed used by every randomized search unless another one is given.
pub const DEFAULT_SEED: u64 = 42;

impl<R: crate::matrix::Ring> TraceTarget for MatricesOver<R> {
    type Elem = SquareMatrix<R>;
    type Scalar = R;

    fn one(&self) -> SquareMatrix<R> {
        SquareMatrix::identity(self.n)
    }
    fn zero(&self) -> SquareMatrix<R> {
        SquareMatrix::zero(self.n)
    }
    fn add(&self, a: &SquareMatrix<R>, b: &SquareMatrix<R>) -> SquareMatrix<R> {
        a.add(b)
    }
    fn mul(&self, a: &SquareMatrix<R>, b: &SquareMatrix<R>) -> SquareMatrix<R> {
        a.mul(b)
    }
    fn scale(&self, c: &R, a: &SquareMatrix<R>) -> SquareMatrix<R> {
        a.scale(c)
    }
    fn trace(&self, a: &SquareMatrix<R>) -> R {
        a.trace()
    }
    fn trace_of_one(&self) -> R {
        R::from_q(&q(self.n as i64))
    }
}

/// `n x n` matrices over a coefficient ring, with the matrix trace and
/// `tr(1) = n`.
pub struct MatricesOver<R> {
    n: usize,
    _ring: std::marker::PhantomData<R>,
}

impl<R> MatricesOver<R> {
    pub fn new(n: usize) -> Self {
        MatricesOver { n, _ring: std::marker::PhantomData }
    }
}

/// The generic `n x n` matrix attached to variable `i`.
pub fn generic_matrix(i: u32, n: usize) -> PolyMatrix {
    PolyMatrix::from_fn(n, |r, c| MPoly::var(Var::Entry { matrix: i, row: r as u32 + 1, col: c as u32 + 1 }))
}

fn eval_generic<R: crate::matrix::Ring>(
    p: &TracePoly,
    assign: &BTreeMap<u32, SquareMatrix<R>>,
    n: usize,
) -> Result<SquareMatrix<R>> {
    if let Some(m) = assign.values().find(|m| m.size() != n) {
        return Err(Error::SizeMismatch { expected: n, got: m.size() });
    }
    evaluate(&MatricesOver::<R>::new(n), p, |v| assign.get(&v).cloned())
}

/// Evaluates `p` on polynomial matrices, with `tr(1) = n`.
pub fn eval(p: &TracePoly, assign: &BTreeMap<u32, PolyMatrix>, n: usize) -> Result<PolyMatrix> {
    eval_generic(p, assign, n)
}

/// Evaluates `p` on rational matrices, with `tr(1) = n`.
pub fn eval_q(p: &TracePoly, assign: &BTreeMap<u32, QMatrix>, n: usize) -> Result<QMatrix> {
    eval_generic(p, assign, n)
}

/// Whether `p` vanishes on `n x n` matrices, decided exactly by evaluating
/// on generic matrices.
pub fn is_trace_identity(p: &TracePoly, n: usize) -> bool {
    let assign: BTreeMap<u32, PolyMatrix> = p.variables().into_iter().map(|v| (v, generic_matrix(v, n))).collect();
    eval(p, &assign, n).expect("all variables assigned").is_zero()
}

/// A rational assignment on which a polynomial does not vanish.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub assignment: BTreeMap<u32, QMatrix>,
    pub value: QMatrix,
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> QMatrix {
    QMatrix::from_fn(n, |_, _| q(rng.gen_range(-bound..=bound)))
}

/// Tries `trials` random small-integer assignments. A returned witness has
/// been evaluated exactly and its value is nonzero. Finding nothing proves
/// nothing.
pub fn random_counterexample(p: &TracePoly, n: usize, trials: usize, seed: u64) -> Option<Witness> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vars = p.variables();
    for t in 0..trials {
        // widen the range as the search goes on
        let bound = 2 + (t / 16) as i64;
        let assignment: BTreeMap<u32, QMatrix> = vars.iter().map(|&v| (v, random_matrix(&mut rng, n, bound))).collect();
        let value = eval_q(p, &assignment, n).expect("all variables assigned");
        if !value.is_zero() {
            let again = eval_q(p, &assignment, n).expect("all variables assigned");
            assert_eq!(again, value);
            return Some(Witness { assignment, value });
        }
    }
    None
}

/// Result of [`verify`].
#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    Identity,
    /// Not an identity; a rational witness when the random search found one.
    NotIdentity(Option<Witness>),
}

/// Random search first (it can only refute), then the exact symbolic check.
/// When the symbolic check refutes, the search is continued to produce a
/// witness.
pub fn verify(p: &TracePoly, n: usize, trials: usize, seed: u64) -> Verdict {
    if trials > 0 {
        if let Some(w) = random_counterexample(p, n, trials, seed) {
            return Verdict::NotIdentity(Some(w));
        }
    }
    if is_trace_identity(p, n) {
        Verdict::Identity
    } else {
        Verdict::NotIdentity(random_counterexample(p, n, trials.max(1) * 10 + 200, seed.wrapping_add(1)))
    }
}

/// `X = diag(x_1 (a_1 times), ..., x_p (a_p times))` with the coefficients
/// `alpha_j` of its characteristic polynomial `sum (-1)^j alpha_j t^(n-j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagonalModel {
    pub multiplicities: Vec<usize>,
    pub n: usize,
    pub matrix: PolyMatrix,
    /// `alphas[j]` for `j = 0..=n`, with `alphas[0] = 1`.
    pub alphas: Vec<MPoly>,
}

pub fn eigen_var(i: usize) -> Var {
    Var::Idx('x', i as u32)
}

/// The symbol standing for `alpha_j`: `a, b, c, ...`.
pub fn alpha_symbol(j: usize) -> Var {
    Var::Sym((b'a' + (j as u8 - 1)) as char)
}

pub fn diagonal_model(mults: &[usize]) -> Result<DiagonalModel> {
    if mults.is_empty() || mults.contains(&0) {
        return Err(Error::OutOfRange("multiplicities must be a nonempty list of positive integers".into()));
    }
    let n: usize = mults.iter().sum();
    if n > 26 {
        return Err(Error::OutOfRange("at most 26 coefficients are supported".into()));
    }
    let diag: Vec<MPoly> =
        mults.iter().enumerate().flat_map(|(i, &a)| std::iter::repeat(MPoly::var(eigen_var(i + 1))).take(a)).collect();
    let matrix = PolyMatrix::from_fn(n, |r, c| if r == c { diag[r].clone() } else { MPoly::zero() });
    // prod (1 + x T): coefficient of T^j is alpha_j
    let mut alphas = vec![MPoly::one()];
    for x in &diag {
        let mut next = alphas.clone();
        next.push(MPoly::zero());
        for j in 0..alphas.len() {
            next[j + 1] = next[j + 1].add(&alphas[j].mul(x));
        }
        alphas = next;
    }
    Ok(DiagonalModel { multiplicities: mults.to_vec(), n, matrix, alphas })
}

impl DiagonalModel {
    /// Substitutes `a, b, c, ...` by the `alpha_j` of the model.
    pub fn specialize(&self, p: &MPoly) -> MPoly {
        p.substitute(|v| (1..=self.n).find(|&j| alpha_symbol(j) == v).map(|j| self.alphas[j].clone()))
    }

    /// `h(t) = sum (-1)^j alpha_j t^(n-j)` as a polynomial in `t`.
    pub fn charpoly(&self) -> MPoly {
        let t = MPoly::var(Var::Sym('t'));
        let mut h = MPoly::zero();
        for (j, a) in self.alphas.iter().enumerate() {
            let s = if j % 2 == 0 { Q::one() } else { -Q::one() };
            h = h.add(&a.mul(&t.pow((self.n - j) as u32)).scale(&s));
        }
        h
    }
}

/// The checks attached to multiplicities `(1, 2)`, with `u = x1`, `v = x2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SicaReport {
    /// `a^2 - 3b = (u-v)^2`, `ab - 9c = 2v(u-v)^2`, `9c + a^3 - 4ab = u(u-v)^2`.
    pub identities: [bool; 3],
    /// `3v^2 - 2av + b = 0`.
    pub v_relation: bool,
    /// `u^2 - 4au + a^2 - 4b = 0` as printed.
    pub u_relation_printed: bool,
    /// `3u^2 - 2au + 4b - a^2 = 0`, the relation `u` actually satisfies.
    pub u_relation_corrected: bool,
    /// `((a^2-3b)X - (9c+a^3-4ab))((a^2-3b)X - (ab-9c)/2)` vanishes at `X`.
    pub min_poly_degree_two: bool,
    /// The same with `X^2` in the first factor vanishes at `X`.
    pub min_poly_printed_square: bool,
    /// The degree-two product equals `(a^2-3b)^2 (X-u)(X-v)`.
    pub min_poly_is_scaled: bool,
}

fn sym(c: char) -> MPoly {
    MPoly::var(Var::Sym(c))
}

pub fn sica_checks() -> SicaReport {
    let model = diagonal_model(&[1, 2]).unwrap();
    let (a, b, c) = (sym('a'), sym('b'), sym('c'));
    let u = MPoly::var(eigen_var(1));
    let v = MPoly::var(eigen_var(2));
    let spec = |p: &MPoly| model.specialize(p);
    let d2 = u.sub(&v).pow(2);
    let k1 = a.pow(2).sub(&b.scale(&q(3)));
    let k2 = a.mul(&b).sub(&c.scale(&q(9)));
    let k3 = c.scale(&q(9)).add(&a.pow(3)).sub(&a.mul(&b).scale(&q(4)));
    let identities = [spec(&k1) == d2, spec(&k2) == v.mul(&d2).scale(&q(2)), spec(&k3) == u.mul(&d2)];
    let v_relation = spec(&v.pow(2).scale(&q(3)).sub(&a.mul(&v).scale(&q(2))).add(&b)).is_zero();
    let u_printed = u.pow(2).sub(&a.mul(&u).scale(&q(4))).add(&a.pow(2)).sub(&b.scale(&q(4)));
    let u_fixed = u.pow(2).scale(&q(3)).sub(&a.mul(&u).scale(&q(2))).add(&b.scale(&q(4))).sub(&a.pow(2));

    let x = &model.matrix;
    let n = model.n;
    let scalar = |p: &MPoly| PolyMatrix::scalar(n, spec(p));
    let second = x.scale(&spec(&k1)).sub(&scalar(&k2.scale(&qf(1, 2))));
    let first = x.scale(&spec(&k1)).sub(&scalar(&k3));
    let first_sq = x.mul(x).scale(&spec(&k1)).sub(&scalar(&k3));
    let product = first.mul(&second);
    let xu = x.sub(&PolyMatrix::scalar(n, u.clone()));
    let xv = x.sub(&PolyMatrix::scalar(n, v.clone()));
    // with a scalar symbol X in place of the matrix
    let xs = sym('X');
    let lhs = k1.mul(&xs).sub(&k3).mul(&k1.mul(&xs).sub(&k2.scale(&qf(1, 2))));
    let rhs = d2.pow(2).mul(&xs.sub(&u)).mul(&xs.sub(&v));
    SicaReport {
        identities,
        v_relation,
        u_relation_printed: spec(&u_printed).is_zero(),
        u_relation_corrected: spec(&u_fixed).is_zero(),
        min_poly_degree_two: product.is_zero() && xu.mul(&xv).is_zero(),
        min_poly_printed_square: first_sq.mul(&second).is_zero(),
        min_poly_is_scaled: spec(&lhs) == rhs,
    }
}

/// The discriminant of `h(t) = t^n - a t^(n-1) + b t^(n-2) - ...`, in
/// primitive integer form, after checking that it vanishes on the model.
pub fn discriminant_relation(mults: &[usize]) -> Result<MPoly> {
    let model = diagonal_model(mults)?;
    if mults.iter().all(|&a| a == 1) {
        return Err(Error::NoForcedRelation);
    }
    let n = model.n;
    // h with symbolic coefficients
    let mut coeffs = vec![MPoly::one()];
    for j in 1..=n {
        let s = if j % 2 == 0 { Q::one() } else { -Q::one() };
        coeffs.push(MPoly::var(alpha_symbol(j)).scale(&s));
    }
    let deriv: Vec<MPoly> = (0..n).map(|j| coeffs[j].scale(&q((n - j) as i64))).collect();
    let res = sylvester_resultant(&coeffs, &deriv)?;
    let sign = if (n * (n - 1) / 2) % 2 == 0 { Q::one() } else { -Q::one() };
    let disc = res.scale(&sign).primitive();
    debug_assert!(model.specialize(&disc).is_zero());
    Ok(disc)
}

/// Resultant of two polynomials given by coefficient lists, highest degree
/// first.
pub fn sylvester_resultant(f: &[MPoly], g: &[MPoly]) -> Result<MPoly> {
    let m = f.len() - 1;
    let k = g.len() - 1;
    let size = m + k;
    if size == 0 {
        return Ok(MPoly::one());
    }
    let mut rows = vec![vec![MPoly::zero(); size]; size];
    for i in 0..k {
        for (j, c) in f.iter().enumerate() {
            rows[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in g.iter().enumerate() {
            rows[k + i][i + j] = c.clone();
        }
    }
    det_poly(&rows)
}

/// `3a^2b - 162abc + 243c^2 - 12a^2b^2 + 18a^3c + 36b^3`, the quartic printed
/// as the relation for multiplicities `(1, 2)`.
pub fn printed_quartic() -> MPoly {
    let (a, b, c) = (sym('a'), sym('b'), sym('c'));
    a.pow(2)
        .mul(&b)
        .scale(&q(3))
        .sub(&a.mul(&b).mul(&c).scale(&q(162)))
        .add(&c.pow(2).scale(&q(243)))
        .sub(&a.pow(2).mul(&b.pow(2)).scale(&q(12)))
        .add(&a.pow(3).mul(&c).scale(&q(18)))
        .add(&b.pow(3).scale(&q(36)))
}

/// Degree and weight profile of a relation in `a, b, c` (weights 1, 2, 3).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationProfile {
    pub degrees: BTreeSet<u32>,
    pub weights: BTreeSet<u32>,
    /// Whether it vanishes on the `(1, 2)` model.
    pub vanishes: bool,
}

impl RelationProfile {
    /// Of the given total degree and weighted-homogeneous of the given weight.
    pub fn is_consistent_with(&self, degree: u32, weight: u32) -> bool {
        self.degrees.last() == Some(&degree) && self.weights == BTreeSet::from([weight])
    }
}

pub fn relation_profile(p: &MPoly) -> RelationProfile {
    let model = diagonal_model(&[1, 2]).unwrap();
    let mut degrees = BTreeSet::new();
    let mut weights = BTreeSet::new();
    for (m, _) in p.terms() {
        degrees.insert(m.degree());
        weights.insert((1..=3).map(|j| j as u32 * m.exponent(alpha_symbol(j))).sum());
    }
    RelationProfile { degrees, weights, vanishes: model.specialize(p).is_zero() }
}

/// Whether [`generic_algebra_rank`] saw the span stop growing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RankStatus {
    /// No word of this length added anything, so no longer word can either.
    Stabilized { degree: usize },
    /// The word-length cap was reached while the span was still growing.
    Inconclusive { cap: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub rank: usize,
    pub status: RankStatus,
    /// Words in the generic elements forming a basis, shortest first.
    pub basis_words: Vec<Word>,
}

impl RankReport {
    pub fn stabilized(&self) -> bool {
        matches!(self.status, RankStatus::Stabilized { .. })
    }
}

/// Row of coefficients: column `(coordinate, kernel monomial)` to a
/// polynomial in the complement coordinates.
type Row = HashMap<(usize, Monomial), MPoly>;

struct Columns {
    index: HashMap<(usize, Monomial), usize>,
}

impl Columns {
    fn id(&mut self, key: &(usize, Monomial)) -> usize {
        let next = self.index.len();
        *self.index.entry(key.clone()).or_insert(next)
    }
}

/// Sparse echelon basis over Q keyed by column id.
#[derive(Default)]
struct Echelon {
    rows: Vec<(usize, BTreeMap<usize, Q>)>,
}

impl Echelon {
    fn insert(&mut self, mut v: BTreeMap<usize, Q>) -> bool {
        for (p, row) in &self.rows {
            if let Some(f) = v.get(p).cloned() {
                for (c, x) in row {
                    let e = v.entry(*c).or_insert_with(Q::zero);
                    *e -= &f * x;
                    if e.is_zero() {
                        v.remove(c);
                    }
                }
            }
        }
        match v.iter().next().map(|(c, x)| (*c, x.clone())) {
            None => false,
            Some((p, lead)) => {
                let inv = lead.recip();
                let v = v.into_iter().map(|(c, x)| (c, x * &inv)).collect();
                self.rows.push((p, v));
                true
            }
        }
    }
}

fn expand(elem: &[MPoly]) -> Row {
    let mut row = Row::new();
    for (k, p) in elem.iter().enumerate() {
        for (m, c) in p.terms() {
            let (y, s) = m.split(|v| matches!(v, Var::Kernel { .. }));
            let e = row.entry((k, y)).or_insert_with(MPoly::zero);
            e.add_term(s, c.clone());
        }
    }
    row.retain(|_, p| !p.is_zero());
    row
}

fn poly_mul(a: &TraceAlgebra, x: &[MPoly], y: &[MPoly]) -> Vec<MPoly> {
    let d = a.dim();
    let mut out = vec![MPoly::zero(); d];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let s = a.structure(i, j);
            if s.is_empty() {
                continue;
            }
            let prod = xi.mul(yj);
            for (k, c) in s {
                out[*k].add_assign(&prod.scale(c));
            }
        }
    }
    out
}

/// Rank of the algebra generated by `ell` generic elements of `A` over the
/// field generated by their coordinates along a complement of the trace
/// kernel (the trace values of all words lie in that field).
///
/// Generic elements are `xi_i = sum s_ij c_j + sum y_ik k_k` with `c_j` the
/// complement basis and `k_k` a basis of the trace kernel. Words are grown by
/// left multiplication, extending only words found independent; a random
/// rational specialization of the `s_ij` certifies independence, and
/// dependence is certified either by the rank filling every column seen or by
/// exact fraction-free elimination.
pub fn generic_algebra_rank(a: &TraceAlgebra, ell: usize, degree_cap: Option<usize>, seed: u64) -> Result<RankReport> {
    let d = a.dim();
    if ell == 0 {
        return Err(Error::OutOfRange("at least one generic element is needed".into()));
    }
    let cap = degree_cap.unwrap_or(2 * d * d);
    if cap < d {
        return Err(Error::OutOfRange(format!("degree cap {cap} is below dim A = {d}")));
    }
    let kernel = trace_kernel(a);
    let complement = kernel.free_columns();
    let generic: Vec<Vec<MPoly>> = (1..=ell as u32)
        .map(|i| {
            let mut v = vec![MPoly::zero(); d];
            for (idx, &c) in complement.iter().enumerate() {
                v[c] = MPoly::var(Var::Coord { elem: i, index: idx as u32 + 1 });
            }
            for (idx, kv) in kernel.basis().iter().enumerate() {
                let y = MPoly::var(Var::Kernel { elem: i, index: idx as u32 + 1 });
                for (x, c) in v.iter_mut().zip(kv) {
                    if !c.is_zero() {
                        x.add_assign(&y.scale(c));
                    }
                }
            }
            v
        })
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut point: HashMap<Var, Q> = HashMap::new();
    for i in 1..=ell as u32 {
        for idx in 1..=complement.len() as u32 {
            point.insert(Var::Coord { elem: i, index: idx }, q(rng.gen_range(-100..=100)));
        }
    }

    let mut columns = Columns { index: HashMap::new() };
    let mut echelon = Echelon::default();
    let mut basis_rows: Vec<Row> = Vec::new();
    let mut basis_words: Vec<Word> = Vec::new();
    let mut pending: Vec<(Word, Vec<MPoly>, Row)> = Vec::new();

    let numeric = |row: &Row, columns: &mut Columns, point: &HashMap<Var, Q>| -> BTreeMap<usize, Q> {
        let mut out = BTreeMap::new();
        for (key, p) in row {
            let val = p.eval(|v| point[&v].clone());
            if !val.is_zero() {
                out.insert(columns.id(key), val);
            } else {
                columns.id(key);
            }
        }
        out
    };

    let unit: Vec<MPoly> = a.unit().iter().map(|c| MPoly::constant(c.clone())).collect();
    let unit_row = expand(&unit);
    let nv = numeric(&unit_row, &mut columns, &point);
    echelon.insert(nv);
    basis_rows.push(unit_row);
    basis_words.push(Word::empty());
    let mut frontier: Vec<(Word, Vec<MPoly>)> = vec![(Word::empty(), unit)];

    let mut degree = 0;
    loop {
        if frontier.is_empty() {
            return Ok(RankReport { rank: basis_words.len(), status: RankStatus::Stabilized { degree }, basis_words });
        }
        if degree == cap {
            return Ok(RankReport { rank: basis_words.len(), status: RankStatus::Inconclusive { cap }, basis_words });
        }
        degree += 1;
        let mut next = Vec::new();
        for (w, elem) in &frontier {
            for (i, g) in generic.iter().enumerate() {
                let word = Word::letter(i as u32 + 1).concat(w);
                let prod = poly_mul(a, g, elem);
                let row = expand(&prod);
                let nv = numeric(&row, &mut columns, &point);
                if echelon.insert(nv) {
                    basis_rows.push(row);
                    basis_words.push(word.clone());
                    next.push((word, prod));
                } else {
                    pending.push((word, prod, row));
                }
            }
        }
        if next.is_empty() && basis_rows.len() < columns.index.len() {
            // the numeric test may have missed an independent word
            for (word, prod, row) in std::mem::take(&mut pending) {
                if symbolic_independent(&basis_rows, &row, &columns)? {
                    basis_rows.push(row);
                    basis_words.push(word.clone());
                    next.push((word, prod));
                }
            }
            if !next.is_empty() {
                // a new point for the enlarged basis
                for v in point.values_mut() {
                    *v = q(rng.gen_range(-10_000..=10_000));
                }
                echelon = Echelon::default();
                for r in &basis_rows {
                    let nv = numeric(r, &mut columns, &point);
                    echelon.insert(nv);
                }
            }
        } else if basis_rows.len() == columns.index.len() {
            pending.clear();
        }
        frontier = next;
    }
}

fn symbolic_independent(basis: &[Row], row: &Row, columns: &Columns) -> Result<bool> {
    let ncols = columns.index.len();
    let dense = |r: &Row| {
        let mut v = vec![MPoly::zero(); ncols];
        for (k, p) in r {
            v[columns.index[k]] = p.clone();
        }
        v
    };
    let mut rows: Vec<Vec<MPoly>> = basis.iter().map(dense).collect();
    rows.push(dense(row));
    Ok(rank_poly(&rows)? > basis.len())
}
