//! Exact linear algebra: row reduction over Q and fraction-free elimination
//! over rational polynomials.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::mpoly::MPoly;
use crate::rational::Q;

/// Brings `rows` to reduced row-echelon form in place, dropping zero rows.
/// Returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<Q>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of `{v : M v = 0}` for an `m x ncols` matrix given by rows.
pub fn null_space(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (row, &p) in m.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// A linear subspace of `Q^d`, stored as its canonical RREF basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient).map(|i| unit_vector(ambient, i)).collect();
        Subspace { ambient, basis, pivots: (0..ambient).collect() }
    }

    pub fn span(ambient: usize, vectors: &[Vec<Q>]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::Shape(format!("vector of length {} in Q^{ambient}", v.len())));
        }
        let mut basis = vectors.to_vec();
        let pivots = rref(&mut basis);
        Ok(Subspace { ambient, basis, pivots })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots; the corresponding unit vectors span a
    /// complement.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// `v` minus its component along the basis, eliminating pivot coordinates.
    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let f = r[p].clone();
                for (x, y) in r.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Adds `v`; returns whether the dimension grew. Keeps the basis in RREF.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        let r: Vec<Q> = r.iter().map(|x| x * &inv).collect();
        for row in self.basis.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&r) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        let at = self.pivots.iter().position(|&q| q > p).unwrap_or(self.pivots.len());
        self.basis.insert(at, r);
        self.pivots.insert(at, p);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in &other.basis {
            s.insert(v);
        }
        s
    }
}

pub fn unit_vector(d: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); d];
    v[i] = Q::one();
    v
}

/// Determinant by Bareiss fraction-free elimination.
pub fn det_poly(m: &[Vec<MPoly>]) -> Result<MPoly> {
    let n = m.len();
    if n == 0 {
        return Ok(MPoly::one());
    }
    let mut a = m.to_vec();
    let mut sign = false;
    let mut prev = MPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(MPoly::zero());
            };
            a.swap(k, p);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.div_exact(&prev)?;
            }
            a[i][k] = MPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if sign { d.neg() } else { d })
}

/// Rank over the fraction field of the polynomial ring, by fraction-free
/// elimination.
pub fn rank_poly(rows: &[Vec<MPoly>]) -> Result<usize> {
    let mut a = rows.to_vec();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = MPoly::one();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..a.len() {
            for j in c + 1..ncols {
                let num = a[i][j].mul(&a[r][c]).sub(&a[i][c].mul(&a[r][j]));
                a[i][j] = num.div_exact(&prev)?;
            }
            a[i][c] = MPoly::zero();
        }
        prev = a[r][c].clone();
        r += 1;
        if r == a.len() {
            break;
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::Var;
    use crate::rational::q;
    use proptest::prelude::*;

    fn qs(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn rref_and_null_space() {
        let m = vec![qs(&[1, 2, 3]), qs(&[2, 4, 6]), qs(&[1, 0, 1])];
        assert_eq!(rank(&m), 2);
        let ns = null_space(&m, 3);
        assert_eq!(ns.len(), 1);
        for row in &m {
            let dot: Q = row.iter().zip(&ns[0]).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn subspace_canonical() {
        let a = Subspace::span(3, &[qs(&[1, 1, 0]), qs(&[0, 1, 1])]).unwrap();
        let b = Subspace::span(3, &[qs(&[1, 2, 1]), qs(&[1, 0, -1])]).unwrap();
        assert_eq!(a, b);
        assert!(a.contains(&qs(&[2, 3, 1])));
        assert!(!a.contains(&qs(&[0, 0, 1])));
        assert_eq!(a.free_columns(), vec![2]);
        let mut c = Subspace::zero(3);
        assert!(c.insert(&qs(&[0, 1, 1])));
        assert!(c.insert(&qs(&[1, 1, 0])));
        assert!(!c.insert(&qs(&[1, 2, 1])));
        assert_eq!(c, a);
        assert!(Subspace::span(2, &[qs(&[1])]).is_err());
    }

    #[test]
    fn bareiss_determinant() {
        let x = MPoly::var(Var::Sym('x'));
        let y = MPoly::var(Var::Sym('y'));
        let m = vec![vec![x.clone(), y.clone()], vec![y.clone(), x.clone()]];
        assert_eq!(det_poly(&m).unwrap(), x.mul(&x).sub(&y.mul(&y)));
        let c = |n: i64| MPoly::integer(n);
        let m = vec![vec![c(0), c(1), c(2)], vec![c(3), c(4), c(5)], vec![c(6), c(7), c(9)]];
        assert_eq!(det_poly(&m).unwrap(), c(-3));
        let m = vec![vec![x.clone(), y.clone()], vec![x.mul(&y), y.mul(&y)], vec![c(1), c(0)]];
        assert_eq!(rank_poly(&m).unwrap(), 2);
        assert_eq!(rank_poly(&m[..2]).unwrap(), 1);
    }

    proptest! {
        #[test]
        fn insert_matches_span(vs in prop::collection::vec(prop::collection::vec(-3i64..4, 4), 0..6)) {
            let vecs: Vec<Vec<Q>> = vs.iter().map(|v| qs(v)).collect();
            let mut s = Subspace::zero(4);
            for v in &vecs {
                s.insert(v);
            }
            prop_assert_eq!(&s, &Subspace::span(4, &vecs).unwrap());
            prop_assert_eq!(s.dim(), rank(&vecs));
        }

        #[test]
        fn poly_rank_matches_q_rank(vs in prop::collection::vec(prop::collection::vec(-3i64..4, 3), 1..5)) {
            let vecs: Vec<Vec<Q>> = vs.iter().map(|v| qs(v)).collect();
            let polys: Vec<Vec<MPoly>> = vecs.iter().map(|v| v.iter().map(|x| MPoly::constant(x.clone())).collect()).collect();
            prop_assert_eq!(rank_poly(&polys).unwrap(), rank(&vecs));
        }
    }
}
