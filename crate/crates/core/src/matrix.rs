//! Square matrices over a commutative ring of coefficients.

use std::fmt;

use num_traits::{One, Zero};

use crate::mpoly::MPoly;
use crate::rational::{fmt_q, Q};

/// The coefficient rings used here: rationals and rational polynomials.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn from_q(c: &Q) -> Self;
}

impl Ring for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn from_q(c: &Q) -> Self {
        c.clone()
    }
}

impl Ring for MPoly {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn one() -> Self {
        MPoly::one()
    }
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        MPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        MPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        MPoly::mul(self, other)
    }
    fn from_q(c: &Q) -> Self {
        MPoly::constant(c.clone())
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct SquareMatrix<R> {
    n: usize,
    data: Vec<R>,
}

pub type PolyMatrix = SquareMatrix<MPoly>;
pub type QMatrix = SquareMatrix<Q>;

impl<R: Ring> SquareMatrix<R> {
    pub fn zero(n: usize) -> Self {
        SquareMatrix { n, data: vec![R::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, R::one())
    }

    pub fn scalar(n: usize, c: R) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn from_fn<F: FnMut(usize, usize) -> R>(n: usize, mut f: F) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        SquareMatrix { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        SquareMatrix { n, data: rows.into_iter().flatten().collect() }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[R] {
        &self.data
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        SquareMatrix { n: self.n, data: self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        SquareMatrix { n: self.n, data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &R) -> Self {
        SquareMatrix { n: self.n, data: self.data.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.data[k * n + j];
                    if b.is_zero() {
                        continue;
                    }
                    let cur = &out.data[i * n + j];
                    out.data[i * n + j] = cur.add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn trace(&self) -> R {
        (0..self.n).fold(R::zero(), |acc, i| acc.add(&self.data[i * self.n + i]))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(R::is_zero)
    }

    pub fn map<S: Ring, F: Fn(&R) -> S>(&self, f: F) -> SquareMatrix<S> {
        SquareMatrix { n: self.n, data: self.data.iter().map(f).collect() }
    }
}

impl fmt::Display for SquareMatrix<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.n)
            .map(|i| {
                let cells: Vec<String> = (0..self.n).map(|j| fmt_q(self.get(i, j))).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn product_and_trace() {
        let a = QMatrix::from_rows(vec![vec![q(1), q(2)], vec![q(3), q(4)]]);
        let b = QMatrix::from_rows(vec![vec![q(0), q(1)], vec![q(1), q(0)]]);
        assert_eq!(a.mul(&b), QMatrix::from_rows(vec![vec![q(2), q(1)], vec![q(4), q(3)]]));
        assert_eq!(a.trace(), q(5));
        assert_eq!(a.to_string(), "[[1, 2], [3, 4]]");
        assert!(a.sub(&a).is_zero());
    }
}
