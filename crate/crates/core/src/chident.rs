//! Cayley-Hamilton polynomials and the multilinear trace invariants.
//!
//! One-variable polynomials are written in `x1` (rendered as `x` with
//! [`VarStyle::Single`](crate::freetrace::VarStyle)).

use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::freetrace::{CyclicWord, TraceMonomial, TracePoly, Word};
use crate::mpoly::{MPoly, Monomial, Var};
use crate::rational::{q, Q};

/// A permutation of `{1..k}` as a list of disjoint cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermCycles {
    size: usize,
    cycles: Vec<Vec<usize>>,
}

impl PermCycles {
    /// From one-line notation, `image[i] = sigma(i + 1)`, values in `1..=k`.
    pub fn from_one_line(image: &[usize]) -> Self {
        let k = image.len();
        let mut seen = vec![false; k + 1];
        let mut cycles = Vec::new();
        for start in 1..=k {
            if seen[start] {
                continue;
            }
            let mut c = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                c.push(i);
                i = image[i - 1];
            }
            cycles.push(c);
        }
        PermCycles { size: k, cycles }
    }

    /// From explicit cycles; fixed points may be omitted.
    pub fn from_cycles(size: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut image: Vec<usize> = (1..=size).collect();
        let mut seen = vec![false; size + 1];
        for c in cycles {
            for (idx, &i) in c.iter().enumerate() {
                if i == 0 || i > size || seen[i] {
                    return Err(Error::OutOfRange(format!("bad cycle entry {i} for S_{size}")));
                }
                seen[i] = true;
                image[i - 1] = c[(idx + 1) % c.len()];
            }
        }
        Ok(Self::from_one_line(&image))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// `(-1)^(k - number of cycles)`.
    pub fn sign(&self) -> i64 {
        if (self.size - self.cycles.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for PermCycles {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            let s: Vec<String> = c.iter().map(|i| i.to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

/// All of `S_k` in lexicographic one-line order.
pub fn permutations(k: usize) -> Vec<PermCycles> {
    let mut p: Vec<usize> = (1..=k).collect();
    let mut out = Vec::new();
    loop {
        out.push(PermCycles::from_one_line(&p));
        // next permutation
        let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
            break;
        };
        let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    out
}

/// Polynomial in commuting symbols `p1, p2, ...` (power sums) with rational
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFnPoly(pub MPoly);

impl SymFnPoly {
    pub fn power_sum(j: u32) -> Self {
        SymFnPoly(MPoly::var(psi(j)))
    }

    /// Replaces each `p_j` by `tr(x^j)` in the one-variable free trace algebra.
    pub fn to_trace_poly(&self) -> TracePoly {
        let mut r = TracePoly::zero();
        for (m, c) in self.0.terms() {
            let mut traces = Vec::new();
            for &(v, e) in m.pairs() {
                let Var::Idx('p', j) = v else {
                    panic!("SymFnPoly contains a non power-sum symbol {v}");
                };
                for _ in 0..e {
                    traces.push(CyclicWord::new(&Word::power(1, j as usize)));
                }
            }
            r.add_term(TraceMonomial::new(Word::empty(), traces), c.clone());
        }
        r
    }
}

impl fmt::Display for SymFnPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn psi(j: u32) -> Var {
    Var::Idx('p', j)
}

/// `e_k` in terms of power sums, from
/// `(m+1) e_{m+1} = (-1)^m p_{m+1} + sum_{i=1..m} (-1)^(i-1) p_i e_{m+1-i}`.
pub fn elementary_from_powersums(k: usize) -> Result<SymFnPoly> {
    if k == 0 {
        return Err(Error::OutOfRange("k must be at least 1".into()));
    }
    let mut e: Vec<MPoly> = vec![MPoly::one()];
    for m in 0..k {
        let sign_m = if m % 2 == 0 { Q::one() } else { -Q::one() };
        let mut acc = MPoly::var(psi(m as u32 + 1)).scale(&sign_m);
        for i in 1..=m {
            let s = if (i - 1) % 2 == 0 { Q::one() } else { -Q::one() };
            acc = acc.add(&MPoly::var(psi(i as u32)).mul(&e[m + 1 - i]).scale(&s));
        }
        e.push(acc.scale(&Q::new((1).into(), (m as i64 + 1).into())));
    }
    Ok(SymFnPoly(e.pop().unwrap()))
}

/// `sigma_i(x)`: the elementary symmetric function with `p_j -> tr(x^j)`.
pub fn sigma(i: usize) -> Result<TracePoly> {
    Ok(elementary_from_powersums(i)?.to_trace_poly())
}

/// `CH_n(x) = x^n + sum_{i=1..n} (-1)^i sigma_i(x) x^(n-i)`.
pub fn ch_poly(n: usize) -> Result<TracePoly> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    let mut r = TracePoly::word(Word::power(1, n));
    for i in 1..=n {
        let s = if i % 2 == 0 { Q::one() } else { -Q::one() };
        r = r.add(&sigma(i)?.mul(&TracePoly::word(Word::power(1, n - i))).scale(&s));
    }
    Ok(r)
}

/// `T_sigma(x_1..x_k)`: one trace symbol per cycle.
pub fn t_sigma(sigma: &PermCycles) -> TracePoly {
    let traces = sigma.cycles().iter().map(|c| CyclicWord::new(&Word(c.iter().map(|&i| i as u32).collect()))).collect();
    TracePoly::monomial(Q::one(), TraceMonomial::new(Word::empty(), traces))
}

/// `T_k = sum over S_k of sign * T_sigma`.
pub fn t_multilinear(k: usize) -> Result<TracePoly> {
    if k == 0 {
        return Err(Error::OutOfRange("k must be at least 1".into()));
    }
    let mut r = TracePoly::zero();
    for s in permutations(k) {
        r = r.add(&t_sigma(&s).scale(&q(s.sign())));
    }
    Ok(r)
}

/// `psi_sigma` for `sigma` in `S_{k+1}`: the cycle through `k+1` is rotated
/// to end at `k+1`, which is dropped; its other letters form the word part.
pub fn psi_sigma(sigma: &PermCycles) -> TracePoly {
    let last = sigma.size();
    let mut traces = Vec::new();
    let mut word = Word::empty();
    for c in sigma.cycles() {
        if let Some(pos) = c.iter().position(|&i| i == last) {
            let rotated: Vec<u32> = (1..c.len()).map(|d| c[(pos + d) % c.len()] as u32).collect();
            word = Word(rotated);
        } else {
            traces.push(CyclicWord::new(&Word(c.iter().map(|&i| i as u32).collect())));
        }
    }
    TracePoly::monomial(Q::one(), TraceMonomial::new(word, traces))
}

/// The multilinear Cayley-Hamilton polynomial
/// `CH(x_1..x_n) = (-1)^n sum over S_{n+1} of sign * psi_sigma`.
pub fn ch_multilinear(n: usize) -> Result<TracePoly> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    let mut r = TracePoly::zero();
    for s in permutations(n + 1) {
        r = r.add(&psi_sigma(&s).scale(&q(s.sign())));
    }
    Ok(if n % 2 == 0 { r } else { r.neg() })
}

/// Full polarization of a homogeneous one-variable polynomial of degree `k`:
/// the multilinear part of `p(x_1 + ... + x_k)`. Restitution gives `k! p`.
pub fn polarize(p: &TracePoly) -> Result<TracePoly> {
    if let Some(&v) = p.variables().iter().find(|&&v| v != 1) {
        return Err(Error::NotOneVariable(v));
    }
    let k = p.homogeneous_degree()?;
    if k == 0 {
        return Ok(p.clone());
    }
    let mut sum = TracePoly::zero();
    for i in 1..=k as u32 {
        sum = sum.add(&TracePoly::var(i));
    }
    let full = p.substitute(|_| Some(sum.clone()))?;
    Ok(full.filter(|m| (1..=k as u32).all(|i| m.degree_in(i) == 1)))
}

/// Sets `x_1 = ... = x_k = x`.
pub fn restitute(p: &TracePoly) -> TracePoly {
    p.substitute(|_| Some(TracePoly::var(1))).expect("every variable is mapped")
}

pub fn factorial(n: usize) -> Q {
    (1..=n as i64).fold(Q::one(), |acc, i| acc * q(i))
}

/// Power sum `p_k` in terms of `e_1..e_k` by Newton's recursion
/// `p_k = sum_{i=1..k-1} (-1)^(i-1) e_i p_{k-i} + (-1)^(k-1) k e_k`.
pub fn powersum_from_elementary(k: usize) -> MPoly {
    let e = |i: usize| MPoly::var(Var::Idx('e', i as u32));
    let mut p: Vec<MPoly> = vec![MPoly::zero()];
    for m in 1..=k {
        let mut acc = e(m).scale(&q(if (m - 1) % 2 == 0 { m as i64 } else { -(m as i64) }));
        for i in 1..m {
            let s = if (i - 1) % 2 == 0 { Q::one() } else { -Q::one() };
            acc = acc.add(&e(i).mul(&p[m - i]).scale(&s));
        }
        p.push(acc);
    }
    p.pop().unwrap()
}

/// Substitutes `e_i -> elementary_from_powersums(i)` into a polynomial in the `e_i`.
pub fn elementary_to_powersums(p: &MPoly) -> MPoly {
    p.substitute(|v| match v {
        Var::Idx('e', i) => Some(elementary_from_powersums(i as usize).unwrap().0),
        _ => None,
    })
}

/// The monomial `p_1^a1 p_2^a2 ...` from exponent pairs.
pub fn psi_monomial(pairs: &[(u32, u32)]) -> MPoly {
    MPoly::term(Q::one(), Monomial::from_pairs(pairs.iter().map(|&(j, e)| (psi(j), e)).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freetrace::{parse, VarStyle};
    use crate::rational::qf;

    #[test]
    fn elementary_examples() {
        assert_eq!(elementary_from_powersums(1).unwrap().0, psi_monomial(&[(1, 1)]));
        let e2 = psi_monomial(&[(1, 2)]).sub(&psi_monomial(&[(2, 1)])).scale(&qf(1, 2));
        assert_eq!(elementary_from_powersums(2).unwrap().0, e2);
        let e3 = psi_monomial(&[(1, 3)])
            .sub(&psi_monomial(&[(1, 1), (2, 1)]).scale(&q(3)))
            .add(&psi_monomial(&[(3, 1)]).scale(&q(2)))
            .scale(&qf(1, 6));
        assert_eq!(elementary_from_powersums(3).unwrap().0, e3);
        assert!(elementary_from_powersums(0).is_err());
    }

    #[test]
    fn newton_round_trip() {
        for k in 1..=8 {
            let back = elementary_to_powersums(&powersum_from_elementary(k));
            assert_eq!(back, MPoly::var(psi(k as u32)), "k = {k}");
        }
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(1).unwrap(), parse("tr(x)").unwrap());
        assert_eq!(sigma(2).unwrap(), parse("1/2*(tr(x)^2 - tr(x^2))").unwrap());
        assert_eq!(sigma(3).unwrap(), parse("1/6*tr(x)^3 - 1/2*tr(x^2)*tr(x) + 1/3*tr(x^3)").unwrap());
    }

    #[test]
    fn ch_examples() {
        assert_eq!(ch_poly(1).unwrap().render(VarStyle::Single), "x - tr(x)");
        assert_eq!(ch_poly(2).unwrap().render(VarStyle::Single), "x^2 - tr(x)*x + 1/2*tr(x)^2 - 1/2*tr(x^2)");
        assert_eq!(ch_poly(3).unwrap().len(), 7);
    }

    #[test]
    fn permutation_enumeration() {
        let s3 = permutations(3);
        assert_eq!(s3.len(), 6);
        assert_eq!(s3[0].to_string(), "(1)(2)(3)");
        assert_eq!(s3[1].to_string(), "(1)(2 3)");
        assert_eq!(s3.iter().map(PermCycles::sign).sum::<i64>(), 0);
        assert_eq!(permutations(5).len(), 120);
    }

    #[test]
    fn t_sigma_examples() {
        let id = PermCycles::from_cycles(2, &[]).unwrap();
        assert_eq!(t_sigma(&id), parse("tr(x1)*tr(x2)").unwrap());
        let s = PermCycles::from_cycles(2, &[&[1, 2]]).unwrap();
        assert_eq!(t_sigma(&s), parse("tr(x1*x2)").unwrap());
        let s = PermCycles::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        assert_eq!(t_sigma(&s), parse("tr(x1*x2*x3)").unwrap());
        assert!(PermCycles::from_cycles(3, &[&[1, 4]]).is_err());
    }

    #[test]
    fn t_multilinear_examples() {
        assert_eq!(t_multilinear(1).unwrap(), parse("tr(x1)").unwrap());
        assert_eq!(t_multilinear(2).unwrap(), parse("tr(x1)*tr(x2) - tr(x1*x2)").unwrap());
        let r = restitute(&t_multilinear(2).unwrap());
        assert_eq!(r, sigma(2).unwrap().scale(&q(2)));
    }

    #[test]
    fn ch_multilinear_examples() {
        assert_eq!(ch_multilinear(1).unwrap(), ch_poly(1).unwrap());
        assert_eq!(
            ch_multilinear(2).unwrap(),
            parse("x1*x2 + x2*x1 - tr(x1)*x2 - tr(x2)*x1 - tr(x1*x2) + tr(x1)*tr(x2)").unwrap()
        );
    }

    #[test]
    fn polarize_examples() {
        assert_eq!(polarize(&parse("x^2").unwrap()).unwrap(), parse("x1*x2 + x2*x1").unwrap());
        assert_eq!(polarize(&ch_poly(2).unwrap()).unwrap(), ch_multilinear(2).unwrap());
        assert_eq!(polarize(&sigma(2).unwrap()).unwrap(), t_multilinear(2).unwrap());
        assert!(matches!(polarize(&parse("x^2 + x").unwrap()), Err(Error::NotHomogeneous(1, 2))));
        assert!(matches!(polarize(&parse("x1*x2").unwrap()), Err(Error::NotOneVariable(2))));
    }

    #[test]
    fn ch_multilinear_is_multilinear() {
        let alpha = qf(-3, 2);
        for n in 1..=3usize {
            let p = ch_multilinear(n).unwrap();
            for i in 1..=n as u32 {
                let scaled = p
                    .substitute(|v| Some(if v == i { TracePoly::var(v).scale(&alpha) } else { TracePoly::var(v) }))
                    .unwrap();
                assert_eq!(scaled, p.scale(&alpha));
            }
        }
    }

    #[test]
    fn t_multilinear_is_symmetric() {
        for k in 2..=4usize {
            let t = t_multilinear(k).unwrap();
            for s in permutations(k) {
                let mut image = vec![0u32; k + 1];
                for c in s.cycles() {
                    for (idx, &i) in c.iter().enumerate() {
                        image[i] = c[(idx + 1) % c.len()] as u32;
                    }
                }
                let permuted = t.substitute(|v| Some(TracePoly::var(image[v as usize]))).unwrap();
                assert_eq!(permuted, t);
            }
        }
    }
}
