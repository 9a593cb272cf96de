//! Sparse multivariate polynomials over the rationals.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{fmt_q, Q};

/// A commuting indeterminate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    /// Entry `(row, col)` of the generic matrix attached to variable `matrix`.
    Entry { matrix: u32, row: u32, col: u32 },
    /// Coordinate of generic element `elem` along a complement basis vector.
    Coord { elem: u32, index: u32 },
    /// Coordinate of generic element `elem` along a trace-kernel basis vector.
    Kernel { elem: u32, index: u32 },
    /// A single named symbol such as `u`, `a` or `t`.
    Sym(char),
    /// An indexed symbol such as `p3` or `e2`.
    Idx(char, u32),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Var::Entry { matrix, row, col } => write!(f, "z{matrix}_{row}_{col}"),
            Var::Coord { elem, index } => write!(f, "s{elem}_{index}"),
            Var::Kernel { elem, index } => write!(f, "y{elem}_{index}"),
            Var::Sym(c) => write!(f, "{c}"),
            Var::Idx(c, i) => write!(f, "{c}{i}"),
        }
    }
}

/// Sorted `(variable, exponent)` pairs with positive exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_pairs(mut pairs: Vec<(Var, u32)>) -> Self {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Var, u32)> = Vec::with_capacity(pairs.len());
        for (v, e) in pairs {
            match out.last_mut() {
                Some((w, f)) if *w == v => *f += e,
                _ => out.push((v, e)),
            }
        }
        Monomial(out)
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.iter().find(|(w, _)| *w == v).map(|&(_, e)| e).unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 == v {
                let f = other.0[j].1;
                if f > e {
                    return None;
                }
                if e > f {
                    out.push((v, e - f));
                }
                j += 1;
            } else if j < other.0.len() && other.0[j].0 < v {
                return None;
            } else {
                out.push((v, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    /// Splits into the part over variables satisfying `pred` and the rest.
    pub fn split<F: Fn(Var) -> bool>(&self, pred: F) -> (Monomial, Monomial) {
        let (a, b): (Vec<_>, Vec<_>) = self.0.iter().partition(|(v, _)| pred(*v));
        (Monomial(a), Monomial(b))
    }
}

/// Graded lexicographic order; smaller variables are more significant.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        for (x, y) in self.0.iter().zip(other.0.iter()) {
            if x.0 != y.0 {
                return if x.0 < y.0 { Ordering::Greater } else { Ordering::Less };
            }
            if x.1 != y.1 {
                return x.1.cmp(&y.1);
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.0.iter().map(|&(v, e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") }).collect();
        f.write_str(&parts.join("*"))
    }
}

/// A polynomial with rational coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Q>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(Q::from_integer(BigInt::from(n)))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Q::one(), Monomial::var(v))
    }

    pub fn term(c: Q, m: Monomial) -> Self {
        let mut p = MPoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    /// The constant value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut r = self.clone();
        r.add_assign(other);
        r
    }

    pub fn add_assign(&mut self, other: &MPoly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), -c.clone());
        }
        r
    }

    pub fn neg(&self) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }

    pub fn scale(&self, c: &Q) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        if self.is_zero() || other.is_zero() {
            return MPoly::zero();
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        let mut acc: HashMap<Monomial, Q> = HashMap::with_capacity(self.len() * other.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(Q::zero) += c1 * c2;
            }
        }
        MPoly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut r = MPoly::one();
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Q)> {
        self.terms.iter().next_back()
    }

    /// Evaluates with every variable replaced by the rational given by `val`.
    pub fn eval<F: Fn(Var) -> Q>(&self, val: F) -> Q {
        let mut cache: HashMap<Var, Q> = HashMap::new();
        let mut total = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.pairs() {
                let x = cache.entry(v).or_insert_with(|| val(v)).clone();
                for _ in 0..e {
                    t *= &x;
                }
            }
            total += t;
        }
        total
    }

    /// Replaces variables by polynomials; variables mapped to `None` stay.
    pub fn substitute<F: Fn(Var) -> Option<MPoly>>(&self, map: F) -> MPoly {
        let mut powers: HashMap<(Var, u32), MPoly> = HashMap::new();
        let mut r = MPoly::zero();
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(c.clone());
            for &(v, e) in m.pairs() {
                let factor = match map(v) {
                    Some(img) => powers.entry((v, e)).or_insert_with(|| img.pow(e)).clone(),
                    None => MPoly::term(Q::one(), Monomial(vec![(v, e)])),
                };
                t = t.mul(&factor);
            }
            r.add_assign(&t);
        }
        r
    }

    /// Coefficients of `v^0, v^1, ...` as polynomials in the other variables.
    pub fn coefficients_in(&self, v: Var) -> Vec<MPoly> {
        let mut out = vec![MPoly::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            let rest = Monomial(m.pairs().iter().copied().filter(|&(w, _)| w != v).collect());
            out[e as usize].add_term(rest, c.clone());
        }
        out
    }

    /// Exact quotient `self / d`, or an error if `d` does not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Result<MPoly> {
        if d.is_zero() {
            return Err(Error::InexactDivision);
        }
        if let Some(c) = d.as_constant() {
            return Ok(self.scale(&c.recip()));
        }
        let (lm, lc) = d.leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quo = MPoly::zero();
        while let Some((m, c)) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = m.div(&lm).ok_or(Error::InexactDivision)?;
            let qc = c / &lc;
            let t = MPoly::term(qc.clone(), qm.clone());
            rem = rem.sub(&t.mul(d));
            quo.add_term(qm, qc);
        }
        Ok(quo)
    }

    /// Scales to coprime integer coefficients, keeping the sign.
    pub fn primitive(&self) -> MPoly {
        if self.is_zero() {
            return MPoly::zero();
        }
        let mut lcm = BigInt::one();
        for c in self.terms.values() {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self.terms.values().map(|c| (c * Q::from_integer(lcm.clone())).to_integer()).collect();
        let mut g = BigInt::zero();
        for n in &ints {
            g = g.gcd(n);
        }
        let factor = Q::new(lcm, g);
        self.scale(&factor)
    }

    /// Maps each term's monomial through `f`, which must be injective on the
    /// monomials present.
    pub fn map_monomials<F: Fn(&Monomial) -> Monomial>(&self, f: F) -> MPoly {
        let mut r = MPoly::zero();
        for (m, c) in &self.terms {
            r.add_term(f(m), c.clone());
        }
        r
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                f.write_str(&fmt_q(&a))?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_q(&a))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};
    use proptest::prelude::*;

    fn v(c: char) -> MPoly {
        MPoly::var(Var::Sym(c))
    }

    #[test]
    fn arithmetic_and_display() {
        let p = v('a').add(&v('b')).pow(2);
        assert_eq!(p.to_string(), "a^2 + 2*a*b + b^2");
        assert_eq!(p.sub(&p), MPoly::zero());
        assert_eq!(MPoly::constant(qf(-1, 2)).to_string(), "-1/2");
    }

    #[test]
    fn exact_division() {
        let a = v('a');
        let b = v('b');
        let p = a.add(&b).mul(&a.sub(&b.scale(&q(3))));
        assert_eq!(p.div_exact(&a.add(&b)).unwrap(), a.sub(&b.scale(&q(3))));
        assert!(p.div_exact(&a.add(&MPoly::one())).is_err());
    }

    #[test]
    fn primitive_form() {
        let p = v('a').scale(&qf(3, 2)).sub(&v('b').scale(&qf(9, 4)));
        assert_eq!(p.primitive().to_string(), "2*a - 3*b");
    }

    #[test]
    fn substitution_and_coefficients() {
        let t = Var::Sym('t');
        let p = MPoly::var(t).pow(2).sub(&v('a').mul(&MPoly::var(t))).add(&v('b'));
        let c = p.coefficients_in(t);
        assert_eq!(c, vec![v('b'), v('a').neg(), MPoly::one()]);
        let s = p.substitute(|x| (x == t).then(|| v('a')));
        assert_eq!(s, v('b'));
        assert_eq!(p.eval(|x| if x == t { q(2) } else { q(1) }), q(3));
    }

    fn small() -> impl Strategy<Value = MPoly> {
        prop::collection::vec((0u32..3, 0u32..3, -4i64..5), 0..5).prop_map(|ts| {
            let mut p = MPoly::zero();
            for (i, j, c) in ts {
                p.add_term(Monomial::from_pairs(vec![(Var::Sym('a'), i), (Var::Sym('b'), j)]), q(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small(), b in small(), c in small()) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn division_inverts_multiplication(a in small(), b in small()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!(a.mul(&b).div_exact(&b).unwrap(), a);
        }
    }
}
