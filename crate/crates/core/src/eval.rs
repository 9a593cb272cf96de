//! Evaluation of trace polynomials in concrete algebras with trace.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::freetrace::{TracePoly, Word};
use crate::matrix::Ring;

/// An associative algebra with a trace valued in its scalars.
pub trait TraceTarget {
    type Elem: Clone;
    type Scalar: Ring;

    fn one(&self) -> Self::Elem;
    fn zero(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, c: &Self::Scalar, a: &Self::Elem) -> Self::Elem;
    fn trace(&self, a: &Self::Elem) -> Self::Scalar;
    /// Value assigned to the formal symbol `tr(1)`.
    fn trace_of_one(&self) -> Self::Scalar;
}

/// Evaluates `p` with variable `v` sent to `assign(v)`.
pub fn evaluate<T, F>(target: &T, p: &TracePoly, assign: F) -> Result<T::Elem>
where
    T: TraceTarget,
    F: Fn(u32) -> Option<T::Elem>,
{
    let mut images = HashMap::new();
    for v in p.variables() {
        images.insert(v, assign(v).ok_or(Error::UnassignedVariable(v))?);
    }
    let mut words: HashMap<Vec<u32>, T::Elem> = HashMap::new();
    let mut traces: HashMap<Vec<u32>, T::Scalar> = HashMap::new();
    let mut total = target.zero();
    for (m, c) in p.terms() {
        let mut coeff = T::Scalar::from_q(c);
        for t in &m.traces {
            let tv = if t.is_unit() {
                target.trace_of_one()
            } else {
                let key = t.representative().letters().to_vec();
                if let Some(v) = traces.get(&key) {
                    v.clone()
                } else {
                    let e = word_value(target, t.representative(), &images, &mut words);
                    let v = target.trace(&e);
                    traces.insert(key, v.clone());
                    v
                }
            };
            coeff = coeff.mul(&tv);
            if coeff.is_zero() {
                break;
            }
        }
        if coeff.is_zero() {
            continue;
        }
        let w = word_value(target, &m.word, &images, &mut words);
        total = target.add(&total, &target.scale(&coeff, &w));
    }
    Ok(total)
}

/// Evaluates a pure trace polynomial given only the trace of each word.
pub fn evaluate_pure<S, F>(p: &TracePoly, trace_of_one: &S, trace_of_word: F) -> S
where
    S: Ring,
    F: Fn(&[u32]) -> S,
{
    let mut total = S::zero();
    for (m, c) in p.terms() {
        debug_assert!(m.word.is_empty(), "evaluate_pure needs a pure trace polynomial");
        let mut coeff = S::from_q(c);
        for t in &m.traces {
            let tv = if t.is_unit() { trace_of_one.clone() } else { trace_of_word(t.representative().letters()) };
            coeff = coeff.mul(&tv);
            if coeff.is_zero() {
                break;
            }
        }
        total = total.add(&coeff);
    }
    total
}

fn word_value<T: TraceTarget>(
    target: &T,
    w: &Word,
    images: &HashMap<u32, T::Elem>,
    cache: &mut HashMap<Vec<u32>, T::Elem>,
) -> T::Elem {
    let letters = w.letters();
    if letters.is_empty() {
        return target.one();
    }
    if let Some(e) = cache.get(letters) {
        return e.clone();
    }
    // longest cached prefix
    let mut k = letters.len() - 1;
    while k > 0 && !cache.contains_key(&letters[..k]) {
        k -= 1;
    }
    let mut acc = if k == 0 { images[&letters[0]].clone() } else { cache[&letters[..k]].clone() };
    let start = if k == 0 { 1 } else { k };
    for i in start..letters.len() {
        acc = target.mul(&acc, &images[&letters[i]]);
        cache.insert(letters[..=i].to_vec(), acc.clone());
    }
    cache.insert(letters.to_vec(), acc.clone());
    acc
}
