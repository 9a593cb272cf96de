use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::word::{CyclicWord, Word};
use crate::error::{Error, Result};
use crate::rational::{fmt_q, Q};

/// Word part times a sorted multiset of trace symbols. The coefficient is
/// kept by the owning [`TracePoly`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TraceMonomial {
    pub word: Word,
    pub traces: Vec<CyclicWord>,
}

impl TraceMonomial {
    pub fn new(word: Word, mut traces: Vec<CyclicWord>) -> Self {
        traces.sort();
        TraceMonomial { word, traces }
    }

    pub fn one() -> Self {
        TraceMonomial { word: Word::empty(), traces: Vec::new() }
    }

    pub fn is_pure_trace(&self) -> bool {
        self.word.is_empty()
    }

    /// Total degree, counting letters inside trace symbols.
    pub fn degree(&self) -> usize {
        self.word.len() + self.traces.iter().map(CyclicWord::len).sum::<usize>()
    }

    pub fn degree_in(&self, v: u32) -> usize {
        let count = |w: &Word| w.letters().iter().filter(|&&l| l == v).count();
        count(&self.word) + self.traces.iter().map(|c| count(c.representative())).sum::<usize>()
    }

    pub fn mul(&self, other: &TraceMonomial) -> TraceMonomial {
        let mut traces = Vec::with_capacity(self.traces.len() + other.traces.len());
        traces.extend_from_slice(&self.traces);
        traces.extend_from_slice(&other.traces);
        traces.sort();
        TraceMonomial { word: self.word.concat(&other.word), traces }
    }

    fn variables(&self, out: &mut BTreeSet<u32>) {
        out.extend(self.word.letters());
        for c in &self.traces {
            out.extend(c.representative().letters());
        }
    }
}

/// Longer words first; then lexicographic word; then the trace multiset.
impl Ord for TraceMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .word
            .len()
            .cmp(&self.word.len())
            .then_with(|| self.word.letters().cmp(other.word.letters()))
            .then_with(|| self.traces.cmp(&other.traces))
    }
}

impl PartialOrd for TraceMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Exact rational linear combination of trace monomials in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TracePoly {
    terms: BTreeMap<TraceMonomial, Q>,
}

impl TracePoly {
    pub fn zero() -> Self {
        TracePoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial(c, TraceMonomial::one())
    }

    pub fn monomial(c: Q, m: TraceMonomial) -> Self {
        let mut p = TracePoly::zero();
        p.add_term(m, c);
        p
    }

    /// The variable `x_v`.
    pub fn var(v: u32) -> Self {
        Self::word(Word::letter(v))
    }

    pub fn word(w: Word) -> Self {
        Self::monomial(Q::one(), TraceMonomial::new(w, Vec::new()))
    }

    /// The symbol `tr(w)`.
    pub fn trace_of_word(w: &Word) -> Self {
        Self::monomial(Q::one(), TraceMonomial::new(Word::empty(), vec![CyclicWord::new(w)]))
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

    pub fn terms(&self) -> impl Iterator<Item = (&TraceMonomial, &Q)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &TraceMonomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, m: TraceMonomial, c: Q) {
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

    pub fn add(&self, other: &TracePoly) -> TracePoly {
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &TracePoly) -> TracePoly {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn neg(&self) -> TracePoly {
        self.scale(&-Q::one())
    }

    pub fn scale(&self, c: &Q) -> TracePoly {
        if c.is_zero() {
            return TracePoly::zero();
        }
        TracePoly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    /// Bilinear product: words concatenate, trace symbols merge.
    pub fn mul(&self, other: &TracePoly) -> TracePoly {
        let mut r = TracePoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                r.add_term(m1.mul(m2), c1 * c2);
            }
        }
        r
    }

    pub fn pow(&self, k: usize) -> TracePoly {
        let mut r = TracePoly::one();
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    /// The formal trace: `c w prod tr(m_i)` goes to `c prod tr(m_i) tr(w)`.
    pub fn formal_trace(&self) -> TracePoly {
        let mut r = TracePoly::zero();
        for (m, c) in &self.terms {
            let mut traces = m.traces.clone();
            traces.push(CyclicWord::new(&m.word));
            r.add_term(TraceMonomial::new(Word::empty(), traces), c.clone());
        }
        r
    }

    pub fn is_pure_trace(&self) -> bool {
        self.terms.keys().all(TraceMonomial::is_pure_trace)
    }

    pub fn variables(&self) -> BTreeSet<u32> {
        let mut s = BTreeSet::new();
        for m in self.terms.keys() {
            m.variables(&mut s);
        }
        s
    }

    /// Replaces each variable by a trace polynomial, extending to the unique
    /// trace-compatible endomorphism.
    pub fn substitute<F>(&self, map: F) -> Result<TracePoly>
    where
        F: Fn(u32) -> Option<TracePoly>,
    {
        let mut images: BTreeMap<u32, TracePoly> = BTreeMap::new();
        for v in self.variables() {
            images.insert(v, map(v).ok_or(Error::UnassignedVariable(v))?);
        }
        let image_of_word =
            |w: &Word| -> TracePoly { w.letters().iter().fold(TracePoly::one(), |acc, l| acc.mul(&images[l])) };
        let mut r = TracePoly::zero();
        for (m, c) in &self.terms {
            let mut term = TracePoly::constant(c.clone());
            for t in &m.traces {
                let img = if t.is_unit() {
                    TracePoly::one().formal_trace()
                } else {
                    image_of_word(t.representative()).formal_trace()
                };
                term = term.mul(&img);
                if term.is_zero() {
                    break;
                }
            }
            if !term.is_zero() {
                term = term.mul(&image_of_word(&m.word));
            }
            r = r.add(&term);
        }
        Ok(r)
    }

    /// Keeps only the terms satisfying `keep`.
    pub fn filter<F: Fn(&TraceMonomial) -> bool>(&self, keep: F) -> TracePoly {
        TracePoly { terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect() }
    }

    /// Degree when every term has the same degree; `Err` names two differing degrees.
    pub fn homogeneous_degree(&self) -> Result<usize> {
        let mut degs = self.terms.keys().map(TraceMonomial::degree);
        let first = degs.next().unwrap_or(0);
        for d in degs {
            if d != first {
                return Err(Error::NotHomogeneous(first.min(d), first.max(d)));
            }
        }
        Ok(first)
    }

    pub fn render(&self, style: VarStyle) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let body = render_monomial(m, style);
            if body.is_empty() {
                out.push_str(&fmt_q(&a));
            } else if a.is_one() {
                out.push_str(&body);
            } else {
                out.push_str(&fmt_q(&a));
                out.push('*');
                out.push_str(&body);
            }
        }
        out
    }
}

impl From<Word> for TracePoly {
    fn from(w: Word) -> Self {
        TracePoly::word(w)
    }
}

/// How variables are printed: `x1, x2, ...` or a bare `x` for the
/// one-variable polynomials in `x1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum VarStyle {
    #[default]
    Indexed,
    Single,
}

fn var_name(v: u32, style: VarStyle) -> String {
    match style {
        VarStyle::Single if v == 1 => "x".to_string(),
        _ => format!("x{v}"),
    }
}

fn render_letters(w: &[u32], style: VarStyle) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let mut j = i;
        while j < w.len() && w[j] == w[i] {
            j += 1;
        }
        let name = var_name(w[i], style);
        if j - i == 1 {
            parts.push(name);
        } else {
            parts.push(format!("{name}^{}", j - i));
        }
        i = j;
    }
    parts.join("*")
}

fn render_monomial(m: &TraceMonomial, style: VarStyle) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < m.traces.len() {
        let mut j = i;
        while j < m.traces.len() && m.traces[j] == m.traces[i] {
            j += 1;
        }
        let inner = if m.traces[i].is_unit() {
            "1".to_string()
        } else {
            render_letters(m.traces[i].representative().letters(), style)
        };
        if j - i == 1 {
            parts.push(format!("tr({inner})"));
        } else {
            parts.push(format!("tr({inner})^{}", j - i));
        }
        i = j;
    }
    if !m.word.is_empty() {
        parts.push(render_letters(m.word.letters(), style));
    }
    parts.join("*")
}

impl fmt::Display for TracePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(VarStyle::Indexed))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freetrace::parse;
    use crate::rational::{q, qf};
    use proptest::prelude::*;

    fn x(v: u32) -> TracePoly {
        TracePoly::var(v)
    }

    fn tr(p: &TracePoly) -> TracePoly {
        p.formal_trace()
    }

    #[test]
    fn trace_factor_commutes_into_multiset() {
        let p = tr(&x(1)).mul(&x(1)).mul(&x(1));
        let (m, c) = p.terms().next().unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(*c, q(1));
        assert_eq!(m.word.letters(), &[1, 1]);
        assert_eq!(m.traces, vec![CyclicWord::new(&Word(vec![1]))]);
    }

    #[test]
    fn unit_and_noncommutativity() {
        let p = parse("x1*x2 - 3*tr(x1*x2)").unwrap();
        assert_eq!(TracePoly::one().mul(&p), p);
        let s = x(1).add(&x(2));
        assert_eq!(s.mul(&s).len(), 4);
    }

    #[test]
    fn formal_trace_examples() {
        assert_eq!(tr(&tr(&x(1)).mul(&x(2))), tr(&x(1)).mul(&tr(&x(2))));
        assert!(tr(&x(1).mul(&x(2)).sub(&x(2).mul(&x(1)))).is_zero());
        let t1 = tr(&TracePoly::one());
        assert_eq!(t1.to_string(), "tr(1)");
        assert!(t1.is_pure_trace());
    }

    #[test]
    fn substitute_examples() {
        let p = tr(&x(1));
        let r = p.substitute(|_| Some(x(1).mul(&x(1)))).unwrap();
        assert_eq!(r, TracePoly::trace_of_word(&Word(vec![1, 1])));

        let p = x(1).add(&tr(&x(1)));
        assert!(p.substitute(|_| Some(TracePoly::zero())).unwrap().is_zero());

        let err = x(1).mul(&x(3)).substitute(|v| (v == 1).then(|| x(2))).unwrap_err();
        assert_eq!(err, Error::UnassignedVariable(3));
    }

    #[test]
    fn rendering() {
        let p = parse("x^2 - tr(x)*x + 1/2*tr(x)^2 - 1/2*tr(x^2)").unwrap();
        assert_eq!(p.render(VarStyle::Single), "x^2 - tr(x)*x + 1/2*tr(x)^2 - 1/2*tr(x^2)");
        assert_eq!(p.to_string(), "x1^2 - tr(x1)*x1 + 1/2*tr(x1)^2 - 1/2*tr(x1^2)");
        assert_eq!(TracePoly::zero().to_string(), "0");
        assert_eq!(TracePoly::constant(qf(-2, 3)).to_string(), "-2/3");
    }

    fn small_poly() -> impl Strategy<Value = TracePoly> {
        let mono = (
            prop::collection::vec(1u32..3, 0..3),
            prop::collection::vec(prop::collection::vec(1u32..3, 0..3), 0..2),
            -3i64..4,
        );
        prop::collection::vec(mono, 0..4).prop_map(|ms| {
            let mut p = TracePoly::zero();
            for (w, ts, c) in ms {
                let traces = ts.iter().map(|t| CyclicWord::new(&Word(t.clone()))).collect();
                p.add_term(TraceMonomial::new(Word(w), traces), q(c));
            }
            p
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn trace_is_cyclic(u in prop::collection::vec(1u32..4, 0..5), v in prop::collection::vec(1u32..4, 0..5)) {
            let uv = TracePoly::word(Word(u.clone()).concat(&Word(v.clone())));
            let vu = TracePoly::word(Word(v).concat(&Word(u)));
            prop_assert_eq!(uv.formal_trace(), vu.formal_trace());
        }

        #[test]
        fn trace_axiom_three(p in small_poly(), r in small_poly()) {
            prop_assert_eq!(p.formal_trace().mul(&r).formal_trace(), p.formal_trace().mul(&r.formal_trace()));
        }

        #[test]
        fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
        }

        #[test]
        fn substitution_is_homomorphism(a in small_poly(), b in small_poly(), i1 in small_poly(), i2 in small_poly()) {
            let map = |v: u32| Some(if v == 1 { i1.clone() } else { i2.clone() });
            prop_assert_eq!(a.substitute(|v| Some(x(v))).unwrap(), a.clone());
            prop_assert_eq!(
                a.mul(&b).substitute(map).unwrap(),
                a.substitute(map).unwrap().mul(&b.substitute(map).unwrap())
            );
            prop_assert_eq!(
                a.formal_trace().substitute(map).unwrap(),
                a.substitute(map).unwrap().formal_trace()
            );
        }

        #[test]
        fn render_parse_roundtrip(a in small_poly()) {
            prop_assert_eq!(parse(&a.to_string()).unwrap(), a);
        }
    }
}
