//! Stratum types `(m; a)` of the quotient of `ell`-tuples of `n x n`
//! matrices by conjugation: dimensions, the closure order and its covering
//! relations.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::findim::WeightedType;

/// A multiset of `(block size m, weight a)` pairs, sorted in decreasing
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StratumType {
    pairs: Vec<(usize, usize)>,
}

impl StratumType {
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Result<Self> {
        if pairs.is_empty() || pairs.iter().any(|&(m, a)| m == 0 || a == 0) {
            return Err(Error::OutOfRange("a stratum type needs at least one pair of positive integers".into()));
        }
        pairs.sort_by(|x, y| y.cmp(x));
        Ok(StratumType { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn n(&self) -> usize {
        self.pairs.iter().map(|(m, a)| m * a).sum()
    }

    /// Number of blocks `k`.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn to_weighted(&self) -> WeightedType {
        let (m, a): (Vec<usize>, Vec<usize>) = self.pairs.iter().copied().unzip();
        WeightedType::new(&m, &a).expect("pairs are positive")
    }

    pub fn from_weighted(w: &WeightedType) -> Self {
        StratumType::new(w.blocks().to_vec()).expect("weighted types are nonempty")
    }
}

impl fmt::Display for StratumType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(m, a)| format!("{m}/{a}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// All types with the given `n`: by number of blocks, then decreasing.
pub fn enumerate_types(n: usize) -> Vec<StratumType> {
    let mut candidates: Vec<(usize, usize)> = (1..=n).flat_map(|m| (1..=n / m).map(move |a| (m, a))).collect();
    candidates.sort_by(|x, y| y.cmp(x));
    let mut out = Vec::new();
    fn rec(
        cands: &[(usize, usize)],
        start: usize,
        rest: usize,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<StratumType>,
    ) {
        if rest == 0 {
            out.push(StratumType { pairs: cur.clone() });
            return;
        }
        for i in start..cands.len() {
            let (m, a) = cands[i];
            if m * a <= rest {
                cur.push((m, a));
                rec(cands, i, rest - m * a, cur, out);
                cur.pop();
            }
        }
    }
    if n > 0 {
        rec(&candidates, 0, n, &mut Vec::new(), &mut out);
    }
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| y.pairs.cmp(&x.pairs)));
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StratumDims {
    /// `n^2 + (ell-1) sum m^2 - sum a^2 + k`.
    pub sheet: usize,
    /// `(ell-1) sum m^2 + k`.
    pub stratum: usize,
    /// `sum a^2`, the stabilizer dimension in `GL_n`.
    pub stabilizer: usize,
    /// `sum a^2 - 1`, after dividing by scalars.
    pub projective_stabilizer: usize,
}

pub fn stratum_dims(s: &StratumType, ell: usize) -> Result<StratumDims> {
    if ell <= 1 {
        return Err(Error::OutOfRange(format!("ell must be at least 2, got {ell}")));
    }
    let n = s.n();
    let k = s.len();
    let sm2: usize = s.pairs.iter().map(|(m, _)| m * m).sum();
    let sa2: usize = s.pairs.iter().map(|(_, a)| a * a).sum();
    Ok(StratumDims {
        sheet: n * n + (ell - 1) * sm2 + k - sa2,
        stratum: (ell - 1) * sm2 + k,
        stabilizer: sa2,
        projective_stabilizer: sa2 - 1,
    })
}

/// Whether `F(lower)` embeds in `F(upper)` compatibly with units and traces:
/// a nonnegative integer matrix `r` with `sum_j r_ij m'_j = m_i` for each
/// block `i` of `upper` and `a'_j = sum_i a_i r_ij` for each block `j` of
/// `lower`.
pub fn closure_leq(lower: &StratumType, upper: &StratumType) -> Result<bool> {
    if lower.n() != upper.n() {
        return Err(Error::DegreeMismatch(lower.n(), upper.n()));
    }
    let mut remaining: Vec<usize> = lower.pairs.iter().map(|&(_, a)| a).collect();
    Ok(assign_rows(&upper.pairs, &lower.pairs, 0, &mut remaining))
}

fn assign_rows(upper: &[(usize, usize)], lower: &[(usize, usize)], i: usize, remaining: &mut Vec<usize>) -> bool {
    if i == upper.len() {
        return remaining.iter().all(|&r| r == 0);
    }
    let (m, a) = upper[i];
    fill_row(upper, lower, i, 0, m, a, remaining)
}

/// Chooses `r_ij` for `j >= j0` with `sum r_ij m'_j = left`.
fn fill_row(
    upper: &[(usize, usize)],
    lower: &[(usize, usize)],
    i: usize,
    j0: usize,
    left: usize,
    a: usize,
    remaining: &mut Vec<usize>,
) -> bool {
    if left == 0 {
        return assign_rows(upper, lower, i + 1, remaining);
    }
    if j0 == lower.len() {
        return false;
    }
    let mj = lower[j0].0;
    let max_r = (left / mj).min(remaining[j0] / a);
    for r in (0..=max_r).rev() {
        remaining[j0] -= r * a;
        let ok = fill_row(upper, lower, i, j0 + 1, left - r * mj, a, remaining);
        remaining[j0] += r * a;
        if ok {
            return true;
        }
    }
    false
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Move {
    /// A block `m` splits as `p + q` with the same weight.
    Split { m: usize, p: usize, q: usize },
    /// Two blocks of the same size `m` merge, adding weights.
    Merge { m: usize },
}

/// The one-step degenerations: splits with codimension `(ell-1) 2pq - 1`
/// and merges with codimension `(ell-1) m^2 + 1`.
pub fn maximal_degenerations(s: &StratumType, ell: usize) -> Result<Vec<(StratumType, usize, Move)>> {
    let base = stratum_dims(s, ell)?.stratum;
    let mut out: Vec<(StratumType, usize, Move)> = Vec::new();
    let mut push = |t: StratumType, codim: usize, mv: Move| {
        debug_assert_eq!(base - stratum_dims(&t, ell).unwrap().stratum, codim);
        if !out.iter().any(|(u, _, _)| *u == t) {
            out.push((t, codim, mv));
        }
    };
    for (i, &(m, a)) in s.pairs.iter().enumerate() {
        for p in 1..=m / 2 {
            let q = m - p;
            let mut pairs = s.pairs.clone();
            pairs.remove(i);
            pairs.push((p, a));
            pairs.push((q, a));
            push(StratumType::new(pairs)?, (ell - 1) * 2 * p * q - 1, Move::Split { m, p, q });
        }
    }
    for i in 0..s.pairs.len() {
        for j in i + 1..s.pairs.len() {
            let ((m1, a1), (m2, a2)) = (s.pairs[i], s.pairs[j]);
            if m1 == m2 {
                let mut pairs = s.pairs.clone();
                pairs.remove(j);
                pairs.remove(i);
                pairs.push((m1, a1 + a2));
                push(StratumType::new(pairs)?, (ell - 1) * m1 * m1 + 1, Move::Merge { m: m1 });
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    /// Index of the larger stratum.
    pub upper: usize,
    /// Index of the stratum in its closure.
    pub lower: usize,
    pub codim: usize,
    /// The one-step move realizing the covering, if any.
    #[serde(rename = "move")]
    pub kind: Option<Move>,
}

impl Edge {
    pub fn flagged(&self) -> bool {
        self.codim == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrataPoset {
    pub n: usize,
    pub ell: usize,
    pub nodes: Vec<StratumType>,
    pub dims: Vec<StratumDims>,
    /// `leq[i][j]` iff node `i` lies in the closure of node `j`.
    pub leq: Vec<Vec<bool>>,
    /// Covering relations.
    pub edges: Vec<Edge>,
}

pub fn stratification_poset(n: usize, ell: usize) -> Result<StrataPoset> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be positive".into()));
    }
    let nodes = enumerate_types(n);
    let dims = nodes.iter().map(|s| stratum_dims(s, ell)).collect::<Result<Vec<_>>>()?;
    let c = nodes.len();
    let mut leq = vec![vec![false; c]; c];
    for i in 0..c {
        for j in 0..c {
            leq[i][j] = closure_leq(&nodes[i], &nodes[j])?;
        }
    }
    let mut edges = Vec::new();
    for u in 0..c {
        let moves = maximal_degenerations(&nodes[u], ell)?;
        for l in 0..c {
            if l == u || !leq[l][u] {
                continue;
            }
            let between = (0..c).any(|t| t != l && t != u && leq[l][t] && leq[t][u]);
            if !between {
                let kind = moves.iter().find(|(t, _, _)| *t == nodes[l]).map(|(_, _, mv)| *mv);
                edges.push(Edge { upper: u, lower: l, codim: dims[u].stratum - dims[l].stratum, kind });
            }
        }
    }
    Ok(StrataPoset { n, ell, nodes, dims, leq, edges })
}

/// Property checks on a poset; each failure is described in the error list.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PosetAudit {
    pub failures: Vec<String>,
}

impl PosetAudit {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl StrataPoset {
    pub fn index_of(&self, s: &StratumType) -> Option<usize> {
        self.nodes.iter().position(|t| t == s)
    }

    pub fn codim_one_edges(&self) -> Vec<&Edge> {
        self.edges.iter().filter(|e| e.flagged()).collect()
    }

    /// Partial order axioms, strict dimension decrease, the extreme types,
    /// agreement of coverings with one-step moves, and codimension one
    /// occurring exactly for `ell = 2` splits of a 2x2 block.
    pub fn audit(&self) -> PosetAudit {
        let mut f = Vec::new();
        let c = self.nodes.len();
        let name = |i: usize| self.nodes[i].to_string();
        for i in 0..c {
            if !self.leq[i][i] {
                f.push(format!("not reflexive at {}", name(i)));
            }
            for j in 0..c {
                if i != j && self.leq[i][j] && self.leq[j][i] {
                    f.push(format!("not antisymmetric: {} and {}", name(i), name(j)));
                }
                if i != j && self.leq[i][j] && self.dims[i].stratum >= self.dims[j].stratum {
                    f.push(format!("dimension does not drop from {} to {}", name(j), name(i)));
                }
                for k in 0..c {
                    if self.leq[i][j] && self.leq[j][k] && !self.leq[i][k] {
                        f.push(format!("not transitive: {} {} {}", name(i), name(j), name(k)));
                    }
                }
            }
        }
        let top = StratumType { pairs: vec![(self.n, 1)] };
        let bottom = StratumType { pairs: vec![(1, self.n)] };
        match self.index_of(&top) {
            Some(t) if (0..c).all(|i| self.leq[i][t]) => {
                let want = (self.ell - 1) * self.n * self.n + 1;
                if self.dims[t].stratum != want {
                    f.push(format!("open stratum has dimension {} instead of {want}", self.dims[t].stratum));
                }
            }
            _ => f.push("no unique maximal type".into()),
        }
        match self.index_of(&bottom) {
            Some(b) if (0..c).all(|i| self.leq[b][i]) => {
                if self.dims[b].stratum != self.ell {
                    f.push(format!("closed stratum has dimension {}", self.dims[b].stratum));
                }
            }
            _ => f.push("no unique minimal type".into()),
        }
        for u in 0..c {
            let moves = maximal_degenerations(&self.nodes[u], self.ell).expect("ell >= 2");
            for (t, _, _) in &moves {
                let l = self.index_of(t).expect("moves stay within n");
                if !self.edges.iter().any(|e| e.upper == u && e.lower == l) {
                    f.push(format!("move {} -> {} is not a covering", name(u), name(l)));
                }
            }
        }
        for e in &self.edges {
            if e.kind.is_none() {
                f.push(format!("covering {} -> {} is not a one-step move", name(e.upper), name(e.lower)));
            }
            let exception = self.ell == 2 && matches!(e.kind, Some(Move::Split { m: 2, p: 1, q: 1 }));
            if e.flagged() != exception {
                f.push(format!("covering {} -> {} has codimension {}", name(e.upper), name(e.lower), e.codim));
            }
        }
        PosetAudit { failures: f }
    }

    pub fn to_dot(&self) -> String {
        let mut s = format!("digraph strata {{\n  label=\"n={}, ell={}\";\n", self.n, self.ell);
        for (i, t) in self.nodes.iter().enumerate() {
            s.push_str(&format!("  s{i} [label=\"{t}\\ndim {}\"];\n", self.dims[i].stratum));
        }
        for e in &self.edges {
            let extra = if e.flagged() { ", color=red, style=bold" } else { "" };
            s.push_str(&format!("  s{} -> s{} [label=\"{}\"{extra}];\n", e.upper, e.lower, e.codim));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Node<'a> {
            id: usize,
            label: String,
            pairs: &'a [(usize, usize)],
            dims: StratumDims,
        }
        #[derive(Serialize)]
        struct EdgeOut<'a> {
            #[serde(flatten)]
            edge: &'a Edge,
            flagged: bool,
        }
        #[derive(Serialize)]
        struct Out<'a> {
            n: usize,
            ell: usize,
            nodes: Vec<Node<'a>>,
            edges: Vec<EdgeOut<'a>>,
        }
        let out = Out {
            n: self.n,
            ell: self.ell,
            nodes: self
                .nodes
                .iter()
                .enumerate()
                .map(|(i, t)| Node { id: i, label: t.to_string(), pairs: t.pairs(), dims: self.dims[i] })
                .collect(),
            edges: self.edges.iter().map(|e| EdgeOut { edge: e, flagged: e.flagged() }).collect(),
        };
        serde_json::to_string_pretty(&out).expect("serializable")
    }
}
