//! Finite groups given by multiplication tables.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::findim::from_json_str;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupJson {
    order: usize,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl FiniteGroup {
    /// Validates the table: Latin square, identity law and associativity.
    pub fn new(table: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let g = table.len();
        if g == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if identity >= g {
            return Err(Error::InvalidGroup(format!("identity index {identity} out of range")));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != g {
                return Err(Error::InvalidGroup(format!("row {a} has length {}", row.len())));
            }
            let mut seen = vec![false; g];
            for &x in row {
                if x >= g || seen[x] {
                    return Err(Error::InvalidGroup(format!("row {a} is not a permutation of 0..{g}")));
                }
                seen[x] = true;
            }
        }
        for b in 0..g {
            let mut seen = vec![false; g];
            for row in &table {
                if seen[row[b]] {
                    return Err(Error::InvalidGroup(format!("column {b} repeats an element")));
                }
                seen[row[b]] = true;
            }
        }
        for a in 0..g {
            if table[identity][a] != a || table[a][identity] != a {
                return Err(Error::InvalidGroup(format!("identity law fails at {a}")));
            }
        }
        for a in 0..g {
            for b in 0..g {
                let ab = table[a][b];
                for c in 0..g {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let inverses = (0..g).map(|a| (0..g).find(|&b| table[a][b] == identity).unwrap()).collect();
        Ok(FiniteGroup { table, identity, inverses })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order()).map(|a| self.element_order(a)).fold(1, num_integer::lcm)
    }

    pub fn product(&self, word: &[usize]) -> usize {
        word.iter().fold(self.identity, |acc, &x| self.mul(acc, x))
    }

    /// Conjugacy classes, each sorted, ordered by least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let g = self.order();
        let mut class_of = vec![usize::MAX; g];
        let mut classes = Vec::new();
        for a in 0..g {
            if class_of[a] != usize::MAX {
                continue;
            }
            let mut c: Vec<usize> = (0..g).map(|x| self.mul(self.mul(x, a), self.inverse(x))).collect();
            c.sort();
            c.dedup();
            for &x in &c {
                class_of[x] = classes.len();
            }
            classes.push(c);
        }
        classes
    }

    pub fn is_class_function(&self, values: &[crate::rational::Q]) -> bool {
        self.conjugacy_classes().iter().all(|c| c.iter().all(|&x| values[x] == values[c[0]]))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: GroupJson = from_json_str(s)?;
        if j.table.len() != j.order {
            return Err(Error::Json(format!("order is {} but the table has {} rows", j.order, j.table.len())));
        }
        FiniteGroup::new(j.table, j.identity)
    }

    pub fn to_json(&self) -> String {
        let j = GroupJson { order: self.order(), table: self.table.clone(), identity: self.identity };
        serde_json::to_string(&j).expect("serializable")
    }
}

pub fn cyclic(n: usize) -> FiniteGroup {
    FiniteGroup::new((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(), 0).unwrap()
}

/// `(a, b)` is stored at index `a * |H| + b`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let (m, n) = (g.order(), h.order());
    let table =
        (0..m * n).map(|x| (0..m * n).map(|y| g.mul(x / n, y / n) * n + h.mul(x % n, y % n)).collect()).collect();
    FiniteGroup::new(table, g.identity() * n + h.identity()).unwrap()
}

/// The dihedral group of order `2n`; `r^k s^e` is stored at `k + n e`.
pub fn dihedral(n: usize) -> FiniteGroup {
    let idx = |k: usize, e: usize| k % n + n * e;
    let table = (0..2 * n)
        .map(|x| {
            let (a, e) = (x % n, x / n);
            (0..2 * n)
                .map(|y| {
                    let (b, f) = (y % n, y / n);
                    let k = if e == 0 { a + b } else { a + n - b };
                    idx(k, (e + f) % 2)
                })
                .collect()
        })
        .collect();
    FiniteGroup::new(table, 0).unwrap()
}

/// The group generated by the given permutations of `0..k` (one-line
/// notation), with `(p q)(x) = p(q(x))`. Elements are indexed in
/// lexicographic order of their one-line notation.
pub fn permutation_group(generators: &[Vec<usize>]) -> Result<FiniteGroup> {
    let k = generators.first().map_or(0, Vec::len);
    for p in generators {
        let mut s = p.clone();
        s.sort();
        if p.len() != k || s != (0..k).collect::<Vec<_>>() {
            return Err(Error::InvalidGroup("generators must be permutations of the same size".into()));
        }
    }
    let compose = |p: &Vec<usize>, q: &Vec<usize>| -> Vec<usize> { q.iter().map(|&x| p[x]).collect() };
    let mut elems = vec![(0..k).collect::<Vec<usize>>()];
    let mut i = 0;
    while i < elems.len() {
        for gen in generators {
            let next = compose(gen, &elems[i]);
            if !elems.contains(&next) {
                elems.push(next);
            }
        }
        i += 1;
    }
    elems.sort();
    let index: HashMap<Vec<usize>, usize> = elems.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let table = elems.iter().map(|p| elems.iter().map(|q| index[&compose(p, q)]).collect()).collect();
    FiniteGroup::new(table, 0)
}

/// The symmetric group on `k` letters.
pub fn symmetric(k: usize) -> FiniteGroup {
    if k <= 1 {
        return cyclic(1);
    }
    let swap: Vec<usize> = (0..k).map(|i| if i < 2 { 1 - i } else { i }).collect();
    let cycle: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
    permutation_group(&[swap, cycle]).unwrap()
}

/// The quaternion group: `1, -1, i, -i, j, -j, k, -k` at indices 0..8.
pub fn quaternion() -> FiniteGroup {
    // units 1, i, j, k as 0..4; product of units as (sign, unit)
    let unit_mul = |a: usize, b: usize| -> (bool, usize) {
        match (a, b) {
            (0, x) | (x, 0) => (false, x),
            (x, y) if x == y => (true, 0),
            (1, 2) => (false, 3),
            (2, 1) => (true, 3),
            (2, 3) => (false, 1),
            (3, 2) => (true, 1),
            (3, 1) => (false, 2),
            (1, 3) => (true, 2),
            _ => unreachable!(),
        }
    };
    let table = (0..8)
        .map(|x| {
            (0..8)
                .map(|y| {
                    let (neg, u) = unit_mul(x / 2, y / 2);
                    let sign = (x % 2 == 1) ^ (y % 2 == 1) ^ neg;
                    2 * u + sign as usize
                })
                .collect()
        })
        .collect();
    FiniteGroup::new(table, 0).unwrap()
}

/// All groups of order at most 8 up to isomorphism, with names.
pub fn small_groups() -> Vec<(String, FiniteGroup)> {
    let c2 = cyclic(2);
    let mut out: Vec<(String, FiniteGroup)> = (1..=8).map(|n| (format!("C{n}"), cyclic(n))).collect();
    out.push(("C2xC2".into(), direct_product(&c2, &c2)));
    out.push(("S3".into(), symmetric(3)));
    out.push(("C4xC2".into(), direct_product(&cyclic(4), &c2)));
    out.push(("C2xC2xC2".into(), direct_product(&direct_product(&c2, &c2), &c2)));
    out.push(("D4".into(), dihedral(4)));
    out.push(("Q8".into(), quaternion()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructions() {
        assert_eq!(symmetric(3).order(), 6);
        assert_eq!(symmetric(4).order(), 24);
        assert_eq!(dihedral(4).order(), 8);
        assert_eq!(dihedral(3).conjugacy_classes().len(), 3);
        assert_eq!(symmetric(3).conjugacy_classes().len(), 3);
        assert_eq!(quaternion().conjugacy_classes().len(), 5);
        assert_eq!(dihedral(4).conjugacy_classes().len(), 5);
        assert_eq!(quaternion().exponent(), 4);
        assert_eq!(cyclic(6).exponent(), 6);
        let groups = small_groups();
        assert_eq!(groups.len(), 14);
        // Q8 has a single involution, D4 has five
        let involutions = |g: &FiniteGroup| (0..g.order()).filter(|&a| g.element_order(a) == 2).count();
        assert_eq!(involutions(&quaternion()), 1);
        assert_eq!(involutions(&dihedral(4)), 5);
    }

    #[test]
    fn validation() {
        assert!(FiniteGroup::new(vec![vec![0, 1], vec![1, 1]], 0).is_err());
        assert!(FiniteGroup::new(vec![vec![1, 0], vec![0, 1]], 0).is_err());
        // a Latin square with identity that is not associative (order 5 loop)
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::new(loop5, 0), Err(Error::InvalidGroup(m)) if m.contains("associative")));
    }

    #[test]
    fn json_round_trip() {
        let g = symmetric(3);
        assert_eq!(FiniteGroup::from_json(&g.to_json()).unwrap(), g);
        assert!(FiniteGroup::from_json("{\"order\": 2, \"table\": [[0, 1]], \"identity\": 0}").is_err());
    }
}
