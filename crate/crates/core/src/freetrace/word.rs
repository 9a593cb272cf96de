use std::cmp::Ordering;
use std::fmt;

/// A word in the free monoid on variables `x1, x2, ...`. The empty word is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(v: u32) -> Self {
        Word(vec![v])
    }

    pub fn power(v: u32, k: usize) -> Self {
        Word(vec![v; k])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl From<Vec<u32>> for Word {
    fn from(v: Vec<u32>) -> Self {
        Word(v)
    }
}

/// Length first, then lexicographic.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|v| format!("x{v}")).collect();
        f.write_str(&parts.join("*"))
    }
}

/// Start index of the lexicographically least rotation (Booth's algorithm).
pub fn least_rotation(s: &[u32]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let mut fail: Vec<isize> = vec![-1; 2 * n];
    let mut k: usize = 0;
    for j in 1..2 * n {
        let sj = s[j % n];
        let mut i = fail[j - k - 1];
        while i != -1 && sj != s[(k + i as usize + 1) % n] {
            if sj < s[(k + i as usize + 1) % n] {
                k = j - i as usize - 1;
            }
            i = fail[i as usize];
        }
        if i == -1 && sj != s[(k + (i + 1) as usize) % n] {
            if sj < s[(k + (i + 1) as usize) % n] {
                k = j;
            }
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    k % n
}

/// A word up to rotation, stored as its least rotation. Empty means `tr(1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord(Word);

impl CyclicWord {
    pub fn new(w: &Word) -> Self {
        let k = least_rotation(&w.0);
        let mut v = Vec::with_capacity(w.len());
        v.extend_from_slice(&w.0[k..]);
        v.extend_from_slice(&w.0[..k]);
        CyclicWord(Word(v))
    }

    pub fn unit() -> Self {
        CyclicWord(Word::empty())
    }

    pub fn representative(&self) -> &Word {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }
}

/// Canonical rotation of `w`.
pub fn normalize(w: &Word) -> CyclicWord {
    CyclicWord::new(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_least(s: &[u32]) -> Vec<u32> {
        (0..s.len().max(1))
            .map(|k| {
                let mut v = s[k.min(s.len())..].to_vec();
                v.extend_from_slice(&s[..k.min(s.len())]);
                v
            })
            .min()
            .unwrap_or_default()
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(CyclicWord::new(&Word(vec![2, 3, 1])).representative().0, vec![1, 2, 3]);
        assert_eq!(CyclicWord::new(&Word(vec![1, 2])), CyclicWord::new(&Word(vec![2, 1])));
        assert!(CyclicWord::new(&Word::empty()).is_unit());
        assert_eq!(CyclicWord::new(&Word(vec![2, 1, 2, 1, 1])).representative().0, vec![1, 1, 2, 1, 2]);
    }

    proptest! {
        #[test]
        fn booth_matches_brute_force(s in prop::collection::vec(1u32..4, 0..12)) {
            prop_assert_eq!(CyclicWord::new(&Word(s.clone())).representative().0.clone(), brute_least(&s));
        }

        #[test]
        fn rotations_share_normal_form(s in prop::collection::vec(1u32..4, 1..10), k in 0usize..10) {
            let k = k % s.len();
            let mut r = s[k..].to_vec();
            r.extend_from_slice(&s[..k]);
            prop_assert_eq!(CyclicWord::new(&Word(s)), CyclicWord::new(&Word(r)));
        }
    }
}
