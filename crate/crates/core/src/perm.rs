//! Permutations of `{1, ..., n}` in one-line notation.
//!
//! Composition is `(u * v)(i) = u(v(i))`. With this convention right
//! multiplication by the transposition `t_{kl}` swaps the entries in
//! positions `k` and `l` of the one-line notation.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation in 1-based one-line notation: `images[i - 1] = w(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn from_one_line(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::PreconditionViolated(
                "empty one-line notation".into(),
            ));
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::NotABijection { n, images });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "S_0 is not supported");
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// The transposition `t_{ij}` exchanging `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if !(1 <= i && i < j && j <= n) {
            return Err(Error::IndexOutOfRange(format!(
                "transposition ({i},{j}) in S_{n}"
            )));
        }
        let mut w = Self::identity(n);
        w.images.swap(i - 1, j - 1);
        Ok(w)
    }

    /// The simple reflection `s_r = t_{r,r+1}`.
    pub fn simple_reflection(n: usize, r: usize) -> Result<Self> {
        if !(1 <= r && r < n) {
            return Err(Error::IndexOutOfRange(format!("s_{r} in S_{n}")));
        }
        Self::transposition(n, r, r + 1)
    }

    /// The longest element `w_0`, with `w_0(i) = n + 1 - i`.
    pub fn longest(n: usize) -> Self {
        assert!(n >= 1, "S_0 is not supported");
        Permutation {
            images: (1..=n).rev().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `w(i)` for `1 <= i <= n`.
    #[inline]
    pub fn get(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        let mut inv = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// `ℓ(w t_{kl}) - ℓ(w)` for positions `k < l`, without recomputing the length.
    pub fn swap_length_delta(&self, k: usize, l: usize) -> isize {
        debug_assert!(1 <= k && k < l && l <= self.n());
        let (a, b) = (self.get(k), self.get(l));
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let between = ((k + 1)..l)
            .filter(|&m| {
                let v = self.get(m);
                lo < v && v < hi
            })
            .count() as isize;
        let delta = 1 + 2 * between;
        if a < b {
            delta
        } else {
            -delta
        }
    }

    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&v| self.get(v)).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// `w t_{kl}`: swap the entries at positions `k` and `l`.
    pub fn swap_positions(&self, k: usize, l: usize) -> Permutation {
        let mut images = self.images.clone();
        images.swap(k - 1, l - 1);
        Permutation { images }
    }

    /// The dual permutation `w^∨ = w_0 w`.
    pub fn dual(&self) -> Permutation {
        let n = self.n();
        Permutation {
            images: self.images.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    /// `r_w(p, q) = #{ i <= p : w(i) <= q }`.
    pub fn rank(&self, p: usize, q: usize) -> Result<usize> {
        let n = self.n();
        if p > n || q > n {
            return Err(Error::IndexOutOfRange(format!("rank ({p},{q}) in S_{n}")));
        }
        Ok(self.images[..p].iter().filter(|&&v| v <= q).count())
    }

    pub fn descents(&self) -> BTreeSet<usize> {
        (1..self.n())
            .filter(|&p| self.get(p) > self.get(p + 1))
            .collect()
    }

    /// Sort the entries in positions `from..=to` (1-based) increasingly.
    /// Empty ranges are no-ops.
    pub(crate) fn sort_range(&mut self, from: usize, to: usize) {
        if from <= to && from >= 1 {
            self.images[from - 1..to].sort_unstable();
        }
    }

    /// Embed into `S_m` for `m >= n` by fixing `n+1, ..., m`.
    pub fn embed(&self, m: usize) -> Permutation {
        assert!(m >= self.n());
        let mut images = self.images.clone();
        images.extend(self.n() + 1..=m);
        Permutation { images }
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation {
                images: cur.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1))
                .rev()
                .find(|&i| cur[i] < cur[i + 1])
            else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Comma-separated one-line notation, e.g. `6,2,3,1,5,4`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("permutation entry {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_one_line(images)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::from_one_line(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(w: Permutation) -> Self {
        w.images
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::from_one_line(v.to_vec()).unwrap()
    }

    // brute-force inversion count over all ordered pairs
    fn inversions_oracle(w: &Permutation) -> usize {
        let v = w.one_line();
        let mut count = 0;
        for i in 0..v.len() {
            for j in 0..v.len() {
                if i < j && v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn construction() {
        assert!(p(&[1, 2, 3]).is_identity());
        assert_eq!(p(&[6, 2, 3, 1, 5, 4]).one_line(), &[6, 2, 3, 1, 5, 4]);
        assert!(matches!(
            Permutation::from_one_line(vec![1, 1, 2]),
            Err(Error::NotABijection { .. })
        ));
        assert!(Permutation::from_one_line(vec![0, 1]).is_err());
        assert!(Permutation::from_one_line(vec![1, 3]).is_err());
        assert!(Permutation::from_one_line(vec![]).is_err());
    }

    #[test]
    fn lengths() {
        assert_eq!(Permutation::identity(5).length(), 0);
        assert_eq!(p(&[4, 3, 2, 1]).length(), 6);
        let w = p(&[6, 2, 3, 1, 5, 4]);
        assert_eq!(inversions_oracle(&w), 8);
        assert_eq!(w.length(), 8);
    }

    #[test]
    fn composition() {
        let w = p(&[6, 2, 3, 1, 5, 4]);
        assert_eq!(w.compose(&Permutation::identity(6)).unwrap(), w);
        let t13 = Permutation::transposition(3, 1, 3).unwrap();
        assert_eq!(p(&[2, 1, 3]).compose(&t13).unwrap(), p(&[3, 1, 2]));
        assert!(w.compose(&w.inverse()).unwrap().is_identity());
        assert!(matches!(
            w.compose(&Permutation::identity(3)),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn constructors() {
        assert_eq!(Permutation::simple_reflection(3, 1).unwrap(), p(&[2, 1, 3]));
        assert_eq!(Permutation::identity(3).dual(), p(&[3, 2, 1]));
        assert_eq!(
            Permutation::transposition(4, 1, 3).unwrap(),
            p(&[3, 2, 1, 4])
        );
        assert!(Permutation::transposition(4, 3, 3).is_err());
        assert!(Permutation::transposition(4, 1, 5).is_err());
        assert!(Permutation::simple_reflection(3, 3).is_err());
        assert!(Permutation::simple_reflection(3, 0).is_err());
        for w in Permutation::all(4) {
            let via_compose = Permutation::longest(4).compose(&w).unwrap();
            assert_eq!(w.dual(), via_compose);
        }
    }

    #[test]
    fn rank_function() {
        let id = Permutation::identity(4);
        for a in 0..=4 {
            for b in 0..=4 {
                assert_eq!(id.rank(a, b).unwrap(), a.min(b));
            }
        }
        let w = p(&[6, 2, 3, 1, 5, 4]);
        assert_eq!(w.rank(3, 3).unwrap(), 2);
        assert_eq!(w.rank(6, 6).unwrap(), 6);
        assert_eq!(w.rank(0, 6).unwrap(), 0);
        assert!(w.rank(7, 1).is_err());
    }

    #[test]
    fn descent_sets() {
        assert!(Permutation::identity(4).descents().is_empty());
        assert_eq!(
            Permutation::longest(4).descents(),
            [1, 2, 3].into_iter().collect()
        );
        assert_eq!(
            p(&[6, 2, 3, 1, 5, 4]).descents(),
            [1, 3, 5].into_iter().collect()
        );
    }

    #[test]
    fn enumeration() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|x| x[0] < x[1]));
        assert_eq!(Permutation::all(1).len(), 1);
    }

    #[test]
    fn s4_invariants() {
        let all = Permutation::all(4);
        for w in &all {
            assert_eq!(w.length() + w.dual().length(), 6);
            for i in 1..4 {
                for j in i + 1..=4 {
                    let t = Permutation::transposition(4, i, j).unwrap();
                    let wt = w.compose(&t).unwrap();
                    let diff = wt.length() as isize - w.length() as isize;
                    assert_eq!(diff.rem_euclid(2), 1);
                    assert_eq!(w.swap_length_delta(i, j), diff);
                    assert_eq!(w.swap_positions(i, j), wt);
                }
            }
            let by_length: BTreeSet<usize> = (1..4)
                .filter(|&r| {
                    let s = Permutation::simple_reflection(4, r).unwrap();
                    w.compose(&s).unwrap().length() < w.length()
                })
                .collect();
            assert_eq!(w.descents(), by_length);
        }
        // the rank function determines the permutation
        let table = |w: &Permutation| {
            let mut t = Vec::new();
            for a in 0..=4 {
                for b in 0..=4 {
                    t.push(w.rank(a, b).unwrap());
                }
            }
            t
        };
        for u in &all {
            for v in &all {
                if table(u) == table(v) {
                    assert_eq!(u, v);
                }
            }
        }
    }

    #[test]
    fn text_forms() {
        let w: Permutation = "6,2,3,1,5,4".parse().unwrap();
        assert_eq!(w.to_string(), "6,2,3,1,5,4");
        assert_eq!(serde_json::to_string(&w).unwrap(), "[6,2,3,1,5,4]");
        let back: Permutation = serde_json::from_str("[6,2,3,1,5,4]").unwrap();
        assert_eq!(back, w);
        assert!(serde_json::from_str::<Permutation>("[1,1]").is_err());
        assert!("1,x".parse::<Permutation>().is_err());
    }
}
