//! Dimension sequences of partial flag varieties and the block-sorting
//! constructions relating Schubert varieties of different flag types.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A weakly increasing sequence `0 <= a_1 <= ... <= a_k <= n`.
///
/// The sentinels `a_0 = 0` and `a_{k+1} = n` are implicit; see [`DimSequence::at`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DimSequence {
    n: usize,
    dims: Vec<usize>,
}

impl DimSequence {
    pub fn new(n: usize, dims: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::PreconditionViolated(
                "ambient dimension must be positive".into(),
            ));
        }
        if dims.iter().any(|&d| d > n) || dims.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::PreconditionViolated(format!(
                "{dims:?} is not weakly increasing in [0, {n}]"
            )));
        }
        Ok(DimSequence { n, dims })
    }

    /// The complete flag type `(1, 2, ..., n-1)`.
    pub fn complete(n: usize) -> Self {
        DimSequence {
            n,
            dims: (1..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `a_i` for `0 <= i <= k+1`, including the sentinels.
    pub fn at(&self, i: usize) -> usize {
        match i {
            0 => 0,
            i if i == self.dims.len() + 1 => self.n,
            i => self.dims[i - 1],
        }
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.dims.windows(2).all(|w| w[0] < w[1])
    }

    /// Componentwise `self <= other`, same length and ambient dimension.
    pub fn le(&self, other: &DimSequence) -> bool {
        self.n == other.n
            && self.len() == other.len()
            && self.dims.iter().zip(&other.dims).all(|(x, y)| x <= y)
    }

    /// Every strictly increasing sequence with entries in `[1, n-1]`,
    /// including the empty one, in lexicographic order by bitmask.
    pub fn all_strict(n: usize) -> Vec<DimSequence> {
        let m = n.saturating_sub(1);
        let mut out: Vec<DimSequence> = (0u32..(1 << m))
            .map(|mask| DimSequence {
                n,
                dims: (1..=m).filter(|&d| mask & (1 << (d - 1)) != 0).collect(),
            })
            .collect();
        out.sort();
        out
    }

    /// Every weakly increasing `b` with `0 <= b <= self` componentwise.
    pub fn all_below(&self) -> Vec<DimSequence> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.len());
        self.fill_below(0, 0, &mut cur, &mut out);
        out
    }

    fn fill_below(&self, idx: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<DimSequence>) {
        if idx == self.len() {
            out.push(DimSequence {
                n: self.n,
                dims: cur.clone(),
            });
            return;
        }
        for v in lo..=self.dims[idx] {
            cur.push(v);
            self.fill_below(idx + 1, v, cur, out);
            cur.pop();
        }
    }

    /// Every weakly increasing `c` with `self <= c <= n` componentwise.
    pub fn all_above(&self) -> Vec<DimSequence> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.len());
        self.fill_above(0, 0, &mut cur, &mut out);
        out
    }

    fn fill_above(&self, idx: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<DimSequence>) {
        if idx == self.len() {
            out.push(DimSequence {
                n: self.n,
                dims: cur.clone(),
            });
            return;
        }
        for v in lo.max(self.dims[idx])..=self.n {
            cur.push(v);
            self.fill_above(idx + 1, v, cur, out);
            cur.pop();
        }
    }
}

impl fmt::Display for DimSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(|d| d.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl DimSequence {
    /// Parse the comma-separated text form, e.g. `"2,5"`; the empty string is `()`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let dims = if s.trim().is_empty() {
            Vec::new()
        } else {
            s.split(',')
                .map(|t| {
                    usize::from_str(t.trim())
                        .map_err(|e| Error::Parse(format!("dimension {t:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        DimSequence::new(n, dims)
    }
}

fn check_size(w: &Permutation, a: &DimSequence) -> Result<()> {
    if w.n() != a.n() {
        return Err(Error::SizeMismatch {
            left: w.n(),
            right: a.n(),
        });
    }
    Ok(())
}

/// Membership `w ∈ S_n(a)`: every descent of `w` is one of the `a_i`.
pub fn in_descent_class(w: &Permutation, a: &DimSequence) -> Result<bool> {
    check_size(w, a)?;
    Ok(w.descents().iter().all(|d| a.dims().contains(d)))
}

/// The minimal representative of `w W_a`: sort each block of positions
/// `a_i + 1 ..= a_{i+1}`, `0 <= i <= k`.
pub fn min_coset_rep(w: &Permutation, a: &DimSequence) -> Result<Permutation> {
    check_size(w, a)?;
    let mut out = w.clone();
    for i in 0..=a.len() {
        out.sort_range(a.at(i) + 1, a.at(i + 1));
    }
    Ok(out)
}

fn check_descent_class(w: &Permutation, a: &DimSequence) -> Result<()> {
    if !in_descent_class(w, a)? {
        return Err(Error::PreconditionViolated(format!(
            "{w:?} has descents outside ({a})"
        )));
    }
    Ok(())
}

/// The kernel-direction permutation `w̄ ∈ S_n(b)`.
///
/// Starting from `w`, for `i = 1..=k` sort positions `b_i + 1 ..= a_{i+1}`.
pub fn bar_perm(w: &Permutation, a: &DimSequence, b: &DimSequence) -> Result<Permutation> {
    bar_perm_steps(w, a, b).map(|mut steps| steps.pop().unwrap())
}

/// The intermediate permutations `w^(0) = w, w^(1), ..., w^(k) = w̄`.
pub fn bar_perm_steps(
    w: &Permutation,
    a: &DimSequence,
    b: &DimSequence,
) -> Result<Vec<Permutation>> {
    check_size(w, a)?;
    check_size(w, b)?;
    if !b.le(a) {
        return Err(Error::PreconditionViolated(format!("need ({b}) <= ({a})")));
    }
    check_descent_class(w, a)?;
    let mut steps = vec![w.clone()];
    let mut cur = w.clone();
    for i in 1..=a.len() {
        cur.sort_range(b.at(i) + 1, a.at(i + 1));
        steps.push(cur.clone());
    }
    Ok(steps)
}

/// The span-direction permutation `ŵ ∈ S_n(c)`.
///
/// Starting from `w`, for `i = k` down to `1` sort positions `a_{i-1} + 1 ..= c_i`.
pub fn hat_perm(w: &Permutation, a: &DimSequence, c: &DimSequence) -> Result<Permutation> {
    check_size(w, a)?;
    check_size(w, c)?;
    if !a.le(c) {
        return Err(Error::PreconditionViolated(format!("need ({a}) <= ({c})")));
    }
    check_descent_class(w, a)?;
    let mut cur = w.clone();
    for i in (1..=a.len()).rev() {
        cur.sort_range(a.at(i - 1) + 1, c.at(i));
    }
    Ok(cur)
}

/// `Σ_i (a_i - b_i)(a_{i+1} - a_i)`, the most `bar_perm` can shorten `w`.
pub fn bar_length_drop_bound(a: &DimSequence, b: &DimSequence) -> usize {
    (1..=a.len())
        .map(|i| (a.at(i) - b.at(i)) * (a.at(i + 1) - a.at(i)))
        .sum()
}

/// `Σ_i (c_i - a_i)(a_i - a_{i-1})`, the most `hat_perm` can shorten `w`.
pub fn hat_length_drop_bound(a: &DimSequence, c: &DimSequence) -> usize {
    (1..=a.len())
        .map(|i| (c.at(i) - a.at(i)) * (a.at(i) - a.at(i - 1)))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::from_one_line(v.to_vec()).unwrap()
    }

    fn ds(n: usize, v: &[usize]) -> DimSequence {
        DimSequence::new(n, v.to_vec()).unwrap()
    }

    #[test]
    fn dim_sequence_validation() {
        assert!(DimSequence::new(3, vec![2, 1]).is_err());
        assert!(DimSequence::new(3, vec![1, 4]).is_err());
        assert!(DimSequence::new(3, vec![1, 1, 3]).is_ok());
        let a = ds(6, &[2, 5]);
        assert_eq!((a.at(0), a.at(1), a.at(2), a.at(3)), (0, 2, 5, 6));
        assert_eq!(DimSequence::parse(6, "2,5").unwrap(), a);
        assert_eq!(a.to_string(), "2,5");
        assert_eq!(DimSequence::parse(3, "").unwrap().len(), 0);
        assert_eq!(DimSequence::all_strict(4).len(), 8);
    }

    #[test]
    fn descent_class() {
        assert!(in_descent_class(&Permutation::identity(4), &ds(4, &[])).unwrap());
        assert!(in_descent_class(&p(&[2, 6, 1, 3, 5, 4]), &ds(6, &[2, 5])).unwrap());
        assert!(!in_descent_class(&p(&[3, 2, 1]), &ds(3, &[1])).unwrap());
        assert!(in_descent_class(&p(&[3, 2, 1]), &ds(4, &[1])).is_err());
    }

    #[test]
    fn minimal_representative() {
        let a = ds(6, &[2, 5]);
        let w = p(&[6, 2, 3, 1, 5, 4]);
        assert_eq!(min_coset_rep(&w, &a).unwrap(), p(&[2, 6, 1, 3, 5, 4]));
        let rep = p(&[2, 6, 1, 3, 5, 4]);
        assert_eq!(min_coset_rep(&rep, &a).unwrap(), rep);
        for w in Permutation::all(4) {
            assert_eq!(min_coset_rep(&w, &DimSequence::complete(4)).unwrap(), w);
            for a in DimSequence::all_strict(4) {
                let m = min_coset_rep(&w, &a).unwrap();
                assert!(in_descent_class(&m, &a).unwrap());
                assert!(m.length() <= w.length());
            }
        }
    }

    #[test]
    fn bar_examples() {
        let steps =
            bar_perm_steps(&p(&[2, 6, 3, 4, 5, 1]), &ds(6, &[2, 5]), &ds(6, &[1, 2])).unwrap();
        assert_eq!(steps[1], p(&[2, 3, 4, 5, 6, 1]));
        assert_eq!(steps[2], p(&[2, 3, 1, 4, 5, 6]));
        assert_eq!(
            bar_perm(&p(&[2, 1, 3]), &ds(3, &[1, 2]), &ds(3, &[0, 1])).unwrap(),
            p(&[1, 2, 3])
        );
        let w = p(&[2, 6, 3, 4, 5, 1]);
        let a = ds(6, &[2, 5]);
        assert_eq!(bar_perm(&w, &a, &a).unwrap(), w);
    }

    #[test]
    fn hat_examples() {
        let a = ds(3, &[1, 2]);
        assert_eq!(
            hat_perm(&p(&[2, 1, 3]), &a, &ds(3, &[2, 3])).unwrap(),
            p(&[1, 2, 3])
        );
        assert_eq!(hat_perm(&p(&[2, 1, 3]), &a, &a).unwrap(), p(&[2, 1, 3]));
        for c in a.all_above() {
            assert!(hat_perm(&Permutation::identity(3), &a, &c)
                .unwrap()
                .is_identity());
        }
    }

    #[test]
    fn precondition_errors() {
        let a = ds(3, &[1]);
        // w0 has a descent at 2, outside a
        assert!(matches!(
            bar_perm(&p(&[3, 2, 1]), &a, &ds(3, &[0])),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            bar_perm(&p(&[2, 1, 3]), &a, &ds(3, &[2])),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            hat_perm(&p(&[2, 1, 3]), &ds(3, &[2]), &ds(3, &[1])),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            bar_perm(&p(&[2, 1, 3]), &a, &ds(4, &[0])),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn length_bounds_exhaustive() {
        for n in 1..=4 {
            for a in DimSequence::all_strict(n) {
                for w in Permutation::all(n) {
                    if !in_descent_class(&w, &a).unwrap() {
                        continue;
                    }
                    for b in a.all_below() {
                        let wb = bar_perm(&w, &a, &b).unwrap();
                        assert!(in_descent_class(&wb, &b).unwrap());
                        assert!(wb.length() + bar_length_drop_bound(&a, &b) >= w.length());
                        assert_eq!(min_coset_rep(&wb, &b).unwrap(), wb);
                    }
                    for c in a.all_above() {
                        let wc = hat_perm(&w, &a, &c).unwrap();
                        assert!(in_descent_class(&wc, &c).unwrap());
                        assert!(wc.length() + hat_length_drop_bound(&a, &c) >= w.length());
                        assert_eq!(min_coset_rep(&wc, &c).unwrap(), wc);
                    }
                }
            }
        }
    }

    #[test]
    fn cycle_when_length_drop_is_extremal() {
        // with a complete and b = a - d_ij, extremal drop forces w̄ = w s_i ... s_{j-1}
        for n in 2..=4 {
            let a = DimSequence::complete(n);
            for i in 1..n {
                for j in i + 1..=n {
                    let b = DimSequence::new(
                        n,
                        (1..n)
                            .map(|q| if i <= q && q < j { q - 1 } else { q })
                            .collect(),
                    )
                    .unwrap();
                    let mut cycle = Permutation::identity(n);
                    for s in i..j {
                        cycle = cycle
                            .compose(&Permutation::simple_reflection(n, s).unwrap())
                            .unwrap();
                    }
                    for w in Permutation::all(n) {
                        let wb = bar_perm(&w, &a, &b).unwrap();
                        if wb.length() + (j - i) == w.length() {
                            assert_eq!(wb, w.compose(&cycle).unwrap(), "w={w:?} i={i} j={j}");
                        }
                    }
                }
            }
        }
    }

    // Replacing a run of equal entries of `a` by a single entry keeps the
    // strongest companion constraint (the largest b, resp. the smallest c).
    #[test]
    fn repeated_dims_agree_with_deduplicated() {
        for n in 1..=4 {
            for a_strict in DimSequence::all_strict(n) {
                // duplicate each entry once in turn
                for dup in 0..a_strict.len() {
                    let mut dims = a_strict.dims().to_vec();
                    dims.insert(dup, dims[dup]);
                    let a = DimSequence::new(n, dims).unwrap();
                    for w in Permutation::all(n) {
                        if !in_descent_class(&w, &a).unwrap() {
                            continue;
                        }
                        for b in a.all_below() {
                            let mut bd = b.dims().to_vec();
                            bd.remove(dup);
                            let b_ref = DimSequence::new(n, bd).unwrap();
                            assert_eq!(
                                bar_perm(&w, &a, &b).unwrap(),
                                bar_perm(&w, &a_strict, &b_ref).unwrap()
                            );
                        }
                        for c in a.all_above() {
                            let mut cd = c.dims().to_vec();
                            cd.remove(dup + 1);
                            let c_ref = DimSequence::new(n, cd).unwrap();
                            assert_eq!(
                                hat_perm(&w, &a, &c).unwrap(),
                                hat_perm(&w, &a_strict, &c_ref).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }
}
