use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::xpoly::{checked_add, checked_mul};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A multidegree `d = (d_1, ..., d_{n-1})`, also read as the monomial `q^d`.
///
/// Ordered by `|d|` first and lexicographically after that.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multidegree {
    degs: Vec<u32>,
}

impl Multidegree {
    pub fn zero(n: usize) -> Self {
        Multidegree {
            degs: vec![0; n.saturating_sub(1)],
        }
    }

    pub fn new(n: usize, degs: Vec<u32>) -> Result<Self> {
        if degs.len() + 1 != n {
            return Err(Error::SizeMismatch {
                left: degs.len() + 1,
                right: n,
            });
        }
        Ok(Multidegree { degs })
    }

    /// `d_{ij}`: ones in positions `i..j-1`, zeros elsewhere.
    pub fn d_ij(n: usize, i: usize, j: usize) -> Result<Self> {
        if !(1 <= i && i < j && j <= n) {
            return Err(Error::IndexOutOfRange(format!("d_({i},{j}) for n={n}")));
        }
        Ok(Multidegree {
            degs: (1..n).map(|p| u32::from(i <= p && p < j)).collect(),
        })
    }

    /// The `n` of `Fl(n)` this multidegree belongs to.
    pub fn n(&self) -> usize {
        self.degs.len() + 1
    }

    pub fn degs(&self) -> &[u32] {
        &self.degs
    }

    /// `|d| = Σ d_i`.
    pub fn total(&self) -> u32 {
        self.degs.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.degs.iter().all(|&d| d == 0)
    }

    pub fn plus(&self, other: &Multidegree) -> Multidegree {
        assert_eq!(self.degs.len(), other.degs.len());
        Multidegree {
            degs: self
                .degs
                .iter()
                .zip(&other.degs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// If `d = d_{ij}` for some `i < j`, return `(i, j)`.
    pub fn as_d_ij(&self) -> Option<(usize, usize)> {
        let support: Vec<usize> = (1..=self.degs.len())
            .filter(|&p| self.degs[p - 1] != 0)
            .collect();
        let (&first, &last) = (support.first()?, support.last()?);
        let contiguous = support.len() == last - first + 1;
        let ones = support.iter().all(|&p| self.degs[p - 1] == 1);
        (contiguous && ones).then_some((first, last + 1))
    }

    /// All multidegrees for `Fl(n)` with `|d| <= max_total`.
    pub fn all_up_to(n: usize, max_total: u32) -> Vec<Multidegree> {
        let len = n.saturating_sub(1);
        let mut out = Vec::new();
        let mut cur = vec![0u32; len];
        fn rec(idx: usize, budget: u32, cur: &mut Vec<u32>, out: &mut Vec<Multidegree>) {
            if idx == cur.len() {
                out.push(Multidegree { degs: cur.clone() });
                return;
            }
            for v in 0..=budget {
                cur[idx] = v;
                rec(idx + 1, budget - v, cur, out);
            }
            cur[idx] = 0;
        }
        rec(0, max_total, &mut cur, &mut out);
        out.sort();
        out
    }

    /// `q1^2*q3` style rendering; empty for `q^0`.
    pub fn monomial_string(&self) -> String {
        let parts: Vec<String> = self
            .degs
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(i, &k)| {
                if k == 1 {
                    format!("q{}", i + 1)
                } else {
                    format!("q{}^{}", i + 1, k)
                }
            })
            .collect();
        parts.join("*")
    }
}

impl Ord for Multidegree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.degs.cmp(&other.degs))
    }
}

impl PartialOrd for Multidegree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.degs)
    }
}

/// Basis element `q^d σ_w`. Sorted by `(|d|, d, w)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisKey {
    pub q: Multidegree,
    pub perm: Permutation,
}

impl BasisKey {
    /// `ℓ(w) + 2|d|`.
    pub fn degree(&self) -> usize {
        self.perm.length() + 2 * self.q.total() as usize
    }
}

/// An element of `QH*(Fl(n))`: a finite `Z`-combination of `q^d σ_w`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "RingElementJson", try_from = "RingElementJson")]
pub struct RingElement {
    n: usize,
    terms: BTreeMap<BasisKey, i64>,
}

impl RingElement {
    pub fn zero(n: usize) -> Self {
        RingElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The quantum Schubert class `σ_w`.
    pub fn schubert(w: &Permutation) -> Self {
        let mut e = Self::zero(w.n());
        e.add_term(Multidegree::zero(w.n()), w.clone(), 1);
        e
    }

    pub fn n(&self) -> usize {
        self.n
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

    /// Terms in rendering order.
    pub fn terms(&self) -> impl Iterator<Item = (&BasisKey, i64)> {
        self.terms.iter().map(|(k, &c)| (k, c))
    }

    pub fn coeff(&self, w: &Permutation, d: &Multidegree) -> i64 {
        let key = BasisKey {
            q: d.clone(),
            perm: w.clone(),
        };
        self.terms.get(&key).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, q: Multidegree, perm: Permutation, coeff: i64) {
        assert_eq!(perm.n(), self.n, "permutation size");
        assert_eq!(q.n(), self.n, "multidegree size");
        if coeff == 0 {
            return;
        }
        match self.terms.entry(BasisKey { q, perm }) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = checked_add(*o.get(), coeff);
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// `self += c * q^shift * other`.
    pub fn add_scaled_shifted(&mut self, other: &RingElement, c: i64, shift: &Multidegree) {
        assert_eq!(self.n, other.n);
        for (k, &v) in &other.terms {
            self.add_term(k.q.plus(shift), k.perm.clone(), checked_mul(v, c));
        }
    }

    pub fn add(&self, other: &RingElement) -> RingElement {
        let mut out = self.clone();
        out.add_scaled_shifted(other, 1, &Multidegree::zero(self.n));
        out
    }

    pub fn sub(&self, other: &RingElement) -> RingElement {
        let mut out = self.clone();
        out.add_scaled_shifted(other, -1, &Multidegree::zero(self.n));
        out
    }

    pub fn scale(&self, c: i64) -> RingElement {
        let mut out = RingElement::zero(self.n);
        out.add_scaled_shifted(self, c, &Multidegree::zero(self.n));
        out
    }

    /// The `q = 0` specialization.
    pub fn classical_part(&self) -> RingElement {
        RingElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.q.is_zero())
                .map(|(k, &c)| (k.clone(), c))
                .collect(),
        }
    }

    /// Terms carrying exactly `q^d`, as a map from permutations to coefficients.
    pub fn q_component(&self, d: &Multidegree) -> BTreeMap<Permutation, i64> {
        self.terms
            .iter()
            .filter(|(k, _)| &k.q == d)
            .map(|(k, &c)| (k.perm.clone(), c))
            .collect()
    }

    /// True if every term has degree `ℓ(w) + 2|d| = deg`.
    pub fn is_homogeneous_of(&self, deg: usize) -> bool {
        self.terms.keys().all(|k| k.degree() == deg)
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `s[3,1,2] + q1*s[1,2,3]`; the zero element renders as `0`.
impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (k, &c)) in self.terms.iter().enumerate() {
            let q = k.q.monomial_string();
            let body = if q.is_empty() {
                format!("s[{}]", k.perm)
            } else {
                format!("{q}*s[{}]", k.perm)
            };
            super::write_signed_term(f, c, &body, idx == 0)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    perm: Vec<usize>,
    q: Vec<u32>,
    coeff: i64,
}

/// Wire form: `{"n": int, "terms": [{"perm": [..], "q": [..], "coeff": int}, ..]}`.
#[derive(Serialize, Deserialize)]
struct RingElementJson {
    n: usize,
    terms: Vec<TermJson>,
}

impl From<RingElement> for RingElementJson {
    fn from(e: RingElement) -> Self {
        RingElementJson {
            n: e.n,
            terms: e
                .terms
                .into_iter()
                .map(|(k, coeff)| TermJson {
                    perm: k.perm.into(),
                    q: k.q.degs,
                    coeff,
                })
                .collect(),
        }
    }
}

impl TryFrom<RingElementJson> for RingElement {
    type Error = Error;

    fn try_from(j: RingElementJson) -> Result<Self> {
        let mut e = RingElement::zero(j.n);
        for t in j.terms {
            let perm = Permutation::from_one_line(t.perm)?;
            if perm.n() != j.n {
                return Err(Error::SizeMismatch {
                    left: perm.n(),
                    right: j.n,
                });
            }
            let q = Multidegree::new(j.n, t.q)?;
            e.add_term(q, perm, t.coeff);
        }
        Ok(e)
    }
}

/// A polynomial in `q_1, ..., q_{n-1}`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QPolynomial {
    terms: BTreeMap<Multidegree, i64>,
}

impl QPolynomial {
    pub fn add_term(&mut self, d: Multidegree, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(d) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = checked_add(*o.get(), c);
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn constant(n: usize, c: i64) -> Self {
        let mut p = QPolynomial::default();
        p.add_term(Multidegree::zero(n), c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Multidegree, i64)> {
        self.terms.iter().map(|(d, &c)| (d, c))
    }

    pub fn coeff(&self, d: &Multidegree) -> i64 {
        self.terms.get(d).copied().unwrap_or(0)
    }
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (d, &c)) in self.terms.iter().enumerate() {
            super::write_signed_term(f, c, &d.monomial_string(), idx == 0)?;
        }
        Ok(())
    }
}
