//! Points of partial flag varieties over `F_p` and Schubert conditions.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::budget::Budget;
use super::subspace::{enumerate_between, gaussian_binomial, rref, Subspace};
use crate::error::{Error, Result};
use crate::parabolic::{in_descent_class, DimSequence};
use crate::perm::Permutation;

/// A chain `V_{a_1} ⊆ ... ⊆ V_{a_k}` with `dim V_{a_i} = a_i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlagPoint {
    p: u32,
    dims: DimSequence,
    spaces: Vec<Subspace>,
}

impl FlagPoint {
    pub fn new(p: u32, dims: DimSequence, spaces: Vec<Subspace>) -> Result<Self> {
        if spaces.len() != dims.len() {
            return Err(Error::SizeMismatch {
                left: spaces.len(),
                right: dims.len(),
            });
        }
        for (s, &d) in spaces.iter().zip(dims.dims()) {
            if s.p() != p {
                return Err(Error::FieldMismatch(p, dims.n(), s.p(), s.n()));
            }
            if s.n() != dims.n() || s.dim() != d {
                return Err(Error::PreconditionViolated(format!(
                    "subspace of dim {} where {d} expected",
                    s.dim()
                )));
            }
        }
        for w in spaces.windows(2) {
            if !w[1].contains(&w[0])? {
                return Err(Error::PreconditionViolated(
                    "subspaces are not nested".into(),
                ));
            }
        }
        Ok(FlagPoint { p, dims, spaces })
    }

    pub(crate) fn new_unchecked(p: u32, dims: DimSequence, spaces: Vec<Subspace>) -> Self {
        debug_assert!(FlagPoint::new(p, dims.clone(), spaces.clone()).is_ok());
        FlagPoint { p, dims, spaces }
    }

    /// The coordinate flag `F_q = span(e_1, ..., e_q)`.
    pub fn coordinate(n: usize, p: u32) -> Self {
        let dims = DimSequence::complete(n);
        let spaces = (1..n).map(|q| Subspace::coordinate(p, n, q)).collect();
        FlagPoint { p, dims, spaces }
    }

    pub fn dims(&self) -> &DimSequence {
        &self.dims
    }

    pub fn spaces(&self) -> &[Subspace] {
        &self.spaces
    }

    pub fn n(&self) -> usize {
        self.dims.n()
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn is_complete(&self) -> bool {
        self.dims == DimSequence::complete(self.n())
    }

    /// For a complete flag: `F_q`, with `F_0 = 0` and `F_n = E`.
    pub fn step(&self, q: usize) -> Subspace {
        assert!(self.is_complete());
        let (p, n) = (self.p(), self.n());
        match q {
            0 => Subspace::zero(p, n),
            q if q == n => Subspace::full(p, n),
            q => self.spaces[q - 1].clone(),
        }
    }
}

impl fmt::Debug for FlagPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Flag{:?}", self.spaces)
    }
}

/// `Π_i [n - a_{i-1} choose a_i - a_{i-1}]_p`, the size of `Fl(a; F_p^n)`.
pub fn flag_count(a: &DimSequence, p: u32) -> u128 {
    let mut total: u128 = 1;
    for i in 1..=a.len() {
        let g = gaussian_binomial(a.n() - a.at(i - 1), a.at(i) - a.at(i - 1), p);
        total = total.saturating_mul(g);
    }
    total
}

/// Every flag of type `a` over `F_p`, each exactly once.
pub fn enumerate_flags(a: &DimSequence, p: u32, budget: &Budget) -> Result<Vec<FlagPoint>> {
    budget.ensure_room(flag_count(a, p), &format!("flags of type ({a}) over F_{p}"))?;
    let n = a.n();
    let mut out = Vec::new();
    let mut chain = Vec::with_capacity(a.len());
    extend_flags(
        a,
        p,
        &Subspace::zero(p, n),
        &Subspace::full(p, n),
        0,
        &mut chain,
        &mut out,
    )?;
    budget.charge(out.len() as u64)?;
    Ok(out)
}

fn extend_flags(
    a: &DimSequence,
    p: u32,
    below: &Subspace,
    top: &Subspace,
    idx: usize,
    chain: &mut Vec<Subspace>,
    out: &mut Vec<FlagPoint>,
) -> Result<()> {
    if idx == a.len() {
        out.push(FlagPoint::new_unchecked(p, a.clone(), chain.clone()));
        return Ok(());
    }
    for s in enumerate_between(below, top, a.dims()[idx])? {
        chain.push(s.clone());
        extend_flags(a, p, &s, top, idx + 1, chain, out)?;
        chain.pop();
    }
    Ok(())
}

/// A uniformly random complete flag: the row filtration of a uniformly
/// random invertible matrix. Deterministic per seed.
pub fn random_flag(n: usize, p: u32, seed: u64) -> FlagPoint {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let rows: Vec<Vec<u8>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(0..p) as u8).collect())
            .collect();
        let mut check = rows.clone();
        rref(p, n, &mut check);
        if check.len() < n {
            continue;
        }
        let spaces = (1..n)
            .map(|q| Subspace::from_raw_rows(p, n, rows[..q].to_vec()))
            .collect();
        return FlagPoint::new_unchecked(p, DimSequence::complete(n), spaces);
    }
}

/// The Schubert variety `Ω_w^{(a)}(F)` as a precomputed list of rank
/// conditions `dim(V_{a_i} ∩ F_q) >= a_i - r_w(a_i, n - q)`. Conditions that
/// hold for every subspace are dropped.
pub struct SchubertCondition {
    dims: DimSequence,
    checks: Vec<(usize, Subspace, usize)>,
}

impl SchubertCondition {
    pub fn new(w: &Permutation, dims: &DimSequence, reference: &FlagPoint) -> Result<Self> {
        let n = w.n();
        if !reference.is_complete() || reference.n() != n || dims.n() != n {
            return Err(Error::PreconditionViolated(
                "reference must be a complete flag of matching size".into(),
            ));
        }
        if !in_descent_class(w, dims)? {
            return Err(Error::PreconditionViolated(format!(
                "{w:?} is not in S_n({dims})"
            )));
        }
        let mut checks = Vec::new();
        for (idx, &ai) in dims.dims().iter().enumerate() {
            for q in 1..n {
                let need = ai - w.rank(ai, n - q)?;
                // dim(V ∩ F_q) >= a_i + q - n holds automatically
                if need > (ai + q).saturating_sub(n) {
                    checks.push((idx, reference.step(q), need));
                }
            }
        }
        Ok(SchubertCondition {
            dims: dims.clone(),
            checks,
        })
    }

    pub fn contains(&self, v: &FlagPoint) -> Result<bool> {
        if v.dims() != &self.dims {
            return Err(Error::PreconditionViolated("flag type mismatch".into()));
        }
        Ok(self
            .checks
            .iter()
            .all(|(idx, fq, need)| v.spaces[*idx].meet_dim(fq) >= *need))
    }
}

/// `V ∈ Ω_w^{(a)}(F)` for `V` of type `a`.
pub fn in_schubert(v: &FlagPoint, w: &Permutation, reference: &FlagPoint) -> Result<bool> {
    if v.p() != reference.p() {
        return Err(Error::FieldMismatch(
            v.p(),
            v.n(),
            reference.p(),
            reference.n(),
        ));
    }
    SchubertCondition::new(w, v.dims(), reference)?.contains(v)
}
