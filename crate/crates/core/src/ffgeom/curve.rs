//! Rational curves of multidegree `d_{ij}` in `Fl(F_p^n)`.
//!
//! Such a curve is determined by its kernel `K_•`, a partial flag with every
//! dimension except `j-1`, together with an `(i+1)`-dimensional `W` satisfying
//! `K_{j-2} ∩ W = K_{i-1}` and `K_{j-2} + W = K_j`. Its points are
//!
//! ```text
//! K_1 ⊂ ... ⊂ K_{i-1} ⊂ L ⊂ K_i + L ⊂ ... ⊂ K_{j-2} + L ⊂ K_j ⊂ ... ⊂ K_{n-1}
//! ```
//!
//! for the `i`-dimensional `L` with `K_{i-1} ⊂ L ⊂ W`, a projective line.

use super::budget::Budget;
use super::flag::{enumerate_flags, flag_count, FlagPoint};
use super::subspace::{enumerate_between, Subspace};
use crate::error::{Error, Result};
use crate::parabolic::DimSequence;
use crate::perm::Permutation;
use crate::qring::as_transposition;

/// `a - d_{ij}` for the complete staircase `a = (1, ..., n-1)`.
pub fn kernel_dims(n: usize, i: usize, j: usize) -> DimSequence {
    let dims = (1..n)
        .map(|m| if i <= m && m < j { m - 1 } else { m })
        .collect();
    DimSequence::new(n, dims).expect("staircase minus d_ij is weakly increasing")
}

/// `a + d_{ij}`.
pub fn span_dims(n: usize, i: usize, j: usize) -> DimSequence {
    let dims = (1..n)
        .map(|m| if i <= m && m < j { m + 1 } else { m })
        .collect();
    DimSequence::new(n, dims).expect("staircase plus d_ij is weakly increasing")
}

fn check_ij(i: usize, j: usize, n: usize) -> Result<()> {
    if !(1 <= i && i < j && j <= n) {
        return Err(Error::IndexOutOfRange(format!(
            "(i, j) = ({i}, {j}) for n = {n}"
        )));
    }
    Ok(())
}

/// The subspace of dimension `d` in a flag, with `0` and `E` at the ends.
fn space_of_dim(flag: &FlagPoint, d: usize) -> Subspace {
    let (p, n) = (flag.p(), flag.n());
    if d == 0 {
        return Subspace::zero(p, n);
    }
    if d == n {
        return Subspace::full(p, n);
    }
    flag.spaces()
        .iter()
        .find(|s| s.dim() == d)
        .cloned()
        .unwrap_or_else(|| panic!("flag has no subspace of dimension {d}"))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveDatum {
    i: usize,
    j: usize,
    kernel: FlagPoint,
    w: Subspace,
}

impl CurveDatum {
    pub fn new(i: usize, j: usize, kernel: FlagPoint, w: Subspace) -> Result<Self> {
        let n = kernel.n();
        check_ij(i, j, n)?;
        if kernel.dims() != &kernel_dims(n, i, j) {
            return Err(Error::PreconditionViolated(format!(
                "kernel flag has type ({}), expected ({})",
                kernel.dims(),
                kernel_dims(n, i, j)
            )));
        }
        if w.dim() != i + 1 || w.p() != kernel.p() || w.n() != n {
            return Err(Error::PreconditionViolated(format!(
                "W must have dimension {} in the same space",
                i + 1
            )));
        }
        let datum = CurveDatum { i, j, kernel, w };
        if !datum.incidence_holds()? {
            return Err(Error::PreconditionViolated(
                "K_{j-2} ∩ W = K_{i-1} and K_{j-2} + W = K_j must hold".into(),
            ));
        }
        Ok(datum)
    }

    fn incidence_holds(&self) -> Result<bool> {
        let kj2 = self.k(self.j - 2);
        Ok(kj2.intersect(&self.w)? == self.k(self.i - 1) && kj2.sum(&self.w)? == self.k(self.j))
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn n(&self) -> usize {
        self.kernel.n()
    }

    pub fn p(&self) -> u32 {
        self.kernel.p()
    }

    pub fn kernel_flag(&self) -> &FlagPoint {
        &self.kernel
    }

    pub fn w(&self) -> &Subspace {
        &self.w
    }

    /// `K_d` for `d ≠ j-1`, including `K_0 = 0` and `K_n = E`.
    pub fn k(&self, d: usize) -> Subspace {
        space_of_dim(&self.kernel, d)
    }

    /// The `i`-dimensional subspaces `L` parameterizing the points.
    pub fn lines(&self) -> Vec<Subspace> {
        enumerate_between(&self.k(self.i - 1), &self.w, self.i)
            .expect("K_{i-1} lies in W by the incidence conditions")
    }
}

/// The point of the curve attached to `L`.
pub fn curve_point(c: &CurveDatum, l: &Subspace) -> Result<FlagPoint> {
    let n = c.n();
    let ki1 = c.k(c.i - 1);
    if l.dim() != c.i || !l.contains(&ki1)? || !c.w.contains(l)? {
        return Err(Error::PreconditionViolated(
            "need K_{i-1} ⊂ L ⊂ W with dim L = i".into(),
        ));
    }
    let mut spaces = Vec::with_capacity(n - 1);
    for m in 1..n {
        if m < c.i || m >= c.j {
            spaces.push(c.k(m));
        } else {
            spaces.push(c.k(m - 1).sum(l)?);
        }
    }
    FlagPoint::new(c.p(), DimSequence::complete(n), spaces)
}

/// All `p + 1` points of the curve.
pub fn curve_points(c: &CurveDatum) -> Vec<FlagPoint> {
    c.lines()
        .iter()
        .map(|l| curve_point(c, l).expect("lines of the datum give valid points"))
        .collect()
}

fn componentwise(
    points: &[FlagPoint],
    op: impl Fn(&Subspace, &Subspace) -> Result<Subspace>,
) -> FlagPoint {
    let first = points.first().expect("a curve has points");
    let mut acc = first.spaces().to_vec();
    for pt in &points[1..] {
        for (a, b) in acc.iter_mut().zip(pt.spaces()) {
            *a = op(a, b).expect("points share the ambient space");
        }
    }
    let dims = acc.iter().map(Subspace::dim).collect();
    let dims =
        DimSequence::new(first.n(), dims).expect("nested subspaces have increasing dimension");
    FlagPoint::new_unchecked(first.p(), dims, acc)
}

/// Componentwise intersection over all points of the curve.
pub fn curve_kernel(c: &CurveDatum) -> FlagPoint {
    componentwise(&curve_points(c), Subspace::intersect)
}

/// Componentwise sum over all points of the curve.
pub fn curve_span(c: &CurveDatum) -> FlagPoint {
    componentwise(&curve_points(c), Subspace::sum)
}

/// Number of curve data for `d_{ij}` over `F_p^n`: kernel flags times the
/// `p^{2(j-i-1)}` planes `W/K_{i-1}` in `K_j/K_{i-1}` complementary to
/// `K_{j-2}/K_{i-1}`.
fn curve_count_projection(i: usize, j: usize, n: usize, p: u32) -> u128 {
    let kernels = flag_count(&kernel_dims(n, i, j), p);
    kernels.saturating_mul((p as u128).saturating_pow(2 * (j - i - 1) as u32))
}

/// Every datum `(K_•, W)` for multidegree `d_{ij}` over `F_p^n`, each once.
pub fn enumerate_curves(
    i: usize,
    j: usize,
    n: usize,
    p: u32,
    budget: &Budget,
) -> Result<Vec<CurveDatum>> {
    check_ij(i, j, n)?;
    let projected = curve_count_projection(i, j, n, p);
    budget.ensure_room(
        projected,
        &format!("curves of multidegree d_{i}{j} over F_{p}^{n}"),
    )?;
    let mut out = Vec::new();
    for kernel in enumerate_flags(&kernel_dims(n, i, j), p, budget)? {
        let ki1 = space_of_dim(&kernel, i - 1);
        let kj2 = space_of_dim(&kernel, j - 2);
        let kj = space_of_dim(&kernel, j);
        for w in enumerate_between(&ki1, &kj, i + 1)? {
            if kj2.intersect(&w)? == ki1 && kj2.sum(&w)? == kj {
                out.push(CurveDatum {
                    i,
                    j,
                    kernel: kernel.clone(),
                    w,
                });
            }
        }
    }
    budget.charge(out.len() as u64)?;
    Ok(out)
}

/// The lines `L_p = F_{n+1-p} ∩ G_p`, if each is one-dimensional and they
/// span `E`.
fn transversal_lines(f: &FlagPoint, g: &FlagPoint) -> Result<Option<Vec<Subspace>>> {
    let n = f.n();
    if !f.is_complete() || !g.is_complete() || g.n() != n {
        return Err(Error::PreconditionViolated(
            "need complete flags of equal size".into(),
        ));
    }
    if f.p() != g.p() {
        return Err(Error::FieldMismatch(f.p(), n, g.p(), g.n()));
    }
    let mut lines = Vec::with_capacity(n);
    let mut total = Subspace::zero(f.p(), n);
    for p in 1..=n {
        let l = f.step(n + 1 - p).intersect(&g.step(p))?;
        if l.dim() != 1 {
            return Ok(None);
        }
        total = total.sum(&l)?;
        lines.push(l);
    }
    Ok((total.dim() == n).then_some(lines))
}

/// Whether `F_{n+1-p} ∩ G_p` is a line for every `p` and these lines sum to `E`.
pub fn genericity_check(f: &FlagPoint, g: &FlagPoint) -> Result<bool> {
    Ok(transversal_lines(f, g)?.is_some())
}

/// The unique curve of multidegree `d_{ij}` meeting `Ω_u(F)`, `Ω_w(G)` and
/// `Ω_{s_r}(H)` for generic `H`, built from `L_p = F_{n+1-p} ∩ G_p`:
/// `K_p = L_{ū(1)} ⊕ ... ⊕ L_{ū(p)}` with `ū = u s_i ... s_{j-1}`, and
/// `W = K_{i-1} ⊕ L_{u(i)} ⊕ L_{u(j)}`.
pub fn construct_unique_curve(
    u: &Permutation,
    w: &Permutation,
    r: usize,
    i: usize,
    j: usize,
    f: &FlagPoint,
    g: &FlagPoint,
) -> Result<CurveDatum> {
    let n = u.n();
    check_ij(i, j, n)?;
    if w.n() != n || f.n() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: w.n().max(f.n()),
        });
    }
    if !(i <= r && r < j) {
        return Err(Error::PreconditionViolated(format!(
            "need {i} <= r={r} < {j}"
        )));
    }
    if u.length() + w.length() + 1 != n * (n - 1) / 2 + 2 * (j - i) {
        return Err(Error::PreconditionViolated(
            "dimension condition fails".into(),
        ));
    }
    if as_transposition(&u.inverse().compose(&w.dual())?) != Some((i, j)) {
        return Err(Error::PreconditionViolated(format!(
            "u^-1 w0 w is not t_{i}{j}"
        )));
    }
    let lines = transversal_lines(f, g)?
        .ok_or_else(|| Error::NotGeneric("F_{n+1-p} ∩ G_p are not independent lines".into()))?;
    let line = |v: usize| &lines[v - 1];
    let mut ubar = u.one_line().to_vec();
    ubar[i - 1..j].rotate_left(1);
    let p = f.p();
    let mut prefix = vec![Subspace::zero(p, n)];
    for m in 1..=n {
        prefix.push(prefix[m - 1].sum(line(ubar[m - 1]))?);
    }
    let dims = kernel_dims(n, i, j);
    let spaces = dims.dims().iter().map(|&d| prefix[d].clone()).collect();
    let kernel = FlagPoint::new(p, dims, spaces)?;
    let w_space = space_of_dim(&kernel, i - 1)
        .sum(line(u.get(i)))?
        .sum(line(u.get(j)))?;
    CurveDatum::new(i, j, kernel, w_space)
}

/// A point of the curve in `Ω_{s_r}(H)` for `i <= r < j`: take a nonzero
/// `x ∈ (K_{r-1} + W) ∩ H_{n-r}` and let `L` be `K_{i-1}` plus the
/// `W`-component of `x`. `None` if that intersection is zero.
pub fn divisor_point(c: &CurveDatum, r: usize, h: &FlagPoint) -> Result<Option<FlagPoint>> {
    let n = c.n();
    if !(c.i <= r && r < c.j) {
        return Err(Error::PreconditionViolated(format!(
            "need {} <= r={r} < {}",
            c.i, c.j
        )));
    }
    let kr1 = c.k(r - 1);
    let span_r = kr1.sum(&c.w)?;
    let meet = span_r.intersect(&h.step(n - r))?;
    let Some(x) = meet.rows().first() else {
        return Ok(None);
    };
    let x_line = Subspace::from_raw_rows(c.p(), n, vec![x.clone()]);
    let l = if kr1.contains(&x_line)? {
        c.lines().swap_remove(0)
    } else {
        // W ∩ (K_{r-1} + x) = K_{i-1} + (W-component of x)
        c.w.intersect(&kr1.sum(&x_line)?)?
    };
    curve_point(c, &l).map(Some)
}
