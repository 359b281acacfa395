//! Subspaces of `F_p^n` in canonical reduced row-echelon form.

use std::fmt;

use crate::error::{Error, Result};

/// Largest prime accepted by default.
pub const DEFAULT_MAX_PRIME: u32 = 13;

pub fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..p)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    // Fermat; p is small
    let mut result = 1u32;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Row-reduce in place to reduced row-echelon form and drop zero rows.
/// Pivot columns are increasing from the top row down.
pub(crate) fn rref(p: u32, width: usize, rows: &mut Vec<Vec<u8>>) {
    let mut pivot_row = 0;
    for col in 0..width {
        let Some(found) = (pivot_row..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let inv = inv_mod(rows[pivot_row][col] as u32, p);
        for v in rows[pivot_row].iter_mut() {
            *v = (*v as u32 * inv % p) as u8;
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            let factor = row[col] as u32;
            if r == pivot_row || factor == 0 {
                continue;
            }
            for (x, &y) in row[col..width].iter_mut().zip(&pivot[col..width]) {
                let sub = factor * y as u32 % p;
                *x = ((*x as u32 + p - sub) % p) as u8;
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.truncate(pivot_row);
}

/// A subspace of `F_p^n`, stored as its canonical RREF basis. Two subspaces
/// are equal iff their canonical matrices are identical.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    p: u32,
    n: usize,
    rows: Vec<Vec<u8>>,
}

impl Subspace {
    pub fn zero(p: u32, n: usize) -> Self {
        Subspace {
            p,
            n,
            rows: Vec::new(),
        }
    }

    pub fn full(p: u32, n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| u8::from(i == j)).collect())
            .collect();
        Subspace { p, n, rows }
    }

    /// Span of the given vectors; entries are reduced mod `p`.
    pub fn span(p: u32, n: usize, vectors: &[Vec<u32>]) -> Result<Self> {
        let mut rows = Vec::with_capacity(vectors.len());
        for v in vectors {
            if v.len() != n {
                return Err(Error::SizeMismatch {
                    left: v.len(),
                    right: n,
                });
            }
            rows.push(v.iter().map(|&x| (x % p) as u8).collect());
        }
        Ok(Self::from_raw_rows(p, n, rows))
    }

    pub(crate) fn from_raw_rows(p: u32, n: usize, mut rows: Vec<Vec<u8>>) -> Self {
        rref(p, n, &mut rows);
        Subspace { p, n, rows }
    }

    /// `span(e_1, ..., e_d)`.
    pub fn coordinate(p: u32, n: usize, d: usize) -> Self {
        let rows = (0..d)
            .map(|i| (0..n).map(|j| u8::from(i == j)).collect())
            .collect();
        Subspace { p, n, rows }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    fn check_field(&self, other: &Subspace) -> Result<()> {
        if self.p != other.p || self.n != other.n {
            return Err(Error::FieldMismatch(self.p, self.n, other.p, other.n));
        }
        Ok(())
    }

    /// Reduce `v` against the basis; zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[u8]) -> Vec<u8> {
        let p = self.p;
        let mut v = v.to_vec();
        for row in &self.rows {
            let pc = row.iter().position(|&x| x != 0).unwrap();
            let factor = v[pc] as u32;
            if factor != 0 {
                for c in pc..self.n {
                    let sub = factor * row[c] as u32 % p;
                    v[c] = ((v[c] as u32 + p - sub) % p) as u8;
                }
            }
        }
        v
    }

    pub fn contains_vector(&self, v: &[u8]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_field(other)?;
        Ok(other.dim() <= self.dim() && other.rows.iter().all(|r| self.contains_vector(r)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_field(other)?;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(Self::from_raw_rows(self.p, self.n, rows))
    }

    /// Intersection by the Zassenhaus construction: reduce `[a | a]`, `[b | 0]`
    /// and read the intersection off the rows with vanishing left half.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_field(other)?;
        let n = self.n;
        let mut rows: Vec<Vec<u8>> = Vec::with_capacity(self.dim() + other.dim());
        for a in &self.rows {
            let mut r = a.clone();
            r.extend_from_slice(a);
            rows.push(r);
        }
        for b in &other.rows {
            let mut r = b.clone();
            r.resize(2 * n, 0);
            rows.push(r);
        }
        rref(self.p, 2 * n, &mut rows);
        let meet: Vec<Vec<u8>> = rows
            .into_iter()
            .filter(|r| r[..n].iter().all(|&x| x == 0))
            .map(|r| r[n..].to_vec())
            .collect();
        Ok(Self::from_raw_rows(self.p, n, meet))
    }

    /// `dim(self ∩ other)` via the dimension formula.
    pub fn meet_dim(&self, other: &Subspace) -> usize {
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        rref(self.p, self.n, &mut rows);
        self.dim() + other.dim() - rows.len()
    }

    /// Parse `"1 0 2;0 1 1"` (rows separated by `;`, residues by spaces).
    pub fn parse(p: u32, n: usize, s: &str) -> Result<Self> {
        let mut vectors = Vec::new();
        for row in s.split(';').filter(|r| !r.trim().is_empty()) {
            let v = row
                .split_whitespace()
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|e| Error::Parse(format!("residue {t:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?;
            vectors.push(v);
        }
        Self::span(p, n, &vectors)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{self}>")
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        f.write_str(&rows.join(";"))
    }
}

/// Gaussian binomial `[n choose d]_p`, saturating at `u128::MAX`.
pub fn gaussian_binomial(n: usize, d: usize, p: u32) -> u128 {
    if d > n {
        return 0;
    }
    // product formula evaluated incrementally; each prefix is itself a Gaussian binomial
    let p = p as u128;
    let mut acc: u128 = 1;
    for k in 0..d {
        let num = p.saturating_pow((n - k) as u32).saturating_sub(1);
        let den = p.saturating_pow((k + 1) as u32) - 1;
        match acc.checked_mul(num) {
            Some(x) => acc = x / den,
            None => return u128::MAX,
        }
    }
    acc
}

/// Every `d`-dimensional subspace of `F_p^n`, as RREF matrices: for each
/// pivot pattern, every assignment of the free entries.
pub fn enumerate_subspaces(d: usize, n: usize, p: u32) -> Vec<Subspace> {
    let mut out = Vec::new();
    if d > n {
        return out;
    }
    let mut pivots: Vec<usize> = (0..d).collect();
    loop {
        let free: Vec<(usize, usize)> = (0..d)
            .flat_map(|r| {
                ((pivots[r] + 1)..n)
                    .filter(|c| !pivots.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let mut values = vec![0u8; free.len()];
        loop {
            let mut rows = vec![vec![0u8; n]; d];
            for (r, &pc) in pivots.iter().enumerate() {
                rows[r][pc] = 1;
            }
            for (&(r, c), &v) in free.iter().zip(&values) {
                rows[r][c] = v;
            }
            out.push(Subspace { p, n, rows });
            // odometer over free entries
            let mut k = 0;
            while k < values.len() {
                values[k] += 1;
                if values[k] as u32 == p {
                    values[k] = 0;
                    k += 1;
                } else {
                    break;
                }
            }
            if k == values.len() {
                break;
            }
        }
        // next pivot combination
        let Some(i) = (0..d).rev().find(|&i| pivots[i] < n - d + i) else {
            break;
        };
        pivots[i] += 1;
        for k in i + 1..d {
            pivots[k] = pivots[k - 1] + 1;
        }
    }
    out
}

/// Every `d`-dimensional `X` with `lower ⊆ X ⊆ upper`.
pub fn enumerate_between(lower: &Subspace, upper: &Subspace, d: usize) -> Result<Vec<Subspace>> {
    if !upper.contains(lower)? {
        return Err(Error::PreconditionViolated(
            "lower bound not contained in upper".into(),
        ));
    }
    if d < lower.dim() || d > upper.dim() {
        return Ok(Vec::new());
    }
    // complement of `lower` inside `upper`
    let mut complement: Vec<Vec<u8>> = Vec::new();
    let mut acc = lower.clone();
    for r in upper.rows() {
        if !acc.contains_vector(r) {
            complement.push(r.clone());
            acc = acc.sum(&Subspace::from_raw_rows(lower.p, lower.n, vec![r.clone()]))?;
        }
    }
    let m = complement.len();
    let p = lower.p;
    let mut out = Vec::new();
    for sub in enumerate_subspaces(d - lower.dim(), m, p) {
        let mut rows = lower.rows.clone();
        for coeffs in sub.rows() {
            let mut v = vec![0u32; lower.n];
            for (k, &c) in coeffs.iter().enumerate() {
                if c != 0 {
                    for (x, &y) in v.iter_mut().zip(&complement[k]) {
                        *x = (*x + c as u32 * y as u32) % p;
                    }
                }
            }
            rows.push(v.into_iter().map(|x| x as u8).collect());
        }
        out.push(Subspace::from_raw_rows(p, lower.n, rows));
    }
    Ok(out)
}
