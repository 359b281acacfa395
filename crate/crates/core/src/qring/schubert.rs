//! Classical Schubert polynomials by divided differences, and expansion of
//! polynomials in the Schubert basis. This is the `q = 0` oracle.
//!
//! Polynomials for `S_n` are carried in `n` variables so that `∂_{n-1}` is
//! defined on intermediate results; Schubert polynomials themselves never
//! involve `x_n`.

use std::collections::{BTreeMap, HashMap};

use super::xpoly::XPolynomial;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// `x_1^{n-1} x_2^{n-2} ... x_{n-1}` in `n` variables.
pub fn staircase_monomial(n: usize) -> XPolynomial {
    XPolynomial::monomial(n, (0..n).map(|i| (n - 1 - i) as u32).collect(), 1)
}

/// The Schubert polynomial `S_w`, obtained from `S_{w_0} = x^δ` by
/// `S_w = ∂_i S_{w s_i}` along a chain of ascents of `w`.
pub fn schubert_poly(w: &Permutation) -> XPolynomial {
    let n = w.n();
    let mut chain = Vec::new();
    let mut v = w.clone();
    while let Some(i) = (1..n).find(|&i| v.get(i) < v.get(i + 1)) {
        chain.push(i);
        v = v.swap_positions(i, i + 1);
    }
    let mut poly = staircase_monomial(n);
    for &i in chain.iter().rev() {
        poly = poly.divided_difference(i);
    }
    poly
}

/// Schubert polynomials of all of `S_n`.
pub struct SchubertTable {
    n: usize,
    polys: HashMap<Permutation, XPolynomial>,
}

impl SchubertTable {
    pub fn new(n: usize) -> Self {
        let mut polys = HashMap::new();
        let mut level = vec![Permutation::longest(n)];
        polys.insert(Permutation::longest(n), staircase_monomial(n));
        while !level.is_empty() {
            let mut next = Vec::new();
            for v in &level {
                for i in v.descents() {
                    let w = v.swap_positions(i, i + 1);
                    if !polys.contains_key(&w) {
                        let p = polys[v].divided_difference(i);
                        polys.insert(w.clone(), p);
                        next.push(w);
                    }
                }
            }
            level = next;
        }
        SchubertTable { n, polys }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, w: &Permutation) -> &XPolynomial {
        &self.polys[w]
    }

    /// Coefficients `c_w` with `P = Σ c_w S_w`, `w ∈ S_n`.
    ///
    /// The coefficient of `S_w` is the constant term of `∂_w P`. The `∂_w` are
    /// built up by length through left descents, `∂_w = ∂_i ∂_{s_i w}`.
    /// Fails with `NotExpandable` if `P - Σ c_w S_w` is not zero.
    pub fn expand(&self, poly: &XPolynomial) -> Result<BTreeMap<Permutation, i64>> {
        let n = self.n;
        let poly = if poly.nvars() < n {
            poly.widen(n)
        } else {
            poly.clone()
        };
        if poly.nvars() != n {
            return Err(Error::NotExpandable(n));
        }
        let max_len = poly.degree().unwrap_or(0) as usize;
        let mut coeffs = BTreeMap::new();
        let id = Permutation::identity(n);
        let mut level: HashMap<Permutation, XPolynomial> = HashMap::new();
        level.insert(id, poly.clone());
        for len in 0..=max_len {
            let mut next: HashMap<Permutation, XPolynomial> = HashMap::new();
            for (w, q) in &level {
                let c = q.constant_term();
                if c != 0 {
                    coeffs.insert(w.clone(), c);
                }
                if len == max_len {
                    continue;
                }
                // extend w to s_i w for every i that becomes a left descent
                let inv = w.inverse();
                for i in 1..n {
                    if inv.get(i) < inv.get(i + 1) {
                        let sw = left_swap(w, i);
                        // canonical parent: smallest left descent of s_i w
                        let sw_inv = sw.inverse();
                        let canon = (1..n).find(|&k| sw_inv.get(k) > sw_inv.get(k + 1)).unwrap();
                        if canon == i {
                            let d = q.divided_difference(i);
                            if !d.is_zero() {
                                next.insert(sw, d);
                            }
                        }
                    }
                }
            }
            level = next;
        }
        let mut rest = poly;
        for (w, &c) in &coeffs {
            rest = rest.add_scaled(self.get(w), -c);
        }
        if !rest.is_zero() {
            return Err(Error::NotExpandable(n));
        }
        Ok(coeffs)
    }
}

/// `s_i w`: exchange the values `i` and `i+1` in the one-line notation.
fn left_swap(w: &Permutation, i: usize) -> Permutation {
    let images = w
        .one_line()
        .iter()
        .map(|&v| match v {
            v if v == i => i + 1,
            v if v == i + 1 => i,
            v => v,
        })
        .collect();
    Permutation::from_one_line(images).expect("value swap preserves bijectivity")
}

/// Expand `P` in the Schubert basis of `S_n`.
pub fn expand_poly_in_schubert(poly: &XPolynomial, n: usize) -> Result<BTreeMap<Permutation, i64>> {
    SchubertTable::new(n).expand(poly)
}
