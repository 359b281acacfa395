//! Integer polynomials in `x_1, ..., x_m` with divided difference operators.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

/// Sparse integer polynomial. Exponent vectors have one slot per variable;
/// zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct XPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

pub(crate) fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("coefficient overflow")
}

pub(crate) fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("coefficient overflow")
}

impl XPolynomial {
    pub fn zero(nvars: usize) -> Self {
        XPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(nvars, vec![0; nvars], 1)
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, coeff: i64) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Self::zero(nvars);
        p.add_term(exps, coeff);
        p
    }

    /// The variable `x_i`, `1 <= i <= nvars`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        Self::monomial(nvars, e, 1)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, i64)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> i64 {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, coeff: i64) {
        if coeff == 0 {
            return;
        }
        debug_assert_eq!(exps.len(), self.nvars);
        match self.terms.entry(exps) {
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

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn constant_term(&self) -> i64 {
        self.coeff(&vec![0; self.nvars])
    }

    /// Re-embed into a ring with `nvars >= self.nvars` variables.
    pub fn widen(&self, nvars: usize) -> XPolynomial {
        assert!(nvars >= self.nvars);
        let mut out = XPolynomial::zero(nvars);
        for (e, &c) in &self.terms {
            let mut e2 = e.clone();
            e2.resize(nvars, 0);
            out.terms.insert(e2, c);
        }
        out
    }

    pub fn add(&self, other: &XPolynomial) -> XPolynomial {
        self.add_scaled(other, 1)
    }

    pub fn sub(&self, other: &XPolynomial) -> XPolynomial {
        self.add_scaled(other, -1)
    }

    pub fn add_scaled(&self, other: &XPolynomial, c: i64) -> XPolynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, &v) in &other.terms {
            out.add_term(e.clone(), checked_mul(v, c));
        }
        out
    }

    pub fn mul(&self, other: &XPolynomial) -> XPolynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut out = XPolynomial::zero(self.nvars);
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, checked_mul(c1, c2));
            }
        }
        out
    }

    /// The action of `s_i`: exchange `x_i` and `x_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> XPolynomial {
        let mut out = XPolynomial::zero(self.nvars);
        for (e, &c) in &self.terms {
            let mut e2 = e.clone();
            e2.swap(i - 1, i);
            out.terms.insert(e2, c);
        }
        out
    }

    /// `∂_i P = (P - s_i P) / (x_i - x_{i+1})`, `1 <= i < nvars`.
    ///
    /// Computed monomial by monomial:
    /// `(x^a y^b - x^b y^a)/(x - y) = Σ_{k<a-b} x^{a-1-k} y^{b+k}` for `a > b`.
    pub fn divided_difference(&self, i: usize) -> XPolynomial {
        assert!(1 <= i && i < self.nvars, "∂_{i} needs x_{} in scope", i + 1);
        let (xi, xj) = (i - 1, i);
        let mut out = XPolynomial::zero(self.nvars);
        for (e, &c) in &self.terms {
            let (a, b) = (e[xi], e[xj]);
            if a == b {
                continue;
            }
            let (hi, lo, sign) = if a > b { (a, b, 1) } else { (b, a, -1) };
            for k in 0..(hi - lo) {
                let mut e2 = e.clone();
                e2[xi] = hi - 1 - k;
                e2[xj] = lo + k;
                out.add_term(e2, sign * c);
            }
        }
        out
    }
}

impl fmt::Debug for XPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for XPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, &c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, k)
                    }
                })
                .collect();
            super::write_signed_term(f, c, &mono.join("*"), first)?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(nv: usize, i: usize) -> XPolynomial {
        XPolynomial::var(nv, i)
    }

    #[test]
    fn arithmetic() {
        let p = x(3, 1).add(&x(3, 2));
        let sq = p.mul(&p);
        assert_eq!(sq.coeff(&[2, 0, 0]), 1);
        assert_eq!(sq.coeff(&[1, 1, 0]), 2);
        assert_eq!(sq.coeff(&[0, 2, 0]), 1);
        assert!(p.sub(&p).is_zero());
        assert_eq!(XPolynomial::one(3).constant_term(), 1);
        assert_eq!(sq.degree(), Some(2));
        assert!(sq.is_homogeneous());
        assert!(!sq.add(&XPolynomial::one(3)).is_homogeneous());
    }

    #[test]
    fn divided_difference_basics() {
        // ∂_1 x_1 = 1, ∂_1 x_2 = -1, ∂_1 (x_1 x_2) = 0, ∂_1 x_1^2 = x_1 + x_2
        assert_eq!(x(3, 1).divided_difference(1), XPolynomial::one(3));
        assert_eq!(
            x(3, 2).divided_difference(1),
            XPolynomial::monomial(3, vec![0, 0, 0], -1)
        );
        assert!(x(3, 1).mul(&x(3, 2)).divided_difference(1).is_zero());
        let sq = x(3, 1).mul(&x(3, 1));
        assert_eq!(sq.divided_difference(1), x(3, 1).add(&x(3, 2)));
    }

    // (x_i - x_{i+1}) ∂_i P = P - s_i P, checked on a batch of mixed polynomials
    #[test]
    fn divided_difference_defining_identity() {
        let nv = 4;
        let mut samples = Vec::new();
        for a in 0..4u32 {
            for b in 0..4u32 {
                for c in 0..3u32 {
                    let mut p = XPolynomial::monomial(nv, vec![a, b, c, 1], 3);
                    p.add_term(vec![b, c, a, 0], -2);
                    p.add_term(vec![c, a, 0, b], 5);
                    samples.push(p);
                }
            }
        }
        for p in samples {
            for i in 1..nv {
                let lhs = x(nv, i).sub(&x(nv, i + 1)).mul(&p.divided_difference(i));
                let rhs = p.sub(&p.swap_vars(i));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn rendering() {
        let mut p = XPolynomial::monomial(2, vec![2, 1], 1);
        p.add_term(vec![0, 0], -3);
        assert_eq!(p.to_string(), "x1^2*x2 - 3");
        assert_eq!(XPolynomial::zero(2).to_string(), "0");
    }
}
