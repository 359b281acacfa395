//! General products in `QH*(Fl(n))`.
//!
//! The ring is generated by the divisor classes, so every `σ_u` is a
//! `Z[q]`-combination of monomials `x^a = x_1^{a_1} ... x_{n-1}^{a_{n-1}}` with
//! `x_i = σ_{s_i} - σ_{s_{i-1}}`, `a_i <= n - i`. Multiplying by `σ_u` is then
//! the same combination of compositions of the operators `X_i`
//! ([`x_operator`]) applied to the other factor.

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use super::element::{QPolynomial, RingElement};
use super::monk::x_operator;
use super::schubert::SchubertTable;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Context for products in `QH*(Fl(n))` with memoized monomial evaluations
/// and Schubert-class expansions. Caches are safe for concurrent readers.
pub struct QuantumRing {
    n: usize,
    schubert: SchubertTable,
    monomials: RwLock<HashMap<Vec<u32>, RingElement>>,
    expansions: RwLock<HashMap<Permutation, BTreeMap<Vec<u32>, QPolynomial>>>,
}

impl QuantumRing {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        QuantumRing {
            n,
            schubert: SchubertTable::new(n),
            monomials: RwLock::new(HashMap::new()),
            expansions: RwLock::new(HashMap::new()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_exponents(&self, exps: &[u32]) -> Result<()> {
        if exps.len() + 1 != self.n {
            return Err(Error::SizeMismatch {
                left: exps.len() + 1,
                right: self.n,
            });
        }
        if exps
            .iter()
            .enumerate()
            .any(|(i, &e)| e as usize > self.n - 1 - i)
        {
            return Err(Error::ExponentOutOfStaircase(exps.to_vec()));
        }
        Ok(())
    }

    /// `X_1^{e_1} ... X_{n-1}^{e_{n-1}} σ_id`, for `e` under the staircase.
    pub fn monomial_eval(&self, exps: &[u32]) -> Result<RingElement> {
        self.check_exponents(exps)?;
        if let Some(e) = self.monomials.read().unwrap().get(exps) {
            return Ok(e.clone());
        }
        let value = match exps.iter().position(|&e| e > 0) {
            None => RingElement::schubert(&Permutation::identity(self.n)),
            Some(k) => {
                let mut lower = exps.to_vec();
                lower[k] -= 1;
                x_operator(k + 1, &self.monomial_eval(&lower)?)?
            }
        };
        self.monomials
            .write()
            .unwrap()
            .insert(exps.to_vec(), value.clone());
        Ok(value)
    }

    /// Apply `X^a` to an arbitrary element.
    pub fn apply_monomial(&self, exps: &[u32], e: &RingElement) -> Result<RingElement> {
        self.check_exponents(exps)?;
        let mut out = e.clone();
        for (k, &times) in exps.iter().enumerate() {
            for _ in 0..times {
                out = x_operator(k + 1, &out)?;
            }
        }
        Ok(out)
    }

    /// Coefficients `c_a(q)` with `e = Σ_a c_a(q) · monomial_eval(a)`.
    ///
    /// Triangular solve over `q`-degrees in ascending `(|d|, d)` order. The
    /// `q^d` component of the residual is converted to monomials through the
    /// Schubert polynomials; subtracting the corresponding evaluations must
    /// clear that component exactly, only disturbing strictly larger `|d|`.
    pub fn expand_in_monomial_basis(
        &self,
        e: &RingElement,
    ) -> Result<BTreeMap<Vec<u32>, QPolynomial>> {
        if e.n() != self.n {
            return Err(Error::SizeMismatch {
                left: e.n(),
                right: self.n,
            });
        }
        let mut out: BTreeMap<Vec<u32>, QPolynomial> = BTreeMap::new();
        let mut residual = e.clone();
        loop {
            let Some(d) = residual.terms().next().map(|(key, _)| key.q.clone()) else {
                break;
            };
            let component = residual.q_component(&d);
            let mut poly = super::xpoly::XPolynomial::zero(self.n);
            for (w, c) in &component {
                poly = poly.add_scaled(self.schubert.get(w), *c);
            }
            for (exps, c) in poly.terms() {
                if exps[self.n - 1] != 0 {
                    return Err(Error::NonIntegralSolve(format!(
                        "monomial {exps:?} involves x_{}",
                        self.n
                    )));
                }
                let a = exps[..self.n - 1].to_vec();
                let image = self.monomial_eval(&a).map_err(|err| {
                    Error::NonIntegralSolve(format!("monomial {a:?} not evaluable: {err}"))
                })?;
                residual.add_scaled_shifted(&image, -c, &d);
                out.entry(a).or_default().add_term(d.clone(), c);
            }
            if !residual.q_component(&d).is_empty() {
                return Err(Error::NonIntegralSolve(format!(
                    "q^{d:?} component did not clear"
                )));
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    fn schubert_expansion(&self, w: &Permutation) -> Result<BTreeMap<Vec<u32>, QPolynomial>> {
        if let Some(x) = self.expansions.read().unwrap().get(w) {
            return Ok(x.clone());
        }
        let x = self.expand_in_monomial_basis(&RingElement::schubert(w))?;
        self.expansions
            .write()
            .unwrap()
            .insert(w.clone(), x.clone());
        Ok(x)
    }

    /// `σ_u · σ_v`.
    pub fn product(&self, u: &Permutation, v: &Permutation) -> Result<RingElement> {
        if u.n() != self.n || v.n() != self.n {
            return Err(Error::SizeMismatch {
                left: u.n(),
                right: v.n(),
            });
        }
        self.multiply(&RingElement::schubert(u), &RingElement::schubert(v))
    }

    /// Product of two arbitrary ring elements.
    pub fn multiply(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        if a.n() != self.n || b.n() != self.n {
            return Err(Error::SizeMismatch {
                left: a.n(),
                right: b.n(),
            });
        }
        let mut out = RingElement::zero(self.n);
        let mut applied: HashMap<Vec<u32>, RingElement> = HashMap::new();
        for (key, c) in a.terms() {
            for (exps, coeffs) in self.schubert_expansion(&key.perm)? {
                if !applied.contains_key(&exps) {
                    let value = self.apply_monomial(&exps, b)?;
                    applied.insert(exps.clone(), value);
                }
                let xb = &applied[&exps];
                for (d, cd) in coeffs.terms() {
                    let c2 = c.checked_mul(cd).expect("coefficient overflow");
                    out.add_scaled_shifted(xb, c2, &d.plus(&key.q));
                }
            }
        }
        Ok(out)
    }
}

/// Free-standing form of [`QuantumRing::monomial_eval`]; `n = exps.len() + 1`.
pub fn monomial_eval(exps: &[u32]) -> Result<RingElement> {
    QuantumRing::new(exps.len() + 1).monomial_eval(exps)
}

/// Free-standing form of [`QuantumRing::expand_in_monomial_basis`].
pub fn expand_in_monomial_basis(e: &RingElement) -> Result<BTreeMap<Vec<u32>, QPolynomial>> {
    QuantumRing::new(e.n()).expand_in_monomial_basis(e)
}

/// `σ_u · σ_v` in `QH*(Fl(n))`.
pub fn quantum_product(u: &Permutation, v: &Permutation) -> Result<RingElement> {
    if u.n() != v.n() {
        return Err(Error::SizeMismatch {
            left: u.n(),
            right: v.n(),
        });
    }
    QuantumRing::new(u.n()).product(u, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qring::monk::monk_multiply;

    fn p(v: &[usize]) -> Permutation {
        Permutation::from_one_line(v.to_vec()).unwrap()
    }

    #[test]
    fn monomial_examples() {
        let ring = QuantumRing::new(3);
        assert_eq!(
            ring.monomial_eval(&[0, 0]).unwrap(),
            RingElement::schubert(&Permutation::identity(3))
        );
        assert_eq!(
            monomial_eval(&[1]).unwrap(),
            RingElement::schubert(&p(&[2, 1]))
        );
        assert_eq!(
            ring.monomial_eval(&[2, 0]).unwrap().to_string(),
            "s[3,1,2] + q1*s[1,2,3]"
        );
        assert_eq!(
            ring.monomial_eval(&[3, 0]),
            Err(Error::ExponentOutOfStaircase(vec![3, 0]))
        );
        assert_eq!(
            ring.monomial_eval(&[0, 2]),
            Err(Error::ExponentOutOfStaircase(vec![0, 2]))
        );
    }

    #[test]
    fn monomial_expansion_examples() {
        let id =
            expand_in_monomial_basis(&RingElement::schubert(&Permutation::identity(3))).unwrap();
        assert_eq!(id.len(), 1);
        assert_eq!(id[&vec![0, 0]], QPolynomial::constant(3, 1));

        let s1 = expand_in_monomial_basis(&RingElement::schubert(&p(&[2, 1]))).unwrap();
        assert_eq!(s1.len(), 1);
        assert_eq!(s1[&vec![1]], QPolynomial::constant(2, 1));

        let e = expand_in_monomial_basis(&RingElement::schubert(&p(&[3, 1, 2]))).unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e[&vec![2, 0]], QPolynomial::constant(3, 1));
        assert_eq!(e[&vec![0, 0]].to_string(), "-q1");
    }

    #[test]
    fn expansion_reconstructs_element() {
        let ring = QuantumRing::new(4);
        for w in Permutation::all(4) {
            let sigma = RingElement::schubert(&w);
            let exp = ring.expand_in_monomial_basis(&sigma).unwrap();
            let mut rebuilt = RingElement::zero(4);
            for (a, c) in &exp {
                let image = ring.monomial_eval(a).unwrap();
                for (d, cd) in c.terms() {
                    rebuilt.add_scaled_shifted(&image, cd, d);
                }
            }
            assert_eq!(rebuilt, sigma, "w = {w:?}");
        }
    }

    #[test]
    fn product_examples() {
        let v = p(&[3, 1, 2]);
        assert_eq!(
            quantum_product(&Permutation::identity(3), &v).unwrap(),
            RingElement::schubert(&v)
        );
        let s = p(&[2, 1]);
        assert_eq!(quantum_product(&s, &s).unwrap().to_string(), "q1*s[1,2]");
        let s = p(&[2, 1, 3]);
        assert_eq!(
            quantum_product(&s, &s).unwrap(),
            monk_multiply(1, &s).unwrap()
        );
        assert!(quantum_product(&s, &p(&[2, 1])).is_err());
    }

    #[test]
    fn s3_table_is_symmetric_graded_and_positive() {
        let ring = QuantumRing::new(3);
        for u in Permutation::all(3) {
            for v in Permutation::all(3) {
                let uv = ring.product(&u, &v).unwrap();
                assert_eq!(uv, ring.product(&v, &u).unwrap());
                assert!(uv.is_homogeneous_of(u.length() + v.length()));
                assert!(uv.terms().all(|(_, c)| c > 0));
            }
        }
    }
}
