use super::element::{Multidegree, RingElement};
use crate::error::{Error, Result};
use crate::perm::Permutation;

fn check_r(n: usize, r: usize) -> Result<()> {
    if !(1 <= r && r < n) {
        return Err(Error::IndexOutOfRange(format!(
            "divisor index r={r} for n={n}"
        )));
    }
    Ok(())
}

/// Quantum Monk's rule: the product `σ_{s_r} · σ_w`.
///
/// Classical terms `σ_{w t_kl}` for `k <= r < l` with `ℓ(w t_kl) = ℓ(w) + 1`;
/// quantum terms `q_{ij} σ_{w t_ij}` for `i <= r < j` with
/// `ℓ(w t_ij) = ℓ(w) - 2(j - i) + 1`.
pub fn monk_multiply(r: usize, w: &Permutation) -> Result<RingElement> {
    let n = w.n();
    check_r(n, r)?;
    let mut out = RingElement::zero(n);
    let classical = Multidegree::zero(n);
    for k in 1..=r {
        for l in r + 1..=n {
            let delta = w.swap_length_delta(k, l);
            if delta == 1 {
                out.add_term(classical.clone(), w.swap_positions(k, l), 1);
            } else if delta == 1 - 2 * (l - k) as isize {
                out.add_term(Multidegree::d_ij(n, k, l)?, w.swap_positions(k, l), 1);
            }
        }
    }
    Ok(out)
}

/// `Z[q]`-linear extension of [`monk_multiply`].
pub fn multiply_divisor(r: usize, e: &RingElement) -> Result<RingElement> {
    check_r(e.n(), r)?;
    let mut out = RingElement::zero(e.n());
    for (key, c) in e.terms() {
        let m = monk_multiply(r, &key.perm)?;
        out.add_scaled_shifted(&m, c, &key.q);
    }
    Ok(out)
}

/// Action of `x_i = σ_{s_i} - σ_{s_{i-1}}` (with `σ_{s_0} = 0`), `1 <= i <= n-1`.
pub fn x_operator(i: usize, e: &RingElement) -> Result<RingElement> {
    let n = e.n();
    if !(1 <= i && i < n) {
        return Err(Error::IndexOutOfRange(format!("x_{i} for n={n}")));
    }
    let mut out = multiply_divisor(i, e)?;
    if i > 1 {
        out = out.sub(&multiply_divisor(i - 1, e)?);
    }
    Ok(out)
}
