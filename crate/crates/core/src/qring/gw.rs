use super::element::Multidegree;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// If `t` is a transposition `t_{kl}`, return `(k, l)`.
pub fn as_transposition(t: &Permutation) -> Option<(usize, usize)> {
    let moved: Vec<usize> = (1..=t.n()).filter(|&i| t.get(i) != i).collect();
    match moved.as_slice() {
        &[k, l] if t.get(k) == l => Some((k, l)),
        _ => None,
    }
}

/// The divisor Gromov–Witten invariant `<Ω_u, Ω_w, Ω_{s_r}>_d`.
///
/// Nonzero only when `ℓ(u) + ℓ(w) + 1 = C(n,2) + 2|d|`. For `d ≠ 0` it is 1
/// iff `d = d_{ij}` with `i <= r < j` and `u^{-1} w_0 w = t_{ij}`. For `d = 0`
/// the classical Monk coefficient is returned: 1 iff `w_0 u = w t_{kl}` with
/// `k <= r < l`.
pub fn gw_divisor(u: &Permutation, w: &Permutation, r: usize, d: &Multidegree) -> Result<u8> {
    let n = u.n();
    if w.n() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: w.n(),
        });
    }
    if d.n() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: d.n(),
        });
    }
    if !(1 <= r && r < n) {
        return Err(Error::IndexOutOfRange(format!(
            "divisor index r={r} for n={n}"
        )));
    }
    let expected_dim = n * (n - 1) / 2 + 2 * d.total() as usize;
    if u.length() + w.length() + 1 != expected_dim {
        return Ok(0);
    }
    let hit = if d.is_zero() {
        let target = u.dual();
        as_transposition(&w.inverse().compose(&target)?).is_some_and(|(k, l)| k <= r && r < l)
    } else {
        match d.as_d_ij() {
            Some((i, j)) if i <= r && r < j => {
                let t = u.inverse().compose(&w.dual())?;
                as_transposition(&t) == Some((i, j))
            }
            _ => false,
        }
    };
    Ok(u8::from(hit))
}
