//! The small quantum cohomology ring `QH*(Fl(n))` over `Z[q_1, ..., q_{n-1}]`.

mod element;
mod gw;
mod monk;
mod product;
mod schubert;
mod xpoly;

use std::fmt;

pub use element::{BasisKey, Multidegree, QPolynomial, RingElement};
pub use gw::{as_transposition, gw_divisor};
pub use monk::{monk_multiply, multiply_divisor, x_operator};
pub use product::{expand_in_monomial_basis, monomial_eval, quantum_product, QuantumRing};
pub use schubert::{expand_poly_in_schubert, schubert_poly, staircase_monomial, SchubertTable};
pub use xpoly::XPolynomial;

/// Write `± c*body` for a sum; `first` suppresses the leading ` + `.
pub(crate) fn write_signed_term(
    f: &mut fmt::Formatter<'_>,
    c: i64,
    body: &str,
    first: bool,
) -> fmt::Result {
    let sign = if c < 0 { "-" } else { "+" };
    if first {
        if c < 0 {
            f.write_str("-")?;
        }
    } else {
        write!(f, " {sign} ")?;
    }
    let mag = c.unsigned_abs();
    match (mag, body.is_empty()) {
        (_, true) => write!(f, "{mag}"),
        (1, false) => f.write_str(body),
        (_, false) => write!(f, "{mag}*{body}"),
    }
}
