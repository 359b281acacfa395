//! Brute-force geometry over finite prime fields.
//!
//! Subspaces are kept in reduced row-echelon form so equality and hashing are
//! exact. On top of that sit partial flags, Schubert rank conditions, the
//! rational curves of multidegree `d_{ij}` described by their kernel flag and
//! a single extra subspace `W`, and the exhaustive checks built from them.

mod budget;
mod curve;
mod flag;
mod subspace;
mod verify;

pub use budget::{Budget, DEFAULT_MAX_OPS};
pub use curve::{
    construct_unique_curve, curve_kernel, curve_point, curve_points, curve_span, divisor_point,
    enumerate_curves, genericity_check, kernel_dims, span_dims, CurveDatum,
};
pub use flag::{
    enumerate_flags, flag_count, in_schubert, random_flag, FlagPoint, SchubertCondition,
};
pub use subspace::{
    enumerate_between, enumerate_subspaces, gaussian_binomial, is_prime, Subspace,
    DEFAULT_MAX_PRIME,
};
pub use verify::{
    count_curves_through, sweep_curve_count, sweep_lemma_kernel, sweep_lemma_span,
    sweep_prop_kernel_span, verify_lemma_kernel, verify_lemma_span, verify_prop_kernel_span,
    Report, DEFAULT_RETRIES,
};
