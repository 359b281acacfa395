//! Quantum Monk's formula for the complete flag manifold `Fl(n)`.
//!
//! * [`perm`]: permutations, lengths, descents, the rank function.
//! * [`parabolic`]: dimension sequences and the block-sorting constructions
//!   `w̃`, `w̄`, `ŵ` relating Schubert varieties in different flag varieties.
//! * [`qring`]: the quantum cohomology ring over `Z[q_1..q_{n-1}]`, quantum
//!   Monk multiplication, divisor Gromov–Witten invariants, general products,
//!   and the classical Schubert polynomial oracle.
//! * [`ffgeom`]: brute-force geometry over prime fields that checks the
//!   kernel/span lemmas and reproduces the divisor curve counts.

pub mod error;
pub mod ffgeom;
pub mod parabolic;
pub mod perm;
pub mod qring;

pub use error::{Error, Result};
pub use parabolic::DimSequence;
pub use perm::Permutation;
