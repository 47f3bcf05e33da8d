//! Exact Schubert calculus on Grassmannians.
//!
//! The cohomology ring of the Grassmannian of k-planes in n-space is realized
//! here as a commutative ring of operators acting on the k-th exterior power
//! of a free module. Basis monomials `e^{i1} ∧ … ∧ e^{ik}` stand for Schubert
//! classes, the degree-raising operators `D_h` act by a restricted composition
//! sum (the Pieri rule), and determinants in the `D_h` recover every class
//! from the bottom one (the Giambelli rule). Truncating to indices `≤ n` and
//! folding overflowing indices back with a power of `q` yields the small
//! quantum ring, so Gromov-Witten numbers come out of the same machinery.
//!
//! Everything is exact: coefficients are arbitrary-precision integers, or
//! integer polynomials in `q` on the quantum side.
//!
//! - [`multivector`]: sparse exterior-algebra arithmetic and the
//!   partition/monomial dictionary.
//! - [`derivation`]: the operators `D_h`, their finite-rank projection, and
//!   the quantum-reduced action.
//! - [`schubert`]: Giambelli operator polynomials, class products,
//!   intersection numbers, and Gromov-Witten numbers.
//! - [`oracle`]: slow independent reference implementations used by tests and
//!   by the CLI `verify` command.

pub mod derivation;
pub mod multivector;
pub mod oracle;
pub mod schubert;

mod error;

pub use error::{Error, Result};
