//! Sharp constant of the L² Markov inequality `‖p′‖ ≤ c_n(λ)‖p‖` for
//! polynomials of degree `n` under the Gegenbauer weight `(1−t²)^{λ−1/2}`.
//!
//! `c_n(λ)² = 4/μ₁` where `μ₁` is the smallest eigenvalue of a positive
//! definite Jacobi matrix; see [`markov_constant`].

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod bounds;
pub mod closed_forms;
pub mod error;
pub mod oracle;
pub mod real;
pub mod recurrence;
pub mod spectral;
pub mod validate;

pub use bounds::{envelope, Bound, BoundSource, BoundsReport, Envelope};
pub use closed_forms::{a1, a2, d2, q_coefficients, r_lambda, ArithmeticKind, QCoefficients};
pub use error::{Error, Result};
pub use real::{Ext, Field, Precision, Real};
pub use recurrence::{build_coeffs, Branch, ProblemSpec, RecurrenceCoeffs};
pub use spectral::{
    jacobi_matrix, markov_constant, smallest_eigenvalue, Backend, BracketSource, MarkovResult,
    SolveOptions, TridiagonalMatrix,
};
