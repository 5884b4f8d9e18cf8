//! Exact arithmetic over the coefficient ring `ℚ[t^{±1}, q^{±1}]` and dense
//! linear algebra over it.
//!
//! * [`LaurentPoly`] is a canonical sparse Laurent polynomial in the two fixed
//!   variables `t` and `q` with rational coefficients.
//! * [`PolyMatrix`] is a dense row-major matrix of Laurent polynomials acting
//!   on column vectors from the left.
//! * [`EvaluationPoint`] and [`RatMatrix`] support specialisation at rational
//!   points, used for probabilistic rank estimates.
//!
//! Determinants are computed fraction-free (Bareiss elimination with exact
//! division); no fraction-field arithmetic is ever performed.

mod error;
mod eval;
mod matrix;
mod ops;
mod poly;

pub use error::LaurentError;
pub use eval::{seeded_points, EvaluationPoint, RatMatrix};
pub use matrix::PolyMatrix;
pub use ops::{
    lp_arith, lp_eval, lp_is_unit, mat_arith, mat_det, mat_rank_probabilistic, LpOp, LpOperand, MatOp, MatOperand,
};
pub use poly::{LaurentPoly, Rational};
