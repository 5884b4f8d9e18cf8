//! Operation-style entry points mirroring the methods on [`LaurentPoly`] and
//! [`PolyMatrix`]; convenient for table-driven callers such as the CLI.

use crate::error::LaurentError;
use crate::eval::EvaluationPoint;
use crate::matrix::PolyMatrix;
use crate::poly::{LaurentPoly, Rational};

/// Arithmetic operations on Laurent polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpOp {
    Add,
    Sub,
    Mul,
    Neg,
    IntPow,
}

/// Second operand of [`lp_arith`].
#[derive(Clone, Debug)]
pub enum LpOperand<'a> {
    Poly(&'a LaurentPoly),
    Int(i64),
}

/// Applies `op` to `x` and `y`. `neg` ignores `y`; `int_pow` expects an integer.
pub fn lp_arith(op: LpOp, x: &LaurentPoly, y: LpOperand<'_>) -> Result<LaurentPoly, LaurentError> {
    let as_poly = |y: &LpOperand<'_>| match y {
        LpOperand::Poly(p) => (*p).clone(),
        LpOperand::Int(k) => LaurentPoly::from_int(*k),
    };
    match op {
        LpOp::Add => Ok(x + &as_poly(&y)),
        LpOp::Sub => Ok(x - &as_poly(&y)),
        LpOp::Mul => Ok(x * &as_poly(&y)),
        LpOp::Neg => Ok(-x),
        LpOp::IntPow => match y {
            LpOperand::Int(k) => x.pow(k),
            LpOperand::Poly(_) => Err(LaurentError::DimensionMismatch("int_pow needs an integer exponent".into())),
        },
    }
}

/// True iff `x` is a unit (exactly one term).
pub fn lp_is_unit(x: &LaurentPoly) -> bool {
    x.is_unit()
}

/// Exact value of `x` at `p`.
pub fn lp_eval(x: &LaurentPoly, p: &EvaluationPoint) -> Rational {
    x.eval(p)
}

/// Matrix operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatOp {
    Mul,
    Add,
    DirectSum,
    Kronecker,
    Transpose,
    ScalarMul,
}

/// Second operand of [`mat_arith`].
#[derive(Clone, Debug)]
pub enum MatOperand<'a> {
    Matrix(&'a PolyMatrix),
    Scalar(&'a LaurentPoly),
    None,
}

/// Applies `op` to `a` and `b`; `transpose` ignores `b`, `scalar_mul` expects a scalar.
pub fn mat_arith(op: MatOp, a: &PolyMatrix, b: MatOperand<'_>) -> Result<PolyMatrix, LaurentError> {
    let need_matrix = |b: &MatOperand<'_>| -> Result<PolyMatrix, LaurentError> {
        match b {
            MatOperand::Matrix(m) => Ok((*m).clone()),
            _ => Err(LaurentError::DimensionMismatch("operation needs a matrix operand".into())),
        }
    };
    match op {
        MatOp::Mul => a.mul(&need_matrix(&b)?),
        MatOp::Add => a.add(&need_matrix(&b)?),
        MatOp::DirectSum => Ok(a.direct_sum(&need_matrix(&b)?)),
        MatOp::Kronecker => Ok(a.kronecker(&need_matrix(&b)?)),
        MatOp::Transpose => Ok(a.transpose()),
        MatOp::ScalarMul => match b {
            MatOperand::Scalar(y) => Ok(a.scale(y)),
            _ => Err(LaurentError::DimensionMismatch("scalar_mul needs a scalar operand".into())),
        },
    }
}

/// Exact fraction-free determinant.
pub fn mat_det(a: &PolyMatrix) -> Result<LaurentPoly, LaurentError> {
    a.det()
}

/// Maximum rank over the evaluation points.
pub fn mat_rank_probabilistic(a: &PolyMatrix, points: &[EvaluationPoint]) -> usize {
    a.rank_probabilistic(points)
}
