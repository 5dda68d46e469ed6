//! Exact integers, rationals, quadratic surds and dense polynomials.

pub mod poly;
pub mod scalar;
pub mod surd;

pub use poly::{
    coeffs_nonneg, poly_compose_affine, poly_derivative, poly_eval, poly_mul, poly_sub, IntPoly,
    Poly, RatPoly,
};
pub use scalar::{binomial, rat, rat_cmp, rat_int, Int, Rat, Scalar};
pub use surd::{surd_sign, QuadSurd, SurdExpr};
