//! Exact sparse polynomials over `Q`, truncated power series and the
//! fraction-clearing helpers used by the weight functions and the
//! localization formulas.

mod det;
mod linear;
mod poly;
mod series;

pub use det::determinant;
pub use linear::{block_permutations, divide_by_linear, sum_fractions, symmetrize};
pub use poly::{
    alphas, betas, complete, elementary, product, q, Coeff, Degree, Monomial, MultiPoly, Var,
};
pub use series::TruncatedSeries;
