//! Exact integer polynomials and the named families built from them.

pub mod families;
mod gamma;
mod poly;
mod symmetric;
mod transform;

pub use gamma::{gamma_a_formulas, GammaFormulas};
pub use poly::IntPolynomial;
pub use symmetric::{symmetric_decomposition, SymmetricDecomposition};
pub use transform::{f_transform, h_transform, TransformTable};
