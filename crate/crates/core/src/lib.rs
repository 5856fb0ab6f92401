//! Exact symbolic computations on the centerless twisted N=2 superconformal
//! algebra: the super bracket, tensor calculus, coboundary cobrackets and the
//! classical Yang-Baxter expression, and windowed first-cohomology checks
//! for derivations into 𝓛⊗𝓛.

pub mod algebra;
pub mod bialgebra;
pub mod checks;
pub mod cli;
pub mod cohomology;
pub mod error;
pub mod linear;
pub mod linsolve;
pub mod parse;
pub mod scalar;
pub mod tensor;

pub use algebra::{bracket, bracket_basis, jacobi_defect, Generator, Kind, Parity};
pub use error::{Error, Result};
pub use linear::{Element, LinComb, Tensor2, Tensor3};
pub use parse::{parse_element, parse_expression, parse_tensor2, parse_tensor3, Expression};
pub use scalar::{HalfInt, Rational};
