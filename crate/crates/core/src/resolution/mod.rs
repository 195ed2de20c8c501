//! The resolution of `Delta(alpha^m)`, the complex `Q`, chain maps between them and products.

pub mod builder;
pub mod comb;
pub mod complex;

pub use builder::*;
pub use comb::{Lambda, MultiComp, Params};
pub use complex::{check_matrix, Matrix, ProjComplex, Summand};
