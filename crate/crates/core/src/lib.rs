//! Symbolic computations in type A KLR algebras: normal forms, standard
//! modules, explicit projective resolutions of semicuspidal standard modules
//! and verification of their homological properties.

pub mod algebra;
pub mod error;
pub mod lie;
pub mod linalg;
pub mod modules;
pub mod resolution;
pub mod symgroup;
pub mod verify;

pub use error::{Error, Result};
