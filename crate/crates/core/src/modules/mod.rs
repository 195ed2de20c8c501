//! Standard modules realized inside induction products of cuspidal modules.

pub mod character;
pub mod induced;
pub mod standard;

pub use character::{laurent_mul, quantum_factorial, quantum_integer, Character, Laurent};
pub use induced::{BasisVec, InducedModule, Vector};
pub use standard::{coordinates, Piece, StandardModule};
