//! Exact linear algebra over finite fields.

pub mod algebra;
pub mod field;
pub mod intmat;
pub mod matrix;

pub use algebra::{AlgebraHom, BlockData, StructureAlgebra};
pub use field::{FiniteField, PrimeField};
pub use intmat::IntMatrix;
pub use matrix::{rref_solve, Matrix, Solution, Subspace};
