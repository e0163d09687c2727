//! Twisted group rings `R_θ[H]` for a finite group acting on a finite
//! commutative ring, the induced restriction / transfer / conjugation maps on
//! `K₀`, and exhaustive checks of the Mackey functor axioms.
//!
//! The crate is organised bottom-up:
//!
//! * [`group`]: finite groups as Cayley tables, subgroups, cosets, double cosets.
//! * [`burnside`]: finite G-sets, spans, marks and the Burnside ring.
//! * [`linalg`]: prime fields, finite fields, matrices and semisimple
//!   structure-constant algebras (center, central idempotents, blocks).
//! * [`ring`]: finite commutative rings with full element tables.
//! * [`twisted`]: G-rings, twisted group rings and their homomorphisms.
//! * [`module`]: explicit modules, extension/restriction of scalars, `K₀`,
//!   and the double-coset decomposition witness.
//! * [`mackey`]: Mackey functor data, the axiom checker and concrete instances.
//! * [`job`]: the JSON batch front end used by the `twisted-mackey` binary.

pub mod burnside;
pub mod error;
pub mod group;
pub mod job;
pub mod linalg;
pub mod mackey;
pub mod module;
pub mod ring;
pub mod twisted;

pub use error::{Error, Result};
