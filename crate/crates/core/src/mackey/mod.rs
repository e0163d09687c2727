//! Mackey functor data, the MF0 to MF6 checker, and concrete instances.
//!
//! Orientation: for `H ⊆ K`, restriction goes `M(K) → M(H)` and transfer
//! `M(H) → M(K)`. Integer maps act on column vectors, and `f.then(g)` is
//! `g ∘ f`.

mod abelian;
mod data;
mod instances;
mod k0;

pub use abelian::{AbKind, AbMap, AbValue, MapData};
pub use data::{check_axioms, AxiomReport, AxiomVerdict, MackeyData};
pub use instances::{burnside_mackey, constant_functor, galois_gring, quillen_kn_instance, units_galois_mackey, units_mackey};
pub use k0::{dress_kuku_compare, endomorphism_mackey, k0_twisted_mackey, DressKukuReport, EndomorphismMackey, K0Mackey, SquareReport};
