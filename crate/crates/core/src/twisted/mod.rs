//! G-rings, twisted group rings `R_θ[H]`, the maps `Τ(H, x, K)` between them,
//! and their presentation as algebras over the prime field.

pub mod auslander;
pub mod bridge;
pub mod gring;
pub mod semilinear;
pub mod tgr;

pub use auslander::{auslander_map, AuslanderMap, AuslanderVerdict, EndomorphismRing};
pub use bridge::{as_structure_algebra, hom_to_algebra, AlgebraBridge};
pub use gring::{ActionSpec, FixedSubring, GRing, Semisimplicity};
pub use semilinear::SemilinearModule;
pub use tgr::{
    gamma, left_basis_decompose, rho, right_basis, right_basis_express, shift_map, tau_hom, tgr_multiply, LeftBasis,
    RightBasis, ShiftMap, TGRElement, TGRHom, TwistedGroupRing,
};
