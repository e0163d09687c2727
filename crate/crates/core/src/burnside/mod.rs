//! Finite G-sets, spans composed by pullback, and the Burnside ring.
//!
//! Isomorphism of G-sets is decided by marks, and a span is stored as the
//! sorted list of its transitive pieces, each reduced to a canonical anchor.

mod gset;
mod span;

pub use gset::{
    are_conjugate_in, class_index, marks_vector, orbit_decompose, pullback, subgroup_classes, GMap, GSet, Orbit,
};
pub use span::{
    burnside_hom_basis, burnside_product, compose_spans, full_hom_basis, BurnsideElement, SpanClass, SpanPiece,
};
