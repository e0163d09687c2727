use thiserror::Error;

/// Errors raised while building or checking algebraic objects.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("table is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),

    #[error("group order {order} exceeds the configured bound {bound}")]
    GroupTooLarge { order: usize, bound: usize },

    #[error("subgroup containment fails: {0}")]
    Containment(String),

    #[error("element {0} is not in the required subgroup")]
    NotInSubgroup(usize),

    #[error("invalid G-set: {0}")]
    InvalidGSet(String),

    #[error("map is not equivariant: g={g}, x={x}")]
    NotEquivariant { g: usize, x: usize },

    #[error("span mismatch: {0}")]
    SpanMismatch(String),

    #[error("group mismatch: {0}")]
    GroupMismatch(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("polynomial is not irreducible over GF({p}): {modulus:?}")]
    Reducible { p: u32, modulus: Vec<u32> },

    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),

    #[error("|G| = {order} is not invertible in {ring}: the group order must be a unit of the base ring")]
    OrderNotInvertible { order: usize, ring: String },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("not an algebra: {0}")]
    InvalidAlgebra(String),

    #[error("not a ring homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("idempotent splitting failed: {0}")]
    Splitting(String),

    #[error("structural check failed: {0}")]
    Structural(String),

    #[error("conjugation condition fails: x^-1 h x = {image} is outside the target subgroup (h = {h})")]
    Conjugation { h: usize, image: usize },

    #[error("not semilinear: h={h}, r={r}, m={m}")]
    NotSemilinear { h: usize, r: usize, m: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid abelian group data: {0}")]
    InvalidAbelian(String),

    #[error("oracle disagreement: {0}")]
    Oracle(String),
}

pub type Result<T> = std::result::Result<T, Error>;
