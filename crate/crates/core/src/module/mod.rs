//! Explicit modules over structure algebras, change of rings, and `K₀`.

mod witness;

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{AlgebraHom, BlockData, IntMatrix, Matrix, StructureAlgebra, Subspace};

pub use witness::{mackey_decomposition_witness, WitnessReport};

/// A finite-dimensional left module: one action matrix per algebra basis
/// element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraModule {
    algebra: Arc<StructureAlgebra>,
    dim: usize,
    action: Vec<Matrix>,
}

impl AlgebraModule {
    /// Checks `ρ(1) = I` and `ρ(x)ρ(g) = ρ(xg)` for every basis element `x`
    /// and every algebra generator `g`, which gives multiplicativity on all of
    /// `A` by induction on monomials.
    pub fn new(algebra: Arc<StructureAlgebra>, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != algebra.dim() || action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::InvalidModule(format!(
                "need {} action matrices of size {dim}x{dim}",
                algebra.dim()
            )));
        }
        let module = Self { algebra, dim, action };
        if module.act(module.algebra.unit()) != Matrix::identity(module.algebra.field(), dim) {
            return Err(Error::InvalidModule("the unit does not act as the identity".into()));
        }
        let gens = module.algebra.generators().to_vec();
        let d = module.algebra.dim();
        let bad = (0..d).into_par_iter().find_map_first(|i| {
            gens.iter().copied().find(|&g| {
                let lhs = module.action[i].mul(&module.action[g]);
                let rhs = module.act_sparse(module.algebra.basis_product(i, g));
                lhs != rhs
            }).map(|g| (i, g))
        });
        if let Some((i, g)) = bad {
            let labels = module.algebra.labels();
            return Err(Error::InvalidModule(format!("rho({}) rho({}) != rho({} * {})", labels[i], labels[g], labels[i], labels[g])));
        }
        Ok(module)
    }

    /// `A` acting on itself by left multiplication.
    pub fn regular(algebra: Arc<StructureAlgebra>) -> Self {
        let action = (0..algebra.dim()).map(|i| algebra.left_mult_matrix(&algebra.basis_vector(i))).collect();
        Self { dim: algebra.dim(), algebra, action }
    }

    pub fn zero(algebra: Arc<StructureAlgebra>) -> Self {
        let f = algebra.field();
        let action = (0..algebra.dim()).map(|_| Matrix::zeros(f, 0, 0)).collect();
        Self { algebra, dim: 0, action }
    }

    pub fn algebra(&self) -> &Arc<StructureAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    /// `ρ(x)` for an algebra element in coordinates.
    pub fn act(&self, x: &[u32]) -> Matrix {
        let mut m = Matrix::zeros(self.algebra.field(), self.dim, self.dim);
        for (i, &c) in x.iter().enumerate() {
            m.add_scaled(c, &self.action[i]);
        }
        m
    }

    fn act_sparse(&self, x: &[(usize, u32)]) -> Matrix {
        let mut m = Matrix::zeros(self.algebra.field(), self.dim, self.dim);
        for &(i, c) in x {
            m.add_scaled(c, &self.action[i]);
        }
        m
    }

    pub fn direct_sum(&self, other: &AlgebraModule) -> Result<AlgebraModule> {
        if self.algebra != other.algebra {
            return Err(Error::InvalidModule("direct sum over different algebras".into()));
        }
        let n = self.dim + other.dim;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| {
                let mut m = Matrix::zeros(self.algebra.field(), n, n);
                m.set_block(0, 0, a);
                m.set_block(self.dim, self.dim, b);
                m
            })
            .collect();
        Ok(AlgebraModule { algebra: Arc::clone(&self.algebra), dim: n, action })
    }

    /// The submodule spanned by `vectors`, in the echelon basis of their span.
    pub fn submodule(&self, vectors: &[Vec<u32>]) -> Result<AlgebraModule> {
        let f = self.algebra.field();
        let space = Subspace::span(f, self.dim, vectors);
        let basis = space.basis().to_vec();
        let action = self
            .action
            .iter()
            .map(|m| {
                let cols = basis
                    .iter()
                    .map(|v| {
                        space
                            .coordinates(&m.mul_vec(v))
                            .ok_or_else(|| Error::InvalidModule("subspace is not invariant".into()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Matrix::from_columns(f, basis.len(), &cols))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(AlgebraModule { algebra: Arc::clone(&self.algebra), dim: basis.len(), action })
    }

    /// The left ideal `A·e` as a left module.
    pub fn left_ideal(algebra: &Arc<StructureAlgebra>, e: &[u32]) -> Result<AlgebraModule> {
        let regular = AlgebraModule::regular(Arc::clone(algebra));
        let vectors: Vec<Vec<u32>> = (0..algebra.dim()).map(|i| algebra.mul(&algebra.basis_vector(i), e)).collect();
        regular.submodule(&vectors)
    }
}

/// Restriction along `f: A → B`: `ρ_A(a) = ρ_B(f(a))`.
pub fn restrict_scalars(f: &AlgebraHom, m: &AlgebraModule) -> Result<AlgebraModule> {
    if m.algebra.as_ref() != f.target().as_ref() {
        return Err(Error::InvalidModule("module is not over the target algebra".into()));
    }
    let action = (0..f.source().dim()).map(|i| m.act(&f.matrix().column(i))).collect();
    Ok(AlgebraModule { algebra: Arc::clone(f.source()), dim: m.dim, action })
}

/// Extension `B ⊗_A M` along `f: A → B`, where `B` is free as a right
/// `A`-module on `right_basis` (elements of `B`).
///
/// The carrier is `⊕ⱼ zⱼ ⊗ M`; `b·zⱼ` is rewritten as `Σ_{j'} z_{j'}·f(a_{j'})`
/// and the `(j', j)` block of `ρ(b)` is `ρ_M(a_{j'})`.
pub fn extend_scalars(f: &AlgebraHom, right_basis: &[Vec<u32>], m: &AlgebraModule) -> Result<AlgebraModule> {
    if m.algebra.as_ref() != f.source().as_ref() {
        return Err(Error::InvalidModule("module is not over the source algebra".into()));
    }
    let (a, b) = (f.source(), f.target());
    let field = a.field();
    let (da, db, rank) = (a.dim(), b.dim(), right_basis.len());
    if rank * da != db {
        return Err(Error::Unsupported(format!(
            "{rank} right basis elements cannot span a {db}-dimensional algebra over a {da}-dimensional one"
        )));
    }
    // Φ: (aⱼ) ↦ Σ zⱼ f(aⱼ)
    let mut cols = Vec::with_capacity(db);
    for z in right_basis {
        for i in 0..da {
            cols.push(b.mul(z, &f.matrix().column(i)));
        }
    }
    let phi = Matrix::from_columns(field, db, &cols);
    let phi_inv = phi
        .inverse()
        .ok_or_else(|| Error::Unsupported("target is not free on the given right basis".into()))?;
    let n = m.dim;
    let action = (0..db)
        .into_par_iter()
        .map(|s| {
            let bs = b.basis_vector(s);
            let mut rho = Matrix::zeros(field, rank * n, rank * n);
            for (j, z) in right_basis.iter().enumerate() {
                let coeffs = phi_inv.mul_vec(&b.mul(&bs, z));
                for j2 in 0..rank {
                    let block = m.act(&coeffs[j2 * da..(j2 + 1) * da]);
                    rho.set_block(j2 * n, j * n, &block);
                }
            }
            rho
        })
        .collect();
    AlgebraModule::new(Arc::clone(b), rank * n, action)
}

/// The ordered block decomposition of a semisimple algebra, used as the
/// basis of `K₀`.
#[derive(Debug, Clone, Serialize)]
pub struct K0Basis {
    pub idempotents: Vec<Vec<u32>>,
    pub blocks: Vec<BlockData>,
}

impl K0Basis {
    pub fn new(algebra: &StructureAlgebra) -> Result<Self> {
        let (idempotents, blocks) = algebra.blocks()?.into_iter().unzip();
        Ok(Self { idempotents, blocks })
    }

    pub fn rank(&self) -> usize {
        self.blocks.len()
    }
}

/// Multiplicities of the simple modules, in block order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct K0Class {
    pub multiplicities: Vec<i64>,
}

/// `[M]` with multiplicity `dim(e_c M) / (n_c d_c)` at block `c`.
pub fn k0_class(m: &AlgebraModule, basis: &K0Basis) -> Result<K0Class> {
    let multiplicities = basis
        .idempotents
        .iter()
        .zip(&basis.blocks)
        .map(|(e, d)| {
            let dim = m.act(e).rank();
            if !dim.is_multiple_of(d.simple_dim) {
                return Err(Error::Structural(format!(
                    "block component of dimension {dim} is not a multiple of the simple dimension {}",
                    d.simple_dim
                )));
            }
            Ok((dim / d.simple_dim) as i64)
        })
        .collect::<Result<_>>()?;
    Ok(K0Class { multiplicities })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChangeOfRings {
    Extend,
    Restrict,
}

/// The matrix of `K₀(f_!)` or `K₀(f^*)`, acting on multiplicity column
/// vectors. Column `c` is the class of the image of `A·e_c ≅ S_c^{n_c}`,
/// divided by `n_c`.
pub fn k0_induced_map(
    f: &AlgebraHom,
    kind: ChangeOfRings,
    right_basis: Option<&[Vec<u32>]>,
    source_k0: &K0Basis,
    target_k0: &K0Basis,
) -> Result<IntMatrix> {
    let (from_alg, from_k0, to_k0) = match kind {
        ChangeOfRings::Extend => (f.source(), source_k0, target_k0),
        ChangeOfRings::Restrict => (f.target(), target_k0, source_k0),
    };
    let columns = from_k0
        .idempotents
        .par_iter()
        .zip(&from_k0.blocks)
        .map(|(e, d)| {
            let ideal = AlgebraModule::left_ideal(from_alg, e)?;
            let image = match kind {
                ChangeOfRings::Extend => {
                    let z = right_basis.ok_or_else(|| Error::Unsupported("extension needs a right basis".into()))?;
                    extend_scalars(f, z, &ideal)?
                }
                ChangeOfRings::Restrict => restrict_scalars(f, &ideal)?,
            };
            let class = k0_class(&image, to_k0)?;
            class
                .multiplicities
                .iter()
                .map(|&v| {
                    if v % d.matrix_size as i64 != 0 {
                        Err(Error::Structural(format!("multiplicity {v} is not divisible by n_c = {}", d.matrix_size)))
                    } else {
                        Ok(v / d.matrix_size as i64)
                    }
                })
                .collect::<Result<Vec<i64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntMatrix::from_columns(to_k0.rank(), &columns))
}
