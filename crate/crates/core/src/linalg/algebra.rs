//! Finite-dimensional associative algebras over `GF(p)` given by structure
//! constants, with the semisimple toolkit: center, Berlekamp subalgebra,
//! primitive central idempotents and Wedderburn block data.

use std::sync::{Arc, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::field::PrimeField;
use crate::linalg::matrix::{Matrix, Subspace};

/// Sparse structure constants: `products[i * dim + j]` lists the non-zero
/// `(k, c)` with `bᵢ bⱼ = Σ c bₖ`.
#[derive(Debug, Clone)]
pub struct StructureAlgebra {
    field: PrimeField,
    dim: usize,
    products: Vec<Vec<(usize, u32)>>,
    unit: Vec<u32>,
    labels: Vec<String>,
    generators: OnceLock<Vec<usize>>,
}

impl PartialEq for StructureAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.products == other.products && self.unit == other.unit
    }
}

impl Eq for StructureAlgebra {}

/// Wedderburn invariants of one block `e·A ≅ M_n(GF(p^d))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BlockData {
    pub block_dim: usize,
    pub center_dim: usize,
    pub matrix_size: usize,
    pub simple_dim: usize,
}

impl StructureAlgebra {
    /// Builds the algebra and checks associativity on every basis triple and
    /// that `unit` is a two-sided identity.
    pub fn new(field: PrimeField, labels: Vec<String>, products: Vec<Vec<(usize, u32)>>, unit: Vec<u32>) -> Result<Self> {
        let dim = labels.len();
        if products.len() != dim * dim || unit.len() != dim {
            return Err(Error::InvalidAlgebra(format!(
                "dimension {dim} needs {} products and a unit of length {dim}",
                dim * dim
            )));
        }
        let products = products
            .into_iter()
            .map(|mut row| {
                row.retain(|&(_, c)| c % field.p() != 0);
                row.sort_unstable();
                row
            })
            .collect();
        let alg = Self { field, dim, products, unit, labels, generators: OnceLock::new() };
        alg.check_unit()?;
        alg.check_associative()?;
        Ok(alg)
    }

    /// Builds the algebra from a dense product rule on basis indices.
    pub fn from_dense(
        field: PrimeField,
        labels: Vec<String>,
        unit: Vec<u32>,
        product: impl Fn(usize, usize) -> Vec<u32> + Sync,
    ) -> Result<Self> {
        let dim = labels.len();
        let products = (0..dim * dim)
            .into_par_iter()
            .map(|ij| {
                let v = product(ij / dim, ij % dim);
                v.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, &c)| (k, c)).collect()
            })
            .collect();
        Self::new(field, labels, products, unit)
    }

    /// The subalgebra of `M_n(GF(p))` spanned by `basis`, which must contain
    /// the identity and be closed under products.
    pub fn from_matrices(field: PrimeField, labels: Vec<String>, basis: &[Matrix]) -> Result<(Self, Subspace)> {
        let n = basis.first().map_or(0, |m| m.rows());
        let flat: Vec<Vec<u32>> = basis.iter().map(|m| m.data().to_vec()).collect();
        let space = Subspace::span(field, n * n, &flat);
        if space.dim() != basis.len() {
            return Err(Error::InvalidAlgebra("matrix basis is linearly dependent".into()));
        }
        let coords_of = |m: &Matrix| {
            space
                .coordinates(m.data())
                .ok_or_else(|| Error::InvalidAlgebra("matrix span is not closed under products".into()))
        };
        // express everything in the echelon basis of the span
        let echelon: Vec<Matrix> = space
            .basis()
            .iter()
            .map(|v| Matrix::from_rows(field, &v.chunks(n).map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap())
            .collect();
        let mut products = Vec::with_capacity(echelon.len() * echelon.len());
        for a in &echelon {
            for b in &echelon {
                let c = coords_of(&a.mul(b))?;
                products.push(c.iter().enumerate().filter(|(_, &x)| x != 0).map(|(k, &x)| (k, x)).collect());
            }
        }
        let unit = coords_of(&Matrix::identity(field, n))?;
        let labels = if labels.len() == echelon.len() {
            labels
        } else {
            (0..echelon.len()).map(|i| format!("m{i}")).collect()
        };
        Ok((Self::new(field, labels, products, unit)?, space))
    }

    /// The full matrix algebra `M_n(GF(p))` on the elementary matrices.
    pub fn matrix_algebra(field: PrimeField, n: usize) -> Self {
        let labels = (0..n * n).map(|i| format!("E{}{}", i / n + 1, i % n + 1)).collect();
        let mut products = vec![Vec::new(); n * n * n * n];
        for a in 0..n * n {
            for b in 0..n * n {
                let (i, j) = (a / n, a % n);
                let (k, l) = (b / n, b % n);
                if j == k {
                    products[a * n * n + b] = vec![(i * n + l, 1)];
                }
            }
        }
        let mut unit = vec![0; n * n];
        for i in 0..n {
            unit[i * n + i] = 1;
        }
        Self::new(field, labels, products, unit).expect("matrix units form an algebra")
    }

    /// Direct product of algebras, with the block basis concatenated.
    pub fn product(parts: &[StructureAlgebra]) -> Result<Self> {
        let field = parts.first().map(|a| a.field).ok_or_else(|| Error::InvalidAlgebra("empty product".into()))?;
        let dim: usize = parts.iter().map(|a| a.dim).sum();
        let mut products = vec![Vec::new(); dim * dim];
        let mut unit = Vec::with_capacity(dim);
        let mut labels = Vec::with_capacity(dim);
        let mut offset = 0;
        for (idx, a) in parts.iter().enumerate() {
            if a.field != field {
                return Err(Error::InvalidAlgebra("factors over different fields".into()));
            }
            for i in 0..a.dim {
                for j in 0..a.dim {
                    products[(offset + i) * dim + offset + j] =
                        a.products[i * a.dim + j].iter().map(|&(k, c)| (offset + k, c)).collect();
                }
            }
            unit.extend_from_slice(&a.unit);
            labels.extend(a.labels.iter().map(|l| format!("{l}#{idx}")));
            offset += a.dim;
        }
        Self::new(field, labels, products, unit)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[u32] {
        &self.unit
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    pub fn zero(&self) -> Vec<u32> {
        vec![0; self.dim]
    }

    /// `bᵢ bⱼ` as a sparse list.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, u32)] {
        &self.products[i * self.dim + j]
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.field;
        let p = f.p() as u64;
        let mut acc = vec![0u64; self.dim];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let ab = a as u64 * b as u64 % p;
                for &(k, c) in self.basis_product(i, j) {
                    acc[k] = (acc[k] + ab * c as u64) % p;
                }
            }
        }
        acc.into_iter().map(|v| v as u32).collect()
    }

    pub fn add(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        x.iter().zip(y).map(|(&a, &b)| self.field.add(a, b)).collect()
    }

    pub fn sub(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        x.iter().zip(y).map(|(&a, &b)| self.field.sub(a, b)).collect()
    }

    pub fn scale(&self, c: u32, x: &[u32]) -> Vec<u32> {
        x.iter().map(|&a| self.field.mul(c, a)).collect()
    }

    pub fn pow(&self, x: &[u32], mut e: u64) -> Vec<u32> {
        let mut acc = self.unit.clone();
        let mut b = x.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        acc
    }

    /// Matrix of `y ↦ x y`.
    pub fn left_mult_matrix(&self, x: &[u32]) -> Matrix {
        let cols: Vec<Vec<u32>> = (0..self.dim).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Matrix of `y ↦ y x`.
    pub fn right_mult_matrix(&self, x: &[u32]) -> Matrix {
        let cols: Vec<Vec<u32>> = (0..self.dim).map(|j| self.mul(&self.basis_vector(j), x)).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Basis indices generating `A` as a unital algebra, chosen greedily in
    /// index order.
    pub fn generators(&self) -> &[usize] {
        self.generators.get_or_init(|| {
            let mut gens = Vec::new();
            let mut closure = Subspace::span(self.field, self.dim, std::slice::from_ref(&self.unit));
            for i in 0..self.dim {
                if closure.dim() == self.dim {
                    break;
                }
                let b = self.basis_vector(i);
                if closure.contains(&b) {
                    continue;
                }
                gens.push(i);
                closure = self.subalgebra_closure(&gens);
            }
            gens
        })
    }

    /// The unital subalgebra generated by the given basis elements.
    fn subalgebra_closure(&self, gens: &[usize]) -> Subspace {
        let mut vectors = vec![self.unit.clone()];
        let mut space = Subspace::span(self.field, self.dim, &vectors);
        loop {
            let before = space.dim();
            let current: Vec<Vec<u32>> = space.basis().to_vec();
            for v in &current {
                for &g in gens {
                    vectors.push(self.mul(v, &self.basis_vector(g)));
                }
            }
            space = Subspace::span(self.field, self.dim, &vectors);
            vectors = space.basis().to_vec();
            if space.dim() == before {
                return space;
            }
        }
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    fn check_unit(&self) -> Result<()> {
        for i in 0..self.dim {
            let b = self.basis_vector(i);
            if self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b {
                return Err(Error::InvalidAlgebra(format!("unit does not fix basis element {}", self.labels[i])));
            }
        }
        Ok(())
    }

    fn check_associative(&self) -> Result<()> {
        let d = self.dim;
        let bad = (0..d).into_par_iter().find_map_first(|i| {
            for j in 0..d {
                let ij = self.basis_product(i, j);
                for k in 0..d {
                    let mut lhs = vec![0u32; d];
                    for &(m, c) in ij {
                        for &(n, c2) in self.basis_product(m, k) {
                            lhs[n] = self.field.add(lhs[n], self.field.mul(c, c2));
                        }
                    }
                    let mut rhs = vec![0u32; d];
                    for &(m, c) in self.basis_product(j, k) {
                        for &(n, c2) in self.basis_product(i, m) {
                            rhs[n] = self.field.add(rhs[n], self.field.mul(c, c2));
                        }
                    }
                    if lhs != rhs {
                        return Some((i, j, k));
                    }
                }
            }
            None
        });
        match bad {
            Some((i, j, k)) => Err(Error::InvalidAlgebra(format!(
                "structure constants are not associative on ({}, {}, {})",
                self.labels[i], self.labels[j], self.labels[k]
            ))),
            None => Ok(()),
        }
    }

    /// Basis of the center, as the common kernel of `z ↦ bᵢ z − z bᵢ`.
    pub fn center(&self) -> Vec<Vec<u32>> {
        let d = self.dim;
        let mut stacked = Matrix::zeros(self.field, d * d, d);
        for i in 0..d {
            let b = self.basis_vector(i);
            let comm = self.left_mult_matrix(&b).sub(&self.right_mult_matrix(&b));
            stacked.set_block(i * d, 0, &comm);
        }
        stacked.kernel()
    }

    /// `{z ∈ span(basis) : z^p = z}` for a commutative subalgebra given by
    /// `basis`; the Frobenius is additive there, so this is a linear kernel.
    pub fn frobenius_fixed_in(&self, basis: &[Vec<u32>]) -> Vec<Vec<u32>> {
        let p = self.field.p() as u64;
        let images: Vec<Vec<u32>> = basis.iter().map(|z| self.sub(&self.pow(z, p), z)).collect();
        let m = Matrix::from_columns(self.field, self.dim, &images);
        m.kernel()
            .into_iter()
            .map(|coeffs| {
                let mut v = self.zero();
                for (c, z) in coeffs.iter().zip(basis) {
                    v = self.add(&v, &self.scale(*c, z));
                }
                v
            })
            .collect()
    }

    /// Berlekamp subalgebra of a commutative algebra.
    pub fn frobenius_fixed_space(&self) -> Result<Vec<Vec<u32>>> {
        if !self.is_commutative() {
            return Err(Error::InvalidAlgebra("Frobenius-fixed space needs a commutative algebra".into()));
        }
        let basis: Vec<Vec<u32>> = (0..self.dim).map(|i| self.basis_vector(i)).collect();
        Ok(self.frobenius_fixed_in(&basis))
    }

    /// Minimal polynomial of `x` inside the corner `e A e` (unit `e`), monic,
    /// lowest coefficient first.
    fn minimal_polynomial(&self, x: &[u32], e: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut powers = vec![e.to_vec()];
        loop {
            let next = self.mul(powers.last().unwrap(), x);
            let m = Matrix::from_columns(f, self.dim, &powers);
            let rhs = Matrix::from_columns(f, self.dim, std::slice::from_ref(&next));
            let sol = crate::linalg::matrix::rref_solve(&m, Some(&rhs)).expect("shapes agree");
            if let Some(c) = sol.particular {
                let mut poly: Vec<u32> = (0..powers.len()).map(|i| f.neg(c.get(i, 0))).collect();
                poly.push(1);
                return poly;
            }
            powers.push(next);
        }
    }

    /// Primitive central idempotents by deterministic Berlekamp splitting,
    /// sorted lexicographically by coordinates.
    ///
    /// Assumes `A` is semisimple; a failure to reach the expected count is
    /// reported as [`Error::Splitting`].
    pub fn primitive_central_idempotents(&self) -> Result<Vec<Vec<u32>>> {
        let f = self.field;
        let center = self.center();
        let fixed = self.frobenius_fixed_in(&center);
        let target = fixed.len();
        let mut idempotents = vec![self.unit.clone()];
        let mut progress = true;
        while idempotents.len() < target && progress {
            progress = false;
            let mut next = Vec::new();
            for e in &idempotents {
                let mut split = None;
                for b in &fixed {
                    let eb = self.mul(e, b);
                    let minpoly = self.minimal_polynomial(&eb, e);
                    if minpoly.len() <= 2 {
                        continue;
                    }
                    let roots: Vec<u32> = (0..f.p()).filter(|&r| crate::linalg::field::poly::eval(f, &minpoly, r) == 0).collect();
                    if roots.len() != minpoly.len() - 1 {
                        return Err(Error::Splitting(format!(
                            "minimal polynomial {minpoly:?} of a Frobenius-fixed element is not split and squarefree"
                        )));
                    }
                    let parts: Vec<Vec<u32>> = roots
                        .iter()
                        .map(|&lambda| {
                            let mut proj = e.clone();
                            for &mu in roots.iter().filter(|&&m| m != lambda) {
                                let factor = self.sub(&eb, &self.scale(mu, e));
                                let scale = f.inv(f.sub(lambda, mu));
                                proj = self.scale(scale, &self.mul(&proj, &factor));
                            }
                            proj
                        })
                        .collect();
                    split = Some(parts);
                    break;
                }
                match split {
                    Some(parts) => {
                        progress = true;
                        next.extend(parts);
                    }
                    None => next.push(e.clone()),
                }
            }
            idempotents = next;
        }
        if idempotents.len() != target {
            return Err(Error::Splitting(format!(
                "found {} idempotents but the Berlekamp subalgebra has dimension {target}",
                idempotents.len()
            )));
        }
        for (i, a) in idempotents.iter().enumerate() {
            for (j, b) in idempotents.iter().enumerate() {
                let ab = self.mul(a, b);
                let expected = if i == j { a.clone() } else { self.zero() };
                if ab != expected {
                    return Err(Error::Splitting("idempotents are not orthogonal".into()));
                }
            }
        }
        idempotents.sort();
        Ok(idempotents)
    }

    /// `(dim eA, dim eZ(A), n, n·d)` for a primitive central idempotent `e`.
    pub fn block_data(&self, e: &[u32]) -> Result<BlockData> {
        self.block_data_in(e, &self.center())
    }

    fn block_data_in(&self, e: &[u32], center: &[Vec<u32>]) -> Result<BlockData> {
        let block_dim = self.left_mult_matrix(e).rank();
        let ez: Vec<Vec<u32>> = center.iter().map(|z| self.mul(e, z)).collect();
        let center_dim = Subspace::span(self.field, self.dim, &ez).dim();
        if center_dim == 0 || !block_dim.is_multiple_of(center_dim) {
            return Err(Error::Structural(format!("block of dimension {block_dim} over a center of dimension {center_dim}")));
        }
        let q = block_dim / center_dim;
        let n = (q as f64).sqrt().round() as usize;
        if n * n != q {
            return Err(Error::Structural(format!("block dimension ratio {q} is not a perfect square")));
        }
        Ok(BlockData { block_dim, center_dim, matrix_size: n, simple_dim: n * center_dim })
    }

    /// Block data for every primitive central idempotent, in idempotent order.
    pub fn blocks(&self) -> Result<Vec<(Vec<u32>, BlockData)>> {
        let center = self.center();
        self.primitive_central_idempotents()?
            .into_iter()
            .map(|e| {
                let d = self.block_data_in(&e, &center)?;
                Ok((e, d))
            })
            .collect()
    }
}

/// A unital algebra homomorphism given by its matrix on the bases.
#[derive(Debug, Clone)]
pub struct AlgebraHom {
    source: Arc<StructureAlgebra>,
    target: Arc<StructureAlgebra>,
    matrix: Matrix,
}

impl AlgebraHom {
    /// Checks unitality and multiplicativity on all basis pairs.
    pub fn new(source: Arc<StructureAlgebra>, target: Arc<StructureAlgebra>, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::Dimension("homomorphism matrix has the wrong shape".into()));
        }
        if matrix.mul_vec(source.unit()) != target.unit() {
            return Err(Error::NotHomomorphism("unit is not preserved".into()));
        }
        let d = source.dim();
        let images: Vec<Vec<u32>> = (0..d).map(|i| matrix.column(i)).collect();
        let bad = (0..d * d).into_par_iter().find_first(|&ij| {
            let (i, j) = (ij / d, ij % d);
            let mut prod = source.zero();
            for &(k, c) in source.basis_product(i, j) {
                prod[k] = c;
            }
            matrix.mul_vec(&prod) != target.mul(&images[i], &images[j])
        });
        if let Some(ij) = bad {
            return Err(Error::NotHomomorphism(format!(
                "f({} * {}) != f({}) * f({})",
                source.labels()[ij / d],
                source.labels()[ij % d],
                source.labels()[ij / d],
                source.labels()[ij % d]
            )));
        }
        Ok(Self { source, target, matrix })
    }

    pub fn identity(alg: Arc<StructureAlgebra>) -> Self {
        let m = Matrix::identity(alg.field(), alg.dim());
        Self { source: Arc::clone(&alg), target: alg, matrix: m }
    }

    pub fn source(&self) -> &Arc<StructureAlgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<StructureAlgebra> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[u32]) -> Vec<u32> {
        self.matrix.mul_vec(x)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &AlgebraHom) -> Result<AlgebraHom> {
        if self.target.as_ref() != other.source.as_ref() {
            return Err(Error::Dimension("composing homomorphisms with mismatched algebras".into()));
        }
        Ok(AlgebraHom {
            source: Arc::clone(&self.source),
            target: Arc::clone(&other.target),
            matrix: other.matrix.mul(&self.matrix),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    /// `GF(p)[C_n]` on the basis `gⁱ`.
    fn cyclic_group_algebra(p: u32, n: usize) -> StructureAlgebra {
        let labels = (0..n).map(|i| format!("g{i}")).collect();
        let mut unit = vec![0; n];
        unit[0] = 1;
        StructureAlgebra::from_dense(gf(p), labels, unit, |i, j| {
            let mut v = vec![0; n];
            v[(i + j) % n] = 1;
            v
        })
        .unwrap()
    }

    /// `GF(p^k)` as a `GF(p)`-algebra on the power basis.
    fn field_algebra(p: u32, k: usize) -> StructureAlgebra {
        let ff = crate::linalg::field::FiniteField::new(p, k).unwrap();
        let labels = (0..k).map(|i| format!("a{i}")).collect();
        let mut unit = vec![0; k];
        unit[0] = 1;
        let pow = |i: usize| ff.pow(ff.generator(), i as u64);
        StructureAlgebra::from_dense(gf(p), labels, unit, |i, j| ff.coords(ff.mul(pow(i), pow(j)))).unwrap()
    }

    #[test]
    fn rejects_non_associative_constants() {
        // b1 b1 = b1 + ... a non-associative rule on a 2-dim space with unit b0
        let r = StructureAlgebra::from_dense(gf(3), vec!["1".into(), "x".into()], vec![1, 0], |i, j| match (i, j) {
            (0, k) | (k, 0) => {
                let mut v = vec![0, 0];
                v[k] = 1;
                v
            }
            _ => vec![1, 1],
        });
        // x·x = 1 + x is commutative and associative, so it must be accepted
        assert!(r.is_ok());
        let bad = StructureAlgebra::new(
            gf(3),
            vec!["1".into(), "x".into(), "y".into()],
            vec![
                vec![(0, 1)],
                vec![(1, 1)],
                vec![(2, 1)],
                vec![(1, 1)],
                vec![(2, 1)],
                vec![(0, 1)],
                vec![(2, 1)],
                vec![(2, 1)],
                vec![(1, 1)],
            ],
            vec![1, 0, 0],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn center_of_commutative_and_matrix_algebras() {
        let a = cyclic_group_algebra(5, 3);
        assert_eq!(a.center().len(), 3);
        let m2 = StructureAlgebra::matrix_algebra(gf(3), 2);
        let z = m2.center();
        assert_eq!(z.len(), 1);
        assert!(Subspace::span(gf(3), 4, &z).contains(m2.unit()));
        let prod = StructureAlgebra::product(&[field_algebra(3, 1), field_algebra(3, 1)]).unwrap();
        assert_eq!(prod.center().len(), 2);
    }

    #[test]
    fn group_algebra_of_c2_over_gf5_splits_into_two() {
        let a = cyclic_group_algebra(5, 2);
        let e = a.primitive_central_idempotents().unwrap();
        // (1 ± g)/2 with 1/2 = 3 in GF(5)
        assert_eq!(e, vec![vec![3, 2], vec![3, 3]]);
        for idem in &e {
            assert_eq!(a.block_data(idem).unwrap(), BlockData { block_dim: 1, center_dim: 1, matrix_size: 1, simple_dim: 1 });
        }
    }

    #[test]
    fn field_has_one_idempotent_and_one_dim_fixed_space() {
        let a = field_algebra(3, 2);
        assert_eq!(a.primitive_central_idempotents().unwrap(), vec![a.unit().to_vec()]);
        assert_eq!(a.frobenius_fixed_space().unwrap().len(), 1);
        let d = a.block_data(a.unit()).unwrap();
        assert_eq!(d, BlockData { block_dim: 2, center_dim: 2, matrix_size: 1, simple_dim: 2 });
        let two = StructureAlgebra::product(&[field_algebra(5, 1), field_algebra(5, 1)]).unwrap();
        assert_eq!(two.frobenius_fixed_space().unwrap().len(), 2);
    }

    #[test]
    fn matrix_algebra_block() {
        let m2 = StructureAlgebra::matrix_algebra(gf(3), 2);
        let e = m2.primitive_central_idempotents().unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(m2.block_data(&e[0]).unwrap(), BlockData { block_dim: 4, center_dim: 1, matrix_size: 2, simple_dim: 2 });
    }

    #[test]
    fn wedderburn_dimension_count_on_mixed_products() {
        // GF(7)[C_6] × M_2(GF(7)) × GF(49)
        let parts = [cyclic_group_algebra(7, 6), StructureAlgebra::matrix_algebra(gf(7), 2), field_algebra(7, 2)];
        let a = StructureAlgebra::product(&parts).unwrap();
        let blocks = a.blocks().unwrap();
        let total: usize = blocks.iter().map(|(_, d)| d.matrix_size * d.matrix_size * d.center_dim).sum();
        assert_eq!(total, a.dim());
        let sum = blocks.iter().fold(a.zero(), |acc, (e, _)| a.add(&acc, e));
        assert_eq!(sum, a.unit());
        assert_eq!(blocks.len(), a.frobenius_fixed_in(&a.center()).len());
        // x^6 - 1 splits completely over GF(7), giving 6 + 1 + 1 blocks
        assert_eq!(blocks.len(), 8);
    }

    #[test]
    fn cyclic_group_algebra_with_irreducible_factors() {
        // x^3 - 1 over GF(2) = (x + 1)(x^2 + x + 1): blocks GF(2) and GF(4)
        let a = cyclic_group_algebra(2, 3);
        let blocks = a.blocks().unwrap();
        let mut dims: Vec<usize> = blocks.iter().map(|(_, d)| d.center_dim).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 2]);
    }

    #[test]
    fn generating_sets() {
        assert_eq!(cyclic_group_algebra(5, 6).generators(), &[1]);
        let m2 = StructureAlgebra::matrix_algebra(gf(3), 2);
        let gens = m2.generators().to_vec();
        assert!(gens.len() >= 2);
        assert_eq!(m2.subalgebra_closure(&gens).dim(), 4);
    }

    #[test]
    fn homomorphism_checks() {
        let a = Arc::new(cyclic_group_algebra(5, 2));
        let id = AlgebraHom::identity(Arc::clone(&a));
        assert!(AlgebraHom::new(Arc::clone(&a), Arc::clone(&a), id.matrix().clone()).is_ok());
        // g ↦ 2g does not square to 1
        let m = Matrix::from_rows(gf(5), &[vec![1, 0], vec![0, 2]]).unwrap();
        assert!(matches!(AlgebraHom::new(Arc::clone(&a), a, m), Err(Error::NotHomomorphism(_))));
    }
}
