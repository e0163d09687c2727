use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::linalg::{AlgebraHom, FiniteField, Matrix, StructureAlgebra, Subspace};
use crate::twisted::bridge::{as_structure_algebra, AlgebraBridge};
use crate::twisted::gring::GRing;
use crate::twisted::tgr::{TGRElement, TwistedGroupRing};

/// `End_{R^H}(R)` as a `GF(p)`-subalgebra of `End_{GF(p)}(R) = M_k(GF(p))`.
#[derive(Debug, Clone)]
pub struct EndomorphismRing {
    field: FiniteField,
    algebra: Arc<StructureAlgebra>,
    span: Subspace,
    fixed_size: usize,
}

impl EndomorphismRing {
    /// All `GF(p)`-linear maps of `R` commuting with multiplication by `R^H`.
    pub fn new(base: &GRing, h: &Subgroup) -> Result<Self> {
        let field = base
            .ring()
            .as_field()
            .cloned()
            .ok_or_else(|| Error::Unsupported("endomorphism rings need a finite field base".into()))?;
        let fixed = base.fixed_subring(h);
        let k = field.degree();
        let fp = field.prime_field();
        // φ commutes with every multiplication M_s, s ∈ R^H: M_s φ − φ M_s = 0
        let mut rows = Vec::new();
        for &s in &fixed.elements {
            let ms = mult_matrix(&field, s);
            for i in 0..k {
                for j in 0..k {
                    // entry (i, j) of M_s φ − φ M_s as a functional on φ (row-major)
                    let mut row = vec![0u32; k * k];
                    for t in 0..k {
                        row[t * k + j] = fp.add(row[t * k + j], ms.get(i, t));
                        row[i * k + t] = fp.sub(row[i * k + t], ms.get(t, j));
                    }
                    rows.push(row);
                }
            }
        }
        let system = Matrix::from_rows(fp, &rows)?;
        let basis: Vec<Matrix> = system
            .kernel()
            .into_iter()
            .map(|v| Matrix::from_rows(fp, &v.chunks(k).map(|r| r.to_vec()).collect::<Vec<_>>()))
            .collect::<Result<_>>()?;
        let (algebra, span) = StructureAlgebra::from_matrices(fp, Vec::new(), &basis)?;
        Ok(Self { field, algebra: Arc::new(algebra), span, fixed_size: fixed.size() })
    }

    pub fn algebra(&self) -> &Arc<StructureAlgebra> {
        &self.algebra
    }

    pub fn fixed_size(&self) -> usize {
        self.fixed_size
    }

    /// Coordinates of a `k×k` matrix in the algebra basis.
    pub fn coordinates(&self, m: &Matrix) -> Option<Vec<u32>> {
        self.span.coordinates(m.data())
    }

    pub fn to_matrix(&self, coords: &[u32]) -> Matrix {
        let k = self.field.degree();
        let flat = self.span.combine(coords);
        Matrix::from_rows(self.field.prime_field(), &flat.chunks(k).map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    /// The `GF(p)`-algebra homomorphism `End_{R^H}(R) → End_{R^K}(R)` given by
    /// `φ ↦ m(φ)` on matrices.
    pub fn transport(&self, target: &EndomorphismRing, m: impl Fn(&Matrix) -> Matrix) -> Result<AlgebraHom> {
        let cols = (0..self.algebra.dim())
            .map(|i| {
                let img = m(&self.to_matrix(&self.algebra.basis_vector(i)));
                target.coordinates(&img).ok_or_else(|| Error::NotHomomorphism("image leaves the endomorphism ring".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let mat = Matrix::from_columns(self.field.prime_field(), target.algebra.dim(), &cols);
        AlgebraHom::new(Arc::clone(&self.algebra), Arc::clone(&target.algebra), mat)
    }
}

/// Matrix of `t ↦ s t` on the power basis of the field.
pub fn mult_matrix(field: &FiniteField, s: usize) -> Matrix {
    let k = field.degree();
    let p = field.p() as usize;
    let cols: Vec<Vec<u32>> = (0..k).map(|j| field.coords(field.mul(s, p.pow(j as u32)))).collect();
    Matrix::from_columns(field.prime_field(), k, &cols)
}

/// Matrix of `θ_g` on the power basis of the field.
pub fn theta_matrix(base: &GRing, field: &FiniteField, g: usize) -> Matrix {
    let k = field.degree();
    let p = field.p() as usize;
    let cols: Vec<Vec<u32>> = (0..k).map(|j| field.coords(base.theta(g, p.pow(j as u32)))).collect();
    Matrix::from_columns(field.prime_field(), k, &cols)
}

/// The Auslander map `R_θ[H] → End_{R^H}(R)` with its verdict.
#[derive(Debug, Clone)]
pub struct AuslanderMap {
    pub bridge: AlgebraBridge,
    pub endomorphisms: EndomorphismRing,
    pub hom: AlgebraHom,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuslanderVerdict {
    pub source_dim: usize,
    pub target_dim: usize,
    pub image_rank: usize,
    pub fixed_subring_size: usize,
    pub isomorphism: bool,
}

impl AuslanderMap {
    pub fn verdict(&self) -> AuslanderVerdict {
        let image_rank = self.hom.matrix().rank();
        let (source_dim, target_dim) = (self.hom.source().dim(), self.hom.target().dim());
        AuslanderVerdict {
            source_dim,
            target_dim,
            image_rank,
            fixed_subring_size: self.endomorphisms.fixed_size(),
            isomorphism: image_rank == source_dim && image_rank == target_dim,
        }
    }

    /// The endomorphism `t ↦ rθ_g(t)` as a `k×k` matrix.
    pub fn image_of_pure(&self, r: usize, g: usize) -> Matrix {
        let field = self.bridge.field();
        mult_matrix(field, r).mul(&theta_matrix(self.bridge.ring().base(), field, g))
    }
}

/// `rg ↦ (t ↦ r θ_g(t))`, verified multiplicative on the algebra bases.
pub fn auslander_map(base: &Arc<GRing>, h: &Subgroup) -> Result<AuslanderMap> {
    let t = TwistedGroupRing::new(Arc::clone(base), h.clone())?;
    let bridge = as_structure_algebra(&t)?;
    let endomorphisms = EndomorphismRing::new(base, h)?;
    let field = bridge.field().clone();
    let cols = (0..bridge.algebra().dim())
        .map(|i| {
            let (g, r) = bridge.basis_element(i).terms().next().expect("basis elements are pure");
            let m = mult_matrix(&field, r).mul(&theta_matrix(base, &field, g));
            endomorphisms
                .coordinates(&m)
                .ok_or_else(|| Error::NotHomomorphism("image is not R^H-linear".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let mat = Matrix::from_columns(field.prime_field(), endomorphisms.algebra().dim(), &cols);
    let hom = AlgebraHom::new(Arc::clone(bridge.algebra()), Arc::clone(endomorphisms.algebra()), mat)?;
    Ok(AuslanderMap { bridge, endomorphisms, hom })
}

/// Evaluates the Auslander image of a twisted-ring element on `t ∈ R`.
pub fn evaluate(base: &GRing, a: &TGRElement, t: usize) -> usize {
    let ring = base.ring();
    a.terms().fold(0, |acc, (g, r)| ring.add(acc, ring.mul(r, base.theta(g, t))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::ring::{FiniteRing, RingSpec};
    use crate::twisted::gring::ActionSpec;

    fn galois(p: u32, k: usize) -> Arc<GRing> {
        let ring = Arc::new(FiniteRing::build(&RingSpec::Gf { p, k, modulus: None }).unwrap());
        Arc::new(GRing::new(ring, Arc::new(FiniteGroup::cyclic(k).unwrap()), &ActionSpec::Frobenius(1)).unwrap())
    }

    #[test]
    fn trivial_subgroup_gives_the_field() {
        let base = galois(3, 2);
        let m = auslander_map(&base, &Subgroup::trivial(base.group())).unwrap();
        let v = m.verdict();
        assert_eq!((v.source_dim, v.target_dim, v.image_rank), (2, 2, 2));
        assert!(v.isomorphism);
    }

    #[test]
    fn galois_instances_are_isomorphisms() {
        for (p, k) in [(3, 2), (2, 3)] {
            let base = galois(p, k);
            let m = auslander_map(&base, &Subgroup::whole(base.group())).unwrap();
            let v = m.verdict();
            assert!(v.isomorphism, "{p}^{k}");
            assert_eq!(v.image_rank, k * k);
            assert_eq!(m.endomorphisms.algebra().blocks().unwrap().len(), 1);
        }
    }

    #[test]
    fn matrices_agree_with_pointwise_evaluation() {
        let base = galois(2, 3);
        let m = auslander_map(&base, &Subgroup::whole(base.group())).unwrap();
        let field = base.ring().as_field().unwrap().clone();
        for (r, g) in m.bridge.ring().pure_elements() {
            let mat = m.image_of_pure(r, g);
            for t in 0..8 {
                let via = field.encode(&mat.mul_vec(&field.coords(t)));
                assert_eq!(via, evaluate(&base, &TGRElement::pure(r, g), t));
            }
        }
    }

    #[test]
    fn trivial_action_is_not_injective() {
        let ring = Arc::new(FiniteRing::build(&RingSpec::Gf { p: 5, k: 1, modulus: None }).unwrap());
        let base = Arc::new(GRing::new(ring, Arc::new(FiniteGroup::cyclic(2).unwrap()), &ActionSpec::Trivial).unwrap());
        let v = auslander_map(&base, &Subgroup::whole(base.group())).unwrap().verdict();
        assert!(!v.isomorphism);
        assert_eq!(v.image_rank, 1);
    }
}
