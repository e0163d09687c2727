use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{AlgebraHom, FiniteField, Matrix, StructureAlgebra};
use crate::twisted::tgr::{TGRElement, TGRHom, TwistedGroupRing};

/// `R_θ[H]` for `R = GF(p^k)` presented as a `GF(p)`-algebra on the basis
/// `aⁱ·h` (`h` in sorted order, then `i`), where `a` is the field generator.
#[derive(Debug, Clone)]
pub struct AlgebraBridge {
    ring: TwistedGroupRing,
    field: FiniteField,
    algebra: Arc<StructureAlgebra>,
}

/// Structure constants of `R_θ[H]` over the prime field.
pub fn as_structure_algebra(t: &TwistedGroupRing) -> Result<AlgebraBridge> {
    let base = t.base();
    let field = base
        .ring()
        .as_field()
        .cloned()
        .ok_or_else(|| Error::Unsupported(format!("K0 needs a finite field base ring, got {}", base.ring().label())))?;
    let k = field.degree();
    let p = field.p() as usize;
    let group = base.group();
    let els = t.subgroup().elements().to_vec();
    let labels = els
        .iter()
        .flat_map(|&h| {
            let name = group.element_label(h).to_string();
            (0..k).map(move |i| match i {
                0 => format!("1*{name}"),
                1 => format!("a*{name}"),
                _ => format!("a^{i}*{name}"),
            })
        })
        .collect();
    let power = |i: usize| p.pow(i as u32);
    let mut unit = vec![0; k * els.len()];
    unit[t.subgroup().position(group.identity()).unwrap() * k] = 1;
    let algebra = StructureAlgebra::from_dense(field.prime_field(), labels, unit, |x, y| {
        let (h, i) = (els[x / k], x % k);
        let (h2, j) = (els[y / k], y % k);
        let r = field.mul(power(i), base.theta(h, power(j)));
        let pos = t.subgroup().position(group.mul(h, h2)).unwrap();
        let mut v = vec![0; k * els.len()];
        v[pos * k..(pos + 1) * k].copy_from_slice(&field.coords(r));
        v
    })?;
    Ok(AlgebraBridge { ring: t.clone(), field, algebra: Arc::new(algebra) })
}

impl AlgebraBridge {
    pub fn ring(&self) -> &TwistedGroupRing {
        &self.ring
    }

    pub fn algebra(&self) -> &Arc<StructureAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn to_vector(&self, a: &TGRElement) -> Result<Vec<u32>> {
        let k = self.field.degree();
        let mut v = vec![0; self.algebra.dim()];
        for (h, r) in a.terms() {
            let pos = self.ring.subgroup().position(h).ok_or(Error::NotInSubgroup(h))?;
            v[pos * k..(pos + 1) * k].copy_from_slice(&self.field.coords(r));
        }
        Ok(v)
    }

    pub fn from_vector(&self, v: &[u32]) -> TGRElement {
        let k = self.field.degree();
        let mut out = TGRElement::zero();
        for (pos, &h) in self.ring.subgroup().elements().iter().enumerate() {
            out.add_term(self.ring.base(), h, self.field.encode(&v[pos * k..(pos + 1) * k]));
        }
        out
    }

    /// The element `aⁱ·h` for basis index `pos(h)·k + i`.
    pub fn basis_element(&self, idx: usize) -> TGRElement {
        let k = self.field.degree();
        let h = self.ring.subgroup().elements()[idx / k];
        TGRElement::pure((self.field.p() as usize).pow((idx % k) as u32), h)
    }

    /// The `GF(p)`-linear map `T(a) ↦ T(f(a))` for a map given on elements.
    pub fn linear_map(&self, target: &AlgebraBridge, f: impl Fn(&TGRElement) -> TGRElement) -> Result<Matrix> {
        let cols = (0..self.algebra.dim())
            .map(|i| target.to_vector(&f(&self.basis_element(i))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(self.field.prime_field(), target.algebra.dim(), &cols))
    }
}

/// A twisted-ring homomorphism transported to the prime-field algebras; the
/// result is re-verified as an algebra homomorphism.
pub fn hom_to_algebra(hom: &TGRHom, source: &AlgebraBridge, target: &AlgebraBridge) -> Result<AlgebraHom> {
    if hom.source().subgroup() != source.ring.subgroup() || hom.target().subgroup() != target.ring.subgroup() {
        return Err(Error::Dimension("bridge subgroups do not match the homomorphism".into()));
    }
    let m = source.linear_map(target, |a| hom.apply(a))?;
    AlgebraHom::new(Arc::clone(&source.algebra), Arc::clone(&target.algebra), m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{FiniteGroup, Subgroup};
    use crate::ring::{FiniteRing, RingSpec};
    use crate::twisted::gring::{ActionSpec, GRing};
    use crate::twisted::tgr::rho;

    fn bridge(p: u32, k: usize, n: usize, action: ActionSpec) -> (Arc<GRing>, AlgebraBridge) {
        let ring = Arc::new(FiniteRing::build(&RingSpec::Gf { p, k, modulus: None }).unwrap());
        let base = Arc::new(GRing::new(ring, Arc::new(FiniteGroup::cyclic(n).unwrap()), &action).unwrap());
        let t = TwistedGroupRing::new(Arc::clone(&base), Subgroup::whole(base.group())).unwrap();
        let b = as_structure_algebra(&t).unwrap();
        (base, b)
    }

    #[test]
    fn prime_field_trivial_group() {
        let (_, b) = bridge(5, 1, 1, ActionSpec::Trivial);
        assert_eq!(b.algebra().dim(), 1);
        assert_eq!(b.algebra().primitive_central_idempotents().unwrap().len(), 1);
    }

    #[test]
    fn block_counts_of_small_group_rings() {
        let (_, b) = bridge(5, 1, 2, ActionSpec::Trivial);
        assert_eq!(b.algebra().dim(), 2);
        assert!(b.algebra().is_commutative());
        assert_eq!(b.algebra().primitive_central_idempotents().unwrap().len(), 2);
        let (_, b) = bridge(3, 2, 2, ActionSpec::Frobenius(1));
        assert_eq!(b.algebra().dim(), 4);
        let blocks = b.algebra().blocks().unwrap();
        assert_eq!(blocks.len(), 1);
        assert_eq!((blocks[0].1.block_dim, blocks[0].1.center_dim, blocks[0].1.matrix_size), (4, 1, 2));
    }

    #[test]
    fn vectors_round_trip_and_products_agree() {
        let (base, b) = bridge(3, 2, 2, ActionSpec::Frobenius(1));
        let t = b.ring().clone();
        for (r, h) in t.pure_elements() {
            for (r2, h2) in t.pure_elements() {
                let (x, y) = (TGRElement::pure(r, h), TGRElement::pure(r2, h2));
                let prod = t.multiply(&x, &y).unwrap();
                let via = b.algebra().mul(&b.to_vector(&x).unwrap(), &b.to_vector(&y).unwrap());
                assert_eq!(b.from_vector(&via), prod);
            }
        }
        let g = Arc::clone(base.group());
        let small = as_structure_algebra(&TwistedGroupRing::new(Arc::clone(&base), Subgroup::trivial(&g)).unwrap()).unwrap();
        let inc = rho(&base, &Subgroup::trivial(&g), &Subgroup::whole(&g)).unwrap();
        let f = hom_to_algebra(&inc, &small, &b).unwrap();
        assert_eq!(f.matrix().rank(), 2);
    }
}
