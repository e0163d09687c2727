use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::linalg::{FiniteField, Matrix};
use crate::module::AlgebraModule;
use crate::twisted::auslander::{mult_matrix, theta_matrix};
use crate::twisted::bridge::{as_structure_algebra, AlgebraBridge};
use crate::twisted::gring::GRing;
use crate::twisted::tgr::{TGRElement, TwistedGroupRing};

/// An `R`-module with a `θ`-semilinear action of `H`, as `GF(p)`-matrices.
///
/// `scalars[i]` is multiplication by `aⁱ` for the field generator `a`, and
/// `action[pos(h)]` is `f(h)`.
#[derive(Debug, Clone)]
pub struct SemilinearModule {
    bridge: AlgebraBridge,
    dim: usize,
    scalars: Vec<Matrix>,
    action: Vec<Matrix>,
}

impl PartialEq for SemilinearModule {
    fn eq(&self, other: &Self) -> bool {
        self.bridge.ring().subgroup() == other.bridge.ring().subgroup()
            && self.dim == other.dim
            && self.scalars == other.scalars
            && self.action == other.action
    }
}

impl Eq for SemilinearModule {}

fn field_of(base: &GRing) -> Result<FiniteField> {
    base.ring()
        .as_field()
        .cloned()
        .ok_or_else(|| Error::Unsupported("semilinear modules are implemented over finite fields".into()))
}

impl SemilinearModule {
    /// Checks that the scalars make the space an `R`-module, that every
    /// `f(h)` is invertible and `θ_h`-semilinear on every `r ∈ R` and basis
    /// vector, and that `f(gh) = f(g) f(h)`.
    pub fn new(base: &Arc<GRing>, subgroup: &Subgroup, dim: usize, scalars: Vec<Matrix>, action: Vec<Matrix>) -> Result<Self> {
        let field = field_of(base)?;
        let k = field.degree();
        let bridge = as_structure_algebra(&TwistedGroupRing::new(Arc::clone(base), subgroup.clone())?)?;
        let square = |m: &Matrix| m.rows() == dim && m.cols() == dim;
        if scalars.len() != k || action.len() != subgroup.order() || !scalars.iter().chain(&action).all(square) {
            return Err(Error::InvalidModule(format!(
                "need {k} scalar and {} action matrices of size {dim}x{dim}",
                subgroup.order()
            )));
        }
        let module = Self { bridge, dim, scalars, action };
        let fp = field.prime_field();
        let p = field.p() as usize;
        if module.scalars[0] != Matrix::identity(fp, dim) {
            return Err(Error::InvalidModule("1 does not act as the identity".into()));
        }
        for i in 0..k {
            for j in 0..k {
                let prod = field.mul(p.pow(i as u32), p.pow(j as u32));
                if module.scalars[i].mul(&module.scalars[j]) != module.scalar(prod) {
                    return Err(Error::InvalidModule(format!("scalar action fails on a^{i} * a^{j}")));
                }
            }
        }
        let group = base.group();
        for (pos, &h) in subgroup.elements().iter().enumerate() {
            let fh = &module.action[pos];
            if fh.inverse().is_none() {
                return Err(Error::InvalidModule(format!("f({}) is not a bijection", group.element_label(h))));
            }
            for r in 0..field.size() {
                let lhs = fh.mul(&module.scalar(r));
                let rhs = module.scalar(base.theta(h, r)).mul(fh);
                if lhs != rhs {
                    let m = (0..dim).find(|&c| lhs.column(c) != rhs.column(c)).unwrap();
                    return Err(Error::NotSemilinear { h, r, m });
                }
            }
            for (pos2, &h2) in subgroup.elements().iter().enumerate() {
                let gh = subgroup.position(group.mul(h, h2)).unwrap();
                if fh.mul(&module.action[pos2]) != module.action[gh] {
                    return Err(Error::InvalidModule(format!(
                        "f({}) f({}) != f({})",
                        group.element_label(h),
                        group.element_label(h2),
                        group.element_label(group.mul(h, h2))
                    )));
                }
            }
        }
        Ok(module)
    }

    /// `R` itself with `f(h) = θ_h`.
    pub fn descent(base: &Arc<GRing>, subgroup: &Subgroup) -> Result<Self> {
        Self::free(base, subgroup, 1)
    }

    /// `Rⁿ` with `θ_h` on every coordinate.
    pub fn free(base: &Arc<GRing>, subgroup: &Subgroup, n: usize) -> Result<Self> {
        let field = field_of(base)?;
        let k = field.degree();
        let p = field.p() as usize;
        let diag = |m: Matrix| {
            let mut out = Matrix::zeros(field.prime_field(), n * k, n * k);
            for c in 0..n {
                out.set_block(c * k, c * k, &m);
            }
            out
        };
        let scalars = (0..k).map(|i| diag(mult_matrix(&field, p.pow(i as u32)))).collect();
        let action = subgroup.elements().iter().map(|&h| diag(theta_matrix(base, &field, h))).collect();
        Self::new(base, subgroup, n * k, scalars, action)
    }

    /// `f'(h) = c_h·f(h)` for a crossed homomorphism `c: H → R^×`,
    /// `c_{gh} = c_g θ_g(c_h)`, listed in subgroup element order.
    pub fn twist(&self, cocycle: &[usize]) -> Result<Self> {
        let base = self.bridge.ring().base();
        let subgroup = self.bridge.ring().subgroup();
        if cocycle.len() != subgroup.order() {
            return Err(Error::Dimension(format!("cocycle needs {} values", subgroup.order())));
        }
        let action = cocycle.iter().zip(&self.action).map(|(&c, f)| self.scalar(c).mul(f)).collect();
        Self::new(base, subgroup, self.dim, self.scalars.clone(), action)
    }

    /// The cocycle of a cyclic subgroup `⟨σ⟩` with `c_σ = u`, so
    /// `c_{σⁱ} = u θ_σ(u) ⋯ θ_σ^{i−1}(u)`; needs `N(u) = 1`.
    pub fn cyclic_cocycle(base: &GRing, subgroup: &Subgroup, sigma: usize, u: usize) -> Result<Vec<usize>> {
        let group = base.group();
        let ring = base.ring();
        let mut values = vec![None; group.order()];
        let (mut g, mut c) = (group.identity(), ring.one());
        for _ in 0..subgroup.order() {
            if values[g].is_some() {
                break;
            }
            values[g] = Some(c);
            c = ring.mul(c, base.theta(g, u));
            g = group.mul(g, sigma);
        }
        if g != group.identity() || c != ring.one() || subgroup.elements().iter().any(|&h| values[h].is_none()) {
            return Err(Error::InvalidModule(format!("{u} does not define a cocycle on the cyclic subgroup")));
        }
        Ok(subgroup.elements().iter().map(|&h| values[h].unwrap()).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bridge(&self) -> &AlgebraBridge {
        &self.bridge
    }

    /// Multiplication by `r ∈ R`.
    pub fn scalar(&self, r: usize) -> Matrix {
        let field = self.bridge.field();
        let mut m = Matrix::zeros(field.prime_field(), self.dim, self.dim);
        for (c, s) in field.coords(r).into_iter().zip(&self.scalars) {
            m.add_scaled(c, s);
        }
        m
    }

    pub fn f(&self, h: usize) -> Option<&Matrix> {
        self.bridge.ring().subgroup().position(h).map(|pos| &self.action[pos])
    }

    /// The `R_θ[H]`-module with `r·h` acting as `m ↦ r·f(h)(m)`.
    pub fn to_module(&self) -> Result<AlgebraModule> {
        let k = self.bridge.field().degree();
        let action = (0..self.bridge.algebra().dim())
            .map(|idx| self.scalars[idx % k].mul(&self.action[idx / k]))
            .collect();
        AlgebraModule::new(Arc::clone(self.bridge.algebra()), self.dim, action)
    }

    /// Recovers `(M, f)` with `f(h)` the action of `1·h` and the scalars the
    /// action of `aⁱ·e`.
    pub fn from_module(base: &Arc<GRing>, subgroup: &Subgroup, module: &AlgebraModule) -> Result<Self> {
        let field = field_of(base)?;
        let bridge = as_structure_algebra(&TwistedGroupRing::new(Arc::clone(base), subgroup.clone())?)?;
        if module.algebra().as_ref() != bridge.algebra().as_ref() {
            return Err(Error::InvalidModule("module is not over this twisted group ring".into()));
        }
        let e = base.group().identity();
        let p = field.p() as usize;
        let act = |a: TGRElement| bridge.to_vector(&a).map(|v| module.act(&v));
        let scalars = (0..field.degree()).map(|i| act(TGRElement::pure(p.pow(i as u32), e))).collect::<Result<_>>()?;
        let action = subgroup.elements().iter().map(|&h| act(TGRElement::pure(1, h))).collect::<Result<_>>()?;
        Self::new(base, subgroup, module.dim(), scalars, action)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::module::{k0_class, K0Basis};
    use crate::ring::{FiniteRing, RingSpec};
    use crate::twisted::gring::ActionSpec;

    fn galois(p: u32, k: usize) -> Arc<GRing> {
        let ring = Arc::new(FiniteRing::build(&RingSpec::Gf { p, k, modulus: None }).unwrap());
        Arc::new(GRing::new(ring, Arc::new(FiniteGroup::cyclic(k).unwrap()), &ActionSpec::Frobenius(1)).unwrap())
    }

    #[test]
    fn gf9_descent_module_is_simple() {
        let base = galois(3, 2);
        let h = Subgroup::whole(base.group());
        let m = SemilinearModule::descent(&base, &h).unwrap();
        let module = m.to_module().unwrap();
        assert_eq!(module.dim(), 2);
        let k0 = K0Basis::new(module.algebra()).unwrap();
        assert_eq!(k0_class(&module, &k0).unwrap().multiplicities, vec![1]);
        assert_eq!(SemilinearModule::from_module(&base, &h, &module).unwrap(), m);
    }

    #[test]
    fn identity_action_is_not_semilinear_for_frobenius() {
        let base = galois(3, 2);
        let h = Subgroup::whole(base.group());
        let m = SemilinearModule::descent(&base, &h).unwrap();
        let fp = m.bridge().field().prime_field();
        let id = vec![Matrix::identity(fp, 2); 2];
        let err = SemilinearModule::new(&base, &h, 2, m.scalars.clone(), id).unwrap_err();
        assert!(matches!(err, Error::NotSemilinear { h: 1, .. }));
    }

    #[test]
    fn round_trips_on_several_modules() {
        for (p, k) in [(3, 2), (2, 3)] {
            let base = galois(p, k);
            let h = Subgroup::whole(base.group());
            let field = base.ring().as_field().unwrap().clone();
            let u = (2..field.size()).find(|&u| {
                let norm = (0..k).fold(1, |acc, i| field.mul(acc, base.theta(i, u)));
                norm == 1
            });
            let regular = SemilinearModule::from_module(
                &base,
                &h,
                &AlgebraModule::regular(Arc::clone(SemilinearModule::descent(&base, &h).unwrap().bridge().algebra())),
            )
            .unwrap();
            let mut modules = vec![
                SemilinearModule::descent(&base, &h).unwrap(),
                SemilinearModule::free(&base, &h, 2).unwrap(),
                regular,
            ];
            if let Some(u) = u {
                let c = SemilinearModule::cyclic_cocycle(&base, &h, 1, u).unwrap();
                modules.push(modules[0].twist(&c).unwrap());
            }
            for m in &modules {
                let module = m.to_module().unwrap();
                let back = SemilinearModule::from_module(&base, &h, &module).unwrap();
                assert_eq!(&back, m);
                assert_eq!(back.to_module().unwrap(), module);
            }
        }
    }
}
