use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{left_coset_reps, right_coset_reps, Subgroup};
use crate::twisted::gring::GRing;

/// `R_θ[H]` for a subgroup `H` of the acting group.
#[derive(Debug, Clone)]
pub struct TwistedGroupRing {
    base: Arc<GRing>,
    subgroup: Subgroup,
}

/// A finite formal sum `Σ r_h h`, stored as `h ↦ r_h` without zero terms.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TGRElement {
    terms: BTreeMap<usize, usize>,
}

impl TGRElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The pure element `r·h` (zero when `r = 0`).
    pub fn pure(r: usize, h: usize) -> Self {
        let mut terms = BTreeMap::new();
        if r != 0 {
            terms.insert(h, r);
        }
        Self { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.terms.iter().map(|(&h, &r)| (h, r))
    }

    pub fn coefficient(&self, h: usize) -> usize {
        self.terms.get(&h).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.terms.keys().copied()
    }

    /// Adds `r·h` in place using the ring of `base`.
    pub fn add_term(&mut self, base: &GRing, h: usize, r: usize) {
        let ring = base.ring();
        let sum = ring.add(self.coefficient(h), r);
        if sum == 0 {
            self.terms.remove(&h);
        } else {
            self.terms.insert(h, sum);
        }
    }
}

impl TwistedGroupRing {
    pub fn new(base: Arc<GRing>, subgroup: Subgroup) -> Result<Self> {
        if subgroup.group().as_ref() != base.group().as_ref() {
            return Err(Error::GroupMismatch("subgroup does not belong to the acting group".into()));
        }
        Ok(Self { base, subgroup })
    }

    pub fn base(&self) -> &Arc<GRing> {
        &self.base
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn label(&self) -> String {
        format!("{}_θ[{}]", self.base.ring().label(), self.subgroup.describe())
    }

    pub fn one(&self) -> TGRElement {
        TGRElement::pure(self.base.ring().one(), self.base.group().identity())
    }

    pub fn contains(&self, a: &TGRElement) -> bool {
        a.support().all(|h| self.subgroup.contains(h))
    }

    fn check(&self, a: &TGRElement) -> Result<()> {
        match a.support().find(|&h| !self.subgroup.contains(h)) {
            Some(h) => Err(Error::NotInSubgroup(h)),
            None => Ok(()),
        }
    }

    pub fn add(&self, a: &TGRElement, b: &TGRElement) -> TGRElement {
        let mut out = a.clone();
        for (h, r) in b.terms() {
            out.add_term(&self.base, h, r);
        }
        out
    }

    pub fn neg(&self, a: &TGRElement) -> TGRElement {
        let ring = self.base.ring();
        TGRElement { terms: a.terms().map(|(h, r)| (h, ring.neg(r))).collect() }
    }

    /// `(Σ rᵢgᵢ)(Σ r'ⱼg'ⱼ) = Σ rᵢ θ_{gᵢ}(r'ⱼ) gᵢg'ⱼ`.
    pub fn multiply(&self, a: &TGRElement, b: &TGRElement) -> Result<TGRElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    pub(crate) fn mul_unchecked(&self, a: &TGRElement, b: &TGRElement) -> TGRElement {
        let ring = self.base.ring();
        let group = self.base.group();
        let mut out = TGRElement::zero();
        for (g, r) in a.terms() {
            for (g2, r2) in b.terms() {
                let coeff = ring.mul(r, self.base.theta(g, r2));
                out.add_term(&self.base, group.mul(g, g2), coeff);
            }
        }
        out
    }

    /// Every pure element `r·h` with `r ≠ 0`.
    pub fn pure_elements(&self) -> Vec<(usize, usize)> {
        let size = self.base.ring().size();
        self.subgroup.elements().iter().flat_map(|&h| (1..size).map(move |r| (r, h))).collect()
    }
}

/// `tgr_multiply` on a given twisted group ring.
pub fn tgr_multiply(ring: &TwistedGroupRing, a: &TGRElement, b: &TGRElement) -> Result<TGRElement> {
    ring.multiply(a, b)
}

/// `Τ(H, x, K): R_θ[H] → R_θ[K]`, `rh ↦ θ_{x⁻¹}(r)·x⁻¹hx`.
#[derive(Debug, Clone)]
pub struct TGRHom {
    source: TwistedGroupRing,
    target: TwistedGroupRing,
    x: usize,
}

impl TGRHom {
    pub fn source(&self) -> &TwistedGroupRing {
        &self.source
    }

    pub fn target(&self) -> &TwistedGroupRing {
        &self.target
    }

    /// The conjugating element `x` of the triple `(H, x, K)`.
    pub fn twist(&self) -> usize {
        self.x
    }

    pub fn apply_pure(&self, r: usize, h: usize) -> (usize, usize) {
        let base = &self.source.base;
        let group = base.group();
        let xi = group.inv(self.x);
        (base.theta(xi, r), group.conj(xi, h))
    }

    pub fn apply(&self, a: &TGRElement) -> TGRElement {
        let mut out = TGRElement::zero();
        for (h, r) in a.terms() {
            let (r2, h2) = self.apply_pure(r, h);
            out.add_term(&self.source.base, h2, r2);
        }
        out
    }

    /// `other ∘ self`, which is `Τ(H, x·y, K')` for `other = Τ(K, y, K')`.
    pub fn then(&self, other: &TGRHom) -> Result<TGRHom> {
        if self.target.subgroup != other.source.subgroup {
            return Err(Error::Containment("composing homomorphisms through different subgroups".into()));
        }
        let x = self.source.base.group().mul(self.x, other.x);
        Ok(TGRHom { source: self.source.clone(), target: other.target.clone(), x })
    }

    /// Unitality and multiplicativity on every pair of pure elements.
    fn verify(&self) -> Result<()> {
        if self.apply(&self.source.one()) != self.target.one() {
            return Err(Error::NotHomomorphism("unit is not preserved".into()));
        }
        let base = &self.source.base;
        let group = base.group();
        let ring = base.ring();
        // pure products stay pure, so the check runs on (r, h) pairs directly
        let pure_mul = |(r, h): (usize, usize), (r2, h2): (usize, usize)| {
            let c = ring.mul(r, base.theta(h, r2));
            if c == 0 {
                (0, group.identity())
            } else {
                (c, group.mul(h, h2))
            }
        };
        let image = |(r, h): (usize, usize)| if r == 0 { (0, group.identity()) } else { self.apply_pure(r, h) };
        let pures = self.source.pure_elements();
        let bad = pures.par_iter().find_map_first(|&a| {
            let fa = image(a);
            pures.iter().find_map(|&b| (image(pure_mul(a, b)) != pure_mul(fa, image(b))).then_some((a, b)))
        });
        match bad {
            Some((a, b)) => Err(Error::NotHomomorphism(format!("f(ab) != f(a)f(b) for pure a = {a:?}, b = {b:?}"))),
            None => Ok(()),
        }
    }
}

/// Builds `Τ(H, x, K)`, checking `x⁻¹Hx ⊆ K` and multiplicativity on all
/// pure pairs.
pub fn tau_hom(base: &Arc<GRing>, h: &Subgroup, x: usize, k: &Subgroup) -> Result<TGRHom> {
    let group = base.group();
    let xi = group.inv(x);
    if let Some(&bad) = h.elements().iter().find(|&&e| !k.contains(group.conj(xi, e))) {
        return Err(Error::Conjugation { h: bad, image: group.conj(xi, bad) });
    }
    let hom = TGRHom {
        source: TwistedGroupRing::new(Arc::clone(base), h.clone())?,
        target: TwistedGroupRing::new(Arc::clone(base), k.clone())?,
        x,
    };
    hom.verify()?;
    Ok(hom)
}

/// `ρ_H^K = Τ(H, e, K)`, the inclusion.
pub fn rho(base: &Arc<GRing>, h: &Subgroup, k: &Subgroup) -> Result<TGRHom> {
    tau_hom(base, h, base.group().identity(), k)
}

/// `γ^g = Τ(H, g⁻¹, ᵍH)`: `rh ↦ θ_g(r)·ghg⁻¹`.
pub fn gamma(base: &Arc<GRing>, g: usize, h: &Subgroup) -> Result<TGRHom> {
    tau_hom(base, h, base.group().inv(g), &h.conjugate(g))
}

/// `sh_y: rk ↦ rky` on `R_θ[K]`.
#[derive(Debug, Clone)]
pub struct ShiftMap {
    ring: TwistedGroupRing,
    y: usize,
}

pub fn shift_map(k: &TwistedGroupRing, y: usize) -> Result<ShiftMap> {
    if !k.subgroup().contains(y) {
        return Err(Error::NotInSubgroup(y));
    }
    Ok(ShiftMap { ring: k.clone(), y })
}

impl ShiftMap {
    pub fn element(&self) -> usize {
        self.y
    }

    pub fn apply(&self, a: &TGRElement) -> TGRElement {
        let group = self.ring.base.group();
        TGRElement { terms: a.terms().map(|(k, r)| (group.mul(k, self.y), r)).collect() }
    }
}

/// `R_θ[K]` as a free left `R_θ[H]`-module on `{1·yᵢ}`, `yᵢ` right coset
/// representatives of `H` in `K`.
#[derive(Debug, Clone)]
pub struct LeftBasis {
    small: TwistedGroupRing,
    large: TwistedGroupRing,
    reps: Vec<usize>,
    /// `k ↦ (i, h)` with `k = h yᵢ`.
    split: Vec<Option<(usize, usize)>>,
}

pub fn left_basis_decompose(base: &Arc<GRing>, h: &Subgroup, k: &Subgroup) -> Result<LeftBasis> {
    let reps = right_coset_reps(h, k)?;
    let group = base.group();
    let mut split = vec![None; group.order()];
    for (i, &y) in reps.iter().enumerate() {
        for &x in h.elements() {
            split[group.mul(x, y)] = Some((i, x));
        }
    }
    Ok(LeftBasis {
        small: TwistedGroupRing::new(Arc::clone(base), h.clone())?,
        large: TwistedGroupRing::new(Arc::clone(base), k.clone())?,
        reps,
        split,
    })
}

impl LeftBasis {
    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn rank(&self) -> usize {
        self.reps.len()
    }

    /// `(a₁, …, aₙ) ↦ Σ aᵢ·(1·yᵢ)`.
    pub fn forward(&self, coeffs: &[TGRElement]) -> Result<TGRElement> {
        if coeffs.len() != self.reps.len() {
            return Err(Error::Dimension(format!("expected {} coefficients", self.reps.len())));
        }
        let base = &self.large.base;
        let one = base.ring().one();
        let mut out = TGRElement::zero();
        for (a, &y) in coeffs.iter().zip(&self.reps) {
            self.small.check(a)?;
            out = self.large.add(&out, &self.large.mul_unchecked(a, &TGRElement::pure(one, y)));
        }
        Ok(out)
    }

    /// Inverse of [`LeftBasis::forward`]: `r·hyᵢ` contributes `r·h` at slot `i`.
    pub fn express(&self, a: &TGRElement) -> Result<Vec<TGRElement>> {
        self.large.check(a)?;
        let mut out = vec![TGRElement::zero(); self.reps.len()];
        for (k, r) in a.terms() {
            let (i, h) = self.split[k].expect("K is covered by its cosets");
            out[i].add_term(&self.large.base, h, r);
        }
        Ok(out)
    }
}

/// `R_θ[K]` as a free right `R_θ[H]`-module on `{1·zⱼ}`, `zⱼ` left coset
/// representatives of `H` in `K`.
#[derive(Debug, Clone)]
pub struct RightBasis {
    small: TwistedGroupRing,
    large: TwistedGroupRing,
    reps: Vec<usize>,
    /// `k ↦ (j, h)` with `k = zⱼ h`.
    split: Vec<Option<(usize, usize)>>,
}

pub fn right_basis(base: &Arc<GRing>, h: &Subgroup, k: &Subgroup) -> Result<RightBasis> {
    let reps = left_coset_reps(h, k)?;
    let group = base.group();
    let mut split = vec![None; group.order()];
    for (j, &z) in reps.iter().enumerate() {
        for &x in h.elements() {
            split[group.mul(z, x)] = Some((j, x));
        }
    }
    Ok(RightBasis {
        small: TwistedGroupRing::new(Arc::clone(base), h.clone())?,
        large: TwistedGroupRing::new(Arc::clone(base), k.clone())?,
        reps,
        split,
    })
}

/// Coefficients of `element` on the right basis `{1·zⱼ}` of `R_θ[K]` over
/// `R_θ[H]`.
pub fn right_basis_express(base: &Arc<GRing>, h: &Subgroup, k: &Subgroup, element: &TGRElement) -> Result<Vec<TGRElement>> {
    right_basis(base, h, k)?.express(element)
}

impl RightBasis {
    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    /// The basis elements `1·zⱼ`.
    pub fn elements(&self) -> Vec<TGRElement> {
        let one = self.large.base.ring().one();
        self.reps.iter().map(|&z| TGRElement::pure(one, z)).collect()
    }

    /// `r·zⱼh = (1·zⱼ)·(θ_{zⱼ⁻¹}(r)·h)`.
    pub fn express(&self, a: &TGRElement) -> Result<Vec<TGRElement>> {
        self.large.check(a)?;
        let base = &self.large.base;
        let group = base.group();
        let mut out = vec![TGRElement::zero(); self.reps.len()];
        for (k, r) in a.terms() {
            let (j, h) = self.split[k].expect("K is covered by its cosets");
            out[j].add_term(base, h, base.theta(group.inv(self.reps[j]), r));
        }
        Ok(out)
    }

    /// `Σ (1·zⱼ)·aⱼ`.
    pub fn reassemble(&self, coeffs: &[TGRElement]) -> Result<TGRElement> {
        if coeffs.len() != self.reps.len() {
            return Err(Error::Dimension(format!("expected {} coefficients", self.reps.len())));
        }
        let mut out = TGRElement::zero();
        for (a, z) in coeffs.iter().zip(self.elements()) {
            self.small.check(a)?;
            out = self.large.add(&out, &self.large.mul_unchecked(&z, a));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{enumerate_subgroups, FiniteGroup};
    use crate::ring::{FiniteRing, RingSpec};
    use crate::twisted::gring::ActionSpec;

    fn gring(p: u32, k: usize, modulus: Option<Vec<u32>>, group: FiniteGroup, action: ActionSpec) -> Arc<GRing> {
        let ring = Arc::new(FiniteRing::build(&RingSpec::Gf { p, k, modulus }).unwrap());
        Arc::new(GRing::new(ring, Arc::new(group), &action).unwrap())
    }

    #[test]
    fn frobenius_twist_in_gf9() {
        // a² = a + 1, so a⁴ = 2
        let base = gring(3, 2, Some(vec![2, 2, 1]), FiniteGroup::cyclic(2).unwrap(), ActionSpec::Frobenius(1));
        let t = TwistedGroupRing::new(Arc::clone(&base), Subgroup::whole(base.group())).unwrap();
        let a = base.ring().as_field().unwrap().generator();
        let x = TGRElement::pure(a, 1);
        assert_eq!(tgr_multiply(&t, &x, &x).unwrap(), TGRElement::pure(2, 0));
        // (r e)(r' e) = rr' e
        let e = base.group().identity();
        let prod = t.multiply(&TGRElement::pure(a, e), &TGRElement::pure(a, e)).unwrap();
        assert_eq!(prod, TGRElement::pure(base.ring().mul(a, a), e));
    }

    #[test]
    fn multiply_rejects_foreign_support() {
        let base = gring(7, 1, None, FiniteGroup::symmetric(3).unwrap(), ActionSpec::Trivial);
        let h = Subgroup::generated(base.group(), &[1]);
        let t = TwistedGroupRing::new(Arc::clone(&base), h).unwrap();
        let outside = (0..6).find(|&g| !t.subgroup().contains(g)).unwrap();
        assert!(t.multiply(&TGRElement::pure(1, outside), &t.one()).is_err());
    }

    #[test]
    fn tau_special_cases() {
        let base = gring(7, 1, None, FiniteGroup::symmetric(3).unwrap(), ActionSpec::Trivial);
        let g = base.group();
        let t12 = g.find_element("(1 2)").unwrap();
        let t13 = g.find_element("(1 3)").unwrap();
        let h = Subgroup::generated(g, &[t12]);
        let whole = Subgroup::whole(g);
        let inc = rho(&base, &h, &whole).unwrap();
        assert_eq!(inc.apply(&TGRElement::pure(3, t12)), TGRElement::pure(3, t12));
        let c = gamma(&base, t13, &h).unwrap();
        assert_eq!(c.apply(&TGRElement::pure(3, t12)), TGRElement::pure(3, g.conj(t13, t12)));
        // x⁻¹Hx ⊄ K
        let err = tau_hom(&base, &h, t13, &h).unwrap_err();
        assert!(matches!(err, Error::Conjugation { h, .. } if h == t12));
    }

    #[test]
    fn tau_functoriality_and_normalizer_automorphisms() {
        let base = gring(2, 6, None, FiniteGroup::cyclic(6).unwrap(), ActionSpec::Frobenius(1));
        let g = Arc::clone(base.group());
        let subs = enumerate_subgroups(&g, 48).unwrap();
        let samples: Vec<TGRElement> = [(3usize, 1usize), (17, 2), (63, 5), (40, 0)].iter().map(|&(r, h)| TGRElement::pure(r, h)).collect();
        for h in &subs {
            for j in subs.iter().filter(|j| h.is_subgroup_of(j)) {
                for k in subs.iter().filter(|k| j.is_subgroup_of(k)) {
                    for x in 0..6 {
                        for y in 0..6 {
                            let (Ok(f), Ok(f2)) = (tau_hom(&base, h, x, j), tau_hom(&base, j, y, k)) else { continue };
                            let direct = tau_hom(&base, h, g.mul(x, y), k).unwrap();
                            for s in samples.iter().filter(|s| s.support().all(|e| h.contains(e))) {
                                assert_eq!(f2.apply(&f.apply(s)), direct.apply(s));
                            }
                        }
                    }
                }
            }
            // abelian: every x normalizes H, with inverse Τ(H, x⁻¹, H)
            for x in 0..6 {
                let f = tau_hom(&base, h, x, h).unwrap();
                let back = tau_hom(&base, h, g.inv(x), h).unwrap();
                for (r, e) in TwistedGroupRing::new(Arc::clone(&base), h.clone()).unwrap().pure_elements() {
                    let a = TGRElement::pure(r, e);
                    assert_eq!(back.apply(&f.apply(&a)), a);
                }
            }
        }
    }

    #[test]
    fn gamma_composes_like_the_group() {
        let base = gring(7, 1, None, FiniteGroup::symmetric(3).unwrap(), ActionSpec::Trivial);
        let g = Arc::clone(base.group());
        for h in enumerate_subgroups(&g, 48).unwrap() {
            for a in 0..6 {
                for b in 0..6 {
                    let gb = gamma(&base, b, &h).unwrap();
                    let ga = gamma(&base, a, &h.conjugate(b)).unwrap();
                    let gab = gamma(&base, g.mul(a, b), &h).unwrap();
                    for &e in h.elements() {
                        let x = TGRElement::pure(5, e);
                        assert_eq!(ga.apply(&gb.apply(&x)), gab.apply(&x));
                    }
                }
            }
        }
    }

    #[test]
    fn shift_maps_compose_and_are_left_linear() {
        let base = gring(3, 2, None, FiniteGroup::cyclic(2).unwrap(), ActionSpec::Frobenius(1));
        let g = Arc::clone(base.group());
        let k = TwistedGroupRing::new(Arc::clone(&base), Subgroup::whole(&g)).unwrap();
        assert!(shift_map(&TwistedGroupRing::new(Arc::clone(&base), Subgroup::trivial(&g)).unwrap(), 1).is_err());
        let pures = k.pure_elements();
        for y in 0..2 {
            for y2 in 0..2 {
                let (s, s2) = (shift_map(&k, y).unwrap(), shift_map(&k, y2).unwrap());
                let s21 = shift_map(&k, g.mul(y2, y)).unwrap();
                for &(r, h) in &pures {
                    let m = TGRElement::pure(r, h);
                    assert_eq!(s.apply(&s2.apply(&m)), s21.apply(&m));
                }
            }
            let s = shift_map(&k, y).unwrap();
            for &(r, h) in &pures {
                for &(r2, h2) in &pures {
                    let (a, m) = (TGRElement::pure(r, h), TGRElement::pure(r2, h2));
                    assert_eq!(s.apply(&k.mul_unchecked(&a, &m)), k.mul_unchecked(&a, &s.apply(&m)));
                }
            }
        }
        assert_eq!(shift_map(&k, 0).unwrap().apply(&TGRElement::pure(4, 1)), TGRElement::pure(4, 1));
    }

    #[test]
    fn left_and_right_bases_round_trip() {
        let base = gring(7, 1, None, FiniteGroup::symmetric(3).unwrap(), ActionSpec::Trivial);
        let g = Arc::clone(base.group());
        let subs = enumerate_subgroups(&g, 48).unwrap();
        for h in &subs {
            for k in subs.iter().filter(|k| h.is_subgroup_of(k)) {
                let lb = left_basis_decompose(&base, h, k).unwrap();
                let rb = right_basis(&base, h, k).unwrap();
                assert_eq!(lb.rank(), k.order() / h.order());
                let kr = TwistedGroupRing::new(Arc::clone(&base), k.clone()).unwrap();
                for (r, e) in kr.pure_elements() {
                    let a = TGRElement::pure(r, e);
                    assert_eq!(lb.forward(&lb.express(&a).unwrap()).unwrap(), a);
                    assert_eq!(rb.reassemble(&rb.express(&a).unwrap()).unwrap(), a);
                }
            }
        }
    }

    #[test]
    fn right_basis_over_the_trivial_subgroup_twists_coefficients() {
        let base = gring(3, 2, Some(vec![2, 2, 1]), FiniteGroup::cyclic(2).unwrap(), ActionSpec::Frobenius(1));
        let g = Arc::clone(base.group());
        let a = base.ring().as_field().unwrap().generator();
        let x = TGRElement::pure(a, 1);
        let coeffs = right_basis_express(&base, &Subgroup::trivial(&g), &Subgroup::whole(&g), &x).unwrap();
        // aσ = σ·θ_σ⁻¹(a) = σ·a³
        let a3 = base.ring().as_field().unwrap().pow(a, 3);
        assert_eq!(coeffs, vec![TGRElement::zero(), TGRElement::pure(a3, 0)]);
        let k = TwistedGroupRing::new(Arc::clone(&base), Subgroup::whole(&g)).unwrap();
        assert_eq!(k.multiply(&TGRElement::pure(1, 1), &coeffs[1]).unwrap(), x);
    }
}
