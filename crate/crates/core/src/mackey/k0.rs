//! `K₀` of twisted group rings, of the endomorphism rings they are
//! isomorphic to, and of untwisted group algebras built from scratch.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{enumerate_subgroups, left_coset_reps, Subgroup};
use crate::linalg::{AlgebraHom, IntMatrix, Matrix, StructureAlgebra};
use crate::mackey::abelian::{AbMap, AbValue, MapData};
use crate::mackey::data::MackeyData;
use crate::module::{k0_induced_map, ChangeOfRings, K0Basis};
use crate::twisted::auslander::{auslander_map, mult_matrix, theta_matrix, AuslanderMap};
use crate::twisted::bridge::{as_structure_algebra, hom_to_algebra, AlgebraBridge};
use crate::twisted::gring::GRing;
use crate::twisted::tgr::{gamma, rho, right_basis};

/// A `K₀` Mackey functor together with the block bases it is written in.
#[derive(Debug, Clone, Serialize)]
pub struct K0Mackey {
    pub data: MackeyData,
    pub bases: Vec<K0Basis>,
}

/// An inclusion of algebras with the right basis of the larger over the smaller.
type Inclusion = (AlgebraHom, Vec<Vec<u32>>);

/// Everything needed to evaluate the induced maps of one family of algebras.
struct Family {
    subs: Vec<Subgroup>,
    bases: Vec<K0Basis>,
    /// `(H, K) ↦ (inclusion, right basis of K over H)`
    inclusions: BTreeMap<(usize, usize), Inclusion>,
    /// `(g, H) ↦ conjugation onto gHg⁻¹`
    conjugations: BTreeMap<(usize, usize), AlgebraHom>,
}

impl Family {
    fn pairs(subs: &[Subgroup]) -> Vec<(usize, usize)> {
        let n = subs.len();
        (0..n).flat_map(|h| (0..n).map(move |k| (h, k))).filter(|&(h, k)| subs[h].is_subgroup_of(&subs[k])).collect()
    }

    fn mackey(self, label: String) -> Result<K0Mackey> {
        let values: Vec<AbValue> = self.bases.iter().map(|b| AbValue::free(b.rank())).collect();
        let index = |s: &Subgroup| self.subs.binary_search(s).expect("conjugates are subgroups");
        let wrap = |from: usize, to: usize, m: IntMatrix| AbMap::new(values[from].clone(), values[to].clone(), MapData::Matrix(m));
        let keys: Vec<(usize, usize)> = self.inclusions.keys().copied().collect();
        let computed: Vec<((usize, usize), IntMatrix, IntMatrix)> = keys
            .par_iter()
            .map(|&(h, k)| {
                let (f, basis) = &self.inclusions[&(h, k)];
                let res = k0_induced_map(f, ChangeOfRings::Restrict, None, &self.bases[h], &self.bases[k])?;
                let tr = k0_induced_map(f, ChangeOfRings::Extend, Some(basis), &self.bases[h], &self.bases[k])?;
                Ok(((h, k), res, tr))
            })
            .collect::<Result<_>>()?;
        let conj_keys: Vec<(usize, usize)> = self.conjugations.keys().copied().collect();
        let conj: BTreeMap<(usize, usize), IntMatrix> = conj_keys
            .par_iter()
            .map(|&(g, h)| {
                let f = &self.conjugations[&(g, h)];
                let target = index(&self.subs[h].conjugate(g));
                let one = vec![f.target().unit().to_vec()];
                let m = k0_induced_map(f, ChangeOfRings::Extend, Some(&one), &self.bases[h], &self.bases[target])?;
                Ok(((g, h), m))
            })
            .collect::<Result<_>>()?;
        let mut res = BTreeMap::new();
        let mut tr = BTreeMap::new();
        for (key, r, t) in computed {
            res.insert(key, r);
            tr.insert(key, t);
        }
        let group = Arc::clone(self.subs[0].group());
        let data = MackeyData::build(
            label,
            &group,
            self.subs.clone(),
            values.clone(),
            |h, k| wrap(k, h, res[&(h, k)].clone()),
            |h, k| wrap(h, k, tr[&(h, k)].clone()),
            |g, h| wrap(h, index(&self.subs[h].conjugate(g)), conj[&(g, h)].clone()),
        )?;
        Ok(K0Mackey { data, bases: self.bases })
    }
}

fn subgroups_of(base: &GRing, bound: usize) -> Result<Vec<Subgroup>> {
    enumerate_subgroups(base.group(), bound)
}

fn bridges(base: &Arc<GRing>, subs: &[Subgroup]) -> Result<Vec<AlgebraBridge>> {
    subs.par_iter()
        .map(|h| as_structure_algebra(&crate::twisted::tgr::TwistedGroupRing::new(Arc::clone(base), h.clone())?))
        .collect()
}

/// `M(H) = K₀(R_θ[H])`: restriction and transfer along `ρ`, conjugation by
/// extension along `γ^g`.
pub fn k0_twisted_mackey(base: &Arc<GRing>, bound: usize) -> Result<K0Mackey> {
    let subs = subgroups_of(base, bound)?;
    let bridges = bridges(base, &subs)?;
    let bases = bridges.par_iter().map(|b| K0Basis::new(b.algebra())).collect::<Result<Vec<_>>>()?;
    let inclusions = Family::pairs(&subs)
        .into_par_iter()
        .map(|(h, k)| {
            let f = hom_to_algebra(&rho(base, &subs[h], &subs[k])?, &bridges[h], &bridges[k])?;
            let zs = right_basis(base, &subs[h], &subs[k])?
                .elements()
                .iter()
                .map(|z| bridges[k].to_vector(z))
                .collect::<Result<Vec<_>>>()?;
            Ok(((h, k), (f, zs)))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;
    let group = base.group();
    let conj_keys: Vec<(usize, usize)> = (0..subs.len()).flat_map(|h| (0..group.order()).map(move |g| (g, h))).collect();
    let conjugations = conj_keys
        .into_par_iter()
        .map(|(g, h)| {
            let target = subs.binary_search(&subs[h].conjugate(g)).expect("conjugates are subgroups");
            let f = hom_to_algebra(&gamma(base, g, &subs[h])?, &bridges[h], &bridges[target])?;
            Ok(((g, h), f))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;
    Family { subs, bases, inclusions, conjugations }.mackey(format!("K0 of {}_θ[-]", base.ring().label()))
}

/// Commutation of the squares relating `R_θ[-]` and `End_{R^-}(R)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquareReport {
    /// `A_K ∘ ρ = incl ∘ A_H` for `H ⊆ K`.
    pub inclusion_squares: usize,
    /// `A_{gHg⁻¹} ∘ γ^g = (φ ↦ θ_g φ θ_{g⁻¹}) ∘ A_H`.
    pub conjugation_squares: usize,
    pub failures: Vec<String>,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct EndomorphismMackey {
    pub data: MackeyData,
    pub bases: Vec<K0Basis>,
    pub squares: SquareReport,
}

/// `M(H) = K₀(End_{R^H}(R))` with maps along the inclusions
/// `End_{R^H}(R) ⊆ End_{R^K}(R)` and `φ ↦ θ_g φ θ_{g⁻¹}`, and a check that
/// the Auslander isomorphisms carry `ρ` and `γ^g` onto them.
pub fn endomorphism_mackey(base: &Arc<GRing>, bound: usize) -> Result<EndomorphismMackey> {
    let subs = subgroups_of(base, bound)?;
    let maps: Vec<AuslanderMap> = subs.par_iter().map(|h| auslander_map(base, h)).collect::<Result<_>>()?;
    if let Some((h, _)) = maps.iter().zip(&subs).map(|(m, h)| (h, m.verdict())).find(|(_, v)| !v.isomorphism) {
        return Err(Error::Unsupported(format!("the Auslander map is not an isomorphism at {}", h.describe())));
    }
    let field = maps[0].bridge.field().clone();
    let bases = maps.par_iter().map(|m| K0Basis::new(m.endomorphisms.algebra())).collect::<Result<Vec<_>>>()?;
    let group = Arc::clone(base.group());
    let mut failures = Vec::new();

    let mut inclusions = BTreeMap::new();
    let pairs = Family::pairs(&subs);
    for &(h, k) in &pairs {
        let incl = maps[h].endomorphisms.transport(&maps[k].endomorphisms, |m| m.clone())?;
        let reps = right_basis(base, &subs[h], &subs[k])?.reps().to_vec();
        let zs = reps
            .iter()
            .map(|&z| {
                let m = mult_matrix(&field, 1).mul(&theta_matrix(base, &field, z));
                maps[k].endomorphisms.coordinates(&m).ok_or_else(|| Error::Structural("θ_z is not R^K-linear".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let r = hom_to_algebra(&rho(base, &subs[h], &subs[k])?, &maps[h].bridge, &maps[k].bridge)?;
        if r.then(&maps[k].hom)?.matrix() != maps[h].hom.then(&incl)?.matrix() {
            failures.push(format!("inclusion square fails for H = {}, K = {}", subs[h].describe(), subs[k].describe()));
        }
        inclusions.insert((h, k), (incl, zs));
    }
    let mut conjugations = BTreeMap::new();
    for h in 0..subs.len() {
        for g in 0..group.order() {
            let target = subs.binary_search(&subs[h].conjugate(g)).expect("conjugates are subgroups");
            let (tg, tgi) = (theta_matrix(base, &field, g), theta_matrix(base, &field, group.inv(g)));
            let c = maps[h].endomorphisms.transport(&maps[target].endomorphisms, |m| tg.mul(m).mul(&tgi))?;
            let gm = hom_to_algebra(&gamma(base, g, &subs[h])?, &maps[h].bridge, &maps[target].bridge)?;
            if gm.then(&maps[target].hom)?.matrix() != maps[h].hom.then(&c)?.matrix() {
                failures.push(format!("conjugation square fails for g = {}, H = {}", group.element_label(g), subs[h].describe()));
            }
            conjugations.insert((g, h), c);
        }
    }
    let squares = SquareReport {
        inclusion_squares: pairs.len(),
        conjugation_squares: subs.len() * group.order(),
        pass: failures.is_empty(),
        failures,
    };
    let k0 = Family { subs, bases, inclusions, conjugations }
        .mackey(format!("K0 of End_(R^-)({})", base.ring().label()))?;
    Ok(EndomorphismMackey { data: k0.data, bases: k0.bases, squares })
}

/// `R[H]` built directly from the group table and the field, on the basis
/// `aⁱ·h` indexed `pos(h)·k + i`.
fn group_algebra(base: &GRing, h: &Subgroup) -> Result<StructureAlgebra> {
    let field = base.ring().as_field().ok_or_else(|| Error::Unsupported("group algebras need a field".into()))?;
    let k = field.degree();
    let p = field.p() as usize;
    let group = base.group();
    let els = h.elements();
    let labels = els.iter().flat_map(|&g| (0..k).map(move |i| format!("a^{i}.{g}"))).collect();
    let mut unit = vec![0; els.len() * k];
    unit[h.position(group.identity()).unwrap() * k] = 1;
    StructureAlgebra::from_dense(field.prime_field(), labels, unit, |x, y| {
        let r = field.mul(p.pow((x % k) as u32), p.pow((y % k) as u32));
        let pos = h.position(group.mul(els[x / k], els[y / k])).unwrap();
        let mut v = vec![0; els.len() * k];
        v[pos * k..(pos + 1) * k].copy_from_slice(&field.coords(r));
        v
    })
}

/// A linear map `aⁱ·h ↦ aⁱ·f(h)` between group algebras.
fn relabel(source: &Arc<StructureAlgebra>, target: &Arc<StructureAlgebra>, k: usize, from: &Subgroup, to: &Subgroup, f: impl Fn(usize) -> usize) -> Result<AlgebraHom> {
    let mut m = Matrix::zeros(source.field(), target.dim(), source.dim());
    for (pos, &h) in from.elements().iter().enumerate() {
        let dest = to.position(f(h)).ok_or(Error::NotInSubgroup(f(h)))?;
        for i in 0..k {
            m.set(dest * k + i, pos * k + i, 1);
        }
    }
    AlgebraHom::new(Arc::clone(source), Arc::clone(target), m)
}

/// Outcome of comparing the twisted pipeline with untwisted group algebras.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DressKukuReport {
    pub maps_compared: usize,
    pub mismatches: Vec<String>,
    pub identical: bool,
}

/// For a trivial action, rebuilds `K₀(R[-])` from untwisted group algebras and
/// compares every value and matrix with [`k0_twisted_mackey`].
pub fn dress_kuku_compare(base: &Arc<GRing>, bound: usize) -> Result<DressKukuReport> {
    if !base.is_trivial() {
        return Err(Error::Unsupported("the group algebra comparison needs a trivial action".into()));
    }
    let twisted = k0_twisted_mackey(base, bound)?.data;
    let subs = subgroups_of(base, bound)?;
    let k = base.ring().as_field().map(|f| f.degree()).unwrap_or(1);
    let algebras: Vec<Arc<StructureAlgebra>> = subs.par_iter().map(|h| group_algebra(base, h).map(Arc::new)).collect::<Result<_>>()?;
    let bases = algebras.par_iter().map(|a| K0Basis::new(a)).collect::<Result<Vec<_>>>()?;
    let group = base.group();
    let mut inclusions = BTreeMap::new();
    for (h, kk) in Family::pairs(&subs) {
        let f = relabel(&algebras[h], &algebras[kk], k, &subs[h], &subs[kk], |x| x)?;
        let zs = left_coset_reps(&subs[h], &subs[kk])?
            .into_iter()
            .map(|z| {
                let mut v = vec![0; algebras[kk].dim()];
                v[subs[kk].position(z).unwrap() * k] = 1;
                v
            })
            .collect();
        inclusions.insert((h, kk), (f, zs));
    }
    let mut conjugations = BTreeMap::new();
    for h in 0..subs.len() {
        for g in 0..group.order() {
            let target = subs.binary_search(&subs[h].conjugate(g)).expect("conjugates are subgroups");
            let f = relabel(&algebras[h], &algebras[target], k, &subs[h], &subs[target], |x| group.conj(g, x))?;
            conjugations.insert((g, h), f);
        }
    }
    let untwisted = Family { subs, bases, inclusions, conjugations }.mackey("K0 of R[-]".into())?.data;

    let mut mismatches = Vec::new();
    if twisted.values != untwisted.values {
        mismatches.push("values differ".to_string());
    }
    let mut compared = 0;
    for (name, a, b) in [("res", &twisted.res, &untwisted.res), ("tr", &twisted.tr, &untwisted.tr), ("conj", &twisted.conj, &untwisted.conj)] {
        for (key, m) in a {
            compared += 1;
            if b.get(key).map(|x| &x.data) != Some(&m.data) {
                mismatches.push(format!("{name} {key:?} differs"));
            }
        }
    }
    Ok(DressKukuReport { maps_compared: compared, identical: mismatches.is_empty(), mismatches })
}
