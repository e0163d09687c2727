//! Instances with combinatorial or finite-field values.

use std::sync::Arc;

use crate::burnside::{class_index, orbit_decompose, subgroup_classes, GSet};
use crate::error::{Error, Result};
use crate::group::{enumerate_subgroups, left_coset_reps, FiniteGroup, Subgroup};
use crate::linalg::IntMatrix;
use crate::mackey::abelian::{AbMap, AbValue, MapData};
use crate::mackey::data::MackeyData;
use crate::ring::{FiniteRing, RingSpec};
use crate::twisted::gring::{ActionSpec, GRing};

/// `M(H) = Z` with every map the identity. Transfer followed by restriction
/// is the identity while the double coset sum counts the double cosets, so
/// this fails exactly the decomposition axiom.
pub fn constant_functor(group: &Arc<FiniteGroup>, bound: usize) -> Result<MackeyData> {
    let subs = enumerate_subgroups(group, bound)?;
    let z = AbValue::free(1);
    let values = vec![z.clone(); subs.len()];
    let id = || Ok(AbMap::identity(&z));
    MackeyData::build("constant Z", group, subs, values, |_, _| id(), |_, _| id(), |_, _| id())
}

/// Counts of each transitive type in `x`, indexed by `classes`.
fn decompose(x: &GSet, classes: &[Subgroup]) -> Result<Vec<i64>> {
    let mut counts = vec![0; classes.len()];
    for orbit in orbit_decompose(x) {
        let stab = Subgroup::from_elements(x.group(), &orbit.stabilizer)?;
        let c = class_index(classes, &stab, x.acting()).ok_or_else(|| Error::InvalidGSet("stabilizer outside the class list".into()))?;
        counts[c] += 1;
    }
    Ok(counts)
}

/// The Burnside ring functor: `M(H) = A(H)` on the basis `[H/L]`, `L` over
/// conjugacy class representatives; restriction forgets, transfer induces,
/// conjugation transports the action.
pub fn burnside_mackey(group: &Arc<FiniteGroup>, bound: usize) -> Result<MackeyData> {
    let subs = enumerate_subgroups(group, bound)?;
    let classes: Vec<Vec<Subgroup>> = subs.iter().map(|h| subgroup_classes(h, bound)).collect::<Result<_>>()?;
    let values: Vec<AbValue> = classes.iter().map(|c| AbValue::free(c.len())).collect();
    let index = |s: &Subgroup| subs.binary_search(s).expect("conjugates are subgroups");
    let map = |from: usize, to: usize, columns: Vec<Vec<i64>>| {
        AbMap::new(
            values[from].clone(),
            values[to].clone(),
            MapData::Matrix(IntMatrix::from_columns(values[to].size(), &columns)),
        )
    };
    let res = |h: usize, k: usize| {
        let cols = classes[k]
            .iter()
            .map(|l| decompose(&GSet::cosets(&subs[k], l)?.restrict(&subs[h])?, &classes[h]))
            .collect::<Result<Vec<_>>>()?;
        map(k, h, cols)
    };
    let tr = |h: usize, k: usize| {
        let cols = classes[h]
            .iter()
            .map(|l| decompose(&GSet::cosets(&subs[h], l)?.induce(&subs[k])?, &classes[k]))
            .collect::<Result<Vec<_>>>()?;
        map(h, k, cols)
    };
    let conj = |g: usize, h: usize| {
        let target = index(&subs[h].conjugate(g));
        let cols = classes[h]
            .iter()
            .map(|l| decompose(&GSet::cosets(&subs[h], l)?.conjugate(g), &classes[target]))
            .collect::<Result<Vec<_>>>()?;
        map(h, target, cols)
    };
    MackeyData::build(format!("Burnside A(-) on {}", group.label()), group, subs.clone(), values.clone(), res, tr, conj)
}

/// The standard Galois setting: `GF(p^k)` with `C_k` acting by Frobenius.
pub fn galois_gring(p: u32, k: usize) -> Result<Arc<GRing>> {
    let ring = Arc::new(FiniteRing::build(&RingSpec::Gf { p, k, modulus: None })?);
    Ok(Arc::new(GRing::new(ring, Arc::new(FiniteGroup::cyclic(k)?), &ActionSpec::Frobenius(1))?))
}

/// `M(H) = (L^H)^×` for `L = GF(p^k)` and `C_k` acting by Frobenius.
pub fn units_galois_mackey(p: u32, k: usize) -> Result<MackeyData> {
    units_mackey(&galois_gring(p, k)?)
}

/// Units of the fixed fields with inclusion as restriction, the norm
/// `∏_{z ∈ K/H} θ_z(x)` as transfer and `θ_g` as conjugation. Needs a field.
pub fn units_mackey(base: &Arc<GRing>) -> Result<MackeyData> {
    let field = base
        .ring()
        .as_field()
        .cloned()
        .ok_or_else(|| Error::Unsupported("the units instance needs a finite field".into()))?;
    let group = Arc::clone(base.group());
    let subs = enumerate_subgroups(&group, group.order().max(1))?;
    // units of L^H in index order; position is the abelian group element
    let units: Vec<Vec<usize>> = subs
        .iter()
        .map(|h| base.fixed_subring(h).elements.into_iter().filter(|&x| x != 0).collect())
        .collect();
    let values: Vec<AbValue> = units
        .iter()
        .map(|u| {
            let table = u.iter().map(|&a| u.iter().map(|&b| u.binary_search(&field.mul(a, b)).unwrap()).collect()).collect();
            let degree = (u.len() + 1).ilog(field.p() as usize);
            let label = if degree == 1 { format!("GF({})^x", field.p()) } else { format!("GF({}^{degree})^x", field.p()) };
            AbValue::table(label, table, u.binary_search(&1).unwrap())
        })
        .collect::<Result<_>>()?;
    let index = |s: &Subgroup| subs.binary_search(s).expect("conjugates are subgroups");
    let table_map = |from: usize, to: usize, f: &dyn Fn(usize) -> usize| {
        let images = units[from]
            .iter()
            .map(|&x| units[to].binary_search(&f(x)).map_err(|_| Error::InvalidAbelian(format!("{x} leaves the target units"))))
            .collect::<Result<Vec<_>>>()?;
        AbMap::new(values[from].clone(), values[to].clone(), MapData::Table(images))
    };
    let res = |h: usize, k: usize| table_map(k, h, &|x| x);
    let tr = |h: usize, k: usize| {
        let reps = left_coset_reps(&subs[h], &subs[k])?;
        table_map(h, k, &|x| reps.iter().fold(1, |acc, &z| field.mul(acc, base.theta(z, x))))
    };
    let conj = |g: usize, h: usize| table_map(h, index(&subs[h].conjugate(g)), &|x| base.theta(g, x));
    MackeyData::build(format!("units of fixed fields of {}", field.label()), &group, subs.clone(), values.clone(), res, tr, conj)
}

/// Quillen's `K_{2i−1}(GF(q)) ≅ Z/(q^i − 1)` on the fixed fields of
/// `GF(p^k)`: restriction (field extension) is multiplication by
/// `(q^{mi} − 1)/(q^i − 1)`, transfer reduces, and `σʲ` multiplies by
/// `p^{ji}`. These formulas are not derived here, so the result is flagged as
/// external data; at `i = 1` it is compared with [`units_galois_mackey`]
/// through discrete logarithms and any mismatch is an error.
pub fn quillen_kn_instance(p: u32, k: usize, i: u32) -> Result<MackeyData> {
    if i == 0 {
        return Err(Error::Unsupported("K_{2i-1} needs i >= 1".into()));
    }
    let group = Arc::new(FiniteGroup::cyclic(k)?);
    let subs = enumerate_subgroups(&group, k.max(1))?;
    let p = p as u64;
    let orders: Vec<u64> = subs.iter().map(|h| p.pow((k / h.order()) as u32 * i) - 1).collect();
    if orders.iter().any(|&o| o > 1 << 16) {
        return Err(Error::Unsupported("cyclic values above 2^16 elements".into()));
    }
    let values: Vec<AbValue> = orders
        .iter()
        .zip(&subs)
        .map(|(&o, h)| {
            let d = k / h.order();
            let mut v = AbValue::cyclic(o as usize)?;
            v.label = format!("K_{}(GF({p}^{d})) = Z/{o}", 2 * i - 1);
            Ok(v)
        })
        .collect::<Result<_>>()?;
    let index = |s: &Subgroup| subs.binary_search(s).expect("conjugates are subgroups");
    let scale = |from: usize, to: usize, factor: u64| {
        let n = orders[to];
        let images = (0..orders[from]).map(|a| ((a * factor) % n) as usize).collect();
        AbMap::new(values[from].clone(), values[to].clone(), MapData::Table(images))
    };
    let res = |h: usize, k: usize| scale(k, h, orders[h] / orders[k]);
    let tr = |h: usize, k: usize| scale(h, k, 1);
    let conj = |g: usize, h: usize| {
        let factor = (0..g).fold(1u64, |acc, _| (acc * p.pow(i)) % orders[h].max(1));
        scale(h, index(&subs[h].conjugate(g)), factor)
    };
    let mut data = MackeyData::build(
        format!("K_{} of fixed fields of GF({p}^{k}) (external data)", 2 * i - 1),
        &group,
        subs.clone(),
        values.clone(),
        res,
        tr,
        conj,
    )?;
    data.external_data = true;
    if i == 1 {
        units_oracle(p as u32, k, &data)?;
    }
    Ok(data)
}

/// Checks that discrete logs along the compatible generators
/// `ζ^{(p^k−1)/(p^d−1)}` carry the units instance onto `data`.
fn units_oracle(p: u32, k: usize, data: &MackeyData) -> Result<()> {
    let units = units_galois_mackey(p, k)?;
    let field = crate::linalg::FiniteField::new(p, k)?;
    let zeta = field.generator();
    let full = field.size() as u64 - 1;
    // log[h][position in units of L^H] = discrete log in Z/(p^d − 1)
    let logs: Vec<Vec<usize>> = units
        .subgroups
        .iter()
        .map(|h| {
            let n = (p as u64).pow((k / h.order()) as u32) - 1;
            let gen = field.pow(zeta, full / n);
            let mut members: Vec<(usize, usize)> = (0..n as usize).map(|a| (field.pow(gen, a as u64), a)).collect();
            members.sort_unstable();
            members.into_iter().map(|(_, a)| a).collect()
        })
        .collect();
    let compare = |what: &str, key: (usize, usize), from: usize, to: usize, u: &AbMap, q: &AbMap| -> Result<()> {
        let (ui, qi) = (u.images().unwrap(), q.images().unwrap());
        for (pos, &img) in ui.iter().enumerate() {
            if logs[to][img] != qi[logs[from][pos]] {
                return Err(Error::Oracle(format!("{what} {key:?} disagrees with the units instance")));
            }
        }
        Ok(())
    };
    for (&(h, k2), m) in &units.res {
        compare("restriction", (h, k2), k2, h, m, &data.res[&(h, k2)])?;
    }
    for (&(h, k2), m) in &units.tr {
        compare("transfer", (h, k2), h, k2, m, &data.tr[&(h, k2)])?;
    }
    for (&(g, h), m) in &units.conj {
        let target = units.index(&units.subgroups[h].conjugate(g))?;
        compare("conjugation", (g, h), h, target, m, &data.conj[&(g, h)])?;
    }
    Ok(())
}
