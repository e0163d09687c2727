use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{alternate_double_coset_reps, double_coset_reps, FiniteGroup, Subgroup};
use crate::mackey::abelian::{AbMap, AbValue};

/// Values on every subgroup with restriction, transfer and conjugation.
///
/// For `H ⊆ K`, `res[(H, K)]: M(K) → M(H)` and `tr[(H, K)]: M(H) → M(K)`,
/// keyed by positions in `subgroups`; `conj[(g, H)]: M(H) → M(gHg⁻¹)`.
#[derive(Debug, Clone, Serialize)]
pub struct MackeyData {
    pub label: String,
    #[serde(skip)]
    pub group: Arc<FiniteGroup>,
    #[serde(serialize_with = "serialize_subgroups")]
    pub subgroups: Vec<Subgroup>,
    pub values: Vec<AbValue>,
    #[serde(serialize_with = "serialize_pairs")]
    pub res: BTreeMap<(usize, usize), AbMap>,
    #[serde(serialize_with = "serialize_pairs")]
    pub tr: BTreeMap<(usize, usize), AbMap>,
    #[serde(serialize_with = "serialize_pairs")]
    pub conj: BTreeMap<(usize, usize), AbMap>,
    /// Set when the values come from outside the verified pipeline.
    pub external_data: bool,
}

fn serialize_subgroups<S: serde::Serializer>(subs: &[Subgroup], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(subs.iter().map(|h| h.elements()))
}

fn serialize_pairs<S: serde::Serializer>(m: &BTreeMap<(usize, usize), AbMap>, s: S) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry<'a> {
        key: (usize, usize),
        map: &'a crate::mackey::abelian::MapData,
    }
    s.collect_seq(m.iter().map(|(&key, map)| Entry { key, map: &map.data }))
}

impl MackeyData {
    /// Assembles the data from per-subgroup callbacks, after checking that
    /// every map has the right endpoints.
    pub fn build(
        label: impl Into<String>,
        group: &Arc<FiniteGroup>,
        subgroups: Vec<Subgroup>,
        values: Vec<AbValue>,
        mut res: impl FnMut(usize, usize) -> Result<AbMap>,
        mut tr: impl FnMut(usize, usize) -> Result<AbMap>,
        mut conj: impl FnMut(usize, usize) -> Result<AbMap>,
    ) -> Result<Self> {
        let mut data = Self {
            label: label.into(),
            group: Arc::clone(group),
            subgroups,
            values,
            res: BTreeMap::new(),
            tr: BTreeMap::new(),
            conj: BTreeMap::new(),
            external_data: false,
        };
        let n = data.subgroups.len();
        for h in 0..n {
            for k in 0..n {
                if data.subgroups[h].is_subgroup_of(&data.subgroups[k]) {
                    data.res.insert((h, k), res(h, k)?);
                    data.tr.insert((h, k), tr(h, k)?);
                }
            }
            for g in 0..group.order() {
                data.conj.insert((g, h), conj(g, h)?);
            }
        }
        data.validate()?;
        Ok(data)
    }

    fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::InvalidAbelian(format!("{what} has the wrong endpoints")));
        for (&(h, k), m) in &self.res {
            if m.source != self.values[k] || m.target != self.values[h] {
                return bad("a restriction");
            }
        }
        for (&(h, k), m) in &self.tr {
            if m.source != self.values[h] || m.target != self.values[k] {
                return bad("a transfer");
            }
        }
        for (&(g, h), m) in &self.conj {
            let target = self.index(&self.subgroups[h].conjugate(g))?;
            if m.source != self.values[h] || m.target != self.values[target] {
                return bad("a conjugation");
            }
        }
        Ok(())
    }

    pub fn index(&self, s: &Subgroup) -> Result<usize> {
        self.subgroups
            .binary_search(s)
            .map_err(|_| Error::InvalidAbelian(format!("no value at {}", s.describe())))
    }

    fn res(&self, h: usize, k: usize) -> &AbMap {
        &self.res[&(h, k)]
    }

    fn tr(&self, h: usize, k: usize) -> &AbMap {
        &self.tr[&(h, k)]
    }

    fn conj(&self, g: usize, h: usize) -> &AbMap {
        &self.conj[&(g, h)]
    }

    fn conj_index(&self, g: usize, h: usize) -> usize {
        self.index(&self.subgroups[h].conjugate(g)).expect("subgroup lists are closed under conjugation")
    }

    /// `Σ_{x} tr^J_{J∩ˣK} ∘ c_x ∘ res^K_{Jˣ∩K}` over the given representatives.
    pub fn mackey_sum(&self, j: usize, k: usize, reps: &[usize]) -> Result<AbMap> {
        let (js, ks) = (&self.subgroups[j], &self.subgroups[k]);
        let mut total = AbMap::zero(&self.values[k], &self.values[j]);
        for &x in reps {
            let lower = self.index(&js.conjugate_inv(x).intersection(ks))?;
            let upper = self.index(&js.intersection(&ks.conjugate(x)))?;
            let term = self.res(lower, k).then(self.conj(x, lower))?.then(self.tr(upper, j))?;
            total = total.add(&term)?;
        }
        Ok(total)
    }
}

/// Outcome of one axiom over all of its instances.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomVerdict {
    pub axiom: String,
    pub instances: usize,
    pub failures: usize,
    /// The first few failing instances.
    pub witnesses: Vec<String>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub verdicts: Vec<AxiomVerdict>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn failing(&self) -> Vec<&str> {
        self.verdicts.iter().filter(|v| !v.pass).map(|v| v.axiom.as_str()).collect()
    }
}

const MAX_WITNESSES: usize = 5;

/// A single instance: `None` when it holds, otherwise a description.
type Check<'a> = Box<dyn Fn() -> Option<String> + Send + Sync + 'a>;

fn verdict(axiom: &str, checks: Vec<Check<'_>>) -> AxiomVerdict {
    let failures: Vec<String> = checks.par_iter().filter_map(|c| c()).collect();
    AxiomVerdict {
        axiom: axiom.to_string(),
        instances: checks.len(),
        failures: failures.len(),
        pass: failures.is_empty(),
        witnesses: failures.into_iter().take(MAX_WITNESSES).collect(),
    }
}

fn equal(a: Result<AbMap>, b: Result<AbMap>) -> bool {
    matches!((a, b), (Ok(x), Ok(y)) if x == y)
}

/// Runs MF0 to MF6 over every admissible instance. MF6 is evaluated with the
/// canonical and with the alternate double coset representatives, and both
/// sums must equal `res ∘ tr`.
pub fn check_axioms(m: &MackeyData) -> AxiomReport {
    let n = m.subgroups.len();
    let group = &m.group;
    let subs = &m.subgroups;
    let sub = |a: usize, b: usize| subs[a].is_subgroup_of(&subs[b]);
    let name = |i: usize| subs[i].describe();
    let el = |g: usize| group.element_label(g).to_string();

    let mut mf0: Vec<Check> = Vec::new();
    for (h, sh) in subs.iter().enumerate() {
        mf0.push(Box::new(move || (*m.res(h, h) != AbMap::identity(&m.values[h])).then(|| format!("res_H^H != id, H = {}", name(h)))));
        mf0.push(Box::new(move || (*m.tr(h, h) != AbMap::identity(&m.values[h])).then(|| format!("tr_H^H != id, H = {}", name(h)))));
        for &g in sh.elements() {
            mf0.push(Box::new(move || {
                (*m.conj(g, h) != AbMap::identity(&m.values[h])).then(|| format!("c_{} != id on M({})", el(g), name(h)))
            }));
        }
    }

    let mut mf1: Vec<Check> = Vec::new();
    let mut mf2: Vec<Check> = Vec::new();
    for j in 0..n {
        for h in (0..n).filter(|&h| sub(j, h)) {
            for k in (0..n).filter(|&k| sub(h, k)) {
                mf1.push(Box::new(move || {
                    (!equal(m.res(h, k).then(m.res(j, h)), Ok(m.res(j, k).clone())))
                        .then(|| format!("res_J^H res_H^K != res_J^K, J = {}, H = {}, K = {}", name(j), name(h), name(k)))
                }));
                mf2.push(Box::new(move || {
                    (!equal(m.tr(j, h).then(m.tr(h, k)), Ok(m.tr(j, k).clone())))
                        .then(|| format!("tr_H^K tr_J^H != tr_J^K, J = {}, H = {}, K = {}", name(j), name(h), name(k)))
                }));
            }
        }
    }

    let mut mf3: Vec<Check> = Vec::new();
    for h in 0..n {
        for a in 0..group.order() {
            for b in 0..group.order() {
                mf3.push(Box::new(move || {
                    let bh = m.conj_index(b, h);
                    (!equal(m.conj(b, h).then(m.conj(a, bh)), Ok(m.conj(group.mul(a, b), h).clone())))
                        .then(|| format!("c_{} c_{} != c_{} on M({})", el(a), el(b), el(group.mul(a, b)), name(h)))
                }));
            }
        }
    }

    let mut mf4: Vec<Check> = Vec::new();
    let mut mf5: Vec<Check> = Vec::new();
    for h in 0..n {
        for k in (0..n).filter(|&k| sub(h, k)) {
            for g in 0..group.order() {
                mf4.push(Box::new(move || {
                    let (gh, gk) = (m.conj_index(g, h), m.conj_index(g, k));
                    (!equal(m.res(h, k).then(m.conj(g, h)), m.conj(g, k).then(m.res(gh, gk))))
                        .then(|| format!("c_g res_H^K != res c_g, g = {}, H = {}, K = {}", el(g), name(h), name(k)))
                }));
                mf5.push(Box::new(move || {
                    let (gh, gk) = (m.conj_index(g, h), m.conj_index(g, k));
                    (!equal(m.tr(h, k).then(m.conj(g, k)), m.conj(g, h).then(m.tr(gh, gk))))
                        .then(|| format!("c_g tr_H^K != tr c_g, g = {}, H = {}, K = {}", el(g), name(h), name(k)))
                }));
            }
        }
    }

    let mut mf6: Vec<Check> = Vec::new();
    for h in 0..n {
        for j in (0..n).filter(|&j| sub(j, h)) {
            for k in (0..n).filter(|&k| sub(k, h)) {
                mf6.push(Box::new(move || {
                    let lhs = m.tr(k, h).then(m.res(j, h)).ok()?;
                    let canonical: Vec<usize> =
                        double_coset_reps(&subs[j], &subs[k], &subs[h]).ok()?.into_iter().map(|d| d.rep).collect();
                    let alternate = alternate_double_coset_reps(&subs[j], &subs[k], &subs[h]).ok()?;
                    let first = m.mackey_sum(j, k, &canonical);
                    let second = m.mackey_sum(j, k, &alternate);
                    let ok = matches!((&first, &second), (Ok(a), Ok(b)) if *a == lhs && *b == lhs);
                    (!ok).then(|| {
                        format!(
                            "res_J^H tr_K^H != Σ over {} double cosets, J = {}, K = {}, H = {}",
                            canonical.len(),
                            name(j),
                            name(k),
                            name(h)
                        )
                    })
                }));
            }
        }
    }

    let verdicts = [("MF0", mf0), ("MF1", mf1), ("MF2", mf2), ("MF3", mf3), ("MF4", mf4), ("MF5", mf5), ("MF6", mf6)]
        .into_iter()
        .map(|(axiom, checks)| verdict(axiom, checks))
        .collect();
    AxiomReport { verdicts }
}
