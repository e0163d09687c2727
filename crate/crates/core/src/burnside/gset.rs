use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{enumerate_subgroups, left_coset_reps, FiniteGroup, Subgroup};

/// A finite set with an action of a subgroup `H` of the ambient group:
/// `action[x][pos(h)] = h·x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GSet {
    acting: Subgroup,
    action: Vec<Vec<usize>>,
}

impl GSet {
    /// Checks that the identity fixes every point and `(gh)·x = g·(h·x)`.
    pub fn new(acting: Subgroup, action: Vec<Vec<usize>>) -> Result<Self> {
        let n = action.len();
        let group = Arc::clone(acting.group());
        let els = acting.elements();
        if action.iter().any(|row| row.len() != els.len() || row.iter().any(|&y| y >= n)) {
            return Err(Error::InvalidGSet(format!("every point needs {} images below {n}", els.len())));
        }
        let e = acting.position(group.identity()).unwrap();
        for (x, row) in action.iter().enumerate() {
            if row[e] != x {
                return Err(Error::InvalidGSet(format!("identity moves point {x}")));
            }
            for (a, &g) in els.iter().enumerate() {
                for (b, &h) in els.iter().enumerate() {
                    let gh = acting.position(group.mul(g, h)).unwrap();
                    if action[row[b]][a] != row[gh] {
                        return Err(Error::InvalidGSet(format!(
                            "({}·{})·{x} != {}·({}·{x})",
                            group.element_label(g),
                            group.element_label(h),
                            group.element_label(g),
                            group.element_label(h)
                        )));
                    }
                }
            }
        }
        Ok(Self { acting, action })
    }

    /// `H/K` as left cosets `zⱼK` with the left coset representatives of
    /// `K` in `H`; point `0` is the coset `K`.
    pub fn cosets(h: &Subgroup, k: &Subgroup) -> Result<Self> {
        let reps = left_coset_reps(k, h)?;
        let group = h.group();
        let mut which = vec![usize::MAX; group.order()];
        for (j, &z) in reps.iter().enumerate() {
            for &x in k.elements() {
                which[group.mul(z, x)] = j;
            }
        }
        let action = reps.iter().map(|&z| h.elements().iter().map(|&g| which[group.mul(g, z)]).collect()).collect();
        Ok(Self { acting: h.clone(), action })
    }

    pub fn point(h: &Subgroup) -> Self {
        Self { acting: h.clone(), action: vec![vec![0; h.order()]] }
    }

    pub fn empty(h: &Subgroup) -> Self {
        Self { acting: h.clone(), action: Vec::new() }
    }

    /// `H` acting on itself by left translation.
    pub fn regular(h: &Subgroup) -> Self {
        Self::cosets(h, &Subgroup::trivial(h.group())).unwrap()
    }

    pub fn acting(&self) -> &Subgroup {
        &self.acting
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.acting.group()
    }

    pub fn size(&self) -> usize {
        self.action.len()
    }

    /// `g·x`; `g` must lie in the acting subgroup.
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.action[x][self.acting.position(g).expect("element of the acting subgroup")]
    }

    fn same_acting(&self, other: &GSet) -> Result<()> {
        if self.acting != other.acting {
            return Err(Error::GroupMismatch("G-sets over different acting subgroups".into()));
        }
        Ok(())
    }

    /// `X ⊔ Y` with the points of `Y` shifted by `|X|`.
    pub fn disjoint_union(&self, other: &GSet) -> Result<GSet> {
        self.same_acting(other)?;
        let n = self.size();
        let mut action = self.action.clone();
        action.extend(other.action.iter().map(|row| row.iter().map(|&y| y + n).collect()));
        Ok(GSet { acting: self.acting.clone(), action })
    }

    /// `X × Y` with the diagonal action; `(x, y)` is point `x·|Y| + y`.
    pub fn product(&self, other: &GSet) -> Result<GSet> {
        self.same_acting(other)?;
        let m = other.size();
        let action = (0..self.size() * m)
            .map(|p| {
                let (x, y) = (p / m, p % m);
                self.action[x].iter().zip(&other.action[y]).map(|(&a, &b)| a * m + b).collect()
            })
            .collect();
        Ok(GSet { acting: self.acting.clone(), action })
    }

    /// The same set with the action restricted to `j ⊆ H`.
    pub fn restrict(&self, j: &Subgroup) -> Result<GSet> {
        if !j.is_subgroup_of(&self.acting) {
            return Err(Error::Containment("restriction to a subgroup outside the acting group".into()));
        }
        let action = self
            .action
            .iter()
            .map(|row| j.elements().iter().map(|&g| row[self.acting.position(g).unwrap()]).collect())
            .collect();
        Ok(GSet { acting: j.clone(), action })
    }

    /// The `gHg⁻¹`-set with `(gkg⁻¹)·x = k·x`.
    pub fn conjugate(&self, g: usize) -> GSet {
        let group = self.group();
        let target = self.acting.conjugate(g);
        let gi = group.inv(g);
        let action = self
            .action
            .iter()
            .map(|row| target.elements().iter().map(|&c| row[self.acting.position(group.conj(gi, c)).unwrap()]).collect())
            .collect();
        GSet { acting: target, action }
    }

    /// `H ×_J X` for a `J`-set `X` and `J ⊆ H`, on pairs `(zⱼ, x)` over the
    /// left coset representatives of `J` in `H`.
    pub fn induce(&self, h: &Subgroup) -> Result<GSet> {
        let j = &self.acting;
        let reps = left_coset_reps(j, h)?;
        let group = self.group();
        let mut split = vec![(usize::MAX, usize::MAX); group.order()];
        for (idx, &z) in reps.iter().enumerate() {
            for &x in j.elements() {
                split[group.mul(z, x)] = (idx, x);
            }
        }
        let n = self.size();
        let action = (0..reps.len() * n)
            .map(|p| {
                let (idx, x) = (p / n, p % n);
                h.elements()
                    .iter()
                    .map(|&g| {
                        let (idx2, jj) = split[group.mul(g, reps[idx])];
                        idx2 * n + self.act(jj, x)
                    })
                    .collect()
            })
            .collect();
        Ok(GSet { acting: h.clone(), action })
    }

    pub fn stabilizer(&self, x: usize) -> Subgroup {
        let els: Vec<usize> = self
            .acting
            .elements()
            .iter()
            .enumerate()
            .filter(|&(a, _)| self.action[x][a] == x)
            .map(|(_, &g)| g)
            .collect();
        Subgroup::from_elements(self.group(), &els).expect("stabilizers are subgroups")
    }

    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut pts: Vec<usize> = self.action[x].clone();
        pts.sort_unstable();
        pts.dedup();
        pts
    }

    /// Number of points fixed by every element of `k`.
    pub fn fixed_points(&self, k: &Subgroup) -> usize {
        let pos: Vec<usize> = k.elements().iter().map(|&g| self.acting.position(g).unwrap()).collect();
        self.action.iter().enumerate().filter(|(x, row)| pos.iter().all(|&a| row[a] == *x)).count()
    }
}

/// One orbit: its smallest point and the stabilizer of that point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Orbit {
    pub rep: usize,
    pub stabilizer: Vec<usize>,
    pub points: Vec<usize>,
}

/// Orbits in order of their smallest points.
pub fn orbit_decompose(x: &GSet) -> Vec<Orbit> {
    let mut seen = vec![false; x.size()];
    let mut out = Vec::new();
    for p in 0..x.size() {
        if seen[p] {
            continue;
        }
        let points = x.orbit(p);
        for &q in &points {
            seen[q] = true;
        }
        out.push(Orbit { rep: p, stabilizer: x.stabilizer(p).elements().to_vec(), points });
    }
    out
}

/// Representatives of the `H`-conjugacy classes of subgroups of `H`: the
/// smallest member (in subgroup order) of every class, sorted.
pub fn subgroup_classes(h: &Subgroup, bound: usize) -> Result<Vec<Subgroup>> {
    let all: Vec<Subgroup> = enumerate_subgroups(h.group(), bound)?.into_iter().filter(|s| s.is_subgroup_of(h)).collect();
    let mut reps: Vec<Subgroup> = Vec::new();
    for s in all {
        if !reps.iter().any(|r| are_conjugate_in(r, &s, h)) {
            reps.push(s);
        }
    }
    Ok(reps)
}

/// Whether `b = g a g⁻¹` for some `g ∈ h`.
pub fn are_conjugate_in(a: &Subgroup, b: &Subgroup, h: &Subgroup) -> bool {
    a.order() == b.order() && h.elements().iter().any(|&g| a.conjugate(g) == *b)
}

/// Index of the class containing `s` in `classes`.
pub fn class_index(classes: &[Subgroup], s: &Subgroup, h: &Subgroup) -> Option<usize> {
    classes.iter().position(|r| are_conjugate_in(r, s, h))
}

/// `|X^L|` for every class representative `L`.
pub fn marks_vector(x: &GSet, classes: &[Subgroup]) -> Vec<i64> {
    classes.iter().map(|l| x.fixed_points(l) as i64).collect()
}

/// An equivariant map between two sets over the same acting subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GMap {
    source: GSet,
    target: GSet,
    map: Vec<usize>,
}

impl GMap {
    pub fn new(source: GSet, target: GSet, map: Vec<usize>) -> Result<Self> {
        source.same_acting(&target)?;
        if map.len() != source.size() || map.iter().any(|&y| y >= target.size()) {
            return Err(Error::InvalidGSet("map does not send the source into the target".into()));
        }
        for x in 0..source.size() {
            for (a, &g) in source.acting.elements().iter().enumerate() {
                if map[source.action[x][a]] != target.action[map[x]][a] {
                    return Err(Error::NotEquivariant { g, x });
                }
            }
        }
        Ok(Self { source, target, map })
    }

    pub fn identity(x: &GSet) -> Self {
        Self { source: x.clone(), target: x.clone(), map: (0..x.size()).collect() }
    }

    /// The unique map to the one-point set.
    pub fn to_point(x: &GSet) -> Self {
        Self { source: x.clone(), target: GSet::point(&x.acting), map: vec![0; x.size()] }
    }

    pub fn source(&self) -> &GSet {
        &self.source
    }

    pub fn target(&self) -> &GSet {
        &self.target
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }
}

/// `X ×_Z Y = {(x, y) : f(x) = g(y)}` with its two projections.
pub fn pullback(f: &GMap, g: &GMap) -> Result<(GSet, GMap, GMap)> {
    if f.target != g.target {
        return Err(Error::InvalidGSet("pullback of maps with different codomains".into()));
    }
    let (x, y) = (&f.source, &g.source);
    let pairs: Vec<(usize, usize)> = (0..x.size())
        .flat_map(|a| (0..y.size()).map(move |b| (a, b)))
        .filter(|&(a, b)| f.map[a] == g.map[b])
        .collect();
    let index = |p: (usize, usize)| pairs.binary_search(&p).unwrap();
    let action = pairs
        .iter()
        .map(|&(a, b)| x.action[a].iter().zip(&y.action[b]).map(|(&a2, &b2)| index((a2, b2))).collect())
        .collect();
    let p = GSet { acting: x.acting.clone(), action };
    let left = GMap { source: p.clone(), target: x.clone(), map: pairs.iter().map(|q| q.0).collect() };
    let right = GMap { source: p.clone(), target: y.clone(), map: pairs.iter().map(|q| q.1).collect() };
    Ok((p, left, right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::double_coset_reps;

    fn s3() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::symmetric(3).unwrap())
    }

    #[test]
    fn coset_sets_and_orbits() {
        let g = s3();
        let whole = Subgroup::whole(&g);
        let h = Subgroup::generated(&g, &[g.find_element("(1 2)").unwrap()]);
        let x = GSet::cosets(&whole, &h).unwrap();
        assert_eq!(x.size(), 3);
        let orbits = orbit_decompose(&x);
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].stabilizer, h.elements());
        let reg = orbit_decompose(&GSet::regular(&whole));
        assert_eq!(reg.len(), 1);
        assert_eq!(reg[0].stabilizer.len(), 1);
        assert!(GSet::new(whole.clone(), x.action.clone()).is_ok());
    }

    #[test]
    fn product_orbits_count_double_cosets() {
        let g = s3();
        let whole = Subgroup::whole(&g);
        let subs = enumerate_subgroups(&g, 48).unwrap();
        for j in &subs {
            for k in &subs {
                let x = GSet::cosets(&whole, j).unwrap().product(&GSet::cosets(&whole, k).unwrap()).unwrap();
                let orbits = orbit_decompose(&x);
                assert_eq!(orbits.len(), double_coset_reps(j, k, &whole).unwrap().len());
                let total: usize = orbits.iter().map(|o| g.order() / o.stabilizer.len()).sum();
                assert_eq!(total, x.size());
            }
        }
    }

    #[test]
    fn marks_distinguish_c2_sets() {
        let g = Arc::new(FiniteGroup::cyclic(2).unwrap());
        let whole = Subgroup::whole(&g);
        let classes = subgroup_classes(&whole, 48).unwrap();
        let free = GSet::regular(&whole);
        let two_points = GSet::point(&whole).disjoint_union(&GSet::point(&whole)).unwrap();
        assert_eq!(marks_vector(&free, &classes), vec![2, 0]);
        assert_eq!(marks_vector(&two_points, &classes), vec![2, 2]);
        assert_eq!(marks_vector(&GSet::point(&whole), &classes), vec![1, 1]);
        let sum = free.disjoint_union(&two_points).unwrap();
        assert_eq!(marks_vector(&sum, &classes), vec![4, 2]);
    }

    #[test]
    fn rejects_broken_actions_and_maps() {
        let g = Arc::new(FiniteGroup::cyclic(2).unwrap());
        let whole = Subgroup::whole(&g);
        assert!(GSet::new(whole.clone(), vec![vec![1, 0], vec![1, 1]]).is_err());
        let free = GSet::regular(&whole);
        let two = GSet::point(&whole).disjoint_union(&GSet::point(&whole)).unwrap();
        assert!(matches!(GMap::new(free, two, vec![0, 1]), Err(Error::NotEquivariant { g: 1, x: 0 })));
    }

    #[test]
    fn pullback_over_a_point_is_the_product() {
        let g = s3();
        let whole = Subgroup::whole(&g);
        let x = GSet::cosets(&whole, &Subgroup::generated(&g, &[1])).unwrap();
        let y = GSet::regular(&whole);
        let (p, _, _) = pullback(&GMap::to_point(&x), &GMap::to_point(&y)).unwrap();
        assert_eq!(p, x.product(&y).unwrap());
        let (d, _, _) = pullback(&GMap::identity(&x), &GMap::identity(&x)).unwrap();
        let classes = subgroup_classes(&whole, 48).unwrap();
        assert_eq!(marks_vector(&d, &classes), marks_vector(&x, &classes));
    }

    #[test]
    fn restriction_conjugation_and_induction() {
        let g = s3();
        let whole = Subgroup::whole(&g);
        let t = Subgroup::generated(&g, &[g.find_element("(1 2)").unwrap()]);
        let x = GSet::cosets(&whole, &t).unwrap();
        let r = x.restrict(&t).unwrap();
        assert_eq!(orbit_decompose(&r).len(), 2);
        let ind = GSet::point(&t).induce(&whole).unwrap();
        let classes = subgroup_classes(&whole, 48).unwrap();
        assert_eq!(marks_vector(&ind, &classes), marks_vector(&x, &classes));
        let c = GSet::point(&t).conjugate(g.find_element("(1 3)").unwrap());
        assert_eq!(c.size(), 1);
        assert_ne!(c.acting(), &t);
    }
}
