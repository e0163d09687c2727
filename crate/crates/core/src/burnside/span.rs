use std::collections::BTreeMap;

use serde::Serialize;

use crate::burnside::gset::{marks_vector, orbit_decompose, pullback, GMap, GSet};
use crate::error::{Error, Result};
use crate::group::Subgroup;

/// A transitive span `S ← H/L → T` up to isomorphism: the smallest
/// `(f(u), g(u), Stab(u))` over the points `u` of the middle.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SpanPiece {
    pub left: usize,
    pub right: usize,
    pub stabilizer: Vec<usize>,
}

/// An isomorphism class of spans `left ← U → right`, stored as the sorted
/// multiset of the transitive pieces of `U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanClass {
    left: GSet,
    right: GSet,
    middle: Vec<SpanPiece>,
}

impl SpanClass {
    /// The class of `S ← U → T` given by two maps out of `U`.
    pub fn from_maps(f: &GMap, g: &GMap) -> Result<Self> {
        if f.source() != g.source() {
            return Err(Error::InvalidGSet("span legs have different sources".into()));
        }
        let u = f.source();
        let mut middle: Vec<SpanPiece> = orbit_decompose(u)
            .into_iter()
            .map(|orbit| {
                orbit
                    .points
                    .iter()
                    .map(|&p| SpanPiece { left: f.apply(p), right: g.apply(p), stabilizer: u.stabilizer(p).elements().to_vec() })
                    .min()
                    .unwrap()
            })
            .collect();
        middle.sort();
        Ok(Self { left: f.target().clone(), right: g.target().clone(), middle })
    }

    /// `S ← S → S`.
    pub fn identity(s: &GSet) -> Self {
        let id = GMap::identity(s);
        Self::from_maps(&id, &id).unwrap()
    }

    /// The span with transitive middle `H/L → (s, t)`; `L` must fix `s` and `t`.
    pub fn transitive(left: &GSet, right: &GSet, s: usize, t: usize, l: &Subgroup) -> Result<Self> {
        let piece = canonical_piece(left, right, s, t, l)?;
        Ok(Self { left: left.clone(), right: right.clone(), middle: vec![piece] })
    }

    pub fn left(&self) -> &GSet {
        &self.left
    }

    pub fn right(&self) -> &GSet {
        &self.right
    }

    pub fn middle(&self) -> &[SpanPiece] {
        &self.middle
    }

    /// A concrete representative `left ← U → right`.
    pub fn realize(&self) -> Result<(GSet, GMap, GMap)> {
        let h = self.left.acting();
        let group = h.group();
        let mut u = GSet::empty(h);
        let (mut fmap, mut gmap) = (Vec::new(), Vec::new());
        for piece in &self.middle {
            let l = Subgroup::from_elements(group, &piece.stabilizer)?;
            let cosets = GSet::cosets(h, &l)?;
            // the point of zL is z·(base point), with z the coset's representative
            let reps = crate::group::left_coset_reps(&l, h)?;
            for &z in &reps {
                fmap.push(self.left.act(z, piece.left));
                gmap.push(self.right.act(z, piece.right));
            }
            u = u.disjoint_union(&cosets)?;
        }
        let f = GMap::new(u.clone(), self.left.clone(), fmap)?;
        let g = GMap::new(u.clone(), self.right.clone(), gmap)?;
        Ok((u, f, g))
    }

    /// Number of points of the middle.
    pub fn middle_size(&self) -> usize {
        let h = self.left.acting().order();
        self.middle.iter().map(|p| h / p.stabilizer.len()).sum()
    }
}

fn canonical_piece(left: &GSet, right: &GSet, s: usize, t: usize, l: &Subgroup) -> Result<SpanPiece> {
    let h = left.acting();
    if !l.is_subgroup_of(h) || l.elements().iter().any(|&x| left.act(x, s) != s || right.act(x, t) != t) {
        return Err(Error::InvalidGSet("the middle stabilizer must fix both anchors".into()));
    }
    Ok(h.elements()
        .iter()
        .map(|&g| SpanPiece { left: left.act(g, s), right: right.act(g, t), stabilizer: l.conjugate(g).elements().to_vec() })
        .min()
        .unwrap())
}

/// `t ∘ s` by pullback over the common middle object.
pub fn compose_spans(s: &SpanClass, t: &SpanClass) -> Result<SpanClass> {
    if s.right != t.left {
        return Err(Error::InvalidGSet("span codomain and domain differ".into()));
    }
    let (_, f1, g1) = s.realize()?;
    let (_, f2, g2) = t.realize()?;
    let (p, p1, p2) = pullback(&g1, &f2)?;
    let left = GMap::new(p.clone(), s.left.clone(), (0..p.size()).map(|x| f1.apply(p1.apply(x))).collect())?;
    let right = GMap::new(p, t.right.clone(), (0..p1.source().size()).map(|x| g2.apply(p2.apply(x))).collect())?;
    SpanClass::from_maps(&left, &right)
}

/// One span `H/Stab(s,t) → (s, t)` per orbit of `S × T`.
pub fn burnside_hom_basis(s: &GSet, t: &GSet) -> Result<Vec<SpanClass>> {
    let prod = s.product(t)?;
    let m = t.size();
    orbit_decompose(&prod)
        .into_iter()
        .map(|o| {
            let l = Subgroup::from_elements(s.group(), &o.stabilizer)?;
            SpanClass::transitive(s, t, o.rep / m, o.rep % m, &l)
        })
        .collect()
}

/// Every isomorphism class of spans with transitive middle, which is a basis
/// of the group completion of spans from `S` to `T`.
pub fn full_hom_basis(s: &GSet, t: &GSet, bound: usize) -> Result<Vec<SpanClass>> {
    let prod = s.product(t)?;
    let m = t.size();
    let subs = crate::group::enumerate_subgroups(s.group(), bound)?;
    let mut pieces = std::collections::BTreeSet::new();
    for o in orbit_decompose(&prod) {
        let stab = Subgroup::from_elements(s.group(), &o.stabilizer)?;
        for l in subs.iter().filter(|l| l.is_subgroup_of(&stab)) {
            pieces.insert(canonical_piece(s, t, o.rep / m, o.rep % m, l)?);
        }
    }
    Ok(pieces
        .into_iter()
        .map(|p| SpanClass { left: s.clone(), right: t.clone(), middle: vec![p] })
        .collect())
}

/// An integer combination of transitive spans between fixed `S` and `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurnsideElement {
    left: GSet,
    right: GSet,
    terms: BTreeMap<SpanPiece, i64>,
}

impl BurnsideElement {
    pub fn zero(left: &GSet, right: &GSet) -> Self {
        Self { left: left.clone(), right: right.clone(), terms: BTreeMap::new() }
    }

    pub fn from_span(span: &SpanClass) -> Self {
        let mut out = Self::zero(&span.left, &span.right);
        for p in &span.middle {
            out.add_piece(p.clone(), 1);
        }
        out
    }

    /// `[X]` in `A(H)`, the span `pt ← X → pt`.
    pub fn from_gset(x: &GSet) -> Self {
        Self::from_span(&SpanClass::from_maps(&GMap::to_point(x), &GMap::to_point(x)).unwrap())
    }

    /// `[H/L]` in `A(H)`.
    pub fn transitive(h: &Subgroup, l: &Subgroup) -> Result<Self> {
        Ok(Self::from_gset(&GSet::cosets(h, l)?))
    }

    fn add_piece(&mut self, piece: SpanPiece, c: i64) {
        let v = self.terms.entry(piece).or_insert(0);
        *v += c;
        if *v == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SpanPiece, i64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn basis(&self) -> Vec<SpanClass> {
        self.terms
            .keys()
            .map(|p| SpanClass { left: self.left.clone(), right: self.right.clone(), middle: vec![p.clone()] })
            .collect()
    }

    pub fn coefficient(&self, span: &SpanClass) -> i64 {
        match span.middle.as_slice() {
            [p] => self.terms.get(p).copied().unwrap_or(0),
            _ => 0,
        }
    }

    pub fn add(&self, other: &BurnsideElement) -> Result<BurnsideElement> {
        if self.left != other.left || self.right != other.right {
            return Err(Error::GroupMismatch("adding spans between different sets".into()));
        }
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_piece(p.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: i64) -> BurnsideElement {
        let mut out = Self::zero(&self.left, &self.right);
        if c != 0 {
            out.terms = self.terms.iter().map(|(p, &v)| (p.clone(), v * c)).collect();
        }
        out
    }

    /// Marks of `Σ cᵢ [H/Lᵢ]`; only meaningful over `(pt, pt)`.
    pub fn marks(&self, classes: &[Subgroup]) -> Result<Vec<i64>> {
        let h = self.left.acting();
        let mut out = vec![0; classes.len()];
        for (p, c) in self.terms() {
            let l = Subgroup::from_elements(h.group(), &p.stabilizer)?;
            for (o, v) in out.iter_mut().zip(marks_vector(&GSet::cosets(h, &l)?, classes)) {
                *o += c * v;
            }
        }
        Ok(out)
    }
}

/// `[X]·[Y] = [X × Y]` extended bilinearly in `A(H)`.
pub fn burnside_product(a: &BurnsideElement, b: &BurnsideElement) -> Result<BurnsideElement> {
    let h = a.left.acting();
    if b.left.acting() != h {
        return Err(Error::GroupMismatch("Burnside ring elements over different groups".into()));
    }
    let pt = GSet::point(h);
    if a.left != pt || a.right != pt || b.left != pt || b.right != pt {
        return Err(Error::InvalidGSet("the Burnside ring product needs spans from a point to a point".into()));
    }
    let mut out = BurnsideElement::zero(&pt, &pt);
    for (pa, ca) in a.terms() {
        for (pb, cb) in b.terms() {
            let la = Subgroup::from_elements(h.group(), &pa.stabilizer)?;
            let lb = Subgroup::from_elements(h.group(), &pb.stabilizer)?;
            let x = GSet::cosets(h, &la)?.product(&GSet::cosets(h, &lb)?)?;
            for (p, c) in BurnsideElement::from_gset(&x).terms() {
                out.add_piece(p.clone(), c * ca * cb);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::burnside::gset::subgroup_classes;
    use crate::group::{double_coset_reps, enumerate_subgroups, FiniteGroup};

    fn s3() -> (Arc<FiniteGroup>, Subgroup, Vec<Subgroup>) {
        let g = Arc::new(FiniteGroup::symmetric(3).unwrap());
        let subs = enumerate_subgroups(&g, 48).unwrap();
        (Arc::clone(&g), Subgroup::whole(&g), subs)
    }

    #[test]
    fn hom_rank_counts_double_cosets() {
        let (_, whole, subs) = s3();
        for h in &subs {
            for k in &subs {
                let s = GSet::cosets(&whole, h).unwrap();
                let t = GSet::cosets(&whole, k).unwrap();
                let basis = burnside_hom_basis(&s, &t).unwrap();
                assert_eq!(basis.len(), double_coset_reps(h, k, &whole).unwrap().len());
                assert!(full_hom_basis(&s, &t, 48).unwrap().len() >= basis.len());
            }
        }
        let pt = GSet::point(&whole);
        assert_eq!(burnside_hom_basis(&pt, &pt).unwrap().len(), 1);
        assert!(burnside_hom_basis(&GSet::empty(&whole), &pt).unwrap().is_empty());
    }

    #[test]
    fn composition_is_unital_and_associative() {
        let (_, whole, subs) = s3();
        let sets: Vec<GSet> = subs.iter().map(|h| GSet::cosets(&whole, h).unwrap()).collect();
        // one representative per conjugacy class keeps the triple loop small
        let classes = subgroup_classes(&whole, 48).unwrap();
        let reps: Vec<GSet> = classes.iter().map(|h| GSet::cosets(&whole, h).unwrap()).collect();
        for a in &reps {
            for b in &reps {
                for s in burnside_hom_basis(a, b).unwrap() {
                    assert_eq!(compose_spans(&SpanClass::identity(a), &s).unwrap(), s);
                    assert_eq!(compose_spans(&s, &SpanClass::identity(b)).unwrap(), s);
                    for c in &reps {
                        for t in burnside_hom_basis(b, c).unwrap() {
                            for d in &reps {
                                for u in burnside_hom_basis(c, d).unwrap() {
                                    let lhs = compose_spans(&compose_spans(&s, &t).unwrap(), &u).unwrap();
                                    let rhs = compose_spans(&s, &compose_spans(&t, &u).unwrap()).unwrap();
                                    assert_eq!(lhs, rhs);
                                }
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(sets.len(), 6);
    }

    #[test]
    fn projections_over_a_point_compose_to_the_product() {
        let (g, whole, _) = s3();
        let x = GSet::cosets(&whole, &Subgroup::generated(&g, &[1])).unwrap();
        let pt = GSet::point(&whole);
        let s = SpanClass::from_maps(&GMap::identity(&x), &GMap::to_point(&x)).unwrap();
        let t = SpanClass::from_maps(&GMap::to_point(&x), &GMap::identity(&x)).unwrap();
        let composite = compose_spans(&s, &t).unwrap();
        let prod = x.product(&x).unwrap();
        let m = x.size();
        let f = GMap::new(prod.clone(), x.clone(), (0..prod.size()).map(|p| p / m).collect()).unwrap();
        let h = GMap::new(prod.clone(), x.clone(), (0..prod.size()).map(|p| p % m).collect()).unwrap();
        assert_eq!(composite, SpanClass::from_maps(&f, &h).unwrap());
        assert_eq!(composite.middle_size(), 9);
        assert_eq!(SpanClass::identity(&pt).middle_size(), 1);
    }

    #[test]
    fn canonical_form_ignores_relabelling_of_the_middle() {
        let (g, whole, _) = s3();
        let x = GSet::cosets(&whole, &Subgroup::generated(&g, &[g.find_element("(1 2)").unwrap()])).unwrap();
        let span = burnside_hom_basis(&x, &x).unwrap().pop().unwrap();
        let (u, f, h) = span.realize().unwrap();
        // reverse the middle's points
        let n = u.size();
        let perm: Vec<usize> = (0..n).rev().collect();
        let action: Vec<Vec<usize>> = (0..n)
            .map(|p| whole.elements().iter().map(|&e| perm[u.act(e, perm[p])]).collect())
            .collect();
        let v = GSet::new(whole.clone(), action).unwrap();
        let f2 = GMap::new(v.clone(), x.clone(), (0..n).map(|p| f.apply(perm[p])).collect()).unwrap();
        let h2 = GMap::new(v, x.clone(), (0..n).map(|p| h.apply(perm[p])).collect()).unwrap();
        assert_eq!(SpanClass::from_maps(&f2, &h2).unwrap(), span);
    }

    #[test]
    fn burnside_ring_of_c2_and_s3() {
        let g = Arc::new(FiniteGroup::cyclic(2).unwrap());
        let whole = Subgroup::whole(&g);
        let free = BurnsideElement::transitive(&whole, &Subgroup::trivial(&g)).unwrap();
        let one = BurnsideElement::transitive(&whole, &whole).unwrap();
        assert_eq!(burnside_product(&free, &free).unwrap(), free.scale(2));
        assert_eq!(burnside_product(&one, &free).unwrap(), free);

        let (_, whole, _) = s3();
        let classes = subgroup_classes(&whole, 48).unwrap();
        let basis: Vec<BurnsideElement> =
            classes.iter().map(|l| BurnsideElement::transitive(&whole, l).unwrap()).collect();
        for a in &basis {
            for b in &basis {
                let ab = burnside_product(a, b).unwrap();
                assert_eq!(ab, burnside_product(b, a).unwrap());
                let (ma, mb) = (a.marks(&classes).unwrap(), b.marks(&classes).unwrap());
                let expected: Vec<i64> = ma.iter().zip(&mb).map(|(x, y)| x * y).collect();
                assert_eq!(ab.marks(&classes).unwrap(), expected);
            }
        }
    }
}
