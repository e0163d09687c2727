//! End-to-end acceptance suite. Prints one line per criterion and exits
//! nonzero if any fails. All comparisons are exact; there is no tolerance.

use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use twisted_mackey::burnside::{burnside_hom_basis, burnside_product, BurnsideElement, GSet};
use twisted_mackey::group::{double_coset_reps, double_cosets, enumerate_subgroups, FiniteGroup, GroupSpec, Subgroup};
use twisted_mackey::mackey::{
    burnside_mackey, check_axioms, constant_functor, dress_kuku_compare, endomorphism_mackey, galois_gring,
    k0_twisted_mackey, units_galois_mackey, MackeyData,
};
use twisted_mackey::module::{mackey_decomposition_witness, AlgebraModule, K0Basis};
use twisted_mackey::ring::{FiniteRing, RingSpec};
use twisted_mackey::twisted::tgr::{left_basis_decompose, TGRElement, TwistedGroupRing};
use twisted_mackey::twisted::{auslander_map, ActionSpec, GRing, SemilinearModule};
use twisted_mackey::Result;

const BOUND: usize = 48;

fn trivial(p: u32, group: GroupSpec) -> Result<Arc<GRing>> {
    let ring = Arc::new(FiniteRing::build(&RingSpec::Gf { p, k: 1, modulus: None })?);
    Ok(Arc::new(GRing::new(ring, Arc::new(FiniteGroup::build(&group)?), &ActionSpec::Trivial)?))
}

/// The two configurations shared by the round trip and witness criteria.
fn configurations() -> Result<Vec<(&'static str, Arc<GRing>)>> {
    Ok(vec![("GF(7)/S3", trivial(7, GroupSpec::Symmetric(3))?), ("GF(2^6)/C6", galois_gring(2, 6)?)])
}

/// All `(J, K, H)` with `J, K ⊆ H`.
fn triples(subs: &[Subgroup]) -> Vec<(Subgroup, Subgroup, Subgroup)> {
    let mut out = Vec::new();
    for h in subs {
        for j in subs.iter().filter(|j| j.is_subgroup_of(h)) {
            for k in subs.iter().filter(|k| k.is_subgroup_of(h)) {
                out.push((j.clone(), k.clone(), h.clone()));
            }
        }
    }
    out
}

fn double_coset_identity() -> Result<(bool, String)> {
    let specs = [
        GroupSpec::Symmetric(3),
        GroupSpec::Dihedral(4),
        GroupSpec::Cyclic(6),
        GroupSpec::Product(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(2)]),
    ];
    let (mut instances, mut failures) = (0, 0);
    for spec in &specs {
        let group = Arc::new(FiniteGroup::build(spec)?);
        for (j, k, h) in triples(&enumerate_subgroups(&group, BOUND)?) {
            let sum: usize = double_coset_reps(&j, &k, &h)?
                .iter()
                .map(|d| k.order() / j.conjugate_inv(d.rep).intersection(&k).order())
                .sum();
            instances += 1;
            failures += usize::from(sum != h.order() / j.order());
        }
    }
    Ok((instances >= 200 && failures == 0, format!("{instances} triples, {failures} failures")))
}

fn free_basis_round_trip() -> Result<(bool, String)> {
    let (mut checked, mut failures) = (0, 0);
    for (_, base) in configurations()? {
        let subs = enumerate_subgroups(base.group(), BOUND)?;
        for h in &subs {
            for k in subs.iter().filter(|k| h.is_subgroup_of(k)) {
                let basis = left_basis_decompose(&base, h, k)?;
                let large = TwistedGroupRing::new(Arc::clone(&base), k.clone())?;
                for (r, g) in large.pure_elements() {
                    let a = TGRElement::pure(r, g);
                    checked += 1;
                    failures += usize::from(basis.forward(&basis.express(&a)?)? != a);
                }
                let small = TwistedGroupRing::new(Arc::clone(&base), h.clone())?;
                for i in 0..basis.rank() {
                    for (r, g) in small.pure_elements() {
                        let mut coeffs = vec![TGRElement::zero(); basis.rank()];
                        coeffs[i] = TGRElement::pure(r, g);
                        checked += 1;
                        failures += usize::from(basis.express(&basis.forward(&coeffs)?)? != coeffs);
                    }
                }
            }
        }
    }
    Ok((failures == 0, format!("{checked} pure elements, {failures} failures")))
}

fn decomposition_witness() -> Result<(bool, String)> {
    let mut parts = Vec::new();
    let mut all = true;
    for (name, base) in configurations()? {
        let subs = enumerate_subgroups(base.group(), BOUND)?;
        let reports = triples(&subs)
            .par_iter()
            .map(|(j, k, h)| mackey_decomposition_witness(j, k, h, &base))
            .collect::<Result<Vec<_>>>()?;
        let failures = reports.iter().filter(|r| !(r.holds && r.left_isomorphism && r.right_failure.is_none())).count();
        let pairs: usize = reports.iter().map(|r| r.right_pairs_checked).sum();
        all &= failures == 0;
        parts.push(format!("{name}: {} triples, {pairs} right pairs, {failures} failures", reports.len()));
    }
    Ok((all, parts.join("; ")))
}

fn auslander_isomorphism() -> Result<(bool, String)> {
    let mut parts = Vec::new();
    let mut all = true;
    for (p, k) in [(3, 2), (2, 3), (5, 2), (2, 6)] {
        let base = galois_gring(p, k)?;
        let map = auslander_map(&base, &Subgroup::whole(base.group()))?;
        let verdict = map.verdict();
        let blocks = K0Basis::new(map.bridge.algebra())?.rank();
        all &= verdict.isomorphism && blocks == 1;
        parts.push(format!("GF({p}^{k}): rank {}/{} blocks {blocks}", verdict.image_rank, verdict.source_dim));
    }
    Ok((all, parts.join(", ")))
}

fn axiom_suites() -> Result<(bool, String)> {
    let s3 = Arc::new(FiniteGroup::symmetric(3)?);
    let suites: Vec<(&str, MackeyData)> = vec![
        ("A(S3)", burnside_mackey(&s3, BOUND)?),
        ("K0 GF(5)/S3", k0_twisted_mackey(&trivial(5, GroupSpec::Symmetric(3))?, BOUND)?.data),
        ("K0 GF(9)/C2", k0_twisted_mackey(&galois_gring(3, 2)?, BOUND)?.data),
        ("K0 GF(2^6)/C6", k0_twisted_mackey(&galois_gring(2, 6)?, BOUND)?.data),
        ("units GF(9)", units_galois_mackey(3, 2)?),
        ("units GF(2^6)", units_galois_mackey(2, 6)?),
        ("End GF(9)/C2", {
            let e = endomorphism_mackey(&galois_gring(3, 2)?, BOUND)?;
            if !e.squares.pass {
                return Ok((false, format!("Auslander squares fail: {:?}", e.squares.failures)));
            }
            e.data
        }),
    ];
    let failing: Vec<String> = suites
        .iter()
        .filter_map(|(name, data)| {
            let report = check_axioms(data);
            (!report.all_pass()).then(|| format!("{name} fails {:?}", report.failing()))
        })
        .collect();
    let detail = if failing.is_empty() { format!("{} functors, MF0 to MF6 with two transversals", suites.len()) } else { failing.join("; ") };
    Ok((failing.is_empty(), detail))
}

fn dress_kuku_oracle() -> Result<(bool, String)> {
    let mut parts = Vec::new();
    let mut all = true;
    for (name, base) in [("GF(5)/C2", trivial(5, GroupSpec::Cyclic(2))?), ("GF(7)/S3", trivial(7, GroupSpec::Symmetric(3))?)] {
        let r = dress_kuku_compare(&base, BOUND)?;
        all &= r.identical;
        parts.push(format!("{name}: {} maps, {} mismatches", r.maps_compared, r.mismatches.len()));
    }
    Ok((all, parts.join(", ")))
}

fn negative_control() -> Result<(bool, String)> {
    let mut parts = Vec::new();
    let mut all = true;
    for spec in [GroupSpec::Cyclic(2), GroupSpec::Symmetric(3)] {
        let group = Arc::new(FiniteGroup::build(&spec)?);
        let failing: Vec<String> = check_axioms(&constant_functor(&group, BOUND)?).failing().into_iter().map(String::from).collect();
        all &= failing == ["MF6"];
        parts.push(format!("{}: fails {failing:?}", group.label()));
    }
    Ok((all, parts.join(", ")))
}

fn semilinear_round_trip() -> Result<(bool, String)> {
    let mut parts = Vec::new();
    let mut all = true;
    for (p, k) in [(3, 2), (2, 3), (5, 2), (2, 6)] {
        let base = galois_gring(p, k)?;
        let h = Subgroup::whole(base.group());
        let field = base.ring().as_field().expect("Galois instances are fields").clone();
        let descent = SemilinearModule::descent(&base, &h)?;
        let regular = AlgebraModule::regular(Arc::clone(descent.bridge().algebra()));
        let mut modules = vec![descent.clone(), SemilinearModule::free(&base, &h, 2)?, SemilinearModule::from_module(&base, &h, &regular)?];
        // a unit of norm 1 that is not 1 gives a twisted descent module
        let norm_one = (2..field.size()).find(|&u| (0..k).fold(1, |acc, i| field.mul(acc, base.theta(i, u))) == 1);
        if let Some(u) = norm_one {
            modules.push(descent.twist(&SemilinearModule::cyclic_cocycle(&base, &h, 1, u)?)?);
        }
        let mut ok = true;
        for m in &modules {
            let module = m.to_module()?;
            let back = SemilinearModule::from_module(&base, &h, &module)?;
            ok &= back == *m && back.to_module()? == module;
        }
        ok &= SemilinearModule::from_module(&base, &h, &regular)?.to_module()? == regular;
        all &= ok && modules.len() >= 3;
        parts.push(format!("GF({p}^{k}): {} modules", modules.len()));
    }
    Ok((all, parts.join(", ")))
}

fn burnside_layer() -> Result<(bool, String)> {
    let s3 = Arc::new(FiniteGroup::symmetric(3)?);
    let whole = Subgroup::whole(&s3);
    let subs = enumerate_subgroups(&s3, BOUND)?;
    let mut failures = 0;
    for h in &subs {
        for k in &subs {
            let rank = burnside_hom_basis(&GSet::cosets(&whole, h)?, &GSet::cosets(&whole, k)?)?.len();
            failures += usize::from(rank != double_cosets(h, k, &whole)?.len());
        }
    }
    let c2 = Arc::new(FiniteGroup::cyclic(2)?);
    let free = BurnsideElement::transitive(&Subgroup::whole(&c2), &Subgroup::trivial(&c2))?;
    let square_ok = burnside_product(&free, &free)? == free.scale(2);
    let pairs = subs.len() * subs.len();
    Ok((failures == 0 && square_ok, format!("{pairs} pairs, {failures} rank mismatches, [C2/e]^2 = 2[C2/e]: {square_ok}")))
}

type Criterion = fn() -> Result<(bool, String)>;

fn main() {
    let criteria: [(&str, Criterion); 9] = [
        ("double coset identity", double_coset_identity),
        ("free basis round trip", free_basis_round_trip),
        ("decomposition witness", decomposition_witness),
        ("Auslander isomorphism", auslander_isomorphism),
        ("axiom suites", axiom_suites),
        ("group algebra oracle", dress_kuku_oracle),
        ("negative control", negative_control),
        ("semilinear round trip", semilinear_round_trip),
        ("Burnside layer", burnside_layer),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (pass, detail) = check().unwrap_or_else(|e| (false, format!("error: {e}")));
        failed += usize::from(!pass);
        let verdict = if pass { "PASS" } else { "FAIL" };
        println!("criterion {}: {verdict} {name} ({detail}) [{:.1}s]", i + 1, start.elapsed().as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
