use std::sync::Arc;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::burnside::{burnside_hom_basis, class_index, full_hom_basis, marks_vector, orbit_decompose, subgroup_classes, GSet};
use crate::error::Error;
use crate::group::{alternate_double_coset_reps, double_cosets, enumerate_subgroups, refined_transversal, GroupSpec, Subgroup};
use crate::job::{Context, Instance, JobError, RunConfig, SubgroupRef, Table, Task, TaskOutput, Verdict};
use crate::mackey::{
    burnside_mackey, check_axioms, constant_functor, dress_kuku_compare, endomorphism_mackey, k0_twisted_mackey,
    quillen_kn_instance, units_mackey, MackeyData,
};
use crate::module::{mackey_decomposition_witness, K0Basis, K0Class};
use crate::ring::RingSpec;
use crate::twisted::auslander::auslander_map;
use crate::twisted::bridge::as_structure_algebra;
use crate::twisted::gring::ActionSpec;
use crate::twisted::tgr::TwistedGroupRing;

pub(crate) fn execute(ctx: &Context, config: &RunConfig) -> Result<TaskOutput, JobError> {
    match &ctx.spec().task {
        Task::VerifyMackey { instance } => verify_mackey(ctx, config, *instance),
        Task::K0 => k0(ctx),
        Task::Burnside => burnside(ctx),
        Task::DoubleCosets { j, k, h } => double_coset_task(ctx, j, k, h),
        Task::Auslander => auslander(ctx),
        Task::Decompose { j, k, h } => decompose(ctx, j, k, h),
    }
}

fn subgroup_json(h: &Subgroup) -> Value {
    json!({ "elements": h.elements(), "label": h.describe() })
}

fn class_text(c: &K0Class) -> String {
    format!("{:?}", c.multiplicities)
}

fn block_text(basis: &K0Basis, p: u32) -> String {
    let blocks: Vec<String> = basis
        .blocks
        .iter()
        .map(|b| if b.center_dim == 1 { format!("M{}(GF({p}))", b.matrix_size) } else { format!("M{}(GF({p}^{}))", b.matrix_size, b.center_dim) })
        .collect();
    blocks.join(" + ")
}

fn mackey_output(data: &MackeyData, extra: Value) -> TaskOutput {
    let report = check_axioms(data);
    let mut values = Table::new(format!("values of {}", data.label), &["subgroup", "value"]);
    for (h, v) in data.subgroups.iter().zip(&data.values) {
        values.row(vec![h.describe(), v.label.clone()]);
    }
    let mut axioms = Table::new("axioms", &["axiom", "instances", "failures"]);
    let mut verdicts = Vec::new();
    for v in &report.verdicts {
        axioms.row(vec![v.axiom.clone(), v.instances.to_string(), v.failures.to_string()]);
        let detail = match v.witnesses.first() {
            Some(w) => format!("{} of {} instances fail; first: {w}", v.failures, v.instances),
            None => format!("{} instances", v.instances),
        };
        verdicts.push(Verdict::new(v.axiom.clone(), v.pass, detail));
    }
    let results = json!({ "mackey": data, "axioms": report, "extra": extra });
    TaskOutput { results, sections: vec![values.render(), axioms.render()], verdicts }
}

fn verify_mackey(ctx: &Context, config: &RunConfig, instance: Instance) -> Result<TaskOutput, JobError> {
    match instance {
        Instance::K0 => {
            let m = k0_twisted_mackey(&ctx.base()?, ctx.bound)?;
            Ok(mackey_output(&m.data, json!({ "k0_bases": m.bases })))
        }
        Instance::Endomorphism => {
            let e = endomorphism_mackey(&ctx.base()?, ctx.bound)?;
            let mut out = mackey_output(&e.data, json!({ "k0_bases": e.bases, "squares": e.squares }));
            let detail = match e.squares.failures.first() {
                Some(f) => f.clone(),
                None => format!("{} inclusion and {} conjugation squares", e.squares.inclusion_squares, e.squares.conjugation_squares),
            };
            out.verdicts.push(Verdict::new("auslander squares", e.squares.pass, detail));
            Ok(out)
        }
        Instance::Burnside => Ok(mackey_output(&burnside_mackey(&ctx.group, ctx.bound)?, Value::Null)),
        Instance::Units => Ok(mackey_output(&units_mackey(&ctx.base()?)?, Value::Null)),
        Instance::Constant => Ok(mackey_output(&constant_functor(&ctx.group, ctx.bound)?, Value::Null)),
        Instance::Quillen { degree } => {
            if !config.allow_external_data {
                return Err(JobError::invalid("the Quillen instance uses external data; pass --allow-external-data"));
            }
            let spec = ctx.spec();
            let (p, k) = match &spec.ring {
                Some(RingSpec::Gf { p, k, modulus: None }) => (*p, *k),
                _ => return Err(JobError::invalid("the Quillen instance needs \"ring\": {\"gf\": {\"p\": p, \"k\": k}}")),
            };
            if spec.group != GroupSpec::Cyclic(k) || spec.action != ActionSpec::Frobenius(1) {
                return Err(JobError::invalid(format!("the Quillen instance needs group cyclic({k}) acting by frobenius(1)")));
            }
            let data = quillen_kn_instance(p, k, degree)?;
            Ok(mackey_output(&data, json!({ "external_data": data.external_data })))
        }
        Instance::DressKuku => {
            let base = ctx.base()?;
            let r = dress_kuku_compare(&base, ctx.bound)?;
            let m = k0_twisted_mackey(&base, ctx.bound)?;
            let mut out = mackey_output(&m.data, json!({ "k0_bases": m.bases, "comparison": r }));
            let detail = match r.mismatches.first() {
                Some(f) => f.clone(),
                None => format!("{} maps equal entry for entry", r.maps_compared),
            };
            out.verdicts.push(Verdict::new("group algebra comparison", r.identical, detail));
            Ok(out)
        }
    }
}

fn k0(ctx: &Context) -> Result<TaskOutput, JobError> {
    let base = ctx.base()?;
    let subs = enumerate_subgroups(&ctx.group, ctx.bound)?;
    let computed: Vec<(usize, K0Basis)> = subs
        .par_iter()
        .map(|h| {
            let bridge = as_structure_algebra(&TwistedGroupRing::new(Arc::clone(&base), h.clone())?)?;
            Ok((bridge.algebra().dim(), K0Basis::new(bridge.algebra())?))
        })
        .collect::<Result<_, Error>>()?;
    let p = base.ring().as_field().map_or(0, |f| f.p());
    let mut table = Table::new("K0 of the twisted group rings", &["subgroup", "dim", "rank", "blocks"]);
    let mut entries = Vec::new();
    let mut bad = Vec::new();
    for (h, (dim, basis)) in subs.iter().zip(&computed) {
        table.row(vec![h.describe(), dim.to_string(), basis.rank().to_string(), block_text(basis, p)]);
        if basis.blocks.iter().map(|b| b.block_dim).sum::<usize>() != *dim {
            bad.push(h.describe());
        }
        entries.push(json!({ "subgroup": subgroup_json(h), "dim": dim, "rank": basis.rank(), "basis": basis }));
    }
    let detail = if bad.is_empty() { format!("{} subgroups", subs.len()) } else { format!("blocks do not fill the algebra at {}", bad.join(", ")) };
    Ok(TaskOutput {
        results: json!({ "subgroups": entries }),
        sections: vec![table.render()],
        verdicts: vec![Verdict::new("block dimensions", bad.is_empty(), detail)],
    })
}

/// Counts of each transitive type in `x`, indexed by `classes`.
fn transitive_counts(x: &GSet, classes: &[Subgroup]) -> Result<Vec<i64>, Error> {
    let mut counts = vec![0; classes.len()];
    for orbit in orbit_decompose(x) {
        let stab = Subgroup::from_elements(x.group(), &orbit.stabilizer)?;
        let c = class_index(classes, &stab, x.acting()).ok_or_else(|| Error::InvalidGSet("stabilizer outside the class list".into()))?;
        counts[c] += 1;
    }
    Ok(counts)
}

fn burnside(ctx: &Context) -> Result<TaskOutput, JobError> {
    let whole = Subgroup::whole(&ctx.group);
    let classes = subgroup_classes(&whole, ctx.bound)?;
    let cosets: Vec<GSet> = classes.iter().map(|l| GSet::cosets(&whole, l)).collect::<Result<_, _>>()?;
    let names: Vec<String> = classes.iter().map(|l| format!("G/{}", l.describe())).collect();

    let mut headers = vec!["G-set".to_string()];
    headers.extend(classes.iter().map(|l| l.describe()));
    let header_refs: Vec<&str> = headers.iter().map(String::as_str).collect();
    let mut marks_table = Table::new("table of marks", &header_refs);
    let marks: Vec<Vec<i64>> = cosets.iter().map(|x| marks_vector(x, &classes)).collect();
    for (name, row) in names.iter().zip(&marks) {
        let mut cells = vec![name.clone()];
        cells.extend(row.iter().map(i64::to_string));
        marks_table.row(cells);
    }

    let n = classes.len();
    let mut product_table = Table::new("products of transitive G-sets", &["left", "right", "coefficients"]);
    let mut products = Vec::new();
    let mut marks_ok = true;
    for a in 0..n {
        for b in a..n {
            let prod = cosets[a].product(&cosets[b])?;
            let coeffs = transitive_counts(&prod, &classes)?;
            let expected: Vec<i64> = marks[a].iter().zip(&marks[b]).map(|(x, y)| x * y).collect();
            marks_ok &= marks_vector(&prod, &classes) == expected;
            product_table.row(vec![names[a].clone(), names[b].clone(), format!("{coeffs:?}")]);
            products.push(json!({ "left": a, "right": b, "coefficients": coeffs }));
        }
    }

    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    let ranks: Vec<(usize, usize, usize)> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let rank = burnside_hom_basis(&cosets[a], &cosets[b])?.len();
            let all = full_hom_basis(&cosets[a], &cosets[b], ctx.bound)?.len();
            let count = double_cosets(&classes[a], &classes[b], &whole)?.len();
            Ok((rank, all, count))
        })
        .collect::<Result<_, Error>>()?;
    // `rank` counts one span per orbit of G/H × G/K; `all spans` also counts
    // the spans through smaller stabilizers
    let mut hom_table = Table::new("Burnside homs", &["source", "target", "rank", "all spans", "double cosets"]);
    let mut homs = Vec::new();
    let mut mismatches = Vec::new();
    for (&(a, b), &(rank, all, count)) in pairs.iter().zip(&ranks) {
        hom_table.row(vec![names[a].clone(), names[b].clone(), rank.to_string(), all.to_string(), count.to_string()]);
        homs.push(json!({ "source": a, "target": b, "rank": rank, "all_spans": all, "double_cosets": count }));
        if rank != count {
            mismatches.push(format!("{} -> {}", names[a], names[b]));
        }
    }
    let hom_detail = if mismatches.is_empty() { format!("{} pairs", pairs.len()) } else { format!("rank differs for {}", mismatches.join(", ")) };
    let results = json!({
        "classes": classes.iter().map(subgroup_json).collect::<Vec<_>>(),
        "marks": marks,
        "products": products,
        "homs": homs,
    });
    Ok(TaskOutput {
        results,
        sections: vec![marks_table.render(), product_table.render(), hom_table.render()],
        verdicts: vec![
            Verdict::new("marks are multiplicative", marks_ok, format!("{} products", n * (n + 1) / 2)),
            Verdict::new("hom rank equals double coset count", mismatches.is_empty(), hom_detail),
        ],
    })
}

fn triple(ctx: &Context, j: &SubgroupRef, k: &SubgroupRef, h: &SubgroupRef) -> Result<(Subgroup, Subgroup, Subgroup), JobError> {
    let (j, k, h) = (ctx.subgroup(j)?, ctx.subgroup(k)?, ctx.subgroup(h)?);
    for (name, s) in [("J", &j), ("K", &k)] {
        if !s.is_subgroup_of(&h) {
            return Err(JobError::invalid(format!("{name} = {} is not contained in H = {}", s.describe(), h.describe())));
        }
    }
    Ok((j, k, h))
}

fn double_coset_task(ctx: &Context, j: &SubgroupRef, k: &SubgroupRef, h: &SubgroupRef) -> Result<TaskOutput, JobError> {
    let (j, k, h) = triple(ctx, j, k, h)?;
    let group = &ctx.group;
    let cosets = double_cosets(&j, &k, &h)?;
    let alternate = alternate_double_coset_reps(&j, &k, &h)?;
    let refined = refined_transversal(&j, &k, &h)?;
    let mut table = Table::new("double cosets J\\H/K", &["rep", "alternate", "size", "|K : J^x ∩ K|", "betas"]);
    let mut entries = Vec::new();
    let mut index_sum = 0;
    for ((members, alt), r) in cosets.iter().zip(&alternate).zip(&refined) {
        let x = members[0];
        let inner = j.conjugate_inv(x).intersection(&k);
        let index = k.order() / inner.order();
        index_sum += index;
        let betas: Vec<&str> = r.betas.iter().map(|&b| group.element_label(b)).collect();
        table.row(vec![
            group.element_label(x).to_string(),
            group.element_label(*alt).to_string(),
            members.len().to_string(),
            index.to_string(),
            betas.join(" "),
        ]);
        entries.push(json!({
            "rep": x,
            "alternate_rep": alt,
            "members": members,
            "size": members.len(),
            "index": index,
            "betas": r.betas,
        }));
    }
    let covered: usize = cosets.iter().map(Vec::len).sum();
    let lhs = h.order() / j.order();
    let results = json!({
        "j": subgroup_json(&j),
        "k": subgroup_json(&k),
        "h": subgroup_json(&h),
        "double_cosets": entries,
        "index_h_j": lhs,
        "index_sum": index_sum,
    });
    Ok(TaskOutput {
        results,
        sections: vec![table.render()],
        verdicts: vec![
            Verdict::new("double cosets partition H", covered == h.order(), format!("{covered} of {} elements", h.order())),
            Verdict::new("|H:J| = Σ |K : J^x ∩ K|", lhs == index_sum, format!("{lhs} = {index_sum}")),
        ],
    })
}

fn auslander(ctx: &Context) -> Result<TaskOutput, JobError> {
    let base = ctx.base()?;
    let subs = enumerate_subgroups(&ctx.group, ctx.bound)?;
    let maps = subs.par_iter().map(|h| auslander_map(&base, h)).collect::<Result<Vec<_>, Error>>()?;
    let mut table = Table::new("Auslander maps", &["subgroup", "dim R_θ[H]", "dim End", "image rank", "|R^H|", "verdict"]);
    let mut entries = Vec::new();
    let mut failing = Vec::new();
    for (h, m) in subs.iter().zip(&maps) {
        let v = m.verdict();
        let word = if v.isomorphism { "isomorphism" } else { "not an isomorphism" };
        table.row(vec![
            h.describe(),
            v.source_dim.to_string(),
            v.target_dim.to_string(),
            v.image_rank.to_string(),
            v.fixed_subring_size.to_string(),
            word.to_string(),
        ]);
        if !v.isomorphism {
            failing.push(h.describe());
        }
        entries.push(json!({ "subgroup": subgroup_json(h), "verdict": word, "data": v, "matrix": m.hom.matrix().to_rows() }));
    }
    let top = K0Basis::new(maps.last().expect("the whole group is a subgroup").bridge.algebra())?;
    let detail = if failing.is_empty() { format!("{} subgroups", subs.len()) } else { format!("fails at {}", failing.join(", ")) };
    let blocks = top.rank();
    Ok(TaskOutput {
        results: json!({ "subgroups": entries, "k0_rank_of_whole_group": blocks, "k0_basis": top }),
        sections: vec![table.render(), format!("K0 rank of R_θ[G]: {blocks}\n")],
        verdicts: vec![Verdict::new("auslander isomorphism", failing.is_empty(), detail)],
    })
}

fn decompose(ctx: &Context, j: &SubgroupRef, k: &SubgroupRef, h: &SubgroupRef) -> Result<TaskOutput, JobError> {
    let (j, k, h) = triple(ctx, j, k, h)?;
    let base = ctx.base()?;
    let w = mackey_decomposition_witness(&j, &k, &h, &base)?;
    let group = &ctx.group;
    let mut table = Table::new("summands of Res_J^H Tr_K^H", &["rep", "|JxK|", "|J ∩ xKx⁻¹|", "betas", "dim", "class", "functor class"]);
    for p in &w.pieces {
        let betas: Vec<&str> = p.betas.iter().map(|&b| group.element_label(b)).collect();
        table.row(vec![
            group.element_label(p.rep).to_string(),
            p.double_coset_size.to_string(),
            p.stabilizer_order.to_string(),
            betas.join(" "),
            p.dim.to_string(),
            class_text(&p.class),
            class_text(&p.functor_class),
        ]);
    }
    let classes_ok = w.p_class == w.q_class && w.q_class == w.functor_total && w.pieces.iter().all(|p| p.class == p.functor_class);
    let right_detail = match &w.right_failure {
        Some(f) => format!("fails at rep {}, generator {:?}, multiplier {:?}", group.element_label(f.rep), f.generator, f.multiplier),
        None => format!("{} pairs", w.right_pairs_checked),
    };
    let verdicts = vec![
        Verdict::new("transversals", w.pieces.iter().all(|p| p.transversal_ok), format!("{} double cosets", w.pieces.len())),
        Verdict::new("left isomorphism", w.left_isomorphism, "ε is invertible and R_θ[J]-linear"),
        Verdict::new("right action", w.right_failure.is_none(), right_detail),
        Verdict::new(
            "K0 classes",
            classes_ok,
            format!("[P] = {}, [Q] = {}, functors give {}", class_text(&w.p_class), class_text(&w.q_class), class_text(&w.functor_total)),
        ),
    ];
    let results = json!({ "j": subgroup_json(&j), "k": subgroup_json(&k), "h": subgroup_json(&h), "witness": w });
    Ok(TaskOutput { results, sections: vec![table.render()], verdicts })
}
