use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{refined_transversal, Subgroup};
use crate::linalg::{FiniteField, Matrix};
use crate::module::{extend_scalars, k0_class, restrict_scalars, AlgebraModule, K0Basis, K0Class};
use crate::twisted::bridge::{as_structure_algebra, hom_to_algebra, AlgebraBridge};
use crate::twisted::gring::GRing;
use crate::twisted::tgr::{gamma, rho, right_basis, TwistedGroupRing};

/// The summand of `P` attached to one double coset `J x K`.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessPiece {
    pub rep: usize,
    /// Right coset representatives of `Jˣ ∩ K` in `K`.
    pub betas: Vec<usize>,
    /// The labels `x β x⁻¹` of `P_x` and `x β` of their images in `Q`.
    pub conjugated_labels: Vec<usize>,
    pub shifted_labels: Vec<usize>,
    pub double_coset_size: usize,
    /// `|J ∩ xKx⁻¹|`
    pub stabilizer_order: usize,
    pub dim: usize,
    pub class: K0Class,
    /// `[Tr_{J∩ˣK}^J c_x Res_{Jˣ∩K}^K R_θ[K]]` through the change-of-rings functors.
    pub functor_class: K0Class,
    pub transversal_ok: bool,
}

/// A generator of `P` and a pure multiplier for which the right actions
/// disagree after `ε`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RightActionFailure {
    pub rep: usize,
    pub generator: (usize, usize),
    pub multiplier: (usize, usize),
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub pieces: Vec<WitnessPiece>,
    /// `ε` is invertible and intertwines every action matrix of `R_θ[J]`.
    pub left_isomorphism: bool,
    pub right_pairs_checked: usize,
    pub right_failure: Option<RightActionFailure>,
    pub p_class: K0Class,
    pub q_class: K0Class,
    /// `[Res_J^H Tr_K^H R_θ[K]]` through the change-of-rings functors.
    pub functor_total: K0Class,
    pub holds: bool,
}

/// `P_x = span{ r g : g ∈ J·xKx⁻¹ }` inside `R_θ[H]`, with basis `aᵗ·g` over
/// the sorted support.
struct Piece {
    support: Vec<usize>,
}

fn left_action(base: &GRing, field: &FiniteField, bj: &AlgebraBridge, support: &[usize]) -> Vec<Matrix> {
    let group = base.group();
    let k = field.degree();
    let fp = field.prime_field();
    let n = support.len() * k;
    let p = field.p() as usize;
    (0..bj.algebra().dim())
        .map(|idx| {
            let (j, r) = bj.basis_element(idx).terms().next().unwrap();
            let mut m = Matrix::zeros(fp, n, n);
            for (col_g, &g) in support.iter().enumerate() {
                let dest = support.binary_search(&group.mul(j, g)).expect("support is J-stable");
                for t in 0..k {
                    let c = field.mul(r, base.theta(j, p.pow(t as u32)));
                    for (s, v) in field.coords(c).into_iter().enumerate() {
                        m.set(dest * k + s, col_g * k + t, v);
                    }
                }
            }
            m
        })
        .collect()
}

/// Builds `P = ⊕_x P_x` and `Q = Res_J^H R_θ[H]` with `ε = ⊕ sh_x`,
/// `g ↦ g x`, and checks that `ε` is a left `R_θ[J]`-isomorphism, that it
/// carries the right `R_θ[K]`-action `m·(rk) = m·(θ_x(r) xkx⁻¹)` on `P_x` to
/// right multiplication on `Q` for every pure generator and pure multiplier,
/// and that the `K₀` classes of `P`, `Q` and the functor-built modules agree.
pub fn mackey_decomposition_witness(j: &Subgroup, k: &Subgroup, h: &Subgroup, base: &Arc<GRing>) -> Result<WitnessReport> {
    let group = Arc::clone(base.group());
    let ring = base.ring();
    let bridge = |s: &Subgroup| -> Result<AlgebraBridge> { as_structure_algebra(&TwistedGroupRing::new(Arc::clone(base), s.clone())?) };
    let (bh, bj, bk) = (bridge(h)?, bridge(j)?, bridge(k)?);
    let field = bj.field().clone();
    let deg = field.degree();
    let k0j = K0Basis::new(bj.algebra())?;

    let transversal = refined_transversal(j, k, h)?;
    let mut pieces = Vec::new();
    let mut parts = Vec::new();
    let mut q_support = Vec::new();
    for coset in &transversal {
        let x = coset.rep;
        let xi = group.inv(x);
        let mut double: Vec<usize> =
            j.elements().iter().flat_map(|&a| k.elements().iter().map(move |&b| (a, b))).map(|(a, b)| group.mul(group.mul(a, x), b)).collect();
        double.sort_unstable();
        double.dedup();
        let mut support: Vec<usize> = double.iter().map(|&g| group.mul(g, xi)).collect();
        support.sort_unstable();
        let mut hits = vec![0usize; group.order()];
        for &a in j.elements() {
            for &beta in &coset.betas {
                hits[group.mul(group.mul(a, x), beta)] += 1;
            }
        }
        let transversal_ok = double.iter().all(|&g| hits[g] == 1) && hits.iter().sum::<usize>() == double.len();
        q_support.extend(double.iter().copied());
        pieces.push(WitnessPiece {
            rep: x,
            betas: coset.betas.clone(),
            conjugated_labels: coset.betas.iter().map(|&b| group.mul(group.mul(x, b), xi)).collect(),
            shifted_labels: coset.betas.iter().map(|&b| group.mul(x, b)).collect(),
            double_coset_size: double.len(),
            stabilizer_order: j.intersection(&k.conjugate(x)).order(),
            dim: support.len() * deg,
            class: K0Class { multiplicities: Vec::new() },
            functor_class: K0Class { multiplicities: Vec::new() },
            transversal_ok,
        });
        parts.push(Piece { support });
    }
    let mut sorted_q = q_support.clone();
    sorted_q.sort_unstable();
    if sorted_q != h.elements() {
        return Err(Error::Structural("the double cosets do not partition H".into()));
    }

    // ε as a GF(p)-matrix from ⊕ P_x (concatenated) to Q (sorted H)
    let n = h.order() * deg;
    let mut eps = Matrix::zeros(field.prime_field(), n, n);
    let mut offset = 0;
    for (piece, part) in pieces.iter().zip(&parts) {
        for (i, &g) in part.support.iter().enumerate() {
            let dest = h.position(group.mul(g, piece.rep)).unwrap();
            for t in 0..deg {
                eps.set(dest * deg + t, (offset + i) * deg + t, 1);
            }
        }
        offset += part.support.len();
    }
    let q_action = left_action(base, &field, &bj, h.elements());
    let q_module = AlgebraModule::new(Arc::clone(bj.algebra()), n, q_action.clone())?;
    let q_class = k0_class(&q_module, &k0j)?;
    let mut p_action = vec![Matrix::zeros(field.prime_field(), n, n); bj.algebra().dim()];
    let mut offset = 0;
    for (piece, part) in pieces.iter_mut().zip(&parts) {
        let act = left_action(base, &field, &bj, &part.support);
        for (big, small) in p_action.iter_mut().zip(&act) {
            big.set_block(offset, offset, small);
        }
        offset += part.support.len() * deg;
        let module = AlgebraModule::new(Arc::clone(bj.algebra()), part.support.len() * deg, act)?;
        piece.class = k0_class(&module, &k0j)?;
    }
    let p_module = AlgebraModule::new(Arc::clone(bj.algebra()), n, p_action)?;
    let p_class = k0_class(&p_module, &k0j)?;
    let left_isomorphism = eps.inverse().is_some()
        && q_module.action().iter().zip(p_module.action()).all(|(q, p)| eps.mul(p) == q.mul(&eps));

    // right action on generators r·g (g = jxβx⁻¹) against pure multipliers r'·k'
    let size = ring.size();
    let pure_mul = |(r, g): (usize, usize), (r2, g2): (usize, usize)| (ring.mul(r, base.theta(g, r2)), group.mul(g, g2));
    let checks: Vec<(usize, usize, usize)> = parts
        .iter()
        .enumerate()
        .flat_map(|(i, part)| part.support.iter().flat_map(move |&g| (1..size).map(move |r| (i, r, g))))
        .collect();
    let right_failure = checks.par_iter().find_map_first(|&(i, r, g)| {
        let x = pieces[i].rep;
        let xi = group.inv(x);
        k.elements().iter().find_map(|&kk| {
            (1..ring.size()).find_map(|r2| {
                // m ·_P (r2 kk) = m · (θ_x(r2) · x kk x⁻¹)
                let in_p = pure_mul((r, g), (base.theta(x, r2), group.mul(group.mul(x, kk), xi)));
                let lhs = (in_p.0, group.mul(in_p.1, x));
                let rhs = pure_mul((r, group.mul(g, x)), (r2, kk));
                (lhs != rhs).then_some(RightActionFailure { rep: x, generator: (r, g), multiplier: (r2, kk) })
            })
        })
    });
    let right_pairs_checked = checks.len() * k.order() * (ring.size() - 1);

    // the functor-built modules
    let inc_jh = hom_to_algebra(&rho(base, j, h)?, &bj, &bh)?;
    let inc_kh = hom_to_algebra(&rho(base, k, h)?, &bk, &bh)?;
    let zs = right_basis(base, k, h)?.elements().iter().map(|z| bh.to_vector(z)).collect::<Result<Vec<_>>>()?;
    let tr = extend_scalars(&inc_kh, &zs, &AlgebraModule::regular(Arc::clone(bk.algebra())))?;
    let functor_total = k0_class(&restrict_scalars(&inc_jh, &tr)?, &k0j)?;
    for piece in &mut pieces {
        let x = piece.rep;
        let lower = j.conjugate_inv(x).intersection(k);
        let upper = j.intersection(&k.conjugate(x));
        let (b_lower, b_upper) = (bridge(&lower)?, bridge(&upper)?);
        let res = restrict_scalars(
            &hom_to_algebra(&rho(base, &lower, k)?, &b_lower, &bk)?,
            &AlgebraModule::regular(Arc::clone(bk.algebra())),
        )?;
        let g = gamma(base, x, &lower)?;
        if g.target().subgroup() != &upper {
            return Err(Error::Structural("x(Jˣ ∩ K)x⁻¹ differs from J ∩ ˣK".into()));
        }
        let one = vec![b_upper.to_vector(&b_upper.ring().one())?];
        let conj = extend_scalars(&hom_to_algebra(&g, &b_lower, &b_upper)?, &one, &res)?;
        let inc = hom_to_algebra(&rho(base, &upper, j)?, &b_upper, &bj)?;
        let ws = right_basis(base, &upper, j)?.elements().iter().map(|w| bj.to_vector(w)).collect::<Result<Vec<_>>>()?;
        piece.functor_class = k0_class(&extend_scalars(&inc, &ws, &conj)?, &k0j)?;
    }

    let holds = left_isomorphism
        && right_failure.is_none()
        && p_class == q_class
        && functor_total == q_class
        && pieces.iter().all(|p| p.transversal_ok && p.class == p.functor_class);
    Ok(WitnessReport { pieces, left_isomorphism, right_pairs_checked, right_failure, p_class, q_class, functor_total, holds })
}
