// K0 classes and the maps induced by restriction and extension of scalars
// along GF(7) ⊆ GF(7)[S3].

use std::sync::Arc;

use twisted_mackey::group::{FiniteGroup, Subgroup};
use twisted_mackey::module::{k0_class, k0_induced_map, AlgebraModule, ChangeOfRings, K0Basis};
use twisted_mackey::ring::{FiniteRing, RingSpec};
use twisted_mackey::twisted::{as_structure_algebra, hom_to_algebra, rho, right_basis, ActionSpec, GRing, TwistedGroupRing};
use twisted_mackey::Result;

pub fn run_example() -> Result<()> {
    let ring = Arc::new(FiniteRing::build(&RingSpec::Gf { p: 7, k: 1, modulus: None })?);
    let s3 = Arc::new(FiniteGroup::symmetric(3)?);
    let base = Arc::new(GRing::new(ring, Arc::clone(&s3), &ActionSpec::Trivial)?);
    let t = Subgroup::generated(&s3, &[s3.find_element("(1 2)").unwrap()]);
    let whole = Subgroup::whole(&s3);

    let small = as_structure_algebra(&TwistedGroupRing::new(Arc::clone(&base), t.clone())?)?;
    let large = as_structure_algebra(&TwistedGroupRing::new(Arc::clone(&base), whole.clone())?)?;
    let (k_small, k_large) = (K0Basis::new(small.algebra())?, K0Basis::new(large.algebra())?);
    let regular = AlgebraModule::regular(Arc::clone(large.algebra()));
    println!("[GF(7)[S3]] = {:?}", k0_class(&regular, &k_large)?.multiplicities);

    let f = hom_to_algebra(&rho(&base, &t, &whole)?, &small, &large)?;
    let zs = right_basis(&base, &t, &whole)?.elements().iter().map(|z| large.to_vector(z)).collect::<Result<Vec<_>>>()?;
    let res = k0_induced_map(&f, ChangeOfRings::Restrict, None, &k_small, &k_large)?;
    let ind = k0_induced_map(&f, ChangeOfRings::Extend, Some(&zs), &k_small, &k_large)?;
    println!("restriction to GF(7)[C2]: {res:?}");
    println!("induction from GF(7)[C2]: {ind:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
