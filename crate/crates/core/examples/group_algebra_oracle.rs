// For a trivial action the twisted pipeline reproduces K0 of ordinary group
// algebras built independently.

use std::sync::Arc;

use twisted_mackey::group::FiniteGroup;
use twisted_mackey::mackey::dress_kuku_compare;
use twisted_mackey::ring::{FiniteRing, RingSpec};
use twisted_mackey::twisted::{ActionSpec, GRing};
use twisted_mackey::Result;

pub fn run_example() -> Result<()> {
    for (p, group) in [(5, FiniteGroup::cyclic(2)?), (7, FiniteGroup::symmetric(3)?)] {
        let ring = Arc::new(FiniteRing::build(&RingSpec::Gf { p, k: 1, modulus: None })?);
        let label = format!("GF({p})[{}]", group.label());
        let base = Arc::new(GRing::new(ring, Arc::new(group), &ActionSpec::Trivial)?);
        let r = dress_kuku_compare(&base, 48)?;
        println!("{label}: {} maps compared, identical {}", r.maps_compared, r.identical);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
