// The explicit bimodule isomorphism behind the double coset formula.

use std::sync::Arc;

use twisted_mackey::group::{FiniteGroup, Subgroup};
use twisted_mackey::module::mackey_decomposition_witness;
use twisted_mackey::ring::{FiniteRing, RingSpec};
use twisted_mackey::twisted::{ActionSpec, GRing};
use twisted_mackey::Result;

pub fn run_example() -> Result<()> {
    let ring = Arc::new(FiniteRing::build(&RingSpec::Gf { p: 7, k: 1, modulus: None })?);
    let s3 = Arc::new(FiniteGroup::symmetric(3)?);
    let base = Arc::new(GRing::new(ring, Arc::clone(&s3), &ActionSpec::Trivial)?);
    let t = Subgroup::generated(&s3, &[s3.find_element("(1 2)").unwrap()]);
    let w = mackey_decomposition_witness(&t, &t, &Subgroup::whole(&s3), &base)?;
    for p in &w.pieces {
        println!(
            "x = {}: |JxK| = {}, dim {}, class {:?}",
            s3.element_label(p.rep),
            p.double_coset_size,
            p.dim,
            p.class.multiplicities
        );
    }
    println!(
        "left isomorphism {}, right pairs checked {}, failures {}, holds {}",
        w.left_isomorphism,
        w.right_pairs_checked,
        usize::from(w.right_failure.is_some()),
        w.holds
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
