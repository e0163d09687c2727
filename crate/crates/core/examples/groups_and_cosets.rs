// Subgroups, coset transversals and double cosets of S3.

use std::sync::Arc;

use twisted_mackey::group::{
    double_coset_reps, enumerate_subgroups, left_coset_reps, refined_transversal, right_coset_reps, FiniteGroup, Subgroup,
};
use twisted_mackey::Result;

pub fn run_example() -> Result<()> {
    let s3 = Arc::new(FiniteGroup::symmetric(3)?);
    let subs = enumerate_subgroups(&s3, 48)?;
    println!("{} has {} subgroups", s3.label(), subs.len());
    for h in &subs {
        println!("  order {}: {}", h.order(), h.describe());
    }

    let t = Subgroup::generated(&s3, &[s3.find_element("(1 2)").unwrap()]);
    let whole = Subgroup::whole(&s3);
    let label = |xs: Vec<usize>| xs.iter().map(|&x| s3.element_label(x).to_string()).collect::<Vec<_>>().join(" ");
    println!("S3 = ⊔ T y over y in {}", label(right_coset_reps(&t, &whole)?));
    println!("S3 = ⊔ z T over z in {}", label(left_coset_reps(&t, &whole)?));

    let dcs = double_coset_reps(&t, &t, &whole)?;
    let sizes: Vec<usize> = dcs.iter().map(|d| d.size).collect();
    println!("T\\S3/T has {} double cosets of sizes {sizes:?}", dcs.len());
    for r in refined_transversal(&t, &t, &whole)? {
        println!("  x = {}: betas {}", s3.element_label(r.rep), label(r.betas));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
