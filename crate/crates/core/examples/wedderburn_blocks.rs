// Exact linear algebra over GF(p) and the Wedderburn blocks of GF(7)[S3].

use std::sync::Arc;

use twisted_mackey::group::{FiniteGroup, Subgroup};
use twisted_mackey::linalg::{FiniteField, Matrix, PrimeField};
use twisted_mackey::ring::{FiniteRing, RingSpec};
use twisted_mackey::twisted::{as_structure_algebra, ActionSpec, GRing, TwistedGroupRing};
use twisted_mackey::Result;

pub fn run_example() -> Result<()> {
    let f5 = PrimeField::new(5)?;
    let m = Matrix::from_rows(f5, &[vec![1, 2, 3], vec![2, 4, 1], vec![3, 1, 4]])?;
    println!("rank over GF(5): {}, kernel: {:?}", m.rank(), m.kernel());

    let gf64 = FiniteField::new(2, 6)?;
    let a = gf64.generator();
    println!("{}: generator {a} has order 63: {}", gf64.label(), gf64.is_primitive_root(a));

    let ring = Arc::new(FiniteRing::build(&RingSpec::Gf { p: 7, k: 1, modulus: None })?);
    let s3 = Arc::new(FiniteGroup::symmetric(3)?);
    let base = Arc::new(GRing::new(ring, Arc::clone(&s3), &ActionSpec::Trivial)?);
    let bridge = as_structure_algebra(&TwistedGroupRing::new(base, Subgroup::whole(&s3))?)?;
    println!("GF(7)[S3] has dimension {}", bridge.algebra().dim());
    for (e, block) in bridge.algebra().blocks()? {
        println!("  block M{}(GF(7^{})) with idempotent {e:?}", block.matrix_size, block.center_dim);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
