// MF0 to MF6 on K0 of twisted group rings, the Burnside functor, and the
// deliberately broken constant functor.

use std::sync::Arc;

use twisted_mackey::group::FiniteGroup;
use twisted_mackey::mackey::{burnside_mackey, check_axioms, constant_functor, galois_gring, k0_twisted_mackey, MackeyData};
use twisted_mackey::Result;

fn show(data: &MackeyData) {
    let report = check_axioms(data);
    let values: Vec<&str> = data.values.iter().map(|v| v.label.as_str()).collect();
    println!("{}: values {values:?}, failing {:?}", data.label, report.failing());
}

pub fn run_example() -> Result<()> {
    let k0 = k0_twisted_mackey(&galois_gring(2, 6)?, 48)?;
    show(&k0.data);
    let s3 = Arc::new(FiniteGroup::symmetric(3)?);
    show(&burnside_mackey(&s3, 48)?);
    show(&constant_functor(&s3, 48)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
