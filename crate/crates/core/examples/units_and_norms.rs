// Units of the fixed fields of GF(2^6) with norms as transfers, and the
// external-data K3 instance checked against them at degree one.

use twisted_mackey::mackey::{check_axioms, quillen_kn_instance, units_galois_mackey};
use twisted_mackey::Result;

pub fn run_example() -> Result<()> {
    let units = units_galois_mackey(2, 6)?;
    for (h, v) in units.subgroups.iter().zip(&units.values) {
        println!("{:<28} {}", h.describe(), v.label);
    }
    println!("units pass all axioms: {}", check_axioms(&units).all_pass());

    // degree one is compared with the units functor inside the constructor
    quillen_kn_instance(2, 6, 1)?;
    let k3 = quillen_kn_instance(2, 6, 2)?;
    let values: Vec<&str> = k3.values.iter().map(|v| v.label.as_str()).collect();
    println!("K3 values {values:?}, external data {}", k3.external_data);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
