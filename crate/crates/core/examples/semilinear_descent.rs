// Semilinear modules and twisted group ring modules are the same data.

use std::sync::Arc;

use twisted_mackey::group::Subgroup;
use twisted_mackey::mackey::galois_gring;
use twisted_mackey::module::{k0_class, AlgebraModule, K0Basis};
use twisted_mackey::twisted::SemilinearModule;
use twisted_mackey::Result;

pub fn run_example() -> Result<()> {
    let base = galois_gring(2, 3)?;
    let h = Subgroup::whole(base.group());
    let descent = SemilinearModule::descent(&base, &h)?;
    let k0 = K0Basis::new(descent.bridge().algebra())?;

    let regular = AlgebraModule::regular(Arc::clone(descent.bridge().algebra()));
    let modules = [
        ("descent", descent.clone()),
        ("free of rank 2", SemilinearModule::free(&base, &h, 2)?),
        ("regular", SemilinearModule::from_module(&base, &h, &regular)?),
    ];
    for (name, m) in &modules {
        let module = m.to_module()?;
        let back = SemilinearModule::from_module(&base, &h, &module)?;
        println!(
            "{name}: dim {} over GF(8), class {:?}, round trip {}",
            m.dim(),
            k0_class(&module, &k0)?.multiplicities,
            back == *m
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
