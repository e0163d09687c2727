// The Auslander map GF(p^k)_θ[C_k] → End_{GF(p)}(GF(p^k)) for several fields.

use twisted_mackey::group::Subgroup;
use twisted_mackey::mackey::galois_gring;
use twisted_mackey::module::K0Basis;
use twisted_mackey::twisted::auslander_map;
use twisted_mackey::Result;

pub fn run_example() -> Result<()> {
    for (p, k) in [(3, 2), (2, 3), (5, 2), (2, 6)] {
        let base = galois_gring(p, k)?;
        let map = auslander_map(&base, &Subgroup::whole(base.group()))?;
        let v = map.verdict();
        let blocks = K0Basis::new(map.bridge.algebra())?.rank();
        println!(
            "GF({p}^{k}): dim {} -> {}, image rank {}, isomorphism {}, K0 rank {blocks}",
            v.source_dim, v.target_dim, v.image_rank, v.isomorphism
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
