// Multiplication in GF(9)_θ[C2], the maps ρ and γ, and free bases over subrings.

use std::sync::Arc;

use twisted_mackey::group::Subgroup;
use twisted_mackey::mackey::galois_gring;
use twisted_mackey::twisted::{gamma, left_basis_decompose, rho, right_basis, TGRElement, TwistedGroupRing};
use twisted_mackey::Result;

pub fn run_example() -> Result<()> {
    let base = galois_gring(3, 2)?;
    let group = Arc::clone(base.group());
    let (trivial, whole) = (Subgroup::trivial(&group), Subgroup::whole(&group));
    let ring = TwistedGroupRing::new(Arc::clone(&base), whole.clone())?;

    // (a·σ)(a·σ) = a·θ_σ(a)·σ² = a^4
    let a = base.ring().as_field().unwrap().generator();
    let x = TGRElement::pure(a, 1);
    println!("(a σ)^2 = {:?}", ring.multiply(&x, &x)?);
    println!("(a σ)·(1 e) = {:?}", ring.multiply(&x, &ring.one())?);

    let inclusion = rho(&base, &trivial, &whole)?;
    println!("ρ(a e) = {:?}", inclusion.apply(&TGRElement::pure(a, 0)));
    let conj = gamma(&base, 1, &trivial)?;
    println!("γ^σ(a e) = {:?}", conj.apply(&TGRElement::pure(a, 0)));

    let left = left_basis_decompose(&base, &trivial, &whole)?;
    let right = right_basis(&base, &trivial, &whole)?;
    let y = ring.add(&x, &TGRElement::pure(2, 0));
    println!("left coordinates of {y:?}: {:?}", left.express(&y)?);
    println!("right coordinates of {y:?}: {:?}", right.express(&y)?);
    println!("reassembled: {}", right.reassemble(&right.express(&y)?)? == y);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
