// Table of marks of S3, span composition and the product [C2/e]^2 = 2[C2/e].

use std::sync::Arc;

use twisted_mackey::burnside::{
    burnside_hom_basis, burnside_product, compose_spans, marks_vector, subgroup_classes, BurnsideElement, GSet,
};
use twisted_mackey::group::{FiniteGroup, Subgroup};
use twisted_mackey::Result;

pub fn run_example() -> Result<()> {
    let s3 = Arc::new(FiniteGroup::symmetric(3)?);
    let whole = Subgroup::whole(&s3);
    let classes = subgroup_classes(&whole, 48)?;
    println!("table of marks of S3");
    for l in &classes {
        println!("  G/{:<46} {:?}", l.describe(), marks_vector(&GSet::cosets(&whole, l)?, &classes));
    }

    // Hom(G/T, G/T) has one basis span per orbit of G/T × G/T
    let t = &classes[1];
    let gt = GSet::cosets(&whole, t)?;
    let basis = burnside_hom_basis(&gt, &gt)?;
    println!("rank of Hom(G/T, G/T) = {}", basis.len());
    let square = compose_spans(&basis[1], &basis[1])?;
    println!("a basis span composed with itself has middle of size {}", square.middle_size());

    let c2 = Arc::new(FiniteGroup::cyclic(2)?);
    let free = BurnsideElement::transitive(&Subgroup::whole(&c2), &Subgroup::trivial(&c2))?;
    let product = burnside_product(&free, &free)?;
    println!("[C2/e]^2 == 2[C2/e]: {}", product == free.scale(2));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
