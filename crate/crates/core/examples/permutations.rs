//! The Heisenberg product on permutations and its two extreme components.

use heisenberg::combinat::Permutation;
use heisenberg::permalg::*;

fn main() {
    let prod = heisenberg_perm(&perm("12"), &perm("132"));
    for n in 3..=5 {
        println!("degree {n}: {:?}", prod.component(n));
    }
    println!("12 ⋆ 132 = {:?}", mr_product(&perm("12"), &perm("132")));
    println!("231 ∘ 312 = {:?}", compose(&perm("231"), &perm("312")));
    println!("Δ(52413) = {:?}", coproduct_perm(&perm("52413")));

    let s = Permutation::from_word("2413").unwrap();
    for p in 0..=4 {
        println!("cut {p}: {:?}", split_at(&s, p));
    }
}
