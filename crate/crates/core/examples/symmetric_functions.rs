//! Heisenberg products in the h and p bases of Λ, and the isomorphisms
//! relating them to the external and internal products.

use heisenberg::symfn::*;

fn main() -> heisenberg::Result<()> {
    let f = SymElem::h(&[2, 1]);
    let g = SymElem::h(&[3]);
    println!("h21 # h3 = {:?}", heisenberg(&f, &g)?);
    println!("top degree = {:?}", heisenberg(&f, &g)?.component(6));

    let p2 = SymElem::p(&[2]);
    println!("p2 # p2 = {:?}", heisenberg(&p2, &p2)?);
    println!("h2 in p = {:?}", h_to_p(&SymElem::h(&[2])));

    let img = iso_external_to_heisenberg(&SymElem::h(&[1, 1]))?;
    println!("h11 under the external-to-# isomorphism = {img:?}");
    let phi = iso_heisenberg_to_internal_truncated(&SymElem::one(SymBasis::H), 4)?;
    println!("1 under the #-to-internal map, up to degree 4 = {phi:?}");
    println!("Δ(h2) = {:?}", coproduct(&SymElem::h(&[2])));
    Ok(())
}
