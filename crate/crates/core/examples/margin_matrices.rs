//! Margin matrices and the exponential generating function of a
//! Heisenberg product of species.

use heisenberg::combinat::*;
use heisenberg::lincomb::int;

fn main() -> heisenberg::Result<()> {
    let alpha = Composition::new(vec![2, 1])?;
    let beta = Composition::new(vec![3])?;
    for n in 3..=6 {
        for m in enumerate_margin_matrices(&alpha, &beta, n)? {
            println!("n = {n}: {:?} reads {} and {}", m.rows(), matrix_composition(&m), matrix_partition(&m));
        }
    }
    let ones = vec![int(1); 9];
    let counts = egf_heisenberg(&ones, &ones, 8);
    let shown: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
    println!("|(e # e)[n]| = {}", shown.join(", "));
    Ok(())
}
