//! Permutations acting on words: the Heisenberg product of endomorphisms
//! of the tensor algebra, read back as permutations.

use heisenberg::combinat::Permutation;
use heisenberg::tensor_oracle::*;

fn main() -> heisenberg::Result<()> {
    let s = Permutation::from_word("12").unwrap();
    let t = Permutation::from_word("132").unwrap();
    let d = 5;
    let f = endo_heisenberg(&psi_action(&s, d), &psi_action(&t, d))?;
    for n in 3..=5 {
        let img = f.apply(&Word::distinct(n));
        println!("on 1..{n}: {:?}", read_permutations(&img, n));
    }
    let mut cases = 0;
    for p in 0..=3 {
        for q in 0..=3 {
            for a in Permutation::all_of(p) {
                for b in Permutation::all_of(q) {
                    for n in p.max(q)..=p + q {
                        assert!(verify_schur_weyl(&a, &b, n, 6));
                        cases += 1;
                    }
                }
            }
        }
    }
    println!("{cases} cases agree with the permutation formula");
    Ok(())
}
