//! QSym structures on the monomial basis, checked against evaluation on
//! concrete alphabets.

use heisenberg::lincomb::ratio;
use heisenberg::qsymfn::*;

fn main() {
    let m1 = m(&[1]);
    println!("M1 M1 = {:?}", product_m(&m1, &m1));
    println!("Δ#(M1) = {:?}", heisenberg_coproduct(&m1));
    println!("Δ⋆(M21) = {:?}", external_coproduct(&m(&[2, 1])));
    println!("S#(M1) to degree 3 = {:?}", antipode_heisenberg_qsym(&m1, 3));

    let x = OrderedAlphabet::base(&[ratio(1, 2), ratio(2, 3), ratio(-1, 1)]);
    let y = OrderedAlphabet::base(&[ratio(3, 1), ratio(1, 5)]);
    let f = m(&[2, 1]);
    let direct = x.heisenberg_sum(&y).evaluate(&f);
    let split = evaluate_tensor(&heisenberg_coproduct(&f), &x, &y);
    println!("M21(X + Y + XY) = {direct} = {split}");
}
