use heisenberg::nsymfn::*;

fn main() {
    let x3 = x(&[3]);
    println!("X3 # X3 = {:?}", heisenberg_x(&x3, &x3));

    // powers of X1 have Stirling numbers of the second kind as coefficients
    let mut power = x(&[1]);
    for n in 2..=5 {
        power = heisenberg_x(&power, &x(&[1]));
        println!("X1^#{n} = {power:?}");
    }

    println!("X11 * X2 = {:?}", internal_x(&x(&[1, 1]), &x(&[2])));
    println!("ψ(X11) = {:?}", iso_psi(&x(&[1, 1])));
    println!("S(X21) = {:?}", antipode_heisenberg_x(&x(&[2, 1])));
    println!("π(X3 # X3) = {:?}", project_pi(&heisenberg_x(&x3, &x3)));
}
