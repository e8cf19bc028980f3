//! Parsing and evaluating expressions, as the `heis eval` subcommand does.

use heisenberg::cli::{evaluate, parse, EvalOptions, ResultDoc};

fn main() {
    let opts = EvalOptions::default();
    for text in ["h[2,1] # h[3]", "delta(perm 52413)", "antipode(M[1], 3)", "h[2] * X[2]", "X[1 + X[2]"] {
        match parse(text) {
            Ok(e) => match evaluate(&e, &opts) {
                Ok(v) => print!("{e}\n{}", ResultDoc::from_value(&v, None).to_text()),
                Err(err) => println!("{e}\n{err}"),
            },
            Err(err) => println!("{text}\n{err}"),
        }
        println!();
    }
}
