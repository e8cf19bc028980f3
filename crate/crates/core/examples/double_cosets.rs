use heisenberg::combinat::Composition;
use heisenberg::rep_oracle::*;

fn main() -> heisenberg::Result<()> {
    let alpha = Composition::new(vec![2, 1]).unwrap();
    let beta = Composition::new(vec![1, 2]).unwrap();
    for n in 3..=6 {
        let cosets = double_cosets(&alpha, &beta, n)?;
        println!("n = {n}: {} double cosets", cosets.len());
        for c in &cosets {
            let order = stabilizer_order(&c.representative, &alpha, &beta, n);
            println!("  {:?} stabilizer order {order}", c.matrix.rows());
        }
        println!("  dimension identity: {}", dimension_identity(&alpha, &beta, n)?);
    }
    let report = run_exhaustive(3)?;
    println!("{} cases, {} failures", report.cases, report.failures.len());
    Ok(())
}
