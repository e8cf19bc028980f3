//! Runs every property suite at a reduced bound and prints one line each.

use heisenberg::cli::suites::{default_bound, run_suite, suite_names};

fn main() {
    for name in suite_names() {
        let bound = default_bound(name).unwrap().min(4);
        let report = run_suite(name, Some(bound)).unwrap();
        println!("{}", report.summary());
    }
}
