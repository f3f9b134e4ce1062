//! Runs every oracle suite at a small size and prints the reports.
//!
//! Usage: cargo run --release --example verify_oracles -- [n]   (default: 6)

use dnbranch::oracle::{run_suite, SUITES};
use dnbranch::prelude::*;

fn main() -> Result<()> {
    let n: usize = std::env::args().nth(1).map_or(6, |s| s.parse().expect("n must be a number"));
    let mut all_passed = true;
    for e in ["4", "6", "inf"] {
        let params = classify_regime(n, Modulus::parse_e(e)?)?;
        for suite in SUITES {
            let outcome = match (*suite, params.e()) {
                ("level-one", Modulus::Infinite) => continue,
                ("semisimple", _) => match run_suite(suite, n.min(7), &params) {
                    Err(Error::NotSemisimple { .. }) => continue,
                    other => other,
                },
                _ => run_suite(suite, n, &params),
            };
            let report = outcome?;
            all_passed &= report.passed();
            print!("{report}");
        }
    }
    println!("{}", if all_passed { "all suites passed" } else { "SOME SUITES FAILED" });
    std::process::exit(if all_passed { 0 } else { 1 });
}
