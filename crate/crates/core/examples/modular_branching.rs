//! Branching when `e = 2l` is small: the socle of each restriction comes from
//! the good nodes, and almost symmetric bipartitions produce a `D+ ⊕ D−` pair.
//!
//! Usage: cargo run --example modular_branching -- [e] [n]   (default: 4 5)

use dnbranch::prelude::*;

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let e = Modulus::parse_e(&args.next().unwrap_or_else(|| "4".into()))?;
    let n: usize = args.next().map_or(5, |s| s.parse().expect("n must be a number"));
    let params = classify_regime(n, e)?;
    let lattice = Lattice::build(n, params)?;
    println!("{params}, level {n}\n");

    for socle in branching_graph(n, &lattice)? {
        let rep = &socle.source.rep;
        let note = match almost_symmetric(rep, &lattice)? {
            Some(node) => format!("   [almost symmetric, special node {node}]"),
            None => String::new(),
        };
        println!("{socle}{note}");
    }
    Ok(())
}
