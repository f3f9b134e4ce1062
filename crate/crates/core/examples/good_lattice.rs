//! Builds the good lattice and prints its level sizes.
//!
//! Usage: cargo run --example good_lattice -- [e] [n]      (default: 4 6)

use dnbranch::prelude::*;

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let e = Modulus::parse_e(&args.next().unwrap_or_else(|| "4".into()))?;
    let n: usize = args.next().map_or(6, |s| s.parse().expect("n must be a number"));

    let params = classify_regime(n, e)?;
    let lattice = Lattice::build(n, params)?;
    println!("{params}");
    for (m, level) in lattice.levels().iter().enumerate() {
        let all = Bipartition::all_of(m).len();
        println!("level {m}: {:>4} Kleshchev of {:>4} bipartitions", level.len(), all);
    }

    // Colored arrows into one vertex.
    if n >= 5 {
        let target: Bipartition = "1|2,2".parse()?;
        println!("\narrows into {target}:");
        for edge in lattice.edges().filter(|e| e.to == target) {
            println!("  {} --{}--> {}", edge.from, edge.color.residue, edge.to);
        }
        println!("canonical path: {}", canonical_path(&target, &lattice)?);
    }
    Ok(())
}
