//! Writes DOT renderings of a lattice and of a branching graph.
//!
//! Usage: cargo run --example export_dot -- [out_dir]   (default: current dir)
//! Then e.g. `dot -Tsvg lattice-e4-n4.dot > lattice.svg`.

use std::path::PathBuf;

use dnbranch::io::{branching_dot, lattice_dot};
use dnbranch::prelude::*;

fn main() -> Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    let params = classify_regime(4, Modulus::Finite(4))?;
    let lattice = Lattice::build(4, params)?;

    let files = [
        ("lattice-e4-n4.dot", lattice_dot(&lattice)),
        ("branching-e4-n4.dot", branching_dot(&params, 4, &branching_graph(4, &lattice)?)),
    ];
    for (name, text) in files {
        let path = dir.join(name);
        std::fs::write(&path, &text).map_err(|e| Error::Io { path: path.clone(), source: e })?;
        println!("wrote {} ({} lines)", path.display(), text.lines().count());
    }
    Ok(())
}
