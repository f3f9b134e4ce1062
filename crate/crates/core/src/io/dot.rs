use std::fmt::Write;

use crate::branching::SocleDecomposition;
use crate::crystal::Lattice;
use crate::params::CrystalParams;

// Vertex names only use digits, commas, '|', '-', '+', 'D' and parentheses,
// so plain double quotes are enough.
fn quoted(s: impl std::fmt::Display) -> String {
    format!("\"{s}\"")
}

/// The good lattice as a DOT digraph: one vertex per bipartition, one rank
/// per level, arrows labelled by residue.
pub fn lattice_dot(lattice: &Lattice) -> String {
    let mut out = String::new();
    writeln!(out, "digraph lattice {{").unwrap();
    writeln!(out, "  label={};", quoted(lattice.params())).unwrap();
    writeln!(out, "  rankdir=TB;").unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    for level in lattice.levels() {
        let names: Vec<String> = level.iter().map(quoted).collect();
        writeln!(out, "  {{ rank=same; {}; }}", names.join("; ")).unwrap();
    }
    for e in lattice.edges() {
        writeln!(out, "  {} -> {} [label={}];", quoted(&e.from), quoted(&e.to), quoted(e.color.residue)).unwrap();
    }
    out.push_str("}\n");
    out
}

/// A branching graph between levels `n` and `n − 1`: one vertex per label,
/// an unlabelled arrow from each label to every summand of its socle.
pub fn branching_dot(params: &CrystalParams, n: usize, socles: &[SocleDecomposition]) -> String {
    let mut out = String::new();
    writeln!(out, "digraph branching {{").unwrap();
    writeln!(out, "  label={};", quoted(format_args!("{params} n={n}"))).unwrap();
    writeln!(out, "  rankdir=TB;").unwrap();
    let upper: Vec<String> = socles.iter().map(|s| quoted(&s.source)).collect();
    let mut lower: Vec<String> = socles.iter().flat_map(|s| s.summands.iter().map(quoted)).collect();
    lower.sort();
    lower.dedup();
    for rank in [upper, lower] {
        if !rank.is_empty() {
            writeln!(out, "  {{ rank=same; {}; }}", rank.join("; ")).unwrap();
        }
    }
    for s in socles {
        for t in &s.summands {
            writeln!(out, "  {} -> {};", quoted(&s.source), quoted(t)).unwrap();
        }
    }
    out.push_str("}\n");
    out
}
