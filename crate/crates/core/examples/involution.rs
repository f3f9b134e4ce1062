//! The involution `h` in both regimes, with its fixed points.

use dnbranch::branching::residue_counts;
use dnbranch::prelude::*;

fn show(lattice: &Lattice, text: &str) -> Result<()> {
    let lambda: Bipartition = text.parse()?;
    let s = InvolutionSummary::compute(&lambda, lattice)?;
    let special = s.special.map_or("-".to_string(), |n| n.to_string());
    println!(
        "  h({:<10}) = {:<10} fixed={:<5} special node={special}",
        s.lambda.to_string(),
        s.image.to_string(),
        s.fixed
    );
    Ok(())
}

fn main() -> Result<()> {
    let a = classify_regime(5, Modulus::Infinite)?;
    let lattice_a = Lattice::build(5, a)?;
    println!("{a}: h swaps the components");
    for t in ["2,1|1,1", "2|1,1,1", "1|1"] {
        show(&lattice_a, t)?;
    }

    let b = classify_regime(5, Modulus::Finite(4))?;
    let lattice_b = Lattice::build(5, b)?;
    println!("\n{b}: h shifts every residue of a path by l");
    for t in ["1|2,2", "2|1,1,1", "1|2,1", "1,1|2"] {
        show(&lattice_b, t)?;
    }

    println!("\nfixed points up to level 5, with residue counts N_0..N_3:");
    for m in 1..=5 {
        for lambda in lattice_b.level(m) {
            if is_fixed(lambda, &lattice_b)? {
                let counts = residue_counts(lambda, &b);
                let listed: Vec<usize> = (0..4).map(|k| counts.get(k)).collect();
                println!("  {lambda:<10} {listed:?} balanced={}", counts.is_balanced(&b));
            }
        }
    }
    Ok(())
}
