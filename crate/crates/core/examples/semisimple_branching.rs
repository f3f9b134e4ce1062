//! Branching in the semisimple case, where the socle is the whole
//! restriction and dimensions must add up.

use dnbranch::prelude::*;

fn dim(label: &IrreducibleLabel) -> Result<u128> {
    let d = bipartition_dimension(&label.rep)?;
    Ok(if label.is_split() { d / 2 } else { d })
}

fn show(lattice: &Lattice, text: &str, sign: Option<Sign>) -> Result<()> {
    let lambda: Bipartition = text.parse()?;
    let label = label_for(&lambda, sign, lattice)?;
    let socle = socle_restriction(&label, lattice)?;
    let parts: Vec<String> = socle
        .summands
        .iter()
        .map(|s| dim(s).map(|d| d.to_string()))
        .collect::<Result<_>>()?;
    println!("{socle}");
    println!("  dim {} = {}", dim(&label)?, parts.join(" + "));
    Ok(())
}

fn main() -> Result<()> {
    let params = classify_regime(6, Modulus::Infinite)?;
    let lattice = Lattice::build(6, params)?;
    println!("{params}\n");
    show(&lattice, "2,1|1,1", None)?;
    show(&lattice, "2|1,1,1", None)?;
    show(&lattice, "2,1|2,1", Some(Sign::Plus))?;
    show(&lattice, "2,1|2,1", Some(Sign::Minus))?;

    println!("\nall labels of H(D_4):");
    for label in labels(4, &lattice)? {
        println!("  {label} (dim {})", dim(&label)?);
    }
    Ok(())
}
