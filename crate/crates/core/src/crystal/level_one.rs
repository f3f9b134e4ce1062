//! Level-one mode: the same signature engine run on single partitions with
//! residues `col − row mod e`. Used to calibrate the engine against the
//! classical fact that it generates exactly the `e`-restricted partitions.

use std::collections::BTreeSet;

use super::{f_tilde, good_additions, Color};
use crate::diagram::{Bipartition, Component, Partition};
use crate::params::{CrystalParams, Modulus, Residue};

fn embed(p: &Partition) -> Bipartition {
    Bipartition::new(p.clone(), Partition::empty())
}

fn params(e: u32) -> CrystalParams {
    CrystalParams::regime_a(Modulus::Finite(e))
}

/// `f̃_i` on a partition, or `None` when there is no good addable `i`-node.
pub fn f_tilde_partition(p: &Partition, i: i64, e: u32) -> Option<Partition> {
    let color = Color::on(Component::First, Residue::new(i, Modulus::Finite(e)));
    f_tilde(&embed(p), color, &params(e)).map(|b| b.first().clone())
}

/// Levels `0..=n` of the level-one good lattice.
pub fn level_one_levels(n: usize, e: u32) -> Vec<Vec<Partition>> {
    let params = params(e);
    let mut levels = vec![vec![Partition::empty()]];
    for m in 0..n {
        let next: BTreeSet<Partition> = levels[m]
            .iter()
            .flat_map(|p| good_additions(&embed(p), &params))
            .filter(|(c, _)| c.component == Some(Component::First))
            .map(|(_, b)| b.first().clone())
            .collect();
        levels.push(next.into_iter().collect());
    }
    levels
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn good_addition_from_one_box() {
        let one = Partition::new(vec![1]).unwrap();
        assert_eq!(f_tilde_partition(&one, 1, 2), Partition::new(vec![1, 1]).ok());
    }

    #[test]
    fn small_levels_e2() {
        let levels = level_one_levels(3, 2);
        let parts: Vec<Vec<Vec<u32>>> = levels
            .iter()
            .map(|l| l.iter().map(|p| p.parts().to_vec()).collect())
            .collect();
        assert_eq!(parts[2], vec![vec![1, 1]]);
        assert_eq!(parts[3], vec![vec![1, 1, 1], vec![2, 1]]);
    }
}
