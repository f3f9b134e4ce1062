use std::fmt;

use super::{e_tilde, f_tilde, signatures, Color, Lattice};
use crate::diagram::Bipartition;
use crate::error::{Error, Result};
use crate::params::{CrystalParams, Residue};

/// A sequence of good additions starting at the empty bipartition.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub colors: Vec<Color>,
}

impl Path {
    pub fn new(colors: Vec<Color>) -> Self {
        Path { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn residues(&self) -> Vec<Residue> {
        self.colors.iter().map(|c| c.residue).collect()
    }

    /// Path with every residue shifted by `l` (regime B).
    pub fn shifted_by_l(&self, params: &CrystalParams) -> Path {
        Path {
            colors: self
                .colors
                .iter()
                .map(|c| Color {
                    residue: params.shift_by_l(c.residue),
                    component: c.component,
                })
                .collect(),
        }
    }

    /// Builds a regime-B path from raw residue values.
    pub fn from_residues(values: &[i64], params: &CrystalParams) -> Path {
        Path {
            colors: values
                .iter()
                .map(|&v| Color::joint(Residue::new(v, params.residue_modulus())))
                .collect(),
        }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, c) in self.colors.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// Peels `lambda` down to the empty bipartition, always applying `ẽ` for the
/// smallest color with a good removable node, and returns the addition order.
pub fn canonical_path(lambda: &Bipartition, lattice: &Lattice) -> Result<Path> {
    lattice.require(lambda)?;
    let params = lattice.params();
    let mut current = lambda.clone();
    let mut peeled = Vec::with_capacity(lambda.size());
    while !current.is_empty() {
        let color = signatures(&current, params)
            .into_values()
            .find(|s| s.eps() > 0)
            .map(|s| s.color)
            .ok_or_else(|| Error::NotKleshchev(lambda.clone()))?;
        current = e_tilde(&current, color, params).expect("eps > 0 implies a good removable node");
        peeled.push(color);
    }
    peeled.reverse();
    Ok(Path::new(peeled))
}

/// Folds `f̃` along the path from the empty bipartition.
pub fn replay_path(path: &Path, params: &CrystalParams) -> Option<Bipartition> {
    path.colors
        .iter()
        .try_fold(Bipartition::empty(), |acc, &c| f_tilde(&acc, c, params))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{classify_regime, Modulus};

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    #[test]
    fn small_paths() {
        let params = classify_regime(5, Modulus::Finite(4)).unwrap();
        let lat = Lattice::build(5, params).unwrap();
        assert!(canonical_path(&Bipartition::empty(), &lat).unwrap().is_empty());
        assert_eq!(canonical_path(&bp("1|-"), &lat).unwrap().residues()[0].value(), 0);
        let p = canonical_path(&bp("-|1"), &lat).unwrap();
        assert_eq!(p.residues().iter().map(|r| r.value()).collect::<Vec<_>>(), vec![2]);
        assert_eq!(replay_path(&Path::default(), &params), Some(Bipartition::empty()));
    }

    #[test]
    fn replay_inverts_canonical_path() {
        let params = classify_regime(6, Modulus::Finite(4)).unwrap();
        let lat = Lattice::build(6, params).unwrap();
        for level in lat.levels() {
            for lambda in level {
                let p = canonical_path(lambda, &lat).unwrap();
                assert_eq!(p.len(), lambda.size());
                assert_eq!(replay_path(&p, &params).as_ref(), Some(lambda));
            }
        }
    }

    #[test]
    fn non_kleshchev_is_rejected() {
        let params = CrystalParams::regime_a(Modulus::Finite(2));
        let lat = Lattice::build(3, params).unwrap();
        assert!(matches!(
            canonical_path(&bp("2|-"), &lat),
            Err(Error::NotKleshchev(_))
        ));
    }
}
