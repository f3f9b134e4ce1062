use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

use super::{good_additions, Color};
use crate::diagram::Bipartition;
use crate::error::{Error, Result};
use crate::params::CrystalParams;

pub const DEFAULT_VERTEX_BUDGET: usize = 5_000_000;

/// An arrow `from --color--> to` of the good lattice.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub from: Bipartition,
    pub color: Color,
    pub to: Bipartition,
}

/// Levels `0..=n` of the Kleshchev good lattice.
///
/// Vertices within a level are sorted in the bipartition total order; edges
/// out of a level are sorted by `(from, color, to)`.
#[derive(Clone, Debug)]
pub struct Lattice {
    params: CrystalParams,
    levels: Vec<Vec<Bipartition>>,
    edges: Vec<Vec<Edge>>,
    index: HashSet<Bipartition>,
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.params == other.params && self.levels == other.levels && self.edges == other.edges
    }
}

impl Eq for Lattice {}

impl Lattice {
    pub fn build(n: usize, params: CrystalParams) -> Result<Lattice> {
        Lattice::build_with_budget(n, params, DEFAULT_VERTEX_BUDGET)
    }

    /// Breadth-first generation by good additions. Fails with
    /// [`Error::ResourceLimit`] once the total vertex count exceeds `budget`.
    pub fn build_with_budget(n: usize, params: CrystalParams, budget: usize) -> Result<Lattice> {
        let mut levels = vec![vec![Bipartition::empty()]];
        let mut edges = Vec::with_capacity(n);
        let mut total = 1;
        for m in 0..n {
            let expanded: Vec<Vec<(Color, Bipartition)>> = levels[m]
                .par_iter()
                .map(|lambda| good_additions(lambda, &params))
                .collect();
            let mut next = BTreeSet::new();
            let mut out = Vec::new();
            for (from, succ) in levels[m].iter().zip(expanded) {
                for (color, to) in succ {
                    next.insert(to.clone());
                    out.push(Edge {
                        from: from.clone(),
                        color,
                        to,
                    });
                }
            }
            total += next.len();
            if total > budget {
                return Err(Error::ResourceLimit {
                    budget,
                    level: m + 1,
                });
            }
            out.sort();
            edges.push(out);
            levels.push(next.into_iter().collect());
        }
        Ok(Lattice::from_parts(params, levels, edges))
    }

    pub(crate) fn from_parts(
        params: CrystalParams,
        levels: Vec<Vec<Bipartition>>,
        edges: Vec<Vec<Edge>>,
    ) -> Lattice {
        let index = levels
            .iter()
            .flatten()
            .cloned()
            .collect();
        Lattice {
            params,
            levels,
            edges,
            index,
        }
    }

    pub fn params(&self) -> &CrystalParams {
        &self.params
    }

    /// Highest level present.
    pub fn n(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, m: usize) -> &[Bipartition] {
        &self.levels[m]
    }

    pub fn levels(&self) -> &[Vec<Bipartition>] {
        &self.levels
    }

    /// Edges from level `m` to level `m + 1`.
    pub fn edges_from_level(&self, m: usize) -> &[Edge] {
        &self.edges[m]
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter().flatten()
    }

    pub fn vertex_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn contains(&self, lambda: &Bipartition) -> bool {
        self.index.contains(lambda)
    }

    /// Membership test that distinguishes "not Kleshchev" from "lattice too
    /// shallow".
    pub fn require(&self, lambda: &Bipartition) -> Result<()> {
        if lambda.size() > self.n() {
            return Err(Error::InvalidArgument(format!(
                "{lambda} has size {} but the lattice only reaches level {}",
                lambda.size(),
                self.n()
            )));
        }
        if !self.contains(lambda) {
            return Err(Error::NotKleshchev(lambda.clone()));
        }
        Ok(())
    }

    /// The sub-lattice of levels `0..=n`.
    pub fn truncated(&self, n: usize) -> Lattice {
        let n = n.min(self.n());
        Lattice::from_parts(
            self.params,
            self.levels[..=n].to_vec(),
            self.edges[..n].to_vec(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{classify_regime, Modulus};

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    #[test]
    fn infinite_l_level_two_is_everything() {
        let lat = Lattice::build(2, classify_regime(2, Modulus::Infinite).unwrap()).unwrap();
        assert_eq!(lat.level(2).len(), 5);
        assert_eq!(lat.level(2), Bipartition::all_of(2).as_slice());
    }

    #[test]
    fn regime_a_l2_level_two() {
        let lat = Lattice::build(2, CrystalParams::regime_a(Modulus::Finite(2))).unwrap();
        let expected = vec![bp("-|1,1"), bp("1|1"), bp("1,1|-")];
        let mut got = lat.level(2).to_vec();
        got.sort();
        let mut exp = expected;
        exp.sort();
        assert_eq!(got, exp);
    }

    #[test]
    fn example_three_five_members() {
        let lat = Lattice::build(5, classify_regime(5, Modulus::Finite(4)).unwrap()).unwrap();
        assert!(lat.contains(&bp("1|2,2")));
        assert!(lat.contains(&bp("2|1,1,1")));
    }

    #[test]
    fn structure_invariants() {
        let params = classify_regime(6, Modulus::Finite(4)).unwrap();
        let lat = Lattice::build(6, params).unwrap();
        assert_eq!(lat.level(0), &[Bipartition::empty()]);
        for m in 1..=6 {
            for lambda in lat.level(m) {
                assert!(lat.edges_from_level(m - 1).iter().any(|e| &e.to == lambda));
            }
            for e in lat.edges_from_level(m - 1) {
                let added = lat_diff(&e.from, &e.to);
                assert_eq!(params.residue(&added), e.color.residue);
            }
        }
    }

    fn lat_diff(from: &Bipartition, to: &Bipartition) -> crate::diagram::Node {
        to.removable_nodes()
            .into_iter()
            .find(|n| &to.remove_node(n).unwrap() == from)
            .unwrap()
    }

    #[test]
    fn budget_is_enforced() {
        let err = Lattice::build_with_budget(6, CrystalParams::regime_a(Modulus::Infinite), 20).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit { budget: 20, .. }));
    }

    #[test]
    fn deterministic_across_thread_counts() {
        let params = classify_regime(7, Modulus::Finite(6)).unwrap();
        let reference = Lattice::build(7, params).unwrap();
        for threads in [1, 3] {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
            let lat = pool.install(|| Lattice::build(7, params).unwrap());
            assert_eq!(lat, reference);
        }
    }

    #[test]
    fn truncation_is_a_prefix() {
        let params = classify_regime(5, Modulus::Finite(4)).unwrap();
        let lat = Lattice::build(5, params).unwrap();
        assert_eq!(lat.truncated(3), Lattice::build(3, params).unwrap());
    }
}
