//! Good nodes and the Kashiwara operators on bipartitions.
//!
//! For a color `i`, the addable and removable `i`-nodes are listed in reading
//! order (component 1 before component 2, rows ascending). Adjacent pairs
//! `(removable, addable)` are cancelled until none remain, leaving a reduced
//! word `A^phi R^eps`. The good removable node is the leftmost surviving `R`;
//! the good addable node is the rightmost surviving `A`.
//!
//! In regime B both components share one signature. In regime A the
//! components decouple, so a color also names the component it acts on.

mod lattice;
pub mod level_one;
mod path;

use std::collections::BTreeMap;
use std::fmt;

pub use lattice::{Edge, Lattice, DEFAULT_VERTEX_BUDGET};
pub use path::{canonical_path, replay_path, Path};

use crate::diagram::{Bipartition, Component, Node};
use crate::params::{CrystalParams, Regime, Residue};

/// Index of a Kashiwara operator.
///
/// `component` is `None` in regime B (one joint crystal) and names the acting
/// component in regime A. Colors sort by residue first, so the smallest
/// residue representative comes first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color {
    pub residue: Residue,
    pub component: Option<Component>,
}

impl Color {
    pub fn joint(residue: Residue) -> Self {
        Color {
            residue,
            component: None,
        }
    }

    pub fn on(component: Component, residue: Residue) -> Self {
        Color {
            residue,
            component: Some(component),
        }
    }

    /// The color of the operator that adds or removes `node`.
    pub fn of_node(node: &Node, params: &CrystalParams) -> Self {
        let residue = params.residue(node);
        match params.regime() {
            Regime::A => Color::on(node.component, residue),
            Regime::B => Color::joint(residue),
        }
    }

    fn covers(&self, node: &Node, params: &CrystalParams) -> bool {
        self.component.is_none_or(|c| c == node.component) && params.residue(node) == self.residue
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mark {
    Addable,
    Removable,
}

/// The `i`-signature of a bipartition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    pub color: Color,
    pub entries: Vec<(Node, Mark)>,
    pub reduced: Vec<(Node, Mark)>,
}

impl Signature {
    fn from_entries(color: Color, entries: Vec<(Node, Mark)>) -> Self {
        let mut reduced: Vec<(Node, Mark)> = Vec::with_capacity(entries.len());
        for &(node, mark) in &entries {
            if mark == Mark::Addable && matches!(reduced.last(), Some((_, Mark::Removable))) {
                reduced.pop();
            } else {
                reduced.push((node, mark));
            }
        }
        debug_assert!(
            reduced.windows(2).all(|w| !(w[0].1 == Mark::Removable && w[1].1 == Mark::Addable)),
            "reduced signature has a removable node before an addable one"
        );
        Signature {
            color,
            entries,
            reduced,
        }
    }

    pub fn residue(&self) -> Residue {
        self.color.residue
    }

    /// Number of surviving removable nodes.
    pub fn eps(&self) -> usize {
        self.reduced.iter().filter(|(_, m)| *m == Mark::Removable).count()
    }

    /// Number of surviving addable nodes.
    pub fn phi(&self) -> usize {
        self.reduced.iter().filter(|(_, m)| *m == Mark::Addable).count()
    }

    pub fn good_removable(&self) -> Option<Node> {
        self.reduced
            .iter()
            .find(|(_, m)| *m == Mark::Removable)
            .map(|(n, _)| *n)
    }

    pub fn good_addable(&self) -> Option<Node> {
        self.reduced
            .iter()
            .rev()
            .find(|(_, m)| *m == Mark::Addable)
            .map(|(n, _)| *n)
    }
}

fn marked_nodes(lambda: &Bipartition) -> Vec<(Node, Mark)> {
    let mut nodes: Vec<(Node, Mark)> = lambda
        .addable_nodes()
        .into_iter()
        .map(|n| (n, Mark::Addable))
        .chain(lambda.removable_nodes().into_iter().map(|n| (n, Mark::Removable)))
        .collect();
    nodes.sort_by_key(|(n, _)| (n.component, n.row, n.col));
    nodes
}

/// Signature of `lambda` for one color.
pub fn signature(lambda: &Bipartition, color: Color, params: &CrystalParams) -> Signature {
    let entries = marked_nodes(lambda)
        .into_iter()
        .filter(|(n, _)| color.covers(n, params))
        .collect();
    Signature::from_entries(color, entries)
}

/// Joint signature over both components (regime B).
pub fn i_signature(lambda: &Bipartition, i: Residue, params: &CrystalParams) -> Signature {
    signature(lambda, Color::joint(i), params)
}

/// Signatures of every color that has at least one addable or removable node.
pub fn signatures(lambda: &Bipartition, params: &CrystalParams) -> BTreeMap<Color, Signature> {
    let mut grouped: BTreeMap<Color, Vec<(Node, Mark)>> = BTreeMap::new();
    for (node, mark) in marked_nodes(lambda) {
        grouped
            .entry(Color::of_node(&node, params))
            .or_default()
            .push((node, mark));
    }
    grouped
        .into_iter()
        .map(|(c, entries)| (c, Signature::from_entries(c, entries)))
        .collect()
}

pub fn good_removable(lambda: &Bipartition, color: Color, params: &CrystalParams) -> Option<Node> {
    signature(lambda, color, params).good_removable()
}

pub fn good_addable(lambda: &Bipartition, color: Color, params: &CrystalParams) -> Option<Node> {
    signature(lambda, color, params).good_addable()
}

/// Kashiwara lowering operator `ẽ_i`: remove the good removable node.
pub fn e_tilde(lambda: &Bipartition, color: Color, params: &CrystalParams) -> Option<Bipartition> {
    good_removable(lambda, color, params).map(|n| lambda.remove_unchecked(&n))
}

/// Kashiwara raising operator `f̃_i`: add the good addable node.
pub fn f_tilde(lambda: &Bipartition, color: Color, params: &CrystalParams) -> Option<Bipartition> {
    good_addable(lambda, color, params).map(|n| lambda.add_unchecked(&n))
}

/// All good removable nodes with their residues, in reading order.
///
/// At most one node per color: per residue in regime B, per
/// `(component, residue)` in regime A.
pub fn good_nodes(lambda: &Bipartition, params: &CrystalParams) -> Vec<(Node, Residue)> {
    let mut out: Vec<(Node, Residue)> = signatures(lambda, params)
        .values()
        .filter_map(|s| s.good_removable().map(|n| (n, s.residue())))
        .collect();
    out.sort();
    out
}

/// All `(color, f̃(λ))` pairs that are defined, in color order.
pub fn good_additions(lambda: &Bipartition, params: &CrystalParams) -> Vec<(Color, Bipartition)> {
    signatures(lambda, params)
        .values()
        .filter_map(|s| s.good_addable().map(|n| (s.color, lambda.add_unchecked(&n))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{classify_regime, Modulus};

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    fn b4() -> CrystalParams {
        classify_regime(5, Modulus::Finite(4)).unwrap()
    }

    #[test]
    fn partition_level_signatures() {
        // level-1 crystal: component 1 only, residues mod 2
        let p = CrystalParams::regime_a(Modulus::Finite(2));
        let one = Color::on(Component::First, Residue::new(1, Modulus::Finite(2)));

        let s = signature(&bp("1|-"), one, &p);
        assert_eq!(
            s.entries,
            vec![(Node::new(1, 1, 2), Mark::Addable), (Node::new(1, 2, 1), Mark::Addable)]
        );
        assert_eq!(s.reduced, s.entries);
        assert_eq!((s.phi(), s.eps()), (2, 0));
        assert_eq!(s.good_addable(), Some(Node::new(1, 2, 1)));

        let s = signature(&bp("1,1|-"), one, &p);
        assert_eq!(
            s.entries,
            vec![(Node::new(1, 1, 2), Mark::Addable), (Node::new(1, 2, 1), Mark::Removable)]
        );
        assert_eq!(s.reduced, s.entries);
        assert_eq!((s.phi(), s.eps()), (1, 1));
        assert_eq!(s.good_removable(), Some(Node::new(1, 2, 1)));
    }

    #[test]
    fn cancellation_removes_removable_then_addable() {
        let color = Color::joint(Residue::new(0, Modulus::Finite(4)));
        let n = |r| Node::new(1, r, 1);
        let s = Signature::from_entries(
            color,
            vec![
                (n(1), Mark::Removable),
                (n(2), Mark::Removable),
                (n(3), Mark::Addable),
                (n(4), Mark::Addable),
                (n(5), Mark::Addable),
                (n(6), Mark::Removable),
            ],
        );
        assert_eq!(s.reduced, vec![(n(5), Mark::Addable), (n(6), Mark::Removable)]);
        assert_eq!(s.good_addable(), Some(n(5)));
        assert_eq!(s.good_removable(), Some(n(6)));
    }

    #[test]
    fn empty_bipartition() {
        let p = b4();
        for i in 0..4 {
            let r = Residue::new(i, Modulus::Finite(4));
            let s = i_signature(&Bipartition::empty(), r, &p);
            let expected: Vec<_> = [Node::new(1, 1, 1), Node::new(2, 1, 1)]
                .into_iter()
                .filter(|n| p.residue(n) == r)
                .map(|n| (n, Mark::Addable))
                .collect();
            assert_eq!(s.entries, expected);
            assert_eq!(e_tilde(&Bipartition::empty(), Color::joint(r), &p), None);
        }
    }

    #[test]
    fn example_three_five_good_node() {
        let p = b4();
        let lambda = bp("1|2,2");
        let a = Node::new(2, 2, 2);
        assert_eq!(p.residue(&a).value(), 2);
        assert_eq!(good_removable(&lambda, Color::of_node(&a, &p), &p), Some(a));
        assert!(good_nodes(&lambda, &p).iter().any(|(n, _)| *n == a));
    }

    #[test]
    fn infinite_l_good_nodes_are_removable_nodes() {
        let p = classify_regime(6, Modulus::Infinite).unwrap();
        for n in 0..7 {
            for lambda in Bipartition::all_of(n) {
                let good: Vec<Node> = good_nodes(&lambda, &p).into_iter().map(|(n, _)| n).collect();
                assert_eq!(good, lambda.removable_nodes(), "{lambda}");
            }
        }
        assert_eq!(good_nodes(&bp("2,1|1,1"), &p).len(), 3);
    }
}
