//! Direct, definition-level implementations used to cross-check the crystal
//! engine. Nothing here calls into `crate::crystal` or `crate::branching`.
//!
//! A good addable node is the last *conormal* addable node: an addable node
//! at reading position `p` is conormal when every window `[q, p]` holds more
//! addable than removable nodes of its color. Dually, a removable node at `p`
//! is normal when every window `[p, q]` holds more removable than addable
//! nodes, and the good removable node is the first normal one.

use std::collections::BTreeSet;

use crate::crystal::Color;
use crate::diagram::{Bipartition, Component, Node, Partition};
use crate::params::{CrystalParams, Modulus, Regime, Residue};

fn parts_of(b: &Bipartition, c: Component) -> Vec<u32> {
    b.component(c).parts().to_vec()
}

fn is_partition(parts: &[u32]) -> bool {
    parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0)
}

fn trimmed(mut parts: Vec<u32>) -> Vec<u32> {
    while parts.last() == Some(&0) {
        parts.pop();
    }
    parts
}

/// Residue straight from the definition: `col − row` plus the component's
/// charge, reduced in the regime's modulus.
pub fn residue(node: &Node, params: &CrystalParams) -> Residue {
    let charge = match (params.regime(), node.component) {
        (Regime::B, Component::Second) => params.l().finite().expect("regime B has finite l") as i64,
        _ => 0,
    };
    let raw = node.col as i64 - node.row as i64 + charge;
    let modulus = match params.regime() {
        Regime::A => params.l(),
        Regime::B => params.e(),
    };
    let value = match modulus {
        Modulus::Finite(m) => raw.rem_euclid(m as i64),
        Modulus::Infinite => raw,
    };
    Residue::new(value, modulus)
}

pub fn color(node: &Node, params: &CrystalParams) -> Color {
    match params.regime() {
        Regime::A => Color::on(node.component, residue(node, params)),
        Regime::B => Color::joint(residue(node, params)),
    }
}

/// Every cell `(row, col)` at which incrementing (resp. decrementing) a row
/// still gives a partition.
fn edits(b: &Bipartition, delta: i32) -> Vec<Node> {
    let mut out = Vec::new();
    for c in Component::BOTH {
        let parts = parts_of(b, c);
        for r in 0..=parts.len() {
            let mut p = parts.clone();
            if r == p.len() {
                p.push(0);
            }
            let updated = p[r] as i64 + delta as i64;
            if updated < 0 {
                continue;
            }
            let col = if delta > 0 { updated } else { p[r] as i64 };
            if col == 0 {
                continue;
            }
            p[r] = updated as u32;
            let p = trimmed(p);
            if is_partition(&p) {
                out.push(Node {
                    component: c,
                    row: r + 1,
                    col: col as usize,
                });
            }
        }
    }
    out
}

pub fn addable(b: &Bipartition) -> Vec<Node> {
    edits(b, 1)
}

pub fn removable(b: &Bipartition) -> Vec<Node> {
    edits(b, -1)
}

fn apply(b: &Bipartition, node: &Node, delta: i32) -> Bipartition {
    let mut comps = [parts_of(b, Component::First), parts_of(b, Component::Second)];
    let parts = &mut comps[node.component.index()];
    if node.row > parts.len() {
        parts.push(0);
    }
    parts[node.row - 1] = (parts[node.row - 1] as i64 + delta as i64) as u32;
    let [a, c] = comps;
    Bipartition::new(
        Partition::new(trimmed(a)).expect("valid edit"),
        Partition::new(trimmed(c)).expect("valid edit"),
    )
}

pub fn add(b: &Bipartition, node: &Node) -> Bipartition {
    apply(b, node, 1)
}

pub fn remove(b: &Bipartition, node: &Node) -> Bipartition {
    apply(b, node, -1)
}

/// `(node, is_addable)` of one color, in reading order.
fn word(b: &Bipartition, c: Color, params: &CrystalParams) -> Vec<(Node, bool)> {
    let mut w: Vec<(Node, bool)> = addable(b)
        .into_iter()
        .map(|n| (n, true))
        .chain(removable(b).into_iter().map(|n| (n, false)))
        .filter(|(n, _)| color(n, params) == c)
        .collect();
    // content strictly decreases along a rim, so this is rows ascending
    w.sort_by_key(|(n, _)| (n.component, std::cmp::Reverse(n.content())));
    w
}

fn balance(w: &[(Node, bool)]) -> i64 {
    w.iter().map(|&(_, a)| if a { 1 } else { -1 }).sum()
}

pub fn good_addable(b: &Bipartition, c: Color, params: &CrystalParams) -> Option<Node> {
    let w = word(b, c, params);
    (0..w.len())
        .rev()
        .filter(|&p| w[p].1)
        .find(|&p| (0..=p).all(|q| balance(&w[q..=p]) > 0))
        .map(|p| w[p].0)
}

pub fn good_removable(b: &Bipartition, c: Color, params: &CrystalParams) -> Option<Node> {
    let w = word(b, c, params);
    (0..w.len())
        .filter(|&p| !w[p].1)
        .find(|&p| (p..w.len()).all(|q| balance(&w[p..=q]) < 0))
        .map(|p| w[p].0)
}

/// Conormal/normal counts, i.e. `phi` and `eps`.
pub fn phi_eps(b: &Bipartition, c: Color, params: &CrystalParams) -> (usize, usize) {
    let w = word(b, c, params);
    let phi = (0..w.len())
        .filter(|&p| w[p].1 && (0..=p).all(|q| balance(&w[q..=p]) > 0))
        .count();
    let eps = (0..w.len())
        .filter(|&p| !w[p].1 && (p..w.len()).all(|q| balance(&w[p..=q]) < 0))
        .count();
    (phi, eps)
}

/// Good removable nodes of every color, in reading order.
pub fn good_nodes(b: &Bipartition, params: &CrystalParams) -> Vec<Node> {
    let colors: BTreeSet<Color> = removable(b).iter().map(|n| color(n, params)).collect();
    let mut out: Vec<Node> = colors
        .into_iter()
        .filter_map(|c| good_removable(b, c, params))
        .collect();
    out.sort();
    out
}

pub fn f_tilde(b: &Bipartition, c: Color, params: &CrystalParams) -> Option<Bipartition> {
    good_addable(b, c, params).map(|n| add(b, &n))
}

/// Replays a color sequence from the empty bipartition.
pub fn replay(colors: &[Color], params: &CrystalParams) -> Option<Bipartition> {
    colors
        .iter()
        .try_fold(Bipartition::empty(), |acc, &c| f_tilde(&acc, c, params))
}

/// Good nodes of a single partition, residues `col − row mod l`, computed by
/// embedding it as the first component of a regime-A bipartition.
pub fn partition_good_nodes(p: &Partition, l: Modulus) -> Vec<(usize, usize)> {
    let params = CrystalParams::regime_a(l);
    good_nodes(&Bipartition::new(p.clone(), Partition::empty()), &params)
        .into_iter()
        .map(|n| (n.row, n.col))
        .collect()
}

pub fn is_restricted(p: &Partition, l: Modulus) -> bool {
    match l {
        Modulus::Infinite => true,
        Modulus::Finite(l) => {
            let mut parts = p.parts().to_vec();
            parts.push(0);
            parts.windows(2).all(|w| w[0] - w[1] < l)
        }
    }
}

/// Components swapped, built from the raw part lists.
pub fn swap(b: &Bipartition) -> Bipartition {
    Bipartition::new(b.second().clone(), b.first().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    #[test]
    fn edits_match_diagram_geometry() {
        for n in 0..7 {
            for b in Bipartition::all_of(n) {
                assert_eq!(addable(&b), b.addable_nodes(), "{b}");
                assert_eq!(removable(&b), b.removable_nodes(), "{b}");
            }
        }
    }

    #[test]
    fn one_box_level_one() {
        let p = CrystalParams::regime_a(Modulus::Finite(2));
        let c = Color::on(Component::First, Residue::new(1, Modulus::Finite(2)));
        assert_eq!(good_addable(&bp("1|-"), c, &p), Some(Node::new(1, 2, 1)));
        assert_eq!(good_removable(&bp("1,1|-"), c, &p), Some(Node::new(1, 2, 1)));
        assert_eq!(phi_eps(&bp("1|-"), c, &p), (2, 0));
        assert_eq!(phi_eps(&bp("1,1|-"), c, &p), (1, 1));
    }

    #[test]
    fn two_orders_for_one_one() {
        let p = CrystalParams::regime_b(2);
        let r = |v| Color::joint(Residue::new(v, Modulus::Finite(4)));
        assert_eq!(replay(&[r(0), r(2)], &p), Some(bp("1|1")));
        assert_eq!(replay(&[r(2), r(0)], &p), Some(bp("1|1")));
    }
}
