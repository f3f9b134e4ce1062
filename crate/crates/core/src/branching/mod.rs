//! The involution `h` on Kleshchev bipartitions, irreducible `H(D_n)` labels,
//! and the socles of their restrictions to `H(D_{n−1})`.
//!
//! `h` describes the twist of `D̃^λ` by the sign automorphism on `T_0`. In
//! regime A it swaps the two components; in regime B it is computed by
//! shifting every residue of a path to `λ` by `l` and replaying. The same
//! combinatorial `h` is valid over every splitting field of characteristic
//! other than 2, so no field is modelled here.

mod label;

use std::collections::BTreeMap;

use rayon::prelude::*;

pub use label::{IrreducibleLabel, LabelKind, Sign, SocleDecomposition};

use crate::crystal::{canonical_path, good_nodes, replay_path, Lattice};
use crate::diagram::{Bipartition, Node};
use crate::error::{Error, Result};
use crate::params::{CrystalParams, Regime};

/// The involution `h` on Kleshchev bipartitions.
pub fn involution(lambda: &Bipartition, lattice: &Lattice) -> Result<Bipartition> {
    lattice.require(lambda)?;
    let params = lattice.params();
    match params.regime() {
        Regime::A => Ok(lambda.hat()),
        Regime::B => {
            let path = canonical_path(lambda, lattice)?.shifted_by_l(params);
            replay_path(&path, params).ok_or_else(|| Error::ShiftReplayFailed(lambda.clone()))
        }
    }
}

pub fn is_fixed(lambda: &Bipartition, lattice: &Lattice) -> Result<bool> {
    Ok(&involution(lambda, lattice)? == lambda)
}

/// Unsplit label of the class `{μ, h(μ)}`, or `None` when `μ` is fixed.
pub fn class_of(mu: &Bipartition, lattice: &Lattice) -> Result<Option<IrreducibleLabel>> {
    let image = involution(mu, lattice)?;
    if &image == mu {
        return Ok(None);
    }
    Ok(Some(IrreducibleLabel::unsplit(mu.clone().min(image))))
}

/// One unsplit label per two-element orbit of `h`, two split labels per fixed
/// point. The empty bipartition gets a single unsplit label.
pub fn equivalence_classes(level: &[Bipartition], lattice: &Lattice) -> Result<Vec<IrreducibleLabel>> {
    let mut out = Vec::new();
    for lambda in level {
        if lambda.is_empty() {
            out.push(IrreducibleLabel::unsplit(lambda.clone()));
            continue;
        }
        let image = involution(lambda, lattice)?;
        if &image == lambda {
            out.push(IrreducibleLabel::split(lambda.clone(), Sign::Plus));
            out.push(IrreducibleLabel::split(lambda.clone(), Sign::Minus));
        } else if lambda < &image {
            out.push(IrreducibleLabel::unsplit(lambda.clone()));
        }
    }
    out.sort();
    Ok(out)
}

/// All irreducible labels at level `m` of the lattice.
pub fn labels(m: usize, lattice: &Lattice) -> Result<Vec<IrreducibleLabel>> {
    if m > lattice.n() {
        return Err(Error::InvalidArgument(format!(
            "level {m} exceeds lattice depth {}",
            lattice.n()
        )));
    }
    equivalence_classes(lattice.level(m), lattice)
}

/// The label of `D̃^λ↓` (or of `D±^λ` when `λ` is fixed and a sign is given).
pub fn label_for(lambda: &Bipartition, sign: Option<Sign>, lattice: &Lattice) -> Result<IrreducibleLabel> {
    let fixed = lambda.is_empty() || is_fixed(lambda, lattice)?;
    match (fixed && !lambda.is_empty(), sign) {
        (true, Some(s)) => Ok(IrreducibleLabel::split(lambda.clone(), s)),
        (true, None) => Err(Error::InvalidArgument(format!(
            "{lambda} is a fixed point of h; a sign is required"
        ))),
        (false, Some(_)) => Err(Error::InvalidArgument(format!(
            "{lambda} is not a fixed point of h; signs only apply to split labels"
        ))),
        (false, None) => Ok(class_of(lambda, lattice)?.unwrap_or_else(|| IrreducibleLabel::unsplit(lambda.clone()))),
    }
}

/// The good node `A` with `λ∖A = h(λ∖A)`, if there is one.
pub fn almost_symmetric(lambda: &Bipartition, lattice: &Lattice) -> Result<Option<Node>> {
    lattice.require(lambda)?;
    let mut special: Option<Node> = None;
    for (node, _) in good_nodes(lambda, lattice.params()) {
        let removed = lambda.remove_unchecked(&node);
        if involution(&removed, lattice)? == removed {
            if let Some(first) = special {
                return Err(Error::MultipleSpecialNodes {
                    diagram: lambda.clone(),
                    first,
                    second: node,
                });
            }
            special = Some(node);
        }
    }
    Ok(special)
}

fn push_class(out: &mut Vec<IrreducibleLabel>, mu: &Bipartition, lattice: &Lattice) -> Result<()> {
    match class_of(mu, lattice)? {
        Some(label) => out.push(label),
        None => {
            out.push(IrreducibleLabel::split(mu.clone(), Sign::Plus));
            out.push(IrreducibleLabel::split(mu.clone(), Sign::Minus));
        }
    }
    Ok(())
}

/// Socle of the restriction of an irreducible `H(D_n)`-module to `H(D_{n−1})`.
///
/// * Unsplit, almost symmetric with special node `A`:
///   `D+^{λ∖A} ⊕ D−^{λ∖A} ⊕ ⨁_{C good, C≠A} D̃^{λ∖C}↓`.
/// * Unsplit, not almost symmetric: `⨁_{C good} D̃^{λ∖C}↓`.
/// * Split: one `D̃^μ↓` per class with `μ → λ`, the same for both signs.
pub fn socle_restriction(label: &IrreducibleLabel, lattice: &Lattice) -> Result<SocleDecomposition> {
    let lambda = &label.rep;
    if lambda.size() < 2 {
        return Err(Error::InvalidArgument(format!(
            "restriction needs n >= 2, got {}",
            lambda.size()
        )));
    }
    lattice.require(lambda)?;
    let good = good_nodes(lambda, lattice.params());
    let mut summands = Vec::new();
    match label.kind {
        LabelKind::Unsplit => {
            let special = almost_symmetric(lambda, lattice)?;
            for (node, _) in &good {
                let removed = lambda.remove_unchecked(node);
                if Some(*node) == special {
                    summands.push(IrreducibleLabel::split(removed.clone(), Sign::Plus));
                    summands.push(IrreducibleLabel::split(removed, Sign::Minus));
                } else {
                    push_class(&mut summands, &removed, lattice)?;
                }
            }
        }
        LabelKind::Split(_) => {
            for (node, _) in &good {
                push_class(&mut summands, &lambda.remove_unchecked(node), lattice)?;
            }
            summands.sort();
            summands.dedup();
        }
    }
    Ok(SocleDecomposition::new(label.clone(), summands))
}

/// Socle decompositions for every label at level `n`, in label order.
pub fn branching_graph(n: usize, lattice: &Lattice) -> Result<Vec<SocleDecomposition>> {
    labels(n, lattice)?
        .par_iter()
        .map(|label| socle_restriction(label, lattice))
        .collect()
}

/// Everything the involution reveals about a single bipartition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionSummary {
    pub lambda: Bipartition,
    pub image: Bipartition,
    pub fixed: bool,
    /// The special node when `λ` is almost symmetric.
    pub special: Option<Node>,
    pub residue_counts: ResidueCounts,
}

impl InvolutionSummary {
    pub fn compute(lambda: &Bipartition, lattice: &Lattice) -> Result<Self> {
        let image = involution(lambda, lattice)?;
        let special = almost_symmetric(lambda, lattice)?;
        Ok(InvolutionSummary {
            lambda: lambda.clone(),
            fixed: &image == lambda,
            image,
            special,
            residue_counts: residue_counts(lambda, lattice.params()),
        })
    }
}

/// Number of nodes of each residue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueCounts(pub BTreeMap<i64, usize>);

impl ResidueCounts {
    pub fn get(&self, residue: i64) -> usize {
        self.0.get(&residue).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    /// `N_k = N_{k+l}` for every `k` (regime B).
    pub fn is_balanced(&self, params: &CrystalParams) -> bool {
        let (Some(e), Some(l)) = (params.e().finite(), params.l().finite()) else {
            return false;
        };
        (0..e as i64).all(|k| self.get(k) == self.get((k + l as i64) % e as i64))
    }
}

/// Residue counts of `lambda`. With a finite modulus every class appears,
/// including those with count zero.
pub fn residue_counts(lambda: &Bipartition, params: &CrystalParams) -> ResidueCounts {
    let mut counts: BTreeMap<i64, usize> = params
        .residue_classes()
        .unwrap_or_default()
        .into_iter()
        .map(|r| (r.value(), 0))
        .collect();
    for c in crate::diagram::Component::BOTH {
        let p = lambda.component(c);
        for row in 1..=p.len() {
            for col in 1..=p.row(row) as usize {
                let node = Node {
                    component: c,
                    row,
                    col,
                };
                *counts.entry(params.residue(&node).value()).or_default() += 1;
            }
        }
    }
    ResidueCounts(counts)
}
