//! Brute-force verifiers for the crystal and branching engines.
//!
//! Each suite returns a [`VerificationReport`]. Signatures, good nodes,
//! replays and (for the uniqueness suite) the involution itself are
//! recomputed here from their definitions in [`naive`], so the suites do not
//! trust the code paths they check.

mod dimension;
pub mod naive;
mod report;

use std::collections::{BTreeSet, HashMap};
use std::time::Instant;

use rayon::prelude::*;

pub use dimension::bipartition_dimension;
pub use report::{Failure, Status, VerificationReport};

use crate::branching::{self, LabelKind};
use crate::crystal::{self, level_one, Color, Lattice, Path};
use crate::diagram::{Bipartition, Component, Node, Partition};
use crate::error::{Error, Result};
use crate::params::{is_semisimple_d, CrystalParams, Modulus, Regime};

pub const DEFAULT_PATH_CAP: usize = 100_000;

/// Paths to a vertex, possibly cut off at a cap.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathSet {
    pub paths: Vec<Path>,
    pub truncated: bool,
}

struct PathEnumerator<'a> {
    params: &'a CrystalParams,
    preds: HashMap<Bipartition, Vec<(Color, Bipartition)>>,
}

impl<'a> PathEnumerator<'a> {
    fn new(params: &'a CrystalParams) -> Self {
        PathEnumerator {
            params,
            preds: HashMap::new(),
        }
    }

    // μ → λ by a good addition, found by trying every removable node of λ.
    fn predecessors(&mut self, lambda: &Bipartition) -> Vec<(Color, Bipartition)> {
        if let Some(p) = self.preds.get(lambda) {
            return p.clone();
        }
        let params = self.params;
        let out: Vec<(Color, Bipartition)> = naive::removable(lambda)
            .into_iter()
            .filter_map(|r| {
                let mu = naive::remove(lambda, &r);
                let c = naive::color(&r, params);
                (naive::good_addable(&mu, c, params) == Some(r)).then_some((c, mu))
            })
            .collect();
        self.preds.insert(lambda.clone(), out.clone());
        out
    }

    fn walk(&mut self, lambda: &Bipartition, suffix: &mut Vec<Color>, out: &mut PathSet, cap: usize) {
        if out.truncated {
            return;
        }
        if lambda.is_empty() {
            if out.paths.len() >= cap {
                out.truncated = true;
                return;
            }
            out.paths.push(Path::new(suffix.iter().rev().copied().collect()));
            return;
        }
        for (c, mu) in self.predecessors(lambda) {
            suffix.push(c);
            self.walk(&mu, suffix, out, cap);
            suffix.pop();
        }
    }
}

/// Every color sequence realizable by good additions from `(∅,∅)` to
/// `lambda`, up to `cap` paths. Empty when `lambda` is not in the lattice.
pub fn all_paths(lambda: &Bipartition, params: &CrystalParams, lattice: &Lattice, cap: usize) -> PathSet {
    let mut out = PathSet::default();
    if !lattice.contains(lambda) {
        return out;
    }
    PathEnumerator::new(params).walk(lambda, &mut Vec::new(), &mut out, cap);
    out.paths.sort();
    out
}

/// `h` recomputed from the definitions: component swap in regime A, and in
/// regime B the replay of one shifted path found by backward search.
pub fn naive_involution(lambda: &Bipartition, params: &CrystalParams) -> Option<Bipartition> {
    match params.regime() {
        Regime::A => Some(naive::swap(lambda)),
        Regime::B => {
            let mut found = PathSet::default();
            PathEnumerator::new(params).walk(lambda, &mut Vec::new(), &mut found, 1);
            let path = found.paths.first()?;
            naive::replay(&path.shifted_by_l(params).colors, params)
        }
    }
}

fn finish(mut report: VerificationReport, start: Instant) -> VerificationReport {
    report.elapsed = start.elapsed();
    report
}

fn vertices(lattice: &Lattice, from: usize) -> Vec<&Bipartition> {
    lattice.levels()[from.min(lattice.n() + 1)..].iter().flatten().collect()
}

/// Colors worth probing at `lambda`: every residue class when finite, else
/// the colors of its addable and removable nodes.
fn probe_colors(lambda: &Bipartition, params: &CrystalParams) -> Vec<Color> {
    let mut out: BTreeSet<Color> = naive::addable(lambda)
        .iter()
        .chain(naive::removable(lambda).iter())
        .map(|n| naive::color(n, params))
        .collect();
    if let Some(classes) = params.residue_classes() {
        for r in classes {
            match params.regime() {
                Regime::B => {
                    out.insert(Color::joint(r));
                }
                Regime::A => {
                    for c in Component::BOTH {
                        out.insert(Color::on(c, r));
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Every shifted path to `λ` replays to the same bipartition, equal to the
/// engine's `h(λ)`; `h` is an involution on each level.
pub fn verify_h_path_independence(n: usize, params: &CrystalParams) -> Result<VerificationReport> {
    verify_h_path_independence_capped(n, params, DEFAULT_PATH_CAP)
}

pub fn verify_h_path_independence_capped(n: usize, params: &CrystalParams, cap: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let lattice = Lattice::build(n, *params)?;
    let mut report = VerificationReport::new("path-independence", *params, 0, n);
    let parts: Vec<Result<VerificationReport>> = vertices(&lattice, 0)
        .par_iter()
        .map(|lambda| {
            let mut r = VerificationReport::new("", *params, 0, n);
            let h = branching::involution(lambda, &lattice)?;
            r.check(
                lattice.contains(&h) && branching::involution(&h, &lattice)? == **lambda,
                format_args!("h(h({lambda}))"),
                lambda,
                &h,
            );
            match params.regime() {
                Regime::A => {
                    let swapped = naive::swap(lambda);
                    r.check(h == swapped, format_args!("h({lambda})"), &swapped, &h);
                }
                Regime::B => {
                    let set = all_paths(lambda, params, &lattice, cap);
                    r.truncated = set.truncated;
                    r.check(!set.paths.is_empty(), format_args!("paths to {lambda}"), "at least one", "none");
                    for p in &set.paths {
                        let got = naive::replay(&p.shifted_by_l(params).colors, params);
                        r.check(
                            got.as_ref() == Some(&h),
                            format_args!("shift {p} -> {lambda}"),
                            &h,
                            got.map_or("undefined".to_string(), |b| b.to_string()),
                        );
                    }
                }
            }
            Ok(r)
        })
        .collect();
    for part in parts {
        report.merge(part?);
    }
    Ok(finish(report, start))
}

/// Cheaper companion of [`verify_h_path_independence`]: one canonical path
/// per vertex, shifted and replayed naively, must reach the engine's `h(λ)`,
/// and `h(h(λ)) = λ`.
pub fn verify_h_involution(n: usize, params: &CrystalParams) -> Result<VerificationReport> {
    let start = Instant::now();
    let lattice = Lattice::build(n, *params)?;
    let mut report = VerificationReport::new("involution", *params, 0, n);
    let parts: Vec<Result<VerificationReport>> = vertices(&lattice, 0)
        .par_iter()
        .map(|lambda| {
            let mut r = VerificationReport::new("", *params, 0, n);
            let h = branching::involution(lambda, &lattice)?;
            let hh = branching::involution(&h, &lattice)?;
            r.check(hh == **lambda, format_args!("h(h({lambda}))"), lambda, &hh);
            let path = crystal::canonical_path(lambda, &lattice)?;
            let replayed = naive::replay(&path.colors, params);
            r.check(replayed.as_ref() == Some(*lambda), format_args!("replay {path}"), lambda, format_args!("{replayed:?}"));
            let expected = match params.regime() {
                Regime::A => Some(naive::swap(lambda)),
                Regime::B => naive::replay(&path.shifted_by_l(params).colors, params),
            };
            r.check(expected.as_ref() == Some(&h), format_args!("h({lambda})"), format_args!("{expected:?}"), &h);
            Ok(r)
        })
        .collect();
    for part in parts {
        report.merge(part?);
    }
    Ok(finish(report, start))
}

fn restriction_dim(kind: LabelKind, rep: &Bipartition) -> Result<u128> {
    let d = bipartition_dimension(rep)?;
    Ok(match kind {
        LabelKind::Unsplit => d,
        LabelKind::Split(_) => d / 2,
    })
}

/// In the semisimple case the socle is the whole restriction, so summand
/// dimensions must add up to the dimension of the restricted module.
pub fn verify_semisimple_branching(n: usize, params: &CrystalParams) -> Result<VerificationReport> {
    let start = Instant::now();
    if !is_semisimple_d(n, params.e())? {
        return Err(Error::NotSemisimple {
            n,
            e: params.e().to_string(),
        });
    }
    let lattice = Lattice::build(n, *params)?;
    let mut report = VerificationReport::new("semisimple-branching", *params, 2, n);
    for m in 2..=n {
        for soc in branching::branching_graph(m, &lattice)? {
            let whole = restriction_dim(soc.source.kind, &soc.source.rep)?;
            let mut sum = 0u128;
            for s in &soc.summands {
                sum += restriction_dim(s.kind, &s.rep)?;
            }
            report.check(whole == sum, format_args!("dim {}↓", soc.source), whole, sum);
        }
    }
    Ok(finish(report, start))
}

/// At most one good node `A` has `λ∖A = h(λ∖A)`; then `λ ≠ h(λ)` and
/// `λ∖B ≠ h(λ∖C)` for `C ≠ A`. Without such a node and with `λ ≠ h(λ)`,
/// `λ∖B ≠ h(λ∖C)` for all good `B, C`. `h` is recomputed naively.
pub fn verify_uniqueness_and_distinctness(n: usize, params: &CrystalParams) -> Result<VerificationReport> {
    let start = Instant::now();
    let lattice = Lattice::build(n, *params)?;
    let mut report = VerificationReport::new("uniqueness", *params, 1, n);
    let parts: Vec<Result<VerificationReport>> = vertices(&lattice, 1)
        .par_iter()
        .map(|lambda| {
            let mut r = VerificationReport::new("", *params, 1, n);
            let h = |b: &Bipartition| naive_involution(b, params);
            let good = naive::good_nodes(lambda, params);
            let removed: Vec<(Node, Bipartition)> =
                good.iter().map(|a| (*a, naive::remove(lambda, a))).collect();
            let specials: Vec<_> = removed
                .iter()
                .filter(|(_, mu)| h(mu).as_ref() == Some(mu))
                .map(|(a, _)| *a)
                .collect();
            r.check(specials.len() <= 1, format_args!("special nodes of {lambda}"), "<= 1", specials.len());

            let engine = branching::almost_symmetric(lambda, &lattice);
            let engine_str = match &engine {
                Ok(Some(a)) => a.to_string(),
                Ok(None) => "none".to_string(),
                Err(e) => e.to_string(),
            };
            let oracle_str = specials.first().map_or("none".to_string(), |a| a.to_string());
            r.check(engine_str == oracle_str, format_args!("almost_symmetric({lambda})"), &oracle_str, &engine_str);

            let h_lambda = h(lambda);
            if let Some(a) = specials.first() {
                r.check(h_lambda.as_ref() != Some(*lambda), format_args!("h({lambda}) with special {a}"), "not fixed", "fixed");
                // in regime A the pairs range over all removable nodes
                let pool: Vec<Node> = match params.regime() {
                    Regime::A => naive::removable(lambda),
                    Regime::B => good.clone(),
                };
                for b in &pool {
                    for c in pool.iter().filter(|c| *c != a) {
                        let lb = naive::remove(lambda, b);
                        let hc = h(&naive::remove(lambda, c));
                        r.check(hc.as_ref() != Some(&lb), format_args!("{lambda} \\ {b} vs h({lambda} \\ {c})"), "different", "equal");
                    }
                }
            } else if h_lambda.as_ref() != Some(*lambda) {
                for (b, lb) in &removed {
                    for (c, lc) in &removed {
                        let hc = h(lc);
                        r.check(hc.as_ref() != Some(lb), format_args!("{lambda} \\ {b} vs h({lambda} \\ {c})"), "different", "equal");
                    }
                }
            }
            Ok(r)
        })
        .collect();
    for part in parts {
        report.merge(part?);
    }
    Ok(finish(report, start))
}

/// Regime A with a given `l`: lattice levels are exactly the pairs of
/// `l`-restricted partitions, and bipartition good nodes are the union of the
/// componentwise good nodes.
pub fn verify_regime_a_decoupling(n: usize, l: Modulus) -> Result<VerificationReport> {
    let start = Instant::now();
    let params = CrystalParams::regime_a(l);
    let lattice = Lattice::build(n, params)?;
    let mut report = VerificationReport::new("decoupling", params, 0, n);
    for m in 0..=n {
        let expected: Vec<Bipartition> = Bipartition::all_of(m)
            .into_iter()
            .filter(|b| naive::is_restricted(b.first(), l) && naive::is_restricted(b.second(), l))
            .collect();
        report.check(
            lattice.level(m) == expected.as_slice(),
            format_args!("level {m}"),
            format_args!("{} vertices", expected.len()),
            format_args!("{} vertices", lattice.level(m).len()),
        );
        for lambda in lattice.level(m) {
            let mut union: Vec<Node> = Vec::new();
            for c in Component::BOTH {
                for (row, col) in naive::partition_good_nodes(lambda.component(c), l) {
                    union.push(Node { component: c, row, col });
                }
            }
            union.sort();
            let engine: Vec<_> = crystal::good_nodes(lambda, &params).into_iter().map(|(n, _)| n).collect();
            report.check(engine == union, format_args!("good nodes of {lambda}"), format_args!("{union:?}"), format_args!("{engine:?}"));
        }
    }
    Ok(finish(report, start))
}

/// `ẽ∘f̃ = id`, `f̃∘ẽ = id`, `eps`/`phi` bookkeeping, and agreement of the
/// engine's signatures with the naive window-count definition.
pub fn verify_crystal_axioms(n: usize, params: &CrystalParams) -> Result<VerificationReport> {
    let start = Instant::now();
    let lattice = Lattice::build(n, *params)?;
    let mut report = VerificationReport::new("crystal-axioms", *params, 0, n);
    let parts: Vec<VerificationReport> = vertices(&lattice, 0)
        .par_iter()
        .map(|lambda| {
            let mut r = VerificationReport::new("", *params, 0, n);
            let engine_good: Vec<_> = crystal::good_nodes(lambda, params).into_iter().map(|(n, _)| n).collect();
            let naive_good = naive::good_nodes(lambda, params);
            r.check(engine_good == naive_good, format_args!("good nodes of {lambda}"), format_args!("{naive_good:?}"), format_args!("{engine_good:?}"));
            for color in probe_colors(lambda, params) {
                let sig = crystal::signature(lambda, color, params);
                let (phi, eps) = naive::phi_eps(lambda, color, params);
                r.check((sig.phi(), sig.eps()) == (phi, eps), format_args!("phi/eps({lambda}, {color})"), format_args!("{phi}/{eps}"), format_args!("{}/{}", sig.phi(), sig.eps()));
                if let Some(up) = crystal::f_tilde(lambda, color, params) {
                    let back = crystal::e_tilde(&up, color, params);
                    r.check(back.as_ref() == Some(*lambda), format_args!("e~f~({lambda}, {color})"), lambda, format_args!("{back:?}"));
                    let s = crystal::signature(&up, color, params);
                    r.check(s.eps() == sig.eps() + 1 && s.phi() + 1 == sig.phi(), format_args!("eps/phi after f~({lambda}, {color})"), format_args!("{}/{}", sig.eps() + 1, sig.phi() - 1), format_args!("{}/{}", s.eps(), s.phi()));
                } else {
                    r.check(sig.phi() == 0, format_args!("f~ undefined at {lambda}, {color}"), 0, sig.phi());
                }
                if let Some(down) = crystal::e_tilde(lambda, color, params) {
                    let back = crystal::f_tilde(&down, color, params);
                    r.check(back.as_ref() == Some(*lambda), format_args!("f~e~({lambda}, {color})"), lambda, format_args!("{back:?}"));
                } else {
                    r.check(sig.eps() == 0, format_args!("e~ undefined at {lambda}, {color}"), 0, sig.eps());
                }
            }
            r
        })
        .collect();
    for part in parts {
        report.merge(part);
    }
    Ok(finish(report, start))
}

/// The level-one engine generates exactly the `e`-restricted partitions.
pub fn verify_level_one(n: usize, e: u32) -> Result<VerificationReport> {
    let start = Instant::now();
    let params = CrystalParams::regime_a(Modulus::Finite(e));
    let mut report = VerificationReport::new("level-one", params, 0, n);
    let levels = level_one::level_one_levels(n, e);
    for (m, level) in levels.iter().enumerate() {
        let expected: Vec<Partition> = Partition::all_of(m)
            .into_iter()
            .filter(|p| naive::is_restricted(p, Modulus::Finite(e)))
            .collect();
        report.check(
            level == &expected,
            format_args!("level {m}"),
            format_args!("{} restricted partitions", expected.len()),
            format_args!("{} generated", level.len()),
        );
    }
    Ok(finish(report, start))
}

/// Fixed points of `h` sit at even levels, and every path to them has
/// `#{i_j ≡ k} = #{i_j ≡ k + l}`.
pub fn verify_fixed_points(n: usize, params: &CrystalParams) -> Result<VerificationReport> {
    let start = Instant::now();
    let lattice = Lattice::build(n, *params)?;
    let mut report = VerificationReport::new("fixed-points", *params, 0, n);
    for lambda in vertices(&lattice, 1) {
        if !branching::is_fixed(lambda, &lattice)? {
            continue;
        }
        report.check(lambda.size() % 2 == 0, format_args!("parity of fixed {lambda}"), "even", lambda.size());
        if params.regime() == Regime::B {
            let path = crystal::canonical_path(lambda, &lattice)?;
            let mut counts: HashMap<Color, usize> = HashMap::new();
            for c in &path.colors {
                *counts.entry(*c).or_default() += 1;
            }
            let balanced = params.residue_classes().unwrap_or_default().into_iter().all(|r| {
                let a = counts.get(&Color::joint(r)).copied().unwrap_or(0);
                let b = counts.get(&Color::joint(params.shift_by_l(r))).copied().unwrap_or(0);
                a == b
            });
            report.check(balanced, format_args!("path residues of fixed {lambda}"), "balanced", path);
            let rc = branching::residue_counts(lambda, params);
            report.check(rc.is_balanced(params), format_args!("residue counts of fixed {lambda}"), "balanced", format_args!("{:?}", rc.0));
        }
    }
    Ok(finish(report, start))
}

/// Every socle at levels `2..=n` is duplicate-free, and `D+` and `D−` have
/// the same socle.
pub fn verify_multiplicity_free(n: usize, params: &CrystalParams) -> Result<VerificationReport> {
    let start = Instant::now();
    let lattice = Lattice::build(n, *params)?;
    let mut report = VerificationReport::new("multiplicity-free", *params, 2, n);
    for m in 2..=n {
        let graph = branching::branching_graph(m, &lattice)?;
        for soc in &graph {
            report.check(soc.is_multiplicity_free(), format_args!("{}", soc.source), "multiplicity free", soc);
        }
        for pair in graph.windows(2) {
            if pair[0].source.rep == pair[1].source.rep && pair[0].source.is_split() {
                report.check(pair[0].summands == pair[1].summands, format_args!("D±({})", pair[0].source.rep), &pair[0], &pair[1]);
            }
        }
    }
    Ok(finish(report, start))
}

/// For levels `m <= l` in regime B the algebra `H(B_m)` is semisimple and
/// the regime-A description applies: every bipartition is Kleshchev and `h`
/// is the component swap.
pub fn verify_small_levels(n: usize, params: &CrystalParams) -> Result<VerificationReport> {
    let start = Instant::now();
    let lattice = Lattice::build(n, *params)?;
    let mut report = VerificationReport::new("small-levels", *params, 0, n);
    let Some(l) = params.l().finite().filter(|_| params.regime() == Regime::B) else {
        return Ok(finish(report, start));
    };
    for m in 0..=n.min(l as usize) {
        let all = Bipartition::all_of(m);
        report.check(lattice.level(m) == all.as_slice(), format_args!("level {m}"), all.len(), lattice.level(m).len());
        for lambda in lattice.level(m) {
            let h = branching::involution(lambda, &lattice)?;
            report.check(h == lambda.hat(), format_args!("h({lambda})"), lambda.hat(), &h);
        }
    }
    Ok(finish(report, start))
}

/// Suite names understood by [`run_suite`].
pub const SUITES: &[&str] = &[
    "path-independence",
    "involution",
    "semisimple",
    "uniqueness",
    "decoupling",
    "crystal-axioms",
    "level-one",
    "fixed-points",
    "multiplicity-free",
    "small-levels",
];

/// Runs a suite by name. `decoupling` uses regime A with `l = e`;
/// `level-one` needs a finite `e`.
pub fn run_suite(name: &str, n: usize, params: &CrystalParams) -> Result<VerificationReport> {
    match name {
        "path-independence" => verify_h_path_independence(n, params),
        "involution" => verify_h_involution(n, params),
        "semisimple" => verify_semisimple_branching(n, params),
        "uniqueness" => verify_uniqueness_and_distinctness(n, params),
        "decoupling" => verify_regime_a_decoupling(n, params.e()),
        "crystal-axioms" => verify_crystal_axioms(n, params),
        "level-one" => match params.e() {
            Modulus::Finite(e) => verify_level_one(n, e),
            Modulus::Infinite => Err(Error::InvalidArgument("level-one needs a finite e".into())),
        },
        "fixed-points" => verify_fixed_points(n, params),
        "multiplicity-free" => verify_multiplicity_free(n, params),
        "small-levels" => verify_small_levels(n, params),
        other => Err(Error::InvalidArgument(format!(
            "unknown suite {other:?}; expected one of {}",
            SUITES.join(", ")
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{classify_regime, Residue};

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    #[test]
    fn all_paths_examples() {
        let params = classify_regime(4, Modulus::Finite(4)).unwrap();
        let lat = Lattice::build(4, params).unwrap();
        let set = all_paths(&Bipartition::empty(), &params, &lat, 10);
        assert_eq!(set.paths, vec![Path::default()]);

        let set = all_paths(&bp("1|1"), &params, &lat, 10);
        let residues: Vec<Vec<i64>> = set
            .paths
            .iter()
            .map(|p| p.residues().iter().map(|r| r.value()).collect())
            .collect();
        assert_eq!(residues, vec![vec![0, 2], vec![2, 0]]);
        assert!(!set.truncated);

        let a2 = CrystalParams::regime_a(Modulus::Finite(2));
        let lat = Lattice::build(2, a2).unwrap();
        assert_eq!(all_paths(&bp("1,1|-"), &a2, &lat, 10).paths.len(), 1);
    }

    #[test]
    fn cap_marks_truncation() {
        let params = classify_regime(6, Modulus::Infinite).unwrap();
        let lat = Lattice::build(4, params).unwrap();
        let set = all_paths(&bp("1,1|1,1"), &params, &lat, 3);
        assert_eq!(set.paths.len(), 3);
        assert!(set.truncated);
    }

    #[test]
    fn replay_zero_zero_matches_naive() {
        let params = classify_regime(4, Modulus::Finite(4)).unwrap();
        let zero = Color::joint(Residue::new(0, Modulus::Finite(4)));
        let engine = crystal::replay_path(&Path::new(vec![zero, zero]), &params);
        assert_eq!(engine, naive::replay(&[zero, zero], &params));
    }

    #[test]
    fn suites_pass_on_small_cases() {
        let b4 = classify_regime(5, Modulus::Finite(4)).unwrap();
        assert!(verify_h_path_independence(5, &b4).unwrap().passed());
        let b6 = classify_regime(5, Modulus::Finite(6)).unwrap();
        assert!(verify_h_path_independence(5, &b6).unwrap().passed());
        let a = classify_regime(4, Modulus::Infinite).unwrap();
        assert!(verify_h_path_independence(4, &a).unwrap().passed());
        assert!(verify_uniqueness_and_distinctness(2, &b4).unwrap().passed());
        assert!(verify_semisimple_branching(2, &a).unwrap().passed());
    }

    #[test]
    fn semisimple_suite_rejects_modular_parameters() {
        let b4 = classify_regime(5, Modulus::Finite(4)).unwrap();
        assert!(matches!(verify_semisimple_branching(5, &b4), Err(Error::NotSemisimple { .. })));
    }

    #[test]
    fn unknown_suite() {
        let a = classify_regime(3, Modulus::Infinite).unwrap();
        assert!(matches!(run_suite("nope", 3, &a), Err(Error::InvalidArgument(_))));
    }
}
