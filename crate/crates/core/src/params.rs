//! Residues and the two parameter regimes determined by `e`.
//!
//! Regime A covers the parameters where `2∏_{i<n}(1+qⁱ) ≠ 0`: the two
//! components of a bipartition decouple and each carries plain `col − row`
//! residues modulo `l`. Regime B covers `q` a primitive `2l`-th root of unity
//! with `l < n`: residues live in `Z/2lZ` and component 2 is offset by `l`
//! (the multicharge `(0, l)`, since `−1 = q^l`).

use std::fmt;
use std::str::FromStr;

use crate::diagram::Node;
use crate::error::{Error, Result};

/// A finite modulus or the marker for "no reduction".
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Modulus {
    Finite(u32),
    Infinite,
}

impl Modulus {
    pub fn finite(self) -> Option<u32> {
        match self {
            Modulus::Finite(m) => Some(m),
            Modulus::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Modulus::Infinite)
    }

    pub fn reduce(self, value: i64) -> i64 {
        match self {
            Modulus::Finite(m) => value.rem_euclid(m as i64),
            Modulus::Infinite => value,
        }
    }

    /// Parses `"inf"` or an integer `>= 2`.
    pub fn parse_e(text: &str) -> Result<Modulus> {
        let t = text.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            return Ok(Modulus::Infinite);
        }
        match t.parse::<i64>() {
            Ok(e) if e >= 2 && e <= u32::MAX as i64 => Ok(Modulus::Finite(e as u32)),
            _ => Err(Error::InvalidE(text.to_string())),
        }
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Modulus::Finite(m) => write!(f, "{m}"),
            Modulus::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Modulus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Modulus::parse_e(s)
    }
}

/// A residue class. Always stored in reduced form `0 <= value < m` when the
/// modulus is finite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Residue {
    value: i64,
    modulus: Modulus,
}

impl Residue {
    pub fn new(value: i64, modulus: Modulus) -> Self {
        Residue {
            value: modulus.reduce(value),
            modulus,
        }
    }

    pub fn value(self) -> i64 {
        self.value
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    pub fn shift(self, by: i64) -> Residue {
        Residue::new(self.value + by, self.modulus)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Regime {
    A,
    B,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Regime::A => f.write_str("A"),
            Regime::B => f.write_str("B"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CrystalParams {
    e: Modulus,
    regime: Regime,
    l: Modulus,
    multicharge: [i64; 2],
}

impl CrystalParams {
    /// Decoupled components with residues modulo `l` (`e = l`).
    pub fn regime_a(l: Modulus) -> Self {
        CrystalParams {
            e: l,
            regime: Regime::A,
            l,
            multicharge: [0, 0],
        }
    }

    /// `e = 2l`, multicharge `(0, l)`.
    pub fn regime_b(l: u32) -> Self {
        assert!(l >= 1, "l must be positive");
        CrystalParams {
            e: Modulus::Finite(2 * l),
            regime: Regime::B,
            l: Modulus::Finite(l),
            multicharge: [0, l as i64],
        }
    }

    pub fn e(&self) -> Modulus {
        self.e
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    pub fn l(&self) -> Modulus {
        self.l
    }

    pub fn multicharge(&self) -> [i64; 2] {
        self.multicharge
    }

    /// Modulus in which node residues live: `e` in regime B, `l` in regime A.
    pub fn residue_modulus(&self) -> Modulus {
        match self.regime {
            Regime::A => self.l,
            Regime::B => self.e,
        }
    }

    pub fn residue(&self, node: &Node) -> Residue {
        Residue::new(
            node.content() + self.multicharge[node.component.index()],
            self.residue_modulus(),
        )
    }

    /// All residue classes, in increasing order. `None` when infinite.
    pub fn residue_classes(&self) -> Option<Vec<Residue>> {
        let m = self.residue_modulus().finite()?;
        Some((0..m as i64).map(|v| Residue::new(v, self.residue_modulus())).collect())
    }

    /// Shift by `l` (regime B only).
    pub fn shift_by_l(&self, r: Residue) -> Residue {
        match (self.regime, self.l) {
            (Regime::B, Modulus::Finite(l)) => r.shift(l as i64),
            _ => panic!("residue shift by l is only defined in regime B"),
        }
    }
}

impl fmt::Display for CrystalParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e={} regime={} l={}", self.e, self.regime, self.l)
    }
}

fn check_e(e: Modulus) -> Result<()> {
    match e {
        Modulus::Finite(v) if v < 2 => Err(Error::InvalidE(v.to_string())),
        _ => Ok(()),
    }
}

/// Chooses the regime for `H(D_n)` when `q` has quantum characteristic `e`.
///
/// * `e` infinite or odd: regime A with `l = e`.
/// * `e` even with `e/2 < n`: regime B with `l = e/2`.
/// * `e` even with `e/2 >= n`: regime A with `l = e`, since no `qⁱ = −1` for
///   `i <= n − 1`.
pub fn classify_regime(n: usize, e: Modulus) -> Result<CrystalParams> {
    check_e(e)?;
    Ok(match e {
        Modulus::Finite(v) if v % 2 == 0 && ((v / 2) as usize) < n => CrystalParams::regime_b(v / 2),
        _ => CrystalParams::regime_a(e),
    })
}

// (1 + qⁱ) = 0 iff e even and i ≡ e/2 (mod e).
fn some_one_plus_q_pow_vanishes(upto: usize, e: Modulus) -> bool {
    match e {
        Modulus::Finite(v) if v % 2 == 0 => (1..=upto).any(|i| i % v as usize == (v / 2) as usize),
        _ => false,
    }
}

// (1 + q + … + q^{i−1}) = 0 iff e finite and e | i.
fn some_quantum_integer_vanishes(upto: usize, e: Modulus) -> bool {
    match e {
        Modulus::Finite(v) => (1..=upto).any(|i| i % v as usize == 0),
        Modulus::Infinite => false,
    }
}

/// Semisimplicity of `H(B_n)`; characteristic 2 is excluded globally.
pub fn is_semisimple_b(n: usize, e: Modulus) -> Result<bool> {
    check_e(e)?;
    Ok(!some_one_plus_q_pow_vanishes(n.saturating_sub(1), e) && !some_quantum_integer_vanishes(n, e))
}

/// Semisimplicity of `H(D_n)`.
pub fn is_semisimple_d(n: usize, e: Modulus) -> Result<bool> {
    check_e(e)?;
    Ok(!some_one_plus_q_pow_vanishes(n.saturating_sub(1), e) && !some_quantum_integer_vanishes(n, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    const INF: Modulus = Modulus::Infinite;

    #[test]
    fn residue_examples() {
        let b4 = classify_regime(5, Modulus::Finite(4)).unwrap();
        assert_eq!(b4.residue(&Node::new(2, 2, 2)).value(), 2);
        assert_eq!(b4.residue(&Node::new(1, 1, 1)).value(), 0);
        let a_inf = classify_regime(5, INF).unwrap();
        assert_eq!(a_inf.residue(&Node::new(1, 1, 1)).value(), 0);
        assert_eq!(a_inf.residue(&Node::new(1, 3, 1)).value(), -2);
        // no cross-component offset in regime A
        assert_eq!(a_inf.residue(&Node::new(2, 3, 1)).value(), -2);
        let a3 = CrystalParams::regime_a(Modulus::Finite(3));
        assert_eq!(a3.residue(&Node::new(2, 3, 1)).value(), 1);
    }

    #[test]
    fn regime_b_mirror_offset() {
        for l in 1..5u32 {
            let p = CrystalParams::regime_b(l);
            for row in 1..6 {
                for col in 1..6 {
                    let n2 = Node::new(2, row, col);
                    let diff = p.residue(&n2).value() - p.residue(&n2.mirror()).value();
                    assert_eq!(diff.rem_euclid(2 * l as i64), l as i64);
                }
            }
        }
    }

    #[test]
    fn classify_examples() {
        let p = classify_regime(5, INF).unwrap();
        assert_eq!((p.regime(), p.l()), (Regime::A, INF));
        let p = classify_regime(5, Modulus::Finite(4)).unwrap();
        assert_eq!((p.regime(), p.l()), (Regime::B, Modulus::Finite(2)));
        assert_eq!(p.multicharge(), [0, 2]);
        let p = classify_regime(3, Modulus::Finite(8)).unwrap();
        assert_eq!((p.regime(), p.l()), (Regime::A, Modulus::Finite(8)));
        let p = classify_regime(4, Modulus::Finite(7)).unwrap();
        assert_eq!((p.regime(), p.l()), (Regime::A, Modulus::Finite(7)));
        let p = classify_regime(2, Modulus::Finite(2)).unwrap();
        assert_eq!((p.regime(), p.l()), (Regime::B, Modulus::Finite(1)));
    }

    #[test]
    fn invalid_e() {
        assert!(matches!(classify_regime(3, Modulus::Finite(1)), Err(Error::InvalidE(_))));
        assert!(matches!(classify_regime(3, Modulus::Finite(0)), Err(Error::InvalidE(_))));
        assert!(matches!(Modulus::parse_e("-4"), Err(Error::InvalidE(_))));
        assert!(matches!(Modulus::parse_e("1"), Err(Error::InvalidE(_))));
        assert!(matches!(Modulus::parse_e("x"), Err(Error::InvalidE(_))));
        assert_eq!(Modulus::parse_e("inf").unwrap(), INF);
        assert_eq!(Modulus::parse_e("6").unwrap(), Modulus::Finite(6));
    }

    #[test]
    fn semisimplicity_examples() {
        assert!(is_semisimple_b(5, INF).unwrap() && is_semisimple_d(5, INF).unwrap());
        assert!(!is_semisimple_b(5, Modulus::Finite(4)).unwrap());
        assert!(!is_semisimple_d(5, Modulus::Finite(4)).unwrap());
        assert!(is_semisimple_b(3, Modulus::Finite(7)).unwrap());
        assert!(is_semisimple_d(3, Modulus::Finite(7)).unwrap());
        // 1 + q + q² = 0 when e = 3 and n = 3
        assert!(!is_semisimple_d(3, Modulus::Finite(3)).unwrap());
        // e = 8, n = 4: no qⁱ = −1 for i <= 3, 8 > 4
        assert!(is_semisimple_d(4, Modulus::Finite(8)).unwrap());
        // e = 8, n = 5: q⁴ = −1
        assert!(!is_semisimple_d(5, Modulus::Finite(8)).unwrap());
    }

    #[test]
    fn regime_b_iff_some_one_plus_q_pow_vanishes() {
        for n in 2..12 {
            for e in 2..20u32 {
                let p = classify_regime(n, Modulus::Finite(e)).unwrap();
                assert_eq!(
                    p.regime() == Regime::B,
                    some_one_plus_q_pow_vanishes(n - 1, Modulus::Finite(e)),
                    "n={n} e={e}"
                );
            }
        }
    }
}
