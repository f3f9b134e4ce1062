use std::fmt;

use crate::diagram::Bipartition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn parse(text: &str) -> Option<Sign> {
        match text.trim() {
            "+" | "plus" => Some(Sign::Plus),
            "-" | "−" | "minus" => Some(Sign::Minus),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LabelKind {
    /// Restriction of `D̃^λ` stays irreducible; labelled by the class `{λ, h(λ)}`.
    Unsplit,
    /// One of the two summands `D±^λ` of a fixed point `λ = h(λ)`.
    Split(Sign),
}

/// An irreducible `H(D_n)`-module.
///
/// For `Unsplit`, `rep` is the smaller member of `{λ, h(λ)}` in the
/// bipartition total order. For `Split`, `rep` is the fixed point itself.
/// The empty bipartition at `n = 0` is labelled `Unsplit`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IrreducibleLabel {
    pub rep: Bipartition,
    pub kind: LabelKind,
}

impl IrreducibleLabel {
    pub fn unsplit(rep: Bipartition) -> Self {
        IrreducibleLabel {
            rep,
            kind: LabelKind::Unsplit,
        }
    }

    pub fn split(rep: Bipartition, sign: Sign) -> Self {
        IrreducibleLabel {
            rep,
            kind: LabelKind::Split(sign),
        }
    }

    pub fn n(&self) -> usize {
        self.rep.size()
    }

    pub fn is_split(&self) -> bool {
        matches!(self.kind, LabelKind::Split(_))
    }

    pub fn sign(&self) -> Option<Sign> {
        match self.kind {
            LabelKind::Split(s) => Some(s),
            LabelKind::Unsplit => None,
        }
    }
}

impl fmt::Display for IrreducibleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            LabelKind::Unsplit => write!(f, "D({})", self.rep),
            LabelKind::Split(s) => write!(f, "D{}({})", s.symbol(), self.rep),
        }
    }
}

/// The socle of the restriction of `source` to `H(D_{n−1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SocleDecomposition {
    pub source: IrreducibleLabel,
    pub summands: Vec<IrreducibleLabel>,
}

impl SocleDecomposition {
    /// Sorts the summands; duplicates are kept so that they stay visible to
    /// [`SocleDecomposition::is_multiplicity_free`].
    pub fn new(source: IrreducibleLabel, mut summands: Vec<IrreducibleLabel>) -> Self {
        summands.sort();
        SocleDecomposition { source, summands }
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.summands.windows(2).all(|w| w[0] != w[1])
    }
}

impl fmt::Display for SocleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "soc {}↓ =", self.source)?;
        if self.summands.is_empty() {
            return f.write_str(" 0");
        }
        for (k, s) in self.summands.iter().enumerate() {
            f.write_str(if k == 0 { " " } else { " ⊕ " })?;
            write!(f, "{s}")?;
        }
        Ok(())
    }
}
