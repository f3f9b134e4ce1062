//! Bipartitions and the geometry of their Young diagrams.
//!
//! Nodes are addressed as `(component, row, column)` with 1-based rows and
//! columns. Lists of nodes are always returned in reading order: component 1
//! before component 2, rows ascending.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing list of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition, dropping trailing zeros. Fails if the parts are not
    /// weakly decreasing.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(pos) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "parts {:?} are not weakly decreasing at index {}",
                parts,
                pos + 1
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "parts {parts:?} contain an interior zero"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Length of row `row` (1-based); zero past the last row.
    pub fn row(&self, row: usize) -> u32 {
        if row == 0 {
            return 0;
        }
        self.0.get(row - 1).copied().unwrap_or(0)
    }

    /// True iff every difference `parts[i] - parts[i+1]` (with a trailing zero)
    /// is below `l`. `None` stands for an infinite `l`.
    pub fn is_restricted(&self, l: Option<u32>) -> bool {
        let Some(l) = l else { return true };
        self.0
            .iter()
            .zip(self.0.iter().skip(1).chain(std::iter::once(&0)))
            .all(|(a, b)| a - b < l)
    }

    /// All partitions of `n` in increasing total order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for part in (1..=rest.min(max)).rev() {
                prefix.push(part as u32);
                rec(rest - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    fn removable_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.len()).filter(move |&r| self.row(r) > self.row(r + 1))
    }

    fn addable_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.len() + 1).filter(move |&r| r == 1 || self.row(r) < self.row(r - 1))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Component index of a bipartition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Component {
    First,
    Second,
}

impl Component {
    pub const BOTH: [Component; 2] = [Component::First, Component::Second];

    pub fn index(self) -> usize {
        match self {
            Component::First => 0,
            Component::Second => 1,
        }
    }

    /// 1 or 2.
    pub fn number(self) -> usize {
        self.index() + 1
    }

    pub fn flip(self) -> Component {
        match self {
            Component::First => Component::Second,
            Component::Second => Component::First,
        }
    }

    pub fn from_number(k: usize) -> Option<Component> {
        match k {
            1 => Some(Component::First),
            2 => Some(Component::Second),
            _ => None,
        }
    }
}

/// A cell of a bipartition diagram (or a position where one may be added).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Node {
    pub component: Component,
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(component: usize, row: usize, col: usize) -> Self {
        let component = Component::from_number(component).expect("component must be 1 or 2");
        assert!(row >= 1 && col >= 1, "rows and columns are 1-based");
        Node {
            component,
            row,
            col,
        }
    }

    /// `col - row`, before any multicharge offset or reduction.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }

    pub fn mirror(&self) -> Node {
        Node {
            component: self.component.flip(),
            ..*self
        }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.component.number(), self.row, self.col)
    }
}

/// An ordered pair of partitions.
///
/// The derived order compares component 1 first, then component 2, each by
/// lexicographic comparison of part lists (a proper prefix sorts first).
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bipartition {
    components: [Partition; 2],
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition {
            components: [first, second],
        }
    }

    pub fn empty() -> Self {
        Bipartition::default()
    }

    /// Convenience constructor from raw part lists. Panics on invalid input.
    pub fn from_parts(first: &[u32], second: &[u32]) -> Self {
        Bipartition::new(
            Partition::new(first.to_vec()).expect("invalid first component"),
            Partition::new(second.to_vec()).expect("invalid second component"),
        )
    }

    pub fn first(&self) -> &Partition {
        &self.components[0]
    }

    pub fn second(&self) -> &Partition {
        &self.components[1]
    }

    pub fn component(&self, c: Component) -> &Partition {
        &self.components[c.index()]
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.components.iter().all(Partition::is_empty)
    }

    /// Swaps the two components.
    pub fn hat(&self) -> Bipartition {
        Bipartition {
            components: [self.components[1].clone(), self.components[0].clone()],
        }
    }

    pub fn contains(&self, node: &Node) -> bool {
        node.col as u32 <= self.component(node.component).row(node.row)
    }

    pub fn removable_nodes(&self) -> Vec<Node> {
        Component::BOTH
            .iter()
            .flat_map(|&c| {
                let p = self.component(c);
                p.removable_rows().map(move |r| Node {
                    component: c,
                    row: r,
                    col: p.row(r) as usize,
                })
            })
            .collect()
    }

    pub fn addable_nodes(&self) -> Vec<Node> {
        Component::BOTH
            .iter()
            .flat_map(|&c| {
                let p = self.component(c);
                p.addable_rows().map(move |r| Node {
                    component: c,
                    row: r,
                    col: p.row(r) as usize + 1,
                })
            })
            .collect()
    }

    pub fn is_removable(&self, node: &Node) -> bool {
        let p = self.component(node.component);
        node.row >= 1
            && p.row(node.row) as usize == node.col
            && node.col >= 1
            && p.row(node.row) > p.row(node.row + 1)
    }

    pub fn is_addable(&self, node: &Node) -> bool {
        let p = self.component(node.component);
        node.row >= 1
            && p.row(node.row) as usize + 1 == node.col
            && (node.row == 1 || p.row(node.row) < p.row(node.row - 1))
    }

    pub fn remove_node(&self, node: &Node) -> Result<Bipartition> {
        if !self.is_removable(node) {
            return Err(Error::NotRemovable {
                diagram: self.clone(),
                node: *node,
            });
        }
        Ok(self.remove_unchecked(node))
    }

    pub fn add_node(&self, node: &Node) -> Result<Bipartition> {
        if !self.is_addable(node) {
            return Err(Error::NotAddable {
                diagram: self.clone(),
                node: *node,
            });
        }
        Ok(self.add_unchecked(node))
    }

    pub(crate) fn remove_unchecked(&self, node: &Node) -> Bipartition {
        let mut out = self.clone();
        let parts = &mut out.components[node.component.index()].0;
        parts[node.row - 1] -= 1;
        if parts[node.row - 1] == 0 {
            parts.pop();
        }
        out
    }

    pub(crate) fn add_unchecked(&self, node: &Node) -> Bipartition {
        let mut out = self.clone();
        let parts = &mut out.components[node.component.index()].0;
        if node.row > parts.len() {
            parts.push(1);
        } else {
            parts[node.row - 1] += 1;
        }
        out
    }

    /// Dominance comparison; see [`Dominance`].
    pub fn dominance(&self, other: &Bipartition) -> Result<Dominance> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        if self == other {
            return Ok(Dominance::Equal);
        }
        let a = self.dominance_prefix_sums();
        let b = other.dominance_prefix_sums();
        let len = a.len().max(b.len());
        let at = |v: &[usize], k: usize| v.get(k).copied().unwrap_or(*v.last().unwrap_or(&0));
        let (mut ge, mut le) = (true, true);
        for k in 0..len {
            match at(&a, k).cmp(&at(&b, k)) {
                Ordering::Less => ge = false,
                Ordering::Greater => le = false,
                Ordering::Equal => {}
            }
        }
        Ok(match (ge, le) {
            (true, _) => Dominance::GreaterEq,
            (_, true) => Dominance::LessEq,
            _ => Dominance::Incomparable,
        })
    }

    // Interleaved sequence of prefix sums: component 1 rows, then |first| plus
    // component 2 rows. Both sequences are padded to a common row count so
    // that positions line up.
    fn dominance_prefix_sums(&self) -> Vec<usize> {
        let rows = self.size().max(1);
        let mut out = Vec::with_capacity(2 * rows);
        let mut acc = 0;
        for r in 1..=rows {
            acc += self.first().row(r) as usize;
            out.push(acc);
        }
        for r in 1..=rows {
            acc += self.second().row(r) as usize;
            out.push(acc);
        }
        out
    }

    /// All bipartitions of `n` in increasing total order.
    pub fn all_of(n: usize) -> Vec<Bipartition> {
        let mut out = Vec::new();
        for k in 0..=n {
            for a in Partition::all_of(k) {
                for b in Partition::all_of(n - k) {
                    out.push(Bipartition::new(a.clone(), b));
                }
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.components[0], self.components[1])
    }
}

impl FromStr for Bipartition {
    type Err = Error;

    /// Parses `"2,1|1,1"`, `"-|2,2"`, `"-|-"`. Column positions in errors are
    /// 1-based.
    fn from_str(s: &str) -> Result<Self> {
        let Some(bar) = s.find('|') else {
            return Err(Error::parse(s.len() + 1, "expected '|' between components"));
        };
        if let Some(extra) = s[bar + 1..].find('|') {
            return Err(Error::parse(bar + extra + 2, "unexpected second '|'"));
        }
        let first = parse_component(&s[..bar], 1)?;
        let second = parse_component(&s[bar + 1..], bar + 2)?;
        Ok(Bipartition::new(first, second))
    }
}

fn parse_component(text: &str, start_col: usize) -> Result<Partition> {
    if text == "-" {
        return Ok(Partition::empty());
    }
    if text.is_empty() {
        return Err(Error::parse(
            start_col,
            "empty component; write '-' for the empty partition",
        ));
    }
    let mut parts = Vec::new();
    let mut col = start_col;
    for piece in text.split(',') {
        let value: u32 = piece
            .parse()
            .map_err(|_| Error::parse(col, format!("expected a positive integer, found {piece:?}")))?;
        if value == 0 {
            return Err(Error::parse(col, "parts must be positive"));
        }
        if let Some(&prev) = parts.last() {
            if value > prev {
                return Err(Error::parse(col, "parts must be weakly decreasing"));
            }
        }
        parts.push(value);
        col += piece.len() + 1;
    }
    Ok(Partition(parts))
}

/// Result of comparing two bipartitions of equal size in the dominance order.
///
/// `λ ⊵ μ` iff for every `k`, `Σ_{i≤k} λ¹ᵢ ≥ Σ_{i≤k} μ¹ᵢ` and
/// `|λ¹| + Σ_{i≤k} λ²ᵢ ≥ |μ¹| + Σ_{i≤k} μ²ᵢ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    GreaterEq,
    LessEq,
    Equal,
    Incomparable,
}
