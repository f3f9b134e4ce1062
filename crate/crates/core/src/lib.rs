//! Modular branching rules for Hecke algebras of type D.
//!
//! Irreducible modules of the type-B Hecke algebra `H(B_n)` with unequal
//! parameters `Q = 1` are labelled by Kleshchev bipartitions. Restricting
//! them to the type-D subalgebra `H(D_n)` either stays irreducible or splits
//! into two pieces `D±`, governed by an involution `h` on bipartitions. This
//! crate computes:
//!
//! * the good lattice of Kleshchev bipartitions ([`crystal::Lattice`]),
//! * the involution `h` and the resulting `H(D_n)` labels ([`branching`]),
//! * the socle of the restriction of any label to `H(D_{n−1})`
//!   ([`branching::socle_restriction`]),
//! * brute-force verifiers for all of the above ([`oracle`]),
//! * JSON and DOT output plus an on-disk lattice cache ([`io`]).
//!
//! Two regimes occur. When `q^i ≠ −1` for `i < n` (regime A) the two
//! components behave independently and `h` swaps them. When `e = 2l` with
//! `l < n` (regime B) both components share one residue system with
//! multicharge `(0, l)` and `h` shifts every residue of a path by `l`.
//! [`params::classify_regime`] picks the regime from `n` and `e`.
//!
//! ```
//! use dnbranch::prelude::*;
//!
//! let params = classify_regime(5, Modulus::Finite(4)).unwrap();
//! let lattice = Lattice::build(5, params).unwrap();
//! let lambda: Bipartition = "1|2,2".parse().unwrap();
//! assert!(lattice.contains(&lambda));
//! assert_eq!(almost_symmetric(&lambda, &lattice).unwrap(), Some(Node::new(2, 2, 2)));
//! ```

pub mod branching;
pub mod cli;
pub mod crystal;
pub mod diagram;
pub mod error;
pub mod io;
pub mod oracle;
pub mod params;

pub use error::{Error, Result};

/// The types and functions most programs need.
pub mod prelude {
    pub use crate::branching::{
        almost_symmetric, branching_graph, involution, is_fixed, label_for, labels, socle_restriction,
        InvolutionSummary, IrreducibleLabel, LabelKind, Sign, SocleDecomposition,
    };
    pub use crate::crystal::{canonical_path, good_nodes, Color, Lattice, Path};
    pub use crate::diagram::{Bipartition, Component, Node, Partition};
    pub use crate::error::{Error, Result};
    pub use crate::oracle::bipartition_dimension;
    pub use crate::params::{classify_regime, CrystalParams, Modulus, Regime};
}
