//! Exact Schubert calculus on type-A partial flag varieties.
//!
//! The crate decides Levi-movability of tuples of Schubert classes on
//! `Fl(a, n)`, computes their structure constants with an independent
//! Schubert-polynomial oracle, and factors Levi-movable constants into
//! Littlewood–Richardson numbers of smaller Grassmannians.
//!
//! Schubert classes are indexed by dimension throughout: `[X_w]` has
//! dimension `length(w)` and `[X_e]` is the class of a point.

pub mod error;
pub mod factor;
pub mod flag;
pub mod grassmann;
pub mod lengths;
pub mod levi;
pub mod oracle;
pub mod perm;
pub mod poly;
pub mod verify;

pub use error::{Error, Result};

pub use factor::{FactorStep, FactorizationTree, GrassmannFactor, PairwiseFactor};
pub use flag::{FlagType, GammaReduction, SchubertClass};
pub use grassmann::Partition;

pub use levi::{Method, MovabilityReport, MovableTuple, TupleOrder};
pub use perm::Permutation;
pub use poly::{Monomial, SparsePolynomial};
pub use verify::{Suite, SuiteReport};
