//! Exact computations around Clebsch-Gordan coefficients and the induced
//! representations of the centrally extended infinite-rank general linear
//! algebra.
//!
//! * [`partitions`]: partitions, finite and half-infinite weights
//! * [`lr`]: Littlewood-Richardson coefficients and the Schur-polynomial oracle
//! * [`polymodel`]: the symmetric algebra of the lower-left block as a module
//!   over the two diagonal blocks
//! * [`ghat`]: band-truncated model of the infinite algebra and its induced modules
//! * [`reciprocity`]: multiplicities of induced modules and the reciprocity identity

pub mod error;
pub mod ghat;
pub mod linalg;
pub mod lr;
pub mod partitions;
pub mod poly;
pub mod polymodel;
pub mod reciprocity;

pub use error::{Error, Result};
pub use lr::{DecompositionTable, SkewTableau};
pub use partitions::{ColumnLengths, FiniteWeight, HalfInfiniteWeight, Partition, SemidominantWeight, Sign};
pub use poly::SparsePoly;
