//! Band-truncated central extension of `gl_∞`, its induced modules, and
//! singular-vector searches.

pub mod algebra;
pub mod commutator;
pub mod fdmodule;
pub mod induced;
pub mod search;

pub use commutator::{commutator_formula_check, CommutatorReport};
pub use algebra::{bracket, bracket_units, cocycle, Band, BandAlgebraElement, Block, Unit};
pub use induced::{AMinusPoly, InducedModule, ModuleVector, Term};
pub use search::{singular_search, SearchReport, SingularBlock, SingularVector};
