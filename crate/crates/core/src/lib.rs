//! Restricted sumsets of integer sets: exact computation, lower bounds,
//! classification of the sets that attain them, executable versions of the
//! proof steps, and exhaustive verification campaigns.

pub mod bits;
pub mod bounds;
pub mod error;
pub mod harness;
pub mod modular;
pub mod oracle;
pub mod poly;
pub mod proofkit;
pub mod set;
pub mod structure;
pub mod sumset;

pub use bounds::{bound_report, generalized_bound, generalized_bound_report, nwedge_bound, sn_bound, Bound, BoundReport, Mode};
pub use error::{Error, Result};
pub use poly::MonicPolynomial;
pub use set::IntegerSet;
pub use structure::{classify, reconstruct, Classification, StructureForm};
pub use sumset::{distinct_sumset, generalized_sumset, restricted_sumset, SumSet};
