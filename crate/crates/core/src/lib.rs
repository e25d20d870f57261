//! Sum-connectivity index of bicyclic graphs: exact evaluation, the
//! standard extremal families, exhaustive enumeration up to isomorphism and
//! checks of the extremal values against closed forms.

pub mod canon;
pub mod error;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod radical;
pub mod transforms;
pub mod verify;

pub use canon::{canonical_code, canonical_form, CanonicalCode};
pub use error::{Error, ErrorKind, Result};
pub use graph::Graph;
pub use radical::RadicalSum;
