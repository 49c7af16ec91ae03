//! Exact admissibility and integrality checks for the minimum-weight support
//! designs of extremal doubly even self-dual codes.

pub mod design;
pub mod enumerator;
pub mod error;
pub mod exact;
pub mod gate;
pub mod golden;
mod linsolve;
pub mod report;
pub mod store;
pub mod theorem;

pub use design::{CodeFamily, DesignParams, Family};
pub use error::{Error, Result};
pub use exact::{ExactInt, ExactRat};
pub use gate::{GateResult, Verdict};
pub use report::Report;
pub use store::GateStore;
pub use theorem::TheoremId;
