//! Exact invariants, cohomology tables and component classification for
//! maximal families of space curves on smooth surfaces that contain a line,
//! together with curves on a smooth cubic surface.
//!
//! All arithmetic is on `i128`; release builds keep overflow checks on.

pub mod arith;
pub mod atlas;
pub mod audit;
pub mod classifier;
pub mod cubic;
pub mod error;
pub mod jsonint;
pub mod maxgenus;
pub mod picard;

pub use audit::{audit_case, AuditCase, AuditTranscript, CurveNumerics};
pub use classifier::{classify, ComponentStatus, FamilyReport, TheoremCase};
pub use cubic::{cubic_verdict, RangeVerdict, SevenTuple};
pub use error::{Error, Result};
pub use maxgenus::{max_genus, MaxGenusAnswer};
pub use picard::{CohomologyAnswer, DivisorClass, SurfaceContext};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
