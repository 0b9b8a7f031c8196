//! Exact enumerative invariants of rational plane curves.
//!
//! All computations go through an [`Engine`], which memoizes every invariant
//! it evaluates:
//!
//! * [`Engine::kontsevich_n`]: rational curves through points.
//! * [`Engine::phi1`], [`Engine::phi2`]: one- and two-point integrals with at
//!   most one cotangent-line class.
//! * [`Engine::tangency_count`]: two-component curves tangent at the node.
//! * [`Engine::cusp_count`]: rational cuspidal curves with the cusp on lines.
//! * [`Engine::cusp_tangent_line_count`], [`Engine::e6_quartic_count`]:
//!   cuspidal cubic plus tangent line, and quartics with an E6 point.
//!
//! ```
//! use cuspidal_core::Engine;
//!
//! let engine = Engine::new();
//! assert_eq!(engine.cusp_count(4, 10, 0).unwrap(), 2304.into());
//! ```

pub mod arith;
pub mod chow;
mod cuspidal;
mod e6;
mod engine;
pub mod error;
pub mod golden;
mod gw;
pub mod memo;
pub mod report;
pub mod table;
mod tangency;
mod tautological;

pub use arith::{binomial, rational, ExactInteger, ExactRational};
pub use chow::{chow_integrate, chow_mul, class_a2f, class_a2l, class_pa2, ChowElement};
pub use cuspidal::WdvvSide;
pub use e6::E6Relation;
pub use engine::Engine;
pub use error::{Error, Result};
pub use golden::{golden_records, Family, GoldenRecord};
pub use memo::{CacheError, CuspVariant, InvariantKey, MemoStore};
pub use report::{Format, Report, Table};
