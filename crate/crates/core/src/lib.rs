//! Exact integer Lie-theory computations behind embedding-dimension bounds
//! for algebraic groups: root systems, parabolic dimension invariants, the
//! embedding verdict engine and rational homotopy types of simple groups.

pub mod error;
pub mod lie_core;
pub mod parabolic;
pub mod search;
pub mod audit;
pub mod bounds;
pub mod expr;
pub mod homotopy;
pub mod tables;

pub use error::{Error, Result};
pub use lie_core::{Family, GroupDims, Root, RootSystem, SimpleType};
pub use bounds::{verdict, EmbedQuery, GroupExpr, Rule, Verdict, VerdictKind};
pub use expr::{format_expr, parse_expr};
