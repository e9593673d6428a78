//! Exact computations with ramified and boxed diagram monoids, the tied
//! Hecke-type algebras built on them, their idempotents and cellular bases,
//! and a Knuth–Bendix engine for checking monoid presentations.

pub mod algebra;
pub mod cellular;
pub mod combinatorics;
pub mod diagram;
pub mod error;
pub mod kb;
pub mod laurent;
pub mod linalg;
pub mod monoid;
pub mod perm;
pub mod presentations;
pub mod ramified;
pub mod report;
pub mod setpart;
pub mod unionfind;
pub mod verify;

pub use error::{Error, Result};
