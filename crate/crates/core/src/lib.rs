//! Exact-arithmetic toolkit for multiplier bimonoids in braided monoidal
//! categories of graded vector spaces.
//!
//! The crate builds counital fusion morphisms, multiplier bimonoids, and
//! regular multiplier bimonoids from concrete input (semigroup tables,
//! bimonoids, duals of finite monoids), machine-checks every defining
//! diagram by exact matrix arithmetic, derives the induced comultiplication
//! functors and their (co)module theory, and exposes the whole pipeline
//! through a JSON file format and the `mbm` command-line tool.

pub mod builders;
pub mod context;
pub mod error;
pub mod file;
pub mod functorial;
pub mod fusion;
pub mod grade;
pub mod linalg;
pub mod mbm;
pub mod morphism;
pub mod object;
pub mod repcat;
pub mod report;
pub mod scalar;

pub use error::Error;
