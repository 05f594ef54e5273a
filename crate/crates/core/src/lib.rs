//! Exact edge counts for the Hasse diagrams of lattices of lattice paths
//! (Dyck, Motzkin, Schröder, Fibonacci and their Grand variants) and of
//! finite Young lattices.
//!
//! Every count is reachable by several independent routes:
//!
//! * [`order`]: exhaustive enumeration of a class and its cover relation,
//! * [`series`]: exact expansion of bivariate generating series,
//! * [`closed`]: closed-form identities over big integers,
//! * [`young`]: the cell-product formula for Young lattices.
//!
//! The routes share nothing beyond the path and partition types, so their
//! agreement is a meaningful check.

pub mod closed;
pub mod error;
pub mod order;
pub mod path;
pub mod series;
pub mod young;

pub use error::{Error, Result};
pub use path::{ClassKind, ClassSpec, Factor, PathWord, Step};
