//! Finite permutation groups, conjugacy classes of π-elements, and nilpotent
//! Hall subgroups.

pub mod cli;
pub mod constructions;
pub mod error;
pub mod harness;
pub mod invariants;
pub mod perm;
pub mod structure;

pub use error::{GroupError, Result};
pub use perm::{PermGroup, Permutation, DEFAULT_CAP, MAX_DEGREE};
