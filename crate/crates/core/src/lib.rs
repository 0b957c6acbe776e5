//! A small cubical type-theory kernel: syntax, dimension substitution,
//! normalization, an open-box checker, and a catalog of higher groupoid
//! constructions checked against their boundaries.

// Errors carry the offending terms and are only built on failure.
#![allow(clippy::result_large_err)]

pub mod cli;
pub mod catalog;
pub mod context;
pub mod dims;
pub mod evaluator;
pub mod groupoid;
pub mod kernel;
pub mod syntax;
pub mod theorems;

pub use context::Context;
pub use evaluator::{face, judge_equal, normalize, NormalForm};
pub use kernel::{boundary_report, check_member, check_open_box, CheckError, TraceLine, Verdict};
pub use syntax::{Dim, Name, Side, Term, Tube};
