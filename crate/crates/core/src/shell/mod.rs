//! Command-line layer: the group-expression language, verdict records, the
//! result cache, the table reproduction and the verification suites.

pub mod cache;
pub mod cli;
pub mod record;
pub mod spec;
pub mod suites;
pub mod table;

pub use spec::{parse_spec, parse_syntax, SpecError};
