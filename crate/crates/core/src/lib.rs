pub mod error;
pub mod exact_arith;

pub use error::{Error, Result};
pub mod sequences;
pub mod convexity;
pub mod transforms;
pub mod corpus;
pub mod recurrence_analysis;
pub mod qpolys;
pub mod report;
pub mod cli;
