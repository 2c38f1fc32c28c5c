pub mod abelian;
pub mod arith;
pub mod cli;
pub mod error;
pub mod exactfield;
pub mod gradedalg;
pub mod linalg;
pub mod quasitorus;
pub mod gradedfield;
pub mod realclass;

pub use error::{Error, Result};
