pub mod characters;
pub mod cli;
pub mod error;
pub mod expr;
pub mod frobenius;
mod linalg;
pub mod lyndon;
pub mod mpoly;
pub mod oracles;
pub mod partition;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use partition::Partition;
pub use symfunc::{Basis, SymFunc, SymSeries};
