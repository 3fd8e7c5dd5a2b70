pub mod catalog;
pub mod cli;
pub mod error;
pub mod exactlin;
pub mod galois;
pub mod report;
pub mod structures;
pub mod weak_entwining;
pub mod weak_hopf;

pub use error::{Error, Result};
pub use report::{Check, Report, Status, Witness};
