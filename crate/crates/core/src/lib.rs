pub mod cli;
pub mod endocalc;
pub mod error;
pub mod oracle;
pub mod repcalc;
pub mod words;

pub use error::{Error, Result};
