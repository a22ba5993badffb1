//! File formats and command-line front end for `fancert-core`.

pub mod cli;
pub mod dot;
pub mod formats;
