//! Front end for the exact kernels in `macdo-core`: JSON forms, verification
//! suites, golden tables and the command line.

pub mod cli;
pub mod golden;
pub mod json;
pub mod suites;
