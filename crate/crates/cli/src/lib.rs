//! Command-line front end for checking finite double categories and
//! lifting their monoidal structure.

pub mod report;
pub mod run;
