//! Lifting monoidal, braided and symmetric structure from a fibrant
//! monoidal double category to its horizontal bicategory.

pub mod eval;
pub mod expr;
pub mod templates;
pub mod check;

pub use eval::{CheckMode, Level, MonoidalBicategoryData};
pub use check::{lift, lift_braided, lift_monoidal, lift_symmetric, verify_choice_independence, verify_lifted};
