//! Finite models of pseudo double categories, the companion calculus, and
//! the lifting of monoidal structure to the horizontal bicategory.

pub mod bicat;
pub mod cell;
pub mod companions;
pub mod error;
pub mod finset;
pub mod fixtures;
pub mod functor;
pub mod htree;
pub mod lifting;
pub mod models;
pub mod monoidal;
pub mod pasting;
pub mod report;
pub mod universe;
pub mod verify;

pub use cell::{DoubleCategory, Enumerable, Frame, FrameOf};
pub use error::{CellError, Result};
pub use monoidal::{Braided, Monoidal};
