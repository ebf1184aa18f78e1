//! Ascent sequences and related inversion-sequence classes: exhaustive
//! enumeration, Euler-Stirling statistics, the bijections that transport
//! them, structural decompositions, and exact truncated generating
//! functions.

pub mod check;
mod error;

pub mod bijection;
pub mod class;
pub mod decomp;
pub mod enumerate;
pub mod genfun;
pub mod lemmas;
pub mod seq;
pub mod stats;
pub mod table;

pub use class::{is_member, ClassId};
pub use enumerate::{enumerate, Limits};
pub use error::{Error, Result};
pub use seq::{Obj, Perm, PermTransform, Seq};
