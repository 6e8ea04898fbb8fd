//! Quadrant marked mesh pattern statistics over 123- and 132-avoiding permutations.

pub mod dyck;
pub mod error;
pub mod gf;
pub mod mmp;
pub mod oracle;
pub mod perm;
pub mod series;

pub use error::Error;
pub use mmp::{QuadrantCounts, QuadrantSpec, Slot};
pub use perm::{Class, Permutation};
pub use series::{BiPoly, IntPoly, TSeries};
