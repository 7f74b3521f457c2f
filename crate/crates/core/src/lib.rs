pub mod arith;
pub mod cli;
pub mod error;
pub mod ffield;
pub mod poly;
pub mod polyfam;
pub mod report;
pub mod subsets;
pub mod verdict;
pub mod verify;

pub use error::{Error, Result};
pub use ffield::{Arith, Ext, Fe, Fe2, FieldCtx};
pub use poly::{FqPoly, ZPoly};
pub use polyfam::Family;
pub use verdict::{Status, Verdict};
pub use subsets::{Sign, Subset, SubsetId};
