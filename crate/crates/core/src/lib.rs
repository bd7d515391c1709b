//! Exact enumeration of finite Cantorian and bi-Cantorian tableaux.
//!
//! A square tableau is *Cantorian* when none of its row-words can be read
//! along a diagonal after permuting its rows, and *bi-Cantorian* when the
//! same holds for its column-words. This crate decides both properties,
//! classifies tableaux under row/column permutations and per-column letter
//! bijections, computes class sizes by orbit-stabilizer counting, generates
//! canonical class representatives, and counts Cantorian and bi-Cantorian
//! tableaux exactly.

pub mod budget;
mod canon;
pub mod enumeration;
pub mod equivalence;
pub mod error;
pub mod hypergraph;
pub mod matching;
pub mod model;
pub mod oracle;
pub mod permanent;
mod serde_decimal;
pub mod verify;

pub use budget::Budget;
pub use error::{Error, Result};
pub use model::{InvariantKey, Tableau, Word};
