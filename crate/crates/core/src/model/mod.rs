//! Words, compositions, tableaux and the orders defined on them.

mod composition;
mod tableau;
pub mod text;
mod word;

pub use composition::{cmp_composition, partitions_of, Composition, Partition};
pub use tableau::{
    class_invariant, cmp_tableau, parikh_tableau, InvariantKey, ParikhVector, Tableau,
};
pub use word::{cmp_word, parikh_word, Word};
