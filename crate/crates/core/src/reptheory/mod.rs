//! Exact character theory for finite permutation groups: conjugacy classes,
//! cyclotomic character tables, symmetric-group characters, induction and
//! restriction, and effectiveness tests.

pub mod classfn;
pub mod cyclotomic;
pub mod dixon;
pub mod modp;
pub mod perm;
pub mod symmetric;

pub use classfn::{induce, induce_with_transversal, restrict, CharacterTable, ClassFunction, VirtualCharacter};
pub use cyclotomic::Cyclotomic;
pub use dixon::{character_table, character_table_cached};
pub use perm::{ConjugacyClass, PermGroup, Permutation};
pub use symmetric::{partitions, symmetric_character, symmetric_character_table};
