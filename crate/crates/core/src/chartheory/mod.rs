//! Exact character theory of finite groups given by multiplication tables:
//! conjugacy classes, cyclotomic character tables, class-function calculus,
//! and central extensions with chi-isotypic families.

pub mod extension;
pub mod group;
pub mod ops;
pub mod table;

pub use extension::CentralExtension;
pub use group::{cyclic_group, FiniteGroupTable, Subgroup};
pub use ops::ClassFunction;
pub use table::{character_table, display_cmp, CharacterTable};
