//! Exact computation of the label orders ⊑, ⊴ and ≤ for twisted split
//! category algebras: the biset category on a section-closed set of finite
//! groups, and the Brauer algebra.

pub mod biset;
pub mod brauer;
pub mod character;
pub mod cyclotomic;
pub mod error;
pub mod oracle;
pub mod perm;
pub mod relation;
pub mod symmetric;

pub use biset::{build_order, Label, ObjectList};
pub use brauer::{build_brauer_order, BrauerDiagram, BrauerLabel};
pub use character::{character_table, conjugacy_classes, CharacterTable, ClassData};
pub use cyclotomic::CycValue;
pub use error::{Error, Result};
pub use perm::{CayleyGroup, GroupHom, Perm, Section, Subgroup};
pub use relation::OrderRelation;
pub use symmetric::{partitions_of, Partition};

pub use num_rational::BigRational;
