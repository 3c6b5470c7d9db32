//! Exact modular group algebras of small permutation groups.
//!
//! The crate builds `kG` over an explicit finite field, splits it into
//! blocks, finds defect groups through the Brauer map, and computes the
//! Jacobson radical, Loewy series and simple counts of each block. The
//! `bounds` module turns those numbers into pass/fail verdicts against
//! closed-form Loewy length bounds for blocks with abelian defect groups.
//!
//! Everything is exact: scalars live in `GF(p^m)` and no floating point is
//! used anywhere.

#![no_std]

extern crate alloc;

pub mod abelian;
pub mod algebra;
pub mod analysis;
pub mod blocks;
pub mod bounds;
pub mod catalog;
pub mod error;
pub mod field;
pub mod group;
pub mod linalg;
pub mod loewy;
pub mod perm;
pub mod poly;
pub mod radical;

pub use abelian::AbelianShape;
pub use algebra::{AlgElement, AlgebraContext};
pub use analysis::{analyze, Analysis, BlockReport};
pub use blocks::Block;
pub use bounds::{Claim, Status, Verdict};
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use group::{FiniteGroup, Subgroup};
pub use linalg::Subspace;
pub use loewy::LoewyProfile;
pub use perm::Perm;
