//! EL-labelings of subgroup lattices of finite solvable groups.
//!
//! Given a solvable permutation group and a chief series, this crate
//! enumerates the subgroup lattice, labels each cover relation by the pair
//! (weak separation index, modular label inside the projected section) and
//! exhaustively checks the resulting labeling: the EL property on every
//! interval, the dual labeling, descending chains against chains of
//! complements, and the Möbius number.

pub mod bitset;
mod error;
pub mod labeling;
pub mod perm_group;
pub mod subgroup_lattice;
pub mod verification;

#[cfg(test)]
mod fixtures;

pub use error::{Error, Result};
