//! Braids, their Thurston types, entropy and conformal module.
//!
//! Three-strand braids are handled exactly through the map
//! `B₃ → SL(2,ℤ)`; larger braids are handled through their reducible
//! structure as cablings of small components.

pub mod b3;
pub mod braid;
pub mod cabling;
pub mod cli;
pub mod error;
pub mod invariants;
pub mod monodromy;
pub mod poly;
pub mod sl2;

pub use b3::{classify_3, conjugate_3, equal_3, invariants_3, is_trivial_3, theta, ThurstonClass3};
pub use braid::{full_twist, garside, BraidWord, Permutation, StrandOrbit};
pub use cabling::{
    extract_component, reducible_invariants, synthesize, ComponentNode, ComponentTree,
};
pub use error::{Error, Result};
pub use invariants::{ExtReal, InvariantPair, Spectral};
pub use sl2::{sl2_conjugate, sl2_decompose, sl2_type, SL2Matrix, SL2Type};
