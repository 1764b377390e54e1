//! Exact path-ideal and chain-ideal computations for finite posets.

pub mod complex;
pub mod families;
pub mod homology;
pub mod ideal;
pub mod invariants;
pub mod linalg;
pub mod poset;
pub mod verify;
