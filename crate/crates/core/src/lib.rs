//! Exact computations with the duality functors of double and triple vector bundles.

pub mod concrete;
pub mod group;
#[cfg(test)]
mod invariants;
pub mod perm;
pub mod symbolic;
pub mod verify;
pub mod word;
