//! Re-derivation and verification of the classification of invariant
//! strictly almost Kähler structures with J-invariant Ricci tensor on
//! four-dimensional Lie groups.

pub mod ansatz;
pub mod branches;
pub mod conditions;
pub mod isomorphism;
pub mod kahler_einstein;
pub mod normalize;
pub mod reductions;
