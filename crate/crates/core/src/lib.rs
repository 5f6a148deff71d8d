//! Join-distributive lattices described by tuples of permutations.
//!
//! Two constructions produce a lattice from permutations of `{1,…,n}`:
//!
//! * [`ej::build_ejlat`] closes the prefix chains of `⟨σ_2,…,σ_k⟩` (plus the
//!   identity chain) under union inside the powerset of `{1,…,n}`;
//! * [`cz::build_czlat`] collects the eligible coordinate tuples of
//!   `⟨π_12,…,π_1k⟩` under the componentwise order.
//!
//! [`equivalence`] carries the explicit isomorphism between
//! `ejlat(σ)` and `czlat(σ⁻¹)`. [`lattice`] is the common analysis substrate
//! (covers, irreducibles, semimodularity, meet-semidistributivity,
//! join-distributivity, isomorphism search), [`trajectories`] decomposes prime
//! intervals into trajectories, [`antimatroid`] models union-closed accessible
//! families and [`enumeration`] runs the small-length census.
//!
//! Indices are 0-based internally. Permutation text, subset labels and tuple
//! coordinates follow the usual 1-based convention on the outside.

pub mod antimatroid;
pub mod cz;
pub mod ej;
pub mod enumeration;
pub mod equivalence;
mod error;
pub mod lattice;
pub mod perm;
pub mod subset;
pub mod trajectories;

pub use error::{Error, Result};
pub use lattice::{FiniteLattice, PrimeInterval};
pub use perm::{PermTuple, Permutation, PiTable};
pub use subset::Subset;

#[cfg(test)]
pub(crate) mod fixtures;
