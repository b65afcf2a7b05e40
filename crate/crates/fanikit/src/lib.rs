//! fanikit: exact-arithmetic computations for rational polyhedral fans,
//! fanifolds, FLTZ skeleta, stratified torus fibrations, dual stratified
//! spaces, tropical hypersurfaces and amoebas, all checkable at desk
//! scale on small examples.
//!
//! Lattice-side computations are exact (arbitrary-precision integers and
//! rationals). Floating point is confined to the amoeba sampler and the
//! finite-difference Poisson verifier.

pub mod rational;
pub mod matrix;
pub mod lattice;
pub mod lp;

pub use matrix::{Cokernel, IntMatrix, SnfDecomposition};
pub use lattice::{quotient_lattice, LatticeError, Sublattice};
pub use rational::{Int, Rat};
