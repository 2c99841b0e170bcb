//! Exact and floating verification of the Pauli group, its presentations,
//! free actions on the 3-sphere, and pseudo-fermionic realizations.

pub mod group;
pub mod numeric;
pub mod presentation;
pub mod pseudo_fermion;
pub mod report;
pub mod sphere;
pub mod suites;
