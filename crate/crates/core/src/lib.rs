//! Commuting conjugacy class graphs of finite groups and the spectra and
//! energies of their common-neighborhood matrices.
//!
//! The pipeline goes group table -> conjugacy classes -> CCC-graph ->
//! CN / CNL / CNSL matrices -> exact spectra -> energies, and the
//! [`closed_form`] module evaluates the family formulas the pipeline is
//! checked against.

pub mod analysis;
pub mod classes;
pub mod classify;
pub mod closed_form;
pub mod error;
pub mod family;
pub mod figures;
pub mod graph;
pub mod group;
pub mod jacobi;
pub mod matrix;
pub mod par;
pub mod rational;
pub mod spectra;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};
