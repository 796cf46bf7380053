//! Exact linear-binomial detection for colored Gaussian cycle models.
//!
//! A colored cycle fixes equalities among the entries of a symmetric
//! concentration matrix `K`. Every covariance is `sigma_ij = N_ij / det K`
//! for a polynomial numerator `N_ij`, so `sigma_ij - sigma_xy` vanishes on
//! the model exactly when `N_ij = N_xy`. This crate computes those
//! numerators symbolically, finds every such binomial, and checks whether a
//! dihedral symmetry of the coloring accounts for it.
//!
//! Modules build on each other bottom-up: [`poly`] → [`model`] →
//! [`determinant`] → [`covariance`] → [`symmetry`] → [`ideal`], with
//! [`configs`] and [`search`] on top, and [`cli`] wiring it all together.

pub mod cli;
pub mod configs;
pub mod covariance;
pub mod determinant;
pub mod error;
pub mod ideal;
pub mod model;
pub mod poly;
pub mod search;
pub mod symmetry;
pub mod verify;

pub use covariance::{
    adjugate_oracle, adjugate_oracle_cycle, sigma_numerator, CovarianceNumerator,
};
pub use determinant::{
    det_general, det_path_disjoint, det_path_recurrence, vertex_degree_parity, ConcentrationView,
    Parity,
};
pub use error::{Error, Result};
pub use model::{ColoredCycle, ColoredGraph, ColoredObject, ColoredPath, Encoding, Labels};
pub use poly::{Monomial, Polynomial, VariableId};
pub use symmetry::{symmetries, DihedralElement, LinearBinomial};
