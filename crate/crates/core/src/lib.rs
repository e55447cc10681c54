//! Discrete quantum phase space for odd-dimensional systems.
//!
//! The crate builds the Schwinger unitary pair `(U, V)`, the Hermitian
//! phase-point operator basis `G(j, l)` generated from it, the phase-space
//! mapping of operators, and the discrete Wigner function. The
//! [`continuum`] module scales the discrete grids and compares them with the
//! Cartesian Weyl-Wigner and angular Wigner functions as `N` grows.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod basis;
pub mod cli;
pub mod continuum;
pub mod error;
pub mod io;
pub mod linalg;
pub mod mapping;
pub mod quadrature;
pub mod schwinger;
pub mod verify;
pub mod wigner;

pub use basis::{build_all, build_g, triple_product_kernel, BasisSet, PhasePointLabel};
pub use error::{Error, Result};
pub use linalg::ComplexMatrix;
pub use mapping::{
    commutator_representative, map_operator, product_representative, reconstruct, trace_pair,
    PhaseSpaceFunction, ProductKernel,
};
pub use schwinger::{build_u, build_v, finite_fourier, mod_delta, modular_phase, Dimension, StateVector};
pub use wigner::{
    characteristic, purity_sum, support_count, wigner_density, wigner_fast, wigner_pure,
    CharacteristicGrid, WignerGrid,
};

pub use num_complex::Complex64 as C64;
