//! Closed-form ground state of the complex Morse potential with a
//! position-dependent complex mass, evaluated on the extended phase space
//! `x = x1 + i p2`.
//!
//! The crate is `no_std` and allocation-free; all quantities are pointwise
//! and grid checks stream over [`GridSpec`] points.

#![no_std]

pub mod error;
pub mod grid;
pub mod model;
pub mod phasespace;
pub mod quadrature;
pub mod reality;
pub mod solution;
pub mod verify;

pub use error::{Error, Result};
pub use grid::{evaluate, CellStatus, GridSpec, Quantity};
pub use model::{mass_at, potential_at, scaled_coords, MassKind, MassProfile, MassState, MorseParams};
pub use phasespace::{ComplexValue, PhasePoint};
pub use reality::{reality_roots, special_case_roots, RealityCase, RealityState, RootChoice, SlopeReading};
pub use solution::{
    ansatz_params, classify_region, energy_at, phase_at, psi_at, AnsatzParams, EnergyPair, Region, SpecialCase,
};
