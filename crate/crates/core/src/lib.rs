//! Exact lowest-Landau-level expansion of Laughlin and K-matrix hierarchical
//! quantum Hall wavefunctions, and their single-particle entanglement.
//!
//! The pipeline is
//! [`states`] → [`expand`] (polynomial algebra, Slater projection) →
//! [`lll`] (Fock vectors) → [`entangle`] (density matrix and measures).
//! Hierarchical families pull their quasihole condensate from [`quasihole`].

pub mod cli;
pub mod entangle;
pub mod expand;
pub mod lll;
pub mod quasihole;
pub mod scalar;
pub mod states;

pub use entangle::{modified_measure, EntanglementReport};
pub use lll::FockVector;
pub use states::{Family, FamilySpec, StateError};
