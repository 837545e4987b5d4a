//! Spectra and energies of the SGB-graph.
//!
//! Closed-form spectra are exact (see [`ExactEigenvalue`]); the Jacobi
//! solver in [`jacobi`] exists to cross-check them on assembled matrices.

pub mod energy;
pub mod exact;
pub mod jacobi;
pub mod spectrum;

pub use energy::{e_le_check, energies, ELeVerdict, EnergyFlags, EnergyReport};
pub use exact::{ExactEigenvalue, Rational};
pub use jacobi::numeric_spectrum;
pub use spectrum::{closed_form_spectrum, match_numeric, numeric_means, SpectrumKind, SpectrumMultiset};
