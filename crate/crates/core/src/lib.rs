//! Numerical spectral theory for λ-Toeplitz operators on the Hardy space.
//!
//! A λ-Toeplitz operator satisfies `⟨T e_{m+1}, e_{n+1}⟩ = λ⟨T e_m, e_n⟩`
//! and is determined by a symbol `φ ~ Σ a_n e^{inθ}`. For `λ` a primitive
//! `q`-th root of unity this crate computes
//!
//! * essential spectra and Fredholm indices from the product symbol
//!   `φ_{λ̄+} = ∏_{j<q} φ_{λ̄,+}∘τ̄^j` ([`spectra`]),
//! * full spectra for analytic symbols, `{μ : μ^q ∈ cl φ̂_{λ̄+}(D)}`,
//! * spectra of weighted composition operators with finite-order elliptic
//!   automorphisms, by conjugating to a rotation ([`wco`]),
//!
//! and cross-checks all of it against finite-section matrices ([`matrix`]).

pub mod cli;
pub mod matrix;
pub mod spectra;
pub mod symbol;
pub mod wco;

pub use num_complex::Complex64;

pub use matrix::{DenseOperator, MatrixError};
pub use spectra::{SpectralClassification, SpectralKind, SpectralProblem, SpectraError};
pub use symbol::{FourierSymbol, RationalRotation, SymbolError};
pub use wco::{MoebiusAutomorphism, WcoError};
