//! Numerical laboratory for universal symbols of Hermitian elements.
//!
//! A symbol `F: R -> C` is *universal* when `||F(a)|| = |F(a)|` (operator
//! norm equals spectral radius) for every complex unital Banach algebra and
//! every Hermitian element `a`. This crate decides universality up to a
//! declared window and resolution through three evidence tracks:
//!
//! 1. shape necessary conditions on `|F|` (connected minimum set, strict
//!    monotonicity off it, growth, or exact character form when bounded);
//! 2. positive-definite-extension feasibility via Hermitian Toeplitz Gram
//!    sections of the normalized restriction, with replayable rejection
//!    certificates;
//! 3. direct norm-equals-spectral-radius experiments in concrete Banach
//!    algebras (diagonal `l^p`, self-adjoint `l^2`, periodic Fourier
//!    multipliers) through the Fourier-Stieltjes functional calculus.
//!
//! Core numerics are generic over the scalar type via [`scalar::Real`];
//! concrete `f64` aliases live at the crate root.

pub mod algebras;
pub mod calculus;
pub mod harness;
pub mod linalg;
pub mod pd_engine;
pub mod scalar;
pub mod shape;
pub mod symbols;
pub mod tol;

pub use scalar::{Real, C};

/// Default scalar used by the CLI and the acceptance suite.
pub type Scalar = f64;
/// Complex number over the default scalar.
pub type C64 = num_complex::Complex<f64>;

pub type Symbol = symbols::SymbolExpr<Scalar>;
pub type Element = algebras::AlgebraElement<Scalar>;
pub type Measure64 = calculus::Measure<Scalar>;
pub type Verdict = pd_engine::PdVerdict<Scalar>;
