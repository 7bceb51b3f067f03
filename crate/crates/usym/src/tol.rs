//! Central numeric tolerances. Values are per-design; see module docs of the
//! consumers for how each is applied.

use crate::scalar::Real;

/// Absolute Gram negativity threshold per matrix dimension unit.
pub fn cert_tol<T: Real>() -> T {
    T::of(1e-8)
}

/// Norm-vs-spectral-radius equality tolerance for exact-norm kinds.
pub fn eq_tol<T: Real>() -> T {
    T::of(1e-7)
}

/// Maximum allowed deviation of `||exp(itA)||` from 1 for Hermitian elements.
pub fn herm_tol<T: Real>() -> T {
    T::of(1e-8)
}

/// Relative flatness tolerance for `|F|` in the character detector.
pub fn flat_tol<T: Real>() -> T {
    T::of(1e-7)
}

/// Multiplicativity slack `|G(x+y) - G(x)G(y)|` in the character detector.
pub fn mult_tol<T: Real>() -> T {
    T::of(1e-6)
}

/// Modulus-one and multiplication slack for character consistency checks
/// on Toeplitz samples.
pub fn char_tol<T: Real>() -> T {
    T::of(1e-6)
}

/// Base tolerance for membership in the grid minimum set.
pub fn min_tol_base<T: Real>() -> T {
    T::of(1e-9)
}

/// Required growth factor of `max |F|` across the window schedule.
pub fn growth_factor<T: Real>() -> T {
    T::of(1.5)
}

/// Relative tie tolerance for endpoint base selection.
pub fn tie_tol<T: Real>() -> T {
    T::of(1e-9)
}

/// Eigensolver residual target relative to the matrix norm.
pub fn eig_residual<T: Real>() -> T {
    T::of(1e-10)
}

/// Minimum eigenvector coefficient magnitude kept in a certificate.
pub fn cert_coeff_floor<T: Real>() -> T {
    T::of(1e-6)
}
