//! Concrete Banach algebras and their Hermitian elements: diagonal operators
//! on little-lp, self-adjoint matrices on l2, Fourier multipliers on
//! trigonometric polynomials under the sup norm, and general matrices with a
//! chosen induced norm.

use crate::linalg::{eigenvalues_small, exp_it, herm_eigen, largest_singular_value, CMat};
use crate::scalar::{cis, Real, C};
use crate::symbols::SymbolExpr;
use crate::tol;
use num_complex::Complex;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LpIndex {
    P1,
    P2,
    PInf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NormKind {
    OpL1,
    OpL2,
    OpLinf,
    /// Sup norm on trigonometric polynomials of degree at most N.
    TrigSup(usize),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum ElementKind<T> {
    /// Real diagonal operator on lp, p in {1, 2, inf}.
    DiagLp { p: LpIndex, diag: Vec<T> },
    /// Hermitian matrix acting on l2.
    SelfAdjointL2 { matrix: Vec<Vec<(T, T)>> },
    /// Fourier multiplier on degree-<=N trig polynomials: values m_k for
    /// k = -N..=N stored left to right.
    Multiplier { degree: usize, values: Vec<(T, T)> },
    /// Arbitrary matrix with an explicit norm.
    General { matrix: Vec<Vec<(T, T)>>, norm_kind: NormKind },
}

/// An element of one of the concrete algebras.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgebraElement<T> {
    pub kind: ElementKind<T>,
    pub dim: usize,
}

/// Operator norms are either exact or a sound bracket.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum NormValue<T> {
    Exact(T),
    Bracket { lower: T, upper: T },
}

impl<T: Real> NormValue<T> {
    pub fn lower(&self) -> T {
        match *self {
            NormValue::Exact(v) => v,
            NormValue::Bracket { lower, .. } => lower,
        }
    }

    pub fn upper(&self) -> T {
        match *self {
            NormValue::Exact(v) => v,
            NormValue::Bracket { upper, .. } => upper,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, NormValue::Exact(_))
    }
}

fn rows_to_mat<T: Real>(rows: &[Vec<(T, T)>]) -> CMat<T> {
    CMat::from_fn(rows.len(), rows[0].len(), |i, j| {
        Complex::new(rows[i][j].0, rows[i][j].1)
    })
}

fn mat_to_rows<T: Real>(m: &CMat<T>) -> Vec<Vec<(T, T)>> {
    (0..m.rows)
        .map(|i| (0..m.cols).map(|j| (m[(i, j)].re, m[(i, j)].im)).collect())
        .collect()
}

impl<T: Real> AlgebraElement<T> {
    pub fn diag_lp(p: LpIndex, diag: Vec<T>) -> Self {
        assert!(diag.iter().all(|d| d.is_finite()));
        let dim = diag.len();
        AlgebraElement { kind: ElementKind::DiagLp { p, diag }, dim }
    }

    pub fn self_adjoint(matrix: CMat<T>) -> Self {
        assert!(matrix.is_square());
        assert!(matrix.is_hermitian(T::of(1e-12)), "matrix not Hermitian");
        let dim = matrix.rows;
        AlgebraElement { kind: ElementKind::SelfAdjointL2 { matrix: mat_to_rows(&matrix) }, dim }
    }

    pub fn multiplier(degree: usize, values: Vec<C<T>>) -> Self {
        assert_eq!(values.len(), 2 * degree + 1);
        assert!(values.iter().all(|v| v.re.is_finite() && v.im.is_finite()));
        AlgebraElement {
            kind: ElementKind::Multiplier {
                degree,
                values: values.iter().map(|v| (v.re, v.im)).collect(),
            },
            dim: 2 * degree + 1,
        }
    }

    /// The canonical generator: -i d/dx on degree-<=N polynomials, m_k = k.
    pub fn d_n(degree: usize) -> Self {
        let values =
            (-(degree as i64)..=degree as i64).map(|k| Complex::new(T::of(k as f64), T::zero()));
        Self::multiplier(degree, values.collect())
    }

    pub fn general(matrix: CMat<T>, norm_kind: NormKind) -> Self {
        assert!(matrix.is_square());
        let dim = matrix.rows;
        AlgebraElement { kind: ElementKind::General { matrix: mat_to_rows(&matrix), norm_kind }, dim }
    }

    pub fn matrix(&self) -> Option<CMat<T>> {
        match &self.kind {
            ElementKind::SelfAdjointL2 { matrix } | ElementKind::General { matrix, .. } => {
                Some(rows_to_mat(matrix))
            }
            ElementKind::DiagLp { diag, .. } => {
                Some(CMat::diag(&diag.iter().map(|&d| Complex::new(d, T::zero())).collect::<Vec<_>>()))
            }
            ElementKind::Multiplier { .. } => None,
        }
    }

    pub fn multiplier_values(&self) -> Option<Vec<C<T>>> {
        match &self.kind {
            ElementKind::Multiplier { values, .. } => {
                Some(values.iter().map(|&(re, im)| Complex::new(re, im)).collect())
            }
            _ => None,
        }
    }
}

fn l1_norm<T: Real>(m: &CMat<T>) -> T {
    m.one_norm()
}

fn linf_norm<T: Real>(m: &CMat<T>) -> T {
    m.inf_norm()
}

fn matrix_norm<T: Real>(m: &CMat<T>, kind: NormKind) -> Result<T, String> {
    match kind {
        NormKind::OpL1 => Ok(l1_norm(m)),
        NormKind::OpLinf => Ok(linf_norm(m)),
        NormKind::OpL2 => largest_singular_value(m).map_err(|e| e.to_string()),
        NormKind::TrigSup(_) => Err("TrigSup norm applies to multiplier elements".into()),
    }
}

/// Applies the multiplier to coefficient vector `c_k`, k = -N..=N.
fn apply_multiplier<T: Real>(values: &[C<T>], coeffs: &[C<T>]) -> Vec<C<T>> {
    values.iter().zip(coeffs.iter()).map(|(m, c)| m * c).collect()
}

fn grid_sup<T: Real>(coeffs: &[C<T>], degree: usize, points: usize) -> T {
    let mut best = T::zero();
    let two_pi = T::PI() * T::of(2.0);
    for j in 0..points {
        let x = two_pi * T::of(j as f64) / T::of(points as f64);
        let mut v = Complex::new(T::zero(), T::zero());
        for (idx, c) in coeffs.iter().enumerate() {
            let k = idx as isize - degree as isize;
            v = v + c * cis(T::of(k as f64) * x);
        }
        if v.norm() > best {
            best = v.norm();
        }
    }
    best
}

/// Sound bracket for the sup-norm multiplier operator norm.
///
/// Lower bounds come from test functions with exactly known or provably
/// over-estimated denominators: pure exponentials (ratio |m_k| exactly),
/// cos(Nx) and sin(Nx) (numerator sup known in closed form), and grid-based
/// families where the denominator uses the Bernstein-safe inflation
/// `grid_sup / (1 - N h / 2)` or the coefficient l1 norm, whichever is
/// smaller. The upper bound integrates a de-la-Vallee-Poussin-tapered kernel
/// whose symbol agrees with `m` up to degree N.
pub fn trig_sup_bracket<T: Real>(values: &[C<T>], degree: usize) -> NormValue<T> {
    let n = degree;
    let grid_points = (16 * n).max(64);
    let h = T::PI() * T::of(2.0) / T::of(grid_points as f64);
    let m_at = |k: isize| values[(k + n as isize) as usize];

    // exact candidates
    let mut lower = values.iter().map(|m| m.norm()).fold(T::zero(), T::max);
    if n >= 1 {
        // cos(Nx): image sup = (|m_N| + |m_-N|)/2, source sup = 1
        let edge = (m_at(n as isize).norm() + m_at(-(n as isize)).norm()) * T::of(0.5);
        lower = lower.max(edge);
    }

    // grid-based candidates with sound denominators
    let denom_bound = |coeffs: &[C<T>]| -> T {
        let l1: T = coeffs.iter().map(|c| c.norm()).sum();
        let gs = grid_sup(coeffs, n, grid_points);
        let bernstein_safe = gs / (T::one() - T::of(n as f64) * h * T::of(0.5));
        if T::of(n as f64) * h * T::of(0.5) < T::one() {
            l1.min(bernstein_safe)
        } else {
            l1
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0x7261_7469_6f73);
    let mut candidates: Vec<Vec<C<T>>> = Vec::new();
    // sign pattern of the kernel moduli, Fejer-smoothed
    let fejer: Vec<C<T>> = (0..values.len())
        .map(|idx| {
            let k = idx as isize - n as isize;
            let w = T::one() - T::of(k.unsigned_abs() as f64) / T::of((n + 1) as f64);
            let m = values[idx];
            let phase = if m.norm() > T::of(1e-300) {
                (m / Complex::new(m.norm(), T::zero())).conj()
            } else {
                Complex::new(T::one(), T::zero())
            };
            phase * Complex::new(w, T::zero())
        })
        .collect();
    candidates.push(fejer);
    for _ in 0..6 {
        let c: Vec<C<T>> = (0..values.len())
            .map(|_| {
                let theta = T::of(rng.gen_range(0.0..std::f64::consts::TAU));
                cis(theta)
            })
            .collect();
        candidates.push(c);
    }
    for coeffs in &candidates {
        let image = apply_multiplier(values, coeffs);
        let num = grid_sup(&image, n, grid_points);
        let den = denom_bound(coeffs);
        if den > T::of(1e-300) {
            lower = lower.max(num / den);
        }
    }

    // upper bound: de-la-Vallee-Poussin taper of the clamped symbol out to 2N
    let clamp = |k: isize| -> C<T> {
        if k.unsigned_abs() as usize <= n {
            m_at(k)
        } else if k > 0 {
            m_at(n as isize)
        } else {
            m_at(-(n as isize))
        }
    };
    let kernel_points = (64 * n).max(256);
    let mut l1 = T::zero();
    let two_pi = T::PI() * T::of(2.0);
    for j in 0..kernel_points {
        let x = two_pi * T::of(j as f64) / T::of(kernel_points as f64);
        let mut v = Complex::new(T::zero(), T::zero());
        for k in -(2 * n as isize)..=(2 * n as isize) {
            let w = if k.unsigned_abs() as usize <= n {
                T::one()
            } else {
                T::of((2 * n - k.unsigned_abs() as usize) as f64) / T::of(n as f64)
            };
            v = v + clamp(k) * Complex::new(w, T::zero()) * cis(T::of(k as f64) * x);
        }
        l1 = l1 + v.norm();
    }
    let upper = l1 / T::of(kernel_points as f64);
    NormValue::Bracket { lower, upper: upper.max(lower) }
}

/// Operator norm of an element; exact where the induced norm has a closed
/// form, a sound bracket for the sup-norm multiplier algebra.
pub fn op_norm<T: Real>(a: &AlgebraElement<T>) -> Result<NormValue<T>, String> {
    match &a.kind {
        ElementKind::DiagLp { diag, .. } => {
            Ok(NormValue::Exact(diag.iter().map(|d| d.abs()).fold(T::zero(), T::max)))
        }
        ElementKind::SelfAdjointL2 { matrix } => {
            let m = rows_to_mat(matrix);
            let (eigs, _) = herm_eigen(&m).map_err(|e| e.to_string())?;
            Ok(NormValue::Exact(eigs.iter().map(|e| e.abs()).fold(T::zero(), T::max)))
        }
        ElementKind::Multiplier { degree, values } => {
            let vals: Vec<C<T>> = values.iter().map(|&(re, im)| Complex::new(re, im)).collect();
            Ok(trig_sup_bracket(&vals, *degree))
        }
        ElementKind::General { matrix, norm_kind } => {
            matrix_norm(&rows_to_mat(matrix), *norm_kind).map(NormValue::Exact)
        }
    }
}

/// Spectral radius. Exact for kinds whose spectrum is listed; small general
/// matrices use the characteristic polynomial cross-checked by the Gelfand
/// sequence.
pub fn spectral_radius<T: Real>(a: &AlgebraElement<T>) -> Result<T, String> {
    match &a.kind {
        ElementKind::DiagLp { diag, .. } => {
            Ok(diag.iter().map(|d| d.abs()).fold(T::zero(), T::max))
        }
        ElementKind::Multiplier { values, .. } => Ok(values
            .iter()
            .map(|&(re, im)| Complex::new(re, im).norm())
            .fold(T::zero(), T::max)),
        ElementKind::SelfAdjointL2 { matrix } => {
            let (eigs, _) = herm_eigen(&rows_to_mat(matrix)).map_err(|e| e.to_string())?;
            Ok(eigs.iter().map(|e| e.abs()).fold(T::zero(), T::max))
        }
        ElementKind::General { matrix, norm_kind } => {
            let m = rows_to_mat(matrix);
            if m.rows > 8 {
                return Err("general spectral radius limited to dimension 8".into());
            }
            let eigs = eigenvalues_small(&m).map_err(|e| e.to_string())?;
            let rho = eigs.iter().map(|z| z.norm()).fold(T::zero(), T::max);
            // Gelfand cross-check: min_k ||A^k||^{1/k} upper-bounds rho and
            // converges to it
            let mut gelfand = T::infinity();
            let mut power = m.clone();
            for k in 1..=64usize {
                let nk = matrix_norm(&power, *norm_kind)?;
                if nk <= T::of(1e-300) {
                    gelfand = T::zero();
                    break;
                }
                gelfand = gelfand.min(nk.powf(T::one() / T::of(k as f64)));
                if k < 64 {
                    power = power.matmul(&m);
                }
            }
            let scale = rho.max(gelfand);
            if scale > T::of(1e-6) && (gelfand - rho).abs() > T::of(0.05) * scale {
                return Err(format!(
                    "spectral radius methods disagree: roots {rho}, Gelfand {gelfand}"
                ));
            }
            Ok(rho)
        }
    }
}

/// `exp(itA)` for a matrix, by scaling and squaring.
pub fn matrix_exp<T: Real>(a: &CMat<T>, t: T) -> CMat<T> {
    exp_it(a, t)
}

/// Default Hermitianity grid: 201 points spanning [-10, 10] plus 20 seeded
/// far-field points in [-100, 100].
pub fn default_t_grid<T: Real>(seed: u64) -> Vec<T> {
    let mut grid: Vec<T> =
        (0..201).map(|k| T::of(-10.0) + T::of(0.1) * T::of(k as f64)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..20 {
        grid.push(T::of(rng.gen_range(-100.0..100.0)));
    }
    grid
}

/// Tests `||exp(itA)|| = 1` over the grid; returns the pass flag and the
/// worst deviation. Diagonal and multiplier kinds evaluate in closed form.
pub fn hermitian_check<T: Real>(a: &AlgebraElement<T>, t_grid: &[T]) -> (bool, T) {
    let dev = match &a.kind {
        ElementKind::DiagLp { diag, .. } => {
            // exp(it d) is unimodular for real d: deviation identically 0
            let _ = diag;
            T::zero()
        }
        ElementKind::Multiplier { values, .. } => {
            // exp(itA) is the multiplier e^{it m_k}; for real m_k it is the
            // isometric translation-type operator, deviation 0. Complex m_k
            // give |e^{it m_k}| = e^{-t Im m_k}, a sound lower-bound witness.
            let mut worst = T::zero();
            for &t in t_grid {
                let mut lower = T::zero();
                for &(re, im) in values {
                    let _ = re;
                    lower = lower.max((-t * im).exp());
                }
                worst = worst.max((lower - T::one()).abs());
            }
            worst
        }
        ElementKind::SelfAdjointL2 { matrix } => {
            exp_norm_deviation(&rows_to_mat(matrix), NormKind::OpL2, t_grid)
        }
        ElementKind::General { matrix, norm_kind } => {
            exp_norm_deviation(&rows_to_mat(matrix), *norm_kind, t_grid)
        }
    };
    (dev <= tol::herm_tol::<T>(), dev)
}

fn exp_norm_deviation<T: Real>(m: &CMat<T>, kind: NormKind, t_grid: &[T]) -> T {
    let mut worst = T::zero();
    for &t in t_grid {
        let e = exp_it(m, t);
        let norm = match matrix_norm(&e, kind) {
            Ok(v) => v,
            Err(_) => return T::infinity(),
        };
        worst = worst.max((norm - T::one()).abs());
    }
    worst
}

/// `F(s D_N)`-style element: the multiplier with values `F(s k)`.
pub fn multiplier_apply<T: Real>(f: &SymbolExpr<T>, degree: usize, s: T) -> AlgebraElement<T> {
    assert!(degree >= 1 && s > T::zero());
    let values: Vec<C<T>> = (-(degree as i64)..=degree as i64)
        .map(|k| f.eval(s * T::of(k as f64)))
        .collect();
    AlgebraElement::multiplier(degree, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbols::parse_symbol;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> C<f64> {
        Complex::new(re, im)
    }

    fn mat(rows: Vec<Vec<C<f64>>>) -> CMat<f64> {
        CMat::from_rows(rows)
    }

    #[test]
    fn exact_matrix_norms() {
        let a = mat(vec![vec![c(1.0, 0.0), c(2.0, 0.0)], vec![c(3.0, 0.0), c(4.0, 0.0)]]);
        let linf = op_norm(&AlgebraElement::general(a.clone(), NormKind::OpLinf)).unwrap();
        assert_eq!(linf, NormValue::Exact(7.0));
        let l1 = op_norm(&AlgebraElement::general(a, NormKind::OpL1)).unwrap();
        assert_eq!(l1, NormValue::Exact(6.0));
        let d = mat(vec![vec![c(3.0, 0.0), c(0.0, 0.0)], vec![c(0.0, 0.0), c(-4.0, 0.0)]]);
        let l2 = op_norm(&AlgebraElement::general(d, NormKind::OpL2)).unwrap();
        assert_abs_diff_eq!(l2.lower(), 4.0, epsilon = 1e-9);
    }

    #[test]
    fn spectral_radius_fixtures() {
        let d = AlgebraElement::diag_lp(LpIndex::P2, vec![1.0, -5.0]);
        assert_eq!(spectral_radius(&d).unwrap(), 5.0);
        let m = AlgebraElement::<f64>::d_n(8);
        assert_eq!(spectral_radius(&m).unwrap(), 8.0);
        let jordan = AlgebraElement::general(
            mat(vec![vec![c(0.0, 0.0), c(1.0, 0.0)], vec![c(0.0, 0.0), c(0.0, 0.0)]]),
            NormKind::OpL2,
        );
        assert!(spectral_radius(&jordan).unwrap() < 1e-6);
    }

    #[test]
    fn exp_group_law() {
        let a = mat(vec![
            vec![c(1.0, 0.0), c(0.5, 0.3)],
            vec![c(0.5, -0.3), c(-2.0, 0.0)],
        ]);
        for (t, u) in [(0.7, -2.3), (5.0, 4.9), (-1.0, 1.0)] {
            let lhs = matrix_exp(&a, t + u);
            let rhs = matrix_exp(&a, t).matmul(&matrix_exp(&a, u));
            assert!(lhs.max_entry_dev_from(&rhs) < 1e-10);
        }
        // diag and zero fixtures
        let z = CMat::<f64>::zeros(3, 3);
        assert!(matrix_exp(&z, 2.0).max_entry_dev_from(&CMat::identity(3)) < 1e-15);
        let pauli = mat(vec![vec![c(0.0, 0.0), c(1.0, 0.0)], vec![c(1.0, 0.0), c(0.0, 0.0)]]);
        let e = matrix_exp(&pauli, std::f64::consts::PI);
        assert!(e.max_entry_dev_from(&CMat::identity(2).scaled(c(-1.0, 0.0))) < 1e-12);
    }

    #[test]
    fn hermitian_check_discriminates() {
        let grid = default_t_grid::<f64>(42);
        let d = AlgebraElement::diag_lp(LpIndex::PInf, vec![1.0, -1.0]);
        let (ok, dev) = hermitian_check(&d, &grid);
        assert!(ok && dev == 0.0);

        let sa = AlgebraElement::self_adjoint(mat(vec![
            vec![c(0.3, 0.0), c(0.2, 0.7), c(0.0, -0.1), c(1.0, 0.0)],
            vec![c(0.2, -0.7), c(-1.0, 0.0), c(0.4, 0.0), c(0.0, 0.2)],
            vec![c(0.0, 0.1), c(0.4, 0.0), c(2.0, 0.0), c(0.5, 0.0)],
            vec![c(1.0, 0.0), c(0.0, -0.2), c(0.5, 0.0), c(0.1, 0.0)],
        ]));
        let (ok, dev) = hermitian_check(&sa, &grid);
        assert!(ok, "deviation {dev}");
        assert!(dev <= 1e-8);

        let (ok, dev) = hermitian_check(&AlgebraElement::<f64>::d_n(6), &grid);
        assert!(ok && dev == 0.0);

        // Jordan block fails: ||exp(iA)|| = ||I + iA|| is the golden ratio
        let jordan = AlgebraElement::general(
            mat(vec![vec![c(0.0, 0.0), c(1.0, 0.0)], vec![c(0.0, 0.0), c(0.0, 0.0)]]),
            NormKind::OpL2,
        );
        let (ok, dev) = hermitian_check(&jordan, &[1.0]);
        assert!(!ok);
        // SVD oracle: largest singular value of [[1, i], [0, 1]] solves
        // s^4 - 3 s^2 + 1 = 0, s = sqrt((3+sqrt 5)/2) = (1+sqrt 5)/2
        let phi = 0.5 * (1.0 + 5.0f64.sqrt());
        assert!(dev >= 0.6);
        assert_abs_diff_eq!(dev, phi - 1.0, epsilon = 1e-9);
    }

    #[test]
    fn hermitian_elements_have_real_spectrum() {
        let grid = default_t_grid::<f64>(7);
        let sa = AlgebraElement::self_adjoint(mat(vec![
            vec![c(1.0, 0.0), c(0.0, 0.9)],
            vec![c(0.0, -0.9), c(-0.5, 0.0)],
        ]));
        let (ok, _) = hermitian_check(&sa, &grid);
        assert!(ok);
        let m = sa.matrix().unwrap();
        for z in eigenvalues_small(&m).unwrap() {
            assert!(z.im.abs() < 1e-8);
        }
    }

    #[test]
    fn bernstein_anchor() {
        // lower bound of ||D_N|| from cos(Nx) is exactly N = spectral radius
        for n in [4usize, 8, 16] {
            let d = AlgebraElement::<f64>::d_n(n);
            let bracket = op_norm(&d).unwrap();
            assert_eq!(bracket.lower(), n as f64, "lower bound for N={n}");
            assert!(bracket.upper() >= n as f64);
            assert_eq!(spectral_radius(&d).unwrap(), n as f64);
        }
    }

    #[test]
    fn multiplier_apply_fixtures() {
        let d = multiplier_apply(&parse_symbol::<f64>("x").unwrap(), 5, 1.0);
        assert_eq!(d, AlgebraElement::d_n(5));

        let sq = multiplier_apply(&parse_symbol::<f64>("x^2").unwrap(), 3, 1.0);
        let vals = sq.multiplier_values().unwrap();
        let expect = [9.0, 4.0, 1.0, 0.0, 1.0, 4.0, 9.0];
        for (v, e) in vals.iter().zip(expect.iter()) {
            assert_abs_diff_eq!(v.re, *e, epsilon = 1e-12);
        }
        assert_eq!(spectral_radius(&sq).unwrap(), 9.0);

        // translation by 1: the bracket must contain 1
        let tr = multiplier_apply(&parse_symbol::<f64>("exp(1i*x)").unwrap(), 8, 1.0);
        let bracket = op_norm(&tr).unwrap();
        assert!(bracket.lower() <= 1.0 + 1e-9, "lower {}", bracket.lower());
        assert!((bracket.lower() - 1.0).abs() < 1e-9);
        assert!(bracket.upper() >= 1.0);
    }

    #[test]
    fn trig_lower_bounds_never_exceed_rho_for_characters() {
        // for universal symbols the norm equals rho; sound lower bounds must
        // respect it
        for s in [0.3f64, 1.0, 2.2] {
            let f = parse_symbol::<f64>("exp(1i*x)").unwrap();
            let e = multiplier_apply(&f, 16, s);
            let bracket = op_norm(&e).unwrap();
            assert!(bracket.lower() <= 1.0 + 1e-9, "s={s} lower {}", bracket.lower());
        }
    }

    #[test]
    fn submultiplicative_exact_norms() {
        let a = mat(vec![vec![c(1.0, 0.2), c(-2.0, 1.0)], vec![c(0.0, 3.0), c(0.5, 0.0)]]);
        let b = mat(vec![vec![c(0.3, -1.0), c(2.0, 0.0)], vec![c(1.0, 1.0), c(-0.7, 0.4)]]);
        let ab = a.matmul(&b);
        for kind in [NormKind::OpL1, NormKind::OpL2, NormKind::OpLinf] {
            let na = matrix_norm(&a, kind).unwrap();
            let nb = matrix_norm(&b, kind).unwrap();
            let nab = matrix_norm(&ab, kind).unwrap();
            assert!(nab <= na * nb * (1.0 + 1e-12), "{kind:?}");
        }
    }

    #[test]
    fn element_json_roundtrip() {
        let e = AlgebraElement::self_adjoint(mat(vec![
            vec![c(1.0, 0.0), c(0.0, 0.5)],
            vec![c(0.0, -0.5), c(2.0, 0.0)],
        ]));
        let json = serde_json::to_string(&e).unwrap();
        let back: AlgebraElement<f64> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, e);
    }
}
