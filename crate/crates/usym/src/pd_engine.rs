//! Positive-definiteness engine: forced normalization of a symbol at the
//! modulus maximum of an interval, Hermitian Toeplitz finite sections, and
//! rejection certificates that replay against fresh symbol evaluations.

use crate::linalg::{herm_min_eigenpair, CMat};
use crate::scalar::{Real, C};
use crate::shape::{shape_verdict, ShapeVerdict};
use crate::symbols::SymbolExpr;
use crate::tol;
use num_complex::Complex;
use serde::{Deserialize, Serialize};

/// Whether the working interval was mirrored because the modulus maximum sat
/// at the right endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Left,
    Right,
}

/// Samples of the normalized symbol `psi(x) = F(x + base)/F(base)` on an
/// equispaced grid of `[0, beta - alpha]` (mirrored when the base is the
/// right endpoint).
#[derive(Debug, Clone, PartialEq)]
pub struct ToeplitzSamples<T> {
    pub base: T,
    pub interval: (T, T),
    pub h: T,
    /// `psi(j h)` for `j = 0..=n`; entry 0 is exactly 1.
    pub first_row: Vec<C<T>>,
    pub orientation: Orientation,
}

impl<T: Real> ToeplitzSamples<T> {
    /// Number of grid steps (matrix dimension is `n() + 1`).
    pub fn n(&self) -> usize {
        self.first_row.len() - 1
    }

    /// Hermitian extension: `psi(-x) = conj(psi(x))`.
    pub fn psi_at(&self, j: isize) -> C<T> {
        if j >= 0 {
            self.first_row[j as usize]
        } else {
            self.first_row[(-j) as usize].conj()
        }
    }

    /// The Gram matrix `G[j][k] = psi((j-k) h)`, Hermitian by construction.
    pub fn gram(&self) -> CMat<T> {
        let m = self.first_row.len();
        CMat::from_fn(m, m, |j, k| self.psi_at(j as isize - k as isize))
    }
}

/// Signals from [`normalize_at_max`] that bypass the Gram stage.
#[derive(Debug, Clone, PartialEq)]
pub enum NormalizeSignal<T> {
    /// |F| vanishes on the whole grid: the extension problem is trivial.
    ZeroMaximum,
    /// |F| peaks strictly inside the interval — already enough to reject on
    /// shape grounds.
    InteriorMaximum { x: T, value: T },
}

/// Rejection certificate: points and coefficients for which the quadratic
/// form of the forced normalization is negative.
///
/// `base` and `mirrored` pin down the normalization so the form can be
/// replayed from the symbol alone.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GramCertificate<T> {
    pub points: Vec<T>,
    pub coeffs_re: Vec<T>,
    pub coeffs_im: Vec<T>,
    pub form_value: T,
    pub base: T,
    pub mirrored: bool,
}

impl<T: Real> GramCertificate<T> {
    pub fn coeffs(&self) -> Vec<C<T>> {
        self.coeffs_re
            .iter()
            .zip(self.coeffs_im.iter())
            .map(|(&re, &im)| Complex::new(re, im))
            .collect()
    }

    pub fn coeff_norm_sq(&self) -> T {
        self.coeffs().iter().map(|c| c.norm_sqr()).sum()
    }

    /// Recomputes the quadratic form from fresh evaluations of `f`, not from
    /// stored samples.
    pub fn replay(&self, f: &SymbolExpr<T>) -> T {
        let fb = f.eval(self.base);
        let sgn = if self.mirrored { -T::one() } else { T::one() };
        let psi = |d: T| -> C<T> {
            if d >= T::zero() {
                f.eval(self.base + sgn * d) / fb
            } else {
                (f.eval(self.base - sgn * d) / fb).conj()
            }
        };
        let coeffs = self.coeffs();
        let mut form = Complex::new(T::zero(), T::zero());
        for (j, &xj) in self.points.iter().enumerate() {
            for (k, &xk) in self.points.iter().enumerate() {
                form = form + psi(xj - xk) * coeffs[j] * coeffs[k].conj();
            }
        }
        form.re
    }
}

/// Stage verdict of the interval extension test.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum PdVerdict<T> {
    AcceptUpTo { w_max: T, n_max: usize },
    RejectShape { reason: String },
    RejectGram { certificate: GramCertificate<T>, w: T, n: usize },
    Inconclusive { reason: String },
}

impl<T: Real> PdVerdict<T> {
    pub fn is_accept(&self) -> bool {
        matches!(self, PdVerdict::AcceptUpTo { .. })
    }
}

/// Per-(window, resolution) evidence retained alongside the verdict.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StageRecord<T> {
    pub w: T,
    pub n: usize,
    /// Smallest Gram eigenvalue observed over the tested bases; `None` when
    /// the stage short-circuited (zero maximum or sufficiency certificate).
    pub min_eig: Option<T>,
    pub bases_tested: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PdScan<T> {
    pub verdict: PdVerdict<T>,
    pub stages: Vec<StageRecord<T>>,
}

/// The escalation schedule used when nothing is specified: sub-unit windows
/// first (where short-range rejections live), then geometric growth.
pub fn default_schedule<T: Real>() -> Vec<(T, usize)> {
    vec![
        (T::of(0.5), 32),
        (T::of(1.0), 64),
        (T::of(2.0), 64),
        (T::of(4.0), 128),
        (T::of(8.0), 256),
        (T::of(16.0), 512),
    ]
}

/// Extended schedule for regression escalation, out to W = 32, n = 1024.
pub fn escalation_schedule<T: Real>() -> Vec<(T, usize)> {
    vec![
        (T::of(0.5), 64),
        (T::of(1.0), 128),
        (T::of(2.0), 256),
        (T::of(4.0), 512),
        (T::of(8.0), 1024),
        (T::of(16.0), 1024),
        (T::of(32.0), 1024),
    ]
}

fn build_samples<T: Real>(
    f: &SymbolExpr<T>,
    interval: (T, T),
    n: usize,
    base_right: bool,
) -> ToeplitzSamples<T> {
    let (a, b) = interval;
    let h = (b - a) / T::of(n as f64);
    let (base, sgn, orientation) = if base_right {
        (b, -T::one(), Orientation::Right)
    } else {
        (a, T::one(), Orientation::Left)
    };
    let fb = f.eval(base);
    let mut first_row: Vec<C<T>> = (0..=n)
        .map(|j| f.eval(base + sgn * h * T::of(j as f64)) / fb)
        .collect();
    first_row[0] = Complex::new(T::one(), T::zero());
    ToeplitzSamples { base, interval, h, first_row, orientation }
}

fn endpoint_analysis<T: Real>(
    f: &SymbolExpr<T>,
    interval: (T, T),
    n: usize,
) -> Result<(bool, bool), NormalizeSignal<T>> {
    let (a, b) = interval;
    assert!(b > a && n >= 2);
    let h = (b - a) / T::of(n as f64);
    let vals: Vec<T> = (0..=n).map(|j| f.abs_at(a + h * T::of(j as f64))).collect();
    let vmax = vals.iter().cloned().fold(T::zero(), T::max);
    if vmax <= T::of(1e-300) {
        return Err(NormalizeSignal::ZeroMaximum);
    }
    let (va, vb) = (vals[0], vals[n]);
    let emax = va.max(vb);
    // interior maximum: strictly above both endpoints beyond grid slack
    let mut arg = 0;
    let mut imax = T::neg_infinity();
    for j in 1..n {
        if vals[j] > imax {
            imax = vals[j];
            arg = j;
        }
    }
    if arg > 0 {
        let slope = ((vals[arg] - vals[arg - 1]).abs() / h)
            .max((vals[arg + 1] - vals[arg]).abs() / h);
        if imax > emax + tol::tie_tol::<T>() * vmax + h * slope {
            return Err(NormalizeSignal::InteriorMaximum {
                x: a + h * T::of(arg as f64),
                value: imax,
            });
        }
    }
    let tie = (va - vb).abs() <= tol::tie_tol::<T>() * vmax;
    let base_right = !tie && vb > va;
    Ok((tie, base_right))
}

/// Forced normalization at the endpoint of the interval where |F| peaks
/// (ties broken toward the left endpoint; the interval is mirrored when the
/// peak is on the right).
pub fn normalize_at_max<T: Real>(
    f: &SymbolExpr<T>,
    interval: (T, T),
    n: usize,
) -> Result<ToeplitzSamples<T>, NormalizeSignal<T>> {
    let (_, base_right) = endpoint_analysis(f, interval, n)?;
    Ok(build_samples(f, interval, n, base_right))
}

/// Like [`normalize_at_max`] but returns both orientations when the endpoint
/// moduli tie: a rejection is only sound if every admissible base fails.
pub fn normalize_bases<T: Real>(
    f: &SymbolExpr<T>,
    interval: (T, T),
    n: usize,
) -> Result<Vec<ToeplitzSamples<T>>, NormalizeSignal<T>> {
    let (tie, base_right) = endpoint_analysis(f, interval, n)?;
    if tie {
        Ok(vec![build_samples(f, interval, n, false), build_samples(f, interval, n, true)])
    } else {
        Ok(vec![build_samples(f, interval, n, base_right)])
    }
}

/// Minimal eigenpair of the sample Gram matrix.
pub fn gram_min_eig<T: Real>(t: &ToeplitzSamples<T>) -> Result<(T, Vec<C<T>>), String> {
    let g = t.gram();
    let m = g.rows;
    debug_assert!(g.is_hermitian(T::zero()));
    herm_min_eigenpair(&g, -tol::cert_tol::<T>() * T::of(m as f64))
        .map_err(|e| e.to_string())
}

/// Max violation of the two-point necessary inequality
/// `|psi(x1) - psi(x2)|^2 <= 2 |1 - Re psi(x1 - x2)|` over the given index
/// pairs; a cheap filter that never exceeds ~0 for true PD samples.
pub fn necessary_inequality_check<T: Real>(
    t: &ToeplitzSamples<T>,
    pairs: &[(usize, usize)],
) -> T {
    let mut worst = T::neg_infinity();
    for &(j, k) in pairs {
        let lhs = (t.psi_at(j as isize) - t.psi_at(k as isize)).norm_sqr();
        let rhs = T::of(2.0) * (T::one() - t.psi_at(j as isize - k as isize).re).abs();
        let v = lhs - rhs;
        if v > worst {
            worst = v;
        }
    }
    worst
}

/// Character consistency: wherever |psi| returns to 1, psi must act
/// multiplicatively. Returns `(x, y, deviation)` triples above tolerance;
/// empty output is consistency.
pub fn character_check<T: Real>(t: &ToeplitzSamples<T>) -> Vec<(T, T, T)> {
    let n = t.n() as isize;
    let ctol = tol::char_tol::<T>();
    let mut out = Vec::new();
    let peaks: Vec<isize> =
        (-n..=n).filter(|&j| t.psi_at(j).norm() >= T::one() - ctol).collect();
    for &j in &peaks {
        for k in -n..=n {
            let s = j + k;
            if s < -n || s > n {
                continue;
            }
            let dev = (t.psi_at(s) - t.psi_at(j) * t.psi_at(k)).norm();
            if dev > ctol {
                out.push((T::of(j as f64) * t.h, T::of(k as f64) * t.h, dev));
            }
        }
    }
    out
}

/// Sufficiency shortcut: real, nonnegative, nonincreasing, discretely convex
/// samples always extend positive-definitely.
pub fn polya_certificate<T: Real>(t: &ToeplitzSamples<T>) -> bool {
    let eps = T::of(1e-10);
    let row = &t.first_row;
    if row.iter().any(|c| c.im.abs() > eps || c.re < -eps) {
        return false;
    }
    let re: Vec<T> = row.iter().map(|c| c.re).collect();
    if re.windows(2).any(|w| w[1] > w[0] + eps) {
        return false;
    }
    re.windows(3).all(|w| w[0] - T::of(2.0) * w[1] + w[2] >= -eps)
}

fn extract_certificate<T: Real>(
    samples: &ToeplitzSamples<T>,
    eigvec: &[C<T>],
    f: &SymbolExpr<T>,
) -> Option<GramCertificate<T>> {
    let floor = tol::cert_coeff_floor::<T>();
    let mut points = Vec::new();
    let mut coeffs_re = Vec::new();
    let mut coeffs_im = Vec::new();
    for (j, c) in eigvec.iter().enumerate() {
        if c.norm() > floor {
            points.push(samples.h * T::of(j as f64));
            // the form convention pairs c_j with the positive lag, so the
            // eigenvector enters conjugated
            coeffs_re.push(c.re);
            coeffs_im.push(-c.im);
        }
    }
    if points.is_empty() {
        return None;
    }
    let mut cert = GramCertificate {
        points,
        coeffs_re,
        coeffs_im,
        form_value: T::zero(),
        base: samples.base,
        mirrored: samples.orientation == Orientation::Right,
    };
    // the stored form value comes from fresh evaluations of F, so replays
    // match it to rounding
    let form = cert.replay(f);
    if form >= -tol::cert_tol::<T>() * cert.coeff_norm_sq() {
        return None;
    }
    cert.form_value = form;
    Some(cert)
}

fn shape_reason<T: Real>(v: &ShapeVerdict<T>) -> String {
    let mut parts = Vec::new();
    if !v.connected {
        parts.push("minimum set of |F| is disconnected");
    }
    if !v.strictly_monotone_off_min {
        parts.push("|F| has an interior relative maximum off the minimum set");
    }
    if !v.growth_witnessed {
        parts.push("|F| shows no growth across expanding windows");
    }
    if v.bounded_exponential.is_none() {
        parts.push("and F is not a character");
    }
    parts.join("; ")
}

/// Full interval scan: shape gate first, then Gram finite sections per stage
/// at the scheduled resolution and its doubling, testing every tied base.
pub fn pd_scan<T: Real>(f: &SymbolExpr<T>, schedule: &[(T, usize)]) -> PdScan<T> {
    assert!(!schedule.is_empty());
    let mut stages = Vec::new();

    let sv = shape_verdict(f, schedule);
    if !sv.passes() {
        return PdScan {
            verdict: PdVerdict::RejectShape { reason: shape_reason(&sv) },
            stages,
        };
    }

    for &(w, n) in schedule {
        for res in [n, 2 * n] {
            let bases = match normalize_bases(f, (-w, w), res) {
                Ok(b) => b,
                Err(NormalizeSignal::ZeroMaximum) => {
                    stages.push(StageRecord { w, n: res, min_eig: None, bases_tested: 0 });
                    continue;
                }
                Err(NormalizeSignal::InteriorMaximum { x, value }) => {
                    return PdScan {
                        verdict: PdVerdict::RejectShape {
                            reason: format!(
                                "|F| has an interior maximum {value} at x = {x} inside [-{w}, {w}]"
                            ),
                        },
                        stages,
                    };
                }
            };
            let m = res + 1;
            let threshold = -tol::cert_tol::<T>() * T::of(m as f64);
            let mut all_fail = true;
            let mut stage_min: Option<T> = None;
            let mut certificate = None;
            let mut tested = 0;
            for samples in &bases {
                if polya_certificate(samples) {
                    all_fail = false;
                    break;
                }
                tested += 1;
                let (min_eig, vec) = match gram_min_eig(samples) {
                    Ok(p) => p,
                    Err(e) => {
                        return PdScan {
                            verdict: PdVerdict::Inconclusive {
                                reason: format!("eigensolver at W={w}, n={res}: {e}"),
                            },
                            stages,
                        };
                    }
                };
                stage_min = Some(stage_min.map_or(min_eig, |s| s.min(min_eig)));
                if min_eig >= threshold {
                    all_fail = false;
                    break;
                }
                match extract_certificate(samples, &vec, f) {
                    Some(c) => certificate = Some(c),
                    None => {
                        return PdScan {
                            verdict: PdVerdict::Inconclusive {
                                reason: format!(
                                    "negative eigenvalue {min_eig} at W={w}, n={res} did not \
                                     re-verify against fresh evaluations"
                                ),
                            },
                            stages,
                        };
                    }
                }
            }
            stages.push(StageRecord { w, n: res, min_eig: stage_min, bases_tested: tested });
            if all_fail && tested == bases.len() {
                if let Some(certificate) = certificate {
                    return PdScan {
                        verdict: PdVerdict::RejectGram { certificate, w, n: res },
                        stages,
                    };
                }
            }
        }
    }
    let &(w_max, n_max) = schedule.last().unwrap();
    PdScan { verdict: PdVerdict::AcceptUpTo { w_max, n_max }, stages }
}

/// Schedule verdict without the stage evidence.
pub fn pd_interval_verdict<T: Real>(f: &SymbolExpr<T>, schedule: &[(T, usize)]) -> PdVerdict<T> {
    pd_scan(f, schedule).verdict
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbols::parse_symbol;
    use approx::assert_abs_diff_eq;

    type S = SymbolExpr<f64>;

    fn quad(t: f64) -> S {
        parse_symbol(&format!("-x^2+2i*x+{t}")).unwrap()
    }

    #[test]
    fn normalize_fixtures() {
        // F = x on [-2, 2]: endpoint tie, base -2, psi = 1 - x/2 on [0, 4]
        let f = S::var();
        let t = normalize_at_max(&f, (-2.0, 2.0), 8).unwrap();
        assert_eq!(t.orientation, Orientation::Left);
        assert_eq!(t.base, -2.0);
        assert_eq!(t.first_row[0], Complex::new(1.0, 0.0));
        assert_abs_diff_eq!(t.first_row[8].re, -1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(t.first_row[4].re, 0.0, epsilon = 1e-14);

        // F = x^2 + 1 on [-1, 3]: peak at the right endpoint, mirrored
        let g = parse_symbol::<f64>("x^2+1").unwrap();
        let t = normalize_at_max(&g, (-1.0, 3.0), 64).unwrap();
        assert_eq!(t.orientation, Orientation::Right);
        assert_eq!(t.base, 3.0);

        // characters normalize to themselves from either base
        let e = parse_symbol::<f64>("exp(2i*x)").unwrap();
        let t = normalize_at_max(&e, (-1.0, 1.0), 32).unwrap();
        for (j, v) in t.first_row.iter().enumerate() {
            let x = t.h * j as f64;
            let sgn = if t.orientation == Orientation::Right { -1.0 } else { 1.0 };
            let expect = Complex::from_polar(1.0, 2.0 * sgn * x);
            assert!((v - expect).norm() < 1e-12);
        }
    }

    #[test]
    fn normalize_signals() {
        let zero = parse_symbol::<f64>("0").unwrap();
        assert_eq!(
            normalize_at_max(&zero, (-1.0, 1.0), 16),
            Err(NormalizeSignal::ZeroMaximum)
        );
        // |cos| peaks at the interior point 0 of [-1, 1]
        let cos = parse_symbol::<f64>("0.5*exp(1i*x)+0.5*exp(-1i*x)").unwrap();
        assert!(matches!(
            normalize_at_max(&cos, (-1.0, 1.0), 64),
            Err(NormalizeSignal::InteriorMaximum { .. })
        ));
    }

    #[test]
    fn gram_rank_one_and_cosine() {
        // psi = 1: eigenvalues {m, 0, ..., 0}
        let ones = ToeplitzSamples {
            base: 0.0,
            interval: (0.0, 1.0),
            h: 0.125,
            first_row: vec![Complex::new(1.0, 0.0); 9],
            orientation: Orientation::Left,
        };
        let (me, _): (f64, _) = gram_min_eig(&ones).unwrap();
        assert!(me.abs() < 1e-10);

        // character samples: rank-1 again
        let h = 0.3;
        let ch = ToeplitzSamples {
            base: 0.0,
            interval: (0.0, 1.0),
            h,
            first_row: (0..=12).map(|j| Complex::from_polar(1.0, 1.7 * h * j as f64)).collect(),
            orientation: Orientation::Left,
        };
        let (me, _) = gram_min_eig(&ch).unwrap();
        assert!(me.abs() < 1e-10);

        // cos samples are PD (half-weight atoms at +-1)
        let cos = ToeplitzSamples {
            base: 0.0,
            interval: (0.0, 1.0),
            h,
            first_row: (0..=16).map(|j| Complex::new((h * j as f64).cos(), 0.0)).collect(),
            orientation: Orientation::Left,
        };
        let (me, _) = gram_min_eig(&cos).unwrap();
        assert!(me >= -1e-10);
    }

    #[test]
    fn accepts_universal_fixtures() {
        for src in ["x", "-x^2+2i*x+1"] {
            let f = parse_symbol::<f64>(src).unwrap();
            let scan = pd_scan(&f, &default_schedule::<f64>());
            assert!(scan.verdict.is_accept(), "{src}: {:?}", scan.verdict);
            for st in &scan.stages {
                if let Some(me) = st.min_eig {
                    assert!(me >= -1e-8 * (st.n + 1) as f64, "{src} stage {st:?}");
                }
            }
        }
    }

    #[test]
    fn rejects_supercritical_quadratic_at_frozen_stage() {
        // frozen regression: first rejecting stage of the default schedule is
        // the sub-unit window W = 0.5 (min_eig about -0.072 at n = 32)
        let f = quad(1.99);
        let scan = pd_scan(&f, &default_schedule::<f64>());
        match &scan.verdict {
            PdVerdict::RejectGram { certificate, w, n } => {
                assert_eq!(*w, 0.5);
                assert_eq!(*n, 32);
                let replayed = certificate.replay(&f);
                assert!(replayed < -1e-8 * certificate.coeff_norm_sq());
                let rel = (replayed - certificate.form_value).abs()
                    / certificate.form_value.abs();
                assert!(rel <= 1e-10, "replay drift {rel}");
            }
            other => panic!("expected Gram rejection, got {other:?}"),
        }
    }

    #[test]
    fn certificate_serializes_with_split_coefficients() {
        let f = quad(1.99);
        let scan = pd_scan(&f, &default_schedule::<f64>());
        let PdVerdict::RejectGram { certificate, .. } = scan.verdict else {
            panic!("expected rejection");
        };
        let json = serde_json::to_string(&certificate).unwrap();
        for key in ["points", "coeffs_re", "coeffs_im", "form_value", "base", "mirrored"] {
            assert!(json.contains(key), "missing {key} in {json}");
        }
        let back: GramCertificate<f64> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, certificate);
    }

    #[test]
    fn shape_stage_rejections() {
        let sched = default_schedule::<f64>();
        assert!(matches!(
            pd_interval_verdict(&parse_symbol::<f64>("x^2-1").unwrap(), &sched),
            PdVerdict::RejectShape { .. }
        ));
        let cos = parse_symbol::<f64>("0.5*exp(1i*x)+0.5*exp(-1i*x)").unwrap();
        assert!(matches!(
            pd_interval_verdict(&cos, &sched),
            PdVerdict::RejectShape { .. }
        ));
    }

    #[test]
    fn necessary_inequality_on_pd_samples() {
        let h = 0.25;
        let pairs: Vec<(usize, usize)> =
            (0..=16).flat_map(|j| (0..=16).map(move |k| (j, k))).collect();

        let ch = ToeplitzSamples {
            base: 0.0,
            interval: (0.0, 4.0),
            h,
            first_row: (0..=16).map(|j| Complex::from_polar(1.0, 0.9 * h * j as f64)).collect(),
            orientation: Orientation::Left,
        };
        assert!(necessary_inequality_check(&ch, &pairs).abs() < 1e-12);

        let ones = ToeplitzSamples { first_row: vec![Complex::new(1.0, 0.0); 17], ..ch.clone() };
        assert!(necessary_inequality_check(&ones, &pairs) <= 0.0);

        // PD mixture of two characters
        let mix = ToeplitzSamples {
            first_row: (0..=16)
                .map(|j| {
                    let x = h * j as f64;
                    Complex::from_polar(0.5, x) + Complex::from_polar(0.5, -2.0 * x)
                })
                .collect(),
            ..ch
        };
        assert!(necessary_inequality_check(&mix, &pairs) <= 1e-12);
    }

    #[test]
    fn character_check_fixtures() {
        let h = std::f64::consts::PI / 8.0;
        let ch = ToeplitzSamples {
            base: 0.0,
            interval: (0.0, 1.0),
            h: 0.2,
            first_row: (0..=20).map(|j| Complex::from_polar(1.0, 0.63 * 0.2 * j as f64)).collect(),
            orientation: Orientation::Left,
        };
        assert!(character_check(&ch).is_empty());

        let cos = ToeplitzSamples {
            base: 0.0,
            interval: (0.0, 1.0),
            h,
            first_row: (0..=32).map(|j| Complex::new((h * j as f64).cos(), 0.0)).collect(),
            orientation: Orientation::Left,
        };
        assert!(character_check(&cos).is_empty());

        // triangle wave from normalizing F = x: anti-periodic consistency
        let tri = normalize_at_max(&S::var(), (-2.0, 2.0), 64).unwrap();
        assert!(character_check(&tri).is_empty());
    }

    #[test]
    fn polya_fixtures() {
        let mk = |row: Vec<Complex<f64>>| ToeplitzSamples {
            base: 0.0,
            interval: (0.0, 1.0),
            h: 0.2,
            first_row: row,
            orientation: Orientation::Left,
        };
        let decay = mk((0..=10).map(|j| Complex::new((-0.2 * j as f64).exp(), 0.0)).collect());
        assert!(polya_certificate(&decay));
        let negative = mk((0..=10).map(|j| Complex::new(1.0 - 0.3 * j as f64, 0.0)).collect());
        assert!(!polya_certificate(&negative));
        let cosr = mk((0..=10).map(|j| Complex::new((0.2 * j as f64).cos(), 0.0)).collect());
        assert!(!polya_certificate(&cosr));
    }

    #[test]
    fn gram_is_hermitian_by_construction() {
        let f = quad(1.3);
        let t = normalize_at_max(&f, (-1.5, 1.5), 48).unwrap();
        assert!(t.gram().is_hermitian(0.0));
    }
}
