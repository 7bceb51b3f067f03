//! Orchestration layer: the quadratic-threshold root, the norm-equals-
//! spectral-radius experiment suite, combined universality runs, witness
//! scans over scaled multipliers, and machine-readable reporting.
//!
//! Everything here is deterministic for a fixed seed: suite elements are
//! drawn from a seeded ChaCha stream and reports serialize with a stable
//! field order, so identical configurations produce byte-identical output.

use crate::algebras::{
    multiplier_apply, op_norm, AlgebraElement, ElementKind, LpIndex, NormKind, NormValue,
};
use crate::calculus::{
    bochner_apply, holomorphic_apply, linear_measure_tail_bound, linear_symbol_measure,
    linear_symbol_route, norm_bound_check, Measure,
};
use crate::linalg::{herm_eigen, CMat};
use crate::pd_engine::{pd_scan, GramCertificate, PdScan, PdVerdict};
use crate::scalar::Real;
use crate::shape::{shape_verdict, ShapeVerdict};
use crate::symbols::{print_symbol, SymbolExpr};
use crate::tol;
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

// ---------------------------------------------------------------------------
// Quadratic threshold
// ---------------------------------------------------------------------------

/// Root data for `1 - lambda*cot(lambda) = lambda^2` on `(0, pi)` and the
/// induced sharp constant `t0 = 2 - 1/lambda0^2` for the family
/// `-x^2 + 2ix + t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThresholdResult<T> {
    pub lambda0: T,
    pub t0: T,
    pub iterations: usize,
    pub residual: T,
}

/// Bisection for the unique root of `g(l) = 1 - l*cot(l) - l^2` in
/// `(0, pi)`. `g` is negative near zero (`g ~ -2 l^2 / 3`) and tends to
/// `+inf` as `l -> pi^-`, so the bracket `[0.1, pi - 1e-6]` always carries a
/// sign change; bisection runs to machine width.
pub fn quadratic_threshold<T: Real>() -> ThresholdResult<T> {
    let g = |l: T| T::one() - l * l.cos() / l.sin() - l * l;
    let mut lo = T::of(0.1);
    let mut hi = T::of(std::f64::consts::PI - 1e-6);
    assert!(g(lo) < T::zero() && g(hi) > T::zero(), "bracket lost its sign change");
    let mut iterations = 0usize;
    loop {
        let mid = (lo + hi) * T::of(0.5);
        if mid <= lo || mid >= hi {
            break;
        }
        iterations += 1;
        if g(mid) < T::zero() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let lambda0 = lo;
    let t0 = (lambda0 * lambda0 + lambda0 * lambda0 - T::one()) / (lambda0 * lambda0);
    ThresholdResult { lambda0, t0, iterations, residual: g(lambda0).abs() }
}

// ---------------------------------------------------------------------------
// Suite elements
// ---------------------------------------------------------------------------

/// A named element of the experiment suite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteEntry<T> {
    pub id: String,
    pub element: AlgebraElement<T>,
}

/// Random Hermitian matrix with spectrum scaled into `[-bound, bound]`
/// (largest eigenvalue magnitude lands at `0.95 * bound`).
pub fn seeded_self_adjoint<T: Real>(
    dim: usize,
    rng: &mut ChaCha8Rng,
    bound: T,
) -> AlgebraElement<T> {
    let mut m = CMat::zeros(dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            let re = T::of(rng.gen_range(-1.0..1.0));
            let im = T::of(rng.gen_range(-1.0..1.0));
            m[(i, j)] = Complex::new(re, im);
        }
    }
    let h = m.add(&m.adjoint()).scaled(Complex::new(T::of(0.5), T::zero()));
    let (eigs, _) = herm_eigen(&h).expect("Jacobi converges on Hermitian input");
    let radius = eigs.iter().fold(T::of(1e-12), |acc, &e| acc.max(e.abs()));
    let scale = T::of(0.95) * bound / radius;
    AlgebraElement::self_adjoint(h.scaled(Complex::new(scale, T::zero())))
}

/// The default experiment suite: diagonal operators on the three classical
/// sequence spaces, two seeded Hermitian matrices, and the differentiation
/// multiplier at three degrees.
pub fn default_suite<T: Real>(seed: u64) -> Vec<SuiteEntry<T>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut suite = vec![
        SuiteEntry {
            id: "diag_l1".into(),
            element: AlgebraElement::diag_lp(
                LpIndex::P1,
                vec![T::of(-2.0), T::of(-0.5), T::zero(), T::of(1.0), T::of(2.0)],
            ),
        },
        SuiteEntry {
            id: "diag_l2".into(),
            element: AlgebraElement::diag_lp(
                LpIndex::P2,
                vec![T::of(-1.5), T::of(0.25), T::of(1.0), T::of(2.0)],
            ),
        },
        SuiteEntry {
            id: "diag_linf".into(),
            element: AlgebraElement::diag_lp(
                LpIndex::PInf,
                vec![T::of(-2.0), T::of(-1.0), T::of(0.5), T::of(1.75)],
            ),
        },
        SuiteEntry {
            id: "sa4_seeded".into(),
            element: seeded_self_adjoint(4, &mut rng, T::of(2.0)),
        },
        SuiteEntry {
            id: "sa6_seeded".into(),
            element: seeded_self_adjoint(6, &mut rng, T::of(2.0)),
        },
    ];
    for degree in [4usize, 8, 16] {
        suite.push(SuiteEntry {
            id: format!("d{degree}"),
            element: AlgebraElement::d_n(degree),
        });
    }
    suite
}

// ---------------------------------------------------------------------------
// Symbol application and spectral mapping
// ---------------------------------------------------------------------------

/// Real spectrum of a suite element (diagonal entries, Hermitian eigenvalues,
/// or real multiplier values).
pub fn real_spectrum<T: Real>(a: &AlgebraElement<T>) -> Result<Vec<T>, String> {
    match &a.kind {
        ElementKind::DiagLp { diag, .. } => Ok(diag.clone()),
        ElementKind::SelfAdjointL2 { .. } => {
            let m = a.matrix().unwrap();
            let (eigs, _) = herm_eigen(&m).map_err(|e| e.to_string())?;
            Ok(eigs)
        }
        ElementKind::Multiplier { values, .. } => {
            let mut out = Vec::with_capacity(values.len());
            for &(re, im) in values {
                if im.abs() > T::of(1e-9) * (T::one() + re.abs()) {
                    return Err("multiplier values are not real".into());
                }
                out.push(re);
            }
            Ok(out)
        }
        ElementKind::General { .. } => {
            Err("general elements carry no certified real spectrum".into())
        }
    }
}

fn wrap_matrix_result<T: Real>(m: CMat<T>, template: &AlgebraElement<T>) -> AlgebraElement<T> {
    let norm_kind = match &template.kind {
        ElementKind::DiagLp { p: LpIndex::P1, .. } => NormKind::OpL1,
        ElementKind::DiagLp { p: LpIndex::P2, .. } => NormKind::OpL2,
        ElementKind::DiagLp { p: LpIndex::PInf, .. } => NormKind::OpLinf,
        ElementKind::SelfAdjointL2 { .. } => NormKind::OpL2,
        ElementKind::General { norm_kind, .. } => *norm_kind,
        ElementKind::Multiplier { .. } => unreachable!("multipliers are handled entrywise"),
    };
    AlgebraElement::general(m, norm_kind)
}

/// Applies a symbol to a suite element.
///
/// Polynomials take the Horner route, characters the single-atom transform
/// route; any other finite symbol is applied through the eigendecomposition
/// of the (necessarily Hermitian) element, or entrywise for multipliers.
pub fn apply_symbol<T: Real>(
    f: &SymbolExpr<T>,
    a: &AlgebraElement<T>,
) -> Result<AlgebraElement<T>, String> {
    if f.to_polynomial().is_some() {
        return holomorphic_apply(f, a);
    }
    if let Some((c, alpha)) = f.as_character() {
        let mu = Measure::new(vec![(alpha, c)]);
        return bochner_apply(&mu, a);
    }
    if !f.is_finite() {
        return Err("symbol does not evaluate to finite values".into());
    }
    if let ElementKind::Multiplier { values, degree } = &a.kind {
        let mut applied = Vec::with_capacity(values.len());
        for &(re, im) in values {
            if im.abs() > T::of(1e-9) * (T::one() + re.abs()) {
                return Err("multiplier values are not real".into());
            }
            applied.push(f.eval(re));
        }
        return Ok(AlgebraElement::multiplier(*degree, applied));
    }
    let m = a.matrix().ok_or("element has no matrix form")?;
    if !m.is_hermitian(T::of(1e-10) * (T::one() + m.frob_norm())) {
        return Err("eigendecomposition route requires a Hermitian matrix".into());
    }
    let (eigs, vecs) = herm_eigen(&m).map_err(|e| e.to_string())?;
    let n = m.rows;
    // F(A) = V diag(F(lambda)) V^H.
    let applied = CMat::from_fn(n, n, |i, j| {
        let mut acc = Complex::new(T::zero(), T::zero());
        for (k, &lambda) in eigs.iter().enumerate() {
            acc = acc + vecs[k][i] * f.eval(lambda) * vecs[k][j].conj();
        }
        acc
    });
    Ok(wrap_matrix_result(applied, a))
}

// ---------------------------------------------------------------------------
// Equality experiments
// ---------------------------------------------------------------------------

/// One norm-versus-spectral-radius measurement.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EqualityReport<T> {
    pub symbol_id: String,
    pub element_id: String,
    pub norm: NormValue<T>,
    pub rho: T,
    /// `norm - rho`, using the lower bound when the norm is a bracket.
    pub gap: T,
    pub tol: T,
    pub passed: bool,
    /// Empty on success; carries the failure reason for inconclusive rows.
    pub note: String,
}

/// Measures `||F(a)||` against `max |F(sigma(a))|` for every suite element.
///
/// Exact-norm kinds must agree to `eq_tol` in both directions; bracket kinds
/// are only held to the sound direction (`lower - rho <= eq_tol`), since a
/// lower bound below the true norm is not evidence of anything.
pub fn verify_equality<T: Real>(
    f: &SymbolExpr<T>,
    suite: &[SuiteEntry<T>],
) -> Vec<EqualityReport<T>> {
    verify_equality_with_tol(f, suite, tol::eq_tol::<T>())
}

/// [`verify_equality`] with an explicit tolerance (the CLI `--tol` flag).
pub fn verify_equality_with_tol<T: Real>(
    f: &SymbolExpr<T>,
    suite: &[SuiteEntry<T>],
    eq_tol: T,
) -> Vec<EqualityReport<T>> {
    let symbol_id = print_symbol(f);
    suite
        .iter()
        .map(|entry| {
            let outcome = apply_symbol(f, &entry.element)
                .and_then(|applied| op_norm(&applied))
                .and_then(|norm| real_spectrum(&entry.element).map(|spec| (norm, spec)));
            match outcome {
                Ok((norm, spectrum)) => {
                    let rho = spectrum
                        .iter()
                        .map(|&x| f.eval(x).norm())
                        .fold(T::zero(), T::max);
                    let gap = norm.lower() - rho;
                    let passed = if norm.is_exact() { gap.abs() <= eq_tol } else { gap <= eq_tol };
                    EqualityReport {
                        symbol_id: symbol_id.clone(),
                        element_id: entry.id.clone(),
                        norm,
                        rho,
                        gap,
                        tol: eq_tol,
                        passed,
                        note: String::new(),
                    }
                }
                Err(note) => EqualityReport {
                    symbol_id: symbol_id.clone(),
                    element_id: entry.id.clone(),
                    norm: NormValue::Exact(T::zero()),
                    rho: T::zero(),
                    gap: T::zero(),
                    tol: eq_tol,
                    passed: false,
                    note,
                },
            }
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Combined universality run
// ---------------------------------------------------------------------------

/// Configuration for a combined run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig<T> {
    /// `(window half-width, grid steps)` stages, increasing in window.
    pub schedule: Vec<(T, usize)>,
    pub seed: u64,
    /// Tolerance for the equality track.
    pub eq_tol: T,
    /// Stop after the first rejecting track instead of running all three.
    pub fail_fast: bool,
}

impl<T: Real> Default for RunConfig<T> {
    fn default() -> Self {
        RunConfig {
            schedule: crate::pd_engine::default_schedule(),
            seed: 42,
            eq_tol: tol::eq_tol(),
            fail_fast: false,
        }
    }
}

/// Final verdict over all three evidence tracks.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum OverallVerdict<T> {
    AcceptUpTo { w_max: T, n_max: usize },
    Reject { track: String, reason: String, certificate: Option<GramCertificate<T>> },
    Inconclusive { reason: String },
}

impl<T> OverallVerdict<T> {
    pub fn is_accept(&self) -> bool {
        matches!(self, OverallVerdict::AcceptUpTo { .. })
    }

    /// Process exit code: 0 accept, 2 reject, 3 inconclusive.
    pub fn exit_code(&self) -> i32 {
        match self {
            OverallVerdict::AcceptUpTo { .. } => 0,
            OverallVerdict::Reject { .. } => 2,
            OverallVerdict::Inconclusive { .. } => 3,
        }
    }
}

/// Everything a combined run produced, with all three sub-verdicts retained.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UniversalityReport<T> {
    pub schema: String,
    pub symbol: String,
    pub seed: u64,
    pub shape: ShapeVerdict<T>,
    pub pd: PdScan<T>,
    pub equality: Vec<EqualityReport<T>>,
    pub overall: OverallVerdict<T>,
}

pub const REPORT_SCHEMA: &str = "usym-report/1";

/// Runs the shape, positive-definite-extension, and equality tracks and
/// combines them. No track silently overrules another: every sub-verdict is
/// kept in the report, and the overall verdict is a rejection as soon as any
/// track rejects.
pub fn run_universality<T: Real>(
    f: &SymbolExpr<T>,
    suite: &[SuiteEntry<T>],
    config: &RunConfig<T>,
) -> UniversalityReport<T> {
    let symbol = print_symbol(f);
    let shape = shape_verdict(f, &config.schedule);
    let shape_rejects = !shape.passes();

    let pd = if config.fail_fast && shape_rejects {
        PdScan {
            verdict: PdVerdict::RejectShape {
                reason: "shape stage rejected; extension stage skipped (fail-fast)".into(),
            },
            stages: vec![],
        }
    } else {
        pd_scan(f, &config.schedule)
    };
    let pd_rejects = !pd.verdict.is_accept();

    let equality = if config.fail_fast && (shape_rejects || pd_rejects) {
        vec![]
    } else {
        verify_equality_with_tol(f, suite, config.eq_tol)
    };

    let overall = match &pd.verdict {
        PdVerdict::RejectShape { reason } => OverallVerdict::Reject {
            track: "shape".into(),
            reason: reason.clone(),
            certificate: None,
        },
        PdVerdict::RejectGram { certificate, w, n } => OverallVerdict::Reject {
            track: "gram".into(),
            reason: format!("negative quadratic form at window {:?}, resolution {}", w, n),
            certificate: Some(certificate.clone()),
        },
        PdVerdict::Inconclusive { reason } => {
            OverallVerdict::Inconclusive { reason: reason.clone() }
        }
        PdVerdict::AcceptUpTo { w_max, n_max } => {
            if shape_rejects {
                OverallVerdict::Reject {
                    track: "shape".into(),
                    reason: "necessary shape conditions failed".into(),
                    certificate: None,
                }
            } else if let Some(row) = equality.iter().find(|r| !r.passed && r.note.is_empty()) {
                OverallVerdict::Reject {
                    track: "equality".into(),
                    reason: format!(
                        "norm/spectral-radius gap {:?} on element {}",
                        row.gap, row.element_id
                    ),
                    certificate: None,
                }
            } else if let Some(row) = equality.iter().find(|r| !r.note.is_empty()) {
                OverallVerdict::Inconclusive {
                    reason: format!("element {}: {}", row.element_id, row.note),
                }
            } else {
                OverallVerdict::AcceptUpTo { w_max: *w_max, n_max: *n_max }
            }
        }
    };

    UniversalityReport {
        schema: REPORT_SCHEMA.into(),
        symbol,
        seed: config.seed,
        shape,
        pd,
        equality,
        overall,
    }
}

// ---------------------------------------------------------------------------
// Witness scan
// ---------------------------------------------------------------------------

/// One scale of a witness scan.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessRow<T> {
    pub scale: T,
    pub lower: T,
    pub upper: T,
    pub rho: T,
    /// `lower - rho`; strictly positive beyond tolerance would witness a
    /// genuine norm/spectral-radius separation.
    pub margin: T,
}

/// Result of scanning `F(s * D_N)` over scales `s`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessScan<T> {
    pub schema: String,
    pub symbol: String,
    pub degree: usize,
    pub best_margin: T,
    pub best_scale: T,
    pub rows: Vec<WitnessRow<T>>,
}

/// Scans `F(s * D_N)` in the degree-`N` multiplier algebra for a positive
/// `lower-norm-bound - spectral-radius` margin. Lower bounds never exceed
/// the true norm, so for a universal symbol the best margin stays within
/// tolerance of zero.
pub fn witness_scan<T: Real>(f: &SymbolExpr<T>, n: usize, scales: &[T]) -> WitnessScan<T> {
    assert!(n >= 4, "witness scans need degree at least 4");
    assert!(!scales.is_empty(), "witness scans need at least one scale");
    let mut rows = Vec::with_capacity(scales.len());
    let mut best: Option<(T, T)> = None;
    for &s in scales {
        let element = multiplier_apply(f, n, s);
        let norm = op_norm(&element).expect("multiplier norms always bracket");
        let rho = (0..=2 * n)
            .map(|k| f.eval(s * T::of(k as f64 - n as f64)).norm())
            .fold(T::zero(), T::max);
        let margin = norm.lower() - rho;
        if best.map_or(true, |(m, _)| margin > m) {
            best = Some((margin, s));
        }
        rows.push(WitnessRow { scale: s, lower: norm.lower(), upper: norm.upper(), rho, margin });
    }
    let (best_margin, best_scale) = best.unwrap();
    WitnessScan {
        schema: REPORT_SCHEMA.into(),
        symbol: print_symbol(f),
        degree: n,
        best_margin,
        best_scale,
        rows,
    }
}

// ---------------------------------------------------------------------------
// Calculus consistency run
// ---------------------------------------------------------------------------

/// One seeded element's route comparison for the linear symbol `F = x`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CalculusRow<T> {
    pub index: usize,
    /// `||A - (-L) mu_hat(A + L)||` in the l2 operator norm.
    pub route_deviation: T,
    /// `L * 8/(pi^2 K)`: the truncation budget the deviation must respect.
    pub bound: T,
    /// Slack of `||mu_hat(a)|| <= ||mu||` on the shifted element.
    pub norm_slack: T,
    pub passed: bool,
}

/// Report of a calculus consistency run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CalculusReport<T> {
    pub schema: String,
    pub dim: usize,
    pub l: T,
    pub k_cut: usize,
    pub seed: u64,
    pub rows: Vec<CalculusRow<T>>,
    pub all_passed: bool,
}

/// Compares the identity route `F(A) = A` against the transform route
/// `-L * mu_hat(A + L)` for `count` seeded Hermitian elements with spectrum
/// inside `[-L, L]`, and checks the transform norm bound on each.
pub fn calculus_consistency<T: Real>(
    dim: usize,
    l: T,
    k_cut: usize,
    seed: u64,
    count: usize,
) -> Result<CalculusReport<T>, String> {
    let mu = linear_symbol_measure(l, k_cut)?;
    let bound = l * linear_measure_tail_bound::<T>(k_cut);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(count);
    for index in 0..count {
        let element = seeded_self_adjoint(dim, &mut rng, l);
        let a = element.matrix().unwrap();
        let via_measure = linear_symbol_route(l, k_cut, &a)?;
        let diff = a.sub(&via_measure);
        let route_deviation =
            crate::linalg::largest_singular_value(&diff).map_err(|e| e.to_string())?;

        let mut shifted = a.clone();
        shifted.shift_diag(l);
        let shifted_element = AlgebraElement::self_adjoint(shifted);
        let norm_slack = norm_bound_check(&mu, &shifted_element)?;

        let passed = route_deviation <= bound && norm_slack >= -T::of(1e-8);
        rows.push(CalculusRow { index, route_deviation, bound, norm_slack, passed });
    }
    let all_passed = rows.iter().all(|r| r.passed);
    Ok(CalculusReport {
        schema: REPORT_SCHEMA.into(),
        dim,
        l,
        k_cut,
        seed,
        rows,
        all_passed,
    })
}

// ---------------------------------------------------------------------------
// Report emission
// ---------------------------------------------------------------------------

/// JSONL lines for a combined report: one overall line, one line per
/// extension stage, one line per equality row. Field order is fixed by the
/// struct definitions, so output is byte-stable.
pub fn report_jsonl<T: Real>(report: &UniversalityReport<T>) -> Vec<String> {
    let mut lines = Vec::new();
    lines.push(
        serde_json::json!({
            "schema": REPORT_SCHEMA,
            "kind": "overall",
            "symbol": report.symbol,
            "seed": report.seed,
            "verdict": report.overall,
            "shape": report.shape,
        })
        .to_string(),
    );
    for stage in &report.pd.stages {
        lines.push(
            serde_json::json!({
                "schema": REPORT_SCHEMA,
                "kind": "stage",
                "symbol": report.symbol,
                "stage": stage,
            })
            .to_string(),
        );
    }
    for row in &report.equality {
        lines.push(
            serde_json::json!({
                "schema": REPORT_SCHEMA,
                "kind": "equality",
                "row": row,
            })
            .to_string(),
        );
    }
    lines
}

/// CSV summary of a combined report.
pub fn report_csv<T: Real>(report: &UniversalityReport<T>) -> String {
    let mut out = String::from("kind,symbol,element,outcome,detail\n");
    let outcome = match &report.overall {
        OverallVerdict::AcceptUpTo { .. } => "accept_up_to".to_string(),
        OverallVerdict::Reject { track, .. } => format!("reject({track})"),
        OverallVerdict::Inconclusive { .. } => "inconclusive".to_string(),
    };
    out.push_str(&format!("overall,{},,{},\n", report.symbol, outcome));
    for stage in &report.pd.stages {
        let detail = stage
            .min_eig
            .map(|e| format!("min_eig={e}"))
            .unwrap_or_else(|| "short-circuit".into());
        out.push_str(&format!("stage,{},,w={} n={},{}\n", report.symbol, stage.w, stage.n, detail));
    }
    for row in &report.equality {
        out.push_str(&format!(
            "equality,{},{},{},gap={}\n",
            row.symbol_id,
            row.element_id,
            if row.passed { "pass" } else { "fail" },
            row.gap
        ));
    }
    out
}

/// Writes JSONL (and optionally CSV) artifacts, surfacing the offending path
/// on I/O errors.
pub fn report_emit(
    jsonl_lines: &[String],
    jsonl_path: Option<&std::path::Path>,
    csv: Option<(&str, &std::path::Path)>,
) -> Result<(), String> {
    if let Some(path) = jsonl_path {
        let body = jsonl_lines.join("\n") + "\n";
        std::fs::write(path, body).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    if let Some((content, path)) = csv {
        std::fs::write(path, content).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pd_engine::default_schedule;
    use crate::symbols::parse_symbol;
    use approx::assert_abs_diff_eq;

    type S = SymbolExpr<f64>;

    fn sym(text: &str) -> S {
        parse_symbol(text).unwrap()
    }

    #[test]
    fn threshold_matches_published_value() {
        let r = quadratic_threshold::<f64>();
        // Root of 1 - l*cot(l) = l^2 in (0, pi) and the induced constant.
        assert_abs_diff_eq!(r.t0, 1.867, epsilon = 1e-3);
        assert_abs_diff_eq!(r.lambda0, 2.743707269992269, epsilon = 1e-12);
        assert!(r.residual <= 1e-12, "residual {}", r.residual);
        assert_abs_diff_eq!(2.0 - 1.0 / (r.lambda0 * r.lambda0), r.t0, epsilon = 1e-12);
        assert!(r.lambda0 > 0.0 && r.lambda0 < std::f64::consts::PI);
    }

    #[test]
    fn threshold_is_fast() {
        let start = std::time::Instant::now();
        let r = quadratic_threshold::<f64>();
        assert!(r.iterations < 100);
        assert!(start.elapsed() < std::time::Duration::from_millis(1));
    }

    #[test]
    fn default_suite_is_hermitian_and_deterministic() {
        let suite = default_suite::<f64>(42);
        assert_eq!(suite.len(), 8);
        let grid = crate::algebras::default_t_grid::<f64>(7);
        for entry in &suite {
            let (ok, dev) = crate::algebras::hermitian_check(&entry.element, &grid);
            assert!(ok, "{} deviates by {dev}", entry.id);
        }
        let again = default_suite::<f64>(42);
        assert_eq!(suite, again);
        let other = default_suite::<f64>(43);
        assert_ne!(suite, other);
    }

    #[test]
    fn equality_square_on_flip_matrix() {
        // F = x^2 on [[0,1],[1,0]] gives the identity: norm 1, rho 1.
        let a = AlgebraElement::self_adjoint(CMat::from_rows(vec![
            vec![num_complex::Complex::new(0.0, 0.0), num_complex::Complex::new(1.0, 0.0)],
            vec![num_complex::Complex::new(1.0, 0.0), num_complex::Complex::new(0.0, 0.0)],
        ]));
        let suite = vec![SuiteEntry { id: "flip".into(), element: a }];
        let rows = verify_equality(&sym("x^2"), &suite);
        assert!(rows[0].passed);
        assert_abs_diff_eq!(rows[0].norm.lower(), 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(rows[0].rho, 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(rows[0].gap, 0.0, epsilon = 1e-10);
    }

    #[test]
    fn equality_bernstein_anchor() {
        // F = x on D_8: the cos(8x) test function pins the lower bound at 8,
        // which equals the spectral radius exactly.
        let suite = vec![SuiteEntry { id: "d8".into(), element: AlgebraElement::d_n(8) }];
        let rows = verify_equality(&sym("x"), &suite);
        assert!(rows[0].passed);
        assert_eq!(rows[0].norm.lower(), 8.0);
        assert_eq!(rows[0].rho, 8.0);
        assert_eq!(rows[0].gap, 0.0);
    }

    #[test]
    fn equality_character_is_isometry() {
        let suite = default_suite::<f64>(42);
        for alpha in ["1", "2", "-0.5"] {
            let f = sym(&format!("exp({alpha}i*x)"));
            for row in verify_equality(&f, &suite) {
                assert!(row.passed, "{} on {}: gap {}", row.symbol_id, row.element_id, row.gap);
                assert_abs_diff_eq!(row.rho, 1.0, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn equality_gap_never_negative() {
        let suite = default_suite::<f64>(42);
        for text in ["x", "x^2", "x^2+1", "-1*x^2+2i*x+1", "exp(2i*x)", "x^2-1"] {
            for row in verify_equality(&sym(text), &suite) {
                assert!(row.note.is_empty(), "{}: {}", row.element_id, row.note);
                assert!(
                    row.gap >= -tol::eq_tol::<f64>(),
                    "{} on {}: gap {}",
                    row.symbol_id,
                    row.element_id,
                    row.gap
                );
            }
        }
    }

    #[test]
    fn universality_accepts_shifted_square() {
        let suite = default_suite::<f64>(42);
        let config = RunConfig::default();
        let report = run_universality(&sym("x^2+1"), &suite, &config);
        assert!(report.overall.is_accept(), "{:?}", report.overall);
        assert_eq!(report.overall.exit_code(), 0);
        assert!(report.shape.passes());
    }

    #[test]
    fn universality_rejects_disconnected_minimum() {
        let suite = default_suite::<f64>(42);
        let config = RunConfig::default();
        let report = run_universality(&sym("x^2-1"), &suite, &config);
        match &report.overall {
            OverallVerdict::Reject { track, certificate, .. } => {
                assert_eq!(track, "shape");
                assert!(certificate.is_none());
            }
            other => panic!("expected shape rejection, got {other:?}"),
        }
        assert_eq!(report.overall.exit_code(), 2);
        // All sub-verdicts are still present.
        assert!(!report.shape.passes());
        assert!(!report.equality.is_empty());
    }

    #[test]
    fn universality_fail_fast_skips_later_tracks() {
        let suite = default_suite::<f64>(42);
        let config = RunConfig { fail_fast: true, ..RunConfig::default() };
        let report = run_universality(&sym("x^2-1"), &suite, &config);
        assert_eq!(report.overall.exit_code(), 2);
        assert!(report.equality.is_empty());
        assert!(report.pd.stages.is_empty());
    }

    #[test]
    fn universality_rejects_supercritical_quadratic_with_certificate() {
        let suite = default_suite::<f64>(42);
        let config = RunConfig::default();
        let f = sym("-1*x^2+2i*x+1.99");
        let report = run_universality(&f, &suite, &config);
        match &report.overall {
            OverallVerdict::Reject { track, certificate, .. } => {
                assert_eq!(track, "gram");
                let cert = certificate.as_ref().expect("certificate attached");
                assert!(cert.replay(&f) < 0.0);
            }
            other => panic!("expected extension rejection, got {other:?}"),
        }
    }

    #[test]
    fn sum_of_universal_symbols_can_fail() {
        // x^2 and x^4 each pass, while x^2 - 1 (a sum of a universal symbol
        // and a constant) fails: the class is not closed under addition.
        let suite = default_suite::<f64>(42);
        let config = RunConfig::default();
        assert!(run_universality(&sym("x^2"), &suite, &config).overall.is_accept());
        assert!(run_universality(&sym("x^4"), &suite, &config).overall.is_accept());
        assert!(!run_universality(&sym("x^2-1"), &suite, &config).overall.is_accept());
    }

    #[test]
    fn witness_scan_linear_symbol_is_tight() {
        let scales: Vec<f64> = (1..=30).map(|k| 0.1 * k as f64).collect();
        let scan = witness_scan(&sym("x"), 8, &scales);
        // ||s D_N|| = s N = rho exactly at the Bernstein anchor.
        assert!(scan.best_margin.abs() <= 1e-8, "margin {}", scan.best_margin);
        for row in &scan.rows {
            assert!(row.lower <= row.upper + 1e-12);
            assert!(row.margin >= -1e-8);
        }
    }

    #[test]
    fn witness_scan_character_margin_vanishes() {
        let scales = [0.3, 0.7, 1.3];
        let scan = witness_scan(&sym("exp(1i*x)"), 8, &scales);
        assert!(scan.best_margin.abs() <= 1e-8, "margin {}", scan.best_margin);
    }

    #[test]
    fn calculus_consistency_default_run() {
        let report = calculus_consistency::<f64>(6, 2.0, 999, 42, 10).unwrap();
        assert!(report.all_passed);
        assert_eq!(report.rows.len(), 10);
        for row in &report.rows {
            assert!(row.route_deviation <= row.bound, "{} > {}", row.route_deviation, row.bound);
            assert!(row.norm_slack >= -1e-8);
        }
    }

    #[test]
    fn jsonl_is_byte_identical_for_fixed_seed() {
        let suite = default_suite::<f64>(42);
        let config = RunConfig::default();
        let a = report_jsonl(&run_universality(&sym("x^2+1"), &suite, &config));
        let b = report_jsonl(&run_universality(&sym("x^2+1"), &suite, &config));
        assert_eq!(a, b);
        assert!(a[0].contains("\"outcome\":\"accept_up_to\""));
    }

    #[test]
    fn closure_variants_keep_the_outcome_class() {
        let suite = default_suite::<f64>(42);
        let config = RunConfig::default();
        for text in ["x^2", "exp(2i*x)"] {
            let f = sym(text);
            let base_accept = run_universality(&f, &suite, &config).overall.is_accept();
            for g in crate::symbols::closure_variants(
                &f,
                2,
                num_complex::Complex::new(3.0, 0.0),
                1.0,
                0.5,
            ) {
                let accept = run_universality(&g, &suite, &config).overall.is_accept();
                assert_eq!(accept, base_accept, "variant {} of {}", print_symbol(&g), text);
            }
        }
    }

    #[test]
    fn report_emit_surfaces_bad_paths() {
        let lines = vec!["{}".to_string()];
        let err = report_emit(&lines, Some(std::path::Path::new("/nonexistent/dir/x.jsonl")), None)
            .unwrap_err();
        assert!(err.contains("/nonexistent/dir/x.jsonl"));
    }

    #[test]
    fn shape_schedule_gate_is_used() {
        let config = RunConfig::<f64>::default();
        let shape = shape_verdict(&sym("x^2+1"), &config.schedule);
        assert!(shape.passes());
        let _ = default_schedule::<f64>();
    }
}
