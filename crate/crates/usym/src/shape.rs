//! Window-scale structure tests on |F|: where its minimum set sits, whether
//! |F| is monotone and growing away from it, and whether F degenerates to a
//! bounded character `c e^{i a x}`.
//!
//! Everything here is grid evidence, not proof: verdicts record the windows
//! they were computed on.

use crate::scalar::{Real, C};
use crate::symbols::SymbolExpr;
use crate::tol;
use num_complex::Complex;
use serde::{Deserialize, Serialize};

/// Grid approximation of the minimum set of |F| on a window.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MinSetApprox<T> {
    /// Half-width of the symmetric window [-W, W].
    pub window: T,
    /// Grid step.
    pub h: T,
    /// Maximal runs of grid points realizing the grid minimum, as closed
    /// intervals (possibly degenerate) with endpoints on the grid.
    pub components: Vec<(T, T)>,
    /// Minimum of |F| over the grid.
    pub grid_min: T,
}

/// Outcome of the necessary-condition tests.
///
/// When `bounded_exponential` is present the symbol is (numerically) a
/// character and the other flags carry no rejection weight.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShapeVerdict<T> {
    pub connected: bool,
    pub strictly_monotone_off_min: bool,
    pub growth_witnessed: bool,
    pub bounded_exponential: Option<(C<T>, T)>,
    /// Half-width of the finest window inspected.
    pub finest_window: T,
}

impl<T: Real> ShapeVerdict<T> {
    /// A symbol clears the shape stage when it is a character, or when its
    /// minimum set is connected with |F| strictly growing away from it.
    pub fn passes(&self) -> bool {
        self.bounded_exponential.is_some()
            || (self.connected && self.strictly_monotone_off_min && self.growth_witnessed)
    }
}

fn abs_grid<T: Real>(f: &SymbolExpr<T>, w: T, n: usize) -> (Vec<T>, T) {
    let h = (w + w) / T::of(n as f64);
    let vals: Vec<T> = (0..=n).map(|k| f.abs_at(-w + h * T::of(k as f64))).collect();
    (vals, h)
}

/// Grid minimum set of |F| on [-W, W] with n steps.
///
/// Membership slack combines the fixed floor with a local-slope term
/// `h * slope_i`, so that grid points straddling a true minimum of a smooth
/// |F| land in the same component regardless of grid alignment.
pub fn min_set<T: Real>(f: &SymbolExpr<T>, w: T, n: usize) -> MinSetApprox<T> {
    assert!(w > T::zero() && n >= 16);
    let (vals, h) = abs_grid(f, w, n);
    let grid_min = vals.iter().cloned().fold(T::infinity(), T::min);
    let floor = tol::min_tol_base::<T>() * (T::one() + grid_min);

    let mut in_set = vec![false; vals.len()];
    for i in 0..vals.len() {
        let mut slope = T::zero();
        if i > 0 {
            slope = slope.max((vals[i] - vals[i - 1]).abs() / h);
        }
        if i + 1 < vals.len() {
            slope = slope.max((vals[i + 1] - vals[i]).abs() / h);
        }
        in_set[i] = vals[i] <= grid_min + floor + h * slope;
    }

    let mut components = Vec::new();
    let mut run: Option<(usize, usize)> = None;
    for (i, &m) in in_set.iter().enumerate() {
        match (m, run) {
            (true, None) => run = Some((i, i)),
            (true, Some((s, _))) => run = Some((s, i)),
            (false, Some((s, e))) => {
                components.push((s, e));
                run = None;
            }
            (false, None) => {}
        }
    }
    if let Some((s, e)) = run {
        components.push((s, e));
    }
    let to_x = |k: usize| -w + h * T::of(k as f64);
    MinSetApprox {
        window: w,
        h,
        components: components.into_iter().map(|(s, e)| (to_x(s), to_x(e))).collect(),
        grid_min,
    }
}

/// Character detection: flat |F| plus approximate multiplicativity of
/// G = F / F(0), with the frequency read off a least-squares fit of the
/// unwrapped phase.
pub fn exponential_detector<T: Real>(
    f: &SymbolExpr<T>,
    w: T,
    n: usize,
) -> Option<(C<T>, T)> {
    assert!(w > T::zero() && n >= 16);
    let (vals, h) = abs_grid(f, w, n);
    let vmax = vals.iter().cloned().fold(T::zero(), T::max);
    let f0 = f.eval(T::zero());
    if f0.norm() <= T::of(1e-300) {
        // identically-zero symbols are flat; anything else with F(0)=0 is not
        // a character
        if vmax <= T::of(1e-300) {
            return Some((Complex::new(T::zero(), T::zero()), T::zero()));
        }
        return None;
    }
    let vmin = vals.iter().cloned().fold(T::infinity(), T::min);
    if vmax - vmin > tol::flat_tol::<T>() * vmax {
        return None;
    }

    let g = |x: T| f.eval(x) / f0;
    // multiplicativity on a coarse sublattice of pairs with x+y in window
    let stride = (n / 32).max(1);
    let coord = |k: usize| -w + h * T::of(k as f64);
    let mut j = 0;
    while j <= n {
        let mut k = 0;
        while k <= n {
            let (x, y) = (coord(j), coord(k));
            let s = x + y;
            if s.abs() <= w {
                let dev = (g(s) - g(x) * g(y)).norm();
                if dev > tol::mult_tol::<T>() {
                    return None;
                }
            }
            k += stride;
        }
        j += stride;
    }

    // unwrapped phase of G along the grid, least-squares slope
    let mut prev = g(-w);
    let mut xs = Vec::with_capacity(n + 1);
    let mut ys = Vec::with_capacity(n + 1);
    let mut theta = prev.arg();
    xs.push(-w);
    ys.push(theta);
    for k in 1..=n {
        let x = coord(k);
        let cur = g(x);
        theta = theta + (cur / prev).arg();
        prev = cur;
        xs.push(x);
        ys.push(theta);
    }
    let m = T::of(xs.len() as f64);
    let sx: T = xs.iter().cloned().sum();
    let sy: T = ys.iter().cloned().sum();
    let sxx: T = xs.iter().map(|&x| x * x).sum();
    let sxy: T = xs.iter().zip(ys.iter()).map(|(&x, &y)| x * y).sum();
    let denom = m * sxx - sx * sx;
    if denom == T::zero() {
        return None;
    }
    let alpha = (m * sxy - sx * sy) / denom;
    Some((f0, alpha))
}

fn monotone_off_min<T: Real>(f: &SymbolExpr<T>, ms: &MinSetApprox<T>, n: usize) -> bool {
    let (vals, h) = abs_grid(f, ms.window, n);
    let slack = tol::min_tol_base::<T>() * (T::one() + ms.grid_min);
    let in_min = |x: T| {
        ms.components
            .iter()
            .any(|&(a, b)| x >= a - h * T::of(0.5) && x <= b + h * T::of(0.5))
    };
    for j in 1..vals.len() - 1 {
        let x = -ms.window + h * T::of(j as f64);
        if in_min(x) {
            continue;
        }
        if vals[j] > vals[j - 1] + slack && vals[j] > vals[j + 1] + slack {
            return false;
        }
    }
    true
}

/// Runs the necessary-condition battery across an expanding window schedule.
///
/// Connectivity is judged on the two finest windows only; growth compares the
/// sup of |F| on the first and last windows.
pub fn shape_verdict<T: Real>(
    f: &SymbolExpr<T>,
    schedule: &[(T, usize)],
) -> ShapeVerdict<T> {
    assert!(!schedule.is_empty());
    assert!(schedule.windows(2).all(|p| p[0].0 < p[1].0), "schedule must increase in W");

    let &(w_last, n_last) = schedule.last().unwrap();
    let bounded_exponential = exponential_detector(f, w_last, n_last.max(64));

    let finest: Vec<&(T, usize)> = schedule.iter().rev().take(2).collect();
    let mut connected = true;
    for &&(w, n) in &finest {
        if min_set(f, w, n).components.len() > 1 {
            connected = false;
        }
    }

    let ms_last = min_set(f, w_last, n_last);
    let strictly_monotone_off_min = monotone_off_min(f, &ms_last, n_last);

    let sup = |w: T, n: usize| abs_grid(f, w, n).0.into_iter().fold(T::zero(), T::max);
    let &(w_first, n_first) = schedule.first().unwrap();
    let first_max = sup(w_first, n_first);
    let last_max = sup(w_last, n_last);
    let growth_witnessed = if schedule.len() == 1 {
        true
    } else {
        last_max >= tol::growth_factor::<T>() * first_max
    };

    ShapeVerdict {
        connected,
        strictly_monotone_off_min,
        growth_witnessed,
        bounded_exponential,
        finest_window: w_last,
    }
}
