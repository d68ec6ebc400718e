//! Deterministic quadrature backends.
//!
//! `torus_integrate` is the uniform (trapezoid = rectangle) rule on the
//! p-torus [-pi, pi]^p, spectrally accurate for analytic periodic
//! integrands. Lattice sums are reduced by a fixed binary tree over the
//! flat lattice index, so results are bitwise independent of how many
//! rayon workers participate. The coarse sub-lattice (every other point
//! per axis) is accumulated in the same pass and yields a two-resolution
//! convergence estimate for free.
//!
//! `line_integrate` is adaptive Simpson on a truncated interval, used for
//! the classical real-line orthogonality checks.

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Uniform lattice specification on the p-torus.
#[derive(Clone, Debug)]
pub struct TorusGridSpec {
    pub dim: usize,
    /// Points per dimension; a power of two, at least 16.
    pub points_per_dim: usize,
    /// Cap on the total lattice size.
    pub budget: usize,
}

impl TorusGridSpec {
    pub fn new(dim: usize, points_per_dim: usize) -> Result<Self> {
        Self::with_budget(dim, points_per_dim, 1 << 24)
    }

    pub fn with_budget(dim: usize, points_per_dim: usize, budget: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidParams("torus dimension must be >= 1".into()));
        }
        if points_per_dim < 16 || !points_per_dim.is_power_of_two() {
            return Err(Error::InvalidParams(format!(
                "points_per_dim must be a power of two >= 16, got {points_per_dim}"
            )));
        }
        let spec = TorusGridSpec { dim, points_per_dim, budget };
        let total = spec.total_points()?;
        if total > budget {
            return Err(Error::BudgetExceeded { points: total, budget });
        }
        Ok(spec)
    }

    fn total_points(&self) -> Result<usize> {
        let mut total: usize = 1;
        for _ in 0..self.dim {
            total = total.checked_mul(self.points_per_dim).ok_or(Error::BudgetExceeded {
                points: usize::MAX,
                budget: self.budget,
            })?;
        }
        Ok(total)
    }
}

/// Quadrature value with its two-resolution convergence estimate.
#[derive(Clone, Copy, Debug)]
pub struct QuadratureValue {
    pub value: Complex64,
    /// |value(n) - value(n/2)|, both grids sharing the same lattice points.
    pub estimate: f64,
}

#[derive(Clone, Copy)]
struct PairSum {
    full: Complex64,
    coarse: Complex64,
}

impl PairSum {
    fn zero() -> Self {
        PairSum { full: Complex64::zero(), coarse: Complex64::zero() }
    }

    fn add(self, other: Self) -> Self {
        PairSum { full: self.full + other.full, coarse: self.coarse + other.coarse }
    }
}

const PARALLEL_CUTOFF: usize = 4096;

/// Tree-shaped reduction over the flat index range [lo, hi): the split points
/// depend only on the range, never on worker count, so the floating-point
/// addition order is fixed.
fn tree_sum<F>(lo: usize, hi: usize, n: usize, dim: usize, f: &F) -> PairSum
where
    F: Fn(&[f64]) -> Complex64 + Sync,
{
    if hi - lo <= PARALLEL_CUTOFF {
        let mut acc = PairSum::zero();
        let mut theta = vec![0.0f64; dim];
        let step = 2.0 * std::f64::consts::PI / n as f64;
        for idx in lo..hi {
            let mut rest = idx;
            let mut coarse = true;
            for d in (0..dim).rev() {
                let t = rest % n;
                rest /= n;
                theta[d] = -std::f64::consts::PI + step * t as f64;
                coarse &= t % 2 == 0;
            }
            let v = f(&theta);
            acc.full += v;
            if coarse {
                acc.coarse += v;
            }
        }
        acc
    } else {
        let mid = lo + (hi - lo) / 2;
        let (a, b) = rayon::join(
            || tree_sum(lo, mid, n, dim, f),
            || tree_sum(mid, hi, n, dim, f),
        );
        a.add(b)
    }
}

/// Integrates over [-pi, pi]^p on the uniform lattice.
pub fn torus_integrate<F>(spec: &TorusGridSpec, integrand: F) -> Result<QuadratureValue>
where
    F: Fn(&[f64]) -> Complex64 + Sync,
{
    let total = spec.total_points()?;
    if total > spec.budget {
        return Err(Error::BudgetExceeded { points: total, budget: spec.budget });
    }
    let n = spec.points_per_dim;
    let sums = tree_sum(0, total, n, spec.dim, &integrand);
    let hp = (2.0 * std::f64::consts::PI / n as f64).powi(spec.dim as i32);
    let hp2 = (2.0 * std::f64::consts::PI / (n / 2) as f64).powi(spec.dim as i32);
    let value = sums.full * hp;
    let coarse = sums.coarse * hp2;
    Ok(QuadratureValue { value, estimate: (value - coarse).norm() })
}

/// Truncated real-line quadrature specification.
#[derive(Clone, Copy, Debug)]
pub struct LineQuadSpec {
    /// Integration runs over [-truncation, truncation].
    pub truncation: f64,
    pub rel_tol: f64,
}

impl LineQuadSpec {
    pub fn new(truncation: f64, rel_tol: f64) -> Result<Self> {
        if truncation <= 0.0 || !truncation.is_finite() {
            return Err(Error::InvalidParams("truncation must be positive".into()));
        }
        if rel_tol <= 0.0 {
            return Err(Error::InvalidParams("rel_tol must be positive".into()));
        }
        Ok(LineQuadSpec { truncation, rel_tol })
    }
}

fn simpson(fa: f64, fm: f64, fb: f64, h: f64) -> f64 {
    h / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adaptive<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: usize,
    err_acc: &mut f64,
) -> Result<f64> {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(fa, flm, fm, m - a);
    let right = simpson(fm, frm, fb, b - m);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol {
        *err_acc += delta.abs() / 15.0;
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(Error::TolNotReached { achieved: delta.abs() / 15.0, requested: tol });
    }
    let l = adaptive(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, err_acc)?;
    let r = adaptive(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, err_acc)?;
    Ok(l + r)
}

/// Adaptive Simpson on [-T, T] to the requested relative tolerance; the
/// returned estimate combines the accumulated local error estimates and a
/// crude tail bound |f(-T)| + |f(T)|.
pub fn line_integrate<F: Fn(f64) -> f64>(spec: &LineQuadSpec, f: F) -> Result<(f64, f64)> {
    let t = spec.truncation;
    // coarse scan fixes the absolute tolerance scale
    const PANELS: usize = 64;
    let h = 2.0 * t / PANELS as f64;
    let mut scale = 0.0f64;
    let mut knots = Vec::with_capacity(PANELS + 1);
    for i in 0..=PANELS {
        knots.push(f(-t + i as f64 * h));
    }
    for i in 0..PANELS {
        let m = f(-t + (i as f64 + 0.5) * h);
        scale += simpson(knots[i], m, knots[i + 1], h).abs();
    }
    let tol_abs = spec.rel_tol * scale.max(f64::MIN_POSITIVE);
    let mut total = 0.0;
    let mut err_acc = 0.0;
    for i in 0..PANELS {
        let a = -t + i as f64 * h;
        let b = a + h;
        let m = 0.5 * (a + b);
        let fm = f(m);
        let whole = simpson(knots[i], fm, knots[i + 1], h);
        total += adaptive(
            &f,
            a,
            b,
            knots[i],
            fm,
            knots[i + 1],
            whole,
            tol_abs / PANELS as f64,
            40,
            &mut err_acc,
        )?;
    }
    let tail = knots[0].abs() + knots[PANELS].abs();
    Ok((total, err_acc + tail))
}
