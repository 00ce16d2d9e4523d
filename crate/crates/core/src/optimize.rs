//! Sweeping `F(a)` and locating its minimizer.

use alloc::vec::Vec;

use crate::bezier::QuadraticBezier;
use crate::error::{Error, Result};
use crate::flow::FlowConfig;
use crate::quad::QuadratureSpec;

/// Grid size of the coarse scan that precedes golden-section refinement.
pub const PRESCAN_POINTS: usize = 101;

/// `(sqrt(5) - 1) / 2`
const INV_PHI: f64 = 0.618_033_988_749_894_9;

const MAX_GOLDEN_ITERS: usize = 200;

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    /// `(apex, force)` pairs with strictly increasing apex.
    pub samples: Vec<(f64, f64)>,
}

impl SweepResult {
    pub fn grid_size(&self) -> usize {
        self.samples.len()
    }

    /// Index of the smallest force; ties go to the leftmost sample.
    pub fn argmin(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (i, &(_, f)) in self.samples.iter().enumerate() {
            match best {
                Some(b) if self.samples[b].1 <= f => {}
                _ => best = Some(i),
            }
        }
        best
    }

    pub fn is_flat(&self) -> bool {
        self.samples.windows(2).all(|w| w[0].1 == w[1].1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinimizeStatus {
    Converged,
    /// The lowest pre-scan sample sits at an end of the range.
    BoundaryMinimum,
    /// Every pre-scan sample has the same force, so there is no strict minimum.
    FlatObjective,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptimizationResult {
    pub apex_opt: f64,
    pub force_opt: f64,
    /// Pre-scan bracket around the lowest interior grid sample.
    pub bracket: (f64, f64),
    /// Width of the golden-section interval at termination.
    pub final_width: f64,
    /// Number of force evaluations, pre-scan included.
    pub evaluations: usize,
    pub status: MinimizeStatus,
}

impl OptimizationResult {
    pub fn converged(&self) -> bool {
        self.status == MinimizeStatus::Converged
    }
}

fn check_range(a_min: f64, a_max: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&a_min) {
        return Err(Error::domain("a_min", a_min, "[0, 1]"));
    }
    if !(0.0..=1.0).contains(&a_max) || a_max <= a_min {
        return Err(Error::domain("a_max", a_max, "(a_min, 1]"));
    }
    Ok(())
}

fn force_at(cfg: &FlowConfig, quad: &QuadratureSpec, apex: f64) -> Result<f64> {
    let curve = QuadraticBezier::new(apex)?;
    cfg.total_force_parametric(&curve, quad)
        .map_err(|e| e.at_apex(apex))
}

fn grid_point(a_min: f64, a_max: f64, n: usize, i: usize) -> f64 {
    if i + 1 == n {
        a_max
    } else {
        a_min + (a_max - a_min) * i as f64 / (n - 1) as f64
    }
}

/// Evaluates `F` at `n` equally spaced apex values in `[a_min, a_max]`.
pub fn sweep(
    cfg: &FlowConfig,
    quad: &QuadratureSpec,
    a_min: f64,
    a_max: f64,
    n: usize,
) -> Result<SweepResult> {
    check_range(a_min, a_max)?;
    if n < 2 {
        return Err(Error::domain("grid size", n as f64, "[2, inf)"));
    }
    let samples = (0..n)
        .map(|i| {
            let a = grid_point(a_min, a_max, n, i);
            force_at(cfg, quad, a).map(|f| (a, f))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepResult { samples })
}

/// Coarse 101-point scan followed by golden-section search on the two grid
/// cells around the lowest interior sample, until the bracket is at most
/// `tol` wide.
///
/// A minimum at either end of the scan is returned as-is with a
/// non-converged status. Multiple local minima inside the final bracket are
/// not detected.
pub fn minimize(
    cfg: &FlowConfig,
    quad: &QuadratureSpec,
    a_min: f64,
    a_max: f64,
    tol: f64,
) -> Result<OptimizationResult> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::domain("tol", tol, "(0, inf)"));
    }
    let scan = sweep(cfg, quad, a_min, a_max, PRESCAN_POINTS)?;
    let mut evaluations = scan.grid_size();
    let samples = &scan.samples;
    let best = scan.argmin().unwrap_or(0);
    let (apex, force) = samples[best];

    if scan.is_flat() || best == 0 || best + 1 == samples.len() {
        let lo = samples[best.saturating_sub(1)].0;
        let hi = samples[(best + 1).min(samples.len() - 1)].0;
        return Ok(OptimizationResult {
            apex_opt: apex,
            force_opt: force,
            bracket: (lo, hi),
            final_width: hi - lo,
            evaluations,
            status: if scan.is_flat() {
                MinimizeStatus::FlatObjective
            } else {
                MinimizeStatus::BoundaryMinimum
            },
        });
    }

    let bracket = (samples[best - 1].0, samples[best + 1].0);
    let (mut lo, mut hi) = bracket;
    let mut left = hi - INV_PHI * (hi - lo);
    let mut right = lo + INV_PHI * (hi - lo);
    let mut f_left = force_at(cfg, quad, left)?;
    let mut f_right = force_at(cfg, quad, right)?;
    evaluations += 2;

    // The grid sample is a valid candidate too; keep the best point seen.
    let (mut best_a, mut best_f) = (apex, force);
    for _ in 0..MAX_GOLDEN_ITERS {
        for (a, f) in [(left, f_left), (right, f_right)] {
            if f < best_f {
                best_a = a;
                best_f = f;
            }
        }
        if hi - lo <= tol {
            break;
        }
        if f_left <= f_right {
            hi = right;
            right = left;
            f_right = f_left;
            left = hi - INV_PHI * (hi - lo);
            f_left = force_at(cfg, quad, left)?;
        } else {
            lo = left;
            left = right;
            f_left = f_right;
            right = lo + INV_PHI * (hi - lo);
            f_right = force_at(cfg, quad, right)?;
        }
        evaluations += 1;
    }

    Ok(OptimizationResult {
        apex_opt: best_a,
        force_opt: best_f,
        bracket,
        final_width: hi - lo,
        evaluations,
        status: MinimizeStatus::Converged,
    })
}
