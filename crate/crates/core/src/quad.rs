//! Numerical integration over `[0, 1]`.
//!
//! Two production methods (adaptive Simpson and Gauss-Legendre) and a
//! deliberately slow midpoint rule kept as a brute-force reference.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};

pub const DEFAULT_ABS_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_DEPTH: u32 = 40;
pub const DEFAULT_NODES: usize = 64;

const MAX_DEPTH_LIMIT: u32 = 60;

/// Subdivision levels always taken before the error test may accept a panel;
/// a coarse panel can pass the test by coincidence.
const MIN_LEVELS: u32 = 6;

#[derive(Debug, Clone, PartialEq)]
pub enum QuadratureSpec {
    AdaptiveSimpson {
        abs_tol: f64,
        max_depth: u32,
    },
    GaussLegendre(GaussLegendreRule),
    /// Midpoint rule with a fixed panel count.
    RiemannOracle {
        panels: usize,
    },
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec::AdaptiveSimpson {
            abs_tol: DEFAULT_ABS_TOL,
            max_depth: DEFAULT_MAX_DEPTH,
        }
    }
}

impl QuadratureSpec {
    pub fn adaptive_simpson(abs_tol: f64, max_depth: u32) -> Result<Self> {
        let spec = QuadratureSpec::AdaptiveSimpson { abs_tol, max_depth };
        spec.validate()?;
        Ok(spec)
    }

    pub fn gauss_legendre(nodes: usize) -> Result<Self> {
        Ok(QuadratureSpec::GaussLegendre(GaussLegendreRule::new(
            nodes,
        )?))
    }

    pub fn riemann_oracle(panels: usize) -> Result<Self> {
        let spec = QuadratureSpec::RiemannOracle { panels };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            QuadratureSpec::AdaptiveSimpson { abs_tol, max_depth } => {
                if !(abs_tol > 0.0 && abs_tol.is_finite()) {
                    return Err(Error::InvalidQuadrature(
                        "abs_tol must be positive and finite",
                    ));
                }
                if !(1..=MAX_DEPTH_LIMIT).contains(&max_depth) {
                    return Err(Error::InvalidQuadrature("max_depth must lie in [1, 60]"));
                }
            }
            QuadratureSpec::GaussLegendre(ref rule) => {
                if rule.len() < 2 {
                    return Err(Error::InvalidQuadrature("node count must be at least 2"));
                }
            }
            QuadratureSpec::RiemannOracle { panels } => {
                if panels < 2 {
                    return Err(Error::InvalidQuadrature("node count must be at least 2"));
                }
            }
        }
        Ok(())
    }
}

/// Estimates `int_0^1 f(t) dt`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, spec: &QuadratureSpec) -> Result<f64> {
    spec.validate()?;
    match *spec {
        QuadratureSpec::AdaptiveSimpson { abs_tol, max_depth } => {
            adaptive_simpson(&f, abs_tol, max_depth)
        }
        QuadratureSpec::GaussLegendre(ref rule) => Ok(rule.integrate_unit(&f)),
        QuadratureSpec::RiemannOracle { panels } => Ok(midpoint(&f, panels)),
    }
}

fn midpoint<F: Fn(f64) -> f64>(f: &F, panels: usize) -> f64 {
    let h = 1.0 / panels as f64;
    let mut sum = 0.0;
    let mut comp = 0.0;
    for i in 0..panels {
        // Kahan summation; the panel count runs into the millions.
        let y = f((i as f64 + 0.5) * h) - comp;
        let s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    sum * h
}

struct Panel {
    lo: f64,
    hi: f64,
    f_lo: f64,
    f_mid: f64,
    f_hi: f64,
    whole: f64,
}

fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, abs_tol: f64, max_depth: u32) -> Result<f64> {
    let (f_lo, f_mid, f_hi) = (f(0.0), f(0.5), f(1.0));
    let panel = Panel {
        lo: 0.0,
        hi: 1.0,
        f_lo,
        f_mid,
        f_hi,
        whole: (f_lo + 4.0 * f_mid + f_hi) / 6.0,
    };
    let forced = MIN_LEVELS.min(max_depth - 1);
    refine(f, panel, abs_tol, max_depth, forced)
}

fn refine<F: Fn(f64) -> f64>(f: &F, p: Panel, tol: f64, depth: u32, forced: u32) -> Result<f64> {
    let mid = 0.5 * (p.lo + p.hi);
    let h = p.hi - p.lo;
    let f_left = f(0.5 * (p.lo + mid));
    let f_right = f(0.5 * (mid + p.hi));
    let left = h * (p.f_lo + 4.0 * f_left + p.f_mid) / 12.0;
    let right = h * (p.f_mid + 4.0 * f_right + p.f_hi) / 12.0;
    let delta = left + right - p.whole;
    if !delta.is_finite() {
        return Err(Error::NotConverged {
            lo: p.lo,
            hi: p.hi,
            error_estimate: f64::INFINITY,
        });
    }
    if forced == 0 && delta.abs() <= 15.0 * tol {
        return Ok(left + right + delta / 15.0);
    }
    if depth <= 1 {
        return Err(Error::NotConverged {
            lo: p.lo,
            hi: p.hi,
            error_estimate: delta.abs() / 15.0,
        });
    }
    let lhs = Panel {
        lo: p.lo,
        hi: mid,
        f_lo: p.f_lo,
        f_mid: f_left,
        f_hi: p.f_mid,
        whole: left,
    };
    let rhs = Panel {
        lo: mid,
        hi: p.hi,
        f_lo: p.f_mid,
        f_mid: f_right,
        f_hi: p.f_hi,
        whole: right,
    };
    let forced = forced.saturating_sub(1);
    Ok(refine(f, lhs, 0.5 * tol, depth - 1, forced)?
        + refine(f, rhs, 0.5 * tol, depth - 1, forced)?)
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
///
/// Nodes are the roots of `P_n`, found by Newton iteration from the
/// Tricomi-style initial guess `cos(pi (i - 1/4) / (n + 1/2))`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussLegendreRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendreRule {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidQuadrature("node count must be at least 2"));
        }
        let mut nodes = alloc::vec![0.0; n];
        let mut weights = alloc::vec![0.0; n];
        let nf = n as f64;
        // Roots are symmetric; solve the positive half and mirror.
        for i in 0..n.div_ceil(2) {
            let mut x = libm::cos(PI * (i as f64 + 0.75) / (nf + 0.5));
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let step = p / d;
                x -= step;
                if step.abs() <= 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Ok(Self { nodes, weights })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `int_0^1 f(t) dt` by the affine map `t = (1 + x) / 2`.
    pub fn integrate_unit<F: Fn(f64) -> f64>(&self, f: &F) -> f64 {
        let sum: f64 = self
            .nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(0.5 * (1.0 + x)))
            .sum();
        0.5 * sum
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p_prev, mut p) = (1.0, x);
    for k in 2..=n {
        let kf = k as f64;
        let next = ((2.0 * kf - 1.0) * x * p - (kf - 1.0) * p_prev) / kf;
        p_prev = p;
        p = next;
    }
    let d = n as f64 * (x * p - p_prev) / (x * x - 1.0);
    (p, d)
}
