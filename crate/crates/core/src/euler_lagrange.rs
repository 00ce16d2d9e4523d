//! Stationarity conditions for a linear speed profile `v(x) = kx`.
//!
//! For this speed the Euler-Lagrange equation of the force functional reads
//!
//! ```text
//! 0 = -2 rho k^2 d/dx [ x^2 f' / (1 + f'^2)^2 ]
//! ```
//!
//! and integrating once gives, for an arbitrary constant `c`, a quartic in
//! the slope `p = f'(x)`:
//!
//! ```text
//! g(p) = x^2 p + c (1 + p^2)^2 = 0
//! ```
//!
//! Only pointwise root extraction and residual checks live here; choosing a
//! branch and fitting `c` to boundary conditions is up to the caller.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::flow::{FlowConfig, VelocityPolynomial};

/// Roots closer than this are reported once.
const MERGE_DISTANCE: f64 = 1e-9;

/// Bisection stops once the bracket is this narrow.
const BISECT_WIDTH: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElProblem {
    /// Coefficient of the speed profile `v(x) = kx`.
    pub k: f64,
    /// Integration constant of the first integral.
    pub c: f64,
}

impl ElProblem {
    pub fn new(k: f64, c: f64) -> Result<Self> {
        if !k.is_finite() {
            return Err(Error::domain("k", k, "finite"));
        }
        if !c.is_finite() {
            return Err(Error::domain("c", c, "finite"));
        }
        Ok(Self { k, c })
    }

    /// Flow with density `rho` and speed `kx`.
    pub fn flow(&self, rho: f64) -> Result<FlowConfig> {
        FlowConfig::new(rho, VelocityPolynomial::new([0.0, self.k]))
    }

    /// `x^2 p + c (1 + p^2)^2`
    pub fn quartic(&self, x: f64, p: f64) -> f64 {
        let s = 1.0 + p * p;
        x * x * p + self.c * s * s
    }

    fn quartic_slope(&self, x: f64, p: f64) -> f64 {
        x * x + 4.0 * self.c * p * (1.0 + p * p)
    }

    /// Residual bound `1e-10 * max(1, |c|, x^2)` every returned root meets.
    pub fn residual_bound(&self, x: f64) -> f64 {
        1e-10 * 1f64.max(self.c.abs()).max(x * x)
    }

    /// Cauchy-style bound on the magnitude of every real root.
    pub fn root_bound(&self, x: f64) -> f64 {
        1.0 + (x * x + 16.0 * self.c.abs()) / self.c.abs()
    }

    /// All real roots of the quartic at abscissa `x`, ascending.
    ///
    /// For `c != 0`, `g''(p) = 4c(1 + 3p^2)` never changes sign, so `g` has a
    /// single extremum. The extremum is located by bisection on `g'`, which
    /// splits `[-R, R]` into two monotone pieces; each piece holding a sign
    /// change is bisected to its root. A tangent extremum is a double root.
    ///
    /// `c = 0` reduces to `x^2 p = 0` and yields the single root `0` (also
    /// when `x = 0`, where every `p` solves the equation).
    pub fn quartic_real_roots(&self, x: f64) -> Vec<f64> {
        if self.c == 0.0 {
            return alloc::vec![0.0];
        }
        let r = self.root_bound(x);
        // g' is increasing when c > 0 and decreasing when c < 0.
        let sign = self.c.signum();
        let p_star = bisect(|p| sign * self.quartic_slope(x, p), -r, r);
        // Oriented so that the quartic tends to +inf at both ends.
        let g_star = sign * self.quartic(x, p_star);

        let mut roots = Vec::with_capacity(2);
        if g_star > 0.0 {
            return roots;
        }
        if g_star.abs() <= self.residual_bound(x) {
            roots.push(p_star);
            return roots;
        }
        let oriented = |p: f64| sign * self.quartic(x, p);
        roots.push(bisect(|p| -oriented(p), -r, p_star));
        roots.push(bisect(oriented, p_star, r));
        if roots[1] - roots[0] < MERGE_DISTANCE {
            roots.truncate(1);
        }
        roots
    }
}

/// Root of an increasing function on `[lo, hi]` with `f(lo) <= 0 <= f(hi)`;
/// returns whichever final endpoint has the smaller `|f|`.
fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64) -> f64 {
    let mut f_lo = f(lo);
    let mut f_hi = f(hi);
    while hi - lo > BISECT_WIDTH {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return mid;
        }
        if f_mid < 0.0 {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    if f_lo.abs() <= f_hi.abs() {
        lo
    } else {
        hi
    }
}

/// Right-hand side of the Euler-Lagrange equation,
/// `-2 rho k^2 d/dx [x^2 f'/(1 + f'^2)^2]`, with the derivative taken by a
/// central difference of step `h`.
///
/// `cfg` must carry a speed of the form `kx`; `slope` supplies `f'(x)`.
pub fn el_residual<S: Fn(f64) -> f64>(cfg: &FlowConfig, slope: S, x: f64, h: f64) -> Result<f64> {
    let k = linear_coefficient(cfg.velocity())?;
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::domain("h", h, "(0, inf)"));
    }
    if x - h < 0.0 || !x.is_finite() {
        return Err(Error::domain("x", x, "[h, inf)"));
    }
    let bracket = |x: f64| {
        let p = slope(x);
        let s = 1.0 + p * p;
        x * x * p / (s * s)
    };
    let derivative = (bracket(x + h) - bracket(x - h)) / (2.0 * h);
    Ok(-2.0 * cfg.rho() * k * k * derivative)
}

fn linear_coefficient(v: &VelocityPolynomial) -> Result<f64> {
    let coeffs = v.coeffs();
    if let Some(&c0) = coeffs.first() {
        if c0 != 0.0 {
            return Err(Error::domain(
                "constant speed term",
                c0,
                "{0} for v(x) = kx",
            ));
        }
    }
    if let Some(&high) = coeffs.iter().skip(2).find(|&&c| c != 0.0) {
        return Err(Error::domain(
            "higher speed term",
            high,
            "{0} for v(x) = kx",
        ));
    }
    Ok(coeffs.get(1).copied().unwrap_or(0.0))
}
