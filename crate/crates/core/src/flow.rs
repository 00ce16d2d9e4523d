//! Freestream speed, Newtonian pressure and the resistance functional.

use alloc::vec::Vec;

use crate::bezier::QuadraticBezier;
use crate::error::{Error, Result};
use crate::quad::{integrate, QuadratureSpec};

/// Speed `v(x) = sum c_k x^k`, coefficients in ascending powers.
///
/// Negative speeds are allowed; only `v^2` enters the pressure law.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct VelocityPolynomial {
    coeffs: Vec<f64>,
}

impl VelocityPolynomial {
    pub fn new(coeffs: impl Into<Vec<f64>>) -> Self {
        Self {
            coeffs: coeffs.into(),
        }
    }

    /// `v(x) = k`.
    pub fn constant(k: f64) -> Self {
        Self::new([k])
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect::<Vec<_>>())
    }
}

pub fn velocity_at(v: &VelocityPolynomial, x: f64) -> f64 {
    v.eval(x)
}

#[derive(Debug, Clone, PartialEq)]
pub struct FlowConfig {
    rho: f64,
    velocity: VelocityPolynomial,
}

impl FlowConfig {
    pub fn new(rho: f64, velocity: VelocityPolynomial) -> Result<Self> {
        if !(rho >= 0.0 && rho.is_finite()) {
            return Err(Error::domain("rho", rho, "[0, inf)"));
        }
        if let Some(&bad) = velocity.coeffs().iter().find(|c| !c.is_finite()) {
            return Err(Error::domain("velocity coefficient", bad, "finite"));
        }
        Ok(Self { rho, velocity })
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn velocity(&self) -> &VelocityPolynomial {
        &self.velocity
    }

    /// Newton's sin-squared law, `rho v(x)^2 / (1 + f'^2)`.
    pub fn pressure(&self, x: f64, slope: f64) -> f64 {
        let v = self.velocity.eval(x);
        self.rho * v * v / (1.0 + slope * slope)
    }

    /// Integrand of the force functional in the curve parameter:
    /// `rho v(b1)^2 b1'^3 / (b1'^2 + b2'^2)`.
    ///
    /// Finite for every apex in `[0, 1]`: `b2'` vanishes only at `t = 1/2`,
    /// where `b1' = 1`.
    pub fn parametric_integrand(&self, curve: &QuadraticBezier, t: f64) -> f64 {
        let [x, _] = curve.eval_unchecked(t);
        let [dx, dy] = curve.deriv_unchecked(t);
        let v = self.velocity.eval(x);
        self.rho * v * v * dx * dx * dx / (dx * dx + dy * dy)
    }

    /// `F(a) = rho int_0^1 v(b1)^2 b1'^3 / (b1'^2 + b2'^2) dt`.
    ///
    /// The integral is taken over the speed normalized by its largest
    /// coefficient magnitude `s`, then multiplied by `rho s^2`. The quadrature
    /// tolerance therefore applies to a unit-scale integrand and `F` scales
    /// exactly with `rho` and quadratically with the speed.
    pub fn total_force_parametric(
        &self,
        curve: &QuadraticBezier,
        quad: &QuadratureSpec,
    ) -> Result<f64> {
        let (scale, unit) = self.normalized();
        if scale == 0.0 {
            return Ok(0.0);
        }
        Ok(self.rho * scale * scale * integrate(|t| unit.parametric_integrand(curve, t), quad)?)
    }

    /// `(s, cfg')` with `cfg'` the unit-density flow of speed `v / s`.
    fn normalized(&self) -> (f64, FlowConfig) {
        let scale = self
            .velocity
            .coeffs
            .iter()
            .fold(0.0_f64, |m, c| m.max(c.abs()));
        let coeffs = if scale > 0.0 {
            self.velocity.coeffs.iter().map(|c| c / scale).collect()
        } else {
            Vec::new()
        };
        let unit = FlowConfig {
            rho: 1.0,
            velocity: VelocityPolynomial { coeffs },
        };
        (scale, unit)
    }

    /// `F = rho int_0^1 v(x)^2 / (1 + f'(x)^2) dx` over the cartesian
    /// representation, with `f'(x)` obtained by inverting `b1`.
    pub fn total_force_cartesian(
        &self,
        curve: &QuadraticBezier,
        quad: &QuadratureSpec,
    ) -> Result<f64> {
        if !curve.is_cartesian() {
            return Err(Error::domain("apex", curve.apex(), "(0, 1)"));
        }
        let (scale, unit) = self.normalized();
        if scale == 0.0 {
            return Ok(0.0);
        }
        let integral = integrate(
            |x| {
                // x comes from the quadrature grid on [0, 1]; apex is interior.
                let t = curve.invert_x(x).unwrap_or(0.0);
                let slope = curve.cartesian_slope(t).unwrap_or(0.0);
                unit.pressure(x, slope)
            },
            quad,
        )?;
        Ok(self.rho * scale * scale * integral)
    }
}

/// Closed-form integrand for `v(x) = -5x^3`, without the factor `rho`:
///
/// ```text
/// 50 t^6 (a + t - 2at)^3 (2a + t - 2at)^6 / ((a + t - 2at)^2 + (1 - 2t)^2)
/// ```
pub fn cubic_flow_integrand(apex: f64, t: f64) -> f64 {
    let a = apex;
    let half_dx = a + t - 2.0 * a * t;
    let x_over_t = 2.0 * a + t - 2.0 * a * t;
    let dy = 1.0 - 2.0 * t;
    50.0 * powi(t, 6) * powi(half_dx, 3) * powi(x_over_t, 6) / (half_dx * half_dx + dy * dy)
}

fn powi(x: f64, n: u32) -> f64 {
    (0..n).fold(1.0, |acc, _| acc * x)
}
