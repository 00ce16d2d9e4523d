//! The quadratic Bezier profile family.
//!
//! Every member has control points `(0,0)`, `(a,1)`, `(1,0)` where `a` is the
//! apex parameter. In components:
//!
//! ```text
//! b1(t) = 2at + (1 - 2a)t^2
//! b2(t) = 2t - 2t^2
//! ```
//!
//! `b1'(t) = 2a + 2(1 - 2a)t` is linear in `t` with value `2a` at `t = 0` and
//! `2 - 2a` at `t = 1`, so `b1` is strictly increasing for every `a` in the
//! open interval `(0, 1)` and the curve is the graph of a function `f`.
//! At `a = 0` or `a = 1` the parametric form is still valid but `b1'`
//! vanishes at one end; operations that need the cartesian form reject those
//! apex values.

use crate::error::{Error, Result};

/// Values of `b1'` at or below this are treated as a vertical tangent.
const SLOPE_GUARD: f64 = 1e-14;

/// Slack allowed on the closed-form inversion before falling back to bisection.
const INVERT_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticBezier {
    apex: f64,
}

/// Sign of the cartesian second derivative `f''`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurvatureSign {
    Negative,
    Zero,
    Positive,
}

impl QuadraticBezier {
    /// Builds the curve with middle control point `(apex, 1)`.
    ///
    /// Accepts the closed interval `[0, 1]`; the endpoints are only usable in
    /// parametric operations.
    pub fn new(apex: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&apex) {
            return Err(Error::domain("apex", apex, "[0, 1]"));
        }
        Ok(Self { apex })
    }

    pub fn apex(&self) -> f64 {
        self.apex
    }

    pub fn control_points(&self) -> [[f64; 2]; 3] {
        [[0.0, 0.0], [self.apex, 1.0], [1.0, 0.0]]
    }

    /// True when `0 < apex < 1`, i.e. the cartesian representation exists on
    /// all of `[0, 1]`.
    pub fn is_cartesian(&self) -> bool {
        self.apex > 0.0 && self.apex < 1.0
    }

    fn require_cartesian(&self) -> Result<()> {
        if self.is_cartesian() {
            Ok(())
        } else {
            Err(Error::domain("apex", self.apex, "(0, 1)"))
        }
    }

    /// Point `(b1(t), b2(t))`.
    pub fn eval(&self, t: f64) -> Result<[f64; 2]> {
        check_unit("t", t)?;
        Ok(self.eval_unchecked(t))
    }

    /// Derivative `(b1'(t), b2'(t))`.
    pub fn deriv(&self, t: f64) -> Result<[f64; 2]> {
        check_unit("t", t)?;
        Ok(self.deriv_unchecked(t))
    }

    /// Cartesian slope `f'(x(t)) = (1 - 2t) / (a + (1 - 2a)t)`.
    pub fn cartesian_slope(&self, t: f64) -> Result<f64> {
        check_unit("t", t)?;
        let half_dx = self.apex + (1.0 - 2.0 * self.apex) * t;
        if half_dx <= SLOPE_GUARD {
            return Err(Error::domain("apex", self.apex, "(0, 1)"));
        }
        Ok((1.0 - 2.0 * t) / half_dx)
    }

    /// Cartesian second derivative `f''` at parameter `t`, computed as
    /// `(b2'' b1' - b1'' b2') / b1'^3`.
    pub fn cartesian_curvature(&self, t: f64) -> Result<f64> {
        check_unit("t", t)?;
        self.require_cartesian()?;
        let [dx, _] = self.deriv_unchecked(t);
        Ok(self.curvature_numerator(t) / (dx * dx * dx))
    }

    // b2'' b1' - b1'' b2'; algebraically the constant -4.
    fn curvature_numerator(&self, t: f64) -> f64 {
        let [dx, dy] = self.deriv_unchecked(t);
        let ddx = 2.0 * (1.0 - 2.0 * self.apex);
        let ddy = -4.0;
        ddy * dx - ddx * dy
    }

    /// Sign of `f''` along the profile.
    ///
    /// `b1'` is positive on the whole curve, so the sign is that of the
    /// numerator, which does not depend on `t`. Both ends are probed and must
    /// agree.
    pub fn cartesian_curvature_numerator_sign(&self) -> CurvatureSign {
        let start = self.curvature_numerator(0.0);
        let end = self.curvature_numerator(1.0);
        match (sign_of(start), sign_of(end)) {
            (a, b) if a == b => a,
            _ => CurvatureSign::Zero,
        }
    }

    /// The unique `t` in `[0, 1]` with `b1(t) = x`.
    ///
    /// Uses the cancellation-free root `t = x / (a + sqrt(a^2 + (1 - 2a)x))`
    /// of `(1 - 2a)t^2 + 2at - x = 0`, which also covers `a = 1/2`.
    pub fn invert_x(&self, x: f64) -> Result<f64> {
        check_unit("x", x)?;
        let a = self.apex;
        if x == 0.0 || x == 1.0 {
            return Ok(x);
        }
        let disc = a * a + (1.0 - 2.0 * a) * x;
        let t = x / (a + libm::sqrt(disc.max(0.0)));
        if t.is_finite() && (-INVERT_SLACK..=1.0 + INVERT_SLACK).contains(&t) {
            Ok(t.clamp(0.0, 1.0))
        } else {
            Ok(self.invert_x_bisect(x))
        }
    }

    fn invert_x_bisect(&self, x: f64) -> f64 {
        let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
        while hi - lo > 1e-15 {
            let mid = 0.5 * (lo + hi);
            if self.eval_unchecked(mid)[0] < x {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    pub(crate) fn eval_unchecked(&self, t: f64) -> [f64; 2] {
        let a = self.apex;
        [2.0 * a * t + (1.0 - 2.0 * a) * t * t, 2.0 * t - 2.0 * t * t]
    }

    pub(crate) fn deriv_unchecked(&self, t: f64) -> [f64; 2] {
        let a = self.apex;
        [2.0 * a + 2.0 * (1.0 - 2.0 * a) * t, 2.0 - 4.0 * t]
    }
}

fn check_unit(what: &'static str, value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::domain(what, value, "[0, 1]"))
    }
}

fn sign_of(v: f64) -> CurvatureSign {
    if v < 0.0 {
        CurvatureSign::Negative
    } else if v > 0.0 {
        CurvatureSign::Positive
    } else {
        CurvatureSign::Zero
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn curve(a: f64) -> QuadraticBezier {
        QuadraticBezier::new(a).unwrap()
    }

    #[test]
    fn eval_examples() {
        assert_eq!(curve(0.7).eval(0.0).unwrap(), [0.0, 0.0]);
        assert_eq!(curve(0.7).eval(1.0).unwrap(), [1.0, 0.0]);
        assert_eq!(curve(0.5).eval(0.5).unwrap(), [0.5, 0.5]);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(QuadraticBezier::new(-0.1).is_err());
        assert!(QuadraticBezier::new(1.5).is_err());
        assert!(QuadraticBezier::new(f64::NAN).is_err());
        assert!(curve(0.5).eval(1.0001).is_err());
        assert!(curve(0.5).deriv(-1e-9).is_err());
        assert!(curve(0.5).invert_x(2.0).is_err());
    }

    #[test]
    fn deriv_examples() {
        for t in [0.0, 0.3, 0.9] {
            assert_eq!(curve(0.5).deriv(t).unwrap()[0], 1.0);
        }
        let [dx, dy] = curve(0.7).deriv(1.0).unwrap();
        assert!((dx - 0.6).abs() < 1e-15);
        assert_eq!(dy, -2.0);
        assert_eq!(curve(0.123).deriv(0.5).unwrap()[1], 0.0);
    }

    #[test]
    fn slope_examples() {
        assert_eq!(curve(0.3).cartesian_slope(0.5).unwrap(), 0.0);
        assert_eq!(curve(0.5).cartesian_slope(0.0).unwrap(), 2.0);
        assert_eq!(curve(0.5).cartesian_slope(1.0).unwrap(), -2.0);
    }

    #[test]
    fn boundary_apex_is_parametric_only() {
        let left = curve(0.0);
        assert_eq!(left.eval(0.5).unwrap(), [0.25, 0.5]);
        assert!(left.cartesian_slope(0.0).is_err());
        assert!(left.cartesian_slope(0.5).is_ok());
        assert!(curve(1.0).cartesian_slope(1.0).is_err());
        assert!(curve(1.0).cartesian_curvature(0.2).is_err());
    }

    #[test]
    fn curvature_examples() {
        let half = curve(0.5);
        for t in [0.0, 0.25, 0.5, 1.0] {
            assert_eq!(half.cartesian_curvature(t).unwrap(), -4.0);
        }
        let k = curve(0.7).cartesian_curvature(0.0).unwrap();
        assert!((k - (-4.0 / (1.4_f64 * 1.4 * 1.4))).abs() < 1e-14);
        assert!((k + 1.457_725_947_521_866).abs() < 1e-12);
    }

    #[test]
    fn invert_examples() {
        let c = curve(0.8);
        assert_eq!(c.invert_x(0.0).unwrap(), 0.0);
        assert_eq!(c.invert_x(1.0).unwrap(), 1.0);
        assert_eq!(curve(0.5).invert_x(0.25).unwrap(), 0.25);
        // a = 0 gives b1 = t^2.
        assert!((curve(0.0).invert_x(0.25).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn monotone_on_grid() {
        for i in 1..100 {
            let c = curve(i as f64 / 100.0);
            for j in 0..=1000 {
                assert!(c.deriv(j as f64 / 1000.0).unwrap()[0] > 0.0);
            }
        }
    }

    proptest! {
        #[test]
        fn endpoints_are_exact(a in 0.0..=1.0f64) {
            let c = curve(a);
            prop_assert_eq!(c.eval(0.0).unwrap(), [0.0, 0.0]);
            prop_assert_eq!(c.eval(1.0).unwrap(), [1.0, 0.0]);
        }

        #[test]
        fn inversion_round_trip(a in 1e-6..1.0f64, x in 0.0..=1.0f64) {
            let c = curve(a);
            let t = c.invert_x(x).unwrap();
            prop_assert!((0.0..=1.0).contains(&t));
            prop_assert!((c.eval(t).unwrap()[0] - x).abs() <= 1e-12);
        }

        #[test]
        fn convex_for_whole_family(a in 1e-9..1.0f64) {
            prop_assert_eq!(curve(a).cartesian_curvature_numerator_sign(), CurvatureSign::Negative);
        }

        #[test]
        fn slope_matches_derivative_ratio(a in 1e-3..0.999f64, t in 0.0..=1.0f64) {
            let c = curve(a);
            let [dx, dy] = c.deriv(t).unwrap();
            let slope = c.cartesian_slope(t).unwrap();
            let ratio = dy / dx;
            prop_assert!((slope - ratio).abs() <= 1e-14 * ratio.abs().max(1e-300) + 1e-300);
        }
    }
}
