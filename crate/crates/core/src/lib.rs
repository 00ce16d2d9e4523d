//! Minimum-resistance convex profiles in a variable-speed freestream.
//!
//! The pressure on a profile `y = f(x)` immersed in a flow parallel to the
//! y-axis follows Newton's sin-squared law, `p = rho * v(x)^2 / (1 + f'(x)^2)`.
//! The total force is minimized over the one-parameter family of quadratic
//! Bezier curves with control points `(0,0)`, `(a,1)`, `(1,0)`.
//!
//! The crate is `no_std` and only needs `alloc`. Modules:
//!
//! * [`bezier`]: the curve family, its derivatives and cartesian form.
//! * [`flow`]: velocity polynomials, the pressure law and the force functional.
//! * [`quad`]: adaptive Simpson, Gauss-Legendre and a midpoint oracle on `[0,1]`.
//! * [`optimize`]: sweeps of `F(a)` and golden-section refinement of the minimizer.
//! * [`euler_lagrange`]: the stationarity quartic for linear speed profiles.

#![no_std]

extern crate alloc;

pub mod bezier;
pub mod error;
pub mod euler_lagrange;
pub mod flow;
pub mod optimize;
pub mod quad;

pub use bezier::{CurvatureSign, QuadraticBezier};
pub use error::{Error, Result};
pub use euler_lagrange::{el_residual, ElProblem};
pub use flow::{FlowConfig, VelocityPolynomial};
pub use optimize::{minimize, sweep, MinimizeStatus, OptimizationResult, SweepResult};
pub use quad::{integrate, GaussLegendreRule, QuadratureSpec};
