//! Self-check suite behind the `check` subcommand.
//!
//! Each check recomposes the force functional from the public building
//! blocks and compares independent routes. The cartesian slope is taken
//! from a [`Model`] so tests can inject a faulty slope and confirm the
//! suite notices.

use std::fmt;

use newtonfoil_core::flow::cubic_flow_integrand;
use newtonfoil_core::{
    integrate, minimize, FlowConfig, QuadraticBezier, QuadratureSpec, VelocityPolynomial,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type SlopeFn = fn(&QuadraticBezier, f64) -> f64;

#[derive(Clone, Copy)]
pub struct Model {
    /// Cartesian slope `f'` at curve parameter `t`.
    pub slope: SlopeFn,
}

impl Model {
    pub fn reference() -> Self {
        Self {
            slope: |c, t| c.cartesian_slope(t).unwrap_or(f64::NAN),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] {}: {}", self.name, self.detail)
    }
}

pub const CROSS_FORM: &str = "cross-form";
pub const SYMMETRY: &str = "symmetry";
pub const INTEGRAND_CONSISTENCY: &str = "integrand-consistency";
pub const QUADRATURE_ORACLE: &str = "quadrature-oracle";
pub const CLOSED_FORM: &str = "closed-form";
pub const REFERENCE_OPTIMUM: &str = "reference-optimum";

pub fn run_checks(model: &Model) -> Vec<CheckOutcome> {
    vec![
        cross_form(model),
        symmetry(),
        integrand_consistency(model),
        quadrature_oracle(),
        closed_form(),
        reference_optimum(),
    ]
}

fn outcome(name: &'static str, passed: bool, detail: String) -> CheckOutcome {
    CheckOutcome {
        name,
        passed,
        detail,
    }
}

fn flow(coeffs: &[f64]) -> FlowConfig {
    FlowConfig::new(1.0, VelocityPolynomial::new(coeffs.to_vec())).expect("finite coefficients")
}

fn probe_flows() -> Vec<FlowConfig> {
    let mut flows = vec![
        flow(&[0.0, 0.0, 0.0, -5.0]),
        flow(&[1.0]),
        flow(&[0.0, 2.0]),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(2009);
    for _ in 0..5 {
        let degree = rng.gen_range(0..=5);
        let coeffs: Vec<f64> = (0..=degree).map(|_| rng.gen_range(-2.0..2.0)).collect();
        flows.push(flow(&coeffs));
    }
    flows
}

/// `rho int v(x)^2 / (1 + f'(x)^2) dx`, composed from the model slope.
fn cartesian_force(
    model: &Model,
    cfg: &FlowConfig,
    curve: &QuadraticBezier,
    quad: &QuadratureSpec,
) -> f64 {
    integrate(
        |x| {
            let t = curve.invert_x(x).unwrap_or(f64::NAN);
            cfg.pressure(x, (model.slope)(curve, t))
        },
        quad,
    )
    .unwrap_or(f64::NAN)
}

fn cross_form(model: &Model) -> CheckOutcome {
    let quad = QuadratureSpec::default();
    let mut worst_abs = 0.0_f64;
    let mut worst_rel = 0.0_f64;
    for cfg in probe_flows() {
        for k in 1..=9 {
            let curve = QuadraticBezier::new(k as f64 / 10.0).expect("interior apex");
            let p = cfg
                .total_force_parametric(&curve, &quad)
                .unwrap_or(f64::NAN);
            let c = cartesian_force(model, &cfg, &curve, &quad);
            let diff = (c - p).abs();
            worst_abs = worst_abs.max(diff);
            worst_rel = worst_rel.max(diff / p.max(1e-30));
            if diff.is_nan() {
                worst_rel = f64::INFINITY;
            }
        }
    }
    outcome(
        CROSS_FORM,
        worst_rel <= 1e-8,
        format!(
            "max |F_cartesian - F_parametric| = {worst_abs:e} (relative {worst_rel:e}, limit 1e-8)"
        ),
    )
}

fn symmetry() -> CheckOutcome {
    let quad = QuadratureSpec::default();
    let cfg = flow(&[1.0]);
    let force = |a: f64| {
        cfg.total_force_parametric(&QuadraticBezier::new(a).expect("apex in [0, 1]"), &quad)
            .unwrap_or(f64::NAN)
    };
    let worst = (0..=100)
        .map(|i| {
            let a = i as f64 / 100.0;
            (force(a) - force(1.0 - a)).abs()
        })
        .fold(
            0.0_f64,
            |m, d| if d.is_nan() { f64::INFINITY } else { m.max(d) },
        );
    outcome(
        SYMMETRY,
        worst <= 1e-10,
        format!("max |F(a) - F(1-a)| = {worst:e} for v = 1 (limit 1e-10)"),
    )
}

/// The closed-form `v = -5x^3` integrand against the generic integrand and
/// against `v^2 b1' / (1 + f'^2)` built from the model slope.
fn integrand_consistency(model: &Model) -> CheckOutcome {
    let cfg = flow(&[0.0, 0.0, 0.0, -5.0]);
    let mut worst = 0.0_f64;
    for i in 0..100 {
        let a = (i as f64 + 0.5) / 100.0;
        let curve = QuadraticBezier::new(a).expect("interior apex");
        for j in 0..100 {
            let t = j as f64 / 99.0;
            let literal = cubic_flow_integrand(a, t);
            let generic = cfg.parametric_integrand(&curve, t);
            let [x, _] = curve.eval(t).expect("t in [0, 1]");
            let [dx, _] = curve.deriv(t).expect("t in [0, 1]");
            let slope = (model.slope)(&curve, t);
            let via_slope = cfg.pressure(x, slope) * dx;
            let scale = literal.abs().max(1e-300);
            for other in [generic, via_slope] {
                let rel = (literal - other).abs() / scale;
                worst = if rel.is_nan() {
                    f64::INFINITY
                } else {
                    worst.max(rel)
                };
            }
        }
    }
    outcome(
        INTEGRAND_CONSISTENCY,
        worst <= 1e-12,
        format!("max relative deviation {worst:e} on a 100x100 (a, t) grid (limit 1e-12)"),
    )
}

fn quadrature_oracle() -> CheckOutcome {
    let simpson = QuadratureSpec::default();
    let gauss = QuadratureSpec::gauss_legendre(64).expect("valid node count");
    let riemann = QuadratureSpec::riemann_oracle(1_000_000).expect("valid panel count");
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let (mut vs_oracle, mut vs_gauss) = (0.0_f64, 0.0_f64);
    for _ in 0..20 {
        let a: f64 = rng.gen_range(0.0..1.0);
        let f = |t: f64| cubic_flow_integrand(a, t);
        let s = integrate(f, &simpson).unwrap_or(f64::NAN);
        let g = integrate(f, &gauss).unwrap_or(f64::NAN);
        let r = integrate(f, &riemann).unwrap_or(f64::NAN);
        vs_oracle = vs_oracle.max((s - r).abs());
        vs_gauss = vs_gauss.max((s - g).abs());
    }
    outcome(
        QUADRATURE_ORACLE,
        vs_oracle <= 1e-5 && vs_gauss <= 1e-9,
        format!("max |simpson - midpoint(1e6)| = {vs_oracle:e} (limit 1e-5), max |simpson - gauss(64)| = {vs_gauss:e} (limit 1e-9)"),
    )
}

fn closed_form() -> CheckOutcome {
    let exact = 2f64.atan() / 2.0;
    let f = |t: f64| 1.0 / (1.0 + (2.0 - 4.0 * t).powi(2));
    let mut worst = 0.0_f64;
    for spec in [
        QuadratureSpec::default(),
        QuadratureSpec::gauss_legendre(64).expect("valid"),
    ] {
        worst = worst.max((integrate(f, &spec).unwrap_or(f64::NAN) - exact).abs());
    }
    let curve = QuadraticBezier::new(0.5).expect("valid apex");
    let force = flow(&[1.0])
        .total_force_parametric(&curve, &QuadratureSpec::default())
        .unwrap_or(f64::NAN);
    let force_err = (force - exact).abs();
    outcome(
        CLOSED_FORM,
        worst <= 1e-10 && force_err <= 1e-9,
        format!("max |integral - atan(2)/2| = {worst:e} (limit 1e-10), |F(0.5) - atan(2)/2| = {force_err:e} (limit 1e-9)"),
    )
}

fn reference_optimum() -> CheckOutcome {
    let cfg = flow(&[0.0, 0.0, 0.0, -5.0]);
    match minimize(&cfg, &QuadratureSpec::default(), 0.0, 1.0, 1e-8) {
        Ok(r) => {
            let err = (r.apex_opt - 0.682564).abs();
            outcome(
                REFERENCE_OPTIMUM,
                r.converged() && err <= 5e-5,
                format!(
                    "a0 = {} for v = -5x^3 (|a0 - 0.682564| = {err:e}, limit 5e-5)",
                    r.apex_opt
                ),
            )
        }
        Err(e) => outcome(REFERENCE_OPTIMUM, false, e.to_string()),
    }
}
