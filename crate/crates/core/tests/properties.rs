use newtonfoil_core::flow::{cubic_flow_integrand, FlowConfig, VelocityPolynomial};
use newtonfoil_core::{integrate, minimize, sweep, ElProblem, QuadraticBezier, QuadratureSpec};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn cubic_flow(rho: f64) -> FlowConfig {
    FlowConfig::new(rho, VelocityPolynomial::new([0.0, 0.0, 0.0, -5.0])).unwrap()
}

fn curve(a: f64) -> QuadraticBezier {
    QuadraticBezier::new(a).unwrap()
}

/// Plain midpoint rule, kept separate from the crate's quadrature code.
fn midpoint_oracle(f: impl Fn(f64) -> f64, panels: usize) -> f64 {
    let h = 1.0 / panels as f64;
    (0..panels).map(|i| f((i as f64 + 0.5) * h)).sum::<f64>() * h
}

fn random_velocity(rng: &mut ChaCha8Rng) -> VelocityPolynomial {
    let degree = rng.gen_range(0..=5);
    VelocityPolynomial::new(
        (0..=degree)
            .map(|_| rng.gen_range(-2.0..2.0))
            .collect::<Vec<_>>(),
    )
}

#[test]
fn cubic_force_matches_frozen_reference() {
    // F(0.682564) for rho = 1, v = -5x^3; computed independently with an
    // adaptive Gauss-Kronrod routine at 1e-14 before this crate existed.
    const REFERENCE: f64 = 1.100_272_436_012_133;
    let c = curve(0.682564);
    let f = cubic_flow(1.0)
        .total_force_parametric(&c, &QuadratureSpec::default())
        .unwrap();
    assert!((f - REFERENCE).abs() < 1e-9, "{f}");
    let brute = midpoint_oracle(|t| cubic_flow_integrand(0.682564, t), 10_000_000);
    assert!((brute - REFERENCE).abs() < 1e-9, "{brute}");
}

#[test]
fn cubic_integrand_matches_generic_integrand_on_grid() {
    let cfg = cubic_flow(1.0);
    for i in 0..100 {
        let a = (i as f64 + 0.5) / 100.0;
        let c = curve(a);
        for j in 0..100 {
            let t = j as f64 / 99.0;
            let generic = cfg.parametric_integrand(&c, t);
            let literal = cubic_flow_integrand(a, t);
            let scale = generic.abs().max(1e-300);
            assert!((generic - literal).abs() <= 1e-12 * scale, "a={a} t={t}");
        }
    }
}

#[test]
fn cartesian_and_parametric_forms_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let q = QuadratureSpec::default();
    for _ in 0..20 {
        let cfg = FlowConfig::new(1.0, random_velocity(&mut rng)).unwrap();
        for k in 1..=9 {
            let c = curve(k as f64 / 10.0);
            let p = cfg.total_force_parametric(&c, &q).unwrap();
            let x = cfg.total_force_cartesian(&c, &q).unwrap();
            assert!(
                (x - p).abs() / p.max(1e-30) <= 1e-8,
                "{cfg:?} a={}: {p} vs {x}",
                c.apex()
            );
        }
    }
}

#[test]
fn constant_flow_is_symmetric_in_apex() {
    let cfg = FlowConfig::new(1.0, VelocityPolynomial::constant(1.0)).unwrap();
    let q = QuadratureSpec::default();
    for i in 0..=100 {
        let a = i as f64 / 100.0;
        let f = cfg.total_force_parametric(&curve(a), &q).unwrap();
        let g = cfg.total_force_parametric(&curve(1.0 - a), &q).unwrap();
        assert!((f - g).abs() <= 1e-10, "a={a}");
    }
    let s = sweep(&cfg, &q, 0.0, 1.0, 101).unwrap();
    for i in 0..101 {
        assert!((s.samples[i].1 - s.samples[100 - i].1).abs() <= 1e-10);
    }
}

#[test]
fn quadrature_matches_midpoint_oracle_on_cubic_flow() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let q = QuadratureSpec::default();
    let gl = QuadratureSpec::gauss_legendre(64).unwrap();
    for _ in 0..20 {
        let a: f64 = rng.gen_range(0.0..1.0);
        let simpson = integrate(|t| cubic_flow_integrand(a, t), &q).unwrap();
        let gauss = integrate(|t| cubic_flow_integrand(a, t), &gl).unwrap();
        let brute = midpoint_oracle(|t| cubic_flow_integrand(a, t), 1_000_000);
        assert!((simpson - brute).abs() <= 1e-5, "a={a}");
        assert!(
            (simpson - gauss).abs() <= 1e-9,
            "a={a}: {simpson} vs {gauss}"
        );
    }
}

#[test]
fn sweep_minimum_brackets_reference_value() {
    let s = sweep(&cubic_flow(1.0), &QuadratureSpec::default(), 0.0, 1.0, 101).unwrap();
    let (a, _) = s.samples[s.argmin().unwrap()];
    assert!(0.6 < a && a < 0.8, "{a}");
}

#[test]
fn constant_flow_minimum_is_centered() {
    let cfg = FlowConfig::new(1.0, VelocityPolynomial::constant(1.0)).unwrap();
    let q = QuadratureSpec::default();
    // Brute-force unimodality check on a fine grid.
    let gl = QuadratureSpec::gauss_legendre(64).unwrap();
    let values: Vec<f64> = (0..=10_000)
        .map(|i| {
            let a = 0.05 + 0.9 * i as f64 / 10_000.0;
            cfg.total_force_parametric(&curve(a), &gl).unwrap()
        })
        .collect();
    let argmin = values
        .iter()
        .enumerate()
        .min_by(|x, y| x.1.total_cmp(y.1))
        .unwrap()
        .0;
    assert!(values[..argmin].windows(2).all(|w| w[0] > w[1]));
    assert!(values[argmin..].windows(2).all(|w| w[0] < w[1]));

    let r = minimize(&cfg, &q, 0.05, 0.95, 1e-8).unwrap();
    assert!(r.converged());
    assert!((r.apex_opt - 0.5).abs() <= 1e-6, "{r:?}");
}

#[test]
fn minimizer_respects_prescan() {
    let q = QuadratureSpec::default();
    let cfg = cubic_flow(1.0);
    let scan = sweep(&cfg, &q, 0.0, 1.0, 101).unwrap();
    let r = minimize(&cfg, &q, 0.0, 1.0, 1e-8).unwrap();
    assert!(r.bracket.0 < r.apex_opt && r.apex_opt < r.bracket.1);
    let lowest = scan
        .samples
        .iter()
        .map(|s| s.1)
        .fold(f64::INFINITY, f64::min);
    assert!(r.force_opt <= lowest + 1e-10);
    let at = |a: f64| cfg.total_force_parametric(&curve(a), &q).unwrap();
    assert!(r.force_opt <= at(r.bracket.0));
    assert!(r.force_opt <= at(r.bracket.1));
}

#[test]
fn argmin_is_scale_invariant() {
    let q = QuadratureSpec::default();
    let tol = 1e-8;
    let base = minimize(&cubic_flow(1.0), &q, 0.0, 1.0, tol).unwrap();
    for lambda in [0.01, 7.3, 250.0] {
        let dense = minimize(&cubic_flow(lambda), &q, 0.0, 1.0, tol).unwrap();
        let fast_cfg = FlowConfig::new(1.0, cubic_flow(1.0).velocity().scaled(lambda)).unwrap();
        let fast = minimize(&fast_cfg, &q, 0.0, 1.0, tol).unwrap();
        assert!(
            (dense.apex_opt - base.apex_opt).abs() < 10.0 * tol,
            "rho x{lambda}"
        );
        assert!(
            (fast.apex_opt - base.apex_opt).abs() < 10.0 * tol,
            "v x{lambda}"
        );
    }
}

#[test]
fn quartic_root_counts_match_sign_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let c: f64 = rng.gen_range(-2.0..2.0);
        let x: f64 = rng.gen_range(0.0..2.0);
        let prob = ElProblem::new(1.0, c).unwrap();
        let roots = prob.quartic_real_roots(x);
        for &p in &roots {
            assert!(prob.quartic(x, p).abs() <= prob.residual_bound(x));
        }
        assert!(roots.windows(2).all(|w| w[0] < w[1]));
        let r = prob.root_bound(x);
        let n = 100_000;
        let mut changes = 0;
        let mut prev = prob.quartic(x, -r);
        for i in 1..=n {
            let cur = prob.quartic(x, -r + 2.0 * r * i as f64 / n as f64);
            if (prev < 0.0) != (cur < 0.0) {
                changes += 1;
            }
            prev = cur;
        }
        assert_eq!(roots.len(), changes, "c={c} x={x}");
    }
}

#[test]
fn quartic_slope_field_is_stationary() {
    let c = -0.02;
    let prob = ElProblem::new(1.5, c).unwrap();
    let cfg = prob.flow(1.0).unwrap();
    // Smaller positive root: a continuous branch for x where two roots exist.
    let branch = |x: f64| prob.quartic_real_roots(x)[0];
    for i in 0..=20 {
        let x = 0.5 + 0.5 * i as f64 / 20.0;
        let r = newtonfoil_core::el_residual(&cfg, branch, x, 1e-5).unwrap();
        assert!(r.abs() <= 1e-6, "x={x}: {r}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn force_is_non_negative(a in 0.0..=1.0f64, rho in 0.0..10.0f64, c0 in -3.0..3.0f64, c1 in -3.0..3.0f64) {
        let cfg = FlowConfig::new(rho, VelocityPolynomial::new([c0, c1])).unwrap();
        let f = cfg.total_force_parametric(&curve(a), &QuadratureSpec::default()).unwrap();
        prop_assert!(f >= 0.0);
    }

    #[test]
    fn force_scales_with_rho_and_speed(a in 0.01..0.99f64, lambda in 0.1..10.0f64) {
        let q = QuadratureSpec::default();
        let c = curve(a);
        let base = cubic_flow(1.0).total_force_parametric(&c, &q).unwrap();
        let dense = cubic_flow(lambda).total_force_parametric(&c, &q).unwrap();
        prop_assert!((dense - lambda * base).abs() <= 1e-14 * lambda * base);
        let fast = FlowConfig::new(1.0, cubic_flow(1.0).velocity().scaled(lambda)).unwrap();
        let f = fast.total_force_parametric(&c, &q).unwrap();
        prop_assert!((f - lambda * lambda * base).abs() <= 1e-12 * lambda * lambda * base);
    }

    #[test]
    fn integration_is_linear(alpha in -3.0..3.0f64, beta in -3.0..3.0f64, w in 0.5..4.0f64) {
        let f = |t: f64| libm::sin(w * t) + t * t;
        let g = |t: f64| libm::exp(-w * t);
        // Adaptive refinement depends on the integrand, so linearity holds to
        // the tolerance; run it well below the 1e-12 bound.
        let adaptive = QuadratureSpec::adaptive_simpson(1e-14, 50).unwrap();
        for q in [adaptive, QuadratureSpec::gauss_legendre(64).unwrap()] {
            let combined = integrate(|t| alpha * f(t) + beta * g(t), &q).unwrap();
            let split = alpha * integrate(f, &q).unwrap() + beta * integrate(g, &q).unwrap();
            prop_assert!((combined - split).abs() <= 1e-12);
        }
    }
}
