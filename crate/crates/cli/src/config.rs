use std::path::PathBuf;

use newtonfoil_core::quad::{DEFAULT_ABS_TOL, DEFAULT_MAX_DEPTH, DEFAULT_NODES};
use newtonfoil_core::{FlowConfig, QuadratureSpec, VelocityPolynomial};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum QuadMethod {
    Simpson,
    Gauss,
}

/// Validated settings shared by `sweep` and `optimize`.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub velocity_coeffs: Vec<f64>,
    pub rho: f64,
    pub apex_range: (f64, f64),
    pub grid_size: usize,
    pub opt_tol: f64,
    pub quad: QuadratureSpec,
    /// `None` writes to standard output.
    pub output_path: Option<PathBuf>,
}

impl RunConfig {
    /// Defaults for everything except the speed profile.
    pub fn new(velocity_coeffs: Vec<f64>) -> Self {
        Self {
            velocity_coeffs,
            rho: 1.0,
            apex_range: (0.0, 1.0),
            grid_size: 101,
            opt_tol: 1e-8,
            quad: QuadratureSpec::default(),
            output_path: None,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let (lo, hi) = self.apex_range;
        if !(0.0..=1.0).contains(&lo) || !(0.0..=1.0).contains(&hi) || lo >= hi {
            return Err(CliError::Config(format!(
                "apex range [{lo}, {hi}] must satisfy 0 <= a-min < a-max <= 1"
            )));
        }
        if self.grid_size < 2 {
            return Err(CliError::Config(format!(
                "grid size {} must be at least 2",
                self.grid_size
            )));
        }
        if !(self.opt_tol > 0.0 && self.opt_tol.is_finite()) {
            return Err(CliError::Config(format!(
                "tolerance {} must be positive",
                self.opt_tol
            )));
        }
        self.quad.validate()?;
        self.flow()?;
        Ok(())
    }

    pub fn flow(&self) -> Result<FlowConfig, CliError> {
        Ok(FlowConfig::new(
            self.rho,
            VelocityPolynomial::new(self.velocity_coeffs.clone()),
        )?)
    }
}

/// Parses `"0,0,0,-5"` into ascending coefficients.
pub fn parse_coeffs(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|part| {
            let part = part.trim();
            part.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| format!("'{part}' is not a finite number"))
        })
        .collect()
}

pub fn quadrature(
    method: QuadMethod,
    abs_tol: f64,
    nodes: usize,
) -> Result<QuadratureSpec, CliError> {
    let spec = match method {
        QuadMethod::Simpson => QuadratureSpec::adaptive_simpson(abs_tol, DEFAULT_MAX_DEPTH)?,
        QuadMethod::Gauss => QuadratureSpec::gauss_legendre(nodes)?,
    };
    Ok(spec)
}

pub const DEFAULT_QUAD_TOL: f64 = DEFAULT_ABS_TOL;
pub const DEFAULT_QUAD_NODES: usize = DEFAULT_NODES;
