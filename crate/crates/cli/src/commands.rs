use std::io::{self, Write};
use std::path::Path;

use newtonfoil_core::{
    minimize, sweep, MinimizeStatus, OptimizationResult, QuadraticBezier, SweepResult,
};

use crate::config::RunConfig;
use crate::csv::{fmt_float, render, write_atomic};
use crate::CliError;

/// Output of one command: CSV data plus `# `-prefixed summary lines.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub csv: Option<String>,
    pub summary: Vec<String>,
    pub exit_code: i32,
}

impl Report {
    /// Writes the CSV to `out` (or stdout) and the summary to stdout.
    pub fn emit(&self, out: Option<&Path>) -> io::Result<()> {
        let stdout = io::stdout();
        let mut stdout = stdout.lock();
        if let Some(csv) = &self.csv {
            match out {
                Some(path) => write_atomic(path, csv)?,
                None => stdout.write_all(csv.as_bytes())?,
            }
        }
        for line in &self.summary {
            writeln!(stdout, "# {line}")?;
        }
        stdout.flush()
    }
}

fn below_half_note(apex: f64) -> Option<String> {
    (apex <= 0.5).then(|| {
        format!(
            "note: apex {} <= 0.5; the family is still monotone in x there, but the classical analysis only covers 0.5 < a < 1",
            fmt_float(apex)
        )
    })
}

/// Samples `F(a)` on the configured grid; CSV header `a,F`.
pub fn cmd_sweep(cfg: &RunConfig) -> Result<(SweepResult, Report), CliError> {
    cfg.validate()?;
    let flow = cfg.flow()?;
    let (lo, hi) = cfg.apex_range;
    let result = sweep(&flow, &cfg.quad, lo, hi, cfg.grid_size)?;
    let csv = render(&["a", "F"], result.samples.iter().map(|&(a, f)| vec![a, f]));
    let mut summary = Vec::new();
    if let Some(i) = result.argmin() {
        let (a, f) = result.samples[i];
        summary.push(format!(
            "grid minimum F = {} at a = {} (sample {i} of {})",
            fmt_float(f),
            fmt_float(a),
            result.grid_size()
        ));
        if result.is_flat() {
            summary.push("objective is flat on the grid".to_string());
        }
    }
    Ok((
        result,
        Report {
            csv: Some(csv),
            summary,
            exit_code: 0,
        },
    ))
}

/// Locates the minimizing apex. Exit code 0 on convergence, 2 otherwise.
///
/// With an output path, writes a one-row CSV
/// `apex_opt,force_opt,bracket_lo,bracket_hi,evaluations,converged`.
pub fn cmd_optimize(cfg: &RunConfig) -> Result<(OptimizationResult, Report), CliError> {
    cfg.validate()?;
    let flow = cfg.flow()?;
    let (lo, hi) = cfg.apex_range;
    let r = minimize(&flow, &cfg.quad, lo, hi, cfg.opt_tol)?;

    let mut summary = vec![
        format!("apex_opt = {}", fmt_float(r.apex_opt)),
        format!("force_opt = {}", fmt_float(r.force_opt)),
        format!(
            "bracket = [{}, {}]",
            fmt_float(r.bracket.0),
            fmt_float(r.bracket.1)
        ),
        format!("evaluations = {}", r.evaluations),
        format!("converged = {}", r.converged()),
    ];
    match r.status {
        MinimizeStatus::Converged => {}
        MinimizeStatus::BoundaryMinimum => summary.push(
            "minimum lies on the boundary of the apex range; no interior minimum bracketed"
                .to_string(),
        ),
        MinimizeStatus::FlatObjective => summary.push(
            "flat objective: F is constant on the pre-scan grid, no strict minimum".to_string(),
        ),
    }
    summary.extend(below_half_note(r.apex_opt));

    let csv = cfg.output_path.as_ref().map(|_| {
        let mut text =
            String::from("apex_opt,force_opt,bracket_lo,bracket_hi,evaluations,converged\n");
        text.push_str(&format!(
            "{},{},{},{},{},{}\n",
            fmt_float(r.apex_opt),
            fmt_float(r.force_opt),
            fmt_float(r.bracket.0),
            fmt_float(r.bracket.1),
            r.evaluations,
            r.converged()
        ));
        text
    });
    let exit_code = if r.converged() { 0 } else { 2 };
    Ok((
        r,
        Report {
            csv,
            summary,
            exit_code,
        },
    ))
}

/// Samples the profile at `n` equally spaced parameter values; CSV header
/// `t,x,y`.
pub fn cmd_profile(apex: f64, n: usize) -> Result<Report, CliError> {
    let curve = QuadraticBezier::new(apex)?;
    if n < 2 {
        return Err(CliError::Config(format!(
            "sample count {n} must be at least 2"
        )));
    }
    let mut rows = Vec::with_capacity(n);
    let mut top = (0.0, [0.0, f64::NEG_INFINITY]);
    for i in 0..n {
        let t = if i + 1 == n {
            1.0
        } else {
            i as f64 / (n - 1) as f64
        };
        let p = curve.eval(t)?;
        if p[1] > top.1[1] {
            top = (t, p);
        }
        rows.push(vec![t, p[0], p[1]]);
    }
    let mut summary = vec![format!(
        "max y = {} at t = {}, x = {}",
        fmt_float(top.1[1]),
        fmt_float(top.0),
        fmt_float(top.1[0])
    )];
    summary.extend(below_half_note(apex));
    Ok(Report {
        csv: Some(render(&["t", "x", "y"], rows)),
        summary,
        exit_code: 0,
    })
}
