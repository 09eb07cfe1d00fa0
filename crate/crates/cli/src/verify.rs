use crate::config::{CheckKind, OutputFormat, RunConfig};
use crate::error::CliResult;
use crate::output::{write_csv, write_json, Cell, Row};
use dirac2d::analytic::{analytic_spectrum, lower_component};
use dirac2d::numsolve::{inner, isospectral_check, norm, raw_eigenvalues, DEFAULT_TOL};
use dirac2d::qes::{qes_ground_state, zero_mode_residual};
use dirac2d::superpot::{apply_lowering, ground_state_from_w, partner_potentials};
use dirac2d::{superpotential_from_model, Family, PartnerPotentials, Result};
use serde::Serialize;
use std::io::Write;

pub const ISOSPECTRAL_TOL: f64 = 2e-3;
pub const INTERTWINE_TOL: f64 = 1e-2;
pub const ANALYTIC_VS_NUMERIC_TOL: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct Entry {
    pub check: &'static str,
    pub status: Status,
    pub metric: f64,
    pub tolerance: f64,
    pub detail: String,
}

impl Row for Entry {
    fn cells(&self) -> Vec<Cell<'_>> {
        vec![
            Cell::Text(self.check),
            Cell::Text(match self.status {
                Status::Pass => "pass",
                Status::Fail => "fail",
            }),
            Cell::Float(self.metric),
            Cell::Float(self.tolerance),
            Cell::Text(&self.detail),
        ]
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub entries: Vec<Entry>,
}

/// How a verify run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    AllPassed,
    ChecksFailed,
    /// A check could not be evaluated at all.
    Broken,
}

struct Measured {
    metric: f64,
    tolerance: f64,
    detail: String,
}

fn entry(check: CheckKind, m: Measured) -> Entry {
    Entry {
        check: check.name(),
        status: if m.metric <= m.tolerance { Status::Pass } else { Status::Fail },
        metric: m.metric,
        tolerance: m.tolerance,
        detail: m.detail,
    }
}

struct Context<'a> {
    cfg: &'a RunConfig,
    pp: PartnerPotentials,
}

impl Context<'_> {
    fn exact(&self) -> bool {
        self.cfg.model.family().is_exactly_solvable()
    }

    /// Normalized f₋ of level n and its ε², from closed form when available.
    fn lower(&self, n: usize) -> Result<(Vec<f64>, f64)> {
        let model = &self.cfg.model;
        if self.exact() {
            let eps2 = dirac2d::analytic::epsilon_sq(model, n)?;
            return Ok((lower_component(model, n, &self.cfg.grid)?, eps2));
        }
        let op = self.pp.minus_operator()?;
        let eig = op.lowest_eigenvalues(n + 1, DEFAULT_TOL)?;
        Ok((op.eigenvector(eig[n])?, eig[n]))
    }

    fn isospectral(&self) -> Result<Measured> {
        let k = (self.cfg.n_max + 1).max(2);
        let rep = isospectral_check(&self.pp, k, ISOSPECTRAL_TOL)?;
        Ok(Measured {
            metric: rep.max_deviation,
            tolerance: ISOSPECTRAL_TOL,
            detail: format!("eigs(V+)[i] vs eigs(V-)[i+1] for {} pairs", k - 1),
        })
    }

    fn intertwine(&self) -> Result<Measured> {
        let w = superpotential_from_model(&self.cfg.model)?;
        let grid = &self.cfg.grid;
        let top = self.cfg.n_max.clamp(1, 3);
        let plus = self.pp.plus_operator()?;
        let eig_plus = plus.lowest_eigenvalues(top, DEFAULT_TOL)?;
        let mut worst_norm = 0.0f64;
        let mut worst_shape = 0.0f64;
        for n in 1..=top {
            let (f, eps2) = self.lower(n)?;
            let eps = eps2.max(0.0).sqrt();
            let mut g = apply_lowering(&w, &f, grid)?;
            let gn = norm(&g, grid);
            worst_norm = worst_norm.max((gn - eps).abs() / eps);
            g.iter_mut().for_each(|v| *v /= gn);
            let mut e = plus.eigenvector(eig_plus[n - 1])?;
            if inner(&e, &g, grid) < 0.0 {
                e.iter_mut().for_each(|v| *v = -*v);
            }
            let d = g.iter().zip(&e).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
            worst_shape = worst_shape.max(d);
        }
        Ok(Measured {
            metric: worst_norm.max(worst_shape),
            tolerance: INTERTWINE_TOL,
            detail: format!(
                "levels 1..={top}: |norm - eps|/eps {worst_norm:.3e}, sup vs V+ eigenvector {worst_shape:.3e}"
            ),
        })
    }

    fn orthonormal(&self) -> Result<Measured> {
        let tolerance = match self.cfg.model.family() {
            Family::Oscillator | Family::Coulomb => 1e-6,
            Family::Morse => 1e-4,
            _ => 1e-3,
        };
        let fs = (0..=self.cfg.n_max)
            .map(|n| self.lower(n).map(|(f, _)| f))
            .collect::<Result<Vec<_>>>()?;
        let mut worst = 0.0f64;
        for i in 0..fs.len() {
            for j in 0..fs.len() {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((inner(&fs[i], &fs[j], &self.cfg.grid) - target).abs());
            }
        }
        Ok(Measured {
            metric: worst,
            tolerance,
            detail: format!("Gram matrix of f_minus(0..={})", self.cfg.n_max),
        })
    }

    fn ground_residual(&self) -> Result<Measured> {
        let model = &self.cfg.model;
        let grid = &self.cfg.grid;
        let h = grid.h();
        let (metric, how) = if model.family().is_qes() {
            (qes_ground_state(model, grid)?.residual_sup, "closed-form f0")
        } else if self.exact() {
            (zero_mode_residual(&lower_component(model, 0, grid)?, &self.pp), "closed-form f0")
        } else {
            let w = superpotential_from_model(model)?;
            (zero_mode_residual(&ground_state_from_w(&w, grid)?, &self.pp), "f0 integrated from W")
        };
        Ok(Measured {
            metric,
            tolerance: 100.0 * h * h,
            detail: format!("sup|-f0'' + V- f0| / sup|f0| for {how}, h = {h:.3e}"),
        })
    }

    fn analytic_vs_numeric(&self) -> Result<Measured> {
        let model = &self.cfg.model;
        let top = if self.exact() { self.cfg.n_max } else { 0 };
        let a = analytic_spectrum(model, top)?.epsilon_sq();
        let n = raw_eigenvalues(model, &self.cfg.grid, top + 1)?;
        let worst = a
            .iter()
            .zip(&n)
            .map(|(x, y)| (x - y).abs() / x.max(1.0))
            .fold(0.0, f64::max);
        Ok(Measured {
            metric: worst,
            tolerance: ANALYTIC_VS_NUMERIC_TOL,
            detail: format!("relative epsilon_sq error over levels 0..={top}"),
        })
    }
}

pub fn run_checks(cfg: &RunConfig) -> (VerifyReport, Verdict) {
    let pp = superpotential_from_model(&cfg.model).and_then(|w| partner_potentials(&w, &cfg.grid));
    let mut verdict = Verdict::AllPassed;
    let mut entries = Vec::with_capacity(cfg.checks.len());
    for &check in &cfg.checks {
        let measured = match &pp {
            Err(e) => Err(e.clone()),
            Ok(pp) => {
                let ctx = Context { cfg, pp: pp.clone() };
                match check {
                    CheckKind::Isospectral => ctx.isospectral(),
                    CheckKind::Intertwine => ctx.intertwine(),
                    CheckKind::Orthonormal => ctx.orthonormal(),
                    CheckKind::GroundResidual => ctx.ground_residual(),
                    CheckKind::AnalyticVsNumeric => ctx.analytic_vs_numeric(),
                }
            }
        };
        let e = match measured {
            Ok(m) => entry(check, m),
            Err(err) => {
                verdict = Verdict::Broken;
                Entry {
                    check: check.name(),
                    status: Status::Fail,
                    metric: f64::NAN,
                    tolerance: f64::NAN,
                    detail: format!("could not evaluate: {err}"),
                }
            }
        };
        if e.status == Status::Fail && verdict == Verdict::AllPassed {
            verdict = Verdict::ChecksFailed;
        }
        entries.push(e);
    }
    (VerifyReport { entries }, verdict)
}

pub fn cmd_verify(cfg: &RunConfig, out: &mut dyn Write) -> CliResult<Verdict> {
    let (report, verdict) = run_checks(cfg);
    match cfg.output_format {
        OutputFormat::Json => write_json(out, &report)?,
        OutputFormat::Csv => write_csv(
            out,
            &["check", "status", "metric", "tolerance", "detail"],
            &report.entries,
        )?,
    }
    Ok(verdict)
}
