use crate::config::{Method, OutputFormat, RunConfig};
use crate::error::{CliError, CliResult};
use crate::output::{write_csv, write_json, Cell, Row};
use dirac2d::analytic::{analytic_spectrum, wavefunctions, RadialWavefunction};
use dirac2d::numsolve::{numeric_wavefunction, raw_eigenvalues};
use dirac2d::qes::qes_ground_state;
use dirac2d::superpot::partner_potentials;
use dirac2d::{superpotential_from_model, Level, Source, SpectrumResult};
use serde::Serialize;
use std::io::Write;

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumRow {
    pub n: usize,
    pub epsilon_sq: f64,
    pub energy_plus: f64,
    pub energy_minus: f64,
    pub source: Source,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
}

impl SpectrumRow {
    fn new(level: &Level, delta: Option<f64>) -> Self {
        Self {
            n: level.n,
            epsilon_sq: level.epsilon_sq,
            energy_plus: level.energy_plus,
            energy_minus: level.energy_minus,
            source: level.source,
            delta,
        }
    }
}

impl Row for SpectrumRow {
    fn cells(&self) -> Vec<Cell<'_>> {
        let mut c = vec![
            Cell::Int(self.n),
            Cell::Float(self.epsilon_sq),
            Cell::Float(self.energy_plus),
            Cell::Float(self.energy_minus),
            Cell::Text(self.source.as_str()),
        ];
        if let Some(d) = self.delta {
            c.push(Cell::Float(d));
        }
        c
    }
}

pub fn numeric_levels(cfg: &RunConfig) -> CliResult<SpectrumResult> {
    let eig = raw_eigenvalues(&cfg.model, &cfg.grid, cfg.n_max + 1)?;
    Ok(SpectrumResult::from_epsilon_sq(
        eig.into_iter().enumerate(),
        Source::Numeric,
        cfg.model.units(),
    )?)
}

pub fn spectrum_rows(cfg: &RunConfig) -> CliResult<Vec<SpectrumRow>> {
    Ok(match cfg.method {
        Method::Analytic => analytic_spectrum(&cfg.model, cfg.n_max)?
            .levels
            .iter()
            .map(|l| SpectrumRow::new(l, None))
            .collect(),
        Method::Numeric => numeric_levels(cfg)?
            .levels
            .iter()
            .map(|l| SpectrumRow::new(l, None))
            .collect(),
        Method::Both => {
            let a = analytic_spectrum(&cfg.model, cfg.n_max)?;
            let n = numeric_levels(cfg)?;
            let mut rows = Vec::with_capacity(2 * a.len());
            for (la, ln) in a.levels.iter().zip(&n.levels) {
                let delta = ln.epsilon_sq - la.epsilon_sq;
                rows.push(SpectrumRow::new(la, Some(delta)));
                rows.push(SpectrumRow::new(ln, Some(delta)));
            }
            rows
        }
    })
}

pub fn cmd_spectrum(cfg: &RunConfig, out: &mut dyn Write) -> CliResult<()> {
    let rows = spectrum_rows(cfg)?;
    match cfg.output_format {
        OutputFormat::Json => write_json(out, &rows),
        OutputFormat::Csv => {
            let mut header = vec!["n", "epsilon_sq", "energy_plus", "energy_minus", "source"];
            if cfg.method == Method::Both {
                header.push("delta");
            }
            write_csv(out, &header, &rows)
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WavefunctionRow {
    pub r: f64,
    pub f_minus: f64,
    pub f_plus: f64,
}

impl Row for WavefunctionRow {
    fn cells(&self) -> Vec<Cell<'_>> {
        vec![Cell::Float(self.r), Cell::Float(self.f_minus), Cell::Float(self.f_plus)]
    }
}

/// Closed form where one exists and was not declined, the numeric
/// eigenvectors otherwise.
pub fn wavefunction_for(cfg: &RunConfig, n: usize) -> CliResult<RadialWavefunction> {
    let family = cfg.model.family();
    if let Some(max) = cfg.model.max_bound_level() {
        if n > max {
            return Err(CliError::Usage(format!(
                "{family}: only n in 0..={max} are bound, got --n {n}"
            )));
        }
    }
    let analytic = cfg.method != Method::Numeric;
    if analytic && family.is_exactly_solvable() {
        return Ok(wavefunctions(&cfg.model, n, &cfg.grid)?);
    }
    if analytic && family.is_qes() {
        if n > 0 {
            return Err(CliError::Usage(format!(
                "{family}: only level 0 is known in closed form; use --method numeric"
            )));
        }
        let gs = qes_ground_state(&cfg.model, &cfg.grid)?;
        return Ok(RadialWavefunction {
            grid: cfg.grid,
            f_plus: vec![0.0; gs.f0.len()],
            f_minus: gs.f0,
            n: 0,
            epsilon_sq: 0.0,
        });
    }
    if n + 1 >= cfg.grid.n_points() - 2 {
        return Err(CliError::Usage(format!(
            "level {n} does not fit on a {}-point grid",
            cfg.grid.n_points()
        )));
    }
    Ok(numeric_wavefunction(&cfg.model, &cfg.grid, n)?)
}

pub fn cmd_wavefunction(cfg: &RunConfig, n: usize, out: &mut dyn Write) -> CliResult<()> {
    let wf = wavefunction_for(cfg, n)?;
    let rows: Vec<WavefunctionRow> = (0..cfg.grid.n_points())
        .map(|i| WavefunctionRow {
            r: cfg.grid.r(i),
            f_minus: wf.f_minus[i],
            f_plus: wf.f_plus[i],
        })
        .collect();
    match cfg.output_format {
        OutputFormat::Json => write_json(out, &rows),
        OutputFormat::Csv => write_csv(out, &["r", "f_minus", "f_plus"], &rows),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PartnerRow {
    pub r: f64,
    pub v_minus: f64,
    pub v_plus: f64,
}

impl Row for PartnerRow {
    fn cells(&self) -> Vec<Cell<'_>> {
        vec![Cell::Float(self.r), Cell::Float(self.v_minus), Cell::Float(self.v_plus)]
    }
}

pub fn cmd_partner(cfg: &RunConfig, out: &mut dyn Write) -> CliResult<()> {
    let w = superpotential_from_model(&cfg.model)?;
    let pp = partner_potentials(&w, &cfg.grid)?;
    let rows: Vec<PartnerRow> = (0..cfg.grid.n_points())
        .map(|i| PartnerRow {
            r: cfg.grid.r(i),
            v_minus: pp.v_minus[i],
            v_plus: pp.v_plus[i],
        })
        .collect();
    match cfg.output_format {
        OutputFormat::Json => write_json(out, &rows),
        OutputFormat::Csv => write_csv(out, &["r", "v_minus", "v_plus"], &rows),
    }
}
