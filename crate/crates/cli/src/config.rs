use crate::error::{CliError, CliResult};
use clap::{Args, Parser, Subcommand, ValueEnum};
use dirac2d::{Family, ModelSpec, RadialGrid, TabulatedW};
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

#[derive(Debug, Parser)]
#[command(name = "dirac2d", version, about = "Radial spectra of the 2+1 dimensional Dirac equation from a superpotential")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energy levels (n, epsilon_sq, energy_plus, energy_minus, source).
    Spectrum(RunArgs),
    /// Spinor components (r, f_minus, f_plus) of one level.
    Wavefunction {
        #[command(flatten)]
        run: RunArgs,
        /// Level index.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Partner potentials (r, v_minus, v_plus).
    Partner(RunArgs),
    /// Run the self-consistency checks and report pass/fail per check.
    Verify(RunArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelName {
    Oscillator,
    Coulomb,
    Morse,
    Anharmonic,
    Sextic,
    DeformedCoulomb,
    Custom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Analytic,
    Numeric,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum CheckKind {
    Isospectral,
    Intertwine,
    Orthonormal,
    GroundResidual,
    AnalyticVsNumeric,
}

impl CheckKind {
    pub const ALL: [CheckKind; 5] = [
        CheckKind::Isospectral,
        CheckKind::Intertwine,
        CheckKind::Orthonormal,
        CheckKind::GroundResidual,
        CheckKind::AnalyticVsNumeric,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Isospectral => "isospectral",
            CheckKind::Intertwine => "intertwine",
            CheckKind::Orthonormal => "orthonormal",
            CheckKind::GroundResidual => "ground_residual",
            CheckKind::AnalyticVsNumeric => "analytic_vs_numeric",
        }
    }
}

/// Model and run flags shared by every subcommand. Each may also come from
/// the `--config` file under the same name; flags win.
#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(default, rename_all = "kebab-case", deny_unknown_fields)]
pub struct RunArgs {
    /// JSON file with keys named like these flags.
    #[arg(long)]
    #[serde(skip)]
    pub config: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub model: Option<ModelName>,
    /// Oscillator frequency.
    #[arg(long, allow_negative_numbers = true)]
    pub omega: Option<f64>,
    /// Magnetic field.
    #[arg(long = "B", allow_negative_numbers = true)]
    #[serde(rename = "B")]
    pub b_field: Option<f64>,
    #[arg(long)]
    pub ell: Option<u32>,
    /// Coulomb strength.
    #[arg(long, allow_negative_numbers = true)]
    pub kappa: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub b: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub e2: Option<f64>,
    #[arg(long = "omega-t", allow_negative_numbers = true)]
    pub omega_t: Option<f64>,
    /// r_min,r_max,n_points
    #[arg(long, allow_negative_numbers = true)]
    pub grid: Option<String>,
    #[arg(long = "n-max")]
    pub n_max: Option<usize>,
    #[arg(long, value_enum)]
    pub method: Option<Method>,
    /// Comma-separated subset of the verification checks.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub checks: Option<Vec<CheckKind>>,
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    /// CSV with columns r,w,w_prime on a uniform mesh (custom model).
    #[arg(long)]
    pub table: Option<PathBuf>,
}

impl RunArgs {
    /// Fills unset flags from the config file, if one was given.
    pub fn merged(self) -> CliResult<RunArgs> {
        let Some(path) = self.config.clone() else {
            return Ok(self);
        };
        let text = std::fs::read_to_string(&path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        let file: RunArgs = serde_json::from_str(&text)
            .map_err(|e| CliError::Usage(format!("bad config {}: {e}", path.display())))?;
        Ok(RunArgs {
            config: self.config,
            model: self.model.or(file.model),
            omega: self.omega.or(file.omega),
            b_field: self.b_field.or(file.b_field),
            ell: self.ell.or(file.ell),
            kappa: self.kappa.or(file.kappa),
            a: self.a.or(file.a),
            b: self.b.or(file.b),
            alpha: self.alpha.or(file.alpha),
            e2: self.e2.or(file.e2),
            omega_t: self.omega_t.or(file.omega_t),
            grid: self.grid.or(file.grid),
            n_max: self.n_max.or(file.n_max),
            method: self.method.or(file.method),
            checks: self.checks.or(file.checks),
            format: self.format.or(file.format),
            table: self.table.or(file.table),
        })
    }
}

/// A fully resolved run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub model: ModelSpec,
    pub grid: RadialGrid,
    pub n_max: usize,
    pub method: Method,
    pub output_format: OutputFormat,
    pub checks: Vec<CheckKind>,
}

/// Level count used when `--n-max` is not given (capped by the bound-state
/// count).
pub const DEFAULT_N_MAX: usize = 4;

fn parse_grid(s: &str) -> CliResult<(f64, f64, usize)> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || CliError::Usage(format!("--grid expects r_min,r_max,n_points, got {s:?}"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let r_min = parts[0].parse().map_err(|_| bad())?;
    let r_max = parts[1].parse().map_err(|_| bad())?;
    let n = parts[2].parse().map_err(|_| bad())?;
    Ok((r_min, r_max, n))
}

pub fn read_table(path: &Path) -> CliResult<TabulatedW> {
    let mut rdr = csv::Reader::from_path(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let (mut r, mut w, mut wp) = (Vec::new(), Vec::new(), Vec::new());
    for rec in rdr.deserialize::<(f64, f64, f64)>() {
        let (ri, wi, wpi) =
            rec.map_err(|e| CliError::Usage(format!("bad table {}: {e}", path.display())))?;
        r.push(ri);
        w.push(wi);
        wp.push(wpi);
    }
    if r.len() < 3 {
        return Err(CliError::Usage("table needs at least 3 rows".into()));
    }
    let grid = RadialGrid::new(r[0], r[r.len() - 1], r.len())?;
    let uniform = r
        .iter()
        .enumerate()
        .all(|(i, &ri)| (ri - grid.r(i)).abs() <= 1e-9 * grid.h().max(ri.abs()));
    if !uniform {
        return Err(CliError::Usage("table radii must be uniformly spaced".into()));
    }
    Ok(TabulatedW::new(grid, w, wp)?)
}

fn build_model(args: &RunArgs) -> CliResult<ModelSpec> {
    let ell = args.ell.unwrap_or(0);
    let model = match args.model.unwrap_or(ModelName::Oscillator) {
        ModelName::Oscillator => {
            ModelSpec::oscillator(args.omega.unwrap_or(1.0), args.b_field.unwrap_or(0.0), ell)
        }
        ModelName::Coulomb => ModelSpec::coulomb(args.kappa.unwrap_or(1.0), ell),
        ModelName::Morse => ModelSpec::morse(
            args.a.unwrap_or(3.0),
            args.alpha.unwrap_or(1.0),
            args.b.unwrap_or(3.0),
        ),
        ModelName::Anharmonic => ModelSpec::anharmonic(
            args.a.unwrap_or(1.0),
            args.omega_t.unwrap_or(1.0),
            args.b.unwrap_or(1.0),
        ),
        ModelName::Sextic => {
            ModelSpec::sextic(args.omega_t.unwrap_or(1.0), args.b.unwrap_or(1.0), ell)
        }
        ModelName::DeformedCoulomb => {
            ModelSpec::deformed_coulomb(args.e2.unwrap_or(1.0), args.omega_t.unwrap_or(1.0), ell)
        }
        ModelName::Custom => {
            let path = args
                .table
                .as_ref()
                .ok_or_else(|| CliError::Usage("--model custom needs --table".into()))?;
            ModelSpec::custom(read_table(path)?)
        }
    };
    Ok(model?)
}

impl RunConfig {
    pub fn from_args(args: RunArgs, default_format: OutputFormat) -> CliResult<Self> {
        let args = args.merged()?;
        let model = build_model(&args)?;
        let family = model.family();
        let grid = match &args.grid {
            Some(s) => {
                let (lo, hi, n) = parse_grid(s)?;
                RadialGrid::new(lo, hi, n)?
            }
            None => model.default_grid(),
        };
        model.check_grid(&grid)?;

        let bound = model.max_bound_level();
        let n_max = match (args.n_max, bound) {
            (Some(n), Some(max)) if n > max => {
                return Err(CliError::Usage(format!(
                    "{family}: only n in 0..={max} are bound, got --n-max {n}"
                )))
            }
            (Some(n), _) => n,
            (None, Some(max)) => DEFAULT_N_MAX.min(max),
            (None, None) => DEFAULT_N_MAX,
        };

        let method = args.method.unwrap_or(if family.is_exactly_solvable() {
            Method::Both
        } else {
            Method::Numeric
        });
        if method != Method::Numeric {
            if family == Family::Custom {
                return Err(CliError::Usage(
                    "a tabulated model has no analytic spectrum; use --method numeric".into(),
                ));
            }
            if family.is_qes() && n_max > 0 {
                return Err(CliError::Usage(format!(
                    "{family}: only level 0 is known in closed form; use --method numeric or --n-max 0"
                )));
            }
        }

        let mut checks = args.checks.clone().unwrap_or_else(|| {
            CheckKind::ALL
                .into_iter()
                .filter(|c| family != Family::Custom || *c != CheckKind::AnalyticVsNumeric)
                .collect()
        });
        checks.sort();
        checks.dedup();
        if family == Family::Custom && checks.contains(&CheckKind::AnalyticVsNumeric) {
            return Err(CliError::Usage(
                "analytic_vs_numeric is not available for a tabulated model".into(),
            ));
        }

        Ok(RunConfig {
            model,
            grid,
            n_max,
            method,
            output_format: args.format.unwrap_or(default_format),
            checks,
        })
    }
}
