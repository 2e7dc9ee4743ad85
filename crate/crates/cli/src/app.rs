use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use morse_pdcm_core::solution::{classify_region, constraint_ratio, norm_constant};
use morse_pdcm_core::verify::{beta3_sign_consistent, constrained_params};
use morse_pdcm_core::{ansatz_params, energy_at, mass_at, Quantity, RealityCase, SpecialCase};

use crate::config::{Config, ConfigError};
use crate::ledger::{Ledger, LedgerRow};
use crate::scan::{self, Along, RealityMode};
use crate::suites;

#[derive(Debug, Parser)]
#[command(name = "morse-pdcm", version, about = "Complex Morse potential with position-dependent complex mass")]
pub struct Cli {
    /// Experiment configuration (TOML).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Output directory.
    #[arg(long, global = true, default_value = "./out")]
    pub out: PathBuf,
    /// Worker threads for grid scans.
    #[arg(long, global = true, env = "MORSE_PDCM_THREADS")]
    pub threads: Option<usize>,
    /// Replace V0i by the value the matching constraint requires at each point.
    #[arg(long, global = true)]
    pub enforce_constraint: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    General,
    Ib,
    Iib,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlongArg {
    X1,
    P2,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the ansatz parameters and energy at one point.
    Params {
        #[arg(long, allow_hyphen_values = true)]
        x1: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        p2: Option<f64>,
    },
    /// Scan one quantity over the grid.
    Field {
        #[arg(long)]
        quantity: String,
    },
    /// Normalizability regions over the grid.
    RegionMap,
    /// Reality roots of the energy over the grid.
    Reality {
        #[arg(long, value_enum, default_value = "general")]
        case: CaseArg,
    },
    /// Eigenfunction along one axis.
    Psi {
        #[arg(long, value_enum)]
        along: AlongArg,
    },
    /// Run verification suites and write the ledger. Without flags, runs all.
    Verify {
        #[arg(long)]
        pde: bool,
        #[arg(long)]
        quadrature: bool,
        #[arg(long)]
        identities: bool,
        #[arg(long)]
        specialization: bool,
        #[arg(long)]
        reality: bool,
        #[arg(long)]
        regions: bool,
    },
}

#[derive(Debug)]
pub enum AppError {
    Config(String),
    Io(PathBuf, std::io::Error),
}

impl AppError {
    pub fn exit_code(&self) -> u8 {
        match self {
            AppError::Config(_) => 2,
            AppError::Io(..) => 3,
        }
    }
}

impl fmt::Display for AppError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AppError::Config(m) => write!(f, "config error: {m}"),
            AppError::Io(p, e) => write!(f, "io error on {}: {e}", p.display()),
        }
    }
}

impl std::error::Error for AppError {}

impl From<ConfigError> for AppError {
    fn from(e: ConfigError) -> Self {
        AppError::Config(e.0)
    }
}

fn write_out(dir: &Path, name: &str, contents: &str) -> Result<PathBuf, AppError> {
    fs::create_dir_all(dir).map_err(|e| AppError::Io(dir.to_path_buf(), e))?;
    let path = dir.join(name);
    fs::write(&path, contents).map_err(|e| AppError::Io(path.clone(), e))?;
    Ok(path)
}

fn threads(cli: &Cli, cfg: &Config) -> Result<usize, AppError> {
    let n = cli
        .threads
        .or(cfg.run.threads)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if n == 0 {
        return Err(AppError::Config("--threads must be at least 1".into()));
    }
    Ok(n)
}

fn opt(v: Result<f64, morse_pdcm_core::Error>) -> String {
    match v {
        Ok(x) => scan::fmt_f64(x),
        Err(e) => format!("n/a ({e})"),
    }
}

fn params_report(cfg: &Config, cli: &Cli, x1: Option<f64>, p2: Option<f64>) -> String {
    let mut at = cfg.point();
    if let Some(x) = x1 {
        at.x1 = x;
    }
    if let Some(p) = p2 {
        at.p2 = p;
    }
    let mut params = cfg.params;
    let mut lines = vec![format!("x1 = {}", scan::fmt_f64(at.x1)), format!("p2 = {}", scan::fmt_f64(at.p2))];
    let mass = match mass_at(&cfg.profile, at) {
        Ok(m) => m,
        Err(e) => {
            lines.push(format!("status = {e}"));
            return lines.join("\n") + "\n";
        }
    };
    if cli.enforce_constraint {
        if let Ok(p) = constrained_params(&params, &mass) {
            params = p;
        }
    }
    lines.push(format!("m_r = {}", scan::fmt_f64(mass.m_r)));
    lines.push(format!("m_i = {}", scan::fmt_f64(mass.m_i)));
    lines.push(format!("v0i = {}", scan::fmt_f64(params.v0i)));
    lines.push(format!("constraint_ratio = {}", opt(constraint_ratio(&params, &mass))));
    match ansatz_params(&params, &cfg.profile, at) {
        Ok(a) => {
            lines.push(format!("beta3 = {}", scan::fmt_f64(a.beta3)));
            lines.push(format!("beta1 = {}", scan::fmt_f64(a.beta1)));
            lines.push(format!("alpha1 = {}", scan::fmt_f64(a.alpha1)));
            lines.push(format!("k = {}", scan::fmt_f64(a.k)));
            lines.push(format!("j = {}", scan::fmt_f64(a.j)));
            lines.push(format!("region = {}", classify_region(a.alpha1, a.beta1).region.name()));
            lines.push(format!("norm = {}", opt(norm_constant(a.alpha1, a.beta1))));
        }
        Err(e) => lines.push(format!("status = {e}")),
    }
    match energy_at(&params, &cfg.profile, at) {
        Ok(e) => {
            lines.push(format!("e_r = {}", scan::fmt_f64(e.e_r)));
            lines.push(format!("e_i = {}", scan::fmt_f64(e.e_i)));
        }
        Err(e) => lines.push(format!("energy = n/a ({e})")),
    }
    lines.push(format!("beta3_sign_consistent = {}", opt(beta3_sign_consistent(&params, &mass))));
    lines.join("\n") + "\n"
}

#[derive(Debug, Clone, Copy)]
struct Selection {
    identities: bool,
    quadrature: bool,
    specialization: bool,
    reality: bool,
    regions: bool,
    pde: bool,
    determinism: bool,
}

/// Runs the selected suites against `cfg`.
pub fn build_ledger(cfg: &Config, threads: usize, sel: &Command) -> Ledger {
    let sel = match *sel {
        Command::Verify { pde, quadrature, identities, specialization, reality, regions } => {
            let any = pde || quadrature || identities || specialization || reality || regions;
            Selection {
                identities: identities || !any,
                quadrature: quadrature || !any,
                specialization: specialization || !any,
                reality: reality || !any,
                regions: regions || !any,
                pde: pde || !any,
                determinism: !any,
            }
        }
        _ => unreachable!("ledger is built for verify only"),
    };
    let mut ledger = Ledger::default();
    let (params, profile) = (&cfg.params, &cfg.profile);
    let grid50 = suites::resized(&cfg.grid, 50, 50);
    if sel.identities {
        let s = suites::identity_suite(cfg.run.samples, cfg.run.seed);
        ledger.extend(s.rows());
        ledger.extend(suites::constant_mass_rows());
        if s.max_matching > suites::IDENTITY_TOL && s.max_sign_consistent <= suites::IDENTITY_TOL {
            ledger.statements.push(
                "Identities: the printed beta3 root makes each matching identity equal minus its right-hand \
                 side; the opposite-sign root closes all of them."
                    .into(),
            );
        }
    }
    if sel.quadrature {
        ledger.extend(suites::quadrature_suite(20, cfg.run.seed).rows());
    }
    if sel.specialization {
        ledger.extend(suites::specialization_rows(params, profile, &grid50));
    }
    if sel.reality {
        ledger.extend(suites::reality_rows(params, profile, &grid50));
    }
    if sel.regions {
        if params.a_r > 0.0 && params.a_i > 0.0 {
            ledger.extend(suites::region_suite(params, profile, &cfg.grid, threads).rows());
        } else {
            ledger.rows.push(LedgerRow::report(
                "region_map_equivalence",
                f64::NAN,
                "skipped: the inequality form needs a_r > 0 and a_i > 0",
            ));
        }
    }
    if sel.pde {
        let s = suites::pde_suite(params, profile, &cfg.grid, &cfg.pde_options(true), cfg.run.pde_points, cfg.run.seed);
        ledger.extend(s.rows());
        ledger.statements.push(s.statement());
    }
    if sel.determinism {
        let g = suites::resized(&cfg.grid, cfg.grid.nx.min(60), cfg.grid.np.min(60));
        ledger.extend(suites::determinism_rows(params, profile, &g, &cfg.pde_options(true)));
    }
    ledger
}

pub fn run(cli: &Cli) -> Result<(), AppError> {
    let path = cli
        .config
        .as_ref()
        .ok_or_else(|| AppError::Config("--config <path> is required".into()))?;
    let cfg = Config::load(path)?;
    let threads = threads(cli, &cfg)?;
    let pde = cfg.pde_options(cli.enforce_constraint);
    match &cli.command {
        Command::Params { x1, p2 } => {
            let text = params_report(&cfg, cli, *x1, *p2);
            print!("{text}");
            write_out(&cli.out, "params.txt", &text)?;
        }
        Command::Field { quantity } => {
            let q = Quantity::parse(quantity).ok_or_else(|| {
                let names: Vec<_> = Quantity::ALL.iter().map(|q| q.name()).collect();
                AppError::Config(format!("unknown quantity `{quantity}`; expected one of {}", names.join(", ")))
            })?;
            let field = scan::scan_field(q, &cfg.params, &cfg.profile, &cfg.grid, &pde, threads);
            let path = write_out(&cli.out, &format!("field_{}.csv", q.name()), &field.to_csv())?;
            println!(
                "{}: {} cells, {} ok",
                path.display(),
                field.values.len(),
                field.count(morse_pdcm_core::CellStatus::Ok)
            );
        }
        Command::RegionMap => {
            let cells = scan::scan_regions(&cfg.params, &cfg.profile, &cfg.grid, threads);
            let path = write_out(&cli.out, "region_map.csv", &scan::regions_csv(&cfg.grid, &cells))?;
            println!("{}: {} cells", path.display(), cells.len());
        }
        Command::Reality { case } => {
            let (mode, name) = match case {
                CaseArg::General => (RealityMode::General, "general"),
                CaseArg::Ib => (RealityMode::Printed(RealityCase::IB), "ib"),
                CaseArg::Iib => (RealityMode::Printed(RealityCase::IIB), "iib"),
            };
            let needed = match case {
                CaseArg::General => None,
                CaseArg::Ib => Some(SpecialCase::IA),
                CaseArg::Iib => Some(SpecialCase::IIA),
            };
            if let Some(sc) = needed {
                sc.check(&cfg.profile)
                    .map_err(|_| AppError::Config(format!("--case {name} needs a matching mass profile (c = 0 for ib, d = 0 for iib)")))?;
            }
            let cells = scan::scan_reality(mode, &cfg.params, &cfg.profile, &cfg.grid, threads);
            let path = write_out(&cli.out, &format!("reality_{name}.csv"), &scan::reality_csv(&cfg.grid, &cells))?;
            println!("{}: {} cells", path.display(), cells.len());
        }
        Command::Psi { along } => {
            let (a, name) = match along {
                AlongArg::X1 => (Along::X1, "x1"),
                AlongArg::P2 => (Along::P2, "p2"),
            };
            let csv = scan::psi_profile(a, &cfg.params, &cfg.profile, &cfg.grid, cfg.point());
            let path = write_out(&cli.out, &format!("psi_{name}.csv"), &csv)?;
            println!("{}", path.display());
        }
        cmd @ Command::Verify { .. } => {
            let ledger = build_ledger(&cfg, threads, cmd);
            let text = ledger.to_text();
            write_out(&cli.out, "ledger.csv", &ledger.to_csv())?;
            write_out(&cli.out, "ledger.txt", &text)?;
            print!("{text}");
        }
    }
    Ok(())
}
