//! Experiment configuration: a TOML file with `[potential]`, `[mass]`,
//! `[grid]` and an optional `[run]` section.

use std::fmt;
use std::path::Path;

use morse_pdcm_core::verify::{ParamSampling, PdeOptions};
use morse_pdcm_core::{GridSpec, MassKind, MassProfile, MorseParams, PhasePoint};
use serde::Deserialize;

#[derive(Debug)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "config error: {}", self.0)
    }
}

impl std::error::Error for ConfigError {}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct PotentialSection {
    v0r: f64,
    #[serde(default)]
    v0i: f64,
    a_r: f64,
    a_i: f64,
    #[serde(default = "one")]
    hbar: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct MassSection {
    kind: String,
    #[serde(default)]
    c: f64,
    #[serde(default)]
    d: f64,
    e1: f64,
    #[serde(default)]
    e2: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct GridSection {
    x1_min: f64,
    x1_max: f64,
    p2_min: f64,
    p2_max: f64,
    nx: usize,
    np: usize,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RunSection {
    /// Evaluation point for `params` and the fixed coordinate for `psi`.
    pub x1: f64,
    pub p2: f64,
    pub threads: Option<usize>,
    pub seed: u64,
    /// Random draws for the identity suite.
    pub samples: usize,
    pub pde_step: f64,
    pub pde_sampling: String,
    pub pde_points: usize,
}

impl Default for RunSection {
    fn default() -> Self {
        Self {
            x1: 0.0,
            p2: 0.0,
            threads: None,
            seed: 20240601,
            samples: 1000,
            pde_step: 2e-2,
            pde_sampling: "frozen".into(),
            pde_points: 100,
        }
    }
}

fn one() -> f64 {
    1.0
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    potential: PotentialSection,
    mass: MassSection,
    grid: GridSection,
    #[serde(default)]
    run: RunSection,
}

/// A validated configuration.
#[derive(Debug, Clone)]
pub struct Config {
    pub params: MorseParams,
    pub profile: MassProfile,
    pub grid: GridSpec,
    pub run: RunSection,
}

fn kind_from(s: &str) -> Result<MassKind, ConfigError> {
    match s.to_ascii_lowercase().replace('-', "_").as_str() {
        "general_linear" | "general" => Ok(MassKind::GeneralLinear),
        "case_ia" | "ia" => Ok(MassKind::CaseIA),
        "case_iia" | "iia" => Ok(MassKind::CaseIIA),
        "constant" => Ok(MassKind::Constant),
        other => Err(ConfigError(format!("unknown mass kind `{other}`"))),
    }
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let raw: RawConfig = toml::from_str(text).map_err(|e| ConfigError(e.to_string()))?;
        let p = &raw.potential;
        let params = MorseParams::new(p.v0r, p.v0i, p.a_r, p.a_i, p.hbar).map_err(|e| ConfigError(e.to_string()))?;
        let m = &raw.mass;
        let profile = MassProfile::new(kind_from(&m.kind)?, m.c, m.d, m.e1, m.e2)
            .map_err(|e| ConfigError(e.to_string()))?;
        let g = &raw.grid;
        let grid = GridSpec::new(g.x1_min, g.x1_max, g.p2_min, g.p2_max, g.nx, g.np)
            .map_err(|e| ConfigError(e.to_string()))?;
        let run = raw.run;
        if !(run.pde_step > 0.0 && run.pde_step.is_finite()) {
            return Err(ConfigError("run.pde_step must be positive".into()));
        }
        if run.threads == Some(0) {
            return Err(ConfigError("run.threads must be at least 1".into()));
        }
        let cfg = Config { params, profile, grid, run };
        cfg.sampling()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn point(&self) -> PhasePoint {
        PhasePoint::new(self.run.x1, self.run.p2)
    }

    fn sampling(&self) -> Result<ParamSampling, ConfigError> {
        match self.run.pde_sampling.as_str() {
            "frozen" => Ok(ParamSampling::Frozen),
            "local" => Ok(ParamSampling::Local),
            other => Err(ConfigError(format!("run.pde_sampling must be frozen or local, got `{other}`"))),
        }
    }

    pub fn pde_options(&self, enforce_constraint: bool) -> PdeOptions {
        PdeOptions {
            step: self.run.pde_step,
            sampling: self.sampling().unwrap_or(ParamSampling::Frozen),
            beta3_override: None,
            enforce_constraint,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const BASE: &str = r#"
[potential]
v0r = 0.5
a_r = 1.0
a_i = 0.3

[mass]
kind = "general_linear"
c = 0.1
d = 0.05
e1 = 1.0
e2 = 0.2

[grid]
x1_min = -1.0
x1_max = 1.0
p2_min = -1.0
p2_max = 1.0
nx = 4
np = 3
"#;

    #[test]
    fn parses_with_defaults() {
        let c = Config::parse(BASE).unwrap();
        assert_eq!(c.params.hbar, 1.0);
        assert_eq!(c.params.v0i, 0.0);
        assert_eq!(c.grid.len(), 12);
        assert_eq!(c.run.samples, 1000);
        assert_eq!(c.profile.kind(), MassKind::GeneralLinear);
    }

    #[test]
    fn rejects_single_point_axis() {
        let text = BASE.replace("nx = 4", "nx = 1");
        assert!(Config::parse(&text).is_err());
    }

    #[test]
    fn rejects_unknown_keys_and_kinds() {
        assert!(Config::parse(&format!("{BASE}\n[run]\nbogus = 1\n")).is_err());
        assert!(Config::parse(&BASE.replace("general_linear", "quadratic")).is_err());
        assert!(Config::parse(&BASE.replace("kind = \"general_linear\"", "kind = \"case_ia\"")).is_err());
    }
}
