use std::path::Path;

use anyhow::{bail, Context};
use binedge::catalog::MAX_CATALOG_N;
use binedge::homology::{DepthOptions, Field};
use binedge::report::AnalysisOptions;
use serde::{Deserialize, Serialize};

pub const THREADS_ENV: &str = "BINEDGE_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

/// Run configuration. Every key is optional in the TOML file; command-line
/// flags override the file, and `BINEDGE_THREADS` overrides `threads`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub field: String,
    pub format: Format,
    pub groebner_max_n: usize,
    pub homology_max_n: usize,
    pub max_n: usize,
    pub sweep_max_n: usize,
    /// Worker threads; 0 lets the pool decide.
    pub threads: usize,
    pub verify_max_n: usize,
    pub vd_budget: usize,
}

impl Default for Config {
    fn default() -> Self {
        let a = AnalysisOptions::default();
        Config {
            field: Field::Rationals.to_string(),
            format: Format::Json,
            groebner_max_n: a.groebner_max_n,
            homology_max_n: a.homology_max_n,
            max_n: a.max_n,
            sweep_max_n: 7,
            threads: 0,
            verify_max_n: 6,
            vd_budget: a.depth.vd_budget,
        }
    }
}

impl Config {
    pub fn load(path: Option<&Path>) -> anyhow::Result<Self> {
        let mut cfg = match path {
            Some(p) => {
                let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
                toml::from_str(&text).with_context(|| format!("parsing {}", p.display()))?
            }
            None => Config::default(),
        };
        if let Ok(t) = std::env::var(THREADS_ENV) {
            cfg.threads = t.parse().with_context(|| format!("{THREADS_ENV}={t:?} is not a count"))?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> anyhow::Result<()> {
        self.field()?;
        if self.sweep_max_n > MAX_CATALOG_N || self.verify_max_n > MAX_CATALOG_N {
            bail!("catalog caps must be at most {MAX_CATALOG_N}");
        }
        Ok(())
    }

    pub fn field(&self) -> anyhow::Result<Field> {
        self.field.parse().map_err(anyhow::Error::msg)
    }

    /// Depth options for the catalog suites and the sweep, whose instance
    /// sizes are fixed by `--n-max` rather than by `homology_max_n`.
    pub fn depth_options(&self) -> anyhow::Result<DepthOptions> {
        Ok(DepthOptions {
            field: self.field()?,
            vd_budget: self.vd_budget,
            ..DepthOptions::default()
        })
    }

    pub fn analysis_options(&self) -> anyhow::Result<AnalysisOptions> {
        Ok(AnalysisOptions {
            max_n: self.max_n,
            groebner_max_n: self.groebner_max_n,
            homology_max_n: self.homology_max_n,
            depth: DepthOptions { max_n: self.homology_max_n, ..self.depth_options()? },
        })
    }
}
