//! Job files: one code spec plus optional grid bounds, in TOML or JSON.

use std::path::Path;

use ringcodes::{canonicalize, make_field, Budget, CodeSpec, DefiningSetKind, RingKind};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub p: Option<u32>,
    pub s: Option<u32>,
    pub m: Option<usize>,
    pub ring: Option<RingKind>,
    pub variant: Option<DefiningSetKind>,
    pub delta1: Option<Vec<Vec<usize>>>,
    pub delta2: Option<Vec<Vec<usize>>>,
    /// Work budget in evaluation units.
    pub budget: Option<u64>,
    pub seed: Option<u64>,
    #[serde(default)]
    pub grid: GridConfig,
}

/// Bounds of a verification or search grid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GridConfig {
    pub q: Vec<u32>,
    pub m_min: usize,
    pub m_max: usize,
    /// Largest number of maximal elements per complex.
    pub max_sets: usize,
    pub rings: Vec<RingKind>,
    pub variants: Vec<DefiningSetKind>,
    /// Randomized cases per q for the lemma campaign.
    pub cases: usize,
    /// Campaign names; empty means all.
    pub campaigns: Vec<String>,
    /// List every compared spec in verify reports.
    pub list_specs: bool,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig {
            q: vec![2, 3],
            m_min: 1,
            m_max: 4,
            max_sets: 2,
            rings: vec![RingKind::E, RingKind::F],
            variants: DefiningSetKind::ALL.to_vec(),
            cases: 100,
            campaigns: Vec::new(),
            list_specs: true,
        }
    }
}

impl JobConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text)
    }

    /// JSON when the text starts with '{', TOML otherwise.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))
        } else {
            toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))
        }
    }

    pub fn spec(&self) -> Result<CodeSpec> {
        fn need<T: Clone>(v: &Option<T>, name: &str) -> Result<T> {
            v.clone().ok_or_else(|| CliError::Config(format!("missing field `{name}`")))
        }
        let field = make_field(need(&self.p, "p")?, self.s.unwrap_or(1))?;
        let m = need(&self.m, "m")?;
        let d1 = canonicalize(&need(&self.delta1, "delta1")?, m)?;
        let d2 = canonicalize(&need(&self.delta2, "delta2")?, m)?;
        Ok(CodeSpec::new(&field, need(&self.ring, "ring")?, d1, d2, need(&self.variant, "variant")?)?)
    }

    pub fn budget(&self) -> Result<Budget> {
        match self.budget {
            Some(0) => Err(CliError::Config("budget must be positive".into())),
            Some(b) => Ok(Budget::with_work(b as u128)),
            None => Ok(Budget::default()),
        }
    }
}
