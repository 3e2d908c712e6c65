//! Shared configuration: optional TOML file, overridden by flags.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use mapumorph::data::{CAUSATIVES_TSV, ROOTS_TSV, SUFFIXES_TSV};
use mapumorph::{Lexicon, LexiconError};
use serde::Deserialize;

pub const DATA_ENV: &str = "MAPUMORPH_DATA";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Plain,
    Records,
    Tsv,
}

/// Keys accepted in the config file. Relative paths resolve against the
/// file's directory.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub lexicon: Option<PathBuf>,
    pub suffixes: Option<PathBuf>,
    pub overrides: Option<PathBuf>,
    pub format: Option<Format>,
    pub threshold: Option<usize>,
    pub ambiguity_report: Option<bool>,
    pub context_heuristic: Option<bool>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("cannot read config {}", path.display()))?;
        let mut cfg: FileConfig =
            toml::from_str(&text).with_context(|| format!("invalid config {}", path.display()))?;
        let base = path.parent().unwrap_or(Path::new("."));
        for p in [&mut cfg.lexicon, &mut cfg.suffixes, &mut cfg.overrides].into_iter().flatten() {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        }
        Ok(cfg)
    }
}

/// Resolved settings used by every subcommand.
#[derive(Debug, Clone)]
pub struct Config {
    pub lexicon: Option<PathBuf>,
    pub suffixes: Option<PathBuf>,
    pub overrides: Option<PathBuf>,
    pub data_dir: Option<PathBuf>,
    pub format: Format,
    pub threshold: usize,
    pub ambiguity_report: bool,
    pub context_heuristic: bool,
}

impl Config {
    /// Checks that every configured path exists.
    pub fn validate(&self) -> Result<()> {
        if let Some(dir) = &self.data_dir {
            if !dir.is_dir() {
                bail!("{DATA_ENV} is not a directory: {}", dir.display());
            }
        }
        for p in [&self.lexicon, &self.suffixes, &self.overrides].into_iter().flatten() {
            if !p.is_file() {
                bail!("no such file: {}", p.display());
            }
        }
        Ok(())
    }

    fn source(&self, explicit: &Option<PathBuf>, name: &str, embedded: &'static str) -> Result<(String, String)> {
        let path = explicit.clone().or_else(|| self.data_dir.as_ref().map(|d| d.join(name)).filter(|p| p.is_file()));
        match path {
            Some(p) => {
                let text = std::fs::read_to_string(&p).with_context(|| format!("cannot read {}", p.display()))?;
                Ok((p.display().to_string(), text))
            }
            None => Ok((name.to_string(), embedded.to_string())),
        }
    }

    /// Parses the lexicon (and overrides) without validating it.
    pub fn parse_lexicon(&self) -> Result<Lexicon> {
        let (roots_name, roots) = self.source(&self.lexicon, "roots.tsv", ROOTS_TSV)?;
        let (suffix_name, suffixes) = self.source(&self.suffixes, "suffixes.tsv", SUFFIXES_TSV)?;
        let roots = mapumorph::lexicon::parse_roots(&roots).map_err(|e| relabel(e, &roots_name))?;
        let suffixes = mapumorph::lexicon::parse_suffixes(&suffixes, &suffix_name)?;
        let mut lex = Lexicon::from_parts(roots, suffixes);
        if let Some(p) = &self.overrides {
            let text = std::fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))?;
            lex = lex.with_suffix_overrides(&text).map_err(|e| e.in_file(p))?;
        }
        Ok(lex)
    }

    /// Parses and validates the lexicon.
    pub fn load_lexicon(&self) -> Result<Lexicon> {
        let lex = self.parse_lexicon()?;
        let checked = Lexicon::checked(lex.roots().to_vec(), lex.suffixes().to_vec())?;
        Ok(checked)
    }

    pub fn causatives(&self) -> Result<(String, String)> {
        self.source(&None, "causatives.tsv", CAUSATIVES_TSV)
    }
}

fn relabel(e: LexiconError, name: &str) -> LexiconError {
    match e {
        LexiconError::Parse { line, message, .. } => LexiconError::Parse { file: name.to_string(), line, message },
        other => other,
    }
}
