use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::lexicon::Diagnostic;

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("{file}:{line}: {message}")]
    Parse { file: String, line: usize, message: String },

    #[error("invalid lexicon: {}", summarize(.0))]
    Invalid(Vec<Diagnostic>),

    #[error("cannot read {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
}

impl LexiconError {
    pub(crate) fn parse(file: &str, line: usize, message: impl Into<String>) -> Self {
        LexiconError::Parse { file: file.to_string(), line, message: message.into() }
    }

    /// Re-labels a parse error with the path it came from.
    pub fn in_file(self, path: &Path) -> Self {
        match self {
            LexiconError::Parse { line, message, .. } => {
                LexiconError::Parse { file: path.display().to_string(), line, message }
            }
            other => other,
        }
    }
}

fn summarize(diags: &[Diagnostic]) -> String {
    let shown: Vec<String> = diags.iter().take(3).map(|d| d.to_string()).collect();
    let more = diags.len().saturating_sub(shown.len());
    if more > 0 {
        format!("{} (+{more} more)", shown.join("; "))
    } else {
        shown.join("; ")
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalyzeError {
    #[error("empty-form")]
    EmptyForm,
    #[error("bad-alphabet: {0:?} is not a Mapudüngun letter")]
    BadAlphabet(char),
}

impl AnalyzeError {
    pub fn code(&self) -> &'static str {
        match self {
            AnalyzeError::EmptyForm => "empty-form",
            AnalyzeError::BadAlphabet(_) => "bad-alphabet",
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MorphError {
    #[error("unknown suffix tag {0:?}")]
    UnknownTag(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenerateError {
    #[error("unknown lemma {lemma:?} with category {category}")]
    UnknownLemma { lemma: String, category: String },
    #[error("unknown suffix tag {0:?}")]
    UnknownTag(String),
    #[error("bad request {0:?}: expected \"lemma:CAT[+valency] tag1,tag2,...\"")]
    BadRequest(String),
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("read error in {source_id} at byte {offset}: {error}")]
    Io { source_id: String, offset: usize, error: std::io::Error },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReportError {
    #[error("unknown report format {0:?} (expected tsv or table)")]
    UnknownFormat(String),
}
