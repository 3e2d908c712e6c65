//! Corpus evidence for reclassifying roots.
//!
//! A root attested on its own, with no affixes, is evidence that it is not
//! verbal. A root attested with the -(ü)m- causative is evidence that it is
//! an intransitive verb. The reclassifier gathers both kinds of attestation
//! and proposes a category; it never edits the lexicon.

use std::collections::HashMap;
use std::fmt;
use std::io::Read;
use std::str::FromStr;
use std::sync::Mutex;

use rayon::prelude::*;
use serde::Serialize;

use crate::analyzer::{AnalysisSet, Analyzer};
use crate::error::{CorpusError, ReportError};
use crate::lexicon::LexCategory;
use crate::text::{tokenize, Token};

/// Tokens on each side of an attestation kept as context.
pub const CONTEXT_WINDOW: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexedSource {
    pub id: String,
    pub tokens: Vec<Token>,
}

/// Position-indexed tokens of one or more sources.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CorpusIndex {
    pub sources: Vec<IndexedSource>,
}

impl CorpusIndex {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_text(&mut self, text: &str, source_id: &str) {
        self.sources.push(IndexedSource { id: source_id.to_string(), tokens: tokenize(text) });
    }

    pub fn add_reader<R: Read>(&mut self, mut reader: R, source_id: &str) -> Result<(), CorpusError> {
        let mut bytes = Vec::new();
        reader.read_to_end(&mut bytes).map_err(|error| CorpusError::Io {
            source_id: source_id.to_string(),
            offset: bytes.len(),
            error,
        })?;
        let text = String::from_utf8(bytes).map_err(|e| CorpusError::Io {
            source_id: source_id.to_string(),
            offset: e.utf8_error().valid_up_to(),
            error: std::io::Error::new(std::io::ErrorKind::InvalidData, "invalid UTF-8"),
        })?;
        self.add_text(&text, source_id);
        Ok(())
    }

    pub fn token_count(&self) -> usize {
        self.sources.iter().map(|s| s.tokens.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.token_count() == 0
    }

    /// Up to `window` tokens either side of token `index`, space-joined.
    pub fn context(&self, source: usize, index: usize, window: usize) -> String {
        let tokens = &self.sources[source].tokens;
        let lo = index.saturating_sub(window);
        let hi = (index + window + 1).min(tokens.len());
        tokens[lo..hi].iter().map(|t| t.text.as_str()).collect::<Vec<_>>().join(" ")
    }

    fn tokens(&self) -> impl Iterator<Item = (usize, &Token)> {
        self.sources.iter().enumerate().flat_map(|(i, s)| s.tokens.iter().map(move |t| (i, t)))
    }
}

/// Indexes a single source.
pub fn index_corpus<R: Read>(reader: R, source_id: &str) -> Result<CorpusIndex, CorpusError> {
    let mut index = CorpusIndex::new();
    index.add_reader(reader, source_id)?;
    Ok(index)
}

/// One corpus occurrence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Attestation {
    pub source_id: String,
    /// Byte offset of the token.
    pub offset: usize,
    pub token_index: usize,
    pub token: String,
    pub context: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Proposal {
    Keep,
    ToNonverbal(LexCategory),
    ToIntransitive,
    /// Both bare and causative uses; reported, not resolved.
    Conflict,
}

impl fmt::Display for Proposal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Proposal::Keep => f.write_str("keep"),
            Proposal::ToNonverbal(c) => write!(f, "to_nonverbal({c})"),
            Proposal::ToIntransitive => f.write_str("to_intransitive"),
            Proposal::Conflict => f.write_str("conflict"),
        }
    }
}

/// Decides a proposal from evidence counts. `hint` is the category for a
/// non-verbal proposal; bare uses below `threshold` are not enough on their
/// own but still make causative evidence conflicting.
pub fn propose(
    isolated: usize,
    causative_um: usize,
    causative_l: usize,
    hint: LexCategory,
    threshold: usize,
) -> Proposal {
    if isolated > 0 && causative_um + causative_l > 0 {
        Proposal::Conflict
    } else if isolated > 0 && isolated >= threshold {
        Proposal::ToNonverbal(hint)
    } else if isolated == 0 && causative_um > 0 {
        Proposal::ToIntransitive
    } else {
        Proposal::Keep
    }
}

/// Evidence for one root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvidenceReport {
    pub root: String,
    /// Category the root had before any reclassification; `None` for a
    /// lemma missing from the lexicon.
    pub initial_category: Option<LexCategory>,
    /// Category in the lexicon now.
    pub current_category: Option<LexCategory>,
    pub definition: Option<String>,
    pub extracted_suffixes: Vec<String>,
    pub isolated_uses: Vec<Attestation>,
    pub causative_um_uses: Vec<Attestation>,
    pub causative_l_uses: Vec<Attestation>,
    pub proposal: Proposal,
}

impl EvidenceReport {
    /// Category the proposal leads to.
    pub fn final_category(&self) -> Option<LexCategory> {
        match self.proposal {
            Proposal::ToNonverbal(c) => Some(c),
            Proposal::ToIntransitive => Some(LexCategory::VI),
            Proposal::Keep | Proposal::Conflict => self.current_category,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvidenceOptions {
    /// Bare uses needed for a non-verbal proposal.
    pub threshold: usize,
    /// Guess the non-verbal category from the preceding word.
    pub context_heuristic: bool,
}

impl Default for EvidenceOptions {
    fn default() -> Self {
        EvidenceOptions { threshold: 1, context_heuristic: false }
    }
}

const NOMINAL_CUES: &[&str] =
    &["kiñe", "epu", "küla", "meli", "kechu", "kayu", "regle", "pura", "aylla", "mari", "ta", "ti", "chi", "pu"];
const ADJECTIVAL_CUES: &[&str] = &["müna", "rume", "doy"];

/// Category suggested by the word before each bare use; first cue wins.
fn heuristic_category(index: &CorpusIndex, uses: &[(usize, usize)]) -> Option<LexCategory> {
    for &(src, i) in uses {
        let Some(prev) = i.checked_sub(1).map(|p| &index.sources[src].tokens[p].norm) else { continue };
        if NOMINAL_CUES.contains(&prev.as_str()) {
            return Some(LexCategory::N);
        }
        if ADJECTIVAL_CUES.contains(&prev.as_str()) {
            return Some(LexCategory::Aj);
        }
    }
    None
}

/// Evidence gatherer over one corpus; analyses of distinct tokens are cached
/// across roots.
pub struct Reclassifier<'a> {
    analyzer: &'a Analyzer<'a>,
    index: &'a CorpusIndex,
    cache: Mutex<HashMap<String, AnalysisSet>>,
}

impl<'a> Reclassifier<'a> {
    pub fn new(analyzer: &'a Analyzer<'a>, index: &'a CorpusIndex) -> Self {
        Reclassifier { analyzer, index, cache: Mutex::new(HashMap::new()) }
    }

    fn analysis(&self, norm: &str) -> Option<AnalysisSet> {
        if let Some(a) = self.cache.lock().unwrap().get(norm) {
            return Some(a.clone());
        }
        let set = self.analyzer.analyze(norm).ok()?;
        self.cache.lock().unwrap().insert(norm.to_string(), set.clone());
        Some(set)
    }

    fn attestation(&self, src: usize, t: &Token) -> Attestation {
        Attestation {
            source_id: self.index.sources[src].id.clone(),
            offset: t.offset,
            token_index: t.index,
            token: t.text.clone(),
            context: self.index.context(src, t.index, CONTEXT_WINDOW),
        }
    }

    pub fn gather(&self, root: &str, opts: EvidenceOptions) -> EvidenceReport {
        let root = crate::text::normalize(root);
        let lex = self.analyzer.lexicon();
        let table = self.analyzer.table();
        let entries: Vec<_> = lex.lookup_root(&root).into_iter().filter(|e| e.lemma == root).collect();
        let spellings: Vec<&str> =
            if entries.is_empty() { vec![root.as_str()] } else { entries.iter().flat_map(|e| e.spellings()).collect() };

        let mut isolated = Vec::new();
        let mut isolated_pos = Vec::new();
        let mut um = Vec::new();
        let mut l = Vec::new();
        for (src, t) in self.index.tokens() {
            if spellings.contains(&t.norm.as_str()) {
                isolated.push(self.attestation(src, t));
                isolated_pos.push((src, t.index));
                continue;
            }
            let Some(set) = self.analysis(&t.norm) else { continue };
            let Some(best) = set.analyses.iter().find(|a| a.lemma == root) else { continue };
            for m in best.morphemes.iter().filter(|m| table.is_causative(&m.tag)) {
                if m.allomorph.ends_with('m') {
                    um.push(self.attestation(src, t));
                } else if m.allomorph.ends_with('l') {
                    l.push(self.attestation(src, t));
                }
            }
        }

        let lexical_hint = entries.iter().find(|e| !e.is_verbal()).map(|e| e.category);
        let hint = lexical_hint
            .or_else(|| opts.context_heuristic.then(|| heuristic_category(self.index, &isolated_pos)).flatten())
            .unwrap_or(LexCategory::N);
        let proposal = propose(isolated.len(), um.len(), l.len(), hint, opts.threshold);

        let first = entries.first();
        EvidenceReport {
            root: root.clone(),
            initial_category: first.map(|e| e.initial_category.unwrap_or(e.category)),
            current_category: first.map(|e| e.category),
            definition: first.and_then(|e| e.gloss(None).map(str::to_string)),
            extracted_suffixes: first.map(|e| e.extracted_suffixes.clone()).unwrap_or_default(),
            isolated_uses: isolated,
            causative_um_uses: um,
            causative_l_uses: l,
            proposal,
        }
    }

    /// Reports for `roots` in the given order, gathered in parallel.
    pub fn gather_all(&self, roots: &[String], opts: EvidenceOptions) -> Vec<EvidenceReport> {
        roots.par_iter().map(|r| self.gather(r, opts)).collect()
    }
}

/// Evidence for one root over `index`.
pub fn gather_evidence(
    analyzer: &Analyzer<'_>,
    index: &CorpusIndex,
    root: &str,
    opts: EvidenceOptions,
) -> EvidenceReport {
    Reclassifier::new(analyzer, index).gather(root, opts)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Tsv,
    Table,
}

impl FromStr for ReportFormat {
    type Err = ReportError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tsv" => Ok(ReportFormat::Tsv),
            "table" => Ok(ReportFormat::Table),
            other => Err(ReportError::UnknownFormat(other.to_string())),
        }
    }
}

pub const REPORT_COLUMNS: [&str; 9] = [
    "root",
    "initial_cat",
    "final_cat",
    "definition",
    "extracted_suffixes",
    "proposal",
    "isolated",
    "causative_um",
    "causative_l",
];

fn row(r: &EvidenceReport) -> [String; 9] {
    let cat = |c: Option<LexCategory>| c.map_or("-".to_string(), |c| c.code().to_string());
    let suffixes = if r.extracted_suffixes.is_empty() {
        "-".to_string()
    } else {
        r.extracted_suffixes.iter().map(|s| format!("-{s}")).collect::<Vec<_>>().join(",")
    };
    [
        r.root.clone(),
        cat(r.initial_category),
        cat(r.final_category()),
        r.definition.clone().unwrap_or_else(|| "-".into()).replace('\t', " "),
        suffixes,
        r.proposal.to_string(),
        r.isolated_uses.len().to_string(),
        r.causative_um_uses.len().to_string(),
        r.causative_l_uses.len().to_string(),
    ]
}

/// Renders reports as TSV or an aligned text table, header first.
pub fn report(reports: &[EvidenceReport], format: ReportFormat) -> String {
    let rows: Vec<[String; 9]> = reports.iter().map(row).collect();
    let header = REPORT_COLUMNS.map(str::to_string);
    let mut out = String::new();
    match format {
        ReportFormat::Tsv => {
            for r in std::iter::once(&header).chain(&rows) {
                out.push_str(&r.join("\t"));
                out.push('\n');
            }
        }
        ReportFormat::Table => {
            let mut widths = [0usize; 9];
            for r in std::iter::once(&header).chain(&rows) {
                for (w, cell) in widths.iter_mut().zip(r) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            for r in std::iter::once(&header).chain(&rows) {
                let cells: Vec<String> =
                    r.iter().zip(widths).map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
                out.push_str(cells.join("  ").trim_end());
                out.push('\n');
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::Lexicon;
    use crate::morphotactics::MorphotacticTable;

    fn run(text: &str, root: &str, opts: EvidenceOptions) -> EvidenceReport {
        let lex = Lexicon::shipped();
        let table = MorphotacticTable::from_lexicon(&lex);
        let analyzer = Analyzer::new(&lex, &table);
        let index = index_corpus(text.as_bytes(), "t").unwrap();
        gather_evidence(&analyzer, &index, root, opts)
    }

    #[test]
    fn index_three_tokens() {
        let index = index_corpus("kiñe küdaw mew".as_bytes(), "s").unwrap();
        assert_eq!(index.token_count(), 3);
        assert_eq!(index.context(0, 1, 5), "kiñe küdaw mew");
        assert!(index_corpus("".as_bytes(), "e").unwrap().is_empty());
    }

    #[test]
    fn bare_kudaw_is_nominal() {
        let r = run("kiñe küdaw mew", "küdaw", EvidenceOptions::default());
        assert_eq!(r.proposal, Proposal::ToNonverbal(LexCategory::N));
        assert_eq!(r.isolated_uses[0].context, "kiñe küdaw mew");
        assert_eq!(r.initial_category, Some(LexCategory::VI));
    }

    #[test]
    fn causative_anu_is_intransitive() {
        let r = run("anümün. fey anümün", "anü", EvidenceOptions::default());
        assert_eq!(r.proposal, Proposal::ToIntransitive);
        assert_eq!(r.causative_um_uses.len(), 2);
    }

    #[test]
    fn absent_root_is_kept() {
        assert_eq!(run("tripay", "anü", EvidenceOptions::default()).proposal, Proposal::Keep);
    }

    #[test]
    fn bare_and_causative_conflict() {
        let r = run("fa fam", "fa", EvidenceOptions::default());
        assert_eq!(r.proposal, Proposal::Conflict);
    }

    #[test]
    fn threshold_counts_bare_uses() {
        let opts = EvidenceOptions { threshold: 2, ..Default::default() };
        assert_eq!(run("küdaw", "küdaw", opts).proposal, Proposal::Keep);
        assert_eq!(run("küdaw küdaw", "küdaw", opts).proposal, Proposal::ToNonverbal(LexCategory::N));
    }

    #[test]
    fn heuristic_hint_for_unknown_lemma() {
        let on = EvidenceOptions { context_heuristic: true, ..Default::default() };
        assert_eq!(run("müna foo", "foo", on).proposal, Proposal::ToNonverbal(LexCategory::Aj));
        assert_eq!(run("müna foo", "foo", EvidenceOptions::default()).proposal, Proposal::ToNonverbal(LexCategory::N));
    }

    #[test]
    fn report_rows() {
        let r = run("la", "la", EvidenceOptions::default());
        let tsv = report(&[r], ReportFormat::Tsv);
        let line = tsv.lines().nth(1).unwrap();
        assert!(line.starts_with("la\tVI\tAj\tdead, deceased\t"), "{line}");
        assert_eq!(report(&[], ReportFormat::Tsv).lines().count(), 1);
        assert!("json".parse::<ReportFormat>().is_err());
    }
}
