//! Data files compiled into the crate.

pub const ROOTS_TSV: &str = include_str!("../data/roots.tsv");
pub const SUFFIXES_TSV: &str = include_str!("../data/suffixes.tsv");
/// Root, category and attested root+CA surfaces for roots that causativise
/// with -(ü)m-; `mapumorph validate` re-derives each row.
pub const CAUSATIVES_TSV: &str = include_str!("../data/causatives.tsv");

use crate::error::LexiconError;
use crate::generator::{generate, GenRequest};
use crate::lexicon::{LexCategory, Lexicon};
use crate::morphotactics::MorphotacticTable;

/// One row of the causative table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CausativeRow {
    pub root: String,
    pub category: LexCategory,
    /// Attested root+CA surfaces, canonical first.
    pub surfaces: Vec<String>,
    pub intransitive_sense: String,
    pub transitive_sense: String,
}

pub fn parse_causatives(text: &str) -> Result<Vec<CausativeRow>, LexiconError> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |m: String| LexiconError::parse("causatives.tsv", i + 1, m);
        let f: Vec<&str> = line.split('\t').collect();
        if f.len() < 5 {
            return Err(err(format!("expected at least 5 fields, found {}", f.len())));
        }
        rows.push(CausativeRow {
            root: crate::text::nfc(f[0].trim()),
            category: f[1].trim().parse().map_err(err)?,
            surfaces: f[2].split(',').map(|s| crate::text::nfc(s.trim())).collect(),
            intransitive_sense: f[3].trim().to_string(),
            transitive_sense: f[4].trim().to_string(),
        });
    }
    Ok(rows)
}

/// Regenerates root + CA-m for each row; one message per mismatch.
pub fn check_causatives(lex: &Lexicon, table: &MorphotacticTable, rows: &[CausativeRow]) -> Vec<String> {
    let mut out = Vec::new();
    for row in rows {
        let req = GenRequest::new(&row.root, row.category, &["CA-m"]);
        match generate(lex, table, &req) {
            Ok(g) if g.surfaces == row.surfaces => {}
            Ok(g) => out.push(format!(
                "{}: expected {}, generated {}",
                row.root,
                row.surfaces.join(","),
                if g.surfaces.is_empty() { "nothing".to_string() } else { g.surfaces.join(",") }
            )),
            Err(e) => out.push(format!("{}: {e}", row.root)),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_causatives_regenerate() {
        let lex = Lexicon::shipped();
        let table = MorphotacticTable::from_lexicon(&lex);
        let rows = parse_causatives(CAUSATIVES_TSV).unwrap();
        assert_eq!(rows.len(), 18);
        assert_eq!(check_causatives(&lex, &table, &rows), Vec::<String>::new());
    }
}
