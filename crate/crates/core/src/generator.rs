//! Surface forms from a root reading and a set of suffix tags.

use std::fmt;
use std::str::FromStr;

use crate::analyzer::Analyzer;
use crate::error::GenerateError;
use crate::lexicon::{bare_tag, LexCategory, Lexicon, Reading, RootId, SuffixEntry};
use crate::morphotactics::{check_all, Morpheme, MorphemeSeq, MorphotacticTable, Violation};
use crate::phonology::{entry_stems, junction};

/// A generation request: `lemma:CAT[+IV|TV] tag1,tag2,...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenRequest {
    pub lemma: String,
    pub category: LexCategory,
    pub reading: Option<Reading>,
    pub tags: Vec<String>,
}

impl GenRequest {
    pub fn new(lemma: &str, category: LexCategory, tags: &[&str]) -> Self {
        GenRequest {
            lemma: crate::text::nfc(lemma),
            category,
            reading: None,
            tags: tags.iter().map(|t| t.to_string()).collect(),
        }
    }

    pub fn with_reading(mut self, reading: Reading) -> Self {
        self.reading = Some(reading);
        self
    }
}

impl FromStr for GenRequest {
    type Err = GenerateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GenerateError::BadRequest(s.to_string());
        let s_trim = s.trim();
        let (head, tags) = match s_trim.split_once(char::is_whitespace) {
            Some((h, t)) => (h, t.trim()),
            None => (s_trim, ""),
        };
        let (lemma, cat) = head.split_once(':').ok_or_else(bad)?;
        let (cat, reading) = match cat.split_once('+') {
            Some((c, r)) => (c, Some(r.parse::<Reading>().map_err(|_| bad())?)),
            None => (cat, None),
        };
        let category: LexCategory = cat.parse().map_err(|_| bad())?;
        if lemma.is_empty() {
            return Err(bad());
        }
        let tags = tags
            .split(|c: char| c == ',' || c.is_whitespace())
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::to_string)
            .collect();
        Ok(GenRequest { lemma: crate::text::nfc(lemma), category, reading, tags })
    }
}

impl fmt::Display for GenRequest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.lemma, self.category)?;
        if let Some(r) = self.reading {
            write!(f, "+{}", r.gloss_code())?;
        }
        write!(f, " {}", self.tags.join(","))
    }
}

/// One generated form with the analysis it realizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub surface: String,
    pub root: RootId,
    pub reading: Option<Reading>,
    pub stem: String,
    pub morphemes: MorphemeSeq,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generation {
    /// Distinct surfaces, canonical first.
    pub surfaces: Vec<String>,
    pub realizations: Vec<Realization>,
    /// Why nothing was generated; empty when `surfaces` is not.
    pub violations: Vec<Violation>,
}

/// Realizes `req`: tags are ordered by slot, a null verbalizer is added to
/// non-verbal roots that need one, every allomorph choice is checked, and
/// the survivors are joined with the root's stems.
pub fn generate(lex: &Lexicon, table: &MorphotacticTable, req: &GenRequest) -> Result<Generation, GenerateError> {
    let id = lex
        .find_root(&req.lemma, req.category)
        .ok_or_else(|| GenerateError::UnknownLemma { lemma: req.lemma.clone(), category: req.category.to_string() })?;
    let entry = lex.root(id);

    let mut suffixes: Vec<&SuffixEntry> = Vec::with_capacity(req.tags.len() + 1);
    for t in &req.tags {
        let s = lex.suffix(t).filter(|s| table.contains(&s.tag));
        suffixes.push(s.ok_or_else(|| GenerateError::UnknownTag(bare_tag(t).to_string()))?);
    }
    suffixes.sort_by_key(|s| std::cmp::Reverse(s.slot));

    let needs_verbalizer = !entry.is_verbal()
        && !suffixes.is_empty()
        && !suffixes.iter().any(|s| table.is_verbalizer(&s.tag))
        && !table.attaches_to_any_root(&suffixes[0].tag);
    if needs_verbalizer {
        if let Some(v) = table.null_verbalizers().first().and_then(|t| lex.suffix(t)) {
            suffixes.insert(0, v);
        }
    }

    let readings: Vec<Option<Reading>> = match req.reading {
        Some(r) if entry.is_verbal() => {
            if entry.readings().contains(&Some(r)) {
                vec![Some(r)]
            } else {
                vec![]
            }
        }
        _ => entry.readings(),
    };

    let mut realizations = Vec::new();
    let mut violations = Vec::new();
    if readings.is_empty() {
        violations.push(Violation::ReadingMismatch);
    }
    for seq in allomorph_choices(&suffixes) {
        for &reading in &readings {
            match check_all(table, entry, reading, &seq) {
                Ok(v) if v.is_empty() => {}
                Ok(v) => {
                    for x in v {
                        if !violations.contains(&x) {
                            violations.push(x);
                        }
                    }
                    continue;
                }
                Err(e) => return Err(GenerateError::UnknownTag(e.to_string())),
            }
            let first = seq.first_overt().map(|m| m.tag.clone());
            for stem in entry_stems(entry, first.as_deref()) {
                let (surface, morphemes) = realize(&stem, &seq);
                realizations.push(Realization { surface, root: id, reading, stem, morphemes });
            }
        }
    }

    let mut surfaces: Vec<String> = Vec::new();
    for r in &realizations {
        if !surfaces.contains(&r.surface) {
            surfaces.push(r.surface.clone());
        }
    }
    if !surfaces.is_empty() {
        violations.clear();
    }
    Ok(Generation { surfaces, realizations, violations })
}

/// Every combination of allomorphs, canonical (first-listed) first. The
/// stored allomorph is the underlying core; [`realize`] fills in epenthesis.
fn allomorph_choices(suffixes: &[&SuffixEntry]) -> Vec<MorphemeSeq> {
    let mut out: Vec<Vec<Morpheme>> = vec![Vec::new()];
    for s in suffixes {
        let mut next = Vec::with_capacity(out.len() * s.allomorphs.len());
        for prefix in &out {
            for a in &s.allomorphs {
                let mut p = prefix.clone();
                p.push(Morpheme {
                    tag: s.tag.clone(),
                    allomorph: if a.epenthetic { format!("(ü){}", a.core) } else { a.core.clone() },
                    slot: s.slot,
                });
                next.push(p);
            }
        }
        out = next;
    }
    out.into_iter().map(MorphemeSeq::new).collect()
}

fn realize(stem: &str, seq: &MorphemeSeq) -> (String, MorphemeSeq) {
    let mut surface = stem.to_string();
    let mut items = Vec::with_capacity(seq.len());
    for m in seq.iter() {
        let a = m.allomorph.parse().unwrap_or_else(|_| crate::lexicon::Allomorph::null());
        let before = surface.len();
        surface = junction(&surface, &a);
        items.push(Morpheme { tag: m.tag.clone(), allomorph: surface[before..].to_string(), slot: m.slot });
    }
    (surface, MorphemeSeq::new(items))
}

/// Why a round trip failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RoundTripFailure {
    /// The request is unsatisfiable; a vacuous pass is not allowed.
    NothingGenerated(Vec<Violation>),
    /// The analyzer does not return the generating reading for `surface`.
    Missing {
        surface: String,
        expected: String,
    },
    Error(String),
}

impl fmt::Display for RoundTripFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RoundTripFailure::NothingGenerated(v) => {
                let v: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "nothing-generated ({})", v.join("; "))
            }
            RoundTripFailure::Missing { surface, expected } => {
                write!(f, "analysis of {surface:?} lacks {expected}")
            }
            RoundTripFailure::Error(e) => f.write_str(e),
        }
    }
}

/// Generates `req` and checks every surface analyzes back to the same root,
/// reading and morphemes.
pub fn roundtrip_check(analyzer: &Analyzer<'_>, req: &GenRequest) -> Result<(), RoundTripFailure> {
    let g = generate(analyzer.lexicon(), analyzer.table(), req).map_err(|e| RoundTripFailure::Error(e.to_string()))?;
    if g.surfaces.is_empty() {
        return Err(RoundTripFailure::NothingGenerated(g.violations));
    }
    for r in &g.realizations {
        let set = analyzer.analyze(&r.surface).map_err(|e| RoundTripFailure::Error(e.to_string()))?;
        let found = set
            .analyses
            .iter()
            .any(|a| a.root == r.root && a.reading == r.reading && a.stem == r.stem && a.morphemes == r.morphemes);
        if !found {
            let entry = analyzer.lexicon().root(r.root);
            return Err(RoundTripFailure::Missing {
                surface: r.surface.clone(),
                expected: crate::analyzer::render_gloss(entry, r.reading, &r.morphemes),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (Lexicon, MorphotacticTable) {
        let lex = Lexicon::shipped();
        let table = MorphotacticTable::from_lexicon(&lex);
        (lex, table)
    }

    fn surfaces(req: &str) -> Vec<String> {
        let (lex, table) = setup();
        generate(&lex, &table, &req.parse().unwrap()).unwrap().surfaces
    }

    #[test]
    fn causatives() {
        assert_eq!(surfaces("la:Aj VRB.ø,CA-m"), ["langüm"]);
        assert_eq!(surfaces("la:Aj CA-m"), ["langüm"]);
        assert_eq!(surfaces("anü:VI CA-m"), ["anüm"]);
        assert_eq!(surfaces("nel:Aj CA-m"), ["nelüm", "nelküm"]);
    }

    #[test]
    fn inflection() {
        assert_eq!(surfaces("tripa:VI IND,3"), ["tripay"]);
        assert_eq!(surfaces("tripa:VI 3,IND"), ["tripay"]);
        assert_eq!(surfaces("küpa:VI CA-l,IND1SG"), ["küpalün"]);
    }

    #[test]
    fn transitive_causative_is_refused() {
        let (lex, table) = setup();
        let g = generate(&lex, &table, &"nü:VT CA-m".parse().unwrap()).unwrap();
        assert!(g.surfaces.is_empty());
        assert_eq!(g.violations, [Violation::CausativeOnTransitive { tag: "CA-m".into() }]);
    }

    #[test]
    fn unknown_names() {
        let (lex, table) = setup();
        assert!(matches!(
            generate(&lex, &table, &"zzz:VI IND".parse().unwrap()),
            Err(GenerateError::UnknownLemma { .. })
        ));
        assert_eq!(
            generate(&lex, &table, &"tripa:VI XYZ".parse().unwrap()),
            Err(GenerateError::UnknownTag("XYZ".into()))
        );
        assert!("tripa IND".parse::<GenRequest>().is_err());
    }

    #[test]
    fn request_syntax() {
        let r: GenRequest = "monge:VI+TV IND,3".parse().unwrap();
        assert_eq!(r.reading, Some(Reading::Transitive));
        assert_eq!(r.tags, ["IND", "3"]);
        assert_eq!(r.to_string().parse::<GenRequest>().unwrap(), r);
    }

    #[test]
    fn round_trips() {
        let (lex, table) = setup();
        let analyzer = Analyzer::new(&lex, &table);
        assert_eq!(roundtrip_check(&analyzer, &"küpa:VI CA-l,IND1SG".parse().unwrap()), Ok(()));
        assert_eq!(roundtrip_check(&analyzer, &"fa:Dem VRB.ø,CA-m".parse().unwrap()), Ok(()));
        assert!(matches!(
            roundtrip_check(&analyzer, &"nü:VT CA-m".parse().unwrap()),
            Err(RoundTripFailure::NothingGenerated(_))
        ));
    }

    #[test]
    fn deterministic() {
        assert_eq!(surfaces("lel:VI CA-m"), surfaces("lel:VI CA-m"));
        assert_eq!(surfaces("lel:VI CA-m"), ["lelüm", "elüm"]);
    }
}
