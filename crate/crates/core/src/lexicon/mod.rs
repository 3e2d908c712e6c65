//! Root lexicon and suffix inventory.
//!
//! Both are loaded from tab-separated files (see `tsv`) and frozen into an
//! immutable [`Lexicon`] with lookup indexes. Loading validates every entry;
//! [`validate_lexicon`] reports all problems at once for tooling.

mod tsv;
mod validate;

use std::collections::HashMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

pub use tsv::{parse_roots, parse_suffixes};
pub use validate::{validate_lexicon, Diagnostic};

use crate::error::LexiconError;

/// Lexical category of a root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LexCategory {
    N,
    Aj,
    Av,
    Dem,
    Int,
    NU,
    SP,
    Conj,
    VI,
    VT,
}

impl LexCategory {
    pub const ALL: [LexCategory; 10] =
        [Self::N, Self::Aj, Self::Av, Self::Dem, Self::Int, Self::NU, Self::SP, Self::Conj, Self::VI, Self::VT];

    pub fn is_verbal(self) -> bool {
        matches!(self, Self::VI | Self::VT)
    }

    /// Label used in the lexicon files and reports.
    pub fn code(self) -> &'static str {
        match self {
            Self::N => "N",
            Self::Aj => "Aj",
            Self::Av => "Av",
            Self::Dem => "Dem",
            Self::Int => "Int",
            Self::NU => "NU",
            Self::SP => "SP",
            Self::Conj => "Conj",
            Self::VI => "VI",
            Self::VT => "VT",
        }
    }

    /// Label used in glosses (`-AJ.pichi`).
    pub fn gloss_code(self) -> &'static str {
        match self {
            Self::N => "NN",
            Self::Aj => "AJ",
            Self::Av => "AV",
            Self::Dem => "DP",
            Self::Int => "IP",
            Self::NU => "NU",
            Self::SP => "SP",
            Self::Conj => "CJ",
            Self::VI => "IV",
            Self::VT => "TV",
        }
    }
}

impl fmt::Display for LexCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for LexCategory {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|c| c.code() == s || c.gloss_code() == s)
            .ok_or_else(|| format!("unknown category {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Valency {
    Intransitive,
    Transitive,
    /// Both readings are available (bivalent roots such as monge-).
    Labile,
}

impl Valency {
    pub fn code(self) -> &'static str {
        match self {
            Self::Intransitive => "intransitive",
            Self::Transitive => "transitive",
            Self::Labile => "labile",
        }
    }
}

impl FromStr for Valency {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "intransitive" | "IV" => Ok(Self::Intransitive),
            "transitive" | "TV" => Ok(Self::Transitive),
            "labile" => Ok(Self::Labile),
            _ => Err(format!("unknown valency {s:?}")),
        }
    }
}

/// One valency reading of a verbal theme.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum Reading {
    #[serde(rename = "IV")]
    Intransitive,
    #[serde(rename = "TV")]
    Transitive,
}

impl Reading {
    pub fn gloss_code(self) -> &'static str {
        match self {
            Self::Intransitive => "IV",
            Self::Transitive => "TV",
        }
    }
}

impl FromStr for Reading {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "IV" | "intransitive" => Ok(Self::Intransitive),
            "TV" | "transitive" => Ok(Self::Transitive),
            _ => Err(format!("unknown valency reading {s:?}")),
        }
    }
}

/// Reference work attesting a root, by its one-letter code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Source {
    K,
    S,
    G,
}

impl FromStr for Source {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim_end_matches('.') {
            "K" => Ok(Self::K),
            "S" => Ok(Self::S),
            "G" => Ok(Self::G),
            _ => Err(format!("unknown source {s:?}")),
        }
    }
}

/// How a lexical alternant changes the stem before its trigger suffix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum StemRule {
    /// The stem is replaced (la → lang before -(ü)m-).
    Replace(String),
    /// The replacement is an additional variant; the plain stem stays first
    /// (nel → nel ~ nelk before -(ü)m-). Written `~stem`.
    AddVariant(String),
    /// Stem-final rewrite (f → p). Written `-f>-p`.
    Ending { from: String, to: String },
}

impl StemRule {
    /// Stems produced from `stem` by this rule, canonical first. Applying the
    /// rule to its own output is a no-op.
    pub fn apply(&self, stem: &str) -> Vec<String> {
        match self {
            StemRule::Replace(s) => vec![s.clone()],
            StemRule::AddVariant(s) if s == stem => vec![stem.to_string()],
            StemRule::AddVariant(s) => vec![stem.to_string(), s.clone()],
            StemRule::Ending { from, to } => match stem.strip_suffix(from.as_str()) {
                Some(base) if from != to => vec![format!("{base}{to}")],
                _ => vec![stem.to_string()],
            },
        }
    }

    /// Whether a stem-final rewrite; these also apply to spelling variants.
    pub fn is_ending(&self) -> bool {
        matches!(self, StemRule::Ending { .. })
    }
}

impl fmt::Display for StemRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StemRule::Replace(s) => f.write_str(s),
            StemRule::AddVariant(s) => write!(f, "~{s}"),
            StemRule::Ending { from, to } => write!(f, "-{from}>-{to}"),
        }
    }
}

impl FromStr for StemRule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(rest) = s.strip_prefix('-') {
            let (from, to) =
                rest.split_once(">-").ok_or_else(|| format!("bad ending rewrite {s:?}, expected -from>-to"))?;
            return Ok(StemRule::Ending { from: crate::text::nfc(from), to: crate::text::nfc(to) });
        }
        if let Some(rest) = s.strip_prefix('~') {
            return Ok(StemRule::AddVariant(crate::text::nfc(rest)));
        }
        Ok(StemRule::Replace(crate::text::nfc(s)))
    }
}

/// Lexically conditioned stem alternants, keyed by the trigger suffix tag.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Alternants(Vec<(String, StemRule)>);

impl Alternants {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, trigger: &str, rule: StemRule) -> Self {
        self.insert(trigger, rule);
        self
    }

    /// Adds or replaces the rule for `trigger`.
    pub fn insert(&mut self, trigger: &str, rule: StemRule) {
        match self.0.iter_mut().find(|(t, _)| t == trigger) {
            Some(slot) => slot.1 = rule,
            None => self.0.push((trigger.to_string(), rule)),
        }
    }

    pub fn get(&self, trigger: &str) -> Option<&StemRule> {
        self.0.iter().find(|(t, _)| t == trigger).map(|(_, r)| r)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &StemRule)> {
        self.0.iter().map(|(t, r)| (t.as_str(), r))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Only the stem-final rewrites; used for spelling variants.
    pub fn endings_only(&self) -> Alternants {
        Alternants(self.0.iter().filter(|(_, r)| r.is_ending()).cloned().collect())
    }
}

/// A root of the lexicon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexEntry {
    pub lemma: String,
    pub category: LexCategory,
    /// Present iff the category is verbal.
    pub valency: Option<Valency>,
    /// Intransitive gloss; for non-verbal roots, the definition.
    pub gloss_iv: Option<String>,
    pub gloss_tv: Option<String>,
    /// Suffixes removed from the dictionary form; metadata only.
    pub extracted_suffixes: Vec<String>,
    pub alternants: Alternants,
    /// Alternative spellings of the lemma.
    pub variants: Vec<String>,
    /// Attesting works; informational only.
    pub sources: Vec<Source>,
    /// Category before reclassification, when it differs from `category`.
    pub initial_category: Option<LexCategory>,
}

impl LexEntry {
    pub fn new(lemma: &str, category: LexCategory) -> Self {
        let valency = match category {
            LexCategory::VI => Some(Valency::Intransitive),
            LexCategory::VT => Some(Valency::Transitive),
            _ => None,
        };
        LexEntry {
            lemma: crate::text::nfc(lemma),
            category,
            valency,
            gloss_iv: None,
            gloss_tv: None,
            extracted_suffixes: Vec::new(),
            alternants: Alternants::new(),
            variants: Vec::new(),
            sources: Vec::new(),
            initial_category: None,
        }
    }

    pub fn labile(lemma: &str, gloss_iv: &str, gloss_tv: &str) -> Self {
        LexEntry {
            valency: Some(Valency::Labile),
            gloss_iv: Some(gloss_iv.to_string()),
            gloss_tv: Some(gloss_tv.to_string()),
            ..LexEntry::new(lemma, LexCategory::VI)
        }
    }

    pub fn is_verbal(&self) -> bool {
        self.category.is_verbal()
    }

    pub fn is_labile(&self) -> bool {
        self.valency == Some(Valency::Labile)
    }

    /// Valency readings this root can be analyzed with; `None` stands for a
    /// non-verbal root.
    pub fn readings(&self) -> Vec<Option<Reading>> {
        match self.valency {
            None => vec![None],
            Some(Valency::Intransitive) => vec![Some(Reading::Intransitive)],
            Some(Valency::Transitive) => vec![Some(Reading::Transitive)],
            Some(Valency::Labile) => {
                vec![Some(Reading::Intransitive), Some(Reading::Transitive)]
            }
        }
    }

    /// Gloss code of the root under a reading (`IV`, `TV`, `AJ`, ...).
    pub fn gloss_code(&self, reading: Option<Reading>) -> &'static str {
        match reading {
            Some(r) if self.is_verbal() => r.gloss_code(),
            _ => self.category.gloss_code(),
        }
    }

    /// Gloss text for a reading.
    pub fn gloss(&self, reading: Option<Reading>) -> Option<&str> {
        match reading {
            Some(Reading::Transitive) => self.gloss_tv.as_deref().or(self.gloss_iv.as_deref()),
            _ => self.gloss_iv.as_deref().or(self.gloss_tv.as_deref()),
        }
    }

    /// Whether `form` spells this root (lemma or variant).
    pub fn spelled(&self, form: &str) -> bool {
        self.lemma == form || self.variants.iter().any(|v| v == form)
    }

    /// Lemma followed by variants.
    pub fn spellings(&self) -> impl Iterator<Item = &str> {
        std::iter::once(self.lemma.as_str()).chain(self.variants.iter().map(String::as_str))
    }
}

/// Index of a root in its lexicon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootId(pub usize);

/// One surface shape of a suffix. `(ü)m` is written with `epenthetic` set
/// and `core` = "m"; the null morpheme has an empty core.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Allomorph {
    pub core: String,
    pub epenthetic: bool,
}

impl Allomorph {
    pub const EPENTHETIC_VOWEL: char = 'ü';

    pub fn plain(core: &str) -> Self {
        Allomorph { core: crate::text::nfc(core), epenthetic: false }
    }

    pub fn epenthetic(core: &str) -> Self {
        Allomorph { core: crate::text::nfc(core), epenthetic: true }
    }

    pub fn null() -> Self {
        Allomorph { core: String::new(), epenthetic: false }
    }

    pub fn is_null(&self) -> bool {
        self.core.is_empty()
    }
}

impl fmt::Display for Allomorph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_null() {
            f.write_str("∅")
        } else if self.epenthetic {
            write!(f, "(ü){}", self.core)
        } else {
            f.write_str(&self.core)
        }
    }
}

impl FromStr for Allomorph {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "∅" || s == "ø" {
            return Ok(Allomorph::null());
        }
        if let Some(core) = s.strip_prefix("(ü)") {
            if core.is_empty() {
                return Err("epenthetic allomorph without consonant".into());
            }
            return Ok(Allomorph::epenthetic(core));
        }
        if s.is_empty() || s.contains('(') {
            return Err(format!("bad allomorph {s:?}"));
        }
        Ok(Allomorph::plain(s))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ValencyEffect {
    None,
    /// Causatives: attach to intransitive themes and yield transitive ones.
    RequiresIntransitiveBase,
    Transitivizes,
    Detransitivizes,
}

impl ValencyEffect {
    pub fn code(self) -> &'static str {
        match self {
            Self::None => "none",
            Self::RequiresIntransitiveBase => "requires_intransitive_base",
            Self::Transitivizes => "transitivizes",
            Self::Detransitivizes => "detransitivizes",
        }
    }
}

impl FromStr for ValencyEffect {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "none" | "-" => Ok(Self::None),
            "requires_intransitive_base" => Ok(Self::RequiresIntransitiveBase),
            "transitivizes" => Ok(Self::Transitivizes),
            "detransitivizes" => Ok(Self::Detransitivizes),
            _ => Err(format!("unknown valency effect {s:?}")),
        }
    }
}

/// Co-occurrence condition carried by a suffix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Constraint {
    /// At least one of these tags must be present (`PL|DL`).
    RequiresAny(Vec<String>),
    /// The tag must be absent (`!PL`).
    Forbids(String),
    /// May attach directly to a non-verbal root without a verbalizer.
    AnyRoot,
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::RequiresAny(tags) => f.write_str(&tags.join("|")),
            Constraint::Forbids(tag) => write!(f, "!{tag}"),
            Constraint::AnyRoot => f.write_str("anyroot"),
        }
    }
}

impl FromStr for Constraint {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "anyroot" {
            return Ok(Constraint::AnyRoot);
        }
        if let Some(tag) = s.strip_prefix('!') {
            if tag.is_empty() {
                return Err("empty forbidden tag".into());
            }
            return Ok(Constraint::Forbids(tag.to_string()));
        }
        let tags: Vec<String> = s.split('|').map(|t| t.trim().to_string()).collect();
        if s.is_empty() || tags.iter().any(String::is_empty) {
            return Err(format!("bad constraint {s:?}"));
        }
        Ok(Constraint::RequiresAny(tags))
    }
}

pub const MOOD_CLASS: &str = "mood";
pub const PERSON_CLASS: &str = "person";
pub const VERBALIZER_CLASS: &str = "verbalizer";
pub const MOOD_SLOT: u8 = 4;
pub const PERSON_SLOT: u8 = 3;
pub const MAX_SLOT: u8 = 36;

/// A suffix of the inventory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuffixEntry {
    /// Identifier, e.g. `IND` or `CA-m`.
    pub tag: String,
    pub allomorphs: Vec<Allomorph>,
    pub slot: u8,
    /// Exclusion classes; a suffix may belong to several (portmanteaus).
    pub excl_classes: Vec<String>,
    pub valency_effect: ValencyEffect,
    pub constraints: Vec<Constraint>,
}

impl SuffixEntry {
    pub fn new(tag: &str, allomorphs: Vec<Allomorph>, slot: u8, excl_class: &str) -> Self {
        SuffixEntry {
            tag: tag.to_string(),
            allomorphs,
            slot,
            excl_classes: excl_class.split('+').map(str::to_string).collect(),
            valency_effect: ValencyEffect::None,
            constraints: Vec::new(),
        }
    }

    /// Gloss label: the tag without its allomorph-class qualifier.
    pub fn label(&self) -> &str {
        gloss_label(&self.tag)
    }

    pub fn in_class(&self, class: &str) -> bool {
        self.excl_classes.iter().any(|c| c == class)
    }

    pub fn is_mood(&self) -> bool {
        self.in_class(MOOD_CLASS)
    }

    pub fn is_person(&self) -> bool {
        self.in_class(PERSON_CLASS)
    }

    pub fn is_verbalizer(&self) -> bool {
        self.in_class(VERBALIZER_CLASS)
    }

    pub fn attaches_to_any_root(&self) -> bool {
        self.constraints.contains(&Constraint::AnyRoot)
    }

    pub fn null_allomorph(&self) -> Option<&Allomorph> {
        self.allomorphs.iter().find(|a| a.is_null())
    }

    pub fn is_causative(&self) -> bool {
        self.valency_effect == ValencyEffect::RequiresIntransitiveBase
    }
}

/// `CA-m` → `CA`; tags without a qualifier are returned whole.
pub fn gloss_label(tag: &str) -> &str {
    match tag.split_once('-') {
        Some((label, _)) if !label.is_empty() => label,
        _ => tag,
    }
}

/// Strips a trailing null marker so `VRB.ø` and `3.ø` name their tags.
pub fn bare_tag(tag: &str) -> &str {
    tag.strip_suffix(".ø").or_else(|| tag.strip_suffix(".∅")).unwrap_or(tag)
}

/// Immutable, indexed root lexicon and suffix inventory.
#[derive(Debug, Clone, Default)]
pub struct Lexicon {
    roots: Vec<LexEntry>,
    suffixes: Vec<SuffixEntry>,
    by_lemma: HashMap<String, Vec<RootId>>,
    by_variant: HashMap<String, Vec<RootId>>,
    suffix_by_tag: HashMap<String, usize>,
}

impl PartialEq for Lexicon {
    fn eq(&self, other: &Self) -> bool {
        self.roots == other.roots && self.suffixes == other.suffixes
    }
}

impl Lexicon {
    /// Builds the indexes without validating. Use [`Lexicon::checked`] or
    /// [`load_lexicon`] unless the caller runs [`validate_lexicon`] itself.
    pub fn from_parts(roots: Vec<LexEntry>, suffixes: Vec<SuffixEntry>) -> Self {
        let mut by_lemma: HashMap<String, Vec<RootId>> = HashMap::new();
        let mut by_variant: HashMap<String, Vec<RootId>> = HashMap::new();
        for (i, e) in roots.iter().enumerate() {
            by_lemma.entry(e.lemma.clone()).or_default().push(RootId(i));
            for v in &e.variants {
                by_variant.entry(v.clone()).or_default().push(RootId(i));
            }
        }
        let mut suffix_by_tag = HashMap::new();
        for (i, s) in suffixes.iter().enumerate() {
            suffix_by_tag.entry(s.tag.clone()).or_insert(i);
        }
        Lexicon { roots, suffixes, by_lemma, by_variant, suffix_by_tag }
    }

    /// Like [`Lexicon::from_parts`] but rejects any invariant violation.
    pub fn checked(roots: Vec<LexEntry>, suffixes: Vec<SuffixEntry>) -> Result<Self, LexiconError> {
        let lex = Self::from_parts(roots, suffixes);
        let diagnostics = validate_lexicon(&lex);
        if diagnostics.is_empty() {
            Ok(lex)
        } else {
            Err(LexiconError::Invalid(diagnostics))
        }
    }

    /// Parses both files' contents without validating.
    pub fn parse(roots_tsv: &str, suffixes_tsv: &str) -> Result<Self, LexiconError> {
        let roots = parse_roots(roots_tsv)?;
        let suffixes = parse_suffixes(suffixes_tsv, "suffixes.tsv")?;
        Ok(Self::from_parts(roots, suffixes))
    }

    /// Parses and validates.
    pub fn from_tsv(roots_tsv: &str, suffixes_tsv: &str) -> Result<Self, LexiconError> {
        let lex = Self::parse(roots_tsv, suffixes_tsv)?;
        Self::checked(lex.roots, lex.suffixes)
    }

    /// The lexicon shipped with the crate.
    pub fn shipped() -> Self {
        Self::from_tsv(crate::data::ROOTS_TSV, crate::data::SUFFIXES_TSV).expect("shipped lexicon is valid")
    }

    /// Replaces suffix entries by tag (or appends new ones) from an
    /// overrides file with the suffixes.tsv schema. Not validated.
    pub fn with_suffix_overrides(&self, overrides_tsv: &str) -> Result<Self, LexiconError> {
        let overrides = parse_suffixes(overrides_tsv, "overrides")?;
        let mut suffixes = self.suffixes.clone();
        for o in overrides {
            match suffixes.iter_mut().find(|s| s.tag == o.tag) {
                Some(s) => *s = o,
                None => suffixes.push(o),
            }
        }
        Ok(Self::from_parts(self.roots.clone(), suffixes))
    }

    pub fn roots(&self) -> &[LexEntry] {
        &self.roots
    }

    pub fn root_ids(&self) -> impl Iterator<Item = RootId> {
        (0..self.roots.len()).map(RootId)
    }

    pub fn root(&self, id: RootId) -> &LexEntry {
        &self.roots[id.0]
    }

    pub fn suffixes(&self) -> &[SuffixEntry] {
        &self.suffixes
    }

    pub fn suffix(&self, tag: &str) -> Option<&SuffixEntry> {
        self.suffix_by_tag.get(bare_tag(tag)).map(|&i| &self.suffixes[i])
    }

    /// Entries spelled `surface`: lemma matches first, then variant matches,
    /// each group in lexicographic order.
    pub fn lookup_root(&self, surface: &str) -> Vec<&LexEntry> {
        self.lookup_ids(surface).into_iter().map(|id| self.root(id)).collect()
    }

    pub fn lookup_ids(&self, surface: &str) -> Vec<RootId> {
        let key = |id: &RootId| {
            let e = self.root(*id);
            (e.lemma.clone(), e.category, e.valency)
        };
        let mut lemma: Vec<RootId> = self.by_lemma.get(surface).cloned().unwrap_or_default();
        lemma.sort_by_key(key);
        let mut variant: Vec<RootId> =
            self.by_variant.get(surface).into_iter().flatten().filter(|id| !lemma.contains(id)).copied().collect();
        variant.sort_by_key(key);
        variant.dedup();
        lemma.extend(variant);
        lemma
    }

    /// The entry a generation request names. Labile roots answer to either
    /// verbal category.
    pub fn find_root(&self, lemma: &str, category: LexCategory) -> Option<RootId> {
        let ids = self.by_lemma.get(lemma)?;
        ids.iter().copied().find(|id| self.root(*id).category == category).or_else(|| {
            ids.iter().copied().find(|id| {
                let e = self.root(*id);
                e.is_labile() && category.is_verbal()
            })
        })
    }

    pub fn to_roots_tsv(&self) -> String {
        tsv::write_roots(&self.roots)
    }

    pub fn to_suffixes_tsv(&self) -> String {
        tsv::write_suffixes(&self.suffixes)
    }
}

/// Reads, parses and validates the two lexicon files.
pub fn load_lexicon(root_file: &Path, suffix_file: &Path) -> Result<Lexicon, LexiconError> {
    let read =
        |p: &Path| std::fs::read_to_string(p).map_err(|source| LexiconError::Io { path: p.to_path_buf(), source });
    let roots_text = read(root_file)?;
    let suffix_text = read(suffix_file)?;
    let roots = parse_roots(&roots_text).map_err(|e| e.in_file(root_file))?;
    let suffixes = parse_suffixes(&suffix_text, "suffixes.tsv").map_err(|e| e.in_file(suffix_file))?;
    Lexicon::checked(roots, suffixes)
}
