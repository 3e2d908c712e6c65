//! The slot template and co-occurrence constraints on suffix sequences.
//!
//! Suffixes sit in slots numbered from the word end: slot 1 is word-final and
//! slot 36 abuts the root. A sequence written root-side first must therefore
//! have strictly decreasing slots. A finite form needs one mood suffix in
//! slot 4 and one person morpheme (possibly null) in slot 3. Causatives only
//! attach to intransitive themes.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::MorphError;
use crate::lexicon::{
    gloss_label, Constraint, LexEntry, Lexicon, Reading, SuffixEntry, ValencyEffect, MOOD_CLASS, MOOD_SLOT,
    PERSON_CLASS, PERSON_SLOT,
};

/// A suffix realized in a form. `allomorph` is the surface string, empty for
/// a null morpheme.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Morpheme {
    pub tag: String,
    pub allomorph: String,
    pub slot: u8,
}

impl Morpheme {
    pub fn new(tag: &str, allomorph: &str, slot: u8) -> Self {
        Morpheme { tag: tag.to_string(), allomorph: allomorph.to_string(), slot }
    }

    pub fn is_null(&self) -> bool {
        self.allomorph.is_empty()
    }
}

/// Suffixes in surface order, root side first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct MorphemeSeq {
    pub items: Vec<Morpheme>,
}

impl MorphemeSeq {
    pub fn new(items: Vec<Morpheme>) -> Self {
        MorphemeSeq { items }
    }

    pub fn tags(&self) -> Vec<&str> {
        self.items.iter().map(|m| m.tag.as_str()).collect()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Morpheme> {
        self.items.iter()
    }

    /// The innermost suffix with surface material.
    pub fn first_overt(&self) -> Option<&Morpheme> {
        self.items.iter().find(|m| !m.is_null())
    }
}

/// A broken morphotactic rule.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Violation {
    /// `outer` (slot `outer_slot`) follows `inner` but its slot is not lower.
    SlotOrder {
        inner: String,
        outer: String,
    },
    /// Two suffixes of one exclusion class.
    Exclusion {
        class: String,
        tags: Vec<String>,
    },
    MultipleMoods,
    NonFinite,
    MissingPerson,
    MultiplePersons,
    /// A suffix's co-occurrence condition failed.
    Cooccurrence {
        tag: String,
        condition: String,
    },
    /// A causative attached to a transitive theme.
    CausativeOnTransitive {
        tag: String,
    },
    /// A non-verbal root followed by verbal suffixes without a verbalizer.
    MissingVerbalizer,
    /// A verbalizer where none is needed.
    RedundantVerbalizer,
    VerbalizerOnVerbalRoot,
    /// The requested valency reading is not one of the root's.
    ReadingMismatch,
}

impl Violation {
    /// Stable kebab-case code.
    pub fn code(&self) -> &'static str {
        match self {
            Violation::SlotOrder { .. } => "slot-order",
            Violation::Exclusion { .. } => "exclusion",
            Violation::MultipleMoods => "multiple-moods",
            Violation::NonFinite => "non-finite",
            Violation::MissingPerson => "missing-person",
            Violation::MultiplePersons => "multiple-persons",
            Violation::Cooccurrence { .. } => "cooccurrence",
            Violation::CausativeOnTransitive { .. } => "causative-on-transitive",
            Violation::MissingVerbalizer => "missing-verbalizer",
            Violation::RedundantVerbalizer => "redundant-verbalizer",
            Violation::VerbalizerOnVerbalRoot => "verbalizer-on-verbal-root",
            Violation::ReadingMismatch => "reading-mismatch",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SlotOrder { inner, outer } => {
                write!(f, "slot-order: {outer} cannot follow {inner}")
            }
            Violation::Exclusion { class, tags } => {
                write!(f, "exclusion: {} share class {class}", tags.join(", "))
            }
            Violation::Cooccurrence { tag, condition } => {
                write!(f, "cooccurrence: {tag} needs {condition}")
            }
            Violation::CausativeOnTransitive { tag } => {
                write!(f, "causative-on-transitive: {tag} does not attach to transitive themes")
            }
            other => f.write_str(other.code()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct TableEntry {
    slot: u8,
    classes: Vec<String>,
    valency_effect: ValencyEffect,
    constraints: Vec<Constraint>,
    has_null: bool,
}

/// Slot assignments, exclusion classes and finiteness requirements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphotacticTable {
    entries: HashMap<String, TableEntry>,
    exclusion: BTreeMap<String, BTreeSet<String>>,
}

impl MorphotacticTable {
    /// Slot of the mood suffix and of the person morpheme in finite forms.
    pub const FINITE_REQUIREMENTS: (u8, u8) = (MOOD_SLOT, PERSON_SLOT);

    pub fn from_suffixes(suffixes: &[SuffixEntry]) -> Self {
        let mut entries = HashMap::new();
        let mut exclusion: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
        for s in suffixes {
            if entries.contains_key(&s.tag) {
                continue;
            }
            for c in &s.excl_classes {
                exclusion.entry(c.clone()).or_default().insert(s.tag.clone());
            }
            entries.insert(
                s.tag.clone(),
                TableEntry {
                    slot: s.slot,
                    classes: s.excl_classes.clone(),
                    valency_effect: s.valency_effect,
                    constraints: s.constraints.clone(),
                    has_null: s.null_allomorph().is_some(),
                },
            );
        }
        MorphotacticTable { entries, exclusion }
    }

    pub fn from_lexicon(lex: &Lexicon) -> Self {
        Self::from_suffixes(lex.suffixes())
    }

    pub fn slot_of(&self, tag: &str) -> Option<u8> {
        self.entries.get(tag).map(|e| e.slot)
    }

    pub fn contains(&self, tag: &str) -> bool {
        self.entries.contains_key(tag)
    }

    /// Tags in an exclusion class.
    pub fn exclusion(&self, class: &str) -> Option<&BTreeSet<String>> {
        self.exclusion.get(class)
    }

    fn in_class(&self, tag: &str, class: &str) -> bool {
        self.entries.get(tag).is_some_and(|e| e.classes.iter().any(|c| c == class))
    }

    pub fn is_mood(&self, tag: &str) -> bool {
        self.in_class(tag, MOOD_CLASS)
    }

    pub fn is_person(&self, tag: &str) -> bool {
        self.in_class(tag, PERSON_CLASS)
    }

    pub fn is_verbalizer(&self, tag: &str) -> bool {
        self.in_class(tag, crate::lexicon::VERBALIZER_CLASS)
    }

    pub fn is_causative(&self, tag: &str) -> bool {
        self.valency_effect(tag) == Some(ValencyEffect::RequiresIntransitiveBase)
    }

    pub fn valency_effect(&self, tag: &str) -> Option<ValencyEffect> {
        self.entries.get(tag).map(|e| e.valency_effect)
    }

    pub fn attaches_to_any_root(&self, tag: &str) -> bool {
        self.entries.get(tag).is_some_and(|e| e.constraints.contains(&Constraint::AnyRoot))
    }

    /// Person tags with a null allomorph; candidates for null insertion.
    pub fn null_persons(&self) -> Vec<&str> {
        self.null_in_class(PERSON_CLASS)
    }

    /// Verbalizer tags with a null allomorph.
    pub fn null_verbalizers(&self) -> Vec<&str> {
        self.null_in_class(crate::lexicon::VERBALIZER_CLASS)
    }

    fn null_in_class(&self, class: &str) -> Vec<&str> {
        let mut tags: Vec<&str> = self
            .exclusion
            .get(class)
            .into_iter()
            .flatten()
            .filter(|t| self.entries[t.as_str()].has_null)
            .map(String::as_str)
            .collect();
        tags.sort_by_key(|t| (self.entries[*t].slot, t.to_string()));
        tags
    }

    /// Whether the sequence carries mood or person marking and so must
    /// satisfy [`check_finite`].
    pub fn claims_finiteness(&self, seq: &MorphemeSeq) -> bool {
        seq.iter().any(|m| self.is_mood(&m.tag) || self.is_person(&m.tag))
    }
}

fn tag_matches(morpheme_tag: &str, wanted: &str) -> bool {
    morpheme_tag == wanted || gloss_label(morpheme_tag) == wanted
}

/// Slot order, exclusion classes (at most one mood among them) and
/// co-occurrence conditions. An empty list means the sequence is well formed.
pub fn check_sequence(table: &MorphotacticTable, seq: &MorphemeSeq) -> Result<Vec<Violation>, MorphError> {
    let mut entries = Vec::with_capacity(seq.len());
    for m in seq.iter() {
        let e = table.entries.get(&m.tag).ok_or_else(|| MorphError::UnknownTag(m.tag.clone()))?;
        entries.push(e);
    }

    let mut out = Vec::new();
    for (i, pair) in entries.windows(2).enumerate() {
        if pair[1].slot >= pair[0].slot {
            out.push(Violation::SlotOrder { inner: seq.items[i].tag.clone(), outer: seq.items[i + 1].tag.clone() });
        }
    }

    let mut by_class: BTreeMap<&str, Vec<String>> = BTreeMap::new();
    for (m, e) in seq.iter().zip(&entries) {
        for c in &e.classes {
            by_class.entry(c.as_str()).or_default().push(m.tag.clone());
        }
    }
    for (class, tags) in by_class {
        if tags.len() > 1 {
            if class == MOOD_CLASS {
                out.push(Violation::MultipleMoods);
            } else {
                out.push(Violation::Exclusion { class: class.to_string(), tags });
            }
        }
    }

    for (m, e) in seq.iter().zip(&entries) {
        for c in &e.constraints {
            let satisfied = match c {
                Constraint::RequiresAny(wanted) => seq.iter().any(|o| wanted.iter().any(|w| tag_matches(&o.tag, w))),
                Constraint::Forbids(tag) => !seq.iter().any(|o| tag_matches(&o.tag, tag)),
                Constraint::AnyRoot => true,
            };
            if !satisfied {
                out.push(Violation::Cooccurrence { tag: m.tag.clone(), condition: c.to_string() });
            }
        }
    }
    Ok(out)
}

/// Exactly one mood suffix and exactly one person morpheme. Portmanteau
/// suffixes (IND1SG, IMP2SG) count as both.
pub fn check_finite(table: &MorphotacticTable, seq: &MorphemeSeq) -> Result<(), Violation> {
    let moods = seq.iter().filter(|m| table.is_mood(&m.tag)).count();
    let persons = seq.iter().filter(|m| table.is_person(&m.tag)).count();
    match (moods, persons) {
        (0, _) => Err(Violation::NonFinite),
        (m, _) if m > 1 => Err(Violation::MultipleMoods),
        (_, 0) => Err(Violation::MissingPerson),
        (_, p) if p > 1 => Err(Violation::MultiplePersons),
        _ => Ok(()),
    }
}

/// Causatives require an intransitive theme at the point they attach. The
/// theme's valency starts as the root reading (non-verbal roots count as
/// intransitive once used verbally) and is updated by each suffix's valency
/// effect in turn.
pub fn check_causative(
    table: &MorphotacticTable,
    entry: &LexEntry,
    reading: Option<Reading>,
    seq: &MorphemeSeq,
) -> Result<(), Violation> {
    let mut current =
        if entry.is_verbal() { reading.ok_or(Violation::ReadingMismatch)? } else { Reading::Intransitive };
    for m in seq.iter() {
        match table.valency_effect(&m.tag) {
            Some(ValencyEffect::RequiresIntransitiveBase) => {
                if current != Reading::Intransitive {
                    return Err(Violation::CausativeOnTransitive { tag: m.tag.clone() });
                }
                current = Reading::Transitive;
            }
            Some(ValencyEffect::Transitivizes) => current = Reading::Transitive,
            Some(ValencyEffect::Detransitivizes) => current = Reading::Intransitive,
            _ => {}
        }
    }
    Ok(())
}

/// Readings of `entry` under which `seq` passes [`check_causative`]. A labile
/// root followed by a causative keeps only its intransitive reading.
pub fn admissible_readings(table: &MorphotacticTable, entry: &LexEntry, seq: &MorphemeSeq) -> Vec<Option<Reading>> {
    entry.readings().into_iter().filter(|r| check_causative(table, entry, *r, seq).is_ok()).collect()
}

/// Verbalization licensing. A non-verbal root followed by suffixes needs a
/// verbalizer unless its innermost suffix attaches to any root; a null
/// verbalizer must be followed by such a suffix-needing sequence. Verbal roots
/// take no verbalizer.
pub fn check_theme(table: &MorphotacticTable, entry: &LexEntry, seq: &MorphemeSeq) -> Result<(), Violation> {
    let has_vrb = seq.iter().any(|m| table.is_verbalizer(&m.tag));
    if entry.is_verbal() {
        return if has_vrb { Err(Violation::VerbalizerOnVerbalRoot) } else { Ok(()) };
    }
    let Some(first) = seq.items.first() else {
        return Ok(());
    };
    if table.is_verbalizer(&first.tag) {
        if first.is_null() {
            match seq.items.get(1) {
                None => return Err(Violation::RedundantVerbalizer),
                Some(next) if table.attaches_to_any_root(&next.tag) => return Err(Violation::RedundantVerbalizer),
                Some(_) => {}
            }
        }
        return Ok(());
    }
    if table.attaches_to_any_root(&first.tag) {
        Ok(())
    } else {
        Err(Violation::MissingVerbalizer)
    }
}

/// Every check an analysis must pass: sequence well-formedness, theme
/// licensing, finiteness when mood or person is marked, and causative
/// valency for the given reading.
pub fn check_all(
    table: &MorphotacticTable,
    entry: &LexEntry,
    reading: Option<Reading>,
    seq: &MorphemeSeq,
) -> Result<Vec<Violation>, MorphError> {
    let mut out = check_sequence(table, seq)?;
    if let Err(v) = check_theme(table, entry, seq) {
        out.push(v);
    }
    if table.claims_finiteness(seq) {
        if let Err(v) = check_finite(table, seq) {
            if !out.contains(&v) {
                out.push(v);
            }
        }
    }
    if let Err(v) = check_causative(table, entry, reading, seq) {
        out.push(v);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::LexCategory;

    fn table() -> MorphotacticTable {
        MorphotacticTable::from_lexicon(&Lexicon::shipped())
    }

    fn seq(items: &[(&str, &str)]) -> MorphemeSeq {
        let t = table();
        MorphemeSeq::new(items.iter().map(|(tag, a)| Morpheme::new(tag, a, t.slot_of(tag).unwrap())).collect())
    }

    fn e01() -> MorphemeSeq {
        seq(&[
            ("PRPS", "nie"),
            ("IO", "ñma"),
            ("ITR", "r"),
            ("LOC", "pu"),
            ("RE", "tu"),
            ("INV", "e"),
            ("IND", "y"),
            ("1", ""),
            ("PL", "iñ"),
            ("3A", "mu"),
        ])
    }

    #[test]
    fn e01_slots_follow_figure_counting() {
        let t = table();
        let slots: Vec<u8> = ["PRPS", "IO", "ITR", "LOC", "RE", "INV", "IND", "1", "PL", "3A"]
            .iter()
            .map(|tag| t.slot_of(tag).unwrap())
            .collect();
        assert_eq!(slots, [32, 26, 18, 17, 16, 6, 4, 3, 2, 1]);
    }

    #[test]
    fn e01_sequence_is_well_formed() {
        assert_eq!(check_sequence(&table(), &e01()).unwrap(), vec![]);
        assert_eq!(check_finite(&table(), &e01()), Ok(()));
    }

    #[test]
    fn reversed_order_is_rejected() {
        let v = check_sequence(&table(), &seq(&[("IND", "y"), ("PRPS", "nie")])).unwrap();
        assert_eq!(v.iter().map(Violation::code).collect::<Vec<_>>(), ["slot-order"]);
    }

    #[test]
    fn empty_sequence_is_ordered_but_not_finite() {
        let empty = MorphemeSeq::default();
        assert_eq!(check_sequence(&table(), &empty).unwrap(), vec![]);
        assert_eq!(check_finite(&table(), &empty), Err(Violation::NonFinite));
    }

    #[test]
    fn unknown_tag_is_an_error() {
        let s = MorphemeSeq::new(vec![Morpheme::new("XYZ", "x", 5)]);
        assert_eq!(check_sequence(&table(), &s), Err(MorphError::UnknownTag("XYZ".into())));
    }

    #[test]
    fn finiteness_examples() {
        let t = table();
        assert_eq!(check_finite(&t, &seq(&[("IND", "y"), ("3", "")])), Ok(()));
        assert_eq!(check_finite(&t, &seq(&[("CA-l", "l")])), Err(Violation::NonFinite));
        assert_eq!(
            check_finite(&t, &seq(&[("IND", "y"), ("3", ""), ("IMP2SG", "nge")])),
            Err(Violation::MultipleMoods)
        );
        assert_eq!(check_finite(&t, &seq(&[("CA-l", "l"), ("IND1SG", "ün")])), Ok(()));
        assert_eq!(check_finite(&t, &seq(&[("IND", "y")])), Err(Violation::MissingPerson));
    }

    #[test]
    fn two_moods_in_one_sequence() {
        let v = check_sequence(&table(), &seq(&[("IND", "y"), ("IMP2SG", "nge")])).unwrap();
        assert!(v.contains(&Violation::MultipleMoods));
    }

    #[test]
    fn null_person_cooccurrence() {
        let t = table();
        let first_without_plural = seq(&[("IND", "y"), ("1", "")]);
        assert_eq!(
            check_sequence(&t, &first_without_plural).unwrap(),
            vec![Violation::Cooccurrence { tag: "1".into(), condition: "PL".into() }]
        );
        let third_with_plural = seq(&[("IND", "y"), ("3", ""), ("PL", "iñ")]);
        assert_eq!(check_sequence(&t, &third_with_plural).unwrap().len(), 1);
    }

    #[test]
    fn causative_examples() {
        let t = table();
        let lex = Lexicon::shipped();
        let ca_m = seq(&[("CA-m", "m")]);
        let ca_l = seq(&[("CA-l", "l")]);

        let nu = lex.lookup_root("nü")[0];
        assert_eq!(
            check_causative(&t, nu, Some(Reading::Transitive), &ca_m),
            Err(Violation::CausativeOnTransitive { tag: "CA-m".into() })
        );

        let monge = lex.lookup_root("monge")[0];
        assert_eq!(admissible_readings(&t, monge, &ca_l), vec![Some(Reading::Intransitive)]);
        assert_eq!(monge.gloss(Some(Reading::Intransitive)), monge.gloss_iv.as_deref());

        let aku = lex.lookup_root("aku")[0];
        assert_eq!(check_causative(&t, aku, Some(Reading::Intransitive), &ca_l), Ok(()));
    }

    #[test]
    fn verbalized_nonverbal_root_counts_as_intransitive() {
        let t = table();
        let la = LexEntry::new("la", LexCategory::Aj);
        assert_eq!(check_causative(&t, &la, None, &seq(&[("VRB", ""), ("CA-m", "m")])), Ok(()));
    }

    #[test]
    fn theme_licensing() {
        let t = table();
        let la = LexEntry::new("la", LexCategory::Aj);
        let tripa = LexEntry::new("tripa", LexCategory::VI);
        assert_eq!(check_theme(&t, &la, &seq(&[("CA-m", "m")])), Err(Violation::MissingVerbalizer));
        assert_eq!(check_theme(&t, &la, &seq(&[("VRB", ""), ("CA-m", "m")])), Ok(()));
        assert_eq!(check_theme(&t, &la, &seq(&[("VRB", "")])), Err(Violation::RedundantVerbalizer));
        assert_eq!(check_theme(&t, &la, &seq(&[("CONT", "ka")])), Ok(()));
        assert_eq!(check_theme(&t, &la, &seq(&[("VRB", ""), ("CONT", "ka")])), Err(Violation::RedundantVerbalizer));
        assert_eq!(check_theme(&t, &tripa, &seq(&[("VRB", ""), ("IND", "y")])), Err(Violation::VerbalizerOnVerbalRoot));
        assert_eq!(check_theme(&t, &la, &MorphemeSeq::default()), Ok(()));
    }
}
