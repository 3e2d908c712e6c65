use std::collections::{HashMap, HashSet};
use std::fmt;

use super::{
    Constraint, LexCategory, LexEntry, Lexicon, StemRule, SuffixEntry, Valency, MAX_SLOT, MOOD_SLOT, PERSON_CLASS,
    PERSON_SLOT, VERBALIZER_CLASS,
};
use crate::text::first_foreign_char;

/// One invariant violation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    /// Stable kebab-case code, e.g. `duplicate-entry`.
    pub code: &'static str,
    /// The offending entry (`la (Aj)` or `suffix IND`).
    pub subject: String,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}: {}", self.code, self.subject, self.message)
    }
}

fn diag(code: &'static str, subject: &str, message: impl Into<String>) -> Diagnostic {
    Diagnostic { code, subject: subject.to_string(), message: message.into() }
}

fn root_subject(e: &LexEntry) -> String {
    format!("{} ({})", e.lemma, e.category)
}

/// Every invariant violation in `lex`; empty iff the lexicon is valid.
pub fn validate_lexicon(lex: &Lexicon) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let known_tags: HashSet<&str> = lex.suffixes().iter().map(|s| s.tag.as_str()).collect();

    let mut seen: HashMap<(&str, LexCategory, Option<Valency>), usize> = HashMap::new();
    for e in lex.roots() {
        check_root(e, &known_tags, &mut out);
        let key = (e.lemma.as_str(), e.category, e.valency);
        *seen.entry(key).or_default() += 1;
        if seen[&key] == 2 {
            out.push(diag(
                "duplicate-entry",
                &root_subject(e),
                "another entry has the same lemma, category and valency",
            ));
        }
    }

    let mut tags = HashSet::new();
    for s in lex.suffixes() {
        if !tags.insert(s.tag.as_str()) {
            out.push(diag("duplicate-suffix-tag", &format!("suffix {}", s.tag), "tag defined twice"));
        }
        check_suffix(s, &known_tags, &mut out);
    }
    out
}

fn check_root(e: &LexEntry, known_tags: &HashSet<&str>, out: &mut Vec<Diagnostic>) {
    let subject = root_subject(e);
    if e.lemma.is_empty() {
        out.push(diag("empty-lemma", &subject, "lemma is empty"));
    }
    for form in e.spellings() {
        if let Some(c) = first_foreign_char(form) {
            out.push(diag("bad-alphabet", &subject, format!("{form:?} contains {c:?}")));
        }
    }
    if e.variants.contains(&e.lemma) {
        out.push(diag("variant-same-as-lemma", &subject, "a variant repeats the lemma"));
    }

    match (e.category.is_verbal(), e.valency) {
        (false, Some(v)) => {
            out.push(diag("valency-on-nonverbal", &subject, format!("non-verbal root carries valency {}", v.code())))
        }
        (true, None) => out.push(diag("missing-valency", &subject, "verbal root without valency")),
        (true, Some(Valency::Intransitive)) if e.category == LexCategory::VT => {
            out.push(diag("valency-category-mismatch", &subject, "VT root marked intransitive"))
        }
        (true, Some(Valency::Transitive)) if e.category == LexCategory::VI => {
            out.push(diag("valency-category-mismatch", &subject, "VI root marked transitive"))
        }
        _ => {}
    }
    if e.is_labile() {
        if e.gloss_iv.is_none() {
            out.push(diag("labile-missing-intransitive-gloss", &subject, "labile root needs gloss_iv"));
        }
        if e.gloss_tv.is_none() {
            out.push(diag("labile-missing-transitive-gloss", &subject, "labile root needs gloss_tv"));
        }
    }

    for (trigger, rule) in e.alternants.iter() {
        if !known_tags.contains(trigger) {
            out.push(diag(
                "alternant-unknown-trigger",
                &subject,
                format!("alternant trigger {trigger:?} is not a suffix tag"),
            ));
        }
        match rule {
            StemRule::Replace(s) | StemRule::AddVariant(s) => {
                if s.is_empty() {
                    out.push(diag("alternant-empty-stem", &subject, "alternant stem is empty"));
                } else if *s == e.lemma {
                    out.push(diag("alternant-same-as-lemma", &subject, "alternant stem equals the lemma"));
                } else if let Some(c) = first_foreign_char(s) {
                    out.push(diag("bad-alphabet", &subject, format!("alternant {s:?} contains {c:?}")));
                }
            }
            StemRule::Ending { from, to } => {
                if from.is_empty() || to.is_empty() || from == to {
                    out.push(diag("alternant-empty-stem", &subject, "ending rewrite must change a non-empty ending"));
                } else if !e.spellings().any(|s| s.ends_with(from.as_str()) && s.len() > from.len()) {
                    out.push(diag(
                        "alternant-same-as-lemma",
                        &subject,
                        format!("ending rewrite -{from} never applies to this root"),
                    ));
                }
            }
        }
    }
}

fn check_suffix(s: &SuffixEntry, known_tags: &HashSet<&str>, out: &mut Vec<Diagnostic>) {
    let subject = format!("suffix {}", s.tag);
    if !(1..=MAX_SLOT).contains(&s.slot) {
        out.push(diag("slot-out-of-range", &subject, format!("slot {} outside 1..=36", s.slot)));
    }
    if s.allomorphs.is_empty() {
        out.push(diag("no-allomorphs", &subject, "suffix has no allomorphs"));
    }
    for a in &s.allomorphs {
        if let Some(c) = first_foreign_char(&a.core) {
            out.push(diag("bad-alphabet", &subject, format!("allomorph {a} contains {c:?}")));
        }
    }
    let null_licensed = s.in_class(PERSON_CLASS) || s.in_class(VERBALIZER_CLASS);
    if s.null_allomorph().is_some() && !null_licensed {
        out.push(diag(
            "null-allomorph-not-licensed",
            &subject,
            "null allomorphs are only allowed for person and verbalizer suffixes",
        ));
    }
    if s.is_mood() && s.slot != MOOD_SLOT {
        out.push(diag("mood-slot", &subject, format!("mood suffix in slot {} instead of 4", s.slot)));
    }
    if s.is_person() && !s.is_mood() && s.slot != PERSON_SLOT {
        out.push(diag("person-slot", &subject, format!("person suffix in slot {} instead of 3", s.slot)));
    }
    for c in &s.constraints {
        let tags: Vec<&str> = match c {
            Constraint::RequiresAny(tags) => tags.iter().map(String::as_str).collect(),
            Constraint::Forbids(tag) => vec![tag.as_str()],
            Constraint::AnyRoot => vec![],
        };
        for t in tags {
            if !known_tags.contains(t) {
                out.push(diag("unknown-constraint-tag", &subject, format!("constraint names unknown tag {t:?}")));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::{Allomorph, Alternants};

    fn codes(lex: &Lexicon) -> Vec<&'static str> {
        validate_lexicon(lex).into_iter().map(|d| d.code).collect()
    }

    #[test]
    fn shipped_lexicon_is_clean() {
        let lex = Lexicon::shipped();
        assert_eq!(validate_lexicon(&lex), vec![]);
    }

    #[test]
    fn labile_without_transitive_gloss() {
        let mut e = LexEntry::labile("monge", "to live", "to revive");
        e.gloss_tv = None;
        let lex = Lexicon::from_parts(vec![e], vec![]);
        assert_eq!(codes(&lex), ["labile-missing-transitive-gloss"]);
    }

    #[test]
    fn slot_zero_is_out_of_range() {
        let s = SuffixEntry::new("X", vec![Allomorph::plain("ka")], 0, "x");
        let lex = Lexicon::from_parts(vec![], vec![s]);
        assert_eq!(codes(&lex), ["slot-out-of-range"]);
    }

    #[test]
    fn duplicate_entries() {
        let e = LexEntry::new("tripa", LexCategory::VI);
        let homograph = LexEntry::new("tripa", LexCategory::N);
        let lex = Lexicon::from_parts(vec![e.clone(), homograph, e], vec![]);
        assert_eq!(codes(&lex), ["duplicate-entry"]);
    }

    #[test]
    fn alternant_checks() {
        let ca = SuffixEntry::new("CA-m", vec![Allomorph::epenthetic("m")], 34, "causative");
        let mut same = LexEntry::new("la", LexCategory::Aj);
        same.alternants = Alternants::new().with("CA-m", StemRule::Replace("la".into()));
        let mut unknown = LexEntry::new("nel", LexCategory::Aj);
        unknown.alternants = Alternants::new().with("CA-x", StemRule::AddVariant("nelk".into()));
        let lex = Lexicon::from_parts(vec![same, unknown], vec![ca]);
        assert_eq!(codes(&lex), ["alternant-same-as-lemma", "alternant-unknown-trigger"]);
    }

    #[test]
    fn null_allomorph_outside_person_and_verbalizer() {
        let s = SuffixEntry::new("IO", vec![Allomorph::null()], 26, "indirect-object");
        let lex = Lexicon::from_parts(vec![], vec![s]);
        assert_eq!(codes(&lex), ["null-allomorph-not-licensed"]);
    }

    #[test]
    fn mood_outside_slot_four() {
        let s = SuffixEntry::new("IND", vec![Allomorph::plain("y")], 5, "mood");
        let lex = Lexicon::from_parts(vec![], vec![s]);
        assert_eq!(codes(&lex), ["mood-slot"]);
    }
}
