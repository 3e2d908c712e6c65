//! Junction phenomena at morpheme boundaries.
//!
//! Two processes are modelled. Allomorphs written `(ü)X` take an epenthetic
//! ü after a consonant-final left side and attach directly after a vowel.
//! Lexical alternants change a root's stem before a trigger suffix
//! (la → lang, nel → nel ~ nelk, lüf → lüp). Nothing else is rewritten.

use crate::lexicon::{Allomorph, Alternants, LexEntry, SuffixEntry};
use crate::text::{ends_in_consonant, ends_in_vowel};

/// Surface realization of `allomorph` after `left`.
pub fn realize(left: &str, allomorph: &Allomorph) -> String {
    if allomorph.epenthetic && ends_in_consonant(left) {
        format!("{}{}", Allomorph::EPENTHETIC_VOWEL, allomorph.core)
    } else {
        allomorph.core.clone()
    }
}

/// `left` followed by `allomorph`, with epenthesis where it applies.
pub fn junction(left: &str, allomorph: &Allomorph) -> String {
    let mut out = String::with_capacity(left.len() + allomorph.core.len() + 2);
    out.push_str(left);
    out.push_str(&realize(left, allomorph));
    out
}

fn push_unique(out: &mut Vec<String>, s: String) {
    if !out.contains(&s) {
        out.push(s);
    }
}

/// Stems a spelling takes before `trigger` under `alternants`, canonical first.
pub fn stems_before(spelling: &str, trigger: Option<&str>, alternants: &Alternants) -> Vec<String> {
    match trigger.and_then(|t| alternants.get(t)) {
        Some(rule) => rule.apply(spelling),
        None => vec![spelling.to_string()],
    }
}

/// Every stem `entry` can surface as when its first overt suffix is
/// `first_overt` (`None` for a bare root or only null suffixes). Lemma stems
/// come first; spelling variants only undergo ending rewrites.
pub fn entry_stems(entry: &LexEntry, first_overt: Option<&str>) -> Vec<String> {
    let mut out = stems_before(&entry.lemma, first_overt, &entry.alternants);
    if !entry.variants.is_empty() {
        let endings = entry.alternants.endings_only();
        for v in &entry.variants {
            for s in stems_before(v, first_overt, &endings) {
                push_unique(&mut out, s);
            }
        }
    }
    out
}

/// Every stem form any root can take before any suffix; the analyzer's
/// stem index.
pub fn root_stems(entry: &LexEntry) -> Vec<String> {
    let mut out = entry_stems(entry, None);
    for (trigger, _) in entry.alternants.iter() {
        for s in entry_stems(entry, Some(trigger)) {
            push_unique(&mut out, s);
        }
    }
    out
}

/// All surfaces of `stem` followed by `suffix`: the stem alternant for the
/// suffix is applied first, then each allomorph is joined. Canonical variant
/// first, no duplicates.
pub fn join(stem: &str, suffix: &SuffixEntry, alternants: &Alternants) -> Vec<String> {
    let mut out = Vec::new();
    for s in stems_before(stem, Some(&suffix.tag), alternants) {
        for a in &suffix.allomorphs {
            push_unique(&mut out, junction(&s, a));
        }
    }
    out
}

/// Candidate left sides of `surface` if it ends in `allomorph`.
fn strip(surface: &str, allomorph: &Allomorph) -> Vec<String> {
    let Some(base) = surface.strip_suffix(allomorph.core.as_str()) else {
        return Vec::new();
    };
    if allomorph.is_null() {
        return vec![surface.to_string()];
    }
    let mut out = Vec::new();
    if allomorph.epenthetic {
        if let Some(before) = base.strip_suffix(Allomorph::EPENTHETIC_VOWEL) {
            if ends_in_consonant(before) {
                out.push(before.to_string());
            }
        }
        if ends_in_vowel(base) {
            out.push(base.to_string());
        }
    } else if !base.is_empty() {
        out.push(base.to_string());
    }
    out
}

/// Inverse of [`join`]: every stem `s` with `surface ∈ join(s, suffix, alts)`
/// for an entry of `known`, plus the plain junction inverses. `known` pairs
/// stems with the alternants they carry; alternation-reversed candidates are
/// taken from it. Over-generates by design.
pub fn split(surface: &str, suffix: &SuffixEntry, known: &[(&str, &Alternants)]) -> Vec<String> {
    let mut out = Vec::new();
    for a in &suffix.allomorphs {
        for left in strip(surface, a) {
            push_unique(&mut out, left.clone());
            for (stem, alts) in known {
                if let Some(rule) = alts.get(&suffix.tag) {
                    if *stem != left && rule.apply(stem).contains(&left) {
                        push_unique(&mut out, stem.to_string());
                    }
                }
            }
        }
    }
    out
}
