//! Shared test helpers: an exhaustive left-to-right segmenter used as an
//! oracle for the analyzer, and random sub-lexicon construction.

#![allow(dead_code)]

use std::collections::BTreeSet;

use mapumorph::lexicon::{Allomorph, Alternants, StemRule};
use mapumorph::morphotactics::check_all;
use mapumorph::{
    Analyzer, GenRequest, LexCategory, LexEntry, Lexicon, Morpheme, MorphemeSeq, MorphotacticTable, Reading, RootId,
    SuffixEntry,
};
use rand::seq::SliceRandom;
use rand::Rng;

/// Identity of one analysis, comparable across implementations.
pub type Key = (usize, Option<Reading>, String, Vec<(String, String)>);

fn key(root: RootId, reading: Option<Reading>, stem: &str, seq: &MorphemeSeq) -> Key {
    (root.0, reading, stem.to_string(), seq.iter().map(|m| (m.tag.clone(), m.allomorph.clone())).collect())
}

pub fn analyzer_keys(analyzer: &Analyzer<'_>, word: &str) -> BTreeSet<Key> {
    match analyzer.analyze(word) {
        Ok(set) => set.analyses.iter().map(|a| key(a.root, a.reading, &a.stem, &a.morphemes)).collect(),
        Err(_) => BTreeSet::new(),
    }
}

const VOWELS: &str = "aeiouü";

fn vowel_final(s: &str) -> bool {
    s.chars().last().is_some_and(|c| VOWELS.contains(c))
}

/// Stems of `entry` before a first overt suffix `tag`, computed directly
/// from the entry's fields.
fn stems(entry: &LexEntry, tag: Option<&str>) -> Vec<String> {
    let rule = tag.and_then(|t| entry.alternants.get(t));
    let mut out: Vec<String> = match rule {
        Some(StemRule::Replace(s)) => vec![s.clone()],
        Some(StemRule::AddVariant(s)) => vec![entry.lemma.clone(), s.clone()],
        Some(StemRule::Ending { from, to }) => match entry.lemma.strip_suffix(from.as_str()) {
            Some(b) => vec![format!("{b}{to}")],
            None => vec![entry.lemma.clone()],
        },
        None => vec![entry.lemma.clone()],
    };
    for v in &entry.variants {
        let s = match rule {
            Some(StemRule::Ending { from, to }) => match v.strip_suffix(from.as_str()) {
                Some(b) => format!("{b}{to}"),
                None => v.clone(),
            },
            _ => v.clone(),
        };
        out.push(s);
    }
    out
}

/// Every way to read `rest` as suffixes with strictly falling slots after
/// `left`. Realizations are checked against the epenthesis rule as they are
/// built.
fn segment(
    suffixes: &[SuffixEntry],
    left: &str,
    rest: &str,
    below: u8,
    acc: &mut Vec<Morpheme>,
    out: &mut Vec<Vec<Morpheme>>,
) {
    if rest.is_empty() {
        out.push(acc.clone());
    }
    for s in suffixes {
        if s.slot >= below {
            continue;
        }
        for a in &s.allomorphs {
            let realized = if a.is_null() {
                String::new()
            } else if a.epenthetic && !vowel_final(left) {
                format!("ü{}", a.core)
            } else {
                a.core.clone()
            };
            if !rest.starts_with(&realized) {
                continue;
            }
            acc.push(Morpheme::new(&s.tag, &realized, s.slot));
            let next_left = format!("{left}{realized}");
            segment(suffixes, &next_left, &rest[realized.len()..], s.slot, acc, out);
            acc.pop();
        }
    }
}

/// Brute-force analysis: every root, every stem the root can take, every
/// suffix sequence covering the remainder, filtered by all checks.
pub fn oracle_keys(lex: &Lexicon, table: &MorphotacticTable, word: &str) -> BTreeSet<Key> {
    let mut out = BTreeSet::new();
    if word.is_empty() {
        return out;
    }
    let tags: Vec<Option<&str>> =
        std::iter::once(None).chain(lex.suffixes().iter().map(|s| Some(s.tag.as_str()))).collect();
    for id in lex.root_ids() {
        let entry = lex.root(id);
        let mut candidate_stems: BTreeSet<String> = BTreeSet::new();
        for t in &tags {
            candidate_stems.extend(stems(entry, *t));
        }
        for stem in candidate_stems {
            let Some(rest) = word.strip_prefix(stem.as_str()) else { continue };
            if stem.is_empty() {
                continue;
            }
            let mut seqs = Vec::new();
            segment(lex.suffixes(), &stem, rest, u8::MAX, &mut Vec::new(), &mut seqs);
            for items in seqs {
                let seq = MorphemeSeq::new(items);
                let first = seq.items.iter().find(|m| !m.allomorph.is_empty()).map(|m| m.tag.as_str());
                if !stems(entry, first).contains(&stem) {
                    continue;
                }
                for reading in entry.readings() {
                    if matches!(check_all(table, entry, reading, &seq), Ok(v) if v.is_empty()) {
                        out.insert(key(id, reading, &stem, &seq));
                    }
                }
            }
        }
    }
    out
}

/// Random lexicon with at most `max_roots` roots and `max_allomorphs`
/// suffix allomorphs (null ones included). Suffixes are drawn from the
/// shipped inventory, sometimes with a replaced surface; roots mix shipped
/// entries with invented ones that may carry variants and alternants.
pub fn random_sublexicon<R: Rng>(rng: &mut R, max_roots: usize, max_allomorphs: usize) -> Lexicon {
    let shipped = Lexicon::shipped();
    let mut pool: Vec<SuffixEntry> = shipped.suffixes().to_vec();
    pool.shuffle(rng);
    let mut suffixes = Vec::new();
    let mut budget = max_allomorphs;
    for mut s in pool {
        if s.allomorphs.len() > budget || rng.gen_bool(0.4) {
            continue;
        }
        if !s.allomorphs.iter().any(Allomorph::is_null) && rng.gen_bool(0.25) {
            let core = random_syllable(rng, 1, 2);
            s.allomorphs = vec![if rng.gen_bool(0.5) { Allomorph::epenthetic(&core) } else { Allomorph::plain(&core) }];
        }
        budget -= s.allomorphs.len();
        suffixes.push(s);
    }
    suffixes.sort_by_key(|s| std::cmp::Reverse(s.slot));
    let tags: Vec<String> = suffixes.iter().map(|s| s.tag.clone()).collect();

    let n_roots = rng.gen_range(1..=max_roots);
    let mut roots: Vec<LexEntry> = Vec::new();
    while roots.len() < n_roots {
        let entry = if rng.gen_bool(0.5) {
            let e = shipped.roots().choose(rng).unwrap().clone();
            let mut e = e;
            e.alternants = Alternants::new();
            e
        } else {
            invented_root(rng, &tags)
        };
        if roots.iter().any(|r| r.lemma == entry.lemma && r.category == entry.category) {
            continue;
        }
        roots.push(entry);
    }
    Lexicon::from_parts(roots, suffixes)
}

fn random_syllable<R: Rng>(rng: &mut R, min: usize, max: usize) -> String {
    const LETTERS: &[char] = &['a', 'e', 'i', 'u', 'ü', 'n', 'm', 'l', 'k', 'y', 'r', 'p', 'f', 'w'];
    let len = rng.gen_range(min..=max);
    (0..len).map(|_| *LETTERS.choose(rng).unwrap()).collect()
}

fn invented_root<R: Rng>(rng: &mut R, tags: &[String]) -> LexEntry {
    let category =
        *[LexCategory::N, LexCategory::Aj, LexCategory::VI, LexCategory::VT, LexCategory::VI].choose(rng).unwrap();
    let lemma = random_syllable(rng, 1, 4);
    let mut e = if category == LexCategory::VI && rng.gen_bool(0.3) {
        LexEntry::labile(&lemma, "iv", "tv")
    } else {
        LexEntry::new(&lemma, category)
    };
    if rng.gen_bool(0.2) {
        let v = format!("{lemma}{}", random_syllable(rng, 1, 1));
        e.variants.push(v);
    }
    if !tags.is_empty() && rng.gen_bool(0.3) {
        let trigger = tags.choose(rng).unwrap();
        let rule = match rng.gen_range(0..3) {
            0 => StemRule::Replace(format!("{lemma}{}", random_syllable(rng, 1, 1))),
            1 => StemRule::AddVariant(format!("{lemma}k")),
            _ => {
                let last = lemma.chars().last().unwrap().to_string();
                StemRule::Ending { from: last, to: "p".into() }
            }
        };
        e.alternants.insert(trigger, rule);
    }
    e
}

/// Every slot-ordered subset of `tags` with at most `max_len` members.
pub fn tag_subsets(tags: &[String], max_len: usize) -> Vec<Vec<String>> {
    let mut out = vec![Vec::new()];
    for t in tags {
        let grown: Vec<Vec<String>> = out
            .iter()
            .filter(|s| s.len() < max_len)
            .map(|s| {
                let mut s = s.clone();
                s.push(t.clone());
                s
            })
            .collect();
        out.extend(grown);
    }
    out
}

/// Requests for every root of `lex` (each reading of labile roots) and
/// every tag subset up to `max_len`.
pub fn all_requests(lex: &Lexicon, max_len: usize) -> Vec<GenRequest> {
    let tags: Vec<String> = lex.suffixes().iter().map(|s| s.tag.clone()).collect();
    let subsets = tag_subsets(&tags, max_len);
    let mut out = Vec::new();
    for e in lex.roots() {
        for s in &subsets {
            let refs: Vec<&str> = s.iter().map(String::as_str).collect();
            out.push(GenRequest::new(&e.lemma, e.category, &refs));
        }
    }
    out
}
