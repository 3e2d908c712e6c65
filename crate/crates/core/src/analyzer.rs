//! Segmentation of surface forms into root + suffix analyses.
//!
//! The search runs from the word end towards the root, matching allomorphs
//! through a trie of reversed suffix strings. Slots must strictly increase
//! in that direction, which bounds the search. At every position the
//! remaining prefix is also tried as a root stem. Null person and verbalizer
//! morphemes are inserted afterwards wherever the checks license them.

use std::collections::HashMap;
use std::io::Read;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{AnalyzeError, CorpusError};
use crate::lexicon::{gloss_label, LexCategory, LexEntry, Lexicon, Reading, RootId};
use crate::morphotactics::{check_all, check_finite, Morpheme, MorphemeSeq, MorphotacticTable};
use crate::phonology::{entry_stems, root_stems};
use crate::text::{first_foreign_char, is_vowel, nfc, tokenize};

/// One segmentation of a surface form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Analysis {
    #[serde(skip)]
    pub root: RootId,
    pub lemma: String,
    #[serde(serialize_with = "ser_category")]
    pub category: LexCategory,
    /// Valency reading; absent for non-verbal roots.
    pub reading: Option<Reading>,
    /// The root as it surfaces in this form (after any alternation).
    pub stem: String,
    /// Whether a verbalizer turns a non-verbal root into a verbal theme.
    pub verbalized: bool,
    pub morphemes: MorphemeSeq,
    pub gloss: String,
    pub finite: bool,
}

fn ser_category<S: serde::Serializer>(c: &LexCategory, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(c.code())
}

impl Analysis {
    /// Tags of the morphemes, null ones marked `.ø`.
    pub fn tags(&self) -> Vec<String> {
        self.morphemes.iter().map(|m| if m.is_null() { format!("{}.ø", m.tag) } else { m.tag.clone() }).collect()
    }

    /// Root stem followed by every overt allomorph.
    pub fn surface(&self) -> String {
        let mut s = self.stem.clone();
        for m in self.morphemes.iter() {
            s.push_str(&m.allomorph);
        }
        s
    }

    fn sort_key(&self) -> (usize, &str, &str, &MorphemeSeq) {
        (self.morphemes.len(), &self.gloss, &self.stem, &self.morphemes)
    }
}

/// Every analysis of one input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisSet {
    pub input: String,
    pub analyses: Vec<Analysis>,
}

impl AnalysisSet {
    /// Number of analyses; the ambiguity of the form.
    pub fn ambiguity(&self) -> usize {
        self.analyses.len()
    }

    pub fn is_analyzable(&self) -> bool {
        !self.analyses.is_empty()
    }
}

/// `-CAT.lemma` followed by ` +TAG` per morpheme, ` +TAG.ø` for null ones.
pub fn render_gloss(entry: &LexEntry, reading: Option<Reading>, morphemes: &MorphemeSeq) -> String {
    let mut out = format!("-{}.{}", entry.gloss_code(reading), entry.lemma);
    for m in morphemes.iter() {
        out.push_str(" +");
        out.push_str(gloss_label(&m.tag));
        if m.is_null() {
            out.push_str(".ø");
        }
    }
    out
}

#[derive(Debug, Clone)]
struct TrieHit {
    tag: String,
    slot: u8,
    core: String,
    epenthetic: bool,
}

/// Trie over reversed allomorph strings.
#[derive(Debug, Default)]
struct SuffixTrie {
    children: Vec<HashMap<char, usize>>,
    hits: Vec<Vec<TrieHit>>,
}

impl SuffixTrie {
    fn new() -> Self {
        SuffixTrie { children: vec![HashMap::new()], hits: vec![Vec::new()] }
    }

    fn insert(&mut self, hit: TrieHit) {
        let mut node = 0;
        for c in hit.core.chars().rev() {
            node = match self.children[node].get(&c) {
                Some(&n) => n,
                None => {
                    self.children.push(HashMap::new());
                    self.hits.push(Vec::new());
                    let n = self.children.len() - 1;
                    self.children[node].insert(c, n);
                    n
                }
            };
        }
        self.hits[node].push(hit);
    }

    /// Allomorphs that end exactly at `end` in `chars`.
    fn matches_ending_at<'t>(&'t self, chars: &[char], end: usize) -> Vec<&'t TrieHit> {
        let mut out = Vec::new();
        let mut node = 0;
        for i in (0..end).rev() {
            match self.children[node].get(&chars[i]) {
                Some(&n) => node = n,
                None => break,
            }
            out.extend(self.hits[node].iter());
        }
        out
    }
}

/// Reusable analyzer over one lexicon and table.
pub struct Analyzer<'a> {
    lex: &'a Lexicon,
    table: &'a MorphotacticTable,
    trie: SuffixTrie,
    stems: HashMap<String, Vec<RootId>>,
    null_options: Vec<Vec<Morpheme>>,
}

impl<'a> Analyzer<'a> {
    pub fn new(lex: &'a Lexicon, table: &'a MorphotacticTable) -> Self {
        let mut trie = SuffixTrie::new();
        for s in lex.suffixes() {
            if !table.contains(&s.tag) {
                continue;
            }
            for a in s.allomorphs.iter().filter(|a| !a.is_null()) {
                trie.insert(TrieHit {
                    tag: s.tag.clone(),
                    slot: s.slot,
                    core: a.core.clone(),
                    epenthetic: a.epenthetic,
                });
            }
        }

        let mut stems: HashMap<String, Vec<RootId>> = HashMap::new();
        for id in lex.root_ids() {
            for s in root_stems(lex.root(id)) {
                let ids = stems.entry(s).or_default();
                if !ids.contains(&id) {
                    ids.push(id);
                }
            }
        }

        // Every subset of the licensed null morphemes.
        let nulls: Vec<Morpheme> = table
            .null_verbalizers()
            .into_iter()
            .chain(table.null_persons())
            .map(|t| Morpheme::new(t, "", table.slot_of(t).unwrap_or(0)))
            .collect();
        let mut null_options = vec![Vec::new()];
        for n in &nulls {
            let with: Vec<Vec<Morpheme>> = null_options
                .iter()
                .map(|o| {
                    let mut o = o.clone();
                    o.push(n.clone());
                    o
                })
                .collect();
            null_options.extend(with);
        }

        Analyzer { lex, table, trie, stems, null_options }
    }

    pub fn lexicon(&self) -> &Lexicon {
        self.lex
    }

    pub fn table(&self) -> &MorphotacticTable {
        self.table
    }

    /// All analyses of `surface`, in canonical order.
    pub fn analyze(&self, surface: &str) -> Result<AnalysisSet, AnalyzeError> {
        let input = nfc(surface);
        if input.is_empty() {
            return Err(AnalyzeError::EmptyForm);
        }
        if let Some(c) = first_foreign_char(&input) {
            return Err(AnalyzeError::BadAlphabet(c));
        }
        let chars: Vec<char> = input.chars().collect();
        let mut analyses = Vec::new();
        let mut acc = Vec::new();
        self.search(&chars, chars.len(), 0, &mut acc, &mut analyses);
        analyses.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()).then(a.root.cmp(&b.root)));
        analyses.dedup_by(|a, b| {
            a.root == b.root && a.reading == b.reading && a.stem == b.stem && a.morphemes == b.morphemes
        });
        Ok(AnalysisSet { input, analyses })
    }

    /// `acc` holds suffixes found so far, word end first.
    fn search(&self, chars: &[char], end: usize, bound: u8, acc: &mut Vec<Morpheme>, out: &mut Vec<Analysis>) {
        if end == 0 {
            return;
        }
        let stem: String = chars[..end].iter().collect();
        if let Some(ids) = self.stems.get(&stem) {
            let overt = MorphemeSeq::new(acc.iter().rev().cloned().collect());
            for &id in ids {
                self.complete(id, &stem, &overt, out);
            }
        }

        for hit in self.trie.matches_ending_at(chars, end) {
            if hit.slot <= bound {
                continue;
            }
            let start = end - hit.core.chars().count();
            if hit.epenthetic {
                if start >= 1 && is_vowel(chars[start - 1]) {
                    self.descend(chars, start, hit, hit.core.clone(), acc, out);
                }
                if start >= 2 && chars[start - 1] == 'ü' && !is_vowel(chars[start - 2]) {
                    self.descend(chars, start - 1, hit, format!("ü{}", hit.core), acc, out);
                }
            } else if start >= 1 {
                self.descend(chars, start, hit, hit.core.clone(), acc, out);
            }
        }
    }

    fn descend(
        &self,
        chars: &[char],
        start: usize,
        hit: &TrieHit,
        realized: String,
        acc: &mut Vec<Morpheme>,
        out: &mut Vec<Analysis>,
    ) {
        acc.push(Morpheme { tag: hit.tag.clone(), allomorph: realized, slot: hit.slot });
        self.search(chars, start, hit.slot, acc, out);
        acc.pop();
    }

    /// Root `id` spelled `stem` followed by the overt suffixes: insert null
    /// morphemes, run every check, and emit one analysis per reading.
    fn complete(&self, id: RootId, stem: &str, overt: &MorphemeSeq, out: &mut Vec<Analysis>) {
        let entry = self.lex.root(id);
        let first = overt.first_overt().map(|m| m.tag.as_str());
        if !entry_stems(entry, first).iter().any(|s| s == stem) {
            return;
        }
        for nulls in &self.null_options {
            let Some(seq) = insert_nulls(overt, nulls) else { continue };
            for reading in entry.readings() {
                match check_all(self.table, entry, reading, &seq) {
                    Ok(v) if v.is_empty() => {}
                    _ => continue,
                }
                out.push(Analysis {
                    root: id,
                    lemma: entry.lemma.clone(),
                    category: entry.category,
                    reading,
                    stem: stem.to_string(),
                    verbalized: seq.iter().any(|m| self.table.is_verbalizer(&m.tag)),
                    gloss: render_gloss(entry, reading, &seq),
                    finite: check_finite(self.table, &seq).is_ok(),
                    morphemes: seq.clone(),
                });
            }
        }
    }
}

/// Places null morphemes by slot; `None` if one would share a slot with an
/// existing morpheme.
fn insert_nulls(overt: &MorphemeSeq, nulls: &[Morpheme]) -> Option<MorphemeSeq> {
    if nulls.is_empty() {
        return Some(overt.clone());
    }
    let mut items = overt.items.clone();
    for n in nulls {
        if items.iter().any(|m| m.slot == n.slot) {
            return None;
        }
        let pos = items.iter().position(|m| m.slot < n.slot).unwrap_or(items.len());
        items.insert(pos, n.clone());
    }
    Some(MorphemeSeq::new(items))
}

/// One-shot analysis; builds an [`Analyzer`] each call.
pub fn analyze(lex: &Lexicon, table: &MorphotacticTable, surface: &str) -> Result<AnalysisSet, AnalyzeError> {
    Analyzer::new(lex, table).analyze(surface)
}

/// Analysis of one corpus token.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TokenResult {
    pub index: usize,
    /// Byte offset of the token in its source.
    pub offset: usize,
    pub token: String,
    /// `Err` for tokens outside the alphabet.
    #[serde(skip)]
    pub result: Result<AnalysisSet, AnalyzeError>,
}

impl TokenResult {
    pub fn ambiguity(&self) -> usize {
        self.result.as_ref().map_or(0, AnalysisSet::ambiguity)
    }

    pub fn is_analyzable(&self) -> bool {
        self.ambiguity() > 0
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct CorpusSummary {
    pub tokens: usize,
    pub analyzable: usize,
    pub unanalyzable: usize,
    /// Mean ambiguity over analyzable tokens; 0 if there are none.
    pub mean_ambiguity: f64,
}

impl CorpusSummary {
    pub fn from_results(results: &[TokenResult]) -> Self {
        let analyzable: Vec<usize> = results.iter().map(TokenResult::ambiguity).filter(|&a| a > 0).collect();
        let mean_ambiguity =
            if analyzable.is_empty() { 0.0 } else { analyzable.iter().sum::<usize>() as f64 / analyzable.len() as f64 };
        CorpusSummary {
            tokens: results.len(),
            analyzable: analyzable.len(),
            unanalyzable: results.len() - analyzable.len(),
            mean_ambiguity,
        }
    }
}

/// Tokenizes `reader` and analyzes every token in parallel; results keep
/// token order.
pub fn analyze_corpus<R: Read>(
    lex: &Lexicon,
    table: &MorphotacticTable,
    mut reader: R,
    source_id: &str,
) -> Result<(Vec<TokenResult>, CorpusSummary), CorpusError> {
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
    let analyzer = Analyzer::new(lex, table);
    let results: Vec<TokenResult> = tokenize(&text)
        .into_par_iter()
        .map(|t| TokenResult { index: t.index, offset: t.offset, result: analyzer.analyze(&t.norm), token: t.text })
        .collect();
    let summary = CorpusSummary::from_results(&results);
    Ok((results, summary))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn glosses(word: &str) -> Vec<String> {
        let lex = Lexicon::shipped();
        let table = MorphotacticTable::from_lexicon(&lex);
        analyze(&lex, &table, word).unwrap().analyses.into_iter().map(|a| a.gloss).collect()
    }

    #[test]
    fn tripay() {
        assert_eq!(glosses("tripay"), ["-IV.tripa +IND +3.ø"]);
    }

    #[test]
    fn kupalun() {
        assert!(glosses("küpalün").contains(&"-IV.küpa +CA +IND1SG".to_string()));
    }

    #[test]
    fn dungufinge() {
        assert!(glosses("düngufinge").contains(&"-NN.düngu +VRB.ø +3P +IMP2SG".to_string()));
    }

    #[test]
    fn ten_suffix_verb() {
        assert!(glosses("nünieñmarputueyiñmu")
            .contains(&"-TV.nü +PRPS +IO +ITR +LOC +RE +INV +IND +1.ø +PL +3A".to_string()));
    }

    #[test]
    fn pichikael() {
        assert_eq!(glosses("pichikael"), ["-AJ.pichi +CONT +OVN"]);
    }

    #[test]
    fn langumun_uses_alternant() {
        let lex = Lexicon::shipped();
        let table = MorphotacticTable::from_lexicon(&lex);
        let set = analyze(&lex, &table, "langümün").unwrap();
        let a = set.analyses.iter().find(|a| a.gloss == "-AJ.la +VRB.ø +CA +IND1SG").unwrap();
        assert_eq!(a.stem, "lang");
        assert!(a.verbalized && a.finite);
        assert_eq!(a.surface(), "langümün");
    }

    #[test]
    fn bare_noun() {
        assert_eq!(glosses("chadi"), ["-NN.chadi"]);
    }

    #[test]
    fn errors() {
        let lex = Lexicon::shipped();
        let table = MorphotacticTable::from_lexicon(&lex);
        assert_eq!(analyze(&lex, &table, ""), Err(AnalyzeError::EmptyForm));
        assert_eq!(analyze(&lex, &table, "juan"), Err(AnalyzeError::BadAlphabet('j')));
        assert_eq!(analyze(&lex, &table, "zzz").unwrap().ambiguity(), 0);
    }

    #[test]
    fn labile_under_causative_keeps_intransitive_reading() {
        let lex = Lexicon::shipped();
        let table = MorphotacticTable::from_lexicon(&lex);
        let set = analyze(&lex, &table, "mongeli").unwrap();
        assert!(set.analyses.iter().all(|a| !(a.lemma == "monge"
            && a.reading == Some(Reading::Transitive)
            && a.morphemes.iter().any(|m| table.is_causative(&m.tag)))));
    }

    #[test]
    fn corpus_of_four_words() {
        let lex = Lexicon::shipped();
        let table = MorphotacticTable::from_lexicon(&lex);
        let text = "pichikael düngufinge tripay küpalün";
        let (results, summary) = analyze_corpus(&lex, &table, text.as_bytes(), "e02").unwrap();
        assert_eq!(results.len(), 4);
        assert_eq!(summary.unanalyzable, 0);
        assert_eq!(results[2].token, "tripay");

        let (_, empty) = analyze_corpus(&lex, &table, "".as_bytes(), "empty").unwrap();
        assert_eq!(empty, CorpusSummary::default());

        let (_, one) = analyze_corpus(&lex, &table, "zzz".as_bytes(), "z").unwrap();
        assert_eq!(one.unanalyzable, 1);
    }
}
