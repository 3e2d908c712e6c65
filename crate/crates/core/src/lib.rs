//! Morphological analysis and generation of Mapudüngun verb forms.
//!
//! A verb form is a root followed by suffixes that occupy numbered slots
//! (36 next to the root, 1 at the word end). The crate loads a root lexicon
//! and suffix inventory, checks suffix sequences against the slot template
//! and valency constraints, segments surface forms into every admissible
//! analysis, generates surface forms from tags, and gathers corpus evidence
//! for reclassifying roots as non-verbal or intransitive.
//!
//! ```
//! use mapumorph::{Analyzer, Lexicon, MorphotacticTable};
//!
//! let lex = Lexicon::shipped();
//! let table = MorphotacticTable::from_lexicon(&lex);
//! let set = Analyzer::new(&lex, &table).analyze("tripay").unwrap();
//! assert_eq!(set.analyses[0].gloss, "-IV.tripa +IND +3.ø");
//! ```

pub mod analyzer;
pub mod data;
pub mod error;
pub mod generator;
pub mod lexicon;
pub mod morphotactics;
pub mod phonology;
pub mod reclassifier;
pub mod text;

pub use analyzer::{analyze, analyze_corpus, render_gloss, Analysis, AnalysisSet, Analyzer};
pub use error::{AnalyzeError, CorpusError, GenerateError, LexiconError, MorphError, ReportError};
pub use generator::{generate, roundtrip_check, GenRequest, Generation, RoundTripFailure};
pub use lexicon::{
    load_lexicon, validate_lexicon, Diagnostic, LexCategory, LexEntry, Lexicon, Reading, RootId, SuffixEntry, Valency,
};
pub use morphotactics::{Morpheme, MorphemeSeq, MorphotacticTable, Violation};
