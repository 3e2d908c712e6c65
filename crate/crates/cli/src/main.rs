//! `mapumorph`: analyze, generate and validate Mapudüngun verb forms.
//!
//! Exit status: 0 on success, 1 when a word is unanalyzable, a form is
//! refused or validation finds problems, 2 on configuration, parse or
//! unknown-name errors.

mod config;

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufRead, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use mapumorph::analyzer::{CorpusSummary, TokenResult};
use mapumorph::data::{check_causatives, parse_causatives};
use mapumorph::reclassifier::{report, CorpusIndex, EvidenceOptions, Reclassifier, ReportFormat};
use mapumorph::{
    analyze_corpus, generate, validate_lexicon, Analyzer, GenRequest, GenerateError, Lexicon, MorphotacticTable,
};
use serde::Serialize;

use config::{Config, FileConfig, Format, DATA_ENV};

#[derive(Parser, Debug)]
#[command(name = "mapumorph", version, about = "Morphological analyzer and generator for Mapudüngun verb forms")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// Root lexicon (roots.tsv).
    #[arg(long, global = true)]
    lexicon: Option<PathBuf>,

    /// Suffix inventory (suffixes.tsv).
    #[arg(long, global = true)]
    suffixes: Option<PathBuf>,

    /// Suffix entries replacing or extending the inventory, same schema.
    #[arg(long, global = true)]
    overrides: Option<PathBuf>,

    /// TOML config file; flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Directory holding roots.tsv, suffixes.tsv and causatives.tsv.
    #[arg(long, env = DATA_ENV, global = true, hide_env_values = true)]
    data: Option<PathBuf>,

    #[arg(long, value_enum, global = true)]
    format: Option<Format>,

    /// Bare uses needed to propose a non-verbal category.
    #[arg(long, global = true)]
    threshold: Option<usize>,

    /// Print an ambiguity summary to stderr after analyzing.
    #[arg(long, global = true)]
    ambiguity_report: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyze words given as arguments, or the text on stdin.
    Analyze { words: Vec<String> },
    /// Generate surfaces for `lemma:CAT[+IV|TV] tag1,tag2`; one request per
    /// stdin line when no arguments are given.
    Generate { request: Vec<String> },
    /// Check the lexicon and re-derive the causative table.
    Validate,
    /// Gather reclassification evidence from a corpus.
    Reclassify {
        /// Corpus files; stdin when absent.
        #[arg(long = "corpus")]
        corpus: Vec<PathBuf>,
        /// Comma-separated roots; every lexicon root when absent.
        #[arg(long, value_delimiter = ',')]
        roots: Vec<String>,
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// tsv or table.
        #[arg(long, default_value = "tsv")]
        report_format: String,
        /// Guess the non-verbal category from the preceding word.
        #[arg(long)]
        context_heuristic: bool,
    },
    /// Token and ambiguity statistics for a corpus.
    Stats {
        #[arg(long = "corpus")]
        corpus: Vec<PathBuf>,
    },
}

/// Error that maps to exit status 2.
#[derive(Debug)]
struct Fatal(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for Fatal {
    fn from(e: E) -> Self {
        Fatal(e.into())
    }
}

fn resolve(global: &GlobalArgs) -> Result<Config> {
    let file = match &global.config {
        Some(p) => FileConfig::load(p)?,
        None => FileConfig::default(),
    };
    let config = Config {
        lexicon: global.lexicon.clone().or(file.lexicon),
        suffixes: global.suffixes.clone().or(file.suffixes),
        overrides: global.overrides.clone().or(file.overrides),
        data_dir: global.data.clone(),
        format: global.format.or(file.format).unwrap_or_default(),
        threshold: global.threshold.or(file.threshold).unwrap_or(1),
        ambiguity_report: global.ambiguity_report || file.ambiguity_report.unwrap_or(false),
        context_heuristic: file.context_heuristic.unwrap_or(false),
    };
    config.validate()?;
    Ok(config)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = || -> Result<u8, Fatal> {
        let config = resolve(&cli.global)?;
        match &cli.command {
            Command::Analyze { words } => cmd_analyze(&config, words),
            Command::Generate { request } => cmd_generate(&config, request),
            Command::Validate => cmd_validate(&config),
            Command::Reclassify { corpus, roots, output, report_format, context_heuristic } => {
                cmd_reclassify(&config, corpus, roots, output.as_ref(), report_format, *context_heuristic)
            }
            Command::Stats { corpus } => cmd_stats(&config, corpus),
        }
    };
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(Fatal(e)) => {
            eprintln!("mapumorph: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read_stdin() -> Result<String> {
    let mut s = String::new();
    io::stdin().read_to_string(&mut s).context("cannot read stdin")?;
    Ok(s)
}

#[derive(Serialize)]
struct Record<'a> {
    input: &'a str,
    gloss: Option<&'a str>,
    tags: Vec<String>,
    finite: bool,
    ambiguity: usize,
}

fn write_token(out: &mut impl Write, format: Format, t: &TokenResult) -> Result<()> {
    let input = t.token.as_str();
    let analyses = t.result.as_ref().map(|s| s.analyses.as_slice()).unwrap_or_default();
    if analyses.is_empty() {
        match format {
            Format::Plain => writeln!(out, "{input}\tUNANALYZABLE")?,
            Format::Tsv => writeln!(out, "{input}\t0\tUNANALYZABLE")?,
            Format::Records => {
                let r = Record { input, gloss: None, tags: vec![], finite: false, ambiguity: 0 };
                writeln!(out, "{}", serde_json::to_string(&r)?)?
            }
        }
        return Ok(());
    }
    match format {
        Format::Plain => {
            let glosses: Vec<&str> = analyses.iter().map(|a| a.gloss.as_str()).collect();
            writeln!(out, "{}", glosses.join(" | "))?;
        }
        Format::Tsv => {
            for a in analyses {
                writeln!(out, "{input}\t{}\t{}", analyses.len(), a.gloss)?;
            }
        }
        Format::Records => {
            for a in analyses {
                let r = Record {
                    input,
                    gloss: Some(&a.gloss),
                    tags: a.tags(),
                    finite: a.finite,
                    ambiguity: analyses.len(),
                };
                writeln!(out, "{}", serde_json::to_string(&r)?)?;
            }
        }
    }
    Ok(())
}

fn summary_lines(s: &CorpusSummary) -> String {
    format!(
        "tokens\t{}\nanalyzable\t{}\nunanalyzable\t{}\nmean_ambiguity\t{:.3}\n",
        s.tokens, s.analyzable, s.unanalyzable, s.mean_ambiguity
    )
}

fn cmd_analyze(config: &Config, words: &[String]) -> Result<u8, Fatal> {
    let lex = config.load_lexicon()?;
    let table = MorphotacticTable::from_lexicon(&lex);
    let (text, source) = if words.is_empty() { (read_stdin()?, "stdin") } else { (words.join(" "), "args") };
    let (results, summary) = analyze_corpus(&lex, &table, text.as_bytes(), source)?;

    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    for t in &results {
        if let Err(e) = &t.result {
            eprintln!("{}: {e}", t.token);
        }
        write_token(&mut out, config.format, t)?;
    }
    out.flush()?;
    if config.ambiguity_report {
        eprint!("{}", summary_lines(&summary));
    }
    Ok(if summary.unanalyzable > 0 { 1 } else { 0 })
}

#[derive(Serialize)]
struct GenRecord<'a> {
    request: &'a str,
    surfaces: &'a [String],
    violations: Vec<String>,
}

fn cmd_generate(config: &Config, request: &[String]) -> Result<u8, Fatal> {
    let lex = config.load_lexicon()?;
    let table = MorphotacticTable::from_lexicon(&lex);
    let requests: Vec<String> = if request.is_empty() {
        io::stdin()
            .lock()
            .lines()
            .collect::<io::Result<Vec<_>>>()?
            .into_iter()
            .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
            .collect()
    } else {
        vec![request.join(" ")]
    };

    let mut code = 0;
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    for line in &requests {
        let generated = line.parse::<GenRequest>().and_then(|r| generate(&lex, &table, &r));
        let g = match generated {
            Ok(g) => g,
            Err(
                e @ (GenerateError::UnknownTag(_) | GenerateError::UnknownLemma { .. } | GenerateError::BadRequest(_)),
            ) => {
                out.flush()?;
                return Err(Fatal(anyhow::anyhow!(e)));
            }
        };
        let violations: Vec<String> = g.violations.iter().map(|v| v.to_string()).collect();
        if g.surfaces.is_empty() {
            eprintln!("refused: {line}: {}", violations.join("; "));
            code = 1;
        }
        match config.format {
            Format::Plain => {
                for s in &g.surfaces {
                    writeln!(out, "{s}")?;
                }
            }
            Format::Tsv => {
                for s in &g.surfaces {
                    writeln!(out, "{line}\t{s}")?;
                }
            }
            Format::Records => {
                let r = GenRecord { request: line, surfaces: &g.surfaces, violations };
                writeln!(out, "{}", serde_json::to_string(&r)?)?;
            }
        }
    }
    out.flush()?;
    Ok(code)
}

fn cmd_validate(config: &Config) -> Result<u8, Fatal> {
    let lex = config.parse_lexicon()?;
    let diagnostics = validate_lexicon(&lex);
    for d in &diagnostics {
        eprintln!("{d}");
    }
    let table = MorphotacticTable::from_lexicon(&lex);
    let (name, text) = config.causatives()?;
    let rows = parse_causatives(&text).with_context(|| format!("in {name}"))?;
    let mismatches = check_causatives(&lex, &table, &rows);
    for m in &mismatches {
        eprintln!("causative self-test: {m}");
    }
    let clean = diagnostics.is_empty() && mismatches.is_empty();
    println!(
        "{} roots, {} suffixes, {} diagnostics, {}/{} causative rows regenerated",
        lex.roots().len(),
        lex.suffixes().len(),
        diagnostics.len(),
        rows.len() - mismatches.len(),
        rows.len()
    );
    Ok(if clean { 0 } else { 1 })
}

fn read_corpus(files: &[PathBuf]) -> Result<CorpusIndex> {
    let mut index = CorpusIndex::new();
    if files.is_empty() {
        index.add_reader(io::stdin().lock(), "stdin")?;
    }
    for f in files {
        let file = File::open(f).with_context(|| format!("cannot open {}", f.display()))?;
        index.add_reader(file, &f.display().to_string())?;
    }
    Ok(index)
}

fn cmd_reclassify(
    config: &Config,
    corpus: &[PathBuf],
    roots: &[String],
    output: Option<&PathBuf>,
    report_format: &str,
    context_heuristic: bool,
) -> Result<u8, Fatal> {
    let format: ReportFormat = report_format.parse()?;
    let lex = config.load_lexicon()?;
    let table = MorphotacticTable::from_lexicon(&lex);
    let analyzer = Analyzer::new(&lex, &table);
    let index = read_corpus(corpus)?;
    let roots = if roots.is_empty() { lexicon_lemmas(&lex) } else { roots.to_vec() };
    let opts = EvidenceOptions {
        threshold: config.threshold,
        context_heuristic: context_heuristic || config.context_heuristic,
    };
    let reports = Reclassifier::new(&analyzer, &index).gather_all(&roots, opts);
    let doc = report(&reports, format);
    match output {
        Some(p) => std::fs::write(p, doc).with_context(|| format!("cannot write {}", p.display()))?,
        None => io::stdout().write_all(doc.as_bytes())?,
    }
    Ok(0)
}

fn lexicon_lemmas(lex: &Lexicon) -> Vec<String> {
    let mut seen = Vec::new();
    for e in lex.roots() {
        if !seen.contains(&e.lemma) {
            seen.push(e.lemma.clone());
        }
    }
    seen
}

fn cmd_stats(config: &Config, corpus: &[PathBuf]) -> Result<u8, Fatal> {
    let lex = config.load_lexicon()?;
    let table = MorphotacticTable::from_lexicon(&lex);
    let mut results = Vec::new();
    if corpus.is_empty() {
        results.extend(analyze_corpus(&lex, &table, io::stdin().lock(), "stdin")?.0);
    }
    for f in corpus {
        let file = File::open(f).with_context(|| format!("cannot open {}", f.display()))?;
        results.extend(analyze_corpus(&lex, &table, file, &f.display().to_string())?.0);
    }
    let summary = CorpusSummary::from_results(&results);
    let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
    for t in &results {
        *histogram.entry(t.ambiguity()).or_default() += 1;
    }
    let mut by_category: BTreeMap<&str, usize> = BTreeMap::new();
    for e in lex.roots() {
        *by_category.entry(e.category.code()).or_default() += 1;
    }

    let mut out = String::new();
    out.push_str(&format!("roots\t{}\nsuffixes\t{}\n", lex.roots().len(), lex.suffixes().len()));
    for (cat, n) in by_category {
        out.push_str(&format!("roots_{cat}\t{n}\n"));
    }
    out.push_str(&summary_lines(&summary));
    for (amb, n) in histogram {
        out.push_str(&format!("ambiguity_{amb}\t{n}\n"));
    }
    io::stdout().write_all(out.as_bytes())?;
    Ok(0)
}
