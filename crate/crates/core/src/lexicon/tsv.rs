//! Reading and writing `roots.tsv` and `suffixes.tsv`.

use super::{Allomorph, Alternants, Constraint, LexCategory, LexEntry, SuffixEntry, Valency};
use crate::error::LexiconError;
use crate::text::nfc;

const ROOTS: &str = "roots.tsv";

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
}

fn opt(field: &str) -> Option<String> {
    let f = field.trim();
    (f != "-" && !f.is_empty()).then(|| f.to_string())
}

fn list(field: &str) -> Vec<String> {
    opt(field).map(|f| f.split(',').map(|s| nfc(s.trim())).filter(|s| !s.is_empty()).collect()).unwrap_or_default()
}

fn join_or_dash(items: &[String]) -> String {
    if items.is_empty() {
        "-".into()
    } else {
        items.join(",")
    }
}

pub fn parse_roots(text: &str) -> Result<Vec<LexEntry>, LexiconError> {
    content_lines(text).map(|(n, line)| parse_root_line(n, line)).collect()
}

fn parse_root_line(n: usize, line: &str) -> Result<LexEntry, LexiconError> {
    let err = |m: String| LexiconError::parse(ROOTS, n, m);
    let fields: Vec<&str> = line.split('\t').collect();
    if !(8..=10).contains(&fields.len()) {
        return Err(err(format!("expected 8 to 10 tab-separated fields, found {}", fields.len())));
    }

    let (category, labile_marked) = match fields[1].trim() {
        "VI/VT" => (LexCategory::VI, true),
        c => (c.parse::<LexCategory>().map_err(err)?, false),
    };
    let valency = opt(fields[2]).map(|v| v.parse::<Valency>()).transpose().map_err(err)?;
    if labile_marked && valency != Some(Valency::Labile) {
        return Err(err("category VI/VT requires valency labile".into()));
    }

    let mut alternants = Alternants::new();
    for item in list(fields[6]) {
        let (trigger, rule) =
            item.split_once(':').ok_or_else(|| err(format!("alternant {item:?} is not trigger:stem")))?;
        alternants.insert(trigger.trim(), rule.trim().parse().map_err(err)?);
    }

    let mut sources = list(fields[7]).iter().map(|s| s.parse()).collect::<Result<Vec<_>, _>>().map_err(err)?;
    sources.sort();
    sources.dedup();

    let extracted_suffixes = fields
        .get(8)
        .map(|f| list(f).into_iter().map(|s| s.trim_matches('-').to_string()).collect())
        .unwrap_or_default();
    let initial_category =
        fields.get(9).and_then(|f| opt(f)).map(|c| c.parse::<LexCategory>()).transpose().map_err(err)?;

    Ok(LexEntry {
        lemma: nfc(fields[0].trim().trim_end_matches('-')),
        category,
        valency,
        gloss_iv: opt(fields[3]),
        gloss_tv: opt(fields[4]),
        extracted_suffixes,
        alternants,
        variants: list(fields[5]).into_iter().map(|v| v.trim_end_matches('-').to_string()).collect(),
        sources,
        initial_category,
    })
}

pub fn write_roots(roots: &[LexEntry]) -> String {
    let mut out = String::from(
        "# lemma\tcategory\tvalency\tgloss_iv\tgloss_tv\tvariants\talternants\tsources\textracted_suffixes\tinitial_category\n",
    );
    for e in roots {
        let category = if e.is_labile() && e.category == LexCategory::VI {
            "VI/VT".to_string()
        } else {
            e.category.code().to_string()
        };
        let alternants: Vec<String> = e.alternants.iter().map(|(t, r)| format!("{t}:{r}")).collect();
        let sources: Vec<String> = e.sources.iter().map(|s| format!("{s:?}")).collect();
        let fields = [
            e.lemma.clone(),
            category,
            e.valency.map_or("-".into(), |v| v.code().to_string()),
            e.gloss_iv.clone().unwrap_or_else(|| "-".into()),
            e.gloss_tv.clone().unwrap_or_else(|| "-".into()),
            join_or_dash(&e.variants),
            join_or_dash(&alternants),
            join_or_dash(&sources),
            join_or_dash(&e.extracted_suffixes),
            e.initial_category.map_or("-".into(), |c| c.code().to_string()),
        ];
        out.push_str(&fields.join("\t"));
        out.push('\n');
    }
    out
}

/// Parses suffix lines; `file` labels errors.
pub fn parse_suffixes(text: &str, file: &str) -> Result<Vec<SuffixEntry>, LexiconError> {
    content_lines(text).map(|(n, line)| parse_suffix_line(file, n, line)).collect()
}

fn parse_suffix_line(file: &str, n: usize, line: &str) -> Result<SuffixEntry, LexiconError> {
    let err = |m: String| LexiconError::parse(file, n, m);
    let fields: Vec<&str> = line.split('\t').collect();
    if !(5..=6).contains(&fields.len()) {
        return Err(err(format!("expected 5 or 6 tab-separated fields, found {}", fields.len())));
    }
    let tag = fields[0].trim();
    if tag.is_empty() {
        return Err(err("empty tag".into()));
    }
    let allomorphs =
        fields[1].split(',').map(|a| a.parse::<Allomorph>()).collect::<Result<Vec<_>, _>>().map_err(err)?;
    let slot =
        fields[2].trim().parse::<u8>().map_err(|_| err(format!("slot {:?} is not a small integer", fields[2])))?;
    let excl_classes: Vec<String> = fields[3].trim().split('+').map(|c| c.trim().to_string()).collect();
    if excl_classes.iter().any(String::is_empty) {
        return Err(err("empty exclusion class".into()));
    }
    let valency_effect = fields[4].trim().parse().map_err(err)?;
    let constraints = match fields.get(5).and_then(|f| opt(f)) {
        Some(f) => f.split(',').map(|c| c.parse::<Constraint>()).collect::<Result<Vec<_>, _>>().map_err(err)?,
        None => Vec::new(),
    };
    Ok(SuffixEntry { tag: tag.to_string(), allomorphs, slot, excl_classes, valency_effect, constraints })
}

pub fn write_suffixes(suffixes: &[SuffixEntry]) -> String {
    let mut out = String::from("# tag\tallomorphs\tslot\texcl_class\tvalency_effect\tconstraints\n");
    for s in suffixes {
        let allomorphs: Vec<String> = s.allomorphs.iter().map(|a| a.to_string()).collect();
        let constraints: Vec<String> = s.constraints.iter().map(|c| c.to_string()).collect();
        let fields = [
            s.tag.clone(),
            allomorphs.join(","),
            s.slot.to_string(),
            s.excl_classes.join("+"),
            s.valency_effect.code().to_string(),
            join_or_dash(&constraints),
        ];
        out.push_str(&fields.join("\t"));
        out.push('\n');
    }
    out
}
