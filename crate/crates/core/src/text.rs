//! Orthographic helpers: normalization, the accepted alphabet and tokenization.

use unicode_normalization::UnicodeNormalization;

/// Letters accepted in lemmas and surface forms.
///
/// This is the union of the three common practical orthographies (Alfabeto
/// Unificado, Azümchefe and Raguileo), so texts in any of them pass the
/// alphabet check. Digraphs (ch, ll, ng, tr, ...) are sequences of these.
pub const ALPHABET: &[char] = &[
    'a', 'b', 'c', 'd', 'e', 'f', 'g', 'h', 'i', 'k', 'l', 'm', 'n', 'ñ', 'o', 'p', 'q', 'r', 's', 't', 'u', 'ü', 'v',
    'w', 'x', 'y', 'z', 'ḻ', 'ṉ', 'ṯ',
];

const VOWELS: &[char] = &['a', 'e', 'i', 'o', 'u', 'ü'];

/// NFC normalization without case folding.
pub fn nfc(s: &str) -> String {
    s.nfc().collect()
}

/// NFC plus lowercase; what tokens and CLI words go through before analysis.
pub fn normalize(s: &str) -> String {
    nfc(&s.to_lowercase())
}

pub fn in_alphabet(c: char) -> bool {
    ALPHABET.contains(&c)
}

/// First character of `s` outside the alphabet, if any.
pub fn first_foreign_char(s: &str) -> Option<char> {
    s.chars().find(|c| !in_alphabet(*c))
}

pub fn is_vowel(c: char) -> bool {
    VOWELS.contains(&c)
}

pub fn ends_in_vowel(s: &str) -> bool {
    s.chars().last().is_some_and(is_vowel)
}

pub fn ends_in_consonant(s: &str) -> bool {
    s.chars().last().is_some_and(|c| !is_vowel(c))
}

/// A word token with its position in the source text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    /// Position among the tokens of its source.
    pub index: usize,
    /// Byte offset of the token in the source text.
    pub offset: usize,
    /// The token as written.
    pub text: String,
    /// Normalized form used for lookup.
    pub norm: String,
}

/// Splits text on whitespace and punctuation. A token is a maximal run of
/// alphabetic characters (plus combining marks, so decomposed ü stays whole);
/// apostrophes inside a word are kept because some orthographies use them.
pub fn tokenize(text: &str) -> Vec<Token> {
    let mut tokens = Vec::new();
    let mut start: Option<usize> = None;
    let is_word = |c: char| c.is_alphabetic() || is_combining(c);

    let mut chars = text.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        let inner_apostrophe =
            (c == '\'' || c == '’') && start.is_some() && chars.peek().is_some_and(|&(_, n)| is_word(n));
        if is_word(c) || inner_apostrophe {
            start.get_or_insert(i);
        } else if let Some(s) = start.take() {
            push_token(&mut tokens, text, s, i);
        }
    }
    if let Some(s) = start {
        push_token(&mut tokens, text, s, text.len());
    }
    tokens
}

fn push_token(tokens: &mut Vec<Token>, text: &str, start: usize, end: usize) {
    let raw = &text[start..end];
    tokens.push(Token { index: tokens.len(), offset: start, text: raw.to_string(), norm: normalize(raw) });
}

fn is_combining(c: char) -> bool {
    matches!(c, '\u{0300}'..='\u{036f}')
}

#[cfg(test)]
mod tests {
    use super::*;

    fn norms(text: &str) -> Vec<String> {
        tokenize(text).into_iter().map(|t| t.norm).collect()
    }

    #[test]
    fn three_plain_tokens() {
        let toks = tokenize("kiñe küdaw mew");
        assert_eq!(toks.len(), 3);
        assert_eq!(toks[1].offset, "kiñe ".len());
        assert_eq!(toks[2].index, 2);
    }

    #[test]
    fn empty_text_has_no_tokens() {
        assert!(tokenize("").is_empty());
        assert!(tokenize("  \n\t ").is_empty());
    }

    #[test]
    fn decomposed_umlaut_is_normalized() {
        let decomposed = "ku\u{0308}daw";
        let toks = tokenize(decomposed);
        assert_eq!(toks.len(), 1);
        assert_eq!(toks[0].norm, "küdaw");
        assert_eq!(toks[0].text, decomposed);
    }

    // Hand-tokenized sample: each line paired with the expected token list.
    #[test]
    fn hand_tokenized_sample() {
        let sample: &[(&str, &[&str])] = &[
            ("tripay.", &["tripay"]),
            ("¡düngufinge!", &["düngufinge"]),
            ("Küpalün, pichikael.", &["küpalün", "pichikael"]),
            ("«anümün» fey", &["anümün", "fey"]),
            ("ngoymakonkülen kiñe küdaw mew;", &["ngoymakonkülen", "kiñe", "küdaw", "mew"]),
            ("(la) langümün", &["la", "langümün"]),
            ("chadi-ñi", &["chadi", "ñi"]),
            ("fa, fam? fa...", &["fa", "fam", "fa"]),
            ("  nünieñmarputueyiñmu  ", &["nünieñmarputueyiñmu"]),
            ("iñche pun", &["iñche", "pun"]),
            ("petu puwlaymi küdawmew", &["petu", "puwlaymi", "küdawmew"]),
            ("müna ayuwüy iñchiu", &["müna", "ayuwüy", "iñchiu"]),
            ("küpa pulen liwen", &["küpa", "pulen", "liwen"]),
            ("1906: küdaw", &["küdaw"]),
            ("pu wentru", &["pu", "wentru"]),
            ("machi\u{2014}chadi", &["machi", "chadi"]),
            ("“kachu”", &["kachu"]),
            ("nor'üm", &["nor'üm"]),
            ("yafü\tyung\nwim", &["yafü", "yung", "wim"]),
            ("ÜNA", &["üna"]),
        ];
        for (line, expected) in sample {
            assert_eq!(norms(line), *expected, "line {line:?}");
        }
    }

    #[test]
    fn offsets_point_into_source() {
        let text = "¡düngufinge! tripay";
        for t in tokenize(text) {
            assert_eq!(&text[t.offset..t.offset + t.text.len()], t.text);
        }
    }

    #[test]
    fn alphabet_rejects_digits_and_j() {
        assert_eq!(first_foreign_char("tripay"), None);
        assert_eq!(first_foreign_char("juan"), Some('j'));
        assert_eq!(first_foreign_char("a1"), Some('1'));
    }
}
