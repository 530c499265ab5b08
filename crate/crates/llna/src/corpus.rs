//! Corpus handling: manifest loading, document fetching, tokenization,
//! stopword filtering and lemmatization.
//!
//! The output of this module is a [`TokenSequence`] per document, ready for
//! network construction.
//!
//! ```
//! use llna::corpus::{lemmatize, remove_stopwords, tokenize, LemmaMode, LemmaTable, StopwordList};
//!
//! let seq = tokenize("The cat, quite calmly, sat.", "demo");
//! assert_eq!(seq.tokens[..3], ["the".to_string(), "cat".into(), ",".into()]);
//! let filtered = remove_stopwords(&seq, &StopwordList::default_english());
//! assert_eq!(filtered.tokens, ["cat", "quite", "calmly", "sat"]);
//!
//! let table = LemmaTable::default_english();
//! let seq = tokenize("the cats ran past the houses", "demo");
//! let partial = lemmatize(&seq, &table, LemmaMode::Partial);
//! assert_eq!(partial.tokens, ["the", "cat", "ran", "past", "the", "house"]);
//! let full = lemmatize(&seq, &table, LemmaMode::Full);
//! assert_eq!(full.tokens, ["the", "cat", "run", "past", "the", "house"]);
//! ```

use std::collections::{HashMap, HashSet};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How far lemmatization goes: not at all, nouns only, or nouns and verbs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LemmaMode {
    None,
    Partial,
    Full,
}

impl LemmaMode {
    pub const ALL: [LemmaMode; 3] = [LemmaMode::None, LemmaMode::Partial, LemmaMode::Full];

    pub fn as_str(&self) -> &'static str {
        match self {
            LemmaMode::None => "none",
            LemmaMode::Partial => "partial",
            LemmaMode::Full => "full",
        }
    }
}

impl std::str::FromStr for LemmaMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(LemmaMode::None),
            "partial" => Ok(LemmaMode::Partial),
            "full" => Ok(LemmaMode::Full),
            other => Err(Error::Config(format!("unknown lemma mode {other:?}"))),
        }
    }
}

/// Whether a document participates in rule selection or final validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DatasetRole {
    RuleSelection,
    Validation,
}

/// One corpus entry: a book with an author label and a source.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub author: String,
    pub title: String,
    /// Local path or remote identifier (e.g. a Project Gutenberg id).
    pub source: String,
    pub dataset_role: DatasetRole,
}

impl ManifestEntry {
    /// Stable document id: slugified "author__title".
    pub fn doc_id(&self) -> String {
        format!("{}__{}", slug(&self.author), slug(&self.title))
    }
}

fn slug(s: &str) -> String {
    let mut out = String::new();
    for c in s.chars() {
        if c.is_alphanumeric() {
            out.extend(c.to_lowercase());
        } else if !out.ends_with('-') && !out.is_empty() {
            out.push('-');
        }
    }
    out.trim_end_matches('-').to_string()
}

/// The corpus manifest: the full list of documents for an experiment.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CorpusManifest {
    pub entries: Vec<ManifestEntry>,
}

impl CorpusManifest {
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let manifest: CorpusManifest = serde_json::from_str(&text)?;
        manifest.validate()?;
        Ok(manifest)
    }

    pub fn validate(&self) -> Result<()> {
        let mut seen = HashSet::new();
        for e in &self.entries {
            if e.author.trim().is_empty() {
                return Err(Error::Manifest(format!(
                    "entry {:?} has an empty author",
                    e.title
                )));
            }
            if !seen.insert((e.author.clone(), e.title.clone())) {
                return Err(Error::Manifest(format!(
                    "duplicate (author, title): ({}, {})",
                    e.author, e.title
                )));
            }
        }
        Ok(())
    }

    /// True when every author contributes the same number of books.
    pub fn is_balanced(&self) -> bool {
        let mut counts: HashMap<&str, usize> = HashMap::new();
        for e in &self.entries {
            *counts.entry(e.author.as_str()).or_default() += 1;
        }
        let mut values = counts.values();
        match values.next() {
            Some(first) => values.all(|v| v == first),
            None => true,
        }
    }

    pub fn with_role(&self, role: DatasetRole) -> Vec<&ManifestEntry> {
        self.entries
            .iter()
            .filter(|e| e.dataset_role == role)
            .collect()
    }
}

/// An ordered token sequence extracted from one document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenSequence {
    pub tokens: Vec<String>,
    pub provenance: String,
    pub lemma_mode: LemmaMode,
}

/// Split `text` into lowercased word tokens and single punctuation marks.
///
/// A word token is a maximal run of alphanumeric characters, with internal
/// apostrophes kept. Hyphens split words. Every other non-whitespace
/// character becomes its own punctuation token.
pub fn tokenize(text: &str, provenance: &str) -> TokenSequence {
    let mut tokens = Vec::new();
    let mut word = String::new();
    let chars: Vec<char> = text.chars().map(normalize_char).collect();
    for (i, &c) in chars.iter().enumerate() {
        if c.is_alphanumeric() {
            word.extend(c.to_lowercase());
        } else if c == '\''
            && !word.is_empty()
            && chars.get(i + 1).is_some_and(|n| n.is_alphanumeric())
        {
            word.push('\'');
        } else {
            if !word.is_empty() {
                tokens.push(std::mem::take(&mut word));
            }
            if !c.is_whitespace() && c != '\'' {
                tokens.push(c.to_string());
            }
        }
    }
    if !word.is_empty() {
        tokens.push(word);
    }
    TokenSequence {
        tokens,
        provenance: provenance.to_string(),
        lemma_mode: LemmaMode::None,
    }
}

fn normalize_char(c: char) -> char {
    match c {
        '\u{2019}' | '\u{2018}' => '\'',
        other => other,
    }
}

/// Lowercase words removed before network construction.
#[derive(Debug, Clone)]
pub struct StopwordList {
    words: HashSet<String>,
}

impl StopwordList {
    /// The shipped default English list.
    pub fn default_english() -> Self {
        Self::from_text(include_str!("../data/stopwords_en.txt"))
    }

    pub fn empty() -> Self {
        StopwordList {
            words: HashSet::new(),
        }
    }

    /// One lowercase word per line.
    pub fn from_text(text: &str) -> Self {
        StopwordList {
            words: text
                .lines()
                .map(|l| l.trim().to_lowercase())
                .filter(|l| !l.is_empty())
                .collect(),
        }
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Ok(Self::from_text(&text))
    }

    pub fn contains(&self, token: &str) -> bool {
        self.words.contains(token)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

fn is_punctuation(token: &str) -> bool {
    !token.chars().any(|c| c.is_alphanumeric())
}

/// Remove stopwords and punctuation tokens, preserving order.
///
/// Punctuation is always removed regardless of list content.
pub fn remove_stopwords(seq: &TokenSequence, list: &StopwordList) -> TokenSequence {
    TokenSequence {
        tokens: seq
            .tokens
            .iter()
            .filter(|t| !is_punctuation(t) && !list.contains(t))
            .cloned()
            .collect(),
        provenance: seq.provenance.clone(),
        lemma_mode: seq.lemma_mode,
    }
}

/// One suffix rewrite: first matching rule in the list wins.
#[derive(Debug, Clone)]
pub struct SuffixRule {
    pub pattern: String,
    pub replacement: String,
    /// After stripping, collapse a trailing doubled consonant (runn -> run).
    pub undouble: bool,
}

impl SuffixRule {
    fn new(pattern: &str, replacement: &str, undouble: bool) -> Self {
        SuffixRule {
            pattern: pattern.to_string(),
            replacement: replacement.to_string(),
            undouble,
        }
    }

    fn apply(&self, token: &str) -> Option<String> {
        let stem = token.strip_suffix(self.pattern.as_str())?;
        if stem.len() < 2 {
            return None;
        }
        let mut out = stem.to_string();
        if self.undouble {
            let b = out.as_bytes();
            let n = b.len();
            if n >= 2 && b[n - 1] == b[n - 2] && DOUBLED.contains(&b[n - 1]) {
                out.pop();
            }
        }
        out.push_str(&self.replacement);
        Some(out)
    }
}

const DOUBLED: [u8; 10] = [b'b', b'd', b'g', b'k', b'm', b'n', b'p', b'r', b't', b'z'];

/// Dictionary + suffix-rule lemmatizer tables.
#[derive(Debug, Clone)]
pub struct LemmaTable {
    pub noun_map: HashMap<String, String>,
    pub verb_map: HashMap<String, String>,
    pub noun_rules: Vec<SuffixRule>,
    pub verb_rules: Vec<SuffixRule>,
    /// Tokens exempt from noun suffix rules.
    pub noun_exceptions: HashSet<String>,
    /// Tokens exempt from verb suffix rules.
    pub verb_exceptions: HashSet<String>,
}

impl LemmaTable {
    /// Shipped default: irregular noun/verb dictionaries plus the standard
    /// plural and inflection suffix rules.
    pub fn default_english() -> Self {
        let mut table = LemmaTable::from_tsv(include_str!("../data/lemmas_en.tsv"))
            .expect("bundled lemma table is well-formed");
        table.noun_rules = Self::default_noun_rules();
        table.verb_rules = Self::default_verb_rules();
        table.verb_exceptions = ["during", "thing", "things", "king", "kings", "nothing"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        table
    }

    pub fn default_noun_rules() -> Vec<SuffixRule> {
        vec![
            SuffixRule::new("ies", "y", false),
            SuffixRule::new("ses", "s", false),
            SuffixRule::new("s", "", false),
        ]
    }

    pub fn default_verb_rules() -> Vec<SuffixRule> {
        vec![
            SuffixRule::new("ied", "y", false),
            SuffixRule::new("ing", "", true),
            SuffixRule::new("ed", "", true),
        ]
    }

    /// Parse a TSV of (surface, lemma, pos) rows with pos in {N, V}.
    /// Suffix rules are not part of the file format; the defaults apply.
    pub fn from_tsv(text: &str) -> Result<Self> {
        let mut noun_map = HashMap::new();
        let mut verb_map = HashMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut cols = line.split('\t');
            let (surface, lemma, pos) = match (cols.next(), cols.next(), cols.next()) {
                (Some(s), Some(l), Some(p)) => (s.trim(), l.trim(), p.trim()),
                _ => {
                    return Err(Error::Config(format!(
                        "lemma table line {}: expected 3 tab-separated columns",
                        lineno + 1
                    )))
                }
            };
            match pos {
                "N" => noun_map.insert(surface.to_lowercase(), lemma.to_lowercase()),
                "V" => verb_map.insert(surface.to_lowercase(), lemma.to_lowercase()),
                other => {
                    return Err(Error::Config(format!(
                        "lemma table line {}: pos must be N or V, got {other:?}",
                        lineno + 1
                    )))
                }
            };
        }
        Ok(LemmaTable {
            noun_map,
            verb_map,
            noun_rules: Self::default_noun_rules(),
            verb_rules: Self::default_verb_rules(),
            noun_exceptions: HashSet::new(),
            verb_exceptions: HashSet::new(),
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut table = Self::from_tsv(&text)?;
        table.noun_rules = Self::default_noun_rules();
        table.verb_rules = Self::default_verb_rules();
        Ok(table)
    }

    fn noun_step(&self, token: &str) -> String {
        if let Some(lemma) = self.noun_map.get(token) {
            return lemma.clone();
        }
        if self.noun_exceptions.contains(token)
            || token.ends_with("ss")
            || token.ends_with("us")
            || token.ends_with("is")
        {
            return token.to_string();
        }
        for rule in &self.noun_rules {
            if let Some(out) = rule.apply(token) {
                return out;
            }
        }
        token.to_string()
    }

    fn verb_step(&self, token: &str) -> String {
        if let Some(lemma) = self.verb_map.get(token) {
            return lemma.clone();
        }
        if self.verb_exceptions.contains(token) {
            return token.to_string();
        }
        for rule in &self.verb_rules {
            if let Some(out) = rule.apply(token) {
                return out;
            }
        }
        token.to_string()
    }

    /// Map one token under the given mode.
    pub fn lemma_of(&self, token: &str, mode: LemmaMode) -> String {
        match mode {
            LemmaMode::None => token.to_string(),
            LemmaMode::Partial => self.noun_step(token),
            // Full composes the verb step on top of the noun step, so the
            // full vocabulary is an image of the partial one.
            LemmaMode::Full => self.verb_step(&self.noun_step(token)),
        }
    }
}

/// Lemmatize every token; sequence length is unchanged.
pub fn lemmatize(seq: &TokenSequence, table: &LemmaTable, mode: LemmaMode) -> TokenSequence {
    TokenSequence {
        tokens: seq
            .tokens
            .iter()
            .map(|t| table.lemma_of(t, mode))
            .collect(),
        provenance: seq.provenance.clone(),
        lemma_mode: mode,
    }
}

/// Result of fetching one document.
#[derive(Debug, Clone)]
pub struct FetchedDocument {
    pub text: String,
    /// False when the boilerplate start/end markers were not found and the
    /// full text was returned instead.
    pub boilerplate_stripped: bool,
    pub from_cache: bool,
}

const START_MARKER: &str = "*** START OF";
const END_MARKER: &str = "*** END OF";

/// Strip repository boilerplate delimited by the standard marker lines.
/// Returns (body, stripped?).
pub fn strip_boilerplate(text: &str) -> (String, bool) {
    let start = text.lines().position(|l| l.contains(START_MARKER));
    let end = text.lines().position(|l| l.contains(END_MARKER));
    match (start, end) {
        (Some(s), Some(e)) if e > s => {
            let body: Vec<&str> = text.lines().take(e).skip(s + 1).collect();
            (body.join("\n"), true)
        }
        _ => (text.to_string(), false),
    }
}

fn cache_path(cache_dir: &Path, id: &str) -> PathBuf {
    let safe: String = id
        .chars()
        .map(|c| if c.is_alphanumeric() { c } else { '_' })
        .collect();
    cache_dir.join(format!("{safe}.txt"))
}

fn candidate_urls(id: &str) -> Vec<String> {
    if id.starts_with("http://") || id.starts_with("https://") {
        return vec![id.to_string()];
    }
    let id = id.strip_prefix("gutenberg:").unwrap_or(id);
    vec![
        format!("https://www.gutenberg.org/cache/epub/{id}/pg{id}.txt"),
        format!("https://www.gutenberg.org/files/{id}/{id}-0.txt"),
        format!("https://www.gutenberg.org/files/{id}/{id}.txt"),
    ]
}

/// Fetch a document by remote identifier, caching the raw text on disk.
///
/// A cached copy short-circuits the network entirely. On a miss the
/// repository mirror URLs are tried in order; the raw text is cached and
/// the boilerplate-stripped body returned.
pub fn fetch_document(id: &str, cache_dir: &Path) -> Result<FetchedDocument> {
    let path = cache_path(cache_dir, id);
    if path.exists() {
        let raw = fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
        let (text, stripped) = strip_boilerplate(&raw);
        return Ok(FetchedDocument {
            text,
            boilerplate_stripped: stripped,
            from_cache: true,
        });
    }
    let client = reqwest::blocking::Client::builder()
        .user_agent("llna-corpus-fetcher")
        .timeout(std::time::Duration::from_secs(60))
        .build()
        .map_err(|e| Error::Fetch {
            id: id.to_string(),
            reason: e.to_string(),
        })?;
    let mut last_err = String::from("no candidate URL");
    for url in candidate_urls(id) {
        match client.get(&url).send() {
            Ok(resp) if resp.status().is_success() => {
                let raw = resp.text().map_err(|e| Error::Fetch {
                    id: id.to_string(),
                    reason: e.to_string(),
                })?;
                fs::create_dir_all(cache_dir).map_err(|e| Error::io(cache_dir, e))?;
                let tmp = path.with_extension("tmp");
                let mut f = fs::File::create(&tmp).map_err(|e| Error::io(&tmp, e))?;
                f.write_all(raw.as_bytes()).map_err(|e| Error::io(&tmp, e))?;
                fs::rename(&tmp, &path).map_err(|e| Error::io(&path, e))?;
                let (text, stripped) = strip_boilerplate(&raw);
                return Ok(FetchedDocument {
                    text,
                    boilerplate_stripped: stripped,
                    from_cache: false,
                });
            }
            Ok(resp) => last_err = format!("{url}: HTTP {}", resp.status()),
            Err(e) => last_err = format!("{url}: {e}"),
        }
    }
    Err(Error::Fetch {
        id: id.to_string(),
        reason: last_err,
    })
}

/// Load a document from a manifest entry: local path or remote id.
pub fn load_document(entry: &ManifestEntry, cache_dir: &Path) -> Result<String> {
    let p = Path::new(&entry.source);
    if p.exists() {
        let raw = fs::read_to_string(p).map_err(|e| Error::io(p, e))?;
        return Ok(strip_boilerplate(&raw).0);
    }
    Ok(fetch_document(&entry.source, cache_dir)?.text)
}

/// Full pre-processing pipeline: tokenize, filter, lemmatize.
pub fn preprocess(
    text: &str,
    provenance: &str,
    stopwords: &StopwordList,
    table: &LemmaTable,
    mode: LemmaMode,
) -> TokenSequence {
    let seq = tokenize(text, provenance);
    let seq = remove_stopwords(&seq, stopwords);
    lemmatize(&seq, table, mode)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(seq: &TokenSequence) -> Vec<&str> {
        seq.tokens.iter().map(|s| s.as_str()).collect()
    }

    #[test]
    fn tokenize_words_and_punctuation() {
        let seq = tokenize("The cat, the mat.", "t");
        assert_eq!(toks(&seq), ["the", "cat", ",", "the", "mat", "."]);
    }

    #[test]
    fn tokenize_empty() {
        assert!(tokenize("", "t").tokens.is_empty());
    }

    #[test]
    fn tokenize_internal_apostrophe() {
        let seq = tokenize("Don't stop", "t");
        assert_eq!(toks(&seq), ["don't", "stop"]);
    }

    #[test]
    fn tokenize_hyphen_splits() {
        let seq = tokenize("well-known", "t");
        assert_eq!(toks(&seq), ["well", "-", "known"]);
    }

    #[test]
    fn tokenize_trailing_apostrophe_is_dropped() {
        let seq = tokenize("dogs' bones", "t");
        assert_eq!(toks(&seq), ["dogs", "bones"]);
    }

    #[test]
    fn stopwords_and_punctuation_removed() {
        let seq = tokenize("The cat, the mat.", "t");
        let mut list = StopwordList::empty();
        list.words.insert("the".into());
        let out = remove_stopwords(&seq, &list);
        assert_eq!(toks(&out), ["cat", "mat"]);
    }

    #[test]
    fn stopwords_identity_on_clean_input() {
        let seq = tokenize("cat mat", "t");
        let out = remove_stopwords(&seq, &StopwordList::empty());
        assert_eq!(toks(&out), ["cat", "mat"]);
    }

    #[test]
    fn stopwords_total_removal() {
        let seq = tokenize("the the the", "t");
        let mut list = StopwordList::empty();
        list.words.insert("the".into());
        assert!(remove_stopwords(&seq, &list).tokens.is_empty());
    }

    #[test]
    fn stopword_output_is_subsequence() {
        let seq = tokenize("a quick brown fox, jumps over the lazy dog.", "t");
        let out = remove_stopwords(&seq, &StopwordList::default_english());
        let mut it = seq.tokens.iter();
        for t in &out.tokens {
            assert!(it.any(|u| u == t), "{t} out of order");
        }
    }

    #[test]
    fn lemmatize_modes() {
        let table = LemmaTable::default_english();
        let seq = tokenize("cats running", "t");
        assert_eq!(
            toks(&lemmatize(&seq, &table, LemmaMode::None)),
            ["cats", "running"]
        );
        assert_eq!(
            toks(&lemmatize(&seq, &table, LemmaMode::Partial)),
            ["cat", "running"]
        );
        assert_eq!(
            toks(&lemmatize(&seq, &table, LemmaMode::Full)),
            ["cat", "run"]
        );
    }

    #[test]
    fn lemmatize_suffix_rules() {
        let table = LemmaTable::default_english();
        assert_eq!(table.lemma_of("ladies", LemmaMode::Partial), "lady");
        assert_eq!(table.lemma_of("glasses", LemmaMode::Partial), "glass");
        assert_eq!(table.lemma_of("glass", LemmaMode::Partial), "glass");
        assert_eq!(table.lemma_of("carried", LemmaMode::Full), "carry");
        assert_eq!(table.lemma_of("walked", LemmaMode::Full), "walk");
        assert_eq!(table.lemma_of("thing", LemmaMode::Full), "thing");
    }

    #[test]
    fn lemmatize_idempotent_on_fixed_point_table() {
        let table = LemmaTable::default_english();
        let seq = tokenize("men women children horses walked carried seeing", "t");
        for mode in LemmaMode::ALL {
            let once = lemmatize(&seq, &table, mode);
            let twice = lemmatize(&once, &table, mode);
            assert_eq!(once.tokens, twice.tokens, "mode {mode:?}");
        }
    }

    #[test]
    fn vocabulary_is_monotone_across_modes() {
        let table = LemmaTable::default_english();
        let text = "the men saw cats and dogs running while children played \
                    games; horses walked, mice hid, and stories were told";
        let seq = remove_stopwords(&tokenize(text, "t"), &StopwordList::default_english());
        let vocab = |mode| {
            lemmatize(&seq, &table, mode)
                .tokens
                .iter()
                .cloned()
                .collect::<HashSet<_>>()
                .len()
        };
        assert!(vocab(LemmaMode::Full) <= vocab(LemmaMode::Partial));
        assert!(vocab(LemmaMode::Partial) <= vocab(LemmaMode::None));
    }

    #[test]
    fn boilerplate_stripping() {
        let raw = "junk\n*** START OF THE PROJECT GUTENBERG EBOOK X ***\nbody line\n*** END OF THE PROJECT GUTENBERG EBOOK X ***\nmore junk";
        let (body, stripped) = strip_boilerplate(raw);
        assert!(stripped);
        assert_eq!(body, "body line");
        let (full, stripped) = strip_boilerplate("no markers at all");
        assert!(!stripped);
        assert_eq!(full, "no markers at all");
    }

    #[test]
    fn cache_hit_avoids_network() {
        let dir = tempfile::tempdir().unwrap();
        let path = cache_path(dir.path(), "108");
        fs::write(&path, "cached text").unwrap();
        let doc = fetch_document("108", dir.path()).unwrap();
        assert!(doc.from_cache);
        assert!(!doc.boilerplate_stripped);
        assert_eq!(doc.text, "cached text");
    }

    #[test]
    fn manifest_rejects_duplicates() {
        let m = CorpusManifest {
            entries: vec![
                ManifestEntry {
                    author: "A".into(),
                    title: "T".into(),
                    source: "1".into(),
                    dataset_role: DatasetRole::Validation,
                },
                ManifestEntry {
                    author: "A".into(),
                    title: "T".into(),
                    source: "2".into(),
                    dataset_role: DatasetRole::Validation,
                },
            ],
        };
        assert!(m.validate().is_err());
    }

    #[test]
    fn preprocess_is_deterministic() {
        let stop = StopwordList::default_english();
        let table = LemmaTable::default_english();
        let a = preprocess("The cats ran home.", "d", &stop, &table, LemmaMode::Full);
        let b = preprocess("The cats ran home.", "d", &stop, &table, LemmaMode::Full);
        assert_eq!(a.tokens, b.tokens);
    }
}
