//! Passage corpus: ingestion, lookup, and the shared tokenizer.
//!
//! A corpus is an ordered set of pre-split passages loaded from a JSON-lines
//! file with one `{"id", "title", "text"}` object per line. Passages are
//! stored verbatim; all normalization happens in [`tokenize`] at query time.

use std::collections::HashMap;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One retrievable unit of text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Passage {
    pub id: String,
    pub title: String,
    pub text: String,
}

/// Immutable, ordered collection of passages with id lookup.
///
/// Iteration order equals ingestion order, and ids are unique; both are
/// enforced at construction so every consumer can rely on them.
#[derive(Debug, Clone, Default)]
pub struct Corpus {
    passages: Vec<Passage>,
    by_id: HashMap<String, usize>,
}

impl Corpus {
    /// Build a corpus from passages, checking id uniqueness.
    ///
    /// Line numbers in errors are 1-based positions in `passages`.
    pub fn from_passages(passages: Vec<Passage>) -> Result<Self> {
        let mut by_id = HashMap::with_capacity(passages.len());
        for (i, p) in passages.iter().enumerate() {
            if p.id.is_empty() {
                return Err(Error::MalformedLine {
                    line: i + 1,
                    message: "empty id".into(),
                });
            }
            if by_id.insert(p.id.clone(), i).is_some() {
                return Err(Error::DuplicateId {
                    id: p.id.clone(),
                    line: i + 1,
                });
            }
        }
        Ok(Corpus { passages, by_id })
    }

    /// Ingest a JSON-lines corpus file. Unknown keys are ignored; blank
    /// lines are not allowed (they are malformed records).
    pub fn from_jsonl(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
        let reader = BufReader::new(file);

        let mut passages = Vec::new();
        for (i, line) in reader.lines().enumerate() {
            let line = line.map_err(|e| Error::io(path, e))?;
            let passage: Passage =
                serde_json::from_str(&line).map_err(|e| Error::MalformedLine {
                    line: i + 1,
                    message: e.to_string(),
                })?;
            passages.push(passage);
        }
        Self::from_passages(passages)
    }

    /// Serialize back to JSON lines. Round-trips exactly with
    /// [`Corpus::from_jsonl`].
    pub fn write_jsonl(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        let mut file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
        for p in &self.passages {
            let line = serde_json::to_string(p).expect("passage serializes");
            writeln!(file, "{line}").map_err(|e| Error::io(path, e))?;
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.passages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.passages.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&Passage> {
        self.by_id.get(id).map(|&i| &self.passages[i])
    }

    /// Position of a passage id in ingestion order.
    pub fn position(&self, id: &str) -> Option<usize> {
        self.by_id.get(id).copied()
    }

    pub fn passage(&self, position: usize) -> &Passage {
        &self.passages[position]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Passage> {
        self.passages.iter()
    }
}

/// Lowercase tokens split on every non-alphanumeric character.
///
/// Empty fragments are dropped; no stemming, no stopword removal. Both the
/// retriever and the TF-IDF reranker use this tokenizer so their vocabularies
/// agree.
pub fn tokenize(text: &str) -> Vec<String> {
    text.split(|c: char| !c.is_alphanumeric())
        .filter(|s| !s.is_empty())
        .map(|s| s.to_lowercase())
        .collect()
}
