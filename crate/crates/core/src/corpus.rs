//! Activity-log ingestion.
//!
//! Each posted object (photo, status update, ...) becomes one document whose
//! "words" are the actors that viewed, rated or commented on it. Two input
//! formats are accepted:
//!
//! * JSONL, one `{"object": "...", "actor": "...", "count": n}` per line
//!   (`count` defaults to 1);
//! * CSV with the header `object_id,actor_id,count` (the count column may be
//!   left out entirely or left empty on a row).

use std::collections::HashMap;
use std::fmt;
use std::io::{BufRead, Read};

use indexmap::{IndexMap, IndexSet};
use serde_json::Value;

use crate::error::{Error, Result};

pub const CSV_HEADER: [&str; 3] = ["object_id", "actor_id", "count"];

fn check_identifier(kind: &str, value: &str) -> std::result::Result<(), String> {
    if value.is_empty() {
        return Err(format!("{kind} identifier is empty"));
    }
    if value.trim() != value {
        return Err(format!(
            "{kind} identifier {value:?} has leading or trailing whitespace"
        ));
    }
    Ok(())
}

macro_rules! identifier {
    ($(#[$meta:meta])* $name:ident, $kind:literal) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(String);

        impl $name {
            pub fn new(value: impl Into<String>) -> Result<Self> {
                let value = value.into();
                check_identifier($kind, &value).map_err(Error::InvalidArgument)?;
                Ok(Self(value))
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl AsRef<str> for $name {
            fn as_ref(&self) -> &str {
                &self.0
            }
        }
    };
}

identifier!(
    /// A user acting on posted content. Compared byte for byte.
    ActorId,
    "actor"
);
identifier!(
    /// A posted object; one document of the corpus.
    ObjectId,
    "object"
);

/// One line of an activity log: `actor` acted `count` times on `object`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActivityRecord {
    pub object: ObjectId,
    pub actor: ActorId,
    pub count: u64,
}

impl ActivityRecord {
    pub fn new(object: ObjectId, actor: ActorId, count: u64) -> Result<Self> {
        if count == 0 {
            return Err(Error::InvalidArgument(
                "activity count must be at least 1".into(),
            ));
        }
        Ok(Self {
            object,
            actor,
            count,
        })
    }
}

fn record_at(line: usize, object: &str, actor: &str, count: u64) -> Result<ActivityRecord> {
    let validation = |message: String| Error::Validation { line, message };
    check_identifier("object", object).map_err(validation)?;
    check_identifier("actor", actor).map_err(validation)?;
    if count == 0 {
        return Err(validation("count must be at least 1".into()));
    }
    Ok(ActivityRecord {
        object: ObjectId(object.to_owned()),
        actor: ActorId(actor.to_owned()),
        count,
    })
}

/// Parses JSONL activity records. Blank lines are skipped; LF and CRLF are
/// both accepted.
pub fn parse_jsonl<R: BufRead>(reader: R) -> Result<Vec<ActivityRecord>> {
    let mut records = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let value: Value = serde_json::from_str(&line).map_err(|e| Error::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
        let Value::Object(map) = value else {
            return Err(Error::Parse {
                line: line_no,
                message: "expected a JSON object".into(),
            });
        };
        let text_field = |field: &'static str| -> Result<&str> {
            match map.get(field) {
                None => Err(Error::Schema {
                    line: line_no,
                    field,
                }),
                Some(Value::String(s)) => Ok(s.as_str()),
                Some(other) => Err(Error::Validation {
                    line: line_no,
                    message: format!("`{field}` must be a string, got {other}"),
                }),
            }
        };
        let object = text_field("object")?;
        let actor = text_field("actor")?;
        let count = match map.get("count") {
            None => 1,
            Some(v) => v.as_u64().ok_or_else(|| Error::Validation {
                line: line_no,
                message: format!("`count` must be a positive integer, got {v}"),
            })?,
        };
        records.push(record_at(line_no, object, actor, count)?);
    }
    Ok(records)
}

pub fn parse_jsonl_str(input: &str) -> Result<Vec<ActivityRecord>> {
    parse_jsonl(input.as_bytes())
}

/// Parses CSV activity records with the header `object_id,actor_id,count`
/// or `object_id,actor_id`.
pub fn parse_csv<R: Read>(reader: R) -> Result<Vec<ActivityRecord>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(reader);
    let mut rows = rdr.records();

    let header = match rows.next() {
        None => return Err(Error::Format("missing CSV header".into())),
        Some(row) => row.map_err(csv_error)?,
    };
    let columns = header.len();
    let header_ok = (columns == 2 || columns == 3)
        && header.iter().zip(CSV_HEADER.iter()).all(|(a, b)| a == *b);
    if !header_ok {
        return Err(Error::Format(format!(
            "expected header `{}` (count optional), got `{}`",
            CSV_HEADER.join(","),
            header.iter().collect::<Vec<_>>().join(",")
        )));
    }

    let mut records = Vec::new();
    for row in rows {
        let row = row.map_err(csv_error)?;
        let line = row.position().map_or(0, |p| p.line() as usize);
        if row.len() < 2 || row.len() > columns {
            return Err(Error::Validation {
                line,
                message: format!("expected 2..={columns} fields, got {}", row.len()),
            });
        }
        let count = match row.get(2) {
            None | Some("") => 1,
            Some(raw) => raw.parse::<u64>().map_err(|_| Error::Validation {
                line,
                message: format!("count {raw:?} is not a positive integer"),
            })?,
        };
        records.push(record_at(line, &row[0], &row[1], count)?);
    }
    Ok(records)
}

pub fn parse_csv_str(input: &str) -> Result<Vec<ActivityRecord>> {
    parse_csv(input.as_bytes())
}

fn csv_error(err: csv::Error) -> Error {
    let line = err.position().map_or(0, |p| p.line() as usize);
    match err.into_kind() {
        csv::ErrorKind::Io(e) => Error::Io(e),
        kind => Error::Parse {
            line,
            message: format!("{kind:?}"),
        },
    }
}

/// One posted object and the aggregated action counts of every actor on it,
/// in order of each actor's first appearance on this object.
#[derive(Debug, Clone)]
pub struct Document {
    object: ObjectId,
    counts: IndexMap<ActorId, u64>,
}

impl Document {
    pub fn object(&self) -> &ObjectId {
        &self.object
    }

    pub fn count(&self, actor: &ActorId) -> u64 {
        self.counts.get(actor).copied().unwrap_or(0)
    }

    pub fn actors(&self) -> impl ExactSizeIterator<Item = (&ActorId, u64)> {
        self.counts.iter().map(|(a, &c)| (a, c))
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

impl PartialEq for Document {
    fn eq(&self, other: &Self) -> bool {
        self.object == other.object && self.counts.iter().eq(other.counts.iter())
    }
}

/// The set of object documents built from an activity log.
///
/// Documents and vocabulary are ordered by first appearance in the input.
/// The corpus also remembers the first-appearance order of every
/// (object, actor) pair so that it can be written back out as a record list
/// that rebuilds to an identical corpus.
#[derive(Debug, Clone)]
pub struct ActivityCorpus {
    documents: Vec<Document>,
    vocabulary: IndexSet<ActorId>,
    pairs: Vec<(usize, usize)>,
}

impl PartialEq for ActivityCorpus {
    fn eq(&self, other: &Self) -> bool {
        self.documents == other.documents
            && self.vocabulary.iter().eq(other.vocabulary.iter())
            && self.pairs == other.pairs
    }
}

impl ActivityCorpus {
    pub fn documents(&self) -> &[Document] {
        &self.documents
    }

    pub fn document(&self, object: &ObjectId) -> Option<&Document> {
        self.documents.iter().find(|d| &d.object == object)
    }

    pub fn vocabulary(&self) -> &IndexSet<ActorId> {
        &self.vocabulary
    }

    pub fn objects(&self) -> impl ExactSizeIterator<Item = &ObjectId> {
        self.documents.iter().map(|d| &d.object)
    }

    pub fn num_documents(&self) -> usize {
        self.documents.len()
    }

    pub fn num_actors(&self) -> usize {
        self.vocabulary.len()
    }

    /// Aggregated records in first-appearance order of each (object, actor)
    /// pair.
    pub fn records(&self) -> impl Iterator<Item = ActivityRecord> + '_ {
        self.pairs.iter().map(move |&(d, a)| {
            let doc = &self.documents[d];
            let actor = &self.vocabulary[a];
            ActivityRecord {
                object: doc.object.clone(),
                actor: actor.clone(),
                count: doc.counts[actor],
            }
        })
    }
}

/// Aggregates records into a corpus, summing counts of repeated
/// (object, actor) pairs.
pub fn build_corpus(records: &[ActivityRecord]) -> Result<ActivityCorpus> {
    if records.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let mut documents: Vec<Document> = Vec::new();
    let mut doc_index: HashMap<&ObjectId, usize> = HashMap::new();
    let mut vocabulary: IndexSet<ActorId> = IndexSet::new();
    let mut pairs = Vec::new();

    for rec in records {
        let d = *doc_index.entry(&rec.object).or_insert_with(|| {
            documents.push(Document {
                object: rec.object.clone(),
                counts: IndexMap::new(),
            });
            documents.len() - 1
        });
        let (a, _) = vocabulary.insert_full(rec.actor.clone());
        let counts = &mut documents[d].counts;
        match counts.get_mut(&rec.actor) {
            Some(c) => {
                *c = c.checked_add(rec.count).ok_or_else(|| {
                    Error::InvalidArgument(format!(
                        "count overflow for ({}, {})",
                        rec.object, rec.actor
                    ))
                })?;
            }
            None => {
                counts.insert(rec.actor.clone(), rec.count);
                pairs.push((d, a));
            }
        }
    }

    Ok(ActivityCorpus {
        documents,
        vocabulary,
        pairs,
    })
}
