//! Term-frequency, inverse-document-frequency and TF-IDF weight matrices.
//!
//! Actors play the role of words and posted objects the role of documents.
//! For actor `j` and object `i`:
//!
//! ```text
//! idf_j   = log2(|D| / df_j)        df_j = number of objects actor j acted on
//! w_{j,i} = tf_{j,i} * idf_j
//! ```
//!
//! No length normalisation and no idf smoothing are applied. Row `i` of the
//! weight matrix is the document vector of object `i`.

use std::fmt;
use std::str::FromStr;

use crate::corpus::{ActivityCorpus, ActorId, ObjectId};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// How raw action counts become term frequencies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TfMode {
    /// 1 if the actor acted on the object at all, else 0.
    #[default]
    Binary,
    /// The aggregated number of actions.
    RawCount,
}

impl FromStr for TfMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "binary" => Ok(Self::Binary),
            "raw_count" => Ok(Self::RawCount),
            other => Err(Error::InvalidArgument(format!(
                "unknown tf mode {other:?} (expected binary or raw_count)"
            ))),
        }
    }
}

impl fmt::Display for TfMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Binary => "binary",
            Self::RawCount => "raw_count",
        })
    }
}

/// Text rendering of weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DisplayMode {
    /// Six decimals, ties rounded to even.
    #[default]
    Full,
    /// Three decimals truncated toward zero, i.e. `1.58496` prints as `1.584`.
    Paper,
}

impl DisplayMode {
    /// Exact zeros always render as `0`.
    pub fn render<T: Scalar>(self, value: T) -> String {
        if value.is_zero() {
            return "0".to_owned();
        }
        match self {
            Self::Full => format!("{value:.6}"),
            Self::Paper => truncate_decimals(&format!("{value:.20}"), 3),
        }
    }
}

fn truncate_decimals(expanded: &str, places: usize) -> String {
    match expanded.find('.') {
        Some(dot) => expanded[..(dot + 1 + places).min(expanded.len())].to_owned(),
        None => expanded.to_owned(),
    }
}

impl FromStr for DisplayMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Self::Full),
            "paper" => Ok(Self::Paper),
            other => Err(Error::InvalidArgument(format!(
                "unknown display mode {other:?} (expected full or paper)"
            ))),
        }
    }
}

fn check_shape(rows: usize, cols: usize, len: usize) -> Result<()> {
    if rows * cols != len {
        return Err(Error::Shape {
            expected: format!("{rows}x{cols} = {} values", rows * cols),
            found: format!("{len} values"),
        });
    }
    Ok(())
}

/// Dense documents x actors matrix of term frequencies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermFrequencyMatrix {
    objects: Vec<ObjectId>,
    actors: Vec<ActorId>,
    values: Vec<u64>,
}

impl TermFrequencyMatrix {
    pub fn new(objects: Vec<ObjectId>, actors: Vec<ActorId>, values: Vec<u64>) -> Result<Self> {
        check_shape(objects.len(), actors.len(), values.len())?;
        Ok(Self {
            objects,
            actors,
            values,
        })
    }

    pub fn rows(&self) -> usize {
        self.objects.len()
    }

    pub fn cols(&self) -> usize {
        self.actors.len()
    }

    pub fn get(&self, row: usize, col: usize) -> u64 {
        assert!(
            row < self.rows() && col < self.cols(),
            "index out of bounds"
        );
        self.values[row * self.cols() + col]
    }

    pub fn row(&self, row: usize) -> &[u64] {
        let n = self.cols();
        &self.values[row * n..(row + 1) * n]
    }

    pub fn objects(&self) -> &[ObjectId] {
        &self.objects
    }

    pub fn actors(&self) -> &[ActorId] {
        &self.actors
    }
}

/// One idf value per vocabulary actor.
#[derive(Debug, Clone, PartialEq)]
pub struct IdfVector<T> {
    actors: Vec<ActorId>,
    values: Vec<T>,
}

impl<T: Scalar> IdfVector<T> {
    pub fn new(actors: Vec<ActorId>, values: Vec<T>) -> Result<Self> {
        check_shape(1, actors.len(), values.len())?;
        Ok(Self { actors, values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn actors(&self) -> &[ActorId] {
        &self.actors
    }

    pub fn get(&self, actor: &ActorId) -> Option<T> {
        self.actors
            .iter()
            .position(|a| a == actor)
            .map(|j| self.values[j])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ActorId, T)> {
        self.actors.iter().zip(self.values.iter().copied())
    }
}

/// Dense documents x actors matrix of TF-IDF weights.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightMatrix<T> {
    objects: Vec<ObjectId>,
    actors: Vec<ActorId>,
    values: Vec<T>,
}

impl<T: Scalar> WeightMatrix<T> {
    /// Builds a matrix from row-major values. Weights must be finite and
    /// nonnegative.
    pub fn new(objects: Vec<ObjectId>, actors: Vec<ActorId>, values: Vec<T>) -> Result<Self> {
        check_shape(objects.len(), actors.len(), values.len())?;
        if let Some(bad) = values.iter().find(|v| !v.is_finite() || **v < T::zero()) {
            return Err(Error::InvalidArgument(format!(
                "weights must be finite and nonnegative, got {bad}"
            )));
        }
        Ok(Self {
            objects,
            actors,
            values,
        })
    }

    pub fn rows(&self) -> usize {
        self.objects.len()
    }

    pub fn cols(&self) -> usize {
        self.actors.len()
    }

    pub fn get(&self, row: usize, col: usize) -> T {
        assert!(
            row < self.rows() && col < self.cols(),
            "index out of bounds"
        );
        self.values[row * self.cols() + col]
    }

    pub fn row(&self, row: usize) -> &[T] {
        let n = self.cols();
        &self.values[row * n..(row + 1) * n]
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn objects(&self) -> &[ObjectId] {
        &self.objects
    }

    pub fn actors(&self) -> &[ActorId] {
        &self.actors
    }

    pub fn row_of(&self, object: &ObjectId) -> Option<usize> {
        self.objects.iter().position(|o| o == object)
    }

    pub fn document_vector(&self, object: &ObjectId) -> Result<Vec<(ActorId, T)>> {
        document_vector(self, object)
    }
}

pub fn term_frequency(corpus: &ActivityCorpus, mode: TfMode) -> Result<TermFrequencyMatrix> {
    if corpus.num_documents() == 0 {
        return Err(Error::EmptyCorpus);
    }
    let vocab = corpus.vocabulary();
    let cols = vocab.len();
    let mut values = vec![0u64; corpus.num_documents() * cols];
    for (i, doc) in corpus.documents().iter().enumerate() {
        for (actor, count) in doc.actors() {
            let j = vocab
                .get_index_of(actor)
                .expect("document actors are in the vocabulary");
            values[i * cols + j] = match mode {
                TfMode::Binary => 1,
                TfMode::RawCount => count,
            };
        }
    }
    TermFrequencyMatrix::new(
        corpus.objects().cloned().collect(),
        vocab.iter().cloned().collect(),
        values,
    )
}

pub fn inverse_document_frequency<T: Scalar>(corpus: &ActivityCorpus) -> Result<IdfVector<T>> {
    let total = corpus.num_documents();
    if total == 0 {
        return Err(Error::EmptyCorpus);
    }
    let vocab = corpus.vocabulary();
    let mut df = vec![0usize; vocab.len()];
    for doc in corpus.documents() {
        for (actor, _) in doc.actors() {
            df[vocab.get_index_of(actor).expect("actor in vocabulary")] += 1;
        }
    }
    let total = T::from_count(total);
    let values = df
        .into_iter()
        .map(|n| {
            debug_assert!(n > 0);
            (total / T::from_count(n)).log2()
        })
        .collect();
    IdfVector::new(vocab.iter().cloned().collect(), values)
}

pub fn tfidf<T: Scalar>(tf: &TermFrequencyMatrix, idf: &IdfVector<T>) -> Result<WeightMatrix<T>> {
    if tf.cols() != idf.len() {
        return Err(Error::Shape {
            expected: format!("idf of length {}", tf.cols()),
            found: format!("length {}", idf.len()),
        });
    }
    let cols = tf.cols();
    let values = tf
        .values
        .iter()
        .enumerate()
        .map(|(k, &count)| {
            if count == 0 {
                T::zero()
            } else {
                T::from_u64(count).expect("count representable") * idf.values[k % cols]
            }
        })
        .collect();
    WeightMatrix::new(tf.objects.clone(), tf.actors.clone(), values)
}

/// Full row of `object`, in vocabulary order, zeros included.
pub fn document_vector<T: Scalar>(
    weights: &WeightMatrix<T>,
    object: &ObjectId,
) -> Result<Vec<(ActorId, T)>> {
    let row = weights
        .row_of(object)
        .ok_or_else(|| Error::NotFound(format!("object {object}")))?;
    Ok(weights
        .actors
        .iter()
        .cloned()
        .zip(weights.row(row).iter().copied())
        .collect())
}

/// Term frequencies, idf and weights in one pass over a corpus.
pub fn vectorize<T: Scalar>(
    corpus: &ActivityCorpus,
    mode: TfMode,
) -> Result<(IdfVector<T>, WeightMatrix<T>)> {
    let tf = term_frequency(corpus, mode)?;
    let idf = inverse_document_frequency(corpus)?;
    let weights = tfidf(&tf, &idf)?;
    Ok((idf, weights))
}
