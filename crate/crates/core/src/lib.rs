//! Vector-space analysis of activity on posted content in online social
//! networks.
//!
//! Activity logs (who viewed, liked or commented on which post) are read into
//! an [`ActivityCorpus`] where every posted object is a document and every
//! actor a term. The corpus is turned into TF-IDF weights
//! (`w = tf * log2(|D| / df)`), the weights into a bipartite object/actor
//! graph, and the graph into a statistics panel (diameter, radius, average
//! path length, shortest-path count, average weighted degree, density) or a
//! GEXF/DOT/CSV file for Gephi and friends.
//!
//! ```
//! use activity_vec::{build_corpus, build_graph, parse_jsonl_str, statistics, vectorize};
//! use activity_vec::{GraphOptions, TfMode};
//!
//! let log = r#"{"object":"d1","actor":"UID1"}
//! {"object":"d1","actor":"UID2"}
//! {"object":"d2","actor":"UID2"}
//! {"object":"d2","actor":"UID3"}"#;
//! let corpus = build_corpus(&parse_jsonl_str(log)?)?;
//! let (_idf, weights) = vectorize::<f64>(&corpus, TfMode::Binary)?;
//! let graph = build_graph(&weights, &GraphOptions::default())?;
//! assert_eq!(graph.edge_count(), 2); // UID2 is in every document
//! assert_eq!(statistics(&graph)?.component_count, 2);
//! # Ok::<(), activity_vec::Error>(())
//! ```
//!
//! Numeric types are generic over [`Scalar`] (`f32` or `f64`); the `*F64`
//! and `*F32` aliases below name the common instantiations.

pub mod corpus;
pub mod error;
pub mod export;
pub mod graph;
pub mod scalar;
pub mod vectorizer;

pub use corpus::{
    build_corpus, parse_csv, parse_csv_str, parse_jsonl, parse_jsonl_str, ActivityCorpus,
    ActivityRecord, ActorId, Document, ObjectId,
};
pub use error::{Error, Result};
pub use export::{
    corpus_csv, edge_csv, matrix_csv, parse_edge_csv, parse_edge_csv_str, to_dot, to_gexf,
    ExportFormat,
};
pub use graph::{
    all_pairs_distances, build_graph, connected_components, degree_statistics, eccentricity,
    statistics, BipartiteGraph, DegreeStatistics, DistanceMatrix, Edge, GraphOptions,
    GraphStatistics, Node, NodeKind,
};
pub use scalar::Scalar;
pub use vectorizer::{
    document_vector, inverse_document_frequency, term_frequency, tfidf, vectorize, DisplayMode,
    IdfVector, TermFrequencyMatrix, TfMode, WeightMatrix,
};

pub type IdfVectorF64 = IdfVector<f64>;
pub type WeightMatrixF64 = WeightMatrix<f64>;
pub type BipartiteGraphF64 = BipartiteGraph<f64>;
pub type GraphStatisticsF64 = GraphStatistics<f64>;

pub type IdfVectorF32 = IdfVector<f32>;
pub type WeightMatrixF32 = WeightMatrix<f32>;
pub type BipartiteGraphF32 = BipartiteGraph<f32>;
pub type GraphStatisticsF32 = GraphStatistics<f32>;
