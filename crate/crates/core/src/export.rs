//! Text serializers: GEXF 1.2draft for Gephi, Graphviz DOT, and three CSV
//! layouts (edge list, weight matrix, activity records).
//!
//! All output uses LF line endings and is a pure function of its input.
//! GEXF and edge-list weights are written with the shortest decimal that
//! parses back to the same value.

use std::fmt::Write as _;
use std::io::Read;
use std::str::FromStr;

use crate::corpus::{ActivityCorpus, ActorId, ObjectId, CSV_HEADER};
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::scalar::Scalar;
use crate::vectorizer::{DisplayMode, WeightMatrix};

pub const GEXF_NAMESPACE: &str = "http://www.gexf.net/1.2draft";
pub const EDGE_CSV_HEADER: [&str; 3] = ["source", "target", "weight"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Gexf,
    Dot,
    EdgeCsv,
    MatrixCsv,
    CorpusCsv,
}

impl ExportFormat {
    pub fn name(self) -> &'static str {
        match self {
            Self::Gexf => "gexf",
            Self::Dot => "dot",
            Self::EdgeCsv => "edge-csv",
            Self::MatrixCsv => "matrix-csv",
            Self::CorpusCsv => "corpus-csv",
        }
    }
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gexf" => Ok(Self::Gexf),
            "dot" => Ok(Self::Dot),
            "edge-csv" | "edge_csv" => Ok(Self::EdgeCsv),
            "matrix-csv" | "matrix_csv" => Ok(Self::MatrixCsv),
            "corpus-csv" | "corpus_csv" => Ok(Self::CorpusCsv),
            other => Err(Error::InvalidArgument(format!(
                "unknown export format {other:?}"
            ))),
        }
    }
}

fn xml_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

/// GEXF document with an undirected default edge type. Node ids are the
/// node positions (`n0`, `n1`, ...) so that an object and an actor sharing a
/// label stay distinct; the identifier goes in `label` and the side in the
/// `type` node attribute.
pub fn to_gexf<T: Scalar>(graph: &BipartiteGraph<T>) -> String {
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(out, "<gexf xmlns=\"{GEXF_NAMESPACE}\" version=\"1.2\">");
    out.push_str("  <meta>\n    <creator>activity-vec</creator>\n  </meta>\n");
    out.push_str("  <graph mode=\"static\" defaultedgetype=\"undirected\">\n");
    out.push_str("    <attributes class=\"node\">\n");
    out.push_str("      <attribute id=\"type\" title=\"type\" type=\"string\"/>\n");
    out.push_str("    </attributes>\n");

    out.push_str("    <nodes>\n");
    for (i, node) in graph.nodes().iter().enumerate() {
        let _ = writeln!(
            out,
            "      <node id=\"n{i}\" label=\"{}\">\n        <attvalues>\n          <attvalue for=\"type\" value=\"{}\"/>\n        </attvalues>\n      </node>",
            xml_escape(node.label()),
            node.kind().as_str()
        );
    }
    out.push_str("    </nodes>\n");

    out.push_str("    <edges>\n");
    for (k, e) in graph.edges().iter().enumerate() {
        let _ = writeln!(
            out,
            "      <edge id=\"e{k}\" source=\"n{}\" target=\"n{}\" weight=\"{}\"/>",
            e.object, e.actor, e.weight
        );
    }
    out.push_str("    </edges>\n");
    out.push_str("  </graph>\n</gexf>\n");
    out
}

fn dot_quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Undirected DOT graph named `G`. Nodes are named by their identifiers, so
/// an object and an actor with the same label collapse into one DOT node.
pub fn to_dot<T: Scalar>(graph: &BipartiteGraph<T>) -> String {
    if graph.node_count() == 0 {
        return "graph G { }\n".to_owned();
    }
    let mut out = String::from("graph G {\n");
    for node in graph.nodes() {
        let _ = writeln!(
            out,
            "  {} [type={}];",
            dot_quote(node.label()),
            node.kind().as_str()
        );
    }
    for e in graph.edges() {
        let _ = writeln!(
            out,
            "  {} -- {} [weight={}];",
            dot_quote(graph.node(e.object).label()),
            dot_quote(graph.node(e.actor).label()),
            e.weight
        );
    }
    out.push_str("}\n");
    out
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .flexible(true)
        .from_writer(Vec::new())
}

fn finish(wtr: csv::Writer<Vec<u8>>) -> String {
    let bytes = wtr.into_inner().expect("writing to memory cannot fail");
    String::from_utf8(bytes).expect("csv output is utf-8")
}

/// Header `object,<actors...>`, one row per document.
pub fn matrix_csv<T: Scalar>(weights: &WeightMatrix<T>, display: DisplayMode) -> String {
    let mut wtr = csv_writer();
    let header = std::iter::once("object").chain(weights.actors().iter().map(|a| a.as_str()));
    wtr.write_record(header).expect("in-memory write");
    for (i, object) in weights.objects().iter().enumerate() {
        let cells = weights.row(i).iter().map(|&w| display.render(w));
        let row = std::iter::once(object.to_string()).chain(cells);
        wtr.write_record(row).expect("in-memory write");
    }
    finish(wtr)
}

/// Edge list `source,target,weight` with the object as source.
pub fn edge_csv<T: Scalar>(graph: &BipartiteGraph<T>) -> String {
    let mut wtr = csv_writer();
    wtr.write_record(EDGE_CSV_HEADER).expect("in-memory write");
    for e in graph.edges() {
        wtr.write_record([
            graph.node(e.object).label(),
            graph.node(e.actor).label(),
            &e.weight.to_string(),
        ])
        .expect("in-memory write");
    }
    finish(wtr)
}

/// The corpus as ingest CSV; `parse_csv` followed by `build_corpus` rebuilds
/// an identical corpus.
pub fn corpus_csv(corpus: &ActivityCorpus) -> String {
    let mut wtr = csv_writer();
    wtr.write_record(CSV_HEADER).expect("in-memory write");
    for rec in corpus.records() {
        wtr.write_record([
            rec.object.as_str(),
            rec.actor.as_str(),
            &rec.count.to_string(),
        ])
        .expect("in-memory write");
    }
    finish(wtr)
}

/// Reads an edge list written by [`edge_csv`]. Nodes appear in order of
/// first mention; isolated nodes cannot be represented.
pub fn parse_edge_csv<T: Scalar, R: Read>(reader: R) -> Result<BipartiteGraph<T>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(reader);
    let header = rdr
        .headers()
        .map_err(|e| Error::Format(e.to_string()))?
        .clone();
    if header.iter().ne(EDGE_CSV_HEADER) {
        return Err(Error::Format(format!(
            "expected header `{}`",
            EDGE_CSV_HEADER.join(",")
        )));
    }
    let mut objects = indexmap::IndexSet::new();
    let mut actors = indexmap::IndexSet::new();
    let mut edges = Vec::new();
    for row in rdr.records() {
        let row = row.map_err(|e| Error::Format(e.to_string()))?;
        let line = row.position().map_or(0, |p| p.line() as usize);
        let invalid = |message: String| Error::Validation { line, message };
        let object = ObjectId::new(&row[0]).map_err(|e| invalid(e.to_string()))?;
        let actor = ActorId::new(&row[1]).map_err(|e| invalid(e.to_string()))?;
        let weight: T = row[2]
            .parse()
            .map_err(|_| invalid(format!("weight {:?} is not a number", &row[2])))?;
        objects.insert(object.clone());
        actors.insert(actor.clone());
        edges.push((object, actor, weight));
    }
    BipartiteGraph::from_edges(
        objects.into_iter().collect(),
        actors.into_iter().collect(),
        edges,
    )
}

pub fn parse_edge_csv_str<T: Scalar>(input: &str) -> Result<BipartiteGraph<T>> {
    parse_edge_csv(input.as_bytes())
}
