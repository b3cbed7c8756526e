//! Weighted bipartite object/actor graph and its summary statistics.
//!
//! Path statistics use unweighted hop distances; edge weights only enter the
//! average weighted degree and the exporters.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::corpus::{ActorId, ObjectId};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::vectorizer::WeightMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Object,
    Actor,
}

impl NodeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Object => "object",
            Self::Actor => "actor",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Node {
    Object(ObjectId),
    Actor(ActorId),
}

impl Node {
    pub fn kind(&self) -> NodeKind {
        match self {
            Self::Object(_) => NodeKind::Object,
            Self::Actor(_) => NodeKind::Actor,
        }
    }

    pub fn label(&self) -> &str {
        match self {
            Self::Object(o) => o.as_str(),
            Self::Actor(a) => a.as_str(),
        }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind().as_str(), self.label())
    }
}

/// Edge between the object node at index `object` and the actor node at
/// index `actor`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge<T> {
    pub object: usize,
    pub actor: usize,
    pub weight: T,
}

/// Undirected simple graph with object nodes first, then actor nodes, each
/// group in insertion order. Edges only join an object to an actor and carry
/// a strictly positive weight.
#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteGraph<T> {
    nodes: Vec<Node>,
    num_objects: usize,
    edges: Vec<Edge<T>>,
    adjacency: Vec<Vec<usize>>,
}

impl<T: Scalar> Default for BipartiteGraph<T> {
    fn default() -> Self {
        Self {
            nodes: Vec::new(),
            num_objects: 0,
            edges: Vec::new(),
            adjacency: Vec::new(),
        }
    }
}

impl<T: Scalar> BipartiteGraph<T> {
    /// Assembles a graph, checking that node identifiers are unique within
    /// their side, that every edge endpoint is a listed node, that no
    /// (object, actor) pair repeats and that all weights are positive.
    pub fn from_edges(
        objects: Vec<ObjectId>,
        actors: Vec<ActorId>,
        edges: impl IntoIterator<Item = (ObjectId, ActorId, T)>,
    ) -> Result<Self> {
        let num_objects = objects.len();
        let mut object_index = HashMap::with_capacity(num_objects);
        for (i, o) in objects.iter().enumerate() {
            if object_index.insert(o.clone(), i).is_some() {
                return Err(Error::InvalidArgument(format!("duplicate object node {o}")));
            }
        }
        let mut actor_index = HashMap::with_capacity(actors.len());
        for (j, a) in actors.iter().enumerate() {
            if actor_index.insert(a.clone(), num_objects + j).is_some() {
                return Err(Error::InvalidArgument(format!("duplicate actor node {a}")));
            }
        }

        let nodes: Vec<Node> = objects
            .into_iter()
            .map(Node::Object)
            .chain(actors.into_iter().map(Node::Actor))
            .collect();
        let mut adjacency = vec![Vec::new(); nodes.len()];
        let mut seen = std::collections::HashSet::new();
        let mut kept = Vec::new();
        for (o, a, weight) in edges {
            let object = *object_index
                .get(&o)
                .ok_or_else(|| Error::NotFound(format!("edge endpoint object {o}")))?;
            let actor = *actor_index
                .get(&a)
                .ok_or_else(|| Error::NotFound(format!("edge endpoint actor {a}")))?;
            if !(weight.is_finite() && weight > T::zero()) {
                return Err(Error::InvalidArgument(format!(
                    "edge ({o}, {a}) weight must be positive and finite, got {weight}"
                )));
            }
            if !seen.insert((object, actor)) {
                return Err(Error::InvalidArgument(format!("duplicate edge ({o}, {a})")));
            }
            adjacency[object].push(actor);
            adjacency[actor].push(object);
            kept.push(Edge {
                object,
                actor,
                weight,
            });
        }

        Ok(Self {
            nodes,
            num_objects,
            edges: kept,
            adjacency,
        })
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node(&self, index: usize) -> &Node {
        &self.nodes[index]
    }

    pub fn object_nodes(&self) -> &[Node] {
        &self.nodes[..self.num_objects]
    }

    pub fn actor_nodes(&self) -> &[Node] {
        &self.nodes[self.num_objects..]
    }

    pub fn edges(&self) -> &[Edge<T>] {
        &self.edges
    }

    pub fn neighbors(&self, index: usize) -> &[usize] {
        &self.adjacency[index]
    }

    pub fn index_of(&self, node: &Node) -> Option<usize> {
        let range = match node.kind() {
            NodeKind::Object => 0..self.num_objects,
            NodeKind::Actor => self.num_objects..self.nodes.len(),
        };
        range.into_iter().find(|&i| &self.nodes[i] == node)
    }

    pub fn total_weight(&self) -> T {
        self.edges.iter().fold(T::zero(), |acc, e| acc + e.weight)
    }

    /// Weight of the edge between an object and an actor, if present.
    pub fn weight(&self, object: &ObjectId, actor: &ActorId) -> Option<T> {
        let o = self.index_of(&Node::Object(object.clone()))?;
        let a = self.index_of(&Node::Actor(actor.clone()))?;
        self.edges
            .iter()
            .find(|e| e.object == o && e.actor == a)
            .map(|e| e.weight)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GraphOptions<T> {
    /// Keep an edge only when its weight is strictly greater than this.
    pub threshold: T,
    /// Retain objects and actors left without any edge.
    pub keep_isolated: bool,
}

impl<T: Scalar> Default for GraphOptions<T> {
    fn default() -> Self {
        Self {
            threshold: T::zero(),
            keep_isolated: false,
        }
    }
}

impl<T: Scalar> GraphOptions<T> {
    pub fn with_threshold(threshold: T) -> Self {
        Self {
            threshold,
            ..Self::default()
        }
    }
}

/// Turns every weight above the threshold into an object/actor edge.
pub fn build_graph<T: Scalar>(
    weights: &WeightMatrix<T>,
    options: &GraphOptions<T>,
) -> Result<BipartiteGraph<T>> {
    let threshold = options.threshold;
    if !threshold.is_finite() || threshold < T::zero() {
        return Err(Error::InvalidArgument(format!(
            "threshold must be a finite nonnegative number, got {threshold}"
        )));
    }
    let mut edges = Vec::new();
    let mut object_used = vec![options.keep_isolated; weights.rows()];
    let mut actor_used = vec![options.keep_isolated; weights.cols()];
    for (i, object) in weights.objects().iter().enumerate() {
        for (j, &w) in weights.row(i).iter().enumerate() {
            if w > threshold {
                object_used[i] = true;
                actor_used[j] = true;
                edges.push((object.clone(), weights.actors()[j].clone(), w));
            }
        }
    }
    let objects = weights
        .objects()
        .iter()
        .zip(&object_used)
        .filter(|(_, used)| **used)
        .map(|(o, _)| o.clone())
        .collect();
    let actors = weights
        .actors()
        .iter()
        .zip(&actor_used)
        .filter(|(_, used)| **used)
        .map(|(a, _)| a.clone())
        .collect();
    BipartiteGraph::from_edges(objects, actors, edges)
}

/// Hop distances between every ordered pair of nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub const UNREACHABLE: u32 = u32::MAX;

    pub fn from_raw(n: usize, dist: Vec<u32>) -> Self {
        assert_eq!(dist.len(), n * n);
        Self { n, dist }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `None` when `v` cannot be reached from `u`.
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        let d = self.dist[u * self.n + v];
        (d != Self::UNREACHABLE).then_some(d)
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn as_raw(&self) -> &[u32] {
        &self.dist
    }
}

fn bfs<T: Scalar>(graph: &BipartiteGraph<T>, source: usize, dist: &mut [u32]) {
    dist.fill(DistanceMatrix::UNREACHABLE);
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &v in graph.neighbors(u) {
            if dist[v] == DistanceMatrix::UNREACHABLE {
                dist[v] = next;
                queue.push_back(v);
            }
        }
    }
}

pub fn all_pairs_distances<T: Scalar>(graph: &BipartiteGraph<T>) -> DistanceMatrix {
    let n = graph.node_count();
    let mut dist = vec![DistanceMatrix::UNREACHABLE; n * n];
    for (u, row) in dist.chunks_mut(n.max(1)).enumerate().take(n) {
        bfs(graph, u, row);
    }
    DistanceMatrix { n, dist }
}

fn row_eccentricity(row: &[u32]) -> u32 {
    row.iter()
        .copied()
        .filter(|&d| d != DistanceMatrix::UNREACHABLE)
        .max()
        .unwrap_or(0)
}

/// Largest finite hop distance from `node`; 0 for an isolated node.
pub fn eccentricity<T: Scalar>(graph: &BipartiteGraph<T>, node: &Node) -> Result<u32> {
    let source = graph
        .index_of(node)
        .ok_or_else(|| Error::NotFound(node.to_string()))?;
    let mut dist = vec![0; graph.node_count()];
    bfs(graph, source, &mut dist);
    Ok(row_eccentricity(&dist))
}

/// Node indices of each connected component, ascending within a component;
/// components ordered by their smallest node index.
pub fn connected_components<T: Scalar>(graph: &BipartiteGraph<T>) -> Vec<Vec<usize>> {
    let n = graph.node_count();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut members = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in graph.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    members.push(v);
                    queue.push_back(v);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    components
}

/// Degree figures, defined for any graph including the empty one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DegreeStatistics<T> {
    pub node_count: usize,
    pub edge_count: usize,
    pub total_weight: T,
    /// `2 * total_weight / n`, or 0 for an empty graph.
    pub average_weighted_degree: T,
    pub average_degree: T,
}

pub fn degree_statistics<T: Scalar>(graph: &BipartiteGraph<T>) -> DegreeStatistics<T> {
    let n = graph.node_count();
    let total_weight = graph.total_weight();
    let two = T::from_count(2);
    let (average_weighted_degree, average_degree) = if n == 0 {
        (T::zero(), T::zero())
    } else {
        let nf = T::from_count(n);
        (
            two * total_weight / nf,
            T::from_count(2 * graph.edge_count()) / nf,
        )
    };
    DegreeStatistics {
        node_count: n,
        edge_count: graph.edge_count(),
        total_weight,
        average_weighted_degree,
        average_degree,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GraphStatistics<T> {
    pub node_count: usize,
    pub edge_count: usize,
    /// Largest finite eccentricity.
    pub diameter: u32,
    /// Smallest eccentricity.
    pub radius: u32,
    /// Mean hop distance over reachable ordered pairs `u != v`; 0 if there
    /// are none.
    pub average_path_length: T,
    /// Number of reachable ordered pairs `u != v`.
    pub shortest_path_pair_count: u64,
    pub average_weighted_degree: T,
    /// `2|E| / (n(n-1))`.
    pub density: T,
    pub component_count: usize,
}

impl<T: Scalar> GraphStatistics<T> {
    pub fn is_connected(&self) -> bool {
        self.component_count == 1
    }
}

/// The full statistics panel. Requires at least two nodes; use
/// [`degree_statistics`] for smaller graphs.
pub fn statistics<T: Scalar>(graph: &BipartiteGraph<T>) -> Result<GraphStatistics<T>> {
    let n = graph.node_count();
    if n < 2 {
        return Err(Error::StatisticsUndefined { nodes: n });
    }
    let distances = all_pairs_distances(graph);

    let mut diameter = 0;
    let mut radius = u32::MAX;
    let mut hop_sum: u64 = 0;
    let mut pairs: u64 = 0;
    for u in 0..n {
        let row = distances.row(u);
        let ecc = row_eccentricity(row);
        diameter = diameter.max(ecc);
        radius = radius.min(ecc);
        for (v, &d) in row.iter().enumerate() {
            if v != u && d != DistanceMatrix::UNREACHABLE {
                hop_sum += u64::from(d);
                pairs += 1;
            }
        }
    }

    let average_path_length = if pairs == 0 {
        T::zero()
    } else {
        T::from_u64(hop_sum).expect("finite") / T::from_u64(pairs).expect("finite")
    };
    let density = T::from_count(2 * graph.edge_count()) / T::from_count(n * (n - 1));
    let degrees = degree_statistics(graph);

    Ok(GraphStatistics {
        node_count: n,
        edge_count: graph.edge_count(),
        diameter,
        radius,
        average_path_length,
        shortest_path_pair_count: pairs,
        average_weighted_degree: degrees.average_weighted_degree,
        density,
        component_count: connected_components(graph).len(),
    })
}
