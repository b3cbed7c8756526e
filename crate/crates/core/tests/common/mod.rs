#![allow(dead_code)]

use std::collections::HashSet;

use activity_vec::{ActivityRecord, ActorId, BipartiteGraph, ObjectId};
use proptest::prelude::*;

pub const FIXTURE_JSONL: &str = include_str!("../data/fixture.jsonl");
pub const FIXTURE_CSV: &str = include_str!("../data/fixture.csv");

/// Printed values: rows d1..d3, columns UID1..UID6.
pub const TABLE_1: [[u64; 6]; 3] = [[1, 1, 1, 0, 0, 0], [0, 1, 1, 1, 0, 0], [0, 0, 0, 1, 1, 1]];
pub const TABLE_2: [[f64; 6]; 3] = [
    [1.584, 0.584, 0.584, 0.0, 0.0, 0.0],
    [0.0, 0.584, 0.584, 0.584, 0.0, 0.0],
    [0.0, 0.0, 0.0, 0.584, 1.584, 1.584],
];

pub fn rec(object: &str, actor: &str, count: u64) -> ActivityRecord {
    ActivityRecord::new(
        ObjectId::new(object).unwrap(),
        ActorId::new(actor).unwrap(),
        count,
    )
    .unwrap()
}

/// Records from a count grid; zero cells produce no record.
pub fn records_from_grid(grid: &[Vec<u64>]) -> Vec<ActivityRecord> {
    let mut out = Vec::new();
    for (i, row) in grid.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            if c > 0 {
                out.push(rec(&format!("d{i}"), &format!("u{j}"), c));
            }
        }
    }
    out
}

/// Random activity logs: up to 6 objects, 8 actors, counts up to 3, in a
/// shuffled order, possibly with a pair split over two records.
pub fn arb_records() -> impl Strategy<Value = Vec<ActivityRecord>> {
    (1usize..=6, 1usize..=8)
        .prop_flat_map(|(d, n)| prop::collection::vec(prop::collection::vec(0u64..=3, n), d))
        .prop_filter("at least one record", |grid| {
            grid.iter().flatten().any(|&c| c > 0)
        })
        .prop_map(|grid| records_from_grid(&grid))
        .prop_shuffle()
}

/// Naive per-cell TF-IDF straight from the record list.
pub fn naive_weight(
    records: &[ActivityRecord],
    object: &ObjectId,
    actor: &ActorId,
    raw: bool,
) -> f64 {
    let objects: HashSet<&ObjectId> = records.iter().map(|r| &r.object).collect();
    let containing: HashSet<&ObjectId> = records
        .iter()
        .filter(|r| &r.actor == actor)
        .map(|r| &r.object)
        .collect();
    let count: u64 = records
        .iter()
        .filter(|r| &r.object == object && &r.actor == actor)
        .map(|r| r.count)
        .sum();
    let tf = if raw {
        count as f64
    } else {
        (count > 0) as u8 as f64
    };
    let idf = (objects.len() as f64 / containing.len() as f64).log2();
    tf * idf
}

pub const INF: u32 = u32::MAX;

/// Floyd-Warshall over the graph's edge list, unit edge lengths.
pub fn floyd_warshall<T: activity_vec::Scalar>(graph: &BipartiteGraph<T>) -> Vec<Vec<u32>> {
    let n = graph.node_count();
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for e in graph.edges() {
        d[e.object][e.actor] = 1;
        d[e.actor][e.object] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] != INF && d[k][j] != INF && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Random bipartite graphs with at most 12 nodes.
pub fn arb_graph() -> impl Strategy<Value = BipartiteGraph<f64>> {
    (0usize..=6, 0usize..=6)
        .prop_flat_map(|(no, na)| {
            (
                Just((no, na)),
                prop::collection::vec((any::<bool>(), 0.01f64..5.0), no * na),
            )
        })
        .prop_map(|((no, na), cells)| {
            let objects: Vec<_> = (0..no)
                .map(|i| ObjectId::new(format!("o{i}")).unwrap())
                .collect();
            let actors: Vec<_> = (0..na)
                .map(|j| ActorId::new(format!("a{j}")).unwrap())
                .collect();
            let mut edges = Vec::new();
            for (k, (present, w)) in cells.into_iter().enumerate() {
                if present {
                    edges.push((objects[k / na].clone(), actors[k % na].clone(), w));
                }
            }
            BipartiteGraph::from_edges(objects, actors, edges).unwrap()
        })
}

/// Connected components by brute-force reachability from the oracle matrix.
pub fn component_sizes(dist: &[Vec<u32>]) -> Vec<usize> {
    let n = dist.len();
    let mut seen = vec![false; n];
    let mut sizes = Vec::new();
    for u in 0..n {
        if !seen[u] {
            let members: Vec<usize> = (0..n).filter(|&v| dist[u][v] != INF).collect();
            for &v in &members {
                seen[v] = true;
            }
            sizes.push(members.len());
        }
    }
    sizes
}
