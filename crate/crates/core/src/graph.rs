//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! A [`Graph`] is immutable once built. Every derived graph (vertex
//! deletion, induced subgraphs) is a fresh value carrying the relabeling
//! back to the parent.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(Vertex),
    #[error("graph is not bipartite; odd cycle {0:?}")]
    NotBipartite(Vec<Vertex>),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged; self-loops are rejected.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_raw_adjacency(adj))
    }

    fn from_raw_adjacency(mut adj: Vec<Vec<Vertex>>) -> Self {
        let mut twice = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        Graph {
            adj,
            edge_count: twice / 2,
        }
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u).collect())
            .collect();
        Graph {
            adj,
            edge_count: n * n.saturating_sub(1) / 2,
        }
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut adj = vec![Vec::new(); a + b];
        for list in adj.iter_mut().take(a) {
            list.extend(a..a + b);
        }
        for list in adj.iter_mut().skip(a) {
            list.extend(0..a);
        }
        Graph {
            adj,
            edge_count: a * b,
        }
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(n, &edges).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, &edges).expect("cycle edges are valid")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order() && v < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Minimum degree; zero for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }

    /// Two-colors the graph by BFS. Per component the smallest vertex goes
    /// to `X`; components are visited in ascending order of their smallest
    /// vertex.
    pub fn bipartition(&self) -> Result<Bipartition, GraphError> {
        let n = self.order();
        let mut side: Vec<Option<Side>> = vec![None; n];
        let mut parent: Vec<Option<Vertex>> = vec![None; n];
        let mut depth = vec![0usize; n];
        for root in 0..n {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(Side::X);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(su.other());
                            parent[w] = Some(u);
                            depth[w] = depth[u] + 1;
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => {
                            return Err(GraphError::NotBipartite(odd_cycle(
                                u, w, &parent, &depth,
                            )));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Ok(Bipartition::from_sides(
            side.into_iter().map(|s| s.unwrap()).collect(),
        ))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_ok()
    }

    /// Removes `removed` and relabels the survivors densely, preserving
    /// their relative order.
    pub fn delete_vertices(&self, removed: &[Vertex]) -> Result<Relabeled, GraphError> {
        let n = self.order();
        let mut keep = vec![true; n];
        for &v in removed {
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v));
            }
            keep[v] = false;
        }
        Ok(self.induced_by_mask(&keep))
    }

    /// Subgraph induced by `kept` (any order, duplicates ignored).
    pub fn induced_subgraph(&self, kept: &[Vertex]) -> Result<Relabeled, GraphError> {
        let n = self.order();
        let mut keep = vec![false; n];
        for &v in kept {
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v));
            }
            keep[v] = true;
        }
        Ok(self.induced_by_mask(&keep))
    }

    pub(crate) fn induced_by_mask(&self, keep: &[bool]) -> Relabeled {
        let mut old_to_new = vec![None; self.order()];
        let mut new_to_old = Vec::new();
        for v in self.vertices() {
            if keep[v] {
                old_to_new[v] = Some(new_to_old.len());
                new_to_old.push(v);
            }
        }
        let adj = new_to_old
            .iter()
            .map(|&u| {
                self.adj[u]
                    .iter()
                    .filter_map(|&w| old_to_new[w])
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Relabeled {
            graph: Graph { adj, edge_count },
            old_to_new,
            new_to_old,
        }
    }

    /// Canonical edge-list text: header `n m`, then one `u v` line per edge
    /// with `u < v` in lexicographic order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.order(), self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the edge-list text format. Lines starting with `#` and blank
    /// lines are skipped; the number of edge lines must match the header.
    pub fn from_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (a, b) = parse_pair(line, line_no)?;
            match header {
                None => header = Some((a, b)),
                Some((n, _)) => {
                    let edge_err = |e: GraphError| match e {
                        GraphError::SelfLoop(v) => GraphError::Parse {
                            line: line_no,
                            message: format!("self-loop at vertex {v}"),
                        },
                        GraphError::VertexOutOfRange(v) => GraphError::Parse {
                            line: line_no,
                            message: format!("vertex {v} out of range for n = {n}"),
                        },
                        other => other,
                    };
                    if a >= n {
                        return Err(edge_err(GraphError::VertexOutOfRange(a)));
                    }
                    if b >= n {
                        return Err(edge_err(GraphError::VertexOutOfRange(b)));
                    }
                    if a == b {
                        return Err(edge_err(GraphError::SelfLoop(a)));
                    }
                    edges.push((a, b));
                }
            }
        }
        let (n, m) = header.ok_or(GraphError::Parse {
            line: 0,
            message: "missing `n m` header".into(),
        })?;
        if edges.len() != m {
            return Err(GraphError::Parse {
                line: text.lines().count(),
                message: format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, &edges)
    }

    pub fn to_record(&self, with_bipartition: bool) -> GraphRecord {
        GraphRecord {
            n: self.order(),
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
            bipartition: if with_bipartition {
                self.bipartition().ok().map(|b| BipartitionRecord {
                    x: b.x().to_vec(),
                    y: b.y().to_vec(),
                })
            } else {
                None
            },
        }
    }

    pub fn from_record(record: &GraphRecord) -> Result<Self, GraphError> {
        let edges: Vec<_> = record.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::new(record.n, &edges)
    }
}

impl Default for Graph {
    fn default() -> Self {
        Graph::empty(0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

fn parse_pair(line: &str, line_no: usize) -> Result<(usize, usize), GraphError> {
    let mut tokens = line.split_whitespace();
    let mut next = || -> Result<usize, GraphError> {
        let tok = tokens.next().ok_or_else(|| GraphError::Parse {
            line: line_no,
            message: "expected two integers".into(),
        })?;
        tok.parse().map_err(|_| GraphError::Parse {
            line: line_no,
            message: format!("invalid integer `{tok}`"),
        })
    };
    let a = next()?;
    let b = next()?;
    if tokens.next().is_some() {
        return Err(GraphError::Parse {
            line: line_no,
            message: "trailing tokens".into(),
        });
    }
    Ok((a, b))
}

/// Cycle closed by the non-tree edge `(u, w)` whose ends share a BFS color.
fn odd_cycle(u: Vertex, w: Vertex, parent: &[Option<Vertex>], depth: &[usize]) -> Vec<Vertex> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a].unwrap();
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b].unwrap();
        right.push(b);
    }
    while a != b {
        a = parent[a].unwrap();
        b = parent[b].unwrap();
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

/// A proper two-coloring `(X, Y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    sides: Vec<Side>,
    x: Vec<Vertex>,
    y: Vec<Vertex>,
}

impl Bipartition {
    fn from_sides(sides: Vec<Side>) -> Self {
        let x = (0..sides.len()).filter(|&v| sides[v] == Side::X).collect();
        let y = (0..sides.len()).filter(|&v| sides[v] == Side::Y).collect();
        Bipartition { sides, x, y }
    }

    pub fn x(&self) -> &[Vertex] {
        &self.x
    }

    pub fn y(&self) -> &[Vertex] {
        &self.y
    }

    pub fn side(&self, v: Vertex) -> Side {
        self.sides[v]
    }

    /// `max(|X|, |Y|)`.
    pub fn larger_side(&self) -> usize {
        self.x.len().max(self.y.len())
    }

    /// True if every edge of `g` crosses the partition.
    pub fn is_proper_for(&self, g: &Graph) -> bool {
        self.sides.len() == g.order() && g.edges().all(|(u, v)| self.sides[u] != self.sides[v])
    }
}

/// Result of a vertex deletion or induced-subgraph operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabeled {
    pub graph: Graph,
    pub old_to_new: Vec<Option<Vertex>>,
    pub new_to_old: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartitionRecord {
    pub x: Vec<Vertex>,
    pub y: Vec<Vertex>,
}

/// Structured record form of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bipartition: Option<BipartitionRecord>,
}
