//! Vertex connectivity, blocks, and subdivisions of 3-connected graphs.
//!
//! κ is computed exactly from local vertex connectivities between
//! non-adjacent pairs (unit-capacity max-flow on the vertex-split network).
//! Only pairs whose first vertex is among the first κ+1 vertices are
//! examined: a minimum separator misses one of them, and every vertex on
//! the far side of that separator has a larger id.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Relabeled, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConnectivityError {
    #[error("graph is not a subdivision of a simple 3-connected graph")]
    NotASubdivision,
}

/// What removing a separator achieves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeparatorWitness {
    /// The two vertices end up in different components.
    Split(Vertex, Vertex),
    /// At most one vertex survives (complete graphs, K1, the empty graph).
    ReducedToOneVertex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Separator {
    pub vertices: Vec<Vertex>,
    pub witness: SeparatorWitness,
}

impl Separator {
    /// Checks the separating property against `g` from scratch.
    pub fn separates(&self, g: &Graph) -> bool {
        let Ok(rest) = g.delete_vertices(&self.vertices) else {
            return false;
        };
        match self.witness {
            SeparatorWitness::ReducedToOneVertex => rest.graph.order() <= 1,
            SeparatorWitness::Split(a, b) => {
                let (Some(a), Some(b)) = (rest.old_to_new[a], rest.old_to_new[b]) else {
                    return false;
                };
                !rest
                    .graph
                    .components()
                    .iter()
                    .any(|c| c.contains(&a) && c.contains(&b))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Connectivity {
    pub kappa: usize,
    pub separator: Separator,
}

/// Exact vertex connectivity together with a minimum separator.
pub fn vertex_connectivity(g: &Graph) -> Connectivity {
    let n = g.order();
    if n <= 1 {
        return Connectivity {
            kappa: 0,
            separator: Separator {
                vertices: vec![],
                witness: SeparatorWitness::ReducedToOneVertex,
            },
        };
    }
    let comps = g.components();
    if comps.len() > 1 {
        return Connectivity {
            kappa: 0,
            separator: Separator {
                vertices: vec![],
                witness: SeparatorWitness::Split(comps[0][0], comps[1][0]),
            },
        };
    }
    if g.is_complete() {
        return Connectivity {
            kappa: n - 1,
            separator: Separator {
                vertices: (0..n - 1).collect(),
                witness: SeparatorWitness::ReducedToOneVertex,
            },
        };
    }

    // N(v) for a minimum-degree vertex is a separator of size δ.
    let v = g.vertices().min_by_key(|&v| g.degree(v)).unwrap();
    let far = g.vertices().find(|&w| w != v && !g.has_edge(v, w)).unwrap();
    let mut best = Connectivity {
        kappa: g.degree(v),
        separator: Separator {
            vertices: g.neighbors(v).to_vec(),
            witness: SeparatorWitness::Split(v.min(far), v.max(far)),
        },
    };

    let mut net = SplitNetwork::new(g);
    let mut i = 0;
    while i < n && i <= best.kappa {
        for j in i + 1..n {
            if g.has_edge(i, j) {
                continue;
            }
            let (flow, cut) = net.local_connectivity(i, j, best.kappa);
            if flow < best.kappa {
                best = Connectivity {
                    kappa: flow,
                    separator: Separator {
                        vertices: cut.expect("cut is extracted below the limit"),
                        witness: SeparatorWitness::Split(i, j),
                    },
                };
            }
        }
        i += 1;
    }
    best
}

/// `κ(g) ≥ k`, stopping as soon as a separator smaller than `k` shows up.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    let n = g.order();
    if n < k + 1 {
        return false;
    }
    if g.is_complete() {
        return true;
    }
    if g.min_degree() < k || !g.is_connected() {
        return false;
    }
    let mut net = SplitNetwork::new(g);
    for i in 0..k {
        for j in i + 1..n {
            if !g.has_edge(i, j) && net.local_connectivity(i, j, k).0 < k {
                return false;
            }
        }
    }
    true
}

/// Unit vertex capacities: vertex `v` becomes `2v` (in) → `2v + 1` (out).
struct SplitNetwork {
    head: Vec<usize>,
    cap: Vec<u32>,
    adj: Vec<Vec<usize>>,
    base: Vec<u32>,
}

const INF_CAP: u32 = u32::MAX / 2;

impl SplitNetwork {
    fn new(g: &Graph) -> Self {
        let mut net = SplitNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); 2 * g.order()],
            base: Vec::new(),
        };
        for v in g.vertices() {
            net.add_arc(2 * v, 2 * v + 1, 1);
        }
        for (u, w) in g.edges() {
            net.add_arc(2 * u + 1, 2 * w, INF_CAP);
            net.add_arc(2 * w + 1, 2 * u, INF_CAP);
        }
        net.base = net.cap.clone();
        net
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        self.adj[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.adj[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    /// Max number of internally disjoint `s`–`t` paths, capped at `limit`.
    /// Below the limit, also returns a minimum separating vertex set.
    fn local_connectivity(&mut self, s: Vertex, t: Vertex, limit: usize) -> (usize, Option<Vec<Vertex>>) {
        self.cap.copy_from_slice(&self.base);
        let (source, sink) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        let mut pred = vec![usize::MAX; self.adj.len()];
        while flow < limit {
            pred.fill(usize::MAX);
            let reached = self.bfs(source, sink, &mut pred);
            if !reached {
                break;
            }
            let mut node = sink;
            while node != source {
                let arc = pred[node];
                self.cap[arc] -= 1;
                self.cap[arc ^ 1] += 1;
                node = self.head[arc ^ 1];
            }
            flow += 1;
        }
        if flow >= limit {
            return (flow, None);
        }
        // Residual reachability from the source after the last failed BFS.
        let mut seen = vec![false; self.adj.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &arc in &self.adj[u] {
                let w = self.head[arc];
                if self.cap[arc] > 0 && !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        let cut = (0..self.adj.len() / 2)
            .filter(|&v| seen[2 * v] && !seen[2 * v + 1])
            .collect::<Vec<_>>();
        debug_assert_eq!(cut.len(), flow);
        (flow, Some(cut))
    }

    fn bfs(&self, source: usize, sink: usize, pred: &mut [usize]) -> bool {
        let mut queue = VecDeque::from([source]);
        pred[source] = usize::MAX - 1;
        while let Some(u) = queue.pop_front() {
            for &arc in &self.adj[u] {
                let w = self.head[arc];
                if self.cap[arc] > 0 && pred[w] == usize::MAX {
                    pred[w] = arc;
                    if w == sink {
                        return true;
                    }
                    queue.push_back(w);
                }
            }
        }
        false
    }
}

/// A block: maximal 2-connected subgraph, bridge, or isolated vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(Vertex, Vertex)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<Vertex>,
}

impl BlockDecomposition {
    /// Largest block; ties go to the block listed first, i.e. the one with
    /// the smallest vertex.
    pub fn maximum_block(&self) -> Option<&Block> {
        let mut best: Option<&Block> = None;
        for b in &self.blocks {
            if best.is_none_or(|cur| b.vertices.len() > cur.vertices.len()) {
                best = Some(b);
            }
        }
        best
    }
}

/// Block–cut-vertex decomposition (Hopcroft–Tarjan with an edge stack).
pub fn blocks(g: &Graph) -> BlockDecomposition {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        timer: usize,
        edge_stack: Vec<(Vertex, Vertex)>,
        blocks: Vec<Block>,
        is_cut: Vec<bool>,
    }

    fn dfs(st: &mut State<'_>, u: Vertex, parent: Option<Vertex>) {
        st.timer += 1;
        st.disc[u] = st.timer;
        st.low[u] = st.timer;
        let mut children = 0;
        for idx in 0..st.g.degree(u) {
            let w = st.g.neighbors(u)[idx];
            if st.disc[w] == 0 {
                children += 1;
                st.edge_stack.push((u, w));
                dfs(st, w, Some(u));
                st.low[u] = st.low[u].min(st.low[w]);
                if st.low[w] >= st.disc[u] {
                    if parent.is_some() || children > 1 {
                        st.is_cut[u] = true;
                    }
                    let mut edges = Vec::new();
                    while let Some(e) = st.edge_stack.pop() {
                        edges.push(e);
                        if e == (u, w) {
                            break;
                        }
                    }
                    st.blocks.push(make_block(edges));
                }
            } else if Some(w) != parent && st.disc[w] < st.disc[u] {
                st.edge_stack.push((u, w));
                st.low[u] = st.low[u].min(st.disc[w]);
            }
        }
        // a root with two children is a cut vertex; handled above
    }

    fn make_block(edges: Vec<(Vertex, Vertex)>) -> Block {
        let mut vs = BTreeSet::new();
        let mut es: Vec<_> = edges
            .into_iter()
            .map(|(a, b)| {
                vs.insert(a);
                vs.insert(b);
                (a.min(b), a.max(b))
            })
            .collect();
        es.sort_unstable();
        es.dedup();
        Block {
            vertices: vs.into_iter().collect(),
            edges: es,
        }
    }

    let n = g.order();
    let mut st = State {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        timer: 0,
        edge_stack: Vec::new(),
        blocks: Vec::new(),
        is_cut: vec![false; n],
    };
    for v in 0..n {
        if st.disc[v] == 0 {
            if g.degree(v) == 0 {
                st.disc[v] = usize::MAX;
                st.blocks.push(Block {
                    vertices: vec![v],
                    edges: vec![],
                });
            } else {
                dfs(&mut st, v, None);
            }
        }
    }
    let mut blocks = st.blocks;
    blocks.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    BlockDecomposition {
        blocks,
        cut_vertices: (0..n).filter(|&v| st.is_cut[v]).collect(),
    }
}

/// Four branch vertices and six internally disjoint paths joining them.
/// `paths` lists the pairs (0,1), (0,2), (0,3), (1,2), (1,3), (2,3) in that
/// order, each running from the lower-indexed branch vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct K4Subdivision {
    pub branch: [Vertex; 4],
    pub paths: Vec<Vec<Vertex>>,
}

const K4_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

impl K4Subdivision {
    pub fn vertices(&self) -> Vec<Vertex> {
        let set: BTreeSet<_> = self.paths.iter().flatten().copied().collect();
        set.into_iter().collect()
    }

    /// Re-checks the witness against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let b = self.branch;
        let distinct: BTreeSet<_> = b.iter().collect();
        if distinct.len() != 4 || b.iter().any(|&v| v >= g.order()) || self.paths.len() != 6 {
            return false;
        }
        let mut interior_seen = BTreeSet::new();
        for (path, &(i, j)) in self.paths.iter().zip(K4_PAIRS.iter()) {
            if path.len() < 2 || path[0] != b[i] || *path.last().unwrap() != b[j] {
                return false;
            }
            if path.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return false;
            }
            for &v in &path[1..path.len() - 1] {
                if b.contains(&v) || !interior_seen.insert(v) {
                    return false;
                }
            }
        }
        true
    }
}

/// Decides whether `g` has a K4 minor (equivalently, a K4 subdivision) by
/// series–parallel reduction: delete vertices of degree ≤ 1 and suppress
/// vertices of degree 2, merging parallel edges. The graph is K4-free iff
/// this empties it; otherwise it stalls on a graph of minimum degree ≥ 3.
pub fn has_k4_subdivision(g: &Graph) -> bool {
    has_k4_minor_masked(g, &vec![true; g.order()], None)
}

fn has_k4_minor_masked(g: &Graph, alive: &[bool], skip_edge: Option<(Vertex, Vertex)>) -> bool {
    let n = g.order();
    let mut alive = alive.to_vec();
    let mut adj: Vec<BTreeSet<Vertex>> = (0..n)
        .map(|u| {
            if !alive[u] {
                return BTreeSet::new();
            }
            g.neighbors(u)
                .iter()
                .copied()
                .filter(|&w| alive[w])
                .filter(|&w| skip_edge != Some((u.min(w), u.max(w))))
                .collect()
        })
        .collect();
    let mut work: Vec<Vertex> = (0..n).filter(|&v| alive[v]).collect();
    while let Some(v) = work.pop() {
        if !alive[v] || adj[v].len() > 2 {
            continue;
        }
        alive[v] = false;
        let nbrs: Vec<_> = std::mem::take(&mut adj[v]).into_iter().collect();
        for &w in &nbrs {
            adj[w].remove(&v);
        }
        if let [a, b] = nbrs[..] {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        work.extend(nbrs);
    }
    alive.iter().any(|&a| a)
}

/// Finds a K4 subdivision, or `None` exactly when `g` has none.
///
/// The witness is extracted by pruning: vertices, then edges, are dropped in
/// ascending order whenever the remainder still has a K4 subdivision. What
/// is left is a bare subdivision of K4.
pub fn find_k4_subdivision(g: &Graph) -> Option<K4Subdivision> {
    let n = g.order();
    let mut alive = vec![true; n];
    if !has_k4_minor_masked(g, &alive, None) {
        return None;
    }
    for v in 0..n {
        alive[v] = false;
        if !has_k4_minor_masked(g, &alive, None) {
            alive[v] = true;
        }
    }
    let kept: Vec<_> = (0..n).filter(|&v| alive[v]).collect();
    let mut core = g.induced_subgraph(&kept).expect("ids in range");
    loop {
        let mut removed = false;
        let edges: Vec<_> = core.graph.edges().collect();
        for e in edges {
            let mask = vec![true; core.graph.order()];
            if has_k4_minor_masked(&core.graph, &mask, Some(e)) {
                let rest: Vec<_> = core.graph.edges().filter(|&f| f != e).collect();
                let graph = Graph::new(core.graph.order(), &rest).expect("valid");
                core = Relabeled { graph, ..core };
                removed = true;
                break;
            }
        }
        if !removed {
            break;
        }
    }
    let h = &core.graph;
    let branch_local: Vec<_> = h.vertices().filter(|&v| h.degree(v) >= 3).collect();
    debug_assert_eq!(branch_local.len(), 4);
    let to_old = |v: Vertex| core.new_to_old[v];
    let branch = [
        to_old(branch_local[0]),
        to_old(branch_local[1]),
        to_old(branch_local[2]),
        to_old(branch_local[3]),
    ];
    let mut paths = vec![Vec::new(); 6];
    for (i, &b) in branch_local.iter().enumerate() {
        for &first in h.neighbors(b) {
            let path = walk_ear(h, b, first);
            let end = *path.last().unwrap();
            let j = branch_local.iter().position(|&x| x == end)?;
            if i < j {
                let slot = K4_PAIRS.iter().position(|&p| p == (i, j))?;
                paths[slot] = path.into_iter().map(to_old).collect();
            }
        }
    }
    let witness = K4Subdivision { branch, paths };
    debug_assert!(witness.verify(g));
    Some(witness)
}

/// Walks from branch vertex `start` through `first` along degree-2 vertices
/// until another vertex of degree ≠ 2 (or `start` again) is reached.
fn walk_ear(g: &Graph, start: Vertex, first: Vertex) -> Vec<Vertex> {
    let mut path = vec![start, first];
    let (mut prev, mut cur) = (start, first);
    while g.degree(cur) == 2 && cur != start {
        let nbrs = g.neighbors(cur);
        let next = if nbrs[0] == prev { nbrs[1] } else { nbrs[0] };
        path.push(next);
        prev = cur;
        cur = next;
    }
    path
}

/// An induced subgraph of a host graph, with its host vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducedPiece {
    pub vertices: Vec<Vertex>,
    #[serde(skip)]
    pub graph: Graph,
}

/// Vertex-minimal induced subgraph containing a K4 subdivision, found by
/// shrinking the vertex set of a K4 witness in ascending id order. Such a
/// subgraph is a subdivision of a simple 3-connected graph.
pub fn minimal_3conn_subdivision(g: &Graph) -> Option<InducedPiece> {
    let witness = find_k4_subdivision(g)?;
    let mut alive = vec![false; g.order()];
    for v in witness.vertices() {
        alive[v] = true;
    }
    for v in 0..g.order() {
        if alive[v] {
            alive[v] = false;
            if !has_k4_minor_masked(g, &alive, None) {
                alive[v] = true;
            }
        }
    }
    let vertices: Vec<_> = (0..g.order()).filter(|&v| alive[v]).collect();
    let graph = g.induced_subgraph(&vertices).ok()?.graph;
    Some(InducedPiece { vertices, graph })
}

/// Ears of a subdivision together with its branch vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EarDecomposition {
    /// Each ear runs from its smaller to its larger branch end.
    pub ears: Vec<Vec<Vertex>>,
    pub branch_vertices: Vec<Vertex>,
}

impl EarDecomposition {
    /// Number of vertices of degree at least three.
    pub fn branch_count(&self) -> usize {
        self.branch_vertices.len()
    }
}

/// Suppresses degree-2 vertices. Returns the ears and the suppressed graph
/// on the branch vertices, or `None` if suppression does not produce a
/// simple graph (loops, parallel ears, branch-free cycles, low degrees).
fn suppress(g: &Graph) -> Option<(EarDecomposition, Graph)> {
    if g.order() == 0 || g.min_degree() < 2 {
        return None;
    }
    let branch: Vec<_> = g.vertices().filter(|&v| g.degree(v) >= 3).collect();
    if branch.is_empty() {
        return None;
    }
    let mut index = vec![usize::MAX; g.order()];
    for (i, &b) in branch.iter().enumerate() {
        index[b] = i;
    }
    let mut covered = vec![false; g.order()];
    let mut ears = Vec::new();
    let mut pairs = BTreeSet::new();
    for &b in &branch {
        covered[b] = true;
        for &first in g.neighbors(b) {
            let path = walk_ear(g, b, first);
            let end = *path.last().unwrap();
            if end == b {
                return None;
            }
            for &v in &path {
                covered[v] = true;
            }
            if b < end {
                if !pairs.insert((b, end)) {
                    return None;
                }
                ears.push(path);
            }
        }
    }
    if covered.iter().any(|&c| !c) {
        return None;
    }
    ears.sort();
    let edges: Vec<_> = pairs.iter().map(|&(a, b)| (index[a], index[b])).collect();
    let h = Graph::new(branch.len(), &edges).ok()?;
    Some((
        EarDecomposition {
            ears,
            branch_vertices: branch,
        },
        h,
    ))
}

/// True iff `g` is a subdivision of a simple 3-connected graph.
pub fn is_subdivision_of_3connected(g: &Graph) -> bool {
    suppress(g).is_some_and(|(_, h)| is_k_connected(&h, 3))
}

pub fn ears_and_branch_count(g: &Graph) -> Result<EarDecomposition, ConnectivityError> {
    match suppress(g) {
        Some((ears, h)) if is_k_connected(&h, 3) => Ok(ears),
        _ => Err(ConnectivityError::NotASubdivision),
    }
}
