//! Constructive path and subtree building in (bipartite) graphs.
//!
//! Every "pick any" step picks the smallest graph id, so outputs are
//! reproducible. Each routine re-checks the length or embedding guarantee
//! it is supposed to deliver and reports a miss as an error instead of
//! returning a short result.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Side, Vertex};
use crate::tree_shapes::TreeShape;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("host graph is not bipartite")]
    NotBipartite,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("embedding does not respect a fixed side convention")]
    SideMismatch,
    #[error("vertex has no neighbor on the path")]
    NoNeighborOnPath,
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    /// The degree hypothesis held but the greedy step found no free vertex.
    #[error("no fresh neighbor for tree vertex {tree_vertex} at graph vertex {graph_vertex}")]
    InsufficientFreshNeighbors {
        tree_vertex: Vertex,
        graph_vertex: Vertex,
    },
    /// A guaranteed length bound was not met.
    #[error("path of order {achieved} misses the guaranteed order {required}")]
    BoundMissed { required: usize, achieved: usize },
}

impl ConstructError {
    /// Errors that can only come from a broken internal invariant.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            ConstructError::InsufficientFreshNeighbors { .. } | ConstructError::BoundMissed { .. }
        )
    }
}

/// A path given by its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PathWitness {
    vertices: Vec<Vertex>,
}

impl PathWitness {
    /// Checks distinctness and adjacency of consecutive vertices in `host`.
    pub fn new(host: &Graph, vertices: Vec<Vertex>) -> Result<Self, ConstructError> {
        let mut seen = vec![false; host.order()];
        for &v in &vertices {
            if v >= host.order() {
                return Err(ConstructError::InvalidPath(format!("vertex {v} out of range")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(ConstructError::InvalidPath(format!("vertex {v} repeated")));
            }
        }
        if let Some(w) = vertices.windows(2).find(|w| !host.has_edge(w[0], w[1])) {
            return Err(ConstructError::InvalidPath(format!(
                "{} and {} are not adjacent",
                w[0], w[1]
            )));
        }
        Ok(PathWitness { vertices })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn into_vertices(self) -> Vec<Vertex> {
        self.vertices
    }
}

/// Injective map from tree vertices to graph vertices, possibly partial.
/// Serializes as `[[tree, graph], ...]` sorted by tree vertex.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<[Vertex; 2]>", into = "Vec<[Vertex; 2]>")]
pub struct EmbeddingMap {
    pairs: BTreeMap<Vertex, Vertex>,
}

impl From<Vec<[Vertex; 2]>> for EmbeddingMap {
    fn from(v: Vec<[Vertex; 2]>) -> Self {
        EmbeddingMap {
            pairs: v.into_iter().map(|[a, b]| (a, b)).collect(),
        }
    }
}

impl From<EmbeddingMap> for Vec<[Vertex; 2]> {
    fn from(e: EmbeddingMap) -> Self {
        e.pairs.into_iter().map(|(a, b)| [a, b]).collect()
    }
}

impl FromIterator<(Vertex, Vertex)> for EmbeddingMap {
    fn from_iter<I: IntoIterator<Item = (Vertex, Vertex)>>(iter: I) -> Self {
        EmbeddingMap {
            pairs: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for EmbeddingMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<_> = self.pairs.iter().map(|(a, b)| format!("{a}:{b}")).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for EmbeddingMap {
    type Err = ConstructError;

    /// `tree:graph` pairs separated by commas, e.g. `0:3,1:4`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ConstructError::InvalidEmbedding(format!("cannot parse `{s}`"));
        s.split(',')
            .filter(|p| !p.trim().is_empty())
            .map(|p| {
                let (a, b) = p.split_once(':').ok_or_else(bad)?;
                Ok((
                    a.trim().parse().map_err(|_| bad())?,
                    b.trim().parse().map_err(|_| bad())?,
                ))
            })
            .collect()
    }
}

impl EmbeddingMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, tree_vertex: Vertex) -> Option<Vertex> {
        self.pairs.get(&tree_vertex).copied()
    }

    pub fn insert(&mut self, tree_vertex: Vertex, graph_vertex: Vertex) {
        self.pairs.insert(tree_vertex, graph_vertex);
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.pairs.iter().map(|(&a, &b)| (a, b))
    }

    pub fn domain(&self) -> Vec<Vertex> {
        self.pairs.keys().copied().collect()
    }

    /// Graph vertices hit by the map, sorted.
    pub fn image(&self) -> Vec<Vertex> {
        let mut img: Vec<_> = self.pairs.values().copied().collect();
        img.sort_unstable();
        img
    }

    pub fn restrict(&self, domain: &[Vertex]) -> EmbeddingMap {
        self.iter().filter(|(a, _)| domain.contains(a)).collect()
    }

    /// Injective, in range, and every tree edge inside the domain lands on
    /// a graph edge. The domain must also induce a connected subtree.
    pub fn check_partial(&self, host: &Graph, tree: &Graph) -> Result<(), ConstructError> {
        let bad = |m: String| Err(ConstructError::InvalidEmbedding(m));
        let mut used = vec![false; host.order()];
        for (a, b) in self.iter() {
            if a >= tree.order() {
                return bad(format!("tree vertex {a} out of range"));
            }
            if b >= host.order() {
                return bad(format!("graph vertex {b} out of range"));
            }
            if std::mem::replace(&mut used[b], true) {
                return bad(format!("graph vertex {b} used twice"));
            }
        }
        for (a, c) in tree.edges() {
            if let (Some(x), Some(y)) = (self.get(a), self.get(c)) {
                if !host.has_edge(x, y) {
                    return bad(format!("tree edge {a}-{c} maps to non-edge {x}-{y}"));
                }
            }
        }
        let domain = self.domain();
        if let Some(&root) = domain.first() {
            let mut reached = vec![false; tree.order()];
            reached[root] = true;
            let mut stack = vec![root];
            let mut count = 1;
            while let Some(u) = stack.pop() {
                for &w in tree.neighbors(u) {
                    if !reached[w] && self.pairs.contains_key(&w) {
                        reached[w] = true;
                        count += 1;
                        stack.push(w);
                    }
                }
            }
            if count != domain.len() {
                return bad("domain is not a connected subtree".into());
            }
        }
        Ok(())
    }

    /// Valid total embedding of `tree` into `host`.
    pub fn is_embedding_of(&self, host: &Graph, tree: &Graph) -> bool {
        self.len() == tree.order() && self.check_partial(host, tree).is_ok()
    }
}

/// Degree hypothesis and guaranteed order for [`grow_path`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GrowVariant {
    /// δ ≥ ⌈m/2⌉ gives a path of order ≥ m.
    I,
    /// δ ≥ ⌊m/2⌋ gives a path of order ≥ m − 1.
    II,
    /// δ ≥ m gives a path of order ≥ 2m.
    III,
}

impl GrowVariant {
    pub const ALL: [GrowVariant; 3] = [GrowVariant::I, GrowVariant::II, GrowVariant::III];

    pub fn required_min_degree(self, m: usize) -> usize {
        match self {
            GrowVariant::I => m.div_ceil(2),
            GrowVariant::II => m / 2,
            GrowVariant::III => m,
        }
    }

    pub fn guaranteed_order(self, m: usize) -> usize {
        match self {
            GrowVariant::I => m,
            GrowVariant::II => m.saturating_sub(1),
            GrowVariant::III => 2 * m,
        }
    }
}

impl FromStr for GrowVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "i" | "1" => Ok(GrowVariant::I),
            "ii" | "2" => Ok(GrowVariant::II),
            "iii" | "3" => Ok(GrowVariant::III),
            _ => Err(format!("unknown variant `{s}` (expected i, ii or iii)")),
        }
    }
}

impl fmt::Display for GrowVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GrowVariant::I => "i",
            GrowVariant::II => "ii",
            GrowVariant::III => "iii",
        })
    }
}

/// Grows a path greedily from the lexicographically smallest edge: extend
/// at the last vertex with its smallest unused neighbor until stuck, then
/// do the same at the first vertex.
///
/// When the tail gets stuck all of its (≥ δ) neighbors lie on the path on
/// the opposite side, which forces order ≥ 2δ in a bipartite graph.
pub fn grow_path(g: &Graph, m: usize, variant: GrowVariant) -> Result<PathWitness, ConstructError> {
    g.bipartition().map_err(|_| ConstructError::NotBipartite)?;
    let required = variant.required_min_degree(m);
    let found = g.min_degree();
    if found < required {
        return Err(ConstructError::PreconditionViolated(format!(
            "variant {variant} with m = {m} needs minimum degree {required}, found {found}"
        )));
    }
    let vertices = match g.edges().next() {
        None => g.vertices().take(1).collect(),
        Some((u, v)) => {
            let mut used = vec![false; g.order()];
            used[u] = true;
            used[v] = true;
            let mut path = VecDeque::from([u, v]);
            extend_greedily(g, &mut path, &mut used, true);
            path.into()
        }
    };
    let path = PathWitness::new(g, vertices)?;
    let bound = variant.guaranteed_order(m);
    if path.order() < bound {
        return Err(ConstructError::BoundMissed {
            required: bound,
            achieved: path.order(),
        });
    }
    Ok(path)
}

/// Extends at the back, then (if `both_ends`) at the front, always taking
/// the smallest unused neighbor.
pub(crate) fn extend_greedily(g: &Graph, path: &mut VecDeque<Vertex>, used: &mut [bool], both_ends: bool) {
    let step = |end: Vertex, used: &[bool]| g.neighbors(end).iter().copied().find(|&w| !used[w]);
    while let Some(w) = step(*path.back().unwrap(), used) {
        used[w] = true;
        path.push_back(w);
    }
    if both_ends {
        while let Some(w) = step(*path.front().unwrap(), used) {
            used[w] = true;
            path.push_front(w);
        }
    }
}

/// The two v-paths `v·v_a…v_p` and `v·v_b…v_1`, where `a`/`b` are the first
/// and last positions on the path adjacent to `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VPathCandidates {
    pub via_first: Vec<Vertex>,
    pub via_last: Vec<Vertex>,
    /// `|N(v) ∩ V(P)|`.
    pub k: usize,
}

impl VPathCandidates {
    pub fn longer(&self) -> &[Vertex] {
        if self.via_first.len() >= self.via_last.len() {
            &self.via_first
        } else {
            &self.via_last
        }
    }
}

pub fn v_path_candidates(g: &Graph, path: &PathWitness, v: Vertex) -> Result<VPathCandidates, ConstructError> {
    let p = PathWitness::new(g, path.vertices().to_vec())?;
    if v >= g.order() {
        return Err(ConstructError::InvalidPath(format!("vertex {v} out of range")));
    }
    if p.contains(v) {
        return Err(ConstructError::InvalidPath(format!("{v} already lies on the path")));
    }
    let hits: Vec<_> = p
        .vertices()
        .iter()
        .enumerate()
        .filter(|(_, &u)| g.has_edge(u, v))
        .map(|(i, _)| i)
        .collect();
    let (Some(&a), Some(&b)) = (hits.first(), hits.last()) else {
        return Err(ConstructError::NoNeighborOnPath);
    };
    let vs = p.vertices();
    let mut via_first = vec![v];
    via_first.extend_from_slice(&vs[a..]);
    let mut via_last = vec![v];
    via_last.extend(vs[..=b].iter().rev());
    Ok(VPathCandidates {
        via_first,
        via_last,
        k: hits.len(),
    })
}

/// In a bipartite graph: a v-path of order ≥ ⌈k + (p+1)/2⌉.
pub fn attach_v_path_bipartite(g: &Graph, path: &PathWitness, v: Vertex) -> Result<PathWitness, ConstructError> {
    g.bipartition().map_err(|_| ConstructError::NotBipartite)?;
    let c = v_path_candidates(g, path, v)?;
    let required = c.k + (path.order() + 1).div_ceil(2);
    finish_v_path(g, c, required)
}

/// In any graph: a v-path of order ≥ ⌈(p + k)/2 + 1⌉.
pub fn attach_v_path_general(g: &Graph, path: &PathWitness, v: Vertex) -> Result<PathWitness, ConstructError> {
    let c = v_path_candidates(g, path, v)?;
    let required = (path.order() + c.k + 2).div_ceil(2);
    finish_v_path(g, c, required)
}

fn finish_v_path(g: &Graph, c: VPathCandidates, required: usize) -> Result<PathWitness, ConstructError> {
    let out = PathWitness::new(g, c.longer().to_vec())?;
    if out.order() < required {
        return Err(ConstructError::BoundMissed {
            required,
            achieved: out.order(),
        });
    }
    Ok(out)
}

/// Degree threshold used by the subtree extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtensionMode {
    /// Bipartite host, threshold `t = max(|X|, |Y|)` of the target tree.
    Bipartite,
    /// Any host, threshold `|V(T)| − 1`.
    General,
}

/// Extends an embedding of a subtree `S` (the map's domain) to one of all
/// of `target`, in a bipartite host.
pub fn extend_subtree(g: &Graph, target: &TreeShape, emb: &EmbeddingMap) -> Result<EmbeddingMap, ConstructError> {
    extend_subtree_with(g, target, emb, ExtensionMode::Bipartite)
}

/// Extension process: visit tree vertices breadth-first from `S` (ascending
/// ids in the queue), and give each unmapped tree neighbor the smallest
/// unused graph neighbor of its parent's image.
pub fn extend_subtree_with(
    g: &Graph,
    target: &TreeShape,
    emb: &EmbeddingMap,
    mode: ExtensionMode,
) -> Result<EmbeddingMap, ConstructError> {
    let tree = target.tree();
    if emb.is_empty() {
        return Err(ConstructError::InvalidEmbedding("empty subtree".into()));
    }
    emb.check_partial(g, tree)?;
    let threshold = match mode {
        ExtensionMode::Bipartite => {
            check_sides(g, target, emb)?;
            target.t()
        }
        ExtensionMode::General => tree.order() - 1,
    };

    let image = emb.image();
    let mut used = vec![false; g.order()];
    for &b in &image {
        used[b] = true;
    }
    if let Some(v) = g.vertices().find(|&v| !used[v] && g.degree(v) < threshold) {
        return Err(ConstructError::PreconditionViolated(format!(
            "vertex {v} outside the subtree has degree {} < {threshold}",
            g.degree(v)
        )));
    }
    check_deficient_degrees(g, tree, emb, threshold)?;

    let mut out = emb.clone();
    let mut queue: VecDeque<Vertex> = emb.domain().into();
    while let Some(a) = queue.pop_front() {
        let host = out.get(a).unwrap();
        for &b in tree.neighbors(a) {
            if out.get(b).is_some() {
                continue;
            }
            let w = fresh_neighbor(g, host, &used).ok_or(ConstructError::InsufficientFreshNeighbors {
                tree_vertex: b,
                graph_vertex: host,
            })?;
            used[w] = true;
            out.insert(b, w);
            queue.push_back(b);
        }
    }
    debug_assert!(out.is_embedding_of(g, tree));
    Ok(out)
}

/// Adds the leaves `leaves` to an embedding of `target − leaves`, each at
/// the smallest unused neighbor of its attachment vertex.
pub fn extend_leaves(
    g: &Graph,
    target: &TreeShape,
    leaves: &[Vertex],
    emb: &EmbeddingMap,
) -> Result<EmbeddingMap, ConstructError> {
    let tree = target.tree();
    let mut in_l = vec![false; tree.order()];
    for &l in leaves {
        if l >= tree.order() || tree.degree(l) != 1 {
            return Err(ConstructError::InvalidEmbedding(format!("{l} is not a leaf of the tree")));
        }
        in_l[l] = true;
    }
    let expected: Vec<_> = tree.vertices().filter(|&v| !in_l[v]).collect();
    if expected.is_empty() || emb.domain() != expected {
        return Err(ConstructError::InvalidEmbedding(
            "domain must be exactly the tree minus the given leaves".into(),
        ));
    }
    emb.check_partial(g, tree)?;
    check_sides(g, target, emb)?;
    check_deficient_degrees(g, tree, emb, target.t())?;

    let mut used = vec![false; g.order()];
    for b in emb.image() {
        used[b] = true;
    }
    let mut out = emb.clone();
    for l in tree.vertices().filter(|&v| in_l[v]) {
        let a = tree.neighbors(l)[0];
        let host = out.get(a).expect("attachment vertex is mapped");
        let w = fresh_neighbor(g, host, &used).ok_or(ConstructError::InsufficientFreshNeighbors {
            tree_vertex: l,
            graph_vertex: host,
        })?;
        used[w] = true;
        out.insert(l, w);
    }
    debug_assert!(out.is_embedding_of(g, tree));
    Ok(out)
}

fn fresh_neighbor(g: &Graph, v: Vertex, used: &[bool]) -> Option<Vertex> {
    g.neighbors(v).iter().copied().find(|&w| !used[w])
}

/// The host must be bipartite, and the map must send the tree's `X` side
/// into one fixed side of the host (either orientation).
fn check_sides(g: &Graph, target: &TreeShape, emb: &EmbeddingMap) -> Result<(), ConstructError> {
    let host_sides = g.bipartition().map_err(|_| ConstructError::NotBipartite)?;
    let tree_sides = target.bipartition();
    let mut flipped: Option<bool> = None;
    for (a, b) in emb.iter() {
        let f = (tree_sides.side(a) == Side::X) != (host_sides.side(b) == Side::X);
        match flipped {
            None => flipped = Some(f),
            Some(prev) if prev != f => return Err(ConstructError::SideMismatch),
            _ => {}
        }
    }
    Ok(())
}

/// Image vertices whose tree vertex still lacks neighbors need degree ≥ threshold.
fn check_deficient_degrees(
    g: &Graph,
    tree: &Graph,
    emb: &EmbeddingMap,
    threshold: usize,
) -> Result<(), ConstructError> {
    for (a, b) in emb.iter() {
        let in_s = tree
            .neighbors(a)
            .iter()
            .filter(|&&c| emb.get(c).is_some())
            .count();
        if in_s < tree.degree(a) && g.degree(b) < threshold {
            return Err(ConstructError::PreconditionViolated(format!(
                "image {b} of tree vertex {a} has degree {} < {threshold}",
                g.degree(b)
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
#[allow(clippy::int_plus_one)]
mod tests {
    use super::*;
    use crate::tree_shapes::{make_caterpillar, make_spider};

    fn pw(g: &Graph, v: &[Vertex]) -> PathWitness {
        PathWitness::new(g, v.to_vec()).unwrap()
    }

    #[test]
    fn grow_path_examples() {
        let c6 = Graph::cycle(6);
        let p = grow_path(&c6, 4, GrowVariant::I).unwrap();
        assert!(p.order() >= 4);
        assert_eq!(p.order(), 6);

        let k33 = Graph::complete_bipartite(3, 3);
        let p = grow_path(&k33, 3, GrowVariant::III).unwrap();
        assert_eq!(p.vertices(), &[0, 3, 1, 4, 2, 5]);

        let k22 = Graph::complete_bipartite(2, 2);
        assert!(grow_path(&k22, 4, GrowVariant::I).unwrap().order() >= 4);
    }

    #[test]
    fn grow_path_rejects_low_degree_and_odd_cycles() {
        let c6 = Graph::cycle(6);
        assert!(matches!(
            grow_path(&c6, 3, GrowVariant::III),
            Err(ConstructError::PreconditionViolated(_))
        ));
        assert_eq!(
            grow_path(&Graph::cycle(5), 2, GrowVariant::I),
            Err(ConstructError::NotBipartite)
        );
        // degenerate inputs
        assert_eq!(grow_path(&Graph::empty(3), 1, GrowVariant::II).unwrap().order(), 1);
        assert_eq!(grow_path(&Graph::empty(0), 0, GrowVariant::I).unwrap().order(), 0);
    }

    #[test]
    fn bipartite_v_path_examples() {
        // C6 as the path 0..4 plus v = 5 adjacent to both ends
        let c6 = Graph::cycle(6);
        let p = pw(&c6, &[0, 1, 2, 3, 4]);
        let c = v_path_candidates(&c6, &p, 5).unwrap();
        assert_eq!(c.k, 2);
        assert!(c.via_first.len() + c.via_last.len() >= 2 * c.k + p.order() + 1);
        let out = attach_v_path_bipartite(&c6, &p, 5).unwrap();
        assert_eq!(out.order(), 6);
        assert_eq!(out.vertices()[0], 5);

        // v adjacent to exactly one end: prepend
        let g = Graph::path(5);
        let p = pw(&g, &[1, 2, 3, 4]);
        let out = attach_v_path_bipartite(&g, &p, 0).unwrap();
        assert_eq!(out.vertices(), &[0, 1, 2, 3, 4]);

        // v adjacent only to the middle of P3
        let g = Graph::new(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        let p = pw(&g, &[0, 1, 2]);
        let c = v_path_candidates(&g, &p, 3).unwrap();
        assert_eq!((c.via_first.len(), c.via_last.len()), (3, 3));
        assert_eq!(attach_v_path_bipartite(&g, &p, 3).unwrap().order(), 3);
    }

    #[test]
    fn general_v_path_examples() {
        // v = 4 adjacent to both ends of the path 0-1-2-3
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (4, 0), (4, 3)]).unwrap();
        let out = attach_v_path_general(&g, &pw(&g, &[0, 1, 2, 3]), 4).unwrap();
        assert!(out.order() >= 4);
        assert_eq!(out.order(), 5);

        let g = Graph::path(4);
        let out = attach_v_path_general(&g, &pw(&g, &[1, 2, 3]), 0).unwrap();
        assert_eq!(out.order(), 4);

        // v adjacent to all of P5
        let mut edges: Vec<_> = (1..5).map(|i| (i - 1, i)).collect();
        edges.extend((0..5).map(|i| (5, i)));
        let g = Graph::new(6, &edges).unwrap();
        let out = attach_v_path_general(&g, &pw(&g, &[0, 1, 2, 3, 4]), 5).unwrap();
        assert_eq!(out.order(), 6);
    }

    #[test]
    fn v_path_errors() {
        let g = Graph::new(4, &[(0, 1), (1, 2)]).unwrap();
        let p = pw(&g, &[0, 1, 2]);
        assert_eq!(attach_v_path_general(&g, &p, 3), Err(ConstructError::NoNeighborOnPath));
        assert!(matches!(
            attach_v_path_general(&g, &p, 1),
            Err(ConstructError::InvalidPath(_))
        ));
        assert!(PathWitness::new(&g, vec![0, 2]).is_err());
        assert!(PathWitness::new(&g, vec![0, 1, 0]).is_err());
    }

    #[test]
    fn extend_subtree_examples() {
        let k33 = Graph::complete_bipartite(3, 3);
        let star = make_spider(&[1, 1, 1]).unwrap();
        let emb: EmbeddingMap = [(0, 0)].into_iter().collect();
        let out = extend_subtree(&k33, &star, &emb).unwrap();
        assert!(out.is_embedding_of(&k33, star.tree()));
        assert_eq!(out.to_string(), "0:0,1:3,2:4,3:5");

        let p4 = make_caterpillar(&[0, 0, 0, 0]).unwrap();
        let c8 = Graph::cycle(8);
        let emb: EmbeddingMap = [(0, 0), (1, 1)].into_iter().collect();
        let out = extend_subtree(&c8, &p4, &emb).unwrap();
        assert!(out.is_embedding_of(&c8, p4.tree()));
        assert_eq!(out.restrict(&[0, 1]), emb);

        let full = out.clone();
        assert_eq!(extend_subtree(&c8, &p4, &full).unwrap(), full);
    }

    #[test]
    fn extend_subtree_rejects_bad_inputs() {
        let c8 = Graph::cycle(8);
        let star = make_spider(&[1, 1, 1]).unwrap();
        let emb: EmbeddingMap = [(0, 0)].into_iter().collect();
        assert!(matches!(
            extend_subtree(&c8, &star, &emb),
            Err(ConstructError::PreconditionViolated(_))
        ));
        let p4 = make_caterpillar(&[0, 0, 0, 0]).unwrap();
        let not_adjacent: EmbeddingMap = [(0, 0), (1, 2)].into_iter().collect();
        assert!(matches!(
            extend_subtree(&c8, &p4, &not_adjacent),
            Err(ConstructError::InvalidEmbedding(_))
        ));
        let disconnected: EmbeddingMap = [(0, 0), (2, 2)].into_iter().collect();
        assert!(matches!(
            extend_subtree(&c8, &p4, &disconnected),
            Err(ConstructError::InvalidEmbedding(_))
        ));
        assert_eq!(
            extend_subtree(&Graph::cycle(5), &p4, &[(0, 0)].into_iter().collect()),
            Err(ConstructError::NotBipartite)
        );
    }

    #[test]
    fn general_mode_uses_order_threshold() {
        // K5 is not bipartite; the general mode needs degree ≥ |V(T)| - 1.
        let k5 = Graph::complete(5);
        let p4 = make_caterpillar(&[0, 0, 0, 0]).unwrap();
        let emb: EmbeddingMap = [(0, 0)].into_iter().collect();
        let out = extend_subtree_with(&k5, &p4, &emb, ExtensionMode::General).unwrap();
        assert!(out.is_embedding_of(&k5, p4.tree()));
        let star5 = make_spider(&[1, 1, 1, 1, 1]).unwrap();
        assert!(matches!(
            extend_subtree_with(&k5, &star5, &emb, ExtensionMode::General),
            Err(ConstructError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn extend_leaves_examples() {
        let k34 = Graph::complete_bipartite(3, 4);
        let star = make_spider(&[1, 1, 1]).unwrap();
        let emb: EmbeddingMap = [(0, 1)].into_iter().collect();
        let out = extend_leaves(&k34, &star, &[1, 2, 3], &emb).unwrap();
        assert_eq!(out.to_string(), "0:1,1:3,2:4,3:5");

        let p = make_caterpillar(&[0, 0, 0]).unwrap();
        let emb: EmbeddingMap = [(0, 0), (1, 3), (2, 1)].into_iter().collect();
        assert_eq!(extend_leaves(&k34, &p, &[], &emb).unwrap(), emb);

        let cat = make_caterpillar(&[1, 1]).unwrap();
        let k33 = Graph::complete_bipartite(3, 3);
        let spine: EmbeddingMap = [(0, 0), (1, 3)].into_iter().collect();
        let out = extend_leaves(&k33, &cat, &[2, 3], &spine).unwrap();
        assert!(out.is_embedding_of(&k33, cat.tree()));
        assert_eq!(out.restrict(&[0, 1]), spine);
    }

    #[test]
    fn extend_leaves_rejects_non_leaves_and_wrong_domain() {
        let k33 = Graph::complete_bipartite(3, 3);
        let cat = make_caterpillar(&[1, 1]).unwrap();
        let spine: EmbeddingMap = [(0, 0), (1, 3)].into_iter().collect();
        assert!(extend_leaves(&k33, &cat, &[1], &spine).is_err());
        assert!(extend_leaves(&k33, &cat, &[2], &spine).is_err());
    }

    #[test]
    fn embedding_serializes_as_sorted_pairs() {
        let emb: EmbeddingMap = [(2, 7), (0, 5), (1, 6)].into_iter().collect();
        assert_eq!(serde_json::to_string(&emb).unwrap(), "[[0,5],[1,6],[2,7]]");
        let back: EmbeddingMap = serde_json::from_str("[[1,6],[0,5],[2,7]]").unwrap();
        assert_eq!(back, emb);
        assert_eq!("0:5,1:6,2:7".parse::<EmbeddingMap>().unwrap(), emb);
    }

    use proptest::prelude::*;

    /// Random bipartite graph with sides `0..a` and `a..a+b`.
    fn bipartite() -> impl Strategy<Value = Graph> {
        (1usize..=7, 1usize..=7).prop_flat_map(|(a, b)| {
            proptest::collection::vec(proptest::bool::weighted(0.6), a * b).prop_map(move |mask| {
                let edges: Vec<_> = (0..a * b)
                    .filter(|&i| mask[i])
                    .map(|i| (i / b, a + i % b))
                    .collect();
                Graph::new(a + b, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn grow_path_meets_every_admissible_bound(g in bipartite()) {
            for variant in GrowVariant::ALL {
                for m in 0..=g.order() {
                    if g.min_degree() >= variant.required_min_degree(m) {
                        let p = grow_path(&g, m, variant).unwrap();
                        prop_assert!(p.order() >= variant.guaranteed_order(m));
                    }
                }
            }
        }

        #[test]
        fn v_path_candidates_satisfy_counting_inequality(g in bipartite(), seed in 0usize..64) {
            let Ok(p) = grow_path(&g, 0, GrowVariant::I) else { return Ok(()) };
            let outside: Vec<_> = g.vertices().filter(|&v| !p.contains(v)).collect();
            if outside.is_empty() { return Ok(()) }
            let v = outside[seed % outside.len()];
            match v_path_candidates(&g, &p, v) {
                Err(ConstructError::NoNeighborOnPath) => {}
                Err(e) => prop_assert!(false, "{e}"),
                Ok(c) => {
                    prop_assert!(c.via_first.len() + c.via_last.len() >= 2 * c.k + p.order() + 1);
                    let out = attach_v_path_bipartite(&g, &p, v).unwrap();
                    prop_assert_eq!(out.vertices()[0], v);
                    prop_assert!(out.order() >= c.k + (p.order() + 1).div_ceil(2));
                }
            }
        }

        #[test]
        fn extension_from_single_vertex_is_valid(g in bipartite(), legs in proptest::collection::vec(1usize..=2, 1..=3), seed in 0usize..64) {
            let spider = make_spider(&legs).unwrap();
            let root = seed % g.order();
            let emb: EmbeddingMap = [(0, root)].into_iter().collect();
            match extend_subtree(&g, &spider, &emb) {
                Ok(out) => {
                    prop_assert!(out.is_embedding_of(&g, spider.tree()));
                    prop_assert_eq!(out.get(0), Some(root));
                    let hs = g.bipartition().unwrap();
                    for (a, c) in spider.tree().edges() {
                        prop_assert_ne!(hs.side(out.get(a).unwrap()), hs.side(out.get(c).unwrap()));
                    }
                }
                Err(e) => prop_assert!(matches!(e, ConstructError::PreconditionViolated(_)), "{e}"),
            }
        }
    }
}
