//! Search for connectivity-keeping copies of a tree.
//!
//! A copy `T'` of `T` in `G` keeps k-connectivity when `κ(G − V(T')) ≥ k`.
//! The brute-force search enumerates every labeled embedding and is the
//! ground truth; the guided search builds a few candidates per seed the
//! way the existence proofs do (spine or legs first, then the leaves) and
//! is sound but incomplete.

use std::collections::{HashSet, VecDeque};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::connectivity::vertex_connectivity;
use crate::constructive::{extend_leaves, extend_subtree_with, EmbeddingMap, ExtensionMode};
use crate::graph::{Graph, Vertex};
use crate::tree_shapes::{bfs_order, ShapeError, ShapeKind, TreeShape, TreeSpec};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KeeperError {
    #[error("tree of order {tree} does not fit in a graph of order {graph}")]
    TreeTooLarge { tree: usize, graph: usize },
    #[error(transparent)]
    Shape(#[from] ShapeError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KeeperCertificate {
    pub embedding: EmbeddingMap,
    pub residual_kappa: usize,
    pub k: usize,
    pub tree: TreeSpec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "certificate", rename_all = "snake_case")]
pub enum Verdict {
    Found(KeeperCertificate),
    /// Every labeled embedding was examined and none keeps k-connectivity.
    ProvenNone,
    /// The budget ran out, or the guided heuristics found nothing.
    BudgetExhausted,
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Found(_) => "Found",
            Verdict::ProvenNone => "ProvenNone",
            Verdict::BudgetExhausted => "BudgetExhausted",
        }
    }

    pub fn certificate(&self) -> Option<&KeeperCertificate> {
        match self {
            Verdict::Found(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    #[serde(flatten)]
    pub verdict: Verdict,
    pub embeddings_examined: u64,
    /// Wall-clock time; not serialized so records stay reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SearchOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self.verdict, Verdict::Found(_))
    }

    /// Same outcome with a different timing, for comparisons.
    pub fn with_elapsed(self, elapsed: Duration) -> Self {
        SearchOutcome { elapsed, ..self }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStrategy {
    Guided,
    BruteForce,
}

/// Lazy stream of all labeled embeddings of a tree into a graph.
///
/// Tree vertices are placed in BFS order from vertex 0. The first one
/// tries every graph vertex, later ones the neighbors of their parent's
/// image, in ascending id order. Graph vertices of too small degree are
/// skipped.
pub struct Embeddings<'a> {
    g: &'a Graph,
    tree: &'a Graph,
    order: Vec<Vertex>,
    parent_pos: Vec<usize>,
    all: Vec<Vertex>,
    assign: Vec<Vertex>,
    cursor: Vec<usize>,
    used: Vec<bool>,
    depth: usize,
    done: bool,
}

pub fn enumerate_embeddings<'a>(g: &'a Graph, shape: &'a TreeShape) -> Embeddings<'a> {
    let tree = shape.tree();
    let (order, parent) = bfs_order(tree, 0);
    let mut pos = vec![0; tree.order()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let parent_pos = order.iter().map(|&v| parent[v].map_or(0, |p| pos[p])).collect();
    let n = order.len();
    Embeddings {
        g,
        tree,
        order,
        parent_pos,
        all: g.vertices().collect(),
        assign: vec![0; n],
        cursor: vec![0; n],
        used: vec![false; g.order()],
        depth: 0,
        done: n == 0 || n > g.order(),
    }
}

impl Iterator for Embeddings<'_> {
    type Item = EmbeddingMap;

    fn next(&mut self) -> Option<EmbeddingMap> {
        let n = self.order.len();
        'outer: while !self.done {
            let d = self.depth;
            let cands: &[Vertex] = if d == 0 {
                &self.all
            } else {
                self.g.neighbors(self.assign[self.parent_pos[d]])
            };
            let need = self.tree.degree(self.order[d]);
            while self.cursor[d] < cands.len() {
                let c = cands[self.cursor[d]];
                self.cursor[d] += 1;
                if self.used[c] || self.g.degree(c) < need {
                    continue;
                }
                self.assign[d] = c;
                if d + 1 == n {
                    let map = self.order.iter().copied().zip(self.assign.iter().copied()).collect();
                    return Some(map);
                }
                self.used[c] = true;
                self.depth += 1;
                self.cursor[self.depth] = 0;
                continue 'outer;
            }
            if d == 0 {
                self.done = true;
            } else {
                self.depth -= 1;
                self.used[self.assign[self.depth]] = false;
            }
        }
        None
    }
}

/// `κ(g − image)`.
pub fn residual_kappa(g: &Graph, image: &[Vertex]) -> usize {
    let mut keep = vec![true; g.order()];
    for &v in image {
        keep[v] = false;
    }
    vertex_connectivity(&g.induced_by_mask(&keep).graph).kappa
}

/// Exhaustive search; first embedding (in enumeration order) that keeps
/// k-connectivity wins.
pub fn brute_force_keeper(g: &Graph, shape: &TreeShape, k: usize) -> Result<SearchOutcome, KeeperError> {
    brute_force_with_budget(g, shape, k, u64::MAX)
}

fn brute_force_with_budget(
    g: &Graph,
    shape: &TreeShape,
    k: usize,
    budget: u64,
) -> Result<SearchOutcome, KeeperError> {
    check_fits(g, shape)?;
    let start = Instant::now();
    let mut failed: HashSet<Vec<Vertex>> = HashSet::new();
    let mut examined = 0u64;
    for emb in enumerate_embeddings(g, shape) {
        if examined == budget {
            return Ok(outcome(Verdict::BudgetExhausted, examined, start));
        }
        examined += 1;
        let image = emb.image();
        if failed.contains(&image) {
            continue;
        }
        let kappa = residual_kappa(g, &image);
        if kappa >= k {
            return Ok(outcome(found(emb, kappa, k, shape), examined, start));
        }
        failed.insert(image);
    }
    Ok(outcome(Verdict::ProvenNone, examined, start))
}

pub fn find_keeper(
    g: &Graph,
    shape: &TreeShape,
    k: usize,
    strategy: SearchStrategy,
    budget: u64,
) -> Result<SearchOutcome, KeeperError> {
    match strategy {
        SearchStrategy::BruteForce => brute_force_with_budget(g, shape, k, budget),
        SearchStrategy::Guided => guided(g, shape, k, budget),
    }
}

/// For every seed vertex in ascending order, and every neighbor of the
/// seed as the second vertex, build one candidate copy:
/// caterpillars grow the spine greedily and attach the pendants with
/// [`extend_leaves`]; spiders grow every leg but its tip greedily and
/// attach the tips the same way; other trees use the subtree extension
/// from the root. Candidates failing a precondition are skipped.
fn guided(g: &Graph, shape: &TreeShape, k: usize, budget: u64) -> Result<SearchOutcome, KeeperError> {
    check_fits(g, shape)?;
    let start = Instant::now();
    let mut tried: HashSet<Vec<Vertex>> = HashSet::new();
    let mut examined = 0u64;
    for seed in g.vertices() {
        let seconds: Vec<Option<Vertex>> = if shape.order() == 1 {
            vec![None]
        } else {
            g.neighbors(seed).iter().copied().map(Some).collect()
        };
        for second in seconds {
            let Some(emb) = candidate(g, shape, seed, second) else {
                continue;
            };
            if examined == budget {
                return Ok(outcome(Verdict::BudgetExhausted, examined, start));
            }
            examined += 1;
            let image = emb.image();
            if !tried.insert(image.clone()) {
                continue;
            }
            let kappa = residual_kappa(g, &image);
            if kappa >= k {
                let v = found(emb, kappa, k, shape);
                debug_assert!(verify_certificate(g, k, v.certificate().unwrap()));
                return Ok(outcome(v, examined, start));
            }
        }
    }
    Ok(outcome(Verdict::BudgetExhausted, examined, start))
}

fn candidate(g: &Graph, shape: &TreeShape, seed: Vertex, second: Option<Vertex>) -> Option<EmbeddingMap> {
    let tree = shape.tree();
    let mode = if g.is_bipartite() {
        ExtensionMode::Bipartite
    } else {
        ExtensionMode::General
    };
    let mut used = vec![false; g.order()];
    let mut emb = EmbeddingMap::new();
    let place = |emb: &mut EmbeddingMap, used: &mut [bool], a: Vertex, b: Vertex| {
        used[b] = true;
        emb.insert(a, b);
    };
    match shape.kind() {
        ShapeKind::Caterpillar { spine, .. } => {
            let spine_images = greedy_path(g, seed, second, spine.len(), &mut used)?;
            for (&a, &b) in spine.iter().zip(&spine_images) {
                place(&mut emb, &mut used, a, b);
            }
            let leaves: Vec<_> = tree.vertices().filter(|v| !spine.contains(v)).collect();
            if leaves.is_empty() {
                return Some(emb);
            }
            if mode == ExtensionMode::General {
                return extend_subtree_with(g, shape, &emb, mode).ok();
            }
            extend_leaves(g, shape, &leaves, &emb).ok()
        }
        ShapeKind::Spider { center, .. } => {
            place(&mut emb, &mut used, *center, seed);
            let mut tips = Vec::new();
            let mut first_leg = true;
            for &start in tree.neighbors(*center) {
                let leg = walk_leg(tree, *center, start);
                let body = &leg[..leg.len() - 1];
                tips.push(leg[leg.len() - 1]);
                if body.is_empty() {
                    continue;
                }
                // The requested second vertex goes to the first leg that has a body.
                let hint = if first_leg { second } else { None };
                first_leg = false;
                let images = greedy_path_from(g, seed, hint, body.len(), &mut used)?;
                for (&a, &b) in body.iter().zip(&images) {
                    place(&mut emb, &mut used, a, b);
                }
            }
            if mode == ExtensionMode::General {
                return extend_subtree_with(g, shape, &emb, mode).ok();
            }
            tips.sort_unstable();
            extend_leaves(g, shape, &tips, &emb).ok()
        }
        ShapeKind::Generic => {
            place(&mut emb, &mut used, 0, seed);
            if let (Some(s), Some(&child)) = (second, tree.neighbors(0).first()) {
                place(&mut emb, &mut used, child, s);
            }
            extend_subtree_with(g, shape, &emb, mode).ok()
        }
    }
}

/// Path of `len` vertices starting at `seed` (then `second` if given),
/// extended with the smallest unused neighbor. Marks the vertices used.
fn greedy_path(
    g: &Graph,
    seed: Vertex,
    second: Option<Vertex>,
    len: usize,
    used: &mut [bool],
) -> Option<Vec<Vertex>> {
    used[seed] = true;
    let mut path = vec![seed];
    if len > 1 {
        path.extend(greedy_path_from(g, seed, second, len - 1, used)?);
    }
    Some(path)
}

/// `len` further vertices continuing a path from `from`.
fn greedy_path_from(
    g: &Graph,
    from: Vertex,
    first: Option<Vertex>,
    len: usize,
    used: &mut [bool],
) -> Option<Vec<Vertex>> {
    let mut out = Vec::with_capacity(len);
    let mut end = from;
    for i in 0..len {
        let next = match first {
            Some(f) if i == 0 && !used[f] && g.has_edge(end, f) => f,
            _ => g.neighbors(end).iter().copied().find(|&w| !used[w])?,
        };
        used[next] = true;
        out.push(next);
        end = next;
    }
    Some(out)
}

/// Tree vertices of the leg that starts at `start`, outward from `center`.
fn walk_leg(tree: &Graph, center: Vertex, start: Vertex) -> Vec<Vertex> {
    let mut leg = vec![start];
    let mut queue = VecDeque::from([(center, start)]);
    while let Some((prev, cur)) = queue.pop_front() {
        if let Some(&next) = tree.neighbors(cur).iter().find(|&&w| w != prev) {
            leg.push(next);
            queue.push_back((cur, next));
        }
    }
    leg
}

/// Replays a certificate from scratch: the embedding must be a valid copy
/// of the tree, and the freshly computed residual κ must equal the stored
/// one and reach both `k` and the certificate's own `k`.
pub fn verify_certificate(g: &Graph, k: usize, cert: &KeeperCertificate) -> bool {
    let Ok(shape) = TreeShape::from_spec(&cert.tree) else {
        return false;
    };
    if !cert.embedding.is_embedding_of(g, shape.tree()) {
        return false;
    }
    let kappa = residual_kappa(g, &cert.embedding.image());
    kappa == cert.residual_kappa && kappa >= k && kappa >= cert.k
}

fn check_fits(g: &Graph, shape: &TreeShape) -> Result<(), KeeperError> {
    if shape.order() > g.order() {
        return Err(KeeperError::TreeTooLarge {
            tree: shape.order(),
            graph: g.order(),
        });
    }
    Ok(())
}

fn found(embedding: EmbeddingMap, residual_kappa: usize, k: usize, shape: &TreeShape) -> Verdict {
    Verdict::Found(KeeperCertificate {
        embedding,
        residual_kappa,
        k,
        tree: shape.spec().clone(),
    })
}

fn outcome(verdict: Verdict, embeddings_examined: u64, start: Instant) -> SearchOutcome {
    SearchOutcome {
        verdict,
        embeddings_examined,
        elapsed: start.elapsed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent enumerator: all injective maps in lexicographic order,
    /// filtered by edge preservation.
    fn all_embeddings(g: &Graph, tree: &Graph) -> Vec<Vec<Vertex>> {
        fn rec(g: &Graph, tree: &Graph, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
            if cur.len() == tree.order() {
                if tree.edges().all(|(a, b)| g.has_edge(cur[a], cur[b])) {
                    out.push(cur.clone());
                }
                return;
            }
            for v in g.vertices() {
                if !cur.contains(&v) {
                    cur.push(v);
                    rec(g, tree, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(g, tree, &mut Vec::new(), &mut out);
        out
    }

    /// κ by trying every vertex subset in increasing size.
    fn kappa_exhaustive(g: &Graph) -> usize {
        let n = g.order();
        if n <= 1 {
            return 0;
        }
        for size in 0..n - 1 {
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize != size {
                    continue;
                }
                let keep: Vec<_> = (0..n).filter(|&v| mask & (1 << v) == 0).collect();
                if !g.induced_subgraph(&keep).unwrap().graph.is_connected() {
                    return size;
                }
            }
        }
        n - 1
    }

    fn keeper_exists(g: &Graph, tree: &Graph, k: usize) -> bool {
        all_embeddings(g, tree).iter().any(|img| {
            let rest: Vec<_> = g.vertices().filter(|v| !img.contains(v)).collect();
            kappa_exhaustive(&g.induced_subgraph(&rest).unwrap().graph) >= k
        })
    }

    #[test]
    fn embedding_counts() {
        let k22 = Graph::complete_bipartite(2, 2);
        let p2 = TreeShape::path(2).unwrap();
        assert_eq!(enumerate_embeddings(&k22, &p2).count(), 8);

        let star = TreeShape::spider(&[1, 1, 1]).unwrap();
        assert_eq!(enumerate_embeddings(&Graph::path(3), &star).count(), 0);
        assert_eq!(enumerate_embeddings(&Graph::complete_bipartite(1, 3), &star).count(), 6);
    }

    #[test]
    fn enumeration_matches_independent_enumerator() {
        let graphs = [
            Graph::complete_bipartite(3, 3),
            Graph::cycle(6),
            Graph::complete(4),
            Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5)]).unwrap(),
        ];
        let shapes = [
            TreeShape::path(3).unwrap(),
            TreeShape::spider(&[1, 2]).unwrap(),
            TreeShape::spider(&[1, 1, 1]).unwrap(),
            TreeShape::caterpillar(&[1, 1]).unwrap(),
        ];
        for g in &graphs {
            for s in &shapes {
                let mut ours: Vec<Vec<Vertex>> = enumerate_embeddings(g, s)
                    .map(|e| e.iter().map(|(_, b)| b).collect())
                    .collect();
                let n = ours.len();
                ours.sort();
                ours.dedup();
                assert_eq!(ours.len(), n, "duplicates");
                assert_eq!(ours, all_embeddings(g, s.tree()));
            }
        }
    }

    #[test]
    fn brute_force_examples() {
        let k66 = Graph::complete_bipartite(6, 6);
        let out = brute_force_keeper(&k66, &TreeShape::path(2).unwrap(), 3).unwrap();
        let cert = out.verdict.certificate().unwrap();
        assert_eq!(cert.residual_kappa, 5);
        assert!(verify_certificate(&k66, 3, cert));

        let k33 = Graph::complete_bipartite(3, 3);
        let out = brute_force_keeper(&k33, &TreeShape::path(3).unwrap(), 2).unwrap();
        assert_eq!(out.verdict, Verdict::ProvenNone);
        assert_eq!(out.embeddings_examined, 36);

        let p4 = Graph::path(4);
        let out = brute_force_keeper(&p4, &TreeShape::path(4).unwrap(), 1).unwrap();
        assert_eq!(out.verdict, Verdict::ProvenNone);

        assert_eq!(
            brute_force_keeper(&Graph::path(3), &TreeShape::path(4).unwrap(), 1),
            Err(KeeperError::TreeTooLarge { tree: 4, graph: 3 })
        );
    }

    #[test]
    fn guided_examples() {
        let k55 = Graph::complete_bipartite(5, 5);
        let star = TreeShape::spider(&[1, 1]).unwrap();
        let out = find_keeper(&k55, &star, 3, SearchStrategy::Guided, DEFAULT_BUDGET).unwrap();
        let cert = out.verdict.certificate().unwrap();
        assert_eq!(cert.residual_kappa, 3);
        assert!(verify_certificate(&k55, 3, cert));

        let c8 = Graph::cycle(8);
        let p2 = TreeShape::path(2).unwrap();
        let guided = find_keeper(&c8, &p2, 2, SearchStrategy::Guided, DEFAULT_BUDGET).unwrap();
        assert_eq!(guided.verdict, Verdict::BudgetExhausted);
        let brute = find_keeper(&c8, &p2, 2, SearchStrategy::BruteForce, DEFAULT_BUDGET).unwrap();
        assert_eq!(brute.verdict, Verdict::ProvenNone);
        assert_eq!(brute, brute_force_keeper(&c8, &p2, 2).unwrap().with_elapsed(brute.elapsed));
    }

    #[test]
    fn guided_handles_each_shape_kind() {
        let k77 = Graph::complete_bipartite(7, 7);
        let generic = TreeShape::from_tree(
            Graph::new(7, &[(0, 1), (1, 2), (2, 3), (1, 4), (4, 5), (0, 6)]).unwrap(),
        )
        .unwrap();
        let shapes = [
            TreeShape::caterpillar(&[1, 0, 2]).unwrap(),
            TreeShape::spider(&[1, 2, 2]).unwrap(),
            TreeShape::path(1).unwrap(),
            generic,
        ];
        for s in &shapes {
            let out = find_keeper(&k77, s, 3, SearchStrategy::Guided, DEFAULT_BUDGET).unwrap();
            let cert = out.verdict.certificate().expect("found");
            assert!(verify_certificate(&k77, 3, cert), "{:?}", s.spec());
        }
        // non-bipartite host goes through the general extension
        let k8 = Graph::complete(8);
        let out = find_keeper(&k8, &shapes[1], 1, SearchStrategy::Guided, DEFAULT_BUDGET).unwrap();
        assert!(verify_certificate(&k8, 1, out.verdict.certificate().unwrap()));
    }

    #[test]
    fn budget_is_respected() {
        let k44 = Graph::complete_bipartite(4, 4);
        let p3 = TreeShape::path(3).unwrap();
        let out = find_keeper(&k44, &p3, 3, SearchStrategy::BruteForce, 5).unwrap();
        assert_eq!(out.verdict, Verdict::BudgetExhausted);
        assert_eq!(out.embeddings_examined, 5);
    }

    #[test]
    fn corrupted_certificates_fail() {
        let k66 = Graph::complete_bipartite(6, 6);
        let out = brute_force_keeper(&k66, &TreeShape::path(3).unwrap(), 3).unwrap();
        let cert = out.verdict.certificate().unwrap().clone();
        assert!(verify_certificate(&k66, 3, &cert));

        let mut bad = cert.clone();
        let (a, b) = bad.embedding.iter().last().unwrap();
        bad.embedding.insert(a, if b == 11 { 10 } else { 11 });
        assert!(!verify_certificate(&k66, 3, &bad));

        let mut raised = cert.clone();
        raised.k = raised.residual_kappa + 1;
        assert!(!verify_certificate(&k66, 3, &raised));
        assert!(!verify_certificate(&k66, cert.residual_kappa + 1, &cert));

        let mut lied = cert;
        lied.residual_kappa += 1;
        assert!(!verify_certificate(&k66, 3, &lied));
    }

    #[test]
    fn outcome_record_shape() {
        let k22 = Graph::complete_bipartite(2, 2);
        let out = brute_force_keeper(&k22, &TreeShape::path(2).unwrap(), 1).unwrap();
        let json = serde_json::to_string(&out).unwrap();
        assert_eq!(
            json,
            r#"{"verdict":"found","certificate":{"embedding":[[0,0],[1,2]],"residual_kappa":1,"k":1,"tree":{"kind":"caterpillar","spec":[0,0]}},"embeddings_examined":1}"#
        );
        let back: SearchOutcome = serde_json::from_str(&json).unwrap();
        assert_eq!(back.verdict, out.verdict);
        let none = serde_json::to_string(&Verdict::ProvenNone).unwrap();
        assert_eq!(none, r#"{"verdict":"proven_none"}"#);
    }

    fn small_graph() -> impl Strategy<Value = Graph> {
        (2usize..=7).prop_flat_map(|n| {
            proptest::collection::vec(proptest::bool::weighted(0.6), n * (n - 1) / 2).prop_map(move |mask| {
                let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
                let edges: Vec<_> = pairs.into_iter().zip(mask).filter(|(_, m)| *m).map(|(e, _)| e).collect();
                Graph::new(n, &edges).unwrap()
            })
        })
    }

    fn small_tree() -> impl Strategy<Value = TreeShape> {
        prop_oneof![
            (1usize..=4).prop_map(|n| TreeShape::path(n).unwrap()),
            proptest::collection::vec(1usize..=2, 1..=3).prop_map(|l| TreeShape::spider(&l).unwrap()),
            proptest::collection::vec(0usize..=1, 1..=2).prop_map(|c| TreeShape::caterpillar(&c).unwrap()),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn brute_force_agrees_with_second_enumerator(g in small_graph(), s in small_tree(), k in 0usize..=3) {
            prop_assume!(s.order() <= g.order());
            let out = brute_force_keeper(&g, &s, k).unwrap();
            let expected = keeper_exists(&g, s.tree(), k);
            prop_assert_eq!(out.is_found(), expected);
            if let Some(cert) = out.verdict.certificate() {
                prop_assert!(verify_certificate(&g, k, cert));
                prop_assert_eq!(cert.residual_kappa, {
                    let img = cert.embedding.image();
                    let rest: Vec<_> = g.vertices().filter(|v| !img.contains(v)).collect();
                    kappa_exhaustive(&g.induced_subgraph(&rest).unwrap().graph)
                });
                for lower in 0..=k {
                    let weaker = KeeperCertificate { k: lower, ..cert.clone() };
                    prop_assert!(verify_certificate(&g, lower, &weaker));
                }
            }
            let guided = find_keeper(&g, &s, k, SearchStrategy::Guided, DEFAULT_BUDGET).unwrap();
            if let Some(cert) = guided.verdict.certificate() {
                prop_assert!(verify_certificate(&g, k, cert));
                prop_assert!(out.is_found(), "guided found a keeper brute force missed");
            }
        }
    }
}
