//! Caterpillars, spiders and generic trees.
//!
//! A caterpillar is a tree with a path (the spine) touching every edge; it
//! is described by the number of pendant leaves hanging off each spine
//! vertex. A spider has at most one vertex of degree three or more (the
//! center) and is described by its leg lengths.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Bipartition, Graph, GraphError, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("empty shape specification")]
    EmptySpec,
    #[error("spider legs must have length at least 1")]
    ZeroLengthLeg,
    #[error("graph is not a tree")]
    NotATree,
    #[error("invalid tree spec `{0}`")]
    BadSpec(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Serializable description of a tree. Caterpillar and spider specs are
/// replayed through the canonical constructors, so vertex ids round-trip.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "spec", rename_all = "snake_case")]
pub enum TreeSpec {
    Caterpillar(Vec<usize>),
    Spider(Vec<usize>),
    Generic(Vec<[Vertex; 2]>),
}

impl fmt::Display for TreeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            TreeSpec::Caterpillar(p) if p.iter().all(|&c| c == 0) => write!(f, "path:{}", p.len()),
            TreeSpec::Caterpillar(p) => write!(f, "cat:{}", join(p)),
            TreeSpec::Spider(l) => write!(f, "spider:{}", join(l)),
            TreeSpec::Generic(e) => {
                let parts: Vec<_> = e.iter().map(|[a, b]| format!("{a}-{b}")).collect();
                write!(f, "edges:{}", parts.join(","))
            }
        }
    }
}

impl FromStr for TreeSpec {
    type Err = ShapeError;

    /// `path:<order>`, `cat:<c0,c1,..>`, `spider:<l1,l2,..>`, `edges:<a-b,..>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ShapeError::BadSpec(s.to_string());
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        let numbers = |text: &str| -> Result<Vec<usize>, ShapeError> {
            text.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect()
        };
        match kind {
            "path" => {
                let order: usize = rest.trim().parse().map_err(|_| bad())?;
                if order == 0 {
                    return Err(ShapeError::EmptySpec);
                }
                Ok(TreeSpec::Caterpillar(vec![0; order]))
            }
            "cat" => Ok(TreeSpec::Caterpillar(numbers(rest)?)),
            "spider" => Ok(TreeSpec::Spider(numbers(rest)?)),
            "edges" => {
                let edges = rest
                    .split(',')
                    .filter(|t| !t.trim().is_empty())
                    .map(|t| {
                        let (a, b) = t.split_once('-').ok_or_else(bad)?;
                        Ok([
                            a.trim().parse().map_err(|_| bad())?,
                            b.trim().parse().map_err(|_| bad())?,
                        ])
                    })
                    .collect::<Result<Vec<_>, ShapeError>>()?;
                Ok(TreeSpec::Generic(edges))
            }
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShapeKind {
    /// `spine[i]` carries `pendants[i]` leaves.
    Caterpillar {
        spine: Vec<Vertex>,
        pendants: Vec<usize>,
    },
    Spider {
        center: Vertex,
        leg_lengths: Vec<usize>,
    },
    Generic,
}

/// A tree together with its shape and bipartition data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeShape {
    tree: Graph,
    kind: ShapeKind,
    bipartition: Bipartition,
    t: usize,
    spec: TreeSpec,
}

impl TreeShape {
    pub fn caterpillar(pendant_counts: &[usize]) -> Result<Self, ShapeError> {
        make_caterpillar(pendant_counts)
    }

    pub fn spider(leg_lengths: &[usize]) -> Result<Self, ShapeError> {
        make_spider(leg_lengths)
    }

    /// Path on `order` vertices, as a caterpillar with a bare spine.
    pub fn path(order: usize) -> Result<Self, ShapeError> {
        make_caterpillar(&vec![0; order])
    }

    /// Wraps an arbitrary tree. The kind is whatever [`recognize`] finds,
    /// but the spec stays an edge list so vertex ids are preserved.
    pub fn from_tree(tree: Graph) -> Result<Self, ShapeError> {
        let rec = recognize(&tree)?;
        let kind = if let Some(spine) = rec.spine {
            let pendants = spine
                .iter()
                .map(|&v| {
                    tree.neighbors(v)
                        .iter()
                        .filter(|w| !spine.contains(w))
                        .count()
                })
                .collect();
            ShapeKind::Caterpillar { spine, pendants }
        } else if let Some((center, leg_lengths)) = rec.spider {
            ShapeKind::Spider {
                center,
                leg_lengths,
            }
        } else {
            ShapeKind::Generic
        };
        let spec = TreeSpec::Generic(tree.edges().map(|(a, b)| [a, b]).collect());
        Self::assemble(tree, kind, spec)
    }

    pub fn from_spec(spec: &TreeSpec) -> Result<Self, ShapeError> {
        match spec {
            TreeSpec::Caterpillar(p) => make_caterpillar(p),
            TreeSpec::Spider(l) => make_spider(l),
            TreeSpec::Generic(edges) => {
                let n = edges.iter().flatten().max().map_or(1, |&m| m + 1);
                let pairs: Vec<_> = edges.iter().map(|e| (e[0], e[1])).collect();
                Self::from_tree(Graph::new(n, &pairs)?)
            }
        }
    }

    fn assemble(tree: Graph, kind: ShapeKind, spec: TreeSpec) -> Result<Self, ShapeError> {
        if !is_tree(&tree) {
            return Err(ShapeError::NotATree);
        }
        let bipartition = tree.bipartition()?;
        let t = bipartition.larger_side();
        Ok(TreeShape {
            tree,
            kind,
            bipartition,
            t,
            spec,
        })
    }

    pub fn tree(&self) -> &Graph {
        &self.tree
    }

    pub fn kind(&self) -> &ShapeKind {
        &self.kind
    }

    pub fn bipartition(&self) -> &Bipartition {
        &self.bipartition
    }

    /// `max(|X|, |Y|)` over the tree's bipartition.
    pub fn t(&self) -> usize {
        self.t
    }

    pub fn order(&self) -> usize {
        self.tree.order()
    }

    pub fn spec(&self) -> &TreeSpec {
        &self.spec
    }

    pub fn leaves(&self) -> Vec<Vertex> {
        self.tree
            .vertices()
            .filter(|&v| self.tree.degree(v) == 1)
            .collect()
    }
}

pub fn is_tree(g: &Graph) -> bool {
    g.order() >= 1 && g.edge_count() + 1 == g.order() && g.is_connected()
}

/// Spine `0..r`, then the pendants of spine vertex 0, of spine vertex 1, …
pub fn make_caterpillar(pendant_counts: &[usize]) -> Result<TreeShape, ShapeError> {
    if pendant_counts.is_empty() {
        return Err(ShapeError::EmptySpec);
    }
    let r = pendant_counts.len();
    let n = r + pendant_counts.iter().sum::<usize>();
    let mut edges: Vec<_> = (1..r).map(|i| (i - 1, i)).collect();
    let mut next = r;
    for (i, &c) in pendant_counts.iter().enumerate() {
        for _ in 0..c {
            edges.push((i, next));
            next += 1;
        }
    }
    let tree = Graph::new(n, &edges)?;
    TreeShape::assemble(
        tree,
        ShapeKind::Caterpillar {
            spine: (0..r).collect(),
            pendants: pendant_counts.to_vec(),
        },
        TreeSpec::Caterpillar(pendant_counts.to_vec()),
    )
}

/// Center 0; each leg numbered outward from the center, leg by leg.
pub fn make_spider(leg_lengths: &[usize]) -> Result<TreeShape, ShapeError> {
    if leg_lengths.is_empty() {
        return Err(ShapeError::EmptySpec);
    }
    if leg_lengths.contains(&0) {
        return Err(ShapeError::ZeroLengthLeg);
    }
    let n = 1 + leg_lengths.iter().sum::<usize>();
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    for &len in leg_lengths {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    let tree = Graph::new(n, &edges)?;
    TreeShape::assemble(
        tree,
        ShapeKind::Spider {
            center: 0,
            leg_lengths: leg_lengths.to_vec(),
        },
        TreeSpec::Spider(leg_lengths.to_vec()),
    )
}

/// Shape tags of a tree. A path is both a caterpillar and a spider.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recognition {
    /// Canonical spine if the tree is a caterpillar.
    pub spine: Option<Vec<Vertex>>,
    /// Center and leg lengths (legs ordered by the center's neighbor ids)
    /// if the tree is a spider.
    pub spider: Option<(Vertex, Vec<usize>)>,
}

impl Recognition {
    pub fn is_caterpillar(&self) -> bool {
        self.spine.is_some()
    }

    pub fn is_spider(&self) -> bool {
        self.spider.is_some()
    }

    pub fn is_generic(&self) -> bool {
        !self.is_caterpillar() && !self.is_spider()
    }
}

pub fn recognize(tree: &Graph) -> Result<Recognition, ShapeError> {
    if !is_tree(tree) {
        return Err(ShapeError::NotATree);
    }
    Ok(Recognition {
        spine: caterpillar_spine(tree),
        spider: spider_legs(tree),
    })
}

/// Strips the leaves; the tree is a caterpillar iff what remains is a path.
/// The canonical spine is that path extended by one leaf at each end (a
/// longest spine), choosing the lexicographically smallest vertex sequence.
fn caterpillar_spine(tree: &Graph) -> Option<Vec<Vertex>> {
    let n = tree.order();
    if n <= 2 {
        return Some((0..n).collect());
    }
    let inner: Vec<_> = tree.vertices().filter(|&v| tree.degree(v) >= 2).collect();
    let is_inner = |v: Vertex| tree.degree(v) >= 2;
    let inner_deg = |v: Vertex| tree.neighbors(v).iter().filter(|&&w| is_inner(w)).count();
    if inner.iter().any(|&v| inner_deg(v) > 2) {
        return None;
    }
    let leaves_of = |v: Vertex| -> Vec<Vertex> {
        tree.neighbors(v)
            .iter()
            .copied()
            .filter(|&w| tree.degree(w) == 1)
            .collect()
    };
    if inner.len() == 1 {
        let c = inner[0];
        let l = leaves_of(c);
        return Some(vec![l[0], c, l[1]]);
    }
    // inner vertices form a path; walk it from one end
    let start = *inner.iter().find(|&&v| inner_deg(v) == 1)?;
    let mut path = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = tree
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| w != prev && is_inner(w));
        match next {
            Some(w) => {
                path.push(w);
                prev = cur;
                cur = w;
            }
            None => break,
        }
    }
    let extend = |p: &[Vertex]| -> Vec<Vertex> {
        let mut out = vec![leaves_of(p[0])[0]];
        out.extend_from_slice(p);
        out.push(leaves_of(*p.last().unwrap())[0]);
        out
    };
    let forward = extend(&path);
    path.reverse();
    let backward = extend(&path);
    Some(forward.min(backward))
}

fn spider_legs(tree: &Graph) -> Option<(Vertex, Vec<usize>)> {
    let high: Vec<_> = tree.vertices().filter(|&v| tree.degree(v) >= 3).collect();
    let center = match high.as_slice() {
        [] => 0,
        [c] => *c,
        _ => return None,
    };
    let legs = tree
        .neighbors(center)
        .iter()
        .map(|&first| {
            let (mut prev, mut cur, mut len) = (center, first, 1);
            while tree.degree(cur) == 2 {
                let nb = tree.neighbors(cur);
                let next = if nb[0] == prev { nb[1] } else { nb[0] };
                prev = cur;
                cur = next;
                len += 1;
            }
            len
        })
        .collect();
    Some((center, legs))
}

/// `max(|X|, |Y|)` for the tree's unique bipartition.
pub fn tree_t(tree: &Graph) -> Result<usize, ShapeError> {
    if !is_tree(tree) {
        return Err(ShapeError::NotATree);
    }
    Ok(tree.bipartition()?.larger_side())
}

/// One caterpillar per isomorphism class with `2 ≤ order ≤ max_order`,
/// ascending by order and then by spec.
///
/// The spec lists pendant counts along the stripped (leafless) spine, so
/// both end counts are positive; P2 is the one-vertex spine `[1]`. Mirror
/// images are folded onto the lexicographically smaller spec.
pub fn enumerate_caterpillars(max_order: usize) -> impl Iterator<Item = TreeShape> {
    let mut specs = Vec::new();
    for order in 2..=max_order {
        let mut of_order = Vec::new();
        for r in 1..order {
            let pendants = order - r;
            let mut counts = vec![0; r];
            compositions(pendants, r, &mut counts, 0, &mut |c| {
                let valid = if r == 1 {
                    c[0] >= 1
                } else {
                    c[0] >= 1 && c[r - 1] >= 1
                };
                if !valid {
                    return;
                }
                let mut rev = c.to_vec();
                rev.reverse();
                if c <= rev.as_slice() {
                    of_order.push(c.to_vec());
                }
            });
        }
        of_order.sort();
        specs.extend(of_order);
    }
    specs
        .into_iter()
        .map(|s| make_caterpillar(&s).expect("enumerated specs are valid"))
}

/// All ways to write `total` as an ordered sum of `parts` non-negative terms.
fn compositions(
    total: usize,
    parts: usize,
    buf: &mut Vec<usize>,
    idx: usize,
    emit: &mut dyn FnMut(&[usize]),
) {
    if idx + 1 == parts {
        buf[idx] = total;
        emit(buf);
        return;
    }
    for first in 0..=total {
        buf[idx] = first;
        compositions(total - first, parts, buf, idx + 1, emit);
    }
}

/// Spiders with `2 ≤ order ≤ max_order`, one per multiset of leg lengths
/// (listed non-decreasing), ordered by number of legs and then by spec.
/// Spiders with one or two legs are paths and appear once per leg split.
pub fn enumerate_spiders(max_order: usize) -> impl Iterator<Item = TreeShape> {
    let mut specs: Vec<Vec<usize>> = Vec::new();
    let mut buf = Vec::new();
    for total in 1..max_order {
        partitions(total, 1, &mut buf, &mut specs);
    }
    specs.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    specs
        .into_iter()
        .map(|s| make_spider(&s).expect("enumerated specs are valid"))
}

/// Non-decreasing partitions of `total` with parts ≥ `min_part`.
fn partitions(total: usize, min_part: usize, buf: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if total == 0 {
        out.push(buf.clone());
        return;
    }
    for part in min_part..=total {
        buf.push(part);
        partitions(total - part, part, buf, out);
        buf.pop();
    }
}

/// BFS order of tree vertices from `root`, visiting neighbors in ascending
/// id order. Returns the order and each vertex's BFS parent.
pub(crate) fn bfs_order(tree: &Graph, root: Vertex) -> (Vec<Vertex>, Vec<Option<Vertex>>) {
    let mut parent = vec![None; tree.order()];
    let mut seen = vec![false; tree.order()];
    let mut order = Vec::with_capacity(tree.order());
    let mut queue = VecDeque::from([root]);
    seen[root] = true;
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &w in tree.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(u);
                queue.push_back(w);
            }
        }
    }
    (order, parent)
}
