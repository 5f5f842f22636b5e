//! Instance generation, theorem sweeps and the tightness regression.

use std::fmt::{self, Write as _};
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Duration;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::connectivity::{is_k_connected, vertex_connectivity};
use crate::graph::{Graph, GraphError};
use crate::keeper::{brute_force_keeper, find_keeper, KeeperError, SearchOutcome, SearchStrategy, Verdict};
use crate::tree_shapes::{enumerate_caterpillars, enumerate_spiders, ShapeError, TreeShape, TreeSpec};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
pub const DEFAULT_MAX_SIDE: usize = 9;
pub const DEFAULT_MAX_TREE: usize = 7;
pub const THREADS_ENV: &str = "CONNKEEPER_THREADS";

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("infeasible instance: {0}")]
    InfeasibleSpec(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Keeper(#[from] KeeperError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Generator {
    CompleteBipartite,
    /// Prune random edges from `K_{n_x,n_y}` while the degree and
    /// connectivity requirements still hold.
    RandomRegularish,
    /// A planted `K_{k+t,k+t}` plus random edges to the remaining vertices.
    SupergraphOfKkk,
    File(PathBuf),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::CompleteBipartite => f.write_str("complete-bipartite"),
            Generator::RandomRegularish => f.write_str("random-regularish"),
            Generator::SupergraphOfKkk => f.write_str("supergraph-of-kkk"),
            Generator::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl FromStr for Generator {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "complete-bipartite" | "complete" => Ok(Generator::CompleteBipartite),
            "random-regularish" | "random" => Ok(Generator::RandomRegularish),
            "supergraph-of-kkk" | "supergraph" => Ok(Generator::SupergraphOfKkk),
            _ => match s.strip_prefix("file:") {
                Some(p) => Ok(Generator::File(p.into())),
                None => Err(format!("unknown generator `{s}`")),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub generator: Generator,
    pub n_x: usize,
    pub n_y: usize,
    pub k: usize,
    pub tree: TreeSpec,
    pub seed: u64,
}

/// Builds a bipartite graph with `κ ≥ k` and `δ ≥ k + t(tree)`; both
/// properties are recomputed on the result before it is returned.
pub fn gen_instance(spec: &InstanceSpec) -> Result<(Graph, TreeShape), HarnessError> {
    let shape = TreeShape::from_spec(&spec.tree)?;
    let need = spec.k + shape.t();
    if !matches!(spec.generator, Generator::File(_)) && spec.n_x.min(spec.n_y) < need {
        return Err(HarnessError::InfeasibleSpec(format!(
            "sides {}x{} cannot give minimum degree {need}",
            spec.n_x, spec.n_y
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let g = match &spec.generator {
        Generator::CompleteBipartite => Graph::complete_bipartite(spec.n_x, spec.n_y),
        Generator::RandomRegularish => prune_from_complete(spec.n_x, spec.n_y, need, spec.k, &mut rng),
        Generator::SupergraphOfKkk => planted(spec.n_x, spec.n_y, need, &mut rng),
        Generator::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| HarnessError::Io {
                path: path.clone(),
                source,
            })?;
            Graph::from_edge_list(&text)?
        }
    };
    if !g.is_bipartite() {
        return Err(HarnessError::InfeasibleSpec("graph is not bipartite".into()));
    }
    if g.min_degree() < need {
        return Err(HarnessError::InfeasibleSpec(format!(
            "minimum degree {} < {need}",
            g.min_degree()
        )));
    }
    if !is_k_connected(&g, spec.k) {
        return Err(HarnessError::InfeasibleSpec(format!("graph is not {}-connected", spec.k)));
    }
    Ok((g, shape))
}

/// Visits the edges of `K_{a,b}` in random order and deletes each one
/// whose removal keeps `δ ≥ need` and `κ ≥ k`, until the average degree
/// drops to halfway between `need` and the complete graph's.
fn prune_from_complete(a: usize, b: usize, need: usize, k: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges: Vec<_> = Graph::complete_bipartite(a, b).edges().collect();
    let full = a * b;
    let floor = need * a.max(b);
    let target = floor + (full - floor) / 2;
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.shuffle(rng);
    let mut alive = vec![true; edges.len()];
    let mut degree = vec![0usize; a + b];
    for &(u, v) in &edges {
        degree[u] += 1;
        degree[v] += 1;
    }
    let mut count = full;
    for i in order {
        if count <= target {
            break;
        }
        let (u, v) = edges[i];
        if degree[u] <= need || degree[v] <= need {
            continue;
        }
        alive[i] = false;
        let trial = build(a + b, &edges, &alive);
        if is_k_connected(&trial, k) {
            degree[u] -= 1;
            degree[v] -= 1;
            count -= 1;
        } else {
            alive[i] = true;
        }
    }
    edges = edges.into_iter().zip(&alive).filter(|(_, &l)| l).map(|(e, _)| e).collect();
    Graph::new(a + b, &edges).expect("subgraph of a simple graph")
}

fn build(n: usize, edges: &[(usize, usize)], alive: &[bool]) -> Graph {
    let kept: Vec<_> = edges.iter().zip(alive).filter(|(_, &l)| l).map(|(&e, _)| e).collect();
    Graph::new(n, &kept).expect("subgraph of a simple graph")
}

/// `K_{need,need}` on the first vertices of each side, every other vertex
/// joined to all planted vertices opposite, and each remaining cross pair
/// added with probability 1/2. Any `need − 1` deletions leave a planted
/// vertex on both sides, so the result is `need`-connected.
fn planted(a: usize, b: usize, need: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for x in 0..a {
        for y in 0..b {
            if x < need || y < need || rng.gen_bool(0.5) {
                edges.push((x, a + y));
            }
        }
    }
    Graph::new(a + b, &edges).expect("simple by construction")
}

/// Theorems swept by the harness, each fixing `k` and a tree family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theorem {
    /// Paths, `k ∈ {1, 2, 3}`.
    #[serde(rename = "1.3")]
    Paths,
    /// Caterpillars, `k = 3`.
    #[serde(rename = "3.1")]
    Caterpillars,
    /// Spiders, `k = 2`.
    #[serde(rename = "4.1")]
    Spiders2,
    /// Spiders, `k = 3`.
    #[serde(rename = "4.2")]
    Spiders3,
}

impl Theorem {
    pub const ALL: [Theorem; 4] = [
        Theorem::Paths,
        Theorem::Caterpillars,
        Theorem::Spiders2,
        Theorem::Spiders3,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Theorem::Paths => "1.3",
            Theorem::Caterpillars => "3.1",
            Theorem::Spiders2 => "4.1",
            Theorem::Spiders3 => "4.2",
        }
    }

    fn ks(self) -> &'static [usize] {
        match self {
            Theorem::Paths => &[1, 2, 3],
            Theorem::Caterpillars | Theorem::Spiders3 => &[3],
            Theorem::Spiders2 => &[2],
        }
    }

    fn family(self, max_tree: usize) -> Vec<TreeShape> {
        match self {
            Theorem::Paths => (2..=max_tree)
                .map(|m| TreeShape::path(m).expect("positive order"))
                .collect(),
            Theorem::Caterpillars => enumerate_caterpillars(max_tree).collect(),
            Theorem::Spiders2 | Theorem::Spiders3 => enumerate_spiders(max_tree).collect(),
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.tag() == s)
            .ok_or_else(|| format!("unknown theorem `{s}` (expected 1.3, 3.1, 4.1 or 4.2)"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub theorem: Theorem,
    pub count: usize,
    pub max_side: usize,
    pub max_tree: usize,
    pub seed: u64,
    pub budget: u64,
    /// Replaces the theorem's `k`. Values above 3 are outside every proven
    /// case and make the rows exploratory.
    pub k_override: Option<usize>,
}

impl SweepConfig {
    pub fn new(theorem: Theorem, count: usize, seed: u64) -> Self {
        SweepConfig {
            theorem,
            count,
            max_side: DEFAULT_MAX_SIDE,
            max_tree: DEFAULT_MAX_TREE,
            seed,
            budget: crate::keeper::DEFAULT_BUDGET,
            k_override: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub index: usize,
    pub instance: InstanceSpec,
    pub edges: usize,
    pub min_degree: usize,
    pub kappa: usize,
    /// The graph satisfies `κ ≥ k` and `δ ≥ k + t`.
    pub in_hypothesis: bool,
    /// `k ≥ 4`: no theorem applies, a miss is a finding rather than a failure.
    pub exploratory: bool,
    pub strategy: SearchStrategy,
    #[serde(flatten)]
    pub outcome: SearchOutcome,
    pub violation: bool,
    /// Generation failure, if any; such rows carry no search.
    pub error: Option<String>,
}

impl SweepRow {
    pub fn elapsed(&self) -> Duration {
        self.outcome.elapsed
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepTotals {
    pub instances: usize,
    pub found: usize,
    pub proven_none: usize,
    pub budget_exhausted: usize,
    pub generation_errors: usize,
    pub violations: usize,
    pub exploratory: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub tool_version: String,
    pub config: SweepConfig,
    pub totals: SweepTotals,
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.totals.violations == 0 && self.totals.generation_errors == 0
    }

    pub fn to_records(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let c = &self.config;
        let _ = writeln!(
            out,
            "connkeeper {} sweep theorem {} count {} seed {} max-side {} max-tree {}",
            self.tool_version, c.theorem, c.count, c.seed, c.max_side, c.max_tree
        );
        let _ = writeln!(
            out,
            "{:>5}  {:<18} {:>5}  {:>2} {:<18} {:>3} {:>3}  {:<15} {:>9} {:>10}",
            "index", "generator", "sides", "k", "tree", "δ", "κ", "verdict", "residual", "examined"
        );
        for r in &self.rows {
            let residual = r
                .outcome
                .verdict
                .certificate()
                .map_or("-".to_string(), |c| c.residual_kappa.to_string());
            let mut verdict = r.outcome.verdict.label().to_string();
            if r.error.is_some() {
                verdict = "GenerationError".into();
            }
            let _ = write!(
                out,
                "{:>5}  {:<18} {:>5}  {:>2} {:<18} {:>3} {:>3}  {:<15} {:>9} {:>10}",
                r.index,
                r.instance.generator.to_string(),
                format!("{}x{}", r.instance.n_x, r.instance.n_y),
                r.instance.k,
                r.instance.tree.to_string(),
                r.min_degree,
                r.kappa,
                verdict,
                residual,
                r.outcome.embeddings_examined,
            );
            if r.violation {
                out.push_str("  THEOREM VIOLATION");
            } else if r.exploratory {
                out.push_str("  exploratory");
            }
            if let Some(e) = &r.error {
                let _ = write!(out, "  {e}");
            }
            out.push('\n');
        }
        let t = &self.totals;
        let _ = writeln!(
            out,
            "instances {}  found {}  proven-none {}  budget-exhausted {}  generation-errors {}  violations {}  exploratory {}",
            t.instances, t.found, t.proven_none, t.budget_exhausted, t.generation_errors, t.violations, t.exploratory
        );
        out
    }
}

/// Worker pool honoring `CONNKEEPER_THREADS`.
pub fn worker_pool() -> rayon::ThreadPool {
    let threads = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .unwrap_or(0);
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
}

/// Instance `i` uses the `i`-th (tree, k) combination of the family,
/// cyclically, with sides and seed drawn from the sweep's generator.
pub fn sweep_instances(config: &SweepConfig) -> Vec<InstanceSpec> {
    let family = config.theorem.family(config.max_tree);
    let ks: Vec<usize> = match config.k_override {
        Some(k) => vec![k],
        None => config.theorem.ks().to_vec(),
    };
    let combos: Vec<(&TreeShape, usize)> = ks
        .iter()
        .flat_map(|&k| family.iter().map(move |s| (s, k)))
        .collect();
    let generators = [
        Generator::RandomRegularish,
        Generator::SupergraphOfKkk,
        Generator::RandomRegularish,
        Generator::CompleteBipartite,
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    (0..config.count)
        .map(|i| {
            let (shape, k) = combos[i % combos.len()];
            let need = k + shape.t();
            let hi = config.max_side.max(need);
            InstanceSpec {
                generator: generators[i % generators.len()].clone(),
                n_x: rng.gen_range(need..=hi),
                n_y: rng.gen_range(need..=hi),
                k,
                tree: shape.spec().clone(),
                seed: rng.gen(),
            }
        })
        .collect()
}

/// Runs every instance (guided search, then brute force if needed) and
/// flags any in-hypothesis instance without a keeper.
pub fn sweep_theorem(config: &SweepConfig) -> SweepReport {
    let specs = sweep_instances(config);
    let pool = worker_pool();
    let mut rows: Vec<SweepRow> = pool.install(|| {
        specs
            .into_par_iter()
            .enumerate()
            .map(|(i, spec)| run_instance(i, spec, config.budget))
            .collect()
    });
    rows.sort_by_key(|r| r.index);
    let mut totals = SweepTotals {
        instances: rows.len(),
        ..SweepTotals::default()
    };
    for r in &rows {
        if r.error.is_some() {
            totals.generation_errors += 1;
            continue;
        }
        match r.outcome.verdict {
            Verdict::Found(_) => totals.found += 1,
            Verdict::ProvenNone => totals.proven_none += 1,
            Verdict::BudgetExhausted => totals.budget_exhausted += 1,
        }
        totals.violations += usize::from(r.violation);
        totals.exploratory += usize::from(r.exploratory);
    }
    SweepReport {
        tool_version: TOOL_VERSION.to_string(),
        config: config.clone(),
        totals,
        rows,
    }
}

fn run_instance(index: usize, instance: InstanceSpec, budget: u64) -> SweepRow {
    let exploratory = instance.k >= 4;
    let empty = SearchOutcome {
        verdict: Verdict::BudgetExhausted,
        embeddings_examined: 0,
        elapsed: Duration::ZERO,
    };
    let (g, shape) = match gen_instance(&instance) {
        Ok(pair) => pair,
        Err(e) => {
            return SweepRow {
                index,
                instance,
                edges: 0,
                min_degree: 0,
                kappa: 0,
                in_hypothesis: false,
                exploratory,
                strategy: SearchStrategy::Guided,
                outcome: empty,
                violation: false,
                error: Some(e.to_string()),
            }
        }
    };
    let kappa = vertex_connectivity(&g).kappa;
    let in_hypothesis = kappa >= instance.k && g.min_degree() >= instance.k + shape.t();
    let search = |strategy| find_keeper(&g, &shape, instance.k, strategy, budget);
    let (strategy, outcome) = match search(SearchStrategy::Guided) {
        Ok(o) if o.is_found() => (SearchStrategy::Guided, Ok(o)),
        Ok(guided) => (
            SearchStrategy::BruteForce,
            search(SearchStrategy::BruteForce).map(|o| {
                let elapsed = o.elapsed + guided.elapsed;
                o.with_elapsed(elapsed)
            }),
        ),
        Err(e) => (SearchStrategy::Guided, Err(e)),
    };
    match outcome {
        Ok(outcome) => SweepRow {
            index,
            edges: g.edge_count(),
            min_degree: g.min_degree(),
            kappa,
            in_hypothesis,
            exploratory,
            strategy,
            violation: in_hypothesis && !exploratory && !outcome.is_found(),
            outcome,
            error: None,
            instance,
        },
        Err(e) => SweepRow {
            index,
            edges: g.edge_count(),
            min_degree: g.min_degree(),
            kappa,
            in_hypothesis,
            exploratory,
            strategy,
            outcome: empty,
            violation: false,
            error: Some(e.to_string()),
            instance,
        },
    }
}

/// Result of searching the extremal graph `K_{k+t−1,k+t−1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TightnessReport {
    pub k: usize,
    pub tree: TreeSpec,
    pub t: usize,
    pub side: usize,
    #[serde(flatten)]
    pub outcome: SearchOutcome,
}

impl TightnessReport {
    /// The extremal graph has no keeper.
    pub fn holds(&self) -> bool {
        self.outcome.verdict == Verdict::ProvenNone
    }
}

pub fn tightness_report(k: usize, shape: &TreeShape) -> Result<TightnessReport, HarnessError> {
    let side = (k + shape.t()).saturating_sub(1);
    let g = Graph::complete_bipartite(side, side);
    let outcome = brute_force_keeper(&g, shape, k)?;
    Ok(TightnessReport {
        k,
        tree: shape.spec().clone(),
        t: shape.t(),
        side,
        outcome,
    })
}

/// True iff `K_{k+t−1,k+t−1}` has no copy of the tree keeping
/// k-connectivity. A tree too large for that graph is an error.
pub fn tightness_check(k: usize, shape: &TreeShape) -> Result<bool, HarnessError> {
    tightness_report(k, shape).map(|r| r.holds())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(generator: Generator, n: usize, k: usize, tree: &str, seed: u64) -> InstanceSpec {
        InstanceSpec {
            generator,
            n_x: n,
            n_y: n,
            k,
            tree: tree.parse().unwrap(),
            seed,
        }
    }

    #[test]
    fn gen_instance_examples() {
        let (g, shape) = gen_instance(&spec(Generator::CompleteBipartite, 6, 3, "spider:1,1,1", 0)).unwrap();
        assert_eq!(g, Graph::complete_bipartite(6, 6));
        assert_eq!(shape.t(), 3);

        let s = spec(Generator::RandomRegularish, 7, 3, "path:4", 1);
        let (a, _) = gen_instance(&s).unwrap();
        let (b, _) = gen_instance(&s).unwrap();
        assert_eq!(a, b);
        assert!(vertex_connectivity(&a).kappa >= 3);
        assert!(a.min_degree() >= 5);
        assert!(a.edge_count() < 49);

        let err = gen_instance(&spec(Generator::RandomRegularish, 3, 3, "path:3", 0)).unwrap_err();
        assert!(matches!(err, HarnessError::InfeasibleSpec(_)));
    }

    #[test]
    fn planted_generator_meets_requirements() {
        for seed in 0..10 {
            let s = InstanceSpec {
                n_x: 8,
                n_y: 9,
                ..spec(Generator::SupergraphOfKkk, 0, 2, "spider:1,2", seed)
            };
            let (g, shape) = gen_instance(&s).unwrap();
            assert!(g.is_bipartite());
            assert!(g.min_degree() >= 2 + shape.t());
            assert!(is_k_connected(&g, 2));
        }
    }

    #[test]
    fn file_generator_checks_hypothesis() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("k44.txt");
        std::fs::write(&path, Graph::complete_bipartite(4, 4).to_edge_list()).unwrap();
        let ok = spec(Generator::File(path.clone()), 0, 2, "path:3", 0);
        assert!(gen_instance(&ok).is_ok());
        let too_strong = spec(Generator::File(path), 0, 3, "path:3", 0);
        assert!(matches!(gen_instance(&too_strong), Err(HarnessError::InfeasibleSpec(_))));
    }

    #[test]
    fn tightness_examples() {
        assert!(tightness_check(2, &TreeShape::path(3).unwrap()).unwrap());
        assert!(tightness_check(1, &TreeShape::path(2).unwrap()).unwrap());
        assert!(tightness_check(3, &TreeShape::spider(&[1, 1, 1]).unwrap()).unwrap());
        assert!(matches!(
            tightness_check(1, &TreeShape::path(3).unwrap()),
            Ok(true)
        ));
        assert!(matches!(
            tightness_check(1, &TreeShape::spider(&[1, 1, 1, 1]).unwrap()),
            Ok(true)
        ));
        let big = TreeShape::caterpillar(&[3, 3]).unwrap();
        assert!(matches!(
            tightness_check(0, &TreeShape::path(5).unwrap()),
            Err(HarnessError::Keeper(KeeperError::TreeTooLarge { .. }))
        ));
        assert!(tightness_check(1, &big).unwrap());
    }

    #[test]
    fn empty_sweep_succeeds() {
        let report = sweep_theorem(&SweepConfig::new(Theorem::Spiders2, 0, 1));
        assert!(report.rows.is_empty());
        assert!(report.passed());
    }

    #[test]
    fn small_sweep_is_replayable() {
        let mut config = SweepConfig::new(Theorem::Caterpillars, 6, 11);
        config.max_side = 7;
        config.max_tree = 4;
        let a = sweep_theorem(&config);
        let b = sweep_theorem(&config);
        assert_eq!(a.to_records(), b.to_records());
        assert_eq!(a.to_text(), b.to_text());
        assert!(a.passed(), "{}", a.to_text());
        assert_eq!(a.totals.found, 6);
        for r in &a.rows {
            assert!(r.in_hypothesis);
            assert_eq!(r.instance.k, 3);
        }
    }

    #[test]
    fn sweep_cycles_through_family_and_ks() {
        let config = SweepConfig::new(Theorem::Paths, 18, 3);
        let specs = sweep_instances(&config);
        let combos: std::collections::HashSet<_> =
            specs.iter().map(|s| (s.tree.to_string(), s.k)).collect();
        assert_eq!(combos.len(), 18);
        for s in &specs {
            let need = s.k + TreeShape::from_spec(&s.tree).unwrap().t();
            assert!(s.n_x >= need && s.n_x <= 9 && s.n_y >= need && s.n_y <= 9);
        }
    }

    #[test]
    fn exploratory_rows_are_not_violations() {
        let mut config = SweepConfig::new(Theorem::Spiders3, 2, 5);
        config.k_override = Some(4);
        config.max_tree = 3;
        config.max_side = 7;
        let report = sweep_theorem(&config);
        assert_eq!(report.totals.exploratory, 2);
        assert!(report.rows.iter().all(|r| !r.violation));
    }

    #[test]
    fn theorem_tags_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(t.tag().parse::<Theorem>().unwrap(), t);
            assert_eq!(serde_json::to_string(&t).unwrap(), format!("\"{}\"", t.tag()));
        }
        assert!("2.0".parse::<Theorem>().is_err());
    }
}
