//! Randomized comparison of closed-form residuals against brute force.
//!
//! Each trial samples factors and roots, predicts the residual with the
//! matching function in [`crate::theorems`], computes the actual residual of
//! the constructed product with [`crate::metrics::residual`], and records a
//! failure unless the two are isomorphic. Trials are stratified: trial `i`
//! targets case `i mod k` of the theorem and resamples until an instance of
//! that case turns up, so rare branches get exercised as often as common ones.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::Rng as _;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::io::graph6::serialize_graph6;
use crate::iso::{are_isomorphic, is_vertex_transitive};
use crate::metrics::residual;
use crate::products::{direct_distance, product, product_many, ProductKind};
use crate::rng::{seeded, trial_seed, Rng};
use crate::theorems::{
    bipartite_edge_residual_with_case, coordinates, embed_as_residual,
    expected_cartesian_nary_residual, expected_cartesian_residual, expected_direct_residual,
    expected_lexicographic_nary_residual, expected_strong_gmax_residual, expected_strong_residual,
    lexicographic_residual_with_case, product_set, product_set_many, strong_case, strong_gmax_size,
    vt_embed_as_residual, TheoremId,
};

/// Resampling budget per trial before accepting an off-target case.
const MAX_ATTEMPTS: usize = 10_000;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub theorem: TheoremId,
    pub trials: usize,
    /// Largest factor order sampled.
    pub max_n: usize,
    pub seed: u64,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub trial: usize,
    /// Seed of this trial's random stream.
    pub seed: u64,
    pub case: String,
    /// Sampled factors (graph6) and roots.
    pub inputs: Vec<String>,
    pub expected_g6: Option<String>,
    pub actual_g6: Option<String>,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub trials: usize,
    pub max_n: usize,
    pub seed: u64,
    /// Trials per theorem case.
    pub cases: BTreeMap<String, usize>,
    pub failures: Vec<Failure>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "theorem {} trials {} max_n {} seed {}",
            self.theorem, self.trials, self.max_n, self.seed
        )?;
        for (case, count) in &self.cases {
            writeln!(f, "case {case} {count}")?;
        }
        writeln!(f, "failures {}", self.failures.len())?;
        for fail in &self.failures {
            writeln!(
                f,
                "FAIL trial {} seed {:#018x} case {}: {}",
                fail.trial, fail.seed, fail.case, fail.detail
            )?;
            for input in &fail.inputs {
                writeln!(f, "  input {input}")?;
            }
            if let Some(e) = &fail.expected_g6 {
                writeln!(f, "  expected {e}")?;
            }
            if let Some(a) = &fail.actual_g6 {
                writeln!(f, "  actual {a}")?;
            }
        }
        Ok(())
    }
}

/// Case labels a theorem's trials are stratified over.
pub fn cases(theorem: TheoremId) -> &'static [&'static str] {
    match theorem {
        TheoremId::Strong => &["d_G>d_H", "d_G<d_H", "d_G=d_H"],
        TheoremId::StrongGmax => &["k=1", "k=2", "k=3"],
        TheoremId::Lexicographic => &["case1", "case2", "case3", "case4"],
        TheoremId::BipartiteEdge => &["d_u=d_v", "d_u=d_v+1", "d_v=d_u+1"],
        TheoremId::DirectDistanceFormula => &["non-bipartite factor", "unconstrained"],
        _ => &["all"],
    }
}

struct Outcome {
    case: String,
    failure: Option<Failure>,
}

/// Runs `trials` seeded trials of `theorem`. The report is identical for
/// identical options regardless of the number of worker threads.
pub fn verify(options: &VerifyOptions) -> VerificationReport {
    let start = Instant::now();
    let run = || -> Vec<Outcome> {
        (0..options.trials)
            .into_par_iter()
            .map(|i| run_trial(options.theorem, i, options.max_n, options.seed))
            .collect()
    };
    let outcomes = match options.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    };
    let mut case_counts = BTreeMap::new();
    let mut failures = Vec::new();
    for o in outcomes {
        *case_counts.entry(o.case).or_insert(0) += 1;
        failures.extend(o.failure);
    }
    VerificationReport {
        theorem: options.theorem.name().to_string(),
        trials: options.trials,
        max_n: options.max_n,
        seed: options.seed,
        cases: case_counts,
        failures,
        elapsed: start.elapsed(),
    }
}

/// Collected while a trial runs; turned into a [`Failure`] on mismatch.
struct Trial {
    index: usize,
    seed: u64,
    case: String,
    inputs: Vec<String>,
}

impl Trial {
    fn input(&mut self, name: &str, g: &Graph, root: Option<&VertexSet>) {
        let g6 = serialize_graph6(g).unwrap_or_else(|e| e.to_string());
        self.inputs.push(match root {
            Some(r) => format!("{name}={g6} root={:?}", r.as_slice()),
            None => format!("{name}={g6}"),
        });
    }

    fn fail(self, expected: Option<&Graph>, actual: Option<&Graph>, detail: String) -> Outcome {
        let g6 = |g: &Graph| serialize_graph6(g).unwrap_or_else(|e| e.to_string());
        Outcome {
            case: self.case.clone(),
            failure: Some(Failure {
                trial: self.index,
                seed: self.seed,
                case: self.case,
                inputs: self.inputs,
                expected_g6: expected.map(g6),
                actual_g6: actual.map(g6),
                detail,
            }),
        }
    }

    fn pass(self) -> Outcome {
        Outcome {
            case: self.case,
            failure: None,
        }
    }

    /// Passes iff both sides computed and are isomorphic.
    fn compare(self, expected: Result<Graph>, actual: Result<Graph>) -> Outcome {
        match (expected, actual) {
            (Ok(e), Ok(a)) => {
                if are_isomorphic(&e, &a).is_isomorphic() {
                    self.pass()
                } else {
                    self.fail(
                        Some(&e),
                        Some(&a),
                        "closed form is not isomorphic to the residual".into(),
                    )
                }
            }
            (Err(e), Ok(a)) => self.fail(None, Some(&a), format!("closed form failed: {e}")),
            (Ok(e), Err(a)) => self.fail(Some(&e), None, format!("residual failed: {a}")),
            (Err(e), Err(a)) => self.fail(None, None, format!("both failed: {e}; {a}")),
        }
    }
}

fn random_graph(rng: &mut Rng, min_n: usize, max_n: usize) -> Graph {
    let n = rng.gen_range(min_n..=max_n.max(min_n));
    let p: f64 = rng.gen_range(0.1..0.9);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid random edges")
}

fn connected_graph(rng: &mut Rng, min_n: usize, max_n: usize) -> Graph {
    loop {
        let g = random_graph(rng, min_n, max_n);
        if g.is_connected() {
            return g;
        }
    }
}

/// Connected graph, disconnected allowed with probability `p_disconnected`.
fn maybe_connected_graph(rng: &mut Rng, min_n: usize, max_n: usize, p_disconnected: f64) -> Graph {
    if rng.gen_bool(p_disconnected) {
        random_graph(rng, min_n, max_n)
    } else {
        connected_graph(rng, min_n, max_n)
    }
}

fn connected_bipartite(rng: &mut Rng, max_n: usize) -> Graph {
    let max_n = max_n.max(3);
    loop {
        let a = rng.gen_range(1..max_n);
        let b = rng.gen_range(1..=max_n - a);
        if a + b < 3 {
            continue;
        }
        let p: f64 = rng.gen_range(0.2..0.9);
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(a + b, edges).expect("valid bipartite edges");
        if g.is_connected() {
            return g;
        }
    }
}

/// Random circulant graph: vertex-transitive, possibly disconnected.
fn circulant(rng: &mut Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n.max(1));
    let jumps: Vec<usize> = (1..=n / 2).filter(|_| rng.gen_bool(0.5)).collect();
    let edges = (0..n).flat_map(|i| jumps.iter().map(move |&s| (i, (i + s) % n)));
    Graph::from_edges(n, edges).expect("valid circulant")
}

/// Uniformly sized random root; `allow_full` permits the whole vertex set.
fn random_root(rng: &mut Rng, n: usize, allow_full: bool) -> VertexSet {
    let max = if allow_full || n == 1 { n } else { n - 1 };
    let k = rng.gen_range(1..=max);
    VertexSet::new(sample(rng, n, k).into_vec(), n).expect("non-empty root")
}

fn run_trial(theorem: TheoremId, index: usize, max_n: usize, seed: u64) -> Outcome {
    let tseed = trial_seed(seed, index as u64);
    let mut rng = seeded(tseed);
    let labels = cases(theorem);
    let target = labels[index % labels.len()];
    let trial = Trial {
        index,
        seed: tseed,
        case: target.to_string(),
        inputs: Vec::new(),
    };
    let max_n = max_n.max(2);
    match theorem {
        TheoremId::Cartesian => cartesian_trial(&mut rng, trial, max_n),
        TheoremId::CartesianNary => cartesian_nary_trial(&mut rng, trial, max_n),
        TheoremId::Strong => strong_trial(&mut rng, trial, max_n, target),
        TheoremId::StrongGmax => strong_gmax_trial(&mut rng, trial, max_n, target),
        TheoremId::Lexicographic => lexicographic_trial(&mut rng, trial, max_n, target),
        TheoremId::LexicographicNary => lexicographic_nary_trial(&mut rng, trial, max_n),
        TheoremId::BipartiteEdge => bipartite_trial(&mut rng, trial, max_n, target),
        TheoremId::DirectDistanceFormula => {
            direct_trial(&mut rng, trial, max_n, index.is_multiple_of(2))
        }
        TheoremId::EmbedUniversal => embed_trial(&mut rng, trial, max_n),
        TheoremId::EmbedVertexTransitive => vt_embed_trial(&mut rng, trial, max_n),
    }
}

fn cartesian_trial(rng: &mut Rng, mut t: Trial, max_n: usize) -> Outcome {
    let g = connected_graph(rng, 1, max_n);
    let h = connected_graph(rng, 1, max_n);
    let rg = random_root(rng, g.order(), true);
    let rh = random_root(rng, h.order(), true);
    t.input("G", &g, Some(&rg));
    t.input("H", &h, Some(&rh));
    let expected = expected_cartesian_residual(&g, &rg, &h, &rh);
    let actual = residual(
        &product(ProductKind::Cartesian, &g, &h),
        &product_set(&rg, &rh, h.order()),
    )
    .map(|r| r.residual);
    t.compare(expected, actual)
}

fn sample_factors(
    rng: &mut Rng,
    count: usize,
    max_n: usize,
    allow_full: bool,
) -> Vec<(Graph, VertexSet)> {
    (0..count)
        .map(|_| {
            let g = connected_graph(rng, 1, max_n);
            let r = random_root(rng, g.order(), allow_full);
            (g, r)
        })
        .collect()
}

fn nary_actual(kind: ProductKind, factors: &[(Graph, VertexSet)]) -> Result<Graph> {
    let graphs: Vec<Graph> = factors.iter().map(|(g, _)| g.clone()).collect();
    let roots: Vec<VertexSet> = factors.iter().map(|(_, r)| r.clone()).collect();
    let orders: Vec<usize> = graphs.iter().map(Graph::order).collect();
    let p = product_many(kind, &graphs)?;
    residual(&p, &product_set_many(&roots, &orders)).map(|r| r.residual)
}

fn cartesian_nary_trial(rng: &mut Rng, mut t: Trial, max_n: usize) -> Outcome {
    let factors = sample_factors(rng, 3, max_n, true);
    for (i, (g, r)) in factors.iter().enumerate() {
        t.input(&format!("G{}", i + 1), g, Some(r));
    }
    t.compare(
        expected_cartesian_nary_residual(&factors),
        nary_actual(ProductKind::Cartesian, &factors),
    )
}

fn strong_trial(rng: &mut Rng, mut t: Trial, max_n: usize, target: &str) -> Outcome {
    let mut attempt = 0;
    let (g, rg, h, rh) = loop {
        attempt += 1;
        let g = connected_graph(rng, 1, max_n);
        let h = connected_graph(rng, 1, max_n);
        let rg = random_root(rng, g.order(), true);
        let rh = random_root(rng, h.order(), true);
        let case = strong_case(&g, &rg, &h, &rh)
            .expect("connected factors")
            .name();
        if case == target || attempt >= MAX_ATTEMPTS {
            t.case = case.to_string();
            break (g, rg, h, rh);
        }
    };
    t.input("G", &g, Some(&rg));
    t.input("H", &h, Some(&rh));
    let expected = expected_strong_residual(&g, &rg, &h, &rh);
    let actual = residual(
        &product(ProductKind::Strong, &g, &h),
        &product_set(&rg, &rh, h.order()),
    )
    .map(|r| r.residual);
    t.compare(expected, actual)
}

fn strong_gmax_trial(rng: &mut Rng, mut t: Trial, max_n: usize, target: &str) -> Outcome {
    let mut attempt = 0;
    let factors = loop {
        attempt += 1;
        let factors = sample_factors(rng, 3, max_n, true);
        let k = strong_gmax_size(&factors).expect("connected factors");
        let case = format!("k={k}");
        if case == target || attempt >= MAX_ATTEMPTS {
            t.case = case;
            break factors;
        }
    };
    for (i, (g, r)) in factors.iter().enumerate() {
        t.input(&format!("G{}", i + 1), g, Some(r));
    }
    t.compare(
        expected_strong_gmax_residual(&factors),
        nary_actual(ProductKind::Strong, &factors),
    )
}

fn lexicographic_trial(rng: &mut Rng, mut t: Trial, max_n: usize, target: &str) -> Outcome {
    let mut attempt = 0;
    let (g, rg, h, rh, predicted) = loop {
        attempt += 1;
        let g = connected_graph(rng, 2, max_n);
        let rg = random_root(rng, g.order(), false);
        let h = maybe_connected_graph(rng, 1, max_n, 0.25);
        let rh = random_root(rng, h.order(), true);
        let predicted = lexicographic_residual_with_case(&g, &rg, &h, &rh);
        let case = match &predicted {
            Ok((_, c)) => c.name(),
            Err(_) => "error",
        };
        if case == target || attempt >= MAX_ATTEMPTS {
            t.case = case.to_string();
            break (g, rg, h, rh, predicted);
        }
    };
    t.input("G", &g, Some(&rg));
    t.input("H", &h, Some(&rh));
    let actual = residual(
        &product(ProductKind::Lexicographic, &g, &h),
        &product_set(&rg, &rh, h.order()),
    )
    .map(|r| r.residual);
    t.compare(predicted.map(|(graph, _)| graph), actual)
}

fn lexicographic_nary_trial(rng: &mut Rng, mut t: Trial, max_n: usize) -> Outcome {
    let max_n = max_n.max(4);
    let (g1, r1) = loop {
        let g = connected_graph(rng, 4, max_n);
        let r = random_root(rng, g.order(), false);
        if residual(&g, &r).map(|x| x.d_r >= 3).unwrap_or(false) {
            break (g, r);
        }
    };
    let mut factors = vec![(g1, r1)];
    for _ in 0..2 {
        let g = maybe_connected_graph(rng, 1, max_n, 0.25);
        let r = random_root(rng, g.order(), true);
        factors.push((g, r));
    }
    for (i, (g, r)) in factors.iter().enumerate() {
        t.input(&format!("G{}", i + 1), g, Some(r));
    }
    t.compare(
        expected_lexicographic_nary_residual(&factors),
        nary_actual(ProductKind::Lexicographic, &factors),
    )
}

fn bipartite_trial(rng: &mut Rng, mut t: Trial, max_n: usize, target: &str) -> Outcome {
    let mut attempt = 0;
    let (g, u, v, predicted) = loop {
        attempt += 1;
        let g = connected_bipartite(rng, max_n);
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let (a, b) = edges[rng.gen_range(0..edges.len())];
        let (u, v) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
        let predicted = bipartite_edge_residual_with_case(&g, u, v);
        let case = match &predicted {
            Ok((_, c)) => c.name(),
            Err(_) => "error",
        };
        if case == target || attempt >= MAX_ATTEMPTS {
            t.case = case.to_string();
            break (g, u, v, predicted);
        }
    };
    t.input("G", &g, None);
    t.inputs.push(format!("edge=({u},{v})"));
    let root = VertexSet::new(vec![u, v], g.order()).expect("edge endpoints");
    let actual = residual(&g, &root).map(|r| r.residual);
    t.compare(predicted.map(|(graph, _)| graph), actual)
}

fn direct_trial(rng: &mut Rng, mut t: Trial, max_n: usize, force_odd_cycle: bool) -> Outcome {
    let (g, h) = if force_odd_cycle {
        loop {
            let g = connected_graph(rng, 1, max_n);
            let h = connected_graph(rng, 1, max_n);
            if !(g.is_bipartite() && h.is_bipartite()) {
                break (g, h);
            }
        }
    } else {
        (random_graph(rng, 1, max_n), random_graph(rng, 1, max_n))
    };
    t.input("G", &g, None);
    t.input("H", &h, None);
    let p = product(ProductKind::Direct, &g, &h);
    let orders = [g.order(), h.order()];
    let factors = [g.clone(), h.clone()];
    for x in 0..p.order() {
        let bfs = p.bfs(&[x]);
        let cx = coordinates(x, &orders);
        for (y, want) in bfs.iter().enumerate() {
            let got = direct_distance(&factors, &cx, &coordinates(y, &orders), None);
            if got.as_ref() != Ok(want) {
                return t.fail(
                    None,
                    None,
                    format!("d({x},{y}): walk formula {got:?}, BFS {want:?}"),
                );
            }
        }
    }
    if !p.is_connected() || (g.is_bipartite() && h.is_bipartite()) {
        return t.pass();
    }
    let rg = random_root(rng, g.order(), true);
    let rh = random_root(rng, h.order(), true);
    t.inputs
        .push(format!("roots={:?} x {:?}", rg.as_slice(), rh.as_slice()));
    let actual = residual(&p, &product_set(&rg, &rh, h.order()));
    match (expected_direct_residual(&g, &rg, &h, &rh), actual) {
        (Ok(e), Ok(a)) if e.origin == a.origin && e.d_r == a.d_r => t.pass(),
        (Ok(e), Ok(a)) => {
            let detail = format!(
                "residual vertices {:?} at {} vs BFS {:?} at {}",
                e.origin, e.d_r, a.origin, a.d_r
            );
            t.fail(Some(&e.residual), Some(&a.residual), detail)
        }
        (e, a) => t.fail(None, None, format!("{:?} / {:?}", e.err(), a.err())),
    }
}

fn embed_trial(rng: &mut Rng, mut t: Trial, max_n: usize) -> Outcome {
    let h = random_graph(rng, 1, max_n);
    let n = rng.gen_range(1..=4);
    let root_graph = rng.gen_bool(0.5).then(|| random_graph(rng, n, n));
    t.input("H", &h, None);
    if let Some(r) = &root_graph {
        t.input("R", r, None);
    } else {
        t.inputs.push(format!("n={n}"));
    }
    let built = embed_as_residual(&h, n, root_graph.as_ref());
    let (g, root) = match built {
        Ok(x) => x,
        Err(e) => return t.fail(None, None, format!("construction failed: {e}")),
    };
    match residual(&g, &root) {
        Ok(r) if r.d_r != 1 => t.fail(
            Some(&h),
            Some(&r.residual),
            format!("d_R = {}, expected 1", r.d_r),
        ),
        actual => t.compare(Ok(h), actual.map(|r| r.residual)),
    }
}

fn vt_embed_trial(rng: &mut Rng, mut t: Trial, max_n: usize) -> Outcome {
    let h = circulant(rng, max_n);
    let n = rng.gen_range(1..=3);
    t.input("H", &h, None);
    t.inputs.push(format!("n={n}"));
    let (g, root) = match vt_embed_as_residual(&h, n) {
        Ok(x) => x,
        Err(e) => return t.fail(None, None, format!("construction failed: {e}")),
    };
    if !is_vertex_transitive(&g) {
        return t.fail(
            None,
            Some(&g),
            "construction is not vertex-transitive".into(),
        );
    }
    let actual = residual(&g, &root).map(|r| r.residual);
    t.compare(Ok(h), actual)
}
