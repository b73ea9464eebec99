//! Property suites behind `k2n verify`.
//!
//! Every suite is deterministic given its seed; cases run on the rayon
//! pool and failures are reported in case order.

use std::str::FromStr;

use k2n_core::budget::Budget;
use k2n_core::combinat::{
    check_interleave_certificate, check_pattern, find_r_tree, interleave_or_gap, is_nonseparating_induced_path,
    nonseparating_induced_path, r_tree_structure, unavoidable_submatrix, ZeroOneMatrix,
};
use k2n_core::enumerate::{biconnected_graphs, connected_graphs};
use k2n_core::fanstrip::{
    almost_disjoint, capture_between_paths, check_normal_form_script, degree2_path_near, embedded_in, extract_augmentation,
    fan_center_conflicts, find_maximal_fans, find_maximal_strips, long_nonseparating_path, make_fan, make_j, neighbor_run,
    normal_form_strip, random_augmentation, random_strip, regular_strip, strip_from_host, Addition, AugmentationPresentation,
    ExtractOptions,
};
use k2n_core::graph::{is_internally_3connected, is_k_connected, is_two_connected};
use k2n_core::iso::are_isomorphic_with_limit;
use k2n_core::minor::{brute_force_minor, has_k2n_minor, max_k2, verify_k2n_witness};
use k2n_core::standard::{complete, complete_bipartite, cycle, prism, subdivide_edge, wheel};
use k2n_core::sum::{
    c2_count_on_paths, c2_paths_give_minor, decompose, find_admissible_2cut, in_class_c, two_sum_paired, CClass, LabeledGraph,
    Orientation, TreeEdge, TreeStructure,
};
use k2n_core::typeone::{crossing_pairs, random_type_one, recognize_type_one_with_limit};
use k2n_core::{Graph, PathRef, VertexId};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

/// Regression constant: `max_k2(J(1, b))` for `b = 2..=5`.
pub const J1_MAX_K2: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scale {
    /// A few cases per suite, for quick checks.
    Smoke,
    /// The full desk-scale sizes.
    Desk,
}

impl FromStr for Scale {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "smoke" => Ok(Scale::Smoke),
            "desk" => Ok(Scale::Desk),
            _ => Err(format!("unknown scale {s:?} (smoke, desk)")),
        }
    }
}

impl Scale {
    fn pick<T>(self, smoke: T, desk: T) -> T {
        match self {
            Scale::Smoke => smoke,
            Scale::Desk => desk,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Config {
    pub scale: Scale,
    pub seed: u64,
    /// Node-expansion cap per case; `None` is unlimited.
    pub work_limit: Option<u64>,
}

impl Config {
    pub fn new(scale: Scale, seed: u64) -> Self {
        Config { scale, seed, work_limit: None }
    }

    fn budget(&self) -> Budget {
        Budget::with_limit(self.work_limit)
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(salt))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: usize,
    pub failures: usize,
    /// The first few failure messages.
    pub examples: Vec<String>,
    /// Observations that are recorded rather than asserted.
    pub notes: Vec<String>,
    /// Set when a case hit the work limit.
    pub work_limit_hit: bool,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }
}

const EXAMPLES: usize = 5;

type Check = Result<(), String>;

fn fail<T: std::fmt::Debug>(what: &str, about: T) -> Check {
    Err(format!("{what}: {about:?}"))
}

fn core<T>(r: k2n_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Runs `f` on every item in parallel and folds the outcomes in order.
fn run<T: Sync>(name: &str, items: &[T], f: impl Fn(&T) -> Check + Sync) -> SuiteReport {
    let results: Vec<Check> = items.par_iter().map(&f).collect();
    let errors: Vec<String> = results.into_iter().filter_map(Result::err).collect();
    SuiteReport {
        suite: name.into(),
        cases: items.len(),
        failures: errors.len(),
        work_limit_hit: errors.iter().any(|e| e.contains("work limit")),
        examples: errors.into_iter().take(EXAMPLES).collect(),
        notes: Vec::new(),
    }
}

pub struct Suite {
    pub name: &'static str,
    pub alias: Option<&'static str>,
    pub about: &'static str,
    pub run: fn(&Config) -> SuiteReport,
}

pub const SUITES: &[Suite] = &[
    Suite { name: "minor-oracle", alias: None, about: "fast K_{2,n} detector agrees with brute-force minor search", run: minor_oracle },
    Suite { name: "class-c-characterization", alias: Some("2.3"), about: "G is in C iff some label set admits no admissible 2-cut", run: class_c_characterization },
    Suite { name: "decompose-round-trip", alias: Some("2.6"), about: "tree_sum(decompose(G)) is G and every piece is in C", run: decompose_round_trip },
    Suite { name: "c2-paths-minor", alias: Some("2.9"), about: "n C2 nodes on a tree path give a verified K_{2,n} witness", run: c2_paths_minor },
    Suite { name: "r-tree-structure", alias: Some("3.1"), about: "without an R-tree, G0 has disjoint two-attachment bridges", run: r_tree_structure_suite },
    Suite { name: "interleave-or-gap", alias: Some("3.2"), about: "interleaving or gap certificate, exhaustive on [1,12]", run: interleave_suite },
    Suite { name: "unavoidable-submatrix", alias: Some("3.3"), about: "pattern finder matches exhaustive search; 2x2 column threshold", run: submatrix_suite },
    Suite { name: "nonseparating-path", alias: Some("3.4"), about: "induced x-y path with connected complement", run: nonseparating_suite },
    Suite { name: "neighbor-run", alias: Some("4.1"), about: "clean run of a path with m neighbours of x", run: neighbor_run_suite },
    Suite { name: "capture-between-paths", alias: Some("4.2"), about: "captured subpaths form a fan or strip of the host", run: capture_suite },
    Suite { name: "degree-two-path", alias: Some("4.3"), about: "long degree-two path outside a connected subgraph", run: degree2_suite },
    Suite { name: "long-nonseparating-path", alias: Some("4.4"), about: "long induced path with connected complement", run: long_path_suite },
    Suite { name: "fan-centers", alias: Some("5.1"), about: "maximal fans sharing an interior vertex share their center", run: fan_centers_suite },
    Suite { name: "normal-form-strip", alias: Some("5.5"), about: "normal-form strip is almost disjoint from long strips", run: normal_form_suite },
    Suite { name: "type-one-k25-free", alias: Some("6.1"), about: "type-I graphs have no K_{2,5} minor", run: type_one_suite },
    Suite { name: "two-sum-bound", alias: Some("6.2"), about: "2-sum of K_{2,m}- and K_{2,n}-free graphs has max_k2 <= (m-1)(n-1)", run: two_sum_suite },
    Suite { name: "augmentation-bound", alias: Some("6.3"), about: "max_k2 of an augmentation stays flat as additions grow", run: augmentation_bound_suite },
    Suite { name: "extraction-round-trip", alias: None, about: "augment(extract_augmentation(G)) is G", run: extraction_suite },
    Suite { name: "strip-length", alias: None, about: "strip length DP equals subset search", run: strip_length_suite },
    Suite { name: "j-constant", alias: None, about: "max_k2(J(1,b)) is the stored constant for b = 2..5", run: j_constant_suite },
];

/// Suites named by `id`: a name, an alias, or `all`.
pub fn lookup(id: &str) -> Option<Vec<&'static Suite>> {
    if id == "all" {
        return Some(SUITES.iter().collect());
    }
    SUITES.iter().find(|s| s.name == id || s.alias == Some(id)).map(|s| vec![s])
}

fn biconnected_up_to(n: usize) -> Vec<Graph> {
    (3..=n).flat_map(biconnected_graphs).collect()
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                e.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &e).unwrap()
}

fn random_biconnected(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    loop {
        let p = rng.gen_range(0.3..0.8);
        let g = random_graph(rng, n, p);
        if is_two_connected(&g) {
            return g;
        }
    }
}

fn stable_degree2_sets(g: &Graph) -> Vec<Vec<VertexId>> {
    let deg2: Vec<VertexId> = (0..g.n()).filter(|&v| g.degree(v) == 2).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << deg2.len()) {
        let l: Vec<VertexId> = (0..deg2.len()).filter(|&i| mask >> i & 1 == 1).map(|i| deg2[i]).collect();
        if l.iter().all(|&a| l.iter().all(|&b| !g.has_edge(a, b))) {
            out.push(l);
        }
    }
    out
}

fn minor_oracle(cfg: &Config) -> SuiteReport {
    let graphs: Vec<Graph> = (1..=cfg.scale.pick(5, 7)).flat_map(connected_graphs).collect();
    let cases: Vec<(Graph, usize)> = graphs.into_iter().flat_map(|g| (2..=4).map(move |n| (g.clone(), n))).collect();
    run("minor-oracle", &cases, |(g, n)| {
        let fast = core(has_k2n_minor(g, *n, &mut cfg.budget()))?;
        let slow = core(brute_force_minor(g, &complete_bipartite(2, *n), 10))?;
        if fast.is_some() != slow.is_some() {
            return fail("detector and brute force disagree", (g.edges(), n));
        }
        match fast {
            Some(w) if !verify_k2n_witness(g, &w) => fail("bad witness", w),
            _ => Ok(()),
        }
    })
}

fn class_c_characterization(cfg: &Config) -> SuiteReport {
    let graphs = biconnected_up_to(cfg.scale.pick(6, 8));
    run("class-c-characterization", &graphs, |g| {
        let mut free = false;
        for l in stable_degree2_sets(g) {
            free |= core(find_admissible_2cut(g, &l))?.is_none();
        }
        if free != (in_class_c(g) != CClass::None) {
            return fail("membership and cut-freeness differ", g.edges());
        }
        Ok(())
    })
}

fn decompose_round_trip(cfg: &Config) -> SuiteReport {
    let mut graphs = biconnected_up_to(cfg.scale.pick(6, 7));
    let mut rng = cfg.rng(26);
    for _ in 0..cfg.scale.pick(10, 200) {
        graphs.push(random_biconnected(&mut rng, 8));
    }
    run("decompose-round-trip", &graphs, |g| {
        let d = core(decompose(g, &[]))?;
        if let Some(p) = d.theta.pieces.iter().find(|p| in_class_c(&p.graph) == CClass::None) {
            return fail("piece outside C", p.graph.edges());
        }
        let back = core(d.theta.tree_sum())?.labeled.graph;
        if !core(are_isomorphic_with_limit(&back, g, 64))? {
            return fail("tree sum differs from input", g.edges());
        }
        Ok(())
    })
}

/// A C2 piece with `k` labels: `K_{2,3}`, or the wheel `W_4` with `k`
/// disjoint rim edges subdivided.
fn c2_piece(rng: &mut ChaCha8Rng, k: usize) -> LabeledGraph {
    if rng.gen_bool(0.5) {
        let g = complete_bipartite(2, 3);
        let l: Vec<VertexId> = (2..2 + k).collect();
        LabeledGraph::new(g, l).unwrap()
    } else {
        let mut g = wheel(4).unwrap();
        let mut l = Vec::new();
        for &(u, v) in [(1, 2), (3, 4)].iter().take(k) {
            g = subdivide_edge(&g, u, v, 1).unwrap();
            l.push(g.n() - 1);
        }
        LabeledGraph::new(g, l).unwrap()
    }
}

/// A C1 filler: a cycle of length 4..=6 with two opposite labels.
fn c1_piece(rng: &mut ChaCha8Rng) -> LabeledGraph {
    let k = rng.gen_range(4..=6);
    LabeledGraph::new(cycle(k), vec![0, k / 2]).unwrap()
}

fn c2_chain(rng: &mut ChaCha8Rng, n: usize) -> TreeStructure {
    let mut pieces: Vec<LabeledGraph> = Vec::new();
    let mut edges = Vec::new();
    for i in 0..n {
        let labels = if n == 1 { 0 } else if i == 0 || i + 1 == n { 1 } else { 2 };
        if i > 0 && rng.gen_bool(0.5) {
            pieces.push(c1_piece(rng));
            let t = pieces.len() - 1;
            let prev = t - 1;
            let ls = *pieces[prev].labels.last().unwrap();
            edges.push(TreeEdge { s: prev, t, ls, lt: pieces[t].labels[0], orientation: orient(rng) });
        }
        pieces.push(c2_piece(rng, labels));
        let t = pieces.len() - 1;
        if t > 0 {
            let prev = t - 1;
            let ls = *pieces[prev].labels.last().unwrap();
            edges.push(TreeEdge { s: prev, t, ls, lt: pieces[t].labels[0], orientation: orient(rng) });
        }
    }
    TreeStructure { pieces, edges }
}

fn orient(rng: &mut ChaCha8Rng) -> Orientation {
    if rng.gen_bool(0.5) {
        Orientation::Parallel
    } else {
        Orientation::Crossed
    }
}

fn c2_paths_minor(cfg: &Config) -> SuiteReport {
    let mut rng = cfg.rng(29);
    let mut cases = Vec::new();
    for n in 2..=4 {
        for _ in 0..cfg.scale.pick(5, 50) {
            cases.push((c2_chain(&mut rng, n), n));
        }
    }
    run("c2-paths-minor", &cases, |(theta, n)| {
        core(theta.validate())?;
        if c2_count_on_paths(theta) < *n {
            return fail("chain has too few C2 nodes on a path", n);
        }
        let w = core(c2_paths_give_minor(theta, *n))?;
        let g = core(theta.tree_sum())?.labeled.graph;
        if w.leaves.len() != *n || !verify_k2n_witness(&g, &w) {
            return fail("witness does not verify", w);
        }
        Ok(())
    })
}

fn r_tree_structure_suite(cfg: &Config) -> SuiteReport {
    let mut rng = cfg.rng(31);
    let want = cfg.scale.pick(20, 200);
    let mut cases = Vec::new();
    let mut tries = 0;
    while cases.len() < want && tries < 200 * want {
        tries += 1;
        let v = rng.gen_range(4..=12);
        let mut e: Vec<(usize, usize)> = (1..v).map(|i: usize| (rng.gen_range(i.saturating_sub(2)..i), i)).collect();
        for _ in 0..rng.gen_range(0..=3) {
            let (a, b) = (rng.gen_range(0..v), rng.gen_range(0..v));
            if a != b {
                e.push((a, b));
            }
        }
        let g = Graph::from_edges(v, &e).unwrap();
        let r: Vec<VertexId> = (0..v).filter(|_| rng.gen_bool(0.5)).collect();
        let n = rng.gen_range(3..=5);
        if find_r_tree(&g, &r, n, &mut Budget::unlimited()).ok().flatten().is_none() {
            cases.push((g, r, n));
        }
    }
    let mut rep = run("r-tree-structure", &cases, |(g, r, n)| {
        let s = core(r_tree_structure(g, r, *n, &mut cfg.budget()))?;
        if !s.disjoint_attachments || !s.two_attachments {
            return fail("G0 bridge conclusions fail", (g.edges(), r, n));
        }
        Ok(())
    });
    let most = cases
        .iter()
        .filter_map(|(g, r, n)| r_tree_structure(g, r, *n, &mut Budget::unlimited()).ok().map(|s| (s.r_in_g0, *n)))
        .max();
    if let Some((k, n)) = most {
        rep.notes.push(format!("largest |R ∩ V(G0)| observed: {k} (n = {n})"));
    }
    rep
}

fn subsets(hi: i64) -> Vec<Vec<i64>> {
    (0u32..1 << hi).map(|m| (1..=hi).filter(|&v| m >> (v - 1) & 1 == 1).collect()).collect()
}

fn interleave_suite(cfg: &Config) -> SuiteReport {
    let sets = subsets(cfg.scale.pick(8, 12));
    let failures: Vec<String> = sets
        .par_iter()
        .flat_map_iter(|x| {
            let sets = &sets;
            let mut out = Vec::new();
            for n in 1..=3usize {
                for m in 1..=3usize {
                    if x.len() < n * (m + 1) {
                        continue;
                    }
                    for y in sets {
                        match interleave_or_gap(x, y, n, m) {
                            Ok(c) if check_interleave_certificate(x, y, n, m, &c) => {}
                            other => out.push(format!("X {x:?} Y {y:?} n {n} m {m}: {other:?}")),
                        }
                    }
                }
            }
            out
        })
        .collect();
    let cases = sets
        .iter()
        .map(|x| (1..=3usize).flat_map(|n| (1..=3usize).map(move |m| (n, m))).filter(|&(n, m)| x.len() >= n * (m + 1)).count())
        .sum::<usize>()
        * sets.len();
    SuiteReport {
        suite: "interleave-or-gap".into(),
        cases,
        failures: failures.len(),
        examples: failures.into_iter().take(EXAMPLES).collect(),
        notes: Vec::new(),
        work_limit_hit: false,
    }
}

/// Every ordered choice of `n` rows and columns against each pattern.
fn pattern_brute(a: &ZeroOneMatrix, n: usize) -> bool {
    fn orders(k: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..k {
            if !cur.contains(&v) {
                cur.push(v);
                orders(k, n, cur, out);
                cur.pop();
            }
        }
    }
    let (mut rs, mut cs) = (Vec::new(), Vec::new());
    orders(a.rows(), n, &mut Vec::new(), &mut rs);
    orders(a.cols(), n, &mut Vec::new(), &mut cs);
    let pats: [fn(usize, usize) -> bool; 3] = [|i, j| i == j, |i, j| i != j, |i, j| i >= j];
    rs.iter().any(|r| cs.iter().any(|c| pats.iter().any(|p| (0..n).all(|i| (0..n).all(|j| a.get(r[i], c[j]) == p(i, j))))))
}

/// Least column count forcing a 2x2 pattern in every simple matrix with
/// at most four rows. Empirical.
pub const C2_COLUMNS: usize = 3;

fn submatrix_suite(cfg: &Config) -> SuiteReport {
    let mut rng = cfg.rng(33);
    let mut cases = Vec::new();
    while cases.len() < cfg.scale.pick(30, 300) {
        let (r, c) = (rng.gen_range(2..=5), rng.gen_range(2..=5));
        let p = rng.gen_range(0.2..0.8);
        let bits: Vec<bool> = (0..r * c).map(|_| rng.gen_bool(p)).collect();
        let a = ZeroOneMatrix::from_fn(r, c, |i, j| bits[i * c + j]);
        if a.is_simple() {
            cases.push(a);
        }
    }
    let mut rep = run("unavoidable-submatrix", &cases, |a| {
        for n in 1..=3 {
            let got = core(unavoidable_submatrix(a, n, &mut cfg.budget()))?;
            if got.is_some() != pattern_brute(a, n) {
                return fail("finder and exhaustive search disagree", (a.to_text(), n));
            }
            if let Some(m) = got {
                if !check_pattern(a, n, &m) {
                    return fail("match does not fit its pattern", m);
                }
            }
        }
        Ok(())
    });
    let mut widest = 0;
    for rows in 1..=4usize {
        let k = 1usize << rows;
        for mask in 1u32..(1 << k) {
            let cols: Vec<usize> = (0..k).filter(|&i| mask >> i & 1 == 1).collect();
            if cols.len() <= widest {
                continue;
            }
            let a = ZeroOneMatrix::from_fn(rows, cols.len(), |i, j| cols[j] >> i & 1 == 1);
            if unavoidable_submatrix(&a, 2, &mut Budget::unlimited()).ok().flatten().is_none() {
                widest = cols.len();
            }
        }
    }
    rep.cases += 1;
    if widest + 1 != C2_COLUMNS {
        rep.failures += 1;
        rep.examples.push(format!("2x2 column threshold {} differs from stored {C2_COLUMNS}", widest + 1));
    }
    rep.notes.push(format!("every simple matrix with {} columns (<= 4 rows) has a 2x2 pattern", widest + 1));
    rep
}

fn three_connected_up_to(n: usize) -> Vec<Graph> {
    (4..=n).flat_map(connected_graphs).filter(|g| is_k_connected(g, 3)).collect()
}

fn nonseparating_suite(cfg: &Config) -> SuiteReport {
    let mut graphs = three_connected_up_to(cfg.scale.pick(6, 7));
    let mut rng = cfg.rng(34);
    let base = graphs.clone();
    for _ in 0..cfg.scale.pick(10, 100) {
        let g = base.choose(&mut rng).unwrap();
        let &(u, v) = g.edges().choose(&mut rng).unwrap();
        graphs.push(subdivide_edge(g, u, v, 1).unwrap());
    }
    run("nonseparating-path", &graphs, |g| {
        for x in 0..g.n() {
            for y in 0..g.n() {
                if x == y {
                    continue;
                }
                let p = core(nonseparating_induced_path(g, x, y, &mut cfg.budget()))?;
                if !is_nonseparating_induced_path(g, &p, x, y) || p.ends() != Some((x, y)) {
                    return fail("bad path", (g.edges(), x, y, p));
                }
            }
        }
        Ok(())
    })
}

fn hosts(cfg: &Config, salt: u64, count: usize) -> Vec<Graph> {
    (0..count as u64).map(|i| random_augmentation(6, cfg.seed.wrapping_add(salt * 1_000_003 + i)).unwrap().augment().unwrap()).collect()
}

fn clean_run(g: &Graph, p: &[VertexId], run: &[VertexId], x: VertexId, m: usize) -> bool {
    let Some(i) = p.iter().position(|&v| v == run[0]) else { return false };
    let fwd = p.get(i..i + run.len()) == Some(run);
    let rev = i + 1 >= run.len() && p[i + 1 - run.len()..=i].iter().rev().eq(run.iter());
    (fwd || rev)
        && run.iter().filter(|&&v| g.has_edge(x, v)).count() >= m
        && run.iter().all(|&v| g.neighbors(v).iter().all(|&w| w == x || p.contains(&w)))
}

fn neighbor_run_suite(cfg: &Config) -> SuiteReport {
    let mut rng = cfg.rng(41);
    let mut cases = Vec::new();
    for _ in 0..cfg.scale.pick(30, 300) {
        let k = rng.gen_range(3..12);
        let extra = rng.gen_range(1..4);
        let mut e: Vec<(usize, usize)> = (0..k - 1).map(|i| (i, i + 1)).collect();
        for o in k..k + extra {
            for v in 0..k {
                if rng.gen_bool(if o == k { 0.6 } else { 0.15 }) {
                    e.push((o, v));
                }
            }
        }
        cases.push((Graph::from_edges(k + extra, &e).unwrap(), k));
    }
    run("neighbor-run", &cases, |(g, k)| {
        let p: Vec<VertexId> = (0..*k).collect();
        for m in 1..=4 {
            if let Some(r) = core(neighbor_run(g, &PathRef::new(p.clone()), *k, m))? {
                if !clean_run(g, &p, &r.vertices, *k, m) {
                    return fail("run is not clean", (g.edges(), m, r));
                }
            }
        }
        Ok(())
    })
}

fn is_subpath(p: &[VertexId], s: &[VertexId]) -> bool {
    p.windows(s.len()).any(|w| w == s || w.iter().rev().eq(s.iter()))
}

fn capture_suite(cfg: &Config) -> SuiteReport {
    let found = std::sync::atomic::AtomicUsize::new(0);
    let mut cases = Vec::new();
    for (i, g) in hosts(cfg, 42, cfg.scale.pick(10, 60)).into_iter().enumerate() {
        let mut rng = cfg.rng(42 + i as u64);
        for _ in 0..4 {
            let p = random_induced_path(&g, &mut rng, 8);
            let q = random_induced_path(&g, &mut rng, 8);
            if p.vertices.iter().any(|v| q.vertices.contains(v)) {
                continue;
            }
            cases.push((g.clone(), p, q));
        }
    }
    let mut rep = run("capture-between-paths", &cases, |(host, p, q)| {
        // the search works on the graph spanned by the two paths
        let mut vs: Vec<VertexId> = p.vertices.iter().chain(&q.vertices).copied().collect();
        vs.sort_unstable();
        let (g, _) = host.induced(&vs);
        let g = &g;
        let pos = |v: &VertexId| vs.binary_search(v).unwrap();
        let p = &PathRef::new(p.vertices.iter().map(pos).collect());
        let q = &PathRef::new(q.vertices.iter().map(pos).collect());
        for m in 1..=3 {
            if let Some(c) = core(capture_between_paths(g, p, q, m, &mut cfg.budget()))? {
                let ok = match &c.addition {
                    Addition::Fan(f) => f.is_fan_of(g) && f.length() >= m,
                    Addition::Strip(s) => s.is_strip_of(g) && s.length() >= m,
                };
                if !ok || core(c.addition.validate()).is_err() || !is_subpath(&p.vertices, &c.p.vertices) || !is_subpath(&q.vertices, &c.q.vertices) {
                    return fail("capture is not a fan or strip of the host", (g.edges(), m));
                }
                found.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
            }
        }
        Ok(())
    });
    rep.notes.push(format!("{} captures found over m = 1..=3", found.into_inner()));
    rep
}

/// Grows an induced path from a random vertex by random extension.
fn random_induced_path(g: &Graph, rng: &mut ChaCha8Rng, max: usize) -> PathRef {
    let mut p = vec![rng.gen_range(0..g.n())];
    while p.len() < max {
        let last = *p.last().unwrap();
        let next: Vec<VertexId> = g
            .neighbors(last)
            .iter()
            .copied()
            .filter(|&w| !p.contains(&w) && p[..p.len() - 1].iter().all(|&u| !g.has_edge(u, w)))
            .collect();
        match next.choose(rng) {
            Some(&w) => p.push(w),
            None => break,
        }
    }
    PathRef::new(p)
}

fn degree2_suite(cfg: &Config) -> SuiteReport {
    let mut cases = Vec::new();
    for (i, g) in hosts(cfg, 43, cfg.scale.pick(10, 80)).into_iter().enumerate() {
        let mut rng = cfg.rng(43 + i as u64);
        for _ in 0..4 {
            let s = rng.gen_range(0..g.n());
            let d = g.distances(s);
            let r = rng.gen_range(0..3);
            let h: Vec<VertexId> = (0..g.n()).filter(|&v| d[v] <= r).collect();
            let rest: Vec<VertexId> = (0..g.n()).filter(|&v| d[v] > r).collect();
            if !rest.is_empty() && g.induced(&rest).0.is_connected() {
                cases.push((g.clone(), h));
            }
        }
    }
    run("degree-two-path", &cases, |(g, h)| {
        for m in 1..=3 {
            if let Some(p) = core(degree2_path_near(g, h, m))? {
                let deg_out = |v: VertexId| g.neighbors(v).iter().filter(|w| !h.contains(w)).count();
                if p.length() < 2 * m || !p.is_path_in(g) || p.vertices.iter().any(|v| h.contains(v) || deg_out(*v) != 2) {
                    return fail("bad degree-two path", (g.edges(), h, m, p));
                }
            }
        }
        Ok(())
    })
}

fn long_path_suite(cfg: &Config) -> SuiteReport {
    let graphs = hosts(cfg, 44, cfg.scale.pick(10, 80));
    let mut rep = run("long-nonseparating-path", &graphs, |g| {
        for m in [1, 3, 5] {
            if let Some(p) = core(long_nonseparating_path(g, m, &mut cfg.budget()))? {
                let rest: Vec<VertexId> = (0..g.n()).filter(|v| !p.vertices.contains(v)).collect();
                if p.length() < m || !p.is_induced_in(g) || !(rest.is_empty() || g.induced(&rest).0.is_connected()) {
                    return fail("bad path", (g.edges(), m, p));
                }
            }
        }
        Ok(())
    });
    let found = graphs.iter().filter(|g| long_nonseparating_path(g, 3, &mut Budget::unlimited()).ok().flatten().is_some()).count();
    rep.notes.push(format!("{found} of {} hosts have a nonseparating induced path of length 3", graphs.len()));
    rep
}

fn fan_centers_suite(cfg: &Config) -> SuiteReport {
    let graphs = hosts(cfg, 51, cfg.scale.pick(20, 200));
    run("fan-centers", &graphs, |g| {
        if !is_internally_3connected(g) {
            return fail("host is not internally 3-connected", g.edges());
        }
        let fans = find_maximal_fans(g);
        let bad = fan_center_conflicts(&fans);
        if !bad.is_empty() {
            return fail("fans share an interior vertex but not a center", (g.edges(), bad));
        }
        Ok(())
    })
}

/// `K_8` with the normal-form strip on `0..4` and a regular strip of
/// `pieces` pieces on `4..8`, plus the normal-form strip in host ids.
pub fn normal_form_host(pieces: usize) -> (Graph, Addition) {
    let nf = normal_form_strip();
    let long = regular_strip(pieces).unwrap();
    let mut p = AugmentationPresentation::trivial(complete(8));
    for (s, off) in [(nf.clone(), 0), (long, 4)] {
        let ids = s.corners().iter().enumerate().map(|(k, &c)| (c, off + k)).collect();
        p.additions.push(Addition::Strip(s));
        p.identification.push(ids);
    }
    let (g, maps) = p.augment_with_maps().unwrap();
    let host = |v: VertexId| maps[0].iter().find(|m| m.0 == v).unwrap().1;
    let j = strip_from_host(&g, nf.p1.iter().map(|&v| host(v)).collect(), nf.p2.iter().map(|&v| host(v)).collect()).unwrap();
    (g, Addition::Strip(j))
}

fn normal_form_suite(cfg: &Config) -> SuiteReport {
    let pieces: Vec<usize> = (8..=cfg.scale.pick(9, 12)).collect();
    let mut embedded = 0;
    let mut rep = run("normal-form-strip", &pieces, |&k| {
        let (g, j) = normal_form_host(k);
        let six = core(find_maximal_strips(&g, 6, &mut cfg.budget()))?;
        if six.iter().any(|s| embedded_in(&j, s)) {
            return Ok(());
        }
        let eight = core(find_maximal_strips(&g, 8, &mut cfg.budget()))?;
        if eight.is_empty() {
            return fail("no long strip found", k);
        }
        if let Some(s) = eight.iter().find(|s| !almost_disjoint(&j, &Addition::Strip((*s).clone()))) {
            return fail("normal form meets a long strip", (k, &s.p1, &s.p2));
        }
        Ok(())
    });
    for &k in &pieces {
        let (g, j) = normal_form_host(k);
        if find_maximal_strips(&g, 6, &mut Budget::unlimited()).unwrap_or_default().iter().any(|s| embedded_in(&j, s)) {
            embedded += 1;
        }
    }
    rep.notes.push(format!("{embedded} of {} hosts embed the normal form in a length-6 strip", pieces.len()));
    rep
}

fn type_one_suite(cfg: &Config) -> SuiteReport {
    let seeds: Vec<u64> = (0..cfg.scale.pick(50, 1000)).collect();
    let mut rep = run("type-one-k25-free", &seeds, |&i| {
        let seed = cfg.seed.wrapping_add(i);
        let n = 3 + (i as usize % 14);
        let g = core(core(random_type_one(n, seed))?.graph())?;
        let (p, _) = core(max_k2(&g, &mut cfg.budget()))?;
        if p > 4 {
            return fail("type-I graph with a K_{2,5} minor", g.edges());
        }
        Ok(())
    });
    let (checked, bad) = closure_spot_check(cfg, cfg.scale.pick(20, 200));
    rep.notes.push(format!("crossing chord deleted and contracted: {bad} of {checked} results not recognised as type-I"));
    rep
}

/// A 2-connected graph with a degree-two vertex: a cycle plus a few chords,
/// or a small random type-I graph.
fn sum_part(rng: &mut ChaCha8Rng) -> (Graph, VertexId) {
    loop {
        let g = if rng.gen_bool(0.5) {
            let k = rng.gen_range(4..=9);
            let mut g = cycle(k);
            for _ in 0..rng.gen_range(0..=2) {
                let (u, v) = (rng.gen_range(0..k), rng.gen_range(0..k));
                if u != v {
                    g = g.with_edge(u, v).unwrap_or(g);
                }
            }
            g
        } else {
            random_type_one(rng.gen_range(4..=10), rng.gen()).unwrap().graph().unwrap()
        };
        let deg2: Vec<VertexId> = (0..g.n()).filter(|&v| g.degree(v) == 2).collect();
        if let Some(&z) = deg2.choose(rng) {
            return (g, z);
        }
    }
}

fn two_sum_suite(cfg: &Config) -> SuiteReport {
    let mut rng = cfg.rng(62);
    // parts with no K_{2,4} minor, so m, n <= 4 with m - 1 = max_k2
    let part = |rng: &mut ChaCha8Rng| loop {
        let (g, z) = sum_part(rng);
        let p = max_k2(&g, &mut Budget::unlimited()).unwrap().0;
        if p <= 3 {
            return (g, z, p);
        }
    };
    let mut cases = Vec::new();
    while cases.len() < cfg.scale.pick(30, 300) {
        let a = part(&mut rng);
        let b = part(&mut rng);
        cases.push((a, b, orient(&mut rng)));
    }
    let mut rep = run("two-sum-bound", &cases, |((g1, z1, p1), (g2, z2, p2), o)| {
        let s = core(two_sum_paired(g1, *z1, g2, *z2, *o))?.graph;
        let p = core(max_k2(&s, &mut cfg.budget()))?.0;
        if p > p1 * p2 {
            return fail("2-sum exceeds (m-1)(n-1)", (g1.edges(), z1, g2.edges(), z2, p1, p2, p));
        }
        Ok(())
    });
    let mut mn: Vec<(usize, usize)> = cases.iter().map(|((_, _, a), (_, _, b), _)| (a + 1, b + 1)).collect();
    mn.sort_unstable();
    mn.dedup();
    rep.notes.push(format!("(m, n) pairs covered: {mn:?}"));
    rep
}

/// Base `K_4`, `K_5` or the prism with one fan of growing length at
/// vertex 0, and `J(a, b)` with growing `b`.
fn augmentation_bound_suite(cfg: &Config) -> SuiteReport {
    let top = cfg.scale.pick(5, 7);
    let mut families: Vec<(String, Vec<Graph>)> = Vec::new();
    for (name, base) in [("K4", complete(4)), ("K5", complete(5)), ("prism", prism())] {
        let mut seq = Vec::new();
        for k in 2..=top {
            let f = make_fan(k, &[]).unwrap();
            let end = *f.rim.last().unwrap();
            let mut p = AugmentationPresentation::trivial(base.clone());
            let corners = vec![(0, 0), (1, 1), (end, 2)];
            p.additions.push(Addition::Fan(f));
            p.identification.push(corners);
            seq.push(p.augment().unwrap());
        }
        families.push((format!("{name} + fan of length 2..={top}"), seq));
    }
    families.push(("J(1, b), b = 2..=5".into(), (2..=5).map(|b| make_j(1, b).unwrap()).collect()));
    if cfg.scale == Scale::Desk {
        families.push(("J(2, b), b = 2..=4".into(), (2..=4).map(|b| make_j(2, b).unwrap()).collect()));
    }
    let values: Vec<Result<Vec<usize>, String>> = families
        .par_iter()
        .map(|(_, seq)| seq.iter().map(|g| core(max_k2(g, &mut cfg.budget())).map(|r| r.0)).collect())
        .collect();
    let mut rep = run("augmentation-bound", &values, |vals| {
        let vals = vals.clone()?;
        // the value may rise while additions are short, then must stay put
        let tail = &vals[vals.len() / 2..];
        if tail.windows(2).any(|w| w[0] != w[1]) {
            return fail("max_k2 keeps growing", vals);
        }
        Ok(())
    });
    for ((name, _), vals) in families.iter().zip(&values) {
        if let Ok(vals) = vals {
            rep.notes.push(format!("{name}: max_k2 {vals:?}"));
        }
    }
    rep
}

fn extraction_suite(cfg: &Config) -> SuiteReport {
    let seeds: Vec<u64> = (0..cfg.scale.pick(20, 200)).collect();
    run("extraction-round-trip", &seeds, |&i| {
        let seed = cfg.seed.wrapping_add(i);
        let g = core(core(random_augmentation(6, seed))?.augment())?;
        for opts in [ExtractOptions::default(), ExtractOptions { strip_threshold: 3, ..ExtractOptions::default() }] {
            let e = core(extract_augmentation(&g, g.n(), opts, &mut cfg.budget()))?;
            let back = core(e.presentation.augment())?;
            if !core(are_isomorphic_with_limit(&back, &g, 128))? {
                return fail("round trip changed the graph", (seed, opts.strip_threshold));
            }
            for (a, script) in e.presentation.additions.iter().zip(&e.scripts) {
                if let (Addition::Strip(s), Some(ops)) = (a, script) {
                    if !check_normal_form_script(s, ops) {
                        return fail("normal-form script does not reach the normal form", seed);
                    }
                }
            }
        }
        Ok(())
    })
}

/// The strip corpus: random strips on paths of 2..=10 vertices and the
/// regular strips of 1..=10 pieces, keeping those with at most 20 chords.
pub fn strip_corpus(scale: Scale, seed: u64) -> Vec<k2n_core::fanstrip::Strip> {
    let mut out = Vec::new();
    for p in 2..=10 {
        for q in 2..=10 {
            for i in 0..scale.pick(2, 20) {
                out.push(random_strip(p, q, seed.wrapping_add(i * 131 + (p * 11 + q) as u64)).unwrap());
            }
        }
    }
    out.extend((1..=10).map(|k| regular_strip(k).unwrap()));
    out.retain(|s| s.chords().len() <= 20);
    out
}

fn strip_length_suite(cfg: &Config) -> SuiteReport {
    let corpus = strip_corpus(cfg.scale, cfg.seed);
    run("strip-length", &corpus, |s| {
        core(s.validate())?;
        if s.length() != s.length_brute() {
            return fail("DP and subset search differ", (&s.p1, &s.p2, s.length(), s.length_brute()));
        }
        Ok(())
    })
}

fn j_constant_suite(cfg: &Config) -> SuiteReport {
    let bs: Vec<usize> = (2..=5).collect();
    run("j-constant", &bs, |&b| {
        let g = core(make_j(1, b))?;
        let (p, w) = core(max_k2(&g, &mut cfg.budget()))?;
        if p != J1_MAX_K2 || !w.is_some_and(|w| verify_k2n_witness(&g, &w)) {
            return fail("J(1, b) off the stored constant", (b, p));
        }
        Ok(())
    })
}

/// Contracting or deleting a crossing chord of a type-I graph on at most
/// 12 vertices gives a graph that is again recognised as type-I. Returns
/// (checked, failing) counts; recorded, not asserted.
pub fn closure_spot_check(cfg: &Config, count: u64) -> (usize, usize) {
    let mut checked = 0;
    let mut bad = 0;
    for i in 0..count {
        let d = random_type_one(4 + (i as usize % 9), cfg.seed.wrapping_add(i)).unwrap();
        let g = d.graph().unwrap();
        let Some(&(a, _)) = crossing_pairs(&d).first() else { continue };
        let (u, v) = d.chords[a];
        checked += 1;
        let del = g.without_edge(u, v).unwrap();
        let (con, _) = g.contract_edge(u, v).unwrap();
        let ok = |h: &Graph| recognize_type_one_with_limit(h, 16).map(|r| r.is_some()).unwrap_or(false);
        if !ok(&del) || !ok(&con) {
            bad += 1;
        }
    }
    (checked, bad)
}
