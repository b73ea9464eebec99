use k2n_core::budget::Budget;
use k2n_core::fanstrip::*;
use k2n_core::graph::{is_internally_3connected, is_k_connected};
use k2n_core::iso::are_isomorphic_with_limit;
use k2n_core::minor::{brute_force_minor, has_k2n_minor, max_k2};
use k2n_core::standard::{complete, complete_bipartite};
use k2n_core::typeone::recognize_type_one;
use k2n_core::{Graph, PathRef, VertexId};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Regular strip lengths for 1..=8 pieces, by the subset-search oracle.
const REGULAR_LENGTHS: [usize; 8] = [1, 2, 3, 4, 5, 6, 7, 8];

/// max_k2(J(1, b)) for b = 2..=5, frozen from the brute-force oracle on
/// J(1,2), J(1,3) and the exact detector on all four.
const J1_MAX_K2: usize = 4;

#[test]
fn regular_strips_grow_one_per_piece() {
    let mut last = 0;
    for (k, &want) in (1..=8).zip(REGULAR_LENGTHS.iter()) {
        let s = regular_strip(k).unwrap();
        assert_eq!((s.graph.n(), s.graph.m()), (2 * k + 2, 4 * k));
        assert_eq!(s.length_brute(), want);
        assert_eq!(s.length(), want);
        assert!(s.length() >= last);
        last = s.length();
    }
}

#[test]
fn j1_max_k2_is_constant() {
    for b in 2..=3 {
        let g = make_j(1, b).unwrap();
        assert!(brute_force_minor(&g, &complete_bipartite(2, J1_MAX_K2), 10).unwrap().is_some());
        assert!(brute_force_minor(&g, &complete_bipartite(2, J1_MAX_K2 + 1), 10).unwrap().is_none());
    }
    for b in 2..=5 {
        let g = make_j(1, b).unwrap();
        assert_eq!(max_k2(&g, &mut Budget::unlimited()).unwrap().0, J1_MAX_K2);
    }
}

#[test]
fn j_graphs_are_3_connected() {
    for b in 1..=4 {
        assert!(is_k_connected(&make_j(1, b).unwrap(), 3));
    }
    assert!(is_k_connected(&make_j(2, 3).unwrap(), 3));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn strip_length_dp_matches_subset_search(p in 2usize..11, q in 2usize..11, seed in any::<u64>()) {
        let s = random_strip(p, q, seed).unwrap();
        s.validate().unwrap();
        prop_assume!(s.chords().len() <= 20);
        prop_assert_eq!(s.length(), s.length_brute());
    }
}

#[test]
fn extraction_round_trips() {
    for seed in 0..30 {
        let p = random_augmentation(6, seed).unwrap();
        let g = p.augment().unwrap();
        for opts in [ExtractOptions::default(), ExtractOptions { strip_threshold: 3, check_minor_free: false }] {
            let e = extract_augmentation(&g, g.n(), opts, &mut Budget::unlimited()).unwrap();
            let back = e.presentation.augment().unwrap();
            assert!(are_isomorphic_with_limit(&back, &g, 128).unwrap(), "seed {seed}");
            for a in &e.presentation.additions {
                a.validate().unwrap();
            }
            for (a, script) in e.presentation.additions.iter().zip(&e.scripts) {
                if let (Addition::Strip(s), Some(ops)) = (a, script) {
                    assert!(check_normal_form_script(s, ops));
                }
            }
        }
    }
}

#[test]
fn maximal_fans_sharing_interior_share_center() {
    for seed in 0..40 {
        let g = random_augmentation(6, seed).unwrap().augment().unwrap();
        let fans = find_maximal_fans(&g);
        assert!(fan_center_conflicts(&fans).is_empty(), "seed {seed}");
        for (i, f) in fans.iter().enumerate() {
            for h in &fans[i + 1..] {
                let t = check_pairwise_interaction(&g, &Addition::Fan(f.clone()), &Addition::Fan(h.clone())).unwrap();
                assert!(matches!(t, Interaction::AlmostDisjoint | Interaction::SameCenter), "seed {seed}: {t:?}");
            }
        }
    }
}

/// K_8 with the normal-form strip on 0..4 and a regular strip of length
/// at least 8 on 4..8.
#[test]
fn normal_form_strip_is_almost_disjoint_from_long_strips() {
    for pieces in 8..=10 {
        let nf = normal_form_strip();
        let long = regular_strip(pieces).unwrap();
        let mut p = AugmentationPresentation::trivial(complete(8));
        for (s, off) in [(nf, 0), (long, 4)] {
            let ids = s.corners().iter().enumerate().map(|(k, &c)| (c, off + k)).collect();
            p.additions.push(Addition::Strip(s));
            p.identification.push(ids);
        }
        let (g, maps) = p.augment_with_maps().unwrap();
        assert!(is_internally_3connected(&g));
        let Addition::Strip(nf) = &p.additions[0] else { unreachable!() };
        let host = |v: VertexId| maps[0][maps[0].binary_search_by_key(&v, |m| m.0).unwrap()].1;
        let j = strip_from_host(&g, nf.p1.iter().map(|&v| host(v)).collect(), nf.p2.iter().map(|&v| host(v)).collect()).unwrap();
        let j = Addition::Strip(j);
        let six = find_maximal_strips(&g, 6, &mut Budget::unlimited()).unwrap();
        if six.iter().any(|s| embedded_in(&j, s)) {
            continue;
        }
        let eight = find_maximal_strips(&g, 8, &mut Budget::unlimited()).unwrap();
        assert!(!eight.is_empty());
        for s in eight {
            assert!(almost_disjoint(&j, &Addition::Strip(s)));
        }
    }
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

/// Subpath oracle: some subpath has `m` neighbours of `x` and no other
/// outside vertex touches it.
fn run_exists(g: &Graph, p: &[VertexId], x: VertexId, m: usize) -> bool {
    for i in 0..p.len() {
        for j in i..p.len() {
            let seg = &p[i..=j];
            let hits = seg.iter().filter(|&&v| g.has_edge(x, v)).count();
            let clean = seg.iter().all(|&v| g.neighbors(v).iter().all(|&w| w == x || p.contains(&w)));
            if hits >= m && clean {
                return true;
            }
        }
    }
    false
}

#[test]
fn neighbor_run_agrees_with_subpath_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let k = rng.gen_range(3..10);
        let extra = rng.gen_range(1..4);
        let mut e: Vec<(usize, usize)> = (0..k - 1).map(|i| (i, i + 1)).collect();
        for o in k..k + extra {
            for v in 0..k {
                if rng.gen_bool(if o == k { 0.6 } else { 0.15 }) {
                    e.push((o, v));
                }
            }
        }
        let g = Graph::from_edges(k + extra, &e).unwrap();
        let p: Vec<VertexId> = (0..k).collect();
        for m in 1..=4 {
            let got = neighbor_run(&g, &PathRef::new(p.clone()), k, m).unwrap();
            assert_eq!(got.is_some(), run_exists(&g, &p, k, m));
            if let Some(r) = got {
                let i = r.vertices[0].min(*r.vertices.last().unwrap());
                let seg: Vec<VertexId> = (i..i + r.vertices.len()).collect();
                let mut sorted = r.vertices.clone();
                sorted.sort_unstable();
                assert_eq!(sorted, seg);
                let hits = seg.iter().filter(|&&v| g.has_edge(k, v)).count();
                assert!(hits >= m);
                assert!(seg.iter().all(|&v| g.neighbors(v).iter().all(|&w| w == k || w < k)));
            }
        }
    }
}

/// Chord-crossing oracle for a strip spanned by `p1`, `p2` inside `g`: the
/// cycle `p1 + rev(p2)` closed by `ab`, `cd`, each chord crossing at most
/// one other and crossing pairs spanning two cycle edges; minimum degree
/// two; length by subset search.
fn strip_oracle(edges: &[(VertexId, VertexId)], p1: &[VertexId], p2: &[VertexId]) -> Option<usize> {
    let cyc: Vec<VertexId> = p1.iter().chain(p2.iter().rev()).copied().collect();
    let k = cyc.len();
    let pos = |v: VertexId| cyc.iter().position(|&w| w == v).unwrap();
    let cycle_edge = |i: usize, j: usize| (i + 1) % k == j || (j + 1) % k == i;
    let mut deg = vec![0; k];
    let mut chords = Vec::new();
    for &(u, v) in edges {
        let (i, j) = (pos(u), pos(v));
        deg[i] += 1;
        deg[j] += 1;
        if !cycle_edge(i, j) {
            chords.push((i.min(j), i.max(j)));
        }
    }
    if deg.iter().any(|&d| d < 2) {
        return None;
    }
    let cross = |(a, b): (usize, usize), (c, d): (usize, usize)| (a < c && c < b && b < d) || (c < a && a < d && d < b);
    for (x, &e) in chords.iter().enumerate() {
        let partners: Vec<_> = chords.iter().enumerate().filter(|&(y, &f)| y != x && cross(e, f)).collect();
        if partners.len() > 1 {
            return None;
        }
        if let Some(&(_, &f)) = partners.first() {
            let mut ends = [e.0, e.1, f.0, f.1];
            ends.sort_unstable();
            let ok = (cycle_edge(ends[0], ends[1]) && cycle_edge(ends[2], ends[3]))
                || (cycle_edge(ends[1], ends[2]) && cycle_edge(ends[3], ends[0]));
            if !ok {
                return None;
            }
        }
    }
    // chords between the two paths, as (index on p1, index on p2)
    let l1 = p1.len();
    let between: Vec<(usize, usize)> = chords
        .iter()
        .filter(|&&(i, j)| (i < l1) != (j < l1))
        .map(|&(i, j)| (i, k - 1 - j))
        .filter(|&(i, j)| (i, j) != (0, 0) && (i, j) != (p1.len() - 1, p2.len() - 1))
        .collect();
    if chords.len() != between.len() + chords.iter().filter(|&&(i, j)| (i, j) == (0, k - 1) || (i, j) == (l1 - 1, l1)).count() {
        return None;
    }
    let mut best = 0;
    for mask in 0u32..(1 << between.len()) {
        let pick: Vec<_> = (0..between.len()).filter(|&b| mask >> b & 1 == 1).map(|b| between[b]).collect();
        let ok = pick.iter().enumerate().all(|(x, &(i, j))| {
            pick[x + 1..].iter().all(|&(a, b)| (i < a && j < b) || (a < i && b < j))
        });
        if ok {
            best = best.max(pick.len());
        }
    }
    Some(best)
}

fn capture_exists(g: &Graph, p: &[VertexId], q: &[VertexId], m: usize) -> bool {
    for i1 in 0..p.len() {
        for j1 in i1..p.len() {
            for i2 in 0..q.len() {
                for j2 in i2..q.len() {
                    let (ps, qs) = (&p[i1..=j1], &q[i2..=j2]);
                    let inside = |w: VertexId| ps.contains(&w) || qs.contains(&w);
                    let inner = |s: &[VertexId]| if s.len() > 2 { s[1..s.len() - 1].to_vec() } else { Vec::new() };
                    if !inner(ps).iter().chain(inner(qs).iter()).all(|&v| g.neighbors(v).iter().all(|&w| inside(w))) {
                        continue;
                    }
                    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
                    for s in [ps, qs] {
                        for w in s.windows(2) {
                            edges.push((w[0], w[1]));
                        }
                    }
                    for &u in ps {
                        for &v in qs {
                            if g.has_edge(u, v) {
                                edges.push((u, v));
                            }
                        }
                    }
                    if ps.len() == 1 || qs.len() == 1 {
                        let (c, rim) = if ps.len() == 1 { (ps[0], qs) } else { (qs[0], ps) };
                        if rim.len() < 3 || !g.has_edge(c, rim[0]) || !g.has_edge(c, rim[rim.len() - 1]) {
                            continue;
                        }
                        let len = rim[1..rim.len() - 1].iter().filter(|&&v| g.has_edge(c, v)).count();
                        let mut vs: Vec<VertexId> = rim.to_vec();
                        vs.push(c);
                        vs.sort_unstable();
                        let local: Vec<_> = edges
                            .iter()
                            .map(|&(u, v)| (vs.binary_search(&u).unwrap(), vs.binary_search(&v).unwrap()))
                            .collect();
                        let h = Graph::from_edges(vs.len(), &local).unwrap();
                        if len >= m.max(1) && recognize_type_one(&h).unwrap().is_some() {
                            return true;
                        }
                        continue;
                    }
                    let mut rq = qs.to_vec();
                    for _ in 0..2 {
                        if strip_oracle(&edges, ps, &rq).is_some_and(|l| l >= m) {
                            return true;
                        }
                        rq.reverse();
                    }
                }
            }
        }
    }
    false
}

#[test]
fn capture_agrees_with_subpath_pair_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut hits = 0;
    for _ in 0..150 {
        let (a, b) = (rng.gen_range(2..7), rng.gen_range(1..7));
        let mut e: Vec<(usize, usize)> = Vec::new();
        e.extend((0..a - 1).map(|i| (i, i + 1)));
        e.extend((a..a + b - 1).map(|i| (i, i + 1)));
        for i in 0..a {
            for j in 0..b {
                let near = (i as f64 / a as f64 - j as f64 / b as f64).abs() < 0.25;
                if rng.gen_bool(if near { 0.6 } else { 0.05 }) {
                    e.push((i, a + j));
                }
            }
        }
        let g = Graph::from_edges(a + b, &e).unwrap();
        let p: Vec<VertexId> = (0..a).collect();
        let q: Vec<VertexId> = (a..a + b).collect();
        for m in 1..=4 {
            let got = capture_between_paths(&g, &PathRef::new(p.clone()), &PathRef::new(q.clone()), m, &mut Budget::unlimited()).unwrap();
            let want = capture_exists(&g, &p, &q, m);
            assert_eq!(got.is_some(), want, "edges {e:?} m {m}");
            hits += usize::from(want);
        }
    }
    assert!(hits > 50);
}

/// Longest path of `G - H` through vertices of degree two there, by DFS.
fn longest_degree2_path(g: &Graph, in_h: &[bool]) -> usize {
    let n = g.n();
    let two: Vec<bool> = (0..n).map(|v| !in_h[v] && g.neighbors(v).iter().filter(|&&w| !in_h[w]).count() == 2).collect();
    fn dfs(g: &Graph, two: &[bool], path: &mut Vec<VertexId>, best: &mut usize) {
        *best = (*best).max(path.len() - 1);
        let u = *path.last().unwrap();
        for &w in g.neighbors(u) {
            if two[w] && !path.contains(&w) {
                path.push(w);
                dfs(g, two, path, best);
                path.pop();
            }
        }
    }
    let mut best = 0;
    let mut any = false;
    for v in 0..n {
        if two[v] {
            any = true;
            dfs(g, &two, &mut vec![v], &mut best);
        }
    }
    if any { best } else { usize::MAX }
}

#[test]
fn degree2_path_agrees_with_path_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for seed in 0..40 {
        let g = random_augmentation(6, seed).unwrap().augment().unwrap();
        for _ in 0..5 {
            // H: a BFS ball around a random vertex, kept if G - H is connected
            let s = rng.gen_range(0..g.n());
            let d = g.distances(s);
            let r = rng.gen_range(0..3);
            let h: Vec<VertexId> = (0..g.n()).filter(|&v| d[v] <= r).collect();
            let in_h: Vec<bool> = (0..g.n()).map(|v| d[v] <= r).collect();
            let rest: Vec<VertexId> = (0..g.n()).filter(|&v| !in_h[v]).collect();
            if rest.is_empty() || !g.induced(&rest).0.is_connected() {
                continue;
            }
            let best = longest_degree2_path(&g, &in_h);
            for m in 1..=3 {
                let got = degree2_path_near(&g, &h, m).unwrap();
                match got {
                    Some(p) => {
                        assert_eq!(p.length(), best);
                        assert!(p.length() >= 2 * m);
                    }
                    None => assert!(best == usize::MAX || best < 2 * m),
                }
            }
        }
    }
}

#[test]
fn long_nonseparating_paths_hold_up() {
    for seed in 0..40 {
        let g = random_augmentation(6, seed).unwrap().augment().unwrap();
        for m in [1, 3, 5] {
            if let Some(p) = long_nonseparating_path(&g, m, &mut Budget::new(2_000_000)).unwrap() {
                assert!(p.length() >= m && p.is_induced_in(&g));
                let mut removed = vec![false; g.n()];
                for &v in &p.vertices {
                    removed[v] = true;
                }
                assert!(g.components_avoiding(&removed).len() <= 1);
            }
        }
    }
}

/// Observed maximum degree over random 4-connected K_{2,4}-free graphs on
/// at most ten vertices. Empirical, not a bound from the theory.
const OBSERVED_MAX_DEGREE_4CONN_K24_FREE: usize = 4;

#[test]
fn four_connected_k24_free_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut seen = 0;
    let mut top = 0;
    for _ in 0..3000 {
        let n = rng.gen_range(5..=10);
        let p = rng.gen_range(0.5..0.95);
        let g = random_graph(&mut rng, n, p);
        if !is_k_connected(&g, 4) || has_k2n_minor(&g, 4, &mut Budget::unlimited()).unwrap().is_some() {
            continue;
        }
        seen += 1;
        top = top.max(g.max_degree());
    }
    assert!(seen > 0);
    assert!(top <= OBSERVED_MAX_DEGREE_4CONN_K24_FREE);
}
