//! `K_{2,n}` and `K_{1,n}` minor search with checkable witnesses, and a
//! brute-force minor oracle for small hosts.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{self, bit, connected_supersets, full, BitGraph, Mask, Step};
use crate::budget::Budget;
use crate::error::{bad_param, Error, Result};
use crate::graph::{Graph, VertexId};

/// Two disjoint connected hub sets and `n` leaves, each leaf adjacent to
/// both hubs. This is a `K_{2,n}` minor: contract each hub.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct K2nWitness {
    pub hub1: Vec<VertexId>,
    pub hub2: Vec<VertexId>,
    pub leaves: Vec<VertexId>,
}

impl K2nWitness {
    pub fn n(&self) -> usize {
        self.leaves.len()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WitnessFault {
    UnknownVertex,
    EmptyHub,
    HubsOverlap,
    HubDisconnected,
    DuplicateLeaf,
    LeafInHub,
    LeafMissesHub,
}

pub fn check_k2n_witness(g: &Graph, w: &K2nWitness) -> core::result::Result<(), WitnessFault> {
    let all = w.hub1.iter().chain(&w.hub2).chain(&w.leaves);
    if all.clone().any(|&v| v >= g.n()) {
        return Err(WitnessFault::UnknownVertex);
    }
    if w.hub1.is_empty() || w.hub2.is_empty() {
        return Err(WitnessFault::EmptyHub);
    }
    let mut in1 = vec![false; g.n()];
    let mut in2 = vec![false; g.n()];
    for &v in &w.hub1 {
        in1[v] = true;
    }
    for &v in &w.hub2 {
        if in1[v] {
            return Err(WitnessFault::HubsOverlap);
        }
        in2[v] = true;
    }
    for (hub, inh) in [(&w.hub1, &in1), (&w.hub2, &in2)] {
        let comps = g.components_avoiding(&inh.iter().map(|&b| !b).collect::<Vec<_>>());
        if comps.len() != 1 || comps[0].len() != hub.iter().collect::<BTreeSet<_>>().len() {
            return Err(WitnessFault::HubDisconnected);
        }
    }
    let mut seen = BTreeSet::new();
    for &l in &w.leaves {
        if !seen.insert(l) {
            return Err(WitnessFault::DuplicateLeaf);
        }
        if in1[l] || in2[l] {
            return Err(WitnessFault::LeafInHub);
        }
        let nb = g.neighbors(l);
        if !nb.iter().any(|&x| in1[x]) || !nb.iter().any(|&x| in2[x]) {
            return Err(WitnessFault::LeafMissesHub);
        }
    }
    Ok(())
}

pub fn verify_k2n_witness(g: &Graph, w: &K2nWitness) -> bool {
    check_k2n_witness(g, w).is_ok()
}

/// Can `s` be the leaf set of a `K_{2,|s|}` model? Returns the hubs.
fn leaf_set_hubs(bg: &BitGraph, s: Mask, budget: &mut Budget) -> Result<Option<(Mask, Mask)>> {
    let rest = full(bg.n) & !s;
    let touches_all = |x: Mask| bits::iter(s).all(|v| bg.adj[v] & x != 0);
    let comps: Vec<Mask> = bg.components(rest).into_iter().filter(|&c| touches_all(c)).collect();
    if comps.len() >= 2 {
        return Ok(Some((comps[0], comps[1])));
    }
    let Some(&c) = comps.first() else { return Ok(None) };
    let root = c & c.wrapping_neg();
    let local: Vec<Mask> = bits::iter(s).map(|v| bg.adj[v] & c).collect();
    let mut found = None;
    connected_supersets(bg, root, c, &mut |h1: Mask| -> Result<Step> {
        budget.tick()?;
        if local.iter().any(|&nb| nb & !h1 == 0) {
            return Ok(Step::Prune);
        }
        if local.iter().all(|&nb| nb & h1 != 0) {
            for h2 in bg.components(c & !h1) {
                if local.iter().all(|&nb| nb & h2 != 0) {
                    found = Some((h1, h2));
                    return Ok(Step::Stop);
                }
            }
        }
        Ok(Step::Descend)
    })?;
    Ok(found)
}

fn witness(s: Mask, (h1, h2): (Mask, Mask)) -> K2nWitness {
    K2nWitness { hub1: bits::to_vec(h1), hub2: bits::to_vec(h2), leaves: bits::to_vec(s) }
}

/// Level-wise search over leaf sets. Good leaf sets are closed under taking
/// subsets, so level `k+1` candidates are joins of good `k`-sets all of
/// whose `k`-subsets are good. Calls `level(k, first_good)` after each level
/// and stops when it returns false or a level is empty.
fn search_levels(
    g: &Graph,
    budget: &mut Budget,
    mut level_done: impl FnMut(usize, Option<K2nWitness>) -> bool,
) -> Result<()> {
    let bg = BitGraph::new(g)?;
    let mut good: Vec<Vec<VertexId>> = Vec::new();
    for v in 0..g.n() {
        budget.tick()?;
        if g.degree(v) >= 2 {
            good.push(vec![v]);
        }
    }
    let mut first = good.first().map(|s| {
        let nb = g.neighbors(s[0]);
        K2nWitness { hub1: vec![nb[0]], hub2: vec![nb[1]], leaves: s.clone() }
    });
    let mut k = 1;
    loop {
        if !level_done(k, first.take()) || good.is_empty() {
            return Ok(());
        }
        let known: BTreeSet<Mask> = good.iter().map(|s| bits::from_slice(s)).collect();
        let mut next = Vec::new();
        let mut i = 0;
        while i < good.len() {
            let mut j = i;
            while j < good.len() && good[j][..k - 1] == good[i][..k - 1] {
                j += 1;
            }
            for a in i..j {
                for b in a + 1..j {
                    let mut cand = good[a].clone();
                    cand.push(good[b][k - 1]);
                    let m = bits::from_slice(&cand);
                    if !cand.iter().all(|&v| known.contains(&(m & !bit(v)))) {
                        continue;
                    }
                    if let Some(h) = leaf_set_hubs(&bg, m, budget)? {
                        if first.is_none() {
                            first = Some(witness(m, h));
                        }
                        next.push(cand);
                    }
                }
            }
            i = j;
        }
        good = next;
        k += 1;
    }
}

/// A `K_{2,n}` witness if `g` has a `K_{2,n}` minor. `K_{2,1}` is taken to
/// be the path on three vertices. The witness has the lexicographically
/// least leaf set.
pub fn has_k2n_minor(g: &Graph, n: usize, budget: &mut Budget) -> Result<Option<K2nWitness>> {
    if n == 0 {
        return bad_param("n must be at least 1");
    }
    if g.n() < n + 2 {
        return Ok(None);
    }
    let mut out = None;
    search_levels(g, budget, |k, w| {
        if k == n {
            out = w;
            false
        } else {
            w.is_some()
        }
    })?;
    Ok(out)
}

/// The largest `p` with a `K_{2,p}` minor, with a witness (0 and none when
/// there is not even a `K_{2,1}`).
pub fn max_k2(g: &Graph, budget: &mut Budget) -> Result<(usize, Option<K2nWitness>)> {
    let mut best = (0, None);
    search_levels(g, budget, |k, w| match w {
        Some(w) => {
            best = (k, Some(w));
            true
        }
        None => false,
    })?;
    Ok(best)
}

/// A tree subgraph given by its edges, with its leaves listed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TreeWitness {
    pub edges: Vec<(VertexId, VertexId)>,
    pub leaves: Vec<VertexId>,
}

/// A tree with at least `n` leaves whose non-leaf vertices induce a
/// connected subgraph, i.e. a `K_{1,n}` minor model. `n = 0` is rejected.
pub fn has_k1n_minor(g: &Graph, n: usize, budget: &mut Budget) -> Result<Option<TreeWitness>> {
    if n == 0 {
        return bad_param("n must be at least 1");
    }
    let bg = BitGraph::new(g)?;
    for root in 0..g.n() {
        let within = full(g.n()) & !bits::full(root);
        let mut found = None;
        connected_supersets(&bg, bit(root), within, &mut |c: Mask| -> Result<Step> {
            budget.tick()?;
            let nb = bg.nbr_union(c) & !c;
            if nb.count_ones() as usize >= n {
                found = Some(c);
                Ok(Step::Stop)
            } else {
                Ok(Step::Descend)
            }
        })?;
        if let Some(c) = found {
            return Ok(Some(tree_from_core(g, &bg, c, n)));
        }
    }
    Ok(None)
}

fn tree_from_core(g: &Graph, bg: &BitGraph, core: Mask, n: usize) -> TreeWitness {
    let mut edges = Vec::new();
    let root = bits::lowest(core);
    let mut seen = bit(root);
    let mut queue = vec![root];
    while let Some(v) = queue.pop() {
        for &w in g.neighbors(v) {
            if core & bit(w) != 0 && seen & bit(w) == 0 {
                seen |= bit(w);
                edges.push(crate::graph::edge_key(v, w));
                queue.push(w);
            }
        }
    }
    let outside = bg.nbr_union(core) & !core;
    let leaves: Vec<VertexId> = bits::iter(outside).take(n).collect();
    for &l in &leaves {
        let attach = g.neighbors(l).iter().copied().find(|&u| core & bit(u) != 0).unwrap();
        edges.push(crate::graph::edge_key(attach, l));
    }
    edges.sort_unstable();
    TreeWitness { edges, leaves }
}

/// Pattern vertex `i` maps to the connected host set `branch_sets[i]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MinorModel {
    pub branch_sets: Vec<Vec<VertexId>>,
}

pub fn verify_minor_model(g: &Graph, h: &Graph, m: &MinorModel) -> bool {
    if m.branch_sets.len() != h.n() {
        return false;
    }
    let mut owner = vec![usize::MAX; g.n()];
    for (i, set) in m.branch_sets.iter().enumerate() {
        if set.is_empty() {
            return false;
        }
        for &v in set {
            if v >= g.n() || owner[v] != usize::MAX {
                return false;
            }
            owner[v] = i;
        }
        let (sub, _) = g.induced(set);
        if !sub.is_connected() {
            return false;
        }
    }
    h.edges().into_iter().all(|(a, b)| {
        m.branch_sets[a].iter().any(|&u| g.neighbors(u).iter().any(|&w| owner[w] == b))
    })
}

pub const BRUTE_FORCE_LIMIT: usize = 10;

/// Exhaustive minor test: tries every assignment of disjoint connected
/// branch sets. Hosts above `limit` vertices are refused.
pub fn brute_force_minor(g: &Graph, h: &Graph, limit: usize) -> Result<Option<MinorModel>> {
    if g.n() > limit {
        return Err(Error::SizeLimit { got: g.n(), limit });
    }
    if h.n() == 0 {
        return Ok(Some(MinorModel { branch_sets: Vec::new() }));
    }
    if h.n() > g.n() || h.m() > g.m() {
        return Ok(None);
    }
    let bg = BitGraph::new(g)?;
    let mut connected = Vec::new();
    for root in 0..g.n() {
        let within = full(g.n()) & !bits::full(root);
        connected_supersets::<()>(&bg, bit(root), within, &mut |c| {
            connected.push(c);
            Ok(Step::Descend)
        })
        .unwrap();
    }
    connected.sort_by_key(|c| (c.count_ones(), *c));

    // pattern order: BFS from each component's least vertex
    let mut order = Vec::new();
    let mut placed = vec![false; h.n()];
    for s in 0..h.n() {
        if placed[s] {
            continue;
        }
        placed[s] = true;
        let start = order.len();
        order.push(s);
        while start < order.len() {
            let mut grew = false;
            for idx in start..order.len() {
                for &w in h.neighbors(order[idx]) {
                    if !placed[w] {
                        placed[w] = true;
                        order.push(w);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
    }
    // twins: identical neighbourhoods apart from each other
    let twin_of: Vec<Option<usize>> = (0..h.n())
        .map(|p| {
            let pos = order.iter().position(|&x| x == p).unwrap();
            order[..pos].iter().rev().copied().find(|&q| {
                let a: Vec<_> = h.neighbors(p).iter().filter(|&&x| x != q).collect();
                let b: Vec<_> = h.neighbors(q).iter().filter(|&&x| x != p).collect();
                a == b
            })
        })
        .collect();

    let mut assign: Vec<Mask> = vec![0; h.n()];
    fn rec(
        i: usize,
        used: Mask,
        g_n: usize,
        bg: &BitGraph,
        h: &Graph,
        order: &[usize],
        twin_of: &[Option<usize>],
        connected: &[Mask],
        assign: &mut Vec<Mask>,
    ) -> bool {
        if i == order.len() {
            return true;
        }
        if (g_n - used.count_ones() as usize) < order.len() - i {
            return false;
        }
        let p = order[i];
        let need: Vec<Mask> = h.neighbors(p).iter().map(|&q| assign[q]).filter(|&m| m != 0).collect();
        let floor = twin_of[p].map(|q| bits::lowest(assign[q]));
        for &c in connected {
            if c & used != 0 {
                continue;
            }
            if let Some(f) = floor {
                if bits::lowest(c) <= f {
                    continue;
                }
            }
            let reach = bg.nbr_union(c);
            if need.iter().any(|&m| reach & m == 0) {
                continue;
            }
            assign[p] = c;
            if rec(i + 1, used | c, g_n, bg, h, order, twin_of, connected, assign) {
                return true;
            }
            assign[p] = 0;
        }
        false
    }
    if rec(0, 0, g.n(), &bg, h, &order, &twin_of, &connected, &mut assign) {
        Ok(Some(MinorModel { branch_sets: assign.iter().map(|&m| bits::to_vec(m)).collect() }))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard::*;

    fn k2(g: &Graph, n: usize) -> Option<K2nWitness> {
        has_k2n_minor(g, n, &mut Budget::unlimited()).unwrap()
    }

    #[test]
    fn witness_checks() {
        let g = complete_bipartite(2, 3);
        let w = K2nWitness { hub1: vec![0], hub2: vec![1], leaves: vec![2, 3, 4] };
        assert!(verify_k2n_witness(&g, &w));
        let c4 = cycle(4);
        assert!(verify_k2n_witness(&c4, &K2nWitness { hub1: vec![0], hub2: vec![2], leaves: vec![1, 3] }));
        let dup = K2nWitness { hub1: vec![0], hub2: vec![2], leaves: vec![1, 1] };
        assert_eq!(check_k2n_witness(&c4, &dup), Err(WitnessFault::DuplicateLeaf));
        let split = K2nWitness { hub1: vec![0, 2], hub2: vec![1], leaves: vec![3] };
        assert_eq!(check_k2n_witness(&c4, &split), Err(WitnessFault::HubDisconnected));
    }

    #[test]
    fn k2n_examples() {
        let k23 = complete_bipartite(2, 3);
        let w = k2(&k23, 3).unwrap();
        assert!(verify_k2n_witness(&k23, &w));
        assert!(k2(&k23, 4).is_none());
        for k in 4..10 {
            let w = k2(&cycle(k), 2).unwrap();
            assert!(verify_k2n_witness(&cycle(k), &w));
            assert!(k2(&cycle(k), 3).is_none());
        }
        assert!(k2(&cycle(3), 2).is_none());
        let mut b = Budget::unlimited();
        assert_eq!(max_k2(&complete_bipartite(2, 3), &mut b).unwrap().0, 3);
        assert_eq!(max_k2(&complete(4), &mut b).unwrap().0, 2);
        assert_eq!(max_k2(&path(3), &mut b).unwrap().0, 1);
        assert_eq!(max_k2(&path(2), &mut b).unwrap().0, 0);
        assert_eq!(max_k2(&complete_bipartite(2, 7), &mut b).unwrap().0, 7);
    }

    #[test]
    fn work_limit_is_distinct() {
        let g = petersen();
        let r = has_k2n_minor(&g, 4, &mut Budget::new(5));
        assert_eq!(r, Err(Error::WorkLimit));
    }

    #[test]
    fn k1n_examples() {
        let mut b = Budget::unlimited();
        let t = has_k1n_minor(&star(4), 4, &mut b).unwrap().unwrap();
        assert_eq!(t.leaves.len(), 4);
        assert!(has_k1n_minor(&cycle(9), 3, &mut b).unwrap().is_none());
        assert!(has_k1n_minor(&complete(4), 3, &mut b).unwrap().is_some());
        assert!(has_k1n_minor(&path(6), 3, &mut b).unwrap().is_none());
    }

    #[test]
    fn brute_force_examples() {
        let m = brute_force_minor(&complete(4), &cycle(4), 10).unwrap().unwrap();
        assert!(verify_minor_model(&complete(4), &cycle(4), &m));
        assert!(brute_force_minor(&cycle(5), &complete(4), 10).unwrap().is_none());
        assert!(brute_force_minor(&complete(11), &complete(3), 10).is_err());
        // K33\e contains K23: frozen from this oracle
        let m = brute_force_minor(&k33_minus_e(), &complete_bipartite(2, 3), 10).unwrap();
        assert!(m.is_some());
        assert!(brute_force_minor(&petersen(), &complete(5), 10).unwrap().is_some());
        assert!(brute_force_minor(&complete_bipartite(3, 3), &complete(5), 10).unwrap().is_none());
    }
}
