//! Building a `K_{2,n}` witness from a tree path through `n` pieces of C2.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::classify::{in_class_c, CTier};
use super::tree::{TreeStructure, TreeSum};
use crate::error::{invalid, precondition, Result};
use crate::graph::{Graph, VertexId};
use crate::minor::{check_k2n_witness, K2nWitness};

fn c2_nodes(theta: &TreeStructure) -> Vec<bool> {
    theta.pieces.iter().map(|p| in_class_c(&p.graph).tier(&p.graph) == Some(CTier::Two)).collect()
}

/// The most C2 pieces on a single path of the tree.
pub fn c2_count_on_paths(theta: &TreeStructure) -> usize {
    let w = c2_nodes(theta);
    let k = theta.pieces.len();
    // iterative DFS order from node 0, then a bottom-up pass
    let mut order = vec![0];
    let mut parent = vec![usize::MAX; k];
    parent[0] = 0;
    let mut i = 0;
    while i < order.len() {
        let t = order[i];
        i += 1;
        for (s, _) in theta.neighbors(t) {
            if parent[s] == usize::MAX {
                parent[s] = t;
                order.push(s);
            }
        }
    }
    let mut down = vec![0usize; k];
    let mut best = 0;
    for &t in order.iter().rev() {
        let mut top = [0usize; 2];
        for (s, _) in theta.neighbors(t) {
            if parent[s] == t && s != t {
                let d = down[s];
                if d > top[0] {
                    top = [d, top[0]];
                } else if d > top[1] {
                    top[1] = d;
                }
            }
        }
        let here = usize::from(w[t]);
        down[t] = here + top[0];
        best = best.max(here + top[0] + top[1]);
    }
    best
}

/// Simple paths from `from` to `to` whose second vertex is `via`, inside
/// `allowed`, in DFS order.
fn paths_via(g: &Graph, from: VertexId, via: VertexId, to: VertexId, allowed: &[bool], out: &mut Vec<Vec<VertexId>>, cap: usize) {
    fn dfs(g: &Graph, path: &mut Vec<VertexId>, on: &mut Vec<bool>, to: VertexId, allowed: &[bool], out: &mut Vec<Vec<VertexId>>, cap: usize) {
        if out.len() >= cap {
            return;
        }
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if w == to {
                let mut p = path.clone();
                p.push(to);
                out.push(p);
                continue;
            }
            if on[w] || !allowed[w] {
                continue;
            }
            on[w] = true;
            path.push(w);
            dfs(g, path, on, to, allowed, out, cap);
            path.pop();
            on[w] = false;
        }
    }
    if !g.has_edge(from, via) || !allowed[via] {
        return;
    }
    let mut on = vec![false; g.n()];
    on[from] = true;
    on[via] = true;
    dfs(g, &mut vec![from, via], &mut on, to, allowed, out, cap);
}

const PATH_CAP: usize = 4000;

/// A path `a = r0, r1, ..., rk = b` with `k >= 2` and interior inside
/// `allowed`. Prefers an `r1` not in `avoid_first`.
fn detour(g: &Graph, a: VertexId, b: VertexId, allowed: &[bool], avoid_first: &[bool]) -> Option<Vec<VertexId>> {
    let mut fallback = None;
    for &r1 in g.neighbors(a) {
        if r1 == b || !allowed[r1] {
            continue;
        }
        let mut ok = allowed.to_vec();
        ok[a] = false;
        if let Some(rest) = g.shortest_path(r1, b, &ok) {
            let mut p = vec![a];
            p.extend(rest);
            if !avoid_first[r1] {
                return Some(p);
            }
            fallback.get_or_insert(p);
        }
    }
    fallback
}

/// One piece's share of the witness, in the piece's local ids.
#[derive(Default)]
struct Share {
    hub1: Vec<VertexId>,
    hub2: Vec<VertexId>,
    leaf: Option<VertexId>,
    /// Neighbour of the outgoing label on the hub-1 strand.
    exit1: Option<VertexId>,
}

/// Chains the pieces of a tree path with exactly `n` C2 pieces (both ends
/// C2) into a witness in the 2-sum of the whole structure.
pub fn c2_paths_give_minor(theta: &TreeStructure, n: usize) -> Result<K2nWitness> {
    theta.validate()?;
    if n == 0 || c2_count_on_paths(theta) < n {
        return precondition("no tree path carries n pieces of C2");
    }
    let sum = theta.tree_sum()?;
    let g = &sum.labeled.graph;
    if n == 1 {
        let v = (0..g.n()).find(|&v| g.degree(v) >= 2).unwrap();
        let nb = g.neighbors(v);
        return Ok(K2nWitness { hub1: vec![nb[0]], hub2: vec![nb[1]], leaves: vec![v] });
    }
    let c2 = c2_nodes(theta);
    let k = theta.pieces.len();
    let mut path = None;
    'outer: for a in 0..k {
        for b in a + 1..k {
            if c2[a] && c2[b] {
                let p = theta.node_path(a, b);
                if p.iter().filter(|&&t| c2[t]).count() == n {
                    path = Some(p);
                    break 'outer;
                }
            }
        }
    }
    let path = path.expect("a path exists when the count is large enough");
    let w = build(theta, &sum, &path, &c2)?;
    match check_k2n_witness(g, &w) {
        Ok(()) => Ok(w),
        Err(_) => invalid("chained witness failed verification"),
    }
}

fn build(theta: &TreeStructure, sum: &TreeSum, path: &[usize], c2: &[bool]) -> Result<K2nWitness> {
    let last = path.len() - 1;
    // (edge index, label on this side, label on the other side)
    let link = |a: usize, b: usize| {
        theta
            .neighbors(a)
            .into_iter()
            .find(|&(s, _)| s == b)
            .map(|(_, i)| {
                let e = theta.edges[i];
                if e.s == a {
                    (i, e.ls, e.lt)
                } else {
                    (i, e.lt, e.ls)
                }
            })
            .unwrap()
    };
    // partner of vertex `u` of piece `a` across the edge to `b`
    let partner = |a: usize, b: usize, u: VertexId| {
        let (i, _, _) = link(a, b);
        let e = theta.edges[i];
        let pr = theta.pairing(&e);
        if e.s == a {
            pr.iter().find(|p| p.0 == u).map(|p| p.1)
        } else {
            pr.iter().find(|p| p.1 == u).map(|p| p.0)
        }
    };

    let mut shares: Vec<Share> = Vec::new();
    let mut entry1: Option<VertexId> = None;
    for (i, &t) in path.iter().enumerate() {
        let piece = &theta.pieces[t];
        let g = &piece.graph;
        let is_label: Vec<bool> = (0..g.n()).map(|v| piece.is_label(v)).collect();
        let mut share = Share::default();
        if i == 0 || i == last {
            let l = if i == 0 { link(t, path[1]).1 } else { link(t, path[i - 1]).1 };
            let nb = g.neighbors(l);
            let (a, b) = if i == 0 { (nb[0], nb[1]) } else {
                let a = entry1.unwrap();
                (a, if nb[0] == a { nb[1] } else { nb[0] })
            };
            let mut allowed = vec![true; g.n()];
            allowed[l] = false;
            let Some(d) = detour(g, a, b, &allowed, &is_label) else {
                return invalid("end piece has no detour around its label");
            };
            share.hub1.push(a);
            share.leaf = Some(d[1]);
            share.hub2.extend(d[2..].iter().copied());
            share.exit1 = Some(a);
        } else {
            let (_, lin, _) = link(t, path[i - 1]);
            let (_, lout, _) = link(t, path[i + 1]);
            let a = entry1.unwrap();
            let b = g.neighbors(lin).iter().copied().find(|&x| x != a).unwrap();
            let mut allowed = vec![true; g.n()];
            allowed[lin] = false;
            allowed[lout] = false;
            let mut ps = Vec::new();
            paths_via(g, lin, a, lout, &allowed, &mut ps, PATH_CAP);
            let mut chosen: Option<(Vec<VertexId>, Vec<VertexId>, Option<Vec<VertexId>>)> = None;
            let mut fallback = None;
            'search: for p in &ps {
                let mut allow_q = allowed.clone();
                for &v in &p[1..p.len() - 1] {
                    allow_q[v] = false;
                }
                let mut qs = Vec::new();
                paths_via(g, lin, b, lout, &allow_q, &mut qs, PATH_CAP);
                for q in qs {
                    if !c2[t] {
                        chosen = Some((p.clone(), q, None));
                        break 'search;
                    }
                    let mut off = allow_q.clone();
                    for &v in &q[1..q.len() - 1] {
                        off[v] = false;
                    }
                    for &pv in &p[1..p.len() - 1] {
                        for &qv in &q[1..q.len() - 1] {
                            let mut ok = off.clone();
                            ok[qv] = true;
                            if let Some(r) = detour(g, pv, qv, &ok, &is_label) {
                                if !is_label[r[1]] {
                                    chosen = Some((p.clone(), q.clone(), Some(r)));
                                    break 'search;
                                }
                                fallback.get_or_insert((p.clone(), q.clone(), Some(r)));
                            }
                        }
                    }
                }
            }
            let Some((p, q, r)) = chosen.or(fallback) else {
                return invalid("no strand pair through a middle piece");
            };
            share.hub1.extend(p[1..p.len() - 1].iter().copied());
            share.hub2.extend(q[1..q.len() - 1].iter().copied());
            if let Some(r) = r {
                share.leaf = Some(r[1]);
                share.hub2.extend(r[2..r.len() - 1].iter().copied());
            }
            share.exit1 = Some(p[p.len() - 2]);
        }
        if i < last {
            entry1 = partner(t, path[i + 1], share.exit1.unwrap());
        }
        shares.push(share);
    }
    lift(theta, sum, path, &shares)
}

/// Maps piece-local choices into the final graph. Labels glued to edges
/// leaving the path were deleted by the sum; they are replaced by a route
/// through the vertices of the subtree hanging there.
fn lift(theta: &TreeStructure, sum: &TreeSum, path: &[usize], shares: &[Share]) -> Result<K2nWitness> {
    let g = &sum.labeled.graph;
    let on_path: BTreeSet<usize> = path.iter().copied().collect();
    let mut hub1 = BTreeSet::new();
    let mut hub2 = BTreeSet::new();
    let mut leaves = Vec::new();
    let hanging_interior = |t: usize, v: VertexId| -> Option<(Vec<bool>, VertexId, VertexId)> {
        let (other, _) = theta.neighbors(t).into_iter().find(|&(s, i)| {
            let e = theta.edges[i];
            !on_path.contains(&s) && ((e.s == t && e.ls == v) || (e.t == t && e.lt == v))
        })?;
        let mut inside = vec![false; theta.pieces.len()];
        let mut stack = vec![other];
        inside[other] = true;
        while let Some(x) = stack.pop() {
            for (y, _) in theta.neighbors(x) {
                if y != t && !inside[y] {
                    inside[y] = true;
                    stack.push(y);
                }
            }
        }
        let nb = theta.pieces[t].graph.neighbors(v);
        let (u, w) = (sum.maps[t][nb[0]]?, sum.maps[t][nb[1]]?);
        let mut allowed = vec![false; g.n()];
        for (node, m) in sum.maps.iter().enumerate() {
            if inside[node] {
                for x in m.iter().flatten() {
                    allowed[*x] = true;
                }
            }
        }
        allowed[u] = false;
        allowed[w] = false;
        Some((allowed, u, w))
    };
    for (&t, share) in path.iter().zip(shares) {
        for (local, hub) in [(&share.hub1, &mut hub1), (&share.hub2, &mut hub2)] {
            for &v in local {
                match sum.maps[t][v] {
                    Some(f) => {
                        hub.insert(f);
                    }
                    None => {
                        let Some((allowed, u, w)) = hanging_interior(t, v) else {
                            return invalid("deleted vertex is not an off-path label");
                        };
                        let Some(route) = g.shortest_path(u, w, &allowed) else {
                            return invalid("hanging subtree does not reconnect its label");
                        };
                        hub.extend(route[1..route.len() - 1].iter().copied());
                    }
                }
            }
        }
        if let Some(v) = share.leaf {
            match sum.maps[t][v] {
                Some(f) => leaves.push(f),
                None => {
                    let Some((allowed, u, w)) = hanging_interior(t, v) else {
                        return invalid("deleted leaf is not an off-path label");
                    };
                    // u lies on the hub-1 side of the leaf by construction
                    let nb = theta.pieces[t].graph.neighbors(v);
                    let hub1_side = share.hub1.iter().chain(share.exit1.iter()).any(|&x| x == nb[0]);
                    let (a, b) = if hub1_side { (u, w) } else { (w, u) };
                    let Some(route) = detour(g, a, b, &allowed, &vec![false; g.n()]) else {
                        return invalid("hanging subtree too thin to hold a leaf");
                    };
                    leaves.push(route[1]);
                    hub2.extend(route[2..route.len() - 1].iter().copied());
                }
            }
        }
    }
    Ok(K2nWitness { hub1: hub1.into_iter().collect(), hub2: hub2.into_iter().collect(), leaves })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard::*;
    use crate::sum::{LabeledGraph, Orientation, TreeEdge};

    fn edge(s: usize, t: usize, ls: usize, lt: usize) -> TreeEdge {
        TreeEdge { s, t, ls, lt, orientation: Orientation::Parallel }
    }

    #[test]
    fn counts() {
        let single = TreeStructure::single(LabeledGraph::new(cycle(5), vec![]).unwrap());
        assert_eq!(c2_count_on_paths(&single), 0);
        let k23 = |l: Vec<usize>| LabeledGraph::new(complete_bipartite(2, 3), l).unwrap();
        let path3 = TreeStructure {
            pieces: vec![k23(vec![2]), k23(vec![2, 3]), k23(vec![4])],
            edges: vec![edge(0, 1, 2, 2), edge(1, 2, 3, 4)],
        };
        assert_eq!(c2_count_on_paths(&path3), 3);
        let c4 = |l: Vec<usize>| LabeledGraph::new(cycle(4), l).unwrap();
        let star = TreeStructure {
            pieces: vec![k23(vec![2, 3, 4]), c4(vec![0]), c4(vec![0]), c4(vec![0])],
            edges: vec![edge(0, 1, 2, 0), edge(0, 2, 3, 0), edge(0, 3, 4, 0)],
        };
        assert_eq!(c2_count_on_paths(&star), 1);
        for n in 1..=3 {
            let w = c2_paths_give_minor(&path3, n).unwrap();
            let g = path3.tree_sum().unwrap().labeled.graph;
            assert!(crate::minor::verify_k2n_witness(&g, &w));
            assert_eq!(w.leaves.len(), n);
        }
        assert!(c2_paths_give_minor(&star, 2).is_err());
    }

    #[test]
    fn internally_3_connected_chain() {
        // K4 with subdivided edges; opposite subdivided edges would give K33\e
        let end = subdivide_edge(&complete(4), 0, 1, 1).unwrap();
        let mid = subdivide_edges(&complete(4), &[(0, 1), (0, 2)]).unwrap();
        let piece = |g: &Graph, l: Vec<usize>| LabeledGraph::new(g.clone(), l).unwrap();
        let theta = TreeStructure {
            pieces: vec![piece(&end, vec![4]), piece(&mid, vec![4, 5]), piece(&end, vec![4])],
            edges: vec![edge(0, 1, 4, 4), edge(1, 2, 5, 4)],
        };
        assert_eq!(c2_count_on_paths(&theta), 3);
        let w = c2_paths_give_minor(&theta, 3).unwrap();
        let g = theta.tree_sum().unwrap().labeled.graph;
        assert!(crate::minor::verify_k2n_witness(&g, &w));
    }
}
