use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::budget::Budget;
use crate::error::{invalid, precondition, Error, Result};
use crate::graph::{bridges, edge_key, is_k_connected, Graph, PathRef, VertexId};

/// `G` is obtained from a simple 3-connected graph by subdividing edges.
pub fn is_subdivision_of_3connected(g: &Graph) -> bool {
    let n = g.n();
    let mut adj: Vec<BTreeSet<VertexId>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive = vec![true; n];
    loop {
        let Some(w) = (0..n).find(|&v| alive[v] && adj[v].len() == 2) else { break };
        let nb: Vec<VertexId> = adj[w].iter().copied().collect();
        let (u, v) = (nb[0], nb[1]);
        if adj[u].contains(&v) {
            return false;
        }
        adj[u].remove(&w);
        adj[v].remove(&w);
        adj[u].insert(v);
        adj[v].insert(u);
        adj[w].clear();
        alive[w] = false;
    }
    let keep: Vec<VertexId> = (0..n).filter(|&v| alive[v]).collect();
    let pos = |v: VertexId| keep.binary_search(&v).unwrap();
    let mut edges = Vec::new();
    for &u in &keep {
        for &v in &adj[u] {
            if u < v {
                edges.push((pos(u), pos(v)));
            }
        }
    }
    match Graph::from_edges(keep.len(), &edges) {
        Ok(h) => is_k_connected(&h, 3),
        Err(_) => false,
    }
}

/// An induced `x`-`y` path in `g` whose removal leaves `g` connected
/// (removing every vertex counts as connected).
pub fn is_nonseparating_induced_path(g: &Graph, p: &PathRef, x: VertexId, y: VertexId) -> bool {
    if p.vertices.first() != Some(&x) || p.vertices.last() != Some(&y) {
        return false;
    }
    if !p.is_path_in(g) || !p.is_induced_in(g) {
        return false;
    }
    let mut removed = vec![false; g.n()];
    for &v in &p.vertices {
        removed[v] = true;
    }
    g.components_avoiding(&removed).len() <= 1
}

/// An induced `x`-`y` path with connected complement, for `g` a
/// subdivision of a 3-connected graph.
pub fn nonseparating_induced_path(g: &Graph, x: VertexId, y: VertexId, budget: &mut Budget) -> Result<PathRef> {
    Ok(nonseparating_induced_path_traced(g, x, y, budget)?.0)
}

/// Same, also returning the number of improvement rounds.
///
/// Starts from a shortest path and keeps the largest bridge `B0`. A bridge
/// whose span covers an attachment of `B0` (or `x`, `y`) in its interior
/// is used as a detour, which merges that stretch into a larger bridge.
/// When no such bridge is left but others remain, `B0` itself is an
/// `x`-`y` path and is taken instead.
pub fn nonseparating_induced_path_traced(g: &Graph, x: VertexId, y: VertexId, budget: &mut Budget) -> Result<(PathRef, usize)> {
    if x >= g.n() {
        return Err(Error::UnknownVertex(x));
    }
    if y >= g.n() {
        return Err(Error::UnknownVertex(y));
    }
    if x == y {
        return precondition("ends must be distinct");
    }
    if !is_subdivision_of_3connected(g) {
        return precondition("graph must be a subdivision of a 3-connected graph");
    }
    let all = vec![true; g.n()];
    let mut p = g.shortest_path(x, y, &all).unwrap();
    for round in 0..=g.m() + 1 {
        budget.tick()?;
        let pe: Vec<_> = p.windows(2).map(|w| edge_key(w[0], w[1])).collect();
        let bs = bridges(g, &p, &pe)?;
        let nontrivial = bs.iter().filter(|b| !b.trivial).count();
        if nontrivial <= 1 && bs.iter().all(|b| !b.trivial) {
            return Ok((PathRef::new(p), round));
        }
        let size = |i: usize| bs[i].inner().len();
        let b0 = (0..bs.len()).max_by_key(|&i| (size(i), core::cmp::Reverse(i))).unwrap();
        let pos = |v: VertexId| p.iter().position(|&w| w == v).unwrap();
        let mut marks: Vec<usize> = bs[b0].attachments.iter().map(|&v| pos(v)).collect();
        marks.push(0);
        marks.push(p.len() - 1);
        let mut detour = None;
        for (i, b) in bs.iter().enumerate() {
            if i == b0 {
                continue;
            }
            let ps: Vec<usize> = b.attachments.iter().map(|&v| pos(v)).collect();
            let (lo, hi) = (*ps.iter().min().unwrap(), *ps.iter().max().unwrap());
            if marks.iter().any(|&m| lo < m && m < hi) {
                detour = Some((i, lo, hi));
                break;
            }
        }
        p = match detour {
            Some((i, lo, hi)) => {
                let b = &bs[i];
                let q = if b.trivial {
                    vec![p[lo], p[hi]]
                } else {
                    let mut allowed = vec![false; g.n()];
                    for v in b.inner() {
                        allowed[v] = true;
                    }
                    allowed[p[lo]] = true;
                    allowed[p[hi]] = true;
                    g.shortest_path(p[lo], p[hi], &allowed).unwrap()
                };
                let mut np = p[..lo].to_vec();
                np.extend(q);
                np.extend_from_slice(&p[hi + 1..]);
                np
            }
            None => {
                let b = &bs[b0];
                if b.attachments != {
                    let mut e = vec![x, y];
                    e.sort_unstable();
                    e
                } {
                    return invalid("largest bridge is not an x-y path");
                }
                let mut allowed = vec![false; g.n()];
                for v in b.inner() {
                    allowed[v] = true;
                }
                allowed[x] = true;
                allowed[y] = true;
                g.shortest_path(x, y, &allowed).unwrap()
            }
        };
    }
    invalid("path improvement did not terminate")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard::{complete, prism, wheel};

    #[test]
    fn k4_gives_the_edge() {
        let g = complete(4);
        let p = nonseparating_induced_path(&g, 0, 3, &mut Budget::unlimited()).unwrap();
        assert_eq!(p.vertices, vec![0, 3]);
    }

    #[test]
    fn wheel_rim_neighbours() {
        let g = wheel(5).unwrap();
        let p = nonseparating_induced_path(&g, 1, 2, &mut Budget::unlimited()).unwrap();
        assert_eq!(p.vertices, vec![1, 2]);
        assert!(is_nonseparating_induced_path(&g, &p, 1, 2));
    }

    #[test]
    fn all_pairs_of_the_prism() {
        let g = prism();
        for x in 0..6 {
            for y in 0..6 {
                if x != y {
                    let p = nonseparating_induced_path(&g, x, y, &mut Budget::unlimited()).unwrap();
                    assert!(is_nonseparating_induced_path(&g, &p, x, y));
                }
            }
        }
    }

    #[test]
    fn subdivision_recognition() {
        assert!(is_subdivision_of_3connected(&complete(4)));
        let s = crate::standard::subdivide_edge(&complete(4), 0, 1, 3).unwrap();
        assert!(is_subdivision_of_3connected(&s));
        assert!(!is_subdivision_of_3connected(&crate::standard::cycle(5)));
    }
}
