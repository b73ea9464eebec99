//! Named small graphs and simple constructions.

use alloc::vec::Vec;

use crate::error::{bad_param, Result};
use crate::graph::{Graph, VertexId};

pub fn path(n: usize) -> Graph {
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges_unchecked(n, &e)
}

/// `C_n` on `0..n` in cyclic order. Panics for `n < 3`; see [`try_cycle`].
pub fn cycle(n: usize) -> Graph {
    try_cycle(n).expect("cycle needs at least 3 vertices")
}

pub fn try_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return bad_param("cycle needs at least 3 vertices");
    }
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::from_edges_unchecked(n, &e))
}

pub fn complete(n: usize) -> Graph {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            e.push((u, v));
        }
    }
    Graph::from_edges_unchecked(n, &e)
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut e = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            e.push((u, v));
        }
    }
    Graph::from_edges_unchecked(a + b, &e)
}

pub fn star(leaves: usize) -> Graph {
    complete_bipartite(1, leaves)
}

/// `K_4` minus the edge `23`; vertices 2 and 3 have degree two.
pub fn k4_minus_e() -> Graph {
    complete(4).without_edge(2, 3).unwrap()
}

/// `K_{3,3}` minus the edge `25`; vertices 2 and 5 have degree two.
pub fn k33_minus_e() -> Graph {
    complete_bipartite(3, 3).without_edge(2, 5).unwrap()
}

/// Hub `0`, rim `1..=k` in cyclic order.
pub fn wheel(k: usize) -> Result<Graph> {
    if k < 3 {
        return bad_param("wheel needs at least 3 rim vertices");
    }
    let mut e: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    e.extend((1..=k).map(|i| (i, i % k + 1)));
    Ok(Graph::from_edges_unchecked(k + 1, &e))
}

pub fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges_unchecked(10, &e)
}

/// Triangular prism: triangles `012`, `345` and rungs `i, i+3`.
pub fn prism() -> Graph {
    Graph::from_edges_unchecked(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
}

/// Two paths `0..k` and `k..2k` joined by rungs `i, k+i`.
pub fn ladder(k: usize) -> Graph {
    let mut e = Vec::new();
    for i in 0..k {
        e.push((i, k + i));
        if i + 1 < k {
            e.push((i, i + 1));
            e.push((k + i, k + i + 1));
        }
    }
    Graph::from_edges_unchecked(2 * k, &e)
}

/// Replaces edge `uv` by a path with `times` new interior vertices,
/// numbered from `n` upward in order from `u` to `v`.
pub fn subdivide_edge(g: &Graph, u: VertexId, v: VertexId, times: usize) -> Result<Graph> {
    let h = g.without_edge(u, v)?;
    let n = g.n();
    let mut e = h.edges();
    let mut prev = u;
    for i in 0..times {
        e.push((prev, n + i));
        prev = n + i;
    }
    e.push((prev, v));
    Graph::from_edges(n + times, &e)
}

/// Subdivides each listed edge once.
pub fn subdivide_edges(g: &Graph, edges: &[(VertexId, VertexId)]) -> Result<Graph> {
    let mut h = g.clone();
    for &(u, v) in edges {
        h = subdivide_edge(&h, u, v, 1)?;
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let k = k33_minus_e();
        assert_eq!((k.n(), k.m()), (6, 8));
        assert_eq!(k.degree_sequence(), alloc::vec![2, 2, 3, 3, 3, 3]);
        assert_eq!((cycle(6).n(), cycle(6).m()), (6, 6));
        let w = wheel(6).unwrap();
        assert_eq!((w.n(), w.m()), (7, 12));
        assert_eq!(k4_minus_e().degree_sequence(), alloc::vec![2, 2, 3, 3]);
        assert_eq!(petersen().m(), 15);
        assert!(try_cycle(2).is_err());
        assert!(wheel(2).is_err());
        let s = subdivide_edge(&complete(4), 0, 1, 2).unwrap();
        assert_eq!((s.n(), s.m()), (6, 8));
        assert!(s.has_edge(0, 4) && s.has_edge(4, 5) && s.has_edge(5, 1));
    }
}
