use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub type VertexId = usize;

/// A simple undirected graph on the vertex set `0..n`.
///
/// Values are immutable: every operation that changes the graph returns a
/// new one, together with a table mapping old ids to new ids.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
}

#[inline]
pub fn edge_key(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list. Repeated edges are merged; loops and
    /// out-of-range endpoints are errors.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::UnknownVertex(u));
            }
            if v >= n {
                return Err(Error::UnknownVertex(v));
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub(crate) fn from_edges_unchecked(n: usize, edges: &[(VertexId, VertexId)]) -> Self {
        Self::from_edges(n, edges).expect("internal edge list is valid")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v < self.n()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.m());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_set(&self) -> BTreeSet<(VertexId, VertexId)> {
        self.edges().into_iter().collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn with_edge(&self, u: VertexId, v: VertexId) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut e = self.edges();
        e.push((u, v));
        Graph::from_edges(self.n(), &e)
    }

    pub fn without_edge(&self, u: VertexId, v: VertexId) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::UnknownEdge(u, v));
        }
        let key = edge_key(u, v);
        let e: Vec<_> = self.edges().into_iter().filter(|&x| x != key).collect();
        Ok(Graph::from_edges_unchecked(self.n(), &e))
    }

    pub fn with_vertices(&self, extra: usize) -> Graph {
        let mut adj = self.adj.clone();
        adj.extend((0..extra).map(|_| Vec::new()));
        Graph { adj }
    }

    /// Deletes `v`. The table maps each old id to its new id.
    pub fn delete_vertex(&self, v: VertexId) -> Result<(Graph, Vec<Option<VertexId>>)> {
        self.check_vertex(v)?;
        Ok(self.delete_vertices(&[v]))
    }

    /// Deletes a set of vertices (unknown ids are ignored); survivors keep
    /// their relative order.
    pub fn delete_vertices(&self, vs: &[VertexId]) -> (Graph, Vec<Option<VertexId>>) {
        let mut gone = vec![false; self.n()];
        for &v in vs {
            if v < self.n() {
                gone[v] = true;
            }
        }
        let mut map = vec![None; self.n()];
        let mut next = 0;
        for v in 0..self.n() {
            if !gone[v] {
                map[v] = Some(next);
                next += 1;
            }
        }
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .filter_map(|(u, w)| Some((map[u]?, map[w]?)))
            .collect();
        (Graph::from_edges_unchecked(next, &edges), map)
    }

    /// Contracts the edge `uv`. The merged vertex takes the lower of the two
    /// ids (after the shift caused by removing the higher one); loops vanish
    /// and parallel edges merge.
    pub fn contract_edge(&self, u: VertexId, v: VertexId) -> Result<(Graph, Vec<VertexId>)> {
        if !self.has_edge(u, v) {
            return Err(Error::UnknownEdge(u, v));
        }
        let (lo, hi) = edge_key(u, v);
        let map: Vec<VertexId> = (0..self.n())
            .map(|x| match x {
                x if x == hi => lo,
                x if x > hi => x - 1,
                x => x,
            })
            .collect();
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(a, b)| (map[a], map[b]))
            .filter(|(a, b)| a != b)
            .collect();
        Ok((Graph::from_edges_unchecked(self.n() - 1, &edges), map))
    }

    /// The subgraph induced by `vs`. Returns the graph and, for each new id,
    /// the old id; new ids follow the sorted order of `vs`.
    pub fn induced(&self, vs: &[VertexId]) -> (Graph, Vec<VertexId>) {
        let mut keep: Vec<VertexId> = vs.iter().copied().filter(|&v| v < self.n()).collect();
        keep.sort_unstable();
        keep.dedup();
        let mut map = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            map[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                if map[w] != usize::MAX && i < map[w] {
                    edges.push((i, map[w]));
                }
            }
        }
        (Graph::from_edges_unchecked(keep.len(), &edges), keep)
    }

    /// Renames vertices: `perm[old] = new`. `perm` must be a permutation.
    pub fn relabel(&self, perm: &[VertexId]) -> Result<Graph> {
        if perm.len() != self.n() {
            return Err(Error::InvalidParam("permutation length".into()));
        }
        let mut seen = vec![false; self.n()];
        for &p in perm {
            if p >= self.n() || seen[p] {
                return Err(Error::InvalidParam("not a permutation".into()));
            }
            seen[p] = true;
        }
        let e: Vec<_> = self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        Ok(Graph::from_edges_unchecked(self.n(), &e))
    }

    /// Places `other` after `self`; vertex `v` of `other` becomes `n + v`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut e = self.edges();
        e.extend(other.edges().into_iter().map(|(u, v)| (u + off, v + off)));
        Graph::from_edges_unchecked(off + other.n(), &e)
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn components(&self) -> Vec<Vec<VertexId>> {
        self.components_avoiding(&vec![false; self.n()])
    }

    /// Components of the graph with the flagged vertices removed. Each
    /// component is sorted; components are ordered by their least vertex.
    pub fn components_avoiding(&self, removed: &[bool]) -> Vec<Vec<VertexId>> {
        let mut seen = removed.to_vec();
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Shortest path from `from` to `to` using only vertices with
    /// `allowed[v]` (the ends need not be allowed).
    pub fn shortest_path(&self, from: VertexId, to: VertexId, allowed: &[bool]) -> Option<Vec<VertexId>> {
        if from == to {
            return Some(vec![from]);
        }
        let mut prev = vec![usize::MAX; self.n()];
        prev[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if prev[w] != usize::MAX {
                    continue;
                }
                if w == to {
                    prev[w] = v;
                    let mut path = vec![to];
                    let mut cur = v;
                    while cur != from {
                        path.push(cur);
                        cur = prev[cur];
                    }
                    path.push(from);
                    path.reverse();
                    return Some(path);
                }
                if allowed[w] {
                    prev[w] = v;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// BFS distances from `s` (`usize::MAX` when unreachable).
    pub fn distances(&self, s: VertexId) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// An ordered vertex sequence inside some host graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct PathRef {
    pub vertices: Vec<VertexId>,
}

impl PathRef {
    pub fn new(vertices: Vec<VertexId>) -> Self {
        PathRef { vertices }
    }

    pub fn ends(&self) -> Option<(VertexId, VertexId)> {
        Some((*self.vertices.first()?, *self.vertices.last()?))
    }

    pub fn interior(&self) -> &[VertexId] {
        if self.vertices.len() <= 2 {
            &[]
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    /// Consecutive vertices adjacent, no repeats, all inside `g`.
    pub fn is_path_in(&self, g: &Graph) -> bool {
        if self.vertices.is_empty() || self.vertices.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let distinct: BTreeSet<_> = self.vertices.iter().collect();
        distinct.len() == self.vertices.len()
            && self.vertices.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }

    /// A path with no edges of `g` between non-consecutive vertices.
    pub fn is_induced_in(&self, g: &Graph) -> bool {
        if !self.is_path_in(g) {
            return false;
        }
        let k = self.vertices.len();
        for i in 0..k {
            for j in i + 2..k {
                if g.has_edge(self.vertices[i], self.vertices[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// A bridge of a subgraph `H` in `G`: either a single edge outside `H`
/// joining two vertices of `H` (trivial), or a component of `G - V(H)`
/// together with all its edges to `H`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bridge {
    /// Vertices of the bridge, attachments included, sorted.
    pub vertices: Vec<VertexId>,
    /// Edges of the bridge as `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(VertexId, VertexId)>,
    /// `vertices ∩ V(H)`, sorted.
    pub attachments: Vec<VertexId>,
    pub trivial: bool,
}

impl Bridge {
    /// Vertices not in `H`.
    pub fn inner(&self) -> Vec<VertexId> {
        self.vertices.iter().copied().filter(|v| self.attachments.binary_search(v).is_err()).collect()
    }
}

/// All `H`-bridges of `g`, where `H` has vertex set `hv` and edge set `he`
/// (pass an empty `he` for a vertex-set bridge decomposition). Nontrivial
/// bridges come first, ordered by least inner vertex; trivial ones follow in
/// edge order.
pub fn bridges(g: &Graph, hv: &[VertexId], he: &[(VertexId, VertexId)]) -> Result<Vec<Bridge>> {
    let mut in_h = vec![false; g.n()];
    for &v in hv {
        if v >= g.n() {
            return Err(Error::UnknownVertex(v));
        }
        in_h[v] = true;
    }
    let mut h_edges = BTreeSet::new();
    for &(u, v) in he {
        if !g.has_edge(u, v) {
            return Err(Error::UnknownEdge(u, v));
        }
        if !in_h[u] || !in_h[v] {
            return Err(Error::Invalid("subgraph edge leaves its vertex set".into()));
        }
        h_edges.insert(edge_key(u, v));
    }
    let mut out = Vec::new();
    for comp in g.components_avoiding(&in_h) {
        let mut verts: BTreeSet<VertexId> = comp.iter().copied().collect();
        let mut edges = BTreeSet::new();
        let mut att = BTreeSet::new();
        for &v in &comp {
            for &w in g.neighbors(v) {
                edges.insert(edge_key(v, w));
                if in_h[w] {
                    att.insert(w);
                    verts.insert(w);
                }
            }
        }
        out.push(Bridge {
            vertices: verts.into_iter().collect(),
            edges: edges.into_iter().collect(),
            attachments: att.into_iter().collect(),
            trivial: false,
        });
    }
    for (u, v) in g.edges() {
        if in_h[u] && in_h[v] && !h_edges.contains(&(u, v)) {
            out.push(Bridge { vertices: vec![u, v], edges: vec![(u, v)], attachments: vec![u, v], trivial: true });
        }
    }
    Ok(out)
}

/// True iff `|G| > k` and no set of fewer than `k` vertices disconnects `G`.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    if g.n() <= k {
        return false;
    }
    if !g.is_connected() {
        return false;
    }
    let mut removed = vec![false; g.n()];
    for size in 1..k {
        if !no_cut_of_size(g, size, 0, &mut removed) {
            return false;
        }
    }
    true
}

fn no_cut_of_size(g: &Graph, left: usize, start: VertexId, removed: &mut Vec<bool>) -> bool {
    if left == 0 {
        return g.components_avoiding(removed).len() <= 1;
    }
    for v in start..g.n() {
        removed[v] = true;
        let ok = no_cut_of_size(g, left - 1, v + 1, removed);
        removed[v] = false;
        if !ok {
            return false;
        }
    }
    true
}

pub fn is_two_connected(g: &Graph) -> bool {
    is_k_connected(g, 2)
}

/// Replaces every degree-2 vertex `w` with neighbours `u, v` by the edge
/// `uv`. Returns `None` when the result would not be simple (parallel edge
/// or adjacent degree-2 vertices).
pub fn suppress_degree_two(g: &Graph) -> Option<Graph> {
    let deg2: Vec<bool> = (0..g.n()).map(|v| g.degree(v) == 2).collect();
    let keep: Vec<VertexId> = (0..g.n()).filter(|&v| !deg2[v]).collect();
    let mut map = vec![usize::MAX; g.n()];
    for (i, &v) in keep.iter().enumerate() {
        map[v] = i;
    }
    let mut edges = BTreeSet::new();
    for (u, v) in g.edges() {
        if !deg2[u] && !deg2[v] && !edges.insert(edge_key(map[u], map[v])) {
            return None;
        }
    }
    for w in 0..g.n() {
        if !deg2[w] {
            continue;
        }
        let (u, v) = (g.neighbors(w)[0], g.neighbors(w)[1]);
        if deg2[u] || deg2[v] {
            return None;
        }
        if !edges.insert(edge_key(map[u], map[v])) {
            return None;
        }
    }
    let e: Vec<_> = edges.into_iter().collect();
    Some(Graph::from_edges_unchecked(keep.len(), &e))
}

/// A 3-connected graph with each edge subdivided at most once.
///
/// Checked as: degree-2 vertices are pairwise non-adjacent, no degree-2
/// vertex has adjacent neighbours, and suppressing them yields a simple
/// 3-connected graph.
pub fn is_internally_3connected(g: &Graph) -> bool {
    for w in 0..g.n() {
        if g.degree(w) == 2 {
            let (u, v) = (g.neighbors(w)[0], g.neighbors(w)[1]);
            if g.degree(u) == 2 || g.degree(v) == 2 || g.has_edge(u, v) {
                return false;
            }
        }
    }
    match suppress_degree_two(g) {
        Some(h) => is_k_connected(&h, 3),
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard::*;

    #[test]
    fn delete_vertex_examples() {
        let (g, map) = complete(3).delete_vertex(1).unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
        assert_eq!(map, vec![Some(0), None, Some(1)]);
        let k23 = complete_bipartite(2, 3);
        let (g, _) = k23.delete_vertex(4).unwrap();
        assert_eq!((g.n(), g.m()), (4, 4));
        let (p, _) = cycle(5).delete_vertex(0).unwrap();
        assert_eq!((p.n(), p.m()), (4, 3));
        assert_eq!(p.degree_sequence(), vec![1, 1, 2, 2]);
        assert!(cycle(3).delete_vertex(7).is_err());
    }

    #[test]
    fn contract_examples() {
        let (g, map) = cycle(4).contract_edge(1, 2).unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        assert_eq!(map, vec![0, 1, 1, 2]);
        let (g, _) = complete(4).contract_edge(0, 3).unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        let (g, _) = cycle(3).contract_edge(0, 1).unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
        assert!(cycle(5).contract_edge(0, 2).is_err());
    }

    #[test]
    fn connectivity_examples() {
        assert!(is_k_connected(&complete(4), 3));
        assert!(!is_k_connected(&cycle(5), 3));
        assert!(is_k_connected(&complete_bipartite(2, 3), 2));
        assert!(!is_k_connected(&complete_bipartite(2, 3), 3));
        assert!(is_k_connected(&complete(2), 1));
        assert!(!is_k_connected(&complete(3), 3));
        assert!(is_k_connected(&petersen(), 3));
        assert!(!is_k_connected(&petersen(), 4));
    }

    #[test]
    fn internally_3connected_examples() {
        let once = subdivide_edge(&complete(4), 0, 1, 1).unwrap();
        assert!(is_internally_3connected(&once));
        let twice = subdivide_edge(&complete(4), 0, 1, 2).unwrap();
        assert!(!is_internally_3connected(&twice));
        assert!(!is_internally_3connected(&cycle(6)));
        assert!(is_internally_3connected(&k33_minus_e()));
        assert!(!is_internally_3connected(&complete_bipartite(2, 3)));
        assert!(is_internally_3connected(&petersen()));
    }

    #[test]
    fn bridge_examples() {
        let c5 = cycle(5);
        let b = bridges(&c5, &[0, 1], &[(0, 1)]).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].attachments, vec![0, 1]);
        assert!(!b[0].trivial);

        let k4 = complete(4);
        let b = bridges(&k4, &[0, 1, 2], &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].inner(), vec![3]);
        assert_eq!(b[0].attachments, vec![0, 1, 2]);

        let b = bridges(&k4, &[0, 1, 2, 3], &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(b.len(), 3);
        assert!(b.iter().all(|x| x.trivial));
        assert!(bridges(&k4, &[0, 1], &[(0, 2)]).is_err());
    }

    #[test]
    fn path_ref() {
        let g = cycle(6);
        let p = PathRef::new(vec![0, 1, 2, 3]);
        assert!(p.is_induced_in(&g));
        assert_eq!(p.interior(), &[1, 2]);
        assert_eq!(p.length(), 3);
        let q = PathRef::new(vec![0, 1, 2, 3, 4, 5]);
        assert!(q.is_path_in(&g) && !q.is_induced_in(&g));
        assert!(!PathRef::new(vec![0, 2]).is_path_in(&g));
    }
}
