use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{self, connected_supersets, BitGraph, Step};
use crate::budget::Budget;
use crate::error::{bad_param, precondition, Error, Result};
use crate::graph::{bridges, edge_key, Bridge, Graph, VertexId};

/// A tree of `G` whose leaves all lie in `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RTreeCertificate {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<(VertexId, VertexId)>,
    pub leaves: Vec<VertexId>,
}

fn check_r(g: &Graph, r: &[VertexId]) -> Result<Vec<bool>> {
    let mut in_r = vec![false; g.n()];
    for &v in r {
        if v >= g.n() {
            return Err(Error::UnknownVertex(v));
        }
        in_r[v] = true;
    }
    Ok(in_r)
}

/// An R-tree with at least `n >= 2` leaves, if `G` has one.
///
/// For `n >= 3` such a tree exists iff some connected set `X` has `n`
/// vertices of `R` outside it but adjacent to it: a spanning tree of `X`
/// plus those pendant leaves, pruned of other leaves, is the tree. For
/// `n = 2` it is a shortest path between two vertices of `R` with no
/// vertex of `R` inside.
pub fn find_r_tree(g: &Graph, r: &[VertexId], n: usize, budget: &mut Budget) -> Result<Option<RTreeCertificate>> {
    if n < 2 {
        return bad_param("an R-tree needs at least two leaves");
    }
    if !g.is_connected() {
        return precondition("graph must be connected");
    }
    let in_r = check_r(g, r)?;
    let rs: Vec<VertexId> = (0..g.n()).filter(|&v| in_r[v]).collect();
    if n == 2 {
        if rs.len() < 2 {
            return Ok(None);
        }
        let s = rs[0];
        let mut prev = vec![usize::MAX; g.n()];
        let mut queue = alloc::collections::VecDeque::from([s]);
        prev[s] = s;
        while let Some(u) = queue.pop_front() {
            budget.tick()?;
            if u != s && in_r[u] {
                let mut path = vec![u];
                while *path.last().unwrap() != s {
                    path.push(prev[*path.last().unwrap()]);
                }
                let edges = path.windows(2).map(|w| edge_key(w[0], w[1])).collect();
                let mut vs = path.clone();
                vs.sort_unstable();
                return Ok(Some(RTreeCertificate { vertices: vs, edges, leaves: vec![s.min(u), s.max(u)] }));
            }
            for &w in g.neighbors(u) {
                if prev[w] == usize::MAX {
                    prev[w] = u;
                    queue.push_back(w);
                }
            }
        }
        return Ok(None);
    }
    if rs.len() < n {
        return Ok(None);
    }
    let bg = BitGraph::new(g)?;
    let rmask = bits::from_slice(&rs);
    let full = bits::full(g.n());
    for seed in 0..g.n() {
        let within = full & !(bits::bit(seed) - 1);
        let mut hit = None;
        connected_supersets(&bg, bits::bit(seed), within, &mut |x| -> Result<Step> {
            budget.tick()?;
            let out = bg.nbr_union(x) & !x & rmask;
            if out.count_ones() as usize >= n {
                hit = Some((x, out));
                return Ok(Step::Stop);
            }
            Ok(Step::Descend)
        })?;
        if let Some((x, out)) = hit {
            return Ok(Some(tree_from(g, x, out, n)));
        }
    }
    Ok(None)
}

fn tree_from(g: &Graph, x: bits::Mask, out: bits::Mask, n: usize) -> RTreeCertificate {
    let leaves: Vec<VertexId> = bits::iter(out).take(n).collect();
    let core = bits::to_vec(x);
    let mut edges: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    let mut seen = vec![false; g.n()];
    let mut stack = vec![core[0]];
    seen[core[0]] = true;
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if !seen[w] && x & bits::bit(w) != 0 {
                seen[w] = true;
                edges.insert(edge_key(u, w));
                stack.push(w);
            }
        }
    }
    for &l in &leaves {
        let a = *g.neighbors(l).iter().find(|&&w| x & bits::bit(w) != 0).unwrap();
        edges.insert(edge_key(a, l));
    }
    // prune leaves that are not chosen
    loop {
        let mut deg: alloc::collections::BTreeMap<VertexId, usize> = alloc::collections::BTreeMap::new();
        for &(u, v) in &edges {
            *deg.entry(u).or_default() += 1;
            *deg.entry(v).or_default() += 1;
        }
        let bad: Vec<VertexId> = deg.iter().filter(|&(v, &d)| d == 1 && !leaves.contains(v)).map(|(&v, _)| v).collect();
        if bad.is_empty() {
            break;
        }
        edges.retain(|&(u, v)| !bad.contains(&u) && !bad.contains(&v));
    }
    let mut vs: BTreeSet<VertexId> = BTreeSet::new();
    for &(u, v) in &edges {
        vs.insert(u);
        vs.insert(v);
    }
    let mut leaves = leaves;
    leaves.sort_unstable();
    RTreeCertificate { vertices: vs.into_iter().collect(), edges: edges.into_iter().collect(), leaves }
}

/// Independent check of an R-tree certificate with at least `n` leaves.
pub fn check_r_tree(g: &Graph, r: &[VertexId], n: usize, t: &RTreeCertificate) -> bool {
    let vs: BTreeSet<VertexId> = t.vertices.iter().copied().collect();
    if vs.len() != t.vertices.len() || t.edges.len() + 1 != vs.len() {
        return false;
    }
    if !t.edges.iter().all(|&(u, v)| g.has_edge(u, v) && vs.contains(&u) && vs.contains(&v)) {
        return false;
    }
    let idx: Vec<VertexId> = vs.iter().copied().collect();
    let pos = |v: VertexId| idx.binary_search(&v).unwrap();
    let local: Vec<_> = t.edges.iter().map(|&(u, v)| (pos(u), pos(v))).collect();
    let Ok(tree) = Graph::from_edges(idx.len(), &local) else { return false };
    if !tree.is_connected() {
        return false;
    }
    let leaves: Vec<VertexId> = (0..idx.len()).filter(|&i| tree.degree(i) == 1).map(|i| idx[i]).collect();
    let mut claimed = t.leaves.clone();
    claimed.sort_unstable();
    if leaves != claimed || leaves.len() < n || !leaves.iter().all(|v| r.contains(v)) {
        return false;
    }
    let is_path = (0..idx.len()).all(|i| tree.degree(i) <= 2);
    !is_path || (0..idx.len()).all(|i| tree.degree(i) != 2 || !r.contains(&idx[i]))
}

/// The induced subgraph `G0` built from the auxiliary graph on `R`, with
/// its bridges and the two structural conclusions checked directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RTreeStructure {
    /// Edges of the auxiliary graph `H` on `R`: `xy` when an R-path joins them.
    pub aux_edges: Vec<(VertexId, VertexId)>,
    pub aux_is_cycle: bool,
    pub r0: Vec<VertexId>,
    pub r1: Vec<VertexId>,
    pub g0_vertices: Vec<VertexId>,
    pub g0_bridges: Vec<Bridge>,
    /// `|R ∩ V(G0)|`.
    pub r_in_g0: usize,
    /// No two `G0`-bridges share an attachment.
    pub disjoint_attachments: bool,
    /// Every `G0`-bridge has two attachments, both in `R`, and its other
    /// vertices in `R` separate them.
    pub two_attachments: bool,
}

pub fn r_tree_structure(g: &Graph, r: &[VertexId], n: usize, budget: &mut Budget) -> Result<RTreeStructure> {
    if find_r_tree(g, r, n, budget)?.is_some() {
        return precondition("graph has an R-tree with n leaves");
    }
    let in_r = check_r(g, r)?;
    let rs: Vec<VertexId> = (0..g.n()).filter(|&v| in_r[v]).collect();
    let rb = bridges(g, &rs, &[])?;
    let mut aux: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    for b in &rb {
        for (i, &u) in b.attachments.iter().enumerate() {
            for &v in &b.attachments[i + 1..] {
                aux.insert(edge_key(u, v));
            }
        }
    }
    let deg = |x: VertexId| aux.iter().filter(|&&(u, v)| u == x || v == x).count();
    let nbrs = |x: VertexId| -> Vec<VertexId> {
        aux.iter().filter_map(|&(u, v)| if u == x { Some(v) } else if v == x { Some(u) } else { None }).collect()
    };
    let aux_is_cycle = rs.len() >= 3 && rs.iter().all(|&x| deg(x) == 2);
    let r0: Vec<VertexId> = if aux_is_cycle { vec![rs[0]] } else { rs.iter().copied().filter(|&x| deg(x) != 2).collect() };
    let mut r1: BTreeSet<VertexId> = BTreeSet::new();
    for &x in &r0 {
        r1.insert(x);
        r1.extend(nbrs(x));
    }
    let mut v0: BTreeSet<VertexId> = BTreeSet::new();
    for b in &rb {
        if b.attachments.iter().all(|a| r1.contains(a)) {
            v0.extend(b.vertices.iter().copied());
        }
    }
    let g0_vertices: Vec<VertexId> = v0.into_iter().collect();
    let (g0, old) = g.induced(&g0_vertices);
    let g0_edges: Vec<_> = g0.edges().into_iter().map(|(u, v)| (old[u], old[v])).collect();
    let g0_bridges = bridges(g, &g0_vertices, &g0_edges)?;
    let mut seen_att: BTreeSet<VertexId> = BTreeSet::new();
    let disjoint_attachments = g0_bridges.iter().all(|b| b.attachments.iter().all(|&a| seen_att.insert(a)));
    let two_attachments = g0_bridges.iter().all(|b| {
        b.attachments.len() == 2
            && b.attachments.iter().all(|&a| in_r[a])
            && b.inner().iter().filter(|&&v| in_r[v]).all(|&v| separates(g, b, v))
    });
    Ok(RTreeStructure {
        aux_edges: aux.into_iter().collect(),
        aux_is_cycle,
        r0,
        r1: r1.into_iter().collect(),
        r_in_g0: g0_vertices.iter().filter(|&&v| in_r[v]).count(),
        g0_vertices,
        g0_bridges,
        disjoint_attachments,
        two_attachments,
    })
}

/// `v` is a cut vertex of the bridge separating its two attachments.
fn separates(g: &Graph, b: &Bridge, v: VertexId) -> bool {
    let (s, t) = (b.attachments[0], b.attachments[1]);
    let mut allowed = vec![false; g.n()];
    for &w in &b.vertices {
        allowed[w] = w != v;
    }
    // walk only along bridge edges
    let mut seen = vec![false; g.n()];
    let mut stack = vec![s];
    seen[s] = true;
    while let Some(u) = stack.pop() {
        for &(a, c) in &b.edges {
            let w = if a == u { c } else if c == u { a } else { continue };
            if allowed[w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    !seen[t]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard::{complete, cycle, path, star, subdivide_edges};

    #[test]
    fn star_is_its_own_r_tree() {
        let g = star(5);
        let r: Vec<VertexId> = (1..6).collect();
        let t = find_r_tree(&g, &r, 5, &mut Budget::unlimited()).unwrap().unwrap();
        assert_eq!(t.leaves, r);
        assert!(check_r_tree(&g, &r, 5, &t));
    }

    #[test]
    fn paths_have_two_leaves() {
        let g = path(6);
        let r: Vec<VertexId> = (0..6).collect();
        assert!(find_r_tree(&g, &r, 3, &mut Budget::unlimited()).unwrap().is_none());
        let t = find_r_tree(&g, &r, 2, &mut Budget::unlimited()).unwrap().unwrap();
        assert!(check_r_tree(&g, &r, 2, &t));
    }

    #[test]
    fn spider_with_three_legs() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let r = [2, 4, 6];
        let t = find_r_tree(&g, &r, 3, &mut Budget::unlimited()).unwrap().unwrap();
        assert_eq!(t.vertices.len(), 7);
        assert!(check_r_tree(&g, &r, 3, &t));
    }

    #[test]
    fn cycle_structure() {
        let g = cycle(8);
        let r: Vec<VertexId> = (0..8).collect();
        let s = r_tree_structure(&g, &r, 3, &mut Budget::unlimited()).unwrap();
        assert!(s.aux_is_cycle);
        assert_eq!(s.r0.len(), 1);
        assert!(s.disjoint_attachments && s.two_attachments);
    }

    #[test]
    fn path_ends_structure() {
        let g = path(5);
        let s = r_tree_structure(&g, &[0, 4], 3, &mut Budget::unlimited()).unwrap();
        assert!(s.disjoint_attachments && s.two_attachments);
        assert_eq!(s.r_in_g0, 2);
    }

    #[test]
    fn subdivided_k4_branch_vertices() {
        let g = subdivide_edges(&complete(4), &[(0, 1), (2, 3)]).unwrap();
        let r = [0, 1, 2, 3];
        let s = r_tree_structure(&g, &r, 5, &mut Budget::unlimited()).unwrap();
        assert!(s.disjoint_attachments && s.two_attachments);
        assert!(r_tree_structure(&g, &r, 3, &mut Budget::unlimited()).is_err());
    }
}
