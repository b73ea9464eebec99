use alloc::vec;
use alloc::vec::Vec;

use super::{two_sum_glue, LabeledGraph, Orientation};
use crate::error::{bad_param, invalid, Result};
use crate::graph::VertexId;

/// A tree edge `st` glued over label `ls` of piece `s` and label `lt` of
/// piece `t`. The orientation is read against the sorted neighbours of
/// `ls` in `G_s` and of `lt` in `G_t`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct TreeEdge {
    pub s: usize,
    pub t: usize,
    pub ls: VertexId,
    pub lt: VertexId,
    pub orientation: Orientation,
}

/// Pieces on the tree's nodes `0..pieces.len()`. Each piece has its own
/// local vertex ids, so pieces are disjoint by construction.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TreeStructure {
    pub pieces: Vec<LabeledGraph>,
    pub edges: Vec<TreeEdge>,
}

/// The labeled graph of a full contraction, with each node's local ids
/// mapped to final ids (`None` for labels consumed by gluing).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TreeSum {
    pub labeled: LabeledGraph,
    pub maps: Vec<Vec<Option<VertexId>>>,
}

/// The result of contracting some tree edges: `maps[t][v]` is the new
/// `(node, id)` of vertex `v` of old piece `t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Contracted {
    pub theta: TreeStructure,
    pub maps: Vec<Vec<Option<(usize, VertexId)>>>,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

impl TreeStructure {
    pub fn single(piece: LabeledGraph) -> Self {
        TreeStructure { pieces: vec![piece], edges: Vec::new() }
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.pieces.len();
        if k == 0 {
            return invalid("tree structure has no nodes");
        }
        for p in &self.pieces {
            p.validate()?;
        }
        if self.edges.len() + 1 != k {
            return invalid("tree needs exactly one edge fewer than nodes");
        }
        let mut parent: Vec<usize> = (0..k).collect();
        let mut used: Vec<Vec<VertexId>> = vec![Vec::new(); k];
        for e in &self.edges {
            if e.s >= k || e.t >= k || e.s == e.t {
                return invalid("tree edge has a bad endpoint");
            }
            if !self.pieces[e.s].is_label(e.ls) || !self.pieces[e.t].is_label(e.lt) {
                return invalid("tree edge must glue two labels");
            }
            if used[e.s].contains(&e.ls) || used[e.t].contains(&e.lt) {
                return invalid("label glued to two tree edges");
            }
            used[e.s].push(e.ls);
            used[e.t].push(e.lt);
            let (a, b) = (find(&mut parent, e.s), find(&mut parent, e.t));
            if a == b {
                return invalid("tree edges form a cycle");
            }
            parent[a.max(b)] = a.min(b);
        }
        Ok(())
    }

    pub fn neighbors(&self, t: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e.s == t {
                out.push((e.t, i));
            } else if e.t == t {
                out.push((e.s, i));
            }
        }
        out
    }

    /// Tree nodes on the path from `a` to `b`, inclusive.
    pub fn node_path(&self, a: usize, b: usize) -> Vec<usize> {
        let k = self.pieces.len();
        let mut prev = vec![usize::MAX; k];
        prev[a] = a;
        let mut stack = vec![a];
        while let Some(x) = stack.pop() {
            for (y, _) in self.neighbors(x) {
                if prev[y] == usize::MAX {
                    prev[y] = x;
                    stack.push(y);
                }
            }
        }
        let mut path = vec![b];
        let mut cur = b;
        while cur != a {
            cur = prev[cur];
            path.push(cur);
        }
        path.reverse();
        path
    }

    /// Pairs `(u, w)` with `u` a neighbour of `ls` in `G_s` and `w` the
    /// neighbour of `lt` in `G_t` it is identified with.
    pub fn pairing(&self, e: &TreeEdge) -> [(VertexId, VertexId); 2] {
        let a = self.pieces[e.s].graph.neighbors(e.ls);
        let b = self.pieces[e.t].graph.neighbors(e.lt);
        match e.orientation {
            Orientation::Parallel => [(a[0], b[0]), (a[1], b[1])],
            Orientation::Crossed => [(a[0], b[1]), (a[1], b[0])],
        }
    }

    /// Contracts the listed edges (indices into `self.edges`) in order.
    /// New nodes are the merged clusters ordered by their least old node;
    /// within a merge the cluster with the lesser least node plays `G_1`.
    pub fn contract(&self, order: &[usize]) -> Result<Contracted> {
        self.validate()?;
        let k = self.pieces.len();
        let mut seen = vec![false; self.edges.len()];
        for &i in order {
            if i >= self.edges.len() || seen[i] {
                return bad_param("contraction order must list distinct tree edges");
            }
            seen[i] = true;
        }
        let mut cluster: Vec<usize> = (0..k).collect();
        let mut graphs: Vec<Option<crate::graph::Graph>> = self.pieces.iter().map(|p| Some(p.graph.clone())).collect();
        let mut maps: Vec<Vec<Option<VertexId>>> =
            self.pieces.iter().map(|p| (0..p.graph.n()).map(Some).collect()).collect();
        for &i in order {
            let e = self.edges[i];
            let (ca, cb) = (cluster[e.s], cluster[e.t]);
            let [(a0, b0), _] = self.pairing(&e);
            // G1 is the cluster whose least node is smaller; clusters are
            // keyed by their least node
            let (c1, c2, z1, z2, pair) = if ca < cb {
                (ca, cb, maps[e.s][e.ls], maps[e.t][e.lt], (maps[e.s][a0], maps[e.t][b0]))
            } else {
                (cb, ca, maps[e.t][e.lt], maps[e.s][e.ls], (maps[e.t][b0], maps[e.s][a0]))
            };
            let (Some(z1), Some(z2), (Some(p1), Some(p2))) = (z1, z2, pair) else {
                return invalid("label consumed twice");
            };
            let g1 = graphs[c1].take().unwrap();
            let g2 = graphs[c2].take().unwrap();
            let sum = two_sum_glue(&g1, z1, &g2, z2, (p1, p2))?;
            for node in 0..k {
                if cluster[node] == c1 {
                    for v in maps[node].iter_mut() {
                        *v = v.and_then(|x| sum.map1[x]);
                    }
                } else if cluster[node] == c2 {
                    for v in maps[node].iter_mut() {
                        *v = v.and_then(|x| sum.map2[x]);
                    }
                    cluster[node] = c1;
                }
            }
            graphs[c1] = Some(sum.graph);
        }
        let roots: Vec<usize> = (0..k).filter(|&c| cluster[c] == c).collect();
        let index = |c: usize| roots.binary_search(&c).unwrap();
        let mut pieces: Vec<LabeledGraph> = Vec::with_capacity(roots.len());
        for &r in &roots {
            let mut labels = Vec::new();
            for node in 0..k {
                if cluster[node] == r {
                    labels.extend(self.pieces[node].labels.iter().filter_map(|&l| maps[node][l]));
                }
            }
            pieces.push(LabeledGraph::new(graphs[r].take().unwrap(), labels)?);
        }
        let mut edges = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if seen[i] {
                continue;
            }
            let ls = maps[e.s][e.ls].unwrap();
            let lt = maps[e.t][e.lt].unwrap();
            let [(a0, b0), _] = self.pairing(e);
            let (s, t) = (index(cluster[e.s]), index(cluster[e.t]));
            let first_s = pieces[s].graph.neighbors(ls)[0] == maps[e.s][a0].unwrap();
            let first_t = pieces[t].graph.neighbors(lt)[0] == maps[e.t][b0].unwrap();
            let orientation = if first_s == first_t { Orientation::Parallel } else { Orientation::Crossed };
            edges.push(TreeEdge { s, t, ls, lt, orientation });
        }
        let maps = (0..k)
            .map(|node| maps[node].iter().map(|v| v.map(|x| (index(cluster[node]), x))).collect())
            .collect();
        Ok(Contracted { theta: TreeStructure { pieces, edges }, maps })
    }

    pub fn tree_sum(&self) -> Result<TreeSum> {
        let order: Vec<usize> = (0..self.edges.len()).collect();
        self.tree_sum_with_order(&order)
    }

    /// Full contraction in the given edge order; the order must list every
    /// edge once. The result is the same graph up to isomorphism for every
    /// order.
    pub fn tree_sum_with_order(&self, order: &[usize]) -> Result<TreeSum> {
        if order.len() != self.edges.len() {
            return bad_param("order must list every tree edge");
        }
        let c = self.contract(order)?;
        let maps = c.maps.iter().map(|m| m.iter().map(|v| v.map(|(_, x)| x)).collect()).collect();
        Ok(TreeSum { labeled: c.theta.pieces.into_iter().next().unwrap(), maps })
    }

    /// The sub-structure on `nodes`, which must induce a subtree. Returns it
    /// together with the old node id of each new node.
    pub fn restrict(&self, nodes: &[usize]) -> Result<(TreeStructure, Vec<usize>)> {
        let mut keep: Vec<usize> = nodes.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if keep.is_empty() || keep.iter().any(|&t| t >= self.pieces.len()) {
            return bad_param("subtree nodes out of range");
        }
        let pos = |t: usize| keep.binary_search(&t).ok();
        let edges: Vec<TreeEdge> = self
            .edges
            .iter()
            .filter_map(|e| Some(TreeEdge { s: pos(e.s)?, t: pos(e.t)?, ..*e }))
            .collect();
        if edges.len() + 1 != keep.len() {
            return bad_param("nodes do not induce a subtree");
        }
        let pieces = keep.iter().map(|&t| self.pieces[t].clone()).collect();
        Ok((TreeStructure { pieces, edges }, keep))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;
    use crate::standard::*;

    fn c(n: usize, labels: &[usize]) -> LabeledGraph {
        LabeledGraph::new(cycle(n), labels.to_vec()).unwrap()
    }

    fn edge(s: usize, t: usize, ls: usize, lt: usize) -> TreeEdge {
        TreeEdge { s, t, ls, lt, orientation: Orientation::Parallel }
    }

    #[test]
    fn single_node_is_identity() {
        let t = TreeStructure::single(c(5, &[1]));
        let s = t.tree_sum().unwrap();
        assert_eq!(s.labeled, c(5, &[1]));
    }

    #[test]
    fn two_cycles() {
        let t = TreeStructure { pieces: vec![c(5, &[0, 2]), c(6, &[3])], edges: vec![edge(0, 1, 0, 3)] };
        let s = t.tree_sum().unwrap();
        assert!(are_isomorphic(&s.labeled.graph, &cycle(7)).unwrap());
        assert_eq!(s.labeled.labels.len(), 1);
    }

    #[test]
    fn path_of_three_squares() {
        let t = TreeStructure {
            pieces: vec![c(4, &[0]), c(4, &[0, 2]), c(4, &[1])],
            edges: vec![edge(0, 1, 0, 0), edge(1, 2, 2, 1)],
        };
        let s = t.tree_sum().unwrap();
        // C_a + C_b = C_{a+b-4}
        assert!(are_isomorphic(&s.labeled.graph, &cycle(4)).unwrap());
    }

    #[test]
    fn invalid_structures() {
        let bad = TreeStructure { pieces: vec![c(5, &[0]), c(5, &[0])], edges: vec![edge(0, 1, 0, 1)] };
        assert!(bad.validate().is_err());
        let cyc = TreeStructure {
            pieces: vec![c(6, &[0, 2]), c(6, &[0, 2])],
            edges: vec![edge(0, 1, 0, 0), edge(1, 0, 2, 2)],
        };
        assert!(cyc.validate().is_err());
    }
}
