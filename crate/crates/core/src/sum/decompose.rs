use alloc::vec;
use alloc::vec::Vec;

use super::classify::{find_admissible_2cut, in_class_c, CClass};
use super::tree::{TreeEdge, TreeStructure};
use super::{LabeledGraph, Orientation};
use crate::error::{invalid, Result};
use crate::graph::{Graph, VertexId};

/// A tree structure whose 2-sum is the input, plus where each input
/// vertex ended up: `homes[v]` lists every `(node, local id)` copy (cut
/// vertices are copied into both sides of a split).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    pub theta: TreeStructure,
    pub homes: Vec<Vec<(usize, VertexId)>>,
}

/// Splits along the least admissible 2-cut until every piece is in C.
/// The new vertices `z1`, `z2` of a split become labels of their sides.
pub fn decompose(g: &Graph, labels: &[VertexId]) -> Result<Decomposition> {
    let lg = LabeledGraph::new(g.clone(), labels.to_vec())?;
    rec(&lg.graph, &lg.labels)
}

fn rec(g: &Graph, labels: &[VertexId]) -> Result<Decomposition> {
    if in_class_c(g) != CClass::None {
        let piece = LabeledGraph::new(g.clone(), labels.to_vec())?;
        let homes = (0..g.n()).map(|v| vec![(0, v)]).collect();
        return Ok(Decomposition { theta: TreeStructure::single(piece), homes });
    }
    let Some(s) = find_admissible_2cut(g, labels)? else {
        return invalid("graph outside C without an admissible 2-cut");
    };
    let side_labels = |map: &[Option<VertexId>], z: VertexId| {
        let mut l: Vec<VertexId> = labels.iter().filter_map(|&v| map[v]).collect();
        l.push(z);
        l
    };
    let d1 = rec(&s.g1, &side_labels(&s.map1, s.z1))?;
    let d2 = rec(&s.g2, &side_labels(&s.map2, s.z2))?;
    let off = d1.theta.pieces.len();
    let (t1, l1) = d1.homes[s.z1][0];
    let (t2, l2) = d2.homes[s.z2][0];
    let copy_in = |homes: &[(usize, VertexId)], node: usize| homes.iter().find(|h| h.0 == node).map(|h| h.1);
    let xa = copy_in(&d1.homes[s.map1[s.x].unwrap()], t1).unwrap();
    let xb = copy_in(&d2.homes[s.map2[s.x].unwrap()], t2).unwrap();
    let first_a = d1.theta.pieces[t1].graph.neighbors(l1)[0] == xa;
    let first_b = d2.theta.pieces[t2].graph.neighbors(l2)[0] == xb;
    let orientation = if first_a == first_b { Orientation::Parallel } else { Orientation::Crossed };

    let mut pieces = d1.theta.pieces;
    pieces.extend(d2.theta.pieces);
    let mut edges = d1.theta.edges;
    edges.extend(d2.theta.edges.iter().map(|e| TreeEdge { s: e.s + off, t: e.t + off, ..*e }));
    edges.push(TreeEdge { s: t1, t: t2 + off, ls: l1, lt: l2, orientation });
    let homes = (0..g.n())
        .map(|v| {
            let mut h = Vec::new();
            if let Some(a) = s.map1[v] {
                h.extend(d1.homes[a].iter().copied());
            }
            if let Some(b) = s.map2[v] {
                h.extend(d2.homes[b].iter().map(|&(t, x)| (t + off, x)));
            }
            h
        })
        .collect();
    Ok(Decomposition { theta: TreeStructure { pieces, edges }, homes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic_labeled;
    use crate::standard::*;

    fn round_trip(g: &Graph, labels: &[VertexId]) -> Decomposition {
        let d = decompose(g, labels).unwrap();
        d.theta.validate().unwrap();
        let s = d.theta.tree_sum().unwrap();
        assert!(are_isomorphic_labeled(&s.labeled.graph, &s.labeled.labels, g, labels, 64).unwrap());
        for p in &d.theta.pieces {
            assert_ne!(in_class_c(&p.graph), CClass::None);
        }
        d
    }

    #[test]
    fn small_examples() {
        assert_eq!(round_trip(&k4_minus_e(), &[]).theta.pieces.len(), 1);
        let d = round_trip(&cycle(7), &[]);
        assert_eq!(d.theta.pieces.len(), 2);
        round_trip(&cycle(12), &[0, 5]);
        let k23 = complete_bipartite(2, 3);
        let s = crate::sum::two_sum(&k23, 2, &k23, 4).unwrap();
        round_trip(&s.graph, &[]);
        round_trip(&complete_bipartite(2, 6), &[2, 3]);
    }

    #[test]
    fn every_small_biconnected_graph() {
        for n in 3..=7 {
            for g in crate::enumerate::biconnected_graphs(n) {
                round_trip(&g, &[]);
            }
        }
    }
}
