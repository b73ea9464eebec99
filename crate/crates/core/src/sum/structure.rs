//! Layered presentation of a `K_{2,n}`-free graph: runs of C1 pieces are
//! merged into type-I pieces, the rest stay as C2 pieces.

use alloc::vec;
use alloc::vec::Vec;

use super::classify::{in_class_c, CClass, CTier};
use super::decompose::decompose;
use super::tree::TreeStructure;
use super::LabeledGraph;
use crate::budget::Budget;
use crate::error::{bad_param, invalid, precondition, Result};
use crate::graph::{is_two_connected, Graph, VertexId};
use crate::minor::has_k2n_minor;
use crate::typeone::{is_type_one, recognize_type_one, ChordDiagram};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PieceKind {
    /// A 2-sum of C1 pieces, with a type-I presentation.
    TypeOne(ChordDiagram),
    /// A single C2 piece; `K_{2,n}`-freeness of the whole graph carries over.
    C2(CClass),
}

#[derive(Clone, Debug)]
pub struct LayeredPiece {
    pub piece: LabeledGraph,
    pub kind: PieceKind,
    /// Nodes of the underlying decomposition merged into this piece.
    pub members: Vec<usize>,
    /// 1 for the root, growing by one per tree edge.
    pub layer: usize,
}

#[derive(Clone, Debug)]
pub struct Presentation {
    /// The decomposition into pieces of C.
    pub decomposition: TreeStructure,
    /// The same tree after merging C1 runs; node `i` is `pieces[i]`.
    pub theta: TreeStructure,
    pub pieces: Vec<LayeredPiece>,
    pub root: usize,
    /// Largest layer.
    pub depth: usize,
}

fn is_c1(g: &Graph) -> bool {
    in_class_c(g).tier(g) == Some(CTier::One)
}

/// Presents a 2-connected `K_{2,n}`-free graph as a tree of type-I and C2
/// pieces, rooted at a centre of the tree.
pub fn decompose_to_structure(g: &Graph, n: usize, budget: &mut Budget) -> Result<Presentation> {
    if n == 0 {
        return bad_param("n must be positive");
    }
    if !is_two_connected(g) {
        return precondition("graph is not 2-connected");
    }
    if has_k2n_minor(g, n, budget)?.is_some() {
        return precondition("graph has a K_{2,n} minor");
    }
    let theta = decompose(g, &[])?.theta;
    let k = theta.pieces.len();
    let c1: Vec<bool> = theta.pieces.iter().map(|p| is_c1(&p.graph)).collect();
    let inner: Vec<usize> = (0..theta.edges.len()).filter(|&i| c1[theta.edges[i].s] && c1[theta.edges[i].t]).collect();
    let contracted = theta.contract(&inner)?;
    let merged = &contracted.theta;
    let owner: Vec<usize> = (0..k)
        .map(|t| contracted.maps[t].iter().flatten().next().map(|&(c, _)| c).unwrap())
        .collect();

    let mut diagrams: Vec<Option<ChordDiagram>> = vec![None; k];
    for t in 0..k {
        if c1[t] {
            diagrams[t] = recognize_type_one(&theta.pieces[t].graph)?;
            if diagrams[t].is_none() {
                return invalid("C1 piece without a type-I presentation");
            }
        }
    }
    let mut pieces = Vec::with_capacity(merged.pieces.len());
    for (c, piece) in merged.pieces.iter().enumerate() {
        let members: Vec<usize> = (0..k).filter(|&t| owner[t] == c).collect();
        let kind = if c1[members[0]] {
            let cycle = expand_cluster(&theta, &contracted.maps, &diagrams, &inner, &members)?;
            let d = ChordDiagram::from_cycle(&piece.graph, &cycle)?;
            if !is_type_one(&d) {
                return invalid("merged C1 run is not type-I");
            }
            PieceKind::TypeOne(d)
        } else {
            PieceKind::C2(in_class_c(&piece.graph))
        };
        pieces.push(LayeredPiece { piece: piece.clone(), kind, members, layer: 0 });
    }
    let (root, layers) = centre(merged);
    for (p, l) in pieces.iter_mut().zip(&layers) {
        p.layer = *l;
    }
    let depth = layers.iter().copied().max().unwrap_or(1);
    Ok(Presentation { decomposition: theta, theta: merged.clone(), pieces, root, depth })
}

/// Layers from the tree centre minimising the depth; ties go to the lower
/// node.
fn centre(theta: &TreeStructure) -> (usize, Vec<usize>) {
    let k = theta.pieces.len();
    let layers_from = |r: usize| {
        let mut layer = vec![0; k];
        layer[r] = 1;
        let mut queue = vec![r];
        let mut i = 0;
        while i < queue.len() {
            let t = queue[i];
            i += 1;
            for (s, _) in theta.neighbors(t) {
                if layer[s] == 0 {
                    layer[s] = layer[t] + 1;
                    queue.push(s);
                }
            }
        }
        layer
    };
    (0..k)
        .map(|r| (r, layers_from(r)))
        .min_by_key(|(r, l)| (l.iter().copied().max(), *r))
        .unwrap()
}

/// Reference cycle of a merged run, in the merged piece's ids: each glued
/// label on a member's cycle is replaced by the partner's cycle arc.
fn expand_cluster(
    theta: &TreeStructure,
    maps: &[Vec<Option<(usize, VertexId)>>],
    diagrams: &[Option<ChordDiagram>],
    inner: &[usize],
    members: &[usize],
) -> Result<Vec<VertexId>> {
    let fin = |t: usize, v: VertexId| maps[t][v].map(|(_, x)| x);
    // label -> (other node, other label) across contracted edges
    let across = |t: usize, v: VertexId| {
        inner.iter().find_map(|&i| {
            let e = theta.edges[i];
            if e.s == t && e.ls == v {
                Some((e.t, e.lt))
            } else if e.t == t && e.lt == v {
                Some((e.s, e.ls))
            } else {
                None
            }
        })
    };
    fn walk(
        t: usize,
        skip: Option<VertexId>,
        diagrams: &[Option<ChordDiagram>],
        fin: &dyn Fn(usize, VertexId) -> Option<VertexId>,
        across: &dyn Fn(usize, VertexId) -> Option<(usize, VertexId)>,
    ) -> Result<Vec<VertexId>> {
        let cyc = &diagrams[t].as_ref().unwrap().cycle;
        let start = match skip {
            Some(p) => cyc.iter().position(|&v| v == p).unwrap() + 1,
            None => cyc.iter().position(|&v| across(t, v).is_none()).unwrap(),
        };
        let len = if skip.is_some() { cyc.len() - 1 } else { cyc.len() };
        let mut out: Vec<VertexId> = Vec::new();
        for j in 0..len {
            let v = cyc[(start + j) % cyc.len()];
            match across(t, v) {
                Some((s, u)) => {
                    let mut arc = walk(s, Some(u), diagrams, fin, across)?;
                    let Some(&prev) = out.last() else {
                        return invalid("glued label opens a cycle walk");
                    };
                    if arc.first() != Some(&prev) {
                        arc.reverse();
                    }
                    if arc.first() != Some(&prev) || arc.len() < 2 {
                        return invalid("glued arc does not meet its neighbours");
                    }
                    out.extend(arc[1..arc.len() - 1].iter().copied());
                }
                None => match fin(t, v) {
                    Some(x) => out.push(x),
                    None => return invalid("unglued vertex vanished"),
                },
            }
        }
        Ok(out)
    }
    walk(members[0], None, diagrams, &fin, &across)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard::*;
    use crate::sum::two_sum;

    #[test]
    fn cycle_is_one_type_one_piece() {
        let p = decompose_to_structure(&cycle(8), 3, &mut Budget::unlimited()).unwrap();
        assert_eq!(p.pieces.len(), 1);
        assert_eq!(p.depth, 1);
        assert!(matches!(p.pieces[0].kind, PieceKind::TypeOne(_)));
        assert!(p.pieces[0].members.len() >= 2);
    }

    #[test]
    fn k23_is_one_c2_piece() {
        let p = decompose_to_structure(&complete_bipartite(2, 3), 4, &mut Budget::unlimited()).unwrap();
        assert_eq!(p.pieces.len(), 1);
        assert_eq!(p.pieces[0].kind, PieceKind::C2(CClass::K23));
        assert!(decompose_to_structure(&complete_bipartite(2, 3), 3, &mut Budget::unlimited()).is_err());
    }

    #[test]
    fn two_k23_give_depth_two() {
        let k = complete_bipartite(2, 3);
        let g = two_sum(&k, 2, &k, 4).unwrap().graph;
        // the sum is K_{2,4}, so n = 4 is refused
        assert!(decompose_to_structure(&g, 4, &mut Budget::unlimited()).is_err());
        let p = decompose_to_structure(&g, 5, &mut Budget::unlimited()).unwrap();
        assert_eq!(p.depth, 2);
        assert_eq!(p.pieces.len(), 2);
        let back = p.theta.tree_sum().unwrap().labeled.graph;
        assert!(crate::iso::are_isomorphic(&back, &g).unwrap());
    }

    #[test]
    fn merged_runs_recompose_and_are_type_one() {
        for n in 3..=7 {
            for g in crate::enumerate::biconnected_graphs(n) {
                let Ok(p) = decompose_to_structure(&g, 4, &mut Budget::unlimited()) else { continue };
                let back = p.theta.tree_sum().unwrap().labeled.graph;
                assert!(crate::iso::are_isomorphic(&back, &g).unwrap());
                assert!(p.depth < 2 * 4);
                for piece in &p.pieces {
                    if let PieceKind::TypeOne(d) = &piece.kind {
                        assert!(is_type_one(d));
                        assert_eq!(d.graph().unwrap(), piece.piece.graph);
                    }
                }
            }
        }
    }
}
