use alloc::vec;
use alloc::vec::Vec;

use crate::error::{bad_param, invalid, Error, Result};
use crate::graph::{edge_key, is_internally_3connected, is_two_connected, Graph, VertexId};
use crate::iso::are_isomorphic;
use crate::standard::{complete_bipartite, k33_minus_e};

/// Membership in the class C: small cycles, `K_4\e`, `K_{2,3}`, and
/// internally 3-connected graphs.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CClass {
    C3,
    C4,
    C5,
    C6,
    K4e,
    K23,
    Internally3Connected,
    None,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CTier {
    /// `C_3..C_6`, `K_4\e`, `K_{3,3}\e`.
    One,
    Two,
}

impl CClass {
    pub fn tier(self, g: &Graph) -> Option<CTier> {
        match self {
            CClass::None => None,
            CClass::K23 => Some(CTier::Two),
            CClass::Internally3Connected => {
                if g.n() == 6 && g.m() == 8 && are_isomorphic(g, &k33_minus_e()).unwrap_or(false) {
                    Some(CTier::One)
                } else {
                    Some(CTier::Two)
                }
            }
            _ => Some(CTier::One),
        }
    }
}

pub fn in_class_c(g: &Graph) -> CClass {
    let n = g.n();
    if g.is_connected() && n >= 3 && (0..n).all(|v| g.degree(v) == 2) {
        return match n {
            3 => CClass::C3,
            4 => CClass::C4,
            5 => CClass::C5,
            6 => CClass::C6,
            _ => CClass::None,
        };
    }
    if n == 4 && g.m() == 5 {
        return CClass::K4e;
    }
    if n == 5 && g.m() == 6 && are_isomorphic(g, &complete_bipartite(2, 3)).unwrap_or(false) {
        return CClass::K23;
    }
    if is_internally_3connected(g) {
        return CClass::Internally3Connected;
    }
    CClass::None
}

/// A split of `G` along joins `x, y` into `G_1` (new vertex `z1`) and
/// `G_2` (new vertex `z2`) whose parallel 2-sum is `G`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CutSplit {
    pub x: VertexId,
    pub y: VertexId,
    pub g1: Graph,
    pub z1: VertexId,
    pub g2: Graph,
    pub z2: VertexId,
    /// Vertex of `G` to its id in `G_1` / `G_2`, if present there.
    pub map1: Vec<Option<VertexId>>,
    pub map2: Vec<Option<VertexId>>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CutClassification {
    Admissible(CutSplit),
    /// `G = K_{2,3}`, three or more components.
    K23,
    /// `G = K_4\e`, two components and `xy` an edge.
    K4e,
    /// Two components, `xy` not an edge, one component a single vertex.
    IsolatedVertex,
    /// `G - {x, y}` is connected.
    NotACut,
}

fn side(g: &Graph, x: VertexId, y: VertexId, part: &[VertexId], with_xy: bool) -> (Graph, VertexId, Vec<Option<VertexId>>) {
    let mut keep: Vec<VertexId> = part.to_vec();
    keep.push(x);
    keep.push(y);
    keep.sort_unstable();
    let mut map = vec![None; g.n()];
    for (i, &v) in keep.iter().enumerate() {
        map[v] = Some(i);
    }
    let z = keep.len();
    let xy = edge_key(x, y);
    let mut e = Vec::new();
    for (u, v) in g.edges() {
        if let (Some(a), Some(b)) = (map[u], map[v]) {
            if (u, v) != xy {
                e.push((a, b));
            }
        }
    }
    if with_xy {
        e.push((map[x].unwrap(), map[y].unwrap()));
    }
    e.push((map[x].unwrap(), z));
    e.push((map[y].unwrap(), z));
    (Graph::from_edges(z + 1, &e).expect("split edges are valid"), z, map)
}

fn split(g: &Graph, x: VertexId, y: VertexId, a: &[VertexId], b: &[VertexId], d1: bool, d2: bool) -> CutSplit {
    let (g1, z1, map1) = side(g, x, y, a, d1);
    let (g2, z2, map2) = side(g, x, y, b, d2);
    CutSplit { x, y, g1, z1, g2, z2, map1, map2 }
}

fn cut_components(g: &Graph, x: VertexId, y: VertexId) -> Vec<Vec<VertexId>> {
    let mut removed = vec![false; g.n()];
    removed[x] = true;
    removed[y] = true;
    g.components_avoiding(&removed)
}

/// Edges with at least one end in `part`.
fn edges_touching(g: &Graph, part: &[VertexId]) -> usize {
    let mut inside = vec![false; g.n()];
    for &v in part {
        inside[v] = true;
    }
    g.edges().into_iter().filter(|&(u, v)| inside[u] || inside[v]).count()
}

/// Runs the split used in the proof that non-admissible cuts are one of
/// three exceptions: components are sorted by size and the two smallest are
/// separated from the rest (or, with two components, one from the other).
/// If that split is not admissible, no split is.
pub fn classify_2cut(g: &Graph, x: VertexId, y: VertexId) -> Result<CutClassification> {
    if x >= g.n() || y >= g.n() {
        return Err(Error::UnknownVertex(x.max(y)));
    }
    if x == y {
        return bad_param("cut needs two distinct vertices");
    }
    if !is_two_connected(g) {
        return invalid("graph must be 2-connected");
    }
    let mut comps = cut_components(g, x, y);
    let k = comps.len();
    if k < 2 {
        return Ok(CutClassification::NotACut);
    }
    comps.sort_by_key(|c| (c.len(), c[0]));
    let m = g.m();
    let xy = g.has_edge(x, y);
    let (a, b, d1, d2): (Vec<VertexId>, Vec<VertexId>, bool, bool) = if k >= 3 {
        (comps[..2].concat(), comps[2..].concat(), false, xy)
    } else {
        (comps[0].clone(), comps[1].clone(), xy, false)
    };
    let s1 = edges_touching(g, &a) + 2 + usize::from(d1);
    let s2 = edges_touching(g, &b) + 2 + usize::from(d2);
    if s1 < m && s2 < m {
        return Ok(CutClassification::Admissible(split(g, x, y, &a, &b, d1, d2)));
    }
    Ok(if k >= 3 {
        CutClassification::K23
    } else if xy {
        CutClassification::K4e
    } else {
        CutClassification::IsolatedVertex
    })
}

/// The lexicographically least admissible cut `(x, y)` avoiding `labels`,
/// with the least component grouping (component 0 always on the `G_1`
/// side) and the first workable choice of join-edge sides.
pub fn find_admissible_2cut(g: &Graph, labels: &[VertexId]) -> Result<Option<CutSplit>> {
    let n = g.n();
    let m = g.m();
    let mut is_label = vec![false; n];
    for &l in labels {
        if l >= n {
            return Err(Error::UnknownVertex(l));
        }
        is_label[l] = true;
    }
    for x in 0..n {
        if is_label[x] {
            continue;
        }
        for y in x + 1..n {
            if is_label[y] {
                continue;
            }
            let comps = cut_components(g, x, y);
            let k = comps.len();
            if k < 2 {
                continue;
            }
            if k > 24 {
                return bad_param("too many components at one cut pair");
            }
            let sizes: Vec<usize> = comps.iter().map(|c| edges_touching(g, c)).collect();
            let xy = g.has_edge(x, y);
            let options: &[(bool, bool)] = if xy { &[(true, false), (false, true), (true, true)] } else { &[(false, false)] };
            for mask in 1u32..(1 << k) - 1 {
                if mask & 1 == 0 {
                    continue;
                }
                let ea: usize = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| sizes[i]).sum();
                let eb: usize = sizes.iter().sum::<usize>() - ea;
                for &(d1, d2) in options {
                    if ea + 2 + usize::from(d1) < m && eb + 2 + usize::from(d2) < m {
                        let a: Vec<VertexId> = (0..k).filter(|&i| mask >> i & 1 == 1).flat_map(|i| comps[i].clone()).collect();
                        let b: Vec<VertexId> = (0..k).filter(|&i| mask >> i & 1 == 0).flat_map(|i| comps[i].clone()).collect();
                        return Ok(Some(split(g, x, y, &a, &b, d1, d2)));
                    }
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;
    use crate::standard::*;
    use crate::sum::two_sum_glue;

    fn reassemble(g: &Graph, s: &CutSplit) -> Graph {
        let sum = two_sum_glue(&s.g1, s.z1, &s.g2, s.z2, (s.map1[s.x].unwrap(), s.map2[s.x].unwrap())).unwrap();
        assert!(s.g1.m() < g.m() && s.g2.m() < g.m());
        sum.graph
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_2cut(&complete_bipartite(2, 3), 0, 1).unwrap(), CutClassification::K23);
        assert_eq!(classify_2cut(&k4_minus_e(), 0, 1).unwrap(), CutClassification::K4e);
        let c8 = cycle(8);
        match classify_2cut(&c8, 0, 4).unwrap() {
            CutClassification::Admissible(s) => {
                assert_eq!((s.g1.m(), s.g2.m()), (6, 6));
                assert!(are_isomorphic(&reassemble(&c8, &s), &c8).unwrap());
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(classify_2cut(&cycle(5), 0, 2).unwrap(), CutClassification::IsolatedVertex);
        assert_eq!(classify_2cut(&complete(4), 0, 1).unwrap(), CutClassification::NotACut);
    }

    #[test]
    fn admissible_cut_examples() {
        let c7 = cycle(7);
        let s = find_admissible_2cut(&c7, &[]).unwrap().unwrap();
        assert!(are_isomorphic(&reassemble(&c7, &s), &c7).unwrap());
        assert!(find_admissible_2cut(&cycle(6), &[0, 2, 4]).unwrap().is_none());
        assert!(find_admissible_2cut(&cycle(6), &[]).unwrap().is_some());
        assert!(find_admissible_2cut(&complete(4), &[]).unwrap().is_none());
    }

    #[test]
    fn class_examples() {
        assert_eq!(in_class_c(&cycle(5)), CClass::C5);
        assert_eq!(in_class_c(&cycle(5)).tier(&cycle(5)), Some(CTier::One));
        let k = k33_minus_e();
        assert_eq!(in_class_c(&k), CClass::Internally3Connected);
        assert_eq!(in_class_c(&k).tier(&k), Some(CTier::One));
        let p = petersen();
        assert_eq!(in_class_c(&p).tier(&p), Some(CTier::Two));
        assert_eq!(in_class_c(&cycle(7)), CClass::None);
        assert_eq!(in_class_c(&k4_minus_e()), CClass::K4e);
        assert_eq!(in_class_c(&complete_bipartite(2, 3)), CClass::K23);
    }
}
