//! Reading an augmentation presentation off an internally 3-connected graph.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::augment::{Addition, AugmentationPresentation};
use super::detect::{find_maximal_fans, find_maximal_strips};
use super::fan::Fan;
use super::interact::almost_disjoint;
use super::strip::{normal_form_strip, strip_from_host, Strip};
use crate::budget::Budget;
use crate::error::{bad_param, invalid, precondition, Result};
use crate::graph::{edge_key, is_internally_3connected, Graph, VertexId};
use crate::iso::isomorphism_colored;
use crate::minor::has_k2n_minor;

/// Largest graph the final isomorphism check is attempted on.
pub const ROUND_TRIP_LIMIT: usize = 128;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtractOptions {
    /// Strips shorter than this stay in the base.
    pub strip_threshold: usize,
    /// Check the `K_{2,n}`-free precondition with the exact detector.
    pub check_minor_free: bool,
}

impl Default for ExtractOptions {
    fn default() -> Self {
        ExtractOptions { strip_threshold: 8, check_minor_free: true }
    }
}

/// One step of a strip reduction, on the strip's own vertex ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AuditOp {
    DeleteEdge(VertexId, VertexId),
    /// Contract the edge, keeping the first vertex.
    Contract(VertexId, VertexId),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extraction {
    pub presentation: AugmentationPresentation,
    /// Host id of each base vertex.
    pub base_vertices: Vec<VertexId>,
    /// Host id of each local vertex, per addition.
    pub addition_vertices: Vec<Vec<VertexId>>,
    /// Per strip addition (in order, local ids), the script taking it to
    /// the eight-vertex normal form, if it has two interior independent
    /// chords.
    pub scripts: Vec<Option<Vec<AuditOp>>>,
}

/// Peels maximal strips of length at least the threshold, then maximal
/// nontrivial fans, trimming ends that would break the corner rule. What
/// is left is the base. `augment` of the result is checked isomorphic to
/// `g`.
pub fn extract_augmentation(g: &Graph, n: usize, opts: ExtractOptions, budget: &mut Budget) -> Result<Extraction> {
    if n == 0 {
        return bad_param("n must be positive");
    }
    if !is_internally_3connected(g) {
        return precondition("graph must be internally 3-connected");
    }
    if opts.check_minor_free && has_k2n_minor(g, n, budget)?.is_some() {
        return precondition("graph has a K_{2,n} minor");
    }
    let mut strips: Vec<Strip> = Vec::new();
    if opts.strip_threshold > 0 {
        let mut cands = find_maximal_strips(g, opts.strip_threshold, budget)?;
        // longest first; among equals, corners of higher degree stay in the base
        let weight = |s: &Strip| s.corners().iter().map(|&v| g.degree(v)).sum::<usize>();
        cands.sort_by(|a, b| (b.length(), weight(b)).cmp(&(a.length(), weight(a))));
        for s in cands {
            if let Some(t) = fit_strip(g, s, &strips, opts.strip_threshold) {
                strips.push(t);
            }
        }
    }
    let mut fans: Vec<Fan> = Vec::new();
    let mut cands = find_maximal_fans(g);
    cands.sort_by(|a, b| b.length().cmp(&a.length()));
    for f in cands {
        if let Some(t) = fit_fan(g, f, &strips, &fans) {
            fans.push(t);
        }
    }
    let mut additions: Vec<Addition> = strips.into_iter().map(Addition::Strip).collect();
    additions.extend(fans.into_iter().map(Addition::Fan));
    let mut interior = vec![false; g.n()];
    let mut owned: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    for a in &additions {
        for v in a.interior() {
            interior[v] = true;
        }
        owned.extend(a.graph().edges());
    }
    let base_vertices: Vec<VertexId> = (0..g.n()).filter(|&v| !interior[v]).collect();
    let bpos = |v: VertexId| base_vertices.binary_search(&v).unwrap();
    let base_edges: Vec<(VertexId, VertexId)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| !interior[u] && !interior[v] && !owned.contains(&(u, v)))
        .map(|(u, v)| (bpos(u), bpos(v)))
        .collect();
    let base = Graph::from_edges(base_vertices.len(), &base_edges)?;
    let mut presentation = AugmentationPresentation::trivial(base);
    let mut addition_vertices = Vec::new();
    let mut scripts = Vec::new();
    for a in &additions {
        let (local, old) = a.localize();
        if let Addition::Strip(s) = &local {
            scripts.push(normal_form_script(s));
        }
        let ids = local.corners().iter().map(|&c| (c, bpos(old[c]))).collect();
        presentation.additions.push(local);
        presentation.identification.push(ids);
        addition_vertices.push(old);
    }
    let back = presentation.augment()?;
    if g.n() <= ROUND_TRIP_LIMIT && isomorphism_colored(&back, &[], g, &[], ROUND_TRIP_LIMIT)?.is_none() {
        return invalid("extracted presentation does not rebuild the graph");
    }
    Ok(Extraction { presentation, base_vertices, addition_vertices, scripts })
}

/// The strip, or a trimmed copy of it, if it can join `chosen`: almost
/// disjoint from each, with corners not used by any.
fn fit_strip(g: &Graph, s: Strip, chosen: &[Strip], min_length: usize) -> Option<Strip> {
    let used: BTreeSet<VertexId> = chosen.iter().flat_map(|t| t.corners()).collect();
    let ok = |t: &Strip| {
        t.length() >= min_length
            && t.is_strip_of(g)
            && t.corners().iter().all(|c| !used.contains(c))
            && chosen.iter().all(|u| almost_disjoint(&Addition::Strip(t.clone()), &Addition::Strip(u.clone())))
    };
    if ok(&s) {
        return Some(s);
    }
    // drop up to two vertices from each end of each path
    let mut best: Option<Strip> = None;
    for cut in trims() {
        let [f1, l1, f2, l2] = cut;
        if f1 + l1 + 2 > s.p1.len() || f2 + l2 + 2 > s.p2.len() {
            continue;
        }
        let p1 = s.p1[f1..s.p1.len() - l1].to_vec();
        let p2 = s.p2[f2..s.p2.len() - l2].to_vec();
        if let Ok(t) = strip_from_host(g, p1, p2) {
            if ok(&t) && best.as_ref().is_none_or(|b| t.length() > b.length()) {
                best = Some(t);
            }
        }
    }
    best
}

/// Trim amounts `[p1 front, p1 back, p2 front, p2 back]`, fewest first.
fn trims() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                for d in 0..3 {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out.sort_by_key(|t| t.iter().sum::<usize>());
    out
}

/// The fan, possibly with rim ends pulled inwards, if it fits the corner
/// rule against the chosen strips and fans.
fn fit_fan(g: &Graph, f: Fan, strips: &[Strip], fans: &[Fan]) -> Option<Fan> {
    let strip_corners: BTreeSet<VertexId> = strips.iter().flat_map(|s| s.corners()).collect();
    let centers: BTreeSet<VertexId> = fans.iter().map(|f| f.center).collect();
    let ends: BTreeSet<VertexId> = fans.iter().flat_map(|f| [f.rim[0], *f.rim.last().unwrap()]).collect();
    if ends.contains(&f.center) {
        return None;
    }
    let blocked = |v: VertexId| strip_corners.contains(&v) || centers.contains(&v) || ends.contains(&v);
    let spokes: Vec<usize> = (0..f.rim.len()).filter(|&i| g.has_edge(f.center, f.rim[i])).collect();
    let k = spokes.len();
    for (lo, hi) in [(0, k - 1), (1, k - 1), (0, k - 2), (1, k - 2)] {
        if hi < lo + 2 {
            continue;
        }
        let rim = f.rim[spokes[lo]..=spokes[hi]].to_vec();
        if blocked(rim[0]) || blocked(*rim.last().unwrap()) {
            continue;
        }
        let Ok(t) = Fan::from_host(g, f.center, rim) else { continue };
        let a = Addition::Fan(t.clone());
        if t.is_fan_of(g)
            && strips.iter().all(|s| almost_disjoint(&a, &Addition::Strip(s.clone())))
            && fans.iter().all(|h| almost_disjoint(&a, &Addition::Fan(h.clone())))
        {
            return Some(t);
        }
    }
    None
}

/// Deletes every chord but two independent interior ones and contracts
/// the boundary paths down to the eight-vertex normal form. `None` when
/// the strip has no such pair of chords.
pub fn normal_form_script(s: &Strip) -> Option<Vec<AuditOp>> {
    let (l1, l2) = (s.p1.len() - 1, s.p2.len() - 1);
    let chords = s.chords();
    let inner: Vec<(usize, usize)> = chords.iter().copied().filter(|&(i, j)| 0 < i && i < l1 && 0 < j && j < l2).collect();
    let mut pair = None;
    'outer: for (x, &c1) in inner.iter().enumerate() {
        for &c2 in &inner[x + 1..] {
            if c1.0 < c2.0 && c1.1 < c2.1 {
                pair = Some((c1, c2));
                break 'outer;
            }
        }
    }
    let ((i1, j1), (i2, j2)) = pair?;
    let mut ops = Vec::new();
    for &(i, j) in &chords {
        if (i, j) != (i1, j1) && (i, j) != (i2, j2) {
            ops.push(AuditOp::DeleteEdge(s.p1[i], s.p2[j]));
        }
    }
    for (path, keep) in [(&s.p1, [0, i1, i2, l1]), (&s.p2, [0, j1, j2, l2])] {
        let mut last = path[0];
        for (k, &v) in path.iter().enumerate() {
            if keep.contains(&k) {
                last = v;
            } else {
                ops.push(AuditOp::Contract(last, v));
            }
        }
    }
    Some(ops)
}

/// Applies a script to the strip's graph and checks that the result is the
/// normal form, minus whichever of `ab`, `cd` the strip lacks, with the
/// corners in place.
pub fn check_normal_form_script(s: &Strip, ops: &[AuditOp]) -> bool {
    let mut edges: BTreeSet<(VertexId, VertexId)> = s.graph.edge_set();
    let mut alive: BTreeSet<VertexId> = s.vertices().into_iter().collect();
    for &op in ops {
        match op {
            AuditOp::DeleteEdge(u, v) => {
                if !edges.remove(&edge_key(u, v)) {
                    return false;
                }
            }
            AuditOp::Contract(keep, gone) => {
                if !edges.contains(&edge_key(keep, gone)) || !alive.remove(&gone) {
                    return false;
                }
                let moved: Vec<(VertexId, VertexId)> = edges.iter().copied().filter(|&(u, v)| u == gone || v == gone).collect();
                for (u, v) in moved {
                    edges.remove(&(u, v));
                    let w = if u == gone { v } else { u };
                    if w != keep {
                        edges.insert(edge_key(w, keep));
                    }
                }
            }
        }
    }
    let vs: Vec<VertexId> = alive.into_iter().collect();
    if vs.len() != 8 {
        return false;
    }
    let pos = |v: VertexId| vs.binary_search(&v).unwrap();
    let Ok(got) = Graph::from_edges(8, &edges.iter().map(|&(u, v)| (pos(u), pos(v))).collect::<Vec<_>>()) else {
        return false;
    };
    let [a, b, c, d] = s.corners();
    let nf = normal_form_strip();
    let [na, nb, nc, nd] = nf.corners();
    let mut want = nf.graph.clone();
    for (x, y, nx, ny) in [(a, b, na, nb), (c, d, nc, nd)] {
        if !s.graph.has_edge(x, y) {
            want = want.without_edge(nx, ny).unwrap();
        }
    }
    let mut c1 = vec![0; 8];
    let mut c2 = vec![0; 8];
    for (k, (&h, &w)) in [a, b, c, d].iter().zip(&[na, nb, nc, nd]).enumerate() {
        c1[pos(h)] = k + 1;
        c2[w] = k + 1;
    }
    matches!(isomorphism_colored(&got, &c1, &want, &c2, 8), Ok(Some(_)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fanstrip::{make_fan, make_j, regular_strip};
    use crate::iso::are_isomorphic;
    use crate::standard::complete;

    fn loose() -> ExtractOptions {
        ExtractOptions { strip_threshold: 4, check_minor_free: false }
    }

    #[test]
    fn k4_is_its_own_base() {
        let e = extract_augmentation(&complete(4), 3, ExtractOptions::default(), &mut Budget::unlimited()).unwrap();
        assert!(e.presentation.additions.is_empty());
        assert_eq!(e.presentation.base, complete(4));
    }

    #[test]
    fn j15_gives_one_strip() {
        let g = make_j(1, 5).unwrap();
        let e = extract_augmentation(&g, 5, loose(), &mut Budget::unlimited()).unwrap();
        assert_eq!(e.presentation.additions.len(), 1);
        assert_eq!(e.base_vertices, vec![0, 1, 2, 3]);
        let ops = e.scripts[0].as_ref().unwrap();
        let Addition::Strip(s) = &e.presentation.additions[0] else { panic!() };
        assert!(check_normal_form_script(s, ops));
    }

    #[test]
    fn k5_with_fan_round_trips() {
        let f = make_fan(3, &[]).unwrap();
        let [c, x, y] = f.corners();
        let p = AugmentationPresentation {
            base: complete(5),
            additions: vec![Addition::Fan(f)],
            identification: vec![vec![(c, 0), (x, 1), (y, 2)]],
        };
        let g = p.augment().unwrap();
        let e = extract_augmentation(&g, 6, loose(), &mut Budget::unlimited()).unwrap();
        assert_eq!(e.presentation.additions.len(), 1);
        assert!(are_isomorphic(&e.presentation.augment().unwrap(), &g).unwrap());
    }

    #[test]
    fn regular_strip_script() {
        let s = regular_strip(6).unwrap();
        let ops = normal_form_script(&s).unwrap();
        assert!(check_normal_form_script(&s, &ops));
        assert!(!check_normal_form_script(&s, &ops[1..]));
    }
}
