//! Enumerating the maximal fans and strips of a graph.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::fan::Fan;
use super::strip::{strip_from_host, strip_on, Strip};
use crate::bits::{self, BitGraph};
use crate::budget::Budget;
use crate::error::{bad_param, Result};
use crate::graph::{Graph, VertexId};

/// All maximal nontrivial fans, sorted by (center, rim).
///
/// For each center `z` the rim comes from a maximal run of vertices of
/// degree two in `G - z`, trimmed to its first and last neighbour of `z`.
/// When `G - z` has a cycle of such vertices (a subdivided wheel) one
/// opening of the cycle is reported: it starts at the smallest neighbour
/// of `z` and runs towards the smaller of its two cycle neighbours.
pub fn find_maximal_fans(g: &Graph) -> Vec<Fan> {
    let mut fans: Vec<Fan> = Vec::new();
    for z in 0..g.n() {
        for seq in runs_around(g, z) {
            let hits: Vec<usize> = (0..seq.len()).filter(|&i| g.has_edge(z, seq[i])).collect();
            let (Some(&s), Some(&t)) = (hits.first(), hits.last()) else { continue };
            if t < s + 2 {
                continue;
            }
            if let Ok(f) = Fan::from_host(g, z, seq[s..=t].to_vec()) {
                if f.is_nontrivial() && f.is_fan_of(g) {
                    fans.push(f);
                }
            }
        }
    }
    let edge_sets: Vec<BTreeSet<(VertexId, VertexId)>> = fans.iter().map(|f| f.graph.edge_set()).collect();
    let mut keep: Vec<Fan> = Vec::new();
    for (i, f) in fans.iter().enumerate() {
        let contained = (0..fans.len()).any(|j| {
            j != i
                && edge_sets[i].is_subset(&edge_sets[j])
                && (edge_sets[i] != edge_sets[j] || j < i)
        });
        if !contained {
            keep.push(f.clone());
        }
    }
    keep.sort_by(|a, b| (a.center, &a.rim).cmp(&(b.center, &b.rim)));
    keep
}

/// Vertex sequences `x, v1, ..., vk, y` in `G - z` whose inner vertices
/// have degree two there and whose ends do not (or the wheel opening).
fn runs_around(g: &Graph, z: VertexId) -> Vec<Vec<VertexId>> {
    let n = g.n();
    let deg = |v: VertexId| g.neighbors(v).iter().filter(|&&w| w != z).count();
    let others = |v: VertexId| -> Vec<VertexId> { g.neighbors(v).iter().copied().filter(|&w| w != z).collect() };
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for v in 0..n {
        if v == z || seen[v] || deg(v) != 2 {
            continue;
        }
        // collect the run containing v
        let mut run = vec![v];
        seen[v] = true;
        let mut cyclic = false;
        for dir in 0..2 {
            let mut prev = v;
            let mut cur = others(v)[dir];
            loop {
                if cur == v {
                    cyclic = true;
                    break;
                }
                if deg(cur) != 2 || seen[cur] {
                    if dir == 0 {
                        run.push(cur);
                    } else {
                        run.insert(0, cur);
                    }
                    break;
                }
                seen[cur] = true;
                if dir == 0 {
                    run.push(cur);
                } else {
                    run.insert(0, cur);
                }
                let nx = others(cur);
                let next = if nx[0] == prev { nx[1] } else { nx[0] };
                prev = cur;
                cur = next;
            }
            if cyclic {
                break;
            }
        }
        if cyclic {
            let Some(s) = run.iter().copied().filter(|&w| g.has_edge(z, w)).min() else { continue };
            let nb = others(s);
            let mut seq = vec![s];
            let (mut prev, mut cur) = (s, nb[0].min(nb[1]));
            while cur != s {
                seq.push(cur);
                let nx = others(cur);
                let next = if nx[0] == prev { nx[1] } else { nx[0] };
                prev = cur;
                cur = next;
            }
            out.push(seq);
        } else {
            if run.first() == run.last() {
                run.pop();
            }
            out.push(run);
        }
    }
    out
}

/// All maximal strips of length at least `min_length`, with corners
/// chosen by the degree convention, sorted by boundary.
///
/// Candidates are the components `I` of `G - Z` with `N(I) = Z` over
/// four-sets `Z`; for `min_length < 3` unions of two such components are
/// tried as well, since short strips may have a disconnected interior.
pub fn find_maximal_strips(g: &Graph, min_length: usize, budget: &mut Budget) -> Result<Vec<Strip>> {
    if min_length == 0 {
        return bad_param("strip length must be positive");
    }
    let n = g.n();
    if n < 6 {
        return Ok(Vec::new());
    }
    let bg = BitGraph::new(g)?;
    let full = bits::full(n);
    let mut found: Vec<Strip> = Vec::new();
    let mut seen: BTreeSet<(bits::Mask, bits::Mask)> = BTreeSet::new();
    let vs: Vec<VertexId> = (0..n).filter(|&v| g.degree(v) > 0).collect();
    let k = vs.len();
    for i0 in 0..k {
        for i1 in i0 + 1..k {
            for i2 in i1 + 1..k {
                for i3 in i2 + 1..k {
                    budget.tick()?;
                    let corners = [vs[i0], vs[i1], vs[i2], vs[i3]];
                    let z = bits::from_slice(&corners);
                    let comps = bg.components(full & !z);
                    let touching: Vec<bits::Mask> =
                        comps.into_iter().filter(|&c| bg.nbr_union(c) & !c & !z == 0).collect();
                    let mut interiors: Vec<bits::Mask> =
                        touching.iter().copied().filter(|&c| bg.nbr_union(c) & z == z).collect();
                    if min_length < 3 {
                        for x in 0..touching.len() {
                            for y in x + 1..touching.len() {
                                let u = touching[x] | touching[y];
                                if bg.nbr_union(u) & z == z {
                                    interiors.push(u);
                                }
                            }
                        }
                    }
                    for int in interiors {
                        if !seen.insert((z, int)) {
                            continue;
                        }
                        if let Some(s) = strip_on(g, &bits::to_vec(int), corners, budget)? {
                            if s.length() >= min_length && s.is_strip_of(g) {
                                found.push(s);
                            }
                        }
                    }
                }
            }
        }
    }
    let sets: Vec<BTreeSet<(VertexId, VertexId)>> = found.iter().map(|s| s.graph.edge_set()).collect();
    let mut maximal: Vec<Strip> = Vec::new();
    for (i, s) in found.iter().enumerate() {
        let contained = (0..found.len())
            .any(|j| j != i && sets[i].is_subset(&sets[j]) && (sets[i] != sets[j] || j < i));
        if !contained {
            maximal.push(apply_corner_convention(g, s.clone(), min_length));
        }
    }
    let mut out: Vec<Strip> = Vec::new();
    for s in maximal {
        if !out.iter().any(|t| t.graph.edge_set() == s.graph.edge_set()) {
            out.push(s);
        }
    }
    out.sort_by(|a, b| (&a.p1, &a.p2).cmp(&(&b.p1, &b.p2)));
    Ok(out)
}

/// A corner `u` with no neighbours outside the strip may give way to its
/// path neighbour `v`: `v` becomes the corner when `d(u) = 3 < d(v)`, `u`
/// stays when `d(u) = 2 < d(v)`, and otherwise the smaller id is kept.
pub fn apply_corner_convention(g: &Graph, mut s: Strip, min_length: usize) -> Strip {
    for pos in 0..4 {
        let corners = s.corners();
        let u = corners[pos];
        let vs = s.vertices();
        if g.neighbors(u).iter().any(|w| vs.binary_search(w).is_err()) {
            continue;
        }
        let (mut p1, mut p2) = (s.p1.clone(), s.p2.clone());
        let path = if pos == 0 || pos == 3 { &mut p1 } else { &mut p2 };
        if path.len() < 3 {
            continue;
        }
        let v = if pos <= 1 { path.remove(0); path[0] } else { path.pop(); *path.last().unwrap() };
        let (du, dv) = (g.degree(u), g.degree(v));
        let prefer_v = if dv > du && du == 3 {
            true
        } else if dv > du && du == 2 {
            false
        } else {
            v < u
        };
        if !prefer_v {
            continue;
        }
        if let Ok(t) = strip_from_host(g, p1, p2) {
            if t.length() == s.length() && t.length() >= min_length && t.is_strip_of(g) {
                s = t;
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fanstrip::{make_fan, make_j, Addition, AugmentationPresentation};
    use crate::standard::{complete, wheel};

    #[test]
    fn fan_in_k4_base() {
        let f = make_fan(3, &[]).unwrap();
        let [c, x, y] = f.corners();
        let p = AugmentationPresentation {
            base: complete(4),
            additions: vec![Addition::Fan(f)],
            identification: vec![vec![(c, 0), (x, 1), (y, 2)]],
        };
        let g = p.augment().unwrap();
        let fans = find_maximal_fans(&g);
        assert_eq!(fans.len(), 1);
        assert_eq!(fans[0].center, 0);
        assert_eq!(fans[0].length(), 3);
    }

    #[test]
    fn wheel_gives_one_fan_per_hub() {
        let g = wheel(7).unwrap();
        let fans = find_maximal_fans(&g);
        assert_eq!(fans.len(), 1);
        assert_eq!(fans[0].center, 0);
        assert_eq!(fans[0].rim.len(), 7);
    }

    #[test]
    fn complete_graphs_have_no_fans() {
        assert!(find_maximal_fans(&complete(5)).is_empty());
    }

    #[test]
    fn j14_strips_are_ring_rotations() {
        let g = make_j(1, 4).unwrap();
        let strips = find_maximal_strips(&g, 4, &mut Budget::unlimited()).unwrap();
        // the base closes the strip into a ring, so rotations of the
        // glued strip are strips too
        assert_eq!(strips.len(), 5);
        assert!(strips.iter().all(|s| s.is_strip_of(&g) && s.length() >= 4));
        let mut corners: Vec<Vec<VertexId>> = strips
            .iter()
            .map(|s| {
                let mut c = s.corners().to_vec();
                c.sort_unstable();
                c
            })
            .collect();
        corners.sort();
        assert_eq!(corners[0], vec![0, 1, 2, 3]);
    }
}
