//! Direct searches that capture fans, strips and long paths.

use alloc::vec;
use alloc::vec::Vec;

use super::augment::Addition;
use super::fan::Fan;
use super::strip::Strip;
use crate::budget::Budget;
use crate::combinat::{is_subdivision_of_3connected, nonseparating_induced_path};
use crate::error::{precondition, Error, Result};
use crate::graph::{Graph, PathRef, VertexId};

/// The longest stretch of `p` that no vertex outside `p` other than `x`
/// touches, if `x` has at least `m` neighbours on it.
pub fn neighbor_run(g: &Graph, p: &PathRef, x: VertexId, m: usize) -> Result<Option<PathRef>> {
    let vs = &p.vertices;
    if !p.is_path_in(g) || !p.is_induced_in(g) {
        return precondition("path must be an induced path");
    }
    if vs.contains(&x) {
        return precondition("x must lie off the path");
    }
    let on_p = |w: VertexId| vs.contains(&w);
    let clean: Vec<bool> = vs.iter().map(|&v| g.neighbors(v).iter().all(|&w| w == x || on_p(w))).collect();
    let mut best: Option<(usize, usize, usize)> = None;
    let mut i = 0;
    while i < vs.len() {
        if !clean[i] {
            i += 1;
            continue;
        }
        let mut j = i;
        while j + 1 < vs.len() && clean[j + 1] {
            j += 1;
        }
        let hits = (i..=j).filter(|&k| g.has_edge(x, vs[k])).count();
        if best.is_none_or(|b| hits > b.0) {
            best = Some((hits, i, j));
        }
        i = j + 1;
    }
    Ok(match best {
        Some((hits, i, j)) if hits >= m && m > 0 => Some(PathRef::new(vs[i..=j].to_vec())),
        _ => None,
    })
}

/// How two edges between two paths sit: by positions `(i, j)`, `(k, l)`
/// on `P` and `Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgePair {
    /// Strictly increasing in both coordinates, or decreasing in both.
    Comparable,
    /// They share an end.
    Adjacent,
    /// Crossing with `(i - k)(j - l) = -1`.
    SmallCross,
    BigCross,
}

pub fn classify_edge_pair((i, j): (usize, usize), (k, l): (usize, usize)) -> EdgePair {
    let (di, dj) = (i as i64 - k as i64, j as i64 - l as i64);
    if di == 0 || dj == 0 {
        EdgePair::Adjacent
    } else if di * dj > 0 {
        EdgePair::Comparable
    } else if di * dj == -1 {
        EdgePair::SmallCross
    } else {
        EdgePair::BigCross
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Capture {
    pub p: PathRef,
    pub q: PathRef,
    pub addition: Addition,
}

/// Subpaths `P*`, `Q*` whose interiors see only `P* ∪ Q*` and which,
/// with the edges between them, form a fan or strip of length `>= m`.
/// Exhaustive over subpath pairs; pairs containing a big cross are
/// skipped before the strip check.
pub fn capture_between_paths(g: &Graph, p: &PathRef, q: &PathRef, m: usize, budget: &mut Budget) -> Result<Option<Capture>> {
    let (pv, qv) = (&p.vertices, &q.vertices);
    if !p.is_path_in(g) || !p.is_induced_in(g) || !q.is_path_in(g) || !q.is_induced_in(g) {
        return precondition("P and Q must be induced paths");
    }
    let mut seen = vec![0u8; g.n()];
    for &v in pv.iter().chain(qv) {
        seen[v] += 1;
    }
    if seen.iter().any(|&c| c != 1) {
        return precondition("P and Q must partition the vertices");
    }
    let cross: Vec<(usize, usize)> = (0..pv.len())
        .flat_map(|i| (0..qv.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| g.has_edge(pv[i], qv[j]))
        .collect();
    for i1 in 0..pv.len() {
        for j1 in i1..pv.len() {
            for i2 in 0..qv.len() {
                for j2 in i2..qv.len() {
                    budget.tick()?;
                    let ps = &pv[i1..=j1];
                    let qs = &qv[i2..=j2];
                    let inside = |w: VertexId| ps.contains(&w) || qs.contains(&w);
                    let interior_ok = ps[1..ps.len().saturating_sub(1).max(1)]
                        .iter()
                        .chain(qs[1..qs.len().saturating_sub(1).max(1)].iter())
                        .all(|&v| g.neighbors(v).iter().all(|&w| inside(w)));
                    if !interior_ok {
                        continue;
                    }
                    if let Some(a) = fan_or_strip(g, ps, qs, &cross, (i1, j1, i2, j2), m) {
                        return Ok(Some(Capture { p: PathRef::new(ps.to_vec()), q: PathRef::new(qs.to_vec()), addition: a }));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn fan_or_strip(
    g: &Graph,
    ps: &[VertexId],
    qs: &[VertexId],
    cross: &[(usize, usize)],
    (i1, j1, i2, j2): (usize, usize, usize, usize),
    m: usize,
) -> Option<Addition> {
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    for w in ps.windows(2).chain(qs.windows(2)) {
        edges.push((w[0], w[1]));
    }
    let local: Vec<(usize, usize)> = cross
        .iter()
        .filter(|&&(i, j)| (i1..=j1).contains(&i) && (i2..=j2).contains(&j))
        .map(|&(i, j)| (i - i1, j - i2))
        .collect();
    edges.extend(local.iter().map(|&(i, j)| (ps[i], qs[j])));
    let graph = Graph::from_edges(g.n(), &edges).ok()?;
    if ps.len() == 1 || qs.len() == 1 {
        let (c, rim) = if ps.len() == 1 { (ps[0], qs) } else { (qs[0], ps) };
        let f = Fan { graph, center: c, rim: rim.to_vec() };
        return (rim.len() >= 3 && f.validate().is_ok() && f.length() >= m).then_some(Addition::Fan(f));
    }
    let big = local.iter().enumerate().any(|(x, &e)| {
        local[x + 1..].iter().any(|&f| classify_edge_pair(e, f) == EdgePair::BigCross)
    });
    if big {
        return None;
    }
    for rev in [false, true] {
        let mut p2 = qs.to_vec();
        if rev {
            p2.reverse();
        }
        let s = Strip { graph: graph.clone(), p1: ps.to_vec(), p2 };
        if s.validate().is_ok() && s.length() >= m {
            return Some(Addition::Strip(s));
        }
    }
    None
}

/// The longest path of `G - H` whose vertices all have degree two in
/// `G - H`, if it has length at least `2m`.
pub fn degree2_path_near(g: &Graph, h: &[VertexId], m: usize) -> Result<Option<PathRef>> {
    let n = g.n();
    let mut in_h = vec![false; n];
    for &v in h {
        if v >= n {
            return Err(Error::UnknownVertex(v));
        }
        in_h[v] = true;
    }
    let rest: Vec<VertexId> = (0..n).filter(|&v| !in_h[v]).collect();
    if h.is_empty() || rest.is_empty() {
        return precondition("H and its complement must be nonempty");
    }
    let (hg, _) = g.induced(h);
    let (rg, _) = g.induced(&rest);
    if !hg.is_connected() || !rg.is_connected() {
        return precondition("H and G - H must be connected");
    }
    let deg = |v: VertexId| g.neighbors(v).iter().filter(|&&w| !in_h[w]).count();
    let two: Vec<bool> = (0..n).map(|v| !in_h[v] && deg(v) == 2).collect();
    let nbrs = |v: VertexId| -> Vec<VertexId> { g.neighbors(v).iter().copied().filter(|&w| two[w]).collect() };
    let mut seen = vec![false; n];
    let mut best: Option<Vec<VertexId>> = None;
    for v in 0..n {
        if !two[v] || seen[v] {
            continue;
        }
        // walk to one end of the run, then collect it
        let mut start = v;
        let mut prev = usize::MAX;
        let mut cyclic = false;
        loop {
            let next: Vec<VertexId> = nbrs(start).into_iter().filter(|&w| w != prev).collect();
            if next.is_empty() || (prev == usize::MAX && nbrs(start).len() == 1) {
                break;
            }
            if next[0] == v {
                cyclic = true;
                break;
            }
            prev = start;
            start = next[0];
        }
        let mut run = Vec::new();
        if cyclic {
            let mut comp = vec![v];
            let mut prev = v;
            let mut cur = nbrs(v)[0].min(nbrs(v)[1]);
            while cur != v {
                comp.push(cur);
                let next: Vec<VertexId> = nbrs(cur).into_iter().filter(|&w| w != prev).collect();
                prev = cur;
                cur = next[0];
            }
            let s = *comp.iter().min().unwrap();
            let k = comp.iter().position(|&w| w == s).unwrap();
            comp.rotate_left(k);
            run = comp;
        } else {
            let (mut prev, mut cur) = (usize::MAX, start);
            loop {
                run.push(cur);
                let next: Vec<VertexId> = nbrs(cur).into_iter().filter(|&w| w != prev).collect();
                if next.is_empty() {
                    break;
                }
                prev = cur;
                cur = next[0];
            }
        }
        for &w in &run {
            seen[w] = true;
        }
        if best.as_ref().is_none_or(|b| run.len() > b.len()) {
            best = Some(run);
        }
    }
    Ok(best.filter(|b| b.len() > 2 * m).map(PathRef::new))
}

/// An induced path of length at least `m` whose removal leaves `G`
/// connected. Endpoint pairs are tried farthest first with the bridge
/// improvement procedure; an exhaustive search over induced paths backs
/// it up.
pub fn long_nonseparating_path(g: &Graph, m: usize, budget: &mut Budget) -> Result<Option<PathRef>> {
    let n = g.n();
    if n == 0 {
        return Ok(None);
    }
    if is_subdivision_of_3connected(g) {
        let mut pairs: Vec<(usize, VertexId, VertexId)> = Vec::new();
        for x in 0..n {
            let d = g.distances(x);
            for y in x + 1..n {
                if d[y] != usize::MAX {
                    pairs.push((d[y], x, y));
                }
            }
        }
        pairs.sort_by(|a, b| b.0.cmp(&a.0).then((a.1, a.2).cmp(&(b.1, b.2))));
        for &(_, x, y) in &pairs {
            let p = nonseparating_induced_path(g, x, y, budget)?;
            if p.length() >= m {
                return Ok(Some(p));
            }
        }
    }
    let mut path = Vec::new();
    for s in 0..n {
        path.push(s);
        let found = grow(g, &mut path, m, budget)?;
        if found {
            return Ok(Some(PathRef::new(path)));
        }
        path.pop();
    }
    Ok(None)
}

fn grow(g: &Graph, path: &mut Vec<VertexId>, m: usize, budget: &mut Budget) -> Result<bool> {
    budget.tick()?;
    if path.len() > m {
        let mut removed = vec![false; g.n()];
        for &v in path.iter() {
            removed[v] = true;
        }
        if g.components_avoiding(&removed).len() <= 1 {
            return Ok(true);
        }
    }
    let u = *path.last().unwrap();
    for &w in g.neighbors(u) {
        if path.contains(&w) || path[..path.len() - 1].iter().any(|&x| g.has_edge(x, w)) {
            continue;
        }
        path.push(w);
        if grow(g, path, m, budget)? {
            return Ok(true);
        }
        path.pop();
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fanstrip::make_fan;
    use crate::standard::{complete, ladder, prism, wheel};

    #[test]
    fn fan_rim_is_one_run() {
        let f = make_fan(3, &[]).unwrap();
        let p = PathRef::new(f.rim.clone());
        let run = neighbor_run(&f.graph, &p, f.center, 3).unwrap().unwrap();
        assert_eq!(run.vertices, f.rim);
    }

    #[test]
    fn outside_vertex_splits_the_run() {
        // path 0-1-2-3-4, x = 5 on 1 and 3, y = 6 on 2
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (5, 1), (5, 3), (6, 2)]).unwrap();
        let p = PathRef::new(alloc::vec![0, 1, 2, 3, 4]);
        assert!(neighbor_run(&g, &p, 5, 2).unwrap().is_none());
        assert!(neighbor_run(&g, &p, 5, 1).unwrap().is_some());
    }

    #[test]
    fn ladder_is_captured_as_a_strip() {
        let g = ladder(6);
        let p = PathRef::new((0..6).collect());
        let q = PathRef::new((6..12).collect());
        let c = capture_between_paths(&g, &p, &q, 4, &mut Budget::unlimited()).unwrap().unwrap();
        assert!(matches!(c.addition, Addition::Strip(ref s) if s.length() >= 4));
    }

    #[test]
    fn fan_is_captured() {
        let f = make_fan(3, &[]).unwrap();
        let p = PathRef::new(f.rim.clone());
        let q = PathRef::new(alloc::vec![f.center]);
        let c = capture_between_paths(&f.graph, &p, &q, 3, &mut Budget::unlimited()).unwrap().unwrap();
        assert!(matches!(c.addition, Addition::Fan(ref x) if x.length() == 3));
    }

    #[test]
    fn wheel_rim_around_the_hub() {
        let g = wheel(6).unwrap();
        let p = degree2_path_near(&g, &[0], 2).unwrap().unwrap();
        assert_eq!(p.vertices.len(), 6);
        assert!(degree2_path_near(&complete(5), &[0], 1).unwrap().is_none());
    }

    #[test]
    fn long_paths() {
        let p = long_nonseparating_path(&complete(4), 1, &mut Budget::unlimited()).unwrap().unwrap();
        assert_eq!(p.length(), 1);
        let w = wheel(8).unwrap();
        let p = long_nonseparating_path(&w, 4, &mut Budget::unlimited()).unwrap().unwrap();
        assert!(p.length() >= 4 && !p.vertices.contains(&0));
        let g = prism();
        let p = long_nonseparating_path(&g, 2, &mut Budget::unlimited()).unwrap().unwrap();
        assert!(p.length() >= 2 && p.is_induced_in(&g));
    }
}
