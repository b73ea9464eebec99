//! How two fans or strips of one graph sit relative to each other.

use alloc::vec::Vec;

use super::augment::Addition;
use super::fan::Fan;
use super::strip::Strip;
use crate::error::{bad_param, precondition, Result};
use crate::graph::{Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Interaction {
    /// Every common vertex is a corner of both.
    AlmostDisjoint,
    /// One is embedded in the other, which is a strip.
    Embedded,
    /// A basic fan agrees with a strip.
    Agrees,
    /// Two fans with one center that are not almost disjoint.
    SameCenter,
    Violation,
}

fn is_addition_of(j: &Addition, host: &Graph) -> bool {
    match j {
        Addition::Fan(f) => f.validate().is_ok() && f.is_fan_of(host),
        Addition::Strip(s) => s.validate().is_ok() && s.is_strip_of(host),
    }
}

fn same(j1: &Addition, j2: &Addition) -> bool {
    j1.vertices() == j2.vertices() && j1.graph().edge_set() == j2.graph().edge_set()
}

pub fn almost_disjoint(j1: &Addition, j2: &Addition) -> bool {
    let v2 = j2.vertices();
    j1.vertices()
        .iter()
        .filter(|v| v2.binary_search(v).is_ok())
        .all(|&v| j1.is_corner(v) && j2.is_corner(v))
}

fn subgraph(small: &Graph, big: &Graph) -> bool {
    small.edges().iter().all(|&(u, v)| big.has_edge(u, v))
}

/// `j` is embedded in the strip `s`.
pub fn embedded_in(j: &Addition, s: &Strip) -> bool {
    if !subgraph(j.graph(), &s.graph) {
        return false;
    }
    let within = |vs: &[VertexId], p: &[VertexId]| vs.iter().all(|v| p.contains(v));
    match j {
        Addition::Fan(f) => {
            (within(&f.rim, &s.p1) && s.p2.contains(&f.center)) || (within(&f.rim, &s.p2) && s.p1.contains(&f.center))
        }
        Addition::Strip(t) => {
            let pos = |p: &[VertexId], v: VertexId| p.iter().position(|&x| x == v).unwrap();
            let check = |q1: &[VertexId], q2: &[VertexId]| {
                if !within(&t.p1, q1) || !within(&t.p2, q2) {
                    return false;
                }
                let [a, b, c, d] = t.corners();
                (pos(q1, a) <= pos(q1, d)) == (pos(q2, b) <= pos(q2, c))
            };
            check(&s.p1, &s.p2) || check(&s.p2, &s.p1)
        }
    }
}

/// A basic fan agrees with `s`: its rim reads `x1 x2 x3 x4` with the center
/// a corner of `s`, `x1` interior to `s`, `x4` not, and `x2` or `x3` a
/// corner of `s`.
pub fn agrees(f: &Fan, s: &Strip) -> bool {
    if !f.is_basic() || !s.is_corner(f.center) {
        return false;
    }
    let interior = s.interior();
    let inner = |v: VertexId| interior.contains(&v);
    let mut rim = f.rim.clone();
    for _ in 0..2 {
        let [x1, x2, x3, x4] = [rim[0], rim[1], rim[2], rim[3]];
        if inner(x1) && !inner(x4) && (s.is_corner(x2) || s.is_corner(x3)) {
            return true;
        }
        rim.reverse();
    }
    false
}

/// Classifies a pair of distinct fans or strips of `host`.
pub fn check_pairwise_interaction(host: &Graph, j1: &Addition, j2: &Addition) -> Result<Interaction> {
    if !is_addition_of(j1, host) || !is_addition_of(j2, host) {
        return precondition("both must be fans or strips of the host");
    }
    if same(j1, j2) {
        return bad_param("the two fans or strips must be distinct");
    }
    if almost_disjoint(j1, j2) {
        return Ok(Interaction::AlmostDisjoint);
    }
    for (x, y) in [(j1, j2), (j2, j1)] {
        if let Addition::Strip(s) = y {
            if embedded_in(x, s) {
                return Ok(Interaction::Embedded);
            }
            if let Addition::Fan(f) = x {
                if agrees(f, s) {
                    return Ok(Interaction::Agrees);
                }
            }
        }
    }
    if let (Addition::Fan(a), Addition::Fan(b)) = (j1, j2) {
        if a.center == b.center {
            return Ok(Interaction::SameCenter);
        }
    }
    Ok(Interaction::Violation)
}

/// Pairs of maximal nontrivial fans that share an interior vertex but not
/// a center; empty on graphs where fans behave.
pub fn fan_center_conflicts(fans: &[Fan]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..fans.len() {
        for j in i + 1..fans.len() {
            let shared = fans[i].interior().iter().any(|v| fans[j].interior().contains(v));
            if shared && fans[i].center != fans[j].center {
                out.push((i, j));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::fanstrip::{find_maximal_fans, make_j, strip_from_host};
    use crate::standard::ladder;

    #[test]
    fn disjoint_strips_are_almost_disjoint() {
        let g = make_j(2, 2).unwrap();
        let strips = crate::fanstrip::find_maximal_strips(&g, 2, &mut crate::budget::Budget::unlimited()).unwrap();
        let a = strips.iter().find(|s| s.corners().iter().all(|&v| v < 4)).unwrap();
        let b = strips.iter().find(|s| s.corners().iter().all(|&v| (4..8).contains(&v))).unwrap();
        let t = check_pairwise_interaction(&g, &Addition::Strip(a.clone()), &Addition::Strip(b.clone())).unwrap();
        assert_eq!(t, Interaction::AlmostDisjoint);
    }

    #[test]
    fn same_fan_twice_is_an_error() {
        let g = crate::standard::wheel(6).unwrap();
        let f = find_maximal_fans(&g).remove(0);
        let j = Addition::Fan(f);
        assert!(check_pairwise_interaction(&g, &j, &j).is_err());
    }

    #[test]
    fn sub_ladder_is_embedded() {
        let g = ladder(6);
        let top: Vec<VertexId> = (0..6).collect();
        let bottom: Vec<VertexId> = (6..12).collect();
        let big = strip_from_host(&g, top.clone(), bottom.clone()).unwrap();
        let small = strip_from_host(&g, top[1..5].to_vec(), bottom[1..5].to_vec()).unwrap();
        let t = check_pairwise_interaction(&g, &Addition::Strip(small), &Addition::Strip(big)).unwrap();
        assert_eq!(t, Interaction::Embedded);
    }

    /// Strip on `0 1 2 3 / 4 5 6 7` with chords 1-5, 2-6, 3-6 and a basic
    /// fan centered at `d = 3` with rim `6 7 8 9` hanging off `c = 7`.
    #[test]
    fn basic_fan_agrees_with_strip() {
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7), (0, 4), (3, 7), (1, 5), (2, 6), (3, 6)];
        let strip_edges = edges.clone();
        edges.extend([(7, 8), (8, 9), (3, 8), (3, 9), (9, 0)]);
        let g = Graph::from_edges(10, &edges).unwrap();
        let s = Strip { graph: Graph::from_edges(10, &strip_edges).unwrap(), p1: vec![0, 1, 2, 3], p2: vec![4, 5, 6, 7] };
        s.validate().unwrap();
        let f = Fan::from_host(&g, 3, vec![6, 7, 8, 9]).unwrap();
        assert!(f.is_basic());
        let t = check_pairwise_interaction(&g, &Addition::Fan(f), &Addition::Strip(s)).unwrap();
        assert_eq!(t, Interaction::Agrees);
    }
}
