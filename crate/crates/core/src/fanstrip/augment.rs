//! Augmentations: fans and strips glued onto a base graph at their corners.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::fan::{make_fan, Fan};
use super::strip::{random_strip, regular_strip, Strip};
use crate::error::{bad_param, invalid, Result};
use crate::graph::{is_internally_3connected, Graph, VertexId};
use crate::standard::{complete, prism, wheel};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Addition {
    Fan(Fan),
    Strip(Strip),
}

/// How a corner may be shared with corners of other additions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CornerRole {
    FanCenter,
    FanEnd,
    StripCorner,
}

impl Addition {
    pub fn corners(&self) -> Vec<VertexId> {
        match self {
            Addition::Fan(f) => f.corners().to_vec(),
            Addition::Strip(s) => s.corners().to_vec(),
        }
    }

    pub fn roles(&self) -> Vec<(VertexId, CornerRole)> {
        match self {
            Addition::Fan(f) => {
                let [c, x, y] = f.corners();
                vec![(c, CornerRole::FanCenter), (x, CornerRole::FanEnd), (y, CornerRole::FanEnd)]
            }
            Addition::Strip(s) => s.corners().iter().map(|&v| (v, CornerRole::StripCorner)).collect(),
        }
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        match self {
            Addition::Fan(f) => f.vertices(),
            Addition::Strip(s) => s.vertices(),
        }
    }

    pub fn interior(&self) -> Vec<VertexId> {
        let c = self.corners();
        self.vertices().into_iter().filter(|v| !c.contains(v)).collect()
    }

    pub fn graph(&self) -> &Graph {
        match self {
            Addition::Fan(f) => &f.graph,
            Addition::Strip(s) => &s.graph,
        }
    }

    pub fn is_corner(&self, v: VertexId) -> bool {
        self.corners().contains(&v)
    }

    pub fn length(&self) -> usize {
        match self {
            Addition::Fan(f) => f.length(),
            Addition::Strip(s) => s.length(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Addition::Fan(f) => f.validate(),
            Addition::Strip(s) => s.validate(),
        }
    }

    /// Relabels onto `0..k` in sorted vertex order; returns the old ids.
    pub fn localize(&self) -> (Addition, Vec<VertexId>) {
        let vs = self.vertices();
        let (graph, old) = self.graph().induced(&vs);
        let pos = |v: &VertexId| vs.binary_search(v).unwrap();
        let a = match self {
            Addition::Fan(f) => Addition::Fan(Fan { graph, center: pos(&f.center), rim: f.rim.iter().map(pos).collect() }),
            Addition::Strip(s) => Addition::Strip(Strip { graph, p1: s.p1.iter().map(pos).collect(), p2: s.p2.iter().map(pos).collect() }),
        };
        (a, old)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentationPresentation {
    pub base: Graph,
    pub additions: Vec<Addition>,
    /// For each addition, `(corner, base vertex)` pairs.
    pub identification: Vec<Vec<(VertexId, VertexId)>>,
}

/// Whether two corners may land on the same base vertex.
pub fn may_share(r1: CornerRole, r2: CornerRole) -> bool {
    use CornerRole::*;
    matches!((r1, r2), (FanCenter, FanCenter) | (FanCenter, StripCorner) | (StripCorner, FanCenter))
}

impl AugmentationPresentation {
    pub fn trivial(base: Graph) -> Self {
        AugmentationPresentation { base, additions: Vec::new(), identification: Vec::new() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.additions.len() != self.identification.len() {
            return invalid("one identification per addition");
        }
        let mut used: Vec<Vec<CornerRole>> = vec![Vec::new(); self.base.n()];
        for (add, ids) in self.additions.iter().zip(&self.identification) {
            add.validate()?;
            let mut corners = add.corners();
            corners.sort_unstable();
            let mut mapped: Vec<VertexId> = ids.iter().map(|p| p.0).collect();
            mapped.sort_unstable();
            if corners != mapped {
                return invalid("identification must cover exactly the corners");
            }
            let mut targets: Vec<VertexId> = ids.iter().map(|p| p.1).collect();
            targets.sort_unstable();
            if targets.windows(2).any(|w| w[0] == w[1]) || targets.iter().any(|&t| t >= self.base.n()) {
                return invalid("corners must map to distinct base vertices");
            }
            for (v, role) in add.roles() {
                let t = ids.iter().find(|p| p.0 == v).unwrap().1;
                if used[t].iter().any(|&r| !may_share(r, role)) {
                    return bad_param("shared corner breaks the center rule");
                }
                used[t].push(role);
            }
        }
        Ok(())
    }

    /// Base vertices first, then each addition's interior in order.
    pub fn augment(&self) -> Result<Graph> {
        Ok(self.augment_with_maps()?.0)
    }

    /// Also returns, per addition, the new id of each of its vertices.
    pub fn augment_with_maps(&self) -> Result<(Graph, Vec<Vec<(VertexId, VertexId)>>)> {
        self.validate()?;
        let mut next = self.base.n();
        let mut edges = self.base.edges();
        let mut maps = Vec::new();
        for (add, ids) in self.additions.iter().zip(&self.identification) {
            let mut map: Vec<(VertexId, VertexId)> = ids.clone();
            for v in add.interior() {
                map.push((v, next));
                next += 1;
            }
            map.sort_unstable();
            let f = |v: VertexId| map[map.binary_search_by_key(&v, |p| p.0).unwrap()].1;
            edges.extend(add.graph().edges().into_iter().map(|(u, v)| (f(u), f(v))));
            maps.push(map);
        }
        Ok((Graph::from_edges(next, &edges)?, maps))
    }

    /// In `A_m`: base on at most `m` vertices.
    pub fn in_a(&self, m: usize) -> bool {
        self.base.n() <= m && self.validate().is_ok()
    }

    /// In `A'_m`: strips only, all corners on distinct base vertices.
    pub fn in_a_prime(&self, m: usize) -> bool {
        if !self.in_a(m) || self.additions.iter().any(|a| matches!(a, Addition::Fan(_))) {
            return false;
        }
        let mut t: Vec<VertexId> = self.identification.iter().flatten().map(|p| p.1).collect();
        t.sort_unstable();
        t.windows(2).all(|w| w[0] != w[1])
    }
}

/// `K_{4a}` with `a` regular strips of length at least `b`, strip `i`
/// glued with corners `a, b, c, d` on `4i .. 4i + 3`.
pub fn make_j(a: usize, b: usize) -> Result<Graph> {
    Ok(j_presentation(a, b)?.augment()?)
}

/// Fewest pieces of a regular strip reaching length `b`.
pub fn regular_pieces_for(b: usize) -> Result<usize> {
    if b == 0 {
        return bad_param("strip length must be positive");
    }
    for k in 1..=4 * b + 4 {
        if regular_strip(k)?.length() >= b {
            return Ok(k);
        }
    }
    bad_param("strip length not reached by regular strips")
}

pub fn j_presentation(a: usize, b: usize) -> Result<AugmentationPresentation> {
    if a == 0 {
        return bad_param("need at least one strip");
    }
    let strip = regular_strip(regular_pieces_for(b)?)?;
    let mut p = AugmentationPresentation::trivial(complete(4 * a));
    for i in 0..a {
        let ids = strip.corners().iter().enumerate().map(|(k, &c)| (c, 4 * i + k)).collect();
        p.additions.push(Addition::Strip(strip.clone()));
        p.identification.push(ids);
    }
    Ok(p)
}

/// A seeded augmentation of a small 3-connected base (at most `max_base`
/// vertices, at least 4) with up to one strip and a few fans. Draws are
/// repeated until the augmented graph is internally 3-connected.
pub fn random_augmentation(max_base: usize, seed: u64) -> Result<AugmentationPresentation> {
    if max_base < 4 {
        return bad_param("base needs at least four vertices");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let p = draw_augmentation(max_base, &mut rng)?;
        if is_internally_3connected(&p.augment()?) {
            return Ok(p);
        }
    }
    invalid("no internally 3-connected draw")
}

fn draw_augmentation(max_base: usize, rng: &mut ChaCha8Rng) -> Result<AugmentationPresentation> {
    let mut bases = vec![complete(4)];
    if max_base >= 5 {
        bases.push(complete(5));
        bases.push(wheel(4)?);
    }
    if max_base >= 6 {
        bases.push(complete(6));
        bases.push(prism());
        bases.push(wheel(5)?);
    }
    let base = bases.choose(rng).unwrap().clone();
    let nb = base.n();
    let mut p = AugmentationPresentation::trivial(base);
    let mut free: Vec<VertexId> = (0..nb).collect();
    free.shuffle(rng);
    let mut centers_ok: Vec<VertexId> = Vec::new();
    if nb >= 4 && rng.gen_bool(0.6) {
        let strip = if rng.gen_bool(0.5) {
            regular_strip(rng.gen_range(2..=10))?
        } else {
            random_strip(rng.gen_range(3..=10), rng.gen_range(3..=10), rng.gen())?
        };
        let targets: Vec<VertexId> = free.drain(..4).collect();
        centers_ok.extend(targets.iter().copied());
        let ids = strip.corners().iter().zip(&targets).map(|(&c, &t)| (c, t)).collect();
        p.additions.push(Addition::Strip(strip));
        p.identification.push(ids);
    }
    let fans = rng.gen_range(0..=2);
    for _ in 0..fans {
        if free.len() < 2 {
            break;
        }
        let length = rng.gen_range(2..=4);
        let sub: Vec<usize> = (0..=length).map(|_| usize::from(rng.gen_bool(0.2))).collect();
        let fan = make_fan(length, &sub)?;
        let ends: Vec<VertexId> = free.drain(..2).collect();
        let center = if !centers_ok.is_empty() && rng.gen_bool(0.5) {
            *centers_ok.choose(rng).unwrap()
        } else if let Some(v) = free.pop() {
            v
        } else {
            break;
        };
        centers_ok.push(center);
        let [c, x, y] = fan.corners();
        p.additions.push(Addition::Fan(fan));
        p.identification.push(vec![(c, center), (x, ends[0]), (y, ends[1])]);
    }
    p.validate()?;
    Ok(p)
}
