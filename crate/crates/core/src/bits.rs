//! Fixed-width vertex sets for the search routines (at most 128 vertices).

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

pub type Mask = u128;

pub const MAX_BITS: usize = 128;

#[inline]
pub fn bit(v: VertexId) -> Mask {
    1u128 << v
}

#[inline]
pub fn lowest(m: Mask) -> VertexId {
    m.trailing_zeros() as VertexId
}

pub fn full(n: usize) -> Mask {
    if n >= 128 {
        !0
    } else {
        (1u128 << n) - 1
    }
}

pub fn iter(mut m: Mask) -> impl Iterator<Item = VertexId> {
    core::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as VertexId;
            m &= m - 1;
            Some(v)
        }
    })
}

pub fn to_vec(m: Mask) -> Vec<VertexId> {
    iter(m).collect()
}

pub fn from_slice(vs: &[VertexId]) -> Mask {
    vs.iter().fold(0, |acc, &v| acc | bit(v))
}

/// Adjacency as bitmasks.
#[derive(Clone, Debug)]
pub struct BitGraph {
    pub n: usize,
    pub adj: Vec<Mask>,
}

impl BitGraph {
    pub fn new(g: &Graph) -> Result<Self> {
        if g.n() > MAX_BITS {
            return Err(Error::SizeLimit { got: g.n(), limit: MAX_BITS });
        }
        let adj = (0..g.n()).map(|v| from_slice(g.neighbors(v))).collect();
        Ok(BitGraph { n: g.n(), adj })
    }

    #[inline]
    pub fn nbr_union(&self, m: Mask) -> Mask {
        iter(m).fold(0, |acc, v| acc | self.adj[v])
    }

    /// Vertices of `within` reachable from `start` inside `within`.
    pub fn reach(&self, start: Mask, within: Mask) -> Mask {
        let mut seen = start & within;
        let mut frontier = seen;
        while frontier != 0 {
            let next = self.nbr_union(frontier) & within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected_set(&self, m: Mask) -> bool {
        if m == 0 {
            return true;
        }
        self.reach(m & m.wrapping_neg(), m) == m
    }

    pub fn components(&self, mut within: Mask) -> Vec<Mask> {
        let mut out = Vec::new();
        while within != 0 {
            let c = self.reach(within & within.wrapping_neg(), within);
            out.push(c);
            within &= !c;
        }
        out
    }
}

/// What a connected-set visitor wants next.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Step {
    /// Keep going, including supersets of this set.
    Descend,
    /// Keep going, but do not extend this set.
    Prune,
    Stop,
}

/// Visits every connected set `X` with `seed ⊆ X ⊆ within` exactly once
/// (`seed` must be nonempty and connected). Returns `true` if stopped early.
pub fn connected_supersets<E>(
    bg: &BitGraph,
    seed: Mask,
    within: Mask,
    visit: &mut impl FnMut(Mask) -> core::result::Result<Step, E>,
) -> core::result::Result<bool, E> {
    fn rec<E>(
        bg: &BitGraph,
        cur: Mask,
        within: Mask,
        mut banned: Mask,
        visit: &mut impl FnMut(Mask) -> core::result::Result<Step, E>,
    ) -> core::result::Result<bool, E> {
        match visit(cur)? {
            Step::Stop => return Ok(true),
            Step::Prune => return Ok(false),
            Step::Descend => {}
        }
        let ext = bg.nbr_union(cur) & within & !cur & !banned;
        for v in iter(ext) {
            if rec(bg, cur | bit(v), within, banned, visit)? {
                return Ok(true);
            }
            banned |= bit(v);
        }
        Ok(false)
    }
    rec(bg, seed, within, 0, visit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard::{complete, cycle, path};

    fn count(g: &Graph, seed: VertexId) -> usize {
        let bg = BitGraph::new(g).unwrap();
        let mut k = 0;
        connected_supersets::<()>(&bg, bit(seed), full(g.n()), &mut |_| {
            k += 1;
            Ok(Step::Descend)
        })
        .unwrap();
        k
    }

    #[test]
    fn connected_set_counts() {
        // arcs of C_6 through a fixed vertex: 1 + 2 + 3 + 4 + 5 plus the whole cycle
        assert_eq!(count(&cycle(6), 0), 16);
        assert_eq!(count(&complete(5), 0), 16);
        // subpaths of P_5 through its end
        assert_eq!(count(&path(5), 0), 5);
    }
}
