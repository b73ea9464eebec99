//! Graphs presented as a Hamiltonian reference cycle plus chords.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{bad_param, invalid, Error, Result};
use crate::graph::{edge_key, Graph, VertexId};

pub const DEFAULT_RECOGNITION_LIMIT: usize = 16;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ChordDiagram {
    /// Cyclic vertex order; a permutation of `0..n`.
    pub cycle: Vec<VertexId>,
    /// Edges `(a, b)` with `a < b` that are not cycle edges, sorted.
    pub chords: Vec<(VertexId, VertexId)>,
}

impl ChordDiagram {
    /// The diagram of `g` over `cycle`. Fails if `cycle` is not a
    /// Hamiltonian cycle of `g`.
    pub fn from_cycle(g: &Graph, cycle: &[VertexId]) -> Result<Self> {
        let n = g.n();
        if n < 3 || cycle.len() != n {
            return invalid("reference cycle must visit every vertex");
        }
        let mut seen = vec![false; n];
        for &v in cycle {
            if v >= n || seen[v] {
                return invalid("reference cycle repeats or leaves the graph");
            }
            seen[v] = true;
        }
        for i in 0..n {
            if !g.has_edge(cycle[i], cycle[(i + 1) % n]) {
                return invalid("reference cycle uses a non-edge");
            }
        }
        let d = ChordDiagram { cycle: cycle.to_vec(), chords: Vec::new() };
        let chords = g.edges().into_iter().filter(|&(a, b)| !d.cycle_adjacent(a, b)).collect();
        Ok(ChordDiagram { chords, ..d })
    }

    pub fn n(&self) -> usize {
        self.cycle.len()
    }

    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.n()];
        for (i, &v) in self.cycle.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    pub fn cycle_adjacent(&self, a: VertexId, b: VertexId) -> bool {
        let n = self.n();
        let pa = self.cycle.iter().position(|&v| v == a);
        let pb = self.cycle.iter().position(|&v| v == b);
        match (pa, pb) {
            (Some(x), Some(y)) => (x + 1) % n == y || (y + 1) % n == x,
            _ => false,
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        let n = self.n();
        let mut e: Vec<_> = (0..n).map(|i| (self.cycle[i], self.cycle[(i + 1) % n])).collect();
        e.extend(self.chords.iter().copied());
        Graph::from_edges(n, &e)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        if n < 3 {
            return invalid("reference cycle needs at least 3 vertices");
        }
        let mut seen = vec![false; n];
        for &v in &self.cycle {
            if v >= n || seen[v] {
                return invalid("cycle is not a permutation of the vertex ids");
            }
            seen[v] = true;
        }
        let mut prev = None;
        for &(a, b) in &self.chords {
            if a >= n || b >= n {
                return Err(Error::UnknownVertex(a.max(b)));
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            if self.cycle_adjacent(a, b) {
                return invalid("chord duplicates a cycle edge");
            }
            let k = edge_key(a, b);
            if prev.is_some_and(|p| p >= k) {
                return invalid("chords must be sorted and distinct");
            }
            prev = Some(k);
        }
        Ok(())
    }
}

fn interleave(pos: &[usize], (a, b): (VertexId, VertexId), (c, d): (VertexId, VertexId)) -> bool {
    let (lo, hi) = if pos[a] < pos[b] { (pos[a], pos[b]) } else { (pos[b], pos[a]) };
    let inside = |x: VertexId| lo < pos[x] && pos[x] < hi;
    inside(c) != inside(d)
}

/// Whether two non-incident chords cross.
pub fn chords_cross(d: &ChordDiagram, e1: (VertexId, VertexId), e2: (VertexId, VertexId)) -> Result<bool> {
    for e in [e1, e2] {
        if d.chords.binary_search(&edge_key(e.0, e.1)).is_err() {
            return Err(Error::UnknownEdge(e.0, e.1));
        }
    }
    if e1.0 == e2.0 || e1.0 == e2.1 || e1.1 == e2.0 || e1.1 == e2.1 {
        return bad_param("chords share an end");
    }
    Ok(interleave(&d.positions(), e1, e2))
}

/// All crossing pairs as indices into `d.chords`.
pub fn crossing_pairs(d: &ChordDiagram) -> Vec<(usize, usize)> {
    let pos = d.positions();
    let mut out = Vec::new();
    for i in 0..d.chords.len() {
        for j in i + 1..d.chords.len() {
            let (a, b) = d.chords[i];
            let (c, e) = d.chords[j];
            if a != c && a != e && b != c && b != e && interleave(&pos, d.chords[i], d.chords[j]) {
                out.push((i, j));
            }
        }
    }
    out
}

fn crossing_ok(d: &ChordDiagram, (a, b): (VertexId, VertexId), (c, e): (VertexId, VertexId)) -> bool {
    (d.cycle_adjacent(a, c) && d.cycle_adjacent(b, e)) || (d.cycle_adjacent(a, e) && d.cycle_adjacent(b, c))
}

/// Every chord crosses at most one other, and crossing chords `ab`, `cd`
/// have `ac, bd` or `ad, bc` on the cycle.
pub fn is_type_one(d: &ChordDiagram) -> bool {
    if d.validate().is_err() {
        return false;
    }
    let mut count = vec![0usize; d.chords.len()];
    for (i, j) in crossing_pairs(d) {
        count[i] += 1;
        count[j] += 1;
        if count[i] > 1 || count[j] > 1 || !crossing_ok(d, d.chords[i], d.chords[j]) {
            return false;
        }
    }
    true
}

/// Searches Hamiltonian cycles for one under which `g` is type-I.
pub fn recognize_type_one(g: &Graph) -> Result<Option<ChordDiagram>> {
    recognize_type_one_with_limit(g, DEFAULT_RECOGNITION_LIMIT)
}

pub fn recognize_type_one_with_limit(g: &Graph, limit: usize) -> Result<Option<ChordDiagram>> {
    if g.n() > limit {
        return Err(Error::SizeLimit { got: g.n(), limit });
    }
    if g.n() < 3 || g.min_degree() < 2 {
        return Ok(None);
    }
    let mut found = None;
    let mut path = vec![0];
    let mut used = vec![false; g.n()];
    used[0] = true;
    hamilton(g, &mut path, &mut used, &mut |cycle| {
        let d = ChordDiagram::from_cycle(g, cycle).expect("cycle is Hamiltonian");
        if is_type_one(&d) {
            found = Some(d);
            true
        } else {
            false
        }
    });
    Ok(found)
}

/// Chords with both ends on the partial path keep their crossings in every
/// completion, so too many crossings or a forbidden crossing is final.
fn partial_dead(g: &Graph, path: &[VertexId]) -> bool {
    let n = g.n();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in path.iter().enumerate() {
        pos[v] = i;
    }
    let k = path.len();
    let adjacent_on_path = |a: VertexId, b: VertexId| {
        let (x, y) = (pos[a], pos[b]);
        x.abs_diff(y) == 1
    };
    let mut chords = Vec::new();
    for (i, &a) in path.iter().enumerate() {
        for &b in g.neighbors(a) {
            if pos[b] != usize::MAX && pos[b] > i + 1 && !(i == 0 && pos[b] == k - 1 && k == n) {
                chords.push((a, b));
            }
        }
    }
    let mut count = vec![0usize; chords.len()];
    for i in 0..chords.len() {
        for j in i + 1..chords.len() {
            let (a, b) = chords[i];
            let (c, d) = chords[j];
            if a == c || a == d || b == c || b == d || !interleave(&pos, chords[i], chords[j]) {
                continue;
            }
            count[i] += 1;
            count[j] += 1;
            if count[i] > 1 || count[j] > 1 {
                return true;
            }
            let ok = |x: VertexId, y: VertexId| {
                adjacent_on_path(x, y) || (k == n && pos[x].min(pos[y]) == 0 && pos[x].max(pos[y]) == n - 1)
            };
            if !((ok(a, c) && ok(b, d)) || (ok(a, d) && ok(b, c))) {
                return true;
            }
        }
    }
    false
}

fn hamilton(g: &Graph, path: &mut Vec<VertexId>, used: &mut Vec<bool>, done: &mut impl FnMut(&[VertexId]) -> bool) -> bool {
    let n = g.n();
    let last = *path.last().unwrap();
    if path.len() == n {
        // fix orientation: second vertex below the last one
        if g.has_edge(last, path[0]) && path[1] < last {
            return done(path);
        }
        return false;
    }
    for &w in g.neighbors(last) {
        if used[w] {
            continue;
        }
        used[w] = true;
        path.push(w);
        let stop = !partial_dead(g, path) && hamilton(g, path, used, done);
        path.pop();
        used[w] = false;
        if stop {
            return true;
        }
    }
    false
}

/// A random type-I diagram on `n` vertices: a cycle plus lone chords and
/// legal crossing pairs, then randomly relabelled. Deterministic per seed.
pub fn random_type_one(n: usize, seed: u64) -> Result<ChordDiagram> {
    if n < 3 {
        return bad_param("need at least 3 vertices");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chords: Vec<(usize, usize)> = Vec::new();
    let base: Vec<usize> = (0..n).collect();
    let attempts = if n >= 4 { 2 * n } else { 0 };
    for _ in 0..attempts {
        let i = rng.gen_range(0..n);
        let mut add: Vec<(usize, usize)> = Vec::new();
        if rng.gen_bool(0.5) && n >= 4 {
            let j = i + rng.gen_range(2..=n - 2);
            add.push(edge_key(i, j % n));
            add.push(edge_key((i + 1) % n, (j + 1) % n));
        } else {
            let j = i + rng.gen_range(2..=n - 2);
            add.push(edge_key(i, j % n));
        }
        if add.iter().any(|e| chords.contains(e)) || (add.len() == 2 && add[0] == add[1]) {
            continue;
        }
        let mut trial = chords.clone();
        trial.extend(add.iter().copied());
        trial.sort_unstable();
        let d = ChordDiagram { cycle: base.clone(), chords: trial.clone() };
        if d.validate().is_ok() && is_type_one(&d) {
            chords = trial;
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let cycle: Vec<usize> = base.iter().map(|&v| perm[v]).collect();
    let mut mapped: Vec<_> = chords.iter().map(|&(a, b)| edge_key(perm[a], perm[b])).collect();
    mapped.sort_unstable();
    Ok(ChordDiagram { cycle, chords: mapped })
}
