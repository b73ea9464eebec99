//! Canonical labelling by colour refinement and individualisation, with
//! orbit pruning from automorphisms found along the way.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

pub const DEFAULT_ISO_LIMIT: usize = 16;

/// A canonical code: equal codes iff the (coloured) graphs are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm {
    pub n: usize,
    pub colors: Vec<usize>,
    pub bits: Vec<u64>,
}

/// Result of the canonical search: the code and a labelling `lab[v]` giving
/// each vertex its canonical position.
#[derive(Clone, Debug)]
pub struct Canon {
    pub form: CanonicalForm,
    pub lab: Vec<usize>,
}

fn renumber(keys: &[(usize, Vec<usize>)]) -> Vec<usize> {
    let mut sorted: Vec<&(usize, Vec<usize>)> = keys.iter().collect();
    sorted.sort();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(&k).unwrap()).collect()
}

fn cells(col: &[usize]) -> usize {
    col.iter().max().map_or(0, |m| m + 1)
}

fn refine(g: &Graph, col: &mut Vec<usize>) {
    loop {
        let k = cells(col);
        let keys: Vec<(usize, Vec<usize>)> = (0..g.n())
            .map(|v| {
                let mut cnt = vec![0usize; k];
                for &w in g.neighbors(v) {
                    cnt[col[w]] += 1;
                }
                (col[v], cnt)
            })
            .collect();
        let next = renumber(&keys);
        let done = cells(&next) == k;
        *col = next;
        if done {
            return;
        }
    }
}

fn individualize(col: &[usize], w: VertexId) -> Vec<usize> {
    let keys: Vec<(usize, Vec<usize>)> =
        col.iter().enumerate().map(|(v, &c)| (c, vec![usize::from(v != w)])).collect();
    renumber(&keys)
}

fn leaf_code(g: &Graph, col: &[usize]) -> Vec<u64> {
    let n = g.n();
    let mut at = vec![0; n];
    for v in 0..n {
        at[col[v]] = v;
    }
    let total = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u64; total.div_ceil(64)];
    let mut idx = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(at[i], at[j]) {
                bits[idx / 64] |= 1 << (63 - idx % 64);
            }
            idx += 1;
        }
    }
    bits
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn run(&mut self, col: Vec<usize>, path: &mut Vec<VertexId>) {
        let n = self.g.n();
        let k = cells(&col);
        if k == n {
            let code = leaf_code(self.g, &col);
            match &self.best {
                None => self.best = Some((code, col)),
                Some((b, lab)) => {
                    if code > *b {
                        self.best = Some((code, col));
                    } else if code == *b {
                        // lab and col place the graph identically; compose
                        let mut inv = vec![0; n];
                        for v in 0..n {
                            inv[lab[v]] = v;
                        }
                        let auto: Vec<usize> = (0..n).map(|v| inv[col[v]]).collect();
                        self.autos.push(auto);
                    }
                }
            }
            return;
        }
        // first smallest non-singleton cell
        let mut size = vec![0usize; k];
        for &c in &col {
            size[c] += 1;
        }
        let target = (0..k).filter(|&c| size[c] > 1).min_by_key(|&c| (size[c], c)).unwrap();
        let members: Vec<VertexId> = (0..n).filter(|&v| col[v] == target).collect();
        let mut done: Vec<VertexId> = Vec::new();
        for &w in &members {
            if self.same_orbit(path, &done, w) {
                continue;
            }
            let mut child = individualize(&col, w);
            refine(self.g, &mut child);
            path.push(w);
            self.run(child, path);
            path.pop();
            done.push(w);
        }
    }

    /// Is `w` the image of an explored sibling under the group generated by
    /// known automorphisms that fix `path` pointwise?
    fn same_orbit(&self, path: &[VertexId], done: &[VertexId], w: VertexId) -> bool {
        if done.is_empty() {
            return false;
        }
        let n = self.g.n();
        let gens: Vec<&Vec<usize>> =
            self.autos.iter().filter(|a| path.iter().all(|&p| a[p] == p)).collect();
        if gens.is_empty() {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![w];
        seen[w] = true;
        while let Some(v) = stack.pop() {
            if done.contains(&v) {
                return true;
            }
            for a in &gens {
                if !seen[a[v]] {
                    seen[a[v]] = true;
                    stack.push(a[v]);
                }
            }
        }
        false
    }
}

/// Canonical form of a vertex-coloured graph. `colors` may be empty for an
/// uncoloured graph.
pub fn canonical_colored(g: &Graph, colors: &[usize], limit: usize) -> Result<Canon> {
    if g.n() > limit {
        return Err(Error::SizeLimit { got: g.n(), limit });
    }
    let colors: Vec<usize> = if colors.is_empty() { vec![0; g.n()] } else { colors.to_vec() };
    if colors.len() != g.n() {
        return Err(Error::InvalidParam("one colour per vertex".into()));
    }
    let mut col = renumber(&colors.iter().map(|&c| (c, Vec::new())).collect::<Vec<_>>());
    refine(g, &mut col);
    let mut s = Search { g, best: None, autos: Vec::new() };
    s.run(col, &mut Vec::new());
    let (bits, lab) = s.best.unwrap_or_default();
    let mut at = vec![0; g.n()];
    for v in 0..g.n() {
        at[lab[v]] = v;
    }
    let form = CanonicalForm { n: g.n(), colors: at.iter().map(|&v| colors[v]).collect(), bits };
    Ok(Canon { form, lab })
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    Ok(canonical_colored(g, &[], DEFAULT_ISO_LIMIT)?.form)
}

pub fn canonical_form_with_limit(g: &Graph, limit: usize) -> Result<CanonicalForm> {
    Ok(canonical_colored(g, &[], limit)?.form)
}

/// The relabelled graph whose vertex `i` is the vertex in canonical position `i`.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let c = canonical_colored(g, &[], DEFAULT_ISO_LIMIT)?;
    g.relabel(&c.lab)
}

/// An isomorphism `map[v1] = v2` respecting colours, if one exists.
pub fn isomorphism_colored(
    g1: &Graph,
    c1: &[usize],
    g2: &Graph,
    c2: &[usize],
    limit: usize,
) -> Result<Option<Vec<VertexId>>> {
    if g1.n() != g2.n() || g1.m() != g2.m() || g1.degree_sequence() != g2.degree_sequence() {
        if g1.n().max(g2.n()) > limit {
            return Err(Error::SizeLimit { got: g1.n().max(g2.n()), limit });
        }
        return Ok(None);
    }
    let a = canonical_colored(g1, c1, limit)?;
    let b = canonical_colored(g2, c2, limit)?;
    if a.form != b.form {
        return Ok(None);
    }
    let mut at2 = vec![0; g2.n()];
    for v in 0..g2.n() {
        at2[b.lab[v]] = v;
    }
    Ok(Some((0..g1.n()).map(|v| at2[a.lab[v]]).collect()))
}

pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    are_isomorphic_with_limit(g1, g2, DEFAULT_ISO_LIMIT)
}

pub fn are_isomorphic_with_limit(g1: &Graph, g2: &Graph, limit: usize) -> Result<bool> {
    Ok(isomorphism_colored(g1, &[], g2, &[], limit)?.is_some())
}

/// Isomorphism that must carry the vertex set `l1` onto `l2`.
pub fn are_isomorphic_labeled(g1: &Graph, l1: &[VertexId], g2: &Graph, l2: &[VertexId], limit: usize) -> Result<bool> {
    let mark = |g: &Graph, l: &[VertexId]| {
        let mut c = vec![0; g.n()];
        for &v in l {
            if v < g.n() {
                c[v] = 1;
            }
        }
        c
    };
    let (c1, c2) = (mark(g1, l1), mark(g2, l2));
    Ok(isomorphism_colored(g1, &c1, g2, &c2, limit)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard::*;

    #[test]
    fn examples() {
        let c5 = cycle(5);
        let r = c5.relabel(&[3, 0, 4, 1, 2]).unwrap();
        assert!(are_isomorphic(&c5, &r).unwrap());
        let k23 = complete_bipartite(2, 3);
        let k4e = k4_minus_e().with_vertices(1);
        assert!(!are_isomorphic(&k23, &k4e).unwrap());
        let other = complete_bipartite(3, 3).without_edge(0, 3).unwrap();
        assert!(are_isomorphic(&k33_minus_e(), &other).unwrap());
        assert!(!are_isomorphic(&cycle(6), &complete_bipartite(3, 3).without_edge(0, 3).unwrap()).unwrap());
        assert!(are_isomorphic(&complete(17), &complete(17)).is_err());
        assert!(are_isomorphic_with_limit(&complete(17), &complete(17), 20).unwrap());
    }

    #[test]
    fn petersen_relabelled() {
        let p = petersen();
        let perm = [7, 2, 9, 0, 4, 1, 8, 3, 6, 5];
        let q = p.relabel(&perm).unwrap();
        let map = isomorphism_colored(&p, &[], &q, &[], 16).unwrap().unwrap();
        for (u, v) in p.edges() {
            assert!(q.has_edge(map[u], map[v]));
        }
    }

    #[test]
    fn prism_vs_k33() {
        assert!(!are_isomorphic(&prism(), &complete_bipartite(3, 3)).unwrap());
    }
}
