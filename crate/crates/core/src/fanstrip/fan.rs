//! Fans: a center joined to a rim path by chords.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{bad_param, invalid, Result};
use crate::graph::{edge_key, Graph, VertexId};
use crate::typeone::{is_type_one, ChordDiagram};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fan {
    /// The fan's edges. Ids may be those of a host graph; only `center`
    /// and `rim` belong to the fan.
    pub graph: Graph,
    pub center: VertexId,
    /// Its ends are the two non-center corners.
    pub rim: Vec<VertexId>,
}

impl Fan {
    /// Center first, then the rim ends.
    pub fn corners(&self) -> [VertexId; 3] {
        [self.center, self.rim[0], *self.rim.last().unwrap()]
    }

    pub fn interior(&self) -> &[VertexId] {
        &self.rim[1..self.rim.len() - 1]
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        let mut vs: Vec<VertexId> = self.rim.clone();
        vs.push(self.center);
        vs.sort_unstable();
        vs
    }

    pub fn is_corner(&self, v: VertexId) -> bool {
        self.corners().contains(&v)
    }

    /// Number of chords, i.e. center neighbours inside the rim.
    pub fn length(&self) -> usize {
        self.interior().iter().filter(|&&v| self.graph.has_edge(self.center, v)).count()
    }

    pub fn is_nontrivial(&self) -> bool {
        self.length() >= 2
    }

    /// Length two on exactly five vertices.
    pub fn is_basic(&self) -> bool {
        self.length() == 2 && self.rim.len() == 4
    }

    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.graph.edges()
    }

    /// The fan taken out of `host`: rim path edges plus every host edge
    /// from the center to the rim.
    pub fn from_host(host: &Graph, center: VertexId, rim: Vec<VertexId>) -> Result<Fan> {
        let mut edges = Vec::new();
        for w in rim.windows(2) {
            if !host.has_edge(w[0], w[1]) {
                return invalid("rim is not a path of the host");
            }
            edges.push((w[0], w[1]));
        }
        for &v in &rim {
            if host.has_edge(center, v) {
                edges.push((center, v));
            }
        }
        let fan = Fan { graph: Graph::from_edges(host.n(), &edges)?, center, rim };
        fan.validate()?;
        Ok(fan)
    }

    /// Reference cycle `center, rim...` over the fan's own vertices.
    pub fn diagram(&self) -> Result<ChordDiagram> {
        let vs = self.vertices();
        let (local, _) = self.graph.induced(&vs);
        let pos = |v: VertexId| vs.binary_search(&v).unwrap();
        let mut cycle = Vec::with_capacity(vs.len());
        cycle.push(pos(self.center));
        cycle.extend(self.rim.iter().map(|&v| pos(v)));
        ChordDiagram::from_cycle(&local, &cycle)
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.rim.len();
        if k < 3 {
            return invalid("fan rim needs at least three vertices");
        }
        let vs = self.vertices();
        if vs.windows(2).any(|w| w[0] == w[1]) || vs.iter().any(|&v| v >= self.graph.n()) {
            return invalid("fan vertices must be distinct host vertices");
        }
        let mut expected = BTreeSet::new();
        for w in self.rim.windows(2) {
            expected.insert(edge_key(w[0], w[1]));
        }
        expected.insert(edge_key(self.center, self.rim[0]));
        expected.insert(edge_key(self.center, self.rim[k - 1]));
        for &v in self.interior() {
            if self.graph.has_edge(self.center, v) {
                expected.insert(edge_key(self.center, v));
            }
        }
        if self.graph.edge_set() != expected {
            return invalid("fan edges are not rim, spokes to the ends, and chords");
        }
        if self.length() == 0 {
            return invalid("fan of length zero");
        }
        if !is_type_one(&self.diagram()?) {
            return invalid("fan is not type-I");
        }
        Ok(())
    }

    /// Whether this is a fan of `host`: a subgraph whose interior vertices
    /// have all their host edges inside the fan.
    pub fn is_fan_of(&self, host: &Graph) -> bool {
        self.graph.n() <= host.n()
            && self.edges().iter().all(|&(u, v)| host.has_edge(u, v))
            && self.interior().iter().all(|&v| host.degree(v) == self.graph.degree(v))
    }
}

/// Fan with center 0 and rim `1, 2, ...`. `subdivision[i]` extra vertices
/// go on the `i`-th rim edge between chord ends; empty means none.
pub fn make_fan(length: usize, subdivision: &[usize]) -> Result<Fan> {
    if length == 0 {
        return bad_param("fan length must be at least one");
    }
    if !subdivision.is_empty() && subdivision.len() != length + 1 {
        return bad_param("subdivision needs one entry per rim edge");
    }
    let mut rim = Vec::new();
    let mut spokes = Vec::new();
    let mut next = 1;
    for i in 0..length + 2 {
        if i > 0 {
            for _ in 0..subdivision.get(i - 1).copied().unwrap_or(0) {
                rim.push(next);
                next += 1;
            }
        }
        spokes.push(next);
        rim.push(next);
        next += 1;
    }
    let mut edges: Vec<(VertexId, VertexId)> = rim.windows(2).map(|w| (w[0], w[1])).collect();
    edges.extend(spokes.iter().map(|&v| (0, v)));
    let fan = Fan { graph: Graph::from_edges(next, &edges)?, center: 0, rim };
    fan.validate()?;
    Ok(fan)
}
