//! JSON views of core results.

use k2n_core::combinat::{InterleaveCertificate, MatrixPattern, PatternMatch, RTreeCertificate};
use k2n_core::fanstrip::{Addition, AugmentationPresentation, AuditOp, Extraction, Fan, Strip};
use k2n_core::minor::K2nWitness;
use k2n_core::sum::{LabeledGraph, Orientation, TreeEdge, TreeStructure};
use k2n_core::typeone::ChordDiagram;
use k2n_core::{Graph, PathRef};
use serde::{Deserialize, Serialize};

use crate::format::{FormatError, GraphJson};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub hub1: Vec<usize>,
    pub hub2: Vec<usize>,
    pub leaves: Vec<usize>,
}

impl From<&K2nWitness> for WitnessJson {
    fn from(w: &K2nWitness) -> Self {
        WitnessJson { hub1: w.hub1.clone(), hub2: w.hub2.clone(), leaves: w.leaves.clone() }
    }
}

impl From<WitnessJson> for K2nWitness {
    fn from(w: WitnessJson) -> Self {
        K2nWitness { hub1: w.hub1, hub2: w.hub2, leaves: w.leaves }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub cycle: Vec<usize>,
    pub chords: Vec<[usize; 2]>,
}

impl From<&ChordDiagram> for DiagramJson {
    fn from(d: &ChordDiagram) -> Self {
        DiagramJson { cycle: d.cycle.clone(), chords: d.chords.iter().map(|&(a, b)| [a, b]).collect() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrientationJson {
    Parallel,
    Crossed,
}

impl From<Orientation> for OrientationJson {
    fn from(o: Orientation) -> Self {
        match o {
            Orientation::Parallel => OrientationJson::Parallel,
            Orientation::Crossed => OrientationJson::Crossed,
        }
    }
}

impl From<OrientationJson> for Orientation {
    fn from(o: OrientationJson) -> Self {
        match o {
            OrientationJson::Parallel => Orientation::Parallel,
            OrientationJson::Crossed => Orientation::Crossed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieceJson {
    pub graph: GraphJson,
    pub labels: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeEdgeJson {
    pub s: usize,
    pub t: usize,
}

/// `phi` sends label `label` of node `node` to tree edge `edge`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiJson {
    pub node: usize,
    pub label: usize,
    pub edge: usize,
    pub orientation: OrientationJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeStructureJson {
    pub tree_edges: Vec<TreeEdgeJson>,
    pub pieces: Vec<PieceJson>,
    pub phi: Vec<PhiJson>,
}

impl From<&TreeStructure> for TreeStructureJson {
    fn from(t: &TreeStructure) -> Self {
        let mut phi = Vec::new();
        for (i, e) in t.edges.iter().enumerate() {
            for (node, label) in [(e.s, e.ls), (e.t, e.lt)] {
                phi.push(PhiJson { node, label, edge: i, orientation: e.orientation.into() });
            }
        }
        TreeStructureJson {
            tree_edges: t.edges.iter().map(|e| TreeEdgeJson { s: e.s, t: e.t }).collect(),
            pieces: t
                .pieces
                .iter()
                .map(|p| PieceJson { graph: GraphJson::from_graph(&p.graph), labels: p.labels.clone() })
                .collect(),
            phi,
        }
    }
}

impl TreeStructureJson {
    pub fn to_tree(&self) -> Result<TreeStructure, FormatError> {
        let mut pieces = Vec::new();
        for p in &self.pieces {
            pieces.push(LabeledGraph::new(p.graph.to_graph()?, p.labels.clone())?);
        }
        let mut edges = Vec::new();
        for (i, e) in self.tree_edges.iter().enumerate() {
            let end = |node: usize| {
                self.phi
                    .iter()
                    .find(|f| f.edge == i && f.node == node)
                    .ok_or_else(|| k2n_core::Error::Invalid(format!("tree edge {i} has no label at node {node}")))
            };
            let (fs, ft) = (end(e.s)?, end(e.t)?);
            edges.push(TreeEdge { s: e.s, t: e.t, ls: fs.label, lt: ft.label, orientation: fs.orientation.into() });
        }
        let t = TreeStructure { pieces, edges };
        t.validate()?;
        Ok(t)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum AdditionJson {
    Fan { graph: GraphJson, center: usize, rim: Vec<usize>, corners: Vec<[usize; 2]> },
    Strip { graph: GraphJson, p1: Vec<usize>, p2: Vec<usize>, corners: Vec<[usize; 2]> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub base: GraphJson,
    pub additions: Vec<AdditionJson>,
}

impl From<&AugmentationPresentation> for PresentationJson {
    fn from(p: &AugmentationPresentation) -> Self {
        let additions = p
            .additions
            .iter()
            .zip(&p.identification)
            .map(|(a, ids)| {
                let corners = ids.iter().map(|&(c, b)| [c, b]).collect();
                match a {
                    Addition::Fan(f) => AdditionJson::Fan {
                        graph: GraphJson::from_graph(&f.graph),
                        center: f.center,
                        rim: f.rim.clone(),
                        corners,
                    },
                    Addition::Strip(s) => AdditionJson::Strip {
                        graph: GraphJson::from_graph(&s.graph),
                        p1: s.p1.clone(),
                        p2: s.p2.clone(),
                        corners,
                    },
                }
            })
            .collect();
        PresentationJson { base: GraphJson::from_graph(&p.base), additions }
    }
}

impl PresentationJson {
    pub fn to_presentation(&self) -> Result<AugmentationPresentation, FormatError> {
        let mut p = AugmentationPresentation::trivial(self.base.to_graph()?);
        for a in &self.additions {
            let (add, corners) = match a {
                AdditionJson::Fan { graph, center, rim, corners } => {
                    let f = Fan { graph: graph.to_graph()?, center: *center, rim: rim.clone() };
                    (Addition::Fan(f), corners)
                }
                AdditionJson::Strip { graph, p1, p2, corners } => {
                    let s = Strip { graph: graph.to_graph()?, p1: p1.clone(), p2: p2.clone() };
                    (Addition::Strip(s), corners)
                }
            };
            p.additions.push(add);
            p.identification.push(corners.iter().map(|&[c, b]| (c, b)).collect());
        }
        p.validate()?;
        Ok(p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum AuditOpJson {
    Delete { u: usize, v: usize },
    Contract { keep: usize, gone: usize },
}

impl From<&AuditOp> for AuditOpJson {
    fn from(op: &AuditOp) -> Self {
        match *op {
            AuditOp::DeleteEdge(u, v) => AuditOpJson::Delete { u, v },
            AuditOp::Contract(keep, gone) => AuditOpJson::Contract { keep, gone },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtractionJson {
    pub presentation: PresentationJson,
    pub base_vertices: Vec<usize>,
    pub addition_vertices: Vec<Vec<usize>>,
    /// One entry per strip addition; `null` when the strip has no two
    /// independent interior chords.
    pub scripts: Vec<Option<Vec<AuditOpJson>>>,
    pub base_size: usize,
}

impl From<&Extraction> for ExtractionJson {
    fn from(e: &Extraction) -> Self {
        ExtractionJson {
            presentation: (&e.presentation).into(),
            base_vertices: e.base_vertices.clone(),
            addition_vertices: e.addition_vertices.clone(),
            scripts: e.scripts.iter().map(|s| s.as_ref().map(|ops| ops.iter().map(Into::into).collect())).collect(),
            base_size: e.presentation.base.n(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum InterleaveJson {
    Interleave { xs: Vec<i64>, ys: Vec<i64> },
    Gap { xs: Vec<i64> },
}

impl From<&InterleaveCertificate> for InterleaveJson {
    fn from(c: &InterleaveCertificate) -> Self {
        match c {
            InterleaveCertificate::Interleave { xs, ys } => InterleaveJson::Interleave { xs: xs.clone(), ys: ys.clone() },
            InterleaveCertificate::Gap { xs } => InterleaveJson::Gap { xs: xs.clone() },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternJson {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub pattern: String,
}

impl From<&PatternMatch> for PatternJson {
    fn from(m: &PatternMatch) -> Self {
        let pattern = match m.pattern {
            MatrixPattern::Identity => "identity",
            MatrixPattern::CoIdentity => "co-identity",
            MatrixPattern::Staircase => "staircase",
        };
        PatternJson { rows: m.rows.clone(), cols: m.cols.clone(), pattern: pattern.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RTreeJson {
    pub vertices: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
    pub leaves: Vec<usize>,
}

impl From<&RTreeCertificate> for RTreeJson {
    fn from(t: &RTreeCertificate) -> Self {
        RTreeJson { vertices: t.vertices.clone(), edges: t.edges.iter().map(|&(u, v)| [u, v]).collect(), leaves: t.leaves.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathJson {
    pub vertices: Vec<usize>,
}

impl From<&PathRef> for PathJson {
    fn from(p: &PathRef) -> Self {
        PathJson { vertices: p.vertices.clone() }
    }
}

pub fn graph_json(g: &Graph) -> GraphJson {
    GraphJson::from_graph(g)
}
