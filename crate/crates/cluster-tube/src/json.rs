//! JSON-facing data shapes. Conversions are lossless for values produced by
//! this crate: parsing a serialized graph or quiver gives the value back.

use serde::{Deserialize, Serialize};

use crate::derived::{cartan_determinant, cartan_matrix, DerivedClass};
use crate::error::{Error, Result};
use crate::mutation::{ExchangeGraph, GraphEdge};
use crate::quiver::{QTilde, Quiver, VertexLabel};
use crate::rigid::MaximalRigid;
use crate::tube::{ClusterTube, Indec};

/// `{vertices: [labels], arrows: [[src, dst]], loop_vertex: c}` — the loop
/// itself is implied by `loop_vertex` and omitted from `arrows`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct QuiverJson {
    pub vertices: Vec<String>,
    pub arrows: Vec<(usize, usize)>,
    pub loop_vertex: usize,
}

impl From<&QTilde> for QuiverJson {
    fn from(qt: &QTilde) -> QuiverJson {
        QuiverJson {
            vertices: qt.quiver().labels().iter().map(|l| l.to_string()).collect(),
            arrows: qt.plain_arrows(),
            loop_vertex: qt.loop_vertex(),
        }
    }
}

impl TryFrom<&QuiverJson> for QTilde {
    type Error = Error;

    fn try_from(j: &QuiverJson) -> Result<QTilde> {
        let labels: Vec<VertexLabel> = j.vertices.iter().map(|s| VertexLabel::parse(s)).collect();
        if j.loop_vertex >= labels.len() {
            return Err(Error::Parse(format!(
                "loop vertex {} outside the {} vertices",
                j.loop_vertex,
                labels.len()
            )));
        }
        let mut arrows = j.arrows.clone();
        arrows.push((j.loop_vertex, j.loop_vertex));
        QTilde::from_quiver(Quiver::new(labels, arrows)?)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct EdgeJson {
    pub source: usize,
    pub target: usize,
    pub removed: String,
    pub added: String,
    pub simple: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ExchangeGraphJson {
    pub rank: usize,
    pub nodes: Vec<Vec<String>>,
    pub edges: Vec<EdgeJson>,
}

impl From<&ExchangeGraph> for ExchangeGraphJson {
    fn from(g: &ExchangeGraph) -> ExchangeGraphJson {
        ExchangeGraphJson {
            rank: g.rank(),
            nodes: g
                .nodes()
                .iter()
                .map(|n| n.summands().iter().map(|x| x.to_string()).collect())
                .collect(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeJson {
                    source: e.source,
                    target: e.target,
                    removed: e.removed.to_string(),
                    added: e.added.to_string(),
                    simple: e.simple,
                })
                .collect(),
        }
    }
}

impl ExchangeGraphJson {
    /// Rebuilds the graph, re-validating every node and edge datum; the
    /// result compares equal to the graph that was serialized.
    pub fn reconstruct(&self) -> Result<ExchangeGraph> {
        let tube = ClusterTube::new(self.rank)?;
        let mut nodes = Vec::with_capacity(self.nodes.len());
        for summands in &self.nodes {
            let parsed: Result<Vec<Indec>> = summands.iter().map(|s| s.parse()).collect();
            nodes.push(MaximalRigid::new(&tube, parsed?)?);
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            edges.push(GraphEdge {
                source: e.source,
                target: e.target,
                removed: e.removed.parse()?,
                added: e.added.parse()?,
                simple: e.simple,
            });
        }
        ExchangeGraph::from_parts(self.rank, nodes, edges)
    }
}

/// `{rank, classes: [{three_cycles, size, cartan_determinant, representative_quiver}]}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ClassesJson {
    pub rank: usize,
    pub classes: Vec<ClassJson>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ClassJson {
    pub three_cycles: usize,
    pub size: usize,
    pub cartan_determinant: i128,
    pub representative_quiver: QuiverJson,
}

impl ClassesJson {
    pub fn build(rank: usize, classes: &[DerivedClass]) -> Result<ClassesJson> {
        let mut out = Vec::with_capacity(classes.len());
        for class in classes {
            let det = cartan_determinant(&cartan_matrix(&class.representative)?);
            out.push(ClassJson {
                three_cycles: class.three_cycles,
                size: class.members.len(),
                cartan_determinant: det,
                representative_quiver: QuiverJson::from(&class.representative),
            });
        }
        Ok(ClassesJson { rank, classes: out })
    }
}
