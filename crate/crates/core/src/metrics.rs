//! Distance partitions, distance sequences and distance-residual graphs.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Vertices grouped by distance from a root set: `classes[i]` holds the
/// vertices at distance exactly `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistancePartition {
    pub classes: Vec<VertexSet>,
    /// `class_of[v]` is the index of the class containing `v`.
    pub class_of: Vec<usize>,
}

impl DistancePartition {
    /// Eccentricity index `r` of the root: the index of the last class.
    pub fn r(&self) -> usize {
        self.classes.len() - 1
    }

    pub fn last(&self) -> &VertexSet {
        self.classes
            .last()
            .expect("partition has at least the root class")
    }

    pub fn sequence(&self) -> DistanceSequence {
        DistanceSequence(self.classes.iter().map(VertexSet::len).collect())
    }
}

/// Class sizes `|V_0|, |V_1|, ..., |V_r|`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DistanceSequence(pub Vec<usize>);

impl DistanceSequence {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// The distance-residual graph of a rooted graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualResult {
    /// Induced subgraph on the last partition class.
    pub residual: Graph,
    /// Distance from the root to the residual.
    pub d_r: usize,
    /// `origin[i]` is the host vertex of residual vertex `i`.
    pub origin: Vec<usize>,
}

/// Multi-source BFS partition of a connected graph.
///
/// A root equal to the whole vertex set gives the single class `[V(G)]`.
pub fn distance_partition(g: &Graph, root: &VertexSet) -> Result<DistancePartition> {
    root.check_host(g.order())?;
    let dist = g.bfs(root.as_slice());
    let class_of = dist
        .into_iter()
        .collect::<Option<Vec<usize>>>()
        .ok_or(Error::Disconnected("partition undefined"))?;
    let r = class_of.iter().copied().max().unwrap_or(0);
    let mut members = vec![Vec::new(); r + 1];
    for (v, &d) in class_of.iter().enumerate() {
        members[d].push(v);
    }
    Ok(DistancePartition {
        classes: members.into_iter().map(VertexSet::from_sorted).collect(),
        class_of,
    })
}

pub fn distance_sequence(g: &Graph, root: &VertexSet) -> Result<DistanceSequence> {
    Ok(distance_partition(g, root)?.sequence())
}

/// Induced subgraph on the class farthest from `root`.
pub fn residual(g: &Graph, root: &VertexSet) -> Result<ResidualResult> {
    let partition = distance_partition(g, root)?;
    let last = partition.last();
    Ok(ResidualResult {
        residual: g.induced_subgraph(last)?,
        d_r: partition.r(),
        origin: last.as_slice().to_vec(),
    })
}

/// Coefficients of the growth polynomial at `v`, lowest degree first. This is
/// the distance sequence of the single-vertex root `{v}`.
pub fn growth_polynomial(g: &Graph, v: usize) -> Result<Vec<usize>> {
    Ok(distance_sequence(g, &VertexSet::single(v, g.order())?)?.0)
}

/// True iff every vertex has the same growth polynomial.
pub fn is_growth_regular(g: &Graph) -> Result<bool> {
    let first = growth_polynomial(g, 0)?;
    for v in 1..g.order() {
        if growth_polynomial(g, v)? != first {
            return Ok(false);
        }
    }
    Ok(true)
}
