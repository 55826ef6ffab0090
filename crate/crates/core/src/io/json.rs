//! JSON records emitted by the command-line tool.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::io::graph6::serialize_graph6;
use crate::metrics::distance_partition;

/// Flat record for partition and residual queries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionRecord {
    pub classes: Vec<Vec<usize>>,
    pub sequence: Vec<usize>,
    #[serde(rename = "d_R")]
    pub d_r: usize,
    pub residual_g6: String,
}

impl PartitionRecord {
    pub fn compute(g: &Graph, root: &VertexSet) -> Result<Self> {
        let p = distance_partition(g, root)?;
        let residual = g.induced_subgraph(p.last())?;
        Ok(PartitionRecord {
            classes: p.classes.iter().map(|c| c.as_slice().to_vec()).collect(),
            sequence: p.sequence().0,
            d_r: p.r(),
            residual_g6: serialize_graph6(&residual)?,
        })
    }
}
