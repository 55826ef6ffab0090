//! Simple undirected graphs on dense vertex ids `0..n`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A finite simple undirected graph.
///
/// Vertices are `0..n`. Each adjacency list is sorted and duplicate free, no
/// vertex is its own neighbour, and `u ∈ adj(v) ⇔ v ∈ adj(u)`. Optional
/// per-vertex labels record provenance (for example the factor coordinates
/// of a product vertex) and are ignored by equality and isomorphism.
#[derive(Clone, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Repeated edges collapse into one.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(Error::InvalidEdge(u, v));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj, labels: None })
    }

    /// Builds a graph from an adjacency predicate evaluated on every pair `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adj = vec![Vec::new(); n];
        for u in 0..n {
            for v in (u + 1)..n {
                if adjacent(u, v) {
                    adj[u].push(v);
                    adj[v].push(u);
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { adj, labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order(), "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of `v`, falling back to its id.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        degrees.sort_unstable();
        degrees
    }

    /// Common degree if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adj.first()?.len();
        self.adj.iter().all(|l| l.len() == first).then_some(first)
    }

    pub fn is_regular(&self) -> bool {
        self.order() == 0 || self.regular_degree().is_some()
    }

    /// Image of the graph under the vertex map `v -> perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order());
        let mut adj = vec![Vec::new(); self.order()];
        for (u, list) in self.adj.iter().enumerate() {
            adj[perm[u]] = list.iter().map(|&v| perm[v]).collect();
            adj[perm[u]].sort_unstable();
        }
        Graph { adj, labels: None }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&v| v + shift).collect()),
        );
        Graph { adj, labels: None }
    }

    /// Induced subgraph on `set`, relabelled `0..|set|` in the sorted order of
    /// `set`. Labels of the result are the original labels (or ids).
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<Graph> {
        set.check_host(self.order())?;
        let members = set.as_slice();
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in members.iter().enumerate() {
            index[v] = i;
        }
        let adj = members
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| index[w] != usize::MAX)
                    .map(|&w| index[w])
                    .collect()
            })
            .collect();
        let labels = members.iter().map(|&v| self.label(v)).collect();
        Ok(Graph {
            adj,
            labels: Some(labels),
        })
    }

    /// BFS distances from a set of sources. `None` marks unreachable vertices.
    pub fn bfs(&self, sources: &[usize]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let next = dist[u].map(|d| d + 1);
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// True iff one BFS from vertex 0 reaches every vertex. The null graph is
    /// not connected.
    pub fn is_connected(&self) -> bool {
        self.order() > 0 && self.bfs(&[0]).iter().all(Option::is_some)
    }

    /// Two-colouring of a connected graph with vertex 0 in the first class.
    ///
    /// Returns `Ok(None)` when an odd cycle exists. A single vertex has no
    /// proper bipartition into two non-empty sets and is reported as
    /// [`Error::Edgeless`].
    pub fn bipartition(&self) -> Result<Option<(VertexSet, VertexSet)>> {
        if !self.is_connected() {
            return Err(Error::Disconnected("bipartition is not unique"));
        }
        if self.order() == 1 {
            return Err(Error::Edgeless);
        }
        match self.two_colouring() {
            None => Ok(None),
            Some(side) => {
                let (left, right): (Vec<usize>, Vec<usize>) =
                    (0..self.order()).partition(|&v| !side[v]);
                Ok(Some((
                    VertexSet::from_sorted(left),
                    VertexSet::from_sorted(right),
                )))
            }
        }
    }

    /// Bipartiteness for arbitrary (possibly disconnected) graphs.
    pub fn is_bipartite(&self) -> bool {
        self.two_colouring().is_some()
    }

    fn two_colouring(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.order()];
        let mut queue = VecDeque::new();
        for start in 0..self.order() {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let s = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!s);
                            queue.push_back(w);
                        }
                        Some(t) if t == s => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    /// Line graph. Vertex `i` is the `i`-th edge of [`Graph::edges`].
    pub fn line_graph(&self) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = self.edges().collect();
        if edges.is_empty() {
            return Err(Error::Edgeless);
        }
        let mut incident = vec![Vec::new(); self.order()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        let mut adj = vec![Vec::new(); edges.len()];
        for list in &incident {
            for (a, &e) in list.iter().enumerate() {
                for &f in &list[a + 1..] {
                    adj[e].push(f);
                    adj[f].push(e);
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let labels = edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
        Ok(Graph {
            adj,
            labels: Some(labels),
        })
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.order(),
            self.edges().collect::<Vec<_>>()
        )
    }
}

/// A non-empty sorted set of vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    /// Sorts and deduplicates `members` and checks them against a host of order `n`.
    pub fn new(mut members: Vec<usize>, n: usize) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        let set = VertexSet(members);
        set.check_host(n)?;
        Ok(set)
    }

    pub fn single(v: usize, n: usize) -> Result<Self> {
        Self::new(vec![v], n)
    }

    /// All vertices of a graph of order `n`.
    pub fn full(n: usize) -> Result<Self> {
        Self::new((0..n).collect(), n)
    }

    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet(members)
    }

    pub(crate) fn check_host(&self, n: usize) -> Result<()> {
        if self.0.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange {
                vertex: v,
                order: n,
            }),
            _ => Ok(()),
        }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}
