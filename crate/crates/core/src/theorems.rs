//! Closed-form residuals of products and the two embedding constructions.
//!
//! Each `expected_*` function predicts a residual from the factors and their
//! own residuals without running BFS on the product. The verifier in
//! [`crate::verify`] compares these predictions with brute-force residuals.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::iso::is_vertex_transitive;
use crate::metrics::{residual, ResidualResult};
use crate::products::{product, product_many, ProductKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    Cartesian,
    CartesianNary,
    Strong,
    StrongGmax,
    Lexicographic,
    LexicographicNary,
    BipartiteEdge,
    DirectDistanceFormula,
    EmbedUniversal,
    EmbedVertexTransitive,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::Cartesian,
        TheoremId::CartesianNary,
        TheoremId::Strong,
        TheoremId::StrongGmax,
        TheoremId::Lexicographic,
        TheoremId::LexicographicNary,
        TheoremId::BipartiteEdge,
        TheoremId::DirectDistanceFormula,
        TheoremId::EmbedUniversal,
        TheoremId::EmbedVertexTransitive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Cartesian => "cartesian",
            TheoremId::CartesianNary => "cartesian_nary",
            TheoremId::Strong => "strong",
            TheoremId::StrongGmax => "strong_gmax",
            TheoremId::Lexicographic => "lexicographic",
            TheoremId::LexicographicNary => "lexicographic_nary",
            TheoremId::BipartiteEdge => "bipartite_edge",
            TheoremId::DirectDistanceFormula => "direct_distance_formula",
            TheoremId::EmbedUniversal => "embed_universal",
            TheoremId::EmbedVertexTransitive => "embed_vertex_transitive",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.replace('-', "_");
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == wanted)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

/// Product vertex ids `{g * n_h + h : g ∈ a, h ∈ b}` of a two-factor product.
pub fn product_set(a: &VertexSet, b: &VertexSet, n_h: usize) -> VertexSet {
    let members = a
        .iter()
        .flat_map(|g| b.iter().map(move |h| g * n_h + h))
        .collect();
    VertexSet::from_sorted(members)
}

/// Row-major product of several vertex sets, first factor outer.
pub fn product_set_many(sets: &[VertexSet], orders: &[usize]) -> VertexSet {
    let mut acc = sets[0].clone();
    for (s, &n) in sets[1..].iter().zip(&orders[1..]) {
        acc = product_set(&acc, s, n);
    }
    acc
}

/// Splits a row-major product id into factor coordinates.
pub fn coordinates(mut id: usize, orders: &[usize]) -> Vec<usize> {
    let mut out = vec![0; orders.len()];
    for (slot, &n) in out.iter_mut().zip(orders).rev() {
        *slot = id % n;
        id /= n;
    }
    out
}

fn require_connected(g: &Graph, what: &'static str) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected(what))
    }
}

/// `Res(G, R_G) □ Res(H, R_H)`.
pub fn expected_cartesian_residual(
    g: &Graph,
    rg: &VertexSet,
    h: &Graph,
    rh: &VertexSet,
) -> Result<Graph> {
    let a = residual(g, rg)?;
    let b = residual(h, rh)?;
    Ok(product(ProductKind::Cartesian, &a.residual, &b.residual))
}

/// Cartesian product of the factor residuals.
pub fn expected_cartesian_nary_residual(factors: &[(Graph, VertexSet)]) -> Result<Graph> {
    let residuals = factors
        .iter()
        .map(|(g, r)| residual(g, r).map(|x| x.residual))
        .collect::<Result<Vec<_>>>()?;
    product_many(ProductKind::Cartesian, &residuals)
}

/// Which factor's root is farther from its residual in a strong product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StrongCase {
    FirstFarther,
    SecondFarther,
    Equal,
}

impl StrongCase {
    pub fn name(self) -> &'static str {
        match self {
            StrongCase::FirstFarther => "d_G>d_H",
            StrongCase::SecondFarther => "d_G<d_H",
            StrongCase::Equal => "d_G=d_H",
        }
    }
}

pub fn strong_case(g: &Graph, rg: &VertexSet, h: &Graph, rh: &VertexSet) -> Result<StrongCase> {
    let (a, b) = (residual(g, rg)?.d_r, residual(h, rh)?.d_r);
    Ok(match a.cmp(&b) {
        std::cmp::Ordering::Greater => StrongCase::FirstFarther,
        std::cmp::Ordering::Less => StrongCase::SecondFarther,
        std::cmp::Ordering::Equal => StrongCase::Equal,
    })
}

/// Residual of `G ⊠ H` rooted at `R_G × R_H`, by comparing the factor
/// root-to-residual distances.
pub fn expected_strong_residual(
    g: &Graph,
    rg: &VertexSet,
    h: &Graph,
    rh: &VertexSet,
) -> Result<Graph> {
    let a = residual(g, rg)?;
    let b = residual(h, rh)?;
    Ok(match a.d_r.cmp(&b.d_r) {
        std::cmp::Ordering::Greater => product(ProductKind::Strong, h, &a.residual),
        std::cmp::Ordering::Less => product(ProductKind::Strong, g, &b.residual),
        std::cmp::Ordering::Equal => {
            let nh = h.order();
            let mut members: Vec<usize> = (0..g.order())
                .flat_map(|x| (0..nh).map(move |y| (x, y)))
                .filter(|&(x, y)| a.origin.contains(&x) || b.origin.contains(&y))
                .map(|(x, y)| x * nh + y)
                .collect();
            members.sort_unstable();
            product(ProductKind::Strong, g, h).induced_subgraph(&VertexSet::from_sorted(members))?
        }
    })
}

/// Number of factors whose root-to-residual distance is maximal.
pub fn strong_gmax_size(factors: &[(Graph, VertexSet)]) -> Result<usize> {
    let ds = factors
        .iter()
        .map(|(g, r)| residual(g, r).map(|x| x.d_r))
        .collect::<Result<Vec<_>>>()?;
    let max = ds.iter().copied().max().unwrap_or(0);
    Ok(ds.iter().filter(|&&d| d == max).count())
}

/// Residual of an n-fold strong product: the vertices having, in some factor
/// of maximal root distance, a coordinate in that factor's residual.
pub fn expected_strong_gmax_residual(factors: &[(Graph, VertexSet)]) -> Result<Graph> {
    if factors.is_empty() {
        return Err(Error::Precondition("empty factor list".into()));
    }
    let residuals = factors
        .iter()
        .map(|(g, r)| {
            require_connected(g, "every factor must be connected")?;
            residual(g, r)
        })
        .collect::<Result<Vec<ResidualResult>>>()?;
    let max = residuals.iter().map(|r| r.d_r).max().unwrap_or(0);
    let gmax: Vec<usize> = (0..factors.len())
        .filter(|&i| residuals[i].d_r == max)
        .collect();
    let graphs: Vec<Graph> = factors.iter().map(|(g, _)| g.clone()).collect();
    if let [only] = gmax[..] {
        let mut parts = graphs;
        parts[only] = residuals[only].residual.clone();
        return product_many(ProductKind::Strong, &parts);
    }
    let orders: Vec<usize> = graphs.iter().map(Graph::order).collect();
    let total: usize = orders.iter().product();
    let members: Vec<usize> = (0..total)
        .filter(|&id| {
            let c = coordinates(id, &orders);
            gmax.iter().any(|&i| residuals[i].origin.contains(&c[i]))
        })
        .collect();
    product_many(ProductKind::Strong, &graphs)?.induced_subgraph(&VertexSet::from_sorted(members))
}

/// The four shapes of a lexicographic-product residual.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LexCase {
    /// `d_{R_G} = 1` and some isolated root vertex has vertices of `H` at
    /// distance at least 2 from `R_H` in its copy.
    IsolatedCopies,
    /// `d_{R_G} = 1` otherwise: everything outside the root.
    Complement,
    /// `d_{R_G} = 2`: `Res(G) ∘ H` plus the copies from the first case.
    ResidualWithCopies,
    /// `d_{R_G} >= 3`: `Res(G) ∘ H`.
    Residual,
}

impl LexCase {
    pub fn name(self) -> &'static str {
        match self {
            LexCase::IsolatedCopies => "case1",
            LexCase::Complement => "case2",
            LexCase::ResidualWithCopies => "case3",
            LexCase::Residual => "case4",
        }
    }
}

/// Residual of `G ∘ H` rooted at `R_G × R_H` together with the case used.
///
/// `G` must be connected with at least two vertices and `R_G ≠ V(G)`. `H` may
/// be disconnected; "distance at least 2 from `R_H`" then includes vertices
/// unreachable from `R_H`.
pub fn lexicographic_residual_with_case(
    g: &Graph,
    rg: &VertexSet,
    h: &Graph,
    rh: &VertexSet,
) -> Result<(Graph, LexCase)> {
    if g.order() < 2 {
        return Err(Error::Precondition(
            "first lexicographic factor must be nontrivial".into(),
        ));
    }
    require_connected(g, "first lexicographic factor must be connected")?;
    rh.check_host(h.order())?;
    if rg.len() == g.order() {
        return Err(Error::Precondition(
            "root must not cover the first factor".into(),
        ));
    }
    let res_g = residual(g, rg)?;
    let isolated = rg
        .iter()
        .filter(|&x| g.neighbors(x).iter().all(|&y| !rg.contains(y)))
        .count();
    let far: Vec<usize> = (0..h.order())
        .filter(|&y| !rh.contains(y) && h.neighbors(y).iter().all(|&z| !rh.contains(z)))
        .collect();
    let copies = if isolated > 0 && !far.is_empty() {
        let piece = h.induced_subgraph(&VertexSet::from_sorted(far))?;
        Some((1..isolated).fold(piece.clone(), |acc, _| acc.disjoint_union(&piece)))
    } else {
        None
    };
    Ok(match (res_g.d_r, copies) {
        (1, Some(c)) => (c, LexCase::IsolatedCopies),
        (1, None) => {
            let root = product_set(rg, rh, h.order());
            let rest: Vec<usize> = (0..g.order() * h.order())
                .filter(|&v| !root.contains(v))
                .collect();
            let full = product(ProductKind::Lexicographic, g, h);
            (
                full.induced_subgraph(&VertexSet::from_sorted(rest))?,
                LexCase::Complement,
            )
        }
        (2, c) => {
            let base = product(ProductKind::Lexicographic, &res_g.residual, h);
            let graph = match c {
                Some(c) => base.disjoint_union(&c),
                None => base,
            };
            (graph, LexCase::ResidualWithCopies)
        }
        (_, _) => (
            product(ProductKind::Lexicographic, &res_g.residual, h),
            LexCase::Residual,
        ),
    })
}

pub fn expected_lexicographic_residual(
    g: &Graph,
    rg: &VertexSet,
    h: &Graph,
    rh: &VertexSet,
) -> Result<Graph> {
    lexicographic_residual_with_case(g, rg, h, rh).map(|(graph, _)| graph)
}

/// `Res(G_1, R_1) ∘ G_2 ∘ ... ∘ G_n`, valid when every partial product
/// `G_1 ∘ ... ∘ G_i` (`i < n`) has root-to-residual distance at least 3.
pub fn expected_lexicographic_nary_residual(factors: &[(Graph, VertexSet)]) -> Result<Graph> {
    let Some(((g1, r1), rest)) = factors.split_first() else {
        return Err(Error::Precondition("empty factor list".into()));
    };
    require_connected(g1, "first lexicographic factor must be connected")?;
    let mut partial = g1.clone();
    let mut root = r1.clone();
    for (i, (g, r)) in rest.iter().enumerate() {
        let d = residual(&partial, &root)?.d_r;
        if d < 3 {
            return Err(Error::Precondition(format!(
                "partial product of the first {} factor(s) has root distance {d} < 3",
                i + 1
            )));
        }
        root = product_set(&root, r, g.order());
        partial = product(ProductKind::Lexicographic, &partial, g);
    }
    let mut parts = vec![residual(g1, r1)?.residual];
    parts.extend(rest.iter().map(|(g, _)| g.clone()));
    product_many(ProductKind::Lexicographic, &parts)
}

/// Relation between the two vertex-residual distances of an edge `uv`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BipartiteCase {
    Equal,
    UFarther,
    VFarther,
}

impl BipartiteCase {
    pub fn name(self) -> &'static str {
        match self {
            BipartiteCase::Equal => "d_u=d_v",
            BipartiteCase::UFarther => "d_u=d_v+1",
            BipartiteCase::VFarther => "d_v=d_u+1",
        }
    }
}

/// Edge residual of a connected bipartite graph from its two vertex
/// residuals, with the case used.
pub fn bipartite_edge_residual_with_case(
    g: &Graph,
    u: usize,
    v: usize,
) -> Result<(Graph, BipartiteCase)> {
    let n = g.order();
    if !g.has_edge(u, v) {
        return Err(Error::NotAdjacent(u, v));
    }
    if n == 2 {
        return Err(Error::Precondition("graph must not be K_2".into()));
    }
    require_connected(g, "graph must be connected")?;
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    let ru = residual(g, &VertexSet::single(u, n)?)?;
    let rv = residual(g, &VertexSet::single(v, n)?)?;
    if ru.d_r == rv.d_r {
        let mut members = ru.origin.clone();
        members.extend(&rv.origin);
        let set = VertexSet::new(members, n)?;
        Ok((g.induced_subgraph(&set)?, BipartiteCase::Equal))
    } else if ru.d_r == rv.d_r + 1 {
        Ok((ru.residual, BipartiteCase::UFarther))
    } else if rv.d_r == ru.d_r + 1 {
        Ok((rv.residual, BipartiteCase::VFarther))
    } else {
        Err(Error::Precondition(format!(
            "vertex residual distances {} and {} differ by more than one",
            ru.d_r, rv.d_r
        )))
    }
}

pub fn expected_bipartite_edge_residual(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    bipartite_edge_residual_with_case(g, u, v).map(|(graph, _)| graph)
}

/// `reach[v][l]`: some root vertex has a walk of length exactly `l` to `v`.
fn walk_reach_from_set(g: &Graph, roots: &VertexSet, bound: usize) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut reach = vec![vec![false; bound + 1]; n];
    let mut frontier = vec![false; n];
    for r in roots.iter() {
        frontier[r] = true;
    }
    for l in 0..=bound {
        for (row, &hit) in reach.iter_mut().zip(&frontier) {
            row[l] = hit;
        }
        let mut next = vec![false; n];
        for x in (0..n).filter(|&x| frontier[x]) {
            for &y in g.neighbors(x) {
                next[y] = true;
            }
        }
        frontier = next;
    }
    reach
}

/// Residual of the direct product `G × H` rooted at `R_G × R_H`: the vertices
/// `(g, h)` maximizing the least `m` for which some root pair has walks of
/// length `m` to `g` in `G` and to `h` in `H`.
pub fn expected_direct_residual(
    g: &Graph,
    rg: &VertexSet,
    h: &Graph,
    rh: &VertexSet,
) -> Result<ResidualResult> {
    require_connected(g, "direct factors must be connected")?;
    require_connected(h, "direct factors must be connected")?;
    if g.is_bipartite() && h.is_bipartite() {
        return Err(Error::Precondition(
            "at least one direct factor must be non-bipartite".into(),
        ));
    }
    rg.check_host(g.order())?;
    rh.check_host(h.order())?;
    let bound = 2 * (g.order() + h.order());
    let a = walk_reach_from_set(g, rg, bound);
    let b = walk_reach_from_set(h, rh, bound);
    let nh = h.order();
    let mut dist = Vec::with_capacity(g.order() * nh);
    for ax in &a {
        for by in &b {
            let d = (0..=bound)
                .find(|&m| ax[m] && by[m])
                .ok_or(Error::Disconnected("direct product is disconnected"))?;
            dist.push(d);
        }
    }
    let d_r = dist.iter().copied().max().unwrap_or(0);
    let origin: Vec<usize> = (0..dist.len()).filter(|&v| dist[v] == d_r).collect();
    let residual = product(ProductKind::Direct, g, h)
        .induced_subgraph(&VertexSet::from_sorted(origin.clone()))?;
    Ok(ResidualResult {
        residual,
        d_r,
        origin,
    })
}

/// A connected graph whose residual at the returned root is `h`.
///
/// The root occupies ids `0..n` and `h` occupies `n..n + |h|`; every root
/// vertex is joined to every vertex of `h`. The root is `n` isolated vertices
/// unless `root_graph` (of order `n`) is supplied.
pub fn embed_as_residual(
    h: &Graph,
    n: usize,
    root_graph: Option<&Graph>,
) -> Result<(Graph, VertexSet)> {
    if h.order() == 0 {
        return Err(Error::Precondition(
            "residual graph must be non-empty".into(),
        ));
    }
    if n == 0 {
        return Err(Error::Precondition("root order must be positive".into()));
    }
    if let Some(r) = root_graph {
        if r.order() != n {
            return Err(Error::Precondition(format!(
                "root graph has order {}, expected {n}",
                r.order()
            )));
        }
    }
    let total = n + h.order();
    let root_edges = root_graph.into_iter().flat_map(|r| r.edges());
    let h_edges = h.edges().map(|(a, b)| (a + n, b + n));
    let joins = (0..n).flat_map(|r| (n..total).map(move |x| (r, x)));
    let g = Graph::from_edges(total, root_edges.chain(h_edges).chain(joins))?;
    Ok((g, VertexSet::from_sorted((0..n).collect())))
}

/// A connected vertex-transitive graph `C_{n+5} ∘ h` whose residual at the
/// returned root (`n` consecutive cycle vertices × one vertex of `h`) is `h`.
pub fn vt_embed_as_residual(h: &Graph, n: usize) -> Result<(Graph, VertexSet)> {
    if n == 0 {
        return Err(Error::Precondition("root order must be positive".into()));
    }
    if h.order() == 0 || !is_vertex_transitive(h) {
        return Err(Error::Precondition(
            "graph must be vertex-transitive".into(),
        ));
    }
    let k = n + 5;
    let cycle = Graph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k)))?;
    let g = product(ProductKind::Lexicographic, &cycle, h);
    let root = VertexSet::from_sorted((0..n).map(|i| i * h.order()).collect());
    Ok((g, root))
}
