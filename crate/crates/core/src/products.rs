//! The four standard graph products and direct-product distances.
//!
//! Product vertex `(g, h)` has id `g * |V(H)| + h`: row-major with the first
//! factor outer. Every residual checker relies on this convention to map
//! product vertices back to factor coordinates.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductKind {
    Cartesian,
    Strong,
    /// `G ∘ H = G[H]`: each vertex of `G` blown up into a copy of `H`.
    Lexicographic,
    Direct,
}

impl ProductKind {
    pub const ALL: [ProductKind; 4] = [
        ProductKind::Cartesian,
        ProductKind::Strong,
        ProductKind::Lexicographic,
        ProductKind::Direct,
    ];

    /// Edge count of the product from the factor orders and sizes.
    pub fn expected_size(self, g: &Graph, h: &Graph) -> usize {
        let (ng, mg, nh, mh) = (g.order(), g.size(), h.order(), h.size());
        match self {
            ProductKind::Cartesian => mg * nh + ng * mh,
            ProductKind::Strong => mg * nh + ng * mh + 2 * mg * mh,
            ProductKind::Lexicographic => mg * nh * nh + ng * mh,
            ProductKind::Direct => 2 * mg * mh,
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Strong => "strong",
            ProductKind::Lexicographic => "lex",
            ProductKind::Direct => "direct",
        })
    }
}

impl FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cartesian" => Ok(ProductKind::Cartesian),
            "strong" => Ok(ProductKind::Strong),
            "lex" | "lexicographic" => Ok(ProductKind::Lexicographic),
            "direct" | "tensor" => Ok(ProductKind::Direct),
            other => Err(Error::Precondition(format!(
                "unknown product kind '{other}'"
            ))),
        }
    }
}

/// Builds the product of `g` and `h`.
///
/// Products are constructed even when disconnected (the direct product of two
/// bipartite graphs, for instance); callers that need a distance partition
/// get the connectivity error from [`crate::metrics`].
pub fn product(kind: ProductKind, g: &Graph, h: &Graph) -> Graph {
    let nh = h.order();
    let id = |a: usize, b: usize| a * nh + b;
    let mut edges = Vec::with_capacity(kind.expected_size(g, h));
    for a in 0..g.order() {
        for b in 0..nh {
            let v = id(a, b);
            let mut push = |w: usize| {
                if v < w {
                    edges.push((v, w));
                }
            };
            let same_first = matches!(
                kind,
                ProductKind::Cartesian | ProductKind::Strong | ProductKind::Lexicographic
            );
            if same_first {
                for &b2 in h.neighbors(b) {
                    push(id(a, b2));
                }
            }
            for &a2 in g.neighbors(a) {
                match kind {
                    ProductKind::Cartesian => push(id(a2, b)),
                    ProductKind::Strong => {
                        push(id(a2, b));
                        for &b2 in h.neighbors(b) {
                            push(id(a2, b2));
                        }
                    }
                    ProductKind::Direct => {
                        for &b2 in h.neighbors(b) {
                            push(id(a2, b2));
                        }
                    }
                    ProductKind::Lexicographic => {
                        for b2 in 0..nh {
                            push(id(a2, b2));
                        }
                    }
                }
            }
        }
    }
    let labels = (0..g.order())
        .flat_map(|a| (0..nh).map(move |b| (a, b)))
        .map(|(a, b)| format!("({},{})", g.label(a), h.label(b)))
        .collect();
    let out = Graph::from_edges(g.order() * nh, edges)
        .expect("product edges are valid")
        .with_labels(labels);
    assert_eq!(
        out.size(),
        kind.expected_size(g, h),
        "{kind} product edge count"
    );
    out
}

/// Left fold of [`product`] over `factors`.
pub fn product_many(kind: ProductKind, factors: &[Graph]) -> Result<Graph> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| Error::Precondition("empty factor list".into()))?;
    Ok(rest
        .iter()
        .fold(first.clone(), |acc, f| product(kind, &acc, f)))
}

/// Which walk lengths `0..=bound` join `u` to `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkLengthProfile {
    pub u: usize,
    pub v: usize,
    /// Shortest achievable length, `None` when no walk of length `<= bound` exists.
    pub threshold: Option<usize>,
    /// Both parities occur among the achievable lengths.
    pub parity_mix: bool,
    /// `achievable[l]` iff a `u`-`v` walk of length exactly `l` exists.
    pub achievable: Vec<bool>,
}

impl WalkLengthProfile {
    pub fn admits(&self, length: usize) -> bool {
        self.achievable.get(length).copied().unwrap_or(false)
    }

    pub fn bound(&self) -> usize {
        self.achievable.len() - 1
    }
}

/// Exact walk-length profile by frontier expansion over `(vertex, step)`.
pub fn walk_length_profile(
    g: &Graph,
    u: usize,
    v: usize,
    bound: usize,
) -> Result<WalkLengthProfile> {
    for x in [u, v] {
        if x >= g.order() {
            return Err(Error::VertexOutOfRange {
                vertex: x,
                order: g.order(),
            });
        }
    }
    let mut frontier = vec![false; g.order()];
    frontier[u] = true;
    let mut achievable = Vec::with_capacity(bound + 1);
    achievable.push(u == v);
    for _ in 0..bound {
        let mut next = vec![false; g.order()];
        for x in (0..g.order()).filter(|&x| frontier[x]) {
            for &y in g.neighbors(x) {
                next[y] = true;
            }
        }
        frontier = next;
        achievable.push(frontier[v]);
    }
    let threshold = achievable.iter().position(|&a| a);
    let has_parity = |p: usize| achievable.iter().enumerate().any(|(l, &a)| a && l % 2 == p);
    let parity_mix = has_parity(0) && has_parity(1);
    Ok(WalkLengthProfile {
        u,
        v,
        threshold,
        parity_mix,
        achievable,
    })
}

/// Distance between `x` and `y` in the direct product of `factors`, from walk
/// lengths in each factor: the least `m <= bound` such that every factor has
/// an `x_i`-`y_i` walk of length `m`. `None` means the vertices lie in
/// different components.
///
/// `bound` defaults to `2 * Σ |V(G_i)|`, which exceeds every finite distance.
pub fn direct_distance(
    factors: &[Graph],
    x: &[usize],
    y: &[usize],
    bound: Option<usize>,
) -> Result<Option<usize>> {
    if factors.is_empty() || x.len() != factors.len() || y.len() != factors.len() {
        return Err(Error::Precondition(
            "one coordinate per factor is required".into(),
        ));
    }
    let bound = bound.unwrap_or_else(|| 2 * factors.iter().map(Graph::order).sum::<usize>());
    let profiles = factors
        .iter()
        .zip(x.iter().zip(y))
        .map(|(g, (&a, &b))| walk_length_profile(g, a, b, bound))
        .collect::<Result<Vec<_>>>()?;
    Ok((0..=bound).find(|&m| profiles.iter().all(|p| p.admits(m))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;

    fn complete(n: usize) -> Graph {
        Graph::from_fn(n, |_, _| true)
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn square_is_k2_times_k2() {
        let c4 = product(ProductKind::Cartesian, &complete(2), &complete(2));
        assert!(are_isomorphic(&c4, &cycle(4)).is_isomorphic());
    }

    #[test]
    fn strong_product_of_complete_graphs_is_complete() {
        for (m, n) in [(2, 3), (3, 3), (4, 2)] {
            let g = product(ProductKind::Strong, &complete(m), &complete(n));
            assert_eq!(g, complete(m * n));
        }
    }

    #[test]
    fn direct_k2_squared_is_two_edges() {
        let g = product(ProductKind::Direct, &complete(2), &complete(2));
        assert_eq!(g, Graph::from_edges(4, [(0, 3), (1, 2)]).unwrap());
        assert!(!g.is_connected());
    }

    #[test]
    fn lexicographic_unit_factor() {
        let c4 = cycle(4);
        let k1 = complete(1);
        assert_eq!(product(ProductKind::Lexicographic, &c4, &k1), c4);
        assert_eq!(product(ProductKind::Lexicographic, &k1, &c4), c4);
    }

    #[test]
    fn labels_record_coordinates() {
        let g = product(ProductKind::Cartesian, &complete(2), &complete(3));
        assert_eq!(g.label(4), "(1,1)");
    }

    #[test]
    fn product_many_cases() {
        let q3 = product_many(ProductKind::Cartesian, &vec![complete(2); 3]).unwrap();
        assert_eq!(q3.order(), 8);
        assert_eq!(q3.regular_degree(), Some(3));
        assert_eq!(
            product_many(ProductKind::Strong, &vec![complete(2); 3]).unwrap(),
            complete(8)
        );
        assert_eq!(
            product_many(ProductKind::Direct, &[cycle(5)]).unwrap(),
            cycle(5)
        );
        assert!(product_many(ProductKind::Direct, &[]).is_err());
    }

    #[test]
    fn walk_profiles() {
        let k2 = complete(2);
        let p = walk_length_profile(&k2, 0, 1, 7).unwrap();
        assert_eq!(
            p.achievable,
            (0..=7).map(|l| l % 2 == 1).collect::<Vec<_>>()
        );
        assert_eq!(p.threshold, Some(1));
        assert!(!p.parity_mix);

        let q = walk_length_profile(&k2, 1, 1, 3).unwrap();
        assert!(q.admits(0));

        // triangle closed walks: lengths 0, 2, 3, 4, 5 (no walk of length 1)
        let t = walk_length_profile(&complete(3), 0, 0, 5).unwrap();
        assert_eq!(t.achievable, vec![true, false, true, true, true, true]);
        assert!(t.parity_mix);
    }

    #[test]
    fn direct_distances() {
        let k2 = complete(2);
        let k3 = complete(3);
        assert_eq!(
            direct_distance(&[k2.clone(), k2.clone()], &[0, 0], &[0, 0], None),
            Ok(Some(0))
        );
        assert_eq!(
            direct_distance(&[k2.clone(), k2.clone()], &[0, 0], &[1, 0], None),
            Ok(None)
        );
        assert_eq!(
            direct_distance(&[k3, k2], &[0, 0], &[0, 1], None),
            Ok(Some(3))
        );
    }
}
