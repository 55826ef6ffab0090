//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the library's BFS, partition or residual code.
#![allow(dead_code, clippy::needless_range_loop)]

use distres_core::{are_isomorphic, Graph};
use proptest::prelude::*;

/// All-pairs distances by Floyd-Warshall over the adjacency matrix.
pub fn distance_matrix(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.order();
    let mut d = vec![vec![None; n]; n];
    for u in 0..n {
        d[u][u] = Some(0);
        for v in 0..n {
            if u != v && g.has_edge(u, v) {
                d[u][v] = Some(1);
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Distance from a root set to every vertex, from the full distance matrix.
pub fn set_distances(g: &Graph, root: &[usize]) -> Vec<Option<usize>> {
    let d = distance_matrix(g);
    (0..g.order())
        .map(|v| root.iter().filter_map(|&r| d[r][v]).min())
        .collect()
}

/// Farthest class from `root`, its distance, and the induced subgraph on it
/// built edge by edge from `has_edge`.
pub fn brute_residual(g: &Graph, root: &[usize]) -> (Graph, usize, Vec<usize>) {
    let dist: Vec<usize> = set_distances(g, root)
        .into_iter()
        .map(|d| d.expect("connected host"))
        .collect();
    let far = *dist.iter().max().unwrap();
    let last: Vec<usize> = (0..g.order()).filter(|&v| dist[v] == far).collect();
    let sub = Graph::from_fn(last.len(), |i, j| g.has_edge(last[i], last[j]));
    (sub, far, last)
}

/// `out[l]` iff some `u`-`v` walk of length exactly `l <= max` exists, by
/// enumerating walks depth first.
pub fn walk_lengths(g: &Graph, u: usize, v: usize, max: usize) -> Vec<bool> {
    fn go(g: &Graph, at: usize, v: usize, len: usize, max: usize, out: &mut Vec<bool>) {
        if at == v {
            out[len] = true;
        }
        if len == max {
            return;
        }
        for &w in g.neighbors(at) {
            go(g, w, v, len + 1, max, out);
        }
    }
    let mut out = vec![false; max + 1];
    go(g, u, v, 0, max, &mut out);
    out
}

pub fn iso(a: &Graph, b: &Graph) -> bool {
    are_isomorphic(a, b).is_isomorphic()
}

/// Isomorphism by trying every bijection; only for tiny graphs.
pub fn brute_iso(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && all_automorphism_like(a, b).next().is_some()
}

/// Every bijection `p` with `a.has_edge(u, v) == b.has_edge(p[u], p[v])`.
pub fn all_automorphism_like<'a>(
    a: &'a Graph,
    b: &'a Graph,
) -> impl Iterator<Item = Vec<usize>> + 'a {
    permutations(a.order()).filter(move |p| {
        (0..a.order())
            .all(|u| (u + 1..a.order()).all(|v| a.has_edge(u, v) == b.has_edge(p[u], p[v])))
    })
}

pub fn permutations(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = Some((0..n).collect());
    std::iter::from_fn(move || {
        let out = current.clone()?;
        // next lexicographic permutation
        let p = current.as_mut().unwrap();
        match (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) {
            Some(i) => {
                let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
                p.swap(i - 1, j);
                p[i..].reverse();
            }
            None => current = None,
        }
        Some(out)
    })
}

pub fn copies(k: usize, h: &Graph) -> Graph {
    (0..k).fold(Graph::empty(0), |acc, _| acc.disjoint_union(h))
}

/// Graphs on `min..=max` vertices with arbitrary edge sets.
pub fn any_graph(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
            move |bits| {
                let mut bits = bits.into_iter();
                Graph::from_fn(n, |_, _| bits.next().unwrap())
            },
        )
    })
}

/// Random spanning tree (vertex `i > 0` hangs off `parents[i - 1] < i`)
/// plus each remaining pair whose roll falls below `density`.
fn tree_plus(n: usize) -> impl Strategy<Value = (Vec<usize>, Vec<u8>, u8)> {
    let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
    (
        parents,
        proptest::collection::vec(any::<u8>(), n * n.saturating_sub(1) / 2),
        any::<u8>(),
    )
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

/// Connected graphs on `min..=max` vertices.
pub fn connected_graph(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min.max(1)..=max).prop_flat_map(|n| {
        tree_plus(n).prop_map(move |(parents, rolls, density)| {
            let tree = parents.iter().enumerate().map(|(i, &p)| (i + 1, p));
            let extra = pairs(n)
                .zip(rolls)
                .filter(|&(_, r)| r < density)
                .map(|(e, _)| e);
            Graph::from_edges(n, tree.chain(extra).collect::<Vec<_>>()).unwrap()
        })
    })
}

/// Connected bipartite graphs on `3..=max` vertices: a two-coloured random
/// tree plus random edges between the colour classes.
pub fn connected_bipartite(max: usize) -> impl Strategy<Value = Graph> {
    (3..=max).prop_flat_map(|n| {
        tree_plus(n).prop_map(move |(parents, rolls, density)| {
            let mut colour = vec![false; n];
            for i in 1..n {
                colour[i] = !colour[parents[i - 1]];
            }
            let tree = parents.iter().enumerate().map(|(i, &p)| (i + 1, p));
            let extra = pairs(n)
                .zip(rolls)
                .filter(|&((u, v), r)| r < density && colour[u] != colour[v])
                .map(|(e, _)| e);
            Graph::from_edges(n, tree.chain(extra).collect::<Vec<_>>()).unwrap()
        })
    })
}
