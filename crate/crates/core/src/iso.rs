//! Exact isomorphism testing and automorphism orbits.
//!
//! Both searches use the individualization-refinement scheme. A colouring is
//! refined until stable by splitting each colour class on the multiset of
//! neighbour colours; colours are canonical ranks, so the refinement of
//! isomorphic inputs produces corresponding classes. One branch of the search
//! tree (the *first path*) is fixed on the left graph: at each level the
//! lowest-id vertex of the smallest non-singleton class is individualized.
//! The right graph is then searched for a branch whose refinement traces
//! match level by level; a discrete leaf yields a candidate bijection that is
//! verified edge by edge.
//!
//! Neighbour multisets are compared through a commutative 64-bit hash. A hash
//! collision can only make the refinement coarser, never non-invariant, and
//! every reported mapping is verified, so answers stay exact.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Witness for an isomorphism query: `mapping[v]` is the image of `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoCertificate {
    pub mapping: Option<Vec<usize>>,
}

impl IsoCertificate {
    pub fn is_isomorphic(&self) -> bool {
        self.mapping.is_some()
    }
}

/// Orbits of the full automorphism group on vertices and on edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    /// Each orbit sorted; orbits ordered by their least vertex.
    pub vertex_orbits: Vec<Vec<usize>>,
    /// Each orbit sorted; orbits ordered by their least edge.
    pub edge_orbits: Vec<Vec<(usize, usize)>>,
    /// Generators of the automorphism group found during the search.
    pub generators: Vec<Vec<usize>>,
}

#[inline]
fn mix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Refines `colour` in place to a stable colouring. Returns the number of
/// classes and a trace hash of every round.
fn refine(g: &Graph, colour: &mut [u32]) -> (usize, u64) {
    let n = g.order();
    let mut cells = count_cells(colour);
    let mut trace = mix(n as u64 ^ (cells as u64) << 32);
    let mut keys: Vec<(u32, u64, usize)> = Vec::with_capacity(n);
    loop {
        keys.clear();
        for v in 0..n {
            let h = g
                .neighbors(v)
                .iter()
                .fold(0u64, |acc, &w| acc.wrapping_add(mix(colour[w] as u64)));
            keys.push((colour[v], h, v));
        }
        keys.sort_unstable();
        let mut rank = 0u32;
        let mut run = 0u64;
        for i in 0..n {
            let (c, h, v) = keys[i];
            if i > 0 && (keys[i - 1].0, keys[i - 1].1) != (c, h) {
                trace = mix(trace ^ mix((c as u64) << 40 ^ h ^ run << 20));
                rank += 1;
                run = 0;
            }
            run += 1;
            colour[v] = rank;
        }
        if n > 0 {
            let (c, h, _) = keys[n - 1];
            trace = mix(trace ^ mix((c as u64) << 40 ^ h ^ run << 20));
        }
        let new_cells = if n == 0 { 0 } else { rank as usize + 1 };
        if new_cells == cells {
            return (cells, trace);
        }
        cells = new_cells;
    }
}

fn count_cells(colour: &[u32]) -> usize {
    colour.iter().max().map_or(0, |&c| c as usize + 1)
}

/// Gives `v` its own class just below the rest of its former class.
fn individualize(colour: &[u32], v: usize) -> Vec<u32> {
    let c = colour[v];
    colour
        .iter()
        .enumerate()
        .map(|(x, &k)| if k < c || x == v { k } else { k + 1 })
        .collect()
}

/// Smallest non-singleton class, lowest colour on ties.
fn target_cell(colour: &[u32], cells: usize) -> Option<u32> {
    let mut sizes = vec![0usize; cells];
    for &c in colour {
        sizes[c as usize] += 1;
    }
    sizes
        .iter()
        .enumerate()
        .filter(|(_, &s)| s > 1)
        .min_by_key(|&(c, &s)| (s, c))
        .map(|(c, _)| c as u32)
}

struct Level {
    colour: Vec<u32>,
    trace: u64,
    /// Class split at this level and the vertex individualized in it;
    /// `None` at the discrete leaf.
    branch: Option<(u32, usize)>,
}

struct FirstPath {
    levels: Vec<Level>,
}

impl FirstPath {
    fn new(g: &Graph, mut colour: Vec<u32>) -> Self {
        let (mut cells, mut trace) = refine(g, &mut colour);
        let mut levels = Vec::new();
        loop {
            let branch = target_cell(&colour, cells).map(|c| {
                let v = (0..g.order()).find(|&x| colour[x] == c).unwrap();
                (c, v)
            });
            let next = branch.map(|(_, v)| individualize(&colour, v));
            levels.push(Level {
                colour,
                trace,
                branch,
            });
            match next {
                None => return FirstPath { levels },
                Some(mut col) => {
                    let (c, t) = refine(g, &mut col);
                    cells = c;
                    trace = t;
                    colour = col;
                }
            }
        }
    }

    fn prefix(&self, level: usize) -> Vec<usize> {
        self.levels[..level]
            .iter()
            .filter_map(|l| l.branch.map(|(_, v)| v))
            .collect()
    }
}

/// Searches the right graph below `colour` (already matched to `level` of the
/// left first path) for a leaf whose bijection is an isomorphism.
fn extend(
    left: &FirstPath,
    level: usize,
    g1: &Graph,
    g2: &Graph,
    colour: &[u32],
) -> Option<Vec<usize>> {
    let lv = &left.levels[level];
    match lv.branch {
        None => leaf_mapping(&lv.colour, colour).filter(|m| preserves_edges(g1, g2, m)),
        Some((c, _)) => {
            let expected = left.levels[level + 1].trace;
            for w in (0..g2.order()).filter(|&x| colour[x] == c) {
                let mut col = individualize(colour, w);
                let (_, trace) = refine(g2, &mut col);
                if trace == expected {
                    if let Some(m) = extend(left, level + 1, g1, g2, &col) {
                        return Some(m);
                    }
                }
            }
            None
        }
    }
}

fn leaf_mapping(left: &[u32], right: &[u32]) -> Option<Vec<usize>> {
    let n = left.len();
    let mut by_colour = vec![usize::MAX; n];
    for (x, &c) in right.iter().enumerate() {
        let slot = by_colour.get_mut(c as usize)?;
        if *slot != usize::MAX {
            return None;
        }
        *slot = x;
    }
    left.iter()
        .map(|&c| {
            by_colour
                .get(c as usize)
                .copied()
                .filter(|&x| x != usize::MAX)
        })
        .collect()
}

fn preserves_edges(g1: &Graph, g2: &Graph, mapping: &[usize]) -> bool {
    g1.size() == g2.size() && g1.edges().all(|(a, b)| g2.has_edge(mapping[a], mapping[b]))
}

/// Exact isomorphism test with a verified witness mapping.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> IsoCertificate {
    let none = IsoCertificate { mapping: None };
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence()
    {
        return none;
    }
    if g.order() == 0 {
        return IsoCertificate {
            mapping: Some(Vec::new()),
        };
    }
    let left = FirstPath::new(g, vec![0; g.order()]);
    let mut right = vec![0; h.order()];
    let (_, trace) = refine(h, &mut right);
    if trace != left.levels[0].trace {
        return none;
    }
    IsoCertificate {
        mapping: extend(&left, 0, g, h, &right),
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
        for x in 0..n {
            let r = self.find(x);
            by_root[r].push(x);
        }
        by_root.into_iter().filter(|c| !c.is_empty()).collect()
    }
}

fn orbits_of(n: usize, gens: &[Vec<usize>]) -> UnionFind {
    let mut uf = UnionFind::new(n);
    for p in gens {
        for (x, &y) in p.iter().enumerate() {
            uf.union(x, y);
        }
    }
    uf
}

/// Transpositions of vertices with equal open or closed neighbourhoods.
/// Twins are the main source of large automorphism groups in lexicographic
/// products; seeding them keeps the stabilizer search shallow.
fn twin_transpositions(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut uf = UnionFind::new(n);
    let mut gens = Vec::new();
    for u in 0..n {
        for w in (u + 1)..n {
            if g.degree(u) != g.degree(w) || uf.find(u) == uf.find(w) {
                continue;
            }
            let nu = g.neighbors(u).iter().filter(|&&x| x != w);
            let nw = g.neighbors(w).iter().filter(|&&x| x != u);
            if nu.eq(nw) {
                uf.union(u, w);
                let mut p: Vec<usize> = (0..n).collect();
                p.swap(u, w);
                gens.push(p);
            }
        }
    }
    gens
}

/// Generators of the automorphism group via a stabilizer chain along the
/// first path. At each level (deepest first) every vertex of the target
/// class not yet known to share an orbit with the path vertex is tried once.
fn automorphism_generators(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut gens = twin_transpositions(g);
    if n == 0 {
        return gens;
    }
    let path = FirstPath::new(g, vec![0; n]);
    for level in (0..path.levels.len()).rev() {
        let Some((c, v)) = path.levels[level].branch else {
            continue;
        };
        let prefix = path.prefix(level);
        let fixes_prefix = |p: &Vec<usize>| prefix.iter().all(|&x| p[x] == x);
        let colour = &path.levels[level].colour;
        let expected = path.levels[level + 1].trace;
        let mut failed: Vec<usize> = Vec::new();
        let mut uf = orbits_of(
            n,
            &gens
                .iter()
                .filter(|p| fixes_prefix(p))
                .cloned()
                .collect::<Vec<_>>(),
        );
        for w in (0..n).filter(|&x| colour[x] == c && x != v) {
            if uf.find(w) == uf.find(v) || failed.iter().any(|&f| uf.find(f) == uf.find(w)) {
                continue;
            }
            let mut col = individualize(colour, w);
            let (_, trace) = refine(g, &mut col);
            let found = if trace == expected {
                extend(&path, level + 1, g, g, &col)
            } else {
                None
            };
            match found {
                Some(p) => {
                    for (x, &y) in p.iter().enumerate() {
                        uf.union(x, y);
                    }
                    gens.push(p);
                }
                None => failed.push(w),
            }
        }
    }
    gens
}

/// Vertex and edge orbits of the full automorphism group.
pub fn automorphism_orbits(g: &Graph) -> OrbitPartition {
    let n = g.order();
    let generators = automorphism_generators(g);
    let vertex_orbits = orbits_of(n, &generators).classes();

    let edges: Vec<(usize, usize)> = g.edges().collect();
    let index: std::collections::HashMap<(usize, usize), usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut euf = UnionFind::new(edges.len());
    for p in &generators {
        for (i, &(a, b)) in edges.iter().enumerate() {
            let (x, y) = (p[a], p[b]);
            euf.union(i, index[&(x.min(y), x.max(y))]);
        }
    }
    let edge_orbits = euf
        .classes()
        .into_iter()
        .map(|c| c.into_iter().map(|i| edges[i]).collect())
        .collect();
    OrbitPartition {
        vertex_orbits,
        edge_orbits,
        generators,
    }
}

/// True iff the automorphism group has a single vertex orbit.
pub fn is_vertex_transitive(g: &Graph) -> bool {
    g.order() > 0 && automorphism_orbits(g).vertex_orbits.len() == 1
}

/// True iff the automorphism group has a single edge orbit.
pub fn is_edge_transitive(g: &Graph) -> Result<bool> {
    if g.size() == 0 {
        return Err(Error::Edgeless);
    }
    Ok(automorphism_orbits(g).edge_orbits.len() == 1)
}

/// Regular, edge-transitive and not vertex-transitive.
pub fn is_semisymmetric(g: &Graph) -> bool {
    if g.size() == 0 || g.regular_degree().is_none() {
        return false;
    }
    let orbits = automorphism_orbits(g);
    orbits.edge_orbits.len() == 1 && orbits.vertex_orbits.len() > 1
}

/// Checks that `p` is an automorphism of `g`.
pub fn is_automorphism(g: &Graph, p: &[usize]) -> bool {
    let mut seen = vec![false; g.order()];
    p.len() == g.order()
        && p.iter()
            .all(|&x| x < seen.len() && !std::mem::replace(&mut seen[x], true))
        && preserves_edges(g, g, p)
}
