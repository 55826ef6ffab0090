//! Named graphs and parameterized families.
//!
//! Data-backed graphs (`folkman`, `ljubljana`) are read from `folkman.lcf` and
//! `ljubljana.g6`. The files compiled into the crate are used unless the
//! `DISTRES_DATA` environment variable names another directory. Loaded graphs
//! are validated against their known invariants and memoized.

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::io::graph6::parse_graph6;
use crate::iso::is_semisymmetric;
use crate::metrics::growth_polynomial;

/// Environment variable overriding the bundled data directory.
pub const DATA_ENV: &str = "DISTRES_DATA";

const BUNDLED_LJUBLJANA: &str = include_str!("../data/ljubljana.g6");
const BUNDLED_FOLKMAN: &str = include_str!("../data/folkman.lcf");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    Formula,
    Lcf,
    Incidence,
    DataFile,
}

/// Listing entry for `catalog list`.
#[derive(Clone, Copy, Debug)]
pub struct CatalogInfo {
    pub name: &'static str,
    pub params: &'static [&'static str],
    pub generator: Generator,
    pub summary: &'static str,
}

pub const CATALOG: &[CatalogInfo] = &[
    CatalogInfo {
        name: "complete",
        params: &["n"],
        generator: Generator::Formula,
        summary: "complete graph K_n",
    },
    CatalogInfo {
        name: "complete_bipartite",
        params: &["m", "n"],
        generator: Generator::Formula,
        summary: "complete bipartite graph K_{m,n}",
    },
    CatalogInfo {
        name: "cycle",
        params: &["n"],
        generator: Generator::Formula,
        summary: "cycle C_n, n >= 3",
    },
    CatalogInfo {
        name: "path",
        params: &["n"],
        generator: Generator::Formula,
        summary: "path P_n on n vertices",
    },
    CatalogInfo {
        name: "hypercube",
        params: &["d"],
        generator: Generator::Formula,
        summary: "hypercube Q_d",
    },
    CatalogInfo {
        name: "generalized_petersen",
        params: &["n", "k"],
        generator: Generator::Formula,
        summary: "generalized Petersen graph P(n,k), 1 <= k < n/2",
    },
    CatalogInfo {
        name: "petersen",
        params: &[],
        generator: Generator::Formula,
        summary: "Petersen graph P(5,2)",
    },
    CatalogInfo {
        name: "clebsch",
        params: &[],
        generator: Generator::Formula,
        summary: "Clebsch graph: 4-bit strings at Hamming distance 1 or 4",
    },
    CatalogInfo {
        name: "gray",
        params: &[],
        generator: Generator::Incidence,
        summary: "Gray graph: cells vs axis-parallel lines of the 3x3x3 grid",
    },
    CatalogInfo {
        name: "folkman",
        params: &[],
        generator: Generator::Lcf,
        summary: "Folkman graph from folkman.lcf",
    },
    CatalogInfo {
        name: "ljubljana",
        params: &[],
        generator: Generator::DataFile,
        summary: "Ljubljana graph from ljubljana.g6",
    },
    CatalogInfo {
        name: "w3_incidence",
        params: &[],
        generator: Generator::Incidence,
        summary: "points vs lines of the symplectic quadrangle W(3)",
    },
];

/// A fully parameterized catalog request with its self-check values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub params: Vec<i64>,
    pub generator: Generator,
    pub expected_order: usize,
    /// `None` for irregular families.
    pub expected_degree: Option<usize>,
}

fn invalid(name: &str, reason: impl Into<String>) -> Error {
    Error::InvalidParams {
        name: name.to_string(),
        reason: reason.into(),
    }
}

fn unsigned(name: &str, params: &[i64], arity: usize) -> Result<Vec<usize>> {
    if params.len() != arity {
        return Err(invalid(
            name,
            format!("expected {arity} parameter(s), got {}", params.len()),
        ));
    }
    params
        .iter()
        .map(|&p| usize::try_from(p).map_err(|_| invalid(name, "parameters must be non-negative")))
        .collect()
}

impl CatalogEntry {
    /// Validates `params` for `name` and computes the expected order and degree.
    pub fn new(name: &str, params: &[i64]) -> Result<Self> {
        let info = CATALOG
            .iter()
            .find(|i| i.name == name)
            .ok_or_else(|| Error::UnknownGraph(name.to_string()))?;
        let p = unsigned(name, params, info.params.len())?;
        let (order, degree) = match name {
            "complete" => {
                if p[0] < 1 {
                    return Err(invalid(name, "n >= 1"));
                }
                (p[0], Some(p[0] - 1))
            }
            "complete_bipartite" => {
                if p[0] < 1 || p[1] < 1 {
                    return Err(invalid(name, "m, n >= 1"));
                }
                (p[0] + p[1], (p[0] == p[1]).then_some(p[0]))
            }
            "cycle" => {
                if p[0] < 3 {
                    return Err(invalid(name, "n >= 3"));
                }
                (p[0], Some(2))
            }
            "path" => {
                if p[0] < 1 {
                    return Err(invalid(name, "n >= 1"));
                }
                (p[0], [Some(0), Some(1)].get(p[0] - 1).copied().flatten())
            }
            "hypercube" => {
                if p[0] > 16 {
                    return Err(invalid(name, "d <= 16"));
                }
                (1 << p[0], Some(p[0]))
            }
            "generalized_petersen" => {
                let (n, k) = (p[0], p[1]);
                if n < 3 || k < 1 || 2 * k >= n {
                    return Err(invalid(name, "requires n >= 3 and 1 <= k < n/2"));
                }
                (2 * n, Some(3))
            }
            "petersen" => (10, Some(3)),
            "clebsch" => (16, Some(5)),
            "gray" => (54, Some(3)),
            "folkman" => (20, Some(4)),
            "ljubljana" => (112, Some(3)),
            "w3_incidence" => (80, Some(4)),
            _ => unreachable!("every catalog name is handled"),
        };
        Ok(CatalogEntry {
            name: name.to_string(),
            params: params.to_vec(),
            generator: info.generator,
            expected_order: order,
            expected_degree: degree,
        })
    }

    pub fn generate(&self) -> Result<Graph> {
        let p: Vec<usize> = self.params.iter().map(|&x| x as usize).collect();
        let g = match self.name.as_str() {
            "complete" => complete(p[0]),
            "complete_bipartite" => complete_bipartite(p[0], p[1]),
            "cycle" => cycle(p[0]),
            "path" => path(p[0]),
            "hypercube" => hypercube(p[0]),
            "generalized_petersen" => generalized_petersen(p[0], p[1]),
            "petersen" => generalized_petersen(5, 2),
            "clebsch" => clebsch(),
            "gray" => gray(),
            "folkman" => data_graph("folkman.lcf")?,
            "ljubljana" => data_graph("ljubljana.g6")?,
            "w3_incidence" => w3_incidence(),
            _ => unreachable!(),
        };
        let degree_ok = match self.expected_degree {
            Some(d) => g.regular_degree() == Some(d) || (g.order() == 0 && d == 0),
            None => true,
        };
        if g.order() != self.expected_order || !degree_ok {
            return Err(Error::Data {
                path: self.name.clone(),
                reason: format!(
                    "self-check failed: order {} (expected {}), degree {:?} (expected {:?})",
                    g.order(),
                    self.expected_order,
                    g.regular_degree(),
                    self.expected_degree
                ),
            });
        }
        Ok(g)
    }
}

/// Generates a catalog graph by name.
pub fn named(name: &str, params: &[i64]) -> Result<Graph> {
    CatalogEntry::new(name, params)?.generate()
}

pub fn complete(n: usize) -> Graph {
    Graph::from_fn(n, |_, _| true)
}

/// `K_{m,n}` with parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    Graph::from_fn(m + n, |u, v| (u < m) != (v < m))
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("n >= 3")
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
}

pub fn hypercube(d: usize) -> Graph {
    Graph::from_fn(1 << d, |u, v| (u ^ v).count_ones() == 1)
}

/// Outer cycle `0..n`, spokes `i -- n+i`, inner edges `n+i -- n+(i+k) mod n`.
pub fn generalized_petersen(n: usize, k: usize) -> Graph {
    let edges = (0..n).flat_map(|i| [(i, (i + 1) % n), (i, n + i), (n + i, n + (i + k) % n)]);
    Graph::from_edges(2 * n, edges).expect("valid generalized Petersen parameters")
}

pub fn clebsch() -> Graph {
    Graph::from_fn(16, |u, v| matches!((u ^ v).count_ones(), 1 | 4))
}

/// Cells `(x, y, z)` of the 3×3×3 grid (ids `0..27`, `9x + 3y + z`) against
/// its 27 axis-parallel lines (ids `27..54`), joined by incidence.
pub fn gray() -> Graph {
    let cell = |c: [usize; 3]| 9 * c[0] + 3 * c[1] + c[2];
    let mut edges = Vec::with_capacity(81);
    let mut line = 27;
    for axis in 0..3 {
        for a in 0..3 {
            for b in 0..3 {
                for t in 0..3 {
                    let mut c = [0; 3];
                    let others: Vec<usize> = (0..3).filter(|&i| i != axis).collect();
                    c[others[0]] = a;
                    c[others[1]] = b;
                    c[axis] = t;
                    edges.push((cell(c), line));
                }
                line += 1;
            }
        }
    }
    Graph::from_edges(54, edges).expect("valid incidence")
}

/// Alternating form `x0 y3 + x1 y2 - x2 y1 - x3 y0` over GF(3).
fn symplectic(x: &[u8; 4], y: &[u8; 4]) -> u8 {
    let s = x[0] as i32 * y[3] as i32 + x[1] as i32 * y[2] as i32
        - x[2] as i32 * y[1] as i32
        - x[3] as i32 * y[0] as i32;
    s.rem_euclid(3) as u8
}

/// Scales a nonzero vector so its first nonzero coordinate is 1.
fn normalize(mut x: [u8; 4]) -> [u8; 4] {
    let lead = *x.iter().find(|&&c| c != 0).expect("nonzero vector");
    if lead == 2 {
        for c in &mut x {
            *c = (*c * 2) % 3;
        }
    }
    x
}

/// Incidence graph of the symplectic generalized quadrangle W(3).
///
/// Points (ids `0..40`) are the 1-dimensional subspaces of GF(3)^4; lines
/// (ids `40..80`) are the totally isotropic 2-dimensional subspaces.
pub fn w3_incidence() -> Graph {
    let mut points: Vec<[u8; 4]> = Vec::new();
    for code in 1..81u32 {
        let mut x = [0u8; 4];
        let mut c = code;
        for slot in x.iter_mut().rev() {
            *slot = (c % 3) as u8;
            c /= 3;
        }
        if normalize(x) == x {
            points.push(x);
        }
    }
    let index: HashMap<[u8; 4], usize> = points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut lines: Vec<Vec<usize>> = Vec::new();
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            if symplectic(p, q) != 0 {
                continue;
            }
            let mut members: Vec<usize> = (0..3u8)
                .map(|t| {
                    let v: [u8; 4] = std::array::from_fn(|k| (p[k] * t + q[k]) % 3);
                    index[&normalize(v)]
                })
                .chain(std::iter::once(i))
                .collect();
            members.sort_unstable();
            lines.push(members);
        }
    }
    lines.sort();
    lines.dedup();
    let np = points.len();
    let edges = lines
        .iter()
        .enumerate()
        .flat_map(|(l, members)| members.iter().map(move |&p| (p, np + l)));
    Graph::from_edges(np + lines.len(), edges).expect("valid incidence")
}

/// Cubic graph from LCF notation: a Hamiltonian cycle `0..n` plus the chord
/// `i -- i + jumps[i mod len]`, where each chord must be listed consistently
/// from both of its ends.
pub fn from_lcf(jumps: &[i64], repeats: usize) -> Result<Graph> {
    let n = lcf_order(jumps, repeats)?;
    for i in 0..n {
        let t = lcf_target(jumps, n, i);
        if lcf_target(jumps, n, t) != i {
            return Err(Error::Lcf(format!(
                "chord {i} -> {t} is not matched by a jump from {t} back to {i}"
            )));
        }
    }
    let g = from_lcf_chords(jumps, repeats)?;
    if g.regular_degree() != Some(3) {
        return Err(Error::Lcf("result is not cubic".into()));
    }
    Ok(g)
}

/// Relaxed LCF: every vertex `i` gets the chord `i -- i + jumps[i mod len]`
/// without requiring the reverse jump. Chords are therefore seen from both
/// ends, which yields 4-regular graphs such as the Folkman graph.
pub fn from_lcf_chords(jumps: &[i64], repeats: usize) -> Result<Graph> {
    let n = lcf_order(jumps, repeats)?;
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 0..n {
        let t = lcf_target(jumps, n, i);
        if t == i || t == (i + 1) % n || (t + 1) % n == i {
            return Err(Error::Lcf(format!(
                "jump from {i} lands on itself or a cycle neighbour"
            )));
        }
        edges.push((i, t));
    }
    Graph::from_edges(n, edges)
}

fn lcf_order(jumps: &[i64], repeats: usize) -> Result<usize> {
    let n = jumps.len() * repeats;
    if n < 4 {
        return Err(Error::Lcf("needs at least 4 vertices".into()));
    }
    Ok(n)
}

fn lcf_target(jumps: &[i64], n: usize, i: usize) -> usize {
    (i as i64 + jumps[i % jumps.len()]).rem_euclid(n as i64) as usize
}

/// Parses `[a, b, ...]^k` (the exponent is optional). `#` starts a comment.
pub fn parse_lcf(text: &str) -> Result<(Vec<i64>, usize)> {
    let body: String = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join(" ");
    let body = body.trim();
    let bad = |why: &str| Error::Lcf(format!("cannot parse '{body}': {why}"));
    let open = body.strip_prefix('[').ok_or_else(|| bad("missing '['"))?;
    let (list, rest) = open.split_once(']').ok_or_else(|| bad("missing ']'"))?;
    let jumps = list
        .split(',')
        .map(|s| s.trim().parse::<i64>().map_err(|_| bad("bad jump")))
        .collect::<Result<Vec<_>>>()?;
    let rest = rest.trim();
    let repeats = if rest.is_empty() {
        1
    } else {
        rest.strip_prefix('^')
            .ok_or_else(|| bad("expected '^'"))?
            .trim()
            .parse()
            .map_err(|_| bad("bad exponent"))?
    };
    Ok((jumps, repeats))
}

type DataCache = Mutex<HashMap<(Option<PathBuf>, &'static str), Graph>>;

fn cache() -> &'static DataCache {
    static CACHE: OnceLock<DataCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Loads and validates a data-backed catalog graph.
pub fn data_graph(file: &'static str) -> Result<Graph> {
    let dir = std::env::var_os(DATA_ENV).map(PathBuf::from);
    let key = (dir.clone(), file);
    if let Some(g) = cache().lock().unwrap().get(&key) {
        return Ok(g.clone());
    }
    let display = match &dir {
        Some(d) => d.join(file).display().to_string(),
        None => format!("<bundled>/{file}"),
    };
    let text = match &dir {
        Some(d) => std::fs::read_to_string(d.join(file)).map_err(|e| Error::Data {
            path: display.clone(),
            reason: e.to_string(),
        })?,
        None => match file {
            "ljubljana.g6" => BUNDLED_LJUBLJANA.to_string(),
            "folkman.lcf" => BUNDLED_FOLKMAN.to_string(),
            _ => {
                return Err(Error::Data {
                    path: display,
                    reason: "no such bundled file".into(),
                })
            }
        },
    };
    let fail = |reason: String| Error::Data {
        path: display.clone(),
        reason,
    };
    let (g, sequences): (Graph, [&[usize]; 2]) = match file {
        "ljubljana.g6" => (
            parse_graph6(text.trim_end_matches(['\n', '\r'])).map_err(|e| fail(e.to_string()))?,
            [
                &[1, 3, 6, 12, 24, 34, 24, 7, 1],
                &[1, 3, 6, 12, 24, 34, 25, 7],
            ],
        ),
        "folkman.lcf" => {
            let (jumps, repeats) = parse_lcf(&text).map_err(|e| fail(e.to_string()))?;
            (
                from_lcf_chords(&jumps, repeats).map_err(|e| fail(e.to_string()))?,
                [&[1, 4, 9, 6], &[1, 4, 6, 6, 3]],
            )
        }
        _ => return Err(fail("unknown data file".into())),
    };
    validate_semisymmetric(&g, sequences).map_err(fail)?;
    cache().lock().unwrap().insert(key, g.clone());
    Ok(g)
}

/// Checks a semisymmetric graph against the two distance sequences, one per
/// bipartition class.
fn validate_semisymmetric(g: &Graph, sequences: [&[usize]; 2]) -> std::result::Result<(), String> {
    if !g.is_connected() {
        return Err("graph is disconnected".into());
    }
    let (left, right) = g
        .bipartition()
        .map_err(|e| e.to_string())?
        .ok_or("graph is not bipartite")?;
    let class_sequence = |class: &VertexSet| -> std::result::Result<Vec<usize>, String> {
        let mut seqs = class
            .iter()
            .map(|v| growth_polynomial(g, v).map_err(|e| e.to_string()));
        let first = seqs.next().expect("bipartition classes are non-empty")?;
        for seq in seqs {
            if seq? != first {
                return Err("distance sequence differs within a bipartition class".into());
            }
        }
        Ok(first)
    };
    let mut found = [class_sequence(&left)?, class_sequence(&right)?];
    let mut wanted = sequences.map(<[usize]>::to_vec);
    found.sort();
    wanted.sort();
    if found != wanted {
        return Err(format!("distance sequences {found:?}, expected {wanted:?}"));
    }
    if !is_semisymmetric(g) {
        return Err("graph is not semisymmetric".into());
    }
    Ok(())
}

/// One vertex from each bipartition class of a connected bipartite graph.
pub fn class_representatives(g: &Graph) -> Result<(usize, usize)> {
    let (a, b) = g.bipartition()?.ok_or(Error::NotBipartite)?;
    Ok((first(&a), first(&b)))
}

fn first(s: &VertexSet) -> usize {
    s.as_slice()[0]
}
