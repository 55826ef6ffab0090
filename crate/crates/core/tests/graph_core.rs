mod common;

use common::{all_automorphism_like, any_graph, brute_iso, connected_graph, distance_matrix, iso};
use distres_core::catalog::{complete, complete_bipartite, cycle, path};
use distres_core::{
    are_isomorphic, automorphism_orbits, is_edge_transitive, is_semisymmetric,
    is_vertex_transitive, named, product, Error, Graph, ProductKind, VertexSet,
};
use proptest::prelude::*;

fn set(members: &[usize], n: usize) -> VertexSet {
    VertexSet::new(members.to_vec(), n).unwrap()
}

fn prism() -> Graph {
    product(ProductKind::Cartesian, &complete(3), &complete(2))
}

#[test]
fn induced_subgraph_examples() {
    assert_eq!(
        complete(4).induced_subgraph(&set(&[0, 1, 2], 4)).unwrap(),
        complete(3)
    );
    assert_eq!(
        cycle(6).induced_subgraph(&set(&[0, 2, 4], 6)).unwrap(),
        Graph::empty(3)
    );

    let p = named("petersen", &[]).unwrap();
    let d = distance_matrix(&p);
    let far: Vec<usize> = (0..10).filter(|&v| d[0][v] == Some(2)).collect();
    assert_eq!(far.len(), 6);
    let sub = p.induced_subgraph(&set(&far, 10)).unwrap();
    assert!(iso(&sub, &cycle(6)));
    let labels: Vec<String> = far.iter().map(usize::to_string).collect();
    assert_eq!(sub.labels().unwrap(), labels.as_slice());
}

#[test]
fn empty_vertex_set_is_rejected() {
    assert_eq!(VertexSet::new(vec![], 3), Err(Error::EmptyVertexSet));
    assert_eq!(Error::EmptyVertexSet.to_string(), "empty vertex set");
}

#[test]
fn connectivity_examples() {
    assert!(complete(1).is_connected());
    assert!(!copies_of_k2().is_connected());
    assert!(named("petersen", &[]).unwrap().is_connected());
}

fn copies_of_k2() -> Graph {
    Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap()
}

#[test]
fn bipartition_examples() {
    let (a, b) = complete_bipartite(3, 4).bipartition().unwrap().unwrap();
    assert_eq!((a.len(), b.len()), (3, 4));
    assert!(a.contains(0));
    assert_eq!(cycle(5).bipartition().unwrap(), None);
    let (a, b) = named("gray", &[]).unwrap().bipartition().unwrap().unwrap();
    assert_eq!((a.len(), b.len()), (27, 27));
    assert!(matches!(
        copies_of_k2().bipartition(),
        Err(Error::Disconnected(_))
    ));
}

#[test]
fn line_graph_examples() {
    assert_eq!(path(3).line_graph().unwrap(), complete(2));
    for n in 3..9 {
        assert!(iso(&cycle(n).line_graph().unwrap(), &cycle(n)));
    }
    // edges of K4 in order 01 02 03 12 13 23; disjoint pairs are (01,23) (02,13) (03,12)
    let octahedron = Graph::from_fn(6, |a, b| a + b != 5);
    let lk4 = complete(4).line_graph().unwrap();
    assert_eq!(lk4, octahedron);
    assert_eq!(lk4.regular_degree(), Some(4));
    assert_eq!(Graph::empty(3).line_graph(), Err(Error::Edgeless));
}

#[test]
fn isomorphism_examples() {
    let c6 = cycle(6);
    let shuffled = c6.permuted(&[3, 0, 4, 1, 5, 2]);
    let cert = are_isomorphic(&c6, &shuffled);
    let m = cert.mapping.expect("relabelled cycle");
    for (u, v) in c6.edges() {
        assert!(shuffled.has_edge(m[u], m[v]));
    }
    assert!(!iso(&complete_bipartite(3, 3), &c6));

    let w3 = named("w3_incidence", &[]).unwrap();
    let (u, v) = w3.edges().next().unwrap();
    let res = distres_core::residual(&w3, &set(&[u, v], 80))
        .unwrap()
        .residual;
    assert!(iso(&res, &named("gray", &[]).unwrap()));
}

#[test]
fn orbit_examples() {
    for n in 2..7 {
        let o = automorphism_orbits(&complete(n));
        assert_eq!((o.vertex_orbits.len(), o.edge_orbits.len()), (1, 1));
    }
    let o = automorphism_orbits(&path(3));
    assert_eq!(o.vertex_orbits, vec![vec![0, 2], vec![1]]);
    assert_eq!(o.edge_orbits.len(), 1);

    let o = automorphism_orbits(&named("gray", &[]).unwrap());
    let sizes: Vec<usize> = o.vertex_orbits.iter().map(Vec::len).collect();
    assert_eq!(sizes, vec![27, 27]);
    assert_eq!(o.edge_orbits.len(), 1);

    assert_eq!(automorphism_orbits(&prism()).edge_orbits.len(), 2);
}

#[test]
fn transitivity_examples() {
    let petersen = named("petersen", &[]).unwrap();
    let gray = named("gray", &[]).unwrap();
    assert!(is_vertex_transitive(&petersen));
    assert!(!is_vertex_transitive(&gray));
    assert!(!is_vertex_transitive(&path(3)));

    assert_eq!(is_edge_transitive(&complete_bipartite(2, 3)), Ok(true));
    assert_eq!(is_edge_transitive(&gray), Ok(true));
    assert_eq!(is_edge_transitive(&prism()), Ok(false));
    assert_eq!(is_edge_transitive(&Graph::empty(4)), Err(Error::Edgeless));

    assert!(is_semisymmetric(&gray));
    assert!(is_semisymmetric(&named("folkman", &[]).unwrap()));
    assert!(!is_semisymmetric(&petersen));
    // edge-transitive and not vertex-transitive, but irregular
    assert!(!is_semisymmetric(&complete_bipartite(2, 3)));
}

fn catalog_sample() -> Vec<Graph> {
    let mut out: Vec<Graph> = [
        ("complete", vec![5]),
        ("complete_bipartite", vec![3, 4]),
        ("cycle", vec![7]),
        ("path", vec![5]),
        ("hypercube", vec![4]),
        ("generalized_petersen", vec![8, 3]),
        ("generalized_petersen", vec![7, 2]),
    ]
    .iter()
    .map(|(name, params)| named(name, params).unwrap())
    .collect();
    for name in [
        "petersen",
        "clebsch",
        "gray",
        "folkman",
        "ljubljana",
        "w3_incidence",
    ] {
        out.push(named(name, &[]).unwrap());
    }
    out
}

#[test]
fn semisymmetric_catalog_graphs_are_bipartite() {
    let mut seen = 0;
    for g in catalog_sample() {
        if is_semisymmetric(&g) {
            seen += 1;
            assert!(g.bipartition().unwrap().is_some());
        }
    }
    // gray, folkman, ljubljana, and w3_incidence (W(3) over an odd field is not self-dual)
    assert_eq!(seen, 4);
}

#[test]
fn line_graphs_of_edge_transitive_catalog_graphs_are_vertex_transitive() {
    let mut seen = 0;
    for g in catalog_sample() {
        if g.size() > 0 && g.size() <= 120 && is_edge_transitive(&g).unwrap() {
            seen += 1;
            let lg = g.line_graph().unwrap();
            assert!(lg.is_connected());
            assert!(is_vertex_transitive(&lg));
        }
    }
    assert!(seen >= 6);
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn relabelled_graphs_are_isomorphic((g, p) in any_graph(0, 14).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), permutation(n))
    })) {
        let h = g.permuted(&p);
        let m = are_isomorphic(&g, &h).mapping.expect("mapping exists");
        let mut hit = vec![false; g.order()];
        for &x in &m {
            prop_assert!(!hit[x]);
            hit[x] = true;
        }
        for u in 0..g.order() {
            for v in u + 1..g.order() {
                prop_assert_eq!(g.has_edge(u, v), h.has_edge(m[u], m[v]));
            }
        }
    }

    #[test]
    fn isomorphism_matches_exhaustive_search(a in any_graph(1, 6), b in any_graph(1, 6)) {
        prop_assert_eq!(iso(&a, &b), brute_iso(&a, &b));
    }

    /// Moving one edge keeps the edge count, so only structure separates the pair.
    #[test]
    fn isomorphism_after_moving_an_edge(
        (a, p) in any_graph(4, 7).prop_flat_map(|g| {
            let n = g.order();
            (Just(g), permutation(n))
        }),
        pick in any::<(usize, usize)>(),
    ) {
        let n = a.order();
        let edges: Vec<(usize, usize)> = a.edges().collect();
        let non_edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !a.has_edge(u, v))
            .collect();
        prop_assume!(!edges.is_empty() && !non_edges.is_empty());
        let drop = edges[pick.0 % edges.len()];
        let add = non_edges[pick.1 % non_edges.len()];
        let moved: Vec<(usize, usize)> = edges.iter().copied().filter(|&e| e != drop).chain([add]).collect();
        let b = Graph::from_edges(n, moved).unwrap().permuted(&p);
        prop_assert_eq!(iso(&a, &b), brute_iso(&a, &b));
    }

    #[test]
    fn orbits_match_exhaustive_automorphism_group(g in any_graph(1, 7)) {
        let o = automorphism_orbits(&g);
        let n = g.order();
        let group: Vec<Vec<usize>> = all_automorphism_like(&g, &g).collect();
        let mut orbit_of = vec![usize::MAX; n];
        for (i, orbit) in o.vertex_orbits.iter().enumerate() {
            for &v in orbit {
                orbit_of[v] = i;
            }
        }
        for u in 0..n {
            for v in 0..n {
                let same = group.iter().any(|p| p[u] == v);
                prop_assert_eq!(same, orbit_of[u] == orbit_of[v]);
            }
        }
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let edge_orbit = |e: (usize, usize)| o.edge_orbits.iter().position(|orb| orb.contains(&e)).unwrap();
        for &e in &edges {
            for &f in &edges {
                let same = group.iter().any(|p| {
                    let (a, b) = (p[e.0], p[e.1]);
                    (a.min(b), a.max(b)) == f
                });
                prop_assert_eq!(same, edge_orbit(e) == edge_orbit(f));
            }
        }
        for gen in &o.generators {
            prop_assert!(group.contains(gen));
        }
    }

    #[test]
    fn induced_on_everything_is_identity(g in any_graph(1, 20)) {
        prop_assert_eq!(g.induced_subgraph(&VertexSet::full(g.order()).unwrap()).unwrap(), g);
    }

    #[test]
    fn line_graph_degrees(g in any_graph(2, 12).prop_filter("has edges", |g| g.size() > 0)) {
        let lg = g.line_graph().unwrap();
        prop_assert_eq!(lg.order(), g.size());
        for (i, (u, v)) in g.edges().enumerate() {
            prop_assert_eq!(lg.degree(i), g.degree(u) + g.degree(v) - 2);
        }
    }

    #[test]
    fn vertex_transitive_graphs_are_regular(g in connected_graph(1, 9)) {
        if is_vertex_transitive(&g) {
            prop_assert!(g.is_regular());
        }
    }
}
