mod common;

use common::{distance_matrix, iso};
use distres_core::catalog::{
    from_lcf, from_lcf_chords, hypercube, parse_lcf, CatalogEntry, CATALOG,
};
use distres_core::{
    is_semisymmetric, is_vertex_transitive, named, residual, Error, Graph, VertexSet,
};

#[test]
fn petersen_family() {
    let p = named("generalized_petersen", &[5, 2]).unwrap();
    assert_eq!((p.order(), p.regular_degree()), (10, Some(3)));
    assert!(is_vertex_transitive(&p));
    assert_eq!(p, named("petersen", &[]).unwrap());
}

#[test]
fn gray_graph() {
    let g = named("gray", &[]).unwrap();
    assert_eq!((g.order(), g.regular_degree()), (54, Some(3)));
    assert!(is_semisymmetric(&g));
}

#[test]
fn clebsch_graph() {
    let g = named("clebsch", &[]).unwrap();
    assert_eq!((g.order(), g.regular_degree()), (16, Some(5)));
    let res = residual(&g, &VertexSet::single(0, 16).unwrap()).unwrap();
    assert!(iso(&res.residual, &named("petersen", &[]).unwrap()));
}

#[test]
fn w3_incidence_is_a_generalized_quadrangle() {
    let g = named("w3_incidence", &[]).unwrap();
    // (3^4 - 1) / (3 - 1) points and as many lines
    assert_eq!(g.order(), 2 * (81 - 1) / 2);
    assert_eq!(g.regular_degree(), Some(4));
    let (points, lines) = g.bipartition().unwrap().unwrap();
    assert_eq!((points.len(), lines.len()), (40, 40));
    // girth 8 and diameter 4: the incidence graph of a quadrangle of order (3, 3)
    let d = distance_matrix(&g);
    for row in &d {
        let mut counts = [0; 5];
        for x in row {
            counts[x.unwrap()] += 1;
        }
        assert_eq!(counts, [1, 4, 12, 36, 27]);
    }
}

#[test]
fn lcf_constructions() {
    let k4 = Graph::from_fn(4, |_, _| true);
    assert_eq!(from_lcf(&[2], 4).unwrap(), k4);
    assert_eq!(from_lcf_chords(&[2], 4).unwrap(), k4);
    assert!(iso(&from_lcf(&[3, -3], 4).unwrap(), &hypercube(3)));
    assert!(matches!(from_lcf(&[3], 8), Err(Error::Lcf(_))));
    // the Wagner graph: a Mobius ladder, so not bipartite
    assert_eq!(from_lcf(&[4], 8).unwrap().bipartition().unwrap(), None);
    assert_eq!(
        parse_lcf("# comment\n[3, -3]^4\n").unwrap(),
        (vec![3, -3], 4)
    );
}

#[test]
fn folkman_graph() {
    let g = named("folkman", &[]).unwrap();
    assert_eq!((g.order(), g.regular_degree()), (20, Some(4)));
    assert!(is_semisymmetric(&g));
}

#[test]
fn every_catalog_entry_generates() {
    let sample: &[(&str, &[i64])] = &[
        ("complete", &[5]),
        ("complete_bipartite", &[2, 6]),
        ("cycle", &[3]),
        ("path", &[1]),
        ("hypercube", &[0]),
        ("generalized_petersen", &[3, 1]),
        ("petersen", &[]),
        ("clebsch", &[]),
        ("gray", &[]),
        ("folkman", &[]),
        ("ljubljana", &[]),
        ("w3_incidence", &[]),
    ];
    assert_eq!(sample.len(), CATALOG.len());
    for (name, params) in sample {
        let entry = CatalogEntry::new(name, params).unwrap();
        let g = entry.generate().unwrap();
        assert_eq!(g.order(), entry.expected_order, "{name}");
        if let Some(d) = entry.expected_degree {
            assert_eq!(g.regular_degree(), Some(d), "{name}");
        }
        assert_eq!(named(name, params).unwrap(), g, "{name} is deterministic");
    }
}

#[test]
fn invalid_requests() {
    assert_eq!(
        named("heawood", &[]),
        Err(Error::UnknownGraph("heawood".into()))
    );
    for (name, params) in [
        ("generalized_petersen", vec![2, 1]),
        ("generalized_petersen", vec![6, 3]),
        ("generalized_petersen", vec![7, 0]),
        ("cycle", vec![2]),
        ("complete", vec![-1]),
        ("petersen", vec![5]),
        ("hypercube", vec![]),
    ] {
        assert!(
            matches!(named(name, &params), Err(Error::InvalidParams { .. })),
            "{name} {params:?}"
        );
    }
}

#[test]
fn vertex_transitive_families() {
    for (name, params) in [
        ("petersen", vec![]),
        ("clebsch", vec![]),
        ("hypercube", vec![4]),
        ("cycle", vec![11]),
        ("complete", vec![6]),
    ] {
        assert!(
            is_vertex_transitive(&named(name, &params).unwrap()),
            "{name}"
        );
    }
}
