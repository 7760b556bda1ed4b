use nugraph::geometry::{hermitian_count_expected, projective_point_count};
use nugraph::oracle::srg_identity_dense;
use nugraph::srg::{eigenvalue_multiplicity, NotSrg};
use nugraph::*;

const CASES: [(usize, u64); 6] = [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3)];

#[test]
fn measured_parameters_match_closed_forms() {
    for (n, q) in CASES {
        let g = build_nu(n, q).unwrap().graph;
        let expected = expected_params(n as u32, q);
        assert_eq!(measure_srg(&g), Ok(expected), "NU({}, {q}²)", n + 1);
        assert!(verify_srg_identity(&g, &expected).unwrap());
        let c = g.complement();
        let ce = expected_complement_params(n as u32, q);
        assert_eq!(measure_srg(&c), Ok(ce), "complement of NU({}, {q}²)", n + 1);
        assert!(verify_srg_identity(&c, &ce).unwrap());
    }
}

#[test]
fn identity_agrees_with_dense_matrix_product() {
    for (n, q) in [(2, 2), (2, 3), (3, 2), (2, 4)] {
        let g = build_nu(n, q).unwrap().graph;
        let p = expected_params(n as u32, q);
        assert!(srg_identity_dense(&g, &p));
        let wrong = SrgParams::new(p.v, p.k, p.lambda, p.mu + 1);
        assert!(!srg_identity_dense(&g, &wrong));
        assert!(!verify_srg_identity(&g, &wrong).unwrap());
    }
}

#[test]
fn vertex_count_is_points_minus_curve() {
    for (n, q) in CASES {
        let tg = build_nu(n, q).unwrap();
        let all = projective_point_count(n as u32, q);
        let iso = hermitian_count_expected(n as u32, q);
        assert_eq!(tg.graph.order() as u128, all - iso);
        assert_eq!(tg.geometry.isotropic_points().len() as u128, iso);
    }
}

#[test]
fn spectra_satisfy_sum_and_trace() {
    for (n, q) in CASES {
        for p in [expected_params(n as u32, q), expected_complement_params(n as u32, q)] {
            let s = spectrum_from_params(&p).unwrap();
            assert_eq!(1 + s.m1 + s.m2, p.v);
            assert_eq!(s.k + s.m1 as i64 * s.theta1 + s.m2 as i64 * s.theta2, 0);
            // tr A² = vk
            let tr2 = s.k * s.k + s.m1 as i64 * s.theta1 * s.theta1 + s.m2 as i64 * s.theta2 * s.theta2;
            assert_eq!(tr2, (p.v * p.k) as i64);
        }
    }
}

#[test]
fn spectra_match_exact_ranks() {
    for (n, q) in [(2, 2), (2, 3), (3, 2)] {
        let g = build_nu(n, q).unwrap().graph;
        let s = spectrum_from_params(&expected_params(n as u32, q)).unwrap();
        assert_eq!(eigenvalue_multiplicity(&g, s.k), 1);
        assert_eq!(eigenvalue_multiplicity(&g, s.theta1) as u64, s.m1);
        assert_eq!(eigenvalue_multiplicity(&g, s.theta2) as u64, s.m2);
    }
}

#[test]
fn planar_spectra() {
    let s = spectrum_from_params(&SrgParams::new(12, 9, 6, 9)).unwrap();
    assert_eq!((s.k, s.theta1, s.m1, s.theta2, s.m2), (9, 0, 8, -3, 3));
    let s = spectrum_from_params(&SrgParams::new(63, 32, 16, 16)).unwrap();
    assert_eq!((s.k, s.theta1, s.m1, s.theta2, s.m2), (32, 4, 27, -4, 35));
}

#[test]
fn gamma_is_not_strongly_regular() {
    for q in [2u64, 3, 4] {
        let tg = build_gamma(2, q).unwrap();
        let g = &tg.graph;
        assert!(matches!(measure_srg(g), Err(NotSrg::Irregular { .. })));
        let iso = tg.geometry.isotropic_points();
        for &p in &iso {
            let v = tg.point_vertex[p].unwrap();
            assert_eq!(g.degree(v) as u64, q * q);
            for &r in &iso {
                assert!(!g.has_edge(v, tg.point_vertex[r].unwrap()));
            }
        }
    }
}

#[test]
fn nu_is_gamma_minus_the_curve() {
    for q in [2u64, 3] {
        let nu = build_nu(2, q).unwrap();
        let gamma = build_gamma(2, q).unwrap();
        let verts: Vec<usize> = nu.vertex_point.iter().map(|&p| gamma.point_vertex[p].unwrap()).collect();
        assert_eq!(gamma.graph.induced(&verts).rows(), nu.graph.rows());
    }
}

#[test]
fn line_census_of_the_plane() {
    for q in [2u64, 3, 4] {
        let g = HermitianGeometry::for_q(2, q).unwrap();
        let (tangent, secant, generator) = g.line_census();
        assert_eq!(tangent as u64, q * q * q + 1);
        // each secant carries q+1 of the q³+1 curve points, each pair once
        let n = q * q * q + 1;
        assert_eq!(secant as u64, n * (n - 1) / ((q + 1) * q));
        assert_eq!(generator, 0);
        assert_eq!(tangent + secant + generator, g.lines().len());
    }
}

#[test]
fn exports_round_trip() {
    let g = build_nu(2, 3).unwrap().graph;
    assert_eq!(from_graph6(&to_graph6(&g)).unwrap().rows(), g.rows());
    assert_eq!(from_dimacs(&to_dimacs(&g)).unwrap().rows(), g.rows());
    let dimacs = to_dimacs(&g);
    assert_eq!(dimacs.lines().next().unwrap(), "p edge 63 1008");
}
