use hereditary::oracle::{
    chromatic_number, enumerate_all_graphs, exhaustive_solve, generate, max_clique, max_independent_set,
    planarity_oracle, GeneratorSpec, GraphClass, OracleReport, GRID,
};
use hereditary::properties::{builtin_descriptors, lookup};
use hereditary::search::KSubsets;
use hereditary::solver::brute_force_search;
use hereditary::Graph;

fn subset_is_clique(g: &Graph, s: &[usize]) -> bool {
    s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

#[test]
fn enumeration_counts() {
    for (n, count) in [(0, 1), (1, 1), (2, 2), (3, 8), (4, 64), (5, 1024), (6, 32768)] {
        assert_eq!(enumerate_all_graphs(n).unwrap().count(), count);
    }
    assert_eq!(enumerate_all_graphs(7).err().unwrap().kind(), "TooLarge");
}

#[test]
fn oracle_cross_identities() {
    for n in 0..=6 {
        for g in enumerate_all_graphs(n).unwrap() {
            let (alpha, is) = max_independent_set(&g).unwrap();
            let (omega, cl) = max_clique(&g).unwrap();
            let (chi, coloring) = chromatic_number(&g).unwrap();
            assert_eq!(alpha, max_clique(&g.complement()).unwrap().0);
            assert_eq!(omega, max_independent_set(&g.complement()).unwrap().0);
            assert!(chi >= omega);
            assert!(chi * alpha >= n);
            assert_eq!((is.len(), cl.len()), (alpha, omega));
            assert!(subset_is_clique(&g.complement(), &is.to_vec()));
            assert!(subset_is_clique(&g, &cl.to_vec()));
            assert_eq!(coloring.len(), n);
            assert!(g.edges().all(|(u, v)| coloring[u] != coloring[v]));
            assert!(coloring.iter().all(|&c| c < chi.max(1)));
            let report = OracleReport::compute(&g).unwrap();
            assert!(report.verify(&g));
        }
    }
}

#[test]
fn clique_number_by_subsets() {
    for n in 0..=5 {
        for g in enumerate_all_graphs(n).unwrap() {
            let mut best = 0;
            for k in 1..=n {
                let mut it = KSubsets::new(n, k);
                while let Some(s) = it.next_subset() {
                    if subset_is_clique(&g, s) {
                        best = k;
                        break;
                    }
                }
            }
            assert_eq!(max_clique(&g).unwrap().0, best);
        }
    }
}

#[test]
fn exhaustive_solve_agrees_with_brute_force() {
    let descriptors: Vec<_> = builtin_descriptors().into_iter().filter(|d| d.has_recognizer()).collect();
    for n in 0..=5 {
        for g in enumerate_all_graphs(n).unwrap() {
            for d in &descriptors {
                for k in 0..=n + 1 {
                    let a = exhaustive_solve(&g, d, k).unwrap();
                    let b = brute_force_search(&g, d, k).unwrap();
                    assert_eq!(a, b.is_some(), "{} k={k} {g:?}", d.name);
                }
            }
        }
    }
}

#[test]
fn generators_land_in_their_class() {
    let cases = [
        (GraphClass::Random, None, 30, 0.3),
        (GraphClass::Bipartite, Some("bipartite"), 30, 0.4),
        (GraphClass::CoBipartite, Some("co-bipartite"), 30, 0.4),
        (GraphClass::TriangleFree, Some("triangle-free"), 10, 0.15),
        (GraphClass::TriangleFree, Some("triangle-free"), 40, 0.3),
        (GraphClass::Planar, Some("planar"), 40, 0.8),
        (GraphClass::UnitDisk, None, 40, 0.2),
        (GraphClass::C4Free, Some("c4-free"), 10, 0.2),
        (GraphClass::K14Free, Some("k14-free"), 10, 0.3),
    ];
    for (class, name, n, param) in cases {
        let d = name.map(|nm| lookup(nm).unwrap());
        for seed in 0..1000 {
            let out = generate(&GeneratorSpec { class, n, param, seed }).unwrap();
            assert_eq!(out.graph.n(), n);
            assert!(out.graph.check_invariants());
            if let Some(d) = &d {
                assert!(d.accepts(&out.graph).unwrap(), "{class} seed {seed}");
            }
            assert_eq!(out.points.is_some(), class == GraphClass::UnitDisk);
            if let Some(points) = &out.points {
                assert!(points.iter().all(|&(x, y)| x < GRID && y < GRID));
                let r = (param * GRID as f64).round() as u128;
                for j in 0..n {
                    for i in 0..j {
                        let dx = points[i].0.abs_diff(points[j].0) as u128;
                        let dy = points[i].1.abs_diff(points[j].1) as u128;
                        assert_eq!(out.graph.has_edge(i, j), dx * dx + dy * dy <= r * r);
                    }
                }
            }
        }
    }
}

#[test]
fn generators_are_deterministic() {
    for class in GraphClass::ALL {
        let n = if matches!(class, GraphClass::C4Free | GraphClass::K14Free) { 8 } else { 25 };
        let spec = GeneratorSpec { class, n, param: 0.25, seed: 42 };
        assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap(), "{class}");
        let name: GraphClass = class.name().parse().unwrap();
        assert_eq!(name, class);
    }
}

#[test]
fn generated_planar_graphs_pass_oracle() {
    for seed in 0..500 {
        let g = generate(&GeneratorSpec { class: GraphClass::Planar, n: 8, param: 1.0, seed }).unwrap().graph;
        assert!(planarity_oracle(&g).unwrap(), "seed {seed}");
    }
}
