use hereditary::graph::{complete_graph, disjoint_cliques};
use hereditary::oracle::{enumerate_all_graphs, max_clique, SeededRng};
use hereditary::properties::{builtin_descriptors, lookup};
use hereditary::reductions::{
    backward_extract, forward_witness, join_reduction, reduce, strong_product_reduction,
    verify_reduction_equivalence, ReductionKind, VertexOrigin,
};
use hereditary::search::KSubsets;
use hereditary::{Graph, VertexSet};

const KINDS: [ReductionKind; 2] = [ReductionKind::StrongProduct, ReductionKind::Join];

fn is_independent(g: &Graph, s: &[usize]) -> bool {
    s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
}

#[test]
fn shape_invariants() {
    let bip = lookup("bipartite").unwrap();
    for n in 0..=5 {
        for g in enumerate_all_graphs(n).unwrap().step_by(7) {
            for k in 1..=n {
                let s = strong_product_reduction(&g, &bip, k).unwrap();
                assert_eq!((s.g_prime.n(), s.k_prime), (2 * n, 2 * k));
                assert_eq!(s.coordinate_map.len(), s.g_prime.n());
                let j = join_reduction(&g, &bip, k).unwrap();
                let (r, c) = (j.r.unwrap(), j.c.unwrap());
                assert_eq!(r, (k + 1) * k / 2);
                assert_eq!(c, 1);
                assert_eq!((j.g_prime.n(), j.k_prime), (n + r * c, k + r * c));
                for (v, origin) in j.coordinate_map.iter().enumerate() {
                    match *origin {
                        VertexOrigin::Original { vertex } => assert_eq!(vertex, v),
                        VertexOrigin::Attached { clique, slot } => assert_eq!(n + clique * c + slot, v),
                        VertexOrigin::Copy { .. } => panic!("copy in join map"),
                    }
                }
            }
        }
    }
}

#[test]
fn round_trips_for_every_independent_set() {
    let bip = lookup("bipartite").unwrap();
    for n in 1..=5 {
        for g in enumerate_all_graphs(n).unwrap() {
            for k in 1..=n {
                let reds: Vec<_> = KINDS.iter().map(|&kind| reduce(&g, &bip, k, kind).unwrap()).collect();
                let mut subsets = KSubsets::new(n, k);
                while let Some(s) = subsets.next_subset() {
                    if !is_independent(&g, s) {
                        continue;
                    }
                    let i = VertexSet::from_indices(n, s.iter().copied()).unwrap();
                    for red in &reds {
                        let fwd = forward_witness(red, &i).unwrap();
                        assert_eq!(fwd.len(), red.k_prime);
                        assert!(bip.accepts(&red.g_prime.induced_subgraph(&fwd).unwrap().0).unwrap());
                        let back = backward_extract(red, &fwd).unwrap();
                        assert!(back.len() >= k);
                        assert!(is_independent(&g, &back.to_vec()));
                    }
                }
            }
        }
    }
}

#[test]
fn equivalence_bipartite_exhaustive() {
    let bip = lookup("bipartite").unwrap();
    for n in 1..=5 {
        for g in enumerate_all_graphs(n).unwrap() {
            for k in 1..=n {
                for kind in KINDS {
                    assert!(verify_reduction_equivalence(&g, &bip, k, kind).unwrap(), "{kind:?} k={k} {g:?}");
                }
            }
        }
    }
}

#[test]
fn equivalence_planar_strong_product() {
    let planar = lookup("planar").unwrap();
    for n in 1..=3 {
        for g in enumerate_all_graphs(n).unwrap() {
            for k in 1..=n.min(2) {
                assert!(verify_reduction_equivalence(&g, &planar, k, ReductionKind::StrongProduct).unwrap());
            }
        }
    }
}

#[test]
fn clique_number_of_join_with_cliques() {
    let mut rng = SeededRng::new(21);
    for n in 0..=6 {
        let graphs: Vec<Graph> = enumerate_all_graphs(n).unwrap().collect();
        for _ in 0..200 {
            let g = &graphs[rng.below(graphs.len() as u64) as usize];
            let omega = max_clique(g).unwrap().0;
            for t in 1..=2 {
                for c in 1..=2 {
                    let joined = g.join(&disjoint_cliques(t, c));
                    assert_eq!(max_clique(&joined).unwrap().0, omega + c);
                }
            }
        }
    }
}

#[test]
fn strong_product_output_stays_in_closed_classes() {
    let mut rng = SeededRng::new(4);
    let target = lookup("bipartite").unwrap();
    for host in builtin_descriptors().into_iter().filter(|d| d.has_recognizer()) {
        if !host.closed_under_strong_clique_product && !host.closed_under_join_with_cliques {
            continue;
        }
        let mut checked = 0;
        while checked < 200 {
            let n = 1 + rng.below(5) as usize;
            let mut edges = Vec::new();
            for j in 0..n {
                for i in 0..j {
                    if rng.bernoulli(0.5) {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            if !host.accepts(&g).unwrap() {
                continue;
            }
            if host.closed_under_strong_clique_product {
                let red = strong_product_reduction(&g, &target, 1).unwrap();
                assert!(host.accepts(&red.g_prime).unwrap(), "{} {g:?}", host.name);
            }
            if host.closed_under_join_with_cliques {
                assert!(host.accepts(&g.join(&complete_graph(2))).unwrap(), "{} {g:?}", host.name);
            }
            checked += 1;
        }
    }
}

#[test]
fn witness_errors() {
    let bip = lookup("bipartite").unwrap();
    let g = hereditary::graph::path_graph(4);
    let red = strong_product_reduction(&g, &bip, 2).unwrap();
    let adjacent = VertexSet::from_indices(4, [0, 1]).unwrap();
    assert_eq!(forward_witness(&red, &adjacent).unwrap_err().kind(), "InvalidWitness");
    let short = VertexSet::from_indices(4, [0]).unwrap();
    assert_eq!(forward_witness(&red, &short).unwrap_err().kind(), "InvalidWitness");
    let wrong_size = VertexSet::from_indices(8, [0, 1, 4]).unwrap();
    assert_eq!(backward_extract(&red, &wrong_size).unwrap_err().kind(), "InvalidWitness");
    assert_eq!(join_reduction(&g, &bip, 0).unwrap_err().kind(), "InvalidArgument");
    let big = hereditary::graph::edgeless_graph(30);
    assert_eq!(
        verify_reduction_equivalence(&big, &bip, 2, ReductionKind::StrongProduct).unwrap_err().kind(),
        "TooLarge"
    );
}
