use hereditary::graph::cycle_graph;
use hereditary::oracle::{max_clique, max_independent_set};
use hereditary::ramsey::{binomial, fpt_size_cutoff, ramsey_upper_bound, verify_ramsey_exhaustive, RamseyCheck};
use num_bigint::BigUint;

#[test]
fn bound_examples() {
    assert_eq!(ramsey_upper_bound(3, 3).unwrap(), BigUint::from(6u32));
    assert_eq!(ramsey_upper_bound(3, 4).unwrap(), BigUint::from(10u32));
    assert_eq!(fpt_size_cutoff(3, 3).unwrap(), BigUint::from(6u32));
    assert_eq!(fpt_size_cutoff(4, 3).unwrap(), BigUint::from(10u32));
    for s in 1..50 {
        assert_eq!(ramsey_upper_bound(1, s).unwrap(), BigUint::from(1u32));
        assert_eq!(fpt_size_cutoff(1, s).unwrap(), BigUint::from(1u32));
    }
    assert_eq!(ramsey_upper_bound(0, 3).unwrap_err().kind(), "InvalidArgument");
    assert_eq!(fpt_size_cutoff(3, 0).unwrap_err().kind(), "InvalidArgument");
}

#[test]
fn symmetry_and_monotonicity() {
    for r in 1..40u64 {
        for s in 1..40u64 {
            let b = ramsey_upper_bound(r, s).unwrap();
            assert_eq!(b, ramsey_upper_bound(s, r).unwrap());
            if r >= 2 {
                assert!(b >= ramsey_upper_bound(r - 1, s).unwrap());
            }
        }
    }
}

#[test]
fn huge_arguments_do_not_overflow() {
    let b = ramsey_upper_bound(200, 200).unwrap();
    assert_eq!(b, binomial(398, 199));
    assert_eq!(b.to_string().len(), 119);
}

#[test]
fn desk_scale_soundness() {
    for r in 1..=6u64 {
        for s in 1..=6u64 {
            let b = ramsey_upper_bound(r, s).unwrap();
            if b <= BigUint::from(6u32) {
                let n = b.to_string().parse().unwrap();
                assert_eq!(verify_ramsey_exhaustive(r as usize, s as usize, n).unwrap(), RamseyCheck::AllForced, "({r},{s},{n})");
            }
        }
    }
}

#[test]
fn five_cycle_is_the_counterexample() {
    match verify_ramsey_exhaustive(3, 3, 5).unwrap() {
        RamseyCheck::Counterexample(g) => {
            assert_eq!(g.n(), 5);
            assert!((0..5).all(|v| g.degree(v) == 2));
            assert_eq!(max_clique(&g).unwrap().0, 2);
            assert_eq!(max_independent_set(&g).unwrap().0, 2);
        }
        other => panic!("{other:?}"),
    }
    let c5 = cycle_graph(5);
    assert_eq!(max_clique(&c5).unwrap().0, 2);
    assert_eq!(max_independent_set(&c5).unwrap().0, 2);
    assert_eq!(verify_ramsey_exhaustive(2, 2, 2).unwrap(), RamseyCheck::AllForced);
    assert_eq!(verify_ramsey_exhaustive(3, 3, 7).unwrap_err().kind(), "TooLarge");
}
