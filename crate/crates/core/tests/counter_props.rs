use c4_blowup::{count_induced_c4_diagonal, count_induced_c4_enum, Graph};
use proptest::prelude::*;

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (4usize..40).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |keep| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if keep[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn counters_agree(g in graph_strategy()) {
        let e = count_induced_c4_enum(&g, u128::MAX).unwrap().value;
        let d = count_induced_c4_diagonal(&g).value;
        prop_assert_eq!(e, d);
    }

    #[test]
    fn relabelling_preserves_count(g in graph_strategy(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(count_induced_c4_diagonal(&g).value, count_induced_c4_diagonal(&h).value);
    }

    #[test]
    fn complement_of_matching_pairs(k in 2usize..12) {
        // Perfect matching complement: every pair of matched pairs is an induced C4.
        let n = 2 * k;
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !(u % 2 == 0 && v == u + 1) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges).unwrap();
        prop_assert_eq!(count_induced_c4_diagonal(&g).value, (k * (k - 1) / 2) as u128);
    }
}
