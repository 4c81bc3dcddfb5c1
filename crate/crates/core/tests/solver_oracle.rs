mod common;

use proptest::prelude::*;
use safeset_core::solver::{all_minimum_safe_sets, solve, SolveOptions};
use safeset_core::{connected_safe_number, is_safe_set, safe_number, Graph, Rational, VertexSet, WeightFn};

fn graph_strategy(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order)
        .prop_flat_map(|n| {
            let parents: Vec<_> = (1..n).map(|v| 0..v).collect();
            (Just(n), parents, any::<u64>())
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
            let mut bit = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if extra >> (bit % 64) & 1 == 1 && extra >> ((bit + 17) % 64) & 1 == 1 {
                        edges.push((u, v));
                    }
                    bit += 1;
                }
            }
            edges.sort();
            edges.dedup();
            Graph::from_edges(n, &edges).unwrap()
        })
}

fn graph_and_weights(max_order: usize, max_weight: i64) -> impl Strategy<Value = (Graph, WeightFn)> {
    graph_strategy(max_order).prop_flat_map(move |g| {
        let n = g.order();
        (Just(g), prop::collection::vec(1..=max_weight, n)).prop_map(|(g, w)| (g, WeightFn::from_integers(&w).unwrap()))
    })
}

proptest! {
    #[test]
    fn solver_matches_oracle((g, w) in graph_and_weights(8, 12)) {
        let o = common::oracle(&g, &w);
        let s = safe_number(&g, &w).unwrap();
        let cs = connected_safe_number(&g, &w).unwrap();
        prop_assert_eq!(&s.optimum, &o.s);
        prop_assert_eq!(&cs.optimum, &o.cs);
        prop_assert_eq!(all_minimum_safe_sets(&g, &w).unwrap(), o.s_optima.clone());
        let all_c = solve(&g, &w, SolveOptions { connected: true, collect_all: true }).unwrap();
        prop_assert_eq!(all_c.all_optima.unwrap(), o.cs_optima.clone());
        prop_assert_eq!(s.witness_set, o.s_optima[0]);
        prop_assert_eq!(cs.witness_set, o.cs_optima[0]);
    }

    #[test]
    fn safe_predicate_matches_definition((g, w) in graph_and_weights(7, 6), mask in 1u64..128) {
        let mask = mask & ((1 << g.order()) - 1);
        prop_assume!(mask != 0);
        let members: Vec<usize> = (0..g.order()).filter(|v| mask >> v & 1 == 1).collect();
        prop_assert_eq!(is_safe_set(&g, &w, VertexSet::from_bits(mask)).unwrap(), common::is_safe(&g, &w, &members));
    }

    #[test]
    fn safe_number_bounds((g, w) in graph_and_weights(8, 9)) {
        let s = safe_number(&g, &w).unwrap().optimum;
        let cs = connected_safe_number(&g, &w).unwrap().optimum;
        prop_assert!(s <= cs);
        prop_assert!(cs <= w.total());
        prop_assert!(s.is_positive());
    }

    #[test]
    fn scaling_weights_scales_optima((g, w) in graph_and_weights(7, 9), num in 1i64..7, den in 1i64..7) {
        let f = Rational::new(num, den);
        let scaled = w.scaled(&f).unwrap();
        let s = safe_number(&g, &w).unwrap();
        let s2 = safe_number(&g, &scaled).unwrap();
        prop_assert_eq!(s2.optimum, &s.optimum * &f);
        prop_assert_eq!(s2.witness_set, s.witness_set);
    }

    #[test]
    fn uniform_cycle_weights_split_evenly(n in 3usize..10, k in 1i64..5) {
        let g = Graph::cycle(n);
        let w = WeightFn::uniform(n, Rational::from_integer(k)).unwrap();
        let s = safe_number(&g, &w).unwrap().optimum;
        prop_assert_eq!(s, Rational::from_integer(k * n.div_ceil(2) as i64));
    }
}

#[test]
fn nine_vertex_graphs_match_oracle() {
    let mut rng = common::rng(9);
    for density in [0.15, 0.3, 0.5] {
        for _ in 0..6 {
            let g = common::random_connected(&mut rng, 9, density);
            let w = common::random_integer_weights(&mut rng, 9, 20);
            let o = common::oracle(&g, &w);
            assert_eq!(safe_number(&g, &w).unwrap().optimum, o.s);
            assert_eq!(connected_safe_number(&g, &w).unwrap().optimum, o.cs);
            assert_eq!(all_minimum_safe_sets(&g, &w).unwrap(), o.s_optima);
        }
    }
}

#[test]
fn rational_weights_match_oracle() {
    let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
    let w = WeightFn::parse(&["1/2", "7/3", "1", "5/4", "2", "1/6"]).unwrap();
    let o = common::oracle(&g, &w);
    assert_eq!(safe_number(&g, &w).unwrap().optimum, o.s);
    assert_eq!(connected_safe_number(&g, &w).unwrap().optimum, o.cs);
    assert_eq!(all_minimum_safe_sets(&g, &w).unwrap(), o.s_optima);
}
