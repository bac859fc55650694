mod common;

use common::*;
use hyperlag::{
    evaluate, growth_step, is_left_compressed, left_compress, link, RSet, RUniformHypergraph,
    Weighting,
};
use proptest::prelude::*;

fn graph_strategy() -> impl Strategy<Value = RUniformHypergraph> {
    (2usize..=4, 0usize..=4)
        .prop_flat_map(|(r, extra)| {
            let n = r + extra;
            let all = subsets(n as u32, r);
            let len = all.len();
            (Just(r), Just(n), Just(all), proptest::collection::vec(any::<bool>(), len))
        })
        .prop_map(|(r, n, all, keep)| {
            let edges: Vec<Vec<u32>> = all
                .into_iter()
                .zip(keep)
                .filter_map(|(e, k)| k.then_some(e))
                .collect();
            RUniformHypergraph::from_edge_lists(r, n, &edges).unwrap()
        })
}

fn simplex(n: usize) -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(0.01f64..1.0, n).prop_map(|raw| {
        let sum: f64 = raw.iter().sum();
        raw.into_iter().map(|v| v / sum).collect()
    })
}

fn graph_and_weights() -> impl Strategy<Value = (RUniformHypergraph, Vec<f64>)> {
    graph_strategy().prop_flat_map(|g| {
        let n = g.n();
        (Just(g), simplex(n))
    })
}

proptest! {
    #[test]
    fn colex_rank_round_trips(r in 1usize..=5, rank in 1u64..5000) {
        let s = RSet::colex_unrank(rank, r).unwrap();
        prop_assert_eq!(s.r(), r);
        prop_assert_eq!(s.colex_rank(), rank);
    }

    #[test]
    fn colex_order_matches_rank(r in 1usize..=4, a in 1u64..2000, b in 1u64..2000) {
        let (x, y) = (RSet::colex_unrank(a, r).unwrap(), RSet::colex_unrank(b, r).unwrap());
        prop_assert_eq!(x.colex_cmp(&y).unwrap(), a.cmp(&b));
    }

    #[test]
    fn text_format_round_trips(g in graph_strategy()) {
        let text = g.to_text();
        let back = RUniformHypergraph::from_text(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(back.to_text(), text);
        prop_assert_eq!(back.edge_hash(), g.edge_hash());
    }

    #[test]
    fn evaluate_matches_monomial_sum((g, x) in graph_and_weights()) {
        let lib = evaluate(&g, &Weighting::new(x.clone()).unwrap()).unwrap();
        let oracle = monomial_sum(&edge_lists(&g), &x);
        prop_assert!((lib - oracle).abs() <= 1e-14, "{} vs {}", lib, oracle);
    }

    #[test]
    fn vertex_links_sum_to_r_times_value((g, x) in graph_and_weights()) {
        let total: f64 = (1..=g.n() as u32)
            .map(|i| x[i as usize - 1] * link(&g, &[i], false, None).unwrap().value(&x).unwrap())
            .sum();
        let value = monomial_sum(&edge_lists(&g), &x);
        prop_assert!((total - g.r() as f64 * value).abs() <= 1e-13);
    }

    #[test]
    fn link_and_complement_partition((g, x) in graph_and_weights(), i in 1u32..=8) {
        prop_assume!(i as usize <= g.n());
        let on = link(&g, &[i], false, None).unwrap();
        let off = link(&g, &[i], true, None).unwrap();
        let others: Vec<u32> = (1..=g.n() as u32).filter(|&v| v != i).collect();
        prop_assert_eq!(on.len() + off.len(), binomial(others.len() as u64, g.r() as u64 - 1) as usize);
        for s in &on.sets {
            let mut e = s.clone();
            e.push(i);
            e.sort_unstable();
            prop_assert!(g.contains_sorted(&e));
        }
        let _ = x;
    }

    #[test]
    fn growth_step_stays_on_simplex_and_does_not_decrease((g, x) in graph_and_weights()) {
        prop_assume!(!g.is_edgeless());
        let w = Weighting::new(x).unwrap();
        let next = growth_step(&g, &w).unwrap();
        let sum: f64 = next.as_slice().iter().sum();
        prop_assert!((sum - 1.0).abs() <= 1e-12);
        prop_assert!(next.as_slice().iter().all(|&v| v >= 0.0));
        let (before, after) = (evaluate(&g, &w).unwrap(), evaluate(&g, &next).unwrap());
        prop_assert!(after >= before * (1.0 - 1e-12), "{} -> {}", before, after);
    }

    #[test]
    fn compression_gives_a_down_set(g in graph_strategy()) {
        let c = left_compress(&g);
        prop_assert_eq!(c.edge_count(), g.edge_count());
        prop_assert!(is_left_compressed(&c));
        prop_assert!(is_down_set(&edge_lists(&c), g.r()));
        prop_assert_eq!(left_compress(&c), c.clone());
        prop_assert_eq!(is_left_compressed(&g), is_down_set(&edge_lists(&g), g.r()));
    }

    #[test]
    fn colex_graphs_are_left_compressed(r in 2usize..=4, m in 1usize..=60) {
        let g = RUniformHypergraph::colex(r, m).unwrap();
        prop_assert_eq!(g.edge_count(), m);
        prop_assert!(is_left_compressed(&g));
        let expected: Vec<Vec<u32>> = colex_list(12, r).into_iter().take(m).collect();
        prop_assert_eq!(edge_lists(&g), expected);
    }
}
