use nonrep::graphs::small::nonisomorphic_graphs;
use nonrep::graphs::{stacked_triangulation, verify_coloring, Coloring, Graph};
use nonrep::search::{pi_k_exact, SearchBudget};
use proptest::prelude::*;

#[test]
fn pi_k_is_monotone_in_k_on_graphs_up_to_8_vertices() {
    let budget = SearchBudget::default();
    for n in 7..=8 {
        for g in nonisomorphic_graphs(n) {
            let mut previous = usize::MAX;
            for k in 1..=5 {
                let r = pi_k_exact(&g, k, &budget).unwrap();
                let value = r.value().expect("small graphs finish");
                assert!(
                    value <= previous,
                    "{:?} k={k}",
                    g.edges().collect::<Vec<_>>()
                );
                previous = value;
            }
        }
    }
}

#[test]
fn nonisomorphic_graph_count_on_8_vertices() {
    assert_eq!(nonisomorphic_graphs(8).len(), 12346);
}

proptest! {
    #[test]
    fn graph_json_round_trips(edges in proptest::collection::vec((0usize..12, 0usize..12), 0..30)) {
        let mut g = Graph::new(12);
        for (u, v) in edges {
            if u != v {
                g.add_edge(u, v).unwrap();
            }
        }
        prop_assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn coloring_json_round_trips(colors in proptest::collection::vec(0u8..6, 0..40)) {
        let c = Coloring::from_colors(colors);
        prop_assert_eq!(Coloring::from_json(&c.to_json()).unwrap(), c);
    }

    #[test]
    fn rainbow_colorings_always_pass(i in 0usize..3, k in 1usize..3) {
        let g = stacked_triangulation(i);
        let n = g.vertex_count();
        let c = Coloring::from_colors((0..n as u8).collect());
        prop_assert!(verify_coloring(&g, &c, k, 8.max(2 * k)).unwrap().is_pass());
    }
}
