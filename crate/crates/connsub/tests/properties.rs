//! Structural invariants under randomized inputs: codec round-trips,
//! canonicalization stability, oracle agreement, and the counting identities
//! that must hold on every graph, not just the curated examples.

use connsub::eta::{
    eta_extension, eta_rooted, eta_subset_scan, eta_tree_dp, ng_report, r_count, s_count,
};
use connsub::gen::labeled_graphs;
use connsub::graph::{Graph, VertexSet};
use connsub::io::{emit_graph6, parse_graph6};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// ----------------------------------------------------------------------------
// strategies
// ----------------------------------------------------------------------------

fn graph_strategy(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let m = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), m).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[idx] {
                        edges.push((i, j));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, &edges)
        })
    })
}

fn permutation_strategy(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

/// A uniform-ish random labeled tree: attach each vertex to a random earlier
/// vertex.
fn random_tree(rng: &mut impl Rng, n: usize) -> Graph {
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    Graph::from_edges(n, &edges)
}

// ----------------------------------------------------------------------------
// codec and canonicalization
// ----------------------------------------------------------------------------

proptest! {
    #[test]
    fn complement_is_an_involution(g in graph_strategy(1, 20)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn graph6_roundtrips(g in graph_strategy(1, 20)) {
        let text = emit_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labeling(
        (g, perm) in graph_strategy(2, 8)
            .prop_flat_map(|g| {
                let n = g.n();
                (Just(g), permutation_strategy(n))
            })
    ) {
        let relabeled = g.relabel(&perm);
        prop_assert_eq!(
            g.canonical_form().unwrap(),
            relabeled.canonical_form().unwrap()
        );
    }

    #[test]
    fn canonical_form_maps_back_to_an_isomorphic_graph(g in graph_strategy(1, 8)) {
        let form = g.canonical_form().unwrap();
        let rebuilt = form.to_graph();
        prop_assert_eq!(rebuilt.canonical_form().unwrap(), form);
        prop_assert_eq!(rebuilt.edge_count(), g.edge_count());
    }
}

#[test]
fn graph6_roundtrips_on_a_thousand_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=20usize);
        let mut edges = Vec::new();
        for j in 1..n {
            for i in 0..j {
                if rng.gen_bool(0.5) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(n, &edges);
        assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
    }
}

// ----------------------------------------------------------------------------
// counting identities
// ----------------------------------------------------------------------------

proptest! {
    #[test]
    fn sweep_and_extension_agree(g in graph_strategy(1, 10)) {
        let sweep = eta_subset_scan(&g).unwrap();
        let grown = eta_extension(&g).unwrap();
        prop_assert_eq!(sweep.counts(), grown.counts());
    }

    #[test]
    fn complement_sum_identity(g in graph_strategy(1, 10)) {
        let n = g.n();
        let report = ng_report(&g).unwrap();
        prop_assert_eq!(
            report.eta_g,
            eta_subset_scan(&g).unwrap().total()
        );
        prop_assert_eq!(
            report.eta_gbar,
            eta_subset_scan(&g.complement()).unwrap().total()
        );
        prop_assert_eq!(
            report.sum,
            (1u64 << n) - 1 + n as u64 + report.ng_set_size
        );
    }

    #[test]
    fn disjoint_union_composes_the_sum(
        a in graph_strategy(1, 7),
        b in graph_strategy(1, 7),
    ) {
        let union = a.disjoint_union(&b);
        let (na, nb) = (a.n() as u64, b.n() as u64);
        prop_assert_eq!(
            ng_report(&union).unwrap().sum,
            ng_report(&a).unwrap().sum
                + ng_report(&b).unwrap().sum
                + ((1u64 << na) - 1) * ((1u64 << nb) - 1)
        );
    }

    #[test]
    fn minimum_law_on_random_graphs(g in graph_strategy(2, 11)) {
        let n = g.n();
        let sum = ng_report(&g).unwrap().sum;
        let floor = (1u64 << n) + n as u64 - 1;
        prop_assert!(sum >= floor);
        prop_assert_eq!(sum == floor, g.is_p4_free());
    }

    #[test]
    fn rooted_pair_floor_on_random_graphs(g in graph_strategy(2, 9)) {
        let n = g.n();
        let gbar = g.complement();
        for u in 0..n {
            for v in (u + 1)..n {
                let roots = VertexSet::from_vertices(&[u, v]);
                let total = eta_rooted(&g, roots).unwrap()
                    + eta_rooted(&gbar, roots).unwrap();
                prop_assert!(total >= 1u64 << (n - 2));
            }
        }
    }
}

// ----------------------------------------------------------------------------
// two-sided counters
// ----------------------------------------------------------------------------

fn side_pair(g: &Graph, rng: &mut impl Rng) -> Option<(VertexSet, VertexSet)> {
    let n = g.n();
    if n < 2 {
        return None;
    }
    let mut x = VertexSet::EMPTY;
    let mut y = VertexSet::EMPTY;
    for v in 0..n {
        match rng.gen_range(0..3) {
            0 => x = x.with(v),
            1 => y = y.with(v),
            _ => {}
        }
    }
    if x.is_empty() || y.is_empty() {
        return None;
    }
    Some((x, y))
}

#[test]
fn two_sided_counter_bounds_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut checked = 0;
    while checked < 400 {
        let n = rng.gen_range(2..=10usize);
        let m = n * (n - 1) / 2;
        let mask: u64 = rng.gen_range(0..(1u64 << m));
        let g = Graph::from_upper_triangle(n, mask);
        let Some((x, y)) = side_pair(&g, &mut rng) else {
            continue;
        };
        checked += 1;
        let gbar = g.complement();

        let s_gxy = s_count(&g, x, y).unwrap();
        let r_gxy = r_count(&g, x, y).unwrap();
        assert!(s_gxy <= r_gxy, "s must not exceed r");
        assert_eq!(
            r_gxy,
            r_count(&g, y, x).unwrap(),
            "r must be symmetric in its sides"
        );

        let floor = ((1u64 << x.len()) - 1) * ((1u64 << y.len()) - 1);
        let total = s_gxy + s_count(&gbar, y, x).unwrap();
        assert!(
            total >= floor,
            "two-sided floor violated: {total} < {floor} on {}",
            emit_graph6(&g)
        );
    }
}

// ----------------------------------------------------------------------------
// trees
// ----------------------------------------------------------------------------

#[test]
fn tree_dp_agrees_with_sweep_on_random_trees() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for _ in 0..300 {
        let n = rng.gen_range(1..=12usize);
        let t = random_tree(&mut rng, n);
        assert_eq!(
            eta_tree_dp(&t).unwrap(),
            eta_subset_scan(&t).unwrap().total(),
            "tree {}",
            emit_graph6(&t)
        );
    }
}

#[test]
fn tree_dp_rejects_non_trees() {
    for n in 3..=6usize {
        for g in labeled_graphs(n).unwrap() {
            let is_tree = g.edge_count() == n - 1 && g.is_connected_graph();
            assert_eq!(eta_tree_dp(&g).is_ok(), is_tree);
        }
    }
}

// ----------------------------------------------------------------------------
// twin edges under randomization
// ----------------------------------------------------------------------------

#[test]
fn twin_edge_deletion_preserves_the_sum_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    let mut twins_seen = 0;
    for _ in 0..4000 {
        let n = rng.gen_range(3..=9usize);
        let m = n * (n - 1) / 2;
        let mask: u64 = rng.gen_range(0..(1u64 << m));
        let g = Graph::from_upper_triangle(n, mask);
        for u in 0..n {
            for v in (u + 1)..n {
                if !g.has_edge(u, v)
                    || g.neighbors(u).without(v) != g.neighbors(v).without(u)
                {
                    continue;
                }
                twins_seen += 1;
                let before = ng_report(&g).unwrap();
                let after = ng_report(&g.without_edge(u, v)).unwrap();
                assert_eq!(before.sum, after.sum);
                assert_eq!(before.eta_g, after.eta_g + 1);
            }
        }
    }
    assert!(twins_seen > 100, "sample produced too few twin edges");
}
