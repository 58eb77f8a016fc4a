mod common;

use common::*;
use proptest::prelude::*;
use signed_laplacian::balance::{self, bipartite_component_count, switch, switching_equivalent, SwitchingFunction};
use signed_laplacian::bounds::{self, BoundId};
use signed_laplacian::spectra::{self, laplacian_spectrum, rayleigh_quotient, sign_all};
use signed_laplacian::{degree_profile, parse_signed_graph, serialize_signed_graph, triangle_stats, Sign, SignedGraph};

/// Graph on `1..=max_n` vertices; every pair gets "absent", "+" or "-".
fn signed_graph(max_n: usize) -> impl Strategy<Value = SignedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(0u8..3, pairs).prop_map(move |codes| {
            let mut edges = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    match codes[k] {
                        1 => edges.push((i, j, Sign::Pos)),
                        2 => edges.push((i, j, Sign::Neg)),
                        _ => {}
                    }
                    k += 1;
                }
            }
            SignedGraph::new(n, edges).unwrap()
        })
    })
}

fn connected_graph(max_n: usize) -> impl Strategy<Value = SignedGraph> {
    signed_graph(max_n).prop_filter("connected", balance::is_connected)
}

fn switching_for(g: &SignedGraph) -> impl Strategy<Value = SwitchingFunction> {
    prop::collection::vec(any::<bool>(), g.order()).prop_map(|bits| {
        SwitchingFunction::new(bits.into_iter().map(|b| if b { Sign::Neg } else { Sign::Pos }).collect())
    })
}

fn graph_and_switching(max_n: usize) -> impl Strategy<Value = (SignedGraph, SwitchingFunction)> {
    signed_graph(max_n).prop_flat_map(|g| {
        let theta = switching_for(&g);
        (Just(g), theta)
    })
}

fn relabel(g: &SignedGraph, perm: &[usize]) -> SignedGraph {
    SignedGraph::new(g.order(), g.edges().iter().map(|e| (perm[e.u], perm[e.v], e.sign))).unwrap()
}

fn graph_and_permutation(max_n: usize) -> impl Strategy<Value = (SignedGraph, Vec<usize>)> {
    connected_graph(max_n).prop_flat_map(|g| {
        let perm = Just((0..g.order()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), perm)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn serialize_then_parse_is_identity(g in signed_graph(10)) {
        let text = serialize_signed_graph(&g);
        prop_assert_eq!(parse_signed_graph(&text).unwrap(), g);
    }

    #[test]
    fn degree_profile_invariants(g in signed_graph(10)) {
        let p = degree_profile(&g);
        let m = g.size();
        let m_neg = g.negative_edge_count();
        for v in 0..g.order() {
            prop_assert_eq!(p.degree[v], p.positive[v] + p.negative[v]);
            prop_assert_eq!(p.net[v], p.positive[v] as i64 - p.negative[v] as i64);
            let neighbor_sum: usize = g.neighbors(v).iter().map(|&(w, _)| g.degree(w)).sum();
            prop_assert_eq!(p.neighbor_degree_sum[v], neighbor_sum as u64);
        }
        prop_assert_eq!(p.degree.iter().sum::<usize>(), 2 * m);
        prop_assert_eq!(p.net.iter().sum::<i64>(), 2 * (m as i64 - 2 * m_neg as i64));
        for e in g.edges() {
            let d = p.degree[e.u] + p.degree[e.v] - 2;
            prop_assert!(p.edge_degree_min.unwrap() <= d && d <= p.edge_degree_max.unwrap());
        }
    }

    #[test]
    fn triangle_stats_match_brute_force(g in signed_graph(8)) {
        let t = triangle_stats(&g);
        let (pos, neg) = brute_force_triangles(&g);
        prop_assert_eq!((t.positive as i64, t.negative as i64), (pos, neg));
    }

    #[test]
    fn spectrum_sums_to_trace_and_is_psd(g in signed_graph(10)) {
        let s = laplacian_spectrum(&g).unwrap();
        prop_assert!((s.sum() - degree_profile(&g).s1 as f64).abs() < 1e-8);
        prop_assert!(s.lambda_min() >= -1e-9);
    }

    #[test]
    fn trace_moments_match_power_sums(g in signed_graph(10)) {
        let s = laplacian_spectrum(&g).unwrap();
        let l = spectra::laplacian(&g);
        for k in 1..=3u32 {
            let exact = spectra::trace_moment(&l, k).unwrap() as f64;
            let numeric = s.power_sum(k as i32);
            prop_assert!((exact - numeric).abs() <= 1e-7 * exact.abs().max(1.0));
        }
    }

    #[test]
    fn rayleigh_ritz(g in signed_graph(10), seed in any::<u64>()) {
        let lambda = spectra::spectral_radius_laplacian(&g).unwrap();
        let l = spectra::laplacian(&g).to_f64();
        let mut rng = signed_laplacian::harness::GraphRng::new(seed);
        for _ in 0..200 {
            let x: Vec<f64> = (0..g.order()).map(|_| rng.uniform() * 2.0 - 1.0).collect();
            if x.iter().all(|&v| v == 0.0) {
                continue;
            }
            prop_assert!(rayleigh_quotient(&l, &x) <= lambda + 1e-9);
        }
    }

    #[test]
    fn net_bounds_are_rayleigh_means(g in connected_graph(9)) {
        let n = g.order() as f64;
        let l = dense_laplacian(&g);
        let ids = [BoundId::LbNet1, BoundId::LbNet2, BoundId::LbNet3];
        for (k, id) in (1..=3u32).zip(ids) {
            let want = (total(&mat_pow(&l, k)) as f64 / n).powf(1.0 / k as f64);
            let got = bounds::evaluate_bound(&g, id).unwrap().get().unwrap();
            prop_assert!((got - want).abs() < 1e-9, "{id}: {got} vs {want}");
        }
    }

    #[test]
    fn net_bounds_ignore_vertex_labels((g, perm) in graph_and_permutation(9)) {
        let h = relabel(&g, &perm);
        for id in [BoundId::LbNet1, BoundId::LbNet2, BoundId::LbNet3] {
            let a = bounds::evaluate_bound(&g, id).unwrap().get().unwrap();
            let b = bounds::evaluate_bound(&h, id).unwrap().get().unwrap();
            prop_assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn net_bounds_vanish_on_positive_graphs(g in connected_graph(9)) {
        let g = sign_all(&g, Sign::Pos);
        for id in [BoundId::LbNet1, BoundId::LbNet2, BoundId::LbNet3] {
            prop_assert_eq!(bounds::evaluate_bound(&g, id).unwrap().get(), Some(0.0));
        }
    }

    #[test]
    fn switching_is_an_equivalence((g, theta) in graph_and_switching(9), phi_bits in prop::collection::vec(any::<bool>(), 9)) {
        prop_assert!(switching_equivalent(&g, &g).is_some());
        let h = switch(&g, &theta).unwrap();
        prop_assert!(switching_equivalent(&h, &g).is_some());
        let phi = SwitchingFunction::new(
            phi_bits[..g.order()].iter().map(|&b| if b { Sign::Neg } else { Sign::Pos }).collect(),
        );
        let k = switch(&h, &phi).unwrap();
        prop_assert!(switching_equivalent(&g, &k).is_some());
    }

    #[test]
    fn switching_preserves_balance((g, theta) in graph_and_switching(9)) {
        let h = switch(&g, &theta).unwrap();
        prop_assert_eq!(balance::balance_info(&g).balanced_count(), balance::balance_info(&h).balanced_count());
    }

    #[test]
    fn positive_graphs_are_balanced_per_component(g in signed_graph(10)) {
        let info = balance::balance_info(&sign_all(&g, Sign::Pos));
        prop_assert_eq!(info.balanced_count(), balance::component_count(&g));
    }

    #[test]
    fn bipartite_components_are_balanced_negatives(g in signed_graph(10)) {
        let info = balance::balance_info(&sign_all(&g, Sign::Neg));
        prop_assert_eq!(bipartite_component_count(&g), info.balanced_count());
    }
}

#[test]
fn kb5_is_tight_on_stars() {
    for k in 1..=4 {
        for sign in [1, -1] {
            let g = star(k, sign);
            let e = bounds::evaluate_all(&g).unwrap();
            let kb5 = e.get(BoundId::Kb5).get().unwrap();
            assert!((kb5 - (k as f64 + 1.0)).abs() < 1e-9, "k={k}: {kb5}");
            assert!((e.lambda_max() - kb5).abs() < 1e-9, "k={k}: λmax {}", e.lambda_max());
        }
    }
}
