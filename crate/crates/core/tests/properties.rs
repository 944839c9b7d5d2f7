mod common;

use common::*;
use polymap_core::curvature::{curvature_of_type, match_light, CurvatureBound};
use polymap_core::discharging::run_discharge;
use polymap_core::format::{parse_map, serialize_map};
use polymap_core::generators::{hex_klein, hex_torus, k7_torus, tetrahedron, tri_torus, truncate};
use polymap_core::transfer::{enumerate_paths, find_stuck, is_n_transferable, steps, PathState};
use polymap_core::validity::{check_3_connected, check_polyhedral, Witness};
use polymap_core::{
    curvature_bound, gauss_bonnet_sum, rat, topology, DischargeError, MapTopology, NVerdict,
    RotationSystem,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_maps() -> Vec<RotationSystem> {
    vec![
        tetrahedron(),
        k7_torus(),
        hex_torus(3, 3).unwrap(),
        tri_torus(3, 3).unwrap(),
        hex_klein(3, 3).unwrap(),
        truncate(&tetrahedron()),
        truncate(&k7_torus()),
    ]
}

fn perturbation() -> impl Strategy<Value = Perturbation> {
    prop_oneof![
        (any::<usize>(), any::<usize>(), any::<usize>())
            .prop_map(|(vertex, i, j)| Perturbation::Swap { vertex, i, j }),
        any::<usize>().prop_map(|edge| Perturbation::FlipSign { edge }),
        any::<usize>().prop_map(|vertex| Perturbation::Reorient { vertex }),
    ]
}

/// A small map with up to three random local changes.
fn perturbed_map() -> impl Strategy<Value = RotationSystem> {
    (
        0..small_maps().len(),
        prop::collection::vec(perturbation(), 0..4),
    )
        .prop_map(|(i, ops)| {
            ops.into_iter()
                .fold(small_maps().swap_remove(i), |rs, op| perturb(&rs, op))
        })
}

/// Random connected simple graph on 2..=8 vertices.
fn random_graph() -> impl Strategy<Value = EdgeList> {
    (2usize..=8, any::<u64>(), 0.05f64..0.8)
        .prop_map(|(n, seed, p)| random_connected_graph(&mut ChaCha8Rng::seed_from_u64(seed), n, p))
}

fn sorted<T: Ord + Clone>(v: &[T]) -> Vec<T> {
    let mut v = v.to_vec();
    v.sort();
    v
}

fn vertex_types(top: &MapTopology) -> Vec<Vec<usize>> {
    let types: Vec<_> = (0..top.num_vertices())
        .map(|v| top.vertex_type(v).unwrap())
        .collect();
    sorted(&types)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn every_edge_bounds_faces_twice(rs in perturbed_map()) {
        let top = topology(&rs);
        let mut uses = vec![0usize; rs.num_edges()];
        for face in top.faces() {
            prop_assert_eq!(face.corners.len(), face.degree());
            for d in &face.darts {
                uses[d.edge] += 1;
            }
        }
        prop_assert!(uses.iter().all(|&u| u == 2));
        prop_assert_eq!(top.face_degrees().iter().sum::<usize>(), 2 * rs.num_edges());
        prop_assert_eq!(top.vertex_degrees().iter().sum::<usize>(), 2 * rs.num_edges());
        let corners: usize = (0..top.num_vertices()).map(|v| top.corner_faces(v).len()).sum();
        prop_assert_eq!(corners, 2 * rs.num_edges());
    }

    #[test]
    fn curvature_sums_to_euler_characteristic(rs in perturbed_map()) {
        let top = topology(&rs);
        prop_assert_eq!(gauss_bonnet_sum(&top), rat(top.euler_characteristic(), 1));
    }

    #[test]
    fn relabelling_changes_nothing(rs in perturbed_map(), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..rs.num_vertices()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let (a, b) = (topology(&rs), topology(&relabel(&rs, &perm)));
        prop_assert_eq!(a.euler_characteristic(), b.euler_characteristic());
        prop_assert_eq!(a.is_orientable(), b.is_orientable());
        prop_assert_eq!(sorted(a.face_degrees()), sorted(b.face_degrees()));
        prop_assert_eq!(vertex_types(&a), vertex_types(&b));
    }

    #[test]
    fn reorienting_a_vertex_keeps_the_embedding(rs in perturbed_map(), v in any::<usize>()) {
        let v = v % rs.num_vertices();
        let flipped = rs.reorient_vertex(v).unwrap();
        let (a, b) = (topology(&rs), topology(&flipped));
        prop_assert_eq!(a.euler_characteristic(), b.euler_characteristic());
        prop_assert_eq!(a.is_orientable(), b.is_orientable());
        prop_assert_eq!(sorted(a.face_degrees()), sorted(b.face_degrees()));
        prop_assert_eq!(vertex_types(&a), vertex_types(&b));
    }

    #[test]
    fn orientability_survives_vertex_flips(rs in perturbed_map()) {
        let top = topology(&rs);
        let flipped = (0..rs.num_vertices())
            .step_by(2)
            .fold(rs.clone(), |acc, v| acc.reorient_vertex(v).unwrap());
        prop_assert_eq!(top.is_orientable(), topology(&flipped).is_orientable());
        if all_positive(&rs) {
            prop_assert!(top.is_orientable());
        }
    }

    #[test]
    fn map_files_round_trip(rs in perturbed_map()) {
        prop_assert_eq!(parse_map(&serialize_map(&rs)).unwrap(), rs);
    }

    #[test]
    fn discharging_conserves_charge(rs in perturbed_map()) {
        let top = topology(&rs);
        match run_discharge(&top) {
            Ok(run) => {
                prop_assert_eq!(run.after_b.total(), rat(-6 * top.euler_characteristic(), 1));
                prop_assert!(run.ledger.replay(&run.initial).same_charges(&run.after_b));
                for (f, c) in run.after_b.face_charge.iter().enumerate() {
                    if top.face_degree(f) >= 7 {
                        prop_assert_eq!(c, &rat(0, 1));
                    }
                }
            }
            Err(DischargeError::SameFaceBothSides { edge, face }) => {
                prop_assert_eq!(top.edge_faces(edge), [face, face]);
            }
            Err(e) => prop_assert!(false, "unexpected error {}", e),
        }
    }

    #[test]
    fn wheel_neighborhood_implies_the_rest(rs in perturbed_map()) {
        let top = topology(&rs);
        let report = check_polyhedral(&top);
        prop_assert!(report.is_ok(), "{:?}", report);
        let report = report.unwrap();
        if report.wheel_neighborhood {
            prop_assert!(report.three_connected && report.closed_2cell);
        }
        prop_assert_eq!(report.three_connected, three_connected_by_flow(&map_adjacency(&rs)));
    }

    #[test]
    fn three_connectivity_matches_flow((n, edges) in random_graph()) {
        let (ok, witness) = check_3_connected(&graph_of(n, &edges));
        let adj = adjacency(n, &edges);
        prop_assert_eq!(ok, three_connected_by_flow(&adj));
        prop_assert_eq!(ok, witness.is_none());
        if let Some(Witness::CutPair { a, b }) = witness {
            prop_assert!(a < b && !connected_without(&adj, &[a, b]));
        }
    }

    #[test]
    fn steps_match_the_definition((n, edges) in random_graph(), len in 1usize..5) {
        let graph = graph_of(n, &edges);
        let adj = adjacency(n, &edges);
        let naive = naive_paths(&adj, len, 20_000).unwrap();
        let states = enumerate_paths(&graph, len, 1_000_000).unwrap();
        prop_assert_eq!(states.len(), naive.len());
        let listed: Vec<Vec<usize>> = states
            .iter()
            .map(|p| p.iter().map(|&v| v as usize).collect())
            .collect();
        prop_assert_eq!(&listed, &sorted(&naive));
        for path in naive.iter().take(200) {
            let state = PathState::new(&graph, path.clone()).unwrap();
            prop_assert_eq!(state.reversed().reversed(), state.clone());
            let mut got: Vec<Vec<usize>> = steps(&graph, &state).iter().map(|s| s.vertices()).collect();
            got.sort();
            prop_assert_eq!(got, sorted(&naive_steps(&adj, path)));
        }
    }

    #[test]
    fn transfer_verdicts_match_naive_reachability((n, edges) in random_graph(), len in 1usize..5) {
        let graph = graph_of(n, &edges);
        if let Some((naive, count)) = naive_transferable(&adjacency(n, &edges), len, 3_000) {
            let verdict = is_n_transferable(&graph, len, 1_000_000).unwrap();
            prop_assert_eq!(verdict.is_transferable(), naive);
            prop_assert_eq!(verdict.states(), Some(count));
        }
    }

    #[test]
    fn stuck_paths_block_transfer((n, edges) in random_graph(), len in 1usize..5) {
        let graph = graph_of(n, &edges);
        if let Some(w) = find_stuck(&graph, len, None, 1_000_000).unwrap() {
            prop_assert!(steps(&graph, &w.path).is_empty());
            prop_assert_eq!(w.path.len(), len);
            let verdict = is_n_transferable(&graph, len, 1_000_000).unwrap();
            let disconnected = matches!(verdict, NVerdict::Disconnected { .. });
            prop_assert!(disconnected, "{:?}", verdict);
        }
    }

    #[test]
    fn light_matching_ignores_order(
        degrees in prop::collection::vec(3usize..3000, 3..=6),
        seed in any::<u64>(),
    ) {
        let mut shuffled = degrees.clone();
        shuffled.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(
            match_light(&degrees).map(|(row, _)| row),
            match_light(&shuffled).map(|(row, _)| row)
        );
    }

    #[test]
    fn curvature_bound_is_the_threshold(prefix in prop::collection::vec(3usize..40, 1..=4)) {
        let mut prefix = prefix;
        prefix.sort_unstable();
        let with = |k: usize| {
            let mut t = prefix.clone();
            t.push(k);
            curvature_of_type(&t)
        };
        let zero = rat(0, 1);
        match curvature_bound(&prefix).unwrap() {
            CurvatureBound::Max(k) => {
                prop_assert!(with(k) >= zero);
                prop_assert!(with(k + 1) < zero);
            }
            CurvatureBound::Unbounded => prop_assert!(with(1_000_000) >= zero),
            CurvatureBound::Infeasible => {
                prop_assert!(with(*prefix.last().unwrap()) < zero);
            }
        }
    }
}
