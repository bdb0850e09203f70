//! Structural invariants checked exhaustively over small ranks.

mod common;

use std::collections::BTreeSet;

use cluster_tube::derived::{
    apply_mutation_sequence, cartan_determinant, cartan_matrix, count_3_cycles, normal_form_line,
    normal_form_peak, normal_form_sequence,
};
use cluster_tube::quiver::{
    delta_c, extended_mutate, fz_mutate, gamma_c, node_quivers, quiver_iso, quiver_of, replay_step,
    standard_quiver, validate_membership, VertexLabel,
};
use cluster_tube::{enumerate_maximal_rigid, ClusterTube, ExchangeGraph, Indec, MaximalRigid};
use proptest::prelude::*;

fn tube(n: usize) -> ClusterTube {
    ClusterTube::new(n).unwrap()
}

#[test]
fn two_calabi_yau_symmetry_and_hom_decomposition() {
    for n in 2..=5 {
        let t = tube(n);
        let all = t.indecomposables(2 * n);
        for &m in &all {
            for &nn in &all {
                let fwd = t.hom_dim_cluster(m, t.shift(nn, 1));
                let bwd = t.hom_dim_cluster(nn, t.shift(m, 1));
                assert_eq!(fwd, bwd, "n={n} m={m} nn={nn}");
                let two_routes = t.ext1_dim_tube(m, nn) + t.ext1_dim_tube(nn, m);
                assert_eq!(fwd, two_routes, "n={n} m={m} nn={nn}");
            }
        }
    }
}

#[test]
fn enumeration_agrees_with_global_brute_force() {
    for n in 2..=6 {
        let t = tube(n);
        let wings: Vec<Vec<Indec>> = enumerate_maximal_rigid(&t)
            .into_iter()
            .map(|obj| obj.summands().to_vec())
            .collect();
        let mut brute = common::brute_force_maximal_rigid(&t);
        brute.sort();
        assert_eq!(wings, brute, "n={n}");
    }
}

#[test]
fn no_smaller_inextensible_rigid_sets() {
    // Every inextensible pairwise-compatible set has exactly n-1 members.
    for n in 2..=5 {
        let t = tube(n);
        let pool = t.rigid_indecomposables();
        let compatible = |x: Indec, y: Indec| {
            t.hom_dim_cluster(x, t.shift(y, 1)) == 0 && t.hom_dim_cluster(y, t.shift(x, 1)) == 0
        };
        let mut stack: Vec<Vec<usize>> = vec![vec![]];
        while let Some(current) = stack.pop() {
            let extensions: Vec<usize> = (0..pool.len())
                .filter(|&j| {
                    !current.contains(&j) && current.iter().all(|&i| compatible(pool[i], pool[j]))
                })
                .collect();
            if extensions.is_empty() {
                assert_eq!(current.len(), n - 1, "n={n}: inextensible set {current:?}");
                continue;
            }
            // Grow in sorted order only; every set is still reached once.
            let next = current.last().map_or(0, |&i| i + 1);
            for &j in extensions.iter().filter(|&&j| j >= next) {
                let mut grown = current.clone();
                grown.push(j);
                stack.push(grown);
            }
        }
    }
}

#[test]
fn exchange_graph_regular_and_connected() {
    for n in 2..=6 {
        let t = tube(n);
        let g = ExchangeGraph::build(&t).unwrap();
        assert_eq!(g.edges().len(), (n - 1) * g.nodes().len() / 2);
        for node in 0..g.nodes().len() {
            assert_eq!(g.edges_at(node).len(), n - 1, "n={n}");
        }
        let mut seen = vec![false; g.nodes().len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &ei in g.edges_at(v) {
                let (w, _, _) = g.traverse(&g.edges()[ei], v);
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        assert!(seen.into_iter().all(|b| b), "n={n} graph disconnected");
    }
}

#[test]
fn quiver_replay_is_path_independent() {
    // Replaying across any edge sends the source quiver to the target
    // quiver (with the exchanged summand relabelled); by induction any two
    // mutation paths from the standard object produce the same quiver.
    for n in 2..=5 {
        let t = tube(n);
        let g = ExchangeGraph::build(&t).unwrap();
        let quivers = node_quivers(&t, &g).unwrap();
        for e in g.edges() {
            let replayed = replay_step(&quivers[e.source], e.removed, e.added).unwrap();
            assert_eq!(replayed, quivers[e.target], "n={n} edge {e:?}");
        }
        for (node, qt) in g.nodes().iter().zip(&quivers) {
            assert_eq!(&quiver_of(&t, &g, node).unwrap(), qt);
            assert!(validate_membership(qt, n));
            assert_eq!(
                qt.loop_label(),
                &VertexLabel::Summand(node.apex_object()),
                "loop sits at the apex summand"
            );
        }
    }
}

#[test]
fn loopization_commutes_with_mutation_on_all_quivers() {
    for n in 3..=5 {
        let t = tube(n);
        let g = ExchangeGraph::build(&t).unwrap();
        for qt in node_quivers(&t, &g).unwrap() {
            let c = qt.loop_vertex();
            let plain = delta_c(&qt);
            for v in 0..qt.vertex_count() {
                if v != c {
                    let left = extended_mutate(&qt, v).unwrap();
                    let right = gamma_c(&fz_mutate(&plain, v).unwrap(), c).unwrap();
                    assert_eq!(left, right, "n={n} v={v} qt={qt}");
                } else if qt.quiver().neighbours(c).len() == 1 {
                    let left = extended_mutate(&qt, c).unwrap();
                    let right = gamma_c(&fz_mutate(&plain, c).unwrap(), c).unwrap();
                    assert_eq!(left, right, "n={n} loop vertex, qt={qt}");
                }
            }
        }
    }
}

#[test]
fn three_cycle_count_changes_by_at_most_one_per_mutation() {
    for n in 2..=6 {
        let t = tube(n);
        let g = ExchangeGraph::build(&t).unwrap();
        let counts: Vec<usize> = node_quivers(&t, &g)
            .unwrap()
            .iter()
            .map(count_3_cycles)
            .collect();
        for e in g.edges() {
            let delta = counts[e.source].abs_diff(counts[e.target]);
            assert!(delta <= 1, "n={n} edge {e:?} changes t by {delta}");
            if !e.simple {
                assert_eq!(delta, 0, "non-simple mutations only reverse arrows");
            }
        }
    }
}

#[test]
fn same_count_quivers_connect_through_count_preserving_mutations() {
    // Up to isomorphism, any two quivers with the same number of 3-cycles
    // are linked by a chain of mutations that never changes the count.
    for n in 3..=5 {
        let t = tube(n);
        let g = ExchangeGraph::build(&t).unwrap();
        let mut reps: Vec<cluster_tube::quiver::QTilde> = Vec::new();
        for qt in node_quivers(&t, &g).unwrap() {
            if !reps.iter().any(|r| quiver_iso(r.quiver(), qt.quiver())) {
                reps.push(qt);
            }
        }
        let class_of = |q: &cluster_tube::quiver::QTilde| {
            reps.iter()
                .position(|r| quiver_iso(r.quiver(), q.quiver()))
                .expect("mutation stays inside the realized family")
        };
        let mut linked: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); reps.len()];
        for i in 0..reps.len() {
            for v in 0..reps[i].vertex_count() {
                let mutated = extended_mutate(&reps[i], v).unwrap();
                if count_3_cycles(&mutated) == count_3_cycles(&reps[i]) {
                    let j = class_of(&mutated);
                    linked[i].insert(j);
                    linked[j].insert(i);
                }
            }
        }
        for i in 0..reps.len() {
            let mut seen = BTreeSet::from([i]);
            let mut stack = vec![i];
            while let Some(x) = stack.pop() {
                for &y in &linked[x] {
                    if seen.insert(y) {
                        stack.push(y);
                    }
                }
            }
            for j in 0..reps.len() {
                if count_3_cycles(&reps[i]) == count_3_cycles(&reps[j]) {
                    assert!(
                        seen.contains(&j),
                        "n={n}: quivers {} and {} share the 3-cycle count but are not linked",
                        reps[i],
                        reps[j]
                    );
                }
            }
        }
    }
}

#[test]
fn cartan_entries_are_hom_dimensions() {
    // Two unrelated routes to the same numbers: relation-avoiding path
    // counts in the replayed quiver versus Hom dimensions in the cluster
    // tube between the labelling summands.
    for n in 2..=5 {
        let t = tube(n);
        let g = ExchangeGraph::build(&t).unwrap();
        for qt in node_quivers(&t, &g).unwrap() {
            let cartan = cartan_matrix(&qt).unwrap();
            let summand = |v: usize| match cartan.order[v] {
                VertexLabel::Summand(x) => x,
                ref other => panic!("replayed quivers are summand-labelled, got {other}"),
            };
            for u in 0..qt.vertex_count() {
                for v in 0..qt.vertex_count() {
                    assert_eq!(
                        cartan.entries[u][v] as usize,
                        t.hom_dim_cluster(summand(u), summand(v)),
                        "n={n} quiver {qt} entry ({u}, {v})"
                    );
                }
            }
        }
    }
}

#[test]
fn cartan_determinant_law_small_ranks() {
    for n in 2..=6 {
        let t = tube(n);
        let g = ExchangeGraph::build(&t).unwrap();
        for qt in node_quivers(&t, &g).unwrap() {
            let det = cartan_determinant(&cartan_matrix(&qt).unwrap());
            assert_eq!(det, 1i128 << (count_3_cycles(&qt) + 1), "n={n} {qt}");
        }
    }
}

#[test]
fn normal_form_reduction_works_wherever_constructible() {
    // r >= 2 so the written tuple's inner descent is nonempty.
    for n in 4..=9usize {
        for t in 1..=(n - 3) / 2 {
            let r = n - 1 - 2 * t;
            if r < 2 {
                continue;
            }
            for s in 1..=t {
                let peak = normal_form_peak(n, t, r, s).unwrap();
                let line = normal_form_line(n, t).unwrap();
                let seq = normal_form_sequence(r, s);
                let mut current = peak.clone();
                for (step, name) in seq.iter().enumerate() {
                    let v = current.quiver().vertex_by_name(name).unwrap();
                    // The loop vertex keeps at most two neighbours along the
                    // whole reduction.
                    let c = current.loop_vertex();
                    let c_degree = current.quiver().neighbours(c).len();
                    assert!(
                        c_degree <= 2,
                        "n={n} r={r} s={s} step {step}: loop vertex degree {c_degree}"
                    );
                    current = extended_mutate(&current, v).unwrap();
                }
                assert!(
                    quiver_iso(current.quiver(), line.quiver()),
                    "n={n} t={t} r={r} s={s}: reduction missed the line form\ngot {current}\nwant {line}"
                );
                assert_eq!(count_3_cycles(&current), t);
                // And the sequence is reversible.
                let mut back = seq.clone();
                back.reverse();
                assert_eq!(apply_mutation_sequence(&current, &back).unwrap(), peak);
            }
        }
    }
}

#[test]
fn standard_quivers_are_members_for_all_apexes() {
    for n in 2..=8 {
        let t = tube(n);
        for a in 1..=n {
            let qt = standard_quiver(&t, a);
            assert!(validate_membership(&qt, n));
            assert_eq!(count_3_cycles(&qt), 0);
        }
    }
}

#[test]
fn mutation_edges_shift_equivariantly() {
    // Shifting a maximal rigid object commutes with mutation.
    let t = tube(4);
    for obj in enumerate_maximal_rigid(&t) {
        for &r in obj.summands() {
            let edge = cluster_tube::mutate(&t, &obj, r).unwrap();
            let shifted = obj.shifted(&t, 1);
            let edge_shifted = cluster_tube::mutate(&t, &shifted, t.shift(r, 1)).unwrap();
            assert_eq!(edge_shifted.target, edge.target.shifted(&t, 1));
        }
    }
}

proptest! {
    #[test]
    fn shift_composes_additively(n in 2usize..9, socle in 1i64..100, len in 1usize..16, j in -20i64..20, k in -20i64..20) {
        let t = tube(n);
        let x = t.indec(socle, len).unwrap();
        prop_assert_eq!(t.shift(t.shift(x, j), k), t.shift(x, j + k));
        prop_assert_eq!(t.shift(x, n as i64), x);
        prop_assert_eq!(t.shift(x, 0), x);
    }

    #[test]
    fn cluster_hom_is_two_cy_symmetric(n in 2usize..7, a in 1i64..12, b in 1usize..12, c in 1i64..12, d in 1usize..12) {
        let t = tube(n);
        let m = t.indec(a, b).unwrap();
        let nn = t.indec(c, d).unwrap();
        prop_assert_eq!(
            t.hom_dim_cluster(m, t.shift(nn, 1)),
            t.hom_dim_cluster(nn, t.shift(m, 1))
        );
    }

    #[test]
    fn object_sum_order_is_canonical(perm_seed in 0u64..1000) {
        let items = vec![
            Indec::new(2, 1), Indec::new(1, 3), Indec::new(1, 1), Indec::new(2, 1),
        ];
        let mut rng = perm_seed;
        let mut shuffled = items.clone();
        for i in (1..shuffled.len()).rev() {
            rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            shuffled.swap(i, (rng >> 33) as usize % (i + 1));
        }
        let a: cluster_tube::ObjectSum = items.into_iter().collect();
        let b: cluster_tube::ObjectSum = shuffled.into_iter().collect();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn standard_quiver_arrows_point_along_nonzero_hom() {
    // The line arrows (a,i) -> (a,i+1) follow the inclusions; backwards Hom
    // vanishes. Forwards there is one extra map exactly at the top step,
    // where the inclusion composes with the loop.
    for n in 2..=6 {
        let t = tube(n);
        for a in 1..=n {
            for i in 1..n - 1 {
                let shorter = Indec::new(a, i);
                let longer = Indec::new(a, i + 1);
                let expected = if i == n - 2 { 2 } else { 1 };
                assert_eq!(
                    t.hom_dim_cluster(shorter, longer),
                    expected,
                    "n={n} a={a} i={i}"
                );
                assert_eq!(t.hom_dim_cluster(longer, shorter), 0, "n={n} a={a} i={i}");
            }
        }
    }
}

#[test]
fn vanishing_against_shifts_characterizes_add_t() {
    // Hom(T, Sigma M) vanishes exactly when M is a summand of T or M is of
    // the form (apex, s*n - 1) for s >= 2.
    for n in 2..=4 {
        let t = tube(n);
        for obj in enumerate_maximal_rigid(&t) {
            for m in t.indecomposables(3 * n) {
                let vanishes = obj
                    .summands()
                    .iter()
                    .all(|&x| t.hom_dim_cluster(x, t.shift(m, 1)) == 0);
                let exceptional =
                    m.socle == obj.apex() && m.length >= 2 * n - 1 && (m.length + 1) % n == 0;
                assert_eq!(
                    vanishes,
                    obj.contains(m) || exceptional,
                    "n={n} T={obj} M={m}"
                );
            }
        }
    }
}

#[test]
fn rank_three_realizes_both_orientations() {
    // Across the six rank-3 objects both orientations of the one-arrow
    // quiver occur.
    let t = tube(3);
    let g = ExchangeGraph::build(&t).unwrap();
    let mut toward_loop = 0;
    let mut away_from_loop = 0;
    for qt in node_quivers(&t, &g).unwrap() {
        let c = qt.loop_vertex();
        let arrows = qt.plain_arrows();
        assert_eq!(arrows.len(), 1);
        if arrows[0].1 == c {
            toward_loop += 1;
        } else {
            assert_eq!(arrows[0].0, c);
            away_from_loop += 1;
        }
    }
    assert_eq!(toward_loop + away_from_loop, 6);
    assert!(toward_loop > 0 && away_from_loop > 0);
}

#[test]
fn small_normal_form_shapes() {
    // Rank 4, no 3-cycle: a line with the loop at its head.
    let q = normal_form_line(4, 0).unwrap();
    assert_eq!(count_3_cycles(&q), 0);
    let c = q.loop_vertex();
    assert_eq!(q.quiver().neighbours(c).len(), 1);
    let arrows = q.plain_arrows();
    assert_eq!(arrows.len(), 2);
    assert!(
        arrows.iter().any(|&(s, _)| s == c),
        "arrow leaves the loop vertex"
    );

    // Rank 3: the two-vertex line.
    let q = normal_form_line(3, 0).unwrap();
    assert_eq!(q.vertex_count(), 2);
    assert_eq!(q.plain_arrows().len(), 1);
}

#[test]
fn mutation_paths_replay_between_arbitrary_nodes() {
    for n in 2..=4 {
        let t = tube(n);
        let g = ExchangeGraph::build(&t).unwrap();
        let nodes = g.nodes();
        for from in nodes {
            for to in nodes {
                let path = g.mutation_path(from, to).unwrap();
                let mut cur = from.clone();
                for r in path {
                    cur = cluster_tube::mutate(&t, &cur, r).unwrap().target;
                }
                assert_eq!(&cur, to, "n={n}: path {from} -> {to} does not arrive");
            }
        }
    }
}

#[test]
fn wing_standard_object_reaches_all_wing_members() {
    // Every node is reachable from its wing's standard object through
    // simple mutations only.
    for n in 2..=5 {
        let t = tube(n);
        let g = ExchangeGraph::build(&t).unwrap();
        for obj in g.nodes() {
            let std = MaximalRigid::standard(&t, obj.apex());
            let path = g.mutation_path(&std, obj).unwrap();
            let mut cur = std;
            for r in path {
                let edge = cluster_tube::mutate(&t, &cur, r).unwrap();
                assert!(edge.simple);
                cur = edge.target;
            }
            assert_eq!(&cur, obj);
        }
    }
}
