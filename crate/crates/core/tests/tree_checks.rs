//! Exactness checks for tree balls: the subtree invariants, the coset
//! canonicalization, the action laws, and agreement between the two
//! distance routes (ball walks and algebraic syllable counts).

mod support;

use raag::{
    act, axis_vertices, bridge_edge, build_ball, displacement, fixed_vertices, in_special_subgroup,
    tree_distance, vertex_fixed_by, AmalgamSplitting, Graph, Side, TreeError, VertexSet, Word,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use support::*;

fn splittings() -> Vec<AmalgamSplitting> {
    vec![
        AmalgamSplitting::from_separator(&p3(), &set(&["b"]), "a").unwrap(),
        AmalgamSplitting::from_separator(&c4(), &set(&["a", "c"]), "b").unwrap(),
        AmalgamSplitting::from_separator(&free_xy(), &set(&[]), "x").unwrap(),
        AmalgamSplitting::from_separator(
            &Graph::new(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d")]).unwrap(),
            &set(&["b"]),
            "a",
        )
        .unwrap(),
    ]
}

fn random_word(rng: &mut impl Rng, g: &Graph, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_letters(
        (0..len)
            .map(|_| raag::Letter::new(rng.gen_range(0..g.vertex_count()), rng.gen_bool(0.5)))
            .collect(),
    )
}

#[test]
fn balls_are_trees_and_grow_monotonically() {
    for s in splittings() {
        let mut last = 0;
        for radius in 0..=3 {
            let ball = build_ball(&s, radius, 200_000).unwrap();
            assert_eq!(ball.vertex_count(), ball.edge_count() + 1, "not a tree at radius {radius}");
            assert!(ball.edge_count() >= last);
            last = ball.edge_count();
        }
    }
}

#[test]
fn coset_keys_are_representative_independent() {
    // Multiplying on the right by subgroup elements never changes the
    // stored key, for vertex and edge cosets alike.
    let mut rng = ChaCha8Rng::seed_from_u64(51);
    for s in splittings() {
        let g = s.ambient().clone();
        for _ in 0..200 {
            let u = random_word(&mut rng, &g, 6);
            for side in [Side::One, Side::Two] {
                let mut tail = Word::empty();
                for _ in 0..3 {
                    let labels: Vec<&str> = s.side(side).iter().collect();
                    if labels.is_empty() {
                        continue;
                    }
                    let l = labels[rng.gen_range(0..labels.len())];
                    let mut w = Word::generator(&g, l).unwrap();
                    if rng.gen_bool(0.5) {
                        w = w.inverse();
                    }
                    tail = tail.concat(&w);
                }
                let plain = raag::coset_vertex(&s, &u, side).unwrap();
                let shifted = raag::coset_vertex(&s, &u.concat(&tail), side).unwrap();
                assert_eq!(plain, shifted, "vertex key depends on the representative");
            }
        }
    }
}

#[test]
fn stored_cosets_are_pairwise_distinct_by_membership() {
    for s in splittings() {
        let ball = build_ball(&s, 2, 200_000).unwrap();
        let g = s.ambient();
        for a in 0..ball.vertex_count() {
            for b in a + 1..ball.vertex_count() {
                assert!(!ball.same_vertex_coset(a, b).unwrap());
            }
        }
        // Edge cosets too: distinct keys give distinct cosets.
        for a in 0..ball.edge_count() {
            for b in a + 1..ball.edge_count() {
                let (ea, eb) = (ball.edge(a), ball.edge(b));
                let diff = ea.rep_word().inverse().concat(&eb.rep_word());
                assert!(!in_special_subgroup(g, s.lam(), &diff).unwrap());
            }
        }
    }
}

#[test]
fn action_respects_multiplication_and_spelling() {
    let mut rng = ChaCha8Rng::seed_from_u64(52);
    for s in splittings() {
        let g = s.ambient().clone();
        let ball = build_ball(&s, 2, 200_000).unwrap();
        for _ in 0..100 {
            let a = random_word(&mut rng, &g, 5);
            let b = random_word(&mut rng, &g, 5);
            let v = ball.vertex(rng.gen_range(0..ball.vertex_count()));
            let composite = act(&s, &a.concat(&b), v).unwrap();
            let stepwise = act(&s, &a, &act(&s, &b, v).unwrap()).unwrap();
            assert_eq!(composite, stepwise);

            // A different spelling of the same element acts identically.
            let moves = valid_moves(&g, a.letters(), 9);
            if !moves.is_empty() {
                let mv = &moves[rng.gen_range(0..moves.len())];
                let a2 = Word::from_letters(apply_move(a.letters(), mv));
                assert_eq!(act(&s, &a, v).unwrap(), act(&s, &a2, v).unwrap());
            }
        }
    }
}

#[test]
fn algebraic_distance_equals_ball_distance() {
    for s in splittings() {
        let ball = build_ball(&s, 3, 200_000).unwrap();
        let step = (ball.vertex_count() / 25).max(1);
        for a in (0..ball.vertex_count()).step_by(step) {
            for b in (0..ball.vertex_count()).step_by(step) {
                assert_eq!(
                    tree_distance(&s, ball.vertex(a), ball.vertex(b)),
                    ball.distance(a, b)
                );
            }
        }
    }
}

#[test]
fn fixed_sets_are_connected_in_the_ball() {
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    for s in splittings() {
        let g = s.ambient().clone();
        let ball = build_ball(&s, 3, 200_000).unwrap();
        for _ in 0..60 {
            let w = random_word(&mut rng, &g, 5);
            let fix = fixed_vertices(&s, &w, &ball).unwrap();
            if fix.len() < 2 {
                continue;
            }
            // Walk the path between any two fixed vertices: every stop
            // must be fixed as well (subtrees are convex).
            let sample: Vec<usize> = fix.iter().copied().take(6).collect();
            for &a in &sample {
                for &b in &sample {
                    for p in ball.geodesic(a, b) {
                        assert!(vertex_fixed_by(&s, &w, ball.vertex(p)).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn displacement_matches_classification_on_adequate_balls() {
    let mut rng = ChaCha8Rng::seed_from_u64(54);
    for s in splittings() {
        let g = s.ambient().clone();
        for _ in 0..25 {
            let w = random_word(&mut rng, &g, 4);
            let nf = raag::normal_form(&g, &w).unwrap();
            let radius = nf.len() + 2;
            let ball = build_ball(&s, radius, 400_000).unwrap();
            let cls = s.classify(&w).unwrap();
            assert_eq!(
                displacement(&s, &w, &ball).unwrap(),
                cls.translation_length(),
                "word {} on {:?}",
                w.display(&g),
                s.to_descriptor()
            );
        }
    }
}

#[test]
fn axes_are_invariant_and_conjugation_translates_them() {
    let s = AmalgamSplitting::from_separator(&free_xy(), &set(&[]), "x").unwrap();
    let g = s.ambient().clone();
    let ball = build_ball(&s, 4, 400_000).unwrap();
    let xy = word(&g, "x y");
    let axis = axis_vertices(&s, &xy, &ball).unwrap();
    assert!(!axis.is_empty());

    // Conjugating moves the axis by the conjugator.
    let u = word(&g, "x");
    let conj = xy.conjugated_by(&u);
    let conj_axis = axis_vertices(&s, &conj, &ball).unwrap();
    for &v in &axis {
        let moved = act(&s, &u, ball.vertex(v)).unwrap();
        if let Some(id) = ball.locate_vertex(&moved) {
            let back = act(&s, &conj, &moved).unwrap();
            if ball.locate_vertex(&back).is_some() {
                assert!(conj_axis.contains(&id), "conjugated axis misses u * axis");
            }
        }
    }
}

#[test]
fn bridge_certificates_separate_fixed_sets() {
    let s = AmalgamSplitting::from_separator(&p3(), &set(&["b"]), "a").unwrap();
    let g = s.ambient().clone();
    let ball = build_ball(&s, 3, 200_000).unwrap();
    let cert = bridge_edge(&s, &word(&g, "a"), &word(&g, "c"), &ball).unwrap();
    // The produced edge sits strictly between the two segments.
    assert!(cert.first_segment_end < cert.second_segment_start);
    let fix_a = fixed_vertices(&s, &word(&g, "a"), &ball).unwrap();
    let fix_c = fixed_vertices(&s, &word(&g, "c"), &ball).unwrap();
    assert!(fix_a.iter().all(|v| !fix_c.contains(v)), "fixed sets meet inside the ball");

    // Commuting elliptic elements must refuse a bridge: segments overlap.
    assert!(matches!(
        bridge_edge(&s, &word(&g, "a"), &word(&g, "b"), &ball),
        Err(TreeError::FixedSetsOverlap)
    ));
}

#[test]
fn bridge_on_free_product_is_the_base_edge() {
    // The generators fix exactly their own base vertices, so the geodesic
    // between the fixed sets is the base edge itself.
    let s = AmalgamSplitting::from_separator(&free_xy(), &set(&[]), "x").unwrap();
    let g = s.ambient().clone();
    let ball = build_ball(&s, 2, 200_000).unwrap();
    let cert = bridge_edge(&s, &word(&g, "x"), &word(&g, "y"), &ball).unwrap();
    assert_eq!(cert.edge, ball.base_edge());
    assert_eq!(cert.path.len(), 2);
}

#[test]
fn ball_export_is_deterministic_and_well_formed() {
    let s = AmalgamSplitting::from_separator(&c4(), &set(&["a", "c"]), "b").unwrap();
    let b1 = build_ball(&s, 2, 200_000).unwrap();
    let b2 = build_ball(&s, 2, 200_000).unwrap();
    let j1 = serde_json::to_string(&b1.export()).unwrap();
    let j2 = serde_json::to_string(&b2.export()).unwrap();
    assert_eq!(j1, j2);

    let export = b1.export();
    assert_eq!(export.vertex_count, export.vertices.len());
    assert_eq!(export.edge_count, export.edges.len());
    for e in &export.edges {
        assert!(e.endpoints[0] < export.vertex_count && e.endpoints[1] < export.vertex_count);
    }
}

#[test]
fn free_product_geodesic_matches_displacement() {
    let s = AmalgamSplitting::from_separator(&free_xy(), &set(&[]), "x").unwrap();
    let g = s.ambient().clone();
    let ball = build_ball(&s, 2, 200_000).unwrap();
    let base = ball.base_vertex(Side::One);
    let xy = word(&g, "x y");
    let image = act(&s, &xy, ball.vertex(base)).unwrap();
    let image_id = ball.locate_vertex(&image).unwrap();
    assert_eq!(ball.geodesic(base, image_id).len(), 3);
    assert_eq!(ball.distance(base, image_id), 2);
}

#[test]
fn lambda_vertices_on_separator_fix_the_base_edge() {
    for s in splittings() {
        let g = s.ambient().clone();
        let ball = build_ball(&s, 1, 200_000).unwrap();
        let base = ball.edge(ball.base_edge());
        for l in s.lam().iter() {
            let w = Word::generator(&g, l).unwrap();
            assert!(raag::fixes_edge(&s, &w, base).unwrap());
        }
    }
}

#[test]
fn lambda_membership_equals_edge_fixing_at_base() {
    // Exactness of the membership route: a word stabilizes the base edge
    // iff it lies in the subgroup generated by the separator.
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    for s in splittings() {
        let g = s.ambient().clone();
        let ball = build_ball(&s, 1, 200_000).unwrap();
        let base = ball.edge(ball.base_edge()).clone();
        for _ in 0..100 {
            let w = random_word(&mut rng, &g, 6);
            assert_eq!(
                raag::fixes_edge(&s, &w, &base).unwrap(),
                in_special_subgroup(&g, s.lam(), &w).unwrap()
            );
        }
    }
}

#[test]
fn empty_separator_ball_has_trivial_edge_stabilizers() {
    let s = AmalgamSplitting::from_separator(&free_xy(), &set(&[]), "x").unwrap();
    let g = s.ambient().clone();
    let ball = build_ball(&s, 1, 200_000).unwrap();
    let base = ball.edge(ball.base_edge());
    assert!(raag::fixes_edge(&s, &Word::empty(), base).unwrap());
    assert!(!raag::fixes_edge(&s, &word(&g, "x"), base).unwrap());
}

#[test]
fn vertex_set_display_matches_membership(){
    let v: VertexSet = set(&["b", "a"]);
    assert_eq!(v.to_string(), "{a, b}");
}

#[test]
fn exactness_across_all_small_splittings() {
    // Every amalgam of every connected graph on 4 or 5 vertices, along
    // every minimal separator: representative-independent coset keys,
    // matching distance routes, and displacement agreeing with the
    // classification.
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for n in 4..=5 {
        for g in connected_iso_representatives(n) {
            for lam in g.minimal_separators().unwrap() {
                let pick = g.labels().find(|l| !lam.contains(l)).unwrap();
                let s = AmalgamSplitting::from_separator(&g, &lam, pick).unwrap();
                let ball = build_ball(&s, 2, 400_000).unwrap();
                assert_eq!(ball.vertex_count(), ball.edge_count() + 1);

                // Coset keys ignore subgroup tails.
                for _ in 0..20 {
                    let u = random_word(&mut rng, &g, 5);
                    for side in [Side::One, Side::Two] {
                        let labels: Vec<&str> = s.side(side).iter().collect();
                        let l = labels[rng.gen_range(0..labels.len())];
                        let tail = Word::generator(&g, l).unwrap().pow(rng.gen_range(1..=2));
                        assert_eq!(
                            raag::coset_vertex(&s, &u, side).unwrap(),
                            raag::coset_vertex(&s, &u.concat(&tail), side).unwrap()
                        );
                    }
                }

                // Algebraic distances match ball walks.
                let step = (ball.vertex_count() / 12).max(1);
                for a in (0..ball.vertex_count()).step_by(step) {
                    for b in (0..ball.vertex_count()).step_by(step) {
                        assert_eq!(tree_distance(&s, ball.vertex(a), ball.vertex(b)), ball.distance(a, b));
                    }
                }

                // Displacement realizes the translation length.
                for _ in 0..6 {
                    let w = random_word(&mut rng, &g, 3);
                    let radius = raag::normal_form(&g, &w).unwrap().len() + 2;
                    let wball = build_ball(&s, radius, 400_000).unwrap();
                    assert_eq!(
                        displacement(&s, &w, &wball).unwrap(),
                        s.classify(&w).unwrap().translation_length()
                    );
                }
            }
        }
    }
}
