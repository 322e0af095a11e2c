mod common;

use oneway_locc::graphs::{chordality, is_ktree};
use oneway_locc::locc::{
    chordal_protocol, greedy_assignment, ktree_protocol, product_measurement, verify_report, MeasurementWitness,
};
use oneway_locc::numerics::identity_residual;
use oneway_locc::{decide_one_way, verify_protocol, Budget, CliqueCover, Party, ProductStateSet, Verdict};
use proptest::prelude::*;

fn small_budget() -> Budget {
    Budget::new(64, 64, 120).unwrap()
}

fn witness_for(set: &ProductStateSet, projectors: Vec<oneway_locc::CMatrix>) -> MeasurementWitness {
    MeasurementWitness::from_operators(set, Party::Alice, projectors).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_sets_are_orthogonal(seed in any::<u64>(), n in 2usize..=7) {
        let mut rng = common::rng(seed);
        let h = common::random_graph(&mut rng, n, 0.5);
        let set = common::states_for_graph(&mut rng, &h, 0, 0);
        prop_assert!(set.check_mutual_orthogonality().is_empty());
        let g = set.confusability_graphs().unwrap();
        prop_assert!(g.g_a.is_subgraph_of(&h));
        prop_assert!(h.is_subgraph_of(&g.g_b.complement()));
    }

    #[test]
    fn chordal_complement_always_yields_a_protocol(seed in any::<u64>(), n in 2usize..=7, extra in 0usize..2) {
        let mut rng = common::rng(seed);
        let h = common::random_chordal(&mut rng, n);
        let set = common::states_for_graph(&mut rng, &h, extra, 0);
        let g = set.confusability_graphs().unwrap();
        let target = g.g_b.complement();
        prop_assume!(chordality(&target).is_some());
        let phi = set.vectors(Party::Alice);
        let dec = chordal_protocol(set.dim_a(), &phi, &target, set.tol()).unwrap();
        prop_assert!(dec.is_some());
        let dec = dec.unwrap();
        prop_assert!(dec.check(set.dim_a(), &phi).unwrap().is_valid());
        prop_assert!(verify_protocol(&set, &witness_for(&set, dec.projectors())).unwrap());
    }

    #[test]
    fn greedy_output_is_a_valid_decomposition(seed in any::<u64>(), n in 2usize..=6) {
        let mut rng = common::rng(seed);
        let h = common::random_graph(&mut rng, n, 0.5);
        let set = common::states_for_graph(&mut rng, &h, 0, 0);
        let g = set.confusability_graphs().unwrap().g_b.complement();
        let phi = set.vectors(Party::Alice);
        for cover in oneway_locc::graphs::enumerate_clique_covers(&g, usize::MAX, 8).unwrap() {
            let m = cover.len();
            let order: Vec<usize> = (0..m).collect();
            if let Some(dec) = greedy_assignment(set.dim_a(), &phi, &cover, &order, set.tol()).unwrap() {
                let r = dec.check(set.dim_a(), &phi).unwrap();
                prop_assert!(r.cross_overlap <= 1e-8 && r.support_leak <= 1e-8 && r.dim_sum == set.dim_a(), "{:?}", r);
                prop_assert!(verify_protocol(&set, &witness_for(&set, dec.projectors())).unwrap());
            }
        }
    }

    #[test]
    fn cover_built_sets_decide_with_evidence(seed in any::<u64>(), n in 3usize..=7) {
        let mut rng = common::rng(seed);
        let h = common::random_graph(&mut rng, n, 0.5);
        let set = common::states_from_cover(&mut rng, &h, 0);
        match decide_one_way(&set, Party::Alice, small_budget()).unwrap() {
            Verdict::Yes(s) => prop_assert!(verify_protocol(&set, &s.witness).unwrap()),
            Verdict::No(c) => prop_assert!(c.is_valid()),
            Verdict::Unknown(st) => prop_assert!(chordality(&h).is_none() && st.graphs_tried > 0),
        }
    }

    #[test]
    fn ktree_witnesses_are_complete_and_verify(seed in any::<u64>(), k in 1usize..3, extra in 0usize..4) {
        let mut rng = common::rng(seed);
        let g = common::random_ktree(&mut rng, k + 1 + extra, k);
        let set = common::states_with_coloured_bob(&mut rng, &g);
        let w = ktree_protocol(&set, &g, k).unwrap();
        prop_assert!(w.is_some());
        let w = w.unwrap();
        prop_assert!(identity_residual(&w.operator_sum().unwrap()) <= 1e-8);
        prop_assert!(verify_protocol(&set, &w).unwrap());
    }

    #[test]
    fn verdicts_carry_checkable_evidence(seed in any::<u64>(), n in 2usize..=6, first_bob in any::<bool>()) {
        let mut rng = common::rng(seed);
        let h = common::random_graph(&mut rng, n, 0.5);
        let set = common::states_for_graph(&mut rng, &h, 0, 0);
        let first = if first_bob { Party::Bob } else { Party::Alice };
        match decide_one_way(&set, first, small_budget()).unwrap() {
            Verdict::Yes(s) => {
                prop_assert_eq!(s.witness.first_party, first);
                prop_assert!(verify_protocol(&set, &s.witness).unwrap());
                let back = MeasurementWitness::from_json(&s.witness.to_json()).unwrap();
                prop_assert!(verify_protocol(&set, &back).unwrap());
            }
            Verdict::No(c) => {
                prop_assert!(c.is_valid());
                prop_assert!(set.complement_equality().unwrap());
            }
            Verdict::Unknown(_) => {}
        }
    }

    #[test]
    fn verdict_survives_a_local_unitary(seed in any::<u64>(), n in 2usize..=6) {
        let mut rng = common::rng(seed);
        let h = common::random_graph(&mut rng, n, 0.5);
        let set = common::states_for_graph(&mut rng, &h, 0, 0);
        let u = common::random_unitary(&mut rng, set.dim_a());
        let rotated = ProductStateSet::new(
            set.dim_a(),
            set.dim_b(),
            set.states().iter().map(|s| (Some(s.label.clone()), &u * &s.a, s.b.clone())),
            set.tol(),
        ).unwrap();
        let before = decide_one_way(&set, Party::Alice, small_budget()).unwrap();
        let after = decide_one_way(&rotated, Party::Alice, small_budget()).unwrap();
        prop_assert_eq!(before.kind(), after.kind());
        if let (Verdict::Yes(a), Verdict::Yes(_)) = (&before, &after) {
            // Conjugating the first witness gives a witness for the rotated set.
            let ops = a.witness.outcomes.iter().map(|o| &u * &o.operator * u.adjoint()).collect();
            prop_assert!(verify_protocol(&rotated, &witness_for(&rotated, ops)).unwrap());
        }
    }

    #[test]
    fn two_way_yes_gives_a_product_table(seed in any::<u64>(), n in 2usize..=6) {
        let mut rng = common::rng(seed);
        let h = common::random_chordal(&mut rng, n);
        let set = common::states_for_graph(&mut rng, &h, 0, 0);
        prop_assume!(set.complement_equality().unwrap());
        let a = decide_one_way(&set, Party::Alice, small_budget()).unwrap();
        let b = decide_one_way(&set, Party::Bob, small_budget()).unwrap();
        if let (Verdict::Yes(a), Verdict::Yes(b)) = (a, b) {
            prop_assert!(product_measurement(&set, &a.decomposition, &b.decomposition).unwrap().is_table());
        }
    }

    #[test]
    fn perturbed_operators_break_completeness(seed in any::<u64>(), n in 2usize..=6) {
        let mut rng = common::rng(seed);
        let h = common::random_graph(&mut rng, n, 0.5);
        let set = common::states_for_graph(&mut rng, &h, 0, 0);
        if let Verdict::Yes(s) = decide_one_way(&set, Party::Alice, small_budget()).unwrap() {
            for k in 0..s.witness.outcomes.len() {
                let d = set.dim_a();
                for idx in 0..d * d {
                    let mut w = s.witness.clone();
                    let z = &mut w.outcomes[k].operator[(idx / d, idx % d)];
                    z.re += if z.re >= 0.0 { 0.1 } else { -0.1 };
                    let r = verify_report(&set, &w).unwrap();
                    prop_assert!(!r.is_complete());
                }
            }
        }
    }
}

#[test]
fn single_clique_cover_is_trivial() {
    let set = oneway_locc::builtin("example3").unwrap();
    let cover = CliqueCover { cliques: vec![oneway_locc::VertexSet::all(7)] };
    let dec = greedy_assignment(3, &set.vectors(Party::Alice), &cover, &[0], set.tol()).unwrap().unwrap();
    assert_eq!(dec.parts[0].dim(), 3);
}

#[test]
fn ktree_rejects_graphs_outside_the_window() {
    let set = oneway_locc::builtin("example1").unwrap();
    let c4 = oneway_locc::SimpleGraph::cycle(4).unwrap();
    assert!(ktree_protocol(&set, &c4, 1).is_err());
    assert!(is_ktree(&c4, 1).is_none());
}
