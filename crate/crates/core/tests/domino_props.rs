mod common;

use oneway_locc::domino::{builtin_bennett3x3, DirectionVerdict, DominoDiagram};
use oneway_locc::graphs::clique_cover_number;
use proptest::prelude::*;

fn diagram(seed: u64, m: usize, n: usize) -> DominoDiagram {
    common::random_diagram(&mut common::rng(seed), m, n)
}

fn dims() -> impl Strategy<Value = (usize, usize)> {
    (1usize..=4, 1usize..=4).prop_filter("at most 12 squares", |(m, n)| m * n <= 12)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn random_tilings_are_valid(seed in any::<u64>(), (m, n) in dims()) {
        let d = diagram(seed, m, n);
        prop_assert!(d.validate().is_valid(), "{}", d.validate());
        let back = DominoDiagram::from_json(&d.to_json()).unwrap();
        prop_assert_eq!(back, d);
    }

    #[test]
    fn generated_states_are_orthogonal_for_any_phases(seed in any::<u64>(), (m, n) in dims(), phases in any::<u64>()) {
        let d = diagram(seed, m, n);
        for d in [d.clone(), d.with_random_phases(phases)] {
            let set = d.generate_states().unwrap();
            prop_assert_eq!(set.len(), m * n);
            prop_assert!(set.check_mutual_orthogonality().is_empty());
        }
    }

    #[test]
    fn graphs_match_states_for_generic_phases(seed in any::<u64>(), (m, n) in dims(), phases in any::<u64>()) {
        let d = diagram(seed, m, n).with_random_phases(phases);
        let report = d.consistency().unwrap();
        prop_assert!(report.is_consistent(), "{:?} {:?}", d, report);
        let cond = d.complement_condition().unwrap();
        prop_assert_eq!(cond, d.row_graph().unwrap() == d.column_graph().unwrap().complement());
    }

    #[test]
    fn bounds_hold(seed in any::<u64>(), (m, n) in dims()) {
        let d = diagram(seed, m, n);
        let b = d.bounds().unwrap();
        let row = clique_cover_number(&d.row_graph().unwrap().complement()).unwrap();
        let col = clique_cover_number(&d.column_graph().unwrap().complement()).unwrap();
        prop_assert!(row >= b.lower_row, "row {} < {} for {:?}", row, b.lower_row, d);
        prop_assert!(col >= b.lower_col, "col {} < {} for {:?}", col, b.lower_col, d);
    }

    #[test]
    fn verdicts_agree_with_exact_cover_numbers(seed in any::<u64>(), (m, n) in dims()) {
        let d = diagram(seed, m, n);
        if let Ok(v) = d.verdict() {
            let col = clique_cover_number(&d.column_graph().unwrap().complement()).unwrap();
            let row = clique_cover_number(&d.row_graph().unwrap().complement()).unwrap();
            if matches!(v.alice_first, DirectionVerdict::NotDistinguishable { .. }) {
                prop_assert!(col > m);
            }
            if matches!(v.bob_first, DirectionVerdict::NotDistinguishable { .. }) {
                prop_assert!(row > n);
            }
        }
    }

    #[test]
    fn translation_is_an_isomorphism(seed in any::<u64>(), (m, n) in dims(), dr in 0usize..4, dc in 0usize..4) {
        let d = diagram(seed, m, n);
        let t = d.translated(dr % m, dc % n);
        prop_assert!(t.validate().is_valid());
        let perm = d.translation_permutation(dr % m, dc % n);
        prop_assert_eq!(d.row_graph().unwrap().permuted(&perm).unwrap(), t.row_graph().unwrap());
        prop_assert_eq!(d.column_graph().unwrap().permuted(&perm).unwrap(), t.column_graph().unwrap());
    }
}

#[test]
fn bennett_is_ruled_out_both_ways() {
    let d = builtin_bennett3x3();
    let v = d.verdict().unwrap();
    assert!(matches!(v.alice_first, DirectionVerdict::NotDistinguishable { .. }));
    assert!(matches!(v.bob_first, DirectionVerdict::NotDistinguishable { .. }));
    let set = d.generate_states().unwrap();
    let g = set.confusability_graphs().unwrap();
    assert!(clique_cover_number(&g.g_a).unwrap() >= 4);
    assert_eq!(g.g_a, g.g_b.complement());
}
