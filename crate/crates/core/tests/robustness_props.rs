mod common;

use common::*;
use itertools::Itertools;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use toric_robust::graver::graver_basis;
use toric_robust::lawrence::{lawrence_lift_omega, OmegaSet};
use toric_robust::robustness::{
    complex_from_graver, induced_subcomplex, is_indispensable, is_strongly_robust, omega_is_face,
    strongly_robust_complex,
};
use toric_robust::IntMatrix;

/// Δ_T by recomputing the Graver basis of every lifting from scratch.
fn complex_by_direct_lifts(t: &IntMatrix) -> Vec<Vec<usize>> {
    let s = t.cols();
    (0..=s)
        .flat_map(|k| (1..=s).combinations(k))
        .filter(|w| {
            let omega = OmegaSet::new(s, w.iter().copied()).unwrap();
            is_strongly_robust(&lawrence_lift_omega(t, &omega).unwrap()).unwrap()
        })
        .collect()
}

#[test]
fn complex_matches_direct_lifts() {
    let mut fixtures = cyclic_fixtures();
    fixtures.truncate(3);
    fixtures.push(a465());
    fixtures.extend(general_position_fixtures().into_iter().step_by(4).take(4));
    for t in fixtures {
        let delta = strongly_robust_complex(&t).unwrap();
        assert_eq!(delta.faces(), complex_by_direct_lifts(&t), "{t:?}");
    }
}

#[test]
fn complexes_are_downward_closed_and_bounded() {
    let mut fixtures = cyclic_fixtures();
    fixtures.extend(general_position_fixtures());
    for t in fixtures {
        let gr = graver_basis(&t).unwrap();
        let delta = complex_from_graver(&gr).unwrap();
        assert!(delta.contains(&[]), "∅ missing for {t:?}");
        for face in delta.faces() {
            for k in 0..face.len() {
                for sub in face.iter().copied().combinations(k) {
                    assert!(delta.contains(&sub));
                }
            }
        }
        let dim = delta.dimension().unwrap();
        assert!(dim < t.rank() as isize, "dim {dim} for {t:?}");
        assert!(!is_strongly_robust(&t).unwrap(), "{t:?} is strongly robust");
    }
}

#[test]
fn restriction_to_simple_subconfigurations() {
    let fixtures = vec![
        cyclic(2, &[1, 2, 3, 4, 5]),
        cyclic(2, &[1, 2, 4, 5, 7, 8]),
        cyclic(3, &[0, 1, 2, 3, 4, 6]),
        cyclic(1, &[3, 4, 5, 7]),
        t57(),
    ];
    for t in fixtures {
        let (d, s) = (t.rows(), t.cols());
        let delta = strongly_robust_complex(&t).unwrap();
        for k in d + 2..=s {
            for sigma in (1..=s).combinations(k) {
                let cols: Vec<usize> = sigma.iter().map(|i| i - 1).collect();
                let sub = t.select_columns(&cols);
                let local = strongly_robust_complex(&sub).unwrap();
                let restricted =
                    induced_subcomplex(&delta, &OmegaSet::new(s, sigma.iter().copied()).unwrap())
                        .relabel(&sigma)
                        .unwrap();
                assert!(restricted.is_subcomplex_of(&local), "{t:?} on {sigma:?}");
            }
        }
    }
}

#[test]
fn codimension_two_needs_two_mixed_bouquets() {
    let mut fixtures = vec![
        t57(),
        a465(),
        cyclic(2, &[1, 2, 3, 4]),
        cyclic(3, &[1, 2, 3, 4, 5]),
    ];
    fixtures.extend(
        general_position_fixtures()
            .into_iter()
            .filter(|t| t.cols() - t.rank() == 2),
    );
    for t in fixtures {
        let s = t.cols();
        let gr = graver_basis(&t).unwrap();
        assert!(omega_is_face(&gr, &OmegaSet::full(s)).is_ok_and(|f| !f));
        for i in 1..=s {
            let omega = OmegaSet::new(s, (1..=s).filter(|&j| j != i)).unwrap();
            assert!(!omega_is_face(&gr, &omega).unwrap(), "{t:?} ω = {omega}");
        }
        assert!(omega_is_face(&gr, &OmegaSet::empty(s)).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn witness_criterion_matches_search(n in prop::collection::vec(1i64..=6, 3)) {
        let a = mat(&[n]);
        let gr = graver_basis(&a).unwrap();
        let k = 2 * gr.max_norm().to_i64().unwrap();
        let rows = to_rows(&a);
        for g in gr.elements() {
            let by_search = indispensable_by_search(&rows, &g.to_i64s().unwrap(), k);
            prop_assert_eq!(is_indispensable(g, &gr).unwrap(), by_search, "{}", g);
            prop_assert_eq!(is_indispensable(&-g, &gr).unwrap(), by_search);
        }
    }
}

#[test]
fn witness_criterion_on_lifts() {
    let t = mat(&[[1, 2]]);
    let gr_t = graver_basis(&t).unwrap();
    for w in [vec![], vec![1], vec![2], vec![1, 2]] {
        let lifted = lawrence_lift_omega(&t, &OmegaSet::new(2, w).unwrap()).unwrap();
        if lifted.cols() > 3 {
            continue;
        }
        let gr = graver_basis(&lifted).unwrap();
        let k = 2 * gr.max_norm().to_i64().unwrap();
        for g in gr.elements() {
            assert_eq!(
                is_indispensable(g, &gr).unwrap(),
                indispensable_by_search(&to_rows(&lifted), &g.to_i64s().unwrap(), k)
            );
        }
    }
    assert_eq!(gr_t.len(), 1);
}
