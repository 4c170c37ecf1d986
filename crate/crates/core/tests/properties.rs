use proptest::prelude::*;

use fusec_core::cohomology::bar_cohomology;
use fusec_core::corpus;
use fusec_core::fusion::fusion_of_group;
use fusec_core::group::{prime_divisors, FiniteGroup};
use fusec_core::lab::{check_gt_center, Verdict};
use fusec_core::models::{euler_characteristic, robinson_model, verify_model, Flavor};

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn perm_group(max_degree: usize) -> impl Strategy<Value = FiniteGroup> {
    (2..=max_degree).prop_flat_map(|n| {
        prop::collection::vec(permutation(n), 1..=2)
            .prop_map(move |gens| FiniteGroup::from_permutation_generators(n, &gens, 200).unwrap())
    })
}

/// The same group with element `k ≥ 1` renamed `sigma[k − 1]`.
fn relabel(g: &FiniteGroup, sigma: &[usize]) -> FiniteGroup {
    let name = |k: usize| if k == 0 { 0 } else { sigma[k - 1] };
    let mut rows = vec![vec![0; g.order()]; g.order()];
    for a in g.elements() {
        for b in g.elements() {
            rows[name(a)][name(b)] = name(g.mul(a, b));
        }
    }
    FiniteGroup::from_cayley(&rows).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn permutation_groups_through_the_pipeline(g in perm_group(5)) {
        for p in prime_divisors(g.order()) {
            let f = fusion_of_group(&g, p).unwrap();
            prop_assert!(f.check_axioms().is_ok());
            prop_assert!(f.is_saturated());
            let m = robinson_model(&g, p, Flavor::CentricRadical).unwrap();
            prop_assert!(verify_model(&m, &f).unwrap().equal);
            prop_assert!(euler_characteristic(&m).integral);
            let gt = check_gt_center(&f).unwrap();
            prop_assert_ne!(gt.verdict, Verdict::Fail);
        }
    }

    #[test]
    fn cohomology_ignores_element_names(
        (g, sigma) in (2usize..=6).prop_flat_map(|k| {
            let g = corpus::small_groups(8).into_iter().map(|ng| ng.group).filter(|g| g.order() == k).next();
            let g = g.unwrap_or_else(|| corpus::cyclic(k));
            let n = g.order();
            (Just(g), Just((1..n).collect::<Vec<_>>()).prop_shuffle())
        })
    ) {
        let h = relabel(&g, &sigma);
        for p in prime_divisors(g.order()) {
            for n in 0..=2 {
                prop_assert_eq!(
                    bar_cohomology(&g, p, n).unwrap().dimension(),
                    bar_cohomology(&h, p, n).unwrap().dimension()
                );
            }
        }
    }

    #[test]
    fn amalgam_words_form_a_group(
        words in prop::collection::vec(prop::collection::vec((0usize..4, 0usize..64), 0..6), 3)
    ) {
        let m = robinson_model(&corpus::symmetric(4), 2, Flavor::Centric).unwrap();
        let fix = |w: &Vec<(usize, usize)>| -> Vec<(usize, usize)> {
            w.iter()
                .map(|&(v, x)| {
                    let v = v % m.vertices().len();
                    (v, x % m.vertices()[v].order())
                })
                .collect()
        };
        let u = m.normal_form(&fix(&words[0])).unwrap();
        let v = m.normal_form(&fix(&words[1])).unwrap();
        let w = m.normal_form(&fix(&words[2])).unwrap();
        prop_assert_eq!(m.multiply(&m.multiply(&u, &v), &w), m.multiply(&u, &m.multiply(&v, &w)));
        prop_assert!(m.multiply(&u, &m.inverse(&u)).is_identity());
        prop_assert_eq!(m.normal_form(&m.letters(&u)).unwrap(), u);
    }
}
