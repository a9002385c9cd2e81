//! Sumset DPs against the brute-force oracle, plus the algebraic properties
//! every restricted sumset must satisfy.

use proptest::prelude::*;
use sumset_core::oracle::{brute_oracle, brute_oracle_families, Constraint};
use sumset_core::{distinct_sumset, generalized_sumset, restricted_sumset, IntegerSet, MonicPolynomial};

fn small_set(max_len: usize, max_abs: i64) -> impl Strategy<Value = IntegerSet> {
    prop::collection::btree_set(-max_abs..=max_abs, 1..=max_len)
        .prop_map(|s| IntegerSet::new(s).expect("distinct"))
}

fn monic(max_degree: usize) -> impl Strategy<Value = MonicPolynomial> {
    prop::collection::vec(-4i64..=4, 1..=max_degree).prop_map(|mut c| {
        c.push(1);
        MonicPolynomial::new(c).expect("monic")
    })
}

proptest! {
    #[test]
    fn restricted_matches_oracle(a in small_set(10, 12), n in 1usize..=4) {
        prop_assert_eq!(restricted_sumset(&a, n).unwrap(), brute_oracle(&a, n, &Constraint::Squares).unwrap());
    }

    #[test]
    fn distinct_matches_oracle(a in small_set(10, 12), n in 1usize..=4) {
        prop_assert_eq!(distinct_sumset(&a, n).unwrap(), brute_oracle(&a, n, &Constraint::Distinct).unwrap());
    }

    #[test]
    fn generalized_matches_oracle(
        families in prop::collection::vec(small_set(6, 8), 1..=3),
        p in monic(3),
    ) {
        let dp = generalized_sumset(&families, &p).unwrap();
        prop_assert_eq!(dp, brute_oracle_families(&families, &Constraint::Poly(p)).unwrap());
    }

    #[test]
    fn dilation_and_negation_equivariance(a in small_set(9, 10), n in 1usize..=4, lambda in prop_oneof![-3i64..=-1, 1i64..=3]) {
        let base = restricted_sumset(&a, n).unwrap().to_vec();
        let dilated = restricted_sumset(&a.dilate(lambda).unwrap(), n).unwrap().to_vec();
        let mut expected: Vec<i64> = base.iter().map(|x| x * lambda).collect();
        expected.sort_unstable();
        prop_assert_eq!(&dilated, &expected);
        let negated = restricted_sumset(&a.negate(), n).unwrap().to_vec();
        let mut mirrored: Vec<i64> = base.iter().map(|x| -x).collect();
        mirrored.sort_unstable();
        prop_assert_eq!(negated, mirrored);
    }

    #[test]
    fn restricted_lies_inside_distinct(a in small_set(10, 12), n in 1usize..=4) {
        prop_assert!(restricted_sumset(&a, n).unwrap().is_subset(&distinct_sumset(&a, n).unwrap()));
    }

    #[test]
    fn distinct_translation_covariance(a in small_set(9, 10), n in 1usize..=4, t in -5i64..=5) {
        let shifted = distinct_sumset(&a.translate(t).unwrap(), n).unwrap().to_vec();
        let expected: Vec<i64> = distinct_sumset(&a, n).unwrap().iter().map(|x| x + n as i64 * t).collect();
        prop_assert_eq!(shifted, expected);
    }

    #[test]
    fn polynomial_mode_specializes(a in small_set(8, 10), n in 1usize..=3) {
        let families = vec![a.clone(); n];
        prop_assert_eq!(
            generalized_sumset(&families, &MonicPolynomial::square()).unwrap(),
            restricted_sumset(&a, n).unwrap()
        );
        prop_assert_eq!(
            generalized_sumset(&families, &MonicPolynomial::identity()).unwrap(),
            distinct_sumset(&a, n).unwrap()
        );
    }

    #[test]
    fn nonnegative_sets_lose_nothing(xs in prop::collection::btree_set(0i64..=15, 1..=9), n in 1usize..=4) {
        let a = IntegerSet::new(xs).unwrap();
        prop_assert_eq!(restricted_sumset(&a, n).unwrap(), distinct_sumset(&a, n).unwrap());
    }
}

#[test]
fn class_order_does_not_matter() {
    // Odd and even polynomials group elements differently; both must agree
    // with the oracle on a set with many collisions.
    let a = IntegerSet::new([-3, -2, -1, 0, 1, 2, 3]).unwrap();
    for coeffs in [vec![0, 0, 1], vec![0, -1, 0, 1], vec![5, 0, 0, 1]] {
        let p = MonicPolynomial::new(coeffs).unwrap();
        for n in 1..=4 {
            let families = vec![a.clone(); n];
            assert_eq!(
                generalized_sumset(&families, &p).unwrap(),
                brute_oracle_families(&families, &Constraint::Poly(p.clone())).unwrap()
            );
        }
    }
}
