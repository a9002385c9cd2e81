//! Proof-step invariants: the selection rule, swap chains, the descending
//! list of sums and the separating witnesses.

use proptest::prelude::*;
use sumset_core::harness::enumerate_sets;
use sumset_core::proofkit::{descending_list, find_witness, select_u, sign_count_check, swap_chain, LemmaMode};
use sumset_core::{distinct_sumset, restricted_sumset, sn_bound, IntegerSet};

fn nonnegative_set() -> impl Strategy<Value = IntegerSet> {
    prop::collection::btree_set(0i64..=20, 1..=8).prop_map(|s| IntegerSet::new(s).unwrap())
}

proptest! {
    #[test]
    fn select_u_is_monotone(s in nonnegative_set(), bs in prop::collection::btree_set(-25i64..=-1, 2..=6)) {
        // Negatives indexed b_r < .. < b_1: a more negative b selects a larger u.
        let bs: Vec<i64> = bs.into_iter().rev().collect();
        let us: Vec<i64> = bs.iter().map(|&b| select_u(&s, b).unwrap()).collect();
        for i in 1..us.len() {
            prop_assert!(us[i] >= us[i - 1], "S = {}, b = {:?}, u = {:?}", s, bs, us);
        }
    }

    #[test]
    fn select_u_picks_an_element(s in nonnegative_set(), b in -25i64..=-1) {
        let u = select_u(&s, b).unwrap();
        prop_assert!(s.contains(u));
        if s.min().unwrap() <= -b {
            prop_assert!(u <= -b);
            prop_assert!(s.iter().all(|x| x <= u || x > -b));
        }
    }

    #[test]
    fn swap_chain_descends(s in nonnegative_set(), raw in prop::collection::btree_set(-25i64..=-1, 1..=8)) {
        let bs: Vec<i64> = raw.into_iter().rev().take(s.len()).collect();
        let state = swap_chain(&s, &bs).unwrap();
        prop_assert!(state.stage_sigmas.windows(2).all(|w| w[1] < w[0]));
        prop_assert_eq!(state.base.len(), s.len());
        prop_assert_eq!(state.removed.len(), bs.len());
    }
}

#[test]
fn descending_list_enumerates_extremal_odd_sets() {
    for n in 3..=4 {
        let k = 2 * n - 1;
        let mut extremal = 0;
        for a in enumerate_sets(k, 5, u64::MAX).unwrap() {
            let sums = restricted_sumset(&a, n).unwrap();
            if sums.len() as i64 != sn_bound(n, k).value {
                continue;
            }
            extremal += 1;
            assert!(sign_count_check(&a, n).unwrap(), "{a}");
            let oriented = if a.negatives() + 1 == n { a.clone() } else { a.negate() };
            let list = descending_list(&oriented, n).unwrap();
            assert_eq!(list.len(), n * (n - 1) / 2 + 1, "{oriented}");
            let mut sorted = list.clone();
            sorted.reverse();
            assert_eq!(sorted, restricted_sumset(&oriented, n).unwrap().to_vec());
        }
        assert!(extremal > 0);
    }
}

#[test]
fn witnesses_avoid_the_nonnegative_part() {
    for n in 3..=5usize {
        for b in 1..=3i64 {
            for d in 1..=3i64 {
                let top = b + (n as i64 - 1) * d;
                for c in top + 1..=top + 3 * d + 3 {
                    let mut xs = vec![c, d, -d];
                    for j in 1..n as i64 {
                        xs.extend([b + j * d, -(b + j * d)]);
                    }
                    let a = IntegerSet::new(xs).unwrap();
                    let w = find_witness(&a, c, LemmaMode::LemmaIi, n).unwrap();
                    assert!(w.lower < w.w && w.w < w.upper);
                    let nonneg = IntegerSet::new(a.iter().filter(|&x| x >= 0)).unwrap();
                    assert!(!distinct_sumset(&nonneg, n).unwrap().contains(w.w), "{a}: w = {}", w.w);
                }
            }
        }
    }
}
