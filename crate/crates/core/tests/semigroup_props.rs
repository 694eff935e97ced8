//! Membership, normality and saturation on random planar semigroups against
//! an enumeration of bounded sums of generators.

use std::collections::BTreeSet;

use proptest::prelude::*;

use semigroup_cm::semigroup::{is_normal, is_positive, membership, saturation, AffineSemigroup};

const R: i64 = 6;

/// Every sum of generators with coordinate sum at most `limit`. Generators
/// have nonnegative entries and are nonzero, so this is finite.
fn sums(gens: &[Vec<i64>], limit: i64) -> BTreeSet<[i64; 2]> {
    let mut seen = BTreeSet::from([[0, 0]]);
    let mut frontier = vec![[0, 0]];
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q = [p[0] + g[0], p[1] + g[1]];
            if q[0] + q[1] <= limit && seen.insert(q) {
                frontier.push(q);
            }
        }
    }
    seen
}

fn generators() -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec([0i64..=4, 0i64..=4], 1..=3)
        .prop_filter("nonzero", |gs| gs.iter().all(|g| g != &[0, 0]))
        .prop_map(|gs| gs.into_iter().map(|g| g.to_vec()).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn membership_matches_enumeration(gens in generators()) {
        let s = AffineSemigroup::new(2, gens.clone()).unwrap();
        let reach = sums(&gens, 2 * R);
        for x in -R..=R {
            for y in -R..=R {
                let v = membership(&s, &[x, y]).unwrap();
                prop_assert_eq!(v.value, reach.contains(&[x, y]), "{:?} at {:?}", gens, [x, y]);
            }
        }
        prop_assert!(is_positive(&s).unwrap().value);
    }

    #[test]
    fn saturation_contains_and_is_normal(gens in generators()) {
        let s = AffineSemigroup::new(2, gens.clone()).unwrap();
        let sat = saturation(&gens, 2).unwrap();
        prop_assert!(is_normal(&sat).unwrap().value);
        for p in sums(&gens, R) {
            prop_assert!(membership(&sat, &p).unwrap().value);
        }
        // a semigroup is normal exactly when it equals its saturation
        let normal = is_normal(&s).unwrap();
        let equal = (-R..=R).all(|x| (-R..=R).all(|y| {
            membership(&s, &[x, y]).unwrap().value == membership(&sat, &[x, y]).unwrap().value
        }));
        if normal.value {
            prop_assert!(equal, "{:?}", gens);
        } else {
            let w = normal.witness.unwrap();
            prop_assert!(!membership(&s, &w).unwrap().value);
            prop_assert!(membership(&sat, &w).unwrap().value);
        }
    }
}

#[test]
fn numerical_semigroup_is_not_normal() {
    let s = AffineSemigroup::new(1, vec![vec![2], vec![3]]).unwrap();
    let v = is_normal(&s).unwrap();
    assert!(!v.value);
    assert_eq!(v.witness, Some(vec![1]));
}
