mod common;

use fusionkit::enumerate::{canonical_form, enumerate, SearchSpec};
use fusionkit::library::{a_n, group_ring, ising, rep_s3};
use fusionkit::{FiniteGroup, FusionRing};
use proptest::prelude::*;

use common::shuffle;

#[test]
fn rank_two_is_the_a_n_family() {
    for b in 1..=6 {
        let rings = enumerate(&SearchSpec::new(2, b)).unwrap();
        assert_eq!(rings.len(), b as usize + 1);
        for (n, r) in rings.iter().enumerate() {
            assert!(r.is_isomorphic(&a_n(n as u32)), "B={b} n={n}");
        }
        let mut spec = SearchSpec::new(2, b);
        spec.require_reciprocity = true;
        assert_eq!(enumerate(&spec).unwrap().len(), rings.len());
    }
}

#[test]
fn rank_one_is_the_unit() {
    let rings = enumerate(&SearchSpec::new(1, 3)).unwrap();
    assert_eq!(rings.len(), 1);
    assert!(rings[0].same_table(&FusionRing::unit_ring()));
}

#[test]
fn rank_three_self_dual_multiplicity_free() {
    let mut spec = SearchSpec::new(3, 1);
    spec.dual = Some(vec![0, 1, 2]);
    spec.commutative_only = true;
    let rings = enumerate(&spec).unwrap();
    assert!(rings.iter().any(|r| r.is_isomorphic(&rep_s3())));
    assert!(rings.iter().any(|r| r.is_isomorphic(&ising())));
    let z3 = group_ring(&FiniteGroup::cyclic(3));
    assert!(!rings.iter().any(|r| r.is_isomorphic(&z3)));
    let all = enumerate(&SearchSpec::new(3, 1)).unwrap();
    assert!(all.iter().any(|r| r.is_isomorphic(&z3)));
}

/// Independent count: classes of rank-3 rings with entries at most 1,
/// by brute force over all tensors and isomorphism tests.
#[test]
fn rank_three_matches_brute_force() {
    let free: Vec<(usize, usize, usize)> = (1..3)
        .flat_map(|i| (1..3).flat_map(move |j| (1..3).map(move |k| (i, j, k))))
        .collect();
    let mut classes: Vec<FusionRing> = Vec::new();
    for dual in [vec![0, 1, 2], vec![0, 2, 1]] {
        for mask in 0u32..(1 << free.len()) {
            let d = dual.clone();
            let ring = FusionRing::from_fn(vec!["1".into(), "a".into(), "b".into()], dual.clone(), |i, j, k| {
                if i == 0 {
                    i64::from(j == k)
                } else if j == 0 {
                    i64::from(i == k)
                } else if k == 0 {
                    i64::from(i == d[j])
                } else {
                    let p = free.iter().position(|&t| t == (i, j, k)).unwrap();
                    i64::from(mask >> p & 1 == 1)
                }
            })
            .unwrap();
            if ring.verify_axioms().is_valid() && !classes.iter().any(|c| c.is_isomorphic(&ring)) {
                classes.push(ring);
            }
        }
    }
    let rings = enumerate(&SearchSpec::new(3, 1)).unwrap();
    assert_eq!(rings.len(), classes.len());
    for c in &classes {
        assert!(rings.iter().any(|r| r.is_isomorphic(c)));
    }
}

#[test]
fn output_is_canonical_and_valid() {
    for (r, b) in [(3, 2), (4, 1)] {
        let rings = enumerate(&SearchSpec::new(r, b)).unwrap();
        for (i, x) in rings.iter().enumerate() {
            assert!(x.verify_axioms().is_valid());
            assert!(canonical_form(x).0.same_table(x));
            assert!(rings[..i].iter().all(|y| !y.is_isomorphic(x)));
        }
    }
}

#[test]
fn canonical_form_undoes_relabeling() {
    let (c, _) = canonical_form(&ising());
    let moved = ising().permuted(&[0, 2, 1]).unwrap();
    assert!(canonical_form(&moved).0.same_table(&c));
    let swapped = rep_s3().permuted(&[0, 2, 1]).unwrap();
    assert!(canonical_form(&swapped).0.same_table(&canonical_form(&rep_s3()).0));
    let (c, perm) = canonical_form(&swapped);
    assert!(swapped.permuted(&perm).unwrap().same_table(&c));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn canonical_form_is_idempotent(idx in 0usize..64, seed in any::<u64>()) {
        let rings = common::small_builtins(6);
        let ring = &rings[idx % rings.len()].1;
        let moved = ring.permuted(&shuffle(ring.rank(), seed)).unwrap();
        let (c, _) = canonical_form(&moved);
        prop_assert!(canonical_form(&c).0.same_table(&c));
        prop_assert!(c.same_table(&canonical_form(ring).0));
    }
}
