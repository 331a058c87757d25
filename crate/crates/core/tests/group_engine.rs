use fusionkit::group::{
    coboundary, cohomology, count_fiber_functors, enumerate_module_categories, is_coboundary, is_cocycle,
    is_nondegenerate, standard_three_cocycle, twisted_group_algebra_irreps, Cochain, FiniteGroup,
};
use proptest::prelude::*;

fn trivial_omega(g: &FiniteGroup) -> Cochain {
    Cochain::zero(g.order(), 3, g.order() as u64)
}

/// Independent count of subgroups of a cyclic group: one per divisor.
fn divisor_count(n: usize) -> usize {
    (1..=n).filter(|d| n.is_multiple_of(*d)).count()
}

#[test]
fn fiber_functors_d8_and_q8() {
    let d8 = FiniteGroup::parse("d8").unwrap();
    let q8 = FiniteGroup::parse("q8").unwrap();
    let fd = count_fiber_functors(&d8).unwrap();
    assert_eq!(fd.count, 3);
    assert_eq!(count_fiber_functors(&q8).unwrap().count, 1);
    for w in &fd.witnesses {
        let r = (w.subgroup.len() as f64).sqrt() as usize;
        assert_eq!(r * r, w.subgroup.len());
    }
}

#[test]
fn module_category_counts() {
    for (spec, want) in [("z4", 3), ("z9", 3), ("z2xz2", 6), ("z3xz3", 8), ("1", 1)] {
        let g = FiniteGroup::parse(spec).unwrap();
        let cats = enumerate_module_categories(&g, &trivial_omega(&g)).unwrap();
        assert_eq!(cats.len(), want, "{spec}");
    }
}

#[test]
fn module_categories_with_a_twist() {
    // Over Z4 with the generator of H^3, only subgroups on which omega
    // restricts trivially survive; the restriction to Z2 of omega_1 is
    // nontrivial, so only the trivial subgroup remains.
    let g = FiniteGroup::cyclic(4);
    let cats = enumerate_module_categories(&g, &standard_three_cocycle(4, 1)).unwrap();
    assert_eq!(cats.iter().map(|c| c.subgroup.len()).collect::<Vec<_>>(), vec![1]);
    // omega_2 restricts trivially to Z2.
    let cats = enumerate_module_categories(&g, &standard_three_cocycle(4, 2)).unwrap();
    assert_eq!(cats.iter().map(|c| c.subgroup.len()).collect::<Vec<_>>(), vec![1, 2]);
}

#[test]
fn nonabelian_twisted_module_categories() {
    let s3 = FiniteGroup::symmetric(3);
    let h3 = cohomology(&s3, 3, 6).unwrap();
    assert_eq!(h3.factors, vec![6]);
    let cats = enumerate_module_categories(&s3, &h3.representatives[0]).unwrap();
    // A generator restricts nontrivially to every nontrivial cyclic subgroup.
    assert_eq!(cats.len(), 1);
    let plain = enumerate_module_categories(&s3, &trivial_omega(&s3)).unwrap();
    // Subgroup classes 1, Z2, Z3, S3, all with trivial H^2.
    assert_eq!(plain.len(), 4);
}

#[test]
fn cohomology_table() {
    for n in 1..=6usize {
        let h3 = cohomology(&FiniteGroup::cyclic(n), 3, n as u64).unwrap();
        let want: Vec<u64> = if n == 1 { vec![] } else { vec![n as u64] };
        assert_eq!(h3.factors, want, "H^3(Z{n})");
    }
    for n in [2usize, 3, 4, 5, 9] {
        assert!(cohomology(&FiniteGroup::cyclic(n), 2, n as u64).unwrap().is_trivial());
    }
    for p in [2usize, 3] {
        let g = FiniteGroup::direct_product(&FiniteGroup::cyclic(p), &FiniteGroup::cyclic(p));
        assert_eq!(cohomology(&g, 2, (p * p) as u64).unwrap().factors, vec![p as u64]);
    }
    // Schur multipliers of D8, Q8, S3.
    let m = |s: &str| cohomology(&FiniteGroup::parse(s).unwrap(), 2, 8).map(|h| h.factors);
    assert_eq!(m("d8").unwrap(), vec![2]);
    assert_eq!(m("q8").unwrap(), Vec::<u64>::new());
    assert_eq!(
        cohomology(&FiniteGroup::symmetric(3), 2, 6).unwrap().factors,
        Vec::<u64>::new()
    );
    // H^3(Z2 x Z2, C^x) = Z2^3.
    let k = FiniteGroup::parse("z2xz2").unwrap();
    assert_eq!(cohomology(&k, 3, 4).unwrap().factors, vec![2, 2, 2]);
}

#[test]
fn representatives_are_nontrivial_cocycles() {
    for spec in ["z2", "z4", "z6", "z2xz2", "s3", "d8"] {
        let g = FiniteGroup::parse(spec).unwrap();
        let n = g.order() as u64;
        for degree in [2, 3] {
            let h = cohomology(&g, degree, n).unwrap();
            for (rep, &f) in h.representatives.iter().zip(&h.factors) {
                assert!(is_cocycle(&g, rep).unwrap());
                assert!(is_coboundary(&g, rep).unwrap().is_none(), "{spec} degree {degree}");
                // The class has order exactly f.
                let coords = h.class_coordinates(&g, &rep.mul_scalar(f)).ok();
                if let Some(c) = coords {
                    assert!(c.iter().all(|&x| x == 0));
                }
            }
        }
    }
}

#[test]
fn standard_cocycles_generate_h3_of_cyclic_groups() {
    for n in 2..=6usize {
        let g = FiniteGroup::cyclic(n);
        let h = cohomology(&g, 3, n as u64).unwrap();
        let w = standard_three_cocycle(n, 1);
        assert!(is_cocycle(&g, &w).unwrap());
        let c = h.class_coordinates(&g, &w).unwrap();
        // The coordinate vector generates Z_n: order of the class is n.
        let order = (1..=n as u64)
            .find(|&k| {
                h.class_coordinates(&g, &w.mul_scalar(k))
                    .unwrap()
                    .iter()
                    .all(|&x| x == 0)
            })
            .unwrap();
        assert_eq!(order, n as u64, "{c:?}");
    }
}

#[test]
fn twisted_algebras() {
    let s3 = FiniteGroup::symmetric(3);
    assert_eq!(
        twisted_group_algebra_irreps(&s3, &Cochain::zero(6, 2, 6)).unwrap(),
        vec![1, 1, 2]
    );
    let z4 = FiniteGroup::cyclic(4);
    let psi = coboundary(&z4, &Cochain::from_fn(&z4, 1, 4, |t| (t[0] * t[0]) as i64)).unwrap();
    assert_eq!(twisted_group_algebra_irreps(&z4, &psi).unwrap(), vec![1, 1, 1, 1]);
    assert!(!is_nondegenerate(&z4, &psi).unwrap());
    let d8 = FiniteGroup::parse("d8").unwrap();
    let h = cohomology(&d8, 2, 8).unwrap();
    // The nontrivial class of D8 gives two 2-dimensional projective irreps.
    assert_eq!(
        twisted_group_algebra_irreps(&d8, &h.representatives[0]).unwrap(),
        vec![2, 2]
    );
    let z4xz4 = FiniteGroup::parse("z4xz4").unwrap();
    let h = cohomology(&z4xz4, 2, 16).unwrap();
    assert_eq!(h.factors, vec![4]);
    assert!(is_nondegenerate(&z4xz4, &h.representatives[0]).unwrap());
    assert!(!is_nondegenerate(&z4xz4, &h.representatives[0].mul_scalar(2)).unwrap());
}

#[test]
fn non_cocycles_are_rejected() {
    let z2 = FiniteGroup::cyclic(2);
    let bad = Cochain::from_fn(&z2, 2, 2, |t| (t[0] == 1 && t[1] == 0) as i64);
    assert!(twisted_group_algebra_irreps(&z2, &bad).is_err());
}

fn random_perm_fixing_zero(n: usize, seed: u64) -> Vec<usize> {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rest: Vec<usize> = (1..n).collect();
    rest.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
    std::iter::once(0).chain(rest).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn d_squared_vanishes(seed in 0u64..1000, degree in 1usize..3, which in 0usize..4) {
        let g = FiniteGroup::parse(["z4", "s3", "z2xz2", "q8"][which]).unwrap();
        let n = g.order() as u64;
        let c = Cochain::from_fn(&g, degree, n, |t| {
            t.iter().fold(seed as i64, |a, &x| (a * 31 + x as i64 * 7 + 3) % 1009)
        });
        let dc = coboundary(&g, &c).unwrap();
        prop_assert!(coboundary(&g, &dc).unwrap().is_zero());
        prop_assert!(is_coboundary(&g, &dc).unwrap().is_some());
    }

    #[test]
    fn cohomology_is_relabeling_invariant(seed in 0u64..500, which in 0usize..4, degree in 2usize..4) {
        let g = FiniteGroup::parse(["z4", "s3", "z2xz2", "d8"][which]).unwrap();
        let perm = random_perm_fixing_zero(g.order(), seed);
        let h = g.relabeled(&perm).unwrap();
        let n = g.order() as u64;
        prop_assert_eq!(cohomology(&g, degree, n).unwrap().factors, cohomology(&h, degree, n).unwrap().factors);
    }

    #[test]
    fn twisted_dimensions_square_sum(which in 0usize..5, class in 0u64..4) {
        let g = FiniteGroup::parse(["z2xz2", "d8", "z3xz3", "q8", "z2xz4"][which]).unwrap();
        let n = g.order();
        let h = cohomology(&g, 2, n as u64).unwrap();
        let classes = h.all_classes();
        let psi = h.cocycle_for(&classes[(class as usize) % classes.len()]).unwrap();
        let dims = twisted_group_algebra_irreps(&g, &psi).unwrap();
        prop_assert_eq!(dims.iter().map(|d| d * d).sum::<usize>(), n);
        if is_nondegenerate(&g, &psi).unwrap() {
            let r = (n as f64).sqrt() as usize;
            prop_assert_eq!(r * r, n);
        }
    }
}

#[test]
fn malformed_group_names() {
    for bad in ["", "x7", "z2x", "z0", "d3", "q4", "s6", "é2", "zz"] {
        assert!(FiniteGroup::parse(bad).is_err(), "{bad}");
    }
    assert_eq!(FiniteGroup::parse("Z2xZ3").unwrap().order(), 6);
}

#[test]
fn cyclic_subgroup_lattice() {
    for n in 1..=16 {
        assert_eq!(FiniteGroup::cyclic(n).subgroups().len(), divisor_count(n));
    }
}
