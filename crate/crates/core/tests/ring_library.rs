#![allow(clippy::needless_range_loop)]

mod common;

use fusionkit::enumerate::{enumerate, SearchSpec};
use fusionkit::library::{a_n, b_n, builtin, group_ring, ising, rep_s3, sl2_verlinde, tambara_yamagami, yang_lee};
use fusionkit::ring::{product_ring, Axiom, BasisVector};
use fusionkit::{FiniteGroup, FusionRing};
use num_bigint::BigInt;
use proptest::prelude::*;

use common::small_builtins;

fn tensor(r: &FusionRing) -> Vec<Vec<Vec<BigInt>>> {
    r.tensor()
}

fn with_entry(r: &FusionRing, (i, j, k): (usize, usize, usize), v: i64) -> FusionRing {
    let mut t = tensor(r);
    t[i][j][k] = v.into();
    FusionRing::new(r.labels().to_vec(), r.duals().to_vec(), t).unwrap()
}

#[test]
fn yang_lee_left_multiplication() {
    let m = yang_lee().left_mult_matrix(1).unwrap();
    let want: Vec<Vec<BigInt>> = vec![vec![0.into(), 1.into()], vec![1.into(), 1.into()]];
    assert_eq!(m, want);
    assert!(yang_lee().left_mult_matrix(2).is_err());
}

#[test]
fn group_ring_translation_matrices() {
    let g = FiniteGroup::symmetric(3);
    let ring = group_ring(&g);
    for a in 0..6 {
        let m = ring.left_mult_matrix(a).unwrap();
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(m[x][y], BigInt::from(i64::from(g.mul(a, x) == y)));
            }
        }
    }
    assert!(!ring.is_commutative());
    assert!(ring.verify_axioms().is_valid());
}

#[test]
fn products_from_the_definitions() {
    let x = ising().index_of("X").unwrap();
    let g = ising().index_of("g").unwrap();
    let xx = ising()
        .multiply(&ising().basis_vector(x), &ising().basis_vector(x))
        .unwrap();
    assert_eq!(xx.support(), vec![0, g]);
    let v = sl2_verlinde(2);
    assert_eq!(v.product(1, 1).coeffs(), BasisVector::from_i64(&[1, 0, 1]).coeffs());
    let vs = rep_s3();
    let big = vs.index_of("V").unwrap();
    assert_eq!(
        vs.product(big, big).coeffs(),
        BasisVector::from_i64(&[1, 1, 1]).coeffs()
    );
}

#[test]
fn single_entry_corruptions_are_reported() {
    let a2 = a_n(2);
    let rep = with_entry(&a2, (1, 1, 0), 0).verify_axioms();
    assert!(rep.contains(Axiom::Duality, &[1, 1]));
    let rep = with_entry(&a2, (0, 1, 1), 2).verify_axioms();
    assert!(rep.violates(Axiom::Unit));
    let rep = with_entry(&a2, (1, 1, 1), -1).verify_axioms();
    assert!(rep.violates(Axiom::Nonnegativity));
    // chi V = V + chi in Rep S3.
    let rep = with_entry(&rep_s3(), (1, 2, 1), 1).verify_axioms();
    assert!(rep.violates(Axiom::Associativity));
    assert!(rep.violates(Axiom::Antiautomorphism));
    let z3 = group_ring(&FiniteGroup::cyclic(3));
    let bad = FusionRing::new(z3.labels().to_vec(), vec![0, 1, 2], tensor(&z3)).unwrap();
    assert!(bad.verify_axioms().violates(Axiom::Duality));
    let bad = FusionRing::new(z3.labels().to_vec(), vec![1, 2, 0], tensor(&z3)).unwrap();
    assert!(bad.verify_axioms().violates(Axiom::DualInvolution));
    assert!(FusionRing::new(vec!["1".into()], vec![0], vec![vec![vec![1.into(), 0.into()]]]).is_err());
}

#[test]
fn reciprocity_holds_on_every_enumerated_ring() {
    for (r, b) in [(3, 2), (4, 1)] {
        for ring in enumerate(&SearchSpec::new(r, b)).unwrap() {
            assert!(ring.check_reciprocity().holds);
        }
    }
    // A tensor violating it, necessarily non-associative.
    let bad = with_entry(&rep_s3(), (1, 2, 1), 1);
    let rec = bad.check_reciprocity();
    assert!(!rec.holds && !rec.witnesses.is_empty());
}

#[test]
fn invertibles() {
    let klein = FiniteGroup::parse("z2xz2").unwrap();
    let inv = tambara_yamagami(&klein).invertibles().unwrap();
    assert_eq!(inv.elements, vec![0, 1, 2, 3]);
    for a in 0..4 {
        assert_eq!(inv.table[a][a], 0);
        for b in 0..4 {
            assert_eq!(inv.elements[inv.table[a][b]], klein.mul(a, b));
        }
    }
    assert_eq!(yang_lee().invertibles().unwrap().elements, vec![0]);
    let s3 = group_ring(&FiniteGroup::symmetric(3));
    assert_eq!(s3.invertibles().unwrap().elements.len(), 6);
}

#[test]
fn product_rings() {
    let z2 = group_ring(&FiniteGroup::cyclic(2));
    let klein = group_ring(&FiniteGroup::parse("z2xz2").unwrap());
    assert!(product_ring(&z2, &z2).is_isomorphic(&klein));
    assert!(product_ring(&FusionRing::unit_ring(), &yang_lee()).is_isomorphic(&yang_lee()));
    let ii = product_ring(&ising(), &ising());
    assert_eq!(ii.rank(), 9);
    assert!(ii.verify_axioms().is_valid());
    let small = small_builtins(4);
    for (_, a) in &small {
        for (_, b) in &small {
            assert!(product_ring(a, b).verify_axioms().is_valid());
        }
    }
}

#[test]
fn subrings() {
    assert_eq!(ising().find_subrings(), vec![vec![0], vec![0, 1], vec![0, 1, 2]]);
    // Subgroups of Z4, one per divisor of 4.
    assert_eq!(group_ring(&FiniteGroup::cyclic(4)).find_subrings().len(), 3);
    assert_eq!(yang_lee().adjoint_subring(), vec![0, 1]);
    let s3 = FiniteGroup::symmetric(3);
    assert_eq!(group_ring(&s3).find_subrings().len(), s3.subgroups().len());
}

#[test]
fn library_relations() {
    assert!(ising().is_isomorphic(&sl2_verlinde(2)));
    assert!(yang_lee().same_table(&a_n(1)));
    assert!(a_n(0).same_table(&group_ring(&FiniteGroup::cyclic(2))));
    assert!(sl2_verlinde(0).same_table(&FusionRing::unit_ring()));
    assert!(tambara_yamagami(&FiniteGroup::cyclic(2)).is_isomorphic(&ising()));
    assert!(group_ring(&FiniteGroup::trivial()).same_table(&FusionRing::unit_ring()));
    // The even part of level 3 is Yang-Lee.
    assert!(sl2_verlinde(3).subring(&[0, 2]).unwrap().is_isomorphic(&yang_lee()));
    let ty3 = tambara_yamagami(&FiniteGroup::cyclic(3));
    assert_eq!(ty3.rank(), 4);
    assert!((0..3).all(|g| ty3.dual(g) == FiniteGroup::cyclic(3).inv(g)) && ty3.dual(3) == 3);
    let b1 = b_n(1).unwrap();
    assert_eq!((b1.rank(), b1.n_i64(1, 1, 0), b1.n_i64(1, 1, 1)), (2, 1, 0));
    assert_eq!(builtin("b_2").unwrap().rank(), 3);
}

#[test]
fn constructors_pass_axioms() {
    for l in 0..=12 {
        let r = sl2_verlinde(l);
        assert!(r.verify_axioms().is_valid() && r.check_reciprocity().holds && r.is_commutative());
        assert!(r
            .tensor()
            .iter()
            .flatten()
            .flatten()
            .all(|x| *x == 0.into() || *x == 1.into()));
    }
    for n in 1..=8 {
        let r = b_n(n).unwrap();
        assert!(r.verify_axioms().is_valid() && r.check_reciprocity().holds, "b_{n}");
    }
    for n in 0..=5 {
        assert!(a_n(n).verify_axioms().is_valid());
    }
    for spec in ["1", "z2", "z3", "z2xz2", "s3", "d8", "q8"] {
        let r = tambara_yamagami(&FiniteGroup::parse(spec).unwrap());
        assert!(r.verify_axioms().is_valid() && r.check_reciprocity().holds, "{spec}");
    }
}

#[test]
fn dual_matrix_is_the_transpose() {
    for (name, ring) in small_builtins(9) {
        for i in 0..ring.rank() {
            let a = ring.left_mult_matrix(i).unwrap();
            let b = ring.left_mult_matrix(ring.dual(i)).unwrap();
            for x in 0..ring.rank() {
                for y in 0..ring.rank() {
                    assert_eq!(a[x][y], b[y][x], "{name}");
                }
            }
        }
    }
}

fn vector(r: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0i64..4, r)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn multiplication_is_associative_and_unital(
        idx in 0usize..64,
        a in vector(8), b in vector(8), c in vector(8),
    ) {
        let rings = small_builtins(8);
        let ring = &rings[idx % rings.len()].1;
        let r = ring.rank();
        let (a, b, c) = (
            BasisVector::from_i64(&a[..r]),
            BasisVector::from_i64(&b[..r]),
            BasisVector::from_i64(&c[..r]),
        );
        let left = ring.multiply(&ring.multiply(&a, &b).unwrap(), &c).unwrap();
        let right = ring.multiply(&a, &ring.multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left.coeffs(), right.coeffs());
        let one = ring.basis_vector(0);
        prop_assert_eq!(ring.multiply(&one, &a).unwrap(), a.clone());
        prop_assert_eq!(ring.multiply(&a, &one).unwrap(), a);
    }
}
