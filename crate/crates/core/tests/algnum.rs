use std::cmp::Ordering;

use fusionkit::algebraic::parse_algebraic;
use fusionkit::cyclotomic::CyclotomicElement;
use fusionkit::galois::{galois_abelian, normal_root_expressions, GaloisVerdict};
use fusionkit::poly::{Sturm, ZPoly};
use fusionkit::AlgebraicNumber;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn p(c: &[i64]) -> ZPoly {
    ZPoly::from_i64(c)
}

fn phi() -> AlgebraicNumber {
    AlgebraicNumber::largest_real_root(&p(&[-1, -1, 1])).unwrap()
}

fn sqrt(n: i64) -> AlgebraicNumber {
    AlgebraicNumber::from_integer(n).sqrt().unwrap()
}

fn rat(n: i64, d: i64) -> AlgebraicNumber {
    AlgebraicNumber::from_rational(BigRational::new(n.into(), d.into()))
}

/// The stored interval still isolates exactly one root of the minpoly.
fn isolates(a: &AlgebraicNumber) -> bool {
    let (lo, hi) = a.interval();
    Sturm::new(a.minpoly()).count_closed(lo, hi) == 1
}

#[test]
fn golden_ratio_identities() {
    let f = phi();
    let g = AlgebraicNumber::one().sub(&f);
    assert_eq!(f.add(&g).to_integer().unwrap(), BigInt::from(1));
    let sq = f.mul(&f);
    assert_eq!(sq.minpoly(), &p(&[1, -3, 1]));
    assert!((sq.to_f64() - (3.0 + 5f64.sqrt()) / 2.0).abs() < 1e-12);
    assert_eq!(sq.cmp_exact(&f.add(&AlgebraicNumber::one())), Ordering::Equal);
    assert_eq!(sqrt(2).mul(&sqrt(2)).to_integer().unwrap(), BigInt::from(2));
    assert!(f.div(&AlgebraicNumber::zero()).is_err());
}

#[test]
fn algebraic_integers() {
    assert!(phi().is_algebraic_integer());
    assert!(!rat(1, 2).is_algebraic_integer());
    let h = sqrt(2).div(&AlgebraicNumber::from_integer(2)).unwrap();
    assert_eq!(h.minpoly(), &p(&[-1, 0, 2]));
    assert!(!h.is_algebraic_integer());
}

#[test]
fn dominance() {
    assert!(phi().conjugate_dominance());
    assert!(!sqrt(3).neg().conjugate_dominance());
    assert!(AlgebraicNumber::largest_real_root(&p(&[-1, -4, 0, 1]))
        .unwrap()
        .conjugate_dominance());
}

#[test]
fn galois_predicate() {
    assert_eq!(galois_abelian(&p(&[-1, -1, 1])), GaloisVerdict::Abelian);
    assert_eq!(galois_abelian(&p(&[-1, -3, 0, 1])), GaloisVerdict::Abelian);
    // x^3 - 2 has discriminant -108.
    assert_eq!(galois_abelian(&p(&[-2, 0, 0, 1])), GaloisVerdict::NonAbelian);
    // Degree 7 is beyond the decided range.
    assert_eq!(galois_abelian(&p(&[-2, 0, 0, 0, 0, 0, 0, 1])), GaloisVerdict::Undecided);
    // The cyclotomic polynomial of order 7 splits in its own root field.
    let c7 = p(&[1, 1, 1, 1, 1, 1, 1]);
    assert_eq!(galois_abelian(&c7), GaloisVerdict::Abelian);
    assert_eq!(normal_root_expressions(&c7).unwrap().len(), 6);
}

#[test]
fn quantization() {
    assert_eq!(sqrt(2).two_cos_quantization(), Some(4));
    assert_eq!(phi().two_cos_quantization(), Some(5));
    assert_eq!(rat(19, 10).two_cos_quantization(), None);
    // 2cos(pi/7) from the oracle.
    let c = AlgebraicNumber::largest_real_root(&p(&[1, -2, -1, 1])).unwrap();
    assert!((c.to_f64() - 2.0 * (std::f64::consts::PI / 7.0).cos()).abs() < 1e-12);
    assert_eq!(c.two_cos_quantization(), Some(7));
}

#[test]
fn string_forms() {
    assert_eq!(phi().to_string(), "root of x^2-x-1 in (1.6, 1.7) ≈ 1.6180339887");
    assert_eq!(
        parse_algebraic(&phi().to_string()).unwrap().cmp_exact(&phi()),
        Ordering::Equal
    );
    assert_eq!(parse_algebraic("sqrt(2)/2").unwrap().minpoly(), &p(&[-1, 0, 2]));
    assert_eq!(phi().radical_string().unwrap(), "(1+sqrt(5))/2");
}

#[test]
fn cyclotomic_arithmetic() {
    let i = CyclotomicElement::zeta(4, 1);
    assert_eq!(i.mul(&i).to_rational().unwrap(), BigRational::from_integer((-1).into()));
    let z6 = CyclotomicElement::zeta(6, 1);
    assert_eq!(z6.pow(2), z6.sub(&CyclotomicElement::one(6)));
    for m in [3u64, 5, 8, 12] {
        assert_eq!(
            CyclotomicElement::zeta(m, 1).conj(),
            CyclotomicElement::zeta(m, m as i64 - 1)
        );
    }
}

fn sample() -> impl Strategy<Value = AlgebraicNumber> {
    prop_oneof![
        (2i64..30).prop_map(sqrt),
        (1i64..6).prop_map(|n| AlgebraicNumber::largest_real_root(&p(&[-1, -n, 1])).unwrap()),
        (1i64..4).prop_map(|n| AlgebraicNumber::largest_real_root(&p(&[-1, -n, 0, 1])).unwrap()),
        (-9i64..10, 1i64..7).prop_map(|(a, b)| rat(a, b)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn division_undoes_multiplication(a in sample(), b in sample()) {
        prop_assume!(!b.is_zero());
        let prod = a.mul(&b);
        prop_assert!(isolates(&prod));
        prop_assert!((prod.to_f64() - a.to_f64() * b.to_f64()).abs() < 1e-9 * (1.0 + prod.to_f64().abs()));
        let back = prod.div(&b).unwrap();
        prop_assert_eq!(back.cmp_exact(&a), Ordering::Equal);
        let sum = a.add(&b);
        prop_assert!(isolates(&sum));
        prop_assert_eq!(sum.sub(&b).cmp_exact(&a), Ordering::Equal);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn integrality_matches_denominators(n in -50i64..50, d in 1i64..12, s in 2i64..20) {
        // A rational is integral iff d divides n; for (n + sqrt(s)) / d the
        // oracle is integrality of trace and norm.
        let q = rat(n, d);
        prop_assert_eq!(q.is_algebraic_integer(), n % d == 0);
        let x = AlgebraicNumber::from_integer(n).add(&sqrt(s)).div(&AlgebraicNumber::from_integer(d)).unwrap();
        let root = (s as f64).sqrt().round() as i64;
        let integral = if root * root == s {
            (n + root) % d == 0
        } else {
            (2 * n) % d == 0 && (n * n - s) % (d * d) == 0
        };
        prop_assert_eq!(x.is_algebraic_integer(), integral);
    }
}
