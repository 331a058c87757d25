//! Abelian-splitting-field test and conductor search.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::algebraic::euler_phi;
use crate::cyclotomic::CyclotomicElement;
use crate::factor::irreducible_factors;
use crate::numfield::NumberField;
use crate::poly::{discriminant, QPoly, ZPoly};

/// Three-valued answer of [`galois_abelian`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GaloisVerdict {
    Abelian,
    NonAbelian,
    Undecided,
}

/// Largest degree decided by [`galois_abelian`].
pub const MAX_DECIDED_DEGREE: usize = 6;

pub fn is_square(n: &BigInt) -> bool {
    !n.is_negative() && {
        let r = n.sqrt();
        &r * &r == *n
    }
}

/// Roots of an irreducible `f` inside its own root field `Q[y]/f`,
/// returned only when all of them lie there (the field is normal).
pub fn normal_root_expressions(f: &ZPoly) -> Option<Vec<QPoly>> {
    let k = NumberField::new(f);
    let roots = k.roots_of(f);
    (roots.len() == f.degree()).then_some(roots)
}

fn automorphisms_commute(f: &ZPoly, roots: &[QPoly]) -> bool {
    let k = NumberField::new(f);
    for (i, a) in roots.iter().enumerate() {
        for b in &roots[i + 1..] {
            if k.eval(a, b) != k.eval(b, a) {
                return false;
            }
        }
    }
    true
}

fn irreducible_abelian(f: &ZPoly) -> GaloisVerdict {
    match f.degree() {
        0..=2 => GaloisVerdict::Abelian,
        3 => {
            if is_square(&discriminant(f)) {
                GaloisVerdict::Abelian
            } else {
                GaloisVerdict::NonAbelian
            }
        }
        d if d <= MAX_DECIDED_DEGREE => match normal_root_expressions(f) {
            Some(roots) if automorphisms_commute(f, &roots) => GaloisVerdict::Abelian,
            _ => GaloisVerdict::NonAbelian,
        },
        _ => GaloisVerdict::Undecided,
    }
}

/// Decides whether the splitting field of `f` over the rationals is abelian.
///
/// Reducible input is split into irreducible factors; the splitting field
/// is abelian iff every factor's is.
pub fn galois_abelian(f: &ZPoly) -> GaloisVerdict {
    let mut undecided = false;
    for g in irreducible_factors(f) {
        match irreducible_abelian(&g) {
            GaloisVerdict::NonAbelian => return GaloisVerdict::NonAbelian,
            GaloisVerdict::Undecided => undecided = true,
            GaloisVerdict::Abelian => {}
        }
    }
    if undecided {
        GaloisVerdict::Undecided
    } else {
        GaloisVerdict::Abelian
    }
}

fn units(m: u64) -> Vec<u64> {
    (1..=m.max(1))
        .filter(|&a| a.gcd(&m) == 1)
        .map(|a| a % m.max(1))
        .collect()
}

fn closure(m: u64, gens: &BTreeSet<u64>) -> BTreeSet<u64> {
    let mut s: BTreeSet<u64> = BTreeSet::from([1 % m]);
    let mut frontier: Vec<u64> = vec![1 % m];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = x * g % m;
            if s.insert(y) {
                frontier.push(y);
            }
        }
    }
    s
}

/// Subgroups of `(Z/m)^x` of the given order.
fn unit_subgroups(m: u64, order: usize) -> Vec<BTreeSet<u64>> {
    let us = units(m);
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut found = Vec::new();
    let mut stack = vec![BTreeSet::from([1 % m])];
    seen.insert(vec![1 % m]);
    while let Some(h) = stack.pop() {
        if h.len() == order {
            found.push(h.clone());
        }
        if h.len() >= order {
            continue;
        }
        for &u in &us {
            if h.contains(&u) {
                continue;
            }
            let mut gens = h.clone();
            gens.insert(u);
            let c = closure(m, &gens);
            if !order.is_multiple_of(c.len()) {
                continue;
            }
            if seen.insert(c.iter().copied().collect()) {
                stack.push(c);
            }
        }
    }
    found
}

/// Minimal polynomial over Q of a generator of the fixed field of `h` in
/// `Q(zeta_m)`, if the chosen trace element generates it.
fn fixed_field_polynomial(m: u64, h: &BTreeSet<u64>, weight: i64) -> Option<ZPoly> {
    let phi = euler_phi(m as u32) as usize;
    let mut seed = CyclotomicElement::zero(m);
    for j in 1..=phi.max(1) {
        let w = BigRational::from_integer(BigInt::from(1 + weight * (j as i64) * (j as i64)));
        seed = seed.add(&CyclotomicElement::zeta(m, j as i64).scale(&w));
    }
    let theta = h
        .iter()
        .fold(CyclotomicElement::zero(m), |acc, &a| acc.add(&seed.galois(a)));
    // Conjugates over coset representatives.
    let mut reps: Vec<u64> = Vec::new();
    let mut covered: BTreeSet<u64> = BTreeSet::new();
    for a in units(m) {
        if covered.contains(&a) {
            continue;
        }
        reps.push(a);
        for &x in h {
            covered.insert(a * x % m);
        }
    }
    let conjugates: Vec<CyclotomicElement> = reps.iter().map(|&a| theta.galois(a)).collect();
    for i in 0..conjugates.len() {
        for j in i + 1..conjugates.len() {
            if conjugates[i] == conjugates[j] {
                return None;
            }
        }
    }
    // prod (x - c) with cyclotomic coefficients.
    let mut poly: Vec<CyclotomicElement> = vec![CyclotomicElement::one(m)];
    for c in &conjugates {
        let mut next = vec![CyclotomicElement::zero(m); poly.len() + 1];
        for (i, p) in poly.iter().enumerate() {
            next[i + 1] = next[i + 1].add(p);
            next[i] = next[i].sub(&p.mul(c));
        }
        poly = next;
    }
    let coeffs: Vec<BigRational> = poly
        .iter()
        .map(|c| {
            c.to_rational()
                .expect("fixed-field polynomial has rational coefficients")
        })
        .collect();
    Some(QPoly::new(coeffs).to_zpoly())
}

fn small_prime_divisors(n: &BigInt, bound: u64) -> Vec<u64> {
    (2..=bound)
        .filter(|&p| (2..p).take_while(|q| q * q <= p).all(|q| p % q != 0))
        .filter(|&p| (n % BigInt::from(p)).is_zero())
        .collect()
}

fn prime_support(m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut n = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest `m <= bound` with the root field of the irreducible abelian
/// polynomial `f` contained in `Q(zeta_m)`, found by comparing `Q[y]/f`
/// with the fixed fields of subgroups of `(Z/m)^x`.
pub fn conductor(f: &ZPoly, bound: u64) -> Option<u64> {
    let n = f.degree();
    if n <= 1 {
        return Some(1);
    }
    let disc = discriminant(f);
    let ramified = small_prime_divisors(&disc, bound);
    for m in 3..=bound {
        if m % 4 == 2 {
            continue;
        }
        let phi = euler_phi(m as u32) as usize;
        if !phi.is_multiple_of(n) || !prime_support(m).iter().all(|p| ramified.contains(p)) {
            continue;
        }
        for h in unit_subgroups(m, phi / n) {
            let Some(p) = (0..4).find_map(|w| fixed_field_polynomial(m, &h, w)) else {
                continue;
            };
            // Equal fields have discriminants differing by a rational square.
            let ratio = BigRational::new(discriminant(&p), disc.clone());
            if !(is_square(ratio.numer()) && is_square(ratio.denom()))
                && !(ratio.numer().is_negative()
                    && ratio.denom().is_negative()
                    && is_square(&-ratio.numer())
                    && is_square(&-ratio.denom()))
            {
                continue;
            }
            if !NumberField::new(&p).roots_of(f).is_empty() {
                return Some(m);
            }
        }
    }
    None
}

/// Least common multiple of the conductors of all irreducible factors.
pub fn compositum_conductor(polys: &[ZPoly], bound: u64) -> Option<u64> {
    let mut acc = 1u64;
    for f in polys {
        for g in irreducible_factors(f) {
            acc = acc.lcm(&conductor(&g, bound)?);
        }
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratics_and_cubics() {
        assert_eq!(galois_abelian(&ZPoly::from_i64(&[-1, -1, 1])), GaloisVerdict::Abelian);
        assert_eq!(
            galois_abelian(&ZPoly::from_i64(&[-1, -3, 0, 1])),
            GaloisVerdict::Abelian
        );
        assert_eq!(
            galois_abelian(&ZPoly::from_i64(&[-2, 0, 0, 1])),
            GaloisVerdict::NonAbelian
        );
        // Characteristic polynomial of the S3-type fusion matrix.
        assert_eq!(
            galois_abelian(&ZPoly::from_i64(&[1, -5, -1, 1])),
            GaloisVerdict::NonAbelian
        );
    }

    #[test]
    fn quartic_and_sextic_fields() {
        // Q(zeta_5): cyclic of order 4.
        assert_eq!(
            galois_abelian(&ZPoly::from_i64(&[1, 1, 1, 1, 1])),
            GaloisVerdict::Abelian
        );
        // Biquadratic Q(sqrt2, sqrt3).
        assert_eq!(
            galois_abelian(&ZPoly::from_i64(&[1, 0, -10, 0, 1])),
            GaloisVerdict::Abelian
        );
        // x^4 - 2 has dihedral group.
        assert_eq!(
            galois_abelian(&ZPoly::from_i64(&[-2, 0, 0, 0, 1])),
            GaloisVerdict::NonAbelian
        );
        // Q(zeta_7): cyclic of order 6.
        assert_eq!(
            galois_abelian(&ZPoly::from_i64(&[1, 1, 1, 1, 1, 1, 1])),
            GaloisVerdict::Abelian
        );
        // Splitting field of x^3 - 2 as a normal sextic with group S3.
        let s3 = ZPoly::from_i64(&[31, 36, 27, -4, 9, 0, 1]);
        assert_eq!(galois_abelian(&s3), GaloisVerdict::NonAbelian);
    }

    #[test]
    fn large_degree_is_undecided() {
        let f = ZPoly::from_i64(&[-2, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(galois_abelian(&f), GaloisVerdict::Undecided);
    }

    #[test]
    fn abelian_roots_live_in_the_root_field() {
        for c in [&[1i64, 1, 1, 1, 1][..], &[-1, -3, 0, 1], &[1, 0, -10, 0, 1]] {
            let f = ZPoly::from_i64(c);
            let k = NumberField::new(&f);
            let roots = normal_root_expressions(&f).unwrap();
            assert_eq!(roots.len(), f.degree());
            for r in roots {
                assert!(k.eval(&f.to_q(), &r).is_zero());
            }
        }
    }

    #[test]
    fn conductors() {
        assert_eq!(conductor(&ZPoly::from_i64(&[-1, -1, 1]), 100), Some(5));
        assert_eq!(conductor(&ZPoly::from_i64(&[-2, 0, 1]), 100), Some(8));
        assert_eq!(conductor(&ZPoly::from_i64(&[1, 0, 1]), 100), Some(4));
        assert_eq!(conductor(&ZPoly::from_i64(&[-1, -3, 0, 1]), 100), Some(9));
        assert_eq!(conductor(&ZPoly::from_i64(&[1, -2, -1, 1]), 100), Some(7));
    }
}
