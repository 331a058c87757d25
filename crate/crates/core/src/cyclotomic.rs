//! Elements of cyclotomic fields `Q(zeta_m)`, stored as rational
//! coefficient vectors modulo the cyclotomic polynomial.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebraic::euler_phi;
use crate::numeric::Complex;
use crate::poly::{QPoly, ZPoly};

/// The cyclotomic polynomial `Phi_m`.
pub fn cyclotomic_polynomial(m: u64) -> ZPoly {
    let mut p = &ZPoly::monomial(BigInt::one(), m as usize) - &ZPoly::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            p = p.div_exact(&cyclotomic_polynomial(d)).expect("Phi_d divides x^m - 1");
        }
    }
    p
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicElement {
    order: u64,
    coeffs: Vec<BigRational>,
}

impl CyclotomicElement {
    fn phi(m: u64) -> usize {
        euler_phi(m as u32) as usize
    }

    fn from_poly(order: u64, p: &QPoly) -> CyclotomicElement {
        let modulus = cyclotomic_polynomial(order).to_q();
        let r = p.rem(&modulus);
        let mut coeffs = vec![BigRational::zero(); Self::phi(order)];
        for (i, c) in r.coeffs().iter().enumerate() {
            coeffs[i] = c.clone();
        }
        CyclotomicElement { order, coeffs }
    }

    pub fn zero(order: u64) -> CyclotomicElement {
        CyclotomicElement {
            order,
            coeffs: vec![BigRational::zero(); Self::phi(order)],
        }
    }

    pub fn from_rational(order: u64, q: BigRational) -> CyclotomicElement {
        let mut z = CyclotomicElement::zero(order);
        z.coeffs[0] = q;
        z
    }

    pub fn one(order: u64) -> CyclotomicElement {
        CyclotomicElement::from_rational(order, BigRational::one())
    }

    /// `zeta_m^k`.
    pub fn zeta(order: u64, k: i64) -> CyclotomicElement {
        let e = k.rem_euclid(order as i64) as usize;
        CyclotomicElement::from_poly(order, &QPoly::monomial(BigRational::one(), e))
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    fn as_poly(&self) -> QPoly {
        QPoly::new(self.coeffs.clone())
    }

    pub fn add(&self, o: &CyclotomicElement) -> CyclotomicElement {
        assert_eq!(self.order, o.order, "mismatched cyclotomic orders");
        CyclotomicElement {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn neg(&self) -> CyclotomicElement {
        CyclotomicElement {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn sub(&self, o: &CyclotomicElement) -> CyclotomicElement {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &CyclotomicElement) -> CyclotomicElement {
        assert_eq!(self.order, o.order, "mismatched cyclotomic orders");
        CyclotomicElement::from_poly(self.order, &(&self.as_poly() * &o.as_poly()))
    }

    pub fn pow(&self, e: u32) -> CyclotomicElement {
        let mut acc = CyclotomicElement::one(self.order);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The automorphism `zeta -> zeta^a` for `a` coprime to the order.
    pub fn galois(&self, a: u64) -> CyclotomicElement {
        let mut acc = CyclotomicElement::zero(self.order);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = CyclotomicElement::zeta(self.order, (a as i64) * (i as i64));
            acc = acc.add(&t.scale(c));
        }
        acc
    }

    /// Complex conjugation, `zeta -> zeta^(m-1)`.
    pub fn conj(&self) -> CyclotomicElement {
        self.galois(self.order - 1)
    }

    pub fn scale(&self, q: &BigRational) -> CyclotomicElement {
        CyclotomicElement {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a * q).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    pub fn to_complex(&self, bits: u32) -> Complex {
        let mut acc = Complex::zero(bits);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let z = Complex::root_of_unity(self.order, i as u64, bits);
            acc = acc.add(&z.scale(&crate::numeric::Real::from_rational(c, bits)));
        }
        acc
    }
}

impl fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = crate::algebraic::format_rational(c);
            terms.push(match i {
                0 => cs,
                _ if c.is_one() => format!("z{}^{i}", self.order),
                _ => format!("{cs}*z{}^{i}", self.order),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ZPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ZPoly::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ZPoly::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ZPoly::from_i64(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = CyclotomicElement::zeta(4, 1);
        assert_eq!(
            i.mul(&i),
            CyclotomicElement::from_rational(4, BigRational::from_integer((-1).into()))
        );
    }

    #[test]
    fn sixth_root_relation() {
        let z = CyclotomicElement::zeta(6, 1);
        assert_eq!(z.mul(&z), z.sub(&CyclotomicElement::one(6)));
    }

    #[test]
    fn conjugation_inverts_zeta() {
        for m in [3u64, 5, 7, 8, 9, 12] {
            let z = CyclotomicElement::zeta(m, 1);
            assert_eq!(z.conj(), CyclotomicElement::zeta(m, m as i64 - 1));
            assert_eq!(z.mul(&z.conj()), CyclotomicElement::one(m));
        }
    }

    #[test]
    fn sum_of_primitive_roots_is_mobius() {
        // Sum of primitive 9th roots of unity is mu(9) = 0, of 5th roots -1.
        let s9 = [1, 2, 4, 5, 7, 8].iter().fold(CyclotomicElement::zero(9), |a, &k| {
            a.add(&CyclotomicElement::zeta(9, k))
        });
        assert!(s9.is_zero());
        let s5 = (1..5).fold(CyclotomicElement::zero(5), |a, k| a.add(&CyclotomicElement::zeta(5, k)));
        assert_eq!(s5.to_rational(), Some(BigRational::from_integer((-1).into())));
    }

    #[test]
    fn numeric_embedding() {
        let z = CyclotomicElement::zeta(8, 1).add(&CyclotomicElement::zeta(8, 7));
        assert!((z.to_complex(128).re.to_f64() - std::f64::consts::SQRT_2).abs() < 1e-14);
    }
}
