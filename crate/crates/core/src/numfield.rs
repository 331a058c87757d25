//! Arithmetic in simple extensions `Q[y]/(m(y))` and polynomials over them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebraic::sum_polynomial;
use crate::factor::irreducible_factors;
use crate::numeric::{integer_polynomial_roots, rational_reconstruct, solve, Complex};
use crate::poly::{QPoly, ZPoly};

/// The field `Q[y]/(m)` for an irreducible `m`.
#[derive(Clone, Debug)]
pub struct NumberField {
    modulus: QPoly,
}

/// Polynomial in `x` with coefficients in a number field (ascending).
pub type FieldPoly = Vec<QPoly>;

impl NumberField {
    pub fn new(m: &ZPoly) -> NumberField {
        NumberField {
            modulus: m.to_q().monic(),
        }
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree()
    }

    pub fn modulus(&self) -> &QPoly {
        &self.modulus
    }

    pub fn reduce(&self, a: &QPoly) -> QPoly {
        a.rem(&self.modulus)
    }

    pub fn generator(&self) -> QPoly {
        self.reduce(&QPoly::x())
    }

    pub fn add(&self, a: &QPoly, b: &QPoly) -> QPoly {
        a + b
    }

    pub fn sub(&self, a: &QPoly, b: &QPoly) -> QPoly {
        a - b
    }

    pub fn mul(&self, a: &QPoly, b: &QPoly) -> QPoly {
        self.reduce(&(a * b))
    }

    pub fn inv(&self, a: &QPoly) -> Option<QPoly> {
        if a.is_zero() {
            return None;
        }
        let (g, s, _) = QPoly::ext_gcd(a, &self.modulus);
        (g.degree() == 0).then(|| self.reduce(&s.scale(&g.coeff(0).recip())))
    }

    /// Evaluates the rational polynomial `p` at the field element `a`.
    pub fn eval(&self, p: &QPoly, a: &QPoly) -> QPoly {
        let mut acc = QPoly::zero();
        for c in p.coeffs().iter().rev() {
            acc = &self.mul(&acc, a) + &QPoly::constant(c.clone());
        }
        acc
    }

    fn poly_trim(p: &mut FieldPoly) {
        while p.last().is_some_and(QPoly::is_zero) {
            p.pop();
        }
    }

    /// Remainder of `a` modulo `b` in `K[x]`.
    pub fn poly_rem(&self, a: &FieldPoly, b: &FieldPoly) -> FieldPoly {
        let mut r = a.clone();
        Self::poly_trim(&mut r);
        let db = b.len() - 1;
        let inv_lead = self.inv(&b[db]).expect("nonzero leading coefficient");
        while r.len() > db {
            let shift = r.len() - 1 - db;
            let f = self.mul(r.last().unwrap(), &inv_lead);
            for (i, bc) in b.iter().enumerate() {
                let t = self.mul(&f, bc);
                r[shift + i] = &r[shift + i] - &t;
            }
            Self::poly_trim(&mut r);
        }
        r
    }

    /// Monic gcd in `K[x]`.
    pub fn poly_gcd(&self, a: &FieldPoly, b: &FieldPoly) -> FieldPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        Self::poly_trim(&mut a);
        Self::poly_trim(&mut b);
        while !b.is_empty() {
            let r = self.poly_rem(&a, &b);
            a = b;
            b = r;
        }
        if let Some(l) = a.last().cloned() {
            let inv = self.inv(&l).expect("nonzero");
            a = a.iter().map(|c| self.mul(c, &inv)).collect();
        }
        a
    }

    /// `g(x - s*y)` as a polynomial over the field.
    fn shifted(&self, g: &ZPoly, s: i64) -> FieldPoly {
        // x - s*y as a linear polynomial over K.
        let lin: FieldPoly = vec![
            self.reduce(&QPoly::monomial(BigRational::from_integer((-s).into()), 1)),
            QPoly::one(),
        ];
        let mut acc: FieldPoly = Vec::new();
        for c in g.coeffs().iter().rev() {
            // acc = acc * lin + c
            let mut next: FieldPoly = vec![QPoly::zero(); acc.len() + 1];
            for (i, a) in acc.iter().enumerate() {
                next[i] = &next[i] + &self.mul(a, &lin[0]);
                next[i + 1] = &next[i + 1] + a;
            }
            next[0] = &next[0] + &QPoly::constant(BigRational::from(c.clone()));
            acc = next;
        }
        Self::poly_trim(&mut acc);
        acc
    }

    /// Numerically pairs the roots of the norm factor `h` with conjugates
    /// of the generator, interpolates the root of `g` as a polynomial in
    /// `y`, and keeps it only if it verifies exactly.
    fn root_from_factor(&self, g: &ZPoly, h: &ZPoly, s: i64) -> Option<QPoly> {
        let n = self.degree();
        let m = self.modulus.to_zpoly();
        for bits in [256u32, 768] {
            let alphas = integer_polynomial_roots(&m, bits);
            let betas = integer_polynomial_roots(g, bits);
            let rhos = integer_polynomial_roots(h, bits);
            let mut targets = Vec::with_capacity(n);
            for a in &alphas {
                let sa = a.mul_int(s);
                let beta = betas
                    .iter()
                    .filter(|b| rhos.iter().any(|r| r.dist(&b.add(&sa)) < 1e-30))
                    .min_by(|x, y| {
                        let dx = rhos.iter().map(|r| r.dist(&x.add(&sa))).fold(f64::MAX, f64::min);
                        let dy = rhos.iter().map(|r| r.dist(&y.add(&sa))).fold(f64::MAX, f64::min);
                        dx.total_cmp(&dy)
                    })?;
                targets.push(beta.clone());
            }
            let vander: Vec<Vec<Complex>> = alphas
                .iter()
                .map(|a| (0..n).map(|j| a.pow(j as u64)).collect())
                .collect();
            let Some(sol) = solve(&vander, &targets, 1e-60) else {
                continue;
            };
            let max_den = BigInt::one() << (bits / 3);
            let tol = BigRational::new(BigInt::one(), BigInt::one() << (bits / 2));
            let coeffs: Option<Vec<BigRational>> = sol
                .iter()
                .map(|c| {
                    (c.im.abs().to_f64() < 1e-20)
                        .then(|| rational_reconstruct(&c.re, &max_den, &tol))
                        .flatten()
                })
                .collect();
            let Some(coeffs) = coeffs else {
                continue;
            };
            let p = QPoly::new(coeffs);
            if self.eval(&g.to_q(), &p).is_zero() {
                return Some(p);
            }
        }
        None
    }

    /// All roots of the rational polynomial `g` lying in this field,
    /// each written as a polynomial in the generator `y`.
    ///
    /// Uses the norm of `g(x - s y)`: its rational irreducible factors of
    /// degree `[K:Q]` correspond to linear factors of `g` over `K`.
    pub fn roots_of(&self, g: &ZPoly) -> Vec<QPoly> {
        let n = self.degree();
        let g = g.squarefree_part();
        if g.degree() == 0 {
            return Vec::new();
        }
        let m = self.modulus.to_zpoly();
        for s in [1i64, -1, 2, -2, 3, -3, 5, -5, 7] {
            let scaled = m.to_q().compose(&QPoly::new(vec![
                BigRational::zero(),
                BigRational::new(1.into(), s.into()),
            ]));
            let norm = sum_polynomial(&g, &scaled.to_zpoly());
            if !norm.is_squarefree() {
                continue;
            }
            let gs = self.shifted(&g, s);
            let mut roots = Vec::new();
            for h in irreducible_factors(&norm) {
                if h.degree() != n {
                    continue;
                }
                if let Some(r) = self.root_from_factor(&g, &h, s) {
                    roots.push(r);
                    continue;
                }
                let hk: FieldPoly = h
                    .coeffs()
                    .iter()
                    .map(|c| QPoly::constant(BigRational::from(c.clone())))
                    .collect();
                let lin = self.poly_gcd(&hk, &gs);
                if lin.len() != 2 {
                    continue;
                }
                // Root gamma of g(x - s y); the root of g is gamma - s y.
                let gamma = self.reduce(&-&lin[0]);
                let shift = QPoly::monomial(BigRational::from_integer(s.into()), 1);
                roots.push(self.reduce(&(&gamma - &shift)));
            }
            roots.sort_by(|a, b| {
                a.coeffs()
                    .len()
                    .cmp(&b.coeffs().len())
                    .then_with(|| a.coeffs().cmp(b.coeffs()))
            });
            return roots;
        }
        panic!("no separating shift found for the norm computation");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_in_quadratic_field() {
        let k = NumberField::new(&ZPoly::from_i64(&[-2, 0, 1]));
        let a = QPoly::new(vec![BigRational::one(), BigRational::one()]);
        let inv = k.inv(&a).unwrap();
        assert_eq!(k.mul(&a, &inv), QPoly::one());
    }

    #[test]
    fn cyclic_cubic_is_normal() {
        // x^3 - 3x - 1 has roots y, y^2 - y - 2, -y^2 + 2 in its root field.
        let f = ZPoly::from_i64(&[-1, -3, 0, 1]);
        let k = NumberField::new(&f);
        let roots = k.roots_of(&f);
        assert_eq!(roots.len(), 3);
        for r in &roots {
            assert!(k.eval(&f.to_q(), r).is_zero());
        }
    }

    #[test]
    fn pure_cubic_is_not_normal() {
        let f = ZPoly::from_i64(&[-2, 0, 0, 1]);
        let k = NumberField::new(&f);
        assert_eq!(k.roots_of(&f), vec![k.generator()]);
    }
}
