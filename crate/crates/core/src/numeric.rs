//! Fixed-point real and complex arithmetic at a configurable binary
//! precision, with polynomial root finding and small dense linear algebra.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub const DEFAULT_PRECISION: u32 = 128;

/// A real number `m / 2^bits`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Real {
    m: BigInt,
    bits: u32,
}

impl Real {
    pub fn zero(bits: u32) -> Real {
        Real {
            m: BigInt::zero(),
            bits,
        }
    }

    pub fn from_i64(v: i64, bits: u32) -> Real {
        Real {
            m: BigInt::from(v) << bits,
            bits,
        }
    }

    pub fn from_bigint(v: &BigInt, bits: u32) -> Real {
        Real { m: v << bits, bits }
    }

    pub fn from_rational(q: &BigRational, bits: u32) -> Real {
        let num = q.numer() << (bits + 1);
        let den = q.denom();
        // Round to nearest.
        let t = num / den;
        let m = (t + q.numer().signum()) >> 1;
        Real { m, bits }
    }

    pub fn from_f64(v: f64, bits: u32) -> Real {
        let q = BigRational::from_float(v).expect("finite float");
        Real::from_rational(&q, bits)
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn to_f64(&self) -> f64 {
        let shift = self.bits.saturating_sub(60);
        let top = (&self.m >> shift).to_f64().unwrap_or(f64::NAN);
        top * 2f64.powi(-((self.bits - shift) as i32))
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.m.clone(), BigInt::one() << self.bits)
    }

    fn check(&self, o: &Real) {
        debug_assert_eq!(self.bits, o.bits, "mixed precisions");
    }

    pub fn add(&self, o: &Real) -> Real {
        self.check(o);
        Real {
            m: &self.m + &o.m,
            bits: self.bits,
        }
    }

    pub fn sub(&self, o: &Real) -> Real {
        self.check(o);
        Real {
            m: &self.m - &o.m,
            bits: self.bits,
        }
    }

    pub fn neg(&self) -> Real {
        Real {
            m: -&self.m,
            bits: self.bits,
        }
    }

    pub fn mul(&self, o: &Real) -> Real {
        self.check(o);
        let p = &self.m * &o.m;
        let half = BigInt::one() << (self.bits - 1);
        Real {
            m: (p + half) >> self.bits,
            bits: self.bits,
        }
    }

    pub fn mul_int(&self, k: i64) -> Real {
        Real {
            m: &self.m * k,
            bits: self.bits,
        }
    }

    pub fn div(&self, o: &Real) -> Result<Real> {
        self.check(o);
        if o.m.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Real {
            m: (&self.m << self.bits) / &o.m,
            bits: self.bits,
        })
    }

    pub fn sqrt(&self) -> Result<Real> {
        if self.m.is_negative() {
            return Err(Error::Invalid("square root of a negative number".into()));
        }
        Ok(Real {
            m: (&self.m << self.bits).sqrt(),
            bits: self.bits,
        })
    }

    pub fn abs(&self) -> Real {
        Real {
            m: self.m.abs(),
            bits: self.bits,
        }
    }

    pub fn signum(&self) -> i32 {
        self.m.signum().to_i32().unwrap()
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    /// Nearest integer.
    pub fn round(&self) -> BigInt {
        let half = BigInt::one() << (self.bits - 1);
        (&self.m + half) >> self.bits
    }

    /// Decimal rendering rounded to `digits` places.
    pub fn to_decimal(&self, digits: u32) -> String {
        crate::algebraic::format_decimal(&self.to_rational(), digits)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.m.cmp(&other.m))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(20))
    }
}

/// A complex number with fixed-point parts.
#[derive(Clone, Debug, PartialEq)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Complex {
        Complex { re, im }
    }

    pub fn zero(bits: u32) -> Complex {
        Complex::new(Real::zero(bits), Real::zero(bits))
    }

    pub fn one(bits: u32) -> Complex {
        Complex::from_real(Real::from_i64(1, bits))
    }

    pub fn from_real(re: Real) -> Complex {
        let bits = re.bits;
        Complex::new(re, Real::zero(bits))
    }

    pub fn from_i64(v: i64, bits: u32) -> Complex {
        Complex::from_real(Real::from_i64(v, bits))
    }

    pub fn from_c64(z: Complex64, bits: u32) -> Complex {
        Complex::new(Real::from_f64(z.re, bits), Real::from_f64(z.im, bits))
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn bits(&self) -> u32 {
        self.re.bits
    }

    pub fn add(&self, o: &Complex) -> Complex {
        Complex::new(self.re.add(&o.re), self.im.add(&o.im))
    }

    pub fn sub(&self, o: &Complex) -> Complex {
        Complex::new(self.re.sub(&o.re), self.im.sub(&o.im))
    }

    pub fn neg(&self) -> Complex {
        Complex::new(self.re.neg(), self.im.neg())
    }

    pub fn conj(&self) -> Complex {
        Complex::new(self.re.clone(), self.im.neg())
    }

    pub fn mul(&self, o: &Complex) -> Complex {
        let re = self.re.mul(&o.re).sub(&self.im.mul(&o.im));
        let im = self.re.mul(&o.im).add(&self.im.mul(&o.re));
        Complex::new(re, im)
    }

    pub fn scale(&self, r: &Real) -> Complex {
        Complex::new(self.re.mul(r), self.im.mul(r))
    }

    pub fn mul_int(&self, k: i64) -> Complex {
        Complex::new(self.re.mul_int(k), self.im.mul_int(k))
    }

    pub fn norm_sqr(&self) -> Real {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn abs(&self) -> Real {
        self.norm_sqr().sqrt().expect("nonnegative")
    }

    pub fn div(&self, o: &Complex) -> Result<Complex> {
        let n = o.norm_sqr();
        let t = self.mul(&o.conj());
        Ok(Complex::new(t.re.div(&n)?, t.im.div(&n)?))
    }

    pub fn recip(&self) -> Result<Complex> {
        Complex::one(self.bits()).div(self)
    }

    pub fn pow(&self, e: u64) -> Complex {
        let mut acc = Complex::one(self.bits());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Distance to `o` as a float (only meaningful when small).
    pub fn dist(&self, o: &Complex) -> f64 {
        self.sub(o).abs().to_f64()
    }

    pub fn abs_f64(&self) -> f64 {
        self.abs().to_f64()
    }

    /// The `m`-th root of unity `exp(2 pi i k / m)`.
    pub fn root_of_unity(m: u64, k: u64, bits: u32) -> Complex {
        let k = k % m;
        if k == 0 {
            return Complex::one(bits);
        }
        let t = 2.0 * std::f64::consts::PI * (k as f64) / (m as f64);
        let mut z = Complex::from_c64(Complex64::new(t.cos(), t.sin()), bits);
        // Newton on z^m = 1 converges from the float estimate.
        let one = Complex::one(bits);
        for _ in 0..precision_steps(bits) {
            let zm1 = z.pow(m - 1);
            let f = zm1.mul(&z).sub(&one);
            let df = zm1.mul_int(m as i64);
            z = z.sub(&f.div(&df).expect("nonzero derivative"));
        }
        z
    }

    pub fn to_string_digits(&self, digits: u32) -> String {
        let im = &self.im;
        if im.to_f64().abs() < 10f64.powi(-(digits as i32)) {
            return self.re.to_decimal(digits);
        }
        let sign = if im.signum() < 0 { "-" } else { "+" };
        format!("{}{}{}i", self.re.to_decimal(digits), sign, im.abs().to_decimal(digits))
    }
}

fn precision_steps(bits: u32) -> usize {
    // Quadratic convergence from 50 correct bits.
    let mut n = 2;
    let mut b = 50;
    while b < bits + 16 {
        b *= 2;
        n += 1;
    }
    n
}

/// Evaluates a polynomial (ascending coefficients) and its derivative.
pub fn horner(coeffs: &[Complex], z: &Complex) -> (Complex, Complex) {
    let bits = z.bits();
    let mut p = Complex::zero(bits);
    let mut dp = Complex::zero(bits);
    for c in coeffs.iter().rev() {
        dp = dp.mul(z).add(&p);
        p = p.mul(z).add(c);
    }
    (p, dp)
}

/// Float roots by the Aberth-Ehrlich iteration.
pub fn aberth_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let lead = coeffs[n];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    let radius = 1.0 + monic[..n].iter().map(|c| c.norm()).fold(0.0f64, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let t = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.4;
            Complex64::from_polar(radius * 0.5, t)
        })
        .collect();
    let eval = |x: Complex64| {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for c in monic.iter().rev() {
            dp = dp * x + p;
            p = p * x + c;
        }
        (p, dp)
    };
    for _ in 0..1000 {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let (p, dp) = eval(z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| {
                    let d = z[i] - z[j];
                    if d.norm() == 0.0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            z[i] -= w;
            max_step = max_step.max(w.norm() / (1.0 + z[i].norm()));
        }
        if max_step < 1e-15 {
            break;
        }
    }
    z
}

/// High-precision roots of a polynomial with simple roots: float Aberth
/// estimates polished by Newton's method at `bits` precision.
pub fn polynomial_roots(coeffs: &[Complex], bits: u32) -> Vec<Complex> {
    let floats: Vec<Complex64> = coeffs.iter().map(Complex::to_c64).collect();
    let start = aberth_roots(&floats);
    start
        .into_iter()
        .map(|z0| {
            let mut z = Complex::from_c64(z0, bits);
            for _ in 0..precision_steps(bits) + 4 {
                let (p, dp) = horner(coeffs, &z);
                if dp.norm_sqr().is_zero() {
                    break;
                }
                let step = p.div(&dp).expect("nonzero derivative");
                z = z.sub(&step);
                if step.norm_sqr().is_zero() {
                    break;
                }
            }
            z
        })
        .collect()
}

/// High-precision complex roots of an integer polynomial (assumed squarefree).
pub fn integer_polynomial_roots(p: &crate::poly::ZPoly, bits: u32) -> Vec<Complex> {
    let coeffs: Vec<Complex> = p
        .coeffs()
        .iter()
        .map(|c| Complex::from_real(Real::from_bigint(c, bits)))
        .collect();
    polynomial_roots(&coeffs, bits)
}

pub type Matrix = Vec<Vec<Complex>>;

pub fn identity(n: usize, bits: u32) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| Complex::from_i64(i64::from(i == j), bits)).collect())
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let bits = a[0][0].bits();
    let n = a.len();
    let m = b[0].len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut acc = Complex::zero(bits);
                    for (k, bk) in b.iter().enumerate() {
                        acc = acc.add(&a[i][k].mul(&bk[j]));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Gaussian elimination with complete pivoting; returns the row-reduced
/// matrix, pivot columns, and the magnitudes of the pivots found.
fn reduce(mut a: Matrix, tol: f64) -> (Matrix, Vec<usize>) {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut pivots = Vec::new();
    let mut used = vec![false; cols];
    let mut r = 0;
    while r < rows {
        let mut best: Option<(usize, usize, f64)> = None;
        for (i, row) in a.iter().enumerate().skip(r) {
            for (j, x) in row.iter().enumerate() {
                if used[j] {
                    continue;
                }
                let v = x.abs_f64();
                if best.is_none_or(|b| v > b.2) {
                    best = Some((i, j, v));
                }
            }
        }
        let Some((pi, pj, v)) = best else { break };
        if v <= tol {
            break;
        }
        a.swap(r, pi);
        used[pj] = true;
        let inv = a[r][pj].recip().expect("nonzero pivot");
        a[r] = a[r].iter().map(|x| x.mul(&inv)).collect();
        for i in 0..rows {
            if i != r {
                let f = a[i][pj].clone();
                if f.norm_sqr().is_zero() {
                    continue;
                }
                let pr = a[r].clone();
                for (x, p) in a[i].iter_mut().zip(&pr) {
                    *x = x.sub(&f.mul(p));
                }
            }
        }
        pivots.push(pj);
        r += 1;
    }
    (a, pivots)
}

/// Numerical rank, counting pivots above `tol`.
pub fn rank(a: &Matrix, tol: f64) -> usize {
    reduce(a.clone(), tol).1.len()
}

/// Basis of the numerical null space.
pub fn null_space(a: &Matrix, tol: f64) -> Vec<Vec<Complex>> {
    let cols = a[0].len();
    let bits = a[0][0].bits();
    let (red, pivots) = reduce(a.clone(), tol);
    let free: Vec<usize> = (0..cols).filter(|j| !pivots.contains(j)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Complex::zero(bits); cols];
            v[f] = Complex::one(bits);
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = red[r][f].neg();
            }
            v
        })
        .collect()
}

/// Solves the square system `a x = b` by Gaussian elimination with partial
/// pivoting; `None` if a pivot falls below `tol`.
pub fn solve(a: &Matrix, b: &[Complex], tol: f64) -> Option<Vec<Complex>> {
    let n = a.len();
    let mut m: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for c in 0..n {
        let (piv, mag) = (c..n)
            .map(|i| (i, m[i][c].abs_f64()))
            .max_by(|x, y| x.1.total_cmp(&y.1))?;
        if mag <= tol {
            return None;
        }
        m.swap(c, piv);
        let inv = m[c][c].recip().ok()?;
        for i in c + 1..n {
            let f = m[i][c].mul(&inv);
            if f.norm_sqr().is_zero() {
                continue;
            }
            let pr = m[c].clone();
            for (x, p) in m[i].iter_mut().zip(&pr).skip(c) {
                *x = x.sub(&f.mul(p));
            }
        }
    }
    let bits = b[0].bits();
    let mut x = vec![Complex::zero(bits); n];
    for i in (0..n).rev() {
        let mut acc = m[i][n].clone();
        for j in i + 1..n {
            acc = acc.sub(&m[i][j].mul(&x[j]));
        }
        x[i] = acc.div(&m[i][i]).ok()?;
    }
    Some(x)
}

/// Best rational approximation with denominator at most `max_den`, by
/// continued fractions; `None` unless it is within `tol` of `x`.
pub fn rational_reconstruct(x: &Real, max_den: &BigInt, tol: &BigRational) -> Option<BigRational> {
    let target = x.to_rational();
    let mut rest = target.clone();
    let (mut p0, mut q0) = (BigInt::zero(), BigInt::one());
    let (mut p1, mut q1) = (BigInt::one(), BigInt::zero());
    loop {
        let a = rest.floor().to_integer();
        let p2 = &a * &p1 + &p0;
        let q2 = &a * &q1 + &q0;
        if &q2 > max_den {
            return None;
        }
        let approx = BigRational::new(p2.clone(), q2.clone());
        if (&approx - &target).abs() <= *tol {
            return Some(approx);
        }
        let frac = &rest - BigRational::from(a);
        if frac.is_zero() {
            return None;
        }
        rest = frac.recip();
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
}

/// Characteristic polynomial (ascending coefficients) by the
/// Faddeev-LeVerrier recurrence.
pub fn charpoly(a: &Matrix) -> Vec<Complex> {
    let n = a.len();
    let bits = a[0][0].bits();
    let mut coeffs = vec![Complex::zero(bits); n + 1];
    coeffs[n] = Complex::one(bits);
    let mut m = vec![vec![Complex::zero(bits); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = if k == 1 {
            vec![vec![Complex::zero(bits); n]; n]
        } else {
            mat_mul(a, &m)
        };
        for (i, row) in next.iter_mut().enumerate() {
            row[i] = row[i].add(&coeffs[n - k + 1]);
        }
        m = next;
        let am = mat_mul(a, &m);
        let mut tr = Complex::zero(bits);
        for (i, row) in am.iter().enumerate() {
            tr = tr.add(&row[i]);
        }
        let kk = Complex::from_i64(-(k as i64), bits);
        coeffs[n - k] = tr.div(&kk).expect("nonzero");
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ZPoly;

    #[test]
    fn sqrt_two_to_high_precision() {
        let r = Real::from_i64(2, 200).sqrt().unwrap();
        let sq = r.mul(&r);
        assert!(sq.sub(&Real::from_i64(2, 200)).abs().to_f64() < 1e-55);
        assert!((r.to_f64() - std::f64::consts::SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn roots_of_unity_have_unit_order() {
        for m in [3u64, 5, 8, 12] {
            let z = Complex::root_of_unity(m, 1, 128);
            let zm = z.pow(m);
            assert!(zm.dist(&Complex::one(128)) < 1e-35, "m={m}");
        }
    }

    #[test]
    fn golden_polynomial_roots() {
        let roots = integer_polynomial_roots(&ZPoly::from_i64(&[-1, -1, 1]), 128);
        let mut re: Vec<f64> = roots.iter().map(|z| z.re.to_f64()).collect();
        re.sort_by(f64::total_cmp);
        assert!((re[1] - 1.618_033_988_749_895).abs() < 1e-14);
        assert!((re[0] + 0.618_033_988_749_895).abs() < 1e-14);
        for z in &roots {
            let (p, _) = horner(&[-1i64, -1, 1].map(|c| Complex::from_i64(c, 128)), z);
            assert!(p.abs_f64() < 1e-30);
        }
    }

    #[test]
    fn charpoly_matches_exact() {
        let a: Matrix = [[0i64, 1, 0], [1, 0, 2], [0, 2, 1]]
            .iter()
            .map(|r| r.iter().map(|&x| Complex::from_i64(x, 128)).collect())
            .collect();
        let c = charpoly(&a);
        let want = [1i64, -5, -1, 1];
        for (x, w) in c.iter().zip(want) {
            assert!(x.dist(&Complex::from_i64(w, 128)) < 1e-30);
        }
    }

    #[test]
    fn null_space_of_singular_matrix() {
        let a: Matrix = [[1i64, 2], [2, 4]]
            .iter()
            .map(|r| r.iter().map(|&x| Complex::from_i64(x, 128)).collect())
            .collect();
        let ns = null_space(&a, 1e-20);
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        let r = a[0][0].mul(&v[0]).add(&a[0][1].mul(&v[1]));
        assert!(r.abs_f64() < 1e-30);
    }
}
