//! Dense univariate polynomials over the integers and the rationals.
//!
//! Coefficients are stored in ascending order with no trailing zeros, so
//! the zero polynomial is the empty vector.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};

/// Coefficient ring bound used by the generic polynomial code.
pub trait Coeff: Clone + Num + Neg<Output = Self> + fmt::Debug {}
impl<T: Clone + Num + Neg<Output = T> + fmt::Debug> Coeff for T {}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    c: Vec<T>,
}

pub type ZPoly = Poly<BigInt>;
pub type QPoly = Poly<BigRational>;

impl<T: Coeff> Poly<T> {
    pub fn new(mut c: Vec<T>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { c: vec![T::one()] }
    }

    pub fn constant(t: T) -> Self {
        Poly::new(vec![t])
    }

    /// The monomial `t * x^d`.
    pub fn monomial(t: T, d: usize) -> Self {
        let mut c = vec![T::zero(); d + 1];
        c[d] = t;
        Poly::new(c)
    }

    pub fn x() -> Self {
        Poly::monomial(T::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> T {
        self.c.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn lead(&self) -> T {
        self.c.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for a in self.c.iter().rev() {
            acc = acc * x.clone() + a.clone();
        }
        acc
    }

    pub fn scale(&self, t: &T) -> Self {
        Poly::new(self.c.iter().map(|a| a.clone() * t.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        let mut out = Vec::with_capacity(self.c.len().saturating_sub(1));
        let mut k = T::zero();
        for a in &self.c {
            if !k.is_zero() {
                out.push(a.clone() * k.clone());
            }
            k = k + T::one();
        }
        Poly::new(out)
    }

    /// `self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut acc = Poly::zero();
        for a in self.c.iter().rev() {
            acc = &(&acc * other) + &Poly::constant(a.clone());
        }
        acc
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `p(-x)`.
    pub fn negate_var(&self) -> Self {
        Poly::new(
            self.c
                .iter()
                .enumerate()
                .map(|(i, a)| if i % 2 == 1 { -a.clone() } else { a.clone() })
                .collect(),
        )
    }

    /// `x^deg p(1/x)`.
    pub fn reverse(&self) -> Self {
        let mut c = self.c.clone();
        c.reverse();
        Poly::new(c)
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.c.iter().map(f).collect())
    }
}

impl<T: Coeff> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.c.len().max(rhs.c.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Coeff> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.c.len().max(rhs.c.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Coeff> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.c.iter().map(|a| -a.clone()).collect())
    }
}

impl<T: Coeff> Add for Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: Poly<T>) -> Poly<T> {
        &self + &rhs
    }
}

impl<T: Coeff> Sub for Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: Poly<T>) -> Poly<T> {
        &self - &rhs
    }
}

impl<T: Coeff> Mul for Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: Poly<T>) -> Poly<T> {
        &self * &rhs
    }
}

// ---------------------------------------------------------------------------
// Rational polynomials

impl QPoly {
    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        if self.degree() < d.degree() || self.is_zero() {
            return (QPoly::zero(), self.clone());
        }
        let mut r = self.c.clone();
        let dl = d.lead();
        let dd = d.degree();
        let mut q = vec![BigRational::zero(); self.degree() - dd + 1];
        for k in (0..q.len()).rev() {
            let t = &r[k + dd] / &dl;
            if !t.is_zero() {
                for (j, b) in d.c.iter().enumerate() {
                    r[k + j] = &r[k + j] - &t * b;
                }
            }
            q[k] = t;
        }
        r.truncate(dd);
        (QPoly::new(q), QPoly::new(r))
    }

    pub fn rem(&self, d: &QPoly) -> QPoly {
        self.div_rem(d).1
    }

    pub fn monic(&self) -> QPoly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead();
        QPoly::new(self.c.iter().map(|a| a / &l).collect())
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*a + t*b = g` and `g` monic.
    pub fn ext_gcd(a: &QPoly, b: &QPoly) -> (QPoly, QPoly, QPoly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (QPoly::one(), QPoly::zero());
        let (mut t0, mut t1) = (QPoly::zero(), QPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = r1;
            r1 = r;
            let s2 = &s0 - &(&q * &s1);
            s0 = s1;
            s1 = s2;
            let t2 = &t0 - &(&q * &t1);
            t0 = t1;
            t1 = t2;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let l = QPoly::constant(r0.lead().recip());
        (&r0 * &l, &s0 * &l, &t0 * &l)
    }

    /// Clears denominators and returns the canonical primitive integer multiple.
    pub fn to_zpoly(&self) -> ZPoly {
        let den = self.c.iter().fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
        let z = ZPoly::new(self.c.iter().map(|a| (a * &den).to_integer()).collect());
        z.canonical()
    }
}

// ---------------------------------------------------------------------------
// Integer polynomials

impl ZPoly {
    pub fn from_i64(c: &[i64]) -> ZPoly {
        ZPoly::new(c.iter().map(|&a| BigInt::from(a)).collect())
    }

    pub fn content(&self) -> BigInt {
        self.c.iter().fold(BigInt::zero(), |acc, a| acc.gcd(a))
    }

    /// Primitive part with positive leading coefficient.
    pub fn canonical(&self) -> ZPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.lead().is_negative() {
            g = -g;
        }
        ZPoly::new(self.c.iter().map(|a| a / &g).collect())
    }

    pub fn to_q(&self) -> QPoly {
        QPoly::new(self.c.iter().map(|a| BigRational::from(a.clone())).collect())
    }

    pub fn is_monic(&self) -> bool {
        self.lead().is_one()
    }

    /// Pseudo-remainder `lc(d)^(deg - deg d + 1) * self mod d`.
    fn pseudo_rem(&self, d: &ZPoly) -> ZPoly {
        let mut r = self.c.clone();
        let dd = d.degree();
        let lc = d.lead();
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let t = r.last().unwrap().clone();
            for x in r.iter_mut() {
                *x *= &lc;
            }
            for (i, b) in d.c.iter().enumerate() {
                r[k + i] -= &t * b;
            }
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        ZPoly::new(r)
    }

    /// Canonical gcd over the rationals, returned as a primitive integer
    /// polynomial (primitive remainder sequence).
    pub fn gcd(&self, other: &ZPoly) -> ZPoly {
        let (mut a, mut b) = (self.canonical(), other.canonical());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == 0 {
                return ZPoly::one();
            }
            let r = a.pseudo_rem(&b).canonical();
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        a.canonical()
    }

    /// Exact quotient; `None` if `d` does not divide `self` in `Z[x]`.
    pub fn div_exact(&self, d: &ZPoly) -> Option<ZPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        let dd = d.degree();
        if self.degree() < dd {
            return None;
        }
        let lc = d.lead();
        let mut r = self.c.clone();
        let mut q = vec![BigInt::zero(); self.degree() - dd + 1];
        for k in (0..q.len()).rev() {
            let top = &r[k + dd];
            if top.is_zero() {
                continue;
            }
            let (t, rem) = top.div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            for (i, b) in d.c.iter().enumerate() {
                r[k + i] -= &t * b;
            }
            q[k] = t;
        }
        r.iter().all(Zero::is_zero).then(|| ZPoly::new(q))
    }

    /// Divides over the rationals and returns the canonical integer quotient.
    pub fn div_q(&self, d: &ZPoly) -> Option<ZPoly> {
        let (q, r) = self.to_q().div_rem(&d.to_q());
        if r.is_zero() {
            Some(q.to_zpoly())
        } else {
            None
        }
    }

    pub fn squarefree_part(&self) -> ZPoly {
        if self.degree() == 0 || crate::factor::squarefree_mod_small_prime(self) {
            return self.canonical();
        }
        let g = self.gcd(&self.derivative());
        self.div_q(&g).expect("gcd divides").canonical()
    }

    pub fn is_squarefree(&self) -> bool {
        crate::factor::squarefree_mod_small_prime(self) || self.gcd(&self.derivative()).degree() == 0
    }

    pub fn eval_q(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + BigRational::from(a.clone());
        }
        acc
    }

    pub fn sign_at(&self, x: &BigRational) -> i32 {
        let v = self.eval_q(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    /// Sign of the polynomial as `x -> +infinity`.
    fn sign_pos_inf(&self) -> i32 {
        if self.is_zero() {
            0
        } else if self.lead().is_positive() {
            1
        } else {
            -1
        }
    }

    /// Sign of the polynomial as `x -> -infinity`.
    fn sign_neg_inf(&self) -> i32 {
        let s = self.sign_pos_inf();
        if self.degree().is_multiple_of(2) {
            s
        } else {
            -s
        }
    }

    /// Strict upper bound on the modulus of every complex root.
    pub fn root_bound(&self) -> BigRational {
        let l = BigRational::from(self.lead().abs());
        let m = self.c[..self.c.len() - 1]
            .iter()
            .map(|a| BigRational::from(a.abs()) / &l)
            .fold(BigRational::zero(), |acc, v| if v > acc { v } else { acc });
        m + BigRational::one()
    }

    /// Norm bound `sqrt(sum a_i^2)` rounded up.
    pub fn l2_norm_ceil(&self) -> BigInt {
        let s: BigInt = self.c.iter().map(|a| a * a).sum();
        s.sqrt() + BigInt::one()
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.c.iter().map(|a| a.abs()).max().unwrap_or_else(BigInt::zero)
    }
}

/// Sturm sequence of a squarefree polynomial.
#[derive(Clone, Debug)]
pub struct Sturm {
    seq: Vec<QPoly>,
}

impl Sturm {
    pub fn new(p: &ZPoly) -> Sturm {
        let p0 = p.to_q();
        let p1 = p0.derivative();
        let mut seq = vec![p0, p1];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[n - 2].rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(-&r);
        }
        Sturm { seq }
    }

    fn changes(signs: impl Iterator<Item = i32>) -> usize {
        let mut last = 0;
        let mut n = 0;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                n += 1;
            }
            last = s;
        }
        n
    }

    fn sign_q(p: &QPoly, x: &BigRational) -> i32 {
        let v = p.eval(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    fn var_at(&self, x: &BigRational) -> usize {
        Self::changes(self.seq.iter().map(|p| Self::sign_q(p, x)))
    }

    fn var_pos_inf(&self) -> usize {
        Self::changes(
            self.seq
                .iter()
                .map(|p| p.lead().signum().to_integer().try_into().unwrap_or(0)),
        )
    }

    fn var_neg_inf(&self) -> usize {
        Self::changes(self.seq.iter().map(|p| {
            let s: i32 = p.lead().signum().to_integer().try_into().unwrap_or(0);
            if p.degree() % 2 == 0 {
                s
            } else {
                -s
            }
        }))
    }

    /// Number of distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count(&self, lo: &BigRational, hi: &BigRational) -> usize {
        self.var_at(lo) - self.var_at(hi)
    }

    /// Number of distinct real roots in the closed interval `[lo, hi]`.
    pub fn count_closed(&self, lo: &BigRational, hi: &BigRational) -> usize {
        let at_lo = usize::from(Self::sign_q(&self.seq[0], lo) == 0);
        if lo == hi {
            return at_lo;
        }
        self.count(lo, hi) + at_lo
    }

    /// Number of distinct real roots greater than `x`.
    pub fn count_above(&self, x: &BigRational) -> usize {
        self.var_at(x) - self.var_pos_inf()
    }

    pub fn count_all(&self) -> usize {
        self.var_neg_inf() - self.var_pos_inf()
    }
}

/// Isolating intervals for the real roots of a squarefree polynomial, in
/// increasing order. Rational roots found exactly are returned as
/// degenerate intervals `[q, q]`; every other interval is open and has
/// nonzero polynomial values at both endpoints.
pub fn isolate_real_roots(p: &ZPoly) -> Vec<(BigRational, BigRational)> {
    if p.degree() == 0 {
        return Vec::new();
    }
    let sturm = Sturm::new(p);
    let b = p.root_bound();
    let two = BigRational::from_integer(BigInt::from(2));
    let mut out = Vec::new();
    // Half-open intervals (lo, hi]; the flag marks a right endpoint whose
    // root has already been emitted.
    let mut stack = vec![(-b.clone(), b, false)];
    while let Some((lo, hi, excl_hi)) = stack.pop() {
        let mut n = sturm.count(&lo, &hi);
        let hi_root = p.sign_at(&hi) == 0;
        if hi_root {
            if !excl_hi {
                out.push((hi.clone(), hi.clone()));
            }
            n -= 1;
        }
        if n == 0 {
            continue;
        }
        if n == 1 && !hi_root && p.sign_at(&lo) != 0 {
            out.push((lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / &two;
        stack.push((lo, mid.clone(), false));
        stack.push((mid, hi, hi_root));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
    out
}

/// Shrinks an isolating interval `(lo, hi)` of a root of squarefree `p`
/// until its width is at most `width`.
pub fn refine_interval(
    p: &ZPoly,
    lo: &BigRational,
    hi: &BigRational,
    width: &BigRational,
) -> (BigRational, BigRational) {
    let (mut lo, mut hi) = (lo.clone(), hi.clone());
    if lo == hi {
        return (lo, hi);
    }
    let two = BigRational::from_integer(BigInt::from(2));
    let slo = p.sign_at(&lo);
    let shi = p.sign_at(&hi);
    if slo != 0 && shi != 0 && slo != shi {
        // Sign-change bisection is cheaper than Sturm counts.
        while &hi - &lo > *width {
            let mid = (&lo + &hi) / &two;
            let s = p.sign_at(&mid);
            if s == 0 {
                return (mid.clone(), mid);
            }
            if s == slo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        return (lo, hi);
    }
    let sturm = Sturm::new(p);
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / &two;
        if p.sign_at(&mid) == 0 {
            return (mid.clone(), mid);
        }
        if sturm.count(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

/// Sign of `p` just to the right of root-free point `x` is `p.sign_at(x)`;
/// exposed for callers comparing limits.
pub fn sign_at_infinity(p: &ZPoly, positive: bool) -> i32 {
    if positive {
        p.sign_pos_inf()
    } else {
        p.sign_neg_inf()
    }
}

/// Determinant of an integer matrix by fraction-free Bareiss elimination.
pub fn det_bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(sw) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, sw);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Resultant of two integer polynomials via the Sylvester matrix.
pub fn resultant(f: &ZPoly, g: &ZPoly) -> BigInt {
    if f.is_zero() || g.is_zero() {
        return BigInt::zero();
    }
    let (m, n) = (f.degree(), g.degree());
    if m == 0 {
        return num_traits::pow(f.lead(), n);
    }
    if n == 0 {
        return num_traits::pow(g.lead(), m);
    }
    let size = m + n;
    let mut s = vec![vec![BigInt::zero(); size]; size];
    for i in 0..n {
        for j in 0..=m {
            s[i][i + j] = f.coeff(m - j);
        }
    }
    for i in 0..m {
        for j in 0..=n {
            s[n + i][i + j] = g.coeff(n - j);
        }
    }
    det_bareiss(s)
}

/// Interpolating polynomial through `(x_i, y_i)` with distinct `x_i`.
pub fn interpolate(points: &[(BigInt, BigInt)]) -> QPoly {
    let n = points.len();
    // Newton divided differences.
    let mut dd: Vec<BigRational> = points.iter().map(|(_, y)| BigRational::from(y.clone())).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &points[i].0 - &points[i - level].0;
            dd[i] = num / BigRational::from(den);
        }
    }
    let mut p = QPoly::zero();
    for i in (0..n).rev() {
        let lin = QPoly::new(vec![BigRational::from(-points[i].0.clone()), BigRational::one()]);
        p = &(&p * &lin) + &QPoly::constant(dd[i].clone());
    }
    p
}

pub fn discriminant(f: &ZPoly) -> BigInt {
    let n = f.degree();
    let r = resultant(f, &f.derivative());
    let s = if (n * (n.saturating_sub(1)) / 2) % 2 == 1 {
        -r
    } else {
        r
    };
    s / f.lead()
}

/// Characteristic polynomial `det(xI - A)` of a rational matrix, computed
/// through an exact Hessenberg reduction.
pub fn charpoly_q(a: &[Vec<BigRational>]) -> QPoly {
    let n = a.len();
    let mut h: Vec<Vec<BigRational>> = a.to_vec();
    // Reduce to upper Hessenberg form by similarity transforms.
    for m in 1..n.saturating_sub(1) {
        let Some(piv) = (m..n).find(|&i| !h[i][m - 1].is_zero()) else {
            continue;
        };
        if piv != m {
            h.swap(piv, m);
            for row in h.iter_mut() {
                row.swap(piv, m);
            }
        }
        for i in m + 1..n {
            if h[i][m - 1].is_zero() {
                continue;
            }
            let u = &h[i][m - 1] / &h[m][m - 1];
            for j in 0..n {
                let t = &u * &h[m][j];
                h[i][j] = &h[i][j] - &t;
            }
            for row in h.iter_mut() {
                let t = &u * &row[i];
                row[m] = &row[m] + &t;
            }
        }
    }
    // Characteristic polynomial of a Hessenberg matrix by the standard recurrence.
    let mut p: Vec<QPoly> = vec![QPoly::one()];
    for k in 0..n {
        let xk = &QPoly::x() - &QPoly::constant(h[k][k].clone());
        let mut pk = &xk * &p[k];
        let mut prod = BigRational::one();
        for i in (0..k).rev() {
            prod = &prod * &h[i + 1][i];
            let t = &prod * &h[i][k];
            if !t.is_zero() {
                pk = &pk - &p[i].scale(&t);
            }
        }
        p.push(pk);
    }
    p.pop().expect("nonempty")
}

/// Characteristic polynomial of an integer matrix.
pub fn charpoly_z(a: &[Vec<BigInt>]) -> ZPoly {
    let q: Vec<Vec<BigRational>> = a
        .iter()
        .map(|r| r.iter().map(|v| BigRational::from(v.clone())).collect())
        .collect();
    let p = charpoly_q(&q);
    ZPoly::new(p.coeffs().iter().map(|c| c.to_integer()).collect())
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let neg = a.is_negative();
            let mag = a.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}x", if show_mag { "*" } else { "" })?,
                _ => write!(f, "{}x^{i}", if show_mag { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

/// Parses polynomials in `x` written like `x^2-x-1` or `2*x^3 + 5`.
pub fn parse_zpoly(s: &str) -> Option<ZPoly> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return None;
    }
    let mut terms: Vec<String> = Vec::new();
    let mut cur = String::new();
    for (i, ch) in s.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    terms.push(cur);
    let mut coeffs: Vec<BigInt> = Vec::new();
    for t in terms {
        let (neg, body) = match t.strip_prefix('-') {
            Some(b) => (true, b.to_string()),
            None => (false, t.trim_start_matches('+').to_string()),
        };
        let (coef, deg) = if let Some(pos) = body.find('x') {
            let c = body[..pos].trim_end_matches('*');
            let c = if c.is_empty() {
                BigInt::one()
            } else {
                BigInt::parse_bytes(c.as_bytes(), 10)?
            };
            let rest = &body[pos + 1..];
            let d = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')?.parse::<usize>().ok()?
            };
            (c, d)
        } else {
            (BigInt::parse_bytes(body.as_bytes(), 10)?, 0)
        };
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, BigInt::zero());
        }
        coeffs[deg] += if neg { -coef } else { coef };
    }
    Some(ZPoly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn display_and_parse_agree() {
        let p = ZPoly::from_i64(&[-1, -1, 1]);
        assert_eq!(p.to_string(), "x^2-x-1");
        assert_eq!(parse_zpoly("x^2-x-1"), Some(p));
        let r = ZPoly::from_i64(&[5, 0, 0, -2]);
        assert_eq!(r.to_string(), "-2*x^3+5");
        assert_eq!(parse_zpoly(&r.to_string()), Some(r));
    }

    #[test]
    fn resultant_of_linear_factors() {
        // Res(f, g) = lc(f)^deg(g) * prod g(roots of f) = g(2).
        let f = ZPoly::from_i64(&[-2, 1]);
        let g = ZPoly::from_i64(&[-5, 1]);
        assert_eq!(resultant(&f, &g), BigInt::from(-3));
    }

    #[test]
    fn discriminant_of_cubic() {
        // x^3 - 3x - 1 has discriminant 81.
        let f = ZPoly::from_i64(&[-1, -3, 0, 1]);
        assert_eq!(discriminant(&f), BigInt::from(81));
        // x^2 - x - 1 has discriminant 5.
        assert_eq!(discriminant(&ZPoly::from_i64(&[-1, -1, 1])), BigInt::from(5));
    }

    #[test]
    fn isolates_golden_ratio_roots() {
        let f = ZPoly::from_i64(&[-1, -1, 1]);
        let roots = isolate_real_roots(&f);
        assert_eq!(roots.len(), 2);
        assert!(roots[0].1 <= q(0, 1));
        assert!(roots[1].0 >= q(0, 1));
        let (lo, hi) = refine_interval(&f, &roots[1].0, &roots[1].1, &q(1, 1_000_000));
        assert!(lo < q(1618034, 1_000_000) && hi > q(1618033, 1_000_000));
    }

    #[test]
    fn isolates_rational_roots_exactly() {
        // (x)(x-1)(x+1)(2x-1)
        let f = &ZPoly::from_i64(&[0, -1, 0, 1]) * &ZPoly::from_i64(&[-1, 2]);
        let roots = isolate_real_roots(&f);
        assert_eq!(roots.len(), 4);
        let sturm = Sturm::new(&f);
        for (lo, hi) in &roots {
            assert_eq!(sturm.count_closed(lo, hi), 1);
        }
    }

    #[test]
    fn charpoly_matches_known() {
        let a = vec![
            vec![BigInt::from(0), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::from(1)],
        ];
        assert_eq!(charpoly_z(&a), ZPoly::from_i64(&[-1, -1, 1]));
        let b: Vec<Vec<BigInt>> = vec![
            vec![0.into(), 1.into(), 0.into()],
            vec![1.into(), 0.into(), 2.into()],
            vec![0.into(), 2.into(), 1.into()],
        ];
        // det(xI - B) = x^3 - x^2 - 5x + 1
        assert_eq!(charpoly_z(&b), ZPoly::from_i64(&[1, -5, -1, 1]));
    }

    #[test]
    fn squarefree_and_gcd() {
        let f = ZPoly::from_i64(&[-1, 1]).pow(3) * ZPoly::from_i64(&[2, 0, 1]);
        assert_eq!(
            f.squarefree_part(),
            ZPoly::from_i64(&[-1, 1]) * ZPoly::from_i64(&[2, 0, 1])
        );
        assert!(!f.is_squarefree());
    }
}
