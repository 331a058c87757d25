//! Real algebraic numbers represented by a minimal polynomial and an
//! isolating rational interval.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::factor::irreducible_factors;
use crate::poly::{interpolate, isolate_real_roots, refine_interval, resultant, QPoly, Sturm, ZPoly};

/// A real algebraic number.
///
/// `minpoly` is irreducible, primitive, with positive leading coefficient,
/// and `[lo, hi]` contains exactly one of its real roots. Rational numbers
/// use a degree-one polynomial and the degenerate interval `[q, q]`.
#[derive(Clone, Debug)]
pub struct AlgebraicNumber {
    minpoly: ZPoly,
    lo: BigRational,
    hi: BigRational,
    approx: f64,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn two() -> BigRational {
    rat(2)
}

/// Rational bounds `(l, u)` with `l^2 <= q <= u^2`, `u - l <= 2^-bits`, for `q >= 0`.
fn sqrt_bounds(q: &BigRational, bits: u32) -> (BigRational, BigRational) {
    let scale = BigInt::one() << bits;
    // floor(sqrt(q) * scale) = floor(sqrt(num * den * scale^2) / den)
    let n = q.numer() * q.denom() * &scale * &scale;
    let s = n.sqrt();
    let den = q.denom() * &scale;
    let l = BigRational::new(s.clone(), den.clone());
    let u = BigRational::new(s + BigInt::one(), den);
    (l, u)
}

fn interval_mul(
    alo: &BigRational,
    ahi: &BigRational,
    blo: &BigRational,
    bhi: &BigRational,
) -> (BigRational, BigRational) {
    let c = [alo * blo, alo * bhi, ahi * blo, ahi * bhi];
    let lo = c.iter().min().unwrap().clone();
    let hi = c.iter().max().unwrap().clone();
    (lo, hi)
}

/// Interval enclosure of `p([lo, hi])` by Horner evaluation.
pub fn eval_interval(p: &QPoly, lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
    let mut acc = (BigRational::zero(), BigRational::zero());
    for c in p.coeffs().iter().rev() {
        let (l, h) = interval_mul(&acc.0, &acc.1, lo, hi);
        acc = (l + c, h + c);
    }
    acc
}

/// Canonical integer polynomial through the resultant values
/// `x0 -> Res_y(f(y), h_x0(y))`, for `x0 = 0..=degree`.
fn resultant_in_x(f: &ZPoly, degree: usize, h: impl Fn(&BigInt) -> ZPoly) -> ZPoly {
    let points: Vec<(BigInt, BigInt)> = (0..=degree as i64)
        .map(|x0| {
            let x0 = BigInt::from(x0);
            let r = resultant(f, &h(&x0));
            (x0, r)
        })
        .collect();
    interpolate(&points).to_zpoly()
}

/// Polynomial vanishing on all sums `a_i + b_j` of roots of `f` and `g`.
pub fn sum_polynomial(f: &ZPoly, g: &ZPoly) -> ZPoly {
    // Res_y(f(y), g(x - y)) = c * prod (x - a_i - b_j).
    resultant_in_x(f, f.degree() * g.degree(), |x0| {
        g.compose(&ZPoly::new(vec![x0.clone(), -BigInt::one()]))
    })
}

/// Polynomial vanishing on all products `a_i * b_j` of roots of `f` and `g`.
pub fn product_polynomial(f: &ZPoly, g: &ZPoly) -> ZPoly {
    // Res_y(f(y), y^deg(g) g(x / y)) = c * prod (x - a_i b_j).
    let dg = g.degree();
    resultant_in_x(f, f.degree() * dg, |x0| {
        let mut pw = BigInt::one();
        let mut c = vec![BigInt::zero(); dg + 1];
        for j in 0..=dg {
            c[dg - j] = g.coeff(j) * &pw;
            pw *= x0;
        }
        ZPoly::new(c)
    })
}

impl AlgebraicNumber {
    fn build(minpoly: ZPoly, lo: BigRational, hi: BigRational) -> AlgebraicNumber {
        let mut a = AlgebraicNumber {
            minpoly,
            lo,
            hi,
            approx: 0.0,
        };
        a.approx = a.compute_approx();
        a
    }

    fn compute_approx(&self) -> f64 {
        if self.lo == self.hi {
            return self.lo.to_f64().unwrap_or(f64::NAN);
        }
        let w = BigRational::new(BigInt::one(), BigInt::one() << 64);
        let (lo, hi) = refine_interval(&self.minpoly, &self.lo, &self.hi, &w);
        ((lo + hi) / two()).to_f64().unwrap_or(f64::NAN)
    }

    pub fn from_rational(q: BigRational) -> AlgebraicNumber {
        let p = ZPoly::new(vec![-q.numer().clone(), q.denom().clone()]).canonical();
        AlgebraicNumber::build(p, q.clone(), q)
    }

    pub fn from_integer(n: i64) -> AlgebraicNumber {
        AlgebraicNumber::from_rational(rat(n))
    }

    pub fn zero() -> AlgebraicNumber {
        AlgebraicNumber::from_integer(0)
    }

    pub fn one() -> AlgebraicNumber {
        AlgebraicNumber::from_integer(1)
    }

    /// The unique root of `p` inside the closed interval `[lo, hi]`.
    pub fn from_root(p: &ZPoly, lo: &BigRational, hi: &BigRational) -> Result<AlgebraicNumber> {
        if p.is_zero() || p.degree() == 0 {
            return Err(Error::Invalid("polynomial has no roots".into()));
        }
        let sq = p.squarefree_part();
        if Sturm::new(&sq).count_closed(lo, hi) != 1 {
            return Err(Error::Invalid(format!(
                "interval [{lo}, {hi}] does not isolate a single root of {p}"
            )));
        }
        Ok(Self::select_root(&sq, |_| (lo.clone(), hi.clone())))
    }

    /// Chooses the irreducible factor of `poly` owning the single root
    /// eventually isolated by the shrinking intervals `bounds(k)`.
    fn select_root(poly: &ZPoly, mut bounds: impl FnMut(u32) -> (BigRational, BigRational)) -> AlgebraicNumber {
        let factors = irreducible_factors(poly);
        let sturms: Vec<Sturm> = factors.iter().map(Sturm::new).collect();
        for k in 0.. {
            let (lo, hi) = bounds(k);
            let counts: Vec<usize> = sturms.iter().map(|s| s.count_closed(&lo, &hi)).collect();
            let total: usize = counts.iter().sum();
            if total == 1 {
                let idx = counts.iter().position(|&c| c == 1).unwrap();
                let f = factors[idx].clone();
                if f.degree() == 1 {
                    let q = BigRational::new(-f.coeff(0), f.coeff(1));
                    return AlgebraicNumber::from_rational(q);
                }
                return AlgebraicNumber::build(f, lo, hi);
            }
            assert!(total > 0, "root enclosure lost its root");
        }
        unreachable!()
    }

    /// All real roots of `p`, in increasing order.
    pub fn real_roots(p: &ZPoly) -> Vec<AlgebraicNumber> {
        if p.degree() == 0 {
            return Vec::new();
        }
        let sq = p.squarefree_part();
        isolate_real_roots(&sq)
            .into_iter()
            .map(|(lo, hi)| Self::select_root(&sq, |_| (lo.clone(), hi.clone())))
            .collect()
    }

    pub fn largest_real_root(p: &ZPoly) -> Option<AlgebraicNumber> {
        if p.degree() == 0 {
            return None;
        }
        let sq = p.squarefree_part();
        let (lo, hi) = isolate_real_roots(&sq).pop()?;
        Some(Self::select_root(&sq, |_| (lo.clone(), hi.clone())))
    }

    pub fn minpoly(&self) -> &ZPoly {
        &self.minpoly
    }

    pub fn interval(&self) -> (&BigRational, &BigRational) {
        (&self.lo, &self.hi)
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree()
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.lo.clone())
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    pub fn to_f64(&self) -> f64 {
        self.approx
    }

    /// Float approximation together with an absolute error bound.
    pub fn approx(&self) -> (f64, f64) {
        let err = if self.is_rational() {
            f64::EPSILON * self.approx.abs()
        } else {
            2f64.powi(-63) + f64::EPSILON * self.approx.abs()
        };
        (self.approx, err)
    }

    /// A copy whose isolating interval has width at most `width`.
    pub fn refined(&self, width: &BigRational) -> AlgebraicNumber {
        if self.is_rational() || &self.hi - &self.lo <= *width {
            return self.clone();
        }
        let (lo, hi) = refine_interval(&self.minpoly, &self.lo, &self.hi, width);
        AlgebraicNumber {
            minpoly: self.minpoly.clone(),
            lo,
            hi,
            approx: self.approx,
        }
    }

    fn halved(&self) -> AlgebraicNumber {
        let w = (&self.hi - &self.lo) / rat(4);
        self.refined(&w)
    }

    /// Checks the representation invariants.
    pub fn is_well_formed(&self) -> bool {
        self.minpoly == self.minpoly.canonical()
            && self.minpoly.degree() >= 1
            && Sturm::new(&self.minpoly).count_closed(&self.lo, &self.hi) == 1
    }

    pub fn is_algebraic_integer(&self) -> bool {
        self.minpoly.is_monic()
    }

    pub fn signum(&self) -> i32 {
        if self.is_rational() {
            return self.lo.signum().to_i32().unwrap();
        }
        // Irreducible of degree >= 2: the root is never zero.
        let mut a = self.clone();
        loop {
            if a.lo.is_positive() || (a.lo.is_zero() && a.hi.is_positive()) {
                return 1;
            }
            if a.hi.is_negative() || (a.hi.is_zero() && a.lo.is_negative()) {
                return -1;
            }
            a = a.halved();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.is_rational() && self.lo.is_zero()
    }

    pub fn neg(&self) -> AlgebraicNumber {
        if let Some(q) = self.to_rational() {
            return AlgebraicNumber::from_rational(-q);
        }
        AlgebraicNumber::build(self.minpoly.negate_var().canonical(), -&self.hi, -&self.lo)
    }

    pub fn recip(&self) -> Result<AlgebraicNumber> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.to_rational() {
            return Ok(AlgebraicNumber::from_rational(q.recip()));
        }
        let mut a = self.clone();
        while !(a.lo.is_positive() || a.hi.is_negative()) {
            a = a.halved();
        }
        Ok(AlgebraicNumber::build(
            a.minpoly.reverse().canonical(),
            a.hi.recip(),
            a.lo.recip(),
        ))
    }

    fn add_rational(&self, q: &BigRational) -> AlgebraicNumber {
        // Root shifted by q satisfies m(x - q).
        let shift = QPoly::new(vec![-q.clone(), BigRational::one()]);
        let p = self.minpoly.to_q().compose(&shift).to_zpoly();
        AlgebraicNumber::build(p, &self.lo + q, &self.hi + q)
    }

    fn mul_rational(&self, q: &BigRational) -> AlgebraicNumber {
        if q.is_zero() {
            return AlgebraicNumber::zero();
        }
        // Root scaled by q satisfies m(x / q).
        let scale = QPoly::new(vec![BigRational::zero(), q.recip()]);
        let p = self.minpoly.to_q().compose(&scale).to_zpoly();
        let (lo, hi) = if q.is_positive() {
            (&self.lo * q, &self.hi * q)
        } else {
            (&self.hi * q, &self.lo * q)
        };
        AlgebraicNumber::build(p, lo, hi)
    }

    pub fn add(&self, other: &AlgebraicNumber) -> AlgebraicNumber {
        match (self.to_rational(), other.to_rational()) {
            (Some(a), Some(b)) => return AlgebraicNumber::from_rational(a + b),
            (Some(a), None) => return other.add_rational(&a),
            (None, Some(b)) => return self.add_rational(&b),
            _ => {}
        }
        let poly = sum_polynomial(&self.minpoly, &other.minpoly);
        let (mut a, mut b) = (self.clone(), other.clone());
        Self::select_root(&poly, |k| {
            if k > 0 {
                a = a.halved();
                b = b.halved();
            }
            (&a.lo + &b.lo, &a.hi + &b.hi)
        })
    }

    pub fn sub(&self, other: &AlgebraicNumber) -> AlgebraicNumber {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &AlgebraicNumber) -> AlgebraicNumber {
        match (self.to_rational(), other.to_rational()) {
            (Some(a), Some(b)) => return AlgebraicNumber::from_rational(a * b),
            (Some(a), None) => return other.mul_rational(&a),
            (None, Some(b)) => return self.mul_rational(&b),
            _ => {}
        }
        let poly = product_polynomial(&self.minpoly, &other.minpoly);
        let (mut a, mut b) = (self.clone(), other.clone());
        Self::select_root(&poly, |k| {
            if k > 0 {
                a = a.halved();
                b = b.halved();
            }
            interval_mul(&a.lo, &a.hi, &b.lo, &b.hi)
        })
    }

    pub fn div(&self, other: &AlgebraicNumber) -> Result<AlgebraicNumber> {
        Ok(self.mul(&other.recip()?))
    }

    pub fn pow(&self, e: u32) -> AlgebraicNumber {
        let mut acc = AlgebraicNumber::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Nonnegative square root; `None` for negative input.
    pub fn sqrt(&self) -> Option<AlgebraicNumber> {
        match self.signum() {
            -1 => return None,
            0 => return Some(AlgebraicNumber::zero()),
            _ => {}
        }
        // Roots of m(x^2) include +-sqrt of every root of m.
        let x2 = ZPoly::monomial(BigInt::one(), 2);
        let poly = self.minpoly.compose(&x2);
        let mut a = self.clone();
        while !a.lo.is_positive() {
            a = a.halved();
        }
        Some(Self::select_root(&poly, |k| {
            if k > 0 {
                a = a.halved();
            }
            let bits = 8 + 4 * k;
            (sqrt_bounds(&a.lo, bits).0, sqrt_bounds(&a.hi, bits).1)
        }))
    }

    /// Exact comparison.
    pub fn cmp_exact(&self, other: &AlgebraicNumber) -> Ordering {
        if let (Some(a), Some(b)) = (self.to_rational(), other.to_rational()) {
            return a.cmp(&b);
        }
        if self.minpoly == other.minpoly {
            let lo = (&self.lo).max(&other.lo).clone();
            let hi = (&self.hi).min(&other.hi).clone();
            if lo <= hi && Sturm::new(&self.minpoly).count_closed(&lo, &hi) == 1 {
                return Ordering::Equal;
            }
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            if a.hi < b.lo {
                return Ordering::Less;
            }
            if b.hi < a.lo {
                return Ordering::Greater;
            }
            a = a.halved();
            b = b.halved();
        }
    }

    /// True iff every complex conjugate `g` of this number satisfies `|g| <= self`.
    ///
    /// Decided exactly: the squared moduli of non-real conjugates and the
    /// squares of real conjugates are all real roots of the polynomial
    /// whose roots are pairwise products of conjugates, so dominance holds
    /// iff that polynomial has no real root above `self^2`.
    pub fn conjugate_dominance(&self) -> bool {
        match self.signum() {
            -1 => return false,
            0 => return true,
            _ => {}
        }
        if self.is_rational() {
            return true;
        }
        let q = product_polynomial(&self.minpoly, &self.minpoly).squarefree_part();
        let sq = self.mul(self);
        let sturm = Sturm::new(&q);
        let mut s = sq;
        loop {
            if sturm.count_closed(&s.lo, &s.hi) == 1 {
                return sturm.count_above(&s.hi) == 0;
            }
            s = s.halved();
        }
    }

    /// For `1 <= self < 2`, returns `n` in `3..=1000` with `self = 2cos(pi/n)`.
    pub fn two_cos_quantization(&self) -> Option<u32> {
        if self.cmp_exact(&AlgebraicNumber::one()) == Ordering::Less
            || self.cmp_exact(&AlgebraicNumber::from_integer(2)) != Ordering::Less
        {
            return None;
        }
        let v = self.to_f64();
        let theta = (v / 2.0).clamp(-1.0, 1.0).acos();
        let est = if theta > 0.0 {
            (std::f64::consts::PI / theta).round() as i64
        } else {
            1000
        };
        for n in (est - 2)..=(est + 2) {
            if !(3..=1000).contains(&n) {
                continue;
            }
            let n = n as u32;
            if euler_phi(2 * n) / 2 != self.degree() as u32 {
                continue;
            }
            if self.is_largest_root_of(&two_cos_polynomial(n)) {
                return Some(n);
            }
        }
        None
    }

    fn is_largest_root_of(&self, p: &ZPoly) -> bool {
        if p.div_q(&self.minpoly).is_none() {
            return false;
        }
        let sq = p.squarefree_part();
        let sturm = Sturm::new(&sq);
        let mut a = self.clone();
        loop {
            if sturm.count_closed(&a.lo, &a.hi) == 1 {
                return sturm.count_above(&a.hi) == 0;
            }
            a = a.halved();
        }
    }

    /// Radical form for degree at most two, e.g. `(1+sqrt(5))/2`.
    pub fn radical_string(&self) -> Option<String> {
        if let Some(q) = self.to_rational() {
            return Some(format_rational(&q));
        }
        if self.degree() != 2 {
            return None;
        }
        let (c, b, a) = (self.minpoly.coeff(0), self.minpoly.coeff(1), self.minpoly.coeff(2));
        let disc = &b * &b - BigInt::from(4) * &a * &c;
        let (k, d) = split_square(&disc);
        // root = (-b +- k sqrt(d)) / (2a); the sign follows the position
        // relative to the midpoint -b/2a.
        let centre = BigRational::new(-b.clone(), BigInt::from(2) * &a);
        let mut s = self.clone();
        while s.lo <= centre && centre <= s.hi {
            s = s.halved();
        }
        let plus = s.lo > centre;
        let den = BigInt::from(2) * &a;
        let g = b.gcd(&k).gcd(&den);
        let (b, k, den) = (-&b / &g, &k / &g, &den / &g);
        let (b, k, den) = if den.is_negative() { (-b, -k, -den) } else { (b, k, den) };
        let k = if plus { k } else { -k };
        let rad = if k.abs().is_one() {
            format!("sqrt({d})")
        } else {
            format!("{}*sqrt({d})", k.abs())
        };
        let num = if b.is_zero() {
            format!("{}{rad}", if k.is_negative() { "-" } else { "" })
        } else {
            format!("{b}{}{rad}", if k.is_negative() { "-" } else { "+" })
        };
        Some(if den.is_one() {
            num
        } else if b.is_zero() {
            format!("{num}/{den}")
        } else {
            format!("({num})/{den}")
        })
    }

    /// Decimal rendering with `digits` digits after the point.
    pub fn decimal_string(&self, digits: u32) -> String {
        // Refine until both endpoints round to the same decimal.
        let mut extra = 2;
        loop {
            let w = BigRational::new(BigInt::one(), BigInt::from(10).pow(digits + extra));
            let r = self.refined(&w);
            let (a, b) = (format_decimal(&r.lo, digits), format_decimal(&r.hi, digits));
            if a == b || extra > 40 {
                return a;
            }
            extra += 4;
        }
    }
}

pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Rounds `q` to `digits` decimal places.
pub fn format_decimal(q: &BigRational, digits: u32) -> String {
    let scale = BigInt::from(10).pow(digits);
    let scaled = q * BigRational::from_integer(scale.clone());
    let rounded = scaled.round().to_integer();
    let neg = rounded.is_negative();
    let mag = rounded.abs();
    let (ip, fp) = mag.div_rem(&scale);
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{ip}")
    } else {
        format!("{sign}{ip}.{:0>width$}", fp.to_string(), width = digits as usize)
    }
}

/// Writes `n = k^2 d` with `d` squarefree (sign kept on `d`).
fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    let mut k = BigInt::one();
    let mut d = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= d.abs() {
        let pp = &p * &p;
        while (&d % &pp).is_zero() {
            d /= &pp;
            k *= &p;
        }
        p += 1;
    }
    (k, d)
}

pub fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// `D_n(x) + 2` where `D_n(2cos t) = 2cos(n t)`; its largest root is `2cos(pi/n)`.
pub fn two_cos_polynomial(n: u32) -> ZPoly {
    let x = ZPoly::x();
    let mut prev = ZPoly::constant(BigInt::from(2));
    let mut cur = x.clone();
    for _ in 1..n {
        let next = &(&x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    &cur + &ZPoly::constant(BigInt::from(2))
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_exact(other) == Ordering::Equal
    }
}

impl Eq for AlgebraicNumber {}

impl PartialOrd for AlgebraicNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_exact(other)
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.to_rational() {
            return write!(f, "{}", format_rational(&q));
        }
        // Widen to the coarsest decimal grid that still isolates the root.
        let sturm = Sturm::new(&self.minpoly);
        let mut digits = 1u32;
        loop {
            let scale = BigRational::from_integer(BigInt::from(10).pow(digits));
            let w = BigRational::new(BigInt::one(), BigInt::from(10).pow(digits + 1));
            let r = self.refined(&w);
            let lo = (&r.lo * &scale).floor() / &scale;
            let hi = (&r.hi * &scale).ceil() / &scale;
            if sturm.count_closed(&lo, &hi) == 1 {
                return write!(
                    f,
                    "root of {} in ({}, {}) ≈ {}",
                    self.minpoly,
                    format_decimal(&lo, digits),
                    format_decimal(&hi, digits),
                    self.decimal_string(10)
                );
            }
            digits += 1;
        }
    }
}

/// Parses `root of P in (lo, hi)` (an optional `≈ ...` suffix is ignored)
/// or an arithmetic expression built from integers, decimals, `sqrt(...)`,
/// `+ - * /` and parentheses.
pub fn parse_algebraic(s: &str) -> Result<AlgebraicNumber> {
    let s = s.split('≈').next().unwrap_or("").trim();
    if let Some(rest) = s.strip_prefix("root of") {
        let (poly, iv) = rest
            .split_once(" in ")
            .ok_or_else(|| Error::Invalid(format!("malformed root expression: {s}")))?;
        let p =
            crate::poly::parse_zpoly(poly).ok_or_else(|| Error::Invalid(format!("malformed polynomial: {poly}")))?;
        let iv = iv.trim().trim_start_matches('(').trim_end_matches(')');
        let (lo, hi) = iv
            .split_once(',')
            .ok_or_else(|| Error::Invalid(format!("malformed interval: {iv}")))?;
        let lo = parse_decimal(lo.trim())?;
        let hi = parse_decimal(hi.trim())?;
        return AlgebraicNumber::from_root(&p, &lo, &hi);
    }
    let mut parser = ExprParser {
        chars: s.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
    };
    let v = parser.expr()?;
    if parser.pos != parser.chars.len() {
        return Err(Error::Invalid(format!("trailing input in expression: {s}")));
    }
    Ok(v)
}

pub fn parse_decimal(s: &str) -> Result<BigRational> {
    let bad = || Error::Invalid(format!("malformed number: {s}"));
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::parse_bytes(n.trim().as_bytes(), 10).ok_or_else(bad)?;
        let d = BigInt::parse_bytes(d.trim().as_bytes(), 10).ok_or_else(bad)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        return Ok(BigRational::new(n, d));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s),
    };
    let (ip, fp) = body.split_once('.').unwrap_or((body, ""));
    if ip.is_empty() && fp.is_empty() {
        return Err(bad());
    }
    let digits = format!("{ip}{fp}");
    let n = BigInt::parse_bytes(digits.as_bytes(), 10).ok_or_else(bad)?;
    let q = BigRational::new(n, BigInt::from(10).pow(fp.len() as u32));
    Ok(if neg { -q } else { q })
}

struct ExprParser {
    chars: Vec<char>,
    pos: usize,
}

impl ExprParser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<AlgebraicNumber> {
        let mut v = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    v = v.add(&self.term()?);
                }
                '-' => {
                    self.pos += 1;
                    v = v.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(v)
    }

    fn term(&mut self) -> Result<AlgebraicNumber> {
        let mut v = self.factor()?;
        while let Some(c) = self.peek() {
            match c {
                '*' => {
                    self.pos += 1;
                    v = v.mul(&self.factor()?);
                }
                '/' => {
                    self.pos += 1;
                    v = v.div(&self.factor()?)?;
                }
                _ => break,
            }
        }
        Ok(v)
    }

    fn factor(&mut self) -> Result<AlgebraicNumber> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Some('s') => {
                let word: String = self.chars[self.pos..].iter().take(4).collect();
                if word != "sqrt" {
                    return Err(Error::Invalid("expected sqrt".into()));
                }
                self.pos += 4;
                self.expect('(')?;
                let v = self.expr()?;
                self.expect(')')?;
                v.sqrt()
                    .ok_or_else(|| Error::Invalid("square root of a negative number".into()))
            }
            Some(c) if c.is_ascii_digit() || c == '.' => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit() || c == '.') {
                    self.pos += 1;
                }
                let text: String = self.chars[start..self.pos].iter().collect();
                Ok(AlgebraicNumber::from_rational(parse_decimal(&text)?))
            }
            other => Err(Error::Invalid(format!("unexpected token {other:?} in expression"))),
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Invalid(format!("expected '{c}' in expression")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi() -> AlgebraicNumber {
        AlgebraicNumber::largest_real_root(&ZPoly::from_i64(&[-1, -1, 1])).unwrap()
    }

    fn sqrt_int(n: i64) -> AlgebraicNumber {
        AlgebraicNumber::from_integer(n).sqrt().unwrap()
    }

    #[test]
    fn golden_ratio_identities() {
        let p = phi();
        assert!((p.to_f64() - 1.618_033_988_749_895).abs() < 1e-12);
        let one_minus = AlgebraicNumber::one().sub(&p);
        assert_eq!(p.add(&one_minus), AlgebraicNumber::one());
        let sq = p.mul(&p);
        assert_eq!(sq.minpoly(), &ZPoly::from_i64(&[1, -3, 1]));
        assert!((sq.to_f64() - (3.0 + 5f64.sqrt()) / 2.0).abs() < 1e-12);
        assert_eq!(sq, p.add(&AlgebraicNumber::one()));
    }

    #[test]
    fn sqrt_two_squared_is_two() {
        let r = sqrt_int(2);
        assert_eq!(r.mul(&r), AlgebraicNumber::from_integer(2));
        assert_eq!(r.mul(&r).to_integer(), Some(BigInt::from(2)));
    }

    #[test]
    fn division_and_errors() {
        let r = sqrt_int(2);
        assert_eq!(r.div(&r).unwrap(), AlgebraicNumber::one());
        assert_eq!(r.div(&AlgebraicNumber::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn algebraic_integer_predicate() {
        assert!(phi().is_algebraic_integer());
        let half = AlgebraicNumber::from_rational(BigRational::new(1.into(), 2.into()));
        assert!(!half.is_algebraic_integer());
        let h = sqrt_int(2).div(&AlgebraicNumber::from_integer(2)).unwrap();
        assert_eq!(h.minpoly(), &ZPoly::from_i64(&[-1, 0, 2]));
        assert!(!h.is_algebraic_integer());
    }

    #[test]
    fn dominance_examples() {
        assert!(phi().conjugate_dominance());
        let neg = sqrt_int(3).neg();
        assert!(!neg.conjugate_dominance());
        let cubic = AlgebraicNumber::largest_real_root(&ZPoly::from_i64(&[-1, -4, 0, 1])).unwrap();
        assert!(cubic.conjugate_dominance());
        // Smaller positive root of x^2 - 3x + 1 is dominated by its conjugate.
        let small = AlgebraicNumber::real_roots(&ZPoly::from_i64(&[1, -3, 1]))[0].clone();
        assert!(!small.conjugate_dominance());
        // Real root of x^3 - 2 is beaten by nothing: complex roots share its modulus.
        let cbrt2 = AlgebraicNumber::largest_real_root(&ZPoly::from_i64(&[-2, 0, 0, 1])).unwrap();
        assert!(cbrt2.conjugate_dominance());
        // x^3 - x - 1: real root 1.3247 but complex pair has modulus 0.8688.
        let plastic = AlgebraicNumber::largest_real_root(&ZPoly::from_i64(&[-1, -1, 0, 1])).unwrap();
        assert!(plastic.conjugate_dominance());
        // x^3 + x - 1: real root 0.6823, complex pair of modulus 1.2106.
        let r = AlgebraicNumber::largest_real_root(&ZPoly::from_i64(&[-1, 1, 0, 1])).unwrap();
        assert!(!r.conjugate_dominance());
    }

    #[test]
    fn quantization_examples() {
        assert_eq!(sqrt_int(2).two_cos_quantization(), Some(4));
        assert_eq!(phi().two_cos_quantization(), Some(5));
        assert_eq!(AlgebraicNumber::one().two_cos_quantization(), Some(3));
        assert_eq!(sqrt_int(3).two_cos_quantization(), Some(6));
        let x = AlgebraicNumber::from_rational(BigRational::new(19.into(), 10.into()));
        assert_eq!(x.two_cos_quantization(), None);
        // 2cos(pi/7) is the largest root of x^3 - x^2 - 2x + 1.
        let c7 = AlgebraicNumber::largest_real_root(&ZPoly::from_i64(&[1, -2, -1, 1])).unwrap();
        assert_eq!(c7.two_cos_quantization(), Some(7));
        // The other roots of the same polynomial are not of the form 2cos(pi/n).
        let mid = AlgebraicNumber::real_roots(&ZPoly::from_i64(&[1, -2, -1, 1]))[1].clone();
        assert_eq!(mid.two_cos_quantization(), None);
    }

    #[test]
    fn niven_scan_over_rationals() {
        // No rational in [1, 2) other than 1 equals 2cos(pi/n).
        for num in 10..20 {
            let q = AlgebraicNumber::from_rational(BigRational::new(num.into(), 10.into()));
            let want = if num == 10 { Some(3) } else { None };
            assert_eq!(q.two_cos_quantization(), want, "{num}/10");
        }
    }

    #[test]
    fn rendering_and_parsing() {
        let p = phi();
        let s = p.to_string();
        assert!(s.starts_with("root of x^2-x-1 in (1.6, 1.7) ≈ 1.6180339887"), "{s}");
        assert_eq!(parse_algebraic(&s).unwrap(), p);
        assert_eq!(p.radical_string().unwrap(), "(1+sqrt(5))/2");
        let h = sqrt_int(2).div(&AlgebraicNumber::from_integer(2)).unwrap();
        assert_eq!(h.radical_string().unwrap(), "sqrt(2)/2");
        assert_eq!(h.neg().radical_string().unwrap(), "-sqrt(2)/2");
        assert_eq!(sqrt_int(8).radical_string().unwrap(), "2*sqrt(2)");
        for text in ["(1+sqrt(5))/2", "sqrt(2)/2", "-sqrt(2)/2", "2*sqrt(2)", "3/7", "1.25"] {
            let v = parse_algebraic(text).unwrap();
            let back = v.radical_string().unwrap();
            assert_eq!(parse_algebraic(&back).unwrap(), v, "{text}");
        }
        assert_eq!(
            parse_algebraic("1-(1+sqrt(5))/2").unwrap().radical_string().unwrap(),
            "(1-sqrt(5))/2"
        );
    }

    #[test]
    fn sturm_invariant_after_operations() {
        let a = phi();
        let b = sqrt_int(2);
        for v in [a.add(&b), a.mul(&b), a.sub(&b), a.div(&b).unwrap(), b.sqrt().unwrap()] {
            assert!(v.is_well_formed(), "{v}");
        }
    }
}
