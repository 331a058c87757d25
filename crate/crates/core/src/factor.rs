//! Factorization of integer polynomials (Berlekamp modulo a small prime,
//! Hensel lifting, and subset recombination).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::ZPoly;

type Fp = Vec<u64>;

fn fp_trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn fp_from(f: &ZPoly, p: u64) -> Fp {
    let pb = BigInt::from(p);
    fp_trim(
        f.coeffs()
            .iter()
            .map(|a| a.mod_floor(&pb).to_u64().expect("reduced"))
            .collect(),
    )
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a % p, p - 2, p)
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn fp_mul(a: &Fp, b: &Fp, p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    fp_trim(out)
}

fn fp_sub(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    fp_trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect(),
    )
}

fn fp_divrem(a: &Fp, d: &Fp, p: u64) -> (Fp, Fp) {
    assert!(!d.is_empty());
    if a.len() < d.len() {
        return (Vec::new(), a.clone());
    }
    let mut r = a.clone();
    let dd = d.len() - 1;
    let inv = inv_mod(d[dd], p);
    let mut q = vec![0u64; a.len() - dd];
    for k in (0..q.len()).rev() {
        let t = r[k + dd] * inv % p;
        if t != 0 {
            for (j, &b) in d.iter().enumerate() {
                r[k + j] = (r[k + j] + p - t * b % p) % p;
            }
        }
        q[k] = t;
    }
    r.truncate(dd);
    (fp_trim(q), fp_trim(r))
}

fn fp_monic(a: &Fp, p: u64) -> Fp {
    match a.last() {
        None => Vec::new(),
        Some(&l) => {
            let inv = inv_mod(l, p);
            a.iter().map(|&x| x * inv % p).collect()
        }
    }
}

fn fp_gcd(a: &Fp, b: &Fp, p: u64) -> Fp {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = fp_divrem(&a, &b, p).1;
        a = b;
        b = r;
    }
    fp_monic(&a, p)
}

/// Returns `(s, t)` with `s*a + t*b = 1` modulo `p`, for coprime `a`, `b`.
fn fp_bezout(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1): (Fp, Fp) = (vec![1], Vec::new());
    let (mut t0, mut t1): (Fp, Fp) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        r0 = r1;
        r1 = r;
        let s2 = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        s0 = s1;
        s1 = s2;
        let t2 = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        t0 = t1;
        t1 = t2;
    }
    assert_eq!(r0.len(), 1, "bezout inputs must be coprime");
    let inv = inv_mod(r0[0], p);
    (
        s0.iter().map(|&x| x * inv % p).collect(),
        t0.iter().map(|&x| x * inv % p).collect(),
    )
}

fn fp_derivative(a: &Fp, p: u64) -> Fp {
    fp_trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &x)| (i as u64 % p) * x % p)
            .collect(),
    )
}

fn fp_powmod_x(e: u64, f: &Fp, p: u64) -> Fp {
    let mut acc: Fp = vec![1];
    let mut base: Fp = fp_divrem(&vec![0, 1], f, p).1;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = fp_divrem(&fp_mul(&acc, &base, p), f, p).1;
        }
        base = fp_divrem(&fp_mul(&base, &base, p), f, p).1;
        e >>= 1;
    }
    acc
}

/// Berlekamp factorization of a monic squarefree polynomial modulo `p`.
fn berlekamp(f: &Fp, p: u64) -> Vec<Fp> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.clone()];
    }
    // Row i holds x^{ip} mod f.
    let xp = fp_powmod_x(p, f, p);
    let mut rows: Vec<Fp> = Vec::with_capacity(n);
    let mut cur: Fp = vec![1];
    for _ in 0..n {
        rows.push(cur.clone());
        cur = fp_divrem(&fp_mul(&cur, &xp, p), f, p).1;
    }
    // Matrix (Q - I)^T, solve for its null space.
    let mut m = vec![vec![0u64; n]; n];
    for (i, r) in rows.iter().enumerate() {
        for j in 0..n {
            let v = r.get(j).copied().unwrap_or(0);
            m[j][i] = v;
        }
        m[i][i] = (m[i][i] + p - 1) % p;
    }
    let basis = nullspace_mod(m, p);
    let k = basis.len();
    let mut factors = vec![f.clone()];
    if k == 1 {
        return factors;
    }
    for v in basis.iter() {
        if factors.len() == k {
            break;
        }
        let g = fp_trim(v.clone());
        if g.len() <= 1 {
            continue;
        }
        let mut next = Vec::new();
        for u in factors {
            if u.len() <= 2 {
                next.push(u);
                continue;
            }
            let mut rest = u;
            for s in 0..p {
                if rest.len() <= 2 {
                    break;
                }
                let gs = fp_sub(&g, &vec![s], p);
                let h = fp_gcd(&rest, &gs, p);
                if h.len() > 1 && h.len() < rest.len() {
                    rest = fp_divrem(&rest, &h, p).0;
                    rest = fp_monic(&rest, p);
                    next.push(h);
                }
            }
            next.push(rest);
        }
        factors = next;
    }
    assert_eq!(factors.len(), k, "berlekamp split incomplete");
    factors
}

/// Null space of a square matrix over F_p, as a list of basis vectors.
fn nullspace_mod(mut m: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = inv_mod(m[r][c], p);
        for j in 0..cols {
            m[r][j] = m[r][j] * inv % p;
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let t = m[i][c];
                for j in 0..cols {
                    m[i][j] = (m[i][j] + p - t * m[r][j] % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free {
        let mut v = vec![0u64; cols];
        v[fc] = 1;
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = (p - m[ri][fc]) % p;
        }
        basis.push(v);
    }
    // Put the constant vector first so splitting starts from nontrivial ones.
    basis.sort_by_key(|v| fp_trim(v.clone()).len());
    basis
}

/// True if `f` stays squarefree of the same degree modulo one of a few
/// small primes, which certifies squarefreeness over the rationals.
pub(crate) fn squarefree_mod_small_prime(f: &ZPoly) -> bool {
    let n = f.degree();
    if n == 0 {
        return true;
    }
    small_primes().take(8).any(|p| {
        let fp = fp_from(f, p);
        fp.len() == n + 1 && fp_gcd(&fp, &fp_derivative(&fp, p), p).len() == 1
    })
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..20_000).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

// --- Hensel lifting over Z / p^e -------------------------------------------

type Zm = Vec<BigInt>;

fn zm_reduce(a: &[BigInt], m: &BigInt) -> Zm {
    let mut v: Zm = a.iter().map(|x| x.mod_floor(m)).collect();
    while v.last().is_some_and(|x| x.is_zero()) {
        v.pop();
    }
    v
}

fn zm_mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Zm {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    zm_reduce(&out, m)
}

fn to_fp(a: &[BigInt], p: u64) -> Fp {
    let pb = BigInt::from(p);
    fp_trim(a.iter().map(|x| x.mod_floor(&pb).to_u64().unwrap()).collect())
}

fn from_fp(a: &Fp) -> Zm {
    a.iter().map(|&x| BigInt::from(x)).collect()
}

/// Lifts `F = g h (mod p)` with `g`, `h` monic to a factorization modulo `p^e`.
fn hensel_pair(f: &Zm, g: &Fp, h: &Fp, p: u64, e: u32) -> (Zm, Zm) {
    let (s, t) = fp_bezout(g, h, p);
    let pb = BigInt::from(p);
    let mut gg = from_fp(g);
    let mut hh = from_fp(h);
    let mut q = pb.clone();
    for _ in 1..e {
        let next = &q * &pb;
        let prod = zm_mul(&gg, &hh, &next);
        let n = f.len().max(prod.len());
        let diff: Zm = (0..n)
            .map(|i| {
                let a = f.get(i).cloned().unwrap_or_default();
                let b = prod.get(i).cloned().unwrap_or_default();
                (a - b).mod_floor(&next) / &q
            })
            .collect();
        let err = to_fp(&diff, p);
        if !err.is_empty() {
            let (quot, a) = fp_divrem(&fp_mul(&t, &err, p), g, p);
            let b = fp_divrem(&fp_add(&fp_mul(&s, &err, p), &fp_mul(&quot, h, p), p), h, p).1;
            gg = add_scaled(&gg, &a, &q);
            hh = add_scaled(&hh, &b, &q);
        }
        q = next;
    }
    (zm_reduce(&gg, &q), zm_reduce(&hh, &q))
}

fn fp_add(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    fp_trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

fn add_scaled(a: &[BigInt], b: &Fp, q: &BigInt) -> Zm {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() + q * BigInt::from(b.get(i).copied().unwrap_or(0)))
        .collect()
}

fn lift_all(f: &Zm, factors: &[Fp], p: u64, e: u32) -> Vec<Zm> {
    if factors.len() == 1 {
        let m = BigInt::from(p).pow(e);
        return vec![zm_reduce(f, &m)];
    }
    let rest = factors[1..].iter().fold(vec![1u64], |acc, g| fp_mul(&acc, g, p));
    let (g, h) = hensel_pair(f, &factors[0], &rest, p, e);
    let mut out = vec![g];
    out.extend(lift_all(&h, &factors[1..], p, e));
    out
}

fn symmetric(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m / 2;
    ZPoly::new(
        a.iter()
            .map(|x| {
                let r = x.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Irreducible factors of a squarefree integer polynomial, canonical and sorted.
///
/// The input's content is dropped. Constant input gives an empty list.
pub fn factor_squarefree(f: &ZPoly) -> Vec<ZPoly> {
    let f = f.canonical();
    if f.degree() == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut f = f;
    // Pull out powers of x first (squarefree means at most one).
    if f.coeff(0).is_zero() {
        out.push(ZPoly::x());
        f = f.div_exact(&ZPoly::x()).expect("x divides");
    }
    if f.degree() >= 1 {
        out.extend(zassenhaus(&f));
    }
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs())));
    out
}

/// Distinct irreducible factors of any nonzero integer polynomial.
pub fn irreducible_factors(f: &ZPoly) -> Vec<ZPoly> {
    factor_squarefree(&f.squarefree_part())
}

pub fn is_irreducible(f: &ZPoly) -> bool {
    f.degree() >= 1 && f.is_squarefree() && factor_squarefree(f).len() == 1
}

fn zassenhaus(f: &ZPoly) -> Vec<ZPoly> {
    let n = f.degree();
    if n == 1 {
        return vec![f.canonical()];
    }
    let lc = f.lead();
    // Pick the prime giving the fewest modular factors among a few candidates.
    let mut best: Option<(u64, Vec<Fp>)> = None;
    let mut tried = 0;
    for p in small_primes() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = fp_monic(&fp_from(f, p), p);
        if fp.len() != n + 1 {
            continue;
        }
        if fp_gcd(&fp, &fp_derivative(&fp, p), p).len() != 1 {
            continue;
        }
        let facs = berlekamp(&fp, p);
        if facs.len() == 1 {
            return vec![f.canonical()];
        }
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        tried += 1;
        if tried >= 6 {
            break;
        }
    }
    let (p, modular) = best.expect("a good prime exists for squarefree input");

    // Coefficient bound for any factor, scaled by the leading coefficient.
    let bound = (BigInt::one() << (n + 1)) * f.l2_norm_ceil() * lc.abs();
    let pb = BigInt::from(p);
    let mut e = 1u32;
    let mut m = pb.clone();
    while m <= &bound * 2 {
        m *= &pb;
        e += 1;
    }
    let lc_inv = lc.modinv(&m).expect("lc invertible mod p^e");
    let monic_f: Zm = f.coeffs().iter().map(|a| (a * &lc_inv).mod_floor(&m)).collect();
    let lifted = lift_all(&monic_f, &modular, p, e);

    let mut remaining: Vec<Zm> = lifted;
    let mut cur = f.clone();
    let mut out = Vec::new();
    let mut s = 1;
    while 2 * s <= remaining.len() {
        let mut found = None;
        for combo in combinations(remaining.len(), s) {
            let lcur = cur.lead();
            let mut g: Zm = vec![lcur.mod_floor(&m)];
            for &i in &combo {
                g = zm_mul(&g, &remaining[i], &m);
            }
            let cand = symmetric(&g, &m).canonical();
            if cand.degree() == 0 {
                continue;
            }
            if let Some(q) = cur.div_exact(&cand) {
                found = Some((combo, cand, q));
                break;
            }
        }
        match found {
            Some((combo, cand, q)) => {
                out.push(cand);
                cur = q.canonical();
                remaining = remaining
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, g)| g)
                    .collect();
            }
            None => s += 1,
        }
    }
    if cur.degree() >= 1 {
        out.push(cur.canonical());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64]) -> ZPoly {
        ZPoly::from_i64(c)
    }

    fn product(fs: &[ZPoly]) -> ZPoly {
        fs.iter().fold(ZPoly::one(), |acc, f| &acc * f)
    }

    #[test]
    fn irreducible_stays_whole() {
        assert_eq!(factor_squarefree(&z(&[-1, -1, 1])), vec![z(&[-1, -1, 1])]);
        assert!(is_irreducible(&z(&[-2, 0, 1])));
        assert!(is_irreducible(&z(&[1, 0, -10, 0, 1])));
    }

    #[test]
    fn splits_products() {
        let a = z(&[-1, -1, 1]);
        let b = z(&[-2, 0, 1]);
        let c = z(&[3, 2]);
        let f = product(&[a.clone(), b.clone(), c.clone()]);
        let mut got = factor_squarefree(&f);
        got.sort_by(|x, y| x.coeffs().cmp(y.coeffs()));
        let mut want = vec![a, b, c];
        want.sort_by(|x, y| x.coeffs().cmp(y.coeffs()));
        assert_eq!(got, want);
    }

    #[test]
    fn swinnerton_dyer_like_cases() {
        // x^4 - 10x^2 + 1 splits into quadratics mod every prime.
        let f = z(&[1, 0, -10, 0, 1]);
        assert_eq!(factor_squarefree(&f).len(), 1);
        // (x^2-2)(x^2-3)(x^2-6)
        let g = product(&[z(&[-2, 0, 1]), z(&[-3, 0, 1]), z(&[-6, 0, 1])]);
        assert_eq!(factor_squarefree(&g).len(), 3);
    }

    #[test]
    fn cyclotomic_products() {
        // x^12 - 1 = product of cyclotomic polynomials for d | 12.
        let mut c = vec![0i64; 13];
        c[0] = -1;
        c[12] = 1;
        let f = z(&c);
        let facs = factor_squarefree(&f);
        assert_eq!(facs.len(), 6);
        assert_eq!(product(&facs).canonical(), f.canonical());
    }

    #[test]
    fn non_monic_factors() {
        let f = product(&[z(&[1, 0, 2]), z(&[-1, 3]), z(&[5, 1, 7])]);
        let facs = factor_squarefree(&f);
        assert_eq!(facs.len(), 3);
        assert_eq!(product(&facs).canonical(), f.canonical());
    }
}
