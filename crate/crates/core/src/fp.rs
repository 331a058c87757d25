//! Frobenius-Perron dimensions and the realizability battery.
//!
//! `d+(X_i)` is the largest real root of the characteristic polynomial of
//! `N_i`. The whole dimension vector is the Perron eigenvector of
//! `M = sum_i N_i`; it is computed exactly in the number field generated
//! by the Perron root of `M`, where the identities `N_i d = d_i d` become
//! polynomial identities.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebraic::{eval_interval, AlgebraicNumber};
use crate::error::{Error, Result};
use crate::galois::{compositum_conductor, galois_abelian, GaloisVerdict};
use crate::group::FiniteGroup;
use crate::library::{a_n, b_n, tambara_yamagami};
use crate::numfield::NumberField;
use crate::poly::{charpoly_z, QPoly, Sturm, ZPoly};
use crate::ring::{BasisVector, FusionRing};

/// Largest conductor tried when the battery looks for a cyclotomic field.
pub const CONDUCTOR_BOUND: u64 = 120;

/// `d+(X_i)`, exactly.
pub fn perron_dimension(ring: &FusionRing, i: usize) -> Result<AlgebraicNumber> {
    let m = ring.left_mult_matrix(i)?;
    perron_root(&m)
}

fn perron_root(m: &[Vec<BigInt>]) -> Result<AlgebraicNumber> {
    let p = charpoly_z(m);
    AlgebraicNumber::largest_real_root(&p)
        .ok_or_else(|| Error::Internal(format!("characteristic polynomial {p} has no real root")))
}

#[derive(Clone, Debug)]
pub struct DimensionVector {
    pub dims: Vec<AlgebraicNumber>,
    /// `sum_i d_i^2`.
    pub ring_dim: AlgebraicNumber,
}

impl DimensionVector {
    /// True when every dimension is an integer.
    pub fn is_integral(&self) -> bool {
        self.dims.iter().all(|d| d.to_integer().is_some())
    }
}

/// Exact solution of `(M - mu) d = 0`, `d_0 = 1`, in `K = Q(mu)`.
struct FieldVector {
    field: NumberField,
    mu: AlgebraicNumber,
    d: Vec<QPoly>,
}

/// The kernel vector of a square matrix over `K` with one-dimensional kernel.
fn kernel_vector(k: &NumberField, mut a: Vec<Vec<QPoly>>) -> Option<Vec<QPoly>> {
    let n = a.len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = k.inv(&a[row][col])?;
        for c in col..n {
            a[row][c] = k.mul(&a[row][c], &inv);
        }
        for r in 0..n {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..n {
                    let t = k.mul(&f, &a[row][c]);
                    a[r][c] = k.sub(&a[r][c], &t);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if pivots.len() + 1 != n {
        return None;
    }
    let free = (0..n).find(|c| !pivots.contains(c))?;
    let mut v = vec![QPoly::zero(); n];
    v[free] = QPoly::one();
    for (r, &c) in pivots.iter().enumerate() {
        v[c] = -&a[r][free];
    }
    Some(v)
}

fn field_vector(ring: &FusionRing) -> Result<Option<FieldVector>> {
    let r = ring.rank();
    let mats: Vec<Vec<Vec<BigInt>>> = (0..r).map(|i| ring.left_mult_matrix(i)).collect::<Result<_>>()?;
    let m: Vec<Vec<BigInt>> = (0..r)
        .map(|j| (0..r).map(|l| mats.iter().map(|n| &n[j][l]).sum()).collect())
        .collect();
    let mu = perron_root(&m)?;
    let field = NumberField::new(mu.minpoly());
    let y = field.generator();
    let a: Vec<Vec<QPoly>> = (0..r)
        .map(|j| {
            (0..r)
                .map(|l| {
                    let c = QPoly::constant(BigRational::from_integer(m[j][l].clone()));
                    if j == l {
                        field.sub(&c, &y)
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    let Some(v) = kernel_vector(&field, a) else {
        return Ok(None);
    };
    let Some(inv0) = field.inv(&v[0]) else {
        return Ok(None);
    };
    let d = v.iter().map(|x| field.mul(x, &inv0)).collect();
    Ok(Some(FieldVector { field, mu, d }))
}

/// Enclosure of the field element `p(mu)`.
fn enclose(p: &QPoly, mu: &AlgebraicNumber) -> (BigRational, BigRational) {
    let (lo, hi) = mu.interval();
    eval_interval(p, lo, hi)
}

/// Decides whether the field element `p(mu)`, known to be a root of
/// `target.minpoly()`, is the root `target`.
fn is_same_root(p: &QPoly, mu: &AlgebraicNumber, target: &AlgebraicNumber) -> bool {
    let sturm = Sturm::new(target.minpoly());
    let mut width = BigRational::new(BigInt::one(), BigInt::from(1u64 << 20));
    loop {
        let (m, t) = (mu.refined(&width), target.refined(&width));
        let (a, b) = enclose(p, &m);
        let (tl, th) = t.interval();
        if b < *tl || *th < a {
            return false;
        }
        let lo = a.min(tl.clone());
        let hi = b.max(th.clone());
        if sturm.count_closed(&lo, &hi) == 1 {
            return true;
        }
        width = &width * &width;
    }
}

/// True when the field element `p(mu)` is certified positive.
fn is_positive(p: &QPoly, mu: &AlgebraicNumber) -> bool {
    if p.is_zero() {
        return false;
    }
    let mut width = BigRational::new(BigInt::one(), BigInt::from(1u64 << 20));
    for _ in 0..8 {
        let (a, b) = enclose(p, &mu.refined(&width));
        if a.is_positive() {
            return true;
        }
        if !b.is_positive() {
            return false;
        }
        width = &width * &width;
    }
    false
}

/// The Frobenius-Perron dimension vector, with the identity
/// `d_i d_j = sum_k N_{ij}^k d_k` verified exactly.
pub fn dimension_vector(ring: &FusionRing) -> Result<DimensionVector> {
    let r = ring.rank();
    let mut dims: Vec<AlgebraicNumber> = Vec::with_capacity(r);
    let mut cache: Vec<(ZPoly, AlgebraicNumber)> = Vec::new();
    for i in 0..r {
        let p = charpoly_z(&ring.left_mult_matrix(i)?);
        let d = match cache.iter().find(|(q, _)| *q == p) {
            Some((_, d)) => d.clone(),
            None => {
                let d = AlgebraicNumber::largest_real_root(&p)
                    .ok_or_else(|| Error::Internal(format!("{p} has no real root")))?;
                cache.push((p, d.clone()));
                d
            }
        };
        dims.push(d);
    }
    let in_field = match field_vector(ring)? {
        Some(fv) => verify_in_field(ring, &fv, &dims)?,
        None => None,
    };
    let ring_dim = match in_field {
        Some(delta) => delta,
        None => verify_directly(ring, &dims)?,
    };
    Ok(DimensionVector { dims, ring_dim })
}

/// `None` when the Perron eigenvector of `M` is not strictly positive.
fn verify_in_field(ring: &FusionRing, fv: &FieldVector, dims: &[AlgebraicNumber]) -> Result<Option<AlgebraicNumber>> {
    let r = ring.rank();
    let k = &fv.field;
    if !fv.d.iter().all(|e| is_positive(e, &fv.mu)) {
        return Ok(None);
    }
    for (i, e) in fv.d.iter().enumerate() {
        if !k.eval(&dims[i].minpoly().to_q(), e).is_zero() || !is_same_root(e, &fv.mu, &dims[i]) {
            return Err(Error::Internal(format!(
                "eigenvector entry {i} differs from d+({})",
                ring.label(i)
            )));
        }
        if *e != fv.d[ring.dual(i)] {
            return Err(Error::Internal(format!("d+ of {} and its dual differ", ring.label(i))));
        }
    }
    for i in 0..r {
        for j in 0..r {
            let lhs = k.mul(&fv.d[i], &fv.d[j]);
            let mut rhs = QPoly::zero();
            for (l, e) in fv.d.iter().enumerate() {
                let c = ring.n(i, j, l);
                if !c.is_zero() {
                    rhs = &rhs + &e.scale(&BigRational::from_integer(c.clone()));
                }
            }
            if lhs != rhs {
                return Err(Error::Internal(format!("d+ is not multiplicative on ({i}, {j})")));
            }
        }
    }
    // A = sum_i N_i N_{i*} has the positive eigenvector d with eigenvalue
    // sum_i d_i^2, which is therefore its Perron root.
    let a = regular_square(ring)?;
    let delta = perron_root(&a)?;
    let sq = fv.d.iter().fold(QPoly::zero(), |acc, e| &acc + &k.mul(e, e));
    if !k.eval(&delta.minpoly().to_q(), &sq).is_zero() || !is_same_root(&sq, &fv.mu, &delta) {
        return Err(Error::Internal("ring dimension does not match sum of squares".into()));
    }
    Ok(Some(delta))
}

fn regular_square(ring: &FusionRing) -> Result<Vec<Vec<BigInt>>> {
    let r = ring.rank();
    let mut a = vec![vec![BigInt::zero(); r]; r];
    for i in 0..r {
        let x = ring.left_mult_matrix(i)?;
        let y = ring.left_mult_matrix(ring.dual(i))?;
        for (j, row) in a.iter_mut().enumerate() {
            for (l, cell) in row.iter_mut().enumerate() {
                for t in 0..r {
                    *cell += &x[j][t] * &y[t][l];
                }
            }
        }
    }
    Ok(a)
}

fn verify_directly(ring: &FusionRing, dims: &[AlgebraicNumber]) -> Result<AlgebraicNumber> {
    let r = ring.rank();
    for i in 0..r {
        if dims[i] != dims[ring.dual(i)] {
            return Err(Error::Internal(format!("d+ of {} and its dual differ", ring.label(i))));
        }
        for j in 0..r {
            let mut rhs = AlgebraicNumber::zero();
            for (l, d) in dims.iter().enumerate() {
                let c = ring.n_i64(i, j, l);
                if c != 0 {
                    rhs = rhs.add(&d.mul(&AlgebraicNumber::from_integer(c)));
                }
            }
            if dims[i].mul(&dims[j]) != rhs {
                return Err(Error::Internal(format!("d+ is not multiplicative on ({i}, {j})")));
            }
        }
    }
    Ok(dims.iter().fold(AlgebraicNumber::zero(), |acc, d| acc.add(&d.mul(d))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    Undecided,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Undecided => "undecided",
            Verdict::NotApplicable => "not-applicable",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub object: Option<String>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub citation: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub checks: Vec<Check>,
    /// Known classification results matching this ring.
    pub annotations: Vec<String>,
    /// Smallest `m` with all dimensions in `Q(zeta_m)`, when found.
    pub conductor: Option<u64>,
}

impl ObstructionReport {
    /// Some check failed, so the ring has no categorification.
    pub fn is_obstructed(&self) -> bool {
        self.checks.iter().any(|c| c.verdict == Verdict::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.verdict == Verdict::Fail)
    }

    pub fn checks_named<'a>(&'a self, name: &'a str) -> impl Iterator<Item = &'a Check> {
        self.checks.iter().filter(move |c| c.name == name)
    }
}

pub const CHECK_RECIPROCITY: &str = "reciprocity";
pub const CHECK_DOMINANCE: &str = "conjugate-dominance";
pub const CHECK_QUANTIZATION: &str = "two-cos-quantization";
pub const CHECK_SQUARES: &str = "squared-integrality";
pub const CHECK_CYCLOTOMIC: &str = "cyclotomicity";
pub const CHECK_INTEGRAL: &str = "integer-dimensions";

fn check(name: &str, object: Option<&str>, verdict: Verdict, witness: Option<String>, citation: &str) -> Check {
    Check {
        name: name.into(),
        object: object.map(Into::into),
        verdict,
        witness,
        citation: citation.into(),
    }
}

/// Runs the necessary conditions for `ring` to be the Grothendieck ring
/// of a fusion category over the complex numbers.
pub fn obstruction_battery(ring: &FusionRing) -> Result<ObstructionReport> {
    let mut checks = Vec::new();
    let rec = ring.check_reciprocity();
    checks.push(check(
        CHECK_RECIPROCITY,
        None,
        if rec.holds { Verdict::Pass } else { Verdict::Fail },
        rec.witnesses
            .first()
            .map(|(i, j, k)| format!("N_{{{i}* {j}}}^{k} != N_{{{i} {k}}}^{j}")),
        "rigidity gives N_{i*j}^k = N_{ik}^j in every fusion category",
    ));
    let dv = dimension_vector(ring)?;
    let two = AlgebraicNumber::from_integer(2);
    for (i, d) in dv.dims.iter().enumerate() {
        let label = Some(ring.label(i));
        let dom = d.conjugate_dominance();
        checks.push(check(
            CHECK_DOMINANCE,
            label,
            if dom { Verdict::Pass } else { Verdict::Fail },
            (!dom).then(|| format!("a conjugate of {d} has larger modulus")),
            "d+(X) dominates the absolute values of its Galois conjugates",
        ));
        let below_two = d.cmp_exact(&two) == Ordering::Less;
        let (verdict, witness) = if !below_two {
            (Verdict::NotApplicable, None)
        } else {
            match d.two_cos_quantization() {
                Some(n) => (Verdict::Pass, Some(format!("2cos(pi/{n})"))),
                None => (Verdict::Fail, Some(format!("{d} is not 2cos(pi/n)"))),
            }
        };
        checks.push(check(
            CHECK_QUANTIZATION,
            label,
            verdict,
            witness,
            "a dimension below 2 equals 2cos(pi/n) for some n >= 3",
        ));
    }
    if dv.ring_dim.to_integer().is_some() {
        for (i, d) in dv.dims.iter().enumerate() {
            let sq = d.mul(d);
            let ok = sq.to_integer().is_some();
            checks.push(check(
                CHECK_SQUARES,
                Some(ring.label(i)),
                if ok { Verdict::Pass } else { Verdict::Fail },
                Some(format!(
                    "d+^2 = {}",
                    sq.radical_string().unwrap_or_else(|| sq.to_string())
                )),
                "if d+(C) is an integer then every d+(X_i)^2 is an integer",
            ));
        }
    } else {
        checks.push(check(
            CHECK_SQUARES,
            None,
            Verdict::NotApplicable,
            Some(format!("d+(C) = {} is not an integer", dv.ring_dim)),
            "if d+(C) is an integer then every d+(X_i)^2 is an integer",
        ));
    }
    let mut all_abelian = true;
    for (i, d) in dv.dims.iter().enumerate() {
        let v = galois_abelian(d.minpoly());
        all_abelian &= v == GaloisVerdict::Abelian;
        let (verdict, witness) = match v {
            GaloisVerdict::Abelian => (Verdict::Pass, None),
            GaloisVerdict::NonAbelian => (
                Verdict::Fail,
                Some(format!("splitting field of {} is not abelian", d.minpoly())),
            ),
            GaloisVerdict::Undecided => (
                Verdict::Undecided,
                Some(format!("degree {} is beyond the decided range", d.degree())),
            ),
        };
        checks.push(check(
            CHECK_CYCLOTOMIC,
            Some(ring.label(i)),
            verdict,
            witness,
            "all dimensions lie in a cyclotomic field, so each has an abelian Galois group",
        ));
    }
    let integral = dv.is_integral();
    checks.push(check(
        CHECK_INTEGRAL,
        None,
        if integral {
            Verdict::Pass
        } else {
            Verdict::NotApplicable
        },
        Some(if integral {
            "integer FP dimensions: any realization is Rep of a semisimple quasi-Hopf algebra".into()
        } else {
            "some dimension is not an integer".into()
        }),
        "a fusion category of integer FP dimension is Rep of a quasi-Hopf algebra",
    ));
    let conductor = if all_abelian {
        let mut polys: Vec<ZPoly> = dv.dims.iter().map(|d| d.minpoly().clone()).collect();
        polys.sort_by_key(|p| p.to_string());
        polys.dedup();
        compositum_conductor(&polys, CONDUCTOR_BOUND)
    } else {
        None
    };
    Ok(ObstructionReport {
        checks,
        annotations: classification_annotations(ring, &dv),
        conductor,
    })
}

/// Groups of order at most 8, for matching Tambara-Yamagami rings.
const SMALL_GROUPS: [&str; 14] = [
    "1", "z2", "z3", "z4", "z2xz2", "z5", "z6", "s3", "z7", "z8", "z2xz4", "z2xz2xz2", "d8", "q8",
];

fn small_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p) {
            out.push(p);
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Classification statements that apply to `ring`, matched by isomorphism
/// with the named families.
pub fn classification_annotations(ring: &FusionRing, dv: &DimensionVector) -> Vec<String> {
    let r = ring.rank();
    let mut out = Vec::new();
    if r == 2 {
        let n = ring.n_i64(1, 1, 1);
        if let Ok(n) = u32::try_from(n) {
            let a = a_n(n);
            if ring.is_isomorphic(&a) {
                out.push(format!("A_{n}: {}", a.notes()[0]));
            }
        }
    }
    if r >= 3 {
        if let Ok(b) = b_n(r - 1) {
            if ring.is_isomorphic(&b) {
                out.push(b.notes()[0].clone());
            }
        }
    }
    if r >= 2 {
        for name in SMALL_GROUPS {
            let g = FiniteGroup::parse(name).expect("known group");
            if g.order() + 1 == r {
                let ty = tambara_yamagami(&g);
                if ring.is_isomorphic(&ty) {
                    out.push(format!("TY({}): {}", g.name(), ty.notes()[0]));
                }
            }
        }
    }
    if dv.dims.iter().all(|d| d.to_integer().is_some_and(|v| v.is_one())) {
        out.push(format!(
            "pointed: a group ring of order {r}; realizations are H^3(G, C^x)/Out(G)"
        ));
    }
    if let Some(delta) = dv.ring_dim.to_integer().and_then(|d| d.to_u64()) {
        let ps = small_prime_factors(delta);
        let pointed_prime = r as u64 == delta && dv.dims.iter().all(|d| d.to_integer().is_some_and(|v| v.is_one()));
        if ps.len() == 1 {
            out.push(if pointed_prime {
                format!("prime dimension {delta}: realizations are C(Z_{delta}, omega)")
            } else {
                format!("prime dimension {delta}: not realizable, every fusion category of this dimension is C(Z_{delta}, omega)")
            });
        } else if ps.len() == 2 {
            let (p, q) = (ps[0], ps[1]);
            out.push(format!(
                "dimension {p}*{q}: a realization is {}Morita equivalent to C(G, omega) with |G| = {delta}",
                if p == 2 {
                    format!("a Tambara-Yamagami category of Z_{q} or ")
                } else {
                    String::new()
                }
            ));
        }
    }
    out
}

/// Verdict of the generalized Lagrange theorem for a full subring.
#[derive(Clone, Debug)]
pub struct Divisibility {
    pub ratio: AlgebraicNumber,
    pub verdict: Verdict,
}

/// `d+(C) / d+(D)` for the subring `D` spanned by `subset`; it must be an
/// algebraic integer whenever the pair is realized by a fusion category
/// and a full subcategory.
pub fn divisibility_check(ring: &FusionRing, subset: &[usize]) -> Result<Divisibility> {
    if !ring.is_closed_subset(subset) {
        return Err(Error::Precondition("subset does not span a based subring".into()));
    }
    let dv = dimension_vector(ring)?;
    let sub = subset
        .iter()
        .fold(AlgebraicNumber::zero(), |acc, &i| acc.add(&dv.dims[i].mul(&dv.dims[i])));
    let ratio = dv.ring_dim.div(&sub)?;
    let verdict = if ratio.is_algebraic_integer() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(Divisibility { ratio, verdict })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthStep {
    pub n: u32,
    /// Sum of the coefficients of `X^n`.
    #[serde(serialize_with = "decimal")]
    pub length: BigInt,
    /// `length^(1/n)`.
    pub rate: f64,
}

fn decimal<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// `length(X_i^n)^(1/n)` for `n = 1..=n_max`, which tends to `d+(X_i)`.
pub fn growth_rate_sanity(ring: &FusionRing, i: usize, n_max: u32) -> Result<Vec<GrowthStep>> {
    if i >= ring.rank() {
        return Err(Error::IndexOutOfRange {
            index: i,
            rank: ring.rank(),
        });
    }
    let x = ring.basis_vector(i);
    let mut power: BasisVector = x.clone();
    let mut out = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        if n > 1 {
            power = ring.multiply(&power, &x)?;
        }
        let length = power.length();
        let lf = length.to_f64().unwrap_or(f64::INFINITY);
        out.push(GrowthStep {
            n,
            rate: lf.powf(1.0 / f64::from(n)),
            length,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library::{galois_s3, ising, rep_s3, yang_lee};

    #[test]
    fn yang_lee_dimension() {
        let d = perron_dimension(&yang_lee(), 1).unwrap();
        assert_eq!(d.minpoly(), &ZPoly::from_i64(&[-1, -1, 1]));
    }

    #[test]
    fn ising_vector() {
        let dv = dimension_vector(&ising()).unwrap();
        assert_eq!(dv.ring_dim.to_integer(), Some(BigInt::from(4)));
        assert_eq!(dv.dims[2].minpoly(), &ZPoly::from_i64(&[-2, 0, 1]));
    }

    #[test]
    fn rep_s3_vector() {
        let dv = dimension_vector(&rep_s3()).unwrap();
        let ints: Vec<_> = dv.dims.iter().map(|d| d.to_integer().unwrap()).collect();
        assert_eq!(ints, vec![BigInt::from(1), BigInt::from(1), BigInt::from(2)]);
        assert_eq!(dv.ring_dim.to_integer(), Some(BigInt::from(6)));
    }

    #[test]
    fn galois_s3_is_obstructed() {
        let rep = obstruction_battery(&galois_s3()).unwrap();
        assert!(rep.is_obstructed());
        assert!(rep.failures().all(|c| c.name == CHECK_CYCLOTOMIC));
    }

    #[test]
    fn kernel_of_rank_deficient_matrix() {
        let k = NumberField::new(&ZPoly::from_i64(&[-2, 1]));
        let q = |v: i64| QPoly::constant(BigRational::from_integer(v.into()));
        let v = kernel_vector(&k, vec![vec![q(1), q(2)], vec![q(2), q(4)]]).unwrap();
        assert_eq!(v, vec![q(-2), q(1)]);
    }
}
