//! Characters of commutative fusion rings, S-matrices and the Verlinde
//! formula.
//!
//! The characters are read off the eigenvectors of a generic element
//! `z = sum c_i X_i` whose characteristic polynomial is squarefree; the
//! common eigenvector for `chi` is `(chi(X_0), ..., chi(X_{r-1}))`.
//! A candidate S-matrix puts the Frobenius-Perron character on the unit
//! object, which fixes `s_00 > 0` and every sign, and searches the
//! assignment of the other characters to objects.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebraic::sum_polynomial;
use crate::algebraic::{parse_algebraic, parse_decimal, AlgebraicNumber};
use crate::error::{Error, Result};
use crate::factor::irreducible_factors;
use crate::fp::dimension_vector;
use crate::numeric::{horner, integer_polynomial_roots, null_space, Complex, Matrix, Real, DEFAULT_PRECISION};
use crate::numfield::NumberField;
use crate::poly::{charpoly_z, QPoly, ZPoly};
use crate::ring::FusionRing;

/// Numerical settings.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Options {
    pub tolerance: f64,
    /// Working precision in bits.
    pub precision: u32,
}

impl Default for Options {
    fn default() -> Options {
        Options {
            tolerance: 1e-9,
            precision: DEFAULT_PRECISION,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    /// `values[i][j] = chi_j(X_i)`.
    pub values: Matrix,
    /// Index of the Frobenius-Perron character; always 0.
    pub fp_column: usize,
    /// `minpolys[i][j]` is the minimal polynomial of `chi_j(X_i)`.
    pub minpolys: Vec<Vec<ZPoly>>,
}

impl CharacterTable {
    pub fn rank(&self) -> usize {
        self.values.len()
    }

    pub fn value(&self, i: usize, j: usize) -> &Complex {
        &self.values[i][j]
    }
}

/// A generic integer combination of the basis with squarefree
/// characteristic polynomial, as `(coefficients, matrix, charpoly)`.
struct Generic {
    coeffs: Vec<i64>,
    matrix: Vec<Vec<BigInt>>,
    poly: ZPoly,
}

fn generic_element(ring: &FusionRing) -> Result<Generic> {
    let r = ring.rank();
    let mats: Vec<Vec<Vec<BigInt>>> = (0..r).map(|i| ring.left_mult_matrix(i)).collect::<Result<_>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut witness = ZPoly::zero();
    for attempt in 0..24 {
        let coeffs: Vec<i64> = (0..r)
            .map(|i| {
                if attempt == 0 {
                    i as i64
                } else {
                    rng.gen_range(-12..=12)
                }
            })
            .collect();
        let matrix: Vec<Vec<BigInt>> = (0..r)
            .map(|j| {
                (0..r)
                    .map(|l| mats.iter().zip(&coeffs).map(|(m, &c)| &m[j][l] * c).sum())
                    .collect()
            })
            .collect();
        let poly = charpoly_z(&matrix);
        if poly.is_squarefree() {
            return Ok(Generic { coeffs, matrix, poly });
        }
        witness = poly.gcd(&poly.derivative());
    }
    Err(Error::Degenerate(format!(
        "every generic element has a repeated eigenvalue, e.g. a root of {witness}; the ring is not semisimple"
    )))
}

fn c(v: i64, bits: u32) -> Complex {
    Complex::from_i64(v, bits)
}

fn big(v: &BigInt, bits: u32) -> Complex {
    Complex::from_real(Real::from_bigint(v, bits))
}

fn eval_zpoly(p: &ZPoly, z: &Complex) -> Complex {
    let coeffs: Vec<Complex> = p.coeffs().iter().map(|x| big(x, z.bits())).collect();
    horner(&coeffs, z).0
}

fn eval_qpoly(p: &QPoly, z: &Complex) -> Complex {
    let coeffs: Vec<Complex> = p
        .coeffs()
        .iter()
        .map(|x| Complex::from_real(Real::from_rational(x, z.bits())))
        .collect();
    if coeffs.is_empty() {
        return Complex::zero(z.bits());
    }
    horner(&coeffs, z).0
}

/// The irreducible factor of `p` vanishing at `z`.
fn owning_factor(factors: &[ZPoly], z: &Complex) -> ZPoly {
    factors
        .iter()
        .min_by(|a, b| {
            let (x, y) = (eval_zpoly(a, z).abs_f64(), eval_zpoly(b, z).abs_f64());
            x.total_cmp(&y)
        })
        .expect("nonempty factorization")
        .clone()
}

fn column_key(values: &Matrix, j: usize) -> Vec<(i64, i64)> {
    values
        .iter()
        .map(|row| {
            let z = row[j].to_c64();
            ((z.re * 1e8).round() as i64, (z.im * 1e8).round() as i64)
        })
        .collect()
}

/// All characters of a commutative ring; the Frobenius-Perron character comes first.
pub fn character_table(ring: &FusionRing, opts: &Options) -> Result<CharacterTable> {
    if !ring.is_commutative() {
        return Err(Error::Unsupported(
            "noncommutative ring has no character table of full size".into(),
        ));
    }
    let r = ring.rank();
    let bits = opts.precision;
    let gen = generic_element(ring)?;
    let roots = integer_polynomial_roots(&gen.poly, bits);
    let zmat: Matrix = gen
        .matrix
        .iter()
        .map(|row| row.iter().map(|x| big(x, bits)).collect())
        .collect();
    let mut cols: Vec<Vec<Complex>> = Vec::with_capacity(r);
    let scale = gen
        .matrix
        .iter()
        .flatten()
        .map(|x| x.abs().to_f64().unwrap_or(1.0))
        .fold(1.0, f64::max);
    for lambda in &roots {
        let mut shifted = zmat.clone();
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] = row[i].sub(lambda);
        }
        let ns = null_space(&shifted, 1e-20 * scale * r as f64);
        if ns.len() != 1 {
            return Err(Error::Degenerate(format!(
                "eigenvalue {} of the generic element has a {}-dimensional eigenspace",
                lambda.to_string_digits(12),
                ns.len()
            )));
        }
        let v = &ns[0];
        let v0 = v[0].clone();
        if v0.abs_f64() < 1e-30 {
            return Err(Error::Internal("eigenvector vanishes at the unit".into()));
        }
        cols.push(v.iter().map(|x| x.div(&v0).expect("nonzero")).collect());
    }
    let mut values: Matrix = (0..r)
        .map(|i| cols.iter().map(|col| col[i].clone()).collect())
        .collect();
    // Every column must be a character.
    for a in 0..r {
        for b in 0..r {
            for j in 0..r {
                let lhs = values[a][j].mul(&values[b][j]);
                let mut rhs = c(0, bits);
                for k in 0..r {
                    let n = ring.n(a, b, k);
                    if !n.is_zero() {
                        rhs = rhs.add(&values[k][j].mul(&big(n, bits)));
                    }
                }
                if lhs.dist(&rhs) > opts.tolerance * (1.0 + lhs.abs_f64()) {
                    return Err(Error::Internal(format!(
                        "column {j} is not multiplicative on ({a}, {b})"
                    )));
                }
            }
        }
    }
    let dims = dimension_vector(ring)?;
    let fp = (0..r)
        .min_by(|&x, &y| {
            let dx: f64 = (0..r)
                .map(|i| {
                    values[i][x].dist(&c(0, bits).add(&Complex::from_real(Real::from_f64(dims.dims[i].to_f64(), bits))))
                })
                .sum();
            let dy: f64 = (0..r)
                .map(|i| {
                    values[i][y].dist(&c(0, bits).add(&Complex::from_real(Real::from_f64(dims.dims[i].to_f64(), bits))))
                })
                .sum();
            dx.total_cmp(&dy)
        })
        .expect("rank >= 1");
    let mut order: Vec<usize> = (0..r).filter(|&j| j != fp).collect();
    order.sort_by_key(|&j| column_key(&values, j));
    order.insert(0, fp);
    values = values
        .iter()
        .map(|row| order.iter().map(|&j| row[j].clone()).collect())
        .collect();
    let mut minpolys = Vec::with_capacity(r);
    for i in 0..r {
        let factors = irreducible_factors(&charpoly_z(&ring.left_mult_matrix(i)?));
        minpolys.push((0..r).map(|j| owning_factor(&factors, &values[i][j])).collect());
    }
    Ok(CharacterTable {
        values,
        fp_column: 0,
        minpolys,
    })
}

/// A normalized S-matrix `s` with rows and columns indexed by objects.
#[derive(Clone, Debug)]
pub struct ModularDatum {
    labels: Vec<String>,
    dual: Vec<usize>,
    s: Matrix,
}

impl ModularDatum {
    pub fn new(labels: Vec<String>, dual: Vec<usize>, s: Matrix) -> Result<ModularDatum> {
        let r = labels.len();
        if dual.len() != r || s.len() != r || s.iter().any(|row| row.len() != r) {
            return Err(Error::Shape(format!("S-matrix data must be {r}x{r}")));
        }
        if dual.iter().any(|&d| d >= r) {
            return Err(Error::Shape("dual index out of range".into()));
        }
        Ok(ModularDatum { labels, dual, s })
    }

    pub fn rank(&self) -> usize {
        self.s.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Charge conjugation `i -> i*`.
    pub fn dual(&self) -> &[usize] {
        &self.dual
    }

    pub fn s(&self) -> &Matrix {
        &self.s
    }

    pub fn entry(&self, i: usize, j: usize) -> &Complex {
        &self.s[i][j]
    }

    /// The datum for the other square root of `dim C`.
    pub fn negated(&self) -> ModularDatum {
        let s = self
            .s
            .iter()
            .map(|row| row.iter().map(Complex::neg).collect())
            .collect();
        ModularDatum {
            labels: self.labels.clone(),
            dual: self.dual.clone(),
            s,
        }
    }

    /// Entries as strings: exact where known, otherwise decimals.
    pub fn entry_strings(&self, exact: &[Vec<Option<AlgebraicNumber>>], digits: u32) -> Vec<Vec<String>> {
        (0..self.rank())
            .map(|i| {
                (0..self.rank())
                    .map(
                        |j| match exact.get(i).and_then(|row| row.get(j)).and_then(Option::as_ref) {
                            Some(a) => a.radical_string().unwrap_or_else(|| a.to_string()),
                            None => self.s[i][j].to_string_digits(digits),
                        },
                    )
                    .collect()
            })
            .collect()
    }

    /// Parses entries written as algebraic expressions, decimals, or
    /// complex decimals `a+bi`.
    pub fn from_strings(
        labels: Vec<String>,
        dual: Vec<usize>,
        entries: &[Vec<String>],
        bits: u32,
    ) -> Result<ModularDatum> {
        let s = entries
            .iter()
            .map(|row| row.iter().map(|e| parse_complex(e, bits)).collect::<Result<Vec<_>>>())
            .collect::<Result<Matrix>>()?;
        ModularDatum::new(labels, dual, s)
    }

    /// Entries as decimal strings.
    pub fn to_strings(&self, digits: u32) -> Vec<Vec<String>> {
        self.s
            .iter()
            .map(|row| row.iter().map(|z| z.to_string_digits(digits)).collect())
            .collect()
    }
}

/// Exact values of the real entries of `datum`, where `s_{ij} / s_{0j}`
/// is a root of the characteristic polynomial of `N_i`; complex entries
/// give `None`.
pub fn exact_entries(
    datum: &ModularDatum,
    ring: &FusionRing,
    opts: &Options,
) -> Result<Vec<Vec<Option<AlgebraicNumber>>>> {
    let r = datum.rank();
    let s = &datum.s;
    let mut out = vec![vec![None; r]; r];
    let roots: Vec<Vec<AlgebraicNumber>> = (0..r)
        .map(|i| Ok(AlgebraicNumber::real_roots(&charpoly_z(&ring.left_mult_matrix(i)?))))
        .collect::<Result<_>>()?;
    for j in 0..r {
        if (0..r).any(|i| s[i][j].to_c64().im.abs() > opts.tolerance) {
            continue;
        }
        let chi: Vec<AlgebraicNumber> = (0..r)
            .map(|i| {
                let v = s[i][j].div(&s[0][j]).map(|z| z.to_c64().re)?;
                roots[i]
                    .iter()
                    .min_by(|a, b| (a.to_f64() - v).abs().total_cmp(&(b.to_f64() - v).abs()))
                    .cloned()
                    .ok_or_else(|| Error::Internal("character value is not an eigenvalue".into()))
            })
            .collect::<Result<_>>()?;
        let f = chi.iter().fold(AlgebraicNumber::zero(), |acc, x| acc.add(&x.mul(x)));
        let mut n = f.sqrt().expect("sum of squares").recip()?;
        if s[0][j].to_c64().re < 0.0 {
            n = n.neg();
        }
        for i in 0..r {
            let e = chi[i].mul(&n);
            if (e.to_f64() - s[i][j].to_c64().re).abs() <= opts.tolerance {
                out[i][j] = Some(e);
            }
        }
    }
    Ok(out)
}

fn real_of(a: &AlgebraicNumber, bits: u32) -> Real {
    let w = BigRational::new(BigInt::from(1), BigInt::from(1) << (bits + 8));
    let a = a.refined(&w);
    let (lo, hi) = a.interval();
    Real::from_rational(&((lo + hi) / BigInt::from(2)), bits)
}

fn parse_complex(text: &str, bits: u32) -> Result<Complex> {
    let t = text.trim();
    if let Some(body) = t.strip_suffix('i') {
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(k, c)| (c == '+' || c == '-') && !body[..k].ends_with(['e', 'E']))
            .map(|(k, _)| k)
            .last();
        let (re, im) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let im = match im {
            "" | "+" => "1",
            "-" => "-1",
            x => x.strip_prefix('+').unwrap_or(x),
        };
        let re = parse_decimal(re.trim())?;
        let im = parse_decimal(im.trim())?;
        return Ok(Complex::new(
            Real::from_rational(&re, bits),
            Real::from_rational(&im, bits),
        ));
    }
    Ok(Complex::from_real(real_of(&parse_algebraic(t)?, bits)))
}

/// Sets `s_{ij} = chi_{p(j)}(X_i) / sqrt(sum_k |chi_{p(j)}(X_k)|^2)` for an
/// assignment `p` of characters to objects with `p(0)` the FP character.
/// Among the assignments giving a datum that passes [`verify_modular`],
/// the one with the lexicographically smallest `s` is returned.
pub fn candidate_s_matrix(ring: &FusionRing, opts: &Options) -> Result<Option<ModularDatum>> {
    let table = character_table(ring, opts)?;
    let r = ring.rank();
    let bits = opts.precision;
    let norms: Vec<Real> = (0..r)
        .map(|j| {
            let f = (0..r).fold(Real::zero(bits), |acc, i| acc.add(&table.values[i][j].norm_sqr()));
            Real::from_i64(1, bits).div(&f.sqrt()?)
        })
        .collect::<Result<_>>()?;
    let col = |ch: usize| -> Vec<Complex> { (0..r).map(|i| table.values[i][ch].scale(&norms[ch])).collect() };
    let columns: Vec<Vec<Complex>> = (0..r).map(col).collect();
    let mut assign = vec![0usize];
    let mut used = vec![false; r];
    used[0] = true;
    let tol = opts.tolerance;
    let mut best: Option<(Vec<(i64, i64)>, ModularDatum)> = None;
    search(&columns, &mut assign, &mut used, tol, &mut |a: &[usize]| {
        let s: Matrix = (0..r)
            .map(|i| a.iter().map(|&ch| columns[ch][i].clone()).collect())
            .collect();
        let datum = ModularDatum::new(ring.labels().to_vec(), ring.duals().to_vec(), s).expect("square");
        if matches!(verify_modular(&datum, ring, opts), Ok(rep) if rep.all_pass()) {
            let key = matrix_key(&datum.s);
            if best.as_ref().is_none_or(|(k, _)| key < *k) {
                best = Some((key, datum));
            }
        }
        false
    });
    Ok(best.map(|(_, d)| d))
}

/// Entries in row-major order, rounded to a grid of `1e-9`.
fn matrix_key(s: &Matrix) -> Vec<(i64, i64)> {
    s.iter()
        .flatten()
        .map(|z| {
            let z = z.to_c64();
            ((z.re * 1e9).round() as i64, (z.im * 1e9).round() as i64)
        })
        .collect()
}

/// Backtracking over assignments of characters to objects; `accept`
/// returns true to stop.
fn search(
    columns: &[Vec<Complex>],
    assign: &mut Vec<usize>,
    used: &mut [bool],
    tol: f64,
    accept: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let r = columns.len();
    let j = assign.len();
    if j == r {
        return accept(assign);
    }
    for ch in 0..r {
        if used[ch] {
            continue;
        }
        // s_{ij} = s_{ji} against every assigned object, including the unit.
        let ok = (0..j).all(|i| columns[ch][i].dist(&columns[assign[i]][j]) <= tol);
        if !ok {
            continue;
        }
        used[ch] = true;
        assign.push(ch);
        if search(columns, assign, used, tol, accept) {
            return true;
        }
        assign.pop();
        used[ch] = false;
    }
    false
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub passed: bool,
    /// Largest deviation seen; for the unit row, the smallest `|s_0j|`.
    pub max_error: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ModularReport {
    pub identities: Vec<IdentityCheck>,
}

impl ModularReport {
    pub fn all_pass(&self) -> bool {
        self.identities.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&IdentityCheck> {
        self.identities.iter().find(|c| c.name == name)
    }
}

pub const ID_SYMMETRY: &str = "symmetry";
pub const ID_DUALITY: &str = "duality";
pub const ID_UNIT_ROW: &str = "nonzero-unit-row";
pub const ID_CHARGE: &str = "square-is-charge-conjugation";
pub const ID_VERLINDE: &str = "verlinde";

/// Checks the S-matrix identities and the Verlinde formula against `ring`.
pub fn verify_modular(datum: &ModularDatum, ring: &FusionRing, opts: &Options) -> Result<ModularReport> {
    let r = datum.rank();
    if ring.rank() != r {
        return Err(Error::Shape(format!(
            "S-matrix of size {r} for a ring of rank {}",
            ring.rank()
        )));
    }
    let bits = datum.s[0][0].bits();
    let s = &datum.s;
    let dual = &datum.dual;
    let tol = opts.tolerance;
    let mut sym = 0f64;
    let mut dua = 0f64;
    let mut charge = 0f64;
    for i in 0..r {
        for j in 0..r {
            sym = sym.max(s[i][j].dist(&s[j][i]));
            dua = dua.max(s[i][j].dist(&s[dual[i]][dual[j]]));
            let mut acc = c(0, bits);
            for k in 0..r {
                acc = acc.add(&s[i][k].mul(&s[k][j]));
            }
            let want = c(i64::from(j == dual[i]), bits);
            charge = charge.max(acc.dist(&want));
        }
    }
    let min_unit = (0..r).map(|i| s[0][i].abs_f64()).fold(f64::INFINITY, f64::min);
    let mut verl = 0f64;
    if min_unit > tol {
        for rr in 0..r {
            for i in 0..r {
                for j in 0..r {
                    let mut lhs = c(0, bits);
                    for a in 0..r {
                        let n = ring.n(i, j, a);
                        if !n.is_zero() {
                            lhs = lhs.add(&s[a][rr].mul(&big(n, bits)));
                        }
                    }
                    let rhs = s[i][rr].mul(&s[j][rr]).div(&s[0][rr])?;
                    verl = verl.max(lhs.dist(&rhs));
                }
            }
        }
    } else {
        verl = f64::INFINITY;
    }
    let duals_match = (0..r).all(|i| dual[i] == ring.dual(i));
    let item = |name: &str, err: f64| IdentityCheck {
        name: name.into(),
        passed: err <= tol,
        max_error: err,
    };
    let mut identities = vec![
        item(ID_SYMMETRY, sym),
        item(ID_DUALITY, if duals_match { dua } else { f64::INFINITY }),
        IdentityCheck {
            name: ID_UNIT_ROW.into(),
            passed: min_unit > tol,
            max_error: min_unit,
        },
        item(ID_CHARGE, charge),
        item(ID_VERLINDE, verl),
    ];
    for c in &mut identities {
        if c.max_error.is_nan() {
            c.passed = false;
        }
    }
    Ok(ModularReport { identities })
}

/// `N_{ij}^k = sum_r s_{ir} s_{jr} s_{rk*} / s_{0r}`, snapped to integers
/// and checked against the datum.
pub fn verlinde_fusion_from_s(datum: &ModularDatum, opts: &Options) -> Result<FusionRing> {
    let r = datum.rank();
    let s = &datum.s;
    let bits = s[0][0].bits();
    let mut n = vec![vec![vec![BigInt::zero(); r]; r]; r];
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                let mut acc = c(0, bits);
                for t in 0..r {
                    let term = s[i][t].mul(&s[j][t]).mul(&s[t][datum.dual[k]]).div(&s[0][t])?;
                    acc = acc.add(&term);
                }
                let v = acc.to_c64();
                let rounded = v.re.round();
                if (v.re - rounded).abs() > opts.tolerance || v.im.abs() > opts.tolerance || rounded < 0.0 {
                    return Err(Error::NotModular(format!(
                        "N_({i},{j})^{k} = {} is not a nonnegative integer",
                        acc.to_string_digits(12)
                    )));
                }
                n[i][j][k] = BigInt::from(rounded as i64);
            }
        }
    }
    let ring = FusionRing::new(datum.labels.clone(), datum.dual.clone(), n)?;
    if !verify_modular(datum, &ring, opts)?.all_pass() {
        return Err(Error::NotModular(
            "recovered fusion rules do not satisfy the Verlinde formula".into(),
        ));
    }
    Ok(ring)
}

/// `d+(C) / d+(X_r)^2` for an object; in a modular category with
/// `dim X_r = d+(X_r)` this is `1 / s_{0r}^2`.
#[derive(Clone, Debug)]
pub struct RatioVerdict {
    pub object: usize,
    pub value: AlgebraicNumber,
    pub algebraic_integer: bool,
}

pub fn algebraic_integer_ratios(ring: &FusionRing) -> Result<Vec<RatioVerdict>> {
    let dv = dimension_vector(ring)?;
    dv.dims
        .iter()
        .enumerate()
        .map(|(object, d)| {
            let value = dv.ring_dim.div(&d.mul(d))?;
            let algebraic_integer = value.is_algebraic_integer();
            Ok(RatioVerdict {
                object,
                value,
                algebraic_integer,
            })
        })
        .collect()
}

/// `g(s_{ij}) = signs[i] * s_{perm[i], j}`, with `signs[0] = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisSymmetry {
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisReport {
    /// Degree over the rationals of the field generated by the characters.
    pub field_degree: usize,
    pub symmetries: Vec<GaloisSymmetry>,
    /// `g(i*) = g(i)*` for every symmetry.
    pub preserves_duality: bool,
    /// The permutations commute pairwise.
    pub abelian: bool,
    /// `signs[j] s_{i,g(j)} = signs[i] s_{g(i),j}` for all `i, j`.
    pub consistent: bool,
}

/// `f(x / t) t^deg f`, whose roots are `t` times those of `f`.
fn scaled_roots(f: &ZPoly, t: i64) -> ZPoly {
    let d = f.degree();
    let mut pw = BigInt::from(1);
    let mut out = vec![BigInt::zero(); d + 1];
    for i in (0..=d).rev() {
        out[i] = f.coeff(i) * &pw;
        pw *= t;
    }
    ZPoly::new(out)
}

/// The Galois action on the columns of `s`, through the field generated
/// by the character values.
pub fn galois_symmetry(datum: &ModularDatum, opts: &Options) -> Result<GaloisReport> {
    let ring = verlinde_fusion_from_s(datum, opts)?;
    let r = datum.rank();
    let bits = opts.precision;
    let s = &datum.s;
    let gen = generic_element(&ring)?;
    // lambda_j = chi_j(z) for the character of column j.
    let lambda: Vec<Complex> = (0..r)
        .map(|j| {
            let mut acc = c(0, bits);
            for i in 0..r {
                acc = acc.add(&s[i][j].mul_int(gen.coeffs[i]));
            }
            acc.div(&s[0][j])
        })
        .collect::<Result<_>>()?;
    let factors = irreducible_factors(&gen.poly);
    let owner: Vec<ZPoly> = lambda.iter().map(|l| owning_factor(&factors, l)).collect();
    // Primitive element theta of the compositum, with exact minimal polynomial.
    let mut theta = c(0, bits);
    let mut minpoly = ZPoly::from_i64(&[0, 1]);
    for f in factors.iter().filter(|f| f.degree() > 1) {
        let k = NumberField::new(&minpoly);
        if !k.roots_of(f).is_empty() {
            continue;
        }
        let root = (0..r).find(|&j| owner[j] == *f).map(|j| lambda[j].clone());
        let Some(root) = root else {
            return Err(Error::Internal(
                "a factor of the generic polynomial owns no column".into(),
            ));
        };
        let mut done = false;
        for t in 1..=8i64 {
            let cand = theta.add(&root.mul_int(t));
            let poly = sum_polynomial(&minpoly, &scaled_roots(f, t));
            let g = owning_factor(&irreducible_factors(&poly), &cand);
            let kg = NumberField::new(&g);
            if !kg.roots_of(&minpoly).is_empty() && !kg.roots_of(f).is_empty() {
                theta = cand;
                minpoly = g;
                done = true;
                break;
            }
        }
        if !done {
            return Err(Error::Internal(
                "no primitive element found for the character field".into(),
            ));
        }
    }
    let field = NumberField::new(&minpoly);
    let degree = minpoly.degree();
    // lambda_j = expr_j(theta).
    let mut exprs: Vec<QPoly> = Vec::with_capacity(r);
    for j in 0..r {
        let f = &owner[j];
        let e = if f.degree() == 1 {
            QPoly::constant(BigRational::new(-f.coeff(0), f.coeff(1)))
        } else {
            field
                .roots_of(f)
                .into_iter()
                .min_by(|a, b| {
                    let x = eval_qpoly(a, &theta).dist(&lambda[j]);
                    let y = eval_qpoly(b, &theta).dist(&lambda[j]);
                    x.total_cmp(&y)
                })
                .ok_or_else(|| Error::Internal("character value outside the character field".into()))?
        };
        exprs.push(e);
    }
    let conjugates = if degree == 1 {
        vec![theta.clone()]
    } else {
        integer_polynomial_roots(&minpoly, bits)
    };
    let mut symmetries = Vec::new();
    for th in &conjugates {
        let mut perm = Vec::with_capacity(r);
        for e in &exprs {
            let v = eval_qpoly(e, th);
            let (best, dist) = (0..r)
                .map(|k| (k, v.dist(&lambda[k])))
                .min_by(|a, b| a.1.total_cmp(&b.1))
                .expect("rank >= 1");
            if dist > opts.tolerance {
                return Err(Error::Internal("conjugated character is not a character".into()));
            }
            perm.push(best);
        }
        let mut sorted = perm.clone();
        sorted.sort_unstable();
        if sorted != (0..r).collect::<Vec<_>>() {
            return Err(Error::Internal("Galois action is not a permutation".into()));
        }
        let g0 = perm[0];
        let mut signs = Vec::with_capacity(r);
        for i in 0..r {
            let ratio = s[i][g0].div(&s[0][perm[i]])?;
            let z = ratio.to_c64();
            if z.im.abs() > opts.tolerance || (z.re.abs() - 1.0).abs() > opts.tolerance {
                return Err(Error::NotModular(format!("Galois sign at row {i} is {z}")));
            }
            signs.push(if z.re > 0.0 { 1 } else { -1 });
        }
        symmetries.push(GaloisSymmetry { perm, signs });
    }
    symmetries.sort_by(|a, b| a.perm.cmp(&b.perm));
    symmetries.dedup();
    let dual = &datum.dual;
    let preserves_duality = symmetries
        .iter()
        .all(|g| (0..r).all(|i| g.perm[dual[i]] == dual[g.perm[i]]));
    let abelian = symmetries.iter().all(|a| {
        symmetries
            .iter()
            .all(|b| (0..r).all(|i| a.perm[b.perm[i]] == b.perm[a.perm[i]]))
    });
    let consistent = symmetries.iter().all(|g| {
        (0..r).all(|i| {
            (0..r).all(|j| {
                let lhs = s[i][g.perm[j]].mul_int(i64::from(g.signs[j]));
                let rhs = s[g.perm[i]][j].mul_int(i64::from(g.signs[i]));
                lhs.dist(&rhs) <= opts.tolerance
            })
        })
    });
    Ok(GaloisReport {
        field_degree: degree,
        symmetries,
        preserves_duality,
        abelian,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::library::{group_ring, sl2_verlinde, yang_lee};

    #[test]
    fn z2_characters() {
        let t = character_table(&group_ring(&FiniteGroup::cyclic(2)), &Options::default()).unwrap();
        assert!(t.values[1][0].dist(&c(1, 128)) < 1e-20);
        assert!(t.values[1][1].dist(&c(-1, 128)) < 1e-20);
    }

    #[test]
    fn noncommutative_is_unsupported() {
        let g = group_ring(&FiniteGroup::symmetric(3));
        assert!(matches!(
            character_table(&g, &Options::default()),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn yang_lee_round_trip() {
        let opts = Options::default();
        let ring = yang_lee();
        let d = candidate_s_matrix(&ring, &opts).unwrap().unwrap();
        let back = verlinde_fusion_from_s(&d, &opts).unwrap();
        assert!(back.same_table(&ring));
        let g = galois_symmetry(&d, &opts).unwrap();
        assert_eq!(g.symmetries.len(), 2);
        assert!(g.abelian && g.preserves_duality && g.consistent);
    }

    #[test]
    fn sl2_level_three() {
        let opts = Options::default();
        let ring = sl2_verlinde(3);
        let d = candidate_s_matrix(&ring, &opts).unwrap().unwrap();
        assert!(verlinde_fusion_from_s(&d, &opts).unwrap().same_table(&ring));
    }

    #[test]
    fn exact_strings_round_trip() {
        let opts = Options::default();
        let ring = group_ring(&FiniteGroup::cyclic(2));
        let d = candidate_s_matrix(&ring, &opts).unwrap().unwrap();
        let exact = exact_entries(&d, &ring, &opts).unwrap();
        let text = d.entry_strings(&exact, 30);
        assert_eq!(text[1][1], "-sqrt(2)/2");
        let back = ModularDatum::from_strings(d.labels().to_vec(), d.dual().to_vec(), &text, 128).unwrap();
        assert!(back.entry(1, 1).dist(d.entry(1, 1)) < 1e-30);
        assert!(
            parse_complex("0.5-1.25i", 64)
                .unwrap()
                .dist(&Complex::from_c64(num_complex::Complex64::new(0.5, -1.25), 64))
                < 1e-15
        );
    }
}
