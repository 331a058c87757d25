//! `H^d(G, C^x)` for `d = 2, 3`.
//!
//! For a finite group `H^d(G, C^x) = H^{d+1}(G, Z)`, which is the torsion
//! of the cokernel of the integral bar differential `d_d` on normalized
//! cochains. Invariant factors are read off a Smith form modulo `p^K` for
//! each prime `p` dividing `|G|`. A torsion generator `d_d(y) = p^a z`
//! yields the `C^x`-valued cocycle `y / p^a`.

use serde::Serialize;

use super::cochain::{coboundary_terms, tuples, Cochain};
use super::modlin::{prime_powers, DenseMod, Smith};
use super::{coboundary, FiniteGroup};
use crate::error::{Error, Result};

/// Largest group order handled in each degree.
pub const MAX_ORDER_DEGREE_2: usize = 24;
pub const MAX_ORDER_DEGREE_3: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimaryFactor {
    pub prime: u64,
    pub order: u64,
    pub generator: Cochain,
}

#[derive(Clone, Debug)]
struct PrimeData {
    p: u64,
    smith: Smith,
    /// `(pivot position, exponent a)` for pivots `p^a` with `a > 0`.
    torsion: Vec<(usize, u32)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CohomologyGroup {
    pub degree: usize,
    pub modulus: u64,
    /// Invariant factors, each dividing the next; empty for the trivial group.
    pub factors: Vec<u64>,
    /// One cocycle per invariant factor, of exactly that order.
    pub representatives: Vec<Cochain>,
    pub primary: Vec<PrimaryFactor>,
    #[serde(skip)]
    group_order: usize,
    #[serde(skip)]
    primes: Vec<PrimeData>,
}

/// Index of normalized `d`-tuples (entries in `1..n`).
fn normalized_index(t: &[usize], n: usize) -> Option<usize> {
    let mut idx = 0;
    for &x in t {
        if x == 0 {
            return None;
        }
        idx = idx * (n - 1) + (x - 1);
    }
    Some(idx)
}

fn normalized_tuples(n: usize, d: usize) -> impl Iterator<Item = Vec<usize>> {
    tuples(n - 1, d).map(|t| t.into_iter().map(|x| x + 1).collect())
}

/// The integral differential from normalized `d`-cochains to normalized
/// `(d+1)`-cochains, as sparse rows.
fn differential(g: &FiniteGroup, d: usize) -> Vec<Vec<(usize, i64)>> {
    let n = g.order();
    normalized_tuples(n, d + 1)
        .map(|t| {
            let mut row: Vec<(usize, i64)> = Vec::new();
            for (s, u) in coboundary_terms(g, &t) {
                if let Some(j) = normalized_index(&u, n) {
                    match row.iter_mut().find(|e| e.0 == j) {
                        Some(e) => e.1 += s,
                        None => row.push((j, s)),
                    }
                }
            }
            row.retain(|e| e.1 != 0);
            row
        })
        .collect()
}

/// Rank over the rationals of the normalized differential `d_d`.
fn rational_rank(n: usize, d: usize) -> usize {
    let mut r: i64 = 0;
    for j in 1..=d {
        r = ((n - 1) as i64).pow(j as u32) - r;
    }
    r as usize
}

fn lift_normalized(order: usize, degree: usize, modulus: u64, normalized: &[u64]) -> Cochain {
    let values = tuples(order, degree)
        .map(|t| normalized_index(&t, order).map_or(0, |i| normalized[i]))
        .collect();
    Cochain::new(order, degree, modulus, values).expect("well-shaped")
}

/// The cohomology `H^degree(G, C^x)` with representatives written as
/// exponents modulo `m`, which must be a multiple of `|G|`.
pub fn cohomology(g: &FiniteGroup, degree: usize, m: u64) -> Result<CohomologyGroup> {
    let n = g.order();
    let bound = match degree {
        2 => MAX_ORDER_DEGREE_2,
        3 => MAX_ORDER_DEGREE_3,
        _ => return Err(Error::Unsupported(format!("cohomology in degree {degree}"))),
    };
    if n > bound {
        return Err(Error::Unsupported(format!(
            "degree-{degree} cohomology is limited to groups of order at most {bound}"
        )));
    }
    if m == 0 || !m.is_multiple_of(n as u64) {
        return Err(Error::Precondition(format!(
            "modulus {m} must be a multiple of |G| = {n}"
        )));
    }
    let mut primes = Vec::new();
    let mut primary = Vec::new();
    if n > 1 {
        let rows = differential(g, degree);
        let cols = (n - 1).pow(degree as u32);
        let want_rank = rational_rank(n, degree);
        for (p, v) in prime_powers(n as u64) {
            let k = 2 * v + 1;
            let q = p.pow(k);
            let smith = Smith::compute(DenseMod::from_sparse(&rows, cols, q), p);
            if smith.rank() != want_rank {
                return Err(Error::Internal(format!(
                    "differential has rank {} modulo {q}, expected {want_rank}",
                    smith.rank()
                )));
            }
            let mut torsion = Vec::new();
            for (t, &a) in smith.exponents.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                if a > v {
                    return Err(Error::Internal(format!("torsion of order {p}^{a} exceeds |G|")));
                }
                torsion.push((t, a));
                let pa = p.pow(a);
                let y: Vec<u64> = smith.v_column(t).iter().map(|x| (x % pa) * (m / pa)).collect();
                let generator = lift_normalized(n, degree, m, &y);
                if !coboundary(g, &generator)?.is_zero() {
                    return Err(Error::Internal("cohomology representative is not a cocycle".into()));
                }
                primary.push(PrimaryFactor {
                    prime: p,
                    order: pa,
                    generator,
                });
            }
            primes.push(PrimeData { p, smith, torsion });
        }
    }
    // Combine primary parts into invariant factors, largest first.
    let mut by_prime: Vec<Vec<&PrimaryFactor>> = Vec::new();
    for pd in &primes {
        let mut fs: Vec<&PrimaryFactor> = primary.iter().filter(|f| f.prime == pd.p).collect();
        fs.sort_by_key(|f| std::cmp::Reverse(f.order));
        by_prime.push(fs);
    }
    let count = by_prime.iter().map(Vec::len).max().unwrap_or(0);
    let mut factors = Vec::new();
    let mut representatives = Vec::new();
    for i in 0..count {
        let mut order = 1u64;
        let mut rep = Cochain::zero(n, degree, m);
        for fs in &by_prime {
            if let Some(f) = fs.get(i) {
                order *= f.order;
                rep = rep.add(&f.generator)?;
            }
        }
        factors.push(order);
        representatives.push(rep);
    }
    factors.reverse();
    representatives.reverse();
    Ok(CohomologyGroup {
        degree,
        modulus: m,
        factors,
        representatives,
        primary,
        group_order: n,
        primes,
    })
}

impl CohomologyGroup {
    /// Number of classes.
    pub fn size(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Coordinates of the class of a cocycle along [`Self::primary`], each
    /// modulo the order of its factor. In degree 2 any cocycle is accepted;
    /// in degree 3 the cocycle must be normalized.
    pub fn class_coordinates(&self, g: &FiniteGroup, c: &Cochain) -> Result<Vec<u64>> {
        let n = self.group_order;
        if c.order() != n || c.degree() != self.degree {
            return Err(Error::Shape("cocycle does not match this cohomology group".into()));
        }
        if !coboundary(g, c)?.is_zero() {
            return Err(Error::Invalid("not a cocycle".into()));
        }
        let mm = c.modulus();
        // Normalize: a 2-cocycle minus the constant c(1,1) is normalized.
        let base = if self.degree == 2 { c.get(&[0, 0]) } else { 0 };
        let shifted: Vec<u64> = c.values().iter().map(|&v| (v + mm - base) % mm).collect();
        let c = Cochain::new(n, self.degree, mm, shifted)?;
        if !c.is_normalized() {
            return Err(Error::Unsupported("class coordinates need a normalized cocycle".into()));
        }
        let mut coords = Vec::with_capacity(self.primary.len());
        if n == 1 {
            return Ok(coords);
        }
        // Integral lift y with values in [0, mm); z = d(y) / mm.
        let rows = differential(g, self.degree);
        let y: Vec<i64> = normalized_tuples(n, self.degree).map(|t| c.get(&t) as i64).collect();
        let z: Vec<i64> = rows
            .iter()
            .map(|row| {
                let s: i64 = row.iter().map(|&(j, v)| v * y[j]).sum();
                debug_assert_eq!(s.rem_euclid(mm as i64), 0);
                s.div_euclid(mm as i64)
            })
            .collect();
        for pd in &self.primes {
            let q = pd.smith.q;
            let mut zq: Vec<u64> = z.iter().map(|v| v.rem_euclid(q as i64) as u64).collect();
            pd.smith.apply_u(&mut zq);
            for &(t, a) in &pd.torsion {
                coords.push(zq[t] % pd.p.pow(a));
            }
        }
        Ok(coords)
    }

    /// All coordinate vectors, in lexicographic order.
    pub fn all_classes(&self) -> Vec<Vec<u64>> {
        let mut out: Vec<Vec<u64>> = vec![Vec::new()];
        for f in &self.primary {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..f.order).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out
    }

    /// The cocycle `sum coords[i] * primary[i].generator`.
    pub fn cocycle_for(&self, coords: &[u64]) -> Result<Cochain> {
        let mut acc = Cochain::zero(self.group_order, self.degree, self.modulus);
        for (f, &x) in self.primary.iter().zip(coords) {
            acc = acc.add(&f.generator.mul_scalar(x))?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_degree_answers() {
        let z2 = FiniteGroup::cyclic(2);
        assert_eq!(cohomology(&z2, 3, 2).unwrap().factors, vec![2]);
        assert!(cohomology(&z2, 2, 2).unwrap().is_trivial());
        let k = FiniteGroup::parse("z2xz2").unwrap();
        let h2 = cohomology(&k, 2, 4).unwrap();
        assert_eq!(h2.factors, vec![2]);
        let gen = &h2.representatives[0];
        assert_eq!(h2.class_coordinates(&k, gen).unwrap(), vec![1]);
        assert_eq!(h2.class_coordinates(&k, &gen.mul_scalar(2)).unwrap(), vec![0]);
    }

    #[test]
    fn coprime_parts_combine() {
        let z6 = FiniteGroup::cyclic(6);
        let h3 = cohomology(&z6, 3, 6).unwrap();
        assert_eq!(h3.factors, vec![6]);
        assert_eq!(h3.primary.len(), 2);
    }

    #[test]
    fn bounds_and_moduli() {
        let z4 = FiniteGroup::cyclic(4);
        assert!(matches!(cohomology(&z4, 2, 6), Err(Error::Precondition(_))));
        assert!(matches!(
            cohomology(&FiniteGroup::cyclic(13), 3, 13),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(cohomology(&z4, 4, 4), Err(Error::Unsupported(_))));
    }
}
