//! Cochains `G^d -> Z/m`, read as exponents of a primitive `m`-th root
//! of unity, and the bar differential.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::modlin::solve_mod;
use super::FiniteGroup;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain {
    order: usize,
    degree: usize,
    modulus: u64,
    values: Vec<u64>,
}

/// Serialized form; `values` lists the nonzero entries under keys `"a,b,c"`.
#[derive(Serialize, Deserialize)]
struct CochainData {
    order: usize,
    degree: usize,
    modulus: u64,
    values: BTreeMap<String, u64>,
}

impl Cochain {
    pub fn new(order: usize, degree: usize, modulus: u64, values: Vec<u64>) -> Result<Cochain> {
        if modulus == 0 {
            return Err(Error::Invalid("cochain modulus must be positive".into()));
        }
        if values.len() != order.pow(degree as u32) {
            return Err(Error::Shape(format!(
                "{} values for a degree-{degree} cochain on a group of order {order}",
                values.len()
            )));
        }
        let values = values.into_iter().map(|v| v % modulus).collect();
        Ok(Cochain {
            order,
            degree,
            modulus,
            values,
        })
    }

    pub fn zero(order: usize, degree: usize, modulus: u64) -> Cochain {
        Cochain::new(order, degree, modulus, vec![0; order.pow(degree as u32)]).expect("well-shaped")
    }

    pub fn from_fn(g: &FiniteGroup, degree: usize, modulus: u64, f: impl Fn(&[usize]) -> i64) -> Cochain {
        let n = g.order();
        let values = tuples(n, degree)
            .map(|t| f(&t).rem_euclid(modulus as i64) as u64)
            .collect();
        Cochain::new(n, degree, modulus, values).expect("well-shaped")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn index(&self, t: &[usize]) -> usize {
        t.iter().fold(0, |acc, &x| acc * self.order + x)
    }

    pub fn get(&self, t: &[usize]) -> u64 {
        self.values[self.index(t)]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// Vanishes whenever an argument is the identity.
    pub fn is_normalized(&self) -> bool {
        tuples(self.order, self.degree).all(|t| !t.contains(&0) || self.get(&t) == 0)
    }

    fn check_compatible(&self, o: &Cochain) -> Result<()> {
        if (self.order, self.degree, self.modulus) != (o.order, o.degree, o.modulus) {
            return Err(Error::Shape("cochains of different shape or modulus".into()));
        }
        Ok(())
    }

    pub fn add(&self, o: &Cochain) -> Result<Cochain> {
        self.check_compatible(o)?;
        let m = self.modulus;
        let values = self.values.iter().zip(&o.values).map(|(a, b)| (a + b) % m).collect();
        Cochain::new(self.order, self.degree, m, values)
    }

    pub fn neg(&self) -> Cochain {
        let m = self.modulus;
        let values = self.values.iter().map(|a| (m - a) % m).collect();
        Cochain::new(self.order, self.degree, m, values).expect("same shape")
    }

    pub fn sub(&self, o: &Cochain) -> Result<Cochain> {
        self.add(&o.neg())
    }

    pub fn mul_scalar(&self, k: u64) -> Cochain {
        let m = self.modulus;
        let values = self.values.iter().map(|a| a * (k % m) % m).collect();
        Cochain::new(self.order, self.degree, m, values).expect("same shape")
    }

    /// The same roots of unity written over a multiple of the modulus.
    pub fn rescaled(&self, modulus: u64) -> Result<Cochain> {
        if !modulus.is_multiple_of(self.modulus) {
            return Err(Error::Invalid(format!(
                "modulus {modulus} is not a multiple of {}",
                self.modulus
            )));
        }
        let k = modulus / self.modulus;
        Cochain::new(
            self.order,
            self.degree,
            modulus,
            self.values.iter().map(|v| v * k).collect(),
        )
    }

    /// Pullback along a map of groups given on elements.
    pub fn pullback(&self, order: usize, map: &[usize]) -> Cochain {
        let values = tuples(order, self.degree)
            .map(|t| {
                let img: Vec<usize> = t.iter().map(|&x| map[x]).collect();
                self.get(&img)
            })
            .collect();
        Cochain::new(order, self.degree, self.modulus, values).expect("well-shaped")
    }

    fn check_group(&self, g: &FiniteGroup) -> Result<()> {
        if self.order != g.order() {
            return Err(Error::Shape(format!(
                "cochain on a group of order {} used with order {}",
                self.order,
                g.order()
            )));
        }
        Ok(())
    }
}

impl Serialize for Cochain {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let values = tuples(self.order, self.degree)
            .zip(&self.values)
            .filter(|(_, &v)| v != 0)
            .map(|(t, &v)| (t.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","), v))
            .collect();
        CochainData {
            order: self.order,
            degree: self.degree,
            modulus: self.modulus,
            values,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cochain {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let data = CochainData::deserialize(d)?;
        let mut c = Cochain::zero(data.order, data.degree, data.modulus.max(1));
        if data.modulus == 0 {
            return Err(D::Error::custom("modulus must be positive"));
        }
        for (key, v) in data.values {
            let t: Vec<usize> = key
                .split(',')
                .map(|x| x.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(D::Error::custom)?;
            if t.len() != data.degree || t.iter().any(|&x| x >= data.order) {
                return Err(D::Error::custom(format!("bad cochain key `{key}`")));
            }
            let i = c.index(&t);
            c.values[i] = v % data.modulus;
        }
        Ok(c)
    }
}

/// All tuples in `{0..n}^d` in lexicographic order.
pub(crate) fn tuples(n: usize, d: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.pow(d as u32);
    (0..total).map(move |mut idx| {
        let mut t = vec![0; d];
        for slot in t.iter_mut().rev() {
            *slot = idx % n;
            idx /= n;
        }
        t
    })
}

/// The terms of `(dc)(g_1, ..., g_{d+1})` as `(sign, argument tuple)`.
pub(crate) fn coboundary_terms(g: &FiniteGroup, t: &[usize]) -> Vec<(i64, Vec<usize>)> {
    let d = t.len() - 1;
    let mut terms = Vec::with_capacity(d + 2);
    terms.push((1, t[1..].to_vec()));
    for i in 0..d {
        let mut u = Vec::with_capacity(d);
        u.extend_from_slice(&t[..i]);
        u.push(g.mul(t[i], t[i + 1]));
        u.extend_from_slice(&t[i + 2..]);
        terms.push((if i % 2 == 0 { -1 } else { 1 }, u));
    }
    terms.push((if d.is_multiple_of(2) { -1 } else { 1 }, t[..d].to_vec()));
    terms
}

/// The bar differential
/// `(dc)(g_1..g_{d+1}) = c(g_2..) + sum (-1)^i c(..g_i g_{i+1}..) + (-1)^{d+1} c(g_1..g_d)`.
pub fn coboundary(g: &FiniteGroup, c: &Cochain) -> Result<Cochain> {
    c.check_group(g)?;
    let n = g.order();
    let m = c.modulus as i64;
    let values = tuples(n, c.degree + 1)
        .map(|t| {
            coboundary_terms(g, &t)
                .into_iter()
                .map(|(s, u)| s * c.get(&u) as i64)
                .sum::<i64>()
                .rem_euclid(m) as u64
        })
        .collect();
    Cochain::new(n, c.degree + 1, c.modulus, values)
}

pub fn is_cocycle(g: &FiniteGroup, c: &Cochain) -> Result<bool> {
    Ok(coboundary(g, c)?.is_zero())
}

/// A cochain `w` of one degree lower with `dw = c` over `Z/m`, if any.
pub fn is_coboundary(g: &FiniteGroup, c: &Cochain) -> Result<Option<Cochain>> {
    c.check_group(g)?;
    if c.degree == 0 {
        return Ok(c.is_zero().then(|| c.clone()));
    }
    let n = g.order();
    let d = c.degree - 1;
    let cols = n.pow(d as u32);
    let probe = Cochain::zero(n, d, 1);
    let rows: Vec<Vec<(usize, i64)>> = tuples(n, c.degree)
        .map(|t| {
            coboundary_terms(g, &t)
                .into_iter()
                .map(|(s, u)| (probe.index(&u), s))
                .collect()
        })
        .collect();
    Ok(solve_mod(&rows, cols, &c.values, c.modulus).map(|x| Cochain::new(n, d, c.modulus, x).expect("well-shaped")))
}

/// `omega_q(a, b, c) = q a floor((b + c) / n)` on `Z_n`, modulus `n`.
pub fn standard_three_cocycle(n: usize, q: u64) -> Cochain {
    let g = FiniteGroup::cyclic(n);
    Cochain::from_fn(&g, 3, n as u64, |t| {
        (q as i64) * (t[0] as i64) * ((t[1] + t[2]) / n) as i64
    })
}
