//! Dense linear algebra over `Z/p^k`: Smith normal form with logged row
//! operations and tracked column transform, and linear solving modulo a
//! composite by the Chinese remainder theorem.

use num_integer::Integer;

/// A dense `rows x cols` matrix with entries reduced modulo `q`.
#[derive(Clone, Debug)]
pub(crate) struct DenseMod {
    pub rows: usize,
    pub cols: usize,
    pub q: u64,
    pub data: Vec<u64>,
}

impl DenseMod {
    pub fn zeros(rows: usize, cols: usize, q: u64) -> DenseMod {
        DenseMod {
            rows,
            cols,
            q,
            data: vec![0; rows * cols],
        }
    }

    /// Reduces an integer matrix given as sparse rows `(col, value)`.
    pub fn from_sparse(rows: &[Vec<(usize, i64)>], cols: usize, q: u64) -> DenseMod {
        let mut m = DenseMod::zeros(rows.len(), cols, q);
        for (i, row) in rows.iter().enumerate() {
            for &(j, v) in row {
                let cell = &mut m.data[i * cols + j];
                *cell = (*cell + v.rem_euclid(q as i64) as u64) % q;
            }
        }
        m
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }
}

#[derive(Clone, Copy, Debug)]
enum RowOp {
    Swap(usize, usize),
    Scale(usize, u64),
    /// `row[target] += factor * row[source]`.
    AddMul {
        target: usize,
        source: usize,
        factor: u64,
    },
}

/// `U A V = D` over `Z/p^k`, with `D` diagonal with entries `p^a` in its
/// first `rank` positions. `U` is kept as a log of row operations.
#[derive(Clone, Debug)]
pub(crate) struct Smith {
    pub p: u64,
    pub q: u64,
    pub cols: usize,
    /// Exponents `a` of the pivots `p^a`.
    pub exponents: Vec<u32>,
    ops: Vec<RowOp>,
    /// Column transform, row-major `cols x cols`.
    v: Vec<u64>,
}

fn valuation(mut x: u64, p: u64) -> u32 {
    let mut v = 0;
    while x.is_multiple_of(p) {
        x /= p;
        v += 1;
    }
    v
}

pub(crate) fn inverse_mod(a: u64, q: u64) -> u64 {
    let e = (a as i128).extended_gcd(&(q as i128));
    debug_assert_eq!(e.gcd, 1, "{a} is not a unit modulo {q}");
    e.x.rem_euclid(q as i128) as u64
}

impl Smith {
    pub fn compute(mut a: DenseMod, p: u64) -> Smith {
        let (rows, cols, q) = (a.rows, a.cols, a.q);
        let mut v = vec![0u64; cols * cols];
        for j in 0..cols {
            v[j * cols + j] = 1;
        }
        let mut ops = Vec::new();
        let mut exponents = Vec::new();
        for t in 0..rows.min(cols) {
            // Pivot of minimal valuation, stopping early on a unit.
            let mut best: Option<(usize, usize, u32)> = None;
            'search: for i in t..rows {
                for j in t..cols {
                    let x = a.at(i, j);
                    if x == 0 {
                        continue;
                    }
                    let val = valuation(x, p);
                    if best.is_none_or(|b| val < b.2) {
                        best = Some((i, j, val));
                        if val == 0 {
                            break 'search;
                        }
                    }
                }
            }
            let Some((pi, pj, val)) = best else { break };
            if pi != t {
                for j in 0..cols {
                    a.data.swap(t * cols + j, pi * cols + j);
                }
                ops.push(RowOp::Swap(t, pi));
            }
            if pj != t {
                for i in 0..rows {
                    a.data.swap(i * cols + t, i * cols + pj);
                }
                for i in 0..cols {
                    v.swap(i * cols + t, i * cols + pj);
                }
            }
            let pv = p.pow(val);
            let unit = a.at(t, t) / pv;
            let uinv = inverse_mod(unit % q, q);
            if uinv != 1 {
                for j in t..cols {
                    let c = &mut a.data[t * cols + j];
                    *c = *c * uinv % q;
                }
                ops.push(RowOp::Scale(t, uinv));
            }
            for i in t + 1..rows {
                let x = a.at(i, t);
                if x == 0 {
                    continue;
                }
                let f = (q - x / pv) % q;
                for j in t..cols {
                    let s = a.data[t * cols + j];
                    if s != 0 {
                        let c = &mut a.data[i * cols + j];
                        *c = (*c + f * s) % q;
                    }
                }
                ops.push(RowOp::AddMul {
                    target: i,
                    source: t,
                    factor: f,
                });
            }
            for j in t + 1..cols {
                let x = a.at(t, j);
                if x == 0 {
                    continue;
                }
                let f = (q - x / pv) % q;
                a.data[t * cols + j] = 0;
                for i in 0..cols {
                    let s = v[i * cols + t];
                    if s != 0 {
                        let c = &mut v[i * cols + j];
                        *c = (*c + f * s) % q;
                    }
                }
            }
            exponents.push(val);
        }
        Smith {
            p,
            q,
            cols,
            exponents,
            ops,
            v,
        }
    }

    pub fn rank(&self) -> usize {
        self.exponents.len()
    }

    /// `U z` for a vector indexed by rows.
    pub fn apply_u(&self, z: &mut [u64]) {
        let q = self.q;
        for op in &self.ops {
            match *op {
                RowOp::Swap(a, b) => z.swap(a, b),
                RowOp::Scale(a, u) => z[a] = z[a] * u % q,
                RowOp::AddMul { target, source, factor } => {
                    z[target] = (z[target] + factor * z[source]) % q;
                }
            }
        }
    }

    /// `V y` for a vector indexed by columns.
    pub fn apply_v(&self, y: &[u64]) -> Vec<u64> {
        let c = self.cols;
        (0..c)
            .map(|i| {
                let mut acc = 0u64;
                for (j, &yj) in y.iter().enumerate() {
                    if yj != 0 {
                        acc = (acc + self.v[i * c + j] * yj) % self.q;
                    }
                }
                acc
            })
            .collect()
    }

    /// Column `j` of `V`.
    pub fn v_column(&self, j: usize) -> Vec<u64> {
        (0..self.cols).map(|i| self.v[i * self.cols + j]).collect()
    }

    /// Some `x` with `A x = b`, if one exists.
    pub fn solve(&self, b: &[u64]) -> Option<Vec<u64>> {
        let mut z: Vec<u64> = b.iter().map(|x| x % self.q).collect();
        self.apply_u(&mut z);
        let mut y = vec![0u64; self.cols];
        for (t, &a) in self.exponents.iter().enumerate() {
            if z[t] == 0 {
                continue;
            }
            if valuation(z[t], self.p) < a {
                return None;
            }
            y[t] = z[t] / self.p.pow(a);
        }
        if z[self.rank()..].iter().any(|&x| x != 0) {
            return None;
        }
        Some(self.apply_v(&y))
    }
}

/// Prime-power factorization.
pub(crate) fn prime_powers(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut k = 0;
            while m.is_multiple_of(p) {
                m /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// Solves `A x = b` modulo `m` for an integer matrix in sparse-row form.
pub(crate) fn solve_mod(rows: &[Vec<(usize, i64)>], cols: usize, b: &[u64], m: u64) -> Option<Vec<u64>> {
    let mut x = vec![0u64; cols];
    let mut modulus = 1u64;
    for (p, k) in prime_powers(m) {
        let q = p.pow(k);
        let smith = Smith::compute(DenseMod::from_sparse(rows, cols, q), p);
        let part = smith.solve(&b.iter().map(|v| v % q).collect::<Vec<_>>())?;
        // Combine x (mod modulus) with part (mod q).
        let inv = inverse_mod(modulus % q, q);
        for (xi, &pi) in x.iter_mut().zip(&part) {
            let diff = (pi + q - *xi % q) % q;
            let t = diff * inv % q;
            *xi += modulus * t;
        }
        modulus *= q;
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smith_of_small_integer_matrix() {
        // diag(2, 6) over Z/8 has pivots 2 and 2 (6 = 2 * unit).
        let rows = vec![vec![(0, 2)], vec![(1, 6)]];
        let s = Smith::compute(DenseMod::from_sparse(&rows, 2, 8), 2);
        assert_eq!(s.exponents, vec![1, 1]);
    }

    #[test]
    fn composite_solve() {
        // 2x + 3y = 5, x - y = 0 modulo 12: x = y = 1.
        let rows = vec![vec![(0, 2), (1, 3)], vec![(0, 1), (1, -1)]];
        let x = solve_mod(&rows, 2, &[5, 0], 12).unwrap();
        assert_eq!((2 * x[0] + 3 * x[1]) % 12, 5);
        assert_eq!((x[0] + 12 - x[1]) % 12, 0);
        // 2x = 1 has no solution modulo 4.
        assert!(solve_mod(&[vec![(0, 2)]], 1, &[1], 4).is_none());
    }
}
