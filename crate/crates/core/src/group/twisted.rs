//! Irreducible modules of twisted group algebras `C_psi[H]`.
//!
//! A generic central element `z` (averaged over conjugation by the basis)
//! acts on the block `M_{d_i}` of the algebra by a scalar `w_i`. The `w_i`
//! are the eigenvalues of `z` on the centre, and `d_i^2` is the dimension
//! of the `w_i`-eigenspace of left multiplication by `z` on the whole
//! algebra. The number of blocks is cross-checked against the number of
//! `psi`-regular conjugacy classes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{is_cocycle, Cochain, FiniteGroup};
use crate::error::{Error, Result};
use crate::numeric::{charpoly, mat_mul, polynomial_roots, rank, solve, Complex, Matrix, DEFAULT_PRECISION};

struct Algebra<'a> {
    g: &'a FiniteGroup,
    /// `w[x][y]` with `e_x e_y = w[x][y] e_{xy}`.
    w: Vec<Vec<Complex>>,
    bits: u32,
}

impl Algebra<'_> {
    fn mul(&self, u: &[Complex], v: &[Complex]) -> Vec<Complex> {
        let n = self.g.order();
        let mut out = vec![Complex::zero(self.bits); n];
        for x in 0..n {
            if u[x].norm_sqr().is_zero() {
                continue;
            }
            for y in 0..n {
                if v[y].norm_sqr().is_zero() {
                    continue;
                }
                let xy = self.g.mul(x, y);
                out[xy] = out[xy].add(&u[x].mul(&v[y]).mul(&self.w[x][y]));
            }
        }
        out
    }

    fn basis(&self, x: usize) -> Vec<Complex> {
        let mut v = vec![Complex::zero(self.bits); self.g.order()];
        v[x] = Complex::one(self.bits);
        v
    }

    fn inverse_basis(&self, x: usize) -> Vec<Complex> {
        let xi = self.g.inv(x);
        let mut v = vec![Complex::zero(self.bits); self.g.order()];
        v[xi] = self.w[x][xi].recip().expect("root of unity");
        v
    }

    /// `sum_g e_g a e_g^-1`.
    fn average(&self, a: &[Complex]) -> Vec<Complex> {
        let n = self.g.order();
        let mut acc = vec![Complex::zero(self.bits); n];
        for x in 0..n {
            let t = self.mul(&self.mul(&self.basis(x), a), &self.inverse_basis(x));
            acc = acc.iter().zip(&t).map(|(p, q)| p.add(q)).collect();
        }
        acc
    }

    /// Matrix of left multiplication (columns are images of basis vectors).
    fn left_matrix(&self, a: &[Complex]) -> Matrix {
        let n = self.g.order();
        let mut m = vec![vec![Complex::zero(self.bits); n]; n];
        for y in 0..n {
            let col = self.mul(a, &self.basis(y));
            for (x, c) in col.into_iter().enumerate() {
                m[x][y] = c;
            }
        }
        m
    }
}

fn conjugacy_classes(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let mut class: Vec<usize> = (0..n).map(|h| g.conjugate(h, x)).collect();
        class.sort_unstable();
        class.dedup();
        for &c in &class {
            seen[c] = true;
        }
        classes.push(class);
    }
    classes
}

/// `x` is regular when `psi(x, h) = psi(h, x)` for every `h` commuting with `x`.
fn is_regular(g: &FiniteGroup, psi: &Cochain, x: usize) -> bool {
    (0..g.order())
        .filter(|&h| g.mul(x, h) == g.mul(h, x))
        .all(|h| psi.get(&[x, h]) == psi.get(&[h, x]))
}

fn conj_transpose(a: &Matrix) -> Matrix {
    let (r, c) = (a.len(), a[0].len());
    (0..c).map(|j| (0..r).map(|i| a[i][j].conj()).collect()).collect()
}

/// Dimensions of the irreducible modules of `C_psi[H]`, ascending.
pub fn twisted_group_algebra_irreps(h: &FiniteGroup, psi: &Cochain) -> Result<Vec<usize>> {
    if psi.degree() != 2 || psi.order() != h.order() {
        return Err(Error::Shape("expected a 2-cochain on the given group".into()));
    }
    if !is_cocycle(h, psi)? {
        return Err(Error::Invalid("psi is not a 2-cocycle".into()));
    }
    let n = h.order();
    let m = psi.modulus();
    let bits = DEFAULT_PRECISION;
    let base = psi.get(&[0, 0]);
    let w: Vec<Vec<Complex>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| Complex::root_of_unity(m, (psi.get(&[x, y]) + m - base) % m, bits))
                .collect()
        })
        .collect();
    let alg = Algebra { g: h, w, bits };
    let regular: Vec<usize> = conjugacy_classes(h)
        .into_iter()
        .map(|c| c[0])
        .filter(|&x| is_regular(h, psi, x))
        .collect();
    let k = regular.len();
    // Centre basis from averaged basis elements of regular classes.
    let centre: Vec<Vec<Complex>> = regular.iter().map(|&x| alg.average(&alg.basis(x))).collect();
    if centre.iter().any(|c| c.iter().all(|v| v.abs_f64() < 1e-20)) {
        return Err(Error::Internal("a regular class has a vanishing class sum".into()));
    }
    let cmat: Matrix = (0..n).map(|i| centre.iter().map(|c| c[i].clone()).collect()).collect();
    let ch = conj_transpose(&cmat);
    let gram = mat_mul(&ch, &cmat);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _attempt in 0..12 {
        let a: Vec<Complex> = (0..n).map(|_| Complex::from_i64(rng.gen_range(-9..=9), bits)).collect();
        let z = alg.average(&a);
        let lz = alg.left_matrix(&z);
        // Action of z on the centre in the basis `centre`.
        let rhs = mat_mul(&ch, &mat_mul(&lz, &cmat));
        let mut act = vec![vec![Complex::zero(bits); k]; k];
        let mut ok = true;
        for j in 0..k {
            let col: Vec<Complex> = rhs.iter().map(|r| r[j].clone()).collect();
            match solve(&gram, &col, 1e-30) {
                Some(x) => {
                    for i in 0..k {
                        act[i][j] = x[i].clone();
                    }
                }
                None => ok = false,
            }
        }
        if !ok {
            continue;
        }
        let eig = if k == 1 {
            vec![act[0][0].clone()]
        } else {
            polynomial_roots(&charpoly(&act), bits)
        };
        let separated = (0..k).all(|i| (0..i).all(|j| eig[i].dist(&eig[j]) > 1e-6));
        if !separated {
            continue;
        }
        let mut dims = Vec::with_capacity(k);
        for w in &eig {
            let mut shifted = lz.clone();
            for (i, row) in shifted.iter_mut().enumerate() {
                row[i] = row[i].sub(w);
            }
            let sq = n - rank(&shifted, 1e-12);
            let d = (sq as f64).sqrt().round() as usize;
            if d * d != sq || d == 0 {
                return Err(Error::Internal(format!(
                    "block of dimension {sq} is not a nonzero square"
                )));
            }
            dims.push(d);
        }
        if dims.iter().map(|d| d * d).sum::<usize>() != n {
            return Err(Error::Internal("irreducible dimensions do not account for |H|".into()));
        }
        dims.sort_unstable();
        return Ok(dims);
    }
    Err(Error::Internal("no separating central element found".into()))
}

/// `psi` has a unique irreducible projective representation, of dimension `sqrt|H|`.
pub fn is_nondegenerate(h: &FiniteGroup, psi: &Cochain) -> Result<bool> {
    let n = h.order();
    let r = (n as f64).sqrt().round() as usize;
    if r * r != n {
        // Still validate the input.
        twisted_group_algebra_irreps(h, psi)?;
        return Ok(false);
    }
    Ok(twisted_group_algebra_irreps(h, psi)? == vec![r])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::cohomology;

    #[test]
    fn untwisted_s3() {
        let s3 = FiniteGroup::symmetric(3);
        let dims = twisted_group_algebra_irreps(&s3, &Cochain::zero(6, 2, 6)).unwrap();
        assert_eq!(dims, vec![1, 1, 2]);
    }

    #[test]
    fn klein_four_nondegenerate_class() {
        let k = FiniteGroup::parse("z2xz2").unwrap();
        let h2 = cohomology(&k, 2, 4).unwrap();
        let psi = &h2.representatives[0];
        assert_eq!(twisted_group_algebra_irreps(&k, psi).unwrap(), vec![2]);
        assert!(is_nondegenerate(&k, psi).unwrap());
        assert!(!is_nondegenerate(&k, &Cochain::zero(4, 2, 4)).unwrap());
    }

    #[test]
    fn trivial_group() {
        let g = FiniteGroup::trivial();
        assert!(is_nondegenerate(&g, &Cochain::zero(1, 2, 1)).unwrap());
    }
}
