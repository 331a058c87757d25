//! The fusion-ring data model and its axiom checks.
//!
//! Structure constants are stored as `n(i, j, k) = N_{ij}^k`, the
//! multiplicity of `X_k` in `X_i X_j`. The unit is always index 0.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionRing {
    labels: Vec<String>,
    dual: Vec<usize>,
    n: Vec<BigInt>,
    notes: Vec<String>,
}

/// An element of the Grothendieck semiring in the distinguished basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisVector {
    coeffs: Vec<BigInt>,
}

impl BasisVector {
    pub fn new(coeffs: Vec<BigInt>) -> BasisVector {
        BasisVector { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> BasisVector {
        BasisVector::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The basis element `X_i` in a ring of the given rank.
    pub fn basis(rank: usize, i: usize) -> BasisVector {
        let mut coeffs = vec![BigInt::zero(); rank];
        coeffs[i] = BigInt::one();
        BasisVector { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Sum of the coefficients.
    pub fn length(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Indices with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&i| !self.coeffs[i].is_zero()).collect()
    }

    pub fn add(&self, o: &BasisVector) -> BasisVector {
        BasisVector::new(self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Unit,
    Duality,
    DualInvolution,
    Associativity,
    Antiautomorphism,
    Nonnegativity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Unit => "unit",
            Axiom::Duality => "duality",
            Axiom::DualInvolution => "dual_involution",
            Axiom::Associativity => "associativity",
            Axiom::Antiautomorphism => "antiautomorphism",
            Axiom::Nonnegativity => "nonnegativity",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub indices: Vec<usize>,
}

/// Every violated axiom with the index tuple witnessing it, ordered
/// lexicographically by indices and then by axiom.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn contains(&self, axiom: Axiom, indices: &[usize]) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom && v.indices == indices)
    }

    pub fn violates(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReciprocityReport {
    pub holds: bool,
    /// Triples `(i, j, k)` with `N_{i* j}^k != N_{ik}^j`.
    pub witnesses: Vec<(usize, usize, usize)>,
}

/// The invertible basis elements and the group they form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Invertibles {
    pub elements: Vec<usize>,
    /// `table[a][b]` is the position in `elements` of the product of the
    /// `a`-th and `b`-th invertible.
    pub table: Vec<Vec<usize>>,
}

impl FusionRing {
    /// Builds a ring from a nested tensor `n[i][j][k] = N_{ij}^k`.
    ///
    /// Only the shape is checked here; see [`FusionRing::verify_axioms`].
    pub fn new(labels: Vec<String>, dual: Vec<usize>, n: Vec<Vec<Vec<BigInt>>>) -> Result<FusionRing> {
        let r = labels.len();
        if r == 0 {
            return Err(Error::Shape("rank must be positive".into()));
        }
        if dual.len() != r {
            return Err(Error::Shape(format!("dual has length {} for rank {r}", dual.len())));
        }
        if let Some(&d) = dual.iter().find(|&&d| d >= r) {
            return Err(Error::Shape(format!("dual entry {d} out of range for rank {r}")));
        }
        if n.len() != r || n.iter().any(|m| m.len() != r || m.iter().any(|row| row.len() != r)) {
            return Err(Error::Shape(format!("structure constants must be {r}x{r}x{r}")));
        }
        let flat = n.into_iter().flatten().flatten().collect();
        Ok(FusionRing {
            labels,
            dual,
            n: flat,
            notes: Vec::new(),
        })
    }

    /// Builds a ring of rank `labels.len()` from a function of `(i, j, k)`.
    pub fn from_fn(
        labels: Vec<String>,
        dual: Vec<usize>,
        f: impl Fn(usize, usize, usize) -> i64,
    ) -> Result<FusionRing> {
        let r = labels.len();
        let n = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| (0..r).map(|k| BigInt::from(f(i, j, k))).collect())
                    .collect()
            })
            .collect();
        FusionRing::new(labels, dual, n)
    }

    /// The rank-1 ring `Z`.
    pub fn unit_ring() -> FusionRing {
        FusionRing::from_fn(vec!["1".into()], vec![0], |_, _, _| 1).expect("well-shaped")
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    /// `N_{ij}^k`.
    pub fn n(&self, i: usize, j: usize, k: usize) -> &BigInt {
        let r = self.rank();
        &self.n[(i * r + j) * r + k]
    }

    pub fn n_i64(&self, i: usize, j: usize, k: usize) -> i64 {
        self.n(i, j, k).to_i64().expect("structure constant fits in i64")
    }

    /// The nested tensor `n[i][j][k]`.
    pub fn tensor(&self) -> Vec<Vec<Vec<BigInt>>> {
        let r = self.rank();
        (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| (0..r).map(|k| self.n(i, j, k).clone()).collect())
                    .collect()
            })
            .collect()
    }

    /// Largest structure constant.
    pub fn max_entry(&self) -> BigInt {
        self.n.iter().max().cloned().unwrap_or_default()
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn with_note(mut self, note: impl Into<String>) -> FusionRing {
        self.notes.push(note.into());
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<FusionRing> {
        if labels.len() != self.rank() {
            return Err(Error::Shape(format!(
                "{} labels for rank {}",
                labels.len(),
                self.rank()
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    /// Equality of dual permutations and structure constants, ignoring
    /// labels and notes.
    pub fn same_table(&self, o: &FusionRing) -> bool {
        self.dual == o.dual && self.n == o.n
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        }
    }

    pub fn verify_axioms(&self) -> AxiomReport {
        let r = self.rank();
        let delta = |a: usize, b: usize| if a == b { BigInt::one() } else { BigInt::zero() };
        let mut out: BTreeSet<(Vec<usize>, Axiom)> = BTreeSet::new();
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    if self.n(i, j, k).is_negative() {
                        out.insert((vec![i, j, k], Axiom::Nonnegativity));
                    }
                }
            }
        }
        for j in 0..r {
            for k in 0..r {
                if *self.n(0, j, k) != delta(j, k) {
                    out.insert((vec![0, j, k], Axiom::Unit));
                }
                if *self.n(j, 0, k) != delta(j, k) {
                    out.insert((vec![j, 0, k], Axiom::Unit));
                }
            }
        }
        if self.dual[0] != 0 {
            out.insert((vec![0], Axiom::DualInvolution));
        }
        for i in 0..r {
            if self.dual[self.dual[i]] != i {
                out.insert((vec![i], Axiom::DualInvolution));
            }
            for j in 0..r {
                if *self.n(i, j, 0) != delta(i, self.dual[j]) {
                    out.insert((vec![i, j], Axiom::Duality));
                }
            }
        }
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    let (dj, di, dk) = (self.dual[j], self.dual[i], self.dual[k]);
                    if self.n(i, j, k) != self.n(dj, di, dk) {
                        out.insert((vec![i, j, k], Axiom::Antiautomorphism));
                    }
                }
            }
        }
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    for l in 0..r {
                        let mut lhs = BigInt::zero();
                        let mut rhs = BigInt::zero();
                        for m in 0..r {
                            lhs += self.n(i, j, m) * self.n(m, k, l);
                            rhs += self.n(j, k, m) * self.n(i, m, l);
                        }
                        if lhs != rhs {
                            out.insert((vec![i, j, k, l], Axiom::Associativity));
                        }
                    }
                }
            }
        }
        AxiomReport {
            violations: out
                .into_iter()
                .map(|(indices, axiom)| Violation { axiom, indices })
                .collect(),
        }
    }

    pub fn basis_vector(&self, i: usize) -> BasisVector {
        BasisVector::basis(self.rank(), i)
    }

    /// Bilinear extension of the basis products.
    pub fn multiply(&self, a: &BasisVector, b: &BasisVector) -> Result<BasisVector> {
        let r = self.rank();
        if a.len() != r || b.len() != r {
            return Err(Error::Shape(format!(
                "vectors of length {} and {} for rank {r}",
                a.len(),
                b.len()
            )));
        }
        let mut out = vec![BigInt::zero(); r];
        for i in a.support() {
            for j in b.support() {
                let c = &a.coeffs[i] * &b.coeffs[j];
                for (k, o) in out.iter_mut().enumerate() {
                    let m = self.n(i, j, k);
                    if !m.is_zero() {
                        *o += &c * m;
                    }
                }
            }
        }
        Ok(BasisVector::new(out))
    }

    /// `X_i X_j` in the basis.
    pub fn product(&self, i: usize, j: usize) -> BasisVector {
        BasisVector::new((0..self.rank()).map(|k| self.n(i, j, k).clone()).collect())
    }

    /// The matrix `N_i` with `(N_i)_{jk} = N_{ij}^k`, so row `j` is the
    /// expansion of `X_i X_j`. The dimension vector is a right eigenvector:
    /// `N_i d = d_i d`.
    pub fn left_mult_matrix(&self, i: usize) -> Result<Vec<Vec<BigInt>>> {
        self.check_index(i)?;
        let r = self.rank();
        Ok((0..r)
            .map(|j| (0..r).map(|k| self.n(i, j, k).clone()).collect())
            .collect())
    }

    /// Checks `N_{i* j}^k = N_{ik}^j`.
    pub fn check_reciprocity(&self) -> ReciprocityReport {
        let r = self.rank();
        let mut witnesses = Vec::new();
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    if self.n(self.dual[i], j, k) != self.n(i, k, j) {
                        witnesses.push((i, j, k));
                    }
                }
            }
        }
        ReciprocityReport {
            holds: witnesses.is_empty(),
            witnesses,
        }
    }

    pub fn is_commutative(&self) -> bool {
        let r = self.rank();
        (0..r).all(|i| (0..i).all(|j| (0..r).all(|k| self.n(i, j, k) == self.n(j, i, k))))
    }

    /// Basis elements with `X_i X_{i*} = 1`, with their multiplication table.
    pub fn invertibles(&self) -> Result<Invertibles> {
        let r = self.rank();
        let elements: Vec<usize> = (0..r)
            .filter(|&i| self.product(i, self.dual[i]).length().is_one())
            .collect();
        let mut table = Vec::with_capacity(elements.len());
        for &a in &elements {
            let mut row = Vec::with_capacity(elements.len());
            for &b in &elements {
                let p = self.product(a, b);
                let supp = p.support();
                let pos = match supp.as_slice() {
                    [c] if p.coeffs[*c].is_one() => elements.iter().position(|e| e == c),
                    _ => None,
                };
                row.push(
                    pos.ok_or_else(|| {
                        Error::Internal(format!("product of invertibles {a} and {b} is not invertible"))
                    })?,
                );
            }
            table.push(row);
        }
        Ok(Invertibles { elements, table })
    }

    /// Smallest set containing `seed` and 0, closed under duals and the
    /// supports of products.
    pub fn closure(&self, seed: &[usize]) -> Vec<usize> {
        let r = self.rank();
        let mut inside = vec![false; r];
        inside[0] = true;
        let mut stack = vec![0usize];
        for &s in seed {
            if !inside[s] {
                inside[s] = true;
                stack.push(s);
            }
        }
        let mut members: Vec<usize> = (0..r).filter(|&i| inside[i]).collect();
        while let Some(x) = stack.pop() {
            let mut fresh = vec![self.dual[x]];
            for &y in &members {
                fresh.extend(self.product(x, y).support());
                fresh.extend(self.product(y, x).support());
            }
            for f in fresh {
                if !inside[f] {
                    inside[f] = true;
                    members.push(f);
                    stack.push(f);
                }
            }
        }
        members.sort_unstable();
        members
    }

    /// All full based subrings, sorted by size and then lexicographically.
    pub fn find_subrings(&self) -> Vec<Vec<usize>> {
        let r = self.rank();
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut stack = vec![self.closure(&[])];
        found.insert(stack[0].clone());
        while let Some(s) = stack.pop() {
            for x in 0..r {
                if s.binary_search(&x).is_ok() {
                    continue;
                }
                let mut seed = s.clone();
                seed.push(x);
                let c = self.closure(&seed);
                if found.insert(c.clone()) {
                    stack.push(c);
                }
            }
        }
        let mut out: Vec<Vec<usize>> = found.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Closure of the supports of all `X_i X_{i*}`.
    pub fn adjoint_subring(&self) -> Vec<usize> {
        let seed: Vec<usize> = (0..self.rank())
            .flat_map(|i| self.product(i, self.dual[i]).support())
            .collect();
        self.closure(&seed)
    }

    pub fn is_closed_subset(&self, subset: &[usize]) -> bool {
        let mut s = subset.to_vec();
        s.sort_unstable();
        s.dedup();
        s.first() == Some(&0) && self.closure(&s) == s
    }

    /// The based subring on `subset`, relabeled in increasing index order.
    pub fn subring(&self, subset: &[usize]) -> Result<FusionRing> {
        let mut s = subset.to_vec();
        s.sort_unstable();
        s.dedup();
        if let Some(&i) = s.iter().find(|&&i| i >= self.rank()) {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        if !self.is_closed_subset(&s) {
            return Err(Error::Precondition(format!("{s:?} is not a based subring")));
        }
        let pos = |i: usize| s.iter().position(|&x| x == i).expect("closed");
        let labels = s.iter().map(|&i| self.labels[i].clone()).collect();
        let dual = s.iter().map(|&i| pos(self.dual[i])).collect();
        let n = s
            .iter()
            .map(|&i| {
                s.iter()
                    .map(|&j| s.iter().map(|&k| self.n(i, j, k).clone()).collect())
                    .collect()
            })
            .collect();
        FusionRing::new(labels, dual, n)
    }

    /// Relabels the basis so that old index `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<FusionRing> {
        let r = self.rank();
        let mut seen = vec![false; r];
        if perm.len() != r || perm.iter().any(|&p| p >= r || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::Shape("relabeling is not a permutation of the basis".into()));
        }
        if perm[0] != 0 {
            return Err(Error::Invalid("relabeling must fix the unit".into()));
        }
        let mut inv = vec![0; r];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let labels = (0..r).map(|a| self.labels[inv[a]].clone()).collect();
        let dual = (0..r).map(|a| perm[self.dual[inv[a]]]).collect();
        let n = (0..r)
            .map(|a| {
                (0..r)
                    .map(|b| (0..r).map(|c| self.n(inv[a], inv[b], inv[c]).clone()).collect())
                    .collect()
            })
            .collect();
        let mut out = FusionRing::new(labels, dual, n)?;
        out.notes = self.notes.clone();
        Ok(out)
    }

    /// A relabeling `perm` (fixing 0) with `self.permuted(perm)` having the
    /// same table as `other`, if one exists.
    pub fn isomorphism_to(&self, other: &FusionRing) -> Option<Vec<usize>> {
        let r = self.rank();
        if other.rank() != r {
            return None;
        }
        let sig = |f: &FusionRing, i: usize| -> (BigInt, BigInt, bool) {
            let sq = f.product(i, i);
            (
                sq.length(),
                sq.coeffs.iter().max().cloned().unwrap_or_default(),
                f.dual[i] == i,
            )
        };
        let mut perm = vec![usize::MAX; r];
        let mut used = vec![false; r];
        perm[0] = 0;
        used[0] = true;
        fn consistent(a: &FusionRing, b: &FusionRing, perm: &[usize], upto: usize) -> bool {
            // Checks all constants among indices 0..=upto that are assigned.
            let idx: Vec<usize> = (0..=upto).collect();
            for &x in &idx {
                let dx = a.dual[x];
                if dx <= upto && perm[dx] != b.dual[perm[x]] {
                    return false;
                }
            }
            for &i in &idx {
                for &j in &idx {
                    for &k in &idx {
                        if i != upto && j != upto && k != upto {
                            continue;
                        }
                        if a.n(i, j, k) != b.n(perm[i], perm[j], perm[k]) {
                            return false;
                        }
                    }
                }
            }
            true
        }
        fn go(
            a: &FusionRing,
            b: &FusionRing,
            perm: &mut Vec<usize>,
            used: &mut Vec<bool>,
            pos: usize,
            sig: &dyn Fn(&FusionRing, usize) -> (BigInt, BigInt, bool),
        ) -> bool {
            let r = a.rank();
            if pos == r {
                return true;
            }
            let want = sig(a, pos);
            for c in 1..r {
                if used[c] || sig(b, c) != want {
                    continue;
                }
                perm[pos] = c;
                used[c] = true;
                if consistent(a, b, perm, pos) && go(a, b, perm, used, pos + 1, sig) {
                    return true;
                }
                used[c] = false;
                perm[pos] = usize::MAX;
            }
            false
        }
        if !consistent(self, other, &perm, 0) {
            return None;
        }
        go(self, other, &mut perm, &mut used, 1, &sig).then_some(perm)
    }

    pub fn is_isomorphic(&self, other: &FusionRing) -> bool {
        self.isomorphism_to(other).is_some()
    }
}

/// The Deligne-type product: basis pairs `(i, i')` at index `i * r_b + i'`,
/// with multiplied structure constants.
pub fn product_ring(a: &FusionRing, b: &FusionRing) -> FusionRing {
    let (ra, rb) = (a.rank(), b.rank());
    let r = ra * rb;
    let split = |x: usize| (x / rb, x % rb);
    let labels = (0..r)
        .map(|x| {
            let (i, j) = split(x);
            format!("{}⊠{}", a.labels[i], b.labels[j])
        })
        .collect();
    let dual = (0..r)
        .map(|x| {
            let (i, j) = split(x);
            a.dual[i] * rb + b.dual[j]
        })
        .collect();
    let n = (0..r)
        .map(|x| {
            (0..r)
                .map(|y| {
                    (0..r)
                        .map(|z| {
                            let ((i, i2), (j, j2), (k, k2)) = (split(x), split(y), split(z));
                            a.n(i, j, k) * b.n(i2, j2, k2)
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    FusionRing::new(labels, dual, n).expect("product of well-shaped rings")
}

impl fmt::Display for FusionRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.rank();
        for i in 0..r {
            for j in 0..r {
                let terms: Vec<String> = (0..r)
                    .filter(|&k| !self.n(i, j, k).is_zero())
                    .map(|k| {
                        let m = self.n(i, j, k);
                        if m.is_one() {
                            self.labels[k].clone()
                        } else {
                            format!("{m}{}", self.labels[k])
                        }
                    })
                    .collect();
                writeln!(f, "{} * {} = {}", self.labels[i], self.labels[j], terms.join(" + "))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yang_lee() -> FusionRing {
        FusionRing::from_fn(vec!["1".into(), "X".into()], vec![0, 1], |i, j, k| match (i, j) {
            (0, _) => (j == k) as i64,
            (_, 0) => (i == k) as i64,
            _ => 1,
        })
        .unwrap()
    }

    #[test]
    fn yang_lee_matrix_convention() {
        let m = yang_lee().left_mult_matrix(1).unwrap();
        let want: Vec<Vec<BigInt>> = vec![vec![0.into(), 1.into()], vec![1.into(), 1.into()]];
        assert_eq!(m, want);
        assert!(yang_lee().verify_axioms().is_valid());
    }

    #[test]
    fn unit_ring_is_valid() {
        let u = FusionRing::unit_ring();
        assert!(u.verify_axioms().is_valid());
        assert!(u.check_reciprocity().holds);
        assert_eq!(u.find_subrings(), vec![vec![0]]);
    }

    #[test]
    fn shape_errors_are_not_violations() {
        let bad = FusionRing::new(vec!["1".into()], vec![0], vec![vec![vec![]]]);
        assert!(matches!(bad, Err(Error::Shape(_))));
        let bad = FusionRing::new(vec!["1".into(), "X".into()], vec![0], vec![]);
        assert!(matches!(bad, Err(Error::Shape(_))));
    }

    #[test]
    fn corrupted_duality_is_reported() {
        let r = FusionRing::from_fn(vec!["1".into(), "X".into()], vec![0, 1], |i, j, k| match (i, j) {
            (0, _) => (j == k) as i64,
            (_, 0) => (i == k) as i64,
            _ => (k == 1) as i64,
        })
        .unwrap();
        let rep = r.verify_axioms();
        assert!(rep.contains(Axiom::Duality, &[1, 1]));
        let mut sorted = rep.violations.clone();
        sorted.sort_by(|a, b| a.indices.cmp(&b.indices).then(a.axiom.cmp(&b.axiom)));
        assert_eq!(sorted, rep.violations);
    }

    #[test]
    fn relabeling_round_trip() {
        let y = yang_lee();
        let p = y.permuted(&[0, 1]).unwrap();
        assert!(p.same_table(&y));
        assert_eq!(y.isomorphism_to(&p), Some(vec![0, 1]));
        assert!(y.permuted(&[1, 0]).is_err());
    }

    #[test]
    fn products_and_subrings() {
        let y = yang_lee();
        let yy = product_ring(&y, &y);
        assert_eq!(yy.rank(), 4);
        assert!(yy.verify_axioms().is_valid());
        assert_eq!(yy.label(3), "X⊠X");
        assert_eq!(yy.find_subrings().len(), 4);
        assert_eq!(y.adjoint_subring(), vec![0, 1]);
        assert!(matches!(yy.subring(&[0, 3]), Err(Error::Precondition(_))));
    }
}
