//! Finite groups given by multiplication tables, their cohomology with
//! coefficients in the roots of unity, twisted group algebras, and the
//! pairs `(H, psi)` that classify module categories over `Vec_G^omega`.

mod cochain;
mod cohomology;
mod modcat;
pub(crate) mod modlin;
mod twisted;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use cochain::{coboundary, is_coboundary, is_cocycle, standard_three_cocycle, Cochain};
pub use cohomology::{cohomology, CohomologyGroup, PrimaryFactor};
pub use modcat::{count_fiber_functors, enumerate_module_categories, FiberFunctorCount, ModuleCategory};
pub use twisted::{is_nondegenerate, twisted_group_algebra_irreps};

/// A finite group with identity at index 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

/// Serialized form `{"order": n, "table": [[...]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupTable {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

impl FiniteGroup {
    /// Checks the table for closure, identity at 0, inverses and associativity.
    pub fn from_table(name: impl Into<String>, labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Invalid("empty group table".into()));
        }
        if labels.len() != n {
            return Err(Error::Shape(format!("{} labels for order {n}", labels.len())));
        }
        for row in &table {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(Error::Shape(format!(
                    "group table must be {n}x{n} with entries below {n}"
                )));
            }
            let distinct: BTreeSet<usize> = row.iter().copied().collect();
            if distinct.len() != n {
                return Err(Error::Invalid("a row of the table is not a permutation".into()));
            }
        }
        for a in 0..n {
            if table[0][a] != a || table[a][0] != a {
                return Err(Error::Invalid("index 0 is not the identity".into()));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::Invalid(format!("associativity fails at ({a},{b},{c})")));
                    }
                }
            }
        }
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| table[a][b] == 0)
                .ok_or_else(|| Error::Invalid(format!("element {a} has no inverse")))?;
            if table[inverse[a]][a] != 0 {
                return Err(Error::Invalid(format!("element {a} has no two-sided inverse")));
            }
        }
        Ok(FiniteGroup {
            name: name.into(),
            labels,
            table,
            inverse,
        })
    }

    pub fn from_group_table(name: impl Into<String>, t: &GroupTable) -> Result<FiniteGroup> {
        if t.table.len() != t.order {
            return Err(Error::Shape(format!(
                "table has {} rows for order {}",
                t.table.len(),
                t.order
            )));
        }
        let labels = (0..t.order).map(|i| i.to_string()).collect();
        FiniteGroup::from_table(name, labels, t.table.clone())
    }

    pub fn to_group_table(&self) -> GroupTable {
        GroupTable {
            order: self.order(),
            table: self.table.clone(),
        }
    }

    pub fn trivial() -> FiniteGroup {
        FiniteGroup::cyclic(1)
    }

    /// `Z_n` with elements `g^k` at index `k`.
    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n >= 1, "cyclic group of order zero");
        let labels = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(format!("Z{n}"), labels, table).expect("cyclic table")
    }

    /// `a x b` with the pair `(i, j)` at index `i * |b| + j`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
        let nb = b.order();
        let n = a.order() * nb;
        let labels = (0..n)
            .map(|x| {
                let (i, j) = (x / nb, x % nb);
                if x == 0 {
                    "1".to_string()
                } else {
                    format!("({},{})", a.labels[i], b.labels[j])
                }
            })
            .collect();
        let table = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb))
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(format!("{}x{}", a.name, b.name), labels, table).expect("product table")
    }

    /// The dihedral group of order `2m`, elements `r^i s^j` at index `i + m j`.
    pub fn dihedral(m: usize) -> FiniteGroup {
        assert!(m >= 1);
        let n = 2 * m;
        let split = |x: usize| (x % m, x / m);
        let labels = (0..n)
            .map(|x| {
                let (i, j) = split(x);
                let r = match i {
                    0 => String::new(),
                    1 => "r".to_string(),
                    _ => format!("r^{i}"),
                };
                match (r.is_empty(), j) {
                    (true, 0) => "1".to_string(),
                    (true, _) => "s".to_string(),
                    (false, 0) => r,
                    (false, _) => format!("{r}s"),
                }
            })
            .collect();
        let table = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        let ((i, a), (k, b)) = (split(x), split(y));
                        let rot = if a == 0 { (i + k) % m } else { (i + m - k) % m };
                        rot + m * ((a + b) % 2)
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(format!("D{n}"), labels, table).expect("dihedral table")
    }

    /// The quaternion group, elements `1, -1, i, -i, j, -j, k, -k`.
    pub fn quaternion() -> FiniteGroup {
        // Units 0..4 are 1, i, j, k; unit products as (sign, unit).
        const UNIT: [[(bool, usize); 4]; 4] = [
            [(false, 0), (false, 1), (false, 2), (false, 3)],
            [(false, 1), (true, 0), (false, 3), (true, 2)],
            [(false, 2), (true, 3), (true, 0), (false, 1)],
            [(false, 3), (false, 2), (true, 1), (true, 0)],
        ];
        let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].map(String::from).to_vec();
        let table = (0..8)
            .map(|x: usize| {
                (0..8)
                    .map(|y: usize| {
                        let (neg, u) = UNIT[x / 2][y / 2];
                        let sign = (x % 2 == 1) ^ (y % 2 == 1) ^ neg;
                        2 * u + usize::from(sign)
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_table("Q8", labels, table).expect("quaternion table")
    }

    /// The symmetric group on `m` letters, permutations in lexicographic
    /// order (identity first), composed as functions: `(pq)(x) = p(q(x))`.
    pub fn symmetric(m: usize) -> FiniteGroup {
        let mut perms: Vec<Vec<usize>> = vec![(0..m).collect()];
        loop {
            let mut p = perms.last().unwrap().clone();
            let Some(i) = (1..m).rev().find(|&i| p[i - 1] < p[i]) else {
                break;
            };
            let j = (i..m).rev().find(|&j| p[j] > p[i - 1]).unwrap();
            p.swap(i - 1, j);
            p[i..].reverse();
            perms.push(p);
        }
        let index = |q: &Vec<usize>| perms.iter().position(|p| p == q).unwrap();
        let table = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| index(&(0..m).map(|x| p[q[x]]).collect()))
                    .collect()
            })
            .collect();
        let labels = perms.iter().map(|p| cycle_notation(p)).collect();
        FiniteGroup::from_table(format!("S{m}"), labels, table).expect("symmetric table")
    }

    /// Parses `1`, `zN`, products `zAxzB`, `d2m`, `q8` and `sN`.
    pub fn parse(spec: &str) -> Result<FiniteGroup> {
        let s = spec.trim().to_ascii_lowercase();
        let bad = || Error::Invalid(format!("unknown group `{spec}`"));
        if s == "1" || s == "trivial" {
            return Ok(FiniteGroup::trivial());
        }
        let parts: Vec<&str> = s.split('x').collect();
        if parts.len() > 1 {
            let mut acc: Option<FiniteGroup> = None;
            for p in parts {
                let g = FiniteGroup::parse(p)?;
                acc = Some(match acc {
                    None => g,
                    Some(a) => FiniteGroup::direct_product(&a, &g),
                });
            }
            return acc.ok_or_else(bad);
        }
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(bad)?;
        let k: usize = chars.as_str().parse().map_err(|_| bad())?;
        match head {
            'z' | 'c' if k >= 1 => Ok(FiniteGroup::cyclic(k)),
            'd' if k >= 2 && k.is_multiple_of(2) => Ok(FiniteGroup::dihedral(k / 2)),
            'q' if k == 8 => Ok(FiniteGroup::quaternion()),
            's' if (1..=5).contains(&k) => Ok(FiniteGroup::symmetric(k)),
            _ => Err(bad()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g x g^-1`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Smallest subgroup containing `gens`, sorted.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let n = self.order();
        let mut inside = vec![false; n];
        inside[0] = true;
        let mut members = vec![0];
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    members.push(y);
                    frontier.push(y);
                }
            }
        }
        members.sort_unstable();
        members
    }

    /// All subgroups as sorted element lists, ordered by size and then
    /// lexicographically.
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        found.insert(vec![0]);
        let mut stack = vec![vec![0usize]];
        while let Some(h) = stack.pop() {
            for x in 0..n {
                if h.binary_search(&x).is_ok() {
                    continue;
                }
                let mut gens = h.clone();
                gens.push(x);
                let c = self.generated(&gens);
                if found.insert(c.clone()) {
                    stack.push(c);
                }
            }
        }
        let mut out: Vec<Vec<usize>> = found.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    pub fn conjugate_subgroup(&self, g: usize, h: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = h.iter().map(|&x| self.conjugate(g, x)).collect();
        out.sort_unstable();
        out
    }

    pub fn normalizer(&self, h: &[usize]) -> Vec<usize> {
        (0..self.order())
            .filter(|&g| self.conjugate_subgroup(g, h) == h)
            .collect()
    }

    /// The subgroup on the sorted element list `h` as a group in its own
    /// right; its index `a` corresponds to `h[a]`.
    pub fn subgroup(&self, h: &[usize]) -> Result<FiniteGroup> {
        let pos = |x: usize| h.binary_search(&x).ok();
        if h.first() != Some(&0) || h.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Precondition(
                "subgroup must be a sorted list starting at 0".into(),
            ));
        }
        let mut table = Vec::with_capacity(h.len());
        for &a in h {
            let mut row = Vec::with_capacity(h.len());
            for &b in h {
                row.push(pos(self.mul(a, b)).ok_or_else(|| Error::Precondition(format!("{h:?} is not closed")))?);
            }
            table.push(row);
        }
        let labels = h.iter().map(|&x| self.labels[x].clone()).collect();
        FiniteGroup::from_table(format!("subgroup of {}", self.name), labels, table)
    }

    /// The same group with element `i` moved to index `perm[i]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<FiniteGroup> {
        let n = self.order();
        if perm.len() != n || perm[0] != 0 || perm.iter().collect::<BTreeSet<_>>().len() != n {
            return Err(Error::Invalid("relabeling must be a permutation fixing 0".into()));
        }
        let mut inv = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let table = (0..n)
            .map(|a| (0..n).map(|b| perm[self.mul(inv[a], inv[b])]).collect())
            .collect();
        let labels = (0..n).map(|a| self.labels[inv[a]].clone()).collect();
        FiniteGroup::from_table(self.name.clone(), labels, table)
    }
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            out.push_str(&(x + 1).to_string());
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        "1".into()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_groups() {
        assert_eq!(FiniteGroup::parse("d8").unwrap().subgroups().len(), 10);
        let q8 = FiniteGroup::parse("q8").unwrap();
        assert_eq!((0..8).filter(|&a| q8.element_order(a) == 2).count(), 1);
        assert!(!q8.is_abelian());
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.subgroups().len(), 6);
        assert_eq!(s3.labels()[0], "1");
        let k = FiniteGroup::parse("z2xz2").unwrap();
        assert!(k.is_abelian());
        assert_eq!(k.subgroups().len(), 5);
        assert!(FiniteGroup::parse("d7").is_err());
    }

    #[test]
    fn cyclic_subgroups_are_divisors() {
        for n in 1..=12usize {
            let divisors = (1..=n).filter(|d| n % d == 0).count();
            assert_eq!(FiniteGroup::cyclic(n).subgroups().len(), divisors);
        }
    }

    #[test]
    fn bad_tables_are_rejected() {
        let t = vec![vec![0, 1], vec![1, 1]];
        assert!(FiniteGroup::from_table("x", vec!["a".into(), "b".into()], t).is_err());
    }
}
