//! Exhaustive search for fusion rings of small rank.
//!
//! For `a, b, c` nonzero write `t(a, b, c) = N_{ab}^{c*}`, the coefficient
//! of `1` in `X_a X_b X_c`. In an associative ring satisfying the duality
//! axioms `t` is invariant under rotation and under
//! `(a, b, c) -> (c*, b*, a*)`, so the search assigns one value per orbit.
//! Associativity is checked as soon as every constant in an identity is
//! known, and only rings equal to their own canonical form are kept.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::ring::FusionRing;

pub const MAX_RANK: usize = 5;
pub const MAX_ENTRY: u32 = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSpec {
    pub rank: usize,
    /// Largest structure constant allowed.
    pub max_entry: u32,
    /// Fixed duality; every involution fixing 0 is tried when absent.
    pub dual: Option<Vec<usize>>,
    pub commutative_only: bool,
    pub require_reciprocity: bool,
}

impl SearchSpec {
    pub fn new(rank: usize, max_entry: u32) -> SearchSpec {
        SearchSpec {
            rank,
            max_entry,
            dual: None,
            commutative_only: false,
            require_reciprocity: false,
        }
    }

    fn check(&self) -> Result<()> {
        if self.rank == 0 || self.rank > MAX_RANK {
            return Err(Error::Precondition(format!("rank must be between 1 and {MAX_RANK}")));
        }
        if self.max_entry == 0 || self.max_entry > MAX_ENTRY {
            return Err(Error::Precondition(format!(
                "max entry must be between 1 and {MAX_ENTRY}"
            )));
        }
        if let Some(d) = &self.dual {
            let r = self.rank;
            if d.len() != r || d[0] != 0 || d.iter().any(|&x| x >= r) || (0..r).any(|i| d[d[i]] != i) {
                return Err(Error::Precondition(
                    "dual must be an involution of the basis fixing 0".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Involutions of `0..r` fixing 0.
fn involutions(r: usize) -> Vec<Vec<usize>> {
    fn go(d: &mut Vec<Option<usize>>, out: &mut Vec<Vec<usize>>) {
        let Some(i) = d.iter().position(Option::is_none) else {
            out.push(d.iter().map(|x| x.expect("filled")).collect());
            return;
        };
        d[i] = Some(i);
        go(d, out);
        for j in i + 1..d.len() {
            if d[j].is_none() {
                d[i] = Some(j);
                d[j] = Some(i);
                go(d, out);
                d[j] = None;
            }
        }
        d[i] = None;
    }
    let mut d = vec![None; r];
    d[0] = Some(0);
    let mut out = Vec::new();
    go(&mut d, &mut out);
    out
}

#[derive(Clone, Copy)]
enum Entry {
    Const(i64),
    Var(usize),
}

struct Layout {
    r: usize,
    /// `entries[(i*r + j)*r + k]` describes `N_{ij}^k`.
    entries: Vec<Entry>,
    vars: usize,
    /// Associativity identities `(i, j, k, l)` grouped by the last variable they involve.
    checks: Vec<Vec<[usize; 4]>>,
}

impl Layout {
    fn new(r: usize, dual: &[usize]) -> Layout {
        let idx = |a: usize, b: usize, c: usize| (a * r + b) * r + c;
        let mut orbit = vec![usize::MAX; r * r * r];
        let mut vars = 0;
        for a in 1..r {
            for b in 1..r {
                for c in 1..r {
                    if orbit[idx(a, b, c)] != usize::MAX {
                        continue;
                    }
                    let mut stack = vec![(a, b, c)];
                    while let Some((x, y, z)) = stack.pop() {
                        if orbit[idx(x, y, z)] != usize::MAX {
                            continue;
                        }
                        orbit[idx(x, y, z)] = vars;
                        stack.push((y, z, x));
                        stack.push((dual[z], dual[y], dual[x]));
                    }
                    vars += 1;
                }
            }
        }
        let mut entries = Vec::with_capacity(r * r * r);
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    entries.push(if i == 0 {
                        Entry::Const(i64::from(j == k))
                    } else if j == 0 {
                        Entry::Const(i64::from(i == k))
                    } else if k == 0 {
                        Entry::Const(i64::from(i == dual[j]))
                    } else {
                        Entry::Var(orbit[idx(i, j, dual[k])])
                    });
                }
            }
        }
        let mut layout = Layout {
            r,
            entries,
            vars,
            checks: vec![Vec::new(); vars],
        };
        for i in 1..r {
            for j in 1..r {
                for k in 1..r {
                    for l in 0..r {
                        let mut last = None;
                        for m in 0..r {
                            for e in [(i, j, m), (m, k, l), (j, k, m), (i, m, l)] {
                                if let Entry::Var(v) = layout.entry(e.0, e.1, e.2) {
                                    last = last.max(Some(v));
                                }
                            }
                        }
                        if let Some(v) = last {
                            layout.checks[v].push([i, j, k, l]);
                        }
                    }
                }
            }
        }
        layout
    }

    fn entry(&self, i: usize, j: usize, k: usize) -> Entry {
        self.entries[(i * self.r + j) * self.r + k]
    }

    fn value(&self, vals: &[i64], i: usize, j: usize, k: usize) -> i64 {
        match self.entry(i, j, k) {
            Entry::Const(c) => c,
            Entry::Var(v) => vals[v],
        }
    }

    fn associative_at(&self, vals: &[i64], [i, j, k, l]: [usize; 4]) -> bool {
        let (mut lhs, mut rhs) = (0, 0);
        for m in 0..self.r {
            lhs += self.value(vals, i, j, m) * self.value(vals, m, k, l);
            rhs += self.value(vals, j, k, m) * self.value(vals, i, m, l);
        }
        lhs == rhs
    }
}

fn labels(r: usize) -> Vec<String> {
    std::iter::once("1".to_string())
        .chain((1..r).map(|i| format!("X{i}")))
        .collect()
}

/// All fusion rings within the bounds, one canonical representative per
/// isomorphism class, sorted.
pub fn enumerate(spec: &SearchSpec) -> Result<Vec<FusionRing>> {
    spec.check()?;
    let r = spec.rank;
    let duals = match &spec.dual {
        Some(d) => vec![d.clone()],
        None => involutions(r),
    };
    let mut found: Vec<(Vec<usize>, Vec<i64>)> = Vec::new();
    for dual in duals {
        let layout = Layout::new(r, &dual);
        let mut vals = vec![0i64; layout.vars];
        search(&layout, &mut vals, 0, i64::from(spec.max_entry), &mut |vals| {
            let tensor: Vec<i64> = (0..r * r * r)
                .map(|x| layout.value(vals, x / (r * r), (x / r) % r, x % r))
                .collect();
            let ring = FusionRing::from_fn(labels(r), dual.clone(), |i, j, k| tensor[(i * r + j) * r + k])
                .expect("well-shaped");
            if spec.commutative_only && !ring.is_commutative() {
                return;
            }
            if spec.require_reciprocity && !ring.check_reciprocity().holds {
                return;
            }
            let key = key_of(&ring);
            if key_of(&canonical_form(&ring).0) == key {
                found.push(key);
            }
        });
    }
    found.sort();
    found.dedup();
    Ok(found
        .into_iter()
        .map(|(dual, t)| FusionRing::from_fn(labels(r), dual, |i, j, k| t[(i * r + j) * r + k]).expect("well-shaped"))
        .collect())
}

fn search(layout: &Layout, vals: &mut [i64], v: usize, max: i64, emit: &mut dyn FnMut(&[i64])) {
    if v == layout.vars {
        emit(vals);
        return;
    }
    for x in 0..=max {
        vals[v] = x;
        if layout.checks[v].iter().all(|&q| layout.associative_at(vals, q)) {
            search(layout, vals, v + 1, max, emit);
        }
    }
    vals[v] = 0;
}

/// `(dual, N)` flattened; the order used for canonical forms.
fn key_of(ring: &FusionRing) -> (Vec<usize>, Vec<i64>) {
    let t = ring
        .tensor()
        .into_iter()
        .flatten()
        .flatten()
        .map(|x: BigInt| x.to_i64().unwrap_or(i64::MAX))
        .collect();
    (ring.duals().to_vec(), t)
}

fn permutations_fixing_zero(r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut rest: Vec<usize> = (1..r).collect();
    fn go(k: usize, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == rest.len() {
            let mut p = vec![0];
            p.extend_from_slice(rest);
            out.push(p);
            return;
        }
        for i in k..rest.len() {
            rest.swap(k, i);
            go(k + 1, rest, out);
            rest.swap(k, i);
        }
    }
    go(0, &mut rest, &mut out);
    out
}

/// The relabeling of `ring` with the smallest `(dual, N)`, with the
/// permutation `perm` such that it equals `ring.permuted(perm)`.
pub fn canonical_form(ring: &FusionRing) -> (FusionRing, Vec<usize>) {
    permutations_fixing_zero(ring.rank())
        .into_iter()
        .map(|p| (ring.permuted(&p).expect("permutation fixing 0"), p))
        .min_by_key(|(x, _)| key_of(x))
        .expect("identity permutation")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_two_is_a_n() {
        let rings = enumerate(&SearchSpec::new(2, 3)).unwrap();
        let n11: Vec<i64> = rings.iter().map(|r| r.n_i64(1, 1, 1)).collect();
        assert_eq!(n11, vec![0, 1, 2, 3]);
    }

    #[test]
    fn involution_count() {
        assert_eq!(involutions(1).len(), 1);
        assert_eq!(involutions(4).len(), 4);
        assert_eq!(involutions(5).len(), 10);
    }

    #[test]
    fn bounds() {
        assert!(enumerate(&SearchSpec::new(6, 1)).is_err());
        assert!(enumerate(&SearchSpec::new(2, 7)).is_err());
        let mut s = SearchSpec::new(3, 1);
        s.dual = Some(vec![1, 0, 2]);
        assert!(enumerate(&s).is_err());
    }
}
