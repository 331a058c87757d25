//! Pairs `(H, psi)` with `omega|_H = d psi`, up to conjugation by `G`.
//!
//! For a fixed `H` the compatible `psi` form a torsor over `H^2(H, C^x)`,
//! so classes are labelled by coordinates of `psi - psi_0` for one
//! solution `psi_0`. The normalizer of `H` acts on these labels; when
//! `omega` is nonzero the action carries the correction
//! `Omega_g(x, y) = omega(gx, gy, g) omega(g, x, y) / omega(gx, g, y)`
//! (with `gx = g x g^-1`), which is checked to restore `d psi = omega`.

use serde::Serialize;

use super::cochain::Cochain;
use super::cohomology::{cohomology, CohomologyGroup};
use super::modlin::solve_mod;
use super::{coboundary, is_cocycle, is_nondegenerate, FiniteGroup};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleCategory {
    /// Elements of `H` as indices into `G`, sorted.
    pub subgroup: Vec<usize>,
    pub subgroup_labels: Vec<String>,
    /// Coordinates of `psi` relative to the base solution, along the
    /// primary factors of `H^2(H)`.
    pub psi_class: Vec<u64>,
    /// `psi` as a cochain on `H`, indexed by positions in `subgroup`.
    pub psi: Cochain,
    /// Size of the `G`-orbit of the pair.
    pub orbit_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberFunctorCount {
    pub count: usize,
    pub witnesses: Vec<ModuleCategory>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        self.0[x] = r;
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.0[hi] = lo;
        }
    }
}

/// Conjugacy classes of subgroups, each led by its lexicographically
/// smallest member.
fn subgroup_classes(g: &FiniteGroup) -> Vec<Vec<Vec<usize>>> {
    let mut classes: Vec<Vec<Vec<usize>>> = Vec::new();
    for h in g.subgroups() {
        if classes.iter().any(|c| c.contains(&h)) {
            continue;
        }
        let mut class: Vec<Vec<usize>> = (0..g.order()).map(|x| g.conjugate_subgroup(x, &h)).collect();
        class.sort();
        class.dedup();
        classes.push(class);
    }
    classes
}

/// Some `psi` on `hg` with `d psi = omega_h` over `Z/m`.
fn solve_psi(hg: &FiniteGroup, omega_h: &Cochain) -> Option<Cochain> {
    let n = hg.order();
    let probe = Cochain::zero(n, 2, 1);
    let rows: Vec<Vec<(usize, i64)>> = super::cochain::tuples(n, 3)
        .map(|t| {
            super::cochain::coboundary_terms(hg, &t)
                .into_iter()
                .map(|(s, u)| (probe.index(&u), s))
                .collect()
        })
        .collect();
    solve_mod(&rows, n * n, omega_h.values(), omega_h.modulus())
        .map(|x| Cochain::new(n, 2, omega_h.modulus(), x).expect("well-shaped"))
}

struct Action<'a> {
    g: &'a FiniteGroup,
    hg: FiniteGroup,
    h: Vec<usize>,
    omega: &'a Cochain,
    omega_h: Cochain,
}

impl Action<'_> {
    fn pos(&self, x: usize) -> usize {
        self.h.binary_search(&x).expect("normalizer preserves H")
    }

    /// `psi(g^-1 x g, g^-1 y g)` on `H`.
    fn transport(&self, psi: &Cochain, g: usize) -> Cochain {
        let gi = self.g.inv(g);
        let map: Vec<usize> = self.h.iter().map(|&x| self.pos(self.g.conjugate(gi, x))).collect();
        psi.pullback(self.h.len(), &map)
    }

    fn omega_correction(&self, g: usize, variant: usize) -> Cochain {
        let (grp, w) = (self.g, self.omega);
        let t = if variant.is_multiple_of(2) { g } else { grp.inv(g) };
        let sign: i64 = if variant < 2 { 1 } else { -1 };
        let m = w.modulus() as i64;
        let h = &self.h;
        Cochain::from_fn(&self.hg, 2, w.modulus(), |ab| {
            let (x, y) = (h[ab[0]], h[ab[1]]);
            let (tx, ty) = (grp.conjugate(t, x), grp.conjugate(t, y));
            let v = w.get(&[tx, ty, t]) as i64 + w.get(&[t, x, y]) as i64 - w.get(&[tx, t, y]) as i64;
            (sign * v).rem_euclid(m)
        })
    }

    /// The correction making `transport(psi, g) + Omega` compatible again.
    fn correction(&self, g: usize, psi0: &Cochain) -> Result<Cochain> {
        let moved = self.transport(psi0, g);
        if self.omega.is_zero() {
            return Ok(Cochain::zero(self.h.len(), 2, psi0.modulus()));
        }
        for variant in 0..4 {
            let om = self.omega_correction(g, variant);
            let cand = moved.add(&om)?;
            if coboundary(&self.hg, &cand)? == self.omega_h {
                return Ok(om);
            }
        }
        Err(Error::Unsupported(
            "no conjugation correction restores the cocycle condition for this omega".into(),
        ))
    }
}

/// Indecomposable module categories over `Vec_G^omega`, as conjugacy
/// classes of pairs `(H, psi)`.
pub fn enumerate_module_categories(g: &FiniteGroup, omega: &Cochain) -> Result<Vec<ModuleCategory>> {
    let n = g.order();
    if omega.degree() != 3 || omega.order() != n {
        return Err(Error::Shape("omega must be a 3-cochain on G".into()));
    }
    if !is_cocycle(g, omega)? {
        return Err(Error::Invalid("omega is not a 3-cocycle".into()));
    }
    let base = num_integer::lcm(omega.modulus(), n as u64);
    // A C^x-coboundary with values in mu_base has a primitive in mu_{base |G|}.
    let m = if omega.is_zero() { base } else { base * n as u64 };
    let omega = omega.rescaled(m)?;
    let mut out = Vec::new();
    for class in subgroup_classes(g) {
        let h = class[0].clone();
        let hg = g.subgroup(&h)?;
        let omega_h = omega.pullback(h.len(), &h);
        let Some(psi0) = solve_psi(&hg, &omega_h) else {
            continue;
        };
        let h2: CohomologyGroup = cohomology(&hg, 2, m)?;
        let labels = h2.all_classes();
        let action = Action {
            g,
            hg: hg.clone(),
            h: h.clone(),
            omega: &omega,
            omega_h,
        };
        let psis: Vec<Cochain> = labels
            .iter()
            .map(|c| psi0.add(&h2.cocycle_for(c)?))
            .collect::<Result<_>>()?;
        let mut uf = UnionFind((0..labels.len()).collect());
        for x in g.normalizer(&h) {
            let om = action.correction(x, &psi0)?;
            for (i, psi) in psis.iter().enumerate() {
                let moved = action.transport(psi, x).add(&om)?;
                let coords = h2.class_coordinates(&hg, &moved.sub(&psi0)?)?;
                let j = labels
                    .iter()
                    .position(|l| *l == coords)
                    .ok_or_else(|| Error::Internal("class coordinates out of range".into()))?;
                uf.union(i, j);
            }
        }
        let mut seen = Vec::new();
        for i in 0..labels.len() {
            let r = uf.find(i);
            if seen.contains(&r) {
                continue;
            }
            seen.push(r);
            let size = (0..labels.len()).filter(|&j| uf.find(j) == r).count();
            out.push(ModuleCategory {
                subgroup: h.clone(),
                subgroup_labels: h.iter().map(|&x| g.labels()[x].clone()).collect(),
                psi_class: labels[r].clone(),
                psi: psis[r].clone(),
                orbit_size: size * class.len(),
            });
        }
    }
    out.sort_by(|a, b| {
        (a.subgroup.len(), &a.subgroup, &a.psi_class).cmp(&(b.subgroup.len(), &b.subgroup, &b.psi_class))
    });
    Ok(out)
}

/// Fiber functors on `Rep G`: pairs `(H, psi)` with `psi` nondegenerate,
/// up to conjugation.
pub fn count_fiber_functors(g: &FiniteGroup) -> Result<FiberFunctorCount> {
    let n = g.order();
    let cats = enumerate_module_categories(g, &Cochain::zero(n, 3, n as u64))?;
    let mut witnesses = Vec::new();
    for c in cats {
        let hg = g.subgroup(&c.subgroup)?;
        if is_nondegenerate(&hg, &c.psi)? {
            witnesses.push(c);
        }
    }
    Ok(FiberFunctorCount {
        count: witnesses.len(),
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::standard_three_cocycle;

    fn trivial(g: &FiniteGroup) -> Cochain {
        Cochain::zero(g.order(), 3, g.order() as u64)
    }

    #[test]
    fn cyclic_and_klein() {
        let z4 = FiniteGroup::cyclic(4);
        assert_eq!(enumerate_module_categories(&z4, &trivial(&z4)).unwrap().len(), 3);
        let k = FiniteGroup::parse("z2xz2").unwrap();
        assert_eq!(enumerate_module_categories(&k, &trivial(&k)).unwrap().len(), 6);
        let one = FiniteGroup::trivial();
        assert_eq!(enumerate_module_categories(&one, &trivial(&one)).unwrap().len(), 1);
    }

    #[test]
    fn twisted_z2_only_has_the_trivial_subgroup() {
        let z2 = FiniteGroup::cyclic(2);
        let cats = enumerate_module_categories(&z2, &standard_three_cocycle(2, 1)).unwrap();
        assert_eq!(cats.len(), 1);
        assert_eq!(cats[0].subgroup, vec![0]);
    }

    #[test]
    fn fiber_functors_of_z2() {
        assert_eq!(count_fiber_functors(&FiniteGroup::cyclic(2)).unwrap().count, 1);
    }
}
