//! Constructors for the named fusion rings.
//!
//! Each constructor returns a ring that passes [`FusionRing::verify_axioms`].
//! Known facts about categorifications are attached as notes; they are
//! metadata and are never recomputed.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::ring::FusionRing;

/// Note attached to rings whose realizations are classified.
pub const NOTE_A0: &str =
    "rank-2 classification (Ostrik): A_0 has two realizations, Vec(Z2) and its twist by the nontrivial 3-cocycle";
pub const NOTE_A1: &str =
    "rank-2 classification (Ostrik): A_1 has two realizations, the Yang-Lee categories (even part of sl2 at level 3 and its Galois image)";
pub const NOTE_AN: &str = "rank-2 classification (Ostrik): A_n has no realization for n > 1";
pub const NOTE_TY_ABELIAN: &str =
    "Tambara-Yamagami: realizations are parametrized by a sign and a symmetric isomorphism G -> G^";
pub const NOTE_TY_NONABELIAN: &str = "Tambara-Yamagami: not realizable, the group is nonabelian";

/// The group ring `Z[G]` with `g* = g^-1`.
pub fn group_ring(g: &FiniteGroup) -> FusionRing {
    let n = g.order();
    let dual = (0..n).map(|x| g.inv(x)).collect();
    FusionRing::from_fn(g.labels().to_vec(), dual, |i, j, k| i64::from(g.mul(i, j) == k))
        .expect("well-shaped")
        .with_note(format!(
            "group ring of {}: realizations are H^3(G, C^x)/Out(G)",
            g.name()
        ))
}

/// Grothendieck ring of integrable `sl2` modules at level `l`, with weights `V_0..V_l`.
pub fn sl2_verlinde(l: usize) -> FusionRing {
    let labels = (0..=l).map(|i| format!("V{i}")).collect();
    FusionRing::from_fn(labels, (0..=l).collect(), |i, j, k| {
        let lo = i.abs_diff(j);
        let hi = (i + j).min(2 * l - i - j);
        i64::from(lo <= k && k <= hi && (i + j + k) % 2 == 0)
    })
    .expect("well-shaped")
}

/// `A_n = <1, X>` with `X^2 = 1 + nX`.
pub fn a_n(n: u32) -> FusionRing {
    let n = i64::from(n);
    let ring = FusionRing::from_fn(vec!["1".into(), "X".into()], vec![0, 1], |i, j, k| match (i, j) {
        (0, _) => i64::from(j == k),
        (_, 0) => i64::from(i == k),
        _ => {
            if k == 0 {
                1
            } else {
                n
            }
        }
    })
    .expect("well-shaped");
    ring.with_note(match n {
        0 => NOTE_A0,
        1 => NOTE_A1,
        _ => NOTE_AN,
    })
}

/// `B_n`: `Z[Z_n]` extended by a self-dual `Y` with `X_i Y = Y X_i = Y` and
/// `Y^2 = (n-1) Y + sum X_i`.
pub fn b_n(n: usize) -> Result<FusionRing> {
    if n == 0 {
        return Err(Error::Precondition("B_n needs n >= 1".into()));
    }
    let mut labels = vec!["1".to_string()];
    labels.extend((1..n).map(|i| format!("X{i}")));
    labels.push("Y".into());
    let mut dual: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    dual.push(n);
    let y = n;
    let q = n + 1;
    let ring = FusionRing::from_fn(labels, dual, |i, j, k| match (i == y, j == y) {
        (false, false) => i64::from((i + j) % n == k),
        (true, true) => {
            if k == y {
                n as i64 - 1
            } else {
                1
            }
        }
        _ => i64::from(k == y),
    })?;
    let note = if is_prime_power(q) {
        let affine = format!("Rep of the affine group of F_{q}");
        let count = match q {
            3 => format!("three realizations, including {affine}"),
            4 | 8 => format!("two realizations, including {affine}"),
            _ => format!("one realization, {affine}"),
        };
        format!("B_n (Etingof-Gelaki-Ostrik): n+1 = {q} is a prime power; {count}")
    } else {
        format!("B_n (Etingof-Gelaki-Ostrik): not realizable, n+1 = {q} is not a prime power")
    };
    Ok(ring.with_note(note))
}

fn is_prime_power(q: usize) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..=q).find(|p| q.is_multiple_of(*p)).expect("q >= 2");
    let mut m = q;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

/// The Tambara-Yamagami ring `Z[G] + Z X` with `X^2 = sum g` and `gX = Xg = X`.
///
/// A nonabelian group still gives a fusion ring; it carries a note that
/// the ring has no categorification.
pub fn tambara_yamagami(g: &FiniteGroup) -> FusionRing {
    let n = g.order();
    let mut labels = g.labels().to_vec();
    labels.push("X".into());
    let mut dual: Vec<usize> = (0..n).map(|x| g.inv(x)).collect();
    dual.push(n);
    let ring = FusionRing::from_fn(labels, dual, |i, j, k| match (i == n, j == n) {
        (false, false) => i64::from(g.mul(i, j) == k),
        (true, true) => i64::from(k < n),
        _ => i64::from(k == n),
    })
    .expect("well-shaped");
    ring.with_note(if g.is_abelian() {
        NOTE_TY_ABELIAN
    } else {
        NOTE_TY_NONABELIAN
    })
}

/// `Rep S_3`: `chi^2 = 1`, `chi V = V`, `V^2 = 1 + chi + V`.
pub fn rep_s3() -> FusionRing {
    let labels = vec!["1".into(), "chi".into(), "V".into()];
    FusionRing::from_fn(labels, vec![0, 1, 2], |i, j, k| match (i, j) {
        (0, _) => i64::from(j == k),
        (_, 0) => i64::from(i == k),
        (1, 1) => i64::from(k == 0),
        (1, 2) | (2, 1) => i64::from(k == 2),
        _ => 1,
    })
    .expect("well-shaped")
    .with_note("Rep(S3)")
}

/// The Ising ring `<1, g, X>`.
pub fn ising() -> FusionRing {
    let ring = tambara_yamagami(&FiniteGroup::cyclic(2));
    ring.with_labels(vec!["1".into(), "g".into(), "X".into()])
        .expect("rank 3")
        .with_note("Ising: sl2 at level 2 with V0 = 1, V1 = X, V2 = g")
}

/// The Yang-Lee ring `A_1`.
pub fn yang_lee() -> FusionRing {
    a_n(1)
}

/// `<1, X, Y>` with `XY = 2X + Y`, `X^2 = 1 + 2Y`, `Y^2 = 1 + X + 2Y`.
///
/// The dimension of `X` generates a cubic field with Galois group `S_3`.
pub fn galois_s3() -> FusionRing {
    let t: [[[i64; 3]; 3]; 3] = [
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[0, 1, 0], [1, 0, 2], [0, 2, 1]],
        [[0, 0, 1], [0, 2, 1], [1, 1, 2]],
    ];
    FusionRing::from_fn(vec!["1".into(), "X".into(), "Y".into()], vec![0, 1, 2], |i, j, k| {
        t[i][j][k]
    })
    .expect("well-shaped")
}

/// Names accepted by [`builtin`] that take no parameter.
pub const FIXED_NAMES: [&str; 5] = ["unit", "yang_lee", "ising", "rep_s3", "galois_s3"];

/// Looks up a ring by name.
///
/// Besides [`FIXED_NAMES`], accepted forms are `a_N`, `b_N`, `sl2_L`,
/// `group_G` and `ty_G`, where `G` is any spec understood by
/// [`FiniteGroup::parse`], e.g. `ty_z2xz2` or `group_s3`.
pub fn builtin(name: &str) -> Result<FusionRing> {
    let bad = || Error::Invalid(format!("unknown builtin ring `{name}`"));
    let number = |s: &str| s.parse::<usize>().map_err(|_| bad());
    match name {
        "unit" => return Ok(FusionRing::unit_ring()),
        "yang_lee" => return Ok(yang_lee()),
        "ising" => return Ok(ising()),
        "rep_s3" => return Ok(rep_s3()),
        "galois_s3" => return Ok(galois_s3()),
        _ => {}
    }
    let (family, arg) = name.split_once('_').ok_or_else(bad)?;
    match family {
        "a" => Ok(a_n(u32::try_from(number(arg)?).map_err(|_| bad())?)),
        "b" => b_n(number(arg)?),
        "sl2" => Ok(sl2_verlinde(number(arg)?)),
        "group" => Ok(group_ring(&FiniteGroup::parse(arg)?)),
        "ty" => Ok(tambara_yamagami(&FiniteGroup::parse(arg)?)),
        _ => Err(bad()),
    }
}

/// A fixed catalogue of small built-ins used for batch checks.
pub fn catalogue() -> Vec<(String, FusionRing)> {
    let mut names: Vec<String> = ["unit", "yang_lee", "ising", "rep_s3"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    names.extend((0..=3).map(|n| format!("a_{n}")));
    names.extend((1..=5).map(|n| format!("b_{n}")));
    names.extend((0..=6).map(|l| format!("sl2_{l}")));
    names.extend(
        ["z2", "z3", "z4", "z2xz2", "z5", "z6", "s3", "d8", "q8"]
            .iter()
            .map(|g| format!("group_{g}")),
    );
    names.extend(["1", "z2", "z3", "z4", "z2xz2"].iter().map(|g| format!("ty_{g}")));
    names
        .into_iter()
        .map(|n| {
            let r = builtin(&n).expect("catalogue names are valid");
            (n, r)
        })
        .collect()
}
