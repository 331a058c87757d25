#![allow(clippy::needless_range_loop)]

mod common;

use fusionkit::library::{group_ring, sl2_verlinde, yang_lee};
use fusionkit::modular::{
    algebraic_integer_ratios, candidate_s_matrix, character_table, exact_entries, galois_symmetry, verify_modular,
    verlinde_fusion_from_s, ModularDatum, Options, ID_SYMMETRY, ID_VERLINDE,
};
use fusionkit::numeric::{Complex, Real};
use fusionkit::{Error, FiniteGroup, FusionRing};

use common::small_builtins;

fn opts() -> Options {
    Options::default()
}

/// `sqrt(2/(l+2)) sin((i+1)(j+1) pi/(l+2))`.
fn sl2_s(l: usize, i: usize, j: usize) -> f64 {
    let h = l as f64 + 2.0;
    (2.0 / h).sqrt() * ((i + 1) as f64 * (j + 1) as f64 * std::f64::consts::PI / h).sin()
}

#[test]
fn yang_lee_characters() {
    let t = character_table(&yang_lee(), &opts()).unwrap();
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    assert!((t.value(1, 0).to_c64().re - phi).abs() < 1e-12);
    assert!((t.value(1, 1).to_c64().re - (1.0 - phi)).abs() < 1e-12);
    assert_eq!(t.minpolys[1][1].to_string(), "x^2-x-1");
}

#[test]
fn sl2_level_two_characters() {
    let t = character_table(&sl2_verlinde(2), &opts()).unwrap();
    let fp: Vec<f64> = (0..3).map(|i| t.value(i, 0).to_c64().re).collect();
    assert!((fp[1] - 2f64.sqrt()).abs() < 1e-12);
    assert!((fp[2] - 1.0).abs() < 1e-12);
    assert_eq!(t.rank(), 3);
}

#[test]
fn z2_s_matrix() {
    let ring = group_ring(&FiniteGroup::cyclic(2));
    let d = candidate_s_matrix(&ring, &opts()).unwrap().unwrap();
    let h = 0.5f64.sqrt();
    let want = [[h, h], [h, -h]];
    for i in 0..2 {
        for j in 0..2 {
            assert!((d.entry(i, j).to_c64().re - want[i][j]).abs() < 1e-15);
        }
    }
    let back = verlinde_fusion_from_s(&d, &opts()).unwrap();
    assert!(back.same_table(&ring));
    let g = galois_symmetry(&d, &opts()).unwrap();
    assert_eq!(g.symmetries.len(), 1);
    assert_eq!(g.symmetries[0].perm, vec![0, 1]);
}

#[test]
fn yang_lee_s_matrix() {
    let d = candidate_s_matrix(&yang_lee(), &opts()).unwrap().unwrap();
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    assert!((d.entry(0, 0).to_c64().re - 1.0 / (1.0 + phi * phi).sqrt()).abs() < 1e-14);
    let g = galois_symmetry(&d, &opts()).unwrap();
    let nontrivial: Vec<_> = g.symmetries.iter().filter(|s| s.perm != vec![0, 1]).collect();
    assert_eq!(nontrivial.len(), 1);
    assert_eq!(nontrivial[0].perm, vec![1, 0]);
}

#[test]
fn rank_one() {
    let ring = FusionRing::unit_ring();
    let d = candidate_s_matrix(&ring, &opts()).unwrap().unwrap();
    assert!((d.entry(0, 0).to_c64().re - 1.0).abs() < 1e-15);
    assert!(verify_modular(&d, &ring, &opts()).unwrap().all_pass());
    assert_eq!(verlinde_fusion_from_s(&d, &opts()).unwrap().n_i64(0, 0, 0), 1);
}

#[test]
fn sl2_round_trip() {
    for l in 1..=4 {
        let ring = sl2_verlinde(l);
        let d = candidate_s_matrix(&ring, &opts()).unwrap().unwrap();
        // Equal to the standard matrix up to relabeling its columns.
        for j in 0..=l {
            let matches = (0..=l)
                .filter(|&c| (0..=l).all(|i| (d.entry(i, j).to_c64().re - sl2_s(l, i, c)).abs() < 1e-12))
                .count();
            assert!(matches >= 1, "l={l} column {j}");
        }
        assert!(verify_modular(&d, &ring, &opts()).unwrap().all_pass());
        assert!(verlinde_fusion_from_s(&d, &opts()).unwrap().same_table(&ring));
    }
}

#[test]
fn perturbation_is_detected() {
    let ring = sl2_verlinde(3);
    let d = candidate_s_matrix(&ring, &opts()).unwrap().unwrap();
    let mut s = d.s().clone();
    s[1][2] = s[1][2].add(&Complex::from_real(Real::from_f64(1e-3, 128)));
    let bad = ModularDatum::new(d.labels().to_vec(), d.dual().to_vec(), s).unwrap();
    let rep = verify_modular(&bad, &ring, &opts()).unwrap();
    assert!(!rep.get(ID_SYMMETRY).unwrap().passed || !rep.get(ID_VERLINDE).unwrap().passed);
    assert!(verlinde_fusion_from_s(&bad, &opts()).is_err());
}

#[test]
fn noncommutative_is_unsupported() {
    let ring = group_ring(&FiniteGroup::symmetric(3));
    assert!(matches!(candidate_s_matrix(&ring, &opts()), Err(Error::Unsupported(_))));
}

#[test]
fn round_trip_and_charge_conjugation_on_built_ins() {
    for (name, ring) in small_builtins(9) {
        if !ring.is_commutative() {
            continue;
        }
        let Some(d) = candidate_s_matrix(&ring, &opts()).unwrap() else {
            continue;
        };
        let r = ring.rank();
        for i in 0..r {
            for j in 0..r {
                let mut acc = Complex::zero(128);
                for k in 0..r {
                    acc = acc.add(&d.entry(i, k).mul(d.entry(k, j)));
                }
                let want = f64::from(u8::from(j == ring.dual(i)));
                assert!(
                    (acc.to_c64() - num_complex::Complex64::new(want, 0.0)).norm() < 1e-9,
                    "{name}"
                );
            }
        }
        assert!(verlinde_fusion_from_s(&d, &opts()).unwrap().same_table(&ring), "{name}");
        let g = galois_symmetry(&d, &opts()).unwrap();
        assert!(g.abelian && g.consistent && g.preserves_duality, "{name}");
        // Closed under composition.
        for a in &g.symmetries {
            for b in &g.symmetries {
                let c: Vec<usize> = (0..r).map(|i| a.perm[b.perm[i]]).collect();
                assert!(g.symmetries.iter().any(|s| s.perm == c), "{name}");
            }
        }
    }
}

#[test]
fn sl2_three_galois_group_is_abelian_of_degree_two() {
    // The characters of sl2 level 3 generate Q(sqrt 5).
    let d = candidate_s_matrix(&sl2_verlinde(3), &opts()).unwrap().unwrap();
    let g = galois_symmetry(&d, &opts()).unwrap();
    assert_eq!(g.field_degree, 2);
    assert_eq!(g.symmetries.len(), 2);
    assert!(g.abelian);
}

#[test]
fn integer_ratios() {
    for l in 0..=4 {
        assert!(algebraic_integer_ratios(&sl2_verlinde(l))
            .unwrap()
            .iter()
            .all(|v| v.algebraic_integer));
    }
    let ising = algebraic_integer_ratios(&sl2_verlinde(2)).unwrap();
    assert_eq!(ising[1].value.to_integer().unwrap(), 2.into());
    for spec in ["z2", "z3", "s3", "q8"] {
        let g = FiniteGroup::parse(spec).unwrap();
        for v in algebraic_integer_ratios(&group_ring(&g)).unwrap() {
            assert_eq!(v.value.to_integer().unwrap(), (g.order() as i64).into());
        }
    }
    assert!(algebraic_integer_ratios(&yang_lee())
        .unwrap()
        .iter()
        .all(|v| v.algebraic_integer));
}

#[test]
fn exact_export_round_trips() {
    let ring = sl2_verlinde(4);
    let d = candidate_s_matrix(&ring, &opts()).unwrap().unwrap();
    let exact = exact_entries(&d, &ring, &opts()).unwrap();
    let text = d.entry_strings(&exact, 40);
    assert_eq!(text[0][0], "sqrt(3)/6");
    let back = ModularDatum::from_strings(d.labels().to_vec(), d.dual().to_vec(), &text, 128).unwrap();
    for i in 0..5 {
        for j in 0..5 {
            assert!(back.entry(i, j).dist(d.entry(i, j)) < 1e-30);
        }
    }
    let neg = d.negated();
    assert!(verify_modular(&neg, &ring, &opts()).unwrap().all_pass());
}
