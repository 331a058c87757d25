#![allow(dead_code, clippy::needless_range_loop)]

use fusionkit::FusionRing;

/// Floating-point FP dimensions by power iteration on `sum_i N_i`, an
/// oracle independent of the exact root isolation.
pub fn float_dims(ring: &FusionRing) -> Vec<f64> {
    let r = ring.rank();
    let mut m = vec![vec![0f64; r]; r];
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                m[j][k] += ring.n_i64(i, j, k) as f64;
            }
        }
    }
    // Shift by the identity so the iteration converges for periodic matrices.
    let mut v = vec![1f64; r];
    for _ in 0..5000 {
        let mut w: Vec<f64> = (0..r)
            .map(|j| v[j] + (0..r).map(|k| m[j][k] * v[k]).sum::<f64>())
            .collect();
        let s = w[0];
        w.iter_mut().for_each(|x| *x /= s);
        v = w;
    }
    v
}

/// Random relabeling fixing the unit, from a seed.
pub fn shuffle(r: usize, seed: u64) -> Vec<usize> {
    let mut p: Vec<usize> = (0..r).collect();
    let mut s = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    for i in (2..r).rev() {
        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let j = 1 + (s >> 33) as usize % i;
        p.swap(i, j);
    }
    p
}

/// Built-ins of rank at most `max_rank`.
pub fn small_builtins(max_rank: usize) -> Vec<(String, FusionRing)> {
    let mut v = fusionkit::library::catalogue();
    v.push(("galois_s3".into(), fusionkit::library::galois_s3()));
    v.into_iter().filter(|(_, r)| r.rank() <= max_rank).collect()
}
