#![allow(dead_code)]

use kron_spectra::circulant::{BlockCirculantSpec, CirculantSpec};
use kron_spectra::matrix::SymMatrix;
use num_complex::Complex64;
use rand::Rng;

/// Largest elementwise gap between two value lists after sorting both;
/// `None` when the lengths differ.
pub fn sorted_gap(a: &[f64], b: &[f64]) -> Option<f64> {
    if a.len() != b.len() {
        return None;
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    Some(
        a.iter()
            .zip(&b)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max),
    )
}

/// Real parts, after asserting the imaginary parts are negligible.
pub fn real_parts(values: &[Complex64], imag_tol: f64) -> Option<Vec<f64>> {
    values
        .iter()
        .map(|z| (z.im.abs() < imag_tol).then_some(z.re))
        .collect()
}

/// A random symmetric first row `c_k = c_{n−k}` with entries in [−5, 5].
pub fn random_symmetric_circulant<R: Rng>(rng: &mut R, n: usize) -> CirculantSpec {
    let mut row = vec![0.0; n];
    for k in 0..=n / 2 {
        let v = rng.gen_range(-5.0..5.0);
        row[k] = v;
        row[(n - k) % n] = v;
    }
    CirculantSpec::new(row).expect("nonempty row")
}

pub fn random_matrix<R: Rng>(rng: &mut R, k: usize) -> Vec<f64> {
    (0..k * k).map(|_| rng.gen_range(-1.0..1.0)).collect()
}

pub fn transpose(data: &[f64], k: usize) -> Vec<f64> {
    (0..k * k)
        .map(|idx| data[(idx % k) * k + idx / k])
        .collect()
}

pub fn random_symmetric<R: Rng>(rng: &mut R, k: usize) -> SymMatrix {
    let m = random_matrix(rng, k);
    let t = transpose(&m, k);
    SymMatrix::from_row_major(k, m.iter().zip(&t).map(|(a, b)| a + b).collect())
}

/// A random block circulant representing a real symmetric matrix: `b_0`
/// symmetric, `b_{n−f} = b_fᵀ`, and `b_{n/2}` symmetric when `n` is even.
///
/// Non-symmetric blocks are carried in `SymMatrix` as plain square storage;
/// only the assembled matrix is required to be symmetric.
pub fn random_block_circulant<R: Rng>(rng: &mut R, n: usize, k: usize) -> BlockCirculantSpec {
    let mut blocks: Vec<Option<Vec<f64>>> = vec![None; n];
    blocks[0] = Some(random_symmetric(rng, k).as_slice().to_vec());
    for f in 1..n {
        if blocks[f].is_some() {
            continue;
        }
        let g = n - f;
        if g == f {
            blocks[f] = Some(random_symmetric(rng, k).as_slice().to_vec());
        } else {
            let b = random_matrix(rng, k);
            blocks[g] = Some(transpose(&b, k));
            blocks[f] = Some(b);
        }
    }
    let blocks = blocks
        .into_iter()
        .map(|b| SymMatrix::from_row_major(k, b.expect("every block set")))
        .collect();
    BlockCirculantSpec::new(blocks).expect("valid block circulant")
}

/// Direct term-by-term `Σ_{k<n} (a + k d) r^k`.
pub fn apgp_direct(a: Complex64, d: Complex64, r: Complex64, n: usize) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut power = Complex64::new(1.0, 0.0);
    for k in 0..n {
        sum += (a + d * k as f64) * power;
        power *= r;
    }
    sum
}
