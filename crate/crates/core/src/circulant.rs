//! Circulant and block-circulant eigenstructure: root-of-unity eigenvalue
//! formulas, the reduction of a block circulant to the Hermitian blocks
//! `H_j`, the arithmetic–geometric series sum, and the closed-form spectra of
//! `s·A + t·D` for cycles.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::{HermitianMatrix, SymMatrix, SYMMETRY_TOL};
use crate::oracle::{hermitian_eigenvalues, FLOAT_GROUPING_TOL};
use crate::spectrum::Spectrum;

/// Closeness to 1 below which [`apgp_sum`] switches to the direct sum.
pub const APGP_UNIT_TOL: f64 = 1e-12;

/// Largest imaginary part tolerated when reading eigenvalues of a symmetric
/// circulant as real numbers.
pub const IMAG_TOL: f64 = 1e-9;

/// `ρ_j^k = exp(2πi·jk/n)` with the exponent reduced modulo `n` first.
pub fn root_of_unity_power(j: usize, k: usize, n: usize) -> Complex64 {
    let reduced = ((j % n) * (k % n)) % n;
    Complex64::from_polar(1.0, 2.0 * PI * reduced as f64 / n as f64)
}

/// `Σ_{k=0}^{n−1} (a + k·d)·r^k` in closed form:
/// `[a + (n−1)d]·(rⁿ−1)/(r−1) − d/(r−1)·[(rⁿ−1)/(r−1) − n]`.
/// Within [`APGP_UNIT_TOL`] of `r = 1` the direct value `n·a + d·n(n−1)/2`
/// is returned.
pub fn apgp_sum(a: Complex64, d: Complex64, r: Complex64, n: usize) -> Complex64 {
    let nf = n as f64;
    let one = Complex64::new(1.0, 0.0);
    if (r - one).norm() < APGP_UNIT_TOL {
        return a * nf + d * (nf * (nf - 1.0) / 2.0);
    }
    let geometric = (r.powu(n as u32) - one) / (r - one);
    (a + d * (nf - 1.0)) * geometric - d / (r - one) * (geometric - nf)
}

/// Circulant matrix given by its first row `(c_0, …, c_{n−1})`; row `i` is
/// the first row shifted right `i` times.
#[derive(Debug, Clone, PartialEq)]
pub struct CirculantSpec {
    first_row: Vec<f64>,
}

impl CirculantSpec {
    pub fn new(first_row: Vec<f64>) -> Result<CirculantSpec> {
        if first_row.is_empty() {
            return Err(Error::ParameterDomain("circulant needs order >= 1".into()));
        }
        Ok(CirculantSpec { first_row })
    }

    pub fn first_row(&self) -> &[f64] {
        &self.first_row
    }

    pub fn order(&self) -> usize {
        self.first_row.len()
    }

    /// Largest |c_k − c_{n−k}|, k ≥ 1.
    pub fn symmetry_deviation(&self) -> f64 {
        let n = self.order();
        (1..n).fold(0.0, |m, k| {
            m.max((self.first_row[k] - self.first_row[n - k]).abs())
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetry_deviation() < SYMMETRY_TOL
    }

    pub fn to_matrix(&self) -> SymMatrix {
        let n = self.order();
        SymMatrix::from_fn(n, |i, j| self.first_row[(j + n - i) % n])
    }

    /// Adjacency matrix of the cycle `C_n` in its natural ordering.
    pub fn cycle_adjacency(n: usize) -> Result<CirculantSpec> {
        check_cycle_order(n)?;
        CirculantSpec::new((0..n).map(|k| f64::from(k == 1 || k == n - 1)).collect())
    }

    /// Distance matrix of the cycle `C_n`: `c_k = min(k, n − k)`.
    pub fn cycle_distance(n: usize) -> Result<CirculantSpec> {
        check_cycle_order(n)?;
        CirculantSpec::new((0..n).map(|k| k.min(n - k) as f64).collect())
    }
}

fn check_cycle_order(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::ParameterDomain(format!("cycle order {n} < 3")));
    }
    Ok(())
}

/// `λ_j = Σ_k c_k ρ_j^k` for `j = 0..n−1`.
pub fn circulant_eigenvalues(c: &CirculantSpec) -> Vec<Complex64> {
    let n = c.order();
    (0..n)
        .map(|j| {
            c.first_row
                .iter()
                .enumerate()
                .map(|(k, &ck)| root_of_unity_power(j, k, n) * ck)
                .sum()
        })
        .collect()
}

/// `s·λ_j + t·μ_j` with the same `j` indexing as [`circulant_eigenvalues`].
pub fn circulant_combo_eigenvalues(
    s: f64,
    a: &CirculantSpec,
    t: f64,
    b: &CirculantSpec,
) -> Result<Vec<Complex64>> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch {
            left: a.order(),
            right: b.order(),
        });
    }
    Ok(circulant_eigenvalues(a)
        .into_iter()
        .zip(circulant_eigenvalues(b))
        .map(|(l, m)| l * s + m * t)
        .collect())
}

/// Groups eigenvalues of a symmetric/Hermitian object after checking that
/// every imaginary part is below [`IMAG_TOL`].
pub fn real_spectrum(values: &[Complex64], grouping_tol: f64) -> Result<Spectrum> {
    if let Some(bad) = values.iter().find(|z| z.im.abs() >= IMAG_TOL) {
        return Err(Error::NonRealEigenvalue { imag: bad.im });
    }
    Ok(Spectrum::from_pairs(
        values.iter().map(|z| (z.re, 1)),
        grouping_tol,
    ))
}

/// Block circulant `Circ(b_0, …, b_{n−1})` with square `k × k` blocks; block
/// `(i, j)` of the assembled matrix is `b_{(j − i) mod n}`.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockCirculantSpec {
    blocks: Vec<SymMatrix>,
}

impl BlockCirculantSpec {
    pub fn new(blocks: Vec<SymMatrix>) -> Result<BlockCirculantSpec> {
        let first = blocks
            .first()
            .ok_or_else(|| Error::ParameterDomain("block circulant needs a block".into()))?;
        let k = first.order();
        if let Some(b) = blocks.iter().find(|b| b.order() != k) {
            return Err(Error::OrderMismatch {
                left: k,
                right: b.order(),
            });
        }
        Ok(BlockCirculantSpec { blocks })
    }

    pub fn blocks(&self) -> &[SymMatrix] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_order(&self) -> usize {
        self.blocks[0].order()
    }

    /// Largest deviation from `b_0 = b_0ᵀ` and `b_fᵀ = b_{n−f}`.
    pub fn symmetry_deviation(&self) -> f64 {
        let (n, k) = (self.block_count(), self.block_order());
        let mut worst = self.blocks[0].symmetry_deviation();
        for f in 1..n {
            let (bf, partner) = (&self.blocks[f], &self.blocks[n - f]);
            for i in 0..k {
                for j in 0..k {
                    let (x, y) = (bf.get(j, i), partner.get(i, j));
                    if !x.is_finite() || !y.is_finite() {
                        return f64::INFINITY;
                    }
                    worst = worst.max((x - y).abs());
                }
            }
        }
        worst
    }

    pub fn check_symmetric(&self) -> Result<()> {
        let deviation = self.symmetry_deviation();
        if deviation < SYMMETRY_TOL {
            Ok(())
        } else {
            Err(Error::NonSymmetric { deviation })
        }
    }

    pub fn assemble(&self) -> SymMatrix {
        let (n, k) = (self.block_count(), self.block_order());
        SymMatrix::from_fn(n * k, |r, c| {
            let (bi, bj) = (r / k, c / k);
            self.blocks[(bj + n - bi) % n].get(r % k, c % k)
        })
    }
}

/// The reduced Hermitian blocks `H_0, …, H_{n−1}` whose eigenvalues together
/// form the spectrum of the assembled matrix:
/// `H_j = b_0 + Σ_{f=1}^{h−1} [b_f ρ_j^f + b_fᵀ ρ̄_j^f] + [n = 2h] b_h (−1)^j`,
/// with `n = 2h − 1` or `n = 2h`.
pub fn block_circulant_reduce(b: &BlockCirculantSpec) -> Result<Vec<HermitianMatrix>> {
    b.check_symmetric()?;
    let (n, k) = (b.block_count(), b.block_order());
    // n = 2h − 1 (odd) or n = 2h (even)
    let h = n.div_ceil(2);
    (0..n)
        .into_par_iter()
        .map(|j| {
            let mut hj = HermitianMatrix::from_real(&b.blocks[0]);
            for f in 1..h {
                let rho = root_of_unity_power(j, f, n);
                let bf = &b.blocks[f];
                for r in 0..k {
                    for c in 0..k {
                        let add = rho * bf.get(r, c) + rho.conj() * bf.get(c, r);
                        hj.set(r, c, hj.get(r, c) + add);
                    }
                }
            }
            if n % 2 == 0 {
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                let bh = &b.blocks[n / 2];
                for r in 0..k {
                    for c in 0..k {
                        hj.set(r, c, hj.get(r, c) + sign * bh.get(r, c));
                    }
                }
            }
            hj.check_hermitian()?;
            Ok(hj)
        })
        .collect()
}

/// Concatenated eigenvalues of every `H_j`, grouped at `tol`.
pub fn block_spectrum_union(hs: &[HermitianMatrix], tol: f64) -> Result<Spectrum> {
    let per_block: Vec<Vec<f64>> = hs
        .par_iter()
        .map(hermitian_eigenvalues)
        .collect::<Result<_>>()?;
    Ok(Spectrum::from_pairs(
        per_block.into_iter().flatten().map(|v| (v, 1)),
        tol,
    ))
}

/// Eigenvalues of `s·A(C_n) + t·D(C_n)` indexed by `j = 0..n−1`, from the
/// trigonometric table:
///
/// | n    | j = 0            | j even ≠ 0                         | j odd                                  |
/// |------|------------------|------------------------------------|----------------------------------------|
/// | even | 2s + (n²/4)t     | 2s·cos(2πj/n)                      | 2s·cos(2πj/n) − t·cosec²(πj/n)         |
/// | odd  | 2s + ((n²−1)/4)t | 2s·cos(2πj/n) − (t/4)·sec²(πj/2n)  | 2s·cos(2πj/n) − (t/4)·cosec²(πj/2n)    |
///
/// For even `n` and even `j ≠ 0` the distance eigenvalue is 0, so that entry
/// carries no `t` term.
pub fn cycle_combo_values(n: usize, s: f64, t: f64) -> Result<Vec<f64>> {
    check_cycle_order(n)?;
    let nf = n as f64;
    let angle = |num: usize, den: f64| PI * num as f64 / den;
    Ok((0..n)
        .map(|j| {
            if j == 0 {
                return if n.is_multiple_of(2) {
                    2.0 * s + nf * nf / 4.0 * t
                } else {
                    2.0 * s + (nf * nf - 1.0) / 4.0 * t
                };
            }
            let adjacency = 2.0 * s * angle(2 * j, nf).cos();
            let distance = match (n.is_multiple_of(2), j.is_multiple_of(2)) {
                (true, true) => 0.0,
                (true, false) => -t / angle(j, nf).sin().powi(2),
                (false, true) => -t / 4.0 / angle(j, 2.0 * nf).cos().powi(2),
                (false, false) => -t / 4.0 / angle(j, 2.0 * nf).sin().powi(2),
            };
            adjacency + distance
        })
        .collect())
}

/// [`cycle_combo_values`] grouped at the floating-point tolerance.
pub fn cycle_combo_spectrum(n: usize, s: f64, t: f64) -> Result<Spectrum> {
    let values = cycle_combo_values(n, s, t)?;
    Ok(Spectrum::from_pairs(
        values.into_iter().map(|v| (v, 1)),
        FLOAT_GROUPING_TOL,
    ))
}
