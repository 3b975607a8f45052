//! Dense row-major matrices used as numeric carriers for adjacency,
//! distance and block-reduced matrices.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Symmetry tolerance shared by every check in the crate.
pub const SYMMETRY_TOL: f64 = 1e-9;

/// Dense square real matrix, row-major. Most constructors produce symmetric
/// matrices; [`SymMatrix::symmetry_deviation`] checks the invariant on demand.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(order: usize) -> Self {
        Self {
            order,
            data: vec![0.0; order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m.data[i * order + i] = 1.0;
        }
        m
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                data.push(f(i, j));
            }
        }
        Self { order, data }
    }

    /// Builds from row-major data; panics if the length is not a square.
    pub fn from_row_major(order: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), order * order, "row-major data must be order²");
        Self { order, data }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.order + j] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.order..(i + 1) * self.order]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub(crate) fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_sq(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// Largest |a_ij − a_ji|; `+inf` when any entry is non-finite.
    pub fn symmetry_deviation(&self) -> f64 {
        let n = self.order;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in i..n {
                let (a, b) = (self.get(i, j), self.get(j, i));
                if !a.is_finite() || !b.is_finite() {
                    return f64::INFINITY;
                }
                worst = worst.max((a - b).abs());
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

    /// `self + scale · other`.
    pub fn add_scaled(&self, scale: f64, other: &SymMatrix) -> Result<SymMatrix> {
        self.same_order(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + scale * b)
            .collect();
        Ok(SymMatrix {
            order: self.order,
            data,
        })
    }

    pub fn scaled(&self, scale: f64) -> SymMatrix {
        SymMatrix {
            order: self.order,
            data: self.data.iter().map(|a| a * scale).collect(),
        }
    }

    pub fn matmul(&self, other: &SymMatrix) -> Result<SymMatrix> {
        self.same_order(other)?;
        let n = self.order;
        let mut out = SymMatrix::zeros(n);
        for i in 0..n {
            let out_row = &mut out.data[i * n..(i + 1) * n];
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0.0 {
                    continue;
                }
                for (o, b) in out_row.iter_mut().zip(&other.data[k * n..(k + 1) * n]) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn max_abs_diff(&self, other: &SymMatrix) -> Result<f64> {
        self.same_order(other)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs())))
    }

    fn same_order(&self, other: &SymMatrix) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            })
        }
    }
}

/// Dense square complex matrix, row-major; Hermitian when built by the
/// block-circulant reduction.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    order: usize,
    data: Vec<Complex64>,
}

impl HermitianMatrix {
    pub fn zeros(order: usize) -> Self {
        Self {
            order,
            data: vec![Complex64::new(0.0, 0.0); order * order],
        }
    }

    pub fn from_real(m: &SymMatrix) -> Self {
        Self {
            order: m.order(),
            data: m
                .as_slice()
                .iter()
                .map(|&x| Complex64::new(x, 0.0))
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.order + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.order + j] = v;
    }

    /// Largest |h_ij − conj(h_ji)|.
    pub fn hermitian_deviation(&self) -> f64 {
        let n = self.order;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in i..n {
                let (a, b) = (self.get(i, j), self.get(j, i));
                if !(a.re.is_finite() && a.im.is_finite()) {
                    return f64::INFINITY;
                }
                worst = worst.max((a - b.conj()).norm());
            }
        }
        worst
    }

    pub fn check_hermitian(&self) -> Result<()> {
        let deviation = self.hermitian_deviation();
        if deviation < SYMMETRY_TOL {
            Ok(())
        } else {
            Err(Error::NonSymmetric { deviation })
        }
    }

    /// Real symmetric embedding `[[Re, −Im], [Im, Re]]` of order 2k; every
    /// eigenvalue of `self` appears in it exactly twice.
    pub fn realify(&self) -> SymMatrix {
        let k = self.order;
        SymMatrix::from_fn(2 * k, |i, j| {
            let z = self.get(i % k, j % k);
            match (i < k, j < k) {
                (true, true) | (false, false) => z.re,
                (true, false) => -z.im,
                (false, true) => z.im,
            }
        })
    }
}
