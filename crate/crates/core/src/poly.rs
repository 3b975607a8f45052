//! Lagrange/Vandermonde interpolation and the distance polynomials
//! `D = p(A)` of the Johnson and Hamming graphs.
//!
//! Interpolated monomial coefficients are exact rationals: every finite
//! double is a dyadic rational, so nodes and values convert without loss.
//! Evaluation goes through the exact coefficients when they are known, which
//! keeps residuals at rounding level even where the monomial basis is badly
//! conditioned.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::closed_form::{
    hamming_classes, hamming_intersection, johnson_classes, johnson_intersection,
};
use crate::error::{Error, Result};
use crate::graph::{build_family, distance_matrix, FamilySpec};
use crate::matrix::SymMatrix;
use crate::spectrum::{format_sig12, Sig12};

/// Entrywise tolerance for `p(A) = D`.
pub const POLY_MATCH_TOL: f64 = 1e-8;

/// `a_0 + a_1 x + … + a_k x^k`, trailing coefficient nonzero unless zero.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<f64>,
    exact: Option<Vec<BigRational>>,
}

impl Polynomial {
    pub fn from_coeffs(mut coeffs: Vec<f64>) -> Polynomial {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        Polynomial {
            coeffs,
            exact: None,
        }
    }

    pub fn from_rationals(mut exact: Vec<BigRational>) -> Polynomial {
        while exact.last().is_some_and(Zero::is_zero) {
            exact.pop();
        }
        let coeffs = exact.iter().map(rational_to_f64).collect();
        Polynomial {
            coeffs,
            exact: Some(exact),
        }
    }

    /// Ascending coefficients as floats.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Ascending coefficients as exact rationals, when known.
    pub fn exact_coeffs(&self) -> Option<&[BigRational]> {
        self.exact.as_deref()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Correctly rounded when exact coefficients are known.
    pub fn eval(&self, x: f64) -> f64 {
        if let Some(v) = BigRational::from_float(x).and_then(|x| self.eval_exact(&x)) {
            return rational_to_f64(&v);
        }
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn eval_exact(&self, x: &BigRational) -> Option<BigRational> {
        let exact = self.exact.as_ref()?;
        Some(
            exact
                .iter()
                .rev()
                .fold(BigRational::zero(), |acc, c| acc * x + c),
        )
    }

    /// Largest coefficientwise difference (missing coefficients are 0).
    pub fn max_coeff_gap(&self, other: &Polynomial) -> f64 {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0.0);
                let b = other.coeffs.get(i).copied().unwrap_or(0.0);
                (a - b).abs()
            })
            .fold(0.0, f64::max)
    }

    /// `{"coeffs": ["a0", "a1", …]}` with 12 significant digits.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serializes")
    }
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let rendered: Vec<String> = self.coeffs.iter().map(|&c| format_sig12(c)).collect();
        let mut s = serializer.serialize_struct("Polynomial", 1)?;
        s.serialize_field("coeffs", &rendered)?;
        s.end()
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0.0 {
                continue;
            }
            let sign = if c < 0.0 { "-" } else { "+" };
            if first {
                if c < 0.0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = format_sig12(c.abs());
            match (i, mag.as_str()) {
                (0, _) => write!(f, "{mag}")?,
                (1, "1") => write!(f, "x")?,
                (1, _) => write!(f, "{mag}x")?,
                (_, "1") => write!(f, "x^{i}")?,
                _ => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Every finite double is a dyadic rational, so conversion is exact.
fn exact(x: f64) -> Result<BigRational> {
    BigRational::from_float(x)
        .ok_or_else(|| Error::ParameterDomain(format!("value {x} is not finite")))
}

fn all_exact(xs: &[f64]) -> Result<Vec<BigRational>> {
    xs.iter().map(|&x| exact(x)).collect()
}

fn check_distinct(nodes: &[f64]) -> Result<()> {
    for (i, &a) in nodes.iter().enumerate() {
        if !a.is_finite() {
            return Err(Error::ParameterDomain(format!("node {a} is not finite")));
        }
        if nodes[..i].contains(&a) {
            return Err(Error::DuplicateNodes(a));
        }
    }
    Ok(())
}

/// Multiplies ascending coefficients by `(x − root)`.
fn mul_linear<T>(poly: &[T], root: &T) -> Vec<T>
where
    T: Clone + Zero + std::ops::Mul<Output = T> + std::ops::Sub<Output = T>,
{
    let mut out = vec![T::zero(); poly.len() + 1];
    for (i, c) in poly.iter().enumerate() {
        out[i + 1] = out[i + 1].clone() + c.clone();
        out[i] = out[i].clone() - c.clone() * root.clone();
    }
    out
}

/// `Π_{i≠j} (x − x_i)/(x_j − x_i)` in exact arithmetic.
fn lagrange_exact(nodes: &[BigRational], j: usize) -> Vec<BigRational> {
    let mut poly = vec![BigRational::one()];
    let mut denom = BigRational::one();
    for (_, xi) in nodes.iter().enumerate().filter(|&(i, _)| i != j) {
        poly = mul_linear(&poly, xi);
        denom *= &nodes[j] - xi;
    }
    poly.into_iter().map(|c| c / &denom).collect()
}

/// `L_j` with `L_j(x_i) = δ_ij`.
pub fn lagrange_basis(nodes: &[f64], j: usize) -> Result<Polynomial> {
    check_distinct(nodes)?;
    if j >= nodes.len() {
        return Err(Error::ParameterDomain(format!(
            "basis index {j} out of range for {} nodes",
            nodes.len()
        )));
    }
    Ok(Polynomial::from_rationals(lagrange_exact(
        &all_exact(nodes)?,
        j,
    )))
}

/// Interpolation problem `p(x_i) = y_i` with distinct nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct VandermondeSystem {
    nodes: Vec<f64>,
    rhs: Vec<f64>,
}

impl VandermondeSystem {
    pub fn new(nodes: Vec<f64>, rhs: Vec<f64>) -> Result<VandermondeSystem> {
        if nodes.len() != rhs.len() {
            return Err(Error::OrderMismatch {
                left: nodes.len(),
                right: rhs.len(),
            });
        }
        if nodes.is_empty() {
            return Err(Error::ParameterDomain("no interpolation nodes".into()));
        }
        check_distinct(&nodes)?;
        all_exact(&rhs)?;
        Ok(VandermondeSystem { nodes, rhs })
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn rhs(&self) -> &[f64] {
        &self.rhs
    }
}

/// `Σ_j y_j·L_j`, of degree at most `len − 1`.
pub fn vandermonde_solve(sys: &VandermondeSystem) -> Result<Polynomial> {
    let nodes = all_exact(&sys.nodes)?;
    let rhs = all_exact(&sys.rhs)?;
    let mut acc = vec![BigRational::zero(); nodes.len()];
    for (j, y) in rhs.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
        for (a, l) in acc.iter_mut().zip(lagrange_exact(&nodes, j)) {
            *a += l * y;
        }
    }
    Ok(Polynomial::from_rationals(acc))
}

fn interpolate_classes(classes: &[crate::closed_form::EigenClass]) -> Result<Polynomial> {
    let nodes = classes.iter().map(|c| c.adjacency as f64).collect();
    let rhs = classes.iter().map(|c| c.distance as f64).collect();
    vandermonde_solve(&VandermondeSystem::new(nodes, rhs)?)
}

/// `p = s·L_0 + (−s/(m−1))·L_1` over the Johnson adjacency eigenvalues.
pub fn johnson_distance_polynomial(m: usize, r: usize) -> Result<Polynomial> {
    interpolate_classes(&johnson_classes(m, r)?)
}

/// `p = t·L_0 − q^{d−1}·L_1` over the Hamming adjacency eigenvalues
/// `d(q−1) − qi`.
pub fn hamming_distance_polynomial(d: usize, q: usize) -> Result<Polynomial> {
    interpolate_classes(&hamming_classes(d, q)?)
}

fn int(x: i128) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Product of `(x − root_i)/den_i` over the given pairs.
fn product_form(factors: impl Iterator<Item = (BigRational, BigRational)>) -> Vec<BigRational> {
    let mut poly = vec![BigRational::one()];
    for (root, den) in factors {
        poly = mul_linear(&poly, &root)
            .into_iter()
            .map(|c| c / &den)
            .collect();
    }
    poly
}

fn combine(
    scale: BigRational,
    first: Vec<BigRational>,
    second_scale: BigRational,
    second: Vec<BigRational>,
) -> Polynomial {
    let len = first.len().max(second.len());
    let coeffs = (0..len)
        .map(|i| {
            let a = first.get(i).cloned().unwrap_or_else(BigRational::zero);
            let b = second.get(i).cloned().unwrap_or_else(BigRational::zero);
            &scale * (a - &second_scale * b)
        })
        .collect();
    Polynomial::from_rationals(coeffs)
}

/// The intersection-number form of the Johnson distance polynomial:
/// `s·{Π_{i=1}^{r} (x − b_i + i)/(b_0 − b_i + i)
///   − (1/(m−1))·Π_{i≠1} (x − b_i + i)/(b_1 − b_i + i − 1)}`.
///
/// Fails if some denominator `b_1 − b_i + i − 1` differs from `λ_1 − λ_i`.
pub fn johnson_distance_polynomial_product_form(m: usize, r: usize) -> Result<Polynomial> {
    let ia = johnson_intersection(m, r)?;
    let classes = johnson_classes(m, r)?;
    let s = classes[0].distance;
    let b = |i: usize| ia.b_at(i) as i128;
    let lambda = |i: usize| b(i) - i as i128;
    for i in (0..=r).filter(|&i| i != 1) {
        let den = b(1) - b(i) + i as i128 - 1;
        if den != lambda(1) - lambda(i) {
            return Err(Error::Unsupported(format!(
                "denominator b_1 − b_{i} + {i} − 1 = {den} differs from λ_1 − λ_{i}"
            )));
        }
    }
    let first = product_form((1..=r).map(|i| (int(lambda(i)), int(b(0) - b(i) + i as i128))));
    let second = product_form(
        (0..=r)
            .filter(|&i| i != 1)
            .map(|i| (int(lambda(i)), int(b(1) - b(i) + i as i128 - 1))),
    );
    let inv = BigRational::new(BigInt::one(), BigInt::from(m as i64 - 1));
    Ok(combine(int(s), first, inv, second))
}

/// The intersection-number form of the Hamming distance polynomial:
/// `t·{Π_{i=1}^{d} (x − b_0 + q·c_i)/(q·c_i)
///   − (1/(d(q−1)))·Π_{i≠1} (x − b_0 + q·c_i)/(q·(c_i − 1))}` with `c_0 = 0`.
pub fn hamming_distance_polynomial_product_form(d: usize, q: usize) -> Result<Polynomial> {
    let ia = hamming_intersection(d, q)?;
    let t = hamming_classes(d, q)?[0].distance;
    let qi = q as i128;
    let b0 = ia.b_at(0) as i128;
    let c = |i: usize| ia.c_at(i) as i128;
    let first = product_form((1..=d).map(|i| (int(b0 - qi * c(i)), int(qi * c(i)))));
    let second = product_form(
        (0..=d)
            .filter(|&i| i != 1)
            .map(|i| (int(b0 - qi * c(i)), int(qi * (c(i) - 1)))),
    );
    let inv = BigRational::new(BigInt::one(), BigInt::from(d as i64 * (q as i64 - 1)));
    Ok(combine(int(t), first, inv, second))
}

/// Horner evaluation `(…(a_k A + a_{k−1} I)A + …)A + a_0 I`.
pub fn matrix_polynomial_eval(p: &Polynomial, a: &SymMatrix) -> Result<SymMatrix> {
    a.check_symmetric()?;
    let n = a.order();
    let c = p.coeffs();
    let Some(k) = p.degree() else {
        return Ok(SymMatrix::zeros(n));
    };
    let identity = SymMatrix::identity(n);
    let mut acc = identity.scaled(c[k]);
    if k >= 1 {
        acc = a.scaled(c[k]).add_scaled(c[k - 1], &identity)?;
        for &ci in c[..k - 1].iter().rev() {
            // a is the sparse operand; the product commutes with acc
            acc = a.matmul(&acc)?.add_scaled(ci, &identity)?;
        }
    }
    acc.check_symmetric()?;
    Ok(acc)
}

/// Outcome of checking `D = p(A)` entrywise for one family.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PolyReport {
    pub family: FamilySpec,
    pub polynomial: Polynomial,
    pub max_abs_gap: Sig12,
    pub pass: bool,
}

/// The distance polynomial of a Johnson or Hamming family.
pub fn distance_polynomial(spec: &FamilySpec) -> Result<Polynomial> {
    match *spec {
        FamilySpec::Johnson { m, r } => johnson_distance_polynomial(m, r),
        FamilySpec::Hamming { d, q } => hamming_distance_polynomial(d, q),
        _ => Err(Error::Unsupported(format!(
            "no distance polynomial for {spec}; only Johnson and Hamming families"
        ))),
    }
}

/// Builds the graph, evaluates its distance polynomial on `A` and compares
/// with the BFS distance matrix; passes iff the gap is below
/// [`POLY_MATCH_TOL`].
pub fn verify_distance_polynomial(spec: &FamilySpec) -> Result<PolyReport> {
    let polynomial = distance_polynomial(spec)?;
    let g = build_family(spec)?;
    let d = distance_matrix(&g)?.to_sym_matrix();
    let pa = matrix_polynomial_eval(&polynomial, &g.adjacency_matrix())?;
    let gap = pa.max_abs_diff(&d)?;
    Ok(PolyReport {
        family: spec.clone(),
        polynomial,
        max_abs_gap: Sig12(gap),
        pass: gap < POLY_MATCH_TOL,
    })
}

/// Largest |p(x_i) − y_i|.
pub fn residual(p: &Polynomial, sys: &VandermondeSystem) -> f64 {
    sys.nodes
        .iter()
        .zip(&sys.rhs)
        .map(|(&x, &y)| (p.eval(x) - y).abs())
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn lagrange_examples() {
        let l = lagrange_basis(&[0.0, 1.0], 0).unwrap();
        assert_eq!(l.coeffs(), &[1.0, -1.0]);
        let l = lagrange_basis(&[4.0, 0.0, -2.0], 0).unwrap();
        assert_eq!(
            l.exact_coeffs().unwrap(),
            &[rat(0, 1), rat(1, 12), rat(1, 24)]
        );
        for (i, x) in [4.0, 0.0, -2.0].iter().enumerate() {
            assert!((l.eval(*x) - f64::from(i == 0)).abs() < 1e-12);
        }
        assert!(matches!(
            lagrange_basis(&[1.0, 2.0, 1.0], 0),
            Err(Error::DuplicateNodes(x)) if x == 1.0
        ));
    }

    #[test]
    fn vandermonde_examples() {
        let sys = VandermondeSystem::new(vec![0.0, 1.0], vec![0.0, 1.0]).unwrap();
        assert_eq!(vandermonde_solve(&sys).unwrap().coeffs(), &[0.0, 1.0]);
        let sys = VandermondeSystem::new(vec![4.0, 0.0, -2.0], vec![6.0, -2.0, 0.0]).unwrap();
        let p = vandermonde_solve(&sys).unwrap();
        assert_eq!(
            p.exact_coeffs().unwrap(),
            &[rat(-2, 1), rat(0, 1), rat(1, 2)]
        );
        assert_eq!(p.to_string(), "0.5x^2 - 2");
        assert_eq!(p.to_json(), r#"{"coeffs":["-2","0","0.5"]}"#);
    }

    #[test]
    fn family_polynomials() {
        let p = johnson_distance_polynomial(4, 2).unwrap();
        assert_eq!(p.coeffs(), &[-2.0, 0.0, 0.5]);
        let p = hamming_distance_polynomial(2, 2).unwrap();
        assert_eq!(p.coeffs(), &[-2.0, 1.0, 1.0]);
    }

    #[test]
    fn product_forms_agree_with_lagrange_forms() {
        for m in 2..=12 {
            for r in 1..=m / 2 {
                let a = johnson_distance_polynomial(m, r).unwrap();
                let b = johnson_distance_polynomial_product_form(m, r).unwrap();
                assert_eq!(a.exact_coeffs(), b.exact_coeffs(), "J({m},{r})");
            }
        }
        for d in 1..=6 {
            for q in 2..=6 {
                let a = hamming_distance_polynomial(d, q).unwrap();
                let b = hamming_distance_polynomial_product_form(d, q).unwrap();
                assert_eq!(a.exact_coeffs(), b.exact_coeffs(), "H({d},{q})");
                assert_eq!(a.degree(), Some(d));
            }
        }
    }

    #[test]
    fn matrix_evaluation() {
        let a = SymMatrix::from_row_major(2, vec![0.0, 1.0, 1.0, 0.0]);
        let x = Polynomial::from_coeffs(vec![0.0, 1.0]);
        assert_eq!(matrix_polynomial_eval(&x, &a).unwrap(), a);
        let c4 = build_family(&FamilySpec::Cycle(4))
            .unwrap()
            .adjacency_matrix();
        let p = Polynomial::from_coeffs(vec![-2.0, 1.0, 1.0]);
        let d = matrix_polynomial_eval(&p, &c4).unwrap();
        assert_eq!(d.row(0), &[0.0, 1.0, 2.0, 1.0]);
        let cubic = Polynomial::from_coeffs(vec![1.0, -1.0, 0.0, 2.0]);
        let direct = c4
            .matmul(&c4)
            .unwrap()
            .matmul(&c4)
            .unwrap()
            .scaled(2.0)
            .add_scaled(-1.0, &c4)
            .unwrap()
            .add_scaled(1.0, &SymMatrix::identity(4))
            .unwrap();
        assert_eq!(matrix_polynomial_eval(&cubic, &c4).unwrap(), direct);
    }

    #[test]
    fn verify_examples() {
        for text in ["J(4,2)", "H(2,2)", "H(3,3)", "J(6,3)"] {
            let report = verify_distance_polynomial(&text.parse().unwrap()).unwrap();
            assert!(report.pass, "{text}: {report:?}");
            assert!(report.max_abs_gap.0 < 1e-12);
        }
        assert!(matches!(
            verify_distance_polynomial(&"C5".parse().unwrap()),
            Err(Error::Unsupported(_))
        ));
    }

    proptest! {
        #[test]
        fn interpolation_residual(raw in prop::collection::vec(-500.0f64..500.0, 1..=9),
                                  seed in prop::collection::vec(-1000.0f64..1000.0, 9)) {
            let mut nodes = raw;
            nodes.sort_by(f64::total_cmp);
            nodes.dedup();
            let rhs = seed[..nodes.len()].to_vec();
            let sys = VandermondeSystem::new(nodes, rhs).unwrap();
            let p = vandermonde_solve(&sys).unwrap();
            prop_assert!(p.degree().is_none_or(|k| k < sys.nodes().len()));
            prop_assert!(residual(&p, &sys) < 1e-10);
        }

        #[test]
        fn lagrange_delta(raw in prop::collection::vec(-100i32..100, 1..=9), j in 0usize..9) {
            let mut nodes: Vec<f64> = raw.into_iter().map(f64::from).collect();
            nodes.sort_by(f64::total_cmp);
            nodes.dedup();
            let j = j % nodes.len();
            let l = lagrange_basis(&nodes, j).unwrap();
            for (i, &x) in nodes.iter().enumerate() {
                prop_assert!((l.eval(x) - f64::from(i == j)).abs() < 1e-12);
            }
        }
    }
}
