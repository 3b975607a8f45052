//! Lagrange interpolation and the distance polynomials D = p(A) of
//! Johnson and Hamming graphs, checked entrywise.

use kron_spectra::graph::FamilySpec;
use kron_spectra::poly::{
    johnson_distance_polynomial, johnson_distance_polynomial_product_form, lagrange_basis,
    vandermonde_solve, verify_distance_polynomial, VandermondeSystem,
};

fn main() -> kron_spectra::error::Result<()> {
    println!(
        "L_0 on (4, 0, −2): {}",
        lagrange_basis(&[4.0, 0.0, -2.0], 0)?
    );
    let sys = VandermondeSystem::new(vec![4.0, 0.0, -2.0], vec![6.0, -2.0, 0.0])?;
    println!(
        "interpolant through (4,6), (0,−2), (−2,0): {}",
        vandermonde_solve(&sys)?
    );

    let lagrange = johnson_distance_polynomial(7, 3)?;
    let product = johnson_distance_polynomial_product_form(7, 3)?;
    println!("J(7,3): {lagrange}");
    println!(
        "        same as the intersection-number form: {}",
        lagrange == product
    );

    for text in ["J(4,2)", "J(8,4)", "H(2,2)", "H(4,3)"] {
        let spec: FamilySpec = text.parse()?;
        let r = verify_distance_polynomial(&spec)?;
        println!(
            "{spec}: p = {}, max |p(A) − D| = {:e}, pass {}",
            r.polynomial, r.max_abs_gap.0, r.pass
        );
    }
    Ok(())
}
