//! Circulant and block-circulant eigenvalues, and the cycle table for
//! s·A + t·D.

use kron_spectra::circulant::{
    apgp_sum, block_circulant_reduce, block_spectrum_union, circulant_eigenvalues,
    cycle_combo_spectrum, BlockCirculantSpec, CirculantSpec,
};
use kron_spectra::matrix::SymMatrix;
use kron_spectra::oracle::oracle_spectrum;
use num_complex::Complex64;

fn main() -> kron_spectra::error::Result<()> {
    let c4 = CirculantSpec::new(vec![0.0, 1.0, 0.0, 1.0])?;
    let values: Vec<String> = circulant_eigenvalues(&c4)
        .iter()
        .map(|z| format!("{:.3}", z.re))
        .collect();
    println!("circ(0,1,0,1) eigenvalues by j: [{}]", values.join(", "));

    let one = Complex64::new(1.0, 0.0);
    println!(
        "AP·GP sum 1 + 2·2 + 3·4 = {}",
        apgp_sum(one, one, Complex64::new(2.0, 0.0), 3).re
    );

    let swap = SymMatrix::from_row_major(2, vec![0.0, 1.0, 1.0, 0.0]);
    let id = SymMatrix::identity(2);
    let b = BlockCirculantSpec::new(vec![swap, id.clone(), id])?;
    let reduced = block_spectrum_union(&block_circulant_reduce(&b)?, 1e-9)?;
    println!("block circulant via H_j: {reduced}");
    println!(
        "block circulant dense:   {}",
        oracle_spectrum(&b.assemble())?
    );

    for n in [4, 5, 8] {
        println!("D(C{n}) = {}", cycle_combo_spectrum(n, 0.0, 1.0)?);
    }
    Ok(())
}
