//! The dense eigensolver as an independent check: spectra of built
//! matrices, grouped and compared.

use kron_spectra::graph::{build_family, distance_matrix, FamilySpec};
use kron_spectra::oracle::{oracle_spectrum, spectra_match, symmetric_eigenvalues};
use kron_spectra::spectrum::Spectrum;

fn main() -> kron_spectra::error::Result<()> {
    let c3 = build_family(&FamilySpec::Cycle(3))?;
    println!(
        "A(C3) eigenvalues: {:?}",
        symmetric_eigenvalues(&c3.adjacency_matrix())?
    );

    let spec: FamilySpec = "kron(K3,K3)".parse()?;
    let g = build_family(&spec)?;
    let d = oracle_spectrum(&distance_matrix(&g)?.to_sym_matrix())?;
    println!("D({spec}) by the oracle: {d}");

    let expected = Spectrum::from_integers([(12, 1), (0, 4), (-3, 4)]);
    let report = spectra_match(&expected, &d, 1e-6);
    println!(
        "matches {{12:1, 0:4, -3:4}}: {} (max gap {:e})",
        report.matched, report.max_gap.0
    );

    let wrong = Spectrum::from_integers([(12, 1), (0, 3), (-3, 5)]);
    for m in spectra_match(&wrong, &d, 1e-6).mismatches {
        println!("mismatch at group {}: {}", m.index, m.reason);
    }
    Ok(())
}
