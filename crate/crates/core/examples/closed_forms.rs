//! Closed-form distance spectra of base families and products with K_n,
//! and their distance-integrality certificates.

use kron_spectra::closed_form::{check_integrality, distance_spectrum};
use kron_spectra::graph::FamilySpec;

fn main() -> kron_spectra::error::Result<()> {
    for text in [
        "J(6,3)",
        "H(3,3)",
        "kron(K3,K3)",
        "kron(K4,C6)",
        "kron(K3,C7)",
        "kron(K3,J(5,2))",
        "kron(K4,H(2,3))",
    ] {
        let spec: FamilySpec = text.parse()?;
        let s = distance_spectrum(&spec)?;
        let cert = check_integrality(&s, 1e-9);
        println!(
            "{spec}: {s}  (order {}, integral: {})",
            s.order(),
            cert.is_integral
        );
    }
    Ok(())
}
