//! Builds graph families and a Kronecker product, then checks connectivity
//! and diameter against the walk-length prediction.

use kron_spectra::graph::{
    build_family, default_walk_bound, diameter, gamma, kronecker_connectivity_predicted,
    predicted_kron_diameter, FamilySpec,
};

fn main() -> kron_spectra::error::Result<()> {
    for text in ["C6", "K4", "J(5,2)", "H(3,2)"] {
        let spec: FamilySpec = text.parse()?;
        let g = build_family(&spec)?;
        println!(
            "{spec}: {} vertices, {} edges, degree {:?}, diameter {}",
            g.vertex_count(),
            g.edge_count(),
            g.regular_degree(),
            diameter(&g)?
        );
    }

    let c5 = build_family(&FamilySpec::Cycle(5))?;
    let k5 = build_family(&FamilySpec::Complete(5))?;
    println!("γ(C5) = {}", gamma(&c5, default_walk_bound(&c5))?);
    let product = build_family(&"kron(C5,K5)".parse()?)?;
    println!(
        "C5 ⊗ K5: predicted diameter {}, BFS diameter {}",
        predicted_kron_diameter(&c5, &k5)?,
        diameter(&product)?
    );

    let c4 = build_family(&FamilySpec::Cycle(4))?;
    let c6 = build_family(&FamilySpec::Cycle(6))?;
    println!(
        "C4 ⊗ C6 predicted connected: {}",
        kronecker_connectivity_predicted(&c4, &c6)?
    );

    print!(
        "K2 ⊗ C4 edge list:\n{}",
        build_family(&"kron(K2,C4)".parse()?)?.to_edge_list()
    );
    Ok(())
}
