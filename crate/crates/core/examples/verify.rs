//! Closed form against oracle with discrepancy notes, then a small slice
//! of the verification grid as JSON lines.

use kron_spectra::report::{full_grid, run_grid, verify_family, MatrixKind, DEFAULT_TOL};

fn main() -> kron_spectra::error::Result<()> {
    for text in ["kron(K4,C6)", "kron(K3,H(2,3))", "kron(K3,C3)"] {
        let r = verify_family(&text.parse()?, MatrixKind::Distance, DEFAULT_TOL)?;
        println!(
            "{}: match {}, max gap {:e}",
            r.family, r.matched, r.max_abs_gap.0
        );
        for note in &r.discrepancy_notes {
            println!("  note: {note}");
        }
    }

    let cases = full_grid(10);
    println!("grid cases with at most 10 vertices: {}", cases.len());
    let mut out = Vec::new();
    let summary = run_grid(&cases, DEFAULT_TOL, &mut out)?;
    let text = String::from_utf8(out).expect("JSON is UTF-8");
    for line in text.lines().take(2) {
        println!("{}…", &line[..line.len().min(120)]);
    }
    println!("summary: {summary:?}");
    Ok(())
}
