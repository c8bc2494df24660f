//! Exhaustive q-matroid axiom suites, and how mutations get caught.
//!
//! Rank tables are checked against (r1)-(r3), independent-space families
//! against (i1)-(i4), basis families against (b1)-(b4).  Reports list
//! every violating witness rather than just a verdict.
//!
//!     cargo run --release --example axiom_check

use std::error::Error;

use qshell::{
    uniform_matroid, verify_basis_axioms, verify_independence_axioms, RankOracle, Subspace,
    Vector,
};

fn main() -> Result<(), Box<dyn Error>> {
    let oracle = uniform_matroid(2, 3, 2)?;
    println!("U_2(2, 3) rank axioms:\n{}", oracle.verify_rank_axioms());

    // Mutate the rank table: capping every rank at 1 while keeping the
    // full space at 2 breaks submodularity somewhere, and the report says
    // exactly where.
    let broken = RankOracle::from_fn(oracle.lattice(), |s| {
        if s.dim() == 3 { 2 } else { s.dim().min(1) as u64 }
    })?;
    let report = broken.verify_rank_axioms();
    println!("mutated table:\n{report}");
    if let Some((a, b)) = report.submodularity_violations.first() {
        println!("first (r3) witness: A = {a}, B = {b}\n");
    }

    // Independence axioms on the family of independent spaces ...
    let complex = oracle.independent_spaces()?;
    let members: Vec<Subspace> = complex.faces().cloned().collect();
    println!("independent spaces:\n{}", verify_independence_axioms(oracle.lattice(), &members)?);

    // ... and what happens after deleting one line from the family: the
    // downward-closure axiom fails at every face above the hole.
    let spec = oracle.lattice().spec().clone();
    let victim = Subspace::line(&Vector::unit(&spec, 3, 2));
    let pruned: Vec<Subspace> = members.iter().filter(|s| **s != victim).cloned().collect();
    let report = verify_independence_axioms(oracle.lattice(), &pruned)?;
    println!("after deleting {victim}:\n{report}");
    for (a, b) in &report.closure_violations {
        println!("  (i2) witness: {b} lost its subspace {a}");
    }

    // Basis axioms, including the singleton family that slips past (b3)
    // but not (b4).
    let bases = oracle.bases()?.list();
    println!("\nbases of U_2(2, 3):\n{}", verify_basis_axioms(oracle.lattice(), &bases)?);
    let diag = Subspace::from_generators(
        &spec,
        3,
        &[Vector::new(&spec, &[1, 1, 0])?, Vector::new(&spec, &[0, 0, 1])?],
    )?;
    let report = verify_basis_axioms(oracle.lattice(), &[diag])?;
    println!("a singleton family:\n{report}");
    Ok(())
}
