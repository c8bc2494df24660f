//! Shelling the independence complex of a uniform q-matroid.
//!
//! Sorting the facets by the ≼ order (entry-wise comparison of canonical
//! bases, most significant row first) always produces a shelling; the
//! certificate records, for every pair i < j, a witness k < j with
//! F_k ∩ F_j a hyperplane of F_j containing F_i ∩ F_j.
//!
//!     cargo run --release --example uniform_shelling

use std::error::Error;

use qshell::{is_shelling, shelling_via_order, uniform_matroid};

fn main() -> Result<(), Box<dyn Error>> {
    let oracle = uniform_matroid(2, 3, 2)?;
    let complex = oracle.independent_spaces()?;
    let order = shelling_via_order(&complex)?;

    println!("U_2(2, 3): {} faces, facets in ≼ order:", complex.len());
    for i in 1..=order.len() {
        println!("  F_{i} = {}", order.facet(i));
    }

    let certificate = is_shelling(&complex, &order)?;
    assert!(certificate.passed());
    println!("\nwitness map (i, j) -> k:");
    for ((i, j), k) in certificate.witnesses() {
        println!("  ({i}, {j}) -> {k}");
    }

    // The same machinery accepts any facet permutation and reports the
    // first pair with no witness when the criterion fails.
    for (k, n, q) in [(1usize, 3usize, 2u64), (2, 4, 2), (3, 4, 2), (2, 3, 3)] {
        let complex = uniform_matroid(k, n, q)?.independent_spaces()?;
        let order = shelling_via_order(&complex)?;
        let certificate = is_shelling(&complex, &order)?;
        println!(
            "U_{q}({k}, {n}): {} facets, canonical order shells: {}",
            complex.facet_ids().len(),
            certificate.passed()
        );
    }
    Ok(())
}
