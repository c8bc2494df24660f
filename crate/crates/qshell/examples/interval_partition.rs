//! Restriction sets and the interval partition carried by a shelling.
//!
//! At each step i of a shelling, the new faces form an interval
//! I_i = Δ_i \ Δ_{i-1}; the restriction set R(i, j) collects the vectors
//! of F_i missing from F_i ∩ F_j whenever that meet is a hyperplane of
//! F_i.  This example prints both and re-checks the stepwise identities.
//!
//!     cargo run --release --example interval_partition

use std::error::Error;

use qshell::{
    interval, q_sphere, restriction_set, shelling_via_order, verify_interval_partition,
};

fn main() -> Result<(), Box<dyn Error>> {
    let sphere = q_sphere(3, 2)?;
    let order = shelling_via_order(&sphere)?;
    let t = order.len();

    println!("q-sphere on F_2^3, facets in ≼ order:");
    for i in 1..=t {
        println!("  F_{i} = {}", order.facet(i));
    }

    println!("\nnonempty restriction sets:");
    for i in 2..=t {
        for j in 1..i {
            let r = restriction_set(&order, i, j)?;
            if !r.is_empty() {
                let rendered: Vec<String> = r.iter().map(|v| v.to_string()).collect();
                println!("  R({i}, {j}) = {{{}}}", rendered.join(", "));
            }
        }
    }

    println!("\nintervals (new faces per step):");
    for i in 1..=t {
        let faces = interval(&order, i)?;
        let rendered: Vec<String> = faces.iter().map(|f| f.to_string()).collect();
        println!("  I_{i} = {{{}}}", rendered.join(", "));
    }

    // verify_interval_partition re-proves disjointness and coverage at
    // every step, so a completed call is itself the certificate.
    let partition = verify_interval_partition(&sphere, &order)?;
    let sizes: Vec<usize> = partition.intervals.iter().map(Vec::len).collect();
    println!("\ninterval sizes {sizes:?} sum to {} = |Δ| = {}", sizes.iter().sum::<usize>(), sphere.len());
    Ok(())
}
