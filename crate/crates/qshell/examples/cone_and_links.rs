//! Pivot-first shellings, acyclic prefixes and sphere links.
//!
//! Fix a nonzero pivot vector a and list the sphere's facets with those
//! containing a first.  The first l facets glue along proper subsets (the
//! union of their restriction sets misses a vector), the punctured prefix
//! Δ̊_l is a cone with apex ⟨a⟩, and every later facet glues along its
//! full boundary sphere.
//!
//!     cargo run --release --example cone_and_links

use std::error::Error;

use qshell::{
    acyclicity_hypothesis, pivot_first_order, q_sphere, sphere_link_check, ConeApex, Vector,
};

fn main() -> Result<(), Box<dyn Error>> {
    let sphere = q_sphere(3, 3)?;
    let spec = sphere.lattice().spec().clone();
    let pivot = Vector::unit(&spec, 3, 0);

    let (order, ell) = pivot_first_order(&sphere, &pivot)?;
    let t = order.len();
    println!("S_3^2 with pivot {pivot}: l = {ell}, t = {t}");
    println!("(expected: l = (q^(n-1) - 1)/(q - 1) = 4 and t - l = q^(n-1) = 9)");

    let flags = acyclicity_hypothesis(&order, ell)?;
    println!("\nacyclicity hypothesis for i = 2..{ell}: {flags:?}");

    let prefix = order.prefix_complex(ell)?;
    match prefix.punctured_cone_apex()? {
        ConeApex::Cone { apex } => println!("punctured Δ_{ell} is a cone with apex {apex}"),
        other => println!("unexpected: {other:?}"),
    }
    let report = prefix.punctured_homology();
    println!("its reduced homology vanishes everywhere: {}", report.is_acyclic());

    println!("\nsphere_link_check along the order:");
    for i in 2..=t {
        let complete = sphere_link_check(&order, i)?;
        let marker = if i <= ell { "(prefix)" } else { "" };
        println!("  i = {i:2}: {complete} {marker}");
    }
    Ok(())
}
