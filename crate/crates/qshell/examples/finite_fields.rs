//! Exact arithmetic in small Galois fields, and the canonical subspace
//! representation built on top of it.
//!
//!     cargo run --example finite_fields

use std::error::Error;

use qshell::{FieldSpec, Matrix, Subspace, Vector};

fn main() -> Result<(), Box<dyn Error>> {
    // Prime fields use arithmetic mod p; prime powers use Conway-style
    // polynomial tables.  Either way, every operation is exact.
    let f4 = FieldSpec::from_order(4)?;
    println!("F_4 multiplication (elements as canonical representatives):");
    for a in 0..4u16 {
        let row: Vec<String> = (0..4u16).map(|b| f4.mul(a, b).to_string()).collect();
        println!("  {a} * [0 1 2 3] = [{}]", row.join(" "));
    }
    let a = 3u16;
    println!("inverse of {a} in F_4: {}", f4.inv(a)?);

    // Vectors know their field; rows reduce to a unique RREF, so equal
    // subspaces always compare equal.
    let f3 = FieldSpec::from_order(3)?;
    let rows = vec![
        Vector::new(&f3, &[1, 2, 0])?,
        Vector::new(&f3, &[0, 1, 1])?,
        Vector::new(&f3, &[1, 0, 1])?,
    ];
    let m = Matrix::from_rows(&rows)?;
    println!("\nrank of a 3x3 matrix over F_3: {}", m.rref().rank);

    let u = Subspace::from_generators(&f3, 3, &rows[..2])?;
    let doubled = vec![rows[0].clone(), rows[1].clone(), rows[0].clone()];
    let v = Subspace::from_generators(&f3, 3, &doubled)?;
    println!("independent generators and a redundant list agree: {}", u == v);
    println!("canonical form: {u}");

    // Sums and intersections stay inside the lattice of subspaces.
    let w = Subspace::from_generators(&f3, 3, &rows[2..])?;
    println!("dim(U + W) = {}", u.sum(&w)?.dim());
    println!("dim(U ∩ W) = {}", u.intersect(&w)?.dim());
    Ok(())
}
