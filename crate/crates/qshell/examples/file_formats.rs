//! The plain-text exchange formats: subspace lists and rank tables.
//!
//! Both start with a `q=<q> n=<n>` header.  A subspace list is a sequence
//! of blank-line-separated basis blocks (one generator per row, `0` for
//! the zero subspace); a rank table has one `basis | rank` line per
//! subspace, rows separated by `;` and entries by `,`.
//!
//!     cargo run --example file_formats

use std::error::Error;

use qshell::{
    load_rank_oracle, parse_subspace_list, render_rank_table, render_subspace_list,
    uniform_matroid, DEFAULT_MAX_SUBSPACES,
};

fn main() -> Result<(), Box<dyn Error>> {
    let oracle = uniform_matroid(1, 2, 2)?;
    let table = render_rank_table(&oracle);
    println!("rank table of U_2(1, 2):\n{table}");

    let reloaded = load_rank_oracle(&table, DEFAULT_MAX_SUBSPACES)?;
    println!("round trip preserves the oracle: {}", reloaded == oracle);

    let bases = oracle.bases()?.list();
    let listed = render_subspace_list(oracle.lattice().spec(), 2, &bases);
    println!("\nits bases as a subspace list:\n{listed}");

    // Parsing is lenient about generator choice: rows canonicalize to the
    // row-reduced echelon basis, so any spanning set names the subspace.
    let text = "q=2 n=2\n\n1 1\n0 1\n";
    let (_, _, parsed) = parse_subspace_list(text)?;
    println!("parsed <(1,1), (0,1)> as: {}", parsed[0]);

    // Errors carry the offending line number.
    let bad = "q=2 n=2\n\n1 7\n";
    match parse_subspace_list(bad) {
        Err(e) => println!("bad entry rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
