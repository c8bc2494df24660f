//! qshell — shelling orders, interval partitions and integral homology for
//! q-complexes over finite fields.
//!
//! A q-complex is a downward-closed family of subspaces of F_q^n, the
//! subspace analogue of a simplicial complex.  This crate provides the
//! machinery to work with them exactly:
//!
//! * [`gf`] — GF(p^k) arithmetic with canonical integer representatives;
//! * [`linalg`] — vectors, matrices and canonically-represented subspaces
//!   (reduced row echelon bases) with sum/intersection/containment;
//! * [`enumerate`] — Grassmannians and full subspace posets, plus exact
//!   Gaussian binomial counts;
//! * [`order`] — the tower-decomposition total order on equidimensional
//!   subspaces that makes q-matroid facet lists shellable when sorted;
//! * [`lattice`] — an id-indexed materialization of Σ(E) with memoized
//!   sum/meet tables, the workhorse behind the verification loops;
//! * [`qmatroid`] — rank oracles, independence/basis axiom verification and
//!   the constructive dual-basis exchange;
//! * [`qcomplex`] — q-complexes, shelling certificates, restriction sets and
//!   interval partitions, cone detection, sphere link checks;
//! * [`homology`] — order complexes of the punctured face poset and reduced
//!   integral homology via integer Smith normal form;
//! * [`io`] — the plain-text matrix/subspace/rank-table/complex file formats;
//! * [`cli`] — the command implementations behind the `qshell` binary.
//!
//! Start with the examples directory: each example is a small, runnable tour
//! of one capability (`cargo run --example sphere_homology`, …).

pub mod cli;
pub mod enumerate;
pub mod gf;
pub mod homology;
pub mod io;
pub mod lattice;
pub mod linalg;
pub mod order;
pub mod qcomplex;
pub mod qmatroid;

pub use enumerate::{
    enumerate_all_subspaces, enumerate_grassmannian, gaussian_binomial, total_subspace_count,
    EnumerationError,
};
pub use gf::{FieldElement, FieldError, FieldSpec, MAX_FIELD_ORDER};
pub use homology::{
    boundary_matrix, euler_check, expected_sphere_homology, finite_space_homology, order_complex,
    reduced_homology, smith_normal_form, DegreeHomology, HomologyError, HomologyReport,
    IntegerMatrix, OrderComplex, Poset, SmithNormalForm,
};
pub use io::{
    load_complex, load_rank_oracle, parse_rank_table, parse_subspace_list, render_rank_table,
    render_subspace_list, IoError,
};
pub use lattice::{LatticeError, SubspaceLattice, DEFAULT_MAX_SUBSPACES};
pub use linalg::{LinAlgError, Matrix, Subspace, Vector};
pub use order::{
    layer_min, layer_min_with, leading_index, profile, sort_facets, sort_facets_with,
    subspace_compare, subspace_compare_with, subspace_profile, tower_decomposition,
    vector_compare, vector_compare_with, ElementOrder, OrderError, TowerDecomposition,
};
pub use qcomplex::{
    acyclicity_hypothesis, cone_apex, interval, is_shelling, pivot_first_order, q_sphere,
    restriction_set, shelling_via_order, sphere_link_check, verify_interval_partition,
    ComplexError, ConeApex, IntervalPartition, QComplex, ShellingCertificate, ShellingOrder,
};
pub use qmatroid::{
    dual_basis_exchange, rank_from_independents, uniform_matroid, verify_basis_axioms,
    verify_independence_axioms, BasisAxiomReport, BasisFamily, IndependenceReport, MatroidError,
    RankAxiomReport, RankOracle,
};
