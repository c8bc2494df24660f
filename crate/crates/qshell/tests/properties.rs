//! Randomized invariants: facts that must hold for *every* input, checked
//! on generated ones.  Deterministic fixtures live next to the modules;
//! these sweeps guard the algebra the fixtures take for granted.

use proptest::prelude::*;

use qshell::{
    boundary_matrix, order_complex, vector_compare, FieldSpec, QComplex, Subspace,
    SubspaceLattice, Vector,
};

/// All field orders the command line accepts.
fn arb_field_order() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9])
}

/// A field order together with raw entry lists for `count` vectors in F_q^n.
fn arb_entry_lists(
    n: usize,
    count: std::ops::Range<usize>,
) -> impl Strategy<Value = (u64, Vec<Vec<u64>>)> {
    arb_field_order().prop_flat_map(move |q| {
        (Just(q), prop::collection::vec(prop::collection::vec(0..q, n), count.clone()))
    })
}

proptest! {
    #[test]
    fn field_axioms_hold(q in arb_field_order(), a in 0u64..512, b in 0u64..512, c in 0u64..512) {
        let spec = FieldSpec::from_order(q).unwrap();
        let (a, b, c) = ((a % q) as u16, (b % q) as u16, (c % q) as u16);
        prop_assert_eq!(spec.add(spec.add(a, b), c), spec.add(a, spec.add(b, c)));
        prop_assert_eq!(spec.mul(spec.mul(a, b), c), spec.mul(a, spec.mul(b, c)));
        prop_assert_eq!(spec.add(a, b), spec.add(b, a));
        prop_assert_eq!(spec.mul(a, b), spec.mul(b, a));
        prop_assert_eq!(spec.mul(a, spec.add(b, c)), spec.add(spec.mul(a, b), spec.mul(a, c)));
        prop_assert_eq!(spec.add(a, spec.neg(a)), 0);
        if a != 0 {
            prop_assert_eq!(spec.mul(a, spec.inv(a).unwrap()), 1);
        }
    }

    #[test]
    fn spans_do_not_depend_on_the_generator_list((q, lists) in arb_entry_lists(3, 1..4)) {
        let spec = FieldSpec::from_order(q).unwrap();
        let gens: Vec<Vector> =
            lists.iter().map(|l| Vector::new(&spec, l).unwrap()).collect();
        let span = Subspace::from_generators(&spec, 3, &gens).unwrap();

        // Permuting and duplicating generators cannot change the span ...
        let mut noisy: Vec<Vector> = gens.iter().rev().cloned().collect();
        noisy.extend(gens.iter().cloned());
        let same = Subspace::from_generators(&spec, 3, &noisy).unwrap();
        prop_assert_eq!(&span, &same);

        // ... the span contains each generator, and its dimension is bounded
        // by the list length.
        for g in &gens {
            prop_assert!(span.contains(g).unwrap());
        }
        prop_assert!(span.dim() <= gens.len());
    }

    #[test]
    fn lattice_tables_satisfy_the_dimension_formula(
        q in prop::sample::select(vec![2u64, 3]),
        seed_a in any::<prop::sample::Index>(),
        seed_b in any::<prop::sample::Index>(),
    ) {
        let spec = FieldSpec::from_order(q).unwrap();
        let lattice = SubspaceLattice::new(&spec, 3).unwrap();
        let a = seed_a.index(lattice.len()) as u32;
        let b = seed_b.index(lattice.len()) as u32;

        // dim(U + W) + dim(U ∩ W) = dim U + dim W, and the memoized tables
        // agree with direct subspace arithmetic.
        let join = lattice.join(a, b);
        let meet = lattice.meet(a, b);
        prop_assert_eq!(
            lattice.dim_of(join) + lattice.dim_of(meet),
            lattice.dim_of(a) + lattice.dim_of(b)
        );
        let (u, w) = (lattice.subspace(a), lattice.subspace(b));
        prop_assert_eq!(&u.sum(w).unwrap(), lattice.subspace(join));
        prop_assert_eq!(&u.intersect(w).unwrap(), lattice.subspace(meet));
        prop_assert_eq!(lattice.le(a, b), meet == a);
    }

    #[test]
    fn vector_compare_is_a_strict_total_order((q, lists) in arb_entry_lists(4, 3..4)) {
        let spec = FieldSpec::from_order(q).unwrap();
        let v: Vec<Vector> = lists.iter().map(|l| Vector::new(&spec, l).unwrap()).collect();
        let cmp = |a: &Vector, b: &Vector| vector_compare(a, b).unwrap();

        prop_assert_eq!(cmp(&v[0], &v[1]), cmp(&v[1], &v[0]).reverse());
        prop_assert_eq!(cmp(&v[0], &v[0]), std::cmp::Ordering::Equal);
        prop_assert_eq!(cmp(&v[0], &v[1]) == std::cmp::Ordering::Equal, v[0] == v[1]);
        // Transitivity over the sampled triple.
        let mut sorted = v.clone();
        sorted.sort_by(|a, b| cmp(a, b));
        prop_assert_ne!(cmp(&sorted[0], &sorted[1]), std::cmp::Ordering::Greater);
        prop_assert_ne!(cmp(&sorted[1], &sorted[2]), std::cmp::Ordering::Greater);
        prop_assert_ne!(cmp(&sorted[0], &sorted[2]), std::cmp::Ordering::Greater);
    }

    #[test]
    fn generated_complexes_are_closed_and_boundaries_square_to_zero(
        ids in prop::collection::btree_set(0u32..16, 0..5),
    ) {
        let spec = FieldSpec::from_order(2).unwrap();
        let lattice = SubspaceLattice::new(&spec, 3).unwrap();
        let faces: Vec<Subspace> =
            ids.iter().map(|&id| lattice.subspace(id).clone()).collect();
        let complex = QComplex::generate(&lattice, &faces).unwrap();

        // Downward closure is generate's contract.
        for &f in complex.face_ids() {
            for a in lattice.ids() {
                if lattice.le(a, f) {
                    prop_assert!(complex.contains_id(a));
                }
            }
        }

        // ∂_p ∘ ∂_{p+1} = 0 in the augmented chain complex of the order
        // complex of the punctured face poset.
        let oc = order_complex(&complex.puncture());
        if let Some(top) = oc.dim() {
            for p in 0..=top {
                let square = boundary_matrix(&oc, p).mul(&boundary_matrix(&oc, p + 1));
                prop_assert!(square.is_zero(), "∂_{} ∘ ∂_{} is nonzero", p, p + 1);
            }
        }
    }
}
