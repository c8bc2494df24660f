//! Leading indices, profiles, tower decompositions and the total order ≼ on
//! equidimensional subspaces.
//!
//! The order works in two stages.  Vectors are compared lexicographically,
//! coordinate 1 most significant, with field elements ordered 0 ≺ 1 ≺ …; one
//! consequence worth internalizing is that a *larger* leading index makes a
//! *smaller* vector.  Subspaces of equal dimension are then compared through
//! their tower decompositions: walk the towers bottom-up until they first
//! differ, and compare the minimal vectors of the differing layers.
//!
//! Only "0 first, 1 second" is forced about the field-element order; the rest
//! is a convention.  Every comparison here therefore has a `_with` variant
//! taking an explicit [`ElementOrder`], and the plain functions use
//! representative order.  No claim is made that different element orders sort
//! facets the same way — only that each choice yields a total order.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use thiserror::Error;

use crate::gf::FieldError;
use crate::linalg::{Subspace, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("the zero vector has no leading index")]
    ZeroVector,
    #[error("the zero subspace has no tower decomposition")]
    ZeroSubspace,
    #[error("layer index {i} is out of range 1..={dim}")]
    LayerOutOfRange { i: usize, dim: usize },
    #[error("subspace dimensions differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("facet list mixes dimensions {expected} and {got}")]
    MixedDimensions { expected: usize, got: usize },
    #[error("element order must be a permutation of 0..{q} beginning 0, 1")]
    InvalidElementOrder { q: u64 },
    #[error("element order is over a field of order {order_q}, operands over GF({operand_q})")]
    ElementOrderMismatch { order_q: u64, operand_q: u64 },
}

/// A total order on the elements of GF(q), constrained to put 0 first and 1
/// second.  `repr_order` (0 ≺ 1 ≺ 2 ≺ …) is the default everywhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementOrder {
    q: u64,
    key: Vec<u16>, // key[repr] = sort position
}

impl ElementOrder {
    pub fn repr_order(q: u64) -> ElementOrder {
        ElementOrder { q, key: (0..q as u16).collect() }
    }

    /// Build from the ascending element sequence, e.g. `[0, 1, 3, 2]` for a
    /// GF(4) order that swaps the two non-unit elements.
    pub fn from_sequence(q: u64, ascending: &[u64]) -> Result<ElementOrder, OrderError> {
        let invalid = OrderError::InvalidElementOrder { q };
        if ascending.len() != q as usize || ascending[0] != 0 || ascending.get(1) != Some(&1) {
            return Err(invalid);
        }
        let mut key = vec![u16::MAX; q as usize];
        for (pos, &repr) in ascending.iter().enumerate() {
            if repr >= q || key[repr as usize] != u16::MAX {
                return Err(invalid);
            }
            key[repr as usize] = pos as u16;
        }
        Ok(ElementOrder { q, key })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    #[inline]
    fn position(&self, repr: u16) -> u16 {
        self.key[repr as usize]
    }

    fn check(&self, operand_q: u64) -> Result<(), OrderError> {
        if self.q == operand_q {
            Ok(())
        } else {
            Err(OrderError::ElementOrderMismatch { order_q: self.q, operand_q })
        }
    }
}

/// 1-based position of the first nonzero entry.
pub fn leading_index(v: &Vector) -> Result<usize, OrderError> {
    v.raw().iter().position(|&e| e != 0).map(|p| p + 1).ok_or(OrderError::ZeroVector)
}

/// The profile of a set of vectors: the leading indices of its nonzero
/// members.  Zero vectors contribute nothing, so the profile of {0} is empty.
pub fn profile(vectors: &[Vector]) -> BTreeSet<usize> {
    vectors.iter().filter(|v| !v.is_zero()).map(|v| leading_index(v).unwrap()).collect()
}

/// Profile of a subspace: the leading indices of all its nonzero vectors.
/// These are exactly the pivot columns of the canonical basis — any linear
/// combination leads at the pivot of its lowest participating basis row.
pub fn subspace_profile(u: &Subspace) -> BTreeSet<usize> {
    u.pivots().iter().map(|&p| p + 1).collect()
}

/// Lexicographic comparison under representative order.
pub fn vector_compare(v: &Vector, w: &Vector) -> Result<Ordering, OrderError> {
    vector_compare_with(&ElementOrder::repr_order(v.spec().q()), v, w)
}

pub fn vector_compare_with(
    order: &ElementOrder,
    v: &Vector,
    w: &Vector,
) -> Result<Ordering, OrderError> {
    if !v.spec().same_field(w.spec()) {
        return Err(FieldError::SpecMismatch.into());
    }
    order.check(v.spec().q())?;
    if v.len() != w.len() {
        return Err(OrderError::AmbientMismatch { left: v.len(), right: w.len() });
    }
    for (&a, &b) in v.raw().iter().zip(w.raw()) {
        match order.position(a).cmp(&order.position(b)) {
            Ordering::Equal => continue,
            other => return Ok(other),
        }
    }
    Ok(Ordering::Equal)
}

/// The tower decomposition τ(U) = (U_1, …, U_r): U_i is spanned by the i
/// canonical basis rows with the largest leading indices, i.e. the bottom i
/// rows.  The layers are strictly nested and canonical, so the decomposition
/// does not depend on any generator-matrix choice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerDecomposition {
    layers: Vec<Subspace>,
}

impl TowerDecomposition {
    /// The chain U_1 ⊂ U_2 ⊂ … ⊂ U_r, in that order.
    pub fn layers(&self) -> &[Subspace] {
        &self.layers
    }

    /// U_i for 1-based i.
    pub fn layer(&self, i: usize) -> Option<&Subspace> {
        if i == 0 {
            return None;
        }
        self.layers.get(i - 1)
    }
}

pub fn tower_decomposition(u: &Subspace) -> Result<TowerDecomposition, OrderError> {
    let r = u.dim();
    if r == 0 {
        return Err(OrderError::ZeroSubspace);
    }
    let n = u.ambient_dim();
    let mut layers = Vec::with_capacity(r);
    for i in 1..=r {
        // The bottom i rows of an RREF basis are themselves an RREF basis.
        let rows: Vec<Vector> = ((r - i)..r).map(|j| u.basis_row(j)).collect();
        let layer = Subspace::from_generators(u.spec(), n, &rows).expect("rows share the ambient");
        debug_assert_eq!(layer.dim(), i);
        layers.push(layer);
    }
    Ok(TowerDecomposition { layers })
}

/// The ≺-least vector of the i-th tower layer U_i \ U_{i−1} (1-based i).
/// Its first nonzero entry is necessarily 1.
pub fn layer_min(u: &Subspace, i: usize) -> Result<Vector, OrderError> {
    layer_min_with(&ElementOrder::repr_order(u.spec().q()), u, i)
}

pub fn layer_min_with(
    order: &ElementOrder,
    u: &Subspace,
    i: usize,
) -> Result<Vector, OrderError> {
    order.check(u.spec().q())?;
    if i == 0 || i > u.dim() {
        return Err(OrderError::LayerOutOfRange { i, dim: u.dim() });
    }
    // Scanning is exact but exponential in i; past a small threshold, greedy
    // coset minimization gives the same vector (the two are tested against
    // each other).
    let q = u.spec().q();
    let small = q.checked_pow(i as u32).is_some_and(|size| size <= 4096);
    if small {
        layer_min_by_scan(order, u, i)
    } else {
        Ok(layer_min_greedy(u, i))
    }
}

/// Enumerate U_i, drop everything in U_{i−1}, take the ≺-minimum.
fn layer_min_by_scan(order: &ElementOrder, u: &Subspace, i: usize) -> Result<Vector, OrderError> {
    let r = u.dim();
    let n = u.ambient_dim();
    let rows_i: Vec<Vector> = ((r - i)..r).map(|j| u.basis_row(j)).collect();
    let rows_below: Vec<Vector> = ((r - i + 1)..r).map(|j| u.basis_row(j)).collect();
    let upper = Subspace::from_generators(u.spec(), n, &rows_i).expect("consistent rows");
    let lower = Subspace::from_generators(u.spec(), n, &rows_below).expect("consistent rows");
    let mut best: Option<Vector> = None;
    for v in upper.vectors() {
        if lower.contains(&v).expect("same ambient") {
            continue;
        }
        best = match best {
            None => Some(v),
            Some(b) => {
                if vector_compare_with(order, &v, &b)? == Ordering::Less {
                    Some(v)
                } else {
                    Some(b)
                }
            }
        };
    }
    Ok(best.expect("layers are nonempty"))
}

/// Greedy coset minimization: every layer vector with leading coefficient 1
/// is u_i + x for x ∈ U_{i−1}, and zeroing the coordinate at each U_{i−1}
/// pivot is optimal position by position.  Because 0 sorts first in every
/// admissible element order, the result is order-independent.
fn layer_min_greedy(u: &Subspace, i: usize) -> Vector {
    let r = u.dim();
    let n = u.ambient_dim();
    let rows_below: Vec<Vector> = ((r - i + 1)..r).map(|j| u.basis_row(j)).collect();
    let lower = Subspace::from_generators(u.spec(), n, &rows_below).expect("consistent rows");
    let reduced = lower.reduce_raw(u.basis_row(r - i).raw());
    // Scale the leading coefficient to 1.  For canonical bases this is a
    // no-op (the pivot entry is already 1 and reduction never touches it).
    let f = u.spec();
    let lead = reduced.iter().copied().find(|&e| e != 0).expect("layer vectors are nonzero");
    let inv = f.inv(lead).expect("nonzero");
    Vector::from_raw(f, reduced.iter().map(|&e| f.mul(e, inv)).collect())
}

/// The total order ≼ on equidimensional subspaces: find the first tower
/// layer where the two towers differ and compare those layers' minimal
/// vectors.  Returns `Equal` exactly for equal subspaces.
pub fn subspace_compare(u: &Subspace, v: &Subspace) -> Result<Ordering, OrderError> {
    subspace_compare_with(&ElementOrder::repr_order(u.spec().q()), u, v)
}

pub fn subspace_compare_with(
    order: &ElementOrder,
    u: &Subspace,
    v: &Subspace,
) -> Result<Ordering, OrderError> {
    if !u.spec().same_field(v.spec()) {
        return Err(FieldError::SpecMismatch.into());
    }
    order.check(u.spec().q())?;
    if u.ambient_dim() != v.ambient_dim() {
        return Err(OrderError::AmbientMismatch { left: u.ambient_dim(), right: v.ambient_dim() });
    }
    if u.dim() != v.dim() {
        return Err(OrderError::DimensionMismatch { left: u.dim(), right: v.dim() });
    }
    let r = u.dim();
    for e in 1..=r {
        // U_e = V_e iff their canonical bases — the bottom e rows — agree,
        // so the first differing layer shows up as the first differing row,
        // counting from the bottom.
        if u.row_raw(r - e) != v.row_raw(r - e) {
            let lu = layer_min_with(order, u, e)?;
            let lv = layer_min_with(order, v, e)?;
            return vector_compare_with(order, &lu, &lv);
        }
    }
    Ok(Ordering::Equal)
}

/// Sort a facet list ascending under ≼.
pub fn sort_facets(facets: &[Subspace]) -> Result<Vec<Subspace>, OrderError> {
    let q = match facets.first() {
        Some(f) => f.spec().q(),
        None => return Ok(Vec::new()),
    };
    sort_facets_with(&ElementOrder::repr_order(q), facets)
}

pub fn sort_facets_with(
    order: &ElementOrder,
    facets: &[Subspace],
) -> Result<Vec<Subspace>, OrderError> {
    let Some(first) = facets.first() else {
        return Ok(Vec::new());
    };
    for f in facets {
        if !f.spec().same_field(first.spec()) {
            return Err(FieldError::SpecMismatch.into());
        }
        if f.ambient_dim() != first.ambient_dim() {
            return Err(OrderError::AmbientMismatch {
                left: first.ambient_dim(),
                right: f.ambient_dim(),
            });
        }
        if f.dim() != first.dim() {
            return Err(OrderError::MixedDimensions { expected: first.dim(), got: f.dim() });
        }
    }
    order.check(first.spec().q())?;
    let mut sorted = facets.to_vec();
    sorted.sort_by(|a, b| subspace_compare_with(order, a, b).expect("validated above"));
    Ok(sorted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_grassmannian;
    use crate::gf::FieldSpec;
    use std::sync::Arc;

    fn gf(q: u64) -> Arc<FieldSpec> {
        FieldSpec::from_order(q).unwrap()
    }

    fn vec_of(spec: &Arc<FieldSpec>, entries: &[u64]) -> Vector {
        Vector::new(spec, entries).unwrap()
    }

    #[test]
    fn leading_index_examples() {
        let f = gf(2);
        assert_eq!(leading_index(&vec_of(&f, &[0, 1, 0])).unwrap(), 2);
        assert_eq!(leading_index(&vec_of(&f, &[1, 1, 1])).unwrap(), 1);
        assert_eq!(leading_index(&vec_of(&f, &[0, 0, 1])).unwrap(), 3);
        assert_eq!(leading_index(&Vector::zero(&f, 3)), Err(OrderError::ZeroVector));
    }

    #[test]
    fn profile_examples() {
        let f = gf(2);
        let set = vec![vec_of(&f, &[0, 1, 0]), vec_of(&f, &[0, 1, 1])];
        assert_eq!(profile(&set), BTreeSet::from([2]));
        assert_eq!(profile(&[Vector::zero(&f, 3)]), BTreeSet::new());
        assert_eq!(profile(&[]), BTreeSet::new());
    }

    #[test]
    fn subspace_profile_is_pivot_set() {
        // Oracle: scan every nonzero vector of the subspace.
        let f = gf(3);
        for r in 1..=3usize {
            for u in enumerate_grassmannian(&f, 3, r).unwrap() {
                let scanned: BTreeSet<usize> = u
                    .vectors()
                    .filter(|v| !v.is_zero())
                    .map(|v| leading_index(&v).unwrap())
                    .collect();
                assert_eq!(subspace_profile(&u), scanned, "{}", u);
            }
        }
    }

    #[test]
    fn vector_compare_examples() {
        let f = gf(2);
        let v = vec_of(&f, &[1, 1, 0]);
        let w = vec_of(&f, &[1, 1, 1]);
        assert_eq!(vector_compare(&v, &w).unwrap(), Ordering::Less);
        assert_eq!(vector_compare(&v, &v).unwrap(), Ordering::Equal);
        assert!(matches!(
            vector_compare(&v, &vec_of(&f, &[1, 1])),
            Err(OrderError::AmbientMismatch { .. })
        ));
    }

    #[test]
    fn smaller_leading_index_means_larger_vector() {
        // p(v) < p(w) forces w ≺ v; exhaustive over the nonzero vectors of
        // F_2^3 and F_3^2.
        for (q, n) in [(2u64, 3usize), (3, 2)] {
            let f = gf(q);
            let total = q.pow(n as u32);
            let decode = |mut m: u64| {
                let mut entries = vec![0u64; n];
                for e in entries.iter_mut().rev() {
                    *e = m % q;
                    m /= q;
                }
                vec_of(&f, &entries)
            };
            for a in 1..total {
                for b in 1..total {
                    let v = decode(a);
                    let w = decode(b);
                    if leading_index(&v).unwrap() < leading_index(&w).unwrap() {
                        assert_eq!(vector_compare(&w, &v).unwrap(), Ordering::Less);
                    }
                }
            }
        }
    }

    #[test]
    fn tower_decomposition_examples() {
        let f = gf(2);
        let u = Subspace::from_generators(
            &f,
            3,
            &[vec_of(&f, &[1, 1, 0]), vec_of(&f, &[0, 0, 1])],
        )
        .unwrap();
        let tower = tower_decomposition(&u).unwrap();
        assert_eq!(tower.layers().len(), 2);
        assert_eq!(tower.layer(1).unwrap(), &Subspace::line(&vec_of(&f, &[0, 0, 1])));
        assert_eq!(tower.layer(2).unwrap(), &u);

        let e1 = Subspace::line(&vec_of(&f, &[1, 0, 0]));
        let t = tower_decomposition(&e1).unwrap();
        assert_eq!(t.layers(), std::slice::from_ref(&e1));

        assert_eq!(tower_decomposition(&Subspace::zero(&f, 3)), Err(OrderError::ZeroSubspace));
    }

    #[test]
    fn tower_structure_exhaustive() {
        // Nested layers, dim U_i = i, strictly decreasing leading indices of
        // the per-layer minima.
        for (q, n) in [(2u64, 4usize), (3, 3)] {
            let f = gf(q);
            for r in 1..=n {
                for u in enumerate_grassmannian(&f, n, r).unwrap() {
                    let tower = tower_decomposition(&u).unwrap();
                    let mut last_leading = n + 1;
                    for (idx, layer) in tower.layers().iter().enumerate() {
                        let i = idx + 1;
                        assert_eq!(layer.dim(), i);
                        if i > 1 {
                            assert!(tower.layer(i - 1).unwrap().is_subspace_of(layer).unwrap());
                        }
                        let m = layer_min(&u, i).unwrap();
                        let li = leading_index(&m).unwrap();
                        assert!(li < last_leading, "leading indices must strictly decrease");
                        last_leading = li;
                        // The layer profile is the singleton {p(u_i)}.
                        let layer_vectors: Vec<Vector> = layer
                            .vectors()
                            .filter(|v| {
                                i == 1 || !tower.layer(i - 1).unwrap().contains(v).unwrap()
                            })
                            .collect();
                        assert_eq!(profile(&layer_vectors), BTreeSet::from([li]));
                    }
                    assert_eq!(tower.layers().last().unwrap(), &u);
                }
            }
        }
    }

    #[test]
    fn layer_min_examples() {
        let f = gf(2);
        let u = Subspace::from_generators(
            &f,
            3,
            &[vec_of(&f, &[1, 1, 0]), vec_of(&f, &[0, 0, 1])],
        )
        .unwrap();
        // Ū_2 = {(1,1,0), (1,1,1)}; the lexicographic minimum is (1,1,0).
        assert_eq!(layer_min(&u, 2).unwrap().reprs(), vec![1, 1, 0]);
        let e3 = Subspace::line(&vec_of(&f, &[0, 0, 1]));
        assert_eq!(layer_min(&e3, 1).unwrap().reprs(), vec![0, 0, 1]);
        assert!(matches!(layer_min(&u, 3), Err(OrderError::LayerOutOfRange { i: 3, dim: 2 })));
        assert!(matches!(layer_min(&u, 0), Err(OrderError::LayerOutOfRange { i: 0, dim: 2 })));
    }

    #[test]
    fn layer_min_strategies_agree() {
        for (q, n) in [(2u64, 4usize), (3, 3)] {
            let f = gf(q);
            let order = ElementOrder::repr_order(q);
            for r in 1..=n {
                for u in enumerate_grassmannian(&f, n, r).unwrap() {
                    for i in 1..=r {
                        let scanned = layer_min_by_scan(&order, &u, i).unwrap();
                        let greedy = layer_min_greedy(&u, i);
                        assert_eq!(scanned, greedy, "U={} i={}", u, i);
                        // First nonzero entry is 1.
                        let lead = scanned.reprs().into_iter().find(|&e| e != 0).unwrap();
                        assert_eq!(lead, 1);
                    }
                }
            }
        }
    }

    #[test]
    fn subspace_compare_chain() {
        let f = gf(2);
        let l01 = Subspace::line(&vec_of(&f, &[0, 1]));
        let l10 = Subspace::line(&vec_of(&f, &[1, 0]));
        let l11 = Subspace::line(&vec_of(&f, &[1, 1]));
        assert_eq!(subspace_compare(&l01, &l10).unwrap(), Ordering::Less);
        assert_eq!(subspace_compare(&l10, &l11).unwrap(), Ordering::Less);
        assert_eq!(subspace_compare(&l01, &l11).unwrap(), Ordering::Less);
        assert_eq!(subspace_compare(&l01, &l01).unwrap(), Ordering::Equal);
        assert!(matches!(
            subspace_compare(&l01, &Subspace::full(&f, 2)),
            Err(OrderError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn subspace_compare_is_total_on_g2_f2_4() {
        let f = gf(2);
        let spaces = enumerate_grassmannian(&f, 4, 2).unwrap();
        assert_eq!(spaces.len(), 35);
        for a in &spaces {
            for b in &spaces {
                let ab = subspace_compare(a, b).unwrap();
                let ba = subspace_compare(b, a).unwrap();
                assert_eq!(ab, ba.reverse());
                assert_eq!(ab == Ordering::Equal, a == b);
                for c in &spaces {
                    // Transitivity of strict comparison.
                    if ab == Ordering::Less
                        && subspace_compare(b, c).unwrap() == Ordering::Less
                    {
                        assert_eq!(subspace_compare(a, c).unwrap(), Ordering::Less);
                    }
                }
            }
        }
    }

    #[test]
    fn sort_facets_examples() {
        let f = gf(2);
        let l01 = Subspace::line(&vec_of(&f, &[0, 1]));
        let l10 = Subspace::line(&vec_of(&f, &[1, 0]));
        let l11 = Subspace::line(&vec_of(&f, &[1, 1]));
        let sorted = sort_facets(&[l11.clone(), l01.clone(), l10.clone()]).unwrap();
        assert_eq!(sorted, vec![l01.clone(), l10.clone(), l11.clone()]);
        // Already sorted input is a fixed point; singletons are fixed.
        assert_eq!(sort_facets(&sorted).unwrap(), sorted);
        assert_eq!(sort_facets(std::slice::from_ref(&l10)).unwrap(), vec![l10.clone()]);
        assert!(matches!(
            sort_facets(&[l01, Subspace::full(&f, 2)]),
            Err(OrderError::MixedDimensions { expected: 1, got: 2 })
        ));
    }

    #[test]
    fn custom_element_orders() {
        // GF(4) admits exactly two admissible element orders: 0,1,2,3 and
        // 0,1,3,2.  Both must induce total orders; they need not agree.
        let f = gf(4);
        let swapped = ElementOrder::from_sequence(4, &[0, 1, 3, 2]).unwrap();
        let v2 = vec_of(&f, &[2, 0]);
        let v3 = vec_of(&f, &[3, 0]);
        assert_eq!(vector_compare(&v2, &v3).unwrap(), Ordering::Less);
        assert_eq!(vector_compare_with(&swapped, &v2, &v3).unwrap(), Ordering::Greater);

        let lines = enumerate_grassmannian(&f, 2, 1).unwrap();
        let sorted = sort_facets_with(&swapped, &lines).unwrap();
        for pair in sorted.windows(2) {
            assert_eq!(
                subspace_compare_with(&swapped, &pair[0], &pair[1]).unwrap(),
                Ordering::Less
            );
        }

        assert!(ElementOrder::from_sequence(4, &[0, 2, 1, 3]).is_err());
        assert!(ElementOrder::from_sequence(4, &[0, 1, 2]).is_err());
        assert!(ElementOrder::from_sequence(4, &[0, 1, 2, 2]).is_err());
        assert!(matches!(
            vector_compare_with(&swapped, &vec_of(&gf(2), &[1]), &vec_of(&gf(2), &[0])),
            Err(OrderError::ElementOrderMismatch { .. })
        ));
    }
}
