//! Reduced integral homology of punctured q-complexes.
//!
//! The homology of a q-complex is understood as the homology of its
//! punctured face poset viewed as a finite topological space.  A finite
//! T0 space is weak-homotopy equivalent to the order complex of its
//! specialization poset (McCord), so the computable route is simplicial:
//! enumerate all chains of the poset, build integer boundary matrices with
//! the usual alternating signs, and read Betti numbers and torsion off
//! Smith normal forms computed with arbitrary-precision integers.
//!
//! Conventions: the chain complex is augmented, so degree −1 exists and the
//! empty space has a single unit of reduced homology there.  Vertices of a
//! chain are listed in increasing poset order and face i of a simplex is
//! dropped with sign (−1)^i.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::linalg::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("relation pair ({a}, {b}) is out of range for a poset on {len} elements")]
    RelationOutOfRange { a: usize, b: usize, len: usize },
    #[error("relation is not a strict partial order: element {element} lies below itself after transitive closure")]
    NotAPartialOrder { element: usize },
    #[error("poset elements must share one field and ambient dimension")]
    MixedAmbient,
    #[error("poset elements must be distinct (duplicate at index {index})")]
    DuplicateElement { index: usize },
}

/// A finite poset given by a strict order relation, stored transitively
/// closed.  Irreflexivity and antisymmetry are verified on construction:
/// any cycle in the input produces a diagonal entry after closure.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    len: usize,
    below: Vec<bool>,
    labels: Vec<String>,
}

impl Poset {
    /// Builds a poset on `len` elements from strict relations `a < b`.
    /// The relation is closed transitively, then checked.
    pub fn new(len: usize, relations: &[(usize, usize)]) -> Result<Poset, HomologyError> {
        let labels = (0..len).map(|i| i.to_string()).collect();
        Poset::with_labels(len, relations, labels)
    }

    fn with_labels(
        len: usize,
        relations: &[(usize, usize)],
        labels: Vec<String>,
    ) -> Result<Poset, HomologyError> {
        let mut below = vec![false; len * len];
        for &(a, b) in relations {
            if a >= len || b >= len {
                return Err(HomologyError::RelationOutOfRange { a, b, len });
            }
            below[a * len + b] = true;
        }
        for k in 0..len {
            for i in 0..len {
                if below[i * len + k] {
                    for j in 0..len {
                        if below[k * len + j] {
                            below[i * len + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..len {
            if below[i * len + i] {
                return Err(HomologyError::NotAPartialOrder { element: i });
            }
        }
        Ok(Poset { len, below, labels })
    }

    /// The inclusion poset of a family of distinct subspaces.
    pub fn from_subspaces(faces: &[Subspace]) -> Result<Poset, HomologyError> {
        for (i, f) in faces.iter().enumerate() {
            if !f.spec().same_field(faces[0].spec()) || f.ambient_dim() != faces[0].ambient_dim()
            {
                return Err(HomologyError::MixedAmbient);
            }
            if faces[..i].contains(f) {
                return Err(HomologyError::DuplicateElement { index: i });
            }
        }
        let mut relations = Vec::new();
        for (i, a) in faces.iter().enumerate() {
            for (j, b) in faces.iter().enumerate() {
                if i != j && a.is_subspace_of(b).map_err(|_| HomologyError::MixedAmbient)? {
                    relations.push((i, j));
                }
            }
        }
        let labels = faces.iter().map(|f| f.to_string()).collect();
        Poset::with_labels(faces.len(), &relations, labels)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Strict comparison a < b.
    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.below[a * self.len + b]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<(usize, usize)> = (0..self.len)
            .flat_map(|a| (0..self.len).filter(move |&b| self.lt(a, b)).map(move |b| (a, b)))
            .collect();
        f.debug_struct("Poset").field("len", &self.len).field("lt", &pairs).finish()
    }
}

/// All chains of a poset, grouped by dimension: a p-simplex is a chain of
/// p + 1 elements, its vertices listed in increasing poset order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderComplex {
    simplices: Vec<Vec<Vec<u32>>>,
}

impl OrderComplex {
    /// None for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    pub fn simplex_count(&self, p: usize) -> usize {
        self.simplices.get(p).map_or(0, Vec::len)
    }

    /// Simplex counts n_0, n_1, ..., n_dim.
    pub fn counts(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn simplices(&self, p: usize) -> &[Vec<u32>] {
        self.simplices.get(p).map_or(&[], Vec::as_slice)
    }
}

/// Enumerates every nonempty chain of the poset by depth-first extension;
/// per dimension the chains come out in lexicographic order.
pub fn order_complex(poset: &Poset) -> OrderComplex {
    fn extend(poset: &Poset, chain: &mut Vec<u32>, simplices: &mut Vec<Vec<Vec<u32>>>) {
        if simplices.len() < chain.len() {
            simplices.push(Vec::new());
        }
        simplices[chain.len() - 1].push(chain.clone());
        let last = *chain.last().unwrap() as usize;
        for w in 0..poset.len() {
            if poset.lt(last, w) {
                chain.push(w as u32);
                extend(poset, chain, simplices);
                chain.pop();
            }
        }
    }

    let mut simplices = Vec::new();
    let mut chain = Vec::new();
    for v in 0..poset.len() {
        chain.push(v as u32);
        extend(poset, &mut chain, &mut simplices);
        chain.pop();
    }
    OrderComplex { simplices }
}

/// A dense matrix over Z.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    nrows: usize,
    ncols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zero(nrows: usize, ncols: usize) -> IntegerMatrix {
        IntegerMatrix { nrows, ncols, entries: vec![BigInt::zero(); nrows * ncols] }
    }

    /// Convenience constructor; an empty row list gives the 0 × 0 matrix.
    pub fn from_rows(rows: &[Vec<i64>]) -> IntegerMatrix {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = IntegerMatrix::zero(nrows, ncols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged rows");
            for (c, &v) in row.iter().enumerate() {
                m.entries[r * ncols + c] = BigInt::from(v);
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn entry(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.ncols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: impl Into<BigInt>) {
        self.entries[r * self.ncols + c] = value.into();
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.ncols, other.nrows, "dimension mismatch");
        let mut out = IntegerMatrix::zero(self.nrows, other.ncols);
        for r in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.entry(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.ncols {
                    let add = a * other.entry(k, c);
                    out.entries[r * other.ncols + c] += add;
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegerMatrix {}x{} [", self.nrows, self.ncols)?;
        for r in 0..self.nrows {
            let row: Vec<String> = (0..self.ncols).map(|c| self.entry(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// The signed boundary operator ∂_p of the augmented chain complex.
/// ∂_0 is the 1 × n_0 augmentation (all ones); for p ≥ 1 the matrix maps
/// p-simplices (columns) to (p−1)-simplices (rows).
pub fn boundary_matrix(complex: &OrderComplex, p: usize) -> IntegerMatrix {
    if p == 0 {
        let mut m = IntegerMatrix::zero(1, complex.simplex_count(0));
        for c in 0..m.ncols {
            m.set(0, c, 1);
        }
        return m;
    }
    let rows = complex.simplices(p - 1);
    let cols = complex.simplices(p);
    let mut m = IntegerMatrix::zero(rows.len(), cols.len());
    for (ci, chain) in cols.iter().enumerate() {
        for drop in 0..chain.len() {
            let mut face = chain.clone();
            face.remove(drop);
            let ri = rows.binary_search(&face).expect("faces of a chain are chains");
            m.set(ri, ci, if drop % 2 == 0 { 1 } else { -1 });
        }
    }
    m
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithNormalForm {
    pub rank: usize,
    /// d_1 | d_2 | ... | d_rank, all positive.
    pub invariant_factors: Vec<BigInt>,
}

/// Classical Smith reduction: repeatedly move a minimal-magnitude nonzero
/// entry to the pivot and reduce its row and column with truncated
/// division; remainders force a strictly smaller pivot, so the loop
/// terminates.  A final gcd/lcm sweep restores the divisibility chain.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithNormalForm {
    let (nr, nc) = (m.nrows, m.ncols);
    let mut a: Vec<Vec<BigInt>> =
        (0..nr).map(|r| (0..nc).map(|c| m.entry(r, c).clone()).collect()).collect();
    let mut diag: Vec<BigInt> = Vec::new();
    let mut t = 0;
    'pivot: while t < nr.min(nc) {
        let mut best: Option<(usize, usize)> = None;
        for r in t..nr {
            for c in t..nc {
                if !a[r][c].is_zero()
                    && best.map_or(true, |(br, bc)| a[r][c].magnitude() < a[br][bc].magnitude())
                {
                    best = Some((r, c));
                }
            }
        }
        let Some((br, bc)) = best else { break };
        a.swap(t, br);
        if bc != t {
            for row in a.iter_mut() {
                row.swap(t, bc);
            }
        }
        let mut dirty = false;
        for r in t + 1..nr {
            if a[r][t].is_zero() {
                continue;
            }
            let q = &a[r][t] / &a[t][t];
            if !q.is_zero() {
                for c in t..nc {
                    let sub = &a[t][c] * &q;
                    a[r][c] -= sub;
                }
            }
            dirty |= !a[r][t].is_zero();
        }
        for c in t + 1..nc {
            if a[t][c].is_zero() {
                continue;
            }
            let q = &a[t][c] / &a[t][t];
            if !q.is_zero() {
                for r in t..nr {
                    let sub = &a[r][t] * &q;
                    a[r][c] -= sub;
                }
            }
            dirty |= !a[t][c].is_zero();
        }
        if dirty {
            continue 'pivot;
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            if (&diag[j] % &diag[i]).is_zero() {
                continue;
            }
            let g = diag[i].gcd(&diag[j]);
            let l = &diag[i] / &g * &diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    }
    SmithNormalForm { rank: diag.len(), invariant_factors: diag }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeHomology {
    pub p: i64,
    pub betti: u64,
    pub torsion: Vec<BigInt>,
}

/// Reduced homology per degree, starting at p = −1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyReport {
    degrees: Vec<DegreeHomology>,
}

impl HomologyReport {
    pub fn degrees(&self) -> &[DegreeHomology] {
        &self.degrees
    }

    pub fn betti(&self, p: i64) -> u64 {
        self.degrees.iter().find(|d| d.p == p).map_or(0, |d| d.betti)
    }

    pub fn torsion(&self, p: i64) -> &[BigInt] {
        self.degrees.iter().find(|d| d.p == p).map_or(&[], |d| d.torsion.as_slice())
    }

    /// Zero in every degree, including −1 (so: nonempty and acyclic).
    pub fn is_acyclic(&self) -> bool {
        self.degrees.iter().all(|d| d.betti == 0 && d.torsion.is_empty())
    }

    /// Degree-by-degree equality, treating absent degrees as zero.
    pub fn matches(&self, other: &HomologyReport) -> bool {
        let hi = self
            .degrees
            .iter()
            .chain(other.degrees.iter())
            .map(|d| d.p)
            .max()
            .unwrap_or(-1);
        (-1..=hi).all(|p| self.betti(p) == other.betti(p) && self.torsion(p) == other.torsion(p))
    }

    /// Drops trailing all-zero degrees (for serialized reports).
    pub fn truncated(&self) -> HomologyReport {
        let mut degrees = self.degrees.clone();
        while degrees.last().map_or(false, |d| d.betti == 0 && d.torsion.is_empty()) {
            degrees.pop();
        }
        HomologyReport { degrees }
    }
}

impl fmt::Display for HomologyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.degrees {
            let mut parts = Vec::new();
            match d.betti {
                0 => {}
                1 => parts.push("Z".to_string()),
                b => parts.push(format!("Z^{b}")),
            }
            for t in &d.torsion {
                parts.push(format!("Z/{t}"));
            }
            if parts.is_empty() {
                parts.push("0".to_string());
            }
            writeln!(f, "H~_{} = {}", d.p, parts.join(" + "))?;
        }
        Ok(())
    }
}

/// Reduced homology of the order complex from the augmented chain complex:
/// betti_p = n_p − rank ∂_p − rank ∂_{p+1}, torsion_p = invariant factors
/// of ∂_{p+1} exceeding 1.
pub fn reduced_homology(complex: &OrderComplex) -> HomologyReport {
    let counts = complex.counts();
    let top = counts.len();
    let snfs: Vec<SmithNormalForm> =
        (0..=top).map(|b| smith_normal_form(&boundary_matrix(complex, b))).collect();
    let mut degrees = Vec::with_capacity(top + 1);
    for d in -1..=(top as i64 - 1) {
        let n_d = if d == -1 { 1 } else { counts[d as usize] };
        let rank_d = if d == -1 { 0 } else { snfs[d as usize].rank };
        let out = &snfs[(d + 1) as usize];
        let torsion: Vec<BigInt> =
            out.invariant_factors.iter().filter(|f| **f > BigInt::one()).cloned().collect();
        degrees.push(DegreeHomology { p: d, betti: (n_d - rank_d - out.rank) as u64, torsion });
    }
    HomologyReport { degrees }
}

/// Homology of a punctured complex, i.e. of its inclusion poset as a
/// finite space: reduced simplicial homology of the order complex.
pub fn finite_space_homology(punctured: &Poset) -> HomologyReport {
    reduced_homology(&order_complex(punctured))
}

/// The closed form for punctured q-spheres: free of rank q^{n(n−1)/2}
/// concentrated in degree n − 2, no torsion.  (For n = 1 the sphere is the
/// single zero subspace, its puncture is empty, and the rank sits in
/// degree −1.)
pub fn expected_sphere_homology(n: usize, q: u64) -> HomologyReport {
    assert!(n >= 1, "the ambient dimension must be at least 1");
    let c = BigUint::from(q).pow((n * (n - 1) / 2) as u32);
    let c = u64::try_from(&c).expect("Betti number exceeds u64");
    let degrees = (-1..=(n as i64 - 2))
        .map(|p| DegreeHomology {
            p,
            betti: if p == n as i64 - 2 { c } else { 0 },
            torsion: Vec::new(),
        })
        .collect();
    HomologyReport { degrees }
}

/// Consistency check: the reduced Euler characteristic computed from
/// simplex counts (−1 + Σ (−1)^p n_p) must equal the alternating sum of
/// Betti numbers.  Torsion is invisible to both sides.
pub fn euler_check(complex: &OrderComplex, report: &HomologyReport) -> bool {
    let mut lhs: i64 = -1;
    for (p, c) in complex.counts().iter().enumerate() {
        lhs += if p % 2 == 0 { *c as i64 } else { -(*c as i64) };
    }
    let mut rhs: i64 = 0;
    for d in report.degrees() {
        let term = d.betti as i64;
        rhs += if d.p.rem_euclid(2) == 0 { term } else { -term };
    }
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::gaussian_binomial;
    use crate::gf::FieldSpec;
    use crate::lattice::SubspaceLattice;
    use crate::qcomplex::QComplex;
    use num_bigint::BigUint;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn punctured_sphere(n: usize, q: u64) -> Poset {
        let spec = FieldSpec::from_order(q).unwrap();
        let lattice = SubspaceLattice::new(&spec, n).unwrap();
        QComplex::q_sphere(&lattice).puncture()
    }

    #[test]
    fn poset_construction_validates() {
        let p = Poset::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.lt(0, 2), "closure must add 0 < 2");
        assert!(!p.lt(2, 0));
        assert_eq!(
            Poset::new(2, &[(0, 1), (1, 0)]).unwrap_err(),
            HomologyError::NotAPartialOrder { element: 0 }
        );
        assert_eq!(
            Poset::new(2, &[(0, 2)]).unwrap_err(),
            HomologyError::RelationOutOfRange { a: 0, b: 2, len: 2 }
        );
    }

    #[test]
    fn order_complex_of_figure_poset() {
        // The punctured sphere in F_2^3: 7 lines, 7 planes, 3 lines per
        // plane; so 14 vertices, 21 edges, and no longer chains.
        let complex = order_complex(&punctured_sphere(3, 2));
        assert_eq!(complex.counts(), vec![14, 21]);
        assert_eq!(complex.dim(), Some(1));
    }

    #[test]
    fn order_complex_of_antichain() {
        let complex = order_complex(&Poset::new(3, &[]).unwrap());
        assert_eq!(complex.counts(), vec![3]);
    }

    #[test]
    fn order_complex_counts_match_flag_counting() {
        // Chains in the subspace poset of F_q^n are flags; their counts
        // factor through Gaussian binomials, which gives an oracle that is
        // independent of the DFS enumeration.
        let flags = |q: u64, dims: &[usize], n: usize| -> BigUint {
            let mut total = BigUint::from(1u32);
            let mut outer = n;
            for w in dims.windows(2).rev() {
                total *= gaussian_binomial(outer as i64, w[1] as i64, q).unwrap();
                outer = w[1];
            }
            total *= gaussian_binomial(outer as i64, dims[0] as i64, q).unwrap();
            total
        };
        let complex = order_complex(&punctured_sphere(4, 2));
        let expected_vertices = flags(2, &[1], 4) + flags(2, &[2], 4) + flags(2, &[3], 4);
        let expected_edges = flags(2, &[1, 2], 4) + flags(2, &[1, 3], 4) + flags(2, &[2, 3], 4);
        let expected_triangles = flags(2, &[1, 2, 3], 4);
        assert_eq!(BigUint::from(complex.simplex_count(0)), expected_vertices);
        assert_eq!(BigUint::from(complex.simplex_count(1)), expected_edges);
        assert_eq!(BigUint::from(complex.simplex_count(2)), expected_triangles);
        assert_eq!(complex.counts(), vec![65, 315, 315]);
    }

    #[test]
    fn boundary_of_single_edge() {
        let complex = order_complex(&Poset::new(2, &[(0, 1)]).unwrap());
        let d1 = boundary_matrix(&complex, 1);
        assert_eq!((d1.nrows(), d1.ncols()), (2, 1));
        assert_eq!(*d1.entry(0, 0), BigInt::from(-1));
        assert_eq!(*d1.entry(1, 0), BigInt::from(1));
        let d0 = boundary_matrix(&complex, 0);
        assert!(d0.mul(&d1).is_zero());
    }

    #[test]
    fn boundary_squares_to_zero() {
        for poset in [
            punctured_sphere(3, 2),
            punctured_sphere(4, 2),
            Poset::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap(),
        ] {
            let complex = order_complex(&poset);
            let top = complex.counts().len();
            for p in 0..top {
                let lower = boundary_matrix(&complex, p);
                let upper = boundary_matrix(&complex, p + 1);
                assert!(lower.mul(&upper).is_zero(), "del_del != 0 at p = {p}");
            }
        }
    }

    #[test]
    fn smith_normal_form_frozen_examples() {
        let snf = smith_normal_form(&IntegerMatrix::from_rows(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(snf.rank, 2);
        assert_eq!(snf.invariant_factors, vec![BigInt::from(1), BigInt::from(6)]);

        let snf = smith_normal_form(&IntegerMatrix::from_rows(&[vec![1, 0], vec![0, 0]]));
        assert_eq!(snf.rank, 1);
        assert_eq!(snf.invariant_factors, vec![BigInt::from(1)]);

        let snf = smith_normal_form(&IntegerMatrix::zero(3, 2));
        assert_eq!(snf.rank, 0);
        assert!(snf.invariant_factors.is_empty());
    }

    fn det(m: &[Vec<BigInt>]) -> BigInt {
        if m.is_empty() {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        for (c, lead) in m[0].iter().enumerate() {
            if lead.is_zero() {
                continue;
            }
            let minor: Vec<Vec<BigInt>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter().enumerate().filter(|(cc, _)| *cc != c).map(|(_, v)| v.clone()).collect()
                })
                .collect();
            let term = lead * det(&minor);
            total += if c % 2 == 0 { term } else { -term };
        }
        total
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![Vec::new()];
        }
        if n < k {
            return Vec::new();
        }
        let mut out = subsets(n - 1, k);
        for mut s in subsets(n - 1, k - 1) {
            s.push(n - 1);
            out.push(s);
        }
        out
    }

    /// gcd of all k × k minors; the product d_1 ··· d_k must equal it.
    fn minor_gcd(m: &IntegerMatrix, k: usize) -> BigInt {
        let mut g = BigInt::zero();
        for rows in subsets(m.nrows(), k) {
            for cols in subsets(m.ncols(), k) {
                let sub: Vec<Vec<BigInt>> = rows
                    .iter()
                    .map(|&r| cols.iter().map(|&c| m.entry(r, c).clone()).collect())
                    .collect();
                g = g.gcd(&det(&sub));
            }
        }
        g
    }

    #[test]
    fn smith_normal_form_matches_minor_gcd_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(90125);
        for _ in 0..40 {
            let nr = rng.gen_range(1..=4);
            let nc = rng.gen_range(1..=4);
            let mut m = IntegerMatrix::zero(nr, nc);
            for r in 0..nr {
                for c in 0..nc {
                    m.set(r, c, rng.gen_range(-6i64..=6));
                }
            }
            let snf = smith_normal_form(&m);
            let mut product = BigInt::one();
            for (i, d) in snf.invariant_factors.iter().enumerate() {
                assert!(d.is_positive());
                if i > 0 {
                    assert!((d % &snf.invariant_factors[i - 1]).is_zero(), "not a chain");
                }
                product *= d;
                assert_eq!(product, minor_gcd(&m, i + 1), "minor gcd mismatch\n{m:?}");
            }
            if snf.rank < nr.min(nc) {
                assert!(minor_gcd(&m, snf.rank + 1).is_zero(), "rank too small\n{m:?}");
            }
        }
    }

    #[test]
    fn reduced_homology_small_examples() {
        // Three incomparable points: one extra connected component.
        let three = finite_space_homology(&Poset::new(3, &[]).unwrap());
        assert_eq!(three.betti(-1), 0);
        assert_eq!(three.betti(0), 2);
        assert!(three.torsion(0).is_empty());

        // A two-element chain is a cone, so everything vanishes.
        let chain = finite_space_homology(&Poset::new(2, &[(0, 1)]).unwrap());
        assert!(chain.is_acyclic());

        // The empty space keeps a single unit in degree −1.
        let empty = finite_space_homology(&Poset::new(0, &[]).unwrap());
        assert_eq!(empty.betti(-1), 1);
        assert!(!empty.is_acyclic());
    }

    #[test]
    fn punctured_sphere_homology_in_rank_three() {
        let report = finite_space_homology(&punctured_sphere(3, 2));
        assert_eq!(report.betti(1), 8);
        assert_eq!(report.betti(0), 0);
        assert_eq!(report.betti(-1), 0);
        assert!(report.degrees().iter().all(|d| d.torsion.is_empty()));
        assert!(report.matches(&expected_sphere_homology(3, 2)));
    }

    #[test]
    fn expected_sphere_homology_closed_form() {
        assert_eq!(expected_sphere_homology(3, 2).betti(1), 8);
        assert_eq!(expected_sphere_homology(1, 5).betti(-1), 1);
        assert_eq!(expected_sphere_homology(4, 2).betti(2), 64);
        assert_eq!(expected_sphere_homology(3, 3).betti(1), 27);
    }

    #[test]
    fn euler_consistency() {
        let poset = punctured_sphere(3, 2);
        let complex = order_complex(&poset);
        let report = reduced_homology(&complex);
        // 14 − 21 = −7, so the reduced characteristic is −8 = −betti_1.
        assert!(euler_check(&complex, &report));
        assert_eq!(report.betti(1), 8);

        let empty = order_complex(&Poset::new(0, &[]).unwrap());
        assert!(euler_check(&empty, &reduced_homology(&empty)));
    }

    #[test]
    fn truncation_drops_zero_tail() {
        let report = finite_space_homology(&Poset::new(2, &[(0, 1)]).unwrap());
        assert_eq!(report.degrees().len(), 3);
        assert!(report.truncated().degrees().is_empty());
        let sphere = expected_sphere_homology(3, 2);
        assert_eq!(sphere.truncated().degrees().len(), 3);
    }
}
