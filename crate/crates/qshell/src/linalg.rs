//! Vectors, matrices and subspaces of F_q^n.
//!
//! Subspaces are stored canonically: the unique basis in reduced row echelon
//! form, with zero rows dropped.  Two `Subspace` values are equal exactly
//! when they denote the same subspace, so they can serve as map keys, and
//! every operation that returns a subspace returns it canonicalized.  The
//! zero subspace is the empty basis.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use thiserror::Error;

use crate::gf::{FieldElement, FieldError, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("expected {want} entries, got {got}")]
    LengthMismatch { want: usize, got: usize },
    #[error("a matrix needs at least one row; use Subspace::zero for the zero subspace")]
    EmptyMatrix,
}

/// A vector in F_q^n.
#[derive(Clone)]
pub struct Vector {
    spec: Arc<FieldSpec>,
    entries: Vec<u16>,
}

impl Vector {
    pub fn new(spec: &Arc<FieldSpec>, entries: &[u64]) -> Result<Vector, LinAlgError> {
        let q = spec.q();
        for &e in entries {
            if e >= q {
                return Err(FieldError::ReprOutOfRange { repr: e, q }.into());
            }
        }
        Ok(Vector {
            spec: Arc::clone(spec),
            entries: entries.iter().map(|&e| e as u16).collect(),
        })
    }

    pub fn zero(spec: &Arc<FieldSpec>, n: usize) -> Vector {
        Vector { spec: Arc::clone(spec), entries: vec![0; n] }
    }

    /// Standard basis vector with a 1 in coordinate `i` (0-based).
    pub fn unit(spec: &Arc<FieldSpec>, n: usize, i: usize) -> Vector {
        assert!(i < n, "unit vector index {} out of range for ambient {}", i, n);
        let mut entries = vec![0; n];
        entries[i] = 1;
        Vector { spec: Arc::clone(spec), entries }
    }

    pub(crate) fn from_raw(spec: &Arc<FieldSpec>, entries: Vec<u16>) -> Vector {
        Vector { spec: Arc::clone(spec), entries }
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn entry(&self, i: usize) -> FieldElement {
        self.spec.element(self.entries[i] as u64).expect("stored reprs are in range")
    }

    /// Integer representatives of the entries, in coordinate order.
    pub fn reprs(&self) -> Vec<u64> {
        self.entries.iter().map(|&e| e as u64).collect()
    }

    pub(crate) fn raw(&self) -> &[u16] {
        &self.entries
    }

    fn check(&self, rhs: &Vector) -> Result<(), LinAlgError> {
        if !self.spec.same_field(&rhs.spec) {
            return Err(FieldError::SpecMismatch.into());
        }
        if self.len() != rhs.len() {
            return Err(LinAlgError::AmbientMismatch { left: self.len(), right: rhs.len() });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Vector) -> Result<Vector, LinAlgError> {
        self.check(rhs)?;
        let entries =
            self.entries.iter().zip(&rhs.entries).map(|(&a, &b)| self.spec.add(a, b)).collect();
        Ok(Vector { spec: Arc::clone(&self.spec), entries })
    }

    pub fn sub(&self, rhs: &Vector) -> Result<Vector, LinAlgError> {
        self.check(rhs)?;
        let entries =
            self.entries.iter().zip(&rhs.entries).map(|(&a, &b)| self.spec.sub(a, b)).collect();
        Ok(Vector { spec: Arc::clone(&self.spec), entries })
    }

    pub fn scale(&self, c: &FieldElement) -> Result<Vector, LinAlgError> {
        if !self.spec.same_field(c.spec()) {
            return Err(FieldError::SpecMismatch.into());
        }
        Ok(self.scale_raw(c.raw()))
    }

    pub(crate) fn scale_raw(&self, c: u16) -> Vector {
        let entries = self.entries.iter().map(|&a| self.spec.mul(a, c)).collect();
        Vector { spec: Arc::clone(&self.spec), entries }
    }
}

impl PartialEq for Vector {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries && self.spec.same_field(&other.spec)
    }
}

impl Eq for Vector {}

impl Hash for Vector {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.spec.q().hash(state);
        self.entries.hash(state);
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", e)?;
        }
        write!(f, ")")
    }
}

/// The outcome of row reduction: the reduced matrix, its rank and the pivot
/// columns (0-based, strictly increasing).
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// A dense matrix over F_q, row-major.
#[derive(Clone)]
pub struct Matrix {
    spec: Arc<FieldSpec>,
    nrows: usize,
    ncols: usize,
    entries: Vec<u16>,
}

impl Matrix {
    pub fn zero(spec: &Arc<FieldSpec>, nrows: usize, ncols: usize) -> Matrix {
        Matrix { spec: Arc::clone(spec), nrows, ncols, entries: vec![0; nrows * ncols] }
    }

    pub fn from_rows(rows: &[Vector]) -> Result<Matrix, LinAlgError> {
        let first = rows.first().ok_or(LinAlgError::EmptyMatrix)?;
        let ncols = first.len();
        let spec = Arc::clone(first.spec());
        let mut entries = Vec::with_capacity(rows.len() * ncols);
        for row in rows {
            if !row.spec().same_field(&spec) {
                return Err(FieldError::SpecMismatch.into());
            }
            if row.len() != ncols {
                return Err(LinAlgError::LengthMismatch { want: ncols, got: row.len() });
            }
            entries.extend_from_slice(row.raw());
        }
        Ok(Matrix { spec, nrows: rows.len(), ncols, entries })
    }

    pub fn from_reprs(spec: &Arc<FieldSpec>, rows: &[Vec<u64>]) -> Result<Matrix, LinAlgError> {
        let vectors: Vec<Vector> =
            rows.iter().map(|r| Vector::new(spec, r)).collect::<Result<_, _>>()?;
        Matrix::from_rows(&vectors)
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    #[inline]
    fn at(&self, r: usize, c: usize) -> u16 {
        self.entries[r * self.ncols + c]
    }

    pub fn entry(&self, r: usize, c: usize) -> FieldElement {
        assert!(r < self.nrows && c < self.ncols, "matrix index out of range");
        self.spec.element(self.at(r, c) as u64).expect("stored reprs are in range")
    }

    pub fn set(&mut self, r: usize, c: usize, value: u64) -> Result<(), LinAlgError> {
        assert!(r < self.nrows && c < self.ncols, "matrix index out of range");
        if value >= self.spec.q() {
            return Err(FieldError::ReprOutOfRange { repr: value, q: self.spec.q() }.into());
        }
        self.entries[r * self.ncols + c] = value as u16;
        Ok(())
    }

    pub fn row(&self, r: usize) -> Vector {
        assert!(r < self.nrows, "row index out of range");
        Vector {
            spec: Arc::clone(&self.spec),
            entries: self.entries[r * self.ncols..(r + 1) * self.ncols].to_vec(),
        }
    }

    pub fn rows(&self) -> Vec<Vector> {
        (0..self.nrows).map(|r| self.row(r)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut entries = vec![0u16; self.nrows * self.ncols];
        for r in 0..self.nrows {
            for c in 0..self.ncols {
                entries[c * self.nrows + r] = self.at(r, c);
            }
        }
        Matrix { spec: Arc::clone(&self.spec), nrows: self.ncols, ncols: self.nrows, entries }
    }

    /// Reduced row echelon form by Gauss–Jordan elimination: pivots are 1,
    /// pivot columns are cleared above and below, pivot columns strictly
    /// increase down the rows, zero rows sink to the bottom.
    pub fn rref(&self) -> Rref {
        let f = &self.spec;
        let ncols = self.ncols;
        let mut rows: Vec<Vec<u16>> =
            (0..self.nrows).map(|r| self.entries[r * ncols..(r + 1) * ncols].to_vec()).collect();
        let mut pivots = Vec::new();
        let mut next = 0usize;
        for col in 0..ncols {
            let Some(found) = (next..rows.len()).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(next, found);
            let scale = f.inv(rows[next][col]).expect("pivot entry is nonzero");
            for c in col..ncols {
                rows[next][c] = f.mul(rows[next][c], scale);
            }
            for r in 0..rows.len() {
                if r != next && rows[r][col] != 0 {
                    let factor = rows[r][col];
                    for c in col..ncols {
                        let delta = f.mul(factor, rows[next][c]);
                        rows[r][c] = f.sub(rows[r][c], delta);
                    }
                }
            }
            pivots.push(col);
            next += 1;
            if next == rows.len() {
                break;
            }
        }
        let rank = next;
        let entries: Vec<u16> = rows.into_iter().flatten().collect();
        Rref {
            matrix: Matrix { spec: Arc::clone(&self.spec), nrows: self.nrows, ncols, entries },
            rank,
            pivots,
        }
    }

    /// A basis of the right kernel {x : Mx = 0}, one vector per free column
    /// of the reduced form.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let Rref { matrix: r, rank, pivots } = self.rref();
        let mut is_pivot = vec![false; self.ncols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.ncols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![0u16; self.ncols];
            x[free] = 1;
            for (i, &p) in pivots.iter().enumerate().take(rank) {
                x[p] = self.spec.neg(r.at(i, free));
            }
            basis.push(Vector { spec: Arc::clone(&self.spec), entries: x });
        }
        basis
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over GF({})", self.nrows, self.ncols, self.spec.q())?;
        for r in 0..self.nrows {
            write!(f, "  [")?;
            for c in 0..self.ncols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// A subspace of F_q^n in canonical form: the reduced-row-echelon basis with
/// zero rows dropped.  The zero subspace has an empty basis.
#[derive(Clone)]
pub struct Subspace {
    spec: Arc<FieldSpec>,
    ambient: usize,
    dim: usize,
    rows: Vec<u16>, // dim * ambient, row-major, RREF
}

impl Subspace {
    pub fn zero(spec: &Arc<FieldSpec>, n: usize) -> Subspace {
        Subspace { spec: Arc::clone(spec), ambient: n, dim: 0, rows: Vec::new() }
    }

    pub fn full(spec: &Arc<FieldSpec>, n: usize) -> Subspace {
        let mut rows = vec![0u16; n * n];
        for i in 0..n {
            rows[i * n + i] = 1;
        }
        Subspace { spec: Arc::clone(spec), ambient: n, dim: n, rows }
    }

    /// Span of a list of generators (not necessarily independent; the empty
    /// list gives the zero subspace).
    pub fn from_generators(
        spec: &Arc<FieldSpec>,
        n: usize,
        generators: &[Vector],
    ) -> Result<Subspace, LinAlgError> {
        if generators.is_empty() {
            return Ok(Subspace::zero(spec, n));
        }
        for g in generators {
            if !g.spec().same_field(spec) {
                return Err(FieldError::SpecMismatch.into());
            }
            if g.len() != n {
                return Err(LinAlgError::AmbientMismatch { left: n, right: g.len() });
            }
        }
        Ok(Subspace::from_matrix(&Matrix::from_rows(generators)?))
    }

    /// Row space of a matrix.
    pub fn from_matrix(m: &Matrix) -> Subspace {
        let Rref { matrix, rank, .. } = m.rref();
        let rows = matrix.entries[..rank * m.ncols].to_vec();
        Subspace { spec: Arc::clone(&m.spec), ambient: m.ncols, dim: rank, rows }
    }

    /// Span of a single vector; the zero vector gives the zero subspace.
    pub fn line(v: &Vector) -> Subspace {
        Subspace::from_generators(v.spec(), v.len(), std::slice::from_ref(v))
            .expect("a vector is consistent with itself")
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    /// Canonical basis rows, top to bottom (pivot columns increasing).
    pub fn basis(&self) -> Vec<Vector> {
        (0..self.dim).map(|i| self.basis_row(i)).collect()
    }

    pub(crate) fn basis_row(&self, i: usize) -> Vector {
        Vector {
            spec: Arc::clone(&self.spec),
            entries: self.rows[i * self.ambient..(i + 1) * self.ambient].to_vec(),
        }
    }

    pub(crate) fn row_raw(&self, i: usize) -> &[u16] {
        &self.rows[i * self.ambient..(i + 1) * self.ambient]
    }

    pub(crate) fn raw(&self) -> &[u16] {
        &self.rows
    }

    /// Pivot columns of the canonical basis (0-based, strictly increasing).
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.dim)
            .map(|i| self.row_raw(i).iter().position(|&e| e != 0).expect("basis rows are nonzero"))
            .collect()
    }

    fn check_vector(&self, v: &Vector) -> Result<(), LinAlgError> {
        if !self.spec.same_field(v.spec()) {
            return Err(FieldError::SpecMismatch.into());
        }
        if v.len() != self.ambient {
            return Err(LinAlgError::AmbientMismatch { left: self.ambient, right: v.len() });
        }
        Ok(())
    }

    fn check_subspace(&self, other: &Subspace) -> Result<(), LinAlgError> {
        if !self.spec.same_field(&other.spec) {
            return Err(FieldError::SpecMismatch.into());
        }
        if self.ambient != other.ambient {
            return Err(LinAlgError::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        Ok(())
    }

    /// Membership test by reduction against the canonical basis.
    pub fn contains(&self, v: &Vector) -> Result<bool, LinAlgError> {
        self.check_vector(v)?;
        Ok(self.reduce_raw(v.raw()).iter().all(|&e| e == 0))
    }

    /// Reduce a raw coordinate vector modulo this subspace: subtract the
    /// multiple of each basis row that clears the pivot coordinate.
    pub(crate) fn reduce_raw(&self, v: &[u16]) -> Vec<u16> {
        let f = &self.spec;
        let mut w = v.to_vec();
        for i in 0..self.dim {
            let row = self.row_raw(i);
            let p = row.iter().position(|&e| e != 0).expect("basis rows are nonzero");
            if w[p] != 0 {
                let c = w[p];
                for j in p..self.ambient {
                    let delta = f.mul(c, row[j]);
                    w[j] = f.sub(w[j], delta);
                }
            }
        }
        w
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, LinAlgError> {
        self.check_subspace(other)?;
        if self.dim > other.dim {
            return Ok(false);
        }
        Ok((0..self.dim).all(|i| other.reduce_raw(self.row_raw(i)).iter().all(|&e| e == 0)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check_subspace(other)?;
        if self.dim == 0 {
            return Ok(other.clone());
        }
        if other.dim == 0 {
            return Ok(self.clone());
        }
        let mut rows = self.rows.clone();
        rows.extend_from_slice(&other.rows);
        let stacked = Matrix {
            spec: Arc::clone(&self.spec),
            nrows: self.dim + other.dim,
            ncols: self.ambient,
            entries: rows,
        };
        Ok(Subspace::from_matrix(&stacked))
    }

    /// Intersection via the kernel method: a left-kernel vector (α, β) of the
    /// stacked basis matrix [U; V] satisfies αU = −βV, and those products
    /// generate U ∩ V.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check_subspace(other)?;
        if self.dim == 0 || other.dim == 0 {
            return Ok(Subspace::zero(&self.spec, self.ambient));
        }
        let mut rows = self.rows.clone();
        rows.extend_from_slice(&other.rows);
        let stacked = Matrix {
            spec: Arc::clone(&self.spec),
            nrows: self.dim + other.dim,
            ncols: self.ambient,
            entries: rows,
        };
        let kernel = stacked.transpose().kernel_basis();
        let f = &self.spec;
        let generators: Vec<Vector> = kernel
            .iter()
            .map(|coeffs| {
                let mut v = vec![0u16; self.ambient];
                for (i, &c) in coeffs.raw()[..self.dim].iter().enumerate() {
                    if c != 0 {
                        let row = self.row_raw(i);
                        for j in 0..self.ambient {
                            v[j] = f.add(v[j], f.mul(c, row[j]));
                        }
                    }
                }
                Vector { spec: Arc::clone(f), entries: v }
            })
            .collect();
        let result = Subspace::from_generators(&self.spec, self.ambient, &generators)?;
        debug_assert_eq!(
            result.dim + self.sum(other)?.dim,
            self.dim + other.dim,
            "dimension formula"
        );
        Ok(result)
    }

    /// Does this subspace decompose as U ⊕ V?
    pub fn is_direct_sum_of(&self, u: &Subspace, v: &Subspace) -> Result<bool, LinAlgError> {
        self.check_subspace(u)?;
        self.check_subspace(v)?;
        Ok(u.intersect(v)?.dim == 0 && &u.sum(v)? == self)
    }

    /// All q^dim vectors of the subspace, zero included, in odometer order
    /// over the canonical basis coefficients.
    pub fn vectors(&self) -> SubspaceVectors<'_> {
        SubspaceVectors { space: self, coeffs: vec![0; self.dim], done: false }
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient
            && self.rows == other.rows
            && self.spec.same_field(&other.spec)
    }
}

impl Eq for Subspace {}

impl Hash for Subspace {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.spec.q().hash(state);
        self.ambient.hash(state);
        self.rows.hash(state);
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dim == 0 {
            return write!(f, "<0>");
        }
        write!(f, "<")?;
        for i in 0..self.dim {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.basis_row(i))?;
        }
        write!(f, ">")
    }
}

/// Iterator over all vectors of a subspace.
pub struct SubspaceVectors<'a> {
    space: &'a Subspace,
    coeffs: Vec<u16>,
    done: bool,
}

impl Iterator for SubspaceVectors<'_> {
    type Item = Vector;

    fn next(&mut self) -> Option<Vector> {
        if self.done {
            return None;
        }
        let f = &self.space.spec;
        let mut v = vec![0u16; self.space.ambient];
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                let row = self.space.row_raw(i);
                for j in 0..self.space.ambient {
                    v[j] = f.add(v[j], f.mul(c, row[j]));
                }
            }
        }
        // Advance the coefficient odometer.
        let q = f.q() as u16;
        let mut i = 0;
        loop {
            if i == self.coeffs.len() {
                self.done = true;
                break;
            }
            self.coeffs[i] += 1;
            if self.coeffs[i] < q {
                break;
            }
            self.coeffs[i] = 0;
            i += 1;
        }
        Some(Vector { spec: Arc::clone(f), entries: v })
    }
}
