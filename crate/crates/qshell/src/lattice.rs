//! A materialized subspace lattice: Σ(E) with integer ids.
//!
//! Axiom verification, shelling checks and interval partitions all quantify
//! over "every subspace" or "every pair of subspaces".  Doing that with
//! subspace values means re-running eliminations constantly; doing it over a
//! frozen id table turns the inner loops into integer lookups.  The lattice
//! enumerates Σ(E) once (ids sorted by dimension, then ≼) and, when the
//! element count permits, precomputes dense join/meet tables so that sum,
//! intersection and containment cost O(1) afterwards.

use std::collections::HashMap;
use std::ops::Range;
use std::sync::Arc;

use num_bigint::BigUint;
use thiserror::Error;

use crate::enumerate::{enumerate_all_subspaces, total_subspace_count, EnumerationError};
use crate::gf::FieldSpec;
use crate::linalg::{LinAlgError, Subspace, Vector};

/// Default ceiling on |Σ(E)| for lattice materialization, mirrored by the
/// CLI's `--max-subspaces` flag and the `QSHELL_MAX_SUBSPACES` env var.
pub const DEFAULT_MAX_SUBSPACES: usize = 100_000;

/// Dense join/meet tables are built only up to this many elements (the
/// tables are quadratic); larger lattices fall back to computing each
/// operation on demand.
const TABLE_LIMIT: usize = 2048;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error("Σ(E) for q={q}, n={n} holds {required} subspaces, above the cap of {cap} (raise --max-subspaces / QSHELL_MAX_SUBSPACES)")]
    TooManySubspaces { q: u64, n: usize, required: BigUint, cap: usize },
    #[error("subspace does not belong to this lattice (wrong field or ambient)")]
    ForeignSubspace,
}

pub struct SubspaceLattice {
    spec: Arc<FieldSpec>,
    ambient: usize,
    elements: Vec<Subspace>,
    index: HashMap<Vec<u16>, u32>,
    dims: Vec<u8>,
    dim_start: Vec<u32>, // dim_start[d]..dim_start[d+1] spans the ids of dimension d
    join_t: Option<Vec<u32>>,
    meet_t: Option<Vec<u32>>,
}

impl SubspaceLattice {
    pub fn new(spec: &Arc<FieldSpec>, n: usize) -> Result<Arc<SubspaceLattice>, LatticeError> {
        SubspaceLattice::with_cap(spec, n, DEFAULT_MAX_SUBSPACES)
    }

    pub fn with_cap(
        spec: &Arc<FieldSpec>,
        n: usize,
        cap: usize,
    ) -> Result<Arc<SubspaceLattice>, LatticeError> {
        let required = total_subspace_count(n, spec.q())?;
        if required > BigUint::from(cap) {
            return Err(LatticeError::TooManySubspaces { q: spec.q(), n, required, cap });
        }
        let elements = enumerate_all_subspaces(spec, n)?;
        let mut index = HashMap::with_capacity(elements.len());
        let mut dims = Vec::with_capacity(elements.len());
        let mut dim_start = vec![0u32; n + 2];
        for (id, s) in elements.iter().enumerate() {
            index.insert(s.raw().to_vec(), id as u32);
            dims.push(s.dim() as u8);
            dim_start[s.dim() + 1] += 1;
        }
        for d in 0..=n {
            dim_start[d + 1] += dim_start[d];
        }
        let mut lattice = SubspaceLattice {
            spec: Arc::clone(spec),
            ambient: n,
            elements,
            index,
            dims,
            dim_start,
            join_t: None,
            meet_t: None,
        };
        if lattice.elements.len() <= TABLE_LIMIT {
            lattice.build_tables();
        }
        Ok(Arc::new(lattice))
    }

    fn build_tables(&mut self) {
        let n = self.elements.len();
        let mut join = vec![0u32; n * n];
        let mut meet = vec![0u32; n * n];
        for a in 0..n {
            join[a * n + a] = a as u32;
            meet[a * n + a] = a as u32;
            for b in a + 1..n {
                let ja = &self.elements[a];
                let jb = &self.elements[b];
                let j = self.lookup(&ja.sum(jb).expect("same ambient"));
                let m = self.lookup(&ja.intersect(jb).expect("same ambient"));
                join[a * n + b] = j;
                join[b * n + a] = j;
                meet[a * n + b] = m;
                meet[b * n + a] = m;
            }
        }
        self.join_t = Some(join);
        self.meet_t = Some(meet);
    }

    fn lookup(&self, s: &Subspace) -> u32 {
        *self.index.get(s.raw()).expect("every subspace of the ambient is enumerated")
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the zero subspace is always present
    }

    pub fn ids(&self) -> Range<u32> {
        0..self.elements.len() as u32
    }

    pub fn subspace(&self, id: u32) -> &Subspace {
        &self.elements[id as usize]
    }

    pub fn dim_of(&self, id: u32) -> usize {
        self.dims[id as usize] as usize
    }

    /// Ids of all subspaces of a given dimension (contiguous by layout).
    pub fn ids_of_dim(&self, d: usize) -> Range<u32> {
        if d > self.ambient {
            return 0..0;
        }
        self.dim_start[d]..self.dim_start[d + 1]
    }

    pub fn zero_id(&self) -> u32 {
        0
    }

    pub fn full_id(&self) -> u32 {
        self.elements.len() as u32 - 1
    }

    pub fn id_of(&self, s: &Subspace) -> Result<u32, LatticeError> {
        if !s.spec().same_field(&self.spec) || s.ambient_dim() != self.ambient {
            return Err(LatticeError::ForeignSubspace);
        }
        Ok(self.lookup(s))
    }

    /// Id of the span of a single vector (the zero id for the zero vector).
    pub fn line_id(&self, v: &Vector) -> Result<u32, LatticeError> {
        if !v.spec().same_field(&self.spec) || v.len() != self.ambient {
            return Err(LatticeError::ForeignSubspace);
        }
        Ok(self.lookup(&Subspace::line(v)))
    }

    pub fn join(&self, a: u32, b: u32) -> u32 {
        match &self.join_t {
            Some(t) => t[a as usize * self.elements.len() + b as usize],
            None => self.lookup(
                &self.elements[a as usize]
                    .sum(&self.elements[b as usize])
                    .expect("same ambient"),
            ),
        }
    }

    pub fn meet(&self, a: u32, b: u32) -> u32 {
        match &self.meet_t {
            Some(t) => t[a as usize * self.elements.len() + b as usize],
            None => self.lookup(
                &self.elements[a as usize]
                    .intersect(&self.elements[b as usize])
                    .expect("same ambient"),
            ),
        }
    }

    /// Containment a ⊆ b.
    pub fn le(&self, a: u32, b: u32) -> bool {
        self.meet(a, b) == a
    }

    /// Ids of every subspace contained in `id`, ascending (so ordered by
    /// dimension, then ≼).
    pub fn ids_below(&self, id: u32) -> Vec<u32> {
        self.ids().filter(|&a| self.le(a, id)).collect()
    }
}

impl std::fmt::Debug for SubspaceLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SubspaceLattice")
            .field("q", &self.spec.q())
            .field("ambient", &self.ambient)
            .field("len", &self.elements.len())
            .field("tables", &self.join_t.is_some())
            .finish()
    }
}
