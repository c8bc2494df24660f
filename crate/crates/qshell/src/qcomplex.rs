//! q-complexes and their shellings.
//!
//! A q-complex is a family of subspaces of F_q^n that is closed under
//! taking subspaces.  This module constructs them (from generators, as
//! q-spheres, or from explicit face lists), certifies shelling orders of
//! their facets, and computes the combinatorial data attached to a
//! shelling: restriction sets R_{i,j}, intervals I_i, and the interval
//! partition of the whole complex.  It also houses the pointwise
//! hypotheses used by the homology results — cone detection on punctured
//! complexes, the acyclicity hypothesis ∪_j R_{i,j} ≠ F_i \ {0}, and the
//! sphere link condition on Σ̊(F_i) ∩ Δ̊_{i−1}.
//!
//! Shelling positions are 1-based throughout: facets of an order are
//! F_1, ..., F_t.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use thiserror::Error;

use crate::gf::FieldError;
use crate::homology::Poset;
use crate::lattice::{LatticeError, SubspaceLattice};
use crate::linalg::{LinAlgError, Subspace, Vector};
use crate::order::vector_compare;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ComplexError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error("the operation needs a nonempty complex")]
    EmptyComplex,
    #[error("q-spheres need ambient dimension at least 1")]
    ZeroAmbient,
    #[error("face family is not downward closed: {face} is present but its subspace {missing} is not")]
    NotDownwardClosed { face: String, missing: String },
    #[error("the complex is not pure")]
    NotPure,
    #[error("a shelling order needs at least one facet")]
    EmptyOrder,
    #[error("facets of a shelling order must be equidimensional")]
    MixedFacetDimensions,
    #[error("duplicate facet {facet} in shelling order")]
    DuplicateFacet { facet: String },
    #[error("the order's facets are not a permutation of the complex's facets")]
    FacetMismatch,
    #[error("position {position} is out of range for an order of {len} facets")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("restriction sets need 1 <= j < i <= {len}, got i = {i}, j = {j}")]
    PairOutOfRange { i: usize, j: usize, len: usize },
    #[error("the order is not a shelling: no witness for the facet pair ({i}, {j})")]
    NotAShelling { i: usize, j: usize },
    #[error("interval identity \"{identity}\" fails at position {position}")]
    PartitionViolation { position: usize, identity: &'static str },
    #[error("the pivot vector must be nonzero")]
    ZeroPivot,
}

/// A downward-closed family of subspaces of F_q^n, materialized over a
/// [`SubspaceLattice`].  Faces and facets are kept in ascending id order,
/// which is (dimension, ≼)-sorted.
#[derive(Clone)]
pub struct QComplex {
    lattice: Arc<SubspaceLattice>,
    face_ids: Vec<u32>,
    is_face: Vec<bool>,
    facet_ids: Vec<u32>,
}

impl QComplex {
    fn from_bitmap(lattice: &Arc<SubspaceLattice>, is_face: Vec<bool>) -> QComplex {
        let face_ids: Vec<u32> = lattice.ids().filter(|&id| is_face[id as usize]).collect();
        let facet_ids = face_ids
            .iter()
            .copied()
            .filter(|&a| !face_ids.iter().any(|&b| b != a && lattice.le(a, b)))
            .collect();
        QComplex { lattice: Arc::clone(lattice), face_ids, is_face, facet_ids }
    }

    /// The smallest downward-closed family containing all generators.
    /// No generators means the empty complex.
    pub fn generate(
        lattice: &Arc<SubspaceLattice>,
        generators: &[Subspace],
    ) -> Result<QComplex, ComplexError> {
        let mut is_face = vec![false; lattice.len()];
        for g in generators {
            let gid = lattice.id_of(g)?;
            for id in lattice.ids() {
                if lattice.le(id, gid) {
                    is_face[id as usize] = true;
                }
            }
        }
        Ok(QComplex::from_bitmap(lattice, is_face))
    }

    /// Builds a complex from an explicit face list, verifying downward
    /// closure rather than repairing it.
    pub fn from_faces(
        lattice: &Arc<SubspaceLattice>,
        faces: &[Subspace],
    ) -> Result<QComplex, ComplexError> {
        let mut is_face = vec![false; lattice.len()];
        for f in faces {
            is_face[lattice.id_of(f)? as usize] = true;
        }
        for id in lattice.ids() {
            if !is_face[id as usize] {
                continue;
            }
            for below in lattice.ids_below(id) {
                if !is_face[below as usize] {
                    return Err(ComplexError::NotDownwardClosed {
                        face: lattice.subspace(id).to_string(),
                        missing: lattice.subspace(below).to_string(),
                    });
                }
            }
        }
        Ok(QComplex::from_bitmap(lattice, is_face))
    }

    /// The q-sphere on the lattice's ambient space: every subspace of
    /// F_q^n except the full space.
    pub fn q_sphere(lattice: &Arc<SubspaceLattice>) -> QComplex {
        let mut is_face = vec![true; lattice.len()];
        is_face[lattice.full_id() as usize] = false;
        QComplex::from_bitmap(lattice, is_face)
    }

    pub fn lattice(&self) -> &Arc<SubspaceLattice> {
        &self.lattice
    }

    pub fn ambient_dim(&self) -> usize {
        self.lattice.ambient_dim()
    }

    pub fn q(&self) -> u64 {
        self.lattice.spec().q()
    }

    /// Number of faces.
    pub fn len(&self) -> usize {
        self.face_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.face_ids.is_empty()
    }

    pub fn face_ids(&self) -> &[u32] {
        &self.face_ids
    }

    pub fn faces(&self) -> impl Iterator<Item = &Subspace> + '_ {
        self.face_ids.iter().map(|&id| self.lattice.subspace(id))
    }

    pub fn contains(&self, s: &Subspace) -> bool {
        self.lattice.id_of(s).map_or(false, |id| self.contains_id(id))
    }

    pub fn contains_id(&self, id: u32) -> bool {
        self.is_face[id as usize]
    }

    pub fn facet_ids(&self) -> &[u32] {
        &self.facet_ids
    }

    /// Inclusion-maximal faces, in (dimension, ≼) order.
    pub fn facets(&self) -> Vec<Subspace> {
        self.facet_ids.iter().map(|&id| self.lattice.subspace(id).clone()).collect()
    }

    pub fn is_pure(&self) -> bool {
        self.facet_ids
            .windows(2)
            .all(|w| self.lattice.dim_of(w[0]) == self.lattice.dim_of(w[1]))
    }

    pub fn dim(&self) -> Result<usize, ComplexError> {
        match self.facet_ids.last() {
            Some(&id) => Ok(self.lattice.dim_of(id)),
            None => Err(ComplexError::EmptyComplex),
        }
    }

    /// The nonzero faces.
    pub fn punctured_faces(&self) -> Vec<Subspace> {
        self.face_ids
            .iter()
            .filter(|&&id| id != self.lattice.zero_id())
            .map(|&id| self.lattice.subspace(id).clone())
            .collect()
    }

    /// The inclusion poset of the punctured complex Δ̊ = Δ \ {{0}}.
    pub fn puncture(&self) -> Poset {
        Poset::from_subspaces(&self.punctured_faces()).expect("complex faces form a poset")
    }

    /// Reduced homology of the punctured complex as a finite space.
    pub fn punctured_homology(&self) -> crate::homology::HomologyReport {
        crate::homology::finite_space_homology(&self.puncture())
    }

    /// Cone detection on the punctured complex; see [`cone_apex`].
    pub fn punctured_cone_apex(&self) -> Result<ConeApex, ComplexError> {
        cone_apex(&self.lattice, &self.punctured_faces())
    }
}

impl PartialEq for QComplex {
    /// Complexes over the same (q, n) compare by face set; the lattice
    /// enumeration is deterministic, so ids are comparable across
    /// instances.
    fn eq(&self, other: &QComplex) -> bool {
        self.lattice.spec().same_field(other.lattice.spec())
            && self.lattice.ambient_dim() == other.lattice.ambient_dim()
            && self.face_ids == other.face_ids
    }
}

impl std::fmt::Debug for QComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("QComplex")
            .field("q", &self.q())
            .field("ambient", &self.ambient_dim())
            .field("faces", &self.face_ids.len())
            .field("facets", &self.facet_ids.len())
            .finish()
    }
}

/// Convenience constructor: the q-sphere S_q^{n−1} over a fresh lattice.
pub fn q_sphere(n: usize, q: u64) -> Result<QComplex, ComplexError> {
    if n == 0 {
        return Err(ComplexError::ZeroAmbient);
    }
    let spec = crate::gf::FieldSpec::from_order(q)?;
    let lattice = SubspaceLattice::new(&spec, n)?;
    Ok(QComplex::q_sphere(&lattice))
}

/// A linear order F_1, ..., F_t on equidimensional, distinct subspaces.
#[derive(Clone)]
pub struct ShellingOrder {
    lattice: Arc<SubspaceLattice>,
    facets: Vec<u32>,
}

impl ShellingOrder {
    pub fn new(
        lattice: &Arc<SubspaceLattice>,
        facets: &[Subspace],
    ) -> Result<ShellingOrder, ComplexError> {
        if facets.is_empty() {
            return Err(ComplexError::EmptyOrder);
        }
        let mut ids = Vec::with_capacity(facets.len());
        for f in facets {
            ids.push(lattice.id_of(f)?);
        }
        ShellingOrder::from_ids(lattice, ids)
    }

    pub(crate) fn from_ids(
        lattice: &Arc<SubspaceLattice>,
        facets: Vec<u32>,
    ) -> Result<ShellingOrder, ComplexError> {
        if facets.is_empty() {
            return Err(ComplexError::EmptyOrder);
        }
        let dim = lattice.dim_of(facets[0]);
        let mut seen = HashSet::new();
        for &id in &facets {
            if lattice.dim_of(id) != dim {
                return Err(ComplexError::MixedFacetDimensions);
            }
            if !seen.insert(id) {
                return Err(ComplexError::DuplicateFacet {
                    facet: lattice.subspace(id).to_string(),
                });
            }
        }
        Ok(ShellingOrder { lattice: Arc::clone(lattice), facets })
    }

    pub fn lattice(&self) -> &Arc<SubspaceLattice> {
        &self.lattice
    }

    /// Number of facets t.
    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty orders
    }

    /// The facet F_i (1-based); panics when i is out of range.
    pub fn facet(&self, i: usize) -> &Subspace {
        self.lattice.subspace(self.facets[i - 1])
    }

    pub fn facet_dim(&self) -> usize {
        self.lattice.dim_of(self.facets[0])
    }

    pub(crate) fn facet_id(&self, i: usize) -> u32 {
        self.facets[i - 1]
    }

    pub fn facet_list(&self) -> Vec<Subspace> {
        self.facets.iter().map(|&id| self.lattice.subspace(id).clone()).collect()
    }

    /// The subcomplex Δ_i generated by the first i facets (1 ≤ i ≤ t).
    pub fn prefix_complex(&self, i: usize) -> Result<QComplex, ComplexError> {
        if i < 1 || i > self.facets.len() {
            return Err(ComplexError::PositionOutOfRange { position: i, len: self.facets.len() });
        }
        let generators: Vec<Subspace> =
            self.facets[..i].iter().map(|&id| self.lattice.subspace(id).clone()).collect();
        QComplex::generate(&self.lattice, &generators)
    }
}

impl std::fmt::Debug for ShellingOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.facets.iter().map(|&id| self.lattice.subspace(id))).finish()
    }
}

/// Outcome of a shelling check: a witness k for every pair (i, j) with
/// i < j, or the first pair without one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShellingCertificate {
    witnesses: BTreeMap<(usize, usize), usize>,
    violation: Option<(usize, usize)>,
}

impl ShellingCertificate {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }

    pub fn violation(&self) -> Option<(usize, usize)> {
        self.violation
    }

    pub fn witness(&self, i: usize, j: usize) -> Option<usize> {
        self.witnesses.get(&(i, j)).copied()
    }

    pub fn witnesses(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.witnesses
    }
}

/// Checks the shelling criterion: for every i < j some k < j has
/// F_i ∩ F_j ⊆ F_k ∩ F_j with dim(F_k ∩ F_j) = r − 1.  The recorded
/// witness is the least valid k.
pub fn is_shelling(
    complex: &QComplex,
    order: &ShellingOrder,
) -> Result<ShellingCertificate, ComplexError> {
    if !complex.is_pure() {
        return Err(ComplexError::NotPure);
    }
    if !complex.lattice.spec().same_field(order.lattice.spec())
        || complex.ambient_dim() != order.lattice.ambient_dim()
    {
        return Err(ComplexError::FacetMismatch);
    }
    let mut sorted = order.facets.clone();
    sorted.sort_unstable();
    if sorted != complex.facet_ids {
        return Err(ComplexError::FacetMismatch);
    }

    let lattice = &order.lattice;
    let t = order.len();
    let r = order.facet_dim();
    let mut witnesses = BTreeMap::new();
    for j in 2..=t {
        let fj = order.facet_id(j);
        for i in 1..j {
            let mij = lattice.meet(order.facet_id(i), fj);
            let witness = (1..j).find(|&k| {
                let mkj = lattice.meet(order.facet_id(k), fj);
                lattice.dim_of(mkj) + 1 == r && lattice.le(mij, mkj)
            });
            match witness {
                Some(k) => {
                    witnesses.insert((i, j), k);
                }
                None => {
                    return Ok(ShellingCertificate { witnesses, violation: Some((i, j)) });
                }
            }
        }
    }
    Ok(ShellingCertificate { witnesses, violation: None })
}

/// The facets of a pure complex sorted by ≼.  For q-matroid complexes
/// this order always passes [`is_shelling`].
pub fn shelling_via_order(complex: &QComplex) -> Result<ShellingOrder, ComplexError> {
    if !complex.is_pure() {
        return Err(ComplexError::NotPure);
    }
    // Facet ids ascend in (dimension, ≼); purity makes that plain ≼.
    ShellingOrder::from_ids(&complex.lattice, complex.facet_ids.clone())
}

/// Facets containing the pivot vector first (each block in ≼ order);
/// returns the order together with ℓ, the number of facets through the
/// pivot.  For the q-sphere this is the shelling behind the acyclicity
/// and sphere-link diagnostics, with ℓ = (q^{n−1} − 1)/(q − 1).
pub fn pivot_first_order(
    complex: &QComplex,
    pivot: &Vector,
) -> Result<(ShellingOrder, usize), ComplexError> {
    if pivot.is_zero() {
        return Err(ComplexError::ZeroPivot);
    }
    if complex.is_empty() {
        return Err(ComplexError::EmptyComplex);
    }
    let lattice = &complex.lattice;
    let pivot_line = lattice.line_id(pivot)?;
    let (with, without): (Vec<u32>, Vec<u32>) =
        complex.facet_ids.iter().partition(|&&f| lattice.le(pivot_line, f));
    let ell = with.len();
    let mut facets = with;
    facets.extend(without);
    Ok((ShellingOrder::from_ids(lattice, facets)?, ell))
}

/// The restriction set R_{i,j} = {x ∈ F_i : ⟨x⟩ ⊕ (F_i ∩ F_j) = F_i},
/// sorted by ≼.  Empty unless dim(F_i ∩ F_j) = r − 1, in which case it is
/// F_i minus the intersection.
pub fn restriction_set(
    order: &ShellingOrder,
    i: usize,
    j: usize,
) -> Result<Vec<Vector>, ComplexError> {
    let t = order.len();
    if j < 1 || i <= j || i > t {
        return Err(ComplexError::PairOutOfRange { i, j, len: t });
    }
    let lattice = &order.lattice;
    let meet_id = lattice.meet(order.facet_id(i), order.facet_id(j));
    if lattice.dim_of(meet_id) + 1 != order.facet_dim() {
        return Ok(Vec::new());
    }
    let meet = lattice.subspace(meet_id);
    let mut out: Vec<Vector> = order
        .facet(i)
        .vectors()
        .filter(|v| !meet.contains(v).expect("same field"))
        .collect();
    out.sort_by(|a, b| vector_compare(a, b).expect("same field"));
    Ok(out)
}

fn interval_ids(order: &ShellingOrder, i: usize) -> Vec<u32> {
    let lattice = &order.lattice;
    let fi = order.facet_id(i);
    let r = order.facet_dim();
    // A ∩ R_{i,j} ≠ ∅ (for A ⊆ F_i and R_{i,j} nonempty) is exactly
    // A ⊄ F_i ∩ F_j, so the scan stays inside the lattice tables.
    let blockers: Vec<u32> = (1..i)
        .map(|j| lattice.meet(order.facet_id(j), fi))
        .filter(|&m| lattice.dim_of(m) + 1 == r)
        .collect();
    lattice
        .ids_below(fi)
        .into_iter()
        .filter(|&a| blockers.iter().all(|&m| !lattice.le(a, m)))
        .collect()
}

/// The interval I_i: faces of ⟨F_i⟩ meeting every nonempty R_{i,j} with
/// j < i.  I_1 is all of ⟨F_1⟩, including the zero subspace.
pub fn interval(order: &ShellingOrder, i: usize) -> Result<Vec<Subspace>, ComplexError> {
    if i < 1 || i > order.len() {
        return Err(ComplexError::PositionOutOfRange { position: i, len: order.len() });
    }
    Ok(interval_ids(order, i).into_iter().map(|id| order.lattice.subspace(id).clone()).collect())
}

/// The intervals and restriction sets of a shelling.
#[derive(Debug, Clone)]
pub struct IntervalPartition {
    /// I_1, ..., I_t in shelling order, each in (dimension, ≼) order.
    pub intervals: Vec<Vec<Subspace>>,
    /// R_{i,j} for every pair 1 ≤ j < i ≤ t, each sorted by ≼.
    pub restriction_sets: BTreeMap<(usize, usize), Vec<Vector>>,
}

/// Certifies that the intervals of a shelling partition the complex:
/// Δ_i = I_i ⊔ Δ_{i−1} at every step and the I_i cover all faces.  The
/// first violated identity is reported as an error; a non-shelling order
/// is rejected up front.
pub fn verify_interval_partition(
    complex: &QComplex,
    order: &ShellingOrder,
) -> Result<IntervalPartition, ComplexError> {
    let certificate = is_shelling(complex, order)?;
    if let Some((i, j)) = certificate.violation() {
        return Err(ComplexError::NotAShelling { i, j });
    }
    let lattice = &order.lattice;
    let t = order.len();
    let mut in_prev = vec![false; lattice.len()];
    let mut intervals = Vec::with_capacity(t);
    for i in 1..=t {
        let ids = interval_ids(order, i);
        let mut is_interval = vec![false; lattice.len()];
        for &a in &ids {
            if in_prev[a as usize] {
                return Err(ComplexError::PartitionViolation {
                    position: i,
                    identity: "I_i ∩ Δ_{i−1} = ∅",
                });
            }
            is_interval[a as usize] = true;
        }
        for a in lattice.ids_below(order.facet_id(i)) {
            if !in_prev[a as usize] && !is_interval[a as usize] {
                return Err(ComplexError::PartitionViolation {
                    position: i,
                    identity: "Δ_i = I_i ∪ Δ_{i−1}",
                });
            }
            in_prev[a as usize] = true;
        }
        intervals.push(ids.into_iter().map(|id| lattice.subspace(id).clone()).collect());
    }
    for &face in &complex.face_ids {
        if !in_prev[face as usize] {
            return Err(ComplexError::PartitionViolation {
                position: t,
                identity: "the intervals cover Δ",
            });
        }
    }
    let mut restriction_sets = BTreeMap::new();
    for i in 2..=t {
        for j in 1..i {
            restriction_sets.insert((i, j), restriction_set(order, i, j)?);
        }
    }
    Ok(IntervalPartition { intervals, restriction_sets })
}

/// Result of cone detection on a family of faces.
#[derive(Debug, Clone, PartialEq)]
pub enum ConeApex {
    /// An apex contained in every facet, with the intersection-closure
    /// hypothesis verified — the family is a cone, hence contractible.
    Cone { apex: Subspace },
    /// An apex candidate exists, but some intersection of facets through
    /// a common face is not itself a face, so contractibility does not
    /// follow.
    CandidateWithoutHypothesis { apex: Subspace },
    NotACone,
}

fn meet_closure_is_member(
    lattice: &SubspaceLattice,
    member: &[bool],
    facets: &[u32],
    c: u32,
) -> bool {
    let mut set: Vec<u32> = facets.iter().copied().filter(|&f| lattice.le(c, f)).collect();
    let mut seen: HashSet<u32> = set.iter().copied().collect();
    let mut i = 0;
    while i < set.len() {
        for j in 0..i {
            let m = lattice.meet(set[i], set[j]);
            if seen.insert(m) {
                if !member[m as usize] {
                    return false;
                }
                set.push(m);
            }
        }
        i += 1;
    }
    true
}

/// Looks for a face contained in every facet of the (typically punctured,
/// not necessarily downward-closed) family.  When several qualify, the
/// one of least dimension and then least ≼ is returned.  The cone verdict
/// additionally requires the closure hypothesis: every intersection of
/// facets through a common face must itself be a face.  For punctured
/// downward-closed complexes the hypothesis holds automatically; it is
/// verified rather than assumed.
pub fn cone_apex(
    lattice: &Arc<SubspaceLattice>,
    faces: &[Subspace],
) -> Result<ConeApex, ComplexError> {
    if faces.is_empty() {
        return Err(ComplexError::EmptyComplex);
    }
    let mut ids = Vec::with_capacity(faces.len());
    for f in faces {
        ids.push(lattice.id_of(f)?);
    }
    ids.sort_unstable();
    ids.dedup();
    let mut member = vec![false; lattice.len()];
    for &id in &ids {
        member[id as usize] = true;
    }
    let facet_ids: Vec<u32> = ids
        .iter()
        .copied()
        .filter(|&a| !ids.iter().any(|&b| b != a && lattice.le(a, b)))
        .collect();
    let common = facet_ids.iter().copied().reduce(|x, y| lattice.meet(x, y)).unwrap();
    let Some(apex_id) = ids.iter().copied().find(|&a| lattice.le(a, common)) else {
        return Ok(ConeApex::NotACone);
    };
    let apex = lattice.subspace(apex_id).clone();
    for &c in &ids {
        if !meet_closure_is_member(lattice, &member, &facet_ids, c) {
            return Ok(ConeApex::CandidateWithoutHypothesis { apex });
        }
    }
    Ok(ConeApex::Cone { apex })
}

/// For each i in [2, ℓ]: does ∪_{j<i} R_{i,j} omit some nonzero vector of
/// F_i?  Returns the answers in order (empty for ℓ = 1).
pub fn acyclicity_hypothesis(
    order: &ShellingOrder,
    ell: usize,
) -> Result<Vec<bool>, ComplexError> {
    if ell < 1 || ell > order.len() {
        return Err(ComplexError::PositionOutOfRange { position: ell, len: order.len() });
    }
    let q = order.lattice.spec().q() as u128;
    let nonzero = q.pow(order.facet_dim() as u32) - 1;
    let mut out = Vec::with_capacity(ell.saturating_sub(1));
    for i in 2..=ell {
        let mut union: HashSet<Vec<u16>> = HashSet::new();
        for j in 1..i {
            for v in restriction_set(order, i, j)? {
                union.insert(v.raw().to_vec());
            }
        }
        out.push((union.len() as u128) < nonzero);
    }
    Ok(out)
}

/// Whether the faces of ⟨F_i⟩ lying in Δ_{i−1} are exactly all proper
/// nonzero subspaces of F_i (2 ≤ i ≤ t) — i.e. whether the i-th facet is
/// glued along a full punctured sphere.
pub fn sphere_link_check(order: &ShellingOrder, i: usize) -> Result<bool, ComplexError> {
    if i < 2 || i > order.len() {
        return Err(ComplexError::PositionOutOfRange { position: i, len: order.len() });
    }
    let lattice = &order.lattice;
    let fi = order.facet_id(i);
    for a in lattice.ids() {
        if a == lattice.zero_id() || a == fi || !lattice.le(a, fi) {
            continue;
        }
        if !(1..i).any(|j| lattice.le(a, order.facet_id(j))) {
            return Ok(false);
        }
    }
    Ok(true)
}
