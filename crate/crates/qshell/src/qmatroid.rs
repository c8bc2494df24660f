//! q-matroids as materialized rank oracles.
//!
//! A q-matroid on E = F_q^n is a rank function ρ: Σ(E) → N obeying the
//! bound, monotonicity and submodularity axioms.  This module stores ρ as
//! a full table over a [`SubspaceLattice`], verifies the axioms in their
//! rank, independence and basis formulations (exhaustively — violations
//! are reported as data, not errors), derives the independence complex
//! and the basis family, and implements the constructive dual basis
//! exchange: given bases B1 ≠ B2 and y ∈ B2 \ B1, it produces U and
//! x ∈ B1 \ B2 with B1 ∩ B2 ⊆ U, B1 = U ⊕ ⟨x⟩ and U ⊕ ⟨y⟩ again a basis.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::gf::{FieldError, FieldSpec};
use crate::lattice::{LatticeError, SubspaceLattice};
use crate::linalg::{LinAlgError, Subspace, Vector};
use crate::order::vector_compare;
use crate::qcomplex::{ComplexError, QComplex};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MatroidError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("a uniform matroid needs 1 <= k <= n, got k = {k} with n = {n}")]
    InvalidUniformRank { k: usize, n: usize },
    #[error("rank value {rank} does not fit the oracle's storage")]
    RankTooLarge { rank: u64 },
    #[error("rank table misses {missing} (and possibly further subspaces)")]
    IncompleteTable { missing: String },
    #[error("rank table lists {subspace} more than once")]
    DuplicateTableEntry { subspace: String },
    #[error("the input fails q-matroid axiom {axiom}")]
    AxiomFailure { axiom: &'static str },
    #[error("{subspace} is not a basis of the matroid")]
    NotABasis { subspace: String },
    #[error("dual exchange needs two distinct bases")]
    SameBasis,
    #[error("the exchange vector must lie in the second basis but not in the first")]
    BadExchangeVector,
    #[error("no exchange witness exists; the rank oracle is not a q-matroid")]
    NoExchangeWitness,
    #[error("dual exchange violated a postcondition; the rank oracle is not a q-matroid")]
    ExchangeCheckFailed,
    #[error("a basis family must be nonempty")]
    EmptyFamily,
    #[error("a basis family must be equidimensional")]
    MixedDimensions,
    #[error("duplicate member {subspace} in family")]
    DuplicateMember { subspace: String },
}

/// A rank function materialized over every subspace of F_q^n.
///
/// Construction only enforces storage bounds; whether the table is an
/// actual q-matroid is decided by [`RankOracle::verify_rank_axioms`].
#[derive(Clone)]
pub struct RankOracle {
    lattice: Arc<SubspaceLattice>,
    ranks: Vec<u8>,
}

impl RankOracle {
    /// The uniform q-matroid U_q(k, n): ρ(A) = min(dim A, k), 1 ≤ k ≤ n.
    pub fn uniform(lattice: &Arc<SubspaceLattice>, k: usize) -> Result<RankOracle, MatroidError> {
        let n = lattice.ambient_dim();
        if k < 1 || k > n {
            return Err(MatroidError::InvalidUniformRank { k, n });
        }
        RankOracle::from_fn(lattice, |s| s.dim().min(k) as u64)
    }

    /// Builds the table by evaluating a function on every subspace.
    pub fn from_fn(
        lattice: &Arc<SubspaceLattice>,
        mut rank: impl FnMut(&Subspace) -> u64,
    ) -> Result<RankOracle, MatroidError> {
        let mut ranks = Vec::with_capacity(lattice.len());
        for id in lattice.ids() {
            let value = rank(lattice.subspace(id));
            let stored =
                u8::try_from(value).map_err(|_| MatroidError::RankTooLarge { rank: value })?;
            ranks.push(stored);
        }
        Ok(RankOracle { lattice: Arc::clone(lattice), ranks })
    }

    /// Builds the table from explicit (subspace, rank) pairs, which must
    /// cover Σ(E) exactly once.  Out-of-range rank *values* are left to
    /// the (r1) check, so that broken tables can be loaded and examined.
    pub fn from_table(
        lattice: &Arc<SubspaceLattice>,
        entries: &[(Subspace, u64)],
    ) -> Result<RankOracle, MatroidError> {
        let mut ranks: Vec<Option<u8>> = vec![None; lattice.len()];
        for (subspace, value) in entries {
            let id = lattice.id_of(subspace)? as usize;
            if ranks[id].is_some() {
                return Err(MatroidError::DuplicateTableEntry { subspace: subspace.to_string() });
            }
            let stored =
                u8::try_from(*value).map_err(|_| MatroidError::RankTooLarge { rank: *value })?;
            ranks[id] = Some(stored);
        }
        if let Some(hole) = ranks.iter().position(Option::is_none) {
            return Err(MatroidError::IncompleteTable {
                missing: lattice.subspace(hole as u32).to_string(),
            });
        }
        let ranks = ranks.into_iter().map(Option::unwrap).collect();
        Ok(RankOracle { lattice: Arc::clone(lattice), ranks })
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

    pub fn rank_id(&self, id: u32) -> u64 {
        self.ranks[id as usize] as u64
    }

    pub fn rank(&self, a: &Subspace) -> Result<u64, MatroidError> {
        Ok(self.rank_id(self.lattice.id_of(a)?))
    }

    /// ρ(E), the rank of the whole matroid.
    pub fn full_rank(&self) -> u64 {
        self.rank_id(self.lattice.full_id())
    }

    pub fn is_independent_id(&self, id: u32) -> bool {
        self.rank_id(id) == self.lattice.dim_of(id) as u64
    }

    pub fn is_basis_id(&self, id: u32) -> bool {
        self.is_independent_id(id) && self.rank_id(id) == self.full_rank()
    }

    pub fn is_basis(&self, a: &Subspace) -> Result<bool, MatroidError> {
        Ok(self.is_basis_id(self.lattice.id_of(a)?))
    }

    /// The table rows in ascending id order, for serialization.
    pub fn entries(&self) -> impl Iterator<Item = (&Subspace, u64)> + '_ {
        self.lattice.ids().map(|id| (self.lattice.subspace(id), self.rank_id(id)))
    }

    /// Exhaustively checks (r1) 0 ≤ ρ(A) ≤ dim A, (r2) monotonicity and
    /// (r3) submodularity, recording every violation.
    pub fn verify_rank_axioms(&self) -> RankAxiomReport {
        let lattice = &self.lattice;
        let mut report = RankAxiomReport::default();
        for a in lattice.ids() {
            if self.rank_id(a) > lattice.dim_of(a) as u64 {
                report.bound_violations.push(lattice.subspace(a).clone());
            }
        }
        for a in lattice.ids() {
            for b in lattice.ids() {
                if a != b && lattice.le(a, b) && self.rank_id(a) > self.rank_id(b) {
                    report
                        .monotonicity_violations
                        .push((lattice.subspace(a).clone(), lattice.subspace(b).clone()));
                }
            }
        }
        for a in lattice.ids() {
            for b in lattice.ids() {
                if b < a {
                    continue;
                }
                let sum = self.rank_id(lattice.join(a, b)) + self.rank_id(lattice.meet(a, b));
                if sum > self.rank_id(a) + self.rank_id(b) {
                    report
                        .submodularity_violations
                        .push((lattice.subspace(a).clone(), lattice.subspace(b).clone()));
                }
            }
        }
        report
    }

    /// The q-complex of independent subspaces {A : ρ(A) = dim A}.
    /// Requires the rank axioms to hold.
    pub fn independent_spaces(&self) -> Result<QComplex, MatroidError> {
        self.require_axioms()?;
        let faces: Vec<Subspace> = self
            .lattice
            .ids()
            .filter(|&id| self.is_independent_id(id))
            .map(|id| self.lattice.subspace(id).clone())
            .collect();
        Ok(QComplex::from_faces(&self.lattice, &faces)?)
    }

    /// The bases: independent subspaces of dimension ρ(E).
    pub fn bases(&self) -> Result<BasisFamily, MatroidError> {
        self.require_axioms()?;
        let ids: Vec<u32> = self.lattice.ids().filter(|&id| self.is_basis_id(id)).collect();
        BasisFamily::from_ids(&self.lattice, ids)
    }

    fn require_axioms(&self) -> Result<(), MatroidError> {
        match self.verify_rank_axioms().first_failing() {
            None => Ok(()),
            Some(axiom) => Err(MatroidError::AxiomFailure { axiom }),
        }
    }
}

impl PartialEq for RankOracle {
    fn eq(&self, other: &RankOracle) -> bool {
        self.lattice.spec().same_field(other.lattice.spec())
            && self.lattice.ambient_dim() == other.lattice.ambient_dim()
            && self.ranks == other.ranks
    }
}

impl fmt::Debug for RankOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RankOracle")
            .field("q", &self.q())
            .field("ambient", &self.ambient_dim())
            .field("full_rank", &self.full_rank())
            .finish()
    }
}

/// The uniform q-matroid U_q(k, n) over a fresh lattice.
pub fn uniform_matroid(k: usize, n: usize, q: u64) -> Result<RankOracle, MatroidError> {
    let spec = FieldSpec::from_order(q)?;
    let lattice = SubspaceLattice::new(&spec, n)?;
    RankOracle::uniform(&lattice, k)
}

fn ok_or_count(f: &mut fmt::Formatter<'_>, violations: usize) -> fmt::Result {
    if violations == 0 {
        write!(f, "ok")
    } else {
        write!(f, "{violations} violation(s)")
    }
}

/// Every violation of the rank axioms, by axiom.
#[derive(Debug, Clone, Default)]
pub struct RankAxiomReport {
    /// (r1): subspaces with ρ(A) outside [0, dim A].
    pub bound_violations: Vec<Subspace>,
    /// (r2): pairs A ⊂ B with ρ(A) > ρ(B).
    pub monotonicity_violations: Vec<(Subspace, Subspace)>,
    /// (r3): pairs with ρ(A+B) + ρ(A∩B) > ρ(A) + ρ(B).
    pub submodularity_violations: Vec<(Subspace, Subspace)>,
}

impl RankAxiomReport {
    pub fn passed(&self) -> bool {
        self.first_failing().is_none()
    }

    pub fn first_failing(&self) -> Option<&'static str> {
        if !self.bound_violations.is_empty() {
            Some("(r1)")
        } else if !self.monotonicity_violations.is_empty() {
            Some("(r2)")
        } else if !self.submodularity_violations.is_empty() {
            Some("(r3)")
        } else {
            None
        }
    }
}

impl fmt::Display for RankAxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(r1) bounds: ")?;
        ok_or_count(f, self.bound_violations.len())?;
        write!(f, "\n(r2) monotonicity: ")?;
        ok_or_count(f, self.monotonicity_violations.len())?;
        write!(f, "\n(r3) submodularity: ")?;
        ok_or_count(f, self.submodularity_violations.len())
    }
}

/// A nonempty, equidimensional, duplicate-free family of subspaces — the
/// shape the bases of a q-matroid always have.
#[derive(Clone)]
pub struct BasisFamily {
    lattice: Arc<SubspaceLattice>,
    ids: Vec<u32>,
    dim: usize,
}

impl BasisFamily {
    pub fn new(
        lattice: &Arc<SubspaceLattice>,
        members: &[Subspace],
    ) -> Result<BasisFamily, MatroidError> {
        let mut ids = Vec::with_capacity(members.len());
        for member in members {
            let id = lattice.id_of(member)?;
            if ids.contains(&id) {
                return Err(MatroidError::DuplicateMember { subspace: member.to_string() });
            }
            ids.push(id);
        }
        ids.sort_unstable();
        BasisFamily::from_ids(lattice, ids)
    }

    fn from_ids(lattice: &Arc<SubspaceLattice>, ids: Vec<u32>) -> Result<BasisFamily, MatroidError> {
        let Some(&first) = ids.first() else {
            return Err(MatroidError::EmptyFamily);
        };
        let dim = lattice.dim_of(first);
        if ids.iter().any(|&id| lattice.dim_of(id) != dim) {
            return Err(MatroidError::MixedDimensions);
        }
        Ok(BasisFamily { lattice: Arc::clone(lattice), ids, dim })
    }

    pub fn lattice(&self) -> &Arc<SubspaceLattice> {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty families
    }

    /// Common dimension of all members.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn iter(&self) -> impl Iterator<Item = &Subspace> + '_ {
        self.ids.iter().map(|&id| self.lattice.subspace(id))
    }

    pub fn list(&self) -> Vec<Subspace> {
        self.iter().cloned().collect()
    }

    pub fn contains(&self, s: &Subspace) -> bool {
        self.lattice.id_of(s).map_or(false, |id| self.ids.binary_search(&id).is_ok())
    }
}

impl fmt::Debug for BasisFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.iter()).finish()
    }
}

/// Violations of the independence axioms (i1)–(i4), by axiom.
#[derive(Debug, Clone, Default)]
pub struct IndependenceReport {
    /// (i1): set when the family is empty.
    pub empty_family: bool,
    /// (i2): pairs (A, B) with A ⊆ B, B in the family, A missing.
    pub closure_violations: Vec<(Subspace, Subspace)>,
    /// (i3): member pairs (A, B), dim A > dim B, with no x ∈ A \ B such
    /// that B + ⟨x⟩ is a member.
    pub augmentation_violations: Vec<(Subspace, Subspace)>,
    /// (i4): ambient pairs (A, B) for which some maximal members I ⊆ A,
    /// J ⊆ B admit no maximal member K ⊆ A + B with K ⊆ I + J.
    pub maximality_violations: Vec<(Subspace, Subspace)>,
}

impl IndependenceReport {
    pub fn i1_holds(&self) -> bool {
        !self.empty_family
    }

    pub fn i2_holds(&self) -> bool {
        self.closure_violations.is_empty()
    }

    pub fn i3_holds(&self) -> bool {
        self.augmentation_violations.is_empty()
    }

    pub fn i4_holds(&self) -> bool {
        self.maximality_violations.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.i1_holds() && self.i2_holds() && self.i3_holds() && self.i4_holds()
    }

    pub fn first_failing(&self) -> Option<&'static str> {
        if !self.i1_holds() {
            Some("(i1)")
        } else if !self.i2_holds() {
            Some("(i2)")
        } else if !self.i3_holds() {
            Some("(i3)")
        } else if !self.i4_holds() {
            Some("(i4)")
        } else {
            None
        }
    }
}

impl fmt::Display for IndependenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(i1) nonempty: {}", if self.empty_family { "violated" } else { "ok" })?;
        write!(f, "\n(i2) downward closure: ")?;
        ok_or_count(f, self.closure_violations.len())?;
        write!(f, "\n(i3) augmentation: ")?;
        ok_or_count(f, self.augmentation_violations.len())?;
        write!(f, "\n(i4) maximal covers: ")?;
        ok_or_count(f, self.maximality_violations.len())
    }
}

fn family_ids(
    lattice: &Arc<SubspaceLattice>,
    family: &[Subspace],
) -> Result<Vec<u32>, MatroidError> {
    let mut ids = Vec::with_capacity(family.len());
    for member in family {
        ids.push(lattice.id_of(member)?);
    }
    ids.sort_unstable();
    ids.dedup();
    Ok(ids)
}

fn maximal_among(lattice: &SubspaceLattice, ids: &[u32]) -> Vec<u32> {
    ids.iter()
        .copied()
        .filter(|&a| !ids.iter().any(|&b| b != a && lattice.le(a, b)))
        .collect()
}

/// For every lattice element x, the maximal members of the family lying
/// inside x.
fn maximal_members_below(lattice: &SubspaceLattice, members: &[u32]) -> Vec<Vec<u32>> {
    lattice
        .ids()
        .map(|x| {
            let below: Vec<u32> =
                members.iter().copied().filter(|&i| lattice.le(i, x)).collect();
            maximal_among(lattice, &below)
        })
        .collect()
}

/// Exhaustively checks the independence axioms on an arbitrary family of
/// subspaces of the lattice's ambient space.
pub fn verify_independence_axioms(
    lattice: &Arc<SubspaceLattice>,
    family: &[Subspace],
) -> Result<IndependenceReport, MatroidError> {
    let ids = family_ids(lattice, family)?;
    let mut is_member = vec![false; lattice.len()];
    for &id in &ids {
        is_member[id as usize] = true;
    }
    let mut report = IndependenceReport { empty_family: ids.is_empty(), ..Default::default() };

    for &b in &ids {
        for a in lattice.ids_below(b) {
            if !is_member[a as usize] {
                report
                    .closure_violations
                    .push((lattice.subspace(a).clone(), lattice.subspace(b).clone()));
            }
        }
    }

    let lines = lattice.ids_of_dim(1);
    for &a in &ids {
        for &b in &ids {
            if lattice.dim_of(a) <= lattice.dim_of(b) {
                continue;
            }
            let augmented = lines.clone().any(|l| {
                lattice.le(l, a) && !lattice.le(l, b) && is_member[lattice.join(b, l) as usize]
            });
            if !augmented {
                report
                    .augmentation_violations
                    .push((lattice.subspace(a).clone(), lattice.subspace(b).clone()));
            }
        }
    }

    let maximal = maximal_members_below(lattice, &ids);
    for a in lattice.ids() {
        'pair: for b in lattice.ids() {
            if b < a {
                continue;
            }
            let sum_ab = lattice.join(a, b);
            let covers = &maximal[sum_ab as usize];
            for &i in &maximal[a as usize] {
                for &j in &maximal[b as usize] {
                    let span = lattice.join(i, j);
                    if !covers.iter().any(|&k| lattice.le(k, span)) {
                        report
                            .maximality_violations
                            .push((lattice.subspace(a).clone(), lattice.subspace(b).clone()));
                        continue 'pair;
                    }
                }
            }
        }
    }
    Ok(report)
}

/// The rank function ρ(A) = max{dim B : B in the family, B ⊆ A} of a
/// family that passes the independence axioms.
pub fn rank_from_independents(
    lattice: &Arc<SubspaceLattice>,
    family: &[Subspace],
) -> Result<RankOracle, MatroidError> {
    if let Some(axiom) = verify_independence_axioms(lattice, family)?.first_failing() {
        return Err(MatroidError::AxiomFailure { axiom });
    }
    let ids = family_ids(lattice, family)?;
    let ranks: Vec<u8> = lattice
        .ids()
        .map(|x| {
            ids.iter()
                .copied()
                .filter(|&i| lattice.le(i, x))
                .map(|i| lattice.dim_of(i) as u8)
                .max()
                .expect("the zero subspace is a member")
        })
        .collect();
    Ok(RankOracle { lattice: Arc::clone(lattice), ranks })
}

/// Violations of the basis axioms (b1)–(b4), by axiom.
#[derive(Debug, Clone, Default)]
pub struct BasisAxiomReport {
    /// (b1): set when the family is empty.
    pub empty_family: bool,
    /// (b2): member pairs B1 ⊊ B2.
    pub containment_violations: Vec<(Subspace, Subspace)>,
    /// (b3): triples (B1, B2, C) with B1∩B2 ⊆ C ⊆ B2 and
    /// dim B1 = dim C + 1 admitting no x ∈ B1 with C + ⟨x⟩ a member.
    pub exchange_violations: Vec<(Subspace, Subspace, Subspace)>,
    /// (b4): ambient pairs (A1, A2) for which some maximal intersections
    /// I1, I2 admit no maximal intersection J of A1 + A2 inside I1 + I2.
    pub intersection_violations: Vec<(Subspace, Subspace)>,
}

impl BasisAxiomReport {
    pub fn b1_holds(&self) -> bool {
        !self.empty_family
    }

    pub fn b2_holds(&self) -> bool {
        self.containment_violations.is_empty()
    }

    pub fn b3_holds(&self) -> bool {
        self.exchange_violations.is_empty()
    }

    pub fn b4_holds(&self) -> bool {
        self.intersection_violations.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.b1_holds() && self.b2_holds() && self.b3_holds() && self.b4_holds()
    }

    pub fn first_failing(&self) -> Option<&'static str> {
        if !self.b1_holds() {
            Some("(b1)")
        } else if !self.b2_holds() {
            Some("(b2)")
        } else if !self.b3_holds() {
            Some("(b3)")
        } else if !self.b4_holds() {
            Some("(b4)")
        } else {
            None
        }
    }
}

impl fmt::Display for BasisAxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(b1) nonempty: {}", if self.empty_family { "violated" } else { "ok" })?;
        write!(f, "\n(b2) incomparability: ")?;
        ok_or_count(f, self.containment_violations.len())?;
        write!(f, "\n(b3) exchange: ")?;
        ok_or_count(f, self.exchange_violations.len())?;
        write!(f, "\n(b4) maximal intersections: ")?;
        ok_or_count(f, self.intersection_violations.len())
    }
}

/// Exhaustively checks the basis axioms on an arbitrary family.  The
/// family is taken raw (rather than as a [`BasisFamily`]) so that
/// violating inputs — mixed dimensions included — can be examined.
pub fn verify_basis_axioms(
    lattice: &Arc<SubspaceLattice>,
    family: &[Subspace],
) -> Result<BasisAxiomReport, MatroidError> {
    let ids = family_ids(lattice, family)?;
    let mut is_member = vec![false; lattice.len()];
    for &id in &ids {
        is_member[id as usize] = true;
    }
    let mut report = BasisAxiomReport { empty_family: ids.is_empty(), ..Default::default() };

    for &b1 in &ids {
        for &b2 in &ids {
            if b1 != b2 && lattice.le(b1, b2) {
                report
                    .containment_violations
                    .push((lattice.subspace(b1).clone(), lattice.subspace(b2).clone()));
            }
        }
    }

    let lines = lattice.ids_of_dim(1);
    for &b1 in &ids {
        let dim_b1 = lattice.dim_of(b1);
        if dim_b1 == 0 {
            continue; // no C with dim C = dim B1 − 1 exists
        }
        for &b2 in &ids {
            let meet = lattice.meet(b1, b2);
            for c in lattice.ids_of_dim(dim_b1 - 1) {
                if !lattice.le(meet, c) || !lattice.le(c, b2) {
                    continue;
                }
                let witnessed = is_member[c as usize]
                    || lines.clone().any(|l| {
                        lattice.le(l, b1) && is_member[lattice.join(c, l) as usize]
                    });
                if !witnessed {
                    report.exchange_violations.push((
                        lattice.subspace(b1).clone(),
                        lattice.subspace(b2).clone(),
                        lattice.subspace(c).clone(),
                    ));
                }
            }
        }
    }

    // Maximal elements of {B ∩ A : B in the family} for every A.
    let max_intersections: Vec<Vec<u32>> = lattice
        .ids()
        .map(|x| {
            let mut meets: Vec<u32> = ids.iter().map(|&b| lattice.meet(b, x)).collect();
            meets.sort_unstable();
            meets.dedup();
            maximal_among(lattice, &meets)
        })
        .collect();
    for a1 in lattice.ids() {
        'pair: for a2 in lattice.ids() {
            if a2 < a1 {
                continue;
            }
            let sum = lattice.join(a1, a2);
            let covers = &max_intersections[sum as usize];
            for &i1 in &max_intersections[a1 as usize] {
                for &i2 in &max_intersections[a2 as usize] {
                    let span = lattice.join(i1, i2);
                    if !covers.iter().any(|&j| lattice.le(j, span)) {
                        report
                            .intersection_violations
                            .push((lattice.subspace(a1).clone(), lattice.subspace(a2).clone()));
                        continue 'pair;
                    }
                }
            }
        }
    }
    Ok(report)
}

/// The ≼-least vector of the space with leading coefficient 1 satisfying
/// the predicate.
fn least_vector_where(
    space: &Subspace,
    mut keep: impl FnMut(&Vector) -> bool,
) -> Option<Vector> {
    let mut best: Option<Vector> = None;
    for v in space.vectors() {
        let lead = v.raw().iter().find(|&&c| c != 0);
        if lead != Some(&1) || !keep(&v) {
            continue;
        }
        match &best {
            Some(current) if vector_compare(&v, current).expect("same field") != Ordering::Less => {}
            _ => best = Some(v),
        }
    }
    best
}

/// Dual basis exchange: for bases B1 ≠ B2 of the matroid and y ∈ B2 \ B1,
/// produces U and x ∈ B1 \ B2 with
///
/// > B1 ∩ B2 ⊆ U,  B1 = U ⊕ ⟨x⟩,  and U ⊕ ⟨y⟩ a basis,
///
/// following the inductive argument on s = ρ(M) − dim(B1 ∩ B2): for s = 1
/// take U = B1 ∩ B2 directly; otherwise pick A of dimension r − 2 with
/// B1 ∩ B2 ⊆ A ⊆ B2 avoiding y, set C = A ⊕ ⟨y⟩, find the exchange
/// witness x' ∈ B1 with C ⊕ ⟨x'⟩ a basis, and repeat against that basis,
/// which meets B1 in one dimension more.  Witnesses and A are chosen
/// canonically (≼-least, first lattice id), so the output is
/// deterministic.  The three clauses are re-verified against the original
/// inputs before returning.
pub fn dual_basis_exchange(
    m: &RankOracle,
    b1: &Subspace,
    b2: &Subspace,
    y: &Vector,
) -> Result<(Subspace, Vector), MatroidError> {
    let lattice = &m.lattice;
    let b1_id = lattice.id_of(b1)?;
    let b2_id = lattice.id_of(b2)?;
    for (space, id) in [(b1, b1_id), (b2, b2_id)] {
        if !m.is_basis_id(id) {
            return Err(MatroidError::NotABasis { subspace: space.to_string() });
        }
    }
    if b1_id == b2_id {
        return Err(MatroidError::SameBasis);
    }
    if !b2.contains(y)? || b1.contains(y)? {
        return Err(MatroidError::BadExchangeVector);
    }

    let r = lattice.dim_of(b1_id);
    let y_line = lattice.line_id(y)?;
    let mut current = b2_id;
    let (u_id, x) = loop {
        let meet = lattice.meet(b1_id, current);
        if lattice.dim_of(meet) + 1 == r {
            // Base case s = 1: U is the intersection itself and any
            // x ∈ B1 \ B2 completes it back to B1.
            let outside = lattice.subspace(current);
            let x = least_vector_where(lattice.subspace(b1_id), |v| {
                !outside.contains(v).expect("same field")
            })
            .ok_or(MatroidError::NoExchangeWitness)?;
            break (meet, x);
        }
        let a = lattice
            .ids_of_dim(r - 2)
            .find(|&a| lattice.le(meet, a) && lattice.le(a, current) && !lattice.le(y_line, a))
            .ok_or(MatroidError::NoExchangeWitness)?;
        let c = lattice.join(a, y_line);
        // Any exchange witness for C lies outside B2: it avoids C, and
        // B1 ∩ B2 ⊆ A ⊆ C.
        let witness = least_vector_where(lattice.subspace(b1_id), |v| {
            let line = lattice.line_id(v).expect("vector from the lattice's field");
            m.is_basis_id(lattice.join(c, line))
        })
        .ok_or(MatroidError::NoExchangeWitness)?;
        current = lattice.join(c, lattice.line_id(&witness)?);
    };

    let x_line = lattice.line_id(&x)?;
    let meets_original = lattice.le(lattice.meet(b1_id, b2_id), u_id);
    let splits_b1 = lattice.join(u_id, x_line) == b1_id && !lattice.le(x_line, u_id);
    let x_exchangeable = lattice.le(x_line, b1_id) && !lattice.le(x_line, b2_id);
    let rebuilt = lattice.join(u_id, y_line);
    let forms_basis = m.is_basis_id(rebuilt) && !lattice.le(y_line, u_id);
    if !(meets_original && splits_b1 && x_exchangeable && forms_basis) {
        return Err(MatroidError::ExchangeCheckFailed);
    }
    Ok((lattice.subspace(u_id).clone(), x))
}
