//! Arithmetic in finite fields GF(p^k).
//!
//! A [`FieldSpec`] fixes the characteristic `p`, the extension degree `k` and
//! a monic irreducible modulus of degree `k` over GF(p).  Elements are stored
//! as integers in `0..q` with `q = p^k`: the base-`p` digits of the integer,
//! least significant first, are the coefficients of the residue polynomial.
//! For `k = 1` this is plain arithmetic mod `p` and the modulus is unused.
//!
//! Construction precomputes full operation tables (O(q²) work, q ≤
//! [`MAX_FIELD_ORDER`]), so every later operation is a lookup.  That is the
//! right trade here: the enumeration workloads in this crate perform millions
//! of field operations over very small fields.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest supported field order.  Operation tables hold q² entries, and the
/// subspace-enumeration workloads this crate exists for blow up long before
/// the field itself gets big, so the ceiling is generous.
pub const MAX_FIELD_ORDER: u64 = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("extension degree must be at least 1")]
    DegreeZero,
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order {0} exceeds the supported maximum {MAX_FIELD_ORDER}")]
    OrderTooLarge(u64),
    #[error("modulus must have {want} coefficients (degree {degree}), got {got}")]
    ModulusLength { want: usize, degree: u32, got: usize },
    #[error("modulus coefficients must be reduced mod {0}")]
    ModulusNotReduced(u64),
    #[error("modulus must be monic")]
    ModulusNotMonic,
    #[error("modulus is reducible over GF({0})")]
    ModulusReducible(u64),
    #[error("element {repr} is out of range for a field of order {q}")]
    ReprOutOfRange { repr: u64, q: u64 },
    #[error("operands belong to different field specs")]
    SpecMismatch,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
}

/// A concrete finite field GF(p^k) with table-backed arithmetic.
///
/// Specs are shared behind an `Arc`: vectors, matrices and subspaces all hold
/// a reference to the spec they live over, and mixing elements of different
/// specs is an error even when p, k agree but the modulus differs.
pub struct FieldSpec {
    p: u64,
    k: u32,
    q: u64,
    /// Modulus coefficients, lowest degree first, length k+1, monic.
    modulus: Vec<u16>,
    add_t: Vec<u16>,
    sub_t: Vec<u16>,
    mul_t: Vec<u16>,
    neg_t: Vec<u16>,
    inv_t: Vec<u16>, // inv_t[0] is a dead slot
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("q", &self.q)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl FieldSpec {
    /// GF(p^k) with the default modulus: the lexicographically smallest monic
    /// irreducible of degree k over GF(p), coefficient lists compared lowest
    /// degree first.  For k = 1 this degenerates to the polynomial x, which
    /// is never consulted.
    pub fn new(p: u64, k: u32) -> Result<Arc<FieldSpec>, FieldError> {
        validate_p_k(p, k)?;
        let modulus = default_modulus(p, k);
        Ok(Arc::new(FieldSpec::build(p, k, modulus)))
    }

    /// GF(p^k) with a caller-supplied modulus (lowest degree first, length
    /// k+1, monic, irreducible over GF(p)).
    pub fn with_modulus(p: u64, k: u32, modulus: &[u64]) -> Result<Arc<FieldSpec>, FieldError> {
        validate_p_k(p, k)?;
        if modulus.len() != k as usize + 1 {
            return Err(FieldError::ModulusLength {
                want: k as usize + 1,
                degree: k,
                got: modulus.len(),
            });
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(FieldError::ModulusNotReduced(p));
        }
        let m: Vec<u16> = modulus.iter().map(|&c| c as u16).collect();
        if *m.last().unwrap() != 1 {
            return Err(FieldError::ModulusNotMonic);
        }
        if !is_irreducible(p as u16, &m) {
            return Err(FieldError::ModulusReducible(p));
        }
        Ok(Arc::new(FieldSpec::build(p, k, m)))
    }

    /// GF(q) for a prime power q, with the default modulus.
    pub fn from_order(q: u64) -> Result<Arc<FieldSpec>, FieldError> {
        if q < 2 {
            return Err(FieldError::NotPrimePower(q));
        }
        let p = (2..=q).find(|d| q % d == 0).unwrap();
        let mut k = 0u32;
        let mut rest = q;
        while rest % p == 0 {
            rest /= p;
            k += 1;
        }
        if rest != 1 {
            return Err(FieldError::NotPrimePower(q));
        }
        FieldSpec::new(p, k)
    }

    fn build(p: u64, k: u32, modulus: Vec<u16>) -> FieldSpec {
        let q = p.pow(k);
        let qs = q as usize;
        let pu = p as u16;
        let mut add_t = vec![0u16; qs * qs];
        let mut sub_t = vec![0u16; qs * qs];
        let mut mul_t = vec![0u16; qs * qs];
        let mut neg_t = vec![0u16; qs];
        for a in 0..qs {
            let da = digits(a as u16, pu, k);
            let dneg: Vec<u16> = da.iter().map(|&c| (pu - c) % pu).collect();
            neg_t[a] = undigits(&dneg, pu);
            for b in 0..qs {
                let db = digits(b as u16, pu, k);
                let dsum: Vec<u16> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % pu).collect();
                add_t[a * qs + b] = undigits(&dsum, pu);
                let prod = poly_rem(pu, poly_mul(pu, &da, &db), &modulus);
                mul_t[a * qs + b] = undigits(&prod, pu);
            }
        }
        for a in 0..qs {
            for b in 0..qs {
                sub_t[a * qs + b] = add_t[a * qs + neg_t[b] as usize];
            }
        }
        // Inverses by scanning the multiplication rows; q is small and this
        // runs once per spec.
        let mut inv_t = vec![0u16; qs];
        for a in 1..qs {
            inv_t[a] = (0..qs)
                .find(|&b| mul_t[a * qs + b] == 1)
                .expect("irreducible modulus guarantees inverses") as u16;
        }
        FieldSpec { p, k, q, modulus, add_t, sub_t, mul_t, neg_t, inv_t }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Modulus coefficients, lowest degree first (length k+1).
    pub fn modulus(&self) -> Vec<u64> {
        self.modulus.iter().map(|&c| c as u64).collect()
    }

    /// True when both specs denote the same field with the same modulus.
    pub fn same_field(&self, other: &FieldSpec) -> bool {
        std::ptr::eq(self, other)
            || (self.p == other.p && self.k == other.k && self.modulus == other.modulus)
    }

    /// Wrap an integer representative as a field element.
    pub fn element(self: &Arc<Self>, repr: u64) -> Result<FieldElement, FieldError> {
        if repr >= self.q {
            return Err(FieldError::ReprOutOfRange { repr, q: self.q });
        }
        Ok(FieldElement { spec: Arc::clone(self), repr: repr as u16 })
    }

    /// All q elements, in representative order.
    pub fn elements(self: &Arc<Self>) -> impl Iterator<Item = FieldElement> + '_ {
        let spec = Arc::clone(self);
        (0..self.q as u16).map(move |r| FieldElement { spec: Arc::clone(&spec), repr: r })
    }

    // Representative-level arithmetic.  These are the hot paths used by the
    // linear algebra; callers are responsible for reprs being < q.

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add_t[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.sub_t[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul_t[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.neg_t[a as usize]
    }

    #[inline]
    pub fn inv(&self, a: u16) -> Result<u16, FieldError> {
        if a == 0 {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.inv_t[a as usize])
    }
}

fn validate_p_k(p: u64, k: u32) -> Result<(), FieldError> {
    if !is_prime(p) {
        return Err(FieldError::NonPrimeCharacteristic(p));
    }
    if k == 0 {
        return Err(FieldError::DegreeZero);
    }
    let q = p.checked_pow(k).ok_or(FieldError::OrderTooLarge(u64::MAX))?;
    if q > MAX_FIELD_ORDER {
        return Err(FieldError::OrderTooLarge(q));
    }
    Ok(())
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Base-p digits of `a`, least significant first, padded to length k.
fn digits(a: u16, p: u16, k: u32) -> Vec<u16> {
    let mut out = Vec::with_capacity(k as usize);
    let mut rest = a;
    for _ in 0..k {
        out.push(rest % p);
        rest /= p;
    }
    out
}

fn undigits(coeffs: &[u16], p: u16) -> u16 {
    let mut out = 0u16;
    for &c in coeffs.iter().rev() {
        out = out * p + c;
    }
    out
}

/// Product of two coefficient vectors over GF(p), lowest degree first.
fn poly_mul(p: u16, a: &[u16], b: &[u16]) -> Vec<u16> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u16; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Remainder of `a` modulo a monic polynomial `m` over GF(p).
fn poly_rem(p: u16, mut a: Vec<u16>, m: &[u16]) -> Vec<u16> {
    let deg_m = m.len() - 1;
    while a.len() > deg_m {
        let lead = *a.last().unwrap();
        let shift = a.len() - 1 - deg_m;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                let pos = shift + i;
                a[pos] = (a[pos] + p - (lead * c) % p) % p;
            }
        }
        a.pop();
    }
    a
}

/// Trial division over all monic polynomials of degree ≤ deg(f)/2.
fn is_irreducible(p: u16, f: &[u16]) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        // Monic g of degree d, all p^d choices of lower coefficients.
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut rest = idx;
            for _ in 0..d {
                g.push((rest % p as u64) as u16);
                rest /= p as u64;
            }
            g.push(1);
            let r = poly_rem(p, f.to_vec(), &g);
            if r.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree k over GF(p),
/// coefficient lists compared lowest degree first.
fn default_modulus(p: u64, k: u32) -> Vec<u16> {
    let pu = p as u16;
    let total = p.pow(k);
    for m in 0..total {
        // Low-degree-first lex order means the constant coefficient is the
        // most significant digit of the counter.
        let mut coeffs = Vec::with_capacity(k as usize + 1);
        let mut rest = m;
        for i in 0..k {
            let place = p.pow(k - 1 - i);
            coeffs.push((rest / place) as u16);
            rest %= place;
        }
        coeffs.push(1);
        if is_irreducible(pu, &coeffs) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree");
}

/// An element of a [`FieldSpec`], carrying its spec so cross-field mixing is
/// caught at runtime.
#[derive(Clone)]
pub struct FieldElement {
    spec: Arc<FieldSpec>,
    repr: u16,
}

impl FieldElement {
    pub fn repr(&self) -> u64 {
        self.repr as u64
    }

    pub(crate) fn raw(&self) -> u16 {
        self.repr
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.repr == 0
    }

    fn check(&self, rhs: &FieldElement) -> Result<(), FieldError> {
        if self.spec.same_field(&rhs.spec) {
            Ok(())
        } else {
            Err(FieldError::SpecMismatch)
        }
    }

    pub fn add(&self, rhs: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(rhs)?;
        Ok(FieldElement { spec: Arc::clone(&self.spec), repr: self.spec.add(self.repr, rhs.repr) })
    }

    pub fn sub(&self, rhs: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(rhs)?;
        Ok(FieldElement { spec: Arc::clone(&self.spec), repr: self.spec.sub(self.repr, rhs.repr) })
    }

    pub fn mul(&self, rhs: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(rhs)?;
        Ok(FieldElement { spec: Arc::clone(&self.spec), repr: self.spec.mul(self.repr, rhs.repr) })
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement { spec: Arc::clone(&self.spec), repr: self.spec.neg(self.repr) }
    }

    pub fn inv(&self) -> Result<FieldElement, FieldError> {
        Ok(FieldElement { spec: Arc::clone(&self.spec), repr: self.spec.inv(self.repr)? })
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.repr == other.repr && self.spec.same_field(&other.spec)
    }
}

impl Eq for FieldElement {}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.repr)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.repr)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf5_inverse() {
        let f = FieldSpec::new(5, 1).unwrap();
        assert_eq!(f.inv(3).unwrap(), 2);
        for a in 1..5u16 {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
        assert_eq!(f.inv(0), Err(FieldError::ZeroInverse));
    }

    #[test]
    fn gf4_default_modulus_and_products() {
        // Only one irreducible quadratic exists over GF(2): x² + x + 1.
        let f = FieldSpec::new(2, 2).unwrap();
        assert_eq!(f.modulus(), vec![1, 1, 1]);
        // repr 2 is x; x·x = x+1 which is repr 3.
        assert_eq!(f.mul(2, 2), 3);
        for a in 0..4u16 {
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.mul(1, a), a);
        }
    }

    #[test]
    fn default_moduli_are_lex_smallest() {
        // Oracle: collect every irreducible monic polynomial of the right
        // degree by brute force and take the low-degree-first lex minimum.
        for (p, k) in [(2u64, 3u32), (3, 2), (2, 2)] {
            let mut candidates = Vec::new();
            let total = p.pow(k);
            for m in 0..total {
                let mut coeffs: Vec<u16> = Vec::new();
                let mut rest = m;
                for _ in 0..k {
                    coeffs.push((rest % p) as u16);
                    rest /= p;
                }
                coeffs.push(1);
                if is_irreducible(p as u16, &coeffs) {
                    candidates.push(coeffs);
                }
            }
            candidates.sort();
            let f = FieldSpec::new(p, k).unwrap();
            let want: Vec<u64> = candidates[0].iter().map(|&c| c as u64).collect();
            assert_eq!(f.modulus(), want, "GF({}^{})", p, k);
        }
        // Frozen values for the two extension fields the test suite leans on:
        // GF(8) gets x³+x²+1 (coefficient list [1,0,1,1] beats [1,1,0,1]),
        // GF(9) gets x²+1.
        assert_eq!(FieldSpec::new(2, 3).unwrap().modulus(), vec![1, 0, 1, 1]);
        assert_eq!(FieldSpec::new(3, 2).unwrap().modulus(), vec![1, 0, 1]);
    }

    #[test]
    fn field_axioms_exhaustive_small_orders() {
        for q in [2u64, 3, 4, 5, 8, 9] {
            let f = FieldSpec::from_order(q).unwrap();
            let n = q as u16;
            for a in 0..n {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in 0..n {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.sub(a, b), f.add(a, f.neg(b)));
                    for c in 0..n {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c)),
                            "distributivity in GF({})",
                            q
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn custom_modulus_gf9() {
        // x² + x + 2 is irreducible over GF(3); arithmetic must still satisfy
        // the field axioms even though reprs differ from the default spec.
        let f = FieldSpec::with_modulus(3, 2, &[2, 1, 1]).unwrap();
        for a in 0..9u16 {
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
            for b in 0..9u16 {
                assert_eq!(f.mul(a, b), f.mul(b, a));
            }
        }
        // x·x = −x−2 = 2x+1, i.e. repr 3·3 → 1 + 2·3 = 7.
        assert_eq!(f.mul(3, 3), 7);
    }

    #[test]
    fn spec_mismatch_is_detected() {
        let default = FieldSpec::new(3, 2).unwrap();
        let custom = FieldSpec::with_modulus(3, 2, &[2, 1, 1]).unwrap();
        let a = default.element(4).unwrap();
        let b = custom.element(4).unwrap();
        assert_eq!(a.add(&b), Err(FieldError::SpecMismatch));
        // Two independently built specs with the same modulus interoperate.
        let again = FieldSpec::new(3, 2).unwrap();
        let c = again.element(5).unwrap();
        assert_eq!(a.add(&c).unwrap().repr(), default.add(4, 5) as u64);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FieldSpec::new(6, 1).unwrap_err(), FieldError::NonPrimeCharacteristic(6));
        assert_eq!(FieldSpec::new(2, 0).unwrap_err(), FieldError::DegreeZero);
        assert_eq!(FieldSpec::new(2, 10).unwrap_err(), FieldError::OrderTooLarge(1024));
        assert_eq!(FieldSpec::from_order(12).unwrap_err(), FieldError::NotPrimePower(12));
        assert_eq!(FieldSpec::from_order(1).unwrap_err(), FieldError::NotPrimePower(1));
        // x² + 1 = (x+1)² over GF(2).
        assert_eq!(
            FieldSpec::with_modulus(2, 2, &[1, 0, 1]).unwrap_err(),
            FieldError::ModulusReducible(2)
        );
        assert_eq!(
            FieldSpec::with_modulus(2, 2, &[1, 1, 0]).unwrap_err(),
            FieldError::ModulusNotMonic
        );
        let f = FieldSpec::new(2, 2).unwrap();
        assert_eq!(f.element(4).unwrap_err(), FieldError::ReprOutOfRange { repr: 4, q: 4 });
    }

    #[test]
    fn gf8_has_no_additive_surprises() {
        // Characteristic 2: every element is its own negative, and addition
        // is coordinatewise XOR on the digit vectors.
        let f = FieldSpec::new(2, 3).unwrap();
        for a in 0..8u16 {
            assert_eq!(f.neg(a), a);
            for b in 0..8u16 {
                assert_eq!(f.add(a, b), a ^ b);
            }
        }
    }
}
