//! Deciding the prime-like, maximal-like, minimal-like and principal-like
//! ideal classes, with witnesses for the existential ones.
//!
//! For nil-prime, nil-maximal and nil-minimal the nilpotent witness `x` is
//! chosen once and must serve every pair (or every intermediate ideal).
//! Under a per-pair choice `<16>` in `Z32` would be nil-prime; here it is
//! not. `x = 0` is an allowed witness, so prime ideals are nil-prime with
//! witness `0`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{self, Ideal, IdealLattice};
use crate::ring::{Element, FiniteRing, DEFAULT_SIZE_CAP};

/// Witness sets are reported in full up to this ring size, and truncated to
/// their first element above it.
pub const FULL_WITNESS_RING_SIZE: usize = 64;

/// Lattice, nilradical and principal ideals of one ring, computed once and
/// shared by every predicate.
pub struct Classifier<'r> {
    ring: &'r FiniteRing,
    lattice: IdealLattice<'r>,
    nil: Ideal<'r>,
    nilpotents: Vec<Element>,
    principals: Vec<Ideal<'r>>,
}

impl<'r> Classifier<'r> {
    /// Any ring that could be built can be classified: the size cap was
    /// already applied by [`FiniteRing::build_with_cap`].
    pub fn new(ring: &'r FiniteRing) -> Result<Self> {
        let lattice = IdealLattice::enumerate(ring, ring.size().max(DEFAULT_SIZE_CAP))?;
        let nilpotents = ring.nilpotents();
        let nil = Ideal::from_members_unchecked(ring, nilpotents.iter().copied());
        let principals = ring.elements().map(|a| ideal::principal(ring, a)).collect();
        Ok(Classifier {
            ring,
            lattice,
            nil,
            nilpotents,
            principals,
        })
    }

    pub fn ring(&self) -> &'r FiniteRing {
        self.ring
    }

    pub fn lattice(&self) -> &IdealLattice<'r> {
        &self.lattice
    }

    pub fn nilradical(&self) -> &Ideal<'r> {
        &self.nil
    }

    pub fn nilpotents(&self) -> &[Element] {
        &self.nilpotents
    }

    /// `Ra`.
    pub fn principal(&self, a: Element) -> &Ideal<'r> {
        &self.principals[a]
    }

    /// `I + Nil(R)`.
    pub fn plus_nil(&self, i: &Ideal<'_>) -> Result<Ideal<'r>> {
        self.check(i)?;
        Ok(self.nil.sum_unchecked(i))
    }

    fn check(&self, i: &Ideal<'_>) -> Result<()> {
        if ideal::same_ring(self.ring, i.ring()) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn check_proper(&self, i: &Ideal<'_>) -> Result<()> {
        self.check(i)?;
        if i.is_proper() {
            Ok(())
        } else {
            Err(Error::ImproperIdeal)
        }
    }

    fn all_pairs_land<F>(&self, p: &Ideal<'_>, ok: F) -> bool
    where
        F: Fn(Element, Element) -> bool,
    {
        let r = self.ring;
        r.elements().all(|a| {
            (a..r.size()).all(|b| !p.contains_element(r.mul(a, b)) || ok(a, b))
        })
    }

    pub fn is_prime(&self, p: &Ideal<'_>) -> Result<bool> {
        self.check_proper(p)?;
        Ok(self.all_pairs_land(p, |a, b| {
            p.contains_element(a) || p.contains_element(b)
        }))
    }

    pub fn is_maximal(&self, p: &Ideal<'_>) -> Result<bool> {
        self.check_proper(p)?;
        Ok(self
            .lattice
            .above(p)
            .all(|i| i.len() == p.len() || !i.is_proper()))
    }

    /// Pairs `a <= b` with `ab ∈ P` but `a, b ∉ P`.
    pub fn violating_pairs(&self, p: &Ideal<'_>) -> Result<Vec<(Element, Element)>> {
        self.check_proper(p)?;
        let r = self.ring;
        let outside: Vec<Element> = r.elements().filter(|&a| !p.contains_element(a)).collect();
        let mut pairs = Vec::new();
        for (i, &a) in outside.iter().enumerate() {
            for &b in &outside[i..] {
                if p.contains_element(r.mul(a, b)) {
                    pairs.push((a, b));
                }
            }
        }
        Ok(pairs)
    }

    /// Every nilpotent `x` for which each violating pair `(a, b)` has
    /// `a + x ∈ P` or `b + x ∈ P`. Non-empty exactly when `P` is nil-prime.
    pub fn nil_prime_witnesses(&self, p: &Ideal<'_>) -> Result<Vec<Element>> {
        let pairs = self.violating_pairs(p)?;
        let r = self.ring;
        Ok(self
            .nilpotents
            .iter()
            .copied()
            .filter(|&x| {
                pairs.iter().all(|&(a, b)| {
                    p.contains_element(r.add(a, x)) || p.contains_element(r.add(b, x))
                })
            })
            .collect())
    }

    pub fn is_nil_prime(&self, p: &Ideal<'_>) -> Result<bool> {
        Ok(!self.nil_prime_witnesses(p)?.is_empty())
    }

    pub fn is_n_prime(&self, p: &Ideal<'_>) -> Result<bool> {
        self.check_proper(p)?;
        let q = self.nil.sum_unchecked(p);
        Ok(self.all_pairs_land(p, |a, b| {
            q.contains_element(a) || q.contains_element(b)
        }))
    }

    /// Every nilpotent `x` such that each ideal `I ⊇ M` is `M`, `M + Rx` or
    /// `R`. Non-empty exactly when `M` is nil-maximal.
    pub fn nil_maximal_witnesses(&self, m: &Ideal<'_>) -> Result<Vec<Element>> {
        self.check_proper(m)?;
        let strictly_between: Vec<&Ideal<'r>> = self
            .lattice
            .above(m)
            .filter(|i| i.len() != m.len() && i.is_proper())
            .collect();
        Ok(self
            .nilpotents
            .iter()
            .copied()
            .filter(|&x| {
                let mx = m.sum_unchecked(self.principal(x));
                strictly_between.iter().all(|i| **i == mx)
            })
            .collect())
    }

    pub fn is_nil_maximal(&self, m: &Ideal<'_>) -> Result<bool> {
        Ok(!self.nil_maximal_witnesses(m)?.is_empty())
    }

    pub fn is_n_maximal(&self, m: &Ideal<'_>) -> Result<bool> {
        self.check_proper(m)?;
        let m_nil = self.nil.sum_unchecked(m);
        Ok(self
            .lattice
            .above(m)
            .all(|i| !self.nil.sum_unchecked(i).is_proper() || m_nil.includes(i)))
    }

    /// Every nilpotent `x` such that each ideal `J ⊆ I` has `I = J + Rx` or
    /// `J = Rx`. Non-empty exactly when the nonzero ideal `I` is nil-minimal.
    pub fn nil_minimal_witnesses(&self, i: &Ideal<'_>) -> Result<Vec<Element>> {
        self.check(i)?;
        if i.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let below: Vec<&Ideal<'r>> = self.lattice.below(i).collect();
        Ok(self
            .nilpotents
            .iter()
            .copied()
            .filter(|&x| {
                let rx = self.principal(x);
                below
                    .iter()
                    .all(|j| *j == rx || j.sum_unchecked(rx).len() == i.len() && i.includes(rx))
            })
            .collect())
    }

    pub fn is_nil_minimal(&self, i: &Ideal<'_>) -> Result<bool> {
        Ok(!self.nil_minimal_witnesses(i)?.is_empty())
    }

    /// The lexicographically smallest `(r, x)` with `x` nilpotent and
    /// `I = Rr + Rx`.
    pub fn nil_principal_witness(&self, i: &Ideal<'_>) -> Result<Option<(Element, Element)>> {
        self.check(i)?;
        for r in self.ring.elements() {
            let rr = self.principal(r);
            if !i.includes(rr) {
                continue;
            }
            for &x in &self.nilpotents {
                let rx = self.principal(x);
                if i.includes(rx) && rr.sum_unchecked(rx).len() == i.len() {
                    return Ok(Some((r, x)));
                }
            }
        }
        Ok(None)
    }

    /// The smallest `r` with `I ⊆ Rr + Nil(R)`.
    pub fn n_principal_witness(&self, i: &Ideal<'_>) -> Result<Option<Element>> {
        self.check(i)?;
        Ok(self
            .ring
            .elements()
            .find(|&r| self.nil.sum_unchecked(self.principal(r)).includes(i)))
    }

    /// Neither ideal lies in a nilpotent translate `K + Rz` of the other.
    pub fn nil_distinct(&self, i: &Ideal<'_>, j: &Ideal<'_>) -> Result<bool> {
        self.check(i)?;
        self.check(j)?;
        Ok(self.nilpotents.iter().all(|&z| {
            let rz = self.principal(z);
            !i.sum_unchecked(rz).includes(j) && !j.sum_unchecked(rz).includes(i)
        }))
    }

    /// The zero ideal is N-prime.
    pub fn is_n_integral_domain(&self) -> bool {
        self.is_n_prime(&Ideal::zero(self.ring))
            .expect("the zero ideal of a nonzero ring is proper")
    }

    /// Every ideal is N-principal. Only defined for N-integral domains.
    pub fn is_n_pid(&self) -> Result<bool> {
        if !self.is_n_integral_domain() {
            return Err(Error::NotNIntegralDomain);
        }
        for i in &self.lattice {
            if self.n_principal_witness(i)?.is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Runs every applicable predicate. Witness sets are truncated to
    /// `witness_limit` entries, or per [`FULL_WITNESS_RING_SIZE`] when `None`.
    pub fn classify(&self, p: &Ideal<'_>, witness_limit: Option<usize>) -> Result<ClassificationReport> {
        self.check(p)?;
        let limit = witness_limit.unwrap_or(if self.ring.size() <= FULL_WITNESS_RING_SIZE {
            usize::MAX
        } else {
            1
        });
        let truncate = |mut v: Vec<Element>| {
            v.truncate(limit);
            v
        };
        let proper = p.is_proper();
        let mut report = ClassificationReport {
            ideal: p.to_vec(),
            proper,
            ..Default::default()
        };
        if proper {
            let nil_prime = self.nil_prime_witnesses(p)?;
            let nil_maximal = self.nil_maximal_witnesses(p)?;
            report.prime = Some(self.is_prime(p)?);
            report.maximal = Some(self.is_maximal(p)?);
            report.nil_prime = Some(!nil_prime.is_empty());
            report.n_prime = Some(self.is_n_prime(p)?);
            report.nil_maximal = Some(!nil_maximal.is_empty());
            report.n_maximal = Some(self.is_n_maximal(p)?);
            report.witnesses.nil_prime = Some(truncate(nil_prime));
            report.witnesses.nil_maximal = Some(truncate(nil_maximal));
        }
        if !p.is_zero() {
            let nil_minimal = self.nil_minimal_witnesses(p)?;
            report.nil_minimal = Some(!nil_minimal.is_empty());
            report.witnesses.nil_minimal = Some(truncate(nil_minimal));
        }
        let np = self.nil_principal_witness(p)?;
        let n = self.n_principal_witness(p)?;
        report.nil_principal = Some(np.is_some());
        report.n_principal = Some(n.is_some());
        report.witnesses.nil_principal = np.map(|(r, x)| [r, x]);
        report.witnesses.n_principal = n;
        Ok(report)
    }
}

/// Verdicts for one ideal. A verdict is `None` when the predicate does not
/// apply (prime-like and maximal-like classes need a proper ideal,
/// nil-minimality a nonzero one).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub ideal: Vec<Element>,
    pub proper: bool,
    pub prime: Option<bool>,
    pub maximal: Option<bool>,
    pub nil_prime: Option<bool>,
    pub n_prime: Option<bool>,
    pub nil_maximal: Option<bool>,
    pub n_maximal: Option<bool>,
    pub nil_minimal: Option<bool>,
    pub nil_principal: Option<bool>,
    pub n_principal: Option<bool>,
    pub witnesses: Witnesses,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    pub nil_prime: Option<Vec<Element>>,
    pub nil_maximal: Option<Vec<Element>>,
    pub nil_minimal: Option<Vec<Element>>,
    pub nil_principal: Option<[Element; 2]>,
    pub n_principal: Option<Element>,
}
