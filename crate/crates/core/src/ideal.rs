//! Ideals as membership bit sets, and the full ideal lattice of a ring.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ring::{Element, FiniteRing, DEFAULT_SIZE_CAP};

/// An ideal of a [`FiniteRing`], stored as a membership set over its element
/// indices. Iteration is always in ascending index order.
#[derive(Clone)]
pub struct Ideal<'r> {
    ring: &'r FiniteRing,
    members: FixedBitSet,
}

impl<'r> Ideal<'r> {
    pub(crate) fn from_members_unchecked<I>(ring: &'r FiniteRing, members: I) -> Self
    where
        I: IntoIterator<Item = Element>,
    {
        let mut set = FixedBitSet::with_capacity(ring.size());
        set.extend(members);
        Ideal { ring, members: set }
    }

    fn from_set(ring: &'r FiniteRing, members: FixedBitSet) -> Self {
        Ideal { ring, members }
    }

    pub fn zero(ring: &'r FiniteRing) -> Self {
        Self::from_members_unchecked(ring, [ring.zero()])
    }

    pub fn whole(ring: &'r FiniteRing) -> Self {
        let mut members = FixedBitSet::with_capacity(ring.size());
        members.insert_range(..);
        Ideal { ring, members }
    }

    /// Wraps an explicit member list, rejecting sets that are not ideals.
    pub fn from_members<I>(ring: &'r FiniteRing, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = Element>,
    {
        let mut set = FixedBitSet::with_capacity(ring.size());
        for a in members {
            if a >= ring.size() {
                return Err(Error::InvalidDescriptor(format!(
                    "element {a} is out of range for a ring of size {}",
                    ring.size()
                )));
            }
            set.insert(a);
        }
        let ideal = Ideal { ring, members: set };
        if ideal.is_closed() {
            Ok(ideal)
        } else {
            Err(Error::InvalidDescriptor(
                "member set is not closed under addition and ring multiplication".into(),
            ))
        }
    }

    pub fn ring(&self) -> &'r FiniteRing {
        self.ring
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.members.ones()
    }

    pub fn to_vec(&self) -> Vec<Element> {
        self.iter().collect()
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains_element(&self, a: Element) -> bool {
        self.members.contains(a)
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 1
    }

    pub fn is_proper(&self) -> bool {
        !self.members.contains(self.ring.one())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Ideal<'_>) -> Result<bool> {
        self.check_same(other)?;
        Ok(other.members.is_subset(&self.members))
    }

    pub fn equals(&self, other: &Ideal<'_>) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.members == other.members)
    }

    pub(crate) fn includes(&self, other: &Ideal<'_>) -> bool {
        other.members.is_subset(&self.members)
    }

    /// Zero, additive closure and absorption, checked exhaustively.
    pub fn is_closed(&self) -> bool {
        let r = self.ring;
        if !self.contains_element(r.zero()) {
            return false;
        }
        let members = self.to_vec();
        members.iter().all(|&a| {
            members.iter().all(|&b| self.contains_element(r.add(a, b)))
                && r.elements().all(|s| self.contains_element(r.mul(s, a)))
        })
    }

    fn check_same(&self, other: &Ideal<'_>) -> Result<()> {
        if same_ring(self.ring, other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn sum(&self, other: &Ideal<'_>) -> Result<Ideal<'r>> {
        self.check_same(other)?;
        Ok(self.sum_unchecked(other))
    }

    pub(crate) fn sum_unchecked(&self, other: &Ideal<'_>) -> Ideal<'r> {
        if self.includes(other) {
            return self.clone();
        }
        if other.includes(self) {
            return Ideal::from_set(self.ring, other.members.clone());
        }
        let r = self.ring;
        let rhs = other.to_vec();
        let mut out = FixedBitSet::with_capacity(r.size());
        for a in self.iter() {
            for &b in &rhs {
                out.insert(r.add(a, b));
            }
        }
        Ideal::from_set(r, out)
    }

    /// The ideal generated by all products `ab`, `a` in `self`, `b` in `other`.
    pub fn product(&self, other: &Ideal<'_>) -> Result<Ideal<'r>> {
        self.check_same(other)?;
        Ok(self.product_unchecked(other))
    }

    pub(crate) fn product_unchecked(&self, other: &Ideal<'_>) -> Ideal<'r> {
        let r = self.ring;
        let rhs = other.to_vec();
        let mut products = FixedBitSet::with_capacity(r.size());
        for a in self.iter() {
            for &b in &rhs {
                products.insert(r.mul(a, b));
            }
        }
        generate_from_set(r, &products)
    }

    pub fn intersect(&self, other: &Ideal<'_>) -> Result<Ideal<'r>> {
        self.check_same(other)?;
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        Ok(Ideal::from_set(self.ring, members))
    }

    /// `(self : other) = { r : r * other ⊆ self }`.
    pub fn colon(&self, other: &Ideal<'_>) -> Result<Ideal<'r>> {
        self.check_same(other)?;
        Ok(self.colon_unchecked(other))
    }

    pub(crate) fn colon_unchecked(&self, other: &Ideal<'_>) -> Ideal<'r> {
        let r = self.ring;
        let rhs = other.to_vec();
        let members = r
            .elements()
            .filter(|&s| rhs.iter().all(|&j| self.contains_element(r.mul(s, j))));
        Ideal::from_members_unchecked(r, members)
    }

    /// Elements with some power in the ideal.
    pub fn radical(&self) -> Ideal<'r> {
        let r = self.ring;
        // Once a power lands in the ideal every later power does too, so the
        // test reduces to one element of the eventual power cycle.
        let members = r
            .elements()
            .filter(|&a| self.contains_element(r.power_cycle_element(a)));
        Ideal::from_members_unchecked(r, members)
    }

    /// A small generating set: members taken in ascending order, keeping
    /// each one not already generated by those before it.
    pub fn generators(&self) -> Vec<Element> {
        let r = self.ring;
        let mut gens = Vec::new();
        let mut current = Ideal::zero(r);
        for a in self.iter() {
            if current.contains_element(a) {
                continue;
            }
            gens.push(a);
            current = current.sum_unchecked(&principal(r, a));
            if current.members == self.members {
                break;
            }
        }
        gens
    }

    /// Ordering of the lattice: member count, then member lists compared
    /// lexicographically.
    pub fn lattice_cmp(&self, other: &Ideal<'_>) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

pub(crate) fn same_ring(a: &FiniteRing, b: &FiniteRing) -> bool {
    std::ptr::eq(a, b) || a.descriptor() == b.descriptor()
}

impl PartialEq for Ideal<'_> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(self.ring, other.ring) && self.members == other.members
    }
}

impl Eq for Ideal<'_> {}

impl Hash for Ideal<'_> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl fmt::Debug for Ideal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for Ideal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, a) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for Ideal<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// `Ra = { r * a : r in R }`.
pub fn principal(ring: &FiniteRing, a: Element) -> Ideal<'_> {
    Ideal::from_members_unchecked(ring, ring.elements().map(|r| ring.mul(r, a)))
}

/// The smallest ideal containing `gens`.
///
/// Built as the sum of the principal ideals of the generators, which is the
/// closure of the generators under addition and ring multiplication.
pub fn generate<'r>(ring: &'r FiniteRing, gens: &[Element]) -> Ideal<'r> {
    let mut set = FixedBitSet::with_capacity(ring.size());
    set.extend(gens.iter().copied());
    generate_from_set(ring, &set)
}

fn generate_from_set<'r>(ring: &'r FiniteRing, gens: &FixedBitSet) -> Ideal<'r> {
    let mut current = Ideal::zero(ring);
    for g in gens.ones() {
        if !current.contains_element(g) {
            current = current.sum_unchecked(&principal(ring, g));
        }
    }
    current
}

/// Every ideal of a ring, sorted by [`Ideal::lattice_cmp`].
#[derive(Clone)]
pub struct IdealLattice<'r> {
    ring: &'r FiniteRing,
    ideals: Vec<Ideal<'r>>,
    index: HashMap<FixedBitSet, usize>,
}

/// Enumerates all ideals of `ring` with the default size cap.
pub fn all_ideals(ring: &FiniteRing) -> Result<IdealLattice<'_>> {
    IdealLattice::enumerate(ring, DEFAULT_SIZE_CAP)
}

impl<'r> IdealLattice<'r> {
    /// Starts from the zero ideal and the principal ideals and closes under
    /// pairwise sums. Every ideal of a finite ring is a finite sum of principal
    /// ideals, so the fixpoint is the whole lattice.
    pub fn enumerate(ring: &'r FiniteRing, cap: usize) -> Result<Self> {
        if ring.size() > cap {
            return Err(Error::SizeCapExceeded {
                size: ring.size() as u128,
                cap,
            });
        }
        let mut seen: HashMap<FixedBitSet, ()> = HashMap::new();
        let mut principals: Vec<Ideal<'r>> = Vec::new();
        for a in ring.elements() {
            let p = principal(ring, a);
            if seen.insert(p.members.clone(), ()).is_none() {
                principals.push(p);
            }
        }
        let mut ideals = principals.clone();
        let mut frontier = principals.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for i in &frontier {
                for p in &principals {
                    let s = i.sum_unchecked(p);
                    if seen.insert(s.members.clone(), ()).is_none() {
                        ideals.push(s.clone());
                        next.push(s);
                    }
                }
            }
            frontier = next;
        }
        ideals.sort_by(|a, b| a.lattice_cmp(b));
        let index = ideals
            .iter()
            .enumerate()
            .map(|(i, ideal)| (ideal.members.clone(), i))
            .collect();
        Ok(IdealLattice {
            ring,
            ideals,
            index,
        })
    }

    pub fn ring(&self) -> &'r FiniteRing {
        self.ring
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[Ideal<'r>] {
        &self.ideals
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Ideal<'r>> {
        self.ideals.iter()
    }

    pub fn get(&self, i: usize) -> &Ideal<'r> {
        &self.ideals[i]
    }

    pub fn position(&self, ideal: &Ideal<'_>) -> Option<usize> {
        if !same_ring(self.ring, ideal.ring) {
            return None;
        }
        self.index.get(&ideal.members).copied()
    }

    pub fn proper(&self) -> impl Iterator<Item = &Ideal<'r>> {
        self.ideals.iter().filter(|i| i.is_proper())
    }

    /// Ideals `I` with `lower ⊆ I`.
    pub fn above<'a>(&'a self, lower: &'a Ideal<'_>) -> impl Iterator<Item = &'a Ideal<'r>> + 'a {
        self.ideals.iter().filter(move |i| i.includes(lower))
    }

    /// Ideals `J` with `J ⊆ upper`.
    pub fn below<'a>(&'a self, upper: &'a Ideal<'_>) -> impl Iterator<Item = &'a Ideal<'r>> + 'a {
        self.ideals.iter().filter(move |j| upper.includes(j))
    }
}

impl<'a, 'r> IntoIterator for &'a IdealLattice<'r> {
    type Item = &'a Ideal<'r>;
    type IntoIter = std::slice::Iter<'a, Ideal<'r>>;

    fn into_iter(self) -> Self::IntoIter {
        self.ideals.iter()
    }
}
