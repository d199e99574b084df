//! Finite commutative rings with identity, realized over canonical element
//! indices.
//!
//! Every ring built here has elements `0..size`, with index `0` the additive
//! identity. The encodings are part of the public contract:
//!
//! * `Zn(n)`: the index is the residue.
//! * `Product([R1, R2, ...])`: `i1 + |R1| * (i2 + |R2| * (...))`, leftmost
//!   factor least significant.
//! * `TruncPoly(n, k)` (that is `Z_n[x]/(x^k)`): `sum c_j * n^j` over `j < k`,
//!   where `c_j` is the coefficient of `x^j`.
//! * `Idealize(n, m)` (that is `Z_n (+) Z_m`): the pair `(a, v)` is stored at
//!   `a * m + v`.
//! * `Quotient(base, gens)`: cosets sorted by their smallest base index and
//!   renumbered `0..count`.

use crate::error::{Error, Result};
use crate::ideal::{self, Ideal};

/// Largest ring a descriptor may realize unless a caller asks for more.
pub const DEFAULT_SIZE_CAP: usize = 4096;

/// Rings at or below this size get full operation tables.
pub const TABLE_LIMIT: usize = 256;

/// Element index within a [`FiniteRing`].
pub type Element = usize;

/// Abstract syntax of a ring expression.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingDescriptor {
    Zn(u64),
    Product(Vec<RingDescriptor>),
    TruncPoly { n: u64, k: u32 },
    Idealize { n: u64, m: u64 },
    Quotient {
        base: Box<RingDescriptor>,
        generators: Vec<Element>,
    },
}

impl RingDescriptor {
    pub fn product<I: IntoIterator<Item = RingDescriptor>>(factors: I) -> Self {
        RingDescriptor::Product(factors.into_iter().collect())
    }

    pub fn quotient(base: RingDescriptor, generators: Vec<Element>) -> Self {
        RingDescriptor::Quotient {
            base: Box::new(base),
            generators,
        }
    }

    /// Checks the structural invariants of this node and its children.
    ///
    /// Quotient generators are only checked against an upper bound on the base
    /// size here; [`FiniteRing::build`] checks them against the realized base.
    pub fn validate(&self) -> Result<()> {
        self.validate_node()?;
        match self {
            RingDescriptor::Product(factors) => factors.iter().try_for_each(|f| f.validate()),
            RingDescriptor::Quotient { base, .. } => base.validate(),
            _ => Ok(()),
        }
    }

    /// Checks the invariants of this node only, assuming its children are valid.
    pub fn validate_node(&self) -> Result<()> {
        match self {
            RingDescriptor::Zn(n) => {
                if *n < 2 {
                    return Err(Error::InvalidDescriptor(format!(
                        "Z{n} has fewer than two elements"
                    )));
                }
            }
            RingDescriptor::Product(factors) => {
                if factors.len() < 2 {
                    return Err(Error::InvalidDescriptor(
                        "a product needs at least two factors".into(),
                    ));
                }
            }
            RingDescriptor::TruncPoly { n, k } => {
                if *n < 2 {
                    return Err(Error::InvalidDescriptor(format!(
                        "Z{n}[x] has a coefficient ring with fewer than two elements"
                    )));
                }
                if *k < 1 {
                    return Err(Error::InvalidDescriptor(
                        "truncation degree must be at least 1".into(),
                    ));
                }
            }
            RingDescriptor::Idealize { n, m } => {
                if *n < 2 {
                    return Err(Error::InvalidDescriptor(format!(
                        "Z{n} has fewer than two elements"
                    )));
                }
                if *m == 0 || n % m != 0 {
                    return Err(Error::InvalidDescriptor(format!(
                        "Z{m} is not a Z{n}-module: {m} does not divide {n}"
                    )));
                }
            }
            RingDescriptor::Quotient { base, generators } => {
                if generators.is_empty() {
                    return Err(Error::InvalidDescriptor(
                        "a quotient needs at least one generator".into(),
                    ));
                }
                if let Some(bound) = base.size_bound() {
                    if let Some(&g) = generators.iter().find(|&&g| g as u128 >= bound) {
                        return Err(Error::InvalidDescriptor(format!(
                            "quotient generator {g} is not an element of a ring of size {bound}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Exact size for quotient-free descriptors, an upper bound otherwise.
    /// `None` on overflow.
    pub fn size_bound(&self) -> Option<u128> {
        match self {
            RingDescriptor::Zn(n) => Some(*n as u128),
            RingDescriptor::Product(factors) => factors
                .iter()
                .try_fold(1u128, |acc, f| acc.checked_mul(f.size_bound()?)),
            RingDescriptor::TruncPoly { n, k } => (*n as u128).checked_pow(*k),
            RingDescriptor::Idealize { n, m } => (*n as u128).checked_mul(*m as u128),
            RingDescriptor::Quotient { base, .. } => base.size_bound(),
        }
    }
}

#[derive(Debug, Clone)]
enum Repr {
    Cyclic(usize),
    Product {
        factors: Vec<FiniteRing>,
        strides: Vec<usize>,
    },
    TruncPoly {
        n: usize,
        k: usize,
    },
    Idealize {
        n: usize,
        m: usize,
    },
    Quotient {
        base: Box<FiniteRing>,
        representatives: Vec<Element>,
        projection: Vec<Element>,
    },
}

#[derive(Debug, Clone)]
struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
}

/// A realized finite commutative ring with identity.
///
/// Immutable after construction and safe to share between threads.
#[derive(Debug, Clone)]
pub struct FiniteRing {
    descriptor: RingDescriptor,
    size: usize,
    one: Element,
    repr: Repr,
    tables: Option<Tables>,
}

/// `R/I` together with the projection `R -> R/I`.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    pub ring: FiniteRing,
    projection: Vec<Element>,
}

impl QuotientMap {
    pub fn project(&self, a: Element) -> Element {
        self.projection[a]
    }

    pub fn projection(&self) -> &[Element] {
        &self.projection
    }
}

impl FiniteRing {
    pub fn build(descriptor: &RingDescriptor) -> Result<Self> {
        Self::build_with_cap(descriptor, DEFAULT_SIZE_CAP)
    }

    pub fn build_with_cap(descriptor: &RingDescriptor, cap: usize) -> Result<Self> {
        descriptor.validate()?;
        match descriptor.size_bound() {
            Some(size) if size <= cap as u128 => {}
            Some(size) => return Err(Error::SizeCapExceeded { size, cap }),
            None => return Err(Error::SizeCapExceeded { size: u128::MAX, cap }),
        }
        let mut ring = Self::realize(descriptor, cap)?;
        ring.cache_tables();
        Ok(ring)
    }

    fn realize(descriptor: &RingDescriptor, cap: usize) -> Result<Self> {
        let ring = match descriptor {
            &RingDescriptor::Zn(n) => FiniteRing {
                descriptor: descriptor.clone(),
                size: n as usize,
                one: 1,
                repr: Repr::Cyclic(n as usize),
                tables: None,
            },
            RingDescriptor::Product(descs) => {
                let factors = descs
                    .iter()
                    .map(|d| Self::build_with_cap(d, cap))
                    .collect::<Result<Vec<_>>>()?;
                let mut strides = Vec::with_capacity(factors.len());
                let mut stride = 1;
                let mut one = 0;
                for f in &factors {
                    strides.push(stride);
                    one += f.one * stride;
                    stride *= f.size;
                }
                FiniteRing {
                    descriptor: descriptor.clone(),
                    size: stride,
                    one,
                    repr: Repr::Product { factors, strides },
                    tables: None,
                }
            }
            &RingDescriptor::TruncPoly { n, k } => FiniteRing {
                descriptor: descriptor.clone(),
                size: (n as usize).pow(k),
                one: 1,
                repr: Repr::TruncPoly {
                    n: n as usize,
                    k: k as usize,
                },
                tables: None,
            },
            &RingDescriptor::Idealize { n, m } => FiniteRing {
                descriptor: descriptor.clone(),
                size: (n * m) as usize,
                one: m as usize,
                repr: Repr::Idealize {
                    n: n as usize,
                    m: m as usize,
                },
                tables: None,
            },
            RingDescriptor::Quotient { base, generators } => {
                let base = Self::build_with_cap(base, cap)?;
                if let Some(&g) = generators.iter().find(|&&g| g >= base.size) {
                    return Err(Error::InvalidDescriptor(format!(
                        "quotient generator {g} is not an element of a ring of size {}",
                        base.size
                    )));
                }
                let ideal = ideal::generate(&base, generators);
                if !ideal.is_proper() {
                    return Err(Error::InvalidDescriptor(
                        "quotient by the whole ring gives the zero ring".into(),
                    ));
                }
                let (representatives, projection) = cosets(&base, &ideal);
                drop(ideal);
                FiniteRing {
                    descriptor: descriptor.clone(),
                    size: representatives.len(),
                    one: projection[base.one],
                    repr: Repr::Quotient {
                        base: Box::new(base),
                        representatives,
                        projection,
                    },
                    tables: None,
                }
            }
        };
        Ok(ring)
    }

    fn cache_tables(&mut self) {
        if self.tables.is_some() || self.size > TABLE_LIMIT {
            return;
        }
        let n = self.size;
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                add.push(self.add_structural(a, b) as u32);
                mul.push(self.mul_structural(a, b) as u32);
            }
        }
        let neg = (0..n).map(|a| self.neg_structural(a) as u32).collect();
        self.tables = Some(Tables { add, mul, neg });
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        &self.descriptor
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> Element {
        0
    }

    pub fn one(&self) -> Element {
        self.one
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.size
    }

    /// Factor rings when this ring was built as a product.
    pub fn factors(&self) -> Option<&[FiniteRing]> {
        match &self.repr {
            Repr::Product { factors, .. } => Some(factors),
            _ => None,
        }
    }

    /// Splits a product-ring element into one index per factor.
    pub fn components(&self, a: Element) -> Option<Vec<Element>> {
        match &self.repr {
            Repr::Product { factors, strides } => Some(
                factors
                    .iter()
                    .zip(strides)
                    .map(|(f, s)| (a / s) % f.size)
                    .collect(),
            ),
            _ => None,
        }
    }

    /// Inverse of [`components`](Self::components).
    pub fn combine(&self, parts: &[Element]) -> Option<Element> {
        match &self.repr {
            Repr::Product { factors, strides } if parts.len() == factors.len() => {
                Some(parts.iter().zip(strides).map(|(p, s)| p * s).sum())
            }
            _ => None,
        }
    }

    /// `(a, v)` for an element of an idealization `Z_n (+) Z_m`.
    pub fn as_pair(&self, a: Element) -> Option<(usize, usize)> {
        match self.repr {
            Repr::Idealize { m, .. } => Some((a / m, a % m)),
            _ => None,
        }
    }

    pub fn from_pair(&self, a: usize, v: usize) -> Option<Element> {
        match self.repr {
            Repr::Idealize { n, m } if a < n && v < m => Some(a * m + v),
            _ => None,
        }
    }

    #[inline]
    pub fn add(&self, a: Element, b: Element) -> Element {
        match &self.tables {
            Some(t) => t.add[a * self.size + b] as Element,
            None => self.add_structural(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        match &self.tables {
            Some(t) => t.mul[a * self.size + b] as Element,
            None => self.mul_structural(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: Element) -> Element {
        match &self.tables {
            Some(t) => t.neg[a] as Element,
            None => self.neg_structural(a),
        }
    }

    pub fn sub(&self, a: Element, b: Element) -> Element {
        self.add(a, self.neg(b))
    }

    /// `a + a`.
    pub fn double(&self, a: Element) -> Element {
        self.add(a, a)
    }

    /// `a^e` for `e >= 1`; `a^0` is taken to be one.
    pub fn pow(&self, a: Element, e: u64) -> Element {
        let mut result = self.one;
        let mut base = a;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    /// An element on the eventual cycle of `a, a^2, a^3, ...`.
    ///
    /// Holds for any `a`: the power sequence is eventually periodic, and zero
    /// (a fixed point) is on the cycle exactly when `a` is nilpotent.
    pub(crate) fn power_cycle_element(&self, a: Element) -> Element {
        let mut slow = a;
        let mut fast = self.mul(a, a);
        while slow != fast {
            slow = self.mul(slow, a);
            fast = self.mul(self.mul(fast, a), a);
        }
        slow
    }

    pub fn is_nilpotent(&self, a: Element) -> bool {
        self.power_cycle_element(a) == 0
    }

    /// Nilpotent elements in ascending index order.
    pub fn nilpotents(&self) -> Vec<Element> {
        self.elements().filter(|&a| self.is_nilpotent(a)).collect()
    }

    pub fn nilradical(&self) -> Ideal<'_> {
        Ideal::from_members_unchecked(self, self.nilpotents())
    }

    pub fn is_reduced(&self) -> bool {
        self.elements().skip(1).all(|a| !self.is_nilpotent(a))
    }

    pub fn units(&self) -> Vec<Element> {
        self.elements()
            .filter(|&a| self.elements().any(|b| self.mul(a, b) == self.one))
            .collect()
    }

    /// `R/I` with cosets indexed by ascending smallest representative.
    pub fn quotient_map(&self, ideal: &Ideal<'_>) -> Result<QuotientMap> {
        if !std::ptr::eq(ideal.ring(), self) && ideal.ring().descriptor() != self.descriptor() {
            return Err(Error::RingMismatch);
        }
        if !ideal.is_proper() {
            return Err(Error::ImproperIdeal);
        }
        let (representatives, projection) = cosets(self, ideal);
        let mut generators = ideal.generators();
        if generators.is_empty() {
            generators.push(0);
        }
        let descriptor = RingDescriptor::quotient(self.descriptor.clone(), generators);
        let mut ring = FiniteRing {
            descriptor,
            size: representatives.len(),
            one: projection[self.one],
            repr: Repr::Quotient {
                base: Box::new(self.clone()),
                representatives,
                projection: projection.clone(),
            },
            tables: None,
        };
        ring.cache_tables();
        Ok(QuotientMap { ring, projection })
    }

    fn add_structural(&self, a: Element, b: Element) -> Element {
        match &self.repr {
            Repr::Cyclic(n) => (a + b) % n,
            Repr::Product { factors, strides } => factors
                .iter()
                .zip(strides)
                .map(|(f, s)| f.add((a / s) % f.size, (b / s) % f.size) * s)
                .sum(),
            Repr::TruncPoly { n, k } => {
                let mut out = 0;
                let (mut a, mut b, mut place) = (a, b, 1);
                for _ in 0..*k {
                    out += ((a % n + b % n) % n) * place;
                    a /= n;
                    b /= n;
                    place *= n;
                }
                out
            }
            Repr::Idealize { n, m } => {
                let (x, v) = (a / m, a % m);
                let (y, w) = (b / m, b % m);
                ((x + y) % n) * m + (v + w) % m
            }
            Repr::Quotient {
                base,
                representatives,
                projection,
            } => projection[base.add(representatives[a], representatives[b])],
        }
    }

    fn mul_structural(&self, a: Element, b: Element) -> Element {
        match &self.repr {
            Repr::Cyclic(n) => (a * b) % n,
            Repr::Product { factors, strides } => factors
                .iter()
                .zip(strides)
                .map(|(f, s)| f.mul((a / s) % f.size, (b / s) % f.size) * s)
                .sum(),
            Repr::TruncPoly { n, k } => {
                let ca = digits(a, *n, *k);
                let cb = digits(b, *n, *k);
                let mut out = vec![0usize; *k];
                for (i, x) in ca.iter().enumerate() {
                    for (j, y) in cb.iter().take(k - i).enumerate() {
                        out[i + j] = (out[i + j] + x * y) % n;
                    }
                }
                out.iter().rev().fold(0, |acc, c| acc * n + c)
            }
            Repr::Idealize { n, m } => {
                let (x, v) = (a / m, a % m);
                let (y, w) = (b / m, b % m);
                ((x * y) % n) * m + (x * w + y * v) % m
            }
            Repr::Quotient {
                base,
                representatives,
                projection,
            } => projection[base.mul(representatives[a], representatives[b])],
        }
    }

    fn neg_structural(&self, a: Element) -> Element {
        match &self.repr {
            Repr::Cyclic(n) => (n - a) % n,
            Repr::Product { factors, strides } => factors
                .iter()
                .zip(strides)
                .map(|(f, s)| f.neg((a / s) % f.size) * s)
                .sum(),
            Repr::TruncPoly { n, k } => digits(a, *n, *k)
                .iter()
                .rev()
                .fold(0, |acc, c| acc * n + (n - c) % n),
            Repr::Idealize { n, m } => ((n - a / m) % n) * m + (m - a % m) % m,
            Repr::Quotient {
                base,
                representatives,
                projection,
            } => projection[base.neg(representatives[a])],
        }
    }
}

fn digits(mut a: usize, n: usize, k: usize) -> Vec<usize> {
    (0..k)
        .map(|_| {
            let d = a % n;
            a /= n;
            d
        })
        .collect()
}

/// Coset representatives (smallest member of each coset, ascending) and the
/// projection from base indices to coset indices.
fn cosets(ring: &FiniteRing, ideal: &Ideal<'_>) -> (Vec<Element>, Vec<Element>) {
    const UNSET: usize = usize::MAX;
    let members: Vec<Element> = ideal.iter().collect();
    let mut projection = vec![UNSET; ring.size()];
    let mut representatives = Vec::with_capacity(ring.size() / members.len());
    for a in ring.elements() {
        if projection[a] != UNSET {
            continue;
        }
        let coset = representatives.len();
        representatives.push(a);
        for &i in &members {
            projection[ring.add(a, i)] = coset;
        }
    }
    (representatives, projection)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: u64) -> FiniteRing {
        FiniteRing::build(&RingDescriptor::Zn(n)).unwrap()
    }

    #[test]
    fn cyclic_basics() {
        let r = zn(8);
        assert_eq!((r.size(), r.zero(), r.one()), (8, 0, 1));
        assert_eq!(r.mul(2, 4), 0);
        assert_eq!(r.add(4, 4), 0);
        assert_eq!(r.neg(3), 5);
        for a in r.elements() {
            assert_eq!(r.mul(r.one(), a), a);
        }
    }

    #[test]
    fn powers() {
        assert_eq!(zn(8).pow(2, 3), 0);
        assert_eq!(zn(12).pow(6, 2), 0);
        assert_eq!(zn(32).pow(2, 5), 0);
        assert_eq!(zn(32).pow(2, 4), 16);
    }

    #[test]
    fn nilpotency() {
        let z8 = zn(8);
        assert!(z8.is_nilpotent(4));
        assert!(!z8.is_nilpotent(3));
        assert!(!zn(6).is_nilpotent(3));
        assert_eq!(z8.nilpotents(), vec![0, 2, 4, 6]);
        assert_eq!(zn(6).nilpotents(), vec![0]);
        assert_eq!(zn(12).nilpotents(), vec![0, 6]);
        assert!(zn(30).is_reduced());
        assert!(!z8.is_reduced());
    }

    #[test]
    fn units_by_pairs() {
        assert_eq!(zn(8).units(), vec![1, 3, 5, 7]);
        assert_eq!(zn(2).units(), vec![1]);
        assert_eq!(zn(12).units(), vec![1, 5, 7, 11]);
    }

    #[test]
    fn product_encoding() {
        let d = RingDescriptor::product([RingDescriptor::Zn(2), RingDescriptor::Zn(3)]);
        let r = FiniteRing::build(&d).unwrap();
        assert_eq!(r.size(), 6);
        // (1, 1) sits at 1 + 2 * 1.
        assert_eq!(r.one(), 3);
        assert_eq!(r.components(5), Some(vec![1, 2]));
        assert_eq!(r.combine(&[1, 2]), Some(5));
        // (1,2) * (1,2) = (1,1)
        assert_eq!(r.mul(5, 5), 3);
        // (1,2) + (1,2) = (0,1)
        assert_eq!(r.add(5, 5), 2);
    }

    #[test]
    fn trunc_poly_encoding() {
        let r = FiniteRing::build(&RingDescriptor::TruncPoly { n: 4, k: 2 }).unwrap();
        assert_eq!(r.size(), 16);
        // x is index 4; x * x = 0 in Z4[x]/(x^2).
        assert_eq!(r.mul(4, 4), 0);
        // (1 + x)(1 + x) = 1 + 2x -> 1 + 2*4
        assert_eq!(r.mul(5, 5), 9);
        assert!(r.is_nilpotent(4));
        let r3 = FiniteRing::build(&RingDescriptor::TruncPoly { n: 2, k: 3 }).unwrap();
        // x * x = x^2 at index 4; x^3 = 0
        assert_eq!(r3.mul(2, 2), 4);
        assert_eq!(r3.mul(4, 2), 0);
    }

    #[test]
    fn idealization_encoding() {
        let r = FiniteRing::build(&RingDescriptor::Idealize { n: 4, m: 2 }).unwrap();
        assert_eq!(r.size(), 8);
        assert_eq!(r.one(), 2);
        let a = r.from_pair(3, 1).unwrap();
        let b = r.from_pair(2, 1).unwrap();
        // (3,1)(2,1) = (6, 3*1 + 2*1) = (2, 1) mod (4, 2)
        assert_eq!(r.as_pair(r.mul(a, b)), Some((2, 1)));
        let v = r.from_pair(0, 1).unwrap();
        assert_eq!(r.mul(v, v), 0);
    }

    #[test]
    fn rejects_bad_descriptors() {
        assert!(matches!(
            FiniteRing::build(&RingDescriptor::Zn(1)),
            Err(Error::InvalidDescriptor(_))
        ));
        assert!(matches!(
            FiniteRing::build(&RingDescriptor::Idealize { n: 4, m: 3 }),
            Err(Error::InvalidDescriptor(_))
        ));
        assert!(matches!(
            FiniteRing::build(&RingDescriptor::quotient(RingDescriptor::Zn(8), vec![8])),
            Err(Error::InvalidDescriptor(_))
        ));
        assert!(matches!(
            FiniteRing::build(&RingDescriptor::quotient(RingDescriptor::Zn(8), vec![3])),
            Err(Error::InvalidDescriptor(_))
        ));
        assert!(matches!(
            FiniteRing::build(&RingDescriptor::Zn(5000)),
            Err(Error::SizeCapExceeded { size: 5000, cap: 4096 })
        ));
        assert!(matches!(
            FiniteRing::build(&RingDescriptor::TruncPoly { n: 64, k: 40 }),
            Err(Error::SizeCapExceeded { .. })
        ));
    }

    #[test]
    fn large_rings_skip_tables() {
        let r = FiniteRing::build(&RingDescriptor::Zn(1000)).unwrap();
        assert!(r.tables.is_none());
        assert_eq!(r.mul(999, 999), 1);
        assert!(zn(256).tables.is_some());
    }

    #[test]
    fn quotient_by_four() {
        let z8 = zn(8);
        let q = z8.quotient_map(&ideal::generate(&z8, &[4])).unwrap();
        assert_eq!(q.ring.size(), 4);
        assert_eq!(q.projection(), &[0, 1, 2, 3, 0, 1, 2, 3]);
        assert_eq!(q.ring.mul(2, 2), 0);
        assert_eq!(q.ring.add(3, 3), 2);
        assert_eq!(
            q.ring.descriptor(),
            &RingDescriptor::quotient(RingDescriptor::Zn(8), vec![4])
        );
    }

    #[test]
    fn quotient_by_zero_is_identity() {
        let z12 = zn(12);
        let q = z12.quotient_map(&Ideal::zero(&z12)).unwrap();
        assert_eq!(q.ring.size(), 12);
        assert!(q.projection().iter().enumerate().all(|(i, &p)| i == p));
        assert!(matches!(
            z12.quotient_map(&Ideal::whole(&z12)),
            Err(Error::ImproperIdeal)
        ));
    }

    #[test]
    fn evaluation_at_zero_kernel() {
        let r = FiniteRing::build(&RingDescriptor::TruncPoly { n: 4, k: 2 }).unwrap();
        let q = r.quotient_map(&ideal::generate(&r, &[4])).unwrap();
        assert_eq!(q.ring.size(), 4);
        // constants 0..4 are their own coset representatives
        for c in 0..4 {
            assert_eq!(q.project(c), c);
            assert_eq!(q.project(c + 4), c);
        }
        for a in q.ring.elements() {
            for b in q.ring.elements() {
                assert_eq!(q.ring.mul(a, b), (a * b) % 4);
            }
        }
    }

    #[test]
    fn nested_quotient_descriptor() {
        let d = RingDescriptor::quotient(
            RingDescriptor::quotient(RingDescriptor::Zn(32), vec![16]),
            vec![4],
        );
        let r = FiniteRing::build(&d).unwrap();
        assert_eq!(r.size(), 4);
    }
}
