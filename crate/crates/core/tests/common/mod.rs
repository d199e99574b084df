//! Brute-force oracles. Arithmetic is rebuilt from the descriptor's
//! encoding, ideals are naive fixpoint closures over `BTreeSet`s, and the
//! predicates are read straight off their definitions.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use nilring::{FiniteRing, RingDescriptor};

pub type Set = BTreeSet<usize>;

/// Operation tables for a ring, computed without touching `FiniteRing`.
pub struct Oracle {
    pub n: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
}

fn tables(n: usize, add: impl Fn(usize, usize) -> usize, mul: impl Fn(usize, usize) -> usize) -> Oracle {
    Oracle {
        n,
        add: (0..n).map(|a| (0..n).map(|b| add(a, b)).collect()).collect(),
        mul: (0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect(),
    }
}

impl Oracle {
    /// Fails for quotients, whose coset numbering belongs to the library.
    pub fn from_descriptor(d: &RingDescriptor) -> Option<Oracle> {
        Some(match d {
            RingDescriptor::Zn(n) => {
                let n = *n as usize;
                tables(n, |a, b| (a + b) % n, |a, b| (a * b) % n)
            }
            RingDescriptor::Product(fs) => {
                let parts: Vec<Oracle> = fs.iter().map(Oracle::from_descriptor).collect::<Option<_>>()?;
                let sizes: Vec<usize> = parts.iter().map(|p| p.n).collect();
                let n: usize = sizes.iter().product();
                let split = |mut a: usize| {
                    sizes
                        .iter()
                        .map(|s| {
                            let c = a % s;
                            a /= s;
                            c
                        })
                        .collect::<Vec<_>>()
                };
                let join = |cs: Vec<usize>| cs.iter().zip(&sizes).rev().fold(0, |acc, (c, s)| acc * s + c);
                let (parts, split, join) = (&parts, &split, &join);
                let op = |t: fn(&Oracle) -> &Vec<Vec<usize>>| {
                    move |a: usize, b: usize| {
                        let (x, y) = (split(a), split(b));
                        join((0..parts.len()).map(|i| t(&parts[i])[x[i]][y[i]]).collect())
                    }
                };
                tables(n, op(|o| &o.add), op(|o| &o.mul))
            }
            RingDescriptor::TruncPoly { n, k } => {
                let (n, k) = (*n as usize, *k as usize);
                let size = n.pow(k as u32);
                let coeffs = |mut a: usize| {
                    (0..k)
                        .map(|_| {
                            let c = a % n;
                            a /= n;
                            c
                        })
                        .collect::<Vec<_>>()
                };
                let join = |cs: &[usize]| cs.iter().rev().fold(0, |acc, c| acc * n + c);
                tables(
                    size,
                    |a, b| {
                        let (x, y) = (coeffs(a), coeffs(b));
                        join(&(0..k).map(|i| (x[i] + y[i]) % n).collect::<Vec<_>>())
                    },
                    |a, b| {
                        let (x, y) = (coeffs(a), coeffs(b));
                        let mut z = vec![0; k];
                        for i in 0..k {
                            for j in 0..k - i {
                                z[i + j] = (z[i + j] + x[i] * y[j]) % n;
                            }
                        }
                        join(&z)
                    },
                )
            }
            RingDescriptor::Idealize { n, m } => {
                let (n, m) = (*n as usize, *m as usize);
                tables(
                    n * m,
                    |a, b| ((a / m + b / m) % n) * m + (a % m + b % m) % m,
                    |a, b| {
                        let (r, v, s, w) = (a / m, a % m, b / m, b % m);
                        ((r * s) % n) * m + (r * w + s * v) % m
                    },
                )
            }
            RingDescriptor::Quotient { .. } => return None,
        })
    }

    /// Tables read off a built ring, for rings the oracle cannot encode.
    pub fn from_ring(r: &FiniteRing) -> Oracle {
        tables(r.size(), |a, b| r.add(a, b), |a, b| r.mul(a, b))
    }

    pub fn nilpotent(&self, a: usize) -> bool {
        let mut p = a;
        for _ in 0..=self.n {
            if p == 0 {
                return true;
            }
            p = self.mul[p][a];
        }
        false
    }

    pub fn nil(&self) -> Set {
        (0..self.n).filter(|&a| self.nilpotent(a)).collect()
    }

    /// Smallest subset containing `gens` closed under `+` and ring
    /// multiplication, by repeated sweeps.
    pub fn close(&self, gens: impl IntoIterator<Item = usize>) -> Set {
        let mut s: Set = gens.into_iter().collect();
        s.insert(0);
        loop {
            let mut next = s.clone();
            for &a in &s {
                for &b in &s {
                    next.insert(self.add[a][b]);
                }
                for r in 0..self.n {
                    next.insert(self.mul[r][a]);
                }
            }
            if next.len() == s.len() {
                return s;
            }
            s = next;
        }
    }

    pub fn sum(&self, i: &Set, j: &Set) -> Set {
        i.iter().flat_map(|&a| j.iter().map(move |&b| self.add[a][b])).collect()
    }

    /// Every ideal, as the closure of every nonempty set of principals,
    /// grown one generator at a time until nothing new appears.
    pub fn ideals(&self) -> Vec<Set> {
        let principals: Vec<Set> = (0..self.n).map(|a| self.close([a])).collect();
        let mut found: HashSet<Set> = principals.iter().cloned().collect();
        let mut frontier: Vec<Set> = found.iter().cloned().collect();
        while let Some(i) = frontier.pop() {
            for p in &principals {
                let j = self.sum(&i, p);
                if found.insert(j.clone()) {
                    frontier.push(j);
                }
            }
        }
        let mut v: Vec<Set> = found.into_iter().collect();
        v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        v
    }

    pub fn prime(&self, p: &Set) -> bool {
        (0..self.n).all(|a| {
            (0..self.n).all(|b| !p.contains(&self.mul[a][b]) || p.contains(&a) || p.contains(&b))
        })
    }

    pub fn maximal(&self, m: &Set, ideals: &[Set]) -> bool {
        ideals.iter().all(|i| !i.is_superset(m) || i == m || i.len() == self.n)
    }

    pub fn nil_prime_witnesses(&self, p: &Set) -> Vec<usize> {
        self.nil()
            .into_iter()
            .filter(|&x| {
                (0..self.n).all(|a| {
                    (0..self.n).all(|b| {
                        !p.contains(&self.mul[a][b])
                            || p.contains(&a)
                            || p.contains(&b)
                            || p.contains(&self.add[a][x])
                            || p.contains(&self.add[b][x])
                    })
                })
            })
            .collect()
    }

    pub fn n_prime(&self, p: &Set) -> bool {
        let pn = self.sum(p, &self.nil());
        (0..self.n).all(|a| {
            (0..self.n).all(|b| !p.contains(&self.mul[a][b]) || pn.contains(&a) || pn.contains(&b))
        })
    }

    pub fn nil_maximal_witnesses(&self, m: &Set, ideals: &[Set]) -> Vec<usize> {
        self.nil()
            .into_iter()
            .filter(|&x| {
                let mx = self.sum(m, &self.close([x]));
                ideals
                    .iter()
                    .filter(|i| i.is_superset(m))
                    .all(|i| i == m || *i == mx || i.len() == self.n)
            })
            .collect()
    }

    pub fn n_maximal(&self, m: &Set, ideals: &[Set]) -> bool {
        let nil = self.nil();
        let mn = self.sum(m, &nil);
        ideals
            .iter()
            .filter(|i| i.is_superset(m))
            .all(|i| self.sum(i, &nil).len() == self.n || mn.is_superset(i))
    }

    pub fn nil_minimal_witnesses(&self, i: &Set, ideals: &[Set]) -> Vec<usize> {
        self.nil()
            .into_iter()
            .filter(|&x| {
                let rx = self.close([x]);
                ideals
                    .iter()
                    .filter(|j| i.is_superset(j))
                    .all(|j| self.sum(j, &rx) == *i || *j == rx)
            })
            .collect()
    }

    pub fn nil_principal(&self, i: &Set) -> bool {
        let nil = self.nil();
        (0..self.n).any(|r| {
            let rr = self.close([r]);
            nil.iter().any(|&x| self.sum(&rr, &self.close([x])) == *i)
        })
    }

    pub fn n_principal(&self, i: &Set) -> bool {
        let nil = self.nil();
        (0..self.n).any(|r| self.sum(&self.close([r]), &nil).is_superset(i))
    }

    pub fn ring_axiom_violation(&self) -> Option<String> {
        let n = self.n;
        let (add, mul) = (&self.add, &self.mul);
        if !(0..n).any(|e| (0..n).all(|a| mul[e][a] == a)) {
            return Some("no multiplicative identity".into());
        }
        for a in 0..n {
            if add[0][a] != a || !(0..n).any(|b| add[a][b] == 0) {
                return Some(format!("additive identity or inverse at {a}"));
            }
            for b in 0..n {
                if add[a][b] != add[b][a] || mul[a][b] != mul[b][a] {
                    return Some(format!("commutativity at {a}, {b}"));
                }
                for c in 0..n {
                    if add[add[a][b]][c] != add[a][add[b][c]]
                        || mul[mul[a][b]][c] != mul[a][mul[b][c]]
                        || mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]
                    {
                        return Some(format!("associativity or distributivity at {a}, {b}, {c}"));
                    }
                }
            }
        }
        None
    }
}

/// Divisor count by trial division.
pub fn tau(n: u64) -> usize {
    (1..=n).filter(|d| n.is_multiple_of(*d)).count()
}

pub fn build(text: &str) -> FiniteRing {
    FiniteRing::build(&nilring::parse(text).unwrap()).unwrap()
}

/// Catalog rings small enough for the cubic oracles.
pub fn small_catalog(limit: usize) -> Vec<RingDescriptor> {
    nilring::default_catalog()
        .into_iter()
        .filter(|d| d.size_bound().is_some_and(|s| s <= limit as u128))
        .collect()
}

pub fn set(i: &nilring::Ideal<'_>) -> Set {
    i.iter().collect()
}
