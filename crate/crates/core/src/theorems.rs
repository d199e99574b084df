//! Exhaustive checks of the structural theorems about nil-prime, N-prime,
//! nil-maximal, N-maximal and nil-minimal ideals, plus a search for ideals
//! separating neighbouring classes.
//!
//! Each checker counts the instances where its hypothesis holds. An entry is
//! `vacuous` when there were none, so an empty pass is never mistaken for
//! evidence. The first instance whose conclusion fails is kept as the
//! counterexample.
//!
//! | id     | statement |
//! |--------|-----------|
//! | T1     | prime ⇒ nil-prime ⇒ N-prime; nil-prime with `Nil ⊆ P` ⇒ prime; reduced rings: nil-prime ⇔ prime |
//! | T3     | nil-prime ⇒ `√P` prime |
//! | T4a    | `P` nil-prime w.r.t. `x` ⇒ `2x ∈ P` |
//! | T4b    | `P` nil-prime, `a, b ∉ P`, `ab ∈ P` ⇒ `2a ∈ P` or `2b ∈ P` |
//! | T5     | nil-maximal ⇒ N-prime |
//! | T6     | `P` nil-prime, `I ⊆ P` ⇒ `P/I` nil-prime in `R/I` |
//! | T6b    | `Z_n[x]/(x^k)`: `<P, x>` nil-prime ⇒ `P` nil-prime in `Z_n` |
//! | T7a/b  | products: `P1 x ... x Pk` nil-prime ⇔ one `Pj` nil-prime and every other factor whole |
//! | T8     | idealization: `P (+) N` nil-prime w.r.t. `(x, w)`, `N ≠ M` ⇒ `w ∉ N`, `x ∈ P`, `2w ∈ N`, `2(M \ N) ⊆ N` |
//! | T8nil  | `Nil(R (+) M) = Nil(R) (+) M` |
//! | T9a    | `P (+) N` nil-prime ⇒ `P` nil-prime |
//! | T9b    | `P` nil-prime ⇒ `P (+) M` nil-prime |
//! | T10    | `P` N-prime, `I1 I2 (I3) ⊆ P` ⇒ some `Ii ⊆ P + Nil` |
//! | T11    | N-prime ⇒ N-maximal (finite rings are Artinian) |
//! | T12    | nil-minimal, proper, `I ⊄ Nil` ⇒ nil-principal and `(Nil : I)` maximal |
//! | T13    | N-integral domains: N-PID ⇔ every N-prime ideal is N-principal |

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::Classifier;
use crate::error::Result;
use crate::ideal::{self, Ideal};
use crate::ring::{Element, FiniteRing, QuotientMap, RingDescriptor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
}

/// The instance on which a theorem's conclusion failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub clause: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub ideals: Vec<Vec<Element>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub elements: Vec<Element>,
}

/// Nil-maximal ideals and their pairwise nil-distinctness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NilMaximalSummary {
    pub nil_maximal_count: usize,
    pub nil_maximal: Vec<Vec<Element>>,
    pub nil_distinct: Vec<Vec<bool>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremEntry {
    pub id: String,
    pub status: Status,
    pub instances: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<NilMaximalSummary>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub ring: String,
    pub theorems: Vec<TheoremEntry>,
}

impl TheoremReport {
    pub fn failures(&self) -> impl Iterator<Item = &TheoremEntry> {
        self.theorems.iter().filter(|t| t.status == Status::Fail)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn entry(&self, id: &str) -> Option<&TheoremEntry> {
        self.theorems.iter().find(|t| t.id == id)
    }
}

struct Tally {
    id: &'static str,
    instances: u64,
    counterexample: Option<Counterexample>,
}

impl Tally {
    fn new(id: &'static str) -> Self {
        Tally {
            id,
            instances: 0,
            counterexample: None,
        }
    }

    fn record(&mut self, holds: bool, counterexample: impl FnOnce() -> Counterexample) {
        self.instances += 1;
        if !holds && self.counterexample.is_none() {
            self.counterexample = Some(counterexample());
        }
    }

    fn finish(self) -> TheoremEntry {
        let status = match (&self.counterexample, self.instances) {
            (Some(_), _) => Status::Fail,
            (None, 0) => Status::Vacuous,
            (None, _) => Status::Pass,
        };
        TheoremEntry {
            id: self.id.to_string(),
            status,
            instances: self.instances,
            counterexample: self.counterexample,
            details: None,
        }
    }
}

fn cx(clause: &str, ideals: &[&Ideal<'_>], elements: &[Element]) -> Counterexample {
    Counterexample {
        clause: clause.to_string(),
        ideals: ideals.iter().map(|i| i.to_vec()).collect(),
        elements: elements.to_vec(),
    }
}

/// Per-ideal verdicts over the proper ideals of one ring, computed once.
struct Facts<'c, 'r> {
    c: &'c Classifier<'r>,
    proper: Vec<usize>,
    prime: HashMap<usize, bool>,
    nil_prime: HashMap<usize, Vec<Element>>,
    n_prime: HashMap<usize, bool>,
    nil_maximal: HashMap<usize, bool>,
}

impl<'c, 'r> Facts<'c, 'r> {
    fn new(c: &'c Classifier<'r>) -> Result<Self> {
        let lattice = c.lattice();
        let proper: Vec<usize> = (0..lattice.len())
            .filter(|&i| lattice.get(i).is_proper())
            .collect();
        let mut facts = Facts {
            c,
            proper: proper.clone(),
            prime: HashMap::new(),
            nil_prime: HashMap::new(),
            n_prime: HashMap::new(),
            nil_maximal: HashMap::new(),
        };
        for i in proper {
            let p = lattice.get(i);
            facts.prime.insert(i, c.is_prime(p)?);
            facts.nil_prime.insert(i, c.nil_prime_witnesses(p)?);
            facts.n_prime.insert(i, c.is_n_prime(p)?);
            facts.nil_maximal.insert(i, c.is_nil_maximal(p)?);
        }
        Ok(facts)
    }

    fn ideal(&self, i: usize) -> &'c Ideal<'r> {
        self.c.lattice().get(i)
    }

    fn is_nil_prime(&self, i: usize) -> bool {
        self.nil_prime.get(&i).is_some_and(|w| !w.is_empty())
    }
}

fn t1_hierarchy(f: &Facts<'_, '_>) -> TheoremEntry {
    let mut t = Tally::new("T1");
    let nil = f.c.nilradical();
    let reduced = nil.is_zero();
    for &i in &f.proper {
        let p = f.ideal(i);
        let (prime, nil_prime, n_prime) = (f.prime[&i], f.is_nil_prime(i), f.n_prime[&i]);
        t.record(!prime || nil_prime, || cx("prime => nil-prime", &[p], &[]));
        t.record(!nil_prime || n_prime, || cx("nil-prime => N-prime", &[p], &[]));
        if nil_prime && p.includes(nil) {
            t.record(prime, || cx("nil-prime and Nil(R) ⊆ P => prime", &[p], &[]));
        }
        if reduced {
            t.record(prime == nil_prime, || {
                cx("reduced ring: nil-prime <=> prime", &[p], &[])
            });
        }
    }
    t.finish()
}

fn t3_radical(f: &Facts<'_, '_>) -> Result<TheoremEntry> {
    let mut t = Tally::new("T3");
    for &i in &f.proper {
        if !f.is_nil_prime(i) {
            continue;
        }
        let p = f.ideal(i);
        let radical = p.radical();
        let holds = radical.is_proper() && f.c.is_prime(&radical)?;
        t.record(holds, || cx("nil-prime => radical prime", &[p], &[]));
    }
    Ok(t.finish())
}

fn t4_doubling(f: &Facts<'_, '_>) -> Result<[TheoremEntry; 2]> {
    let r = f.c.ring();
    let mut wit = Tally::new("T4a");
    let mut pairs = Tally::new("T4b");
    for &i in &f.proper {
        let Some(witnesses) = f.nil_prime.get(&i).filter(|w| !w.is_empty()) else {
            continue;
        };
        let p = f.ideal(i);
        for &x in witnesses {
            wit.record(p.contains_element(r.double(x)), || {
                cx("nil-prime w.r.t. x => 2x ∈ P", &[p], &[x])
            });
        }
        for (a, b) in f.c.violating_pairs(p)? {
            let holds = p.contains_element(r.double(a)) || p.contains_element(r.double(b));
            pairs.record(holds, || {
                cx("nil-prime, a,b ∉ P, ab ∈ P => 2a ∈ P or 2b ∈ P", &[p], &[a, b])
            });
        }
    }
    Ok([wit.finish(), pairs.finish()])
}

fn t5_nil_maximal(f: &Facts<'_, '_>) -> TheoremEntry {
    let mut t = Tally::new("T5");
    for &i in &f.proper {
        if f.nil_maximal[&i] {
            t.record(f.n_prime[&i], || cx("nil-maximal => N-prime", &[f.ideal(i)], &[]));
        }
    }
    t.finish()
}

fn t6_quotients(f: &Facts<'_, '_>) -> Result<TheoremEntry> {
    let mut t = Tally::new("T6");
    let lattice = f.c.lattice();
    let ring = f.c.ring();
    let nil_primes: Vec<usize> = f.proper.iter().copied().filter(|&i| f.is_nil_prime(i)).collect();
    let kernels: Vec<usize> = (0..lattice.len())
        .filter(|&k| nil_primes.iter().any(|&p| f.ideal(p).includes(lattice.get(k))))
        .collect();
    let quotients: Vec<QuotientMap> = kernels
        .iter()
        .map(|&k| ring.quotient_map(lattice.get(k)))
        .collect::<Result<_>>()?;
    for (q, &k) in quotients.iter().zip(&kernels) {
        let qc = Classifier::new(&q.ring)?;
        let kernel = lattice.get(k);
        for &p in &nil_primes {
            let p = f.ideal(p);
            if !p.includes(kernel) {
                continue;
            }
            let image = Ideal::from_members_unchecked(&q.ring, p.iter().map(|a| q.project(a)));
            let holds = image.is_proper() && qc.is_nil_prime(&image)?;
            t.record(holds, || cx("nil-prime P ⊇ I => P/I nil-prime", &[p, kernel], &[]));
        }
    }
    Ok(t.finish())
}

/// `<P, x>` in `Z_n[x]/(x^k)` for an ideal `P` of `Z_n`.
fn poly_extension<'r>(poly: &'r FiniteRing, n: u64, k: u32, p: &Ideal<'_>) -> Ideal<'r> {
    let x = if k >= 2 { n as Element } else { 0 };
    let mut gens = p.generators();
    gens.push(x);
    ideal::generate(poly, &gens)
}

fn t6b_polynomial(ring: &FiniteRing, c: &Classifier<'_>, n: u64, k: u32) -> Result<TheoremEntry> {
    let mut t = Tally::new("T6b");
    let base = FiniteRing::build(&RingDescriptor::Zn(n))?;
    let bc = Classifier::new(&base)?;
    for p in bc.lattice().proper() {
        let extended = poly_extension(ring, n, k, p);
        if extended.is_proper() && c.is_nil_prime(&extended)? {
            t.record(bc.is_nil_prime(p)?, || {
                cx("<P, x> nil-prime => P nil-prime", &[p, &extended], &[])
            });
        }
    }
    Ok(t.finish())
}

/// Projections of a product-ring ideal onto each factor.
fn factor_projections<'f>(ring: &FiniteRing, factors: &'f [FiniteRing], i: &Ideal<'_>) -> Vec<Ideal<'f>> {
    let comps: Vec<Vec<Element>> = i.iter().map(|a| ring.components(a).unwrap_or_default()).collect();
    factors
        .iter()
        .enumerate()
        .map(|(j, f)| Ideal::from_members_unchecked(f, comps.iter().map(|c| c[j])))
        .collect()
}

fn is_box(ring: &FiniteRing, i: &Ideal<'_>, parts: &[Ideal<'_>]) -> bool {
    let expected: usize = parts.iter().map(|p| p.len()).product();
    expected == i.len()
        && i.iter().all(|a| {
            ring.components(a)
                .unwrap_or_default()
                .iter()
                .zip(parts)
                .all(|(x, p)| p.contains_element(*x))
        })
}

fn t7_products(ring: &FiniteRing, c: &Classifier<'_>, factors: &[FiniteRing]) -> Result<[TheoremEntry; 2]> {
    let mut forward = Tally::new("T7a");
    let mut backward = Tally::new("T7b");
    let fcs: Vec<Classifier<'_>> = factors.iter().map(Classifier::new).collect::<Result<_>>()?;
    let expected: usize = fcs.iter().map(|fc| fc.lattice().len()).product();
    if expected != c.lattice().len() {
        forward.record(false, || Counterexample {
            clause: format!(
                "ideal count {} differs from the product of factor ideal counts {expected}",
                c.lattice().len()
            ),
            ideals: Vec::new(),
            elements: Vec::new(),
        });
    }
    for i in c.lattice() {
        let parts = factor_projections(ring, factors, i);
        if !is_box(ring, i, &parts) {
            forward.record(false, || cx("every ideal is a product of factor ideals", &[i], &[]));
            continue;
        }
        let nil_prime = i.is_proper() && c.is_nil_prime(i)?;
        let mut factor_form = false;
        for (j, pj) in parts.iter().enumerate() {
            let others_whole = parts
                .iter()
                .enumerate()
                .all(|(l, pl)| l == j || !pl.is_proper());
            if others_whole && pj.is_proper() && fcs[j].is_nil_prime(pj)? {
                factor_form = true;
            }
        }
        if nil_prime {
            forward.record(factor_form, || {
                cx("nil-prime => one factor nil-prime, the rest whole", &[i], &[])
            });
        }
        if factor_form {
            backward.record(nil_prime, || {
                cx("one factor nil-prime, the rest whole => nil-prime", &[i], &[])
            });
        }
    }
    Ok([forward.finish(), backward.finish()])
}

/// Submodule `d Z_m` of `Z_m` for each divisor `d` of `m`, ascending in `d`.
fn cyclic_submodules(m: usize) -> Vec<Vec<usize>> {
    (1..=m)
        .filter(|d| m.is_multiple_of(*d))
        .map(|d| (0..m).step_by(d).collect())
        .collect()
}

fn homogeneous<'r>(ring: &'r FiniteRing, p: &Ideal<'_>, n_sub: &[usize]) -> Result<Ideal<'r>> {
    let members = p
        .iter()
        .flat_map(|a| n_sub.iter().map(move |&v| (a, v)))
        .filter_map(|(a, v)| ring.from_pair(a, v));
    Ideal::from_members(ring, members)
}

fn t8_t9_idealization(ring: &FiniteRing, c: &Classifier<'_>, n: u64, m: u64) -> Result<[TheoremEntry; 4]> {
    let mu = m as usize;
    let base = FiniteRing::build(&RingDescriptor::Zn(n))?;
    let bc = Classifier::new(&base)?;
    let submodules = cyclic_submodules(mu);
    let whole_module: Vec<usize> = (0..mu).collect();

    let mut nil_law = Tally::new("T8nil");
    let expected: Vec<Element> = bc
        .nilpotents()
        .iter()
        .flat_map(|&a| (0..mu).filter_map(move |v| ring.from_pair(a, v)))
        .collect();
    let mut expected = expected;
    expected.sort_unstable();
    nil_law.record(c.nilpotents() == expected.as_slice(), || {
        cx("Nil(R (+) M) = Nil(R) (+) M", &[c.nilradical()], &[])
    });

    let mut props = Tally::new("T8");
    let mut down = Tally::new("T9a");
    let mut up = Tally::new("T9b");
    for p in bc.lattice() {
        for sub in &submodules {
            let absorbs = p
                .iter()
                .all(|a| (0..mu).all(|v| sub.contains(&((a * v) % mu))));
            if !absorbs {
                continue;
            }
            let h = homogeneous(ring, p, sub)?;
            if !h.is_proper() {
                continue;
            }
            let witnesses = c.nil_prime_witnesses(&h)?;
            if witnesses.is_empty() {
                continue;
            }
            let proper_sub = sub.len() < mu;
            if proper_sub {
                for &wi in &witnesses {
                    let (x, w) = ring.as_pair(wi).unwrap_or_default();
                    let holds = !sub.contains(&w)
                        && p.contains_element(x)
                        && sub.contains(&((2 * w) % mu))
                        && (0..mu)
                            .filter(|v| !sub.contains(v))
                            .all(|v| sub.contains(&((2 * v) % mu)));
                    props.record(holds, || {
                        cx("P (+) N nil-prime w.r.t. (x, w) => w ∉ N, x ∈ P, 2w ∈ N, 2(M \\ N) ⊆ N", &[p, &h], &[wi])
                    });
                }
            }
            let holds = p.is_proper() && bc.is_nil_prime(p)?;
            down.record(holds, || cx("P (+) N nil-prime => P nil-prime", &[p, &h], &[]));
        }
        if p.is_proper() && bc.is_nil_prime(p)? {
            let h = homogeneous(ring, p, &whole_module)?;
            let holds = h.is_proper() && c.is_nil_prime(&h)?;
            up.record(holds, || cx("P nil-prime => P (+) M nil-prime", &[p, &h], &[]));
        }
    }
    Ok([nil_law.finish(), props.finish(), down.finish(), up.finish()])
}

#[allow(clippy::needless_range_loop)]
fn t10_ideal_products(f: &Facts<'_, '_>) -> Result<TheoremEntry> {
    let mut t = Tally::new("T10");
    let c = f.c;
    let lattice = c.lattice();
    let l = lattice.len();
    let mut product = vec![vec![0usize; l]; l];
    for i in 0..l {
        for j in i..l {
            let prod = lattice.get(i).product_unchecked(lattice.get(j));
            let k = lattice
                .position(&prod)
                .expect("products of ideals are ideals in the lattice");
            product[i][j] = k;
            product[j][i] = k;
        }
    }
    for &pi in &f.proper {
        if !f.n_prime[&pi] {
            continue;
        }
        let p = f.ideal(pi);
        let p_nil = c.plus_nil(p)?;
        let within = |k: usize| p_nil.includes(lattice.get(k));
        for i in 0..l {
            for j in i..l {
                let ij = product[i][j];
                if p.includes(lattice.get(ij)) {
                    t.record(within(i) || within(j), || {
                        cx("I1 I2 ⊆ P => some Ii ⊆ P + Nil(R)", &[p, lattice.get(i), lattice.get(j)], &[])
                    });
                }
                for k in j..l {
                    if p.includes(lattice.get(product[ij][k])) {
                        t.record(within(i) || within(j) || within(k), || {
                            cx(
                                "I1 I2 I3 ⊆ P => some Ii ⊆ P + Nil(R)",
                                &[p, lattice.get(i), lattice.get(j), lattice.get(k)],
                                &[],
                            )
                        });
                    }
                }
            }
        }
    }
    Ok(t.finish())
}

fn t11_artinian(f: &Facts<'_, '_>) -> Result<TheoremEntry> {
    let mut t = Tally::new("T11");
    let c = f.c;
    for &i in &f.proper {
        if f.n_prime[&i] {
            let p = f.ideal(i);
            t.record(c.is_n_maximal(p)?, || cx("N-prime => N-maximal", &[p], &[]));
        }
    }
    let nil_max: Vec<&Ideal<'_>> = f
        .proper
        .iter()
        .filter(|&&i| f.nil_maximal[&i])
        .map(|&i| f.ideal(i))
        .collect();
    let mut distinct = Vec::with_capacity(nil_max.len());
    for a in &nil_max {
        let row = nil_max
            .iter()
            .map(|b| c.nil_distinct(a, b))
            .collect::<Result<Vec<_>>>()?;
        distinct.push(row);
    }
    let mut entry = t.finish();
    entry.details = Some(NilMaximalSummary {
        nil_maximal_count: nil_max.len(),
        nil_maximal: nil_max.iter().map(|i| i.to_vec()).collect(),
        nil_distinct: distinct,
    });
    Ok(entry)
}

fn t12_nil_minimal(f: &Facts<'_, '_>) -> Result<TheoremEntry> {
    let mut t = Tally::new("T12");
    let c = f.c;
    let nil = c.nilradical();
    for &i in &f.proper {
        let ideal = f.ideal(i);
        if ideal.is_zero() || nil.includes(ideal) || !c.is_nil_minimal(ideal)? {
            continue;
        }
        let principal = c.nil_principal_witness(ideal)?.is_some();
        let colon = nil.colon_unchecked(ideal);
        let maximal = colon.is_proper() && c.is_maximal(&colon)?;
        t.record(principal && maximal, || {
            cx("nil-minimal, I ⊄ Nil(R) => nil-principal and (Nil(R) : I) maximal", &[ideal], &[])
        });
    }
    Ok(t.finish())
}

fn t13_n_pid(f: &Facts<'_, '_>) -> Result<TheoremEntry> {
    let mut t = Tally::new("T13");
    let c = f.c;
    if c.is_n_integral_domain() {
        let pid = c.is_n_pid()?;
        let mut primes_principal = true;
        for &i in &f.proper {
            if f.n_prime[&i] && c.n_principal_witness(f.ideal(i))?.is_none() {
                primes_principal = false;
            }
        }
        t.record(pid == primes_principal, || Counterexample {
            clause: format!(
                "N-PID ({pid}) <=> every N-prime ideal N-principal ({primes_principal})"
            ),
            ideals: Vec::new(),
            elements: Vec::new(),
        });
    }
    Ok(t.finish())
}

/// Runs every theorem that applies to `ring`, in id order.
pub fn verify_all(ring: &FiniteRing) -> Result<TheoremReport> {
    let c = Classifier::new(ring)?;
    let f = Facts::new(&c)?;
    let mut theorems = vec![t1_hierarchy(&f), t3_radical(&f)?];
    theorems.extend(t4_doubling(&f)?);
    theorems.push(t5_nil_maximal(&f));
    theorems.push(t6_quotients(&f)?);
    match *ring.descriptor() {
        RingDescriptor::TruncPoly { n, k } => theorems.push(t6b_polynomial(ring, &c, n, k)?),
        RingDescriptor::Idealize { n, m } => theorems.extend(t8_t9_idealization(ring, &c, n, m)?),
        _ => {}
    }
    if let Some(factors) = ring.factors() {
        theorems.extend(t7_products(ring, &c, factors)?);
    }
    theorems.push(t10_ideal_products(&f)?);
    theorems.push(t11_artinian(&f)?);
    theorems.push(t12_nil_minimal(&f)?);
    theorems.push(t13_n_pid(&f)?);
    theorems.sort_by_key(|t| theorem_order(&t.id));
    Ok(TheoremReport {
        ring: ring.descriptor().to_string(),
        theorems,
    })
}

fn theorem_order(id: &str) -> (u32, String) {
    let digits: String = id[1..].chars().take_while(char::is_ascii_digit).collect();
    (digits.parse().unwrap_or(u32::MAX), id.to_string())
}

/// Verifies every catalog ring. Reports are sorted by ring text whether or
/// not the work is spread across threads.
pub fn verify_catalog(catalog: &[RingDescriptor], cap: usize, parallel: bool) -> Result<Vec<TheoremReport>> {
    let one = |d: &RingDescriptor| verify_all(&FiniteRing::build_with_cap(d, cap)?);
    let mut reports: Vec<TheoremReport> = if parallel {
        catalog.par_iter().map(one).collect::<Result<_>>()?
    } else {
        catalog.iter().map(one).collect::<Result<_>>()?
    };
    reports.sort_by(|a, b| a.ring.cmp(&b.ring));
    Ok(reports)
}

/// Re-checks a counterexample from scratch: true when the theorem's
/// hypothesis holds on the payload and its conclusion does not.
pub fn revalidate(ring: &FiniteRing, id: &str, cx: &Counterexample) -> Result<bool> {
    let c = Classifier::new(ring)?;
    let ideal = |k: usize| -> Option<Ideal<'_>> {
        cx.ideals.get(k).and_then(|m| Ideal::from_members(ring, m.iter().copied()).ok())
    };
    let nil_prime = |p: &Ideal<'_>| -> Result<bool> { Ok(p.is_proper() && c.is_nil_prime(p)?) };
    let n_prime = |p: &Ideal<'_>| -> Result<bool> { Ok(p.is_proper() && c.is_n_prime(p)?) };
    let Some(p) = ideal(0) else {
        return Ok(false);
    };
    let verdict = match id {
        "T1" => {
            let prime = p.is_proper() && c.is_prime(&p)?;
            let np = nil_prime(&p)?;
            (prime && !np)
                || (np && !n_prime(&p)?)
                || (np && p.includes(c.nilradical()) && !prime)
                || (c.nilradical().is_zero() && p.is_proper() && prime != np)
        }
        "T3" => {
            let rad = p.radical();
            nil_prime(&p)? && !(rad.is_proper() && c.is_prime(&rad)?)
        }
        "T4a" => match cx.elements.as_slice() {
            &[x] => {
                p.is_proper()
                    && c.nil_prime_witnesses(&p)?.contains(&x)
                    && !p.contains_element(ring.double(x))
            }
            _ => false,
        },
        "T4b" => match cx.elements.as_slice() {
            &[a, b] => {
                nil_prime(&p)?
                    && !p.contains_element(a)
                    && !p.contains_element(b)
                    && p.contains_element(ring.mul(a, b))
                    && !p.contains_element(ring.double(a))
                    && !p.contains_element(ring.double(b))
            }
            _ => false,
        },
        "T5" => p.is_proper() && c.is_nil_maximal(&p)? && !c.is_n_prime(&p)?,
        "T6" => match ideal(1) {
            Some(kernel) if nil_prime(&p)? && p.includes(&kernel) => {
                let q = ring.quotient_map(&kernel)?;
                let qc = Classifier::new(&q.ring)?;
                let image = Ideal::from_members_unchecked(&q.ring, p.iter().map(|a| q.project(a)));
                !(image.is_proper() && qc.is_nil_prime(&image)?)
            }
            _ => false,
        },
        "T10" => {
            let factors: Vec<Ideal<'_>> = (1..cx.ideals.len()).filter_map(ideal).collect();
            if factors.len() + 1 != cx.ideals.len() || factors.is_empty() || !n_prime(&p)? {
                false
            } else {
                let mut prod = factors[0].clone();
                for f in &factors[1..] {
                    prod = prod.product_unchecked(f);
                }
                let p_nil = c.plus_nil(&p)?;
                p.includes(&prod) && factors.iter().all(|f| !p_nil.includes(f))
            }
        }
        "T11" => n_prime(&p)? && !c.is_n_maximal(&p)?,
        "T12" => {
            let nil = c.nilradical();
            if !p.is_proper() || p.is_zero() || nil.includes(&p) || !c.is_nil_minimal(&p)? {
                false
            } else {
                let colon = nil.colon_unchecked(&p);
                c.nil_principal_witness(&p)?.is_none()
                    || !(colon.is_proper() && c.is_maximal(&colon)?)
            }
        }
        "T7a" | "T7b" => match ring.factors() {
            Some(factors) => {
                let parts = factor_projections(ring, factors, &p);
                let mut factor_form = false;
                for (j, pj) in parts.iter().enumerate() {
                    let others = parts.iter().enumerate().all(|(l, pl)| l == j || !pl.is_proper());
                    if others && pj.is_proper() && Classifier::new(&factors[j])?.is_nil_prime(pj)? {
                        factor_form = true;
                    }
                }
                let np = nil_prime(&p)?;
                if id == "T7a" {
                    np && !factor_form
                } else {
                    factor_form && !np
                }
            }
            None => false,
        },
        _ => false,
    };
    Ok(verdict)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparatorInstance {
    pub ring: String,
    pub ideal: Vec<Element>,
}

/// Ideals satisfying `holds` but not `fails` across a catalog.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparatorResult {
    pub holds: &'static str,
    pub fails: &'static str,
    pub found: bool,
    /// First instance in catalog order, then lattice order.
    pub witness: Option<SeparatorInstance>,
    /// Every instance, in the same order.
    pub instances: Vec<SeparatorInstance>,
}

/// The separator pairs searched for, strongest class second.
pub const SEPARATOR_PAIRS: [(&str, &str); 4] = [
    ("nil_prime", "prime"),
    ("n_prime", "nil_prime"),
    ("n_maximal", "nil_maximal"),
    ("n_principal", "nil_principal"),
];

/// Searches the catalog in the given order, each ring's ideals in lattice
/// order. Prime-like and maximal-like pairs range over proper ideals, the
/// principal pair over all ideals.
pub fn find_separators(catalog: &[RingDescriptor], cap: usize) -> Result<Vec<SeparatorResult>> {
    let mut results: Vec<SeparatorResult> = SEPARATOR_PAIRS
        .iter()
        .map(|&(holds, fails)| SeparatorResult {
            holds,
            fails,
            found: false,
            witness: None,
            instances: Vec::new(),
        })
        .collect();
    for d in catalog {
        let ring = FiniteRing::build_with_cap(d, cap)?;
        let c = Classifier::new(&ring)?;
        let name = d.to_string();
        for i in c.lattice() {
            let mut hits = [false; 4];
            if i.is_proper() {
                let prime = c.is_prime(i)?;
                let nil_prime = c.is_nil_prime(i)?;
                hits[0] = nil_prime && !prime;
                hits[1] = c.is_n_prime(i)? && !nil_prime;
                hits[2] = c.is_n_maximal(i)? && !c.is_nil_maximal(i)?;
            }
            hits[3] = c.n_principal_witness(i)?.is_some() && c.nil_principal_witness(i)?.is_none();
            for (res, hit) in results.iter_mut().zip(hits) {
                if hit {
                    res.instances.push(SeparatorInstance {
                        ring: name.clone(),
                        ideal: i.to_vec(),
                    });
                }
            }
        }
    }
    for res in &mut results {
        res.found = !res.instances.is_empty();
        res.witness = res.instances.first().cloned();
    }
    Ok(results)
}
