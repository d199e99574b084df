mod common;

use common::{set, small_catalog, tau, Oracle, Set};
use nilring::{all_ideals, generate, principal, FiniteRing, Ideal, RingDescriptor};
use proptest::prelude::*;

#[test]
fn lattice_matches_fixpoint_enumeration() {
    for d in small_catalog(64) {
        let r = FiniteRing::build(&d).unwrap();
        let o = Oracle::from_ring(&r);
        let got: Vec<Set> = all_ideals(&r).unwrap().iter().map(set).collect();
        assert_eq!(got, o.ideals(), "{d}");
    }
}

#[test]
fn ideal_count_of_zn_is_divisor_count() {
    for n in 2..=64 {
        let r = FiniteRing::build(&RingDescriptor::Zn(n)).unwrap();
        assert_eq!(all_ideals(&r).unwrap().len(), tau(n), "Z{n}");
    }
}

#[test]
fn lattice_contains_zero_and_whole_once() {
    for d in small_catalog(256) {
        let r = FiniteRing::build(&d).unwrap();
        let l = all_ideals(&r).unwrap();
        assert!(l.get(0).is_zero());
        assert!(!l.get(l.len() - 1).is_proper());
        assert_eq!(l.iter().filter(|i| !i.is_proper()).count(), 1);
        for (k, i) in l.iter().enumerate() {
            assert_eq!(l.position(i), Some(k));
        }
    }
}

#[test]
fn ideal_operations_match_oracles() {
    for d in small_catalog(36) {
        let r = FiniteRing::build(&d).unwrap();
        let o = Oracle::from_ring(&r);
        let l = all_ideals(&r).unwrap();
        for i in &l {
            let si = set(i);
            let radical: Set = r.elements().filter(|&a| (1..=r.size() as u64).any(|k| si.contains(&r.pow(a, k)))).collect();
            assert_eq!(set(&i.radical()), radical, "{d}: rad {i}");
            assert!(i.radical().contains(i).unwrap());
            assert_eq!(i.radical().radical(), i.radical());
            for j in &l {
                let sj = set(j);
                assert_eq!(set(&i.sum(j).unwrap()), o.sum(&si, &sj));
                let products = si.iter().flat_map(|&a| sj.iter().map(move |&b| (a, b)));
                assert_eq!(set(&i.product(j).unwrap()), o.close(products.map(|(a, b)| o.mul[a][b])));
                assert_eq!(set(&i.intersect(j).unwrap()), si.intersection(&sj).copied().collect::<Set>());
                let colon: Set = r.elements().filter(|&x| sj.iter().all(|&b| si.contains(&o.mul[x][b]))).collect();
                assert_eq!(set(&i.colon(j).unwrap()), colon, "{d}: ({i} : {j})");
                assert!(i.intersect(j).unwrap().contains(&i.product(j).unwrap()).unwrap());
            }
        }
        assert_eq!(Ideal::zero(&r).radical(), r.nilradical());
        assert_eq!(set(&r.nilradical()), o.nil());
    }
}

#[test]
fn from_members_rejects_non_ideals() {
    let r = common::build("Z8");
    assert!(Ideal::from_members(&r, [0, 4]).is_ok());
    assert!(Ideal::from_members(&r, [0, 2]).is_err());
    assert!(Ideal::from_members(&r, [4]).is_err());
}

#[test]
fn ideals_of_different_rings_do_not_mix() {
    let a = common::build("Z8");
    let b = common::build("Z4 x Z2");
    let e = Ideal::zero(&a).sum(&Ideal::zero(&b)).unwrap_err();
    assert_eq!(e, nilring::Error::RingMismatch);
}

fn ring_strategy() -> impl Strategy<Value = RingDescriptor> {
    proptest::sample::select(small_catalog(128))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn generate_is_the_smallest_closed_superset(d in ring_strategy(), raw in proptest::collection::vec(any::<usize>(), 0..4)) {
        let r = FiniteRing::build(&d).unwrap();
        let o = Oracle::from_ring(&r);
        let gens: Vec<usize> = raw.iter().map(|g| g % r.size()).collect();
        let i = generate(&r, &gens);
        prop_assert_eq!(set(&i), o.close(gens.iter().copied()));
        prop_assert!(i.is_closed());
        prop_assert_eq!(generate(&r, &i.to_vec()), i.clone());
        prop_assert_eq!(generate(&r, &i.generators()), i.clone());
        let sum = gens.iter().fold(Ideal::zero(&r), |acc, &g| acc.sum(&principal(&r, g)).unwrap());
        prop_assert_eq!(sum, i);
    }
}
