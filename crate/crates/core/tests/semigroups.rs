mod common;

use common::*;
use exposg::semigroup::{frobenius_number, minimal_generators_from_membership, SemigroupKind, SubsemigroupDesc};
use proptest::prelude::*;

fn generators() -> impl Strategy<Value = Vec<u64>> {
    proptest::collection::vec(2u64..=30, 1..=4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn membership_matches_coin_change(gens in generators()) {
        let s = SubsemigroupDesc::from_generators(&gens).unwrap();
        let limit = 400;
        let dp = dp_membership(&gens, limit);
        for (n, &member) in dp.iter().enumerate() {
            prop_assert_eq!(s.contains(n as u64), member, "n = {}", n);
        }
    }

    #[test]
    fn minimal_generators_match_definition(gens in generators()) {
        let s = SubsemigroupDesc::from_generators(&gens).unwrap();
        prop_assert_eq!(s.minimal_generators(), brute_minimal_generators(&gens));
    }

    #[test]
    fn frobenius_matches_dp(gens in generators()) {
        let c = gens.iter().fold(0, |g, &x| gcd(g, x));
        match frobenius_number(&gens) {
            Ok(g) => {
                prop_assert_eq!(c, 1);
                prop_assert_eq!(g, dp_frobenius(&gens));
            }
            Err(_) => prop_assert!(c > 1),
        }
    }

    #[test]
    fn symmetry_by_definition(gens in generators()) {
        let s = SubsemigroupDesc::from_generators(&gens).unwrap();
        if s.kind() != SemigroupKind::Numerical {
            prop_assert!(s.is_symmetric().is_err());
            return Ok(());
        }
        let g = s.frobenius().unwrap();
        let bits = dp_membership(&gens, g as usize + 1);
        let sym = (0..=g).all(|x| bits[x as usize] != bits[(g - x) as usize]);
        let pseudo = g % 2 == 0
            && (0..=g).filter(|&x| 2 * x != g).all(|x| bits[x as usize] != bits[(g - x) as usize]);
        prop_assert_eq!(s.is_symmetric().unwrap(), sym);
        prop_assert_eq!(s.is_pseudosymmetric().unwrap(), pseudo);
        if pseudo {
            prop_assert_eq!(s.numerical_part().unwrap().genus() as i64, (g + 2) / 2);
        }
        if sym {
            prop_assert_eq!(s.numerical_part().unwrap().genus() as i64, (g + 1) / 2);
        }
    }

    #[test]
    fn membership_round_trip(gens in generators()) {
        let s = SubsemigroupDesc::from_generators(&gens).unwrap();
        let data = s.numerical_part().unwrap();
        let rebuilt = minimal_generators_from_membership(data.membership(), data.frobenius()).unwrap();
        prop_assert_eq!(rebuilt.as_slice(), data.minimal_generators());
    }

    #[test]
    fn apery_set_is_least_per_class(gens in generators()) {
        let s = SubsemigroupDesc::from_generators(&gens).unwrap();
        if s.kind() != SemigroupKind::Numerical {
            return Ok(());
        }
        let m = s.multiplicity().unwrap();
        let apery = s.apery_set(m).unwrap();
        let g = s.frobenius().unwrap();
        prop_assert_eq!(*apery.iter().max().unwrap() as i64 - m as i64, g);
        for (res, &w) in apery.iter().enumerate() {
            prop_assert_eq!(w % m, res as u64);
            prop_assert!(s.contains(w));
            prop_assert!(w < m || !s.contains(w - m));
        }
    }
}

#[test]
fn sylvester_formula() {
    let mut g = rng(11);
    let mut checked = 0;
    while checked < 300 {
        let a = rand::Rng::gen_range(&mut g, 2u64..60);
        let b = rand::Rng::gen_range(&mut g, 2u64..60);
        if gcd(a, b) != 1 {
            continue;
        }
        assert_eq!(frobenius_number(&[a, b]).unwrap(), (a * b) as i64 - a as i64 - b as i64);
        assert!(SubsemigroupDesc::from_generators(&[a, b]).unwrap().is_symmetric().unwrap());
        checked += 1;
    }
}

#[test]
fn content_split() {
    let s = SubsemigroupDesc::from_generators(&[15, 21, 33]).unwrap();
    let dp = dp_membership(&[15, 21, 33], 300);
    for (n, &m) in dp.iter().enumerate() {
        assert_eq!(s.contains(n as u64), m);
    }
    assert_eq!(s.to_string(), "⟨15, 21, 33⟩");
}

#[test]
fn parse_generators() {
    assert_eq!(SubsemigroupDesc::parse_generators("0").unwrap(), SubsemigroupDesc::trivial());
    assert_eq!(SubsemigroupDesc::parse_generators(" 20, 9,6 ").unwrap().minimal_generators(), vec![6, 9, 20]);
    assert!(SubsemigroupDesc::parse_generators("3,x").is_err());
}
