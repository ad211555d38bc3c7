mod common;

use common::*;
use exposg::matrix::RationalMatrix;
use exposg::poly::Polynomial;
use exposg::rational::Rational;
use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use proptest::prelude::*;

fn small_matrix(max_dim: usize) -> impl Strategy<Value = RationalMatrix> {
    (1..=max_dim).prop_flat_map(|d| {
        proptest::collection::vec((-9i64..=9, 1i64..=6), d * d).prop_map(move |cells| {
            let entries = cells.into_iter().map(|(n, q)| r(n, q)).collect();
            RationalMatrix::new(d, entries).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn char_poly_matches_faddeev_leverrier(a in small_matrix(5)) {
        let expected = Polynomial::new(faddeev_leverrier(&grid(&a)));
        prop_assert_eq!(a.char_poly(), expected);
    }

    #[test]
    fn det_matches_cofactor_expansion(a in small_matrix(5)) {
        prop_assert_eq!(a.det(), cofactor_det(&grid(&a)));
    }

    #[test]
    fn product_matches_schoolbook(a in small_matrix(4), seed in any::<u64>()) {
        let mut g = rng(seed);
        let b = random_matrix(&mut g, a.dim(), 9, 6);
        prop_assert_eq!(grid(&a.mul(&b).unwrap()), naive_mul(&grid(&a), &grid(&b)));
        prop_assert_eq!(grid(&a.pow(5)), naive_pow(&grid(&a), 5));
    }

    #[test]
    fn adjugate_identity(a in small_matrix(5)) {
        let lhs = a.mul(&a.adjugate()).unwrap();
        prop_assert_eq!(lhs, RationalMatrix::identity(a.dim()).scale(&a.det()));
    }

    #[test]
    fn inverse_exists_iff_det_nonzero(a in small_matrix(4)) {
        match a.inverse() {
            Some(inv) => {
                prop_assert!(!a.det().is_zero());
                prop_assert_eq!(a.mul(&inv).unwrap(), RationalMatrix::identity(a.dim()));
            }
            None => prop_assert!(a.det().is_zero()),
        }
    }

    #[test]
    fn kron_det_identity(a in small_matrix(3), b in small_matrix(3)) {
        let (p, q) = (a.dim() as u32, b.dim() as u32);
        let lhs = a.kron(&b).det();
        let rhs = Pow::pow(a.det(), q) * Pow::pow(b.det(), p);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kron_and_direct_sum_respect_powers(a in small_matrix(2), b in small_matrix(2), n in 0u64..5) {
        prop_assert_eq!(a.kron(&b).pow(n), a.pow(n).kron(&b.pow(n)));
        prop_assert_eq!(a.direct_sum(&b).pow(n), a.pow(n).direct_sum(&b.pow(n)));
    }

    #[test]
    fn min_poly_annihilates_and_divides(a in small_matrix(4)) {
        let mp = a.min_poly();
        prop_assert!(mp.is_monic());
        prop_assert!(a.eval_poly(&mp).is_zero());
        let (_, rem) = a.char_poly().div_rem(&mp);
        prop_assert!(rem.is_zero());
        // minimality: I, A, …, A^{deg-1} are linearly independent
        let deg = mp.degree().unwrap();
        let powers: Vec<Vec<Rational>> = (0..deg as u64).map(|k| a.pow(k).entries().to_vec()).collect();
        prop_assert_eq!(rank(&powers), deg);
    }

    #[test]
    fn trace_is_char_poly_subleading(a in small_matrix(5)) {
        let d = a.dim();
        prop_assert_eq!(a.trace(), -a.char_poly().coeff(d - 1));
        let sign = if d % 2 == 0 { Rational::one() } else { -Rational::one() };
        prop_assert_eq!(a.det(), sign * a.char_poly().coeff(0));
    }
}

#[test]
fn spec_examples() {
    let a = RationalMatrix::parse_rows(&[&["1", "1/3"], &["0", "1"]]).unwrap();
    assert_eq!(a.mul(&a).unwrap(), RationalMatrix::parse_rows(&[&["1", "2/3"], &["0", "1"]]).unwrap());
    assert_eq!(a.pow(3), RationalMatrix::parse_rows(&[&["1", "1"], &["0", "1"]]).unwrap());
    assert_eq!(RationalMatrix::identity(3).adjugate(), RationalMatrix::identity(3));
    let x = RationalMatrix::parse_rows(&[&["2/3"]]).unwrap();
    let y = RationalMatrix::parse_rows(&[&["3/2"]]).unwrap();
    assert_eq!(x.kron(&y), RationalMatrix::parse_rows(&[&["1"]]).unwrap());
    assert_eq!(a.direct_sum(&RationalMatrix::empty()), a);
    let i2 = RationalMatrix::identity(2);
    assert_eq!(i2.kron(&a), a.direct_sum(&a));
}

#[test]
fn counterexample_integral_char_poly_without_integral_power() {
    // char poly x² − 3x + 2 is integral, but the (1,2) entry of Aⁿ is (2ⁿ − 1)/2
    let a = RationalMatrix::parse_rows(&[&["2", "1/2"], &["0", "1"]]).unwrap();
    assert!(a.char_poly().is_integral());
    for n in 1..=12u64 {
        let p = a.pow(n);
        let expected = Rational::new(BigInt::from(2).pow(n as u32) - 1, BigInt::from(2));
        assert_eq!(p.get(0, 1), &expected);
        assert!(!p.is_integral());
    }
}

#[test]
fn rational_roots_are_roots() {
    let mut g = rng(7);
    for _ in 0..200 {
        let roots: Vec<Rational> = (0..3).map(|_| random_rational(&mut g, 6, 4)).collect();
        let mut p = Polynomial::one();
        for root in &roots {
            p = p.mul_linear(root);
        }
        let found = p.rational_roots().unwrap();
        for root in &roots {
            assert!(found.contains(root), "{root} not found in roots of {p}");
            assert!(p.eval(root).is_zero());
        }
    }
}

#[test]
fn big_entries_stay_exact() {
    let a = RationalMatrix::parse_rows(&[&["-8589934595/8192", "1/3"], &["7/5", "2147467265/2048"]]).unwrap();
    assert_eq!(a.char_poly(), Polynomial::new(faddeev_leverrier(&grid(&a))));
    assert_eq!(grid(&a.pow(7)), naive_pow(&grid(&a), 7));
}
