mod common;

use common::*;
use exposg::fixtures::{bundled, verify_all};
use exposg::exponent::StateBudget;
use exposg::semigroup::SemigroupKind;

#[test]
fn bundled_matrices_match_direct_powering() {
    for f in bundled() {
        let limit = match f.expected.kind() {
            SemigroupKind::Trivial | SemigroupKind::FullN => 12,
            _ => 2 * f.expected.minimal_generators().iter().max().unwrap() + 4,
        };
        let direct = direct_membership(&f.matrix, limit);
        for (n, &member) in direct.iter().enumerate() {
            assert_eq!(member, f.expected.contains(n as u64), "{}: n = {n}", f.name);
        }
    }
}

#[test]
fn bundled_matrices_have_integral_char_polys() {
    for f in bundled() {
        let cp = faddeev_leverrier(&grid(&f.matrix));
        let integral = cp.iter().all(|c| c.is_integer());
        assert_eq!(integral, f.expected.kind() != SemigroupKind::Trivial, "{}", f.name);
        assert_eq!(f.matrix.dim() as u64, f.matrix_dim, "{}", f.name);
    }
}

#[test]
fn verify_all_passes() {
    let outcomes = verify_all(&bundled(), StateBudget::default());
    assert_eq!(outcomes.len(), 11);
    for o in outcomes {
        assert!(o.passed(), "{}: {:?}", o.name, o.computed);
    }
}
