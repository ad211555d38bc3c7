//! Rational matrices with a prescribed exponent semigroup.
//!
//! The main construction is a nilpotent superdiagonal matrix
//! `superdiag(b^{x₁}, …, b^{x_g})`. Its `j`-th power is integral exactly when
//! every window of `j` consecutive exponents `xᵢ` has a nonnegative sum, so it
//! suffices to pick `x ∈ {−1, 0, 1}^g` whose prefix sums go negative exactly
//! at the gaps while every generator-length window stays nonnegative. A
//! two-state tally walk over `1..=g` produces such a vector.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exponent::{exponent_semigroup, StateBudget};
use crate::matrix::RationalMatrix;
use crate::rational::Rational;
use crate::semigroup::{SemigroupKind, SubsemigroupDesc};

pub const DEFAULT_BASE: i64 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperdiagonalVector {
    entries: Vec<i8>,
    base: i64,
    target: SubsemigroupDesc,
}

impl SuperdiagonalVector {
    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn base(&self) -> i64 {
        self.base
    }

    pub fn target(&self) -> &SubsemigroupDesc {
        &self.target
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn prefix_sums(&self) -> Vec<i64> {
        self.entries
            .iter()
            .scan(0i64, |acc, &x| {
                *acc += x as i64;
                Some(*acc)
            })
            .collect()
    }

    /// Sum of `x_i … x_{i+len-1}` (1-based `i`).
    pub fn window_sum(&self, i: usize, len: usize) -> i64 {
        self.entries[i - 1..i - 1 + len].iter().map(|&x| x as i64).sum()
    }
}

#[derive(Clone, Debug)]
pub struct ConstructionResult {
    pub matrix: RationalMatrix,
    pub vector: Option<SuperdiagonalVector>,
    pub claimed: SubsemigroupDesc,
    pub verified: bool,
}

/// The tally walk for `i = 1..=steps` against an arbitrary membership test.
fn tally_walk(steps: u64, member: impl Fn(u64) -> bool) -> Vec<i8> {
    let mut sigma = 0i8;
    (1..=steps)
        .map(|i| {
            let x = match (member(i), sigma) {
                (true, -1) => 1,
                (false, 0) => -1,
                _ => 0,
            };
            sigma += x;
            x
        })
        .collect()
}

fn check_base(base: i64) -> Result<()> {
    if base.abs() < 2 {
        return Err(Error::InvalidParameter(format!("base must satisfy |b| >= 2, got {base}")));
    }
    Ok(())
}

/// Exponent vector for a numerical semigroup other than ℕ.
pub fn find_superdiagonal(s: &SubsemigroupDesc, base: i64) -> Result<SuperdiagonalVector> {
    check_base(base)?;
    if s.kind() != SemigroupKind::Numerical {
        return Err(Error::InvalidParameter(format!(
            "superdiagonal vectors need a proper numerical semigroup, got {s}"
        )));
    }
    let g = s.frobenius().unwrap() as u64;
    Ok(SuperdiagonalVector { entries: tally_walk(g, |i| s.contains(i)), base, target: s.clone() })
}

/// The same walk for a semigroup with content `d₀ ≥ 2`, run to step
/// `d₀·g(S′)` with membership queried against `S` itself.
pub fn find_superdiagonal_with_content(s: &SubsemigroupDesc, base: i64) -> Result<SuperdiagonalVector> {
    check_base(base)?;
    if s.kind() != SemigroupKind::NonNumericalPositive {
        return Err(Error::InvalidParameter(format!("expected content >= 2, got {s}")));
    }
    let content = s.content().unwrap();
    let g = s.numerical_part().unwrap().frobenius();
    let steps = if g < 0 { 0 } else { content * g as u64 };
    Ok(SuperdiagonalVector { entries: tally_walk(steps, |i| s.contains(i)), base, target: s.clone() })
}

/// `superdiag(b^{x₁}, …, b^{x_g})`, of size `g + 1`.
pub fn nilpotent_matrix(v: &SuperdiagonalVector) -> RationalMatrix {
    let b = Rational::from_integer(BigInt::from(v.base));
    let values: Vec<Rational> = v
        .entries
        .iter()
        .map(|&x| match x {
            1 => b.clone(),
            -1 => b.recip(),
            _ => Rational::one(),
        })
        .collect();
    RationalMatrix::superdiag(&values)
}

/// `[[1, 1/d], [0, 1]]`, whose exponent semigroup is `⟨d⟩`.
fn cyclic_block(d: u64) -> RationalMatrix {
    let mut m = RationalMatrix::identity(2);
    m.set(0, 1, Rational::new(BigInt::one(), BigInt::from(d)));
    m
}

fn verify(matrix: RationalMatrix, vector: Option<SuperdiagonalVector>, claimed: &SubsemigroupDesc) -> Result<ConstructionResult> {
    let analysis = exponent_semigroup(&matrix, StateBudget::default())?;
    Ok(ConstructionResult {
        verified: &analysis.classification == claimed,
        matrix,
        vector,
        claimed: claimed.clone(),
    })
}

/// Engine-verified representation of any nontrivial subsemigroup of ℕ.
///
/// ℕ maps to the 1×1 zero matrix, numerical semigroups to the nilpotent
/// superdiagonal matrix, and content `d₀ ≥ 2` to that construction run against
/// `S` and summed with `[[1, 1/d₀], [0, 1]]`.
pub fn represent(s: &SubsemigroupDesc, base: i64) -> Result<ConstructionResult> {
    check_base(base)?;
    match s.kind() {
        SemigroupKind::Trivial => Err(Error::TrivialSemigroupUnrepresentableHere),
        SemigroupKind::FullN => verify(RationalMatrix::zeros(1), None, s),
        SemigroupKind::Numerical => {
            let v = find_superdiagonal(s, base)?;
            verify(nilpotent_matrix(&v), Some(v), s)
        }
        SemigroupKind::NonNumericalPositive => {
            let content = s.content().unwrap();
            let block = cyclic_block(content);
            if s.numerical_part().unwrap().is_full() {
                return verify(block, None, s);
            }
            let v = find_superdiagonal_with_content(s, base)?;
            let matrix = nilpotent_matrix(&v).direct_sum(&block);
            verify(matrix, Some(v), s)
        }
    }
}

/// `[1/2]`, the 1×1 representation of `{0}`.
pub fn trivial_representation() -> Result<ConstructionResult> {
    let m = RationalMatrix::parse_rows(&[&["1/2"]])?;
    verify(m, None, &SubsemigroupDesc::trivial())
}

/// The closed-form 2×2 families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family2x2 {
    /// `⟨m⟩`, `m ≥ 2`
    Cyclic { m: u64 },
    /// `{0, m, m+1, …}`, `m ≥ 2`, from `[[2, 2^{1-m}], [0, 0]]`
    TailFrom { m: u64 },
    /// `⟨2, k⟩`, `k ≥ 3` odd
    TwoGen { k: u64 },
}

impl Family2x2 {
    /// The family a semigroup belongs to, if any.
    pub fn detect(s: &SubsemigroupDesc) -> Option<Self> {
        let gens = s.minimal_generators();
        match s.kind() {
            SemigroupKind::NonNumericalPositive if gens.len() == 1 => Some(Self::Cyclic { m: gens[0] }),
            SemigroupKind::Numerical => {
                let m = gens[0];
                if gens.len() == 2 && m == 2 {
                    Some(Self::TwoGen { k: gens[1] })
                } else if s.frobenius() == Some(m as i64 - 1) {
                    Some(Self::TailFrom { m })
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn semigroup(&self) -> Result<SubsemigroupDesc> {
        match *self {
            Self::Cyclic { m } => SubsemigroupDesc::from_generators(&[m]),
            Self::TailFrom { m } => SubsemigroupDesc::from_generators(&(m..2 * m).collect::<Vec<_>>()),
            Self::TwoGen { k } => SubsemigroupDesc::from_generators(&[2, k]),
        }
    }
}

pub fn family_2x2(kind: Family2x2) -> Result<ConstructionResult> {
    let two = BigInt::from(2);
    let pow2 = |e: i64| -> Rational {
        let p = Rational::from_integer(num_traits::pow(two.clone(), e.unsigned_abs() as usize));
        if e < 0 { p.recip() } else { p }
    };
    let matrix = match kind {
        Family2x2::Cyclic { m } if m >= 2 => cyclic_block(m),
        Family2x2::TailFrom { m } if m >= 2 => {
            let mut a = RationalMatrix::zeros(2);
            a.set(0, 0, pow2(1));
            // A^n = [[2^n, 2^(n-m)], [0, 0]]
            a.set(0, 1, pow2(1 - m as i64));
            a
        }
        Family2x2::TwoGen { k } if k >= 3 && k % 2 == 1 => {
            let j = (k / 2) as i64;
            let mut a = RationalMatrix::zeros(2);
            a.set(0, 1, pow2(-j));
            a.set(1, 0, pow2(j + 1));
            a
        }
        other => return Err(Error::InvalidParameter(format!("{other:?}"))),
    };
    verify(matrix, None, &kind.semigroup()?)
}
