//! Lower and upper bounds on the matricial dimension of a subsemigroup of ℕ,
//! the least `d` such that some `A ∈ M_d(ℚ)` has `S(A) = S`.
//!
//! Lower bounds come from the fact that `d` consecutive members of `S(A)`
//! force every later exponent into `S(A)`; upper bounds come from explicit
//! constructions.

use serde::Serialize;

use crate::construct::Family2x2;
use crate::semigroup::{SemigroupKind, SubsemigroupDesc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RuleTag {
    DimOne,
    DimTwoFamily,
    ConsecutiveRun,
    Symmetric,
    PseudoCaseB,
    PseudoCaseC,
    NilpotentUpper,
    KnownExact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundSide {
    Lower,
    Upper,
    Exact,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Justification {
    pub value: u64,
    pub side: BoundSide,
    pub rule: RuleTag,
    pub cite: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionBounds {
    pub lower: u64,
    pub upper: u64,
    pub justifications: Vec<Justification>,
}

impl DimensionBounds {
    pub fn contains(&self, d: u64) -> bool {
        self.lower <= d && d <= self.upper
    }

    fn push(&mut self, value: u64, side: BoundSide, rule: RuleTag, cite: &str) {
        self.justifications.push(Justification { value, side, rule, cite: cite.to_string() });
    }
}

/// Minimal generators and exact dimension of semigroups whose dimension is
/// pinned by a matching lower bound and an explicit matrix of that size.
const KNOWN_EXACT: &[(&[u64], u64)] = &[
    (&[3, 5, 7], 2),
    (&[3, 4], 3),
    (&[4, 6, 17], 4),
    (&[5, 33, 52], 5),
    (&[5, 7], 5),
    (&[6, 9, 20], 6),
];

/// Exact dimension from the table of known cases, if `s` is listed.
pub fn known_exact(s: &SubsemigroupDesc) -> Option<u64> {
    let gens = s.minimal_generators();
    KNOWN_EXACT.iter().find(|(g, _)| *g == gens.as_slice()).map(|&(_, d)| d)
}

/// `1 + L` where `L` is the longest run of consecutive positive members that
/// ends below a larger non-member; at least 2.
///
/// For `S` with content `d₀ ≥ 2` every run has length 1.
pub fn consecutive_run_bound(s: &SubsemigroupDesc) -> u64 {
    let g = match s.kind() {
        SemigroupKind::Numerical => s.frobenius().unwrap() as u64,
        SemigroupKind::NonNumericalPositive => return 2,
        SemigroupKind::Trivial | SemigroupKind::FullN => return 1,
    };
    let mut best = 0u64;
    let mut run = 0u64;
    for n in 1..g {
        if s.contains(n) {
            run += 1;
            best = best.max(run);
        } else {
            run = 0;
        }
    }
    (best + 1).max(2)
}

/// Bounds derived from the general rules only, without the known-cases table.
pub fn derived_bounds(s: &SubsemigroupDesc) -> DimensionBounds {
    let mut b = DimensionBounds { lower: 1, upper: 1, justifications: Vec::new() };
    match s.kind() {
        SemigroupKind::Trivial | SemigroupKind::FullN => {
            b.push(1, BoundSide::Exact, RuleTag::DimOne, "{0} and ℕ are the exponent semigroups of [1/2] and [0]");
            return b;
        }
        _ => {}
    }

    let mut lower = 2;
    b.push(2, BoundSide::Lower, RuleTag::DimOne, "only {0} and ℕ occur in dimension 1");

    let run = consecutive_run_bound(s);
    if run > 2 {
        b.push(
            run,
            BoundSide::Lower,
            RuleTag::ConsecutiveRun,
            "d consecutive members of S(A) for A of size d force every later exponent into S(A)",
        );
    }
    lower = lower.max(run);

    if s.kind() == SemigroupKind::Numerical {
        let m = s.multiplicity().unwrap();
        let g = s.frobenius().unwrap() as u64;
        if s.is_symmetric().unwrap_or(false) {
            b.push(m, BoundSide::Lower, RuleTag::Symmetric, "symmetric semigroups need dimension at least the multiplicity");
            lower = lower.max(m);
        }
        if s.is_pseudosymmetric().unwrap_or(false) {
            if m < g && g < 2 * m {
                b.push(
                    m - 1,
                    BoundSide::Lower,
                    RuleTag::PseudoCaseB,
                    "pseudosymmetric with m < g < 2m needs dimension at least m - 1",
                );
                lower = lower.max(m - 1);
            } else if g >= 2 * m {
                b.push(
                    m,
                    BoundSide::Lower,
                    RuleTag::PseudoCaseC,
                    "pseudosymmetric with g >= 2m needs dimension at least m",
                );
                lower = lower.max(m);
            }
        }
    }

    let mut upper = match s.kind() {
        SemigroupKind::Numerical => {
            let g = s.frobenius().unwrap() as u64;
            b.push(g + 1, BoundSide::Upper, RuleTag::NilpotentUpper, "nilpotent superdiagonal matrix of size g + 1");
            g + 1
        }
        _ => {
            let d0 = s.content().unwrap();
            let g = s.numerical_part().unwrap().frobenius();
            let size = if g < 0 { 2 } else { d0 * g as u64 + 3 };
            b.push(
                size,
                BoundSide::Upper,
                RuleTag::NilpotentUpper,
                "nilpotent superdiagonal block of size d0·g(S/d0) + 1 plus a 2×2 block for the content",
            );
            size
        }
    };
    if Family2x2::detect(s).is_some() {
        b.push(2, BoundSide::Upper, RuleTag::DimTwoFamily, "closed-form 2×2 representation");
        upper = upper.min(2);
    }

    b.lower = lower;
    b.upper = upper.max(lower);
    b
}

/// Derived bounds tightened by the known-cases table.
pub fn bounds(s: &SubsemigroupDesc) -> DimensionBounds {
    let mut b = derived_bounds(s);
    if let Some(d) = known_exact(s) {
        b.push(d, BoundSide::Exact, RuleTag::KnownExact, "explicit matrix of this size meets the lower bound");
        b.lower = d;
        b.upper = d;
    }
    b
}
