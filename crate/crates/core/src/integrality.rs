//! Power-integrality of rational matrices.
//!
//! A rational `A` has some integral power `A^n`, `n ≥ 1`, only if its
//! characteristic polynomial is integral. Integrality of the characteristic
//! polynomial is equivalent to integrality of the minimal polynomial, to the
//! existence of a uniform denominator `m` with `m·A^n` integral for all `n`,
//! to an integral similarity `A = S B S⁻¹`, and to `tr(A^k) ∈ ℤ` for all `k`.
//! [`tfae_report`] evaluates each of those conditions independently.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::IntegerLattice;
use crate::matrix::{IntMatrix, RationalMatrix};
use crate::poly::Polynomial;
use crate::rational::{denominator_lcm, ext_gcd, Rational};

/// Cheap evidence that no positive power of `A` is integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    NonIntegralDeterminant(Rational),
    NonIntegralTrace { power: u64, trace: Rational },
    RationalNonIntegerEigenvalue(Rational),
    NonIntegralCharPolyCoefficient { degree: usize, value: Rational },
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use crate::rational::format_rational as r;
        match self {
            Witness::NonIntegralDeterminant(d) => write!(f, "det = {}", r(d)),
            Witness::NonIntegralTrace { power, trace } => write!(f, "tr(A^{power}) = {}", r(trace)),
            Witness::RationalNonIntegerEigenvalue(l) => write!(f, "rational eigenvalue {}", r(l)),
            Witness::NonIntegralCharPolyCoefficient { degree, value } => {
                write!(f, "coefficient of x^{degree} in the characteristic polynomial is {}", r(value))
            }
        }
    }
}

/// Integral similarity certificate: `A·S = S·B`, both integral, `S` invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralSimilarity {
    pub s: IntMatrix,
    pub b: IntMatrix,
}

#[derive(Clone, Debug)]
pub struct TfaeReport {
    pub char_poly: Polynomial,
    pub min_poly: Polynomial,
    pub char_poly_integral: bool,
    pub min_poly_integral: bool,
    pub uniform_denominator: Option<BigInt>,
    pub similarity: Option<IntegralSimilarity>,
    /// Largest `K ≤ trace_bound` with `tr(A^k) ∈ ℤ` for every `1 ≤ k ≤ K`.
    pub trace_integral_upto: u64,
    pub trace_bound: u64,
    pub verdict: bool,
    pub witnesses: Vec<Witness>,
}

/// Determinant, rational eigenvalue, then traces of `A^k` for `k ≤ dim`.
pub fn quick_reject(a: &RationalMatrix) -> Option<Witness> {
    let det = a.det();
    if !det.is_integer() {
        return Some(Witness::NonIntegralDeterminant(det));
    }
    let cp = a.char_poly();
    if !cp.is_integral() {
        if let Some(roots) = cp.rational_roots() {
            if let Some(l) = roots.into_iter().find(|r| !r.is_integer()) {
                return Some(Witness::RationalNonIntegerEigenvalue(l));
            }
        }
    }
    first_non_integral_trace(a, a.dim() as u64)
}

fn first_non_integral_trace(a: &RationalMatrix, bound: u64) -> Option<Witness> {
    let mut p = a.clone();
    for k in 1..=bound {
        let t = p.trace();
        if !t.is_integer() {
            return Some(Witness::NonIntegralTrace { power: k, trace: t });
        }
        if k < bound {
            p = p.mul(a).expect("same dimension");
        }
    }
    None
}

/// `lcm` of the denominators of `A⁰, …, A^{d-1}`.
///
/// When the characteristic polynomial is integral, Cayley–Hamilton makes this a
/// uniform denominator: `m·A^n` is integral for every `n`.
pub fn uniform_denominator(a: &RationalMatrix) -> BigInt {
    a.powers(a.dim())
        .iter()
        .fold(BigInt::one(), |acc, p| crate::rational::lcm(&acc, &p.denominator_lcm()))
}

pub fn tfae_report(a: &RationalMatrix, trace_bound: u64) -> TfaeReport {
    let trace_bound = trace_bound.max(a.dim() as u64);
    let char_poly = a.char_poly();
    let min_poly = a.min_poly();
    let char_poly_integral = char_poly.is_integral();
    let min_poly_integral = min_poly.is_integral();

    let (uniform_denominator, similarity) = if char_poly_integral {
        let m = uniform_denominator(a);
        let sim = integral_similarity(a).ok();
        (Some(m), sim)
    } else {
        (None, None)
    };

    let trace_witness = first_non_integral_trace(a, trace_bound);
    let trace_integral_upto = match &trace_witness {
        Some(Witness::NonIntegralTrace { power, .. }) => power - 1,
        _ => trace_bound,
    };

    let mut witnesses = Vec::new();
    if !char_poly_integral {
        witnesses.extend(char_poly.non_integral_coefficients().map(|(degree, value)| {
            Witness::NonIntegralCharPolyCoefficient { degree, value: value.clone() }
        }));
        if let Some(w) = quick_reject(a) {
            if !witnesses.contains(&w) {
                witnesses.push(w);
            }
        }
        if let Some(w) = trace_witness {
            if !witnesses.contains(&w) {
                witnesses.push(w);
            }
        }
    }

    TfaeReport {
        char_poly,
        min_poly,
        char_poly_integral,
        min_poly_integral,
        uniform_denominator,
        similarity,
        trace_integral_upto,
        trace_bound,
        verdict: char_poly_integral,
        witnesses,
    }
}

/// Largest `A`-invariant sublattice `Λ ⊆ ℤ^d`, as the fixpoint of
/// `Λ₀ = ℤ^d`, `Λ_{k+1} = {x ∈ Λ_k : A x ∈ Λ_k}` with HNF canonicalization.
///
/// Terminates because every `Λ_k` contains `m ℤ^d` for a uniform denominator
/// `m`; that requires an integral characteristic polynomial.
pub fn invariant_lattice(a: &RationalMatrix) -> Result<IntegerLattice> {
    if !a.char_poly().is_integral() {
        return Err(Error::NoIntegralSpectrum);
    }
    let d = a.dim();
    let mut lattice = IntegerLattice::standard(d);
    loop {
        let basis = lattice.basis().to_rational();
        let inv = basis.inverse().expect("lattice basis has full rank");
        let c = inv.mul(a)?.mul(&basis)?;
        let p = integral_preimage(&c);
        let next = IntegerLattice::from_generators(&lattice.basis().mul(&p))?;
        if next == lattice {
            return Ok(lattice);
        }
        lattice = next;
    }
}

/// `A = S B S⁻¹` with `S` the HNF basis of the invariant lattice and `B` integral.
pub fn integral_similarity(a: &RationalMatrix) -> Result<IntegralSimilarity> {
    let lattice = invariant_lattice(a)?;
    let s = lattice.basis().clone();
    let sr = s.to_rational();
    let b = sr.inverse().expect("full rank").mul(a)?.mul(&sr)?;
    let b = b.to_int().expect("invariant lattice makes S⁻¹AS integral");
    Ok(IntegralSimilarity { s, b })
}

/// Basis (as columns) of `{y ∈ ℤ^d : C y ∈ ℤ^d}` for a rational `C`.
///
/// Imposes one row at a time: the congruence `a·w ≡ 0 (mod q)` becomes
/// `g·u₁ ≡ 0 (mod q)` after a unimodular change of variables that collapses
/// `a` to `(g, 0, …, 0)`.
fn integral_preimage(c: &RationalMatrix) -> IntMatrix {
    let d = c.dim();
    // columns of the current basis P
    let mut cols: Vec<Vec<BigInt>> = IntMatrix::identity(d).columns();
    for row in c.rows() {
        // a = row · P
        let a: Vec<Rational> = cols
            .iter()
            .map(|col| {
                row.iter()
                    .zip(col)
                    .fold(Rational::zero(), |acc, (r, x)| acc + r * Rational::from_integer(x.clone()))
            })
            .collect();
        let q = denominator_lcm(a.iter());
        if q.is_one() {
            continue;
        }
        let mut coeffs: Vec<BigInt> = a.iter().map(|x| ((x * Rational::from_integer(q.clone())).to_integer()) % &q).collect();
        for j in 1..d {
            if coeffs[j].is_zero() {
                continue;
            }
            let (g, s, t) = ext_gcd(&coeffs[0], &coeffs[j]);
            let a0 = &coeffs[0] / &g;
            let aj = &coeffs[j] / &g;
            let c0: Vec<BigInt> = cols[0].iter().zip(&cols[j]).map(|(x, y)| &s * x + &t * y).collect();
            let cj: Vec<BigInt> = cols[0].iter().zip(&cols[j]).map(|(x, y)| -&aj * x + &a0 * y).collect();
            cols[0] = c0;
            cols[j] = cj;
            coeffs[0] = g;
            coeffs[j] = BigInt::zero();
        }
        let g = num_integer::Integer::gcd(&coeffs[0], &q);
        let scale = &q / g;
        for x in cols[0].iter_mut() {
            *x *= &scale;
        }
        let reduced = IntegerLattice::from_generators(&IntMatrix::from_columns(&cols))
            .expect("preimage contains qℤ^d");
        cols = reduced.basis().columns();
    }
    IntMatrix::from_columns(&cols)
}
