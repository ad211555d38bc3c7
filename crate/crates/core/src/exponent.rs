//! Exact computation of `S(A) = {n ∈ ℕ : Aⁿ integral}`.
//!
//! With an integral characteristic polynomial `x^d + c_{d-1}x^{d-1} + … + c_0`
//! and a uniform denominator `m`, the integer matrices `Mₙ = m·Aⁿ` obey
//! `M_{n+d} = −Σ cᵢ M_{n+i}`. Reducing mod `m` gives a deterministic walk on
//! windows of `d` residue matrices; `n ∈ S(A)` iff `Mₙ ≡ 0 (mod m)`. The walk is
//! eventually periodic, so hashing windows until the first repeat yields a
//! preperiod `τ` and period `ρ` that describe membership for every `n`.
//!
//! An all-zero window means `d` consecutive members, after which every
//! exponent is a member; the walk stops there.

use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, VecDeque};
use std::hash::{Hash, Hasher};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::integrality::uniform_denominator;
use crate::matrix::RationalMatrix;
use crate::poly::Polynomial;
use crate::semigroup::{minimal_generators_from_membership, SemigroupKind, SubsemigroupDesc};

/// Caps on the residue walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StateBudget {
    pub max_states: usize,
    pub max_bytes: usize,
}

impl Default for StateBudget {
    fn default() -> Self {
        Self { max_states: 1_000_000, max_bytes: 1 << 30 }
    }
}

impl StateBudget {
    pub fn states(max_states: usize) -> Self {
        Self { max_states, ..Self::default() }
    }
}

#[derive(Clone, Debug)]
pub struct ExponentAnalysis {
    pub classification: SubsemigroupDesc,
    pub char_poly: Polynomial,
    pub uniform_denominator: Option<BigInt>,
    pub preperiod: Option<usize>,
    pub period: Option<usize>,
    /// Membership of `S(A)` on `[0, τ + ρ)`.
    pub membership_prefix: Vec<bool>,
    /// Exponent at which `d` consecutive members were observed, if any.
    pub early_exit: Option<usize>,
    /// `(n, Aⁿ integral?)` checked by direct powering.
    pub certificates: Vec<(u64, bool)>,
    /// `false` only for partial results carried by `StateBudgetExceeded`.
    pub is_final: bool,
}

impl ExponentAnalysis {
    /// Membership from the periodic description when available, otherwise
    /// from the classification.
    pub fn contains(&self, n: u64) -> bool {
        match (self.preperiod, self.period) {
            (Some(tau), Some(rho)) if self.is_final => {
                let n = n as usize;
                let idx = if n < tau + rho { n } else { tau + (n - tau) % rho };
                self.membership_prefix[idx]
            }
            _ => self.classification.contains(n),
        }
    }

    /// `τ + 2ρ`, the horizon over which two periodic descriptions are compared.
    pub fn horizon(&self) -> usize {
        match (self.preperiod, self.period) {
            (Some(t), Some(r)) => t + 2 * r,
            _ => 2,
        }
    }
}

/// Direct check that `Aⁿ` is integral.
pub fn verify_membership(a: &RationalMatrix, n: u64) -> bool {
    a.pow(n).is_integral()
}

pub fn exponent_semigroup(a: &RationalMatrix, budget: StateBudget) -> Result<ExponentAnalysis> {
    let char_poly = a.char_poly();
    let Some(coeffs) = char_poly.integer_coeffs() else {
        // no positive power can be integral
        return Ok(ExponentAnalysis {
            classification: SubsemigroupDesc::trivial(),
            char_poly,
            uniform_denominator: None,
            preperiod: None,
            period: None,
            membership_prefix: vec![true],
            early_exit: None,
            certificates: vec![(0, true)],
            is_final: true,
        });
    };
    let d = a.dim();
    let m = uniform_denominator(a);
    let seeds: Vec<Vec<BigInt>> = a
        .powers(d)
        .iter()
        .map(|p| {
            p.entries()
                .iter()
                .map(|e| (e * crate::rational::Rational::from_integer(m.clone())).to_integer())
                .collect()
        })
        .collect();

    let walk = match m.to_u64() {
        Some(small) => run_walk(&SmallRing::new(small), &seeds, &coeffs[..d], budget),
        None => run_walk(&BigRing::new(m.magnitude().clone()), &seeds, &coeffs[..d], budget),
    };

    let mut analysis = ExponentAnalysis {
        classification: SubsemigroupDesc::trivial(),
        char_poly,
        uniform_denominator: Some(m),
        preperiod: None,
        period: None,
        membership_prefix: Vec::new(),
        early_exit: None,
        certificates: Vec::new(),
        is_final: false,
    };
    match walk {
        WalkOutcome::Cycle { members, preperiod, period, early_exit } => {
            analysis.membership_prefix = members;
            analysis.preperiod = Some(preperiod);
            analysis.period = Some(period);
            analysis.early_exit = early_exit;
            analysis.is_final = true;
            analysis.classification = classify(&analysis)?;
            certify(a, &mut analysis)?;
            Ok(analysis)
        }
        WalkOutcome::Exhausted { members } => {
            let states = members.len();
            analysis.membership_prefix = members;
            analysis.classification = partial_classification(&analysis.membership_prefix);
            Err(Error::StateBudgetExceeded { states, partial: Box::new(analysis) })
        }
    }
}

/// Requires `det A = ±1`; returns the generator of the cyclic `S(A)`, or `None`
/// when `S(A) = {0}`.
pub fn classify_cyclic(a: &RationalMatrix, budget: StateBudget) -> Result<Option<u64>> {
    let det = a.det();
    if !(det.is_integer() && det.numer().magnitude() == &BigUint::from(1u8)) {
        return Err(Error::NotUnimodular(crate::rational::format_rational(&det)));
    }
    let analysis = exponent_semigroup(a, budget)?;
    let s = &analysis.classification;
    match s.kind() {
        SemigroupKind::Trivial => Ok(None),
        _ => {
            let gens = s.minimal_generators();
            debug_assert_eq!(gens.len(), 1, "unimodular exponent semigroups are cyclic");
            Ok(Some(gens[0]))
        }
    }
}

fn classify(analysis: &ExponentAnalysis) -> Result<SubsemigroupDesc> {
    let horizon = analysis.horizon() as u64;
    let content = (1..horizon)
        .filter(|&n| analysis.contains(n))
        .fold(0u64, |g, n| g.gcd(&n));
    if content == 0 {
        return Ok(SubsemigroupDesc::trivial());
    }
    // Every multiple of `content` past the preperiod is a member, so the
    // divided membership is cofinite from tau/content on.
    let tau = analysis.preperiod.unwrap_or(0) as u64;
    let limit = tau / content + 2;
    let bits: Vec<bool> = (0..=limit).map(|k| analysis.contains(k * content)).collect();
    let frobenius = bits.iter().rposition(|&b| !b).map_or(-1, |g| g as i64);
    let multiplicity = bits.iter().skip(1).position(|&b| b).map_or(1, |p| p as u64 + 1);
    let need = (frobenius + multiplicity as i64 + 2) as u64;
    let bits: Vec<bool> = (0..need.max(limit + 1)).map(|k| analysis.contains(k * content)).collect();
    let gens = minimal_generators_from_membership(&bits, frobenius)?;
    SubsemigroupDesc::from_generators(&gens.iter().map(|g| g * content).collect::<Vec<_>>())
}

/// Best-effort description of a truncated walk: members seen so far, read as
/// generators.
fn partial_classification(members: &[bool]) -> SubsemigroupDesc {
    let gens: Vec<u64> = (1..members.len()).filter(|&n| members[n]).map(|n| n as u64).collect();
    if gens.is_empty() {
        SubsemigroupDesc::trivial()
    } else {
        SubsemigroupDesc::from_generators(&gens).expect("positive generators")
    }
}

// Direct powers above this are skipped when certifying.
const CERTIFICATE_MAX_EXPONENT: u64 = 256;

fn certify(a: &RationalMatrix, analysis: &mut ExponentAnalysis) -> Result<()> {
    let s = &analysis.classification;
    let mut samples: Vec<u64> = vec![1, 2, 3];
    samples.extend(s.minimal_generators());
    if let Some(g) = s.frobenius().filter(|&g| g > 0) {
        samples.push(g as u64);
        samples.push(g as u64 + 1);
    }
    if let (Some(t), Some(r)) = (analysis.preperiod, analysis.period) {
        samples.push((t + r) as u64);
        samples.push((t + 2 * r) as u64);
    }
    samples.sort_unstable();
    samples.dedup();
    samples.retain(|&n| n <= CERTIFICATE_MAX_EXPONENT);
    samples.truncate(8);
    for n in samples {
        let direct = verify_membership(a, n);
        if direct != analysis.contains(n) {
            return Err(Error::CertificateMismatch(n));
        }
        analysis.certificates.push((n, direct));
    }
    Ok(())
}

enum WalkOutcome {
    Cycle { members: Vec<bool>, preperiod: usize, period: usize, early_exit: Option<usize> },
    Exhausted { members: Vec<bool> },
}

/// Residue arithmetic mod `m` plus a canonical packed encoding of a matrix.
trait ResidueRing {
    type Elem: Clone + PartialEq;
    fn reduce(&self, x: &BigInt) -> Self::Elem;
    fn zero(&self) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    /// `acc + k·x (mod m)`
    fn mul_add(&self, acc: &Self::Elem, k: &Self::Elem, x: &Self::Elem) -> Self::Elem;
    fn pack(&self, mat: &[Self::Elem]) -> Vec<u64>;
}

struct SmallRing {
    m: u64,
    width: u32,
}

impl SmallRing {
    fn new(m: u64) -> Self {
        Self { m, width: 64 - (m - 1).leading_zeros() }
    }
}

impl ResidueRing for SmallRing {
    type Elem = u64;

    fn reduce(&self, x: &BigInt) -> u64 {
        x.mod_floor(&BigInt::from(self.m)).to_u64().unwrap()
    }

    fn zero(&self) -> u64 {
        0
    }

    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }

    fn mul_add(&self, acc: &u64, k: &u64, x: &u64) -> u64 {
        ((*acc as u128 + *k as u128 * *x as u128) % self.m as u128) as u64
    }

    fn pack(&self, mat: &[u64]) -> Vec<u64> {
        if self.width == 0 {
            return Vec::new();
        }
        let w = self.width as usize;
        let mut out = vec![0u64; (mat.len() * w).div_ceil(64)];
        for (i, &v) in mat.iter().enumerate() {
            let bit = i * w;
            let (word, off) = (bit / 64, bit % 64);
            out[word] |= v << off;
            if off + w > 64 {
                out[word + 1] |= v >> (64 - off);
            }
        }
        out
    }
}

struct BigRing {
    m: BigInt,
    words: usize,
}

impl BigRing {
    fn new(m: BigUint) -> Self {
        let words = m.to_u64_digits().len();
        Self { m: BigInt::from_biguint(Sign::Plus, m), words }
    }
}

impl ResidueRing for BigRing {
    type Elem = BigInt;

    fn reduce(&self, x: &BigInt) -> BigInt {
        x.mod_floor(&self.m)
    }

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn is_zero(&self, x: &BigInt) -> bool {
        x.is_zero()
    }

    fn mul_add(&self, acc: &BigInt, k: &BigInt, x: &BigInt) -> BigInt {
        (acc + k * x).mod_floor(&self.m)
    }

    fn pack(&self, mat: &[BigInt]) -> Vec<u64> {
        let mut out = Vec::with_capacity(mat.len() * self.words);
        for v in mat {
            let digits = v.magnitude().to_u64_digits();
            out.extend(digits.iter().copied());
            out.extend(std::iter::repeat_n(0, self.words - digits.len()));
        }
        out
    }
}

fn run_walk<R: ResidueRing>(
    ring: &R,
    seeds: &[Vec<BigInt>],
    char_coeffs: &[BigInt],
    budget: StateBudget,
) -> WalkOutcome {
    let d = seeds.len();
    // recurrence weights k_i = -c_i mod m; zero weights are skipped
    let weights: Vec<(usize, R::Elem)> = char_coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| (i, ring.reduce(&-c)))
        .filter(|(_, k)| !ring.is_zero(k))
        .collect();

    let mut window: VecDeque<Vec<R::Elem>> =
        seeds.iter().map(|s| s.iter().map(|x| ring.reduce(x)).collect()).collect();
    // packed[n] encodes M_n mod m; window n is packed[n..n+d]
    let mut packed: Vec<Vec<u64>> = window.iter().map(|w| ring.pack(w)).collect();
    let mut zero_flags: Vec<bool> = window.iter().map(|w| w.iter().all(|x| ring.is_zero(x))).collect();
    let mut hashes: Vec<u64> = packed.iter().map(hash_words).collect();
    let mut seen: HashMap<u64, Vec<usize>> = HashMap::new();
    let mut bytes = packed.iter().map(|p| p.len() * 8).sum::<usize>();

    let mut n = 0usize;
    loop {
        if zero_flags[n..n + d].iter().all(|&z| z) {
            return WalkOutcome::Cycle {
                members: zero_flags[..=n].to_vec(),
                preperiod: n,
                period: 1,
                early_exit: Some(n),
            };
        }
        let key = hash_words(&hashes[n..n + d]);
        if let Some(prev) = seen.get(&key) {
            if let Some(&first) = prev.iter().find(|&&p| packed[p..p + d] == packed[n..n + d]) {
                return WalkOutcome::Cycle {
                    members: zero_flags[..n].to_vec(),
                    preperiod: first,
                    period: n - first,
                    early_exit: None,
                };
            }
        }
        if n >= budget.max_states || bytes > budget.max_bytes {
            return WalkOutcome::Exhausted { members: zero_flags[..n].to_vec() };
        }
        seen.entry(key).or_default().push(n);

        let len = window[0].len();
        let mut next = vec![ring.zero(); len];
        for (i, k) in &weights {
            for (acc, x) in next.iter_mut().zip(&window[*i]) {
                if !ring.is_zero(x) {
                    *acc = ring.mul_add(acc, k, x);
                }
            }
        }
        let p = ring.pack(&next);
        bytes += p.len() * 8;
        hashes.push(hash_words(&p));
        zero_flags.push(next.iter().all(|x| ring.is_zero(x)));
        packed.push(p);
        window.pop_front();
        window.push_back(next);
        n += 1;
    }
}

fn hash_words<T: Hash + ?Sized>(words: &T) -> u64 {
    let mut h = DefaultHasher::new();
    words.hash(&mut h);
    h.finish()
}
