//! Subsemigroups of ℕ: canonical descriptions, Frobenius data and symmetry.
//!
//! Every nontrivial subsemigroup `S` of ℕ is `d₀·S′` where `d₀` is the gcd of
//! its nonzero elements and `S′` is numerical. [`SubsemigroupDesc`] stores
//! exactly that split; all numeric invariants live on [`NumericalData`] for
//! `S′`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SemigroupKind {
    /// `{0}`
    Trivial,
    /// all of ℕ
    FullN,
    /// cofinite, gcd 1, not ℕ
    Numerical,
    /// content `d₀ ≥ 2`
    NonNumericalPositive,
}

/// Numerical semigroup data (gcd 1, finite complement).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumericalData {
    minimal_generators: Vec<u64>,
    /// `-1` encodes ℕ.
    frobenius: i64,
    gaps: Vec<u64>,
    /// membership over `[0, frobenius + multiplicity + 1]`
    membership: Vec<bool>,
}

impl NumericalData {
    /// From arbitrary generators with gcd 1.
    fn from_coprime(gens: &[u64]) -> Self {
        let m = *gens.iter().min().expect("nonempty");
        let apery = apery_by_residues(gens, m);
        let frobenius = *apery.iter().max().unwrap() as i64 - m as i64;
        let len = (frobenius + m as i64 + 2) as usize;
        let membership: Vec<bool> = (0..len as u64).map(|n| n >= apery[(n % m) as usize]).collect();
        let minimal_generators = minimal_generators_from_membership(&membership, frobenius)
            .expect("membership built from generators is closed");
        let gaps = (0..len as u64).filter(|&n| !membership[n as usize]).collect();
        Self { minimal_generators, frobenius, gaps, membership }
    }

    pub fn minimal_generators(&self) -> &[u64] {
        &self.minimal_generators
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn membership(&self) -> &[bool] {
        &self.membership
    }

    pub fn multiplicity(&self) -> u64 {
        self.minimal_generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators.len()
    }

    pub fn is_full(&self) -> bool {
        self.frobenius < 0
    }

    pub fn contains(&self, n: u64) -> bool {
        match self.membership.get(n as usize) {
            Some(&b) => b,
            None => true,
        }
    }

    /// Number of gaps, `|ℕ ∖ S|` (the genus).
    pub fn genus(&self) -> usize {
        self.gaps.len()
    }
}

/// Canonical description of a subsemigroup of ℕ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubsemigroupDesc {
    kind: SemigroupKind,
    content: u64,
    numerical_part: Option<NumericalData>,
}

impl SubsemigroupDesc {
    pub fn trivial() -> Self {
        Self { kind: SemigroupKind::Trivial, content: 0, numerical_part: None }
    }

    pub fn full() -> Self {
        Self::from_generators(&[1]).unwrap()
    }

    /// Canonicalizes any nonempty list of positive generators.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::InvalidGenerators("empty generator list".into()));
        }
        if gens.contains(&0) {
            return Err(Error::InvalidGenerators("generators must be positive".into()));
        }
        let content = gens.iter().fold(0u64, |g, &x| g.gcd(&x));
        let divided: Vec<u64> = gens.iter().map(|g| g / content).collect();
        let data = NumericalData::from_coprime(&divided);
        let kind = match (content, data.is_full()) {
            (1, true) => SemigroupKind::FullN,
            (1, false) => SemigroupKind::Numerical,
            _ => SemigroupKind::NonNumericalPositive,
        };
        Ok(Self { kind, content, numerical_part: Some(data) })
    }

    /// Parses `"6,9,20"`; `"0"` or the empty string give `{0}`.
    pub fn parse_generators(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "0" {
            return Ok(Self::trivial());
        }
        let gens = text
            .split(',')
            .map(|s| s.trim().parse::<u64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidGenerators(e.to_string()))?;
        Self::from_generators(&gens)
    }

    pub fn kind(&self) -> SemigroupKind {
        self.kind
    }

    /// gcd of the nonzero elements; `None` for `{0}`.
    pub fn content(&self) -> Option<u64> {
        (self.kind != SemigroupKind::Trivial).then_some(self.content)
    }

    /// Data for `S / content`; `None` for `{0}`.
    pub fn numerical_part(&self) -> Option<&NumericalData> {
        self.numerical_part.as_ref()
    }

    pub fn is_numerical(&self) -> bool {
        matches!(self.kind, SemigroupKind::Numerical | SemigroupKind::FullN)
    }

    /// Minimal generators of `S` itself (content multiplied back in); empty for `{0}`.
    pub fn minimal_generators(&self) -> Vec<u64> {
        match &self.numerical_part {
            None => Vec::new(),
            Some(n) => n.minimal_generators.iter().map(|g| g * self.content).collect(),
        }
    }

    /// Frobenius number when `S` is numerical (`-1` for ℕ).
    pub fn frobenius(&self) -> Option<i64> {
        if self.is_numerical() {
            self.numerical_part.as_ref().map(|n| n.frobenius)
        } else {
            None
        }
    }

    pub fn multiplicity(&self) -> Option<u64> {
        self.minimal_generators().first().copied()
    }

    pub fn contains(&self, n: u64) -> bool {
        match &self.numerical_part {
            None => n == 0,
            Some(data) => n % self.content == 0 && data.contains(n / self.content),
        }
    }

    fn numerical_proper(&self) -> Result<&NumericalData> {
        match (&self.kind, &self.numerical_part) {
            (SemigroupKind::Numerical, Some(n)) => Ok(n),
            (SemigroupKind::FullN, _) => Err(Error::Undefined("symmetry is undefined for ℕ")),
            _ => Err(Error::Undefined("symmetry is only defined for numerical semigroups")),
        }
    }

    /// Odd `g` and `x ∉ S ⇒ g − x ∈ S`.
    pub fn is_symmetric(&self) -> Result<bool> {
        let data = self.numerical_proper()?;
        let g = data.frobenius;
        Ok(g % 2 == 1 && data.gaps.iter().all(|&x| data.contains((g - x as i64) as u64)))
    }

    /// Even `g` and `x ∉ S ⇒ g − x ∈ S or x = g/2`.
    pub fn is_pseudosymmetric(&self) -> Result<bool> {
        let data = self.numerical_proper()?;
        let g = data.frobenius;
        let result = g % 2 == 0
            && data
                .gaps
                .iter()
                .all(|&x| 2 * x as i64 == g || data.contains((g - x as i64) as u64));
        debug_assert!(!result || data.genus() as i64 == (g + 2) / 2);
        Ok(result)
    }

    /// Apéry set with respect to a nonzero member `n`, indexed by residue.
    pub fn apery_set(&self, n: u64) -> Result<Vec<u64>> {
        if !self.is_numerical() {
            return Err(Error::Undefined("Apéry sets are computed for numerical semigroups"));
        }
        if n == 0 || !self.contains(n) {
            return Err(Error::NotAMember(n));
        }
        Ok(apery_by_residues(&self.minimal_generators(), n))
    }
}

impl fmt::Display for SubsemigroupDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SemigroupKind::Trivial => write!(f, "{{0}}"),
            _ => {
                let gens: Vec<String> =
                    self.minimal_generators().iter().map(u64::to_string).collect();
                write!(f, "⟨{}⟩", gens.join(", "))?;
                if let Some(data) = self.numerical_part.as_ref().filter(|_| self.is_numerical()) {
                    let gaps: Vec<String> = data.gaps.iter().map(u64::to_string).collect();
                    write!(f, ", g = {}, gaps = {{{}}}", data.frobenius, gaps.join(", "))?;
                }
                Ok(())
            }
        }
    }
}

/// Least member in each residue class mod `modulus`, by Dijkstra over residues
/// with generator-weighted edges. Generators must have gcd 1 together with
/// `modulus` for every class to be reachable.
fn apery_by_residues(gens: &[u64], modulus: u64) -> Vec<u64> {
    let m = modulus as usize;
    let mut dist = vec![u64::MAX; m];
    dist[0] = 0;
    let mut heap = BinaryHeap::from([Reverse((0u64, 0usize))]);
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in gens {
            let next = (r + (g % modulus) as usize) % m;
            let nd = d + g;
            if nd < dist[next] {
                dist[next] = nd;
                heap.push(Reverse((nd, next)));
            }
        }
    }
    dist
}

/// Frobenius number of the semigroup generated by `gens`; `-1` for ℕ.
pub fn frobenius_number(gens: &[u64]) -> Result<i64> {
    let s = SubsemigroupDesc::from_generators(gens)?;
    match s.content() {
        Some(1) => Ok(s.numerical_part().unwrap().frobenius()),
        Some(c) => Err(Error::NotCoprime(c)),
        None => unreachable!(),
    }
}

/// Minimal generators from a membership bit-vector covering `[0, g + m + 1]`.
///
/// A member `s > 0` is a minimal generator iff it is not the sum of two
/// nonzero members. Anything above `g + m` is `m` plus a member, so the scan
/// stops there. Fails when the bits are not additively closed on their range.
pub fn minimal_generators_from_membership(bits: &[bool], frobenius: i64) -> Result<Vec<u64>> {
    if bits.first() != Some(&true) {
        return Err(Error::InvalidGenerators("0 must be a member".into()));
    }
    let members: Vec<usize> = (1..bits.len()).filter(|&i| bits[i]).collect();
    let Some(&m) = members.first() else {
        return Err(Error::InvalidGenerators("no nonzero member in range".into()));
    };
    let bound = (frobenius + m as i64).max(m as i64) as usize;
    if bits.len() <= bound {
        return Err(Error::InvalidGenerators(format!(
            "membership covers [0, {}] but [0, {}] is needed",
            bits.len() - 1,
            bound + 1
        )));
    }
    if ((frobenius + 1).max(0) as usize..bits.len()).any(|i| !bits[i])
        || (frobenius >= 0 && bits[frobenius as usize])
    {
        return Err(Error::InvalidGenerators("bits disagree with the stated Frobenius number".into()));
    }
    for (ia, &a) in members.iter().enumerate() {
        for &b in &members[ia..] {
            if a + b >= bits.len() {
                break;
            }
            if !bits[a + b] {
                return Err(Error::NotClosed { a: a as u64, b: b as u64 });
            }
        }
    }
    let mut out = Vec::new();
    for &s in members.iter().take_while(|&&s| s <= bound) {
        let decomposable = members
            .iter()
            .take_while(|&&a| 2 * a <= s)
            .any(|&a| bits[s - a]);
        if !decomposable {
            out.push(s as u64);
        }
    }
    Ok(out)
}
