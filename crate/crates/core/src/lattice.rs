//! Full-rank integer lattices in canonical Hermite normal form.
//!
//! Convention used everywhere in this crate: basis vectors are the *columns*
//! of a lower-triangular matrix `H` with `H[i][i] > 0` and, in every row `i`,
//! the entries left of the diagonal reduced into `[0, H[i][i])`. This form is
//! unique per lattice, so two bases span the same lattice iff their HNFs are
//! equal.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerLattice {
    basis: IntMatrix,
}

impl IntegerLattice {
    /// `ℤ^d`
    pub fn standard(dim: usize) -> Self {
        Self { basis: IntMatrix::identity(dim) }
    }

    /// Lattice spanned by the columns of `generators` (any number ≥ rows).
    pub fn from_generators(generators: &IntMatrix) -> Result<Self> {
        hnf(generators)
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// Index `[ℤ^d : Λ]`, the product of the diagonal.
    pub fn index(&self) -> BigInt {
        (0..self.dim()).map(|i| self.basis.get(i, i).clone()).product()
    }

    /// Membership by forward substitution on the triangular basis.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        let d = self.dim();
        assert_eq!(v.len(), d);
        let mut rest: Vec<BigInt> = v.to_vec();
        for i in 0..d {
            let h = self.basis.get(i, i);
            let (q, r) = rest[i].div_rem(h);
            if !r.is_zero() {
                return false;
            }
            if q.is_zero() {
                continue;
            }
            for k in i..d {
                let t = &q * self.basis.get(k, i);
                rest[k] -= t;
            }
        }
        true
    }
}

/// Column-style Hermite normal form of the lattice spanned by the columns of `m`.
///
/// Fails with [`Error::RankDeficient`] unless the columns span a lattice of
/// full rank `m.rows()`.
pub fn hnf(m: &IntMatrix) -> Result<IntegerLattice> {
    let d = m.rows();
    let mut cols = m.columns();
    if cols.len() < d {
        return Err(Error::RankDeficient);
    }
    for i in 0..d {
        // Euclid on row i across columns i.., leaving the gcd in column i.
        loop {
            let pivot = (i..cols.len())
                .filter(|&j| !cols[j][i].is_zero())
                .min_by(|&a, &b| cols[a][i].abs().cmp(&cols[b][i].abs()));
            let Some(p) = pivot else {
                return Err(Error::RankDeficient);
            };
            cols.swap(i, p);
            let mut done = true;
            for j in i + 1..cols.len() {
                if cols[j][i].is_zero() {
                    continue;
                }
                let q = cols[j][i].div_floor(&cols[i][i]);
                if !q.is_zero() {
                    let (head, tail) = cols.split_at_mut(j);
                    axpy(&mut tail[0], &q, &head[i], i);
                }
                if !cols[j][i].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if cols[i][i].is_negative() {
            for x in cols[i].iter_mut() {
                *x = -&*x;
            }
        }
        for j in 0..i {
            let q = cols[j][i].div_floor(&cols[i][i]);
            if !q.is_zero() {
                let (head, tail) = cols.split_at_mut(i);
                axpy(&mut head[j], &q, &tail[0], i);
            }
        }
    }
    cols.truncate(d);
    Ok(IntegerLattice { basis: IntMatrix::from_columns(&cols) })
}

// target[k] -= q * source[k] for k >= from (entries above `from` are zero in source)
fn axpy(target: &mut [BigInt], q: &BigInt, source: &[BigInt], from: usize) {
    for (t, s) in target[from..].iter_mut().zip(&source[from..]) {
        if !s.is_zero() {
            *t -= q * s;
        }
    }
}
