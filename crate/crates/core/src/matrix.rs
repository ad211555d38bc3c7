//! Dense square matrices over ℚ and rectangular matrices over ℤ.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{denominator_lcm, parse_rational, Rational};

/// A square `dim × dim` matrix of exact rationals, stored row-major.
///
/// `dim == 0` is only reachable through [`RationalMatrix::empty`], which acts
/// as the unit for [`RationalMatrix::direct_sum`]; the interchange format
/// rejects it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    dim: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(dim: usize, entries: Vec<Rational>) -> Result<Self> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(Error::NotSquare);
        }
        Ok(Self { dim, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::NotSquare);
        }
        Self::new(dim, rows.into_iter().flatten().collect())
    }

    /// Convenience for literals: `parse_rows(&[&["1", "1/3"], &["0", "1"]])`.
    pub fn parse_rows(rows: &[&[&str]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn empty() -> Self {
        Self { dim: 0, entries: Vec::new() }
    }

    pub fn zeros(dim: usize) -> Self {
        Self { dim, entries: vec![Rational::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Rational::one();
        }
        m
    }

    /// Matrix whose only nonzero entries are `values` on the first superdiagonal.
    pub fn superdiag(values: &[Rational]) -> Self {
        let dim = values.len() + 1;
        let mut m = Self::zeros(dim);
        for (i, v) in values.iter().enumerate() {
            m.entries[i * dim + i + 1] = v.clone();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.dim.max(1))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Every entry has denominator 1.
    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.is_integer())
    }

    pub fn denominator_lcm(&self) -> BigInt {
        denominator_lcm(self.entries.iter())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self { dim: self.dim, entries: self.entries.iter().map(|e| e * k).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(self.mul_unchecked(other))
    }

    // Skips zero entries of the left factor; most matrices built here are sparse.
    fn mul_unchecked(&self, other: &Self) -> Self {
        let d = self.dim;
        let mut out = vec![Rational::zero(); d * d];
        for i in 0..d {
            let row = &mut out[i * d..(i + 1) * d];
            for k in 0..d {
                let a = &self.entries[i * d + k];
                if a.is_zero() {
                    continue;
                }
                let other_row = &other.entries[k * d..(k + 1) * d];
                for (acc, b) in row.iter_mut().zip(other_row) {
                    if !b.is_zero() {
                        *acc += a * b;
                    }
                }
            }
        }
        Self { dim: d, entries: out }
    }

    /// `A^n` by binary powering; `A^0 = I`.
    pub fn pow(&self, mut n: u64) -> Self {
        let mut result = Self::identity(self.dim);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        result
    }

    /// `I, A, A², …, A^(count-1)`
    pub fn powers(&self, count: usize) -> Vec<Self> {
        let mut out = Vec::with_capacity(count);
        let mut cur = Self::identity(self.dim);
        for _ in 0..count {
            let next = cur.mul_unchecked(self);
            out.push(std::mem::replace(&mut cur, next));
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        self.rows()
            .map(|row| row.iter().zip(v).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let d = self.dim;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for j in 0..d {
                out.entries[j * d + i] = self.entries[i * d + j].clone();
            }
        }
        out
    }

    pub fn trace(&self) -> Rational {
        (0..self.dim).fold(Rational::zero(), |acc, i| acc + self.get(i, i))
    }

    /// Determinant by Gaussian elimination over ℚ.
    pub fn det(&self) -> Rational {
        let d = self.dim;
        let mut m = self.entries.clone();
        let mut det = Rational::one();
        for col in 0..d {
            let Some(pivot) = (col..d).find(|&r| !m[r * d + col].is_zero()) else {
                return Rational::zero();
            };
            if pivot != col {
                for j in 0..d {
                    m.swap(pivot * d + j, col * d + j);
                }
                det = -det;
            }
            let p = m[col * d + col].clone();
            det *= &p;
            for r in col + 1..d {
                let f = &m[r * d + col] / &p;
                if f.is_zero() {
                    continue;
                }
                for j in col..d {
                    let t = &f * &m[col * d + j];
                    m[r * d + j] -= t;
                }
            }
        }
        det
    }

    /// Exact inverse by Gauss–Jordan; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let d = self.dim;
        let mut m = self.entries.clone();
        let mut inv = Self::identity(d).entries;
        for col in 0..d {
            let pivot = (col..d).find(|&r| !m[r * d + col].is_zero())?;
            if pivot != col {
                for j in 0..d {
                    m.swap(pivot * d + j, col * d + j);
                    inv.swap(pivot * d + j, col * d + j);
                }
            }
            let p = m[col * d + col].clone();
            for j in 0..d {
                m[col * d + j] /= &p;
                inv[col * d + j] /= &p;
            }
            for r in 0..d {
                if r == col {
                    continue;
                }
                let f = m[r * d + col].clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let t = &f * &m[col * d + j];
                    m[r * d + j] -= t;
                    let t = &f * &inv[col * d + j];
                    inv[r * d + j] -= t;
                }
            }
        }
        Some(Self { dim: d, entries: inv })
    }

    /// Adjugate via Cayley–Hamilton: with `p(x) = x^d + c_{d-1}x^{d-1} + … + c_0`,
    /// `adj A = (-1)^{d-1} (A^{d-1} + c_{d-1}A^{d-2} + … + c_1 I)`.
    /// Valid for singular matrices as well.
    pub fn adjugate(&self) -> Self {
        let d = self.dim;
        if d == 0 {
            return Self::empty();
        }
        let p = self.char_poly();
        // Horner on the quotient p(x) div x.
        let mut acc = Self::zeros(d);
        for k in (1..=d).rev() {
            acc = acc.mul_unchecked(self);
            let c = p.coeff(k);
            for i in 0..d {
                acc.entries[i * d + i] += &c;
            }
        }
        if d % 2 == 0 {
            acc = acc.scale(&-Rational::one());
        }
        acc
    }

    /// Kronecker product; dimensions multiply.
    pub fn kron(&self, other: &Self) -> Self {
        let (p, q) = (self.dim, other.dim);
        let n = p * q;
        let mut out = Self::zeros(n);
        for i in 0..p {
            for j in 0..p {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..q {
                    for l in 0..q {
                        out.entries[(i * q + k) * n + j * q + l] = a * other.get(k, l);
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal sum `self ⊕ other`; dimensions add.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (p, q) = (self.dim, other.dim);
        let n = p + q;
        let mut out = Self::zeros(n);
        for i in 0..p {
            for j in 0..p {
                out.entries[i * n + j] = self.get(i, j).clone();
            }
        }
        for i in 0..q {
            for j in 0..q {
                out.entries[(p + i) * n + p + j] = other.get(i, j).clone();
            }
        }
        out
    }

    /// Characteristic polynomial `det(xI - A)`, monic of degree `dim`.
    ///
    /// Reduces to upper Hessenberg form by exact similarity, then runs the
    /// standard determinant recurrence on the leading principal minors.
    pub fn char_poly(&self) -> Polynomial {
        let n = self.dim;
        let mut h = self.entries.clone();
        let at = |r: usize, c: usize| r * n + c;
        for j in 0..n.saturating_sub(2) {
            let Some(piv) = (j + 1..n).find(|&r| !h[at(r, j)].is_zero()) else {
                continue;
            };
            if piv != j + 1 {
                for c in 0..n {
                    h.swap(at(piv, c), at(j + 1, c));
                }
                for r in 0..n {
                    h.swap(at(r, piv), at(r, j + 1));
                }
            }
            let p = h[at(j + 1, j)].clone();
            for r in j + 2..n {
                let t = &h[at(r, j)] / &p;
                if t.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let v = &t * &h[at(j + 1, c)];
                    h[at(r, c)] -= v;
                }
                for rr in 0..n {
                    let v = &t * &h[at(rr, r)];
                    h[at(rr, j + 1)] += v;
                }
            }
        }
        // p_0 = 1; p_m = (x - h_mm) p_{m-1} - Σ_{i<m} h_im (Π_{k=i+1..m} h_{k,k-1}) p_{i-1}
        let mut polys: Vec<Polynomial> = vec![Polynomial::one()];
        for m in 0..n {
            let mut pm = polys[m].mul_linear(&h[at(m, m)]);
            let mut t = Rational::one();
            for i in (0..m).rev() {
                t *= &h[at(i + 1, i)];
                if t.is_zero() {
                    break;
                }
                let coeff = &h[at(i, m)] * &t;
                if !coeff.is_zero() {
                    pm = pm.sub(&polys[i].scale(&coeff));
                }
            }
            polys.push(pm);
        }
        polys.pop().unwrap()
    }

    /// Minimal polynomial: the first linear dependence among vec(I), vec(A), …
    /// found by incremental exact elimination.
    pub fn min_poly(&self) -> Polynomial {
        let d = self.dim;
        let len = d * d;
        // Each reduced row keeps its pivot and its expression in powers of A.
        let mut basis: Vec<(usize, Vec<Rational>, Vec<Rational>)> = Vec::new();
        let mut power = Self::identity(d);
        for k in 0..=d {
            let mut v = power.entries.clone();
            let mut combo = vec![Rational::zero(); k + 1];
            combo[k] = Rational::one();
            for (pivot, row, row_combo) in &basis {
                let f = v[*pivot].clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..len {
                    if !row[j].is_zero() {
                        let t = &f * &row[j];
                        v[j] -= t;
                    }
                }
                for (c, rc) in combo.iter_mut().zip(row_combo) {
                    *c -= &f * rc;
                }
            }
            match v.iter().position(|x| !x.is_zero()) {
                None => {
                    let p = Polynomial::new(combo);
                    let lead = p.leading().unwrap().clone();
                    return p.scale(&(Rational::one() / lead));
                }
                Some(pivot) => {
                    let inv = Rational::one() / &v[pivot];
                    for x in v.iter_mut() {
                        *x *= &inv;
                    }
                    for c in combo.iter_mut() {
                        *c *= &inv;
                    }
                    // keep earlier rows reduced at the new pivot
                    for (_, row, row_combo) in basis.iter_mut() {
                        let f = row[pivot].clone();
                        if f.is_zero() {
                            continue;
                        }
                        for j in 0..len {
                            if !v[j].is_zero() {
                                let t = &f * &v[j];
                                row[j] -= t;
                            }
                        }
                        row_combo.resize(k + 1, Rational::zero());
                        for (rc, c) in row_combo.iter_mut().zip(&combo) {
                            *rc -= &f * c;
                        }
                    }
                    basis.push((pivot, v, combo));
                }
            }
            power = power.mul_unchecked(self);
        }
        unreachable!("Cayley–Hamilton bounds the degree by dim")
    }

    /// `p(A)` by Horner's rule.
    pub fn eval_poly(&self, p: &Polynomial) -> Self {
        let d = self.dim;
        let mut acc = Self::zeros(d);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul_unchecked(self);
            for i in 0..d {
                acc.entries[i * d + i] += c;
            }
        }
        acc
    }

    /// Integer copy when every entry is integral.
    pub fn to_int(&self) -> Option<IntMatrix> {
        self.is_integral().then(|| IntMatrix {
            rows: self.dim,
            cols: self.dim,
            entries: self.entries.iter().map(|e| e.to_integer()).collect(),
        })
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(crate::rational::format_rational).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Rectangular integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count does not match shape");
        Self { rows, cols, entries }
    }

    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Self::new(r, c, rows.iter().flat_map(|x| x.iter().map(|&v| BigInt::from(v))).collect())
    }

    /// Builds from column vectors (each of equal length).
    pub fn from_columns(cols: &[Vec<BigInt>]) -> Self {
        let ncols = cols.len();
        let nrows = cols.first().map_or(0, Vec::len);
        let mut entries = vec![BigInt::zero(); nrows * ncols];
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                entries[i * ncols + j] = v.clone();
            }
        }
        Self::new(nrows, ncols, entries)
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![BigInt::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = BigInt::one();
        }
        Self::new(dim, dim, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn row_vec(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = vec![BigInt::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Self::new(self.rows, other.cols, out)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Panics if the matrix is not square or has zero size.
    pub fn to_rational(&self) -> RationalMatrix {
        assert!(self.is_square() && self.rows > 0);
        RationalMatrix {
            dim: self.rows,
            entries: self.entries.iter().map(|e| Rational::from_integer(e.clone())).collect(),
        }
    }

    pub fn det(&self) -> BigInt {
        self.to_rational().det().to_integer()
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.entries.iter().map(|e| e.abs()).max().unwrap_or_default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn m(rows: &[&[&str]]) -> RationalMatrix {
        RationalMatrix::parse_rows(rows).unwrap()
    }

    #[test]
    fn identity_is_multiplicative_unit() {
        let a = m(&[&["-1/4", "19/16"], &["-3", "-7/4"]]);
        assert_eq!(RationalMatrix::identity(2).mul(&a).unwrap(), a);
        assert_eq!(a.pow(0), RationalMatrix::identity(2));
    }

    #[test]
    fn unipotent_powers() {
        let a = m(&[&["1", "1/3"], &["0", "1"]]);
        assert_eq!(a.mul(&a).unwrap(), m(&[&["1", "2/3"], &["0", "1"]]));
        assert_eq!(a.pow(3), m(&[&["1", "1"], &["0", "1"]]));
    }

    #[test]
    fn mismatched_dimensions_are_rejected() {
        let err = RationalMatrix::identity(2).mul(&RationalMatrix::identity(3)).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn integrality() {
        assert!(RationalMatrix::identity(4).is_integral());
        assert!(!m(&[&["2", "1/2"], &["0", "1"]]).is_integral());
        assert!(m(&[&["1", "1"], &["0", "1"]]).is_integral());
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(m(&[&["2", "1/2"], &["0", "1"]]).char_poly(), Polynomial::from_ints(&[2, -3, 1]));
        assert_eq!(RationalMatrix::zeros(3).char_poly(), Polynomial::monomial(3));
        let sd = RationalMatrix::superdiag(&[int(2), rat(1, 2), int(-3), rat(5, 7)]);
        assert_eq!(sd.char_poly(), Polynomial::monomial(5));
        // needs a row swap during the Hessenberg reduction
        let a = RationalMatrix::from_int_rows(&[&[1, 2, 3], &[0, 4, 5], &[6, 0, 7]]).unwrap();
        assert_eq!(a.eval_poly(&a.char_poly()), RationalMatrix::zeros(3));
    }

    #[test]
    fn min_poly_examples() {
        assert_eq!(RationalMatrix::identity(3).min_poly(), Polynomial::from_ints(&[-1, 1]));
        assert_eq!(m(&[&["2", "1/2"], &["0", "1"]]).min_poly(), Polynomial::from_ints(&[2, -3, 1]));
        let jordan = RationalMatrix::superdiag(&[int(1), int(1), int(1)]);
        assert_eq!(jordan.min_poly(), Polynomial::monomial(4));
        assert_eq!(RationalMatrix::zeros(2).min_poly(), Polynomial::monomial(1));
        let blocks = RationalMatrix::identity(2).direct_sum(&RationalMatrix::zeros(1).scale(&int(0)));
        assert_eq!(blocks.min_poly(), Polynomial::from_ints(&[0, -1, 1]));
    }

    #[test]
    fn det_trace_adjugate() {
        assert_eq!(m(&[&["1", "1/3"], &["0", "1"]]).det(), int(1));
        assert_eq!(m(&[&["2", "1/2"], &["0", "1"]]).det(), int(2));
        assert_eq!(RationalMatrix::identity(3).adjugate(), RationalMatrix::identity(3));
        let a = m(&[&["0", "1"], &["0", "0"]]);
        assert_eq!(a.adjugate(), m(&[&["0", "-1"], &["0", "0"]]));
        assert_eq!(m(&[&["-1/4", "19/16"], &["-3", "-7/4"]]).trace(), int(-2));
    }

    #[test]
    fn kron_and_direct_sum() {
        let a = m(&[&["2/3"]]);
        let b = m(&[&["3/2"]]);
        assert_eq!(a.kron(&b), m(&[&["1"]]));
        let c = m(&[&["1", "1/3"], &["0", "1"]]);
        assert_eq!(c.direct_sum(&RationalMatrix::empty()), c);
        assert_eq!(RationalMatrix::empty().direct_sum(&c), c);
        assert_eq!(RationalMatrix::identity(2).kron(&c), c.direct_sum(&c));
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&["-9/4", "-5/4", "1/8"], &["-3", "0", "-5/2"], &["-1/2", "3/2", "-7/4"]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), RationalMatrix::identity(3));
        assert!(RationalMatrix::zeros(2).inverse().is_none());
    }
}
