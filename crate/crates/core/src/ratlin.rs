//! Exact rational scalars and dense matrices over ℚ.
//!
//! Everything downstream (cochain operators, Killing forms, Betti numbers)
//! reduces to rank and kernel computations here, so nothing in this module
//! ever touches floating point.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// A coordinate vector over ℚ.
pub type Vector = Vec<Rational>;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Parses `"p/q"`, `"-p/q"` or a plain integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::parse(format!("rational `{s}`"), "expected an integer or p/q");
    let parse_int = |x: &str| x.trim().parse::<BigInt>().map_err(|_| bad());
    match t.split_once('/') {
        Some((p, q)) => {
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(Error::parse(format!("rational `{s}`"), "zero denominator"));
            }
            Ok(Rational::new(parse_int(p)?, q))
        }
        None => Ok(Rational::from_integer(parse_int(t)?)),
    }
}

/// Cost of using `x` as a pivot: total bit length of numerator and denominator.
fn pivot_weight(x: &Rational) -> u64 {
    x.numer().bits() + x.denom().bits()
}

/// Dense row-major matrix over ℚ.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let n = rows.len();
        Ok(Matrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix from small integers; panics on ragged input.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let rows = rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        Matrix::from_rows(rows).expect("ragged integer matrix")
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, x) in c.iter().enumerate() {
                if !x.is_zero() {
                    m[(i, j)] = x.clone();
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn column_vectors(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = &self[(i, j)];
                if !x.is_zero() {
                    t[(j, i)] = x.clone();
                }
            }
        }
        t
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    /// In-place `self += s * other`.
    pub fn add_scaled(&mut self, other: &Matrix, s: &Rational) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += b * s;
            }
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Commutator `AB - BA`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).fold(Rational::zero(), |acc, i| acc + &self[(i, i)])
    }

    /// Stacks `blocks` vertically; all must share a column count.
    pub fn vstack(cols: usize, blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            data.extend(b.data.iter().cloned());
        }
        Matrix { rows, cols, data }
    }

    /// Block-diagonal matrix from square or rectangular blocks.
    pub fn block_diagonal(blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn rank(&self) -> usize {
        rref(self.row_vectors(), self.cols).pivots.len()
    }

    pub fn kernel_basis(&self) -> Vec<Vector> {
        kernel_basis(self)
    }

    /// Exact determinant by fraction Gaussian elimination.
    pub fn determinant(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut rows = self.row_vectors();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n)
                .filter(|&r| !rows[r][c].is_zero())
                .min_by_key(|&r| pivot_weight(&rows[r][c]))
            else {
                return Ok(Rational::zero());
            };
            if p != c {
                rows.swap(p, c);
                det = -det;
            }
            let pivot = rows[c][c].clone();
            det *= &pivot;
            for r in c + 1..n {
                if rows[r][c].is_zero() {
                    continue;
                }
                let f = &rows[r][c] / &pivot;
                for j in c..n {
                    if !rows[c][j].is_zero() {
                        let delta = &f * &rows[c][j];
                        rows[r][j] -= delta;
                    }
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let cols: Vec<Vector> = self.column_vectors();
        let targets: Vec<Vector> = (0..n).map(|i| unit_vector(n, i)).collect();
        let coeffs = express_in_basis(n, &cols, &targets)?;
        // coeffs[t] gives the coordinates of e_t in the column basis: column t of the inverse
        Some(Matrix::from_columns(n, &coeffs))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form of a list of rows.
#[derive(Debug, Clone)]
pub struct Echelon {
    /// Nonzero rows of the reduced form, pivot entries equal to one.
    pub rows: Vec<Vector>,
    /// Pivot column of each row, strictly increasing.
    pub pivots: Vec<usize>,
    pub cols: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` against the echelon rows. The result is zero iff `v` lies in
    /// their span, and is a canonical normal form modulo that span otherwise.
    pub fn reduce(&self, v: &[Rational]) -> Vector {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        is_zero_vector(&self.reduce(v))
    }
}

/// Gauss–Jordan elimination. Among candidate pivots in a column the entry
/// with the smallest bit size is taken to limit coefficient growth.
pub fn rref(mut rows: Vec<Vector>, cols: usize) -> Echelon {
    rows.retain(|r| !is_zero_vector(r));
    let mut pivots = Vec::new();
    let mut top = 0;
    for c in 0..cols {
        if top == rows.len() {
            break;
        }
        let Some(p) = (top..rows.len())
            .filter(|&r| !rows[r][c].is_zero())
            .min_by_key(|&r| pivot_weight(&rows[r][c]))
        else {
            continue;
        };
        rows.swap(top, p);
        let inv = rows[top][c].recip();
        let support: Vec<usize> = (c..cols).filter(|&j| !rows[top][j].is_zero()).collect();
        for &j in &support {
            rows[top][j] *= &inv;
        }
        let pivot_row = std::mem::take(&mut rows[top]);
        for (r, row) in rows.iter_mut().enumerate() {
            if r == top || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &support {
                row[j] -= &f * &pivot_row[j];
            }
        }
        rows[top] = pivot_row;
        pivots.push(c);
        top += 1;
    }
    rows.truncate(top);
    Echelon { rows, pivots, cols }
}

/// Rank of a family of vectors of common length `len`.
pub fn rank_of(vectors: &[Vector], len: usize) -> usize {
    rref(vectors.to_vec(), len).rank()
}

/// Basis of the null space, one vector per free column with that free
/// variable set to one and the other free variables zero.
pub fn kernel_basis(m: &Matrix) -> Vec<Vector> {
    let ech = rref(m.row_vectors(), m.cols());
    kernel_from_echelon(&ech)
}

pub fn kernel_from_echelon(ech: &Echelon) -> Vec<Vector> {
    let mut is_pivot = vec![false; ech.cols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    (0..ech.cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = zero_vector(ech.cols);
            v[f] = Rational::one();
            for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                if !row[f].is_zero() {
                    v[p] = -row[f].clone();
                }
            }
            v
        })
        .collect()
}

/// `dim span(big) - dim span(small)`, after checking that `small` lies in
/// the span of `big`.
pub fn quotient_dim(big: &[Vector], small: &[Vector], len: usize) -> Result<usize> {
    let rb = rank_of(big, len);
    let rs = rank_of(small, len);
    let union: Vec<Vector> = big.iter().chain(small).cloned().collect();
    let ru = rank_of(&union, len);
    if ru > rb {
        return Err(Error::SubspaceNotContained { big: rb, union: ru });
    }
    Ok(rb - rs)
}

/// Expresses each target as a combination of `basis` (assumed linearly
/// independent, each of length `len`). Returns `None` if some target is
/// outside the span.
pub fn express_in_basis(len: usize, basis: &[Vector], targets: &[Vector]) -> Option<Vec<Vector>> {
    let r = basis.len();
    let t = targets.len();
    let rows: Vec<Vector> = (0..len)
        .map(|i| {
            basis
                .iter()
                .map(|b| b[i].clone())
                .chain(targets.iter().map(|v| v[i].clone()))
                .collect()
        })
        .collect();
    let ech = rref(rows, r + t);
    // a pivot past column r means a target escapes the span; fewer than r
    // pivots means the basis was dependent
    if ech.pivots.len() != r || ech.pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(
        (0..t)
            .map(|ti| (0..r).map(|i| ech.rows[i][r + ti].clone()).collect())
            .collect(),
    )
}

/// Canonical basis of `span(vectors)`: the nonzero rows of its reduced row
/// echelon form.
pub fn canonical_span(vectors: &[Vector], len: usize) -> Vec<Vector> {
    rref(vectors.to_vec(), len).rows
}

/// Formats a rational as `p/q` or `p`; the inverse of [`parse_rational`].
pub fn fmt_rational(x: &Rational) -> String {
    x.to_string()
}

pub fn abs(x: &Rational) -> Rational {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn identity_has_full_rank_and_trivial_kernel() {
        let id = Matrix::identity(3);
        assert_eq!(id.rank(), 3);
        assert!(id.kernel_basis().is_empty());
    }

    #[test]
    fn proportional_rows() {
        assert_eq!(Matrix::from_ints(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn zero_matrix_kernel_is_standard_basis() {
        let k = Matrix::zeros(2, 2).kernel_basis();
        assert_eq!(k, vec![v(&[1, 0]), v(&[0, 1])]);
    }

    #[test]
    fn kernel_uses_free_variable_normalisation() {
        // x + 2y + 3z = 0 -> free y, z
        let k = Matrix::from_ints(&[&[1, 2, 3]]).kernel_basis();
        assert_eq!(k, vec![v(&[-2, 1, 0]), v(&[-3, 0, 1])]);
    }

    #[test]
    fn quotient_dims() {
        let e1 = v(&[1, 0]);
        let e2 = v(&[0, 1]);
        assert_eq!(quotient_dim(&[e1.clone(), e2.clone()], &[e1.clone()], 2), Ok(1));
        assert_eq!(quotient_dim(&[e1.clone()], &[e1.clone()], 2), Ok(0));
        assert!(matches!(
            quotient_dim(&[e1], &[e2], 2),
            Err(Error::SubspaceNotContained { .. })
        ));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_rational("-5/2").unwrap(), frac(-5, 2));
        assert_eq!(parse_rational(" 6 ").unwrap(), int(6));
        assert_eq!(parse_rational("4/-6").unwrap(), frac(-2, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert_eq!(fmt_rational(&frac(50, 3)), "50/3");
        assert_eq!(fmt_rational(&frac(12, 2)), "6");
    }

    #[test]
    fn determinant_and_inverse() {
        let b = Matrix::from_ints(&[&[8, 0, 0], &[0, 0, 4], &[0, 4, 0]]);
        assert_eq!(b.determinant().unwrap(), int(-128));
        let inv = b.inverse().unwrap();
        assert_eq!(b.mul(&inv), Matrix::identity(3));
        assert!(Matrix::from_ints(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn express_detects_escape() {
        let basis = vec![v(&[1, 1, 0])];
        assert_eq!(
            express_in_basis(3, &basis, &[v(&[2, 2, 0])]),
            Some(vec![v(&[2])])
        );
        assert_eq!(express_in_basis(3, &basis, &[v(&[1, 0, 0])]), None);
    }

    #[test]
    fn echelon_reduce_gives_normal_form() {
        let ech = rref(vec![v(&[1, 1, 0])], 3);
        assert!(ech.contains(&v(&[3, 3, 0])));
        assert_eq!(ech.reduce(&v(&[1, 0, 0])), v(&[0, -1, 0]));
    }
}
