//! Exact linear algebra over the rationals.
//!
//! Dense helpers operate on row-major `Vec<Vec<Q>>`; representation matrices
//! use [`SparseMatrix`], which keeps each row as a sorted list of nonzero
//! entries. Ranks of large matrices go through fraction-free (Bareiss)
//! elimination over the integers after clearing row denominators.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Multiply each row by the lcm of its denominators.
pub fn clear_denominators(rows: &[Vec<Q>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect()
}

/// Rank of an integer matrix by fraction-free elimination.
pub fn rank_int(mut m: Vec<Vec<BigInt>>) -> usize {
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut prev = BigInt::one();
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        let Some(p) = (row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let (top, rest) = m.split_at_mut(row + 1);
        let pivot_row = &top[row];
        let pivot = pivot_row[col].clone();
        for r in rest.iter_mut() {
            let factor = r[col].clone();
            for j in col + 1..ncols {
                let v = &r[j] * &pivot - &factor * &pivot_row[j];
                r[j] = v / &prev;
            }
            r[col] = BigInt::zero();
        }
        prev = pivot;
        row += 1;
    }
    row
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    rank_int(clear_denominators(rows))
}

/// Reduced row echelon form; returns the reduced rows (zero rows dropped)
/// and the pivot column of each.
pub fn rref(rows: &[Vec<Q>]) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let nrows = m.len();
    if nrows == 0 {
        return (m, vec![]);
    }
    let ncols = m[0].len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        let Some(p) = (row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let factor = other[col].clone();
            for (x, y) in other.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = &*x - &factor * y;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.truncate(row);
    (m, pivots)
}

/// Basis of `{x : rows · x = 0}`.
pub fn nullspace(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let (r, pivots) = rref(rows);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Q::zero(); ncols];
        v[free] = Q::one();
        for (row, &p) in r.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

pub fn determinant(a: &[Vec<Q>]) -> Q {
    let n = a.len();
    let mut m = a.to_vec();
    let mut det = Q::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Q::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot;
            for j in col..n {
                let v = &factor * &m[col][j];
                m[r][j] -= v;
            }
        }
    }
    det
}

pub fn inverse(a: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = a.len();
    let aug: Vec<Vec<Q>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(r.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Solve `a · x = b` for square invertible `a`.
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let inv = inverse(a)?;
    Some(mat_vec(&inv, b))
}

pub fn mat_vec(a: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    a.iter().map(|row| dot(row, v)).collect()
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Sparse square-or-rectangular matrix with sorted nonzero entries per row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    n_rows: usize,
    n_cols: usize,
    rows: Vec<Vec<(usize, Q)>>,
}

impl SparseMatrix {
    pub fn zero(n_rows: usize, n_cols: usize) -> Self {
        SparseMatrix {
            n_rows,
            n_cols,
            rows: vec![Vec::new(); n_rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.rows[i].push((i, Q::one()));
        }
        m
    }

    pub fn from_entries(
        n_rows: usize,
        n_cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, Q)>,
    ) -> Self {
        let mut acc: Vec<std::collections::BTreeMap<usize, Q>> = vec![Default::default(); n_rows];
        for (i, j, v) in entries {
            assert!(i < n_rows && j < n_cols, "entry ({i},{j}) out of bounds");
            *acc[i].entry(j).or_insert_with(Q::zero) += v;
        }
        SparseMatrix {
            n_rows,
            n_cols,
            rows: acc
                .into_iter()
                .map(|r| r.into_iter().filter(|(_, v)| !v.is_zero()).collect())
                .collect(),
        }
    }

    pub fn from_dense(d: &[Vec<Q>]) -> Self {
        let n_cols = d.first().map_or(0, Vec::len);
        Self::from_entries(
            d.len(),
            n_cols,
            d.iter().enumerate().flat_map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(move |(j, v)| (i, j, v.clone()))
            }),
        )
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        let mut d = vec![vec![Q::zero(); self.n_cols]; self.n_rows];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row {
                d[i][*j] = v.clone();
            }
        }
        d
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn row(&self, i: usize) -> &[(usize, Q)] {
        &self.rows[i]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Q)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        match self.rows[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(k) => self.rows[i][k].1.clone(),
            Err(_) => Q::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries().all(|(i, j, _)| i == j)
    }

    pub fn diagonal(&self) -> Vec<Q> {
        (0..self.n_rows.min(self.n_cols))
            .map(|i| self.get(i, i))
            .collect()
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.n_cols);
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .filter(|(j, _)| !v[*j].is_zero())
                    .fold(Q::zero(), |acc, (j, x)| acc + x * &v[*j])
            })
            .collect()
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.n_cols, other.n_rows);
        let entries = self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .flat_map(move |(k, a)| other.rows[*k].iter().map(move |(j, b)| (i, *j, a * b)))
        });
        SparseMatrix::from_entries(self.n_rows, other.n_cols, entries.collect::<Vec<_>>())
    }

    pub fn scale(&self, c: &Q) -> SparseMatrix {
        if c.is_zero() {
            return SparseMatrix::zero(self.n_rows, self.n_cols);
        }
        SparseMatrix {
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|(j, v)| (*j, v * c)).collect())
                .collect(),
        }
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        self.lin_comb(&Q::one(), other, &Q::one())
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        self.lin_comb(&Q::one(), other, &-Q::one())
    }

    /// `a·self + b·other`
    pub fn lin_comb(&self, a: &Q, other: &SparseMatrix, b: &Q) -> SparseMatrix {
        assert_eq!((self.n_rows, self.n_cols), (other.n_rows, other.n_cols));
        let entries = self
            .entries()
            .map(|(i, j, v)| (i, j, v * a))
            .chain(other.entries().map(|(i, j, v)| (i, j, v * b)))
            .collect::<Vec<_>>();
        SparseMatrix::from_entries(self.n_rows, self.n_cols, entries)
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix::from_entries(
            self.n_cols,
            self.n_rows,
            self.entries()
                .map(|(i, j, v)| (j, i, v.clone()))
                .collect::<Vec<_>>(),
        )
    }

    pub fn commutator(&self, other: &SparseMatrix) -> SparseMatrix {
        self.mul(other).sub(&other.mul(self))
    }

    /// `tr(self · other)` without forming the product.
    pub fn trace_product(&self, other: &SparseMatrix) -> Q {
        let mut t = Q::zero();
        for (i, row) in self.rows.iter().enumerate() {
            for (k, a) in row {
                let b = other.get(*k, i);
                if !b.is_zero() {
                    t += a * b;
                }
            }
        }
        t
    }

    /// Block-diagonal sum.
    pub fn block_diag(blocks: &[&SparseMatrix]) -> SparseMatrix {
        let n_rows = blocks.iter().map(|b| b.n_rows).sum();
        let n_cols = blocks.iter().map(|b| b.n_cols).sum();
        let mut m = SparseMatrix::zero(n_rows, n_cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for (i, row) in b.rows.iter().enumerate() {
                m.rows[r0 + i] = row.iter().map(|(j, v)| (c0 + j, v.clone())).collect();
            }
            r0 += b.n_rows;
            c0 += b.n_cols;
        }
        m
    }

    /// Extract the block `rows × cols` as a new matrix.
    pub fn block(
        &self,
        rows: std::ops::Range<usize>,
        cols: std::ops::Range<usize>,
    ) -> SparseMatrix {
        let entries = self
            .entries()
            .filter(|(i, j, _)| rows.contains(i) && cols.contains(j))
            .map(|(i, j, v)| (i - rows.start, j - cols.start, v.clone()))
            .collect::<Vec<_>>();
        SparseMatrix::from_entries(rows.len(), cols.len(), entries)
    }

    pub fn max_abs_denominator(&self) -> BigInt {
        self.entries()
            .map(|(_, _, v)| v.denom().abs())
            .max()
            .unwrap_or_else(BigInt::one)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| q(x)).collect())
            .collect()
    }

    #[test]
    fn rank_matches_rref() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1], &[1, 3, 4]]);
        assert_eq!(rank(&a), 2);
        assert_eq!(rref(&a).1.len(), 2);
        let b = m(&[&[0, 0, 1, 2], &[0, 0, 2, 4], &[0, 1, 0, 0]]);
        assert_eq!(rank(&b), 2);
        assert_eq!(rank(&m(&[&[0, 0], &[0, 0]])), 0);
    }

    #[test]
    fn bareiss_with_skipped_columns() {
        // zero column in the middle and a fractional row
        let a = vec![
            vec![qf(1, 2), q(0), q(3), q(1)],
            vec![q(1), q(0), q(6), q(2)],
            vec![q(0), q(0), q(1), qf(-1, 3)],
            vec![q(2), q(0), q(0), q(5)],
        ];
        assert_eq!(rank(&a), rref(&a).1.len());
    }

    #[test]
    fn nullspace_is_annihilated() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 7, 9]]);
        let ns = nullspace(&a, 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(is_zero_vec(&mat_vec(&a, v)));
        }
    }

    #[test]
    fn determinant_and_inverse() {
        let a = m(&[&[2, 1], &[5, 3]]);
        assert_eq!(determinant(&a), q(1));
        let inv = inverse(&a).unwrap();
        assert_eq!(inv, m(&[&[3, -1], &[-5, 2]]));
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_none());
        assert_eq!(
            determinant(&m(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]])),
            q(-1)
        );
    }

    #[test]
    fn sparse_products() {
        let a = SparseMatrix::from_dense(&m(&[&[0, 1], &[0, 0]]));
        let b = SparseMatrix::from_dense(&m(&[&[0, 0], &[1, 0]]));
        let h = a.commutator(&b);
        assert_eq!(h.to_dense(), m(&[&[1, 0], &[0, -1]]));
        assert_eq!(a.trace_product(&b), q(1));
        assert_eq!(a.transpose(), b);
        let bd = SparseMatrix::block_diag(&[&a, &b]);
        assert_eq!(bd.block(2..4, 2..4), b);
    }
}
