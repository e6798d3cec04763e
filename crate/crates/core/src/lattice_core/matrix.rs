//! Dense integer matrices with the exact normal forms needed for lattice work:
//! Bareiss determinant/rank, Hermite and Smith normal forms.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::arith::{make_primitive, Int, Rational};
use crate::{Error, Result};

/// Row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must have length `cols`.
    pub fn from_rows<R: AsRef<[Int]>>(rows: &[R], cols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, got: r.len() });
            }
            data.extend_from_slice(r);
        }
        Ok(Self { rows: rows.len(), cols, data })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols<C: AsRef<[Int]>>(cols: &[C], rows: usize) -> Result<Self> {
        Ok(Self::from_rows(cols, rows)?.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Int>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col_vecs(&self) -> Vec<Vec<Int>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    /// Vector-matrix product `v^T * self`.
    pub fn vec_mul(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.rows, v.len(), "vector-matrix shape mismatch");
        let mut out = vec![0; self.cols];
        for (i, &a) in v.iter().enumerate() {
            if a != 0 {
                for (o, &b) in out.iter_mut().zip(self.row(i)) {
                    *o += a * b;
                }
            }
        }
        out
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// Determinant via fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Int {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return 1;
        }
        let mut a: Vec<i128> = self.data.iter().map(|&x| x as i128).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| a[i * n + k] != 0) else {
                return 0;
            };
            if p != k {
                for j in 0..n {
                    a.swap(p * n + j, k * n + j);
                }
                sign = -sign;
            }
            let pivot = a[k * n + k];
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i * n + j] = (a[i * n + j] * pivot - a[i * n + k] * a[k * n + j]) / prev;
                }
                a[i * n + k] = 0;
            }
            prev = pivot;
        }
        Int::try_from(sign * a[n * n - 1]).expect("determinant overflows i64")
    }

    /// Rank over `Q`.
    pub fn rank(&self) -> usize {
        rank_i128(self.rows, self.cols, self.data.iter().map(|&x| x as i128).collect())
            .expect("rank elimination overflow on small integer matrix")
    }

    /// Inverse over `Q`, returned as `(numerator, denominator)` with the
    /// denominator positive and the pair in lowest terms.
    pub fn inverse(&self) -> Result<(IntMatrix, Int)> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let det = self.det();
        if det == 0 {
            return Err(Error::Degenerate("singular matrix".into()));
        }
        let mut adj = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let minor = self.minor(j, i);
                let s = if (i + j) % 2 == 0 { 1 } else { -1 };
                adj[(i, j)] = s * minor.det();
            }
        }
        let (mut num, mut den) = (adj, det);
        if den < 0 {
            den = -den;
            num.data.iter_mut().for_each(|x| *x = -*x);
        }
        let g = num.data.iter().fold(den, |g, x| g.gcd(x));
        if g > 1 {
            num.data.iter_mut().for_each(|x| *x /= g);
            den /= g;
        }
        Ok((num, den))
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> IntMatrix {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != skip_row) {
            for j in (0..self.cols).filter(|&j| j != skip_col) {
                data.push(self[(i, j)]);
            }
        }
        IntMatrix { rows: self.rows - 1, cols: self.cols - 1, data }
    }

    /// Solves `self * x = b` over `Q` for a square invertible matrix.
    pub fn solve(&self, b: &[Int]) -> Result<Vec<Rational>> {
        let (inv, den) = self.inverse()?;
        Ok(inv.mul_vec(b).into_iter().map(|x| Rational::new(x, den)).collect())
    }

    /// Row-style Hermite normal form: returns the nonzero rows of `H = U * self`
    /// where `U` is unimodular and `H` is in echelon form with positive pivots
    /// and entries above each pivot reduced into `[0, pivot)`.
    pub fn hermite_rows(&self) -> IntMatrix {
        let mut a = self.clone();
        let mut pivot_row = 0;
        for c in 0..a.cols {
            if pivot_row == a.rows {
                break;
            }
            // gcd-eliminate column c below pivot_row
            loop {
                let best = (pivot_row..a.rows)
                    .filter(|&i| a[(i, c)] != 0)
                    .min_by_key(|&i| a[(i, c)].abs());
                let Some(best) = best else { break };
                a.swap_rows(pivot_row, best);
                let p = a[(pivot_row, c)];
                let mut done = true;
                for i in pivot_row + 1..a.rows {
                    let q = Integer::div_floor(&a[(i, c)], &p);
                    if q != 0 {
                        a.add_row_multiple(i, pivot_row, -q);
                    }
                    if a[(i, c)] != 0 {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if a[(pivot_row, c)] == 0 {
                continue;
            }
            if a[(pivot_row, c)] < 0 {
                a.negate_row(pivot_row);
            }
            let p = a[(pivot_row, c)];
            for i in 0..pivot_row {
                let q = Integer::div_floor(&a[(i, c)], &p);
                if q != 0 {
                    a.add_row_multiple(i, pivot_row, -q);
                }
            }
            pivot_row += 1;
        }
        IntMatrix {
            rows: pivot_row,
            cols: a.cols,
            data: a.data[..pivot_row * a.cols].to_vec(),
        }
    }

    fn add_row_multiple(&mut self, target: usize, source: usize, factor: Int) {
        for j in 0..self.cols {
            let s = self[(source, j)];
            self[(target, j)] += factor * s;
        }
    }

    fn add_col_multiple(&mut self, target: usize, source: usize, factor: Int) {
        for i in 0..self.rows {
            let s = self[(i, source)];
            self[(i, target)] += factor * s;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            self[(i, j)] = -self[(i, j)];
        }
    }

    /// Smith normal form `U * self * V = D` with `U`, `V` unimodular and the
    /// diagonal of `D` non-negative with each entry dividing the next.
    pub fn smith(&self) -> Smith {
        let (m, n) = (self.rows, self.cols);
        let mut d = self.clone();
        let mut u = IntMatrix::identity(m);
        let mut v = IntMatrix::identity(n);
        let mut t = 0;
        while t < m.min(n) {
            // smallest nonzero entry in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if d[(i, j)] != 0
                        && best.map_or(true, |(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            d.swap_rows(t, bi);
            u.swap_rows(t, bi);
            d.swap_cols(t, bj);
            v.swap_cols(t, bj);
            loop {
                let p = d[(t, t)];
                let mut dirty = false;
                for i in t + 1..m {
                    let q = Integer::div_floor(&d[(i, t)], &p);
                    if q != 0 {
                        d.add_row_multiple(i, t, -q);
                        u.add_row_multiple(i, t, -q);
                    }
                    dirty |= d[(i, t)] != 0;
                }
                for j in t + 1..n {
                    let q = Integer::div_floor(&d[(t, j)], &p);
                    if q != 0 {
                        d.add_col_multiple(j, t, -q);
                        v.add_col_multiple(j, t, -q);
                    }
                    dirty |= d[(t, j)] != 0;
                }
                if !dirty {
                    // divisibility of the remaining block
                    let bad = (t + 1..m)
                        .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                        .find(|&(i, j)| d[(i, j)] % p != 0);
                    match bad {
                        None => break,
                        Some((i, _)) => {
                            d.add_row_multiple(t, i, 1);
                            u.add_row_multiple(t, i, 1);
                            continue;
                        }
                    }
                }
                // move a smaller remainder into the pivot position
                let small = (t + 1..m)
                    .map(|i| (i, t))
                    .chain((t + 1..n).map(|j| (t, j)))
                    .filter(|&(i, j)| d[(i, j)] != 0)
                    .min_by_key(|&(i, j)| d[(i, j)].abs());
                if let Some((i, j)) = small {
                    if d[(i, j)].abs() < p.abs() {
                        d.swap_rows(t, i);
                        u.swap_rows(t, i);
                        d.swap_cols(t, j);
                        v.swap_cols(t, j);
                    }
                }
            }
            if d[(t, t)] < 0 {
                d.negate_row(t);
                u.negate_row(t);
            }
            t += 1;
        }
        let diagonal = (0..m.min(n)).map(|i| d[(i, i)]).collect();
        Smith { u, v, diagonal }
    }
}

impl core::ops::Index<(usize, usize)> for IntMatrix {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }
}

/// Result of [`IntMatrix::smith`].
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub diagonal: Vec<Int>,
}

impl Smith {
    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|&&d| d != 0).count()
    }
}

/// Fraction-free rank of an `i128` matrix with checked arithmetic.
pub(crate) fn rank_i128(rows: usize, cols: usize, mut a: Vec<i128>) -> Result<usize> {
    let mut rank = 0;
    let mut prev: i128 = 1;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| a[i * cols + c] != 0) else {
            continue;
        };
        if p != rank {
            for j in 0..cols {
                a.swap(p * cols + j, rank * cols + j);
            }
        }
        let pivot = a[rank * cols + c];
        for i in rank + 1..rows {
            let f = a[i * cols + c];
            for j in c + 1..cols {
                let x = a[i * cols + j]
                    .checked_mul(pivot)
                    .and_then(|x| x.checked_sub(f.checked_mul(a[rank * cols + j])?))
                    .ok_or(Error::Overflow("rank elimination"))?;
                a[i * cols + j] = x / prev;
            }
            a[i * cols + c] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Ok(rank)
}

/// Primitive integer generator of the kernel of a `(d-1) x d` integer matrix
/// of rank `d-1`, via signed maximal minors. Returns `None` if the rank is
/// deficient.
pub fn kernel_vector(m: &IntMatrix) -> Option<Vec<Int>> {
    let d = m.cols;
    if m.rows + 1 != d {
        return None;
    }
    let mut v: Vec<Int> = (0..d)
        .map(|j| {
            let mut data = Vec::with_capacity(m.rows * (d - 1));
            for i in 0..m.rows {
                for k in (0..d).filter(|&k| k != j) {
                    data.push(m[(i, k)]);
                }
            }
            let minor = IntMatrix { rows: m.rows, cols: d - 1, data }.det();
            if j % 2 == 0 { minor } else { -minor }
        })
        .collect();
    if v.iter().all(|&x| x == 0) {
        return None;
    }
    make_primitive(&mut v);
    Some(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[Int]]) -> IntMatrix {
        IntMatrix::from_rows(rows, rows[0].len()).unwrap()
    }

    #[test]
    fn det_small() {
        assert_eq!(m(&[&[2, 1], &[1, 1]]).det(), 1);
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det(), -1);
        assert_eq!(m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]).det(), -3);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).det(), 0);
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[3, 0], &[1, 1]]);
        let (inv, den) = a.inverse().unwrap();
        assert_eq!(den, 3);
        let prod = a.mul(&inv);
        assert_eq!(prod, {
            let mut i = IntMatrix::identity(2);
            i[(0, 0)] = 3;
            i[(1, 1)] = 3;
            i
        });
    }

    #[test]
    fn hermite_of_model_lattice_generators() {
        // 3e1, 3e2, (1,-1) as rows
        let h = m(&[&[3, 0], &[0, 3], &[1, -1]]).hermite_rows();
        assert_eq!(h.rows(), 2);
        assert_eq!(h.row(0)[0].abs() * h.row(1)[1].abs(), 3);
    }

    #[test]
    fn kernel_of_row() {
        let k = kernel_vector(&m(&[&[1, 1]])).unwrap();
        assert_eq!(k, [1, -1]);
    }

    proptest! {
        #[test]
        fn smith_reconstructs(entries in proptest::collection::vec(-6i64..=6, 12)) {
            let a = IntMatrix::from_rows(&entries.chunks(4).collect::<Vec<_>>(), 4).unwrap();
            let s = a.smith();
            let d = s.u.mul(&a).mul(&s.v);
            for i in 0..3 {
                for j in 0..4 {
                    let expect = if i == j { s.diagonal[i] } else { 0 };
                    prop_assert_eq!(d[(i, j)], expect);
                }
            }
            prop_assert_eq!(s.u.det().abs(), 1);
            prop_assert_eq!(s.v.det().abs(), 1);
            for w in s.diagonal.windows(2) {
                if w[1] != 0 { prop_assert_eq!(w[1] % w[0], 0); }
            }
            prop_assert_eq!(s.rank(), a.rank());
        }

        #[test]
        fn hermite_preserves_row_lattice(entries in proptest::collection::vec(-5i64..=5, 9)) {
            let a = IntMatrix::from_rows(&entries.chunks(3).collect::<Vec<_>>(), 3).unwrap();
            let h = a.hermite_rows();
            prop_assert_eq!(h.rows(), a.rank());
            if a.rank() == 3 {
                prop_assert_eq!(h.det().abs(), a.det().abs());
            }
        }
    }
}
