use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix, row major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (r, c): (usize, usize)) -> &BigInt {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut BigInt {
        &mut self.data[r * self.cols + c]
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, v) in row.iter().enumerate() {
                m[(i, j)] = v.clone().into();
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors (`rows` = vector length).
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn diagonal(entries: &[BigInt]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> Vec<BigInt> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| -v).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let c: Vec<Vec<BigInt>> = cols.iter().map(|&j| self.column(j)).collect();
        Self::from_columns(self.rows, &c)
    }

    /// Block-diagonal sum.
    pub fn block_sum(&self, other: &Self) -> Self {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = v / &prev;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * &a[(n - 1, n - 1)]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for c in 0..self.cols {
            let v = &self[(src, c)] * k;
            self[(dst, c)] += v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for r in 0..self.rows {
            let v = &self[(r, src)] * k;
            self[(r, dst)] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -&self[(r, c)];
            self[(r, c)] = v;
        }
    }

    pub fn rank(&self) -> usize {
        smith_normal_form(self).rank()
    }

    /// Basis (as columns) of the integer kernel `{x : self * x = 0}`.
    /// The basis is primitive in `Z^cols`.
    pub fn integer_kernel(&self) -> IntMatrix {
        let snf = smith_normal_form(self);
        let r = snf.rank();
        let cols: Vec<usize> = (r..self.cols).collect();
        snf.v.select_columns(&cols)
    }
}

/// `u * m * v = d` with `u`, `v` unimodular and `d` diagonal with a
/// nonnegative divisibility chain (zeros last).
#[derive(Clone, Debug, PartialEq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|v| !v.is_zero()).count()
    }

    /// Invariant factors different from 1 and 0 (the torsion of the cokernel).
    pub fn torsion_factors(&self) -> Vec<BigInt> {
        self.diagonal().into_iter().filter(|v| !v.is_zero() && !v.is_one()).collect()
    }
}

/// Smith normal form with the smallest-absolute-value pivot strategy.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[(i, j)].is_zero() && best.is_none_or(|(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let qt = -a[(i, t)].div_floor(&a[(t, t)]);
                a.add_row(i, t, &qt);
                u.add_row(i, t, &qt);
                if !a[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let qt = -a[(t, j)].div_floor(&a[(t, t)]);
                a.add_col(j, t, &qt);
                v.add_col(j, t, &qt);
                if !a[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // bring the smallest remainder in row/column t to the pivot
                let mut best = (t, t);
                for i in t + 1..rows {
                    if !a[(i, t)].is_zero() && a[(i, t)].abs() < a[best].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    if !a[(t, j)].is_zero() && a[(t, j)].abs() < a[best].abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    a.swap_rows(t, best.0);
                    u.swap_rows(t, best.0);
                } else if best.1 != t {
                    a.swap_cols(t, best.1);
                    v.swap_cols(t, best.1);
                }
                continue;
            }
            // divisibility of the trailing block by the pivot
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !a[(i, j)].is_multiple_of(&a[(t, t)]));
            match bad {
                Some((i, _)) => {
                    let one = BigInt::one();
                    a.add_row(t, i, &one);
                    u.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithDecomposition { u, d: a, v }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> SmithDecomposition {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d);
        assert!(s.u.det().abs().is_one());
        assert!(s.v.det().abs().is_one());
        let diag = s.diagonal();
        for w in diag.windows(2) {
            if !w[1].is_zero() {
                assert!(w[1].is_multiple_of(&w[0]));
            } else {
                assert!(w[1].is_zero());
            }
        }
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        s
    }

    #[test]
    fn identity_and_zero() {
        let s = check(&IntMatrix::identity(2));
        assert_eq!(s.diagonal(), vec![BigInt::one(), BigInt::one()]);
        let s = check(&IntMatrix::zeros(2, 2));
        assert_eq!(s.diagonal(), vec![BigInt::zero(), BigInt::zero()]);
    }

    #[test]
    fn a2_cartan() {
        let s = check(&IntMatrix::from_rows(&[vec![2, -1], vec![-1, 2]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(3)]);
    }

    #[test]
    fn rectangular_and_kernel() {
        let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let s = check(&m);
        assert_eq!(s.diagonal(), vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        let k = IntMatrix::from_rows(&[vec![1, 2, 3]]).integer_kernel();
        assert_eq!(k.cols(), 2);
        assert!(IntMatrix::from_rows(&[vec![1, 2, 3]]).mul(&k).to_rows().iter().flatten().all(|v| v.is_zero()));
    }

    #[test]
    fn bareiss_determinant() {
        let m = IntMatrix::from_rows(&[vec![0, 2, 1], vec![3, 1, 0], vec![1, 1, 1]]);
        assert_eq!(m.det(), BigInt::from(-4));
    }
}
