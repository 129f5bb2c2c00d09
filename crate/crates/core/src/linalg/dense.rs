use crate::error::{Error, Result};

use super::field::Field;

/// Dense row-major matrix over a [`Field`].
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// Output of [`Matrix::reduce_columns_tracked`]: `reduced = original * ops`.
#[derive(Clone, Debug)]
pub struct ColumnReduction<F: Field> {
    pub reduced: Matrix<F>,
    pub ops: Matrix<F>,
    /// `pivots[c]` is the lowest nonzero row of reduced column `c`, if any.
    pub pivots: Vec<Option<usize>>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix { field, rows, cols, data }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.field.one();
        }
        m
    }

    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix { field, rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Builds from small integers, reduced into the field.
    pub fn from_i64_rows(field: F, rows: &[Vec<i64>]) -> Result<Self> {
        let rows = rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect();
        Self::from_rows(field, rows)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix<F>) -> Result<Matrix<F>> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f.clone(), self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if f.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !f.is_zero(b) {
                        let v = f.add(out.get(r, c), &f.mul(a, b));
                        out.set(r, c, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|r| {
                (0..self.cols).fold(f.zero(), |acc, c| f.add(&acc, &f.mul(self.get(r, c), &v[c])))
            })
            .collect())
    }

    pub fn rank(&self) -> usize {
        F::dense_rank(self)
    }

    /// Column reduction with operation tracking: after it, nonzero columns of `reduced`
    /// have pairwise distinct lowest nonzero rows, and `ops` is unit upper triangular.
    pub fn reduce_columns_tracked(&self) -> ColumnReduction<F> {
        let f = self.field.clone();
        let mut reduced = self.clone();
        let mut ops = Matrix::identity(f.clone(), self.cols);
        let mut pivots: Vec<Option<usize>> = vec![None; self.cols];
        let mut owner: Vec<Option<usize>> = vec![None; self.rows];
        for c in 0..self.cols {
            while let Some(low) = (0..self.rows).rev().find(|&r| !f.is_zero(reduced.get(r, c))) {
                match owner[low] {
                    Some(p) => {
                        let factor = f.div(reduced.get(low, c), reduced.get(low, p));
                        for r in 0..self.rows {
                            let v = f.sub(reduced.get(r, c), &f.mul(&factor, reduced.get(r, p)));
                            reduced.set(r, c, v);
                        }
                        for r in 0..self.cols {
                            let v = f.sub(ops.get(r, c), &f.mul(&factor, ops.get(r, p)));
                            ops.set(r, c, v);
                        }
                    }
                    None => {
                        owner[low] = Some(c);
                        pivots[c] = Some(low);
                        break;
                    }
                }
            }
        }
        ColumnReduction { reduced, ops, pivots }
    }

    /// Basis of the null space, one vector per zero column of the tracked reduction.
    pub fn kernel_basis(&self) -> Vec<Vec<F::Elem>> {
        let red = self.reduce_columns_tracked();
        (0..self.cols).filter(|&c| red.pivots[c].is_none()).map(|c| red.ops.column(c)).collect()
    }

    /// Some `x` with `self * x = b`, or `None` when `b` is outside the column space.
    pub fn solve(&self, b: &[F::Elem]) -> Result<Option<Vec<F::Elem>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "{} rows, right-hand side of length {}",
                self.rows,
                b.len()
            )));
        }
        let f = &self.field;
        let red = self.reduce_columns_tracked();
        let mut owner: Vec<Option<usize>> = vec![None; self.rows];
        for (c, p) in red.pivots.iter().enumerate() {
            if let Some(p) = p {
                owner[*p] = Some(c);
            }
        }
        let mut rest = b.to_vec();
        let mut x = vec![f.zero(); self.cols];
        while let Some(low) = (0..self.rows).rev().find(|&r| !f.is_zero(&rest[r])) {
            let Some(c) = owner[low] else {
                return Ok(None);
            };
            let factor = f.div(&rest[low], red.reduced.get(low, c));
            for (r, slot) in rest.iter_mut().enumerate() {
                *slot = f.sub(slot, &f.mul(&factor, red.reduced.get(r, c)));
            }
            for (r, slot) in x.iter_mut().enumerate() {
                *slot = f.add(slot, &f.mul(&factor, red.ops.get(r, c)));
            }
        }
        Ok(Some(x))
    }
}

/// Plain row-echelon rank with field division.
pub fn gaussian_rank<F: Field>(m: &Matrix<F>) -> usize {
    let f = m.field().clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<F::Elem>> = (0..rows).map(|r| (0..cols).map(|c| m.get(r, c).clone()).collect()).collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !f.is_zero(&a[r][c])) else {
            continue;
        };
        a.swap(rank, p);
        let inv = f.inv(&a[rank][c]);
        for r in rank + 1..rows {
            if f.is_zero(&a[r][c]) {
                continue;
            }
            let factor = f.mul(&a[r][c], &inv);
            for cc in c..cols {
                let v = f.sub(&a[r][cc], &f.mul(&factor, &a[rank][cc]));
                a[r][cc] = v;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{Gf2, Gfp, Rationals};

    fn boundary_d1_tetrahedron() -> Vec<Vec<i64>> {
        // rows: vertices 1..4, columns: edges 12,13,14,23,24,34 (oriented low -> high)
        let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let mut rows = vec![vec![0i64; 6]; 4];
        for (c, (a, b)) in edges.iter().enumerate() {
            rows[*a][c] = -1;
            rows[*b][c] = 1;
        }
        rows
    }

    #[test]
    fn identity_and_zero_ranks() {
        for n in 0..6 {
            assert_eq!(Matrix::identity(Gf2, n).rank(), n);
            assert_eq!(Matrix::identity(Rationals, n).rank(), n);
            assert_eq!(Matrix::zeros(Gfp::new(3).unwrap(), n, n + 2).rank(), 0);
        }
    }

    #[test]
    fn tetrahedron_edge_boundary_rank_three() {
        let rows = boundary_d1_tetrahedron();
        // transpose to the 6x4 orientation as well; rank is the same
        assert_eq!(Matrix::from_i64_rows(Gf2, &rows).unwrap().rank(), 3);
        assert_eq!(Matrix::from_i64_rows(Rationals, &rows).unwrap().rank(), 3);
        assert_eq!(Matrix::from_i64_rows(Gf2, &rows).unwrap().transpose().rank(), 3);
        assert_eq!(gaussian_rank(&Matrix::from_i64_rows(Rationals, &rows).unwrap()), 3);
    }

    #[test]
    fn kernel_and_solve() {
        let m = Matrix::from_i64_rows(Rationals, &boundary_d1_tetrahedron()).unwrap();
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 3);
        for v in &ker {
            assert!(m.mul_vec(v).unwrap().iter().all(|x| x == &Rationals.zero()));
        }
        let x: Vec<_> = (0..6).map(|i| Rationals.from_i64(i as i64 - 2)).collect();
        let b = m.mul_vec(&x).unwrap();
        let y = m.solve(&b).unwrap().unwrap();
        assert_eq!(m.mul_vec(&y).unwrap(), b);
        let bad: Vec<_> = [1, 0, 0, 0].iter().map(|&v| Rationals.from_i64(v)).collect();
        assert!(m.solve(&bad).unwrap().is_none());
        assert!(m.solve(&bad[..2]).is_err());
    }

    #[test]
    fn tracked_reduction_is_consistent() {
        let f = Gfp::new(5).unwrap();
        let m = Matrix::from_i64_rows(f, &[vec![1, 2, 3, 4], vec![2, 4, 1, 3], vec![0, 0, 1, 1]]).unwrap();
        let red = m.reduce_columns_tracked();
        assert_eq!(m.mul(&red.ops).unwrap(), red.reduced);
        let lows: Vec<_> = red.pivots.iter().flatten().collect();
        let mut dedup = lows.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(lows.len(), dedup.len());
        assert_eq!(lows.len(), m.rank());
        assert_eq!(red.ops.rank(), 4);
    }
}
