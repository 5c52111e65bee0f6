//! Dense exact matrices and the linear algebra the ring-level tests reduce to.
//!
//! Solvers use a fixed policy: pivots are taken in ascending column order and
//! free variables are set to zero, so every output is canonical for its input.
//! Ideal and annihilator questions in `M_n(F)` are answered by row and column
//! space containments.

use std::fmt;

use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<F: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
    ctx: F::Ctx,
}

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize, ctx: &F::Ctx) -> Self {
        Self { rows, cols, data: vec![F::zero(ctx); rows * cols], ctx: ctx.clone() }
    }

    pub fn identity(n: usize, ctx: &F::Ctx) -> Self {
        let mut m = Self::zeros(n, n, ctx);
        for i in 0..n {
            m[(i, i)] = F::one(ctx);
        }
        m
    }

    /// Builds a matrix from rows; all rows must share a length.
    pub fn from_rows(rows: Vec<Vec<F>>, ctx: &F::Ctx) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect(), ctx: ctx.clone() }
    }

    pub fn from_i64(rows: &[&[i64]], ctx: &F::Ctx) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| F::from_i64(v, ctx)).collect()).collect(), ctx)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in add");
        let data = self.data.iter().zip(&rhs.data).map(|(x, y)| x.add(y)).collect();
        Self { data, ..self.clone_shape() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in sub");
        let data = self.data.iter().zip(&rhs.data).map(|(x, y)| x.sub(y)).collect();
        Self { data, ..self.clone_shape() }
    }

    pub fn neg(&self) -> Self {
        Self { data: self.data.iter().map(F::neg).collect(), ..self.clone_shape() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in mul");
        let mut out = Self::zeros(self.rows, rhs.cols, &self.ctx);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = a.mul(&rhs[(k, j)]);
                    out[(i, j)] = out[(i, j)].add(&t);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows, &self.ctx);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn conjugate_transpose(&self) -> Self {
        let mut t = self.transpose();
        t.data.iter_mut().for_each(|x| *x = x.conj());
        t
    }

    /// `[self | rhs]`
    pub fn hstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.rows, rhs.rows, "hstack row mismatch");
        let rows = (0..self.rows).map(|i| self.row(i).iter().chain(rhs.row(i)).cloned().collect()).collect();
        let mut m = Self::from_rows(rows, &self.ctx);
        m.cols = self.cols + rhs.cols;
        m
    }

    /// `[self; rhs]`
    pub fn vstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Self { rows: self.rows + rhs.rows, cols: self.cols, data, ctx: self.ctx.clone() }
    }

    pub fn select_cols(&self, cols: &[usize]) -> Self {
        let rows = (0..self.rows).map(|i| cols.iter().map(|&j| self[(i, j)].clone()).collect());
        let mut m = Self::from_rows(rows.collect(), &self.ctx);
        m.cols = cols.len();
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let data = rows.iter().flat_map(|&i| self.row(i).iter().cloned()).collect();
        Self { rows: rows.len(), cols: self.cols, data, ctx: self.ctx.clone() }
    }

    fn clone_shape(&self) -> Self {
        Self { rows: self.rows, cols: self.cols, data: Vec::new(), ctx: self.ctx.clone() }
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }
}

impl<F: Scalar> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F: Scalar> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Scalar> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref<F: Scalar> {
    pub matrix: Matrix<F>,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Reduced row echelon form by Gauss-Jordan elimination.
pub fn rref<F: Scalar>(m: &Matrix<F>) -> Rref<F> {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a[(i, col)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..a.cols {
                a.data.swap(p * a.cols + j, r * a.cols + j);
            }
        }
        let inv = a[(r, col)].inv().expect("pivot is nonzero");
        for j in col..a.cols {
            a[(r, j)] = a[(r, j)].mul(&inv);
        }
        for i in 0..a.rows {
            if i == r || a[(i, col)].is_zero() {
                continue;
            }
            let factor = a[(i, col)].clone();
            for j in col..a.cols {
                let t = factor.mul(&a[(r, j)]);
                a[(i, j)] = a[(i, j)].sub(&t);
            }
        }
        pivots.push(col);
        r += 1;
    }
    Rref { matrix: a, rank: r, pivots }
}

/// Solves `m·x = target`; `None` when the columns of `target` leave the
/// column space of `m`.
pub fn solve_right<F: Scalar>(m: &Matrix<F>, target: &Matrix<F>) -> Option<Matrix<F>> {
    assert_eq!(m.rows, target.rows, "solve_right: row mismatch");
    let reduced = rref(&m.hstack(target));
    if reduced.pivots.iter().any(|&p| p >= m.cols) {
        return None;
    }
    let mut x = Matrix::zeros(m.cols, target.cols, &m.ctx);
    for (r, &p) in reduced.pivots.iter().enumerate() {
        for j in 0..target.cols {
            x[(p, j)] = reduced.matrix[(r, m.cols + j)].clone();
        }
    }
    Some(x)
}

/// Solves `x·m = target` through the transposed system.
pub fn solve_left<F: Scalar>(m: &Matrix<F>, target: &Matrix<F>) -> Option<Matrix<F>> {
    assert_eq!(m.cols, target.cols, "solve_left: column mismatch");
    solve_right(&m.transpose(), &target.transpose()).map(|x| x.transpose())
}

/// `m = F·G` with `F` of full column rank and `G` of full row rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankFactorization<F: Scalar> {
    pub f: Matrix<F>,
    pub g: Matrix<F>,
    pub rank: usize,
}

pub fn rank_factorization<F: Scalar>(m: &Matrix<F>) -> RankFactorization<F> {
    let reduced = rref(m);
    let f = m.select_cols(&reduced.pivots);
    let g = reduced.matrix.select_rows(&(0..reduced.rank).collect::<Vec<_>>());
    RankFactorization { f, g, rank: reduced.rank }
}

/// Inner inverse `g` with `a·g·a = a`, assembled as (right inverse of G)·(left
/// inverse of F). Zero maps to zero.
pub fn inner_inverse<F: Scalar>(a: &Matrix<F>) -> Matrix<F> {
    let rf = rank_factorization(a);
    if rf.rank == 0 {
        return Matrix::zeros(a.cols, a.rows, &a.ctx);
    }
    let id = Matrix::identity(rf.rank, &a.ctx);
    let right = solve_right(&rf.g, &id).expect("full row rank has a right inverse");
    let left = solve_left(&rf.f, &id).expect("full column rank has a left inverse");
    right.mul(&left)
}

/// RREF-canonical basis of a subspace of `F^n`, stored as rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis<F: Scalar> {
    pub dim: usize,
    pub basis: Matrix<F>,
}

impl<F: Scalar> SubspaceBasis<F> {
    pub fn row_space(m: &Matrix<F>) -> Self {
        let reduced = rref(m);
        let basis = reduced.matrix.select_rows(&(0..reduced.rank).collect::<Vec<_>>());
        Self { dim: m.cols, basis }
    }

    pub fn column_space(m: &Matrix<F>) -> Self {
        Self::row_space(&m.transpose())
    }

    /// Right null space `{v : m·v = 0}`.
    pub fn null_space(m: &Matrix<F>) -> Self {
        let reduced = rref(m);
        let n = m.cols;
        let free: Vec<usize> = (0..n).filter(|j| !reduced.pivots.contains(j)).collect();
        let mut basis = Matrix::zeros(free.len(), n, &m.ctx);
        for (k, &fj) in free.iter().enumerate() {
            basis[(k, fj)] = F::one(&m.ctx);
            for (r, &p) in reduced.pivots.iter().enumerate() {
                basis[(k, p)] = reduced.matrix[(r, fj)].neg();
            }
        }
        Self::row_space(&basis).with_dim(n)
    }

    fn with_dim(mut self, n: usize) -> Self {
        self.dim = n;
        self
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn sum(&self, other: &Self) -> Self {
        Self::row_space(&self.basis.vstack(&other.basis)).with_dim(self.dim)
    }

    pub fn contains(&self, other: &Self) -> bool {
        self.sum(other).rank() == self.rank()
    }
}

fn row_space_contains<F: Scalar>(big: &Matrix<F>, small: &Matrix<F>) -> bool {
    big.vstack(small).rank() == big.rank()
}

fn col_space_contains<F: Scalar>(big: &Matrix<F>, small: &Matrix<F>) -> bool {
    big.hstack(small).rank() == big.rank()
}

/// `Rx ⊆ Rc`: row space of `x` inside row space of `c`.
pub fn left_ideal_contains<F: Scalar>(x: &Matrix<F>, c: &Matrix<F>) -> bool {
    row_space_contains(c, x)
}

/// `xR ⊆ bR`: column space of `x` inside column space of `b`.
pub fn right_ideal_contains<F: Scalar>(x: &Matrix<F>, b: &Matrix<F>) -> bool {
    col_space_contains(b, x)
}

/// `l(x) ⊆ l(y)`, which holds iff the column space of `y` lies in that of `x`.
pub fn left_annihilator_contained<F: Scalar>(x: &Matrix<F>, y: &Matrix<F>) -> bool {
    col_space_contains(x, y)
}

/// Outcome of a `R = A + B` / `R = A ⊕ B` test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DirectSum {
    pub is_sum: bool,
    pub is_direct: bool,
}

/// `R = uR ⊕ r(b)` in `M_n`: `col(u) + null(b) = F^n`, and trivially
/// intersecting when the dimensions add up to `n`.
pub fn direct_sum_right_ideals<F: Scalar>(u: &Matrix<F>, b: &Matrix<F>) -> DirectSum {
    let n = u.rows();
    let col = SubspaceBasis::column_space(u);
    let null = SubspaceBasis::null_space(b);
    let is_sum = col.sum(&null).rank() == n;
    DirectSum { is_sum, is_direct: is_sum && col.rank() + null.rank() == n }
}

/// `R = Ru ⊕ l(c)`: `row(u) + leftnull(c) = F^n`.
pub fn direct_sum_left_ideals<F: Scalar>(u: &Matrix<F>, c: &Matrix<F>) -> DirectSum {
    direct_sum_right_ideals(&u.transpose(), &c.transpose())
}
