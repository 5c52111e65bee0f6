//! `M_n(F)` over an exact field as a `*`-ring.

use crate::matrix::{self, DirectSum, Matrix};
use crate::ring::{FieldTag, Involution, RingDescriptor, StarRing};
use crate::scalar::{GaussianRational, PrimeField, Rational, Scalar};

/// Maps a scalar type to its descriptor tag.
pub trait FieldKind: Scalar {
    fn tag(ctx: &Self::Ctx) -> FieldTag;
}

impl FieldKind for Rational {
    fn tag(_: &()) -> FieldTag {
        FieldTag::Rationals
    }
}

impl FieldKind for GaussianRational {
    fn tag(_: &()) -> FieldTag {
        FieldTag::GaussianRationals
    }
}

impl FieldKind for PrimeField {
    fn tag(p: &u64) -> FieldTag {
        FieldTag::Prime(*p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixRing<F: Scalar> {
    n: usize,
    ctx: F::Ctx,
    involution: Involution,
}

impl<F: FieldKind> MatrixRing<F> {
    pub fn new(n: usize, ctx: F::Ctx, involution: Involution) -> Self {
        assert!(n >= 1, "matrix ring dimension must be positive");
        Self { n, ctx, involution }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    /// Convenience constructor from integer rows.
    pub fn mat(&self, rows: &[&[i64]]) -> Matrix<F> {
        let m = Matrix::from_i64(rows, &self.ctx);
        assert_eq!((m.rows(), m.cols()), (self.n, self.n), "not an n x n matrix");
        m
    }

    pub fn contains(&self, x: &Matrix<F>) -> bool {
        x.rows() == self.n && x.cols() == self.n && *x.ctx() == self.ctx
    }
}

impl MatrixRing<Rational> {
    pub fn rationals(n: usize) -> Self {
        Self::new(n, (), Involution::Transpose)
    }
}

impl MatrixRing<PrimeField> {
    pub fn prime_field(n: usize, p: u64) -> Self {
        Self::new(n, p, Involution::Transpose)
    }
}

impl<F: FieldKind> StarRing for MatrixRing<F> {
    type Elem = Matrix<F>;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::MatrixRing { field: F::tag(&self.ctx), n: self.n, involution: self.involution }
    }

    fn zero(&self) -> Matrix<F> {
        Matrix::zeros(self.n, self.n, &self.ctx)
    }

    fn one(&self) -> Matrix<F> {
        Matrix::identity(self.n, &self.ctx)
    }

    fn add(&self, x: &Matrix<F>, y: &Matrix<F>) -> Matrix<F> {
        x.add(y)
    }

    fn neg(&self, x: &Matrix<F>) -> Matrix<F> {
        x.neg()
    }

    fn sub(&self, x: &Matrix<F>, y: &Matrix<F>) -> Matrix<F> {
        x.sub(y)
    }

    fn mul(&self, x: &Matrix<F>, y: &Matrix<F>) -> Matrix<F> {
        x.mul(y)
    }

    fn star(&self, x: &Matrix<F>) -> Matrix<F> {
        match self.involution {
            Involution::Transpose => x.transpose(),
            Involution::ConjugateTranspose => x.conjugate_transpose(),
        }
    }

    fn is_zero(&self, x: &Matrix<F>) -> bool {
        x.is_zero()
    }

    fn solve_left(&self, m: &Matrix<F>, target: &Matrix<F>) -> Option<Matrix<F>> {
        matrix::solve_left(m, target)
    }

    fn solve_right(&self, m: &Matrix<F>, target: &Matrix<F>) -> Option<Matrix<F>> {
        matrix::solve_right(m, target)
    }

    fn inner_inverse(&self, a: &Matrix<F>) -> Option<Matrix<F>> {
        Some(matrix::inner_inverse(a))
    }

    fn left_ideal_contains(&self, x: &Matrix<F>, c: &Matrix<F>) -> bool {
        matrix::left_ideal_contains(x, c)
    }

    fn right_ideal_contains(&self, x: &Matrix<F>, b: &Matrix<F>) -> bool {
        matrix::right_ideal_contains(x, b)
    }

    fn left_annihilator_contained(&self, x: &Matrix<F>, y: &Matrix<F>) -> bool {
        matrix::left_annihilator_contained(x, y)
    }

    fn direct_sum_right_ideals(&self, u: &Matrix<F>, b: &Matrix<F>) -> DirectSum {
        matrix::direct_sum_right_ideals(u, b)
    }

    fn direct_sum_left_ideals(&self, u: &Matrix<F>, c: &Matrix<F>) -> DirectSum {
        matrix::direct_sum_left_ideals(u, c)
    }

    fn show(&self, x: &Matrix<F>) -> String {
        x.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{is_idempotent, is_projection, pierce_blocks};
    use proptest::prelude::*;

    #[test]
    fn star_examples() {
        let r = MatrixRing::rationals(2);
        assert_eq!(r.star(&r.one()), r.one());
        assert_eq!(r.star(&r.mat(&[&[1, 2], &[3, 4]])), r.mat(&[&[1, 3], &[2, 4]]));
        let g = MatrixRing::<GaussianRational>::new(1, (), Involution::ConjugateTranspose);
        let z = Matrix::from_rows(vec![vec![GaussianRational::parse("2+3i", &()).unwrap()]], &());
        assert_eq!(g.star(&z).to_string(), "[[2-3i]]");
    }

    #[test]
    fn projection_and_idempotent_examples() {
        let r = MatrixRing::rationals(2);
        assert!(is_projection(&r, &r.mat(&[&[1, 0], &[0, 0]])));
        assert!(!is_projection(&r, &r.mat(&[&[1, 1], &[0, 0]])));
        assert!(is_idempotent(&r, &r.one()));
        assert!(is_idempotent(&r, &r.mat(&[&[1, 1], &[0, 0]])));
    }

    #[test]
    fn pierce_block_examples() {
        let r = MatrixRing::rationals(2);
        let a = r.mat(&[&[1, 2], &[3, 4]]);
        let b = pierce_blocks(&r, &a, &r.mat(&[&[1, 0], &[0, 0]])).unwrap();
        assert_eq!(b.a1, r.mat(&[&[1, 0], &[0, 0]]));
        assert_eq!(b.a2, r.mat(&[&[0, 2], &[0, 0]]));
        assert_eq!(b.a3, r.mat(&[&[0, 0], &[3, 0]]));
        assert_eq!(b.a4, r.mat(&[&[0, 0], &[0, 4]]));
        let one = pierce_blocks(&r, &a, &r.one()).unwrap();
        assert_eq!(
            (one.a1.clone(), one.a2.is_zero(), one.a3.is_zero(), one.a4.is_zero()),
            (a.clone(), true, true, true)
        );
        let zero = pierce_blocks(&r, &a, &r.zero()).unwrap();
        assert_eq!(
            (zero.a4.clone(), zero.a1.is_zero(), zero.a2.is_zero(), zero.a3.is_zero()),
            (a.clone(), true, true, true)
        );
        assert!(pierce_blocks(&r, &a, &r.mat(&[&[1, 1], &[1, 1]])).is_err());
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(-3i64..=3, n * n)
    }

    fn to_mat(r: &MatrixRing<Rational>, v: &[i64]) -> Matrix<Rational> {
        let n = r.dim();
        let rows: Vec<&[i64]> = v.chunks(n).collect();
        r.mat(&rows)
    }

    proptest! {
        #[test]
        fn involution_laws(x in small_matrix(3), y in small_matrix(3)) {
            let r = MatrixRing::rationals(3);
            let (x, y) = (to_mat(&r, &x), to_mat(&r, &y));
            prop_assert_eq!(r.star(&r.star(&x)), x.clone());
            prop_assert_eq!(r.star(&r.mul(&x, &y)), r.mul(&r.star(&y), &r.star(&x)));
            prop_assert_eq!(r.star(&r.add(&x, &y)), r.add(&r.star(&x), &r.star(&y)));
        }

        #[test]
        fn pierce_blocks_reconstruct_and_sit_in_corners(a in small_matrix(2), e in 0usize..6) {
            let r = MatrixRing::rationals(2);
            let a = to_mat(&r, &a);
            let idempotents = [
                r.zero(), r.one(), r.mat(&[&[1, 0], &[0, 0]]), r.mat(&[&[1, 1], &[0, 0]]),
                r.mat(&[&[0, 0], &[2, 1]]), r.mat(&[&[1, -1], &[0, 0]]),
            ];
            let p = &idempotents[e];
            let blocks = pierce_blocks(&r, &a, p).unwrap();
            prop_assert_eq!(blocks.reconstruct(&r), a);
            let q = r.sub(&r.one(), p);
            prop_assert_eq!(r.prod(&[p, &blocks.a1, p]), blocks.a1.clone());
            prop_assert_eq!(r.prod(&[p, &blocks.a2, &q]), blocks.a2.clone());
            prop_assert_eq!(r.prod(&[&q, &blocks.a3, p]), blocks.a3.clone());
            prop_assert_eq!(r.prod(&[&q, &blocks.a4, &q]), blocks.a4.clone());
            prop_assert!(r.mul(&blocks.a2, p).is_zero());
        }

        #[test]
        fn solvers_are_exact(m in small_matrix(3), t in small_matrix(3)) {
            let r = MatrixRing::rationals(3);
            let (m, t) = (to_mat(&r, &m), to_mat(&r, &t));
            match r.solve_left(&m, &t) {
                Some(x) => prop_assert_eq!(r.mul(&x, &m), t.clone()),
                None => prop_assert!(m.vstack(&t).rank() > m.rank()),
            }
            match r.solve_right(&m, &t) {
                Some(x) => prop_assert_eq!(r.mul(&m, &x), t.clone()),
                None => prop_assert!(m.hstack(&t).rank() > m.rank()),
            }
        }

        #[test]
        fn inner_inverse_is_inner(a in small_matrix(3)) {
            let r = MatrixRing::rationals(3);
            let a = to_mat(&r, &a);
            let g = r.inner_inverse(&a).unwrap();
            prop_assert_eq!(r.prod(&[&a, &g, &a]), a.clone());
            let h = r.prod(&[&g, &a, &g]);
            prop_assert_eq!(r.prod(&[&a, &h, &a]), a);
        }

        #[test]
        fn rref_is_idempotent(m in small_matrix(3)) {
            let r = MatrixRing::rationals(3);
            let m = to_mat(&r, &m);
            let once = matrix::rref(&m);
            let twice = matrix::rref(&once.matrix);
            prop_assert_eq!(once, twice);
        }
    }
}
