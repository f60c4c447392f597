//! Fraction-free (Bareiss) elimination over exact integral domains.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::laurent::{Coefficient, Laurent};

/// An integral domain with exact division.
pub trait ExactRing: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    /// `self / divisor` when the quotient exists in the ring.
    fn div_exact(&self, divisor: &Self) -> Option<Self>;
}

impl<C: Coefficient> ExactRing for Laurent<C> {
    fn zero() -> Self {
        Laurent::zero()
    }
    fn one() -> Self {
        Laurent::one()
    }
    fn is_zero(&self) -> bool {
        Laurent::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        Laurent::div_exact(self, divisor)
    }
}

macro_rules! exact_integer {
    ($($t:ty),*) => {$(
        impl ExactRing for $t {
            fn zero() -> Self {
                Zero::zero()
            }
            fn one() -> Self {
                One::one()
            }
            fn is_zero(&self) -> bool {
                Zero::is_zero(self)
            }
            fn mul(&self, other: &Self) -> Self {
                self.clone() * other.clone()
            }
            fn sub(&self, other: &Self) -> Self {
                self.clone() - other.clone()
            }
            fn div_exact(&self, divisor: &Self) -> Option<Self> {
                if Zero::is_zero(divisor) {
                    return None;
                }
                let (q, r) = self.div_rem(divisor);
                Zero::is_zero(&r).then_some(q)
            }
        }
    )*};
}

exact_integer!(i64, i128, BigInt);

/// Rank of a matrix given as rows, by fraction-free elimination with column skipping.
///
/// Every intermediate entry is a minor of the input, so each division by the
/// previous pivot is exact.
pub fn rank<T: ExactRing>(rows: &[Vec<T>]) -> usize {
    let mut m: Vec<Vec<T>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let Some(cols) = m.first().map(Vec::len) else { return 0 };
    let mut prev = T::one();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let (pivot_rows, rest) = m.split_at_mut(r + 1);
        let pivot = &pivot_rows[r];
        for row in rest.iter_mut() {
            for j in c + 1..cols {
                let v = pivot[c].mul(&row[j]).sub(&row[c].mul(&pivot[j]));
                row[j] = v.div_exact(&prev).expect("Bareiss division is exact");
            }
            row[c] = T::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Dimension of the right kernel `{v : M v = 0}` of a matrix with `cols` columns.
pub fn kernel_dimension<T: ExactRing>(rows: &[Vec<T>], cols: usize) -> usize {
    cols - rank(rows)
}

/// Whether two families of vectors span the same space.
pub fn same_span<T: ExactRing>(a: &[Vec<T>], b: &[Vec<T>]) -> SpanComparison {
    let ra = rank(a);
    let rb = rank(b);
    let joint: Vec<Vec<T>> = a.iter().chain(b).cloned().collect();
    let rj = rank(&joint);
    SpanComparison { rank_a: ra, rank_b: rb, rank_joint: rj }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SpanComparison {
    pub rank_a: usize,
    pub rank_b: usize,
    pub rank_joint: usize,
}

impl SpanComparison {
    pub fn equal(&self) -> bool {
        self.rank_a == self.rank_joint && self.rank_b == self.rank_joint
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::LaurentPoly;
    use proptest::prelude::*;

    fn q(e: i32) -> LaurentPoly {
        LaurentPoly::q_pow(e)
    }

    #[test]
    fn integer_examples() {
        let m: Vec<Vec<i64>> = vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]];
        assert_eq!(rank(&m), 2);
        assert_eq!(kernel_dimension(&m, 3), 1);
        assert_eq!(rank::<i64>(&[]), 0);
        assert_eq!(rank(&[vec![0i64, 0]]), 0);
        let id: Vec<Vec<BigInt>> = (0..4).map(|i| (0..4).map(|j| BigInt::from((i == j) as i64)).collect()).collect();
        assert_eq!(rank(&id), 4);
    }

    #[test]
    fn laurent_examples() {
        // Rows (1, q) and (q^-1, 1) are dependent; (1, q^2) is not.
        let m = vec![vec![LaurentPoly::one(), q(1)], vec![q(-1), LaurentPoly::one()]];
        assert_eq!(rank(&m), 1);
        let m = vec![vec![LaurentPoly::one(), q(1)], vec![LaurentPoly::one(), q(2)]];
        assert_eq!(rank(&m), 2);
        let s = same_span(&[vec![LaurentPoly::one(), q(1)]], &[vec![q(3), q(4)]]);
        assert!(s.equal());
    }

    fn naive_rank(m: &[Vec<i64>]) -> usize {
        // Gaussian elimination over the rationals, as f64 with integer inputs small enough to be exact.
        let mut a: Vec<Vec<f64>> = m.iter().map(|r| r.iter().map(|&x| x as f64).collect()).collect();
        let cols = a.first().map_or(0, Vec::len);
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..a.len()).find(|&i| a[i][c].abs() > 1e-9) else { continue };
            a.swap(r, p);
            for i in 0..a.len() {
                if i != r {
                    let f = a[i][c] / a[r][c];
                    let pivot = a[r].clone();
                    for (x, p) in a[i].iter_mut().zip(&pivot) {
                        *x -= f * p;
                    }
                }
            }
            r += 1;
        }
        r
    }

    proptest! {
        #[test]
        fn matches_float_elimination(m in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 0..5)) {
            prop_assert_eq!(rank(&m), naive_rank(&m));
        }

        #[test]
        fn rank_of_outer_products(u in prop::collection::vec(-3i64..=3, 3), v in prop::collection::vec(-3i64..=3, 3)) {
            let m: Vec<Vec<i64>> = u.iter().map(|a| v.iter().map(|b| a * b).collect()).collect();
            let expected = usize::from(u.iter().any(|&x| x != 0) && v.iter().any(|&x| x != 0));
            prop_assert_eq!(rank(&m), expected);
        }
    }
}
