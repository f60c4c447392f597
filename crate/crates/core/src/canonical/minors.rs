use std::fmt;

use num_bigint::BigInt;

use crate::error::Error;
use crate::qmatrix::{Basis, Element, Letter, QMatrixAlgebra, Word};
use crate::LaurentPoly;

/// Row and column sets of a quantum minor, 0-based and sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MinorSpec {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl MinorSpec {
    pub fn new(mut rows: Vec<usize>, mut cols: Vec<usize>) -> Result<Self, Error> {
        rows.sort_unstable();
        cols.sort_unstable();
        if rows.is_empty() || rows.len() != cols.len() {
            return Err(Error::InvalidMinor(format!("{} rows vs {} columns", rows.len(), cols.len())));
        }
        if rows.windows(2).any(|w| w[0] == w[1]) || cols.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidMinor("repeated index".into()));
        }
        Ok(MinorSpec { rows, cols })
    }

    /// Builds from 1-based index lists, as written in the usual notation.
    pub fn one_based(rows: &[usize], cols: &[usize]) -> Result<Self, Error> {
        if rows.iter().chain(cols).any(|&i| i == 0) {
            return Err(Error::InvalidMinor("indices are 1-based".into()));
        }
        Self::new(rows.iter().map(|i| i - 1).collect(), cols.iter().map(|j| j - 1).collect())
    }

    pub fn full(n: usize) -> Self {
        MinorSpec { rows: (0..n).collect(), cols: (0..n).collect() }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn fits(&self, n: usize) -> bool {
        self.rows.last().is_some_and(|&r| r < n) && self.cols.last().is_some_and(|&c| c < n)
    }
}

impl fmt::Display for MinorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = |v: &[usize]| v.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",");
        write!(f, "det_q({{{}}},{{{}}})", one(&self.rows), one(&self.cols))
    }
}

/// All permutations of `0..m` with their inversion counts.
pub fn permutations_with_length(m: usize) -> Vec<(Vec<usize>, u32)> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    let mut used = vec![false; m];
    fn rec(out: &mut Vec<(Vec<usize>, u32)>, cur: &mut Vec<usize>, used: &mut [bool], inv: u32) {
        let m = used.len();
        if cur.len() == m {
            out.push((cur.clone(), inv));
            return;
        }
        for v in 0..m {
            if used[v] {
                continue;
            }
            // New inversions: earlier entries larger than v.
            let extra = cur.iter().filter(|&&x| x > v).count() as u32;
            used[v] = true;
            cur.push(v);
            rec(out, cur, used, inv + extra);
            cur.pop();
            used[v] = false;
        }
    }
    rec(&mut out, &mut cur, &mut used, 0);
    out
}

/// `sum_sigma (-q^2)^{l(sigma)} x_{i_1 j_sigma(1)} ... x_{i_m j_sigma(m)}`,
/// straightened into the plain basis.
pub fn quantum_minor(alg: &QMatrixAlgebra, spec: &MinorSpec) -> Result<Element, Error> {
    let n = alg.n();
    if !spec.fits(n) {
        return Err(Error::InvalidMinor(format!("{spec} does not fit in {n}x{n}")));
    }
    let mut out = Element::zero(n, Basis::Plain);
    for (perm, len) in permutations_with_length(spec.size()) {
        let sign = if len % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
        let scalar = LaurentPoly::monomial(2 * len as i32, sign);
        let letters = perm.iter().enumerate().map(|(k, &p)| Letter::new(spec.rows[k], spec.cols[p])).collect();
        out.add_scaled(&alg.word_product(&Word::with_scalar(n, letters, scalar)), &LaurentPoly::one());
    }
    Ok(out)
}

pub fn quantum_determinant(alg: &QMatrixAlgebra) -> Element {
    quantum_minor(alg, &MinorSpec::full(alg.n())).expect("full minor fits")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmatrix::ExponentMatrix;

    #[test]
    fn determinant_small_cases() {
        let alg = QMatrixAlgebra::new(1);
        assert_eq!(quantum_determinant(&alg), alg.generator(0, 0));
        let alg = QMatrixAlgebra::new(2);
        let det = quantum_determinant(&alg);
        assert_eq!(det.len(), 2);
        assert!(det.coeff(&ExponentMatrix::identity(2)).is_one());
        assert_eq!(det.coeff(&ExponentMatrix::rows(&[[0, 1], [1, 0]])), -LaurentPoly::q_pow(2));
    }

    #[test]
    fn determinant_three_has_six_ordered_terms() {
        // Each permutation word x_{1s1} x_{2s2} x_{3s3} is already lex ordered.
        let alg = QMatrixAlgebra::new(3);
        let det = quantum_determinant(&alg);
        assert_eq!(det.len(), 6);
        for (perm, len) in permutations_with_length(3) {
            let mut m = ExponentMatrix::zero(3);
            for (i, &j) in perm.iter().enumerate() {
                m.set(i, j, 1);
            }
            let expected = LaurentPoly::monomial(2 * len as i32, BigInt::from(if len % 2 == 0 { 1 } else { -1 }));
            assert_eq!(det.coeff(&m), expected);
        }
    }

    #[test]
    fn minor_examples() {
        let alg = QMatrixAlgebra::new(3);
        let m = MinorSpec::one_based(&[1], &[1]).unwrap();
        assert_eq!(quantum_minor(&alg, &m).unwrap(), alg.generator(0, 0));
        let m = MinorSpec::one_based(&[2, 3], &[1, 2]).unwrap();
        let d = quantum_minor(&alg, &m).unwrap();
        assert!(d.coeff(&ExponentMatrix::rows(&[[0, 0, 0], [1, 0, 0], [0, 1, 0]])).is_one());
        assert_eq!(d.coeff(&ExponentMatrix::rows(&[[0, 0, 0], [0, 1, 0], [1, 0, 0]])), -LaurentPoly::q_pow(2));
        assert!(MinorSpec::one_based(&[1, 2], &[1]).is_err());
        assert!(MinorSpec::one_based(&[1, 1], &[1, 2]).is_err());
        assert!(quantum_minor(&alg, &MinorSpec::one_based(&[4], &[1]).unwrap()).is_err());
    }
}
