//! The algebra `O_q(M(n))` generated by `x_ij` subject to
//!
//! ```text
//! x_ij x_ik = q^2 x_ik x_ij                        (j < k)
//! x_ij x_kj = q^2 x_kj x_ij                        (i < k)
//! x_ij x_st = x_st x_ij                            (i > s, j < t)
//! x_ij x_st = x_st x_ij + (q^2 - q^-2) x_it x_sj   (i < s, j < t)
//! ```
//!
//! Elements are stored in the PBW basis of lexicographically ordered
//! monomials `x^A`, or in the rescaled basis `x(A) = D(A) x^A`.

mod algebra;
mod element;
mod exponent;
pub mod identities;
mod word;

pub use algebra::QMatrixAlgebra;
pub use element::{Basis, Element};
pub use exponent::{compositions, enumerate_block, less_than, matrices_of_degree, ExponentMatrix, Letter};
pub use word::{rewrite_measure, rewrite_pair, straighten, straighten_observed, Word};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::LaurentPoly;

    fn l(i: usize, j: usize) -> Letter {
        Letter::new(i - 1, j - 1)
    }

    fn plain(n: usize, terms: &[(&[[u32; 2]; 2], LaurentPoly)]) -> Element {
        let _ = n;
        Element::from_terms(2, Basis::Plain, terms.iter().map(|(m, c)| (ExponentMatrix::rows(&m[..]), c.clone())))
            .unwrap()
    }

    #[test]
    fn straighten_examples() {
        let w = Word::new(2, vec![l(1, 2), l(1, 1)]);
        assert_eq!(straighten(&w), plain(2, &[(&[[1, 1], [0, 0]], LaurentPoly::q_pow(-2))]));

        let w = Word::new(2, vec![l(2, 1), l(1, 2)]);
        assert_eq!(straighten(&w), plain(2, &[(&[[0, 1], [1, 0]], LaurentPoly::one())]));

        let w = Word::new(2, vec![l(2, 2), l(1, 1)]);
        let expected = plain(
            2,
            &[
                (&[[1, 0], [0, 1]], LaurentPoly::one()),
                (&[[0, 1], [1, 0]], LaurentPoly::q_pow(-2) - LaurentPoly::q_pow(2)),
            ],
        );
        assert_eq!(straighten(&w), expected);
    }

    #[test]
    fn straighten_agrees_with_insertion_route() {
        let alg = QMatrixAlgebra::new(3);
        let words = [
            vec![l(3, 3), l(2, 2), l(1, 1)],
            vec![l(2, 3), l(3, 1), l(1, 2), l(2, 1)],
            vec![l(3, 3), l(3, 3), l(1, 1), l(2, 2), l(1, 1)],
        ];
        for letters in words {
            let w = Word::new(3, letters);
            assert_eq!(straighten(&w), alg.word_product(&w));
        }
    }

    #[test]
    fn rewrite_measure_strictly_decreases() {
        let w = Word::new(3, vec![l(3, 3), l(2, 3), l(3, 2), l(2, 2), l(1, 1), l(1, 3)]);
        let mut steps = 0;
        straighten_observed(&w, |before, after| {
            steps += 1;
            assert!(after < before, "{before:?} -> {after:?}");
        });
        assert!(steps > 0);
    }

    #[test]
    fn multiply_examples() {
        let alg = QMatrixAlgebra::new(2);
        let a = Element::basis_vector(ExponentMatrix::rows(&[[1, 2], [0, 1]]), Basis::Plain);
        assert_eq!(alg.multiply(&a, &alg.one()).unwrap(), a);
        let prod = alg.multiply(&alg.generator(0, 0), &alg.generator(1, 1)).unwrap();
        assert_eq!(prod, Element::basis_vector(ExponentMatrix::identity(2), Basis::Plain));
        let other = QMatrixAlgebra::new(3);
        assert!(matches!(
            alg.multiply(&a, &other.one()),
            Err(crate::Error::SizeMismatch(2, 3))
        ));
    }

    #[test]
    fn bar_examples() {
        let alg = QMatrixAlgebra::new(2);
        let x11 = alg.generator(0, 0);
        assert_eq!(alg.bar(&x11).unwrap(), x11);
        let anti = Element::basis_vector(ExponentMatrix::rows(&[[0, 1], [1, 0]]), Basis::Plain);
        assert_eq!(alg.bar(&anti).unwrap(), anti);
        let a = ExponentMatrix::rows(&[[2, 0], [0, 0]]);
        let barred = alg.bar(&Element::basis_vector(a.clone(), Basis::Plain)).unwrap();
        assert_eq!(barred.coeff(&a), a.stat_e());
    }

    #[test]
    fn sigma_examples() {
        let alg = QMatrixAlgebra::new(2);
        assert_eq!(alg.sigma(&alg.generator(0, 1)).unwrap(), alg.generator(1, 0));
        let det = Element::from_terms(
            2,
            Basis::Plain,
            [
                (ExponentMatrix::identity(2), LaurentPoly::one()),
                (ExponentMatrix::rows(&[[0, 1], [1, 0]]), -LaurentPoly::q_pow(2)),
            ],
        )
        .unwrap();
        assert_eq!(alg.sigma(&det).unwrap(), det);
    }

    #[test]
    fn modified_basis_roundtrip() {
        let a = ExponentMatrix::rows(&[[1, 1], [0, 0]]);
        let x = Element::basis_vector(a.clone(), Basis::Modified);
        let p = x.to_basis(Basis::Plain).unwrap();
        assert_eq!(p.coeff(&a), LaurentPoly::q_pow(-1));
        assert_eq!(p.to_basis(Basis::Modified).unwrap(), x);
        assert!(x.to_basis(Basis::Canonical).is_err());
    }

    #[test]
    fn less_than_cached_matches_uncached() {
        let alg = QMatrixAlgebra::new(3);
        let block = enumerate_block(&[2, 1, 1], &[1, 2, 1]);
        for a in &block {
            for b in &block {
                assert_eq!(alg.less_than(b, a), less_than(b, a));
            }
        }
    }
}
