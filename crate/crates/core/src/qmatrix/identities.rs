//! Power and commutation identities for a pair of generators `x_ij`, `x_kl`
//! with `i < k`, `j < l`.

use crate::error::Error;
use crate::laurent::gauss_binomial;
use crate::LaurentPoly;

use super::{Basis, Element, ExponentMatrix, Letter, QMatrixAlgebra, Word};

/// Two positions `(i, j)`, `(k, l)` with `i < k` and `j < l`, 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Corners {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
}

impl Corners {
    pub fn new(i: usize, j: usize, k: usize, l: usize) -> Result<Self, Error> {
        if i >= k || j >= l {
            return Err(Error::InvalidMinor(format!("corners ({i},{j}), ({k},{l})")));
        }
        Ok(Corners { i, j, k, l })
    }

    /// All corner pairs of an `n x n` matrix.
    pub fn all(n: usize) -> Vec<Corners> {
        let mut out = Vec::new();
        for i in 0..n {
            for k in i + 1..n {
                for j in 0..n {
                    for l in j + 1..n {
                        out.push(Corners { i, j, k, l });
                    }
                }
            }
        }
        out
    }

    fn ij(self) -> Letter {
        Letter::new(self.i, self.j)
    }
    fn il(self) -> Letter {
        Letter::new(self.i, self.l)
    }
    fn kj(self) -> Letter {
        Letter::new(self.k, self.j)
    }
    fn kl(self) -> Letter {
        Letter::new(self.k, self.l)
    }

    /// `x_ij^a x_il^b x_kj^b x_kl^c`, already in normal order.
    fn monomial(self, n: usize, a: u32, b: u32, c: u32) -> ExponentMatrix {
        let mut m = ExponentMatrix::zero(n);
        m.set(self.i, self.j, a);
        m.set(self.i, self.l, b);
        m.set(self.k, self.j, b);
        m.set(self.k, self.l, c);
        m
    }
}

fn word(alg: &QMatrixAlgebra, letters: Vec<Letter>) -> Element {
    alg.word_product(&Word::new(alg.n(), letters))
}

/// `(x_ij x_kl - c x_il x_kj)^s`.
pub fn minor_power(alg: &QMatrixAlgebra, p: Corners, c: &LaurentPoly, s: u32) -> Result<Element, Error> {
    let minor = word(alg, vec![p.ij(), p.kl()]).sub(&word(alg, vec![p.il(), p.kj()]).scale(c))?;
    let mut acc = alg.one();
    for _ in 0..s {
        acc = alg.multiply(&acc, &minor)?;
    }
    Ok(acc)
}

/// `Σ_m (-q^2)^m binom(s, m)_{q^-4} q^{extra(m)} x_ij^{s-m} x_il^m x_kj^m x_kl^{s-m}`.
fn weighted_expansion(alg: &QMatrixAlgebra, p: Corners, s: u32, extra: impl Fn(i32) -> i32) -> Result<Element, Error> {
    let mut out = Element::zero(alg.n(), Basis::Plain);
    for m in 0..=s {
        let sign = if m % 2 == 0 { LaurentPoly::one() } else { -LaurentPoly::one() };
        let mi = m as i32;
        let c = &(&sign * &gauss_binomial(s, m, -4)?) * &LaurentPoly::q_pow(2 * mi + extra(mi));
        out.add_term(p.monomial(alg.n(), s - m, m, s - m), &c);
    }
    Ok(out)
}

/// `Σ_m (-q^2)^m binom(s, m)_{q^-4} x_ij^{s-m} x_il^m x_kj^m x_kl^{s-m}`, equal to
/// `(x_ij x_kl - q^2 x_il x_kj)^s`.
pub fn power_expansion(alg: &QMatrixAlgebra, p: Corners, s: u32) -> Result<Element, Error> {
    weighted_expansion(alg, p, s, |_| 0)
}

/// The expansion with an extra factor `q^{4m(m-s)}` on the `m`-th term.
pub fn power_expansion_with_extra_factor(alg: &QMatrixAlgebra, p: Corners, s: u32) -> Result<Element, Error> {
    weighted_expansion(alg, p, s, |m| 4 * m * (m - s as i32))
}

/// Difference of the two sides of `x_kl x_ij^s = x_ij^s x_kl + c x_ij^{s-1} x_il x_kj`.
pub fn first_commutation_defect(alg: &QMatrixAlgebra, p: Corners, s: u32, c: &LaurentPoly) -> Result<Element, Error> {
    let mut lhs = vec![p.kl()];
    lhs.extend(std::iter::repeat_n(p.ij(), s as usize));
    let mut rhs = vec![p.ij(); s as usize];
    rhs.push(p.kl());
    let mut corr = vec![p.ij(); s as usize - 1];
    corr.extend([p.il(), p.kj()]);
    word(alg, lhs).sub(&word(alg, rhs))?.sub(&word(alg, corr).scale(c))
}

/// Difference of the two sides of `x_kl^s x_ij = x_ij x_kl^s + c x_il x_kj x_kl^{s-1}`.
pub fn second_commutation_defect(alg: &QMatrixAlgebra, p: Corners, s: u32, c: &LaurentPoly) -> Result<Element, Error> {
    let mut lhs = vec![p.kl(); s as usize];
    lhs.push(p.ij());
    let mut rhs = vec![p.ij()];
    rhs.extend(std::iter::repeat_n(p.kl(), s as usize));
    let mut corr = vec![p.il(), p.kj()];
    corr.extend(std::iter::repeat_n(p.kl(), s as usize - 1));
    word(alg, lhs).sub(&word(alg, rhs))?.sub(&word(alg, corr).scale(c))
}

/// `q^{2-4s} - q^2`, the coefficient that makes both commutation identities hold.
pub fn commutation_coefficient(s: u32) -> LaurentPoly {
    LaurentPoly::q_pow(2 - 4 * s as i32) - LaurentPoly::q_pow(2)
}
