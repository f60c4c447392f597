//! Passage to `O_q(SL(n)) = O_q(M(n)) / <det_q - 1>`.

use super::CanonicalBasis;
use crate::error::Error;
use crate::qmatrix::{Basis, Element, ExponentMatrix};
use crate::LaurentPoly;

/// Outcome of expanding `det_q * b(A)` in the canonical basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShiftCheck {
    /// `det_q * b(A) = scalar * b(A + Id)`.
    Single { target: ExponentMatrix, scalar: LaurentPoly },
    /// Any other expansion.
    Spread(Element),
}

impl ShiftCheck {
    pub fn unit_scalar(&self) -> Option<&LaurentPoly> {
        match self {
            ShiftCheck::Single { scalar, .. } if scalar.is_unit() => Some(scalar),
            _ => None,
        }
    }
}

impl CanonicalBasis {
    /// Expands `det_q * b(A)` and reports whether it is a single multiple of `b(A + Id)`.
    pub fn detq_shift_check(&self, a: &ExponentMatrix) -> Result<ShiftCheck, Error> {
        if let Some(v) = self.shifts.get(a) {
            return Ok(v.clone());
        }
        let n = self.n();
        let det = self.quantum_determinant().to_basis(Basis::Modified)?;
        let prod = self.multiply(&det, &self.b(a)?)?;
        let target = a.add(&ExponentMatrix::identity(n));
        let check = match prod.iter().collect::<Vec<_>>().as_slice() {
            [(m, c)] if **m == target => ShiftCheck::Single { target, scalar: (*c).clone() },
            _ => ShiftCheck::Spread(prod.clone()),
        };
        self.shifts.insert(a.clone(), check.clone());
        Ok(check)
    }

    /// Images in `O_q(SL(n))`: each `b(A)` becomes a multiple of `b(A - k Id)`
    /// with `k` the smallest diagonal entry, using the shift identity on
    /// every intermediate step. Fails if that identity does not hold.
    pub fn sl_reduce(&self, a: &Element) -> Result<Element, Error> {
        let canon = self.expand_in_canonical(a)?;
        let n = self.n();
        let id = ExponentMatrix::identity(n);
        let mut out = Element::zero(n, Basis::Canonical);
        for (m, c) in canon.iter() {
            let k = m.min_diagonal();
            let mut base = m.clone();
            for _ in 0..k {
                base = base.checked_sub(&id).expect("diagonal at least k");
            }
            // b(base + (j+1) Id) = s_j^-1 det_q b(base + j Id), and det_q = 1.
            let mut factor = LaurentPoly::one();
            let mut cur = base.clone();
            for _ in 0..k {
                let check = self.detq_shift_check(&cur)?;
                let s = check.unit_scalar().ok_or_else(|| {
                    Error::QuotientUnavailable(format!("det_q * b({cur:?}) is not a unit multiple of one basis element"))
                })?;
                factor = &factor * &unit_inverse(s);
                cur = cur.add(&id);
            }
            out.add_term(base, &(c * &factor));
        }
        Ok(out)
    }

    /// Product in `O_q(SL(n))` of two canonical elements, as reduced representatives.
    pub fn multiply_sl(&self, a: &Element, b: &Element) -> Result<Element, Error> {
        self.sl_reduce(&self.multiply(a, b)?)
    }
}

fn unit_inverse(s: &LaurentPoly) -> LaurentPoly {
    let (e, c) = s.as_monomial().expect("unit is a monomial");
    LaurentPoly::monomial(-e, c.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_times_one_is_single_term() {
        let cb = CanonicalBasis::new(2);
        let check = cb.detq_shift_check(&ExponentMatrix::zero(2)).unwrap();
        assert_eq!(check, ShiftCheck::Single { target: ExponentMatrix::identity(2), scalar: LaurentPoly::one() });
    }

    #[test]
    fn reduce_determinant_power_to_one() {
        let cb = CanonicalBasis::new(2);
        let a = ExponentMatrix::rows(&[[2, 0], [0, 2]]);
        let reduced = cb.sl_reduce(&Element::basis_vector(a, Basis::Canonical)).unwrap();
        assert_eq!(reduced.len(), 1);
        let (m, c) = reduced.iter().next().unwrap();
        assert!(m.is_zero());
        assert!(c.is_unit());
    }
}
