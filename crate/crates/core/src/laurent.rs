//! Exact Laurent polynomials in one variable `q` with integer coefficients.
//!
//! [`Laurent`] is generic over the coefficient type so that the same code runs
//! on machine integers and on arbitrary-precision integers. The crate works
//! with [`crate::LaurentPoly`], the `BigInt` instantiation.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Integer types usable as coefficients.
pub trait Coefficient:
    Clone + fmt::Debug + fmt::Display + FromStr + Hash + Ord + Integer + Signed + Send + Sync
{
}

impl<T> Coefficient for T where
    T: Clone + fmt::Debug + fmt::Display + FromStr + Hash + Ord + Integer + Signed + Send + Sync
{
}

/// An element of `Z[q, q^-1]`.
///
/// Terms are kept sorted by exponent and no stored coefficient is zero, so
/// structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent<C> {
    terms: Vec<(i32, C)>,
}

impl<C: Coefficient> Default for Laurent<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> Laurent<C> {
    pub fn zero() -> Self {
        Laurent { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exp: i32, c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Laurent { terms: vec![(exp, c)] }
        }
    }

    /// `q^exp`.
    pub fn q_pow(exp: i32) -> Self {
        Self::monomial(exp, C::one())
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs,
    /// merging repeated exponents and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (i32, C)>>(iter: I) -> Self {
        let mut terms: Vec<(i32, C)> = iter.into_iter().collect();
        terms.sort_by_key(|t| t.0);
        let mut out: Vec<(i32, C)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 = last.1.clone() + c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Laurent { terms: out }
    }

    pub fn terms(&self) -> &[(i32, C)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn coeff(&self, exp: i32) -> C {
        match self.terms.binary_search_by_key(&exp, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => C::zero(),
        }
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|t| t.0)
    }

    /// The bar map `q -> q^-1`.
    pub fn bar(&self) -> Self {
        Laurent {
            terms: self.terms.iter().rev().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|(e, x)| (*e, x.clone() * c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `Some((e, c))` if the polynomial is the single term `c q^e`.
    pub fn as_monomial(&self) -> Option<(i32, &C)> {
        match self.terms.as_slice() {
            [(e, c)] => Some((*e, c)),
            _ => None,
        }
    }

    /// True when the polynomial is `q^e` or `-q^e`, i.e. a unit of `Z[q, q^-1]`.
    pub fn is_unit(&self) -> bool {
        matches!(self.as_monomial(), Some((_, c)) if c.abs().is_one())
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    pub fn is_skew(&self) -> bool {
        *self == -self.bar()
    }

    /// Every exponent is at least one: membership in `qZ[q]`.
    pub fn in_q_zq(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 1)
    }

    /// Every exponent is nonnegative: membership in `Z[q]`.
    pub fn in_zq(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0)
    }

    /// All coefficients are nonnegative: membership in `Z_+[q, q^-1]`.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.iter().all(|(_, c)| !c.is_negative())
    }

    /// The unique `h` in `qZ[q]` with `h - bar(h) = self`.
    ///
    /// Requires `bar(self) = -self`; the solution is the strictly positive
    /// exponent part.
    pub fn solve_skew(&self) -> Result<Self, Error> {
        if !self.is_skew() {
            return Err(Error::NotSkewSymmetric);
        }
        Ok(Laurent {
            terms: self.terms.iter().filter(|t| t.0 > 0).cloned().collect(),
        })
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder in `Z[q, q^-1]`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (d_lo, d_hi) = (divisor.min_exp()?, divisor.max_exp()?);
        let lead = divisor.terms.last()?.1.clone();
        // Dense long division from the top degree downward.
        let lo = self.min_exp()?;
        let hi = self.max_exp()?;
        let mut rem: Vec<C> = vec![C::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            rem[(e - lo) as usize] = c.clone();
        }
        let dense_div: Vec<(i32, C)> = divisor.terms.clone();
        let mut quot: Vec<(i32, C)> = Vec::new();
        let mut top = hi;
        while top - (d_hi - d_lo) >= lo {
            let idx = (top - lo) as usize;
            if !rem[idx].is_zero() {
                let (qc, r) = rem[idx].div_rem(&lead);
                if !r.is_zero() {
                    return None;
                }
                let qe = top - d_hi;
                for (e, c) in &dense_div {
                    let j = (qe + e - lo) as usize;
                    rem[j] = rem[j].clone() - qc.clone() * c.clone();
                }
                quot.push((qe, qc));
            }
            top -= 1;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_terms(quot))
    }

    /// Evaluates at an integer value of `q` (which must be invertible for
    /// negative exponents: the result is `None` if a negative power does not
    /// divide exactly).
    pub fn eval_at(&self, q: &C) -> Option<C> {
        let lo = self.min_exp().unwrap_or(0).min(0);
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let mut p = C::one();
            for _ in 0..(e - lo) {
                p = p * q.clone();
            }
            acc = acc + c.clone() * p;
        }
        let mut den = C::one();
        for _ in 0..(-lo) {
            den = den * q.clone();
        }
        let (quot, r) = acc.div_rem(&den);
        r.is_zero().then_some(quot)
    }
}

/// Gaussian binomial coefficient in `v = q^base_exponent`:
/// `prod_{i=1..k} (1 - v^(n-k+i)) / (1 - v^i)`.
pub fn gauss_binomial<C: Coefficient>(n: u32, k: u32, base_exponent: i32) -> Result<Laurent<C>, Error> {
    if k > n {
        return Err(Error::BinomialUndefined { n, k });
    }
    // q-Pascal: [n,k] = [n-1,k] + v^(n-k) [n-1,k-1], rows built bottom-up.
    let mut row: Vec<Laurent<C>> = vec![Laurent::one()];
    for m in 1..=n {
        let mut next = vec![Laurent::one(); (m + 1) as usize];
        for j in 1..m {
            let shift = base_exponent * (m - j) as i32;
            next[j as usize] = &row[j as usize] + &row[(j - 1) as usize].shift(shift);
        }
        row = next;
    }
    Ok(row[k as usize].clone())
}

/// Balanced (bar-symmetric) binomial `[n, k]_v` with `v = q^base_exponent`,
/// equal to `v^(-k(n-k))` times the Gaussian binomial in `v^2`.
pub fn balanced_binomial<C: Coefficient>(n: u32, k: u32, base_exponent: i32) -> Result<Laurent<C>, Error> {
    let g = gauss_binomial::<C>(n, k, 2 * base_exponent)?;
    Ok(g.shift(-base_exponent * (k * (n - k)) as i32))
}

/// `[m] = (q^(-4m) - 1) / (q^(-4) - 1) = 1 + q^-4 + ... + q^(-4(m-1))`.
pub fn quantum_integer<C: Coefficient>(m: u32) -> Laurent<C> {
    if m == 0 {
        return Laurent::zero();
    }
    gauss_binomial(m, 1, -4).expect("1 <= m")
}

fn merge<C: Coefficient>(a: &[(i32, C)], b: &[(i32, C)], negate_b: bool) -> Vec<(i32, C)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let fix = |c: &C| if negate_b { -c.clone() } else { c.clone() };
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push((b[j].0, fix(&b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let s = a[i].1.clone() + fix(&b[j].1);
                if !s.is_zero() {
                    out.push((a[i].0, s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|(e, c)| (*e, fix(c))));
    out
}

impl<'a, C: Coefficient> Add<&'a Laurent<C>> for &'a Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: &'a Laurent<C>) -> Laurent<C> {
        Laurent { terms: merge(&self.terms, &rhs.terms, false) }
    }
}

impl<'a, C: Coefficient> Sub<&'a Laurent<C>> for &'a Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: &'a Laurent<C>) -> Laurent<C> {
        Laurent { terms: merge(&self.terms, &rhs.terms, true) }
    }
}

impl<'a, C: Coefficient> Mul<&'a Laurent<C>> for &'a Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: &'a Laurent<C>) -> Laurent<C> {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero();
        }
        if let Some((e, c)) = rhs.as_monomial() {
            let c = c.clone();
            return Laurent {
                terms: self.terms.iter().map(|(x, d)| (x + e, d.clone() * c.clone())).collect(),
            };
        }
        if let Some((e, c)) = self.as_monomial() {
            let c = c.clone();
            return Laurent {
                terms: rhs.terms.iter().map(|(x, d)| (x + e, c.clone() * d.clone())).collect(),
            };
        }
        let lo = self.terms[0].0 + rhs.terms[0].0;
        let hi = self.terms.last().unwrap().0 + rhs.terms.last().unwrap().0;
        let mut dense = vec![C::zero(); (hi - lo + 1) as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let slot = &mut dense[(ea + eb - lo) as usize];
                *slot = slot.clone() + ca.clone() * cb.clone();
            }
        }
        Laurent {
            terms: dense
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (lo + i as i32, c))
                .collect(),
        }
    }
}

impl<C: Coefficient> Neg for &Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        Laurent { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

impl<C: Coefficient> Neg for Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl<C: Coefficient> $tr<Laurent<C>> for Laurent<C> {
            type Output = Laurent<C>;
            fn $f(self, rhs: Laurent<C>) -> Laurent<C> {
                (&self).$f(&rhs)
            }
        }
        impl<'a, C: Coefficient> $tr<&'a Laurent<C>> for Laurent<C> {
            type Output = Laurent<C>;
            fn $f(self, rhs: &'a Laurent<C>) -> Laurent<C> {
                (&self).$f(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<C: Coefficient> AddAssign<&Laurent<C>> for Laurent<C> {
    fn add_assign(&mut self, rhs: &Laurent<C>) {
        self.terms = merge(&self.terms, &rhs.terms, false);
    }
}

impl<C: Coefficient> SubAssign<&Laurent<C>> for Laurent<C> {
    fn sub_assign(&mut self, rhs: &Laurent<C>) {
        self.terms = merge(&self.terms, &rhs.terms, true);
    }
}

impl<C: Coefficient> Zero for Laurent<C> {
    fn zero() -> Self {
        Laurent::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coefficient> One for Laurent<C> {
    fn one() -> Self {
        Laurent::one()
    }
}

impl<C: Coefficient> Sum for Laurent<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Laurent::zero(), |acc, x| &acc + &x)
    }
}

impl<C: Coefficient> From<i64> for Laurent<C>
where
    C: From<i64>,
{
    fn from(c: i64) -> Self {
        Laurent::constant(C::from(c))
    }
}

/// Ascending exponents, e.g. `q^-2 + 3 - 2q^4`.
impl<C: Coefficient> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let unit = mag.is_one();
            match *e {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "q")?,
                1 => write!(f, "{mag}q")?,
                _ if unit => write!(f, "q^{e}")?,
                _ => write!(f, "{mag}q^{e}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

// JSON: [[exponent, "coefficient"], ...] sorted by exponent.
impl<C: Coefficient> Serialize for Laurent<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(e, c.to_string()))?;
        }
        seq.end()
    }
}

impl<'de, C: Coefficient> Deserialize<'de> for Laurent<C> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V<C>(std::marker::PhantomData<C>);
        impl<'de, C: Coefficient> Visitor<'de> for V<C> {
            type Value = Laurent<C>;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "an array of [exponent, \"coefficient\"] pairs")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
                let mut terms = Vec::new();
                while let Some((e, s)) = seq.next_element::<(i32, String)>()? {
                    let c = s
                        .parse::<C>()
                        .map_err(|_| de::Error::custom(format!("bad coefficient {s:?}")))?;
                    terms.push((e, c));
                }
                Ok(Laurent::from_terms(terms))
            }
        }
        deserializer.deserialize_seq(V(std::marker::PhantomData))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::LaurentPoly;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn lp(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn add_examples() {
        assert_eq!(lp(&[(2, 1), (0, 1)]) + lp(&[(2, -1)]), lp(&[(0, 1)]));
        let p = lp(&[(-3, 4), (5, -2)]);
        assert_eq!(LaurentPoly::zero() + p.clone(), p);
        assert_eq!(lp(&[(-2, 1), (0, 3)]) + lp(&[(-2, 1), (0, -3)]), lp(&[(-2, 2)]));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(lp(&[(1, 1), (-1, -1)]) * lp(&[(1, 1), (-1, 1)]), lp(&[(2, 1), (-2, -1)]));
        let p = lp(&[(-3, 4), (5, -2)]);
        assert_eq!(&p * &LaurentPoly::one(), p);
        let d = lp(&[(2, 1), (-2, -1)]);
        assert_eq!(&d * &d, lp(&[(4, 1), (0, -2), (-4, 1)]));
    }

    #[test]
    fn bar_examples() {
        assert_eq!(lp(&[(2, 1), (0, 3)]).bar(), lp(&[(-2, 1), (0, 3)]));
        assert_eq!(lp(&[(1, 1), (-1, -1)]).bar(), lp(&[(-1, 1), (1, -1)]));
        assert_eq!(lp(&[(0, 5)]).bar(), lp(&[(0, 5)]));
    }

    #[test]
    fn gauss_binomial_examples() {
        assert_eq!(gauss_binomial::<BigInt>(2, 1, -4).unwrap(), lp(&[(0, 1), (-4, 1)]));
        for s in 0..6 {
            assert!(gauss_binomial::<BigInt>(s, 0, -4).unwrap().is_one());
        }
        assert_eq!(gauss_binomial::<BigInt>(3, 2, -4).unwrap(), lp(&[(0, 1), (-4, 1), (-8, 1)]));
        assert!(matches!(
            gauss_binomial::<BigInt>(2, 3, 1),
            Err(Error::BinomialUndefined { n: 2, k: 3 })
        ));
    }

    #[test]
    fn gauss_binomial_matches_product_formula() {
        // prod (1 - v^(n-k+i)) == binom * prod (1 - v^i), checked as polynomials.
        for n in 0..7u32 {
            for k in 0..=n {
                for base in [-4, -2, 1, 2] {
                    let b = gauss_binomial::<BigInt>(n, k, base).unwrap();
                    let mut num = LaurentPoly::one();
                    let mut den = LaurentPoly::one();
                    for i in 1..=k {
                        num = num * (LaurentPoly::one() - LaurentPoly::q_pow(base * (n - k + i) as i32));
                        den = den * (LaurentPoly::one() - LaurentPoly::q_pow(base * i as i32));
                    }
                    assert_eq!(&b * &den, num, "n={n} k={k} base={base}");
                }
            }
        }
    }

    #[test]
    fn balanced_binomial_two_choose_one() {
        assert_eq!(balanced_binomial::<BigInt>(2, 1, 2).unwrap(), lp(&[(2, 1), (-2, 1)]));
        assert!(balanced_binomial::<BigInt>(5, 2, 2).unwrap().is_bar_invariant());
    }

    #[test]
    fn quantum_integer_is_binomial_m_one() {
        assert_eq!(quantum_integer::<BigInt>(3), lp(&[(0, 1), (-4, 1), (-8, 1)]));
        assert!(quantum_integer::<BigInt>(0).is_zero());
    }

    #[test]
    fn solve_skew_examples() {
        assert_eq!(lp(&[(2, 1), (-2, -1)]).solve_skew().unwrap(), lp(&[(2, 1)]));
        assert!(LaurentPoly::zero().solve_skew().unwrap().is_zero());
        let p = lp(&[(2, -1), (-2, 1), (6, -1), (-6, 1)]);
        let h = p.solve_skew().unwrap();
        assert_eq!(h, lp(&[(2, -1), (6, -1)]));
        assert_eq!(&h - &h.bar(), p);
        assert!(matches!(lp(&[(1, 1)]).solve_skew(), Err(Error::NotSkewSymmetric)));
    }

    #[test]
    fn div_exact_roundtrip_and_failure() {
        let a = lp(&[(-3, 2), (0, -1), (4, 7)]);
        let b = lp(&[(-1, 1), (2, 3)]);
        assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        assert_eq!(lp(&[(0, 1)]).div_exact(&lp(&[(0, 2)])), None);
        assert_eq!(lp(&[(0, 1), (1, 1)]).div_exact(&lp(&[(0, 1), (2, 1)])), None);
        assert_eq!(a.div_exact(&LaurentPoly::q_pow(-3)), Some(a.shift(3)));
    }

    #[test]
    fn display_and_json() {
        let p = lp(&[(-2, 1), (0, 3), (4, -2)]);
        assert_eq!(p.to_string(), "q^-2 + 3 - 2q^4");
        assert_eq!(serde_json::to_string(&lp(&[(-2, 1), (0, 3)])).unwrap(), r#"[[-2,"1"],[0,"3"]]"#);
        let back: LaurentPoly = serde_json::from_str(r#"[[0,"3"],[-2,"1"]]"#).unwrap();
        assert_eq!(back, lp(&[(-2, 1), (0, 3)]));
        let big: LaurentPoly = serde_json::from_str(r#"[[1,"123456789012345678901234567890"]]"#).unwrap();
        assert_eq!(big.coeff(1).to_string(), "123456789012345678901234567890");
    }

    #[test]
    fn machine_integer_coefficients() {
        let p: Laurent<i64> = Laurent::from_terms([(1, 2), (-1, -2)]);
        assert!(p.is_skew());
        assert_eq!(p.solve_skew().unwrap(), Laurent::monomial(1, 2));
        assert_eq!(p.eval_at(&2), Some(3));
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-8i32..8, -5i64..5), 0..6)
            .prop_map(|v| LaurentPoly::from_terms(v.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn bar_is_involution(p in arb_poly()) {
            prop_assert_eq!(p.bar().bar(), p.clone());
            prop_assert!(p.terms().iter().all(|(_, c)| !c.is_zero()));
        }
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        }

        #[test]
        fn solve_skew_inverts(p in arb_poly()) {
            let skew = &p - &p.bar();
            let h = skew.solve_skew().unwrap();
            prop_assert!(h.in_q_zq());
            prop_assert_eq!(&h - &h.bar(), skew);
        }

        #[test]
        fn binomial_symmetry_and_pascal(n in 1u32..9, k in 0u32..9, base in -4i32..5) {
            prop_assume!(k <= n);
            let b = |n, k| gauss_binomial::<BigInt>(n, k, base).unwrap();
            prop_assert_eq!(b(n, k), b(n, n - k));
            if k >= 1 && k < n {
                let rhs = &b(n - 1, k) + &b(n - 1, k - 1).shift(base * (n - k) as i32);
                prop_assert_eq!(b(n, k), rhs);
            }
        }
    }
}
