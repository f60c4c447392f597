use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::exponent::{ExponentMatrix, Letter};
use crate::error::Error;
use crate::LaurentPoly;

/// Which family of basis vectors the keys of an [`Element`] refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// Monomials `x^A` with factors in lexicographic order.
    Plain,
    /// Rescaled monomials `x(A) = D(A) x^A`.
    Modified,
    /// Dual canonical basis elements `b(A)`.
    Canonical,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Plain => "plain",
            Basis::Modified => "modified",
            Basis::Canonical => "canonical",
        }
    }
}

/// A finite `Z[q, q^-1]`-combination of basis vectors indexed by exponent matrices.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    n: usize,
    basis: Basis,
    terms: BTreeMap<ExponentMatrix, LaurentPoly>,
}

impl Element {
    pub fn zero(n: usize, basis: Basis) -> Self {
        Element { n, basis, terms: BTreeMap::new() }
    }

    pub fn one(n: usize, basis: Basis) -> Self {
        Self::term(ExponentMatrix::zero(n), LaurentPoly::one(), basis)
    }

    pub fn term(m: ExponentMatrix, coeff: LaurentPoly, basis: Basis) -> Self {
        let mut e = Self::zero(m.n(), basis);
        e.add_term(m, &coeff);
        e
    }

    pub fn basis_vector(m: ExponentMatrix, basis: Basis) -> Self {
        Self::term(m, LaurentPoly::one(), basis)
    }

    /// The generator `x_ij` (0-based) in the plain basis.
    pub fn generator(n: usize, l: Letter) -> Self {
        Self::basis_vector(ExponentMatrix::unit(n, l), Basis::Plain)
    }

    pub fn from_terms<I>(n: usize, basis: Basis, terms: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (ExponentMatrix, LaurentPoly)>,
    {
        let mut e = Self::zero(n, basis);
        for (m, c) in terms {
            if m.n() != n {
                return Err(Error::SizeMismatch(n, m.n()));
            }
            e.add_term(m, &c);
        }
        Ok(e)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ExponentMatrix, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<ExponentMatrix, LaurentPoly> {
        self.terms
    }

    pub fn coeff(&self, m: &ExponentMatrix) -> LaurentPoly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> impl Iterator<Item = &ExponentMatrix> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, m: ExponentMatrix, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.n(), self.n);
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `c * other` in place.
    pub fn add_scaled(&mut self, other: &Element, c: &LaurentPoly) {
        debug_assert_eq!(self.basis, other.basis);
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(m.clone(), &(x * c));
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Element {
        let mut out = Element::zero(self.n, self.basis);
        out.add_scaled(self, c);
        out
    }

    pub fn add(&self, other: &Element) -> Result<Element, Error> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::one());
        Ok(out)
    }

    pub fn sub(&self, other: &Element) -> Result<Element, Error> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &-LaurentPoly::one());
        Ok(out)
    }

    pub fn check_compatible(&self, other: &Element) -> Result<(), Error> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        if self.basis != other.basis {
            return Err(Error::WrongBasis(other.basis.name()));
        }
        Ok(())
    }

    /// Coefficientwise bar map, leaving the basis vectors alone.
    pub fn bar_coefficients(&self) -> Element {
        Element {
            n: self.n,
            basis: self.basis,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.bar())).collect(),
        }
    }

    /// Converts between the plain and modified bases.
    pub fn to_basis(&self, target: Basis) -> Result<Element, Error> {
        match (self.basis, target) {
            (a, b) if a == b => Ok(self.clone()),
            (Basis::Plain, Basis::Modified) => Ok(self.rescaled(target, 1)),
            (Basis::Modified, Basis::Plain) => Ok(self.rescaled(target, -1)),
            (_, Basis::Canonical) | (Basis::Canonical, _) => Err(Error::WrongBasis("canonical")),
            _ => unreachable!(),
        }
    }

    // c x^A = c q^{pairs(A)} x(A).
    fn rescaled(&self, target: Basis, sign: i32) -> Element {
        Element {
            n: self.n,
            basis: target,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.shift(sign * m.pair_count()))).collect(),
        }
    }

    /// Tags the same coefficient map with another basis.
    pub fn relabel(self, basis: Basis) -> Element {
        Element { basis, ..self }
    }

    /// Keys sorted by decreasing `stat`, the order used by triangular solves.
    pub fn support_by_stat(&self) -> Vec<ExponentMatrix> {
        let mut v: Vec<_> = self.terms.keys().cloned().collect();
        v.sort_by(|a, b| b.stat().cmp(&a.stat()).then_with(|| b.cmp(a)));
        v
    }

    /// True when every coefficient lies in `Z[q]`.
    pub fn in_lattice(&self) -> bool {
        self.terms.values().all(|c| c.in_zq())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element[{}]({self})", self.basis.name())
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let tag = match self.basis {
            Basis::Plain => "",
            Basis::Modified => "x",
            Basis::Canonical => "b",
        };
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let mono = if tag.is_empty() { m.to_string() } else { format!("{tag}{:?}", m) };
            if c.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "({c}) {mono}")?;
            }
        }
        Ok(())
    }
}

/// JSON form: `{"n": .., "basis": .., "terms": [{"matrix": .., "coeff": ..}]}`.
#[derive(Serialize, Deserialize)]
struct ElementJson {
    n: usize,
    basis: Basis,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    matrix: ExponentMatrix,
    coeff: LaurentPoly,
}

impl Serialize for Element {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ElementJson {
            n: self.n,
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson { matrix: m.clone(), coeff: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = ElementJson::deserialize(d)?;
        Element::from_terms(j.n, j.basis, j.terms.into_iter().map(|t| (t.matrix, t.coeff)))
            .map_err(serde::de::Error::custom)
    }
}
