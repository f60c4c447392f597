use std::collections::HashSet;
use std::sync::Arc;

use dashmap::DashMap;

use super::element::{Basis, Element};
use super::exponent::{ExponentMatrix, Letter};
use super::word::{rewrite_pair, Word};
use crate::error::Error;
use crate::LaurentPoly;

type Terms = Arc<Vec<(ExponentMatrix, LaurentPoly)>>;

/// `O_q(M(n))` for a fixed `n`, with memo tables for products and the bar map.
///
/// Products are computed by inserting one generator at a time into a normal
/// monomial, applying the defining relations against the largest factor.
/// The tables only ever store values that a fresh computation would produce,
/// so sharing one instance across threads is safe.
pub struct QMatrixAlgebra {
    n: usize,
    mul_letter_cache: DashMap<(ExponentMatrix, Letter), Terms>,
    bar_cache: DashMap<ExponentMatrix, Terms>,
    down_sets: DashMap<ExponentMatrix, Arc<HashSet<ExponentMatrix>>>,
}

impl QMatrixAlgebra {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "matrix size must be positive");
        QMatrixAlgebra {
            n,
            mul_letter_cache: DashMap::new(),
            bar_cache: DashMap::new(),
            down_sets: DashMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generator(&self, i: usize, j: usize) -> Element {
        Element::generator(self.n, Letter::new(i, j))
    }

    pub fn one(&self) -> Element {
        Element::one(self.n, Basis::Plain)
    }

    /// `x^A * x_l` in the plain basis.
    pub fn mul_letter(&self, a: &ExponentMatrix, l: Letter) -> Terms {
        let key = (a.clone(), l);
        if let Some(v) = self.mul_letter_cache.get(&key) {
            return v.clone();
        }
        let value = Arc::new(self.mul_letter_uncached(a, l));
        self.mul_letter_cache.insert(key, value.clone());
        value
    }

    fn mul_letter_uncached(&self, a: &ExponentMatrix, l: Letter) -> Vec<(ExponentMatrix, LaurentPoly)> {
        let y = match a.max_letter() {
            Some(y) if y > l => y,
            _ => return vec![(a.add_letter(l), LaurentPoly::one())],
        };
        // x^A = x^{A'} y with y the largest factor; rewrite y x_l and push the
        // result through x^{A'}. Every factor produced is <= y, so appending
        // y afterwards keeps the monomial normal.
        let rest = a.remove_letter(y).expect("max letter present");
        let mut acc: Vec<(ExponentMatrix, LaurentPoly)> = Vec::new();
        for ([first, second], k) in rewrite_pair(y, l) {
            let mut partial: Vec<(ExponentMatrix, LaurentPoly)> = vec![(rest.clone(), k)];
            for letter in [first, second] {
                let mut next = Vec::new();
                for (m, c) in &partial {
                    if letter == y {
                        next.push((m.add_letter(y), c.clone()));
                    } else {
                        for (m2, c2) in self.mul_letter(m, letter).iter() {
                            next.push((m2.clone(), c * c2));
                        }
                    }
                }
                partial = next;
            }
            acc.extend(partial);
        }
        collect_terms(acc)
    }

    /// `x^A x^B` in the plain basis.
    pub fn mul_monomials(&self, a: &ExponentMatrix, b: &ExponentMatrix) -> Vec<(ExponentMatrix, LaurentPoly)> {
        let mut acc = vec![(a.clone(), LaurentPoly::one())];
        for l in b.letters() {
            acc = self.times_letter(&acc, l);
        }
        acc
    }

    fn times_letter(&self, acc: &[(ExponentMatrix, LaurentPoly)], l: Letter) -> Vec<(ExponentMatrix, LaurentPoly)> {
        let mut next = Vec::new();
        for (m, c) in acc {
            for (m2, c2) in self.mul_letter(m, l).iter() {
                next.push((m2.clone(), c * c2));
            }
        }
        collect_terms(next)
    }

    /// Product of a word, straightened through the memoized insertion route.
    pub fn word_product(&self, w: &Word) -> Element {
        let mut acc = vec![(ExponentMatrix::zero(self.n), w.scalar.clone())];
        for &l in &w.letters {
            acc = self.times_letter(&acc, l);
        }
        Element::from_terms(self.n, Basis::Plain, acc).expect("sizes agree")
    }

    /// Product of two elements, both in the plain or both in the modified basis.
    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element, Error> {
        a.check_compatible(b)?;
        self.check_n(a)?;
        let basis = a.basis();
        if basis == Basis::Canonical {
            return Err(Error::WrongBasis("canonical"));
        }
        let (pa, pb) = (a.to_basis(Basis::Plain)?, b.to_basis(Basis::Plain)?);
        let mut out = Element::zero(self.n, Basis::Plain);
        for (ma, ca) in pa.iter() {
            for (mb, cb) in pb.iter() {
                let k = ca * cb;
                for (m, c) in self.mul_monomials(ma, mb) {
                    out.add_term(m, &(&c * &k));
                }
            }
        }
        out.to_basis(basis)
    }

    /// `bar(x^A)` in the plain basis: the reversed word, straightened.
    pub fn bar_monomial(&self, a: &ExponentMatrix) -> Terms {
        if let Some(v) = self.bar_cache.get(a) {
            return v.clone();
        }
        let value = match a.min_letter() {
            None => vec![(a.clone(), LaurentPoly::one())],
            Some(l) => {
                // bar(x_l x^{A'}) = bar(x^{A'}) x_l
                let rest = a.remove_letter(l).expect("min letter present");
                let inner = self.bar_monomial(&rest);
                self.times_letter(&inner, l)
            }
        };
        let value = Arc::new(value);
        self.bar_cache.insert(a.clone(), value.clone());
        value
    }

    /// The bar anti-automorphism (`x_ij` fixed, `q -> q^-1`).
    pub fn bar(&self, a: &Element) -> Result<Element, Error> {
        self.check_n(a)?;
        let basis = a.basis();
        if basis == Basis::Canonical {
            return Err(Error::WrongBasis("canonical"));
        }
        let plain = a.to_basis(Basis::Plain)?;
        let mut out = Element::zero(self.n, Basis::Plain);
        for (m, c) in plain.iter() {
            let cb = c.bar();
            for (m2, c2) in self.bar_monomial(m).iter() {
                out.add_term(m2.clone(), &(c2 * &cb));
            }
        }
        out.to_basis(basis)
    }

    /// The automorphism `sigma: x_ij -> x_ji`.
    pub fn sigma(&self, a: &Element) -> Result<Element, Error> {
        self.check_n(a)?;
        let basis = a.basis();
        if basis == Basis::Canonical {
            return Err(Error::WrongBasis("canonical"));
        }
        let plain = a.to_basis(Basis::Plain)?;
        let mut out = Element::zero(self.n, Basis::Plain);
        for (m, c) in plain.iter() {
            let w = Word::with_scalar(self.n, m.letters().map(Letter::transpose).collect(), c.clone());
            out.add_scaled(&self.word_product(&w), &LaurentPoly::one());
        }
        out.to_basis(basis)
    }

    /// `b < a` in the 2x2-move order, with memoized down-sets.
    pub fn less_than(&self, b: &ExponentMatrix, a: &ExponentMatrix) -> bool {
        if b.n() != a.n() || b.ro() != a.ro() || b.co() != a.co() || b.stat() >= a.stat() {
            return false;
        }
        let set = match self.down_sets.get(a) {
            Some(s) => s.clone(),
            None => {
                let s = Arc::new(a.down_set());
                self.down_sets.insert(a.clone(), s.clone());
                s
            }
        };
        set.contains(b)
    }

    fn check_n(&self, a: &Element) -> Result<(), Error> {
        if a.n() != self.n {
            return Err(Error::SizeMismatch(self.n, a.n()));
        }
        Ok(())
    }
}

fn collect_terms(v: Vec<(ExponentMatrix, LaurentPoly)>) -> Vec<(ExponentMatrix, LaurentPoly)> {
    let mut map: std::collections::BTreeMap<ExponentMatrix, LaurentPoly> = Default::default();
    for (m, c) in v {
        let slot = map.entry(m).or_default();
        *slot += &c;
    }
    map.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}
