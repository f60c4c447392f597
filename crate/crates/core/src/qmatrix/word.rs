use super::element::{Basis, Element};
use super::exponent::{ExponentMatrix, Letter};
use crate::LaurentPoly;

/// A scalar times a product of generators in arbitrary order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    pub n: usize,
    pub letters: Vec<Letter>,
    pub scalar: LaurentPoly,
}

impl Word {
    pub fn new(n: usize, letters: Vec<Letter>) -> Self {
        Word { n, letters, scalar: LaurentPoly::one() }
    }

    pub fn with_scalar(n: usize, letters: Vec<Letter>, scalar: LaurentPoly) -> Self {
        Word { n, letters, scalar }
    }

    /// The factors of `x^A` in order.
    pub fn of_monomial(m: &ExponentMatrix) -> Self {
        Word::new(m.n(), m.letters().collect())
    }

    pub fn reversed(&self) -> Self {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word { n: self.n, letters, scalar: self.scalar.clone() }
    }
}

/// Termination measure of the rewriting system: `(sum of 1-based i*j over
/// letters, number of out-of-order pairs)`. Swaps keep the first component
/// and drop the inversion count by one; the correction term of the
/// `i<s, j<t` relation drops the first component by `(s-i)(t-j)`.
pub fn rewrite_measure(letters: &[Letter]) -> (u64, u64) {
    let weight = letters.iter().map(|l| (l.row as u64 + 1) * (l.col as u64 + 1)).sum();
    let mut inversions = 0;
    for (a, x) in letters.iter().enumerate() {
        for y in &letters[a + 1..] {
            if x > y {
                inversions += 1;
            }
        }
    }
    (weight, inversions)
}

/// One application of the defining relations to an adjacent pair `y x` with
/// `y > x` lexicographically. Returns the replacement pairs with their
/// coefficients.
pub fn rewrite_pair(y: Letter, x: Letter) -> Vec<([Letter; 2], LaurentPoly)> {
    debug_assert!(y > x);
    if y.row == x.row || y.col == x.col {
        // x_ij x_ik = q^2 x_ik x_ij (j<k) and x_ij x_kj = q^2 x_kj x_ij (i<k).
        vec![([x, y], LaurentPoly::q_pow(-2))]
    } else if y.col < x.col {
        // y.row > x.row here: x_ij x_st = x_st x_ij for i>s, j<t.
        vec![([x, y], LaurentPoly::one())]
    } else {
        // y.row > x.row, y.col > x.col:
        // x_st x_ij = x_ij x_st - (q^2 - q^-2) x_it x_sj with (i,j) = x, (s,t) = y.
        let corr = LaurentPoly::q_pow(-2) - LaurentPoly::q_pow(2);
        vec![
            ([x, y], LaurentPoly::one()),
            ([Letter::new(x.row, y.col), Letter::new(y.row, x.col)], corr),
        ]
    }
}

/// Straightens a word into the plain monomial basis by repeatedly rewriting
/// the leftmost adjacent out-of-order pair.
pub fn straighten(word: &Word) -> Element {
    straighten_observed(word, |_, _| {})
}

/// As [`straighten`], calling `observe(before, after)` with the rewrite
/// measure of every rewrite step.
pub fn straighten_observed<F>(word: &Word, mut observe: F) -> Element
where
    F: FnMut((u64, u64), (u64, u64)),
{
    let n = word.n;
    let mut out = Element::zero(n, Basis::Plain);
    let mut work: Vec<(Vec<Letter>, LaurentPoly)> = vec![(word.letters.clone(), word.scalar.clone())];
    while let Some((letters, c)) = work.pop() {
        if c.is_zero() {
            continue;
        }
        match letters.windows(2).position(|w| w[0] > w[1]) {
            None => {
                let mut m = ExponentMatrix::zero(n);
                for l in &letters {
                    m = m.add_letter(*l);
                }
                out.add_term(m, &c);
            }
            Some(p) => {
                let before = rewrite_measure(&letters);
                for (pair, k) in rewrite_pair(letters[p], letters[p + 1]) {
                    let mut next = letters.clone();
                    next[p] = pair[0];
                    next[p + 1] = pair[1];
                    observe(before, rewrite_measure(&next));
                    work.push((next, &c * &k));
                }
            }
        }
    }
    out
}
