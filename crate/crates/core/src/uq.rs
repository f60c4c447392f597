//! `U_q(sl_n)` on generators: Hopf structure maps, the natural
//! representation, and the two commuting translation actions on `O_q(M(n))`.
//!
//! ```text
//! Δ(E_i) = E_i ⊗ 1 + K_i^2 ⊗ E_i     S(E_i) = -K_i^-2 E_i
//! Δ(F_i) = F_i ⊗ K_i^-2 + 1 ⊗ F_i    S(F_i) = -F_i K_i^2
//! Δ(K_i) = K_i ⊗ K_i                 S(K_i) = K_i^-1
//! ```
//!
//! With `Δ(x_ij) = Σ_l x_il ⊗ x_lj` the actions on generators are
//! `R_u(x_ij) = Σ_l x_il ρ(u)_lj` and `L_u(x_ij) = Σ_l ρ(S(u))_il x_lj`.
//! Compatibility with the defining relations pins `ρ(K_k)` to
//! `diag(.., q, q^-1, ..)` at positions `k, k+1`, so that
//! `K_i E_j K_i^-1 = q^{a_ij} E_j` and `[E_i, F_i] = (K_i^2 - K_i^-2)/(q^2 - q^-2)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::qmatrix::{Basis, Element, ExponentMatrix, Letter, QMatrixAlgebra, Word};
use crate::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GenKind {
    E,
    F,
    K,
    Kinv,
}

/// `E_i`, `F_i`, `K_i` or `K_i^-1`, with a 1-based index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub kind: GenKind,
    pub index: usize,
}

impl Generator {
    pub fn e(index: usize) -> Self {
        Generator { kind: GenKind::E, index }
    }

    pub fn f(index: usize) -> Self {
        Generator { kind: GenKind::F, index }
    }

    pub fn k(index: usize) -> Self {
        Generator { kind: GenKind::K, index }
    }

    pub fn k_inv(index: usize) -> Self {
        Generator { kind: GenKind::Kinv, index }
    }

    pub fn check(self, n: usize) -> Result<Self, Error> {
        if self.index == 0 || self.index >= n {
            return Err(Error::InvalidGenerator(format!("{self} for n = {n}")));
        }
        Ok(self)
    }

    /// `ε(E) = ε(F) = 0`, `ε(K^±1) = 1`.
    pub fn counit(self) -> LaurentPoly {
        match self.kind {
            GenKind::E | GenKind::F => LaurentPoly::zero(),
            GenKind::K | GenKind::Kinv => LaurentPoly::one(),
        }
    }

    pub fn all(n: usize) -> Vec<Generator> {
        (1..n)
            .flat_map(|i| [Generator::e(i), Generator::f(i), Generator::k(i), Generator::k_inv(i)])
            .collect()
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GenKind::E => write!(f, "E{}", self.index),
            GenKind::F => write!(f, "F{}", self.index),
            GenKind::K => write!(f, "K{}", self.index),
            GenKind::Kinv => write!(f, "K{}inv", self.index),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidGenerator(s.to_string());
        let (kind, rest) = match s.chars().next() {
            Some('E') => (GenKind::E, &s[1..]),
            Some('F') => (GenKind::F, &s[1..]),
            Some('K') => match s[1..].strip_suffix("inv") {
                Some(r) => (GenKind::Kinv, r),
                None => (GenKind::K, &s[1..]),
            },
            _ => return Err(bad()),
        };
        let index: usize = rest.parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        Ok(Generator { kind, index })
    }
}

impl Serialize for Generator {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Generator {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Which translation action.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    L,
    R,
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "L" | "l" => Ok(Side::L),
            "R" | "r" => Ok(Side::R),
            _ => Err(Error::InvalidGenerator(format!("side {s}"))),
        }
    }
}

/// A weight: `sl` holds the exponents `m_i` with `K_i` acting by `q^{m_i}`;
/// `gl` is the underlying `gl_n` weight when the element is bihomogeneous.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightVector {
    pub sl: Vec<i64>,
    pub gl: Option<Vec<i64>>,
}

impl WeightVector {
    pub fn from_gl(gl: Vec<i64>) -> Self {
        let sl = gl.windows(2).map(|w| w[0] - w[1]).collect();
        WeightVector { sl, gl: Some(gl) }
    }

    /// `Σ l_s Λ_s` from fundamental coordinates.
    pub fn from_fundamental(l: &[i64]) -> Self {
        WeightVector { sl: l.to_vec(), gl: None }
    }

    pub fn is_dominant(&self) -> bool {
        self.sl.iter().all(|&m| m >= 0)
    }

    /// The smallest nonnegative `gl_n` weight with these differences
    /// (`λ_n = 0`, `λ_i = l_i + ... + l_{n-1}`).
    pub fn partition(&self) -> Vec<i64> {
        let mut out = vec![0; self.sl.len() + 1];
        for i in (0..self.sl.len()).rev() {
            out[i] = out[i + 1] + self.sl[i];
        }
        out
    }
}

/// R-weight of `x^A`: gl weight `co(A)`.
pub fn monomial_weight(a: &ExponentMatrix, side: Side) -> WeightVector {
    match side {
        Side::R => WeightVector::from_gl(a.co().into_iter().map(i64::from).collect()),
        Side::L => WeightVector::from_gl(a.ro().into_iter().map(|r| -i64::from(r)).collect()),
    }
}

/// A scalar times an ordered product of generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UqMonomial {
    pub coeff: LaurentPoly,
    pub factors: Vec<Generator>,
}

impl UqMonomial {
    pub fn one() -> Self {
        UqMonomial { coeff: LaurentPoly::one(), factors: Vec::new() }
    }

    pub fn gen(g: Generator) -> Self {
        UqMonomial { coeff: LaurentPoly::one(), factors: vec![g] }
    }

    pub fn new(coeff: LaurentPoly, factors: Vec<Generator>) -> Self {
        UqMonomial { coeff, factors }
    }

    pub fn mul(&self, other: &UqMonomial) -> UqMonomial {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        UqMonomial { coeff: &self.coeff * &other.coeff, factors }
    }

    fn map_anti(&self, f: impl Fn(Generator) -> UqMonomial) -> UqMonomial {
        self.factors.iter().rev().fold(UqMonomial::new(self.coeff.clone(), Vec::new()), |acc, &g| acc.mul(&f(g)))
    }

    fn map_hom(&self, f: impl Fn(Generator) -> UqMonomial) -> UqMonomial {
        self.factors.iter().fold(UqMonomial::new(self.coeff.clone(), Vec::new()), |acc, &g| acc.mul(&f(g)))
    }

    /// Antipode, an anti-automorphism.
    pub fn antipode(&self) -> UqMonomial {
        self.map_anti(antipode)
    }

    pub fn antipode_inverse(&self) -> UqMonomial {
        self.map_anti(antipode_inverse)
    }

    /// `ω`, the anti-automorphism swapping `E_i` and `F_i` and fixing `K_i`.
    pub fn omega(&self) -> UqMonomial {
        self.map_anti(|g| UqMonomial::gen(omega(g)))
    }

    /// `θ = ω ∘ S^-1`, an algebra automorphism.
    pub fn theta(&self) -> UqMonomial {
        self.map_hom(theta)
    }
}

impl fmt::Display for UqMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coeff)?;
        for g in &self.factors {
            write!(f, " {g}")?;
        }
        Ok(())
    }
}

fn neg_one() -> LaurentPoly {
    LaurentPoly::constant(BigInt::from(-1))
}

fn k_pow(index: usize, p: i32) -> Vec<Generator> {
    let g = if p >= 0 { Generator::k(index) } else { Generator::k_inv(index) };
    vec![g; p.unsigned_abs() as usize]
}

pub fn antipode(g: Generator) -> UqMonomial {
    let i = g.index;
    match g.kind {
        GenKind::E => UqMonomial::new(neg_one(), [k_pow(i, -2), vec![g]].concat()),
        GenKind::F => UqMonomial::new(neg_one(), [vec![g], k_pow(i, 2)].concat()),
        GenKind::K => UqMonomial::gen(Generator::k_inv(i)),
        GenKind::Kinv => UqMonomial::gen(Generator::k(i)),
    }
}

pub fn antipode_inverse(g: Generator) -> UqMonomial {
    let i = g.index;
    match g.kind {
        GenKind::E => UqMonomial::new(neg_one(), [vec![g], k_pow(i, -2)].concat()),
        GenKind::F => UqMonomial::new(neg_one(), [k_pow(i, 2), vec![g]].concat()),
        GenKind::K => UqMonomial::gen(Generator::k_inv(i)),
        GenKind::Kinv => UqMonomial::gen(Generator::k(i)),
    }
}

pub fn omega(g: Generator) -> Generator {
    match g.kind {
        GenKind::E => Generator::f(g.index),
        GenKind::F => Generator::e(g.index),
        _ => g,
    }
}

/// `θ(E_i) = -K_i^-2 F_i`, `θ(F_i) = -E_i K_i^2`, `θ(K_i) = K_i^-1`.
pub fn theta(g: Generator) -> UqMonomial {
    UqMonomial::gen(g).antipode_inverse().omega()
}

/// An `n x n` matrix over `Z[q, q^-1]`.
pub type RepMatrix = Vec<Vec<LaurentPoly>>;

fn identity_matrix(n: usize) -> RepMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() }).collect()).collect()
}

pub fn mat_mul(a: &RepMatrix, b: &RepMatrix) -> RepMatrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).filter(|&l| !a[i][l].is_zero() && !b[l][j].is_zero()).map(|l| &a[i][l] * &b[l][j]).sum())
                .collect()
        })
        .collect()
}

pub fn mat_lin(a: &RepMatrix, ca: &LaurentPoly, b: &RepMatrix, cb: &LaurentPoly) -> RepMatrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| &(x * ca) + &(y * cb)).collect())
        .collect()
}

/// Exponent of the `K_k` eigenvalue on basis vector `t` (0-based) of the natural representation.
fn k_exponent(k: usize, t: usize) -> i32 {
    if t + 1 == k {
        1
    } else if t == k {
        -1
    } else {
        0
    }
}

/// `ρ(g)` on the natural representation.
pub fn natural_rep(n: usize, g: Generator) -> RepMatrix {
    let mut m = vec![vec![LaurentPoly::zero(); n]; n];
    let k = g.index;
    match g.kind {
        GenKind::E => m[k - 1][k] = LaurentPoly::one(),
        GenKind::F => m[k][k - 1] = LaurentPoly::one(),
        GenKind::K | GenKind::Kinv => {
            let sign = if g.kind == GenKind::K { 1 } else { -1 };
            for (t, row) in m.iter_mut().enumerate() {
                row[t] = LaurentPoly::q_pow(sign * k_exponent(k, t));
            }
        }
    }
    m
}

pub fn natural_rep_monomial(n: usize, u: &UqMonomial) -> RepMatrix {
    let mut m = identity_matrix(n);
    for &g in &u.factors {
        m = mat_mul(&m, &natural_rep(n, g));
    }
    m.into_iter().map(|row| row.into_iter().map(|x| &x * &u.coeff).collect()).collect()
}

/// Translation actions on `O_q(M(n))`.
pub struct Translations<'a> {
    alg: &'a QMatrixAlgebra,
}

impl<'a> Translations<'a> {
    pub fn new(alg: &'a QMatrixAlgebra) -> Self {
        Translations { alg }
    }

    pub fn n(&self) -> usize {
        self.alg.n()
    }

    /// Exponent `e` with `K_k^{sign}` acting on `x^A` by `q^e`.
    fn k_scalar(&self, side: Side, k: usize, letters: &[Letter]) -> i32 {
        letters
            .iter()
            .map(|l| match side {
                Side::R => k_exponent(k, l.col),
                Side::L => -k_exponent(k, l.row),
            })
            .sum()
    }

    /// The image of one generator `x_l` under a raising or lowering generator, if nonzero.
    fn on_letter(&self, side: Side, g: Generator, l: Letter) -> Option<(Letter, LaurentPoly)> {
        let k = g.index - 1;
        match (side, g.kind) {
            (Side::R, GenKind::E) => (l.col == k + 1).then(|| (Letter::new(l.row, k), LaurentPoly::one())),
            (Side::R, GenKind::F) => (l.col == k).then(|| (Letter::new(l.row, k + 1), LaurentPoly::one())),
            (Side::L, GenKind::E) => (l.row == k).then(|| (Letter::new(k + 1, l.col), -LaurentPoly::q_pow(-2))),
            (Side::L, GenKind::F) => (l.row == k + 1).then(|| (Letter::new(k, l.col), -LaurentPoly::q_pow(2))),
            _ => unreachable!("K acts diagonally"),
        }
    }

    /// `u · x^A` in the plain basis.
    pub fn act_monomial(&self, side: Side, g: Generator, a: &ExponentMatrix) -> Result<Element, Error> {
        let n = self.n();
        g.check(n)?;
        let letters: Vec<Letter> = a.letters().collect();
        let k = g.index;
        match g.kind {
            GenKind::K | GenKind::Kinv => {
                let sign = if g.kind == GenKind::K { 1 } else { -1 };
                let e = sign * self.k_scalar(side, k, &letters);
                return Ok(Element::term(a.clone(), LaurentPoly::q_pow(e), Basis::Plain));
            }
            _ => {}
        }
        // Derivation rule: R_E uses Δ(E) = E⊗1 + K^2⊗E, R_F uses Δ(F) = F⊗K^-2 + 1⊗F;
        // L uses the opposite coproduct.
        let mut out = Element::zero(n, Basis::Plain);
        for p in 0..letters.len() {
            let Some((image, c)) = self.on_letter(side, g, letters[p]) else { continue };
            let prefix = &letters[..p];
            let suffix = &letters[p + 1..];
            let twist = match (side, g.kind) {
                (Side::R, GenKind::E) => 2 * self.k_scalar(side, k, prefix),
                (Side::R, GenKind::F) => -2 * self.k_scalar(side, k, suffix),
                (Side::L, GenKind::E) => 2 * self.k_scalar(side, k, suffix),
                (Side::L, GenKind::F) => -2 * self.k_scalar(side, k, prefix),
                _ => unreachable!(),
            };
            let mut word = letters.clone();
            word[p] = image;
            let w = Word::with_scalar(n, word, c.shift(twist));
            out.add_scaled(&self.alg.word_product(&w), &LaurentPoly::one());
        }
        Ok(out)
    }

    /// `u · f` for a generator `u`, returned in the basis of `f`.
    pub fn act(&self, side: Side, g: Generator, f: &Element) -> Result<Element, Error> {
        let basis = f.basis();
        if basis == Basis::Canonical {
            return Err(Error::WrongBasis("canonical"));
        }
        if f.n() != self.n() {
            return Err(Error::SizeMismatch(self.n(), f.n()));
        }
        let plain = f.to_basis(Basis::Plain)?;
        let mut out = Element::zero(self.n(), Basis::Plain);
        for (m, c) in plain.iter() {
            out.add_scaled(&self.act_monomial(side, g, m)?, c);
        }
        out.to_basis(basis)
    }

    /// `u · f` for a product of generators, rightmost factor first.
    pub fn act_word(&self, side: Side, u: &UqMonomial, f: &Element) -> Result<Element, Error> {
        let mut cur = f.clone();
        for &g in u.factors.iter().rev() {
            cur = self.act(side, g, &cur)?;
        }
        Ok(cur.scale(&u.coeff))
    }

    /// Returns the weight if `f` is a simultaneous `K_i` eigenvector with eigenvalues `q^{m_i}`.
    pub fn weight_of(&self, f: &Element, side: Side) -> Result<WeightVector, Error> {
        if f.is_zero() {
            return Err(Error::NotAWeightVector);
        }
        let n = self.n();
        let mut sl = Vec::with_capacity(n.saturating_sub(1));
        for i in 1..n {
            let image = self.act(side, Generator::k(i), f)?;
            let (m, c) = f.iter().next().expect("nonzero");
            let ratio = image.coeff(m).div_exact(c).ok_or(Error::NotAWeightVector)?;
            let (e, unit) = ratio.as_monomial().ok_or(Error::NotAWeightVector)?;
            if !unit.is_one_value() || image != f.scale(&ratio) {
                return Err(Error::NotAWeightVector);
            }
            sl.push(i64::from(e));
        }
        let weights: Vec<WeightVector> = f.support().map(|m| monomial_weight(m, side)).collect();
        let gl = weights.iter().all(|w| w.gl == weights[0].gl).then(|| weights[0].gl.clone()).flatten();
        Ok(WeightVector { sl, gl })
    }
}

trait IsOneValue {
    fn is_one_value(&self) -> bool;
}

impl IsOneValue for BigInt {
    fn is_one_value(&self) -> bool {
        *self == BigInt::from(1)
    }
}

/// Outcome of one relation check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub holds: bool,
}

fn q2_minus_q_minus2() -> LaurentPoly {
    LaurentPoly::q_pow(2) - LaurentPoly::q_pow(-2)
}

fn cartan(i: usize, j: usize) -> i32 {
    if i == j {
        2
    } else if i.abs_diff(j) == 1 {
        -1
    } else {
        0
    }
}

/// A family of linear maps indexed by generator words, used to test the defining relations
/// in any representation.
fn relation_checks<T, A, S>(n: usize, act: A, sub: S, zero: &T) -> Result<Vec<RelationCheck>, Error>
where
    T: PartialEq + Clone,
    A: Fn(&UqMonomial) -> Result<T, Error>,
    S: Fn(&T, &T, &LaurentPoly) -> T,
{
    let one = LaurentPoly::one();
    let m = |gs: &[Generator]| UqMonomial::new(LaurentPoly::one(), gs.to_vec());
    let mut out = Vec::new();
    for i in 1..n {
        let (e, f, k, ki) = (Generator::e(i), Generator::f(i), Generator::k(i), Generator::k_inv(i));
        let kk = act(&m(&[k, ki]))?;
        let id = act(&UqMonomial::one())?;
        out.push(RelationCheck { name: format!("K{i} K{i}^-1 = 1"), holds: kk == id && act(&m(&[ki, k]))? == id });
        for j in 1..n {
            let (ej, fj, kj) = (Generator::e(j), Generator::f(j), Generator::k(j));
            out.push(RelationCheck { name: format!("K{i} K{j} = K{j} K{i}"), holds: act(&m(&[k, kj]))? == act(&m(&[kj, k]))? });
            let a = cartan(i, j);
            let lhs = act(&m(&[k, ej, ki]))?;
            let rhs = act(&UqMonomial::new(LaurentPoly::q_pow(a), vec![ej]))?;
            out.push(RelationCheck { name: format!("K{i} E{j} K{i}^-1 = q^{a} E{j}"), holds: lhs == rhs });
            let lhs = act(&m(&[k, fj, ki]))?;
            let rhs = act(&UqMonomial::new(LaurentPoly::q_pow(-a), vec![fj]))?;
            out.push(RelationCheck { name: format!("K{i} F{j} K{i}^-1 = q^{} F{j}", -a), holds: lhs == rhs });
            // (q^2 - q^-2)(E_i F_j - F_j E_i) = δ_ij (K_i^2 - K_i^-2)
            let comm = sub(&act(&UqMonomial::new(q2_minus_q_minus2(), vec![e, fj]))?, &act(&UqMonomial::new(q2_minus_q_minus2(), vec![fj, e]))?, &one);
            let expected = if i == j { sub(&act(&m(&[k, k]))?, &act(&m(&[ki, ki]))?, &one) } else { zero.clone() };
            out.push(RelationCheck { name: format!("[E{i}, F{j}]"), holds: comm == expected });
            if a == -1 {
                // X_i^2 X_j - [2]_{q^2} X_i X_j X_i + X_j X_i^2 = 0
                let two = LaurentPoly::q_pow(2) + LaurentPoly::q_pow(-2);
                for (x, y, name) in [(e, ej, "E"), (f, fj, "F")] {
                    let t1 = act(&m(&[x, x, y]))?;
                    let t2 = act(&UqMonomial::new(two.clone(), vec![x, y, x]))?;
                    let t3 = act(&m(&[y, x, x]))?;
                    let total = sub(&sub(&t1, &t2, &one), &t3, &LaurentPoly::constant(BigInt::from(-1)));
                    out.push(RelationCheck { name: format!("Serre {name}{i}{name}{j}"), holds: total == *zero });
                }
            } else if a == 0 {
                let holds = act(&m(&[e, ej]))? == act(&m(&[ej, e]))? && act(&m(&[f, fj]))? == act(&m(&[fj, f]))?;
                out.push(RelationCheck { name: format!("E{i}, E{j} and F{i}, F{j} commute"), holds });
            }
        }
    }
    Ok(out)
}

/// The defining relations, checked as exact matrix identities on the natural representation.
pub fn check_natural_rep(n: usize) -> Vec<RelationCheck> {
    check_representation(n, n, |g| natural_rep(n, g))
}

/// The defining relations of `U_q(sl_n)`, checked on square matrices of size `dim`
/// assigned to the generators.
pub fn check_representation(n: usize, dim: usize, rep: impl Fn(Generator) -> RepMatrix) -> Vec<RelationCheck> {
    let zero = vec![vec![LaurentPoly::zero(); dim]; dim];
    relation_checks(
        n,
        |u| {
            let mut m = identity_matrix(dim);
            for &g in &u.factors {
                m = mat_mul(&m, &rep(g));
            }
            Ok(m.into_iter().map(|row| row.into_iter().map(|x| &x * &u.coeff).collect()).collect())
        },
        |a, b, c| mat_lin(a, &LaurentPoly::one(), b, &-c),
        &zero,
    )
    .expect("matrix evaluation is infallible")
}

/// The defining relations, checked on one element through the given action.
pub fn check_action(alg: &QMatrixAlgebra, side: Side, f: &Element) -> Result<Vec<RelationCheck>, Error> {
    let tr = Translations::new(alg);
    let zero = Element::zero(f.n(), f.basis());
    relation_checks(
        alg.n(),
        |u| tr.act_word(side, u, f),
        |a, b, c| a.sub(&b.scale(c)).expect("same basis"),
        &zero,
    )
}
