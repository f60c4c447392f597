//! Invariant subalgebras `O_q(G)^S` under the left translation action, the
//! Borel-Weil realization of irreducible modules, and generators of quantum
//! homogeneous spaces.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use dashmap::DashMap;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::canonical::{CanonicalBasis, MinorSpec};
use crate::error::Error;
use crate::linalg::{rank, same_span, SpanComparison};
use crate::qmatrix::{compositions, enumerate_block, matrices_of_degree, Basis, Element, ExponentMatrix};
use crate::uq::{monomial_weight, GenKind, Generator, Side, Translations, WeightVector};
use crate::LaurentPoly;

/// A set of generators `S`; invariance is under the subalgebra they generate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CoidealSpec {
    pub n: usize,
    pub generators: Vec<Generator>,
}

impl CoidealSpec {
    pub fn new(n: usize, generators: impl IntoIterator<Item = Generator>) -> Result<Self, Error> {
        let set: BTreeSet<Generator> = generators.into_iter().map(|g| g.check(n)).collect::<Result<_, _>>()?;
        Ok(CoidealSpec { n, generators: set.into_iter().collect() })
    }

    pub fn empty(n: usize) -> Self {
        CoidealSpec { n, generators: Vec::new() }
    }

    /// `{F_i}`, generating `U_q(n_-)`.
    pub fn lowering(n: usize) -> Self {
        Self::new(n, (1..n).map(Generator::f)).expect("indices in range")
    }

    /// `{E_i, F_i : i ∈ Θ} ∪ {K_j^±1}`.
    pub fn levi(n: usize, theta: &[usize]) -> Result<Self, Error> {
        let ks = (1..n).flat_map(|j| [Generator::k(j), Generator::k_inv(j)]);
        let ef = theta.iter().flat_map(|&i| [Generator::e(i), Generator::f(i)]);
        Self::new(n, ks.chain(ef))
    }

    /// Parses `none`, `lowering`, `raising`, `all`, `theta:1,2` or a comma list such as `F1,K2inv`.
    pub fn parse(n: usize, s: &str) -> Result<Self, Error> {
        let s = s.trim();
        match s {
            "" | "none" => Ok(Self::empty(n)),
            "lowering" => Ok(Self::lowering(n)),
            "raising" => Self::new(n, (1..n).map(Generator::e)),
            "all" => Self::new(n, Generator::all(n)),
            _ => {
                if let Some(rest) = s.strip_prefix("theta:") {
                    let theta = parse_indices(rest)?;
                    return Self::levi(n, &theta);
                }
                let gens = s.split(',').map(|t| t.trim().parse()).collect::<Result<Vec<Generator>, _>>()?;
                Self::new(n, gens)
            }
        }
    }
}

impl fmt::Display for CoidealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

fn parse_indices(s: &str) -> Result<Vec<usize>, Error> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::InvalidGenerator(format!("index {t}"))))
        .collect()
}

type BlockWithFailures = (InvariantBlock, Vec<ExponentMatrix>);

/// Invariance tests for one `S`, memoized per canonical basis element.
pub struct Invariants<'a> {
    cb: &'a CanonicalBasis,
    spec: CoidealSpec,
    memo: DashMap<ExponentMatrix, bool>,
}

impl<'a> Invariants<'a> {
    pub fn new(cb: &'a CanonicalBasis, spec: CoidealSpec) -> Result<Self, Error> {
        if spec.n != cb.n() {
            return Err(Error::SizeMismatch(cb.n(), spec.n));
        }
        Ok(Invariants { cb, spec, memo: DashMap::new() })
    }

    pub fn spec(&self) -> &CoidealSpec {
        &self.spec
    }

    /// `L_x(f) = ε(x) f` for all `x ∈ S`.
    pub fn is_invariant(&self, f: &Element) -> Result<bool, Error> {
        let tr = Translations::new(self.cb.algebra());
        let f = self.cb.to_modified(f)?;
        for &g in &self.spec.generators {
            let image = tr.act(Side::L, g, &f)?;
            if image != f.scale(&g.counit()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `b(A)` is invariant.
    pub fn is_invariant_b(&self, a: &ExponentMatrix) -> Result<bool, Error> {
        if let Some(v) = self.memo.get(a) {
            return Ok(*v);
        }
        let v = self.is_invariant(&self.cb.b(a)?)?;
        self.memo.insert(a.clone(), v);
        Ok(v)
    }

    /// Invariant members of every block up to `truncation`. With `reduced`, only
    /// matrices with a zero diagonal entry (representatives in `O_q(SL(n))`).
    pub fn invariant_basis(&self, truncation: u32, reduced: bool) -> Result<InvariantReport, Error> {
        let n = self.cb.n();
        let mut keys = Vec::new();
        for d in 0..=truncation {
            for ro in compositions(d, n) {
                for co in compositions(d, n) {
                    keys.push((d, ro.clone(), co));
                }
            }
        }
        let tr = Translations::new(self.cb.algebra());
        let results: Vec<Result<Option<BlockWithFailures>, Error>> = keys
            .par_iter()
            .map(|(d, ro, co)| {
                let mut members = Vec::new();
                let mut weight_failures = Vec::new();
                for a in self.cb.block(ro, co)?.matrices.iter() {
                    if reduced && a.min_diagonal() > 0 {
                        continue;
                    }
                    if self.is_invariant_b(a)? {
                        let b = self.cb.b(a)?;
                        if tr.weight_of(&b, Side::L).is_err() || tr.weight_of(&b, Side::R).is_err() {
                            weight_failures.push(a.clone());
                        }
                        members.push(a.clone());
                    }
                }
                if members.is_empty() {
                    return Ok(None);
                }
                let weight = monomial_weight(&members[0], Side::L);
                Ok(Some((InvariantBlock { degree: *d, ro: ro.clone(), co: co.clone(), weight, members }, weight_failures)))
            })
            .collect();
        let mut blocks = Vec::new();
        let mut weight_failures = Vec::new();
        for r in results {
            if let Some((b, w)) = r? {
                blocks.push(b);
                weight_failures.extend(w);
            }
        }
        Ok(InvariantReport { spec: self.spec.clone(), truncation, reduced, blocks, weight_failures })
    }

    /// Number of invariant `b(A)` in one block, and the dimension of the common
    /// kernel of `L_x - ε(x)` on the block, by fraction-free elimination.
    pub fn kernel_cross_check(&self, ro: &[u32], co: &[u32]) -> Result<KernelCheck, Error> {
        let block = self.cb.block(ro, co)?;
        let tr = Translations::new(self.cb.algebra());
        let mut count = 0;
        for a in &block.matrices {
            if self.is_invariant_b(a)? {
                count += 1;
            }
        }
        // Row index: (generator, output monomial); column index: x(A) in the block.
        let cols = block.matrices.len();
        let mut rows: BTreeMap<(Generator, ExponentMatrix), Vec<LaurentPoly>> = BTreeMap::new();
        for (c, a) in block.matrices.iter().enumerate() {
            let x = Element::basis_vector(a.clone(), Basis::Modified);
            for &g in &self.spec.generators {
                let image = tr.act(Side::L, g, &x)?.sub(&x.scale(&g.counit()))?;
                for (m, v) in image.iter() {
                    rows.entry((g, m.clone())).or_insert_with(|| vec![LaurentPoly::zero(); cols])[c] = v.clone();
                }
            }
        }
        let matrix: Vec<Vec<LaurentPoly>> = rows.into_values().collect();
        let kernel = cols - rank(&matrix);
        Ok(KernelCheck { ro: ro.to_vec(), co: co.to_vec(), block_size: cols, invariant_count: count, kernel_dimension: kernel })
    }

    /// Positivity and closure of the `Z_+[q, q^-1]` span of the invariant basis
    /// under products and `R_{E_i}`, over pairs of total degree at most `truncation`.
    pub fn string_property_check(&self, truncation: u32, max_pairs: usize, seed: u64) -> Result<StringReport, Error> {
        let n = self.cb.n();
        let members: Vec<ExponentMatrix> = self
            .invariant_basis(truncation, false)?
            .blocks
            .into_iter()
            .flat_map(|b| b.members)
            .collect();
        let mut pairs: Vec<(usize, usize)> = (0..members.len())
            .flat_map(|i| (0..members.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| members[i].degree() + members[j].degree() <= truncation)
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        pairs.shuffle(&mut rng);
        pairs.truncate(max_pairs);
        pairs.sort_unstable();
        let mut report = StringReport { seed, pairs_checked: 0, raising_checked: 0, counterexamples: Vec::new() };
        for &(i, j) in &pairs {
            let prod = self.cb.structure_constants(&members[i], &members[j])?;
            report.pairs_checked += 1;
            let target = monomial_weight(&members[i], Side::L).gl.zip(monomial_weight(&members[j], Side::L).gl);
            for (c, coeff) in prod.iter() {
                let additive = target.as_ref().is_none_or(|(a, b)| {
                    monomial_weight(c, Side::L).gl.as_ref().is_some_and(|w| w.iter().zip(a.iter().zip(b)).all(|(w, (a, b))| *w == a + b))
                });
                if !coeff.is_nonnegative() || !self.is_invariant_b(c)? || !additive {
                    report.counterexamples.push(format!("b({:?}) b({:?}) at b({c:?}): {coeff}", members[i], members[j]));
                }
            }
        }
        let tr = Translations::new(self.cb.algebra());
        for a in &members {
            let b = self.cb.b(a)?;
            for i in 1..n {
                let image = self.cb.expand_in_canonical(&tr.act(Side::R, Generator::e(i), &b)?)?;
                report.raising_checked += 1;
                for (c, coeff) in image.iter() {
                    if !coeff.is_nonnegative() || !self.is_invariant_b(c)? {
                        report.counterexamples.push(format!("R_E{i} b({a:?}) at b({c:?}): {coeff}"));
                    }
                }
            }
        }
        Ok(report)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantBlock {
    pub degree: u32,
    pub ro: Vec<u32>,
    pub co: Vec<u32>,
    /// L-weight of the block.
    pub weight: WeightVector,
    pub members: Vec<ExponentMatrix>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub spec: CoidealSpec,
    pub truncation: u32,
    pub reduced: bool,
    pub blocks: Vec<InvariantBlock>,
    /// Invariant elements that are not weight vectors for both actions.
    pub weight_failures: Vec<ExponentMatrix>,
}

impl InvariantReport {
    pub fn members(&self) -> impl Iterator<Item = &ExponentMatrix> {
        self.blocks.iter().flat_map(|b| b.members.iter())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelCheck {
    pub ro: Vec<u32>,
    pub co: Vec<u32>,
    pub block_size: usize,
    pub invariant_count: usize,
    pub kernel_dimension: usize,
}

impl KernelCheck {
    pub fn agrees(&self) -> bool {
        self.invariant_count == self.kernel_dimension
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StringReport {
    pub seed: u64,
    pub pairs_checked: usize,
    pub raising_checked: usize,
    pub counterexamples: Vec<String>,
}

impl StringReport {
    pub fn passes(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Dimension of the irreducible `sl_n` module with highest weight `Σ l_s Λ_s`.
pub fn weyl_dimension(lambda: &WeightVector) -> u128 {
    let p = lambda.partition();
    let n = p.len();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..n {
        for j in i + 1..n {
            num *= (p[i] - p[j] + (j - i) as i64) as u128;
            den *= (j - i) as u128;
        }
    }
    num / den
}

/// The invariants of `U_q(n_-)` with L-weight `-λ`, as a module under `R`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BorelWeilModule {
    pub lambda: Vec<i64>,
    pub ro: Vec<u32>,
    pub basis: Vec<ExponentMatrix>,
    /// R-weights (`m_i` with `K_i` acting by `q^{m_i}`) of the basis elements.
    pub weights: Vec<Vec<i64>>,
    /// Matrices of `R_g` on the basis: entry `[row][col]` is the coefficient of
    /// `b(basis[row])` in `R_g b(basis[col])`.
    pub actions: Vec<(Generator, Vec<Vec<LaurentPoly>>)>,
    /// Basis elements killed by every `R_{E_i}`.
    pub highest_weight: Vec<ExponentMatrix>,
    /// Whether every `R_g` image stays in the span of the basis.
    pub closed: bool,
}

impl BorelWeilModule {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Weight multiplicities, keyed by weight.
    pub fn action(&self, g: Generator) -> Option<&Vec<Vec<LaurentPoly>>> {
        self.actions.iter().find(|(h, _)| *h == g).map(|(_, m)| m)
    }

    pub fn multiplicities(&self) -> BTreeMap<Vec<i64>, usize> {
        let mut out = BTreeMap::new();
        for w in &self.weights {
            *out.entry(w.clone()).or_insert(0) += 1;
        }
        out
    }
}

/// The Borel-Weil module of highest weight `λ = Σ l_s Λ_s`. Its basis is the set
/// of `b(A)` killed by all `L_{F_i}` with `ro(A)` the partition of `λ`.
pub fn borel_weil_module(cb: &CanonicalBasis, lambda: &[i64]) -> Result<BorelWeilModule, Error> {
    let n = cb.n();
    let w = WeightVector::from_fundamental(lambda);
    if lambda.len() + 1 != n || !w.is_dominant() {
        return Err(Error::NotDominant(lambda.to_vec()));
    }
    let ro: Vec<u32> = w.partition().iter().map(|&x| x as u32).collect();
    let degree: u32 = ro.iter().sum();
    let inv = Invariants::new(cb, CoidealSpec::lowering(n))?;
    let mut basis = Vec::new();
    for co in compositions(degree, n) {
        for a in enumerate_block(&ro, &co) {
            if inv.is_invariant_b(&a)? {
                basis.push(a);
            }
        }
    }
    basis.sort();
    let index: BTreeMap<&ExponentMatrix, usize> = basis.iter().enumerate().map(|(i, a)| (a, i)).collect();
    let tr = Translations::new(cb.algebra());
    let mut closed = true;
    let mut actions = Vec::new();
    let dim = basis.len();
    let mut highest: Vec<bool> = vec![true; dim];
    for i in 1..n {
        for g in [Generator::e(i), Generator::f(i), Generator::k(i), Generator::k_inv(i)] {
            let mut m = vec![vec![LaurentPoly::zero(); dim]; dim];
            for (c, a) in basis.iter().enumerate() {
                let image = cb.expand_in_canonical(&tr.act(Side::R, g, &cb.b(a)?)?)?;
                if g.kind == GenKind::E && !image.is_zero() {
                    highest[c] = false;
                }
                for (b, coeff) in image.iter() {
                    match index.get(b) {
                        Some(&r) => m[r][c] = coeff.clone(),
                        None => closed = false,
                    }
                }
            }
            actions.push((g, m));
        }
    }
    let weights = basis.iter().map(|a| monomial_weight(a, Side::R).sl).collect();
    let highest_weight = basis.iter().zip(&highest).filter(|(_, &h)| h).map(|(a, _)| a.clone()).collect();
    Ok(BorelWeilModule { lambda: lambda.to_vec(), ro, basis, weights, actions, highest_weight, closed })
}

/// `Δ_s = det_q({n-s+1, ..., n}, {1, ..., s})`.
pub fn delta_minor(n: usize, s: usize) -> Result<MinorSpec, Error> {
    if s == 0 || s > n {
        return Err(Error::InvalidMinor(format!("Δ_{s} for n = {n}")));
    }
    MinorSpec::new((n - s..n).collect(), (0..s).collect())
}

/// `Δ_1^{l_1} ... Δ_{n-1}^{l_{n-1}}`, straightened into the plain basis.
pub fn highest_weight_monomial(cb: &CanonicalBasis, lambda: &[i64]) -> Result<Element, Error> {
    let n = cb.n();
    if lambda.len() + 1 != n || lambda.iter().any(|&l| l < 0) {
        return Err(Error::NotDominant(lambda.to_vec()));
    }
    let alg = cb.algebra();
    let mut acc = alg.one();
    for (s, &l) in lambda.iter().enumerate() {
        let delta = cb.quantum_minor(&delta_minor(n, s + 1)?)?;
        for _ in 0..l {
            acc = alg.multiply(&acc, &delta)?;
        }
    }
    Ok(acc)
}

/// Properties of a highest-weight monomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HighestWeightCheck {
    pub killed_by_left_e: bool,
    pub killed_by_right_e: bool,
    /// The index and coefficient when the element is a single canonical term.
    pub canonical_term: Option<(ExponentMatrix, LaurentPoly)>,
}

impl HighestWeightCheck {
    pub fn passes(&self) -> bool {
        self.killed_by_left_e && self.killed_by_right_e && self.canonical_term.as_ref().is_some_and(|(_, c)| c.is_one())
    }
}

pub fn check_highest_weight_monomial(cb: &CanonicalBasis, lambda: &[i64]) -> Result<HighestWeightCheck, Error> {
    let f = highest_weight_monomial(cb, lambda)?;
    let tr = Translations::new(cb.algebra());
    let n = cb.n();
    let mut left = true;
    let mut right = true;
    for i in 1..n {
        left &= tr.act(Side::L, Generator::e(i), &f)?.is_zero();
        right &= tr.act(Side::R, Generator::e(i), &f)?.is_zero();
    }
    let canon = cb.expand_in_canonical(&f)?;
    let canonical_term = match canon.iter().collect::<Vec<_>>().as_slice() {
        [(m, c)] => Some(((*m).clone(), (*c).clone())),
        _ => None,
    };
    Ok(HighestWeightCheck { killed_by_left_e: left, killed_by_right_e: right, canonical_term })
}

/// Row blocks `I_s` determined by `Θ`: rows `i` and `i+1` (1-based) share a block iff `i ∈ Θ`.
pub fn row_blocks(n: usize, theta: &[usize]) -> Result<Vec<Vec<usize>>, Error> {
    if let Some(&bad) = theta.iter().find(|&&i| i == 0 || i >= n) {
        return Err(Error::InvalidGenerator(format!("Θ contains {bad} for n = {n}")));
    }
    let mut blocks = vec![vec![0]];
    for r in 1..n {
        if theta.contains(&r) {
            blocks.last_mut().expect("nonempty").push(r);
        } else {
            blocks.push(vec![r]);
        }
    }
    Ok(blocks)
}

/// All minors `det_q(I_s, J)` with `|J| = |I_s|`.
pub fn homogeneous_generators(n: usize, theta: &[usize]) -> Result<Vec<MinorSpec>, Error> {
    let mut out = Vec::new();
    for rows in row_blocks(n, theta)? {
        for cols in subsets(n, rows.len()) {
            out.push(MinorSpec::new(rows.clone(), cols)?);
        }
    }
    Ok(out)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Span comparison in one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenerationDegree {
    pub degree: u32,
    pub invariant_count: usize,
    pub invariant_products: usize,
    pub spans: SpanComparison,
}

/// Compares, in each degree, the span of the invariant `b(A)` with the span of
/// the invariant products of the homogeneous-space minors.
pub fn generation_check(cb: &CanonicalBasis, theta: &[usize], truncation: u32) -> Result<Vec<GenerationDegree>, Error> {
    let n = cb.n();
    let spec = CoidealSpec::levi(n, theta)?;
    let inv = Invariants::new(cb, spec)?;
    let gens: Vec<(u32, Element)> = homogeneous_generators(n, theta)?
        .iter()
        .map(|m| Ok((m.size() as u32, cb.quantum_minor(m)?.to_basis(Basis::Modified)?)))
        .collect::<Result<_, Error>>()?;
    let alg = cb.algebra();
    // products[d] holds every ordered product of generators of total degree d.
    let mut products: Vec<Vec<Element>> = vec![Vec::new(); truncation as usize + 1];
    products[0].push(Element::one(n, Basis::Modified));
    for d in 1..=truncation as usize {
        let mut level = Vec::new();
        for (gd, g) in &gens {
            let gd = *gd as usize;
            if gd > d {
                continue;
            }
            for p in &products[d - gd] {
                level.push(alg.multiply(p, g)?);
            }
        }
        products[d] = level;
    }
    let mut out = Vec::new();
    for d in 0..=truncation {
        let invariants: Vec<ExponentMatrix> = matrices_of_degree(n, d)
            .into_iter()
            .filter_map(|a| match inv.is_invariant_b(&a) {
                Ok(true) => Some(Ok(a)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            })
            .collect::<Result<_, _>>()?;
        let mut prods = Vec::new();
        for p in &products[d as usize] {
            if inv.is_invariant(p)? {
                prods.push(p.clone());
            }
        }
        let inv_elems: Vec<Element> = invariants.iter().map(|a| cb.b(a)).collect::<Result<_, _>>()?;
        let columns: BTreeSet<ExponentMatrix> =
            inv_elems.iter().chain(&prods).flat_map(|e| e.support().cloned()).collect();
        let to_row = |e: &Element| columns.iter().map(|m| e.coeff(m)).collect::<Vec<_>>();
        let a: Vec<Vec<LaurentPoly>> = inv_elems.iter().map(to_row).collect();
        let b: Vec<Vec<LaurentPoly>> = prods.iter().map(to_row).collect();
        out.push(GenerationDegree { degree: d, invariant_count: invariants.len(), invariant_products: prods.len(), spans: same_span(&a, &b) });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_parsing() {
        assert_eq!(CoidealSpec::parse(3, "none").unwrap().generators.len(), 0);
        assert_eq!(CoidealSpec::parse(3, "lowering").unwrap().generators, vec![Generator::f(1), Generator::f(2)]);
        assert_eq!(CoidealSpec::parse(3, "theta:1").unwrap().generators.len(), 6);
        assert_eq!(CoidealSpec::parse(3, "F1, K2inv").unwrap().generators.len(), 2);
        assert!(CoidealSpec::parse(3, "E3").is_err());
        assert!(CoidealSpec::parse(3, "theta:3").is_err());
        assert_eq!(CoidealSpec::lowering(3).to_string(), "{F1,F2}");
    }

    #[test]
    fn row_block_examples() {
        assert_eq!(row_blocks(3, &[]).unwrap(), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(row_blocks(3, &[1]).unwrap(), vec![vec![0, 1], vec![2]]);
        assert_eq!(row_blocks(3, &[1, 2]).unwrap(), vec![vec![0, 1, 2]]);
        assert_eq!(homogeneous_generators(3, &[]).unwrap().len(), 9);
        let g = homogeneous_generators(3, &[1]).unwrap();
        assert_eq!(g.len(), 6);
        assert_eq!(g.iter().filter(|m| m.size() == 2).count(), 3);
        assert_eq!(homogeneous_generators(3, &[1, 2]).unwrap(), vec![MinorSpec::full(3)]);
    }

    #[test]
    fn weyl_dimension_examples() {
        let d = |l: &[i64]| weyl_dimension(&WeightVector::from_fundamental(l));
        assert_eq!(d(&[1]), 2);
        assert_eq!(d(&[1, 0]), 3);
        assert_eq!(d(&[0, 1]), 3);
        assert_eq!(d(&[2, 0]), 6);
        assert_eq!(d(&[1, 1]), 8);
        assert_eq!(d(&[0, 0]), 1);
    }

    #[test]
    fn natural_module() {
        let cb = CanonicalBasis::new(2);
        let m = borel_weil_module(&cb, &[1]).unwrap();
        assert_eq!(m.basis, vec![ExponentMatrix::rows(&[[0, 1], [0, 0]]), ExponentMatrix::rows(&[[1, 0], [0, 0]])]);
        assert_eq!(m.highest_weight, vec![ExponentMatrix::rows(&[[1, 0], [0, 0]])]);
        assert!(m.closed);
        assert!(borel_weil_module(&cb, &[-1]).is_err());
        assert!(borel_weil_module(&cb, &[1, 0]).is_err());
    }

    #[test]
    fn highest_weight_monomial_examples() {
        let cb = CanonicalBasis::new(2);
        assert_eq!(highest_weight_monomial(&cb, &[1]).unwrap(), cb.algebra().generator(1, 0));
        assert_eq!(highest_weight_monomial(&cb, &[0]).unwrap(), cb.algebra().one());
        let cb = CanonicalBasis::new(3);
        let f = highest_weight_monomial(&cb, &[1, 1]).unwrap();
        let alg = cb.algebra();
        let d2 = cb.quantum_minor(&MinorSpec::one_based(&[2, 3], &[1, 2]).unwrap()).unwrap();
        assert_eq!(f, alg.multiply(&alg.generator(2, 0), &d2).unwrap());
        assert!(check_highest_weight_monomial(&cb, &[1, 1]).unwrap().passes());
    }

    #[test]
    fn empty_spec_keeps_everything() {
        let cb = CanonicalBasis::new(2);
        let inv = Invariants::new(&cb, CoidealSpec::empty(2)).unwrap();
        let report = inv.invariant_basis(2, false).unwrap();
        let total: usize = (0..=2).map(|d| matrices_of_degree(2, d).len()).sum();
        assert_eq!(report.members().count(), total);
    }
}
