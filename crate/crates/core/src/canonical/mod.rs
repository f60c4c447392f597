//! The dual canonical basis `B* = { b(A) }` of `O_q(M(n))`.
//!
//! Each `b(A)` is the unique bar-invariant element of the form
//! `x(A) + sum_{B<A} h_BA x(B)` with `h_BA` in `qZ[q]`. The set of matrices
//! with fixed row and column sums (a block) is closed under the partial
//! order, so the triangular system is solved one block at a time.

mod minors;
mod quotient;

use std::collections::{BTreeMap, HashMap};
use std::path::PathBuf;
use std::sync::Arc;

use dashmap::DashMap;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::qmatrix::{enumerate_block, Basis, Element, ExponentMatrix, QMatrixAlgebra};
use crate::LaurentPoly;

pub use minors::{permutations_with_length, MinorSpec};
pub use quotient::ShiftCheck;

/// `b(A) = sum_B h_BA x(B)`, with `h_AA = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalExpansion {
    pub top: ExponentMatrix,
    pub coeffs: BTreeMap<ExponentMatrix, LaurentPoly>,
}

impl CanonicalExpansion {
    /// The element in the modified monomial basis.
    pub fn to_element(&self) -> Element {
        Element::from_terms(self.top.n(), Basis::Modified, self.coeffs.iter().map(|(m, c)| (m.clone(), c.clone())))
            .expect("uniform size")
    }

    /// `h_AA = 1` and every other coefficient lies in `qZ[q]`.
    pub fn is_unitriangular(&self) -> bool {
        self.coeffs.iter().all(|(m, c)| if *m == self.top { c.is_one() } else { c.in_q_zq() })
            && self.coeffs.contains_key(&self.top)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockKey {
    pub ro: Vec<u32>,
    pub co: Vec<u32>,
}

impl BlockKey {
    pub fn of(m: &ExponentMatrix) -> Self {
        BlockKey { ro: m.ro(), co: m.co() }
    }
}

/// All `b(A)` for the matrices with given row and column sums.
#[derive(Clone, Debug)]
pub struct Block {
    pub key: BlockKey,
    /// Matrices in decreasing `stat` order.
    pub matrices: Vec<ExponentMatrix>,
    pub expansions: Vec<CanonicalExpansion>,
    index: HashMap<ExponentMatrix, usize>,
}

impl Block {
    fn new(key: BlockKey, matrices: Vec<ExponentMatrix>, expansions: Vec<CanonicalExpansion>) -> Self {
        let index = matrices.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Block { key, matrices, expansions, index }
    }

    pub fn position(&self, m: &ExponentMatrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn expansion(&self, m: &ExponentMatrix) -> Option<&CanonicalExpansion> {
        self.position(m).map(|i| &self.expansions[i])
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(BlockJson::from(self)).expect("serializable")
    }
}

#[derive(Serialize, Deserialize)]
struct BlockJson {
    ro: Vec<u32>,
    co: Vec<u32>,
    elements: Vec<ExpansionJson>,
}

#[derive(Serialize, Deserialize)]
struct ExpansionJson {
    top: ExponentMatrix,
    coeffs: Vec<CoeffJson>,
}

#[derive(Serialize, Deserialize)]
struct CoeffJson {
    matrix: ExponentMatrix,
    h: LaurentPoly,
}

impl From<&Block> for BlockJson {
    fn from(b: &Block) -> Self {
        BlockJson {
            ro: b.key.ro.clone(),
            co: b.key.co.clone(),
            elements: b
                .expansions
                .iter()
                .map(|e| {
                    // Coefficients listed in block order (decreasing stat).
                    let coeffs = b
                        .matrices
                        .iter()
                        .filter_map(|m| e.coeffs.get(m).map(|h| CoeffJson { matrix: m.clone(), h: h.clone() }))
                        .collect();
                    ExpansionJson { top: e.top.clone(), coeffs }
                })
                .collect(),
        }
    }
}

/// Computes and caches blocks of the dual canonical basis for one `n`.
pub struct CanonicalBasis {
    alg: QMatrixAlgebra,
    blocks: DashMap<BlockKey, Arc<Block>>,
    shifts: DashMap<ExponentMatrix, ShiftCheck>,
    max_block_size: Option<usize>,
    cache_dir: Option<PathBuf>,
}

impl CanonicalBasis {
    pub fn new(n: usize) -> Self {
        CanonicalBasis {
            alg: QMatrixAlgebra::new(n),
            blocks: DashMap::new(),
            shifts: DashMap::new(),
            max_block_size: None,
            cache_dir: None,
        }
    }

    /// Refuse blocks with more than `limit` matrices.
    pub fn with_max_block_size(mut self, limit: usize) -> Self {
        self.max_block_size = Some(limit);
        self
    }

    /// Persist computed blocks as JSON files under `dir`.
    pub fn with_cache_dir(mut self, dir: impl Into<PathBuf>) -> Self {
        self.cache_dir = Some(dir.into());
        self
    }

    pub fn n(&self) -> usize {
        self.alg.n()
    }

    pub fn algebra(&self) -> &QMatrixAlgebra {
        &self.alg
    }

    pub fn block(&self, ro: &[u32], co: &[u32]) -> Result<Arc<Block>, Error> {
        let key = BlockKey { ro: ro.to_vec(), co: co.to_vec() };
        if let Some(b) = self.blocks.get(&key) {
            return Ok(b.clone());
        }
        let block = match self.load_cached(&key) {
            Some(b) => b,
            None => {
                let b = self.compute_block(&key)?;
                self.store_cached(&b);
                b
            }
        };
        let block = Arc::new(block);
        self.blocks.insert(key, block.clone());
        Ok(block)
    }

    pub fn block_of(&self, m: &ExponentMatrix) -> Result<Arc<Block>, Error> {
        self.block(&m.ro(), &m.co())
    }

    fn compute_block(&self, key: &BlockKey) -> Result<Block, Error> {
        let n = self.n();
        if key.ro.len() != n || key.co.len() != n {
            return Err(Error::SizeMismatch(n, key.ro.len().max(key.co.len())));
        }
        let mats = enumerate_block(&key.ro, &key.co);
        if let Some(limit) = self.max_block_size {
            if mats.len() > limit {
                return Err(Error::BlockTooLarge { size: mats.len(), limit });
            }
        }
        let size = mats.len();
        let index: HashMap<&ExponentMatrix, usize> = mats.iter().enumerate().map(|(i, m)| (m, i)).collect();

        // bar(x(C)) = sum_B r[B][C] x(B)
        let mut r = vec![vec![LaurentPoly::zero(); size]; size];
        for (c, cm) in mats.iter().enumerate() {
            let pc = cm.pair_count();
            for (bm, p) in self.alg.bar_monomial(cm).iter() {
                let b = index[bm];
                r[b][c] = p.shift(pc + bm.pair_count());
            }
        }

        let inconsistent = || Error::BarMatrixInconsistent { ro: key.ro.clone(), co: key.co.clone() };
        let mut expansions = Vec::with_capacity(size);
        for a in 0..size {
            let mut h = vec![LaurentPoly::zero(); size];
            h[a] = LaurentPoly::one();
            let mut bar_h = h.clone();
            for b in a + 1..size {
                // h_BA - bar(h_BA) = sum_{B<C<=A} r_BC bar(h_CA)
                let mut rhs = LaurentPoly::zero();
                for c in a..b {
                    if !r[b][c].is_zero() && !bar_h[c].is_zero() {
                        rhs += &(&r[b][c] * &bar_h[c]);
                    }
                }
                if !r[b][b].is_one() {
                    return Err(inconsistent());
                }
                h[b] = rhs.solve_skew().map_err(|_| inconsistent())?;
                bar_h[b] = h[b].bar();
            }
            let coeffs = mats.iter().cloned().zip(h).filter(|(_, c)| !c.is_zero()).collect();
            expansions.push(CanonicalExpansion { top: mats[a].clone(), coeffs });
        }
        Ok(Block::new(key.clone(), mats, expansions))
    }

    fn cache_path(&self, key: &BlockKey) -> Option<PathBuf> {
        let dir = self.cache_dir.as_ref()?;
        let join = |v: &[u32]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("-");
        Some(dir.join(format!("n{}_ro{}_co{}.json", self.n(), join(&key.ro), join(&key.co))))
    }

    fn load_cached(&self, key: &BlockKey) -> Option<Block> {
        let path = self.cache_path(key)?;
        let text = std::fs::read_to_string(path).ok()?;
        let json: BlockJson = serde_json::from_str(&text).ok()?;
        if json.ro != key.ro || json.co != key.co {
            return None;
        }
        let expansions: Vec<CanonicalExpansion> = json
            .elements
            .into_iter()
            .map(|e| CanonicalExpansion {
                top: e.top,
                coeffs: e.coeffs.into_iter().map(|c| (c.matrix, c.h)).collect(),
            })
            .collect();
        let matrices: Vec<ExponentMatrix> = expansions.iter().map(|e| e.top.clone()).collect();
        (matrices == enumerate_block(&key.ro, &key.co)).then(|| Block::new(key.clone(), matrices, expansions))
    }

    fn store_cached(&self, block: &Block) {
        if let Some(path) = self.cache_path(&block.key) {
            if let Some(dir) = path.parent() {
                let _ = std::fs::create_dir_all(dir);
            }
            // Write to a temporary name first so concurrent readers never see a partial file.
            let tmp = path.with_extension(format!("tmp{}", std::process::id()));
            if std::fs::write(&tmp, block.to_json().to_string()).is_ok() {
                let _ = std::fs::rename(&tmp, &path);
            }
        }
    }

    /// `b(A)` as its expansion in modified monomials.
    pub fn canonical_element(&self, a: &ExponentMatrix) -> Result<CanonicalExpansion, Error> {
        let block = self.block_of(a)?;
        Ok(block.expansion(a).expect("matrix belongs to its block").clone())
    }

    /// `b(A)` in the modified basis.
    pub fn b(&self, a: &ExponentMatrix) -> Result<Element, Error> {
        Ok(self.canonical_element(a)?.to_element())
    }

    /// Coefficients `c_A` with `a = sum c_A b(A)`, by back-substitution
    /// along decreasing `stat` inside each block.
    pub fn expand_in_canonical(&self, a: &Element) -> Result<Element, Error> {
        if a.basis() == Basis::Canonical {
            return Ok(a.clone());
        }
        let modified = a.to_basis(Basis::Modified)?;
        let mut by_block: BTreeMap<BlockKey, BTreeMap<ExponentMatrix, LaurentPoly>> = BTreeMap::new();
        for (m, c) in modified.iter() {
            by_block.entry(BlockKey::of(m)).or_default().insert(m.clone(), c.clone());
        }
        let mut out = Element::zero(a.n(), Basis::Canonical);
        for (key, mut work) in by_block {
            let block = self.block(&key.ro, &key.co)?;
            for (i, m) in block.matrices.iter().enumerate() {
                let Some(c) = work.remove(m) else { continue };
                for (b, h) in &block.expansions[i].coeffs {
                    if b == m {
                        continue;
                    }
                    let slot = work.entry(b.clone()).or_default();
                    *slot -= &(&c * h);
                    if slot.is_zero() {
                        work.remove(b);
                    }
                }
                out.add_term(m.clone(), &c);
            }
            debug_assert!(work.is_empty());
        }
        Ok(out)
    }

    /// Converts a canonical-basis element back to modified monomials.
    pub fn to_modified(&self, a: &Element) -> Result<Element, Error> {
        match a.basis() {
            Basis::Canonical => {
                let mut out = Element::zero(a.n(), Basis::Modified);
                for (m, c) in a.iter() {
                    out.add_scaled(&self.b(m)?, c);
                }
                Ok(out)
            }
            _ => a.to_basis(Basis::Modified),
        }
    }

    /// Product of two elements in any bases, returned in the canonical basis.
    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element, Error> {
        let prod = self.alg.multiply(&self.to_modified(a)?, &self.to_modified(b)?)?;
        self.expand_in_canonical(&prod)
    }

    /// Structure constants of `b(A) b(B)` in the canonical basis.
    pub fn structure_constants(&self, a: &ExponentMatrix, b: &ExponentMatrix) -> Result<Element, Error> {
        self.multiply(&self.b(a)?, &self.b(b)?)
    }

    pub fn quantum_minor(&self, m: &MinorSpec) -> Result<Element, Error> {
        minors::quantum_minor(&self.alg, m)
    }

    pub fn quantum_determinant(&self) -> Element {
        minors::quantum_determinant(&self.alg)
    }
}
