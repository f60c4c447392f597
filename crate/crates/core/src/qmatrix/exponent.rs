use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::LaurentPoly;

/// A generator `x_ij` of the coordinate ring, with 0-based indices.
///
/// The derived order is the lexicographic order on index pairs, the order in
/// which factors of a normal monomial appear.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub row: usize,
    pub col: usize,
}

impl Letter {
    pub const fn new(row: usize, col: usize) -> Self {
        Letter { row, col }
    }

    pub fn transpose(self) -> Self {
        Letter { row: self.col, col: self.row }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{},{}]", self.row + 1, self.col + 1)
    }
}

/// An `n x n` matrix of nonnegative exponents indexing the monomial `x^A`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl ExponentMatrix {
    pub fn zero(n: usize) -> Self {
        ExponentMatrix { n, entries: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    pub fn unit(n: usize, l: Letter) -> Self {
        let mut m = Self::zero(n);
        m.entries[l.row * n + l.col] = 1;
        m
    }

    pub fn from_rows<R: AsRef<[u32]>>(rows: &[R]) -> Result<Self, Error> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidMatrix("empty matrix".into()));
        }
        let mut entries = Vec::with_capacity(n * n);
        for r in rows {
            let r = r.as_ref();
            if r.len() != n {
                return Err(Error::InvalidMatrix(format!("row of length {} in a {n}x{n} matrix", r.len())));
            }
            entries.extend_from_slice(r);
        }
        Ok(ExponentMatrix { n, entries })
    }

    /// Panicking shorthand for literals in tests and examples.
    pub fn rows<R: AsRef<[u32]>>(rows: &[R]) -> Self {
        Self::from_rows(rows).expect("square matrix")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.entries[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn add_letter(&self, l: Letter) -> Self {
        let mut m = self.clone();
        m.entries[l.row * self.n + l.col] += 1;
        m
    }

    /// Removes one copy of `l`; `None` if the exponent is already zero.
    pub fn remove_letter(&self, l: Letter) -> Option<Self> {
        let idx = l.row * self.n + l.col;
        if self.entries[idx] == 0 {
            return None;
        }
        let mut m = self.clone();
        m.entries[idx] -= 1;
        Some(m)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        ExponentMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    /// `self - other` if every entry stays nonnegative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        assert_eq!(self.n, other.n);
        let entries: Option<Vec<u32>> =
            self.entries.iter().zip(&other.entries).map(|(a, b)| a.checked_sub(*b)).collect();
        entries.map(|entries| ExponentMatrix { n: self.n, entries })
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut m = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                m.entries[j * n + i] = self.entries[i * n + j];
            }
        }
        m
    }

    pub fn degree(&self) -> u32 {
        self.entries.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&a| a == 0)
    }

    /// Row sums `ro(A)`.
    pub fn ro(&self) -> Vec<u32> {
        self.entries.chunks(self.n).map(|r| r.iter().sum()).collect()
    }

    /// Column sums `co(A)`.
    pub fn co(&self) -> Vec<u32> {
        (0..self.n).map(|j| (0..self.n).map(|i| self.get(i, j)).sum()).collect()
    }

    pub fn min_diagonal(&self) -> u32 {
        (0..self.n).map(|i| self.get(i, i)).min().unwrap_or(0)
    }

    /// `sum a_ij * i * j` with 1-based indices. Every 2x2 move lowers it by
    /// `(s-i)(t-j) > 0`, so it ranks blocks compatibly with the partial order.
    pub fn stat(&self) -> u64 {
        let mut s = 0u64;
        for i in 0..self.n {
            for j in 0..self.n {
                s += self.get(i, j) as u64 * (i as u64 + 1) * (j as u64 + 1);
            }
        }
        s
    }

    /// Number of same-row plus same-column pairs of factors:
    /// `sum_i sum_{j>k} a_ij a_ik + sum_i sum_{j>k} a_ji a_ki`.
    pub fn pair_count(&self) -> i32 {
        let n = self.n;
        let mut s = 0i64;
        for i in 0..n {
            for j in 0..n {
                for k in 0..j {
                    s += self.get(i, j) as i64 * self.get(i, k) as i64;
                    s += self.get(j, i) as i64 * self.get(k, i) as i64;
                }
            }
        }
        s as i32
    }

    /// `E(A) = q^(-2 * pair_count)`: the leading coefficient of `bar(x^A)`.
    pub fn stat_e(&self) -> LaurentPoly {
        LaurentPoly::q_pow(-2 * self.pair_count())
    }

    /// `D(A) = q^(-pair_count)`, so that `x(A) = D(A) x^A`.
    pub fn stat_d(&self) -> LaurentPoly {
        LaurentPoly::q_pow(-self.pair_count())
    }

    /// Factors of `x^A` in lexicographic order, with multiplicity.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        let n = self.n;
        self.entries
            .iter()
            .enumerate()
            .flat_map(move |(idx, &a)| std::iter::repeat_n(Letter::new(idx / n, idx % n), a as usize))
    }

    pub fn max_letter(&self) -> Option<Letter> {
        self.entries.iter().rposition(|&a| a > 0).map(|i| Letter::new(i / self.n, i % self.n))
    }

    pub fn min_letter(&self) -> Option<Letter> {
        self.entries.iter().position(|&a| a > 0).map(|i| Letter::new(i / self.n, i % self.n))
    }

    /// All matrices obtained by one 2x2 sub-matrix transformation: for
    /// `i < s`, `j < t` with `a_ij a_st >= 1`, decrement `(i,j),(s,t)` and
    /// increment `(i,t),(s,j)`.
    pub fn moves(&self) -> Vec<Self> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.get(i, j) == 0 {
                    continue;
                }
                for s in i + 1..n {
                    for t in j + 1..n {
                        if self.get(s, t) == 0 {
                            continue;
                        }
                        let mut m = self.clone();
                        m.entries[i * n + j] -= 1;
                        m.entries[s * n + t] -= 1;
                        m.entries[i * n + t] += 1;
                        m.entries[s * n + j] += 1;
                        out.push(m);
                    }
                }
            }
        }
        out
    }

    /// Every matrix strictly below `self` in the 2x2-move order.
    pub fn down_set(&self) -> HashSet<ExponentMatrix> {
        let mut seen = HashSet::new();
        let mut queue: VecDeque<ExponentMatrix> = self.moves().into();
        while let Some(m) = queue.pop_front() {
            if seen.insert(m.clone()) {
                queue.extend(m.moves());
            }
        }
        seen
    }
}

/// `b < a`: `b` is reachable from `a` by one or more 2x2 moves.
pub fn less_than(b: &ExponentMatrix, a: &ExponentMatrix) -> bool {
    if b.n != a.n || b.ro() != a.ro() || b.co() != a.co() || b.stat() >= a.stat() {
        return false;
    }
    a.down_set().contains(b)
}

/// All matrices with row sums `r` and column sums `c`, in decreasing `stat`
/// order (ties broken by decreasing entries). Empty when the sums disagree.
pub fn enumerate_block(r: &[u32], c: &[u32]) -> Vec<ExponentMatrix> {
    let n = r.len();
    if c.len() != n || n == 0 || r.iter().sum::<u32>() != c.iter().sum::<u32>() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current = ExponentMatrix::zero(n);
    let mut col_left = c.to_vec();
    fill(&mut out, &mut current, r, &mut col_left, 0, 0, r.first().copied().unwrap_or(0));
    out.sort_by(|a, b| b.stat().cmp(&a.stat()).then_with(|| b.entries.cmp(&a.entries)));
    out
}

fn fill(
    out: &mut Vec<ExponentMatrix>,
    m: &mut ExponentMatrix,
    r: &[u32],
    col_left: &mut [u32],
    i: usize,
    j: usize,
    row_left: u32,
) {
    let n = r.len();
    if i == n {
        if col_left.iter().all(|&x| x == 0) {
            out.push(m.clone());
        }
        return;
    }
    if j == n - 1 {
        // Last column takes what is left of the row.
        if row_left <= col_left[j] {
            m.set(i, j, row_left);
            col_left[j] -= row_left;
            let next = r.get(i + 1).copied().unwrap_or(0);
            fill(out, m, r, col_left, i + 1, 0, next);
            col_left[j] += row_left;
            m.set(i, j, 0);
        }
        return;
    }
    for v in 0..=row_left.min(col_left[j]) {
        m.set(i, j, v);
        col_left[j] -= v;
        fill(out, m, r, col_left, i, j + 1, row_left - v);
        col_left[j] += v;
    }
    m.set(i, j, 0);
}

/// All `n x n` exponent matrices of total degree exactly `d`.
pub fn matrices_of_degree(n: usize, d: u32) -> Vec<ExponentMatrix> {
    let mut out = Vec::new();
    let mut entries = vec![0u32; n * n];
    fn rec(out: &mut Vec<ExponentMatrix>, e: &mut Vec<u32>, n: usize, idx: usize, left: u32) {
        if idx == e.len() - 1 {
            e[idx] = left;
            out.push(ExponentMatrix { n, entries: e.clone() });
            e[idx] = 0;
            return;
        }
        for v in 0..=left {
            e[idx] = v;
            rec(out, e, n, idx + 1, left - v);
        }
        e[idx] = 0;
    }
    rec(&mut out, &mut entries, n, 0, d);
    out
}

/// All compositions of `total` into `n` nonnegative parts, in lexicographic order.
pub fn compositions(total: u32, n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>, idx: usize, left: u32) {
        if idx + 1 == cur.len() {
            cur[idx] = left;
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur[idx] = v;
            rec(out, cur, idx + 1, left - v);
        }
    }
    if n > 0 {
        rec(&mut out, &mut cur, 0, total);
    }
    out
}

impl fmt::Debug for ExponentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_rows())
    }
}

/// Renders the monomial `x^A` as `x[i,j]^a` factors in lexicographic order.
impl fmt::Display for ExponentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "1");
        }
        let mut first = true;
        for i in 0..self.n {
            for j in 0..self.n {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                if !first {
                    write!(f, " ")?;
                }
                first = false;
                write!(f, "{}", Letter::new(i, j))?;
                if a > 1 {
                    write!(f, "^{a}")?;
                }
            }
        }
        Ok(())
    }
}

// Row-major nested arrays.
impl Serialize for ExponentMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExponentMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<u32>>::deserialize(deserializer)?;
        ExponentMatrix::from_rows(&rows).map_err(serde::de::Error::custom)
    }
}
