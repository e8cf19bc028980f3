//! Compositions, partitions, permutations and margin matrices.
//!
//! These are the index sets of every basis in the crate. All orders are
//! graded first (by weight or degree) and lexicographic second, so sorted
//! output is stable and diffable.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lincomb::{Coeff, Graded};

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

// ---------------------------------------------------------------------------
// Compositions

/// An ordered sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Composition {
    parts: Vec<usize>,
    weight: usize,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart(parts));
        }
        let weight = parts.iter().sum();
        Ok(Composition { parts, weight })
    }

    /// Builds a composition from a weak composition, dropping zero parts.
    pub fn from_weak(parts: &[usize]) -> Self {
        let parts: Vec<usize> = parts.iter().copied().filter(|&a| a > 0).collect();
        let weight = parts.iter().sum();
        Composition { parts, weight }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The composition `(1, 1, ..., 1)` of `n`.
    pub fn ones(n: usize) -> Self {
        Composition {
            parts: vec![1; n],
            weight: n,
        }
    }

    /// The one-part composition `(n)`, or the empty composition when `n = 0`.
    pub fn single(n: usize) -> Self {
        Self::from_weak(&[n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Composition {
            parts,
            weight: self.weight + other.weight,
        }
    }

    /// The partition obtained by reordering the parts.
    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.parts.clone())
    }

    /// The subset `{a_1, a_1 + a_2, ...}` of `[n - 1]`.
    pub fn to_subset(&self) -> BTreeSet<usize> {
        let mut acc = 0;
        let mut out = BTreeSet::new();
        if let Some((_, init)) = self.parts.split_last() {
            for &a in init {
                acc += a;
                out.insert(acc);
            }
        }
        out
    }

    /// Inverse of [`Composition::to_subset`] for a fixed weight `n`.
    pub fn from_subset(n: usize, subset: &BTreeSet<usize>) -> Result<Self> {
        if n == 0 {
            return if subset.is_empty() {
                Ok(Self::empty())
            } else {
                Err(Error::EmptyDomain {
                    n: *subset.iter().next().unwrap(),
                    lo: 1,
                    hi: 0,
                })
            };
        }
        let mut parts = Vec::with_capacity(subset.len() + 1);
        let mut prev = 0;
        for &s in subset {
            if s <= prev || s >= n {
                return Err(Error::EmptyDomain { n: s, lo: 1, hi: n - 1 });
            }
            parts.push(s - prev);
            prev = s;
        }
        parts.push(n - prev);
        Composition::new(parts)
    }

    /// All compositions of `n` in canonical (lexicographic) order.
    pub fn all_of(n: usize) -> Vec<Composition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition::from_weak(cur));
                return;
            }
            for a in 1..=rest {
                cur.push(a);
                rec(rest - a, cur, out);
                cur.pop();
            }
        }
        rec(n, &mut cur, &mut out);
        out
    }

    pub fn all_up_to(n: usize) -> Vec<Composition> {
        (0..=n).flat_map(Composition::all_of).collect()
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight
            .cmp(&other.weight)
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Graded for Composition {
    fn degree(&self) -> usize {
        self.weight
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

// ---------------------------------------------------------------------------
// Partitions

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
    weight: usize,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        let weight = parts.iter().sum();
        Ok(Partition { parts, weight })
    }

    /// Sorts the parts decreasingly, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&a| a > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let weight = parts.iter().sum();
        Partition { parts, weight }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn ones(n: usize) -> Self {
        Partition {
            parts: vec![1; n],
            weight: n,
        }
    }

    pub fn single(n: usize) -> Self {
        Self::from_unsorted(vec![n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The partition `λμ`: concatenation followed by reordering.
    pub fn concat(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    pub fn as_composition(&self) -> Composition {
        Composition {
            parts: self.parts.clone(),
            weight: self.weight,
        }
    }

    /// Pairs `(r, m_r)` of distinct parts with their multiplicities, largest first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((r, m)) if *r == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// All partitions of `n`, in canonical order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition::from_unsorted(cur.clone()));
                return;
            }
            for a in 1..=rest.min(max) {
                cur.push(a);
                rec(rest - a, a, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of).collect()
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight
            .cmp(&other.weight)
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Graded for Partition {
    fn degree(&self) -> usize {
        self.weight
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

/// `z(γ) = ∏ r^{m_r} m_r!`, the centralizer order of a permutation of cycle type γ.
pub fn z_factor(g: &Partition) -> BigInt {
    g.multiplicities()
        .into_iter()
        .fold(BigInt::one(), |acc, (r, m)| {
            acc * num_traits::pow(BigInt::from(r), m) * factorial(m)
        })
}

pub fn concat_partitions(l: &Partition, m: &Partition) -> Partition {
    l.concat(m)
}

// ---------------------------------------------------------------------------
// Permutations

/// A bijection of `[n]` in one-line notation, values `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n + 1];
        for &v in &image {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotAPermutation(image));
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    pub(crate) fn from_vec_unchecked(image: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(image.clone()).is_ok());
        Permutation { image }
    }

    /// Parses a word such as `52413`; only valid for degree at most 9.
    pub fn from_word(word: &str) -> Result<Self> {
        let digits: Option<Vec<usize>> = word
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize))
            .collect();
        match digits {
            Some(d) => Permutation::new(d),
            None => Err(Error::NotAPermutation(Vec::new())),
        }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (1..=n).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `σ(i)` for `1 ≤ i ≤ n`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`. Degrees must agree.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "composing across degrees");
        Permutation {
            image: other.image.iter().map(|&i| self.image[i - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { image: inv }
    }

    /// The parabolic embedding `σ × τ ∈ S_{p+q}`.
    pub fn times(&self, other: &Permutation) -> Permutation {
        let p = self.degree();
        let mut image = self.image.clone();
        image.extend(other.image.iter().map(|&v| v + p));
        Permutation { image }
    }

    pub fn descent_set(&self) -> BTreeSet<usize> {
        (1..self.degree())
            .filter(|&i| self.image[i - 1] > self.image[i])
            .collect()
    }

    pub fn descent_composition(&self) -> Composition {
        Composition::from_subset(self.degree(), &self.descent_set())
            .expect("descent sets lie in [n-1]")
    }

    /// All permutations of `[n]` in lexicographic order.
    pub fn all_of(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n + 1];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation { image: cur.clone() });
                return;
            }
            for v in 1..=n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }

    /// Cycle type as a partition.
    pub fn cycle_type(&self) -> Partition {
        let n = self.degree();
        let mut seen = vec![false; n + 1];
        let mut lens = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.apply(i);
                len += 1;
            }
            lens.push(len);
        }
        Partition::from_unsorted(lens)
    }
}

/// Replaces each entry by its rank among the entries.
pub fn standardize(values: &[usize]) -> Permutation {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by_key(|&i| values[i]);
    let mut image = vec![0; values.len()];
    for (rank, &i) in idx.iter().enumerate() {
        image[i] = rank + 1;
    }
    Permutation { image }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.image.cmp(&other.image))
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Graded for Permutation {
    fn degree(&self) -> usize {
        self.image.len()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.image.is_empty() {
            return write!(f, "()");
        }
        if self.degree() <= 9 {
            for v in &self.image {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write_parts(f, &self.image)
        }
    }
}

pub fn parabolic_embed(s: &Permutation, t: &Permutation) -> Permutation {
    s.times(t)
}

/// The `(p, q)`-shuffles, in lexicographic order of their one-line form.
pub fn shuffles(p: usize, q: usize) -> Vec<Permutation> {
    let n = p + q;
    let mut out = Vec::new();
    // choose the image set of [1, p]
    let mut chosen = Vec::with_capacity(p);
    fn rec(
        start: usize,
        n: usize,
        p: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Permutation>,
    ) {
        if chosen.len() == p {
            let mut image = chosen.clone();
            image.extend((1..=n).filter(|v| !chosen.contains(v)));
            out.push(Permutation { image });
            return;
        }
        let remaining = p - chosen.len();
        for v in start..=n + 1 - remaining {
            chosen.push(v);
            rec(v + 1, n, p, chosen, out);
            chosen.pop();
        }
    }
    rec(1, n, p, &mut chosen, &mut out);
    out.sort();
    out
}

/// The longest `(p, q)`-shuffle: `i ↦ q + i` on `[1, p]`, `p + j ↦ j`.
pub fn beta_max_shuffle(p: usize, q: usize) -> Permutation {
    let image = (1..=p).map(|i| q + i).chain(1..=q).collect();
    Permutation { image }
}

pub fn descent_set(s: &Permutation) -> BTreeSet<usize> {
    s.descent_set()
}

pub fn descent_composition(s: &Permutation) -> Composition {
    s.descent_composition()
}

// ---------------------------------------------------------------------------
// Margin matrices

/// A non-negative integer matrix with zero top-left corner.
///
/// Rows are indexed by `0..=s` (row 0 sums to `n - q`, row `i` to `b_i`),
/// columns by `0..=r` (column 0 sums to `n - p`, column `j` to `a_j`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarginMatrix {
    rows: Vec<Vec<usize>>,
}

impl MarginMatrix {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let width = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || width == 0 || rows.iter().any(|r| r.len() != width) {
            return Err(Error::SizeGuard("margin matrix must be a non-empty grid".into()));
        }
        if rows[0][0] != 0 {
            return Err(Error::SizeGuard("margin matrix corner must be zero".into()));
        }
        Ok(MarginMatrix { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.rows[i][j]
    }

    pub fn row_sums(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        let width = self.rows[0].len();
        (0..width)
            .map(|j| self.rows.iter().map(|r| r[j]).sum())
            .collect()
    }

    /// Sum of all entries, the degree `n` this matrix contributes to.
    pub fn total(&self) -> usize {
        self.rows.iter().flatten().sum()
    }

    pub fn transpose(&self) -> MarginMatrix {
        let width = self.rows[0].len();
        MarginMatrix {
            rows: (0..width)
                .map(|j| self.rows.iter().map(|r| r[j]).collect())
                .collect(),
        }
    }

    /// Non-zero entries read left to right, top to bottom.
    pub fn composition(&self) -> Composition {
        Composition::from_weak(&self.rows.concat())
    }

    /// Non-zero entries sorted decreasingly.
    pub fn partition(&self) -> Partition {
        Partition::from_unsorted(self.rows.concat())
    }
}

impl fmt::Debug for MarginMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write_parts(f, r)?;
        }
        write!(f, "]")
    }
}

pub fn matrix_composition(m: &MarginMatrix) -> Composition {
    m.composition()
}

pub fn matrix_partition(m: &MarginMatrix) -> Partition {
    m.partition()
}

/// All non-negative matrices with the given row and column sums and zero
/// top-left corner, in row-major lexicographic order.
pub fn matrices_with_margins(row_sums: &[usize], col_sums: &[usize]) -> Vec<MarginMatrix> {
    let rows = row_sums.len();
    let cols = col_sums.len();
    let mut out = Vec::new();
    if row_sums.iter().sum::<usize>() != col_sums.iter().sum::<usize>() {
        return out;
    }
    let mut grid = vec![vec![0; cols]; rows];
    let mut row_left = row_sums.to_vec();
    let mut col_left = col_sums.to_vec();

    fn rec(
        cell: usize,
        cols: usize,
        grid: &mut Vec<Vec<usize>>,
        row_left: &mut [usize],
        col_left: &mut [usize],
        out: &mut Vec<MarginMatrix>,
    ) {
        let rows = grid.len();
        if cell == rows * cols {
            out.push(MarginMatrix { rows: grid.clone() });
            return;
        }
        let (i, j) = (cell / cols, cell % cols);
        let cap = row_left[i].min(col_left[j]);
        // the last cell of a row or column is forced by its margin
        let (lo, hi) = if i == 0 && j == 0 {
            (0, 0)
        } else if j == cols - 1 {
            (row_left[i], row_left[i])
        } else if i == rows - 1 {
            (col_left[j], col_left[j])
        } else {
            (0, cap)
        };
        if hi > cap {
            return;
        }
        for v in lo..=hi {
            grid[i][j] = v;
            row_left[i] -= v;
            col_left[j] -= v;
            let row_ok = j != cols - 1 || row_left[i] == 0;
            let col_ok = i != rows - 1 || col_left[j] == 0;
            if row_ok && col_ok {
                rec(cell + 1, cols, grid, row_left, col_left, out);
            }
            row_left[i] += v;
            col_left[j] += v;
        }
        grid[i][j] = 0;
    }
    rec(0, cols, &mut grid, &mut row_left, &mut col_left, &mut out);
    out
}

/// The set `M^n_{α,β}`: column sums `(n - p, a_1, ..., a_r)`, row sums
/// `(n - q, b_1, ..., b_s)`, corner zero.
pub fn enumerate_margin_matrices(
    alpha: &Composition,
    beta: &Composition,
    n: usize,
) -> Result<Vec<MarginMatrix>> {
    let (p, q) = (alpha.weight(), beta.weight());
    if n < p.max(q) || n > p + q {
        return Err(Error::EmptyDomain {
            n,
            lo: p.max(q),
            hi: p + q,
        });
    }
    let mut cols = vec![n - p];
    cols.extend_from_slice(alpha.parts());
    let mut rows = vec![n - q];
    rows.extend_from_slice(beta.parts());
    Ok(matrices_with_margins(&rows, &cols))
}

// ---------------------------------------------------------------------------
// Exponential generating functions

/// Coefficients `c_0..=c_N` of the EGF of a Heisenberg product of species
/// whose EGF coefficients are `a` and `b`.
pub fn egf_heisenberg(a: &[Coeff], b: &[Coeff], n_max: usize) -> Vec<Coeff> {
    let get = |s: &[Coeff], i: usize| s.get(i).cloned().unwrap_or_else(Coeff::zero);
    (0..=n_max)
        .map(|n| {
            let mut c = Coeff::zero();
            for i in 0..=n {
                for j in (n - i)..=n {
                    let multinom =
                        factorial(n) / (factorial(n - i) * factorial(n - j) * factorial(i + j - n));
                    c += Coeff::from_integer(multinom) * get(a, i) * get(b, j);
                }
            }
            c
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::int;

    fn comp(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    fn perm(w: &str) -> Permutation {
        Permutation::from_word(w).unwrap()
    }

    /// Exhaustive grid search, no pruning: the oracle for the backtracker.
    fn brute_force_matrices(alpha: &Composition, beta: &Composition, n: usize) -> Vec<MarginMatrix> {
        let mut cols = vec![n - alpha.weight()];
        cols.extend_from_slice(alpha.parts());
        let mut rows = vec![n - beta.weight()];
        rows.extend_from_slice(beta.parts());
        let (h, w) = (rows.len(), cols.len());
        let cells = h * w;
        // each cell ranges over [0, min(row margin, column margin)]
        let caps: Vec<usize> = (0..cells).map(|k| rows[k / w].min(cols[k % w])).collect();
        let mut out = Vec::new();
        let mut vals = vec![0usize; cells];
        loop {
            let grid: Vec<Vec<usize>> = vals.chunks(w).map(|c| c.to_vec()).collect();
            let m = MarginMatrix { rows: grid };
            if vals[0] == 0 && m.row_sums() == rows && m.col_sums() == cols {
                out.push(m);
            }
            let mut k = cells;
            loop {
                if k == 0 {
                    out.sort();
                    return out;
                }
                k -= 1;
                if vals[k] < caps[k] {
                    vals[k] += 1;
                    break;
                }
                vals[k] = 0;
            }
        }
    }

    #[test]
    fn margin_matrix_examples() {
        let a = comp(&[2, 1]);
        let b = comp(&[3]);
        let m3 = enumerate_margin_matrices(&a, &b, 3).unwrap();
        assert_eq!(m3.len(), 1);
        assert_eq!(m3[0].rows(), &[vec![0, 0, 0], vec![0, 2, 1]]);
        let m6 = enumerate_margin_matrices(&a, &b, 6).unwrap();
        assert_eq!(m6.len(), 1);
        assert_eq!(m6[0].rows(), &[vec![0, 2, 1], vec![3, 0, 0]]);
        let counts: Vec<usize> = (3..=6)
            .map(|n| enumerate_margin_matrices(&a, &b, n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 2, 1]);
    }

    #[test]
    fn margin_matrices_out_of_range() {
        let a = comp(&[2, 1]);
        let b = comp(&[3]);
        assert!(matches!(
            enumerate_margin_matrices(&a, &b, 2),
            Err(Error::EmptyDomain { .. })
        ));
        assert!(enumerate_margin_matrices(&a, &b, 7).is_err());
    }

    #[test]
    fn backtracking_matches_brute_force() {
        for p in 0..=3 {
            for q in 0..=3 {
                for a in Composition::all_of(p) {
                    for b in Composition::all_of(q) {
                        for n in p.max(q)..=p + q {
                            let fast = enumerate_margin_matrices(&a, &b, n).unwrap();
                            let mut sorted = fast.clone();
                            sorted.sort();
                            assert_eq!(fast, sorted, "row-major order for {a} {b} {n}");
                            assert_eq!(fast, brute_force_matrices(&a, &b, n));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn matrix_readoffs() {
        let m = MarginMatrix::from_rows(vec![vec![0, 2, 1], vec![3, 0, 0]]).unwrap();
        assert_eq!(m.composition(), comp(&[2, 1, 3]));
        assert_eq!(m.partition(), Partition::new(vec![3, 2, 1]).unwrap());
        let z = MarginMatrix::from_rows(vec![vec![0]]).unwrap();
        assert!(z.composition().is_empty());
        assert!(z.partition().is_empty());
        let m = MarginMatrix::from_rows(vec![vec![0, 1], vec![1, 2]]).unwrap();
        assert_eq!(m.composition(), comp(&[1, 1, 2]));
        let m = MarginMatrix::from_rows(vec![vec![0, 1, 0], vec![1, 1, 1]]).unwrap();
        assert_eq!(m.partition(), Partition::ones(4));
    }

    #[test]
    fn transpose_swaps_margins() {
        for p in 0..=3 {
            for q in 0..=3 {
                for a in Composition::all_of(p) {
                    for b in Composition::all_of(q) {
                        for n in p.max(q)..=p + q {
                            let ab = enumerate_margin_matrices(&a, &b, n).unwrap();
                            let ba = enumerate_margin_matrices(&b, &a, n).unwrap();
                            assert_eq!(ab.len(), ba.len());
                            let mut t: Vec<_> = ab.iter().map(MarginMatrix::transpose).collect();
                            t.sort();
                            assert_eq!(t, ba);
                            for m in &ab {
                                assert_eq!(m.transpose().transpose(), *m);
                                assert_eq!(m.partition(), m.transpose().partition());
                                assert_eq!(m.composition().weight(), n);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(shuffles(2, 0), vec![Permutation::identity(2)]);
        assert_eq!(shuffles(1, 1), vec![perm("12"), perm("21")]);
        assert_eq!(shuffles(2, 2).len(), 6);
        for p in 0..=4 {
            for q in 0..=4 {
                let sh = shuffles(p, q);
                assert_eq!(BigInt::from(sh.len()), binomial(p + q, p));
                for s in &sh {
                    assert!(s.descent_set().iter().all(|&d| d == p));
                }
            }
        }
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta_max_shuffle(2, 3), perm("45123"));
        assert_eq!(beta_max_shuffle(4, 0), Permutation::identity(4));
        for p in 0..=4 {
            for q in 0..=4 {
                let b = beta_max_shuffle(p, q).compose(&beta_max_shuffle(q, p));
                assert_eq!(b, Permutation::identity(p + q));
            }
        }
    }

    #[test]
    fn descent_examples() {
        let s = perm("132");
        assert_eq!(s.descent_set(), BTreeSet::from([2]));
        assert_eq!(s.descent_composition(), comp(&[2, 1]));
        assert!(Permutation::identity(5).descent_set().is_empty());
        assert_eq!(Permutation::identity(5).descent_composition(), comp(&[5]));
        assert_eq!(comp(&[1, 2, 4, 2]).to_subset(), BTreeSet::from([1, 3, 7]));
        assert_eq!(
            Composition::from_subset(9, &BTreeSet::from([2, 6, 8])).unwrap(),
            comp(&[2, 4, 2, 1])
        );
    }

    #[test]
    fn subsets_and_compositions_are_inverse() {
        for n in 1..=8 {
            for mask in 0u32..(1 << (n - 1)) {
                let set: BTreeSet<usize> = (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                let c = Composition::from_subset(n, &set).unwrap();
                assert_eq!(c.weight(), n);
                assert_eq!(c.to_subset(), set);
            }
            for c in Composition::all_of(n) {
                assert_eq!(Composition::from_subset(n, &c.to_subset()).unwrap(), c);
            }
        }
    }

    #[test]
    fn z_factor_examples() {
        assert_eq!(z_factor(&Partition::ones(2)), BigInt::from(2));
        assert_eq!(z_factor(&Partition::empty()), BigInt::one());
        for k in 0..=7 {
            assert_eq!(z_factor(&Partition::ones(k)), factorial(k));
        }
    }

    #[test]
    fn z_factor_counts_centralizers() {
        for n in 0..=7 {
            let mut counts = std::collections::BTreeMap::new();
            for s in Permutation::all_of(n) {
                *counts.entry(s.cycle_type()).or_insert(0usize) += 1;
            }
            for l in Partition::all_of(n) {
                let c = counts.get(&l).copied().unwrap_or(0);
                assert_eq!(z_factor(&l) * c, factorial(n), "{l}");
            }
        }
    }

    #[test]
    fn concat_and_embed() {
        let l = Partition::new(vec![3, 2, 1, 1]).unwrap();
        let m = Partition::new(vec![2, 2, 1]).unwrap();
        assert_eq!(
            concat_partitions(&l, &m),
            Partition::new(vec![3, 2, 2, 2, 1, 1, 1]).unwrap()
        );
        assert_eq!(parabolic_embed(&perm("12"), &perm("21")), perm("1243"));
    }

    #[test]
    fn egf_all_ones() {
        let ones = vec![int(1); 9];
        let c = egf_heisenberg(&ones, &ones, 8);
        assert_eq!(c[1], int(3));
        for (n, cn) in c.iter().enumerate() {
            assert_eq!(*cn, int(3i64.pow(n as u32)));
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Composition::new(vec![1, 0]).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
    }

    #[test]
    fn standardize_ranks() {
        assert_eq!(standardize(&[5, 2, 4, 3]), perm("4132"));
        assert_eq!(standardize(&[]), Permutation::identity(0));
    }
}
