//! Finite binary relations stored as dense bit matrices.
//!
//! [`FiniteRelation`] is a relation on a single universe `{0, .., size-1}`;
//! [`PlainRelation`] is a relation between two finite sets and composes the
//! usual way. Both keep unused bits zeroed, so derived equality is set
//! equality.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// Largest universe [`enumerate_preorders`] accepts.
pub const MAX_ENUMERATION_SIZE: usize = 4;

/// Row-major bit matrix with `rows x cols` cells.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(WORD);
        BitMatrix {
            rows,
            cols,
            words_per_row,
            data: vec![0; rows * words_per_row],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        debug_assert!(row < self.rows && col < self.cols);
        let word = self.data[row * self.words_per_row + col / WORD];
        word >> (col % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize) {
        debug_assert!(row < self.rows && col < self.cols);
        self.data[row * self.words_per_row + col / WORD] |= 1 << (col % WORD);
    }

    #[inline]
    pub fn clear(&mut self, row: usize, col: usize) {
        debug_assert!(row < self.rows && col < self.cols);
        self.data[row * self.words_per_row + col / WORD] &= !(1 << (col % WORD));
    }

    fn row(&self, row: usize) -> &[u64] {
        &self.data[row * self.words_per_row..(row + 1) * self.words_per_row]
    }

    /// `row[dst] |= row[src]`.
    fn union_rows(&mut self, dst: usize, src: usize) {
        if dst == src {
            return;
        }
        let w = self.words_per_row;
        for k in 0..w {
            let bits = self.data[src * w + k];
            self.data[dst * w + k] |= bits;
        }
    }

    /// `row[dst] |= other.row[src]`, both matrices having the same column count.
    fn union_row_from(&mut self, dst: usize, other: &BitMatrix, src: usize) {
        debug_assert_eq!(self.cols, other.cols);
        let w = self.words_per_row;
        for (k, bits) in other.row(src).iter().enumerate() {
            self.data[dst * w + k] |= bits;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Set cells in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rows).flat_map(move |r| {
            self.row(r).iter().enumerate().flat_map(move |(k, &word)| {
                let mut bits = word;
                std::iter::from_fn(move || {
                    if bits == 0 {
                        return None;
                    }
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some((r, k * WORD + b))
                })
            })
        })
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut out = BitMatrix::new(self.cols, self.rows);
        for (r, c) in self.iter() {
            out.set(c, r);
        }
        out
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A binary relation on the universe `{0, .., size-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteRelation {
    bits: BitMatrix,
}

impl FiniteRelation {
    /// The empty relation.
    pub fn empty(size: usize) -> Self {
        FiniteRelation {
            bits: BitMatrix::new(size, size),
        }
    }

    /// The diagonal `{(i, i)}`.
    pub fn diagonal(size: usize) -> Self {
        let mut r = Self::empty(size);
        for i in 0..size {
            r.bits.set(i, i);
        }
        r
    }

    /// Every pair.
    pub fn full(size: usize) -> Self {
        let mut r = Self::empty(size);
        for i in 0..size {
            for j in 0..size {
                r.bits.set(i, j);
            }
        }
        r
    }

    pub fn from_pairs<I>(size: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut r = Self::empty(size);
        for (i, j) in pairs {
            r.insert(i, j)?;
        }
        Ok(r)
    }

    pub fn size(&self) -> usize {
        self.bits.rows()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        i < self.size() && j < self.size() && self.bits.get(i, j)
    }

    pub fn insert(&mut self, i: usize, j: usize) -> Result<()> {
        let size = self.size();
        for index in [i, j] {
            if index >= size {
                return Err(Error::IndexOutOfRange { index, size });
            }
        }
        self.bits.set(i, j);
        Ok(())
    }

    pub fn remove(&mut self, i: usize, j: usize) {
        if i < self.size() && j < self.size() {
            self.bits.clear(i, j);
        }
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.bits.iter()
    }

    /// Elements `j` with `(i, j)` in the relation.
    pub fn successors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.size()).filter(move |&j| self.bits.get(i, j))
    }

    pub fn union(&self, other: &FiniteRelation) -> Result<FiniteRelation> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                context: "union of relations",
                expected: self.size(),
                found: other.size(),
            });
        }
        let mut out = self.clone();
        for i in 0..self.size() {
            out.bits.union_row_from(i, &other.bits, i);
        }
        Ok(out)
    }

    /// Warshall over bit rows: for each pivot `k`, every row reaching `k`
    /// absorbs row `k`.
    pub fn transitive_closure(&self) -> FiniteRelation {
        let mut out = self.clone();
        let n = out.size();
        for k in 0..n {
            for i in 0..n {
                if out.bits.get(i, k) {
                    out.bits.union_rows(i, k);
                }
            }
        }
        out
    }

    pub fn reflexive_closure(&self) -> FiniteRelation {
        let mut out = self.clone();
        for i in 0..out.size() {
            out.bits.set(i, i);
        }
        out
    }

    pub fn symmetric_closure(&self) -> FiniteRelation {
        let mut out = self.clone();
        for (i, j) in self.pairs() {
            out.bits.set(j, i);
        }
        out
    }

    /// Reflexive-transitive closure.
    pub fn preorder_closure(&self) -> FiniteRelation {
        self.transitive_closure().reflexive_closure()
    }

    /// Drops every diagonal pair.
    pub fn strictify(&self) -> FiniteRelation {
        let mut out = self.clone();
        for i in 0..out.size() {
            out.bits.clear(i, i);
        }
        out
    }

    pub fn converse(&self) -> FiniteRelation {
        FiniteRelation {
            bits: self.bits.transpose(),
        }
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.size()).all(|i| self.bits.get(i, i))
    }

    pub fn is_irreflexive(&self) -> bool {
        (0..self.size()).all(|i| !self.bits.get(i, i))
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().all(|(i, j)| self.bits.get(j, i))
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| {
            self.successors(i)
                .all(|j| (0..n).all(|k| !self.bits.get(j, k) || self.bits.get(i, k)))
        })
    }

    pub fn is_preorder(&self) -> bool {
        self.is_reflexive() && self.is_transitive()
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_preorder() && self.is_symmetric()
    }

    /// Irreflexive, and `x R y`, `y R z`, `x != z` imply `x R z`.
    pub fn is_strictly_transitive(&self) -> bool {
        if !self.is_irreflexive() {
            return false;
        }
        let n = self.size();
        (0..n).all(|x| {
            self.successors(x)
                .all(|y| (0..n).all(|z| x == z || !self.bits.get(y, z) || self.bits.get(x, z)))
        })
    }

    /// Restriction to the listed elements, renumbered in the order given.
    pub fn restrict(&self, keep: &[usize]) -> FiniteRelation {
        let mut out = FiniteRelation::empty(keep.len());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                if self.bits.get(i, j) {
                    out.bits.set(a, b);
                }
            }
        }
        out
    }

    /// Each pair independently present with probability `density`.
    pub fn random<R: Rng + ?Sized>(size: usize, density: f64, rng: &mut R) -> FiniteRelation {
        let mut out = FiniteRelation::empty(size);
        for i in 0..size {
            for j in 0..size {
                if rng.gen_bool(density) {
                    out.bits.set(i, j);
                }
            }
        }
        out
    }
}

impl fmt::Debug for FiniteRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteRelation({}, {:?})", self.size(), self.bits)
    }
}

/// Ordered off-diagonal cells of a universe; bit `b` of a strict-part mask
/// refers to entry `b`.
fn off_diagonal(size: usize) -> Vec<(usize, usize)> {
    (0..size)
        .flat_map(|i| (0..size).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect()
}

/// Iterator over all preorders on a small universe, in increasing order of
/// their strict-part bitmask.
#[derive(Debug, Clone)]
pub struct Preorders {
    size: usize,
    cells: Vec<(usize, usize)>,
    next_mask: u64,
    end_mask: u64,
}

impl Preorders {
    /// Restricts the sweep to strict-part masks in `start..end`, clamped to
    /// the valid range. Disjoint ranges yield disjoint preorders.
    pub fn mask_range(mut self, start: u64, end: u64) -> Self {
        let full = self.end_mask;
        self.next_mask = start.min(full);
        self.end_mask = end.min(full);
        self
    }

    /// Number of candidate masks for this universe.
    pub fn candidate_count(&self) -> u64 {
        1u64 << self.cells.len()
    }
}

impl Iterator for Preorders {
    type Item = FiniteRelation;

    fn next(&mut self) -> Option<FiniteRelation> {
        while self.next_mask < self.end_mask {
            let mask = self.next_mask;
            self.next_mask += 1;
            let mut r = FiniteRelation::diagonal(self.size);
            for (b, &(i, j)) in self.cells.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    r.bits.set(i, j);
                }
            }
            if r.is_transitive() {
                return Some(r);
            }
        }
        None
    }
}

/// All preorders on `{0, .., size-1}`, each exactly once.
pub fn enumerate_preorders(size: usize) -> Result<Preorders> {
    if size > MAX_ENUMERATION_SIZE {
        return Err(Error::BoundExceeded {
            what: "preorder enumeration size",
            value: size as u128,
            limit: MAX_ENUMERATION_SIZE as u128,
        });
    }
    let cells = off_diagonal(size);
    let end_mask = 1u64 << cells.len();
    Ok(Preorders {
        size,
        cells,
        next_mask: 0,
        end_mask,
    })
}

/// A relation between a domain `{0, .., dom-1}` and a codomain `{0, .., cod-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PlainRelation {
    bits: BitMatrix,
}

impl PlainRelation {
    pub fn empty(dom: usize, cod: usize) -> Self {
        PlainRelation {
            bits: BitMatrix::new(dom, cod),
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut r = Self::empty(size, size);
        for i in 0..size {
            r.bits.set(i, i);
        }
        r
    }

    pub fn from_pairs<I>(dom: usize, cod: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut r = Self::empty(dom, cod);
        for (i, j) in pairs {
            r.insert(i, j)?;
        }
        Ok(r)
    }

    pub fn dom(&self) -> usize {
        self.bits.rows()
    }

    pub fn cod(&self) -> usize {
        self.bits.cols()
    }

    pub fn insert(&mut self, i: usize, j: usize) -> Result<()> {
        if i >= self.dom() {
            return Err(Error::IndexOutOfRange {
                index: i,
                size: self.dom(),
            });
        }
        if j >= self.cod() {
            return Err(Error::IndexOutOfRange {
                index: j,
                size: self.cod(),
            });
        }
        self.bits.set(i, j);
        Ok(())
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        i < self.dom() && j < self.cod() && self.bits.get(i, j)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.bits.iter()
    }

    pub fn converse(&self) -> PlainRelation {
        PlainRelation {
            bits: self.bits.transpose(),
        }
    }
}

impl fmt::Debug for PlainRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PlainRelation({}->{}, {:?})",
            self.dom(),
            self.cod(),
            self.bits
        )
    }
}

/// Relational composite `second ∘ first`: `{(x, y) | ∃z. x first z ∧ z second y}`.
pub fn compose_plain(first: &PlainRelation, second: &PlainRelation) -> Result<PlainRelation> {
    if first.cod() != second.dom() {
        return Err(Error::SizeMismatch {
            context: "inner sizes of a relational composite",
            expected: first.cod(),
            found: second.dom(),
        });
    }
    let mut out = PlainRelation::empty(first.dom(), second.cod());
    for (x, z) in first.pairs() {
        out.bits.union_row_from(x, &second.bits, z);
    }
    Ok(out)
}
