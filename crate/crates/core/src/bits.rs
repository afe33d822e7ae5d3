//! Packed GF(2) row vectors and Gaussian elimination.

use std::fmt;

use crate::error::{Error, Result};

/// A fixed-length vector over GF(2), packed 64 coordinates per word.
///
/// Coordinate `j` lives in bit `j % 64` of word `j / 64`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitRow {
    len: usize,
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        BitRow {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut row = BitRow::zeros(bits.len());
        for (j, &b) in bits.iter().enumerate() {
            if b {
                row.set(j, true);
            }
        }
        row
    }

    /// Builds a row from the low `len` bits of `word` (coordinate j = bit j).
    pub fn from_u64(word: u64, len: usize) -> Self {
        assert!(len <= 64);
        let mut row = BitRow::zeros(len);
        if len > 0 {
            row.words[0] = if len == 64 { word } else { word & ((1u64 << len) - 1) };
        }
        row
    }

    /// Parses a string of `0`/`1` characters.
    pub fn parse(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse(format!("unexpected character {other:?} in bit row"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BitRow::from_bits(&bits))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, j: usize) -> bool {
        debug_assert!(j < self.len);
        (self.words[j >> 6] >> (j & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, j: usize, value: bool) {
        debug_assert!(j < self.len);
        let mask = 1u64 << (j & 63);
        if value {
            self.words[j >> 6] |= mask;
        } else {
            self.words[j >> 6] &= !mask;
        }
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &BitRow) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &BitRow) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// The row as a single word; only valid for `len <= 64`.
    pub fn as_u64(&self) -> u64 {
        debug_assert!(self.len <= 64);
        self.words.first().copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |j| self.get(j))
    }

    /// Appends one coordinate.
    pub fn push(&mut self, value: bool) {
        if self.len % 64 == 0 {
            self.words.push(0);
        }
        self.len += 1;
        self.set(self.len - 1, value);
    }

    /// Lowest index with a set bit.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
}

impl fmt::Display for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitRow({self})")
    }
}

/// Reduced row-echelon form of a GF(2) matrix.
#[derive(Debug, Clone)]
pub struct Echelon {
    /// Nonzero rows of the reduced form; row `i` has its leading one at `pivots[i]`.
    pub rows: Vec<BitRow>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the echelon rows; the result is zero iff `v` lies in the row space.
    pub fn reduce(&self, v: &BitRow) -> BitRow {
        let mut v = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
        v
    }

    pub fn contains(&self, v: &BitRow) -> bool {
        self.reduce(v).is_zero()
    }
}

/// Gauss-Jordan elimination; `rows` must share one length.
pub fn rref(rows: &[BitRow]) -> Echelon {
    let mut work: Vec<BitRow> = rows.to_vec();
    let n = work.first().map_or(0, BitRow::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        if r == work.len() {
            break;
        }
        let Some(p) = (r..work.len()).find(|&i| work[i].get(col)) else {
            continue;
        };
        work.swap(r, p);
        let pivot_row = work[r].clone();
        for (i, row) in work.iter_mut().enumerate() {
            if i != r && row.get(col) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push(col);
        r += 1;
    }
    work.truncate(r);
    Echelon { rows: work, pivots }
}

pub fn rank(rows: &[BitRow]) -> usize {
    rref(rows).rank()
}

/// Inverts a square matrix of at most 64 columns given as row words
/// (entry (i, j) is bit j of `rows[i]`). Returns `None` if singular.
pub fn invert_small(rows: &[u64]) -> Option<Vec<u64>> {
    let n = rows.len();
    assert!(n <= 64);
    let mut a = rows.to_vec();
    let mut inv: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
    for col in 0..n {
        let p = (col..n).find(|&i| (a[i] >> col) & 1 == 1)?;
        a.swap(col, p);
        inv.swap(col, p);
        for i in 0..n {
            if i != col && (a[i] >> col) & 1 == 1 {
                a[i] ^= a[col];
                inv[i] ^= inv[col];
            }
        }
    }
    Some(inv)
}

/// Rank of at most 64-column row words.
pub fn rank_small(rows: &[u64]) -> usize {
    let mut basis: Vec<u64> = Vec::new();
    for &r in rows {
        let mut v = r;
        for &b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}
