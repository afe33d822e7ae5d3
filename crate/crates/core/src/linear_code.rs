//! Binary linear codes given by generator matrices, and the brute-force oracles
//! (weight distribution, minimum distance, dual, projectivity) used to check the
//! spectral computations.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::{self, BitRow, Echelon};
use crate::error::{Error, Result};

/// Default and hard upper bound on the dimension of an enumerated code.
pub const ENUMERATION_LIMIT: usize = 24;

/// A binary code spanned by the stored rows; rows may be dependent.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryCode {
    n: usize,
    rows: Vec<BitRow>,
    k: usize,
}

impl fmt::Debug for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryCode[n={}, k={}]", self.n, self.k)
    }
}

impl BinaryCode {
    /// Builds a code from generator rows, stored verbatim.
    pub fn from_generator(rows: Vec<BitRow>) -> Result<BinaryCode> {
        let n = rows.first().ok_or(Error::EmptyMatrix)?.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        if let Some((row, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::RaggedMatrix { row, len: r.len(), expected: n });
        }
        let k = bits::rank(&rows);
        Ok(BinaryCode { n, rows, k })
    }

    /// Parses rows of `0`/`1` strings, one per line; blank lines and `#` comments are skipped.
    pub fn parse_matrix(text: &str) -> Result<BinaryCode> {
        let rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(BitRow::parse)
            .collect::<Result<Vec<_>>>()?;
        BinaryCode::from_generator(rows)
    }

    /// One row per line.
    pub fn to_matrix_string(&self) -> String {
        self.rows.iter().map(|r| format!("{r}\n")).collect()
    }

    /// The zero code `{0}` of length `n`.
    pub fn zero(n: usize) -> BinaryCode {
        BinaryCode { n, rows: vec![BitRow::zeros(n)], k: 0 }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    pub fn rows(&self) -> &[BitRow] {
        &self.rows
    }

    pub fn echelon(&self) -> Echelon {
        bits::rref(&self.rows)
    }

    /// Full-rank generator matrix in reduced row-echelon form.
    pub fn rref_generator(&self) -> Vec<BitRow> {
        self.echelon().rows
    }

    /// Columns of the reduced generator, each as a `k`-bit row.
    pub fn rref_columns(&self) -> Vec<BitRow> {
        columns_of(&self.rref_generator(), self.n)
    }

    pub fn contains(&self, word: &BitRow) -> bool {
        word.len() == self.n && self.echelon().contains(word)
    }

    /// Appends an overall parity bit to every generator row.
    pub fn extend_with_parity(&self) -> BinaryCode {
        let rows: Vec<BitRow> = self
            .rows
            .iter()
            .map(|r| {
                let mut r = r.clone();
                let parity = r.weight() % 2 == 1;
                r.push(parity);
                r
            })
            .collect();
        BinaryCode::from_generator(rows).expect("rows share a length")
    }

    /// Deletes coordinate `j` from every row.
    pub fn puncture(&self, j: usize) -> Result<BinaryCode> {
        if j >= self.n || self.n == 1 {
            return Err(Error::InvalidParameter(format!("cannot puncture coordinate {j} of length {}", self.n)));
        }
        let rows = self
            .rows
            .iter()
            .map(|r| BitRow::from_bits(&r.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, b)| b).collect::<Vec<_>>()))
            .collect();
        BinaryCode::from_generator(rows)
    }
}

pub(crate) fn columns_of(rows: &[BitRow], n: usize) -> Vec<BitRow> {
    (0..n)
        .map(|j| BitRow::from_bits(&rows.iter().map(|r| r.get(j)).collect::<Vec<_>>()))
        .collect()
}

/// Codeword counts `A_0, ..., A_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn from_counts(counts: Vec<u64>) -> Self {
        WeightDistribution { counts }
    }

    /// From a sparse map; weights above `n` are rejected.
    pub fn from_map(n: usize, map: &BTreeMap<usize, u64>) -> Result<Self> {
        let mut counts = vec![0; n + 1];
        for (&w, &c) in map {
            if w > n {
                return Err(Error::InvalidParameter(format!("weight {w} exceeds length {n}")));
            }
            counts[w] += c;
        }
        Ok(WeightDistribution { counts })
    }

    pub fn length(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count(&self, weight: usize) -> u64 {
        self.counts.get(weight).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Nonzero entries only.
    pub fn to_map(&self) -> BTreeMap<usize, u64> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(w, &c)| (w, c))
            .collect()
    }

    pub fn nonzero_weights(&self) -> Vec<usize> {
        self.to_map().into_keys().filter(|&w| w != 0).collect()
    }

    /// Least nonzero weight with a codeword.
    pub fn minimum_distance(&self) -> Option<usize> {
        self.nonzero_weights().first().copied()
    }
}

impl Serialize for WeightDistribution {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_map().serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightDistribution {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let map = BTreeMap::<usize, u64>::deserialize(d)?;
        let n = map.keys().max().copied().unwrap_or(0);
        WeightDistribution::from_map(n, &map).map_err(serde::de::Error::custom)
    }
}

fn check_guard(k: usize, limit: usize) -> Result<()> {
    let limit = limit.min(ENUMERATION_LIMIT);
    if k > limit {
        return Err(Error::EnumerationGuard { k, limit });
    }
    Ok(())
}

/// Reflected Gray code.
#[inline]
fn gray(i: u64) -> u64 {
    i ^ (i >> 1)
}

fn combine_u64(basis: &[u64], mask: u64) -> u64 {
    basis
        .iter()
        .enumerate()
        .filter(|(i, _)| (mask >> i) & 1 == 1)
        .fold(0, |acc, (_, &b)| acc ^ b)
}

fn combine_rows(basis: &[BitRow], n: usize, mask: u64) -> BitRow {
    let mut acc = BitRow::zeros(n);
    for (i, b) in basis.iter().enumerate() {
        if (mask >> i) & 1 == 1 {
            acc.xor_assign(b);
        }
    }
    acc
}

/// Weight counts of `basis` combinations with index in `start..end`, walking the Gray code.
fn enumerate_range(basis: &[BitRow], n: usize, start: u64, end: u64) -> Vec<u64> {
    let mut counts = vec![0u64; n + 1];
    if n <= 64 {
        let words: Vec<u64> = basis.iter().map(BitRow::as_u64).collect();
        let mut word = combine_u64(&words, gray(start));
        counts[word.count_ones() as usize] += 1;
        for i in start + 1..end {
            word ^= words[i.trailing_zeros() as usize];
            counts[word.count_ones() as usize] += 1;
        }
    } else {
        let mut word = combine_rows(basis, n, gray(start));
        counts[word.weight()] += 1;
        for i in start + 1..end {
            word.xor_assign(&basis[i.trailing_zeros() as usize]);
            counts[word.weight()] += 1;
        }
    }
    counts
}

/// Exact weight distribution by enumerating all `2^k` codewords in Gray-code order.
///
/// Large enumerations are split into disjoint index ranges and merged by addition.
pub fn weight_distribution_bruteforce(code: &BinaryCode, max_k: usize) -> Result<WeightDistribution> {
    let k = code.k;
    check_guard(k, max_k)?;
    let basis = code.rref_generator();
    let n = code.n;
    let total = 1u64 << k;
    const CHUNK_BITS: usize = 14;
    let counts = if k <= CHUNK_BITS {
        enumerate_range(&basis, n, 0, total)
    } else {
        let chunk = 1u64 << CHUNK_BITS;
        (0..total / chunk)
            .into_par_iter()
            .map(|c| enumerate_range(&basis, n, c * chunk, (c + 1) * chunk))
            .reduce(
                || vec![0; n + 1],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            )
    };
    Ok(WeightDistribution { counts })
}

/// Weight distribution by forming every linear combination of the basis independently.
pub fn weight_distribution_naive(code: &BinaryCode, max_k: usize) -> Result<WeightDistribution> {
    check_guard(code.k, max_k)?;
    let basis = code.rref_generator();
    let mut counts = vec![0u64; code.n + 1];
    for mask in 0..1u64 << code.k {
        counts[combine_rows(&basis, code.n, mask).weight()] += 1;
    }
    Ok(WeightDistribution { counts })
}

pub fn minimum_distance(code: &BinaryCode, max_k: usize) -> Result<usize> {
    if code.k == 0 {
        return Err(Error::ZeroCode("minimum distance"));
    }
    Ok(weight_distribution_bruteforce(code, max_k)?
        .minimum_distance()
        .expect("a nonzero code has a nonzero codeword"))
}

/// The dual code, spanned by a basis of the null space of the generator.
pub fn dual(code: &BinaryCode) -> BinaryCode {
    let n = code.n;
    let ech = code.echelon();
    if ech.rank() == n {
        return BinaryCode::zero(n);
    }
    let pivot_set: Vec<bool> = (0..n).map(|j| ech.pivots.contains(&j)).collect();
    let rows: Vec<BitRow> = (0..n)
        .filter(|&j| !pivot_set[j])
        .map(|free| {
            let mut v = BitRow::zeros(n);
            v.set(free, true);
            for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                if row.get(free) {
                    v.set(p, true);
                }
            }
            v
        })
        .collect();
    BinaryCode::from_generator(rows).expect("null-space rows share a length")
}

/// Why a code fails to be projective.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColumnDefect {
    ZeroColumn(usize),
    RepeatedColumn(usize, usize),
}

impl fmt::Display for ColumnDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColumnDefect::ZeroColumn(j) => write!(f, "column {j} is zero"),
            ColumnDefect::RepeatedColumn(a, b) => write!(f, "columns {a} and {b} are equal"),
        }
    }
}

/// First zero or repeated column of the reduced generator, if any.
pub fn projectivity_defect(code: &BinaryCode) -> Option<ColumnDefect> {
    let mut seen: HashMap<BitRow, usize> = HashMap::new();
    for (j, col) in code.rref_columns().into_iter().enumerate() {
        if col.is_zero() {
            return Some(ColumnDefect::ZeroColumn(j));
        }
        if let Some(&first) = seen.get(&col) {
            return Some(ColumnDefect::RepeatedColumn(first, j));
        }
        seen.insert(col, j);
    }
    None
}

/// Pairwise distinct nonzero columns; over GF(2) this is dual distance >= 3.
pub fn is_projective(code: &BinaryCode) -> bool {
    code.k >= 1 && projectivity_defect(code).is_none()
}

/// Equality of row spaces.
pub fn codes_equal(a: &BinaryCode, b: &BinaryCode) -> Result<bool> {
    if a.n != b.n {
        return Err(Error::LengthMismatch(a.n, b.n));
    }
    if a.k != b.k {
        return Ok(false);
    }
    let ea = a.echelon();
    Ok(b.rows.iter().all(|r| ea.contains(r)))
}

/// Minimum distance when it is at most 3, read off the dual generator's columns:
/// `d` is the least number of dual columns summing to zero.
pub fn small_minimum_distance(code: &BinaryCode) -> Option<usize> {
    let h = dual(code);
    let cols = h.rref_columns();
    if cols.iter().any(BitRow::is_zero) {
        return Some(1);
    }
    let mut index: HashMap<&BitRow, usize> = HashMap::new();
    for (j, c) in cols.iter().enumerate() {
        if index.insert(c, j).is_some() {
            return Some(2);
        }
    }
    for a in 0..cols.len() {
        for b in a + 1..cols.len() {
            let mut s = cols[a].clone();
            s.xor_assign(&cols[b]);
            if index.get(&s).is_some_and(|&c| c != a && c != b) {
                return Some(3);
            }
        }
    }
    None
}

fn binomial(n: i64, k: i64) -> i128 {
    if k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// Krawtchouk polynomial `K_j(i) = sum_s (-1)^s C(i, s) C(n - i, j - s)`.
pub fn krawtchouk(n: usize, j: usize, i: usize) -> i128 {
    (0..=j as i64)
        .map(|s| {
            let term = binomial(i as i64, s) * binomial(n as i64 - i as i64, j as i64 - s);
            if s % 2 == 0 { term } else { -term }
        })
        .sum()
}

/// MacWilliams transform `B_j = 2^-k sum_i A_i K_j(i)` in exact integer arithmetic.
pub fn macwilliams_transform(dist: &WeightDistribution) -> Result<WeightDistribution> {
    let n = dist.length();
    let size = dist.total() as i128;
    let counts = (0..=n)
        .map(|j| {
            let s: i128 = (0..=n).map(|i| dist.count(i) as i128 * krawtchouk(n, j, i)).sum();
            if s % size != 0 || s < 0 {
                return Err(Error::InvalidParameter(format!(
                    "MacWilliams coefficient {j} is not a nonnegative integer"
                )));
            }
            Ok((s / size) as u64)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightDistribution { counts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn code(rows: &[&str]) -> BinaryCode {
        BinaryCode::from_generator(rows.iter().map(|r| BitRow::parse(r).unwrap()).collect()).unwrap()
    }

    fn hamming74() -> BinaryCode {
        code(&["1000110", "0100101", "0010011", "0001111"])
    }

    fn simplex3() -> BinaryCode {
        code(&["1010101", "0110011", "0001111"])
    }

    #[test]
    fn construction_examples() {
        let c = code(&["1"]);
        assert_eq!((c.len(), c.dimension()), (1, 1));
        let c = code(&["10", "10"]);
        assert_eq!((c.len(), c.dimension()), (2, 1));
        assert_eq!(hamming74().dimension(), 4);
        assert_eq!(BinaryCode::from_generator(vec![]), Err(Error::EmptyMatrix));
        let ragged = vec![BitRow::parse("10").unwrap(), BitRow::parse("1").unwrap()];
        assert!(matches!(BinaryCode::from_generator(ragged), Err(Error::RaggedMatrix { row: 1, .. })));
    }

    #[test]
    fn weight_distribution_examples() {
        let zero = code(&["000"]);
        assert_eq!(weight_distribution_bruteforce(&zero, 24).unwrap().to_map(), BTreeMap::from([(0, 1)]));
        assert_eq!(
            weight_distribution_bruteforce(&simplex3(), 24).unwrap().to_map(),
            BTreeMap::from([(0, 1), (4, 7)])
        );
        assert_eq!(
            weight_distribution_bruteforce(&hamming74(), 24).unwrap().to_map(),
            BTreeMap::from([(0, 1), (3, 7), (4, 7), (7, 1)])
        );
        assert!(matches!(
            weight_distribution_bruteforce(&hamming74(), 3),
            Err(Error::EnumerationGuard { k: 4, limit: 3 })
        ));
    }

    #[test]
    fn minimum_distance_examples() {
        assert_eq!(minimum_distance(&code(&["111"]), 24).unwrap(), 3);
        assert_eq!(minimum_distance(&hamming74(), 24).unwrap(), 3);
        assert_eq!(minimum_distance(&simplex3(), 24).unwrap(), 4);
        assert_eq!(minimum_distance(&code(&["00"]), 24), Err(Error::ZeroCode("minimum distance")));
    }

    #[test]
    fn dual_examples() {
        let full = code(&["100", "010", "001"]);
        assert_eq!(dual(&full).dimension(), 0);
        let d = dual(&hamming74());
        assert_eq!(d.dimension(), 3);
        assert_eq!(weight_distribution_bruteforce(&d, 24).unwrap().nonzero_weights(), vec![4]);
        for r in d.rows() {
            for s in hamming74().rows() {
                assert!(!r.dot(s));
            }
        }
        assert_eq!(dual(&code(&["000"])).dimension(), 3);
    }

    #[test]
    fn projectivity_examples() {
        assert!(is_projective(&simplex3()));
        assert!(!is_projective(&code(&["101", "100"])));
        assert_eq!(projectivity_defect(&code(&["101", "100"])), Some(ColumnDefect::ZeroColumn(1)));
        assert!(!is_projective(&code(&["11"])));
        assert_eq!(projectivity_defect(&code(&["11"])), Some(ColumnDefect::RepeatedColumn(0, 1)));
        assert!(is_projective(&hamming74()));
    }

    #[test]
    fn equality_examples() {
        let h = hamming74();
        assert!(codes_equal(&h, &h).unwrap());
        let permuted = code(&["0010011", "1000110", "0001111", "0100101"]);
        assert!(codes_equal(&h, &permuted).unwrap());
        assert!(!codes_equal(&simplex3(), &h).unwrap());
        assert_eq!(codes_equal(&h, &code(&["1"])), Err(Error::LengthMismatch(7, 1)));
    }

    #[test]
    fn small_distance_matches_enumeration() {
        assert_eq!(small_minimum_distance(&hamming74()), Some(3));
        assert_eq!(small_minimum_distance(&simplex3()), None);
        assert_eq!(small_minimum_distance(&code(&["11"])), Some(2));
    }

    #[test]
    fn macwilliams_of_hamming_is_simplex() {
        let a = weight_distribution_bruteforce(&hamming74(), 24).unwrap();
        let b = macwilliams_transform(&a).unwrap();
        assert_eq!(b, weight_distribution_bruteforce(&simplex3(), 24).unwrap());
    }

    #[test]
    fn wide_codes_use_the_row_path() {
        // length-70 repetition-like code: rows of all ones and a half pattern
        let ones = BitRow::from_bits(&[true; 70]);
        let half = BitRow::from_bits(&(0..70).map(|j| j < 35).collect::<Vec<_>>());
        let c = BinaryCode::from_generator(vec![ones, half]).unwrap();
        assert_eq!(
            weight_distribution_bruteforce(&c, 24).unwrap().to_map(),
            BTreeMap::from([(0, 1), (35, 2), (70, 1)])
        );
    }

    #[test]
    fn parsing_matrix_text() {
        let c = BinaryCode::parse_matrix("# hamming\n1000110\n0100101\n\n0010011\n0001111\n").unwrap();
        assert!(codes_equal(&c, &hamming74()).unwrap());
        assert_eq!(BinaryCode::parse_matrix(&c.to_matrix_string()).unwrap(), c);
    }

    fn arb_code() -> impl Strategy<Value = BinaryCode> {
        (1usize..=40, 1usize..=12).prop_flat_map(|(n, rows)| {
            proptest::collection::vec(proptest::collection::vec(any::<bool>(), n), rows)
                .prop_map(|m| BinaryCode::from_generator(m.iter().map(|r| BitRow::from_bits(r)).collect()).unwrap())
        })
    }

    proptest! {
        #[test]
        fn gray_and_naive_enumerations_agree(c in arb_code()) {
            let a = weight_distribution_bruteforce(&c, 24).unwrap();
            prop_assert_eq!(a.total(), 1u64 << c.dimension());
            prop_assert_eq!(a.count(0), 1);
            prop_assert_eq!(a, weight_distribution_naive(&c, 24).unwrap());
        }

        #[test]
        fn dual_is_orthogonal_and_involutive(c in arb_code()) {
            let d = dual(&c);
            prop_assert_eq!(d.dimension(), c.len() - c.dimension());
            for r in c.rows() {
                for s in d.rows() {
                    prop_assert!(!r.dot(s));
                }
            }
            if c.dimension() > 0 {
                prop_assert!(codes_equal(&dual(&d), &c).unwrap());
            }
        }

        #[test]
        fn rank_is_stable_under_row_permutation(c in arb_code(), seed in any::<u64>()) {
            let mut rows = c.rows().to_vec();
            let len = rows.len();
            rows.rotate_left((seed as usize) % len);
            let p = BinaryCode::from_generator(rows).unwrap();
            prop_assert_eq!(p.dimension(), c.dimension());
            prop_assert!(codes_equal(&p, &c).unwrap());
        }
    }
}
