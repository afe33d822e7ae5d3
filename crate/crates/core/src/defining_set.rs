//! Codes from defining sets and back.
//!
//! A defining set `D = (d_1, ..., d_n)` in GF(2^m) yields the code
//! `C_D = {(Tr(x d_1), ..., Tr(x d_n)) : x in GF(2^m)}`. Every binary code arises this
//! way ([`extract_defining_set`]), and when `D` is the support of a Boolean function `f`
//! the weight distribution of `C_D` is read off the Walsh spectrum of `f`
//! ([`spectral_weight_distribution`]).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bits::BitRow;
use crate::boolfun::{walsh_transform, BooleanFunction, WalshSpectrum};
use crate::error::{Error, Result};
use crate::gf2::{parse_hex_word, Basis, Field, FieldElement, FieldSpec, Subfield, MAX_DEGREE};
use crate::linear_code::{
    projectivity_defect, weight_distribution_bruteforce, BinaryCode, WeightDistribution,
};

/// An ordered list of field elements; repeats are allowed and flagged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefiningSet {
    field: Field,
    elements: Vec<u32>,
}

/// Wire form: `{"m": 3, "modulus": "b", "elements": ["1", "2"]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefiningSetJson {
    pub m: u32,
    pub modulus: String,
    pub elements: Vec<String>,
}

impl DefiningSet {
    pub fn new(field: Field, elements: Vec<u32>) -> Result<DefiningSet> {
        if elements.is_empty() {
            return Err(Error::EmptyDefiningSet);
        }
        if let Some(&value) = elements.iter().find(|&&e| !field.contains(e)) {
            return Err(Error::NotAnElement { m: field.degree(), value });
        }
        Ok(DefiningSet { field, elements })
    }

    pub fn from_elements(elements: &[FieldElement]) -> Result<DefiningSet> {
        let field = elements.first().ok_or(Error::EmptyDefiningSet)?.field();
        if elements.iter().any(|e| e.field() != field) {
            return Err(Error::FieldMismatch);
        }
        DefiningSet::new(field, elements.iter().map(FieldElement::value).collect())
    }

    /// The support of `f`, in ascending order.
    pub fn from_support(f: &BooleanFunction) -> Result<DefiningSet> {
        let support: Vec<u32> = f.support().iter().map(FieldElement::value).collect();
        if support.is_empty() {
            return Err(Error::EmptySupport);
        }
        DefiningSet::new(f.field(), support)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn has_duplicates(&self) -> bool {
        let mut sorted = self.elements.clone();
        sorted.sort_unstable();
        sorted.windows(2).any(|w| w[0] == w[1])
    }

    /// Characteristic function; fails on repeated elements.
    pub fn characteristic_function(&self) -> Result<BooleanFunction> {
        let elements: Vec<FieldElement> = self
            .elements
            .iter()
            .map(|&e| self.field.element(e))
            .collect::<Result<_>>()?;
        BooleanFunction::from_support(self.field, &elements)
    }

    pub fn to_json(&self) -> DefiningSetJson {
        let FieldSpec { m, modulus } = self.field.spec();
        DefiningSetJson {
            m,
            modulus,
            elements: self.elements.iter().map(|e| format!("{e:x}")).collect(),
        }
    }

    pub fn from_json(json: &DefiningSetJson) -> Result<DefiningSet> {
        let field = Field::from_spec(&FieldSpec { m: json.m, modulus: json.modulus.clone() })?;
        let elements = json
            .elements
            .iter()
            .map(|s| parse_hex_word(s))
            .collect::<Result<Vec<_>>>()?;
        DefiningSet::new(field, elements)
    }
}

/// Generator rows `r_i[j] = Tr(alpha^i d_j)` over the polynomial basis; rank may be below m.
pub fn code_from_defining_set(set: &DefiningSet) -> BinaryCode {
    let field = set.field;
    let rows = (0..field.degree())
        .map(|i| {
            let bits: Vec<bool> = set
                .elements
                .iter()
                .map(|&d| field.trace_word(field.mul_words(1 << i, d)) == 1)
                .collect();
            BitRow::from_bits(&bits)
        })
        .collect();
    BinaryCode::from_generator(rows).expect("a nonempty defining set gives a nonempty matrix")
}

/// Weight of the codeword `c_x`, via `wt = (n - sum_d (-1)^Tr(xd)) / 2`.
pub fn codeword_weight(set: &DefiningSet, x: &FieldElement) -> Result<usize> {
    if x.field() != set.field {
        return Err(Error::FieldMismatch);
    }
    let field = set.field;
    let character_sum: i64 = set
        .elements
        .iter()
        .map(|&d| 1 - 2 * field.trace_word(field.mul_words(x.value(), d)) as i64)
        .sum();
    Ok(((set.len() as i64 - character_sum) / 2) as usize)
}

/// Writes any code as `C_D` using the polynomial basis of GF(2^k).
///
/// With `G` the reduced row-echelon generator and `{b_i}` the trace-dual of the
/// polynomial basis, `d_j = sum_i G[i][j] b_i`. [`code_from_defining_set`] applied to
/// the result reproduces `G` row for row.
pub fn extract_defining_set(code: &BinaryCode) -> Result<DefiningSet> {
    let k = code.dimension() as u32;
    if k == 0 {
        return Err(Error::ZeroCode("defining set"));
    }
    if k > MAX_DEGREE {
        return Err(Error::TooLarge { m: k, limit: MAX_DEGREE });
    }
    extract_defining_set_with_basis(code, &Basis::polynomial(Field::default_for(k)?))
}

/// Extraction relative to any basis of GF(2^k).
pub fn extract_defining_set_with_basis(code: &BinaryCode, basis: &Basis) -> Result<DefiningSet> {
    let k = code.dimension();
    if k == 0 {
        return Err(Error::ZeroCode("defining set"));
    }
    if basis.field().degree() as usize != k {
        return Err(Error::InvalidParameter(format!(
            "basis of GF(2^{}) given for a code of dimension {k}",
            basis.field().degree()
        )));
    }
    let generator = code.rref_generator();
    let dual = basis.dual();
    let elements = (0..code.len())
        .map(|j| {
            generator
                .iter()
                .zip(dual.elements())
                .filter(|(row, _)| row.get(j))
                .fold(0, |acc, (_, &b)| acc ^ b)
        })
        .collect();
    DefiningSet::new(basis.field(), elements)
}

/// The map `C -> f_C`: characteristic function of the extracted defining set.
pub fn boolean_from_code(code: &BinaryCode) -> Result<BooleanFunction> {
    boolean_from_code_with_basis(code, None)
}

pub fn boolean_from_code_with_basis(code: &BinaryCode, basis: Option<&Basis>) -> Result<BooleanFunction> {
    if code.dimension() == 0 {
        return Err(Error::ZeroCode("Boolean function"));
    }
    if let Some(defect) = projectivity_defect(code) {
        return Err(Error::NotProjective(defect.to_string()));
    }
    let set = match basis {
        Some(b) => extract_defining_set_with_basis(code, b)?,
        None => extract_defining_set(code)?,
    };
    set.characteristic_function()
}

/// Weight distribution of `C_{D_f}` derived from the Walsh spectrum of `f`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectralWeightReport {
    pub n_f: usize,
    /// Multiplicity of 0 in the multiset `{(2 n_f + W(w)) / 4 : w != 0} + {0}`.
    pub e: u64,
    pub dimension: u32,
    /// Codeword weight to number of codewords.
    pub weights: BTreeMap<u64, u64>,
}

impl SpectralWeightReport {
    pub fn to_distribution(&self) -> Result<WeightDistribution> {
        let map = self.weights.iter().map(|(&w, &c)| (w as usize, c)).collect();
        WeightDistribution::from_map(self.n_f, &map)
    }

    pub fn nonzero_weights(&self) -> Vec<u64> {
        self.weights.keys().copied().filter(|&w| w != 0).collect()
    }
}

pub fn spectral_weight_distribution(f: &BooleanFunction) -> Result<SpectralWeightReport> {
    spectral_weight_distribution_from_spectrum(f.num_vars(), f.weight(), &walsh_transform(f))
}

/// Same as [`spectral_weight_distribution`] for a precomputed spectrum.
pub fn spectral_weight_distribution_from_spectrum(
    m: u32,
    n_f: usize,
    spectrum: &WalshSpectrum,
) -> Result<SpectralWeightReport> {
    if n_f == 0 {
        return Err(Error::EmptySupport);
    }
    let mut multiset: BTreeMap<i64, u64> = BTreeMap::from([(0, 1)]);
    for &value in &spectrum.values()[1..] {
        let numerator = 2 * n_f as i64 + value as i64;
        if numerator % 4 != 0 || numerator < 0 {
            return Err(Error::NonIntegralWeight(numerator));
        }
        *multiset.entry(numerator / 4).or_insert(0) += 1;
    }
    let e = multiset[&0];
    if !e.is_power_of_two() {
        return Err(Error::InvalidParameter(format!("zero multiplicity {e} is not a power of two")));
    }
    let weights = multiset
        .into_iter()
        .map(|(weight, count)| {
            if count % e != 0 {
                return Err(Error::NonIntegralFrequency { weight, count, e });
            }
            Ok((weight as u64, count / e))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(SpectralWeightReport { n_f, e, dimension: m - e.trailing_zeros(), weights })
}

/// Spectral route against brute-force enumeration of `C_{D_f}`.
pub fn verify_spectral_distribution(f: &BooleanFunction, max_k: usize) -> Result<bool> {
    let report = spectral_weight_distribution(f)?;
    let code = code_from_defining_set(&DefiningSet::from_support(f)?);
    let enumerated = weight_distribution_bruteforce(&code, max_k)?;
    Ok(report.dimension as usize == code.dimension() && report.to_distribution()? == enumerated)
}

/// `D` rewritten over GF(2^h) x GF(2^h) for `m = 2h`.
#[derive(Debug, Clone)]
pub struct BivariateView {
    /// Standalone GF(2^h) in which the pairs live.
    pub subfield: Field,
    /// Basis `{u_1, u_2}` of GF(2^m) over GF(2^h) (big-field words).
    pub basis: [u32; 2],
    /// Its dual under the relative trace.
    pub dual: [u32; 2],
    pub pairs: Vec<(u32, u32)>,
    pub code: BinaryCode,
}

/// Code `{(Tr_h(e_1 x_1 + e_2 x_2))_{(e_1, e_2) in E}}` over pairs in GF(2^h).
pub fn code_from_pairs(subfield: Field, pairs: &[(u32, u32)]) -> Result<BinaryCode> {
    if pairs.is_empty() {
        return Err(Error::EmptyDefiningSet);
    }
    let h = subfield.degree();
    let row = |first: bool, i: u32| {
        let bits: Vec<bool> = pairs
            .iter()
            .map(|&(e1, e2)| {
                let e = if first { e1 } else { e2 };
                subfield.trace_word(subfield.mul_words(e, 1 << i)) == 1
            })
            .collect();
        BitRow::from_bits(&bits)
    };
    let rows = (0..h).map(|i| row(true, i)).chain((0..h).map(|i| row(false, i))).collect();
    BinaryCode::from_generator(rows)
}

pub fn bivariate_view(set: &DefiningSet, h: u32) -> Result<BivariateView> {
    let big = set.field;
    let m = big.degree();
    if m % 2 != 0 {
        return Err(Error::OddDegree(m));
    }
    if 2 * h != m {
        return Err(Error::InvalidParameter(format!("h = {h} but m = {m}; need m = 2h")));
    }
    let sub = Subfield::new(big, h)?;
    let rt = |a: u32| big.relative_trace_word(a, h).expect("h divides m");
    // alpha generates GF(2^m), so it lies outside GF(2^h)
    let basis = [1u32, big.generator().value()];
    let gram = [
        [rt(big.mul_words(basis[0], basis[0])), rt(big.mul_words(basis[0], basis[1]))],
        [rt(big.mul_words(basis[1], basis[0])), rt(big.mul_words(basis[1], basis[1]))],
    ];
    let det = big.mul_words(gram[0][0], gram[1][1]) ^ big.mul_words(gram[0][1], gram[1][0]);
    let det_inv = big.inv_words(det).map_err(|_| Error::NotABasis)?;
    let inv = [
        [big.mul_words(det_inv, gram[1][1]), big.mul_words(det_inv, gram[0][1])],
        [big.mul_words(det_inv, gram[1][0]), big.mul_words(det_inv, gram[0][0])],
    ];
    let dual = [0, 1].map(|j| big.mul_words(inv[j][0], basis[0]) ^ big.mul_words(inv[j][1], basis[1]));
    let pairs = set
        .elements
        .iter()
        .map(|&d| {
            let c1 = sub.project(rt(big.mul_words(d, basis[0])))?;
            let c2 = sub.project(rt(big.mul_words(d, basis[1])))?;
            Ok((c1, c2))
        })
        .collect::<Result<Vec<_>>>()?;
    let code = code_from_pairs(sub.small(), &pairs)?;
    Ok(BivariateView { subfield: sub.small(), basis, dual, pairs, code })
}
