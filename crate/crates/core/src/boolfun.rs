//! Boolean functions GF(2^m) -> GF(2) as truth tables, with Walsh spectra,
//! algebraic normal form and spectral classification.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::BitRow;
use crate::error::{Error, Result};
use crate::gf2::{Basis, Field, FieldElement};

/// Largest m accepted by [`walsh_transform_naive`].
pub const NAIVE_WALSH_LIMIT: u32 = 12;

/// A truth table indexed by the integer encoding of `x`.
#[derive(Clone, PartialEq, Eq)]
pub struct BooleanFunction {
    field: Field,
    table: BitRow,
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BooleanFunction(m={}, {})", self.field.degree(), self.to_hex())
    }
}

impl BooleanFunction {
    pub fn from_table(field: Field, table: BitRow) -> Result<Self> {
        if table.len() != field.size() {
            return Err(Error::TableLength { m: field.degree(), len: table.len() });
        }
        Ok(BooleanFunction { field, table })
    }

    pub fn from_fn(field: Field, mut f: impl FnMut(u32) -> bool) -> Self {
        let mut table = BitRow::zeros(field.size());
        for x in 0..field.size() as u32 {
            if f(x) {
                table.set(x as usize, true);
            }
        }
        BooleanFunction { field, table }
    }

    pub fn zero(field: Field) -> Self {
        BooleanFunction { field, table: BitRow::zeros(field.size()) }
    }

    /// Characteristic function of a set of field elements.
    pub fn from_support(field: Field, support: &[FieldElement]) -> Result<Self> {
        let mut table = BitRow::zeros(field.size());
        for d in support {
            if d.field() != field {
                return Err(Error::FieldMismatch);
            }
            let i = d.value() as usize;
            if table.get(i) {
                return Err(Error::DuplicateElement(d.value()));
            }
            table.set(i, true);
        }
        Ok(BooleanFunction { field, table })
    }

    /// `x -> Tr(coeff * x^exponent)`.
    pub fn trace_power(field: Field, coeff: u32, exponent: u64) -> Self {
        Self::from_fn(field, |x| {
            field.trace_word(field.mul_words(coeff, field.pow_words(x, exponent))) == 1
        })
    }

    /// `x -> Tr_{2^h/2}(x^(2^h + 1))` on GF(2^(2h)); the norm `x^(2^h+1)` lies in GF(2^h),
    /// so the outer trace is the one of that subfield. This is a bent function.
    pub fn subfield_trace_of_norm(field: Field) -> Result<Self> {
        let m = field.degree();
        if m % 2 != 0 {
            return Err(Error::OddDegree(m));
        }
        let h = m / 2;
        Ok(Self::from_fn(field, |x| {
            let norm = field.pow_words(x, (1u64 << h) + 1);
            field.conjugate_sum(norm, 1, h) == 1
        }))
    }

    pub fn random<R: Rng + ?Sized>(field: Field, rng: &mut R) -> Self {
        Self::from_fn(field, |_| rng.gen::<bool>())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn num_vars(&self) -> u32 {
        self.field.degree()
    }

    pub fn table(&self) -> &BitRow {
        &self.table
    }

    #[inline]
    pub fn eval(&self, x: u32) -> bool {
        self.table.get(x as usize)
    }

    /// Support size `n_f`.
    pub fn weight(&self) -> usize {
        self.table.weight()
    }

    /// Support in ascending integer order.
    pub fn support(&self) -> Vec<FieldElement> {
        (0..self.field.size() as u32)
            .filter(|&x| self.eval(x))
            .map(|x| self.field.element(x).expect("index is an element"))
            .collect()
    }

    /// Hex truth table: character `j` holds `f(4j) .. f(4j+3)`, `f(4j)` in the low bit.
    pub fn to_hex(&self) -> String {
        (0..self.field.size().div_ceil(4))
            .map(|j| {
                let nibble = (0..4)
                    .filter(|&b| 4 * j + b < self.field.size() && self.table.get(4 * j + b))
                    .fold(0u32, |acc, b| acc | 1 << b);
                char::from_digit(nibble, 16).expect("nibble")
            })
            .collect()
    }

    pub fn from_hex(field: Field, hex: &str) -> Result<Self> {
        let size = field.size();
        if hex.len() != size.div_ceil(4) {
            return Err(Error::Parse(format!(
                "truth table for m = {} needs {} hex digits, got {}",
                field.degree(),
                size.div_ceil(4),
                hex.len()
            )));
        }
        let mut table = BitRow::zeros(size);
        for (j, c) in hex.chars().enumerate() {
            let nibble = c
                .to_digit(16)
                .ok_or_else(|| Error::Parse(format!("bad hex digit {c:?}")))?;
            for b in 0..4 {
                if (nibble >> b) & 1 == 1 {
                    if 4 * j + b >= size {
                        return Err(Error::Parse("bits set beyond the table".into()));
                    }
                    table.set(4 * j + b, true);
                }
            }
        }
        Ok(BooleanFunction { field, table })
    }

    pub fn walsh_transform(&self) -> WalshSpectrum {
        walsh_transform(self)
    }

    pub fn anf(&self) -> Anf {
        anf(self)
    }
}

/// The values `W_f(w) = sum_x (-1)^(f(x) + Tr(wx))` for every `w`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WalshSpectrum {
    values: Vec<i32>,
}

impl WalshSpectrum {
    pub fn values(&self) -> &[i32] {
        &self.values
    }

    pub fn at(&self, w: u32) -> i32 {
        self.values[w as usize]
    }

    pub fn max_abs(&self) -> u32 {
        self.values.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0)
    }

    /// Each spectrum value with its multiplicity.
    pub fn histogram(&self) -> BTreeMap<i32, u64> {
        let mut h = BTreeMap::new();
        for &v in &self.values {
            *h.entry(v).or_insert(0) += 1;
        }
        h
    }

    /// `sum_w W(w)^2`.
    pub fn energy(&self) -> u64 {
        self.values.iter().map(|&v| (v as i64 * v as i64) as u64).sum()
    }
}

/// Standard in-place fast Walsh-Hadamard transform, `S[u] = sum_x s[x] (-1)^(u.x)`.
fn fwht_in_place(data: &mut [i32]) {
    const BLOCK: usize = 1 << 12;
    let n = data.len();
    let small = n.min(BLOCK);
    let local = |block: &mut [i32]| {
        let mut h = 1;
        while h < block.len() {
            for chunk in block.chunks_mut(2 * h) {
                let (lo, hi) = chunk.split_at_mut(h);
                for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                    let (x, y) = (*a, *b);
                    *a = x + y;
                    *b = x - y;
                }
            }
            h *= 2;
        }
    };
    if n <= BLOCK {
        local(data);
        return;
    }
    data.par_chunks_mut(small).for_each(local);
    let mut h = small;
    while h < n {
        for chunk in data.chunks_mut(2 * h) {
            let (lo, hi) = chunk.split_at_mut(h);
            lo.par_iter_mut().zip(hi.par_iter_mut()).for_each(|(a, b)| {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            });
        }
        h *= 2;
    }
}

/// Fast Walsh transform over GF(2^m) in `O(m 2^m)`.
///
/// `Tr(wx) = x . (T w)` where `T[i][j] = Tr(alpha^i alpha^j)`, so the field transform is
/// the standard Hadamard transform read at the index `T w`.
pub fn walsh_transform(f: &BooleanFunction) -> WalshSpectrum {
    let field = f.field;
    let size = field.size();
    let mut data: Vec<i32> = (0..size).map(|x| if f.table.get(x) { -1 } else { 1 }).collect();
    fwht_in_place(&mut data);
    // column j of T is the packed word u(e_j); u is linear in w
    let gram = Basis::polynomial(field).trace_gram();
    let columns: Vec<u32> = (0..field.degree())
        .map(|j| {
            gram.iter()
                .enumerate()
                .fold(0u32, |acc, (i, row)| acc | (((row >> j) & 1) as u32) << i)
        })
        .collect();
    let mut index = vec![0u32; size];
    for w in 1..size {
        let low = w.trailing_zeros() as usize;
        index[w] = index[w & (w - 1)] ^ columns[low];
    }
    let values = index.iter().map(|&u| data[u as usize]).collect();
    WalshSpectrum { values }
}

/// Direct `O(4^m)` evaluation of the Walsh transform from its definition.
pub fn walsh_transform_naive(f: &BooleanFunction) -> Result<WalshSpectrum> {
    let field = f.field;
    if field.degree() > NAIVE_WALSH_LIMIT {
        return Err(Error::TooLarge { m: field.degree(), limit: NAIVE_WALSH_LIMIT });
    }
    let size = field.size() as u32;
    let values = (0..size)
        .map(|w| {
            (0..size)
                .map(|x| {
                    let e = f.eval(x) as u32 ^ field.trace_word(field.mul_words(w, x));
                    if e == 0 { 1 } else { -1 }
                })
                .sum()
        })
        .collect();
    Ok(WalshSpectrum { values })
}

/// Algebraic normal form in the coordinates of the polynomial basis: coefficient
/// index `u` is the monomial `prod_{i in u} x_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Anf {
    num_vars: u32,
    coefficients: BitRow,
}

impl Anf {
    pub fn coefficients(&self) -> &BitRow {
        &self.coefficients
    }

    /// Monomials present, each as its variable mask.
    pub fn monomials(&self) -> Vec<u32> {
        (0..self.coefficients.len() as u32)
            .filter(|&u| self.coefficients.get(u as usize))
            .collect()
    }

    /// Algebraic degree; the zero function is reported as degree 0.
    pub fn degree(&self) -> u32 {
        self.monomials().into_iter().map(u32::count_ones).max().unwrap_or(0)
    }

    pub fn eval(&self, x: u32) -> bool {
        self.monomials().into_iter().filter(|&u| u & x == u).count() % 2 == 1
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }
}

/// Binary Moebius transform of the truth table.
pub fn anf(f: &BooleanFunction) -> Anf {
    let size = f.field.size();
    let mut coeffs: Vec<u8> = (0..size).map(|x| f.table.get(x) as u8).collect();
    let mut h = 1;
    while h < size {
        for chunk in coeffs.chunks_mut(2 * h) {
            let (lo, hi) = chunk.split_at_mut(h);
            for (a, b) in lo.iter().zip(hi.iter_mut()) {
                *b ^= a;
            }
        }
        h *= 2;
    }
    let bits: Vec<bool> = coeffs.into_iter().map(|c| c == 1).collect();
    Anf { num_vars: f.field.degree(), coefficients: BitRow::from_bits(&bits) }
}

/// `2^(m-1) - max_w |W(w)| / 2`.
pub fn nonlinearity(f: &BooleanFunction) -> u32 {
    nonlinearity_from_spectrum(f.field.degree(), &walsh_transform(f))
}

pub fn nonlinearity_from_spectrum(m: u32, spectrum: &WalshSpectrum) -> u32 {
    (1u32 << m >> 1) - spectrum.max_abs() / 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectralClass {
    Bent,
    Affine,
    Balanced,
    Plateaued,
    General,
}

impl fmt::Display for SpectralClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpectralClass::Bent => "bent",
            SpectralClass::Affine => "affine",
            SpectralClass::Balanced => "balanced",
            SpectralClass::Plateaued => "plateaued",
            SpectralClass::General => "general",
        })
    }
}

/// Label plus the raw facts it was derived from.
///
/// The label takes the first matching class in the order affine, bent, plateaued,
/// balanced, general; `balanced` and `amplitude` are reported independently.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub class: SpectralClass,
    pub balanced: bool,
    /// The single nonzero `|W(w)|` when the spectrum is three-valued `{0, +-c}`.
    pub amplitude: Option<u32>,
    pub histogram: BTreeMap<i32, u64>,
}

pub fn classify(f: &BooleanFunction) -> Classification {
    classify_spectrum(f.field.degree(), &walsh_transform(f))
}

pub fn classify_spectrum(m: u32, spectrum: &WalshSpectrum) -> Classification {
    let full = 1u32 << m;
    let balanced = spectrum.at(0) == 0;
    let mut nonzero = spectrum.values.iter().filter(|&&v| v != 0).map(|v| v.unsigned_abs());
    let first = nonzero.next();
    let amplitude = first.filter(|&c| nonzero.all(|v| v == c));
    let bent = m % 2 == 0 && spectrum.values.iter().all(|v| v.unsigned_abs() == 1 << (m / 2));
    let class = if spectrum.max_abs() == full {
        SpectralClass::Affine
    } else if bent {
        SpectralClass::Bent
    } else if amplitude.is_some() {
        SpectralClass::Plateaued
    } else if balanced {
        SpectralClass::Balanced
    } else {
        SpectralClass::General
    };
    Classification { class, balanced, amplitude, histogram: spectrum.histogram() }
}
