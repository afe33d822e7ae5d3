//! Arithmetic in binary extension fields GF(2^m), 1 <= m <= 20.
//!
//! An element is an m-bit word `b_{m-1} ... b_1 b_0` denoting `sum b_i alpha^i`,
//! where `alpha` is the class of `x` modulo the field's irreducible modulus.
//! The absolute trace is GF(2)-linear, so [`Field`] caches its values on the
//! polynomial basis and evaluates `Tr(a)` as a masked parity.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::error::{Error, Result};

pub const MAX_DEGREE: u32 = 20;

/// Lowest-weight, then numerically least, irreducible polynomial of each degree 1..=20.
pub const DEFAULT_MODULI: [u32; 20] = [
    0x2, 0x7, 0xb, 0x13, 0x25, 0x43, 0x83, 0x11b, 0x203, 0x409, 0x805, 0x1009, 0x201b, 0x4021,
    0x8003, 0x1002b, 0x20009, 0x40009, 0x80027, 0x100009,
];

/// Degree of a GF(2)[x] polynomial packed in a word; `None` for zero.
pub fn poly_degree(p: u64) -> Option<u32> {
    (p != 0).then(|| 63 - p.leading_zeros())
}

fn poly_mod(mut a: u64, p: u64) -> u64 {
    let dp = poly_degree(p).expect("zero modulus");
    while let Some(da) = poly_degree(a) {
        if da < dp {
            break;
        }
        a ^= p << (da - dp);
    }
    a
}

fn poly_mulmod(a: u64, b: u64, p: u64) -> u64 {
    let dp = poly_degree(p).expect("zero modulus");
    let mut a = poly_mod(a, p);
    let mut b = b;
    let mut r = 0u64;
    while b != 0 {
        if b & 1 == 1 {
            r ^= a;
        }
        b >>= 1;
        a <<= 1;
        if (a >> dp) & 1 == 1 {
            a ^= p;
        }
    }
    r
}

fn poly_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = poly_mod(a, b);
        a = b;
        b = r;
    }
    a
}

/// Rabin-style irreducibility test over GF(2) for polynomials of degree <= 62.
///
/// `p` of degree m is irreducible iff `x^(2^m) = x (mod p)` and
/// `gcd(x^(2^d) - x, p) = 1` for every proper divisor d of m.
pub fn is_irreducible(p: u64) -> bool {
    let Some(m) = poly_degree(p) else {
        return false;
    };
    if m == 0 {
        return false;
    }
    let x = poly_mod(0b10, p);
    let mut frob = x;
    let mut powers = Vec::with_capacity(m as usize);
    for _ in 0..m {
        frob = poly_mulmod(frob, frob, p);
        powers.push(frob);
    }
    if powers[m as usize - 1] != x {
        return false;
    }
    (1..m)
        .filter(|d| m % d == 0)
        .all(|d| poly_gcd(p, powers[d as usize - 1] ^ x) == 1)
}

/// Least irreducible polynomial of degree `m` in (weight, value) order.
pub fn search_default_modulus(m: u32) -> u64 {
    assert!((1..=31).contains(&m));
    let lo = 1u64 << m;
    (1..=m + 1)
        .find_map(|weight| {
            (lo..lo << 1)
                .filter(|c| c.count_ones() == weight)
                .find(|&c| is_irreducible(c))
        })
        .expect("irreducible polynomials exist in every degree")
}

/// Prime factors of `n`, ascending, without multiplicity.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The field GF(2^m) with a fixed irreducible modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Field {
    m: u32,
    modulus: u32,
    trace_mask: u32,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{}) mod {:#x}", self.m, self.modulus)
    }
}

/// Wire form of a field: `{"m": 3, "modulus": "b"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub m: u32,
    pub modulus: String,
}

impl Field {
    /// Builds GF(2^m); `modulus` defaults to the entry of [`DEFAULT_MODULI`].
    pub fn new(m: u32, modulus: Option<u32>) -> Result<Field> {
        if !(1..=MAX_DEGREE).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        let modulus = modulus.unwrap_or(DEFAULT_MODULI[m as usize - 1]);
        if poly_degree(modulus as u64) != Some(m) {
            return Err(Error::ModulusDegree { m, modulus });
        }
        if !is_irreducible(modulus as u64) {
            return Err(Error::ReducibleModulus(modulus));
        }
        let mut field = Field {
            m,
            modulus,
            trace_mask: 0,
        };
        field.trace_mask = (0..m)
            .filter(|&i| field.trace_by_conjugates(1 << i) == 1)
            .fold(0, |mask, i| mask | (1 << i));
        Ok(field)
    }

    pub fn default_for(m: u32) -> Result<Field> {
        Field::new(m, None)
    }

    pub fn from_spec(spec: &FieldSpec) -> Result<Field> {
        let modulus = u32::from_str_radix(spec.modulus.trim_start_matches("0x"), 16)
            .map_err(|e| Error::Parse(format!("modulus {:?}: {e}", spec.modulus)))?;
        Field::new(spec.m, Some(modulus))
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec {
            m: self.m,
            modulus: format!("{:x}", self.modulus),
        }
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.m
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of elements, 2^m.
    #[inline]
    pub fn size(&self) -> usize {
        1usize << self.m
    }

    /// Bit `i` set iff `Tr(alpha^i) = 1`.
    #[inline]
    pub fn trace_mask(&self) -> u32 {
        self.trace_mask
    }

    #[inline]
    pub fn contains(&self, value: u32) -> bool {
        value >> self.m == 0
    }

    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if !self.contains(value) {
            return Err(Error::NotAnElement { m: self.m, value });
        }
        Ok(FieldElement { field: *self, value })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { field: *self, value: 0 }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { field: *self, value: 1 }
    }

    /// The class of `x`; equals zero in GF(2) built on modulus `x`.
    pub fn generator(&self) -> FieldElement {
        FieldElement {
            field: *self,
            value: poly_mod(0b10, self.modulus as u64) as u32,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.size() as u32).map(move |value| FieldElement { field: *self, value })
    }

    /// Carry-less product reduced modulo the field modulus.
    #[inline]
    pub fn mul_words(&self, mut a: u32, mut b: u32) -> u32 {
        let top = 1u32 << self.m;
        let mut r = 0;
        while b != 0 {
            if b & 1 == 1 {
                r ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & top != 0 {
                a ^= self.modulus;
            }
        }
        r
    }

    #[inline]
    pub fn square_words(&self, a: u32) -> u32 {
        self.mul_words(a, a)
    }

    pub fn pow_words(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e != 0 {
            if e & 1 == 1 {
                acc = self.mul_words(acc, base);
            }
            base = self.square_words(base);
            e >>= 1;
        }
        acc
    }

    pub fn inv_words(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow_words(a, (1u64 << self.m) - 2))
    }

    /// Absolute trace `Tr(a)` as a masked parity.
    #[inline]
    pub fn trace_word(&self, a: u32) -> u32 {
        (a & self.trace_mask).count_ones() & 1
    }

    /// `sum_{i < count} a^(2^(step*i))`, the conjugate sum behind every trace map.
    pub fn conjugate_sum(&self, a: u32, step: u32, count: u32) -> u32 {
        let mut term = a;
        let mut acc = 0;
        for _ in 0..count {
            acc ^= term;
            for _ in 0..step {
                term = self.square_words(term);
            }
        }
        acc
    }

    /// Absolute trace computed from its definition `a + a^2 + ... + a^(2^(m-1))`.
    pub fn trace_by_conjugates(&self, a: u32) -> u32 {
        let t = self.conjugate_sum(a, 1, self.m);
        debug_assert!(t <= 1);
        t
    }

    /// Relative trace `Tr_{2^m/2^h}(a) = sum_{i < m/h} a^(2^(h i))`; the result lies in
    /// the subfield `{x : x^(2^h) = x}`.
    pub fn relative_trace_word(&self, a: u32, h: u32) -> Result<u32> {
        if h == 0 || self.m % h != 0 {
            return Err(Error::NotADivisor { h, m: self.m });
        }
        Ok(self.conjugate_sum(a, h, self.m / h))
    }

    /// Whether `a` lies in the subfield GF(2^h).
    pub fn in_subfield(&self, a: u32, h: u32) -> bool {
        let mut t = a;
        for _ in 0..h {
            t = self.square_words(t);
        }
        t == a
    }

    /// Multiplicative order of a nonzero element.
    pub fn order_word(&self, a: u32) -> Result<u64> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        let mut order = (1u64 << self.m) - 1;
        for p in prime_factors(order) {
            while order % p == 0 && self.pow_words(a, order / p) == 1 {
                order /= p;
            }
        }
        Ok(order)
    }

    /// Least element (by integer value) of multiplicative order exactly `n`.
    pub fn least_element_of_order(&self, n: u64) -> Option<u32> {
        if n == 0 || ((1u64 << self.m) - 1) % n != 0 {
            return None;
        }
        (1..self.size() as u32).find(|&a| self.order_word(a).ok() == Some(n))
    }

    /// Least primitive element.
    pub fn primitive_element(&self) -> u32 {
        self.least_element_of_order((1u64 << self.m) - 1)
            .expect("the multiplicative group is cyclic")
    }

    /// Evaluates a GF(2)[x] polynomial (packed word) at `a`.
    pub fn eval_poly(&self, poly: u64, a: u32) -> u32 {
        let Some(deg) = poly_degree(poly) else {
            return 0;
        };
        (0..=deg).rev().fold(0, |acc, i| {
            self.mul_words(acc, a) ^ ((poly >> i) & 1) as u32
        })
    }

    fn check(&self, value: u32) -> Result<u32> {
        if self.contains(value) {
            Ok(value)
        } else {
            Err(Error::NotAnElement { m: self.m, value })
        }
    }
}

/// An element of a [`Field`].
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: Field,
    value: u32,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}@GF(2^{})", self.value, self.field.m)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.value)
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.value.cmp(&other.value)
    }
}

impl FieldElement {
    #[inline]
    pub fn value(&self) -> u32 {
        self.value
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn to_hex(&self) -> String {
        format!("{:x}", self.value)
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(FieldElement { field: self.field, value: self.value ^ other.value })
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        let value = self.field.mul_words(self.value, other.value);
        Ok(FieldElement { field: self.field, value })
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(FieldElement {
            field: self.field,
            value: self.field.inv_words(self.value)?,
        })
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        FieldElement {
            field: self.field,
            value: self.field.pow_words(self.value, e),
        }
    }

    pub fn trace(&self) -> u32 {
        self.field.trace_word(self.value)
    }

    pub fn relative_trace(&self, h: u32) -> Result<FieldElement> {
        Ok(FieldElement {
            field: self.field,
            value: self.field.relative_trace_word(self.value, h)?,
        })
    }

    pub fn order(&self) -> Result<u64> {
        self.field.order_word(self.value)
    }
}

impl Add for FieldElement {
    type Output = FieldElement;

    fn add(self, rhs: FieldElement) -> FieldElement {
        self.checked_add(&rhs).expect("field mismatch in addition")
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;

    fn mul(self, rhs: FieldElement) -> FieldElement {
        self.checked_mul(&rhs).expect("field mismatch in multiplication")
    }
}

/// A basis of GF(2^m) over GF(2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Basis {
    field: Field,
    elements: Vec<u32>,
}

impl Basis {
    /// Checks that `elements` are m linearly independent field elements.
    pub fn new(field: Field, elements: Vec<u32>) -> Result<Basis> {
        for &e in &elements {
            field.check(e)?;
        }
        let words: Vec<u64> = elements.iter().map(|&e| e as u64).collect();
        if elements.len() != field.m as usize || bits::rank_small(&words) != elements.len() {
            return Err(Error::NotABasis);
        }
        Ok(Basis { field, elements })
    }

    /// `{1, alpha, ..., alpha^(m-1)}`.
    pub fn polynomial(field: Field) -> Basis {
        Basis {
            field,
            elements: (0..field.m).map(|i| 1 << i).collect(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    /// Gram matrix `G[i][j] = Tr(a_i a_j)` as row words.
    pub fn trace_gram(&self) -> Vec<u64> {
        self.elements
            .iter()
            .map(|&a| {
                self.elements
                    .iter()
                    .enumerate()
                    .fold(0u64, |row, (j, &b)| {
                        row | (self.field.trace_word(self.field.mul_words(a, b)) as u64) << j
                    })
            })
            .collect()
    }

    /// The trace-dual basis `{b_j}` with `Tr(a_i b_j) = delta_ij`.
    pub fn dual(&self) -> Basis {
        let inv = bits::invert_small(&self.trace_gram())
            .expect("trace form is nondegenerate on a basis");
        let elements = inv
            .iter()
            .map(|&row| {
                self.elements
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| (row >> k) & 1 == 1)
                    .fold(0, |acc, (_, &a)| acc ^ a)
            })
            .collect();
        Basis { field: self.field, elements }
    }

    /// Coordinates `c_i = Tr(x b_i)` of `x` in this basis, packed with `c_i` at bit i.
    pub fn coordinates_with_dual(&self, dual: &Basis, x: u32) -> u32 {
        dual.elements
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &b)| {
                acc | self.field.trace_word(self.field.mul_words(x, b)) << i
            })
    }

    /// Coordinates of `x`, one bit per basis element.
    pub fn coordinates(&self, x: &FieldElement) -> Result<Vec<bool>> {
        if x.field != self.field {
            return Err(Error::FieldMismatch);
        }
        let packed = self.coordinates_with_dual(&self.dual(), x.value);
        Ok((0..self.field.m).map(|i| (packed >> i) & 1 == 1).collect())
    }

    /// `sum c_i a_i`.
    pub fn recombine(&self, coords: &[bool]) -> FieldElement {
        let value = self
            .elements
            .iter()
            .zip(coords)
            .filter(|(_, &c)| c)
            .fold(0, |acc, (&a, _)| acc ^ a);
        FieldElement { field: self.field, value }
    }
}

/// The subfield GF(2^h) of GF(2^m) identified with the standalone default field GF(2^h).
///
/// The standalone generator is sent to the least element of the big field that is a
/// root of the standalone modulus; this fixes the isomorphism deterministically.
#[derive(Debug, Clone)]
pub struct Subfield {
    big: Field,
    small: Field,
    root: u32,
    to_big: Vec<u32>,
    from_big: HashMap<u32, u32>,
}

impl Subfield {
    pub fn new(big: Field, h: u32) -> Result<Subfield> {
        if h == 0 || big.m % h != 0 {
            return Err(Error::NotADivisor { h, m: big.m });
        }
        let small = Field::default_for(h)?;
        let root = (0..big.size() as u32)
            .find(|&b| big.eval_poly(small.modulus as u64, b) == 0)
            .expect("an irreducible polynomial of degree h | m splits in GF(2^m)");
        let powers: Vec<u32> = (0..h).scan(1u32, |p, _| {
            let cur = *p;
            *p = big.mul_words(*p, root);
            Some(cur)
        })
        .collect();
        let to_big: Vec<u32> = (0..small.size() as u32)
            .map(|c| {
                powers
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| (c >> i) & 1 == 1)
                    .fold(0, |acc, (_, &p)| acc ^ p)
            })
            .collect();
        let from_big = to_big.iter().enumerate().map(|(c, &b)| (b, c as u32)).collect();
        Ok(Subfield { big, small, root, to_big, from_big })
    }

    pub fn big(&self) -> Field {
        self.big
    }

    pub fn small(&self) -> Field {
        self.small
    }

    /// Image of the standalone generator inside the big field.
    pub fn root(&self) -> u32 {
        self.root
    }

    pub fn embed(&self, small_value: u32) -> u32 {
        self.to_big[small_value as usize]
    }

    pub fn project(&self, big_value: u32) -> Result<u32> {
        self.from_big
            .get(&big_value)
            .copied()
            .ok_or(Error::NotInSubfield(big_value))
    }
}

/// Parses a lowercase (or uppercase) hex field element.
pub fn parse_hex_word(s: &str) -> Result<u32> {
    u32::from_str_radix(s.trim_start_matches("0x"), 16)
        .map_err(|e| Error::Parse(format!("hex element {s:?}: {e}")))
}
