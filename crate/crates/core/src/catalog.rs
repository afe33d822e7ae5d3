//! Constructors for classical binary code families, with the cyclic-code
//! machinery (cyclotomic cosets, minimal polynomials, BCH and quadratic-residue
//! generator polynomials) they need.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::bits::BitRow;
use crate::error::{Error, Result};
use crate::gf2::{Field, FieldElement, MAX_DEGREE};
use crate::defining_set::{code_from_defining_set, DefiningSet};
use crate::linear_code::{dual, BinaryCode};

/// Polynomial over GF(2), coefficient of `x^i` at bit `i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly2 {
    words: Vec<u64>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2 { words: Vec::new() }
    }

    pub fn one() -> Self {
        Poly2::from_word(1)
    }

    pub fn from_word(word: u64) -> Self {
        let mut p = Poly2 { words: vec![word] };
        p.normalize();
        p
    }

    pub fn from_exponents(exponents: &[usize]) -> Self {
        let mut p = Poly2::zero();
        for &e in exponents {
            p.flip(e);
        }
        p
    }

    /// `x^n + 1`.
    pub fn x_n_minus_one(n: usize) -> Self {
        Poly2::from_exponents(&[0, n])
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    fn flip(&mut self, i: usize) {
        if self.words.len() <= i / 64 {
            self.words.resize(i / 64 + 1, 0);
        }
        self.words[i / 64] ^= 1 << (i % 64);
        self.normalize();
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        let top = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    pub fn exponents(&self) -> Vec<usize> {
        (0..=self.degree().map_or(0, |d| d + 1)).filter(|&i| self.coeff(i)).collect()
    }

    pub fn mul(&self, other: &Poly2) -> Poly2 {
        let (Some(da), Some(db)) = (self.degree(), other.degree()) else {
            return Poly2::zero();
        };
        let mut out = Poly2 { words: vec![0; (da + db) / 64 + 1] };
        for i in (0..=da).filter(|&i| self.coeff(i)) {
            for j in (0..=db).filter(|&j| other.coeff(j)) {
                out.words[(i + j) / 64] ^= 1 << ((i + j) % 64);
            }
        }
        out.normalize();
        out
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, divisor: &Poly2) -> (Poly2, Poly2) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = Poly2::zero();
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let shift = dr - dd;
            quot.flip(shift);
            for e in divisor.exponents() {
                rem.flip(e + shift);
            }
        }
        (quot, rem)
    }

    pub fn divides(&self, other: &Poly2) -> bool {
        other.div_rem(self).1.is_zero()
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .exponents()
            .into_iter()
            .rev()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                e => format!("x^{e}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly2({self})")
    }
}

/// Orbit of a residue under multiplication by 2 modulo `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicCoset {
    pub n: u32,
    pub leader: u32,
    /// Ascending.
    pub members: Vec<u32>,
}

fn check_odd_modulus(n: u32) -> Result<()> {
    if n % 2 == 0 || !(3..=4095).contains(&n) {
        return Err(Error::InvalidParameter(format!("modulus {n} must be odd and in 3..=4095")));
    }
    Ok(())
}

pub fn cyclotomic_cosets(n: u32) -> Result<Vec<CyclotomicCoset>> {
    check_odd_modulus(n)?;
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start as usize] {
            continue;
        }
        let mut members = Vec::new();
        let mut r = start;
        while !seen[r as usize] {
            seen[r as usize] = true;
            members.push(r);
            r = (2 * r) % n;
        }
        members.sort_unstable();
        out.push(CyclotomicCoset { n, leader: start, members });
    }
    Ok(out)
}

/// Multiplicative order of 2 modulo odd `n`.
pub fn order_of_two(n: u32) -> u32 {
    assert!(n % 2 == 1);
    if n == 1 {
        return 1;
    }
    let mut r = 2 % n;
    let mut k = 1;
    while r != 1 {
        r = (2 * r) % n;
        k += 1;
    }
    k
}

/// `prod_{c conjugate of a} (x - c)`, which has binary coefficients.
pub fn minimal_polynomial(element: &FieldElement) -> Poly2 {
    let field = element.field();
    let mut conjugates = vec![element.value()];
    loop {
        let next = field.square_words(*conjugates.last().expect("nonempty"));
        if next == conjugates[0] {
            break;
        }
        conjugates.push(next);
    }
    let coeffs = product_of_linear_factors(field, &conjugates);
    binary_poly(&coeffs).expect("conjugacy-class products are fixed by Frobenius")
}

/// Coefficients (low degree first) of `prod (x - r)` in GF(2^m).
fn product_of_linear_factors(field: Field, roots: &[u32]) -> Vec<u32> {
    let mut coeffs = vec![1u32];
    for &r in roots {
        let mut next = vec![0u32; coeffs.len() + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            next[i + 1] ^= c;
            next[i] ^= field.mul_words(c, r);
        }
        coeffs = next;
    }
    coeffs
}

fn binary_poly(coeffs: &[u32]) -> Option<Poly2> {
    if coeffs.iter().any(|&c| c > 1) {
        return None;
    }
    let exps: Vec<usize> = coeffs.iter().enumerate().filter(|(_, &c)| c == 1).map(|(i, _)| i).collect();
    Some(Poly2::from_exponents(&exps))
}

/// Splitting field of `x^n - 1` and its least element of order `n`.
fn nth_root_of_unity(n: u32) -> Result<(Field, u32)> {
    let m = order_of_two(n);
    if m > MAX_DEGREE {
        return Err(Error::InvalidParameter(format!(
            "x^{n} - 1 splits in GF(2^{m}); only m <= {MAX_DEGREE} is supported"
        )));
    }
    let field = Field::default_for(m)?;
    let gamma = field
        .least_element_of_order(n as u64)
        .expect("n divides 2^m - 1, so an element of order n exists");
    Ok((field, gamma))
}

/// Cyclic code generated by `g`: rows are `x^i g(x)` for `i < n - deg g`.
pub fn cyclic_code(n: usize, generator: &Poly2) -> Result<BinaryCode> {
    let deg = generator.degree().ok_or_else(|| Error::InvalidParameter("zero generator".into()))?;
    if deg >= n {
        return Err(Error::InvalidParameter(format!("generator degree {deg} >= length {n}")));
    }
    let rows = (0..n - deg)
        .map(|shift| {
            let mut row = BitRow::zeros(n);
            for e in generator.exponents() {
                row.set(e + shift, true);
            }
            row
        })
        .collect();
    BinaryCode::from_generator(rows)
}

/// Narrow-sense BCH generator: lcm of the minimal polynomials of `g^1 .. g^(delta-1)`.
pub fn bch_generator_polynomial(n: u32, designed_distance: u32) -> Result<Poly2> {
    check_odd_modulus(n)?;
    if !(2..=n).contains(&designed_distance) {
        return Err(Error::InvalidParameter(format!("designed distance {designed_distance} not in 2..={n}")));
    }
    let (field, gamma) = nth_root_of_unity(n)?;
    let cosets = cyclotomic_cosets(n)?;
    let leaders: BTreeSet<u32> = (1..designed_distance)
        .map(|i| cosets.iter().find(|c| c.members.contains(&i)).expect("cosets partition").leader)
        .collect();
    Ok(leaders.into_iter().fold(Poly2::one(), |g, leader| {
        let root = field.element(field.pow_words(gamma, leader as u64)).expect("element");
        g.mul(&minimal_polynomial(&root))
    }))
}

pub fn bch_code(n: u32, designed_distance: u32) -> Result<BinaryCode> {
    cyclic_code(n as usize, &bch_generator_polynomial(n, designed_distance)?)
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Nonzero squares modulo prime `n`, ascending.
pub fn quadratic_residues(n: u32) -> Vec<u32> {
    (1..n).map(|i| (i * i) % n).collect::<BTreeSet<_>>().into_iter().collect()
}

/// `prod_{r in QR(n)} (x - g^r)`.
pub fn qr_generator_polynomial(n: u32) -> Result<Poly2> {
    if !is_prime(n) || n > 127 || !(n % 8 == 1 || n % 8 == 7) {
        return Err(Error::InvalidParameter(format!(
            "quadratic residue codes need a prime n <= 127 with n = +-1 mod 8, got {n}"
        )));
    }
    let (field, gamma) = nth_root_of_unity(n)?;
    let roots: Vec<u32> = quadratic_residues(n).iter().map(|&r| field.pow_words(gamma, r as u64)).collect();
    Ok(binary_poly(&product_of_linear_factors(field, &roots)).expect("QR set is closed under squaring"))
}

pub fn quadratic_residue_code(n: u32) -> Result<BinaryCode> {
    cyclic_code(n as usize, &qr_generator_polynomial(n)?)
}

/// The [23, 12, 7] Golay code, as the quadratic residue code of length 23.
pub fn golay23() -> BinaryCode {
    quadratic_residue_code(23).expect("23 is a valid QR length")
}

/// Golay code with an overall parity bit: [24, 12, 8].
pub fn extended_golay24() -> BinaryCode {
    golay23().extend_with_parity()
}

fn simplex_columns(k: u32, skip_one: bool) -> BinaryCode {
    let n = (1u32 << k) - 1;
    let columns: Vec<u32> = (1..=n).filter(|&c| !(skip_one && c == 1)).collect();
    let rows = (0..k)
        .map(|i| BitRow::from_bits(&columns.iter().map(|c| (c >> i) & 1 == 1).collect::<Vec<_>>()))
        .collect();
    BinaryCode::from_generator(rows).expect("nonempty")
}

/// [2^k - 1, k, 2^(k-1)]; column j is the integer j + 1 in binary (row i = bit i).
pub fn simplex(k: u32) -> Result<BinaryCode> {
    if !(2..=20).contains(&k) {
        return Err(Error::InvalidParameter(format!("simplex dimension {k} not in 2..=20")));
    }
    Ok(simplex_columns(k, false))
}

/// Simplex code with the column for the integer 1 deleted: [2^k - 2, k, 2^(k-1) - 1].
pub fn macdonald_punctured_simplex(k: u32) -> Result<BinaryCode> {
    if !(3..=20).contains(&k) {
        return Err(Error::InvalidParameter(format!("MacDonald dimension {k} not in 3..=20")));
    }
    Ok(simplex_columns(k, true))
}

/// [2^m - 1, 2^m - 1 - m, 3]: the null space of the simplex generator.
pub fn hamming(m: u32) -> Result<BinaryCode> {
    if !(3..=12).contains(&m) {
        return Err(Error::InvalidParameter(format!("Hamming redundancy {m} not in 3..=12")));
    }
    Ok(dual(&simplex_columns(m, false)))
}

/// Monomial masks of degree <= `order` in `m` variables, by degree then value.
pub fn reed_muller_monomials(order: u32, m: u32) -> Vec<u32> {
    let mut monomials: Vec<u32> = (0..1u32 << m).filter(|u| u.count_ones() <= order).collect();
    monomials.sort_by_key(|&u| (u.count_ones(), u));
    monomials
}

/// RM(order, m): evaluations over GF(2)^m of all monomials of degree <= order.
pub fn reed_muller(order: u32, m: u32) -> Result<BinaryCode> {
    if !(1 <= order && order < m && m <= 12) {
        return Err(Error::InvalidParameter(format!("Reed-Muller needs 1 <= l < m <= 12, got l={order}, m={m}")));
    }
    let rows = reed_muller_monomials(order, m)
        .into_iter()
        .map(|u| BitRow::from_bits(&(0..1u32 << m).map(|x| x & u == u).collect::<Vec<_>>()))
        .collect();
    BinaryCode::from_generator(rows)
}

/// Irreducible cyclic code with defining set `{g^(N i) : 0 <= i < (2^m - 1)/N}`, g primitive.
pub fn irreducible_cyclic(m: u32, big_n: u32) -> Result<(BinaryCode, DefiningSet)> {
    let field = Field::default_for(m)?;
    let order = (1u32 << m) - 1;
    if big_n == 0 || order % big_n != 0 {
        return Err(Error::InvalidParameter(format!("N = {big_n} does not divide 2^{m} - 1")));
    }
    let base = field.pow_words(field.primitive_element(), big_n as u64);
    let elements: Vec<u32> = (0..order / big_n)
        .scan(1u32, |p, _| {
            let cur = *p;
            *p = field.mul_words(*p, base);
            Some(cur)
        })
        .collect();
    let set = DefiningSet::new(field, elements)?;
    Ok((code_from_defining_set(&set), set))
}

/// A catalog code named as on the command line, e.g. `bch:n=15,d=5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogCode {
    Simplex { k: u32 },
    MacDonald { k: u32 },
    Hamming { m: u32 },
    ReedMuller { l: u32, m: u32 },
    Bch { n: u32, d: u32 },
    QuadraticResidue { n: u32 },
    Golay23,
    Golay24,
    IrreducibleCyclic { m: u32, n: u32 },
}

impl CatalogCode {
    pub fn build(&self) -> Result<BinaryCode> {
        match *self {
            CatalogCode::Simplex { k } => simplex(k),
            CatalogCode::MacDonald { k } => macdonald_punctured_simplex(k),
            CatalogCode::Hamming { m } => hamming(m),
            CatalogCode::ReedMuller { l, m } => reed_muller(l, m),
            CatalogCode::Bch { n, d } => bch_code(n, d),
            CatalogCode::QuadraticResidue { n } => quadratic_residue_code(n),
            CatalogCode::Golay23 => Ok(golay23()),
            CatalogCode::Golay24 => Ok(extended_golay24()),
            CatalogCode::IrreducibleCyclic { m, n } => irreducible_cyclic(m, n).map(|(c, _)| c),
        }
    }

    /// `[n, k, d]` where a closed formula is known for the family.
    pub fn expected_parameters(&self) -> Option<(usize, usize, usize)> {
        match *self {
            CatalogCode::Simplex { k } => Some(((1 << k) - 1, k as usize, 1 << (k - 1))),
            CatalogCode::MacDonald { k } => Some(((1 << k) - 2, k as usize, (1 << (k - 1)) - 1)),
            CatalogCode::Hamming { m } => Some(((1 << m) - 1, (1 << m) - 1 - m as usize, 3)),
            CatalogCode::ReedMuller { l, m } => {
                let k = (0..=l).map(|i| binomial(m, i)).sum();
                Some((1 << m, k, 1 << (m - l)))
            }
            CatalogCode::Golay23 => Some((23, 12, 7)),
            CatalogCode::Golay24 => Some((24, 12, 8)),
            _ => None,
        }
    }
}

fn binomial(n: u32, k: u32) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (n - i) as usize / (i + 1) as usize)
}

impl fmt::Display for CatalogCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogCode::Simplex { k } => write!(f, "simplex:k={k}"),
            CatalogCode::MacDonald { k } => write!(f, "macdonald:k={k}"),
            CatalogCode::Hamming { m } => write!(f, "hamming:m={m}"),
            CatalogCode::ReedMuller { l, m } => write!(f, "rm:l={l},m={m}"),
            CatalogCode::Bch { n, d } => write!(f, "bch:n={n},d={d}"),
            CatalogCode::QuadraticResidue { n } => write!(f, "qr:n={n}"),
            CatalogCode::Golay23 => f.write_str("golay23"),
            CatalogCode::Golay24 => f.write_str("golay24"),
            CatalogCode::IrreducibleCyclic { m, n } => write!(f, "irrcyclic:m={m},N={n}"),
        }
    }
}

impl FromStr for CatalogCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let mut params: Vec<(&str, u32)> = Vec::new();
        for part in args.split(',').filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value in {part:?}")))?;
            let value = value
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer in {part:?}")))?;
            params.push((key.trim(), value));
        }
        let get = |key: &str| {
            params
                .iter()
                .find(|(k, _)| *k == key)
                .map(|&(_, v)| v)
                .ok_or_else(|| Error::Parse(format!("{name} needs parameter {key}")))
        };
        let expect_keys = |keys: &[&str]| {
            match params.iter().find(|(k, _)| !keys.contains(k)) {
                Some((k, _)) => Err(Error::Parse(format!("unknown parameter {k} for {name}"))),
                None => Ok(()),
            }
        };
        let spec = match name {
            "simplex" => {
                expect_keys(&["k"])?;
                CatalogCode::Simplex { k: get("k")? }
            }
            "macdonald" => {
                expect_keys(&["k"])?;
                CatalogCode::MacDonald { k: get("k")? }
            }
            "hamming" => {
                expect_keys(&["m"])?;
                CatalogCode::Hamming { m: get("m")? }
            }
            "rm" => {
                expect_keys(&["l", "m"])?;
                CatalogCode::ReedMuller { l: get("l")?, m: get("m")? }
            }
            "bch" => {
                expect_keys(&["n", "d"])?;
                CatalogCode::Bch { n: get("n")?, d: get("d")? }
            }
            "qr" => {
                expect_keys(&["n"])?;
                CatalogCode::QuadraticResidue { n: get("n")? }
            }
            "golay23" => {
                expect_keys(&[])?;
                CatalogCode::Golay23
            }
            "golay24" => {
                expect_keys(&[])?;
                CatalogCode::Golay24
            }
            "irrcyclic" => {
                expect_keys(&["m", "N"])?;
                CatalogCode::IrreducibleCyclic { m: get("m")?, n: get("N")? }
            }
            other => return Err(Error::Parse(format!("unknown code family {other:?}"))),
        };
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear_code::{codes_equal, is_projective, minimum_distance, weight_distribution_bruteforce};
    use std::collections::BTreeMap;

    fn dist(c: &BinaryCode) -> BTreeMap<usize, u64> {
        weight_distribution_bruteforce(c, 24).unwrap().to_map()
    }

    #[test]
    fn simplex_examples() {
        let s2 = simplex(2).unwrap();
        assert_eq!((s2.len(), s2.dimension()), (3, 2));
        assert_eq!(dist(&s2), BTreeMap::from([(0, 1), (2, 3)]));
        assert_eq!(dist(&simplex(3).unwrap()), BTreeMap::from([(0, 1), (4, 7)]));
        for k in 2..=8 {
            assert!(is_projective(&simplex(k).unwrap()));
        }
        assert!(simplex(1).is_err());
        assert!(simplex(21).is_err());
    }

    #[test]
    fn macdonald_examples() {
        let c = macdonald_punctured_simplex(3).unwrap();
        assert_eq!((c.len(), c.dimension(), minimum_distance(&c, 24).unwrap()), (6, 3, 3));
        assert_eq!(weight_distribution_bruteforce(&c, 24).unwrap().nonzero_weights(), vec![3, 4]);
        let c = macdonald_punctured_simplex(4).unwrap();
        assert_eq!((c.len(), c.dimension(), minimum_distance(&c, 24).unwrap()), (14, 4, 7));
        assert!(macdonald_punctured_simplex(2).is_err());
    }

    #[test]
    fn any_single_puncture_gives_the_same_distribution() {
        for k in 3..=6 {
            let s = simplex(k).unwrap();
            let reference = dist(&s.puncture(0).unwrap());
            for j in 0..s.len() {
                assert_eq!(dist(&s.puncture(j).unwrap()), reference, "k={k}, j={j}");
            }
            assert_eq!(dist(&macdonald_punctured_simplex(k).unwrap()), reference);
        }
    }

    #[test]
    fn hamming_examples() {
        let h = hamming(3).unwrap();
        assert_eq!((h.len(), h.dimension()), (7, 4));
        assert_eq!(dist(&h), BTreeMap::from([(0, 1), (3, 7), (4, 7), (7, 1)]));
        assert!(is_projective(&h));
        assert_eq!(minimum_distance(&dual(&h), 24).unwrap(), 4);
        let h4 = hamming(4).unwrap();
        assert_eq!((h4.len(), h4.dimension(), minimum_distance(&h4, 24).unwrap()), (15, 11, 3));
    }

    #[test]
    fn reed_muller_examples() {
        let rm = reed_muller(1, 3).unwrap();
        assert_eq!((rm.len(), rm.dimension()), (8, 4));
        assert_eq!(dist(&rm), BTreeMap::from([(0, 1), (4, 14), (8, 1)]));
        for m in 2..=6 {
            let c = reed_muller(m - 1, m).unwrap();
            assert_eq!(c.dimension(), (1 << m) - 1);
            assert!(c.rows().iter().all(|r| r.weight() % 2 == 0));
        }
        let rm14 = reed_muller(1, 4).unwrap();
        assert_eq!((rm14.len(), rm14.dimension(), minimum_distance(&rm14, 24).unwrap()), (16, 5, 8));
        assert!(reed_muller(3, 3).is_err());
    }

    #[test]
    fn coset_examples() {
        let sets = |n| -> Vec<Vec<u32>> { cyclotomic_cosets(n).unwrap().into_iter().map(|c| c.members).collect() };
        assert_eq!(sets(7), vec![vec![0], vec![1, 2, 4], vec![3, 5, 6]]);
        assert_eq!(
            sets(15),
            vec![vec![0], vec![1, 2, 4, 8], vec![3, 6, 9, 12], vec![5, 10], vec![7, 11, 13, 14]]
        );
        for n in (3..200).step_by(2) {
            let cs = cyclotomic_cosets(n).unwrap();
            assert_eq!(cs[0].members, vec![0]);
            assert_eq!(cs.iter().map(|c| c.members.len()).sum::<usize>(), n as usize);
            for c in &cs {
                assert_eq!(c.leader, c.members[0]);
                assert!(c.members.iter().all(|&r| c.members.contains(&((2 * r) % n))));
            }
        }
        assert!(cyclotomic_cosets(8).is_err());
    }

    #[test]
    fn minimal_polynomial_examples() {
        let f8 = Field::default_for(3).unwrap();
        assert_eq!(minimal_polynomial(&f8.one()), Poly2::from_word(0b11));
        assert_eq!(minimal_polynomial(&f8.generator()), Poly2::from_word(0b1011));
        assert_eq!(minimal_polynomial(&f8.zero()), Poly2::from_word(0b10));
        for m in 1..=8 {
            let f = Field::default_for(m).unwrap();
            for a in f.elements() {
                let p = minimal_polynomial(&a);
                let deg = p.degree().unwrap() as u32;
                assert_eq!(m % deg, 0);
                let word = p.exponents().iter().fold(0u64, |acc, &e| acc | 1 << e);
                assert_eq!(f.eval_poly(word, a.value()), 0);
                assert!(crate::gf2::is_irreducible(word));
            }
        }
    }

    #[test]
    fn bch_examples() {
        let g = bch_generator_polynomial(15, 5).unwrap();
        assert_eq!(g, Poly2::from_exponents(&[8, 7, 6, 4, 0]));
        assert_eq!(g.to_string(), "x^8 + x^7 + x^6 + x^4 + 1");
        let c = bch_code(15, 5).unwrap();
        assert_eq!((c.len(), c.dimension(), minimum_distance(&c, 24).unwrap()), (15, 7, 5));
        let c = bch_code(7, 3).unwrap();
        assert_eq!((c.len(), c.dimension(), minimum_distance(&c, 24).unwrap()), (7, 4, 3));
        for n in [7u32, 15, 31, 63] {
            let m = order_of_two(n) as usize;
            assert_eq!(bch_code(n, 2).unwrap().dimension(), n as usize - m);
        }
        assert!(bch_code(14, 3).is_err());
        assert!(bch_code(15, 1).is_err());
    }

    #[test]
    fn generators_divide_x_n_minus_one() {
        for (n, d) in [(7, 3), (15, 3), (15, 5), (15, 7), (31, 5), (31, 11), (63, 9), (21, 5)] {
            let g = bch_generator_polynomial(n, d).unwrap();
            assert!(g.divides(&Poly2::x_n_minus_one(n as usize)), "bch {n},{d}");
            let c = bch_code(n, d).unwrap();
            if c.dimension() <= 20 {
                assert!(minimum_distance(&c, 24).unwrap() >= d as usize);
            }
        }
        for n in [7u32, 17, 23, 31, 41, 73, 89, 127] {
            let g = qr_generator_polynomial(n).unwrap();
            assert!(g.divides(&Poly2::x_n_minus_one(n as usize)), "qr {n}");
            assert_eq!(g.degree(), Some((n as usize - 1) / 2));
        }
    }

    #[test]
    fn qr_examples() {
        let c = quadratic_residue_code(7).unwrap();
        assert_eq!((c.len(), c.dimension(), minimum_distance(&c, 24).unwrap()), (7, 4, 3));
        let c = quadratic_residue_code(17).unwrap();
        assert_eq!((c.len(), c.dimension(), minimum_distance(&c, 24).unwrap()), (17, 9, 5));
        assert!(codes_equal(&quadratic_residue_code(23).unwrap(), &golay23()).unwrap());
        assert!(quadratic_residue_code(13).is_err());
        assert!(quadratic_residue_code(15).is_err());
        assert!(quadratic_residue_code(47).is_err());
    }

    #[test]
    fn golay_examples() {
        let g = golay23();
        assert_eq!((g.len(), g.dimension(), minimum_distance(&g, 24).unwrap()), (23, 12, 7));
        assert!(is_projective(&g));
        let e = extended_golay24();
        let d = weight_distribution_bruteforce(&e, 24).unwrap();
        assert!(d.nonzero_weights().iter().all(|w| w % 4 == 0));
        assert_eq!(d.minimum_distance(), Some(8));
        assert!(codes_equal(&dual(&e), &e).unwrap());
        assert!(is_projective(&e));
    }

    #[test]
    fn irreducible_cyclic_examples() {
        let (c, set) = irreducible_cyclic(3, 1).unwrap();
        assert_eq!(set.len(), 7);
        assert_eq!(dist(&c), BTreeMap::from([(0, 1), (4, 7)]));
        // sorting the defining set recovers the simplex column order
        let mut sorted = set.elements().to_vec();
        sorted.sort_unstable();
        let sorted_code = code_from_defining_set(&DefiningSet::new(set.field(), sorted).unwrap());
        let reference = code_from_defining_set(&DefiningSet::new(set.field(), (1..8).collect()).unwrap());
        assert!(codes_equal(&sorted_code, &reference).unwrap());

        let (c, _) = irreducible_cyclic(4, 3).unwrap();
        assert_eq!(c.len(), 5);
        assert_eq!(dist(&c).values().sum::<u64>(), 1 << c.dimension());
        let (c, _) = irreducible_cyclic(4, 5).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(dist(&c), BTreeMap::from([(0, 1), (2, 3)]));
        assert!(irreducible_cyclic(4, 4).is_err());
    }

    #[test]
    fn parse_names() {
        for s in ["simplex:k=3", "golay23", "golay24", "bch:n=15,d=5", "rm:l=1,m=4", "qr:n=17", "hamming:m=3", "macdonald:k=4", "irrcyclic:m=4,N=3"] {
            let c: CatalogCode = s.parse().unwrap();
            assert_eq!(c.to_string(), s);
            assert!(c.build().is_ok());
        }
        assert!("simplex".parse::<CatalogCode>().is_err());
        assert!("simplex:k=x".parse::<CatalogCode>().is_err());
        assert!("simplex:q=3".parse::<CatalogCode>().is_err());
        assert!("nope:k=3".parse::<CatalogCode>().is_err());
        assert!("simplex:k=0".parse::<CatalogCode>().unwrap().build().is_err());
    }

    #[test]
    fn poly_arithmetic() {
        let a = Poly2::from_word(0b1011);
        let b = Poly2::from_word(0b11111);
        let p = a.mul(&b);
        let (q, r) = p.div_rem(&a);
        assert_eq!((q, r.is_zero()), (b, true));
        let long = Poly2::x_n_minus_one(200);
        assert_eq!(long.degree(), Some(200));
        assert!(Poly2::from_word(0b11).divides(&long));
    }
}
