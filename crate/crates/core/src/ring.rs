//! The five ring alphabets, their hexadecimal codec, Gray maps and Lee weights.
//!
//! Every element is stored as a 4-bit code. Bit `i` of the code is the
//! coefficient of the `i`-th additive basis element:
//!
//! | ring              | bit 0 | bit 1 | bit 2 | bit 3 |
//! |-------------------|-------|-------|-------|-------|
//! | `F2`              | 1     |       |       |       |
//! | `F2+uF2`          | 1     | u     |       |       |
//! | `F2+uF2+vF2+uvF2` | 1     | u     | v     | uv    |
//! | `F4`              | 1     | ω     |       |       |
//! | `F4+uF4`          | 1     | ω     | u     | ωu    |
//!
//! so the code written as a hex digit is exactly the usual table notation
//! (`9` in `F2+uF2+vF2+uvF2` is `1+uv`, `6` in `F4+uF4` is `ω+u`).
//! Addition is XOR of codes in all five rings.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RingId {
    /// The binary field.
    F2,
    /// `F2[u]/<u^2>`, order 4.
    F2U,
    /// `F2[u,v]/<u^2, v^2, uv+vu>`, order 16.
    R16UV,
    /// `F2[ω]/<ω^2+ω+1>`, order 4.
    F4,
    /// `F4[u]/<u^2>`, order 16.
    F4U,
}

impl RingId {
    pub const ALL: [RingId; 5] = [RingId::F2, RingId::F2U, RingId::R16UV, RingId::F4, RingId::F4U];

    pub const fn order(self) -> usize {
        match self {
            RingId::F2 => 2,
            RingId::F2U | RingId::F4 => 4,
            RingId::R16UV | RingId::F4U => 16,
        }
    }

    /// Number of binary coordinates one ring coordinate expands to under the Gray map.
    pub const fn gray_expansion(self) -> usize {
        match self {
            RingId::F2 => 1,
            RingId::F2U | RingId::F4 => 2,
            RingId::R16UV | RingId::F4U => 4,
        }
    }

    /// An additive basis of the ring over `F2`, as element codes.
    ///
    /// Multiplying a ring-linear generator row by each of these gives a
    /// spanning set of its binary image.
    pub const fn module_basis(self) -> &'static [u8] {
        match self {
            RingId::F2 => &[1],
            RingId::F2U | RingId::F4 => &[1, 2],
            RingId::R16UV | RingId::F4U => &[1, 2, 4, 8],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RingId::F2 => "F2",
            RingId::F2U => "F2+uF2",
            RingId::R16UV => "F2+uF2+vF2+uvF2",
            RingId::F4 => "F4",
            RingId::F4U => "F4+uF4",
        }
    }

    /// Short tag used in the catalog and on the command line.
    pub fn tag(self) -> &'static str {
        match self {
            RingId::F2 => "F2",
            RingId::F2U => "F2U",
            RingId::R16UV => "R16UV",
            RingId::F4 => "F4",
            RingId::F4U => "F4U",
        }
    }

    pub(crate) fn tables(self) -> &'static Tables {
        &TABLES[self as usize]
    }

    pub fn zero(self) -> RingElement {
        RingElement { ring: self, code: 0 }
    }

    pub fn one(self) -> RingElement {
        RingElement { ring: self, code: 1 }
    }

    pub fn elements(self) -> impl Iterator<Item = RingElement> {
        (0..self.order() as u8).map(move |code| RingElement { ring: self, code })
    }

    /// All `x` with `x * x = 1`, found by scanning the ring.
    pub fn involutory_units(self) -> Vec<RingElement> {
        self.elements().filter(|x| x.is_involutory()).collect()
    }

    /// All units, found by scanning for a multiplicative inverse.
    pub fn units(self) -> Vec<RingElement> {
        self.elements().filter(|x| self.elements().any(|y| x.mul_unchecked(y).code == 1)).collect()
    }
}

impl fmt::Display for RingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RingId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_ascii_uppercase();
        Ok(match key.as_str() {
            "F2" => RingId::F2,
            "F2U" | "F2+UF2" => RingId::F2U,
            "R16UV" | "F2UV" | "F2+UF2+VF2+UVF2" => RingId::R16UV,
            "F4" => RingId::F4,
            "F4U" | "F4+UF4" => RingId::F4U,
            _ => return Err(Error::Parse(format!("unknown ring {s:?}"))),
        })
    }
}

/// Addition, multiplication and negation tables for one ring, indexed by code.
#[derive(Debug)]
pub(crate) struct Tables {
    pub add: [[u8; 16]; 16],
    pub mul: [[u8; 16]; 16],
    pub neg: [u8; 16],
    /// Gray image of a single element: one bit per output block.
    pub gray: [[u8; 4]; 16],
}

impl Tables {
    #[inline(always)]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize][b as usize]
    }

    #[inline(always)]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize][b as usize]
    }

    #[inline(always)]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }
}

#[derive(Clone, Copy)]
enum Base {
    F2,
    F2U,
    F4,
}

const fn bit(x: u8, i: u8) -> u8 {
    (x >> i) & 1
}

const fn mul_f2u(a: u8, b: u8) -> u8 {
    // (a0 + a1 u)(b0 + b1 u), u^2 = 0
    let c0 = bit(a, 0) & bit(b, 0);
    let c1 = (bit(a, 0) & bit(b, 1)) ^ (bit(a, 1) & bit(b, 0));
    c0 | (c1 << 1)
}

const fn mul_f4(a: u8, b: u8) -> u8 {
    // (a0 + a1 w)(b0 + b1 w), w^2 = w + 1
    let hi = bit(a, 1) & bit(b, 1);
    let c0 = (bit(a, 0) & bit(b, 0)) ^ hi;
    let c1 = (bit(a, 0) & bit(b, 1)) ^ (bit(a, 1) & bit(b, 0)) ^ hi;
    c0 | (c1 << 1)
}

const fn mul_base(base: Base, a: u8, b: u8) -> u8 {
    match base {
        Base::F2 => a & b & 1,
        Base::F2U => mul_f2u(a, b),
        Base::F4 => mul_f4(a, b),
    }
}

/// `(p + q t)(p' + q' t) = pp' + (pq' + qp') t` with `t^2 = 0`, where the low
/// two bits of a code hold `p` and the high two bits hold `q`.
const fn mul_square_zero(base: Base, a: u8, b: u8) -> u8 {
    let (p, q) = (a & 3, a >> 2);
    let (r, s) = (b & 3, b >> 2);
    let lo = mul_base(base, p, r);
    let hi = mul_base(base, p, s) ^ mul_base(base, q, r);
    lo | (hi << 2)
}

const fn ring_mul(ring: RingId, a: u8, b: u8) -> u8 {
    match ring {
        RingId::F2 => mul_base(Base::F2, a, b),
        RingId::F2U => mul_base(Base::F2U, a, b),
        RingId::F4 => mul_base(Base::F4, a, b),
        RingId::R16UV => mul_square_zero(Base::F2U, a, b),
        RingId::F4U => mul_square_zero(Base::F4, a, b),
    }
}

/// Per-element bits of the composed Gray map into `F2`, one per output block.
///
/// * `F2+uF2`: `a + bu -> (b, a+b)`.
/// * `F4`: `aω + b(1+ω) -> (a, b)`; for `x = x0 + x1 ω` that is `a = x0+x1`, `b = x0`.
/// * `F2+uF2+vF2+uvF2`: `a + bv -> (b, a+b)` over `F2+uF2`, then the `F2+uF2` map.
/// * `F4+uF4`: `aω + b(1+ω) -> (a, b)` over `F2+uF2`, then the `F2+uF2` map.
const fn gray_bits(ring: RingId, x: u8) -> [u8; 4] {
    let (e0, e1, e2, e3) = (bit(x, 0), bit(x, 1), bit(x, 2), bit(x, 3));
    match ring {
        RingId::F2 => [e0, 0, 0, 0],
        RingId::F2U => [e1, e0 ^ e1, 0, 0],
        RingId::F4 => [e0 ^ e1, e0, 0, 0],
        RingId::R16UV => {
            // a = e0 + e1 u, b = e2 + e3 u; (b, a+b) then (u-part, const+u-part)
            let (b0, b1) = (e2, e3);
            let (s0, s1) = (e0 ^ e2, e1 ^ e3);
            [b1, s1, b0 ^ b1, s0 ^ s1]
        }
        RingId::F4U => {
            // x = P + Q ω with P = e0 + e2 u, Q = e1 + e3 u; a = P + Q, b = P
            let (a0, a1) = (e0 ^ e1, e2 ^ e3);
            let (b0, b1) = (e0, e2);
            [a1, b1, a0 ^ a1, b0 ^ b1]
        }
    }
}

const fn build_tables(ring: RingId) -> Tables {
    let order = ring.order();
    let mut add = [[0u8; 16]; 16];
    let mut mul = [[0u8; 16]; 16];
    let mut neg = [0u8; 16];
    let mut gray = [[0u8; 4]; 16];
    let mut a = 0;
    while a < order {
        let mut b = 0;
        while b < order {
            add[a][b] = (a ^ b) as u8;
            mul[a][b] = ring_mul(ring, a as u8, b as u8);
            b += 1;
        }
        gray[a] = gray_bits(ring, a as u8);
        a += 1;
    }
    // negation read off the addition table
    let mut x = 0;
    while x < order {
        let mut y = 0;
        while y < order {
            if add[x][y] == 0 {
                neg[x] = y as u8;
            }
            y += 1;
        }
        x += 1;
    }
    Tables { add, mul, neg, gray }
}

static TABLES: [Tables; 5] = [
    build_tables(RingId::F2),
    build_tables(RingId::F2U),
    build_tables(RingId::R16UV),
    build_tables(RingId::F4),
    build_tables(RingId::F4U),
];

const HEX: &[u8; 16] = b"0123456789ABCDEF";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingElement {
    ring: RingId,
    code: u8,
}

impl RingElement {
    pub fn new(ring: RingId, code: u8) -> Result<Self> {
        if (code as usize) < ring.order() {
            Ok(RingElement { ring, code })
        } else {
            Err(Error::InvalidArgument(format!("code {code} out of range for {ring}")))
        }
    }

    pub fn from_symbol(ring: RingId, symbol: char) -> Result<Self> {
        symbol
            .to_digit(16)
            .map(|d| d as u8)
            .filter(|&d| (d as usize) < ring.order())
            .map(|code| RingElement { ring, code })
            .ok_or(Error::InvalidSymbol { ring, symbol, position: 0 })
    }

    pub fn ring(self) -> RingId {
        self.ring
    }

    pub fn code(self) -> u8 {
        self.code
    }

    pub fn symbol(self) -> char {
        HEX[self.code as usize] as char
    }

    fn same_ring(self, other: RingElement) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch { left: self.ring, right: other.ring })
        }
    }

    pub fn try_add(self, other: RingElement) -> Result<RingElement> {
        self.same_ring(other)?;
        Ok(RingElement { ring: self.ring, code: self.ring.tables().add(self.code, other.code) })
    }

    pub fn try_mul(self, other: RingElement) -> Result<RingElement> {
        self.same_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(self, other: RingElement) -> RingElement {
        RingElement { ring: self.ring, code: self.ring.tables().mul(self.code, other.code) }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> RingElement {
        RingElement { ring: self.ring, code: self.ring.tables().neg(self.code) }
    }

    pub fn square(self) -> RingElement {
        self.mul_unchecked(self)
    }

    pub fn is_zero(self) -> bool {
        self.code == 0
    }

    pub fn is_involutory(self) -> bool {
        self.square().code == 1
    }

    pub(crate) fn require_involutory(self) -> Result<()> {
        if self.is_involutory() {
            Ok(())
        } else {
            Err(Error::NotInvolutory { ring: self.ring, code: self.code })
        }
    }

    /// Gray image bits of this single element.
    pub fn gray_bits(self) -> Vec<u8> {
        let g = &self.ring.tables().gray[self.code as usize];
        g[..self.ring.gray_expansion()].to_vec()
    }

    pub fn lee_weight(self) -> u32 {
        self.gray_bits().iter().map(|&b| b as u32).sum()
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A vector over one of the five rings, stored as element codes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingVector {
    ring: RingId,
    codes: Vec<u8>,
}

impl RingVector {
    pub fn new(ring: RingId, codes: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = codes.iter().find(|&&c| c as usize >= ring.order()) {
            return Err(Error::InvalidArgument(format!("code {bad} out of range for {ring}")));
        }
        Ok(RingVector { ring, codes })
    }

    pub(crate) fn from_codes_unchecked(ring: RingId, codes: Vec<u8>) -> Self {
        RingVector { ring, codes }
    }

    pub fn from_elements(ring: RingId, elems: &[RingElement]) -> Result<Self> {
        for e in elems {
            if e.ring != ring {
                return Err(Error::RingMismatch { left: ring, right: e.ring });
            }
        }
        Ok(RingVector { ring, codes: elems.iter().map(|e| e.code).collect() })
    }

    pub fn zero(ring: RingId, n: usize) -> Self {
        RingVector { ring, codes: vec![0; n] }
    }

    /// The vector with a single `1` in position `k`.
    pub fn unit(ring: RingId, n: usize, k: usize) -> Self {
        let mut codes = vec![0; n];
        codes[k] = 1;
        RingVector { ring, codes }
    }

    /// Decode hex text such as `(957)`; the parentheses are optional.
    pub fn parse(ring: RingId, text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let body = trimmed
            .strip_prefix('(')
            .map(|s| s.strip_suffix(')').ok_or_else(|| Error::Parse(format!("unbalanced parentheses in {text:?}"))))
            .transpose()?
            .unwrap_or(trimmed);
        if body.is_empty() {
            return Err(Error::Parse("empty vector".into()));
        }
        let mut codes = Vec::with_capacity(body.len());
        for (position, symbol) in body.chars().enumerate() {
            let e =
                RingElement::from_symbol(ring, symbol).map_err(|_| Error::InvalidSymbol { ring, symbol, position })?;
            codes.push(e.code);
        }
        Ok(RingVector { ring, codes })
    }

    /// Encode as parenthesised hex text, e.g. `(957)`.
    pub fn to_hex(&self) -> String {
        let mut s = String::with_capacity(self.codes.len() + 2);
        s.push('(');
        s.extend(self.codes.iter().map(|&c| HEX[c as usize] as char));
        s.push(')');
        s
    }

    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn codes(&self) -> &[u8] {
        &self.codes
    }

    pub fn get(&self, i: usize) -> RingElement {
        RingElement { ring: self.ring, code: self.codes[i] }
    }

    pub fn iter(&self) -> impl Iterator<Item = RingElement> + '_ {
        self.codes.iter().map(|&code| RingElement { ring: self.ring, code })
    }

    pub fn is_zero(&self) -> bool {
        self.codes.iter().all(|&c| c == 0)
    }

    fn check_compatible(&self, other: &RingVector) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch { left: self.ring, right: other.ring });
        }
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: other.len() });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &RingVector) -> Result<RingVector> {
        self.check_compatible(other)?;
        let t = self.ring.tables();
        let codes = self.codes.iter().zip(&other.codes).map(|(&a, &b)| t.add(a, b)).collect();
        Ok(RingVector { ring: self.ring, codes })
    }

    pub fn scale(&self, s: RingElement) -> Result<RingVector> {
        if s.ring != self.ring {
            return Err(Error::RingMismatch { left: self.ring, right: s.ring });
        }
        let t = self.ring.tables();
        Ok(RingVector { ring: self.ring, codes: self.codes.iter().map(|&a| t.mul(s.code, a)).collect() })
    }

    /// Euclidean inner product `sum x_i y_i`.
    pub fn inner_product(&self, other: &RingVector) -> Result<RingElement> {
        self.check_compatible(other)?;
        Ok(RingElement { ring: self.ring, code: dot(self.ring.tables(), &self.codes, &other.codes) })
    }

    /// Binary image under the composed Gray map, as 0/1 bytes.
    ///
    /// The image is a concatenation of whole blocks of length `n` (e.g. `(b, a+b)`
    /// for `a + bu`), not an interleaving per coordinate.
    pub fn gray_image(&self) -> Vec<u8> {
        let n = self.len();
        let m = self.ring.gray_expansion();
        let gray = &self.ring.tables().gray;
        let mut out = vec![0u8; n * m];
        for (i, &c) in self.codes.iter().enumerate() {
            for block in 0..m {
                out[block * n + i] = gray[c as usize][block];
            }
        }
        out
    }

    pub fn lee_weight(&self) -> u32 {
        self.gray_image().iter().map(|&b| b as u32).sum()
    }
}

impl fmt::Display for RingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

#[inline]
pub(crate) fn dot(t: &Tables, x: &[u8], y: &[u8]) -> u8 {
    x.iter().zip(y).fold(0u8, |acc, (&a, &b)| t.add(acc, t.mul(a, b)))
}

pub(crate) fn gray_pack(ring: RingId, codes: &[u8]) -> Result<u128> {
    let n = codes.len();
    let m = ring.gray_expansion();
    if n * m > 128 {
        return Err(Error::InvalidArgument(format!("binary length {} exceeds 128", n * m)));
    }
    let gray = &ring.tables().gray;
    let mut word = 0u128;
    for (i, &c) in codes.iter().enumerate() {
        for (block, &bit) in gray[c as usize][..m].iter().enumerate() {
            word |= (bit as u128) << (block * n + i);
        }
    }
    Ok(word)
}
