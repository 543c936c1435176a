//! Monic integer polynomials standing in for characteristic polynomials of
//! homology actions.

pub mod arith;
pub(crate) mod perron;

pub use perron::{compare_perron, perron_root, render_decimal, PerronData};

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// Monic polynomial with integer coefficients, stored ascending by power.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        let coeffs = arith::trim(coeffs);
        match coeffs.last() {
            None => Err(Error::Invalid("zero polynomial".into())),
            Some(c) if !c.is_one() => Err(Error::Invalid(format!("polynomial is not monic (leading coefficient {c})"))),
            _ => Ok(Self { coeffs }),
        }
    }

    pub fn from_ascending(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_descending(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().rev().map(|&c| BigInt::from(c)).collect())
    }

    /// Reciprocal polynomial of even degree from its first half: `head` is
    /// `[a_1, ..., a_g]` where `a_i` multiplies `x^(2g - i)`.
    pub fn reciprocal_from_head(head: &[i64]) -> Self {
        let g = head.len();
        let mut full = vec![0i64; 2 * g + 1];
        full[0] = 1;
        full[2 * g] = 1;
        for i in 1..=g {
            full[i] = head[i - 1];
            full[2 * g - i] = head[i - 1];
        }
        Self::from_descending(&full).expect("monic by construction")
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Ascending coefficients as machine integers, when they fit.
    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }

    pub fn is_reciprocal(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Monic normalisation of P(-x).
    pub fn negate_variable(&self) -> Self {
        let mut c = arith::negate_arg(&self.coeffs);
        if self.degree() % 2 == 1 {
            for x in c.iter_mut() {
                *x = -&*x;
            }
        }
        Self { coeffs: c }
    }

    pub fn trace_sequence(&self, m: usize) -> TraceSequence {
        let p = arith::power_sums(&self.coeffs, m);
        TraceSequence { values: p[1..].to_vec() }
    }

    /// L_m = 2 - p_m for m = 1..M.
    pub fn lefschetz_numbers(&self, m: usize) -> Vec<BigInt> {
        self.trace_sequence(m).values.into_iter().map(|p| BigInt::from(2) - p).collect()
    }

    /// The unique Q with x^g Q(x + 1/x) = P for reciprocal P of degree 2g.
    pub fn trace_reduction(&self) -> Result<Self> {
        if self.degree() % 2 == 1 {
            return Err(Error::Invalid("trace reduction needs even degree".into()));
        }
        if !self.is_reciprocal() {
            return Err(Error::Invalid("trace reduction needs a reciprocal polynomial".into()));
        }
        let g = self.degree() / 2;
        let mut rest = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); g + 1];
        // x^(g-k) (x^2 + 1)^k has its top coefficient at x^(g+k).
        for k in (0..=g).rev() {
            let c = rest[g + k].clone();
            if c.is_zero() {
                continue;
            }
            let mut binom = BigInt::one();
            for j in 0..=k {
                rest[g - k + 2 * j] -= &c * &binom;
                binom = binom * BigInt::from(k - j) / BigInt::from(j + 1);
            }
            q[k] = c;
        }
        if rest.iter().any(|c| !c.is_zero()) {
            return Err(Error::Internal("trace reduction left a remainder".into()));
        }
        Self::new(q)
    }

    /// x^g Q(x + 1/x) for a monic Q of degree g.
    pub fn expand_trace_polynomial(&self) -> Self {
        let g = self.degree();
        let mut out = vec![BigInt::zero(); 2 * g + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            let mut binom = BigInt::one();
            for j in 0..=k {
                out[g - k + 2 * j] += c * &binom;
                binom = binom * BigInt::from(k - j) / BigInt::from(j + 1);
            }
        }
        Self::new(out).expect("monic by construction")
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self { coeffs: arith::mul(&self.coeffs, &other.coeffs) }
    }

    /// Human-readable form such as `x^4-2x^3-2x+1`.
    pub fn pretty(&self) -> String {
        self.to_string()
    }
}

/// Power sums p_1..p_M of the roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceSequence {
    pub values: Vec<BigInt>,
}

impl TraceSequence {
    pub fn horizon(&self) -> usize {
        self.values.len()
    }

    /// p_m for 1-based m.
    pub fn get(&self, m: usize) -> &BigInt {
        &self.values[m - 1]
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    /// Accepts `x^4-2*x^3-2x+1` style text or a JSON-like ascending array
    /// `[1,-2,0,-2,1]`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with('[') {
            return parse_array(t);
        }
        parse_terms(t)
    }
}

fn parse_array(t: &str) -> Result<IntPolynomial> {
    if !t.ends_with(']') {
        return Err(Error::parse(t.len(), "expected ']'"));
    }
    let inner = &t[1..t.len() - 1];
    let mut coeffs = Vec::new();
    let mut offset = 1;
    for part in inner.split(',') {
        let v = part.trim();
        let c = BigInt::from_str(v).map_err(|_| Error::parse(offset, format!("bad integer '{v}'")))?;
        coeffs.push(c);
        offset += part.len() + 1;
    }
    IntPolynomial::new(coeffs)
}

fn parse_terms(t: &str) -> Result<IntPolynomial> {
    let chars: Vec<char> = t.chars().collect();
    let mut pos = 0;
    let mut terms: Vec<(usize, BigInt)> = Vec::new();
    let skip_ws = |pos: &mut usize| {
        while *pos < chars.len() && chars[*pos].is_whitespace() {
            *pos += 1;
        }
    };
    let read_uint = |pos: &mut usize| -> Option<String> {
        let start = *pos;
        while *pos < chars.len() && chars[*pos].is_ascii_digit() {
            *pos += 1;
        }
        (*pos > start).then(|| chars[start..*pos].iter().collect())
    };
    skip_ws(&mut pos);
    if pos == chars.len() {
        return Err(Error::parse(0, "empty polynomial"));
    }
    let mut first = true;
    while pos < chars.len() {
        skip_ws(&mut pos);
        let mut sign = BigInt::one();
        if pos < chars.len() && (chars[pos] == '+' || chars[pos] == '-') {
            if chars[pos] == '-' {
                sign = -sign;
            }
            pos += 1;
            skip_ws(&mut pos);
        } else if !first {
            return Err(Error::parse(pos, "expected '+' or '-'"));
        }
        first = false;
        let term_start = pos;
        let mut coeff = None;
        if let Some(digits) = read_uint(&mut pos) {
            coeff = Some(BigInt::from_str(&digits).expect("digits"));
            skip_ws(&mut pos);
            if pos < chars.len() && chars[pos] == '*' {
                pos += 1;
                skip_ws(&mut pos);
            }
        }
        let mut power = 0usize;
        if pos < chars.len() && (chars[pos] == 'x' || chars[pos] == 'X') {
            pos += 1;
            power = 1;
            skip_ws(&mut pos);
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                skip_ws(&mut pos);
                let digits = read_uint(&mut pos).ok_or_else(|| Error::parse(pos, "expected exponent"))?;
                power = digits.parse().map_err(|_| Error::parse(pos, "exponent too large"))?;
            }
        } else if coeff.is_none() {
            return Err(Error::parse(term_start, "expected a term"));
        }
        let c = coeff.unwrap_or_else(BigInt::one) * sign;
        terms.push((power, c));
        skip_ws(&mut pos);
    }
    let deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
    let mut coeffs = vec![BigInt::zero(); deg + 1];
    for (p, c) in terms {
        coeffs[p] += c;
    }
    IntPolynomial::new(coeffs)
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v = self.to_i64_vec().ok_or_else(|| serde::ser::Error::custom("coefficient exceeds 64 bits"))?;
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<i64>::deserialize(d)?;
        IntPolynomial::from_ascending(&v).map_err(serde::de::Error::custom)
    }
}
