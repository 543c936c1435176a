//! Lists of reciprocal Perron polynomials below a bound.
//!
//! The pruned search walks the power sums p_1..p_g of a degree-2g reciprocal
//! polynomial. Every root pair z, 1/z with modulus in [1/B, B] contributes at
//! most B^m + B^-m to |p_m|, and the Perron pair contributes more than 2, so
//! each p_m lives in a short integer window; Newton's identities turn the
//! power sums back into coefficients.

mod cache;

pub use cache::{cache_file_name, load_or_compute, CacheDocument, CACHE_FORMAT_VERSION};

use crate::error::{Error, Result};
use crate::polynomial::{perron_root, IntPolynomial, PerronData};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Pruned,
    BruteForceOracle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationQuery {
    pub degree: usize,
    pub bound: IntPolynomial,
    pub mode: Mode,
}

impl EnumerationQuery {
    pub fn new(degree: usize, bound: IntPolynomial) -> Self {
        Self { degree, bound, mode: Mode::Pruned }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialList {
    pub query: EnumerationQuery,
    pub entries: Vec<IntPolynomial>,
    pub count: usize,
}

impl PolynomialList {
    fn new(query: EnumerationQuery, mut entries: Vec<IntPolynomial>) -> Self {
        entries.sort();
        entries.dedup();
        let count = entries.len();
        Self { query, entries, count }
    }
}

/// Largest degree the coefficient-box scan accepts.
pub const ORACLE_MAX_DEGREE: usize = 8;

/// Integer windows derived from a rational upper bound on the bound's root.
#[derive(Clone, Debug)]
struct Windows {
    g: usize,
    /// lo[m], hi[m] for m = 1..=horizon; index 0 unused.
    lo: Vec<i64>,
    hi: Vec<i64>,
    /// |a_k| <= coeff_box[k] for k = 1..=g.
    coeff_box: Vec<i64>,
}

fn extended_horizon(g: usize) -> usize {
    4 * g + 4
}

impl Windows {
    fn new(g: usize, upper: &BigRational) -> Result<Self> {
        let horizon = extended_horizon(g);
        let inv = upper.recip();
        let gq = BigRational::from_integer(BigInt::from(g as i64));
        let g1 = BigRational::from_integer(BigInt::from(g as i64 - 1));
        let two = BigRational::from_integer(BigInt::from(2));
        let mut lo = vec![0i64; horizon + 1];
        let mut hi = vec![0i64; horizon + 1];
        let mut up = BigRational::one();
        let mut down = BigRational::one();
        for m in 1..=horizon {
            up = &up * upper;
            down = &down * &inv;
            let v = &up + &down;
            let h = (&gq * &v).floor().to_integer();
            let l = (&two - &g1 * &v).ceil().to_integer();
            hi[m] = h.to_i64().ok_or_else(|| Error::Invalid("bound too large".into()))?;
            lo[m] = l.to_i64().ok_or_else(|| Error::Invalid("bound too large".into()))?;
        }
        // (x^2 + T x + 1)^g with T = upper + 1/upper dominates every
        // coefficient of a product of g factors x^2 - t x + 1 with |t| <= T.
        let t = upper + &inv;
        let mut poly = vec![BigRational::one()];
        for _ in 0..g {
            let mut next = vec![BigRational::zero(); poly.len() + 2];
            for (i, c) in poly.iter().enumerate() {
                next[i] += c;
                next[i + 1] += c * &t;
                next[i + 2] += c;
            }
            poly = next;
        }
        let mut coeff_box = vec![0i64; g + 1];
        for k in 1..=g {
            coeff_box[k] =
                poly[k].floor().to_integer().to_i64().ok_or_else(|| Error::Invalid("bound too large".into()))?;
        }
        Ok(Self { g, lo, hi, coeff_box })
    }

    fn horizon(&self) -> usize {
        self.lo.len() - 1
    }

    /// Checks p_m windows for m = 1..=horizon on full reciprocal coefficients
    /// `a` (a[k] multiplies x^(2g-k), a[0] = 1).
    fn power_sums_admissible(&self, a: &[i64]) -> bool {
        let n = 2 * self.g;
        let h = self.horizon();
        let mut p = [0i128; 64];
        debug_assert!(h < 64);
        for m in 1..=h {
            let mut s: i128 = 0;
            let top = (m - 1).min(n);
            for i in 1..=top {
                s += a[i] as i128 * p[m - i];
            }
            if m <= n {
                s += m as i128 * a[m] as i128;
            }
            let pm = -s;
            if pm < self.lo[m] as i128 || pm > self.hi[m] as i128 {
                return false;
            }
            p[m] = pm;
        }
        true
    }
}

/// Certified bound data shared by both search modes.
struct BoundInfo {
    poly: IntPolynomial,
    data: PerronData,
    windows: Windows,
}

fn bound_info(degree: usize, bound: &IntPolynomial) -> Result<BoundInfo> {
    if degree == 0 || degree % 2 == 1 {
        return Err(Error::Invalid(format!("degree must be even and positive, got {degree}")));
    }
    let data = perron_root(bound)?
        .filter(|d| d.is_perron)
        .ok_or_else(|| Error::Invalid(format!("bound {bound} has no Perron root")))?;
    let data = data.refined(bound, 1 << 20)?;
    let windows = Windows::new(degree / 2, &data.upper)?;
    Ok(BoundInfo { poly: bound.clone(), data, windows })
}

/// Exact membership test at a leaf.
fn accept(full_desc: &[i64], info: &BoundInfo) -> Result<Option<IntPolynomial>> {
    if !info.windows.power_sums_admissible(full_desc) {
        return Ok(None);
    }
    let poly = IntPolynomial::from_descending(full_desc)?;
    let Some(d) = perron_root(&poly)? else { return Ok(None) };
    if !d.is_perron {
        return Ok(None);
    }
    let ord = crate::polynomial::perron::compare_isolated(&poly, &d, &info.poly, &info.data);
    Ok((ord == Ordering::Less).then_some(poly))
}

fn full_from_head(head: &[i64]) -> Vec<i64> {
    let g = head.len();
    let mut full = vec![0i64; 2 * g + 1];
    full[0] = 1;
    full[2 * g] = 1;
    for i in 1..=g {
        full[i] = head[i - 1];
        full[2 * g - i] = head[i - 1];
    }
    full
}

/// All degree-`degree` monic reciprocal integer polynomials whose Perron root
/// lies strictly between 1 and the bound's Perron root.
pub fn enumerate_perron(query: &EnumerationQuery) -> Result<PolynomialList> {
    match query.mode {
        Mode::Pruned => {}
        Mode::BruteForceOracle => return brute_force_oracle(query.degree, &query.bound),
    }
    let info = bound_info(query.degree, &query.bound)?;
    let w = &info.windows;
    let tops: Vec<i64> = (w.lo[1]..=w.hi[1]).filter(|p1| p1.abs() <= w.coeff_box[1]).collect();
    let shards: Vec<Result<Vec<IntPolynomial>>> = tops
        .par_iter()
        .map(|&p1| {
            let mut out = Vec::new();
            let mut state = Dfs::new(w.g);
            state.p[1] = p1;
            state.a[1] = -p1;
            state.descend(2, &info, &mut out)?;
            Ok(out)
        })
        .collect();
    let mut entries = Vec::new();
    for s in shards {
        entries.extend(s?);
    }
    Ok(PolynomialList::new(query.clone(), entries))
}

struct Dfs {
    g: usize,
    /// a[k] multiplies x^(2g-k); a[0] = 1.
    a: Vec<i64>,
    p: Vec<i64>,
}

impl Dfs {
    fn new(g: usize) -> Self {
        let mut a = vec![0i64; g + 1];
        a[0] = 1;
        Self { g, a, p: vec![0i64; g + 1] }
    }

    fn descend(&mut self, m: usize, info: &BoundInfo, out: &mut Vec<IntPolynomial>) -> Result<()> {
        if m > self.g {
            let full = full_from_head(&self.a[1..]);
            if let Some(poly) = accept(&full, info)? {
                out.push(poly);
            }
            return Ok(());
        }
        let w = &info.windows;
        let mut s: i64 = 0;
        for i in 1..m {
            s += self.a[i] * self.p[m - i];
        }
        let mi = m as i64;
        // p_m + s must be divisible by m.
        let lo = w.lo[m];
        let first = lo + (-(lo + s)).rem_euclid(mi);
        let mut pm = first;
        while pm <= w.hi[m] {
            let am = -(pm + s) / mi;
            if am.abs() <= w.coeff_box[m] {
                self.p[m] = pm;
                self.a[m] = am;
                self.descend(m + 1, info, out)?;
            }
            pm += mi;
        }
        Ok(())
    }
}

/// Independent scan over the coefficient box, for degrees up to 8.
pub fn brute_force_oracle(degree: usize, bound: &IntPolynomial) -> Result<PolynomialList> {
    if degree > ORACLE_MAX_DEGREE {
        return Err(Error::Invalid(format!("oracle supports degree at most {ORACLE_MAX_DEGREE}, got {degree}")));
    }
    let info = bound_info(degree, bound)?;
    let g = degree / 2;
    let boxes = info.windows.coeff_box.clone();
    let first: Vec<i64> = (-boxes[1]..=boxes[1]).collect();
    let shards: Vec<Result<Vec<IntPolynomial>>> = first
        .par_iter()
        .map(|&a1| {
            let mut out = Vec::new();
            let mut head = vec![0i64; g];
            head[0] = a1;
            if g == 1 {
                if let Some(p) = accept(&full_from_head(&head), &info)? {
                    out.push(p);
                }
                return Ok(out);
            }
            for k in 1..g {
                head[k] = -boxes[k + 1];
            }
            loop {
                if let Some(p) = accept(&full_from_head(&head), &info)? {
                    out.push(p);
                }
                // odometer over head[1..]
                let mut k = g - 1;
                loop {
                    if head[k] < boxes[k + 1] {
                        head[k] += 1;
                        break;
                    }
                    head[k] = -boxes[k + 1];
                    if k == 1 {
                        return Ok(out);
                    }
                    k -= 1;
                }
            }
        })
        .collect();
    let mut entries = Vec::new();
    for s in shards {
        entries.extend(s?);
    }
    let query = EnumerationQuery { degree, bound: bound.clone(), mode: Mode::BruteForceOracle };
    Ok(PolynomialList::new(query, entries))
}
