use super::arith::{self, Coeffs};
use super::IntPolynomial;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use std::cmp::Ordering;

/// Certified data on the largest real root of a polynomial.
///
/// The root lies in the half-open interval `(lower, upper]`, which contains no
/// other real root. `is_perron` is the exact verdict: the root exceeds 1, is
/// simple, and every other root of the polynomial has strictly smaller modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerronData {
    pub lower: BigRational,
    pub upper: BigRational,
    pub simple: bool,
    pub dominant: bool,
    pub is_perron: bool,
    pub approx: String,
}

#[derive(Serialize)]
struct PerronJson<'a> {
    lower: String,
    upper: String,
    simple: bool,
    dominant: bool,
    is_perron: bool,
    approx: &'a str,
}

impl Serialize for PerronData {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PerronJson {
            lower: self.lower.to_string(),
            upper: self.upper.to_string(),
            simple: self.simple,
            dominant: self.dominant,
            is_perron: self.is_perron,
            approx: &self.approx,
        }
        .serialize(s)
    }
}

impl PerronData {
    pub fn midpoint_f64(&self) -> f64 {
        let mid = (&self.lower + &self.upper) / BigRational::from_integer(BigInt::from(2));
        mid.to_f64().unwrap_or(f64::NAN)
    }

    pub fn width(&self) -> BigRational {
        &self.upper - &self.lower
    }

    /// Same verdict recomputed from an interval narrowed by at least `factor`.
    pub fn refined(&self, poly: &IntPolynomial, factor: u32) -> Result<PerronData> {
        let mut iso = Isolated::new(poly.coeffs().to_vec(), self.lower.clone(), self.upper.clone(), self.simple);
        let target = self.width() / BigRational::from_integer(BigInt::from(factor));
        while iso.width() > target {
            iso.bisect();
        }
        certify(poly, iso)
    }
}

/// Root known to be the only real root of `poly` in `(lo, hi]`.
#[derive(Clone, Debug)]
pub(crate) struct Isolated {
    poly: Coeffs,
    chain: Option<Vec<Coeffs>>,
    pub lo: BigRational,
    pub hi: BigRational,
    sign_hi: Ordering,
    by_sign: bool,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

impl Isolated {
    fn new(poly: Coeffs, lo: BigRational, hi: BigRational, simple: bool) -> Self {
        let sign_lo = arith::sign_at(&poly, &lo);
        let sign_hi = arith::sign_at(&poly, &hi);
        let by_sign = simple && sign_lo != Ordering::Equal && sign_hi != Ordering::Equal && sign_lo != sign_hi;
        let chain = (!by_sign).then(|| arith::sturm_chain(&poly));
        Self { poly, chain, lo, hi, sign_hi, by_sign }
    }

    fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// Halve the interval, keeping the root inside.
    fn bisect(&mut self) {
        let mid = (&self.lo + &self.hi) * half();
        if self.by_sign {
            match arith::sign_at(&self.poly, &mid) {
                Ordering::Equal => {
                    // The root is rational and sits exactly at mid.
                    let w = self.width() / rat(8);
                    self.lo = &mid - &w;
                    self.hi = &mid + &w;
                    self.sign_hi = arith::sign_at(&self.poly, &self.hi);
                }
                s if s == self.sign_hi => self.hi = mid,
                _ => self.lo = mid,
            }
        } else {
            let chain = self.chain.as_ref().expect("chain present when not bisecting by sign");
            if arith::count_roots_between(chain, &mid, &self.hi) >= 1 {
                self.lo = mid;
            } else {
                self.hi = mid;
            }
        }
    }

    fn refine_below(&mut self, rel: &BigRational) {
        while self.width() > &self.lo * rel {
            self.bisect();
        }
    }
}

/// Certified Perron data, or `None` when no real root exceeds 1.
pub fn perron_root(poly: &IntPolynomial) -> Result<Option<PerronData>> {
    if poly.degree() == 0 {
        return Err(Error::Invalid("constant polynomial".into()));
    }
    let Some(iso) = isolate_largest_above_one(poly.coeffs()) else {
        return Ok(None);
    };
    certify(poly, iso).map(Some)
}

/// Isolates the largest real root if it exceeds 1.
pub(crate) fn isolate_largest_above_one(p: &[BigInt]) -> Option<Isolated> {
    let chain = arith::sturm_chain(p);
    let one = rat(1);
    if arith::count_roots_above(&chain, &one) == 0 {
        return None;
    }
    let bound = p.iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::one) + BigInt::one();
    let mut lo = one;
    let mut hi = BigRational::from_integer(bound);
    while arith::count_roots_above(&chain, &lo) > 1 {
        let mid = (&lo + &hi) * half();
        if arith::count_roots_above(&chain, &mid) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // Keep the endpoints off roots of p so the sign brackets the root.
    let mut step = (&hi - &lo) / rat(3);
    while arith::sign_at(p, &lo) == Ordering::Equal {
        let cand = &lo + &step;
        if arith::count_roots_above(&chain, &cand) == 1 {
            lo = cand;
        } else {
            step /= rat(2);
        }
    }
    let mut step = (&hi - &lo) / rat(3);
    while arith::sign_at(p, &hi) == Ordering::Equal {
        let cand = &hi - &step;
        if arith::count_roots_between(&chain, &lo, &cand) == 1 {
            hi = cand;
        } else {
            step /= rat(2);
        }
    }
    let g = arith::gcd(p, &arith::derivative(p));
    let simple = match arith::degree(&g) {
        None | Some(0) => true,
        Some(_) => arith::count_roots_between(&arith::sturm_chain(&g), &lo, &hi) == 0,
    };
    Some(Isolated::new(p.to_vec(), lo, hi, simple))
}

fn certify(poly: &IntPolynomial, mut iso: Isolated) -> Result<PerronData> {
    let p = poly.coeffs();
    let n = poly.degree();
    let simple = iso.by_sign || {
        let g = arith::gcd(p, &arith::derivative(p));
        match arith::degree(&g) {
            None | Some(0) => true,
            Some(_) => arith::count_roots_between(&arith::sturm_chain(&g), &iso.lo, &iso.hi) == 0,
        }
    };
    let dominant = if !simple { false } else { dominance(p, n, &mut iso)? };
    let approx = render_decimal_iso(&mut iso.clone(), 5);
    let is_perron = simple && dominant && iso.lo >= rat(1);
    Ok(PerronData { lower: iso.lo, upper: iso.hi, simple, dominant, is_perron, approx })
}

fn pow2_inv(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << bits)
}

/// Roots of modulus strictly below `r`, nudging `r` off singular radii in the
/// given direction by less than `slack`.
fn inside_robust(p: &[BigInt], r: &BigRational, slack: &BigRational, up: bool) -> usize {
    let mut k = 1u32;
    loop {
        let eps = slack * pow2_inv(k);
        let rr = if k == 1 {
            r.clone()
        } else if up {
            r + &eps
        } else {
            r - &eps
        };
        if let Some(c) = arith::schur_cohn_inside(p, &rr) {
            return c;
        }
        k += 1;
        if k > 200 {
            // Unreachable for nonzero polynomials: singular radii are finite.
            return 0;
        }
    }
}

fn dominance(p: &[BigInt], n: usize, iso: &mut Isolated) -> Result<bool> {
    if n == 1 {
        return Ok(true);
    }
    let mut bits = 24u32;
    let mut ties_checked = false;
    for _ in 0..64 {
        iso.refine_below(&pow2_inv(bits));
        let w = iso.width();
        let inside_lo = inside_robust(p, &iso.lo, &w, false);
        if n - inside_lo.min(n) == 1 {
            return Ok(true);
        }
        let inside_hi = inside_robust(p, &iso.hi, &w, true);
        if inside_hi < n {
            return Ok(false);
        }
        if !ties_checked {
            ties_checked = true;
            if real_tie(p, iso) || complex_tie(p, n, iso) {
                return Ok(false);
            }
        }
        bits += 16;
    }
    Err(Error::Internal("dominance refinement did not converge".into()))
}

/// -rho is also a root.
fn real_tie(p: &[BigInt], iso: &Isolated) -> bool {
    let h = arith::gcd(p, &arith::negate_arg(p));
    match arith::degree(&h) {
        None | Some(0) => false,
        Some(_) => arith::count_roots_between(&arith::sturm_chain(&h), &iso.lo, &iso.hi) >= 1,
    }
}

/// Some non-real root has modulus rho: then rho^2 = z * conj(z) is a root of
/// the pairwise-product polynomial.
fn complex_tie(p: &[BigInt], n: usize, iso: &mut Isolated) -> bool {
    let d = n * (n - 1) / 2;
    let ps = arith::power_sums(p, 2 * d.max(n));
    let two = BigInt::from(2);
    let mut s = vec![BigInt::zero(); d + 1];
    for m in 1..=d {
        s[m] = (&ps[m] * &ps[m] - &ps[2 * m]).div_floor(&two);
    }
    let mut g1 = vec![BigInt::zero(); n + 1];
    for m in 1..=n {
        g1[m] = ps[2 * m].clone();
    }
    let (Some(npoly), Some(graeffe)) = (arith::monic_from_power_sums(&s, d), arith::monic_from_power_sums(&g1, n))
    else {
        return false;
    };
    let common = arith::gcd(&npoly, &graeffe);
    if matches!(arith::degree(&common), None | Some(0)) {
        return false;
    }
    let g1_chain = arith::sturm_chain(&graeffe);
    loop {
        let lo2 = &iso.lo * &iso.lo;
        let hi2 = &iso.hi * &iso.hi;
        if arith::count_roots_between(&g1_chain, &lo2, &hi2) == 1 {
            let cchain = arith::sturm_chain(&common);
            return arith::count_roots_between(&cchain, &lo2, &hi2) >= 1;
        }
        iso.bisect();
    }
}

/// Exact three-way comparison of the Perron roots of `p` and `b`.
pub fn compare_perron(p: &IntPolynomial, b: &IntPolynomial) -> Result<Ordering> {
    let dp = perron_root(p)?.filter(|d| d.is_perron);
    let db = perron_root(b)?.filter(|d| d.is_perron);
    match (dp, db) {
        (Some(dp), Some(db)) => Ok(compare_isolated(p, &dp, b, &db)),
        _ => Err(Error::Invalid("compare_perron needs two Perron polynomials".into())),
    }
}

pub(crate) fn compare_isolated(p: &IntPolynomial, dp: &PerronData, b: &IntPolynomial, db: &PerronData) -> Ordering {
    let mut x = Isolated::new(p.coeffs().to_vec(), dp.lower.clone(), dp.upper.clone(), dp.simple);
    let mut y = Isolated::new(b.coeffs().to_vec(), db.lower.clone(), db.upper.clone(), db.simple);
    let mut gcd_checked = false;
    loop {
        if x.hi <= y.lo {
            return Ordering::Less;
        }
        if y.hi <= x.lo {
            return Ordering::Greater;
        }
        if !gcd_checked {
            gcd_checked = true;
            let g = arith::gcd(p.coeffs(), b.coeffs());
            if matches!(arith::degree(&g), Some(d) if d > 0) {
                let lo = if x.lo > y.lo { x.lo.clone() } else { y.lo.clone() };
                let hi = if x.hi < y.hi { x.hi.clone() } else { y.hi.clone() };
                if arith::count_roots_between(&arith::sturm_chain(&g), &lo, &hi) >= 1 {
                    return Ordering::Equal;
                }
            }
        }
        if x.width() >= y.width() {
            x.bisect();
        } else {
            y.bisect();
        }
    }
}

fn round_half_even(x: &BigRational) -> BigInt {
    let fl = x.floor();
    let frac = x - &fl;
    let fl = fl.to_integer();
    match frac.cmp(&half()) {
        Ordering::Less => fl,
        Ordering::Greater => fl + BigInt::one(),
        Ordering::Equal => {
            if fl.is_even() {
                fl
            } else {
                fl + BigInt::one()
            }
        }
    }
}

fn format_scaled(v: &BigInt, places: usize) -> String {
    let neg = v.is_negative();
    let digits = v.abs().to_string();
    let digits =
        if digits.len() <= places { format!("{}{}", "0".repeat(places + 1 - digits.len()), digits) } else { digits };
    let (int, frac) = digits.split_at(digits.len() - places);
    let body = if places == 0 { int.to_string() } else { format!("{int}.{frac}") };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

fn render_decimal_iso(iso: &mut Isolated, places: usize) -> String {
    let scale = BigRational::from_integer(num_traits::pow(BigInt::from(10), places));
    for _ in 0..400 {
        let a = round_half_even(&(&iso.lo * &scale));
        let b = round_half_even(&(&iso.hi * &scale));
        if a == b {
            return format_scaled(&a, places);
        }
        iso.bisect();
    }
    format_scaled(&round_half_even(&(&iso.hi * &scale)), places)
}

/// Round-half-even decimal rendering of the isolated root.
pub fn render_decimal(poly: &IntPolynomial, data: &PerronData, places: usize) -> String {
    let mut iso = Isolated::new(poly.coeffs().to_vec(), data.lower.clone(), data.upper.clone(), data.simple);
    render_decimal_iso(&mut iso, places)
}
