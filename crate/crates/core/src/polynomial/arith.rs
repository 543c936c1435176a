//! Dense integer polynomial helpers on ascending coefficient vectors.
//!
//! These work on arbitrary (not necessarily monic) integer polynomials and are
//! the exact backbone of root isolation: pseudo-remainders, primitive gcds,
//! Sturm sequences and Schur-Cohn counts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

pub type Coeffs = Vec<BigInt>;

pub fn trim(mut v: Coeffs) -> Coeffs {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Degree, or `None` for the zero polynomial.
pub fn degree(v: &[BigInt]) -> Option<usize> {
    v.iter().rposition(|c| !c.is_zero())
}

pub fn leading(v: &[BigInt]) -> &BigInt {
    &v[degree(v).expect("leading coefficient of zero polynomial")]
}

pub fn derivative(v: &[BigInt]) -> Coeffs {
    trim(v.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> Coeffs {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Coefficients of P(-x).
pub fn negate_arg(v: &[BigInt]) -> Coeffs {
    v.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }).collect()
}

pub fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Divide out the positive content, keeping the sign of every coefficient.
pub fn primitive(v: Coeffs) -> Coeffs {
    let g = content(&v);
    if g.is_zero() || g.is_one() {
        return trim(v);
    }
    trim(v.into_iter().map(|c| c / &g).collect())
}

/// Primitive part normalised to a positive leading coefficient.
pub fn normalized(v: Coeffs) -> Coeffs {
    let v = primitive(v);
    match degree(&v) {
        Some(d) if v[d].is_negative() => v.into_iter().map(|c| -c).collect(),
        _ => v,
    }
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
pub fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Coeffs {
    let db = degree(b).expect("division by zero polynomial");
    let lb = b[db].clone();
    let mut r = trim(a.to_vec());
    let Some(da) = degree(&r) else { return r };
    if da < db {
        return r;
    }
    let mut e = da - db + 1;
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (i, bc) in b.iter().enumerate().take(db + 1) {
            r[i + shift] -= &lr * bc;
        }
        r = trim(r);
        e -= 1;
    }
    if e > 0 {
        let f = num_traits::pow(lb, e);
        r = r.into_iter().map(|c| c * &f).collect();
    }
    r
}

/// Pseudo-remainder rescaled by a positive factor only, so signs are those of
/// the true remainder.
fn positive_rem(a: &[BigInt], b: &[BigInt]) -> Coeffs {
    let da = degree(a).unwrap_or(0);
    let db = degree(b).expect("division by zero polynomial");
    let r = pseudo_rem(a, b);
    let odd = da >= db && (da - db + 1) % 2 == 1;
    if leading(b).is_negative() && odd {
        r.into_iter().map(|c| -c).collect()
    } else {
        r
    }
}

/// Primitive gcd with positive leading coefficient; constants collapse to `[1]`.
pub fn gcd(a: &[BigInt], b: &[BigInt]) -> Coeffs {
    let mut x = normalized(a.to_vec());
    let mut y = normalized(b.to_vec());
    if degree(&x).is_none() {
        return if degree(&y).is_none() { Vec::new() } else { y };
    }
    while degree(&y).is_some() {
        let r = normalized(pseudo_rem(&x, &y));
        x = y;
        y = r;
    }
    if degree(&x) == Some(0) {
        vec![BigInt::one()]
    } else {
        x
    }
}

/// Exact division, `None` when `b` does not divide `a` over the integers.
pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Coeffs> {
    let db = degree(b)?;
    let lb = &b[db];
    let mut r = trim(a.to_vec());
    let Some(da) = degree(&r) else { return Some(Vec::new()) };
    if da < db {
        return None;
    }
    let mut q = vec![BigInt::zero(); da - db + 1];
    while let Some(dr) = degree(&r) {
        if dr < db {
            return None;
        }
        let (c, rem) = r[dr].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate().take(db + 1) {
            r[i + shift] -= &c * bc;
        }
        q[shift] = c;
        r = trim(r);
    }
    Some(trim(q))
}

/// Sign of `v` at the rational point `x`.
pub fn sign_at(v: &[BigInt], x: &BigRational) -> Ordering {
    let Some(d) = degree(v) else { return Ordering::Equal };
    let p = x.numer();
    let q = x.denom();
    // q > 0, so the homogenised value has the sign of v(p/q).
    let mut acc = v[d].clone();
    let mut qpow = BigInt::one();
    for i in (0..d).rev() {
        qpow *= q;
        acc = acc * p + &v[i] * &qpow;
    }
    acc.sign_ordering()
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

/// Square-free part, primitive.
pub fn squarefree(v: &[BigInt]) -> Coeffs {
    let f = primitive(trim(v.to_vec()));
    let g = gcd(&f, &derivative(&f));
    match degree(&g) {
        None | Some(0) => f,
        Some(_) => primitive(div_exact(&f, &g).expect("gcd divides")),
    }
}

/// Sturm chain of the square-free part of a nonzero polynomial, built from
/// primitive positive pseudo-remainders. Counting with it is valid even at
/// points that are roots.
pub fn sturm_chain(v: &[BigInt]) -> Vec<Coeffs> {
    let f = squarefree(v);
    let mut chain = vec![f.clone()];
    let df = primitive(derivative(&f));
    if degree(&df).is_none() {
        return chain;
    }
    chain.push(df);
    loop {
        let n = chain.len();
        let r = positive_rem(&chain[n - 2], &chain[n - 1]);
        let r = primitive(r);
        if degree(&r).is_none() {
            break;
        }
        chain.push(r.into_iter().map(|c| -c).collect());
    }
    chain
}

fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut last = Ordering::Equal;
    let mut count = 0;
    for s in signs {
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

pub fn variations_at(chain: &[Coeffs], x: &BigRational) -> usize {
    variations(chain.iter().map(|p| sign_at(p, x)))
}

pub fn variations_at_pos_inf(chain: &[Coeffs]) -> usize {
    variations(chain.iter().map(|p| leading(p).sign_ordering()))
}

pub fn variations_at_neg_inf(chain: &[Coeffs]) -> usize {
    variations(chain.iter().map(|p| {
        let d = degree(p).unwrap_or(0);
        let s = leading(p).sign_ordering();
        if d % 2 == 1 {
            s.reverse()
        } else {
            s
        }
    }))
}

/// Distinct real roots in the half-open interval (a, b].
pub fn count_roots_between(chain: &[Coeffs], a: &BigRational, b: &BigRational) -> usize {
    variations_at(chain, a).saturating_sub(variations_at(chain, b))
}

/// Distinct real roots strictly above `a`.
pub fn count_roots_above(chain: &[Coeffs], a: &BigRational) -> usize {
    variations_at(chain, a).saturating_sub(variations_at_pos_inf(chain))
}

/// Number of roots (with multiplicity) of `v` of modulus strictly below `r`,
/// by the Schur-Cohn-Marden recursion in integer arithmetic. `None` when the
/// recursion is singular, which happens when a root lies on the circle or the
/// root set is symmetric across it; callers perturb `r`.
pub fn schur_cohn_inside(v: &[BigInt], r: &BigRational) -> Option<usize> {
    let n = degree(v)?;
    if n == 0 {
        return Some(0);
    }
    let p = r.numer();
    let q = r.denom();
    let mut f: Coeffs = Vec::with_capacity(n + 1);
    let mut ppow = BigInt::one();
    let qpows: Vec<BigInt> = {
        let mut out = vec![BigInt::one(); n + 1];
        for i in 1..=n {
            out[i] = &out[i - 1] * q;
        }
        out
    };
    for i in 0..=n {
        f.push(&v[i] * &ppow * &qpows[n - i]);
        ppow *= p;
    }
    let mut inside = 0;
    let mut negative_product = false;
    for k in 0..n {
        let m = n - k;
        let a0 = f[0].clone();
        let am = f[m].clone();
        let mut g: Coeffs = (0..m).map(|i| &a0 * &f[i] - &am * &f[m - i]).collect();
        let delta = g[0].sign_ordering();
        if delta == Ordering::Equal {
            return None;
        }
        if delta == Ordering::Less {
            negative_product = !negative_product;
        }
        if negative_product {
            inside += 1;
        }
        let c = content(&g);
        if !c.is_zero() && !c.is_one() {
            for x in g.iter_mut() {
                *x = &*x / &c;
            }
        }
        f = g;
    }
    Some(inside)
}

/// Monic coefficients (ascending) of the degree-`n` polynomial whose root power
/// sums are `p[1..=n]` (`p[0]` ignored). `None` if a Newton division is inexact.
pub fn monic_from_power_sums(p: &[BigInt], n: usize) -> Option<Coeffs> {
    // a[m] is the coefficient of x^(n-m).
    let mut a = vec![BigInt::zero(); n + 1];
    a[0] = BigInt::one();
    for m in 1..=n {
        let mut s = p[m].clone();
        for i in 1..m {
            s += &a[i] * &p[m - i];
        }
        let (q, r) = s.div_rem(&BigInt::from(m));
        if !r.is_zero() {
            return None;
        }
        a[m] = -q;
    }
    a.reverse();
    Some(a)
}

/// Power sums p_1..p_m of the roots of a monic polynomial (ascending
/// coefficients), returned with a leading placeholder at index 0.
pub fn power_sums(v: &[BigInt], m: usize) -> Vec<BigInt> {
    let n = degree(v).unwrap_or(0);
    // a[i] = coefficient of x^(n-i)
    let a: Vec<BigInt> = (0..=n).map(|i| v[n - i].clone()).collect();
    let mut p = vec![BigInt::zero(); m + 1];
    for k in 1..=m {
        let mut s = BigInt::zero();
        for i in 1..k.min(n + 1) {
            s += &a[i] * &p[k - i];
        }
        if k <= n {
            s += &a[k] * BigInt::from(k);
        }
        p[k] = -s;
    }
    p
}
