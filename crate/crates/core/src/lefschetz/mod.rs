//! Lefschetz compatibility sieve.
//!
//! For a candidate spectrum and a lifted stratum we search over the ways a map
//! can permute the tracked points (punctures, the marked point, singularities)
//! and rotate their separatrices. Each choice fixes the index sum over tracked
//! fixed points of every iterate; what remains of the Lefschetz number must be
//! made of anonymous regular periodic orbits with nonnegative integer counts.
//!
//! Rotations are measured in steps of the 2(d+1) unstable prongs of a degree-2d
//! point. An even rotation keeps the foliation orientation, an odd one flips
//! it; the latter only happens on odd cycles of a map whose spectral radius is
//! carried by a negative eigenvalue.

mod actions;
mod joint;

pub use actions::{CycleSpec, SingularityAction};
pub(crate) use joint::joint_after_pair;
pub use joint::{joint_tau_sieve, JointSpace};

use crate::error::{Error, Result};
use crate::polynomial::IntPolynomial;
use crate::strata::SurfaceStratum;
use actions::{group_options, GroupOption};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Index of a fixed point of φ^m lying on a cycle whose first return rotates
/// the d+1 outgoing separatrices by r. Negative-spectrum iterates have index
/// +1 everywhere; otherwise the index drops to 1 - 2(d+1) exactly when the
/// separatrices come back to themselves.
pub fn index_of_iterate(d: u32, r: u32, m: u32, sign_positive: bool) -> i64 {
    if !sign_positive {
        return 1;
    }
    if (m as u64 * r as u64).is_multiple_of(d as u64 + 1) {
        1 - 2 * (d as i64 + 1)
    } else {
        1
    }
}

/// Same rule with the rotation `s` counted in unstable prongs (mod 2(d+1))
/// after `k` returns.
pub fn prong_index(d: u32, s: u32, k: usize, sign_positive: bool) -> i64 {
    let modulus = 2 * (d as u64 + 1);
    if !sign_positive {
        1
    } else if (k as u64 * s as u64).is_multiple_of(modulus) {
        1 - modulus as i64
    } else {
        1
    }
}

fn sign_positive(sign: i8, m: usize) -> bool {
    sign > 0 || m.is_multiple_of(2)
}

/// Index sum over tracked points fixed by each iterate m = 1..=horizon.
pub fn forced_contributions(action: &SingularityAction, sign: i8, horizon: usize) -> Vec<i64> {
    let mut out = vec![0i64; horizon];
    for c in &action.cycles {
        let l = c.points.len();
        for m in (l..=horizon).step_by(l) {
            out[m - 1] += l as i64 * prong_index(c.half_degree, c.rotation, m / l, sign_positive(sign, m));
        }
    }
    out
}

/// Counts c_p of anonymous regular periodic orbits of exact period p.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitProfile {
    /// counts[p - 1] = c_p.
    pub counts: Vec<u64>,
}

impl OrbitProfile {
    pub fn get(&self, p: usize) -> u64 {
        self.counts[p - 1]
    }

    /// Regular points fixed by the m-th iterate: sum over p | m of p c_p.
    pub fn fixed_points(&self, m: usize) -> i128 {
        (1..=m).filter(|p| m.is_multiple_of(*p)).map(|p| p as i128 * self.get(p) as i128).sum()
    }
}

pub(crate) fn mobius(mut n: usize) -> i128 {
    let mut r = 1;
    let mut k = 2;
    while k * k <= n {
        if n.is_multiple_of(k) {
            n /= k;
            if n.is_multiple_of(k) {
                return 0;
            }
            r = -r;
        }
        k += 1;
    }
    if n > 1 {
        r = -r;
    }
    r
}

/// Inverts #Fix_m = sum_{p | m} p c_p. `residuals[m-1]` is the number of
/// anonymous regular fixed points of the m-th iterate.
pub fn orbit_feasibility(residuals: &[i128]) -> Option<OrbitProfile> {
    let mut counts = Vec::with_capacity(residuals.len());
    for p in 1..=residuals.len() {
        if residuals[p - 1] < 0 {
            return None;
        }
        let s: i128 = (1..=p).filter(|q| p % q == 0).map(|q| mobius(p / q) * residuals[q - 1]).sum();
        if s < 0 || s % p as i128 != 0 {
            return None;
        }
        counts.push((s / p as i128) as u64);
    }
    Some(OrbitProfile { counts })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Compatible,
    Incompatible,
}

/// Witness of compatibility: one action on tracked points plus orbit counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub sign: i8,
    pub action: SingularityAction,
    pub orbits: OrbitProfile,
    /// For coupled models: (period p, number of φ-orbits of period p on which
    /// the deck involution acts as the (p/2)-th power).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariant_orbits: Option<Vec<(usize, u64)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    /// Smallest iterate by which every action has failed.
    pub iterate: usize,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SieveVerdict {
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<Obstruction>,
    /// For pair checks: the witness for the sign-flipped spectrum.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flipped_witness: Option<Witness>,
}

impl SieveVerdict {
    pub fn is_compatible(&self) -> bool {
        self.status == Status::Compatible
    }

    fn incompatible(iterate: usize, detail: String) -> Self {
        Self {
            status: Status::Incompatible,
            witness: None,
            obstruction: Some(Obstruction { iterate, detail }),
            flipped_witness: None,
        }
    }
}

pub(crate) fn lefschetz_i128(p: &IntPolynomial, horizon: usize) -> Result<Vec<i128>> {
    p.lefschetz_numbers(horizon)
        .iter()
        .map(|v| v.to_i128().ok_or_else(|| Error::Invalid("Lefschetz number exceeds 128 bits".into())))
        .collect()
}

pub(crate) fn check_degree(p: &IntPolynomial, stratum: &SurfaceStratum) -> Result<()> {
    if p.degree() != 2 * stratum.genus {
        return Err(Error::Invalid(format!(
            "degree {} does not match genus {} (expected degree {})",
            p.degree(),
            stratum.genus,
            2 * stratum.genus
        )));
    }
    Ok(())
}

/// All distinct forced-contribution vectors over the action space, with the
/// first action (in enumeration order) producing each.
pub(crate) fn combined_options<K, F>(per_group: Vec<Vec<GroupOption>>, key: F) -> Vec<(K, Vec<usize>)>
where
    K: Clone + Eq + std::hash::Hash,
    F: Fn(&[&GroupOption]) -> K,
{
    // Dedup per prefix would lose the per-group choice; the spaces are small
    // enough to expand fully and dedup on the final key.
    let mut picks: Vec<Vec<usize>> = vec![Vec::new()];
    for opts in &per_group {
        let mut next = Vec::with_capacity(picks.len() * opts.len());
        for pick in &picks {
            for j in 0..opts.len() {
                let mut p = pick.clone();
                p.push(j);
                next.push(p);
            }
        }
        picks = next;
    }
    let mut seen: HashMap<K, ()> = HashMap::new();
    let mut out = Vec::new();
    for pick in picks {
        let chosen: Vec<&GroupOption> = pick.iter().enumerate().map(|(g, &j)| &per_group[g][j]).collect();
        let k = key(&chosen);
        if seen.insert(k.clone(), ()).is_none() {
            out.push((k, pick));
        }
    }
    out
}

/// Why one action fails, at the first failing iterate.
fn first_failure(l: &[i128], f: &[i128], sign: i8) -> std::result::Result<OrbitProfile, (usize, String)> {
    let horizon = l.len();
    let mut residuals = Vec::with_capacity(horizon);
    for m in 1..=horizon {
        let eps: i128 = if sign_positive(sign, m) { -1 } else { 1 };
        let n = (l[m - 1] - f[m - 1]) * eps;
        if n < 0 {
            return Err((
                m,
                format!(
                    "L({m}) = {} but tracked points force {}, leaving {} anonymous fixed points",
                    l[m - 1],
                    f[m - 1],
                    n
                ),
            ));
        }
        residuals.push(n);
        if orbit_feasibility(&residuals).is_none() {
            let s: i128 = (1..=m).filter(|q| m % q == 0).map(|q| mobius(m / q) * residuals[q - 1]).sum();
            return Err((m, format!("period-{m} orbit count would be {s}/{m}")));
        }
    }
    Ok(orbit_feasibility(&residuals).expect("checked incrementally"))
}

/// Whether some action and orbit profile realise the Lefschetz numbers of `p`
/// when its spectral radius is carried by a root of sign `sign`.
pub fn is_compatible(p: &IntPolynomial, stratum: &SurfaceStratum, sign: i8, horizon: usize) -> Result<SieveVerdict> {
    check_degree(p, stratum)?;
    let l = lefschetz_i128(p, horizon)?;
    let space = ActionSpace::new(stratum, sign, horizon);
    Ok(space.verdict(&l))
}

/// Precomputed action space for one (stratum, sign, horizon); reusable across
/// polynomials.
pub struct ActionSpace {
    stratum: SurfaceStratum,
    sign: i8,
    horizon: usize,
    per_group: Vec<Vec<GroupOption>>,
    options: Vec<(Vec<i128>, Vec<usize>)>,
}

impl ActionSpace {
    pub fn new(stratum: &SurfaceStratum, sign: i8, horizon: usize) -> Self {
        let per_group: Vec<Vec<GroupOption>> =
            stratum.groups.iter().map(|g| group_options(g, sign, horizon, false)).collect();
        let options = combined_options(per_group.clone(), |chosen| {
            let mut f = vec![0i128; horizon];
            for o in chosen {
                for (x, y) in f.iter_mut().zip(&o.phi) {
                    *x += *y as i128;
                }
            }
            f
        });
        Self { stratum: stratum.clone(), sign, horizon, per_group, options }
    }

    pub fn len(&self) -> usize {
        self.options.len()
    }

    pub fn is_empty(&self) -> bool {
        self.options.is_empty()
    }

    pub fn verdict(&self, l: &[i128]) -> SieveVerdict {
        let mut worst: Option<(usize, String)> = None;
        for (f, pick) in &self.options {
            match first_failure(l, f, self.sign) {
                Ok(orbits) => {
                    let action = actions::build_action(&self.stratum, &self.per_group, pick);
                    return SieveVerdict {
                        status: Status::Compatible,
                        witness: Some(Witness { sign: self.sign, action, orbits, invariant_orbits: None }),
                        obstruction: None,
                        flipped_witness: None,
                    };
                }
                Err((m, why)) => {
                    if worst.as_ref().is_none_or(|w| m > w.0) {
                        worst = Some((m, why));
                    }
                }
            }
        }
        let (m, why) = worst.unwrap_or((1, "no action".into()));
        SieveVerdict::incompatible(m, format!("every action fails by iterate {m}; last to fail: {why}"))
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }
}

/// P(x) compatible with positive spectrum and P(-x) with negative spectrum.
pub fn check_pair(p: &IntPolynomial, stratum: &SurfaceStratum, horizon: usize) -> Result<SieveVerdict> {
    check_degree(p, stratum)?;
    let plus = ActionSpace::new(stratum, 1, horizon);
    let minus = ActionSpace::new(stratum, -1, horizon);
    pair_with(p, &plus, &minus)
}

pub(crate) fn pair_with(p: &IntPolynomial, plus: &ActionSpace, minus: &ActionSpace) -> Result<SieveVerdict> {
    let horizon = plus.horizon;
    let a = plus.verdict(&lefschetz_i128(p, horizon)?);
    if !a.is_compatible() {
        return Ok(a);
    }
    let b = minus.verdict(&lefschetz_i128(&p.negate_variable(), horizon)?);
    if !b.is_compatible() {
        let mut b = b;
        if let Some(o) = b.obstruction.as_mut() {
            o.detail = format!("sign-flipped spectrum: {}", o.detail);
        }
        return Ok(b);
    }
    Ok(SieveVerdict { flipped_witness: b.witness, ..a })
}

/// Replays a witness through the balance equations.
pub fn witness_reproduces(p: &IntPolynomial, w: &Witness, horizon: usize) -> Result<bool> {
    let spectrum = if w.sign > 0 { p.clone() } else { p.negate_variable() };
    let l = lefschetz_i128(&spectrum, horizon)?;
    let f = forced_contributions(&w.action, w.sign, horizon);
    Ok((1..=horizon).all(|m| {
        let eps: i128 = if sign_positive(w.sign, m) { -1 } else { 1 };
        l[m - 1] == f[m - 1] as i128 + eps * w.orbits.fixed_points(m)
    }))
}

/// Default horizon: max(12, 2g + 2).
pub fn default_horizon(genus: usize) -> usize {
    12.max(2 * genus + 2)
}
