//! Coupled sieve for φ and τ∘φ on the double cover.
//!
//! φ is the lift with positive spectrum. τ commutes with φ, fixes exactly the
//! lifts of odd-degree sphere points (all tracked), and acts on the anonymous
//! periodic orbits either by swapping two φ-orbits of the same period or by
//! acting as the (p/2)-th power on one φ-orbit of even period p. τ∘φ^m has
//! spectrum -φ_*^m, so its Lefschetz number is 2 + p_m and every fixed point
//! has index +1.

use super::actions::{build_action, group_options, GroupOption};
use super::{
    check_degree, combined_options, lefschetz_i128, mobius, pair_with, ActionSpace, OrbitProfile, SieveVerdict, Status,
    Witness,
};
use crate::error::Result;
use crate::polynomial::IntPolynomial;
use crate::strata::SurfaceStratum;

/// Forced contributions to L(phi^m) and L(tau phi^m), with the option chosen per group.
type CoupledOption = ((Vec<i128>, Vec<i128>), Vec<usize>);

/// Precomputed coupled action space for one (stratum, horizon).
pub struct JointSpace {
    stratum: SurfaceStratum,
    horizon: usize,
    per_group: Vec<Vec<GroupOption>>,
    options: Vec<CoupledOption>,
}

struct Solution {
    orbits: OrbitProfile,
    invariant: Vec<(usize, u64)>,
}

impl JointSpace {
    pub fn new(stratum: &SurfaceStratum, horizon: usize) -> Self {
        let per_group: Vec<Vec<GroupOption>> =
            stratum.groups.iter().map(|g| group_options(g, 1, horizon, true)).collect();
        let options = combined_options(per_group.clone(), |chosen| {
            let mut f = vec![0i128; horizon];
            let mut t = vec![0i128; horizon];
            for o in chosen {
                for m in 0..horizon {
                    f[m] += o.phi[m] as i128;
                    t[m] += o.tau[m] as i128;
                }
            }
            (f, t)
        });
        Self { stratum: stratum.clone(), horizon, per_group, options }
    }

    pub fn len(&self) -> usize {
        self.options.len()
    }

    pub fn is_empty(&self) -> bool {
        self.options.is_empty()
    }

    /// `p` holds the power sums p_1..p_M.
    pub(crate) fn verdict(&self, p: &[i128]) -> SieveVerdict {
        let mut worst: Option<(usize, String)> = None;
        for ((f, t), pick) in &self.options {
            match solve(p, f, t) {
                Ok(sol) => {
                    let action = build_action(&self.stratum, &self.per_group, pick);
                    return SieveVerdict {
                        status: Status::Compatible,
                        witness: Some(Witness {
                            sign: 1,
                            action,
                            orbits: sol.orbits,
                            invariant_orbits: Some(sol.invariant),
                        }),
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
        SieveVerdict::incompatible(m, format!("every coupled action fails by iterate {m}; last to fail: {why}"))
    }
}

fn odd_part(mut h: usize) -> usize {
    while h.is_multiple_of(2) {
        h /= 2;
    }
    h
}

/// Balance for φ^m and τ∘φ^m, checked iterate by iterate.
fn solve(p: &[i128], f: &[i128], t: &[i128]) -> std::result::Result<Solution, (usize, String)> {
    let horizon = p.len();
    let mut n = vec![0i128; horizon + 1];
    let mut r = vec![0i128; horizon + 1];
    let mut c = vec![0i128; horizon + 1];
    // inv[q] = number of φ-orbits of period q on which τ acts as a power of φ.
    let mut inv = vec![0i128; 2 * horizon + 1];
    for m in 1..=horizon {
        let l = 2 - p[m - 1];
        n[m] = f[m - 1] - l;
        if n[m] < 0 {
            return Err((m, format!("L({m}) = {l} but tracked points force {}", f[m - 1])));
        }
        let s: i128 = (1..=m).filter(|q| m % q == 0).map(|q| mobius(m / q) * n[q]).sum();
        if s < 0 || s % m as i128 != 0 {
            return Err((m, format!("period-{m} orbit count of φ would be {s}/{m}")));
        }
        c[m] = s / m as i128;
        let lt = 2 + p[m - 1];
        r[m] = lt - t[m - 1];
        if r[m] < 0 {
            return Err((m, format!("L(τ∘φ^{m}) = {lt} but tracked points already give {}", t[m - 1])));
        }
        let o = odd_part(m);
        let e = m / o;
        let s: i128 = (1..=o).filter(|q| o.is_multiple_of(*q)).map(|q| mobius(o / q) * r[e * q]).sum();
        let h2 = 2 * m as i128;
        if s < 0 || s % h2 != 0 {
            return Err((m, format!("τ-invariant orbits of period {} would number {s}/{h2}", 2 * m)));
        }
        inv[2 * m] = s / h2;
        if m % 2 == 1 {
            if c[m] % 2 != 0 {
                return Err((m, format!("{} orbits of odd period {m} cannot be paired by τ", c[m])));
            }
        } else if c[m] < inv[m] || (c[m] - inv[m]) % 2 != 0 {
            return Err((
                m,
                format!("{} orbits of period {m} cannot hold {} τ-invariant ones and pair the rest", c[m], inv[m]),
            ));
        }
    }
    let counts = c[1..].iter().map(|&x| x as u64).collect();
    let invariant = (2..=horizon).step_by(2).filter(|&q| inv[q] > 0).map(|q| (q, inv[q] as u64)).collect();
    Ok(Solution { orbits: OrbitProfile { counts }, invariant })
}

fn power_sums_i128(p: &IntPolynomial, horizon: usize) -> Result<Vec<i128>> {
    Ok(lefschetz_i128(p, horizon)?.into_iter().map(|l| 2 - l).collect())
}

/// Pair check followed by the coupled model; joint compatibility therefore
/// implies pair compatibility.
pub fn joint_tau_sieve(p: &IntPolynomial, stratum: &SurfaceStratum, horizon: usize) -> Result<SieveVerdict> {
    check_degree(p, stratum)?;
    let plus = ActionSpace::new(stratum, 1, horizon);
    let minus = ActionSpace::new(stratum, -1, horizon);
    let joint = JointSpace::new(stratum, horizon);
    joint_with(p, &plus, &minus, &joint)
}

pub(crate) fn joint_with(
    p: &IntPolynomial,
    plus: &ActionSpace,
    minus: &ActionSpace,
    joint: &JointSpace,
) -> Result<SieveVerdict> {
    let pair = pair_with(p, plus, minus)?;
    if !pair.is_compatible() {
        return Ok(pair);
    }
    joint_after_pair(p, joint)
}

/// Coupled model alone, for callers that already ran the pair check.
pub(crate) fn joint_after_pair(p: &IntPolynomial, joint: &JointSpace) -> Result<SieveVerdict> {
    Ok(joint.verdict(&power_sums_i128(p, joint.horizon)?))
}
