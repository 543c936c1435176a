//! Per-n reproduction: strata, lifts, polynomial lists, sieve, tables and the
//! final certificate.

mod registry;
mod report;

pub use registry::{CandidateRegistry, MinimumSource, StratumMinimum, TheoremRow};
pub use report::{render_csv, render_json, render_markdown, REPORT_SCHEMA_VERSION};

use crate::enumerate::{load_or_compute, EnumerationQuery};
use crate::error::{Error, Result};
use crate::lefschetz::{default_horizon, ActionSpace, JointSpace, SieveVerdict};
use crate::polynomial::{perron_root, render_decimal, IntPolynomial};
use crate::strata::{enumerate_disc_strata, lift_to_double_cover, SphereStratum, SurfaceStratum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SieveMode {
    /// P(x) against positive spectrum only.
    Basic,
    /// P(x) and P(-x).
    Pair,
    /// Pair check followed by the coupled φ, τ∘φ model.
    Joint,
}

impl FromStr for SieveMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "basic" => Ok(Self::Basic),
            "pair" => Ok(Self::Pair),
            "joint" => Ok(Self::Joint),
            other => Err(Error::Invalid(format!("unknown sieve mode '{other}' (basic, pair, joint)"))),
        }
    }
}

impl fmt::Display for SieveMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Basic => "basic",
            Self::Pair => "pair",
            Self::Joint => "joint",
        })
    }
}

/// Options shared by every pipeline entry point.
#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// Fixed horizon; `None` picks the per-genus default.
    pub horizon: Option<usize>,
    pub cache_dir: Option<PathBuf>,
}

/// Horizon used for a stratum of genus g under `mode`.
pub fn horizon_for(mode: SieveMode, genus: usize, options: &RunOptions) -> usize {
    options.horizon.unwrap_or_else(|| {
        let h = default_horizon(genus);
        if mode == SieveMode::Joint && genus >= 5 {
            h.max(14)
        } else {
            h
        }
    })
}

/// A polynomial with its rendered Perron root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootedPolynomial {
    pub polynomial: String,
    pub coefficients: IntPolynomial,
    pub perron_root: String,
}

impl RootedPolynomial {
    pub fn new(p: &IntPolynomial) -> Result<Self> {
        let data = perron_root(p)?.ok_or_else(|| Error::Internal(format!("{p} has no Perron root")))?;
        Ok(Self { polynomial: p.to_string(), coefficients: p.clone(), perron_root: render_decimal(p, &data, 5) })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub case: String,
    pub stratum: String,
    pub lifted: String,
    pub genus: usize,
    pub horizon: usize,
    pub polynomial_count: usize,
    pub compatible_count: usize,
    pub survivors: Vec<RootedPolynomial>,
    /// Joint mode: pair survivors that the coupled model eliminates.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub eliminated_by_joint: Vec<RootedPolynomial>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PolynomialVerdict {
    pub polynomial: String,
    pub verdict: SieveVerdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct StratumReport {
    pub mode: SieveMode,
    pub bound: String,
    pub row: TableRow,
    pub verdicts: Vec<PolynomialVerdict>,
}

/// Action spaces for one lifted stratum, built once and shared by all
/// polynomials of the right degree.
struct Sieve {
    mode: SieveMode,
    plus: ActionSpace,
    minus: Option<ActionSpace>,
    joint: Option<JointSpace>,
}

impl Sieve {
    fn new(lifted: &SurfaceStratum, mode: SieveMode, horizon: usize) -> Self {
        let plus = ActionSpace::new(lifted, 1, horizon);
        let minus = (mode != SieveMode::Basic).then(|| ActionSpace::new(lifted, -1, horizon));
        let joint = (mode == SieveMode::Joint).then(|| JointSpace::new(lifted, horizon));
        Self { mode, plus, minus, joint }
    }

    /// (pair-level verdict, final verdict).
    fn run(&self, p: &IntPolynomial) -> Result<(bool, SieveVerdict)> {
        use crate::lefschetz::{joint_after_pair, lefschetz_i128, pair_with};
        match self.mode {
            SieveMode::Basic => {
                let l = lefschetz_i128(p, self.plus.horizon())?;
                let v = self.plus.verdict(&l);
                Ok((v.is_compatible(), v))
            }
            SieveMode::Pair => {
                let v = pair_with(p, &self.plus, self.minus.as_ref().expect("pair space"))?;
                Ok((v.is_compatible(), v))
            }
            SieveMode::Joint => {
                let minus = self.minus.as_ref().expect("pair space");
                let pair = pair_with(p, &self.plus, minus)?;
                if !pair.is_compatible() {
                    return Ok((false, pair));
                }
                let v = joint_after_pair(p, self.joint.as_ref().expect("joint space"))?;
                Ok((true, v))
            }
        }
    }
}

fn sieve_list(
    case: String,
    s: &SphereStratum,
    polys: &[IntPolynomial],
    mode: SieveMode,
    options: &RunOptions,
) -> Result<(TableRow, Vec<PolynomialVerdict>)> {
    let lifted = lift_to_double_cover(s);
    let horizon = horizon_for(mode, lifted.genus, options);
    let sieve = Sieve::new(&lifted, mode, horizon);
    let results: Vec<Result<(bool, SieveVerdict)>> = polys.par_iter().map(|p| sieve.run(p)).collect();
    let mut verdicts = Vec::with_capacity(polys.len());
    let mut survivors = Vec::new();
    let mut eliminated = Vec::new();
    for (p, r) in polys.iter().zip(results) {
        let (pair_ok, v) = r?;
        if v.is_compatible() {
            survivors.push(RootedPolynomial::new(p)?);
        } else if pair_ok && mode == SieveMode::Joint {
            eliminated.push(RootedPolynomial::new(p)?);
        }
        verdicts.push(PolynomialVerdict { polynomial: p.to_string(), verdict: v });
    }
    let row = TableRow {
        case,
        stratum: s.to_string(),
        lifted: lifted.to_string(),
        genus: lifted.genus,
        horizon,
        polynomial_count: polys.len(),
        compatible_count: survivors.len(),
        survivors,
        eliminated_by_joint: eliminated,
    };
    Ok((row, verdicts))
}

fn polynomials_below(degree: usize, bound: &IntPolynomial, options: &RunOptions) -> Result<Vec<IntPolynomial>> {
    let query = EnumerationQuery::new(degree, bound.clone());
    Ok(load_or_compute(options.cache_dir.as_deref(), &query)?.entries)
}

/// Lifts `s`, lists the polynomials of degree 2g below `bound` and sieves them.
pub fn stratum_report(
    s: &SphereStratum,
    bound: &IntPolynomial,
    mode: SieveMode,
    options: &RunOptions,
) -> Result<StratumReport> {
    let lifted = lift_to_double_cover(s);
    let polys = polynomials_below(2 * lifted.genus, bound, options)?;
    let (row, verdicts) = sieve_list("s'".into(), s, &polys, mode, options)?;
    Ok(StratumReport { mode, bound: bound.to_string(), row, verdicts })
}

pub fn check_n(n: usize) -> Result<()> {
    if !(3..=8).contains(&n) {
        return Err(Error::Invalid(format!("n must be between 3 and 8, got {n}")));
    }
    Ok(())
}

fn rows_for(
    n: usize,
    strata: &[SphereStratum],
    bound: &IntPolynomial,
    mode: SieveMode,
    options: &RunOptions,
) -> Result<Vec<TableRow>> {
    let mut lists: HashMap<usize, Vec<IntPolynomial>> = HashMap::new();
    let mut rows = Vec::with_capacity(strata.len());
    for (i, s) in strata.iter().enumerate() {
        let degree = 2 * lift_to_double_cover(s).genus;
        if let std::collections::hash_map::Entry::Vacant(e) = lists.entry(degree) {
            e.insert(polynomials_below(degree, bound, options)?);
        }
        let case = if n == 0 { "s'".to_string() } else { format!("s'_{}", i + 1) };
        rows.push(sieve_list(case, s, &lists[&degree], mode, options)?.0);
    }
    Ok(rows)
}

/// One row per stratum of the n-punctured disc, at the bound δ_n.
pub fn reproduce_tables(n: usize, mode: SieveMode, options: &RunOptions) -> Result<Vec<TableRow>> {
    check_n(n)?;
    let bound = CandidateRegistry::standard().candidate(n)?;
    rows_for(n, &enumerate_disc_strata(n), &bound, mode, options)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CertificateStatus {
    /// Every stratum's survivor set is empty.
    Certified,
    /// Some polynomial survives; the bound is not established by the sieve.
    Conditional,
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub n: Option<usize>,
    pub mode: SieveMode,
    pub bound: String,
    pub bound_root: String,
    pub status: CertificateStatus,
    pub rows: Vec<TableRow>,
    pub survivors: Vec<RootedPolynomial>,
}

fn certificate(n: Option<usize>, bound: &IntPolynomial, mode: SieveMode, rows: Vec<TableRow>) -> Result<Certificate> {
    let mut survivors: Vec<RootedPolynomial> = rows.iter().flat_map(|r| r.survivors.iter().cloned()).collect();
    survivors.sort_by(|a, b| a.coefficients.cmp(&b.coefficients));
    survivors.dedup();
    let status = if survivors.is_empty() { CertificateStatus::Certified } else { CertificateStatus::Conditional };
    Ok(Certificate {
        n,
        mode,
        bound: bound.to_string(),
        bound_root: RootedPolynomial::new(bound)?.perron_root,
        status,
        rows,
        survivors,
    })
}

/// Checks δ(s) ≥ δ_n on every stratum of the n-punctured disc.
pub fn certify_minimum(n: usize, mode: SieveMode, options: &RunOptions) -> Result<Certificate> {
    let rows = reproduce_tables(n, mode, options)?;
    let bound = CandidateRegistry::standard().candidate(n)?;
    certificate(Some(n), &bound, mode, rows)
}

/// Same check for chosen strata at an arbitrary bound.
pub fn certify_strata(
    strata: &[SphereStratum],
    bound: &IntPolynomial,
    mode: SieveMode,
    options: &RunOptions,
) -> Result<Certificate> {
    let rows = rows_for(0, strata, bound, mode, options)?;
    certificate(None, bound, mode, rows)
}
