//! Reference data: the minimal braids for n = 3..8 and the per-stratum minima.
//!
//! Braid words are carried as text only. `sN` is the N-th Artin generator,
//! `sN^-1` its inverse, `D_k` the half twist on the first k strands and
//! `d_k` the product s1 s2 ... s(k-1).

use crate::error::{Error, Result};
use crate::polynomial::IntPolynomial;
use crate::strata::SphereStratum;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremRow {
    pub n: usize,
    pub delta: &'static str,
    pub polynomial: &'static str,
    pub braid: &'static str,
    pub stratum: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MinimumSource {
    /// Reachable from the Lefschetz sieve.
    Lefschetz,
    /// Settled by train-track automata; reference value only.
    External,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratumMinimum {
    pub n: usize,
    /// 1-based index into the canonical stratum order.
    pub case: usize,
    pub delta: &'static str,
    pub polynomial: &'static str,
    pub braid: &'static str,
    pub starred: bool,
    pub source: MinimumSource,
}

#[derive(Clone, Debug, Serialize)]
pub struct CandidateRegistry {
    pub theorem: Vec<TheoremRow>,
    pub minima: Vec<StratumMinimum>,
}

const THEOREM: [(usize, &str, &str, &str, &str); 6] = [
    (3, "2.61803", "x^2-3x+1", "s1 s2^-1", "(-1;-1^3)"),
    (4, "2.29663", "x^4-2x^3-2x+1", "s1 s2 s3^-1", "(-1;-1^4,1)"),
    (5, "1.72208", "x^4-x^3-x^2-x+1", "s1 s2 s3 s1 s2 s3 s4 s3^-1", "(0;-1^5,1)"),
    (6, "1.72208", "x^4-x^3-x^2-x+1", "s2 s1 s2 s1 (s1 s2 s3 s4 s5)^2", "(0;-1^5,1)"),
    (7, "1.46557", "x^7-2x^4-2x^3+1", "s4^-2 (s1 s2 s3 s4 s5 s6)^2", "(2;-1^7,1)"),
    (8, "1.41345", "x^8-2x^5-2x^3+1", "s2^-1 s1^-1 (s1 s2 s3 s4 s5 s6 s7)^5", "(3;-1^8,1)"),
];

const MINIMA: [(usize, usize, &str, &str, &str, bool); 26] = [
    (3, 1, "2.61803", "x^2-3x+1", "s1 s2^-1", false),
    (4, 1, "2.61803", "x^3-2x^2-2x+1", "s1 s2 s1 s2 s3^-1 D_3", false),
    (4, 2, "2.29663", "x^4-2x^3-2x+1", "s1 s2 s3^-1", false),
    (5, 1, "1.72208", "x^4-x^3-x^2-x+1", "d_3 d_4 s3^-1", false),
    (5, 2, "1.72208", "x^5-2x^3-2x^2+1", "s1^2 d_4^2", false),
    (5, 3, "2.15372", "x^5-2x^4-2x+1", "d_3 s4^-1", false),
    (5, 4, "2.01536", "x^6-x^5-4x^3-x+1", "s1 s2 s4^-1 s3^-1", true),
    (6, 1, "1.88320", "x^5-x^4-x^3-x^2-x+1", "D_5 s4 s5", false),
    (6, 2, "1.83929", "x^6-x^4-4x^3-x^2+1", "s5 s4^-1 d_5^2", false),
    (6, 3, "1.88320", "x^6-2x^4-2x^3-2x^2+1", "s1^2 s4 d_5^2", false),
    (6, 4, "2.08102", "x^6-2x^5-2x+1", "D_4 s5^-1", true),
    (6, 5, "2.08102", "x^7-x^6-2x^5-2x^2-x+1", "s4 s5^2 s4 d_5^2", true),
    (6, 6, "1.88320", "x^7-x^6-2x^4-2x^3-x+1", "D_3 s5^-1 s4^-1", false),
    (6, 7, "2.17113", "x^8-2x^7+x^6-4x^5+4x^4-4x^3+x^2-2x+1", "D_3 (s3 s4 s5)^-2", true),
    (7, 1, "1.55603", "x^6-x^5-x^4+x^3-x^2-x+1", "s3 s4 s5 s6 s2 s3 s4 D_3 d_6", false),
    (7, 2, "1.46557", "x^7-2x^4-2x^3+1", "s4^-2 d_6^2", false),
    (7, 3, "1.46557", "x^7-2x^4-2x^3+1", "s6^2 d_6^2", false),
    (7, 4, "1.55603", "x^7-2x^5-2x^2+1", "s5^2 d_6^3", false),
    (7, 5, "2.04249", "x^7-2x^6-2x+1", "s4^-2 d_6", true),
    (7, 6, "1.61094", "x^8-x^7-2x^5+2x^4-2x^3-x+1", "s2^-1 s3 s4 s5 d_6^2", false),
    (7, 7, "2.47541", "x^8-3x^7+2x^6-2x^5+2x^3-2x^2+3x-1", "D_3 s3 (s3 s4 s5 s6)^-1", true),
    (7, 8, "1.80979", "x^8-x^7-2x^5-2x^3-x+1", "D_4 s6^-1 s5^-1", true),
    (7, 9, "1.75488", "x^8-x^7-4x^4-x+1", "D_3 s6^-1 s5^-1 s4^-1", false),
    (7, 10, "1.61094", "x^9-x^7-2x^6-2x^3-x^2+1", "s5^-1 s4^-1 s3 s4 s5 s6 d_6^3", false),
    (7, 11, "2.04249", "x^9-2x^8+x^7-2x^6-2x^3+x^2-2x+1", "s4 s5 s6 s3 s4 s5 s2^-1 s1^-1 d_6^-1", true),
    (7, 12, "2.21497", "x^10-2x^9-x^7-x^3-2x+1", "s2 s1^2 s2 d_6^-2", true),
];

const PUNCTURED_NOTE: &str =
    "realised on the 5-punctured stratum (0;-1^5,1) with its degree-1 point punctured; the sieve certifies the bound over strata of the 6-punctured disc";

impl CandidateRegistry {
    pub fn standard() -> Self {
        let theorem = THEOREM
            .iter()
            .map(|&(n, delta, polynomial, braid, stratum)| TheoremRow {
                n,
                delta,
                polynomial,
                braid,
                stratum,
                note: (n == 6).then_some(PUNCTURED_NOTE),
            })
            .collect();
        let minima = MINIMA
            .iter()
            .map(|&(n, case, delta, polynomial, braid, starred)| StratumMinimum {
                n,
                case,
                delta,
                polynomial,
                braid,
                starred,
                source: if starred { MinimumSource::External } else { MinimumSource::Lefschetz },
            })
            .collect();
        Self { theorem, minima }
    }

    pub fn theorem_row(&self, n: usize) -> Result<&TheoremRow> {
        self.theorem
            .iter()
            .find(|r| r.n == n)
            .ok_or_else(|| Error::Invalid(format!("n must be between 3 and 8, got {n}")))
    }

    /// The candidate polynomial P_n whose Perron root is δ_n.
    pub fn candidate(&self, n: usize) -> Result<IntPolynomial> {
        self.theorem_row(n)?.polynomial.parse()
    }

    pub fn theorem_stratum(&self, n: usize) -> Result<SphereStratum> {
        SphereStratum::parse(self.theorem_row(n)?.stratum)
    }

    pub fn minima_for(&self, n: usize) -> Vec<&StratumMinimum> {
        self.minima.iter().filter(|m| m.n == n).collect()
    }
}
