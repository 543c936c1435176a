//! Markdown, CSV and JSON renderings of table rows and certificates.

use super::{Certificate, TableRow};
use crate::error::{Error, Result};
use serde::Serialize;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

pub fn render_markdown(rows: &[TableRow], certificate: Option<&Certificate>) -> String {
    let mut out = String::new();
    out.push_str("| case | stratum on P^1 | stratum on S | genus of S | # polynomials | # compatible |\n");
    out.push_str("|---|---|---|---|---|---|\n");
    for r in rows {
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} |\n",
            r.case, r.stratum, r.lifted, r.genus, r.polynomial_count, r.compatible_count
        ));
    }
    let listed: Vec<&TableRow> =
        rows.iter().filter(|r| !r.survivors.is_empty() || !r.eliminated_by_joint.is_empty()).collect();
    for r in listed {
        out.push_str(&format!("\n{} {}\n\n| polynomial | Perron root | status |\n|---|---|---|\n", r.case, r.lifted));
        for s in &r.survivors {
            out.push_str(&format!("| {} | {} | survives |\n", s.polynomial, s.perron_root));
        }
        for s in &r.eliminated_by_joint {
            out.push_str(&format!("| {} | {} | eliminated by joint model |\n", s.polynomial, s.perron_root));
        }
    }
    if let Some(c) = certificate {
        out.push_str(&format!(
            "\nbound {} ({}), mode {}: {}\n",
            c.bound,
            c.bound_root,
            c.mode,
            match c.status {
                super::CertificateStatus::Certified => "certified".to_string(),
                super::CertificateStatus::Conditional =>
                    format!("conditional on {} surviving polynomial(s)", c.survivors.len()),
            }
        ));
    }
    out
}

pub fn render_csv(rows: &[TableRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Error::Internal(e.to_string());
    w.write_record(["stratum", "lifted", "genus", "n_polys", "n_compatible"]).map_err(csv_err)?;
    for r in rows {
        w.write_record([
            r.stratum.clone(),
            r.lifted.clone(),
            r.genus.to_string(),
            r.polynomial_count.to_string(),
            r.compatible_count.to_string(),
        ])
        .map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}

#[derive(Serialize)]
struct Envelope<'a> {
    schema_version: u32,
    rows: &'a [TableRow],
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<CertificateSummary<'a>>,
}

#[derive(Serialize)]
struct CertificateSummary<'a> {
    n: Option<usize>,
    mode: super::SieveMode,
    bound: &'a str,
    bound_root: &'a str,
    status: super::CertificateStatus,
    survivors: &'a [super::RootedPolynomial],
}

pub fn render_json(rows: &[TableRow], certificate: Option<&Certificate>) -> Result<String> {
    let env = Envelope {
        schema_version: REPORT_SCHEMA_VERSION,
        rows,
        certificate: certificate.map(|c| CertificateSummary {
            n: c.n,
            mode: c.mode,
            bound: &c.bound,
            bound_root: &c.bound_root,
            status: c.status,
            survivors: &c.survivors,
        }),
    };
    serde_json::to_string_pretty(&env).map_err(|e| Error::Internal(e.to_string()))
}
