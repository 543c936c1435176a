//! On-disk JSON cache of enumeration results, keyed by degree and the bound's
//! exact coefficient array.

use super::{enumerate_perron, EnumerationQuery, PolynomialList};
use crate::error::{Error, Result};
use crate::polynomial::IntPolynomial;
use serde::{Deserialize, Serialize};
use std::fs;
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};

pub const CACHE_FORMAT_VERSION: u32 = 1;

static TMP_COUNTER: AtomicUsize = AtomicUsize::new(0);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheDocument {
    pub format_version: u32,
    pub degree: usize,
    pub bound: IntPolynomial,
    pub entries: Vec<IntPolynomial>,
}

pub fn cache_file_name(degree: usize, bound: &IntPolynomial) -> String {
    let key: Vec<String> = bound.coeffs().iter().map(|c| c.to_string().replace('-', "m")).collect();
    format!("perron-d{degree}-b{}.json", key.join("_"))
}

/// Reads a cached list when present and current, else computes and stores it.
/// The search mode is not part of the key: both modes return the same set.
pub fn load_or_compute(dir: Option<&Path>, query: &EnumerationQuery) -> Result<PolynomialList> {
    let Some(dir) = dir else { return enumerate_perron(query) };
    let path = dir.join(cache_file_name(query.degree, &query.bound));
    if let Ok(text) = fs::read_to_string(&path) {
        if let Ok(doc) = serde_json::from_str::<CacheDocument>(&text) {
            if doc.format_version == CACHE_FORMAT_VERSION && doc.degree == query.degree && doc.bound == query.bound {
                let count = doc.entries.len();
                return Ok(PolynomialList { query: query.clone(), entries: doc.entries, count });
            }
        }
    }
    let list = enumerate_perron(query)?;
    let doc = CacheDocument {
        format_version: CACHE_FORMAT_VERSION,
        degree: query.degree,
        bound: query.bound.clone(),
        entries: list.entries.clone(),
    };
    fs::create_dir_all(dir).map_err(|e| Error::Internal(format!("cache dir: {e}")))?;
    let text = serde_json::to_string(&doc).map_err(|e| Error::Internal(e.to_string()))?;
    let n = TMP_COUNTER.fetch_add(1, Ordering::Relaxed);
    let tmp = path.with_extension(format!("json.{}.{n}.tmp", std::process::id()));
    fs::write(&tmp, text)
        .and_then(|_| fs::rename(&tmp, &path))
        .map_err(|e| Error::Internal(format!("cache write: {e}")))?;
    Ok(list)
}
