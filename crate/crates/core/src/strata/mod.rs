//! Singularity data on the punctured sphere and on the orientation double
//! cover.
//!
//! Sphere text: `(k1;k^n,...)` where `k1` is the marked point. Surface text:
//! `(d^n,du^n,...)` where the suffix `u` marks points swapped in pairs by the
//! deck involution.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SphereStratum {
    pub marked_degree: i64,
    /// (degree, multiplicity), ascending by degree, degrees distinct.
    pub entries: Vec<(i64, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    PunctureLift,
    MarkedLift,
    InteriorLift,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceGroup {
    pub degree: u32,
    pub count: usize,
    pub provenance: Provenance,
    pub tau_paired: bool,
}

impl SurfaceGroup {
    /// Half the degree: a degree-2d point has d+1 outgoing separatrices.
    pub fn half_degree(&self) -> u32 {
        self.degree / 2
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceStratum {
    pub groups: Vec<SurfaceGroup>,
    pub genus: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stratum {
    Sphere(SphereStratum),
    Surface(SurfaceStratum),
}

impl SphereStratum {
    pub fn new(marked_degree: i64, entries: impl IntoIterator<Item = (i64, usize)>) -> Result<Self> {
        let mut merged: Vec<(i64, usize)> = Vec::new();
        for (k, n) in entries {
            if n == 0 {
                return Err(Error::Constraint(format!("entry {k} has multiplicity 0")));
            }
            match merged.iter_mut().find(|e| e.0 == k) {
                Some(e) => e.1 += n,
                None => merged.push((k, n)),
            }
        }
        merged.sort();
        let s = Self { marked_degree, entries: merged };
        s.validate()?;
        Ok(s)
    }

    fn validate(&self) -> Result<()> {
        if self.marked_degree < -1 {
            return Err(Error::Constraint(format!("marked degree {} is below -1", self.marked_degree)));
        }
        for &(k, _) in &self.entries {
            if k < -1 {
                return Err(Error::Constraint(format!("degree {k} is below -1")));
            }
            if k == 0 {
                return Err(Error::Constraint("degree-0 entries are regular points, not singularities".into()));
            }
        }
        let total: i64 = self.entries.iter().map(|&(k, n)| k * n as i64).sum();
        if total != -self.marked_degree - 4 {
            return Err(Error::Constraint(format!(
                "sum of n_i k_i is {total} but must equal -k1 - 4 = {}",
                -self.marked_degree - 4
            )));
        }
        Ok(())
    }

    pub fn punctures(&self) -> usize {
        self.entries.iter().find(|e| e.0 == -1).map_or(0, |e| e.1)
    }

    /// Singular points other than punctures and the marked point.
    pub fn interior_points(&self) -> usize {
        self.entries.iter().filter(|e| e.0 >= 1).map(|e| e.1).sum()
    }

    fn interior_degrees(&self) -> Vec<i64> {
        let mut out = Vec::new();
        for &(k, n) in self.entries.iter().filter(|e| e.0 >= 1) {
            out.extend(std::iter::repeat_n(k, n));
        }
        out
    }
}

fn partitions(total: i64, min: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if total == 0 {
        out.push(prefix.clone());
        return;
    }
    for k in min..=total {
        prefix.push(k);
        partitions(total - k, k, prefix, out);
        prefix.pop();
    }
}

/// All strata of the n-punctured disc: n poles, the marked point, and interior
/// singularities of positive degree. Ordered by the number of interior points,
/// then by the ascending list of interior degrees.
pub fn enumerate_disc_strata(n: usize) -> Vec<SphereStratum> {
    let n = n as i64;
    let mut out = Vec::new();
    for k1 in -1..=(n - 4) {
        let mut parts = Vec::new();
        partitions(n - 4 - k1, 1, &mut Vec::new(), &mut parts);
        for part in parts {
            let mut entries = vec![(-1, n as usize)];
            for k in part {
                entries.push((k, 1));
            }
            out.push(SphereStratum::new(k1, entries).expect("generated strata are valid"));
        }
    }
    out.sort_by_key(|s| (s.interior_points(), s.interior_degrees()));
    out
}

fn lift_point(k: i64, count: usize, provenance: Provenance) -> SurfaceGroup {
    if k.rem_euclid(2) == 1 {
        SurfaceGroup { degree: (2 * k + 2) as u32, count, provenance, tau_paired: false }
    } else {
        SurfaceGroup { degree: k as u32, count: 2 * count, provenance, tau_paired: true }
    }
}

/// Lift to the orientation double cover branched over the odd-degree points.
pub fn lift_to_double_cover(s: &SphereStratum) -> SurfaceStratum {
    let mut groups = Vec::new();
    if let Some(&(_, n)) = s.entries.iter().find(|e| e.0 == -1) {
        groups.push(lift_point(-1, n, Provenance::PunctureLift));
    }
    groups.push(lift_point(s.marked_degree, 1, Provenance::MarkedLift));
    for &(k, n) in s.entries.iter().filter(|e| e.0 >= 1) {
        groups.push(lift_point(k, n, Provenance::InteriorLift));
    }
    let genus = genus_of(&groups).expect("lifted strata have integral genus");
    SurfaceStratum { groups, genus }
}

fn genus_of(groups: &[SurfaceGroup]) -> Result<usize> {
    let total: usize = groups.iter().map(|g| g.degree as usize * g.count).sum();
    if !(total + 4).is_multiple_of(4) {
        return Err(Error::Constraint("inconsistent singularity data: degree sum + 4 is not divisible by 4".into()));
    }
    let g = (total + 4) / 4;
    if g == 0 {
        return Err(Error::Constraint("inconsistent singularity data".into()));
    }
    Ok(g)
}

/// g = (sum of degrees + 4) / 4.
pub fn genus(s: &SurfaceStratum) -> Result<usize> {
    genus_of(&s.groups)
}

impl SurfaceStratum {
    /// Validated construction from groups.
    pub fn new(groups: Vec<SurfaceGroup>) -> Result<Self> {
        for g in &groups {
            if g.degree % 2 == 1 {
                return Err(Error::Constraint(format!("degree {} is odd", g.degree)));
            }
            if g.count == 0 {
                return Err(Error::Constraint("group with count 0".into()));
            }
            if g.tau_paired && g.count % 2 == 1 {
                return Err(Error::Constraint(format!("paired group {}u has odd count {}", g.degree, g.count)));
            }
        }
        let genus = genus_of(&groups)?;
        Ok(Self { groups, genus })
    }

    /// Groups as sorted (degree, count, paired) triples, ignoring provenance.
    pub fn shape(&self) -> Vec<(u32, usize, bool)> {
        let mut v: Vec<_> = self.groups.iter().map(|g| (g.degree, g.count, g.tau_paired)).collect();
        v.sort();
        v
    }

    pub fn point_count(&self) -> usize {
        self.groups.iter().map(|g| g.count).sum()
    }
}

impl fmt::Display for SphereStratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.marked_degree)?;
        for (i, &(k, n)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if n == 1 {
                write!(f, "{k}")?;
            } else {
                write!(f, "{k}^{n}")?;
            }
        }
        write!(f, ")")
    }
}

impl fmt::Display for SurfaceGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.degree)?;
        if self.tau_paired {
            write!(f, "u")?;
        }
        if self.count > 1 {
            write!(f, "^{}", self.count)?;
        }
        Ok(())
    }
}

impl fmt::Display for SurfaceStratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.groups.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stratum::Sphere(s) => s.fmt(f),
            Stratum::Surface(s) => s.fmt(f),
        }
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Self { s: s.as_bytes(), pos: 0 }
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected '{}'", c as char)))
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.ws();
        let start = self.pos;
        if self.s.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits {
            return Err(Error::parse(start, "expected an integer"));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .expect("ascii")
            .parse()
            .map_err(|_| Error::parse(start, "integer out of range"))
    }

    fn count(&mut self) -> Result<usize> {
        if self.eat(b'^') {
            let at = self.pos;
            let n = self.int()?;
            if n < 1 {
                return Err(Error::parse(at, "multiplicity must be positive"));
            }
            Ok(n as usize)
        } else {
            Ok(1)
        }
    }

    fn done(&mut self) -> Result<()> {
        self.ws();
        if self.pos == self.s.len() {
            Ok(())
        } else {
            Err(Error::parse(self.pos, "trailing characters"))
        }
    }
}

/// Parses either notation; a `;` after the first entry selects sphere data.
pub fn parse_stratum(text: &str) -> Result<Stratum> {
    if text.contains(';') {
        SphereStratum::parse(text).map(Stratum::Sphere)
    } else {
        SurfaceStratum::parse(text).map(Stratum::Surface)
    }
}

impl SphereStratum {
    pub fn parse(text: &str) -> Result<Self> {
        let mut c = Cursor::new(text);
        c.expect(b'(')?;
        let k1 = c.int()?;
        c.expect(b';')?;
        let mut entries = Vec::new();
        loop {
            let k = c.int()?;
            let n = c.count()?;
            entries.push((k, n));
            if c.eat(b',') {
                continue;
            }
            c.expect(b')')?;
            break;
        }
        c.done()?;
        SphereStratum::new(k1, entries)
    }
}

impl SurfaceStratum {
    /// Parses surface notation. Provenance is inferred: the first unpaired
    /// degree-0 group with at least three points holds the punctures, the
    /// single group (one point, or one pair) right after it is the marked
    /// point, falling back to the last single group; the rest are interior.
    pub fn parse(text: &str) -> Result<Self> {
        let mut c = Cursor::new(text);
        c.expect(b'(')?;
        let mut raw = Vec::new();
        loop {
            let at = c.pos;
            let d = c.int()?;
            if d < 0 {
                return Err(Error::parse(at, "surface degrees are nonnegative"));
            }
            let paired = c.eat(b'u');
            let n = c.count()?;
            raw.push((d as u32, n, paired));
            if c.eat(b',') {
                continue;
            }
            c.expect(b')')?;
            break;
        }
        c.done()?;
        let single = |&(_, n, p): &(u32, usize, bool)| (!p && n == 1) || (p && n == 2);
        let punct = raw.iter().position(|&(d, n, p)| d == 0 && !p && n >= 3);
        let marked = match punct {
            Some(i) if i + 1 < raw.len() && single(&raw[i + 1]) => Some(i + 1),
            Some(i) if i > 0 && single(&raw[i - 1]) => Some(i - 1),
            _ => (0..raw.len()).rev().find(|&i| Some(i) != punct && single(&raw[i])),
        };
        let groups = raw
            .iter()
            .enumerate()
            .map(|(i, &(degree, count, tau_paired))| SurfaceGroup {
                degree,
                count,
                tau_paired,
                provenance: if Some(i) == punct {
                    Provenance::PunctureLift
                } else if Some(i) == marked {
                    Provenance::MarkedLift
                } else {
                    Provenance::InteriorLift
                },
            })
            .collect();
        SurfaceStratum::new(groups)
    }
}
