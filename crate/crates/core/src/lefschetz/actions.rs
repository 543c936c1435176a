//! Enumeration of actions on tracked points, one provenance group at a time.

use crate::strata::{Provenance, SurfaceGroup, SurfaceStratum};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::collections::HashSet;

/// One cycle of tracked points with its first-return rotation, counted in
/// unstable prongs modulo 2(d+1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleSpec {
    pub group: usize,
    pub half_degree: u32,
    pub points: Vec<String>,
    pub rotation: u32,
}

/// Permutation of the tracked points, as disjoint cycles covering every point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularityAction {
    pub cycles: Vec<CycleSpec>,
}

impl SingularityAction {
    /// Builds an action from `(group, cycle lengths, rotations)` triples,
    /// consuming each group's points in label order.
    pub fn from_cycles(stratum: &SurfaceStratum, spec: &[(usize, Vec<usize>, Vec<u32>)]) -> Self {
        let mut cycles = Vec::new();
        for (group, lens, rots) in spec {
            let g = &stratum.groups[*group];
            let labels = point_labels(stratum, *group);
            let mut next = 0;
            for (l, r) in lens.iter().zip(rots) {
                cycles.push(CycleSpec {
                    group: *group,
                    half_degree: g.half_degree(),
                    points: labels[next..next + l].to_vec(),
                    rotation: *r,
                });
                next += l;
            }
        }
        Self { cycles }
    }

    /// Cycle notation, e.g. `(p1 p2 p3)(m1)(a1 a1')`.
    pub fn cycle_notation(&self) -> String {
        self.cycles.iter().map(|c| format!("({})", c.points.join(" "))).collect()
    }

    pub fn rotations(&self) -> Vec<u32> {
        self.cycles.iter().map(|c| c.rotation).collect()
    }
}

impl Serialize for SingularityAction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SingularityAction", 3)?;
        st.serialize_field("permutation", &self.cycle_notation())?;
        st.serialize_field("rotations", &self.rotations())?;
        st.serialize_field("cycles", &self.cycles)?;
        st.end()
    }
}

fn group_prefix(stratum: &SurfaceStratum, group: usize) -> String {
    match stratum.groups[group].provenance {
        Provenance::PunctureLift => "p".into(),
        Provenance::MarkedLift => "m".into(),
        Provenance::InteriorLift => {
            let k = stratum.groups[..group].iter().filter(|g| g.provenance == Provenance::InteriorLift).count();
            let letter = (b'a' + (k % 26) as u8) as char;
            if k < 26 {
                letter.to_string()
            } else {
                format!("{letter}{}", k / 26)
            }
        }
    }
}

/// Point labels of a group; τ-paired points come as `a1, a1', a2, a2', ...`.
pub(crate) fn point_labels(stratum: &SurfaceStratum, group: usize) -> Vec<String> {
    let g = &stratum.groups[group];
    let prefix = group_prefix(stratum, group);
    if g.tau_paired {
        (1..=g.count / 2).flat_map(|i| [format!("{prefix}{i}"), format!("{prefix}{i}'")]).collect()
    } else {
        (1..=g.count).map(|i| format!("{prefix}{i}")).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum PieceKind {
    /// One φ-cycle of `len` points.
    Plain,
    /// One φ-cycle of 2·len points swapping `len` τ-pairs.
    Swap,
    /// Two φ-cycles of `len` points exchanged by τ.
    Twin,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Piece {
    pub kind: PieceKind,
    pub len: usize,
    pub rotation: u32,
}

/// One way of acting on a group, with its index sums for φ^m and the number of
/// its points fixed by τ∘φ^m (coupled model only).
#[derive(Clone, Debug)]
pub(crate) struct GroupOption {
    pub phi: Vec<i64>,
    pub tau: Vec<i64>,
    pub pieces: Vec<Piece>,
}

/// Partitions of n into nonincreasing parts, largest first.
pub(crate) fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn cycle_vector(d: u32, len: usize, s: u32, sign: i8, horizon: usize) -> Vec<i64> {
    (1..=horizon)
        .map(|m| {
            if m % len != 0 {
                0
            } else {
                let positive = sign > 0 || m % 2 == 0;
                len as i64 * super::prong_index(d, s, m / len, positive)
            }
        })
        .collect()
}

fn add(a: &mut [i64], b: &[i64]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
}

/// Candidate pieces for one sphere-level cycle of length `len`.
fn piece_choices(
    d: u32,
    len: usize,
    sign: i8,
    paired: bool,
    coupled: bool,
    horizon: usize,
) -> Vec<(Piece, Vec<i64>, Vec<i64>)> {
    let modulus = 2 * (d + 1);
    let zero = vec![0i64; horizon];
    let mut out = Vec::new();
    if !coupled {
        // Odd rotations flip the transverse orientation, which only an odd
        // cycle of a negative-spectrum map can do.
        let odd = sign < 0 && len % 2 == 1;
        for s in 0..modulus {
            if (s % 2 == 1) == odd {
                let piece = Piece { kind: PieceKind::Plain, len, rotation: s };
                out.push((piece, cycle_vector(d, len, s, sign, horizon), zero.clone()));
            }
        }
        return out;
    }
    if !paired {
        let tau: Vec<i64> = (1..=horizon).map(|m| if m % len == 0 { len as i64 } else { 0 }).collect();
        for s in (0..modulus).step_by(2) {
            let piece = Piece { kind: PieceKind::Plain, len, rotation: s };
            out.push((piece, cycle_vector(d, len, s, 1, horizon), tau.clone()));
        }
        return out;
    }
    // τ equals φ^len on a swapping cycle, so φ^len reverses the prongs'
    // transverse orientation: the first return is twice an odd rotation.
    let tau: Vec<i64> =
        (1..=horizon).map(|m| if m % len == 0 && (m / len) % 2 == 1 { 2 * len as i64 } else { 0 }).collect();
    for u in (1..modulus).step_by(2) {
        let s = (2 * u) % modulus;
        let piece = Piece { kind: PieceKind::Swap, len, rotation: s };
        out.push((piece, cycle_vector(d, 2 * len, s, 1, horizon), tau.clone()));
    }
    for s in (0..modulus).step_by(2) {
        let piece = Piece { kind: PieceKind::Twin, len, rotation: s };
        let mut v = cycle_vector(d, len, s, 1, horizon);
        let w = v.clone();
        add(&mut v, &w);
        out.push((piece, v, zero.clone()));
    }
    out
}

/// Distinct options for one group. In the uncoupled model every permutation
/// of the group is allowed; in the coupled model paired groups are permuted
/// compatibly with τ and the sign is positive.
pub(crate) fn group_options(g: &SurfaceGroup, sign: i8, horizon: usize, coupled: bool) -> Vec<GroupOption> {
    let d = g.half_degree();
    let paired = coupled && g.tau_paired;
    let cycles = if paired { g.count / 2 } else { g.count };
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for part in partitions(cycles) {
        let choices: Vec<_> = part.iter().map(|&l| piece_choices(d, l, sign, paired, coupled, horizon)).collect();
        let mut pick = vec![0usize; part.len()];
        loop {
            let mut phi = vec![0i64; horizon];
            let mut tau = vec![0i64; horizon];
            let mut pieces = Vec::with_capacity(part.len());
            for (i, &j) in pick.iter().enumerate() {
                let (piece, f, t) = &choices[i][j];
                add(&mut phi, f);
                add(&mut tau, t);
                pieces.push(*piece);
            }
            if seen.insert((phi.clone(), tau.clone())) {
                out.push(GroupOption { phi, tau, pieces });
            }
            if !advance(&mut pick, &part, &choices) {
                break;
            }
        }
    }
    out
}

/// Next choice vector with nondecreasing choices across equal parts.
fn advance<T>(pick: &mut [usize], part: &[usize], choices: &[Vec<T>]) -> bool {
    let n = pick.len();
    for i in (0..n).rev() {
        if pick[i] + 1 < choices[i].len() {
            pick[i] += 1;
            for j in i + 1..n {
                pick[j] = if part[j] == part[j - 1] { pick[j - 1] } else { 0 };
            }
            return true;
        }
    }
    false
}

/// Materialises the chosen options as a labelled action.
pub(crate) fn build_action(
    stratum: &SurfaceStratum,
    per_group: &[Vec<GroupOption>],
    pick: &[usize],
) -> SingularityAction {
    let mut cycles = Vec::new();
    for (gi, &j) in pick.iter().enumerate() {
        let g = &stratum.groups[gi];
        let d = g.half_degree();
        let labels = point_labels(stratum, gi);
        let mut next = 0;
        for piece in &per_group[gi][j].pieces {
            match piece.kind {
                PieceKind::Plain => {
                    let points = labels[next..next + piece.len].to_vec();
                    next += piece.len;
                    cycles.push(CycleSpec { group: gi, half_degree: d, points, rotation: piece.rotation });
                }
                PieceKind::Swap | PieceKind::Twin => {
                    let pairs = &labels[next..next + 2 * piece.len];
                    next += 2 * piece.len;
                    let first: Vec<String> = pairs.iter().step_by(2).cloned().collect();
                    let second: Vec<String> = pairs.iter().skip(1).step_by(2).cloned().collect();
                    if piece.kind == PieceKind::Swap {
                        let points = first.into_iter().chain(second).collect();
                        cycles.push(CycleSpec { group: gi, half_degree: d, points, rotation: piece.rotation });
                    } else {
                        cycles.push(CycleSpec { group: gi, half_degree: d, points: first, rotation: piece.rotation });
                        cycles.push(CycleSpec { group: gi, half_degree: d, points: second, rotation: piece.rotation });
                    }
                }
            }
        }
    }
    SingularityAction { cycles }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let sizes: Vec<usize> = (0..9).map(|n| partitions(n).len()).collect();
        assert_eq!(sizes, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn labels_and_notation() {
        let s = SurfaceStratum::parse("(0^5,0,2u^2)").unwrap();
        assert_eq!(point_labels(&s, 2), vec!["a1", "a1'"]);
        let a = SingularityAction::from_cycles(
            &s,
            &[(0, vec![3, 2], vec![0, 0]), (1, vec![1], vec![0]), (2, vec![2], vec![2])],
        );
        assert_eq!(a.cycle_notation(), "(p1 p2 p3)(p4 p5)(m1)(a1 a1')");
    }
}
