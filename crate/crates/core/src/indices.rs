//! Degree-based topological indices of the SGB-graph.
//!
//! Every pair vertex has degree 1 and each hub has degree equal to its star
//! size, so each index collapses to a sum over stars. [`edge_sum_indices`]
//! evaluates the textbook per-edge definitions instead and serves as the
//! oracle for the star sums.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeList, StarDecomposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ZagrebReport {
    pub m1: i128,
    pub m2: i128,
    /// `|L(G)| * M2 - |G|^4`.
    pub hv_margin: i128,
    pub hv_holds: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DegreeIndexReport {
    pub randic: f64,
    pub abc: f64,
    pub ga: f64,
    pub harmonic: f64,
    pub sci: f64,
}

impl DegreeIndexReport {
    pub fn values(&self) -> [(&'static str, f64); 5] {
        [("randic", self.randic), ("abc", self.abc), ("ga", self.ga), ("harmonic", self.harmonic), ("sci", self.sci)]
    }
}

fn overflow() -> Error {
    Error::Overflow("Zagreb indices")
}

pub fn zagreb(decomp: &StarDecomposition) -> Result<ZagrebReport> {
    let mut m2: i128 = 0;
    for s in decomp.star_sizes() {
        let s = i128::try_from(s).map_err(|_| overflow())?;
        m2 = s.checked_mul(s).and_then(|sq| m2.checked_add(sq)).ok_or_else(overflow)?;
    }
    let pairs = i128::try_from(decomp.pair_count()).map_err(|_| overflow())?;
    let m1 = m2.checked_add(pairs).ok_or_else(overflow)?;
    let k = decomp.subgroup_count() as i128;
    let hv_margin =
        k.checked_mul(m2).zip(pairs.checked_mul(pairs)).and_then(|(a, b)| a.checked_sub(b)).ok_or_else(overflow)?;
    Ok(ZagrebReport { m1, m2, hv_margin, hv_holds: hv_margin >= 0 })
}

pub fn degree_indices(decomp: &StarDecomposition) -> DegreeIndexReport {
    let mut r = DegreeIndexReport { randic: 0.0, abc: 0.0, ga: 0.0, harmonic: 0.0, sci: 0.0 };
    for s in decomp.star_sizes() {
        let s = s as f64;
        let root = s.sqrt();
        r.randic += root;
        // sqrt(s^2 - s) without forming s^2
        r.abc += root * (s - 1.0).sqrt();
        r.ga += 2.0 * s * root / (1.0 + s);
        r.harmonic += 2.0 * s / (1.0 + s);
        r.sci += s / (1.0 + s).sqrt();
    }
    r
}

/// Zagreb and degree indices from the per-edge definitions on an explicit graph.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DefinitionalIndices {
    pub m1: i128,
    pub m2: i128,
    pub degree: DegreeIndexReport,
}

pub fn edge_sum_indices(graph: &EdgeList) -> Result<DefinitionalIndices> {
    let deg = graph.degrees();
    let mut m1: i128 = 0;
    for &d in &deg {
        let d = i128::from(d);
        m1 = d.checked_mul(d).and_then(|sq| m1.checked_add(sq)).ok_or_else(overflow)?;
    }
    let mut m2: i128 = 0;
    let mut r = DegreeIndexReport { randic: 0.0, abc: 0.0, ga: 0.0, harmonic: 0.0, sci: 0.0 };
    for &(u, v) in graph.edges() {
        let (du, dv) = (deg[u], deg[v]);
        let prod = i128::from(du) * i128::from(dv);
        m2 = m2.checked_add(prod).ok_or_else(overflow)?;
        let (du, dv) = (du as f64, dv as f64);
        let (p, s) = (du * dv, du + dv);
        r.randic += 1.0 / p.sqrt();
        r.abc += ((s - 2.0) / p).sqrt();
        r.ga += p.sqrt() / (0.5 * s);
        r.harmonic += 2.0 / s;
        r.sci += 1.0 / s.sqrt();
    }
    Ok(DefinitionalIndices { m1, m2, degree: r })
}

/// `|a - b| <= tol * max(|a|, |b|)`, with exact zeros equal.
pub fn relative_close(a: f64, b: f64, tol: f64) -> bool {
    a == b || (a - b).abs() <= tol * a.abs().max(b.abs())
}
