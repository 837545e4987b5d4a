use num_traits::ToPrimitive;
use serde::Serialize;

use super::exact::Rational;
use super::spectrum::{closed_form_spectrum, SpectrumKind, SpectrumMultiset};
use crate::error::{Error, Result};
use crate::graph::{graph_stats, StarDecomposition};

/// Energeticity classification against the complete graph on the same
/// number of vertices. All comparisons are strict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct EnergyFlags {
    pub hypoenergetic: bool,
    pub hyperenergetic: bool,
    pub l_hyper: bool,
    pub q_hyper: bool,
    pub cn_hyper: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnergyReport {
    pub e: f64,
    pub le: f64,
    pub le_plus: f64,
    pub e_cn: f64,
    /// Average degree `2m/n`.
    #[serde(serialize_with = "serialize_ratio")]
    pub avg_degree_shift: Rational,
    pub flags: EnergyFlags,
    pub e_le_margin: f64,
}

fn serialize_ratio<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl EnergyReport {
    /// Assembles a report from the four energies and classifies it at
    /// `vertex_count` vertices.
    pub fn from_energies(
        e: f64,
        le: f64,
        le_plus: f64,
        e_cn: f64,
        avg_degree_shift: Rational,
        vertex_count: u128,
    ) -> Self {
        let flags = classify(e, le, le_plus, e_cn, vertex_count);
        Self { e, le, le_plus, e_cn, avg_degree_shift, flags, e_le_margin: le - e }
    }
}

/// `E(K_N) = LE(K_N) = LE+(K_N) = 2(N-1)`.
pub fn complete_graph_energy(vertex_count: u128) -> f64 {
    2.0 * (vertex_count as f64 - 1.0)
}

/// `E_CN(K_N) = 2(N-1)(N-2)`.
pub fn complete_graph_cn_energy(vertex_count: u128) -> f64 {
    let n = vertex_count as f64;
    2.0 * (n - 1.0) * (n - 2.0)
}

pub fn classify(e: f64, le: f64, le_plus: f64, e_cn: f64, vertex_count: u128) -> EnergyFlags {
    let baseline = complete_graph_energy(vertex_count);
    EnergyFlags {
        hypoenergetic: e < vertex_count as f64,
        hyperenergetic: e > baseline,
        l_hyper: le > baseline,
        q_hyper: le_plus > baseline,
        cn_hyper: e_cn > complete_graph_cn_energy(vertex_count),
    }
}

/// `Σ mult * |λ - shift|` over an integral spectrum, exactly. The shift is
/// `numer / denom` and every term is accumulated over the common denominator.
fn shifted_absolute_sum(spectrum: &SpectrumMultiset, numer: i128, denom: i128) -> Result<Rational> {
    let overflow = || Error::Overflow("Laplacian energy");
    let mut total: i128 = 0;
    for (value, mult) in spectrum.pairs() {
        if !value.is_integer() {
            return Err(Error::InvalidSpec(format!("non-integral eigenvalue {value} in {} spectrum", spectrum.kind())));
        }
        let lambda = value.coefficient().to_integer();
        let diff = lambda.checked_mul(denom).and_then(|x| x.checked_sub(numer)).ok_or_else(overflow)?;
        let mult = i128::try_from(*mult).map_err(|_| overflow())?;
        let term = diff.abs().checked_mul(mult).ok_or_else(overflow)?;
        total = total.checked_add(term).ok_or_else(overflow)?;
    }
    Ok(Rational::new(total, denom))
}

fn absolute_sum_f64(spectrum: &SpectrumMultiset) -> f64 {
    spectrum.pairs().iter().map(|(v, m)| v.abs().to_f64() * *m as f64).sum()
}

/// E, LE, LE⁺ and E_CN of the graph, summed over its closed-form spectra.
/// LE and LE⁺ are exact rationals until the final conversion.
pub fn energies(decomp: &StarDecomposition) -> Result<EnergyReport> {
    let stats = graph_stats(decomp);
    let overflow = || Error::Overflow("average degree");
    let two_m = i128::try_from(stats.edge_count).ok().and_then(|m| m.checked_mul(2)).ok_or_else(overflow)?;
    let n = i128::try_from(stats.vertex_count).map_err(|_| overflow())?;
    let shift = Rational::new(two_m, n);

    let e = absolute_sum_f64(&closed_form_spectrum(decomp, SpectrumKind::A));
    let le = shifted_absolute_sum(&closed_form_spectrum(decomp, SpectrumKind::L), two_m, n)?;
    let le_plus = shifted_absolute_sum(&closed_form_spectrum(decomp, SpectrumKind::Q), two_m, n)?;
    let e_cn = absolute_sum_f64(&closed_form_spectrum(decomp, SpectrumKind::CN));

    let to_f64 = |r: &Rational| r.to_f64().unwrap_or(f64::NAN);
    Ok(EnergyReport::from_energies(e, to_f64(&le), to_f64(&le_plus), e_cn, shift, stats.vertex_count))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ELeVerdict {
    /// `E <= LE`.
    pub holds: bool,
    /// `LE > |V| > E`.
    pub chain_holds: bool,
}

pub fn e_le_check(report: &EnergyReport, vertex_count: u128) -> ELeVerdict {
    let v = vertex_count as f64;
    ELeVerdict { holds: report.e <= report.le, chain_holds: report.le > v && v > report.e }
}
