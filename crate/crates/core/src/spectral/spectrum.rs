use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{CheckedAdd, CheckedMul, Zero};
use serde::Serialize;

use super::exact::{ExactEigenvalue, Rational};
use crate::error::{Error, Result};
use crate::graph::{MatrixKind, StarDecomposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SpectrumKind {
    A,
    L,
    Q,
    CN,
}

impl SpectrumKind {
    pub const ALL: [SpectrumKind; 4] = [Self::A, Self::L, Self::Q, Self::CN];

    pub fn matrix_kind(self) -> MatrixKind {
        match self {
            Self::A => MatrixKind::Adjacency,
            Self::L => MatrixKind::Laplacian,
            Self::Q => MatrixKind::SignlessLaplacian,
            Self::CN => MatrixKind::CommonNeighborhood,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::A => "A",
            Self::L => "L",
            Self::Q => "Q",
            Self::CN => "CN",
        }
    }
}

impl fmt::Display for SpectrumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SpectrumKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(Self::A),
            "L" => Ok(Self::L),
            "Q" => Ok(Self::Q),
            "CN" => Ok(Self::CN),
            _ => Err(Error::Usage(format!("unknown spectrum kind `{s}` (expected A, L, Q or CN)"))),
        }
    }
}

/// A spectrum as distinct exact eigenvalues with multiplicities, kept in
/// descending order of value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpectrumMultiset {
    kind: SpectrumKind,
    pairs: Vec<(ExactEigenvalue, u128)>,
}

impl SpectrumMultiset {
    /// Merges equal eigenvalues and drops zero multiplicities.
    pub fn from_terms(kind: SpectrumKind, terms: impl IntoIterator<Item = (ExactEigenvalue, u128)>) -> Self {
        let mut merged: BTreeMap<ExactEigenvalue, u128> = BTreeMap::new();
        for (value, mult) in terms {
            if mult > 0 {
                *merged.entry(value).or_insert(0) += mult;
            }
        }
        Self { kind, pairs: merged.into_iter().rev().collect() }
    }

    pub fn kind(&self) -> SpectrumKind {
        self.kind
    }

    pub fn pairs(&self) -> &[(ExactEigenvalue, u128)] {
        &self.pairs
    }

    pub fn total_multiplicity(&self) -> u128 {
        self.pairs.iter().map(|(_, m)| m).sum()
    }

    pub fn multiplicity_of(&self, value: &ExactEigenvalue) -> u128 {
        self.pairs.iter().find(|(v, _)| v == value).map_or(0, |(_, m)| *m)
    }

    /// True when every eigenvalue is an integer.
    pub fn is_integral(&self) -> bool {
        self.pairs.iter().all(|(v, _)| v.is_integer())
    }

    /// Same eigenvalues and multiplicities, ignoring the kind label.
    pub fn same_values(&self, other: &Self) -> bool {
        self.pairs == other.pairs
    }

    /// All eigenvalues as floats, ascending, each repeated by multiplicity.
    pub fn expanded_values(&self) -> Vec<f64> {
        let mut out = Vec::new();
        for (value, mult) in self.pairs.iter().rev() {
            let x = value.to_f64();
            out.extend(std::iter::repeat_n(x, *mult as usize));
        }
        out
    }

    /// Exact sum of eigenvalues, grouped by radicand. A rational sum has only
    /// the key 1; a zero sum is empty.
    pub fn sum(&self) -> Result<BTreeMap<u64, Rational>> {
        let mut out: BTreeMap<u64, Rational> = BTreeMap::new();
        for (value, mult) in &self.pairs {
            let term = scale(value.coefficient(), *mult)?;
            let slot = out.entry(value.radicand()).or_insert_with(Rational::zero);
            *slot = checked_add(slot, &term)?;
        }
        out.retain(|_, v| !v.is_zero());
        Ok(out)
    }

    /// Exact sum of squared eigenvalues.
    pub fn sum_of_squares(&self) -> Result<Rational> {
        let mut total = Rational::zero();
        for (value, mult) in &self.pairs {
            let c = value.coefficient();
            let sq = c.checked_mul(c).ok_or(Error::Overflow("sum of squares"))?;
            let term = scale(&sq, u128::from(value.radicand()))?;
            total = checked_add(&total, &scale(&term, *mult)?)?;
        }
        Ok(total)
    }

    /// Descending `(value)^multiplicity` terms separated by spaces.
    pub fn render(&self) -> String {
        self.pairs.iter().map(|(v, m)| format!("({v})^{m}")).collect::<Vec<_>>().join(" ")
    }
}

fn scale(value: &Rational, factor: u128) -> Result<Rational> {
    let factor = i128::try_from(factor).map_err(|_| Error::Overflow("spectrum sum"))?;
    value.checked_mul(&Rational::from_integer(factor)).ok_or(Error::Overflow("spectrum sum"))
}

fn checked_add(a: &Rational, b: &Rational) -> Result<Rational> {
    a.checked_add(b).ok_or(Error::Overflow("spectrum sum"))
}

/// Spectrum of the disjoint union of stars, one star `K_{1,s}` at a time:
/// A gives `0^(s-1), ±√s`; L and Q give `0, 1^(s-1), s+1`; CN gives
/// `0, (-1)^(s-1), s-1`.
pub fn closed_form_spectrum(decomp: &StarDecomposition, kind: SpectrumKind) -> SpectrumMultiset {
    let mut terms = Vec::with_capacity(3 * decomp.subgroup_count());
    for s in decomp.star_sizes() {
        let s_int = s as i128;
        match kind {
            SpectrumKind::A => {
                let root = ExactEigenvalue::sqrt(u64::try_from(s).expect("star size fits u64"));
                terms.push((ExactEigenvalue::zero(), s - 1));
                terms.push((root.neg(), 1));
                terms.push((root, 1));
            }
            SpectrumKind::L | SpectrumKind::Q => {
                terms.push((ExactEigenvalue::zero(), 1));
                terms.push((ExactEigenvalue::integer(1), s - 1));
                terms.push((ExactEigenvalue::integer(s_int + 1), 1));
            }
            SpectrumKind::CN => {
                terms.push((ExactEigenvalue::zero(), 1));
                terms.push((ExactEigenvalue::integer(-1), s - 1));
                terms.push((ExactEigenvalue::integer(s_int - 1), 1));
            }
        }
    }
    SpectrumMultiset::from_terms(kind, terms)
}

/// Numeric eigenvalues closer than this belong to the same cluster.
pub const CLUSTER_GAP: f64 = 1e-6;

/// Sizes of the runs of an ascending list whose consecutive gaps are at most
/// [`CLUSTER_GAP`].
fn cluster_sizes(sorted: &[f64]) -> Vec<usize> {
    let mut sizes = Vec::new();
    let mut run = 0;
    for (i, &x) in sorted.iter().enumerate() {
        if i > 0 && x - sorted[i - 1] > CLUSTER_GAP {
            sizes.push(run);
            run = 0;
        }
        run += 1;
    }
    if run > 0 {
        sizes.push(run);
    }
    sizes
}

/// Compares numerically computed eigenvalues with an exact spectrum: every
/// value within `tol` absolute after sorting, and the numeric clusters
/// matching the exact multiplicities. Returns the largest deviation.
pub fn match_numeric(exact: &SpectrumMultiset, numeric: &[f64], tol: f64) -> std::result::Result<f64, String> {
    let expected = exact.expanded_values();
    if expected.len() != numeric.len() {
        return Err(format!("{} numeric eigenvalues, expected {}", numeric.len(), expected.len()));
    }
    let mut sorted = numeric.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut worst = 0.0f64;
    for (e, x) in expected.iter().zip(&sorted) {
        let dev = (e - x).abs();
        if dev.is_nan() || dev > tol {
            return Err(format!("eigenvalue {x:e} deviates from {e:e} by {dev:e} (tolerance {tol:e})"));
        }
        worst = worst.max(dev);
    }
    let (want, got) = (cluster_sizes(&expected), cluster_sizes(&sorted));
    if want != got {
        return Err(format!("cluster multiplicities {got:?} do not match {want:?}"));
    }
    Ok(worst)
}

/// Mean of the numeric eigenvalues assigned to each exact value, in the
/// order of [`SpectrumMultiset::pairs`]. `None` when the counts differ.
pub fn numeric_means(exact: &SpectrumMultiset, numeric: &[f64]) -> Option<Vec<f64>> {
    if exact.total_multiplicity() != numeric.len() as u128 {
        return None;
    }
    let mut sorted = numeric.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut rest = &sorted[..];
    let mut means: Vec<f64> = exact
        .pairs()
        .iter()
        .rev()
        .map(|(_, mult)| {
            let (chunk, tail) = rest.split_at(*mult as usize);
            rest = tail;
            chunk.iter().sum::<f64>() / chunk.len() as f64
        })
        .collect();
    means.reverse();
    Some(means)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_star_decomposition;
    use crate::group::CyclicGroupSpec;

    fn spectrum(n: u64, kind: SpectrumKind) -> SpectrumMultiset {
        let decomp = build_star_decomposition(&CyclicGroupSpec::new(n).unwrap()).unwrap();
        closed_form_spectrum(&decomp, kind)
    }

    #[test]
    fn k2() {
        assert_eq!(spectrum(1, SpectrumKind::A).render(), "(1)^1 (\u{2212}1)^1");
        assert_eq!(spectrum(1, SpectrumKind::L).render(), "(2)^1 (0)^1");
        assert_eq!(spectrum(1, SpectrumKind::CN).render(), "(0)^2");
    }

    #[test]
    fn order_six() {
        assert_eq!(spectrum(6, SpectrumKind::L).render(), "(25)^1 (9)^1 (4)^1 (2)^1 (1)^32 (0)^4");
        let a = spectrum(6, SpectrumKind::A);
        assert_eq!(a.multiplicity_of(&ExactEigenvalue::zero()), 32);
        assert_eq!(a.multiplicity_of(&ExactEigenvalue::new(Rational::from_integer(2), 6)), 1);
        assert_eq!(a.multiplicity_of(&ExactEigenvalue::new(Rational::from_integer(-2), 2)), 1);
        assert_eq!(a.total_multiplicity(), 40);
        assert_eq!(spectrum(6, SpectrumKind::CN).render(), "(23)^1 (7)^1 (2)^1 (0)^5 (\u{2212}1)^32");
    }

    #[test]
    fn order_two_adjacency() {
        assert_eq!(
            spectrum(2, SpectrumKind::A).render(),
            "(\u{221a}3)^1 (1)^1 (0)^2 (\u{2212}1)^1 (\u{2212}\u{221a}3)^1"
        );
    }

    #[test]
    fn traces() {
        let a = spectrum(12, SpectrumKind::A);
        assert!(a.sum().unwrap().is_empty());
        assert_eq!(a.sum_of_squares().unwrap(), Rational::from_integer(2 * 144));
        let l = spectrum(12, SpectrumKind::L);
        let sum = l.sum().unwrap();
        assert_eq!(sum.len(), 1);
        assert_eq!(sum[&1], Rational::from_integer(2 * 144));
        assert!(spectrum(12, SpectrumKind::CN).sum().unwrap().is_empty());
    }

    #[test]
    fn expanded_is_ascending() {
        let v = spectrum(6, SpectrumKind::A).expanded_values();
        assert_eq!(v.len(), 40);
        assert!(v.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn numeric_matching() {
        let exact = spectrum(2, SpectrumKind::A);
        let r3 = 3f64.sqrt();
        let good = [-r3, -1.0, 1e-12, -1e-12, 1.0, r3 + 1e-11];
        assert!(match_numeric(&exact, &good, 1e-9).unwrap() < 1e-10);
        assert!(match_numeric(&exact, &good, 1e-12).is_err());
        assert!(match_numeric(&exact, &good[..5], 1e-9).is_err());
        assert_eq!(cluster_sizes(&[0.0, 0.0, 1.0, 1.0 + 1e-9, 3.0]), vec![2, 2, 1]);

        let means = numeric_means(&exact, &good).unwrap();
        assert_eq!(means.len(), 5);
        assert_eq!(means[2], 0.0);
        assert_eq!(means[0], r3 + 1e-11);
        assert!(numeric_means(&exact, &good[..5]).is_none());
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("cn".parse::<SpectrumKind>().unwrap(), SpectrumKind::CN);
        assert!("X".parse::<SpectrumKind>().is_err());
    }
}
