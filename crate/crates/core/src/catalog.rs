//! Family-specific closed forms for the cyclic orders `p^n`, `pq`, `p^2 q` and
//! `p^2 q^2`, transcribed term by term from the family theorems.
//!
//! Nothing here calls into the star-sum pipeline: the catalog is the second,
//! independent witness that the pipeline is checked against. Formulas are
//! kept in their printed shape even where a simpler equivalent exists, and
//! printed slips are kept as printed (see [`KNOWN_PRINTED_DISCREPANCIES`]).

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Star, StarDecomposition};
use crate::group::{is_prime, CyclicGroupSpec, MAX_GROUP_ORDER};
use crate::indices::DegreeIndexReport;
use crate::spectral::{EnergyReport, ExactEigenvalue, Rational, SpectrumKind, SpectrumMultiset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FamilyTag {
    PrimePower {
        p: u64,
        n: u32,
    },
    PQ {
        p: u64,
        q: u64,
    },
    /// `p` is the squared prime; `p > q` is allowed.
    P2Q {
        p: u64,
        q: u64,
    },
    P2Q2 {
        p: u64,
        q: u64,
    },
    OutsideCatalog,
}

/// Printed formulas known to disagree with the definitional sums, as
/// `(family name, index name)`.
pub const KNOWN_PRINTED_DISCREPANCIES: [(&str, &str); 2] = [("p2q", "sci"), ("p2q2", "sci")];

impl FamilyTag {
    pub fn name(&self) -> &'static str {
        match self {
            Self::PrimePower { .. } => "pn",
            Self::PQ { .. } => "pq",
            Self::P2Q { .. } => "p2q",
            Self::P2Q2 { .. } => "p2q2",
            Self::OutsideCatalog => "outside",
        }
    }

    pub fn is_catalogued(&self) -> bool {
        !matches!(self, Self::OutsideCatalog)
    }

    /// Checks the theorem hypotheses and returns the group order.
    pub fn order(&self) -> Result<u64> {
        let bad = |msg: String| Err(Error::InvalidSpec(msg));
        let need_prime = |x: u64| -> Result<()> {
            if is_prime(x) {
                Ok(())
            } else {
                Err(Error::InvalidSpec(format!("{x} is not prime")))
            }
        };
        let pow = |base: u64, e: u32| base.checked_pow(e).ok_or(Error::Overflow("family order"));
        let order = match *self {
            Self::OutsideCatalog => return Err(Error::UnsupportedFamily(self.to_string())),
            Self::PrimePower { p, n } => {
                need_prime(p)?;
                if n == 0 {
                    return bad("prime power exponent must be at least 1".into());
                }
                pow(p, n)?
            }
            Self::PQ { p, q } | Self::P2Q2 { p, q } => {
                need_prime(p)?;
                need_prime(q)?;
                if p >= q {
                    return bad(format!("{} requires p < q, got p={p}, q={q}", self.name()));
                }
                if matches!(self, Self::PQ { .. }) {
                    p.checked_mul(q).ok_or(Error::Overflow("family order"))?
                } else {
                    pow(p, 2)?.checked_mul(pow(q, 2)?).ok_or(Error::Overflow("family order"))?
                }
            }
            Self::P2Q { p, q } => {
                need_prime(p)?;
                need_prime(q)?;
                if p == q {
                    return bad(format!("p2q requires distinct primes, got p=q={p}"));
                }
                pow(p, 2)?.checked_mul(q).ok_or(Error::Overflow("family order"))?
            }
        };
        if order > MAX_GROUP_ORDER {
            return Err(Error::OrderTooLarge { order, cap: MAX_GROUP_ORDER });
        }
        Ok(order)
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::PrimePower { p, n } => write!(f, "pn:{p}:{n}"),
            Self::PQ { p, q } => write!(f, "pq:{p}:{q}"),
            Self::P2Q { p, q } => write!(f, "p2q:{p}:{q}"),
            Self::P2Q2 { p, q } => write!(f, "p2q2:{p}:{q}"),
            Self::OutsideCatalog => f.write_str("outside"),
        }
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |i: usize| -> Result<u64> {
            parts
                .get(i)
                .and_then(|x| x.parse().ok())
                .ok_or_else(|| Error::InvalidSpec(format!("malformed family tag `{s}`")))
        };
        let tag = match parts[0] {
            "outside" if parts.len() == 1 => return Ok(Self::OutsideCatalog),
            _ if parts.len() != 3 => return Err(Error::InvalidSpec(format!("malformed family tag `{s}`"))),
            "pn" => Self::PrimePower {
                p: num(1)?,
                n: u32::try_from(num(2)?).map_err(|_| Error::InvalidSpec(format!("exponent too large in `{s}`")))?,
            },
            "pq" => Self::PQ { p: num(1)?, q: num(2)? },
            "p2q" => Self::P2Q { p: num(1)?, q: num(2)? },
            "p2q2" => Self::P2Q2 { p: num(1)?, q: num(2)? },
            _ => return Err(Error::InvalidSpec(format!("unknown family in `{s}`"))),
        };
        tag.order()?;
        Ok(tag)
    }
}

/// Classifies the group by the exponent pattern of its factorization.
pub fn detect_family(spec: &CyclicGroupSpec) -> FamilyTag {
    match spec.factorization() {
        [a] => FamilyTag::PrimePower { p: a.prime, n: a.exponent },
        [a, b] => match (a.exponent, b.exponent) {
            (1, 1) => FamilyTag::PQ { p: a.prime, q: b.prime },
            (2, 1) => FamilyTag::P2Q { p: a.prime, q: b.prime },
            (1, 2) => FamilyTag::P2Q { p: b.prime, q: a.prime },
            (2, 2) => FamilyTag::P2Q2 { p: a.prime, q: b.prime },
            _ => FamilyTag::OutsideCatalog,
        },
        _ => FamilyTag::OutsideCatalog,
    }
}

/// `(p, q)` as `i128` after validating the tag.
fn params(tag: &FamilyTag) -> Result<(i128, i128)> {
    tag.order()?;
    Ok(match *tag {
        FamilyTag::PrimePower { p, n } => (i128::from(p), i128::from(n)),
        FamilyTag::PQ { p, q } | FamilyTag::P2Q { p, q } | FamilyTag::P2Q2 { p, q } => (i128::from(p), i128::from(q)),
        FamilyTag::OutsideCatalog => unreachable!("rejected by order()"),
    })
}

fn unsupported(tag: &FamilyTag, what: &str) -> Error {
    Error::UnsupportedFamily(format!("no {what} formula for {tag}"))
}

// Orders are capped at 10^6, so every polynomial below is at most
// order^4 <= 10^24 in magnitude and fits in i128 without checks.

/// Star list of the structure theorem, as `(subgroup order, star size)`.
pub fn catalog_structure(tag: &FamilyTag) -> Result<StarDecomposition> {
    let (p, q) = params(tag)?;
    let entries: Vec<(i128, i128)> = match tag {
        FamilyTag::PrimePower { n, .. } => {
            let mut v = vec![(1, 1)];
            for k in 1..=*n {
                v.push((p.pow(k), p.pow(2 * k - 2) * (p.pow(2) - 1)));
            }
            v
        }
        FamilyTag::PQ { .. } => {
            vec![(1, 1), (p, p.pow(2) - 1), (q, q.pow(2) - 1), (p * q, p.pow(2) * q.pow(2) - p.pow(2) - q.pow(2) + 1)]
        }
        FamilyTag::P2Q { .. } => vec![
            (1, 1),
            (p, p.pow(2) - 1),
            (p.pow(2), p.pow(4) - p.pow(2)),
            (q, q.pow(2) - 1),
            (p * q, p.pow(2) * q.pow(2) - p.pow(2) - q.pow(2) + 1),
            (p.pow(2) * q, p.pow(4) * q.pow(2) - p.pow(2) * q.pow(2) - p.pow(4) + p.pow(2)),
        ],
        FamilyTag::P2Q2 { .. } => vec![
            (1, 1),
            (p, p.pow(2) - 1),
            (p.pow(2), p.pow(4) - p.pow(2)),
            (q, q.pow(2) - 1),
            (q.pow(2), q.pow(4) - q.pow(2)),
            (p * q, p.pow(2) * q.pow(2) - p.pow(2) - q.pow(2) + 1),
            (p * q.pow(2), p.pow(2) * q.pow(4) - p.pow(2) * q.pow(2) - q.pow(4) + q.pow(2)),
            (p.pow(2) * q, p.pow(4) * q.pow(2) - p.pow(2) * q.pow(2) - p.pow(4) + p.pow(2)),
            (
                p.pow(2) * q.pow(2),
                p.pow(4) * q.pow(4) - p.pow(2) * q.pow(4) - p.pow(4) * q.pow(2) + p.pow(2) * q.pow(2),
            ),
        ],
        FamilyTag::OutsideCatalog => unreachable!(),
    };
    let stars = entries.into_iter().map(|(m, s)| Star { subgroup_order: m as u64, star_size: s as u128 }).collect();
    StarDecomposition::new(tag.order()?, stars)
}

/// `(M1, M2)` from the Zagreb theorems. The prime-power family has no
/// printed Zagreb theorem.
pub fn catalog_zagreb(tag: &FamilyTag) -> Result<(i128, i128)> {
    let (p, q) = params(tag)?;
    let pw = |x: i128, e: u32| x.pow(e);
    Ok(match tag {
        FamilyTag::PQ { .. } => (
            pw(p, 4) * pw(q, 4) - 2 * pw(p, 4) * pw(q, 2) - 2 * pw(p, 2) * pw(q, 4)
                + 5 * pw(p, 2) * pw(q, 2)
                + 2 * pw(p, 4)
                + 2 * pw(q, 4)
                - 4 * pw(p, 2)
                - 4 * pw(q, 2)
                + 4,
            pw(p, 4) * pw(q, 4) - 2 * pw(p, 4) * pw(q, 2) - 2 * pw(p, 2) * pw(q, 4)
                + 4 * pw(p, 2) * pw(q, 2)
                + 2 * pw(p, 4)
                + 2 * pw(q, 4)
                - 4 * pw(p, 2)
                - 4 * pw(q, 2)
                + 4,
        ),
        FamilyTag::P2Q { .. } => (
            pw(p, 8) * pw(q, 4) + 2 * pw(p, 4) * pw(q, 4) + 4 * pw(p, 6) * pw(q, 2) - 2 * pw(p, 6) * pw(q, 4)
                + 2 * pw(p, 8)
                + 4 * pw(p, 4)
                - 2 * pw(p, 8) * pw(q, 2)
                - 3 * pw(p, 4) * pw(q, 2)
                - 4 * pw(p, 6)
                - 2 * pw(p, 2) * pw(q, 4)
                + 4 * pw(p, 2) * pw(q, 2)
                + 2 * pw(q, 4)
                - 4 * pw(p, 2)
                - 4 * pw(q, 2)
                + 4,
            pw(p, 8) * pw(q, 4) + 2 * pw(p, 4) * pw(q, 4) + 4 * pw(p, 6) * pw(q, 2) - 2 * pw(p, 6) * pw(q, 4)
                + 2 * pw(p, 8)
                + 4 * pw(p, 4)
                - 2 * pw(p, 8) * pw(q, 2)
                - 4 * pw(p, 4) * pw(q, 2)
                - 4 * pw(p, 6)
                - 2 * pw(p, 2) * pw(q, 4)
                + 4 * pw(p, 2) * pw(q, 2)
                + 2 * pw(q, 4)
                - 4 * pw(p, 2)
                - 4 * pw(q, 2)
                + 4,
        ),
        FamilyTag::P2Q2 { .. } => {
            let common = pw(p, 8) * pw(q, 8)
                - 2 * pw(p, 6) * pw(q, 8)
                - 2 * pw(p, 8) * pw(q, 6)
                - 4 * pw(p, 4) * pw(q, 6)
                - 4 * pw(p, 6) * pw(q, 4)
                - 2 * pw(p, 2) * pw(q, 8)
                - 2 * pw(p, 8) * pw(q, 2)
                + 2 * pw(p, 4) * pw(q, 8)
                + 2 * pw(p, 8) * pw(q, 4)
                + 4 * pw(p, 6) * pw(q, 6);
            let tail =
                4 * pw(p, 2) * pw(q, 6) + 4 * pw(p, 6) * pw(q, 2) - 4 * pw(p, 2) * pw(q, 4) - 4 * pw(p, 4) * pw(q, 2)
                    + 4 * pw(p, 2) * pw(q, 2)
                    + 2 * pw(q, 8)
                    + 2 * pw(p, 8)
                    - 4 * pw(q, 6)
                    - 4 * pw(p, 6)
                    + 4 * pw(q, 4)
                    + 4 * pw(p, 4)
                    - 4 * pw(p, 2)
                    - 4 * pw(q, 2)
                    + 4;
            (common + 5 * pw(p, 4) * pw(q, 4) + tail, common + 4 * pw(p, 4) * pw(q, 4) + tail)
        }
        FamilyTag::PrimePower { .. } | FamilyTag::OutsideCatalog => return Err(unsupported(tag, "Zagreb")),
    })
}

/// R, ABC, GA, H and SCI as printed. Only `pq`, `p^2 q` and `p^2 q^2` have
/// printed formulas.
pub fn catalog_degree_indices(tag: &FamilyTag) -> Result<DegreeIndexReport> {
    let (pi, qi) = params(tag)?;
    let (p, q) = (pi as f64, qi as f64);
    let sqrt = f64::sqrt;
    let f = |x: i128| x as f64;
    let (p2, q2) = (pi * pi, qi * qi);
    let (p4, q4) = (p2 * p2, q2 * q2);
    // recurring printed subexpressions
    let a = f(p2 - 1);
    let b = f(q2 - 1);
    let cube_a = sqrt(a * a * a);
    let cube_b = sqrt(b * b * b);
    let pq_star = p2 * q2 - p2 - q2; // p^2q^2 - p^2 - q^2
    let p2q_star = p4 * q2 - p2 * q2 - p4 + p2; // p^4q^2 - p^2q^2 - p^4 + p^2
    let pq2_star = p2 * q4 - p2 * q2 - q4 + q2; // p^2q^4 - p^2q^2 - q^4 + q^2
    let p2q2_star = p4 * q4 - p2 * q4 - p4 * q2 + p2 * q2;

    Ok(match tag {
        FamilyTag::PQ { .. } => DegreeIndexReport {
            randic: 1.0 + sqrt(a) * (1.0 + sqrt(b)) + sqrt(b),
            abc: sqrt(a) * (sqrt(f(p2 - 2)) + sqrt(b * f(pq_star))) + sqrt(b * f(q2 - 2)),
            ga: 1.0 + 2.0 * cube_a * (1.0 / f(p2) + cube_b / f(pq_star + 2)) + 2.0 * cube_b / f(q2),
            harmonic: 1.0 + 2.0 * a * (1.0 / f(p2) + b / f(pq_star + 2)) + 2.0 * b / f(q2),
            sci: 1.0 / sqrt(2.0) + a * (1.0 / p + b / sqrt(f(pq_star + 2))) + b / q,
        },
        FamilyTag::P2Q { .. } => DegreeIndexReport {
            randic: 1.0 + sqrt(a) * (p + 1.0) * (1.0 + sqrt(b)) + sqrt(b),
            abc: sqrt(a)
                * (sqrt(f(p2 - 2)) + p * sqrt(f(p4 - p2 - 1)) + sqrt(b * f(pq_star)) + p * sqrt(b * f(p2q_star - 1)))
                + sqrt(b * f(q2 - 2)),
            ga: 1.0
                + 2.0
                    * cube_a
                    * (1.0 / f(p2)
                        + p.powi(3) / f(p4 - p2 + 1)
                        + cube_b / f(pq_star + 2)
                        + p.powi(3) * cube_b / f(p2q_star + 1))
                + 2.0 * cube_b / f(q2),
            harmonic: 1.0
                + 2.0 * a * (1.0 / f(p2) + f(p2) / f(p4 - p2 + 1) + b / f(pq_star + 2) + f(p2) * b / f(p2q_star + 1))
                + 2.0 * b / f(q2),
            // printed: the last bracketed term has no square root and "+2"
            sci: 1.0 / sqrt(2.0)
                + a * (1.0 / p + f(p2) / sqrt(f(p4 - p2 + 1)) + b / sqrt(f(pq_star + 2)) + f(p2) * b / f(p2q_star + 2))
                + b / q,
        },
        FamilyTag::P2Q2 { .. } => DegreeIndexReport {
            randic: 1.0 + sqrt(a) * (p + 1.0 + sqrt(b) * (1.0 + p + q + p * q)) + sqrt(b) * (q + 1.0),
            abc: sqrt(a)
                * (sqrt(f(p2 - 2))
                    + p * sqrt(f(p4 - p2 - 1))
                    + sqrt(b * f(pq_star))
                    + q * sqrt(b * f(pq2_star - 1))
                    + p * sqrt(b * f(p2q_star - 1))
                    + p * q * sqrt(b * f(p2q2_star - 1)))
                + sqrt(b) * (sqrt(f(q2 - 2)) + q * sqrt(f(q4 - q2 - 1))),
            ga: 1.0
                + 2.0
                    * cube_a
                    * (1.0 / f(p2)
                        + p.powi(3) / f(p4 - p2 + 1)
                        + cube_b / f(pq_star + 2)
                        + q.powi(3) * cube_b / f(pq2_star + 1)
                        + p.powi(3) * cube_b / f(p2q_star + 1)
                        + p.powi(3) * q.powi(3) * cube_b / f(p2q2_star + 1))
                + 2.0 * cube_b * (1.0 / f(q2) + q.powi(3) / f(q4 - q2 + 1)),
            harmonic: 1.0
                + 2.0
                    * a
                    * (1.0 / f(p2)
                        + f(p2) / f(p4 - p2 + 1)
                        + b / f(pq_star + 2)
                        + f(p2) * b / f(p2q_star + 1)
                        + f(q2) * b / f(pq2_star + 1)
                        + f(p2 * q2) * b / f(p2q2_star + 1))
                + 2.0 * b * (1.0 / f(q2) + f(q2) / f(q4 - q2 + 1)),
            // printed: the p^2(q^2-1) term as in the p^2 q case, and (q^2-1)
            // where the q^4-q^2 star calls for q^2
            sci: 1.0 / sqrt(2.0)
                + a * (1.0 / p
                    + f(p2) / sqrt(f(p4 - p2 + 1))
                    + b / sqrt(f(pq_star + 2))
                    + f(p2) * b / f(p2q_star + 2)
                    + f(q2) * b / sqrt(f(pq2_star + 1))
                    + f(p2 * q2) * b / sqrt(f(p2q2_star + 1)))
                + b * (1.0 / q + b / sqrt(f(q4 - q2 + 1))),
        },
        FamilyTag::PrimePower { .. } | FamilyTag::OutsideCatalog => return Err(unsupported(tag, "degree index")),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogSpectra {
    pub a: SpectrumMultiset,
    pub l: SpectrumMultiset,
    pub q: SpectrumMultiset,
    pub cn: SpectrumMultiset,
}

impl CatalogSpectra {
    pub fn get(&self, kind: SpectrumKind) -> &SpectrumMultiset {
        match kind {
            SpectrumKind::A => &self.a,
            SpectrumKind::L => &self.l,
            SpectrumKind::Q => &self.q,
            SpectrumKind::CN => &self.cn,
        }
    }
}

fn int(x: i128) -> ExactEigenvalue {
    ExactEigenvalue::integer(x)
}

fn radical(c: i128, k: i128) -> ExactEigenvalue {
    ExactEigenvalue::new(Rational::from_integer(c), k as u64)
}

/// Builds the A-spectrum from the printed list of positive `c√k` values
/// (each with multiplicity 1 for both signs) and the printed zero count.
fn plus_minus(zeros: i128, positive: &[ExactEigenvalue]) -> Vec<(ExactEigenvalue, u128)> {
    let mut terms = vec![(int(0), zeros as u128)];
    for v in positive {
        terms.push((v.clone(), 1));
        terms.push((v.neg(), 1));
    }
    terms
}

fn singles(values: &[i128]) -> impl Iterator<Item = (ExactEigenvalue, u128)> + '_ {
    values.iter().map(|&v| (int(v), 1))
}

/// The four printed spectra, merged after canonicalization.
pub fn catalog_spectra(tag: &FamilyTag) -> Result<CatalogSpectra> {
    let (p, q) = params(tag)?;
    let (p2, q2) = (p * p, q * q);
    let (p4, q4) = (p2 * p2, q2 * q2);
    let (a, l, cn): (Vec<_>, Vec<_>, Vec<_>) = match tag {
        FamilyTag::PrimePower { n, .. } => {
            let n = *n;
            let ni = i128::from(n);
            let p2n = p.pow(2 * n);
            let mut pos = vec![int(1)];
            for k in 0..n {
                pos.push(radical(p.pow(k), p2 - 1));
            }
            let mut l: Vec<_> = vec![(int(0), (ni + 1) as u128), (int(1), (p2n - ni - 1) as u128)];
            l.extend(singles(&[2, p2]));
            let mut cn: Vec<_> = vec![(int(0), (ni + 2) as u128), (int(-1), (p2n - ni - 1) as u128)];
            cn.extend(singles(&[p2 - 2]));
            for k in 2..=n {
                l.push((int(p.pow(2 * k) - p.pow(2 * k - 2) + 1), 1));
                cn.push((int(p.pow(2 * k) - p.pow(2 * k - 2) - 1), 1));
            }
            (plus_minus(p2n - ni - 1, &pos), l, cn)
        }
        FamilyTag::PQ { .. } => {
            let pos = [int(1), radical(1, p2 - 1), radical(1, q2 - 1), radical(1, (p2 - 1) * (q2 - 1))];
            let mut l = vec![(int(0), 4), (int(1), (p2 * q2 - 4) as u128)];
            l.extend(singles(&[2, p2, q2, p2 * q2 - p2 - q2 + 2]));
            let mut cn = vec![(int(0), 5), (int(-1), (p2 * q2 - 4) as u128)];
            cn.extend(singles(&[p2 - 2, q2 - 2, p2 * q2 - p2 - q2]));
            (plus_minus(p2 * q2 - 4, &pos), l, cn)
        }
        FamilyTag::P2Q { .. } => {
            let pos = [
                int(1),
                radical(1, p2 - 1),
                radical(1, q2 - 1),
                radical(p, p2 - 1),
                radical(1, (p2 - 1) * (q2 - 1)),
                radical(p, (p2 - 1) * (q2 - 1)),
            ];
            let mut l = vec![(int(0), 6), (int(1), (p4 * q2 - 6) as u128)];
            l.extend(singles(&[2, p2, q2, p4 - p2 + 1, p2 * q2 - p2 - q2 + 2, p4 * q2 - p2 * q2 - p4 + p2 + 1]));
            let mut cn = vec![(int(0), 7), (int(-1), (p4 * q2 - 6) as u128)];
            cn.extend(singles(&[p2 - 2, q2 - 2, p4 - p2 - 1, p2 * q2 - p2 - q2, p4 * q2 - p2 * q2 - p4 + p2 - 1]));
            (plus_minus(p4 * q2 - 6, &pos), l, cn)
        }
        FamilyTag::P2Q2 { .. } => {
            let r = (p2 - 1) * (q2 - 1);
            let pos = [
                int(1),
                radical(1, p2 - 1),
                radical(1, q2 - 1),
                radical(p, p2 - 1),
                radical(q, q2 - 1),
                radical(1, r),
                radical(p, r),
                radical(q, r),
                radical(p * q, r),
            ];
            let mut l = vec![(int(0), 9), (int(1), (p4 * q4 - 9) as u128)];
            l.extend(singles(&[
                2,
                p2,
                q2,
                p4 - p2 + 1,
                q4 - q2 + 1,
                p2 * q2 - p2 - q2 + 2,
                p4 * q2 - p2 * q2 - p4 + p2 + 1,
                p2 * q4 - p2 * q2 - q4 + q2 + 1,
                p4 * q4 - p2 * q4 - p4 * q2 + p2 * q2 + 1,
            ]));
            let mut cn = vec![(int(0), 10), (int(-1), (p4 * q4 - 9) as u128)];
            cn.extend(singles(&[
                p2 - 2,
                q2 - 2,
                p4 - p2 - 1,
                q4 - q2 - 1,
                p2 * q2 - p2 - q2,
                p4 * q2 - p2 * q2 - p4 + p2 - 1,
                p2 * q4 - p2 * q2 - q4 + q2 - 1,
                p4 * q4 - p2 * q4 - p4 * q2 + p2 * q2 - 1,
            ]));
            (plus_minus(p4 * q4 - 9, &pos), l, cn)
        }
        FamilyTag::OutsideCatalog => unreachable!(),
    };
    Ok(CatalogSpectra {
        a: SpectrumMultiset::from_terms(SpectrumKind::A, a),
        q: SpectrumMultiset::from_terms(SpectrumKind::Q, l.clone()),
        l: SpectrumMultiset::from_terms(SpectrumKind::L, l),
        cn: SpectrumMultiset::from_terms(SpectrumKind::CN, cn),
    })
}

/// E, LE = LE⁺ and E_CN from the energy theorems, with the average degree and
/// vertex count taken from the same statements.
pub fn catalog_energies(tag: &FamilyTag) -> Result<EnergyReport> {
    let (p, q) = params(tag)?;
    let (pf, qf) = (p as f64, q as f64);
    let sqrt = f64::sqrt;
    let (p2, q2) = (p * p, q * q);
    let (e, le_num, le_den, e_cn, two_m, vertices) = match tag {
        FamilyTag::PrimePower { n, .. } => {
            let (n, ni) = (*n, i128::from(*n));
            let p2n = p.pow(2 * n);
            let geometric = (p.pow(n) - 1) / (p - 1);
            (
                2.0 + 2.0 * sqrt((p2 - 1) as f64) * geometric as f64,
                2 * p.pow(4 * n) + 2 * ni * ni + 4 * ni + 2,
                p2n + ni + 1,
                2 * p2n - 2 * ni - 2,
                2 * p2n,
                p2n + ni + 1,
            )
        }
        FamilyTag::PQ { .. } => {
            let x = p2 * q2;
            (
                2.0 + 2.0 * sqrt((p2 - 1) as f64) * (1.0 + sqrt((q2 - 1) as f64)) + 2.0 * sqrt((q2 - 1) as f64),
                2 * x * x + 32,
                x + 4,
                2 * x - 8,
                2 * x,
                x + 4,
            )
        }
        FamilyTag::P2Q { .. } => {
            let x = p2 * p2 * q2;
            (
                2.0 + 2.0 * sqrt((p2 - 1) as f64) * ((1.0 + pf) * (1.0 + sqrt((q2 - 1) as f64)))
                    + 2.0 * sqrt((q2 - 1) as f64),
                2 * p.pow(8) * q.pow(4) + 72,
                x + 6,
                2 * x - 12,
                2 * x,
                x + 6,
            )
        }
        FamilyTag::P2Q2 { .. } => {
            let x = p2 * p2 * q2 * q2;
            (
                2.0 + 2.0 * (1.0 + pf) * sqrt((p2 - 1) as f64)
                    + 2.0 * (1.0 + qf) * sqrt((q2 - 1) as f64)
                    + 2.0 * (1.0 + pf + qf + pf * qf) * sqrt(((p2 - 1) * (q2 - 1)) as f64),
                2 * p.pow(8) * q.pow(8) + 162,
                x + 9,
                2 * x - 18,
                2 * x,
                x + 9,
            )
        }
        FamilyTag::OutsideCatalog => unreachable!(),
    };
    let le = le_num as f64 / le_den as f64;
    Ok(EnergyReport::from_energies(e, le, le, e_cn as f64, Rational::new(two_m, vertices), vertices as u128))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sizes(d: &StarDecomposition) -> Vec<u128> {
        let mut v: Vec<u128> = d.star_sizes().collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn detection() {
        let tag = |n| detect_family(&CyclicGroupSpec::new(n).unwrap());
        assert_eq!(tag(8), FamilyTag::PrimePower { p: 2, n: 3 });
        assert_eq!(tag(12), FamilyTag::P2Q { p: 2, q: 3 });
        assert_eq!(tag(18), FamilyTag::P2Q { p: 3, q: 2 });
        assert_eq!(tag(36), FamilyTag::P2Q2 { p: 2, q: 3 });
        assert_eq!(tag(15), FamilyTag::PQ { p: 3, q: 5 });
        assert_eq!(tag(30), FamilyTag::OutsideCatalog);
        assert_eq!(tag(24), FamilyTag::OutsideCatalog);
        assert_eq!(tag(1), FamilyTag::OutsideCatalog);
    }

    #[test]
    fn tag_validation_and_text() {
        assert!(FamilyTag::PQ { p: 3, q: 2 }.order().is_err());
        assert!(FamilyTag::PQ { p: 2, q: 4 }.order().is_err());
        assert!(FamilyTag::P2Q { p: 3, q: 3 }.order().is_err());
        assert_eq!(FamilyTag::P2Q { p: 3, q: 2 }.order().unwrap(), 18);
        assert!(FamilyTag::PrimePower { p: 2, n: 0 }.order().is_err());
        assert!(matches!(FamilyTag::PrimePower { p: 2, n: 20 }.order(), Err(Error::OrderTooLarge { .. })));
        for t in [
            FamilyTag::PrimePower { p: 5, n: 2 },
            FamilyTag::PQ { p: 2, q: 3 },
            FamilyTag::P2Q { p: 3, q: 2 },
            FamilyTag::P2Q2 { p: 2, q: 5 },
            FamilyTag::OutsideCatalog,
        ] {
            assert_eq!(t.to_string().parse::<FamilyTag>().unwrap(), t);
        }
        assert!("pq:3:2".parse::<FamilyTag>().is_err());
        assert!("pq:2".parse::<FamilyTag>().is_err());
    }

    #[test]
    fn structures() {
        assert_eq!(sizes(&catalog_structure(&FamilyTag::PQ { p: 2, q: 3 }).unwrap()), vec![1, 3, 8, 24]);
        assert_eq!(sizes(&catalog_structure(&FamilyTag::P2Q { p: 2, q: 3 }).unwrap()), vec![1, 3, 8, 12, 24, 96]);
        assert_eq!(
            sizes(&catalog_structure(&FamilyTag::P2Q2 { p: 2, q: 3 }).unwrap()),
            vec![1, 3, 8, 12, 24, 72, 96, 216, 864]
        );
        assert_eq!(sizes(&catalog_structure(&FamilyTag::PrimePower { p: 2, n: 2 }).unwrap()), vec![1, 3, 12]);
        assert!(catalog_structure(&FamilyTag::OutsideCatalog).is_err());
    }

    #[test]
    fn zagreb_values() {
        assert_eq!(catalog_zagreb(&FamilyTag::PQ { p: 2, q: 3 }).unwrap(), (686, 650));
        assert!(catalog_zagreb(&FamilyTag::PrimePower { p: 2, n: 2 }).is_err());
    }

    #[test]
    fn energies_values() {
        let r = catalog_energies(&FamilyTag::PQ { p: 2, q: 3 }).unwrap();
        assert_eq!(r.le, 65.6);
        assert_eq!(r.e_cn, 64.0);
        let r = catalog_energies(&FamilyTag::PrimePower { p: 2, n: 1 }).unwrap();
        assert!((r.e - 5.4641016).abs() < 1e-7);
        assert_eq!(r.le, 40.0 / 6.0);
    }

    #[test]
    fn spectra_shapes() {
        let s = catalog_spectra(&FamilyTag::PQ { p: 2, q: 3 }).unwrap();
        assert_eq!(s.l.render(), "(25)^1 (9)^1 (4)^1 (2)^1 (1)^32 (0)^4");
        assert_eq!(s.a.total_multiplicity(), 40);
        let s = catalog_spectra(&FamilyTag::PrimePower { p: 2, n: 1 }).unwrap();
        assert_eq!(s.a.render(), "(\u{221a}3)^1 (1)^1 (0)^2 (\u{2212}1)^1 (\u{2212}\u{221a}3)^1");
    }
}
