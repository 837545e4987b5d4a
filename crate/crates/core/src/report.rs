//! Parameter sweeps and their CSV/JSON emission for `sgb report`.

use std::str::FromStr;

use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::catalog::{catalog_energies, catalog_structure, catalog_zagreb, detect_family, FamilyTag};
use crate::error::{Error, Result};
use crate::graph::{build_star_decomposition, graph_stats};
use crate::group::{is_prime, CyclicGroupSpec, MAX_GROUP_ORDER};
use crate::indices::{degree_indices, zagreb};
use crate::par;
use crate::spectral::{e_le_check, energies};

/// Primes used when `--p` or `--q` is not given.
pub const DEFAULT_PRIMES: &str = "2,3,5,7,11,13";
/// Exponents used for `pn` when `--n` is not given.
pub const DEFAULT_EXPONENTS: &str = "1..4";
/// Largest order for `all` when `--max-order` is not given.
pub const DEFAULT_MAX_ORDER: u64 = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    PrimePower,
    PQ,
    P2Q,
    P2Q2,
    All,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pn" => Ok(Self::PrimePower),
            "pq" => Ok(Self::PQ),
            "p2q" => Ok(Self::P2Q),
            "p2q2" => Ok(Self::P2Q2),
            "all" => Ok(Self::All),
            _ => Err(Error::Usage(format!("unknown family `{s}` (expected pn, pq, p2q, p2q2 or all)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            _ => Err(Error::Usage(format!("unknown format `{s}` (expected csv or json)"))),
        }
    }
}

/// Parses `"3"`, `"3,5,7"`, `"1..4"` (inclusive) or mixtures like
/// `"2,5..7"` into a sorted, deduplicated list.
pub fn parse_range(text: &str) -> Result<Vec<u64>> {
    let bad = || Error::Usage(format!("malformed range `{text}`"));
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim) {
        if let Some((lo, hi)) = part.split_once("..") {
            let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
            let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
            if lo > hi || hi - lo > MAX_GROUP_ORDER {
                return Err(bad());
            }
            out.extend(lo..=hi);
        } else {
            out.push(part.parse().map_err(|_| bad())?);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Unparsed `report` arguments; `None` selects the defaults above.
#[derive(Debug, Clone, Default)]
pub struct ReportRequest {
    pub family: Option<String>,
    pub p: Option<String>,
    pub q: Option<String>,
    pub n: Option<String>,
    pub max_order: Option<u64>,
}

/// The `(order, family)` pairs a request expands to, sorted by order then
/// by the family parameters.
pub fn expand(request: &ReportRequest) -> Result<Vec<(u64, FamilyTag)>> {
    let family: Family = request.family.as_deref().unwrap_or("all").parse()?;
    let primes = |range: &Option<String>| -> Result<Vec<u64>> {
        let all = parse_range(range.as_deref().unwrap_or(DEFAULT_PRIMES))?;
        Ok(all.into_iter().filter(|&x| is_prime(x)).collect())
    };
    let mut out = Vec::new();
    if family == Family::All {
        let max = request.max_order.unwrap_or(DEFAULT_MAX_ORDER);
        if max > MAX_GROUP_ORDER {
            return Err(Error::OrderTooLarge { order: max, cap: MAX_GROUP_ORDER });
        }
        for order in 2..=max {
            out.push((order, detect_family(&CyclicGroupSpec::new(order)?)));
        }
    } else {
        let mut tags = Vec::new();
        if family == Family::PrimePower {
            let exps = parse_range(request.n.as_deref().unwrap_or(DEFAULT_EXPONENTS))?;
            for p in primes(&request.p)? {
                for &n in exps.iter().filter(|&&n| n >= 1) {
                    let n = u32::try_from(n).map_err(|_| Error::Usage(format!("exponent {n} too large")))?;
                    tags.push(FamilyTag::PrimePower { p, n });
                }
            }
        } else {
            let (ps, qs) = (primes(&request.p)?, primes(&request.q)?);
            for &p in &ps {
                for &q in &qs {
                    match family {
                        Family::PQ if p < q => tags.push(FamilyTag::PQ { p, q }),
                        Family::P2Q if p != q => tags.push(FamilyTag::P2Q { p, q }),
                        Family::P2Q2 if p < q => tags.push(FamilyTag::P2Q2 { p, q }),
                        _ => {}
                    }
                }
            }
        }
        for tag in tags {
            let order = tag.order()?;
            if request.max_order.is_none_or(|m| order <= m) {
                out.push((order, tag));
            }
        }
    }
    if out.is_empty() {
        return Err(Error::Usage("the requested ranges select no groups".into()));
    }
    out.sort();
    Ok(out)
}

/// One report line. Catalog columns are `None` outside the four families.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub order: u64,
    pub family: FamilyTag,
    pub vertex_count: u128,
    pub edge_count: u128,
    pub m1: i128,
    pub m2: i128,
    pub hv_margin: i128,
    pub hv_holds: bool,
    pub randic: f64,
    pub abc: f64,
    pub ga: f64,
    pub harmonic: f64,
    pub sci: f64,
    pub e: f64,
    pub le: f64,
    pub le_plus: f64,
    pub e_cn: f64,
    pub hypoenergetic: bool,
    pub hyperenergetic: bool,
    pub l_hyper: bool,
    pub q_hyper: bool,
    pub cn_hyper: bool,
    pub e_le_chain: bool,
    pub catalog_m1: Option<i128>,
    pub catalog_m2: Option<i128>,
    pub catalog_e: Option<f64>,
    pub catalog_le: Option<f64>,
    pub catalog_e_cn: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i128),
    Float(f64),
    Bool(bool),
    Text(String),
    Blank,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => format_sig9(*v),
            Cell::Bool(v) => v.to_string(),
            Cell::Text(v) => v.clone(),
            Cell::Blank => String::new(),
        }
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Cell::Int(v) => s.serialize_i128(*v),
            Cell::Float(v) => match format_sig9(*v).parse::<f64>() {
                Ok(x) if x.is_finite() => s.serialize_f64(x),
                _ => s.serialize_none(),
            },
            Cell::Bool(v) => s.serialize_bool(*v),
            Cell::Text(v) => s.serialize_str(v),
            Cell::Blank => s.serialize_none(),
        }
    }
}

impl ReportRow {
    pub fn compute(order: u64, family: FamilyTag) -> Result<Self> {
        let decomp = build_star_decomposition(&CyclicGroupSpec::new(order)?)?;
        let stats = graph_stats(&decomp);
        let z = zagreb(&decomp)?;
        let d = degree_indices(&decomp);
        let en = energies(&decomp)?;
        let chain = e_le_check(&en, stats.vertex_count).chain_holds;
        let (catalog_m1, catalog_m2, catalog_e, catalog_le, catalog_e_cn) = if family.is_catalogued() {
            let (m1, m2) = match family {
                // no printed Zagreb theorem for p^n; use the printed structure
                FamilyTag::PrimePower { .. } => {
                    let z = zagreb(&catalog_structure(&family)?)?;
                    (z.m1, z.m2)
                }
                _ => catalog_zagreb(&family)?,
            };
            let c = catalog_energies(&family)?;
            (Some(m1), Some(m2), Some(c.e), Some(c.le), Some(c.e_cn))
        } else {
            (None, None, None, None, None)
        };
        Ok(Self {
            order,
            family,
            vertex_count: stats.vertex_count,
            edge_count: stats.edge_count,
            m1: z.m1,
            m2: z.m2,
            hv_margin: z.hv_margin,
            hv_holds: z.hv_holds,
            randic: d.randic,
            abc: d.abc,
            ga: d.ga,
            harmonic: d.harmonic,
            sci: d.sci,
            e: en.e,
            le: en.le,
            le_plus: en.le_plus,
            e_cn: en.e_cn,
            hypoenergetic: en.flags.hypoenergetic,
            hyperenergetic: en.flags.hyperenergetic,
            l_hyper: en.flags.l_hyper,
            q_hyper: en.flags.q_hyper,
            cn_hyper: en.flags.cn_hyper,
            e_le_chain: chain,
            catalog_m1,
            catalog_m2,
            catalog_e,
            catalog_le,
            catalog_e_cn,
        })
    }

    pub fn cells(&self) -> Vec<(&'static str, Cell)> {
        let int = |v: i128| Cell::Int(v);
        let opt_int = |v: Option<i128>| v.map_or(Cell::Blank, Cell::Int);
        let opt_float = |v: Option<f64>| v.map_or(Cell::Blank, Cell::Float);
        vec![
            ("order", int(i128::from(self.order))),
            ("family", Cell::Text(self.family.to_string())),
            ("vertex_count", int(self.vertex_count as i128)),
            ("edge_count", int(self.edge_count as i128)),
            ("m1", int(self.m1)),
            ("m2", int(self.m2)),
            ("hv_margin", int(self.hv_margin)),
            ("hv_holds", Cell::Bool(self.hv_holds)),
            ("randic", Cell::Float(self.randic)),
            ("abc", Cell::Float(self.abc)),
            ("ga", Cell::Float(self.ga)),
            ("harmonic", Cell::Float(self.harmonic)),
            ("sci", Cell::Float(self.sci)),
            ("e", Cell::Float(self.e)),
            ("le", Cell::Float(self.le)),
            ("le_plus", Cell::Float(self.le_plus)),
            ("e_cn", Cell::Float(self.e_cn)),
            ("hypoenergetic", Cell::Bool(self.hypoenergetic)),
            ("hyperenergetic", Cell::Bool(self.hyperenergetic)),
            ("l_hyper", Cell::Bool(self.l_hyper)),
            ("q_hyper", Cell::Bool(self.q_hyper)),
            ("cn_hyper", Cell::Bool(self.cn_hyper)),
            ("e_le_chain", Cell::Bool(self.e_le_chain)),
            ("catalog_m1", opt_int(self.catalog_m1)),
            ("catalog_m2", opt_int(self.catalog_m2)),
            ("catalog_e", opt_float(self.catalog_e)),
            ("catalog_le", opt_float(self.catalog_le)),
            ("catalog_e_cn", opt_float(self.catalog_e_cn)),
        ]
    }
}

impl Serialize for ReportRow {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let cells = self.cells();
        let mut map = s.serialize_map(Some(cells.len()))?;
        for (name, cell) in &cells {
            map.serialize_entry(name, cell)?;
        }
        map.end()
    }
}

/// Column names in emission order.
pub fn header() -> Vec<&'static str> {
    ReportRow::compute(1, FamilyTag::OutsideCatalog)
        .expect("order 1 always builds")
        .cells()
        .into_iter()
        .map(|(name, _)| name)
        .collect()
}

/// Computes every row of a request, in parallel when enabled.
pub fn build_rows(request: &ReportRequest) -> Result<Vec<ReportRow>> {
    let items = expand(request)?;
    par::map(&items, |&(order, tag)| ReportRow::compute(order, tag)).into_iter().collect()
}

pub fn render(rows: &[ReportRow], format: Format) -> Result<String> {
    match format {
        Format::Csv => {
            let mut out = header().join(",");
            out.push('\n');
            for row in rows {
                let line: Vec<String> = row.cells().iter().map(|(_, c)| c.csv()).collect();
                out.push_str(&line.join(","));
                out.push('\n');
            }
            Ok(out)
        }
        Format::Json => {
            let mut out = serde_json::to_string_pretty(rows).map_err(|e| Error::InvalidSpec(e.to_string()))?;
            out.push('\n');
            Ok(out)
        }
    }
}

/// `%.9g`: nine significant digits, fixed notation for decimal exponents in
/// `-4..9`, trailing zeros trimmed.
pub fn format_sig9(x: f64) -> String {
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.8e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..9).contains(&exp) {
        let decimals = (8 - exp) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa.to_string()), exp.abs())
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn request(family: &str) -> ReportRequest {
        ReportRequest { family: Some(family.into()), ..Default::default() }
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3").unwrap(), vec![3]);
        assert_eq!(parse_range("7,3,5,3").unwrap(), vec![3, 5, 7]);
        assert_eq!(parse_range("1..3").unwrap(), vec![1, 2, 3]);
        assert_eq!(parse_range("2, 5..7").unwrap(), vec![2, 5, 6, 7]);
        for bad in ["", "a", "3..1", "1..", "1,,2"] {
            assert!(matches!(parse_range(bad), Err(Error::Usage(_))), "{bad}");
        }
    }

    #[test]
    fn sig9() {
        assert_eq!(format_sig9(65.6), "65.6");
        assert_eq!(format_sig9(64.0), "64");
        assert_eq!(format_sig9(20.918914844), "20.9189148");
        assert_eq!(format_sig9(2.0 / 3.0), "0.666666667");
        assert_eq!(format_sig9(-1.5), "-1.5");
        assert_eq!(format_sig9(1234567890.0), "1.23456789e+09");
        assert_eq!(format_sig9(0.00001234), "1.234e-05");
        assert_eq!(format_sig9(0.0001234), "0.0001234");
        assert_eq!(format_sig9(999999999.5), "1e+09");
    }

    #[test]
    fn pq_rows() {
        let req = ReportRequest { p: Some("2".into()), q: Some("3,5,7".into()), ..request("pq") };
        let rows = build_rows(&req).unwrap();
        assert_eq!(rows.iter().map(|r| r.order).collect::<Vec<_>>(), vec![6, 10, 14]);
        assert_eq!(rows[0].m1, 686);
        assert_eq!(rows[0].catalog_m1, Some(686));
        assert_eq!(rows[0].le, 65.6);
    }

    #[test]
    fn pn_rows() {
        let req = ReportRequest { p: Some("2".into()), n: Some("1..3".into()), ..request("pn") };
        let rows = build_rows(&req).unwrap();
        assert_eq!(rows.iter().map(|r| r.order).collect::<Vec<_>>(), vec![2, 4, 8]);
        assert!(rows.iter().all(|r| r.catalog_m1 == Some(r.m1)));
    }

    #[test]
    fn all_rows() {
        let req = ReportRequest { max_order: Some(50), ..request("all") };
        let rows = build_rows(&req).unwrap();
        assert_eq!(rows.len(), 49);
        assert_eq!(rows[0].order, 2);
        assert_eq!(rows.last().unwrap().order, 50);
        let outside = rows.iter().find(|r| r.order == 30).unwrap();
        assert_eq!(outside.family, FamilyTag::OutsideCatalog);
        assert_eq!(outside.catalog_e, None);
        let csv = render(&rows, Format::Csv).unwrap();
        let line = csv.lines().find(|l| l.starts_with("30,")).unwrap();
        assert!(line.ends_with(",,,,,"));
    }

    #[test]
    fn row_invariants() {
        for row in build_rows(&ReportRequest { max_order: Some(120), ..request("all") }).unwrap() {
            let n = i128::from(row.order);
            assert_eq!(row.m2, row.m1 - n * n);
            assert_eq!(row.le, row.le_plus);
        }
    }

    #[test]
    fn ordering_and_filters() {
        let req = ReportRequest { p: Some("2..5".into()), q: Some("2..5".into()), ..request("p2q") };
        let orders: Vec<u64> = build_rows(&req).unwrap().iter().map(|r| r.order).collect();
        // 2^2*3, 2^2*5, 3^2*2, 5^2*2, 3^2*5, 5^2*3
        assert_eq!(orders, vec![12, 18, 20, 45, 50, 75]);
        let none = ReportRequest { p: Some("4".into()), ..request("pq") };
        assert!(matches!(expand(&none), Err(Error::Usage(_))));
        assert!(matches!(expand(&request("pqr")), Err(Error::Usage(_))));
        let big = ReportRequest { p: Some("997".into()), n: Some("3".into()), ..request("pn") };
        assert!(matches!(expand(&big), Err(Error::OrderTooLarge { .. })));
    }

    #[test]
    fn csv_and_json_agree_on_columns() {
        let rows = build_rows(&ReportRequest { max_order: Some(6), ..request("all") }).unwrap();
        let csv = render(&rows, Format::Csv).unwrap();
        assert!(!csv.contains('\r'));
        let head: Vec<&str> = csv.lines().next().unwrap().split(',').collect();
        assert_eq!(head, header());
        let json: serde_json::Value = serde_json::from_str(&render(&rows, Format::Json).unwrap()).unwrap();
        let first = json[0].as_object().unwrap();
        assert_eq!(first.len(), head.len());
        for name in &head {
            assert!(first.contains_key(*name), "{name}");
        }
        assert_eq!(json[4]["le"], serde_json::json!(65.6));
        assert_eq!(json[4]["family"], "pq:2:3");
        assert_eq!(json[4]["m1"], serde_json::json!(686));
    }

    #[test]
    fn wide_integers_stay_exact() {
        let row = ReportRow::compute(999_983, FamilyTag::OutsideCatalog).unwrap();
        let json = serde_json::to_string(&row).unwrap();
        assert!(json.contains(&format!("\"m1\":{}", row.m1)));
        assert!(row.m1 > i128::from(i64::MAX));
    }
}
