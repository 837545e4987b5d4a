//! The verification suite behind `sgb verify`.
//!
//! Every group of checks runs over all cyclic orders `1..=max_order`, or over
//! the catalogued orders in that range, and yields one [`CheckOutcome`].

use std::fmt;

use crate::catalog::{
    catalog_degree_indices, catalog_energies, catalog_spectra, catalog_structure, catalog_zagreb, detect_family,
    FamilyTag, KNOWN_PRINTED_DISCREPANCIES,
};
use crate::error::{Error, Result};
use crate::graph::{
    assemble_matrix, brute_force_star_decomposition, build_star_decomposition, dense_cap, graph_stats, EdgeList,
    StarDecomposition, BRUTE_FORCE_CAP,
};
use crate::group::CyclicGroupSpec;
use crate::indices::{degree_indices, edge_sum_indices, relative_close, zagreb};
use crate::par;
use crate::spectral::{
    closed_form_spectrum, e_le_check, energies, match_numeric, numeric_spectrum, Rational, SpectrumKind,
};

/// Relative tolerance for catalog energies and printed degree indices.
pub const CATALOG_REL_TOL: f64 = 1e-9;
/// Relative tolerance for the per-edge degree index oracle.
pub const EDGE_SUM_REL_TOL: f64 = 1e-10;
/// Largest order the per-edge degree index oracle is run on.
pub const EDGE_SUM_MAX_ORDER: u64 = 200;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub notes: Vec<String>,
}

impl CheckOutcome {
    fn from_failures(name: &'static str, summary: String, failures: Vec<String>) -> Self {
        match failures.first() {
            None => Self { name, passed: true, detail: summary, notes: Vec::new() },
            Some(first) => Self {
                name,
                passed: false,
                detail: format!("{} failure(s); first: {first}", failures.len()),
                notes: Vec::new(),
            },
        }
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status}  {}: {}", self.name, self.detail)?;
        for note in &self.notes {
            write!(f, "\nNOTE  {}: {note}", self.name)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub outcomes: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            writeln!(f, "{o}")?;
        }
        let failed = self.outcomes.iter().filter(|o| !o.passed).count();
        write!(f, "{} check group(s), {failed} failed", self.outcomes.len())
    }
}

struct Group {
    order: u64,
    family: FamilyTag,
    decomp: StarDecomposition,
}

fn groups(max_order: u64) -> Result<Vec<Group>> {
    par::map_range(1..max_order + 1, |n| {
        let spec = CyclicGroupSpec::new(n)?;
        Ok(Group { order: n, family: detect_family(&spec), decomp: build_star_decomposition(&spec)? })
    })
    .into_iter()
    .collect()
}

/// Runs every check group over orders `1..=max_order`; `tol` is the Jacobi
/// tolerance and the absolute tolerance for numeric eigenvalues.
pub fn run_verify(max_order: u64, tol: f64) -> Result<VerifyReport> {
    if max_order == 0 || max_order > BRUTE_FORCE_CAP {
        return Err(Error::Usage(format!("--max-order must be in 1..={BRUTE_FORCE_CAP}, got {max_order}")));
    }
    if !tol.is_finite() || tol < 0.0 {
        return Err(Error::Usage(format!("--tol must be a finite non-negative number, got {tol}")));
    }
    let all = groups(max_order)?;
    Ok(VerifyReport {
        outcomes: vec![
            oracle_equivalence(&all),
            catalog_agreement(&all),
            spectral_cross_check(&all, tol),
            hv_margins(&all),
            e_le_chain(&all),
            flag_classification(&all),
            trace_identities(&all),
            integrality(&all),
            degree_index_oracle(&all),
        ],
    })
}

fn catalogued(all: &[Group]) -> impl Iterator<Item = &Group> {
    all.iter().filter(|g| g.family.is_catalogued())
}

fn range_text(all: &[Group]) -> String {
    format!("orders 1..={}", all.len())
}

fn oracle_equivalence(all: &[Group]) -> CheckOutcome {
    let failures: Vec<String> = par::map(all, |g| {
        let spec = CyclicGroupSpec::new(g.order).expect("valid order");
        match brute_force_star_decomposition(&spec) {
            Ok(brute) if brute == g.decomp => None,
            Ok(_) => Some(format!("order {}: brute force disagrees with the divisor lattice", g.order)),
            Err(e) => Some(format!("order {}: {e}", g.order)),
        }
    })
    .into_iter()
    .flatten()
    .collect();
    CheckOutcome::from_failures(
        "oracle equivalence",
        format!("{} agree with pair enumeration", range_text(all)),
        failures,
    )
}

fn catalog_agreement(all: &[Group]) -> CheckOutcome {
    let results =
        par::map(all, |g| if g.family.is_catalogued() { catalog_instance(g) } else { (Vec::new(), Vec::new()) });
    let instances = catalogued(all).count();
    let mut failures = Vec::new();
    let mut notes = Vec::new();
    for (f, n) in results {
        failures.extend(f);
        notes.extend(n);
    }
    let mut outcome = CheckOutcome::from_failures(
        "catalog agreement",
        format!("{instances} catalogued orders match structure, Zagreb, spectra, energies and indices"),
        failures,
    );
    outcome.notes = notes;
    outcome
}

/// Failures and notes for one catalogued order.
fn catalog_instance(g: &Group) -> (Vec<String>, Vec<String>) {
    let tag = g.family;
    let mut fail = Vec::new();
    let mut note = Vec::new();
    let mut check = |ok: bool, what: &str| {
        if !ok {
            fail.push(format!("{tag}: {what}"));
        }
    };
    match catalog_structure(&tag) {
        Ok(s) => check(s == g.decomp, "structure differs"),
        Err(e) => check(false, &e.to_string()),
    }
    match (&tag, catalog_zagreb(&tag), zagreb(&g.decomp)) {
        (FamilyTag::PrimePower { .. }, _, _) => {}
        (_, Ok((m1, m2)), Ok(z)) => check((m1, m2) == (z.m1, z.m2), "Zagreb indices differ"),
        (_, Err(e), _) | (_, _, Err(e)) => check(false, &e.to_string()),
    }
    match catalog_spectra(&tag) {
        Ok(spectra) => {
            for kind in SpectrumKind::ALL {
                let ours = closed_form_spectrum(&g.decomp, kind);
                check(ours == *spectra.get(kind), &format!("{kind}-spectrum differs"));
            }
        }
        Err(e) => check(false, &e.to_string()),
    }
    match (catalog_energies(&tag), energies(&g.decomp)) {
        (Ok(c), Ok(r)) => {
            for (name, a, b) in
                [("E", c.e, r.e), ("LE", c.le, r.le), ("LE+", c.le_plus, r.le_plus), ("E_CN", c.e_cn, r.e_cn)]
            {
                check(relative_close(a, b, CATALOG_REL_TOL), &format!("{name} {a} vs {b}"));
            }
            check(c.avg_degree_shift == r.avg_degree_shift, "average degree differs");
            check(c.flags == r.flags, "energy flags differ");
        }
        (Err(e), _) | (_, Err(e)) => check(false, &e.to_string()),
    }
    if !matches!(tag, FamilyTag::PrimePower { .. }) {
        match catalog_degree_indices(&tag) {
            Ok(c) => {
                let ours = degree_indices(&g.decomp);
                for ((name, a), (_, b)) in c.values().into_iter().zip(ours.values()) {
                    if relative_close(a, b, CATALOG_REL_TOL) {
                        continue;
                    }
                    let text = format!("{tag}: printed {name} = {a:.10} but the star sum gives {b:.10}");
                    if KNOWN_PRINTED_DISCREPANCIES.contains(&(tag.name(), name)) {
                        note.push(text);
                    } else {
                        fail.push(text);
                    }
                }
            }
            Err(e) => fail.push(format!("{tag}: {e}")),
        }
    }
    (fail, note)
}

/// Orders whose graphs fit under the dense matrix cap.
fn dense_orders(all: &[Group]) -> Vec<&Group> {
    let cap = dense_cap() as u128;
    all.iter().filter(|g| graph_stats(&g.decomp).vertex_count <= cap).collect()
}

fn spectral_cross_check(all: &[Group], tol: f64) -> CheckOutcome {
    let dense = dense_orders(all);
    let mut failures = Vec::new();
    let mut worst = 0.0f64;
    // Chunked so an unreachable tolerance fails fast instead of grinding
    // through every order.
    for chunk in dense.chunks(8) {
        let results = par::map(chunk, |g| {
            let mut fails = Vec::new();
            let mut worst = 0.0f64;
            for kind in SpectrumKind::ALL {
                let exact = closed_form_spectrum(&g.decomp, kind);
                let outcome = assemble_matrix(&g.decomp, kind.matrix_kind())
                    .and_then(|m| numeric_spectrum(&m, tol))
                    .map_err(|e| e.to_string())
                    .and_then(|values| match_numeric(&exact, &values, tol));
                match outcome {
                    Ok(dev) => worst = worst.max(dev),
                    Err(e) => fails.push(format!("order {} {kind}: {e}", g.order)),
                }
            }
            (fails, worst)
        });
        for (f, w) in results {
            failures.extend(f);
            worst = worst.max(w);
        }
        if !failures.is_empty() {
            break;
        }
    }
    let skipped = all.len() - dense.len();
    let mut summary =
        format!("A/L/Q/CN numeric spectra of {} orders within {tol:e} (max deviation {worst:.2e})", dense.len());
    if skipped > 0 {
        summary.push_str(&format!("; {skipped} orders above the dense cap skipped"));
    }
    CheckOutcome::from_failures("spectral cross-check", summary, failures)
}

fn hv_margins(all: &[Group]) -> CheckOutcome {
    let mut failures = Vec::new();
    let mut min_catalogued: Option<i128> = None;
    for g in all {
        let z = match zagreb(&g.decomp) {
            Ok(z) => z,
            Err(e) => {
                failures.push(format!("order {}: {e}", g.order));
                continue;
            }
        };
        let n2 = i128::from(g.order) * i128::from(g.order);
        if z.m2 != z.m1 - n2 {
            failures.push(format!("order {}: M2 != M1 - n^2", g.order));
        }
        if !z.hv_holds {
            failures.push(format!("order {}: margin {} < 0", g.order, z.hv_margin));
        }
        if g.order == 1 && z.hv_margin != 0 {
            failures.push(format!("order 1: margin {} != 0", z.hv_margin));
        }
        if g.family.is_catalogued() {
            if z.hv_margin <= 0 {
                failures.push(format!("{}: margin {} not strictly positive", g.family, z.hv_margin));
            }
            min_catalogued = Some(min_catalogued.map_or(z.hv_margin, |m| m.min(z.hv_margin)));
        }
    }
    let summary = match min_catalogued {
        Some(m) => format!("margin >= 0 on {}, > 0 on catalogued orders (min {m}), = 0 at order 1", range_text(all)),
        None => format!("margin >= 0 on {}, = 0 at order 1", range_text(all)),
    };
    CheckOutcome::from_failures("HV margins", summary, failures)
}

fn e_le_chain(all: &[Group]) -> CheckOutcome {
    let mut failures = Vec::new();
    for g in all {
        let report = match energies(&g.decomp) {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("order {}: {e}", g.order));
                continue;
            }
        };
        let verdict = e_le_check(&report, graph_stats(&g.decomp).vertex_count);
        if !verdict.holds {
            failures.push(format!("order {}: E {} > LE {}", g.order, report.e, report.le));
        }
        if g.family.is_catalogued() && !verdict.chain_holds {
            failures.push(format!("{}: LE > |V| > E fails", g.family));
        }
    }
    CheckOutcome::from_failures(
        "E-LE chain",
        format!("E <= LE on {}; LE > |V| > E on catalogued orders", range_text(all)),
        failures,
    )
}

fn flag_classification(all: &[Group]) -> CheckOutcome {
    let mut failures = Vec::new();
    for g in catalogued(all) {
        match energies(&g.decomp) {
            Ok(r) => {
                let f = r.flags;
                if !f.hypoenergetic || f.hyperenergetic || f.l_hyper || f.q_hyper || f.cn_hyper {
                    failures.push(format!("{}: flags {f:?}", g.family));
                }
            }
            Err(e) => failures.push(format!("order {}: {e}", g.order)),
        }
    }
    CheckOutcome::from_failures(
        "flag classification",
        format!("{} catalogued orders hypoenergetic and not (L-/Q-/CN-)hyperenergetic", catalogued(all).count()),
        failures,
    )
}

fn trace_identities(all: &[Group]) -> CheckOutcome {
    let mut failures = Vec::new();
    for g in all {
        if let Err(e) = traces_of(&g.decomp) {
            failures.push(format!("order {}: {e}", g.order));
        }
    }
    CheckOutcome::from_failures(
        "trace identities",
        format!("sum A = sum CN = 0, sum L = sum Q = sum A^2 = 2m, L = Q on {}", range_text(all)),
        failures,
    )
}

fn traces_of(decomp: &StarDecomposition) -> std::result::Result<(), String> {
    let stats = graph_stats(decomp);
    let two_m = Rational::from_integer(2 * stats.edge_count as i128);
    let spectra = SpectrumKind::ALL.map(|k| closed_form_spectrum(decomp, k));
    let [a, l, q, cn] = &spectra;
    let err = |e: Error| e.to_string();
    for s in &spectra {
        if s.total_multiplicity() != stats.vertex_count {
            return Err(format!("{}-spectrum has {} eigenvalues", s.kind(), s.total_multiplicity()));
        }
    }
    if !a.sum().map_err(err)?.is_empty() {
        return Err("sum of A eigenvalues is not 0".into());
    }
    if !cn.sum().map_err(err)?.is_empty() {
        return Err("sum of CN eigenvalues is not 0".into());
    }
    for s in [l, q] {
        let sum = s.sum().map_err(err)?;
        if sum.len() != 1 || sum.get(&1) != Some(&two_m) {
            return Err(format!("sum of {} eigenvalues is not 2m", s.kind()));
        }
    }
    if a.sum_of_squares().map_err(err)? != two_m {
        return Err("sum of squared A eigenvalues is not 2m".into());
    }
    if !l.same_values(q) {
        return Err("L- and Q-spectra differ".into());
    }
    Ok(())
}

fn integrality(all: &[Group]) -> CheckOutcome {
    let mut failures = Vec::new();
    for g in catalogued(all) {
        let [a, l, q, cn] = SpectrumKind::ALL.map(|k| closed_form_spectrum(&g.decomp, k));
        if a.pairs().iter().all(|(v, _)| v.is_rational()) {
            failures.push(format!("{}: A-spectrum has no irrational eigenvalue", g.family));
        }
        for s in [l, q, cn] {
            if !s.is_integral() {
                failures.push(format!("{}: {}-spectrum is not integral", g.family, s.kind()));
            }
        }
    }
    CheckOutcome::from_failures(
        "integrality",
        format!("{} catalogued orders: A irrational, L/Q/CN integral", catalogued(all).count()),
        failures,
    )
}

fn degree_index_oracle(all: &[Group]) -> CheckOutcome {
    let limited: Vec<&Group> = all.iter().filter(|g| g.order <= EDGE_SUM_MAX_ORDER).collect();
    let failures: Vec<String> = par::map(&limited, |g| {
        let spec = CyclicGroupSpec::new(g.order).expect("valid order");
        let oracle = match EdgeList::from_pair_enumeration(&spec).and_then(|e| edge_sum_indices(&e)) {
            Ok(o) => o,
            Err(e) => return vec![format!("order {}: {e}", g.order)],
        };
        let mut out = Vec::new();
        match zagreb(&g.decomp) {
            Ok(z) if (z.m1, z.m2) == (oracle.m1, oracle.m2) => {}
            Ok(_) => out.push(format!("order {}: Zagreb edge sums differ", g.order)),
            Err(e) => out.push(format!("order {}: {e}", g.order)),
        }
        let ours = degree_indices(&g.decomp);
        for ((name, a), (_, b)) in ours.values().into_iter().zip(oracle.degree.values()) {
            if !relative_close(a, b, EDGE_SUM_REL_TOL) {
                out.push(format!("order {}: {name} {a} vs edge sum {b}", g.order));
            }
        }
        out
    })
    .into_iter()
    .flatten()
    .collect();
    CheckOutcome::from_failures(
        "degree-index oracle",
        format!(
            "M1, M2, R, ABC, GA, H, SCI match per-edge sums on orders 1..={} (rel {EDGE_SUM_REL_TOL:e})",
            limited.len()
        ),
        failures,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let report = run_verify(12, 1e-8).unwrap();
        assert!(report.all_passed(), "{report}");
        assert_eq!(report.outcomes.len(), 9);
    }

    #[test]
    fn order_one_only() {
        let report = run_verify(1, 1e-8).unwrap();
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn zero_tolerance_fails_spectral_group() {
        let report = run_verify(4, 0.0).unwrap();
        assert!(!report.all_passed());
        let failed: Vec<_> = report.outcomes.iter().filter(|o| !o.passed).map(|o| o.name).collect();
        assert_eq!(failed, vec!["spectral cross-check"]);
    }

    #[test]
    fn bad_arguments() {
        assert!(matches!(run_verify(0, 1e-8), Err(Error::Usage(_))));
        assert!(matches!(run_verify(BRUTE_FORCE_CAP + 1, 1e-8), Err(Error::Usage(_))));
        assert!(matches!(run_verify(5, -1.0), Err(Error::Usage(_))));
        assert!(matches!(run_verify(5, f64::NAN), Err(Error::Usage(_))));
    }

    #[test]
    fn printed_sci_is_noted_not_failed() {
        // order 12 = 2^2 * 3 is in the p^2 q family
        let report = run_verify(12, 1e-8).unwrap();
        let catalog = report.outcomes.iter().find(|o| o.name == "catalog agreement").unwrap();
        assert!(catalog.passed);
        assert!(catalog.notes.iter().any(|n| n.contains("p2q:2:3") && n.contains("sci")));
    }
}
