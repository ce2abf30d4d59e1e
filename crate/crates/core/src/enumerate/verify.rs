//! Drivers that compare every bound and extremal characterization with
//! exhaustive search, producing serializable reports.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::{
    census, class_extremes, connected_forms, extremal_table, tree_forms, unicyclic_forms,
    CensusEntry, ClassExtreme, Extreme, CONNECTED_MAX_ORDER, TREE_MAX_CAP, UNICYCLIC_MAX_ORDER,
};
use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::families::{
    build_anm, build_duzhou, dankelmann_min_graph, duzhou_unicyclic_equality_graphs, AnmParams,
    DuZhouKind, DuZhouParams,
};
use crate::formulas::{
    bound_dankelmann_max, bound_dankelmann_min, bound_duzhou_tree_min, bound_duzhou_unicyclic_min,
    bound_max_unicyclic, extremal_set_predicted,
};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::matching::matching_number;

/// Largest order used for the `A_{n,m}` identity in the connected suite.
pub const ANM_IDENTITY_MAX_ORDER: usize = 20;

/// One checked cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub what: String,
    pub n: usize,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub found: Option<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub expected_graphs: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub found_graphs: Vec<String>,
    pub passed: bool,
}

impl Check {
    fn value(what: &str, n: usize, m: usize, expected: u64, found: u64) -> Self {
        Check {
            what: what.to_string(),
            n,
            m,
            expected: Some(expected),
            found: Some(found),
            expected_graphs: Vec::new(),
            found_graphs: Vec::new(),
            passed: expected == found,
        }
    }

    fn flag(what: &str, n: usize, m: usize, passed: bool) -> Self {
        Check {
            what: what.to_string(),
            n,
            m,
            expected: None,
            found: None,
            expected_graphs: Vec::new(),
            found_graphs: Vec::new(),
            passed,
        }
    }

    fn with_graphs(mut self, expected: &[CanonicalForm], found: &[CanonicalForm]) -> Result<Self> {
        self.expected_graphs = g6_list(expected)?;
        self.found_graphs = g6_list(found)?;
        Ok(self)
    }
}

fn g6_list(forms: &[CanonicalForm]) -> Result<Vec<String>> {
    forms.iter().map(|f| to_graph6(&f.to_graph())).collect()
}

/// Result of one suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub failures: usize,
    pub passed: bool,
}

impl VerifyReport {
    fn new(suite: &str, checks: Vec<Check>) -> Self {
        let failures = checks.iter().filter(|c| !c.passed).count();
        VerifyReport {
            suite: suite.to_string(),
            passed: failures == 0,
            failures,
            checks,
        }
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn sorted_forms(graphs: &[Graph]) -> Result<Vec<CanonicalForm>> {
    let mut forms = graphs
        .iter()
        .map(canonical_form)
        .collect::<Result<Vec<_>>>()?;
    forms.sort();
    forms.dedup();
    Ok(forms)
}

fn check_order_cap(what: &str, n_max: usize, cap: usize) -> Result<()> {
    if n_max > cap {
        return Err(Error::Domain(format!(
            "{what} needs n_max <= {cap}, got {n_max}"
        )));
    }
    Ok(())
}

fn per_order<T: Send>(
    lo: usize,
    hi: usize,
    f: impl Fn(usize) -> Result<T> + Sync + Send,
) -> Result<Vec<T>> {
    (lo..=hi).into_par_iter().map(f).collect()
}

// ---------------------------------------------------------------------------
// Maximum over unicyclic graphs
// ---------------------------------------------------------------------------

/// For every `4 <= n <= n_max` and `2 <= m <= n/2`: the exhaustive maximum
/// equals the closed-form bound and the maximizers are exactly the
/// characterized graphs.
pub fn verify_main_theorem(n_max: usize) -> Result<VerifyReport> {
    check_order_cap("main suite", n_max, UNICYCLIC_MAX_ORDER)?;
    let per_n = per_order(4, n_max.max(3), |n| {
        let table = extremal_table(n)?;
        let mut checks = Vec::new();
        for m in 2..=n / 2 {
            let expected = bound_max_unicyclic(n, m)?;
            let predicted = sorted_forms(&extremal_set_predicted(n, m)?)?;
            let check = match table.iter().find(|r| r.m == m) {
                Some(r) => {
                    let mut c = Check::value("max", n, m, expected, r.w_max);
                    c.passed &= r.extremal == predicted;
                    c.with_graphs(&predicted, &r.extremal)?
                }
                None => Check::flag("max (empty class)", n, m, false),
            };
            checks.push(check);
        }
        Ok(checks)
    })?;
    Ok(VerifyReport::new(
        "main",
        per_n.into_iter().flatten().collect(),
    ))
}

/// For every order, the maximum is strictly increasing in `m` over the
/// non-empty classes with `m >= 2`.
pub fn verify_monotonicity(n_max: usize) -> Result<VerifyReport> {
    check_order_cap("monotonicity suite", n_max, UNICYCLIC_MAX_ORDER)?;
    let per_n = per_order(4, n_max.max(3), |n| {
        let table: Vec<_> = extremal_table(n)?
            .into_iter()
            .filter(|r| r.m >= 2)
            .collect();
        Ok(table
            .windows(2)
            .map(|w| Check {
                expected: Some(w[0].w_max),
                found: Some(w[1].w_max),
                ..Check::flag(
                    &format!("increase from m={}", w[0].m),
                    n,
                    w[1].m,
                    w[0].w_max < w[1].w_max,
                )
            })
            .collect::<Vec<_>>())
    })?;
    Ok(VerifyReport::new(
        "mono",
        per_n.into_iter().flatten().collect(),
    ))
}

// ---------------------------------------------------------------------------
// Minima over trees and unicyclic graphs
// ---------------------------------------------------------------------------

fn minimum_checks(
    label: &str,
    n: usize,
    mins: &BTreeMap<usize, ClassExtreme>,
    bound: impl Fn(usize, usize) -> Result<u64>,
    witnesses: impl Fn(usize, usize) -> Result<Vec<Graph>>,
) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for m in 2..=n / 2 {
        let expected = bound(n, m)?;
        let Some(class) = mins.get(&m) else {
            checks.push(Check::flag(
                &format!("{label} min (empty class)"),
                n,
                m,
                false,
            ));
            continue;
        };
        checks.push(Check::value(
            &format!("{label} min"),
            n,
            m,
            expected,
            class.value,
        ));
        let named = sorted_forms(&witnesses(n, m)?)?;
        let mut c = Check::flag(
            &format!("{label} minimizers include the named graphs"),
            n,
            m,
            named
                .iter()
                .all(|f| class.attained_by.binary_search(f).is_ok()),
        );
        c = c.with_graphs(&named, &class.attained_by)?;
        checks.push(c);
    }
    Ok(checks)
}

/// Exhaustive minima per matching class for trees up to `tree_max` and
/// unicyclic graphs up to `unicyclic_max`, and membership of the named
/// minimizers.
pub fn verify_minima(unicyclic_max: usize, tree_max: usize) -> Result<VerifyReport> {
    check_order_cap(
        "minima suite (unicyclic)",
        unicyclic_max,
        UNICYCLIC_MAX_ORDER,
    )?;
    check_order_cap("minima suite (trees)", tree_max, TREE_MAX_CAP)?;
    let tree_checks = per_order(4, tree_max.max(3), |n| {
        let entries = census(tree_forms(n, tree_max)?)?;
        let mins = class_extremes(&entries, Extreme::Min);
        minimum_checks("tree", n, &mins, bound_duzhou_tree_min, |n, m| {
            Ok(vec![build_duzhou(&DuZhouParams::new(
                n,
                m,
                DuZhouKind::TreeMin,
            )?)])
        })
    })?;
    let uni_checks = per_order(4, unicyclic_max.max(3), |n| {
        let entries = census(unicyclic_forms(n)?)?;
        let mins = class_extremes(&entries, Extreme::Min);
        minimum_checks("unicyclic", n, &mins, bound_duzhou_unicyclic_min, |n, m| {
            duzhou_unicyclic_equality_graphs(n, m)
        })
    })?;
    let checks = tree_checks
        .into_iter()
        .chain(uni_checks)
        .flatten()
        .collect();
    Ok(VerifyReport::new("minima", checks))
}

// ---------------------------------------------------------------------------
// Connected graphs
// ---------------------------------------------------------------------------

fn connected_census(n: usize) -> Result<Vec<CensusEntry>> {
    census(connected_forms(n)?)
}

/// Exhaustive minimum and maximum per matching class over all connected
/// graphs up to `n_max`, plus the identity `W(A_{n,m}) = max` up to order 20.
pub fn verify_dankelmann(n_max: usize) -> Result<VerifyReport> {
    check_order_cap("dankelmann suite", n_max, CONNECTED_MAX_ORDER)?;
    let exhaustive = per_order(2, n_max.max(1), |n| {
        let entries = connected_census(n)?;
        let mins = class_extremes(&entries, Extreme::Min);
        let maxs = class_extremes(&entries, Extreme::Max);
        let mut checks = Vec::new();
        for m in 1..=n / 2 {
            let (Some(lo), Some(hi)) = (mins.get(&m), maxs.get(&m)) else {
                checks.push(Check::flag("connected (empty class)", n, m, false));
                continue;
            };
            checks.push(Check::value(
                "connected min",
                n,
                m,
                bound_dankelmann_min(n, m)?,
                lo.value,
            ));
            checks.push(Check::value(
                "connected max",
                n,
                m,
                bound_dankelmann_max(n, m)?,
                hi.value,
            ));
            let low = canonical_form(&dankelmann_min_graph(n, m)?)?;
            let high = canonical_form(&build_anm(&AnmParams::new(n, m)?))?;
            checks.push(
                Check::flag(
                    "minimum attained by the complete or join graph",
                    n,
                    m,
                    lo.attained_by.binary_search(&low).is_ok(),
                )
                .with_graphs(std::slice::from_ref(&low), &lo.attained_by)?,
            );
            checks.push(
                Check::flag(
                    "maximum attained by the spine tree",
                    n,
                    m,
                    hi.attained_by.binary_search(&high).is_ok(),
                )
                .with_graphs(std::slice::from_ref(&high), &hi.attained_by)?,
            );
        }
        Ok(checks)
    })?;
    let mut checks: Vec<Check> = exhaustive.into_iter().flatten().collect();
    checks.extend(anm_identity_checks(ANM_IDENTITY_MAX_ORDER)?);
    Ok(VerifyReport::new("dankelmann", checks))
}

/// `W(A_{n,m})` equals the connected maximum and `A_{n,m}` has matching
/// number `m`, for `2 <= n <= n_max`.
pub fn anm_identity_checks(n_max: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 2..=n_max {
        for m in 1..=n / 2 {
            let g = build_anm(&AnmParams::new(n, m)?);
            let mut c = Check::value(
                "spine tree identity",
                n,
                m,
                bound_dankelmann_max(n, m)?,
                g.wiener_index()?,
            );
            c.passed &= matching_number(&g)?.size == m;
            checks.push(c);
        }
    }
    Ok(checks)
}
