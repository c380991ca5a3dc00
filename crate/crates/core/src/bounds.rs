//! Circumference lower bounds for connected vertex-transitive graphs and
//! the per-graph analysis pipeline.
//!
//! All comparisons are exact integer arithmetic: `t >= sqrt(x)` is checked
//! as `t^2 >= x`, and `t >= p/q` as `t q >= p`. Floating-point renderings in
//! reports are for reading only.

use std::time::Duration;

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::connectivity::vertex_connectivity;
use crate::counting::{meets_bound, EnumeratedGroup};
use crate::cycles::{
    circumference_with, cycles_of_length, min_pairwise_intersection, Cycle, Listing, LongestCycleResult,
    Pruning, SolverConfig, SolverError, SolverStats, DEFAULT_CYCLE_CAP,
};
use crate::graph::Graph;
use crate::group::{
    automorphism_generators, GroupAction, GroupError, Transitivity, DEFAULT_AUTOMORPHISM_LIMIT,
    DEFAULT_GROUP_CAP,
};
use crate::hitting::{construct_hitting_set, HittingSetCertificate, HittingSetError};

/// `t^2 >= 3n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BabaiCheck {
    pub n: usize,
    pub t: usize,
    pub t_squared: u128,
    pub three_n: u128,
}

impl BabaiCheck {
    pub fn holds(&self) -> bool {
        self.t_squared >= self.three_n
    }

    pub fn equality(&self) -> bool {
        self.t_squared == self.three_n
    }
}

pub fn babai_bound_check(n: usize, t: usize) -> BabaiCheck {
    BabaiCheck { n, t, t_squared: (t as u128).pow(2), three_n: 3 * n as u128 }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BindingSide {
    SqrtKn,
    NOverK2PlusK,
    Equal,
}

/// `t >= max{sqrt(kn), n / (k^2 + k)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CombinedCheck {
    pub n: usize,
    pub k: usize,
    pub t: usize,
}

impl CombinedCheck {
    pub fn kn(&self) -> u128 {
        self.k as u128 * self.n as u128
    }

    pub fn k2_plus_k(&self) -> u128 {
        let k = self.k as u128;
        k * k + k
    }

    /// `n / (k^2 + k)`, or `None` when `k = 0`.
    pub fn quotient(&self) -> Option<Ratio<u64>> {
        (self.k > 0).then(|| Ratio::new(self.n as u64, self.k2_plus_k() as u64))
    }

    pub fn sqrt_side_holds(&self) -> bool {
        (self.t as u128).pow(2) >= self.kn()
    }

    pub fn quotient_side_holds(&self) -> bool {
        self.quotient().is_some_and(|q| meets_bound(self.t, q))
    }

    pub fn holds(&self) -> bool {
        self.sqrt_side_holds() && self.quotient_side_holds()
    }

    /// The larger of the two bounds, comparing `kn` with
    /// `(n / (k^2 + k))^2` by cross-multiplication.
    pub fn binding(&self) -> BindingSide {
        let lhs = self.kn() * self.k2_plus_k() * self.k2_plus_k();
        let rhs = (self.n as u128).pow(2);
        match lhs.cmp(&rhs) {
            std::cmp::Ordering::Greater => BindingSide::SqrtKn,
            std::cmp::Ordering::Less => BindingSide::NOverK2PlusK,
            std::cmp::Ordering::Equal => BindingSide::Equal,
        }
    }
}

pub fn combined_bound_check(n: usize, k: usize, t: usize) -> CombinedCheck {
    CombinedCheck { n, k, t }
}

/// `k^5 + 2k^4 + k^3 = k^3 (k + 1)^2`: the vertex count at which
/// `sqrt(kn)` and `n / (k^2 + k)` coincide (both equal `k^2 (k + 1)`).
pub fn crossover_n(k: u64) -> u64 {
    k.pow(5) + 2 * k.pow(4) + k.pow(3)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalyzeError {
    #[error("analysis needs n >= 3, got {0}")]
    TooSmall(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("supplied group does not act on the graph's vertices: {0}")]
    Group(#[from] GroupError),
    #[error(transparent)]
    Solver(SolverError),
}

#[derive(Debug, Clone)]
pub struct AnalysisConfig {
    pub cycle_cap: usize,
    pub group_cap: usize,
    pub automorphism_limit: usize,
    pub time_limit: Option<Duration>,
    pub pruning: Pruning,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            cycle_cap: DEFAULT_CYCLE_CAP,
            group_cap: DEFAULT_GROUP_CAP,
            automorphism_limit: DEFAULT_AUTOMORPHISM_LIMIT,
            time_limit: None,
            pruning: Pruning::Reachability,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupSource {
    Supplied,
    AutomorphismSearch,
    None,
}

/// Outcome of one check inside a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// A hypothesis (transitivity, 2-connectivity, ...) does not hold.
    NotApplicable,
    /// A cap or time limit prevented the computation.
    Unavailable,
}

impl Verdict {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma2Check {
    pub name: String,
    pub b_size: usize,
    pub c_size: usize,
    pub k_min: Option<usize>,
    pub n: usize,
    pub group_order: Option<usize>,
    pub s_count: Option<u128>,
    pub stabilizer_order: Option<usize>,
    pub status: Verdict,
}

/// Everything `analyze` learned about one graph. Pass/fail flags are
/// derived from the stored integers on demand.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub transitive: Option<bool>,
    pub transitivity_witness: Option<Transitivity>,
    pub group_source: GroupSource,
    pub group_order: Option<usize>,
    pub connectivity: usize,
    pub cycle_branch: bool,
    pub circumference: Option<usize>,
    pub witness: Option<Cycle>,
    pub longest_cycle_count: Option<usize>,
    pub k: Option<usize>,
    pub k_degenerate: Option<bool>,
    pub k_pair: Option<(Cycle, Cycle)>,
    pub hitting_set: Option<HittingSetCertificate>,
    pub hitting_set_error: Option<String>,
    pub lemma2_checks: Vec<Lemma2Check>,
    pub caps_hit: Vec<String>,
    pub notes: Vec<String>,
    pub nodes_expanded: u64,
}

impl BoundReport {
    fn hypotheses_hold(&self) -> Option<bool> {
        self.transitive
    }

    fn gated(&self, check: impl FnOnce(usize) -> Option<bool>) -> Verdict {
        match (self.hypotheses_hold(), self.circumference) {
            (Some(true), Some(t)) => check(t).map_or(Verdict::Unavailable, Verdict::from_bool),
            (Some(true), None) => Verdict::Unavailable,
            _ => Verdict::NotApplicable,
        }
    }

    pub fn babai(&self) -> Option<BabaiCheck> {
        self.circumference.map(|t| babai_bound_check(self.n, t))
    }

    pub fn combined(&self) -> Option<CombinedCheck> {
        match (self.circumference, self.k) {
            (Some(t), Some(k)) => Some(combined_bound_check(self.n, k, t)),
            _ => None,
        }
    }

    pub fn babai_verdict(&self) -> Verdict {
        self.gated(|t| Some(babai_bound_check(self.n, t).holds()))
    }

    pub fn sqrt_kn_verdict(&self) -> Verdict {
        self.gated(|_| self.combined().map(|c| c.sqrt_side_holds()))
    }

    pub fn quotient_verdict(&self) -> Verdict {
        self.gated(|_| self.combined().map(|c| c.quotient_side_holds()))
    }

    pub fn combined_verdict(&self) -> Verdict {
        self.gated(|_| self.combined().map(|c| c.holds()))
    }

    pub fn two_connected(&self) -> bool {
        self.connectivity >= 2
    }

    pub fn three_connected(&self) -> bool {
        self.connectivity >= 3
    }

    /// Transitive graphs are 2-connected.
    pub fn two_connected_verdict(&self) -> Verdict {
        match self.transitive {
            Some(true) => Verdict::from_bool(self.two_connected()),
            _ => Verdict::NotApplicable,
        }
    }

    /// Transitive graphs other than cycles are 3-connected.
    pub fn three_connected_verdict(&self) -> Verdict {
        match self.transitive {
            Some(true) if !self.cycle_branch => Verdict::from_bool(self.three_connected()),
            _ => Verdict::NotApplicable,
        }
    }

    /// In a 3-connected graph two distinct longest cycles share at least
    /// three vertices; in a 2-connected graph they share at least one.
    pub fn intersection_verdict(&self) -> Verdict {
        if !self.two_connected() {
            return Verdict::NotApplicable;
        }
        match (self.k, self.k_degenerate) {
            (Some(_), Some(true)) => Verdict::NotApplicable,
            (Some(k), _) => Verdict::from_bool(k >= if self.three_connected() { 3 } else { 1 }),
            _ => Verdict::Unavailable,
        }
    }

    /// `|B| <= k^2 + k`, `B` separates the pair, and `B` meets every
    /// longest cycle.
    pub fn hitting_set_verdict(&self) -> Verdict {
        if !self.two_connected() {
            return Verdict::NotApplicable;
        }
        match &self.hitting_set {
            Some(h) => {
                Verdict::from_bool(h.within_bound() && h.separates && h.hits_all() && h.paths_avoid_cycles)
            }
            None if self.hitting_set_error.is_some() => Verdict::Fail,
            None => Verdict::Unavailable,
        }
    }

    pub fn ratio(&self) -> Option<Ratio<u64>> {
        self.circumference.map(|t| Ratio::new(t as u64, self.n as u64))
    }

    /// Names of checks that were applicable and failed. Each one must hold
    /// for every input, so a nonempty list points at a bug.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        for (name, v) in self.verdicts() {
            if v == Verdict::Fail {
                out.push(name);
            }
        }
        for c in &self.lemma2_checks {
            if c.status == Verdict::Fail {
                out.push("lemma2");
            }
        }
        out
    }

    pub fn incomplete(&self) -> bool {
        !self.caps_hit.is_empty()
    }

    fn verdicts(&self) -> [(&'static str, Verdict); 8] {
        [
            ("babai", self.babai_verdict()),
            ("sqrt_kn", self.sqrt_kn_verdict()),
            ("n_over_k2_plus_k", self.quotient_verdict()),
            ("combined", self.combined_verdict()),
            ("two_connected", self.two_connected_verdict()),
            ("three_connected", self.three_connected_verdict()),
            ("longest_cycle_intersection", self.intersection_verdict()),
            ("hitting_set", self.hitting_set_verdict()),
        ]
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(ReportView::from(self)).expect("report serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&ReportView::from(self)).expect("report serializes")
    }
}

fn ratio_string(r: Ratio<u64>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn display(x: f64) -> f64 {
    (x * 1000.0).round() / 1000.0
}

#[derive(Serialize)]
struct SqrtBound {
    /// The bound is `sqrt(squared)`.
    squared: u128,
    display: f64,
}

#[derive(Serialize)]
struct RationalBound {
    value: String,
    display: f64,
}

#[derive(Serialize)]
struct BoundsView {
    babai_sq3n: SqrtBound,
    sqrt_kn: Option<SqrtBound>,
    n_over_k2_plus_k: Option<RationalBound>,
    binding: Option<BindingSide>,
}

#[derive(Serialize)]
struct HittingSetView<'a> {
    c1: &'a Cycle,
    c2: &'a Cycle,
    k: usize,
    intersection: &'a [usize],
    b0: &'a [usize],
    size_bound_k2_plus_k: usize,
    connecting_paths: usize,
    paths_avoid_cycles: bool,
    separates: bool,
    cycles_checked: usize,
    hits_all: bool,
    degenerate: bool,
}

#[derive(Serialize)]
struct ReportView<'a> {
    n: usize,
    m: usize,
    transitive: Option<bool>,
    transitivity_witness: Option<String>,
    group_source: GroupSource,
    group_order: Option<usize>,
    connectivity: usize,
    two_connected: bool,
    three_connected: bool,
    cycle_branch: bool,
    circumference: Option<usize>,
    longest_cycle_witness: Option<&'a Cycle>,
    longest_cycle_count: Option<usize>,
    k_min_intersection: Option<usize>,
    k_degenerate: Option<bool>,
    k_pair: Option<(&'a Cycle, &'a Cycle)>,
    hitting_set: Option<&'a [usize]>,
    hitting_set_size: Option<usize>,
    hitting_set_detail: Option<HittingSetView<'a>>,
    hitting_set_error: Option<&'a str>,
    bounds: BoundsView,
    satisfied: std::collections::BTreeMap<&'static str, Verdict>,
    ratio_t_over_n: Option<String>,
    ratio_display: Option<f64>,
    lemma2_checks: &'a [Lemma2Check],
    caps_hit: &'a [String],
    notes: &'a [String],
    nodes_expanded: u64,
}

impl<'a> From<&'a BoundReport> for ReportView<'a> {
    fn from(r: &'a BoundReport) -> Self {
        let combined = r.combined();
        let n = r.n as f64;
        ReportView {
            n: r.n,
            m: r.m,
            transitive: r.transitive,
            transitivity_witness: r.transitivity_witness.as_ref().and_then(|w| match w {
                Transitivity::Transitive => None,
                other => Some(format!("{other:?}")),
            }),
            group_source: r.group_source,
            group_order: r.group_order,
            connectivity: r.connectivity,
            two_connected: r.two_connected(),
            three_connected: r.three_connected(),
            cycle_branch: r.cycle_branch,
            circumference: r.circumference,
            longest_cycle_witness: r.witness.as_ref(),
            longest_cycle_count: r.longest_cycle_count,
            k_min_intersection: r.k,
            k_degenerate: r.k_degenerate,
            k_pair: r.k_pair.as_ref().map(|(a, b)| (a, b)),
            hitting_set: r.hitting_set.as_ref().map(|h| h.b.as_slice()),
            hitting_set_size: r.hitting_set.as_ref().map(|h| h.size()),
            hitting_set_detail: r.hitting_set.as_ref().map(|h| HittingSetView {
                c1: &h.c1,
                c2: &h.c2,
                k: h.k,
                intersection: &h.intersection,
                b0: &h.b0,
                size_bound_k2_plus_k: h.k * h.k + h.k,
                connecting_paths: h.connecting_paths,
                paths_avoid_cycles: h.paths_avoid_cycles,
                separates: h.separates,
                cycles_checked: h.cycles_checked,
                hits_all: h.hits_all(),
                degenerate: h.degenerate,
            }),
            hitting_set_error: r.hitting_set_error.as_deref(),
            bounds: BoundsView {
                babai_sq3n: SqrtBound { squared: 3 * r.n as u128, display: display((3.0 * n).sqrt()) },
                sqrt_kn: combined
                    .map(|c| SqrtBound { squared: c.kn(), display: display((c.kn() as f64).sqrt()) }),
                n_over_k2_plus_k: combined.and_then(|c| c.quotient()).map(|q| RationalBound {
                    value: ratio_string(q),
                    display: display(*q.numer() as f64 / *q.denom() as f64),
                }),
                binding: combined.filter(|c| c.k > 0).map(|c| c.binding()),
            },
            satisfied: r.verdicts().into_iter().collect(),
            ratio_t_over_n: r.ratio().map(ratio_string),
            ratio_display: r.ratio().map(|q| display(*q.numer() as f64 / *q.denom() as f64)),
            lemma2_checks: &r.lemma2_checks,
            caps_hit: &r.caps_hit,
            notes: &r.notes,
            nodes_expanded: r.nodes_expanded,
        }
    }
}

fn lemma2_check(
    name: &str,
    group: Option<&EnumeratedGroup>,
    transitive: Option<bool>,
    b: &[usize],
    c: &[usize],
    n: usize,
    min_k: usize,
) -> Lemma2Check {
    let mut check = Lemma2Check {
        name: name.to_string(),
        b_size: b.len(),
        c_size: c.len(),
        k_min: None,
        n,
        group_order: None,
        s_count: None,
        stabilizer_order: None,
        status: Verdict::NotApplicable,
    };
    if transitive != Some(true) {
        return check;
    }
    let Some(group) = group else {
        check.status = Verdict::Unavailable;
        return check;
    };
    let count = group.double_count(b, c).expect("sets lie in the vertex range");
    let verdict = group.verify(b, c).expect("sets lie in the vertex range");
    check.k_min = Some(count.k_min);
    check.group_order = Some(count.group_order);
    check.s_count = Some(count.s_count);
    check.stabilizer_order = Some(count.stabilizer_order);
    check.status = Verdict::from_bool(
        verdict.holds() && count.identity_holds() && count.lower_bound_holds() && count.k_min >= min_k,
    );
    check
}

/// Runs the full pipeline on one connected graph: transitivity,
/// connectivity, circumference, all longest cycles, minimum pairwise
/// intersection, hitting set, counting checks, and the bound checks.
pub fn analyze(
    g: &Graph,
    action: Option<&GroupAction>,
    config: &AnalysisConfig,
) -> Result<BoundReport, AnalyzeError> {
    let n = g.n();
    if n < 3 {
        return Err(AnalyzeError::TooSmall(n));
    }
    if !g.is_connected() {
        return Err(AnalyzeError::Disconnected);
    }
    let mut caps_hit = Vec::new();
    let mut notes = Vec::new();

    let (action, group_source) = match action {
        Some(a) => (Some(a.clone()), GroupSource::Supplied),
        None => match automorphism_generators(g, config.automorphism_limit) {
            Ok(a) => (Some(a), GroupSource::AutomorphismSearch),
            Err(GroupError::TooLarge { .. }) => {
                notes.push(
                    "no group supplied and graph too large for automorphism search; transitivity unknown"
                        .into(),
                );
                (None, GroupSource::None)
            }
            Err(e) => return Err(e.into()),
        },
    };
    let transitivity = action.as_ref().map(|a| a.is_vertex_transitive(g)).transpose()?;
    let transitive = match (&transitivity, group_source) {
        (Some(t), GroupSource::AutomorphismSearch) => Some(t.is_transitive()),
        // a non-transitive supplied subgroup says nothing about Aut(g)
        (Some(t), _) if t.is_transitive() => Some(true),
        _ => None,
    };
    let group = match &action {
        Some(a) => match EnumeratedGroup::new(a, config.group_cap) {
            Ok(e) => Some(e),
            Err(GroupError::CapExceeded(_)) => {
                caps_hit.push("group_enumeration".to_string());
                None
            }
            Err(e) => return Err(e.into()),
        },
        None => None,
    };
    if transitive != Some(true) {
        notes.push("bound checks not applicable: transitivity not established".into());
    }

    let connectivity = vertex_connectivity(g);
    let cycle_branch = g.is_cycle();
    if cycle_branch {
        notes.push("graph is a cycle: 2-connected but not 3-connected, handled as its own case".into());
    }

    let solver = SolverConfig { pruning: config.pruning, time_limit: config.time_limit };
    let mut report = BoundReport {
        n,
        m: g.m(),
        transitive,
        transitivity_witness: transitivity,
        group_source,
        group_order: group.as_ref().map(|e| e.order()),
        connectivity,
        cycle_branch,
        circumference: None,
        witness: None,
        longest_cycle_count: None,
        k: None,
        k_degenerate: None,
        k_pair: None,
        hitting_set: None,
        hitting_set_error: None,
        lemma2_checks: Vec::new(),
        caps_hit,
        notes,
        nodes_expanded: 0,
    };

    let circ = match circumference_with(g, &solver) {
        Ok(c) => c,
        Err(SolverError::TimeLimit { .. }) => {
            report.caps_hit.push("time_limit".into());
            return Ok(report);
        }
        Err(SolverError::NoCycle) => {
            report.notes.push("graph is acyclic: no circumference, bounds not applicable".into());
            return Ok(report);
        }
        Err(e) => return Err(AnalyzeError::Solver(e)),
    };
    report.circumference = Some(circ.length);
    report.witness = Some(circ.witness.clone());
    report.nodes_expanded = circ.stats.nodes;

    let remaining = config.time_limit.map(|l| l.saturating_sub(circ.stats.elapsed));
    let listing =
        cycles_of_length(g, circ.length, config.cycle_cap, &SolverConfig { time_limit: remaining, ..solver });
    let result = match listing {
        Ok((listing, stats)) => {
            report.nodes_expanded += stats.nodes;
            LongestCycleResult {
                n,
                circumference: circ.length,
                listing,
                stats: SolverStats { nodes: report.nodes_expanded, elapsed: stats.elapsed },
            }
        }
        Err(SolverError::TimeLimit { .. }) => {
            report.caps_hit.push("time_limit".into());
            return Ok(report);
        }
        Err(e) => return Err(AnalyzeError::Solver(e)),
    };

    let c_set = circ.witness.vertex_set();
    report.lemma2_checks.push(lemma2_check(
        "longest_cycle_vs_itself",
        group.as_ref(),
        transitive,
        &c_set,
        &c_set,
        n,
        1,
    ));

    match &result.listing {
        Listing::CapExceeded { .. } => {
            report.caps_hit.push("longest_cycle_enumeration".into());
            report.notes.push("k unavailable: longest-cycle enumeration hit its cap".into());
            return Ok(report);
        }
        Listing::Complete(cycles) => report.longest_cycle_count = Some(cycles.len()),
    }

    let pair = min_pairwise_intersection(&result).map_err(AnalyzeError::Solver)?;
    if pair.degenerate {
        report.notes.push("single longest cycle: k is taken to be its length".into());
    }
    report.k = Some(pair.k);
    report.k_degenerate = Some(pair.degenerate);
    report.k_pair = Some(pair.pair.clone());

    if report.two_connected() {
        match construct_hitting_set(g, &result) {
            Ok(h) => {
                report.lemma2_checks.push(lemma2_check(
                    "hitting_set_vs_longest_cycle",
                    group.as_ref(),
                    transitive,
                    &h.b,
                    &c_set,
                    n,
                    1,
                ));
                report.hitting_set = Some(h);
            }
            Err(HittingSetError::Incomplete) => report.caps_hit.push("longest_cycle_enumeration".into()),
            Err(e) => report.hitting_set_error = Some(e.to_string()),
        }
    } else {
        report.notes.push("hitting set not constructed: graph is not 2-connected".into());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, path_graph, petersen, truncate};

    #[test]
    fn babai_examples() {
        let c = babai_bound_check(3, 3);
        assert!(c.holds() && c.equality());
        let c = babai_bound_check(10, 9);
        assert_eq!((c.t_squared, c.three_n), (81, 30));
        assert!(c.holds() && !c.equality());
        let c = babai_bound_check(12, 5);
        assert!(!c.holds());
    }

    #[test]
    fn combined_examples() {
        let c = combined_bound_check(72, 2, 12);
        assert_eq!(c.kn(), 144);
        assert_eq!(c.quotient(), Some(Ratio::from_integer(12)));
        assert!(c.holds());
        assert_eq!(c.binding(), BindingSide::Equal);
        let c = combined_bound_check(7, 7, 7);
        assert!(c.holds());
        assert_eq!(c.kn(), 49);
        assert!(!combined_bound_check(72, 2, 11).sqrt_side_holds());
    }

    #[test]
    fn crossover_values() {
        assert_eq!(crossover_n(1), 4);
        assert_eq!(crossover_n(2), 72);
        for k in 1..=20u64 {
            let n = crossover_n(k);
            assert_eq!(n, k.pow(3) * (k + 1).pow(2));
            let side = k * k * (k + 1);
            assert_eq!(side * side, k * n);
            assert_eq!(n % (k * k + k), 0);
            assert_eq!(n / (k * k + k), side);
        }
    }

    #[test]
    fn cycle_report() {
        let g = cycle_graph(6).unwrap();
        let r = analyze(&g, Some(&GroupAction::cyclic(6)), &AnalysisConfig::default()).unwrap();
        assert_eq!(r.transitive, Some(true));
        assert!(r.two_connected() && !r.three_connected() && r.cycle_branch);
        assert_eq!(r.circumference, Some(6));
        assert_eq!(r.ratio(), Some(Ratio::from_integer(1)));
        assert_eq!((r.k, r.k_degenerate), (Some(6), Some(true)));
        assert_eq!(r.babai_verdict(), Verdict::Pass);
        assert_eq!(r.combined_verdict(), Verdict::Pass);
        assert!(r.failures().is_empty());
    }

    #[test]
    fn petersen_report() {
        let g = petersen();
        let a = crate::corpus::petersen_s5_action();
        let r = analyze(&g, Some(&a), &AnalysisConfig::default()).unwrap();
        assert_eq!(r.group_order, Some(120));
        assert!(r.three_connected());
        assert_eq!(r.circumference, Some(9));
        assert_eq!(r.ratio(), Some(Ratio::new(9, 10)));
        assert!(r.failures().is_empty(), "{:?}", r.failures());
        assert!(r.lemma2_checks.iter().all(|c| c.status == Verdict::Pass));
        assert_eq!(r.lemma2_checks.len(), 2);
    }

    #[test]
    fn fallback_automorphism_search() {
        let g = petersen();
        let r = analyze(&g, None, &AnalysisConfig::default()).unwrap();
        assert_eq!(r.group_source, GroupSource::AutomorphismSearch);
        assert_eq!(r.transitive, Some(true));
        assert_eq!(r.group_order, Some(120));
    }

    #[test]
    fn path_is_not_applicable() {
        let g = path_graph(4).unwrap();
        let r = analyze(&g, None, &AnalysisConfig::default()).unwrap();
        assert_eq!((r.transitive, r.circumference, r.connectivity), (Some(false), None, 1));
        assert_eq!(r.babai_verdict(), Verdict::NotApplicable);
        assert_eq!(r.two_connected_verdict(), Verdict::NotApplicable);
        assert!(r.failures().is_empty() && !r.incomplete());
        let paw = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let r = analyze(&paw, None, &AnalysisConfig::default()).unwrap();
        assert_eq!(r.transitive, Some(false));
        assert_eq!(r.babai_verdict(), Verdict::NotApplicable);
        assert_eq!(r.hitting_set_verdict(), Verdict::NotApplicable);
        assert!(r.failures().is_empty());
    }

    #[test]
    fn cycle_cap_is_reported() {
        let g = petersen();
        let cfg = AnalysisConfig { cycle_cap: 1, ..Default::default() };
        let r = analyze(&g, None, &cfg).unwrap();
        assert!(r.incomplete());
        assert_eq!(r.k, None);
        assert_eq!(r.combined_verdict(), Verdict::Unavailable);
        assert_eq!(r.babai_verdict(), Verdict::Pass);
    }

    #[test]
    fn input_errors() {
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(analyze(&g, None, &AnalysisConfig::default()).unwrap_err(), AnalyzeError::Disconnected);
        let g = path_graph(2).unwrap();
        assert_eq!(analyze(&g, None, &AnalysisConfig::default()).unwrap_err(), AnalyzeError::TooSmall(2));
    }

    #[test]
    fn report_is_deterministic() {
        let g = truncate(&crate::graph::complete(4).unwrap()).unwrap();
        let a = analyze(&g, None, &AnalysisConfig::default()).unwrap().to_json();
        let b = analyze(&g, None, &AnalysisConfig::default()).unwrap().to_json();
        assert_eq!(a, b);
    }
}
