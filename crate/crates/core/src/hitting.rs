//! Small hitting sets for longest cycles, built from a minimally
//! intersecting pair of longest cycles and a Menger separator, plus the
//! two-path exchange that lengthens a pair of cycles joined by two
//! disjoint paths between the same pair of arcs.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::connectivity::{menger, ConnectivityError, Endpoints, PathSystem};
use crate::cycles::{min_pairwise_intersection, Cycle, LongestCycleResult, SolverError};
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HittingSetError {
    #[error("longest-cycle enumeration is incomplete; cannot certify that every longest cycle is hit")]
    Incomplete,
    #[error("malformed path system: {0}")]
    MalformedPaths(String),
    #[error(
        "found {paths} disjoint connecting paths with k = {k}, exceeding k^2; \
         the exchange certificate shows the pair was not longest"
    )]
    ExchangeFound { k: usize, paths: usize, certificate: Box<ExchangeCertificate> },
    #[error("more than k^2 paths but no arc pair carries two of them")]
    PigeonholeViolated,
    #[error("exchange produced an invalid cycle: {0}")]
    BadExchange(String),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Connectivity(#[from] ConnectivityError),
}

/// Maximal arcs of a cycle avoiding a vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Segments {
    /// Arcs in cycle order, sorted by their minimum vertex.
    pub segments: Vec<Vec<usize>>,
    /// The removed set misses the cycle, so the single "arc" is the whole
    /// cycle.
    pub whole_cycle: bool,
}

pub fn cycle_minus_components(c: &Cycle, removed: &[usize]) -> Segments {
    let seq = c.vertices();
    let len = seq.len();
    let Some(cut) = seq.iter().position(|v| removed.contains(v)) else {
        return Segments { segments: vec![seq.to_vec()], whole_cycle: true };
    };
    let mut segments = Vec::new();
    let mut run = Vec::new();
    for i in 1..=len {
        let v = seq[(cut + i) % len];
        if removed.contains(&v) {
            if !run.is_empty() {
                segments.push(std::mem::take(&mut run));
            }
        } else {
            run.push(v);
        }
    }
    segments.sort_by_key(|s| *s.iter().min().unwrap());
    Segments { segments, whole_cycle: false }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExchangeCertificate {
    pub c1: Cycle,
    pub c2: Cycle,
    /// Both paths run from the arc `h1` of `c1` to the arc `h2` of `c2`.
    pub p: Vec<usize>,
    pub p_prime: Vec<usize>,
    pub h1: Vec<usize>,
    pub h2: Vec<usize>,
    pub new_c1: Cycle,
    pub new_c2: Cycle,
    pub old_total: usize,
    pub new_total: usize,
    /// `2 (|int P| + |int P'|)`, counting interior path vertices only.
    pub gain_interior_count: usize,
    /// `2 (|V(P)| + |V(P')|)`, counting every path vertex.
    pub gain_all_vertices_count: usize,
}

impl ExchangeCertificate {
    pub fn gain(&self) -> usize {
        self.new_total - self.old_total
    }

    /// `2 (|E(P)| + |E(P')|)`; equals the observed gain.
    pub fn gain_edge_count(&self) -> usize {
        2 * (self.p.len() - 1 + self.p_prime.len() - 1)
    }
}

/// Arc of `seq` from `x` to `y` inclusive, walking forward when `forward`.
fn arc(seq: &[usize], x: usize, y: usize, forward: bool) -> Vec<usize> {
    let len = seq.len();
    let mut i = seq.iter().position(|&v| v == x).unwrap();
    let mut out = vec![x];
    while seq[i] != y {
        i = if forward { (i + 1) % len } else { (i + len - 1) % len };
        out.push(seq[i]);
    }
    out
}

/// Splits a cycle at `x`, `y` into the arc `x..y` lying inside `segment`
/// and the complementary arc `y..x`.
fn split_at(seq: &[usize], segment: &[usize], x: usize, y: usize) -> (Vec<usize>, Vec<usize>) {
    let fwd = arc(seq, x, y, true);
    let inner_fwd = fwd.iter().all(|v| segment.contains(v));
    let inner = if inner_fwd { fwd } else { arc(seq, x, y, false) };
    let outer = arc(seq, y, x, inner_fwd);
    (inner, outer)
}

/// Looks for two paths of `paths` that leave the same arc of
/// `C1 - V(C2)` and enter the same arc of `C2 - V(C1)`, and if found
/// reroutes both cycles through them.
///
/// Paths must join `V(C1) \ V(C2)` to `V(C2) \ V(C1)` (either
/// orientation), be pairwise disjoint, and have interiors avoiding
/// `V(C1) ∪ V(C2)`.
pub fn find_exchange(
    g: &Graph,
    c1: &Cycle,
    c2: &Cycle,
    paths: &PathSystem,
) -> Result<Option<ExchangeCertificate>, HittingSetError> {
    let shared: Vec<usize> = c1.vertex_set().into_iter().filter(|&v| c2.contains(v)).collect();
    let segs1 = cycle_minus_components(c1, &shared).segments;
    let segs2 = cycle_minus_components(c2, &shared).segments;
    let seg_of = |segs: &[Vec<usize>], v: usize| segs.iter().position(|s| s.contains(&v));
    let bad = |msg: String| HittingSetError::MalformedPaths(msg);

    let mut used = vec![false; g.n()];
    let mut oriented: Vec<Vec<usize>> = Vec::with_capacity(paths.len());
    for p in &paths.paths {
        let (Some(&a), Some(&b)) = (p.first(), p.last()) else {
            return Err(bad("empty path".into()));
        };
        let mut p = p.clone();
        let on1 = |v: usize| c1.contains(v) && !c2.contains(v);
        let on2 = |v: usize| c2.contains(v) && !c1.contains(v);
        if on2(a) && on1(b) {
            p.reverse();
        } else if !(on1(a) && on2(b)) {
            return Err(bad(format!("path {a}..{b} does not join the two cycle remainders")));
        }
        if p.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
            return Err(bad(format!("path {a}..{b} uses a non-edge")));
        }
        if p[1..p.len() - 1].iter().any(|&v| c1.contains(v) || c2.contains(v)) {
            return Err(bad(format!("path {a}..{b} meets a cycle internally")));
        }
        for &v in &p {
            if std::mem::replace(&mut used[v], true) {
                return Err(bad(format!("paths share vertex {v}")));
            }
        }
        oriented.push(p);
    }

    let mut first_on: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut found = None;
    for (i, p) in oriented.iter().enumerate() {
        let key = (
            seg_of(&segs1, p[0]).expect("start lies on an arc of C1"),
            seg_of(&segs2, *p.last().unwrap()).expect("end lies on an arc of C2"),
        );
        if let Some(&j) = first_on.get(&key) {
            found = Some((j, i, key));
            break;
        }
        first_on.insert(key, i);
    }
    let Some((j, i, (s1, s2))) = found else { return Ok(None) };
    let (p, q) = (&oriented[j], &oriented[i]);
    let (h1, h2) = (&segs1[s1], &segs2[s2]);
    let (a, b) = (p[0], *p.last().unwrap());
    let (a2, b2) = (q[0], *q.last().unwrap());

    let (inner1, outer1) = split_at(c1.vertices(), h1, a, a2);
    let (inner2, outer2) = split_at(c2.vertices(), h2, b, b2);
    let p_int = &p[1..p.len() - 1];
    let q_int = &q[1..q.len() - 1];

    // C1': a2 ..outer.. a, P, b ..H2.. b2, P' back to a2
    let mut seq1 = outer1;
    seq1.extend_from_slice(p_int);
    seq1.extend_from_slice(&inner2);
    seq1.extend(q_int.iter().rev());
    // C2': b2 ..outer.. b, P reversed, a ..H1.. a2, P' forward to b2
    let mut seq2 = outer2;
    seq2.extend(p_int.iter().rev());
    seq2.extend_from_slice(&inner1);
    seq2.extend_from_slice(q_int);

    let new_c1 = Cycle::new(g, &seq1).map_err(|e| HittingSetError::BadExchange(e.to_string()))?;
    let new_c2 = Cycle::new(g, &seq2).map_err(|e| HittingSetError::BadExchange(e.to_string()))?;
    let old_total = c1.len() + c2.len();
    let new_total = new_c1.len() + new_c2.len();
    if new_total <= old_total {
        return Err(HittingSetError::BadExchange(format!(
            "combined length {new_total} does not exceed {old_total}"
        )));
    }
    Ok(Some(ExchangeCertificate {
        c1: c1.clone(),
        c2: c2.clone(),
        p: p.clone(),
        p_prime: q.clone(),
        h1: h1.clone(),
        h2: h2.clone(),
        new_c1,
        new_c2,
        old_total,
        new_total,
        gain_interior_count: 2 * (p_int.len() + q_int.len()),
        gain_all_vertices_count: 2 * (p.len() + q.len()),
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HittingSetCertificate {
    pub c1: Cycle,
    pub c2: Cycle,
    pub k: usize,
    pub intersection: Vec<usize>,
    /// Separator of the two cycle remainders once the intersection is
    /// deleted.
    pub b0: Vec<usize>,
    pub b: Vec<usize>,
    /// Size of a maximum disjoint path system between the remainders.
    pub connecting_paths: usize,
    /// Every connecting path has its interior outside `V(C1) ∪ V(C2)`.
    pub paths_avoid_cycles: bool,
    /// Deleting `b` leaves no path from `V(C1) \ b` to `V(C2) \ b`.
    pub separates: bool,
    /// Only one longest cycle exists; `b` is its vertex set.
    pub degenerate: bool,
    /// Number of longest cycles checked against `b`.
    pub cycles_checked: usize,
    /// Smallest vertex of `b` on each checked cycle, `None` for a miss.
    pub witnesses: Vec<Option<usize>>,
}

impl HittingSetCertificate {
    pub fn size(&self) -> usize {
        self.b.len()
    }

    pub fn within_bound(&self) -> bool {
        self.degenerate || self.b.len() <= self.k * self.k + self.k
    }

    pub fn hits_all(&self) -> bool {
        self.witnesses.iter().all(Option::is_some)
    }

    fn check_cycles(&mut self, cycles: &[Cycle]) {
        self.cycles_checked = cycles.len();
        self.witnesses = cycles
            .iter()
            .map(|c| c.vertices().iter().copied().filter(|v| self.b.binary_search(v).is_ok()).min())
            .collect();
    }
}

/// Builds `B = B0 ∪ (V(C1) ∩ V(C2))` for one pair of cycles. When more
/// than `k^2` disjoint paths join the remainders, returns
/// [`HittingSetError::ExchangeFound`] with the lengthening certificate
/// instead.
pub fn hitting_set_for_pair(
    g: &Graph,
    c1: &Cycle,
    c2: &Cycle,
) -> Result<HittingSetCertificate, HittingSetError> {
    let intersection: Vec<usize> = c1.vertex_set().into_iter().filter(|&v| c2.contains(v)).collect();
    let k = intersection.len();
    let rest1: Vec<usize> = c1.vertex_set().into_iter().filter(|&v| !c2.contains(v)).collect();
    let rest2: Vec<usize> = c2.vertex_set().into_iter().filter(|&v| !c1.contains(v)).collect();

    let mut b0 = Vec::new();
    let mut connecting_paths = 0;
    let mut paths_avoid_cycles = true;
    if !rest1.is_empty() && !rest2.is_empty() {
        let (sub, map) = g.without_vertices(&intersection);
        let sub = sub.expect("remainders are nonempty");
        let mut index = vec![usize::MAX; g.n()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let s: Vec<usize> = rest1.iter().map(|&v| index[v]).collect();
        let t: Vec<usize> = rest2.iter().map(|&v| index[v]).collect();
        let (paths, sep) = menger(&sub, &s, &t, Endpoints::Disjoint)?;
        connecting_paths = paths.len();
        let lifted = PathSystem {
            endpoints: Endpoints::Disjoint,
            paths: paths.paths.iter().map(|p| p.iter().map(|&v| map[v]).collect()).collect(),
        };
        paths_avoid_cycles = lifted
            .paths
            .iter()
            .all(|p| p.len() >= 2 && p[1..p.len() - 1].iter().all(|&v| !c1.contains(v) && !c2.contains(v)));
        if connecting_paths > k * k {
            let certificate =
                find_exchange(g, c1, c2, &lifted)?.ok_or(HittingSetError::PigeonholeViolated)?;
            return Err(HittingSetError::ExchangeFound {
                k,
                paths: connecting_paths,
                certificate: Box::new(certificate),
            });
        }
        b0 = sep.vertices.iter().map(|&v| map[v]).collect();
    }
    let mut b: Vec<usize> = b0.iter().chain(&intersection).copied().collect();
    b.sort_unstable();
    b.dedup();
    let from: Vec<usize> = c1.vertex_set().into_iter().filter(|v| b.binary_search(v).is_err()).collect();
    let to: Vec<usize> = c2.vertex_set().into_iter().filter(|v| b.binary_search(v).is_err()).collect();
    let separates = !g.connects(&from, &to, &b);
    Ok(HittingSetCertificate {
        c1: c1.clone(),
        c2: c2.clone(),
        k,
        intersection,
        b0,
        b,
        connecting_paths,
        paths_avoid_cycles,
        separates,
        degenerate: false,
        cycles_checked: 0,
        witnesses: Vec::new(),
    })
}

/// Hitting set for all longest cycles from the lexicographically least
/// minimally intersecting pair, checked against every enumerated longest
/// cycle.
pub fn construct_hitting_set(
    g: &Graph,
    r: &LongestCycleResult,
) -> Result<HittingSetCertificate, HittingSetError> {
    let cycles = r.cycles().ok_or(HittingSetError::Incomplete)?;
    let pair = min_pairwise_intersection(r)?;
    let mut cert = if pair.degenerate {
        let c = pair.pair.0;
        HittingSetCertificate {
            c1: c.clone(),
            c2: c.clone(),
            k: pair.k,
            intersection: c.vertex_set(),
            b0: Vec::new(),
            b: c.vertex_set(),
            connecting_paths: 0,
            paths_avoid_cycles: true,
            separates: true,
            degenerate: true,
            cycles_checked: 0,
            witnesses: Vec::new(),
        }
    } else {
        hitting_set_for_pair(g, &pair.pair.0, &pair.pair.1)?
    };
    cert.check_cycles(cycles);
    Ok(cert)
}
