//! Exact circumference and enumeration of all longest cycles.
//!
//! Every simple cycle is generated exactly once: the search only starts
//! from the cycle's minimum vertex `s`, only visits vertices above `s`, and
//! only records the orientation whose second vertex is smaller than its
//! last. Expansion follows ascending neighbor order, so results are
//! deterministic.
//!
//! The pruning bound is plain reachability: from the current path head,
//! count the unused vertices above `s` still reachable; if even using all
//! of them cannot beat (or, when enumerating, reach) the target length,
//! the branch is cut. A branch is also cut when no neighbor of `s` is
//! reachable, since the path could never close.

use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::bitset::BitSet;
use crate::graph::Graph;

/// Default cap on the number of longest cycles kept by enumeration.
pub const DEFAULT_CYCLE_CAP: usize = 100_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("graph has no cycle")]
    NoCycle,
    #[error("time limit of {limit:?} reached (best length so far: {best:?})")]
    TimeLimit { limit: Duration, best: Option<usize> },
    #[error("not a cycle of the graph: {0}")]
    InvalidCycle(String),
    #[error("longest-cycle list is empty")]
    EmptyList,
    #[error("longest-cycle enumeration hit its cap; the minimum intersection is unavailable")]
    Incomplete,
    #[error("oracle is limited to n <= {limit}, graph has {n} vertices")]
    OracleLimit { n: usize, limit: usize },
}

/// A simple cycle stored in canonical form: it starts at its minimum
/// vertex and, of the two orientations, uses the one with the smaller
/// second vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    /// Validates `seq` as a cycle of `g` and canonicalizes it.
    pub fn new(g: &Graph, seq: &[usize]) -> Result<Self, SolverError> {
        if seq.len() < 3 {
            return Err(SolverError::InvalidCycle(format!("length {} < 3", seq.len())));
        }
        let mut seen = vec![false; g.n()];
        for &v in seq {
            if v >= g.n() || seen[v] {
                return Err(SolverError::InvalidCycle(format!("vertex {v} repeated or out of range")));
            }
            seen[v] = true;
        }
        for (i, &u) in seq.iter().enumerate() {
            let w = seq[(i + 1) % seq.len()];
            if !g.has_edge(u, w) {
                return Err(SolverError::InvalidCycle(format!("{u} and {w} are not adjacent")));
            }
        }
        Ok(Cycle { vertices: canonical(seq) })
    }

    pub(crate) fn from_canonical(vertices: Vec<usize>) -> Self {
        debug_assert_eq!(canonical(&vertices), vertices);
        Cycle { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertex set, ascending.
    pub fn vertex_set(&self) -> Vec<usize> {
        let mut s = self.vertices.clone();
        s.sort_unstable();
        s
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub(crate) fn bits(&self, n: usize) -> BitSet {
        BitSet::from_iter(n, self.vertices.iter().copied())
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Canonical rotation/orientation of a vertex sequence.
pub fn canonical(seq: &[usize]) -> Vec<usize> {
    let len = seq.len();
    if len == 0 {
        return Vec::new();
    }
    let start = (0..len).min_by_key(|&i| seq[i]).unwrap();
    let forward: Vec<usize> = (0..len).map(|i| seq[(start + i) % len]).collect();
    let backward: Vec<usize> = (0..len).map(|i| seq[(start + len - i) % len]).collect();
    forward.min(backward)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Pruning {
    /// Exhaustive path extension; used for confirming runs.
    None,
    #[default]
    Reachability,
}

#[derive(Debug, Clone, Default)]
pub struct SolverConfig {
    pub pruning: Pruning,
    pub time_limit: Option<Duration>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolverStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct Circumference {
    pub length: usize,
    pub witness: Cycle,
    pub stats: SolverStats,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Listing {
    /// Every longest cycle, canonical and sorted.
    Complete(Vec<Cycle>),
    /// More than `cap` longest cycles exist; enumeration stopped after
    /// finding `found`.
    CapExceeded { cap: usize, found: usize },
}

#[derive(Debug, Clone)]
pub struct LongestCycleResult {
    /// Vertex count of the host graph.
    pub n: usize,
    pub circumference: usize,
    pub listing: Listing,
    pub stats: SolverStats,
}

impl LongestCycleResult {
    pub fn cycles(&self) -> Option<&[Cycle]> {
        match &self.listing {
            Listing::Complete(c) => Some(c),
            Listing::CapExceeded { .. } => None,
        }
    }

    pub fn is_complete(&self) -> bool {
        matches!(self.listing, Listing::Complete(_))
    }
}

enum Goal {
    Maximize { best: usize, witness: Vec<usize> },
    Enumerate { target: usize, cap: usize, found: Vec<Cycle>, overflow: bool },
}

struct Search<'a> {
    g: &'a Graph,
    nbr: Vec<BitSet>,
    pruning: Pruning,
    start: usize,
    /// vertices above the current start
    above: BitSet,
    on_path: BitSet,
    path: Vec<usize>,
    goal: Goal,
    nodes: u64,
    began: Instant,
    limit: Option<Duration>,
    timed_out: bool,
    reach: BitSet,
    frontier: BitSet,
    scratch: BitSet,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, config: &SolverConfig, goal: Goal) -> Self {
        let n = g.n();
        Search {
            g,
            nbr: (0..n).map(|v| BitSet::from_iter(n, g.neighbors(v).iter().copied())).collect(),
            pruning: config.pruning,
            start: 0,
            above: BitSet::new(n),
            on_path: BitSet::new(n),
            path: Vec::with_capacity(n),
            goal,
            nodes: 0,
            began: Instant::now(),
            limit: config.time_limit,
            timed_out: false,
            reach: BitSet::new(n),
            frontier: BitSet::new(n),
            scratch: BitSet::new(n),
        }
    }

    fn run(&mut self) {
        let n = self.g.n();
        for s in 0..n {
            let room = n - s;
            let hopeless = match &self.goal {
                Goal::Maximize { best, .. } => self.pruning == Pruning::Reachability && *best >= room,
                Goal::Enumerate { target, .. } => room < *target,
            };
            if hopeless {
                break;
            }
            self.start = s;
            self.above = BitSet::from_iter(n, s + 1..n);
            self.path.clear();
            self.on_path.clear();
            self.path.push(s);
            self.on_path.insert(s);
            self.extend(s);
            if self.stopped() {
                break;
            }
        }
    }

    fn stopped(&self) -> bool {
        self.timed_out || matches!(self.goal, Goal::Enumerate { overflow: true, .. })
    }

    /// Upper bound on the number of further vertices a closing extension
    /// of the current path can add; `None` when the path cannot close.
    fn extension_bound(&mut self, head: usize) -> Option<usize> {
        // free = above \ on_path; reach = component of head's free neighbors
        self.reach.clone_from(&self.nbr[head]);
        if !self.reach.assign_and_not(&self.above, &self.on_path) {
            return None;
        }
        self.frontier.clone_from(&self.reach);
        loop {
            self.scratch.clear();
            for v in self.frontier.iter() {
                self.scratch.union_with(&self.nbr[v]);
            }
            self.scratch.assign_and_not(&self.above, &self.on_path);
            self.frontier.clone_from(&self.scratch);
            if !self.frontier.assign_and_not(&self.scratch, &self.reach) {
                break;
            }
            self.reach.union_with(&self.frontier);
        }
        self.reach.intersects(&self.nbr[self.start]).then(|| self.reach.count())
    }

    fn extend(&mut self, head: usize) {
        self.nodes += 1;
        if self.nodes & 0x3ff == 0 {
            if let Some(limit) = self.limit {
                if self.began.elapsed() >= limit {
                    self.timed_out = true;
                }
            }
        }
        if self.stopped() {
            return;
        }
        let len = self.path.len();
        if len >= 3 && self.g.has_edge(head, self.start) && self.path[1] < head {
            self.record();
            if self.stopped() {
                return;
            }
        }
        if let Goal::Enumerate { target, .. } = self.goal {
            if len >= target {
                return;
            }
        }
        if self.pruning == Pruning::Reachability {
            let Some(extra) = self.extension_bound(head) else { return };
            let cut = match &self.goal {
                Goal::Maximize { best, .. } => len + extra <= *best,
                Goal::Enumerate { target, .. } => len + extra < *target,
            };
            if cut {
                return;
            }
        }
        for i in 0..self.g.degree(head) {
            let w = self.g.neighbors(head)[i];
            if w <= self.start || self.on_path.contains(w) {
                continue;
            }
            self.path.push(w);
            self.on_path.insert(w);
            self.extend(w);
            self.path.pop();
            self.on_path.remove(w);
            if self.stopped() {
                return;
            }
        }
    }

    fn record(&mut self) {
        let len = self.path.len();
        match &mut self.goal {
            Goal::Maximize { best, witness } => {
                if len > *best {
                    *best = len;
                    witness.clone_from(&self.path);
                }
            }
            Goal::Enumerate { target, cap, found, overflow } => {
                if len == *target {
                    if found.len() >= *cap {
                        *overflow = true;
                    } else {
                        found.push(Cycle::from_canonical(self.path.clone()));
                    }
                }
            }
        }
    }

    fn stats(&self) -> SolverStats {
        SolverStats { nodes: self.nodes, elapsed: self.began.elapsed() }
    }
}

/// Length of a longest cycle with one witness, using the default
/// reachability pruning and no time limit.
pub fn circumference(g: &Graph) -> Result<(usize, Cycle), SolverError> {
    circumference_with(g, &SolverConfig::default()).map(|c| (c.length, c.witness))
}

pub fn circumference_with(g: &Graph, config: &SolverConfig) -> Result<Circumference, SolverError> {
    let mut search = Search::new(g, config, Goal::Maximize { best: 0, witness: Vec::new() });
    search.run();
    let stats = search.stats();
    let Goal::Maximize { best, witness } = search.goal else { unreachable!() };
    if search.timed_out {
        let limit = config.time_limit.unwrap_or_default();
        return Err(SolverError::TimeLimit { limit, best: (best > 0).then_some(best) });
    }
    if best == 0 {
        return Err(SolverError::NoCycle);
    }
    Ok(Circumference { length: best, witness: Cycle::from_canonical(witness), stats })
}

/// All simple cycles of exactly `length` vertices, up to `cap` of them.
pub fn cycles_of_length(
    g: &Graph,
    length: usize,
    cap: usize,
    config: &SolverConfig,
) -> Result<(Listing, SolverStats), SolverError> {
    let goal = Goal::Enumerate { target: length, cap, found: Vec::new(), overflow: false };
    let mut search = Search::new(g, config, goal);
    search.run();
    let stats = search.stats();
    if search.timed_out {
        let limit = config.time_limit.unwrap_or_default();
        return Err(SolverError::TimeLimit { limit, best: Some(length) });
    }
    let Goal::Enumerate { mut found, overflow, .. } = search.goal else { unreachable!() };
    if overflow {
        return Ok((Listing::CapExceeded { cap, found: found.len() }, stats));
    }
    found.sort_unstable();
    Ok((Listing::Complete(found), stats))
}

pub fn enumerate_longest_cycles(g: &Graph, cap: usize) -> Result<LongestCycleResult, SolverError> {
    enumerate_longest_cycles_with(g, cap, &SolverConfig::default())
}

pub fn enumerate_longest_cycles_with(
    g: &Graph,
    cap: usize,
    config: &SolverConfig,
) -> Result<LongestCycleResult, SolverError> {
    let began = Instant::now();
    let circ = circumference_with(g, config)?;
    let rest = SolverConfig {
        time_limit: config.time_limit.map(|l| l.saturating_sub(began.elapsed())),
        ..config.clone()
    };
    let (listing, stats) = cycles_of_length(g, circ.length, cap, &rest)?;
    Ok(LongestCycleResult {
        n: g.n(),
        circumference: circ.length,
        listing,
        stats: SolverStats { nodes: circ.stats.nodes + stats.nodes, elapsed: began.elapsed() },
    })
}

/// Minimum `|V(C1) ∩ V(C2)|` over pairs of distinct longest cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairwiseIntersection {
    pub k: usize,
    pub pair: (Cycle, Cycle),
    /// Only one longest cycle exists; `k` is then its length and the pair
    /// repeats it.
    pub degenerate: bool,
}

/// Minimum pairwise intersection over a complete longest-cycle list. The
/// witness pair is the lexicographically least pair attaining the minimum.
pub fn min_pairwise_intersection(r: &LongestCycleResult) -> Result<PairwiseIntersection, SolverError> {
    let cycles = r.cycles().ok_or(SolverError::Incomplete)?;
    let first = cycles.first().ok_or(SolverError::EmptyList)?;
    if cycles.len() == 1 {
        return Ok(PairwiseIntersection {
            k: first.len(),
            pair: (first.clone(), first.clone()),
            degenerate: true,
        });
    }
    if r.circumference == r.n {
        // all longest cycles are Hamiltonian, so every pair shares all of V
        return Ok(PairwiseIntersection {
            k: r.n,
            pair: (first.clone(), cycles[1].clone()),
            degenerate: false,
        });
    }
    let bits: Vec<BitSet> = cycles.iter().map(|c| c.bits(r.n)).collect();
    let mut best = (usize::MAX, 0, 1);
    'outer: for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            let c = bits[i].intersection_count(&bits[j]);
            if c < best.0 {
                best = (c, i, j);
                if c == 0 {
                    break 'outer;
                }
            }
        }
    }
    Ok(PairwiseIntersection {
        k: best.0,
        pair: (cycles[best.1].clone(), cycles[best.2].clone()),
        degenerate: false,
    })
}
