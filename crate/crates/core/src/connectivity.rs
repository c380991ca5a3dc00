//! Disjoint path systems, minimum vertex separators and k-connectivity via
//! unit-capacity flow on the vertex-split graph.
//!
//! Each vertex `v` becomes an arc `v_in -> v_out`; each edge `uv` becomes
//! `u_out -> v_in` and `v_out -> u_in`. Augmenting paths are found by BFS
//! in ascending index order, so path systems and separators are
//! deterministic. The separator is read off the residual graph: vertices
//! whose in-copy is reachable from the sources and whose out-copy is not,
//! which is the minimum cut closest to the sources.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConnectivityError {
    #[error("source and target sets share vertex {0}")]
    OverlappingTerminals(usize),
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
    #[error("source or target set is empty")]
    EmptyTerminals,
}

/// How paths may use the terminal sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Endpoints {
    /// Paths are internally disjoint and may share endpoints; separators
    /// avoid the terminal sets unless a direct S-T edge forces an endpoint
    /// in. For singleton sets this is classical local connectivity.
    Shared,
    /// Paths are pairwise vertex-disjoint including endpoints; separators
    /// may contain terminal vertices. Menger duality is exact here.
    Disjoint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathSystem {
    pub endpoints: Endpoints,
    /// Each path runs from a source vertex to a target vertex with no
    /// source or target vertex in its interior.
    pub paths: Vec<Vec<usize>>,
}

impl PathSystem {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Checks adjacency, terminal membership and disjointness.
    pub fn validate(&self, g: &Graph, sources: &[usize], targets: &[usize]) -> bool {
        let mut uses = vec![0usize; g.n()];
        let mut end_uses = vec![0usize; g.n()];
        for p in &self.paths {
            let (Some(&a), Some(&b)) = (p.first(), p.last()) else { return false };
            if !sources.contains(&a) || !targets.contains(&b) {
                return false;
            }
            if p.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return false;
            }
            for (i, &v) in p.iter().enumerate() {
                let interior = i > 0 && i + 1 < p.len();
                if interior && (sources.contains(&v) || targets.contains(&v)) {
                    return false;
                }
                if interior {
                    uses[v] += 1;
                } else {
                    end_uses[v] += 1;
                }
            }
        }
        (0..g.n()).all(|v| match self.endpoints {
            Endpoints::Disjoint => uses[v] + end_uses[v] <= 1,
            Endpoints::Shared => uses[v] <= 1 && (uses[v] == 0 || end_uses[v] == 0),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Separator {
    pub vertices: Vec<usize>,
    pub sources: Vec<usize>,
    pub targets: Vec<usize>,
    /// A direct source-target edge could not be cut by a non-terminal
    /// vertex, so a source endpoint was added (`Shared` mode only).
    pub forced_endpoints: bool,
}

impl Separator {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// No source outside the separator reaches a target outside it.
    pub fn separates(&self, g: &Graph) -> bool {
        let from: Vec<usize> = self.sources.iter().copied().filter(|v| !self.vertices.contains(v)).collect();
        let to: Vec<usize> = self.targets.iter().copied().filter(|v| !self.vertices.contains(v)).collect();
        !g.connects(&from, &to, &self.vertices)
    }
}

const INF: u32 = u32::MAX / 2;

struct Network {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
    original: Vec<u32>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network { head: vec![Vec::new(); nodes], to: Vec::new(), cap: Vec::new(), original: Vec::new() }
    }

    fn arc(&mut self, u: usize, v: usize, cap: u32) {
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(cap);
        self.original.push(cap);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
        self.original.push(0);
    }

    /// BFS from `src`; returns predecessor arcs, `None` for unreached.
    fn bfs(&self, src: usize) -> Vec<Option<usize>> {
        let mut pred = vec![None; self.head.len()];
        let mut seen = vec![false; self.head.len()];
        seen[src] = true;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.head[u] {
                let v = self.to[a];
                if self.cap[a] > 0 && !seen[v] {
                    seen[v] = true;
                    pred[v] = Some(a);
                    queue.push_back(v);
                }
            }
        }
        pred
    }

    fn reachable(&self, src: usize) -> Vec<bool> {
        let pred = self.bfs(src);
        (0..self.head.len()).map(|v| v == src || pred[v].is_some()).collect()
    }

    /// Augments until no path remains or the flow reaches `limit`.
    fn max_flow(&mut self, src: usize, sink: usize, limit: u32) -> u32 {
        let mut flow = 0;
        while flow < limit {
            let pred = self.bfs(src);
            if pred[sink].is_none() {
                break;
            }
            let mut bottleneck = limit - flow;
            let mut v = sink;
            while let Some(a) = pred[v] {
                bottleneck = bottleneck.min(self.cap[a]);
                v = self.to[a ^ 1];
            }
            let mut v = sink;
            while let Some(a) = pred[v] {
                self.cap[a] -= bottleneck;
                self.cap[a ^ 1] += bottleneck;
                v = self.to[a ^ 1];
            }
            flow += bottleneck;
        }
        flow
    }

    /// Splits the flow into source-sink node walks, dropping any circulation.
    fn decompose(&self, src: usize, sink: usize) -> Vec<Vec<usize>> {
        let mut left: Vec<u32> =
            (0..self.to.len()).map(|a| if a % 2 == 0 { self.original[a] - self.cap[a] } else { 0 }).collect();
        let mut walks = Vec::new();
        loop {
            let mut walk = vec![src];
            let mut u = src;
            while u != sink {
                let Some(&a) = self.head[u].iter().find(|&&a| left[a] > 0) else { break };
                left[a] -= 1;
                u = self.to[a];
                if let Some(pos) = walk.iter().position(|&x| x == u) {
                    walk.truncate(pos + 1);
                } else {
                    walk.push(u);
                }
            }
            if u != sink {
                break;
            }
            walks.push(walk);
        }
        walks
    }
}

struct SplitFlow {
    paths: Vec<Vec<usize>>,
    separator: Vec<usize>,
    forced: bool,
}

fn check_terminals(g: &Graph, sources: &[usize], targets: &[usize]) -> Result<(), ConnectivityError> {
    if let Some(&v) = sources.iter().chain(targets).find(|&&v| v >= g.n()) {
        return Err(ConnectivityError::OutOfRange(v));
    }
    if let Some(&v) = sources.iter().find(|v| targets.contains(v)) {
        return Err(ConnectivityError::OverlappingTerminals(v));
    }
    Ok(())
}

fn split_flow(g: &Graph, sources: &[usize], targets: &[usize], mode: Endpoints, limit: u32) -> SplitFlow {
    let n = g.n();
    let (src, sink) = (2 * n, 2 * n + 1);
    let mut side = vec![0u8; n];
    for &s in sources {
        side[s] = 1;
    }
    for &t in targets {
        side[t] = 2;
    }
    let mut net = Network::new(2 * n + 2);
    for (v, &role) in side.iter().enumerate() {
        let cap = if mode == Endpoints::Shared && role != 0 { INF } else { 1 };
        net.arc(2 * v, 2 * v + 1, cap);
    }
    for &(u, v) in g.edges() {
        let direct = side[u] != 0 && side[v] != 0 && side[u] != side[v];
        let cap = if mode == Endpoints::Shared && direct { 1 } else { INF };
        net.arc(2 * u + 1, 2 * v, cap);
        net.arc(2 * v + 1, 2 * u, cap);
    }
    let mut sorted_sources = sources.to_vec();
    sorted_sources.sort_unstable();
    sorted_sources.dedup();
    let mut sorted_targets = targets.to_vec();
    sorted_targets.sort_unstable();
    sorted_targets.dedup();
    for &s in &sorted_sources {
        net.arc(src, 2 * s, INF);
    }
    for &t in &sorted_targets {
        net.arc(2 * t + 1, sink, INF);
    }
    net.max_flow(src, sink, limit);

    let paths = net
        .decompose(src, sink)
        .into_iter()
        .map(|walk| {
            let mut verts: Vec<usize> = walk[1..walk.len() - 1].iter().map(|&x| x / 2).collect();
            verts.dedup();
            let first_t = verts.iter().position(|&v| side[v] == 2).expect("walk reaches a target");
            let last_s =
                verts[..first_t].iter().rposition(|&v| side[v] == 1).expect("walk starts at a source");
            verts[last_s..=first_t].to_vec()
        })
        .collect();

    let reach = net.reachable(src);
    let mut separator: Vec<usize> = (0..n).filter(|&v| reach[2 * v] && !reach[2 * v + 1]).collect();
    let mut forced = false;
    if mode == Endpoints::Shared {
        for &(u, v) in g.edges() {
            for (a, b) in [(u, v), (v, u)] {
                if side[a] == 1 && side[b] == 2 && reach[2 * a + 1] && !reach[2 * b] {
                    separator.push(a);
                    forced = true;
                }
            }
        }
        separator.sort_unstable();
        separator.dedup();
    }
    SplitFlow { paths, separator, forced }
}

/// Maximum system of disjoint `sources`-`targets` paths.
pub fn max_disjoint_paths(
    g: &Graph,
    sources: &[usize],
    targets: &[usize],
    mode: Endpoints,
) -> Result<PathSystem, ConnectivityError> {
    menger(g, sources, targets, mode).map(|(p, _)| p)
}

/// Minimum vertex set separating `sources` from `targets`.
pub fn min_vertex_separator(
    g: &Graph,
    sources: &[usize],
    targets: &[usize],
    mode: Endpoints,
) -> Result<Separator, ConnectivityError> {
    menger(g, sources, targets, mode).map(|(_, s)| s)
}

/// Path system and separator from a single flow computation.
pub fn menger(
    g: &Graph,
    sources: &[usize],
    targets: &[usize],
    mode: Endpoints,
) -> Result<(PathSystem, Separator), ConnectivityError> {
    check_terminals(g, sources, targets)?;
    if sources.is_empty() || targets.is_empty() {
        return Err(ConnectivityError::EmptyTerminals);
    }
    let flow = split_flow(g, sources, targets, mode, INF);
    let mut s = sources.to_vec();
    s.sort_unstable();
    s.dedup();
    let mut t = targets.to_vec();
    t.sort_unstable();
    t.dedup();
    Ok((
        PathSystem { endpoints: mode, paths: flow.paths },
        Separator { vertices: flow.separator, sources: s, targets: t, forced_endpoints: flow.forced },
    ))
}

/// Number of internally disjoint `u`-`v` paths for nonadjacent `u`, `v`,
/// counting at most `limit`.
fn local_connectivity(g: &Graph, u: usize, v: usize, limit: usize) -> usize {
    split_flow(g, &[u], &[v], Endpoints::Shared, limit as u32).paths.len()
}

/// Exact vertex connectivity; `n - 1` for complete graphs.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    let mut best = n - 1;
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                best = best.min(local_connectivity(g, u, v, best));
                if best == 0 {
                    return 0;
                }
            }
        }
    }
    best
}

/// `n > k` and every nonadjacent pair is joined by `k` internally disjoint
/// paths.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if n <= k {
        return false;
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && local_connectivity(g, u, v, k) < k {
                return false;
            }
        }
    }
    true
}
