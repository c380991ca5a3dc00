//! Simple undirected graphs on dense vertex indices `0..n`.

mod coxeter;
mod generators;
mod io;

pub use generators::{
    cayley_graph, circulant, complete, coxeter, cycle_graph, path_graph, petersen, petersen_labels, truncate,
    truncate_with_darts, CayleyGraph,
};
pub use io::{read_graph, write_graph};

use std::collections::VecDeque;

use thiserror::Error;

use crate::group::GroupError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("loop edge at vertex {0}")]
    Loop(usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    OutOfRange { u: usize, v: usize, n: usize },
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("graph is not 3-regular (vertex {vertex} has degree {degree})")]
    NotCubic { vertex: usize, degree: usize },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Undirected simple graph. Immutable after construction.
///
/// `edges` holds each edge once as `(u, v)` with `u < v`, sorted. `adj[v]`
/// is the ascending neighbor list of `v`; both views always agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs and both
    /// orientations of the same pair collapse to a single edge.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        self.adj.iter().all(|a| a.len() == d).then_some(d)
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0, &[]).len() == self.n
    }

    /// Connected 2-regular graph on at least three vertices.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.regular_degree() == Some(2) && self.is_connected()
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * (self.n - 1) / 2
    }

    /// Vertices reachable from `start` without entering `blocked`, ascending.
    /// Empty when `start` itself is blocked.
    pub fn component_of(&self, start: usize, blocked: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        for &b in blocked {
            seen[b] = true;
        }
        if seen[start] {
            return Vec::new();
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut out = vec![start];
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    out.push(w);
                    queue.push_back(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// True when some vertex of `from` reaches some vertex of `to` in the
    /// graph with `blocked` deleted.
    pub fn connects(&self, from: &[usize], to: &[usize], blocked: &[usize]) -> bool {
        let mut state = vec![0u8; self.n];
        for &b in blocked {
            state[b] = 2;
        }
        let mut queue = VecDeque::new();
        for &s in from {
            if state[s] == 0 {
                state[s] = 1;
                queue.push_back(s);
            }
        }
        let mut target = vec![false; self.n];
        for &t in to {
            target[t] = true;
        }
        while let Some(u) = queue.pop_front() {
            if target[u] {
                return true;
            }
            for &w in &self.adj[u] {
                if state[w] == 0 {
                    state[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        false
    }

    /// Induced subgraph on the vertices not in `removed`. Returns the
    /// subgraph and, for each new index, the original vertex.
    pub fn without_vertices(&self, removed: &[usize]) -> (Option<Graph>, Vec<usize>) {
        let mut drop = vec![false; self.n];
        for &r in removed {
            drop[r] = true;
        }
        let kept: Vec<usize> = (0..self.n).filter(|&v| !drop[v]).collect();
        if kept.is_empty() {
            return (None, kept);
        }
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in kept.iter().enumerate() {
            index[v] = i;
        }
        let pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| !drop[u] && !drop[v])
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        let sub = Graph::from_edge_list(kept.len(), &pairs).expect("induced subgraph is valid");
        (Some(sub), kept)
    }

    /// Length of a shortest cycle, by BFS from every vertex.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for s in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            parent[s] = usize::MAX;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Checks the internal representation invariants.
    pub fn validate(&self) -> bool {
        let rebuilt = Graph::from_edge_list(self.n, &self.edges);
        matches!(rebuilt, Ok(ref g) if g == self)
            && self.edges.iter().all(|&(u, v)| u < v)
            && (0..self.n).all(|u| self.adj[u].iter().all(|&v| self.adj[v].contains(&u)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_from_edges() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(g.regular_degree(), Some(2));
        assert!(g.is_cycle());
        assert!(g.validate());
    }

    #[test]
    fn duplicates_collapse() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.edges(), &[(0, 1)]);
        assert!(!g.is_connected());
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Graph::from_edge_list(2, &[(0, 0)]), Err(GraphError::Loop(0)));
        assert!(matches!(Graph::from_edge_list(2, &[(0, 2)]), Err(GraphError::OutOfRange { .. })));
        assert_eq!(Graph::from_edge_list(0, &[]), Err(GraphError::Empty));
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = cycle_graph(6).unwrap();
        let (sub, map) = g.without_vertices(&[0, 3]);
        let sub = sub.unwrap();
        assert_eq!(map, vec![1, 2, 4, 5]);
        assert_eq!(sub.edges(), &[(0, 1), (2, 3)]);
    }

    #[test]
    fn connects_respects_blocked() {
        let g = cycle_graph(6).unwrap();
        assert!(g.connects(&[0], &[3], &[1]));
        assert!(!g.connects(&[0], &[3], &[1, 5]));
    }
}
