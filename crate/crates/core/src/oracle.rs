//! Unpruned reference computations, independent of the search and flow
//! code they are used to check.

use crate::cycles::SolverError;
use crate::graph::Graph;

pub const CIRCUMFERENCE_ORACLE_MAX_N: usize = 10;
pub const CONNECTIVITY_ORACLE_MAX_N: usize = 20;

/// Number of simple cycles of each length (index = length), counting every
/// cycle exactly once. Dynamic programming over (vertex subset, endpoint):
/// `paths[mask][v]` counts paths that start at the minimum vertex of `mask`,
/// visit exactly `mask`, and end at `v`.
pub fn cycle_length_counts(g: &Graph, max_n: usize) -> Result<Vec<u64>, SolverError> {
    let n = g.n();
    if n > max_n || n > 24 {
        return Err(SolverError::OracleLimit { n, limit: max_n.min(24) });
    }
    let full = 1usize << n;
    let mut paths = vec![0u64; full * n];
    let mut counts = vec![0u64; n + 1];
    for s in 0..n {
        paths[(1 << s) * n + s] = 1;
    }
    for mask in 1..full {
        let low = mask.trailing_zeros() as usize;
        let size = mask.count_ones() as usize;
        for v in 0..n {
            let ways = paths[mask * n + v];
            if ways == 0 {
                continue;
            }
            if size >= 3 && g.has_edge(v, low) {
                counts[size] += ways;
            }
            for &w in g.neighbors(v) {
                if w > low && mask & (1 << w) == 0 {
                    paths[(mask | 1 << w) * n + w] += ways;
                }
            }
        }
    }
    // each cycle was counted once per direction
    for c in counts.iter_mut() {
        *c /= 2;
    }
    Ok(counts)
}

/// Circumference by exhaustive dynamic programming; `n <= 10`.
pub fn brute_force_circumference(g: &Graph) -> Result<usize, SolverError> {
    let counts = cycle_length_counts(g, CIRCUMFERENCE_ORACLE_MAX_N)?;
    counts.iter().rposition(|&c| c > 0).ok_or(SolverError::NoCycle)
}

pub fn brute_force_girth(g: &Graph) -> Option<usize> {
    g.girth()
}

/// Vertex connectivity by trying every vertex subset in order of size:
/// the smallest set whose removal disconnects the graph or leaves a single
/// vertex.
pub fn brute_force_connectivity(g: &Graph) -> Result<usize, SolverError> {
    let n = g.n();
    if n > CONNECTIVITY_ORACLE_MAX_N {
        return Err(SolverError::OracleLimit { n, limit: CONNECTIVITY_ORACLE_MAX_N });
    }
    let mut by_size: Vec<u32> = (0..1u32 << n).collect();
    by_size.sort_by_key(|m| m.count_ones());
    for mask in by_size {
        let removed: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if n - removed.len() <= 1 {
            return Ok(removed.len());
        }
        let first = (0..n).find(|&v| mask >> v & 1 == 0).unwrap();
        if g.component_of(first, &removed).len() < n - removed.len() {
            return Ok(removed.len());
        }
    }
    unreachable!("removing all but one vertex always terminates")
}
