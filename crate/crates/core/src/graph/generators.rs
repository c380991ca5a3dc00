use std::collections::HashMap;

use super::coxeter::{COXETER_EDGES, COXETER_N};
use super::{Graph, GraphError};
use crate::group::{GroupAction, Permutation};

pub fn cycle_graph(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::BadParameter(format!("cycle needs n >= 3, got {n}")));
    }
    let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &pairs)
}

pub fn path_graph(n: usize) -> Result<Graph, GraphError> {
    let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &pairs)
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    Graph::from_edge_list(n, &pairs)
}

/// The 2-subsets of `{0..4}` in lexicographic order; vertex `i` of
/// [`petersen`] is `petersen_labels()[i]`.
pub fn petersen_labels() -> Vec<(usize, usize)> {
    let mut labels = Vec::with_capacity(10);
    for a in 0..5 {
        for b in a + 1..5 {
            labels.push((a, b));
        }
    }
    labels
}

/// Kneser graph K(5,2): 2-subsets of a 5-set, adjacent when disjoint.
pub fn petersen() -> Graph {
    let labels = petersen_labels();
    let mut pairs = Vec::new();
    for (i, &(a, b)) in labels.iter().enumerate() {
        for (j, &(c, d)) in labels.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                pairs.push((i, j));
            }
        }
    }
    Graph::from_edge_list(10, &pairs).expect("petersen construction is valid")
}

/// Coxeter graph from the checked-in table (see `coxeter.rs` for the
/// derivation).
pub fn coxeter() -> Graph {
    Graph::from_edge_list(COXETER_N, &COXETER_EDGES).expect("coxeter table is valid")
}

/// Vertex `i` joined to `i ± d (mod n)` for each offset `d`.
pub fn circulant(n: usize, offsets: &[usize]) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::BadParameter(format!("circulant needs n >= 3, got {n}")));
    }
    if offsets.is_empty() {
        return Err(GraphError::BadParameter("circulant needs at least one offset".into()));
    }
    let mut pairs = Vec::new();
    for &d in offsets {
        if d == 0 || d > n / 2 {
            return Err(GraphError::BadParameter(format!("offset {d} outside 1..={}", n / 2)));
        }
        for i in 0..n {
            pairs.push((i, (i + d) % n));
        }
    }
    Graph::from_edge_list(n, &pairs)
}

/// A Cayley graph together with the group elements labeling its vertices
/// and the regular action of the group on them.
#[derive(Debug, Clone)]
pub struct CayleyGraph {
    pub graph: Graph,
    pub elements: Vec<Permutation>,
    /// Left multiplication `x -> h x` by each group generator `h`; these are
    /// automorphisms because adjacency uses right multiplication.
    pub action: GroupAction,
}

/// Cayley graph of the group generated by `generators`, with `g ~ g s` for
/// every `s` in the connection set. The connection set is closed under
/// inverses here and the identity is dropped.
pub fn cayley_graph(
    generators: &[Permutation],
    connection: &[Permutation],
    cap: usize,
) -> Result<CayleyGraph, GraphError> {
    let group = GroupAction::new(generators.to_vec())?;
    let elements = group.enumerate_elements(cap)?;
    let index: HashMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();

    let mut conn: Vec<Permutation> = Vec::new();
    for s in connection {
        if !index.contains_key(s) {
            return Err(GraphError::BadParameter("connection element is not in the generated group".into()));
        }
        for t in [s.clone(), s.inverse()] {
            if !t.is_identity() && !conn.contains(&t) {
                conn.push(t);
            }
        }
    }
    if conn.is_empty() {
        return Err(GraphError::BadParameter("connection set has no non-identity element".into()));
    }

    let mut pairs = Vec::new();
    for (i, g) in elements.iter().enumerate() {
        for s in &conn {
            let gs = g.compose(s).expect("equal degree");
            pairs.push((i, index[&gs]));
        }
    }
    let graph = Graph::from_edge_list(elements.len(), &pairs)?;

    let left: Vec<Permutation> = group
        .generators()
        .iter()
        .map(|h| {
            let images: Vec<usize> =
                elements.iter().map(|x| index[&h.compose(x).expect("equal degree")]).collect();
            Permutation::from_images(images).expect("left multiplication is a bijection")
        })
        .collect();
    let action = GroupAction::new(left)?;
    Ok(CayleyGraph { graph, elements, action })
}

/// Truncation of a cubic graph. Vertex `v` becomes the triangle
/// `3v, 3v+1, 3v+2`; vertex `3v+i` takes over the edge from `v` to its
/// `i`-th smallest neighbor.
pub fn truncate(g: &Graph) -> Result<Graph, GraphError> {
    truncate_with_darts(g).map(|(t, _)| t)
}

/// As [`truncate`], also returning for each new vertex the dart `(v, w)` of
/// the input graph it replaces (`v` the old vertex, `w` the far end of the
/// re-attached edge).
pub fn truncate_with_darts(g: &Graph) -> Result<(Graph, Vec<(usize, usize)>), GraphError> {
    for v in 0..g.n() {
        if g.degree(v) != 3 {
            return Err(GraphError::NotCubic { vertex: v, degree: g.degree(v) });
        }
    }
    let slot = |v: usize, w: usize| -> usize {
        3 * v + g.neighbors(v).iter().position(|&x| x == w).expect("w adjacent to v")
    };
    let mut pairs = Vec::with_capacity(3 * g.n() + g.m());
    let mut darts = Vec::with_capacity(3 * g.n());
    for v in 0..g.n() {
        pairs.push((3 * v, 3 * v + 1));
        pairs.push((3 * v, 3 * v + 2));
        pairs.push((3 * v + 1, 3 * v + 2));
        darts.extend(g.neighbors(v).iter().map(|&w| (v, w)));
    }
    for &(u, v) in g.edges() {
        pairs.push((slot(u, v), slot(v, u)));
    }
    Ok((Graph::from_edge_list(3 * g.n(), &pairs)?, darts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cycles() {
        assert_eq!(cycle_graph(3).unwrap().m(), 3);
        assert_eq!(cycle_graph(4).unwrap().edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert!(cycle_graph(2).is_err());
    }

    #[test]
    fn petersen_shape() {
        let g = petersen();
        assert_eq!((g.n(), g.m()), (10, 15));
        assert_eq!(g.regular_degree(), Some(3));
        assert_eq!(g.girth(), Some(5));
        assert!(g.validate());
    }

    #[test]
    fn coxeter_shape() {
        let g = coxeter();
        assert_eq!((g.n(), g.m()), (28, 42));
        assert_eq!(g.regular_degree(), Some(3));
        assert_eq!(g.girth(), Some(7));
        assert!(g.is_connected());
    }

    #[test]
    fn circulant_cases() {
        let k5 = circulant(5, &[1, 2]).unwrap();
        assert!(k5.is_complete());
        assert_eq!(circulant(6, &[1]).unwrap(), cycle_graph(6).unwrap());
        let matching = circulant(6, &[3]).unwrap();
        assert_eq!(matching.regular_degree(), Some(1));
        assert!(!matching.is_connected());
        assert!(circulant(6, &[0]).is_err());
        assert!(circulant(6, &[4]).is_err());
    }

    #[test]
    fn cayley_cyclic_is_cycle() {
        let rot = Permutation::rotation(6);
        let c = cayley_graph(std::slice::from_ref(&rot), std::slice::from_ref(&rot), 1_000_000).unwrap();
        assert!(c.graph.is_cycle());
        assert_eq!(c.graph.n(), 6);
    }

    #[test]
    fn cayley_s3_transpositions_is_k33() {
        let t = |a, b| Permutation::transposition(3, a, b);
        let gens = [t(0, 1), t(1, 2)];
        let conn = [t(0, 1), t(1, 2), t(0, 2)];
        let c = cayley_graph(&gens, &conn, 1_000_000).unwrap();
        let g = &c.graph;
        assert_eq!((g.n(), g.m()), (6, 9));
        assert_eq!(g.regular_degree(), Some(3));
        // bipartite by parity, complete between the classes
        let parity: Vec<bool> = c.elements.iter().map(|p| p.is_even()).collect();
        for u in 0..6 {
            for v in 0..6 {
                if u != v {
                    assert_eq!(g.has_edge(u, v), parity[u] != parity[v]);
                }
            }
        }
    }

    #[test]
    fn cayley_over_cap() {
        let gens = [Permutation::transposition(5, 0, 1), Permutation::rotation(5)];
        assert!(matches!(
            cayley_graph(&gens, &gens, 100),
            Err(GraphError::Group(crate::group::GroupError::CapExceeded(100)))
        ));
    }

    #[test]
    fn truncations() {
        let k4 = complete(4).unwrap();
        let t = truncate(&k4).unwrap();
        assert_eq!((t.n(), t.m()), (12, 18));
        assert_eq!(t.regular_degree(), Some(3));
        let tp = truncate(&petersen()).unwrap();
        assert_eq!((tp.n(), tp.m()), (30, 45));
        assert!(tp.is_connected());
        assert!(matches!(
            truncate(&cycle_graph(4).unwrap()),
            Err(GraphError::NotCubic { vertex: 0, degree: 2 })
        ));
    }
}
