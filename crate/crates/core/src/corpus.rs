//! Named vertex-transitive graphs with transitive group actions attached.

use std::collections::HashMap;

use crate::graph::{
    cayley_graph, circulant, complete, coxeter, cycle_graph, petersen, petersen_labels, truncate_with_darts,
    Graph, GraphError,
};
use crate::group::{automorphism_generators, GroupAction, GroupError, Permutation};

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub family: &'static str,
    pub graph: Graph,
    pub action: GroupAction,
}

/// `S5` acting on the ten 2-subsets of `{0..4}`, labeled as in
/// [`petersen_labels`]. Generated by `(0 1)` and `(0 1 2 3 4)`.
pub fn petersen_s5_action() -> GroupAction {
    let labels = petersen_labels();
    let index: HashMap<(usize, usize), usize> = labels.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let induced = |f: &dyn Fn(usize) -> usize| {
        let images = labels
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (f(a), f(b));
                index[&(x.min(y), x.max(y))]
            })
            .collect();
        Permutation::from_images(images).expect("induced map is a bijection")
    };
    let swap = induced(&|x| match x {
        0 => 1,
        1 => 0,
        x => x,
    });
    let rotate = induced(&|x| (x + 1) % 5);
    GroupAction::new(vec![swap, rotate]).expect("same degree")
}

/// Lifts an action on a cubic graph to its truncation: each new vertex is
/// a dart `(v, w)` and goes to `(v^p, w^p)`.
pub fn lift_to_truncation(g: &Graph, a: &GroupAction) -> Result<(Graph, GroupAction), GraphError> {
    let (t, darts) = truncate_with_darts(g)?;
    let index: HashMap<(usize, usize), usize> = darts.iter().enumerate().map(|(i, &d)| (d, i)).collect();
    let mut gens = Vec::new();
    for p in a.generators() {
        if !p.is_automorphism_of(g) {
            return Err(GraphError::BadParameter("generator is not an automorphism".into()));
        }
        let images = darts.iter().map(|&(v, w)| index[&(p.image(v), p.image(w))]).collect();
        gens.push(Permutation::from_images(images).map_err(GraphError::Group)?);
    }
    let action = if gens.is_empty() { GroupAction::trivial(t.n()) } else { GroupAction::new(gens)? };
    Ok((t, action))
}

fn entry(name: impl Into<String>, family: &'static str, graph: Graph, action: GroupAction) -> CorpusEntry {
    CorpusEntry { name: name.into(), family, graph, action }
}

fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
    Permutation::from_cycles(n, cycles).expect("valid cycle notation")
}

/// Circulant parameters in the corpus: connected, order at most 16.
pub const CIRCULANTS: &[(usize, &[usize])] = &[
    (6, &[1, 2]),
    (7, &[1, 2]),
    (7, &[1, 3]),
    (8, &[1, 2]),
    (8, &[1, 4]),
    (8, &[1, 3]),
    (9, &[1, 3]),
    (9, &[1, 2]),
    (10, &[1, 5]),
    (10, &[1, 2]),
    (10, &[2, 5]),
    (11, &[1, 3]),
    (12, &[1, 6]),
    (12, &[1, 5]),
    (12, &[1, 4]),
    (12, &[3, 4]),
    (13, &[1, 5]),
    (14, &[1, 7]),
    (14, &[1, 4]),
    (15, &[1, 5]),
    (16, &[1, 8]),
    (16, &[2, 8, 1]),
    (16, &[1, 4]),
];

fn cayley_entries() -> Result<Vec<CorpusEntry>, GraphError> {
    let cap = 1000;
    let mut out = Vec::new();

    // S3 with all three transpositions: K3,3
    let t01 = cyc(3, &[&[0, 1]]);
    let t12 = cyc(3, &[&[1, 2]]);
    let t02 = cyc(3, &[&[0, 2]]);
    let c = cayley_graph(&[t01.clone(), t12.clone()], &[t01, t12, t02], cap)?;
    out.push(entry("cayley_s3_transpositions", "cayley", c.graph, c.action));

    // S4 with adjacent transpositions: the permutohedron, 24 vertices
    let s: Vec<Permutation> = (0..3).map(|i| cyc(4, &[&[i, i + 1]])).collect();
    let c = cayley_graph(&s, &s, cap)?;
    out.push(entry("cayley_s4_adjacent", "cayley", c.graph, c.action));

    // A4 with (0 1 2) and (0 1)(2 3): truncated tetrahedron
    let a = cyc(4, &[&[0, 1, 2]]);
    let b = cyc(4, &[&[0, 1], &[2, 3]]);
    let c = cayley_graph(&[a.clone(), b.clone()], &[a, b], cap)?;
    out.push(entry("cayley_a4", "cayley", c.graph, c.action));

    // D6 (order 12) acting on a hexagon, rotation and reflection
    let r = Permutation::rotation(6);
    let f = cyc(6, &[&[1, 5], &[2, 4]]);
    let c = cayley_graph(&[r.clone(), f.clone()], &[r, f], cap)?;
    out.push(entry("cayley_d6", "cayley", c.graph, c.action));

    // Z2^3 with its standard basis: the 3-cube
    let e: Vec<Permutation> = (0..3).map(|i| cyc(6, &[&[2 * i, 2 * i + 1]])).collect();
    let c = cayley_graph(&e, &e, cap)?;
    out.push(entry("cayley_z2_cubed", "cayley", c.graph, c.action));

    // Q8 acting regularly on itself, generated by i and j
    let qi = cyc(8, &[&[0, 2, 1, 3], &[4, 7, 5, 6]]);
    let qj = cyc(8, &[&[0, 4, 1, 5], &[2, 6, 3, 7]]);
    let c = cayley_graph(&[qi.clone(), qj.clone()], &[qi, qj], cap)?;
    out.push(entry("cayley_q8", "cayley", c.graph, c.action));
    Ok(out)
}

/// The built-in corpus, in a fixed order.
pub fn corpus() -> Result<Vec<CorpusEntry>, GraphError> {
    let mut out = Vec::new();
    for n in 3..=12 {
        out.push(entry(format!("cycle_{n}"), "cycle", cycle_graph(n)?, GroupAction::cyclic(n)));
    }
    out.push(entry("complete_4", "complete", complete(4)?, GroupAction::cyclic(4)));
    out.push(entry("complete_5", "complete", complete(5)?, GroupAction::cyclic(5)));
    out.push(entry("k33", "complete_bipartite", circulant(6, &[1, 3])?, GroupAction::cyclic(6)));
    for &(n, offsets) in CIRCULANTS {
        let name =
            format!("circulant_{n}_{}", offsets.iter().map(usize::to_string).collect::<Vec<_>>().join("_"));
        out.push(entry(name, "circulant", circulant(n, offsets)?, GroupAction::cyclic(n)));
    }
    out.push(entry("petersen", "petersen", petersen(), petersen_s5_action()));
    let (t, a) = lift_to_truncation(&petersen(), &petersen_s5_action())?;
    out.push(entry("truncated_petersen", "truncation", t, a));
    let k4 = complete(4)?;
    let k4_aut = automorphism_generators(&k4, 4)?;
    let (t, a) = lift_to_truncation(&k4, &k4_aut)?;
    out.push(entry("truncated_tetrahedron", "truncation", t, a));
    let cox = coxeter();
    out.push(entry("coxeter", "coxeter", cox.clone(), coxeter_action(&cox)?));
    out.extend(cayley_entries()?);
    Ok(out)
}

/// Automorphism group of the Coxeter graph, found by search.
pub fn coxeter_action(g: &Graph) -> Result<GroupAction, GroupError> {
    automorphism_generators(g, g.n())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Transitivity;

    #[test]
    fn s5_action_on_petersen() {
        let a = petersen_s5_action();
        assert_eq!(a.is_vertex_transitive(&petersen()).unwrap(), Transitivity::Transitive);
        assert_eq!(a.order(1000).unwrap(), 120);
    }

    #[test]
    fn truncation_lift() {
        let (t, a) = lift_to_truncation(&petersen(), &petersen_s5_action()).unwrap();
        assert_eq!((t.n(), t.m()), (30, 45));
        assert_eq!(a.is_vertex_transitive(&t).unwrap(), Transitivity::Transitive);
        assert_eq!(a.order(1000).unwrap(), 120);
    }

    #[test]
    fn corpus_is_transitive() {
        let entries = corpus().unwrap();
        let mut names: Vec<&str> = entries.iter().map(|e| e.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), entries.len());
        for e in &entries {
            assert!(e.graph.is_connected(), "{}", e.name);
            assert_eq!(
                e.action.is_vertex_transitive(&e.graph).unwrap(),
                Transitivity::Transitive,
                "{}",
                e.name
            );
        }
    }

    #[test]
    fn cayley_shapes() {
        let entries = cayley_entries().unwrap();
        let shape: Vec<(usize, usize)> = entries.iter().map(|e| (e.graph.n(), e.graph.m())).collect();
        assert_eq!(shape, vec![(6, 9), (24, 36), (12, 18), (12, 18), (8, 12), (8, 16)]);
    }
}
