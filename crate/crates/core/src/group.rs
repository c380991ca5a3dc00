//! Permutations acting on the right and finitely generated permutation
//! groups.
//!
//! `v^p` is `p.apply(v)`, and `p.compose(q)` is the product `pq` with
//! `v^(pq) = (v^p)^q`.

use std::collections::{HashSet, VecDeque};
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;

/// Default element cap for exhaustive group enumeration.
pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

/// Default vertex limit for [`automorphism_generators`].
pub const DEFAULT_AUTOMORPHISM_LIMIT: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("images do not form a bijection on 0..{0}")]
    NotBijection(usize),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("point {point} outside 0..{degree}")]
    OutOfRange { point: usize, degree: usize },
    #[error("group has more than {0} elements")]
    CapExceeded(usize),
    #[error("a group needs at least one generator")]
    NoGenerators,
    #[error("automorphism search limited to {limit} vertices, graph has {n}; supply generators explicitly")]
    TooLarge { n: usize, limit: usize },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u32).collect() }
    }

    /// `i -> i + 1 (mod n)`.
    pub fn rotation(n: usize) -> Self {
        Permutation { images: (0..n as u32).map(|i| (i + 1) % n as u32).collect() }
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(a, b);
        p
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(GroupError::NotBijection(n));
            }
            seen[x] = true;
        }
        Ok(Permutation { images: images.into_iter().map(|x| x as u32).collect() })
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2]]`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, GroupError> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                let b = cycle[(i + 1) % cycle.len()];
                if a >= n || b >= n {
                    return Err(GroupError::OutOfRange { point: a.max(b), degree: n });
                }
                images[a] = b;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn apply(&self, v: usize) -> Result<usize, GroupError> {
        self.images
            .get(v)
            .map(|&x| x as usize)
            .ok_or(GroupError::OutOfRange { point: v, degree: self.degree() })
    }

    /// Unchecked image, for hot loops where `v < degree` is known.
    #[inline]
    pub(crate) fn image(&self, v: usize) -> usize {
        self.images[v] as usize
    }

    /// The product `self * other`: apply `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, GroupError> {
        if self.degree() != other.degree() {
            return Err(GroupError::DegreeMismatch { expected: self.degree(), found: other.degree() });
        }
        Ok(Permutation { images: self.images.iter().map(|&x| other.images[x as usize]).collect() })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn is_even(&self) -> bool {
        let mut seen = vec![false; self.degree()];
        let mut transpositions = 0;
        for start in 0..self.degree() {
            let mut len: usize = 0;
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                v = self.image(v);
                len += 1;
            }
            transpositions += len.saturating_sub(1);
        }
        transpositions % 2 == 0
    }

    pub fn is_automorphism_of(&self, g: &Graph) -> bool {
        self.automorphism_violation(g).is_none()
    }

    /// First edge whose image is not an edge. Since the map is a bijection on
    /// vertices, no violation means edges map bijectively onto edges.
    fn automorphism_violation(&self, g: &Graph) -> Option<(usize, usize)> {
        g.edges().iter().copied().find(|&(u, v)| !g.has_edge(self.image(u), self.image(v)))
    }
}

/// Outcome of [`GroupAction::is_vertex_transitive`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Transitivity {
    Transitive,
    /// Generator `generator` maps `edge` to a non-edge.
    NotAutomorphism {
        generator: usize,
        edge: (usize, usize),
    },
    /// The orbit of vertex 0 misses `unreached`.
    NotTransitive {
        unreached: usize,
    },
}

impl Transitivity {
    pub fn is_transitive(&self) -> bool {
        matches!(self, Transitivity::Transitive)
    }
}

/// A permutation group given by generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAction {
    degree: usize,
    generators: Vec<Permutation>,
}

impl GroupAction {
    pub fn new(generators: Vec<Permutation>) -> Result<Self, GroupError> {
        let degree = generators.first().ok_or(GroupError::NoGenerators)?.degree();
        if let Some(p) = generators.iter().find(|p| p.degree() != degree) {
            return Err(GroupError::DegreeMismatch { expected: degree, found: p.degree() });
        }
        Ok(GroupAction { degree, generators })
    }

    /// Cyclic group generated by `i -> i + 1 (mod n)`.
    pub fn cyclic(n: usize) -> Self {
        GroupAction { degree: n, generators: vec![Permutation::rotation(n)] }
    }

    pub fn trivial(n: usize) -> Self {
        GroupAction { degree: n, generators: vec![Permutation::identity(n)] }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Orbit of `v`, ascending.
    pub fn orbit(&self, v: usize) -> Result<Vec<usize>, GroupError> {
        if v >= self.degree {
            return Err(GroupError::OutOfRange { point: v, degree: self.degree });
        }
        Ok(orbit_under(&self.generators, self.degree, v))
    }

    /// All group elements, by breadth-first closure from the identity.
    /// Elements appear layer by layer (word length in the generators), and
    /// lexicographically by image vector within a layer.
    pub fn enumerate_elements(&self, cap: usize) -> Result<Vec<Permutation>, GroupError> {
        let identity = Permutation::identity(self.degree);
        let mut seen: HashSet<Permutation> = HashSet::from([identity.clone()]);
        if cap < 1 {
            return Err(GroupError::CapExceeded(cap));
        }
        let mut out = vec![identity];
        let mut layer_start = 0;
        while layer_start < out.len() {
            let layer_end = out.len();
            let mut next = Vec::new();
            for p in &out[layer_start..layer_end] {
                for g in &self.generators {
                    let q = p.compose(g).expect("generators share a degree");
                    if !seen.contains(&q) {
                        if seen.len() >= cap {
                            return Err(GroupError::CapExceeded(cap));
                        }
                        seen.insert(q.clone());
                        next.push(q);
                    }
                }
            }
            next.sort_unstable();
            out.extend(next);
            layer_start = layer_end;
        }
        Ok(out)
    }

    pub fn order(&self, cap: usize) -> Result<usize, GroupError> {
        self.enumerate_elements(cap).map(|e| e.len())
    }

    /// `|G_v|` by direct filtering of the enumerated elements.
    pub fn stabilizer_order(&self, v: usize, cap: usize) -> Result<usize, GroupError> {
        if v >= self.degree {
            return Err(GroupError::OutOfRange { point: v, degree: self.degree });
        }
        Ok(self.enumerate_elements(cap)?.iter().filter(|p| p.image(v) == v).count())
    }

    /// True when every generator is an automorphism of `g` and the orbit of
    /// vertex 0 is all of `V(g)`.
    pub fn is_vertex_transitive(&self, g: &Graph) -> Result<Transitivity, GroupError> {
        if self.degree != g.n() {
            return Err(GroupError::DegreeMismatch { expected: g.n(), found: self.degree });
        }
        for (i, p) in self.generators.iter().enumerate() {
            if let Some(edge) = p.automorphism_violation(g) {
                return Ok(Transitivity::NotAutomorphism { generator: i, edge });
            }
        }
        let orbit = orbit_under(&self.generators, self.degree, 0);
        if orbit.len() < g.n() {
            let unreached = (0..g.n()).find(|v| orbit.binary_search(v).is_err()).unwrap();
            return Ok(Transitivity::NotTransitive { unreached });
        }
        Ok(Transitivity::Transitive)
    }

    /// Image of a vertex set.
    pub fn translate(set: &[usize], p: &Permutation) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&v| p.image(v)).collect();
        out.sort_unstable();
        out
    }
}

fn orbit_under(gens: &[Permutation], degree: usize, v: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    seen[v] = true;
    let mut queue = VecDeque::from([v]);
    let mut out = vec![v];
    while let Some(u) = queue.pop_front() {
        for g in gens {
            let w = g.image(u);
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

/// Generators of the full automorphism group of a small graph.
///
/// Works down a pointwise-stabilizer chain: for level `i` (vertices
/// `0..i` fixed) it looks for one automorphism mapping `i` to each vertex
/// not yet in the orbit of `i` under the generators found so far. The
/// union of these coset representatives generates `Aut(g)`.
pub fn automorphism_generators(g: &Graph, limit: usize) -> Result<GroupAction, GroupError> {
    let n = g.n();
    if n > limit {
        return Err(GroupError::TooLarge { n, limit });
    }
    let mut gens: Vec<Permutation> = Vec::new();
    for level in (0..n).rev() {
        let mut orbit = orbit_under(&gens, n, level);
        let mut in_orbit = vec![false; n];
        for &v in &orbit {
            in_orbit[v] = true;
        }
        for cand in level + 1..n {
            if in_orbit[cand] {
                continue;
            }
            let mut prefix: Vec<(usize, usize)> = (0..level).map(|v| (v, v)).collect();
            prefix.push((level, cand));
            if let Some(p) = extend_to_automorphism(g, &prefix) {
                gens.push(p);
                orbit = orbit_under(&gens, n, level);
                for &v in &orbit {
                    in_orbit[v] = true;
                }
            }
        }
    }
    if gens.is_empty() {
        gens.push(Permutation::identity(n));
    }
    GroupAction::new(gens)
}

/// Backtracking search for an automorphism extending a partial map.
fn extend_to_automorphism(g: &Graph, prefix: &[(usize, usize)]) -> Option<Permutation> {
    let n = g.n();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for &(v, w) in prefix {
        if g.degree(v) != g.degree(w) || used[w] {
            return None;
        }
        image[v] = w;
        used[w] = true;
    }
    for &(v, _) in prefix {
        if !consistent(g, &image, v, image[v], v) {
            return None;
        }
    }
    if search(g, &mut image, &mut used) {
        Permutation::from_images(image).ok()
    } else {
        None
    }
}

/// `v -> w` agrees with every assigned vertex other than `skip`.
fn consistent(g: &Graph, image: &[usize], v: usize, w: usize, skip: usize) -> bool {
    (0..g.n())
        .all(|u| u == skip || u == v || image[u] == usize::MAX || g.has_edge(v, u) == g.has_edge(w, image[u]))
}

fn search(g: &Graph, image: &mut [usize], used: &mut [bool]) -> bool {
    // most-constrained unassigned vertex: most assigned neighbors
    let next = (0..g.n()).filter(|&v| image[v] == usize::MAX).max_by_key(|&v| {
        let assigned = g.neighbors(v).iter().filter(|&&u| image[u] != usize::MAX).count();
        (assigned, std::cmp::Reverse(v))
    });
    let Some(v) = next else { return true };
    let anchor = g.neighbors(v).iter().copied().find(|&u| image[u] != usize::MAX);
    let candidates: Vec<usize> = match anchor {
        Some(u) => g.neighbors(image[u]).to_vec(),
        None => (0..g.n()).collect(),
    };
    for w in candidates {
        if used[w] || g.degree(w) != g.degree(v) || !consistent(g, image, v, w, usize::MAX) {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if search(g, image, used) {
            return true;
        }
        image[v] = usize::MAX;
        used[w] = false;
    }
    false
}

/// Parses the generator file format: `n k` header, then `k` lines of `n`
/// images each. `#` lines are comments.
pub fn read_group(text: &str) -> Result<GroupAction, GroupError> {
    let perr = |line: usize, msg: String| GroupError::Parse { line, msg };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let parse_ints = |line_no: usize, line: &str| -> Result<Vec<usize>, GroupError> {
        line.split_whitespace()
            .map(|t| t.parse().map_err(|_| perr(line_no, format!("not an integer: {t:?}"))))
            .collect()
    };
    let (hline, header) = lines.next().ok_or_else(|| perr(1, "missing `n k` header".into()))?;
    let head = parse_ints(hline, header)?;
    let [n, k] = head[..] else {
        return Err(perr(hline, "header must be `n k`".into()));
    };
    let mut gens = Vec::with_capacity(k);
    for (line_no, line) in lines {
        let images = parse_ints(line_no, line)?;
        if images.len() != n {
            return Err(perr(line_no, format!("expected {n} images, found {}", images.len())));
        }
        let p =
            Permutation::from_images(images).map_err(|_| perr(line_no, "line is not a bijection".into()))?;
        gens.push(p);
    }
    if gens.len() != k {
        return Err(perr(hline, format!("header declares {k} generators, found {}", gens.len())));
    }
    GroupAction::new(gens)
}

pub fn write_group(a: &GroupAction) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", a.degree, a.generators.len()).unwrap();
    for p in &a.generators {
        let line: Vec<String> = p.images.iter().map(|x| x.to_string()).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}
