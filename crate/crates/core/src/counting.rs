//! Exact checks of the double-counting inequality `|B| |C| >= k |V|` for
//! a transitive group action, where `k` is the minimum of `|B ∩ C^g|` over
//! all group elements `g`.

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::group::{GroupAction, GroupError, Permutation, Transitivity};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LemmaError {
    #[error("action is not transitive: {0:?}")]
    NotTransitive(Transitivity),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("vertex {0} outside the action's domain")]
    OutOfRange(usize),
    #[error("hitting set must be nonempty")]
    EmptyHittingSet,
}

/// Image `C^p` of a vertex set, ascending.
pub fn translate(set: &[usize], p: &Permutation) -> Vec<usize> {
    GroupAction::translate(set, p)
}

/// A group with all of its elements listed.
#[derive(Debug, Clone)]
pub struct EnumeratedGroup {
    degree: usize,
    elements: Vec<Permutation>,
}

impl EnumeratedGroup {
    pub fn new(a: &GroupAction, cap: usize) -> Result<Self, GroupError> {
        Ok(EnumeratedGroup { degree: a.degree(), elements: a.enumerate_elements(cap)? })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn is_transitive(&self) -> bool {
        let mut hit = vec![false; self.degree];
        for p in &self.elements {
            hit[p.image(0)] = true;
        }
        hit.iter().all(|&h| h)
    }

    fn mask(&self, set: &[usize]) -> Result<Vec<bool>, LemmaError> {
        let mut m = vec![false; self.degree];
        for &v in set {
            *m.get_mut(v).ok_or(LemmaError::OutOfRange(v))? = true;
        }
        Ok(m)
    }

    /// `|B ∩ C^g|` for every element, in enumeration order.
    pub fn profile(&self, b: &[usize], c: &[usize]) -> Result<TranslateProfile, LemmaError> {
        let in_b = self.mask(b)?;
        let c = dedup(c);
        self.mask(&c)?;
        let sizes: Vec<usize> =
            self.elements.iter().map(|p| c.iter().filter(|&&x| in_b[p.image(x)]).count()).collect();
        let (argmin, &k_min) =
            sizes.iter().enumerate().min_by_key(|&(i, &s)| (s, i)).expect("a group is nonempty");
        Ok(TranslateProfile { sizes, k_min, argmin })
    }

    pub fn verify(&self, b: &[usize], c: &[usize]) -> Result<CountingVerdict, LemmaError> {
        let profile = self.profile(b, c)?;
        Ok(CountingVerdict {
            b_size: dedup(b).len(),
            c_size: dedup(c).len(),
            k: profile.k_min,
            n: self.degree,
        })
    }

    /// Counts `S = {(g, y) : y ∈ B ∩ C^g}` directly and compares it with
    /// `|B| |C| |G_y|`.
    pub fn double_count(&self, b: &[usize], c: &[usize]) -> Result<DoubleCount, LemmaError> {
        let profile = self.profile(b, c)?;
        let s_count: u128 = profile.sizes.iter().map(|&s| s as u128).sum();
        let stabilizer_direct = self.elements.iter().filter(|p| p.image(0) == 0).count();
        Ok(DoubleCount {
            s_count,
            b_size: dedup(b).len(),
            c_size: dedup(c).len(),
            group_order: self.order(),
            n: self.degree,
            stabilizer_order: self.order() / self.degree,
            stabilizer_direct,
            k_min: profile.k_min,
        })
    }
}

fn dedup(set: &[usize]) -> Vec<usize> {
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TranslateProfile {
    pub sizes: Vec<usize>,
    pub k_min: usize,
    /// Index (in enumeration order) of the first element attaining `k_min`.
    pub argmin: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CountingVerdict {
    pub b_size: usize,
    pub c_size: usize,
    pub k: usize,
    pub n: usize,
}

impl CountingVerdict {
    pub fn product(&self) -> u128 {
        self.b_size as u128 * self.c_size as u128
    }

    pub fn required(&self) -> u128 {
        self.k as u128 * self.n as u128
    }

    pub fn holds(&self) -> bool {
        self.product() >= self.required()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DoubleCount {
    pub s_count: u128,
    pub b_size: usize,
    pub c_size: usize,
    pub group_order: usize,
    pub n: usize,
    /// `|G| / n`, via orbit-stabilizer.
    pub stabilizer_order: usize,
    /// `|G_0|` by filtering the elements.
    pub stabilizer_direct: usize,
    pub k_min: usize,
}

impl DoubleCount {
    /// `|S| = |B| |C| |G_y|`, with the stabilizer order cross-checked.
    pub fn identity_holds(&self) -> bool {
        self.stabilizer_order == self.stabilizer_direct
            && self.group_order == self.n * self.stabilizer_order
            && self.s_count == self.b_size as u128 * self.c_size as u128 * self.stabilizer_order as u128
    }

    /// `|S| >= k |G|`.
    pub fn lower_bound_holds(&self) -> bool {
        self.s_count >= self.k_min as u128 * self.group_order as u128
    }
}

pub fn min_translate_intersection(
    a: &GroupAction,
    b: &[usize],
    c: &[usize],
    cap: usize,
) -> Result<TranslateProfile, LemmaError> {
    EnumeratedGroup::new(a, cap)?.profile(b, c)
}

/// Checks the inequality for an action verified transitive on `g`.
pub fn verify_counting_lemma(
    a: &GroupAction,
    g: &Graph,
    b: &[usize],
    c: &[usize],
    cap: usize,
) -> Result<CountingVerdict, LemmaError> {
    let t = a.is_vertex_transitive(g)?;
    if !t.is_transitive() {
        return Err(LemmaError::NotTransitive(t));
    }
    EnumeratedGroup::new(a, cap)?.verify(b, c)
}

pub fn double_count_s(
    a: &GroupAction,
    b: &[usize],
    c: &[usize],
    cap: usize,
) -> Result<DoubleCount, LemmaError> {
    let orbit = a.orbit(0)?;
    if orbit.len() != a.degree() {
        let unreached = (0..a.degree()).find(|v| orbit.binary_search(v).is_err()).unwrap();
        return Err(LemmaError::NotTransitive(Transitivity::NotTransitive { unreached }));
    }
    EnumeratedGroup::new(a, cap)?.double_count(b, c)
}

/// `k n / |B|`: the cycle-length lower bound implied by a set `B` meeting
/// every longest cycle in at least `k` vertices.
pub fn bound_from_hitting_set(b_size: usize, k: usize, n: usize) -> Result<Ratio<u64>, LemmaError> {
    if b_size == 0 {
        return Err(LemmaError::EmptyHittingSet);
    }
    Ok(Ratio::new(k as u64 * n as u64, b_size as u64))
}

/// `t >= bound`, by cross-multiplication.
pub fn meets_bound(t: usize, bound: Ratio<u64>) -> bool {
    t as u128 * *bound.denom() as u128 >= *bound.numer() as u128
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s5_on_pairs() -> GroupAction {
        crate::corpus::petersen_s5_action()
    }

    #[test]
    fn translate_cases() {
        let r = Permutation::rotation(6);
        assert_eq!(translate(&[0, 1], &r), vec![1, 2]);
        assert_eq!(translate(&[5, 2, 3], &Permutation::identity(6)), vec![2, 3, 5]);
        assert_eq!(translate(&[5, 0], &r), vec![0, 1]);
    }

    #[test]
    fn z4_profile() {
        let p = min_translate_intersection(&GroupAction::cyclic(4), &[0, 1, 2], &[0, 1, 2], 100).unwrap();
        assert_eq!(p.sizes, vec![3, 2, 2, 2]);
        assert_eq!((p.k_min, p.argmin), (2, 1));
        let all =
            min_translate_intersection(&GroupAction::cyclic(4), &[0, 1, 2, 3], &[0, 1, 2, 3], 100).unwrap();
        assert_eq!(all.k_min, 4);
        let empty = min_translate_intersection(&GroupAction::cyclic(4), &[], &[0, 1], 100).unwrap();
        assert_eq!(empty.k_min, 0);
    }

    #[test]
    fn z4_verdicts() {
        let c4 = crate::graph::cycle_graph(4).unwrap();
        let z4 = GroupAction::cyclic(4);
        let v = verify_counting_lemma(&z4, &c4, &[0, 1, 2], &[0, 1, 2], 100).unwrap();
        assert_eq!((v.product(), v.required(), v.holds()), (9, 8, true));
        let v = verify_counting_lemma(&z4, &c4, &[0, 1, 2, 3], &[0, 1, 2, 3], 100).unwrap();
        assert_eq!((v.product(), v.required()), (16, 16));
        let v = verify_counting_lemma(&z4, &c4, &[0], &[], 100).unwrap();
        assert!(v.k == 0 && v.holds());
        let p3 = crate::graph::path_graph(4).unwrap();
        assert!(matches!(
            verify_counting_lemma(&z4, &p3, &[0], &[0], 100),
            Err(LemmaError::NotTransitive(_))
        ));
        assert!(matches!(
            verify_counting_lemma(&z4, &c4, &[0], &[0], 2),
            Err(LemmaError::Group(GroupError::CapExceeded(2)))
        ));
    }

    #[test]
    fn double_count_examples() {
        let d = double_count_s(&GroupAction::cyclic(6), &[0], &[0], 100).unwrap();
        assert_eq!((d.s_count, d.stabilizer_order), (1, 1));
        assert!(d.identity_holds() && d.lower_bound_holds());
        let d = double_count_s(&GroupAction::cyclic(4), &[0, 1, 2], &[0, 1, 2], 100).unwrap();
        assert_eq!(d.s_count, 9);
        assert!(d.identity_holds());
        let d = double_count_s(&s5_on_pairs(), &[0, 3, 7], &[1, 2, 5, 9], 1000).unwrap();
        assert_eq!((d.group_order, d.stabilizer_order, d.stabilizer_direct), (120, 12, 12));
        assert_eq!(d.s_count, 3 * 4 * 12);
        assert!(d.identity_holds() && d.lower_bound_holds());
        let swap = GroupAction::new(vec![Permutation::transposition(3, 0, 1)]).unwrap();
        assert!(matches!(double_count_s(&swap, &[0], &[0], 10), Err(LemmaError::NotTransitive(_))));
    }

    #[test]
    fn hitting_set_bound() {
        let n = 10;
        // B = C = a longest cycle of length t: bound k n / t, i.e. t^2 >= k n
        assert_eq!(bound_from_hitting_set(9, 3, n).unwrap(), Ratio::new(30, 9));
        assert!(meets_bound(9, bound_from_hitting_set(9, 3, n).unwrap()));
        assert_eq!(bound_from_hitting_set(1, 1, n).unwrap(), Ratio::from_integer(10));
        let k = 3;
        assert_eq!(bound_from_hitting_set(k * k + k, 1, n).unwrap(), Ratio::new(10, 12));
        assert_eq!(bound_from_hitting_set(0, 1, n), Err(LemmaError::EmptyHittingSet));
        assert!(!meets_bound(3, Ratio::new(10, 3)));
        assert!(meets_bound(4, Ratio::new(10, 3)));
    }
}
