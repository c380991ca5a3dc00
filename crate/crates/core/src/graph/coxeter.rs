//! Fixed adjacency table for the Coxeter graph.
//!
//! Derivation: take four 7-element vertex classes over Z7,
//! `a_i = i`, `b_i = 7 + i`, `c_i = 14 + i`, `d_i = 21 + i`. Join
//! `a_i ~ a_{i+1}`, `b_i ~ b_{i+2}`, `c_i ~ c_{i+3}` (three 7-cycles with
//! steps 1, 2, 3) and `d_i ~ a_i`, `d_i ~ b_i`, `d_i ~ c_i`. The result has
//! 28 vertices and 42 edges, is cubic, and has girth 7. The table below is
//! that edge set normalized to `u < v` and sorted; `tests::table_matches_z7_construction`
//! rebuilds it from the rule above.

pub(crate) const COXETER_N: usize = 28;

#[rustfmt::skip]
pub(crate) const COXETER_EDGES: [(usize, usize); 42] = [
    (0, 1), (0, 6), (0, 21), (1, 2), (1, 22), (2, 3), (2, 23),
    (3, 4), (3, 24), (4, 5), (4, 25), (5, 6), (5, 26), (6, 27),
    (7, 9), (7, 12), (7, 21), (8, 10), (8, 13), (8, 22), (9, 11),
    (9, 23), (10, 12), (10, 24), (11, 13), (11, 25), (12, 26), (13, 27),
    (14, 17), (14, 18), (14, 21), (15, 18), (15, 19), (15, 22), (16, 19),
    (16, 20), (16, 23), (17, 20), (17, 24), (18, 25), (19, 26), (20, 27),
];
