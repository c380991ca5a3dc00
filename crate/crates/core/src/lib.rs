//! Longest cycles in vertex-transitive graphs: exact circumference search,
//! connectivity, group actions, and checks of the known lower bounds.

mod bitset;
pub mod bounds;
pub mod connectivity;
pub mod corpus;
pub mod counting;
pub mod cycles;
pub mod graph;
pub mod group;
pub mod hitting;
pub mod oracle;

pub use bounds::{
    analyze, babai_bound_check, combined_bound_check, crossover_n, AnalysisConfig, AnalyzeError, BoundReport,
    Verdict,
};
pub use connectivity::{
    is_k_connected, max_disjoint_paths, menger, min_vertex_separator, vertex_connectivity, ConnectivityError,
    Endpoints, PathSystem, Separator,
};
pub use counting::{EnumeratedGroup, LemmaError};
pub use cycles::{
    circumference, enumerate_longest_cycles, min_pairwise_intersection, Cycle, Listing, LongestCycleResult,
    SolverError,
};
pub use graph::{read_graph, write_graph, Graph, GraphError};
pub use group::{read_group, write_group, GroupAction, GroupError, Permutation, Transitivity};
pub use hitting::{construct_hitting_set, HittingSetCertificate, HittingSetError};
