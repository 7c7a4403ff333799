//! Metric, doubly, and strong resolvability on explicitly labeled graph
//! families.
//!
//! The crate builds cycles C_n, paths P_k, the cylinders C_n□P_k, and the
//! prisms (C_n□P_k)□P_m with a fixed 1-based vertex labeling (layer by layer,
//! copy by copy), decides whether a vertex set resolves / doubly resolves /
//! strong resolves a graph, and computes the minimum sizes of such sets —
//! the metric dimension, the doubly resolving number, and the strong metric
//! dimension — by exact search.
//!
//! Everything is deterministic: predicates report the lexicographically
//! smallest offending vertex pair, searches enumerate candidate sets in
//! (size, lexicographic) order and return the first qualifying set, and the
//! strong metric dimension is computed along two independent routes (the
//! distance-arithmetic predicate and a vertex cover of the mutually-
//! maximally-distant pairs) that are required to agree.
//!
//! ```
//! use prismdim_core::{all_pairs_distances, explicit_cylinder, min_resolving};
//!
//! let cyl = explicit_cylinder(3, 3).unwrap();
//! let d = all_pairs_distances(cyl.graph()).unwrap();
//! let result = min_resolving(cyl.graph(), &d, None).unwrap();
//! assert_eq!(result.value, 2);
//! assert_eq!(result.witness.to_string(), "{x1, x2}");
//! ```

#![forbid(unsafe_code)]

pub mod constructions;
pub mod error;
pub mod graph;
pub mod labels;
pub mod products;
pub mod resolving;
pub mod search;

pub use constructions::{
    counterexample_m, make_a, make_a1, make_b, make_b1, make_c, make_d, make_e, make_e3_1,
    make_e4, make_m, make_n, make_t, ClaimOutcome, ClaimedProperty, FamilyId, TargetGraph,
    WitnessFamily,
};
pub use error::{Error, Result};
pub use graph::{
    all_pairs_distances, build_cycle, build_path, DistanceMatrix, FamilyTag, LabeledGraph,
    VertexId,
};
pub use labels::{
    compact_cylinder_label, compact_prism_label, global_index, parse_label, parse_label_list,
    pretty_cylinder_label, pretty_prism_label, split_global, ParsedLabel,
};
pub use products::{
    cartesian_product, explicit_cylinder, explicit_prism, isomorphic_by_canonical_map,
    CylinderGraph, PrismGraph,
};
pub use resolving::{
    is_doubly_resolving, is_maximally_distant, is_mutually_maximally_distant, is_resolving,
    is_strong_resolving, representation, strong_resolving_graph, DoubleResolvability,
    Representation, Resolvability, StrongResolvability, StrongResolvingGraph, VertexSet,
};
pub use search::{
    default_size_cap, min_doubly_resolving, min_resolving, min_strong_resolving,
    min_vertex_cover_sr, SearchParameter, SearchResult,
};
