//! Randomized structural properties over small connected graphs: implication
//! and monotonicity laws between the three predicates, metric axioms, and
//! invariance of all three minimum parameters under vertex relabeling.

use proptest::prelude::*;

use prismdim_core::{
    all_pairs_distances, build_cycle, is_doubly_resolving, is_resolving, is_strong_resolving,
    min_doubly_resolving, min_resolving, min_strong_resolving, FamilyTag, LabeledGraph, VertexId,
    VertexSet,
};

/// Random connected graph on 2..=max_n vertices: a random spanning tree
/// (each vertex i > 1 picks a parent below it) plus random extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = LabeledGraph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            let parents: Vec<_> = (2..=n).map(|i| 1..i).collect();
            let extras = proptest::collection::vec(any::<bool>(), n * (n - 1) / 2);
            (Just(n), parents, extras)
        })
        .prop_map(|(n, parents, extras)| {
            let mut edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(offset, &p)| (p, offset + 2))
                .collect();
            let mut pair = 0;
            for u in 1..=n {
                for v in (u + 1)..=n {
                    if extras[pair] && !edges.contains(&(u, v)) {
                        edges.push((u, v));
                    }
                    pair += 1;
                }
            }
            LabeledGraph::from_edges(n, &edges, FamilyTag::Generic).unwrap()
        })
}

/// A graph together with a non-empty subset of its vertices.
fn graph_with_set(max_n: usize) -> impl Strategy<Value = (LabeledGraph, Vec<usize>)> {
    connected_graph(max_n).prop_flat_map(|g| {
        let n = g.vertex_count();
        let subset = proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), 1..=n);
        (Just(g), subset)
    })
}

fn relabel(g: &LabeledGraph, perm: &[usize]) -> LabeledGraph {
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (perm[u.index() - 1], perm[v.index() - 1]))
        .collect();
    LabeledGraph::from_edges(g.vertex_count(), &edges, FamilyTag::Generic).unwrap()
}

proptest! {
    #[test]
    fn distances_satisfy_the_metric_axioms(g in connected_graph(9)) {
        let d = all_pairs_distances(&g).unwrap();
        let vs: Vec<VertexId> = g.vertices().collect();
        for &u in &vs {
            prop_assert_eq!(d.get(u, u), 0);
            for &v in &vs {
                prop_assert_eq!(d.get(u, v), d.get(v, u));
                prop_assert_eq!(d.get(u, v) == 1, g.has_edge(u, v).unwrap());
                prop_assert_eq!(d.get(u, v) == 0, u == v);
                for &w in &vs {
                    prop_assert!(d.get(u, w) <= d.get(u, v) + d.get(v, w));
                }
            }
        }
    }

    #[test]
    fn doubly_resolving_implies_resolving((g, set) in graph_with_set(9)) {
        prop_assume!(set.len() >= 2);
        let d = all_pairs_distances(&g).unwrap();
        let q = VertexSet::from_indices(&set).unwrap();
        if is_doubly_resolving(&q, &d).unwrap().holds() {
            prop_assert!(is_resolving(&q, &d).unwrap().holds());
        }
    }

    #[test]
    fn strong_resolving_implies_resolving((g, set) in graph_with_set(9)) {
        let d = all_pairs_distances(&g).unwrap();
        let q = VertexSet::from_indices(&set).unwrap();
        if is_strong_resolving(&q, &g, &d).unwrap().holds() {
            prop_assert!(is_resolving(&q, &d).unwrap().holds());
        }
    }

    #[test]
    fn all_three_predicates_are_superset_monotone((g, set) in graph_with_set(8)) {
        let d = all_pairs_distances(&g).unwrap();
        let q = VertexSet::from_indices(&set).unwrap();
        let full: Vec<usize> = (1..=g.vertex_count()).collect();
        for extra in full {
            if q.contains(VertexId::new(extra).unwrap()) {
                continue;
            }
            let mut bigger = q.indices();
            bigger.push(extra);
            let q2 = VertexSet::from_indices(&bigger).unwrap();
            if is_resolving(&q, &d).unwrap().holds() {
                prop_assert!(is_resolving(&q2, &d).unwrap().holds());
            }
            if q.len() >= 2 && is_doubly_resolving(&q, &d).unwrap().holds() {
                prop_assert!(is_doubly_resolving(&q2, &d).unwrap().holds());
            }
            if is_strong_resolving(&q, &g, &d).unwrap().holds() {
                prop_assert!(is_strong_resolving(&q2, &g, &d).unwrap().holds());
            }
        }
    }

    #[test]
    fn full_vertex_set_always_qualifies(g in connected_graph(9)) {
        let d = all_pairs_distances(&g).unwrap();
        let q = VertexSet::from_indices(&(1..=g.vertex_count()).collect::<Vec<_>>()).unwrap();
        prop_assert!(is_resolving(&q, &d).unwrap().holds());
        prop_assert!(is_strong_resolving(&q, &g, &d).unwrap().holds());
        if g.vertex_count() >= 2 {
            prop_assert!(is_doubly_resolving(&q, &d).unwrap().holds());
        }
    }

    #[test]
    fn minimum_parameters_are_relabeling_invariant(
        g in connected_graph(7),
        seed in any::<u64>(),
    ) {
        // derive a permutation from the seed deterministically
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (1..=n).collect();
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let h = relabel(&g, &perm);
        let dg = all_pairs_distances(&g).unwrap();
        let dh = all_pairs_distances(&h).unwrap();
        prop_assert_eq!(
            min_resolving(&g, &dg, None).unwrap().value,
            min_resolving(&h, &dh, None).unwrap().value
        );
        prop_assert_eq!(
            min_doubly_resolving(&g, &dg, None).unwrap().value,
            min_doubly_resolving(&h, &dh, None).unwrap().value
        );
        prop_assert_eq!(
            min_strong_resolving(&g, &dg, None).unwrap().value,
            min_strong_resolving(&h, &dh, None).unwrap().value
        );
    }

    #[test]
    fn member_order_never_matters(set in proptest::collection::vec(1usize..=12, 1..6)) {
        // VertexSet normalizes to ascending order, so any input ordering of
        // the same members yields the same set and the same predicate results
        let mut dedup = set.clone();
        dedup.sort_unstable();
        dedup.dedup();
        let forward = VertexSet::from_indices(&dedup).unwrap();
        let mut reversed = dedup.clone();
        reversed.reverse();
        let backward = VertexSet::from_indices(&reversed).unwrap();
        prop_assert_eq!(&forward, &backward);

        let g = build_cycle(12).unwrap();
        let d = all_pairs_distances(&g).unwrap();
        prop_assert_eq!(
            is_resolving(&forward, &d).unwrap(),
            is_resolving(&backward, &d).unwrap()
        );
    }

    #[test]
    fn cycles_are_bipartite_exactly_when_even(n in 3usize..=16) {
        let g = build_cycle(n).unwrap();
        prop_assert_eq!(g.is_bipartite(), n % 2 == 0);
    }
}
