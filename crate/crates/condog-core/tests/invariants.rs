//! Property tests for the graph primitives and the solver, using randomly
//! generated connected graphs and brute-force oracles.

use proptest::prelude::*;

use condog_core::{
    connected_domination_number, solve_unmemoized, GameState, Graph, SolveContext, Turn, VertexId,
    VertexSet,
};

/// Connected graph on 2..=8 vertices: a path plus random extra edges.
fn connected_graph() -> impl Strategy<Value = Graph<u64>> {
    (2usize..=8)
        .prop_flat_map(|n| {
            let extra = proptest::collection::vec(any::<bool>(), n * (n - 1) / 2);
            (Just(n), extra)
        })
        .prop_map(|(n, extra)| {
            let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if extra[k] && !edges.contains(&(i, j)) {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
}

fn subset_of(n: usize) -> impl Strategy<Value = VertexSet<u64>> {
    proptest::collection::vec(any::<bool>(), n).prop_map(|bits| {
        bits.iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| VertexId(i))
            .collect()
    })
}

/// Cut vertex oracle: count components of the graph without `x` by plain
/// traversal over explicit adjacency lists.
fn is_cut_vertex_naive(g: &Graph<u64>, x: VertexId) -> bool {
    let n = g.order();
    if n <= 2 {
        return false;
    }
    let rest: Vec<usize> = (0..n).filter(|&i| i != x.0).collect();
    let mut seen = vec![false; n];
    let mut stack = vec![rest[0]];
    seen[rest[0]] = true;
    while let Some(u) = stack.pop() {
        for v in g.neighbors(VertexId(u)).iter() {
            if v != x && !seen[v.0] {
                seen[v.0] = true;
                stack.push(v.0);
            }
        }
    }
    rest.iter().any(|&i| !seen[i])
}

/// Connected domination oracle: smallest subset that dominates everything
/// outside `pred` and induces a connected subgraph.
fn gamma_c_naive(g: &Graph<u64>, pred: VertexSet<u64>) -> usize {
    let n = g.order();
    let full = g.vertices();
    (0u64..1 << n)
        .map(VertexSet::<u64>)
        .filter(|&s| {
            g.closed_neighborhood_set(s).union(pred) == full && g.is_connected_subset(s)
        })
        .map(|s| s.len())
        .min()
        .unwrap()
}

proptest! {
    #[test]
    fn closed_neighborhood_distributes(g in connected_graph(), bits in proptest::collection::vec(any::<bool>(), 8)) {
        let a: VertexSet<u64> = (0..g.order()).filter(|&i| bits[i]).map(VertexId).collect();
        let b = g.vertices().difference(a);
        let lhs = g.closed_neighborhood_set(a.union(b));
        let rhs = g.closed_neighborhood_set(a).union(g.closed_neighborhood_set(b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn components_partition(g in connected_graph(), s_bits in proptest::collection::vec(any::<bool>(), 8)) {
        let s: VertexSet<u64> = (0..g.order()).filter(|&i| s_bits[i]).map(VertexId).collect();
        let comps = g.components_of(s);
        let mut union = VertexSet::empty();
        for c in &comps {
            prop_assert!(!c.is_empty());
            prop_assert!(g.is_connected_subset(*c));
            prop_assert!(union.intersection(*c).is_empty());
            union = union.union(*c);
        }
        prop_assert_eq!(union, s);
    }

    #[test]
    fn cut_vertex_matches_naive(g in connected_graph()) {
        for x in g.vertices().iter() {
            prop_assert_eq!(g.is_cut_vertex(x), is_cut_vertex_naive(&g, x));
        }
    }

    #[test]
    fn gamma_c_matches_brute_force(g in connected_graph()) {
        prop_assert_eq!(
            connected_domination_number(&g, VertexSet::empty()).unwrap(),
            gamma_c_naive(&g, VertexSet::empty())
        );
        let x = VertexSet::singleton(VertexId(0));
        prop_assert_eq!(
            connected_domination_number(&g, x).unwrap(),
            gamma_c_naive(&g, x)
        );
    }

    #[test]
    fn memoized_matches_reference(g in connected_graph(), first in prop_oneof![Just(Turn::Dominator), Just(Turn::Staller)]) {
        prop_assume!(g.order() <= 7);
        for pred in [VertexSet::empty(), VertexSet::singleton(VertexId(0))] {
            let memoized = SolveContext::new(&g, pred).game_value(first).unwrap();
            let reference = solve_unmemoized(&g, pred, GameState::initial(first));
            prop_assert_eq!(memoized, reference);
        }
    }

    #[test]
    fn pruning_and_bounded_memo_are_transparent(g in connected_graph(), first in prop_oneof![Just(Turn::Dominator), Just(Turn::Staller)]) {
        let pred = VertexSet::singleton(VertexId(g.order() - 1));
        let plain = SolveContext::new(&g, pred).game_value(first).unwrap();
        let pruned = SolveContext::new(&g, pred).with_pruning(true).game_value(first).unwrap();
        let bounded = SolveContext::new(&g, pred).with_memo_capacity(16).game_value(first).unwrap();
        prop_assert_eq!(plain, pruned);
        prop_assert_eq!(plain, bounded);
    }

    #[test]
    fn value_depends_only_on_frontier(g in connected_graph(), s in subset_of(8), t in subset_of(8)) {
        // two different played histories with the same closed neighborhood
        // are the same state
        let s = s.intersection(g.vertices());
        let t = t.intersection(g.vertices());
        prop_assume!(!s.is_empty() && !t.is_empty());
        prop_assume!(g.is_connected_subset(s) && g.is_connected_subset(t));
        prop_assume!(g.closed_neighborhood_set(s) == g.closed_neighborhood_set(t));
        let mut ctx = SolveContext::new(&g, VertexSet::empty());
        for turn in [Turn::Dominator, Turn::Staller] {
            let a = ctx.continuation(s, turn).unwrap();
            let b = ctx.continuation(t, turn).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}
