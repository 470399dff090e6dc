//! Undirected simple graphs with bitset adjacency, and the structural
//! predicates the solver needs: connectivity of induced subsets, components,
//! cut vertices, and BFS distances.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bits::{VertexId, VertexSet, Word};
use crate::error::Error;

/// An undirected simple graph on vertices `0..n`, adjacency stored as one
/// open-neighborhood bitset per vertex. Immutable after construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph<W: Word> {
    n: usize,
    adj: Vec<VertexSet<W>>,
}

impl<W: Word> Graph<W> {
    /// Builds a graph from an edge list. Self-loops and out-of-range
    /// endpoints are rejected; repeated edges are harmless.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::BadFamilyParams("graph order must be at least 1"));
        }
        if n > W::BITS as usize {
            return Err(Error::TooManyVertices { n, cap: W::BITS as usize });
        }
        let mut adj = alloc::vec![VertexSet::empty(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(VertexId(u)));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(VertexId(v)));
            }
            if u == v {
                return Err(Error::BadAdjacency);
            }
            adj[u].insert(VertexId(v));
            adj[v].insert(VertexId(u));
        }
        Ok(Graph { n, adj })
    }

    /// Builds a graph from explicit neighborhoods, checking symmetry and the
    /// absence of self-loops.
    pub fn from_adjacency(adj: Vec<VertexSet<W>>) -> Result<Self, Error> {
        let n = adj.len();
        if n == 0 {
            return Err(Error::BadFamilyParams("graph order must be at least 1"));
        }
        if n > W::BITS as usize {
            return Err(Error::TooManyVertices { n, cap: W::BITS as usize });
        }
        let full = VertexSet::full(n);
        for (u, nb) in adj.iter().enumerate() {
            if !nb.is_subset(full) || nb.contains(VertexId(u)) {
                return Err(Error::BadAdjacency);
            }
            for v in nb.iter() {
                if !adj[v.0].contains(VertexId(u)) {
                    return Err(Error::BadAdjacency);
                }
            }
        }
        Ok(Graph { n, adj })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet<W> {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v.0 {
                    out.push((u, v.0));
                }
            }
        }
        out
    }

    /// Open neighborhood N(v).
    #[inline]
    pub fn neighbors(&self, v: VertexId) -> VertexSet<W> {
        self.adj[v.0]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.0].len()
    }

    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u.0].contains(v)
    }

    /// Closed neighborhood N[v].
    #[inline]
    pub fn closed_neighborhood(&self, v: VertexId) -> VertexSet<W> {
        self.adj[v.0].union(VertexSet::singleton(v))
    }

    /// N[S], the union of closed neighborhoods over S. Empty for empty S.
    pub fn closed_neighborhood_set(&self, s: VertexSet<W>) -> VertexSet<W> {
        let mut out = s;
        for v in s.iter() {
            out = out.union(self.adj[v.0]);
        }
        out
    }

    /// True iff the subgraph induced by `s` is connected. The empty set and
    /// singletons count as connected.
    pub fn is_connected_subset(&self, s: VertexSet<W>) -> bool {
        let start = match s.first() {
            None => return true,
            Some(v) => v,
        };
        let mut reached = VertexSet::singleton(start);
        loop {
            let grown = self.closed_neighborhood_set(reached).intersection(s);
            if grown == reached {
                break;
            }
            reached = grown;
        }
        reached == s
    }

    /// True iff the whole graph is connected.
    pub fn is_connected(&self) -> bool {
        self.is_connected_subset(self.vertices())
    }

    /// Connected components of the subgraph induced by `s`.
    pub fn components_of(&self, s: VertexSet<W>) -> Vec<VertexSet<W>> {
        let mut rest = s;
        let mut comps = Vec::new();
        while let Some(v) = rest.first() {
            let mut reached = VertexSet::singleton(v);
            loop {
                let grown = self.closed_neighborhood_set(reached).intersection(rest);
                if grown == reached {
                    break;
                }
                reached = grown;
            }
            comps.push(reached);
            rest = rest.difference(reached);
        }
        comps
    }

    /// Connected components of G - x. Empty for a one-vertex graph.
    pub fn components_after_removal(&self, x: VertexId) -> Vec<VertexSet<W>> {
        let mut s = self.vertices();
        s.remove(x);
        self.components_of(s)
    }

    /// True iff removing `x` disconnects the graph.
    pub fn is_cut_vertex(&self, x: VertexId) -> bool {
        self.components_after_removal(x).len() >= 2
    }

    /// BFS distances from `x`; `None` marks unreachable vertices.
    pub fn distances_from(&self, x: VertexId) -> Vec<Option<u32>> {
        let mut dist = alloc::vec![None; self.n];
        dist[x.0] = Some(0);
        let mut frontier = VertexSet::singleton(x);
        let mut seen = frontier;
        let mut d = 0u32;
        while !frontier.is_empty() {
            d += 1;
            let next = self.closed_neighborhood_set(frontier).difference(seen);
            for v in next.iter() {
                dist[v.0] = Some(d);
            }
            seen = seen.union(next);
            frontier = next;
        }
        dist
    }

    /// Vertices at the given distances from `x`.
    pub fn vertices_at_distance(&self, x: VertexId, lo: u32, hi: u32) -> VertexSet<W> {
        let mut out = VertexSet::empty();
        for (i, d) in self.distances_from(x).iter().enumerate() {
            if let Some(d) = d {
                if (lo..=hi).contains(d) {
                    out.insert(VertexId(i));
                }
            }
        }
        out
    }

    /// True iff the graph is a tree (connected with n-1 edges).
    pub fn is_tree(&self) -> bool {
        self.edge_count() == self.n - 1 && self.is_connected()
    }

    /// The subgraph induced by `s`, together with the map from new indices
    /// back to the original vertices (in increasing original order).
    pub fn induced_subgraph(&self, s: VertexSet<W>) -> (Graph<W>, Vec<VertexId>) {
        let old_of_new: Vec<VertexId> = s.iter().collect();
        let mut new_of_old = alloc::vec![usize::MAX; self.n];
        for (new, old) in old_of_new.iter().enumerate() {
            new_of_old[old.0] = new;
        }
        let mut adj = alloc::vec![VertexSet::empty(); old_of_new.len()];
        for (new, old) in old_of_new.iter().enumerate() {
            for nb in self.adj[old.0].intersection(s).iter() {
                adj[new].insert(VertexId(new_of_old[nb.0]));
            }
        }
        (Graph { n: old_of_new.len(), adj }, old_of_new)
    }
}

/// A graph whose special vertices are addressable by name.
#[derive(Clone, Debug)]
pub struct LabeledGraph<W: Word> {
    pub graph: Graph<W>,
    labels: BTreeMap<String, VertexId>,
    /// Named vertex sets exposed by some constructions (e.g. an inner cycle).
    sets: BTreeMap<String, VertexSet<W>>,
}

impl<W: Word> LabeledGraph<W> {
    pub fn new(graph: Graph<W>) -> Self {
        LabeledGraph { graph, labels: BTreeMap::new(), sets: BTreeMap::new() }
    }

    pub fn with_labels<I, S>(graph: Graph<W>, labels: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (S, usize)>,
        S: Into<String>,
    {
        let mut lg = LabeledGraph::new(graph);
        for (name, idx) in labels {
            lg.add_label(name.into(), VertexId(idx))?;
        }
        Ok(lg)
    }

    pub fn add_label(&mut self, name: String, v: VertexId) -> Result<(), Error> {
        if v.0 >= self.graph.order() || self.labels.contains_key(&name) {
            return Err(Error::BadLabel);
        }
        self.labels.insert(name, v);
        Ok(())
    }

    pub fn add_set(&mut self, name: String, s: VertexSet<W>) {
        self.sets.insert(name, s);
    }

    /// Looks up a vertex by label, falling back to a bare decimal index.
    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        if let Some(&v) = self.labels.get(name) {
            return Some(v);
        }
        name.parse::<usize>()
            .ok()
            .filter(|&i| i < self.graph.order())
            .map(VertexId)
    }

    pub fn label_of(&self, v: VertexId) -> Option<&str> {
        self.labels
            .iter()
            .find(|(_, &u)| u == v)
            .map(|(name, _)| name.as_str())
    }

    pub fn labels(&self) -> impl Iterator<Item = (&str, VertexId)> {
        self.labels.iter().map(|(s, &v)| (s.as_str(), v))
    }

    pub fn set(&self, name: &str) -> Option<VertexSet<W>> {
        self.sets.get(name).copied()
    }
}
