//! Simple undirected graphs with word-packed symmetric adjacency.
//!
//! Graphs are immutable once built; every analysis in this crate takes a
//! shared reference, so values can be handed to parallel workers freely.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            rows: vec![0; n.max(1) * words],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() == self.n {
            Ok(())
        } else {
            Err(Error::UniverseMismatch {
                set: s.universe(),
                order: self.n,
            })
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.vertices().map(|v| self.degree(v)).min()
    }

    pub fn edge_count(&self) -> usize {
        let total: usize = self.vertices().map(|v| self.degree(v)).sum();
        total / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices()
            .flat_map(move |u| self.neighbors_iter(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn neighbors_iter(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.n, self.row(v).to_vec())
    }

    /// `N(S)`: all vertices outside `s` adjacent to something in `s`.
    pub fn neighborhood_of_set(&self, s: &VertexSet) -> VertexSet {
        let mut acc = VertexSet::empty(self.n);
        for v in s.iter() {
            for (w, &r) in acc.words_mut().iter_mut().zip(self.row(v)) {
                *w |= r;
            }
        }
        acc.difference(s)
    }

    pub fn is_complete(&self) -> bool {
        self.n < 2 || self.vertices().all(|v| self.degree(v) == self.n - 1)
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&VertexSet::full(self.n))
    }

    /// Connected components of the subgraph induced on `within`, ordered by
    /// smallest member.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut remaining = within.clone();
        let mut out = Vec::new();
        while let Some(start) = remaining.smallest() {
            let mut comp = VertexSet::empty(self.n);
            comp.insert(start);
            remaining.remove(start);
            let mut frontier = vec![start];
            while let Some(v) = frontier.pop() {
                // neighbors of v still remaining
                let mut fresh = Vec::new();
                for (i, (&r, &m)) in self.row(v).iter().zip(remaining.words()).enumerate() {
                    let mut hits = r & m;
                    while hits != 0 {
                        let b = hits.trailing_zeros() as usize;
                        hits &= hits - 1;
                        fresh.push(i * 64 + b);
                    }
                }
                for u in fresh {
                    remaining.remove(u);
                    comp.insert(u);
                    frontier.push(u);
                }
            }
            out.push(comp);
        }
        out
    }

    /// Number of components of `G - removed`.
    pub fn component_count_without(&self, removed: &VertexSet) -> usize {
        self.components_within(&removed.complement()).len()
    }

    /// The subgraph induced on `s`, plus the map from new ids to original
    /// vertices (ascending).
    pub fn induced(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(s)?;
        let map = s.to_vec();
        let mut g = Graph::empty(map.len());
        for (a, &u) in map.iter().enumerate() {
            for (b, &v) in map.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(a, b);
                }
            }
        }
        Ok((g, map))
    }

    /// `G - s` as an induced subgraph with its index map.
    pub fn without(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(s)?;
        self.induced(&s.complement())
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        g
    }

    /// True if the graph contains any cycle.
    pub fn has_cycle(&self) -> bool {
        let comps = self.components();
        let forest_edges = self.n - comps.len();
        self.edge_count() > forest_edges
    }

    /// Breadth-first shortest path, neighbors explored in ascending id order
    /// so the result is reproducible. Both endpoints must lie in `allowed`.
    pub fn shortest_path_within(
        &self,
        from: usize,
        to: usize,
        allowed: &VertexSet,
    ) -> Option<Vec<usize>> {
        if !allowed.contains(from) || !allowed.contains(to) {
            return None;
        }
        if from == to {
            return Some(vec![from]);
        }
        let mut parent = vec![usize::MAX; self.n];
        let mut seen = VertexSet::empty(self.n);
        seen.insert(from);
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(from);
        while let Some(v) = queue.pop_front() {
            for u in self.neighbors_iter(v) {
                if allowed.contains(u) && !seen.contains(u) {
                    seen.insert(u);
                    parent[u] = v;
                    if u == to {
                        let mut path = vec![to];
                        let mut cur = to;
                        while cur != from {
                            cur = parent[cur];
                            path.push(cur);
                        }
                        path.reverse();
                        return Some(path);
                    }
                    queue.push_back(u);
                }
            }
        }
        None
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, Family, Pattern};

    #[test]
    fn construction_and_queries() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(g.has_edge(0, 1));
        assert!(g.has_edge(1, 0));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.degree(0), 2);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, order: 3 })
        ));
        assert!(matches!(Graph::from_edges(3, &[(1, 1)]), Err(Error::SelfLoop(1))));
    }

    #[test]
    fn components_of_pattern() {
        let g = Pattern::K2U3K1.graph();
        let comps = g.components();
        let sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![2, 1, 1, 1]);
        assert_eq!(generate(&Family::Complete(5)).unwrap().components().len(), 1);
    }

    #[test]
    fn components_of_disjoint_cycles() {
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
        edges.extend([(4, 5), (5, 6), (6, 7), (7, 4)]);
        let g = Graph::from_edges(8, &edges).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 4));
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = generate(&Family::Cycle(5)).unwrap();
        let s = VertexSet::from_members(5, [0, 1, 2]).unwrap();
        let (h, map) = c5.induced(&s).unwrap();
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);

        let (e, _) = c5.induced(&VertexSet::empty(5)).unwrap();
        assert_eq!(e.order(), 0);

        let petersen = generate(&Family::Petersen).unwrap();
        let outer = VertexSet::from_members(10, 0..5).unwrap();
        let (ring, _) = petersen.induced(&outer).unwrap();
        assert_eq!(ring.edge_count(), 5);
        assert!(ring.vertices().all(|v| ring.degree(v) == 2));
    }

    #[test]
    fn induced_on_everything_is_identity() {
        let petersen = generate(&Family::Petersen).unwrap();
        let (same, map) = petersen.induced(&VertexSet::full(10)).unwrap();
        assert_eq!(map, (0..10).collect::<Vec<_>>());
        assert_eq!(same, petersen);
    }

    #[test]
    fn has_cycle_detection() {
        let tree = Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert!(!tree.has_cycle());
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(g.has_cycle());
    }

    #[test]
    fn shortest_path_deterministic() {
        let g = generate(&Family::Cycle(6)).unwrap();
        let all = VertexSet::full(6);
        assert_eq!(g.shortest_path_within(0, 3, &all).unwrap(), vec![0, 1, 2, 3]);
        let restricted = VertexSet::from_members(6, [0, 3, 4, 5]).unwrap();
        assert_eq!(g.shortest_path_within(0, 3, &restricted).unwrap(), vec![0, 5, 4, 3]);
    }
}
