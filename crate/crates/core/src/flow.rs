//! A small Edmonds–Karp max-flow network shared by the connectivity and
//! disjoint-path computations.
//!
//! Augmentation always follows the breadth-first shortest path discovered by
//! scanning arcs in insertion order; with arcs added in ascending vertex
//! order this realises the lowest-id shortest-augmenting-path tie-break.

#[derive(Clone, Debug)]
struct Arc {
    to: usize,
    cap: i64,
    flow: i64,
}

#[derive(Clone, Debug, Default)]
pub(crate) struct FlowNetwork {
    arcs: Vec<Arc>,
    adj: Vec<Vec<usize>>,
}

impl FlowNetwork {
    pub fn new() -> Self {
        FlowNetwork::default()
    }

    pub fn add_node(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn add_nodes(&mut self, count: usize) -> std::ops::Range<usize> {
        let start = self.adj.len();
        for _ in 0..count {
            self.add_node();
        }
        start..self.adj.len()
    }

    /// Adds a directed arc with the given capacity; returns its id.
    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64) -> usize {
        let id = self.arcs.len();
        self.arcs.push(Arc { to, cap, flow: 0 });
        self.arcs.push(Arc { to: from, cap: 0, flow: 0 });
        self.adj[from].push(id);
        self.adj[to].push(id + 1);
        id
    }

    pub fn set_capacity(&mut self, arc: usize, cap: i64) {
        self.arcs[arc].cap = cap;
    }

    fn residual(&self, arc: usize) -> i64 {
        self.arcs[arc].cap - self.arcs[arc].flow
    }

    /// Augments until the flow reaches `limit` (or the maximum, if smaller);
    /// returns the total flow added.
    pub fn augment_to(&mut self, source: usize, sink: usize, limit: i64) -> i64 {
        let mut added = 0;
        while added < limit {
            let Some(parents) = self.bfs(source, sink) else {
                break;
            };
            // unit capacities dominate here; still compute the bottleneck
            let mut bottleneck = limit - added;
            let mut v = sink;
            while v != source {
                let arc = parents[v];
                bottleneck = bottleneck.min(self.residual(arc));
                v = self.arcs[arc ^ 1].to;
            }
            let mut v = sink;
            while v != source {
                let arc = parents[v];
                self.arcs[arc].flow += bottleneck;
                self.arcs[arc ^ 1].flow -= bottleneck;
                v = self.arcs[arc ^ 1].to;
            }
            added += bottleneck;
        }
        added
    }

    pub fn max_flow(&mut self, source: usize, sink: usize) -> i64 {
        self.augment_to(source, sink, i64::MAX)
    }

    fn bfs(&self, source: usize, sink: usize) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        seen[source] = true;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            for &arc in &self.adj[v] {
                let to = self.arcs[arc].to;
                if !seen[to] && self.residual(arc) > 0 {
                    seen[to] = true;
                    parent[to] = arc;
                    if to == sink {
                        return Some(parent);
                    }
                    queue.push_back(to);
                }
            }
        }
        None
    }

    /// Arcs leaving `node` that currently carry positive flow, in insertion
    /// order.
    pub fn loaded_arcs_from(&self, node: usize) -> Vec<usize> {
        self.adj[node]
            .iter()
            .copied()
            .filter(|&a| a % 2 == 0 && self.arcs[a].flow > 0)
            .collect()
    }

    pub fn head(&self, arc: usize) -> usize {
        self.arcs[arc].to
    }

    pub fn drain_unit(&mut self, arc: usize) {
        debug_assert!(self.arcs[arc].flow > 0);
        self.arcs[arc].flow -= 1;
        self.arcs[arc ^ 1].flow += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_max_flow() {
        // diamond: s -> a,b -> t
        let mut net = FlowNetwork::new();
        let ids = net.add_nodes(4);
        let (s, a, b, t) = (ids.start, ids.start + 1, ids.start + 2, ids.start + 3);
        net.add_arc(s, a, 1);
        net.add_arc(s, b, 1);
        net.add_arc(a, t, 1);
        net.add_arc(b, t, 1);
        assert_eq!(net.max_flow(s, t), 2);
    }

    #[test]
    fn respects_limit() {
        let mut net = FlowNetwork::new();
        let ids = net.add_nodes(2);
        let (s, t) = (ids.start, ids.start + 1);
        net.add_arc(s, t, 5);
        assert_eq!(net.augment_to(s, t, 3), 3);
        assert_eq!(net.augment_to(s, t, 10), 2);
    }
}
