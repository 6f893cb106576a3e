//! Induced-subgraph pattern detection.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// An injective map from pattern vertices into a host graph such that
/// adjacency is preserved in both directions (induced, not merely subgraph).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatternEmbedding {
    mapping: Vec<usize>,
}

impl PatternEmbedding {
    /// `mapping[p]` is the host vertex carrying pattern vertex `p`.
    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    /// Re-checks the induced condition; returned embeddings always satisfy it.
    pub fn verify(&self, pattern: &Graph, host: &Graph) -> bool {
        if self.mapping.len() != pattern.order() {
            return false;
        }
        let mut seen = VertexSet::empty(host.order());
        for &h in &self.mapping {
            if h >= host.order() || seen.contains(h) {
                return false;
            }
            seen.insert(h);
        }
        for a in 0..pattern.order() {
            for b in a + 1..pattern.order() {
                if pattern.has_edge(a, b) != host.has_edge(self.mapping[a], self.mapping[b]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Finds an induced copy of `pattern` in `host`.
///
/// Deterministic search order: pattern vertices by descending degree (ties by
/// ascending id), host candidates by ascending id; the first embedding found
/// is returned. `None` means no vertex subset of the host induces the
/// pattern.
pub fn find_induced(pattern: &Graph, host: &Graph) -> Option<PatternEmbedding> {
    let p = pattern.order();
    if p > host.order() {
        return None;
    }
    if p == 0 {
        return Some(PatternEmbedding { mapping: Vec::new() });
    }
    let mut order: Vec<usize> = (0..p).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(pattern.degree(v)));
    let mut mapping = vec![usize::MAX; p];
    let mut used = VertexSet::empty(host.order());
    if assign(pattern, host, &order, 0, &mut mapping, &mut used) {
        Some(PatternEmbedding { mapping })
    } else {
        None
    }
}

fn assign(
    pattern: &Graph,
    host: &Graph,
    order: &[usize],
    depth: usize,
    mapping: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let pv = order[depth];
    'candidates: for hv in host.vertices() {
        if used.contains(hv) {
            continue;
        }
        for &placed in &order[..depth] {
            if pattern.has_edge(pv, placed) != host.has_edge(hv, mapping[placed]) {
                continue 'candidates;
            }
        }
        mapping[pv] = hv;
        used.insert(hv);
        if assign(pattern, host, order, depth + 1, mapping, used) {
            return true;
        }
        used.remove(hv);
        mapping[pv] = usize::MAX;
    }
    false
}

/// True iff `host` contains no induced copy of `pattern`.
pub fn is_free(host: &Graph, pattern: &Graph) -> bool {
    find_induced(pattern, host).is_none()
}
