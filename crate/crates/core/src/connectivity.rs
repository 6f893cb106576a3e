//! Vertex connectivity and cut-set analysis.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::Graph;
use crate::rational::Rational;

/// Vertex connectivity `κ(G)`.
///
/// Defined as `n − 1` for complete graphs and 0 for disconnected ones;
/// otherwise the minimum over non-adjacent pairs of the vertex-split maximum
/// flow, which by Menger's theorem is the size of a smallest vertex cut.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n <= 1 {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    let mut best = n - 1;
    for s in g.vertices() {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(pair_connectivity(g, s, t, best + 1));
            }
        }
    }
    best
}

/// Max number of internally disjoint `s`–`t` paths, capped at `limit`.
fn pair_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    let n = g.order();
    let mut net = FlowNetwork::new();
    // node 2v = v_in, 2v+1 = v_out
    net.add_nodes(2 * n);
    for v in g.vertices() {
        let cap = if v == s || v == t { n as i64 } else { 1 };
        net.add_arc(2 * v, 2 * v + 1, cap);
    }
    for u in g.vertices() {
        for v in g.neighbors_iter(u) {
            net.add_arc(2 * u + 1, 2 * v, 1);
        }
    }
    net.augment_to(2 * s + 1, 2 * t, limit as i64) as usize
}

/// What removing a vertex set does to the graph.
#[derive(Clone, Debug, Serialize)]
pub struct CutAnalysis {
    pub cut: VertexSet,
    /// Components of `G − S`, ordered by smallest member.
    pub parts: Vec<VertexSet>,
    /// `|S| / c(G − S)`, exact.
    pub ratio: Rational,
    /// True iff removing the set leaves at least two components.
    pub is_cut_set: bool,
}

/// Reports the components of `G − s` and the exact toughness ratio of `s`.
/// `s` must be a proper subset of the vertices.
pub fn cut_analysis(g: &Graph, s: &VertexSet) -> Result<CutAnalysis> {
    g.check_set(s)?;
    if s.len() == g.order() {
        return Err(Error::SetNotProper);
    }
    let parts = g.components_within(&s.complement());
    let ratio = Rational::ratio(s.len(), parts.len());
    Ok(CutAnalysis {
        cut: s.clone(),
        is_cut_set: parts.len() >= 2,
        ratio,
        parts,
    })
}
