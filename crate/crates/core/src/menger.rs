//! Internally disjoint path systems between two vertex sets.
//!
//! `disjoint_paths` routes `k` paths between `X₁` and `X₂` in a `k`-connected
//! graph so that every path meets each set in exactly one vertex (its
//! endpoint), the paths share no internal vertices, endpoints on a side with
//! at least `k` vertices are pairwise distinct, and a side with fewer than
//! `k` vertices is covered completely (endpoints may repeat there).
//!
//! The construction is a vertex-split maximum flow: internal vertices carry
//! capacity one; a side smaller than `k` has its vertices widened to
//! capacity `k`. Coverage of the small sides is obtained by augmenting in
//! stages — each side is first saturated at capacity one, and since source
//! and sink arcs never lose flow during later augmentations, the coverage
//! persists while the remaining units are routed.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::connectivity::vertex_connectivity;
use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::Graph;
use crate::path::Path;

#[derive(Clone, Debug, Serialize)]
pub struct DisjointPathsResult {
    /// The paths, sorted by vertex sequence.
    pub paths: Vec<Path>,
    /// `(x1_endpoint, x2_endpoint)` per path, in the same order.
    pub endpoints: Vec<(usize, usize)>,
}

const SOURCE: usize = 0;
const SINK: usize = 1;

fn node_in(v: usize) -> usize {
    2 + 2 * v
}

fn node_out(v: usize) -> usize {
    3 + 2 * v
}

struct PathNetwork {
    net: FlowNetwork,
    split_arc: Vec<usize>,
    source_arc: Vec<(usize, usize)>,
    sink_arc: Vec<(usize, usize)>,
}

/// Arcs run source → X₁ vertices → interior → X₂ vertices → sink. Edge arcs
/// into `X₁` and out of `X₂` are omitted, so endpoints can only ever be
/// endpoints: internal disjointness from both sets is structural.
fn build_network(g: &Graph, x1: &VertexSet, x2: &VertexSet) -> PathNetwork {
    let n = g.order();
    let mut net = FlowNetwork::new();
    net.add_nodes(2 + 2 * n);
    let mut split_arc = vec![usize::MAX; n];
    for v in g.vertices() {
        split_arc[v] = net.add_arc(node_in(v), node_out(v), 1);
    }
    let mut source_arc = Vec::new();
    for x in x1.iter() {
        source_arc.push((x, net.add_arc(SOURCE, node_in(x), 1)));
    }
    let mut sink_arc = Vec::new();
    for x in x2.iter() {
        sink_arc.push((x, net.add_arc(node_out(x), SINK, 1)));
    }
    for u in g.vertices() {
        if x2.contains(u) {
            continue;
        }
        for w in g.neighbors_iter(u) {
            if !x1.contains(w) {
                net.add_arc(node_out(u), node_in(w), 1);
            }
        }
    }
    PathNetwork {
        net,
        split_arc,
        source_arc,
        sink_arc,
    }
}

fn validate_sets(g: &Graph, x1: &VertexSet, x2: &VertexSet) -> Result<()> {
    g.check_set(x1)?;
    g.check_set(x2)?;
    if x1.is_empty() || x2.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    if x1 == x2 {
        return Err(Error::SetsEqual);
    }
    Ok(())
}

/// Routes `k` internally disjoint `X₁`–`X₂` paths in a `k`-connected graph.
pub fn disjoint_paths(
    g: &Graph,
    x1: &VertexSet,
    x2: &VertexSet,
    k: usize,
) -> Result<DisjointPathsResult> {
    validate_sets(g, x1, x2)?;
    if k == 0 {
        return Err(Error::FlowDeficit { k: 0, found: 0 });
    }
    let kappa = vertex_connectivity(g);
    if kappa < k {
        return Err(Error::NotKConnected { k, kappa });
    }

    let mut pn = build_network(g, x1, x2);
    let shared = x1.intersection(x2);
    let k64 = k as i64;

    // Saturate with every endpoint at capacity one first: the flow value
    // then equals the number of distinct endpoints on each small side, so
    // the smallest side gets covered completely. Widening proceeds from the
    // smaller side to the larger; while a side is still at capacity one,
    // augmentation is forced through its uncovered vertices, and source and
    // sink arcs never lose flow in later augmentations, so coverage
    // persists.
    let mut total = pn.net.augment_to(SOURCE, SINK, k.min(x1.len()).min(x2.len()) as i64);

    let mut sides = [(x1.len(), &pn.source_arc), (x2.len(), &pn.sink_arc)];
    sides.sort_by_key(|&(size, _)| size);
    let widen = |net: &mut FlowNetwork, arcs: &[(usize, usize)]| {
        for &(x, arc) in arcs {
            // vertices in both sets stay at one trivial path
            if !shared.contains(x) {
                net.set_capacity(arc, k64);
                net.set_capacity(pn.split_arc[x], k64);
            }
        }
    };
    let (small, large) = (sides[0], sides[1]);
    if total < k64 && small.0 < k {
        widen(&mut pn.net, small.1);
        let next = if large.0 < k { k.min(large.0) as i64 } else { k64 };
        total += pn.net.augment_to(SOURCE, SINK, next - total);
    }
    if total < k64 && large.0 < k {
        widen(&mut pn.net, large.1);
        total += pn.net.augment_to(SOURCE, SINK, k64 - total);
    }

    if total < k64 {
        return Err(Error::FlowDeficit {
            k,
            found: total as usize,
        });
    }

    let mut paths = decompose(g, &mut pn.net, k)?;
    paths.sort_by(|a, b| a.vertices().cmp(b.vertices()));
    let endpoints = paths.iter().map(|p| (p.first(), p.last())).collect();
    Ok(DisjointPathsResult { paths, endpoints })
}

/// The maximum number of internally disjoint `X₁`–`X₂` paths, with endpoint
/// reuse unrestricted. Equals the size of a smallest mixed separator (direct
/// edges plus internal vertices).
pub fn max_disjoint_paths(g: &Graph, x1: &VertexSet, x2: &VertexSet) -> Result<usize> {
    validate_sets(g, x1, x2)?;
    let wide = (g.order() * g.order() + 1) as i64;
    let mut pn = build_network(g, x1, x2);
    for v in g.vertices() {
        if x1.contains(v) || x2.contains(v) {
            pn.net.set_capacity(pn.split_arc[v], wide);
        }
    }
    for &(_, arc) in pn.source_arc.iter().chain(&pn.sink_arc) {
        pn.net.set_capacity(arc, wide);
    }
    Ok(pn.net.max_flow(SOURCE, SINK) as usize)
}

/// Extracts `k` unit paths from the flow, lowest-id arcs first; flow cycles
/// left by augmentation cancellations are excised on the way.
fn decompose(g: &Graph, net: &mut FlowNetwork, k: usize) -> Result<Vec<Path>> {
    let mut paths = Vec::with_capacity(k);
    for _ in 0..k {
        let mut nodes = vec![SOURCE];
        loop {
            let here = *nodes.last().expect("nonempty");
            if here == SINK {
                break;
            }
            let arc = *net
                .loaded_arcs_from(here)
                .first()
                .expect("flow conservation provides an onward arc");
            net.drain_unit(arc);
            let next = net.head(arc);
            if let Some(pos) = nodes.iter().position(|&x| x == next) {
                // drained a circulation; resume from its first visit
                nodes.truncate(pos + 1);
            } else {
                nodes.push(next);
            }
        }
        let vertices: Vec<usize> = nodes
            .iter()
            .filter(|&&x| x >= 2 && (x - 2) % 2 == 0)
            .map(|&x| (x - 2) / 2)
            .collect();
        paths.push(Path::new(g, vertices)?);
    }
    Ok(paths)
}

/// Two paths from `u` to distinct vertices of `d`, sharing only `u` and
/// internally disjoint from `d`.
pub fn two_paths_to_component(g: &Graph, u: usize, d: &VertexSet) -> Result<(Path, Path)> {
    g.check_vertex(u)?;
    g.check_set(d)?;
    if d.contains(u) {
        return Err(Error::VertexInsideSet(u));
    }
    if d.len() < 2 {
        return Err(Error::TooFewVertices {
            need: 2,
            have: d.len(),
        });
    }
    let x1 = VertexSet::singleton(g.order(), u)?;
    let result = disjoint_paths(g, &x1, d, 2)?;
    let mut it = result.paths.into_iter();
    let p1 = it.next().expect("two paths");
    let p2 = it.next().expect("two paths");
    Ok((p1, p2))
}
