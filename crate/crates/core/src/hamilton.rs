//! Exact hamiltonicity, hamiltonian paths between endpoints, and exact
//! longest cycles.
//!
//! All searches are exhaustive backtracking with sound pruning only, so a
//! positive answer always comes with a validated cycle or path and a negative
//! answer is a proof of absence. Exactness is the contract at any order; the
//! CLI warns (but does not refuse) beyond the documented comfort sizes.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::path::{OrientedCycle, Path};

/// Finds a hamiltonian cycle, or proves none exists.
///
/// Backtracking from vertex 0 extending to the lowest-id neighbor first.
/// Prunes a branch when an unvisited vertex no longer has two usable
/// connections or when the unvisited region is unreachable.
pub fn hamiltonian_cycle(g: &Graph) -> Option<OrientedCycle> {
    let n = g.order();
    if n < 3 || !g.is_connected() || g.min_degree().unwrap_or(0) < 2 {
        return None;
    }
    let mut visited = VertexSet::empty(n);
    visited.insert(0);
    let mut path = vec![0];
    if extend_cycle(g, &mut path, &mut visited) {
        Some(OrientedCycle::new(g, path).expect("search produces valid cycles"))
    } else {
        None
    }
}

fn extend_cycle(g: &Graph, path: &mut Vec<usize>, visited: &mut VertexSet) -> bool {
    let n = g.order();
    let current = *path.last().expect("path nonempty");
    if path.len() == n {
        return g.has_edge(current, 0);
    }
    if !cycle_prune_ok(g, path, visited) {
        return false;
    }
    for w in g.neighbors_iter(current) {
        if !visited.contains(w) {
            visited.insert(w);
            path.push(w);
            if extend_cycle(g, path, visited) {
                return true;
            }
            path.pop();
            visited.remove(w);
        }
    }
    false
}

/// Necessary conditions for a partial cycle through `path` to complete:
/// every unvisited vertex keeps two connections into the unfinished part,
/// and the unvisited region is reachable from the current endpoint.
fn cycle_prune_ok(g: &Graph, path: &[usize], visited: &VertexSet) -> bool {
    let current = *path.last().expect("nonempty");
    let start = path[0];
    let unvisited = visited.complement();
    for u in unvisited.iter() {
        let mut usable = g.neighbors(u).intersection(&unvisited).len();
        if g.has_edge(u, current) {
            usable += 1;
        }
        if g.has_edge(u, start) {
            usable += 1;
        }
        if usable < 2 {
            return false;
        }
    }
    let reached = reachable_through(g, current, &unvisited);
    reached.len() == unvisited.len()
}

/// Vertices of `allowed` reachable from `from` through `allowed` only.
fn reachable_through(g: &Graph, from: usize, allowed: &VertexSet) -> VertexSet {
    let mut reached = VertexSet::empty(g.order());
    let mut frontier = vec![from];
    while let Some(v) = frontier.pop() {
        for (i, (&r, &m)) in g.row(v).iter().zip(allowed.words()).enumerate() {
            let mut hits = r & m & !reached.words()[i];
            while hits != 0 {
                let b = hits.trailing_zeros() as usize;
                hits &= hits - 1;
                let u = i * 64 + b;
                reached.insert(u);
                frontier.push(u);
            }
        }
    }
    reached
}

/// Finds a hamiltonian path from `u` to `v`, or proves none exists.
pub fn hamiltonian_path_between(g: &Graph, u: usize, v: usize) -> Result<Option<Path>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::IdenticalEndpoints);
    }
    if !g.is_connected() {
        return Ok(None);
    }
    let mut visited = VertexSet::empty(g.order());
    visited.insert(u);
    let mut path = vec![u];
    if extend_path(g, v, &mut path, &mut visited) {
        Ok(Some(Path::new(g, path).expect("search produces valid paths")))
    } else {
        Ok(None)
    }
}

fn extend_path(g: &Graph, target: usize, path: &mut Vec<usize>, visited: &mut VertexSet) -> bool {
    let n = g.order();
    let current = *path.last().expect("nonempty");
    if path.len() == n {
        return current == target;
    }
    if !path_prune_ok(g, target, path, visited) {
        return false;
    }
    for w in g.neighbors_iter(current) {
        if visited.contains(w) || (w == target && path.len() + 1 < n) {
            continue;
        }
        visited.insert(w);
        path.push(w);
        if extend_path(g, target, path, visited) {
            return true;
        }
        path.pop();
        visited.remove(w);
    }
    false
}

fn path_prune_ok(g: &Graph, target: usize, path: &[usize], visited: &VertexSet) -> bool {
    let current = *path.last().expect("nonempty");
    let unvisited = visited.complement();
    for w in unvisited.iter() {
        if w == target {
            // the endpoint needs one connection into the rest
            let mut usable = g.neighbors(w).intersection(&unvisited).len();
            if g.has_edge(w, current) {
                usable += 1;
            }
            if usable < 1 {
                return false;
            }
        } else {
            let mut usable = g.neighbors(w).intersection(&unvisited).len();
            if g.has_edge(w, current) {
                usable += 1;
            }
            if usable < 2 {
                return false;
            }
        }
    }
    let reached = reachable_through(g, current, &unvisited);
    reached.len() == unvisited.len()
}

/// True iff every pair of vertices is joined by a hamiltonian path.
pub fn is_hamiltonian_connected(g: &Graph) -> Result<bool> {
    let n = g.order();
    if n < 3 {
        return Err(Error::TooFewVertices { need: 3, have: n });
    }
    for u in 0..n {
        for v in u + 1..n {
            if hamiltonian_path_between(g, u, v)?.is_none() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, Serialize)]
pub struct LongestCycleResult {
    pub cycle: OrientedCycle,
    pub circumference: usize,
    /// Always true: the search is exhaustive.
    pub exact: bool,
}

/// Computes an exact longest cycle.
///
/// Phase one determines the circumference by exhaustive search over cycles
/// grouped by their smallest vertex. Phase two re-searches in ascending
/// lexicographic order and returns the first cycle of that length, which is
/// the representative with the lexicographically smallest vertex sequence
/// (started at its smallest vertex, oriented so the second vertex is the
/// smaller neighbor).
pub fn longest_cycle(g: &Graph) -> Result<LongestCycleResult> {
    if !g.has_cycle() {
        return Err(Error::NoCycle);
    }
    let n = g.order();
    let mut best = 2usize;
    for start in 0..n {
        if n - start <= best {
            break;
        }
        let mut allowed = VertexSet::empty(n);
        for v in start..n {
            allowed.insert(v);
        }
        let mut visited = VertexSet::empty(n);
        visited.insert(start);
        let mut path = vec![start];
        search_longest(g, &allowed, &mut path, &mut visited, &mut best);
    }
    debug_assert!(best >= 3);

    for start in 0..n {
        if n - start < best {
            continue;
        }
        let mut allowed = VertexSet::empty(n);
        for v in start..n {
            allowed.insert(v);
        }
        let mut visited = VertexSet::empty(n);
        visited.insert(start);
        let mut path = vec![start];
        if let Some(cycle) = search_exact_length(g, &allowed, best, &mut path, &mut visited) {
            let cycle = OrientedCycle::new(g, cycle).expect("search produces valid cycles");
            return Ok(LongestCycleResult {
                circumference: cycle.len(),
                cycle,
                exact: true,
            });
        }
    }
    unreachable!("phase one found a cycle of the reported length")
}

fn search_longest(
    g: &Graph,
    allowed: &VertexSet,
    path: &mut Vec<usize>,
    visited: &mut VertexSet,
    best: &mut usize,
) {
    let start = path[0];
    let current = *path.last().expect("nonempty");
    if path.len() >= 3 && g.has_edge(current, start) && path.len() > *best {
        *best = path.len();
    }
    let open = allowed.difference(visited);
    let reach = reachable_through(g, current, &open);
    if path.len() + reach.len() <= *best {
        return;
    }
    if !g.has_edge(current, start) && !touches_start(g, start, &reach) {
        return;
    }
    for w in g.neighbors_iter(current) {
        if allowed.contains(w) && !visited.contains(w) {
            visited.insert(w);
            path.push(w);
            search_longest(g, allowed, path, visited, best);
            path.pop();
            visited.remove(w);
        }
    }
}

fn touches_start(g: &Graph, start: usize, region: &VertexSet) -> bool {
    g.row(start)
        .iter()
        .zip(region.words())
        .any(|(&r, &m)| r & m != 0)
}

fn search_exact_length(
    g: &Graph,
    allowed: &VertexSet,
    wanted: usize,
    path: &mut Vec<usize>,
    visited: &mut VertexSet,
) -> Option<Vec<usize>> {
    let start = path[0];
    let current = *path.last().expect("nonempty");
    if path.len() == wanted {
        if g.has_edge(current, start) {
            return Some(path.clone());
        }
        return None;
    }
    let open = allowed.difference(visited);
    let reach = reachable_through(g, current, &open);
    if path.len() + reach.len() < wanted {
        return None;
    }
    if !touches_start(g, start, &reach) {
        return None;
    }
    for w in g.neighbors_iter(current) {
        if allowed.contains(w) && !visited.contains(w) {
            visited.insert(w);
            path.push(w);
            if let Some(found) = search_exact_length(g, allowed, wanted, path, visited) {
                return Some(found);
            }
            path.pop();
            visited.remove(w);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, Family};

    #[test]
    fn cycles_are_their_own_hamiltonian_cycle() {
        for n in 3..=8 {
            let g = generate(&Family::Cycle(n)).unwrap();
            let c = hamiltonian_cycle(&g).unwrap();
            assert_eq!(c.len(), n);
        }
    }

    #[test]
    fn petersen_is_not_hamiltonian() {
        assert!(hamiltonian_cycle(&generate(&Family::Petersen).unwrap()).is_none());
    }

    #[test]
    fn cocktail_party_is_hamiltonian() {
        let g = generate(&Family::CocktailParty(4)).unwrap();
        let c = hamiltonian_cycle(&g).unwrap();
        assert_eq!(c.len(), 8);
    }

    #[test]
    fn tiny_graphs_have_no_cycle() {
        assert!(hamiltonian_cycle(&generate(&Family::Complete(2)).unwrap()).is_none());
        assert!(hamiltonian_cycle(&Graph::empty(1)).is_none());
        assert!(hamiltonian_cycle(&Graph::empty(0)).is_none());
    }

    #[test]
    fn path_between_leaves() {
        let p4 = generate(&Family::Path(4)).unwrap();
        let p = hamiltonian_path_between(&p4, 0, 3).unwrap().unwrap();
        assert_eq!(p.vertices(), &[0, 1, 2, 3]);
        assert!(hamiltonian_path_between(&p4, 0, 2).unwrap().is_none());
        assert!(hamiltonian_path_between(&p4, 1, 1).is_err());
        assert!(hamiltonian_path_between(&p4, 0, 9).is_err());
    }

    #[test]
    fn complete_graph_paths_everywhere() {
        let k4 = generate(&Family::Complete(4)).unwrap();
        for u in 0..4 {
            for v in u + 1..4 {
                assert!(hamiltonian_path_between(&k4, u, v).unwrap().is_some());
            }
        }
    }

    #[test]
    fn c4_adjacent_pair_goes_the_long_way() {
        let c4 = generate(&Family::Cycle(4)).unwrap();
        let p = hamiltonian_path_between(&c4, 0, 1).unwrap().unwrap();
        assert_eq!(p.vertices(), &[0, 3, 2, 1]);
    }

    #[test]
    fn hamiltonian_connectedness_fixtures() {
        assert!(is_hamiltonian_connected(&generate(&Family::Complete(4)).unwrap()).unwrap());
        assert!(!is_hamiltonian_connected(&generate(&Family::Cycle(5)).unwrap()).unwrap());
        let k33 = generate(&Family::CompleteMultipartite(vec![3, 3])).unwrap();
        assert!(!is_hamiltonian_connected(&k33).unwrap());
        assert!(is_hamiltonian_connected(&generate(&Family::Complete(2)).unwrap()).is_err());
    }

    #[test]
    fn longest_cycle_fixtures() {
        let petersen = generate(&Family::Petersen).unwrap();
        let r = longest_cycle(&petersen).unwrap();
        assert_eq!(r.circumference, 9);
        assert!(r.exact);

        for n in 3..=7 {
            let g = generate(&Family::Complete(n)).unwrap();
            assert_eq!(longest_cycle(&g).unwrap().circumference, n);
        }
    }

    #[test]
    fn two_triangles_sharing_a_vertex() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let r = longest_cycle(&g).unwrap();
        assert_eq!(r.circumference, 3);
        assert_eq!(r.cycle.vertices(), &[0, 1, 2]);
    }

    #[test]
    fn forests_are_rejected() {
        let tree = Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert!(matches!(longest_cycle(&tree), Err(Error::NoCycle)));
    }

    #[test]
    fn canonical_tie_break() {
        // K4: many 4-cycles; representative must be 0,1,2,3
        let k4 = generate(&Family::Complete(4)).unwrap();
        let r = longest_cycle(&k4).unwrap();
        assert_eq!(r.cycle.vertices(), &[0, 1, 2, 3]);
    }

    #[test]
    fn hamiltonian_graphs_get_spanning_longest_cycle() {
        let g = generate(&Family::CocktailParty(3)).unwrap();
        let r = longest_cycle(&g).unwrap();
        assert_eq!(r.circumference, 6);
        assert!(hamiltonian_cycle(&g).is_some());
    }
}
