//! Exact maximum independent set via branch and bound.

use crate::bitset::VertexSet;
use crate::graph::Graph;

#[derive(Clone, Debug)]
pub struct IndependenceResult {
    pub size: usize,
    /// The lexicographically smallest maximum independent set.
    pub witness: VertexSet,
}

/// Computes `α(G)` exactly with a witness.
///
/// Branching explores vertices in ascending id with the include branch first,
/// so the first maximum found (and therefore the witness) is the
/// lexicographically smallest one. The bound is a greedy clique cover of the
/// remaining candidates; a branch is cut only when it cannot strictly beat
/// the best set found so far, which preserves the tie-break.
pub fn independence_number(g: &Graph) -> IndependenceResult {
    let n = g.order();
    let mut best = VertexSet::empty(n);
    let mut current = Vec::new();
    branch(g, &VertexSet::full(n), &mut current, &mut best);
    IndependenceResult {
        size: best.len(),
        witness: best,
    }
}

fn branch(g: &Graph, candidates: &VertexSet, current: &mut Vec<usize>, best: &mut VertexSet) {
    if current.len() > best.len() {
        *best = VertexSet::empty(g.order());
        for &v in current.iter() {
            best.insert(v);
        }
    }
    let Some(v) = candidates.smallest() else {
        return;
    };
    if current.len() + clique_cover_bound(g, candidates) <= best.len() {
        return;
    }
    // include v
    let mut rest = candidates.clone();
    rest.remove(v);
    let allowed = rest.difference(&g.neighbors(v));
    current.push(v);
    branch(g, &allowed, current, best);
    current.pop();
    // exclude v
    branch(g, &rest, current, best);
}

/// Partitions the candidates greedily into cliques; the number of cliques
/// bounds the independence number of the candidate set from above.
fn clique_cover_bound(g: &Graph, candidates: &VertexSet) -> usize {
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    for v in candidates.iter() {
        match cliques
            .iter_mut()
            .find(|clique| clique.iter().all(|&u| g.has_edge(u, v)))
        {
            Some(clique) => clique.push(v),
            None => cliques.push(vec![v]),
        }
    }
    cliques.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, Family, Pattern};

    #[test]
    fn complete_graphs() {
        for n in 1..=7 {
            let r = independence_number(&generate(&Family::Complete(n)).unwrap());
            assert_eq!(r.size, 1);
            assert_eq!(r.witness.to_vec(), vec![0]);
        }
    }

    #[test]
    fn pattern_alpha_four() {
        let r = independence_number(&Pattern::K2U3K1.graph());
        assert_eq!(r.size, 4);
        assert_eq!(r.witness.to_vec(), vec![0, 2, 3, 4]);
    }

    #[test]
    fn petersen_alpha_four() {
        let r = independence_number(&generate(&Family::Petersen).unwrap());
        assert_eq!(r.size, 4);
        // witness must be independent
        let g = generate(&Family::Petersen).unwrap();
        let w = r.witness.to_vec();
        for (i, &u) in w.iter().enumerate() {
            for &v in &w[i + 1..] {
                assert!(!g.has_edge(u, v));
            }
        }
        assert_eq!(w, vec![0, 2, 8, 9]);
    }

    #[test]
    fn cocktail_party_alpha_two() {
        let r = independence_number(&generate(&Family::CocktailParty(4)).unwrap());
        assert_eq!(r.size, 2);
        assert_eq!(r.witness.to_vec(), vec![0, 1]);
    }

    #[test]
    fn empty_graph() {
        let r = independence_number(&Graph::empty(4));
        assert_eq!(r.size, 4);
        let r0 = independence_number(&Graph::empty(0));
        assert_eq!(r0.size, 0);
    }
}
