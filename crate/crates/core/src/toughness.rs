//! Exact graph toughness.
//!
//! `τ(G)` is the minimum of `|S| / c(G − S)` over all cut sets `S`, infinite
//! for complete graphs. Everything here is exact rational arithmetic; no
//! floating point is involved in any decision.

use itertools::Itertools;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::connectivity::vertex_connectivity;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::independence_number;
use crate::rational::Rational;

/// A toughness value: an exact rational, or infinite for complete graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ToughnessValue {
    Finite(Rational),
    Infinite,
}

impl ToughnessValue {
    pub fn as_finite(&self) -> Option<Rational> {
        match self {
            ToughnessValue::Finite(r) => Some(*r),
            ToughnessValue::Infinite => None,
        }
    }
}

impl std::fmt::Display for ToughnessValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ToughnessValue::Finite(r) => write!(f, "{r}"),
            ToughnessValue::Infinite => write!(f, "infinite"),
        }
    }
}

impl Serialize for ToughnessValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ToughnessValue::Finite(r) => r.serialize(serializer),
            ToughnessValue::Infinite => {
                let mut map = serializer.serialize_map(Some(1))?;
                map.serialize_entry("infinite", &true)?;
                map.end()
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ToughnessResult {
    pub value: ToughnessValue,
    /// A minimizing cut set (the tough set) for non-complete graphs; the
    /// empty set for disconnected graphs; absent for complete graphs.
    pub witness: Option<VertexSet>,
}

/// Computes `τ(G)` exactly with a minimizing witness.
///
/// Candidate cut sets are scanned by increasing size, subsets of each size in
/// lexicographic order, so the witness is the minimizer of smallest
/// cardinality and, within that, the lexicographically smallest vertex set.
/// Sizes are cut off once `s / min(n − s, α(G))`, a lower bound on any ratio
/// achievable with `s` removed vertices, reaches the best ratio found.
pub fn toughness_exact(g: &Graph) -> ToughnessResult {
    let n = g.order();
    if g.is_complete() {
        return ToughnessResult {
            value: ToughnessValue::Infinite,
            witness: None,
        };
    }
    if !g.is_connected() {
        return ToughnessResult {
            value: ToughnessValue::Finite(Rational::zero()),
            witness: Some(VertexSet::empty(n)),
        };
    }

    let alpha = independence_number(g).size;
    let kappa = vertex_connectivity(g).max(1);
    let mut best: Option<(Rational, VertexSet)> = None;

    for size in kappa..=n.saturating_sub(2) {
        if let Some((ratio, _)) = &best {
            // c(G−S) never exceeds min(n − |S|, α); bound is monotone in size
            let c_max = (n - size).min(alpha);
            if Rational::ratio(size, c_max) >= *ratio {
                break;
            }
        }
        for combo in (0..n).combinations(size) {
            let s = VertexSet::from_members(n, combo.iter().copied()).expect("in range");
            let parts = g.component_count_without(&s);
            if parts < 2 {
                continue;
            }
            let ratio = Rational::ratio(size, parts);
            if best.as_ref().is_none_or(|(b, _)| ratio < *b) {
                best = Some((ratio, s));
            }
        }
    }

    let (value, witness) = best.expect("non-complete connected graphs have a cut set");
    ToughnessResult {
        value: ToughnessValue::Finite(value),
        witness: Some(witness),
    }
}

/// Outcome of a `t`-toughness decision.
#[derive(Clone, Debug)]
pub enum ToughnessDecision {
    Tough,
    NotTough { violator: VertexSet },
}

impl ToughnessDecision {
    pub fn holds(&self) -> bool {
        matches!(self, ToughnessDecision::Tough)
    }
}

/// Decides whether every cut set `S` satisfies `t · c(G − S) ≤ |S|`,
/// returning the first violating set (by size, then lexicographic order)
/// otherwise. Terminates as soon as a violation is found, without computing
/// the full toughness.
pub fn is_t_tough(g: &Graph, t: Rational) -> Result<ToughnessDecision> {
    if t.is_negative() {
        return Err(Error::NegativeValue);
    }
    let n = g.order();
    for size in 0..=n.saturating_sub(2) {
        for combo in (0..n).combinations(size) {
            let s = VertexSet::from_members(n, combo.iter().copied()).expect("in range");
            let parts = g.component_count_without(&s);
            if parts < 2 {
                continue;
            }
            // violation: t * parts > |S|
            if t.cmp_ratio(size as i64, parts as i64) == std::cmp::Ordering::Greater {
                return Ok(ToughnessDecision::NotTough { violator: s });
            }
        }
    }
    Ok(ToughnessDecision::Tough)
}

/// The witness cut set from `toughness_exact`, for connected non-complete
/// graphs.
pub fn tough_set(g: &Graph) -> Result<VertexSet> {
    if g.is_complete() {
        return Err(Error::CompleteGraph);
    }
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    Ok(toughness_exact(g).witness.expect("finite toughness has a witness"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::cut_analysis;
    use crate::families::{generate, Family};

    fn tau(family: &Family) -> ToughnessResult {
        toughness_exact(&generate(family).unwrap())
    }

    #[test]
    fn complete_graph_is_infinitely_tough() {
        let r = tau(&Family::Complete(6));
        assert_eq!(r.value, ToughnessValue::Infinite);
        assert!(r.witness.is_none());
    }

    #[test]
    fn cycle_toughness_one() {
        let r = tau(&Family::Cycle(6));
        assert_eq!(r.value, ToughnessValue::Finite(Rational::integer(1)));
        let w = r.witness.unwrap();
        assert_eq!(w.to_vec(), vec![0, 2]);
        let g = generate(&Family::Cycle(6)).unwrap();
        let a = cut_analysis(&g, &w).unwrap();
        assert!(a.is_cut_set);
        assert_eq!(a.ratio, Rational::integer(1));
    }

    #[test]
    fn petersen_four_thirds() {
        let r = tau(&Family::Petersen);
        assert_eq!(r.value, ToughnessValue::Finite(Rational::new(4, 3).unwrap()));
        let g = generate(&Family::Petersen).unwrap();
        let w = r.witness.unwrap();
        let a = cut_analysis(&g, &w).unwrap();
        assert_eq!(a.ratio, Rational::new(4, 3).unwrap());
    }

    #[test]
    fn cocktail_party_three_tough() {
        let r = tau(&Family::CocktailParty(4));
        assert_eq!(r.value, ToughnessValue::Finite(Rational::integer(3)));
        assert_eq!(r.witness.unwrap().to_vec(), vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn disconnected_gets_zero_with_empty_witness() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let r = toughness_exact(&g);
        assert_eq!(r.value, ToughnessValue::Finite(Rational::zero()));
        assert!(r.witness.unwrap().is_empty());
    }

    #[test]
    fn t_tough_decisions() {
        let c6 = generate(&Family::Cycle(6)).unwrap();
        assert!(is_t_tough(&c6, Rational::integer(1)).unwrap().holds());
        match is_t_tough(&c6, Rational::new(7, 6).unwrap()).unwrap() {
            ToughnessDecision::NotTough { violator } => {
                assert_eq!(violator.len(), 2);
                let a = cut_analysis(&c6, &violator).unwrap();
                assert!(a.is_cut_set);
                // re-check the violation: 7/6 * c > |S|
                assert_eq!(
                    Rational::new(7, 6).unwrap().cmp_ratio(
                        violator.len() as i64,
                        a.parts.len() as i64
                    ),
                    std::cmp::Ordering::Greater
                );
            }
            ToughnessDecision::Tough => panic!("C6 is not 7/6-tough"),
        }
        let k5 = generate(&Family::Complete(5)).unwrap();
        assert!(is_t_tough(&k5, Rational::integer(100)).unwrap().holds());
        assert!(is_t_tough(&c6, Rational::new(-1, 2).unwrap()).is_err());
    }

    #[test]
    fn disconnected_not_positive_tough() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        match is_t_tough(&g, Rational::new(1, 10).unwrap()).unwrap() {
            ToughnessDecision::NotTough { violator } => assert!(violator.is_empty()),
            ToughnessDecision::Tough => panic!("disconnected graphs are not t-tough for t > 0"),
        }
        assert!(is_t_tough(&g, Rational::zero()).unwrap().holds());
    }

    #[test]
    fn tough_set_fixtures() {
        let c4 = generate(&Family::Cycle(4)).unwrap();
        assert_eq!(tough_set(&c4).unwrap().to_vec(), vec![0, 2]);

        let star = generate(&Family::CompleteMultipartite(vec![1, 4])).unwrap();
        let w = tough_set(&star).unwrap();
        assert_eq!(w.to_vec(), vec![0]);
        let a = cut_analysis(&star, &w).unwrap();
        assert_eq!(a.ratio, Rational::new(1, 4).unwrap());

        assert!(tough_set(&generate(&Family::Complete(4)).unwrap()).is_err());
        let disconnected = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(tough_set(&disconnected).is_err());
    }

    #[test]
    fn toughness_value_serialization() {
        let fin = serde_json::to_string(&ToughnessValue::Finite(Rational::new(4, 3).unwrap())).unwrap();
        assert_eq!(fin, r#"{"num":4,"den":3}"#);
        let inf = serde_json::to_string(&ToughnessValue::Infinite).unwrap();
        assert_eq!(inf, r#"{"infinite":true}"#);
    }
}
