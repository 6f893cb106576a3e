//! Constructors for named graph families and the forbidden patterns.
//!
//! Labelings are canonical and documented so tests and witnesses are
//! reproducible across runs.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// The five forbidden patterns used by the freeness checks.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord, Hash)]
pub enum Pattern {
    /// One edge `{0,1}` plus isolated vertices 2, 3, 4.
    K2U3K1,
    /// One edge `{0,1}` plus isolated vertices 2, 3.
    K2U2K1,
    /// One edge `{0,1}` plus isolated vertex 2.
    K2UK1,
    /// The path 0–1–2–3.
    P4,
    /// Isolated vertex 0 plus the path 1–2–3.
    K1UP3,
}

impl Pattern {
    pub const ALL: [Pattern; 5] = [
        Pattern::K2U3K1,
        Pattern::K2U2K1,
        Pattern::K2UK1,
        Pattern::P4,
        Pattern::K1UP3,
    ];

    pub fn graph(self) -> Graph {
        let (n, edges): (usize, &[(usize, usize)]) = match self {
            Pattern::K2U3K1 => (5, &[(0, 1)]),
            Pattern::K2U2K1 => (4, &[(0, 1)]),
            Pattern::K2UK1 => (3, &[(0, 1)]),
            Pattern::P4 => (4, &[(0, 1), (1, 2), (2, 3)]),
            Pattern::K1UP3 => (4, &[(1, 2), (2, 3)]),
        };
        Graph::from_edges(n, edges).expect("pattern edges are valid")
    }

    pub fn name(self) -> &'static str {
        match self {
            Pattern::K2U3K1 => "k2u3k1",
            Pattern::K2U2K1 => "k2u2k1",
            Pattern::K2UK1 => "k2uk1",
            Pattern::P4 => "p4",
            Pattern::K1UP3 => "k1up3",
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "k2u3k1" => Ok(Pattern::K2U3K1),
            "k2u2k1" => Ok(Pattern::K2U2K1),
            "k2uk1" => Ok(Pattern::K2UK1),
            "p4" => Ok(Pattern::P4),
            "k1up3" => Ok(Pattern::K1UP3),
            other => Err(Error::UnknownFamily(other.to_owned())),
        }
    }
}

/// Named graph families with canonical vertex labelings.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Family {
    /// Complete graph on `n` vertices.
    Complete(usize),
    /// Cycle 0–1–…–(n−1)–0, `n ≥ 3`.
    Cycle(usize),
    /// Path 0–1–…–(n−1), `n ≥ 1`.
    Path(usize),
    /// Complete multipartite graph; parts are consecutive label blocks.
    CompleteMultipartite(Vec<usize>),
    /// Cocktail-party graph `K_{m×2}`: partner pairs are `(2i, 2i+1)`.
    CocktailParty(usize),
    /// The Petersen graph: outer cycle 0–4, spokes `i ~ i+5`, inner
    /// pentagram `5+i ~ 5+((i+2) mod 5)`.
    Petersen,
    Pattern(Pattern),
}

impl Family {
    /// Builds a family from its CLI-facing name and integer parameters.
    pub fn parse(name: &str, params: &[usize]) -> Result<Family> {
        let arity = |want: usize| -> Result<()> {
            if params.len() == want {
                Ok(())
            } else {
                Err(Error::InvalidFamilyParams {
                    family: name.to_owned(),
                    message: format!("expected {want} parameter(s), got {}", params.len()),
                })
            }
        };
        match name.to_ascii_lowercase().as_str() {
            "complete" => {
                arity(1)?;
                Ok(Family::Complete(params[0]))
            }
            "cycle" => {
                arity(1)?;
                Ok(Family::Cycle(params[0]))
            }
            "path" => {
                arity(1)?;
                Ok(Family::Path(params[0]))
            }
            "multipartite" => {
                if params.is_empty() {
                    return Err(Error::InvalidFamilyParams {
                        family: name.to_owned(),
                        message: "at least one part size required".to_owned(),
                    });
                }
                Ok(Family::CompleteMultipartite(params.to_vec()))
            }
            "cocktail" => {
                arity(1)?;
                Ok(Family::CocktailParty(params[0]))
            }
            "petersen" => {
                arity(0)?;
                Ok(Family::Petersen)
            }
            other => {
                if let Ok(p) = other.parse::<Pattern>() {
                    arity(0)?;
                    return Ok(Family::Pattern(p));
                }
                Err(Error::UnknownFamily(name.to_owned()))
            }
        }
    }
}

pub fn generate(family: &Family) -> Result<Graph> {
    match family {
        Family::Complete(n) => {
            let mut g = Graph::empty(*n);
            for u in 0..*n {
                for v in u + 1..*n {
                    g.set_edge(u, v);
                }
            }
            Ok(g)
        }
        Family::Cycle(n) => {
            if *n < 3 {
                return Err(Error::InvalidFamilyParams {
                    family: "cycle".to_owned(),
                    message: "a cycle needs at least 3 vertices".to_owned(),
                });
            }
            let edges: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(*n, &edges)
        }
        Family::Path(n) => {
            if *n == 0 {
                return Err(Error::InvalidFamilyParams {
                    family: "path".to_owned(),
                    message: "a path needs at least 1 vertex".to_owned(),
                });
            }
            let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            Graph::from_edges(*n, &edges)
        }
        Family::CompleteMultipartite(parts) => {
            if parts.iter().any(|&p| p == 0) {
                return Err(Error::InvalidFamilyParams {
                    family: "multipartite".to_owned(),
                    message: "part sizes must be positive".to_owned(),
                });
            }
            let n: usize = parts.iter().sum();
            let mut part_of = Vec::with_capacity(n);
            for (i, &p) in parts.iter().enumerate() {
                part_of.extend(std::iter::repeat(i).take(p));
            }
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if part_of[u] != part_of[v] {
                        g.set_edge(u, v);
                    }
                }
            }
            Ok(g)
        }
        Family::CocktailParty(m) => {
            if *m == 0 {
                return Err(Error::InvalidFamilyParams {
                    family: "cocktail".to_owned(),
                    message: "need at least one pair".to_owned(),
                });
            }
            generate(&Family::CompleteMultipartite(vec![2; *m]))
        }
        Family::Petersen => {
            let mut edges = Vec::with_capacity(15);
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((i, i + 5));
                edges.push((5 + i, 5 + (i + 2) % 5));
            }
            Graph::from_edges(10, &edges)
        }
        Family::Pattern(p) => Ok(p.graph()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_shapes() {
        let p = Pattern::K2U3K1.graph();
        assert_eq!(p.order(), 5);
        assert_eq!(p.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        let q = Pattern::K1UP3.graph();
        assert_eq!(q.degree(0), 0);
        assert_eq!(q.degree(2), 2);
    }

    #[test]
    fn complete_single_vertex() {
        let g = generate(&Family::Complete(1)).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn petersen_shape() {
        let g = generate(&Family::Petersen).unwrap();
        assert_eq!(g.order(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!(g.vertices().all(|v| g.degree(v) == 3));
        // girth 5: no triangles or 4-cycles through vertex 0
        for u in g.neighbors_iter(0) {
            for v in g.neighbors_iter(0) {
                if u < v {
                    assert!(!g.has_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn cocktail_party_degrees() {
        let g = generate(&Family::CocktailParty(4)).unwrap();
        assert_eq!(g.order(), 8);
        assert!(g.vertices().all(|v| g.degree(v) == 6));
        assert!(!g.has_edge(0, 1));
        assert!(g.has_edge(0, 2));
    }

    #[test]
    fn degree_sum_is_twice_edges() {
        for family in [
            Family::Complete(6),
            Family::Cycle(7),
            Family::Path(5),
            Family::CompleteMultipartite(vec![1, 2, 3]),
            Family::CocktailParty(3),
            Family::Petersen,
            Family::Pattern(Pattern::K2U2K1),
        ] {
            let g = generate(&family).unwrap();
            let sum: usize = g.vertices().map(|v| g.degree(v)).sum();
            assert_eq!(sum, 2 * g.edge_count(), "family {family:?}");
        }
    }

    #[test]
    fn bad_parameters() {
        assert!(generate(&Family::Cycle(2)).is_err());
        assert!(generate(&Family::CompleteMultipartite(vec![0, 2])).is_err());
        assert!(Family::parse("frducci", &[]).is_err());
        assert!(Family::parse("petersen", &[3]).is_err());
        assert!(Family::parse("cocktail", &[4]).is_ok());
    }
}
