//! Paths and oriented cycles, validated against their host graph.

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A sequence of distinct vertices with consecutive members adjacent.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Path {
    vertices: Vec<usize>,
}

impl Path {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidPath("a path has at least one vertex".into()));
        }
        let mut seen = VertexSet::empty(g.order());
        for &v in &vertices {
            g.check_vertex(v)?;
            if seen.contains(v) {
                return Err(Error::InvalidPath(format!("repeated vertex {v}")));
            }
            seen.insert(v);
        }
        for pair in vertices.windows(2) {
            if !g.has_edge(pair[0], pair[1]) {
                return Err(Error::InvalidPath(format!(
                    "vertices {} and {} are not adjacent",
                    pair[0], pair[1]
                )));
            }
        }
        Ok(Path { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().expect("nonempty")
    }

    pub fn interior(&self) -> &[usize] {
        if self.vertices.len() <= 2 {
            &[]
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }

    pub fn reversed(&self) -> Path {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Path { vertices }
    }

    pub fn vertex_set(&self, universe: usize) -> VertexSet {
        let mut s = VertexSet::empty(universe);
        for &v in &self.vertices {
            s.insert(v);
        }
        s
    }
}

impl Serialize for Path {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.vertices.len()))?;
        for v in &self.vertices {
            seq.serialize_element(v)?;
        }
        seq.end()
    }
}

/// A cycle of at least three distinct vertices with a fixed traversal
/// direction. `successor` and `predecessor` realise the `u⁺` / `u⁻`
/// navigation, with the predecessor defined as the inverse of the successor.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrientedCycle {
    vertices: Vec<usize>,
    /// position of each host vertex on the cycle, `usize::MAX` if absent
    positions: Vec<usize>,
}

impl OrientedCycle {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidCycle("a cycle has at least 3 vertices".into()));
        }
        let mut positions = vec![usize::MAX; g.order()];
        for (i, &v) in vertices.iter().enumerate() {
            g.check_vertex(v)?;
            if positions[v] != usize::MAX {
                return Err(Error::InvalidCycle(format!("repeated vertex {v}")));
            }
            positions[v] = i;
        }
        for i in 0..vertices.len() {
            let u = vertices[i];
            let v = vertices[(i + 1) % vertices.len()];
            if !g.has_edge(u, v) {
                return Err(Error::InvalidCycle(format!("vertices {u} and {v} are not adjacent")));
            }
        }
        Ok(OrientedCycle { vertices, positions })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.positions.len() && self.positions[v] != usize::MAX
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.positions.get(v).copied().filter(|&p| p != usize::MAX)
    }

    /// `v⁺`, the next vertex along the orientation.
    pub fn successor(&self, v: usize) -> Option<usize> {
        self.position(v)
            .map(|p| self.vertices[(p + 1) % self.vertices.len()])
    }

    /// `v⁻`, the unique vertex whose successor is `v`.
    pub fn predecessor(&self, v: usize) -> Option<usize> {
        self.position(v)
            .map(|p| self.vertices[(p + self.vertices.len() - 1) % self.vertices.len()])
    }

    pub fn vertex_set(&self, universe: usize) -> VertexSet {
        let mut s = VertexSet::empty(universe);
        for &v in &self.vertices {
            s.insert(v);
        }
        s
    }

    /// The vertices from `a` to `b` inclusive, following the orientation.
    pub fn forward_segment(&self, a: usize, b: usize) -> Vec<usize> {
        let n = self.vertices.len();
        let pa = self.position(a).expect("a on cycle");
        let pb = self.position(b).expect("b on cycle");
        let mut out = Vec::new();
        let mut p = pa;
        loop {
            out.push(self.vertices[p]);
            if p == pb {
                break;
            }
            p = (p + 1) % n;
        }
        out
    }

    /// The vertices from `a` to `b` inclusive, against the orientation.
    pub fn backward_segment(&self, a: usize, b: usize) -> Vec<usize> {
        let mut seg = self.forward_segment(b, a);
        seg.reverse();
        seg
    }

    /// Rotates so the smallest vertex comes first and flips the direction if
    /// that makes the second vertex smaller; the canonical representative for
    /// tie-breaking among equal-length cycles.
    pub fn canonical_sequence(&self) -> Vec<usize> {
        let n = self.vertices.len();
        let (start, _) = self
            .vertices
            .iter()
            .enumerate()
            .min_by_key(|&(_, &v)| v)
            .expect("nonempty");
        let forward: Vec<usize> = (0..n).map(|i| self.vertices[(start + i) % n]).collect();
        let backward: Vec<usize> = (0..n)
            .map(|i| self.vertices[(start + n - i % n) % n])
            .collect();
        forward.min(backward)
    }
}

impl Serialize for OrientedCycle {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.vertices.len()))?;
        for v in &self.vertices {
            seq.serialize_element(v)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, Family};

    #[test]
    fn path_validation() {
        let g = generate(&Family::Path(4)).unwrap();
        let p = Path::new(&g, vec![0, 1, 2, 3]).unwrap();
        assert_eq!(p.first(), 0);
        assert_eq!(p.last(), 3);
        assert_eq!(p.interior(), &[1, 2]);
        assert!(Path::new(&g, vec![0, 2]).is_err());
        assert!(Path::new(&g, vec![0, 1, 0]).is_err());
        assert!(Path::new(&g, vec![]).is_err());
    }

    #[test]
    fn cycle_navigation() {
        let g = generate(&Family::Cycle(5)).unwrap();
        let c = OrientedCycle::new(&g, vec![0, 1, 2, 3, 4]).unwrap();
        assert_eq!(c.successor(4), Some(0));
        assert_eq!(c.predecessor(0), Some(4));
        for v in 0..5 {
            assert_eq!(c.successor(c.predecessor(v).unwrap()), Some(v));
        }
        assert_eq!(c.forward_segment(3, 1), vec![3, 4, 0, 1]);
        assert_eq!(c.backward_segment(1, 3), vec![1, 0, 4, 3]);
    }

    #[test]
    fn cycle_validation() {
        let g = generate(&Family::Cycle(4)).unwrap();
        assert!(OrientedCycle::new(&g, vec![0, 1, 2, 3]).is_ok());
        assert!(OrientedCycle::new(&g, vec![0, 1, 2]).is_err()); // 2 !~ 0
        assert!(OrientedCycle::new(&g, vec![0, 1]).is_err());
    }

    #[test]
    fn canonical_sequence_picks_direction() {
        let g = generate(&Family::Complete(4)).unwrap();
        let c = OrientedCycle::new(&g, vec![2, 0, 3, 1]).unwrap();
        // rotations starting at 0: forward 0,3,1,2 backward 0,2,1,3
        assert_eq!(c.canonical_sequence(), vec![0, 2, 1, 3]);
    }
}
