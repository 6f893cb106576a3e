//! Isomorphism-free enumeration of small graphs and seeded random graphs.
//!
//! The canonical form is the lexicographically minimal adjacency matrix over
//! all vertex relabelings, read as the lower triangle row by row. Each order
//! is produced by extending every canonical graph of the previous order with
//! a new vertex and deduplicating canonical keys, so exactly one
//! representative per isomorphism class survives. For connected-only
//! enumeration the new vertex must attach somewhere; every connected graph
//! has a non-cut vertex, so induction keeps the generation complete.

use std::collections::BTreeSet;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::families::Pattern;
use crate::graph::Graph;
use crate::hamilton::hamiltonian_cycle;
use crate::pattern::is_free;
use crate::rational::Rational;
use crate::toughness::is_t_tough;

/// Above this order the exhaustive enumerator warns (CLI) — the simple
/// canonical search is still exact but the class counts explode.
pub const SOFT_ORDER_LIMIT: usize = 8;
/// Hard cap: canonical keys are packed into 64 bits and the level sets stop
/// fitting in memory far beyond this anyway.
pub const HARD_ORDER_LIMIT: usize = 10;

/// Packs lower-triangle rows (row `k` holds bits towards `0..k`) into a key.
fn pack(rows: &[u16]) -> u64 {
    let mut key = 0u64;
    for (k, &row) in rows.iter().enumerate().skip(1) {
        key = (key << k) | row as u64;
    }
    key
}

fn unpack(key: u64, n: usize) -> Vec<u16> {
    let mut rows = vec![0u16; n];
    let mut key = key;
    for k in (1..n).rev() {
        rows[k] = (key & ((1 << k) - 1)) as u16;
        key >>= k;
    }
    rows
}

/// Full neighbor masks from lower-triangle rows.
fn masks_from_rows(rows: &[u16]) -> Vec<u16> {
    let n = rows.len();
    let mut adj = vec![0u16; n];
    for k in 1..n {
        for j in 0..k {
            if rows[k] >> j & 1 == 1 {
                adj[k] |= 1 << j;
                adj[j] |= 1 << k;
            }
        }
    }
    adj
}

fn graph_from_key(key: u64, n: usize) -> Graph {
    let rows = unpack(key, n);
    let mut g = Graph::empty(n);
    for k in 1..n {
        for j in 0..k {
            if rows[k] >> j & 1 == 1 {
                g.set_edge(k, j);
            }
        }
    }
    g
}

struct CanonSearch<'a> {
    adj: &'a [u16],
    n: usize,
    perm: Vec<usize>,
    cur: Vec<u16>,
    used: u16,
    best: Vec<u16>,
}

impl CanonSearch<'_> {
    fn run(&mut self, depth: usize) {
        if depth == self.n {
            if self.cur < self.best {
                self.best = self.cur.clone();
            }
            return;
        }
        for v in 0..self.n {
            if self.used >> v & 1 == 1 {
                continue;
            }
            let mut row = 0u16;
            for (j, &p) in self.perm[..depth].iter().enumerate() {
                row |= ((self.adj[v] >> p & 1) as u16) << j;
            }
            self.cur[depth] = row;
            // prune branches whose prefix already exceeds the best key
            if self.cur[..=depth] > self.best[..=depth] {
                continue;
            }
            self.perm[depth] = v;
            self.used |= 1 << v;
            self.run(depth + 1);
            self.used &= !(1 << v);
        }
    }
}

fn canonical_rows(adj: &[u16], n: usize) -> Vec<u16> {
    debug_assert!(n <= 16);
    if n <= 1 {
        return vec![0; n];
    }
    // seed with the identity labeling, then branch and bound
    let mut identity = vec![0u16; n];
    for k in 1..n {
        for j in 0..k {
            identity[k] |= ((adj[k] >> j & 1) as u16) << j;
        }
    }
    let mut search = CanonSearch {
        adj,
        n,
        perm: vec![usize::MAX; n],
        cur: vec![0u16; n],
        used: 0,
        best: identity,
    };
    search.run(0);
    search.best
}

/// The canonical key of a graph, equal across isomorphic graphs and distinct
/// otherwise. Supported up to order 11 (55 triangle bits).
pub fn canonical_key(g: &Graph) -> Result<u64> {
    let n = g.order();
    if n > 11 {
        return Err(Error::EnumerationTooLarge { limit: 11, requested: n });
    }
    let mut adj = vec![0u16; n];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    Ok(pack(&canonical_rows(&adj, n)))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() {
        return Ok(false);
    }
    Ok(canonical_key(a)? == canonical_key(b)?)
}

/// Predicates an enumeration stream can be filtered by.
#[derive(Clone, Debug)]
pub enum Filter {
    PatternFree(Pattern),
    TTough(Rational),
    HasCycle,
    NonHamiltonian,
}

impl Filter {
    fn accepts(&self, g: &Graph) -> bool {
        match self {
            Filter::PatternFree(p) => is_free(g, &p.graph()),
            Filter::TTough(t) => is_t_tough(g, *t).expect("validated nonnegative").holds(),
            Filter::HasCycle => g.has_cycle(),
            Filter::NonHamiltonian => hamiltonian_cycle(g).is_none(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct EnumerationSpec {
    pub n: usize,
    pub connected_only: bool,
    pub filters: Vec<Filter>,
}

/// Yields one representative per isomorphism class, ascending by canonical
/// key, filtered by the spec.
pub fn enumerate_graphs(spec: &EnumerationSpec) -> Result<impl Iterator<Item = Graph>> {
    for filter in &spec.filters {
        if let Filter::TTough(t) = filter {
            if t.is_negative() {
                return Err(Error::NegativeValue);
            }
        }
    }
    let keys = enumerate_keys(spec.n, spec.connected_only)?;
    let n = spec.n;
    let filters = spec.filters.clone();
    Ok(keys
        .into_iter()
        .map(move |key| graph_from_key(key, n))
        .filter(move |g| filters.iter().all(|f| f.accepts(g))))
}

fn enumerate_keys(n: usize, connected_only: bool) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::TooFewVertices { need: 1, have: 0 });
    }
    if n > HARD_ORDER_LIMIT {
        return Err(Error::EnumerationTooLarge {
            limit: HARD_ORDER_LIMIT,
            requested: n,
        });
    }
    let mut level: BTreeSet<u64> = BTreeSet::new();
    level.insert(0); // the one-vertex graph
    for k in 1..n {
        let mut next = BTreeSet::new();
        for &key in &level {
            let rows = unpack(key, k);
            let mut adj = masks_from_rows(&rows);
            adj.push(0);
            let start_mask: u16 = if connected_only { 1 } else { 0 };
            for mask in start_mask..(1u16 << k) {
                adj[k] = mask;
                for j in 0..k {
                    if mask >> j & 1 == 1 {
                        adj[j] |= 1 << k;
                    }
                }
                next.insert(pack(&canonical_rows(&adj, k + 1)));
                for j in 0..k {
                    adj[j] &= !(1u16 << k);
                }
            }
        }
        level = next;
    }
    Ok(level.into_iter().collect())
}

/// A seeded Erdős–Rényi graph: each pair `(i, j)`, `i < j` in ascending
/// order, draws one 64-bit word from a ChaCha8 stream seeded with `seed` and
/// keeps the edge when the draw falls below `p`. Identical `(n, p, seed)`
/// give identical graphs on every platform.
pub fn random_graph(n: usize, p: Rational, seed: u64) -> Result<Graph> {
    if p.is_negative() || p.cmp_ratio(1, 1) == std::cmp::Ordering::Greater {
        return Err(Error::InvalidProbability);
    }
    let threshold = (p.num() as u128) * (1u128 << 64) / (p.den() as u128);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            if (rng.next_u64() as u128) < threshold {
                g.set_edge(i, j);
            }
        }
    }
    Ok(g)
}
