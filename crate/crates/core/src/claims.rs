//! Executable checks for the structural claims the library revolves around.
//!
//! Every check turns a universally quantified statement about one graph into
//! a verdict: `pass`, `fail` with a reproducible witness, or
//! `hypotheses-not-met` when the statement's preconditions do not apply.
//! A `fail` from the registry on any graph is a counterexample to a proven
//! statement, i.e. an implementation bug — the suites in this crate lean on
//! that as their master regression property.
//!
//! Claim registry:
//!   THM1 — 3-tough graphs free of the one-edge-plus-three-isolated-vertices
//!          pattern (at least 3 vertices) are hamiltonian.
//!   L1.5 — minimum degree at least (n+1)/2 forces hamiltonian-connectedness.
//!   L2.2 — a t-tough graph with δ > n/(t+1) − 1 is hamiltonian (t = τ(G)).
//!   L2.3 — 1-tough graphs free of P₄, K₁∪P₃ or K₂∪2K₁ are hamiltonian.
//!   L2.5 — in a connected (K₂∪3K₁)-free graph, a cut with ≥ 3 components
//!          and a nontrivial one has exactly 3, nontrivial parts (K₂∪K₁)-free.
//!   L2.6 — in a (K₂∪K₁)-free graph every cut leaves only trivial components.
//!   L2.7 — (K₂∪K₁)-free with α ≤ n/(t+1) forces δ ≥ n − n/(t+1).
//!   C2a–C2d, C3, C4a, C4b — properties of components left by a longest
//!          cycle; see `check_longest_cycle_claims`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::families::Pattern;
use crate::graph::Graph;
use crate::hamilton::{hamiltonian_cycle, hamiltonian_path_between, longest_cycle};
use crate::independence::independence_number;
use crate::path::OrientedCycle;
use crate::pattern::{find_induced, is_free};
use crate::rational::Rational;
use crate::toughness::{is_t_tough, toughness_exact, ToughnessValue};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum ClaimId {
    Thm1,
    L1_5,
    L2_2,
    L2_3,
    L2_5,
    L2_6,
    L2_7,
    C2a,
    C2b,
    C2c,
    C2d,
    C3,
    C4a,
    C4b,
}

impl ClaimId {
    pub const REGISTRY: [ClaimId; 14] = [
        ClaimId::Thm1,
        ClaimId::L1_5,
        ClaimId::L2_2,
        ClaimId::L2_3,
        ClaimId::L2_5,
        ClaimId::L2_6,
        ClaimId::L2_7,
        ClaimId::C2a,
        ClaimId::C2b,
        ClaimId::C2c,
        ClaimId::C2d,
        ClaimId::C3,
        ClaimId::C4a,
        ClaimId::C4b,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClaimId::Thm1 => "THM1",
            ClaimId::L1_5 => "L1.5",
            ClaimId::L2_2 => "L2.2",
            ClaimId::L2_3 => "L2.3",
            ClaimId::L2_5 => "L2.5",
            ClaimId::L2_6 => "L2.6",
            ClaimId::L2_7 => "L2.7",
            ClaimId::C2a => "C2a",
            ClaimId::C2b => "C2b",
            ClaimId::C2c => "C2c",
            ClaimId::C2d => "C2d",
            ClaimId::C3 => "C3",
            ClaimId::C4a => "C4a",
            ClaimId::C4b => "C4b",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        ClaimId::REGISTRY
            .iter()
            .find(|c| c.name().to_ascii_lowercase() == lower)
            .copied()
            .ok_or_else(|| Error::UnknownClaim(s.to_owned()))
    }
}

impl Serialize for ClaimId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Verdict {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "hypotheses-not-met")]
    HypothesesNotMet,
}

/// Structured counterexample data; every variant re-checks as a violation of
/// the claim it belongs to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Hypotheses hold but no spanning cycle exists (the graph is the witness).
    NoHamiltonianCycle {},
    /// No spanning path joins this pair.
    NotHamiltonianConnected { u: usize, v: usize },
    /// A cut with a nontrivial component split the graph into more than three parts.
    ExtraComponents { cut: Vec<usize>, components: usize },
    /// A nontrivial component of `G − cut` contains the smaller forbidden pattern.
    ComponentWithPattern {
        cut: Vec<usize>,
        component: Vec<usize>,
        embedding: Vec<usize>,
    },
    /// A cut left a component with at least two vertices.
    NontrivialComponent { cut: Vec<usize>, component: Vec<usize> },
    /// Minimum degree fell below the guaranteed bound.
    DegreeBelowBound { vertex: usize, degree: usize },
    /// Two attachments of one leftover component are consecutive on the cycle.
    ConsecutiveAttachments { component: Vec<usize>, x: usize, y: usize },
    /// The successors of two attachments are adjacent.
    AdjacentSuccessors {
        component: Vec<usize>,
        x: usize,
        y: usize,
        x_succ: usize,
        y_succ: usize,
    },
    /// An attachment set that is a cut set fell below twice the toughness.
    AttachmentsBelowToughness {
        component: Vec<usize>,
        attachments: Vec<usize>,
    },
    /// More than three components remain outside the longest cycle.
    TooManyLeftoverComponents { count: usize },
    /// A forbidden adjacency from the rewiring checks; `other` is the cycle
    /// neighbor (successor for C4a, predecessor for C4b) of `w1`.
    ForbiddenAdjacency {
        component: Vec<usize>,
        w: usize,
        z: usize,
        w1: usize,
        z_succ: usize,
        other: usize,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub claim: ClaimId,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ClaimReport {
    fn pass(claim: ClaimId) -> Self {
        ClaimReport {
            claim,
            verdict: Verdict::Pass,
            witness: None,
            note: None,
        }
    }

    fn fail(claim: ClaimId, witness: Witness) -> Self {
        ClaimReport {
            claim,
            verdict: Verdict::Fail,
            witness: Some(witness),
            note: None,
        }
    }

    fn hnm(claim: ClaimId, note: &str) -> Self {
        ClaimReport {
            claim,
            verdict: Verdict::HypothesesNotMet,
            witness: None,
            note: Some(note.to_owned()),
        }
    }

    pub fn failed(&self) -> bool {
        self.verdict == Verdict::Fail
    }
}

/// Subset scans are exact and exponential; beyond this order the scanning
/// checks report `hypotheses-not-met` with an explanatory note instead of
/// running for days.
pub const SUBSET_SCAN_LIMIT: usize = 20;

fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    debug_assert!(n <= SUBSET_SCAN_LIMIT);
    (0u64..(1u64 << n)).map(move |mask| {
        let mut s = VertexSet::empty(n);
        let mut m = mask;
        while m != 0 {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            s.insert(b);
        }
        s
    })
}

/// THM1: 3-tough and free of the five-vertex one-edge pattern implies
/// hamiltonian (for n ≥ 3). A `fail` would be an actual counterexample.
pub fn check_theorem1(g: &Graph) -> ClaimReport {
    let claim = ClaimId::Thm1;
    if g.order() < 3 {
        return ClaimReport::hnm(claim, "fewer than 3 vertices");
    }
    if !is_t_tough(g, Rational::integer(3)).expect("3 >= 0").holds() {
        return ClaimReport::hnm(claim, "not 3-tough");
    }
    if !is_free(g, &Pattern::K2U3K1.graph()) {
        return ClaimReport::hnm(claim, "contains an induced k2u3k1");
    }
    if hamiltonian_cycle(g).is_some() {
        ClaimReport::pass(claim)
    } else {
        ClaimReport::fail(claim, Witness::NoHamiltonianCycle {})
    }
}

/// L2.5: in a connected (K₂∪3K₁)-free graph, any vertex cut producing at
/// least three components one of which is nontrivial produces exactly three,
/// and each nontrivial component avoids the K₂∪K₁ pattern. Full subset scan.
pub fn check_cut_structure(g: &Graph) -> ClaimReport {
    let claim = ClaimId::L2_5;
    if !g.is_connected() {
        return ClaimReport::hnm(claim, "not connected");
    }
    if !is_free(g, &Pattern::K2U3K1.graph()) {
        return ClaimReport::hnm(claim, "contains an induced k2u3k1");
    }
    let n = g.order();
    if n > SUBSET_SCAN_LIMIT {
        return ClaimReport::hnm(claim, "order exceeds the exhaustive subset-scan limit");
    }
    let small_pattern = Pattern::K2UK1.graph();
    for s in subsets(n) {
        if s.len() == n {
            continue;
        }
        let parts = g.components_within(&s.complement());
        if parts.len() < 3 || parts.iter().all(|p| p.len() == 1) {
            continue;
        }
        if parts.len() > 3 {
            return ClaimReport::fail(
                claim,
                Witness::ExtraComponents {
                    cut: s.to_vec(),
                    components: parts.len(),
                },
            );
        }
        for part in parts.iter().filter(|p| p.len() >= 2) {
            let (sub, map) = g.induced(part).expect("component is in range");
            if let Some(embedding) = find_induced(&small_pattern, &sub) {
                return ClaimReport::fail(
                    claim,
                    Witness::ComponentWithPattern {
                        cut: s.to_vec(),
                        component: part.to_vec(),
                        embedding: embedding.mapping().iter().map(|&i| map[i]).collect(),
                    },
                );
            }
        }
    }
    ClaimReport::pass(claim)
}

/// L2.6: in a (K₂∪K₁)-free graph, removing any cut set leaves only isolated
/// vertices. Full subset scan.
pub fn check_trivial_components(g: &Graph) -> ClaimReport {
    let claim = ClaimId::L2_6;
    if !is_free(g, &Pattern::K2UK1.graph()) {
        return ClaimReport::hnm(claim, "contains an induced k2uk1");
    }
    let n = g.order();
    if n > SUBSET_SCAN_LIMIT {
        return ClaimReport::hnm(claim, "order exceeds the exhaustive subset-scan limit");
    }
    for s in subsets(n) {
        if s.len() == n {
            continue;
        }
        let parts = g.components_within(&s.complement());
        if parts.len() < 2 {
            continue;
        }
        if let Some(part) = parts.iter().find(|p| p.len() >= 2) {
            return ClaimReport::fail(
                claim,
                Witness::NontrivialComponent {
                    cut: s.to_vec(),
                    component: part.to_vec(),
                },
            );
        }
    }
    ClaimReport::pass(claim)
}

/// L2.7: a (K₂∪K₁)-free graph with `α(G) ≤ n/(t+1)` has
/// `δ(G) ≥ n − n/(t+1)`. Exact rational comparisons; `t > 0` required.
pub fn check_min_degree_bound(g: &Graph, t: Rational) -> Result<ClaimReport> {
    let claim = ClaimId::L2_7;
    if t <= Rational::zero() {
        return Err(Error::NotPositive);
    }
    if !is_free(g, &Pattern::K2UK1.graph()) {
        return Ok(ClaimReport::hnm(claim, "contains an induced k2uk1"));
    }
    let n = g.order() as i64;
    if n == 0 {
        return Ok(ClaimReport::pass(claim));
    }
    let alpha = independence_number(g).size as i64;
    // alpha <= n / (t+1)  <=>  alpha * (num + den) <= n * den
    let (num, den) = (t.num(), t.den());
    if alpha * (num + den) > n * den {
        return Ok(ClaimReport::hnm(claim, "independence number exceeds n/(t+1)"));
    }
    // delta >= n - n/(t+1)  <=>  delta * (num + den) >= n * num
    let (vertex, degree) = g
        .vertices()
        .map(|v| (v, g.degree(v)))
        .min_by_key(|&(_, d)| d)
        .expect("n > 0");
    if (degree as i64) * (num + den) >= n * num {
        Ok(ClaimReport::pass(claim))
    } else {
        Ok(ClaimReport::fail(claim, Witness::DegreeBelowBound { vertex, degree }))
    }
}

/// L1.5, L2.2 and L2.3 on one graph, in that order.
pub fn check_sufficient_conditions(g: &Graph) -> Vec<ClaimReport> {
    let n = g.order();
    if n < 3 {
        return vec![
            ClaimReport::hnm(ClaimId::L1_5, "fewer than 3 vertices"),
            ClaimReport::hnm(ClaimId::L2_2, "fewer than 3 vertices"),
            ClaimReport::hnm(ClaimId::L2_3, "fewer than 3 vertices"),
        ];
    }
    let delta = g.min_degree().expect("n >= 3");
    let hamiltonian = hamiltonian_cycle(g).is_some();

    // L1.5: 2δ ≥ n + 1 forces hamiltonian-connectedness
    let l15 = if 2 * delta >= n + 1 {
        let mut report = ClaimReport::pass(ClaimId::L1_5);
        'pairs: for u in 0..n {
            for v in u + 1..n {
                if hamiltonian_path_between(g, u, v)
                    .expect("distinct, in-range endpoints")
                    .is_none()
                {
                    report = ClaimReport::fail(
                        ClaimId::L1_5,
                        Witness::NotHamiltonianConnected { u, v },
                    );
                    break 'pairs;
                }
            }
        }
        report
    } else {
        ClaimReport::hnm(ClaimId::L1_5, "minimum degree below (n+1)/2")
    };

    // L2.2 with t instantiated as τ(G); complete graphs satisfy the degree
    // hypothesis for every t
    let l22 = match toughness_exact(g).value {
        ToughnessValue::Infinite => {
            if hamiltonian {
                ClaimReport::pass(ClaimId::L2_2)
            } else {
                ClaimReport::fail(ClaimId::L2_2, Witness::NoHamiltonianCycle {})
            }
        }
        ToughnessValue::Finite(tau) => {
            // delta > n/(t+1) - 1  <=>  (delta + 1)(num + den) > n * den
            let (num, den) = (tau.num(), tau.den());
            if (delta as i64 + 1) * (num + den) > (n as i64) * den {
                if hamiltonian {
                    ClaimReport::pass(ClaimId::L2_2)
                } else {
                    ClaimReport::fail(ClaimId::L2_2, Witness::NoHamiltonianCycle {})
                }
            } else {
                ClaimReport::hnm(ClaimId::L2_2, "minimum degree at most n/(t+1) - 1")
            }
        }
    };

    // L2.3 over the three maximal excluded patterns; freeness for an induced
    // subpattern implies freeness for the pattern itself, so these three
    // cover the whole family
    let l23 = {
        let free_r = [Pattern::P4, Pattern::K1UP3, Pattern::K2U2K1]
            .into_iter()
            .find(|p| is_free(g, &p.graph()));
        match free_r {
            None => ClaimReport::hnm(ClaimId::L2_3, "contains all three excluded patterns"),
            Some(r) => {
                if !is_t_tough(g, Rational::integer(1)).expect("1 >= 0").holds() {
                    ClaimReport::hnm(ClaimId::L2_3, "not 1-tough")
                } else if hamiltonian {
                    ClaimReport::pass(ClaimId::L2_3)
                } else {
                    let mut report = ClaimReport::fail(ClaimId::L2_3, Witness::NoHamiltonianCycle {});
                    report.note = Some(format!("free of {}", r.name()));
                    report
                }
            }
        }
    };

    vec![l15, l22, l23]
}

/// Components of `g − V(c)` with their attachment sets, ordered by smallest
/// member.
fn leftover_components(g: &Graph, c: &OrientedCycle) -> Vec<(VertexSet, Vec<usize>)> {
    let cycle_set = c.vertex_set(g.order());
    g.components_within(&cycle_set.complement())
        .into_iter()
        .map(|h| {
            let att = g.neighborhood_of_set(&h).intersection(&cycle_set).to_vec();
            (h, att)
        })
        .collect()
}

/// C2b relative to a given cycle: no component outside it has two
/// attachments consecutive on the cycle.
pub fn eval_c2b(g: &Graph, c: &OrientedCycle) -> ClaimReport {
    let claim = ClaimId::C2b;
    for (h, att) in leftover_components(g, c) {
        let att_set: std::collections::BTreeSet<usize> = att.iter().copied().collect();
        for &x in &att {
            let y = c.successor(x).expect("attachment on cycle");
            if att_set.contains(&y) {
                return ClaimReport::fail(
                    claim,
                    Witness::ConsecutiveAttachments { component: h.to_vec(), x, y },
                );
            }
        }
    }
    ClaimReport::pass(claim)
}

/// C2c relative to a given cycle: successors of attachments of one component
/// form an independent set.
pub fn eval_c2c(g: &Graph, c: &OrientedCycle) -> ClaimReport {
    let claim = ClaimId::C2c;
    for (h, att) in leftover_components(g, c) {
        for &x in &att {
            for &y in &att {
                if x == y {
                    continue;
                }
                let x_succ = c.successor(x).expect("on cycle");
                let y_succ = c.successor(y).expect("on cycle");
                if g.has_edge(x_succ, y_succ) {
                    return ClaimReport::fail(
                        claim,
                        Witness::AdjacentSuccessors {
                            component: h.to_vec(),
                            x,
                            y,
                            x_succ,
                            y_succ,
                        },
                    );
                }
            }
        }
    }
    ClaimReport::pass(claim)
}

/// C2a relative to a given cycle: whenever the attachment set of a leftover
/// component is itself a cut set, it has at least `2τ(G)` vertices. The
/// toughness bound only derives from attachment sets that actually cut the
/// graph, so other components are skipped; if none qualifies the verdict is
/// `hypotheses-not-met`.
pub fn eval_c2a(g: &Graph, c: &OrientedCycle, tau: Rational) -> ClaimReport {
    let claim = ClaimId::C2a;
    let mut applicable = false;
    for (h, att) in leftover_components(g, c) {
        let att_vs = VertexSet::from_members(g.order(), att.iter().copied()).expect("in range");
        if g.component_count_without(&att_vs) < 2 {
            continue;
        }
        applicable = true;
        // |att| >= 2 tau  <=>  |att| * den >= 2 num
        if (att.len() as i64) * tau.den() < 2 * tau.num() {
            return ClaimReport::fail(
                claim,
                Witness::AttachmentsBelowToughness {
                    component: h.to_vec(),
                    attachments: att,
                },
            );
        }
    }
    if applicable {
        ClaimReport::pass(claim)
    } else {
        ClaimReport::hnm(claim, "no attachment set is a cut set")
    }
}

/// C2d relative to a given cycle: every leftover component is a single
/// vertex.
pub fn eval_c2d(g: &Graph, c: &OrientedCycle) -> ClaimReport {
    let claim = ClaimId::C2d;
    for (h, _) in leftover_components(g, c) {
        if h.len() >= 2 {
            return ClaimReport::fail(
                claim,
                Witness::NontrivialComponent {
                    cut: c.vertex_set(g.order()).to_vec(),
                    component: h.to_vec(),
                },
            );
        }
    }
    ClaimReport::pass(claim)
}

/// C3 relative to a given cycle: at most three components remain outside it.
pub fn eval_c3(g: &Graph, c: &OrientedCycle) -> ClaimReport {
    let claim = ClaimId::C3;
    let count = g.component_count_without(&c.vertex_set(g.order()));
    if count <= 3 {
        ClaimReport::pass(claim)
    } else {
        ClaimReport::fail(claim, Witness::TooManyLeftoverComponents { count })
    }
}

/// Shared scan for the two rewiring claims. `forward` selects the C4a
/// reading (order `w, z, w₁`, test `z⁺ ~ w₁⁺`) versus C4b (order
/// `w, w₁, z`, test `z⁺ ~ w₁⁻`). Placements where `w₁` collides with
/// `w`, `z`, `w⁺` or `z⁺` are excluded; those configurations degenerate and
/// are covered by the consecutive-attachment and successor-independence
/// claims instead.
fn eval_claim4(g: &Graph, c: &OrientedCycle, forward: bool) -> ClaimReport {
    let claim = if forward { ClaimId::C4a } else { ClaimId::C4b };
    let offset = |anchor: usize, v: usize| {
        let n = c.len();
        (c.position(v).expect("on cycle") + n - c.position(anchor).expect("on cycle")) % n
    };
    let cycle_set = c.vertex_set(g.order());
    for (h, att) in leftover_components(g, c) {
        for &w in &att {
            let w_succ = c.successor(w).expect("on cycle");
            let candidates = g.neighbors(w_succ).intersection(&cycle_set).to_vec();
            for &z in &att {
                if z == w {
                    continue;
                }
                let z_succ = c.successor(z).expect("on cycle");
                for &w1 in &candidates {
                    if [w, z, w_succ, z_succ].contains(&w1) {
                        continue;
                    }
                    let ordered = if forward {
                        offset(w, z) < offset(w, w1)
                    } else {
                        offset(w, w1) < offset(w, z)
                    };
                    if !ordered {
                        continue;
                    }
                    let other = if forward {
                        c.successor(w1).expect("on cycle")
                    } else {
                        c.predecessor(w1).expect("on cycle")
                    };
                    if g.has_edge(z_succ, other) {
                        return ClaimReport::fail(
                            claim,
                            Witness::ForbiddenAdjacency {
                                component: h.to_vec(),
                                w,
                                z,
                                w1,
                                z_succ,
                                other,
                            },
                        );
                    }
                }
            }
        }
    }
    ClaimReport::pass(claim)
}

pub fn eval_c4a(g: &Graph, c: &OrientedCycle) -> ClaimReport {
    eval_claim4(g, c, true)
}

pub fn eval_c4b(g: &Graph, c: &OrientedCycle) -> ClaimReport {
    eval_claim4(g, c, false)
}

/// Runs the longest-cycle claims C2a, C2b, C2c, C2d, C3, C4a, C4b (in that
/// order) against the exact longest cycle.
///
/// Applies to connected non-hamiltonian graphs containing a cycle; anything
/// else gets `hypotheses-not-met` across the board. C2b, C2c, C4a and C4b
/// rest on cycle maximality alone and are checked unconditionally. C2d and
/// C3 are proven under 3-toughness and k2u3k1-freeness, so they are gated on
/// those hypotheses.
pub fn check_longest_cycle_claims(g: &Graph) -> Vec<ClaimReport> {
    const CYCLE_CLAIMS: [ClaimId; 7] = [
        ClaimId::C2a,
        ClaimId::C2b,
        ClaimId::C2c,
        ClaimId::C2d,
        ClaimId::C3,
        ClaimId::C4a,
        ClaimId::C4b,
    ];
    let all_hnm = |note: &str| CYCLE_CLAIMS.iter().map(|&c| ClaimReport::hnm(c, note)).collect();
    if !g.is_connected() {
        return all_hnm("not connected");
    }
    if !g.has_cycle() {
        return all_hnm("contains no cycle");
    }
    if hamiltonian_cycle(g).is_some() {
        return all_hnm("hamiltonian");
    }
    let cycle = longest_cycle(g).expect("a cycle exists").cycle;
    let tau = toughness_exact(g)
        .value
        .as_finite()
        .expect("non-hamiltonian graphs on >= 3 vertices are not complete");

    let theorem_hypotheses = is_t_tough(g, Rational::integer(3)).expect("3 >= 0").holds()
        && is_free(g, &Pattern::K2U3K1.graph());
    let gated = |claim: ClaimId, eval: &dyn Fn() -> ClaimReport| {
        if theorem_hypotheses {
            eval()
        } else {
            ClaimReport::hnm(claim, "needs 3-toughness and k2u3k1-freeness")
        }
    };

    vec![
        eval_c2a(g, &cycle, tau),
        eval_c2b(g, &cycle),
        eval_c2c(g, &cycle),
        gated(ClaimId::C2d, &|| eval_c2d(g, &cycle)),
        gated(ClaimId::C3, &|| eval_c3(g, &cycle)),
        eval_c4a(g, &cycle),
        eval_c4b(g, &cycle),
    ]
}

/// The `t` grid used when L2.7 is requested without an explicit `t`.
pub const L2_7_GRID: [(i64, i64); 4] = [(1, 2), (1, 1), (2, 1), (3, 1)];

/// Runs the requested checks on one graph; reports come back in registry
/// order with duplicates removed.
pub fn run_checks(g: &Graph, checks: &[ClaimId]) -> Vec<ClaimReport> {
    use ClaimId::*;
    let wanted: Vec<ClaimId> = ClaimId::REGISTRY
        .iter()
        .copied()
        .filter(|c| checks.contains(c))
        .collect();
    let mut out = Vec::new();
    let mut sufficient: Option<Vec<ClaimReport>> = None;
    let mut cycle_claims: Option<Vec<ClaimReport>> = None;
    for claim in wanted {
        match claim {
            Thm1 => out.push(check_theorem1(g)),
            L2_5 => out.push(check_cut_structure(g)),
            L2_6 => out.push(check_trivial_components(g)),
            L2_7 => out.push(min_degree_bound_over_grid(g)),
            L1_5 | L2_2 | L2_3 => {
                let reports = sufficient.get_or_insert_with(|| check_sufficent_memo(g));
                let idx = match claim {
                    L1_5 => 0,
                    L2_2 => 1,
                    _ => 2,
                };
                out.push(reports[idx].clone());
            }
            C2a | C2b | C2c | C2d | C3 | C4a | C4b => {
                let reports = cycle_claims.get_or_insert_with(|| check_longest_cycle_claims(g));
                let idx = [C2a, C2b, C2c, C2d, C3, C4a, C4b]
                    .iter()
                    .position(|&c| c == claim)
                    .expect("cycle claim");
                out.push(reports[idx].clone());
            }
        }
    }
    out
}

fn check_sufficent_memo(g: &Graph) -> Vec<ClaimReport> {
    check_sufficient_conditions(g)
}

/// L2.7 across the fixed grid: fail dominates, then pass, then
/// hypotheses-not-met.
fn min_degree_bound_over_grid(g: &Graph) -> ClaimReport {
    let mut aggregate = ClaimReport::hnm(ClaimId::L2_7, "hypotheses failed for every t in the grid");
    for (num, den) in L2_7_GRID {
        let t = Rational::new(num, den).expect("den > 0");
        let report = check_min_degree_bound(g, t).expect("grid values are positive");
        match report.verdict {
            Verdict::Fail => return report,
            Verdict::Pass => aggregate = report,
            Verdict::HypothesesNotMet => {}
        }
    }
    aggregate
}
