//! Cycle-lengthening transformations.
//!
//! Given a cycle `C` and a component `H` of the rest of the graph, five rules
//! each describe a configuration that yields a strictly longer cycle through
//! all of `V(C)` plus a path of `H`. On an exact longest cycle none of them
//! can apply; conversely any hit against a shorter cycle is a constructive
//! lengthening step.
//!
//! Notation used throughout: `v⁺`/`v⁻` are cycle successor and predecessor,
//! attachments of `H` are the cycle vertices adjacent to `H`, and `h₁`, `h₂`
//! are neighbors inside `H` of two attachments, joined by a shortest path `P`
//! within `H` (lowest-id breadth-first tie-break). Scans run in ascending
//! vertex-id order, components ordered by smallest member, so outcomes are
//! reproducible.
//!
//! The rules:
//!   R1: attachments `x`, `y = x⁺` consecutive         → `x h₁ P h₂ y →C x`
//!   R2: attachments `x`, `y` with `x⁺y⁺ ∈ E`          → `x h₁ P h₂ y ←C x⁺ y⁺ →C x`
//!   R3: outside vertex `w` adjacent to `u₁`, `u₂ = u₁⁺` → `u₁ w u₂ →C u₁`
//!   R4: attachments `w`, `z`, `w₁ ∈ N_C(w⁺)` in cycle order `w, z, w₁`
//!       with `z⁺ ~ w₁⁺`   → `w ←C w₁⁺ z⁺ →C w₁ w⁺ →C z h₂ P h₁ w`
//!   R5: same with order `w, w₁, z` and `z⁺ ~ w₁⁻`
//!       → `w ←C z⁺ w₁⁻ ←C w⁺ w₁ →C z h₂ P h₁ w`
//!
//! A rule-5 configuration read from the opposite direction is a rule-4
//! configuration with the roles of `w` and `z` swapped, so under the fixed
//! R1–R5 priority the last rule is effectively a direction-reversed safety
//! net; it is still scanned and individually testable.
//!
//! Degenerate placements `w₁ ∈ {w, z, w⁺, z⁺}` are excluded from R4/R5: the
//! splice formulas collapse there, and the genuine cases they would cover
//! are already R1/R2 configurations.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hamilton::{hamiltonian_path_between, is_hamiltonian_connected};
use crate::menger::{disjoint_paths, two_paths_to_component};
use crate::path::OrientedCycle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
    R5,
}

impl std::fmt::Display for Rule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

/// The vertices instantiating a fired rule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum RuleWitness {
    R1 { x: usize, y: usize, h1: usize, h2: usize },
    R2 { x: usize, y: usize, x_succ: usize, y_succ: usize, h1: usize, h2: usize },
    R3 { u1: usize, u2: usize, w: usize },
    R4 { w: usize, z: usize, w1: usize, z_succ: usize, w1_succ: usize, h1: usize, h2: usize },
    R5 { w: usize, z: usize, w1: usize, z_succ: usize, w1_pred: usize, h1: usize, h2: usize },
}

#[derive(Clone, Debug)]
pub enum ExtensionOutcome {
    Extended {
        rule: Rule,
        witness: RuleWitness,
        cycle: OrientedCycle,
    },
    NotApplicable,
}

impl ExtensionOutcome {
    pub fn extended(&self) -> bool {
        matches!(self, ExtensionOutcome::Extended { .. })
    }
}

/// One step of an extension trace.
#[derive(Clone, Debug, Serialize)]
pub struct ExtensionStep {
    pub rule: Rule,
    pub witness: RuleWitness,
    pub old_len: usize,
    pub new_len: usize,
}

struct Context {
    cycle_set: VertexSet,
    components: Vec<VertexSet>,
}

fn context(g: &Graph, c: &OrientedCycle) -> Result<Context> {
    // re-validate against this graph; the cycle may come from anywhere
    OrientedCycle::new(g, c.vertices().to_vec())?;
    let cycle_set = c.vertex_set(g.order());
    let components = g.components_within(&cycle_set.complement());
    if components.is_empty() {
        return Err(Error::SpanningCycle);
    }
    Ok(Context { cycle_set, components })
}

/// Cycle vertices adjacent to the component, ascending.
fn attachments(g: &Graph, ctx: &Context, h: &VertexSet) -> Vec<usize> {
    g.neighborhood_of_set(h).intersection(&ctx.cycle_set).to_vec()
}

/// Smallest neighbor of `x` inside `h`.
fn anchor_in(g: &Graph, x: usize, h: &VertexSet) -> usize {
    g.neighbors(x)
        .intersection(h)
        .smallest()
        .expect("attachment has a neighbor in the component")
}

fn inner_path(g: &Graph, h: &VertexSet, from: usize, to: usize) -> Vec<usize> {
    g.shortest_path_within(from, to, h)
        .expect("component is connected")
}

type RuleHit = Option<(RuleWitness, Vec<usize>)>;

fn scan_rule1(g: &Graph, c: &OrientedCycle, ctx: &Context) -> RuleHit {
    for h in &ctx.components {
        let att = attachments(g, ctx, h);
        let att_set: std::collections::BTreeSet<usize> = att.iter().copied().collect();
        for &x in &att {
            let y = c.successor(x).expect("x on cycle");
            if !att_set.contains(&y) {
                continue;
            }
            let h1 = anchor_in(g, x, h);
            let h2 = anchor_in(g, y, h);
            let p = inner_path(g, h, h1, h2);
            let mut seq = vec![x];
            seq.extend(&p);
            let tail = c.forward_segment(y, x);
            seq.extend(&tail[..tail.len() - 1]);
            return Some((RuleWitness::R1 { x, y, h1, h2 }, seq));
        }
    }
    None
}

fn scan_rule2(g: &Graph, c: &OrientedCycle, ctx: &Context) -> RuleHit {
    for h in &ctx.components {
        let att = attachments(g, ctx, h);
        for &x in &att {
            let x_succ = c.successor(x).expect("on cycle");
            for &y in &att {
                if y == x {
                    continue;
                }
                let y_succ = c.successor(y).expect("on cycle");
                if !g.has_edge(x_succ, y_succ) {
                    continue;
                }
                let h1 = anchor_in(g, x, h);
                let h2 = anchor_in(g, y, h);
                let p = inner_path(g, h, h1, h2);
                let mut seq = vec![x];
                seq.extend(&p);
                seq.extend(c.backward_segment(y, x_succ));
                let tail = c.forward_segment(y_succ, x);
                seq.extend(&tail[..tail.len() - 1]);
                return Some((
                    RuleWitness::R2 { x, y, x_succ, y_succ, h1, h2 },
                    seq,
                ));
            }
        }
    }
    None
}

fn scan_rule3(g: &Graph, c: &OrientedCycle, ctx: &Context) -> RuleHit {
    for w in ctx.cycle_set.complement().iter() {
        // cycle vertices in ascending id order
        for u1 in ctx.cycle_set.iter() {
            let u2 = c.successor(u1).expect("on cycle");
            if g.has_edge(w, u1) && g.has_edge(w, u2) {
                let mut seq = vec![u1, w];
                let tail = c.forward_segment(u2, u1);
                seq.extend(&tail[..tail.len() - 1]);
                return Some((RuleWitness::R3 { u1, u2, w }, seq));
            }
        }
    }
    None
}

/// Position of `v` measured forward from `anchor` (which gets 0).
fn offset_from(c: &OrientedCycle, anchor: usize, v: usize) -> usize {
    let n = c.len();
    let pa = c.position(anchor).expect("on cycle");
    let pv = c.position(v).expect("on cycle");
    (pv + n - pa) % n
}

fn scan_rule4(g: &Graph, c: &OrientedCycle, ctx: &Context) -> RuleHit {
    for h in &ctx.components {
        let att = attachments(g, ctx, h);
        for &w in &att {
            let w_succ = c.successor(w).expect("on cycle");
            let candidates = g.neighbors(w_succ).intersection(&ctx.cycle_set).to_vec();
            for &z in &att {
                if z == w {
                    continue;
                }
                let z_succ = c.successor(z).expect("on cycle");
                for &w1 in &candidates {
                    if [w, z, w_succ, z_succ].contains(&w1) {
                        continue;
                    }
                    // order w, z, w1 along the orientation
                    if offset_from(c, w, z) >= offset_from(c, w, w1) {
                        continue;
                    }
                    let w1_succ = c.successor(w1).expect("on cycle");
                    if !g.has_edge(z_succ, w1_succ) {
                        continue;
                    }
                    let h1 = anchor_in(g, w, h);
                    let h2 = anchor_in(g, z, h);
                    let p = inner_path(g, h, h2, h1);
                    let mut seq = c.backward_segment(w, w1_succ);
                    seq.extend(c.forward_segment(z_succ, w1));
                    seq.extend(c.forward_segment(w_succ, z));
                    seq.extend(&p);
                    return Some((
                        RuleWitness::R4 { w, z, w1, z_succ, w1_succ, h1, h2 },
                        seq,
                    ));
                }
            }
        }
    }
    None
}

fn scan_rule5(g: &Graph, c: &OrientedCycle, ctx: &Context) -> RuleHit {
    for h in &ctx.components {
        let att = attachments(g, ctx, h);
        for &w in &att {
            let w_succ = c.successor(w).expect("on cycle");
            let candidates = g.neighbors(w_succ).intersection(&ctx.cycle_set).to_vec();
            for &z in &att {
                if z == w {
                    continue;
                }
                let z_succ = c.successor(z).expect("on cycle");
                for &w1 in &candidates {
                    if [w, z, w_succ, z_succ].contains(&w1) {
                        continue;
                    }
                    // order w, w1, z along the orientation
                    if offset_from(c, w, w1) >= offset_from(c, w, z) {
                        continue;
                    }
                    let w1_pred = c.predecessor(w1).expect("on cycle");
                    if !g.has_edge(z_succ, w1_pred) {
                        continue;
                    }
                    let h1 = anchor_in(g, w, h);
                    let h2 = anchor_in(g, z, h);
                    let p = inner_path(g, h, h2, h1);
                    let mut seq = c.backward_segment(w, z_succ);
                    seq.extend(c.backward_segment(w1_pred, w_succ));
                    seq.extend(c.forward_segment(w1, z));
                    seq.extend(&p);
                    return Some((
                        RuleWitness::R5 { w, z, w1, z_succ, w1_pred, h1, h2 },
                        seq,
                    ));
                }
            }
        }
    }
    None
}

macro_rules! single_rule {
    ($name:ident, $scan:ident, $rule:expr) => {
        /// Scans for one rule only; see the module docs for its shape.
        pub fn $name(g: &Graph, c: &OrientedCycle) -> Result<ExtensionOutcome> {
            let ctx = context(g, c)?;
            match $scan(g, c, &ctx) {
                Some((witness, seq)) => Ok(finish(g, c, $rule, witness, seq)),
                None => Ok(ExtensionOutcome::NotApplicable),
            }
        }
    };
}

single_rule!(find_rule1, scan_rule1, Rule::R1);
single_rule!(find_rule2, scan_rule2, Rule::R2);
single_rule!(find_rule3, scan_rule3, Rule::R3);
single_rule!(find_rule4, scan_rule4, Rule::R4);
single_rule!(find_rule5, scan_rule5, Rule::R5);

fn finish(
    g: &Graph,
    old: &OrientedCycle,
    rule: Rule,
    witness: RuleWitness,
    seq: Vec<usize>,
) -> ExtensionOutcome {
    let cycle = OrientedCycle::new(g, seq).expect("rule formulas build valid cycles");
    assert!(cycle.len() > old.len(), "extensions grow the cycle");
    assert!(
        old.vertex_set(g.order()).is_subset_of(&cycle.vertex_set(g.order())),
        "extensions retain the old cycle's vertices"
    );
    ExtensionOutcome::Extended { rule, witness, cycle }
}

/// Applies the first rule that fires, in priority order R1…R5.
///
/// Errors if the cycle is invalid in `g` or already spans it.
pub fn extend_once(g: &Graph, c: &OrientedCycle) -> Result<ExtensionOutcome> {
    let ctx = context(g, c)?;
    let scans: [(&dyn Fn(&Graph, &OrientedCycle, &Context) -> RuleHit, Rule); 5] = [
        (&scan_rule1, Rule::R1),
        (&scan_rule2, Rule::R2),
        (&scan_rule3, Rule::R3),
        (&scan_rule4, Rule::R4),
        (&scan_rule5, Rule::R5),
    ];
    for (scan, rule) in scans {
        if let Some((witness, seq)) = scan(g, c, &ctx) {
            return Ok(finish(g, c, rule, witness, seq));
        }
    }
    Ok(ExtensionOutcome::NotApplicable)
}

/// Repeats `extend_once` until no rule fires or the cycle spans the graph.
/// Returns the final cycle and the trace of applied steps.
pub fn extend_to_fixpoint(g: &Graph, c: &OrientedCycle) -> Result<(OrientedCycle, Vec<ExtensionStep>)> {
    OrientedCycle::new(g, c.vertices().to_vec())?;
    let mut current = c.clone();
    let mut steps = Vec::new();
    while current.len() < g.order() {
        match extend_once(g, &current)? {
            ExtensionOutcome::Extended { rule, witness, cycle } => {
                steps.push(ExtensionStep {
                    rule,
                    witness,
                    old_len: current.len(),
                    new_len: cycle.len(),
                });
                current = cycle;
            }
            ExtensionOutcome::NotApplicable => break,
        }
        assert!(steps.len() <= g.order(), "each step grows the cycle");
    }
    Ok((current, steps))
}

fn traversable(g: &Graph, d: &VertexSet) -> Result<(Graph, Vec<usize>)> {
    let (gd, map) = g.induced(d)?;
    let ok = match gd.order() {
        0 | 1 => false,
        2 => gd.has_edge(0, 1),
        _ => is_hamiltonian_connected(&gd)?,
    };
    if ok {
        Ok((gd, map))
    } else {
        Err(Error::NotHamiltonianConnected)
    }
}

/// Builds a cycle through `u` and all of `d` from two disjoint `u`–`d`
/// paths and a hamiltonian path across the inside of `d`.
///
/// The hamiltonian-connectedness of `g[d]` is checked, not assumed. The
/// cycle covers `{u} ∪ d` plus the interiors of the two connector paths, so
/// its length is at least `|d| + 1`, and at least `|d| + 3` whenever both
/// connectors pass through intermediate vertices.
pub fn build_cycle_one_component(g: &Graph, u: usize, d: &VertexSet) -> Result<OrientedCycle> {
    g.check_vertex(u)?;
    g.check_set(d)?;
    if d.contains(u) {
        return Err(Error::VertexInsideSet(u));
    }
    if d.len() < 2 {
        return Err(Error::TooFewVertices { need: 2, have: d.len() });
    }
    let (gd, map) = traversable(g, d)?;
    let (p1, p2) = two_paths_to_component(g, u, d)?;
    let (x1, x2) = (p1.last(), p2.last());
    let local = |v: usize| map.binary_search(&v).expect("endpoint lies in d");
    let q = if gd.order() == 2 {
        vec![x1, x2]
    } else {
        hamiltonian_path_between(&gd, local(x1), local(x2))?
            .expect("hamiltonian-connected was verified")
            .vertices()
            .iter()
            .map(|&i| map[i])
            .collect()
    };
    let mut seq: Vec<usize> = p1.vertices().to_vec();
    seq.extend(&q[1..]);
    let back = p2.reversed();
    let back = back.vertices();
    seq.extend(&back[1..back.len() - 1]);
    let cycle = OrientedCycle::new(g, seq)?;
    debug_assert!(cycle.len() >= d.len() + 1);
    Ok(cycle)
}

/// Builds a cycle through all of `d1 ∪ d2` from two disjoint `d1`–`d2`
/// paths and hamiltonian paths inside each set.
///
/// Both induced subgraphs must be complete or hamiltonian-connected and the
/// two connecting paths must exist (`g` 2-connected suffices). The cycle
/// covers both sets, so its length is at least `|d1| + |d2|`; the bound
/// rises to `|d1| + |d2| + 2` exactly when both connectors have interior
/// vertices. The actual length is whatever the returned cycle reports.
pub fn build_cycle_two_components(g: &Graph, d1: &VertexSet, d2: &VertexSet) -> Result<OrientedCycle> {
    g.check_set(d1)?;
    g.check_set(d2)?;
    if !d1.is_disjoint(d2) {
        return Err(Error::SetsOverlap);
    }
    for d in [d1, d2] {
        if d.len() < 2 {
            return Err(Error::TooFewVertices { need: 2, have: d.len() });
        }
    }
    let (g1, map1) = traversable(g, d1).map_err(|_| Error::ComponentNotTraversable)?;
    let (g2, map2) = traversable(g, d2).map_err(|_| Error::ComponentNotTraversable)?;

    let routed = disjoint_paths(g, d1, d2, 2)?;
    let p1 = &routed.paths[0];
    let p2 = &routed.paths[1];
    let (x1, x2) = (p1.first(), p1.last());
    let (y1, y2) = (p2.first(), p2.last());

    let ham_path = |gd: &Graph, map: &[usize], a: usize, b: usize| -> Result<Vec<usize>> {
        let local = |v: usize| map.binary_search(&v).expect("endpoint lies in the set");
        if gd.order() == 2 {
            return Ok(vec![a, b]);
        }
        Ok(hamiltonian_path_between(gd, local(a), local(b))?
            .expect("traversability was verified")
            .vertices()
            .iter()
            .map(|&i| map[i])
            .collect())
    };
    let q1 = ham_path(&g1, &map1, x1, y1)?;
    let q2 = ham_path(&g2, &map2, x2, y2)?;

    let mut seq: Vec<usize> = p1.vertices().to_vec();
    seq.extend(&q2[1..]);
    let back2 = p2.reversed();
    let back2 = back2.vertices();
    seq.extend(&back2[1..]);
    let mut back1 = q1.clone();
    back1.reverse();
    seq.extend(&back1[1..back1.len() - 1]);
    let cycle = OrientedCycle::new(g, seq)?;
    debug_assert!(cycle.len() >= d1.len() + d2.len());
    Ok(cycle)
}
