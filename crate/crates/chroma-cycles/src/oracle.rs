//! Independent ground truth: exhaustive simple-cycle enumeration with
//! residue tabulation, the orientation condition check, and exact counting
//! for the random-ordering bound.
//!
//! Nothing here shares code with the extractors; the acceptance suite plays
//! the two against each other.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Digraph, Edge, Graph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("cycle length {len} exceeds the exhaustive-enumeration cap {cap}")]
    SizeCap { len: usize, cap: usize },
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(usize),
}

/// Visits every simple cycle of `g` exactly once, in canonical form
/// (minimum vertex first, direction with the smaller second vertex).
/// `through` restricts to cycles traversing that edge, `max_len` caps the
/// length. The callback returns `false` to stop early; the function returns
/// `true` when enumeration ran to completion.
pub fn for_each_cycle<F>(
    g: &Graph,
    through: Option<Edge>,
    max_len: Option<usize>,
    mut visit: F,
) -> bool
where
    F: FnMut(&[usize]) -> bool,
{
    let n = g.n();
    let cap = max_len.unwrap_or(n).min(n);
    if cap < 3 {
        return true;
    }
    let mut path: Vec<usize> = Vec::with_capacity(cap);
    for root in 0..n {
        path.clear();
        path.push(root);
        if !extend(g, root, cap, &mut path, 1u64 << root, through, &mut visit) {
            return false;
        }
    }
    true
}

fn extend<F>(
    g: &Graph,
    root: usize,
    cap: usize,
    path: &mut Vec<usize>,
    in_path: u64,
    through: Option<Edge>,
    visit: &mut F,
) -> bool
where
    F: FnMut(&[usize]) -> bool,
{
    let u = *path.last().unwrap();
    for w in g.neighbors(u) {
        if w == root && path.len() >= 3 && path[1] < u {
            let keep = match through {
                Some(e) => cycle_traverses(path, e),
                None => true,
            };
            if keep && !visit(path) {
                return false;
            }
        }
        if w > root && in_path & (1 << w) == 0 && path.len() < cap {
            path.push(w);
            if !extend(g, root, cap, path, in_path | (1 << w), through, visit) {
                return false;
            }
            path.pop();
        }
    }
    true
}

fn cycle_traverses(cycle: &[usize], e: Edge) -> bool {
    let n = cycle.len();
    (0..n).any(|i| Edge::new(cycle[i], cycle[(i + 1) % n]) == e)
}

/// Collects cycles into a vector; fine for desk-scale graphs.
pub fn enumerate_cycles(g: &Graph, through: Option<Edge>, max_len: Option<usize>) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_cycle(g, through, max_len, |c| {
        out.push(c.to_vec());
        true
    });
    out
}

/// Shortest cycle length, if any.
pub fn girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for_each_cycle(g, None, None, |c| {
        best = Some(best.map_or(c.len(), |b| b.min(c.len())));
        true
    });
    best
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ProfileScope {
    WholeGraph,
    ThroughEdge(Edge),
}

/// Exact count of simple cycles per length residue class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueProfile {
    pub modulus: usize,
    /// `counts[t]` = number of cycles of length t mod modulus (in scope).
    pub counts: Vec<u64>,
    pub scope: ProfileScope,
    pub total: u64,
    /// True when the enumeration budget ran out before completion; counts
    /// are then lower bounds, not exact values.
    pub truncated: bool,
}

impl ResidueProfile {
    pub fn count(&self, residue: usize) -> u64 {
        self.counts[residue % self.modulus]
    }
}

/// Tabulates cycle counts by length residue. `budget` caps the number of
/// cycles examined; exhaustion is reported via `truncated` rather than as
/// a zero count.
pub fn residue_profile(
    g: &Graph,
    r: usize,
    through: Option<Edge>,
    budget: Option<u64>,
) -> Result<ResidueProfile, OracleError> {
    if r < 2 {
        return Err(OracleError::BadModulus(r));
    }
    let mut counts = vec![0u64; r];
    let mut total = 0u64;
    let complete = for_each_cycle(g, through, None, |c| {
        counts[c.len() % r] += 1;
        total += 1;
        budget.is_none_or(|b| total < b)
    });
    Ok(ResidueProfile {
        modulus: r,
        counts,
        scope: through.map_or(ProfileScope::WholeGraph, ProfileScope::ThroughEdge),
        total,
        truncated: !complete,
    })
}

/// One enumeration pass tabulating the whole-graph profile together with a
/// through-edge profile for every edge.
pub struct EdgeResidueCensus {
    pub whole: ResidueProfile,
    pub per_edge: std::collections::BTreeMap<Edge, ResidueProfile>,
}

pub fn edge_residue_census(
    g: &Graph,
    r: usize,
    budget: Option<u64>,
) -> Result<EdgeResidueCensus, OracleError> {
    if r < 2 {
        return Err(OracleError::BadModulus(r));
    }
    let mut whole = vec![0u64; r];
    let mut whole_total = 0u64;
    let mut per_edge: std::collections::BTreeMap<Edge, (Vec<u64>, u64)> = g
        .edges()
        .into_iter()
        .map(|e| (e, (vec![0u64; r], 0u64)))
        .collect();
    let complete = for_each_cycle(g, None, None, |c| {
        let residue = c.len() % r;
        whole[residue] += 1;
        whole_total += 1;
        for i in 0..c.len() {
            let e = Edge::new(c[i], c[(i + 1) % c.len()]);
            let entry = per_edge.get_mut(&e).expect("cycle edges exist in g");
            entry.0[residue] += 1;
            entry.1 += 1;
        }
        budget.is_none_or(|b| whole_total < b)
    });
    Ok(EdgeResidueCensus {
        whole: ResidueProfile {
            modulus: r,
            counts: whole,
            scope: ProfileScope::WholeGraph,
            total: whole_total,
            truncated: !complete,
        },
        per_edge: per_edge
            .into_iter()
            .map(|(e, (counts, total))| {
                (
                    e,
                    ResidueProfile {
                        modulus: r,
                        counts,
                        scope: ProfileScope::ThroughEdge(e),
                        total,
                        truncated: !complete,
                    },
                )
            })
            .collect(),
    })
}

/// Forward/backward arc counts of one cycle traversal under an orientation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrientedCycleStats {
    pub cycle: Vec<usize>,
    /// False: traversal in stored order; true: reversed.
    pub reversed: bool,
    pub forward: usize,
    pub backward: usize,
}

impl OrientedCycleStats {
    pub fn compute(cycle: &[usize], orientation: &Digraph, reversed: bool) -> Self {
        let n = cycle.len();
        let mut forward = 0;
        for i in 0..n {
            let (a, b) = if reversed {
                (cycle[(i + 1) % n], cycle[i])
            } else {
                (cycle[i], cycle[(i + 1) % n])
            };
            if orientation.has_arc(a, b) {
                forward += 1;
            }
        }
        OrientedCycleStats {
            cycle: cycle.to_vec(),
            reversed,
            forward,
            backward: n - forward,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MintyVerdict {
    pub holds: bool,
    /// A traversal with forward > (k-1) * backward, when the check fails.
    pub witness: Option<OrientedCycleStats>,
}

/// Checks the orientation condition: every traversal of every cycle of
/// length 1 mod k has forward <= (k-1) * backward. Panics if `orientation`
/// does not orient `g`.
pub fn minty_check(g: &Graph, orientation: &Digraph, k: usize) -> MintyVerdict {
    assert!(
        orientation.orients(g),
        "orientation must orient every edge of g exactly once"
    );
    assert!(k >= 2);
    let mut witness = None;
    for_each_cycle(g, None, None, |c| {
        if c.len() % k != 1 {
            return true;
        }
        for reversed in [false, true] {
            let stats = OrientedCycleStats::compute(c, orientation, reversed);
            if stats.forward > (k - 1) * stats.backward {
                witness = Some(stats);
                return false;
            }
        }
        true
    });
    MintyVerdict {
        holds: witness.is_none(),
        witness,
    }
}

/// Orientation induced by a vertex ordering: each edge points toward its
/// later endpoint.
pub fn orientation_from_ordering(g: &Graph, ordering: &[usize]) -> Digraph {
    assert_eq!(ordering.len(), g.n());
    let mut position = vec![0usize; g.n()];
    for (idx, &v) in ordering.iter().enumerate() {
        position[v] = idx;
    }
    let mut d = Digraph::new(g.n());
    for e in g.edges() {
        if position[e.u()] < position[e.v()] {
            d.add_arc(e.u(), e.v());
        } else {
            d.add_arc(e.v(), e.u());
        }
    }
    d
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrientationTrial {
    pub index: usize,
    pub ordering: Vec<usize>,
    /// True when some 1-mod-k cycle traversal breaks the bound.
    pub bad: bool,
    pub witness: Option<OrientedCycleStats>,
    /// Block parameter (length-1)/k of the witness cycle, when bad.
    pub q: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrientationSearch {
    pub trials: Vec<OrientationTrial>,
    /// Index of the first passing trial, if any.
    pub found: Option<usize>,
}

impl OrientationSearch {
    pub fn passing_ordering(&self) -> Option<&[usize]> {
        self.found
            .map(|i| self.trials[i].ordering.as_slice())
    }
}

/// Samples `trials` uniformly random vertex orderings from a seeded stream
/// and checks the induced orientations, stopping at the first that passes.
/// Fully deterministic for a fixed seed.
pub fn random_orientation_search(
    g: &Graph,
    k: usize,
    trials: usize,
    seed: u64,
) -> OrientationSearch {
    assert!(trials >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut log = Vec::new();
    let mut found = None;
    for index in 0..trials {
        let ordering = shuffled_vertices(g.n(), &mut rng);
        let orientation = orientation_from_ordering(g, &ordering);
        let verdict = minty_check(g, &orientation, k);
        let q = verdict.witness.as_ref().map(|w| (w.cycle.len() - 1) / k);
        let bad = !verdict.holds;
        log.push(OrientationTrial {
            index,
            ordering,
            bad,
            witness: verdict.witness,
            q,
        });
        if !bad {
            found = Some(index);
            break;
        }
    }
    OrientationSearch { trials: log, found }
}

/// Fisher-Yates over the raw ChaCha stream; avoids distribution-crate
/// details so the byte-exact trial sequence is pinned by this crate alone.
fn shuffled_vertices(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        order.swap(i, j);
    }
    order
}

/// Exact bad-ordering count for a cycle of length `qk + 1`: orderings of
/// the cycle's vertices whose traversal (in the stored direction) makes at
/// most `q` backward steps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BadOrderingCount {
    pub k: usize,
    pub q: usize,
    pub cycle_length: usize,
    pub total_orderings: u64,
    pub bad_orderings: u64,
}

impl BadOrderingCount {
    /// bad/L! <= q^L / (qk)! checked in exact integer arithmetic.
    pub fn bin_bound_holds(&self) -> bool {
        let lhs = self.bad_orderings as u128 * factorial(self.q * self.k);
        let rhs =
            (self.q as u128).pow(self.cycle_length as u32) * factorial(self.cycle_length);
        lhs <= rhs
    }

    /// 2 * bad/L! <= 2/k!, i.e. bad * k! <= L!.
    pub fn within_two_over_k_factorial(&self) -> bool {
        self.bad_orderings as u128 * factorial(self.k) <= factorial(self.cycle_length)
    }

    /// Equality in the doubled bound; holds exactly when q = 1.
    pub fn doubled_bound_tight(&self) -> bool {
        self.bad_orderings as u128 * factorial(self.k) == factorial(self.cycle_length)
    }

    pub fn fraction(&self) -> f64 {
        self.bad_orderings as f64 / self.total_orderings as f64
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Counts, over all (qk+1)! orderings, those whose cyclic traversal has at
/// most q descents (places where the next cycle vertex comes earlier in the
/// ordering). Exhaustive; capped at cycle length 9.
pub fn bad_ordering_count(k: usize, q: usize) -> Result<BadOrderingCount, OracleError> {
    assert!(k >= 2 && q >= 1);
    let len = q * k + 1;
    const CAP: usize = 9;
    if len > CAP {
        return Err(OracleError::SizeCap { len, cap: CAP });
    }
    let mut position: Vec<usize> = (0..len).collect();
    let mut bad = 0u64;
    let mut total = 0u64;
    permute(&mut position, 0, &mut |perm| {
        total += 1;
        let descents = (0..len)
            .filter(|&i| perm[(i + 1) % len] < perm[i])
            .count();
        if descents <= q {
            bad += 1;
        }
    });
    Ok(BadOrderingCount {
        k,
        q,
        cycle_length: len,
        total_orderings: total,
        bad_orderings: bad,
    })
}

fn permute<F: FnMut(&[usize])>(items: &mut Vec<usize>, at: usize, visit: &mut F) {
    if at == items.len() {
        visit(items);
        return;
    }
    for i in at..items.len() {
        items.swap(at, i);
        permute(items, at + 1, visit);
        items.swap(at, i);
    }
}
