//! Constructive extraction of cycles forced by a critical edge under proper
//! coloring.
//!
//! Setting: `phi` properly k-colors `g - e` but `g` itself is not
//! k-colorable (so both endpoints of `e` share a color). For every cyclic
//! permutation of a color subset containing that shared color, the
//! color-shift subdigraph must carry a path between the endpoints; closing
//! it over `e` certifies a cycle of length 1 mod r. Scheduling the same
//! shift one sink at a time instead yields, per permutation, a directed
//! cycle of length 0 mod r that avoids `e`.

use itertools::Itertools;

use crate::cert::{CertWitness, CycleCert, CyclicPerm, TheoremTag};
use crate::coloring::{ColorSpec, Coloring};
use crate::graph::{Digraph, Edge, Graph};

#[derive(Debug, thiserror::Error)]
pub enum ExtractError {
    #[error("precondition failed: {reason}")]
    Precondition {
        reason: String,
        /// A cycle refuting the precondition, when one exists.
        witness_cycle: Option<Vec<usize>>,
    },
    /// The extraction found a valid coloring of the whole graph, refuting
    /// the hypothesis that deleting the edge was necessary. Never raised
    /// when the preconditions genuinely hold.
    #[error("theorem violation: the input graph admits a valid coloring")]
    TheoremViolation {
        sigma: CyclicPerm,
        coloring: Coloring,
    },
}

impl ExtractError {
    pub fn precondition(reason: impl Into<String>) -> Self {
        ExtractError::Precondition {
            reason: reason.into(),
            witness_cycle: None,
        }
    }
}

/// Evidence gathered for one permutation while extracting a 1-mod-r cycle.
#[derive(Clone, Debug)]
pub struct ExtractionTrace {
    pub sigma: CyclicPerm,
    /// Bitset of vertices reachable from x in the shift subdigraph.
    pub reach_set: u64,
    /// The x -> y path the certificate closes over the edge.
    pub path: Vec<usize>,
}

/// The subdigraph that keeps edge `uv` as arc `u -> v` exactly when `sigma`
/// maps u's color to v's color.
pub fn sigma_subdigraph(g: &Graph, phi: &Coloring, sigma: &CyclicPerm) -> Digraph {
    let mut d = Digraph::new(g.n());
    for u in g.vertices() {
        for v in g.neighbors(u) {
            if sigma.apply(phi.color(u)) == phi.color(v) {
                d.add_arc(u, v);
            }
        }
    }
    d
}

fn palette_of(phi: &Coloring) -> Result<usize, ExtractError> {
    match phi.spec() {
        ColorSpec::Proper { k } => Ok(k),
        ColorSpec::Circular { .. } => Err(ExtractError::precondition(
            "expected a proper coloring, got a circular one",
        )),
    }
}

fn check_sigma_in_palette(sigma: &CyclicPerm, k: usize) -> Result<(), ExtractError> {
    if sigma.support().iter().any(|&c| c < 1 || c > k) {
        return Err(ExtractError::precondition(format!(
            "permutation support {:?} leaves the palette 1..={k}",
            sigma.support()
        )));
    }
    Ok(())
}

/// Applies `sigma` to the colors of every vertex reachable from `e.u()` in
/// the shift subdigraph, leaving the rest alone. Returns the reach set and
/// the recoloring, which is always proper on `g - e`; when the reach set
/// misses `e.v()` it is proper on all of `g`.
pub fn shift_recolor(
    g: &Graph,
    e: Edge,
    phi: &Coloring,
    sigma: &CyclicPerm,
) -> Result<(u64, Coloring), ExtractError> {
    let k = palette_of(phi)?;
    check_sigma_in_palette(sigma, k)?;
    let del = g
        .edge_deleted(e)
        .map_err(|err| ExtractError::precondition(err.to_string()))?;
    phi.check_on(&del)
        .map_err(|err| ExtractError::precondition(format!("coloring invalid on g - e: {err}")))?;
    let x = e.u();
    if sigma.anchor() != phi.color(x) {
        return Err(ExtractError::precondition(format!(
            "permutation anchor {} differs from the color {} at vertex {x}",
            sigma.anchor(),
            phi.color(x)
        )));
    }
    let reach = sigma_subdigraph(g, phi, sigma).reach_from(x);
    let mut shifted = phi.clone();
    let mut bits = reach;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        shifted.set_color(v, sigma.apply(phi.color(v)));
    }
    Ok((reach, shifted))
}

/// All cyclic permutations of r-subsets of `1..=k` that contain `anchor`,
/// rotated to put the anchor first. Subsets are enumerated in colex order,
/// the remaining colors in lexicographic permutation order.
pub fn anchored_cyclic_perms(k: usize, anchor: usize, r: usize) -> Vec<CyclicPerm> {
    assert!((1..=k).contains(&anchor));
    assert!((2..=k).contains(&r));
    let others: Vec<usize> = (1..=k).filter(|&c| c != anchor).collect();
    let mut perms = Vec::new();
    for combo in colex_combinations(others.len(), r - 1) {
        let picked: Vec<usize> = combo.iter().map(|&i| others[i]).collect();
        for arranged in picked.iter().copied().permutations(picked.len()) {
            let mut support = Vec::with_capacity(r);
            support.push(anchor);
            support.extend(arranged);
            perms.push(CyclicPerm::new(support).expect("distinct colors"));
        }
    }
    perms
}

/// Index m-subsets of 0..n in colex order (compare by largest element).
fn colex_combinations(n: usize, m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for last in m - 1..n {
        for mut head in colex_combinations(last, m - 1) {
            head.push(last);
            out.push(head);
        }
    }
    out
}

fn checked_inputs(
    g: &Graph,
    e: Edge,
    phi: &Coloring,
    r: usize,
    min_r: usize,
) -> Result<usize, ExtractError> {
    let k = palette_of(phi)?;
    if r < min_r || r > k {
        return Err(ExtractError::precondition(format!(
            "need {min_r} <= r <= k, got r={r}, k={k}"
        )));
    }
    let del = g
        .edge_deleted(e)
        .map_err(|err| ExtractError::precondition(err.to_string()))?;
    phi.check_on(&del)
        .map_err(|err| ExtractError::precondition(format!("coloring invalid on g - e: {err}")))?;
    if phi.color(e.u()) != phi.color(e.v()) {
        return Err(ExtractError::precondition(format!(
            "endpoints of {e} carry distinct colors, so the coloring already extends to g"
        )));
    }
    Ok(k)
}

/// Guaranteed minimum for `extract_one_mod_r_cycles`: the product of
/// `k - i` over `i = 1..r`, saturating.
pub fn one_mod_r_bound(k: usize, r: usize) -> u128 {
    (1..r).fold(1u128, |acc, i| {
        acc.saturating_mul((k - i) as u128)
    })
}

/// Guaranteed minimum for `extract_zero_mod_r_cycles`: `(r-1)!/2` per
/// color subset.
pub fn zero_mod_r_bound(r: usize) -> u128 {
    (1..r).fold(1u128, |acc, i| acc.saturating_mul(i as u128)) / 2
}

/// Extracts one cycle through `e` per cyclic permutation of a color subset
/// containing the endpoint color: at least `one_mod_r_bound(k, r)` distinct
/// cycles of length 1 mod r. Certificates are ordered by permutation
/// enumeration index.
pub fn extract_one_mod_r_cycles(
    g: &Graph,
    e: Edge,
    phi: &Coloring,
    r: usize,
) -> Result<Vec<CycleCert>, ExtractError> {
    extract_one_mod_r_traced(g, e, phi, r).map(|pairs| pairs.into_iter().map(|p| p.0).collect())
}

/// Same as `extract_one_mod_r_cycles`, returning the per-permutation trace.
pub fn extract_one_mod_r_traced(
    g: &Graph,
    e: Edge,
    phi: &Coloring,
    r: usize,
) -> Result<Vec<(CycleCert, ExtractionTrace)>, ExtractError> {
    let k = checked_inputs(g, e, phi, r, 2)?;
    let (x, y) = (e.u(), e.v());
    let mut out = Vec::new();
    let mut canon_seen = std::collections::BTreeSet::new();
    for sigma in anchored_cyclic_perms(k, phi.color(x), r) {
        let dg = sigma_subdigraph(g, phi, &sigma);
        let reach = dg.reach_from(x);
        if reach & (1 << y) == 0 {
            // Shifting the reach set recolors g properly: the hypothesis
            // that g is not k-colorable was wrong.
            let (_, improved) = shift_recolor(g, e, phi, &sigma)?;
            debug_assert!(improved.is_valid_on(g));
            return Err(ExtractError::TheoremViolation {
                sigma,
                coloring: improved,
            });
        }
        let path = dg
            .lex_shortest_path(x, y)
            .expect("y is reachable from x");
        assert_eq!(
            (path.len() - 1) % r,
            0,
            "arc colors advance cyclically, so path length must be 0 mod r"
        );
        let cert = CycleCert {
            length: path.len(),
            modulus: r,
            residue: path.len() % r,
            through_edge: Some(e),
            class_multiplier: None,
            witness: CertWitness {
                sigma: sigma.clone(),
                coloring: phi.clone(),
            },
            theorem_tag: TheoremTag::OneModR,
            vertices: path.clone(),
        };
        assert!(
            canon_seen.insert(cert.canonical()),
            "cycles from distinct permutations must be distinct"
        );
        out.push((
            cert,
            ExtractionTrace {
                sigma,
                reach_set: reach,
                path,
            },
        ));
    }
    Ok(out)
}

/// Per permutation (up to reversal), finds a directed cycle of the shift
/// subdigraph: a cycle of length 0 mod r avoiding `e`. Deduplicated by
/// canonical form; at least `zero_mod_r_bound(r)` survive within every
/// fixed color subset.
pub fn extract_zero_mod_r_cycles(
    g: &Graph,
    e: Edge,
    phi: &Coloring,
    r: usize,
) -> Result<Vec<CycleCert>, ExtractError> {
    let k = checked_inputs(g, e, phi, r, 3)?;
    let mut out: Vec<CycleCert> = Vec::new();
    let mut canon_seen = std::collections::BTreeSet::new();
    for sigma in anchored_cyclic_perms(k, phi.color(e.u()), r) {
        if !sigma.leads_its_reversal_class() {
            continue; // its reverse selects the same cycle
        }
        match sink_recolor_to_contradiction(g, e, phi, &sigma)? {
            SinkRecolorOutcome::Cycle(cycle) => {
                assert_eq!(cycle.len() % r, 0, "directed cycles follow the full orbit");
                for i in 0..cycle.len() {
                    let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
                    assert!(Edge::new(u, v) != e, "shift arcs never realize the deleted edge");
                }
                let cert = CycleCert {
                    length: cycle.len(),
                    modulus: r,
                    residue: 0,
                    through_edge: None,
                    class_multiplier: None,
                    witness: CertWitness {
                        sigma,
                        coloring: phi.clone(),
                    },
                    theorem_tag: TheoremTag::ZeroModR,
                    vertices: cycle,
                };
                if canon_seen.insert(cert.canonical()) {
                    out.push(cert);
                }
            }
            SinkRecolorOutcome::Proper { coloring, .. } => {
                debug_assert!(coloring.is_valid_on(g));
                return Err(ExtractError::TheoremViolation {
                    sigma,
                    coloring,
                });
            }
        }
    }
    Ok(out)
}

/// Outcome of recoloring one sink at a time.
#[derive(Clone, Debug)]
pub enum SinkRecolorOutcome {
    /// The subdigraph was acyclic: recoloring sinks first stayed proper on
    /// `g - e` at every step and stopped once an endpoint changed color,
    /// leaving a proper coloring of all of `g`. `steps` lists the vertices
    /// in recolor order, ending with the endpoint that changed.
    Proper { coloring: Coloring, steps: Vec<usize> },
    /// A directed cycle of the shift subdigraph.
    Cycle(Vec<usize>),
}

/// Either finds a directed cycle in the shift subdigraph, or — when it is
/// acyclic — recolors vertex by vertex (always a sink of the not-yet-shifted
/// part, smallest index first) until an endpoint of `e` changes color,
/// producing a proper coloring of the whole graph.
pub fn sink_recolor_to_contradiction(
    g: &Graph,
    e: Edge,
    phi: &Coloring,
    sigma: &CyclicPerm,
) -> Result<SinkRecolorOutcome, ExtractError> {
    let k = palette_of(phi)?;
    check_sigma_in_palette(sigma, k)?;
    let del = g
        .edge_deleted(e)
        .map_err(|err| ExtractError::precondition(err.to_string()))?;
    phi.check_on(&del)
        .map_err(|err| ExtractError::precondition(format!("coloring invalid on g - e: {err}")))?;
    let (x, y) = (e.u(), e.v());
    if phi.color(x) != phi.color(y) {
        return Err(ExtractError::precondition(
            "sink recoloring expects both endpoints on the same color",
        ));
    }
    if sigma.anchor() != phi.color(x) {
        return Err(ExtractError::precondition(
            "permutation anchor must be the endpoint color",
        ));
    }
    let dg = sigma_subdigraph(g, phi, sigma);
    if let Some(cycle) = dg.find_cycle() {
        return Ok(SinkRecolorOutcome::Cycle(cycle));
    }
    // Kahn-style reverse topological sweep, smallest sink first.
    let n = g.n();
    let mut remaining_out: Vec<usize> = (0..n).map(|v| dg.out_bits(v).count_ones() as usize).collect();
    let mut ready: std::collections::BTreeSet<usize> = (0..n)
        .filter(|&v| remaining_out[v] == 0)
        .collect();
    let mut done = vec![false; n];
    let mut coloring = phi.clone();
    let mut steps = Vec::new();
    while let Some(&v) = ready.iter().next() {
        ready.remove(&v);
        done[v] = true;
        coloring.set_color(v, sigma.apply(coloring.color(v)));
        steps.push(v);
        if v == x || v == y {
            return Ok(SinkRecolorOutcome::Proper { coloring, steps });
        }
        let mut bits = dg.in_bits(v);
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if !done[u] {
                remaining_out[u] -= 1;
                if remaining_out[u] == 0 {
                    ready.insert(u);
                }
            }
        }
    }
    unreachable!("an acyclic sweep reaches every vertex, including the endpoints");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::find_k_coloring;
    use crate::graph::{complete, cycle, Graph};

    fn proper_on_minus_e(g: &Graph, e: Edge, k: usize) -> Coloring {
        let del = g.edge_deleted(e).unwrap();
        find_k_coloring(&del, k).expect("g - e should be k-colorable")
    }

    #[test]
    fn sigma_subdigraph_on_rainbow_triangle() {
        let g = complete(3).unwrap();
        let phi = Coloring::proper(3, vec![1, 2, 3]);
        let sigma = CyclicPerm::new(vec![1, 2, 3]).unwrap();
        let d = sigma_subdigraph(&g, &phi, &sigma);
        assert!(d.has_arc(0, 1) && d.has_arc(1, 2) && d.has_arc(2, 0));
        assert_eq!(d.arc_count(), 3);
    }

    #[test]
    fn sigma_subdigraph_on_two_colored_path() {
        // Colors alternate 1,2,1,2: a transposition orients every edge both ways.
        let g = crate::graph::path(4).unwrap();
        let phi = Coloring::proper(2, vec![1, 2, 1, 2]);
        let sigma = CyclicPerm::new(vec![1, 2]).unwrap();
        let d = sigma_subdigraph(&g, &phi, &sigma);
        assert_eq!(d.arc_count(), 6);
        for (u, v) in [(0, 1), (1, 2), (2, 3)] {
            assert!(d.has_arc(u, v) && d.has_arc(v, u));
        }
    }

    #[test]
    fn sigma_subdigraph_skips_unrelated_colors() {
        let g = crate::graph::path(2).unwrap();
        let phi = Coloring::proper(4, vec![1, 3]);
        let sigma = CyclicPerm::new(vec![1, 2]).unwrap();
        let d = sigma_subdigraph(&g, &phi, &sigma);
        assert_eq!(d.arc_count(), 0);
    }

    #[test]
    fn shift_recolor_isolated_anchor() {
        // x has no out-arcs, so only x changes color.
        let g = crate::graph::path(3).unwrap(); // edges 0-1, 1-2
        let e = Edge::new(0, 1);
        let phi = Coloring::proper(2, vec![1, 1, 2]);
        let sigma = CyclicPerm::new(vec![1, 2]).unwrap();
        let (reach, shifted) = shift_recolor(&g, e, &phi, &sigma).unwrap();
        assert_eq!(reach, 0b001);
        assert_eq!(shifted.colors(), &[2, 1, 2]);
        assert!(shifted.is_valid_on(&g)); // y was unreachable: proper on all of g
    }

    #[test]
    fn one_mod_r_on_k4() {
        let g = complete(4).unwrap();
        let e = Edge::new(0, 1);
        let phi = proper_on_minus_e(&g, e, 3);
        let certs = extract_one_mod_r_cycles(&g, e, &phi, 3).unwrap();
        assert_eq!(certs.len(), 2);
        for c in &certs {
            assert_eq!(c.length, 4);
            assert_eq!(c.residue, 1);
            c.validate(&g).unwrap();
            c.verify_witness().unwrap();
        }
        assert_ne!(certs[0].canonical(), certs[1].canonical());
    }

    #[test]
    fn one_mod_r_on_k5_hamiltonian() {
        let g = complete(5).unwrap();
        let e = Edge::new(1, 3);
        let phi = proper_on_minus_e(&g, e, 4);
        let certs = extract_one_mod_r_cycles(&g, e, &phi, 4).unwrap();
        assert_eq!(certs.len(), 6);
        for c in &certs {
            assert_eq!(c.length, 5);
            c.validate(&g).unwrap();
        }
    }

    #[test]
    fn one_mod_r_on_k5_with_r3() {
        let g = complete(5).unwrap();
        let e = Edge::new(0, 1);
        let phi = proper_on_minus_e(&g, e, 4);
        let certs = extract_one_mod_r_cycles(&g, e, &phi, 3).unwrap();
        assert!(certs.len() as u128 >= one_mod_r_bound(4, 3));
        for c in &certs {
            assert_eq!(c.length % 3, 1);
            c.validate(&g).unwrap();
        }
        let canon: std::collections::BTreeSet<_> =
            certs.iter().map(|c| c.canonical()).collect();
        assert_eq!(canon.len(), certs.len());
    }

    #[test]
    fn one_mod_r_on_odd_cycle() {
        let g = cycle(5).unwrap();
        let e = Edge::new(0, 4);
        let phi = proper_on_minus_e(&g, e, 2);
        let certs = extract_one_mod_r_cycles(&g, e, &phi, 2).unwrap();
        assert_eq!(certs.len(), 1);
        assert_eq!(certs[0].length, 5);
        assert_eq!(certs[0].residue, 1);
    }

    #[test]
    fn one_mod_r_rejects_separated_endpoint_colors() {
        let g = complete(4).unwrap();
        let e = Edge::new(0, 1);
        // A coloring of g - e that is proper on g too.
        let phi = Coloring::proper(4, vec![1, 2, 3, 4]);
        let err = extract_one_mod_r_cycles(&g, e, &phi, 3).unwrap_err();
        assert!(matches!(err, ExtractError::Precondition { .. }));
    }

    #[test]
    fn one_mod_r_theorem_violation_on_colorable_graph() {
        // Path 0-1-2 with e = 0-1: g IS 2-colorable, so some permutation
        // fails to reach y and surrenders a proper coloring of g.
        let g = crate::graph::path(3).unwrap();
        let e = Edge::new(0, 1);
        let phi = Coloring::proper(2, vec![1, 1, 2]);
        let err = extract_one_mod_r_cycles(&g, e, &phi, 2).unwrap_err();
        match err {
            ExtractError::TheoremViolation { coloring, .. } => {
                assert!(coloring.is_valid_on(&g));
            }
            other => panic!("expected theorem violation, got {other:?}"),
        }
    }

    #[test]
    fn zero_mod_r_on_k4_finds_triangle() {
        let g = complete(4).unwrap();
        let e = Edge::new(0, 1);
        let phi = proper_on_minus_e(&g, e, 3);
        let certs = extract_zero_mod_r_cycles(&g, e, &phi, 3).unwrap();
        assert!(certs.len() as u128 >= zero_mod_r_bound(3));
        for c in &certs {
            assert_eq!(c.length % 3, 0);
            c.validate(&g).unwrap();
            c.verify_witness().unwrap();
            assert!(c.through_edge.is_none());
            // really avoids e
            let del = g.edge_deleted(e).unwrap();
            c.validate(&del).unwrap();
        }
    }

    #[test]
    fn zero_mod_r_on_k5() {
        let g = complete(5).unwrap();
        let e = Edge::new(0, 1);
        let phi = proper_on_minus_e(&g, e, 4);
        let certs = extract_zero_mod_r_cycles(&g, e, &phi, 4).unwrap();
        assert!(certs.len() as u128 >= zero_mod_r_bound(4)); // 3
        let del = g.edge_deleted(e).unwrap();
        for c in &certs {
            assert_eq!(c.length % 4, 0);
            c.validate(&del).unwrap();
        }
    }

    #[test]
    fn sink_recolor_on_k4_returns_directed_triangle() {
        let g = complete(4).unwrap();
        let e = Edge::new(0, 1);
        let phi = proper_on_minus_e(&g, e, 3);
        let sigma = anchored_cyclic_perms(3, phi.color(0), 3)
            .into_iter()
            .next()
            .unwrap();
        match sink_recolor_to_contradiction(&g, e, &phi, &sigma).unwrap() {
            SinkRecolorOutcome::Cycle(cycle) => {
                assert_eq!(cycle.len(), 3);
                let dg = sigma_subdigraph(&g, &phi, &sigma);
                for i in 0..3 {
                    assert!(dg.has_arc(cycle[i], cycle[(i + 1) % 3]));
                }
            }
            other => panic!("expected a directed cycle, got {other:?}"),
        }
    }

    #[test]
    fn sink_recolor_with_no_arcs_recolors_vertexwise() {
        // Single edge graph; g - e has no edges and the subdigraph is empty.
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let e = Edge::new(0, 1);
        let phi = Coloring::proper(2, vec![1, 1]);
        let sigma = CyclicPerm::new(vec![1, 2]).unwrap();
        match sink_recolor_to_contradiction(&g, e, &phi, &sigma).unwrap() {
            SinkRecolorOutcome::Proper { coloring, steps } => {
                assert!(steps.len() <= g.n());
                assert_eq!(steps, vec![0]);
                assert!(coloring.is_valid_on(&g));
            }
            other => panic!("expected a proper coloring, got {other:?}"),
        }
    }

    #[test]
    fn sink_recolor_log_replays_properly() {
        // Acyclic case on a colorable graph: every intermediate coloring must
        // stay proper on g - e. Arcs here are 1 -> 0 and 2 -> 3 only.
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let e = Edge::new(1, 2);
        let phi = Coloring::proper(3, vec![2, 1, 1, 2]);
        let sigma = CyclicPerm::new(vec![1, 2, 3]).unwrap();
        match sink_recolor_to_contradiction(&g, e, &phi, &sigma).unwrap() {
            SinkRecolorOutcome::Proper { coloring, steps } => {
                let del = g.edge_deleted(e).unwrap();
                let mut replay = phi.clone();
                for &v in &steps {
                    replay.set_color(v, sigma.apply(replay.color(v)));
                    replay.check_on(&del).unwrap();
                }
                assert_eq!(replay, coloring);
                assert!(coloring.is_valid_on(&g));
            }
            SinkRecolorOutcome::Cycle(c) => panic!("unexpected cycle {c:?}"),
        }
    }

    #[test]
    fn bounds() {
        assert_eq!(one_mod_r_bound(3, 3), 2);
        assert_eq!(one_mod_r_bound(4, 4), 6);
        assert_eq!(one_mod_r_bound(4, 3), 6);
        assert_eq!(one_mod_r_bound(2, 2), 1);
        assert_eq!(zero_mod_r_bound(3), 1);
        assert_eq!(zero_mod_r_bound(4), 3);
        assert_eq!(zero_mod_r_bound(5), 12);
    }

    #[test]
    fn perm_enumeration_counts() {
        // C(k-1, r-1) * (r-1)! permutations, anchored.
        assert_eq!(anchored_cyclic_perms(3, 1, 3).len(), 2);
        assert_eq!(anchored_cyclic_perms(4, 2, 3).len(), 6);
        assert_eq!(anchored_cyclic_perms(5, 1, 2).len(), 4);
        assert_eq!(anchored_cyclic_perms(5, 3, 5).len(), 24);
        for sigma in anchored_cyclic_perms(5, 3, 4) {
            assert_eq!(sigma.anchor(), 3);
            assert_eq!(sigma.order(), 4);
        }
    }
}
