//! Cycle extraction under circular coloring.
//!
//! Setting: `phi` is a valid (k,d)-coloring of `g - e` and `g` itself has
//! none. After normalizing so the endpoint colors are `0` and `j` with
//! `0 <= j < d`, the color-step-by-d subdigraph either carries a path
//! between the endpoints (closing a cycle through `e` of length `i*s` mod k
//! with `i = d - j`) or its reach set can absorb a +1 color shift, raising
//! `j`. At `j = d - 1` the endpoint must be reached, or the shifted coloring
//! extends to all of `g`.
//!
//! When no shorter class occurs through the edge, running the loop with the
//! inverse step direction gives a second 1-mod-k cycle, and a directed cycle
//! of the subdigraph supplies a 0-mod-k cycle avoiding `e`.

use crate::cert::{CertWitness, CycleCert, CyclicPerm, TheoremTag};
use crate::coloring::{CircularSpec, ColorSpec, Coloring};
use crate::graph::{Edge, Graph};
use crate::oracle;
use crate::tuza::{sigma_subdigraph, ExtractError};

/// Multiplicative inverse of `d` modulo `k`, in `1..k`.
pub fn inverse_mod(d: usize, k: usize) -> Result<usize, String> {
    if k < 2 {
        return Err(format!("modulus {k} too small"));
    }
    let (mut old_r, mut r) = (d as i128, k as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return Err(format!("gcd({d}, {k}) = {old_r} != 1"));
    }
    Ok(old_s.rem_euclid(k as i128) as usize)
}

/// The cyclic permutation `c -> c + step` on all of `Z_k` (requires
/// `gcd(step, k) = 1`), with the orbit listed starting from `anchor`.
fn full_cycle_perm(k: usize, step: usize, anchor: usize) -> CyclicPerm {
    let mut support = Vec::with_capacity(k);
    let mut c = anchor;
    for _ in 0..k {
        support.push(c);
        c = (c + step) % k;
    }
    CyclicPerm::new(support).expect("orbit of a coprime step covers Z_k")
}

/// Normalized state of one extraction: endpoint roles fixed so the working
/// `y` has color 0 and the working `x` has color `j` in `0..d`.
#[derive(Clone, Debug)]
pub struct CircCaseState {
    pub spec: CircularSpec,
    /// Working endpoints; equal to the edge's endpoints, possibly exchanged.
    pub x: usize,
    pub y: usize,
    /// Current color of `x`.
    pub j: usize,
    pub swap_applied: bool,
    /// Coloring right after normalization, before any shifts.
    pub initial_phi: Coloring,
    /// Current coloring (initial plus the logged shifts).
    pub phi: Coloring,
    /// Reach sets whose colors were incremented by one, in order.
    pub shift_log: Vec<u64>,
}

fn circular_spec_of(phi: &Coloring) -> Result<CircularSpec, ExtractError> {
    match phi.spec() {
        ColorSpec::Circular { k, d } => CircularSpec::new(k, d)
            .map_err(|e| ExtractError::precondition(e.to_string())),
        ColorSpec::Proper { .. } => Err(ExtractError::precondition(
            "expected a circular coloring, got a proper one",
        )),
    }
}

/// Rotates colors and possibly exchanges the endpoint roles so that
/// `phi(y) = 0` and `phi(x) = j` with `0 <= j <= d-1`. Errors when the
/// endpoint colors already satisfy the edge constraint (the coloring then
/// extends to `g`, refuting the hypothesis).
pub fn normalize(g: &Graph, e: Edge, phi: &Coloring) -> Result<CircCaseState, ExtractError> {
    let spec = circular_spec_of(phi)?;
    let (k, d) = (spec.k, spec.d);
    let del = g
        .edge_deleted(e)
        .map_err(|err| ExtractError::precondition(err.to_string()))?;
    phi.check_on(&del)
        .map_err(|err| ExtractError::precondition(format!("coloring invalid on g - e: {err}")))?;
    let (x0, y0) = (e.u(), e.v());
    let t = (k + phi.color(x0) - phi.color(y0)) % k;
    if (d..=k - d).contains(&t) {
        return Err(ExtractError::precondition(format!(
            "colors at {e} differ by {t}, already a valid edge: the coloring extends to g"
        )));
    }
    let (x, y, j, swap_applied, rotated) = if t < d {
        // phi(x0) is t ahead of phi(y0): rotate y0's color to 0.
        (x0, y0, t, false, phi.rotated((k - phi.color(y0)) % k))
    } else {
        // phi(x0) is k - t behind: rotate x0's color to 0 and swap roles.
        (y0, x0, k - t, true, phi.rotated((k - phi.color(x0)) % k))
    };
    debug_assert_eq!(rotated.color(y), 0);
    debug_assert_eq!(rotated.color(x), j);
    Ok(CircCaseState {
        spec,
        x,
        y,
        j,
        swap_applied,
        initial_phi: rotated.clone(),
        phi: rotated,
        shift_log: Vec::new(),
    })
}

/// Outcome of the shift loop: the path found, or the coloring of all of `g`
/// built from the final shift.
enum LoopOutcome {
    Path { path: Vec<usize>, class_multiplier: usize },
    Extends(Coloring),
}

/// Runs the induction: repeatedly test reachability in the step-by-d
/// subdigraph, shifting the reach set by +1 while the far endpoint stays
/// unreached. Mutates the state (current coloring, j, shift log).
fn run_shift_loop(g: &Graph, e: Edge, state: &mut CircCaseState) -> Result<LoopOutcome, ExtractError> {
    let (k, d) = (state.spec.k, state.spec.d);
    let del = g.edge_deleted(e).expect("normalize validated the edge");
    loop {
        let sigma = full_cycle_perm(k, d, state.phi.color(state.x));
        let dg = sigma_subdigraph(g, &state.phi, &sigma);
        let reach = dg.reach_from(state.x);
        if reach & (1 << state.y) != 0 {
            let path = dg
                .lex_shortest_path(state.x, state.y)
                .expect("y is reachable");
            return Ok(LoopOutcome::Path {
                path,
                class_multiplier: d - state.j,
            });
        }
        // Shift the reach set by one color step.
        let mut shifted = state.phi.clone();
        let mut bits = reach;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            shifted.set_color(v, (shifted.color(v) + 1) % k);
        }
        if state.j == d - 1 {
            // x reaches color d while y stays 0: the edge constraint now
            // holds and the shifted coloring covers all of g.
            shifted
                .check_on(g)
                .expect("final shift must extend to the whole graph");
            return Ok(LoopOutcome::Extends(shifted));
        }
        shifted
            .check_on(&del)
            .expect("a +1 shift of a closed reach set stays valid");
        state.phi = shifted;
        state.shift_log.push(reach);
        state.j += 1;
    }
}

fn make_circ_cert(
    state: &CircCaseState,
    e: Edge,
    path: Vec<usize>,
    class_multiplier: usize,
    tag: TheoremTag,
) -> CycleCert {
    let (k, d, s) = (state.spec.k, state.spec.d, state.spec.s);
    let length = path.len();
    // Length times d collapses to the class index; equivalently the length
    // sits in class i*s mod k.
    assert_eq!(length * d % k, (d - state.j) % k);
    assert_eq!(length % k, class_multiplier * s % k);
    let sigma = full_cycle_perm(k, d, state.phi.color(state.x));
    CycleCert {
        length,
        modulus: k,
        residue: length % k,
        through_edge: Some(e),
        class_multiplier: Some(class_multiplier),
        witness: CertWitness {
            sigma,
            coloring: state.phi.clone(),
        },
        theorem_tag: tag,
        vertices: path,
    }
}

/// Extracts one cycle through `e` of length `i*s mod k` for some
/// `i in 1..=d`, reported in the certificate's `class_multiplier`.
pub fn extract_circular_cycle(g: &Graph, e: Edge, phi: &Coloring) -> Result<CycleCert, ExtractError> {
    extract_circular_cycle_traced(g, e, phi).map(|(cert, _)| cert)
}

/// Same, returning the final state (shift log included) for inspection.
pub fn extract_circular_cycle_traced(
    g: &Graph,
    e: Edge,
    phi: &Coloring,
) -> Result<(CycleCert, CircCaseState), ExtractError> {
    let mut state = normalize(g, e, phi)?;
    match run_shift_loop(g, e, &mut state)? {
        LoopOutcome::Path { path, class_multiplier } => {
            let cert = make_circ_cert(&state, e, path, class_multiplier, TheoremTag::CircIs);
            Ok((cert, state))
        }
        LoopOutcome::Extends(coloring) => Err(ExtractError::TheoremViolation {
            sigma: full_cycle_perm(state.spec.k, state.spec.d, 0),
            coloring,
        }),
    }
}

/// The three certificates of the exceptional case.
#[derive(Clone, Debug)]
pub struct CircularBonus {
    /// Length 1 mod k through the edge, colors stepping by +d.
    pub one_forward: CycleCert,
    /// Length 1 mod k through the edge, colors stepping by -d.
    pub one_backward: CycleCert,
    /// Length 0 mod k avoiding the edge.
    pub zero: CycleCert,
}

/// Exceptional-case extraction. Requires (and verifies with the cycle
/// oracle) that no cycle through `e` has length `i*s mod k` for
/// `i in 1..d`; then `e` lies on two distinct cycles of length 1 mod k and
/// `g - e` contains a cycle of length 0 mod k.
pub fn extract_circular_bonus(
    g: &Graph,
    e: Edge,
    phi: &Coloring,
) -> Result<CircularBonus, ExtractError> {
    let spec = circular_spec_of(phi)?;
    let (k, d, s) = (spec.k, spec.d, spec.s);

    // Oracle gate: the lower classes really are empty through e.
    let excluded: std::collections::BTreeSet<usize> =
        (1..d).map(|i| i * s % k).collect();
    let mut offending: Option<Vec<usize>> = None;
    oracle::for_each_cycle(g, Some(e), None, |c| {
        if excluded.contains(&(c.len() % k)) {
            offending = Some(c.to_vec());
            false
        } else {
            true
        }
    });
    if let Some(cycle) = offending {
        return Err(ExtractError::Precondition {
            reason: format!(
                "a cycle of length {} = {} mod {k} through {e} occupies an excluded class",
                cycle.len(),
                cycle.len() % k
            ),
            witness_cycle: Some(cycle),
        });
    }

    // Forward run. Any outcome with i < d would be a real cycle in an
    // excluded class, which the oracle just ruled out.
    let (fwd_cert, fwd_state) = extract_circular_cycle_traced(g, e, phi)?;
    assert_eq!(
        fwd_cert.class_multiplier,
        Some(d),
        "excluded classes are empty, so only i = d remains"
    );
    let one_forward = CycleCert {
        theorem_tag: TheoremTag::CircOne,
        ..fwd_cert
    };

    // Zero-class cycle: a directed cycle of the subdigraph. Reaching i = d
    // means no shifts happened, so the state's coloring is the normalized
    // input.
    let sigma = full_cycle_perm(k, d, fwd_state.phi.color(fwd_state.x));
    let dg = sigma_subdigraph(g, &fwd_state.phi, &sigma);
    let zero = match dg.find_cycle() {
        Some(cycle) => {
            assert_eq!(cycle.len() % k, 0, "subdigraph cycles follow the full orbit");
            for i in 0..cycle.len() {
                assert!(Edge::new(cycle[i], cycle[(i + 1) % cycle.len()]) != e);
            }
            CycleCert {
                length: cycle.len(),
                modulus: k,
                residue: 0,
                through_edge: None,
                class_multiplier: None,
                witness: CertWitness {
                    sigma: sigma.clone(),
                    coloring: fwd_state.phi.clone(),
                },
                theorem_tag: TheoremTag::CircZero,
                vertices: cycle,
            }
        }
        None => {
            // Acyclic subdigraph: shift sinks one at a time until an
            // endpoint moves, which restarts the induction at j > 0 and can
            // only end in a coloring of all of g.
            let coloring = sink_shift_then_exhaust(g, e, &fwd_state)?;
            return Err(ExtractError::TheoremViolation { sigma, coloring });
        }
    };

    // Backward run: negating every color swaps the step direction, so the
    // same loop extracts the path stepping by -d under the original colors.
    let (bwd_cert, _) = extract_circular_cycle_traced(g, e, &phi.mirrored())?;
    assert_eq!(bwd_cert.class_multiplier, Some(d));
    let one_backward = CycleCert {
        theorem_tag: TheoremTag::CircOne,
        ..bwd_cert
    };
    assert_ne!(
        one_forward.canonical(),
        one_backward.canonical(),
        "opposite step directions cannot trace the same cycle while k > 2d"
    );

    Ok(CircularBonus {
        one_forward,
        one_backward,
        zero,
    })
}

/// Reverse-topological +1 sweep over an acyclic subdigraph until an endpoint
/// of `e` changes color, then reruns the main loop from the raised offset.
/// On the way every intermediate coloring stays valid on `g - e`. The rerun
/// cannot terminate with a path (the oracle excluded those classes), so this
/// always produces a coloring of all of `g`.
fn sink_shift_then_exhaust(
    g: &Graph,
    e: Edge,
    state: &CircCaseState,
) -> Result<Coloring, ExtractError> {
    let (k, d) = (state.spec.k, state.spec.d);
    let del = g.edge_deleted(e).expect("edge validated");
    let sigma = full_cycle_perm(k, d, state.phi.color(state.x));
    let dg = sigma_subdigraph(g, &state.phi, &sigma);
    debug_assert!(dg.find_cycle().is_none());
    let n = g.n();
    let mut remaining_out: Vec<usize> =
        (0..n).map(|v| dg.out_bits(v).count_ones() as usize).collect();
    let mut ready: std::collections::BTreeSet<usize> =
        (0..n).filter(|&v| remaining_out[v] == 0).collect();
    let mut done = vec![false; n];
    let mut cur = state.phi.clone();
    while let Some(&v) = ready.iter().next() {
        ready.remove(&v);
        done[v] = true;
        cur.set_color(v, (cur.color(v) + 1) % k);
        cur.check_on(&del)
            .expect("sink-first +1 shifts stay valid on g - e");
        if v == state.x || v == state.y {
            break;
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
    // With d = 1 the unit offset already satisfies the edge constraint.
    if cur.check_on(g).is_ok() {
        return Ok(cur);
    }
    let mut restarted = normalize(g, e, &cur)?;
    match run_shift_loop(g, e, &mut restarted)? {
        LoopOutcome::Extends(coloring) => Ok(coloring),
        LoopOutcome::Path { path, class_multiplier } => unreachable!(
            "the oracle excluded class {} but a cycle {:?} materialized",
            class_multiplier, path
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{find_kd_coloring, CircularSpec};
    use crate::graph::{complete, cycle};

    fn kd_coloring_of_minus_e(g: &Graph, e: Edge, k: usize, d: usize) -> Coloring {
        let spec = CircularSpec::new(k, d).unwrap();
        let del = g.edge_deleted(e).unwrap();
        find_kd_coloring(&del, spec).expect("g - e should be colorable")
    }

    #[test]
    fn inverse_mod_values() {
        assert_eq!(inverse_mod(2, 5), Ok(3));
        assert_eq!(inverse_mod(3, 7), Ok(5));
        for d in 1..=6usize {
            let k = 2 * d + 1;
            assert_eq!(inverse_mod(d, k), Ok(2 * d - 1), "d={d}");
        }
        assert!(inverse_mod(2, 6).is_err());
    }

    #[test]
    fn normalize_zero_offset() {
        let g = cycle(3).unwrap();
        let e = Edge::new(0, 1);
        let phi = Coloring::circular(5, 2, vec![0, 0, 2]);
        let state = normalize(&g, e, &phi).unwrap();
        assert_eq!(state.j, 0);
        assert!(!state.swap_applied);
        assert_eq!((state.x, state.y), (0, 1));
    }

    #[test]
    fn normalize_negative_offset_swaps() {
        let g = cycle(3).unwrap();
        let e = Edge::new(0, 1);
        // phi(x0) - phi(y0) = -1 mod 5.
        let phi = Coloring::circular(5, 2, vec![0, 1, 3]);
        phi.check_on(&g.edge_deleted(e).unwrap()).unwrap();
        let state = normalize(&g, e, &phi).unwrap();
        assert!(state.swap_applied);
        assert_eq!(state.j, 1);
        assert_eq!((state.x, state.y), (1, 0));
        assert_eq!(state.phi.color(state.y), 0);
        assert_eq!(state.phi.color(state.x), 1);
    }

    #[test]
    fn normalize_rejects_extendable_coloring() {
        let g = cycle(4).unwrap();
        let e = Edge::new(0, 3);
        // Valid on all of C_4 already.
        let phi = Coloring::circular(5, 2, vec![0, 2, 0, 2]);
        assert!(matches!(
            normalize(&g, e, &phi),
            Err(ExtractError::Precondition { .. })
        ));
    }

    #[test]
    fn triangle_under_5_2() {
        let g = cycle(3).unwrap();
        let e = Edge::new(0, 1);
        let phi = kd_coloring_of_minus_e(&g, e, 5, 2);
        let (cert, state) = extract_circular_cycle_traced(&g, e, &phi).unwrap();
        assert_eq!(cert.length, 3);
        assert_eq!(cert.class_multiplier, Some(1)); // 3 = 1 * 3 mod 5
        cert.validate(&g).unwrap();
        cert.verify_witness().unwrap();
        assert!(state.shift_log.len() <= 1);
    }

    #[test]
    fn c5_under_7_3() {
        let g = cycle(5).unwrap();
        let e = Edge::new(0, 4);
        let phi = kd_coloring_of_minus_e(&g, e, 7, 3);
        let cert = extract_circular_cycle(&g, e, &phi).unwrap();
        assert_eq!(cert.length, 5);
        assert_eq!(cert.class_multiplier, Some(1)); // 5 = 1 * 5 mod 7
        cert.validate(&g).unwrap();
    }

    #[test]
    fn triangle_under_7_3() {
        let g = cycle(3).unwrap();
        let e = Edge::new(1, 2);
        let phi = kd_coloring_of_minus_e(&g, e, 7, 3);
        let cert = extract_circular_cycle(&g, e, &phi).unwrap();
        assert_eq!(cert.length, 3);
        assert_eq!(cert.class_multiplier, Some(2)); // 2 * 5 = 10 = 3 mod 7
        cert.validate(&g).unwrap();
    }

    #[test]
    fn shift_log_replays_validly() {
        let g = cycle(3).unwrap();
        let e = Edge::new(0, 1);
        let phi = kd_coloring_of_minus_e(&g, e, 9, 4);
        let (cert, state) = extract_circular_cycle_traced(&g, e, &phi).unwrap();
        assert_eq!(cert.length % 9, cert.class_multiplier.unwrap() * 7 % 9);
        let del = g.edge_deleted(e).unwrap();
        let mut replay = state.initial_phi.clone();
        for &reach in &state.shift_log {
            let mut bits = reach;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                replay.set_color(v, (replay.color(v) + 1) % 9);
            }
            replay.check_on(&del).unwrap();
        }
        assert_eq!(replay, state.phi);
        assert!(state.shift_log.len() <= 3); // at most d - 1 shifts
    }

    #[test]
    fn theorem_violation_on_colorable_graph() {
        // C_4 is (5,2)-colorable, so forcing the extraction must surface a
        // full coloring rather than a cycle.
        let g = cycle(4).unwrap();
        let e = Edge::new(0, 3);
        let phi = Coloring::circular(5, 2, vec![0, 2, 4, 1]);
        phi.check_on(&g.edge_deleted(e).unwrap()).unwrap();
        // Offsets: phi(0) - phi(3) = -1: normalizes to j = 1 = d - 1.
        match extract_circular_cycle(&g, e, &phi) {
            Err(ExtractError::TheoremViolation { coloring, .. }) => {
                coloring.check_on(&g).unwrap();
            }
            other => panic!("expected violation, got {other:?}"),
        }
    }

    #[test]
    fn bonus_on_k4_with_d1() {
        // (3,1): the excluded class set is empty, so any critical edge of a
        // non-3-colorable graph qualifies.
        let g = complete(4).unwrap();
        let e = Edge::new(0, 1);
        let phi = kd_coloring_of_minus_e(&g, e, 3, 1);
        let bonus = extract_circular_bonus(&g, e, &phi).unwrap();
        for cert in [&bonus.one_forward, &bonus.one_backward] {
            cert.validate(&g).unwrap();
            cert.verify_witness().unwrap();
            assert_eq!(cert.length % 3, 1);
            assert_eq!(cert.through_edge, Some(e));
        }
        assert_ne!(
            bonus.one_forward.canonical(),
            bonus.one_backward.canonical()
        );
        bonus.zero.validate(&g).unwrap();
        bonus.zero.verify_witness().unwrap();
        assert_eq!(bonus.zero.length % 3, 0);
        let del = g.edge_deleted(e).unwrap();
        bonus.zero.validate(&del).unwrap();
    }

    #[test]
    fn bonus_sink_sweep_surfaces_coloring_of_colorable_graph() {
        // C_4 under (3,1): the forward run follows the path 0-1-2-3 but the
        // subdigraph is acyclic, so the sink sweep must produce a coloring
        // of all of C_4 and report the violation.
        let g = cycle(4).unwrap();
        let e = Edge::new(0, 3);
        let phi = Coloring::circular(3, 1, vec![0, 1, 2, 0]);
        phi.check_on(&g.edge_deleted(e).unwrap()).unwrap();
        match extract_circular_bonus(&g, e, &phi) {
            Err(ExtractError::TheoremViolation { coloring, .. }) => {
                coloring.check_on(&g).unwrap();
            }
            other => panic!("expected violation, got {other:?}"),
        }
    }

    #[test]
    fn bonus_rejects_triangle_with_witness() {
        // C_3 under (5,2): the triangle itself sits in class 1*s = 3.
        let g = cycle(3).unwrap();
        let e = Edge::new(0, 1);
        let phi = kd_coloring_of_minus_e(&g, e, 5, 2);
        match extract_circular_bonus(&g, e, &phi) {
            Err(ExtractError::Precondition { witness_cycle, .. }) => {
                let w = witness_cycle.expect("witness cycle reported");
                assert_eq!(w.len(), 3);
            }
            other => panic!("expected precondition failure, got {other:?}"),
        }
    }
}
