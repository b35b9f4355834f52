//! Exact coloring: proper k-coloring, graph homomorphism, circular
//! (k,d)-coloring, and edge-criticality testing.
//!
//! All searches are deterministic backtracking with fixed tie-breaks, so the
//! colorings feeding the extractors are reproducible run to run.

use serde::Serialize;
use thiserror::Error;

use crate::circular::inverse_mod;
use crate::graph::{full_mask, Graph};

/// What a vertex->color map claims to be.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ColorSpec {
    /// Palette `{1..k}`, adjacent vertices get distinct colors.
    Proper { k: usize },
    /// Colors in `Z_k`; every edge difference lies in `[d, k-d]` mod k.
    Circular { k: usize, d: usize },
}

#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    spec: ColorSpec,
    colors: Vec<usize>,
}

impl Coloring {
    pub fn proper(k: usize, colors: Vec<usize>) -> Self {
        Coloring {
            spec: ColorSpec::Proper { k },
            colors,
        }
    }

    pub fn circular(k: usize, d: usize, colors: Vec<usize>) -> Self {
        Coloring {
            spec: ColorSpec::Circular { k, d },
            colors,
        }
    }

    pub fn spec(&self) -> ColorSpec {
        self.spec
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn set_color(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
    }

    /// Palette modulus: `k` for either kind.
    pub fn k(&self) -> usize {
        match self.spec {
            ColorSpec::Proper { k } | ColorSpec::Circular { k, .. } => k,
        }
    }

    /// Independent validity scan of every edge against the claimed spec.
    pub fn check_on(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.colors.len() != g.n() {
            return Err(ColoringError::WrongLength {
                got: self.colors.len(),
                want: g.n(),
            });
        }
        match self.spec {
            ColorSpec::Proper { k } => {
                for v in g.vertices() {
                    let c = self.colors[v];
                    if c < 1 || c > k {
                        return Err(ColoringError::ColorOutOfRange { v, c, k });
                    }
                }
                for e in g.edges() {
                    if self.colors[e.u()] == self.colors[e.v()] {
                        return Err(ColoringError::ImproperEdge {
                            u: e.u(),
                            v: e.v(),
                        });
                    }
                }
            }
            ColorSpec::Circular { k, d } => {
                for v in g.vertices() {
                    let c = self.colors[v];
                    if c >= k {
                        return Err(ColoringError::ColorOutOfRange { v, c, k });
                    }
                }
                for e in g.edges() {
                    let diff = (k + self.colors[e.v()] - self.colors[e.u()]) % k;
                    if diff < d || diff > k - d {
                        return Err(ColoringError::ImproperEdge {
                            u: e.u(),
                            v: e.v(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_valid_on(&self, g: &Graph) -> bool {
        self.check_on(g).is_ok()
    }

    /// For circular colorings: adds `t` to every color mod k. Rotation is an
    /// automorphism of the circular clique, so validity is preserved.
    pub fn rotated(&self, t: usize) -> Coloring {
        match self.spec {
            ColorSpec::Circular { k, .. } => Coloring {
                spec: self.spec,
                colors: self.colors.iter().map(|&c| (c + t) % k).collect(),
            },
            ColorSpec::Proper { .. } => panic!("rotation applies to circular colorings"),
        }
    }

    /// For circular colorings: maps every color `c` to `-c` mod k, which also
    /// preserves validity (the edge constraint is symmetric).
    pub fn mirrored(&self) -> Coloring {
        match self.spec {
            ColorSpec::Circular { k, .. } => Coloring {
                spec: self.spec,
                colors: self.colors.iter().map(|&c| (k - c) % k).collect(),
            },
            ColorSpec::Proper { .. } => panic!("mirroring applies to circular colorings"),
        }
    }
}

impl std::fmt::Debug for Coloring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Coloring({:?}, {:?})", self.spec, self.colors)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("coloring covers {got} vertices, graph has {want}")]
    WrongLength { got: usize, want: usize },
    #[error("vertex {v} has color {c} outside the palette for k={k}")]
    ColorOutOfRange { v: usize, c: usize, k: usize },
    #[error("edge {u}-{v} violates the coloring constraint")]
    ImproperEdge { u: usize, v: usize },
    #[error("invalid circular spec (k={k}, d={d}): {reason}")]
    BadCircularSpec { k: usize, d: usize, reason: String },
}

/// Parameters of circular coloring: modulus `k`, spread `d`, and the
/// multiplicative inverse `s` of `d` mod `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CircularSpec {
    pub k: usize,
    pub d: usize,
    pub s: usize,
}

impl CircularSpec {
    pub fn new(k: usize, d: usize) -> Result<Self, ColoringError> {
        if d == 0 || k <= 2 * d {
            return Err(ColoringError::BadCircularSpec {
                k,
                d,
                reason: "need k > 2d and d >= 1".into(),
            });
        }
        let s = inverse_mod(d, k).map_err(|_| ColoringError::BadCircularSpec {
            k,
            d,
            reason: "k and d must be coprime".into(),
        })?;
        Ok(CircularSpec { k, d, s })
    }
}

// ---------------------------------------------------------------------------
// Proper k-coloring solver
// ---------------------------------------------------------------------------

struct ProperSearch<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<usize>, // 0 = unassigned, else 1..=k
    // Bit c-1 set when some neighbor carries color c.
    neighbor_mask: Vec<u64>,
    uncolored: u64,
}

impl<'a> ProperSearch<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        ProperSearch {
            g,
            k,
            color: vec![0; g.n()],
            neighbor_mask: vec![0; g.n()],
            uncolored: full_mask(g.n()),
        }
    }

    /// Highest saturation first, then highest degree, then lowest index.
    fn pick(&self) -> Option<usize> {
        let mut best: Option<(usize, usize, std::cmp::Reverse<usize>)> = None;
        let mut pick = None;
        let mut bits = self.uncolored;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let key = (
                self.neighbor_mask[v].count_ones() as usize,
                self.g.degree(v),
                std::cmp::Reverse(v),
            );
            if best.is_none_or(|b| key > b) {
                best = Some(key);
                pick = Some(v);
            }
        }
        pick
    }

    fn solve(&mut self, max_used: usize) -> bool {
        let Some(v) = self.pick() else {
            return true;
        };
        let cap = self.k.min(max_used + 1);
        for c in 1..=cap {
            if self.neighbor_mask[v] & (1 << (c - 1)) != 0 {
                continue;
            }
            self.color[v] = c;
            self.uncolored &= !(1 << v);
            let mut touched = 0u64;
            for w in self.g.neighbors(v) {
                if self.neighbor_mask[w] & (1 << (c - 1)) == 0 {
                    self.neighbor_mask[w] |= 1 << (c - 1);
                    touched |= 1 << w;
                }
            }
            if self.solve(max_used.max(c)) {
                return true;
            }
            let mut bits = touched;
            while bits != 0 {
                let w = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                self.neighbor_mask[w] &= !(1 << (c - 1));
            }
            self.color[v] = 0;
            self.uncolored |= 1 << v;
        }
        false
    }
}

/// Finds a proper k-coloring on palette `{1..k}`, or `None` if none exists.
/// Deterministic: saturation-ordered backtracking, colors introduced in
/// increasing order (the first branching vertex always takes color 1).
pub fn find_k_coloring(g: &Graph, k: usize) -> Option<Coloring> {
    assert!(k >= 1, "palette must be nonempty");
    if g.n() == 0 {
        return Some(Coloring::proper(k, vec![]));
    }
    if k >= g.n() {
        // Enough colors for a rainbow; also covers k > 64 where the
        // bitmask solver would not apply.
        return Some(Coloring::proper(k, (1..=g.n()).collect()));
    }
    let mut search = ProperSearch::new(g, k);
    if search.solve(0) {
        Some(Coloring::proper(k, search.color))
    } else {
        None
    }
}

/// Least k admitting a proper k-coloring; 0 for the empty graph.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    (1..=g.n())
        .find(|&k| find_k_coloring(g, k).is_some())
        .expect("n colors always suffice")
}

// ---------------------------------------------------------------------------
// Homomorphism solver
// ---------------------------------------------------------------------------

struct HomSearch<'a> {
    g: &'a Graph,
    h: &'a Graph,
    assignment: Vec<usize>,
    domain: Vec<u64>,
    unassigned: u64,
}

impl<'a> HomSearch<'a> {
    /// Smallest domain first, then lowest index.
    fn pick(&self) -> Option<usize> {
        let mut best = u32::MAX;
        let mut pick = None;
        let mut bits = self.unassigned;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let size = self.domain[v].count_ones();
            if size < best {
                best = size;
                pick = Some(v);
            }
        }
        pick
    }

    fn solve(&mut self) -> bool {
        let Some(v) = self.pick() else {
            return true;
        };
        let mut choices = self.domain[v];
        while choices != 0 {
            let a = choices.trailing_zeros() as usize;
            choices &= choices - 1;
            self.assignment[v] = a;
            self.unassigned &= !(1 << v);
            // Forward-check: unassigned neighbors must map into N_h(a).
            let mut saved = Vec::new();
            let mut dead = false;
            for w in self.g.neighbors(v) {
                if self.unassigned & (1 << w) != 0 {
                    let pruned = self.domain[w] & self.h.neighbors_bits(a);
                    if pruned != self.domain[w] {
                        saved.push((w, self.domain[w]));
                        self.domain[w] = pruned;
                        if pruned == 0 {
                            dead = true;
                        }
                    }
                }
            }
            if !dead && self.solve() {
                return true;
            }
            for (w, old) in saved {
                self.domain[w] = old;
            }
            self.unassigned |= 1 << v;
        }
        false
    }
}

/// Finds a homomorphism `g -> h` (edges map to edges), or `None`.
pub fn find_homomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    find_homomorphism_pinned(g, h, None)
}

fn find_homomorphism_pinned(
    g: &Graph,
    h: &Graph,
    pin: Option<(usize, usize)>,
) -> Option<Vec<usize>> {
    if g.n() == 0 {
        return Some(vec![]);
    }
    if h.n() == 0 {
        return None;
    }
    let mut search = HomSearch {
        g,
        h,
        assignment: vec![0; g.n()],
        domain: vec![full_mask(h.n()); g.n()],
        unassigned: full_mask(g.n()),
    };
    if let Some((v, img)) = pin {
        search.domain[v] = 1 << img;
    }
    if search.solve() {
        Some(search.assignment)
    } else {
        None
    }
}

/// Finds a (k,d)-coloring: a homomorphism into the circular clique,
/// re-expressed as colors in `Z_k`. Vertex 0's color is pinned to 0, which
/// is harmless since rotation acts transitively on the clique.
pub fn find_kd_coloring(g: &Graph, spec: CircularSpec) -> Option<Coloring> {
    let clique = crate::graph::circular_clique(spec.k, spec.d)
        .expect("validated spec yields a clique");
    let pin = if g.n() > 0 { Some((0, 0)) } else { None };
    find_homomorphism_pinned(g, &clique, pin)
        .map(|assignment| Coloring::circular(spec.k, spec.d, assignment))
}

/// True iff the chromatic number is exactly `k + 1` and deleting any single
/// edge makes the graph k-colorable.
pub fn is_edge_critical(g: &Graph, k: usize) -> bool {
    if find_k_coloring(g, k).is_some() {
        return false; // chromatic number too small
    }
    if find_k_coloring(g, k + 1).is_none() {
        return false; // too large
    }
    g.edges().iter().all(|&e| {
        let del = g.edge_deleted(e).expect("edge comes from the graph");
        find_k_coloring(&del, k).is_some()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        circular_clique, complete, cycle, grotzsch, make_named, petersen, toft, Edge, Graph,
    };

    #[test]
    fn odd_cycle_needs_three_colors() {
        let g = cycle(5).unwrap();
        assert!(find_k_coloring(&g, 2).is_none());
        let c = find_k_coloring(&g, 3).unwrap();
        assert!(c.is_valid_on(&g));
    }

    #[test]
    fn c5_minus_edge_is_2_colorable() {
        let g = cycle(5).unwrap().edge_deleted(Edge::new(0, 4)).unwrap();
        let c = find_k_coloring(&g, 2).unwrap();
        assert!(c.is_valid_on(&g));
    }

    #[test]
    fn petersen_is_3_colorable() {
        let g = petersen();
        let c = find_k_coloring(&g, 3).unwrap();
        assert!(c.is_valid_on(&g));
        assert!(find_k_coloring(&g, 2).is_none());
    }

    #[test]
    fn chromatic_number_of_k5() {
        assert_eq!(chromatic_number(&complete(5).unwrap()), 5);
    }

    #[test]
    fn chromatic_number_of_grotzsch_cross_checked() {
        let g = grotzsch();
        assert_eq!(chromatic_number(&g), 4);
        // Independent oracle: exhaustive 3-assignment enumeration fails.
        assert!(!exhaustive_colorable(&g, 3));
        assert!(exhaustive_colorable(&g, 4));
    }

    #[test]
    fn chromatic_number_of_toft() {
        assert_eq!(chromatic_number(&toft()), 4);
    }

    /// Brute-force oracle: tries every assignment of k colors to n vertices.
    fn exhaustive_colorable(g: &Graph, k: usize) -> bool {
        let n = g.n();
        let mut assignment = vec![0usize; n];
        loop {
            let ok = g
                .edges()
                .iter()
                .all(|e| assignment[e.u()] != assignment[e.v()]);
            if ok {
                return true;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return false;
                }
                assignment[i] += 1;
                if assignment[i] < k {
                    break;
                }
                assignment[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn chromatic_matches_exhaustive_on_all_n4_graphs() {
        for mask in 0u32..(1 << 6) {
            let mut g = Graph::empty(4).unwrap();
            let mut bit = 0;
            for u in 0..4 {
                for v in u + 1..4 {
                    if mask >> bit & 1 == 1 {
                        g.add_edge(u, v).unwrap();
                    }
                    bit += 1;
                }
            }
            let chi = chromatic_number(&g);
            assert!(exhaustive_colorable(&g, chi));
            assert!(chi == 1 || !exhaustive_colorable(&g, chi - 1));
        }
    }

    #[test]
    fn homomorphism_c3_to_c5_absent() {
        assert!(find_homomorphism(&cycle(3).unwrap(), &cycle(5).unwrap()).is_none());
    }

    #[test]
    fn homomorphism_c5_to_circular_clique_5_2() {
        let g = cycle(5).unwrap();
        let h = circular_clique(5, 2).unwrap();
        let hom = find_homomorphism(&g, &h).unwrap();
        for e in g.edges() {
            assert!(h.has_edge(hom[e.u()], hom[e.v()]));
        }
    }

    #[test]
    fn homomorphism_between_circular_cliques() {
        // 5/2 <= 8/3, so K_{5:2} maps into K_{8:3}.
        let g = circular_clique(5, 2).unwrap();
        let h = circular_clique(8, 3).unwrap();
        let hom = find_homomorphism(&g, &h).unwrap();
        for e in g.edges() {
            assert!(h.has_edge(hom[e.u()], hom[e.v()]));
        }
    }

    #[test]
    fn homomorphisms_compose() {
        let a = cycle(5).unwrap();
        let b = circular_clique(8, 3).unwrap();
        let c = circular_clique(3, 1).unwrap();
        let f = find_homomorphism(&a, &b).unwrap();
        let g = find_homomorphism(&b, &c).unwrap();
        for e in a.edges() {
            assert!(c.has_edge(g[f[e.u()]], g[f[e.v()]]));
        }
    }

    #[test]
    fn kd_coloring_examples() {
        let spec52 = CircularSpec::new(5, 2).unwrap();
        let triangle = cycle(3).unwrap();
        let path = triangle.edge_deleted(Edge::new(0, 1)).unwrap();
        let col = find_kd_coloring(&path, spec52).unwrap();
        assert!(col.is_valid_on(&path));
        assert!(find_kd_coloring(&triangle, spec52).is_none());

        let spec73 = CircularSpec::new(7, 3).unwrap();
        let c7 = cycle(7).unwrap();
        let col = find_kd_coloring(&c7, spec73).unwrap();
        assert!(col.is_valid_on(&c7));
    }

    #[test]
    fn kd_with_d1_equals_proper() {
        let graphs = [
            cycle(5).unwrap(),
            petersen(),
            complete(4).unwrap(),
            make_named("wheel", &[5]).unwrap(),
        ];
        for g in &graphs {
            for k in 3..=5 {
                let spec = CircularSpec::new(k, 1).unwrap();
                assert_eq!(
                    find_kd_coloring(g, spec).is_some(),
                    find_k_coloring(g, k).is_some(),
                    "disagreement at k={k} on {g:?}"
                );
            }
        }
    }

    #[test]
    fn circular_spec_validation() {
        assert!(CircularSpec::new(5, 2).is_ok());
        assert_eq!(CircularSpec::new(5, 2).unwrap().s, 3);
        assert!(CircularSpec::new(6, 2).is_err()); // gcd 2
        assert!(CircularSpec::new(4, 2).is_err()); // k = 2d
    }

    #[test]
    fn k4_is_3_edge_critical() {
        assert!(is_edge_critical(&complete(4).unwrap(), 3));
    }

    #[test]
    fn toft_is_4_critical() {
        assert!(is_edge_critical(&toft(), 3));
    }

    #[test]
    fn petersen_not_2_edge_critical() {
        assert!(!is_edge_critical(&petersen(), 2));
    }

    #[test]
    fn returned_colorings_pass_independent_scan() {
        for (name, params, k) in [
            ("petersen", vec![], 3),
            ("grotzsch", vec![], 4),
            ("wheel", vec![6], 3),
            ("complete", vec![5], 5),
        ] {
            let g = make_named(name, &params).unwrap();
            let c = find_k_coloring(&g, k).unwrap();
            c.check_on(&g).unwrap();
        }
    }
}
