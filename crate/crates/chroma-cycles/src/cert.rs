//! Cycle certificates: concrete cycles with the permutation and coloring
//! that witnessed them, re-checkable against the graph alone.

use serde::Serialize;
use thiserror::Error;

use crate::coloring::Coloring;
use crate::graph::{Edge, Graph};

/// A cyclic permutation of a set of colors: `support[i]` maps to
/// `support[i+1]` (wrapping), everything else is fixed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CyclicPerm {
    support: Vec<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CertError {
    #[error("cyclic permutation needs at least 2 distinct colors")]
    SupportTooSmall,
    #[error("cyclic permutation support repeats color {0}")]
    DuplicateColor(usize),
    #[error("certificate cycle is shorter than 3 vertices")]
    TooShort,
    #[error("certificate repeats vertex {0}")]
    RepeatedVertex(usize),
    #[error("consecutive certificate vertices {u} and {v} are not adjacent")]
    NotAdjacent { u: usize, v: usize },
    #[error("certificate length {len} disagrees with vertex count {nv}")]
    LengthMismatch { len: usize, nv: usize },
    #[error("certificate residue {residue} != length {len} mod {modulus}")]
    ResidueMismatch {
        residue: usize,
        len: usize,
        modulus: usize,
    },
    #[error("certificate does not traverse its designated edge {0}")]
    MissingEdge(Edge),
    #[error("witness coloring does not follow the witness permutation at step {u} -> {v}")]
    WitnessStep { u: usize, v: usize },
}

impl CyclicPerm {
    pub fn new(support: Vec<usize>) -> Result<Self, CertError> {
        if support.len() < 2 {
            return Err(CertError::SupportTooSmall);
        }
        let mut seen = std::collections::BTreeSet::new();
        for &c in &support {
            if !seen.insert(c) {
                return Err(CertError::DuplicateColor(c));
            }
        }
        Ok(CyclicPerm { support })
    }

    /// Support size r.
    pub fn order(&self) -> usize {
        self.support.len()
    }

    /// First support color; extraction keeps this at the color of x.
    pub fn anchor(&self) -> usize {
        self.support[0]
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn apply(&self, c: usize) -> usize {
        match self.support.iter().position(|&s| s == c) {
            Some(i) => self.support[(i + 1) % self.support.len()],
            None => c,
        }
    }

    /// The inverse permutation, rotated to keep the same anchor.
    pub fn inverse(&self) -> CyclicPerm {
        let mut support = vec![self.support[0]];
        support.extend(self.support[1..].iter().rev().copied());
        CyclicPerm { support }
    }

    /// True when `self` is the lexicographically smaller of itself and its
    /// inverse; used to deduplicate permutation/reversal pairs.
    pub fn leads_its_reversal_class(&self) -> bool {
        self.support[1..] <= self.inverse().support[1..]
    }
}

/// Which guarantee a certificate instantiates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TheoremTag {
    /// Length 1 mod r, through the critical edge.
    OneModR,
    /// Length 0 mod r, avoiding the critical edge.
    ZeroModR,
    /// Circular case: length in class i*s mod k, through the edge.
    CircIs,
    /// Circular exceptional case: length 1 mod k, through the edge.
    CircOne,
    /// Circular exceptional case: length 0 mod k, avoiding the edge.
    CircZero,
}

/// Permutation and coloring under which the cycle was extracted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertWitness {
    pub sigma: CyclicPerm,
    pub coloring: Coloring,
}

/// A certified cycle: vertex sequence (each vertex once, consecutive
/// entries adjacent, last wraps to first) plus the claimed residue class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleCert {
    pub vertices: Vec<usize>,
    pub length: usize,
    pub modulus: usize,
    pub residue: usize,
    pub through_edge: Option<Edge>,
    /// For circular certificates: the class index i with length = i*s mod k.
    pub class_multiplier: Option<usize>,
    pub witness: CertWitness,
    pub theorem_tag: TheoremTag,
}

impl CycleCert {
    /// Re-validates the certificate against the graph alone: adjacency of
    /// consecutive vertices, distinctness, and the residue arithmetic.
    pub fn validate(&self, g: &Graph) -> Result<(), CertError> {
        let vs = &self.vertices;
        if vs.len() < 3 {
            return Err(CertError::TooShort);
        }
        let mut seen = std::collections::BTreeSet::new();
        for &v in vs {
            if !seen.insert(v) {
                return Err(CertError::RepeatedVertex(v));
            }
        }
        for i in 0..vs.len() {
            let u = vs[i];
            let v = vs[(i + 1) % vs.len()];
            if !g.has_edge(u, v) {
                return Err(CertError::NotAdjacent { u, v });
            }
        }
        if self.length != vs.len() {
            return Err(CertError::LengthMismatch {
                len: self.length,
                nv: vs.len(),
            });
        }
        if self.residue != self.length % self.modulus {
            return Err(CertError::ResidueMismatch {
                residue: self.residue,
                len: self.length,
                modulus: self.modulus,
            });
        }
        if let Some(e) = self.through_edge {
            let mut found = false;
            for i in 0..vs.len() {
                let u = vs[i];
                let v = vs[(i + 1) % vs.len()];
                if Edge::new(u, v) == e {
                    found = true;
                    break;
                }
            }
            if !found {
                return Err(CertError::MissingEdge(e));
            }
        }
        Ok(())
    }

    /// Checks that the witness explains the cycle: along the traversal the
    /// witness coloring advances by the witness permutation on every step
    /// except the closing step over `through_edge` (when present).
    pub fn verify_witness(&self) -> Result<(), CertError> {
        let vs = &self.vertices;
        let steps = if self.through_edge.is_some() {
            vs.len() - 1 // closing edge is the designated edge, not an arc
        } else {
            vs.len()
        };
        for i in 0..steps {
            let u = vs[i];
            let v = vs[(i + 1) % vs.len()];
            let cu = self.witness.coloring.color(u);
            let cv = self.witness.coloring.color(v);
            if self.witness.sigma.apply(cu) != cv {
                return Err(CertError::WitnessStep { u, v });
            }
        }
        Ok(())
    }

    /// Canonical vertex sequence: rotated so the minimum vertex leads, in
    /// the direction whose second vertex is smaller.
    pub fn canonical(&self) -> Vec<usize> {
        canonical_cycle(&self.vertices)
    }
}

/// Canonical form of a cyclic vertex sequence: rotate the minimum vertex to
/// the front, then pick the direction with the smaller second vertex.
pub fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    assert!(cycle.len() >= 3);
    let n = cycle.len();
    let start = (0..n).min_by_key(|&i| cycle[i]).unwrap();
    let succ = cycle[(start + 1) % n];
    let pred = cycle[(start + n - 1) % n];
    let mut out = Vec::with_capacity(n);
    if succ <= pred {
        for i in 0..n {
            out.push(cycle[(start + i) % n]);
        }
    } else {
        for i in 0..n {
            out.push(cycle[(start + n - i) % n]);
        }
    }
    out
}
