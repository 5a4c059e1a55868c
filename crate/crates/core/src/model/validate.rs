use std::fmt;

use super::bits::{iter_bits, low_ones};
use super::{Graph, KSPartition, Object, MAX_POINTS};

/// One broken invariant, naming the offending indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    TooManyPoints(usize),
    ElementOutOfRange { set: usize, element: usize },
    Uncovered(usize),
    DuplicateSet(usize, usize),
    EdgeOutOfRange(usize, usize),
    PairOutOfRange(usize, usize),
    EmptyDownSet(usize),
    VertexOutOfRange(usize),
    Overlap(usize),
    Unassigned(usize),
    KNotClique(usize, usize),
    SNotStable(usize, usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooManyPoints(n) => write!(f, "{n} points exceed the limit of {MAX_POINTS}"),
            Violation::ElementOutOfRange { set, element } => {
                write!(
                    f,
                    "set {set} contains element {element} outside the ground set"
                )
            }
            Violation::Uncovered(e) => write!(f, "union ≠ ground set: element {e} uncovered"),
            Violation::DuplicateSet(a, b) => {
                write!(f, "sets not distinct: sets {a} and {b} are equal")
            }
            Violation::EdgeOutOfRange(x, y) => write!(f, "edge outside X×Y: ({x},{y})"),
            Violation::PairOutOfRange(a, b) => {
                write!(f, "pair outside height-0 × height-1: ({a},{b})")
            }
            Violation::EmptyDownSet(b) => write!(f, "height-1 point {b} has empty down-set"),
            Violation::VertexOutOfRange(v) => write!(f, "vertex {v} out of range"),
            Violation::Overlap(v) => write!(f, "K ∩ S ≠ ∅: vertex {v}"),
            Violation::Unassigned(v) => write!(f, "K ∪ S ≠ V: vertex {v} missing"),
            Violation::KNotClique(u, v) => write!(f, "K not a clique: ({u},{v})"),
            Violation::SNotStable(u, v) => write!(f, "S not stable: ({u},{v})"),
        }
    }
}

/// Lists every broken type invariant of `obj`; empty when valid.
pub fn validate(obj: &Object) -> Vec<Violation> {
    let mut out = Vec::new();
    match obj {
        // Graph, XYGraph: invariants hold by construction.
        Object::Split(_) | Object::Xy(_) => {}
        Object::Cover(c) => {
            let n = c.ground_size();
            if n > MAX_POINTS {
                out.push(Violation::TooManyPoints(n));
            }
            let mut covered = vec![false; n];
            for (i, set) in c.sets().iter().enumerate() {
                for &e in set {
                    if e < n {
                        covered[e] = true;
                    } else {
                        out.push(Violation::ElementOutOfRange { set: i, element: e });
                    }
                }
            }
            out.extend(
                covered
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| !c)
                    .map(|(e, _)| Violation::Uncovered(e)),
            );
            // The family is sorted, so equal sets are adjacent.
            for i in 1..c.len() {
                if c.sets()[i - 1] == c.sets()[i] {
                    out.push(Violation::DuplicateSet(i - 1, i));
                }
            }
        }
        Object::Poset(p) => {
            for b in 0..p.n1() {
                if p.down_set(b) == 0 {
                    out.push(Violation::EmptyDownSet(b));
                }
            }
        }
    }
    out
}

/// Checks that `p` is a KS-partition of `g`.
pub fn validate_partition(g: &Graph, p: &KSPartition) -> Vec<Violation> {
    let mut out = Vec::new();
    let all = g.all_vertices();
    out.extend(iter_bits((p.k | p.s) & !all).map(Violation::VertexOutOfRange));
    out.extend(iter_bits(p.k & p.s).map(Violation::Overlap));
    out.extend(iter_bits(all & !(p.k | p.s)).map(Violation::Unassigned));
    let k = p.k & all;
    let s = p.s & all;
    for u in iter_bits(k) {
        for v in iter_bits(k & !low_ones(u + 1)) {
            if !g.has_edge(u, v) {
                out.push(Violation::KNotClique(u, v));
            }
        }
    }
    for u in iter_bits(s) {
        for v in iter_bits(s & g.neighbors(u) & !low_ones(u + 1)) {
            out.push(Violation::SNotStable(u, v));
        }
    }
    out
}
