//! Canonical forms and keys. Two objects of one class are isomorphic iff
//! their keys are byte-equal.
//!
//! Key layout: `[class byte][dimensions, one byte each][packed bits]`, bits
//! most-significant first. Graphs pack the upper triangle of the canonical
//! adjacency matrix row by row; the other classes pack a canonical
//! incidence matrix: element × set for covers, X × Y for XY-graphs,
//! height-0 × height-1 for posets.

mod graph;
mod matrix;

use std::fmt;

pub use graph::{canon_graph_form, GraphCanonForm};
pub use matrix::{canon_matrix, MatrixCanonForm};

use crate::error::{Error, Result};
use crate::model::{
    BipartitePoset, BitMatrix, BitWriter, ClassTag, Graph, Object, SetCover, XYGraph,
};

/// Byte identity of an unlabeled object.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey {
    bytes: Vec<u8>,
}

impl CanonicalKey {
    fn new(class: ClassTag, dims: &[usize], bits: Vec<u8>) -> Self {
        let mut bytes = Vec::with_capacity(1 + dims.len() + bits.len());
        bytes.push(class.key_byte());
        bytes.extend(
            dims.iter()
                .map(|&d| u8::try_from(d).expect("dimension fits a byte")),
        );
        bytes.extend(bits);
        CanonicalKey { bytes }
    }

    pub fn class(&self) -> ClassTag {
        ClassTag::ALL[usize::from(self.bytes[0]) - 1]
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// Lowercase hex, the public form used on the command line.
    pub fn hex(&self) -> String {
        self.bytes.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let bad = || Error::Json(format!("malformed key {s:?}"));
        if !s.len().is_multiple_of(2) || s.is_empty() {
            return Err(bad());
        }
        let bytes = (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(s.get(i..i + 2).ok_or_else(bad)?, 16).map_err(|_| bad()))
            .collect::<Result<Vec<u8>>>()?;
        if !(1..=4).contains(&bytes[0]) {
            return Err(bad());
        }
        Ok(CanonicalKey { bytes })
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.hex())
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.hex())
    }
}

/// A canonically labeled object together with its key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canonical<T> {
    pub key: CanonicalKey,
    pub object: T,
}

/// Types with a canonical labeling.
pub trait Canonize: Sized {
    fn canonical(&self) -> Canonical<Self>;

    fn canonical_key(&self) -> CanonicalKey {
        self.canonical().key
    }
}

fn graph_key(g: &Graph) -> CanonicalKey {
    let mut w = BitWriter::default();
    for i in 0..g.n() {
        for j in i + 1..g.n() {
            w.push(g.has_edge(i, j));
        }
    }
    CanonicalKey::new(ClassTag::Split, &[g.n()], w.finish())
}

/// Key and witnessing relabeling (`perm[old] = new`) of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphKey {
    pub key: CanonicalKey,
    pub perm: Vec<usize>,
}

pub fn canon_graph(g: &Graph) -> GraphKey {
    let f = canon_graph_form(g);
    GraphKey {
        key: graph_key(&f.graph),
        perm: f.perm,
    }
}

fn matrix_key(class: ClassTag, dims: &[usize], m: &BitMatrix) -> CanonicalKey {
    CanonicalKey::new(class, dims, canon_matrix(m).bits.packed())
}

fn incidence(c: &SetCover) -> BitMatrix {
    assert!(
        c.len() <= 64,
        "canonical forms of covers support at most 64 sets"
    );
    let mut m = BitMatrix::zeros(c.ground_size(), c.len());
    for (j, set) in c.sets().iter().enumerate() {
        for &e in set {
            m.set(e, j, true);
        }
    }
    m
}

pub fn canon_cover(c: &SetCover) -> CanonicalKey {
    matrix_key(ClassTag::Cover, &[c.ground_size(), c.len()], &incidence(c))
}

pub fn canon_xy(g: &XYGraph) -> CanonicalKey {
    matrix_key(ClassTag::Xy, &[g.nx(), g.ny()], g.matrix())
}

/// Shares the XY kernel: a poset is read as its height-0 × height-1 incidence.
pub fn canon_poset(p: &BipartitePoset) -> CanonicalKey {
    matrix_key(ClassTag::Poset, &[p.n0(), p.n1()], p.relation())
}

impl Canonize for Graph {
    fn canonical(&self) -> Canonical<Self> {
        let f = canon_graph_form(self);
        Canonical {
            key: graph_key(&f.graph),
            object: f.graph,
        }
    }
}

impl Canonize for XYGraph {
    fn canonical(&self) -> Canonical<Self> {
        let f = canon_matrix(self.matrix());
        let key = CanonicalKey::new(ClassTag::Xy, &[self.nx(), self.ny()], f.bits.packed());
        Canonical {
            key,
            object: XYGraph::from_matrix(f.bits),
        }
    }
}

impl Canonize for BipartitePoset {
    fn canonical(&self) -> Canonical<Self> {
        let f = canon_matrix(self.relation());
        let key = CanonicalKey::new(ClassTag::Poset, &[self.n0(), self.n1()], f.bits.packed());
        Canonical {
            key,
            object: BipartitePoset::from_raw(f.bits),
        }
    }
}

impl Canonize for SetCover {
    fn canonical(&self) -> Canonical<Self> {
        let f = canon_matrix(&incidence(self));
        let key = CanonicalKey::new(
            ClassTag::Cover,
            &[self.ground_size(), self.len()],
            f.bits.packed(),
        );
        let sets = (0..f.bits.cols())
            .map(|j| crate::model::iter_bits(f.bits.column(j)).collect())
            .collect();
        Canonical {
            key,
            object: SetCover::from_raw(self.ground_size(), sets),
        }
    }
}

impl Canonize for Object {
    fn canonical(&self) -> Canonical<Self> {
        fn lift<T: Canonize + Into<Object>>(x: &T) -> Canonical<Object> {
            let c = x.canonical();
            Canonical {
                key: c.key,
                object: c.object.into(),
            }
        }
        match self {
            Object::Split(g) => lift(g),
            Object::Cover(c) => lift(c),
            Object::Xy(g) => lift(g),
            Object::Poset(p) => lift(p),
        }
    }

    fn canonical_key(&self) -> CanonicalKey {
        match self {
            Object::Split(g) => canon_graph(g).key,
            Object::Cover(c) => canon_cover(c),
            Object::Xy(g) => canon_xy(g),
            Object::Poset(p) => canon_poset(p),
        }
    }
}

/// Whether two objects of the same class are isomorphic.
pub fn is_isomorphic(a: &Object, b: &Object) -> Result<bool> {
    if a.class() != b.class() {
        return Err(Error::ClassMismatch {
            expected: a.class(),
            found: b.class(),
        });
    }
    Ok(a.canonical_key() == b.canonical_key())
}
