//! Domain types for the four classes, plus their text formats.
//!
//! Every point set is dense (`0..n`) and bounded by [`MAX_POINTS`] so vertex
//! sets fit in a `u64` mask.

mod bits;
mod cover;
mod graph;
pub mod graph6;
mod json;
mod poset;
mod validate;
mod xy;

use std::fmt;
use std::str::FromStr;

pub use bits::{bit, iter_bits, mask_of, BitMatrix};
pub(crate) use bits::{low_ones, BitWriter};
pub use cover::SetCover;
pub use graph::{Graph, KSPartition};
pub use json::{parse_json, to_json, to_json_value};
pub use poset::BipartitePoset;
pub use validate::{validate, validate_partition, Violation};
pub use xy::XYGraph;

use crate::error::{Error, Result};

/// Largest point count any object may have.
pub const MAX_POINTS: usize = 64;

/// The four combinatorial classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassTag {
    Split,
    Cover,
    Xy,
    Poset,
}

impl ClassTag {
    pub const ALL: [ClassTag; 4] = [
        ClassTag::Split,
        ClassTag::Cover,
        ClassTag::Xy,
        ClassTag::Poset,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassTag::Split => "split",
            ClassTag::Cover => "cover",
            ClassTag::Xy => "xy",
            ClassTag::Poset => "poset",
        }
    }

    /// Leading byte of every canonical key of this class.
    pub fn key_byte(self) -> u8 {
        match self {
            ClassTag::Split => 1,
            ClassTag::Cover => 2,
            ClassTag::Xy => 3,
            ClassTag::Poset => 4,
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "split" => Ok(ClassTag::Split),
            "cover" => Ok(ClassTag::Cover),
            "xy" => Ok(ClassTag::Xy),
            "poset" => Ok(ClassTag::Poset),
            other => Err(Error::Json(format!("unknown class {other:?}"))),
        }
    }
}

/// An object of any class.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Object {
    Split(Graph),
    Cover(SetCover),
    Xy(XYGraph),
    Poset(BipartitePoset),
}

impl Object {
    pub fn class(&self) -> ClassTag {
        match self {
            Object::Split(_) => ClassTag::Split,
            Object::Cover(_) => ClassTag::Cover,
            Object::Xy(_) => ClassTag::Xy,
            Object::Poset(_) => ClassTag::Poset,
        }
    }

    /// Number of points: vertices, ground elements, or poset elements.
    pub fn points(&self) -> usize {
        match self {
            Object::Split(g) => g.n(),
            Object::Cover(c) => c.ground_size(),
            Object::Xy(g) => g.n(),
            Object::Poset(p) => p.n(),
        }
    }

    /// One-line text form: graph6 for graphs, compact JSON for the rest.
    pub fn serialize(&self) -> String {
        match self {
            Object::Split(g) => graph6::serialize_graph6(g).expect("graph exceeds graph6 range"),
            other => to_json(other),
        }
    }

    /// Parses one line in either format. JSON is recognised by a leading `{`.
    pub fn parse_line(line: &str) -> Result<Object> {
        let line = line.trim();
        if line.starts_with('{') {
            parse_json(line)
        } else {
            graph6::parse_graph6(line).map(Object::Split)
        }
    }

    pub fn as_split(&self) -> Result<&Graph> {
        match self {
            Object::Split(g) => Ok(g),
            other => Err(mismatch(ClassTag::Split, other)),
        }
    }

    pub fn as_cover(&self) -> Result<&SetCover> {
        match self {
            Object::Cover(c) => Ok(c),
            other => Err(mismatch(ClassTag::Cover, other)),
        }
    }

    pub fn as_xy(&self) -> Result<&XYGraph> {
        match self {
            Object::Xy(g) => Ok(g),
            other => Err(mismatch(ClassTag::Xy, other)),
        }
    }

    pub fn as_poset(&self) -> Result<&BipartitePoset> {
        match self {
            Object::Poset(p) => Ok(p),
            other => Err(mismatch(ClassTag::Poset, other)),
        }
    }
}

fn mismatch(expected: ClassTag, found: &Object) -> Error {
    Error::ClassMismatch {
        expected,
        found: found.class(),
    }
}

impl From<Graph> for Object {
    fn from(g: Graph) -> Self {
        Object::Split(g)
    }
}

impl From<SetCover> for Object {
    fn from(c: SetCover) -> Self {
        Object::Cover(c)
    }
}

impl From<XYGraph> for Object {
    fn from(g: XYGraph) -> Self {
        Object::Xy(g)
    }
}

impl From<BipartitePoset> for Object {
    fn from(p: BipartitePoset) -> Self {
        Object::Poset(p)
    }
}
