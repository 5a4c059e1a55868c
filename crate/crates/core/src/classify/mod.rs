//! Split recognition, KS-partitions, and the balance notion of each class
//! together with the structure that witnesses imbalance.

mod cover;
mod poset;
mod split;
mod xy;

use std::fmt;

pub(crate) use cover::require_minimal;
pub use cover::{balance_cover, is_minimal, loyal_elements};
pub use poset::{balance_poset, poset_support};
pub use split::{
    balance_split, is_split, k_max_partition, k_max_partitions, loyal_vertices_split, omega_alpha,
    s_max_partition, s_max_partitions, swing_vertices, trichotomy, SplitAnalysis, Trichotomy,
};
pub use xy::{balance_xy, xy_isolates_universals};

use crate::error::Result;
use crate::model::Object;

/// The structure whose presence makes an object unbalanced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Witness {
    /// A vertex of S adjacent to all of K, in the S-max partition.
    SwingVertex(usize),
    /// Index of the set of size `|V| - |C| + 1`.
    ExtremalSet(usize),
    /// An X-vertex adjacent to all of Y.
    UniversalVertex(usize),
    /// A height-0 point below every height-1 point.
    FullSupportPoint(usize),
}

impl Witness {
    pub fn kind(self) -> &'static str {
        match self {
            Witness::SwingVertex(_) => "swing_vertex",
            Witness::ExtremalSet(_) => "extremal_set",
            Witness::UniversalVertex(_) => "universal_vertex",
            Witness::FullSupportPoint(_) => "full_support_point",
        }
    }

    pub fn id(self) -> usize {
        match self {
            Witness::SwingVertex(i)
            | Witness::ExtremalSet(i)
            | Witness::UniversalVertex(i)
            | Witness::FullSupportPoint(i) => i,
        }
    }
}

/// Balance of an object; an unbalanced object always carries a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Balance {
    Balanced,
    Unbalanced(Witness),
}

impl Balance {
    pub fn is_balanced(self) -> bool {
        self == Balance::Balanced
    }

    pub fn witness(self) -> Option<Witness> {
        match self {
            Balance::Balanced => None,
            Balance::Unbalanced(w) => Some(w),
        }
    }

    pub fn as_str(self) -> &'static str {
        if self.is_balanced() {
            "balanced"
        } else {
            "unbalanced"
        }
    }
}

impl fmt::Display for Balance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Dispatches to the balance test of the object's class.
pub fn balance(obj: &Object) -> Result<Balance> {
    match obj {
        Object::Split(g) => balance_split(g),
        Object::Cover(c) => balance_cover(c),
        Object::Xy(g) => balance_xy(g),
        Object::Poset(p) => Ok(balance_poset(p)),
    }
}
