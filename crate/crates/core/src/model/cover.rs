use super::bits::{bit, iter_bits};
use super::{validate, ClassTag, Object};
use crate::error::{Error, Result};

/// A family of subsets of the ground set `0..ground_size`.
///
/// Stored in normal form: each set ascending, the family sorted
/// lexicographically. Repeated sets are representable so that minimality
/// can be reported on rather than refused.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetCover {
    ground_size: usize,
    sets: Vec<Vec<usize>>,
}

impl SetCover {
    /// Normalises and checks that every element is in range and covered.
    pub fn new(ground_size: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        let c = SetCover::from_raw(ground_size, sets);
        let violations = validate(&Object::Cover(c.clone()));
        if violations.is_empty() {
            Ok(c)
        } else {
            Err(Error::Invalid {
                class: ClassTag::Cover,
                violations: violations.iter().map(ToString::to_string).collect(),
            })
        }
    }

    /// Normalises without checking invariants.
    pub fn from_raw(ground_size: usize, mut sets: Vec<Vec<usize>>) -> Self {
        for s in &mut sets {
            s.sort_unstable();
            s.dedup();
        }
        sets.sort();
        SetCover { ground_size, sets }
    }

    /// Builds from element masks over a ground set of size `ground_size`.
    pub fn from_masks(ground_size: usize, masks: impl IntoIterator<Item = u64>) -> Self {
        SetCover::from_raw(
            ground_size,
            masks.into_iter().map(|m| iter_bits(m).collect()).collect(),
        )
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Element masks; out-of-range elements are dropped.
    pub fn masks(&self) -> Vec<u64> {
        self.sets
            .iter()
            .map(|s| s.iter().filter(|&&e| e < 64).fold(0, |m, &e| m | bit(e)))
            .collect()
    }

    /// Union of all sets as a mask.
    pub fn union_mask(&self) -> u64 {
        self.masks().into_iter().fold(0, |a, m| a | m)
    }

    /// Relabels elements (`perm[old] = new`) and renormalises.
    pub fn relabel(&self, perm: &[usize]) -> SetCover {
        let sets = self
            .sets
            .iter()
            .map(|s| s.iter().map(|&e| perm[e]).collect())
            .collect();
        SetCover::from_raw(self.ground_size, sets)
    }
}
