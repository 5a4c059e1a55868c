use super::bits::{iter_bits, BitMatrix};
use super::{validate, ClassTag, Object, MAX_POINTS};
use crate::error::{Error, Result};

/// Poset of height at most one, stored as its cover relation between the
/// `n0` height-0 points and the `n1` height-1 points.
///
/// Point ids: height-0 points are `0..n0`, height-1 points `n0..n0+n1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BipartitePoset {
    below: BitMatrix,
}

impl BipartitePoset {
    /// Checks that every height-1 point is above some height-0 point.
    pub fn new(below: BitMatrix) -> Result<Self> {
        let p = BipartitePoset::from_raw(below);
        let violations = validate(&Object::Poset(p.clone()));
        if violations.is_empty() {
            Ok(p)
        } else {
            Err(Error::Invalid {
                class: ClassTag::Poset,
                violations: violations.iter().map(ToString::to_string).collect(),
            })
        }
    }

    pub fn from_raw(below: BitMatrix) -> Self {
        assert!(
            below.rows() + below.cols() <= MAX_POINTS,
            "posets are limited to {MAX_POINTS} points"
        );
        BipartitePoset { below }
    }

    /// `pairs` are `(height-0 index, height-1 index)`.
    pub fn from_pairs(n0: usize, n1: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut m = BitMatrix::zeros(n0, n1);
        for &(a, b) in pairs {
            assert!(a < n0 && b < n1, "pair ({a},{b}) outside {n0}x{n1}");
            m.set(a, b, true);
        }
        BipartitePoset::new(m)
    }

    pub fn antichain(n: usize) -> Self {
        BipartitePoset::from_raw(BitMatrix::zeros(n, 0))
    }

    pub fn n0(&self) -> usize {
        self.below.rows()
    }

    pub fn n1(&self) -> usize {
        self.below.cols()
    }

    pub fn n(&self) -> usize {
        self.n0() + self.n1()
    }

    pub fn relation(&self) -> &BitMatrix {
        &self.below
    }

    /// Whether height-0 point `a` lies below height-1 point `b`.
    pub fn is_below(&self, a: usize, b: usize) -> bool {
        self.below.get(a, b)
    }

    /// Height-1 points above `a`, as a mask over `0..n1`.
    pub fn up_set(&self, a: usize) -> u64 {
        self.below.row(a)
    }

    /// Height-0 points below `b`, as a mask over `0..n0`.
    pub fn down_set(&self, b: usize) -> u64 {
        self.below.column(b)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n0()).flat_map(move |a| iter_bits(self.below.row(a)).map(move |b| (a, b)))
    }

    /// The order on point ids: `x ≺ y`.
    pub fn precedes(&self, x: usize, y: usize) -> bool {
        let n0 = self.n0();
        x < n0 && y >= n0 && y < self.n() && self.below.get(x, y - n0)
    }
}
