//! Choice points. Several constructions pick one of several admissible
//! items (a representative, a swing vertex, ...). A [`Chooser`] makes those
//! picks, which lets tests sweep every admissible combination.

use std::fmt;

/// Where in a construction a choice is made.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChoicePoint {
    SMaxPartition,
    KMaxPartition,
    /// One loyal element per set, in set order.
    LoyalRepresentative,
    SwingVertex,
    UniversalVertex,
    ExtremalSet,
    /// Height-1 point moved to height 0 by the poset down-map.
    DemotedPoint,
    /// Full support point moved to height 1 by the poset up-map.
    PromotedPoint,
}

impl ChoicePoint {
    pub fn name(self) -> &'static str {
        match self {
            ChoicePoint::SMaxPartition => "s_max_partition",
            ChoicePoint::KMaxPartition => "k_max_partition",
            ChoicePoint::LoyalRepresentative => "loyal_representative",
            ChoicePoint::SwingVertex => "swing_vertex",
            ChoicePoint::UniversalVertex => "universal_vertex",
            ChoicePoint::ExtremalSet => "extremal_set",
            ChoicePoint::DemotedPoint => "demoted_point",
            ChoicePoint::PromotedPoint => "promoted_point",
        }
    }
}

impl fmt::Display for ChoicePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Picks an index in `0..admissible` (`admissible >= 1`).
pub trait Chooser {
    fn choose(&mut self, point: ChoicePoint, admissible: usize) -> usize;
}

/// Always the first admissible item.
#[derive(Debug, Default, Clone, Copy)]
pub struct LeastIndex;

impl Chooser for LeastIndex {
    fn choose(&mut self, _: ChoicePoint, _: usize) -> usize {
        0
    }
}

/// One recorded pick.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Choice {
    pub point: ChoicePoint,
    pub index: usize,
    pub admissible: usize,
}

pub(crate) struct Recorder<'a> {
    inner: &'a mut dyn Chooser,
    pub(crate) log: Vec<Choice>,
}

impl<'a> Recorder<'a> {
    pub(crate) fn new(inner: &'a mut dyn Chooser) -> Self {
        Recorder {
            inner,
            log: Vec::new(),
        }
    }
}

impl Chooser for Recorder<'_> {
    fn choose(&mut self, point: ChoicePoint, admissible: usize) -> usize {
        let index = self.inner.choose(point, admissible);
        assert!(
            index < admissible,
            "chooser picked {index} of {admissible} at {point}"
        );
        self.log.push(Choice {
            point,
            index,
            admissible,
        });
        index
    }
}

/// Re-applies a recorded sequence of picks; picks beyond it are 0.
#[derive(Debug, Clone)]
pub struct Replay {
    picks: Vec<usize>,
    pos: usize,
}

impl Replay {
    pub fn new(choices: &[Choice]) -> Self {
        Replay {
            picks: choices.iter().map(|c| c.index).collect(),
            pos: 0,
        }
    }
}

impl Chooser for Replay {
    fn choose(&mut self, _: ChoicePoint, admissible: usize) -> usize {
        let i = self.picks.get(self.pos).copied().unwrap_or(0);
        self.pos += 1;
        i.min(admissible - 1)
    }
}

/// Follows a script of picks and records the arity seen at each step.
struct Scripted {
    script: Vec<usize>,
    taken: Vec<(usize, usize)>,
}

impl Chooser for Scripted {
    fn choose(&mut self, _: ChoicePoint, admissible: usize) -> usize {
        let i = self
            .script
            .get(self.taken.len())
            .copied()
            .unwrap_or(0)
            .min(admissible - 1);
        self.taken.push((i, admissible));
        i
    }
}

/// Runs `f` once for every distinct sequence of admissible picks, in
/// odometer order starting from all-zero, and collects the results.
///
/// `f` must be deterministic given its picks.
pub fn for_each_choice<R>(mut f: impl FnMut(&mut dyn Chooser) -> R) -> Vec<R> {
    let mut out = Vec::new();
    let mut script = Vec::new();
    loop {
        let mut s = Scripted {
            script,
            taken: Vec::new(),
        };
        out.push(f(&mut s));
        let Some(p) = s.taken.iter().rposition(|&(i, a)| i + 1 < a) else {
            return out;
        };
        script = s.taken[..p].iter().map(|&(i, _)| i).collect();
        script.push(s.taken[p].0 + 1);
    }
}
