//! Bijections between the four classes, the shift from XY-graphs on `n`
//! points to unbalanced split graphs on `n + 1`, and the four compilation
//! maps with their inverses.
//!
//! Every public map canonicalizes its input, runs the construction, and
//! returns the canonically labeled output with a [`MapReport`]. The `_with`
//! forms take a [`Chooser`] for the choice points.

mod choice;
mod construct;

use std::fmt;
use std::str::FromStr;

pub use choice::{for_each_choice, Choice, ChoicePoint, Chooser, LeastIndex, Replay};

use choice::Recorder;

use crate::canon::{CanonicalKey, Canonize};
use crate::classify::require_minimal;
use crate::coverage::{touch, Op};
use crate::error::{Error, Result};
use crate::model::{BipartitePoset, ClassTag, Graph, Object, SetCover, XYGraph};

/// Keys on both sides of a map plus the picks made on the way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapReport {
    pub input_key: CanonicalKey,
    pub output_key: CanonicalKey,
    pub choices: Vec<Choice>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mapped<T> {
    pub output: T,
    pub report: MapReport,
}

impl<T: Into<Object>> Mapped<T> {
    pub fn into_object(self) -> Mapped<Object> {
        Mapped {
            output: self.output.into(),
            report: self.report,
        }
    }
}

fn run<I: Canonize, O: Canonize>(
    input: &I,
    ch: &mut dyn Chooser,
    f: impl FnOnce(&I, &mut dyn Chooser) -> Result<O>,
) -> Result<Mapped<O>> {
    let cin = input.canonical();
    let mut rec = Recorder::new(ch);
    let out = f(&cin.object, &mut rec)?;
    let cout = out.canonical();
    Ok(Mapped {
        output: cout.object,
        report: MapReport {
            input_key: cin.key,
            output_key: cout.key,
            choices: rec.log,
        },
    })
}

macro_rules! map_fns {
    ($(#[$doc:meta])* $name:ident, $with:ident, $op:ident, $in:ty => $out:ty, |$x:ident, $ch:ident| $body:expr) => {
        $(#[$doc])*
        pub fn $name(input: &$in) -> Result<Mapped<$out>> {
            $with(input, &mut LeastIndex)
        }

        $(#[$doc])*
        pub fn $with(input: &$in, chooser: &mut dyn Chooser) -> Result<Mapped<$out>> {
            touch(Op::$op);
            run(input, chooser, |$x: &$in, $ch: &mut dyn Chooser| $body)
        }
    };
}

macro_rules! cover_map_fns {
    ($(#[$doc:meta])* $name:ident, $with:ident, $op:ident, $out:ty, |$x:ident, $ch:ident| $body:expr) => {
        $(#[$doc])*
        pub fn $name(input: &SetCover) -> Result<Mapped<$out>> {
            $with(input, &mut LeastIndex)
        }

        $(#[$doc])*
        pub fn $with(input: &SetCover, chooser: &mut dyn Chooser) -> Result<Mapped<$out>> {
            touch(Op::$op);
            require_minimal(input)?;
            run(input, chooser, |$x: &SetCover, $ch: &mut dyn Chooser| $body)
        }
    };
}

macro_rules! up_fns {
    ($(#[$doc:meta])* $name:ident, $with:ident, $op:ident, $t:ty, |$x:ident, $n:ident, $ch:ident| $body:expr) => {
        $(#[$doc])*
        pub fn $name(input: &$t, n: usize) -> Result<Mapped<$t>> {
            $with(input, n, &mut LeastIndex)
        }

        $(#[$doc])*
        pub fn $with(input: &$t, n: usize, chooser: &mut dyn Chooser) -> Result<Mapped<$t>> {
            touch(Op::$op);
            let $n = n;
            run(input, chooser, |$x: &$t, $ch: &mut dyn Chooser| $body)
        }
    };
}

map_fns!(
    /// One set `{s} ∪ N(s)` per `s` in S of an S-max partition.
    split_to_cover, split_to_cover_with, SplitToCover, Graph => SetCover, |g, ch| construct::split_to_cover(g, ch)
);
cover_map_fns!(
    /// Loyal representatives form S, the other elements the clique K.
    cover_to_split, cover_to_split_with, CoverToSplit, Graph, |c, ch| construct::cover_to_split(c, ch)
);
map_fns!(
    /// X = S and Y = K of an S-max partition, cross edges only.
    split_to_xy, split_to_xy_with, SplitToXy, Graph => XYGraph, |g, ch| construct::split_to_xy(g, ch)
);
map_fns!(
    /// Adds every edge inside Y. Requires no Y-isolates.
    xy_to_split, xy_to_split_with, XyToSplit, XYGraph => Graph, |h, _ch| construct::xy_to_split(h)
);
map_fns!(
    /// Height-1 points are K of an S-max partition.
    split_to_poset, split_to_poset_with, SplitToPoset, Graph => BipartitePoset, |g, ch| construct::split_to_poset(g, ch)
);
map_fns!(
    /// Adds every edge among height-1 points.
    poset_to_split, poset_to_split_with, PosetToSplit, BipartitePoset => Graph, |p, _ch| Ok(construct::poset_to_split(p))
);
map_fns!(
    /// Adds a vertex adjacent to all of Y and completes `Y ∪ {v}`; the
    /// result has one more vertex and is unbalanced.
    xy_to_unbalanced_split, xy_to_unbalanced_split_with, XyToUnbalancedSplit, XYGraph => Graph,
    |h, _ch| Ok(construct::xy_to_unbalanced_split(h))
);
map_fns!(
    /// Removes a swing vertex of a K-max partition; X = S, Y = the rest of K.
    unbalanced_split_to_xy, unbalanced_split_to_xy_with, UnbalancedSplitToXy, Graph => XYGraph,
    |g, ch| construct::unbalanced_split_to_xy(g, ch)
);
cover_map_fns!(
    /// Representatives at height 0, below the other elements of their set.
    cover_to_poset, cover_to_poset_with, CoverToPoset, BipartitePoset, |c, ch| construct::cover_to_poset(c, ch)
);
map_fns!(
    /// One set per height-0 point: the point and everything above it.
    poset_to_cover, poset_to_cover_with, PosetToCover, BipartitePoset => SetCover, |p, _ch| Ok(construct::poset_to_cover(p))
);
map_fns!(
    /// One set `{x} ∪ N(x)` per X-vertex. Requires no Y-isolates.
    xy_to_cover, xy_to_cover_with, XyToCover, XYGraph => SetCover, |h, _ch| construct::xy_to_cover(h)
);
cover_map_fns!(
    /// X = loyal representatives, Y = the other elements.
    cover_to_xy, cover_to_xy_with, CoverToXy, XYGraph, |c, ch| construct::cover_to_xy(c, ch)
);
map_fns!(
    /// X at height 0, Y at height 1. Requires no Y-isolates.
    xy_to_poset, xy_to_poset_with, XyToPoset, XYGraph => BipartitePoset, |h, _ch| construct::xy_to_poset(h)
);
map_fns!(
    /// Height 0 becomes X, height 1 becomes Y.
    poset_to_xy, poset_to_xy_with, PosetToXy, BipartitePoset => XYGraph, |p, _ch| Ok(construct::poset_to_xy(p))
);
map_fns!(
    /// Unbalanced split graph on `n` vertices to a split graph on fewer.
    compile_split_down, compile_split_down_with, CompileSplitDown, Graph => Graph,
    |g, ch| construct::compile_split_down(g, ch)
);
up_fns!(
    /// Split graph on `t < n` vertices to an unbalanced one on `n`.
    compile_split_up, compile_split_up_with, CompileSplitUp, Graph, |h, n, ch| construct::compile_split_up(h, n, ch)
);
cover_map_fns!(
    /// Unbalanced minimal cover of an `n`-set to a minimal cover of a smaller set.
    compile_cover_down, compile_cover_down_with, CompileCoverDown, SetCover, |c, ch| construct::compile_cover_down(c, ch)
);

/// Minimal cover of a `t`-set, `t < n`, to an unbalanced one of an `n`-set.
pub fn compile_cover_up(input: &SetCover, n: usize) -> Result<Mapped<SetCover>> {
    compile_cover_up_with(input, n, &mut LeastIndex)
}

/// Minimal cover of a `t`-set, `t < n`, to an unbalanced one of an `n`-set.
pub fn compile_cover_up_with(
    input: &SetCover,
    n: usize,
    chooser: &mut dyn Chooser,
) -> Result<Mapped<SetCover>> {
    touch(Op::CompileCoverUp);
    require_minimal(input)?;
    run(input, chooser, |c: &SetCover, ch: &mut dyn Chooser| {
        construct::compile_cover_up(c, n, ch)
    })
}

map_fns!(
    /// Unbalanced XY-graph on `n` vertices to one with fewer, without Y-isolates.
    compile_xy_down, compile_xy_down_with, CompileXyDown, XYGraph => XYGraph, |g, ch| construct::compile_xy_down(g, ch)
);
up_fns!(
    /// XY-graph without Y-isolates on `t < n` vertices to an unbalanced one on `n`.
    compile_xy_up, compile_xy_up_with, CompileXyUp, XYGraph, |h, n, _ch| construct::compile_xy_up(h, n)
);
map_fns!(
    /// Unbalanced bipartite poset on `n` points to one on fewer.
    compile_poset_down, compile_poset_down_with, CompilePosetDown, BipartitePoset => BipartitePoset,
    |p, ch| construct::compile_poset_down(p, ch)
);
up_fns!(
    /// Bipartite poset on `t < n` points to an unbalanced one on `n`.
    compile_poset_up, compile_poset_up_with, CompilePosetUp, BipartitePoset, |q, n, ch| construct::compile_poset_up(q, n, ch)
);

/// Every map, for dispatch on [`Object`]s.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MapId {
    SplitToCover,
    CoverToSplit,
    SplitToXy,
    XyToSplit,
    SplitToPoset,
    PosetToSplit,
    XyToUnbalancedSplit,
    UnbalancedSplitToXy,
    CoverToPoset,
    PosetToCover,
    XyToCover,
    CoverToXy,
    XyToPoset,
    PosetToXy,
    CompileDown(ClassTag),
    CompileUp(ClassTag),
}

impl MapId {
    pub const BIJECTIONS: [MapId; 14] = [
        MapId::SplitToCover,
        MapId::CoverToSplit,
        MapId::SplitToXy,
        MapId::XyToSplit,
        MapId::SplitToPoset,
        MapId::PosetToSplit,
        MapId::XyToUnbalancedSplit,
        MapId::UnbalancedSplitToXy,
        MapId::CoverToPoset,
        MapId::PosetToCover,
        MapId::XyToCover,
        MapId::CoverToXy,
        MapId::XyToPoset,
        MapId::PosetToXy,
    ];

    /// All 22 maps.
    pub fn all() -> Vec<MapId> {
        let mut v = MapId::BIJECTIONS.to_vec();
        v.extend(ClassTag::ALL.iter().map(|&c| MapId::CompileDown(c)));
        v.extend(ClassTag::ALL.iter().map(|&c| MapId::CompileUp(c)));
        v
    }

    pub fn name(self) -> &'static str {
        match self {
            MapId::SplitToCover => "split_to_cover",
            MapId::CoverToSplit => "cover_to_split",
            MapId::SplitToXy => "split_to_xy",
            MapId::XyToSplit => "xy_to_split",
            MapId::SplitToPoset => "split_to_poset",
            MapId::PosetToSplit => "poset_to_split",
            MapId::XyToUnbalancedSplit => "xy_to_unbalanced_split",
            MapId::UnbalancedSplitToXy => "unbalanced_split_to_xy",
            MapId::CoverToPoset => "cover_to_poset",
            MapId::PosetToCover => "poset_to_cover",
            MapId::XyToCover => "xy_to_cover",
            MapId::CoverToXy => "cover_to_xy",
            MapId::XyToPoset => "xy_to_poset",
            MapId::PosetToXy => "poset_to_xy",
            MapId::CompileDown(ClassTag::Split) => "compile_split_down",
            MapId::CompileDown(ClassTag::Cover) => "compile_cover_down",
            MapId::CompileDown(ClassTag::Xy) => "compile_xy_down",
            MapId::CompileDown(ClassTag::Poset) => "compile_poset_down",
            MapId::CompileUp(ClassTag::Split) => "compile_split_up",
            MapId::CompileUp(ClassTag::Cover) => "compile_cover_up",
            MapId::CompileUp(ClassTag::Xy) => "compile_xy_up",
            MapId::CompileUp(ClassTag::Poset) => "compile_poset_up",
        }
    }

    pub fn input_class(self) -> ClassTag {
        use ClassTag::*;
        match self {
            MapId::SplitToCover
            | MapId::SplitToXy
            | MapId::SplitToPoset
            | MapId::UnbalancedSplitToXy => Split,
            MapId::CoverToSplit | MapId::CoverToPoset | MapId::CoverToXy => Cover,
            MapId::XyToSplit | MapId::XyToUnbalancedSplit | MapId::XyToCover | MapId::XyToPoset => {
                Xy
            }
            MapId::PosetToSplit | MapId::PosetToCover | MapId::PosetToXy => Poset,
            MapId::CompileDown(c) | MapId::CompileUp(c) => c,
        }
    }

    pub fn output_class(self) -> ClassTag {
        use ClassTag::*;
        match self {
            MapId::CoverToSplit
            | MapId::XyToSplit
            | MapId::PosetToSplit
            | MapId::XyToUnbalancedSplit => Split,
            MapId::SplitToCover | MapId::PosetToCover | MapId::XyToCover => Cover,
            MapId::SplitToXy | MapId::UnbalancedSplitToXy | MapId::CoverToXy | MapId::PosetToXy => {
                Xy
            }
            MapId::SplitToPoset | MapId::CoverToPoset | MapId::XyToPoset => Poset,
            MapId::CompileDown(c) | MapId::CompileUp(c) => c,
        }
    }

    /// Runs the map. `n` is the target size of compile-up maps and ignored
    /// by the others.
    pub fn apply(self, obj: &Object, n: usize, ch: &mut dyn Chooser) -> Result<Mapped<Object>> {
        use MapId as M;
        Ok(match self {
            M::SplitToCover => split_to_cover_with(obj.as_split()?, ch)?.into_object(),
            M::CoverToSplit => cover_to_split_with(obj.as_cover()?, ch)?.into_object(),
            M::SplitToXy => split_to_xy_with(obj.as_split()?, ch)?.into_object(),
            M::XyToSplit => xy_to_split_with(obj.as_xy()?, ch)?.into_object(),
            M::SplitToPoset => split_to_poset_with(obj.as_split()?, ch)?.into_object(),
            M::PosetToSplit => poset_to_split_with(obj.as_poset()?, ch)?.into_object(),
            M::XyToUnbalancedSplit => xy_to_unbalanced_split_with(obj.as_xy()?, ch)?.into_object(),
            M::UnbalancedSplitToXy => {
                unbalanced_split_to_xy_with(obj.as_split()?, ch)?.into_object()
            }
            M::CoverToPoset => cover_to_poset_with(obj.as_cover()?, ch)?.into_object(),
            M::PosetToCover => poset_to_cover_with(obj.as_poset()?, ch)?.into_object(),
            M::XyToCover => xy_to_cover_with(obj.as_xy()?, ch)?.into_object(),
            M::CoverToXy => cover_to_xy_with(obj.as_cover()?, ch)?.into_object(),
            M::XyToPoset => xy_to_poset_with(obj.as_xy()?, ch)?.into_object(),
            M::PosetToXy => poset_to_xy_with(obj.as_poset()?, ch)?.into_object(),
            M::CompileDown(ClassTag::Split) => {
                compile_split_down_with(obj.as_split()?, ch)?.into_object()
            }
            M::CompileDown(ClassTag::Cover) => {
                compile_cover_down_with(obj.as_cover()?, ch)?.into_object()
            }
            M::CompileDown(ClassTag::Xy) => compile_xy_down_with(obj.as_xy()?, ch)?.into_object(),
            M::CompileDown(ClassTag::Poset) => {
                compile_poset_down_with(obj.as_poset()?, ch)?.into_object()
            }
            M::CompileUp(ClassTag::Split) => {
                compile_split_up_with(obj.as_split()?, n, ch)?.into_object()
            }
            M::CompileUp(ClassTag::Cover) => {
                compile_cover_up_with(obj.as_cover()?, n, ch)?.into_object()
            }
            M::CompileUp(ClassTag::Xy) => compile_xy_up_with(obj.as_xy()?, n, ch)?.into_object(),
            M::CompileUp(ClassTag::Poset) => {
                compile_poset_up_with(obj.as_poset()?, n, ch)?.into_object()
            }
        })
    }
}

impl fmt::Display for MapId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MapId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MapId::all()
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Json(format!("unknown map {s:?}")))
    }
}

/// The seven forward/inverse pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BijectionPair {
    SplitCover,
    SplitXy,
    SplitPoset,
    /// XY-graphs on `n` points against unbalanced split graphs on `n + 1`.
    XyShift,
    CoverPoset,
    XyCover,
    XyPoset,
}

impl BijectionPair {
    pub const ALL: [BijectionPair; 7] = [
        BijectionPair::SplitCover,
        BijectionPair::SplitXy,
        BijectionPair::SplitPoset,
        BijectionPair::XyShift,
        BijectionPair::CoverPoset,
        BijectionPair::XyCover,
        BijectionPair::XyPoset,
    ];

    /// The six balance-preserving bijections; the shift is not one of them.
    pub const BALANCED: [BijectionPair; 6] = [
        BijectionPair::SplitCover,
        BijectionPair::SplitXy,
        BijectionPair::SplitPoset,
        BijectionPair::CoverPoset,
        BijectionPair::XyCover,
        BijectionPair::XyPoset,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BijectionPair::SplitCover => "split-cover",
            BijectionPair::SplitXy => "split-xy",
            BijectionPair::SplitPoset => "split-poset",
            BijectionPair::XyShift => "xy-shift",
            BijectionPair::CoverPoset => "cover-poset",
            BijectionPair::XyCover => "xy-cover",
            BijectionPair::XyPoset => "xy-poset",
        }
    }

    pub fn forward(self) -> MapId {
        match self {
            BijectionPair::SplitCover => MapId::SplitToCover,
            BijectionPair::SplitXy => MapId::SplitToXy,
            BijectionPair::SplitPoset => MapId::SplitToPoset,
            BijectionPair::XyShift => MapId::XyToUnbalancedSplit,
            BijectionPair::CoverPoset => MapId::CoverToPoset,
            BijectionPair::XyCover => MapId::XyToCover,
            BijectionPair::XyPoset => MapId::XyToPoset,
        }
    }

    pub fn inverse(self) -> MapId {
        match self {
            BijectionPair::SplitCover => MapId::CoverToSplit,
            BijectionPair::SplitXy => MapId::XyToSplit,
            BijectionPair::SplitPoset => MapId::PosetToSplit,
            BijectionPair::XyShift => MapId::UnbalancedSplitToXy,
            BijectionPair::CoverPoset => MapId::PosetToCover,
            BijectionPair::XyCover => MapId::CoverToXy,
            BijectionPair::XyPoset => MapId::PosetToXy,
        }
    }
}

impl fmt::Display for BijectionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BijectionPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BijectionPair::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Json(format!("unknown pair {s:?}")))
    }
}

#[cfg(test)]
mod tests;
