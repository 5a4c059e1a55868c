//! Counts how often each classification and bijection operation runs, so
//! test harnesses can check that a suite reached all of them.

use std::sync::atomic::{AtomicU64, Ordering};

macro_rules! ops {
    ($($name:ident => $text:literal,)*) => {
        /// Operations tracked by [`touch`].
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
        pub enum Op {
            $($name,)*
        }

        impl Op {
            pub const ALL: &'static [Op] = &[$(Op::$name,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(Op::$name => $text,)*
                }
            }
        }
    };
}

ops! {
    IsSplit => "is_split",
    OmegaAlpha => "omega_alpha",
    SMaxPartition => "s_max_partition",
    KMaxPartition => "k_max_partition",
    Trichotomy => "trichotomy",
    SwingVertices => "swing_vertices",
    BalanceSplit => "balance_split",
    LoyalVerticesSplit => "loyal_vertices_split",
    LoyalElements => "loyal_elements",
    IsMinimal => "is_minimal",
    BalanceCover => "balance_cover",
    XyIsolatesUniversals => "xy_isolates_universals",
    BalanceXy => "balance_xy",
    PosetSupport => "poset_support",
    BalancePoset => "balance_poset",
    SplitToCover => "split_to_cover",
    CoverToSplit => "cover_to_split",
    SplitToXy => "split_to_xy",
    XyToSplit => "xy_to_split",
    SplitToPoset => "split_to_poset",
    PosetToSplit => "poset_to_split",
    XyToUnbalancedSplit => "xy_to_unbalanced_split",
    UnbalancedSplitToXy => "unbalanced_split_to_xy",
    CoverToPoset => "cover_to_poset",
    PosetToCover => "poset_to_cover",
    XyToCover => "xy_to_cover",
    CoverToXy => "cover_to_xy",
    XyToPoset => "xy_to_poset",
    PosetToXy => "poset_to_xy",
    CompileSplitDown => "compile_split_down",
    CompileSplitUp => "compile_split_up",
    CompileCoverDown => "compile_cover_down",
    CompileCoverUp => "compile_cover_up",
    CompileXyDown => "compile_xy_down",
    CompileXyUp => "compile_xy_up",
    CompilePosetDown => "compile_poset_down",
    CompilePosetUp => "compile_poset_up",
}

const N: usize = Op::ALL.len();

static COUNTS: [AtomicU64; N] = [const { AtomicU64::new(0) }; N];

pub(crate) fn touch(op: Op) {
    COUNTS[op as usize].fetch_add(1, Ordering::Relaxed);
}

/// Number of calls of `op` in this process so far.
pub fn count(op: Op) -> u64 {
    COUNTS[op as usize].load(Ordering::Relaxed)
}

/// Operations never called in this process.
pub fn untouched() -> Vec<Op> {
    Op::ALL
        .iter()
        .copied()
        .filter(|&op| count(op) == 0)
        .collect()
}
