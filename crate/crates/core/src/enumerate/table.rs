use serde::Serialize;

use super::{
    check_bound, cover_from_split, enumerate_split, enumerate_xy, poset_from_split, Census,
    MAX_ENUM_N,
};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassCounts {
    pub total: usize,
    pub balanced: usize,
    pub unbalanced: usize,
}

impl From<&Census> for ClassCounts {
    fn from(c: &Census) -> Self {
        ClassCounts {
            total: c.len(),
            balanced: c.balanced,
            unbalanced: c.unbalanced,
        }
    }
}

/// Counts at one `n`. `xy` excludes Y-isolates, `xy_all` does not.
/// `cumulative` is the number of split graphs on fewer than `n` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub n: usize,
    pub split: ClassCounts,
    pub cover: ClassCounts,
    pub xy: ClassCounts,
    pub poset: ClassCounts,
    pub xy_all: usize,
    pub cumulative: usize,
}

impl CountRow {
    pub fn classes_agree(&self) -> bool {
        self.split == self.cover && self.split == self.xy && self.split == self.poset
    }
}

/// Rows `n = 0..=max_n`.
pub fn count_table(max_n: usize) -> Result<Vec<CountRow>> {
    check_bound("count table", max_n, MAX_ENUM_N)?;
    let mut rows: Vec<CountRow> = Vec::new();
    let mut cumulative = 0;
    for n in 0..=max_n {
        let census = enumerate_split(n)?;
        let split = ClassCounts::from(&census);
        rows.push(CountRow {
            n,
            split,
            cover: (&cover_from_split(&census)?).into(),
            xy: (&enumerate_xy(n, true)?).into(),
            poset: (&poset_from_split(&census)?).into(),
            xy_all: enumerate_xy(n, false)?.len(),
            cumulative,
        });
        cumulative += split.total;
    }
    Ok(rows)
}
