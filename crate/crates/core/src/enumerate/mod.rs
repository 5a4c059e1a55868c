//! Exhaustive censuses. XY-graphs are generated directly by orderly
//! generation; the other classes are transported from them through the
//! bijections. [`oracle`] rebuilds small censuses by brute force.

mod oracle;
mod orderly;
mod table;

pub use oracle::{naive_oracle, naive_xy, ORACLE_BOUND_GRAPH, ORACLE_BOUND_MATRIX};
pub use orderly::{stream_xy, XyStream};
pub use table::{count_table, ClassCounts, CountRow};

use rayon::prelude::*;

use crate::biject::{split_to_cover, split_to_poset, xy_to_split};
use crate::canon::CanonicalKey;
use crate::classify::{balance, Balance};
use crate::error::{Error, Result};
use crate::model::{ClassTag, Object};

/// Largest `n` the enumerators accept.
pub const MAX_ENUM_N: usize = 8;

pub(crate) fn check_bound(what: &'static str, n: usize, bound: usize) -> Result<()> {
    if n > bound {
        return Err(Error::Unsupported { what, n, bound });
    }
    Ok(())
}

/// One unlabeled object: its key, canonical representative and balance
/// (`None` when balance is undefined, i.e. an XY-graph with a Y-isolate).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub key: CanonicalKey,
    pub object: Object,
    pub balance: Option<Balance>,
}

impl Entry {
    pub(crate) fn new(key: CanonicalKey, object: Object) -> Self {
        let balance = balance(&object).ok();
        Entry {
            key,
            object,
            balance,
        }
    }
}

/// All unlabeled objects of a class on `n` points, sorted by key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub class: ClassTag,
    pub n: usize,
    pub entries: Vec<Entry>,
    pub balanced: usize,
    pub unbalanced: usize,
    /// Objects outside the domain of the balance notion.
    pub out_of_domain: usize,
}

impl Census {
    /// Sorts, drops repeated keys and tallies balance.
    pub fn from_entries(class: ClassTag, n: usize, mut entries: Vec<Entry>) -> Self {
        entries.sort_by(|a, b| a.key.cmp(&b.key));
        entries.dedup_by(|a, b| a.key == b.key);
        let mut c = Census {
            class,
            n,
            entries,
            balanced: 0,
            unbalanced: 0,
            out_of_domain: 0,
        };
        for e in &c.entries {
            match e.balance {
                Some(Balance::Balanced) => c.balanced += 1,
                Some(Balance::Unbalanced(_)) => c.unbalanced += 1,
                None => c.out_of_domain += 1,
            }
        }
        c
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn keys(&self) -> Vec<CanonicalKey> {
        self.entries.iter().map(|e| e.key.clone()).collect()
    }

    pub fn objects(&self) -> impl Iterator<Item = &Object> {
        self.entries.iter().map(|e| &e.object)
    }

    /// Entries with the given balance; `None` selects all.
    pub fn filtered(&self, balanced: Option<bool>) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(move |e| {
            balanced.is_none_or(|b| e.balance.is_some_and(|x| x.is_balanced() == b))
        })
    }

    /// `# class=<tag> n=<n> count=<c> balanced=<b> unbalanced=<u>`
    pub fn header(&self) -> String {
        format!(
            "# class={} n={} count={} balanced={} unbalanced={}",
            self.class,
            self.n,
            self.len(),
            self.balanced,
            self.unbalanced
        )
    }
}

/// Every XY-graph on `n` points over all shapes `nx + ny = n`, optionally
/// without Y-isolates.
pub fn enumerate_xy(n: usize, require_no_y_isolates: bool) -> Result<Census> {
    let entries = stream_xy(n, require_no_y_isolates)?.collect();
    Ok(Census::from_entries(ClassTag::Xy, n, entries))
}

fn transport(
    class: ClassTag,
    n: usize,
    src: &Census,
    f: impl Fn(&Object) -> Result<(CanonicalKey, Object)> + Sync,
) -> Result<Census> {
    let entries = src
        .entries
        .par_iter()
        .map(|e| f(&e.object).map(|(k, o)| Entry::new(k, o)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Census::from_entries(class, n, entries))
}

/// Split graphs on `n` vertices, transported from XY-graphs without Y-isolates.
pub fn enumerate_split(n: usize) -> Result<Census> {
    let xy = enumerate_xy(n, true)?;
    transport(ClassTag::Split, n, &xy, |o| {
        let m = xy_to_split(o.as_xy()?)?;
        Ok((m.report.output_key, m.output.into()))
    })
}

/// Minimal set covers of an `n`-set.
pub fn enumerate_cover(n: usize) -> Result<Census> {
    cover_from_split(&enumerate_split(n)?)
}

/// Bipartite posets on `n` points.
pub fn enumerate_poset(n: usize) -> Result<Census> {
    poset_from_split(&enumerate_split(n)?)
}

pub(crate) fn cover_from_split(split: &Census) -> Result<Census> {
    transport(ClassTag::Cover, split.n, split, |o| {
        let m = split_to_cover(o.as_split()?)?;
        Ok((m.report.output_key, m.output.into()))
    })
}

pub(crate) fn poset_from_split(split: &Census) -> Result<Census> {
    transport(ClassTag::Poset, split.n, split, |o| {
        let m = split_to_poset(o.as_split()?)?;
        Ok((m.report.output_key, m.output.into()))
    })
}

/// The census of a class; XY-graphs are restricted to those without
/// Y-isolates, the domain of the bijections.
pub fn enumerate(class: ClassTag, n: usize) -> Result<Census> {
    match class {
        ClassTag::Split => enumerate_split(n),
        ClassTag::Cover => enumerate_cover(n),
        ClassTag::Xy => enumerate_xy(n, true),
        ClassTag::Poset => enumerate_poset(n),
    }
}
