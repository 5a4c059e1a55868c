//! Orderly generation of 0/1 matrices up to row and column permutation.
//!
//! A canonical matrix with its last row removed is again canonical, since
//! the canonical form is the least row-major reading. So every canonical
//! `r`-row matrix arises from exactly one canonical `(r-1)`-row parent by
//! appending one row, and it suffices to keep the appended candidates that
//! are their own canonical form.

use rayon::prelude::*;

use super::{check_bound, Entry, MAX_ENUM_N};
use crate::canon::{canon_matrix, Canonize};
use crate::error::Result;
use crate::model::{low_ones, BitMatrix, XYGraph};

fn is_canonical(m: &BitMatrix) -> bool {
    canon_matrix(m).bits == *m
}

fn children(parent: &BitMatrix) -> impl Iterator<Item = BitMatrix> + '_ {
    let cols = parent.cols();
    (0..1u64 << cols).filter_map(move |row| {
        let mut rows = parent.row_masks().to_vec();
        rows.push(row);
        let m = BitMatrix::from_rows(cols, rows);
        is_canonical(&m).then_some(m)
    })
}

fn extend(m: BitMatrix, rows: usize, out: &mut Vec<BitMatrix>) {
    if m.rows() == rows {
        out.push(m);
        return;
    }
    for c in children(&m).collect::<Vec<_>>() {
        extend(c, rows, out);
    }
}

/// Canonical `rows × cols` matrices in ascending order of their bits.
///
/// Shards on the first row; shards run in parallel and are merged by sort,
/// so the result does not depend on the worker count.
pub(crate) fn canonical_matrices(rows: usize, cols: usize) -> Vec<BitMatrix> {
    let root = BitMatrix::zeros(0, cols);
    if rows == 0 {
        return vec![root];
    }
    let shards: Vec<BitMatrix> = children(&root).collect();
    let mut all: Vec<BitMatrix> = shards
        .into_par_iter()
        .flat_map_iter(|s| {
            let mut out = Vec::new();
            extend(s, rows, &mut out);
            out
        })
        .collect();
    all.sort_by_cached_key(|m| m.packed());
    all
}

/// Lazily yields the XY census of `n` one shape `(nx, ny)` at a time, in
/// ascending `nx`. Within a shape entries are sorted by key, so the stream
/// as a whole is in key order.
pub struct XyStream {
    n: usize,
    nx: usize,
    no_y_isolates: bool,
    pending: std::vec::IntoIter<Entry>,
}

impl Iterator for XyStream {
    type Item = Entry;

    fn next(&mut self) -> Option<Entry> {
        loop {
            if let Some(e) = self.pending.next() {
                return Some(e);
            }
            if self.nx > self.n {
                return None;
            }
            let (nx, ny) = (self.nx, self.n - self.nx);
            self.nx += 1;
            let full = low_ones(ny);
            let mut shape: Vec<Entry> = canonical_matrices(nx, ny)
                .into_iter()
                .map(XYGraph::from_matrix)
                .filter(|g| !self.no_y_isolates || g.covered_y() == full)
                .map(|g| {
                    let c = g.canonical();
                    Entry::new(c.key, c.object.into())
                })
                .collect();
            shape.sort_by(|a, b| a.key.cmp(&b.key));
            self.pending = shape.into_iter();
        }
    }
}

pub fn stream_xy(n: usize, require_no_y_isolates: bool) -> Result<XyStream> {
    check_bound("xy enumeration", n, MAX_ENUM_N)?;
    Ok(XyStream {
        n,
        nx: 0,
        no_y_isolates: require_no_y_isolates,
        pending: Vec::new().into_iter(),
    })
}
