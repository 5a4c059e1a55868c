//! Brute-force censuses: generate every labeled object, canonicalize,
//! deduplicate, classify. Shares nothing with the orderly generator except
//! the canonical forms.

use std::collections::BTreeMap;

use super::{check_bound, Census, Entry};
use crate::canon::Canonize;
use crate::classify::is_split;
use crate::error::Result;
use crate::model::{
    low_ones, BipartitePoset, BitMatrix, ClassTag, Graph, Object, SetCover, XYGraph,
};

/// Bound for graphs and covers.
pub const ORACLE_BOUND_GRAPH: usize = 5;
/// Bound for XY-graphs and posets.
pub const ORACLE_BOUND_MATRIX: usize = 6;

fn collect(class: ClassTag, n: usize, objects: impl Iterator<Item = Object>) -> Census {
    let mut seen = BTreeMap::new();
    for o in objects {
        let c = o.canonical();
        seen.entry(c.key).or_insert(c.object);
    }
    Census::from_entries(
        class,
        n,
        seen.into_iter().map(|(k, o)| Entry::new(k, o)).collect(),
    )
}

fn all_matrices(rows: usize, cols: usize) -> impl Iterator<Item = BitMatrix> {
    (0..1u64 << (rows * cols)).map(move |code| {
        let masks = (0..rows)
            .map(|r| (code >> (r * cols)) & low_ones(cols))
            .collect();
        BitMatrix::from_rows(cols, masks)
    })
}

fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0..1u64 << pairs.len()).map(move |code| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| code >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges)
    })
}

/// Families of distinct nonempty subsets, grown in increasing mask order.
/// A set without a private element never regains one, so non-minimal
/// families are pruned.
fn minimal_covers(n: usize) -> Vec<SetCover> {
    fn go(n: usize, next: u64, family: &mut Vec<u64>, out: &mut Vec<SetCover>) {
        let union = family.iter().fold(0, |a, &s| a | s);
        if union == low_ones(n) {
            out.push(SetCover::from_masks(n, family.iter().copied()));
        }
        if family.len() == n {
            return;
        }
        for s in next..1u64 << n {
            family.push(s);
            let minimal = (0..family.len()).all(|i| {
                let others = family
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .fold(0, |a, (_, &t)| a | t);
                family[i] & !others != 0
            });
            if minimal {
                go(n, s + 1, family, out);
            }
            family.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 1, &mut Vec::new(), &mut out);
    out
}

/// Brute-force XY census, optionally without Y-isolates.
pub fn naive_xy(n: usize, require_no_y_isolates: bool) -> Result<Census> {
    check_bound("naive xy oracle", n, ORACLE_BOUND_MATRIX)?;
    let objects = (0..=n)
        .flat_map(|nx| all_matrices(nx, n - nx))
        .map(XYGraph::from_matrix);
    let kept = objects.filter(|g| !require_no_y_isolates || g.covered_y() == low_ones(g.ny()));
    Ok(collect(ClassTag::Xy, n, kept.map(Object::from)))
}

/// Brute-force census of a class. XY-graphs are unrestricted here; see
/// [`naive_xy`] for the filtered variant.
pub fn naive_oracle(class: ClassTag, n: usize) -> Result<Census> {
    match class {
        ClassTag::Split => {
            check_bound("naive split oracle", n, ORACLE_BOUND_GRAPH)?;
            Ok(collect(
                class,
                n,
                all_graphs(n).filter(is_split).map(Object::from),
            ))
        }
        ClassTag::Cover => {
            check_bound("naive cover oracle", n, ORACLE_BOUND_GRAPH)?;
            Ok(collect(
                class,
                n,
                minimal_covers(n).into_iter().map(Object::from),
            ))
        }
        ClassTag::Xy => naive_xy(n, false),
        ClassTag::Poset => {
            check_bound("naive poset oracle", n, ORACLE_BOUND_MATRIX)?;
            let objects = (0..=n)
                .flat_map(|n0| all_matrices(n0, n - n0))
                .map(BipartitePoset::from_raw)
                .filter(|p| (0..p.n1()).all(|b| p.down_set(b) != 0));
            Ok(collect(class, n, objects.map(Object::from)))
        }
    }
}
