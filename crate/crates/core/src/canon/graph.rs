//! Canonical labeling of simple graphs: the row-major least adjacency
//! matrix over all labelings that list vertices by ascending degree.
//!
//! Positions are filled left to right from the first cell of an ordered
//! partition of the unplaced vertices. Placing `v` fixes its whole row
//! (non-neighbours first inside every later cell) and splits each cell
//! into non-neighbours then neighbours of `v`.

use crate::model::{bit, iter_bits, low_ones, Graph};

/// Canonical relabeling of a graph; `perm[old] = new`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphCanonForm {
    pub graph: Graph,
    pub perm: Vec<usize>,
}

pub fn canon_graph_form(g: &Graph) -> GraphCanonForm {
    let n = g.n();
    let mut degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let cells: Vec<u64> = degrees
        .iter()
        .map(|&d| {
            (0..n)
                .filter(|&v| g.degree(v) == d)
                .fold(0, |m, v| m | bit(v))
        })
        .collect();
    let mut search = Search {
        g,
        best: None,
        prefix: Vec::new(),
        order: Vec::new(),
    };
    search.go(&cells);
    let (_, order) = search.best.expect("search always reaches a leaf");
    let mut perm = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    GraphCanonForm {
        graph: g.relabel(&perm),
        perm,
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    prefix: Vec<u64>,
    order: Vec<usize>,
}

impl Search<'_> {
    /// Row of `v` at the next position. Column 0 is the most significant bit.
    fn row_value(&self, v: usize, cells: &[u64]) -> u64 {
        let nv = self.g.neighbors(v);
        let mut x: u64 = 0;
        for &p in &self.order {
            x = (x << 1) | u64::from(nv & bit(p) != 0);
        }
        x <<= 1;
        for &c in cells {
            let c = c & !bit(v);
            let w = c.count_ones();
            let ones = (c & nv).count_ones();
            x = shl(x, w) | low_ones(ones as usize);
        }
        x
    }

    fn go(&mut self, cells: &[u64]) {
        let Some(&first) = cells.first() else {
            let better = self.best.as_ref().is_none_or(|(b, _)| self.prefix < *b);
            if better {
                self.best = Some((self.prefix.clone(), self.order.clone()));
            }
            return;
        };
        let level = self.prefix.len();
        let values: Vec<(usize, u64)> = iter_bits(first)
            .map(|v| (v, self.row_value(v, cells)))
            .collect();
        let min = values.iter().map(|&(_, x)| x).min().unwrap();
        if let Some((b, _)) = &self.best {
            if self.prefix[..] == b[..level] && min > b[level] {
                return;
            }
        }
        let mut tried: Vec<usize> = Vec::new();
        for &(v, x) in &values {
            if x != min {
                continue;
            }
            let nv = self.g.neighbors(v);
            // Swapping twins is an automorphism fixing every placed vertex.
            if tried
                .iter()
                .any(|&u| nv & !bit(u) == self.g.neighbors(u) & !bit(v))
            {
                continue;
            }
            tried.push(v);
            let next: Vec<u64> = cells
                .iter()
                .map(|&c| c & !bit(v))
                .flat_map(|c| [c & !nv, c & nv])
                .filter(|&c| c != 0)
                .collect();
            self.prefix.push(min);
            self.order.push(v);
            self.go(&next);
            self.prefix.pop();
            self.order.pop();
        }
    }
}

fn shl(x: u64, w: u32) -> u64 {
    if w >= 64 {
        0
    } else {
        x << w
    }
}
