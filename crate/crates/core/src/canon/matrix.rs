//! Lexicographically least arrangement of a 0/1 matrix under independent
//! row and column permutations.
//!
//! Rows are placed one level at a time. The columns are kept as an ordered
//! list of cells; columns inside a cell are still interchangeable, so a
//! row's best value is its zeros-first arrangement within every cell.
//! Placing a row splits each cell into its zeros part and its ones part.

use crate::model::{bit, iter_bits, low_ones, BitMatrix};

/// A canonical arrangement together with the witnessing permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixCanonForm {
    pub bits: BitMatrix,
    /// `row_perm[old] = new`.
    pub row_perm: Vec<usize>,
    /// `col_perm[old] = new`.
    pub col_perm: Vec<usize>,
}

impl MatrixCanonForm {
    pub fn row_count(&self) -> usize {
        self.bits.rows()
    }

    pub fn col_count(&self) -> usize {
        self.bits.cols()
    }
}

pub fn canon_matrix(m: &BitMatrix) -> MatrixCanonForm {
    assert!(m.rows() <= 64, "canon_matrix supports at most 64 rows");
    let mut search = Search {
        rows: m.row_masks(),
        best: None,
        prefix: Vec::new(),
        order: Vec::new(),
    };
    let start = if m.cols() == 0 {
        vec![]
    } else {
        vec![low_ones(m.cols())]
    };
    search.go(&start, low_ones(m.rows()));
    let best = search.best.expect("search always reaches a leaf");
    let mut row_perm = vec![0; m.rows()];
    for (new, &old) in best.rows.iter().enumerate() {
        row_perm[old] = new;
    }
    let mut col_perm = vec![0; m.cols()];
    for (new, &old) in best.cols.iter().enumerate() {
        col_perm[old] = new;
    }
    let bits = m.permute(&row_perm, &col_perm);
    MatrixCanonForm {
        bits,
        row_perm,
        col_perm,
    }
}

/// Value of `row` laid out zeros-first within each cell, first cell most
/// significant.
fn arranged(row: u64, cells: &[u64]) -> u128 {
    let mut v: u128 = 0;
    for &c in cells {
        let w = c.count_ones();
        let ones = (row & c).count_ones();
        v = (v << w) | ((1u128 << ones) - 1);
    }
    v
}

struct Leaf {
    values: Vec<u128>,
    rows: Vec<usize>,
    cols: Vec<usize>,
}

struct Search<'a> {
    rows: &'a [u64],
    best: Option<Leaf>,
    prefix: Vec<u128>,
    order: Vec<usize>,
}

impl Search<'_> {
    fn go(&mut self, cells: &[u64], remaining: u64) {
        let level = self.prefix.len();
        if remaining == 0 {
            let better = match &self.best {
                None => true,
                Some(b) => self.prefix < b.values,
            };
            if better {
                let cols = cells.iter().flat_map(|&c| iter_bits(c)).collect();
                self.best = Some(Leaf {
                    values: self.prefix.clone(),
                    rows: self.order.clone(),
                    cols,
                });
            }
            return;
        }
        let min = iter_bits(remaining)
            .map(|r| arranged(self.rows[r], cells))
            .min()
            .unwrap();
        if let Some(b) = &self.best {
            if self.prefix[..] == b.values[..level] && min > b.values[level] {
                return;
            }
        }
        let mut seen: Vec<u64> = Vec::new();
        for r in iter_bits(remaining) {
            let row = self.rows[r];
            if arranged(row, cells) != min || seen.contains(&row) {
                continue;
            }
            seen.push(row);
            let next: Vec<u64> = cells
                .iter()
                .flat_map(|&c| [c & !row, c & row])
                .filter(|&c| c != 0)
                .collect();
            self.prefix.push(min);
            self.order.push(r);
            self.go(&next, remaining & !bit(r));
            self.prefix.pop();
            self.order.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&str]) -> BitMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        BitMatrix::from_bools(
            &rows
                .iter()
                .map(|r| r.chars().map(|c| c == '1').collect())
                .collect::<Vec<_>>(),
            cols,
        )
    }

    #[test]
    fn small_examples() {
        assert_eq!(canon_matrix(&m(&["01", "10"])).bits.bit_string(), "0110");
        assert_eq!(
            canon_matrix(&m(&["11", "10"])).bits,
            canon_matrix(&m(&["01", "11"])).bits
        );
        let z = m(&["000", "000"]);
        assert_eq!(canon_matrix(&z).bits, z);
    }

    #[test]
    fn witness_reproduces_bits() {
        let a = m(&["1101", "0011", "1000"]);
        let c = canon_matrix(&a);
        assert_eq!(a.permute(&c.row_perm, &c.col_perm), c.bits);
        let again = canon_matrix(&c.bits);
        assert_eq!(again.bits, c.bits);
        assert_eq!(again.row_perm, vec![0, 1, 2]);
        assert_eq!(again.col_perm, vec![0, 1, 2, 3]);
    }

    #[test]
    fn degenerate_shapes() {
        assert_eq!(
            canon_matrix(&BitMatrix::zeros(0, 0)).bits,
            BitMatrix::zeros(0, 0)
        );
        assert_eq!(
            canon_matrix(&BitMatrix::zeros(3, 0)).row_perm,
            vec![0, 1, 2]
        );
        assert_eq!(canon_matrix(&m(&["101"])).bits.bit_string(), "011");
    }
}
