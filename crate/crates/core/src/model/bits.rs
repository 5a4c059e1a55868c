/// Single-bit mask for index `i`.
#[inline]
pub fn bit(i: usize) -> u64 {
    1u64 << i
}

/// Mask with the low `k` bits set (`k <= 64`).
#[inline]
pub(crate) fn low_ones(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Iterates the set bits of `mask` in ascending order.
pub fn iter_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

pub fn mask_of(items: impl IntoIterator<Item = usize>) -> u64 {
    items.into_iter().fold(0, |m, i| m | bit(i))
}

/// Dense 0/1 matrix with at most 64 columns; row `r` is a column mask.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(cols <= 64, "BitMatrix supports at most 64 columns");
        BitMatrix {
            rows,
            cols,
            data: vec![0; rows],
        }
    }

    /// Builds from row masks; bits at or beyond `cols` are cleared.
    pub fn from_rows(cols: usize, rows: Vec<u64>) -> Self {
        assert!(cols <= 64, "BitMatrix supports at most 64 columns");
        let keep = low_ones(cols);
        let data = rows.into_iter().map(|r| r & keep).collect::<Vec<_>>();
        BitMatrix {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn from_bools(rows: &[Vec<bool>], cols: usize) -> Self {
        let data = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, &b)| b)
                    .fold(0, |m, (j, _)| m | bit(j))
            })
            .collect();
        Self::from_rows(cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> u64 {
        self.data[r]
    }

    pub fn row_masks(&self) -> &[u64] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r] & bit(c) != 0
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        if value {
            self.data[r] |= bit(c);
        } else {
            self.data[r] &= !bit(c);
        }
    }

    pub fn column(&self, c: usize) -> u64 {
        mask_of((0..self.rows).filter(|&r| self.get(r, c)))
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn transpose(&self) -> BitMatrix {
        assert!(self.rows <= 64, "transpose needs at most 64 rows");
        let data = (0..self.cols).map(|c| self.column(c)).collect();
        BitMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Relabels rows and columns; `row_perm[old] = new`, `col_perm[old] = new`.
    pub fn permute(&self, row_perm: &[usize], col_perm: &[usize]) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.rows, self.cols);
        for (r, &row) in self.data.iter().enumerate() {
            out.data[row_perm[r]] = iter_bits(row).fold(0, |m, c| m | bit(col_perm[c]));
        }
        out
    }

    /// Row-major bits, e.g. `"0110"` for `[[0,1],[1,0]]`.
    pub fn bit_string(&self) -> String {
        let mut s = String::with_capacity(self.rows * self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                s.push(if self.get(r, c) { '1' } else { '0' });
            }
        }
        s
    }

    /// Row-major bits packed most-significant first, zero padded.
    pub fn packed(&self) -> Vec<u8> {
        let mut w = BitWriter::default();
        for r in 0..self.rows {
            for c in 0..self.cols {
                w.push(self.get(r, c));
            }
        }
        w.finish()
    }
}

#[derive(Default)]
pub(crate) struct BitWriter {
    bytes: Vec<u8>,
    used: u8,
}

impl BitWriter {
    pub(crate) fn push(&mut self, b: bool) {
        if self.used == 0 {
            self.bytes.push(0);
        }
        if b {
            *self.bytes.last_mut().unwrap() |= 0x80 >> self.used;
        }
        self.used = (self.used + 1) % 8;
    }

    pub(crate) fn finish(self) -> Vec<u8> {
        self.bytes
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bits_iterate_ascending() {
        assert_eq!(iter_bits(0b1011_0000).collect::<Vec<_>>(), vec![4, 5, 7]);
        assert_eq!(iter_bits(u64::MAX).count(), 64);
        assert_eq!(low_ones(64), u64::MAX);
        assert_eq!(low_ones(3), 7);
    }

    #[test]
    fn permute_and_transpose() {
        let m = BitMatrix::from_bools(&[vec![true, true], vec![true, false]], 2);
        assert_eq!(m.bit_string(), "1110");
        let p = m.permute(&[1, 0], &[1, 0]);
        assert_eq!(p.bit_string(), "0111");
        assert_eq!(m.transpose().bit_string(), "1110");
        let r = BitMatrix::from_rows(3, vec![0b001, 0b110]);
        assert_eq!(r.transpose().bit_string(), "100101");
        assert_eq!(r.packed(), vec![0b1000_1100]);
    }
}
