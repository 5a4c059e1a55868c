use super::bits::{bit, iter_bits, BitMatrix};
use super::MAX_POINTS;

/// Bipartite graph with ordered blocks; `X` is the distinguished block.
///
/// Stored as the `X × Y` incidence matrix. `(nx, ny, M)` and
/// `(ny, nx, Mᵀ)` are different objects.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct XYGraph {
    inc: BitMatrix,
}

impl XYGraph {
    pub fn empty(nx: usize, ny: usize) -> Self {
        assert!(
            nx + ny <= MAX_POINTS,
            "XY-graphs are limited to {MAX_POINTS} vertices"
        );
        XYGraph {
            inc: BitMatrix::zeros(nx, ny),
        }
    }

    /// Panics on out-of-range endpoints.
    pub fn from_edges(nx: usize, ny: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = XYGraph::empty(nx, ny);
        for &(x, y) in edges {
            assert!(x < nx && y < ny, "edge ({x},{y}) outside {nx}x{ny}");
            g.inc.set(x, y, true);
        }
        g
    }

    pub fn complete(nx: usize, ny: usize) -> Self {
        let mut g = XYGraph::empty(nx, ny);
        for x in 0..nx {
            for y in 0..ny {
                g.inc.set(x, y, true);
            }
        }
        g
    }

    pub fn from_matrix(inc: BitMatrix) -> Self {
        assert!(inc.rows() + inc.cols() <= MAX_POINTS);
        XYGraph { inc }
    }

    pub fn nx(&self) -> usize {
        self.inc.rows()
    }

    pub fn ny(&self) -> usize {
        self.inc.cols()
    }

    pub fn n(&self) -> usize {
        self.nx() + self.ny()
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.inc
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.inc.get(x, y)
    }

    /// Y-neighbour mask of `x`.
    pub fn x_neighbors(&self, x: usize) -> u64 {
        self.inc.row(x)
    }

    /// X-neighbour mask of `y`.
    pub fn y_neighbors(&self, y: usize) -> u64 {
        self.inc.column(y)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.nx()).flat_map(move |x| iter_bits(self.inc.row(x)).map(move |y| (x, y)))
    }

    pub fn edge_count(&self) -> usize {
        self.inc.count_ones()
    }

    /// Mask of Y-vertices adjacent to at least one X-vertex.
    pub fn covered_y(&self) -> u64 {
        self.inc.row_masks().iter().fold(0, |a, r| a | r)
    }

    /// Sub-XY-graph on the given X and Y masks, relabelled densely.
    pub fn restrict(&self, xs: u64, ys: u64) -> XYGraph {
        let ycols: Vec<usize> = iter_bits(ys).collect();
        let rows = iter_bits(xs)
            .map(|x| {
                let r = self.inc.row(x);
                ycols
                    .iter()
                    .enumerate()
                    .filter(|(_, &y)| r & bit(y) != 0)
                    .fold(0, |m, (j, _)| m | bit(j))
            })
            .collect();
        XYGraph {
            inc: BitMatrix::from_rows(ycols.len(), rows),
        }
    }
}
