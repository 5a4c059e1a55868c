use std::fmt;

use super::bits::{bit, iter_bits, low_ones, mask_of};
use super::MAX_POINTS;

/// Simple undirected graph on vertices `0..n`, stored as neighbour masks.
///
/// Adjacency is symmetric and loop-free by construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        assert!(
            n <= MAX_POINTS,
            "graphs are limited to {MAX_POINTS} vertices"
        );
        Graph { n, adj: vec![0; n] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        let all = low_ones(n);
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        g
    }

    /// Panics on loops or out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(0, n - 1);
        }
        g
    }

    /// Star with centre 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn all_vertices(&self) -> u64 {
        low_ones(self.n)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(
            u < self.n && v < self.n,
            "edge ({u},{v}) out of range for n = {}",
            self.n
        );
        assert!(u != v, "loop at vertex {u}");
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    /// Neighbour mask of `v`.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n)
            .flat_map(move |u| iter_bits(self.adj[u] & !low_ones(u + 1)).map(move |v| (u, v)))
    }

    pub fn is_clique(&self, set: u64) -> bool {
        iter_bits(set).all(|v| set & !bit(v) & !self.adj[v] == 0)
    }

    pub fn is_stable(&self, set: u64) -> bool {
        iter_bits(set).all(|v| self.adj[v] & set == 0)
    }

    /// Relabels vertices: `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            g.adj[perm[u]] = iter_bits(self.adj[u]).fold(0, |m, v| m | bit(perm[v]));
        }
        g
    }

    /// Induced subgraph on `keep`, relabelled densely in ascending order.
    pub fn induced(&self, keep: u64) -> Graph {
        let order: Vec<usize> = iter_bits(keep).collect();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::empty(order.len());
        for (i, &v) in order.iter().enumerate() {
            g.adj[i] = iter_bits(self.adj[v] & keep).fold(0, |m, u| m | bit(pos[u]));
        }
        g
    }

    /// Adds a new isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        assert!(
            self.n < MAX_POINTS,
            "graphs are limited to {MAX_POINTS} vertices"
        );
        self.adj.push(0);
        self.n += 1;
        self.n - 1
    }

    /// Makes `set` a clique.
    pub fn complete_on(&mut self, set: u64) {
        for v in iter_bits(set) {
            self.adj[v] |= set & !bit(v);
        }
    }

    pub fn complement(&self) -> Graph {
        let all = self.all_vertices();
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !bit(v)).collect();
        Graph { n: self.n, adj }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n,
            self.edges().collect::<Vec<_>>()
        )
    }
}

/// A clique/stable-set bipartition of a graph's vertices, as masks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KSPartition {
    pub k: u64,
    pub s: u64,
}

impl KSPartition {
    pub fn new(k: impl IntoIterator<Item = usize>, s: impl IntoIterator<Item = usize>) -> Self {
        KSPartition {
            k: mask_of(k),
            s: mask_of(s),
        }
    }

    pub fn k_len(&self) -> usize {
        self.k.count_ones() as usize
    }

    pub fn s_len(&self) -> usize {
        self.s.count_ones() as usize
    }

    pub fn k_vertices(&self) -> Vec<usize> {
        iter_bits(self.k).collect()
    }

    pub fn s_vertices(&self) -> Vec<usize> {
        iter_bits(self.s).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builders_are_symmetric() {
        let g = Graph::cycle(5);
        assert_eq!(g.edge_count(), 5);
        for (u, v) in g.edges() {
            assert!(g.has_edge(v, u));
        }
        assert_eq!(Graph::complete(4).edge_count(), 6);
        assert_eq!(Graph::star(3).degree(0), 3);
    }

    #[test]
    fn induced_and_relabel() {
        let p4 = Graph::path(4);
        let mid = p4.induced(0b0110);
        assert_eq!(mid, Graph::complete(2));
        let r = p4.relabel(&[3, 2, 1, 0]);
        assert_eq!(r, p4);
        let c = p4.complement();
        assert_eq!(c.edges().collect::<Vec<_>>(), vec![(0, 2), (0, 3), (1, 3)]);
    }

    #[test]
    fn clique_and_stable_checks() {
        let g = Graph::path(4);
        assert!(g.is_clique(0b0110));
        assert!(!g.is_clique(0b0111));
        assert!(g.is_stable(0b1001));
        assert!(g.is_clique(0) && g.is_stable(0));
    }
}
