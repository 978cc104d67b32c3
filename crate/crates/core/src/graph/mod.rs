//! Simple undirected graphs on vertices `0..n`, stored as a dense bit matrix.
//!
//! Graphs are immutable once built; every operation that changes structure
//! (complement, union, line graph) returns a new value.

mod corpus;
mod format;
mod generators;
mod structure;

pub use corpus::{all_graphs, canonical_code};
pub use format::{encode_graph6, parse_edge_list, parse_graph6};
pub use generators::{
    clebsch, complete, complete_bipartite, cycle, disjoint_union, empty, path, petersen,
    random_gnp,
};
pub use structure::{bipartite_component_count, classify_clique_union, CliqueUnionInfo};

use nalgebra::DMatrix;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(WORD).max(1);
        Graph { n, words, bits: vec![0; n * words] }
    }

    /// Builds a graph from 0-based vertex pairs. Panics on loops or
    /// out-of-range vertices; use [`parse_edge_list`] for untrusted input.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            assert!(u < n && v < n, "vertex out of range");
            assert_ne!(u, v, "self-loop");
            g.set(u, v, true);
        }
        g
    }

    pub(crate) fn set(&mut self, u: usize, v: usize, on: bool) {
        let (wu, bu) = (u * self.words + v / WORD, 1u64 << (v % WORD));
        let (wv, bv) = (v * self.words + u / WORD, 1u64 << (u % WORD));
        if on {
            self.bits[wu] |= bu;
            self.bits[wv] |= bv;
        } else {
            self.bits[wu] &= !bu;
            self.bits[wv] &= !bv;
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.has_edge(u, v))
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Graph on the same vertices with exactly the missing pairs as edges.
    pub fn complement(&self) -> Graph {
        let mut out = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.set(u, v, true);
                }
            }
        }
        out
    }

    /// Common degree if every vertex has the same degree. The graph on zero
    /// vertices is reported as not regular.
    pub fn regularity(&self) -> Option<usize> {
        let degrees = self.degrees();
        let first = *degrees.first()?;
        degrees.iter().all(|&d| d == first).then_some(first)
    }

    /// Component label for every vertex, labels assigned in order of first vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Line graph: one vertex per edge (edges in lexicographic order),
    /// adjacent when the edges share an endpoint.
    pub fn line_graph(&self) -> crate::Result<Graph> {
        let edges = self.edges();
        if edges.is_empty() {
            return Err(crate::Error::InvalidInput(
                "line graph of an edgeless graph".into(),
            ));
        }
        let mut out = Graph::new(edges.len());
        for (i, &(a, b)) in edges.iter().enumerate() {
            for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
                if a == c || a == d || b == c || b == d {
                    out.set(i, j, true);
                }
            }
        }
        Ok(out)
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut out = Graph::new(self.n);
        for (u, v) in self.edges() {
            out.set(perm[u], perm[v], true);
        }
        out
    }

    /// 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.n, self.n, |i, j| if self.has_edge(i, j) { 1.0 } else { 0.0 })
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({})", encode_graph6(self))
    }
}
