//! Exhaustive enumeration of small graphs up to isomorphism.
//!
//! Isomorphism classes are separated by a canonical code: the largest
//! upper-triangle bit string (graph6 bit order) over all relabelings that
//! respect a degree-based vertex partition. This is only meant for the tiny
//! orders used to build test corpora.

use std::collections::BTreeSet;

use super::Graph;

/// Largest supported order; the code must fit in 64 bits.
const MAX_ORDER: usize = 11;

fn invariants(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let deg = g.degrees();
    (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).map(|w| deg[w]).collect();
            nd.sort_unstable();
            (deg[v], nd)
        })
        .collect()
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    total_bits: u32,
    /// `cell_of_pos[p]` = index of the cell that position `p` draws from.
    cell_of_pos: Vec<usize>,
    cells: Vec<Vec<usize>>,
    used: Vec<bool>,
    order: Vec<usize>,
    best: Option<(u64, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize, code: u64, ahead: bool) {
        if pos == self.n {
            if self.best.as_ref().is_none_or(|(b, _)| code > *b) {
                self.best = Some((code, self.order.clone()));
            }
            return;
        }
        let cell = self.cell_of_pos[pos];
        for i in 0..self.cells[cell].len() {
            let v = self.cells[cell][i];
            if self.used[v] {
                continue;
            }
            let mut next = code;
            for &u in &self.order {
                next = (next << 1) | u64::from(self.g.has_edge(u, v));
            }
            let filled = (pos * (pos + 1) / 2) as u32;
            let mut now_ahead = ahead;
            if !ahead {
                if let Some((best, _)) = &self.best {
                    let shift = self.total_bits - filled;
                    let best_prefix = if shift >= 64 { 0 } else { best >> shift };
                    if next < best_prefix {
                        continue;
                    }
                    now_ahead = next > best_prefix;
                }
            }
            self.used[v] = true;
            self.order.push(v);
            self.run(pos + 1, next, now_ahead);
            self.order.pop();
            self.used[v] = false;
        }
    }
}

/// Canonical code and the vertex order realizing it (`order[i]` is the
/// original vertex placed at position `i`).
fn canonical(g: &Graph) -> (u64, Vec<usize>) {
    let n = g.n();
    assert!(n <= MAX_ORDER, "canonical codes support n <= {MAX_ORDER}");
    if n == 0 {
        return (0, Vec::new());
    }
    let inv = invariants(g);
    let mut keys: Vec<_> = inv.clone();
    keys.sort();
    keys.dedup();
    // Higher invariants first so dense vertices lead the order.
    keys.reverse();
    let cells: Vec<Vec<usize>> = keys
        .iter()
        .map(|k| (0..n).filter(|&v| &inv[v] == k).collect())
        .collect();
    let cell_of_pos = cells
        .iter()
        .enumerate()
        .flat_map(|(c, cell)| std::iter::repeat_n(c, cell.len()))
        .collect();
    let mut search = Search {
        g,
        n,
        total_bits: (n * (n - 1) / 2) as u32,
        cell_of_pos,
        cells,
        used: vec![false; n],
        order: Vec::with_capacity(n),
        best: None,
    };
    search.run(0, 0, false);
    search.best.expect("at least one ordering exists")
}

/// Isomorphism-invariant code of `g` (equal codes iff isomorphic, for
/// graphs of the same order). Supports `n <= 11`.
pub fn canonical_code(g: &Graph) -> u64 {
    canonical(g).0
}

fn canonical_form(g: &Graph) -> (u64, Graph) {
    let (code, order) = canonical(g);
    let mut perm = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    (code, g.permuted(&perm))
}

/// One representative of every isomorphism class of graphs on `n` vertices,
/// canonically labelled and ordered by canonical code. Counts for
/// `n = 0..=7` are 1, 1, 2, 4, 11, 34, 156, 1044.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_ORDER, "corpus enumeration supports n <= {MAX_ORDER}");
    let mut layer: Vec<Graph> = vec![Graph::new(0)];
    for k in 1..=n {
        let mut seen: BTreeSet<u64> = BTreeSet::new();
        let mut next = Vec::new();
        for base in &layer {
            for mask in 0u64..(1 << (k - 1)) {
                let mut g = Graph::new(k);
                for (u, v) in base.edges() {
                    g.set(u, v, true);
                }
                for u in 0..k - 1 {
                    if mask >> u & 1 == 1 {
                        g.set(u, k - 1, true);
                    }
                }
                let (code, canon) = canonical_form(&g);
                if seen.insert(code) {
                    next.push((code, canon));
                }
            }
        }
        next.sort_by_key(|(code, _)| *code);
        layer = next.into_iter().map(|(_, g)| g).collect();
    }
    layer
}
