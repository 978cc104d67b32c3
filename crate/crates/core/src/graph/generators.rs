use rand::Rng;

use super::Graph;

pub fn empty(n: usize) -> Graph {
    Graph::new(n)
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n).complement()
}

/// Cycle `0 - 1 - ... - (n-1) - 0`.
///
/// # Panics
/// If `n < 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices, got {n}");
    let mut g = path(n);
    g.set(n - 1, 0, true);
    g
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        g.set(v - 1, v, true);
    }
    g
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.set(u, v, true);
        }
    }
    g
}

/// Petersen graph: outer 5-cycle `0..5`, spokes `i - i+5`, inner pentagram.
pub fn petersen() -> Graph {
    let mut g = Graph::new(10);
    for i in 0..5 {
        g.set(i, (i + 1) % 5, true);
        g.set(i, i + 5, true);
        g.set(5 + i, 5 + (i + 2) % 5, true);
    }
    g
}

/// Clebsch graph (folded 5-cube): vertices are 4-bit words, adjacent when
/// they differ in exactly one bit or in all four. Strongly regular (16,5,0,2).
pub fn clebsch() -> Graph {
    let mut g = Graph::new(16);
    for u in 0..16usize {
        for v in u + 1..16 {
            let d = (u ^ v).count_ones();
            if d == 1 || d == 4 {
                g.set(u, v, true);
            }
        }
    }
    g
}

/// Disjoint union; block `i` occupies the vertex range following block `i - 1`.
pub fn disjoint_union(parts: &[Graph]) -> Graph {
    let n = parts.iter().map(Graph::n).sum();
    let mut g = Graph::new(n);
    let mut base = 0;
    for part in parts {
        for (u, v) in part.edges() {
            g.set(base + u, base + v, true);
        }
        base += part.n();
    }
    g
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.set(u, v, true);
            }
        }
    }
    g
}
