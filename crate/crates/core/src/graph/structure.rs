//! Structural classifiers used by the case analysis.

use serde::Serialize;

use super::Graph;

/// A graph whose every component is a clique.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueUnionInfo {
    /// Component sizes, largest first.
    pub component_sizes: Vec<usize>,
    /// Number of components of maximum size.
    pub r: usize,
}

impl CliqueUnionInfo {
    pub fn components(&self) -> usize {
        self.component_sizes.len()
    }
}

/// `Some` iff every connected component is complete. Isolated vertices count
/// as copies of `K1`. The graph on zero vertices yields `None`.
pub fn classify_clique_union(g: &Graph) -> Option<CliqueUnionInfo> {
    let comps = g.components();
    if comps.is_empty() {
        return None;
    }
    for comp in &comps {
        let k = comp.len();
        if comp.iter().any(|&u| g.degree(u) != k - 1) {
            return None;
        }
    }
    let mut sizes: Vec<usize> = comps.iter().map(Vec::len).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    let r = sizes.iter().take_while(|&&s| s == sizes[0]).count();
    Some(CliqueUnionInfo { component_sizes: sizes, r })
}

/// Number of connected components that admit a proper 2-colouring.
/// Isolated vertices are bipartite components.
pub fn bipartite_component_count(g: &Graph) -> usize {
    let mut colour: Vec<Option<bool>> = vec![None; g.n()];
    let mut count = 0;
    for s in 0..g.n() {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(false);
        let mut stack = vec![s];
        let mut bipartite = true;
        while let Some(u) = stack.pop() {
            let cu = colour[u].unwrap();
            for v in g.neighbors(u) {
                match colour[v] {
                    None => {
                        colour[v] = Some(!cu);
                        stack.push(v);
                    }
                    Some(cv) if cv == cu => bipartite = false,
                    Some(_) => {}
                }
            }
        }
        if bipartite {
            count += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, disjoint_union, empty, path, petersen};

    fn has_induced_p3(g: &Graph) -> bool {
        let n = g.n();
        for a in 0..n {
            for b in 0..n {
                for c in a + 1..n {
                    if b != a && b != c && g.has_edge(a, b) && g.has_edge(b, c) && !g.has_edge(a, c) {
                        return true;
                    }
                }
            }
        }
        false
    }

    #[test]
    fn clique_union_examples() {
        let two_k3 = disjoint_union(&[complete(3), complete(3)]);
        let info = classify_clique_union(&two_k3).unwrap();
        assert_eq!((info.component_sizes.clone(), info.r), (vec![3, 3], 2));

        let k3_k2 = disjoint_union(&[complete(3), complete(2)]);
        let info = classify_clique_union(&k3_k2).unwrap();
        assert_eq!((info.component_sizes.clone(), info.r), (vec![3, 2], 1));

        assert!(classify_clique_union(&cycle(4)).is_none());

        let e = classify_clique_union(&empty(4)).unwrap();
        assert_eq!(e.r, 4);
    }

    #[test]
    fn clique_union_iff_no_induced_p3() {
        for n in 1..=7 {
            for g in crate::graph::all_graphs(n) {
                assert_eq!(classify_clique_union(&g).is_some(), !has_induced_p3(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn bipartite_counts() {
        assert_eq!(bipartite_component_count(&cycle(6)), 1);
        let g = disjoint_union(&[complete(2), complete(2), cycle(5)]);
        assert_eq!(bipartite_component_count(&g), 2);
        assert_eq!(bipartite_component_count(&petersen()), 0);
        assert_eq!(bipartite_component_count(&empty(3)), 3);
        assert_eq!(bipartite_component_count(&path(4)), 1);
    }
}
