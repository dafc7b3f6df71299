//! Graph generators for sweeps: every tree up to isomorphism, and seeded
//! random trees and connected graphs.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{FiniteGraph, VertexId};

/// Canonical string of a tree: the smaller rooted encoding over its centers.
pub fn tree_canonical_form(g: &FiniteGraph) -> String {
    centers(g)
        .into_iter()
        .map(|c| rooted_code(g, c, usize::MAX))
        .min()
        .unwrap_or_default()
}

fn rooted_code(g: &FiniteGraph, v: VertexId, parent: VertexId) -> String {
    let mut children: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(g, w, v))
        .collect();
    children.sort_unstable();
    format!("({})", children.concat())
}

fn centers(g: &FiniteGraph) -> Vec<VertexId> {
    let n = g.order();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut layer: Vec<VertexId> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in g.neighbors(v) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
}

/// One representative of every isomorphism class of trees of order `n`,
/// sorted by canonical form.
pub fn trees_of_order(n: usize) -> Vec<FiniteGraph> {
    let mut level: BTreeMap<String, Vec<(VertexId, VertexId)>> = BTreeMap::new();
    if n == 0 {
        return Vec::new();
    }
    level.insert(String::new(), Vec::new());
    for order in 2..=n {
        let mut next = BTreeMap::new();
        for edges in level.values() {
            for v in 0..order - 1 {
                let mut grown = edges.clone();
                grown.push((v, order - 1));
                let g = FiniteGraph::new(order, &grown).expect("a grown tree is connected");
                next.entry(tree_canonical_form(&g)).or_insert(grown);
            }
        }
        level = next;
    }
    level
        .into_values()
        .map(|edges| FiniteGraph::new(n, &edges).expect("catalogue trees are connected"))
        .collect()
}

/// Every tree of order `1..=max_n`, by order.
pub fn trees_up_to(max_n: usize) -> Vec<FiniteGraph> {
    (1..=max_n).flat_map(trees_of_order).collect()
}

/// Uniform labeled tree of order `n` from a random Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> FiniteGraph {
    assert!(n >= 1, "a tree needs a vertex");
    if n <= 2 {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        return FiniteGraph::new(n, &edges).expect("small trees are connected");
    }
    let code: Vec<VertexId> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1)
            .expect("a Prüfer step has a leaf");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<VertexId> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    FiniteGraph::new(n, &edges).expect("Prüfer decoding yields a tree")
}

/// Random connected graph: a random spanning tree plus every other pair
/// independently with probability `extra`. Vertex labels are shuffled.
pub fn random_connected_graph<R: Rng + ?Sized>(n: usize, extra: f64, rng: &mut R) -> FiniteGraph {
    let tree = random_tree(n, rng);
    let mut labels: Vec<VertexId> = (0..n).collect();
    labels.shuffle(rng);
    let mut edges: Vec<(VertexId, VertexId)> = tree.edges().collect();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.neighbors(u).contains(&v) && rng.gen_bool(extra) {
                edges.push((u, v));
            }
        }
    }
    let relabeled: Vec<_> = edges.iter().map(|&(u, v)| (labels[u], labels[v])).collect();
    FiniteGraph::new(n, &relabeled).expect("a spanning tree keeps the graph connected")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, star, Family};
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| trees_of_order(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let a = FiniteGraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = FiniteGraph::new(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(tree_canonical_form(&a), tree_canonical_form(&b));
        assert_ne!(tree_canonical_form(&a), tree_canonical_form(&star(3)));
        assert_eq!(
            tree_canonical_form(&make_family(Family::Path, 4).unwrap()),
            tree_canonical_form(&a)
        );
    }

    #[test]
    fn random_generators() {
        let mut rng = StdRng::seed_from_u64(7);
        for n in 1..12 {
            assert!(random_tree(n, &mut rng).is_tree());
            let g = random_connected_graph(n, 0.3, &mut rng);
            assert_eq!(g.order(), n);
        }
        let a = random_tree(9, &mut StdRng::seed_from_u64(1));
        let b = random_tree(9, &mut StdRng::seed_from_u64(1));
        assert_eq!(a, b);
    }
}
