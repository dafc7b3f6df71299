//! Finite undirected connected graphs, cached all-pairs distances, cartesian
//! products and the standard families (paths, cycles, cliques).
//!
//! Vertices are the ids `0..n`. Every constructor normalizes the adjacency
//! lists (sorted, deduplicated) and rejects self-loops and disconnected input,
//! so a [`FiniteGraph`] in hand is always a valid connected simple graph.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub type VertexId = usize;

/// Unordered pair of distinct vertices, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexPair<V = VertexId> {
    pub u: V,
    pub v: V,
}

impl<V: Ord> VertexPair<V> {
    /// Canonicalizes the order. Panics if `a == b`.
    pub fn new(a: V, b: V) -> Self {
        assert!(a != b, "a vertex pair needs two distinct vertices");
        if a < b {
            VertexPair { u: a, v: b }
        } else {
            VertexPair { u: b, v: a }
        }
    }
}

impl<V: fmt::Display> fmt::Display for VertexPair<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// Outcome of a resolving-style check: either every pair is separated or the
/// canonical smallest offending pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<V = VertexId> {
    Pass,
    Unresolved(VertexPair<V>),
}

impl<V> Verdict<V> {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witness(&self) -> Option<&VertexPair<V>> {
        match self {
            Verdict::Pass => None,
            Verdict::Unresolved(p) => Some(p),
        }
    }
}

#[derive(Debug, Clone)]
pub struct FiniteGraph {
    adjacency: Vec<Vec<VertexId>>,
    // row-major n*n table, filled on first distance query
    distances: OnceLock<Vec<u32>>,
}

impl PartialEq for FiniteGraph {
    fn eq(&self, other: &Self) -> bool {
        self.adjacency == other.adjacency
    }
}

impl Eq for FiniteGraph {}

impl FiniteGraph {
    /// Builds a graph on `0..n` from an edge list. Duplicate edges collapse.
    pub fn new(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in edges {
            for id in [a, b] {
                if id >= n {
                    return Err(Error::InvalidVertexId { id, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        let graph = FiniteGraph {
            adjacency,
            distances: OnceLock::new(),
        };
        if !graph.is_connected() {
            return Err(Error::DisconnectedGraph);
        }
        Ok(graph)
    }

    fn is_connected(&self) -> bool {
        let dist = self.bfs(0);
        dist.iter().all(|&d| d != u32::MAX)
    }

    fn bfs(&self, source: VertexId) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.order()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adjacency[x] {
                if dist[y] == u32::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn neighbors(&self, u: VertexId) -> &[VertexId] {
        &self.adjacency[u]
    }

    pub fn degree(&self, u: VertexId) -> usize {
        self.adjacency[u].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn contains(&self, u: VertexId) -> bool {
        u < self.order()
    }

    pub fn check_vertex(&self, u: VertexId) -> Result<()> {
        if self.contains(u) {
            Ok(())
        } else {
            Err(Error::InvalidVertexId {
                id: u,
                n: self.order(),
            })
        }
    }

    fn table(&self) -> &[u32] {
        self.distances.get_or_init(|| {
            let n = self.order();
            let mut table = Vec::with_capacity(n * n);
            for u in 0..n {
                table.extend(self.bfs(u));
            }
            table
        })
    }

    /// Checked shortest-path distance.
    pub fn distance(&self, u: VertexId, v: VertexId) -> Result<u32> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.dist(u, v))
    }

    /// Unchecked distance; panics on an out-of-range id.
    #[inline]
    pub fn dist(&self, u: VertexId, v: VertexId) -> u32 {
        let n = self.order();
        self.table()[u * n + v]
    }

    /// Distances from `u` to every vertex, indexed by id.
    pub fn distances_from(&self, u: VertexId) -> &[u32] {
        let n = self.order();
        &self.table()[u * n..(u + 1) * n]
    }

    pub fn eccentricity(&self, u: VertexId) -> u32 {
        self.distances_from(u).iter().copied().max().unwrap_or(0)
    }

    pub fn diameter(&self) -> u32 {
        self.table().iter().copied().max().unwrap_or(0)
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.order()
    }
}

/// Cartesian product `G □ H`; vertex `(a, v)` gets id `a * |V(H)| + v`.
pub fn cartesian_product(g: &FiniteGraph, h: &FiniteGraph) -> FiniteGraph {
    let m = h.order();
    let mut edges = Vec::with_capacity(g.order() * h.edge_count() + m * g.edge_count());
    for a in 0..g.order() {
        for (v, w) in h.edges() {
            edges.push((a * m + v, a * m + w));
        }
    }
    for (a, b) in g.edges() {
        for v in 0..m {
            edges.push((a * m + v, b * m + v));
        }
    }
    FiniteGraph::new(g.order() * m, &edges).expect("product of connected graphs is connected")
}

/// Splits a product id back into its `(a, v)` coordinates.
pub fn product_coords(id: VertexId, right_order: usize) -> (VertexId, VertexId) {
    (id / right_order, id % right_order)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Complete,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "complete" => Ok(Family::Complete),
            other => Err(Error::UnsupportedFamily(other.to_string())),
        }
    }
}

/// `P_n`, `C_n` or `K_n` on `0..n` with the usual labeling (`i ~ i+1`, plus
/// `n-1 ~ 0` for cycles).
pub fn make_family(kind: Family, n: usize) -> Result<FiniteGraph> {
    let min = match kind {
        Family::Path | Family::Complete => 1,
        Family::Cycle => 3,
    };
    if n < min {
        return Err(Error::InvalidOrder { what: kind.name(), n });
    }
    let edges: Vec<_> = match kind {
        Family::Path => (1..n).map(|i| (i - 1, i)).collect(),
        Family::Cycle => (0..n).map(|i| (i, (i + 1) % n)).collect(),
        Family::Complete => (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect(),
    };
    FiniteGraph::new(n, &edges)
}

/// Which family (if any) `g` is, with its exact labeling. `K_3` is reported
/// as a cycle and `K_2` as a path, `K_1` as a path.
pub fn identify_family(g: &FiniteGraph) -> Option<Family> {
    let n = g.order();
    [Family::Path, Family::Cycle, Family::Complete]
        .into_iter()
        .find(|&kind| make_family(kind, n).is_ok_and(|f| &f == g))
}

/// Star `K_{1,leaves}` with center 0.
pub fn star(leaves: usize) -> FiniteGraph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    FiniteGraph::new(leaves + 1, &edges).expect("star is connected")
}

/// Spider: center 0 with one leg per entry of `legs`, leg vertices numbered
/// consecutively outward.
pub fn spider(legs: &[usize]) -> FiniteGraph {
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    FiniteGraph::new(next, &edges).expect("spider is connected")
}

/// `rows × cols` grid, `P_rows □ P_cols`.
pub fn grid(rows: usize, cols: usize) -> Result<FiniteGraph> {
    Ok(cartesian_product(
        &make_family(Family::Path, rows)?,
        &make_family(Family::Path, cols)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_and_single_edge() {
        let k3 = FiniteGraph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3, make_family(Family::Complete, 3).unwrap());
        let p2 = FiniteGraph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(p2.edge_count(), 1);
        assert_eq!(p2.dist(0, 1), 1);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            FiniteGraph::new(4, &[(0, 1), (2, 3)]),
            Err(Error::DisconnectedGraph)
        );
        assert_eq!(
            FiniteGraph::new(2, &[(0, 2)]),
            Err(Error::InvalidVertexId { id: 2, n: 2 })
        );
        assert_eq!(FiniteGraph::new(2, &[(0, 1), (1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(FiniteGraph::new(0, &[]), Err(Error::EmptyGraph));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = FiniteGraph::new(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.neighbors(0), &[1]);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn family_distances() {
        let c6 = make_family(Family::Cycle, 6).unwrap();
        assert_eq!(c6.distance(0, 4), Ok(2));
        let p5 = make_family(Family::Path, 5).unwrap();
        assert_eq!(p5.distance(0, 4), Ok(4));
        assert_eq!(p5.distance(3, 3), Ok(0));
        assert!(p5.distance(0, 5).is_err());
    }

    #[test]
    fn family_shapes() {
        let c5 = make_family(Family::Cycle, 5).unwrap();
        let edges: Vec<_> = c5.edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(make_family(Family::Path, 1).unwrap().order(), 1);
        assert_eq!(make_family(Family::Complete, 4).unwrap().edge_count(), 6);
        assert!(matches!(
            make_family(Family::Cycle, 2),
            Err(Error::InvalidOrder { .. })
        ));
        assert!(make_family(Family::Path, 0).is_err());
    }

    #[test]
    fn products() {
        let p2 = make_family(Family::Path, 2).unwrap();
        let sq = cartesian_product(&p2, &p2);
        assert_eq!(sq.order(), 4);
        assert!((0..4).all(|v| sq.degree(v) == 2));
        assert_eq!(sq.diameter(), 2);

        let k1 = make_family(Family::Path, 1).unwrap();
        let c5 = make_family(Family::Cycle, 5).unwrap();
        assert_eq!(cartesian_product(&k1, &c5), c5);

        let p3 = make_family(Family::Path, 3).unwrap();
        let pp = cartesian_product(&p3, &p3);
        assert_eq!(pp.dist(0, 2 * 3 + 2), 4);
        assert_eq!(product_coords(7, 3), (2, 1));
    }

    #[test]
    fn identify() {
        for n in 4..8 {
            for kind in [Family::Path, Family::Cycle, Family::Complete] {
                let g = make_family(kind, n).unwrap();
                assert_eq!(identify_family(&g), Some(kind));
            }
        }
        assert_eq!(
            identify_family(&make_family(Family::Complete, 3).unwrap()),
            Some(Family::Cycle)
        );
        assert_eq!(identify_family(&star(3)), None);
    }

    #[test]
    fn helpers() {
        let s = spider(&[2, 3, 4]);
        assert_eq!(s.order(), 10);
        assert_eq!(s.degree(0), 3);
        assert!(s.is_tree());
        assert_eq!(star(9).max_degree(), 9);
        assert_eq!(grid(10, 10).unwrap().order(), 100);
    }
}
