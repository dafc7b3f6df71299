//! Metric dimension of finite trees and of infinite trees built from a finite
//! core tree with pendant rays.
//!
//! A branch at `v` is a component of `T - v` together with `v`; it is a
//! branch path when it is a finite path or a one-way infinite path. With
//! `P(v)` the number of branch paths at `v`, a tree that is not a path has
//! dimension `Σ_{deg v ≥ 3} max(P(v) - 1, 0)`, and its bases are exactly the
//! sets taking one vertex other than `v` from all but one branch path at
//! every such `v`.

use crate::error::{Error, Result};
use crate::graph::{FiniteGraph, VertexId};
use crate::rayed::{RayedGraph, RayedVertex};

/// A tree, finite (no rays) or infinite (pendant rays on a finite core tree).
#[derive(Debug, Clone)]
pub struct TreeView {
    graph: RayedGraph,
}

/// Where a branch leaves its center.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BranchRoot {
    Core(VertexId),
    Ray(usize),
}

/// A branch path at some center: its core vertices in order away from the
/// center, and the ray continuing it, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchPath {
    pub root: BranchRoot,
    pub core_vertices: Vec<VertexId>,
    pub ray: Option<usize>,
}

impl BranchPath {
    /// First vertex of the branch after the center.
    pub fn first_vertex(&self) -> RayedVertex {
        match self.root {
            BranchRoot::Core(w) => RayedVertex::Core(w),
            BranchRoot::Ray(r) => RayedVertex::Ray { ray: r, depth: 1 },
        }
    }

    pub fn is_infinite(&self) -> bool {
        self.ray.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchEntry {
    pub vertex: VertexId,
    pub degree: usize,
    /// Branch paths in canonical order: core roots by id, then rays by index.
    pub paths: Vec<BranchPath>,
}

impl BranchEntry {
    pub fn path_count(&self) -> usize {
        self.paths.len()
    }
}

/// Branch-path data for every vertex of degree at least three.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchReport {
    pub entries: Vec<BranchEntry>,
}

impl BranchReport {
    pub fn path_count(&self, v: VertexId) -> Option<usize> {
        self.entries
            .iter()
            .find(|e| e.vertex == v)
            .map(BranchEntry::path_count)
    }
}

impl TreeView {
    pub fn from_finite(g: &FiniteGraph) -> Result<Self> {
        if !g.is_tree() {
            return Err(Error::NotATree);
        }
        Ok(TreeView {
            graph: RayedGraph::new(g.clone(), Vec::new())?,
        })
    }

    pub fn from_rayed(g: &RayedGraph) -> Result<Self> {
        if !g.core().is_tree() {
            return Err(Error::NotATree);
        }
        Ok(TreeView { graph: g.clone() })
    }

    pub fn graph(&self) -> &RayedGraph {
        &self.graph
    }

    pub fn is_finite(&self) -> bool {
        self.graph.ray_count() == 0
    }

    fn degree(&self, v: VertexId) -> usize {
        self.graph.degree(RayedVertex::Core(v))
    }

    fn rays_at(&self, v: VertexId) -> impl Iterator<Item = usize> + '_ {
        self.graph
            .attachments()
            .iter()
            .enumerate()
            .filter(move |&(_, &a)| a == v)
            .map(|(r, _)| r)
    }

    pub fn max_degree(&self) -> usize {
        let core = &self.graph.core();
        let mut max = (0..core.order()).map(|v| self.degree(v)).max().unwrap_or(0);
        if self.graph.ray_count() > 0 {
            max = max.max(2);
        }
        max
    }

    /// Vertices of degree at least three. Always finite here.
    pub fn branching_vertices(&self) -> Vec<VertexId> {
        (0..self.graph.core().order())
            .filter(|&v| self.degree(v) >= 3)
            .collect()
    }

    /// Follows the branch at `center` entered through core vertex `w`; returns
    /// it when it is a path.
    fn follow(&self, center: VertexId, w: VertexId) -> Option<BranchPath> {
        let core = self.graph.core();
        let mut prev = center;
        let mut cur = w;
        let mut vertices = Vec::new();
        loop {
            if self.degree(cur) > 2 {
                return None;
            }
            vertices.push(cur);
            let next = core.neighbors(cur).iter().copied().find(|&x| x != prev);
            match next {
                Some(x) => {
                    prev = cur;
                    cur = x;
                }
                None => {
                    let ray = self.rays_at(cur).next();
                    return Some(BranchPath {
                        root: BranchRoot::Core(w),
                        core_vertices: vertices,
                        ray,
                    });
                }
            }
        }
    }

    pub fn branch_paths(&self) -> BranchReport {
        let core = self.graph.core();
        let entries = self
            .branching_vertices()
            .into_iter()
            .map(|v| {
                let mut paths: Vec<BranchPath> = core
                    .neighbors(v)
                    .iter()
                    .filter_map(|&w| self.follow(v, w))
                    .collect();
                paths.extend(self.rays_at(v).map(|r| BranchPath {
                    root: BranchRoot::Ray(r),
                    core_vertices: Vec::new(),
                    ray: Some(r),
                }));
                BranchEntry {
                    vertex: v,
                    degree: self.degree(v),
                    paths,
                }
            })
            .collect();
        BranchReport { entries }
    }

    /// Exact metric dimension.
    pub fn dimension(&self) -> usize {
        if self.max_degree() < 3 {
            return match self.graph.ray_count() {
                0 if self.graph.core().order() == 1 => 0,
                0 | 1 => 1,
                _ => 2,
            };
        }
        self.branch_paths()
            .entries
            .iter()
            .map(|e| e.path_count().saturating_sub(1))
            .sum()
    }

    /// Endpoint of a path-shaped tree: a vertex of degree at most one.
    fn path_endpoint(&self) -> RayedVertex {
        let core = self.graph.core();
        let v = (0..core.order())
            .find(|&v| self.degree(v) <= 1)
            .expect("a path has an endpoint");
        RayedVertex::Core(v)
    }

    /// A metric basis: the first vertex of each of the first `P(v) - 1`
    /// branch paths at every vertex with `P(v) >= 2`.
    pub fn basis(&self) -> Vec<RayedVertex> {
        if self.max_degree() < 3 {
            let core = self.graph.core();
            return match self.graph.ray_count() {
                0 if core.order() == 1 => Vec::new(),
                0 | 1 => vec![self.path_endpoint()],
                _ if core.order() >= 2 => vec![RayedVertex::Core(0), RayedVertex::Core(1)],
                _ => vec![RayedVertex::Core(0), RayedVertex::Ray { ray: 0, depth: 1 }],
            };
        }
        let mut out: Vec<RayedVertex> = self
            .branch_paths()
            .entries
            .iter()
            .flat_map(|e| {
                let take = e.path_count().saturating_sub(1);
                e.paths[..take].iter().map(BranchPath::first_vertex)
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Finite trees only: every set the branch-path rule allows, each sorted,
    /// the whole list sorted.
    pub fn bases_by_rule(&self) -> Result<Vec<Vec<VertexId>>> {
        if !self.is_finite() {
            return Err(Error::InvalidVertex(
                "rule enumeration needs a finite tree".into(),
            ));
        }
        let core = self.graph.core();
        let mut out = if self.max_degree() < 3 {
            if core.order() == 1 {
                vec![Vec::new()]
            } else {
                (0..core.order())
                    .filter(|&v| core.degree(v) == 1)
                    .map(|v| vec![v])
                    .collect()
            }
        } else {
            let mut partial: Vec<Vec<VertexId>> = vec![Vec::new()];
            for entry in self.branch_paths().entries {
                let k = entry.path_count();
                if k < 2 {
                    continue;
                }
                let mut options: Vec<Vec<VertexId>> = Vec::new();
                for skip in 0..k {
                    let mut picks: Vec<Vec<VertexId>> = vec![Vec::new()];
                    for (i, path) in entry.paths.iter().enumerate() {
                        if i == skip {
                            continue;
                        }
                        picks = picks
                            .into_iter()
                            .flat_map(|p| {
                                path.core_vertices.iter().map(move |&x| {
                                    let mut q = p.clone();
                                    q.push(x);
                                    q
                                })
                            })
                            .collect();
                    }
                    options.extend(picks);
                }
                partial = partial
                    .into_iter()
                    .flat_map(|p| {
                        options.iter().map(move |o| {
                            let mut q = p.clone();
                            q.extend(o);
                            q
                        })
                    })
                    .collect();
            }
            partial
        };
        for set in &mut out {
            set.sort_unstable();
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

/// Finite-dimension test for an infinite tree: finitely many vertices of
/// degree at least three. Every rayed tree qualifies.
pub fn infinite_tree_finite_dim(t: &TreeView) -> bool {
    // the core is finite, so the branching set is too
    t.branching_vertices().len() <= t.graph().core().order()
}

/// Branching-vertex counts along a family of finite truncations. Strict
/// growth is the finite-scale evidence that the limit tree has infinitely
/// many vertices of degree at least three, hence infinite dimension.
pub fn branching_growth<I>(truncations: I) -> Result<Vec<usize>>
where
    I: IntoIterator<Item = FiniteGraph>,
{
    truncations
        .into_iter()
        .map(|g| Ok(TreeView::from_finite(&g)?.branching_vertices().len()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, spider, star, Family};
    use crate::rayed::make_comb;

    #[test]
    fn rejects_cycles() {
        let c4 = make_family(Family::Cycle, 4).unwrap();
        assert!(matches!(TreeView::from_finite(&c4), Err(Error::NotATree)));
        let rg = RayedGraph::new(c4, vec![0]).unwrap();
        assert!(matches!(TreeView::from_rayed(&rg), Err(Error::NotATree)));
    }

    #[test]
    fn star_and_spider() {
        let t = TreeView::from_finite(&star(5)).unwrap();
        assert_eq!(t.branch_paths().path_count(0), Some(5));
        assert_eq!(t.dimension(), 4);
        let ids: Vec<_> = (1..=4).map(RayedVertex::Core).collect();
        assert_eq!(t.basis(), ids);

        let s = TreeView::from_finite(&spider(&[2, 3, 4])).unwrap();
        assert_eq!(s.branch_paths().path_count(0), Some(3));
        assert_eq!(s.dimension(), 2);
        assert_eq!(s.basis(), vec![RayedVertex::Core(1), RayedVertex::Core(3)]);
    }

    #[test]
    fn mixed_branches() {
        // v = 0 with two leg branches and two branches that fork again
        let edges = [
            (0, 1),
            (0, 2),
            (2, 3),
            (0, 4),
            (4, 5),
            (4, 6),
            (0, 7),
            (7, 8),
            (7, 9),
        ];
        let g = FiniteGraph::new(10, &edges).unwrap();
        let t = TreeView::from_finite(&g).unwrap();
        let report = t.branch_paths();
        let e = report.entries.iter().find(|e| e.vertex == 0).unwrap();
        assert_eq!((e.degree, e.path_count()), (4, 2));
        assert_eq!(e.paths[1].core_vertices, vec![2, 3]);
    }

    #[test]
    fn infinite_paths() {
        let k = |k| TreeView::from_rayed(&RayedGraph::k_way_path(k)).unwrap();
        assert_eq!(k(1).dimension(), 1);
        assert_eq!(k(2).dimension(), 2);
        assert_eq!(k(3).dimension(), 2);
        assert_eq!(k(6).dimension(), 5);
        assert_eq!(
            k(3).basis(),
            vec![
                RayedVertex::Ray { ray: 0, depth: 1 },
                RayedVertex::Ray { ray: 1, depth: 1 }
            ]
        );
        assert_eq!(k(1).basis(), vec![RayedVertex::Core(0)]);
        assert!(infinite_tree_finite_dim(&k(5)));
        assert!(infinite_tree_finite_dim(&k(1)));
    }

    #[test]
    fn ray_extends_a_leg() {
        // path 0-1-2 with two rays at 0 and one at 2: vertex 0 has degree 3
        let p3 = make_family(Family::Path, 3).unwrap();
        let t = TreeView::from_rayed(&RayedGraph::new(p3, vec![0, 0, 2]).unwrap()).unwrap();
        let report = t.branch_paths();
        let e = &report.entries[0];
        assert_eq!(e.vertex, 0);
        assert_eq!(e.path_count(), 3);
        assert!(e.paths[0].is_infinite());
        assert_eq!(t.dimension(), 2);
    }

    #[test]
    fn rule_enumeration_on_star() {
        let t = TreeView::from_finite(&star(3)).unwrap();
        let rule = t.bases_by_rule().unwrap();
        assert_eq!(rule, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        let p4 = TreeView::from_finite(&make_family(Family::Path, 4).unwrap()).unwrap();
        assert_eq!(p4.bases_by_rule().unwrap(), vec![vec![0], vec![3]]);
    }

    #[test]
    fn comb_growth() {
        let counts = branching_growth([5, 10, 20].map(make_comb)).unwrap();
        assert_eq!(counts, vec![4, 9, 19]);
    }
}
