//! Exact minimum-landmark search shared by the metric-dimension and
//! doubly-resolving-dimension solvers.
//!
//! Candidate sets are explored by increasing size and, within a size, in
//! lexicographic order of their sorted id tuples, so the first hit is the
//! lexicographically smallest optimum. The search keeps the partition of
//! `V(G)` induced by the landmarks chosen so far and refines it one landmark
//! at a time. Subtrees are cut when
//!
//! * a twin class already has two members that can no longer be chosen, or
//!   needs more members than there are picks left,
//! * some class can no longer be split by any remaining candidate,
//! * a candidate does not split any class (it cannot belong to an optimum).
//!
//! The top level is partitioned by leading landmark and reduced with a
//! first-match rule, which keeps the answer independent of scheduling.

use crate::graph::{FiniteGraph, VertexId};
use crate::par::{self, Strategy};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Criterion {
    /// Classes by `r(u|S)`.
    Resolve,
    /// Classes by `r(u|S) - d(u, s0)·(1,…,1)`, `s0` the first landmark.
    DoublyResolve,
}

/// Twin classes of size at least two. Twins have equal open or closed
/// neighborhoods once the pair itself is removed.
pub(crate) fn twin_classes(g: &FiniteGraph) -> Vec<Vec<VertexId>> {
    let n = g.order();
    let mut class_of: Vec<Option<usize>> = vec![None; n];
    let mut classes: Vec<Vec<VertexId>> = Vec::new();
    for u in 0..n {
        if class_of[u].is_some() {
            continue;
        }
        let id = classes.len();
        class_of[u] = Some(id);
        let mut members = vec![u];
        for (v, slot) in class_of.iter_mut().enumerate().skip(u + 1) {
            if slot.is_none() && are_twins(g, u, v) {
                *slot = Some(id);
                members.push(v);
            }
        }
        classes.push(members);
    }
    classes.retain(|c| c.len() > 1);
    classes
}

pub(crate) fn are_twins(g: &FiniteGraph, u: VertexId, v: VertexId) -> bool {
    let a = g.neighbors(u).iter().filter(|&&x| x != v);
    let b = g.neighbors(v).iter().filter(|&&x| x != u);
    a.eq(b)
}

pub(crate) struct Search<'g> {
    graph: &'g FiniteGraph,
    criterion: Criterion,
    twins: Vec<Vec<VertexId>>,
}

struct Scratch {
    stamp: u32,
    slots: Vec<(u32, u32)>,
    width: usize,
}

impl Scratch {
    fn new(n: usize) -> Self {
        let width = 2 * n + 1;
        Scratch {
            stamp: 0,
            slots: vec![(0, 0); n.max(1) * width],
            width,
        }
    }
}

impl<'g> Search<'g> {
    pub(crate) fn new(graph: &'g FiniteGraph, criterion: Criterion) -> Self {
        Search {
            graph,
            criterion,
            twins: twin_classes(graph),
        }
    }

    /// Landmarks needed by the twin classes alone.
    pub(crate) fn twin_lower_bound(&self) -> usize {
        self.twins.iter().map(|t| t.len() - 1).sum()
    }

    fn key(&self, u: VertexId, x: VertexId, anchor: Option<VertexId>) -> i64 {
        let g = self.graph;
        let base = anchor.map_or(0, |a| i64::from(g.dist(u, a)));
        i64::from(g.dist(u, x)) - base
    }

    fn refine(
        &self,
        scratch: &mut Scratch,
        labels: &[u32],
        x: VertexId,
        anchor: Option<VertexId>,
    ) -> (Vec<u32>, usize) {
        let n = self.graph.order() as i64;
        scratch.stamp = scratch.stamp.wrapping_add(1);
        if scratch.stamp == 0 {
            scratch.slots.iter_mut().for_each(|s| *s = (0, 0));
            scratch.stamp = 1;
        }
        let mut next = 0u32;
        let out = labels
            .iter()
            .enumerate()
            .map(|(u, &label)| {
                let slot = label as usize * scratch.width + (self.key(u, x, anchor) + n) as usize;
                let entry = &mut scratch.slots[slot];
                if entry.0 != scratch.stamp {
                    *entry = (scratch.stamp, next);
                    next += 1;
                }
                entry.1
            })
            .collect();
        (out, next as usize)
    }

    fn anchor(&self, chosen: &[VertexId]) -> Option<VertexId> {
        match self.criterion {
            Criterion::Resolve => None,
            Criterion::DoublyResolve => chosen.first().copied(),
        }
    }

    fn twins_allow(&self, chosen: &[VertexId], start: usize, remaining: usize) -> bool {
        let mut need = 0;
        for class in &self.twins {
            let mut inside = 0;
            let mut skipped = 0;
            for &m in class {
                if chosen.contains(&m) {
                    inside += 1;
                } else if m < start {
                    skipped += 1;
                }
            }
            if skipped >= 2 {
                return false;
            }
            need += (class.len() - 1).saturating_sub(inside);
        }
        need <= remaining
    }

    /// Every non-singleton class must be splittable by some candidate `>= start`.
    fn splittable(&self, labels: &[u32], count: usize, chosen: &[VertexId], start: usize) -> bool {
        let n = self.graph.order();
        let anchor = self.anchor(chosen);
        if self.criterion == Criterion::DoublyResolve && anchor.is_none() {
            return true;
        }
        let mut rep = vec![usize::MAX; count];
        let mut size = vec![0usize; count];
        for (u, &l) in labels.iter().enumerate() {
            if rep[l as usize] == usize::MAX {
                rep[l as usize] = u;
            }
            size[l as usize] += 1;
        }
        let mut open: Vec<bool> = size.iter().map(|&s| s > 1).collect();
        let mut left = open.iter().filter(|&&o| o).count();
        for x in start..n {
            if left == 0 {
                break;
            }
            for (u, &l) in labels.iter().enumerate() {
                let l = l as usize;
                if open[l] && self.key(u, x, anchor) != self.key(rep[l], x, anchor) {
                    open[l] = false;
                    left -= 1;
                }
            }
        }
        left == 0
    }

    /// Depth-first walk over sorted `k`-sets extending `chosen`. `visit` sees
    /// every complete set in lexicographic order and returns `true` to stop.
    #[allow(clippy::too_many_arguments)]
    fn walk(
        &self,
        scratch: &mut Scratch,
        chosen: &mut Vec<VertexId>,
        labels: &[u32],
        count: usize,
        start: usize,
        k: usize,
        visit: &mut dyn FnMut(&[VertexId]) -> bool,
    ) -> bool {
        let n = self.graph.order();
        let remaining = k - chosen.len();
        if remaining == 0 {
            return count == n && visit(chosen);
        }
        if n - start.min(n) < remaining {
            return false;
        }
        if !self.twins_allow(chosen, start, remaining) {
            return false;
        }
        if !self.splittable(labels, count, chosen, start) {
            return false;
        }
        let anchor = self.anchor(chosen);
        for x in start..=n - remaining {
            let (child, child_count) = self.refine(scratch, labels, x, anchor);
            // a landmark that splits nothing never belongs to an optimum
            if child_count == count {
                continue;
            }
            chosen.push(x);
            if self.walk(scratch, chosen, &child, child_count, x + 1, k, visit) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    fn walk_from(&self, first: VertexId, k: usize, visit: &mut dyn FnMut(&[VertexId]) -> bool) {
        let n = self.graph.order();
        let mut scratch = Scratch::new(n);
        let root = vec![0u32; n];
        let anchor = match self.criterion {
            Criterion::Resolve => None,
            Criterion::DoublyResolve => Some(first),
        };
        let (labels, count) = self.refine(&mut scratch, &root, first, anchor);
        let mut chosen = vec![first];
        self.walk(&mut scratch, &mut chosen, &labels, count, first + 1, k, visit);
    }

    /// Lexicographically smallest valid set of size exactly `k`, assuming no
    /// smaller set is valid.
    pub(crate) fn first_of_size(&self, k: usize, strategy: Strategy) -> Option<Vec<VertexId>> {
        let n = self.graph.order();
        if k == 0 {
            return (n == 1 && self.criterion == Criterion::Resolve).then(Vec::new);
        }
        if k > n {
            return None;
        }
        par::find_map_first(strategy, 0..n - k + 1, |first| {
            let mut found = None;
            self.walk_from(first, k, &mut |set| {
                found = Some(set.to_vec());
                true
            });
            found
        })
    }

    /// Every valid set of size exactly `k`, in lexicographic order, assuming
    /// no smaller set is valid.
    pub(crate) fn all_of_size(&self, k: usize, strategy: Strategy) -> Vec<Vec<VertexId>> {
        let n = self.graph.order();
        if k == 0 {
            return if n == 1 { vec![Vec::new()] } else { Vec::new() };
        }
        if k > n {
            return Vec::new();
        }
        par::map_range(strategy, 0..n - k + 1, |first| {
            let mut sets = Vec::new();
            self.walk_from(first, k, &mut |set| {
                sets.push(set.to_vec());
                false
            });
            sets
        })
        .into_iter()
        .flatten()
        .collect()
    }

    /// Minimum size and lexicographically smallest optimum, searching sizes
    /// upward from `from`.
    pub(crate) fn minimum(&self, from: usize, strategy: Strategy) -> (usize, Vec<VertexId>) {
        let n = self.graph.order();
        let from = from.max(self.twin_lower_bound());
        for k in from..=n {
            if let Some(set) = self.first_of_size(k, strategy) {
                return (k, set);
            }
        }
        unreachable!("the full vertex set is always valid")
    }
}
