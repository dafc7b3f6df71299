//! Resolving and doubly resolving sets on finite graphs.
//!
//! A set `S` resolves `G` when the distance vectors `r(u|S)` are pairwise
//! distinct. It doubly resolves a set `U` when for every pair `u != v` in `U`
//! the difference `r(u|S) - r(v|S)` is not a constant vector.

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::graph::{FiniteGraph, Verdict, VertexId, VertexPair};
use crate::par::Strategy;
use crate::search::{Criterion, Search};

/// `r(u|S)`: distances from one vertex to an ordered landmark list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DistanceVector {
    pub landmarks: Vec<VertexId>,
    pub values: Vec<u32>,
}

/// `f_S(u)`: `d(u, x_i) - d(u, x_j)` for every ordered landmark pair `i != j`,
/// row-major in `i` then `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignatureVector {
    pub values: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DegreeCheck {
    Pass,
    Exceeds(VertexId),
}

fn check_all(g: &FiniteGraph, ids: &[VertexId]) -> Result<()> {
    ids.iter().try_for_each(|&x| g.check_vertex(x))
}

fn dedup_sorted(ids: &[VertexId]) -> Vec<VertexId> {
    let mut v = ids.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

/// Smallest pair (lexicographic on `(u, v)`, `u < v`) of items sharing a
/// key. Items must arrive in ascending vertex order.
fn smallest_collision<K, V, I>(items: I) -> Option<VertexPair<V>>
where
    K: Eq + Hash,
    V: Ord + Copy,
    I: IntoIterator<Item = (V, K)>,
{
    let mut first_seen: HashMap<K, V> = HashMap::new();
    let mut best: Option<VertexPair<V>> = None;
    for (v, key) in items {
        match first_seen.get(&key) {
            Some(&u) => {
                let pair = VertexPair::new(u, v);
                if best.is_none_or(|b| pair < b) {
                    best = Some(pair);
                }
            }
            None => {
                first_seen.insert(key, v);
            }
        }
    }
    best
}

pub(crate) fn collision_verdict<K, V, I>(items: I) -> Verdict<V>
where
    K: Eq + Hash,
    V: Ord + Copy,
    I: IntoIterator<Item = (V, K)>,
{
    match smallest_collision(items) {
        Some(p) => Verdict::Unresolved(p),
        None => Verdict::Pass,
    }
}

pub fn distance_vector(g: &FiniteGraph, u: VertexId, landmarks: &[VertexId]) -> Result<DistanceVector> {
    if landmarks.is_empty() {
        return Err(Error::EmptyLandmarkSet);
    }
    g.check_vertex(u)?;
    check_all(g, landmarks)?;
    Ok(DistanceVector {
        landmarks: landmarks.to_vec(),
        values: landmarks.iter().map(|&x| g.dist(u, x)).collect(),
    })
}

pub fn is_resolving(g: &FiniteGraph, landmarks: &[VertexId]) -> Result<Verdict> {
    if landmarks.is_empty() {
        return Err(Error::EmptyLandmarkSet);
    }
    check_all(g, landmarks)?;
    let s = dedup_sorted(landmarks);
    Ok(collision_verdict((0..g.order()).map(|u| {
        let key: Vec<u32> = s.iter().map(|&x| g.dist(u, x)).collect();
        (u, key)
    })))
}

/// `β(G)` and the lexicographically smallest metric basis.
///
/// `K_1` has the empty basis.
pub fn metric_dimension(g: &FiniteGraph) -> (usize, Vec<VertexId>) {
    metric_dimension_with(g, Strategy::default())
}

pub fn metric_dimension_with(g: &FiniteGraph, strategy: Strategy) -> (usize, Vec<VertexId>) {
    let from = usize::from(g.order() > 1);
    Search::new(g, Criterion::Resolve).minimum(from, strategy)
}

/// Every metric basis of `g`, in lexicographic order.
pub fn metric_bases(g: &FiniteGraph) -> Vec<Vec<VertexId>> {
    let (beta, _) = metric_dimension(g);
    Search::new(g, Criterion::Resolve).all_of_size(beta, Strategy::default())
}

fn check_landmark_pairs(landmarks: &[VertexId]) -> Result<()> {
    if landmarks.len() < 2 {
        return Err(Error::TooFewLandmarks {
            needed: 2,
            got: landmarks.len(),
        });
    }
    Ok(())
}

/// Does `landmarks` doubly resolve `targets`? Returns the smallest failing pair otherwise.
pub fn doubly_resolves(g: &FiniteGraph, landmarks: &[VertexId], targets: &[VertexId]) -> Result<Verdict> {
    let s = dedup_sorted(landmarks);
    check_landmark_pairs(&s)?;
    check_all(g, &s)?;
    check_all(g, targets)?;
    let anchor = s[0];
    Ok(collision_verdict(dedup_sorted(targets).into_iter().map(|u| {
        let base = i64::from(g.dist(u, anchor));
        let key: Vec<i64> = s[1..].iter().map(|&x| i64::from(g.dist(u, x)) - base).collect();
        (u, key)
    })))
}

/// `ψ(G)` and the lexicographically smallest minimum doubly resolving set.
pub fn psi(g: &FiniteGraph) -> Result<(usize, Vec<VertexId>)> {
    psi_with(g, Strategy::default())
}

pub fn psi_with(g: &FiniteGraph, strategy: Strategy) -> Result<(usize, Vec<VertexId>)> {
    if g.order() < 2 {
        return Err(Error::TrivialGraph);
    }
    Ok(Search::new(g, Criterion::DoublyResolve).minimum(2, strategy))
}

pub fn signature(g: &FiniteGraph, u: VertexId, landmarks: &[VertexId]) -> Result<SignatureVector> {
    check_landmark_pairs(landmarks)?;
    g.check_vertex(u)?;
    check_all(g, landmarks)?;
    Ok(signature_unchecked(g, u, landmarks))
}

fn signature_unchecked(g: &FiniteGraph, u: VertexId, landmarks: &[VertexId]) -> SignatureVector {
    let d: Vec<i64> = landmarks.iter().map(|&x| i64::from(g.dist(u, x))).collect();
    let mut values = Vec::with_capacity(d.len() * (d.len() - 1));
    for i in 0..d.len() {
        for j in 0..d.len() {
            if i != j {
                values.push(d[i] - d[j]);
            }
        }
    }
    SignatureVector { values }
}

/// Largest pairwise landmark distance `D`; every signature entry lies in `[-D, D]`.
pub fn landmark_spread(g: &FiniteGraph, landmarks: &[VertexId]) -> u32 {
    landmarks
        .iter()
        .flat_map(|&a| landmarks.iter().map(move |&b| g.dist(a, b)))
        .max()
        .unwrap_or(0)
}

/// Number of distinct signatures possible: `(2D + 1)^(k(k-1))`, or `None`
/// on overflow. Any `U` larger than this is guaranteed a collision.
pub fn pigeonhole_capacity(spread: u32, landmarks: usize) -> Option<u128> {
    let m = u32::try_from(landmarks * landmarks.saturating_sub(1)).ok()?;
    (2 * u128::from(spread) + 1).checked_pow(m)
}

/// Two vertices of `targets` with identical signatures, if any.
pub fn find_double_collision(
    g: &FiniteGraph,
    landmarks: &[VertexId],
    targets: &[VertexId],
) -> Result<Option<VertexPair>> {
    check_landmark_pairs(landmarks)?;
    check_all(g, landmarks)?;
    check_all(g, targets)?;
    let pair = smallest_collision(
        dedup_sorted(targets)
            .into_iter()
            .map(|u| (u, signature_unchecked(g, u, landmarks))),
    );
    Ok(pair)
}

/// `3^k - 1`, saturating.
pub fn degree_limit(k: u32) -> u64 {
    3u64.saturating_pow(k).saturating_sub(1)
}

/// Smallest vertex whose degree exceeds `3^k - 1`, if any.
pub fn degree_bound_check(g: &FiniteGraph, k: u32) -> DegreeCheck {
    let limit = degree_limit(k);
    match (0..g.order()).find(|&u| g.degree(u) as u64 > limit) {
        Some(u) => DegreeCheck::Exceeds(u),
        None => DegreeCheck::Pass,
    }
}
