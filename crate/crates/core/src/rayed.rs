//! Infinite graphs made of a finite core plus pendant one-way infinite rays.
//!
//! Every ray hangs off a single core vertex and has no other attachments, so
//! each ray is a metric ray and all distances have a closed form. That makes
//! resolving sets decidable: past the deepest landmark on a ray, the distance
//! vector grows by `(1,…,1)` per step, so two rays can only collide far out if
//! their base vectors differ by a constant, and everything else lives inside
//! a finite window.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{FiniteGraph, Verdict, VertexId, VertexPair};
use crate::resolver::collision_verdict;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RayedVertex {
    Core(VertexId),
    /// Vertex at `depth >= 1` along ray `ray`; depth 0 is the attachment vertex.
    Ray {
        ray: usize,
        depth: u64,
    },
}

impl fmt::Display for RayedVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RayedVertex::Core(id) => write!(f, "c:{id}"),
            RayedVertex::Ray { ray, depth } => write!(f, "r:{ray}:{depth}"),
        }
    }
}

impl FromStr for RayedVertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidVertex(s.to_string());
        let parts: Vec<&str> = s.trim().split(':').collect();
        match parts.as_slice() {
            ["c", id] => Ok(RayedVertex::Core(id.parse().map_err(|_| bad())?)),
            ["r", ray, depth] => {
                let depth: u64 = depth.parse().map_err(|_| bad())?;
                if depth == 0 {
                    return Err(bad());
                }
                Ok(RayedVertex::Ray {
                    ray: ray.parse().map_err(|_| bad())?,
                    depth,
                })
            }
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RayedGraph {
    core: FiniteGraph,
    rays: Vec<VertexId>,
}

/// Finite prefix of a rayed graph: the core plus every ray cut at `depth`.
///
/// Core vertices keep their ids; `Ray(r, d)` maps to `n + r * depth + d - 1`.
#[derive(Debug, Clone)]
pub struct Truncation {
    pub graph: FiniteGraph,
    pub depth: u64,
    core_order: usize,
    rays: usize,
}

impl Truncation {
    pub fn id_of(&self, v: RayedVertex) -> Option<VertexId> {
        match v {
            RayedVertex::Core(id) => (id < self.core_order).then_some(id),
            RayedVertex::Ray { ray, depth } => (ray < self.rays && depth >= 1 && depth <= self.depth)
                .then(|| self.core_order + ray * self.depth as usize + depth as usize - 1),
        }
    }

    pub fn vertex_of(&self, id: VertexId) -> RayedVertex {
        if id < self.core_order {
            RayedVertex::Core(id)
        } else {
            let off = id - self.core_order;
            RayedVertex::Ray {
                ray: off / self.depth as usize,
                depth: (off % self.depth as usize) as u64 + 1,
            }
        }
    }
}

/// Per-ray stabilized coordinates: for `depth >= index`,
/// `r(Ray(ray, depth)|S) = depth·(1,…,1) + base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RayBase {
    pub ray: usize,
    pub index: u64,
    pub base: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    /// Truncation depth checked exhaustively.
    pub window: u64,
    /// Smallest window for which the exhaustive part is sound.
    pub required_window: u64,
    pub bases: Vec<RayBase>,
    pub verdict: Verdict<RayedVertex>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RayLowerBound {
    /// From rays sharing an attachment: all but one of them must carry a landmark.
    pub twin_rays: usize,
    /// `twin_rays` combined with the fact that only paths have dimension one.
    pub value: usize,
}

pub(crate) fn constant_offset(a: &[i64], b: &[i64]) -> Option<i64> {
    let delta = a[0] - b[0];
    a.iter().zip(b).all(|(x, y)| x - y == delta).then_some(delta)
}

impl RayedGraph {
    pub fn new(core: FiniteGraph, attachments: Vec<VertexId>) -> Result<Self> {
        if let Some(&id) = attachments.iter().find(|&&a| !core.contains(a)) {
            return Err(Error::InvalidAttachment { id, n: core.order() });
        }
        Ok(RayedGraph {
            core,
            rays: attachments,
        })
    }

    /// `P_{k∞}`: `k` rays joined at one center (`k = 1` gives `P_∞`).
    pub fn k_way_path(k: usize) -> Self {
        let k1 = FiniteGraph::new(1, &[]).expect("K1");
        RayedGraph::new(k1, vec![0; k]).expect("attachments are valid")
    }

    pub fn core(&self) -> &FiniteGraph {
        &self.core
    }

    pub fn attachments(&self) -> &[VertexId] {
        &self.rays
    }

    pub fn ray_count(&self) -> usize {
        self.rays.len()
    }

    /// Canonical vertex at `depth` on `ray`, mapping depth 0 to the core.
    pub fn ray_vertex(&self, ray: usize, depth: u64) -> RayedVertex {
        if depth == 0 {
            RayedVertex::Core(self.rays[ray])
        } else {
            RayedVertex::Ray { ray, depth }
        }
    }

    pub fn check(&self, v: RayedVertex) -> Result<()> {
        let ok = match v {
            RayedVertex::Core(id) => self.core.contains(id),
            RayedVertex::Ray { ray, depth } => ray < self.rays.len() && depth >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidVertex(v.to_string()))
        }
    }

    /// `(core vertex, depth, ray)` the vertex hangs from.
    fn anchor(&self, v: RayedVertex) -> (VertexId, u64, Option<usize>) {
        match v {
            RayedVertex::Core(id) => (id, 0, None),
            RayedVertex::Ray { ray, depth } => (self.rays[ray], depth, Some(ray)),
        }
    }

    pub fn distance(&self, a: RayedVertex, b: RayedVertex) -> Result<u64> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.dist(a, b))
    }

    pub(crate) fn dist(&self, a: RayedVertex, b: RayedVertex) -> u64 {
        let (ca, da, ra) = self.anchor(a);
        let (cb, db, rb) = self.anchor(b);
        if ra.is_some() && ra == rb {
            da.abs_diff(db)
        } else {
            da + u64::from(self.core.dist(ca, cb)) + db
        }
    }

    pub fn degree(&self, v: RayedVertex) -> usize {
        match v {
            RayedVertex::Core(id) => self.core.degree(id) + self.rays.iter().filter(|&&a| a == id).count(),
            RayedVertex::Ray { .. } => 2,
        }
    }

    pub fn truncate(&self, depth: u64) -> Truncation {
        assert!(depth >= 1, "truncation depth must be positive");
        let n = self.core.order();
        let d = depth as usize;
        let mut edges: Vec<_> = self.core.edges().collect();
        for (r, &attach) in self.rays.iter().enumerate() {
            let first = n + r * d;
            edges.push((attach, first));
            edges.extend((1..d).map(|i| (first + i - 1, first + i)));
        }
        Truncation {
            graph: FiniteGraph::new(n + self.rays.len() * d, &edges).expect("truncation is connected"),
            depth,
            core_order: n,
            rays: self.rays.len(),
        }
    }

    fn check_ray(&self, ray: usize) -> Result<()> {
        if ray < self.rays.len() {
            Ok(())
        } else {
            Err(Error::InvalidVertex(format!("ray {ray}")))
        }
    }

    fn check_landmarks(&self, landmarks: &[RayedVertex]) -> Result<Vec<RayedVertex>> {
        if landmarks.is_empty() {
            return Err(Error::EmptyLandmarkSet);
        }
        landmarks.iter().try_for_each(|&x| self.check(x))?;
        let mut s = landmarks.to_vec();
        s.sort_unstable();
        s.dedup();
        Ok(s)
    }

    /// `a_i = d(u_i, x) + d(x, u_0) - i` along `ray` for `i = 0..len`.
    pub fn excess_sequence(&self, ray: usize, x: RayedVertex, len: u64) -> Result<Vec<i64>> {
        self.check_ray(ray)?;
        self.check(x)?;
        let u0 = self.ray_vertex(ray, 0);
        let back = self.dist(x, u0) as i64;
        Ok((0..len)
            .map(|i| self.dist(self.ray_vertex(ray, i), x) as i64 + back - i as i64)
            .collect())
    }

    /// Least `i0` with `r(u_{i0+k}|S) = r(u_{i0}|S) + (k,…,k)` for all `k`,
    /// found by scanning slopes along the ray.
    pub fn stabilization_index(&self, ray: usize, landmarks: &[RayedVertex]) -> Result<u64> {
        let s = self.check_landmarks(landmarks)?;
        self.check_ray(ray)?;
        let u0 = self.ray_vertex(ray, 0);
        // every pendant-ray landmark is flat-sloped only up to its own depth
        let horizon = s.iter().map(|&x| self.dist(u0, x)).max().unwrap_or(0) + 1;
        let mut index = 0;
        for &x in &s {
            let d: Vec<u64> = (0..=horizon)
                .map(|i| self.dist(self.ray_vertex(ray, i), x))
                .collect();
            let mut i0 = horizon;
            while i0 > 0 && d[i0 as usize] == d[i0 as usize - 1] + 1 {
                i0 -= 1;
            }
            index = index.max(i0);
        }
        Ok(index)
    }

    /// Deepest landmark on `ray`, 0 if none: the closed form of the index.
    pub fn deepest_landmark_on(&self, ray: usize, landmarks: &[RayedVertex]) -> u64 {
        landmarks
            .iter()
            .filter_map(|v| match *v {
                RayedVertex::Ray { ray: r, depth } if r == ray => Some(depth),
                _ => None,
            })
            .max()
            .unwrap_or(0)
    }

    fn vector(&self, v: RayedVertex, s: &[RayedVertex]) -> Vec<u64> {
        s.iter().map(|&x| self.dist(v, x)).collect()
    }

    pub fn certify_resolving(&self, landmarks: &[RayedVertex]) -> Result<Certificate> {
        self.certify_resolving_with_window(landmarks, None)
    }

    /// Decides whether `landmarks` resolves the whole infinite graph.
    ///
    /// Deep vertices (at or past the stabilization index of their ray) are
    /// compared through the per-ray bases. Every remaining pair involves a
    /// shallow vertex, whose coordinates are at most `M`; a ray vertex deeper
    /// than `m + M` (with `m` the deepest landmark) has every coordinate above
    /// `M`, so a window of `m + M + 1` covers all such pairs.
    pub fn certify_resolving_with_window(
        &self,
        landmarks: &[RayedVertex],
        window: Option<u64>,
    ) -> Result<Certificate> {
        let s = self.check_landmarks(landmarks)?;

        let mut bases = Vec::with_capacity(self.rays.len());
        for ray in 0..self.rays.len() {
            let index = self.stabilization_index(ray, &s)?;
            let v = self.vector(self.ray_vertex(ray, index), &s);
            bases.push(RayBase {
                ray,
                index,
                base: v.iter().map(|&d| d as i64 - index as i64).collect(),
            });
        }

        // shallowest colliding deep pair across all ray pairs
        let mut deep_witness: Option<(u64, VertexPair<RayedVertex>)> = None;
        for p in 0..bases.len() {
            for q in p + 1..bases.len() {
                let (bp, bq) = (&bases[p], &bases[q]);
                let Some(delta) = constant_offset(&bp.base, &bq.base) else {
                    continue;
                };
                // a + c_P = b + c_Q  with b = a + delta
                let a = (bp.index as i64).max(bq.index as i64 - delta) + 1;
                let b = a + delta;
                let x = RayedVertex::Ray {
                    ray: p,
                    depth: a as u64,
                };
                let y = RayedVertex::Ray {
                    ray: q,
                    depth: b as u64,
                };
                if self.vector(x, &s) != self.vector(y, &s) {
                    return Err(Error::InternalVerificationFailure(format!(
                        "deep pair {x}, {y} is resolved"
                    )));
                }
                let depth = (a + b) as u64;
                if deep_witness.as_ref().is_none_or(|(best, _)| depth < *best) {
                    deep_witness = Some((depth, VertexPair::new(x, y)));
                }
            }
        }

        let deepest = s
            .iter()
            .map(|v| match v {
                RayedVertex::Core(_) => 0,
                RayedVertex::Ray { depth, .. } => *depth,
            })
            .max()
            .unwrap_or(0);
        let shallow = (0..self.core.order()).map(RayedVertex::Core).chain(
            bases
                .iter()
                .flat_map(|b| (1..b.index).map(move |depth| RayedVertex::Ray { ray: b.ray, depth })),
        );
        let shallow_max = shallow
            .flat_map(|w| s.iter().map(move |&x| (w, x)))
            .map(|(w, x)| self.dist(w, x))
            .max()
            .unwrap_or(0);
        let required = deepest + shallow_max + 1;
        let window = match window {
            Some(w) if w < required => {
                return Err(Error::WindowTooSmall {
                    requested: w,
                    required,
                })
            }
            Some(w) => w,
            None => required,
        };

        let verdict = match deep_witness {
            Some((_, pair)) => Verdict::Unresolved(pair),
            None => {
                let core = (0..self.core.order()).map(RayedVertex::Core);
                let rays = (0..self.rays.len())
                    .flat_map(|ray| (1..=window).map(move |depth| RayedVertex::Ray { ray, depth }));
                collision_verdict(core.chain(rays).map(|v| (v, self.vector(v, &s))))
            }
        };

        Ok(Certificate {
            window,
            required_window: required,
            bases,
            verdict,
        })
    }

    pub fn lower_bound(&self) -> Result<RayLowerBound> {
        if self.rays.len() < 2 {
            return Err(Error::TooFewRays(self.rays.len()));
        }
        let mut groups: BTreeMap<VertexId, usize> = BTreeMap::new();
        for &a in &self.rays {
            *groups.entry(a).or_default() += 1;
        }
        let twin_rays = groups.values().map(|g| g - 1).sum::<usize>().max(1);
        Ok(RayLowerBound {
            twin_rays,
            value: twin_rays.max(2),
        })
    }

    /// Rays in the description; they are pairwise vertex-disjoint.
    pub fn count_disjoint_rays(&self) -> usize {
        self.rays.len()
    }

    /// Uniform degree bound over the whole infinite graph.
    pub fn ulf_bound(&self) -> usize {
        (0..self.core.order())
            .map(|v| self.degree(RayedVertex::Core(v)))
            .max()
            .unwrap_or(0)
            .max(2)
    }
}

/// Vertices of the comb: spine `u_i` and tooth `v_i` hanging off `u_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CombVertex {
    Spine(usize),
    Tooth(usize),
}

impl CombVertex {
    pub fn index(self) -> usize {
        match self {
            CombVertex::Spine(i) | CombVertex::Tooth(i) => i,
        }
    }

    /// Id in `make_comb(spine_len)`.
    pub fn id(self, spine_len: usize) -> VertexId {
        match self {
            CombVertex::Spine(i) => i,
            CombVertex::Tooth(i) => spine_len + 1 + i,
        }
    }
}

impl fmt::Display for CombVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CombVertex::Spine(i) => write!(f, "u:{i}"),
            CombVertex::Tooth(i) => write!(f, "v:{i}"),
        }
    }
}

impl FromStr for CombVertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidVertex(s.to_string());
        match s.trim().split_once(':') {
            Some(("u", i)) => Ok(CombVertex::Spine(i.parse().map_err(|_| bad())?)),
            Some(("v", i)) => Ok(CombVertex::Tooth(i.parse().map_err(|_| bad())?)),
            _ => Err(bad()),
        }
    }
}

/// Comb truncated at spine index `spine_len`: spine `u_0..=u_n` on ids
/// `0..=n`, tooth `v_i` on id `n + 1 + i`.
pub fn make_comb(spine_len: usize) -> FiniteGraph {
    let n = spine_len;
    let mut edges: Vec<_> = (1..=n).map(|i| (i - 1, i)).collect();
    edges.extend((0..=n).map(|i| (i, n + 1 + i)));
    FiniteGraph::new(2 * (n + 1), &edges).expect("comb is connected")
}

/// A pair of comb vertices that `landmarks` cannot tell apart: `(u_{k+1}, v_k)`
/// with `k` one past the largest index used by the landmarks.
pub fn comb_refute(landmarks: &[CombVertex]) -> Result<VertexPair<CombVertex>> {
    let k = landmarks.iter().map(|v| v.index() + 1).max().unwrap_or(0);
    let pair = VertexPair::new(CombVertex::Spine(k + 1), CombVertex::Tooth(k));
    let comb = make_comb(k + 2);
    let (a, b) = (pair.u.id(k + 2), pair.v.id(k + 2));
    for &w in landmarks {
        let w_id = w.id(k + 2);
        if comb.dist(w_id, a) != comb.dist(w_id, b) {
            return Err(Error::InternalVerificationFailure(format!(
                "{w} resolves {} and {}",
                pair.u, pair.v
            )));
        }
    }
    Ok(pair)
}
