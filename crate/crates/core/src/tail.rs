//! Products `P_∞ □ H` and `P_2∞ □ H` of a one- or two-way infinite path with
//! a finite connected graph `H`.
//!
//! Distances split as `|i - i'| + d_H(h, h')`. Every column `{(i, h)}` is a
//! metric ray, so above the highest landmark level (and, two-way, below the
//! lowest) the distance vector of `(i, h)` moves by `(1,…,1)` per level. That
//! reduces resolvability to a comparison of per-column base vectors plus an
//! exhaustive scan of a finite band of levels.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{
    cartesian_product, identify_family, make_family, Family, FiniteGraph, Verdict, VertexId, VertexPair,
};
use crate::rayed::constant_offset;
use crate::resolver::{collision_verdict, is_resolving, metric_dimension, psi};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Base {
    /// `P_∞`, levels `0, 1, 2, …`
    OneWay,
    /// `P_2∞`, levels in `ℤ`
    TwoWay,
}

impl Base {
    pub fn name(self) -> &'static str {
        match self {
            Base::OneWay => "one_way",
            Base::TwoWay => "two_way",
        }
    }

    /// Metric dimension of the infinite path itself.
    pub fn dimension(self) -> usize {
        match self {
            Base::OneWay => 1,
            Base::TwoWay => 2,
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Base {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "one_way" => Ok(Base::OneWay),
            "two_way" => Ok(Base::TwoWay),
            other => Err(Error::InvalidVertex(format!("unknown base {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TailVertex {
    pub level: i64,
    pub h: VertexId,
}

impl TailVertex {
    pub fn new(level: i64, h: VertexId) -> Self {
        TailVertex { level, h }
    }
}

impl fmt::Display for TailVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.level, self.h)
    }
}

impl FromStr for TailVertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidVertex(s.to_string());
        let (level, h) = s.trim().split_once(':').ok_or_else(bad)?;
        Ok(TailVertex {
            level: level.parse().map_err(|_| bad())?,
            h: h.parse().map_err(|_| bad())?,
        })
    }
}

fn tv(level: i64, h: VertexId) -> TailVertex {
    TailVertex { level, h }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailProduct {
    base: Base,
    h: FiniteGraph,
}

/// Finite band of levels `lo..=hi` as an ordinary graph; `(i, h)` has id
/// `(i - lo)·|H| + h`.
#[derive(Debug, Clone)]
pub struct TailWindow {
    pub graph: FiniteGraph,
    pub lo: i64,
    pub hi: i64,
    fiber_order: usize,
}

impl TailWindow {
    pub fn id_of(&self, v: TailVertex) -> Option<VertexId> {
        (v.level >= self.lo && v.level <= self.hi && v.h < self.fiber_order)
            .then(|| (v.level - self.lo) as usize * self.fiber_order + v.h)
    }

    pub fn vertex_of(&self, id: VertexId) -> TailVertex {
        tv(self.lo + (id / self.fiber_order) as i64, id % self.fiber_order)
    }
}

/// Stabilized column vectors in one direction:
/// `r((anchor ± k, h)|S) = k·(1,…,1) + bases[h]` for `k >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberBases {
    pub anchor: i64,
    pub bases: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailCertificate {
    /// Margin of levels scanned beyond the landmark level span.
    pub window: u64,
    /// Smallest margin for which the scan is sound.
    pub required_window: u64,
    /// Levels actually scanned, inclusive.
    pub levels: (i64, i64),
    pub upward: FiberBases,
    pub downward: Option<FiberBases>,
    pub verdict: Verdict<TailVertex>,
}

/// Dimension bounds for a tail product, with the facts they rest on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductBounds {
    pub lower: usize,
    pub upper: usize,
    /// A certified resolving set of size `upper`, when one was constructed.
    pub basis: Option<Vec<TailVertex>>,
    pub evidence: Vec<String>,
}

impl ProductBounds {
    pub fn exact(&self) -> Option<usize> {
        (self.lower == self.upper).then_some(self.lower)
    }
}

/// Level set and fiber set of a product vertex set.
pub fn projections(s: &[TailVertex]) -> (BTreeSet<i64>, BTreeSet<VertexId>) {
    (
        s.iter().map(|v| v.level).collect(),
        s.iter().map(|v| v.h).collect(),
    )
}

/// Two-way lift of a one-way resolving set living on level 0: adds `(1, u)`.
pub fn lift_basis(h: &FiniteGraph, s: &[TailVertex], u: VertexId) -> Result<Vec<TailVertex>> {
    h.check_vertex(u)?;
    if s.iter().any(|v| v.level != 0) {
        return Err(Error::PreconditionNotCertified(
            "every landmark must lie on level 0".into(),
        ));
    }
    let one_way = TailProduct::new(Base::OneWay, h.clone());
    if !one_way.certify_resolving(s)?.verdict.is_pass() {
        return Err(Error::PreconditionNotCertified(
            "set does not resolve the one-way product".into(),
        ));
    }
    let mut out: Vec<TailVertex> = s.to_vec();
    out.push(tv(1, u));
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Affine symmetry of the product: levels `i ↦ lam·i + tau`, and for a cycle
/// fiber columns `j ↦ sig·j + rho (mod n)`.
#[derive(Debug, Clone, Copy)]
struct Sym {
    lam: i64,
    tau: i64,
    sig: i64,
    rho: i64,
    n: i64,
}

impl Sym {
    fn col(&self, j: i64) -> i64 {
        (self.sig * j + self.rho).rem_euclid(self.n)
    }

    fn apply(&self, v: TailVertex) -> (i64, i64) {
        (self.lam * v.level + self.tau, self.col(v.h as i64))
    }

    fn invert(&self, level: i64, col: i64) -> TailVertex {
        let j = (self.sig * (col - self.rho)).rem_euclid(self.n);
        tv(self.lam * (level - self.tau), j as VertexId)
    }
}

impl TailProduct {
    pub fn new(base: Base, h: FiniteGraph) -> Self {
        TailProduct { base, h }
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn fiber(&self) -> &FiniteGraph {
        &self.h
    }

    pub fn check(&self, v: TailVertex) -> Result<()> {
        if self.base == Base::OneWay && v.level < 0 {
            return Err(Error::NegativeLevel(v.level));
        }
        self.h.check_vertex(v.h)
    }

    pub fn distance(&self, a: TailVertex, b: TailVertex) -> Result<u64> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.dist(a, b))
    }

    pub(crate) fn dist(&self, a: TailVertex, b: TailVertex) -> u64 {
        a.level.abs_diff(b.level) + u64::from(self.h.dist(a.h, b.h))
    }

    fn vector(&self, v: TailVertex, s: &[TailVertex]) -> Vec<u64> {
        s.iter().map(|&x| self.dist(v, x)).collect()
    }

    fn resolves_pair(&self, s: &[TailVertex], a: TailVertex, b: TailVertex) -> bool {
        a == b || self.vector(a, s) != self.vector(b, s)
    }

    pub fn truncate(&self, lo: i64, hi: i64) -> Result<TailWindow> {
        if self.base == Base::OneWay && lo < 0 {
            return Err(Error::NegativeLevel(lo));
        }
        let len = (hi - lo + 1).max(1) as usize;
        let path = make_family(Family::Path, len)?;
        Ok(TailWindow {
            graph: cartesian_product(&path, &self.h),
            lo,
            hi: lo + len as i64 - 1,
            fiber_order: self.h.order(),
        })
    }

    fn check_landmarks(&self, landmarks: &[TailVertex]) -> Result<Vec<TailVertex>> {
        if landmarks.is_empty() {
            return Err(Error::EmptyLandmarkSet);
        }
        for &v in landmarks {
            self.check(v)?;
        }
        let mut s = landmarks.to_vec();
        s.sort_unstable();
        s.dedup();
        Ok(s)
    }

    fn fiber_bases(&self, anchor: i64, s: &[TailVertex]) -> FiberBases {
        let bases = (0..self.h.order())
            .map(|h| {
                self.vector(tv(anchor, h), s)
                    .into_iter()
                    .map(|d| d as i64)
                    .collect()
            })
            .collect();
        FiberBases { anchor, bases }
    }

    pub fn certify_resolving(&self, landmarks: &[TailVertex]) -> Result<TailCertificate> {
        self.certify_resolving_with_window(landmarks, None)
    }

    /// Decides whether `landmarks` resolves the infinite product.
    ///
    /// With `c_lo..=c_hi` the landmark levels, two vertices both at or above
    /// `c_hi` (or both at or below `c_lo`, or one of each) collide exactly
    /// when their column bases differ by a constant. Every other pair has a
    /// vertex strictly inside the span whose coordinates are at most `M`, the
    /// largest landmark distance from the span; its partner must then lie
    /// within `M` levels of the span. Scanning a margin of `M + 1` covers
    /// those pairs and every deep witness.
    pub fn certify_resolving_with_window(
        &self,
        landmarks: &[TailVertex],
        window: Option<u64>,
    ) -> Result<TailCertificate> {
        let s = self.check_landmarks(landmarks)?;
        let c_lo = s.iter().map(|v| v.level).min().unwrap_or(0);
        let c_hi = s.iter().map(|v| v.level).max().unwrap_or(0);
        let nh = self.h.order();

        let upward = self.fiber_bases(c_hi, &s);
        let downward = (self.base == Base::TwoWay).then(|| self.fiber_bases(c_lo, &s));

        let mut deep: Option<VertexPair<TailVertex>> = None;
        let mut note = |pair: VertexPair<TailVertex>| {
            if deep.is_none_or(|d| pair < d) {
                deep = Some(pair);
            }
        };
        for h in 0..nh {
            for h2 in h + 1..nh {
                if let Some(delta) = constant_offset(&upward.bases[h2], &upward.bases[h]) {
                    // (i, h) and (i - delta, h2)
                    let i = c_hi + delta.max(0);
                    note(VertexPair::new(tv(i, h), tv(i - delta, h2)));
                }
                if let Some(down) = &downward {
                    if let Some(delta) = constant_offset(&down.bases[h2], &down.bases[h]) {
                        let k = delta.max(0);
                        note(VertexPair::new(tv(c_lo - k, h), tv(c_lo - k + delta, h2)));
                    }
                }
            }
        }
        if let Some(down) = &downward {
            for h in 0..nh {
                for h2 in 0..nh {
                    // (c_hi + p, h) against (c_lo - q, h2) with p - q = delta
                    let Some(delta) = constant_offset(&down.bases[h2], &upward.bases[h]) else {
                        continue;
                    };
                    let mut p = delta.max(0);
                    let mut q = p - delta;
                    if c_lo == c_hi && h == h2 && p == 0 && q == 0 {
                        p = 1;
                        q = 1;
                    }
                    note(VertexPair::new(tv(c_hi + p, h), tv(c_lo - q, h2)));
                }
            }
        }

        let span_lo = match self.base {
            Base::OneWay => 0,
            Base::TwoWay => c_lo,
        };
        let shallow_max = (span_lo..=c_hi)
            .flat_map(|i| (0..nh).map(move |h| tv(i, h)))
            .flat_map(|w| s.iter().map(move |&x| (w, x)))
            .map(|(w, x)| self.dist(w, x))
            .max()
            .unwrap_or(0);
        let required = shallow_max + 1;
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

        let lo = match self.base {
            Base::OneWay => 0,
            Base::TwoWay => c_lo - window as i64,
        };
        let hi = c_hi + window as i64;
        let verdict = collision_verdict(
            (lo..=hi)
                .flat_map(|i| (0..nh).map(move |h| tv(i, h)))
                .map(|v| (v, self.vector(v, &s))),
        );

        if let Some(pair) = deep {
            if self.resolves_pair(&s, pair.u, pair.v) {
                return Err(Error::InternalVerificationFailure(format!(
                    "deep pair {pair} is resolved"
                )));
            }
            if verdict.is_pass() {
                return Err(Error::InternalVerificationFailure(format!(
                    "deep pair {pair} lies outside the scanned levels"
                )));
            }
        }

        Ok(TailCertificate {
            window,
            required_window: required,
            levels: (lo, hi),
            upward,
            downward,
            verdict,
        })
    }

    /// The explicit basis for `H` a path, cycle or clique with the standard
    /// labeling. `K_1` gives the base path's own basis.
    pub fn construct_basis(&self, family: Family) -> Result<Vec<TailVertex>> {
        let n = self.h.order();
        let expected = make_family(family, n)?;
        if expected != self.h {
            return Err(Error::UnsupportedFamily(format!(
                "H is not the standard {family} of order {n}"
            )));
        }
        let two_way = self.base == Base::TwoWay;
        let lifted = |mut s: Vec<TailVertex>| {
            if two_way {
                s.push(tv(1, 0));
            }
            s.sort_unstable();
            s
        };
        if n == 1 {
            return Ok(lifted(vec![tv(0, 0)]));
        }
        // K_2 is P_2 and K_3 is C_3
        let family = match (family, n) {
            (Family::Complete, 2) => Family::Path,
            (Family::Complete, 3) => Family::Cycle,
            (f, _) => f,
        };
        Ok(match family {
            Family::Path => lifted(vec![tv(0, 0), tv(0, n - 1)]),
            Family::Cycle if n % 2 == 1 => lifted(vec![tv(0, 0), tv(0, (n - 1) / 2)]),
            Family::Cycle => lifted(vec![tv(0, 0), tv(0, n / 2), tv(0, 1)]),
            Family::Complete if two_way => (0..n - 1).map(|i| tv(i as i64, i)).collect(),
            Family::Complete => (0..n - 1).map(|j| tv(0, j)).collect(),
        })
    }

    fn even_cycle(&self) -> bool {
        let n = self.h.order();
        n.is_multiple_of(2) && identify_family(&self.h) == Some(Family::Cycle)
    }

    /// An explicit pair that `landmarks` fails to resolve, for the small sets
    /// that can never resolve: two landmarks in a two-way product with a
    /// nontrivial fiber, two landmarks in `P_∞ □ C_n` and three landmarks in
    /// `P_2∞ □ C_n`, `n` even. The pair is re-verified before it is returned.
    pub fn refute_small_set(&self, landmarks: &[TailVertex]) -> Result<VertexPair<TailVertex>> {
        let s = self.check_landmarks(landmarks)?;
        let pair = match (self.base, s.len()) {
            (Base::TwoWay, 2) if self.h.order() >= 2 => self.refute_two_way_pair(&s),
            (Base::OneWay, 2) if self.even_cycle() => self.refute_one_way_cycle(&s),
            (Base::TwoWay, 3) if self.even_cycle() => self.refute_two_way_cycle(&s)?,
            _ => {
                return Err(Error::OutOfScopeConfiguration(format!(
                    "{} landmarks in a {} product with |H| = {}",
                    s.len(),
                    self.base,
                    self.h.order()
                )))
            }
        };
        let (a, b) = pair;
        let valid = self.check(a).is_ok() && self.check(b).is_ok();
        if !valid || self.resolves_pair(&s, a, b) {
            return Err(Error::InternalVerificationFailure(format!(
                "constructed pair {a}, {b} is resolved"
            )));
        }
        Ok(VertexPair::new(a, b))
    }

    fn refute_two_way_pair(&self, s: &[TailVertex]) -> (TailVertex, TailVertex) {
        let (x, y) = (s[0], s[1]);
        let (i, u) = (x.level, x.h);
        if x.level == y.level {
            return (tv(i - 1, u), tv(i + 1, u));
        }
        if u == y.h {
            let w = self.h.neighbors(u)[0];
            return (tv(i - 1, u), tv(i, w));
        }
        let duv = self.h.dist(u, y.h);
        let w = *self
            .h
            .neighbors(u)
            .iter()
            .find(|&&w| self.h.dist(w, y.h) + 1 == duv)
            .expect("a shortest path leaves u through some neighbor");
        (tv(i + 1, u), tv(i, w))
    }

    /// Column witness when the fiber projection misses a resolving set of the
    /// cycle: one column, or two antipodal columns.
    fn column_witness(&self, s: &[TailVertex], level: i64) -> Option<(TailVertex, TailVertex)> {
        let n = self.h.order();
        let cols: BTreeSet<VertexId> = s.iter().map(|v| v.h).collect();
        let j = *cols.first()?;
        let degenerate = cols.len() == 1 || (cols.len() == 2 && cols.contains(&((j + n / 2) % n)));
        degenerate.then(|| (tv(level, (j + n - 1) % n), tv(level, (j + 1) % n)))
    }

    fn refute_one_way_cycle(&self, s: &[TailVertex]) -> (TailVertex, TailVertex) {
        let n = self.h.order() as i64;
        if let Some(pair) = self.column_witness(s, 0) {
            return pair;
        }
        let (a, b) = (s[0], s[1]);
        if a.level == b.level && a.level > 0 {
            return (tv(a.level - 1, a.h), tv(a.level + 1, a.h));
        }
        // s is sorted, so a has the lower level; put a's column at 0 and b's
        // column in (0, n/2)
        let sym = [1, -1]
            .into_iter()
            .map(|sig| Sym {
                lam: 1,
                tau: 0,
                sig,
                rho: -sig * a.h as i64,
                n,
            })
            .find(|sym| 2 * sym.col(b.h as i64) < n)
            .expect("one orientation puts b below n/2");
        let (i, _) = sym.apply(a);
        let (i2, j2) = sym.apply(b);
        if i == i2 {
            (sym.invert(0, j2 + 1), sym.invert(1, j2))
        } else {
            (sym.invert(i, 1), sym.invert(i + 1, 0))
        }
    }

    fn refute_two_way_cycle(&self, s: &[TailVertex]) -> Result<(TailVertex, TailVertex)> {
        let n = self.h.order() as i64;
        let min_level = s.iter().map(|v| v.level).min().unwrap_or(0);
        if let Some(pair) = self.column_witness(s, min_level) {
            return Ok(pair);
        }
        if s.iter().all(|v| v.level == s[0].level) {
            let (i, j) = (s[0].level, s[0].h);
            return Ok((tv(i - 1, j), tv(i + 1, j)));
        }
        let cols: BTreeSet<VertexId> = s.iter().map(|v| v.h).collect();
        if cols.len() == 2 {
            // repeated column to 0, the other into (0, n/2), lowest level to 0
            let repeated = cols
                .iter()
                .copied()
                .find(|&c| s.iter().filter(|v| v.h == c).count() == 2)
                .expect("two columns over three landmarks");
            let single = cols.iter().copied().find(|&c| c != repeated).unwrap_or(repeated);
            let sym = [1, -1]
                .into_iter()
                .map(|sig| Sym {
                    lam: 1,
                    tau: -min_level,
                    sig,
                    rho: -sig * repeated as i64,
                    n,
                })
                .find(|sym| 2 * sym.col(single as i64) < n)
                .expect("one orientation puts the single column below n/2");
            return Ok((sym.invert(-1, 0), sym.invert(0, n - 1)));
        }
        for pivot in s {
            for sig in [1, -1] {
                for lam in [1, -1] {
                    let sym = Sym {
                        lam,
                        tau: -lam * pivot.level,
                        sig,
                        rho: -sig * pivot.h as i64,
                        n,
                    };
                    let others: Vec<(i64, i64)> =
                        s.iter().filter(|v| *v != pivot).map(|&v| sym.apply(v)).collect();
                    let low_half = |j: i64| 0 < j && 2 * j < n;
                    let high_half = |j: i64| 2 * j > n;
                    let Some(&(b, jb)) = others.iter().find(|o| low_half(o.1)) else {
                        continue;
                    };
                    let Some(&(c, jc)) = others.iter().find(|o| high_half(o.1)) else {
                        continue;
                    };
                    if b > c.max(0) {
                        let t = c.max(0);
                        return Ok((sym.invert(t, 1), sym.invert(t + 1, 0)));
                    }
                    if b == c && b > 0 {
                        let p = b;
                        let gap = jc - jb;
                        return Ok(if 2 * gap > n {
                            (sym.invert(p, jb + 1), sym.invert(p + 1, jb))
                        } else if 2 * gap == n {
                            (sym.invert(p - 1, jb + 1), sym.invert(p + 1, jb - 1))
                        } else {
                            (sym.invert(p - 1, jb), sym.invert(p, jb - 1))
                        });
                    }
                }
            }
        }
        Err(Error::InternalVerificationFailure(format!(
            "no normalization matched {s:?}"
        )))
    }

    /// Lower and upper bounds on the dimension of the product. Upper bounds
    /// come from a certified basis for paths, cycles and cliques, and from
    /// `β(base) + ψ(H) - 1` otherwise.
    pub fn dimension_bounds(&self) -> Result<ProductBounds> {
        let nh = self.h.order();
        if nh < 2 {
            return Err(Error::TrivialFactor);
        }
        let mut evidence = Vec::new();
        let (beta_h, _) = metric_dimension(&self.h);
        let mut lower = self.base.dimension().max(beta_h);
        evidence.push(format!(
            "projection: beta(H) = {beta_h}, beta(base) = {}",
            self.base.dimension()
        ));
        match self.base {
            Base::OneWay => {
                lower = lower.max(2);
                evidence.push("not a path, so at least 2".into());
            }
            Base::TwoWay => {
                let refuted = self.sweep_refuter(2)?;
                lower = lower.max(3);
                evidence.push(format!("no 2-set resolves: {refuted} normalized sets refuted"));
            }
        }
        if self.even_cycle() {
            let k = match self.base {
                Base::OneWay => 2,
                Base::TwoWay => 3,
            };
            let refuted = self.sweep_refuter(k)?;
            lower = lower.max(k + 1);
            evidence.push(format!("no {k}-set resolves: {refuted} normalized sets refuted"));
        }

        let basis = match identify_family(&self.h) {
            Some(family) => {
                let basis = self.construct_basis(family)?;
                if !self.certify_resolving(&basis)?.verdict.is_pass() {
                    return Err(Error::InternalVerificationFailure(format!(
                        "constructed basis for {family} fails certification"
                    )));
                }
                evidence.push(format!("certified basis of size {} for {family}", basis.len()));
                Some(basis)
            }
            None => None,
        };
        let upper = match &basis {
            Some(b) => b.len(),
            None => {
                let (psi_h, _) = psi(&self.h)?;
                let bound = self.base.dimension() + psi_h - 1;
                evidence.push(format!("upper bound beta(base) + psi(H) - 1 = {bound}"));
                bound
            }
        };
        Ok(ProductBounds {
            lower,
            upper,
            basis,
            evidence,
        })
    }

    /// Runs the refuter on every `k`-set with lowest level 0 and levels up to
    /// 2, which covers every configuration up to the symmetries the refuter
    /// normalizes by. Returns the number of sets refuted.
    fn sweep_refuter(&self, k: usize) -> Result<usize> {
        let nh = self.h.order();
        let pool: Vec<TailVertex> = (0..=2).flat_map(|i| (0..nh).map(move |h| tv(i, h))).collect();
        let mut count = 0;
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let set: Vec<TailVertex> = idx.iter().map(|&i| pool[i]).collect();
            if self.base == Base::OneWay || set.iter().any(|v| v.level == 0) {
                self.refute_small_set(&set)?;
                count += 1;
            }
            // next k-combination of the pool
            let Some(pos) = (0..k).rev().find(|&p| idx[p] < pool.len() - k + p) else {
                break;
            };
            idx[pos] += 1;
            for p in pos + 1..k {
                idx[p] = idx[p - 1] + 1;
            }
        }
        Ok(count)
    }

    /// Whether `s` resolves the window truncation `lo..=hi` as a finite graph.
    pub fn resolves_window(&self, s: &[TailVertex], lo: i64, hi: i64) -> Result<Verdict> {
        let w = self.truncate(lo, hi)?;
        let ids: Option<Vec<VertexId>> = s.iter().map(|&v| w.id_of(v)).collect();
        let ids = ids.ok_or_else(|| Error::InvalidVertex("landmark outside the window".into()))?;
        is_resolving(&w.graph, &ids)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn product(base: Base, family: Family, n: usize) -> TailProduct {
        TailProduct::new(base, make_family(family, n).unwrap())
    }

    fn set(pairs: &[(i64, VertexId)]) -> Vec<TailVertex> {
        pairs.iter().map(|&(i, h)| tv(i, h)).collect()
    }

    #[test]
    fn parse_and_display() {
        let v: TailVertex = "-2:1".parse().unwrap();
        assert_eq!(v, tv(-2, 1));
        assert_eq!(v.to_string(), "-2:1");
        assert!("3".parse::<TailVertex>().is_err());
        assert_eq!("two_way".parse::<Base>().unwrap(), Base::TwoWay);
    }

    #[test]
    fn distances() {
        let k4 = product(Base::OneWay, Family::Complete, 4);
        assert_eq!(k4.distance(tv(2, 1), tv(5, 3)).unwrap(), 4);
        assert_eq!(k4.distance(tv(2, 1), tv(2, 1)).unwrap(), 0);
        assert_eq!(k4.distance(tv(-1, 0), tv(0, 0)), Err(Error::NegativeLevel(-1)));
        let c6 = product(Base::TwoWay, Family::Cycle, 6);
        assert_eq!(c6.distance(tv(-2, 1), tv(1, 4)).unwrap(), 6);
        let w = c6.truncate(-3, 2).unwrap();
        let (a, b) = (w.id_of(tv(-2, 1)).unwrap(), w.id_of(tv(1, 4)).unwrap());
        assert_eq!(w.graph.dist(a, b), 6);
        assert_eq!(w.vertex_of(b), tv(1, 4));
    }

    #[test]
    fn certify_examples() {
        let p5 = product(Base::OneWay, Family::Path, 5);
        assert!(p5
            .certify_resolving(&set(&[(0, 0), (0, 4)]))
            .unwrap()
            .verdict
            .is_pass());

        let c6 = product(Base::OneWay, Family::Cycle, 6);
        let cert = c6.certify_resolving(&set(&[(0, 0), (0, 3)])).unwrap();
        let pair = *cert.verdict.witness().unwrap();
        assert_eq!(pair, VertexPair::new(tv(0, 1), tv(0, 5)));

        let c7 = product(Base::TwoWay, Family::Cycle, 7);
        let cert = c7.certify_resolving(&set(&[(0, 0), (0, 3), (1, 0)])).unwrap();
        assert!(cert.verdict.is_pass());
        assert_eq!(cert.downward.as_ref().unwrap().anchor, 0);
        assert_eq!(cert.upward.anchor, 1);

        assert_eq!(c7.certify_resolving(&[]).unwrap_err(), Error::EmptyLandmarkSet);
    }

    #[test]
    fn deep_collisions_are_found() {
        // all landmarks on one level: (l-1, h) and (l+1, h) always collide
        let p4 = product(Base::TwoWay, Family::Path, 4);
        let cert = p4.certify_resolving(&set(&[(0, 0), (0, 3)])).unwrap();
        assert!(!cert.verdict.is_pass());
        let k1 = TailProduct::new(Base::TwoWay, make_family(Family::Path, 1).unwrap());
        assert!(!k1.certify_resolving(&set(&[(3, 0)])).unwrap().verdict.is_pass());
        assert!(k1
            .certify_resolving(&set(&[(3, 0), (4, 0)]))
            .unwrap()
            .verdict
            .is_pass());
    }

    #[test]
    fn window_override() {
        let c7 = product(Base::OneWay, Family::Cycle, 7);
        let s = set(&[(0, 0), (0, 3)]);
        let cert = c7.certify_resolving(&s).unwrap();
        let more = c7
            .certify_resolving_with_window(&s, Some(cert.required_window + 5))
            .unwrap();
        assert!(more.verdict.is_pass());
        assert!(matches!(
            c7.certify_resolving_with_window(&s, Some(0)),
            Err(Error::WindowTooSmall { .. })
        ));
    }

    #[test]
    fn constructed_bases() {
        let c7 = product(Base::OneWay, Family::Cycle, 7);
        assert_eq!(c7.construct_basis(Family::Cycle).unwrap(), set(&[(0, 0), (0, 3)]));
        let k5 = product(Base::TwoWay, Family::Complete, 5);
        assert_eq!(
            k5.construct_basis(Family::Complete).unwrap(),
            set(&[(0, 0), (1, 1), (2, 2), (3, 3)])
        );
        let p2 = product(Base::OneWay, Family::Path, 2);
        assert_eq!(p2.construct_basis(Family::Path).unwrap(), set(&[(0, 0), (0, 1)]));
        assert!(matches!(
            p2.construct_basis(Family::Cycle),
            Err(Error::InvalidOrder { .. })
        ));
        assert!(matches!(
            c7.construct_basis(Family::Path),
            Err(Error::UnsupportedFamily(_))
        ));
        let k3 = product(Base::TwoWay, Family::Cycle, 3);
        assert_eq!(
            k3.construct_basis(Family::Complete).unwrap(),
            set(&[(0, 0), (0, 1), (1, 0)])
        );
    }

    #[test]
    fn refuter_examples() {
        let p3 = product(Base::TwoWay, Family::Path, 3);
        assert_eq!(
            p3.refute_small_set(&set(&[(0, 0), (4, 0)])).unwrap(),
            VertexPair::new(tv(-1, 0), tv(0, 1))
        );
        assert_eq!(
            p3.refute_small_set(&set(&[(0, 0), (3, 2)])).unwrap(),
            VertexPair::new(tv(1, 0), tv(0, 1))
        );
        let c6 = product(Base::TwoWay, Family::Cycle, 6);
        assert_eq!(
            c6.refute_small_set(&set(&[(0, 0), (1, 1), (-1, 4)])).unwrap(),
            VertexPair::new(tv(0, 1), tv(1, 0))
        );
        let c7 = product(Base::OneWay, Family::Cycle, 7);
        assert!(matches!(
            c7.refute_small_set(&set(&[(0, 0), (1, 1)])),
            Err(Error::OutOfScopeConfiguration(_))
        ));
    }

    #[test]
    fn projections_and_lifting() {
        let (levels, fibers) = projections(&set(&[(0, 0), (1, 1), (2, 2), (3, 3)]));
        assert_eq!(levels.len(), 4);
        assert_eq!(fibers.into_iter().collect::<Vec<_>>(), vec![0, 1, 2, 3]);
        assert_eq!(projections(&[]), (BTreeSet::new(), BTreeSet::new()));

        let p5 = make_family(Family::Path, 5).unwrap();
        let lifted = lift_basis(&p5, &set(&[(0, 0), (0, 4)]), 0).unwrap();
        assert_eq!(lifted, set(&[(0, 0), (0, 4), (1, 0)]));
        let tw = TailProduct::new(Base::TwoWay, p5.clone());
        assert!(tw.certify_resolving(&lifted).unwrap().verdict.is_pass());
        assert!(matches!(
            lift_basis(&p5, &set(&[(0, 1), (0, 2)]), 0),
            Err(Error::PreconditionNotCertified(_))
        ));
    }

    #[test]
    fn bounds_examples() {
        let cases = [
            (Base::OneWay, Family::Cycle, 8, 3),
            (Base::TwoWay, Family::Complete, 6, 5),
            (Base::TwoWay, Family::Cycle, 9, 3),
        ];
        for (base, family, n, beta) in cases {
            let b = product(base, family, n).dimension_bounds().unwrap();
            assert_eq!(b.exact(), Some(beta), "{base} {family} {n}");
        }
        let k1 = TailProduct::new(Base::OneWay, make_family(Family::Path, 1).unwrap());
        assert_eq!(k1.dimension_bounds().unwrap_err(), Error::TrivialFactor);
    }
}
