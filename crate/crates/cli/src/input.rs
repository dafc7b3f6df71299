//! Graph JSON and vertex-set parsing.

use metricdim::rayed::{make_comb, CombVertex, RayedGraph, RayedVertex};
use metricdim::tail::{Base, TailProduct, TailVertex};
use metricdim::{cartesian_product, make_family, Error, Family, FiniteGraph, VertexId};
use serde::Deserialize;

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum GraphSpec {
    Finite {
        n: usize,
        edges: Vec<(VertexId, VertexId)>,
    },
    Family {
        family: String,
        n: usize,
    },
    Product {
        left: Box<GraphSpec>,
        right: Box<GraphSpec>,
    },
    Rayed {
        core: Box<GraphSpec>,
        rays: Vec<VertexId>,
    },
    KWayPath {
        k: usize,
    },
    TailProduct {
        base: String,
        #[serde(rename = "H")]
        h: Box<GraphSpec>,
    },
    /// The infinite comb, or its truncation with `spine_len + 1` spine vertices.
    Comb {
        spine_len: Option<usize>,
    },
}

#[derive(Debug, Clone)]
pub enum Graph {
    Finite(FiniteGraph),
    Rayed(RayedGraph),
    Tail(TailProduct),
    Comb,
    /// An infinite graph known to have infinite dimension, with the reason.
    Unbounded(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VertexSet {
    Finite(Vec<VertexId>),
    Rayed(Vec<RayedVertex>),
    Tail(Vec<TailVertex>),
    Comb(Vec<CombVertex>),
}

pub fn parse_graph(text: &str) -> Result<Graph, String> {
    let spec: GraphSpec = serde_json::from_str(text).map_err(|e| format!("invalid graph JSON: {e}"))?;
    resolve(&spec).map_err(|e| e.to_string())
}

fn finite(spec: &GraphSpec, role: &str) -> Result<FiniteGraph, Error> {
    match resolve(spec)? {
        Graph::Finite(g) => Ok(g),
        _ => Err(Error::UnsupportedFamily(format!("{role} must be a finite graph"))),
    }
}

/// `P_∞` or `P_2∞` given as a rayed graph.
fn as_line(g: &RayedGraph) -> Option<Base> {
    if g.core().order() != 1 {
        return None;
    }
    match g.ray_count() {
        1 => Some(Base::OneWay),
        2 => Some(Base::TwoWay),
        _ => None,
    }
}

fn resolve(spec: &GraphSpec) -> Result<Graph, Error> {
    Ok(match spec {
        GraphSpec::Finite { n, edges } => Graph::Finite(FiniteGraph::new(*n, edges)?),
        GraphSpec::Family { family, n } => {
            let kind: Family = family.parse()?;
            Graph::Finite(make_family(kind, *n)?)
        }
        GraphSpec::Product { left, right } => product(resolve(left)?, resolve(right)?)?,
        GraphSpec::Rayed { core, rays } => {
            Graph::Rayed(RayedGraph::new(finite(core, "rayed core")?, rays.clone())?)
        }
        GraphSpec::KWayPath { k } => {
            if *k == 0 {
                return Err(Error::InvalidOrder {
                    what: "k-way path",
                    n: 0,
                });
            }
            Graph::Rayed(RayedGraph::k_way_path(*k))
        }
        GraphSpec::TailProduct { base, h } => {
            Graph::Tail(TailProduct::new(base.parse()?, finite(h, "tail product fiber")?))
        }
        GraphSpec::Comb { spine_len: Some(n) } => Graph::Finite(make_comb(*n)),
        GraphSpec::Comb { spine_len: None } => Graph::Comb,
    })
}

fn product(left: Graph, right: Graph) -> Result<Graph, Error> {
    let infinite_dim = |g: &Graph| matches!(g, Graph::Comb | Graph::Unbounded(_));
    Ok(match (left, right) {
        (Graph::Finite(a), Graph::Finite(b)) => Graph::Finite(cartesian_product(&a, &b)),
        (Graph::Finite(h), Graph::Rayed(g)) | (Graph::Rayed(g), Graph::Finite(h))
            if as_line(&g).is_some() =>
        {
            Graph::Tail(TailProduct::new(as_line(&g).unwrap_or(Base::OneWay), h))
        }
        (Graph::Finite(_), other) | (other, Graph::Finite(_)) if infinite_dim(&other) => {
            Graph::Unbounded("an infinite-dimensional factor makes the product infinite-dimensional".into())
        }
        (Graph::Finite(_), _) | (_, Graph::Finite(_)) => {
            return Err(Error::UnsupportedFamily(
                "only P_inf and P_2inf may be multiplied by a finite graph".into(),
            ))
        }
        _ => Graph::Unbounded("a product of two infinite graphs has infinite dimension".into()),
    })
}

fn split(spec: &str) -> impl Iterator<Item = &str> {
    spec.split(',').map(str::trim).filter(|t| !t.is_empty())
}

pub fn parse_set(graph: &Graph, spec: &str) -> Result<VertexSet, String> {
    let bad = |t: &str| format!("invalid vertex token {t:?}");
    Ok(match graph {
        Graph::Finite(g) => {
            let ids = split(spec)
                .map(|t| t.parse::<VertexId>().map_err(|_| bad(t)))
                .collect::<Result<Vec<_>, _>>()?;
            if let Some(&id) = ids.iter().find(|&&id| !g.contains(id)) {
                return Err(Error::InvalidVertexId { id, n: g.order() }.to_string());
            }
            VertexSet::Finite(ids)
        }
        Graph::Rayed(_) => VertexSet::Rayed(
            split(spec)
                .map(|t| t.parse().map_err(|e: Error| e.to_string()))
                .collect::<Result<_, _>>()?,
        ),
        Graph::Tail(_) => VertexSet::Tail(
            split(spec)
                .map(|t| t.parse().map_err(|e: Error| e.to_string()))
                .collect::<Result<_, _>>()?,
        ),
        Graph::Comb => VertexSet::Comb(
            split(spec)
                .map(|t| t.parse().map_err(|e: Error| e.to_string()))
                .collect::<Result<_, _>>()?,
        ),
        Graph::Unbounded(reason) => return Err(format!("no landmark sets here: {reason}")),
    })
}
