//! Recomputes the family tables and compares them with the published values.

use metricdim::resolver::{metric_dimension, psi};
use metricdim::tail::{Base, TailProduct};
use metricdim::{make_family, Family};
use serde_json::{json, Value};

use crate::Status;

/// `(β, ψ)` of a path, cycle or clique of order `n >= 3`.
fn finite_expected(kind: Family, n: usize) -> (usize, usize) {
    match kind {
        Family::Path => (1, 2),
        Family::Cycle => (2, 2 + usize::from(n.is_multiple_of(2))),
        Family::Complete => (n - 1, n - 1),
    }
}

fn product_expected(base: Base, kind: Family, n: usize) -> usize {
    let even = usize::from(n.is_multiple_of(2));
    match (base, kind) {
        (Base::OneWay, Family::Path) => 2,
        (Base::TwoWay, Family::Path) => 3,
        (Base::OneWay, Family::Cycle) => 2 + even,
        (Base::TwoWay, Family::Cycle) => 3 + even,
        (_, Family::Complete) => n - 1,
    }
}

pub(crate) fn run(max_n: usize) -> Result<(Status, Value), String> {
    let families = [Family::Path, Family::Cycle, Family::Complete];
    let mut rows = Vec::new();
    let mut mismatches = 0;

    for n in 3..=max_n {
        for kind in families {
            let g = make_family(kind, n).map_err(|e| e.to_string())?;
            let (beta, _) = metric_dimension(&g);
            let (p, _) = psi(&g).map_err(|e| e.to_string())?;
            let (eb, ep) = finite_expected(kind, n);
            let ok = beta == eb && p == ep;
            mismatches += usize::from(!ok);
            rows.push(json!({
                "table": "finite",
                "graph": kind.name(),
                "n": n,
                "beta": beta,
                "psi": p,
                "expected": [eb, ep],
                "match": ok,
            }));
        }
    }

    for base in [Base::OneWay, Base::TwoWay] {
        for kind in families {
            let first = match kind {
                Family::Path => 2,
                Family::Cycle => 3,
                Family::Complete => 4,
            };
            for n in first..=max_n {
                let h = make_family(kind, n).map_err(|e| e.to_string())?;
                let b = TailProduct::new(base, h)
                    .dimension_bounds()
                    .map_err(|e| e.to_string())?;
                let expected = product_expected(base, kind, n);
                let ok = b.exact() == Some(expected);
                mismatches += usize::from(!ok);
                rows.push(json!({
                    "table": "product",
                    "base": base.name(),
                    "graph": kind.name(),
                    "n": n,
                    "lower": b.lower,
                    "upper": b.upper,
                    "expected": expected,
                    "match": ok,
                }));
            }
        }
    }

    let status = if mismatches == 0 {
        Status::Ok
    } else {
        Status::Refuted
    };
    Ok((
        status,
        json!({ "max_n": max_n, "mismatches": mismatches, "rows": rows }),
    ))
}
