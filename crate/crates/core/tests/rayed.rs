use metricdim::catalogue::random_connected_graph;
use metricdim::rayed::{comb_refute, make_comb, CombVertex, RayedGraph, RayedVertex};
use metricdim::resolver::is_resolving;
use metricdim::{Error, FiniteGraph, VertexId};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn rayed(seed: u64) -> RayedGraph {
    let mut rng = StdRng::seed_from_u64(seed);
    let n = rng.gen_range(1..=6);
    let core: FiniteGraph = random_connected_graph(n, 0.3, &mut rng);
    let rays = rng.gen_range(1..=4);
    let attachments: Vec<VertexId> = (0..rays).map(|_| rng.gen_range(0..n)).collect();
    RayedGraph::new(core, attachments).unwrap()
}

fn landmarks(g: &RayedGraph, seed: u64) -> Vec<RayedVertex> {
    let mut rng = StdRng::seed_from_u64(seed ^ 0x9e37);
    let k = rng.gen_range(1..=4);
    (0..k)
        .map(|_| {
            if rng.gen_bool(0.5) {
                RayedVertex::Core(rng.gen_range(0..g.core().order()))
            } else {
                g.ray_vertex(rng.gen_range(0..g.ray_count()), rng.gen_range(1..=4))
            }
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn closed_form_matches_bfs(seed in any::<u64>()) {
        let g = rayed(seed);
        let t = g.truncate(8);
        for a in 0..t.graph.order() {
            for b in 0..t.graph.order() {
                let (va, vb) = (t.vertex_of(a), t.vertex_of(b));
                prop_assert_eq!(g.distance(va, vb).unwrap(), u64::from(t.graph.dist(a, b)));
            }
        }
    }

    #[test]
    fn excess_sequence_stabilizes(seed in any::<u64>()) {
        let g = rayed(seed);
        for x in landmarks(&g, seed) {
            for ray in 0..g.ray_count() {
                let a = g.excess_sequence(ray, x, 30).unwrap();
                prop_assert!(a.iter().all(|&v| v >= 0));
                prop_assert!(a.windows(2).all(|w| w[1] <= w[0]));
                let i0 = g.stabilization_index(ray, &[x]).unwrap() as usize;
                prop_assert!(a[i0..].iter().all(|&v| v == a[i0]));
                prop_assert_eq!(i0 as u64, g.deepest_landmark_on(ray, &[x]));
            }
        }
    }

    #[test]
    fn certificate_agrees_with_truncations(seed in any::<u64>()) {
        let g = rayed(seed);
        let s = landmarks(&g, seed);
        let cert = g.certify_resolving(&s).unwrap();
        let depth = cert.window + 6;
        let t = g.truncate(depth);
        let ids: Vec<VertexId> = s.iter().map(|&v| t.id_of(v).unwrap()).collect();
        let finite = is_resolving(&t.graph, &ids).unwrap();
        match cert.verdict.witness() {
            None => prop_assert!(finite.is_pass()),
            Some(pair) => {
                let (a, b) = (t.id_of(pair.u).unwrap(), t.id_of(pair.v).unwrap());
                for &x in &ids {
                    prop_assert_eq!(t.graph.dist(a, x), t.graph.dist(b, x));
                }
            }
        }
        // a finite failure far from the window edge is an infinite failure too
        if let Some(pair) = finite.witness() {
            let near_edge = [pair.u, pair.v].iter().any(|&id| match t.vertex_of(id) {
                RayedVertex::Ray { depth: d, .. } => d + cert.window >= depth,
                RayedVertex::Core(_) => false,
            });
            if !near_edge {
                prop_assert!(!cert.verdict.is_pass());
            }
        }
    }

    #[test]
    fn comb_refuter_is_total(picks in prop::collection::vec((any::<bool>(), 0usize..30), 0..6)) {
        let s: Vec<CombVertex> = picks
            .into_iter()
            .map(|(spine, i)| if spine { CombVertex::Spine(i) } else { CombVertex::Tooth(i) })
            .collect();
        let pair = comb_refute(&s).unwrap();
        let len = pair.u.index().max(pair.v.index()).max(s.iter().map(|v| v.index()).max().unwrap_or(0)) + 2;
        let comb = make_comb(len);
        let (a, b) = (pair.u.id(len), pair.v.id(len));
        for x in &s {
            prop_assert_eq!(comb.dist(a, x.id(len)), comb.dist(b, x.id(len)));
        }
    }
}

#[test]
fn k_way_paths() {
    for k in 3..=7 {
        let g = RayedGraph::k_way_path(k);
        let basis: Vec<_> = (0..k - 1).map(|r| g.ray_vertex(r, 1)).collect();
        assert!(g.certify_resolving(&basis).unwrap().verdict.is_pass(), "k = {k}");
        let short = &basis[..k - 2];
        assert!(!g.certify_resolving(short).unwrap().verdict.is_pass(), "k = {k}");
        assert_eq!(g.lower_bound().unwrap().value, k - 1);
    }
    let one = RayedGraph::k_way_path(1);
    assert!(one
        .certify_resolving(&[RayedVertex::Core(0)])
        .unwrap()
        .verdict
        .is_pass());
    let two = RayedGraph::k_way_path(2);
    assert!(!two
        .certify_resolving(&[RayedVertex::Core(0)])
        .unwrap()
        .verdict
        .is_pass());
    assert!(two
        .certify_resolving(&[RayedVertex::Core(0), two.ray_vertex(0, 1)])
        .unwrap()
        .verdict
        .is_pass());
    assert_eq!(one.lower_bound().unwrap_err(), Error::TooFewRays(1));
}
