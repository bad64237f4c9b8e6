use polyvis_core::graph::{edges_cross, rotate_to_order, CyclicGraph, Edge, Graph, OrderedGraph};
use polyvis_core::ordered::{
    bipartite_split, exists_crossing_sequence, find_complete_bipartite, find_ordered_pattern, h0, h1, is_double_cherry,
    max_pairwise_crossing, CrossingRule, KttSearch, Side,
};
use polyvis_core::Budget;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if bits[k] {
                        g.add_edge(a, b).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

/// Largest clique of the edge crossing graph, by plain recursion.
fn brute_max_crossing(g: &Graph) -> usize {
    fn grow(edges: &[Edge], chosen: &mut Vec<Edge>, start: usize, best: &mut usize) {
        *best = (*best).max(chosen.len());
        for i in start..edges.len() {
            if chosen.iter().all(|&f| edges_cross(f, edges[i])) {
                chosen.push(edges[i]);
                grow(edges, chosen, i + 1, best);
                chosen.pop();
            }
        }
    }
    let edges = g.edge_list();
    let mut best = 0;
    grow(&edges, &mut Vec::new(), 0, &mut best);
    best
}

fn choose(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = choose(n - 1, k);
    for mut s in choose(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

fn brute_has_ktt(g: &Graph, t: usize) -> bool {
    choose(g.n(), t).iter().any(|a| {
        let common = (0..g.n()).filter(|&v| !a.contains(&v) && a.iter().all(|&x| g.has_edge(x, v))).count();
        common >= t
    })
}

fn brute_has_pattern(g: &OrderedGraph, p: &OrderedGraph) -> bool {
    choose(g.n(), p.n()).iter().any(|img| p.edges().all(|e| g.has_edge(img[e.lo], img[e.hi])))
}

/// Double cherry straight from the definition on positions `0..n` of `G_u`.
fn brute_cyclic_cherry(g: &CyclicGraph, u: usize, v: usize) -> bool {
    if g.has_edge(u, v) {
        return true;
    }
    let n = g.n();
    let r = rotate_to_order(g, u).unwrap();
    let pv = (v + n - u) % n;
    let nu: Vec<usize> = r.neighbors(0).collect();
    let nv: Vec<usize> = r.neighbors(pv).collect();
    // u < u2 < v1 < v < v2 < u1 in G_u
    nv.iter().any(|&u2| {
        u2 < pv
            && nu.iter().any(|&v1| u2 < v1 && v1 < pv)
            && nu.iter().any(|&v2| v2 > pv && nv.iter().any(|&u1| u1 > v2))
    })
}

proptest! {
    #[test]
    fn max_crossing_matches_clique_oracle(g in graph(9)) {
        let fam = max_pairwise_crossing(&g);
        prop_assert_eq!(fam.size, brute_max_crossing(&g));
        prop_assert_eq!(fam.edges.len(), fam.size);
        for (i, &e) in fam.edges.iter().enumerate() {
            prop_assert!(g.has_edge(e.lo, e.hi));
            for &f in &fam.edges[i + 1..] {
                prop_assert!(edges_cross(e, f));
            }
        }
    }

    #[test]
    fn max_crossing_is_rotation_invariant(g in graph(9), shift in 0usize..9) {
        let c = CyclicGraph::new(g.clone());
        let r = rotate_to_order(&c, shift % g.n()).unwrap();
        prop_assert_eq!(max_pairwise_crossing(&g).size, max_pairwise_crossing(&r).size);
    }

    #[test]
    fn split_keeps_a_quarter(g in graph(12)) {
        let og = OrderedGraph::new(g.clone());
        let s = bipartite_split(&og);
        prop_assert!(s.is_valid_for(&g));
        prop_assert!(4 * s.kept.len() >= g.edge_count());
        let kept = s.kept_graph();
        for v in 0..g.n() {
            match s.sides[v] {
                Side::Left => prop_assert!(kept.neighbors(v).all(|w| w > v)),
                Side::Right => prop_assert!(kept.neighbors(v).all(|w| w < v)),
            }
        }
    }

    #[test]
    fn ktt_search_matches_brute_force(g in graph(8), t in 1usize..=3) {
        let res = find_complete_bipartite(&g, t, &mut Budget::default()).unwrap();
        prop_assert_eq!(res.is_free(), !brute_has_ktt(&g, t));
        if let KttSearch::Found(w) = res {
            prop_assert_eq!(w.a.len(), t);
            prop_assert_eq!(w.b.len(), t);
            prop_assert!(w.verify(&g));
        }
    }

    #[test]
    fn ordered_patterns_match_brute_force(g in graph(8)) {
        let og = OrderedGraph::new(g);
        for p in [h0(), h1()] {
            let img = find_ordered_pattern(&og, &p);
            prop_assert_eq!(img.is_some(), brute_has_pattern(&og, &p));
            if let Some(img) = img {
                prop_assert!(img.windows(2).all(|w| w[0] < w[1]));
                prop_assert!(p.edges().all(|e| og.has_edge(img[e.lo], img[e.hi])));
            }
        }
    }

    #[test]
    fn cyclic_double_cherry_matches_definition(g in graph(9)) {
        let n = g.n();
        let c = CyclicGraph::new(g);
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    prop_assert_eq!(is_double_cherry(&c, u, v).unwrap(), brute_cyclic_cherry(&c, u, v));
                }
            }
        }
    }

    #[test]
    fn crossing_sequence_from_an_edge(g in graph(9)) {
        // A single edge is a crossing sequence between its endpoints.
        let og = OrderedGraph::new(g);
        for e in og.edges() {
            prop_assert!(exists_crossing_sequence(&og, e.lo, e.hi, CrossingRule::Forward).unwrap());
        }
    }

    #[test]
    fn double_cherries_give_forward_sequences(g in graph(9)) {
        let n = g.n();
        let c = CyclicGraph::new(g);
        for u in 0..n {
            for v in 0..n {
                if u == v || c.has_edge(u, v) {
                    continue;
                }
                let fwd = exists_crossing_sequence(&c, u, v, CrossingRule::Forward).unwrap();
                prop_assert!(!fwd || exists_crossing_sequence(&c, u, v, CrossingRule::AnyCrossing).unwrap());
                if is_double_cherry(&c, u, v).unwrap() {
                    prop_assert!(fwd);
                    prop_assert!(exists_crossing_sequence(&c, v, u, CrossingRule::Forward).unwrap());
                }
            }
        }
    }
}
