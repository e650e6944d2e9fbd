mod common;

use std::collections::{BTreeSet, HashMap};

use common::*;
use dimker::oracle::degeneracy_by_peeling;
use dimker::{disjoint_union, Graph, ParamKind, ProvenanceMap};
use proptest::prelude::*;

#[test]
fn components_match_union_find() {
    for seed in 0..50 {
        let g = random_graph(40, 0.05, seed);
        let mut uf = UnionFind::new(g.n());
        for &(u, v) in g.edges() {
            uf.union(u, v);
        }
        let mut groups: HashMap<usize, BTreeSet<usize>> = HashMap::new();
        for v in 0..g.n() {
            groups.entry(uf.find(v)).or_default().insert(v);
        }
        let expected: BTreeSet<BTreeSet<usize>> = groups.into_values().collect();
        let got: BTreeSet<BTreeSet<usize>> =
            g.components().into_iter().map(|c| c.into_iter().collect()).collect();
        assert_eq!(got, expected, "seed {seed}");
        let ell = expected.iter().map(BTreeSet::len).max().unwrap();
        assert_eq!(g.component_order(), ell);
    }
}

#[test]
fn max_degree_matches_naive_count() {
    for seed in 0..50 {
        let g = random_graph(35, 0.2, seed);
        let mut count = vec![0; g.n()];
        for &(u, v) in g.edges() {
            count[u] += 1;
            count[v] += 1;
        }
        assert_eq!(g.max_degree(), count.into_iter().max().unwrap());
    }
}

#[test]
fn degeneracy_matches_peeling_oracle() {
    for seed in 0..60 {
        let g = random_graph(25, 0.3, seed);
        let ord = g.degeneracy_ordering();
        assert_eq!(ord.degeneracy, degeneracy_by_peeling(&g), "seed {seed}");
        for v in 0..g.n() {
            let later = g
                .neighbors(v)
                .filter(|&w| ord.position[w] > ord.position[v])
                .count();
            assert!(later <= ord.degeneracy);
            assert_eq!(ord.order[ord.position[v]], v);
        }
    }
}

#[test]
fn union_copies_weights_through_provenance() {
    for seed in 0..100 {
        let g = random_weighted(12, 0.4, -50, 50, seed);
        let parts: Vec<(Graph, ProvenanceMap)> = [vec![0, 2, 4, 6, 8, 10], (0..12).collect(), vec![1, 3, 5]]
            .iter()
            .map(|vs| g.induced_subgraph(vs))
            .collect();
        let (u, prov) = disjoint_union(&parts);
        assert_eq!(u.n(), 6 + 12 + 3);
        for (e, &(a, b)) in u.edges().iter().enumerate() {
            let orig = prov.edge_origin[e];
            let (x, y) = g.edge(orig);
            let (oa, ob) = (prov.vertex_origin[a], prov.vertex_origin[b]);
            assert_eq!((oa.min(ob), oa.max(ob)), (x, y));
            assert_eq!(u.weight(e), g.weight(orig));
        }
        // Each part is an exact induced copy: edge count equals the number of
        // original edges among its vertices.
        let mut offset = 0;
        for (part, _) in &parts {
            let vs: BTreeSet<usize> = (offset..offset + part.n()).map(|v| prov.vertex_origin[v]).collect();
            let inside = g.edges().iter().filter(|(a, b)| vs.contains(a) && vs.contains(b)).count();
            assert_eq!(part.m(), inside);
            offset += part.n();
        }
        assert_eq!(u.components().len(), parts.iter().map(|(p, _)| p.components().len()).sum::<usize>());
    }
}

proptest! {
    #[test]
    fn parameter_ordering(n in 0usize..30, p in 0.0f64..1.0, seed in any::<u64>()) {
        let g = random_graph(n, p, seed);
        let d = ParamKind::Degeneracy.value(&g);
        let delta = ParamKind::MaxDegree.value(&g);
        let ell = ParamKind::ComponentOrder.value(&g);
        prop_assert!(d <= delta && delta <= ell);
        prop_assert_eq!(ell == 0, n == 0);
    }

    #[test]
    fn edge_lookup_is_symmetric(n in 2usize..20, p in 0.0f64..1.0, seed in any::<u64>()) {
        let g = random_graph(n, p, seed);
        for (id, &(u, v)) in g.edges().iter().enumerate() {
            prop_assert_eq!(g.edge_id(u, v), Some(id));
            prop_assert_eq!(g.edge_id(v, u), Some(id));
        }
        let total: usize = (0..n).map(|v| g.degree(v)).sum();
        prop_assert_eq!(total, 2 * g.m());
    }
}
