mod common;

use std::collections::HashSet;

use common::*;
use dimker::diminishers::binomial;
use dimker::solvers::covered_triples;
use dimker::suite::sample_instance;
use dimker::{
    diminish, verify_diminisher, DiminishOutcome, DiminisherConfig, EdgeBudget, Graph, Instance,
    ParamKind, Pattern, ProblemKind,
};
use proptest::prelude::*;

fn covered(g: &Graph) -> HashSet<[u32; 3]> {
    let mut set = HashSet::new();
    covered_triples(g, &mut set);
    set
}

#[test]
fn every_diminisher_preserves_answers() {
    for problem in [ProblemKind::Nwt, ProblemKind::Tc] {
        let cfg = DiminisherConfig::for_problem(&problem, EdgeBudget::ExactEdges);
        for param in ParamKind::ALL {
            for seed in 0..60 {
                let inst = sample_instance(&problem, param, 45, 7_000 + seed);
                let out = diminish(&inst, &cfg).unwrap();
                let report = verify_diminisher(&inst, &out);
                assert!(report.is_ok(), "{} {param} seed {seed}: {:?}", problem.name(), report.violations);
            }
        }
    }
}

#[test]
fn tc_reduction_keeps_exact_coverage() {
    // Stronger than answer preservation: the set of rainbow color triples is
    // identical before and after.
    let cfg = DiminisherConfig::for_problem(&ProblemKind::Tc, EdgeBudget::ExactEdges);
    let mut reduced = 0;
    for seed in 0..90 {
        let param = ParamKind::ALL[seed as usize % 3];
        let g = random_colored(40, 0.4, 6, seed);
        let inst = Instance::new(g.clone(), ProblemKind::Tc, param).unwrap();
        if let DiminishOutcome::Reduced { instance, .. } = diminish(&inst, &cfg).unwrap() {
            reduced += 1;
            assert_eq!(covered(instance.graph()), covered(&g), "seed {seed} {param}");
        }
    }
    assert!(reduced > 30);
}

#[test]
fn hsi_patterns_survive_every_diminisher() {
    let p4 = ProblemKind::Hsi(Pattern::path(4).unwrap());
    let cfg = DiminisherConfig::for_problem(&p4, EdgeBudget::ExactEdges);
    for seed in 0..30 {
        for param in ParamKind::ALL {
            let g = random_graph(50, 0.35, seed);
            let inst = Instance::new(g, p4.clone(), param).unwrap();
            let out = diminish(&inst, &cfg).unwrap();
            let report = verify_diminisher(&inst, &out);
            assert!(report.is_ok(), "seed {seed} {param}: {:?}", report.violations);
        }
    }
}

#[test]
fn component_blow_up_is_binomial() {
    let cfg = DiminisherConfig::for_problem(&ProblemKind::Nwt, EdgeBudget::ExactEdges);
    for ell in [13, 20, 33, 48] {
        // Path of order ell plus one small tail component.
        let mut edges: Vec<_> = (1..ell).map(|v| (v - 1, v, 1)).collect();
        edges.push((ell, ell + 1, 1));
        let g = Graph::weighted(ell + 2, edges).unwrap();
        let inst = Instance::new(g, ProblemKind::Nwt, ParamKind::ComponentOrder).unwrap();
        let DiminishOutcome::Reduced { instance, stats, .. } = diminish(&inst, &cfg).unwrap() else {
            panic!("order {ell} should reduce");
        };
        assert_eq!(stats.expanded_components, 1);
        assert_eq!(stats.parts as u128, binomial(12, 3));
        // Three of the twelve round-robin parts, each of size ceil or floor of ell/12.
        assert!(instance.k() <= 3 * ell.div_ceil(12));
        assert!(2 * instance.k() <= ell);
        // 220 subset parts plus the verbatim tail component.
        assert!(instance.graph().components().len() >= 221);
    }
}

#[test]
fn degree_classes_stay_within_palette() {
    let cfg = DiminisherConfig::for_problem(&ProblemKind::Nwt, EdgeBudget::ExactEdges);
    for seed in 0..40 {
        let g = random_weighted(60, 0.5, -3, 20, seed);
        let inst = Instance::new(g, ProblemKind::Nwt, ParamKind::MaxDegree).unwrap();
        if let DiminishOutcome::Reduced { stats, .. } = diminish(&inst, &cfg).unwrap() {
            assert!((12..=23).contains(&stats.classes), "{} classes", stats.classes);
            assert_eq!(stats.parts as u128, binomial(stats.classes, 3));
        }
        let inst = inst.with_param(ParamKind::Degeneracy);
        if let DiminishOutcome::Reduced { stats, .. } = diminish(&inst, &cfg).unwrap() {
            assert_eq!(stats.classes, 12);
            assert_eq!(stats.parts, 220);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reduced_k_is_at_most_half(n in 20usize..70, p in 0.1f64..0.9, seed in any::<u64>(), which in 0usize..3) {
        let param = ParamKind::ALL[which];
        let g = random_weighted(n, p, -5, 30, seed);
        let inst = Instance::new(g, ProblemKind::Nwt, param).unwrap();
        let cfg = DiminisherConfig::for_problem(&ProblemKind::Nwt, EdgeBudget::ExactEdges);
        match diminish(&inst, &cfg).unwrap() {
            DiminishOutcome::Decided(_) => prop_assert!(inst.k() <= cfg.floor(param)),
            DiminishOutcome::Reduced { instance, .. } => {
                prop_assert!(instance.k() < inst.k());
                prop_assert!(2 * instance.k() <= inst.k() || instance.k() <= cfg.floor(param));
            }
        }
    }
}
