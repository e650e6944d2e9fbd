//! Seeded randomized verification of every construction against the
//! brute-force oracles. Trials run in parallel; results are collected in
//! trial order so reports are reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::diminishers::{diminish, verify_diminisher, DiminisherConfig, EdgeBudget};
use crate::edge_coloring::greedy_edge_color;
use crate::generate::gnp_edges;
use crate::graph::Graph;
use crate::instance::{Instance, ParamKind, Pattern, ProblemKind};
use crate::kernelize::{interleave_solve, strict_kernel, Epsilon, KernelBranch};
use crate::oracle;
use crate::solvers::solve_hsi;
use crate::turing_kernel::{moore_bound, turing_solve_default};

/// Seed for trial `index` of a named check.
pub fn trial_seed(seed: u64, check: u64, index: u64) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(check.wrapping_mul(0xD1B5_4A32_D192_ED03))
        .wrapping_add(index)
}

/// Random NWT or TC instance with `3 <= n <= max_n` and a density spread
/// wide enough to hit both sides of every floor constant.
pub fn sample_instance(triangle_problem: &ProblemKind, param: ParamKind, max_n: usize, seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(3..=max_n.max(3));
    let p = rng.gen_range(0.02..0.9);
    let edges = gnp_edges(n, p, &mut rng);
    let graph = match triangle_problem {
        ProblemKind::Nwt => {
            let lo = rng.gen_range(-10..=0);
            Graph::weighted(
                n,
                edges.into_iter().map(|(u, v)| (u, v, rng.gen_range(lo..=10))),
            )
            .expect("valid weighted graph")
        }
        ProblemKind::Tc => {
            let f = rng.gen_range(3..=n.min(6) as u32);
            let mut colors: Vec<u32> = (1..=f).collect();
            colors.extend((f as usize..n).map(|_| rng.gen_range(1..=f)));
            use rand::seq::SliceRandom;
            colors.shuffle(&mut rng);
            Graph::new(n, edges)
                .expect("valid graph")
                .with_colors(colors)
                .expect("surjective")
        }
        ProblemKind::Hsi(_) => Graph::new(n, edges).expect("valid graph"),
    };
    Instance::new(graph, triangle_problem.clone(), param).expect("annotations match problem")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub trials: usize,
    pub violations: Vec<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {} ({} trials)\n", c.name, c.trials));
            for v in c.violations.iter().take(5) {
                out.push_str(&format!("    {v}\n"));
            }
        }
        out
    }
}

fn run_check<F>(name: String, trials: usize, f: F) -> Check
where
    F: Fn(usize) -> Vec<String> + Sync,
{
    let per_trial: Vec<Vec<String>> = (0..trials).into_par_iter().map(&f).collect();
    let violations = per_trial
        .into_iter()
        .enumerate()
        .flat_map(|(i, vs)| vs.into_iter().map(move |v| format!("trial {i}: {v}")))
        .collect();
    Check {
        name,
        trials,
        violations,
    }
}

pub fn check_diminisher(problem: &ProblemKind, param: ParamKind, seed: u64, trials: usize) -> Check {
    let tag = ParamKind::ALL.iter().position(|&p| p == param).unwrap() as u64
        + if *problem == ProblemKind::Tc { 10 } else { 0 };
    let cfg = DiminisherConfig::for_problem(problem, EdgeBudget::ExactEdges);
    run_check(
        format!("diminisher {} {}", problem.name(), param.name()),
        trials,
        |i| {
            let inst = sample_instance(problem, param, 60, trial_seed(seed, tag, i as u64));
            match diminish(&inst, &cfg) {
                Ok(out) => verify_diminisher(&inst, &out).violations,
                Err(e) => vec![e.to_string()],
            }
        },
    )
}

pub fn check_edge_coloring(b: usize, seed: u64, trials: usize) -> Check {
    run_check(format!("edge coloring b={b}"), trials, |i| {
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(seed, 100 + b as u64, i as u64));
        let n = rng.gen_range(2..=60);
        let p = rng.gen_range(0.02..0.95);
        let g = Graph::new(n, gnp_edges(n, p, &mut rng)).unwrap();
        let col = greedy_edge_color(&g, b);
        let mut v = Vec::new();
        if col.num_colors() > 2 * b - 1 {
            v.push(format!("{} colors > 2b-1", col.num_colors()));
        }
        let cap = g.max_degree().div_ceil(b);
        if col.max_load(&g) > cap {
            v.push(format!("load {} > {cap}", col.max_load(&g)));
        }
        let classes = col.classes();
        if classes.iter().map(Vec::len).sum::<usize>() != g.m() {
            v.push("color classes do not partition E".into());
        }
        v
    })
}

pub fn check_turing(h: &Pattern, name: &str, seed: u64, trials: usize) -> Check {
    run_check(format!("turing kernel H={name}"), trials, |i| {
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(seed, 200 + h.order() as u64, i as u64));
        let n = rng.gen_range(1..=30);
        let p = rng.gen_range(0.02..0.5);
        let g = Graph::new(n, gnp_edges(n, p, &mut rng)).unwrap();
        let (answer, trace) = turing_solve_default(&g, h);
        let mut v = Vec::new();
        let whole = solve_hsi(&g, h);
        if answer != whole {
            v.push(format!("turing {answer} vs whole graph {whole}"));
        }
        if trace.calls() != g.n() {
            v.push(format!("{} oracle calls for n = {}", trace.calls(), g.n()));
        }
        let limit = moore_bound(g.max_degree(), h.radius_bound());
        if trace.max_order() as u128 > limit {
            v.push(format!("ball of order {} > {limit}", trace.max_order()));
        }
        v
    })
}

pub fn check_strict_kernel(problem: &ProblemKind, seed: u64, trials: usize) -> Check {
    let eps = Epsilon::default();
    run_check(format!("strict kernel {}", problem.name()), trials, |i| {
        let param = ParamKind::ALL[i % 3];
        let inst = sample_instance(problem, param, 60, trial_seed(seed, 300, i as u64));
        let out = match strict_kernel(&inst, eps) {
            Ok(out) => out,
            Err(e) => return vec![e.to_string()],
        };
        let mut v = Vec::new();
        if out.new_k > out.old_k {
            v.push(format!("k grew {} -> {}", out.old_k, out.new_k));
        }
        match out.branch {
            KernelBranch::Unchanged => {
                if !eps.covers(inst.k(), inst.size()) {
                    v.push("unchanged instance larger than k^(1+eps)".into());
                }
            }
            KernelBranch::TrivialYes | KernelBranch::TrivialNo => {
                let expected = oracle::decide_small(&inst);
                if expected != (out.branch == KernelBranch::TrivialYes) {
                    v.push(format!("{:?} but oracle says {expected}", out.branch));
                }
                if oracle::decide_small(&out.instance) != expected {
                    v.push("trivial instance answers differently".into());
                }
                if out.instance.size() > 6 {
                    v.push("trivial instance too large".into());
                }
            }
        }
        v
    })
}

pub fn check_interleave(problem: &ProblemKind, seed: u64, trials: usize) -> Check {
    run_check(format!("interleave {}", problem.name()), trials, |i| {
        let param = ParamKind::ALL[i % 3];
        let inst = sample_instance(problem, param, 60, trial_seed(seed, 400, i as u64));
        let cfg = DiminisherConfig::for_problem(problem, EdgeBudget::ExactEdges);
        let (answer, trace) = match interleave_solve(&inst, Epsilon::default(), &cfg) {
            Ok(out) => out,
            Err(e) => return vec![e.to_string()],
        };
        let mut v = Vec::new();
        let expected = oracle::decide_small(&inst);
        if answer != expected {
            v.push(format!("answer {answer}, oracle {expected}"));
        }
        let bound = round_bound(inst.k());
        if trace.diminish_rounds() > bound {
            v.push(format!("{} diminish rounds > {bound}", trace.diminish_rounds()));
        }
        if trace.rounds.windows(2).any(|w| w[1].k_after > w[0].k_after) {
            v.push("k increased along the trace".into());
        }
        v
    })
}

/// `ceil(log2 k) + 1`.
pub fn round_bound(k: usize) -> usize {
    if k <= 1 {
        1
    } else {
        (usize::BITS - (k - 1).leading_zeros()) as usize + 1
    }
}

/// Runs every check with `trials` trials each.
pub fn run_suite(seed: u64, trials: usize) -> SuiteReport {
    let mut checks = Vec::new();
    for problem in [ProblemKind::Nwt, ProblemKind::Tc] {
        for param in ParamKind::ALL {
            checks.push(check_diminisher(&problem, param, seed, trials));
        }
    }
    for b in [2, 12, 36] {
        checks.push(check_edge_coloring(b, seed, trials));
    }
    let patterns = [
        (Pattern::triangle(), "K3"),
        (Pattern::path(4).unwrap(), "P4"),
        (Pattern::cycle(4).unwrap(), "C4"),
    ];
    for (h, name) in &patterns {
        checks.push(check_turing(h, name, seed, trials));
    }
    for problem in [ProblemKind::Nwt, ProblemKind::Tc] {
        checks.push(check_strict_kernel(&problem, seed, trials));
        checks.push(check_interleave(&problem, seed, trials));
    }
    SuiteReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_bound_values() {
        assert_eq!(round_bound(1), 1);
        assert_eq!(round_bound(2), 2);
        assert_eq!(round_bound(16), 5);
        assert_eq!(round_bound(17), 6);
        assert_eq!(round_bound(64), 7);
    }

    #[test]
    fn small_suite_passes() {
        let report = run_suite(5, 8);
        assert!(report.passed(), "{}", report.render());
        assert_eq!(report.checks.len(), 6 + 3 + 3 + 4);
    }
}
