//! The running-time derived strict kernel and the loop that interleaves it
//! with a strong diminisher until the diminisher decides.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use crate::diminishers::{diminish, DiminishOutcome, DiminisherConfig};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{Instance, ParamKind, ProblemKind};
use crate::solvers;

/// A positive rational exponent slack, `num / den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Epsilon {
    num: u32,
    den: u32,
}

const EPS_LIMIT: u64 = 1000;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Epsilon {
    /// Returns `None` unless `num > 0`, `den > 0` and both reduced terms are
    /// at most 1000.
    pub fn new(num: u64, den: u64) -> Option<Self> {
        if num == 0 || den == 0 {
            return None;
        }
        let g = gcd(num, den);
        let (num, den) = (num / g, den / g);
        (num <= EPS_LIMIT && den <= EPS_LIMIT).then_some(Epsilon {
            num: num as u32,
            den: den as u32,
        })
    }

    pub fn integer(value: u32) -> Self {
        Self::new(value as u64, 1).expect("positive integer epsilon")
    }

    pub fn as_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Whether `k^(1 + eps) >= size`, compared exactly as
    /// `k^(num + den) >= size^den`.
    pub fn covers(self, k: usize, size: usize) -> bool {
        let lhs = BigUint::from(k).pow(self.num + self.den);
        let rhs = BigUint::from(size).pow(self.den);
        lhs >= rhs
    }
}

impl Default for Epsilon {
    fn default() -> Self {
        Epsilon::integer(2)
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Epsilon {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidEpsilon(s.to_string());
        let parsed = if let Some((a, b)) = s.split_once('/') {
            let a: u64 = a.trim().parse().map_err(|_| bad())?;
            let b: u64 = b.trim().parse().map_err(|_| bad())?;
            Epsilon::new(a, b)
        } else if let Some((int, frac)) = s.split_once('.') {
            if frac.len() > 3 || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let den = 10u64.pow(frac.len() as u32);
            let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
            let frac: u64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
            Epsilon::new(int * den + frac, den)
        } else {
            Epsilon::new(s.trim().parse().map_err(|_| bad())?, 1)
        };
        parsed.ok_or_else(bad)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelBranch {
    Unchanged,
    TrivialYes,
    TrivialNo,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelOutcome {
    pub instance: Instance,
    pub old_k: usize,
    pub new_k: usize,
    pub branch: KernelBranch,
}

/// Constant-size instance with the given answer. Every parameter of the
/// result is at most 3.
pub fn trivial_instance(problem: &ProblemKind, answer: bool, param: ParamKind) -> Instance {
    let graph = match (problem, answer) {
        (ProblemKind::Nwt, true) => {
            Graph::weighted(3, [(0, 1, -1), (1, 2, -1), (0, 2, -1)]).expect("K3")
        }
        (ProblemKind::Nwt, false) => Graph::empty(1),
        (ProblemKind::Tc, true) => Graph::empty(1).with_colors(vec![1]).expect("one color"),
        (ProblemKind::Tc, false) => Graph::empty(3)
            .with_colors(vec![1, 2, 3])
            .expect("three colors"),
        (ProblemKind::Hsi(h), true) => h.graph().clone(),
        (ProblemKind::Hsi(_), false) => Graph::empty(1),
    };
    Instance::new(graph, problem.clone(), param).expect("trivial instances are well-formed")
}

/// Keeps the instance when `k^(1+eps) >= n + m`, otherwise solves it with the
/// `O(k^2 n)` solver and replaces it by the trivial instance with the same
/// answer.
pub fn strict_kernel(inst: &Instance, eps: Epsilon) -> Result<KernelOutcome> {
    let k = inst.k();
    if eps.covers(k, inst.size()) {
        return Ok(KernelOutcome {
            instance: inst.clone(),
            old_k: k,
            new_k: k,
            branch: KernelBranch::Unchanged,
        });
    }
    let answer = solvers::solve(inst)?;
    let instance = trivial_instance(inst.problem(), answer, inst.param());
    let new_k = instance.k();
    // A trivial yes-instance is a minimal witness, and every parameter is
    // monotone under subgraphs, so it never exceeds k.
    debug_assert!(new_k <= k, "strict kernel raised k from {k} to {new_k}");
    Ok(KernelOutcome {
        instance,
        old_k: k,
        new_k,
        branch: if answer {
            KernelBranch::TrivialYes
        } else {
            KernelBranch::TrivialNo
        },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Action {
    Kernel,
    Diminish,
    Decide,
}

impl Action {
    pub fn name(self) -> &'static str {
        match self {
            Action::Kernel => "kernel",
            Action::Diminish => "diminish",
            Action::Decide => "decide",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Round {
    pub action: Action,
    pub k_before: usize,
    pub k_after: usize,
    /// Vertices, edges and components of the instance after the step.
    pub n: usize,
    pub m: usize,
    pub components: usize,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterleaveTrace {
    pub rounds: Vec<Round>,
    pub answer: bool,
}

impl InterleaveTrace {
    pub fn diminish_rounds(&self) -> usize {
        self.rounds
            .iter()
            .filter(|r| r.action == Action::Diminish)
            .count()
    }

    /// `round,action,k,n,m,components,ms`; `k` is the value after the step.
    /// Without timing the `ms` column is written as `0`.
    pub fn to_csv(&self, timing: bool) -> String {
        let mut out = String::from("round,action,k,n,m,components,ms\n");
        for (i, r) in self.rounds.iter().enumerate() {
            let ms = if timing { r.elapsed.as_secs_f64() * 1e3 } else { 0.0 };
            out.push_str(&format!(
                "{i},{},{},{},{},{},{ms:.3}\n",
                r.action.name(),
                r.k_after,
                r.n,
                r.m,
                r.components,
            ));
        }
        out
    }
}

fn round(action: Action, k_before: usize, inst: &Instance, started: Instant) -> Round {
    Round {
        action,
        k_before,
        k_after: inst.k(),
        n: inst.graph().n(),
        m: inst.graph().m(),
        components: inst.graph().components().len(),
        elapsed: started.elapsed(),
    }
}

/// Kernelizes once, then alternates diminisher and kernel until the
/// diminisher decides.
pub fn interleave_solve(
    inst: &Instance,
    eps: Epsilon,
    cfg: &DiminisherConfig,
) -> Result<(bool, InterleaveTrace)> {
    let mut rounds = Vec::new();
    let started = Instant::now();
    let mut current = strict_kernel(inst, eps)?.instance;
    rounds.push(round(Action::Kernel, inst.k(), &current, started));
    loop {
        let started = Instant::now();
        let k_before = current.k();
        match diminish(&current, cfg)? {
            DiminishOutcome::Decided(answer) => {
                rounds.push(round(Action::Decide, k_before, &current, started));
                return Ok((answer, InterleaveTrace { rounds, answer }));
            }
            DiminishOutcome::Reduced { instance, .. } => {
                rounds.push(round(Action::Diminish, k_before, &instance, started));
                let started = Instant::now();
                let k_before = instance.k();
                current = strict_kernel(&instance, eps)?.instance;
                rounds.push(round(Action::Kernel, k_before, &current, started));
            }
        }
    }
}
