//! Strict Turing kernel for pattern subgraph isomorphism parameterized by
//! maximum degree: one oracle query per vertex, on the subgraph induced by
//! its closed `floor(c/2)`-ball.

use std::collections::VecDeque;

use crate::graph::{Graph, ProvenanceMap};
use crate::instance::Pattern;
use crate::solvers::solve_hsi;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallSubinstance {
    pub center: usize,
    pub radius: usize,
    pub graph: Graph,
    pub provenance: ProvenanceMap,
}

/// Induced subgraph on all vertices within distance `r` of `v`.
pub fn ball(g: &Graph, v: usize, r: usize) -> BallSubinstance {
    let mut dist = vec![usize::MAX; g.n()];
    let mut members = vec![v];
    let mut queue = VecDeque::from([v]);
    dist[v] = 0;
    while let Some(x) = queue.pop_front() {
        if dist[x] == r {
            continue;
        }
        for w in g.neighbors(x) {
            if dist[w] == usize::MAX {
                dist[w] = dist[x] + 1;
                members.push(w);
                queue.push_back(w);
            }
        }
    }
    let (graph, provenance) = g.induced_subgraph(&members);
    BallSubinstance {
        center: v,
        radius: r,
        graph,
        provenance,
    }
}

/// The stated subinstance size bound `2Δ(Δ-1)^floor(c/2)`, replaced by 2
/// when `Δ <= 1`.
pub fn stated_ball_bound(max_degree: usize, pattern_order: usize) -> u128 {
    if max_degree <= 1 {
        return 2;
    }
    let d = max_degree as u128;
    (2 * d * (d - 1).pow((pattern_order / 2) as u32)).max(2)
}

/// Largest possible ball: `1 + Δ * sum_{i<r} (Δ-1)^i`.
pub fn moore_bound(max_degree: usize, radius: usize) -> u128 {
    let d = max_degree as u128;
    if d == 0 {
        return 1;
    }
    let layers: u128 = (0..radius as u32).map(|i| (d - 1).pow(i)).sum();
    1 + d * layers
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TuringTrace {
    /// Order of each queried ball, in query order.
    pub orders: Vec<usize>,
    pub yes_calls: usize,
}

impl TuringTrace {
    pub fn calls(&self) -> usize {
        self.orders.len()
    }

    pub fn max_order(&self) -> usize {
        self.orders.iter().copied().max().unwrap_or(0)
    }
}

/// Queries `oracle` on the ball around every vertex and answers yes iff some
/// query does. All `n` queries are made.
///
/// Panics if a ball is larger than the Moore bound for its radius.
pub fn turing_solve<F, E>(
    g: &Graph,
    h: &Pattern,
    mut oracle: F,
) -> Result<(bool, TuringTrace), E>
where
    F: FnMut(&BallSubinstance, &Pattern) -> Result<bool, E>,
{
    let radius = h.radius_bound();
    let limit = moore_bound(g.max_degree(), radius);
    let mut trace = TuringTrace::default();
    for v in 0..g.n() {
        let sub = ball(g, v, radius);
        assert!(
            sub.graph.n() as u128 <= limit,
            "ball of order {} exceeds {limit}",
            sub.graph.n()
        );
        trace.orders.push(sub.graph.n());
        if oracle(&sub, h)? {
            trace.yes_calls += 1;
        }
    }
    Ok((trace.yes_calls > 0, trace))
}

/// [`turing_solve`] with the brute-force subgraph solver as oracle.
pub fn turing_solve_default(g: &Graph, h: &Pattern) -> (bool, TuringTrace) {
    let res: Result<_, std::convert::Infallible> =
        turing_solve(g, h, |sub, h| Ok(solve_hsi(&sub.graph, h)));
    match res {
        Ok(out) => out,
        Err(never) => match never {},
    }
}
