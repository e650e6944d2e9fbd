//! Greedy improper edge coloring with bounded per-vertex load.
//!
//! With `b` colors of budget and cap `ceil(Δ / b)`, each endpoint of an edge
//! has at most `b - 1` saturated colors when the edge is processed, so the
//! first available color is always among the first `2b - 1`.

use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    /// 1-based color per edge id.
    colors: Vec<u32>,
    b: usize,
    num_colors: usize,
    cap: usize,
}

impl EdgeColoring {
    pub fn color(&self, edge: usize) -> u32 {
        self.colors[edge]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn b(&self) -> usize {
        self.b
    }

    /// Number of distinct colors used, `f`.
    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    /// Per-vertex per-color load bound `ceil(Δ / b)`.
    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Edge ids of each color class; index `i` holds color `i + 1`.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.num_colors];
        for (e, &c) in self.colors.iter().enumerate() {
            classes[c as usize - 1].push(e);
        }
        classes
    }

    /// Largest number of same-colored edges at any vertex.
    pub fn max_load(&self, g: &Graph) -> usize {
        let mut count = vec![0usize; self.num_colors.max(1)];
        let mut worst = 0;
        for v in 0..g.n() {
            for &(_, e) in g.adjacency(v) {
                let c = self.colors[e] as usize - 1;
                count[c] += 1;
                worst = worst.max(count[c]);
            }
            for &(_, e) in g.adjacency(v) {
                count[self.colors[e] as usize - 1] = 0;
            }
        }
        worst
    }
}

/// Colors edges in id order (lexicographic by endpoints), giving each the
/// smallest color still below the cap at both endpoints.
///
/// Panics if `b == 0`.
pub fn greedy_edge_color(g: &Graph, b: usize) -> EdgeColoring {
    assert!(b >= 1, "load parameter b must be positive");
    let delta = g.max_degree();
    let cap = delta.div_ceil(b);
    let palette = 2 * b - 1;
    let mut load = vec![0usize; g.n() * palette];
    let mut colors = Vec::with_capacity(g.m());
    let mut num_colors = 0;
    for &(u, v) in g.edges() {
        let c = (0..palette)
            .find(|&c| load[u * palette + c] < cap && load[v * palette + c] < cap)
            .expect("greedy coloring never needs more than 2b - 1 colors");
        load[u * palette + c] += 1;
        load[v * palette + c] += 1;
        num_colors = num_colors.max(c + 1);
        colors.push(c as u32 + 1);
    }
    EdgeColoring {
        colors,
        b,
        num_colors,
        cap,
    }
}
