//! Brute-force deciders used to cross-check the fast solvers and the
//! reductions. They share no code with `solvers`: triangles come from
//! plain triple loops or neighbor-pair scans against a hashed edge set, and
//! patterns from exhaustive injective maps.

use std::collections::{HashMap, HashSet};

use crate::graph::Graph;
use crate::instance::{Instance, Pattern, ProblemKind};

fn weight_table(g: &Graph) -> HashMap<(usize, usize), i64> {
    g.edges()
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, g.weights().map_or(0, |ws| ws[i])))
        .collect()
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// Every vertex triple `a < b < c`; suitable for small graphs only.
pub fn triangles_cubic(g: &Graph) -> Vec<[usize; 3]> {
    let n = g.n();
    let mut adj = vec![false; n * n];
    for &(u, v) in g.edges() {
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !adj[a * n + b] {
                continue;
            }
            for c in b + 1..n {
                if adj[a * n + c] && adj[b * n + c] {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Every triangle via pairs of neighbors of each vertex, keeping the one
/// where that vertex is the smallest.
pub fn triangles_by_wedges(g: &Graph) -> Vec<[usize; 3]> {
    let edges: HashSet<(usize, usize)> = g.edges().iter().copied().collect();
    let mut out = Vec::new();
    for a in 0..g.n() {
        let higher: Vec<usize> = g.neighbors(a).filter(|&w| w > a).collect();
        for (i, &b) in higher.iter().enumerate() {
            for &c in &higher[i + 1..] {
                if edges.contains(&key(b, c)) {
                    let mut t = [a, b, c];
                    t.sort_unstable();
                    out.push(t);
                }
            }
        }
    }
    out
}

fn nwt_from(g: &Graph, triangles: &[[usize; 3]]) -> bool {
    let w = weight_table(g);
    triangles
        .iter()
        .any(|&[a, b, c]| w[&key(a, b)] + w[&key(b, c)] + w[&key(a, c)] < 0)
}

fn tc_from(g: &Graph, triangles: &[[usize; 3]]) -> bool {
    let Some(cs) = g.colors() else { return true };
    let f = cs.iter().copied().max().unwrap_or(0);
    let covered: HashSet<[u32; 3]> = triangles
        .iter()
        .filter_map(|&[a, b, c]| {
            let mut t = [cs[a], cs[b], cs[c]];
            t.sort_unstable();
            (t[0] < t[1] && t[1] < t[2]).then_some(t)
        })
        .collect();
    (1..=f).all(|a| (a + 1..=f).all(|b| (b + 1..=f).all(|c| covered.contains(&[a, b, c]))))
}

pub fn nwt_cubic(g: &Graph) -> bool {
    nwt_from(g, &triangles_cubic(g))
}

pub fn nwt_wedges(g: &Graph) -> bool {
    nwt_from(g, &triangles_by_wedges(g))
}

pub fn tc_cubic(g: &Graph) -> bool {
    tc_from(g, &triangles_cubic(g))
}

pub fn tc_wedges(g: &Graph) -> bool {
    tc_from(g, &triangles_by_wedges(g))
}

/// Tries every injective map from the pattern into the graph.
pub fn hsi_injections(g: &Graph, h: &Pattern) -> bool {
    let c = h.order();
    if c > g.n() {
        return false;
    }
    let edges: HashSet<(usize, usize)> = g.edges().iter().copied().collect();
    let mut image = Vec::with_capacity(c);
    let mut used = vec![false; g.n()];
    fn go(
        g: &Graph,
        h: &Graph,
        edges: &HashSet<(usize, usize)>,
        image: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        if image.len() == h.n() {
            return h
                .edges()
                .iter()
                .all(|&(x, y)| edges.contains(&key(image[x], image[y])));
        }
        for v in 0..g.n() {
            if used[v] {
                continue;
            }
            used[v] = true;
            image.push(v);
            let hit = go(g, h, edges, image, used);
            image.pop();
            used[v] = false;
            if hit {
                return true;
            }
        }
        false
    }
    go(g, h.graph(), &edges, &mut image, &mut used)
}

/// Decides small instances exhaustively.
pub fn decide_small(inst: &Instance) -> bool {
    let g = inst.graph();
    match inst.problem() {
        ProblemKind::Nwt => nwt_cubic(g),
        ProblemKind::Tc => tc_cubic(g),
        ProblemKind::Hsi(h) => hsi_injections(g, h),
    }
}

/// Decides possibly large triangle instances with the wedge scan; pattern
/// instances are checked per component by exhaustive injection.
pub fn decide_large(inst: &Instance) -> bool {
    let g = inst.graph();
    match inst.problem() {
        ProblemKind::Nwt => nwt_wedges(g),
        ProblemKind::Tc => tc_wedges(g),
        ProblemKind::Hsi(h) => g
            .components()
            .iter()
            .filter(|c| c.len() >= h.order())
            .any(|c| hsi_injections(&g.induced_subgraph(c).0, h)),
    }
}

/// Peels a minimum-degree vertex (any) until empty and reports the largest
/// degree seen at removal.
pub fn degeneracy_by_peeling(g: &Graph) -> usize {
    let mut alive = vec![true; g.n()];
    let mut deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut best = 0;
    for _ in 0..g.n() {
        let v = (0..g.n()).filter(|&v| alive[v]).min_by_key(|&v| deg[v]).unwrap();
        best = best.max(deg[v]);
        alive[v] = false;
        for w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
            }
        }
    }
    best
}
