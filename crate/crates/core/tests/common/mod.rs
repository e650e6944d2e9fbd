#![allow(dead_code)]

use dimker::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_edges(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                out.push((u, v));
            }
        }
    }
    out
}

pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut r = rng(seed);
    Graph::new(n, random_edges(n, p, &mut r)).unwrap()
}

pub fn random_weighted(n: usize, p: f64, lo: i64, hi: i64, seed: u64) -> Graph {
    let mut r = rng(seed);
    let edges = random_edges(n, p, &mut r);
    Graph::weighted(n, edges.into_iter().map(|(u, v)| (u, v, r.gen_range(lo..=hi)))).unwrap()
}

pub fn random_colored(n: usize, p: f64, f: u32, seed: u64) -> Graph {
    let mut r = rng(seed);
    let edges = random_edges(n, p, &mut r);
    let mut colors: Vec<u32> = (0..n).map(|v| if (v as u32) < f { v as u32 + 1 } else { r.gen_range(1..=f) }).collect();
    // Fisher-Yates with the same stream.
    for i in (1..n).rev() {
        let j = r.gen_range(0..=i);
        colors.swap(i, j);
    }
    Graph::new(n, edges).unwrap().with_colors(colors).unwrap()
}

/// Union-find with path halving.
pub struct UnionFind(Vec<usize>);

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    pub fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }
    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// All-pairs hop distances by repeated relaxation over the edge list.
pub fn distances_from(g: &Graph, s: usize) -> Vec<usize> {
    let mut d = vec![usize::MAX; g.n()];
    d[s] = 0;
    let mut changed = true;
    while changed {
        changed = false;
        for &(u, v) in g.edges() {
            for (a, b) in [(u, v), (v, u)] {
                if d[a] != usize::MAX && d[a] + 1 < d[b] {
                    d[b] = d[a] + 1;
                    changed = true;
                }
            }
        }
    }
    d
}
