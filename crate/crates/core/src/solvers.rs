//! Exact deciders for Negative Weight Triangle, Triangle Collection and
//! pattern subgraph isomorphism.
//!
//! Triangles are listed through a degeneracy ordering: each triangle is found
//! once, from its earliest vertex, in `O(m * d)` total work.

use std::collections::HashSet;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{Instance, Pattern, ProblemKind};

const NONE: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleWitness {
    /// Ascending vertex ids.
    pub vertices: [usize; 3],
    /// Weight sum, for weighted graphs.
    pub weight: Option<i64>,
    /// Colors of `vertices`, for colored graphs.
    pub colors: Option<[u32; 3]>,
}

impl TriangleWitness {
    fn new(g: &Graph, mut vs: [usize; 3]) -> Self {
        vs.sort_unstable();
        let [a, b, c] = vs;
        let weight = g.weights().map(|_| {
            [(a, b), (a, c), (b, c)]
                .iter()
                .map(|&(x, y)| g.weight(g.edge_id(x, y).expect("triangle edge")).unwrap())
                .sum()
        });
        let colors = g.colors().map(|cs| [cs[a], cs[b], cs[c]]);
        TriangleWitness {
            vertices: vs,
            weight,
            colors,
        }
    }
}

/// Calls `visit(vertices, edge ids)` once per triangle until it breaks.
/// Edge ids are listed as `[ab, bc, ac]` for vertices `[a, b, c]`.
pub fn for_each_triangle<F>(g: &Graph, mut visit: F) -> ControlFlow<()>
where
    F: FnMut([usize; 3], [usize; 3]) -> ControlFlow<()>,
{
    let ord = g.degeneracy_ordering();
    let forward: Vec<Vec<(usize, usize)>> = (0..g.n())
        .map(|v| {
            g.adjacency(v)
                .iter()
                .copied()
                .filter(|&(w, _)| ord.position[w] > ord.position[v])
                .collect()
        })
        .collect();
    let mut mark = vec![NONE; g.n()];
    for v in 0..g.n() {
        for &(w, e) in &forward[v] {
            mark[w] = e;
        }
        let mut flow = ControlFlow::Continue(());
        'outer: for &(u, e_vu) in &forward[v] {
            for &(w, e_uw) in &forward[u] {
                if mark[w] != NONE {
                    flow = visit([v, u, w], [e_vu, e_uw, mark[w]]);
                    if flow.is_break() {
                        break 'outer;
                    }
                }
            }
        }
        for &(w, _) in &forward[v] {
            mark[w] = NONE;
        }
        flow?;
    }
    ControlFlow::Continue(())
}

pub fn count_triangles(g: &Graph) -> usize {
    let mut count = 0;
    let _ = for_each_triangle(g, |_, _| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}

/// Finds a triangle of negative total weight, if one exists.
pub fn solve_nwt(g: &Graph) -> Result<Option<TriangleWitness>> {
    if g.m() == 0 {
        return Ok(None);
    }
    let ws = g.weights().ok_or(Error::MissingWeights)?;
    let mut found = None;
    let _ = for_each_triangle(g, |vs, es| {
        if es.iter().map(|&e| ws[e]).sum::<i64>() < 0 {
            found = Some(vs);
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(found.map(|vs| TriangleWitness::new(g, vs)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TcAnswer {
    /// Every color triple is realized by some triangle.
    Covered,
    /// The lexicographically smallest triple no triangle realizes.
    Missing([u32; 3]),
}

impl TcAnswer {
    pub fn is_yes(self) -> bool {
        self == TcAnswer::Covered
    }
}

/// Sorted color triples realized by triangles with three distinct colors.
pub fn covered_triples(g: &Graph, into: &mut HashSet<[u32; 3]>) {
    let Some(cs) = g.colors() else { return };
    let _ = for_each_triangle(g, |[a, b, c], _| {
        let mut t = [cs[a], cs[b], cs[c]];
        t.sort_unstable();
        if t[0] != t[1] && t[1] != t[2] {
            into.insert(t);
        }
        ControlFlow::Continue(())
    });
}

fn binom3(f: u32) -> u128 {
    let f = f as u128;
    if f < 3 {
        0
    } else {
        f * (f - 1) * (f - 2) / 6
    }
}

/// Decides coverage of all triples over `[1, f]` given the covered set.
pub fn tc_answer(f: u32, covered: &HashSet<[u32; 3]>) -> TcAnswer {
    if covered.len() as u128 == binom3(f) {
        return TcAnswer::Covered;
    }
    // Some triple is missing; the lexicographic scan reaches it within
    // |covered| + 1 steps.
    for a in 1..=f {
        for b in a + 1..=f {
            for c in b + 1..=f {
                if !covered.contains(&[a, b, c]) {
                    return TcAnswer::Missing([a, b, c]);
                }
            }
        }
    }
    unreachable!("fewer covered triples than binom(f, 3) implies one is missing")
}

pub fn solve_tc(g: &Graph) -> Result<TcAnswer> {
    if g.n() > 0 && !g.is_colored() {
        return Err(Error::MissingColors);
    }
    let mut covered = HashSet::new();
    covered_triples(g, &mut covered);
    Ok(tc_answer(g.num_colors(), &covered))
}

/// Pattern vertices in BFS order from vertex 0, each paired with an earlier
/// neighbor (`NONE` for the root) and its earlier neighbors.
struct EmbeddingPlan {
    order: Vec<usize>,
    anchor: Vec<usize>,
    back: Vec<Vec<usize>>,
}

impl EmbeddingPlan {
    fn new(h: &Graph) -> Self {
        let c = h.n();
        let mut rank = vec![NONE; c];
        let mut order = vec![0];
        let mut anchor = vec![NONE];
        rank[0] = 0;
        let mut i = 0;
        while i < order.len() {
            let x = order[i];
            for y in h.neighbors(x) {
                if rank[y] == NONE {
                    rank[y] = order.len();
                    order.push(y);
                    anchor.push(i);
                }
            }
            i += 1;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &x)| h.neighbors(x).map(|y| rank[y]).filter(|&r| r < i).collect())
            .collect();
        EmbeddingPlan {
            order,
            anchor,
            back,
        }
    }
}

fn extend(g: &Graph, plan: &EmbeddingPlan, image: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let i = image.len();
    if i == plan.order.len() {
        return true;
    }
    let candidates: Vec<usize> = g.neighbors(image[plan.anchor[i]]).collect();
    for v in candidates {
        if used[v] || !plan.back[i].iter().all(|&j| g.has_edge(image[j], v)) {
            continue;
        }
        used[v] = true;
        image.push(v);
        if extend(g, plan, image, used) {
            return true;
        }
        image.pop();
        used[v] = false;
    }
    false
}

/// Whether `g` contains `h` as a (not necessarily induced) subgraph.
pub fn solve_hsi(g: &Graph, h: &Pattern) -> bool {
    let plan = EmbeddingPlan::new(h.graph());
    let mut used = vec![false; g.n()];
    let mut image = Vec::with_capacity(h.order());
    for comp in g.components() {
        if comp.len() < h.order() {
            continue;
        }
        for &root in &comp {
            used[root] = true;
            image.push(root);
            let hit = extend(g, &plan, &mut image, &mut used);
            image.clear();
            used[root] = false;
            if hit {
                return true;
            }
        }
    }
    false
}

/// Decides `inst` on the whole graph with the matching solver.
pub fn solve(inst: &Instance) -> Result<bool> {
    let g = inst.graph();
    Ok(match inst.problem() {
        ProblemKind::Nwt => solve_nwt(g)?.is_some(),
        ProblemKind::Tc => solve_tc(g)?.is_yes(),
        ProblemKind::Hsi(h) => solve_hsi(g, h),
    })
}

/// Decides `inst` one connected component at a time. For TC the triples
/// found in each component are pooled before checking coverage.
pub fn solve_per_component(inst: &Instance) -> Result<bool> {
    let g = inst.graph();
    let comps = g.components();
    match inst.problem() {
        ProblemKind::Nwt => {
            for comp in &comps {
                if comp.len() >= 3 && solve_nwt(&g.induced_subgraph(comp).0)?.is_some() {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        ProblemKind::Tc => {
            if g.n() > 0 && !g.is_colored() {
                return Err(Error::MissingColors);
            }
            let mut covered = HashSet::new();
            for comp in comps.iter().filter(|c| c.len() >= 3) {
                covered_triples(&g.induced_subgraph(comp).0, &mut covered);
            }
            Ok(tc_answer(g.num_colors(), &covered).is_yes())
        }
        ProblemKind::Hsi(h) => Ok(comps
            .iter()
            .filter(|c| c.len() >= h.order())
            .any(|c| solve_hsi(&g.induced_subgraph(c).0, h))),
    }
}
