//! Seeded instance generators. All randomness comes from a ChaCha8 stream
//! seeded with the given value, so outputs are identical across runs and
//! platforms.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{Instance, ParamKind, Pattern, ProblemKind};
use crate::solvers::solve_nwt;

#[derive(Clone, Debug, PartialEq)]
pub enum Model {
    /// Erdős–Rényi `G(n, p)` as a subgraph-isomorphism instance.
    Gnp { n: usize, p: f64 },
    /// `G(n, p)` with weights drawn from `[wmin, wmax]`; with `plant` a
    /// triangle of weight -1 edges is added on three random vertices.
    PlantedNwt {
        n: usize,
        p: f64,
        plant: bool,
        wmin: i64,
        wmax: i64,
    },
    /// `G(n, p)` with a random surjective coloring onto `[f]`.
    RandomTc { n: usize, p: f64, f: u32 },
    /// `hubs` hubs, each joined to `degree - 1` private leaves, with the hubs
    /// on a cycle and a sparse random matching between leaves of
    /// neighboring hubs. Radius-2 balls are large.
    HardBall { hubs: usize, degree: usize },
    /// NWT instance whose parameter `param` equals exactly `k`, weights in
    /// `[0, wmax]` and, with `plant`, a triangle of weight -1 edges.
    PlantedParam {
        param: ParamKind,
        k: usize,
        plant: bool,
        wmax: i64,
    },
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_p(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidGenerator(format!("edge probability {p} not in [0, 1]")));
    }
    Ok(())
}

pub fn gnp_edges(n: usize, p: f64, rng: &mut impl Rng) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges
}

fn weigh(
    edges: Vec<(usize, usize)>,
    wmin: i64,
    wmax: i64,
    rng: &mut impl Rng,
) -> Vec<(usize, usize, i64)> {
    edges
        .into_iter()
        .map(|(u, v)| (u, v, rng.gen_range(wmin..=wmax)))
        .collect()
}

/// Sets the triangle `a, b, c` to weight -1 edges, adding missing edges.
fn plant_triangle(edges: &mut Vec<(usize, usize, i64)>, [a, b, c]: [usize; 3]) {
    for (x, y) in [(a, b), (b, c), (a, c)] {
        let key = (x.min(y), x.max(y));
        match edges.iter_mut().find(|e| (e.0, e.1) == key) {
            Some(e) => e.2 = -1,
            None => edges.push((key.0, key.1, -1)),
        }
    }
}

fn random_colors(n: usize, f: u32, rng: &mut impl Rng) -> Vec<u32> {
    let mut colors: Vec<u32> = (1..=f).collect();
    colors.extend((f as usize..n).map(|_| rng.gen_range(1..=f)));
    colors.shuffle(rng);
    colors
}

/// Generates the graph for `model`, deterministic in `seed`.
pub fn generate(model: &Model, seed: u64, param: ParamKind) -> Result<Instance> {
    let mut rng = rng(seed);
    match *model {
        Model::Gnp { n, p } => {
            check_p(p)?;
            let g = Graph::new(n, gnp_edges(n, p, &mut rng))?;
            Instance::new(g, ProblemKind::Hsi(Pattern::triangle()), param)
        }
        Model::PlantedNwt {
            n,
            p,
            plant,
            wmin,
            wmax,
        } => {
            check_p(p)?;
            if wmin > wmax {
                return Err(Error::InvalidGenerator(format!("empty weight range [{wmin}, {wmax}]")));
            }
            if plant && n < 3 {
                return Err(Error::InvalidGenerator("planting needs n >= 3".into()));
            }
            let mut edges = weigh(gnp_edges(n, p, &mut rng), wmin, wmax, &mut rng);
            if plant {
                let picks = rand::seq::index::sample(&mut rng, n, 3);
                plant_triangle(&mut edges, [picks.index(0), picks.index(1), picks.index(2)]);
            }
            let g = Graph::weighted(n, edges)?;
            if plant {
                assert!(solve_nwt(&g)?.is_some(), "planted instance must be a yes-instance");
            }
            Instance::new(g, ProblemKind::Nwt, param)
        }
        Model::RandomTc { n, p, f } => {
            check_p(p)?;
            if f as usize > n || (f == 0 && n > 0) {
                return Err(Error::InvalidGenerator(format!("need 1 <= f <= n, got f = {f}, n = {n}")));
            }
            let g = Graph::new(n, gnp_edges(n, p, &mut rng))?;
            let colors = random_colors(n, f, &mut rng);
            Instance::new(g.with_colors(colors)?, ProblemKind::Tc, param)
        }
        Model::HardBall { hubs, degree } => {
            if hubs < 3 || degree < 3 {
                return Err(Error::InvalidGenerator("hard-ball needs hubs >= 3 and degree >= 3".into()));
            }
            let leaves = degree - 2;
            let n = hubs * (1 + leaves);
            let leaf = |h: usize, i: usize| hubs + h * leaves + i;
            let mut edges = Vec::new();
            for h in 0..hubs {
                edges.push((h, (h + 1) % hubs));
                for i in 0..leaves {
                    edges.push((h, leaf(h, i)));
                }
            }
            for h in 0..hubs {
                let next = (h + 1) % hubs;
                for i in 0..leaves {
                    if rng.gen_bool(0.5) {
                        edges.push((leaf(h, i), leaf(next, i)));
                    }
                }
            }
            let g = Graph::new(n, edges)?;
            Instance::new(g, ProblemKind::Hsi(Pattern::cycle(4)?), param)
        }
        Model::PlantedParam {
            param: target,
            k,
            plant,
            wmax,
        } => planted_param(target, k, plant, wmax, &mut rng, param),
    }
}

fn planted_param(
    target: ParamKind,
    k: usize,
    plant: bool,
    wmax: i64,
    rng: &mut ChaCha8Rng,
    param: ParamKind,
) -> Result<Instance> {
    if k < 3 || wmax < 0 {
        return Err(Error::InvalidGenerator("planted parameter needs k >= 3 and wmax >= 0".into()));
    }
    let (n, mut edges) = match target {
        ParamKind::ComponentOrder => {
            // A random tree on k vertices plus chords, and a few small
            // extra components.
            let mut edges = Vec::new();
            for v in 1..k {
                edges.push((rng.gen_range(0..v), v));
            }
            let chord = (4.0 / k as f64).min(1.0);
            for u in 0..k {
                for v in u + 2..k {
                    if rng.gen_bool(chord) && !edges.contains(&(u, v)) {
                        edges.push((u, v));
                    }
                }
            }
            let mut n = k;
            for _ in 0..3 {
                let size = rng.gen_range(1..=(k / 4).max(1));
                for v in n + 1..n + size {
                    edges.push((rng.gen_range(n..v), v));
                }
                n += size;
            }
            (n, edges)
        }
        ParamKind::MaxDegree => {
            // Hub 0 with k leaves; leaves get sparse extra edges, which keeps
            // every leaf degree at most k.
            let mut edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
            let p = (3.0 / k as f64).min(1.0);
            edges.extend(gnp_edges(k, p, rng).into_iter().map(|(u, v)| (u + 1, v + 1)));
            (k + 1, edges)
        }
        ParamKind::Degeneracy => {
            let edges = (0..=k).flat_map(|u| (u + 1..=k).map(move |v| (u, v))).collect();
            (k + 1, edges)
        }
    };
    edges.sort_unstable();
    edges.dedup();
    let mut weighted = weigh(edges, 0, wmax, rng);
    if plant {
        // Vertices 0, 1, 2 lie in the large component, are hub-adjacent
        // leaves, or are clique members; closing them never moves k.
        plant_triangle(&mut weighted, [0, 1, 2]);
    }
    let g = Graph::weighted(n, weighted)?;
    let inst = Instance::new(g, ProblemKind::Nwt, param)?;
    debug_assert_eq!(target.value(inst.graph()), k);
    Ok(inst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gnp_with_zero_probability_is_edgeless() {
        let inst = generate(&Model::Gnp { n: 10, p: 0.0 }, 1, ParamKind::ComponentOrder).unwrap();
        assert_eq!(inst.graph().m(), 0);
        assert_eq!(inst.graph().n(), 10);
    }

    #[test]
    fn same_seed_same_instance() {
        let m = Model::RandomTc { n: 20, p: 0.3, f: 5 };
        let a = generate(&m, 9, ParamKind::Degeneracy).unwrap();
        let b = generate(&m, 9, ParamKind::Degeneracy).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.graph().num_colors(), 5);
    }

    #[test]
    fn planted_nwt_is_yes() {
        let m = Model::PlantedNwt {
            n: 50,
            p: 0.1,
            plant: true,
            wmin: 0,
            wmax: 10,
        };
        let inst = generate(&m, 7, ParamKind::ComponentOrder).unwrap();
        assert!(solve_nwt(inst.graph()).unwrap().is_some());
        let m = Model::PlantedNwt {
            n: 50,
            p: 0.1,
            plant: false,
            wmin: 0,
            wmax: 10,
        };
        let inst = generate(&m, 7, ParamKind::ComponentOrder).unwrap();
        assert!(solve_nwt(inst.graph()).unwrap().is_none());
    }

    #[test]
    fn planted_param_hits_target() {
        for target in ParamKind::ALL {
            for k in [16, 32] {
                let m = Model::PlantedParam {
                    param: target,
                    k,
                    plant: true,
                    wmax: 10,
                };
                let inst = generate(&m, 3, target).unwrap();
                assert_eq!(inst.k(), k, "{target}");
            }
        }
    }

    #[test]
    fn hard_ball_degree() {
        let inst = generate(&Model::HardBall { hubs: 5, degree: 6 }, 1, ParamKind::MaxDegree).unwrap();
        assert_eq!(inst.k(), 6);
    }

    #[test]
    fn invalid_parameters() {
        let bad = [
            Model::Gnp { n: 3, p: 1.5 },
            Model::RandomTc { n: 3, p: 0.5, f: 4 },
            Model::PlantedNwt {
                n: 2,
                p: 0.5,
                plant: true,
                wmin: 0,
                wmax: 1,
            },
            Model::HardBall { hubs: 2, degree: 5 },
        ];
        for m in bad {
            assert!(matches!(
                generate(&m, 0, ParamKind::ComponentOrder),
                Err(Error::InvalidGenerator(_))
            ));
        }
    }
}
