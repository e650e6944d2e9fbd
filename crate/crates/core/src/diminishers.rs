//! Strong linear-time diminishers for the component order, maximum degree
//! and degeneracy parameters.
//!
//! Each either decides the instance (when the parameter is at most its floor
//! constant) or emits a disjoint union of annotated sub-copies whose
//! parameter is at most `max(k / 2, floor)`. Any copy of the pattern in the
//! input survives intact in at least one sub-copy, and every sub-copy is a
//! subgraph of the input, so the answer is preserved.

use itertools::Itertools;

use crate::edge_coloring::greedy_edge_color;
use crate::error::{Error, Result};
use crate::graph::{Graph, ProvenanceMap, UnionBuilder};
use crate::instance::{Instance, ParamKind, ProblemKind};
use crate::oracle;
use crate::solvers::solve_per_component;

/// Subset expansions above this many parts are refused.
pub const MAX_PARTS: u128 = 1 << 20;

/// How many edge classes each sub-copy combines.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EdgeBudget {
    /// `c^2` classes, floor `4c^2`.
    OrderSquared,
    /// `m_H` classes (3 for triangles), floor `4 m_H`.
    #[default]
    ExactEdges,
}

impl std::str::FromStr for EdgeBudget {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "squared" => Ok(EdgeBudget::OrderSquared),
            "exact" => Ok(EdgeBudget::ExactEdges),
            other => Err(format!("unknown edge budget {other:?} (expected squared or exact)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiminisherConfig {
    /// Pattern order `c`.
    pub pattern_order: usize,
    /// Pattern edge count `m_H`.
    pub pattern_edges: usize,
    pub budget: EdgeBudget,
}

impl DiminisherConfig {
    pub fn for_problem(problem: &ProblemKind, budget: EdgeBudget) -> Self {
        DiminisherConfig {
            pattern_order: problem.pattern_order(),
            pattern_edges: problem.pattern_edges(),
            budget,
        }
    }

    /// Edge classes combined per sub-copy.
    pub fn edge_budget(&self) -> usize {
        match self.budget {
            EdgeBudget::OrderSquared => self.pattern_order * self.pattern_order,
            EdgeBudget::ExactEdges => self.pattern_edges,
        }
    }

    pub fn component_floor(&self) -> usize {
        4 * self.pattern_order
    }

    pub fn degree_floor(&self) -> usize {
        4 * self.edge_budget()
    }

    /// Floor constant for the diminisher matching `param`.
    pub fn floor(&self, param: ParamKind) -> usize {
        match param {
            ParamKind::ComponentOrder => self.component_floor(),
            ParamKind::MaxDegree | ParamKind::Degeneracy => self.degree_floor(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiminishStats {
    pub old_k: usize,
    pub new_k: usize,
    pub floor: usize,
    /// Subset parts emitted (verbatim component copies not included).
    pub parts: usize,
    /// Upper bound on parts: `binom(4c, c)` per expanded component, or
    /// `binom(f, B)` for the edge-partition constructions.
    pub parts_bound: u128,
    /// Components expanded into subsets (component order only).
    pub expanded_components: usize,
    /// Edge classes used (`f`, after padding) for the edge-partition
    /// constructions.
    pub classes: usize,
    pub old_size: usize,
    pub new_size: usize,
}

impl DiminishStats {
    pub fn size_factor(&self) -> f64 {
        self.new_size as f64 / self.old_size.max(1) as f64
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiminishOutcome {
    Decided(bool),
    Reduced {
        instance: Instance,
        provenance: ProvenanceMap,
        stats: DiminishStats,
    },
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

fn require(inst: &Instance, param: ParamKind) -> Result<()> {
    if inst.param() != param {
        return Err(Error::WrongParameter {
            expected: param.name(),
            got: inst.param().name(),
        });
    }
    Ok(())
}

fn check_parts(parts: u128) -> Result<()> {
    if parts > MAX_PARTS {
        return Err(Error::BlowUpTooLarge {
            parts,
            limit: MAX_PARTS,
        });
    }
    Ok(())
}

fn reduced(
    inst: &Instance,
    builder: UnionBuilder<'_>,
    mut stats: DiminishStats,
) -> Result<DiminishOutcome> {
    let (graph, provenance) = builder.finish();
    let instance = inst.with_graph(graph)?;
    stats.new_k = instance.k();
    stats.new_size = instance.size();
    debug_assert!(stats.new_k < stats.old_k);
    Ok(DiminishOutcome::Reduced {
        instance,
        provenance,
        stats,
    })
}

fn base_stats(inst: &Instance, floor: usize) -> DiminishStats {
    DiminishStats {
        old_k: inst.k(),
        new_k: inst.k(),
        floor,
        parts: 0,
        parts_bound: 0,
        expanded_components: 0,
        classes: 0,
        old_size: inst.size(),
        new_size: inst.size(),
    }
}

/// Dispatches on the instance's parameter.
pub fn diminish(inst: &Instance, cfg: &DiminisherConfig) -> Result<DiminishOutcome> {
    match inst.param() {
        ParamKind::ComponentOrder => diminish_component_order(inst, cfg),
        ParamKind::MaxDegree => diminish_max_degree(inst, cfg),
        ParamKind::Degeneracy => diminish_degeneracy(inst, cfg),
    }
}

/// Splits every component of order above `ℓ/2` round-robin into `4c` vertex
/// parts and emits the induced subgraph on each union of `c` parts.
pub fn diminish_component_order(
    inst: &Instance,
    cfg: &DiminisherConfig,
) -> Result<DiminishOutcome> {
    require(inst, ParamKind::ComponentOrder)?;
    let g = inst.graph();
    let ell = inst.k();
    let floor = cfg.component_floor();
    if ell <= floor {
        return Ok(DiminishOutcome::Decided(solve_per_component(inst)?));
    }
    let c = cfg.pattern_order;
    let per_component = binomial(floor, c);
    check_parts(per_component)?;

    let mut stats = base_stats(inst, floor);
    let mut builder = UnionBuilder::new(g);
    for comp in g.components() {
        if 2 * comp.len() <= ell {
            builder.push_induced(&comp);
            continue;
        }
        // The q-th vertex (1-based, ascending id) goes to part q mod 4c.
        let mut parts = vec![Vec::new(); floor];
        for (i, &v) in comp.iter().enumerate() {
            parts[(i + 1) % floor].push(v);
        }
        for subset in (0..floor).combinations(c) {
            let vertices: Vec<usize> = subset.iter().flat_map(|&p| parts[p].iter().copied()).collect();
            builder.push_induced(&vertices);
            stats.parts += 1;
        }
        stats.expanded_components += 1;
    }
    stats.parts_bound = per_component * stats.expanded_components as u128;
    reduced(inst, builder, stats)
}

fn emit_class_subsets<'g>(
    g: &'g Graph,
    classes: &[Vec<usize>],
    budget: usize,
    stats: &mut DiminishStats,
) -> Result<UnionBuilder<'g>> {
    let bound = binomial(classes.len(), budget);
    check_parts(bound)?;
    stats.parts_bound = bound;
    stats.classes = classes.len();
    let mut builder = UnionBuilder::new(g);
    let mut edges = Vec::new();
    for subset in (0..classes.len()).combinations(budget) {
        edges.clear();
        for &p in &subset {
            edges.extend_from_slice(&classes[p]);
        }
        builder.push_spanning(&edges);
        stats.parts += 1;
    }
    Ok(builder)
}

/// Partitions the edges by a greedy coloring with load cap `ceil(Δ / 4B)` and
/// emits `(V, union of B classes)` for every choice of `B` classes.
pub fn diminish_max_degree(inst: &Instance, cfg: &DiminisherConfig) -> Result<DiminishOutcome> {
    require(inst, ParamKind::MaxDegree)?;
    let g = inst.graph();
    let floor = cfg.degree_floor();
    if inst.k() <= floor {
        return Ok(DiminishOutcome::Decided(solve_per_component(inst)?));
    }
    let coloring = greedy_edge_color(g, floor);
    let mut classes = coloring.classes();
    // Pad with empty classes so that at least 4B classes exist.
    if classes.len() < floor {
        classes.resize(floor, Vec::new());
    }
    let mut stats = base_stats(inst, floor);
    let builder = emit_class_subsets(g, &classes, cfg.edge_budget(), &mut stats)?;
    reduced(inst, builder, stats)
}

/// Splits each vertex's forward edges under a degeneracy ordering
/// round-robin into `4B` classes and emits `(V, union of B classes)` for
/// every choice of `B` classes.
pub fn diminish_degeneracy(inst: &Instance, cfg: &DiminisherConfig) -> Result<DiminishOutcome> {
    require(inst, ParamKind::Degeneracy)?;
    let g = inst.graph();
    let floor = cfg.degree_floor();
    if inst.k() <= floor {
        return Ok(DiminishOutcome::Decided(solve_per_component(inst)?));
    }
    let ord = g.degeneracy_ordering();
    let mut classes = vec![Vec::new(); floor];
    for v in 0..g.n() {
        for (i, (_, e)) in ord.right_adjacency(g, v).into_iter().enumerate() {
            classes[(i + 1) % floor].push(e);
        }
    }
    let mut stats = base_stats(inst, floor);
    let builder = emit_class_subsets(g, &classes, cfg.edge_budget(), &mut stats)?;
    reduced(inst, builder, stats)
}

/// Result of checking one diminisher application against the oracle and the
/// construction's bounds.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiminisherReport {
    pub violations: Vec<String>,
}

impl DiminisherReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks answer preservation against the brute-force oracle and, for
/// reduced outcomes, the halving bound, strictness, blow-up bound and copy
/// fidelity under the provenance map.
pub fn verify_diminisher(inst: &Instance, out: &DiminishOutcome) -> DiminisherReport {
    let mut v = Vec::new();
    let expected = oracle::decide_small(inst);
    match out {
        DiminishOutcome::Decided(answer) => {
            if *answer != expected {
                v.push(format!("decided {answer}, oracle says {expected}"));
            }
        }
        DiminishOutcome::Reduced {
            instance,
            provenance,
            stats,
        } => {
            let got = oracle::decide_large(instance);
            if got != expected {
                v.push(format!("reduced instance answers {got}, original {expected}"));
            }
            let (old, new) = (stats.old_k, stats.new_k);
            if instance.k() != new {
                v.push(format!("stats report k' = {new}, graph has {}", instance.k()));
            }
            if new >= old {
                v.push(format!("parameter did not shrink: {old} -> {new}"));
            }
            if 2 * new > old && new > stats.floor {
                v.push(format!(
                    "parameter {new} exceeds max({old}/2, {})",
                    stats.floor
                ));
            }
            if stats.parts as u128 > stats.parts_bound {
                v.push(format!(
                    "{} parts exceed bound {}",
                    stats.parts, stats.parts_bound
                ));
            }
            let limit = stats.parts_bound.max(1) * stats.old_size as u128;
            if stats.new_size as u128 > limit {
                v.push(format!("output size {} exceeds {limit}", stats.new_size));
            }
            v.extend(check_copies(inst.graph(), instance.graph(), provenance));
        }
    }
    DiminisherReport { violations: v }
}

/// Every output edge must map to an original edge between the originals of
/// its endpoints with the same weight, and every vertex keep its color.
pub fn check_copies(original: &Graph, derived: &Graph, prov: &ProvenanceMap) -> Vec<String> {
    let mut v = Vec::new();
    if prov.vertex_origin.len() != derived.n() || prov.edge_origin.len() != derived.m() {
        v.push("provenance map does not cover the derived graph".to_string());
        return v;
    }
    for (e, &(a, b)) in derived.edges().iter().enumerate() {
        let oe = prov.edge_origin[e];
        let (oa, ob) = (prov.vertex_origin[a], prov.vertex_origin[b]);
        let (x, y) = original.edge(oe);
        if (oa.min(ob), oa.max(ob)) != (x, y) {
            v.push(format!("edge {e} maps to {oe} with mismatched endpoints"));
        }
        if derived.weight(e) != original.weight(oe) {
            v.push(format!("edge {e} weight differs from original {oe}"));
        }
    }
    for (x, &o) in prov.vertex_origin.iter().enumerate() {
        if derived.color(x) != original.color(o) {
            v.push(format!("vertex {x} color differs from original {o}"));
        }
    }
    v.truncate(20);
    v
}
