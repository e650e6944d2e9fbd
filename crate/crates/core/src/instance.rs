//! Problem instances: a graph tagged with the problem being asked and the
//! structural parameter it is measured by.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest pattern order the brute-force subgraph solver accepts.
pub const MAX_PATTERN_ORDER: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParamKind {
    /// Order of the largest connected component.
    ComponentOrder,
    MaxDegree,
    Degeneracy,
}

impl ParamKind {
    pub const ALL: [ParamKind; 3] = [
        ParamKind::ComponentOrder,
        ParamKind::MaxDegree,
        ParamKind::Degeneracy,
    ];

    pub fn value(self, g: &Graph) -> usize {
        match self {
            ParamKind::ComponentOrder => g.component_order(),
            ParamKind::MaxDegree => g.max_degree(),
            ParamKind::Degeneracy => g.degeneracy(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ParamKind::ComponentOrder => "component",
            ParamKind::MaxDegree => "maxdeg",
            ParamKind::Degeneracy => "degeneracy",
        }
    }
}

impl fmt::Display for ParamKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ParamKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "component" => Ok(ParamKind::ComponentOrder),
            "maxdeg" => Ok(ParamKind::MaxDegree),
            "degeneracy" => Ok(ParamKind::Degeneracy),
            other => Err(format!(
                "unknown parameter {other:?} (expected component, maxdeg or degeneracy)"
            )),
        }
    }
}

/// A connected pattern graph `H` with `2 <= c <= MAX_PATTERN_ORDER`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    graph: Graph,
}

impl Pattern {
    pub fn new(graph: Graph) -> Result<Self> {
        if graph.is_weighted() || graph.is_colored() {
            return Err(Error::AnnotatedPattern);
        }
        let c = graph.n();
        if c < 2 {
            return Err(Error::PatternTooSmall(c));
        }
        if c > MAX_PATTERN_ORDER {
            return Err(Error::PatternTooLarge(c));
        }
        if graph.components().len() != 1 {
            return Err(Error::DisconnectedPattern);
        }
        Ok(Pattern { graph })
    }

    pub fn complete(c: usize) -> Result<Self> {
        let edges = (0..c).flat_map(|u| (u + 1..c).map(move |v| (u, v)));
        Self::new(Graph::new(c, edges)?)
    }

    pub fn triangle() -> Self {
        Self::complete(3).expect("K3 is a valid pattern")
    }

    /// Path on `c` vertices.
    pub fn path(c: usize) -> Result<Self> {
        Self::new(Graph::new(c, (1..c).map(|v| (v - 1, v)))?)
    }

    pub fn cycle(c: usize) -> Result<Self> {
        let edges = (0..c).map(|v| (v, (v + 1) % c));
        Self::new(Graph::new(c, edges)?)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Number of vertices `c`.
    pub fn order(&self) -> usize {
        self.graph.n()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.m()
    }

    /// Every connected graph on `c` vertices has a vertex within this
    /// distance of all others.
    pub fn radius_bound(&self) -> usize {
        self.order() / 2
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProblemKind {
    /// Negative Weight Triangle.
    Nwt,
    /// Triangle Collection.
    Tc,
    /// Subgraph isomorphism for a fixed connected pattern.
    Hsi(Pattern),
}

impl ProblemKind {
    pub fn name(&self) -> &'static str {
        match self {
            ProblemKind::Nwt => "nwt",
            ProblemKind::Tc => "tc",
            ProblemKind::Hsi(_) => "hsi",
        }
    }

    /// Order of the pattern searched for; the triangle for NWT and TC.
    pub fn pattern_order(&self) -> usize {
        match self {
            ProblemKind::Hsi(h) => h.order(),
            _ => 3,
        }
    }

    pub fn pattern_edges(&self) -> usize {
        match self {
            ProblemKind::Hsi(h) => h.edge_count(),
            _ => 3,
        }
    }
}

/// A graph together with its problem and parameter. The parameter value `k`
/// is always computed from the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    graph: Graph,
    problem: ProblemKind,
    param: ParamKind,
    k: usize,
}

impl Instance {
    pub fn new(graph: Graph, problem: ProblemKind, param: ParamKind) -> Result<Self> {
        match problem {
            ProblemKind::Nwt => {
                if graph.m() > 0 && !graph.is_weighted() {
                    return Err(Error::MissingWeights);
                }
                if graph.is_colored() {
                    return Err(Error::UnexpectedColors);
                }
            }
            ProblemKind::Tc => {
                if graph.n() > 0 && !graph.is_colored() {
                    return Err(Error::MissingColors);
                }
                if graph.is_weighted() {
                    return Err(Error::UnexpectedWeights);
                }
            }
            ProblemKind::Hsi(_) => {
                if graph.is_weighted() {
                    return Err(Error::UnexpectedWeights);
                }
                if graph.is_colored() {
                    return Err(Error::UnexpectedColors);
                }
            }
        }
        let k = param.value(&graph);
        Ok(Instance {
            graph,
            problem,
            param,
            k,
        })
    }

    /// Same problem and parameter on another graph.
    pub fn with_graph(&self, graph: Graph) -> Result<Self> {
        Self::new(graph, self.problem.clone(), self.param)
    }

    /// Same graph measured by another parameter.
    pub fn with_param(&self, param: ParamKind) -> Self {
        Instance {
            k: param.value(&self.graph),
            param,
            ..self.clone()
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn problem(&self) -> &ProblemKind {
        &self.problem
    }

    pub fn param(&self) -> ParamKind {
        self.param
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `|x| = n + m`.
    pub fn size(&self) -> usize {
        self.graph.size()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_parameters() {
        let k3 = Pattern::triangle().graph().clone();
        assert_eq!(ParamKind::ComponentOrder.value(&k3), 3);
        assert_eq!(ParamKind::MaxDegree.value(&k3), 2);
        assert_eq!(ParamKind::Degeneracy.value(&k3), 2);
    }

    #[test]
    fn pattern_validation() {
        assert_eq!(Pattern::complete(1), Err(Error::PatternTooSmall(1)));
        assert_eq!(Pattern::complete(9), Err(Error::PatternTooLarge(9)));
        assert_eq!(
            Pattern::new(Graph::new(4, [(0, 1), (2, 3)]).unwrap()),
            Err(Error::DisconnectedPattern)
        );
        let c4 = Pattern::cycle(4).unwrap();
        assert_eq!((c4.order(), c4.edge_count(), c4.radius_bound()), (4, 4, 2));
    }

    #[test]
    fn annotations_must_match_problem() {
        let plain = Graph::new(2, [(0, 1)]).unwrap();
        let pc = ParamKind::ComponentOrder;
        assert_eq!(
            Instance::new(plain.clone(), ProblemKind::Nwt, pc),
            Err(Error::MissingWeights)
        );
        assert_eq!(
            Instance::new(plain.clone(), ProblemKind::Tc, pc),
            Err(Error::MissingColors)
        );
        let weighted = Graph::weighted(2, [(0, 1, 1)]).unwrap().with_colors(vec![1, 1]).unwrap();
        assert_eq!(
            Instance::new(weighted, ProblemKind::Tc, pc),
            Err(Error::UnexpectedWeights)
        );
        // Edgeless NWT instances need no weights.
        assert!(Instance::new(Graph::empty(3), ProblemKind::Nwt, pc).is_ok());
        assert!(Instance::new(plain, ProblemKind::Hsi(Pattern::triangle()), pc).is_ok());
    }

    #[test]
    fn k_is_recomputed() {
        let g = Graph::weighted(4, [(0, 1, 1), (1, 2, 1)]).unwrap();
        let inst = Instance::new(g, ProblemKind::Nwt, ParamKind::ComponentOrder).unwrap();
        assert_eq!(inst.k(), 3);
        assert_eq!(inst.with_param(ParamKind::MaxDegree).k(), 2);
    }
}
