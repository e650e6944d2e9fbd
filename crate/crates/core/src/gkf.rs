//! GKF, a line-oriented text format for instances.
//!
//! ```text
//! # comment
//! problem nwt|tc|hsi
//! param component|maxdeg|degeneracy     (optional, default component)
//! nodes <n>
//! edge <u> <v> [w]                      (weight iff problem is nwt)
//! color <v> <c>                         (every vertex once iff problem is tc)
//! pattern <c>                           (hsi only; following edges belong to H)
//! edge <x> <y>
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. Writing emits the
//! directives in the order above with edges sorted, so output is canonical.

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, ProvenanceMap};
use crate::instance::{Instance, ParamKind, Pattern, ProblemKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Nwt,
    Tc,
    Hsi,
}

struct PatternSection {
    line: usize,
    order: usize,
    edges: Vec<(usize, usize)>,
    seen: HashSet<(usize, usize)>,
}

fn parse_num<T: std::str::FromStr>(tok: Option<&str>, what: &str, line: usize) -> Result<T, ParseError> {
    match tok {
        None => err(line, format!("missing {what}")),
        Some(t) => t
            .parse()
            .or_else(|_| err(line, format!("invalid {what} {t:?}"))),
    }
}

pub fn parse_gkf(text: &str) -> Result<Instance, ParseError> {
    let mut kind = None;
    let mut param = None;
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut weights = Vec::new();
    let mut seen = HashSet::new();
    let mut colors: Vec<Option<u32>> = Vec::new();
    let mut color_line = 0;
    let mut pattern: Option<PatternSection> = None;
    let mut last = 0;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last = line;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let mut toks = content.split_whitespace();
        let directive = toks.next().expect("non-empty line");
        match directive {
            "problem" => {
                if kind.is_some() {
                    return err(line, "duplicate problem directive");
                }
                kind = Some(match toks.next() {
                    Some("nwt") => Kind::Nwt,
                    Some("tc") => Kind::Tc,
                    Some("hsi") => Kind::Hsi,
                    Some(other) => return err(line, format!("unknown problem {other:?}")),
                    None => return err(line, "missing problem name"),
                });
            }
            "param" => {
                if param.is_some() {
                    return err(line, "duplicate param directive");
                }
                let name = toks.next().unwrap_or("");
                param = Some(name.parse::<ParamKind>().or_else(|e| err(line, e))?);
            }
            "nodes" => {
                if n.is_some() {
                    return err(line, "duplicate nodes directive");
                }
                let count: usize = parse_num(toks.next(), "node count", line)?;
                colors = vec![None; count];
                n = Some(count);
            }
            "edge" => {
                let u: usize = parse_num(toks.next(), "endpoint", line)?;
                let v: usize = parse_num(toks.next(), "endpoint", line)?;
                let w = toks.next();
                if let Some(p) = pattern.as_mut() {
                    if w.is_some() {
                        return err(line, "pattern edges take no weight");
                    }
                    check_edge(u, v, p.order, &mut p.seen, line)?;
                    p.edges.push((u, v));
                } else {
                    let Some(count) = n else {
                        return err(line, "edge before nodes directive");
                    };
                    let Some(k) = kind else {
                        return err(line, "edge before problem directive");
                    };
                    check_edge(u, v, count, &mut seen, line)?;
                    match (k, w) {
                        (Kind::Nwt, Some(t)) => {
                            let w: i64 = parse_num(Some(t), "weight", line)?;
                            if w.abs() >= crate::graph::WEIGHT_LIMIT {
                                return err(line, format!("weight {w} out of range"));
                            }
                            weights.push(w);
                        }
                        (Kind::Nwt, None) => return err(line, "nwt edges need a weight"),
                        (_, Some(_)) => return err(line, "only nwt edges carry weights"),
                        (_, None) => {}
                    }
                    edges.push((u, v));
                }
            }
            "color" => {
                if pattern.is_some() {
                    return err(line, "color inside pattern section");
                }
                let Some(count) = n else {
                    return err(line, "color before nodes directive");
                };
                if kind != Some(Kind::Tc) {
                    return err(line, "only tc instances carry colors");
                }
                let v: usize = parse_num(toks.next(), "vertex", line)?;
                let c: u32 = parse_num(toks.next(), "color", line)?;
                if v >= count {
                    return err(line, format!("vertex {v} out of range (n = {count})"));
                }
                if c == 0 {
                    return err(line, "colors are 1-based");
                }
                if colors[v].replace(c).is_some() {
                    return err(line, format!("vertex {v} colored twice"));
                }
                color_line = line;
            }
            "pattern" => {
                if kind != Some(Kind::Hsi) {
                    return err(line, "pattern section only allowed for hsi");
                }
                if pattern.is_some() {
                    return err(line, "duplicate pattern section");
                }
                let order: usize = parse_num(toks.next(), "pattern order", line)?;
                pattern = Some(PatternSection {
                    line,
                    order,
                    edges: Vec::new(),
                    seen: HashSet::new(),
                });
            }
            other => return err(line, format!("unknown directive {other:?}")),
        }
        if let Some(extra) = toks.next() {
            return err(line, format!("unexpected token {extra:?}"));
        }
    }

    let Some(kind) = kind else {
        return err(last.max(1), "missing problem directive");
    };
    let Some(n) = n else {
        return err(last.max(1), "missing nodes directive");
    };
    let param = param.unwrap_or(ParamKind::ComponentOrder);
    let end = last.max(1);
    let build = |r: crate::Result<Graph>, line: usize| r.or_else(|e| err(line, e.to_string()));

    let (graph, problem) = match kind {
        Kind::Nwt => {
            let g = build(
                Graph::weighted(n, edges.into_iter().zip(weights).map(|((u, v), w)| (u, v, w))),
                end,
            )?;
            (g, ProblemKind::Nwt)
        }
        Kind::Tc => {
            let g = build(Graph::new(n, edges), end)?;
            if let Some(v) = colors.iter().position(Option::is_none) {
                return err(end, format!("vertex {v} has no color"));
            }
            let cs = colors.into_iter().map(Option::unwrap).collect();
            (build(g.with_colors(cs), color_line.max(1))?, ProblemKind::Tc)
        }
        Kind::Hsi => {
            let g = build(Graph::new(n, edges), end)?;
            let Some(p) = pattern else {
                return err(end, "hsi instance without pattern section");
            };
            let h = build(Graph::new(p.order, p.edges), p.line)?;
            let h = Pattern::new(h).or_else(|e| err(p.line, e.to_string()))?;
            (g, ProblemKind::Hsi(h))
        }
    };
    Instance::new(graph, problem, param).or_else(|e| err(end, e.to_string()))
}

fn check_edge(
    u: usize,
    v: usize,
    n: usize,
    seen: &mut HashSet<(usize, usize)>,
    line: usize,
) -> Result<(), ParseError> {
    for x in [u, v] {
        if x >= n {
            return err(line, format!("vertex {x} out of range (n = {n})"));
        }
    }
    if u == v {
        return err(line, format!("self-loop at vertex {u}"));
    }
    if !seen.insert((u.min(v), u.max(v))) {
        return err(line, format!("duplicate edge {{{u}, {v}}}"));
    }
    Ok(())
}

pub fn write_gkf(inst: &Instance) -> String {
    let g = inst.graph();
    let mut out = String::new();
    let _ = writeln!(out, "problem {}", inst.problem().name());
    let _ = writeln!(out, "param {}", inst.param().name());
    let _ = writeln!(out, "nodes {}", g.n());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        match g.weight(e) {
            Some(w) => {
                let _ = writeln!(out, "edge {u} {v} {w}");
            }
            None => {
                let _ = writeln!(out, "edge {u} {v}");
            }
        }
    }
    if let Some(cs) = g.colors() {
        for (v, c) in cs.iter().enumerate() {
            let _ = writeln!(out, "color {v} {c}");
        }
    }
    if let ProblemKind::Hsi(h) = inst.problem() {
        let _ = writeln!(out, "pattern {}", h.order());
        for &(x, y) in h.graph().edges() {
            let _ = writeln!(out, "edge {x} {y}");
        }
    }
    out
}

/// Provenance sidecar: `v <new> <orig>` per vertex, then
/// `e <new-u> <new-v> <orig-u> <orig-v>` per edge.
pub fn write_provenance(derived: &Graph, original: &Graph, prov: &ProvenanceMap) -> String {
    let mut out = String::new();
    for (v, &o) in prov.vertex_origin.iter().enumerate() {
        let _ = writeln!(out, "v {v} {o}");
    }
    for (e, &(u, v)) in derived.edges().iter().enumerate() {
        let (ou, ov) = original.edge(prov.edge_origin[e]);
        let _ = writeln!(out, "e {u} {v} {ou} {ov}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const K3: &str = "# negative triangle\nproblem nwt\nnodes 3\nedge 0 1 -1\nedge 1 2 -1\nedge 0 2 -1\n";

    #[test]
    fn minimal_nwt_file() {
        let inst = parse_gkf(K3).unwrap();
        assert_eq!(inst.problem(), &ProblemKind::Nwt);
        assert_eq!(inst.param(), ParamKind::ComponentOrder);
        assert_eq!(inst.k(), 3);
        assert_eq!(inst.graph().weights().unwrap(), &[-1, -1, -1]);
    }

    #[test]
    fn duplicate_edge_names_the_line() {
        let text = "problem nwt\nnodes 3\nedge 0 1 1\nedge 1 0 2\n";
        let e = parse_gkf(text).unwrap_err();
        assert_eq!(e.line, 4);
        assert!(e.message.contains("duplicate edge"), "{e}");
    }

    #[test]
    fn malformed_inputs() {
        let cases = [
            ("problem nwt\nnodes 2\nedge 0 2 1\n", 3),
            ("problem nwt\nnodes 2\nedge 0 1\n", 3),
            ("problem tc\nnodes 2\nedge 0 1 5\n", 3),
            ("problem nwt\nnodes x\n", 2),
            ("problem foo\n", 1),
            ("problem nwt\nedge 0 1 1\n", 2),
            ("problem tc\nnodes 2\ncolor 0 1\ncolor 0 2\n", 4),
            ("problem tc\nnodes 2\ncolor 0 1\ncolor 1 3\n", 4),
            ("problem tc\nnodes 2\ncolor 0 1\n", 3),
            ("problem hsi\nnodes 2\nedge 0 1\n", 3),
            ("problem hsi\nnodes 2\npattern 3\nedge 0 1\n", 3),
            ("problem nwt\nnodes 2 3\n", 2),
            ("frobnicate\n", 1),
        ];
        for (text, line) in cases {
            let e = parse_gkf(text).unwrap_err();
            assert_eq!(e.line, line, "{text:?}: {e}");
        }
    }

    #[test]
    fn hsi_and_tc_round_trip() {
        let text = "problem hsi\nparam maxdeg\nnodes 4\nedge 0 1\nedge 1 2\nedge 2 3\npattern 3\nedge 0 1\nedge 1 2\n";
        let inst = parse_gkf(text).unwrap();
        assert_eq!(write_gkf(&inst), text);
        let text = "problem tc\nparam degeneracy\nnodes 3\nedge 0 1\ncolor 0 1\ncolor 1 2\ncolor 2 1\n";
        let inst = parse_gkf(text).unwrap();
        assert_eq!(write_gkf(&inst), text);
        assert_eq!(parse_gkf(&write_gkf(&inst)).unwrap(), inst);
    }

    #[test]
    fn provenance_sidecar() {
        let g = parse_gkf(K3).unwrap().graph().clone();
        let (h, prov) = g.induced_subgraph(&[1, 2]);
        assert_eq!(write_provenance(&h, &g, &prov), "v 0 1\nv 1 2\ne 0 1 1 2\n");
    }
}
