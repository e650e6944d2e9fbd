//! Undirected simple graphs with optional integer edge weights and vertex
//! colors, plus the structural parameters the diminishers work with.
//!
//! Vertices are dense ids `0..n`. Edges are stored once as `(u, v)` with
//! `u < v`, sorted lexicographically; an edge id is its index in that order.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// Edge weights must satisfy `|w| < 2^61` so that any three of them sum
/// without overflow.
pub const WEIGHT_LIMIT: i64 = 1 << 61;

const NONE: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// `adj[v]` holds `(neighbor, edge id)` sorted by neighbor.
    adj: Vec<Vec<(usize, usize)>>,
    weights: Option<Vec<i64>>,
    colors: Option<Vec<u32>>,
}

impl Graph {
    /// Unweighted, uncolored graph.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let edges: Vec<_> = edges.into_iter().collect();
        Self::build(n, edges, None)
    }

    pub fn weighted<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, i64)>,
    {
        let (edges, weights): (Vec<_>, Vec<_>) =
            edges.into_iter().map(|(u, v, w)| ((u, v), w)).unzip();
        Self::build(n, edges, Some(weights))
    }

    pub fn empty(n: usize) -> Self {
        Self::new(n, std::iter::empty()).expect("edgeless graph is valid")
    }

    /// Attaches a vertex coloring; it must use every color in `1..=f` where
    /// `f` is the largest color.
    pub fn with_colors(mut self, colors: Vec<u32>) -> Result<Self> {
        if colors.len() != self.n {
            return Err(Error::ColorCount {
                expected: self.n,
                got: colors.len(),
            });
        }
        check_surjective(&colors)?;
        self.colors = if self.n == 0 { None } else { Some(colors) };
        Ok(self)
    }

    /// Drops weights and colors.
    pub fn skeleton(&self) -> Graph {
        Graph {
            weights: None,
            colors: None,
            ..self.clone()
        }
    }

    fn build(n: usize, edges: Vec<(usize, usize)>, weights: Option<Vec<i64>>) -> Result<Self> {
        let mut keyed = Vec::with_capacity(edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            keyed.push(((u.min(v), u.max(v)), i));
        }
        if let Some(ws) = &weights {
            if let Some(&w) = ws.iter().find(|w| w.abs() >= WEIGHT_LIMIT) {
                return Err(Error::WeightOutOfRange(w));
            }
        }
        keyed.sort_unstable();
        for pair in keyed.windows(2) {
            if pair[0].0 == pair[1].0 {
                let (u, v) = pair[0].0;
                return Err(Error::DuplicateEdge(u, v));
            }
        }
        let sorted_edges: Vec<_> = keyed.iter().map(|&(e, _)| e).collect();
        let weights = weights.map(|ws| keyed.iter().map(|&(_, i)| ws[i]).collect());
        Ok(Self::from_sorted(n, sorted_edges, weights, None))
    }

    /// Caller guarantees edges are canonical, sorted and unique.
    fn from_sorted(
        n: usize,
        edges: Vec<(usize, usize)>,
        weights: Option<Vec<i64>>,
        colors: Option<Vec<u32>>,
    ) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&(u, v)| u < v && v < n));
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        // Edges are visited in lexicographic order, so adj[u] receives the
        // larger endpoints ascending; smaller endpoints are pushed earlier and
        // also ascend. Together each list is already sorted.
        debug_assert!(adj.iter().all(|a| a.windows(2).all(|w| w[0].0 < w[1].0)));
        let weights = if edges.is_empty() { None } else { weights };
        let colors = if n == 0 { None } else { colors };
        Graph {
            n,
            edges,
            adj,
            weights,
            colors,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Instance size `n + m`.
    pub fn size(&self) -> usize {
        self.n + self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn adjacency(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a]
            .binary_search_by_key(&b, |&(w, _)| w)
            .ok()
            .map(|i| self.adj[a][i].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    pub fn weights(&self) -> Option<&[i64]> {
        self.weights.as_deref()
    }

    pub fn weight(&self, edge: usize) -> Option<i64> {
        self.weights.as_ref().map(|ws| ws[edge])
    }

    pub fn is_colored(&self) -> bool {
        self.colors.is_some()
    }

    pub fn colors(&self) -> Option<&[u32]> {
        self.colors.as_deref()
    }

    pub fn color(&self, v: usize) -> Option<u32> {
        self.colors.as_ref().map(|cs| cs[v])
    }

    /// Number of colors `f`; zero for uncolored graphs.
    pub fn num_colors(&self) -> u32 {
        self.colors
            .as_ref()
            .and_then(|cs| cs.iter().copied().max())
            .unwrap_or(0)
    }

    /// Connected components, each sorted ascending, listed by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Order of the largest connected component, `0` for the empty graph.
    pub fn component_order(&self) -> usize {
        self.components().iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Minimum-degree peeling with a bucket queue. Ties go to the smallest
    /// vertex id.
    pub fn degeneracy_ordering(&self) -> DegeneracyOrdering {
        let n = self.n;
        let mut degree: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut buckets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.max_degree() + 1];
        for v in 0..n {
            buckets[degree[v]].insert(v);
        }
        let mut removed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut position = vec![0; n];
        let mut degeneracy = 0;
        let mut low = 0;
        for step in 0..n {
            while buckets[low].is_empty() {
                low += 1;
            }
            let v = buckets[low].pop_first().expect("bucket is non-empty");
            degeneracy = degeneracy.max(low);
            removed[v] = true;
            position[v] = step;
            order.push(v);
            for w in self.neighbors(v) {
                if removed[w] {
                    continue;
                }
                buckets[degree[w]].remove(&w);
                degree[w] -= 1;
                buckets[degree[w]].insert(w);
                low = low.min(degree[w]);
            }
        }
        DegeneracyOrdering {
            order,
            position,
            degeneracy,
        }
    }

    pub fn degeneracy(&self) -> usize {
        self.degeneracy_ordering().degeneracy
    }

    /// Induced subgraph on `vertices` (any order, no duplicates), with ids
    /// assigned in ascending original order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, ProvenanceMap) {
        let mut b = UnionBuilder::new(self);
        b.push_induced(vertices);
        b.finish()
    }
}

fn check_surjective(colors: &[u32]) -> Result<()> {
    if let Some(v) = colors.iter().position(|&c| c == 0) {
        return Err(Error::ZeroColor(v));
    }
    let f = colors.iter().copied().max().unwrap_or(0);
    let mut used = vec![false; f as usize + 1];
    for &c in colors {
        used[c as usize] = true;
    }
    match (1..=f).find(|&c| !used[c as usize]) {
        Some(missing) => Err(Error::NonSurjectiveColoring { f, missing }),
        None => Ok(()),
    }
}

/// A vertex ordering in which every vertex has at most `degeneracy`
/// neighbors placed after it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyOrdering {
    /// `order[i]` is the vertex at position `i`.
    pub order: Vec<usize>,
    /// Inverse of `order`.
    pub position: Vec<usize>,
    pub degeneracy: usize,
}

impl DegeneracyOrdering {
    /// Neighbors of `v` placed after it, as `(neighbor, edge id)` sorted by
    /// position.
    pub fn right_adjacency(&self, g: &Graph, v: usize) -> Vec<(usize, usize)> {
        let mut right: Vec<_> = g
            .adjacency(v)
            .iter()
            .copied()
            .filter(|&(w, _)| self.position[w] > self.position[v])
            .collect();
        right.sort_unstable_by_key(|&(w, _)| self.position[w]);
        right
    }
}

/// Maps every vertex and edge of a derived graph back to the graph it was
/// built from.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProvenanceMap {
    /// new vertex -> original vertex
    pub vertex_origin: Vec<usize>,
    /// new edge id -> original edge id
    pub edge_origin: Vec<usize>,
}

impl ProvenanceMap {
    pub fn identity(g: &Graph) -> Self {
        ProvenanceMap {
            vertex_origin: (0..g.n()).collect(),
            edge_origin: (0..g.m()).collect(),
        }
    }

    /// `self` maps new -> mid and `earlier` maps mid -> original; the result
    /// maps new -> original.
    pub fn compose(&self, earlier: &ProvenanceMap) -> ProvenanceMap {
        ProvenanceMap {
            vertex_origin: self
                .vertex_origin
                .iter()
                .map(|&v| earlier.vertex_origin[v])
                .collect(),
            edge_origin: self
                .edge_origin
                .iter()
                .map(|&e| earlier.edge_origin[e])
                .collect(),
        }
    }
}

/// Appends annotated copies of pieces of one source graph as disjoint parts
/// of a new graph. Weights and colors are copied from the source.
pub struct UnionBuilder<'a> {
    source: &'a Graph,
    n: usize,
    edges: Vec<(usize, usize)>,
    vertex_origin: Vec<usize>,
    edge_origin: Vec<usize>,
    local: Vec<usize>,
}

impl<'a> UnionBuilder<'a> {
    pub fn new(source: &'a Graph) -> Self {
        UnionBuilder {
            source,
            n: 0,
            edges: Vec::new(),
            vertex_origin: Vec::new(),
            edge_origin: Vec::new(),
            local: vec![NONE; source.n()],
        }
    }

    /// Number of vertices appended so far.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.n + self.edges.len()
    }

    /// Appends `G[vertices]`.
    pub fn push_induced(&mut self, vertices: &[usize]) {
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        let base = self.n;
        for (i, &v) in vs.iter().enumerate() {
            self.local[v] = base + i;
            self.vertex_origin.push(v);
        }
        for &u in &vs {
            for &(w, e) in self.source.adjacency(u) {
                if w > u && self.local[w] != NONE {
                    self.edges.push((self.local[u], self.local[w]));
                    self.edge_origin.push(e);
                }
            }
        }
        for &v in &vs {
            self.local[v] = NONE;
        }
        self.n += vs.len();
    }

    /// Appends the spanning subgraph `(V, edges)`.
    pub fn push_spanning(&mut self, edge_ids: &[usize]) {
        let mut ids = edge_ids.to_vec();
        ids.sort_unstable();
        let base = self.n;
        self.vertex_origin.extend(0..self.source.n());
        for e in ids {
            let (u, v) = self.source.edge(e);
            self.edges.push((base + u, base + v));
            self.edge_origin.push(e);
        }
        self.n += self.source.n();
    }

    pub fn finish(self) -> (Graph, ProvenanceMap) {
        let weights = self
            .source
            .weights()
            .map(|ws| self.edge_origin.iter().map(|&e| ws[e]).collect());
        let colors = self
            .source
            .colors()
            .map(|cs| self.vertex_origin.iter().map(|&v| cs[v]).collect());
        let g = Graph::from_sorted(self.n, self.edges, weights, colors);
        let prov = ProvenanceMap {
            vertex_origin: self.vertex_origin,
            edge_origin: self.edge_origin,
        };
        (g, prov)
    }
}

/// Disjoint union of graphs that each carry a provenance map into a common
/// original graph. Vertices are renumbered consecutively part by part.
pub fn disjoint_union(parts: &[(Graph, ProvenanceMap)]) -> (Graph, ProvenanceMap) {
    let mut n = 0;
    let mut edges = Vec::new();
    let mut prov = ProvenanceMap::default();
    let weighted = !parts.is_empty() && parts.iter().all(|(g, _)| g.is_weighted() || g.m() == 0);
    let colored = !parts.is_empty() && parts.iter().all(|(g, _)| g.is_colored() || g.n() == 0);
    let mut weights = Vec::new();
    let mut colors = Vec::new();
    for (g, p) in parts {
        for &(u, v) in g.edges() {
            edges.push((n + u, n + v));
        }
        prov.vertex_origin.extend(&p.vertex_origin);
        prov.edge_origin.extend(&p.edge_origin);
        if let Some(ws) = g.weights() {
            weights.extend_from_slice(ws);
        }
        if let Some(cs) = g.colors() {
            colors.extend_from_slice(cs);
        }
        n += g.n();
    }
    let g = Graph::from_sorted(
        n,
        edges,
        weighted.then_some(weights),
        colored.then_some(colors),
    );
    (g, prov)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn rejects_malformed_edges() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::weighted(2, [(0, 1, WEIGHT_LIMIT)]),
            Err(Error::WeightOutOfRange(WEIGHT_LIMIT))
        );
    }

    #[test]
    fn weights_follow_edge_sorting() {
        let g = Graph::weighted(3, [(2, 1, 5), (1, 0, -2), (0, 2, 7)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(g.weights().unwrap(), &[-2, 7, 5]);
        assert_eq!(g.edge_id(2, 0), Some(1));
        assert_eq!(g.edge_id(0, 0), None);
    }

    #[test]
    fn coloring_must_be_surjective() {
        let g = Graph::empty(3);
        assert!(g.clone().with_colors(vec![1, 2, 3]).is_ok());
        assert_eq!(
            g.clone().with_colors(vec![1, 3, 3]),
            Err(Error::NonSurjectiveColoring { f: 3, missing: 2 })
        );
        assert_eq!(g.clone().with_colors(vec![1, 0, 1]), Err(Error::ZeroColor(1)));
        assert_eq!(
            g.with_colors(vec![1]),
            Err(Error::ColorCount {
                expected: 3,
                got: 1
            })
        );
    }

    #[test]
    fn components_of_small_graphs() {
        assert!(Graph::empty(0).components().is_empty());
        let two = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(two.components(), vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert_eq!(two.component_order(), 3);
        assert_eq!(Graph::empty(4).component_order(), 1);
        assert_eq!(Graph::empty(0).component_order(), 0);
    }

    #[test]
    fn degrees() {
        assert_eq!(Graph::new(2, [(0, 1)]).unwrap().max_degree(), 1);
        let star = Graph::new(6, (1..6).map(|v| (0, v))).unwrap();
        assert_eq!(star.max_degree(), 5);
        assert_eq!(Graph::empty(3).max_degree(), 0);
    }

    #[test]
    fn degeneracy_of_small_graphs() {
        assert_eq!(triangle().degeneracy(), 2);
        let tree = Graph::new(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
        assert_eq!(tree.degeneracy(), 1);
        assert_eq!(Graph::empty(5).degeneracy(), 0);
        // Ties broken by smallest id: the path 0-1-2 peels 0 first.
        let path = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.degeneracy_ordering().order, vec![0, 1, 2]);
    }

    #[test]
    fn union_of_two_triangles() {
        let t = triangle();
        let id = ProvenanceMap::identity(&t);
        let (g, prov) = disjoint_union(&[(t.clone(), id.clone()), (t.clone(), id)]);
        assert_eq!(g.n(), 6);
        assert_eq!(g.m(), 6);
        assert_eq!(g.components().len(), 2);
        assert_eq!(prov.vertex_origin, vec![0, 1, 2, 0, 1, 2]);
    }

    #[test]
    fn union_of_one_part_is_a_copy() {
        let g = Graph::weighted(4, [(0, 1, 3), (1, 2, -4), (2, 3, 9)])
            .unwrap()
            .with_colors(vec![1, 2, 2, 1])
            .unwrap();
        let (u, prov) = disjoint_union(&[(g.clone(), ProvenanceMap::identity(&g))]);
        assert_eq!(u, g);
        assert_eq!(prov, ProvenanceMap::identity(&g));
    }

    #[test]
    fn induced_subgraph_keeps_annotations() {
        let g = Graph::weighted(4, [(0, 1, 3), (1, 2, -4), (2, 3, 9), (0, 3, 1)])
            .unwrap()
            .with_colors(vec![1, 2, 3, 1])
            .unwrap();
        let (h, prov) = g.induced_subgraph(&[3, 1, 2]);
        assert_eq!(h.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(h.weights().unwrap(), &[-4, 9]);
        assert_eq!(h.colors().unwrap(), &[2, 3, 1]);
        assert_eq!(prov.vertex_origin, vec![1, 2, 3]);
        assert_eq!(prov.edge_origin, vec![g.edge_id(1, 2).unwrap(), g.edge_id(2, 3).unwrap()]);
    }

    #[test]
    fn provenance_composes() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let (h, p1) = g.induced_subgraph(&[1, 2, 3]);
        let (k, p2) = h.induced_subgraph(&[1, 2]);
        let p = p2.compose(&p1);
        assert_eq!(k.m(), 1);
        assert_eq!(p.vertex_origin, vec![2, 3]);
        assert_eq!(g.edge(p.edge_origin[0]), (2, 3));
    }
}
