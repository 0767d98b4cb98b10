//! Simple undirected graphs on vertices `1..=n` and the combinatorics used
//! throughout the crate: components, cut vertices, cliques, free vertices,
//! cones and gluing.
//!
//! Vertex sets are stored as 64-bit masks, so graphs are limited to 64
//! vertices. Every construction that renames vertices returns its label map.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A vertex label, 1-based.
pub type Vertex = usize;

/// Largest vertex count representable by [`VertexSet`].
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} is out of range 1..={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} is not a free vertex of the clique complex of the {side} graph")]
    NotFree { vertex: Vertex, side: &'static str },
    #[error("graph is not connected")]
    NotConnected,
    #[error("invalid gluing decomposition: {0}")]
    InvalidDecomposition(String),
}

/// A subset of `1..=64`, stored as a bit mask (bit `v-1` is vertex `v`).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{1, …, n}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(1u64 << (v - 1))
    }

    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(it: I) -> Self {
        it.into_iter().fold(VertexSet(0), |s, v| s.with(v))
    }

    pub fn contains(self, v: Vertex) -> bool {
        (1..=64).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    pub fn with(self, v: Vertex) -> Self {
        VertexSet(self.0 | (1u64 << (v - 1)))
    }

    pub fn without(self, v: Vertex) -> Self {
        VertexSet(self.0 & !(1u64 << (v - 1)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member.
    pub fn min(self) -> Option<Vertex> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max(self) -> Option<Vertex> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = Vertex> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<Vertex> {
        self.iter().collect()
    }

    /// Ordering used for deterministic reports: by size, then by the sorted
    /// member list.
    pub fn cmp_size_lex(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.to_vec().cmp(&other.to_vec()))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<Vertex>::deserialize(d)?;
        if let Some(bad) = v.iter().find(|&&x| x == 0 || x > MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {bad} out of range")));
        }
        Ok(VertexSet::from_vertices(v))
    }
}

/// Simple undirected graph on `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (k, (i, j)) in self.edges().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{i}-{j}")?;
        }
        write!(f, "])")
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges (in either
    /// orientation) and out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::empty(n)?;
        for (i, j) in edges {
            for v in [i, j] {
                if v == 0 || v > n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if i == j {
                return Err(GraphError::SelfLoop(i));
            }
            if g.has_edge(i, j) {
                return Err(GraphError::DuplicateEdge(i.min(j), i.max(j)));
            }
            g.add_edge_unchecked(i, j);
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::empty(); n],
        })
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let full = VertexSet::full(n);
        Graph {
            n,
            adj: (1..=n).map(|v| full.without(v)).collect(),
        }
    }

    /// The path `1 - 2 - … - n`.
    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i, i + 1))).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        Graph::new(n, (1..n).map(|i| (i, i + 1)).chain([(1, n)])).expect("cycle is simple")
    }

    /// The star `K_{1,k}` with center 1 and leaves `2..=k+1`.
    pub fn star(k: usize) -> Self {
        Graph::new(k + 1, (2..=k + 1).map(|j| (1, j))).expect("star is simple")
    }

    pub(crate) fn add_edge_unchecked(&mut self, i: Vertex, j: Vertex) {
        self.adj[i - 1] = self.adj[i - 1].with(j);
        self.adj[j - 1] = self.adj[j - 1].with(i);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (1..=self.n).flat_map(move |i| {
            self.adj[i - 1]
                .iter()
                .filter(move |&j| j > i)
                .map(move |j| (i, j))
        })
    }

    pub fn has_edge(&self, i: Vertex, j: Vertex) -> bool {
        i >= 1 && i <= self.n && self.adj[i - 1].contains(j)
    }

    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        self.adj[v - 1]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v - 1].len()
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.adj[v - 1]))
    }

    pub fn is_complete(&self) -> bool {
        self.is_clique(self.vertices())
    }

    /// Connected components of the subgraph induced on `within`, in
    /// ascending order of their smallest vertex. Labels are not changed.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(start) = rest.min() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::empty();
                for v in frontier.iter() {
                    next = next.union(self.adj[v - 1]);
                }
                frontier = next.intersection(within).difference(comp);
                comp = comp.union(frontier);
            }
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Number of components of the subgraph induced on `within`.
    pub fn component_count_within(&self, within: VertexSet) -> usize {
        self.components_within(within).len()
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    /// True iff deleting `v` strictly increases the number of components.
    pub fn is_cut_vertex(&self, v: Vertex) -> bool {
        self.is_cut_vertex_within(self.vertices(), v)
    }

    /// Cut-vertex test inside the subgraph induced on `within` (which must
    /// contain `v`).
    pub fn is_cut_vertex_within(&self, within: VertexSet, v: Vertex) -> bool {
        debug_assert!(within.contains(v));
        // Only v's own component can split.
        let nbrs = self.adj[v - 1].intersection(within);
        if nbrs.len() < 2 {
            return false;
        }
        let rest = within.without(v);
        let first = nbrs.min().expect("nonempty");
        let comp = self
            .components_within(rest)
            .into_iter()
            .find(|c| c.contains(first))
            .expect("first neighbor lies in some component");
        !nbrs.is_subset(comp)
    }

    /// Induced subgraph on `s`, relabeled to `1..=|s|` in increasing order.
    /// The returned vector maps each new label `k` (at index `k-1`) to its
    /// original label.
    pub fn induced_subgraph(&self, s: VertexSet) -> (Graph, Vec<Vertex>) {
        let labels = s.to_vec();
        let mut pos = vec![0usize; self.n + 1];
        for (k, &v) in labels.iter().enumerate() {
            pos[v] = k + 1;
        }
        let mut g = Graph::empty(labels.len()).expect("subset of a valid graph");
        for (i, j) in self.edges() {
            if s.contains(i) && s.contains(j) {
                g.add_edge_unchecked(pos[i], pos[j]);
            }
        }
        (g, labels)
    }

    /// `G \ {v}`, relabeled as in [`Graph::induced_subgraph`].
    pub fn remove_vertex(&self, v: Vertex) -> (Graph, Vec<Vertex>) {
        self.induced_subgraph(self.vertices().without(v))
    }

    /// Applies a relabeling `perm[old-1] = new`; `perm` must be a permutation
    /// of `1..=n`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n).expect("same size");
        for (i, j) in self.edges() {
            g.add_edge_unchecked(perm[i - 1], perm[j - 1]);
        }
        g
    }

    /// Maximal cliques, each as a vertex set, sorted lexicographically by
    /// their ascending member lists.
    pub fn maximal_cliques(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        // Degeneracy ordering for the outer loop keeps the candidate sets small.
        let order = self.degeneracy_order();
        let mut earlier = VertexSet::empty();
        for v in order {
            let nbrs = self.adj[v - 1];
            self.bron_kerbosch(
                VertexSet::singleton(v),
                nbrs.difference(earlier),
                nbrs.intersection(earlier),
                &mut out,
            );
            earlier = earlier.with(v);
        }
        out.sort_by_key(|c| c.to_vec());
        out
    }

    fn bron_kerbosch(
        &self,
        r: VertexSet,
        p: VertexSet,
        x: VertexSet,
        out: &mut Vec<VertexSet>,
    ) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        let pivot = p
            .union(x)
            .iter()
            .max_by_key(|&u| self.adj[u - 1].intersection(p).len())
            .expect("p nonempty");
        let mut p = p;
        let mut x = x;
        for v in p.difference(self.adj[pivot - 1]).iter() {
            let nbrs = self.adj[v - 1];
            self.bron_kerbosch(r.with(v), p.intersection(nbrs), x.intersection(nbrs), out);
            p = p.without(v);
            x = x.with(v);
        }
    }

    fn degeneracy_order(&self) -> Vec<Vertex> {
        let mut remaining = self.vertices();
        let mut order = Vec::with_capacity(self.n);
        while !remaining.is_empty() {
            let v = remaining
                .iter()
                .min_by_key(|&u| self.adj[u - 1].intersection(remaining).len())
                .expect("nonempty");
            order.push(v);
            remaining = remaining.without(v);
        }
        order
    }

    pub fn clique_complex(&self) -> CliqueComplex {
        let facets = self.maximal_cliques();
        let mut seen_once = VertexSet::empty();
        let mut seen_more = VertexSet::empty();
        for f in &facets {
            seen_more = seen_more.union(seen_once.intersection(*f));
            seen_once = seen_once.union(*f);
        }
        CliqueComplex {
            free_vertices: seen_once.difference(seen_more),
            facets,
        }
    }

    pub fn is_free_vertex(&self, v: Vertex) -> bool {
        // v is free iff its closed neighborhood is a clique.
        self.is_clique(self.adj[v - 1].with(v))
    }

    pub fn free_vertices(&self) -> VertexSet {
        (1..=self.n).filter(|&v| self.is_free_vertex(v)).collect()
    }

    /// Connected with exactly `n - 1` edges. The empty graph is not a tree.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.edge_count() == self.n - 1
    }

    /// Chordality via maximum cardinality search.
    pub fn is_chordal(&self) -> bool {
        let mut numbered = VertexSet::empty();
        let mut order = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            let v = self
                .vertices()
                .difference(numbered)
                .iter()
                .max_by_key(|&u| (self.adj[u - 1].intersection(numbered).len(), std::cmp::Reverse(u)))
                .expect("unnumbered vertex remains");
            order.push(v);
            numbered = numbered.with(v);
        }
        // In a chordal graph, the earlier neighbors of each vertex form a clique.
        let mut before = VertexSet::empty();
        for v in order {
            if !self.is_clique(self.adj[v - 1].intersection(before)) {
                return false;
            }
            before = before.with(v);
        }
        true
    }
}

/// The clique complex of a graph: its facets are the maximal cliques.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueComplex {
    pub facets: Vec<VertexSet>,
    pub free_vertices: VertexSet,
}

impl CliqueComplex {
    /// The unique facet containing a free vertex.
    pub fn facet_of_free(&self, v: Vertex) -> Option<VertexSet> {
        if !self.free_vertices.contains(v) {
            return None;
        }
        self.facets.iter().copied().find(|f| f.contains(v))
    }
}

/// Result of [`cone`]: the apex is always the last vertex.
#[derive(Debug, Clone)]
pub struct Cone {
    pub graph: Graph,
    pub apex: Vertex,
}

/// Adds a new vertex `n+1` adjacent to every vertex of `h`.
pub fn cone(h: &Graph) -> Cone {
    let apex = h.n() + 1;
    let mut g = Graph::empty(apex).expect("cone within vertex cap");
    for (i, j) in h.edges() {
        g.add_edge_unchecked(i, j);
    }
    for u in 1..apex {
        g.add_edge_unchecked(u, apex);
    }
    Cone { graph: g, apex }
}

/// Disjoint union; vertices of `g2` are shifted by `g1.n()`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let off = g1.n();
    let mut g = Graph::empty(off + g2.n()).expect("union within vertex cap");
    for (i, j) in g1.edges() {
        g.add_edge_unchecked(i, j);
    }
    for (i, j) in g2.edges() {
        g.add_edge_unchecked(i + off, j + off);
    }
    g
}

/// Result of [`glue`] with old-to-new label maps for both sides.
#[derive(Debug, Clone)]
pub struct Glued {
    pub graph: Graph,
    /// `left[v-1]` is the new label of vertex `v` of the first graph.
    pub left: Vec<Vertex>,
    /// `right[v-1]` is the new label of vertex `v` of the second graph.
    pub right: Vec<Vertex>,
    /// Label of the identified vertex in the glued graph.
    pub shared: Vertex,
}

impl Glued {
    pub fn left_set(&self) -> VertexSet {
        self.left.iter().copied().collect()
    }

    pub fn right_set(&self) -> VertexSet {
        self.right.iter().copied().collect()
    }
}

/// Identifies `v1 ∈ g1` with `v2 ∈ g2`. Both must be free vertices of their
/// clique complexes. Vertices of `g1` keep their labels; the remaining
/// vertices of `g2` follow in increasing order.
pub fn glue(g1: &Graph, g2: &Graph, v1: Vertex, v2: Vertex) -> Result<Glued, GraphError> {
    for (g, v, side) in [(g1, v1, "first"), (g2, v2, "second")] {
        if v == 0 || v > g.n() {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() });
        }
        if !g.is_free_vertex(v) {
            return Err(GraphError::NotFree { vertex: v, side });
        }
    }
    let n = g1.n() + g2.n() - 1;
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    let left: Vec<Vertex> = (1..=g1.n()).collect();
    let mut right = Vec::with_capacity(g2.n());
    let mut next = g1.n() + 1;
    for u in 1..=g2.n() {
        if u == v2 {
            right.push(v1);
        } else {
            right.push(next);
            next += 1;
        }
    }
    let mut g = Graph::empty(n)?;
    for (i, j) in g1.edges() {
        g.add_edge_unchecked(i, j);
    }
    for (i, j) in g2.edges() {
        g.add_edge_unchecked(right[i - 1], right[j - 1]);
    }
    Ok(Glued {
        graph: g,
        left,
        right,
        shared: v1,
    })
}

/// A graph written as a union of induced pieces `G_1, …, G_r` that pairwise
/// share at most one vertex, with no vertex in three pieces, and where every
/// shared vertex is free in both pieces.
#[derive(Debug, Clone)]
pub struct GluingDecomposition {
    host: Graph,
    parts: Vec<VertexSet>,
}

impl GluingDecomposition {
    /// Validates the decomposition of `host` into the induced subgraphs on
    /// `parts`. The parts must cover every edge of `host`.
    pub fn new(host: Graph, parts: Vec<VertexSet>) -> Result<Self, GraphError> {
        let bad = |m: String| Err(GraphError::InvalidDecomposition(m));
        if parts.is_empty() {
            return bad("no parts".into());
        }
        let all = parts.iter().fold(VertexSet::empty(), |a, p| a.union(*p));
        if all != host.vertices() {
            return bad("parts do not cover the vertex set".into());
        }
        for (i, j) in host.edges() {
            if !parts.iter().any(|p| p.contains(i) && p.contains(j)) {
                return bad(format!("edge {{{i},{j}}} lies in no part"));
            }
        }
        for a in 0..parts.len() {
            for b in a + 1..parts.len() {
                let shared = parts[a].intersection(parts[b]);
                if shared.len() > 1 {
                    return bad(format!("parts {} and {} share {}", a + 1, b + 1, shared));
                }
                for c in b + 1..parts.len() {
                    if !shared.intersection(parts[c]).is_empty() {
                        return bad(format!("parts {}, {}, {} share a vertex", a + 1, b + 1, c + 1));
                    }
                }
                if let Some(v) = shared.min() {
                    for p in [a, b] {
                        let (sub, labels) = host.induced_subgraph(parts[p]);
                        let local = labels.iter().position(|&x| x == v).expect("v in part") + 1;
                        if !sub.is_free_vertex(local) {
                            return bad(format!("shared vertex {v} is not free in part {}", p + 1));
                        }
                    }
                }
            }
        }
        // Edges are recorded by the parts; no edge may cross two parts
        // without being inside one, which the coverage check ensures.
        Ok(GluingDecomposition { host, parts })
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    /// The piece graphs, each relabeled to `1..=|V(G_i)|`.
    pub fn part_graphs(&self) -> Vec<Graph> {
        self.parts
            .iter()
            .map(|&p| self.host.induced_subgraph(p).0)
            .collect()
    }

    /// Shared vertex of each adjacent pair `(i, j)`, `i < j`, 1-based part
    /// indices.
    pub fn intersections(&self) -> Vec<((usize, usize), Vertex)> {
        let mut out = Vec::new();
        for a in 0..self.parts.len() {
            for b in a + 1..self.parts.len() {
                if let Some(v) = self.parts[a].intersection(self.parts[b]).min() {
                    out.push(((a + 1, b + 1), v));
                }
            }
        }
        out
    }

    /// The graph on part indices `1..=r` with an edge whenever two parts meet.
    pub fn decomposition_graph(&self) -> Graph {
        Graph::new(self.parts.len(), self.intersections().into_iter().map(|(e, _)| e))
            .expect("pairs are distinct")
    }
}

/// Chain of cliques `K_{m_1}, …, K_{m_r}` where consecutive cliques share
/// one vertex; labels increase along the chain.
pub fn clique_chain(sizes: &[usize]) -> GluingDecomposition {
    assert!(!sizes.is_empty() && sizes.iter().all(|&m| m >= 1));
    let n = sizes.iter().sum::<usize>() + 1 - sizes.len();
    let mut g = Graph::empty(n).expect("chain within vertex cap");
    let mut parts = Vec::new();
    let mut start = 1;
    for &m in sizes {
        let part = VertexSet::from_vertices(start..start + m);
        for i in part.iter() {
            for j in part.iter().filter(|&j| j > i) {
                g.add_edge_unchecked(i, j);
            }
        }
        parts.push(part);
        start += m - 1;
    }
    GluingDecomposition::new(g, parts).expect("clique chains are valid decompositions")
}

/// Random graphs for property tests.
#[cfg(test)]
pub(crate) mod arb {
    use super::Graph;
    use proptest::prelude::*;

    /// Any simple graph on `1..=max_n` vertices.
    pub fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let pairs = (2..=n).flat_map(|j| (1..j).map(move |i| (i, j)));
                Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
            })
        })
    }

    /// Connected graphs: a random spanning tree plus random extra edges.
    pub fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let parents: Vec<BoxedStrategy<usize>> = (2..=n).map(|v| (1..v).boxed()).collect();
            (parents, proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)).prop_map(move |(parents, bits)| {
                let mut g = Graph::empty(n).unwrap();
                for (k, &p) in parents.iter().enumerate() {
                    g.add_edge_unchecked(p, k + 2);
                }
                let pairs = (2..=n).flat_map(|j| (1..j).map(move |i| (i, j)));
                for ((i, j), b) in pairs.zip(bits) {
                    if b && !g.has_edge(i, j) {
                        g.add_edge_unchecked(i, j);
                    }
                }
                g
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[Vertex]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    #[test]
    fn components_examples() {
        assert_eq!(Graph::path(3).connected_components(), vec![vs(&[1, 2, 3])]);
        assert_eq!(
            Graph::empty(3).unwrap().connected_components(),
            vec![vs(&[1]), vs(&[2]), vs(&[3])]
        );
        let g = Graph::new(4, [(1, 2)]).unwrap();
        assert_eq!(g.connected_components(), vec![vs(&[1, 2]), vs(&[3]), vs(&[4])]);
    }

    #[test]
    fn cut_vertices() {
        assert!(Graph::path(3).is_cut_vertex(2));
        assert!(!Graph::path(3).is_cut_vertex(1));
        for v in 1..=3 {
            assert!(!Graph::complete(3).is_cut_vertex(v));
        }
        assert!(Graph::star(3).is_cut_vertex(1));
        assert!(!Graph::star(3).is_cut_vertex(2));
    }

    #[test]
    fn induced_subgraphs() {
        let (g, labels) = Graph::path(3).induced_subgraph(vs(&[1, 3]));
        assert_eq!(g, Graph::empty(2).unwrap());
        assert_eq!(labels, vec![1, 3]);
        let (g, _) = Graph::complete(3).induced_subgraph(vs(&[1, 2]));
        assert_eq!(g, Graph::complete(2));
        let p = Graph::cycle(5);
        assert_eq!(p.induced_subgraph(p.vertices()).0, p);
    }

    #[test]
    fn clique_complex_examples() {
        let k3 = Graph::complete(3).clique_complex();
        assert_eq!(k3.facets, vec![vs(&[1, 2, 3])]);
        assert_eq!(k3.free_vertices, vs(&[1, 2, 3]));

        let p3 = Graph::path(3).clique_complex();
        assert_eq!(p3.facets, vec![vs(&[1, 2]), vs(&[2, 3])]);
        assert_eq!(p3.free_vertices, vs(&[1, 3]));

        let star = Graph::star(3).clique_complex();
        assert_eq!(star.facets.len(), 3);
        assert_eq!(star.free_vertices, vs(&[2, 3, 4]));
    }

    #[test]
    fn cone_examples() {
        let c = cone(&Graph::empty(2).unwrap());
        assert_eq!(c.apex, 3);
        assert_eq!(c.graph, Graph::new(3, [(1, 3), (2, 3)]).unwrap());
        assert_eq!(cone(&Graph::complete(2)).graph, Graph::complete(3));
        let fig = cone(&Graph::star(3)).graph;
        assert_eq!((fig.n(), fig.edge_count()), (5, 7));
    }

    #[test]
    fn glue_examples() {
        let g = glue(&Graph::complete(3), &Graph::complete(3), 3, 1).unwrap();
        assert_eq!(g.graph.n(), 5);
        assert_eq!(g.graph.edge_count(), 6);
        assert_eq!(g.shared, 3);
        assert_eq!(g.right, vec![3, 4, 5]);

        let p = glue(&Graph::complete(2), &Graph::complete(2), 2, 1).unwrap();
        assert_eq!(p.graph, Graph::path(3));

        assert_eq!(
            glue(&Graph::star(3), &Graph::complete(2), 1, 1).unwrap_err(),
            GraphError::NotFree { vertex: 1, side: "first" }
        );
    }

    #[test]
    fn decomposition_graph_examples() {
        let chain = clique_chain(&[3, 3, 3]);
        assert_eq!(chain.decomposition_graph(), Graph::path(3));
        let single = GluingDecomposition::new(Graph::complete(4), vec![VertexSet::full(4)]).unwrap();
        assert_eq!(single.decomposition_graph(), Graph::empty(1).unwrap());

        // Three parts meeting in one vertex violate the triple-intersection rule.
        let star = Graph::star(3);
        let err = GluingDecomposition::new(star, vec![vs(&[1, 2]), vs(&[1, 3]), vs(&[1, 4])]);
        assert!(err.is_err());
    }

    #[test]
    fn tree_examples() {
        assert!(Graph::path(3).is_tree());
        assert!(!Graph::complete(3).is_tree());
        assert!(!Graph::empty(2).unwrap().is_tree());
    }

    #[test]
    fn chordality() {
        assert!(Graph::complete(4).is_chordal());
        assert!(Graph::star(4).is_chordal());
        assert!(!Graph::cycle(4).is_chordal());
        assert!(!Graph::cycle(5).is_chordal());
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(3, [(1, 1)]).unwrap_err(), GraphError::SelfLoop(1));
        assert_eq!(
            Graph::new(3, [(1, 2), (2, 1)]).unwrap_err(),
            GraphError::DuplicateEdge(1, 2)
        );
        assert!(matches!(
            Graph::new(3, [(1, 4)]).unwrap_err(),
            GraphError::VertexOutOfRange { vertex: 4, n: 3 }
        ));
    }

    use proptest::prelude::*;

    proptest! {
        #[test]
        fn cut_vertices_match_component_recount(g in arb::graph(9)) {
            let base = g.connected_components().len();
            for v in 1..=g.n() {
                let (minus, _) = g.remove_vertex(v);
                prop_assert_eq!(g.is_cut_vertex(v), minus.connected_components().len() > base);
            }
        }

        #[test]
        fn clique_complex_shape(g in arb::graph(9)) {
            let cc = g.clique_complex();
            for (i, j) in g.edges() {
                prop_assert!(cc.facets.iter().any(|f| f.contains(i) && f.contains(j)));
            }
            for a in &cc.facets {
                prop_assert!(g.is_clique(*a));
                for b in &cc.facets {
                    prop_assert!(a == b || !a.is_subset(*b));
                }
            }
            let once: VertexSet = g.vertices().iter().filter(|&v| cc.facets.iter().filter(|f| f.contains(v)).count() == 1).collect();
            prop_assert_eq!(cc.free_vertices, once);
        }

        #[test]
        fn glue_keeps_both_sides(g1 in arb::connected(6), g2 in arb::connected(6), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
            let f1: Vec<Vertex> = g1.free_vertices().iter().collect();
            let f2: Vec<Vertex> = g2.free_vertices().iter().collect();
            prop_assume!(!f1.is_empty() && !f2.is_empty());
            let (v1, v2) = (f1[a.index(f1.len())], f2[b.index(f2.len())]);
            let glued = glue(&g1, &g2, v1, v2).unwrap();
            prop_assert_eq!(glued.graph.n(), g1.n() + g2.n() - 1);
            let (left, _) = glued.graph.induced_subgraph(glued.left.iter().copied().collect());
            let (right, _) = glued.graph.induced_subgraph(glued.right.iter().copied().collect());
            prop_assert_eq!(left.edge_count(), g1.edge_count());
            prop_assert_eq!(right.edge_count(), g2.edge_count());
            for (i, j) in g1.edges() {
                prop_assert!(glued.graph.has_edge(glued.left[i - 1], glued.left[j - 1]));
            }
            for (i, j) in g2.edges() {
                prop_assert!(glued.graph.has_edge(glued.right[i - 1], glued.right[j - 1]));
            }
        }

        #[test]
        fn cone_apex_sees_everything(h in arb::graph(8)) {
            let c = cone(&h);
            prop_assert_eq!(c.graph.degree(c.apex), h.n());
            let (base, _) = c.graph.induced_subgraph(c.graph.vertices().without(c.apex));
            prop_assert_eq!(base, h);
        }
    }
}
