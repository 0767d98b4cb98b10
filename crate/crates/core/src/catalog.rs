//! Isomorph-free enumeration of small connected graphs.
//!
//! The canonical form of a graph is the least upper-triangle adjacency bit
//! string (graph6 column order) over all labelings compatible with an
//! ordered colour-refinement partition. The partition is computed from
//! isomorphism-invariant data only, so the minimum is a complete invariant.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::io::emit_graph6;

pub const MAX_CATALOG_N: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("catalog size {0} outside 1..={MAX_CATALOG_N}")]
    OutOfRange(usize),
}

/// Connected graphs up to isomorphism, each in canonical labeling.
#[derive(Debug, Clone)]
pub struct GraphCatalog {
    pub n_max: usize,
    /// `by_n[k]` holds the graphs on `k + 1` vertices, sorted by graph6.
    pub by_n: Vec<Vec<Graph>>,
}

impl GraphCatalog {
    pub fn new(n_max: usize) -> Result<Self, CatalogError> {
        if n_max == 0 || n_max > MAX_CATALOG_N {
            return Err(CatalogError::OutOfRange(n_max));
        }
        let mut by_n = vec![vec![Graph::complete(1)]];
        for n in 2..=n_max {
            let next = extend(by_n.last().expect("nonempty"), n);
            by_n.push(next);
        }
        Ok(GraphCatalog { n_max, by_n })
    }

    pub fn graphs(&self, n: usize) -> &[Graph] {
        &self.by_n[n - 1]
    }

    pub fn all(&self) -> impl Iterator<Item = &Graph> {
        self.by_n.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.by_n.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>, CatalogError> {
    Ok(GraphCatalog::new(n)?.by_n.pop().expect("n ≥ 1"))
}

/// Every connected graph has a vertex whose removal keeps it connected, so
/// adding a vertex with a nonempty neighbourhood to each class on `n - 1`
/// vertices reaches every class on `n`.
fn extend(smaller: &[Graph], n: usize) -> Vec<Graph> {
    let found: BTreeMap<String, Graph> = smaller
        .par_iter()
        .flat_map_iter(|h| {
            (1u64..1 << (n - 1)).map(move |nbrs| {
                let mut g = Graph::empty(n).expect("small");
                for (i, j) in h.edges() {
                    g.add_edge_unchecked(i, j);
                }
                for u in 1..n {
                    if nbrs >> (u - 1) & 1 == 1 {
                        g.add_edge_unchecked(u, n);
                    }
                }
                let c = canonical_graph(&g);
                (emit_graph6(&c), c)
            })
        })
        .collect();
    found.into_values().collect()
}

/// Upper-triangle bits in graph6 order, most significant first, as a
/// number: smaller number = lexicographically smaller string.
fn code(g: &Graph, order: &[Vertex]) -> u128 {
    let mut c = 0u128;
    for j in 1..order.len() {
        for i in 0..j {
            c = c << 1 | g.has_edge(order[i], order[j]) as u128;
        }
    }
    c
}

/// Ordered partition of the vertices by iterated colour refinement,
/// optionally with `root` split off first.
fn refined_cells(g: &Graph, root: Option<Vertex>) -> Vec<Vec<Vertex>> {
    let n = g.n();
    let mut colour: Vec<usize> = (1..=n)
        .map(|v| if Some(v) == root { 0 } else { 1 + g.degree(v) })
        .collect();
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (1..=n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| colour[u - 1]).collect();
                nb.sort_unstable();
                (colour[v - 1], nb)
            })
            .collect();
        let distinct: Vec<&(usize, Vec<usize>)> = {
            let mut d: Vec<_> = keys.iter().collect();
            d.sort();
            d.dedup();
            d
        };
        let next: Vec<usize> = keys
            .iter()
            .map(|k| distinct.binary_search(&k).expect("present"))
            .collect();
        let stable = distinct.len() == colour.iter().collect::<BTreeSet<_>>().len();
        colour = next;
        if stable {
            break;
        }
    }
    let ncells = colour.iter().max().map_or(0, |&m| m + 1);
    let mut cells = vec![Vec::new(); ncells];
    for v in 1..=n {
        cells[colour[v - 1]].push(v);
    }
    cells.retain(|c| !c.is_empty());
    cells
}

/// Labeling (canonical position → original vertex) minimising the code.
fn canonical_order(g: &Graph, root: Option<Vertex>) -> Vec<Vertex> {
    let cells = refined_cells(g, root);
    let slots: Vec<usize> = cells.iter().enumerate().flat_map(|(k, c)| vec![k; c.len()]).collect();
    let n = g.n();
    let mut best: Option<(u128, Vec<Vertex>)> = None;
    let mut order = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];

    // Depth-first over cell-respecting labelings; the code of a prefix is
    // fixed once its vertices are placed, so dominated prefixes are cut.
    fn go(
        g: &Graph,
        cells: &[Vec<Vertex>],
        slots: &[usize],
        order: &mut Vec<Vertex>,
        used: &mut [bool],
        prefix: u128,
        best: &mut Option<(u128, Vec<Vertex>)>,
    ) {
        let k = order.len();
        if k == slots.len() {
            if best.as_ref().is_none_or(|(b, _)| prefix < *b) {
                *best = Some((prefix, order.clone()));
            }
            return;
        }
        let mut tried: Vec<Vertex> = Vec::new();
        for &v in &cells[slots[k]] {
            if used[v] {
                continue;
            }
            // Swapping twins fixes every placed vertex, so their subtrees agree.
            if tried.iter().any(|&u| twins(g, u, v)) {
                continue;
            }
            tried.push(v);
            let mut p = prefix;
            for &u in order.iter() {
                p = p << 1 | g.has_edge(u, v) as u128;
            }
            if let Some((b, _)) = best {
                // Compare against the best code's prefix of equal length.
                let total = slots.len() * (slots.len() - 1) / 2;
                let len = (k + 1) * k / 2;
                if p > *b >> (total - len) {
                    continue;
                }
            }
            used[v] = true;
            order.push(v);
            go(g, cells, slots, order, used, p, best);
            order.pop();
            used[v] = false;
        }
    }
    go(g, &cells, &slots, &mut order, &mut used, 0, &mut best);
    best.map(|(_, o)| o).unwrap_or_default()
}

fn twins(g: &Graph, u: Vertex, v: Vertex) -> bool {
    g.neighbors(u).without(v) == g.neighbors(v).without(u)
}

pub fn canonical_graph(g: &Graph) -> Graph {
    relabel_by_order(g, &canonical_order(g, None))
}

/// Graph6 string of the canonical labeling; equal iff isomorphic.
pub fn canonical_id(g: &Graph) -> String {
    emit_graph6(&canonical_graph(g))
}

fn relabel_by_order(g: &Graph, order: &[Vertex]) -> Graph {
    let mut perm = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v - 1] = pos + 1;
    }
    g.relabel(&perm)
}

/// Vertices up to automorphism: each class of `vs` represented by its
/// smallest member.
pub fn orbit_representatives(g: &Graph, vs: impl IntoIterator<Item = Vertex>) -> Vec<Vertex> {
    let mut seen: BTreeSet<u128> = BTreeSet::new();
    let mut reps = Vec::new();
    let mut vs: Vec<Vertex> = vs.into_iter().collect();
    vs.sort_unstable();
    for v in vs {
        let order = canonical_order(g, Some(v));
        if seen.insert(code(g, &order)) {
            reps.push(v);
        }
    }
    reps
}
