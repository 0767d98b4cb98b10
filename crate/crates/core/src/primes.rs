//! Minimal primes of binomial edge ideals.
//!
//! The minimal primes of `J_G` are the ideals `P_T(G)` indexed by the vertex
//! sets `T` with the cut point property: every `i ∈ T` is a cut vertex of the
//! graph induced on `(V \ T) ∪ {i}`. `P_T` has height `n + |T| - c(T)`, where
//! `c(T)` counts the components of the graph induced on `V \ T`.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Glued, Graph, GraphError, Vertex, VertexSet};

/// A vertex set with the cut point property, together with `c(T)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CutSet {
    pub set: VertexSet,
    pub component_count: usize,
}

impl CutSet {
    fn of(g: &Graph, set: VertexSet) -> Self {
        CutSet {
            set,
            component_count: g.component_count_within(g.vertices().difference(set)),
        }
    }

    /// Height of `P_T` in a graph with `n` vertices.
    pub fn height(&self, n: usize) -> usize {
        n + self.set.len() - self.component_count
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalPrime {
    pub cut_set: CutSet,
    pub height: usize,
    /// Vertex sets of the components of `G` restricted to the complement of
    /// `T`; each contributes the 2-minors of a generic `2 × k` matrix.
    pub components: Vec<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumSummary {
    pub n: usize,
    pub min_primes: Vec<MinimalPrime>,
    /// Krull dimension of `S/J_G`, `2n - min height`.
    pub dimension: usize,
    pub unmixed: bool,
}

/// `T` has the cut point property for `g`. Vacuously true for `T = ∅`.
pub fn has_cutpoint_property(g: &Graph, t: VertexSet) -> bool {
    let complement = g.vertices().difference(t);
    t.iter()
        .all(|i| g.is_cut_vertex_within(complement.with(i), i))
}

/// All cut sets of `g`, ordered by size and then lexicographically. Works for
/// disconnected graphs too; free vertices are skipped since they never occur
/// in a cut set.
pub(crate) fn cutsets_unchecked(g: &Graph) -> Vec<CutSet> {
    let candidates: Vec<Vertex> = g
        .vertices()
        .difference(g.free_vertices())
        .iter()
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << candidates.len()) {
        let t: VertexSet = candidates
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        if has_cutpoint_property(g, t) {
            out.push(CutSet::of(g, t));
        }
    }
    out.sort_by(|a, b| a.set.cmp_size_lex(&b.set));
    out
}

/// The cut sets `C(G)` of a connected graph; always starts with `∅`.
pub fn enumerate_cutsets(g: &Graph) -> Result<Vec<CutSet>, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::NotConnected);
    }
    Ok(cutsets_unchecked(g))
}

/// Describes how two graphs were glued at a shared free vertex: the label
/// maps of the gluing plus the unique facet through the glue vertex on each
/// side (in the original labels of that side).
#[derive(Debug, Clone, Copy)]
pub struct GluingData<'a> {
    pub glued: &'a Glued,
    pub facet_left: VertexSet,
    pub facet_right: VertexSet,
}

impl<'a> GluingData<'a> {
    /// Reads the facets through the glue vertex from the two input graphs.
    pub fn new(glued: &'a Glued, g1: &Graph, g2: &Graph) -> Self {
        let v1 = glued
            .left
            .iter()
            .position(|&x| x == glued.shared)
            .expect("shared vertex comes from the left graph")
            + 1;
        let v2 = glued
            .right
            .iter()
            .position(|&x| x == glued.shared)
            .expect("shared vertex comes from the right graph")
            + 1;
        GluingData {
            glued,
            facet_left: g1.clique_complex().facet_of_free(v1).expect("v1 is free"),
            facet_right: g2.clique_complex().facet_of_free(v2).expect("v2 is free"),
        }
    }
}

fn map_set(s: VertexSet, map: &[Vertex]) -> VertexSet {
    s.iter().map(|v| map[v - 1]).collect()
}

/// Cut sets of a glued graph assembled from the cut sets of its two sides:
/// the unions `T_1 ∪ T_2`, plus `T_1 ∪ T_2 ∪ {v}` whenever neither facet
/// through `v` is swallowed by `T_i ∪ {v}`. Component counts follow from
/// the sides without touching the glued graph: `c_1 + c_2 - 1` for the
/// first kind, `c_1 + c_2` for the second.
pub fn cutsets_via_gluing(left: &[CutSet], right: &[CutSet], data: &GluingData<'_>) -> Vec<CutSet> {
    let glued = data.glued;
    let v = glued.shared;
    let v_left = glued.left.iter().position(|&x| x == v).expect("shared on left") + 1;
    let v_right = glued.right.iter().position(|&x| x == v).expect("shared on right") + 1;
    let mut out = Vec::new();
    for t1 in left {
        for t2 in right {
            let union = map_set(t1.set, &glued.left).union(map_set(t2.set, &glued.right));
            out.push(CutSet {
                set: union,
                component_count: t1.component_count + t2.component_count - 1,
            });
            let keeps_left = !data.facet_left.is_subset(t1.set.with(v_left));
            let keeps_right = !data.facet_right.is_subset(t2.set.with(v_right));
            if keeps_left && keeps_right {
                out.push(CutSet {
                    set: union.with(v),
                    component_count: t1.component_count + t2.component_count,
                });
            }
        }
    }
    out.sort_by(|a, b| a.set.cmp_size_lex(&b.set));
    out.dedup();
    out
}

fn primes_of(g: &Graph, cutsets: Vec<CutSet>) -> Vec<MinimalPrime> {
    let n = g.n();
    cutsets
        .into_iter()
        .map(|c| MinimalPrime {
            height: c.height(n),
            components: g.components_within(g.vertices().difference(c.set)),
            cut_set: c,
        })
        .collect()
}

/// One minimal prime per cut set, in cut-set order.
pub fn minimal_primes(g: &Graph) -> Result<Vec<MinimalPrime>, GraphError> {
    Ok(primes_of(g, enumerate_cutsets(g)?))
}

/// Krull dimension of `S/J_G`.
pub fn dimension(g: &Graph) -> Result<usize, GraphError> {
    Ok(spectrum(g)?.dimension)
}

/// Unmixedness: every cut set satisfies `c(T) = |T| + 1`.
pub fn is_unmixed(g: &Graph) -> Result<bool, GraphError> {
    Ok(spectrum(g)?.unmixed)
}

pub fn spectrum(g: &Graph) -> Result<SpectrumSummary, GraphError> {
    let min_primes = minimal_primes(g)?;
    Ok(summarize(g.n(), min_primes))
}

fn summarize(n: usize, min_primes: Vec<MinimalPrime>) -> SpectrumSummary {
    let min_height = min_primes.iter().map(|p| p.height).min().unwrap_or(0);
    let unmixed = min_primes
        .iter()
        .all(|p| p.cut_set.component_count == p.cut_set.set.len() + 1);
    debug_assert_eq!(
        unmixed,
        min_primes.iter().all(|p| p.height + 1 == n.max(1)),
        "c(T) = |T|+1 must match equal heights n-1"
    );
    SpectrumSummary {
        n,
        dimension: 2 * n - min_height,
        unmixed,
        min_primes,
    }
}

/// Which row of the generic `2 × n` matrix a linear form lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Row {
    X,
    Y,
}

/// The linear form `x_u - x_w` or `y_u - y_w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DifferenceForm {
    pub row: Row,
    pub u: Vertex,
    pub w: Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("degenerate form: both indices are {0}")]
    Degenerate(Vertex),
    #[error("vertex {vertex} is out of range 1..={n}")]
    OutOfRange { vertex: Vertex, n: usize },
}

/// Whether a difference of two same-row variables is a nonzerodivisor on
/// `S/J_G`, i.e. lies outside every minimal prime. The degree-one part of
/// `P_T` is spanned by `x_i, y_i` for `i ∈ T`; the component minors are
/// quadratic and contribute no linear forms. So the form lies in `P_T`
/// exactly when both indices belong to `T`.
///
/// Accepts disconnected graphs (such as a disjoint union before gluing).
pub fn linear_form_regular(g: &Graph, form: DifferenceForm) -> Result<bool, FormError> {
    for v in [form.u, form.w] {
        if v == 0 || v > g.n() {
            return Err(FormError::OutOfRange { vertex: v, n: g.n() });
        }
    }
    if form.u == form.w {
        return Err(FormError::Degenerate(form.u));
    }
    Ok(cutsets_unchecked(g)
        .iter()
        .all(|t| !(t.set.contains(form.u) && t.set.contains(form.w))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cone, glue};

    fn vs(v: &[Vertex]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    /// Cut sets straight from the definition over every subset, no pruning.
    fn brute_cutsets(g: &Graph) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = (0u64..1 << g.n())
            .map(VertexSet::from_bits)
            .filter(|&t| {
                t.iter().all(|i| {
                    let (sub, labels) = g.induced_subgraph(g.vertices().difference(t).with(i));
                    let local = labels.iter().position(|&x| x == i).unwrap() + 1;
                    let (minus, _) = sub.remove_vertex(local);
                    minus.connected_components().len() > sub.connected_components().len()
                })
            })
            .collect();
        out.sort_by(|a, b| a.cmp_size_lex(b));
        out
    }

    fn sets(c: &[CutSet]) -> Vec<VertexSet> {
        c.iter().map(|c| c.set).collect()
    }

    #[test]
    fn cutpoint_property_examples() {
        let p3 = Graph::path(3);
        assert!(has_cutpoint_property(&p3, vs(&[2])));
        assert!(!has_cutpoint_property(&p3, vs(&[1])));
        assert!(has_cutpoint_property(&Graph::cycle(5), VertexSet::empty()));
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(sets(&enumerate_cutsets(&Graph::complete(5)).unwrap()), vec![vs(&[])]);
        assert_eq!(sets(&enumerate_cutsets(&Graph::path(3)).unwrap()), vec![vs(&[]), vs(&[2])]);
        let two_triangles = glue(&Graph::complete(3), &Graph::complete(3), 3, 1).unwrap();
        assert_eq!(
            sets(&enumerate_cutsets(&two_triangles.graph).unwrap()),
            vec![vs(&[]), vs(&[3])]
        );
        assert_eq!(
            enumerate_cutsets(&Graph::empty(2).unwrap()),
            Err(GraphError::NotConnected)
        );
    }

    #[test]
    fn enumeration_matches_definition() {
        let graphs = [
            Graph::path(5),
            Graph::cycle(5),
            Graph::star(4),
            cone(&Graph::star(3)).graph,
            Graph::new(6, [(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 6), (6, 4)]).unwrap(),
        ];
        for g in graphs {
            assert_eq!(sets(&cutsets_unchecked(&g)), brute_cutsets(&g), "{g:?}");
        }
    }

    fn check_gluing(g1: &Graph, v1: Vertex, g2: &Graph, v2: Vertex) {
        let glued = glue(g1, g2, v1, v2).unwrap();
        let data = GluingData::new(&glued, g1, g2);
        let via = cutsets_via_gluing(
            &enumerate_cutsets(g1).unwrap(),
            &enumerate_cutsets(g2).unwrap(),
            &data,
        );
        assert_eq!(via, enumerate_cutsets(&glued.graph).unwrap());
    }

    #[test]
    fn gluing_examples() {
        check_gluing(&Graph::complete(3), 3, &Graph::complete(3), 1);
        check_gluing(&Graph::complete(2), 2, &Graph::complete(2), 1);
        // P3 glued at its leaf 3 to K2 is P4 with cut sets ∅, {2}, {3}.
        let glued = glue(&Graph::path(3), &Graph::complete(2), 3, 1).unwrap();
        assert_eq!(
            sets(&enumerate_cutsets(&glued.graph).unwrap()),
            vec![vs(&[]), vs(&[2]), vs(&[3])]
        );
        check_gluing(&Graph::path(3), 3, &Graph::complete(2), 1);
        check_gluing(&Graph::star(3), 2, &Graph::cycle(4).clone_with_pendant(), 5);
    }

    trait Pendant {
        fn clone_with_pendant(&self) -> Graph;
    }

    impl Pendant for Graph {
        fn clone_with_pendant(&self) -> Graph {
            let n = self.n() + 1;
            Graph::new(n, self.edges().chain([(1, n)])).unwrap()
        }
    }

    #[test]
    fn heights_and_dimension() {
        let p3 = minimal_primes(&Graph::path(3)).unwrap();
        assert_eq!(p3.iter().map(|p| p.height).collect::<Vec<_>>(), vec![2, 2]);
        assert_eq!(p3[1].components, vec![vs(&[1]), vs(&[3])]);
        assert_eq!(minimal_primes(&Graph::complete(3)).unwrap().len(), 1);
        assert_eq!(minimal_primes(&Graph::complete(3)).unwrap()[0].height, 2);

        let claw_cone = cone(&Graph::star(3)).graph;
        assert!(minimal_primes(&claw_cone).unwrap().iter().all(|p| p.height == 4));

        assert_eq!(dimension(&Graph::path(3)).unwrap(), 4);
        assert_eq!(dimension(&Graph::complete(5)).unwrap(), 6);
        assert_eq!(dimension(&Graph::star(3)).unwrap(), 6);
    }

    #[test]
    fn unmixed_examples() {
        assert!(is_unmixed(&Graph::path(3)).unwrap());
        assert!(!is_unmixed(&Graph::star(3)).unwrap());
        assert!(is_unmixed(&cone(&Graph::star(3)).graph).unwrap());
    }

    #[test]
    fn linear_forms() {
        let g = crate::graph::disjoint_union(&Graph::complete(3), &Graph::complete(3));
        let form = DifferenceForm { row: Row::Y, u: 3, w: 4 };
        assert_eq!(linear_form_regular(&g, form), Ok(true));
        // y_1 - y_2 on P3: both endpoints are never in a common cut set, and
        // the form is linear, so it misses every prime.
        let p3 = Graph::path(3);
        assert_eq!(
            linear_form_regular(&p3, DifferenceForm { row: Row::Y, u: 1, w: 2 }),
            Ok(true)
        );
        assert_eq!(
            linear_form_regular(&p3, DifferenceForm { row: Row::Y, u: 2, w: 2 }),
            Err(FormError::Degenerate(2))
        );
        // Two cut vertices that appear together in a cut set.
        let p4 = Graph::path(4);
        assert_eq!(
            linear_form_regular(&p4, DifferenceForm { row: Row::X, u: 2, w: 3 }),
            Ok(true)
        );
        let p5 = Graph::path(5);
        assert_eq!(
            linear_form_regular(&p5, DifferenceForm { row: Row::X, u: 2, w: 4 }),
            Ok(false)
        );
    }

    use crate::graph::arb;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn pruned_enumeration_matches_definition(g in arb::connected(7)) {
            prop_assert_eq!(sets(&enumerate_cutsets(&g).unwrap()), brute_cutsets(&g));
        }

        #[test]
        fn spectrum_bounds(g in arb::connected(8)) {
            let n = g.n();
            let s = spectrum(&g).unwrap();
            prop_assert_eq!(s.min_primes[0].cut_set.set, VertexSet::empty());
            prop_assert_eq!(s.min_primes[0].height, n - 1);
            prop_assert!(s.dimension >= n + 1);
            if s.unmixed {
                prop_assert!(s.min_primes.iter().all(|p| p.height == n - 1));
                prop_assert_eq!(s.dimension, n + 1);
            }
        }

        #[test]
        fn cut_sets_avoid_exactly_the_free_vertices(g in arb::connected(8)) {
            let covered = enumerate_cutsets(&g).unwrap().iter().fold(VertexSet::empty(), |a, t| a.union(t.set));
            prop_assert_eq!(covered, g.vertices().difference(g.free_vertices()));
        }

        #[test]
        fn gluing_formula_matches_direct(g1 in arb::connected(5), g2 in arb::connected(5), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
            let f1: Vec<Vertex> = g1.free_vertices().iter().collect();
            let f2: Vec<Vertex> = g2.free_vertices().iter().collect();
            prop_assume!(!f1.is_empty() && !f2.is_empty());
            let (v1, v2) = (f1[a.index(f1.len())], f2[b.index(f2.len())]);
            let glued = glue(&g1, &g2, v1, v2).unwrap();
            let data = GluingData::new(&glued, &g1, &g2);
            let via = cutsets_via_gluing(&enumerate_cutsets(&g1).unwrap(), &enumerate_cutsets(&g2).unwrap(), &data);
            prop_assert_eq!(&via, &enumerate_cutsets(&glued.graph).unwrap());
            prop_assert_eq!(is_unmixed(&glued.graph).unwrap(), is_unmixed(&g1).unwrap() && is_unmixed(&g2).unwrap());
        }

        #[test]
        fn relabeling_keeps_the_spectrum_shape(g in arb::connected(7), seed in any::<u64>()) {
            use rand::{seq::SliceRandom, SeedableRng};
            let mut perm: Vec<Vertex> = (1..=g.n()).collect();
            perm.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
            let (a, b) = (spectrum(&g).unwrap(), spectrum(&g.relabel(&perm)).unwrap());
            prop_assert_eq!((a.dimension, a.unmixed, a.min_primes.len()), (b.dimension, b.unmixed, b.min_primes.len()));
            let mut ha: Vec<usize> = a.min_primes.iter().map(|p| p.height).collect();
            let mut hb: Vec<usize> = b.min_primes.iter().map(|p| p.height).collect();
            ha.sort_unstable();
            hb.sort_unstable();
            prop_assert_eq!(ha, hb);
        }
    }
}
