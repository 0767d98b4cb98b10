//! Admissible paths and the Gröbner bases they describe.
//!
//! A path `i = i_0, …, i_r = j` with `i < j` is admissible when its vertices
//! are distinct, every interior vertex lies outside `[i, j]`, and no
//! order-preserving proper subsequence of the interior vertices yields
//! another path from `i` to `j`. Each admissible path contributes
//! `u_π f_ij` with `u_π = ∏_{i_k > j} x_{i_k} · ∏_{i_k < i} y_{i_k}`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{GroebnerBasis, Monomial, Polynomial, Var};
use crate::graph::{disjoint_union, Graph, GraphError, Vertex, VertexSet};
use crate::primes::CutSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissiblePath {
    pub vertices: Vec<Vertex>,
}

impl AdmissiblePath {
    pub fn start(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn end(&self) -> Vertex {
        *self.vertices.last().expect("paths are nonempty")
    }

    pub fn interior(&self) -> &[Vertex] {
        &self.vertices[1..self.vertices.len() - 1]
    }

    /// `u_π` in the ring on `n` vertices.
    pub fn monomial(&self, n: usize) -> Monomial {
        let (i, j) = (self.start(), self.end());
        let vars: Vec<Var> = self
            .interior()
            .iter()
            .map(|&v| if v > j { Var::X(v) } else { debug_assert!(v < i); Var::Y(v) })
            .collect();
        Monomial::from_vars(&vars, n)
    }

    /// `u_π f_ij`.
    pub fn basis_element(&self, n: usize) -> Polynomial {
        Polynomial::edge_binomial(self.start(), self.end(), n)
            .mul_term(&BigRational::from_integer(BigInt::from(1)), &self.monomial(n))
    }
}

/// Generators `f_ij`, `i < j`, one per edge, in edge order.
pub fn edge_ideal_generators(g: &Graph) -> Vec<Polynomial> {
    g.edges()
        .map(|(i, j)| Polynomial::edge_binomial(i, j, g.n()))
        .collect()
}

/// Checks admissibility straight from the definition, trying every proper
/// subset of the interior for condition (3).
pub fn is_admissible(g: &Graph, seq: &[Vertex]) -> bool {
    if seq.len() < 2 {
        return false;
    }
    let (i, j) = (seq[0], seq[seq.len() - 1]);
    if i >= j || seq.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
        return false;
    }
    let distinct: VertexSet = seq.iter().copied().collect();
    if distinct.len() != seq.len() {
        return false;
    }
    let interior = &seq[1..seq.len() - 1];
    if interior.iter().any(|&v| v >= i && v <= j) {
        return false;
    }
    let r = interior.len();
    for mask in 0u64..(1u64 << r) {
        if mask.count_ones() as usize == r {
            continue;
        }
        let mut sub = vec![i];
        sub.extend((0..r).filter(|k| mask >> k & 1 == 1).map(|k| interior[k]));
        sub.push(j);
        if sub.windows(2).all(|w| g.has_edge(w[0], w[1])) {
            return false;
        }
    }
    true
}

/// All admissible paths, ordered by `(i, j)`, then length, then vertex
/// sequence.
pub fn admissible_paths(g: &Graph) -> Vec<AdmissiblePath> {
    let mut out = Vec::new();
    for i in 1..=g.n() {
        for j in i + 1..=g.n() {
            let allowed: VertexSet = (1..=g.n()).filter(|&v| v < i || v > j).collect();
            let mut path = vec![i];
            // counts[k]: number of order-preserving subsequences of
            // path[0..=k] that start at i, end at path[k] and are paths
            // (saturated at 2). Condition (3) is counts == 1 at j.
            let mut counts = vec![1u8];
            extend_paths(g, j, allowed, &mut path, &mut counts, &mut out);
        }
    }
    out.sort_by(|a, b| {
        (a.start(), a.end(), a.vertices.len(), &a.vertices).cmp(&(b.start(), b.end(), b.vertices.len(), &b.vertices))
    });
    out
}

fn shortcut_count(g: &Graph, path: &[Vertex], counts: &[u8], next: Vertex) -> u8 {
    let mut c = 0u8;
    for (k, &v) in path.iter().enumerate() {
        if g.has_edge(v, next) {
            c = (c + counts[k]).min(2);
        }
    }
    c
}

fn extend_paths(
    g: &Graph,
    target: Vertex,
    allowed: VertexSet,
    path: &mut Vec<Vertex>,
    counts: &mut Vec<u8>,
    out: &mut Vec<AdmissiblePath>,
) {
    let last = *path.last().expect("nonempty");
    let used: VertexSet = path.iter().copied().collect();
    for next in g.neighbors(last).iter() {
        if next == target {
            if shortcut_count(g, path, counts, next) == 1 {
                let mut vertices = path.clone();
                vertices.push(next);
                out.push(AdmissiblePath { vertices });
            }
            continue;
        }
        if !allowed.contains(next) || used.contains(next) {
            continue;
        }
        let c = shortcut_count(g, path, counts, next);
        // Counts never decrease along the path, so a prefix with a shortcut
        // can never complete to an admissible path.
        if c >= 2 {
            continue;
        }
        path.push(next);
        counts.push(c);
        extend_paths(g, target, allowed, path, counts, out);
        path.pop();
        counts.pop();
    }
}

/// The set `{u_π f_ij : π admissible}`, unreduced, in path order.
pub fn gb_from_admissible_paths(g: &Graph) -> GroebnerBasis {
    GroebnerBasis::claimed(
        admissible_paths(g)
            .iter()
            .map(|p| p.basis_element(g.n()))
            .collect(),
    )
}

/// Support masks of the minimal generators of the initial ideal of `J_G`,
/// read from the admissible-path basis. Bit `k` is variable position `k`
/// (`x_i` at `i-1`, `y_i` at `n+i-1`).
pub fn initial_squarefree_masks(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let mut masks: Vec<u64> = admissible_paths(g)
        .iter()
        .map(|p| {
            let lm = p
                .monomial(n)
                .mul(&Monomial::from_vars(&[Var::X(p.start()), Var::Y(p.end())], n));
            debug_assert!(lm.is_squarefree());
            lm.support_mask()
        })
        .collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks.dedup();
    let mut minimal: Vec<u64> = Vec::new();
    for m in masks {
        if !minimal.iter().any(|&k| k & !m == 0) {
            minimal.push(m);
        }
    }
    minimal
}

/// Generators of the prime `P_T(G)`: the variables indexed by `T` and the
/// binomials `f_kl` for all pairs inside each component of `G` minus `T`.
pub fn prime_ideal_generators(g: &Graph, t: &CutSet) -> Vec<Polynomial> {
    let n = g.n();
    let mut gens = Vec::new();
    for i in t.set.iter() {
        gens.push(Polynomial::term(1, Monomial::var(Var::X(i), n)));
        gens.push(Polynomial::term(1, Monomial::var(Var::Y(i), n)));
    }
    for comp in g.components_within(g.vertices().difference(t.set)) {
        for k in comp.iter() {
            for l in comp.iter().filter(|&l| l > k) {
                gens.push(Polynomial::edge_binomial(k, l, n));
            }
        }
    }
    gens
}

/// Relabels two graphs so the glue vertex is the last vertex of the first
/// graph and the first vertex of the second, as [`glued_union_basis`]
/// expects. Labels are swapped, everything else keeps its place.
pub fn arrange_for_gluing(g1: &Graph, v1: Vertex, g2: &Graph, v2: Vertex) -> (Graph, Graph) {
    let swap = |n: usize, a: Vertex, b: Vertex| -> Vec<Vertex> {
        (1..=n)
            .map(|v| if v == a { b } else if v == b { a } else { v })
            .collect()
    };
    (g1.relabel(&swap(g1.n(), v1, g1.n())), g2.relabel(&swap(g2.n(), v2, 1)))
}

/// The claimed basis of `J_{G'} + (l_y)` for `G' = G_1 ⊔ G_2'`, where the
/// glue vertex is `n` in `G_1` (on `1..=n`) and its copy is `n+1` in `G_2'`
/// (on `n+1..=n+m`), with `l_y = y_n - y_{n+1}`.
#[derive(Debug, Clone)]
pub struct GluedUnionBasis {
    pub n: usize,
    pub m: usize,
    pub union: Graph,
    pub basis: GroebnerBasis,
}

impl GluedUnionBasis {
    pub fn l_y(&self) -> Polynomial {
        Polynomial::var_difference(Var::Y(self.n), Var::Y(self.n + 1), self.n + self.m)
    }

    pub fn l_x(&self) -> Polynomial {
        Polynomial::var_difference(Var::X(self.n), Var::X(self.n + 1), self.n + self.m)
    }

    /// Generators of `J_{G'} + (l_y)`.
    pub fn ideal_generators(&self) -> Vec<Polynomial> {
        let mut gens = edge_ideal_generators(&self.union);
        gens.push(self.l_y());
        gens
    }
}

/// Builds `{l_y} ∪ {u_π f_ij : j ≠ n} ∪ {u_π (x_i y_{n+1} - x_n y_i) : j = n}`
/// over the admissible paths of `G_1 ⊔ G_2'`. `g1`'s glue vertex must be its
/// last vertex and `g2`'s its first; both must be free.
pub fn glued_union_basis(g1: &Graph, g2: &Graph) -> Result<GluedUnionBasis, GraphError> {
    let (n, m) = (g1.n(), g2.n());
    if n == 0 || !g1.is_free_vertex(n) {
        return Err(GraphError::NotFree { vertex: n, side: "first" });
    }
    if m == 0 || !g2.is_free_vertex(1) {
        return Err(GraphError::NotFree { vertex: 1, side: "second" });
    }
    let union = disjoint_union(g1, g2);
    let total = n + m;
    let one = BigRational::from_integer(BigInt::from(1));
    let mut gens = vec![Polynomial::var_difference(Var::Y(n), Var::Y(n + 1), total)];
    for path in admissible_paths(&union) {
        let (i, j) = (path.start(), path.end());
        let u = path.monomial(total);
        let element = if j == n {
            Polynomial::from_terms(
                2 * total,
                [
                    (one.clone(), Monomial::from_vars(&[Var::X(i), Var::Y(n + 1)], total)),
                    (-one.clone(), Monomial::from_vars(&[Var::X(n), Var::Y(i)], total)),
                ],
            )
            .mul_term(&one, &u)
        } else {
            path.basis_element(total)
        };
        gens.push(element);
    }
    Ok(GluedUnionBasis {
        n,
        m,
        union,
        basis: GroebnerBasis::claimed(gens),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::buchberger;

    fn seqs(g: &Graph) -> Vec<Vec<Vertex>> {
        admissible_paths(g).into_iter().map(|p| p.vertices).collect()
    }

    /// Every simple path between every pair, filtered by the literal
    /// definition.
    fn brute_admissible(g: &Graph) -> Vec<Vec<Vertex>> {
        fn walk(g: &Graph, path: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
            if path.len() >= 2 && is_admissible(g, path) {
                out.push(path.clone());
            }
            let last = *path.last().unwrap();
            for next in g.neighbors(last).iter() {
                if !path.contains(&next) {
                    path.push(next);
                    walk(g, path, out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        for s in 1..=g.n() {
            walk(g, &mut vec![s], &mut out);
        }
        out.sort_by(|a, b| {
            (a[0], a[a.len() - 1], a.len(), a).cmp(&(b[0], b[b.len() - 1], b.len(), b))
        });
        out
    }

    #[test]
    fn path_examples() {
        assert_eq!(seqs(&Graph::path(3)), vec![vec![1, 2], vec![2, 3]]);
        assert_eq!(seqs(&Graph::complete(3)), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        let star = Graph::new(3, [(1, 2), (1, 3)]).unwrap();
        let paths = admissible_paths(&star);
        assert_eq!(
            paths.iter().map(|p| p.vertices.clone()).collect::<Vec<_>>(),
            vec![vec![1, 2], vec![1, 3], vec![2, 1, 3]]
        );
        assert_eq!(paths[2].monomial(3), Monomial::var(Var::Y(1), 3));
    }

    #[test]
    fn enumeration_matches_definition() {
        let graphs = [
            Graph::cycle(5),
            Graph::new(5, [(1, 4), (4, 2), (2, 5), (5, 3), (1, 5)]).unwrap(),
            Graph::new(6, [(3, 1), (1, 5), (5, 2), (2, 6), (6, 4), (4, 3), (1, 6)]).unwrap(),
            Graph::complete(5),
        ];
        for g in graphs {
            assert_eq!(seqs(&g), brute_admissible(&g), "{g:?}");
        }
    }

    #[test]
    fn closed_form_examples() {
        let star = Graph::new(3, [(1, 2), (1, 3)]).unwrap();
        let gb = gb_from_admissible_paths(&star);
        assert_eq!(gb.clone().into_reduced(), buchberger(&edge_ideal_generators(&star)));
        for k in 2..=4 {
            let g = Graph::complete(k);
            let closed = gb_from_admissible_paths(&g);
            assert_eq!(closed.len(), k * (k - 1) / 2);
            assert_eq!(closed.into_reduced(), buchberger(&edge_ideal_generators(&g)));
        }
    }

    #[test]
    fn glued_k2_k2() {
        let b = glued_union_basis(&Graph::complete(2), &Graph::complete(2)).unwrap();
        let shown: Vec<String> = b.basis.generators().iter().map(|p| p.display(4)).collect();
        assert_eq!(shown, vec!["y2 - y3", "x1y3 - x2y1", "x3y4 - x4y3"]);
        assert!(b.basis.satisfies_buchberger_criterion());
        let ini = b.basis.initial_ideal();
        assert!(ini.contains(&Monomial::var(Var::Y(2), 4)));
        assert!(crate::groebner::variable_avoids_initial_generators(&ini, Var::X(2)));
        // Same ideal as the defining generators.
        assert_eq!(b.basis.clone().into_reduced(), buchberger(&b.ideal_generators()));
    }

    #[test]
    fn glued_with_single_vertex() {
        let g1 = Graph::complete(3);
        let b = glued_union_basis(&g1, &Graph::empty(1).unwrap()).unwrap();
        assert_eq!(b.basis.len(), 1 + 3);
        assert!(b.basis.satisfies_buchberger_criterion());
    }

    #[test]
    fn glued_rejects_non_free() {
        let (g1, _) = arrange_for_gluing(&Graph::star(3), 1, &Graph::complete(2), 1);
        assert!(glued_union_basis(&g1, &Graph::complete(2)).is_err());
    }
}
