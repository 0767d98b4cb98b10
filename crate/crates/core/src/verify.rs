//! Executable statements about gluing at free vertices, decompositions
//! along trees, chordal graphs and cones, each checked on concrete graphs.
//!
//! Every check records what the statement predicts (`expected`) next to what
//! was computed independently (`computed`); a check passes iff they agree.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::catalog::{orbit_representatives, CatalogError, GraphCatalog};
use crate::graph::{clique_chain, cone, disjoint_union, glue, Graph, GraphError, GluingDecomposition, Vertex, VertexSet};
use crate::groebner::{
    arrange_for_gluing, buchberger, edge_ideal_generators, gb_from_admissible_paths, glued_union_basis,
    variable_avoids_initial_generators, Monomial, Var,
};
use crate::homology::{depth_of_quotient, DepthError, DepthOptions, DepthResult};
use crate::io::emit_graph6;
use crate::primes::{cutsets_via_gluing, enumerate_cutsets, has_cutpoint_property, spectrum, CutSet, GluingData};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Depth(#[from] DepthError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremCheck {
    pub theorem_id: String,
    pub instance: String,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
}

impl TheoremCheck {
    pub fn new(id: &str, instance: impl Into<String>, expected: impl Serialize, computed: impl Serialize) -> Self {
        let expected = serde_json::to_value(expected).expect("serializable");
        let computed = serde_json::to_value(computed).expect("serializable");
        TheoremCheck {
            theorem_id: id.into(),
            instance: instance.into(),
            pass: expected == computed,
            expected,
            computed,
        }
    }
}

type Checks = Result<Vec<TheoremCheck>, VerifyError>;

fn name(g: &Graph) -> String {
    emit_graph6(g)
}

fn sets(c: &[CutSet]) -> Vec<VertexSet> {
    c.iter().map(|t| t.set).collect()
}

fn height_in(g: &Graph, t: VertexSet) -> usize {
    g.n() + t.len() - g.component_count_within(g.vertices().difference(t))
}

/// Pulls a set of glued-graph labels back to a part, via `map[old-1] = new`.
fn pull_back(t: VertexSet, map: &[Vertex]) -> VertexSet {
    map.iter()
        .enumerate()
        .filter(|&(_, &new)| t.contains(new))
        .map(|(k, _)| k + 1)
        .collect()
}

/// Vertices lying in some cut set, found by testing every subset.
fn vertices_in_cutsets_brute(g: &Graph) -> VertexSet {
    let full = g.vertices().bits();
    let mut found = VertexSet::empty();
    let mut t = full;
    loop {
        let s = VertexSet::from_bits(t);
        if !s.is_subset(found) && has_cutpoint_property(g, s) {
            found = found.union(s);
        }
        if t == 0 {
            break;
        }
        t = (t - 1) & full;
    }
    found
}

/// A vertex is in some cut set iff it is not free.
pub fn check_free_vertex_cutsets(g: &Graph) -> TheoremCheck {
    let expected = g.vertices().difference(g.free_vertices());
    TheoremCheck::new("free-vertex-cutsets", name(g), expected, vertices_in_cutsets_brute(g))
}

/// For a free vertex `v` in the facet `F` and every `T` with `F \ {v} ⊄ T`:
/// `T` is a cut set of `G` iff `v ∉ T` and `T` is a cut set of `G \ v`.
pub fn check_deletion_cutsets(g: &Graph) -> TheoremCheck {
    let cc = g.clique_complex();
    let full = g.vertices().bits();
    let mut mismatches: Vec<(Vertex, VertexSet)> = Vec::new();
    for v in cc.free_vertices.iter() {
        let f = cc.facet_of_free(v).expect("free vertex has a facet").without(v);
        let (h, old) = g.remove_vertex(v);
        let mut t = full;
        loop {
            let s = VertexSet::from_bits(t);
            if !f.is_subset(s) {
                let lhs = has_cutpoint_property(g, s);
                let rhs = !s.contains(v) && {
                    let local: VertexSet = old
                        .iter()
                        .enumerate()
                        .filter(|&(_, &o)| s.contains(o))
                        .map(|(k, _)| k + 1)
                        .collect();
                    has_cutpoint_property(&h, local)
                };
                if lhs != rhs {
                    mismatches.push((v, s));
                }
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & full;
        }
    }
    TheoremCheck::new("deletion-cutsets", name(g), Vec::<(Vertex, VertexSet)>::new(), mismatches)
}

fn glue_name(g1: &Graph, v1: Vertex, g2: &Graph, v2: Vertex) -> String {
    format!("glue({}@{v1}, {}@{v2})", name(g1), name(g2))
}

/// Cut sets, heights and unmixedness of a graph glued at a free vertex,
/// against the two parts.
pub fn check_gluing_cutsets(g1: &Graph, g2: &Graph, v1: Vertex, v2: Vertex) -> Checks {
    let glued = glue(g1, g2, v1, v2)?;
    let g = &glued.graph;
    let inst = glue_name(g1, v1, g2, v2);
    let (c, c1, c2) = (enumerate_cutsets(g)?, enumerate_cutsets(g1)?, enumerate_cutsets(g2)?);
    let data = GluingData::new(&glued, g1, g2);
    let mut out = vec![TheoremCheck::new(
        "gluing-cutsets",
        inst.clone(),
        sets(&c),
        sets(&cutsets_via_gluing(&c1, &c2, &data)),
    )];

    // Each T splits into parts that are cut sets of the pieces, and heights add.
    let (set1, set2): (BTreeSet<VertexSet>, BTreeSet<VertexSet>) =
        (sets(&c1).into_iter().collect(), sets(&c2).into_iter().collect());
    let mut expected = Vec::new();
    let mut computed = Vec::new();
    for t in &c {
        let rest = t.set.without(glued.shared);
        let t1 = pull_back(rest, &glued.left);
        let t2 = pull_back(rest, &glued.right);
        expected.push((t.set, true, t.height(g.n())));
        computed.push((
            t.set,
            set1.contains(&t1) && set2.contains(&t2),
            height_in(g1, t1) + height_in(g2, t2),
        ));
    }
    out.push(TheoremCheck::new("gluing-heights", inst.clone(), expected, computed));

    let (s, s1, s2) = (spectrum(g)?, spectrum(g1)?, spectrum(g2)?);
    out.push(TheoremCheck::new("gluing-unmixed", inst, s1.unmixed && s2.unmixed, s.unmixed));
    Ok(out)
}

/// Depth of a glued graph from the depths of its parts, and the
/// Cohen-Macaulay transfer.
pub fn check_depth_gluing(
    g1: &Graph,
    g2: &Graph,
    v1: Vertex,
    v2: Vertex,
    d1: &DepthResult,
    d2: &DepthResult,
    opts: &DepthOptions,
) -> Checks {
    let glued = glue(g1, g2, v1, v2)?;
    let d = depth_of_quotient(&glued.graph, opts)?;
    let inst = glue_name(g1, v1, g2, v2);
    Ok(vec![
        TheoremCheck::new("gluing-depth", inst.clone(), d1.depth + d2.depth - 2, d.depth),
        TheoremCheck::new("gluing-cm", inst, d1.is_cm && d2.is_cm, d.is_cm),
    ])
}

/// Depth formula and Cohen-Macaulay transfer along a decomposition whose
/// decomposition graph is a tree.
pub fn check_tree_decomposition(d: &GluingDecomposition, opts: &DepthOptions) -> Checks {
    if !d.decomposition_graph().is_tree() {
        return Err(VerifyError::Hypothesis("decomposition graph is not a tree".into()));
    }
    let parts = d.part_graphs();
    let r = parts.len();
    let inst = format!(
        "{} = {}",
        name(d.host()),
        parts.iter().map(name).collect::<Vec<_>>().join(" + ")
    );
    let part_depths = parts
        .iter()
        .map(|p| depth_of_quotient(p, opts))
        .collect::<Result<Vec<_>, _>>()?;
    let whole = depth_of_quotient(d.host(), opts)?;
    let sum: usize = part_depths.iter().map(|p| p.depth).sum();
    let all_cm = part_depths.iter().all(|p| p.is_cm);
    let mut out = vec![
        TheoremCheck::new("tree-depth", inst.clone(), sum + 2 - 2 * r, whole.depth),
        TheoremCheck::new("tree-cm", inst.clone(), all_cm, whole.is_cm),
    ];
    if all_cm {
        let unmixed = spectrum(d.host())?.unmixed;
        out.push(TheoremCheck::new("tree-cm-unmixed", inst, unmixed, whole.is_cm));
    }
    Ok(out)
}

/// Maximal cliques pairwise meet in at most one vertex.
pub fn cliques_meet_in_at_most_one(g: &Graph) -> bool {
    let cl = g.maximal_cliques();
    (0..cl.len()).all(|i| (i + 1..cl.len()).all(|j| cl[i].intersection(cl[j]).len() <= 1))
}

/// For a chordal graph whose maximal cliques pairwise share at most one
/// vertex: Cohen-Macaulay, unmixed, and "no vertex in three cliques" agree,
/// and without triple intersections the clique decomposition graph is a tree.
pub fn check_chordal_equivalence(g: &Graph, opts: &DepthOptions) -> Checks {
    if !g.is_chordal() || !cliques_meet_in_at_most_one(g) {
        return Err(VerifyError::Hypothesis(format!(
            "{} is not chordal with cliques meeting in at most one vertex",
            name(g)
        )));
    }
    let cliques = g.maximal_cliques();
    let no_triple = g.vertices().iter().all(|v| cliques.iter().filter(|c| c.contains(v)).count() <= 2);
    let d = depth_of_quotient(g, opts)?;
    let unmixed = spectrum(g)?.unmixed;
    let inst = name(g);
    let mut out = vec![TheoremCheck::new(
        "chordal-equivalence",
        inst.clone(),
        [d.is_cm, d.is_cm, d.is_cm],
        [d.is_cm, unmixed, no_triple],
    )];
    if no_triple {
        let dec = GluingDecomposition::new(g.clone(), cliques)?;
        out.push(TheoremCheck::new("clique-tree", inst, true, dec.decomposition_graph().is_tree()));
    }
    Ok(out)
}

/// Cone over a connected graph: cut sets, heights, dimension, and (for
/// unmixed `h`) unmixedness of the cone exactly when `h` is complete.
pub fn check_cone_connected(h: &Graph) -> Checks {
    if !h.is_connected() {
        return Err(VerifyError::Hypothesis(format!("{} is not connected", name(h))));
    }
    let c = cone(h);
    let g = &c.graph;
    let inst = format!("cone({})", name(h));
    let (ch, cg) = (enumerate_cutsets(h)?, enumerate_cutsets(g)?);
    let mut expected: Vec<VertexSet> = vec![VertexSet::empty()];
    expected.extend(ch.iter().filter(|t| !t.set.is_empty()).map(|t| t.set.with(c.apex)));
    expected.sort_by(|a, b| a.cmp_size_lex(b));
    let mut out = vec![TheoremCheck::new("cone-cutsets", inst.clone(), expected, sets(&cg))];

    let (exp_h, got_h): (Vec<usize>, Vec<usize>) = cg
        .iter()
        .filter(|t| !t.set.is_empty())
        .map(|t| (height_in(h, t.set.without(c.apex)) + 2, t.height(g.n())))
        .unzip();
    out.push(TheoremCheck::new("cone-heights", inst.clone(), exp_h, got_h));

    let (sh, sg) = (spectrum(h)?, spectrum(g)?);
    out.push(TheoremCheck::new(
        "cone-dimension",
        inst.clone(),
        (g.n() + 1).max(sh.dimension),
        sg.dimension,
    ));
    if sh.unmixed {
        out.push(TheoremCheck::new("cone-unmixed", inst, h.is_complete(), sg.unmixed));
    }
    Ok(out)
}

/// Outcome of [`check_cone_two_components`], with the open converse noted
/// separately rather than asserted.
#[derive(Debug, Clone)]
pub struct TwoComponentOutcome {
    pub checks: Vec<TheoremCheck>,
    /// Set when the cone is Cohen-Macaulay but some component is not.
    pub converse_witness: Option<String>,
}

/// Cone over two connected graphs: cut sets, heights, dimension,
/// unmixedness, and Cohen-Macaulayness when both components are.
pub fn check_cone_two_components(
    h1: &Graph,
    h2: &Graph,
    opts: Option<&DepthOptions>,
) -> Result<TwoComponentOutcome, VerifyError> {
    for h in [h1, h2] {
        if !h.is_connected() {
            return Err(VerifyError::Hypothesis(format!("{} is not connected", name(h))));
        }
    }
    let union = disjoint_union(h1, h2);
    let c = cone(&union);
    let g = &c.graph;
    let n1 = h1.n();
    let inst = format!("cone({} + {})", name(h1), name(h2));
    let shift = |t: VertexSet| -> VertexSet { t.iter().map(|u| u + n1).collect() };
    let (c1, c2, cg) = (enumerate_cutsets(h1)?, enumerate_cutsets(h2)?, enumerate_cutsets(g)?);

    let mut expected = vec![VertexSet::empty()];
    for t1 in &c1 {
        for t2 in &c2 {
            expected.push(t1.set.union(shift(t2.set)).with(c.apex));
        }
    }
    expected.sort_by(|a, b| a.cmp_size_lex(b));
    let mut checks = vec![TheoremCheck::new("cone2-cutsets", inst.clone(), expected, sets(&cg))];

    let low = VertexSet::full(n1);
    let (exp_h, got_h): (Vec<usize>, Vec<usize>) = cg
        .iter()
        .filter(|t| !t.set.is_empty())
        .map(|t| {
            let rest = t.set.without(c.apex);
            let t1 = rest.intersection(low);
            let t2: VertexSet = rest.difference(low).iter().map(|u| u - n1).collect();
            (height_in(h1, t1) + height_in(h2, t2) + 2, t.height(g.n()))
        })
        .unzip();
    checks.push(TheoremCheck::new("cone2-heights", inst.clone(), exp_h, got_h));

    let (s1, s2, sg) = (spectrum(h1)?, spectrum(h2)?, spectrum(g)?);
    checks.push(TheoremCheck::new(
        "cone2-dimension",
        inst.clone(),
        (s1.dimension + s2.dimension).max(g.n() + 1),
        sg.dimension,
    ));
    checks.push(TheoremCheck::new("cone2-unmixed", inst.clone(), s1.unmixed && s2.unmixed, sg.unmixed));

    let mut converse_witness = None;
    if let Some(opts) = opts {
        let (d1, d2) = (depth_of_quotient(h1, opts)?, depth_of_quotient(h2, opts)?);
        let both = d1.is_cm && d2.is_cm;
        // Only a non-unmixed cone is known not to be CM without homology.
        let cm = sg.unmixed && depth_of_quotient(g, opts)?.is_cm;
        if both {
            checks.push(TheoremCheck::new("cone2-cm", inst.clone(), true, cm));
        } else if cm {
            converse_witness = Some(inst);
        }
    }
    Ok(TwoComponentOutcome { checks, converse_witness })
}

/// A cone over three or more components is never unmixed.
pub fn check_cone_many_components(hs: &[Graph]) -> Checks {
    if hs.len() < 3 {
        return Err(VerifyError::Hypothesis("need at least three components".into()));
    }
    let union = hs[1..].iter().fold(hs[0].clone(), |acc, h| disjoint_union(&acc, h));
    let g = cone(&union).graph;
    let inst = format!("cone({})", hs.iter().map(name).collect::<Vec<_>>().join(" + "));
    Ok(vec![TheoremCheck::new("cone-components", inst, false, spectrum(&g)?.unmixed)])
}

/// The admissible-path basis, interreduced, is the reduced Buchberger basis,
/// and its leading terms are squarefree.
pub fn check_closed_form_basis(g: &Graph) -> Vec<TheoremCheck> {
    let n = g.n();
    let shown = |b: &crate::groebner::GroebnerBasis| -> Vec<String> {
        b.generators().iter().map(|p| p.display(n)).collect()
    };
    let closed = gb_from_admissible_paths(g);
    let squarefree = closed
        .generators()
        .iter()
        .all(|p| p.leading_monomial().is_some_and(Monomial::is_squarefree));
    let oracle = buchberger(&edge_ideal_generators(g));
    let inst = name(g);
    vec![
        TheoremCheck::new("gb-closed-form", inst.clone(), shown(&oracle), shown(&closed.into_reduced())),
        TheoremCheck::new("gb-squarefree", inst, true, squarefree),
    ]
}

/// The basis of `J_{G_1 ⊔ G_2} + (y_n - y_{n+1})` built from admissible
/// paths satisfies Buchberger's criterion; its initial ideal contains `y_n`
/// and avoids `x_n`.
pub fn check_glued_basis(g1: &Graph, v1: Vertex, g2: &Graph, v2: Vertex) -> Checks {
    let (a, b) = arrange_for_gluing(g1, v1, g2, v2);
    let gb = glued_union_basis(&a, &b)?;
    let n = gb.n;
    let total = gb.n + gb.m;
    let ini = gb.basis.initial_ideal();
    let inst = glue_name(g1, v1, g2, v2);
    let reduced: Vec<String> = gb.basis.clone().into_reduced().generators().iter().map(|p| p.display(total)).collect();
    let oracle: Vec<String> = buchberger(&gb.ideal_generators()).generators().iter().map(|p| p.display(total)).collect();
    Ok(vec![
        TheoremCheck::new("glued-basis-criterion", inst.clone(), true, gb.basis.satisfies_buchberger_criterion()),
        TheoremCheck::new("glued-basis-reduced", inst.clone(), oracle, reduced),
        TheoremCheck::new(
            "glued-initial",
            inst,
            [true, true],
            [
                ini.contains(&Monomial::var(Var::Y(n), total)),
                variable_avoids_initial_generators(&ini, Var::X(n)),
            ],
        ),
    ])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Gluing,
    Cone,
    Chordal,
    Groebner,
}

impl std::str::FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "all" => Suite::All,
            "gluing" => Suite::Gluing,
            "cone" => Suite::Cone,
            "chordal" => Suite::Chordal,
            "groebner" => Suite::Groebner,
            _ => return Err(format!("unknown suite {s:?}; expected all, gluing, cone, chordal or groebner")),
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub n_max: usize,
    pub total: usize,
    pub failed: usize,
    pub checks: Vec<TheoremCheck>,
    /// Cones that are Cohen-Macaulay over a non-CM component.
    pub converse_witnesses: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &TheoremCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Free vertices of `g` up to automorphism.
fn glue_points(g: &Graph) -> Vec<Vertex> {
    orbit_representatives(g, g.free_vertices().iter())
}

/// Unordered pairs of catalog graphs with free-vertex orbit representatives,
/// as `(i, v1, j, v2)` indices into `graphs`.
pub fn glue_instances(graphs: &[Graph]) -> Vec<(usize, Vertex, usize, Vertex)> {
    let points: Vec<Vec<Vertex>> = graphs.iter().map(glue_points).collect();
    let mut out = Vec::new();
    for i in 0..graphs.len() {
        for j in i..graphs.len() {
            for &v1 in &points[i] {
                for &v2 in &points[j] {
                    out.push((i, v1, j, v2));
                }
            }
        }
    }
    out
}

fn flatten(results: Vec<Checks>) -> Checks {
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

/// Gluing statements over all pairs of catalog graphs with at most `n_max`
/// vertices each, plus tree decompositions built from clique chains.
pub fn gluing_suite(n_max: usize, opts: &DepthOptions) -> Checks {
    let cat = GraphCatalog::new(n_max)?;
    let graphs: Vec<Graph> = cat.all().cloned().collect();
    let mut checks: Vec<TheoremCheck> = graphs
        .par_iter()
        .flat_map_iter(|g| {
            let mut v = vec![check_deletion_cutsets(g)];
            if g.n() <= 7 {
                v.push(check_free_vertex_cutsets(g));
            }
            v
        })
        .collect();

    let depths: Vec<DepthResult> = graphs
        .par_iter()
        .map(|g| depth_of_quotient(g, opts))
        .collect::<Result<_, _>>()?;
    let results: Vec<Checks> = glue_instances(&graphs)
        .into_par_iter()
        .map(|(i, v1, j, v2)| {
            let (g1, g2) = (&graphs[i], &graphs[j]);
            let mut out = check_gluing_cutsets(g1, g2, v1, v2)?;
            out.extend(check_depth_gluing(g1, g2, v1, v2, &depths[i], &depths[j], opts)?);
            Ok(out)
        })
        .collect();
    checks.extend(flatten(results)?);
    checks.extend(check_clique_chains(opts)?);
    Ok(checks)
}

/// Chains of `r ≤ 4` cliques of size at most 4 (sizes ≥ 2).
pub fn clique_chain_sizes() -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut frontier: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..4 {
        let mut next = Vec::new();
        for s in &frontier {
            for m in 2..=4 {
                let mut t = s.clone();
                t.push(m);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Tree decomposition statements and the chain depth `n + 1` for every
/// chain from [`clique_chain_sizes`].
pub fn check_clique_chains(opts: &DepthOptions) -> Checks {
    let results: Vec<Checks> = clique_chain_sizes()
        .into_par_iter()
        .map(|sizes| {
            let d = clique_chain(&sizes);
            let mut out = check_tree_decomposition(&d, opts)?;
            let whole = depth_of_quotient(d.host(), opts)?;
            let formula: usize = sizes.iter().map(|m| m + 1).sum::<usize>() + 2 - 2 * sizes.len();
            let inst = format!("chain{sizes:?}");
            out.push(TheoremCheck::new("chain-depth", inst, [formula, d.host().n() + 1], [whole.depth, whole.depth]));
            Ok(out)
        })
        .collect();
    flatten(results)
}

/// Cone statements over connected graphs with at most `n_max` vertices, over
/// pairs with at most `n_max` vertices in total, and over triples.
pub fn cone_suite(n_max: usize, opts: &DepthOptions) -> Result<(Vec<TheoremCheck>, Vec<String>), VerifyError> {
    let cat = GraphCatalog::new(n_max)?;
    let graphs: Vec<Graph> = cat.all().cloned().collect();
    let mut checks = flatten(graphs.par_iter().map(check_cone_connected).collect())?;

    let pairs: Vec<(usize, usize)> = (0..graphs.len())
        .flat_map(|i| (i..graphs.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| graphs[i].n() + graphs[j].n() <= n_max)
        .collect();
    let outcomes: Vec<Result<TwoComponentOutcome, VerifyError>> = pairs
        .into_par_iter()
        .map(|(i, j)| check_cone_two_components(&graphs[i], &graphs[j], Some(opts)))
        .collect();
    let mut witnesses = Vec::new();
    for o in outcomes {
        let o = o?;
        checks.extend(o.checks);
        witnesses.extend(o.converse_witness);
    }

    let small: Vec<&Graph> = graphs.iter().filter(|g| g.n() <= 3).collect();
    for a in 0..small.len() {
        for b in a..small.len() {
            for c in b..small.len() {
                let hs = [small[a].clone(), small[b].clone(), small[c].clone()];
                if hs.iter().map(Graph::n).sum::<usize>() <= n_max.max(3) {
                    checks.extend(check_cone_many_components(&hs)?);
                }
            }
        }
    }
    Ok((checks, witnesses))
}

/// The chordal equivalence over every catalog graph meeting its hypotheses.
pub fn chordal_suite(n_max: usize, opts: &DepthOptions) -> Checks {
    let cat = GraphCatalog::new(n_max)?;
    let graphs: Vec<&Graph> = cat
        .all()
        .filter(|g| g.is_chordal() && cliques_meet_in_at_most_one(g))
        .collect();
    flatten(graphs.into_par_iter().map(|g| check_chordal_equivalence(g, opts)).collect())
}

/// Closed-form bases on catalog graphs with at most `min(n_max, 5)`
/// vertices, and glued bases for pairs of cliques with at most 8 vertices.
pub fn groebner_suite(n_max: usize) -> Checks {
    let cat = GraphCatalog::new(n_max.clamp(1, 5))?;
    let mut checks: Vec<TheoremCheck> = cat.all().collect::<Vec<_>>().par_iter().flat_map_iter(|g| check_closed_form_basis(g)).collect();
    let pairs: Vec<(usize, usize)> = (1..=7).flat_map(|a| (1..=8 - a).map(move |b| (a, b))).collect();
    let results: Vec<Checks> = pairs
        .into_par_iter()
        .map(|(a, b)| check_glued_basis(&Graph::complete(a), a, &Graph::complete(b), 1))
        .collect();
    checks.extend(flatten(results)?);
    Ok(checks)
}

pub fn run_suite(suite: Suite, n_max: usize, opts: &DepthOptions) -> Result<SuiteReport, VerifyError> {
    let mut checks = Vec::new();
    let mut converse_witnesses = Vec::new();
    if matches!(suite, Suite::All | Suite::Gluing) {
        checks.extend(gluing_suite(n_max, opts)?);
    }
    if matches!(suite, Suite::All | Suite::Cone) {
        let (c, w) = cone_suite(n_max, opts)?;
        checks.extend(c);
        converse_witnesses.extend(w);
    }
    if matches!(suite, Suite::All | Suite::Chordal) {
        checks.extend(chordal_suite(n_max, opts)?);
    }
    if matches!(suite, Suite::All | Suite::Groebner) {
        checks.extend(groebner_suite(n_max)?);
    }
    let failed = checks.iter().filter(|c| !c.pass).count();
    Ok(SuiteReport {
        suite,
        n_max,
        total: checks.len(),
        failed,
        checks,
        converse_witnesses,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    /// Vertices of `H`; the cone has one more.
    pub n: usize,
    pub graphs: usize,
    pub unmixed_cones: usize,
    pub cm_cones: usize,
    pub counterexamples: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepEntry {
    pub graph: String,
    pub cone: String,
    pub depth: DepthResult,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub n_max: usize,
    pub rows: Vec<SweepRow>,
    /// Cones that are Cohen-Macaulay over a non-complete connected graph.
    pub counterexamples: Vec<SweepEntry>,
    /// Cones over two components checked for the converse direction.
    pub two_component_cones: usize,
    /// Of those, cones that are Cohen-Macaulay while a component is not.
    pub converse_witnesses: Vec<String>,
}

/// For every connected `H` with `1 ≤ |V(H)| ≤ n_max`: if the cone over `H`
/// is Cohen-Macaulay then `H` is complete. Non-unmixed cones are discarded
/// before any homology is computed.
pub fn conjecture_sweep(n_max: usize, opts: &DepthOptions) -> Result<SweepReport, VerifyError> {
    let cat = GraphCatalog::new(n_max)?;
    let mut rows = Vec::new();
    let mut counterexamples = Vec::new();
    for n in 1..=n_max {
        let results: Vec<Result<(bool, Option<DepthResult>), VerifyError>> = cat
            .graphs(n)
            .par_iter()
            .map(|h| {
                let g = cone(h).graph;
                if !spectrum(&g)?.unmixed {
                    return Ok((false, None));
                }
                Ok((true, Some(depth_of_quotient(&g, opts)?)))
            })
            .collect();
        let mut row = SweepRow { n, graphs: cat.graphs(n).len(), unmixed_cones: 0, cm_cones: 0, counterexamples: 0 };
        for (h, r) in cat.graphs(n).iter().zip(results) {
            let (unmixed, depth) = r?;
            row.unmixed_cones += unmixed as usize;
            if let Some(d) = depth.filter(|d| d.is_cm) {
                row.cm_cones += 1;
                if !h.is_complete() {
                    row.counterexamples += 1;
                    counterexamples.push(SweepEntry { graph: name(h), cone: name(&cone(h).graph), depth: d });
                }
            }
        }
        rows.push(row);
    }

    let graphs: Vec<&Graph> = cat.all().collect();
    let pairs: Vec<(usize, usize)> = (0..graphs.len())
        .flat_map(|i| (i..graphs.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| graphs[i].n() + graphs[j].n() <= n_max)
        .collect();
    let two_component_cones = pairs.len();
    let probes: Vec<Result<Option<String>, VerifyError>> = pairs
        .into_par_iter()
        .map(|(i, j)| {
            let (h1, h2) = (graphs[i], graphs[j]);
            let g = cone(&disjoint_union(h1, h2)).graph;
            if !spectrum(&g)?.unmixed || !depth_of_quotient(&g, opts)?.is_cm {
                return Ok(None);
            }
            let both = depth_of_quotient(h1, opts)?.is_cm && depth_of_quotient(h2, opts)?.is_cm;
            Ok((!both).then(|| format!("cone({} + {})", name(h1), name(h2))))
        })
        .collect();
    let mut converse_witnesses = Vec::new();
    for p in probes {
        converse_witnesses.extend(p?);
    }
    Ok(SweepReport { n_max, rows, counterexamples, two_component_cones, converse_witnesses })
}
