//! Depth of Stanley–Reisner rings.
//!
//! `depth K[Δ]` is the least `|F| + j + 1` over faces `F` with
//! `H̃_j(lk F) ≠ 0` (`F = ∅` included). The solver walks vertex links
//! recursively with a running upper bound, so only low-degree homology of
//! each link is ever computed. Vertex-decomposable complexes are
//! sequentially Cohen–Macaulay, and for those the depth is the smallest facet
//! size; a budgeted search for a shedding order short-circuits most of the
//! recursion.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use super::ideal::SqfIdeal;
use super::{first_nonzero_homology, projective_dimension_masks, Field, SimplicialComplex};
use crate::graph::{Graph, GraphError};
use crate::groebner::initial_squarefree_masks;
use crate::primes;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DepthOptions {
    pub field: Field,
    /// Largest vertex count accepted by [`depth_of_quotient`].
    pub max_n: usize,
    /// Run the Hochster scan as a second route when `2n` is at most this.
    pub hochster_max_vars: usize,
    /// Node budget for each shedding-order search.
    pub vd_budget: usize,
}

impl Default for DepthOptions {
    fn default() -> Self {
        DepthOptions {
            field: Field::Rationals,
            max_n: 16,
            hochster_max_vars: 14,
            vd_budget: 20_000,
        }
    }
}

/// Provenance of a depth value. Both routes start from the squarefree
/// initial ideal read off the admissible-path basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum DepthRoute {
    /// Link recursion, confirmed by Hochster's formula.
    #[serde(rename = "initial-ideal/hochster")]
    InitialIdealHochster,
    /// Link recursion only; `pd` is `2n - depth`.
    #[serde(rename = "initial-ideal/links")]
    InitialIdealLinks,
}

impl fmt::Display for DepthRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DepthRoute::InitialIdealHochster => "initial-ideal/hochster",
            DepthRoute::InitialIdealLinks => "initial-ideal/links",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DepthResult {
    pub depth: usize,
    pub projective_dimension: usize,
    pub dimension: usize,
    pub is_cm: bool,
    pub route: DepthRoute,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DepthError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph has {n} vertices, above the depth cap of {cap}")]
    SizeCap { n: usize, cap: usize },
    #[error("depth {depth} and Hochster projective dimension {pd} do not add up to {nvars}")]
    RouteMismatch { depth: usize, pd: usize, nvars: usize },
    #[error("inconsistent result: {0}")]
    Inconsistent(String),
}

/// Depth of `S/J_G` computed from the squarefree initial ideal.
pub fn depth_of_quotient(g: &Graph, opts: &DepthOptions) -> Result<DepthResult, DepthError> {
    let n = g.n();
    if n > opts.max_n {
        return Err(DepthError::SizeCap { n, cap: opts.max_n });
    }
    let spectrum = primes::spectrum(g)?;
    let nvars = 2 * n;
    let masks = initial_squarefree_masks(g);
    let ideal = SqfIdeal::new(mask(nvars), masks.iter().copied());

    let top = ideal.facets().iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
    if top != spectrum.dimension {
        return Err(DepthError::Inconsistent(format!(
            "initial ideal has dimension {top}, cut sets give {}",
            spectrum.dimension
        )));
    }

    let mut solver = Solver::new(opts.field, opts.vd_budget);
    let depth = solver.depth(ideal, nvars);
    let (pd, route) = if nvars <= opts.hochster_max_vars {
        let pd = projective_dimension_masks(&masks, opts.field);
        if pd + depth != nvars {
            return Err(DepthError::RouteMismatch { depth, pd, nvars });
        }
        (pd, DepthRoute::InitialIdealHochster)
    } else {
        (nvars - depth, DepthRoute::InitialIdealLinks)
    };
    let is_cm = depth == spectrum.dimension;
    if is_cm && !spectrum.unmixed {
        return Err(DepthError::Inconsistent("Cohen-Macaulay but not unmixed".into()));
    }
    Ok(DepthResult {
        depth,
        projective_dimension: pd,
        dimension: spectrum.dimension,
        is_cm,
        route,
    })
}

/// Depth of `K[Δ]` for the complex of `ideal` on its ground set.
pub fn depth_capped(ideal: &SqfIdeal, cap: usize, field: Field) -> usize {
    Solver::new(field, DepthOptions::default().vd_budget).depth(ideal.clone(), cap)
}

/// Björner–Wachs vertex decomposability, searched with a node budget.
/// `None` when the budget runs out.
pub fn is_vertex_decomposable(c: &SimplicialComplex, budget: usize) -> Option<bool> {
    let mut budget = budget;
    vertex_decomposable(c.facets().to_vec(), &mut budget, &mut HashMap::new())
}

fn mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

#[derive(Clone, Copy)]
struct Memo {
    value: usize,
    /// `false` when `value` is only known to be a lower bound (it hit the cap).
    exact: bool,
}

struct Solver {
    field: Field,
    vd_budget: usize,
    memo: HashMap<SqfIdeal, Memo>,
    vd_memo: HashMap<Vec<u64>, bool>,
}

impl Solver {
    fn new(field: Field, vd_budget: usize) -> Self {
        Solver {
            field,
            vd_budget,
            memo: HashMap::new(),
            vd_memo: HashMap::new(),
        }
    }

    /// `min(depth, cap)`.
    fn depth(&mut self, ideal: SqfIdeal, cap: usize) -> usize {
        if cap == 0 {
            return 0;
        }
        // Variables that are generators are not vertices of the complex.
        let ghosts = ideal.gens.iter().filter(|g| g.count_ones() == 1).fold(0, |a, &g| a | g);
        let gens: Vec<u64> = ideal.gens.into_iter().filter(|g| g & ghosts == 0).collect();
        let support = gens.iter().fold(0, |a, &g| a | g);
        let cones = (ideal.ground & !ghosts & !support).count_ones() as usize;
        if cones >= cap || gens.is_empty() {
            return cones.min(cap);
        }
        cones + self.depth_core(SqfIdeal { ground: support, gens }, cap - cones)
    }

    fn depth_core(&mut self, ideal: SqfIdeal, cap: usize) -> usize {
        let parts = components(&ideal.gens);
        if parts.len() > 1 {
            // Joins add depths.
            let mut total = 0;
            for part in parts {
                let ground = part.iter().fold(0, |a, &g| a | g);
                total += self.depth_core(SqfIdeal { ground, gens: part }, cap - total);
                if total >= cap {
                    return cap;
                }
            }
            return total;
        }
        if let Some(m) = self.memo.get(&ideal) {
            if m.exact || m.value >= cap {
                return m.value.min(cap);
            }
        }

        let facets = ideal.facets();
        let min_facet = facets.iter().map(|f| f.count_ones() as usize).min().unwrap_or(0);
        let mut best = min_facet.min(cap);
        let mut budget = self.vd_budget;
        let vd = vertex_decomposable(facets, &mut budget, &mut self.vd_memo) == Some(true);
        if !vd {
            let mut verts = ideal.ground;
            while verts != 0 && best > 1 {
                let v = verts.trailing_zeros() as usize;
                verts &= verts - 1;
                let d = 1 + self.depth(ideal.link(v), best - 1);
                best = best.min(d);
            }
            if best >= 2 {
                let top = best as isize - 2;
                let faces = ideal.faces_by_size(best);
                if let Some(j) = first_nonzero_homology(&faces, top, self.field) {
                    best = best.min((j + 1) as usize);
                }
            }
        }
        let exact = best < cap || best == min_facet;
        self.memo.insert(ideal, Memo { value: best, exact });
        best
    }
}

/// Generator groups with pairwise disjoint variable supports.
fn components(gens: &[u64]) -> Vec<Vec<u64>> {
    let mut groups: Vec<(u64, Vec<u64>)> = Vec::new();
    for &g in gens {
        let mut merged = (g, vec![g]);
        groups.retain_mut(|(support, members)| {
            if *support & merged.0 != 0 {
                merged.0 |= *support;
                merged.1.append(members);
                false
            } else {
                true
            }
        });
        groups.push(merged);
    }
    groups.into_iter().map(|(_, mut m)| {
        m.sort_unstable();
        m
    }).collect()
}

fn vertex_decomposable(mut facets: Vec<u64>, budget: &mut usize, memo: &mut HashMap<Vec<u64>, bool>) -> Option<bool> {
    if facets.len() <= 1 {
        return Some(true);
    }
    if *budget == 0 {
        return None;
    }
    *budget -= 1;
    // Cone points do not affect decomposability.
    let apex = facets.iter().fold(u64::MAX, |a, &f| a & f);
    if apex != 0 {
        for f in facets.iter_mut() {
            *f &= !apex;
        }
    }
    facets.sort_unstable();
    if let Some(&known) = memo.get(&facets) {
        return Some(known);
    }
    let mut verts = facets.iter().fold(0, |a, &f| a | f);
    let mut result = false;
    while verts != 0 {
        let bit = verts & verts.wrapping_neg();
        verts &= verts - 1;
        let (with, without): (Vec<u64>, Vec<u64>) = facets.iter().partition(|&&f| f & bit != 0);
        let shedding = with
            .iter()
            .all(|&f| without.iter().any(|&g| (f & !bit) & !g == 0));
        if !shedding {
            continue;
        }
        let link: Vec<u64> = with.iter().map(|&f| f & !bit).collect();
        if vertex_decomposable(link, budget, memo)? && vertex_decomposable(without, budget, memo)? {
            result = true;
            break;
        }
    }
    memo.insert(facets, result);
    Some(result)
}
