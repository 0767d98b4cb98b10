//! Per-graph analysis: prime spectrum always, Gröbner basis and depth when
//! the graph is within the stage caps.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::catalog::canonical_id;
use crate::graph::{Graph, GraphError, Vertex, VertexSet};
use crate::groebner::gb_from_admissible_paths;
use crate::homology::{depth_of_quotient, DepthError, DepthOptions, DepthRoute, Field};
use crate::primes::spectrum;

pub const SKIPPED_SIZE: &str = "skipped: size";
pub const RAN: &str = "ran";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalysisOptions {
    /// Largest graph accepted at all.
    pub max_n: usize,
    pub groebner_max_n: usize,
    pub homology_max_n: usize,
    pub depth: DepthOptions,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            max_n: 16,
            groebner_max_n: 12,
            homology_max_n: 10,
            depth: DepthOptions::default(),
        }
    }
}

impl AnalysisOptions {
    pub fn with_field(mut self, field: Field) -> Self {
        self.depth.field = field;
        self
    }
}

#[derive(Debug, thiserror::Error)]
pub enum AnalysisError {
    #[error("graph has {n} vertices, above the cap of {cap}")]
    SizeCap { n: usize, cap: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Depth(#[from] DepthError),
}

/// Keys are declared in sorted order so the JSON key order is sorted too.
/// Optional fields serialize as `null` so the key set is fixed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalysisReport {
    /// Original labels of this component, for disconnected input.
    pub component: Option<Vec<Vertex>>,
    pub cut_sets: Vec<VertexSet>,
    pub depth: Option<usize>,
    pub dimension: usize,
    pub edge_count: usize,
    pub field: String,
    pub graph_id: String,
    pub groebner_basis_size: Option<usize>,
    pub heights: Vec<usize>,
    #[serde(rename = "isCM")]
    pub is_cm: Option<bool>,
    pub n: usize,
    pub projective_dimension: Option<usize>,
    pub route: Option<DepthRoute>,
    pub stages: BTreeMap<String, String>,
    /// Whole milliseconds per stage.
    pub timings: BTreeMap<String, u64>,
    pub unmixed: bool,
}

fn millis(t: Instant) -> u64 {
    t.elapsed().as_millis() as u64
}

/// Analyzes a connected graph, or each component of a disconnected one.
pub fn analyze(g: &Graph, opts: &AnalysisOptions) -> Result<Vec<AnalysisReport>, AnalysisError> {
    if g.n() > opts.max_n {
        return Err(AnalysisError::SizeCap { n: g.n(), cap: opts.max_n });
    }
    if g.is_connected() {
        return Ok(vec![analyze_connected(g, opts)?]);
    }
    g.connected_components()
        .into_iter()
        .map(|c| {
            let (h, labels) = g.induced_subgraph(c);
            let mut r = analyze_connected(&h, opts)?;
            r.component = Some(labels);
            Ok(r)
        })
        .collect()
}

fn analyze_connected(g: &Graph, opts: &AnalysisOptions) -> Result<AnalysisReport, AnalysisError> {
    let n = g.n();
    let mut stages = BTreeMap::new();
    let mut timings = BTreeMap::new();

    let t = Instant::now();
    let spec = spectrum(g)?;
    timings.insert("primes".to_string(), millis(t));
    stages.insert("primes".to_string(), RAN.to_string());

    let mut groebner_basis_size = None;
    if n <= opts.groebner_max_n {
        let t = Instant::now();
        groebner_basis_size = Some(gb_from_admissible_paths(g).into_reduced().len());
        timings.insert("groebner".to_string(), millis(t));
        stages.insert("groebner".to_string(), RAN.to_string());
    } else {
        stages.insert("groebner".to_string(), SKIPPED_SIZE.to_string());
    }

    let mut depth = None;
    if n <= opts.homology_max_n {
        let t = Instant::now();
        let d = depth_of_quotient(g, &DepthOptions { max_n: opts.homology_max_n, ..opts.depth })?;
        timings.insert("homology".to_string(), millis(t));
        stages.insert("homology".to_string(), RAN.to_string());
        depth = Some(d);
    } else {
        stages.insert("homology".to_string(), SKIPPED_SIZE.to_string());
    }

    Ok(AnalysisReport {
        component: None,
        cut_sets: spec.min_primes.iter().map(|p| p.cut_set.set).collect(),
        depth: depth.map(|d| d.depth),
        dimension: spec.dimension,
        edge_count: g.edge_count(),
        field: opts.depth.field.to_string(),
        graph_id: canonical_id(g),
        groebner_basis_size,
        heights: spec.min_primes.iter().map(|p| p.height).collect(),
        is_cm: depth.map(|d| d.is_cm),
        n,
        projective_dimension: depth.map(|d| d.projective_dimension),
        route: depth.map(|d| d.route),
        stages,
        timings,
        unmixed: spec.unmixed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cone, disjoint_union};

    fn one(g: &Graph) -> AnalysisReport {
        let mut r = analyze(g, &AnalysisOptions::default()).unwrap();
        assert_eq!(r.len(), 1);
        r.pop().unwrap()
    }

    #[test]
    fn path_on_three_vertices() {
        let r = one(&Graph::path(3));
        assert!(r.unmixed);
        assert_eq!((r.dimension, r.depth, r.is_cm), (4, Some(4), Some(true)));
        assert_eq!(r.cut_sets, vec![VertexSet::empty(), VertexSet::from_iter([2])]);
        assert_eq!(r.heights, vec![2, 2]);
        assert_eq!(r.groebner_basis_size, Some(2));
    }

    #[test]
    fn claw_cone_and_two_path_cone() {
        let claw_cone = one(&cone(&Graph::star(3)).graph);
        assert_eq!((claw_cone.unmixed, claw_cone.is_cm), (true, Some(false)));
        let p3 = Graph::path(3);
        let paths_cone = one(&cone(&disjoint_union(&p3, &p3)).graph);
        assert_eq!((paths_cone.is_cm, paths_cone.depth, paths_cone.dimension), (Some(true), Some(8), 8));
    }

    #[test]
    fn caps_and_components() {
        let opts = AnalysisOptions { groebner_max_n: 2, homology_max_n: 2, ..Default::default() };
        let r = analyze(&Graph::path(3), &opts).unwrap().pop().unwrap();
        assert_eq!(r.stages["groebner"], SKIPPED_SIZE);
        assert_eq!(r.stages["homology"], SKIPPED_SIZE);
        assert_eq!((r.depth, r.is_cm, r.route), (None, None, None));
        assert!(analyze(&Graph::path(17), &AnalysisOptions::default()).is_err());

        let two = disjoint_union(&Graph::path(2), &Graph::path(3));
        let rs = analyze(&two, &AnalysisOptions::default()).unwrap();
        assert_eq!(rs.iter().map(|r| r.component.clone().unwrap()).collect::<Vec<_>>(), vec![vec![1, 2], vec![3, 4, 5]]);
    }

    #[test]
    fn json_keys_sorted_and_fixed() {
        let v = serde_json::to_value(one(&Graph::complete(3))).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(keys.len(), 16);
        let text = serde_json::to_string(&one(&Graph::complete(3))).unwrap();
        assert!(!text.contains('.'), "no floating point: {text}");
    }

    #[test]
    fn relabeling_keeps_verdicts() {
        let g = Graph::new(5, [(1, 2), (2, 3), (3, 4), (2, 5), (4, 5)]).unwrap();
        let (a, b) = (one(&g), one(&g.relabel(&[3, 5, 1, 4, 2])));
        assert_eq!((a.unmixed, a.dimension, a.depth, a.is_cm, &a.graph_id), (b.unmixed, b.dimension, b.depth, b.is_cm, &b.graph_id));
    }
}
