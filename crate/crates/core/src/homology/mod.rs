//! Stanley–Reisner complexes, simplicial homology, Reisner's criterion and
//! depth of `S/J_G` through its squarefree initial ideal.

mod depth;
mod hochster;
pub mod ideal;
pub mod linalg;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groebner::Monomial;
use ideal::{enumerate_faces, SqfIdeal};
use linalg::SparseMatrix;

pub use depth::{depth_capped, depth_of_quotient, is_vertex_decomposable, DepthError, DepthOptions, DepthResult, DepthRoute};
pub use hochster::{projective_dimension_hochster, projective_dimension_masks};

/// Coefficient field for homology ranks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum Field {
    #[default]
    Rationals,
    Prime(u32),
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "q"),
            Field::Prime(p) => write!(f, "p={p}"),
        }
    }
}

impl std::str::FromStr for Field {
    type Err = String;

    /// `q` for the rationals, `p=P` for a prime `P < 2^31`.
    fn from_str(s: &str) -> Result<Self, String> {
        if s == "q" {
            return Ok(Field::Rationals);
        }
        let p: u32 = s
            .strip_prefix("p=")
            .and_then(|p| p.parse().ok())
            .ok_or_else(|| format!("field must be q or p=P, got {s:?}"))?;
        let is_prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        if !is_prime || p >= 1 << 31 {
            return Err(format!("{p} is not a prime below 2^31"));
        }
        Ok(Field::Prime(p))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("generator {0} is not squarefree")]
    NotSquarefree(String),
    #[error("ground set of {0} variables exceeds 64")]
    GroundTooLarge(usize),
}

/// A complex on the vertices `0..ground`, stored by its facets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ground: usize,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    /// Keeps the maximal sets only. No facets means the void complex; the
    /// single facet `∅` is the complex `{∅}`.
    pub fn from_facets(ground: usize, facets: impl IntoIterator<Item = u64>) -> Self {
        let mut sets: Vec<u64> = facets.into_iter().collect();
        sets.sort_unstable_by_key(|&s| std::cmp::Reverse((s.count_ones(), s)));
        sets.dedup();
        let mut kept: Vec<u64> = Vec::new();
        for s in sets {
            if !kept.iter().any(|&k| s & !k == 0) {
                kept.push(s);
            }
        }
        kept.sort_unstable();
        SimplicialComplex { ground, facets: kept }
    }

    pub fn simplex(ground: usize) -> Self {
        SimplicialComplex::from_facets(ground, [full_mask(ground)])
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    /// `-1` for `{∅}`; `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.count_ones() as isize - 1).max()
    }

    pub fn vertex_mask(&self) -> u64 {
        self.facets.iter().fold(0, |a, &f| a | f)
    }

    pub fn is_face(&self, m: u64) -> bool {
        self.facets.iter().any(|&f| m & !f == 0)
    }

    pub fn faces_by_size(&self, max_size: usize) -> Vec<Vec<u64>> {
        if self.facets.is_empty() {
            return vec![Vec::new(); max_size + 1];
        }
        enumerate_faces(self.vertex_mask(), max_size, |m| self.is_face(m))
    }

    pub fn link(&self, face: u64) -> SimplicialComplex {
        SimplicialComplex::from_facets(
            self.ground,
            self.facets.iter().filter(|&&f| face & !f == 0).map(|&f| f & !face),
        )
    }

    /// Relabels vertex `k` to `perm[k]`.
    pub fn relabel(&self, perm: &[usize]) -> SimplicialComplex {
        let map = |m: u64| {
            (0..self.ground)
                .filter(|&k| m >> k & 1 == 1)
                .fold(0u64, |a, k| a | 1u64 << perm[k])
        };
        SimplicialComplex::from_facets(self.ground, self.facets.iter().map(|&f| map(f)))
    }
}

fn full_mask(ground: usize) -> u64 {
    if ground >= 64 {
        u64::MAX
    } else {
        (1u64 << ground) - 1
    }
}

/// Complex whose minimal non-faces are the supports of `ini`.
pub fn stanley_reisner_complex(ini: &[Monomial], ground: usize) -> Result<SimplicialComplex, HomologyError> {
    if ground > 64 {
        return Err(HomologyError::GroundTooLarge(ground));
    }
    let mut masks = Vec::with_capacity(ini.len());
    for m in ini {
        if !m.is_squarefree() {
            return Err(HomologyError::NotSquarefree(m.display(m.nvars() / 2)));
        }
        masks.push(m.support_mask());
    }
    let ideal = SqfIdeal::new(full_mask(ground), masks);
    Ok(SimplicialComplex::from_facets(ground, ideal.facets()))
}

/// Reduced homology: ranks over `Q` and the primes occurring as torsion,
/// both per degree.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct HomologyProfile {
    pub reduced_betti: BTreeMap<isize, usize>,
    pub torsion: BTreeMap<isize, BTreeSet<u64>>,
}

impl HomologyProfile {
    pub fn torsion_primes(&self) -> BTreeSet<u64> {
        self.torsion.values().flatten().copied().collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.reduced_betti.values().all(|&b| b == 0) && self.torsion.is_empty()
    }
}

/// Boundary map from faces of size `s` to faces of size `s-1`, one row per
/// face of size `s`.
fn boundary(faces: &[Vec<u64>], s: usize) -> SparseMatrix {
    let lower = &faces[s - 1];
    let mut m = SparseMatrix::new(lower.len());
    for &f in &faces[s] {
        let mut row = Vec::with_capacity(s);
        let mut sign = 1i64;
        let mut rest = f;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest &= rest - 1;
            let col = lower.binary_search(&(f & !bit)).expect("faces are closed under subsets");
            row.push((col as u32, sign));
            sign = -sign;
        }
        m.push_row(row);
    }
    m
}

fn rank(m: &SparseMatrix, field: Field) -> usize {
    match field {
        Field::Rationals => linalg::rank_rational(m),
        Field::Prime(p) => linalg::rank_mod_p(m, p),
    }
}

/// Reduced Betti numbers in degrees `-1..=top`, index `j + 1`. `faces` must
/// hold all faces of sizes `0..=top + 2`.
pub(crate) fn reduced_betti_upto(faces: &[Vec<u64>], top: isize, field: Field) -> Vec<usize> {
    let max_size = (top + 2) as usize;
    // ranks[s] = rank of the boundary out of size-s faces.
    let mut ranks = vec![0usize; max_size + 2];
    for s in 1..=max_size {
        if !faces[s].is_empty() {
            ranks[s] = rank(&boundary(faces, s), field);
        }
    }
    (-1..=top)
        .map(|j| {
            let s = (j + 1) as usize;
            faces[s].len() - ranks[s] - ranks[s + 1]
        })
        .collect()
}

/// Smallest degree `j ≤ top` with nonzero reduced homology, if any.
pub(crate) fn first_nonzero_homology(faces: &[Vec<u64>], top: isize, field: Field) -> Option<isize> {
    if top < -1 {
        return None;
    }
    let betti = reduced_betti_upto(faces, top, field);
    betti.iter().position(|&b| b != 0).map(|k| k as isize - 1)
}

pub fn reduced_homology(c: &SimplicialComplex) -> HomologyProfile {
    let mut profile = HomologyProfile::default();
    let Some(dim) = c.dimension() else {
        return profile;
    };
    let faces = c.faces_by_size((dim + 2) as usize);
    let betti = reduced_betti_upto(&faces, dim, Field::Rationals);
    for (k, b) in betti.into_iter().enumerate() {
        profile.reduced_betti.insert(k as isize - 1, b);
    }
    for j in -1..dim {
        let s = (j + 2) as usize;
        if faces[s].is_empty() {
            continue;
        }
        let primes: BTreeSet<u64> = linalg::diagonal_form(&boundary(&faces, s))
            .iter()
            .flat_map(linalg::prime_factors)
            .collect();
        if !primes.is_empty() {
            profile.torsion.insert(j, primes);
        }
    }
    profile
}

/// Reisner's criterion: every link, including that of `∅`, has vanishing
/// reduced homology below its dimension.
pub fn reisner_is_cm(c: &SimplicialComplex, field: Field) -> bool {
    let Some(dim) = c.dimension() else {
        return true;
    };
    let mut memo: HashMap<Vec<u64>, bool> = HashMap::new();
    let faces = c.faces_by_size((dim + 1) as usize);
    faces.iter().flatten().all(|&f| {
        let lk = c.link(f);
        if let Some(&ok) = memo.get(&lk.facets) {
            return ok;
        }
        let ok = match lk.dimension() {
            None => true,
            Some(d) => {
                let lfaces = lk.faces_by_size((d + 1).max(0) as usize);
                first_nonzero_homology(&lfaces, d - 1, field).is_none()
            }
        };
        memo.insert(lk.facets.clone(), ok);
        ok
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::Var;
    use proptest::prelude::*;

    #[test]
    fn field_parsing() {
        assert_eq!("q".parse::<Field>(), Ok(Field::Rationals));
        assert_eq!("p=3".parse::<Field>(), Ok(Field::Prime(3)));
        assert_eq!(Field::Prime(7).to_string().parse::<Field>(), Ok(Field::Prime(7)));
        for bad in ["p=4", "p=1", "r", "p=", "p=x"] {
            assert!(bad.parse::<Field>().is_err(), "{bad}");
        }
    }

    fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::from_facets(3, [0b011, 0b110, 0b101])
    }

    /// The 6-vertex triangulation of the real projective plane.
    fn rp2() -> SimplicialComplex {
        let tri = [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
            [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3],
        ];
        SimplicialComplex::from_facets(6, tri.iter().map(|t| t.iter().fold(0u64, |a, &v| a | 1 << v)))
    }

    #[test]
    fn unit_homology() {
        let h = reduced_homology(&hollow_triangle());
        assert_eq!(h.reduced_betti, BTreeMap::from([(-1, 0), (0, 0), (1, 1)]));
        assert!(h.torsion.is_empty());

        let two_points = SimplicialComplex::from_facets(2, [0b01, 0b10]);
        let h = reduced_homology(&two_points);
        assert_eq!(h.reduced_betti, BTreeMap::from([(-1, 0), (0, 1)]));

        let h = reduced_homology(&rp2());
        assert!(h.reduced_betti.values().all(|&b| b == 0));
        assert_eq!(h.torsion, BTreeMap::from([(1, BTreeSet::from([2]))]));
        assert_eq!(h.torsion_primes(), BTreeSet::from([2]));
    }

    #[test]
    fn reisner_examples() {
        assert!(reisner_is_cm(&SimplicialComplex::simplex(4), Field::Rationals));
        let edge_and_point = SimplicialComplex::from_facets(3, [0b011, 0b100]);
        assert!(!reisner_is_cm(&edge_and_point, Field::Rationals));
        assert!(reisner_is_cm(&hollow_triangle(), Field::Rationals));
        // RP² is CM over Q but not in characteristic 2.
        assert!(reisner_is_cm(&rp2(), Field::Rationals));
        assert!(!reisner_is_cm(&rp2(), Field::Prime(2)));
        assert!(reisner_is_cm(&rp2(), Field::Prime(3)));
    }

    #[test]
    fn stanley_reisner_examples() {
        let n = 3;
        let ini = vec![
            Monomial::from_vars(&[Var::X(1), Var::Y(2)], n),
            Monomial::from_vars(&[Var::X(2), Var::Y(3)], n),
        ];
        let c = stanley_reisner_complex(&ini, 6).unwrap();
        assert_eq!(c.facets().len(), 4);
        assert!(c.facets().iter().all(|f| f.count_ones() == 4));
        // Brute force: faces are exactly the subsets avoiding both supports.
        for m in 0u64..64 {
            let face = ini.iter().all(|g| g.support_mask() & !m != 0);
            assert_eq!(c.is_face(m), face);
        }

        assert_eq!(stanley_reisner_complex(&[], 6).unwrap(), SimplicialComplex::simplex(6));
        let c = stanley_reisner_complex(&[Monomial::var(Var::X(1), n)], 6).unwrap();
        assert_eq!(c.facets(), &[0b111110]);

        let square = Monomial::from_exponents(vec![2, 0, 0, 0, 0, 0]);
        assert!(matches!(
            stanley_reisner_complex(&[square], 6),
            Err(HomologyError::NotSquarefree(_))
        ));
    }

    #[test]
    fn cones_are_acyclic() {
        let cone = SimplicialComplex::from_facets(4, [0b1011, 0b1110, 0b1101]);
        assert!(reduced_homology(&cone).is_acyclic());
    }

    fn arb_complex() -> impl Strategy<Value = SimplicialComplex> {
        prop::collection::vec(1u64..64, 1..7).prop_map(|f| SimplicialComplex::from_facets(6, f))
    }

    proptest! {
        #[test]
        fn homology_ignores_order_and_labels(c in arb_complex(), seed in any::<u64>()) {
            use rand::{seq::SliceRandom, SeedableRng};
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            let mut perm: Vec<usize> = (0..6).collect();
            perm.shuffle(&mut rng);
            let mut facets = c.facets().to_vec();
            facets.shuffle(&mut rng);
            let shuffled = SimplicialComplex::from_facets(6, facets);
            let h = reduced_homology(&c);
            prop_assert_eq!(&reduced_homology(&shuffled), &h);
            prop_assert_eq!(&reduced_homology(&c.relabel(&perm)), &h);
        }

        #[test]
        fn simplicial_cone_is_acyclic(c in arb_complex()) {
            let apex = 1u64 << 6;
            let cone = SimplicialComplex::from_facets(7, c.facets().iter().map(|f| f | apex));
            prop_assert!(reduced_homology(&cone).is_acyclic());
        }
    }
}
