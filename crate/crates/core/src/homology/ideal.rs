//! Squarefree monomial ideals as bit masks over at most 64 variables.

/// Minimal generators plus the ground set of variables. A variable outside
/// every generator is a cone point of the Stanley–Reisner complex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SqfIdeal {
    pub ground: u64,
    pub gens: Vec<u64>,
}

impl SqfIdeal {
    pub fn new(ground: u64, gens: impl IntoIterator<Item = u64>) -> Self {
        SqfIdeal {
            ground,
            gens: minimalize(gens.into_iter().collect()),
        }
    }

    pub fn is_face(&self, m: u64) -> bool {
        self.gens.iter().all(|&g| g & !m != 0)
    }

    pub fn support(&self) -> u64 {
        self.gens.iter().fold(0, |a, &g| a | g)
    }

    /// Stanley–Reisner ideal of the link of the vertex `v`.
    pub fn link(&self, v: usize) -> SqfIdeal {
        let bit = 1u64 << v;
        SqfIdeal::new(self.ground & !bit, self.gens.iter().map(|&g| g & !bit))
    }

    /// Restriction of the complex to the vertex set `w`.
    pub fn restrict(&self, w: u64) -> SqfIdeal {
        SqfIdeal {
            ground: self.ground & w,
            gens: self.gens.iter().copied().filter(|&g| g & !w == 0).collect(),
        }
    }

    /// Facets of the complex: complements of the minimal transversals.
    pub fn facets(&self) -> Vec<u64> {
        let mut f: Vec<u64> = minimal_transversals(&self.gens)
            .into_iter()
            .map(|t| self.ground & !t)
            .collect();
        f.sort_unstable();
        f
    }

    /// Faces grouped by size, sizes `0..=max_size`, each list sorted.
    pub fn faces_by_size(&self, max_size: usize) -> Vec<Vec<u64>> {
        enumerate_faces(self.ground, max_size, |m| self.is_face(m))
    }
}

/// Drops duplicates and non-minimal sets; result sorted by size, then value.
pub fn minimalize(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_unstable_by_key(|&s| (s.count_ones(), s));
    sets.dedup();
    let mut out: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !out.iter().any(|&k| k & !s == 0) {
            out.push(s);
        }
    }
    out
}

/// Minimal transversals of a hypergraph (Berge's algorithm). The empty
/// hypergraph has the single transversal `∅`.
pub fn minimal_transversals(edges: &[u64]) -> Vec<u64> {
    let mut current: Vec<u64> = vec![0];
    for &e in edges {
        if e == 0 {
            return Vec::new();
        }
        let (kept, missing): (Vec<u64>, Vec<u64>) = current.into_iter().partition(|&t| t & e != 0);
        let mut next = kept.clone();
        // An extension t+v can only be dominated by a kept transversal that
        // contains v.
        let mut bit = e;
        while bit != 0 {
            let v = bit & bit.wrapping_neg();
            bit &= bit - 1;
            let blockers: Vec<u64> = kept.iter().copied().filter(|&k| k & v != 0).collect();
            for &t in &missing {
                let cand = t | v;
                if !blockers.iter().any(|&k| k & !cand == 0) {
                    next.push(cand);
                }
            }
        }
        current = next;
    }
    current.sort_unstable();
    current
}

/// Faces of a complex on `vertices`, by size up to `max_size`, via a
/// lexicographic depth-first search.
pub fn enumerate_faces(vertices: u64, max_size: usize, is_face: impl Fn(u64) -> bool) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new(); max_size + 1];
    if !is_face(0) {
        return out;
    }
    let verts: Vec<u32> = (0..64).filter(|&k| vertices >> k & 1 == 1).collect();
    fn go(
        face: u64,
        size: usize,
        from: usize,
        verts: &[u32],
        max_size: usize,
        is_face: &dyn Fn(u64) -> bool,
        out: &mut Vec<Vec<u64>>,
    ) {
        out[size].push(face);
        if size == max_size {
            return;
        }
        for k in from..verts.len() {
            let next = face | 1u64 << verts[k];
            if is_face(next) {
                go(next, size + 1, k + 1, verts, max_size, is_face, out);
            }
        }
    }
    go(0, 0, 0, &verts, max_size, &is_face, &mut out);
    for layer in out.iter_mut() {
        layer.sort_unstable();
    }
    out
}
