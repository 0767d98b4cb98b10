use super::ideal::SqfIdeal;
use super::{first_nonzero_homology, Field, HomologyError};
use crate::groebner::Monomial;

/// Projective dimension of `S/I` for a squarefree monomial ideal `I`, by
/// Hochster's formula: `β_{i,W}(S/I) = dim H̃_{|W|-i-1}(Δ_W)`.
pub fn projective_dimension_hochster(ini: &[Monomial], field: Field) -> Result<usize, HomologyError> {
    let mut masks = Vec::with_capacity(ini.len());
    for m in ini {
        if !m.is_squarefree() {
            return Err(HomologyError::NotSquarefree(m.display(m.nvars() / 2)));
        }
        masks.push(m.support_mask());
    }
    Ok(projective_dimension_masks(&masks, field))
}

/// Mask form of [`projective_dimension_hochster`]. Only subsets `W` that are
/// unions of generator supports can carry a Betti number, and only those
/// large enough to beat the best value found so far are examined.
pub fn projective_dimension_masks(gens: &[u64], field: Field) -> usize {
    let support = gens.iter().fold(0, |a, &g| a | g);
    let ideal = SqfIdeal::new(support, gens.iter().copied());
    if ideal.gens.is_empty() {
        return 0;
    }
    let verts: Vec<u32> = (0..64).filter(|&k| support >> k & 1 == 1).collect();
    // Any minimal generator g gives β_{1,g}.
    let mut best = 1usize;
    let mut candidates: Vec<u64> = (0u64..1 << verts.len())
        .map(|bits| {
            verts
                .iter()
                .enumerate()
                .filter(|&(k, _)| bits >> k & 1 == 1)
                .fold(0u64, |a, (_, &v)| a | 1u64 << v)
        })
        .filter(|&w| {
            let covered = ideal.gens.iter().filter(|&&g| g & !w == 0).fold(0, |a, &g| a | g);
            covered == w && w != 0
        })
        .collect();
    candidates.sort_unstable_by_key(|&w| (std::cmp::Reverse(w.count_ones()), w));
    for w in candidates {
        let size = w.count_ones() as usize;
        // i = |W| - 1 - j > best  ⟺  j ≤ |W| - 2 - best, and j ≥ -1.
        if size <= best {
            break;
        }
        let top = size as isize - 2 - best as isize;
        let restricted = ideal.restrict(w);
        let faces = restricted.faces_by_size((top + 2) as usize);
        if let Some(j) = first_nonzero_homology(&faces, top, field) {
            best = (size as isize - 1 - j) as usize;
        }
    }
    best
}
