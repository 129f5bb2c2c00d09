use rayon::prelude::*;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::{induced_map, subset_homology, FaceIndex, HomologyBasis};
use crate::linalg::{Field, Matrix};
use crate::vertex_set::VertexSet;

use super::epsilon;

/// One cochain complex `CH_j^*` in dense form.
///
/// Level `l` is the direct sum of `H̃_{j-1}(K_J)` over `|J| = l`, blocks in ascending
/// subset order. `differentials[l]` maps level `l` to level `l + 1`.
#[derive(Debug, Clone)]
pub struct ChStratum<F: Field> {
    pub j: i64,
    pub levels: Vec<Vec<(VertexSet, usize)>>,
    pub differentials: Vec<Matrix<F>>,
}

impl<F: Field> ChStratum<F> {
    pub fn dim(&self, l: usize) -> usize {
        self.levels.get(l).map_or(0, |blocks| blocks.iter().map(|(_, d)| d).sum())
    }

    /// Whether `d^{l+1} d^l = 0` for every `l`.
    pub fn is_cochain_complex(&self) -> bool {
        self.differentials.windows(2).all(|w| w[1].mul(&w[0]).map(|p| p.is_zero()).unwrap_or(false))
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.differentials.iter().map(|d| d.rank()).collect()
    }

    /// `dim HH_j^l` for `l = 0..=m`.
    pub fn cohomology_dims(&self) -> Vec<usize> {
        let ranks = self.ranks();
        (0..self.levels.len())
            .map(|l| {
                let out = ranks.get(l).copied().unwrap_or(0);
                let into = if l == 0 { 0 } else { ranks.get(l - 1).copied().unwrap_or(0) };
                self.dim(l) - out - into
            })
            .collect()
    }
}

/// Assembles `CH_j^*` with blocks `ε(J, x) Φ_{J,x}`.
pub fn build_ch_stratum<F: Field>(
    k: &SimplicialComplex,
    j: i64,
    field: &F,
    max_m: usize,
) -> Result<ChStratum<F>> {
    let m = k.m();
    if m > max_m {
        return Err(Error::CapExceeded { m, cap: max_m });
    }
    let degree = (j - 1).clamp(-2, i32::MAX as i64) as i32;
    let faces = FaceIndex::new(k);
    let bases: Vec<Option<HomologyBasis<F>>> = (0..1u64 << m)
        .into_par_iter()
        .map(|bits| {
            if degree < -1 {
                return None;
            }
            let h = subset_homology(field, &faces, VertexSet::from_bits(bits), None);
            h.basis(degree).cloned()
        })
        .collect();
    let mut levels: Vec<Vec<(VertexSet, usize)>> = vec![Vec::new(); m + 1];
    for b in bases.iter().flatten() {
        levels[b.subset().len()].push((b.subset(), b.dim()));
    }
    let offset_of = |l: usize, s: VertexSet| -> Option<usize> {
        let blocks = &levels[l];
        let i = blocks.binary_search_by_key(&s.bits(), |(t, _)| t.bits()).ok()?;
        Some(blocks[..i].iter().map(|(_, d)| d).sum())
    };
    let mut differentials = Vec::with_capacity(m);
    for l in 0..m {
        let rows: usize = levels[l + 1].iter().map(|(_, d)| d).sum();
        let cols: usize = levels[l].iter().map(|(_, d)| d).sum();
        let mut d = Matrix::zeros(field.clone(), rows, cols);
        for &(s, _) in &levels[l] {
            let src = bases[s.bits() as usize].as_ref().expect("block has a basis");
            let c0 = offset_of(l, s).expect("block listed");
            for x in (0..m).filter(|x| !s.contains(*x)) {
                let t = s.with(x);
                let Some(dst) = bases[t.bits() as usize].as_ref() else {
                    continue;
                };
                let r0 = offset_of(l + 1, t).expect("block listed");
                let phi = induced_map(s, x, src, dst, field)?;
                let sign = field.from_i64(epsilon(s, x)? as i64);
                for r in 0..phi.rows() {
                    for c in 0..phi.cols() {
                        d.set(r0 + r, c0 + c, field.mul(&sign, phi.get(r, c)));
                    }
                }
            }
        }
        differentials.push(d);
    }
    Ok(ChStratum { j, levels, differentials })
}
