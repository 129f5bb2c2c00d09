//! Sparse vectors keyed by `u64` and an incremental pivot basis over them.
//!
//! Keys are simplex bitmasks for chains and row indices for differentials. A vector's
//! pivot is its largest key, the "low" entry of the usual column reduction.

use rustc_hash::FxHashMap;

use super::field::Field;

/// Entries sorted by strictly increasing key, no stored zeros.
pub type SparseVec<E> = Vec<(u64, E)>;

/// `a -= factor * b`, using `scratch` as the merge buffer.
pub fn sub_scaled<F: Field>(
    field: &F,
    a: &mut SparseVec<F::Elem>,
    factor: &F::Elem,
    b: &[(u64, F::Elem)],
    scratch: &mut SparseVec<F::Elem>,
) {
    if b.is_empty() {
        return;
    }
    scratch.clear();
    scratch.reserve(a.len() + b.len());
    let unit = field.is_one(factor);
    let mut ia = a.drain(..).peekable();
    let mut ib = b.iter().peekable();
    loop {
        match (ia.peek(), ib.peek()) {
            (Some((ka, _)), Some((kb, _))) if ka < kb => scratch.push(ia.next().unwrap()),
            (Some((ka, _)), Some((kb, _))) if ka > kb => {
                let (k, v) = ib.next().unwrap();
                let t = if unit { v.clone() } else { field.mul(factor, v) };
                scratch.push((*k, field.neg(&t)));
            }
            (Some(_), Some(_)) => {
                let (k, va) = ia.next().unwrap();
                let (_, vb) = ib.next().unwrap();
                let t = if unit { field.sub(&va, vb) } else { field.sub(&va, &field.mul(factor, vb)) };
                if !field.is_zero(&t) {
                    scratch.push((k, t));
                }
            }
            (Some(_), None) => scratch.push(ia.next().unwrap()),
            (None, Some(_)) => {
                let (k, v) = ib.next().unwrap();
                let t = if unit { v.clone() } else { field.mul(factor, v) };
                scratch.push((*k, field.neg(&t)));
            }
            (None, None) => break,
        }
    }
    drop(ia);
    std::mem::swap(a, scratch);
}

pub fn scale<F: Field>(field: &F, v: &mut SparseVec<F::Elem>, factor: &F::Elem) {
    if field.is_one(factor) {
        return;
    }
    for (_, x) in v.iter_mut() {
        *x = field.mul(factor, x);
    }
}

/// Dense coefficient vector of length `n` from a sparse one keyed by `0..n`.
pub fn densify<F: Field>(field: &F, v: &[(u64, F::Elem)], n: usize) -> Vec<F::Elem> {
    let mut out = vec![field.zero(); n];
    for (k, x) in v {
        out[*k as usize] = x.clone();
    }
    out
}

/// Linearly independent vectors with distinct pivots, each optionally carrying a tag
/// vector that records how it was formed. Pivot coefficients are normalized to one.
#[derive(Clone, Debug)]
pub struct PivotBasis<F: Field> {
    field: F,
    index: FxHashMap<u64, u32>,
    vectors: Vec<SparseVec<F::Elem>>,
    tags: Vec<SparseVec<F::Elem>>,
}

impl<F: Field> PivotBasis<F> {
    pub fn new(field: F) -> Self {
        PivotBasis { field, index: FxHashMap::default(), vectors: Vec::new(), tags: Vec::new() }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn has_pivot(&self, key: u64) -> bool {
        self.index.contains_key(&key)
    }

    /// Pivot keys in insertion order.
    pub fn pivots(&self) -> impl Iterator<Item = u64> + '_ {
        self.vectors.iter().map(|v| v.last().expect("stored vectors are nonzero").0)
    }

    /// Eliminates pivots from the top of `v` until its low entry is free or it vanishes.
    /// The same combination is subtracted from `tag`.
    pub fn reduce(&self, v: &mut SparseVec<F::Elem>, tag: &mut SparseVec<F::Elem>) {
        let mut scratch = Vec::new();
        while let Some((low, coeff)) = v.last() {
            let Some(&slot) = self.index.get(low) else {
                break;
            };
            let factor = coeff.clone();
            let slot = slot as usize;
            sub_scaled(&self.field, v, &factor, &self.vectors[slot], &mut scratch);
            sub_scaled(&self.field, tag, &factor, &self.tags[slot], &mut scratch);
        }
    }

    /// Stores an already reduced, nonzero vector.
    pub fn insert_reduced(&mut self, mut v: SparseVec<F::Elem>, mut tag: SparseVec<F::Elem>) {
        let (low, coeff) = v.last().cloned().expect("cannot insert a zero vector");
        debug_assert!(!self.index.contains_key(&low));
        if !self.field.is_one(&coeff) {
            let inv = self.field.inv(&coeff);
            scale(&self.field, &mut v, &inv);
            scale(&self.field, &mut tag, &inv);
        }
        self.index.insert(low, self.vectors.len() as u32);
        self.vectors.push(v);
        self.tags.push(tag);
    }

    /// Drops all tags, keeping the vectors and pivots.
    pub fn into_untagged(mut self) -> Self {
        for t in &mut self.tags {
            *t = Vec::new();
        }
        self
    }

    /// Reduces `v`; if it vanishes returns the reduced tag, otherwise stores it.
    pub fn push(
        &mut self,
        mut v: SparseVec<F::Elem>,
        mut tag: SparseVec<F::Elem>,
    ) -> Option<SparseVec<F::Elem>> {
        self.reduce(&mut v, &mut tag);
        if v.is_empty() {
            Some(tag)
        } else {
            self.insert_reduced(v, tag);
            None
        }
    }
}

/// Rank of the matrix with the given columns.
/// Returns the rank and the pivot keys of the reduced columns.
pub fn rank_with_pivots<F: Field>(
    field: &F,
    columns: impl IntoIterator<Item = SparseVec<F::Elem>>,
) -> (usize, Vec<u64>) {
    let mut basis = PivotBasis::new(field.clone());
    for col in columns {
        basis.push(col, Vec::new());
    }
    let pivots = basis.pivots().collect();
    (basis.len(), pivots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{Gf2, Gfp, Matrix, Rationals};
    use proptest::prelude::*;

    fn to_sparse<F: Field>(f: &F, col: &[i64]) -> SparseVec<F::Elem> {
        col.iter()
            .enumerate()
            .filter(|(_, v)| **v != 0)
            .map(|(i, v)| (i as u64, f.from_i64(*v)))
            .filter(|(_, v)| !f.is_zero(v))
            .collect()
    }

    #[test]
    fn sub_scaled_merges() {
        let f = Gfp::new(5).unwrap();
        let mut a = vec![(1, 1), (3, 2)];
        let b = vec![(0, 1), (3, 1), (4, 4)];
        let mut s = Vec::new();
        sub_scaled(&f, &mut a, &2, &b, &mut s);
        assert_eq!(a, vec![(0, 3), (1, 1), (4, 2)]);
        let mut c = vec![(2u64, 1u8)];
        sub_scaled(&Gf2, &mut c, &1, &[(2, 1)], &mut Vec::new());
        assert!(c.is_empty());
    }

    #[test]
    fn tags_track_combinations() {
        let f = Rationals;
        let mut basis = PivotBasis::new(f);
        let cols = [vec![1, 1, 0], vec![0, 1, 1], vec![1, 2, 1]];
        let mut dep = None;
        for (i, c) in cols.iter().enumerate() {
            let tag = vec![(i as u64, f.one())];
            if let Some(t) = basis.push(to_sparse(&f, c), tag) {
                dep = Some(t);
            }
        }
        // col2 - col0 - col1 = 0
        let t = dep.unwrap();
        assert_eq!(t, vec![(0, f.from_i64(-1)), (1, f.from_i64(-1)), (2, f.one())]);
        assert_eq!(basis.len(), 2);
    }

    proptest! {
        #[test]
        fn sparse_rank_matches_dense(rows in 1usize..12, cols in 1usize..12, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let data: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| if rng.gen_bool(0.4) { rng.gen_range(-2..=2) } else { 0 }).collect()).collect();
            let columns: Vec<Vec<i64>> = (0..cols).map(|c| data.iter().map(|r| r[c]).collect()).collect();
            let q = Rationals;
            let dense = Matrix::from_i64_rows(q, &data).unwrap();
            let (r, piv) = rank_with_pivots(&q, columns.iter().map(|c| to_sparse(&q, c)));
            prop_assert_eq!(r, dense.rank());
            prop_assert_eq!(piv.len(), r);
            let g = Gfp::new(3).unwrap();
            let dense3 = Matrix::from_i64_rows(g, &data).unwrap();
            prop_assert_eq!(rank_with_pivots(&g, columns.iter().map(|c| to_sparse(&g, c))).0, dense3.rank());
            let dense2 = Matrix::from_i64_rows(Gf2, &data).unwrap();
            prop_assert_eq!(rank_with_pivots(&Gf2, columns.iter().map(|c| to_sparse(&Gf2, c))).0, dense2.rank());
        }
    }
}
