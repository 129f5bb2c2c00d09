//! Reduced simplicial homology of full subcomplexes `K_J`, with cycle representatives
//! and the maps induced by inclusions `K_J ⊆ K_{J ∪ x}`.
//!
//! Chains are sparse vectors keyed by simplex bitmask. Because a simplex keeps its key in
//! every full subcomplex containing it, a chain of `K_J` is verbatim a chain of any
//! `K_{J'}` with `J ⊆ J'`. The augmented complex is used throughout: the empty simplex
//! (key 0) sits in degree `-1` and every vertex has boundary `∅`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::linalg::sparse::{PivotBasis, SparseVec};
use crate::linalg::{Field, FieldSpec, Matrix};
use crate::vertex_set::VertexSet;

/// Simplices of one degree of `K_J`, ascending by bitmask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainBasis {
    pub degree: i32,
    pub simplices: Vec<VertexSet>,
}

impl ChainBasis {
    pub fn new(k: &SimplicialComplex, subset: VertexSet, degree: i32) -> Self {
        let faces = FaceIndex::new(k);
        let simplices =
            if degree < -1 { Vec::new() } else { faces.within(subset, (degree + 1) as usize).collect() };
        ChainBasis { degree, simplices }
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Dense coordinates of a sparse chain in this basis.
    pub fn to_dense<F: Field>(&self, field: &F, chain: &[(u64, F::Elem)]) -> Vec<F::Elem> {
        let mut out = vec![field.zero(); self.simplices.len()];
        for (key, x) in chain {
            let i = self
                .simplices
                .binary_search(&VertexSet::from_bits(*key))
                .expect("chain supported on the basis");
            out[i] = x.clone();
        }
        out
    }
}

/// All faces of `K` grouped by cardinality, each group ascending.
#[derive(Debug, Clone)]
pub struct FaceIndex {
    by_card: Vec<Vec<VertexSet>>,
}

impl FaceIndex {
    pub fn new(k: &SimplicialComplex) -> Self {
        FaceIndex { by_card: k.faces_by_dim() }
    }

    pub fn max_card(&self) -> usize {
        self.by_card.len() - 1
    }

    /// Faces of cardinality `card` inside `subset`.
    pub fn within(&self, subset: VertexSet, card: usize) -> impl Iterator<Item = VertexSet> + '_ {
        self.by_card.get(card).into_iter().flatten().copied().filter(move |f| f.is_subset(subset))
    }

    fn cells(&self, subset: VertexSet) -> Vec<Vec<VertexSet>> {
        let mut cells = Vec::new();
        for card in 0..=self.max_card() {
            let c: Vec<VertexSet> = self.within(subset, card).collect();
            if c.is_empty() {
                break;
            }
            cells.push(c);
        }
        cells
    }
}

/// `∂[v_0..v_k] = Σ (-1)^i [v_0..v̂_i..v_k]`, keyed ascending.
pub fn boundary<F: Field>(field: &F, sigma: VertexSet) -> SparseVec<F::Elem> {
    let mut col: SparseVec<F::Elem> = sigma
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let x = if i % 2 == 0 { field.one() } else { field.neg(&field.one()) };
            (sigma.without(v).bits(), x)
        })
        .collect();
    col.reverse();
    col
}

/// Basis of `H̃_p(K_J; F)` with representatives and a decomposer modulo boundaries.
#[derive(Debug, Clone)]
pub struct HomologyBasis<F: Field> {
    subset: VertexSet,
    degree: i32,
    representatives: Vec<SparseVec<F::Elem>>,
    decomposer: PivotBasis<F>,
}

impl<F: Field> HomologyBasis<F> {
    pub fn subset(&self) -> VertexSet {
        self.subset
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn field(&self) -> FieldSpec {
        self.decomposer.field().spec()
    }

    /// Cycle representatives, keyed by simplex bitmask.
    pub fn representatives(&self) -> &[SparseVec<F::Elem>] {
        &self.representatives
    }

    /// Coordinates of the class of `cycle` in this basis, keyed by representative index.
    /// `None` when `cycle` is not a cycle of `K_J`.
    pub fn decompose_sparse(&self, cycle: &[(u64, F::Elem)]) -> Option<SparseVec<F::Elem>> {
        let mut v = cycle.to_vec();
        let mut tag = Vec::new();
        self.decomposer.reduce(&mut v, &mut tag);
        if !v.is_empty() {
            return None;
        }
        let f = self.decomposer.field();
        for (_, x) in &mut tag {
            *x = f.neg(x);
        }
        Some(tag)
    }

    pub fn decompose(&self, cycle: &[(u64, F::Elem)]) -> Option<Vec<F::Elem>> {
        let f = self.decomposer.field();
        self.decompose_sparse(cycle).map(|c| crate::linalg::sparse::densify(f, &c, self.dim()))
    }
}

/// Homology of one `K_J` in every degree where it is nonzero.
#[derive(Debug, Clone)]
pub struct SubsetHomology<F: Field> {
    pub subset: VertexSet,
    bases: Vec<HomologyBasis<F>>,
}

impl<F: Field> SubsetHomology<F> {
    /// Degrees `-1..`, nonzero only, ascending.
    pub fn bases(&self) -> &[HomologyBasis<F>] {
        &self.bases
    }

    pub fn basis(&self, degree: i32) -> Option<&HomologyBasis<F>> {
        self.bases.iter().find(|b| b.degree == degree)
    }

    pub fn is_trivial(&self) -> bool {
        self.bases.is_empty()
    }
}

/// Computes `H̃_*(K_J)`. With `keep` set, that degree gets a basis even if it is zero.
pub fn subset_homology<F: Field>(
    field: &F,
    faces: &FaceIndex,
    subset: VertexSet,
    keep: Option<i32>,
) -> SubsetHomology<F> {
    let cells = faces.cells(subset);
    let top = cells.len() - 1;
    // reductions[c] reduces the boundary of the cardinality-c cells, c >= 1
    let mut reductions: Vec<Option<PivotBasis<F>>> = vec![None];
    let mut kernels: Vec<Vec<SparseVec<F::Elem>>> = vec![vec![vec![(0, field.one())]]];
    for cells_c in cells.iter().skip(1) {
        let mut basis = PivotBasis::new(field.clone());
        let mut kernel = Vec::new();
        for &sigma in cells_c {
            if let Some(z) = basis.push(boundary(field, sigma), vec![(sigma.bits(), field.one())]) {
                kernel.push(z);
            }
        }
        reductions.push(Some(basis));
        kernels.push(kernel);
    }
    let mut bases = Vec::new();
    for (card, kernel) in kernels.into_iter().enumerate() {
        let degree = card as i32 - 1;
        let image = if card < top { reductions[card + 1].take() } else { None };
        let image_rank = image.as_ref().map_or(0, |b| b.len());
        let dim = kernel.len() - image_rank;
        if dim == 0 && keep != Some(degree) {
            continue;
        }
        let mut decomposer = match image {
            Some(b) => b.into_untagged(),
            None => PivotBasis::new(field.clone()),
        };
        let mut representatives = Vec::with_capacity(dim);
        for z in kernel {
            if representatives.len() == dim {
                break;
            }
            let tag = vec![(representatives.len() as u64, field.one())];
            if decomposer.push(z.clone(), tag).is_none() {
                representatives.push(z);
            }
        }
        bases.push(HomologyBasis { subset, degree, representatives, decomposer });
    }
    if let Some(d) = keep {
        if !bases.iter().any(|b| b.degree == d) {
            // degree outside -1..=dim K_J: no chains at all
            bases.push(HomologyBasis {
                subset,
                degree: d,
                representatives: Vec::new(),
                decomposer: PivotBasis::new(field.clone()),
            });
        }
    }
    SubsetHomology { subset, bases }
}

/// Reduced Betti numbers of `K_J`, entry `p + 1` for degree `p = -1..=dim K_J`.
pub fn subset_betti<F: Field>(field: &F, faces: &FaceIndex, subset: VertexSet) -> Vec<usize> {
    let cells = faces.cells(subset);
    let mut ranks = vec![0usize; cells.len() + 1];
    for (card, cells_c) in cells.iter().enumerate().skip(1) {
        let mut basis = PivotBasis::new(field.clone());
        for &sigma in cells_c {
            basis.push(boundary(field, sigma), Vec::new());
        }
        ranks[card] = basis.len();
    }
    cells.iter().enumerate().map(|(card, c)| c.len() - ranks[card] - ranks[card + 1]).collect()
}

/// Reduced Betti numbers of `K` itself, entry `p + 1` for `p = -1..=dim K`.
pub fn reduced_betti_numbers<F: Field>(k: &SimplicialComplex, field: &F) -> Vec<usize> {
    subset_betti(field, &FaceIndex::new(k), VertexSet::full(k.m()))
}

/// `H̃_degree(K_J; F)` with representatives.
pub fn reduced_homology<F: Field>(
    k: &SimplicialComplex,
    subset: VertexSet,
    degree: i32,
    field: &F,
) -> Result<HomologyBasis<F>> {
    if !subset.is_subset(VertexSet::full(k.m())) {
        return Err(Error::InvalidParameter(format!("{subset} is not a subset of [{}]", k.m())));
    }
    if degree < -1 {
        return Err(Error::InvalidParameter(format!("degree {degree} below -1")));
    }
    let h = subset_homology(field, &FaceIndex::new(k), subset, Some(degree));
    Ok(h.bases.into_iter().find(|b| b.degree == degree).expect("kept degree"))
}

/// Matrix of `Φ_{J,x}: H̃_p(K_J) → H̃_p(K_{J∪x})` in the bases `src` and `dst`.
pub fn induced_map<F: Field>(
    subset: VertexSet,
    x: usize,
    src: &HomologyBasis<F>,
    dst: &HomologyBasis<F>,
    field: &F,
) -> Result<Matrix<F>> {
    if subset.contains(x) {
        return Err(Error::VertexInSet { vertex: x + 1, set: subset });
    }
    if src.subset != subset || dst.subset != subset.with(x) || src.degree != dst.degree {
        return Err(Error::InvalidParameter(format!(
            "bases for ({}, {}) and ({}, {}) do not match J = {subset}, x = {}",
            src.subset,
            src.degree,
            dst.subset,
            dst.degree,
            x + 1
        )));
    }
    let mut out = Matrix::zeros(field.clone(), dst.dim(), src.dim());
    for (c, rep) in src.representatives.iter().enumerate() {
        let coords = dst.decompose_sparse(rep).expect("a cycle of K_J is a cycle of K_{J+x}");
        for (r, v) in coords {
            out.set(r as usize, c, v);
        }
    }
    Ok(out)
}

/// Nonzero reduced Betti numbers of every full subcomplex, keyed by `(J, degree)`.
pub fn betti_profile<F: Field>(
    k: &SimplicialComplex,
    field: &F,
    max_m: usize,
) -> Result<BTreeMap<(VertexSet, i32), usize>> {
    if k.m() > max_m {
        return Err(Error::CapExceeded { m: k.m(), cap: max_m });
    }
    let faces = FaceIndex::new(k);
    let all = 1u64 << k.m();
    let rows: Vec<Vec<((VertexSet, i32), usize)>> = (0..all)
        .into_par_iter()
        .map(|bits| {
            let j = VertexSet::from_bits(bits);
            subset_betti(field, &faces, j)
                .into_iter()
                .enumerate()
                .filter(|(_, b)| *b > 0)
                .map(|(i, b)| ((j, i as i32 - 1), b))
                .collect()
        })
        .collect();
    Ok(rows.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{cycle, icosahedron, octahedron, simplex, simplex_boundary};
    use crate::linalg::{Gf2, Gfp, Rationals};
    use proptest::prelude::*;

    fn vs(v: &[usize]) -> VertexSet {
        v.iter().map(|x| x - 1).collect()
    }

    #[test]
    fn boundary_signs() {
        let q = Rationals;
        let b = boundary(&q, vs(&[1, 2, 3]));
        let expect = vec![
            (vs(&[2, 3]).bits(), q.one()),
            (vs(&[1, 3]).bits(), q.from_i64(-1)),
            (vs(&[1, 2]).bits(), q.one()),
        ];
        let mut expect = expect;
        expect.sort_by_key(|e| e.0);
        assert_eq!(b, expect);
        assert_eq!(boundary(&q, vs(&[4])), vec![(0, q.one())]);
    }

    #[test]
    fn pentagon_is_a_circle() {
        let c5 = cycle(5).unwrap();
        let h = reduced_homology(&c5, VertexSet::full(5), 1, &Gf2).unwrap();
        assert_eq!(h.dim(), 1);
        assert_eq!(reduced_betti_numbers(&c5, &Rationals), vec![0, 0, 1]);
    }

    #[test]
    fn empty_subset_has_rank_one_in_degree_minus_one() {
        for k in [cycle(4).unwrap(), icosahedron(), SimplicialComplex::empty()] {
            let h = reduced_homology(&k, VertexSet::EMPTY, -1, &Gfp::new(3).unwrap()).unwrap();
            assert_eq!(h.dim(), 1);
        }
        let h = reduced_homology(&cycle(4).unwrap(), vs(&[2]), -1, &Gf2).unwrap();
        assert_eq!(h.dim(), 0);
    }

    #[test]
    fn icosahedron_top_homology_only_on_full_set() {
        let ico = icosahedron();
        let profile = betti_profile(&ico, &Gf2, 26).unwrap();
        let top: Vec<_> = profile.iter().filter(|((_, p), _)| *p == 2).collect();
        assert_eq!(top, vec![(&(VertexSet::full(12), 2), &1)]);
        for x in 0..12 {
            let j = VertexSet::full(12).without(x);
            assert_eq!(reduced_homology(&ico, j, 2, &Gf2).unwrap().dim(), 0);
            assert_eq!(reduced_homology(&ico, j, 1, &Gf2).unwrap().dim(), 0);
        }
    }

    #[test]
    fn simplex_boundary_profile() {
        let b = simplex_boundary(3).unwrap();
        let profile = betti_profile(&b, &Rationals, 26).unwrap();
        let expect: BTreeMap<_, _> =
            [((VertexSet::EMPTY, -1), 1), ((VertexSet::full(4), 2), 1)].into_iter().collect();
        assert_eq!(profile, expect);
        let cone = simplex(4).unwrap();
        assert_eq!(betti_profile(&cone, &Gf2, 26).unwrap().len(), 1);
        assert!(matches!(betti_profile(&b, &Gf2, 3), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn c4_profile() {
        let c4 = cycle(4).unwrap();
        let profile = betti_profile(&c4, &Gf2, 26).unwrap();
        let expect: BTreeMap<_, _> = [
            ((VertexSet::EMPTY, -1), 1),
            ((vs(&[1, 3]), 0), 1),
            ((vs(&[2, 4]), 0), 1),
            ((VertexSet::full(4), 1), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(profile, expect);
    }

    #[test]
    fn path_kills_two_points() {
        let c4 = cycle(4).unwrap();
        let j = vs(&[1, 3]);
        let src = reduced_homology(&c4, j, 0, &Rationals).unwrap();
        let dst = reduced_homology(&c4, vs(&[1, 2, 3]), 0, &Rationals).unwrap();
        let phi = induced_map(j, 1, &src, &dst, &Rationals).unwrap();
        assert_eq!((phi.rows(), phi.cols()), (0, 1));
        assert!(induced_map(j, 0, &src, &dst, &Rationals).is_err());
        let e = reduced_homology(&c4, VertexSet::EMPTY, -1, &Rationals).unwrap();
        let v = reduced_homology(&c4, vs(&[2]), -1, &Rationals).unwrap();
        assert!(induced_map(VertexSet::EMPTY, 1, &e, &v, &Rationals).unwrap().is_zero());
    }

    #[test]
    fn equator_bounds_in_the_cone() {
        let oct = octahedron();
        // antipodal pairs {1,2}, {3,4}, {5,6}; the equator avoiding 1 and 2
        let eq = vs(&[3, 4, 5, 6]);
        let src = reduced_homology(&oct, eq, 1, &Rationals).unwrap();
        assert_eq!(src.dim(), 1);
        let dst = reduced_homology(&oct, eq.with(0), 1, &Rationals).unwrap();
        assert_eq!(dst.dim(), 0);
        let phi = induced_map(eq, 0, &src, &dst, &Rationals).unwrap();
        assert_eq!(phi.cols(), 1);
        assert!(phi.is_zero());
        // the representative is a boundary in the cone: solve against ∂_2 of K_{J+x}
        let basis1 = ChainBasis::new(&oct, eq.with(0), 1);
        let basis2 = ChainBasis::new(&oct, eq.with(0), 2);
        let q = Rationals;
        let mut rows = vec![vec![q.zero(); basis2.len()]; basis1.len()];
        for (c, s) in basis2.simplices.iter().enumerate() {
            for (key, x) in boundary(&q, *s) {
                let r = basis1.simplices.binary_search(&VertexSet::from_bits(key)).unwrap();
                rows[r][c] = x;
            }
        }
        let d2 = Matrix::from_rows(q, rows).unwrap();
        let z = basis1.to_dense(&q, &src.representatives()[0]);
        assert!(d2.solve(&z).unwrap().is_some());
    }

    #[test]
    fn representatives_are_cycles_and_decompose_to_units() {
        let ico = icosahedron();
        let f = Gfp::new(5).unwrap();
        let faces = FaceIndex::new(&ico);
        for bits in (0u64..1 << 12).step_by(37) {
            let h = subset_homology(&f, &faces, VertexSet::from_bits(bits), None);
            for b in h.bases() {
                for (i, r) in b.representatives().iter().enumerate() {
                    let mut total: BTreeMap<u64, u32> = BTreeMap::new();
                    for (key, x) in r {
                        for (face, y) in boundary(&f, VertexSet::from_bits(*key)) {
                            let e = total.entry(face).or_insert(0);
                            *e = f.add(e, &f.mul(x, &y));
                        }
                    }
                    if b.degree() >= 0 {
                        assert!(total.values().all(|v| *v == 0));
                    }
                    let mut unit = vec![0; b.dim()];
                    unit[i] = 1;
                    assert_eq!(b.decompose(r).unwrap(), unit);
                }
            }
        }
    }

    fn euler_check<F: Field>(k: &SimplicialComplex, f: &F) {
        let faces = FaceIndex::new(k);
        for bits in 1u64..1 << k.m() {
            let j = VertexSet::from_bits(bits);
            let betti = subset_betti(f, &faces, j);
            let lhs: i64 = betti.iter().enumerate().map(|(i, b)| if i % 2 == 1 { *b as i64 } else { -(*b as i64) }).sum();
            let fv = crate::complex::f_vector(&k.restrict(j));
            let rhs: i64 = fv.0.iter().enumerate().map(|(i, c)| if i % 2 == 0 { *c as i64 } else { -(*c as i64) }).sum::<i64>() - 1;
            assert_eq!(lhs, rhs, "J = {j}");
        }
    }

    #[test]
    fn reduced_euler_characteristic() {
        euler_check(&octahedron(), &Gf2);
        euler_check(&cycle(6).unwrap(), &Rationals);
        euler_check(&icosahedron(), &Gfp::new(3).unwrap());
        let t = simplex_boundary(2).unwrap();
        euler_check(&t.join(&t).unwrap(), &Rationals);
    }

    fn random_complex(m: usize, seed: u64) -> SimplicialComplex {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut facets: Vec<VertexSet> = (0..m).map(VertexSet::singleton).collect();
        for _ in 0..rng.gen_range(2..10) {
            let size = rng.gen_range(2..=4.min(m));
            let mut s = VertexSet::EMPTY;
            while s.len() < size {
                s = s.with(rng.gen_range(0..m));
            }
            facets.push(s);
        }
        SimplicialComplex::from_facets(m, facets).unwrap()
    }

    fn functoriality<F: Field>(k: &SimplicialComplex, f: &F, j: VertexSet, x: usize, y: usize) {
        let faces = FaceIndex::new(k);
        let a = subset_homology(f, &faces, j, None);
        let b = subset_homology(f, &faces, j.with(x), None);
        let c = subset_homology(f, &faces, j.with(x).with(y), None);
        for src in a.bases() {
            let p = src.degree();
            let (Some(mid), Some(dst)) = (b.basis(p), c.basis(p)) else {
                continue;
            };
            let phi1 = induced_map(j, x, src, mid, f).unwrap();
            let phi2 = induced_map(j.with(x), y, mid, dst, f).unwrap();
            let composed = phi2.mul(&phi1).unwrap();
            for (i, rep) in src.representatives().iter().enumerate() {
                assert_eq!(dst.decompose(rep).unwrap(), composed.column(i));
            }
        }
    }

    proptest! {
        #[test]
        fn induced_maps_compose(m in 4usize..=7, seed in any::<u64>(), jbits in any::<u64>(), xs in (0usize..7, 0usize..7)) {
            let k = random_complex(m, seed);
            let (x, y) = (xs.0 % m, xs.1 % m);
            prop_assume!(x != y);
            let j = VertexSet::from_bits(jbits & VertexSet::full(m).bits()).without(x).without(y);
            functoriality(&k, &Gf2, j, x, y);
            functoriality(&k, &Gfp::new(3).unwrap(), j, x, y);
            functoriality(&k, &Rationals, j, x, y);
        }
    }
}
