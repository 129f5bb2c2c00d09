//! Simplicial complexes on the vertex range `0..m`, stored by their facets.
//!
//! A complex is kept in canonical form: facets are inclusion-maximal, deduplicated and
//! sorted by bitmask value. Two complexes are equal iff their canonical forms are equal,
//! so no isomorphism testing is ever attempted.

mod generate;
mod predicates;

pub use generate::*;
pub use predicates::*;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialComplex {
    m: usize,
    facets: Vec<VertexSet>,
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SimplicialComplex(m={}, facets=", self.m)?;
        f.debug_list().entries(self.facets.iter()).finish()?;
        write!(f, ")")
    }
}

/// Number of `i`-simplices for `i = 0..=dim`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }
}

/// Inclusion-maximal elements of `sets`, deduplicated and sorted by bitmask value.
pub(crate) fn maximal_sets(sets: impl IntoIterator<Item = VertexSet>) -> Vec<VertexSet> {
    let mut all: Vec<VertexSet> = sets.into_iter().collect();
    all.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    all.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(all.len());
    for s in all {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    if kept.is_empty() {
        kept.push(VertexSet::EMPTY);
    }
    kept.sort_unstable();
    kept
}

impl SimplicialComplex {
    /// Builds a complex on `0..m` from generating faces. Every vertex must appear.
    pub fn from_facets(m: usize, facets: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        let k = Self::from_facets_allow_ghosts(m, facets)?;
        if let Some(v) = VertexSet::full(m).difference(k.vertex_set()).min() {
            return Err(Error::GhostVertex { vertex: v + 1 });
        }
        Ok(k)
    }

    /// Like [`from_facets`](Self::from_facets) but vertices of `0..m` may be absent.
    /// Full subcomplexes and links are represented this way, keeping their labels.
    pub fn from_facets_allow_ghosts(
        m: usize,
        facets: impl IntoIterator<Item = VertexSet>,
    ) -> Result<Self> {
        if m > MAX_VERTICES {
            return Err(Error::TooManyVertices { m, max: MAX_VERTICES });
        }
        let range = VertexSet::full(m);
        let facets: Vec<VertexSet> = facets.into_iter().collect();
        for f in &facets {
            if let Some(v) = f.difference(range).max() {
                return Err(Error::VertexOutOfRange { vertex: v + 1, m });
            }
        }
        Ok(Self::canonical(m, facets))
    }

    /// Builds from 1-based facet lists, inferring `m` from the largest label when absent.
    pub fn from_labels(m: Option<usize>, facets: &[Vec<usize>]) -> Result<Self> {
        let inferred = facets.iter().flatten().copied().max().unwrap_or(0);
        let m = m.unwrap_or(inferred);
        let mut sets = Vec::with_capacity(facets.len());
        for f in facets {
            let mut s = VertexSet::EMPTY;
            for &v in f {
                if v == 0 || v > m || v > MAX_VERTICES {
                    return Err(Error::VertexOutOfRange { vertex: v, m });
                }
                s = s.with(v - 1);
            }
            sets.push(s);
        }
        Self::from_facets(m, sets)
    }

    pub(crate) fn canonical(m: usize, facets: Vec<VertexSet>) -> Self {
        SimplicialComplex { m, facets: maximal_sets(facets) }
    }

    /// The complex `{∅}` on zero vertices.
    pub fn empty() -> Self {
        SimplicialComplex { m: 0, facets: vec![VertexSet::EMPTY] }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn has_ghost_vertices(&self) -> bool {
        self.vertex_set() != VertexSet::full(self.m)
    }

    /// Dimension; `-1` for `{∅}`.
    pub fn dim(&self) -> i32 {
        self.facets.iter().map(|f| f.len() as i32).max().unwrap_or(0) - 1
    }

    pub fn contains(&self, face: VertexSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    pub fn is_facet(&self, face: VertexSet) -> bool {
        self.facets.binary_search(&face).is_ok()
    }

    /// Every face including `∅`, sorted by bitmask value.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut all = BTreeSet::new();
        for f in &self.facets {
            all.extend(f.subsets());
        }
        all.into_iter().collect()
    }

    /// Faces grouped by dimension: entry `d + 1` holds the `d`-faces, starting at `d = -1`.
    pub fn faces_by_dim(&self) -> Vec<Vec<VertexSet>> {
        let top = (self.dim() + 1) as usize;
        let mut out = vec![Vec::new(); top + 1];
        for f in self.faces() {
            out[f.len()].push(f);
        }
        out
    }

    /// SHA-256 over `m` and the canonical facet list, hex encoded.
    pub fn hash(&self) -> String {
        let mut h = Sha256::new();
        h.update((self.m as u64).to_le_bytes());
        h.update((self.facets.len() as u64).to_le_bytes());
        for f in &self.facets {
            h.update(f.bits().to_le_bytes());
        }
        hex::encode(h.finalize())
    }

    /// 1-based facet lists in canonical order.
    pub fn facet_labels(&self) -> Vec<Vec<usize>> {
        self.facets.iter().filter(|f| !f.is_empty()).map(|f| f.labels()).collect()
    }

    /// The full subcomplex `K_J = {σ ∈ K : σ ⊆ J}`. Labels are kept; vertices outside
    /// `J` become ghosts. See [`relabel_compact`](Self::relabel_compact) to drop them.
    pub fn restrict(&self, subset: VertexSet) -> SimplicialComplex {
        let subset = subset.intersection(VertexSet::full(self.m));
        Self::canonical(self.m, self.facets.iter().map(|f| f.intersection(subset)).collect())
    }

    /// Renumbers the present vertices to `0..n` preserving order. The returned map sends
    /// each new vertex to its old one.
    pub fn relabel_compact(&self) -> (SimplicialComplex, Vec<usize>) {
        let map: Vec<usize> = self.vertex_set().iter().collect();
        let mut inverse = [usize::MAX; MAX_VERTICES];
        for (new, &old) in map.iter().enumerate() {
            inverse[old] = new;
        }
        let facets = self
            .facets
            .iter()
            .map(|f| f.iter().map(|v| inverse[v]).collect::<VertexSet>())
            .collect();
        (Self::canonical(map.len(), facets), map)
    }

    /// `lk(σ) = {τ ∈ K : σ ∩ τ = ∅, σ ∪ τ ∈ K}`, labels kept.
    pub fn link(&self, sigma: VertexSet) -> Result<SimplicialComplex> {
        if !self.contains(sigma) {
            return Err(Error::NotAFace(sigma));
        }
        let facets = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset(**f))
            .map(|f| f.difference(sigma))
            .collect();
        Ok(Self::canonical(self.m, facets))
    }

    /// `sk_d(K)`: faces of cardinality at most `d + 1`.
    pub fn skeleton(&self, d: usize) -> SimplicialComplex {
        let size = d + 1;
        let mut out = BTreeSet::new();
        for &f in &self.facets {
            if f.len() <= size {
                out.insert(f);
            } else {
                out.extend(f.subsets().filter(|s| s.len() == size));
            }
        }
        Self::canonical(self.m, out.into_iter().collect())
    }

    /// Neighbour set of `x` in the 1-skeleton.
    pub fn neighbors(&self, x: usize) -> VertexSet {
        self.facets
            .iter()
            .filter(|f| f.contains(x))
            .fold(VertexSet::EMPTY, |acc, f| acc.union(*f))
            .without(x)
    }

    /// `deg(x) = |V(lk({x}))|`.
    pub fn degree(&self, x: usize) -> Result<usize> {
        if x >= self.m || !self.contains(VertexSet::singleton(x)) {
            return Err(Error::NotAFace(VertexSet::singleton(x.min(MAX_VERTICES - 1))));
        }
        Ok(self.neighbors(x).len())
    }

    /// Minimum vertex degree over the present vertices; `None` for `{∅}`.
    pub fn min_degree(&self) -> Option<usize> {
        self.vertex_set().iter().map(|x| self.neighbors(x).len()).min()
    }

    /// `K1 * K2` on `0..m1+m2`, with `K2` shifted by `m1`.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let m = self.m + other.m;
        if m > MAX_VERTICES {
            return Err(Error::TooManyVertices { m, max: MAX_VERTICES });
        }
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for &a in &self.facets {
            for &b in &other.facets {
                facets.push(a.union(b.shifted(self.m)));
            }
        }
        Ok(Self::canonical(m, facets))
    }

    /// Glues `other` onto `self` identifying `face2[i]` with `face1[i]`. Vertices of
    /// `other` outside `face2` are numbered after `self`'s, in ascending order.
    /// The result is the union; both faces must be faces of their complexes.
    pub fn wedge_paired(
        &self,
        other: &SimplicialComplex,
        face1: &[usize],
        face2: &[usize],
    ) -> Result<SimplicialComplex> {
        if face1.len() != face2.len() {
            return Err(Error::GluingMismatch(face1.len(), face2.len()));
        }
        let s1: VertexSet = face1.iter().copied().collect();
        let s2: VertexSet = face2.iter().copied().collect();
        if s1.len() != face1.len() || s2.len() != face2.len() {
            return Err(Error::InvalidParameter("gluing face repeats a vertex".into()));
        }
        if !self.contains(s1) || face1.iter().any(|&v| v >= self.m) {
            return Err(Error::NotAFace(s1));
        }
        if !other.contains(s2) || face2.iter().any(|&v| v >= other.m) {
            return Err(Error::NotAFace(s2));
        }
        let m = self.m + other.m - face1.len();
        if m > MAX_VERTICES {
            return Err(Error::TooManyVertices { m, max: MAX_VERTICES });
        }
        let mut map = vec![usize::MAX; other.m];
        for (a, b) in face1.iter().zip(face2) {
            map[*b] = *a;
        }
        let mut next = self.m;
        for slot in map.iter_mut().filter(|s| **s == usize::MAX) {
            *slot = next;
            next += 1;
        }
        let mut facets = self.facets.clone();
        facets.extend(other.facets.iter().map(|f| f.iter().map(|v| map[v]).collect::<VertexSet>()));
        Ok(Self::canonical(m, facets))
    }

    /// `K1 ⊔_σ K2` with order-preserving identification of the two faces.
    pub fn wedge(
        &self,
        other: &SimplicialComplex,
        face1: VertexSet,
        face2: VertexSet,
    ) -> Result<SimplicialComplex> {
        let a: Vec<usize> = face1.iter().collect();
        let b: Vec<usize> = face2.iter().collect();
        self.wedge_paired(other, &a, &b)
    }

    /// `K1 #_σ K2` along facets glued by the explicit pairing `face2[i] ↦ face1[i]`.
    pub fn connected_sum_paired(
        &self,
        other: &SimplicialComplex,
        face1: &[usize],
        face2: &[usize],
    ) -> Result<SimplicialComplex> {
        let s1: VertexSet = face1.iter().copied().collect();
        let s2: VertexSet = face2.iter().copied().collect();
        if !self.is_facet(s1) {
            return Err(Error::NotAFacet(s1));
        }
        if !other.is_facet(s2) {
            return Err(Error::NotAFacet(s2));
        }
        let glued = self.wedge_paired(other, face1, face2)?;
        glued.remove_facet(s1)
    }

    /// `K1 #_σ K2` with order-preserving identification of the two facets.
    pub fn connected_sum(
        &self,
        other: &SimplicialComplex,
        facet1: VertexSet,
        facet2: VertexSet,
    ) -> Result<SimplicialComplex> {
        if facet1.len() != facet2.len() {
            return Err(Error::GluingMismatch(facet1.len(), facet2.len()));
        }
        let a: Vec<usize> = facet1.iter().collect();
        let b: Vec<usize> = facet2.iter().collect();
        self.connected_sum_paired(other, &a, &b)
    }

    /// `K ∪ {S}`; requires `∂S ⊆ K` and `S ∉ K`.
    pub fn add_face(&self, s: VertexSet) -> Result<SimplicialComplex> {
        if let Some(v) = s.difference(VertexSet::full(self.m)).max() {
            return Err(Error::VertexOutOfRange { vertex: v + 1, m: self.m });
        }
        if self.contains(s) {
            return Err(Error::AlreadyAFace(s));
        }
        if s.iter().any(|v| !self.contains(s.without(v))) {
            return Err(Error::BoundaryMissing(s));
        }
        let mut facets: Vec<VertexSet> =
            self.facets.iter().copied().filter(|f| !f.is_subset(s)).collect();
        facets.push(s);
        Ok(Self::canonical(self.m, facets))
    }

    /// `K \ {σ}` for a facet `σ`; its codimension-one faces stay in the complex.
    pub fn remove_facet(&self, sigma: VertexSet) -> Result<SimplicialComplex> {
        if !self.is_facet(sigma) {
            return Err(Error::NotAFacet(sigma));
        }
        let mut facets: Vec<VertexSet> =
            self.facets.iter().copied().filter(|f| *f != sigma).collect();
        facets.extend(sigma.iter().map(|v| sigma.without(v)));
        Ok(Self::canonical(self.m, facets))
    }
}
