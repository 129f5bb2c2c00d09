use crate::error::{Error, Result};
use crate::homology::reduced_betti_numbers;
use crate::linalg::{Gf2, Rationals};
use crate::vertex_set::{subsets_of_size, VertexSet};

use super::{FVector, SimplicialComplex};

pub fn f_vector(k: &SimplicialComplex) -> FVector {
    let by_dim = k.faces_by_dim();
    FVector(by_dim.iter().skip(1).map(Vec::len).collect())
}

pub fn is_pure(k: &SimplicialComplex) -> bool {
    let n = k.facets()[0].len();
    k.facets().iter().all(|f| f.len() == n)
}

/// Pure, and every codimension-one face lies in exactly two facets.
pub fn is_pseudomanifold(k: &SimplicialComplex) -> bool {
    if !is_pure(k) || k.dim() < 0 {
        return false;
    }
    let mut ridges: Vec<VertexSet> =
        k.facets().iter().flat_map(|f| f.iter().map(move |v| f.without(v))).collect();
    ridges.sort_unstable();
    ridges.chunk_by(|a, b| a == b).all(|run| run.len() == 2)
}

/// Whether the 1-skeleton restricted to the present vertices is connected.
pub fn is_connected(k: &SimplicialComplex) -> bool {
    let verts = k.vertex_set();
    let Some(start) = verts.min() else {
        return false;
    };
    let mut seen = VertexSet::singleton(start);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for f in k.facets() {
            if !f.intersection(frontier).is_empty() {
                next = next.union(*f);
            }
        }
        frontier = next.difference(seen);
        seen = seen.union(next);
    }
    seen == verts
}

/// Homology-sphere proxy: pure pseudomanifold, connected when `dim >= 1`, without ghost
/// vertices, with the reduced homology of `S^dim` over both `Q` and `GF(2)`.
///
/// Exact as a sphere test up to dimension 2; in higher dimensions it accepts homology
/// spheres.
pub fn is_sphere_proxy(k: &SimplicialComplex) -> (bool, i32) {
    let n = k.dim();
    let ok = n >= 0
        && !k.has_ghost_vertices()
        && is_pseudomanifold(k)
        && (n == 0 || is_connected(k))
        && has_sphere_homology(k, n);
    (ok, n)
}

fn has_sphere_homology(k: &SimplicialComplex, n: i32) -> bool {
    let expected: Vec<usize> = (-1..=n).map(|p| usize::from(p == n)).collect();
    reduced_betti_numbers(k, &Gf2) == expected && reduced_betti_numbers(k, &Rationals) == expected
}

/// Every `(p+1)`-subset of `[m]` is a face.
pub fn is_p_neighborly(k: &SimplicialComplex, p: usize) -> bool {
    if p + 1 > k.m() {
        return true;
    }
    subsets_of_size(k.m(), p + 1).all(|s| k.contains(s))
}

/// Largest `p` for which `K` is `p`-neighborly, capped at `m - 1`.
pub fn max_neighborliness(k: &SimplicialComplex) -> usize {
    let mut p = 0;
    while p + 1 < k.m() && is_p_neighborly(k, p + 1) {
        p += 1;
    }
    p
}

/// Whether `K = K¹ ∪ K²` with `K¹ ∩ K² = ⟨σ⟩` for proper subcomplexes containing `σ`.
///
/// Facets other than `σ` form a graph, adjacent when they share a face not contained in
/// `σ`. Each component together with `⟨σ⟩` generates a subcomplex, and any two of these
/// meet exactly in `⟨σ⟩`, so `K` splits iff there are at least two components.
pub fn is_wedge_decomposable_along(k: &SimplicialComplex, sigma: VertexSet) -> bool {
    if !k.contains(sigma) {
        return false;
    }
    let nodes: Vec<VertexSet> = k.facets().iter().copied().filter(|f| *f != sigma).collect();
    if nodes.len() < 2 {
        return false;
    }
    let mut component = vec![usize::MAX; nodes.len()];
    component[0] = 0;
    let mut stack = vec![0];
    let mut reached = 1;
    while let Some(i) = stack.pop() {
        for (j, g) in nodes.iter().enumerate() {
            if component[j] == usize::MAX && !nodes[i].intersection(*g).is_subset(sigma) {
                component[j] = 0;
                reached += 1;
                stack.push(j);
            }
        }
    }
    reached < nodes.len()
}

/// `(n+1)`-sets that are not faces although their whole boundary is.
pub fn missing_facets(k: &SimplicialComplex) -> Vec<VertexSet> {
    let size = (k.dim() + 1) as usize;
    if size == 0 || size > k.m() {
        return Vec::new();
    }
    subsets_of_size(k.m(), size)
        .filter(|s| !k.contains(*s) && s.iter().all(|v| k.contains(s.without(v))))
        .collect()
}

/// A sphere is primitive iff it is not a connected sum of two spheres of its dimension,
/// i.e. no missing facet `S` makes `K ∪ {S}` wedge-decomposable along `S`.
pub fn is_primitive_sphere(k: &SimplicialComplex) -> Result<bool> {
    if !is_sphere_proxy(k).0 {
        return Err(Error::NotASphere);
    }
    for s in missing_facets(k) {
        let closed = k.add_face(s)?;
        if is_wedge_decomposable_along(&closed, s) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `K = ∂Δ^{m-1}`: the facets are exactly the `(m-1)`-subsets of `[m]`.
pub fn is_simplex_boundary(k: &SimplicialComplex) -> bool {
    let m = k.m();
    m >= 2 && k.facets().len() == m && k.facets().iter().all(|f| f.len() == m - 1)
}

/// Vertex sets `J` with `|J| >= 3` whose full subcomplex `K_J` is a cycle graph.
/// Enumerates all `2^m` subsets.
pub fn induced_cycles(k: &SimplicialComplex) -> Vec<VertexSet> {
    let m = k.m();
    let nbrs: Vec<VertexSet> = (0..m).map(|x| k.neighbors(x)).collect();
    let triangles: Vec<VertexSet> = {
        let mut t: Vec<VertexSet> =
            k.facets().iter().filter(|f| f.len() >= 3).flat_map(|f| f.subsets().filter(|s| s.len() == 3)).collect();
        t.sort_unstable();
        t.dedup();
        t
    };
    let mut out = Vec::new();
    for size in 3..=m {
        for j in subsets_of_size(m, size) {
            if j.iter().any(|x| nbrs[x].intersection(j).len() != 2) {
                continue;
            }
            if triangles.iter().any(|t| t.is_subset(j)) {
                continue;
            }
            if is_connected(&k.restrict(j)) {
                out.push(j);
            }
        }
    }
    out
}
