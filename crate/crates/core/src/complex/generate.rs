use crate::error::{Error, Result};
use crate::vertex_set::{subsets_of_size, VertexSet, MAX_VERTICES};

use super::{is_sphere_proxy, SimplicialComplex};

fn check_m(m: usize) -> Result<()> {
    if m > MAX_VERTICES {
        Err(Error::TooManyVertices { m, max: MAX_VERTICES })
    } else {
        Ok(())
    }
}

/// The `m`-cycle `C_m`, a 1-sphere with edges `{i, i+1}` and `{1, m}`.
pub fn cycle(m: usize) -> Result<SimplicialComplex> {
    if m < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs m >= 3, got {m}")));
    }
    check_m(m)?;
    let edges = (0..m).map(|i| VertexSet::from_vertices([i, (i + 1) % m]));
    SimplicialComplex::from_facets(m, edges)
}

/// The full simplex `Δ^n` on `n + 1` vertices.
pub fn simplex(n: usize) -> Result<SimplicialComplex> {
    check_m(n + 1)?;
    SimplicialComplex::from_facets(n + 1, [VertexSet::full(n + 1)])
}

/// `∂Δ^n`: all `n`-subsets of `n + 1` vertices.
pub fn simplex_boundary(n: usize) -> Result<SimplicialComplex> {
    if n < 1 {
        return Err(Error::InvalidParameter("simplex boundary needs n >= 1".into()));
    }
    check_m(n + 1)?;
    SimplicialComplex::from_facets(n + 1, subsets_of_size(n + 1, n))
}

/// `S^0`: two isolated points.
pub fn sphere0() -> SimplicialComplex {
    SimplicialComplex::canonical(2, vec![VertexSet::singleton(0), VertexSet::singleton(1)])
}

/// The octahedron `S^0 * S^0 * S^0`; vertex pairs `{1,2}`, `{3,4}`, `{5,6}` are antipodal.
pub fn octahedron() -> SimplicialComplex {
    let s0 = sphere0();
    s0.join(&s0).and_then(|k| k.join(&s0)).expect("6 vertices")
}

const ICOSAHEDRON: [[usize; 3]; 20] = [
    [1, 2, 3],
    [1, 2, 5],
    [1, 3, 6],
    [1, 4, 5],
    [1, 4, 6],
    [2, 3, 8],
    [2, 5, 7],
    [2, 7, 8],
    [3, 6, 9],
    [3, 8, 9],
    [4, 5, 12],
    [4, 6, 11],
    [4, 11, 12],
    [5, 7, 12],
    [6, 9, 11],
    [7, 8, 10],
    [7, 10, 12],
    [8, 9, 10],
    [9, 10, 11],
    [10, 11, 12],
];

/// The icosahedron on 12 vertices, read off a planar drawing: 1, 2, 3 are the outer
/// triangle, 10, 11, 12 the innermost one.
pub fn icosahedron() -> SimplicialComplex {
    let facets: Vec<Vec<usize>> = ICOSAHEDRON.iter().map(|f| f.to_vec()).collect();
    SimplicialComplex::from_labels(Some(12), &facets).expect("fixed facet list")
}

/// Bicapped `n`-gonal `h`-antiprism.
///
/// Rings `c^0..c^h` of `n` vertices each (`c^r_i` is vertex `r*n + i`), band triangles
/// `{c^r_i, c^r_{i+1}, c^{r+1}_i}` and `{c^{r+1}_i, c^{r+1}_{i+1}, c^r_{i+1}}` with indices
/// mod `n`, then apex `u = n(h+1)` coned over `c^0` and apex `v = n(h+1)+1` over `c^h`.
pub fn bicapped_antiprism(n: usize, h: usize) -> Result<SimplicialComplex> {
    if n < 3 || h < 1 {
        return Err(Error::InvalidParameter(format!(
            "bicapped antiprism needs n >= 3 and h >= 1, got n={n}, h={h}"
        )));
    }
    let m = n * (h + 1) + 2;
    check_m(m)?;
    let c = |r: usize, i: usize| r * n + i % n;
    let (u, v) = (m - 2, m - 1);
    let mut facets = Vec::with_capacity(2 * n * (h + 1));
    for r in 0..h {
        for i in 0..n {
            facets.push(VertexSet::from_vertices([c(r, i), c(r, i + 1), c(r + 1, i)]));
            facets.push(VertexSet::from_vertices([c(r + 1, i), c(r + 1, i + 1), c(r, i + 1)]));
        }
    }
    for i in 0..n {
        facets.push(VertexSet::from_vertices([c(0, i), c(0, i + 1), u]));
        facets.push(VertexSet::from_vertices([c(h, i), c(h, i + 1), v]));
    }
    SimplicialComplex::from_facets(m, facets)
}

/// Wraps a caller-supplied facet list for the augmented icosahedron.
///
/// No construction is attempted here: the facet list must come from the caller. The
/// input is only checked to be a 2-sphere of minimal degree 5.
pub fn augmented_icosahedron(facets: &[Vec<usize>]) -> Result<SimplicialComplex> {
    let k = SimplicialComplex::from_labels(None, facets)?;
    let (ok, dim) = is_sphere_proxy(&k);
    if !ok || dim != 2 {
        return Err(Error::NotASphere);
    }
    if k.min_degree() != Some(5) {
        return Err(Error::InvalidParameter("expected minimal degree 5".into()));
    }
    Ok(k)
}
