#![allow(dead_code)]

pub mod naive;

use dblhom_core::complex::{
    bicapped_antiprism, cycle, icosahedron, octahedron, simplex, simplex_boundary, sphere0,
};
use dblhom_core::{BigradedTable, SimplicialComplex, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn vs(labels: &[usize]) -> VertexSet {
    labels.iter().map(|v| v - 1).collect()
}

pub fn triangle() -> SimplicialComplex {
    simplex_boundary(2).unwrap()
}

pub fn two_octahedra() -> SimplicialComplex {
    let o = octahedron();
    o.connected_sum(&o, vs(&[1, 3, 5]), vs(&[1, 3, 5])).unwrap()
}

/// Named complexes built from the generators, all with `m <= 8`.
pub fn small_suite() -> Vec<(String, SimplicialComplex)> {
    let mut out: Vec<(String, SimplicialComplex)> = Vec::new();
    for m in 3..=8 {
        out.push((format!("C{m}"), cycle(m).unwrap()));
    }
    for n in 1..=7 {
        out.push((format!("bd simplex {n}"), simplex_boundary(n).unwrap()));
    }
    for n in 0..=4 {
        out.push((format!("simplex {n}"), simplex(n).unwrap()));
    }
    let t = triangle();
    let s0 = sphere0();
    let tet = simplex_boundary(3).unwrap();
    out.push(("S0".into(), s0.clone()));
    out.push(("octahedron".into(), octahedron()));
    out.push(("triangle * triangle".into(), t.join(&t).unwrap()));
    out.push(("C4 * S0".into(), cycle(4).unwrap().join(&s0).unwrap()));
    out.push(("C5 * S0".into(), cycle(5).unwrap().join(&s0).unwrap()));
    out.push(("C6 * S0".into(), cycle(6).unwrap().join(&s0).unwrap()));
    out.push(("antiprism 3 1".into(), bicapped_antiprism(3, 1).unwrap()));
    out.push(("tet # tet".into(), tet.connected_sum(&tet, vs(&[1, 2, 3]), vs(&[1, 2, 3])).unwrap()));
    out.push(("oct # tet".into(), octahedron().connected_sum(&tet, vs(&[1, 3, 5]), vs(&[1, 2, 3])).unwrap()));
    out.push(("C4 v C4".into(), cycle(4).unwrap().wedge(&cycle(4).unwrap(), vs(&[1]), vs(&[1])).unwrap()));
    out.push(("tet v tet along edge".into(), tet.wedge(&tet, vs(&[1, 2]), vs(&[1, 2])).unwrap()));
    let oct = octahedron();
    out.push(("octahedron minus facet".into(), oct.remove_facet(oct.facets()[0]).unwrap()));
    out.push(("C5 plus chord".into(), cycle(5).unwrap().add_face(vs(&[1, 3])).unwrap()));
    out.push(("C3 filled".into(), cycle(3).unwrap().add_face(vs(&[1, 2, 3])).unwrap()));
    out
}

/// Spheres with `m <= 12` from the generators and their connected sums and joins.
pub fn sphere_suite() -> Vec<(String, SimplicialComplex)> {
    let tet = simplex_boundary(3).unwrap();
    let oct = octahedron();
    let t = triangle();
    let s0 = sphere0();
    let mut out: Vec<(String, SimplicialComplex)> = Vec::new();
    for m in 3..=12 {
        out.push((format!("C{m}"), cycle(m).unwrap()));
    }
    for n in 1..=10 {
        out.push((format!("bd simplex {n}"), simplex_boundary(n).unwrap()));
    }
    for (n, h) in [(3, 1), (4, 1), (5, 1), (3, 2)] {
        out.push((format!("antiprism {n} {h}"), bicapped_antiprism(n, h).unwrap()));
    }
    out.push(("octahedron".into(), oct.clone()));
    out.push(("icosahedron".into(), icosahedron()));
    out.push(("two octahedra".into(), two_octahedra()));
    out.push(("tet # tet".into(), tet.connected_sum(&tet, vs(&[1, 2, 3]), vs(&[1, 2, 3])).unwrap()));
    out.push(("oct # tet".into(), oct.connected_sum(&tet, vs(&[1, 3, 5]), vs(&[1, 2, 3])).unwrap()));
    let a41 = bicapped_antiprism(4, 1).unwrap();
    out.push(("antiprism 4 1 # tet".into(), a41.connected_sum(&tet, a41.facets()[0], vs(&[1, 2, 3])).unwrap()));
    out.push(("triangle * triangle".into(), t.join(&t).unwrap()));
    for m in 4..=8 {
        out.push((format!("C{m} * S0"), cycle(m).unwrap().join(&s0).unwrap()));
    }
    out.push(("C4 * C4".into(), cycle(4).unwrap().join(&cycle(4).unwrap()).unwrap()));
    out.push(("C5 * triangle".into(), cycle(5).unwrap().join(&t).unwrap()));
    out.push(("oct * S0".into(), oct.join(&s0).unwrap()));
    let tt = t.join(&t).unwrap();
    let d4 = simplex_boundary(4).unwrap();
    out.push(("triangle * triangle # bd simplex 4".into(), tt.connected_sum(&d4, tt.facets()[0], d4.facets()[0]).unwrap()));
    out
}

/// A random complex on `m` vertices without ghost vertices.
pub fn random_complex<R: Rng>(rng: &mut R, m: usize, max_facet: usize) -> SimplicialComplex {
    let mut facets: Vec<VertexSet> = Vec::new();
    let count = rng.gen_range(1..=2 * m);
    let verts: Vec<usize> = (0..m).collect();
    for _ in 0..count {
        let size = rng.gen_range(1..=max_facet.min(m));
        facets.push(verts.choose_multiple(rng, size).copied().collect());
    }
    let covered = facets.iter().fold(VertexSet::EMPTY, |a, f| a.union(*f));
    for v in 0..m {
        if !covered.contains(v) {
            facets.push(VertexSet::singleton(v));
        }
    }
    SimplicialComplex::from_facets(m, facets).unwrap()
}

pub fn as_naive(k: &SimplicialComplex) -> naive::Naive {
    naive::Naive::new(k.m(), &k.facet_labels())
}

pub fn as_map(t: &BigradedTable) -> naive::Table {
    t.iter().map(|(b, d)| ((b.k, 2 * b.l), d)).collect()
}
