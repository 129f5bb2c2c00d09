//! Brute-force reference implementation.
//!
//! Dense boundary matrices for every full subcomplex, dense differentials assembled block
//! by block, and plain Gauss-Jordan elimination. Scalars are exact rationals, reduced mod p
//! after every operation for prime fields. Nothing here touches the library's arithmetic.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

type E = BigRational;

#[derive(Clone, Debug)]
pub enum Coeff {
    Mod(u64),
    Q,
}

impl Coeff {
    pub fn parse(s: &str) -> Coeff {
        match s {
            "q" => Coeff::Q,
            "gf2" => Coeff::Mod(2),
            other => Coeff::Mod(other.trim_start_matches("gfp:").parse().expect("prime")),
        }
    }

    fn norm(&self, x: E) -> E {
        match self {
            Coeff::Q => x,
            Coeff::Mod(p) => {
                let p = BigInt::from(*p);
                let n = x.numer().mod_floor(&p);
                if x.denom().is_one() {
                    return E::from_integer(n);
                }
                let d = x.denom().mod_floor(&p);
                let inv = d.modpow(&(&p - 2u32), &p);
                E::from_integer((n * inv).mod_floor(&p))
            }
        }
    }

    fn int(&self, v: i64) -> E {
        self.norm(E::from_integer(BigInt::from(v)))
    }
}

type Mat = Vec<Vec<E>>;

/// Reduced row echelon form in place; returns pivot columns.
fn rref(c: &Coeff, a: &mut Mat, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(r) = (row..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, r);
        let inv = c.norm(E::one() / a[row][col].clone());
        for x in a[row].iter_mut() {
            *x = c.norm(x.clone() * inv.clone());
        }
        for r in 0..a.len() {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for k in 0..ncols {
                    let t = c.norm(a[r][k].clone() - f.clone() * a[row][k].clone());
                    a[r][k] = t;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == a.len() {
            break;
        }
    }
    pivots
}

fn rank(c: &Coeff, a: &Mat, ncols: usize) -> usize {
    let mut a = a.clone();
    rref(c, &mut a, ncols).len()
}

/// Matrix whose columns are the given vectors (each of length `n`).
fn from_columns(cols: &[Vec<E>], n: usize) -> Mat {
    (0..n).map(|i| cols.iter().map(|v| v[i].clone()).collect()).collect()
}

fn nullspace(c: &Coeff, a: &Mat, ncols: usize) -> Vec<Vec<E>> {
    let mut r = a.clone();
    let pivots = rref(c, &mut r, ncols);
    let free: Vec<usize> = (0..ncols).filter(|j| !pivots.contains(j)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![E::zero(); ncols];
            v[f] = E::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = c.norm(-r[i][f].clone());
            }
            v
        })
        .collect()
}

/// Some solution of `A x = b` for `A` given by columns, if one exists.
fn solve(c: &Coeff, cols: &[Vec<E>], b: &[E]) -> Option<Vec<E>> {
    let n = b.len();
    let mut aug: Mat = (0..n)
        .map(|i| cols.iter().map(|v| v[i].clone()).chain([b[i].clone()]).collect())
        .collect();
    let pivots = rref(c, &mut aug, cols.len() + 1);
    if pivots.last() == Some(&cols.len()) {
        return None;
    }
    let mut x = vec![E::zero(); cols.len()];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = aug[i][cols.len()].clone();
    }
    Some(x)
}

/// A complex on vertices `0..m` stored as the set of all its faces, empty face included.
pub struct Naive {
    pub m: usize,
    faces: BTreeSet<Vec<usize>>,
}

impl Naive {
    /// `facets` use 1-based labels.
    pub fn new(m: usize, facets: &[Vec<usize>]) -> Naive {
        let mut faces = BTreeSet::new();
        faces.insert(Vec::new());
        for f in facets {
            let f: Vec<usize> = f.iter().map(|v| v - 1).collect();
            for bits in 0u32..(1 << f.len()) {
                let mut face: Vec<usize> =
                    (0..f.len()).filter(|i| bits >> i & 1 == 1).map(|i| f[i]).collect();
                face.sort();
                faces.insert(face);
            }
        }
        Naive { m, faces }
    }

    pub fn dim(&self) -> i64 {
        self.faces.iter().map(|f| f.len() as i64 - 1).max().unwrap_or(-1)
    }

    fn chains(&self, subset: &[usize], p: i64) -> Vec<Vec<usize>> {
        self.faces
            .iter()
            .filter(|f| f.len() as i64 == p + 1 && f.iter().all(|v| subset.contains(v)))
            .cloned()
            .collect()
    }

    /// Matrix of `∂: C_p → C_{p-1}` with rows indexed by `lower` and columns by `upper`.
    fn boundary(c: &Coeff, upper: &[Vec<usize>], lower: &[Vec<usize>]) -> Mat {
        let mut a = vec![vec![E::zero(); upper.len()]; lower.len()];
        for (col, s) in upper.iter().enumerate() {
            for i in 0..s.len() {
                let mut face = s.clone();
                face.remove(i);
                let row = lower.iter().position(|t| *t == face).expect("face of a face");
                a[row][col] = c.int(if i % 2 == 0 { 1 } else { -1 });
            }
        }
        a
    }
}

/// Reduced homology of one full subcomplex in one degree, with representative cycles.
struct Block {
    chains: Vec<Vec<usize>>,
    reps: Vec<Vec<E>>,
    image: Vec<Vec<E>>,
}

impl Block {
    fn compute(c: &Coeff, k: &Naive, subset: &[usize], p: i64) -> Block {
        let chains = k.chains(subset, p);
        let below = if p >= 0 { k.chains(subset, p - 1) } else { Vec::new() };
        let above = k.chains(subset, p + 1);
        let cycles: Vec<Vec<E>> = if below.is_empty() {
            (0..chains.len())
                .map(|i| (0..chains.len()).map(|j| if i == j { E::one() } else { E::zero() }).collect())
                .collect()
        } else {
            nullspace(c, &Naive::boundary(c, &chains, &below), chains.len())
        };
        let d_up = Naive::boundary(c, &above, &chains);
        let image: Vec<Vec<E>> = (0..above.len()).map(|j| d_up.iter().map(|r| r[j].clone()).collect()).collect();
        // pivot columns of [image | cycles] past the image pick a complement greedily
        let span: Vec<Vec<E>> = image.iter().chain(&cycles).cloned().collect();
        let mut a = from_columns(&span, chains.len());
        let pivots = rref(c, &mut a, span.len());
        let reps = pivots.into_iter().filter(|&j| j >= image.len()).map(|j| cycles[j - image.len()].clone()).collect();
        Block { chains, reps, image }
    }

    /// Coordinates in `reps` of a cycle given on `faces`.
    fn coords(&self, c: &Coeff, faces: &[Vec<usize>], cycle: &[E]) -> Vec<E> {
        let mut v = vec![E::zero(); self.chains.len()];
        for (f, x) in faces.iter().zip(cycle) {
            let i = self.chains.iter().position(|g| g == f).expect("chain of a subcomplex");
            v[i] = x.clone();
        }
        let cols: Vec<Vec<E>> = self.reps.iter().chain(&self.image).cloned().collect();
        let x = solve(c, &cols, &v).expect("not a cycle");
        x[..self.reps.len()].to_vec()
    }
}

fn subsets(m: usize) -> Vec<Vec<usize>> {
    (0u32..1 << m).map(|b| (0..m).filter(|i| b >> i & 1 == 1).collect()).collect()
}

/// `(k, 2l) -> dim` with `k = j - l` and `j = p + 1`.
pub type Table = BTreeMap<(i64, usize), usize>;

fn key(p: i64, l: usize) -> (i64, usize) {
    (p + 1 - l as i64, 2 * l)
}

pub fn hochster(c: &Coeff, k: &Naive) -> Table {
    let mut out = Table::new();
    for s in subsets(k.m) {
        for p in -1..=k.dim() {
            let b = Block::compute(c, k, &s, p);
            if !b.reps.is_empty() {
                *out.entry(key(p, s.len())).or_insert(0) += b.reps.len();
            }
        }
    }
    out
}

/// The dense cochain complex `CH_{p+1}^*`: level dimensions and differentials.
pub fn stratum(c: &Coeff, k: &Naive, p: i64) -> (Vec<usize>, Vec<Mat>) {
    let all = subsets(k.m);
    let blocks: Vec<Block> = all.iter().map(|s| Block::compute(c, k, s, p)).collect();
    let by_level = |l: usize| -> Vec<usize> {
        let mut idx: Vec<usize> = (0..all.len()).filter(|&i| all[i].len() == l && !blocks[i].reps.is_empty()).collect();
        idx.sort_by_key(|&i| all[i].iter().map(|v| 1u64 << v).sum::<u64>());
        idx
    };
    let dims: Vec<usize> = (0..=k.m).map(|l| by_level(l).iter().map(|&i| blocks[i].reps.len()).sum()).collect();
    let mut diffs = Vec::new();
    for l in 0..k.m {
        let src = by_level(l);
        let dst = by_level(l + 1);
        let mut d = vec![vec![E::zero(); dims[l]]; dims[l + 1]];
        let mut c0 = 0;
        for &i in &src {
            let mut r0 = 0;
            for &t in &dst {
                let s = &all[i];
                let extra: Vec<usize> = all[t].iter().copied().filter(|v| !s.contains(v)).collect();
                if extra.len() == 1 && s.iter().all(|v| all[t].contains(v)) {
                    let x = extra[0];
                    let sign = c.int(if s.iter().filter(|&&y| y < x).count() % 2 == 0 { 1 } else { -1 });
                    for (ci, rep) in blocks[i].reps.iter().enumerate() {
                        let coords = blocks[t].coords(c, &blocks[i].chains, rep);
                        for (ri, v) in coords.into_iter().enumerate() {
                            d[r0 + ri][c0 + ci] = c.norm(sign.clone() * v);
                        }
                    }
                }
                r0 += blocks[t].reps.len();
            }
            c0 += blocks[i].reps.len();
        }
        diffs.push(d);
    }
    (dims, diffs)
}

pub fn is_zero_product(c: &Coeff, a: &Mat, b: &Mat, inner: usize) -> bool {
    a.iter().all(|row| {
        (0..b.first().map_or(0, |r| r.len())).all(|j| {
            let s = (0..inner).fold(E::zero(), |acc, t| acc + row[t].clone() * b[t][j].clone());
            c.norm(s).is_zero()
        })
    })
}

pub fn hh(c: &Coeff, k: &Naive) -> Table {
    let mut out = Table::new();
    for p in -1..=k.dim() {
        let (dims, diffs) = stratum(c, k, p);
        let ranks: Vec<usize> = diffs.iter().enumerate().map(|(l, d)| rank(c, d, dims[l])).collect();
        for l in 0..=k.m {
            let out_rank = ranks.get(l).copied().unwrap_or(0);
            let in_rank = if l == 0 { 0 } else { ranks[l - 1] };
            let h = dims[l] - out_rank - in_rank;
            if h > 0 {
                out.insert(key(p, l), h);
            }
        }
    }
    out
}

pub fn total(t: &Table) -> usize {
    t.values().sum()
}
