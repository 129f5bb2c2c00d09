use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

use super::dense::{gaussian_rank, Matrix};

/// Coefficient field selector, as written on the command line: `gf2`, `gfp:<p>`, `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum FieldSpec {
    Gf2,
    Gfp(u32),
    Rational,
}

impl FieldSpec {
    /// Validates `p` and maps `gfp:2` onto the bit-packed `Gf2`.
    pub fn gfp(p: u64) -> Result<FieldSpec, Error> {
        if p == 2 {
            return Ok(FieldSpec::Gf2);
        }
        if p >= 1 << 16 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::Gfp(p as u32))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Gf2 => 2,
            FieldSpec::Gfp(p) => p as u64,
            FieldSpec::Rational => 0,
        }
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Gf2 => write!(f, "gf2"),
            FieldSpec::Gfp(p) => write!(f, "gfp:{p}"),
            FieldSpec::Rational => write!(f, "q"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "gf2" => Ok(FieldSpec::Gf2),
            "q" | "rational" | "qq" => Ok(FieldSpec::Rational),
            other => {
                let p = other
                    .strip_prefix("gfp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::InvalidParameter(format!("unknown coefficient field `{s}`")))?;
                FieldSpec::gfp(p)
            }
        }
    }
}

impl From<FieldSpec> for String {
    fn from(f: FieldSpec) -> String {
        f.to_string()
    }
}

impl TryFrom<String> for FieldSpec {
    type Error = Error;
    fn try_from(s: String) -> Result<Self, Error> {
        s.parse()
    }
}

/// Exact field arithmetic. Implementors are cheap handles; elements carry no field data.
pub trait Field: Clone + Send + Sync + fmt::Debug + 'static {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    /// Rank of a dense matrix; fields override this with a faster route.
    fn dense_rank(m: &Matrix<Self>) -> usize
    where
        Self: Sized,
    {
        gaussian_rank(m)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Gf2;

impl Field for Gf2 {
    type Elem = u8;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Gf2
    }
    #[inline]
    fn zero(&self) -> u8 {
        0
    }
    #[inline]
    fn one(&self) -> u8 {
        1
    }
    #[inline]
    fn from_i64(&self, v: i64) -> u8 {
        (v & 1) as u8
    }
    #[inline]
    fn is_zero(&self, a: &u8) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u8, b: &u8) -> u8 {
        a ^ b
    }
    #[inline]
    fn sub(&self, a: &u8, b: &u8) -> u8 {
        a ^ b
    }
    #[inline]
    fn mul(&self, a: &u8, b: &u8) -> u8 {
        a & b
    }
    #[inline]
    fn neg(&self, a: &u8) -> u8 {
        *a
    }
    #[inline]
    fn inv(&self, a: &u8) -> u8 {
        assert!(*a == 1, "inverse of zero in GF(2)");
        1
    }

    fn dense_rank(m: &Matrix<Self>) -> usize {
        super::bitmatrix::BitMatrix::from_dense(m).rank()
    }
}

/// `GF(p)` for an odd prime `p < 2^16`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gfp {
    p: u32,
}

impl Gfp {
    pub fn new(p: u32) -> Result<Self, Error> {
        match FieldSpec::gfp(p as u64)? {
            FieldSpec::Gfp(p) => Ok(Gfp { p }),
            _ => Err(Error::InvalidParameter("use Gf2 for p = 2".into())),
        }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }
}

impl Field for Gfp {
    type Elem = u32;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Gfp(self.p)
    }
    #[inline]
    fn zero(&self) -> u32 {
        0
    }
    #[inline]
    fn one(&self) -> u32 {
        1
    }
    #[inline]
    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> u32 {
        assert!(*a != 0, "inverse of zero in GF({})", self.p);
        // a^(p-2)
        let (mut base, mut exp, mut acc) = (*a as u64, self.p as u64 - 2, 1u64);
        let p = self.p as u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc as u32
    }
}

/// The rationals with arbitrary-precision numerators and denominators.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero in Q");
        a.recip()
    }

    fn dense_rank(m: &Matrix<Self>) -> usize {
        bareiss_rank(m)
    }
}

/// Fraction-free (Bareiss) elimination after clearing row denominators.
fn bareiss_rank(m: &Matrix<Rationals>) -> usize {
    use num_integer::Integer;
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|r| {
            let lcm = (0..cols).fold(BigInt::one(), |acc, c| acc.lcm(m.get(r, c).denom()));
            (0..cols)
                .map(|c| {
                    let x = m.get(r, c);
                    x.numer() * (&lcm / x.denom())
                })
                .collect()
        })
        .collect();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for r in rank + 1..rows {
            for cc in c + 1..cols {
                let v = (&a[rank][c] * &a[r][cc] - &a[r][c] * &a[rank][cc]) / &prev;
                a[r][cc] = v;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Runs `$body` with `$f` bound to the concrete field named by a [`FieldSpec`].
///
/// ```
/// use dblhom_core::{dispatch_field, linalg::{Field, FieldSpec}};
/// let spec: FieldSpec = "gfp:5".parse().unwrap();
/// let three = dispatch_field!(spec, |f| format!("{:?}", f.from_i64(-2)));
/// assert_eq!(three, "3");
/// ```
#[macro_export]
macro_rules! dispatch_field {
    ($spec:expr, |$f:ident| $body:expr) => {
        match $spec {
            $crate::linalg::FieldSpec::Gf2 => {
                let $f = $crate::linalg::Gf2;
                $body
            }
            $crate::linalg::FieldSpec::Gfp(p) => {
                let $f = $crate::linalg::Gfp::new(p).expect("FieldSpec holds a valid prime");
                $body
            }
            $crate::linalg::FieldSpec::Rational => {
                let $f = $crate::linalg::Rationals;
                $body
            }
        }
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["gf2", "gfp:3", "gfp:65521", "q"] {
            let f: FieldSpec = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert_eq!("gfp:2".parse::<FieldSpec>().unwrap(), FieldSpec::Gf2);
        assert!("gfp:4".parse::<FieldSpec>().is_err());
        assert!("gfp:65537".parse::<FieldSpec>().is_err());
        assert!("z".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn gfp_inverse() {
        let f = Gfp::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.sub(&2, &5), 4);
    }
}
