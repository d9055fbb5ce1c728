use std::fmt;
use std::ops::{Add, Index, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::num::{self, format_rational, Rational};

/// A point of `N_R` with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatVec(pub Vec<Rational>);

impl RatVec {
    pub fn zero(dim: usize) -> Self {
        RatVec(vec![Rational::zero(); dim])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        RatVec(v.iter().map(|&x| num::rat_int(x)).collect())
    }

    pub fn from_integer_vec(v: &[BigInt]) -> Self {
        RatVec(v.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        RatVec(self.0.iter().map(|x| x * s).collect())
    }

    pub fn dot(&self, other: &[Rational]) -> Rational {
        self.0.iter().zip(other).map(|(a, b)| a * b).sum()
    }

    pub fn dot_int(&self, other: &[BigInt]) -> Rational {
        self.0
            .iter()
            .zip(other)
            .map(|(a, b)| a * Rational::from_integer(b.clone()))
            .sum()
    }

    /// `self + t * dir`
    pub fn add_scaled(&self, t: &Rational, dir: &[BigInt]) -> Self {
        RatVec(
            self.0
                .iter()
                .zip(dir)
                .map(|(a, d)| a + t * Rational::from_integer(d.clone()))
                .collect(),
        )
    }

    /// Integer coordinates, if every entry is integral.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.0.iter().map(num::as_integer).collect()
    }
}

impl Index<usize> for RatVec {
    type Output = Rational;

    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl Add for &RatVec {
    type Output = RatVec;

    fn add(self, rhs: &RatVec) -> RatVec {
        RatVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RatVec {
    type Output = RatVec;

    fn sub(self, rhs: &RatVec) -> RatVec {
        RatVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rational(x))?;
        }
        write!(f, ")")
    }
}

impl Serialize for RatVec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        num::rational_seq::serialize(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for RatVec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        num::rational_seq::deserialize(d).map(RatVec)
    }
}

/// A nonzero integer vector whose entries have gcd 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimitiveVec(Vec<BigInt>);

/// Divides a nonzero integer vector by the gcd of its entries.
pub fn primitive(v: &[BigInt]) -> Result<PrimitiveVec> {
    let g = num::gcd_all(v);
    if g.is_zero() {
        return Err(Error::ZeroDirection);
    }
    Ok(PrimitiveVec(v.iter().map(|x| x / &g).collect()))
}

/// Primitive direction of a nonzero rational vector, together with the
/// positive scalar `len` such that `v = len * direction`.
pub fn primitive_of_rational(v: &RatVec) -> Result<(PrimitiveVec, Rational)> {
    let denom_lcm = v.0.iter().fold(BigInt::from(1), |acc, q| num::lcm(&acc, q.denom()));
    let scaled: Vec<BigInt> = v.0.iter().map(|q| q.numer() * (&denom_lcm / q.denom())).collect();
    let g = num::gcd_all(&scaled);
    if g.is_zero() {
        return Err(Error::ZeroDirection);
    }
    let dir = PrimitiveVec(scaled.iter().map(|x| x / &g).collect());
    Ok((dir, Rational::new(g, denom_lcm)))
}

impl PrimitiveVec {
    pub fn new(v: Vec<BigInt>) -> Result<Self> {
        let g = num::gcd_all(&v);
        if g.is_zero() {
            return Err(Error::ZeroDirection);
        }
        if g != BigInt::from(1) {
            return Err(Error::NotPrimitive(v.iter().map(|x| x.to_string()).collect()));
        }
        Ok(PrimitiveVec(v))
    }

    pub fn from_ints(v: &[i64]) -> Result<Self> {
        Self::new(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn neg(&self) -> Self {
        PrimitiveVec(self.0.iter().map(|x| -x).collect())
    }

    pub fn to_rat(&self) -> RatVec {
        RatVec::from_integer_vec(&self.0)
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.0.iter().cloned().map(Rational::from_integer).collect()
    }

    pub fn scaled(&self, k: &BigInt) -> Vec<BigInt> {
        self.0.iter().map(|x| x * k).collect()
    }

    /// True if `v` is a positive rational multiple of `self`.
    pub fn is_positive_multiple(&self, v: &RatVec) -> bool {
        match primitive_of_rational(v) {
            Ok((d, len)) => &d == self && len.is_positive(),
            Err(_) => false,
        }
    }
}

impl Index<usize> for PrimitiveVec {
    type Output = BigInt;

    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl fmt::Display for PrimitiveVec {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for PrimitiveVec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        num::integer_seq::serialize(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for PrimitiveVec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = num::integer_seq::deserialize(d)?;
        PrimitiveVec::new(raw).map_err(serde::de::Error::custom)
    }
}

/// Plain integer vector (node slopes, lattice points).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVec(pub Vec<BigInt>);

impl IntVec {
    pub fn from_ints(v: &[i64]) -> Self {
        IntVec(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn to_rat(&self) -> RatVec {
        RatVec::from_integer_vec(&self.0)
    }
}

impl Serialize for IntVec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        num::integer_seq::serialize(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for IntVec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        num::integer_seq::deserialize(d).map(IntVec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn primitive_examples() {
        assert_eq!(primitive(&ints(&[2, 4])).unwrap().coords(), &ints(&[1, 2])[..]);
        assert_eq!(primitive(&ints(&[1, 0, 0])).unwrap().coords(), &ints(&[1, 0, 0])[..]);
        assert_eq!(
            primitive(&ints(&[-3, 6, -9])).unwrap().coords(),
            &ints(&[-1, 2, -3])[..]
        );
        assert_eq!(primitive(&ints(&[0, 0])), Err(Error::ZeroDirection));
    }

    #[test]
    fn rational_direction_and_length() {
        let v = RatVec(vec![rat(1, 2), rat(1, 2)]);
        let (d, len) = primitive_of_rational(&v).unwrap();
        assert_eq!(d.coords(), &ints(&[1, 1])[..]);
        assert_eq!(len, rat(1, 2));

        let v = RatVec::from_ints(&[3, 6]);
        let (d, len) = primitive_of_rational(&v).unwrap();
        assert_eq!(d.coords(), &ints(&[1, 2])[..]);
        assert_eq!(len, rat(3, 1));
    }

    #[test]
    fn non_primitive_json_is_rejected() {
        assert!(serde_json::from_str::<PrimitiveVec>("[2, 4]").is_err());
        assert!(serde_json::from_str::<PrimitiveVec>("[0, 0]").is_err());
        let p: PrimitiveVec = serde_json::from_str("[-1, \"2\"]").unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), "[-1,2]");
    }

    proptest! {
        #[test]
        fn primitive_is_idempotent_and_divides(v in proptest::collection::vec(-50i64..50, 1..5)) {
            let v = ints(&v);
            match primitive(&v) {
                Err(Error::ZeroDirection) => prop_assert!(v.iter().all(Zero::is_zero)),
                Err(e) => prop_assert!(false, "unexpected {e:?}"),
                Ok(p) => {
                    prop_assert_eq!(primitive(p.coords()).unwrap(), p.clone());
                    let g = num::gcd_all(&v);
                    prop_assert!(g.is_positive());
                    prop_assert_eq!(p.scaled(&g), v);
                }
            }
        }
    }
}
