//! Exact scalars: rationals or residues modulo a prime.

use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

// Small values keep |numerator| and denominator below this limit, so any
// single product or sum of two of them fits in an i128 without overflow.
const SMALL_LIMIT: i128 = 1 << 62;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Rational {
    Small(Ratio<i128>),
    Big(BigRational),
}

impl Rational {
    fn from_small(r: Ratio<i128>) -> Self {
        if r.numer().abs() < SMALL_LIMIT && *r.denom() < SMALL_LIMIT {
            Rational::Small(r)
        } else {
            Rational::Big(BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom())))
        }
    }

    fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i128(), r.denom().to_i128()) {
            (Some(n), Some(d)) if n.abs() < SMALL_LIMIT && d < SMALL_LIMIT => Rational::Small(Ratio::new_raw(n, d)),
            _ => Rational::Big(r),
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(r) => BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Rational::Big(r) => r.clone(),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Rational::Small(r) => r.is_zero(),
            Rational::Big(r) => r.is_zero(),
        }
    }

    fn binary(
        &self,
        other: &Self,
        small: fn(Ratio<i128>, Ratio<i128>) -> Ratio<i128>,
        big: fn(BigRational, BigRational) -> BigRational,
    ) -> Self {
        match (self, other) {
            (Rational::Small(a), Rational::Small(b)) => Rational::from_small(small(*a, *b)),
            _ => Rational::from_big(big(self.to_big(), other.to_big())),
        }
    }
}

/// The coefficient field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    /// The prime field of order `p`; `p` must be a prime below 2^32.
    pub fn prime(p: u64) -> Result<Field> {
        if !(2..1 << 32).contains(&p) || (2..).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar(Repr::Q(Rational::from_small(Ratio::from_integer(n as i128)))),
            Field::Prime(p) => Scalar(Repr::Fp(n.rem_euclid(p as i64) as u64, p)),
        }
    }

    /// The scalar `numer / denom`.
    pub fn fraction(self, numer: &BigInt, denom: &BigInt) -> Result<Scalar> {
        match self {
            Field::Rationals => {
                if denom.is_zero() {
                    return Err(Error::NotInvertible);
                }
                Ok(Scalar(Repr::Q(Rational::from_big(BigRational::new(numer.clone(), denom.clone())))))
            }
            Field::Prime(p) => {
                let reduce = |n: &BigInt| n.mod_floor(&BigInt::from(p)).to_u64().unwrap_or(0);
                let num = Scalar(Repr::Fp(reduce(numer), p));
                let den = Scalar(Repr::Fp(reduce(denom), p));
                Ok(&num * &den.inverse().ok_or(Error::NotInvertible)?)
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "q"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

/// An exact field element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scalar(Repr);

#[derive(Clone, Debug, PartialEq, Eq)]
enum Repr {
    Q(Rational),
    Fp(u64, u64),
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let e = (a as i128).extended_gcd(&(m as i128));
    (e.gcd == 1).then(|| e.x.rem_euclid(m as i128) as u64)
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self.0 {
            Repr::Q(_) => Field::Rationals,
            Repr::Fp(_, p) => Field::Prime(p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Q(r) => r.is_zero(),
            Repr::Fp(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Q(Rational::Small(r)) => r.is_one(),
            Repr::Q(Rational::Big(_)) => false,
            Repr::Fp(v, _) => *v == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Q(Rational::Small(r)) => Scalar(Repr::Q(Rational::from_small(r.recip()))),
            Repr::Q(Rational::Big(r)) => Scalar(Repr::Q(Rational::from_big(r.recip()))),
            Repr::Fp(v, p) => Scalar(Repr::Fp(mod_pow(*v, p - 2, *p), *p)),
        })
    }

    /// `self^e`; negative exponents need a nonzero scalar.
    pub fn pow(&self, e: i64) -> Option<Scalar> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = self.field().one();
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            exp >>= 1;
        }
        Some(acc)
    }

    /// Some `x` with `x^d = self` for `d ≥ 1`, if one exists in the field.
    pub fn root(&self, d: u32) -> Option<Scalar> {
        if d == 1 || self.is_zero() {
            return Some(self.clone());
        }
        match &self.0 {
            Repr::Q(r) => {
                let b = r.to_big();
                let (n, m) = (b.numer(), b.denom());
                if n.is_negative() && d.is_multiple_of(2) {
                    return None;
                }
                let (rn, rm) = (n.nth_root(d), m.nth_root(d));
                if num_traits::pow(rn.clone(), d as usize) != *n || num_traits::pow(rm.clone(), d as usize) != *m {
                    return None;
                }
                Some(Scalar(Repr::Q(Rational::from_big(BigRational::new(rn, rm)))))
            }
            Repr::Fp(v, p) => {
                let order = p - 1;
                let g = (d as u64).gcd(&order);
                if g == 1 {
                    let inv = mod_inverse(d as u64 % order, order)?;
                    return Some(Scalar(Repr::Fp(mod_pow(*v, inv, *p), *p)));
                }
                (1..*p).find(|&x| mod_pow(x, d as u64, *p) == *v).map(|x| Scalar(Repr::Fp(x, *p)))
            }
        }
    }

    /// Numerator and denominator of a rational scalar, or the residue over 1.
    pub fn to_fraction(&self) -> (BigInt, BigInt) {
        match &self.0 {
            Repr::Q(r) => {
                let b = r.to_big();
                (b.numer().clone(), b.denom().clone())
            }
            Repr::Fp(v, _) => (BigInt::from(*v), BigInt::one()),
        }
    }

    fn combine(&self, other: &Scalar, op: Op) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Q(a), Repr::Q(b)) => Scalar(Repr::Q(match op {
                Op::Add => a.binary(b, |x, y| x + y, |x, y| x + y),
                Op::Sub => a.binary(b, |x, y| x - y, |x, y| x - y),
                Op::Mul => a.binary(b, |x, y| x * y, |x, y| x * y),
            })),
            (Repr::Fp(a, p), Repr::Fp(b, q)) if p == q => {
                let (a, b, p128) = (*a as u128, *b as u128, *p as u128);
                let v = match op {
                    Op::Add => (a + b) % p128,
                    Op::Sub => (a + p128 - b) % p128,
                    Op::Mul => (a * b) % p128,
                };
                Scalar(Repr::Fp(v as u64, *p))
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

#[derive(Clone, Copy)]
enum Op {
    Add,
    Sub,
    Mul,
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Q(Rational::Small(r)) => write!(f, "{r}"),
            Repr::Q(Rational::Big(r)) => write!(f, "{r}"),
            Repr::Fp(v, _) => write!(f, "{v}"),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.combine(rhs, Op::Add)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.combine(rhs, Op::Sub)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.combine(rhs, Op::Mul)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Q(Rational::Small(r)) => Scalar(Repr::Q(Rational::Small(-r))),
            Repr::Q(Rational::Big(r)) => Scalar(Repr::Q(Rational::Big(-r))),
            Repr::Fp(v, p) => Scalar(Repr::Fp((p - v) % p, *p)),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn q(n: i64, d: i64) -> Scalar {
        Field::Rationals.fraction(&BigInt::from(n), &BigInt::from(d)).unwrap()
    }

    #[test]
    fn powers_and_roots() {
        let q = Field::Rationals;
        let x = q.fraction(&BigInt::from(-8), &BigInt::from(27)).unwrap();
        assert_eq!(x.root(3).unwrap(), q.fraction(&BigInt::from(-2), &BigInt::from(3)).unwrap());
        assert!(q.from_i64(2).root(2).is_none());
        assert_eq!(q.from_i64(2).pow(-2).unwrap(), q.fraction(&BigInt::from(1), &BigInt::from(4)).unwrap());
        let f = Field::prime(7).unwrap();
        let r = f.from_i64(2).root(2).unwrap();
        assert_eq!(&r * &r, f.from_i64(2));
        assert_eq!(f.from_i64(3).root(5).unwrap().pow(5).unwrap(), f.from_i64(3));
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        assert_eq!(&q(1, 2) + &q(1, 3), q(5, 6));
        assert_eq!(&q(2, 4) * &q(4, 3), q(2, 3));
        assert_eq!(q(-3, 2).inverse().unwrap(), q(-2, 3));
        assert_eq!(q(-3, 6).to_string(), "-1/2");
        assert!((&q(1, 7) - &q(1, 7)).is_zero());
    }

    #[test]
    fn promotes_and_demotes_big_values() {
        let big = Field::Rationals.from_i64(1 << 61);
        let mut x = big.clone();
        for _ in 0..5 {
            x = &x * &big;
        }
        let (n, _) = x.to_fraction();
        assert_eq!(n, BigInt::from(2).pow(366u32));
        for _ in 0..5 {
            x = &x * &big.inverse().unwrap();
        }
        assert_eq!(x, big);
        assert!(matches!(x.0, Repr::Q(Rational::Small(_))));
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        let three = f.from_i64(3);
        assert_eq!(&three * &three.inverse().unwrap(), f.one());
        assert_eq!(f.from_i64(-1), f.from_i64(6));
        assert_eq!(f.fraction(&BigInt::from(1), &BigInt::from(2)).unwrap(), f.from_i64(4));
        assert!(Field::prime(91).is_err());
        assert!(f.fraction(&BigInt::from(1), &BigInt::from(14)).is_err());
    }

    fn field() -> impl proptest::strategy::Strategy<Value = Field> {
        use proptest::prelude::*;
        prop_oneof![Just(Field::Rationals), Just(Field::prime(5).unwrap()), Just(Field::prime(4_294_967_291).unwrap())]
    }

    proptest::proptest! {
        #[test]
        fn field_axioms(k in field(), a in -1i64 << 62..1 << 62, b in 1i64..1 << 40, c in proptest::num::i64::ANY, d in 1i64..97) {
            let x = k.fraction(&BigInt::from(a), &BigInt::from(b));
            let y = k.fraction(&BigInt::from(c), &BigInt::from(d));
            let (Ok(x), Ok(y)) = (x, y) else { return Ok(()) };
            proptest::prop_assert_eq!(&(&x + &y) - &y, x.clone());
            proptest::prop_assert_eq!(&x * &y, &y * &x);
            proptest::prop_assert_eq!(&(&x + &y) * &y, &(&x * &y) + &(&y * &y));
            if let Some(inv) = y.inverse() {
                proptest::prop_assert_eq!(&(&x * &y) * &inv, x);
            } else {
                proptest::prop_assert!(y.is_zero());
            }
        }
    }
}
