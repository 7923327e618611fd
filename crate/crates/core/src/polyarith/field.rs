//! Coefficient fields.
//!
//! All polynomial code is generic over [`Field`]. Two families are provided:
//! exact rationals ([`Rational`], a normalized `BigRational`) and prime fields
//! [`Fp<P>`] with the modulus fixed at compile time. Mixing fields is a type
//! error, so there is no runtime field-mismatch path.
//!
//! Working over a prime field is faster but the characteristic can change
//! homological invariants (Betti numbers, occasionally depth), so results over
//! `Fp<P>` are only trustworthy for inputs whose behaviour does not depend on it.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{AlgebraError, Result};

/// Exact rational numbers with canonical sign and reduced fraction.
pub type Rational = BigRational;

/// A commutative field usable as polynomial coefficients.
pub trait Field:
    Clone
    + Eq
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Short name used in ring declarations, e.g. `QQ` or `GF(7)`.
    fn field_name() -> String;

    /// 0 for the rationals, `p` for `F_p`.
    fn characteristic() -> u64;

    fn inverse(&self) -> Result<Self>;

    fn from_bigint(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    fn from_fraction(num: &BigInt, den: &BigInt) -> Result<Self> {
        Ok(Self::from_bigint(num) * Self::from_bigint(den).inverse()?)
    }

    /// Whether the canonical printed form starts with a minus sign.
    fn is_negative(&self) -> bool {
        false
    }

    fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.clone() * other.inverse()?)
    }
}

impl Field for BigRational {
    fn field_name() -> String {
        "QQ".to_string()
    }

    fn characteristic() -> u64 {
        0
    }

    fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self.recip())
    }

    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn from_fraction(num: &BigInt, den: &BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

const fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Residue class in `F_P`, stored as its representative in `0..P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const VALID: () = assert!(is_prime(P) && P < (1 << 63), "Fp modulus must be a prime below 2^63");

    pub fn new(value: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::VALID;
        Fp(value % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::new(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + P - rhs.0 })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<'a, const P: u64> Add<&'a Fp<P>> for Fp<P> {
    type Output = Self;
    fn add(self, rhs: &Self) -> Self {
        self + *rhs
    }
}

impl<'a, const P: u64> Sub<&'a Fp<P>> for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: &Self) -> Self {
        self - *rhs
    }
}

impl<'a, const P: u64> Mul<&'a Fp<P>> for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: &Self) -> Self {
        self * *rhs
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Self::new(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Self::new(1)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn field_name() -> String {
        format!("GF({P})")
    }

    fn characteristic() -> u64 {
        P
    }

    fn inverse(&self) -> Result<Self> {
        if self.0 == 0 {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self.pow(P - 2))
    }

    fn from_bigint(n: &BigInt) -> Self {
        let r = n % BigInt::from(P);
        let v = r.to_u64().unwrap_or_else(|| {
            // negative remainder
            let (sign, mag) = r.into_parts();
            debug_assert_eq!(sign, Sign::Minus);
            P - mag.to_u64().expect("remainder below modulus")
        });
        Self::new(v)
    }
}
