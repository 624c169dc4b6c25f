use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::LinalgError;

/// An exact field. Every value is canonical, so `==` is equality of field elements.
pub trait Field:
    Clone
    + Debug
    + Display
    + Eq
    + Hash
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + Send
    + Sync
    + 'static
{
    /// 0 for the rationals, p for F_p.
    const CHARACTERISTIC: u64;

    fn from_i64(n: i64) -> Self;

    fn inv(&self) -> Option<Self>;

    /// Parses `"n"` or `"n/d"` with integer n, d.
    fn parse(s: &str) -> Result<Self, LinalgError>;

    /// Label used in reports and matrix headers.
    fn label() -> String;

    /// `numerator/denominator` form used by the coordinate export.
    fn to_ratio_string(&self) -> String;

    /// `(-1)^e`.
    fn sign(e: i64) -> Self {
        if e.rem_euclid(2) == 1 {
            -Self::one()
        } else {
            Self::one()
        }
    }
}

pub type Q = BigRational;

impl Field for BigRational {
    const CHARACTERISTIC: u64 = 0;

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn parse(s: &str) -> Result<Self, LinalgError> {
        let bad = || LinalgError::Parse(s.to_string());
        let t = s.trim();
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n = BigInt::from_str(n).map_err(|_| bad())?;
        let d = BigInt::from_str(d).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(BigRational::new(n, d))
    }

    fn label() -> String {
        "Q".into()
    }

    fn to_ratio_string(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
}

/// The prime field Z/P. `P` must be prime; see [`is_prime`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: u64) -> Self {
        Fp(v % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::one();
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
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Fp(((self.0 as u128 + o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        if self.0 == 0 {
            self
        } else {
            Fp(P - self.0)
        }
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(((self.0 as u128 * o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Self) -> Self {
        self * o.inv().expect("division by zero in F_p")
    }
}

impl<const P: u64> AddAssign for Fp<P> {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl<const P: u64> SubAssign for Fp<P> {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl<const P: u64> MulAssign for Fp<P> {
    fn mul_assign(&mut self, o: Self) {
        *self = *self * o;
    }
}

impl<const P: u64> Field for Fp<P> {
    const CHARACTERISTIC: u64 = P;

    fn from_i64(n: i64) -> Self {
        Fp(n.rem_euclid(P as i64) as u64)
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    fn parse(s: &str) -> Result<Self, LinalgError> {
        let bad = || LinalgError::Parse(s.to_string());
        let t = s.trim();
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let reduce = |x: &str| -> Result<Self, LinalgError> {
            let v = BigInt::from_str(x).map_err(|_| bad())?;
            let r = ((v % BigInt::from(P)) + BigInt::from(P)) % BigInt::from(P);
            let r: u64 = r.try_into().map_err(|_| bad())?;
            Ok(Fp(r))
        };
        let n = reduce(n)?;
        let d = reduce(d)?;
        let di = d.inv().ok_or_else(bad)?;
        Ok(n * di)
    }

    fn label() -> String {
        format!("Fp:{P}")
    }

    fn to_ratio_string(&self) -> String {
        format!("{}/1", self.0)
    }
}

/// Deterministic trial division; the field table only holds small moduli.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    type F7 = Fp<7>;

    #[test]
    fn rational_parse_is_reduced() {
        let x = Q::parse("6/-4").unwrap();
        assert_eq!(x.to_ratio_string(), "-3/2");
        assert!(Q::parse("1/0").is_err());
        assert!(Q::parse("abc").is_err());
    }

    #[test]
    fn fp_arithmetic() {
        let a = F7::from_i64(-1);
        assert_eq!(a.value(), 6);
        assert_eq!(a * a, F7::one());
        assert_eq!(F7::from_i64(3).inv().unwrap() * F7::from_i64(3), F7::one());
        assert_eq!(F7::parse("1/2").unwrap(), F7::from_i64(4));
        assert!(F7::zero().inv().is_none());
    }

    #[test]
    fn sign_parity() {
        assert_eq!(Q::sign(3), -Q::one());
        assert_eq!(Q::sign(-2), Q::one());
        assert_eq!(F7::sign(1), F7::from_i64(6));
    }

    #[test]
    fn large_prime_no_overflow() {
        type Big = Fp<2147483647>;
        let x = Big::from_i64(2147483646);
        assert_eq!(x * x, Big::one());
        assert!(is_prime(2147483647));
        assert!(!is_prime(2147483649));
    }
}
