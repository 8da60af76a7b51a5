//! Exact half-integer arithmetic.
//!
//! Every quantity in this crate (weight coordinates, coroot pairings,
//! grading evaluations) is a half-integer. Values are stored as twice the
//! mathematical value, so all arithmetic is plain integer arithmetic and
//! membership tests such as "is this a positive integer" are exact.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::scalar::Scalar;

/// A half-integer, stored as its doubled value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt<T: Scalar = i64> {
    twice: T,
}

impl<T: Scalar> HalfInt<T> {
    pub const fn from_twice(twice: T) -> Self {
        HalfInt { twice }
    }

    pub fn from_int(v: T) -> Self {
        HalfInt { twice: v + v }
    }

    pub fn zero() -> Self {
        HalfInt { twice: T::zero() }
    }

    /// Twice the value; the exact internal representation.
    pub fn twice(self) -> T {
        self.twice
    }

    pub fn is_zero(self) -> bool {
        self.twice.is_zero()
    }

    pub fn is_integer(self) -> bool {
        (self.twice % T::from_i32(2)).is_zero()
    }

    /// Membership in {1, 2, 3, ...}.
    pub fn is_positive_integer(self) -> bool {
        self.is_integer() && self.twice > T::zero()
    }

    pub fn is_positive(self) -> bool {
        self.twice > T::zero()
    }

    pub fn abs(self) -> Self {
        HalfInt { twice: self.twice.abs() }
    }

    /// Converts the doubled value to `i64`.
    pub fn twice_i64(self) -> i64 {
        self.twice.to_i64().expect("half-integer out of i64 range")
    }
}

impl<T: Scalar> Add for HalfInt<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        HalfInt { twice: self.twice + rhs.twice }
    }
}

impl<T: Scalar> Sub for HalfInt<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        HalfInt { twice: self.twice - rhs.twice }
    }
}

impl<T: Scalar> Neg for HalfInt<T> {
    type Output = Self;
    fn neg(self) -> Self {
        HalfInt { twice: -self.twice }
    }
}

impl<T: Scalar> AddAssign for HalfInt<T> {
    fn add_assign(&mut self, rhs: Self) {
        self.twice = self.twice + rhs.twice;
    }
}

impl<T: Scalar> SubAssign for HalfInt<T> {
    fn sub_assign(&mut self, rhs: Self) {
        self.twice = self.twice - rhs.twice;
    }
}

/// Scaling by an integer (multiplicities of roots are always integral).
impl<T: Scalar> Mul<T> for HalfInt<T> {
    type Output = Self;
    fn mul(self, rhs: T) -> Self {
        HalfInt { twice: self.twice * rhs }
    }
}

impl<T: Scalar> Sum for HalfInt<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl<T: Scalar> fmt::Display for HalfInt<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let two = T::from_i32(2);
        if (self.twice % two).is_zero() {
            write!(f, "{}", self.twice / two)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

// Debug delegates to Display; doubled storage is noise in test failures.
impl<T: Scalar> fmt::Debug for HalfInt<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Error produced when a token is not a half-integer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a half-integer: {0:?}")]
pub struct ParseHalfIntError(pub String);

impl<T: Scalar> FromStr for HalfInt<T> {
    type Err = ParseHalfIntError;

    /// Accepts an integer token like `-3` or a halved token like `5/2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseHalfIntError(s.to_string());
        let parse_int = |t: &str| -> Result<T, ParseHalfIntError> {
            if t.is_empty() || t == "-" {
                return Err(err());
            }
            let (neg, digits) = match t.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, t),
            };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            let mut acc = T::zero();
            let ten = T::from_i32(10);
            for b in digits.bytes() {
                acc = acc
                    .checked_mul(&ten)
                    .and_then(|a| a.checked_add(&T::from_i32((b - b'0') as i32)))
                    .ok_or_else(err)?;
            }
            Ok(if neg { -acc } else { acc })
        };
        match s.split_once('/') {
            None => Ok(HalfInt::from_int(parse_int(s)?)),
            Some((num, "2")) => Ok(HalfInt::from_twice(parse_int(num)?)),
            Some(_) => Err(err()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type H = HalfInt<i64>;

    fn h(twice: i64) -> H {
        H::from_twice(twice)
    }

    #[test]
    fn arithmetic_is_exact_on_doubled_storage() {
        assert_eq!(h(3) + h(1), h(4));
        assert_eq!(h(3) - h(1), h(2));
        assert_eq!(-h(3), h(-3));
        assert_eq!(h(3) * 2, h(6));
        assert_eq!(H::from_int(2), h(4));
    }

    #[test]
    fn integrality_tests() {
        assert!(h(4).is_integer());
        assert!(!h(3).is_integer());
        assert!(h(2).is_positive_integer());
        assert!(!h(1).is_positive_integer());
        assert!(!h(-2).is_positive_integer());
        assert!(!h(0).is_positive_integer());
    }

    #[test]
    fn display_matches_bracket_notation() {
        assert_eq!(h(5).to_string(), "5/2");
        assert_eq!(h(-1).to_string(), "-1/2");
        assert_eq!(h(4).to_string(), "2");
        assert_eq!(h(0).to_string(), "0");
    }

    #[test]
    fn parses_integers_and_halves() {
        assert_eq!("3/2".parse::<H>().unwrap(), h(3));
        assert_eq!("-1/2".parse::<H>().unwrap(), h(-1));
        assert_eq!("7".parse::<H>().unwrap(), h(14));
        assert_eq!("-2".parse::<H>().unwrap(), h(-4));
        assert!("1/3".parse::<H>().is_err());
        assert!("".parse::<H>().is_err());
        assert!("x".parse::<H>().is_err());
        assert!("3/".parse::<H>().is_err());
        assert!("--2".parse::<H>().is_err());
    }

    #[test]
    fn works_for_narrow_scalars() {
        let a = HalfInt::<i16>::from_twice(3);
        let b = HalfInt::<i16>::from_twice(-1);
        assert_eq!((a + b).to_string(), "1");
    }
}
