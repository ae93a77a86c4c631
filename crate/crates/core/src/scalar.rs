//! Exact rational scalars.
//!
//! Every length-squared, area and dot product in this crate is a [`Scalar`]:
//! an arbitrary-precision rational kept in canonical form (reduced, positive
//! denominator). Equality is therefore structural, and a verification check
//! passes exactly when its residual is the literal zero.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact rational number.
///
/// Backed by [`num_rational::BigRational`], which maintains the canonical
/// form this crate relies on: `gcd(|numerator|, denominator) = 1` and
/// `denominator > 0`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds `numer / denom`, reducing to canonical form.
    ///
    /// Panics if `denom == 0`, like integer division.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Scalar(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_big(numer: BigInt, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        Scalar(BigRational::new(numer, denom))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// -1, 0 or +1.
    pub fn signum(&self) -> i32 {
        if self.0.is_positive() {
            1
        } else if self.0.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }

    /// True iff the value is the square of a rational; returns that square
    /// root (the non-negative one) when it exists.
    pub fn exact_sqrt(&self) -> Option<Scalar> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if &(&n * &n) == self.numer() && &(&d * &d) == self.denom() {
            Some(Scalar(BigRational::new(n, d)))
        } else {
            None
        }
    }

    /// Nearest `f64`; only for rendering and human-facing approximations.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<(i64, i64)> for Scalar {
    fn from((n, d): (i64, i64)) -> Self {
        Scalar::ratio(n, d)
    }
}

macro_rules! binop {
    ($Op:ident, $op:ident, $OpAssign:ident, $op_assign:ident) => {
        impl<'a> $Op<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $op(self, rhs: &'a Scalar) -> Scalar {
                Scalar((&self.0).$op(&rhs.0))
            }
        }

        impl $Op<Scalar> for Scalar {
            type Output = Scalar;
            fn $op(self, rhs: Scalar) -> Scalar {
                Scalar(self.0.$op(rhs.0))
            }
        }

        impl $Op<&Scalar> for Scalar {
            type Output = Scalar;
            fn $op(self, rhs: &Scalar) -> Scalar {
                Scalar(self.0.$op(&rhs.0))
            }
        }

        impl $Op<Scalar> for &Scalar {
            type Output = Scalar;
            fn $op(self, rhs: Scalar) -> Scalar {
                Scalar((&self.0).$op(rhs.0))
            }
        }

        impl $OpAssign<Scalar> for Scalar {
            fn $op_assign(&mut self, rhs: Scalar) {
                self.0.$op_assign(rhs.0)
            }
        }

        impl $OpAssign<&Scalar> for Scalar {
            fn $op_assign(&mut self, rhs: &Scalar) {
                self.0.$op_assign(&rhs.0)
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign);
binop!(Sub, sub, SubAssign, sub_assign);
binop!(Mul, mul, MulAssign, mul_assign);

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on a zero divisor, like integer division.
    fn div(self, rhs: &'a Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero Scalar");
        Scalar(&self.0 / &rhs.0)
    }
}

impl Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        (&self).div(&rhs)
    }
}

impl Div<&Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        (&self).div(rhs)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, s| acc + s)
    }
}

impl<'a> std::iter::Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, s| acc + s)
    }
}

/// Renders as `p/q`, or just `p` for integers. This is the wire format used
/// by JSON reports; [`Scalar::from_str`] parses it back exactly.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Error produced when a scalar token cannot be parsed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational `{token}`: {reason}")]
pub struct ParseScalarError {
    pub token: String,
    pub reason: String,
}

impl ParseScalarError {
    fn new(token: &str, reason: impl Into<String>) -> Self {
        ParseScalarError {
            token: token.to_string(),
            reason: reason.into(),
        }
    }
}

/// Accepts integers (`-3`), fractions (`7/2`, `-1/3`) and finite decimals
/// (`0.5`, `-2.25`), all parsed exactly.
impl FromStr for Scalar {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() {
            return Err(ParseScalarError::new(s, "empty token"));
        }
        if let Some((n, d)) = s.split_once('/') {
            let numer = parse_int(s, n)?;
            let denom = parse_int(s, d)?;
            if denom.is_zero() {
                return Err(ParseScalarError::new(s, "zero denominator"));
            }
            return Ok(Scalar(BigRational::new(numer, denom)));
        }
        if let Some((int_part, frac_part)) = s.split_once('.') {
            if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(ParseScalarError::new(s, "malformed decimal"));
            }
            let (sign, digits) = match int_part.as_bytes().first() {
                Some(b'-') => (-1, &int_part[1..]),
                Some(b'+') => (1, &int_part[1..]),
                _ => (1, int_part),
            };
            if !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(ParseScalarError::new(s, "malformed decimal"));
            }
            // 0.5 -> 5/10, -2.25 -> -225/100; BigRational::new reduces.
            let whole = format!("{digits}{frac_part}");
            let numer = whole
                .parse::<BigInt>()
                .map_err(|e| ParseScalarError::new(s, e.to_string()))?;
            let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
            return Ok(Scalar(BigRational::new(BigInt::from(sign) * numer, denom)));
        }
        Ok(Scalar(BigRational::from_integer(parse_int(s, s)?)))
    }
}

fn parse_int(token: &str, part: &str) -> Result<BigInt, ParseScalarError> {
    let body = part.strip_prefix(['+', '-']).unwrap_or(part);
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseScalarError::new(token, "expected an integer"));
    }
    part.parse::<BigInt>()
        .map_err(|e| ParseScalarError::new(token, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    #[test]
    fn canonical_form() {
        let x = Scalar::ratio(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert_eq!(x.to_string(), "-3/2");
        assert_eq!(Scalar::ratio(0, -7), Scalar::zero());
    }

    #[test]
    fn arithmetic_is_exact() {
        assert_eq!(s("1/3") + s("1/6"), s("1/2"));
        assert_eq!(s("1/3") - s("1/3"), Scalar::zero());
        assert_eq!(s("3/4") * s("2/3"), s("1/2"));
        assert_eq!(s("1/2") / s("1/4"), Scalar::from_int(2));
        assert_eq!(-s("5/7"), s("-5/7"));
    }

    #[test]
    fn parses_integers_fractions_decimals() {
        assert_eq!(s("5"), Scalar::from_int(5));
        assert_eq!(s("-12"), Scalar::from_int(-12));
        assert_eq!(s("7/2"), Scalar::ratio(7, 2));
        assert_eq!(s("-1/3"), Scalar::ratio(-1, 3));
        assert_eq!(s("0.5"), Scalar::ratio(1, 2));
        assert_eq!(s("-2.25"), Scalar::ratio(-9, 4));
        assert_eq!(s("10.0"), Scalar::from_int(10));
    }

    #[test]
    fn rejects_malformed_tokens() {
        for bad in ["", "a", "1/0", "1/", "/2", "1.2.3", "1.", ".5x", "--3", "1e3"] {
            assert!(bad.parse::<Scalar>().is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn display_matches_wire_format() {
        assert_eq!(s("4/2").to_string(), "2");
        assert_eq!(s("-6/4").to_string(), "-3/2");
        assert_eq!(Scalar::zero().to_string(), "0");
    }

    #[test]
    fn exact_sqrt() {
        assert_eq!(s("25").exact_sqrt(), Some(s("5")));
        assert_eq!(s("9/4").exact_sqrt(), Some(s("3/2")));
        assert_eq!(s("2").exact_sqrt(), None);
        assert_eq!(s("-4").exact_sqrt(), None);
        assert_eq!(s("0").exact_sqrt(), Some(Scalar::zero()));
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-1000i64..1000, 1i64..60).prop_map(|(n, d)| Scalar::ratio(n, d))
    }

    proptest! {
        #[test]
        fn display_parse_roundtrip(x in arb_scalar()) {
            prop_assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
        }

        #[test]
        fn add_sub_cancel(a in arb_scalar(), b in arb_scalar()) {
            prop_assert_eq!(&(&a + &b) - &b, a);
        }

        #[test]
        fn mul_div_cancel(a in arb_scalar(), b in arb_scalar()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!(&(&a * &b) / &b, a);
        }

        #[test]
        fn ordering_matches_subtraction(a in arb_scalar(), b in arb_scalar()) {
            prop_assert_eq!(a < b, (&a - &b).is_negative());
        }
    }
}
