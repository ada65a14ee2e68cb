use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ExactError;

/// Arbitrary-precision rational in lowest terms, denominator positive.
pub type Rational = BigRational;

/// An element `re + im·i` of the Gaussian rationals `ℚ[i]`.
///
/// Literal syntax (for files and the CLI): `"a/b"` or `"a/b+c/di"`, with
/// either part optional, e.g. `"1"`, `"-1/2"`, `"0+1i"`, `"i"`, `"3-2i"`.
/// `Display` always prints the real part and a signed imaginary part when the
/// latter is nonzero, so `i` prints as `0+1i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GaussRational {
    re: Rational,
    im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::new(Rational::from_integer(BigInt::from(n)), Rational::zero())
    }

    /// `num/den + 0i`. Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::new(
            Rational::new(BigInt::from(num), BigInt::from(den)),
            Rational::zero(),
        )
    }

    pub fn from_parts(re: i64, im: i64) -> Self {
        Self::new(
            Rational::from_integer(BigInt::from(re)),
            Rational::from_integer(BigInt::from(im)),
        )
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn i() -> Self {
        Self::from_parts(0, 1)
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    /// `|z|² = re² + im²`.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(Self::new(&self.re / &n, -&self.im / &n))
    }

    pub fn div(&self, other: &Self) -> Result<Self, ExactError> {
        Ok(self * &other.inv()?)
    }
}

impl From<i64> for GaussRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<Rational> for GaussRational {
    fn from(r: Rational) -> Self {
        Self::new(r, Rational::zero())
    }
}

impl<'a> Add<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational::new(-&self.re, -&self.im)
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for GaussRational {
            type Output = GaussRational;
            fn $method(self, rhs: GaussRational) -> GaussRational {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        -&self
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num.trim()).ok()?;
    let den = BigInt::from_str(den.trim()).ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

fn parse_imaginary(s: &str) -> Option<Rational> {
    match s.trim() {
        "" | "+" => Some(Rational::one()),
        "-" => Some(-Rational::one()),
        other => parse_rational(other.strip_prefix('+').unwrap_or(other)),
    }
}

impl FromStr for GaussRational {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ExactError::Parse(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(err());
        }
        let Some(body) = t.strip_suffix('i') else {
            return parse_rational(&t).map(GaussRational::from).ok_or_else(err);
        };
        // The split point is the last sign that is not leading.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last();
        let (re, im) = match split {
            Some(k) => (parse_rational(&body[..k]), parse_imaginary(&body[k..])),
            None => (Some(Rational::zero()), parse_imaginary(body)),
        };
        match (re, im) {
            (Some(re), Some(im)) => Ok(GaussRational::new(re, im)),
            _ => Err(err()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussRational {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_pair_multiplies_to_norm() {
        assert_eq!(&g("1+1i") * &g("1-1i"), g("2"));
    }

    #[test]
    fn inverse_of_two_is_half() {
        assert_eq!(g("2").inv().unwrap(), g("1/2"));
    }

    #[test]
    fn conj_flips_imaginary_sign() {
        assert_eq!(g("3/2-5i").conj(), g("3/2+5i"));
    }

    #[test]
    fn inv_zero_is_an_error() {
        assert_eq!(GaussRational::zero().inv(), Err(ExactError::DivisionByZero));
    }

    #[test]
    fn literals() {
        assert_eq!(g("0+1i"), GaussRational::i());
        assert_eq!(g("i"), GaussRational::i());
        assert_eq!(g("-i"), -GaussRational::i());
        assert_eq!(g("-1/2"), GaussRational::from_ratio(-1, 2));
        assert_eq!(g("2/4+6/8i").to_string(), "1/2+3/4i");
        assert_eq!(g("-3-2/3i").to_string(), "-3-2/3i");
        assert_eq!(GaussRational::i().to_string(), "0+1i");
        assert!("1/0".parse::<GaussRational>().is_err());
        assert!("".parse::<GaussRational>().is_err());
        assert!("x+1i".parse::<GaussRational>().is_err());
    }
}
