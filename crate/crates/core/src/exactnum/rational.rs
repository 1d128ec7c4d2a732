//! Exact rationals with an inline fast path.
//!
//! Almost every coefficient that shows up in chain-level matrices is a small
//! integer or a fraction like `1/2`, so values are kept as `Ratio<i64>` and
//! only promoted to a heap-allocated `BigRational` when a checked operation
//! overflows. Results are demoted again whenever they fit, which keeps the
//! representation canonical: two equal values always use the same variant.

use alloc::boxed::Box;
use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Signed, ToPrimitive, Zero};

#[derive(Clone)]
pub enum Rational {
    Small(Ratio<i64>),
    Big(Box<BigRational>),
}

impl Rational {
    pub const fn zero() -> Self {
        Rational::Small(Ratio::new_raw(0, 1))
    }

    pub const fn one() -> Self {
        Rational::Small(Ratio::new_raw(1, 1))
    }

    pub const fn from_integer(n: i64) -> Self {
        Rational::Small(Ratio::new_raw(n, 1))
    }

    /// `numer / denom`, reduced. Panics if `denom == 0`.
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        if numer == i64::MIN || denom == i64::MIN {
            return Self::from_big(BigRational::new(BigInt::from(numer), BigInt::from(denom)));
        }
        Rational::Small(Ratio::new(numer, denom))
    }

    pub fn from_big(value: BigRational) -> Self {
        match (value.numer().to_i64(), value.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN => Rational::Small(Ratio::new_raw(n, d)),
            _ => Rational::Big(Box::new(value)),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(r) => BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Rational::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Rational::Small(r) => r.numer() == &0,
            Rational::Big(_) => false,
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rational::Small(r) if r.numer() == &1 && r.denom() == &1)
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rational::Small(r) => r.denom() == &1,
            Rational::Big(b) => b.is_integer(),
        }
    }

    pub fn signum(&self) -> i32 {
        match self {
            Rational::Small(r) => r.numer().signum() as i32,
            Rational::Big(b) => {
                if b.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if let (Rational::Small(a), Rational::Small(b)) = (self, rhs) {
            if let Some(r) = a.checked_add(b) {
                if *r.numer() != i64::MIN {
                    return Rational::Small(r);
                }
            }
        }
        Self::from_big(self.to_big() + rhs.to_big())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        if let (Rational::Small(a), Rational::Small(b)) = (self, rhs) {
            if let Some(r) = a.checked_sub(b) {
                if *r.numer() != i64::MIN {
                    return Rational::Small(r);
                }
            }
        }
        Self::from_big(self.to_big() - rhs.to_big())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if let (Rational::Small(a), Rational::Small(b)) = (self, rhs) {
            if let Some(r) = a.checked_mul(b) {
                if *r.numer() != i64::MIN {
                    return Rational::Small(r);
                }
            }
        }
        Self::from_big(self.to_big() * rhs.to_big())
    }

    /// Panics on division by zero.
    pub fn div(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero");
        if let (Rational::Small(a), Rational::Small(b)) = (self, rhs) {
            if let Some(r) = a.checked_div(b) {
                if *r.numer() != i64::MIN && *r.denom() != i64::MIN {
                    return Rational::Small(r);
                }
            }
        }
        Self::from_big(self.to_big() / rhs.to_big())
    }

    pub fn neg(&self) -> Self {
        match self {
            // i64::MIN never appears as a numerator in the small variant
            Rational::Small(r) => Rational::Small(Ratio::new_raw(-*r.numer(), *r.denom())),
            Rational::Big(b) => Self::from_big(-(**b).clone()),
        }
    }

    /// Panics on zero.
    pub fn recip(&self) -> Self {
        Rational::one().div(self)
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Rational::Small(a), Rational::Small(b)) => a.numer() == b.numer() && a.denom() == b.denom(),
            (Rational::Big(a), Rational::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Rational {}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Rational::Small(a), Rational::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigRational> for Rational {
    fn from(b: BigRational) -> Self {
        Rational::from_big(b)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small(r) if r.denom() == &1 => write!(f, "{}", r.numer()),
            Rational::Small(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Rational::Big(b) if b.is_integer() => write!(f, "{}", b.numer()),
            Rational::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError(pub String);

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational literal {:?}", self.0)
    }
}

impl core::error::Error for ParseRationalError {}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `p`, `p/q` and `-p/q` with arbitrary-size integers.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let err = || ParseRationalError(String::from(s));
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n = BigInt::from_str(num).map_err(|_| err())?;
        let d = BigInt::from_str(den).map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        Ok(Self::from_big(BigRational::new(n, d)))
    }
}
