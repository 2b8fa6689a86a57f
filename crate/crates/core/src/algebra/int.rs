//! Arbitrary-precision integers with an inline `i64` fast path.
//!
//! Almost every coefficient produced by products of q-shifted factorials fits
//! in a machine word; the heap-backed [`BigInt`] is only used once a value
//! leaves the `i64` range. A value is stored as `Big` if and only if it does not
//! fit in `i64`, so structural equality is value equality.

use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use alloc::string::String;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Int {
    Small(i64),
    Big(BigInt),
}

impl Int {
    pub const ZERO: Int = Int::Small(0);
    pub const ONE: Int = Int::Small(1);

    fn from_big(b: BigInt) -> Int {
        match b.to_i64() {
            Some(v) => Int::Small(v),
            None => Int::Big(b),
        }
    }

    fn from_i128(v: i128) -> Int {
        match i64::try_from(v) {
            Ok(v) => Int::Small(v),
            Err(_) => Int::Big(BigInt::from(v)),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Int::Small(v) => BigInt::from(*v),
            Int::Big(b) => b.clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Int::Small(v) => Some(*v),
            Int::Big(_) => None,
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        matches!(self, Int::Small(0))
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        matches!(self, Int::Small(1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Int::Small(v) => *v < 0,
            Int::Big(b) => b.is_negative(),
        }
    }

    pub fn signum(&self) -> i32 {
        match self {
            Int::Small(v) => v.signum() as i32,
            Int::Big(b) => {
                if b.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn abs(&self) -> Int {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// `self += a * b`, the inner step of every polynomial product.
    #[inline]
    pub fn add_mul_assign(&mut self, a: &Int, b: &Int) {
        if let (Int::Small(s), Int::Small(x), Int::Small(y)) = (&*self, a, b) {
            let v = (*s as i128) + (*x as i128) * (*y as i128);
            *self = Int::from_i128(v);
            return;
        }
        let v = self.to_big() + a.to_big() * b.to_big();
        *self = Int::from_big(v);
    }

    /// Exact quotient, or `None` when `d` does not divide `self` (or `d == 0`).
    pub fn div_exact(&self, d: &Int) -> Option<Int> {
        if d.is_zero() {
            return None;
        }
        match (self, d) {
            (Int::Small(a), Int::Small(b)) => {
                if *b == -1 {
                    return Some(-self);
                }
                if a % b == 0 {
                    Some(Int::Small(a / b))
                } else {
                    None
                }
            }
            _ => {
                let (q, r) = self.to_big().div_rem(&d.to_big());
                if r.is_zero() {
                    Some(Int::from_big(q))
                } else {
                    None
                }
            }
        }
    }

    /// Nonnegative greatest common divisor.
    pub fn gcd(&self, other: &Int) -> Int {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => {
                let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
                while b != 0 {
                    let r = a % b;
                    a = b;
                    b = r;
                }
                Int::from_i128(a as i128)
            }
            _ => Int::from_big(self.to_big().gcd(&other.to_big())),
        }
    }

    /// Nonnegative least common multiple; zero if either argument is zero.
    pub fn lcm(&self, other: &Int) -> Int {
        if self.is_zero() || other.is_zero() {
            return Int::ZERO;
        }
        let g = self.gcd(other);
        (&self.abs().div_exact(&g).expect("gcd divides") * &other.abs()).abs()
    }

    pub fn pow(&self, e: u32) -> Int {
        let mut acc = Int::ONE;
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Self {
        Int::Small(v)
    }
}

impl From<i32> for Int {
    fn from(v: i32) -> Self {
        Int::Small(v as i64)
    }
}

impl From<u32> for Int {
    fn from(v: u32) -> Self {
        Int::Small(v as i64)
    }
}

impl From<BigInt> for Int {
    fn from(v: BigInt) -> Self {
        Int::from_big(v)
    }
}

impl Default for Int {
    fn default() -> Self {
        Int::ZERO
    }
}

impl Ord for Int {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Int {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl core::ops::Add for &Int {
    type Output = Int;
    fn add(self, rhs: &Int) -> Int {
        match (self, rhs) {
            (Int::Small(a), Int::Small(b)) => Int::from_i128(*a as i128 + *b as i128),
            _ => Int::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl core::ops::Sub for &Int {
    type Output = Int;
    fn sub(self, rhs: &Int) -> Int {
        match (self, rhs) {
            (Int::Small(a), Int::Small(b)) => Int::from_i128(*a as i128 - *b as i128),
            _ => Int::from_big(self.to_big() - rhs.to_big()),
        }
    }
}

impl core::ops::Mul for &Int {
    type Output = Int;
    fn mul(self, rhs: &Int) -> Int {
        match (self, rhs) {
            (Int::Small(a), Int::Small(b)) => Int::from_i128(*a as i128 * *b as i128),
            _ => Int::from_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl core::ops::Neg for &Int {
    type Output = Int;
    fn neg(self) -> Int {
        match self {
            Int::Small(a) => Int::from_i128(-(*a as i128)),
            Int::Big(b) => Int::from_big(-b),
        }
    }
}

impl core::ops::Neg for Int {
    type Output = Int;
    fn neg(self) -> Int {
        -&self
    }
}

impl core::ops::AddAssign<&Int> for Int {
    fn add_assign(&mut self, rhs: &Int) {
        *self = &*self + rhs;
    }
}

impl core::ops::SubAssign<&Int> for Int {
    fn sub_assign(&mut self, rhs: &Int) {
        *self = &*self - rhs;
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int::Small(v) => write!(f, "{v}"),
            Int::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseIntError(pub String);

impl FromStr for Int {
    type Err = ParseIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        // Rust's parsers accept a leading '+', the decimal-integer wire format does not.
        if s.starts_with('+') || s.is_empty() {
            return Err(ParseIntError(s.into()));
        }
        if let Ok(v) = s.parse::<i64>() {
            return Ok(Int::Small(v));
        }
        BigInt::from_str(s)
            .map(Int::from_big)
            .map_err(|_| ParseIntError(s.into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    #[test]
    fn promotes_and_demotes_across_i64_boundary() {
        let big = &Int::from(i64::MAX) + &Int::ONE;
        assert!(matches!(big, Int::Big(_)));
        let back = &big - &Int::ONE;
        assert_eq!(back, Int::Small(i64::MAX));
        let neg = -Int::from(i64::MIN);
        assert!(matches!(neg, Int::Big(_)));
        assert_eq!(neg.to_string(), "9223372036854775808");
    }

    #[test]
    fn exact_division_and_gcd() {
        assert_eq!(Int::from(12).div_exact(&Int::from(-4)), Some(Int::from(-3)));
        assert_eq!(Int::from(12).div_exact(&Int::from(5)), None);
        assert_eq!(Int::from(12).div_exact(&Int::ZERO), None);
        assert_eq!(Int::from(-12).gcd(&Int::from(18)), Int::from(6));
        assert_eq!(Int::from(4).lcm(&Int::from(6)), Int::from(12));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert_eq!("-17".parse::<Int>().unwrap(), Int::from(-17));
        assert!("+3".parse::<Int>().is_err());
        assert!("1.5".parse::<Int>().is_err());
        let s = "123456789012345678901234567890";
        assert_eq!(s.parse::<Int>().unwrap().to_string(), s);
    }

    proptest! {
        #[test]
        fn matches_bigint_arithmetic(a in any::<i64>(), b in any::<i64>(), c in any::<i64>()) {
            let (ia, ib, ic) = (Int::from(a), Int::from(b), Int::from(c));
            let (ba, bb, bc) = (BigInt::from(a), BigInt::from(b), BigInt::from(c));
            prop_assert_eq!((&ia + &ib).to_big(), &ba + &bb);
            prop_assert_eq!((&ia - &ib).to_big(), &ba - &bb);
            prop_assert_eq!((&ia * &ib).to_big(), &ba * &bb);
            let mut acc = ic.clone();
            acc.add_mul_assign(&ia, &ib);
            prop_assert_eq!(acc.to_big(), bc + ba * bb);
        }
    }
}
