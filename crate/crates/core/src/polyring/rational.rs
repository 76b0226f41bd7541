//! Exact rational coefficients.
//!
//! Almost every coefficient met while building the invariants is a small
//! integer, so values are kept as a reduced `i64` fraction and promoted to
//! an arbitrary-precision [`BigRational`] only when an operation would
//! overflow. The representation is canonical: a value that fits the small
//! form is never stored in the big form, so derived equality and hashing
//! are value equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Rational {
    /// `num / den` in lowest terms with `den > 0`.
    Small {
        num: i64,
        den: i64,
    },
    Big(Box<BigRational>),
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    pub const ZERO: Rational = Rational::Small { num: 0, den: 1 };
    pub const ONE: Rational = Rational::Small { num: 1, den: 1 };

    pub fn from_int(n: i64) -> Self {
        Rational::Small { num: n, den: 1 }
    }

    /// Builds `num / den`, reducing and normalizing the sign.
    ///
    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        Self::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd_i128(num, den);
        let (mut n, mut d) = if g > 1 {
            (num / g, den / g)
        } else {
            (num, den)
        };
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(num), Ok(den)) => Rational::Small { num, den },
            _ => Rational::Big(Box::new(BigRational::new_raw(
                BigInt::from(n),
                BigInt::from(d),
            ))),
        }
    }

    /// Canonicalizes a big rational, demoting it when it fits.
    pub fn from_big(r: BigRational) -> Self {
        let num = r.numer().to_i64();
        let den = r.denom().to_i64();
        match (num, den) {
            (Some(num), Some(den)) => Rational::Small { num, den },
            _ => Rational::Big(Box::new(r)),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rational::Small { num, den } => {
                BigRational::new_raw(BigInt::from(*num), BigInt::from(*den))
            }
            Rational::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rational::Small { num: 0, .. })
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rational::Small { num: 1, den: 1 })
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rational::Small { den, .. } => *den == 1,
            Rational::Big(b) => b.is_integer(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Rational::Small { num, .. } => BigInt::from(*num),
            Rational::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Rational::Small { den, .. } => BigInt::from(*den),
            Rational::Big(b) => b.denom().clone(),
        }
    }

    pub fn signum(&self) -> i32 {
        match self {
            Rational::Small { num, .. } => num.signum() as i32,
            Rational::Big(b) => {
                if b.is_negative() {
                    -1
                } else if b.is_zero() {
                    0
                } else {
                    1
                }
            }
        }
    }

    pub fn recip(&self) -> Rational {
        assert!(!self.is_zero(), "reciprocal of zero");
        match self {
            Rational::Small { num, den } => Self::from_i128(*den as i128, *num as i128),
            Rational::Big(b) => Self::from_big(b.recip()),
        }
    }

    pub fn pow(&self, exp: u32) -> Rational {
        let mut acc = Rational::ONE;
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    fn add_ref(&self, other: &Rational) -> Rational {
        if let (Rational::Small { num: a, den: b }, Rational::Small { num: c, den: d }) =
            (self, other)
        {
            if *b == 1 && *d == 1 {
                if let Some(s) = a.checked_add(*c) {
                    return Rational::Small { num: s, den: 1 };
                }
            }
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            if let (Some(x), Some(y)) = (a.checked_mul(d), c.checked_mul(b)) {
                if let Some(n) = x.checked_add(y) {
                    return Self::from_i128(n, b * d);
                }
            }
        }
        Self::from_big(self.to_big() + other.to_big())
    }

    fn mul_ref(&self, other: &Rational) -> Rational {
        if let (Rational::Small { num: a, den: b }, Rational::Small { num: c, den: d }) =
            (self, other)
        {
            if *b == 1 && *d == 1 {
                if let Some(p) = a.checked_mul(*c) {
                    return Rational::Small { num: p, den: 1 };
                }
            }
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            return Self::from_i128(a * c, b * d);
        }
        Self::from_big(self.to_big() * other.to_big())
    }

    fn neg_ref(&self) -> Rational {
        match self {
            Rational::Small { num, den } => match num.checked_neg() {
                Some(n) => Rational::Small { num: n, den: *den },
                None => Self::from_big(-self.to_big()),
            },
            Rational::Big(b) => Self::from_big(-(**b).clone()),
        }
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::ZERO
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_big(BigRational::from_integer(n))
    }
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        self.add_ref(rhs)
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        self.add_ref(&rhs.neg_ref())
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        self.mul_ref(rhs)
    }
}

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        self.mul_ref(&rhs.recip())
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        self.neg_ref()
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        self.neg_ref()
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        *self = self.add_ref(rhs);
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        *self = self.add_ref(&rhs.neg_ref());
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        if let (Rational::Small { num: a, den: b }, Rational::Small { num: c, den: d }) =
            (self, other)
        {
            return (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128));
        }
        self.to_big().cmp(&other.to_big())
    }
}

impl fmt::Display for Rational {
    /// Always `num/den`, the form used by the `BINV 1` text format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small { num, den } => write!(f, "{num}/{den}"),
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
        write!(f, "invalid rational `{}`", self.0)
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `n` or `n/d` with `d > 0`; the fraction need not be reduced.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num: BigInt = n.parse().map_err(|_| err())?;
        let den: BigInt = d.parse().map_err(|_| err())?;
        if !den.is_positive() {
            return Err(err());
        }
        let g = num.gcd(&den);
        let r = if g.is_one() {
            BigRational::new_raw(num, den)
        } else {
            BigRational::new_raw(num / &g, den / &g)
        };
        Ok(Rational::from_big(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_normalizes_sign() {
        assert_eq!(Rational::new(2, -4), Rational::Small { num: -1, den: 2 });
        assert_eq!(Rational::new(0, -7), Rational::ZERO);
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Rational::from_int(i64::MAX);
        let sum = &big + &big;
        assert!(matches!(sum, Rational::Big(_)));
        let back = &sum - &big;
        assert_eq!(back, big);
        assert!(matches!(back, Rational::Small { .. }));
        let sq = &big * &big;
        assert_eq!(&sq / &big, big);
    }

    #[test]
    fn min_value_negation() {
        let m = Rational::from_int(i64::MIN);
        let n = -&m;
        assert!(matches!(n, Rational::Big(_)));
        assert_eq!(-&n, m);
    }

    #[test]
    fn parse_and_display() {
        assert!("6/-3".parse::<Rational>().is_err());
        let r: Rational = "6/4".parse().unwrap();
        assert_eq!(r.to_string(), "3/2");
        let r: Rational = "-123456789012345678901234567890/1".parse().unwrap();
        assert_eq!(r.to_string(), "-123456789012345678901234567890/1");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn ordering_matches_value() {
        assert!(Rational::new(1, 3) < Rational::new(1, 2));
        assert!(Rational::new(-1, 2) < Rational::ZERO);
    }
}
