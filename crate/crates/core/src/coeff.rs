//! Exact rational coefficients.
//!
//! Values whose numerator and denominator fit into `i64` are kept inline; anything
//! larger falls back to a `BigRational`. The representation is canonical (lowest
//! terms, positive denominator, inline whenever possible), so derived equality and
//! hashing agree with numeric equality.

use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coefficient(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(i64, i64),
    Big(BigRational),
}

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        Coefficient(Repr::Small(1, 1))
    }

    pub fn from_int(n: i64) -> Self {
        Coefficient(Repr::Small(n, 1))
    }

    /// `num / den`. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        from_i128(num as i128, den as i128)
    }

    pub fn from_big(r: BigRational) -> Self {
        normalize_big(r)
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => r.clone(),
        }
    }

    /// Parses `n` or `n/d` with an optional leading sign. Returns `None` on malformed
    /// input or a zero denominator.
    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let num = parse_int(num)?;
        let den = match den {
            Some(d) => parse_int(d)?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return None;
        }
        Some(normalize_big(BigRational::new(num, den)))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        match &self.0 {
            Repr::Small(n, d) => {
                assert!(*n != 0, "inverse of zero");
                from_i128(*d as i128, *n as i128)
            }
            Repr::Big(r) => normalize_big(r.recip()),
        }
    }
}

fn parse_int(s: &str) -> Option<BigInt> {
    let (neg, digits) = match s.as_bytes().first()? {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let v = BigInt::parse_bytes(digits.as_bytes(), 10)?;
    Some(if neg { -v } else { v })
}

fn from_i128(mut n: i128, mut d: i128) -> Coefficient {
    debug_assert!(d != 0);
    if n == 0 {
        return Coefficient::zero();
    }
    let g = n.gcd(&d);
    n /= g;
    d /= g;
    if d < 0 {
        n = -n;
        d = -d;
    }
    match (i64::try_from(n), i64::try_from(d)) {
        (Ok(n), Ok(d)) => Coefficient(Repr::Small(n, d)),
        _ => Coefficient(Repr::Big(BigRational::new_raw(BigInt::from(n), BigInt::from(d)))),
    }
}

fn normalize_big(r: BigRational) -> Coefficient {
    match (r.numer().to_i64(), r.denom().to_i64()) {
        (Some(n), Some(d)) => Coefficient(Repr::Small(n, d)),
        _ => Coefficient(Repr::Big(r)),
    }
}

impl Default for Coefficient {
    fn default() -> Self {
        Coefficient::zero()
    }
}

impl From<i64> for Coefficient {
    fn from(n: i64) -> Self {
        Coefficient::from_int(n)
    }
}

impl<'a> Add<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    from_i128(a + c, b)
                } else {
                    from_i128(a * d + c * b, b * d)
                }
            }
            _ => normalize_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl<'a> Sub<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    from_i128(a - c, b)
                } else {
                    from_i128(a * d - c * b, b * d)
                }
            }
            _ => normalize_big(self.to_big() - rhs.to_big()),
        }
    }
}

impl<'a> Mul<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128),
            _ => normalize_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl<'a> Div<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    fn div(self, rhs: &Coefficient) -> Coefficient {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                assert!(*c != 0, "division by zero");
                from_i128(*a as i128 * *d as i128, *b as i128 * *c as i128)
            }
            _ => {
                assert!(!rhs.is_zero(), "division by zero");
                normalize_big(self.to_big() / rhs.to_big())
            }
        }
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        match &self.0 {
            Repr::Small(n, d) => from_i128(-(*n as i128), *d as i128),
            Repr::Big(r) => normalize_big(-r),
        }
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Coefficient> for Coefficient {
            type Output = Coefficient;
            fn $m(self, rhs: Coefficient) -> Coefficient {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(Coefficient::ratio(2, -4), Coefficient::ratio(-1, 2));
        assert_eq!(Coefficient::ratio(0, -5), Coefficient::zero());
        assert!(Coefficient::ratio(3, 3).is_one());
        assert_eq!(Coefficient::parse("-6/4").unwrap(), Coefficient::ratio(-3, 2));
        assert_eq!(Coefficient::parse(" 7 ").unwrap(), Coefficient::from_int(7));
        assert!(Coefficient::parse("1/0").is_none());
        assert!(Coefficient::parse("1.5").is_none());
        assert!(Coefficient::parse("").is_none());
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let m = Coefficient::from_int(i64::MAX);
        let sq = &m * &m;
        assert_eq!(sq.to_big(), big(i64::MAX, 1) * big(i64::MAX, 1));
        let back = &sq / &m;
        assert_eq!(back, m);
        assert!(matches!(back.0, Repr::Small(..)));
        let min = Coefficient::from_int(i64::MIN);
        assert_eq!((-&min).to_big(), -big(i64::MIN, 1));
        assert_eq!(-(-&min), min);
    }

    #[test]
    fn display() {
        assert_eq!(alloc::format!("{}", Coefficient::ratio(-3, 6)), "-1/2");
        assert_eq!(alloc::format!("{}", Coefficient::from_int(4)), "4");
    }

    fn arb() -> impl Strategy<Value = (i64, i64)> {
        prop_oneof![(-50i64..50, 1i64..20), (any::<i64>(), any::<i64>().prop_filter("nonzero", |d| *d != 0)),]
    }

    proptest! {
        #[test]
        fn agrees_with_bigrational((a, b) in arb(), (c, d) in arb()) {
            let x = Coefficient::ratio(a, b);
            let y = Coefficient::ratio(c, d);
            let (bx, by) = (big(a, b), big(c, d));
            prop_assert_eq!((&x + &y).to_big(), &bx + &by);
            prop_assert_eq!((&x - &y).to_big(), &bx - &by);
            prop_assert_eq!((&x * &y).to_big(), &bx * &by);
            if !y.is_zero() {
                prop_assert_eq!((&x / &y).to_big(), &bx / &by);
            }
            prop_assert_eq!(Coefficient::from_big(bx.clone()), x.clone());
            prop_assert_eq!(Coefficient::parse(&alloc::format!("{x}")).unwrap(), x);
        }
    }
}
