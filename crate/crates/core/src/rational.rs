//! Arbitrary-precision rationals.
//!
//! A thin wrapper around `malachite_q::Rational`, which stores small values
//! inline. Only the operations the crate needs are exposed.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use malachite_base::num::arithmetic::traits::{Abs, CheckedSqrt, Reciprocal, Sign};
use malachite_base::num::conversion::traits::{IsInteger, RoundingFrom};
use malachite_base::rounding_modes::RoundingMode;
use malachite_nz::integer::Integer;
use malachite_nz::natural::Natural;
use malachite_q::rational::conversion::traits::Convergents;
use num_traits::{One, Zero};

/// Exact rational number, always kept in lowest terms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(malachite_q::Rational);

impl Rational {
    /// `num/den`. Panics when `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(malachite_q::Rational::from_signeds(num, den))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(malachite_q::Rational::from(n))
    }

    /// `num/den` from big integers. Panics when `den == 0`.
    pub fn from_integers(num: Integer, den: Integer) -> Self {
        assert!(den != 0u32, "zero denominator");
        Rational(malachite_q::Rational::from_integers(num, den))
    }

    /// Signed numerator.
    pub fn numer(&self) -> Integer {
        let n = Integer::from(self.0.numerator_ref());
        if self.is_negative() {
            -n
        } else {
            n
        }
    }

    /// Positive denominator.
    pub fn denom(&self) -> &Natural {
        self.0.denominator_ref()
    }

    pub fn is_integer(&self) -> bool {
        (&self.0).is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.sign() == Ordering::Less
    }

    pub fn is_positive(&self) -> bool {
        self.0.sign() == Ordering::Greater
    }

    pub fn abs(&self) -> Self {
        Rational((&self.0).abs())
    }

    /// `1/self`. Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational((&self.0).reciprocal())
    }

    /// Exact square root, if there is one.
    pub fn checked_sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        (&self.0).checked_sqrt().map(Rational)
    }

    /// Nearest `f64`.
    pub fn to_f64(&self) -> f64 {
        f64::rounding_from(&self.0, RoundingMode::Nearest).0
    }

    /// The exact value of a finite float.
    pub fn from_f64(x: f64) -> Option<Self> {
        malachite_q::Rational::try_from(x).ok().map(Rational)
    }

    /// Continued-fraction convergents, simplest first.
    pub fn convergents(&self) -> impl Iterator<Item = Rational> {
        (&self.0).convergents().map(Rational)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for Rational {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        malachite_q::Rational::from_str(s).map(Rational)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<Integer> for Rational {
    fn from(n: Integer) -> Self {
        Rational(malachite_q::Rational::from(n))
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational(malachite_q::Rational::from(0u32))
    }
    fn is_zero(&self) -> bool {
        self.0 == 0u32
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational(malachite_q::Rational::from(1u32))
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident, $atr:ident, $af:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $f(self, o: &Rational) -> Rational {
                Rational((&self.0).$f(&o.0))
            }
        }
        impl $tr<Rational> for &Rational {
            type Output = Rational;
            fn $f(self, o: Rational) -> Rational {
                Rational((&self.0).$f(o.0))
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $f(self, o: &Rational) -> Rational {
                Rational(self.0.$f(&o.0))
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $f(self, o: Rational) -> Rational {
                Rational(self.0.$f(o.0))
            }
        }
        impl $atr<&Rational> for Rational {
            fn $af(&mut self, o: &Rational) {
                self.0.$af(&o.0);
            }
        }
        impl $atr<Rational> for Rational {
            fn $af(&mut self, o: Rational) {
                self.0.$af(o.0);
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign);
binop!(Sub, sub, SubAssign, sub_assign);
binop!(Mul, mul, MulAssign, mul_assign);
binop!(Div, div, DivAssign, div_assign);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}
