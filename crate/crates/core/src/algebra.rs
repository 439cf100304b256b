//! Exact scalars and quaternions over them.
//!
//! Two scalar kinds are supported: [`Rational`] and [`QuadExt`], an element of
//! a quadratic extension `Q(α)` with `α² + pα + q = 0`. Quaternions are
//! generic over the scalar kind; over `Q(α)` zero divisors exist and are
//! representable.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
pub use crate::rational::Rational;

/// Builds the rational `num/den`. Panics when `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

pub fn int(n: i64) -> Rational {
    Rational::from_int(n)
}

/// Exact square root of a rational, if it has one.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    r.checked_sqrt()
}

/// Field operations shared by every scalar kind a [`Quaternion`] can carry.
///
/// `zero_like`/`one_like` exist because extension scalars carry their modulus
/// and cannot produce constants out of thin air.
pub trait Scalar: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn lift_rational(&self, r: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// `None` for zero.
    fn inverse(&self) -> Option<Self>;
    /// Whether two values may be combined arithmetically.
    fn compatible(&self, _other: &Self) -> bool {
        true
    }
}

impl Scalar for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn lift_rational(&self, r: &Rational) -> Self {
        r.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Defining polynomial `t² + pt + q` of a quadratic extension. Irreducible over Q.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Modulus {
    p: Rational,
    q: Rational,
}

impl Modulus {
    pub fn new(p: Rational, q: Rational) -> Result<Self> {
        let disc = &p * &p - int(4) * &q;
        if rational_sqrt(&disc).is_some() {
            return Err(Error::ReducibleModulus(format!("t^2 + ({p})t + ({q})")));
        }
        Ok(Modulus { p, q })
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    /// The root `α` itself.
    pub fn root(&self) -> QuadExt {
        QuadExt {
            a: Rational::zero(),
            b: Rational::one(),
            modulus: self.clone(),
        }
    }

    pub fn embed(&self, r: &Rational) -> QuadExt {
        QuadExt {
            a: r.clone(),
            b: Rational::zero(),
            modulus: self.clone(),
        }
    }
}

/// `a + bα` in `Q(α)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    pub a: Rational,
    pub b: Rational,
    pub modulus: Modulus,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, modulus: Modulus) -> Self {
        QuadExt { a, b, modulus }
    }

    /// The automorphism `α ↦ -p - α` fixing Q (complex conjugation when `α² = -1`).
    pub fn conj_root(&self) -> QuadExt {
        QuadExt {
            a: &self.a - &self.b * &self.modulus.p,
            b: -&self.b,
            modulus: self.modulus.clone(),
        }
    }

    /// Field norm `(a + bα)(a + bᾱ) = a² - abp + b²q`.
    pub fn field_norm(&self) -> Rational {
        let Modulus { p, q } = &self.modulus;
        &self.a * &self.a - &self.a * &self.b * p + &self.b * &self.b * q
    }

    fn check(&self, other: &QuadExt) {
        assert!(self.modulus == other.modulus, "quadratic extension modulus mismatch");
    }
}

/// Free-function form of [`QuadExt::conj_root`].
pub fn ext_conj_root(s: &QuadExt) -> QuadExt {
    s.conj_root()
}

impl Scalar for QuadExt {
    fn zero_like(&self) -> Self {
        self.modulus.embed(&Rational::zero())
    }
    fn one_like(&self) -> Self {
        self.modulus.embed(&Rational::one())
    }
    fn lift_rational(&self, r: &Rational) -> Self {
        self.modulus.embed(r)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }
    fn plus(&self, o: &Self) -> Self {
        self.check(o);
        QuadExt::new(&self.a + &o.a, &self.b + &o.b, self.modulus.clone())
    }
    fn minus(&self, o: &Self) -> Self {
        self.check(o);
        QuadExt::new(&self.a - &o.a, &self.b - &o.b, self.modulus.clone())
    }
    fn times(&self, o: &Self) -> Self {
        self.check(o);
        // α² = -pα - q
        let bd = &self.b * &o.b;
        let a = &self.a * &o.a - &bd * &self.modulus.q;
        let b = &self.a * &o.b + &self.b * &o.a - &bd * &self.modulus.p;
        QuadExt::new(a, b, self.modulus.clone())
    }
    fn negated(&self) -> Self {
        QuadExt::new(-&self.a, -&self.b, self.modulus.clone())
    }
    fn inverse(&self) -> Option<Self> {
        // The modulus is irreducible, so the field norm vanishes only at zero.
        let n = self.field_norm();
        if Zero::is_zero(&n) {
            return None;
        }
        let c = self.conj_root();
        Some(QuadExt::new(&c.a / &n, &c.b / &n, self.modulus.clone()))
    }
    fn compatible(&self, other: &Self) -> bool {
        self.modulus == other.modulus
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}α)", self.a, self.b)
    }
}

/// `w + x𝐢 + y𝐣 + z𝐤`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quaternion<S> {
    pub w: S,
    pub x: S,
    pub y: S,
    pub z: S,
}

/// Quaternion with rational coefficients.
pub type Quat = Quaternion<Rational>;

/// Quaternion over a quadratic extension of Q.
pub type ExtQuaternion = Quaternion<QuadExt>;

impl<S: Scalar> Quaternion<S> {
    pub fn new(w: S, x: S, y: S, z: S) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn components(&self) -> [&S; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    pub fn from_scalar(s: S) -> Self {
        let zero = s.zero_like();
        Quaternion::new(s, zero.clone(), zero.clone(), zero)
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(|c| c.is_zero())
    }

    pub fn is_real(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn zero_like(&self) -> Self {
        Quaternion::from_scalar(self.w.zero_like())
    }

    pub fn one_like(&self) -> Self {
        Quaternion::from_scalar(self.w.one_like())
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(self.w.clone(), self.x.negated(), self.y.negated(), self.z.negated())
    }

    /// `w² + x² + y² + z²`.
    pub fn norm(&self) -> S {
        self.w
            .times(&self.w)
            .plus(&self.x.times(&self.x))
            .plus(&self.y.times(&self.y))
            .plus(&self.z.times(&self.z))
    }

    pub fn scale(&self, s: &S) -> Self {
        Quaternion::new(self.w.times(s), self.x.times(s), self.y.times(s), self.z.times(s))
    }

    fn compatible_with(&self, other: &Self) -> bool {
        let s = self.w.clone();
        self.components()
            .iter()
            .chain(other.components().iter())
            .all(|c| s.compatible(c))
    }

    /// Hamilton product, failing on mixed extension moduli.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if !self.compatible_with(other) {
            return Err(Error::ModulusMismatch);
        }
        Ok(self.hamilton(other))
    }

    fn hamilton(&self, o: &Self) -> Self {
        let (a1, b1, c1, d1) = (&self.w, &self.x, &self.y, &self.z);
        let (a2, b2, c2, d2) = (&o.w, &o.x, &o.y, &o.z);
        let w = a1
            .times(a2)
            .minus(&b1.times(b2))
            .minus(&c1.times(c2))
            .minus(&d1.times(d2));
        let x = a1
            .times(b2)
            .plus(&b1.times(a2))
            .plus(&c1.times(d2))
            .minus(&d1.times(c2));
        let y = a1
            .times(c2)
            .minus(&b1.times(d2))
            .plus(&c1.times(a2))
            .plus(&d1.times(b2));
        let z = a1
            .times(d2)
            .plus(&b1.times(c2))
            .minus(&c1.times(b2))
            .plus(&d1.times(a2));
        Quaternion::new(w, x, y, z)
    }

    /// `conj(q) / ‖q‖`. Fails with `ZeroNorm` for zero and for zero divisors.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm();
        match n.inverse() {
            Some(inv) => Ok(self.conj().scale(&inv)),
            None => Err(Error::ZeroNorm),
        }
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.hamilton(other) == other.hamilton(self)
    }
}

impl<S: Scalar> Add for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn add(self, o: Self) -> Quaternion<S> {
        Quaternion::new(
            self.w.plus(&o.w),
            self.x.plus(&o.x),
            self.y.plus(&o.y),
            self.z.plus(&o.z),
        )
    }
}

impl<S: Scalar> Sub for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn sub(self, o: Self) -> Quaternion<S> {
        Quaternion::new(
            self.w.minus(&o.w),
            self.x.minus(&o.x),
            self.y.minus(&o.y),
            self.z.minus(&o.z),
        )
    }
}

/// Panics on mixed extension moduli; use [`Quaternion::try_mul`] to get an error instead.
impl<S: Scalar> Mul for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn mul(self, o: Self) -> Quaternion<S> {
        self.try_mul(o).expect("quaternion modulus mismatch")
    }
}

impl<S: Scalar> Neg for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn neg(self) -> Quaternion<S> {
        Quaternion::new(self.w.negated(), self.x.negated(), self.y.negated(), self.z.negated())
    }
}

impl Quat {
    pub fn zero() -> Self {
        Quaternion::from_scalar(Rational::zero())
    }

    pub fn one() -> Self {
        Quaternion::from_scalar(Rational::one())
    }

    pub fn real(r: Rational) -> Self {
        Quaternion::from_scalar(r)
    }

    pub fn unit_i() -> Self {
        Quat::from_ints(0, 1, 0, 0)
    }

    pub fn unit_j() -> Self {
        Quat::from_ints(0, 0, 1, 0)
    }

    pub fn unit_k() -> Self {
        Quat::from_ints(0, 0, 0, 1)
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Quaternion::new(int(w), int(x), int(y), int(z))
    }

    /// Map into `Q(α)[𝐢,𝐣,𝐤]`.
    pub fn embed(&self, modulus: &Modulus) -> ExtQuaternion {
        Quaternion::new(
            modulus.embed(&self.w),
            modulus.embed(&self.x),
            modulus.embed(&self.y),
            modulus.embed(&self.z),
        )
    }
}

impl ExtQuaternion {
    /// Applies [`ext_conj_root`] to every component.
    pub fn conj_root(&self) -> Self {
        Quaternion::new(
            self.w.conj_root(),
            self.x.conj_root(),
            self.y.conj_root(),
            self.z.conj_root(),
        )
    }
}

impl fmt::Display for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, unit) in self.components().into_iter().zip(["", "i", "j", "k"]) {
            if Zero::is_zero(c) {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (unit, mag.is_one()) {
                ("", _) => write!(f, "{mag}")?,
                (u, true) => write!(f, "{u}")?,
                (u, false) => write!(f, "{mag}*{u}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
