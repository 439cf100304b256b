//! Univariate polynomials over Q and their factorization into irreducible quadratics.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use num_traits::{One, Zero};

use crate::algebra::{int, Rational};
use crate::error::{Error, Result};
use crate::roots::aberth;

pub const DEFAULT_DENOMINATOR_BOUND: u64 = 1_000_000;

static DENOMINATOR_BOUND: AtomicU64 = AtomicU64::new(DEFAULT_DENOMINATOR_BOUND);

/// Sets the denominator bound used when reconstructing quadratic factors from
/// floating-point roots. Only affects completeness, never soundness.
pub fn set_denominator_bound(bound: u64) {
    DENOMINATOR_BOUND.store(bound.max(1), AtomicOrdering::Relaxed);
}

pub fn denominator_bound() -> u64 {
    DENOMINATOR_BOUND.load(AtomicOrdering::Relaxed)
}

/// Polynomial with rational coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        RatPoly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RatPoly::new(vec![c])
    }

    /// `t² + pt + q`.
    pub fn quadratic(p: Rational, q: Rational) -> Self {
        RatPoly::new(vec![q, p, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RatPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => RatPoly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(RatPoly::one(), |acc, _| &acc * self)
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, g: &RatPoly) -> (RatPoly, RatPoly) {
        let dg = g.degree().expect("division by zero polynomial");
        let lc_inv = g.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dg)];
        while rem.len() > dg {
            let top = rem.len() - 1;
            let c = rem[top].clone() * &lc_inv;
            if !c.is_zero() {
                let shift = top - dg;
                for (i, gc) in g.coeffs.iter().enumerate() {
                    rem[shift + i] -= &c * gc;
                }
                quot[shift] = c;
            }
            rem.pop();
        }
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    pub fn rem(&self, g: &RatPoly) -> RatPoly {
        self.div_rem(g).1
    }

    pub fn divides(&self, f: &RatPoly) -> bool {
        !self.is_zero() && f.rem(self).is_zero()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(Rational::to_f64).collect()
    }

    /// Formats with the given variable name, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

/// Degree first, then coefficients from the top down.
impl Ord for RatPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for RatPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, o: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, o: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, o: &RatPoly) -> RatPoly {
        if self.is_zero() || o.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn rpoly_gcd(f: &RatPoly, g: &RatPoly) -> RatPoly {
    let mut a = f.monic();
    let mut b = g.monic();
    while !b.is_zero() {
        let r = a.rem(&b).monic();
        a = b;
        b = r;
    }
    a
}

/// `f / g`, failing unless the division is exact.
pub fn exact_div(f: &RatPoly, g: &RatPoly) -> Result<RatPoly> {
    if g.is_zero() {
        return Err(Error::NotDivisible);
    }
    let (q, r) = f.div_rem(g);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::NotDivisible)
    }
}

/// Yun's square-free decomposition of a monic polynomial: pairs `(a_i, i)` with
/// `f = ∏ a_i^i`, each `a_i` square-free and non-constant.
pub fn square_free_decomposition(f: &RatPoly) -> Vec<(RatPoly, usize)> {
    let f = f.monic();
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let df = f.derivative();
    let a0 = rpoly_gcd(&f, &df);
    let mut b = exact_div(&f, &a0).expect("gcd divides f");
    let mut c = exact_div(&df, &a0).expect("gcd divides f'");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while !b.is_constant() {
        let a = rpoly_gcd(&b, &d);
        b = exact_div(&b, &a).expect("gcd divides b");
        c = exact_div(&d, &a).expect("gcd divides d");
        d = &c - &b.derivative();
        if !a.is_constant() {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

/// `unit · ∏ factor^multiplicity` with monic irreducible quadratic factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticFactorization {
    pub unit: Rational,
    /// Sorted by the canonical polynomial order, no repeated factors.
    pub factors: Vec<(RatPoly, usize)>,
}

impl QuadraticFactorization {
    pub fn expand(&self) -> RatPoly {
        self.factors
            .iter()
            .fold(RatPoly::constant(self.unit.clone()), |acc, (m, e)| &acc * &m.pow(*e))
    }

    /// Factors listed with repetition, in canonical order.
    pub fn flattened(&self) -> Vec<RatPoly> {
        self.factors
            .iter()
            .flat_map(|(m, e)| std::iter::repeat_n(m.clone(), *e))
            .collect()
    }

    pub fn multiplicity(&self, m: &RatPoly) -> usize {
        self.factors.iter().find(|(f, _)| f == m).map_or(0, |(_, e)| *e)
    }

    pub fn total_degree(&self) -> usize {
        self.factors.iter().map(|(_, e)| 2 * e).sum()
    }
}

/// Discriminant `p² - 4q` of a monic quadratic.
pub fn discriminant(m: &RatPoly) -> Rational {
    let p = m.coeff(1);
    &p * &p - int(4) * m.coeff(0)
}

fn is_real_irreducible_quadratic(m: &RatPoly) -> bool {
    m.degree() == Some(2) && m.leading().is_some_and(One::is_one) && discriminant(m).is_negative()
}

/// Factors a nonzero polynomial into monic irreducible quadratics with negative
/// discriminant. Anything else (odd degree, real roots) is `NotQuadraticallySplit`.
pub fn quadratic_split(p: &RatPoly) -> Result<QuadraticFactorization> {
    let unit = p
        .leading()
        .cloned()
        .ok_or_else(|| Error::NotQuadraticallySplit("0".into()))?;
    let mut factors = Vec::new();
    for (part, e) in square_free_decomposition(p) {
        for m in split_square_free(&part)? {
            factors.push((m, e));
        }
    }
    factors.sort();
    let result = QuadraticFactorization { unit, factors };
    if &result.expand() != p {
        return Err(Error::InternalInconsistency(format!(
            "quadratic split of {p} does not re-expand"
        )));
    }
    Ok(result)
}

/// Continued-fraction convergents of `x` with denominators up to `bound`.
fn convergents(x: f64, bound: u64) -> Vec<Rational> {
    let Some(exact) = Rational::from_f64(x) else {
        return Vec::new();
    };
    exact.convergents().take_while(|r| *r.denom() <= bound).collect()
}

/// Rational candidates near `x`, simplest first.
fn reconstruct(x: f64, bound: u64) -> Vec<Rational> {
    let tol = 1e-6 * x.abs().max(1.0);
    convergents(x, bound)
        .into_iter()
        .filter(|r| (r.to_f64() - x).abs() <= tol)
        .take(3)
        .collect()
}

/// Splits a monic square-free polynomial into monic irreducible quadratics.
fn split_square_free(f: &RatPoly) -> Result<Vec<RatPoly>> {
    let not_split = || Error::NotQuadraticallySplit(f.to_string());
    if f.degree().unwrap_or(0) % 2 == 1 {
        return Err(not_split());
    }
    let mut rest = f.monic();
    let mut found = Vec::new();
    // Later passes rotate the starting configuration and widen the denominator bound.
    let passes = [(0.0, 1u64), (1.3, 1), (2.1, 1000)];
    let mut pass = 0;
    while !rest.is_constant() {
        if rest.degree() == Some(2) {
            if !is_real_irreducible_quadratic(&rest) {
                return Err(not_split());
            }
            found.push(rest);
            return Ok(found);
        }
        let (rotation, widen) = passes[pass];
        let bound = denominator_bound().saturating_mul(widen);
        let before = rest.degree();
        for z in aberth(&rest.to_f64(), 1e-12, rotation) {
            if z.im <= 0.0 || rest.is_constant() {
                continue;
            }
            let p_approx = -2.0 * z.re;
            let q_approx = z.norm_sqr();
            'candidates: for p in reconstruct(p_approx, bound) {
                for q in reconstruct(q_approx, bound) {
                    let m = RatPoly::quadratic(p.clone(), q);
                    if !is_real_irreducible_quadratic(&m) {
                        continue;
                    }
                    if let Ok(quot) = exact_div(&rest, &m) {
                        found.push(m);
                        rest = quot;
                        break 'candidates;
                    }
                }
            }
        }
        if rest.degree() == before {
            pass += 1;
            if pass == passes.len() {
                return Err(not_split());
            }
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use proptest::prelude::*;

    fn poly(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    fn q(p: i64, q: i64) -> RatPoly {
        RatPoly::quadratic(int(p), int(q))
    }

    #[test]
    fn gcd_examples() {
        let a = q(0, 1);
        let b = q(0, 2);
        assert_eq!(rpoly_gcd(&(&a * &a), &(&a * &b)), a);
        let f = poly(&[2, 4, 6]);
        assert_eq!(rpoly_gcd(&f, &RatPoly::zero()), f.monic());
        assert_eq!(rpoly_gcd(&q(-2, 2), &q(-2, 3)), RatPoly::one());
        assert_eq!(rpoly_gcd(&RatPoly::zero(), &RatPoly::zero()), RatPoly::zero());
    }

    #[test]
    fn exact_division() {
        let a = q(0, 1);
        assert_eq!(exact_div(&(&a * &a), &a).unwrap(), a);
        assert_eq!(exact_div(&a, &q(0, 2)), Err(Error::NotDivisible));
        assert_eq!(exact_div(&a, &RatPoly::zero()), Err(Error::NotDivisible));
    }

    #[test]
    fn split_paper_norms() {
        let a = q(0, 1);
        let s = quadratic_split(&a.pow(3)).unwrap();
        assert_eq!(s.factors, vec![(a.clone(), 3)]);

        let p = &(&q(-2, 2) * &q(-2, 3)) * &q(-4, 5);
        let s = quadratic_split(&p).unwrap();
        assert_eq!(s.factors.len(), 3);
        for m in [q(-2, 2), q(-2, 3), q(-4, 5)] {
            assert_eq!(s.multiplicity(&m), 1);
        }

        let p = &q(0, 3).pow(2) * &q(0, 1).pow(2);
        let s = quadratic_split(&p).unwrap();
        assert_eq!(s.factors, vec![(q(0, 1), 2), (q(0, 3), 2)]);
    }

    #[test]
    fn split_degree_eight() {
        let p = &(&(&q(0, 2) * &q(-2, 15)) * &q(-10, 28)) * &q(-6, 39);
        let s = quadratic_split(&p).unwrap();
        assert_eq!(s.factors.len(), 4);
        assert_eq!(s.expand(), p);
    }

    #[test]
    fn split_keeps_unit_and_fractions() {
        let m1 = RatPoly::quadratic(rat(-1, 2), rat(37, 36));
        let m2 = RatPoly::quadratic(rat(2, 3), rat(5, 4));
        let p = (&m1 * &m2).scale(&rat(-7, 3));
        let s = quadratic_split(&p).unwrap();
        assert_eq!(s.unit, rat(-7, 3));
        assert_eq!(s.expand(), p);
    }

    #[test]
    fn split_rejects_non_quadratic_inputs() {
        assert!(matches!(
            quadratic_split(&poly(&[1, 1])),
            Err(Error::NotQuadraticallySplit(_))
        ));
        // t^2 - 2 has real irrational roots
        assert!(matches!(
            quadratic_split(&poly(&[-2, 0, 1])),
            Err(Error::NotQuadraticallySplit(_))
        ));
        // (t - 1)(t + 2)(t^2 + 1)
        let p = &(&poly(&[-1, 1]) * &poly(&[2, 1])) * &q(0, 1);
        assert!(matches!(quadratic_split(&p), Err(Error::NotQuadraticallySplit(_))));
        assert!(quadratic_split(&RatPoly::zero()).is_err());
        // t^4 + 1 is irreducible over Q
        assert!(matches!(
            quadratic_split(&poly(&[1, 0, 0, 0, 1])),
            Err(Error::NotQuadraticallySplit(_))
        ));
    }

    #[test]
    fn constants_split_trivially() {
        let s = quadratic_split(&RatPoly::constant(int(5))).unwrap();
        assert!(s.factors.is_empty());
        assert_eq!(s.unit, int(5));
    }

    #[test]
    fn square_free_parts() {
        let a = q(0, 1);
        let b = q(-2, 2);
        let f = &(&a.pow(3) * &b) * &poly(&[1, 1]).pow(2);
        let parts = square_free_decomposition(&f);
        assert_eq!(parts, vec![(b, 1), (poly(&[1, 1]), 2), (a, 3)]);
    }

    #[test]
    fn display() {
        assert_eq!(q(-2, 2).to_string(), "t^2 - 2*t + 2");
        assert_eq!(RatPoly::quadratic(rat(1, 2), int(0)).display_in("s"), "s^2 + 1/2*s");
        assert_eq!(RatPoly::zero().to_string(), "0");
    }

    /// Monic quadratics with negative discriminant: norms of t - h for small rational h.
    fn norm_quadratic() -> impl Strategy<Value = RatPoly> {
        (-6i64..=6, 1i64..=3, 1i64..=20, 1i64..=4).prop_map(|(a, da, b, db)| {
            let w = rat(a, da);
            let v = rat(b, db);
            RatPoly::quadratic(-int(2) * &w, &w * &w + &v)
        })
    }

    fn random_poly() -> impl Strategy<Value = RatPoly> {
        prop::collection::vec(-5i64..=5, 0..5).prop_map(|c| poly(&c))
    }

    proptest! {
        #[test]
        fn split_reexpands(ms in prop::collection::vec(norm_quadratic(), 1..=6), unit in 1i64..5) {
            let p = ms.iter().fold(RatPoly::constant(int(unit)), |acc, m| &acc * m);
            let s = quadratic_split(&p).unwrap();
            prop_assert_eq!(s.expand(), p);
            prop_assert_eq!(s.total_degree(), 2 * ms.len());
        }

        #[test]
        fn split_multiplicity(m in norm_quadratic(), k in 1usize..=4) {
            let s = quadratic_split(&m.pow(k)).unwrap();
            prop_assert_eq!(s.factors, vec![(m, k)]);
        }

        #[test]
        fn gcd_divides_and_scales(f in random_poly(), g in random_poly(), h in random_poly()) {
            let d = rpoly_gcd(&g, &h);
            if !d.is_zero() {
                prop_assert!(d.divides(&g) && d.divides(&h));
            }
            let lhs = rpoly_gcd(&(&f * &g), &(&f * &h));
            let rhs = (&f * &d).monic();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
