//! Null quadric and its two rulings, evaluated at the complex roots of `P`.
//!
//! A complex root is represented as the root `α` of a monic irreducible
//! quadratic `M`, so every computation stays exact in `Q(α)`.

use crate::algebra::{ExtQuaternion, Modulus, Scalar};
use crate::error::{Error, Result};
use crate::realpoly::RatPoly;
use crate::starone::{cardinalities, prepare, MultiplicityCardinalities, Prepared, StarOnePoly};

pub fn is_null(q: &ExtQuaternion) -> Result<bool> {
    if q.is_zero() {
        return Err(Error::ZeroInput);
    }
    Ok(q.norm().is_zero())
}

/// Whether `p` and `q` are proportional, via vanishing 2×2 minors.
pub fn same_projective_point(p: &ExtQuaternion, q: &ExtQuaternion) -> Result<bool> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroInput);
    }
    let a = p.components();
    let b = q.components();
    for i in 0..4 {
        for j in i + 1..4 {
            if !a[i].times(b[j]).minus(&a[j].times(b[i])).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpanKind {
    Line,
    Point,
}

/// The span `[Q₀(α)] ∨ [Q₁(α)]` at a root `α` of one quadratic factor of `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanClassification {
    pub kind: SpanKind,
    pub on_left_ruling: bool,
    pub on_right_ruling: bool,
    pub lambda: usize,
    pub rho: usize,
}

fn classify_at(q0: &ExtQuaternion, q1: &ExtQuaternion) -> (SpanKind, bool, bool) {
    let point = q0.is_zero() || q1.is_zero() || same_projective_point(q0, q1).unwrap_or(true);
    let kind = if point { SpanKind::Point } else { SpanKind::Line };
    let on_left = (q1 * &q0.conj()).is_zero();
    let on_right = (&q0.conj() * q1).is_zero();
    (kind, on_left, on_right)
}

fn modulus_of(m: &RatPoly) -> Result<Modulus> {
    let not_factor = || Error::MNotFactorOfP(m.to_string());
    if m.degree() != Some(2) || !m.leading().is_some_and(num_traits::One::is_one) {
        return Err(not_factor());
    }
    Modulus::new(m.coeff(1), m.coeff(0)).map_err(|_| not_factor())
}

pub fn classify_span(q: &StarOnePoly, m: &RatPoly) -> Result<SpanClassification> {
    let prep = prepare(q)?;
    let modulus = modulus_of(m)?;
    if !m.divides(&prep.split.p) {
        return Err(Error::MNotFactorOfP(m.to_string()));
    }
    classify_prepared(&prep, &cardinalities(&prep), m, &modulus)
}

fn classify_prepared(
    prep: &Prepared,
    mc: &MultiplicityCardinalities,
    m: &RatPoly,
    modulus: &Modulus,
) -> Result<SpanClassification> {
    let qn = &prep.qn;
    let v0 = qn.q0().eval_ext(modulus);
    let v1 = qn.q1().eval_ext(modulus);
    let here = classify_at(&v0, &v1);
    let there = classify_at(&v0.conj_root(), &v1.conj_root());
    if here != there {
        return Err(Error::InternalInconsistency(format!(
            "classification at the two roots of {m} differs"
        )));
    }
    let (kind, on_left_ruling, on_right_ruling) = here;
    Ok(SpanClassification {
        kind,
        on_left_ruling,
        on_right_ruling,
        lambda: mc.lambda(m),
        rho: mc.rho(m),
    })
}

/// Membership of `[q]` in the left ruling `q·conj(h) = 0` and the right ruling
/// `conj(h)·q = 0` through the null point `[h]`.
pub fn ruling_memberships(q: &ExtQuaternion, h: &ExtQuaternion) -> Result<(bool, bool)> {
    if q.is_zero() || h.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !h.norm().is_zero() {
        return Err(Error::NotOnNullQuadric);
    }
    let hc = h.conj();
    Ok(((q * &hc).is_zero(), (&hc * q).is_zero()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RulingReport {
    pub rows: Vec<(RatPoly, SpanClassification)>,
    pub a_count: usize,
    pub b_count: usize,
    pub p_degree: usize,
}

impl RulingReport {
    /// `deg P = #A + #B`.
    pub fn is_unique(&self) -> bool {
        self.p_degree == self.a_count + self.b_count
    }
}

pub fn rulings_report(q: &StarOnePoly) -> Result<RulingReport> {
    let prep = prepare(q)?;
    let mc = cardinalities(&prep);
    let rows = mc
        .per_quadratic
        .keys()
        .map(|m| Ok((m.clone(), classify_prepared(&prep, &mc, m, &modulus_of(m)?)?)))
        .collect::<Result<Vec<_>>>()?;
    let a_count = 2 * rows.iter().map(|(_, c)| c.lambda).sum::<usize>();
    let b_count = 2 * rows.iter().map(|(_, c)| c.rho).sum::<usize>();
    Ok(RulingReport {
        rows,
        a_count,
        b_count,
        p_degree: prep.split.p.degree().unwrap_or(0),
    })
}
