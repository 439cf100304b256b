//! JSON encodings shared by the command-line tool and the browser demo.
//!
//! Rationals are strings `"num/den"` (always with a denominator), quaternions
//! are `[w, x, y, z]`, polynomials are coefficient arrays, lowest degree first.

use serde_json::{json, Value};

use crate::algebra::{Quat, Rational};
use crate::geometry::{RulingReport, SpanClassification, SpanKind};
use crate::qpoly::{QPoly, UnivariateFactorization};
use crate::realpoly::RatPoly;
use crate::starone::{ClassSignature, Factorization, NormSplit, StarOnePoly};

pub fn rational(r: &Rational) -> Value {
    Value::String(format!("{}/{}", r.numer(), r.denom()))
}

pub fn quaternion(q: &Quat) -> Value {
    Value::Array(q.components().into_iter().map(rational).collect())
}

pub fn ratpoly(p: &RatPoly) -> Value {
    Value::Array(p.coeffs().iter().map(rational).collect())
}

pub fn qpoly(p: &QPoly) -> Value {
    Value::Array(p.coeffs().iter().map(quaternion).collect())
}

pub fn star_one(q: &StarOnePoly) -> Value {
    json!({ "q0": qpoly(q.q0()), "q1": qpoly(q.q1()) })
}

fn quaternions(qs: &[Quat]) -> Value {
    Value::Array(qs.iter().map(quaternion).collect())
}

pub fn factorization(f: &Factorization) -> Value {
    json!({
        "prefactor": quaternion(&f.prefactor),
        "real_content": ratpoly(&f.real_content),
        "left": quaternions(&f.left),
        "s_root": quaternion(&f.s_root),
        "right": quaternions(&f.right),
    })
}

pub fn univariate_factorization(f: &UnivariateFactorization) -> Value {
    json!({
        "prefactor": quaternion(&f.prefactor),
        "real_content": ratpoly(&f.real_content),
        "roots": quaternions(&f.roots),
    })
}

pub fn signature(s: &ClassSignature) -> Value {
    Value::Array(
        s.0.iter()
            .map(|(m, (l, r))| json!({ "quadratic": ratpoly(m), "left": l, "right": r }))
            .collect(),
    )
}

pub fn norm_split(n: &NormSplit) -> Value {
    json!({ "p": ratpoly(&n.p), "r": ratpoly(&n.r) })
}

pub fn span(m: &RatPoly, c: &SpanClassification) -> Value {
    json!({
        "quadratic": ratpoly(m),
        "kind": match c.kind { SpanKind::Line => "line", SpanKind::Point => "point" },
        "on_left_ruling": c.on_left_ruling,
        "on_right_ruling": c.on_right_ruling,
        "lambda": c.lambda,
        "rho": c.rho,
    })
}

pub fn rulings(r: &RulingReport) -> Value {
    json!({
        "rows": r.rows.iter().map(|(m, c)| span(m, c)).collect::<Vec<_>>(),
        "a_count": r.a_count,
        "b_count": r.b_count,
        "p_degree": r.p_degree,
        "unique": r.is_unique(),
    })
}
