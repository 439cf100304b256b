//! Canonical text output, readable back by [`crate::expr`].
//!
//! Terms are ordered by `s`-degree, then `t`-degree, both descending; within a
//! monomial the components come in the order `1, i, j, k`.

use num_traits::{One, Zero};

use crate::algebra::{Quat, Rational};
use crate::qpoly::QPoly;
use crate::realpoly::RatPoly;
use crate::starone::{Factorization, StarOnePoly};

struct Term<'a> {
    coeff: &'a Rational,
    unit: &'static str,
    t: usize,
    s: usize,
}

fn write_terms<'a>(terms: impl Iterator<Item = Term<'a>>) -> String {
    let mut out = String::new();
    for term in terms.filter(|t| !t.coeff.is_zero()) {
        let negative = term.coeff.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mag = term.coeff.abs();
        let mut factors: Vec<String> = Vec::new();
        if !mag.is_one() {
            factors.push(mag.to_string());
        }
        if !term.unit.is_empty() {
            factors.push(term.unit.to_string());
        }
        match term.t {
            0 => {}
            1 => factors.push("t".into()),
            d => factors.push(format!("t^{d}")),
        }
        match term.s {
            0 => {}
            1 => factors.push("s".into()),
            d => factors.push(format!("s^{d}")),
        }
        if factors.is_empty() {
            factors.push("1".into());
        }
        out.push_str(&factors.join("*"));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn qpoly_terms(p: &QPoly, s: usize) -> impl Iterator<Item = Term<'_>> {
    p.coeffs().iter().enumerate().rev().flat_map(move |(t, c)| {
        c.components()
            .into_iter()
            .zip(["", "i", "j", "k"])
            .map(move |(coeff, unit)| Term { coeff, unit, t, s })
    })
}

pub fn format_qpoly(p: &QPoly) -> String {
    write_terms(qpoly_terms(p, 0))
}

pub fn format_star_one(q: &StarOnePoly) -> String {
    write_terms(qpoly_terms(q.q1(), 1).chain(qpoly_terms(q.q0(), 0)))
}

pub fn format_ratpoly(p: &RatPoly) -> String {
    p.display_in("t")
}

pub fn format_quat(q: &Quat) -> String {
    q.to_string()
}

/// `a*(g)*(t - h₁)*…*(s - h)*(t - k₁)*…`, omitting `a` and `g` when they are one.
pub fn format_factorization(f: &Factorization) -> String {
    let mut parts = Vec::new();
    if f.prefactor != Quat::one() {
        parts.push(format!("({})", f.prefactor));
    }
    if !f.real_content.is_one() {
        parts.push(format!("({})", format_ratpoly(&f.real_content)));
    }
    let linear = |h: &Quat| format!("({})", format_qpoly(&QPoly::linear(h)));
    parts.extend(f.left.iter().map(linear));
    let s_factor = StarOnePoly::new(QPoly::constant(-&f.s_root), QPoly::one()).expect("nonzero s-part");
    parts.push(format!("({})", format_star_one(&s_factor)));
    parts.extend(f.right.iter().map(linear));
    parts.join("*")
}
