//! Bivariate polynomials `Q = Q₀ + s·Q₁` of degree one in `s`.
//!
//! Here "left factors" and "right factors" are the linear `t`-factors standing
//! to the left and to the right of the single `s`-factor.

mod jumps;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::algebra::{Quat, Rational};
use crate::error::{Error, Result};
use crate::qpoly::{
    div_rem_real, extract_right_factors, multiplicity_of_quadratic, right_div_linear, Multiplicity, QPoly,
};
use crate::realpoly::{exact_div, quadratic_split, rpoly_gcd, RatPoly};

pub use jumps::{
    all_factorizations, enumerate_classes, jump_candidates, jump_counts, left_jump, right_jump, JumpCandidate,
    JumpCounts, Side,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StarOnePoly {
    q0: QPoly,
    q1: QPoly,
}

impl StarOnePoly {
    pub fn new(q0: QPoly, q1: QPoly) -> Result<Self> {
        if q1.is_zero() {
            return Err(Error::NotStarOne);
        }
        Ok(StarOnePoly { q0, q1 })
    }

    pub fn q0(&self) -> &QPoly {
        &self.q0
    }

    pub fn q1(&self) -> &QPoly {
        &self.q1
    }

    /// Degree in `t`.
    pub fn t_degree(&self) -> usize {
        self.q0.degree().unwrap_or(0).max(self.q1.degree().unwrap_or(0))
    }

    fn map(&self, f: impl Fn(&QPoly) -> QPoly) -> StarOnePoly {
        StarOnePoly {
            q0: f(&self.q0),
            q1: f(&self.q1),
        }
    }

    /// Monic gcd of all eight real component polynomials.
    pub fn real_content(&self) -> RatPoly {
        self.q0
            .components()
            .iter()
            .chain(self.q1.components().iter())
            .fold(RatPoly::zero(), |acc, c| rpoly_gcd(&acc, c))
    }
}

/// `Q = a·g·Qn` with `Qn` monic in `t` (leading coefficient of `Q₁` equal to one)
/// and free of real content.
pub fn normalize(q: &StarOnePoly) -> (Quat, RatPoly, StarOnePoly) {
    let a = q.q1.leading().cloned().expect("Q1 is nonzero");
    let a_inv = a.inverse().expect("nonzero rational quaternion");
    let scaled = q.map(|p| p.left_scale(&a_inv));
    let g = scaled.real_content();
    if g.is_one() {
        return (a, g, scaled);
    }
    let qn = scaled.map(|p| div_rem_real(p, &g).0);
    (a, g, qn)
}

/// `‖Q‖ = P(t)·R(s)` with `R = s² + r₁s + r₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormSplit {
    pub p: RatPoly,
    pub r: RatPoly,
}

fn constant_quotient(num: &RatPoly, den: &RatPoly) -> Result<Rational> {
    let quot = exact_div(num, den).map_err(|_| Error::NotSeparable)?;
    if !quot.is_constant() {
        return Err(Error::NotSeparable);
    }
    Ok(quot.coeff(0))
}

fn real_part(q: &QPoly) -> RatPoly {
    let [w, x, y, z] = q.components();
    debug_assert!(x.is_zero() && y.is_zero() && z.is_zero());
    w
}

pub fn norm_split(q: &StarOnePoly) -> Result<NormSplit> {
    let p = q.q1.norm();
    let cross = &(&q.q0 * &q.q1.conj()) + &(&q.q1 * &q.q0.conj());
    let r1 = constant_quotient(&real_part(&cross), &p)?;
    let r0 = constant_quotient(&q.q0.norm(), &p)?;
    Ok(NormSplit {
        p,
        r: RatPoly::quadratic(r1, r0),
    })
}

/// `a·g·(t - h₁)⋯(t - hₙ)·(s - h)·(t - k₁)⋯(t - kₘ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factorization {
    pub prefactor: Quat,
    pub real_content: RatPoly,
    pub left: Vec<Quat>,
    pub s_root: Quat,
    pub right: Vec<Quat>,
}

impl Factorization {
    /// Monic content-free factorization without prefactors.
    pub fn bare(left: Vec<Quat>, s_root: Quat, right: Vec<Quat>) -> Self {
        Factorization {
            prefactor: Quat::one(),
            real_content: RatPoly::one(),
            left,
            s_root,
            right,
        }
    }

    pub fn expand(&self) -> StarOnePoly {
        let a = QPoly::from_roots(&self.left)
            .left_scale(&self.prefactor)
            .mul_real(&self.real_content);
        let b = QPoly::from_roots(&self.right);
        StarOnePoly {
            q0: -&(&a.right_scale(&self.s_root) * &b),
            q1: &a * &b,
        }
    }

    pub fn left_norms(&self) -> Vec<RatPoly> {
        self.left.iter().map(|h| QPoly::linear(h).norm()).collect()
    }

    pub fn right_norms(&self) -> Vec<RatPoly> {
        self.right.iter().map(|h| QPoly::linear(h).norm()).collect()
    }

    pub fn left_norm_product(&self) -> RatPoly {
        product(&self.left_norms())
    }

    pub fn right_norm_product(&self) -> RatPoly {
        product(&self.right_norms())
    }

    pub fn signature(&self) -> ClassSignature {
        let mut map = BTreeMap::new();
        for m in self.left_norms() {
            map.entry(m).or_insert((0, 0)).0 += 1;
        }
        for m in self.right_norms() {
            map.entry(m).or_insert((0, 0)).1 += 1;
        }
        ClassSignature(map)
    }

    pub(crate) fn with_parts(&self, left: Vec<Quat>, right: Vec<Quat>) -> Self {
        Factorization {
            left,
            right,
            ..self.clone()
        }
    }
}

fn product(polys: &[RatPoly]) -> RatPoly {
    polys.iter().fold(RatPoly::one(), |acc, m| &acc * m)
}

/// Per irreducible quadratic, how many linear factors of that norm stand left
/// and right of the `s`-factor.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassSignature(pub BTreeMap<RatPoly, (usize, usize)>);

impl ClassSignature {
    pub fn left_multiplicity(&self, m: &RatPoly) -> usize {
        self.0.get(m).map_or(0, |e| e.0)
    }

    pub fn right_multiplicity(&self, m: &RatPoly) -> usize {
        self.0.get(m).map_or(0, |e| e.1)
    }
}

impl fmt::Display for ClassSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(m, (l, r))| format!("{m}: {l}|{r}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Common right factor `t - k` of `Q₀` and `Q₁` with `‖t - k‖ = M`, if any.
fn strippable_root(q: &StarOnePoly, m: &RatPoly) -> Option<Quat> {
    let (_, u1) = div_rem_real(&q.q1, m);
    let (_, u0) = div_rem_real(&q.q0, m);
    let source = if u1.is_zero() { &u0 } else { &u1 };
    if source.degree() != Some(1) {
        return None;
    }
    let k = -&(&source.coeff(1).inverse().ok()? * &source.coeff(0));
    if &QPoly::linear(&k).norm() != m {
        return None;
    }
    if right_div_linear(&q.q0, &k).is_err() || right_div_linear(&q.q1, &k).is_err() {
        return None;
    }
    Some(k)
}

fn strip(q: &StarOnePoly, k: &Quat) -> StarOnePoly {
    q.map(|p| right_div_linear(p, k).expect("checked right factor"))
}

/// `h` with `Q₀ = -Q₁·h`, for monic `Q₁`.
fn terminal_root(q: &StarOnePoly) -> Option<Quat> {
    let w = if q.q0.is_zero() {
        Quat::zero()
    } else {
        q.q0.coeff(q.q1.degree()?)
    };
    (q.q1.right_scale(&w) == q.q0).then(|| -&w)
}

fn remove_one(pool: &mut Vec<RatPoly>, m: &RatPoly) {
    let pos = pool.iter().position(|x| x == m).expect("quadratic in pool");
    pool.remove(pos);
}

fn distinct(pool: &[RatPoly]) -> Vec<RatPoly> {
    pool.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect()
}

/// Strips right factors greedily, then closes with the terminal division.
/// Returns the remaining left polynomial, the `s`-root and the stripped roots
/// (outermost first).
fn greedy_strip(q: &StarOnePoly, pool: &[RatPoly]) -> Option<(QPoly, Quat, Vec<Quat>)> {
    let mut current = q.clone();
    let mut pool = pool.to_vec();
    let mut stripped = Vec::new();
    'outer: loop {
        for m in distinct(&pool) {
            if let Some(k) = strippable_root(&current, &m) {
                current = strip(&current, &k);
                remove_one(&mut pool, &m);
                stripped.push(k);
                continue 'outer;
            }
        }
        break;
    }
    let h = terminal_root(&current)?;
    Some((current.q1, h, stripped))
}

/// Exhaustive search over strip orders and stopping points.
fn search_strip(q: &StarOnePoly, pool: &[RatPoly], stripped: &mut Vec<Quat>) -> Option<(QPoly, Quat, Vec<Quat>)> {
    if let Some(h) = terminal_root(q) {
        return Some((q.q1.clone(), h, stripped.clone()));
    }
    for m in distinct(pool) {
        if let Some(k) = strippable_root(q, &m) {
            let mut rest = pool.to_vec();
            remove_one(&mut rest, &m);
            stripped.push(k.clone());
            if let Some(found) = search_strip(&strip(q, &k), &rest, stripped) {
                return Some(found);
            }
            stripped.pop();
        }
    }
    None
}

/// Strips exactly the right factors whose norms form `right` (a multiset), in
/// any order, and checks the terminal division.
pub fn factor_with_right_norms(q: &StarOnePoly, right: &[RatPoly]) -> Option<Factorization> {
    fn go(q: &StarOnePoly, pool: &[RatPoly], stripped: &mut Vec<Quat>) -> Option<(QPoly, Quat, Vec<Quat>)> {
        if pool.is_empty() {
            return terminal_root(q).map(|h| (q.q1.clone(), h, stripped.clone()));
        }
        for m in distinct(pool) {
            if let Some(k) = strippable_root(q, &m) {
                let mut rest = pool.to_vec();
                remove_one(&mut rest, &m);
                stripped.push(k.clone());
                if let Some(found) = go(&strip(q, &k), &rest, stripped) {
                    return Some(found);
                }
                stripped.pop();
            }
        }
        None
    }
    let (a, h, stripped) = go(q, right, &mut Vec::new())?;
    assemble(&a, h, stripped).ok()
}

fn assemble(a: &QPoly, h: Quat, mut stripped: Vec<Quat>) -> Result<Factorization> {
    stripped.reverse();
    let left_order = sorted(quadratic_split(&a.norm())?.flattened());
    let left = extract_right_factors(a, &left_order)?;
    Ok(Factorization::bare(left, h, stripped))
}

fn sorted(mut v: Vec<RatPoly>) -> Vec<RatPoly> {
    v.sort();
    v
}

/// The member of the class of `f` whose left and right norm sequences are
/// both sorted ascending.
pub fn canonicalize(f: &Factorization) -> Factorization {
    let a = QPoly::from_roots(&f.left);
    let b = QPoly::from_roots(&f.right);
    let left = extract_right_factors(&a, &sorted(f.left_norms())).expect("left part refactors");
    let right = extract_right_factors(&b, &sorted(f.right_norms())).expect("right part refactors");
    f.with_parts(left, right)
}

/// Normalized input, its norm split and the quadratic factors of `P` with multiplicity.
/// `Q = a·g·Qn` together with the norm split of `Qn` and the quadratic
/// factors of `P`, flattened and sorted.
pub(crate) struct Prepared {
    pub a: Quat,
    pub g: RatPoly,
    pub qn: StarOnePoly,
    pub split: NormSplit,
    pub quads: Vec<RatPoly>,
}

pub(crate) fn prepare(q: &StarOnePoly) -> Result<Prepared> {
    let (a, g, qn) = normalize(q);
    let split = norm_split(&qn)?;
    let quads = quadratic_split(&split.p)?.flattened();
    Ok(Prepared { a, g, qn, split, quads })
}

/// One factorization of `Q`, with as many right factors as possible. Right
/// factors appear in the order they were split off (innermost last).
pub fn factorize(q: &StarOnePoly) -> Result<Factorization> {
    let f = factorize_prepared(&prepare(q)?)?;
    debug_assert_eq!(&f.expand(), q);
    Ok(f)
}

pub(crate) fn factorize_prepared(prep: &Prepared) -> Result<Factorization> {
    let (qn, quads) = (&prep.qn, &prep.quads);
    let (left_poly, h, stripped) = match greedy_strip(qn, quads) {
        Some(found) => found,
        None => search_strip(qn, quads, &mut Vec::new())
            .ok_or_else(|| Error::InternalInconsistency("no strip order reaches a constant quotient".into()))?,
    };
    let mut f = assemble(&left_poly, h, stripped)?;
    f.prefactor = prep.a.clone();
    f.real_content = prep.g.clone();
    Ok(f)
}

/// Same class: equal left norm products.
pub fn equivalent(f1: &Factorization, f2: &Factorization) -> Result<bool> {
    if f1.expand() != f2.expand() {
        return Err(Error::DifferentPolynomials);
    }
    Ok(f1.left_norm_product() == f2.left_norm_product())
}

/// Per-quadratic `λ_M` (from `Q₁·conj(Q₀)`) and `ϱ_M` (from `conj(Q₀)·Q₁`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityCardinalities {
    pub per_quadratic: BTreeMap<RatPoly, (usize, usize)>,
}

impl MultiplicityCardinalities {
    pub fn lambda(&self, m: &RatPoly) -> usize {
        self.per_quadratic.get(m).map_or(0, |e| e.0)
    }

    pub fn rho(&self, m: &RatPoly) -> usize {
        self.per_quadratic.get(m).map_or(0, |e| e.1)
    }

    /// `#A = 2·Σλ_M`.
    pub fn a_count(&self) -> usize {
        2 * self.per_quadratic.values().map(|e| e.0).sum::<usize>()
    }

    /// `#B = 2·Σϱ_M`.
    pub fn b_count(&self) -> usize {
        2 * self.per_quadratic.values().map(|e| e.1).sum::<usize>()
    }

    /// `#A ≥ 2m` and `#B ≥ 2n` for a factorization with `n` left and `m`
    /// right linear factors.
    pub fn admits(&self, f: &Factorization) -> bool {
        self.a_count() >= 2 * f.right.len() && self.b_count() >= 2 * f.left.len()
    }
}

/// Multiplicity capped at the multiplicity `e` of `M` in `P`; the cap only
/// applies when `Q₀ = 0`, where every split of the factors is realizable.
fn capped(mult: Multiplicity, e: usize) -> usize {
    mult.finite().unwrap_or(e)
}

pub fn mult_cardinalities(q: &StarOnePoly) -> Result<MultiplicityCardinalities> {
    Ok(cardinalities(&prepare(q)?))
}

pub(crate) fn cardinalities(prep: &Prepared) -> MultiplicityCardinalities {
    let (qn, quads) = (&prep.qn, &prep.quads);
    let a_poly = &qn.q1 * &qn.q0.conj();
    let b_poly = &qn.q0.conj() * &qn.q1;
    let mut per_quadratic = BTreeMap::new();
    for m in distinct(quads) {
        let e = quads.iter().filter(|x| **x == m).count();
        let lambda = capped(multiplicity_of_quadratic(&a_poly, &m), e);
        let rho = capped(multiplicity_of_quadratic(&b_poly, &m), e);
        per_quadratic.insert(m, (lambda, rho));
    }
    MultiplicityCardinalities { per_quadratic }
}

/// Unique factorization up to univariate refactoring iff `deg P = #A + #B`.
pub fn is_unique(q: &StarOnePoly) -> Result<bool> {
    let prep = prepare(q)?;
    let mc = cardinalities(&prep);
    Ok(prep.split.p.degree() == Some(mc.a_count() + mc.b_count()))
}

/// `#A ≥ 2m` and `#B ≥ 2n`.
pub fn verify_lower_bounds(q: &StarOnePoly, f: &Factorization) -> Result<bool> {
    Ok(mult_cardinalities(q)?.admits(f))
}

#[cfg(test)]
mod tests;
