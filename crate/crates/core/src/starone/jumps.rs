//! Moving the `s`-factor across commuting neighbours, and the class closure
//! built from such moves.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::qpoly::{all_univariate_factorizations, extract_right_factors, QPoly};
use crate::realpoly::RatPoly;

use super::{
    canonicalize, cardinalities, factorize_prepared, mult_cardinalities, prepare, ClassSignature, Factorization,
    MultiplicityCardinalities, StarOnePoly,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

/// `(t - hₙ)(s - h) = (s - h)(t - hₙ)`: the last left factor moves to the right.
pub fn left_jump(f: &Factorization) -> Result<Factorization> {
    let (last, rest) = f.left.split_last().ok_or(Error::NoCommutingFactor)?;
    if !last.commutes_with(&f.s_root) {
        return Err(Error::NoCommutingFactor);
    }
    let right = std::iter::once(last.clone()).chain(f.right.iter().cloned()).collect();
    Ok(f.with_parts(rest.to_vec(), right))
}

/// `(s - h)(t - k₁) = (t - k₁)(s - h)`: the first right factor moves to the left.
pub fn right_jump(f: &Factorization) -> Result<Factorization> {
    let (first, rest) = f.right.split_first().ok_or(Error::NoCommutingFactor)?;
    if !first.commutes_with(&f.s_root) {
        return Err(Error::NoCommutingFactor);
    }
    let mut left = f.left.clone();
    left.push(first.clone());
    Ok(f.with_parts(left, rest.to_vec()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpCandidate {
    pub side: Side,
    pub quadratic: RatPoly,
    /// Member of the class of the input whose factor next to `s - h` has norm
    /// `quadratic` and commutes with `h`.
    pub representative: Factorization,
}

/// `norms` with one occurrence of `m` moved to the end (`to_end`) or the front.
fn moved(norms: &[RatPoly], m: &RatPoly, to_end: bool) -> Vec<RatPoly> {
    let mut out = norms.to_vec();
    let pos = out.iter().position(|x| x == m).expect("norm present");
    let item = out.remove(pos);
    if to_end {
        out.push(item);
    } else {
        out.insert(0, item);
    }
    out
}

fn candidates(mc: &MultiplicityCardinalities, f: &Factorization) -> Vec<JumpCandidate> {
    let sig = f.signature();
    let mut out = Vec::new();
    for m in mc.per_quadratic.keys() {
        let (left, right) = (sig.left_multiplicity(m), sig.right_multiplicity(m));
        if left > 0 && mc.lambda(m) > right {
            let order = moved(&f.left_norms(), m, true);
            let roots = extract_right_factors(&QPoly::from_roots(&f.left), &order).expect("left part refactors");
            if roots.last().is_some_and(|h| h.commutes_with(&f.s_root)) {
                out.push(JumpCandidate {
                    side: Side::Left,
                    quadratic: m.clone(),
                    representative: f.with_parts(roots, f.right.clone()),
                });
            }
        }
        if right > 0 && mc.rho(m) > left {
            let order = moved(&f.right_norms(), m, false);
            let roots = extract_right_factors(&QPoly::from_roots(&f.right), &order).expect("right part refactors");
            if roots.first().is_some_and(|k| k.commutes_with(&f.s_root)) {
                out.push(JumpCandidate {
                    side: Side::Right,
                    quadratic: m.clone(),
                    representative: f.with_parts(f.left.clone(), roots),
                });
            }
        }
    }
    out
}

/// Jumps available from the class of `f`, one per side and quadratic.
pub fn jump_candidates(f: &Factorization, q: &StarOnePoly) -> Result<Vec<JumpCandidate>> {
    let mc = mult_cardinalities(q)?;
    Ok(candidates(&mc, f))
}

fn apply(candidate: &JumpCandidate) -> Factorization {
    let jumped = match candidate.side {
        Side::Left => left_jump(&candidate.representative),
        Side::Right => right_jump(&candidate.representative),
    };
    canonicalize(&jumped.expect("candidate commutes"))
}

/// One canonical representative per equivalence class, ordered by signature.
pub fn enumerate_classes(q: &StarOnePoly) -> Result<Vec<(ClassSignature, Factorization)>> {
    let prep = prepare(q)?;
    let mc = cardinalities(&prep);
    let start = canonicalize(&factorize_prepared(&prep)?);
    let mut seen: BTreeMap<ClassSignature, Factorization> = BTreeMap::new();
    let mut queue = VecDeque::new();
    seen.insert(start.signature(), start.clone());
    queue.push_back(start);
    while let Some(f) = queue.pop_front() {
        for candidate in candidates(&mc, &f) {
            let next = apply(&candidate);
            if let Entry::Vacant(slot) = seen.entry(next.signature()) {
                slot.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Every factorization of `Q`, sorted.
pub fn all_factorizations(q: &StarOnePoly) -> Result<Vec<Factorization>> {
    let mut out = BTreeSet::new();
    for (_, rep) in enumerate_classes(q)? {
        let lefts = all_univariate_factorizations(&QPoly::from_roots(&rep.left))?;
        let rights = all_univariate_factorizations(&QPoly::from_roots(&rep.right))?;
        for l in &lefts {
            for r in &rights {
                out.insert(rep.with_parts(l.roots.clone(), r.roots.clone()));
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Jump counts for one factorization: the raw differences `#A - 2m`, `#B - 2n`
/// next to the number of successive jumps actually available per side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpCounts {
    pub raw_left: i64,
    pub raw_right: i64,
    pub left: usize,
    pub right: usize,
}

pub fn jump_counts(q: &StarOnePoly, f: &Factorization) -> Result<JumpCounts> {
    let mc = mult_cardinalities(q)?;
    let sig = f.signature();
    let mut left = 0;
    let mut right = 0;
    for m in mc.per_quadratic.keys() {
        let (l, r) = (sig.left_multiplicity(m), sig.right_multiplicity(m));
        left += l.min(mc.lambda(m).saturating_sub(r));
        right += r.min(mc.rho(m).saturating_sub(l));
    }
    Ok(JumpCounts {
        raw_left: mc.a_count() as i64 - 2 * f.right.len() as i64,
        raw_right: mc.b_count() as i64 - 2 * f.left.len() as i64,
        left,
        right,
    })
}
