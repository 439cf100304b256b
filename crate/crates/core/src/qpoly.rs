//! Univariate quaternionic polynomials `H[t]` with `t` central.
//!
//! "Right factor" in this module always means the ring-theoretic notion:
//! `t - h` is a right factor of `Q` when `Q = S·(t - h)`.

use std::collections::{BTreeSet, HashMap};
use std::ops::{Add, Mul, Neg, Sub};
use std::rc::Rc;

use num_traits::{One, Zero};

use crate::algebra::{rational_sqrt, ExtQuaternion, Modulus, Quat, Quaternion, Rational};
use crate::error::{Error, Result};
use crate::realpoly::{quadratic_split, rpoly_gcd, RatPoly};

/// Polynomial with rational quaternion coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct QPoly {
    coeffs: Vec<Quat>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Quat>) -> Self {
        while coeffs.last().is_some_and(Quat::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(Quat::one())
    }

    pub fn constant(q: Quat) -> Self {
        QPoly::new(vec![q])
    }

    /// `t - h`.
    pub fn linear(h: &Quat) -> Self {
        QPoly::new(vec![-h, Quat::one()])
    }

    /// Product `(t - h₁)⋯(t - hₙ)`.
    pub fn from_roots(roots: &[Quat]) -> Self {
        roots.iter().fold(QPoly::one(), |acc, h| &acc * &QPoly::linear(h))
    }

    pub fn from_real(p: &RatPoly) -> Self {
        QPoly::new(p.coeffs().iter().cloned().map(Quat::real).collect())
    }

    /// Inverse of [`QPoly::components`].
    pub fn from_components(parts: &[RatPoly; 4]) -> Self {
        let n = parts.iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
        QPoly::new(
            (0..n)
                .map(|i| {
                    Quaternion::new(
                        parts[0].coeff(i),
                        parts[1].coeff(i),
                        parts[2].coeff(i),
                        parts[3].coeff(i),
                    )
                })
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[Quat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Quat {
        self.coeffs.get(i).cloned().unwrap_or_else(Quat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Quat> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c == &Quat::one())
    }

    /// The real polynomials `H₀, H₁, H₂, H₃` with `H = H₀ + 𝐢H₁ + 𝐣H₂ + 𝐤H₃`.
    pub fn components(&self) -> [RatPoly; 4] {
        let pick = |f: fn(&Quat) -> &Rational| RatPoly::new(self.coeffs.iter().map(|c| f(c).clone()).collect());
        [pick(|c| &c.w), pick(|c| &c.x), pick(|c| &c.y), pick(|c| &c.z)]
    }

    pub fn conj(&self) -> Self {
        QPoly::new(self.coeffs.iter().map(Quat::conj).collect())
    }

    /// `P·conj(P)`, a real polynomial.
    /// `Q·conj(Q)`, computed from the real parts `Re(aᵢ·conj(aⱼ)) = ⟨aᵢ, aⱼ⟩` only.
    pub fn norm(&self) -> RatPoly {
        if self.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rational::zero(); 2 * self.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in self.coeffs.iter().enumerate().skip(i) {
                let dot = &a.w * &b.w + &a.x * &b.x + &a.y * &b.y + &a.z * &b.z;
                if i == j {
                    out[i + j] += dot;
                } else {
                    out[i + j] += &dot + &dot;
                }
            }
        }
        RatPoly::new(out)
    }

    /// `a·P`.
    pub fn left_scale(&self, a: &Quat) -> Self {
        QPoly::new(self.coeffs.iter().map(|c| a * c).collect())
    }

    /// `P·a`.
    pub fn right_scale(&self, a: &Quat) -> Self {
        QPoly::new(self.coeffs.iter().map(|c| c * a).collect())
    }

    pub fn mul_real(&self, p: &RatPoly) -> Self {
        self * &QPoly::from_real(p)
    }

    /// Value at the root `α` of `modulus`.
    pub fn eval_ext(&self, modulus: &Modulus) -> ExtQuaternion {
        let alpha = modulus.root();
        let zero = Quat::zero().embed(modulus);
        self.coeffs
            .iter()
            .rev()
            .fold(zero, |acc, c| &acc.scale(&alpha) + &c.embed(modulus))
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, o: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        QPoly::new((0..n).map(|i| &self.coeff(i) + &o.coeff(i)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, o: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        QPoly::new((0..n).map(|i| &self.coeff(i) - &o.coeff(i)).collect())
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![Quat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        QPoly::new(out)
    }
}

pub fn qp_mul(p: &QPoly, q: &QPoly) -> QPoly {
    p * q
}

pub fn qp_add(p: &QPoly, q: &QPoly) -> QPoly {
    p + q
}

pub fn qp_conj(p: &QPoly) -> QPoly {
    p.conj()
}

pub fn qp_norm(p: &QPoly) -> RatPoly {
    p.norm()
}

/// Splits off the monic gcd `g` of the four real components: `Q = g·Qp`.
pub fn real_content(q: &QPoly) -> (RatPoly, QPoly) {
    let comps = q.components();
    let g = comps.iter().fold(RatPoly::zero(), |acc, c| rpoly_gcd(&acc, c));
    if g.is_zero() || g.is_one() {
        return (RatPoly::one(), q.clone());
    }
    let (qp, _) = div_rem_real(q, &g);
    (g, qp)
}

/// `Q = T·M + U` with `deg U < deg M`, computed componentwise.
pub fn div_rem_real(q: &QPoly, m: &RatPoly) -> (QPoly, QPoly) {
    let comps = q.components();
    let (quots, rems): (Vec<_>, Vec<_>) = comps.iter().map(|c| c.div_rem(m)).unzip();
    let as_array = |v: Vec<RatPoly>| -> [RatPoly; 4] { v.try_into().expect("four components") };
    (
        QPoly::from_components(&as_array(quots)),
        QPoly::from_components(&as_array(rems)),
    )
}

/// Right zero of a nonzero polynomial of degree at most one: `h` with `u₁h + u₀ = 0`.
fn linear_right_zero(u: &QPoly) -> Result<Quat> {
    match u.degree() {
        Some(1) => {
            let u1 = u.coeff(1);
            let u0 = u.coeff(0);
            Ok(-&(&u1.inverse()? * &u0))
        }
        _ => Err(Error::NoRightFactor),
    }
}

/// The unique `h` with `t - h` a right factor of `Q` and `‖t - h‖ = M`.
///
/// `M` must be a monic irreducible quadratic that does not divide `Q`.
pub fn linear_right_factor(q: &QPoly, m: &RatPoly) -> Result<Quat> {
    split_right_factor(q, m).map(|(h, _)| h)
}

/// The right factor `t - h` of norm `m` together with the quotient.
fn split_right_factor(q: &QPoly, m: &RatPoly) -> Result<(Quat, QPoly)> {
    let (_, u) = div_rem_real(q, m);
    if u.is_zero() {
        return Err(Error::MDividesQ);
    }
    let h = linear_right_zero(&u)?;
    if &QPoly::linear(&h).norm() != m {
        return Err(Error::NoRightFactor);
    }
    let quotient = right_div_linear(q, &h).map_err(|_| Error::NoRightFactor)?;
    Ok((h, quotient))
}

/// `Q'` with `Q = Q'·(t - h)`.
pub fn right_div_linear(q: &QPoly, h: &Quat) -> Result<QPoly> {
    let not_factor = || Error::NotARightFactor(h.to_string());
    let n = match q.degree() {
        None => return Ok(QPoly::zero()),
        Some(0) => return Err(not_factor()),
        Some(n) => n,
    };
    // q_i = s_{i-1} - s_i·h, so s_{i-1} = q_i + s_i·h from the top down.
    let mut s = vec![Quat::zero(); n];
    s[n - 1] = q.coeff(n);
    for i in (1..n).rev() {
        s[i - 1] = &q.coeff(i) + &(&s[i] * h);
    }
    let remainder = &q.coeff(0) + &(&s[0] * h);
    if !remainder.is_zero() {
        return Err(not_factor());
    }
    Ok(QPoly::new(s))
}

/// Whether `t - h` is a right factor of `Q`.
pub fn is_right_factor(q: &QPoly, h: &Quat) -> bool {
    right_div_linear(q, h).is_ok()
}

/// `Q = prefactor · real_content · (t - h₁)⋯(t - hₙ)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct UnivariateFactorization {
    pub prefactor: Quat,
    pub real_content: RatPoly,
    pub roots: Vec<Quat>,
}

impl UnivariateFactorization {
    pub fn expand(&self) -> QPoly {
        QPoly::from_roots(&self.roots)
            .left_scale(&self.prefactor)
            .mul_real(&self.real_content)
    }

    /// Norm polynomials `‖t - hᵢ‖`, in order.
    pub fn norms(&self) -> Vec<RatPoly> {
        self.roots.iter().map(|h| QPoly::linear(h).norm()).collect()
    }
}

/// Splits `Q` into its leading coefficient, its real content and a monic content-free part.
fn normalize_univariate(q: &QPoly) -> Result<(Quat, RatPoly, QPoly)> {
    let (g, qp) = real_content(q);
    let a = qp.leading().cloned().ok_or(Error::ZeroNorm)?;
    let monic = qp.left_scale(&a.inverse()?);
    Ok((a, g, monic))
}

/// Factors `Q` by extracting right factors with norms taken from `order`,
/// last element first (the last element is the norm of the rightmost factor).
pub fn factor_univariate(q: &QPoly, order: &[RatPoly]) -> Result<UnivariateFactorization> {
    let (prefactor, real_content, monic) = normalize_univariate(q)?;
    let roots = extract_right_factors(&monic, order)?;
    Ok(UnivariateFactorization {
        prefactor,
        real_content,
        roots,
    })
}

/// Roots of a monic content-free polynomial, peeled off right to left along `order`.
pub(crate) fn extract_right_factors(monic: &QPoly, order: &[RatPoly]) -> Result<Vec<Quat>> {
    if monic.degree() != Some(order.len()) {
        return Err(Error::NoRightFactor);
    }
    let mut rest = monic.clone();
    let mut roots = Vec::with_capacity(order.len());
    for m in order.iter().rev() {
        let (h, quotient) = split_right_factor(&rest, m)?;
        rest = quotient;
        roots.push(h);
    }
    debug_assert!(rest == QPoly::one());
    roots.reverse();
    Ok(roots)
}

/// Every factorization into linear factors, one per distinct ordering of the
/// norm quadratics, deduplicated and sorted by root sequence.
///
/// The quotient left after peeling off right factors only depends on their
/// norms, so completions are memoized on it.
pub fn all_univariate_factorizations(q: &QPoly) -> Result<Vec<UnivariateFactorization>> {
    let (prefactor, real_content, monic) = normalize_univariate(q)?;
    let mut pool = quadratic_split(&monic.norm())?.factors;
    let mut memo = HashMap::new();
    let completions = right_completions(&monic, &mut pool, &mut memo)?;
    Ok(completions
        .iter()
        .cloned()
        .map(|roots| UnivariateFactorization {
            prefactor: prefactor.clone(),
            real_content: real_content.clone(),
            roots,
        })
        .collect())
}

/// Root sequences of all factorizations of the monic content-free `rest`,
/// whose norm is the product of `pool` (quadratics with remaining counts).
fn right_completions(
    rest: &QPoly,
    pool: &mut [(RatPoly, usize)],
    memo: &mut HashMap<QPoly, Rc<BTreeSet<Vec<Quat>>>>,
) -> Result<Rc<BTreeSet<Vec<Quat>>>> {
    if let Some(done) = memo.get(rest) {
        return Ok(done.clone());
    }
    let mut out = BTreeSet::new();
    if rest.degree() == Some(0) {
        out.insert(Vec::new());
    }
    for i in 0..pool.len() {
        if pool[i].1 == 0 {
            continue;
        }
        let (h, quotient) = split_right_factor(rest, &pool[i].0)?;
        pool[i].1 -= 1;
        let inner = right_completions(&quotient, pool, memo);
        pool[i].1 += 1;
        for seq in inner?.iter() {
            let mut seq = seq.clone();
            seq.push(h.clone());
            out.insert(seq);
        }
    }
    let out = Rc::new(out);
    memo.insert(rest.clone(), out.clone());
    Ok(out)
}

/// Canonical splitting `M = (t - conj(h))(t - h)` with `h = -p/2 + √(q - p²/4)·𝐢`.
pub fn factor_real_quadratic(m: &RatPoly) -> Result<Quat> {
    let embed_err = || Error::NotRationallyEmbeddable(m.to_string());
    if m.degree() != Some(2) || !m.leading().is_some_and(One::is_one) {
        return Err(embed_err());
    }
    let half_p = m.coeff(1) / Rational::from_int(2);
    let d = m.coeff(0) - &half_p * &half_p;
    if d <= Rational::zero() {
        return Err(embed_err());
    }
    let root = rational_sqrt(&d).ok_or_else(embed_err)?;
    Ok(Quaternion::new(-half_p, root, Rational::zero(), Rational::zero()))
}

/// Multiplicity of an irreducible quadratic as a common factor of the four
/// components. The zero polynomial has infinite multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Multiplicity {
    Finite(usize),
    Infinite,
}

impl Multiplicity {
    pub fn finite(self) -> Option<usize> {
        match self {
            Multiplicity::Finite(n) => Some(n),
            Multiplicity::Infinite => None,
        }
    }
}

pub fn multiplicity_of_quadratic(h: &QPoly, m: &RatPoly) -> Multiplicity {
    if h.is_zero() {
        return Multiplicity::Infinite;
    }
    let mut comps = h.components();
    let mut count = 0;
    loop {
        let divided: Option<Vec<RatPoly>> = comps
            .iter()
            .map(|c| {
                let (quot, rem) = c.div_rem(m);
                rem.is_zero().then_some(quot)
            })
            .collect();
        match divided {
            Some(next) => {
                comps = next.try_into().expect("four components");
                count += 1;
            }
            None => return Multiplicity::Finite(count),
        }
    }
}
