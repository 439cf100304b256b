#![allow(dead_code)]

use quatfact_core::algebra::{rat, Quat, Quaternion};
use quatfact_core::starone::Factorization;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const SIMPLE: &str = "(t^2 - i*t - j - k*t)*s + i*t - j*t^2 + k*t + 1";

pub const REPEATED_NORM: &str = "(-2*i*t^2 - k*(t^2 + 1) + t^3 - t)*s + i*(t^2 - 1) - j*(t^3 + t) + 2*t";

pub const TWO_CLASS_CUBIC: &str = "(i*(2 - t) + j*(2*t^2 - 6*t + 5) - k*t + t^3 - 4*t^2 + 5*t - 1)*s \
    + i*(-t^3 + 4*t^2 - 8*t + 5) + j*(-t^3 + 4*t^2 - 4*t - 1) + k*(t - 3) + 2*t^2 - 7*t + 5";

pub const THREE_CLASSES: &str =
    "(t + k)*(t - 2/3*i + 2/3*j - 1/3*k)*(t - 1/3*i + 1/3*j - 5/3*k)*(s - 2*k)*(t - i - j + k)";

pub const DEGREE_FOUR: &str = "(i*(2*t^3 + t^2 - 112*t + 90) + j*(t^3 + 11*t^2 - 7*t - 156) \
    + k*(-4*t^3 + 36*t^2 - 87*t + 18) + t^4 - 9*t^3 + 37*t^2 - 80*t)*s \
    + i*(-9*t^4 + 88*t^3 - 573*t^2 + 1136*t + 1260) + j*(7*t^4 - 52*t^3 + 217*t^2 - 1310*t + 1092) \
    + k*(-3*t^4 + 32*t^3 + 49*t^2 - 1100*t + 1344) - t^4 + 8*t^3 - 23*t^2 - 258*t";

pub const SHARED_NORM: &str = "(t-i)*(s-j)*(t-j)";

pub const NOT_SEPARABLE: &str = "(t+j) + s*i";

pub const FIXTURES: [&str; 6] = [
    SIMPLE,
    REPEATED_NORM,
    TWO_CLASS_CUBIC,
    THREE_CLASSES,
    DEGREE_FOUR,
    SHARED_NORM,
];

pub fn q(w: i64, x: i64, y: i64, z: i64, den: i64) -> Quat {
    Quaternion::new(rat(w, den), rat(x, den), rat(y, den), rat(z, den))
}

fn coordinate(rng: &mut ChaCha8Rng) -> (i64, i64) {
    (rng.gen_range(-3..=3), if rng.gen_bool(0.3) { 2 } else { 1 })
}

/// Quaternion with small coordinates in halves.
pub fn random_quat(rng: &mut ChaCha8Rng) -> Quat {
    let den = if rng.gen_bool(0.3) { 2 } else { 1 };
    q(
        rng.gen_range(-3..=3),
        rng.gen_range(-3..=3),
        rng.gen_range(-3..=3),
        rng.gen_range(-3..=3),
        den,
    )
}

/// Quaternion with nonzero vector part.
pub fn random_nonreal(rng: &mut ChaCha8Rng) -> Quat {
    loop {
        let h = random_quat(rng);
        if !h.is_real() {
            return h;
        }
    }
}

/// Quaternion commuting with `h`: `a + b·vec(h)`.
pub fn commuting_with(rng: &mut ChaCha8Rng, h: &Quat) -> Quat {
    let (a, da) = coordinate(rng);
    let b = loop {
        let b = rng.gen_range(-2..=2);
        if b != 0 {
            break b;
        }
    };
    let vec = Quaternion::new(rat(0, 1), h.x.clone(), h.y.clone(), h.z.clone());
    let scaled = vec.scale(&rat(b, 1));
    &Quat::real(rat(a, da)) + &scaled
}

/// Quaternion with the same norm polynomial as `h`, vector part permuted and sign-flipped.
pub fn same_norm_as(rng: &mut ChaCha8Rng, h: &Quat) -> Quat {
    let mut v = [h.x.clone(), h.y.clone(), h.z.clone()];
    v.rotate_left(rng.gen_range(0..3));
    for c in v.iter_mut() {
        if rng.gen_bool(0.5) {
            *c = -c.clone();
        }
    }
    let [x, y, z] = v;
    Quaternion::new(h.w.clone(), x, y, z)
}

/// `a·∏(t - hᵢ)·(s - h)·∏(t - kⱼ)` with `n + m ≤ 6`, sometimes with commuting
/// neighbours of the `s`-factor and repeated norm polynomials.
pub fn random_product(rng: &mut ChaCha8Rng) -> Factorization {
    let n = rng.gen_range(0..=3);
    let m = rng.gen_range(0..=3);
    let h = random_quat(rng);
    let mut left: Vec<Quat> = (0..n).map(|_| random_nonreal(rng)).collect();
    let mut right: Vec<Quat> = (0..m).map(|_| random_nonreal(rng)).collect();
    if !h.is_real() {
        if n > 0 && rng.gen_bool(0.3) {
            left[n - 1] = commuting_with(rng, &h);
        }
        if m > 0 && rng.gen_bool(0.3) {
            right[0] = commuting_with(rng, &h);
        }
    }
    if n + m >= 2 && rng.gen_bool(0.3) {
        let mut all: Vec<&mut Quat> = left.iter_mut().chain(right.iter_mut()).collect();
        let last = all.len() - 1;
        let src = all[0].clone();
        *all[last] = same_norm_as(rng, &src);
    }
    let mut f = Factorization::bare(left, h, right);
    if rng.gen_bool(0.3) {
        loop {
            let a = random_quat(rng);
            if !a.is_zero() {
                f.prefactor = a;
                break;
            }
        }
    }
    f
}
