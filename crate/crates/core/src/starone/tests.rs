use super::*;
use crate::algebra::{int, rat, Quaternion};
use proptest::prelude::*;

fn poly(c: &[i64]) -> RatPoly {
    RatPoly::from_ints(c)
}

fn qp(w: &[i64], x: &[i64], y: &[i64], z: &[i64]) -> QPoly {
    QPoly::from_components(&[poly(w), poly(x), poly(y), poly(z)])
}

fn qt(w: i64, x: i64, y: i64, z: i64) -> Quat {
    Quat::from_ints(w, x, y, z)
}

fn quad(p: i64, q: i64) -> RatPoly {
    RatPoly::quadratic(int(p), int(q))
}

fn star(q0: QPoly, q1: QPoly) -> StarOnePoly {
    StarOnePoly::new(q0, q1).unwrap()
}

fn i() -> Quat {
    Quat::unit_i()
}
fn j() -> Quat {
    Quat::unit_j()
}
fn k() -> Quat {
    Quat::unit_k()
}

/// (t^2 - i t - j - k t) s + i t - j t^2 + k t + 1
fn simple() -> StarOnePoly {
    star(
        qp(&[1], &[0, 1], &[0, 0, -1], &[0, 1]),
        qp(&[0, 0, 1], &[0, -1], &[-1], &[0, -1]),
    )
}

/// (-2i t^2 - k(t^2 + 1) + t^3 - t) s + i(t^2 - 1) - j(t^3 + t) + 2t
fn repeated_norm() -> StarOnePoly {
    star(
        qp(&[0, 2], &[-1, 0, 1], &[0, -1, 0, -1], &[]),
        qp(&[0, -1, 0, 1], &[0, 0, -2], &[], &[-1, 0, -1]),
    )
}

fn two_class_cubic() -> StarOnePoly {
    star(
        qp(&[5, -7, 2], &[5, -8, 4, -1], &[-1, -4, 4, -1], &[-3, 1]),
        qp(&[-1, 5, -4, 1], &[2, -1], &[5, -6, 2], &[0, -1]),
    )
}

fn fact1() -> Factorization {
    Factorization::bare(
        vec![qt(2, 1, 0, 0)],
        qt(0, 1, 1, 0),
        vec![
            Quaternion::new(int(1), rat(-4, 5), rat(-3, 5), int(0)),
            Quaternion::new(int(1), rat(-1, 5), rat(-7, 5), int(0)),
        ],
    )
}

fn fact2() -> Factorization {
    Factorization::bare(
        vec![qt(1, 0, -1, -1), qt(2, 0, 0, 1)],
        qt(0, 1, 1, 0),
        vec![qt(1, 0, -1, 0)],
    )
}

fn three_classes() -> StarOnePoly {
    Factorization::bare(
        vec![
            qt(0, 0, 0, -1),
            Quaternion::new(int(0), rat(2, 3), rat(-2, 3), rat(1, 3)),
            Quaternion::new(int(0), rat(1, 3), rat(-1, 3), rat(5, 3)),
        ],
        qt(0, 0, 0, 2),
        vec![qt(0, 1, 1, -1)],
    )
    .expand()
}

fn degree_four_example() -> StarOnePoly {
    star(
        qp(
            &[0, -258, -23, 8, -1],
            &[1260, 1136, -573, 88, -9],
            &[1092, -1310, 217, -52, 7],
            &[1344, -1100, 49, 32, -3],
        ),
        qp(
            &[0, -80, 37, -9, 1],
            &[90, -112, 1, 2],
            &[-156, -7, 11, 1],
            &[18, -87, 36, -4],
        ),
    )
}

#[test]
fn fixtures_match_their_products() {
    assert_eq!(Factorization::bare(vec![i()], j(), vec![k()]).expand(), simple());
    assert_eq!(
        Factorization::bare(vec![i()], j(), vec![k(), i()]).expand(),
        repeated_norm()
    );
    assert_eq!(fact1().expand(), two_class_cubic());
    assert_eq!(fact2().expand(), two_class_cubic());
}

#[test]
fn star_one_requires_s_term() {
    assert_eq!(StarOnePoly::new(QPoly::one(), QPoly::zero()), Err(Error::NotStarOne));
}

#[test]
fn normalization() {
    let q = simple();
    let (a, g, qn) = normalize(&q);
    assert_eq!((a, g, &qn), (Quat::one(), RatPoly::one(), &q));

    let scaled = star(q.q0().left_scale(&qt(0, 2, 0, 0)), q.q1().left_scale(&qt(0, 2, 0, 0)));
    let (a, g, qn) = normalize(&scaled);
    assert_eq!(a, qt(0, 2, 0, 0));
    assert!(g.is_one());
    assert_eq!(qn, q);

    let m = quad(0, 1);
    let with_content = star(q.q0().mul_real(&m), q.q1().mul_real(&m));
    let (a, g, qn) = normalize(&with_content);
    assert_eq!(a, Quat::one());
    assert_eq!(g, m);
    assert_eq!(qn, q);
}

#[test]
fn norm_splits() {
    let s = norm_split(&two_class_cubic()).unwrap();
    assert_eq!(s.p, &(&quad(-2, 2) * &quad(-2, 3)) * &quad(-4, 5));
    assert_eq!(s.r, quad(0, 2));

    let s = norm_split(&repeated_norm()).unwrap();
    assert_eq!(s.p, quad(0, 1).pow(3));
    assert_eq!(s.r, quad(0, 1));

    let witness = star(QPoly::new(vec![j(), Quat::one()]), QPoly::constant(i()));
    assert_eq!(norm_split(&witness), Err(Error::NotSeparable));
    assert_eq!(factorize(&witness), Err(Error::NotSeparable));

    let s = norm_split(&degree_four_example()).unwrap();
    let p = [quad(0, 2), quad(-2, 15), quad(-10, 28), quad(-6, 39)]
        .iter()
        .fold(RatPoly::one(), |acc, m| &acc * m);
    assert_eq!(s.p, p);
    assert_eq!(s.r, quad(-2, 140));
}

#[test]
fn factorize_examples() {
    assert_eq!(
        factorize(&simple()).unwrap(),
        Factorization::bare(vec![i()], j(), vec![k()])
    );
    assert_eq!(
        factorize(&repeated_norm()).unwrap(),
        Factorization::bare(vec![i()], j(), vec![k(), i()])
    );
    let f = factorize(&two_class_cubic()).unwrap();
    assert_eq!(f.expand(), two_class_cubic());
    assert!(equivalent(&f, &fact1()).unwrap() || equivalent(&f, &fact2()).unwrap());
    let f = factorize(&degree_four_example()).unwrap();
    assert_eq!((f.left.len(), f.right.len()), (2, 2));
    assert_eq!(f.expand(), degree_four_example());
}

#[test]
fn factorize_keeps_prefactors() {
    let m = quad(-2, 5);
    let base = simple();
    let a = Quaternion::new(rat(1, 2), int(0), int(3), int(0));
    let q = star(
        base.q0().left_scale(&a).mul_real(&m),
        base.q1().left_scale(&a).mul_real(&m),
    );
    let f = factorize(&q).unwrap();
    assert_eq!(f.prefactor, a);
    assert_eq!(f.real_content, m);
    assert_eq!(f.expand(), q);
}

#[test]
fn expand_simple_cases() {
    let f = Factorization::bare(vec![], j(), vec![]);
    assert_eq!(f.expand(), star(QPoly::constant(-&j()), QPoly::one()));
    let a = Factorization::bare(vec![i()], i(), vec![]).expand();
    let b = Factorization::bare(vec![], i(), vec![i()]).expand();
    assert_eq!(a, b);
}

#[test]
fn equivalence() {
    assert!(!equivalent(&fact1(), &fact2()).unwrap());
    assert!(equivalent(&fact1(), &fact1()).unwrap());
    let other = Factorization::bare(fact1().left, fact1().s_root, vec![qt(1, -1, -1, 0), qt(1, 0, -1, 0)]);
    assert!(equivalent(&fact1(), &other).unwrap());
    let unrelated = Factorization::bare(vec![i()], j(), vec![k()]);
    assert_eq!(equivalent(&fact1(), &unrelated), Err(Error::DifferentPolynomials));
}

#[test]
fn cardinalities() {
    let shared_norm = Factorization::bare(vec![i()], j(), vec![j()]).expand();
    let mc = mult_cardinalities(&shared_norm).unwrap();
    assert_eq!((mc.lambda(&quad(0, 1)), mc.rho(&quad(0, 1))), (1, 2));
    assert_eq!((mc.a_count(), mc.b_count()), (2, 4));

    let mc = mult_cardinalities(&simple()).unwrap();
    assert_eq!((mc.lambda(&quad(0, 1)), mc.rho(&quad(0, 1))), (1, 1));
    assert_eq!((mc.a_count(), mc.b_count()), (2, 2));

    let mc = mult_cardinalities(&repeated_norm()).unwrap();
    assert_eq!((mc.a_count(), mc.b_count()), (4, 2));

    let mc = mult_cardinalities(&two_class_cubic()).unwrap();
    assert_eq!((mc.a_count(), mc.b_count()), (4, 4));

    let mc = mult_cardinalities(&three_classes()).unwrap();
    assert_eq!((mc.a_count(), mc.b_count()), (6, 6));
    assert_eq!(mc.lambda(&quad(0, 3)), 1);
    assert_eq!(mc.lambda(&quad(0, 1)), 2);

    let mc = mult_cardinalities(&degree_four_example()).unwrap();
    assert_eq!((mc.a_count(), mc.b_count()), (4, 4));
}

#[test]
fn cardinalities_without_constant_part() {
    let q = star(QPoly::zero(), &QPoly::linear(&i()) * &QPoly::linear(&j()));
    let mc = mult_cardinalities(&q).unwrap();
    assert_eq!((mc.lambda(&quad(0, 1)), mc.rho(&quad(0, 1))), (2, 2));
    assert_eq!(enumerate_classes(&q).unwrap().len(), 3);
}

#[test]
fn uniqueness() {
    assert!(is_unique(&simple()).unwrap());
    assert!(is_unique(&repeated_norm()).unwrap());
    assert!(!is_unique(&two_class_cubic()).unwrap());
    assert!(is_unique(&degree_four_example()).unwrap());
    assert!(!is_unique(&three_classes()).unwrap());
}

#[test]
fn jumps() {
    let f = Factorization::bare(vec![j()], j(), vec![]);
    assert_eq!(left_jump(&f).unwrap(), Factorization::bare(vec![], j(), vec![j()]));
    assert_eq!(right_jump(&left_jump(&f).unwrap()).unwrap(), f);

    let g = Factorization::bare(vec![i()], j(), vec![k()]);
    assert_eq!(left_jump(&g), Err(Error::NoCommutingFactor));
    assert_eq!(right_jump(&g), Err(Error::NoCommutingFactor));

    let first = Factorization::bare(
        vec![qt(0, 1, -1, -1), qt(0, 0, 0, 1), qt(0, 0, 0, 1)],
        qt(0, 0, 0, 2),
        vec![qt(0, 1, 1, -1)],
    );
    assert_eq!(first.expand(), three_classes());
    let once = left_jump(&first).unwrap();
    assert_eq!(once.expand(), three_classes());
    assert!(!equivalent(&first, &once).unwrap());
}

#[test]
fn three_classes_candidates() {
    let q = three_classes();
    let f = factorize(&q).unwrap();
    let start = enumerate_classes(&q)
        .unwrap()
        .into_iter()
        .map(|(_, f)| f)
        .find(|g| g.right.len() == 1)
        .unwrap();
    let cands = jump_candidates(&start, &q).unwrap();
    assert_eq!(cands.len(), 1);
    assert_eq!((cands[0].side, &cands[0].quadratic), (Side::Left, &quad(0, 1)));
    let counts = jump_counts(&q, &start).unwrap();
    assert_eq!((counts.raw_left, counts.left), (4, 2));
    assert!(jump_candidates(&factorize(&simple()).unwrap(), &simple())
        .unwrap()
        .is_empty());
    assert_eq!(f.expand(), q);
}

#[test]
fn three_classes_classes() {
    let classes = enumerate_classes(&three_classes()).unwrap();
    let sigs: Vec<(usize, usize)> = classes
        .iter()
        .map(|(s, _)| {
            assert_eq!(s.0[&quad(0, 3)], (1, 1));
            s.0[&quad(0, 1)]
        })
        .collect();
    assert_eq!(sigs.len(), 3);
    for split in [(2, 0), (1, 1), (0, 2)] {
        assert!(sigs.contains(&split));
    }
    for (_, f) in &classes {
        assert_eq!(f.expand(), three_classes());
    }
}

#[test]
fn two_class_cubic_classes_and_members() {
    let q = two_class_cubic();
    assert_eq!(enumerate_classes(&q).unwrap().len(), 2);
    let all = all_factorizations(&q).unwrap();
    assert!(all.contains(&fact1()));
    assert!(all.contains(&fact2()));
    for f in &all {
        assert_eq!(f.expand(), q);
    }
}

#[test]
fn unique_examples_have_one_factorization() {
    assert_eq!(all_factorizations(&simple()).unwrap().len(), 1);
    assert_eq!(all_factorizations(&repeated_norm()).unwrap().len(), 1);
    assert_eq!(enumerate_classes(&degree_four_example()).unwrap().len(), 1);
}

#[test]
fn two_factor_commuting_case() {
    let commuting = Factorization::bare(vec![i()], qt(1, 2, 0, 0), vec![]).expand();
    assert_eq!(all_factorizations(&commuting).unwrap().len(), 2);
    let generic = Factorization::bare(vec![i()], j(), vec![]).expand();
    assert_eq!(all_factorizations(&generic).unwrap().len(), 1);
}

#[test]
fn lower_bounds() {
    let q = Factorization::bare(vec![i()], j(), vec![j()]).expand();
    assert!(verify_lower_bounds(&q, &factorize(&q).unwrap()).unwrap());
    let q = repeated_norm();
    assert!(verify_lower_bounds(&q, &factorize(&q).unwrap()).unwrap());
}

#[test]
fn signature_display() {
    let sig = fact2().signature();
    assert_eq!(
        sig.to_string(),
        "{t^2 - 4*t + 5: 1|0, t^2 - 2*t + 2: 0|1, t^2 - 2*t + 3: 1|0}"
    );
}

fn small_quat() -> impl Strategy<Value = Quat> {
    (-2i64..=2, -2i64..=2, -2i64..=2, -2i64..=2, 1i64..=2)
        .prop_map(|(w, x, y, z, d)| Quaternion::new(rat(w, d), rat(x, d), rat(y, d), rat(z, d)))
}

fn random_factorization() -> impl Strategy<Value = Factorization> {
    (
        prop::collection::vec(small_quat(), 0..=2),
        small_quat(),
        prop::collection::vec(small_quat(), 0..=2),
    )
        .prop_map(|(l, h, r)| Factorization::bare(l, h, r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn round_trip(f in random_factorization()) {
        let q = f.expand();
        let g = factorize(&q).unwrap();
        prop_assert_eq!(g.expand(), q.clone());
        for h in all_factorizations(&q).unwrap() {
            prop_assert_eq!(h.expand(), q.clone());
            prop_assert!(verify_lower_bounds(&q, &h).unwrap());
        }
    }

    #[test]
    fn uniqueness_matches_closure(f in random_factorization()) {
        let q = f.expand();
        let classes = enumerate_classes(&q).unwrap();
        prop_assert_eq!(classes.len() == 1, is_unique(&q).unwrap());
    }

    #[test]
    fn equivalence_is_symmetric_in_sides(f in random_factorization()) {
        let q = f.expand();
        let all = all_factorizations(&q).unwrap();
        for a in &all {
            for b in &all {
                let by_left = equivalent(a, b).unwrap();
                prop_assert_eq!(by_left, a.right_norm_product() == b.right_norm_product());
                if by_left {
                    prop_assert_eq!(&a.s_root, &b.s_root);
                    prop_assert_eq!(QPoly::from_roots(&a.left), QPoly::from_roots(&b.left));
                    prop_assert_eq!(QPoly::from_roots(&a.right), QPoly::from_roots(&b.right));
                }
            }
        }
    }

    #[test]
    fn classes_match_signature_oracle(f in random_factorization()) {
        let q = f.expand();
        let Prepared { qn, quads, .. } = prepare(&q).unwrap();
        let closure: BTreeSet<ClassSignature> =
            enumerate_classes(&q).unwrap().into_iter().map(|(s, _)| s).collect();
        let mut realizable = BTreeSet::new();
        for mask in 0u32..(1 << quads.len()) {
            let right: Vec<RatPoly> = quads
                .iter()
                .enumerate()
                .filter(|(b, _)| mask & (1 << b) != 0)
                .map(|(_, m)| m.clone())
                .collect();
            if let Some(g) = factor_with_right_norms(&qn, &right) {
                realizable.insert(g.signature());
            }
        }
        prop_assert_eq!(closure, realizable);
    }
}
