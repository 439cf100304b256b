//! End-to-end use of the public API: parse, factor, print, re-parse.

use std::collections::BTreeSet;

use proptest::prelude::*;
use quatfact_core::algebra::{rat, Quat, Quaternion};
use quatfact_core::commands::{document, execute, Command, Options};
use quatfact_core::expr::parse_star_one;
use quatfact_core::print::{format_factorization, format_star_one};
use quatfact_core::starone::{
    all_factorizations, canonicalize, enumerate_classes, equivalent, factorize, is_unique, jump_counts,
    mult_cardinalities, Factorization, StarOnePoly,
};

const FIXTURES: [&str; 5] = [
    "(t^2 - i*t - j - k*t)*s + i*t - j*t^2 + k*t + 1",
    "(t-i)*(s-j)*(t-k)*(t-i)",
    "(t + k)*(t - 2/3*i + 2/3*j - 1/3*k)*(t - 1/3*i + 1/3*j - 5/3*k)*(s - 2*k)*(t - i - j + k)",
    "(t-i)*(s-j)*(t-j)",
    "(1 + i)*(t^2 + 1)*(t - j)*(s - i)",
];

fn fixture(s: &str) -> StarOnePoly {
    parse_star_one(s).unwrap()
}

#[test]
fn printed_factorizations_reparse_to_the_input() {
    for text in FIXTURES {
        let q = fixture(text);
        for f in all_factorizations(&q).unwrap() {
            assert_eq!(fixture(&format_factorization(&f)), q, "{text}");
        }
        assert_eq!(fixture(&format_star_one(&q)), q);
    }
}

#[test]
fn uniqueness_agrees_with_class_count() {
    let counts: Vec<usize> = FIXTURES
        .iter()
        .map(|t| enumerate_classes(&fixture(t)).unwrap().len())
        .collect();
    assert_eq!(counts, [1, 1, 3, 2, 1]);
    for (text, n) in FIXTURES.iter().zip(counts) {
        assert_eq!(is_unique(&fixture(text)).unwrap(), n == 1, "{text}");
    }
}

#[test]
fn members_of_one_class_are_equivalent() {
    let q = fixture(FIXTURES[2]);
    let classes = enumerate_classes(&q).unwrap();
    let all = all_factorizations(&q).unwrap();
    for f in &all {
        let matching: Vec<_> = classes.iter().filter(|(_, rep)| equivalent(f, rep).unwrap()).collect();
        assert_eq!(matching.len(), 1);
        assert_eq!(matching[0].0, f.signature());
    }
}

#[test]
fn available_jumps_never_exceed_raw_differences() {
    for text in FIXTURES {
        let q = fixture(text);
        for f in all_factorizations(&q).unwrap() {
            let j = jump_counts(&q, &f).unwrap();
            assert!(
                j.left as i64 <= j.raw_left / 2 && j.right as i64 <= j.raw_right / 2,
                "{text}: {j:?}"
            );
        }
    }
}

#[test]
fn command_documents_carry_results_or_errors() {
    let ok = execute(Command::Classes, FIXTURES[3], Options::default());
    let doc = document(Command::Classes, FIXTURES[3], &ok);
    assert_eq!(doc["result"].as_array().unwrap().len(), 2);
    let bad = execute(Command::Factor, "s*(t", Options::default());
    let doc = document(Command::Factor, "s*(t", &bad);
    assert_eq!(doc["error"]["kind"], "SyntaxError");
}

fn small_quat() -> impl Strategy<Value = Quat> {
    (-2i64..=2, -2i64..=2, -2i64..=2, -2i64..=2, 1i64..=2)
        .prop_map(|(w, x, y, z, d)| Quaternion::new(rat(w, d), rat(x, d), rat(y, d), rat(z, d)))
}

fn nonreal_quat() -> impl Strategy<Value = Quat> {
    small_quat().prop_filter("non-real", |h| !h.is_real())
}

fn product() -> impl Strategy<Value = Factorization> {
    (
        prop::collection::vec(nonreal_quat(), 0..=2),
        small_quat(),
        prop::collection::vec(nonreal_quat(), 0..=2),
    )
        .prop_map(|(left, h, right)| Factorization::bare(left, h, right))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn canonical_order_keeps_the_product(f in product()) {
        let q = f.expand();
        let g = factorize(&q).unwrap();
        let c = canonicalize(&g);
        prop_assert_eq!(c.expand(), q.clone());
        let mut norms = c.left_norms();
        prop_assert!(norms.windows(2).all(|w| w[0] <= w[1]));
        norms = c.right_norms();
        prop_assert!(norms.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn every_member_respects_the_bounds(f in product()) {
        let q = f.expand();
        let mc = mult_cardinalities(&q).unwrap();
        let all = all_factorizations(&q).unwrap();
        let sigs: BTreeSet<_> = all.iter().map(Factorization::signature).collect();
        let classes: BTreeSet<_> = enumerate_classes(&q).unwrap().into_iter().map(|(s, _)| s).collect();
        prop_assert_eq!(sigs, classes);
        for g in &all {
            prop_assert!(mc.admits(g));
        }
    }
}
