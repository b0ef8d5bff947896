mod common;

use std::time::{Duration, Instant};

use eac::coset::{enumerate, verify_table, EnumerationLimits, Outcome};
use eac::families;
use eac::presentation::Presentation;

#[test]
fn catalog_relators_hold_on_permutations() {
    for g in common::perm_groups() {
        let degree = g.generators[0].len();
        let id: Vec<usize> = (0..degree).collect();
        for w in g.presentation.relators() {
            assert_eq!(
                common::evaluate(w, &g.generators, degree),
                id,
                "{} relator {w}",
                g.name
            );
        }
    }
}

#[test]
fn orders_match_permutation_closure() {
    let groups = common::perm_groups();
    assert!(groups.len() >= 10);
    for g in groups {
        let degree = g.generators[0].len();
        let expected = common::closure_order(&g.generators, degree);
        assert!(expected <= 24, "{}", g.name);
        let start = Instant::now();
        let out = enumerate(&g.presentation, EnumerationLimits::default());
        assert!(start.elapsed() < Duration::from_secs(10), "{}", g.name);
        match out {
            Outcome::Finished { order, table } => {
                assert_eq!(order, expected, "{}", g.name);
                assert!(verify_table(&g.presentation, &table), "{}", g.name);
            }
            other => panic!("{}: {other:?}", g.name),
        }
    }
}

#[test]
fn trivial_quotients() {
    for p in [
        Presentation::parse("< a | a >").unwrap(),
        families::ak(2).unwrap(),
        families::ak(3).unwrap(),
        families::trivial(4).unwrap(),
    ] {
        assert_eq!(
            enumerate(&p, EnumerationLimits::default()).order(),
            Some(1),
            "{p}"
        );
    }
}

#[test]
fn infinite_groups_stay_inconclusive() {
    for text in [
        "< a | 1 >",
        "< a, b | a b a^-1 b^-1 >",
        "< a, b, c | a b, b c, a c^-1 >",
    ] {
        let p = Presentation::parse(text).unwrap();
        let out = enumerate(&p, EnumerationLimits::new(2_000, 200_000));
        assert!(
            matches!(out, Outcome::LimitExceeded { .. }),
            "{text}: {out:?}"
        );
    }
}

#[test]
fn step_limit_is_respected() {
    let p = Presentation::parse("< r, s | r^12, s^2, s r s r >").unwrap();
    assert!(matches!(
        enumerate(&p, EnumerationLimits::new(100_000, 3)),
        Outcome::LimitExceeded { .. }
    ));
}
