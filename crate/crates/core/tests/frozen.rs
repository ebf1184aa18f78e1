//! Values computed once by an independent rational-arithmetic evaluation
//! and frozen here.

use ascent::genfun::{eval_table, fishburn_series, parse_rational, series_from_tables, series_g, SpecPoint};
use ascent::stats::StatName;
use ascent::table::dist_table;
use ascent::{enumerate, ClassId};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

fn r(text: &str) -> BigRational {
    parse_rational(text).unwrap()
}

#[test]
fn fishburn_numbers() {
    let want: Vec<BigInt> = [0i64, 1, 2, 5, 15, 53, 217, 1014, 5335, 31240, 201608, 1422074, 10886503]
        .into_iter()
        .map(BigInt::from)
        .collect();
    assert_eq!(fishburn_series(12).unwrap().to_integers().unwrap(), want);
}

#[test]
fn ascent_counts_match_fishburn() {
    for (n, want) in [(1, 1), (2, 2), (3, 5), (4, 15), (5, 53), (6, 217), (7, 1014)] {
        assert_eq!(enumerate(ClassId::Asc, n).unwrap().count(), want, "n = {n}");
    }
}

#[test]
fn g_at_a_generic_point() {
    let p = SpecPoint { x: r("2/3"), q: r("-5/7"), u: r("3"), z: r("1/4"), w: r("1") };
    let g = series_g(6, &p).unwrap();
    let want = ["-5/28", "415/1176", "-29405/49392", "3063055/2074464", "-178905725/87127488", "31072600015/3659354496"];
    for (k, w) in want.iter().enumerate() {
        assert_eq!(g.coeff(k + 1), &r(w), "t^{}", k + 1);
    }
}

#[test]
fn g_with_q_and_z_at_one() {
    let p = SpecPoint { x: r("2/3"), u: r("3"), ..SpecPoint::ones() };
    let g = series_g(5, &p).unwrap();
    let want = ["1", "11/3", "139/9", "2033/27", "34621/81"];
    for (k, w) in want.iter().enumerate() {
        assert_eq!(g.coeff(k + 1), &r(w), "t^{}", k + 1);
    }
}

#[test]
fn g_matches_enumeration_at_the_generic_point() {
    let p = SpecPoint { x: r("2/3"), q: r("-5/7"), u: r("3"), z: r("1/4"), w: r("1") };
    let stats = [StatName::Rep, StatName::Max, StatName::Asc, StatName::Zero];
    let tables: Vec<_> = (1..=6).map(|n| dist_table(ClassId::Asc, n, &stats).unwrap()).collect();
    let from_tables = series_from_tables(6, &tables, &p).unwrap();
    assert_eq!(from_tables, series_g(6, &p).unwrap());
}

#[test]
fn t21_rep_max_table_at_four() {
    let t = dist_table(ClassId::T21, 4, &[StatName::Rep, StatName::Max]).unwrap();
    let want = [((0, 4), 1u32), ((1, 1), 1), ((1, 2), 2), ((1, 3), 3), ((2, 1), 3), ((2, 2), 4), ((3, 1), 1)];
    assert_eq!(t.counts.len(), want.len());
    for ((a, b), c) in want {
        assert_eq!(t.get(&[a, b]), BigUint::from(c), "({a}, {b})");
    }
    assert_eq!(t.total(), BigUint::from(15u32));
}

#[test]
fn ascent_rep_max_at_three_evaluates_to_81() {
    let t = dist_table(ClassId::Asc, 3, &[StatName::Rep, StatName::Max]).unwrap();
    let p = SpecPoint::from_ints(2, 3, 1, 1, 1);
    assert_eq!(eval_table(&t, &p).unwrap(), r("81"));
}

#[test]
fn inversion_sequences_count_factorials() {
    let mut f = 1;
    for n in 1..=7 {
        f *= n;
        assert_eq!(enumerate(ClassId::Inv, n).unwrap().count(), f);
    }
}
