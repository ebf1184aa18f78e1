use ascent::bijection::{beta, beta_inv, bv_code, bv_decode, gamma, gamma_inv, lehmer_code, phi, phi_inv, psi, psi_inv, upsilon};
use ascent::class::{contains_bivincular_a, contains_bivincular_b, is_ascent, is_b, is_c, is_inversion, is_t21};
use ascent::decomp::{DecompMap, Direction};
use ascent::genfun::{parse_rational, TruncSeries};
use ascent::stats::{asc, des_set, lmax_set, lmin_set, max, rep, rmax_set, rmin, zero, StatName};
use ascent::table::DistTable;
use ascent::{ClassId, Error, Perm, PermTransform, Seq};
use num_bigint::BigUint;
use num_rational::BigRational;
use proptest::prelude::*;

/// Ascent sequences from arbitrary choice vectors: entry `k` is the
/// choice reduced modulo the number of admissible values.
fn ascent_seq(len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Seq> {
    prop::collection::vec(any::<u32>(), len).prop_map(|choices| {
        let mut s: Vec<u32> = Vec::with_capacity(choices.len());
        for (k, c) in choices.into_iter().enumerate() {
            let bound = if k == 0 { 1 } else { asc(&s) + 2 };
            s.push(c % bound);
        }
        Seq::new(s)
    })
}

/// (2-1)-avoiding inversion sequences, built the same way.
fn t21_seq(len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Seq> {
    prop::collection::vec(any::<u32>(), len).prop_map(|choices| {
        let mut s: Vec<u32> = Vec::with_capacity(choices.len());
        for (k, c) in choices.into_iter().enumerate() {
            let allowed: Vec<u32> = (0..=k as u32).filter(|v| !s.contains(&(v + 1))).collect();
            s.push(allowed[c as usize % allowed.len()]);
        }
        Seq::new(s)
    })
}

fn inversion_seq(len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Seq> {
    prop::collection::vec(any::<u32>(), len)
        .prop_map(|c| Seq::new(c.iter().enumerate().map(|(k, &x)| x % (k as u32 + 1)).collect()))
}

fn perm(len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Perm> {
    len.prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Perm::new(v).expect("shuffled identity"))
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn series(order: usize) -> impl Strategy<Value = TruncSeries> {
    prop::collection::vec(rational(), order + 1).prop_map(move |c| TruncSeries::from_coeffs(order, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn series_product_is_associative(a in series(6), b in series(6), c in series(6)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn series_inverse(a in series(7)) {
        match a.inverse() {
            Ok(inv) => prop_assert_eq!(&a * &inv, TruncSeries::one(7)),
            Err(e) => {
                prop_assert!(a.coeff(0) == &BigRational::from_integer(0.into()));
                prop_assert!(matches!(e, Error::Inadmissible(_)));
            }
        }
    }

    #[test]
    fn class_inclusions(s in inversion_seq(1..=10)) {
        let v = s.values();
        prop_assert!(is_inversion(v));
        if is_ascent(v) || is_t21(v) || is_b(v) || is_c(v) {
            prop_assert!(is_inversion(v));
        }
    }

    #[test]
    fn upsilon_transforms_the_quadruple(s in ascent_seq(1..=11)) {
        let t = upsilon(&s).unwrap();
        let (v, w) = (s.values(), t.values());
        prop_assert!(is_ascent(w));
        prop_assert_eq!([asc(v), rep(v), zero(v), max(v)], [rep(w), asc(w), rmin(w), zero(w)]);
    }

    #[test]
    fn psi_and_phi_invert(s in ascent_seq(1..=10)) {
        let p = psi_inv(&s).unwrap();
        prop_assert!(!contains_bivincular_a(&p));
        prop_assert_eq!(psi(&p).unwrap(), s.clone());
        let q = phi_inv(&s).unwrap();
        prop_assert!(!contains_bivincular_b(&q));
        prop_assert_eq!(phi(&q).unwrap(), s);
    }

    #[test]
    fn beta_gamma_round_trips(s in ascent_seq(1..=12)) {
        let b = beta_inv(&s).unwrap();
        prop_assert!(is_b(b.values()));
        prop_assert_eq!(beta(&b).unwrap(), s.clone());
        let c = gamma_inv(&s).unwrap();
        prop_assert!(is_c(c.values()));
        prop_assert_eq!(gamma(&c).unwrap(), s);
    }

    #[test]
    fn perm_codes(p in perm(1..=9)) {
        let code = bv_code(&p);
        prop_assert!(is_inversion(code.values()));
        prop_assert_eq!(bv_decode(&code).unwrap(), p.clone());
        let l = lehmer_code(&p);
        let (v, w) = (p.values(), l.values());
        prop_assert!(is_inversion(w));
        let quad = [des_set(v).len(), lmax_set(v).len(), lmin_set(v).len(), rmax_set(v).len()].map(|k| k as u32);
        prop_assert_eq!(quad, [asc(w), zero(w), max(w), rmin(w)]);
    }

    #[test]
    fn inverse_complement_swaps_the_patterns(p in perm(1..=9)) {
        let q = p.transform(PermTransform::InverseThenComplement);
        prop_assert_eq!(contains_bivincular_a(&p), contains_bivincular_b(&q));
    }

    #[test]
    fn ascent_maps_round_trip(s in ascent_seq(9..=12)) {
        for map in [DecompMap::PhiP, DecompMap::XiS4, DecompMap::S2Reduce, DecompMap::S3Reduce, DecompMap::PhiG] {
            if let Ok(r) = map.apply(&s, Direction::Forward, None) {
                prop_assert!(is_ascent(r.output.values()), "{} left the class on {}", map, s);
                let back = map.apply(&r.output, Direction::Inverse, r.side_index).unwrap();
                prop_assert_eq!(&back.output, &s, "{}", map);
            }
        }
        for map in [DecompMap::EalmShift, DecompMap::ZpairShift] {
            if let Ok(r) = map.apply(&s, Direction::Up, None) {
                prop_assert!(is_ascent(r.output.values()));
                prop_assert_eq!(&map.apply(&r.output, Direction::Down, None).unwrap().output, &s, "{}", map);
            }
        }
        for i in 0..3 {
            if let Ok(r) = DecompMap::ThetaR.apply(&s, Direction::Forward, Some(i)) {
                prop_assert!(is_ascent(r.output.values()));
                let back = DecompMap::ThetaR.apply(&r.output, Direction::Inverse, None).unwrap();
                prop_assert_eq!((back.output, back.side_index), (s.clone(), Some(i)));
            }
        }
    }

    #[test]
    fn t21_maps_round_trip(s in t21_seq(9..=12)) {
        if let Ok(r) = DecompMap::PsiF.apply(&s, Direction::Forward, None) {
            prop_assert!(is_t21(r.output.values()));
            prop_assert_eq!(&DecompMap::PsiF.apply(&r.output, Direction::Inverse, None).unwrap().output, &s);
        }
        if let Ok(r) = DecompMap::MpairShift.apply(&s, Direction::Up, None) {
            prop_assert!(is_t21(r.output.values()));
            prop_assert_eq!(&DecompMap::MpairShift.apply(&r.output, Direction::Down, None).unwrap().output, &s);
        }
        for i in 0..3 {
            if let Ok(r) = DecompMap::Vartheta.apply(&s, Direction::Forward, Some(i)) {
                prop_assert!(is_t21(r.output.values()));
                let back = DecompMap::Vartheta.apply(&r.output, Direction::Inverse, None).unwrap();
                prop_assert_eq!((back.output, back.side_index), (s.clone(), Some(i)));
            }
        }
    }

    #[test]
    fn text_forms_round_trip(s in inversion_seq(1..=12), p in perm(1..=12), r in rational()) {
        prop_assert_eq!(s.to_string().parse::<Seq>().unwrap(), s);
        prop_assert_eq!(p.to_string().parse::<Perm>().unwrap(), p);
        prop_assert_eq!(parse_rational(&r.to_string()).unwrap(), r);
    }

    #[test]
    fn table_json_round_trips(rows in prop::collection::btree_map(prop::collection::vec(0u32..6, 2), 1u64..1_000_000, 0..12)) {
        let t = DistTable {
            class: ClassId::Asc,
            n: 5,
            stats: vec![StatName::Asc, StatName::Zero],
            counts: rows.into_iter().map(|(k, v)| (k, BigUint::from(v))).collect(),
        };
        prop_assert_eq!(DistTable::from_json(&t.to_json()).unwrap(), t);
    }
}
