//! Subset identities for the four-way split of `{s : |s| > max(s)}`.
//!
//! The left side is the enumerated five-marker distribution over one subset.
//! The right side is the closed form, with every `F` term evaluated from
//! the enumerated distribution over the whole set at a modified point.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::eval::series_from_tables;
use super::formulas::check_order;
use super::point::SpecPoint;
use super::series::TruncSeries;
use crate::class::ClassId;
use crate::decomp::{classify, SubsetLabel, SubsetScheme};
use crate::enumerate::{enumerate, Limits};
use crate::error::{Error, Result};
use crate::seq::Obj;
use crate::stats::{asc, ealm, max, rep, zero, StatName};
use crate::table::DistTable;

const STATS: [StatName; 5] = [StatName::Rep, StatName::Max, StatName::Ealm, StatName::Asc, StatName::Zero];

/// Outcome of one identity check.
#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub case: u8,
    pub order: usize,
    pub point: SpecPoint,
    pub lhs: TruncSeries,
    pub rhs: TruncSeries,
    pub equal: bool,
}

/// Five-marker distributions over the whole set and each subset, for every
/// length up to `order`.
#[derive(Clone, Debug)]
pub struct CaseData {
    order: usize,
    whole: Vec<DistTable>,
    parts: [Vec<DistTable>; 4],
}

fn empty(n: usize) -> DistTable {
    DistTable {
        class: ClassId::Asc,
        n,
        stats: STATS.to_vec(),
        counts: Default::default(),
    }
}

impl CaseData {
    pub fn enumerate(order: usize) -> Result<Self> {
        check_order(order)?;
        Limits::default().check(ClassId::Asc, order)?;
        let mut whole = Vec::new();
        let mut parts: [Vec<DistTable>; 4] = Default::default();
        for n in 1..=order {
            let mut w = empty(n);
            let mut ps = [empty(n), empty(n), empty(n), empty(n)];
            for obj in enumerate(ClassId::Asc, n)? {
                let Obj::Seq(s) = obj else { unreachable!("sequence class") };
                let v = s.values();
                if v.len() <= max(v) as usize {
                    continue;
                }
                let key = vec![rep(v), max(v), ealm(v), asc(v), zero(v)];
                let k = match classify(&s, SubsetScheme::AscS)? {
                    SubsetLabel::S1 => 0,
                    SubsetLabel::S2 => 1,
                    SubsetLabel::S3 => 2,
                    SubsetLabel::S4 => 3,
                    l => return Err(Error::Contract(format!("unexpected label {l:?}"))),
                };
                *ps[k].counts.entry(key.clone()).or_default() += 1u32;
                *w.counts.entry(key).or_default() += 1u32;
            }
            whole.push(w);
            for (dst, src) in parts.iter_mut().zip(ps) {
                dst.push(src);
            }
        }
        Ok(CaseData { order, whole, parts })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn f(&self, p: &SpecPoint) -> Result<TruncSeries> {
        series_from_tables(self.order, &self.whole, p)
    }

    /// Checks identity `case` (1 to 4) at `p`.
    pub fn check(&self, case: u8, p: &SpecPoint) -> Result<CaseReport> {
        if !(1..=4).contains(&case) {
            return Err(Error::Usage(format!("case must be 1 to 4, got {case}")));
        }
        if p.q.is_zero() {
            return Err(Error::Inadmissible("q = 0 makes 1/q undefined".into()));
        }
        if p.w.is_one() {
            return Err(Error::Inadmissible("w = 1 makes 1/(1-w) undefined".into()));
        }
        let n = self.order;
        let one = BigRational::one();
        let t = TruncSeries::t(n);
        let lhs = series_from_tables(n, &self.parts[case as usize - 1], p)?;
        let at_w = |w: &BigRational| SpecPoint { w: w.clone(), ..p.clone() };
        let inv_1mw = (&one - &p.w).recip();
        let z_1 = &p.z - &one;
        // w + z - wz
        let wz = &p.w + &p.z - &p.w * &p.z;
        let rhs = match case {
            1 => {
                let qtu = t.scale(&(&p.q * &p.u));
                let num = &TruncSeries::constant(n, p.z.clone()) + &qtu.scale(&(&p.w - &p.w * &p.z));
                let den = &(&TruncSeries::one(n) - &qtu) * &(&TruncSeries::one(n) - &qtu.scale(&p.w));
                let lead = TruncSeries::monomial(n, &p.q * &p.x * &p.z, 2);
                (&lead * &num).checked_div(&den)?
            }
            2 => {
                let shifted = SpecPoint {
                    q: &p.q * &p.w,
                    w: one.clone(),
                    ..p.clone()
                };
                let tx = t.scale(&p.x);
                let diff = &self.f(p)? - &self.f(&shifted)?;
                &(&tx * &diff).scale(&inv_1mw) + &(&tx * &self.f(&at_w(&BigRational::zero()))?).scale(&z_1)
            }
            3 => {
                let tux = t.scale(&(&p.u * &p.x));
                let a = self.f(&at_w(&one))?.scale(&(&wz * &inv_1mw));
                let b = self.f(p)?.scale(&inv_1mw);
                let c = self.f(&at_w(&BigRational::zero()))?.scale(&z_1);
                &tux * &(&(&a - &b) - &c)
            }
            _ => {
                let inv_q = p.q.recip();
                // (1 - qut) / q = 1/q - ut
                let k = &TruncSeries::constant(n, inv_q) - &t.scale(&p.u);
                let a = self.f(&at_w(&one))?.scale(&(&wz * &inv_1mw));
                let b = self.f(p)?.scale(&inv_1mw);
                let c = self.f(&at_w(&BigRational::zero()))?.scale(&z_1);
                &k * &(&(&a - &b) - &c)
            }
        };
        let equal = lhs == rhs;
        Ok(CaseReport {
            case,
            order: n,
            point: p.clone(),
            lhs,
            rhs,
            equal,
        })
    }
}

/// Enumerates up to `order` and checks identity `case` at `p`.
pub fn check_case_identity(case: u8, order: usize, p: &SpecPoint) -> Result<CaseReport> {
    CaseData::enumerate(order)?.check(case, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn all_cases_at_a_fixed_point() {
        let data = CaseData::enumerate(8).unwrap();
        let p = SpecPoint {
            x: rat(2, 1),
            q: rat(3, 1),
            u: rat(1, 2),
            z: rat(5, 1),
            w: rat(1, 3),
        };
        for k in 1..=4 {
            let r = data.check(k, &p).unwrap();
            assert!(r.equal, "case {k}: {} vs {}", r.lhs, r.rhs);
        }
    }

    #[test]
    fn degenerate_point() {
        let data = CaseData::enumerate(7).unwrap();
        let p = SpecPoint {
            z: rat(1, 1),
            w: rat(0, 1),
            ..SpecPoint::from_ints(2, 3, 4, 1, 0)
        };
        for k in 1..=4 {
            assert!(data.check(k, &p).unwrap().equal, "case {k}");
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        let data = CaseData::enumerate(3).unwrap();
        assert!(matches!(data.check(5, &SpecPoint::from_ints(1, 1, 1, 1, 2)), Err(Error::Usage(_))));
        assert!(matches!(data.check(2, &SpecPoint::ones()), Err(Error::Inadmissible(_))));
        assert!(matches!(data.check(2, &SpecPoint::from_ints(1, 0, 1, 1, 2)), Err(Error::Inadmissible(_))));
    }
}
