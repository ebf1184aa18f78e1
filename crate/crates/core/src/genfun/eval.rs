//! Evaluating enumerated distributions at a specialization point.

use num_rational::BigRational;
use num_traits::{pow, Zero};

use super::point::SpecPoint;
use super::series::TruncSeries;
use crate::error::{Error, Result};
use crate::stats::StatName;
use crate::table::DistTable;

/// The marker variable carried by a statistic, if any.
pub fn marker_value(stat: StatName, p: &SpecPoint) -> Option<&BigRational> {
    match stat {
        StatName::Rep => Some(&p.x),
        StatName::Max => Some(&p.q),
        StatName::Asc => Some(&p.u),
        StatName::Zero => Some(&p.z),
        StatName::Ealm => Some(&p.w),
        _ => None,
    }
}

/// `sum count * x^rep q^max u^asc z^zero w^ealm` over the table, using only
/// the markers of columns present.
pub fn eval_table(table: &DistTable, p: &SpecPoint) -> Result<BigRational> {
    let vars = table
        .stats
        .iter()
        .map(|&s| marker_value(s, p).ok_or_else(|| Error::Usage(format!("statistic {s} carries no marker variable"))))
        .collect::<Result<Vec<_>>>()?;
    let mut total = BigRational::zero();
    for (tuple, count) in &table.counts {
        let mut term = BigRational::from_integer(count.clone().into());
        for (v, &e) in vars.iter().zip(tuple) {
            term *= pow((*v).clone(), e as usize);
        }
        total += term;
    }
    Ok(total)
}

/// One value per table, in order.
pub fn eval_gf(tables: &[DistTable], p: &SpecPoint) -> Result<Vec<BigRational>> {
    tables.iter().map(|t| eval_table(t, p)).collect()
}

/// The series whose `t^n` coefficient is the evaluation of the table of
/// length `n`. Lengths not covered contribute zero.
pub fn series_from_tables(order: usize, tables: &[DistTable], p: &SpecPoint) -> Result<TruncSeries> {
    let mut coeffs = vec![BigRational::zero(); order + 1];
    for t in tables {
        if t.n <= order {
            coeffs[t.n] += eval_table(t, p)?;
        }
    }
    Ok(TruncSeries::from_coeffs(order, coeffs))
}
