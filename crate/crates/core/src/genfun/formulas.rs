//! Closed-form generating functions, expanded as truncated series.
//!
//! Every sum is cut off where its summands' guaranteed order passes the
//! truncation order, and each summand's order is asserted before it is
//! added.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::point::SpecPoint;
use super::series::TruncSeries;
use crate::error::{Error, Result};

pub const DEFAULT_ORDER: usize = 9;
pub const MAX_ORDER: usize = 12;

/// Rejects orders outside `1..=MAX_ORDER`.
pub fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        return Err(Error::Usage("truncation order must be at least 1".into()));
    }
    if order > MAX_ORDER {
        return Err(Error::ResourceLimit(format!("truncation order {order} exceeds the cap {MAX_ORDER}")));
    }
    Ok(())
}

fn konst(order: usize, c: &BigRational) -> TruncSeries {
    TruncSeries::constant(order, c.clone())
}

/// `1 - a`.
fn one_minus(a: &TruncSeries) -> TruncSeries {
    &TruncSeries::one(a.order()) - a
}

/// `sum_{m>=1} prod_{i=1..m} (1 - (1-t)^i)`: the Fishburn numbers.
pub fn fishburn_series(order: usize) -> Result<TruncSeries> {
    check_order(order)?;
    let one_minus_t = one_minus(&TruncSeries::t(order));
    let mut power = TruncSeries::one(order);
    let mut term = TruncSeries::one(order);
    let mut sum = TruncSeries::zero(order);
    for m in 1..=order {
        power = &power * &one_minus_t;
        term = &term * &one_minus(&power);
        term.assert_order(m, "Fishburn summand")?;
        sum = &sum + &term;
    }
    Ok(sum)
}

/// The four-marker series `G(t; x, q, u, z)` over ascent sequences, from
/// its closed form in `r = t(x + u - xu)`. `p.w` is ignored.
pub fn series_g(order: usize, p: &SpecPoint) -> Result<TruncSeries> {
    check_order(order)?;
    let c = p.c();
    if c.is_zero() {
        return Err(Error::Inadmissible(format!(
            "x + u - xu vanishes at {p}, so the denominators x(1-u) + u(1-qr)(1-r)^m and x + u(1-x)(1-qr)(1-r)^m have zero constant term"
        )));
    }
    let one = BigRational::one();
    let r = TruncSeries::monomial(order, c.clone(), 1);
    let one_minus_r = one_minus(&r);
    let zr_minus_1 = &r.scale(&p.z) - &TruncSeries::one(order);
    // a_m = (1 - qr)(1 - r)^m
    let mut a = one_minus(&r.scale(&p.q));
    let lead = r.scale(&(&p.z * &p.q * &c));
    let k_left = konst(order, &(&p.x * (&one - &p.u)));
    let k_right = konst(order, &p.x);
    let u_one_minus_x = &p.u * (&one - &p.x);
    let mut x_pow = one.clone();
    let mut product = TruncSeries::one(order);
    let mut sum = TruncSeries::zero(order);
    for m in 0..order {
        let right = &k_right + &a.scale(&u_one_minus_x);
        let left = &k_left + &a.scale(&p.u);
        let num = (&(&lead * &a) * &product).scale(&x_pow);
        let term = num.checked_div(&(&left * &right))?;
        term.assert_order(m + 1, "summand of G")?;
        sum = &sum + &term;

        let factor = (&TruncSeries::one(order) + &(&zr_minus_1 * &a)).checked_div(&right)?;
        product = &product * &factor;
        a = &a * &one_minus_r;
        x_pow *= &p.x;
    }
    Ok(sum)
}

/// `sum_{m>=0} qzt prod_{i<m} [1 - (1-zt)(1-qt)(1-t)^i]`, the joint
/// series of zero and max.
pub fn series_zeromax(order: usize, q: &BigRational, z: &BigRational) -> Result<TruncSeries> {
    check_order(order)?;
    let t = TruncSeries::t(order);
    let one_minus_t = one_minus(&t);
    let lead = TruncSeries::monomial(order, q * z, 1);
    let mut base = &one_minus(&t.scale(z)) * &one_minus(&t.scale(q));
    let mut product = TruncSeries::one(order);
    let mut sum = TruncSeries::zero(order);
    for m in 0..order {
        let term = &lead * &product;
        term.assert_order(m + 1, "summand of the zero/max series")?;
        sum = &sum + &term;
        product = &product * &one_minus(&base);
        base = &base * &one_minus_t;
    }
    Ok(sum)
}

/// The two closed forms of the asc/zero series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AsczeroVariant {
    /// `sum_m u^m prod_{i=0..m} (1 - (1-zt)(1-t)^i) / (u + (1-u)(1-zt)(1-t)^i)`.
    Primitive,
    /// `sum_m zt(1-t)^{m+1} / (1 - u + u(1-t)^{m+1}) prod_{i<m} (1 - (1-zt)(1-t)^{i+1})`.
    Alternative,
}

impl FromStr for AsczeroVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "primitive" | "1" => Ok(AsczeroVariant::Primitive),
            "alternative" | "2" => Ok(AsczeroVariant::Alternative),
            _ => Err(Error::Usage(format!("unknown asc/zero variant {s:?}"))),
        }
    }
}

impl fmt::Display for AsczeroVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AsczeroVariant::Primitive => "primitive",
            AsczeroVariant::Alternative => "alternative",
        })
    }
}

/// `G(t; 1, 1, u, z)` from either closed form. Both denominators have
/// constant term 1, so every `(u, z)` is admissible.
pub fn series_asczero(order: usize, u: &BigRational, z: &BigRational, variant: AsczeroVariant) -> Result<TruncSeries> {
    check_order(order)?;
    let one = BigRational::one();
    let t = TruncSeries::t(order);
    let one_minus_t = one_minus(&t);
    let one_minus_zt = one_minus(&t.scale(z));
    let mut sum = TruncSeries::zero(order);
    match variant {
        AsczeroVariant::Primitive => {
            // b_i = (1-zt)(1-t)^i
            let mut b = one_minus_zt;
            let mut product = TruncSeries::one(order);
            let mut u_pow = one.clone();
            let k_u = konst(order, u);
            for m in 0..order {
                let den = &k_u + &b.scale(&(&one - u));
                product = &product * &one_minus(&b).checked_div(&den)?;
                let term = product.scale(&u_pow);
                term.assert_order(m + 1, "summand of the primitive asc/zero series")?;
                sum = &sum + &term;
                b = &b * &one_minus_t;
                u_pow *= u;
            }
        }
        AsczeroVariant::Alternative => {
            let zt = t.scale(z);
            let k = konst(order, &(&one - u));
            let mut power = one_minus_t.clone();
            let mut product = TruncSeries::one(order);
            for m in 0..order {
                let den = &k + &power.scale(u);
                let term = (&(&zt * &power) * &product).checked_div(&den)?;
                term.assert_order(m + 1, "summand of the alternative asc/zero series")?;
                sum = &sum + &term;
                product = &product * &one_minus(&(&one_minus_zt * &power));
                power = &power * &one_minus_t;
            }
        }
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    const FISHBURN: [i64; 13] = [0, 1, 2, 5, 15, 53, 217, 1014, 5335, 31240, 201608, 1422074, 10886503];

    #[test]
    fn fishburn_leading_coefficients() {
        assert_eq!(fishburn_series(7).unwrap(), TruncSeries::from_integers(7, &FISHBURN[..8]));
        assert_eq!(fishburn_series(1).unwrap(), TruncSeries::from_integers(1, &[0, 1]));
        assert_eq!(fishburn_series(12).unwrap(), TruncSeries::from_integers(12, &FISHBURN));
    }

    #[test]
    fn order_bounds() {
        assert!(matches!(fishburn_series(0), Err(Error::Usage(_))));
        assert!(matches!(fishburn_series(13), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn all_markers_off_gives_fishburn() {
        let f = fishburn_series(9).unwrap();
        assert_eq!(series_g(9, &SpecPoint::ones()).unwrap(), f);
        assert_eq!(series_zeromax(9, &rat(1, 1), &rat(1, 1)).unwrap(), f);
        for v in [AsczeroVariant::Primitive, AsczeroVariant::Alternative] {
            assert_eq!(series_asczero(9, &rat(1, 1), &rat(1, 1), v).unwrap(), f);
        }
    }

    #[test]
    fn first_coefficient_is_qz() {
        let p = SpecPoint {
            x: rat(2, 3),
            q: rat(-5, 7),
            u: rat(3, 1),
            z: rat(1, 4),
            w: rat(1, 1),
        };
        let g = series_g(4, &p).unwrap();
        assert_eq!(g.coeff(0), &rat(0, 1));
        assert_eq!(g.coeff(1), &(&p.q * &p.z));
    }

    #[test]
    fn inadmissible_point_names_the_denominator() {
        let err = series_g(5, &SpecPoint::from_ints(2, 1, 2, 1, 1)).unwrap_err();
        assert!(matches!(&err, Error::Inadmissible(m) if m.contains("x + u - xu")), "{err}");
    }

    #[test]
    fn zeromax_is_symmetric() {
        let (a, b) = (rat(3, 2), rat(-7, 5));
        assert_eq!(series_zeromax(9, &a, &b).unwrap(), series_zeromax(9, &b, &a).unwrap());
    }

    #[test]
    fn asczero_variants_agree_at_a_point() {
        let (u, z) = (rat(-2, 3), rat(5, 4));
        assert_eq!(
            series_asczero(9, &u, &z, AsczeroVariant::Primitive).unwrap(),
            series_asczero(9, &u, &z, AsczeroVariant::Alternative).unwrap()
        );
    }
}
