//! Full coefficient polynomials of `G` from exact point evaluations.
//!
//! The `t^n` coefficient of `G` has degree at most `n` in each of
//! `x, q, u, z`, so `n + 1` nodes per variable determine it. Tensor-grid
//! values are turned into monomial coefficients one axis at a time.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use super::formulas::series_g;
use super::point::SpecPoint;
use crate::error::{Error, Result};

/// Largest order accepted by [`interpolate_g`].
pub const MAX_INTERP_ORDER: usize = 7;

/// A polynomial in `x, q, u, z`, keyed by exponent vectors.
pub type Poly4 = BTreeMap<[u32; 4], BigRational>;

/// Nodes for one axis. The `u` axis uses negative integers: with both
/// `x` and `u` drawn from `0..=d`, the constant `x + u - xu` vanishes at
/// `(0, 0)` and `(2, 2)`, while for `u < 0` and integer `x >= 0` it never
/// does.
fn nodes(axis: usize, d: usize) -> Vec<BigRational> {
    (0..=d as i64)
        .map(|k| BigRational::from_integer(BigInt::from(if axis == 2 { -1 - k } else { k })))
        .collect()
}

/// Monomial coefficients of the interpolant through `(a_k, y_k)`.
fn interpolate_1d(a: &[BigRational], y: &[BigRational]) -> Vec<BigRational> {
    let d = a.len();
    let mut c = y.to_vec();
    for j in 1..d {
        for i in (j..d).rev() {
            c[i] = (&c[i] - &c[i - 1]) / (&a[i] - &a[i - j]);
        }
    }
    let mut poly = vec![BigRational::zero(); d];
    for k in (0..d).rev() {
        // poly = poly * (X - a_k) + c_k
        let mut next = vec![BigRational::zero(); d];
        for e in 0..d - 1 {
            next[e + 1] += &poly[e];
        }
        for e in 0..d {
            next[e] -= &poly[e] * &a[k];
        }
        next[0] += &c[k];
        poly = next;
    }
    poly
}

/// The polynomials `[t^n] G(t; x, q, u, z)` for `n = 0..=order`.
pub fn interpolate_g(order: usize) -> Result<Vec<Poly4>> {
    if order == 0 || order > MAX_INTERP_ORDER {
        return Err(Error::ResourceLimit(format!("interpolation order must be 1 to {MAX_INTERP_ORDER}")));
    }
    let w = order + 1;
    let axes: Vec<Vec<BigRational>> = (0..4).map(|a| nodes(a, order)).collect();
    let grid: Vec<[usize; 4]> = (0..w.pow(4)).map(|f| [f / (w * w * w), f / (w * w) % w, f / w % w, f % w]).collect();
    let evals: Vec<Vec<BigRational>> = grid
        .par_iter()
        .map(|ix| {
            let p = SpecPoint {
                x: axes[0][ix[0]].clone(),
                q: axes[1][ix[1]].clone(),
                u: axes[2][ix[2]].clone(),
                z: axes[3][ix[3]].clone(),
                w: BigRational::zero(),
            };
            series_g(order, &p).map(|s| s.into_coeffs())
        })
        .collect::<Result<_>>()?;
    let stride = [w * w * w, w * w, w, 1];
    let mut out = Vec::with_capacity(w);
    for n in 0..=order {
        let mut vals: Vec<BigRational> = evals.iter().map(|e| e[n].clone()).collect();
        for (axis, &st) in stride.iter().enumerate() {
            for base in 0..vals.len() {
                if (base / st) % w != 0 {
                    continue;
                }
                let line: Vec<BigRational> = (0..w).map(|k| vals[base + k * st].clone()).collect();
                for (k, c) in interpolate_1d(&axes[axis], &line).into_iter().enumerate() {
                    vals[base + k * st] = c;
                }
            }
        }
        let poly: Poly4 = grid
            .iter()
            .zip(vals)
            .filter(|(_, c)| !c.is_zero())
            .map(|(ix, c)| ([ix[0] as u32, ix[1] as u32, ix[2] as u32, ix[3] as u32], c))
            .collect();
        out.push(poly);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::ClassId;
    use crate::stats::StatName;
    use crate::table::dist_table;

    #[test]
    fn one_dimensional() {
        let a: Vec<BigRational> = [-1, 0, 2].iter().map(|&k| BigRational::from_integer(k.into())).collect();
        // 3 - x + 2x^2
        let y: Vec<BigRational> = a.iter().map(|x| BigRational::from_integer(3.into()) - x + x * x * BigRational::from_integer(2.into())).collect();
        let c = interpolate_1d(&a, &y);
        assert_eq!(c, [3, -1, 2].map(|k| BigRational::from_integer(k.into())));
    }

    #[test]
    fn matches_enumerated_polynomials() {
        let polys = interpolate_g(4).unwrap();
        assert!(polys[0].is_empty());
        for (n, poly) in polys.iter().enumerate().skip(1) {
            let t = dist_table(ClassId::Asc, n, &[StatName::Rep, StatName::Max, StatName::Asc, StatName::Zero]).unwrap();
            let expected: Poly4 = t
                .counts
                .iter()
                .map(|(k, v)| ([k[0], k[1], k[2], k[3]], BigRational::from_integer(v.clone().into())))
                .collect();
            assert_eq!(poly, &expected, "n={n}");
        }
    }
}
