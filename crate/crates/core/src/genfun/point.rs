//! Rational specialization points for the marker variables.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Parses `p`, `-p`, `p/q` or `-p/q` with `q != 0` into an exact rational.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    BigRational::from_str(t).map_err(|e| Error::Parse(format!("bad rational {text:?}: {e}")))
}

/// Values of the markers `x` (rep), `q` (max), `u` (asc), `z` (zero) and
/// `w` (ealm).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecPoint {
    pub x: BigRational,
    pub q: BigRational,
    pub u: BigRational,
    pub z: BigRational,
    pub w: BigRational,
}

impl Default for SpecPoint {
    fn default() -> Self {
        SpecPoint::ones()
    }
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl SpecPoint {
    pub fn ones() -> Self {
        SpecPoint {
            x: BigRational::one(),
            q: BigRational::one(),
            u: BigRational::one(),
            z: BigRational::one(),
            w: BigRational::one(),
        }
    }

    /// A point from small integers, in the order `x, q, u, z, w`.
    pub fn from_ints(x: i64, q: i64, u: i64, z: i64, w: i64) -> Self {
        SpecPoint {
            x: int(x),
            q: int(q),
            u: int(u),
            z: int(z),
            w: int(w),
        }
    }

    /// `x + u - xu`, the constant term of every denominator in the
    /// closed form for `G`.
    pub fn c(&self) -> BigRational {
        &self.x + &self.u - &self.x * &self.u
    }

    /// Exchanges `(x, q)` with `(u, z)`.
    pub fn swapped(&self) -> Self {
        SpecPoint {
            x: self.u.clone(),
            q: self.z.clone(),
            u: self.x.clone(),
            z: self.q.clone(),
            w: self.w.clone(),
        }
    }

    /// Draws coordinates with numerators in `-10..=10` and denominators in
    /// `1..=10`, resampling the whole point until `admissible` holds.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, admissible: impl Fn(&SpecPoint) -> bool) -> Self {
        let draw = |rng: &mut R| BigRational::new(rng.gen_range(-10i64..=10).into(), rng.gen_range(1i64..=10).into());
        loop {
            let p = SpecPoint {
                x: draw(rng),
                q: draw(rng),
                u: draw(rng),
                z: draw(rng),
                w: draw(rng),
            };
            if admissible(&p) {
                return p;
            }
        }
    }

    /// Admissible for the closed form of `G`.
    pub fn admissible_for_g(&self) -> bool {
        !self.c().is_zero()
    }

    /// Admissible for the subset identities: `q != 0` and `w` outside `{0, 1}`.
    pub fn admissible_for_cases(&self) -> bool {
        !self.q.is_zero() && !self.w.is_zero() && !self.w.is_one()
    }
}

impl fmt::Display for SpecPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x={} q={} u={} z={} w={}", self.x, self.q, self.u, self.z, self.w)
    }
}

impl Serialize for SpecPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = serializer.serialize_map(Some(5))?;
        for (k, v) in [("x", &self.x), ("q", &self.q), ("u", &self.u), ("z", &self.z), ("w", &self.w)] {
            m.serialize_entry(k, &v.to_string())?;
        }
        m.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn parses_exact_rationals() {
        assert_eq!(parse_rational("2/3").unwrap(), BigRational::new(2.into(), 3.into()));
        assert_eq!(parse_rational(" -4 ").unwrap(), int(-4));
        assert_eq!(parse_rational("6/4").unwrap(), BigRational::new(3.into(), 2.into()));
    }

    #[test]
    fn rejects_malformed_rationals() {
        for bad in ["", "1/0", "a", "1/", "/2", "1.5", "1//2"] {
            assert!(matches!(parse_rational(bad), Err(Error::Parse(_))), "{bad:?}");
        }
    }

    #[test]
    fn random_points_are_seeded_and_admissible() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let p = SpecPoint::random(&mut a, SpecPoint::admissible_for_cases);
            assert!(p.admissible_for_cases());
            assert_eq!(p, SpecPoint::random(&mut b, SpecPoint::admissible_for_cases));
        }
    }

    #[test]
    fn c_vanishes_at_x_zero_u_zero() {
        assert!(!SpecPoint::from_ints(0, 1, 0, 1, 1).admissible_for_g());
        assert!(SpecPoint::ones().admissible_for_g());
    }
}
