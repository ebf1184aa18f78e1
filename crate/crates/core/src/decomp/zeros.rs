//! Maps on ascent sequences driven by `zpair`.
//!
//! `Z[l]` is the 0-based index of the `l`-th zero.

use super::classify::in_g;
use super::MapResult;
use crate::class::is_ascent;
use crate::error::{domain, Error, Result};
use crate::seq::Seq;
use crate::stats::{zero, zero_indices, zpair, zpos};

fn require_ascent(s: &Seq) -> Result<&[u32]> {
    let v = s.values();
    if v.is_empty() || !is_ascent(v) {
        domain!("{s} is not a non-empty ascent sequence");
    }
    Ok(v)
}

fn zpair_of(v: &[u32]) -> Result<usize> {
    zpair(v)
        .map(|j| j as usize)
        .ok_or_else(|| Error::Domain(format!("zpair is undefined on {}", Seq::from(v))))
}

fn zpos_of(v: &[u32]) -> Result<usize> {
    zpos(v)
        .map(|j| j as usize)
        .ok_or_else(|| Error::Domain(format!("zpos is undefined on {}", Seq::from(v))))
}

fn bump(v: &mut [u32], range: std::ops::Range<usize>, up: bool) {
    for d in &mut v[range] {
        if up {
            *d += 1;
        } else {
            *d -= 1;
        }
    }
}

/// Drops one zero from a sequence in `G`, keeping `asc` and `zpair`.
pub fn phi_g(s: &Seq) -> Result<Seq> {
    let v = require_ascent(s)?;
    if !in_g(v)? {
        domain!("{s} is not in G");
    }
    let j = zpair_of(v)?;
    let z = zero_indices(v);
    let mut out = v.to_vec();
    out.remove(z[j + 1]);
    Ok(Seq::new(out))
}

pub fn phi_g_inv(t: &Seq) -> Result<Seq> {
    let v = require_ascent(t)?;
    let j = zpair_of(v)?;
    let z = zero_indices(v);
    let mut out = v.to_vec();
    match z.get(j + 1) {
        Some(&at) => out.insert(at, 0),
        None => out.push(0),
    }
    Ok(Seq::new(out))
}

/// Moves `zpair` by one within `R1`, keeping `asc`, `zero` and `zpos = 0`.
pub fn zpair_shift(s: &Seq, up: bool) -> Result<Seq> {
    let v = require_ascent(s)?;
    if v.len() == zero(v) as usize || zpos_of(v)? != 0 {
        domain!("{s} is not in R1");
    }
    let c = zpair_of(v)?;
    let z = zero_indices(v);
    let mut out = v.to_vec();
    if up {
        if c + 1 >= z.len() {
            domain!("zpair({s}) = {c} leaves no room below zero - 1");
        }
        out.remove(z[c] + 1);
        bump(&mut out, z[c] + 1..z[c + 1] - 1, false);
        out.insert(z[c + 1], 1);
    } else {
        if c == 0 {
            domain!("zpair({s}) = 0 cannot move down");
        }
        out.remove(z[c] + 1);
        bump(&mut out, z[c - 1] + 1..z[c], true);
        out.insert(z[c - 1] + 1, 1);
    }
    Ok(Seq::new(out))
}

/// Step Z0: lifts the block before the `j`-th zero, drops that zero and
/// pairs the previous zero with a 1.
fn step_z0(v: &mut Vec<u32>, j: usize) {
    let z = zero_indices(v);
    bump(v, z[j - 1] + 1..z[j], true);
    v.remove(z[j]);
    v.insert(z[j - 1] + 1, 1);
}

/// Step Z1 or Z2, lowering `zpair` from `c` to `c - 1`.
fn step_z12(v: &mut Vec<u32>, c: usize) {
    let z = zero_indices(v);
    if z[c - 1] + 1 == z[c] {
        v.remove(z[c]);
        match z.get(c + 1) {
            Some(&next) => v.insert(next, 0),
            None => v.push(0),
        }
    } else {
        bump(v, z[c - 1] + 1..z[c], true);
        if v.get(z[c] + 2).is_some_and(|&x| x > 1) {
            v.remove(z[c] + 1);
            v.insert(z[c - 1] + 1, 1);
        } else {
            v.drain(z[c]..z[c] + 2);
            v.splice(z[c - 1]..z[c - 1], [0, 1]);
        }
    }
}

fn require_gc_pair(v: &[u32], i: u32) -> Result<usize> {
    if in_g(v)? {
        domain!("{} is in G", Seq::from(v));
    }
    let j = zpair_of(v)?;
    if i as usize >= j {
        domain!("target {i} is not below zpair({}) = {j}", Seq::from(v));
    }
    Ok(j)
}

/// Every row from `s` down to the sequence with `zpair = i`.
pub fn theta_r_trace(s: &Seq, i: u32) -> Result<Vec<Seq>> {
    let v = require_ascent(s)?;
    let j = require_gc_pair(v, i)?;
    let mut rows = vec![s.clone()];
    let mut cur = v.to_vec();
    step_z0(&mut cur, j);
    rows.push(Seq::from(cur.as_slice()));
    for c in (i as usize + 1..j).rev() {
        step_z12(&mut cur, c);
        rows.push(Seq::from(cur.as_slice()));
    }
    Ok(rows)
}

/// Sends `(s, i)` with `s` outside `G` and `i < zpair(s)` into `R2` with
/// `zpair = i`, keeping `asc` and lowering `zero` by one.
pub fn theta_r(s: &Seq, i: u32) -> Result<Seq> {
    Ok(theta_r_trace(s, i)?.pop().expect("at least two rows"))
}

fn first_small_after(v: &[u32], a: usize) -> usize {
    (a + 1..v.len()).find(|&e| v[e] <= 1).unwrap_or(v.len())
}

pub fn theta_r_inv(t: &Seq) -> Result<MapResult> {
    let v = require_ascent(t)?;
    if v.len() == zero(v) as usize || zpos_of(v)? == 0 {
        domain!("{t} is not in R2");
    }
    let side = zpair_of(v)? as u32;
    let mut cur = v.to_vec();
    for _ in 0..=v.len() {
        let m = zpair_of(&cur)?;
        let z = zero_indices(&cur);
        let a = z[m];
        if in_g(&cur)? {
            // Undo Z1.
            let next = z[m + 1];
            if next + 1 == cur.len() {
                cur.remove(next);
            } else {
                cur.remove(next + 1);
            }
            cur.insert(a + 1, 0);
        } else if zpos_of(&cur)? == m + 1 {
            // Undo Z0.
            let l = (a + 2..cur.len())
                .find(|&l| cur[l] == 1)
                .ok_or_else(|| Error::Contract(format!("no critical zero position in {}", Seq::from(cur.as_slice()))))?;
            cur.remove(a + 1);
            bump(&mut cur, a + 1..l - 1, false);
            cur.insert(l - 1, 0);
            return Ok(MapResult::with_side(Seq::new(cur), side));
        } else {
            // Undo Z2.
            match cur.get(a + 2) {
                Some(0) => {
                    cur.drain(a..a + 2);
                    let e = first_small_after(&cur, a);
                    bump(&mut cur, a + 1..e, false);
                    cur.splice(e..e, [0, 1]);
                }
                Some(&x) if x >= 2 => {
                    cur.remove(a + 1);
                    let e = first_small_after(&cur, a);
                    bump(&mut cur, a + 1..e, false);
                    cur.insert(e + 1, 1);
                }
                _ => {
                    return Err(Error::Contract(format!(
                        "zero {m} of {} is followed by neither 1 0 nor 1 x with x >= 2",
                        Seq::from(cur.as_slice())
                    )))
                }
            }
        }
    }
    Err(Error::Contract(format!("inverting theta_R on {t} did not terminate")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> Seq {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        let s = seq("0,1,2,0,0,1,2,4,1,2,0,2");
        assert_eq!(theta_r(&s, 1).unwrap(), seq("0,1,2,0,1,1,2,4,1,2,0,2"));
        assert_eq!(theta_r(&s, 0).unwrap(), seq("0,1,0,2,3,1,2,4,1,2,0,2"));
        for i in 0..2 {
            let back = theta_r_inv(&theta_r(&s, i).unwrap()).unwrap();
            assert_eq!(back, MapResult::with_side(s.clone(), i));
        }
    }

    #[test]
    fn small_examples() {
        assert_eq!(phi_g(&seq("0,1,0")).unwrap(), seq("0,1"));
        assert_eq!(phi_g_inv(&seq("0,1")).unwrap(), seq("0,1,0"));
        assert_eq!(zpair_shift(&seq("0,1,0,0"), true).unwrap(), seq("0,0,1,0"));
        assert_eq!(zpair_shift(&seq("0,0,1,0"), false).unwrap(), seq("0,1,0,0"));
    }
}
