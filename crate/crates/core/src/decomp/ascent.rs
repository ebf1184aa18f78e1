//! Maps on ascent sequences driven by the entry after the last maximal.
//!
//! Throughout, `p = max(s)` and the maximals occupy indices `0..p`, so the
//! entry after the last maximal sits at index `p`.

use super::classify::{in_p, s_label, SubsetLabel};
use super::MapResult;
use crate::class::is_ascent;
use crate::error::{domain, Result};
use crate::seq::Seq;
use crate::stats::{ealm, max};

fn require_ascent(s: &Seq) -> Result<&[u32]> {
    let v = s.values();
    if v.is_empty() || !is_ascent(v) {
        domain!("{s} is not a non-empty ascent sequence");
    }
    Ok(v)
}

fn is_increasing(v: &[u32]) -> bool {
    v.iter().enumerate().all(|(k, &x)| x as usize == k)
}

/// Removes the top maximal of a sequence in which `max - 1` occurs once.
pub fn phi_p(s: &Seq) -> Result<Seq> {
    let v = require_ascent(s)?;
    if v.len() < 2 || !in_p(v) {
        domain!("{s} is not in P with length at least 2");
    }
    if is_increasing(v) {
        return Ok(Seq::increasing(v.len() - 1));
    }
    let p = max(v) - 1;
    let mut out = v.to_vec();
    out.remove(p as usize);
    for x in &mut out {
        if *x > p {
            *x -= 1;
        }
    }
    Ok(Seq::new(out))
}

pub fn phi_p_inv(t: &Seq) -> Result<Seq> {
    let v = require_ascent(t)?;
    if is_increasing(v) {
        return Ok(Seq::increasing(v.len() + 1));
    }
    let p = max(v);
    let mut out = v.to_vec();
    for x in &mut out[p as usize..] {
        if *x >= p {
            *x += 1;
        }
    }
    out.insert(p as usize, p);
    Ok(Seq::new(out))
}

/// Promotes the entry after the last maximal to a new maximal.
pub fn xi_s4(s: &Seq) -> Result<MapResult> {
    let v = require_ascent(s)?;
    if s_label(v) != Some(SubsetLabel::S4) {
        domain!("{s} is not in S4");
    }
    let p = max(v) as usize;
    let mut out = v.to_vec();
    let i = out[p];
    out[p] = p as u32;
    Ok(MapResult::with_side(Seq::new(out), i))
}

pub fn xi_s4_inv(t: &Seq, i: u32) -> Result<Seq> {
    let v = require_ascent(t)?;
    if in_p(v) || i >= ealm(v) {
        domain!("({t}, {i}) needs t outside P and i < ealm(t)");
    }
    let p = max(v) as usize - 1;
    let mut out = v.to_vec();
    out[p] = i;
    Ok(Seq::new(out))
}

/// Deletes the entry after the last maximal when it is not an ascent.
pub fn s2_reduce(s: &Seq) -> Result<MapResult> {
    let v = require_ascent(s)?;
    if s_label(v) != Some(SubsetLabel::S2) {
        domain!("{s} is not in S2");
    }
    let p = max(v) as usize;
    let mut out = v.to_vec();
    let i = out.remove(p);
    Ok(MapResult::with_side(Seq::new(out), i))
}

pub fn s2_reduce_inv(t: &Seq, i: u32) -> Result<Seq> {
    let v = require_ascent(t)?;
    let p = max(v);
    if v.len() == p as usize || i < ealm(v) || i >= p {
        domain!("({t}, {i}) needs |t| > max(t) and ealm(t) <= i < max(t)");
    }
    let mut out = v.to_vec();
    out.insert(p as usize, i);
    Ok(Seq::new(out))
}

/// Deletes an ascending entry after the last maximal, closing the value gap.
pub fn s3_reduce(s: &Seq) -> Result<MapResult> {
    let v = require_ascent(s)?;
    if s_label(v) != Some(SubsetLabel::S3) {
        domain!("{s} is not in S3");
    }
    let p = max(v);
    let mut out = v.to_vec();
    let i = out.remove(p as usize);
    for x in &mut out {
        if *x > p {
            *x -= 1;
        }
    }
    Ok(MapResult::with_side(Seq::new(out), i))
}

pub fn s3_reduce_inv(t: &Seq, i: u32) -> Result<Seq> {
    let v = require_ascent(t)?;
    if i >= ealm(v) {
        domain!("({t}, {i}) needs i < ealm(t)");
    }
    let p = max(v);
    let mut out = v.to_vec();
    for x in &mut out[p as usize + 1..] {
        if *x >= p {
            *x += 1;
        }
    }
    out.insert(p as usize, i);
    Ok(Seq::new(out))
}

/// Moves `ealm` by one within `S1 | S2 | S3`, keeping `rep` and `max`.
pub fn ealm_shift(s: &Seq, up: bool) -> Result<Seq> {
    let v = require_ascent(s)?;
    if !matches!(s_label(v), Some(SubsetLabel::S1 | SubsetLabel::S2 | SubsetLabel::S3)) {
        domain!("{s} is not in S1, S2 or S3");
    }
    let p = max(v);
    let pu = p as usize;
    let i = v[pu];
    let mut out = v.to_vec();
    if up {
        if i + 1 >= p {
            domain!("ealm({s}) = {i} leaves no room below max - 1");
        }
        out[pu] = i + 1;
        if out.get(pu + 1) == Some(&(i + 1)) {
            for x in &mut out {
                if *x > p {
                    *x -= 1;
                }
            }
        }
    } else {
        if i == 0 {
            domain!("ealm({s}) = 0 cannot move down");
        }
        out[pu] = i - 1;
        if out.get(pu + 1) == Some(&i) {
            for x in &mut out {
                if *x >= p {
                    *x += 1;
                }
            }
        }
    }
    Ok(Seq::new(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> Seq {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(phi_p(&Seq::increasing(5)).unwrap(), Seq::increasing(4));
        assert_eq!(phi_p(&seq("0,1,0")).unwrap(), seq("0,0"));
        assert_eq!(xi_s4(&seq("0,0,1")).unwrap(), MapResult::with_side(seq("0,1,1"), 0));
        assert_eq!(s2_reduce(&seq("0,1,1,0")).unwrap(), MapResult::with_side(seq("0,1,0"), 1));
        assert_eq!(s2_reduce(&seq("0,0,0")).unwrap(), MapResult::with_side(seq("0,0"), 0));
        assert_eq!(s3_reduce(&seq("0,1,0,1")).unwrap(), MapResult::with_side(seq("0,1,1"), 0));
        assert_eq!(ealm_shift(&seq("0,1,0"), true).unwrap(), seq("0,1,1"));
        assert_eq!(ealm_shift(&seq("0,1,1"), false).unwrap(), seq("0,1,0"));
    }
}
