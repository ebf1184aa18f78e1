//! Maps on (2-1)-avoiding inversion sequences driven by `mpair`.
//!
//! `K[l]` is the 0-based index of the `l`-th maximal; its value is `K[l]`.

use super::classify::in_f;
use super::MapResult;
use crate::class::is_t21;
use crate::error::{domain, Error, Result};
use crate::seq::Seq;
use crate::stats::{max, maximal_indices, mpair, mpos};

fn require_t(s: &Seq) -> Result<&[u32]> {
    let v = s.values();
    if v.is_empty() || !is_t21(v) {
        domain!("{s} is not a non-empty (2-1)-avoiding inversion sequence");
    }
    Ok(v)
}

fn mpair_of(v: &[u32]) -> Result<usize> {
    mpair(v)
        .map(|j| j as usize)
        .ok_or_else(|| Error::Domain(format!("mpair is undefined on {}", Seq::from(v))))
}

fn mpos_of(v: &[u32]) -> Result<usize> {
    mpos(v)
        .map(|j| j as usize)
        .ok_or_else(|| Error::Domain(format!("mpos is undefined on {}", Seq::from(v))))
}

fn first_index_of(v: &[u32], x: u32) -> Result<usize> {
    v.iter()
        .position(|&y| y == x)
        .ok_or_else(|| Error::Contract(format!("{x} is absent from {}", Seq::from(v))))
}

/// Drops one maximal from a sequence in `F`, keeping `rep` and `mpair`.
pub fn psi_f(s: &Seq) -> Result<Seq> {
    let v = require_t(s)?;
    if !in_f(v)? {
        domain!("{s} is not in F");
    }
    let j = mpair_of(v)?;
    let k = maximal_indices(v);
    let mut out = v.to_vec();
    if k[j + 1] + 1 == v.len() {
        out.pop();
    } else {
        let x = k[j + 2] as u32;
        out.remove(k[j + 2]);
        for d in &mut out {
            if *d >= x {
                *d -= 1;
            }
        }
    }
    Ok(Seq::new(out))
}

pub fn psi_f_inv(t: &Seq) -> Result<Seq> {
    let v = require_t(t)?;
    let j = mpair_of(v)?;
    let k = maximal_indices(v);
    let mut out = v.to_vec();
    if j + 1 == k.len() {
        out.push(v.len() as u32);
    } else {
        let x = k[j + 1];
        for d in &mut out[x + 1..] {
            if *d as usize >= x {
                *d += 1;
            }
        }
        out.insert(x + 1, x as u32 + 1);
    }
    Ok(Seq::new(out))
}

fn require_j1(v: &[u32]) -> Result<()> {
    if v.len() == max(v) as usize || mpos_of(v)? != 0 {
        domain!("{} is not in J1", Seq::from(v));
    }
    Ok(())
}

/// Moves `mpair` by one within `J1`, keeping `rep`, `max` and `mpos = 0`.
pub fn mpair_shift(s: &Seq, up: bool) -> Result<Seq> {
    let v = require_t(s)?;
    require_j1(v)?;
    let c = mpair_of(v)?;
    let k = maximal_indices(v);
    let mut out = v.to_vec();
    if up {
        let i = c;
        if i + 1 >= k.len() {
            domain!("mpair({s}) = {i} leaves no room below max - 1");
        }
        if in_f(v)? {
            let (xi, xn) = (k[i] as u32, k[i + 1] as u32);
            out.remove(k[i + 1]);
            for d in &mut out {
                if xi <= *d && *d < xn {
                    *d += 1;
                }
            }
            let at = first_index_of(&out, xi + 1)?;
            out.insert(at, xi);
        } else {
            let at = k[i + 1];
            let Some(&y) = v.get(at + 1) else {
                return Err(Error::Contract(format!("{s} outside F has no entry after maximal {}", i + 1)));
            };
            out.remove(k[i] + 1);
            out[at] = at as u32;
            out.insert(at - 1, y);
        }
    } else {
        if c == 0 {
            domain!("mpair({s}) = 0 cannot move down");
        }
        let i = c - 1;
        if k[i] + 1 == k[i + 1] {
            let a = k[i];
            let b = if i + 2 < k.len() { k[i + 2] - 1 } else { v.len() - 1 };
            out.remove(a);
            for d in &mut out {
                if a < *d as usize && *d as usize <= b {
                    *d -= 1;
                }
            }
            out.insert(b, b as u32);
        } else {
            let at = k[i + 1];
            let y = out.remove(at - 1);
            out[at] = y;
            out.insert(k[i] + 1, k[i] as u32);
        }
    }
    Ok(Seq::new(out))
}

/// Step M0: drops the `j`-th maximal and repeats the one before it.
fn step_m0(v: &mut Vec<u32>, j: usize) {
    let k = maximal_indices(v);
    v.remove(k[j]);
    v.insert(k[j - 1] + 1, k[j - 1] as u32);
}

/// Step M1 or M2, lowering `mpair` from `c` to `c - 1`.
fn step_m12(v: &mut Vec<u32>, c: usize) -> Result<()> {
    let k = maximal_indices(v);
    let xc = k[c] as u32;
    if k[c - 1] + 1 == k[c] {
        v.remove(k[c]);
        if c + 1 < k.len() {
            let x = k[c + 1] as u32;
            for d in v.iter_mut() {
                if xc <= *d && *d < x {
                    *d -= 1;
                }
            }
            let at = first_index_of(v, x)?;
            v.insert(at, x - 1);
        } else {
            for d in v.iter_mut() {
                if *d >= xc {
                    *d -= 1;
                }
            }
            v.push(v.len() as u32);
        }
    } else {
        let kc = k[c];
        v.swap(kc - 1, kc + 1);
        let at = first_index_of(v, xc)?;
        v.remove(at);
        let prev = k[c - 1] as u32;
        let at = first_index_of(v, prev)?;
        v.insert(at + 1, prev);
    }
    Ok(())
}

fn require_fc_pair(v: &[u32], i: u32) -> Result<usize> {
    if in_f(v)? {
        domain!("{} is in F", Seq::from(v));
    }
    let j = mpair_of(v)?;
    if i as usize >= j {
        domain!("target {i} is not below mpair({}) = {j}", Seq::from(v));
    }
    Ok(j)
}

/// Every row from `s` down to the sequence with `mpair = i`.
pub fn vartheta_trace(s: &Seq, i: u32) -> Result<Vec<Seq>> {
    let v = require_t(s)?;
    let j = require_fc_pair(v, i)?;
    let mut rows = vec![s.clone()];
    let mut cur = v.to_vec();
    step_m0(&mut cur, j);
    rows.push(Seq::from(cur.as_slice()));
    for c in (i as usize + 1..j).rev() {
        step_m12(&mut cur, c)?;
        rows.push(Seq::from(cur.as_slice()));
    }
    Ok(rows)
}

/// Sends `(s, i)` with `s` outside `F` and `i < mpair(s)` into `J2` with
/// `mpair = i`, keeping `rep` and lowering `max` by one.
pub fn vartheta(s: &Seq, i: u32) -> Result<Seq> {
    Ok(vartheta_trace(s, i)?.pop().expect("at least two rows"))
}

pub fn vartheta_inv(t: &Seq) -> Result<MapResult> {
    let v = require_t(t)?;
    if v.len() == max(v) as usize || mpos_of(v)? == 0 {
        domain!("{t} is not in J2");
    }
    let side = mpair_of(v)? as u32;
    let mut cur = v.to_vec();
    for _ in 0..=v.len() {
        let m = mpair_of(&cur)?;
        let k = maximal_indices(&cur);
        if in_f(&cur)? {
            // Undo M1.
            let a = k[m];
            let at = k[m + 1];
            let upper = if at + 1 == cur.len() { u32::MAX } else { at as u32 };
            cur.remove(at);
            for d in &mut cur[a + 1..] {
                if a as u32 <= *d && *d < upper {
                    *d += 1;
                }
            }
            cur.insert(a + 1, a as u32 + 1);
        } else if mpos_of(&cur)? == m + 1 {
            // Undo M0.
            let a = k[m];
            let l = (a + 2..cur.len())
                .find(|&l| cur[l] as usize + 1 == l)
                .ok_or_else(|| Error::Contract(format!("no critical position in {}", Seq::from(cur.as_slice()))))?;
            cur.remove(a + 1);
            cur.insert(l - 1, l as u32 - 1);
            return Ok(MapResult::with_side(Seq::new(cur), side));
        } else {
            // Undo M2.
            let kc = k[m + 1];
            cur.remove(k[m] + 1);
            cur.insert(kc - 1, kc as u32);
            cur.swap(kc - 1, kc + 1);
        }
    }
    Err(Error::Contract(format!("inverting vartheta on {t} did not terminate")))
}
