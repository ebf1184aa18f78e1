//! Permutation codes and the maps between the Fishburn-counted classes.
//!
//! `b` is the slice code of Baril and Vajnovszki. `beta` and `gamma` carry
//! the code images of the two pattern-avoiding classes onto ascent
//! sequences; `psi`, `phi` and `upsilon` are their compositions.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::class::{contains_bivincular_a, contains_bivincular_b, is_ascent, is_b, is_c, is_inversion};
use crate::error::{domain, Error, Result};
use crate::seq::{Obj, Perm, PermTransform, Seq};
use crate::stats::nasc_set;

/// `s_i = #{j < i : p_j > p_i}`.
pub fn lehmer_code(p: &Perm) -> Seq {
    let v = p.values();
    let code = (0..v.len())
        .map(|i| v[..i].iter().filter(|&&x| x > v[i]).count() as u32)
        .collect();
    Seq::new(code)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LabeledInterval {
    pub lo: u32,
    pub hi: u32,
    pub label: u32,
}

impl LabeledInterval {
    fn contains(&self, x: u32) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// Intervals in decreasing value order with strictly increasing labels.
/// The last interval always contains 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Slice(pub Vec<LabeledInterval>);

impl Slice {
    /// The slice before any letter is placed.
    pub fn initial(n: usize) -> Slice {
        Slice(vec![LabeledInterval {
            lo: 0,
            hi: n as u32,
            label: 0,
        }])
    }

    fn position_of(&self, x: u32) -> Option<usize> {
        self.0.iter().position(|iv| iv.contains(x))
    }

    fn position_of_label(&self, label: u32) -> Option<usize> {
        self.0.iter().position(|iv| iv.label == label)
    }

    /// The slice after placing `x`, which must lie in interval `v` and not
    /// be 0.
    fn place(&self, v: usize, x: u32) -> Slice {
        let ivs = &self.0;
        let k = ivs.len();
        let cur = ivs[v];
        let mut out: Vec<LabeledInterval> = ivs[..v].to_vec();
        let has_h = x < cur.hi;
        let has_j = cur.lo < x;
        if has_h {
            out.push(LabeledInterval { lo: x + 1, hi: cur.hi, label: cur.label });
        }
        // Labels l_{v+1}, ..., l_k, l_k + 1.
        let next_label = |idx: usize| if idx < k { ivs[idx].label } else { ivs[k - 1].label + 1 };
        if has_j {
            out.push(LabeledInterval { lo: cur.lo, hi: x - 1, label: next_label(v + 1) });
            for (off, iv) in ivs[v + 1..].iter().enumerate() {
                out.push(LabeledInterval { label: next_label(v + 2 + off), ..*iv });
            }
        } else {
            out.extend_from_slice(&ivs[v + 1..]);
            let last = out.last_mut().expect("the interval holding 0 survives");
            last.label += 1;
        }
        Slice(out)
    }
}

/// Slices `U_0, ..., U_{n-1}` of `p`.
pub fn bv_slices(p: &Perm) -> Vec<Slice> {
    let v = p.values();
    let mut slices = vec![Slice::initial(v.len())];
    for &x in &v[..v.len().saturating_sub(1)] {
        let cur = slices.last().expect("non-empty");
        let pos = cur.position_of(x).expect("every unplaced letter lies in the slice");
        slices.push(cur.place(pos, x));
    }
    slices
}

pub fn bv_code(p: &Perm) -> Seq {
    let v = p.values();
    let mut slice = Slice::initial(v.len());
    let mut code = Vec::with_capacity(v.len());
    for &x in v {
        let pos = slice
            .position_of(x)
            .expect("every unplaced letter lies in the slice");
        code.push(slice.0[pos].label);
        slice = slice.place(pos, x);
    }
    Seq::new(code)
}

/// Inverts the slice code by depth-first search over the letters of the
/// interval carrying each label.
pub fn bv_decode(s: &Seq) -> Result<Perm> {
    let code = s.values();
    if code.is_empty() || !is_inversion(code) {
        domain!("{s} is not a non-empty inversion sequence");
    }
    fn search(code: &[u32], slice: &Slice, out: &mut Vec<u32>) -> bool {
        let Some(&label) = code.get(out.len()) else {
            return true;
        };
        let Some(v) = slice.position_of_label(label) else {
            return false;
        };
        let iv = slice.0[v];
        for x in iv.lo.max(1)..=iv.hi {
            out.push(x);
            if search(code, &slice.place(v, x), out) {
                return true;
            }
            out.pop();
        }
        false
    }
    let mut out = Vec::with_capacity(code.len());
    if !search(code, &Slice::initial(code.len()), &mut out) {
        return Err(Error::Contract(format!("no permutation has code {s}")));
    }
    Ok(Perm::new_unchecked(out))
}

/// Subtraction algorithm carrying `B_n` onto `A_n`.
pub fn beta(b: &Seq) -> Result<Seq> {
    if !is_b(b.values()) {
        domain!("{b} is not in B");
    }
    let mut s = b.values().to_vec();
    for &i in nasc_set(b.values()).iter().rev() {
        let bi = s[i - 1];
        if (bi as usize) + 1 < i {
            for x in &mut s[i..] {
                if *x as usize > i - 1 {
                    *x -= 1;
                }
            }
        }
    }
    Ok(Seq::new(s))
}

/// Addition algorithm inverting [`beta`].
pub fn beta_inv(s: &Seq) -> Result<Seq> {
    if !is_ascent(s.values()) {
        domain!("{s} is not an ascent sequence");
    }
    let mut b = s.values().to_vec();
    for &i in &nasc_set(s.values()) {
        if (b[i - 1] as usize) + 1 < i {
            for x in &mut b[i..] {
                if *x as usize >= i - 1 {
                    *x += 1;
                }
            }
        }
    }
    Ok(Seq::new(b))
}

/// Subtraction algorithm carrying `C_n` onto `A_n`.
pub fn gamma(c: &Seq) -> Result<Seq> {
    if !is_c(c.values()) {
        domain!("{c} is not in C");
    }
    let mut s = c.values().to_vec();
    for &i in nasc_set(c.values()).iter().rev() {
        for x in &mut s[i..] {
            if *x as usize > i {
                *x -= 1;
            }
        }
    }
    Ok(Seq::new(s))
}

pub fn gamma_inv(s: &Seq) -> Result<Seq> {
    if !is_ascent(s.values()) {
        domain!("{s} is not an ascent sequence");
    }
    let mut c = s.values().to_vec();
    for &i in &nasc_set(s.values()) {
        for x in &mut c[i..] {
            if *x as usize >= i {
                *x += 1;
            }
        }
    }
    Ok(Seq::new(c))
}

/// `beta` after the slice code, on permutations avoiding pattern A.
pub fn psi(p: &Perm) -> Result<Seq> {
    if contains_bivincular_a(p) {
        domain!("{p} contains pattern A");
    }
    let code = bv_code(p);
    if !is_b(code.values()) {
        return Err(Error::Contract(format!("code {code} of {p} is not in B")));
    }
    beta(&code)
}

pub fn psi_inv(s: &Seq) -> Result<Perm> {
    bv_decode(&beta_inv(s)?)
}

/// `gamma` after the slice code, on permutations avoiding pattern B.
pub fn phi(p: &Perm) -> Result<Seq> {
    if contains_bivincular_b(p) {
        domain!("{p} contains pattern B");
    }
    let code = bv_code(p);
    if !is_c(code.values()) {
        return Err(Error::Contract(format!("code {code} of {p} is not in C")));
    }
    gamma(&code)
}

pub fn phi_inv(s: &Seq) -> Result<Perm> {
    bv_decode(&gamma_inv(s)?)
}

/// Self-map of `A_n` exchanging `(asc, rep, zero, max)` with
/// `(rep, asc, rmin, zero)`.
pub fn upsilon(s: &Seq) -> Result<Seq> {
    let p = psi_inv(s)?;
    phi(&p.transform(PermTransform::InverseThenComplement))
}

/// The bijections exposed by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedBijection {
    ThetaLehmer,
    Bv,
    BvInv,
    Beta,
    BetaInv,
    Gamma,
    GammaInv,
    Psi,
    PsiInv,
    Phi,
    PhiInv,
    Upsilon,
}

impl NamedBijection {
    pub const ALL: [NamedBijection; 12] = [
        NamedBijection::ThetaLehmer,
        NamedBijection::Bv,
        NamedBijection::BvInv,
        NamedBijection::Beta,
        NamedBijection::BetaInv,
        NamedBijection::Gamma,
        NamedBijection::GammaInv,
        NamedBijection::Psi,
        NamedBijection::PsiInv,
        NamedBijection::Phi,
        NamedBijection::PhiInv,
        NamedBijection::Upsilon,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedBijection::ThetaLehmer => "theta_lehmer",
            NamedBijection::Bv => "bv",
            NamedBijection::BvInv => "bv_inv",
            NamedBijection::Beta => "beta",
            NamedBijection::BetaInv => "beta_inv",
            NamedBijection::Gamma => "gamma",
            NamedBijection::GammaInv => "gamma_inv",
            NamedBijection::Psi => "psi",
            NamedBijection::PsiInv => "psi_inv",
            NamedBijection::Phi => "phi",
            NamedBijection::PhiInv => "phi_inv",
            NamedBijection::Upsilon => "upsilon",
        }
    }

    /// Whether the input is a permutation (otherwise a sequence).
    pub fn takes_perm(self) -> bool {
        matches!(self, NamedBijection::ThetaLehmer | NamedBijection::Bv | NamedBijection::Psi | NamedBijection::Phi)
    }

    /// Parses `input` in the map's domain format and applies the map.
    pub fn apply_str(self, input: &str) -> Result<Obj> {
        if self.takes_perm() {
            let p: Perm = input.parse()?;
            Ok(Obj::Seq(match self {
                NamedBijection::ThetaLehmer => lehmer_code(&p),
                NamedBijection::Bv => bv_code(&p),
                NamedBijection::Psi => psi(&p)?,
                _ => phi(&p)?,
            }))
        } else {
            let s: Seq = input.parse()?;
            Ok(match self {
                NamedBijection::BvInv => Obj::Perm(bv_decode(&s)?),
                NamedBijection::Beta => Obj::Seq(beta(&s)?),
                NamedBijection::BetaInv => Obj::Seq(beta_inv(&s)?),
                NamedBijection::Gamma => Obj::Seq(gamma(&s)?),
                NamedBijection::GammaInv => Obj::Seq(gamma_inv(&s)?),
                NamedBijection::PsiInv => Obj::Perm(psi_inv(&s)?),
                NamedBijection::PhiInv => Obj::Perm(phi_inv(&s)?),
                _ => Obj::Seq(upsilon(&s)?),
            })
        }
    }
}

impl fmt::Display for NamedBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedBijection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NamedBijection::ALL
            .into_iter()
            .find(|m| m.name() == s.trim())
            .ok_or_else(|| Error::Usage(format!("unknown bijection {s:?}")))
    }
}
