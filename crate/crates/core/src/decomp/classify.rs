//! Subset classifiers for the decompositions.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::class::{is_ascent, is_t21};
use crate::error::{domain, Error, Result};
use crate::seq::Seq;
use crate::stats::{max, maximal_indices, mpair, mpos, zero, zero_indices, zpair, zpos};

/// A partition of a domain of sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SubsetScheme {
    /// `S1 | S2 | S3 | S4` on ascent sequences longer than their `max`.
    AscS,
    /// `P | Pc` on ascent sequences.
    AscP,
    /// `J1 | J2` on (2-1)-avoiding sequences longer than their `max`.
    TJ,
    /// `F | Fc` on (2-1)-avoiding sequences.
    TF,
    /// `R1 | R2` on ascent sequences longer than their `zero`.
    AscR,
    /// `G | Gc` on ascent sequences.
    AscG,
}

impl SubsetScheme {
    pub const ALL: [SubsetScheme; 6] = [
        SubsetScheme::AscS,
        SubsetScheme::AscP,
        SubsetScheme::TJ,
        SubsetScheme::TF,
        SubsetScheme::AscR,
        SubsetScheme::AscG,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SubsetScheme::AscS => "ASC_S",
            SubsetScheme::AscP => "ASC_P",
            SubsetScheme::TJ => "T_J",
            SubsetScheme::TF => "T_F",
            SubsetScheme::AscR => "ASC_R",
            SubsetScheme::AscG => "ASC_G",
        }
    }

    pub fn labels(self) -> &'static [SubsetLabel] {
        use SubsetLabel::*;
        match self {
            SubsetScheme::AscS => &[S1, S2, S3, S4],
            SubsetScheme::AscP => &[P, Pc],
            SubsetScheme::TJ => &[J1, J2],
            SubsetScheme::TF => &[F, Fc],
            SubsetScheme::AscR => &[R1, R2],
            SubsetScheme::AscG => &[G, Gc],
        }
    }
}

impl fmt::Display for SubsetScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SubsetScheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SubsetScheme::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Usage(format!("unknown subset scheme {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SubsetLabel {
    S1,
    S2,
    S3,
    S4,
    P,
    Pc,
    J1,
    J2,
    F,
    Fc,
    R1,
    R2,
    G,
    Gc,
}

impl fmt::Display for SubsetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub fn classify(s: &Seq, scheme: SubsetScheme) -> Result<SubsetLabel> {
    let v = s.values();
    if v.is_empty() {
        domain!("cannot classify the empty sequence");
    }
    let in_a = is_ascent(v);
    let in_t = is_t21(v);
    match scheme {
        SubsetScheme::AscS | SubsetScheme::AscP | SubsetScheme::AscR | SubsetScheme::AscG if !in_a => {
            domain!("{s} is not an ascent sequence")
        }
        SubsetScheme::TJ | SubsetScheme::TF if !in_t => domain!("{s} is not (2-1)-avoiding"),
        SubsetScheme::AscS => s_label(v).ok_or_else(|| Error::Domain(format!("{s} has length max({s})"))),
        SubsetScheme::AscP => Ok(if in_p(v) { SubsetLabel::P } else { SubsetLabel::Pc }),
        SubsetScheme::TJ => {
            if v.len() == max(v) as usize {
                domain!("{s} has length max({s})");
            }
            let m = mpos(v).ok_or_else(|| Error::Domain(format!("mpos is undefined on {s}")))?;
            Ok(if m == 0 { SubsetLabel::J1 } else { SubsetLabel::J2 })
        }
        SubsetScheme::TF => Ok(if in_f(v)? { SubsetLabel::F } else { SubsetLabel::Fc }),
        SubsetScheme::AscR => {
            if v.len() == zero(v) as usize {
                domain!("{s} has length zero({s})");
            }
            let z = zpos(v).ok_or_else(|| Error::Domain(format!("zpos is undefined on {s}")))?;
            Ok(if z == 0 { SubsetLabel::R1 } else { SubsetLabel::R2 })
        }
        SubsetScheme::AscG => Ok(if in_g(v)? { SubsetLabel::G } else { SubsetLabel::Gc }),
    }
}

/// `S1..S4` of an ascent sequence, `None` when `|s| = max(s)`.
pub(crate) fn s_label(v: &[u32]) -> Option<SubsetLabel> {
    let p = max(v) as usize;
    if v.len() == p {
        return None;
    }
    Some(if v.len() == p + 1 {
        SubsetLabel::S1
    } else if v[p] >= v[p + 1] {
        SubsetLabel::S2
    } else if v[p + 1..].contains(&(p as u32)) {
        SubsetLabel::S4
    } else {
        SubsetLabel::S3
    })
}

/// The value `max - 1` occurs exactly once.
pub(crate) fn in_p(v: &[u32]) -> bool {
    let target = max(v) - 1;
    v.iter().filter(|&&x| x == target).count() == 1
}

fn undefined(what: &str, v: &[u32]) -> Error {
    Error::Domain(format!("{what} is undefined on {}", Seq::from(v)))
}

pub(crate) fn in_f(v: &[u32]) -> Result<bool> {
    let j = mpair(v).ok_or_else(|| undefined("mpair", v))? as usize;
    let k = maximal_indices(v);
    Ok(j + 1 < k.len() && {
        let next = k[j + 1];
        next + 1 == v.len() || v[next + 1] as usize == next + 1
    })
}

pub(crate) fn in_g(v: &[u32]) -> Result<bool> {
    let j = zpair(v).ok_or_else(|| undefined("zpair", v))? as usize;
    let z = zero_indices(v);
    Ok(j + 1 < z.len() && {
        let next = z[j + 1];
        next + 1 == v.len() || v[next + 1] == 0
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label(s: &str, scheme: SubsetScheme) -> SubsetLabel {
        classify(&s.parse().unwrap(), scheme).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(label("0,1,0", SubsetScheme::AscS), SubsetLabel::S1);
        assert_eq!(label("0,0,1", SubsetScheme::AscS), SubsetLabel::S4);
        assert_eq!(label("0,1,0,1", SubsetScheme::AscS), SubsetLabel::S3);
        assert_eq!(label("0,0,2,2,0,2,5", SubsetScheme::TJ), SubsetLabel::J2);
        assert_eq!(label("0,1,0", SubsetScheme::AscP), SubsetLabel::P);
        assert_eq!(label("0,1,2", SubsetScheme::TF), SubsetLabel::F);
        assert_eq!(label("0", SubsetScheme::TF), SubsetLabel::Fc);
    }

    #[test]
    fn domain_errors() {
        let s: Seq = "0,1,2".parse().unwrap();
        assert!(matches!(classify(&s, SubsetScheme::AscS), Err(Error::Domain(_))));
        assert!(matches!(classify(&"0,0,2".parse().unwrap(), SubsetScheme::AscP), Err(Error::Domain(_))));
        assert!(matches!(classify(&"0,0".parse().unwrap(), SubsetScheme::AscR), Err(Error::Domain(_))));
    }
}
