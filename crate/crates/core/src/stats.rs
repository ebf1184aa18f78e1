//! Scalar, marker and set-valued statistics.
//!
//! Set-valued statistics report 1-based positions. Marker statistics index
//! maximals and zeros from 0, left to right.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::class::{is_ascent, is_inversion, is_t21, ClassId};
use crate::error::{domain, Error, Result};
use crate::seq::{Perm, Seq};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ScalarStats {
    pub asc: u32,
    pub rep: u32,
    pub zero: u32,
    pub max: u32,
    pub rmin: u32,
    pub nasc: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub struct SetStats {
    pub asc: Vec<usize>,
    pub dist: Vec<usize>,
    pub zero: Vec<usize>,
    pub max: Vec<usize>,
    pub rmin: Vec<usize>,
    pub nasc: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermStats {
    #[serde(rename = "DES")]
    pub des_set: Vec<usize>,
    #[serde(rename = "IDES")]
    pub ides_set: Vec<usize>,
    #[serde(rename = "LMAX")]
    pub lmax_set: Vec<usize>,
    #[serde(rename = "LMIN")]
    pub lmin_set: Vec<usize>,
    #[serde(rename = "RMAX")]
    pub rmax_set: Vec<usize>,
    pub des: u32,
    pub ides: u32,
    pub iasc: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MarkerKind {
    Ealm,
    Mpair,
    Zpair,
    Mpos,
    Zpos,
}

impl FromStr for MarkerKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ealm" => Ok(MarkerKind::Ealm),
            "mpair" => Ok(MarkerKind::Mpair),
            "zpair" => Ok(MarkerKind::Zpair),
            "mpos" => Ok(MarkerKind::Mpos),
            "zpos" => Ok(MarkerKind::Zpos),
            other => Err(Error::Usage(format!("unknown marker {other:?}"))),
        }
    }
}

// ---- raw statistics on entry slices ------------------------------------

pub fn asc(s: &[u32]) -> u32 {
    s.windows(2).filter(|w| w[0] < w[1]).count() as u32
}

pub fn nasc(s: &[u32]) -> u32 {
    s.windows(2).filter(|w| w[0] >= w[1]).count() as u32
}

/// `n` minus the number of distinct values.
pub fn rep(s: &[u32]) -> u32 {
    let mut seen = vec![false; s.len() + 1];
    let mut distinct = 0;
    for &v in s {
        let v = v as usize;
        if v >= seen.len() {
            seen.resize(v + 1, false);
        }
        if !seen[v] {
            seen[v] = true;
            distinct += 1;
        }
    }
    (s.len() - distinct) as u32
}

pub fn zero(s: &[u32]) -> u32 {
    s.iter().filter(|&&v| v == 0).count() as u32
}

/// Number of maximal entries, positions `i` with `s_i = i - 1`.
pub fn max(s: &[u32]) -> u32 {
    s.iter().enumerate().filter(|&(k, &v)| v as usize == k).count() as u32
}

pub fn rmin(s: &[u32]) -> u32 {
    let mut count = 0;
    let mut suffix_min = u32::MAX;
    for &v in s.iter().rev() {
        if v < suffix_min {
            count += 1;
            suffix_min = v;
        }
    }
    count
}

/// 0-based indices of the maximal entries.
pub fn maximal_indices(s: &[u32]) -> Vec<usize> {
    (0..s.len()).filter(|&k| s[k] as usize == k).collect()
}

/// 0-based indices of the zeros.
pub fn zero_indices(s: &[u32]) -> Vec<usize> {
    (0..s.len()).filter(|&k| s[k] == 0).collect()
}

/// Entry right after the last maximal; 0 when every entry is maximal.
/// Assumes an ascent sequence, whose maximals form the initial run.
pub fn ealm(s: &[u32]) -> u32 {
    let m = max(s) as usize;
    s.get(m).copied().unwrap_or(0)
}

/// Largest index `i` such that the `i`-th maximal is immediately repeated.
/// `Some(0)` for the increasing sequence, `None` when no pair exists.
pub fn mpair(s: &[u32]) -> Option<u32> {
    if s.iter().enumerate().all(|(k, &v)| v as usize == k) {
        return Some(0);
    }
    maximal_indices(s)
        .iter()
        .enumerate()
        .rev()
        .find(|&(_, &k)| k + 1 < s.len() && s[k + 1] == s[k])
        .map(|(i, _)| i as u32)
}

/// Largest index `i` such that the `i`-th zero is immediately followed by 1.
/// `Some(0)` for the all-zero sequence, `None` when no pair exists.
pub fn zpair(s: &[u32]) -> Option<u32> {
    if s.iter().all(|&v| v == 0) {
        return Some(0);
    }
    zero_indices(s)
        .iter()
        .enumerate()
        .rev()
        .find(|&(_, &k)| k + 1 < s.len() && s[k + 1] == 1)
        .map(|(i, _)| i as u32)
}

/// One plus the index of the last marked position before the leftmost
/// critical position at or beyond `marks[j] + 2`, or 0 without one.
fn critical_rank(s: &[u32], marks: &[usize], j: usize, critical: impl Fn(usize, u32) -> bool) -> u32 {
    let Some(&kj) = marks.get(j) else {
        return 0;
    };
    let Some(l) = (kj + 2..s.len()).find(|&l| critical(l, s[l])) else {
        return 0;
    };
    marks.iter().filter(|&&k| k < l).count() as u32
}

/// Critical positions are 1-based `l` with `s_l = l - 2`.
pub fn mpos(s: &[u32]) -> Option<u32> {
    let j = mpair(s)? as usize;
    let marks = maximal_indices(s);
    Some(critical_rank(s, &marks, j, |l, v| v as usize + 1 == l))
}

/// Critical positions are those holding the value 1.
pub fn zpos(s: &[u32]) -> Option<u32> {
    let j = zpair(s)? as usize;
    let marks = zero_indices(s);
    Some(critical_rank(s, &marks, j, |_, v| v == 1))
}

pub fn asc_set(s: &[u32]) -> Vec<usize> {
    (1..s.len()).filter(|&i| s[i - 1] < s[i]).collect()
}

pub fn nasc_set(s: &[u32]) -> Vec<usize> {
    (1..s.len()).filter(|&i| s[i - 1] >= s[i]).collect()
}

/// Positions `i >= 2` with `s_i != 0` holding the last occurrence of `s_i`.
pub fn dist_set(s: &[u32]) -> Vec<usize> {
    (1..s.len())
        .filter(|&k| s[k] != 0 && !s[k + 1..].contains(&s[k]))
        .map(|k| k + 1)
        .collect()
}

pub fn zero_set(s: &[u32]) -> Vec<usize> {
    zero_indices(s).into_iter().map(|k| k + 1).collect()
}

pub fn max_set(s: &[u32]) -> Vec<usize> {
    maximal_indices(s).into_iter().map(|k| k + 1).collect()
}

pub fn rmin_set(s: &[u32]) -> Vec<usize> {
    (0..s.len())
        .filter(|&k| s[k + 1..].iter().all(|&v| s[k] < v))
        .map(|k| k + 1)
        .collect()
}

pub fn des_set(p: &[u32]) -> Vec<usize> {
    (1..p.len()).filter(|&i| p[i - 1] > p[i]).collect()
}

/// Positions `i >= 2` such that `p_i + 1` appears to the left of `p_i`.
pub fn ides_set(p: &[u32]) -> Vec<usize> {
    (1..p.len())
        .filter(|&k| p[..k].contains(&(p[k] + 1)))
        .map(|k| k + 1)
        .collect()
}

pub fn lmax_set(p: &[u32]) -> Vec<usize> {
    (0..p.len())
        .filter(|&k| p[..k].iter().all(|&v| v < p[k]))
        .map(|k| k + 1)
        .collect()
}

pub fn lmin_set(p: &[u32]) -> Vec<usize> {
    (0..p.len())
        .filter(|&k| p[..k].iter().all(|&v| v > p[k]))
        .map(|k| k + 1)
        .collect()
}

pub fn rmax_set(p: &[u32]) -> Vec<usize> {
    (0..p.len())
        .filter(|&k| p[k + 1..].iter().all(|&v| v < p[k]))
        .map(|k| k + 1)
        .collect()
}

// ---- checked bundles ----------------------------------------------------

fn require_inversion(s: &Seq) -> Result<()> {
    if !is_inversion(s.values()) {
        domain!("{s} is not an inversion sequence");
    }
    Ok(())
}

pub fn scalar_stats(s: &Seq) -> Result<ScalarStats> {
    require_inversion(s)?;
    let v = s.values();
    Ok(ScalarStats {
        asc: asc(v),
        rep: rep(v),
        zero: zero(v),
        max: max(v),
        rmin: rmin(v),
        nasc: nasc(v),
    })
}

pub fn set_stats(s: &Seq) -> Result<SetStats> {
    require_inversion(s)?;
    let v = s.values();
    Ok(SetStats {
        asc: asc_set(v),
        dist: dist_set(v),
        zero: zero_set(v),
        max: max_set(v),
        rmin: rmin_set(v),
        nasc: nasc_set(v),
    })
}

pub fn perm_stats(p: &Perm) -> PermStats {
    let v = p.values();
    let des_set = des_set(v);
    let ides_set = ides_set(v);
    let des = des_set.len() as u32;
    let ides = ides_set.len() as u32;
    PermStats {
        des,
        ides,
        iasc: (v.len() as u32).saturating_sub(1) - ides,
        des_set,
        ides_set,
        lmax_set: lmax_set(v),
        lmin_set: lmin_set(v),
        rmax_set: rmax_set(v),
    }
}

/// Evaluates a marker, checking the class precondition of its definition.
pub fn marker(s: &Seq, kind: MarkerKind) -> Result<u32> {
    let v = s.values();
    if v.is_empty() {
        domain!("markers are undefined on the empty sequence");
    }
    match kind {
        MarkerKind::Ealm | MarkerKind::Zpair | MarkerKind::Zpos if !is_ascent(v) => {
            domain!("{s} is not an ascent sequence")
        }
        MarkerKind::Mpair | MarkerKind::Mpos if !is_t21(v) => {
            domain!("{s} contains a (2-1) pair, so it is not in T21")
        }
        _ => {}
    }
    match kind {
        MarkerKind::Ealm => Ok(ealm(v)),
        MarkerKind::Mpair => mpair(v).ok_or_else(|| Error::Domain(format!("mpair is undefined on {s}"))),
        MarkerKind::Zpair => zpair(v).ok_or_else(|| Error::Domain(format!("zpair is undefined on {s}"))),
        MarkerKind::Mpos => mpos(v).ok_or_else(|| Error::Domain(format!("mpos is undefined on {s}"))),
        MarkerKind::Zpos => zpos(v).ok_or_else(|| Error::Domain(format!("zpos is undefined on {s}"))),
    }
}

// ---- named statistics for distribution tables ---------------------------

/// A statistic usable as a coordinate of a distribution table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StatName {
    Asc,
    Rep,
    Zero,
    Max,
    Rmin,
    Nasc,
    Ealm,
    Mpair,
    Zpair,
    Mpos,
    Zpos,
    Des,
    Ides,
    Iasc,
    Lmax,
    Lmin,
    Rmax,
}

impl StatName {
    pub const ALL: [StatName; 17] = [
        StatName::Asc,
        StatName::Rep,
        StatName::Zero,
        StatName::Max,
        StatName::Rmin,
        StatName::Nasc,
        StatName::Ealm,
        StatName::Mpair,
        StatName::Zpair,
        StatName::Mpos,
        StatName::Zpos,
        StatName::Des,
        StatName::Ides,
        StatName::Iasc,
        StatName::Lmax,
        StatName::Lmin,
        StatName::Rmax,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StatName::Asc => "asc",
            StatName::Rep => "rep",
            StatName::Zero => "zero",
            StatName::Max => "max",
            StatName::Rmin => "rmin",
            StatName::Nasc => "nasc",
            StatName::Ealm => "ealm",
            StatName::Mpair => "mpair",
            StatName::Zpair => "zpair",
            StatName::Mpos => "mpos",
            StatName::Zpos => "zpos",
            StatName::Des => "des",
            StatName::Ides => "ides",
            StatName::Iasc => "iasc",
            StatName::Lmax => "lmax",
            StatName::Lmin => "lmin",
            StatName::Rmax => "rmax",
        }
    }

    fn is_perm_stat(self) -> bool {
        matches!(
            self,
            StatName::Des | StatName::Ides | StatName::Iasc | StatName::Lmax | StatName::Lmin | StatName::Rmax
        )
    }

    /// Whether the statistic is defined on every member of `class`.
    pub fn applies_to(self, class: ClassId) -> bool {
        if class.is_perm_class() {
            return self.is_perm_stat();
        }
        match self {
            StatName::Ealm | StatName::Zpair | StatName::Zpos => class == ClassId::Asc,
            StatName::Mpair | StatName::Mpos => class == ClassId::T21,
            s => !s.is_perm_stat(),
        }
    }

    /// Evaluates on raw entries already known to lie in a class the
    /// statistic applies to.
    pub fn eval(self, s: &[u32]) -> Result<u32> {
        let undefined = || Error::Domain(format!("{} is undefined on {}", self, Seq::from(s)));
        Ok(match self {
            StatName::Asc => asc(s),
            StatName::Rep => rep(s),
            StatName::Zero => zero(s),
            StatName::Max => max(s),
            StatName::Rmin => rmin(s),
            StatName::Nasc => nasc(s),
            StatName::Ealm => ealm(s),
            StatName::Mpair => mpair(s).ok_or_else(undefined)?,
            StatName::Zpair => zpair(s).ok_or_else(undefined)?,
            StatName::Mpos => mpos(s).ok_or_else(undefined)?,
            StatName::Zpos => zpos(s).ok_or_else(undefined)?,
            StatName::Des => des_set(s).len() as u32,
            StatName::Ides => ides_set(s).len() as u32,
            StatName::Iasc => (s.len() as u32).saturating_sub(1) - ides_set(s).len() as u32,
            StatName::Lmax => lmax_set(s).len() as u32,
            StatName::Lmin => lmin_set(s).len() as u32,
            StatName::Rmax => rmax_set(s).len() as u32,
        })
    }
}

impl fmt::Display for StatName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        StatName::ALL
            .into_iter()
            .find(|n| n.name() == lower)
            .ok_or_else(|| Error::Usage(format!("unknown statistic {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> Seq {
        s.parse().unwrap()
    }

    #[test]
    fn scalar_example() {
        let st = scalar_stats(&seq("0,1,2,0,4,2,2,7")).unwrap();
        assert_eq!((st.asc, st.rep, st.zero, st.max, st.rmin), (4, 3, 2, 5, 3));
        let st = scalar_stats(&seq("0,0,0")).unwrap();
        assert_eq!(st, ScalarStats { asc: 0, rep: 2, zero: 3, max: 1, rmin: 1, nasc: 2 });
        assert!(matches!(scalar_stats(&seq("0,2")), Err(Error::Domain(_))));
    }

    #[test]
    fn increasing_sequence() {
        for n in 1..8 {
            let st = scalar_stats(&Seq::increasing(n)).unwrap();
            let n = n as u32;
            assert_eq!((st.asc, st.rep, st.zero, st.max, st.rmin), (n - 1, 0, 1, n, n));
        }
    }

    #[test]
    fn set_examples() {
        let st = set_stats(&seq("0,0,0")).unwrap();
        assert!(st.asc.is_empty() && st.dist.is_empty());
        assert_eq!((st.zero, st.max, st.rmin), (vec![1, 2, 3], vec![1], vec![3]));
        let st = set_stats(&seq("0,1,2")).unwrap();
        assert_eq!((st.asc, st.max, st.zero, st.dist), (vec![1, 2], vec![1, 2, 3], vec![1], vec![2, 3]));
        let st = set_stats(&seq("0,1,0,2,3,2,5,1,7")).unwrap();
        assert_eq!(st.dist, vec![5, 6, 7, 8, 9]);
    }

    #[test]
    fn markers() {
        let m = |s: &str, k| marker(&seq(s), k).unwrap();
        assert_eq!(m("0,1,2,3,2,4", MarkerKind::Ealm), 2);
        assert_eq!(m("0,1,2", MarkerKind::Ealm), 0);
        assert_eq!(m("0,0,2,2,0,5,5,3", MarkerKind::Mpair), 2);
        assert_eq!(m("0,0,1,1,2,0,1,0", MarkerKind::Zpair), 2);
        assert_eq!(m("0,0,2,2,0,2,5", MarkerKind::Mpos), 2);
        assert_eq!(m("0,0,2,2,0,2,4", MarkerKind::Mpos), 0);
        assert_eq!(m("0,1,2,0,1,3,2,1,0", MarkerKind::Zpos), 2);
        assert_eq!(m("0,1,2,0,1,3,2,0", MarkerKind::Zpos), 0);
        assert_eq!(m("0,1,2,3", MarkerKind::Mpair), 0);
        assert_eq!(m("0,0,0", MarkerKind::Zpair), 0);
        assert!(matches!(marker(&seq("0,0,2"), MarkerKind::Ealm), Err(Error::Domain(_))));
        assert!(matches!(marker(&seq("0,1,0"), MarkerKind::Mpair), Err(Error::Domain(_))));
    }

    #[test]
    fn perm_examples() {
        let st = perm_stats(&"61832547".parse().unwrap());
        assert_eq!(st.des_set, vec![1, 3, 4, 6]);
        let id = perm_stats(&Perm::identity(5));
        assert!(id.des_set.is_empty() && id.ides_set.is_empty());
        assert_eq!((id.lmax_set, id.lmin_set, id.rmax_set), (vec![1, 2, 3, 4, 5], vec![1], vec![5]));
        assert_eq!(id.iasc, 4);
        let dec = perm_stats(&Perm::decreasing(4));
        assert_eq!(dec.des_set, vec![1, 2, 3]);
        assert_eq!((dec.lmin_set, dec.rmax_set, dec.lmax_set), (vec![1, 2, 3, 4], vec![1, 2, 3, 4], vec![1]));
    }

    #[test]
    fn stat_names_round_trip() {
        for s in StatName::ALL {
            assert_eq!(s.name().parse::<StatName>().unwrap(), s);
        }
        assert!(StatName::Mpair.applies_to(ClassId::T21));
        assert!(!StatName::Mpair.applies_to(ClassId::Asc));
        assert!(!StatName::Des.applies_to(ClassId::Inv));
        assert!(StatName::Des.applies_to(ClassId::PermAvoidA));
    }
}
