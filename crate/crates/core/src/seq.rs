//! Sequence and permutation value types with their text formats.
//!
//! Sequences print as comma-separated decimals (`0,1,0,2`). Permutations of
//! length at most nine print as a one-line word (`61832547`), longer ones as
//! comma-separated decimals. Every reported position is 1-based.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite sequence of non-negative integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Seq(Vec<u32>);

impl Seq {
    pub fn new(values: Vec<u32>) -> Self {
        Seq(values)
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn into_values(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entry at 1-based position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    /// `(0, 1, ..., n-1)`.
    pub fn increasing(n: usize) -> Self {
        Seq((0..n as u32).collect())
    }

    pub fn zeros(n: usize) -> Self {
        Seq(vec![0; n])
    }
}

impl From<Vec<u32>> for Seq {
    fn from(v: Vec<u32>) -> Self {
        Seq(v)
    }
}

impl From<&[u32]> for Seq {
    fn from(v: &[u32]) -> Self {
        Seq(v.to_vec())
    }
}

impl AsRef<[u32]> for Seq {
    fn as_ref(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.0)
    }
}

fn write_joined(f: &mut fmt::Formatter<'_>, values: &[u32]) -> fmt::Result {
    for (k, v) in values.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

fn parse_decimal_list(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse(format!("invalid sequence entry {tok:?}")));
            }
            tok.parse::<u32>()
                .map_err(|e| Error::Parse(format!("invalid sequence entry {tok:?}: {e}")))
        })
        .collect()
}

impl FromStr for Seq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_decimal_list(s).map(Seq)
    }
}

impl Serialize for Seq {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Seq {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<u32>);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PermTransform {
    Inverse,
    Complement,
    InverseThenComplement,
}

impl FromStr for PermTransform {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inverse" => Ok(PermTransform::Inverse),
            "complement" => Ok(PermTransform::Complement),
            "inverse_then_complement" => Ok(PermTransform::InverseThenComplement),
            other => Err(Error::Usage(format!("unknown permutation transform {other:?}"))),
        }
    }
}

impl Perm {
    /// Validates that `values` is exactly `{1..n}`.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::Parse(format!(
                    "{values:?} is not a permutation of 1..{n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Perm(values))
    }

    pub(crate) fn new_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Perm::new(values.clone()).is_ok());
        Perm(values)
    }

    pub fn identity(n: usize) -> Self {
        Perm((1..=n as u32).collect())
    }

    pub fn decreasing(n: usize) -> Self {
        Perm((1..=n as u32).rev().collect())
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (pos, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = pos as u32 + 1;
        }
        Perm(inv)
    }

    /// `pi^c_i = n + 1 - pi_i`.
    pub fn complement(&self) -> Perm {
        let n = self.0.len() as u32;
        Perm(self.0.iter().map(|&v| n + 1 - v).collect())
    }

    pub fn transform(&self, kind: PermTransform) -> Perm {
        match kind {
            PermTransform::Inverse => self.inverse(),
            PermTransform::Complement => self.complement(),
            PermTransform::InverseThenComplement => self.inverse().complement(),
        }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() <= 9 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write_joined(f, &self.0)
        }
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values = if s.contains(',') {
            parse_decimal_list(s)?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::Parse(format!("invalid permutation letter {c:?}")))
                })
                .collect::<Result<Vec<u32>>>()?
        };
        Perm::new(values)
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Either kind of combinatorial object handled by the class machinery.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Obj {
    Seq(Seq),
    Perm(Perm),
}

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obj::Seq(s) => s.fmt(f),
            Obj::Perm(p) => p.fmt(f),
        }
    }
}

impl Serialize for Obj {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seq_text_format() {
        let s: Seq = "0,1,0,2,3,2,5,1,7".parse().unwrap();
        assert_eq!(s.values(), &[0, 1, 0, 2, 3, 2, 5, 1, 7]);
        assert_eq!(s.to_string(), "0,1,0,2,3,2,5,1,7");
        assert_eq!(s.at(1), 0);
        assert_eq!(s.at(9), 7);
        assert!("".parse::<Seq>().unwrap().is_empty());
        assert!("0,-1".parse::<Seq>().is_err());
        assert!("0,,1".parse::<Seq>().is_err());
        assert!("0,+1".parse::<Seq>().is_err());
    }

    #[test]
    fn perm_text_format() {
        let p: Perm = "61832547".parse().unwrap();
        assert_eq!(p.values(), &[6, 1, 8, 3, 2, 5, 4, 7]);
        assert_eq!(p.to_string(), "61832547");
        let long = Perm::identity(10);
        assert_eq!(long.to_string(), "1,2,3,4,5,6,7,8,9,10");
        assert_eq!(long.to_string().parse::<Perm>().unwrap(), long);
        assert!("1224".parse::<Perm>().is_err());
        assert!("0123".parse::<Perm>().is_err());
        assert!("14".parse::<Perm>().is_err());
    }

    #[test]
    fn transforms() {
        let p: Perm = "123".parse().unwrap();
        assert_eq!(p.complement().to_string(), "321");
        let q: Perm = "231".parse().unwrap();
        assert_eq!(q.inverse().to_string(), "312");
        assert_eq!(q.transform(PermTransform::InverseThenComplement).to_string(), "132");
    }
}
