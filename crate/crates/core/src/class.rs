//! Class identifiers and membership predicates.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seq::{Obj, Perm};

/// Every enumerable class of sequences or permutations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ClassId {
    /// Inversion sequences, `0 <= s_i < i`.
    Inv,
    /// Ascent sequences.
    Asc,
    /// (2-1)-avoiding inversion sequences.
    T21,
    /// Inversion sequences with the two non-ascent properties (a) and (b).
    B,
    /// Inversion sequences with non-ascent property (c).
    C,
    PermAll,
    /// Permutations avoiding the pattern matched by [`contains_bivincular_a`].
    PermAvoidA,
    /// Permutations avoiding the pattern matched by [`contains_bivincular_b`].
    PermAvoidB,
}

impl ClassId {
    pub const ALL: [ClassId; 8] = [
        ClassId::Inv,
        ClassId::Asc,
        ClassId::T21,
        ClassId::B,
        ClassId::C,
        ClassId::PermAll,
        ClassId::PermAvoidA,
        ClassId::PermAvoidB,
    ];

    pub fn is_perm_class(self) -> bool {
        matches!(self, ClassId::PermAll | ClassId::PermAvoidA | ClassId::PermAvoidB)
    }

    pub fn name(self) -> &'static str {
        match self {
            ClassId::Inv => "INV",
            ClassId::Asc => "ASC",
            ClassId::T21 => "T21",
            ClassId::B => "B",
            ClassId::C => "C",
            ClassId::PermAll => "PERM_ALL",
            ClassId::PermAvoidA => "PERM_AVOID_A",
            ClassId::PermAvoidB => "PERM_AVOID_B",
        }
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let upper = s.trim().to_ascii_uppercase();
        ClassId::ALL
            .into_iter()
            .find(|c| c.name() == upper)
            .ok_or_else(|| Error::Usage(format!("unknown class {s:?}")))
    }
}

/// Membership test. Sequence classes take a [`Obj::Seq`], permutation
/// classes a [`Obj::Perm`]; mixing them is a usage error.
pub fn is_member(class: ClassId, obj: &Obj) -> Result<bool> {
    match (class.is_perm_class(), obj) {
        (false, Obj::Seq(s)) => {
            if s.is_empty() {
                return Err(Error::Usage("membership of an empty sequence".into()));
            }
            Ok(seq_is_member(class, s.values()))
        }
        (true, Obj::Perm(p)) => {
            if p.is_empty() {
                return Err(Error::Usage("membership of an empty permutation".into()));
            }
            Ok(perm_is_member(class, p))
        }
        _ => Err(Error::Usage(format!("object {obj} does not match class {class}"))),
    }
}

pub(crate) fn seq_is_member(class: ClassId, s: &[u32]) -> bool {
    if !is_inversion(s) {
        return false;
    }
    match class {
        ClassId::Inv => true,
        ClassId::Asc => is_ascent(s),
        ClassId::T21 => is_t21(s),
        ClassId::B => is_b(s),
        ClassId::C => is_c(s),
        _ => false,
    }
}

pub(crate) fn perm_is_member(class: ClassId, p: &Perm) -> bool {
    match class {
        ClassId::PermAll => true,
        ClassId::PermAvoidA => !contains_bivincular_a(p),
        ClassId::PermAvoidB => !contains_bivincular_b(p),
        _ => false,
    }
}

pub fn is_inversion(s: &[u32]) -> bool {
    s.iter().enumerate().all(|(k, &v)| (v as usize) <= k)
}

pub fn is_ascent(s: &[u32]) -> bool {
    if !is_inversion(s) {
        return false;
    }
    let mut asc = 0;
    for k in 1..s.len() {
        if s[k] > asc + 1 {
            return false;
        }
        if s[k - 1] < s[k] {
            asc += 1;
        }
    }
    true
}

/// No `i < j` with `s_i = s_j + 1`.
pub fn is_t21(s: &[u32]) -> bool {
    is_inversion(s)
        && (0..s.len()).all(|j| (0..j).all(|i| s[i] != s[j] + 1))
}

pub fn is_b(s: &[u32]) -> bool {
    if !is_inversion(s) {
        return false;
    }
    let n = s.len();
    // 0-based k stands for the 1-based position i = k + 1, so "b_i = i - 1"
    // reads s[k] == k.
    for k in 0..n.saturating_sub(1) {
        if s[k] < s[k + 1] {
            continue;
        }
        let v = s[k] as usize;
        if v == k {
            if (k + 1..n).any(|m| s[m] as usize == m) {
                return false;
            }
        } else if s[k + 1..].iter().any(|&x| x as usize == k) {
            return false;
        }
    }
    true
}

pub fn is_c(s: &[u32]) -> bool {
    if !is_inversion(s) {
        return false;
    }
    let n = s.len();
    for k in 0..n.saturating_sub(1) {
        if s[k] >= s[k + 1] && s[k + 1..].iter().any(|&x| x as usize == k + 1) {
            return false;
        }
    }
    true
}

/// An occurrence is `pi_i < pi_{i+1}` and `pi_j = pi_i - 1` for some
/// `j >= i + 2`.
pub fn contains_bivincular_a(p: &Perm) -> bool {
    let v = p.values();
    let n = v.len();
    (0..n.saturating_sub(1))
        .filter(|&i| v[i] < v[i + 1])
        .any(|i| v[i + 2..].iter().any(|&x| x + 1 == v[i]))
}

/// An occurrence is `pi_i < pi_{i+1}` and `pi_j = pi_{i+1} - 1` for some
/// `j >= i + 2`.
pub fn contains_bivincular_b(p: &Perm) -> bool {
    let v = p.values();
    let n = v.len();
    (0..n.saturating_sub(1))
        .filter(|&i| v[i] < v[i + 1])
        .any(|i| v[i + 2..].iter().any(|&x| x + 1 == v[i + 1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::Seq;

    fn seq(s: &str) -> Obj {
        Obj::Seq(s.parse::<Seq>().unwrap())
    }

    fn perm(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn t21_rejects_descent_by_one() {
        assert!(!is_member(ClassId::T21, &seq("0,1,0")).unwrap());
    }

    #[test]
    fn b_membership_examples() {
        assert!(is_member(ClassId::B, &seq("0,0,0,2")).unwrap());
        assert!(!is_member(ClassId::B, &seq("0,0,0,1")).unwrap());
    }

    #[test]
    fn increasing_is_ascent() {
        for n in 1..12 {
            assert!(is_member(ClassId::Asc, &Obj::Seq(Seq::increasing(n))).unwrap());
        }
    }

    #[test]
    fn c3_is_exactly_the_listed_five() {
        let listed = ["0,0,0", "0,0,2", "0,1,0", "0,1,1", "0,1,2"];
        let mut found = Vec::new();
        for a in 0..1 {
            for b in 0..2 {
                for c in 0..3 {
                    if is_c(&[a, b, c]) {
                        found.push(format!("{a},{b},{c}"));
                    }
                }
            }
        }
        assert_eq!(found, listed);
    }

    #[test]
    fn pattern_a_examples() {
        assert!(contains_bivincular_a(&perm("13542")));
        assert!(!contains_bivincular_a(&perm("31524")));
        for n in 1..9 {
            assert!(!contains_bivincular_a(&Perm::decreasing(n)));
        }
    }

    #[test]
    fn pattern_b_examples() {
        for n in 3..9 {
            assert!(!contains_bivincular_b(&Perm::identity(n)));
        }
        assert!(contains_bivincular_b(&perm("132")));
        for p in ["1", "12", "21"] {
            assert!(!contains_bivincular_b(&perm(p)));
        }
    }

    #[test]
    fn type_mismatch_is_usage_error() {
        let err = is_member(ClassId::PermAll, &seq("0,1")).unwrap_err();
        assert!(matches!(err, Error::Usage(_)));
        let err = is_member(ClassId::Asc, &Obj::Perm(perm("12"))).unwrap_err();
        assert!(matches!(err, Error::Usage(_)));
        assert!(is_member(ClassId::Asc, &Obj::Seq(Seq::default())).is_err());
    }

    #[test]
    fn class_names_round_trip() {
        for c in ClassId::ALL {
            assert_eq!(c.name().parse::<ClassId>().unwrap(), c);
        }
        assert!("XYZ".parse::<ClassId>().is_err());
    }
}
