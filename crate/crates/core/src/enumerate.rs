//! Exhaustive lexicographic enumeration of every class.
//!
//! Sequence classes grow by prefix extension; each class is closed under
//! taking prefixes, so a candidate entry is accepted iff the extended prefix
//! still satisfies every constraint that involves its last position.
//! Permutation classes grow the same way over unused letters; pattern
//! avoidance is prefix-closed as well.

use crate::class::ClassId;
use crate::error::{Error, Result};
use crate::seq::{Obj, Perm, Seq};

/// Upper bounds on the lengths `enumerate` agrees to walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_seq_len: usize,
    pub max_perm_len: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_seq_len: 12,
            max_perm_len: 10,
        }
    }
}

impl Limits {
    pub fn check(&self, class: ClassId, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::Usage("enumeration length must be at least 1".into()));
        }
        let cap = if class.is_perm_class() {
            self.max_perm_len
        } else {
            self.max_seq_len
        };
        if n > cap {
            return Err(Error::ResourceLimit(format!(
                "{class} at length {n} exceeds the configured limit {cap}"
            )));
        }
        Ok(())
    }
}

/// Depth-first walker over the members of a class (or over the valid
/// prefixes of a given length when `target < n`).
pub struct Walker {
    class: ClassId,
    n: usize,
    target: usize,
    base: usize,
    buf: Vec<u32>,
    cand: Vec<u32>,
    used: Vec<bool>,
    state: WalkState,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum WalkState {
    Fresh,
    Running,
    Done,
}

impl Walker {
    /// Walks the members of length `n` that start with `prefix`.
    pub fn new(class: ClassId, n: usize, prefix: &[u32]) -> Self {
        Walker::with_target(class, n, n, prefix)
    }

    fn with_target(class: ClassId, n: usize, target: usize, prefix: &[u32]) -> Self {
        Walker {
            class,
            n,
            target,
            base: prefix.len(),
            buf: prefix.to_vec(),
            cand: Vec::with_capacity(n),
            used: vec![false; n + 2],
            state: WalkState::Fresh,
        }
    }

    fn prefix_valid(&mut self) -> bool {
        if self.buf.len() > self.target {
            return false;
        }
        let mut check = Vec::with_capacity(self.buf.len());
        for &v in &self.buf {
            if !value_in_range(self.class, self.n, check.len(), v) {
                return false;
            }
            if self.class.is_perm_class() {
                if self.used[v as usize] {
                    return false;
                }
                self.used[v as usize] = true;
            }
            check.push(v);
            if !extension_ok(self.class, &check) {
                return false;
            }
        }
        true
    }

    fn first_candidate(&self) -> u32 {
        if self.class.is_perm_class() {
            1
        } else {
            0
        }
    }

    fn max_candidate(&self, depth: usize) -> u32 {
        if self.class.is_perm_class() {
            self.n as u32
        } else {
            depth as u32
        }
    }

    /// Advances to the next member, returning it as a borrowed slice.
    pub fn next_leaf(&mut self) -> Option<&[u32]> {
        match self.state {
            WalkState::Done => return None,
            WalkState::Fresh => {
                self.state = WalkState::Running;
                if !self.prefix_valid() {
                    self.state = WalkState::Done;
                    return None;
                }
                if self.buf.len() == self.target {
                    self.state = WalkState::Done;
                    return Some(&self.buf);
                }
                self.cand.push(self.first_candidate());
            }
            WalkState::Running => {
                // The previous call returned a leaf; drop its last entry.
                let v = self.buf.pop().expect("leaf is non-empty");
                self.used[v as usize] = false;
            }
        }
        let perm = self.class.is_perm_class();
        loop {
            let depth = self.buf.len();
            let max = self.max_candidate(depth);
            let c = self.cand.last_mut().expect("candidate stack");
            if *c > max {
                self.cand.pop();
                if self.buf.len() == self.base {
                    self.state = WalkState::Done;
                    return None;
                }
                let v = self.buf.pop().expect("non-empty");
                self.used[v as usize] = false;
                continue;
            }
            let v = *c;
            *c += 1;
            if perm && self.used[v as usize] {
                continue;
            }
            self.buf.push(v);
            if !extension_ok(self.class, &self.buf) {
                self.buf.pop();
                continue;
            }
            self.used[v as usize] = true;
            if self.buf.len() == self.target {
                return Some(&self.buf);
            }
            let first = self.first_candidate();
            self.cand.push(first);
        }
    }
}

fn value_in_range(class: ClassId, n: usize, pos: usize, v: u32) -> bool {
    if class.is_perm_class() {
        v >= 1 && (v as usize) <= n
    } else {
        (v as usize) <= pos
    }
}

/// Checks every class constraint that involves the last entry of `s`,
/// assuming `s[..len-1]` already satisfies them all.
pub(crate) fn extension_ok(class: ClassId, s: &[u32]) -> bool {
    let m = s.len() - 1;
    let v = s[m];
    match class {
        ClassId::Inv | ClassId::PermAll => true,
        ClassId::Asc => {
            if m == 0 {
                return v == 0;
            }
            let asc = s[..m].windows(2).filter(|w| w[0] < w[1]).count() as u32;
            v <= asc + 1
        }
        ClassId::T21 => s[..m].iter().all(|&x| x != v + 1),
        ClassId::B => (0..m).all(|k| {
            if s[k] < s[k + 1] {
                true
            } else if s[k] as usize == k {
                v as usize != m
            } else {
                v as usize != k
            }
        }),
        ClassId::C => (0..m).all(|k| s[k] < s[k + 1] || v as usize != k + 1),
        ClassId::PermAvoidA => {
            m < 2 || (0..m - 1).all(|i| !(s[i] < s[i + 1] && v + 1 == s[i]))
        }
        ClassId::PermAvoidB => {
            m < 2 || (0..m - 1).all(|i| !(s[i] < s[i + 1] && v + 1 == s[i + 1]))
        }
    }
}

/// Ordered stream of the members of `class` of length `n`.
pub struct Members {
    walker: Walker,
}

impl Iterator for Members {
    type Item = Obj;

    fn next(&mut self) -> Option<Obj> {
        let perm = self.walker.class.is_perm_class();
        self.walker.next_leaf().map(|leaf| {
            if perm {
                Obj::Perm(Perm::new_unchecked(leaf.to_vec()))
            } else {
                Obj::Seq(Seq::new(leaf.to_vec()))
            }
        })
    }
}

/// Every member of `class` of length `n`, lexicographically, under the
/// default [`Limits`].
pub fn enumerate(class: ClassId, n: usize) -> Result<Members> {
    enumerate_with(class, n, &[], &Limits::default())
}

/// Members of length `n` starting with `prefix`. Enumerating every valid
/// prefix of a fixed length (see [`prefixes`]) partitions the class into
/// disjoint, lexicographically consecutive ranges.
pub fn enumerate_with(class: ClassId, n: usize, prefix: &[u32], limits: &Limits) -> Result<Members> {
    limits.check(class, n)?;
    Ok(Members {
        walker: Walker::new(class, n, prefix),
    })
}

/// Visits the raw entries of every member without allocating per member.
pub fn for_each(class: ClassId, n: usize, prefix: &[u32], limits: &Limits, mut f: impl FnMut(&[u32])) -> Result<()> {
    limits.check(class, n)?;
    let mut walker = Walker::new(class, n, prefix);
    while let Some(leaf) = walker.next_leaf() {
        f(leaf);
    }
    Ok(())
}

/// All prefixes of length `depth` that extend to at least a valid prefix of a
/// length-`n` member, in lexicographic order.
pub fn prefixes(class: ClassId, n: usize, depth: usize) -> Vec<Vec<u32>> {
    let depth = depth.min(n);
    let mut walker = Walker::with_target(class, n, depth, &[]);
    let mut out = Vec::new();
    while let Some(leaf) = walker.next_leaf() {
        out.push(leaf.to_vec());
    }
    out
}

/// Number of members of length `n`.
pub fn count(class: ClassId, n: usize, limits: &Limits) -> Result<u64> {
    let mut c = 0u64;
    for_each(class, n, &[], limits, |_| c += 1)?;
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::{perm_is_member, seq_is_member};

    fn seqs(class: ClassId, n: usize) -> Vec<String> {
        enumerate(class, n).unwrap().map(|o| o.to_string()).collect()
    }

    #[test]
    fn ascent_sequences_of_length_three() {
        assert_eq!(seqs(ClassId::Asc, 3), ["0,0,0", "0,0,1", "0,1,0", "0,1,1", "0,1,2"]);
    }

    #[test]
    fn t21_of_length_three() {
        assert_eq!(seqs(ClassId::T21, 3), ["0,0,0", "0,0,1", "0,0,2", "0,1,1", "0,1,2"]);
    }

    #[test]
    fn fishburn_counts_small() {
        let expect = [1u64, 2, 5, 15, 53, 217, 1014];
        for (k, &e) in expect.iter().enumerate() {
            assert_eq!(count(ClassId::Asc, k + 1, &Limits::default()).unwrap(), e);
        }
    }

    #[test]
    fn matches_naive_filter_of_superclass() {
        for n in 1..=7 {
            let inv: Vec<Vec<u32>> = enumerate(ClassId::Inv, n)
                .unwrap()
                .map(|o| match o {
                    Obj::Seq(s) => s.into_values(),
                    Obj::Perm(_) => unreachable!(),
                })
                .collect();
            let fact: usize = (1..=n).product();
            assert_eq!(inv.len(), fact);
            for class in [ClassId::Asc, ClassId::T21, ClassId::B, ClassId::C] {
                let filtered: Vec<String> = inv
                    .iter()
                    .filter(|s| seq_is_member(class, s))
                    .map(|s| Seq::from(s.as_slice()).to_string())
                    .collect();
                assert_eq!(seqs(class, n), filtered, "{class} n={n}");
            }
            let perms: Vec<Perm> = enumerate(ClassId::PermAll, n)
                .unwrap()
                .map(|o| match o {
                    Obj::Perm(p) => p,
                    Obj::Seq(_) => unreachable!(),
                })
                .collect();
            assert_eq!(perms.len(), fact);
            assert!(perms.windows(2).all(|w| w[0] < w[1]));
            for class in [ClassId::PermAvoidA, ClassId::PermAvoidB] {
                let filtered: Vec<String> = perms
                    .iter()
                    .filter(|p| perm_is_member(class, p))
                    .map(|p| p.to_string())
                    .collect();
                assert_eq!(seqs(class, n), filtered, "{class} n={n}");
            }
        }
    }

    #[test]
    fn prefix_partition_covers_class() {
        let limits = Limits::default();
        for class in [ClassId::Asc, ClassId::B, ClassId::PermAvoidB] {
            let full = seqs(class, 6);
            let mut joined = Vec::new();
            for p in prefixes(class, 6, 3) {
                joined.extend(
                    enumerate_with(class, 6, &p, &limits)
                        .unwrap()
                        .map(|o| o.to_string()),
                );
            }
            assert_eq!(joined, full);
        }
    }

    #[test]
    fn limits_are_enforced() {
        assert!(matches!(enumerate(ClassId::Asc, 13), Err(Error::ResourceLimit(_))));
        assert!(matches!(enumerate(ClassId::PermAll, 11), Err(Error::ResourceLimit(_))));
        assert!(matches!(enumerate(ClassId::Asc, 0), Err(Error::Usage(_))));
        let tight = Limits { max_seq_len: 4, max_perm_len: 3 };
        assert!(enumerate_with(ClassId::Asc, 5, &[], &tight).is_err());
        assert!(enumerate_with(ClassId::Asc, 4, &[], &tight).is_ok());
    }

    #[test]
    fn invalid_prefix_yields_nothing() {
        let limits = Limits::default();
        assert_eq!(enumerate_with(ClassId::Asc, 4, &[0, 2], &limits).unwrap().count(), 0);
        assert_eq!(enumerate_with(ClassId::PermAll, 3, &[1, 1], &limits).unwrap().count(), 0);
        assert_eq!(enumerate_with(ClassId::Asc, 2, &[0, 1], &limits).unwrap().count(), 1);
    }
}
