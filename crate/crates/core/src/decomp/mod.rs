//! Structural decompositions of ascent sequences and of (2-1)-avoiding
//! inversion sequences.
//!
//! Every map comes with its inverse. Maps whose codomain is a set of pairs
//! report the second component as [`MapResult::side_index`].

mod ascent;
mod classify;
mod maximal;
mod zeros;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::seq::Seq;

pub use ascent::{ealm_shift, phi_p, phi_p_inv, s2_reduce, s2_reduce_inv, s3_reduce, s3_reduce_inv, xi_s4, xi_s4_inv};
pub use classify::{classify, SubsetLabel, SubsetScheme};
pub use maximal::{mpair_shift, psi_f, psi_f_inv, vartheta, vartheta_inv, vartheta_trace};
pub use zeros::{phi_g, phi_g_inv, theta_r, theta_r_inv, theta_r_trace, zpair_shift};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MapResult {
    pub output: Seq,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub side_index: Option<u32>,
}

impl MapResult {
    pub fn plain(output: Seq) -> Self {
        MapResult { output, side_index: None }
    }

    pub fn with_side(output: Seq, i: u32) -> Self {
        MapResult { output, side_index: Some(i) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Inverse,
    Up,
    Down,
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "forward" => Ok(Direction::Forward),
            "inverse" => Ok(Direction::Inverse),
            "up" => Ok(Direction::Up),
            "down" => Ok(Direction::Down),
            other => Err(Error::Usage(format!("unknown direction {other:?}"))),
        }
    }
}

/// Names of the decomposition maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DecompMap {
    PhiP,
    XiS4,
    S2Reduce,
    S3Reduce,
    EalmShift,
    PsiF,
    MpairShift,
    Vartheta,
    PhiG,
    ZpairShift,
    ThetaR,
}

impl DecompMap {
    pub const ALL: [DecompMap; 11] = [
        DecompMap::PhiP,
        DecompMap::XiS4,
        DecompMap::S2Reduce,
        DecompMap::S3Reduce,
        DecompMap::EalmShift,
        DecompMap::PsiF,
        DecompMap::MpairShift,
        DecompMap::Vartheta,
        DecompMap::PhiG,
        DecompMap::ZpairShift,
        DecompMap::ThetaR,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DecompMap::PhiP => "phi_P",
            DecompMap::XiS4 => "xi_S4",
            DecompMap::S2Reduce => "s2_reduce",
            DecompMap::S3Reduce => "s3_reduce",
            DecompMap::EalmShift => "ealm_shift",
            DecompMap::PsiF => "psi_F",
            DecompMap::MpairShift => "mpair_shift",
            DecompMap::Vartheta => "vartheta",
            DecompMap::PhiG => "phi_G",
            DecompMap::ZpairShift => "zpair_shift",
            DecompMap::ThetaR => "theta_R",
        }
    }

    /// Shift maps move up or down; the others go forward or back.
    pub fn is_shift(self) -> bool {
        matches!(self, DecompMap::EalmShift | DecompMap::MpairShift | DecompMap::ZpairShift)
    }

    /// Whether the forward direction consumes a side index.
    pub fn takes_side_forward(self) -> bool {
        matches!(self, DecompMap::Vartheta | DecompMap::ThetaR)
    }

    /// Whether the inverse direction consumes a side index.
    pub fn takes_side_inverse(self) -> bool {
        matches!(self, DecompMap::XiS4 | DecompMap::S2Reduce | DecompMap::S3Reduce)
    }

    /// Applies the map. `side` is the second component of a pair input.
    pub fn apply(self, s: &Seq, direction: Direction, side: Option<u32>) -> Result<MapResult> {
        let need_side = || side.ok_or_else(|| Error::Usage(format!("{self} {direction:?} needs a side index")));
        let plain = |r: Result<Seq>| r.map(MapResult::plain);
        match (self, direction) {
            (m, Direction::Up | Direction::Down) if !m.is_shift() => {
                Err(Error::Usage(format!("{m} takes forward or inverse, not {direction:?}")))
            }
            (m, Direction::Forward | Direction::Inverse) if m.is_shift() => {
                Err(Error::Usage(format!("{m} takes up or down, not {direction:?}")))
            }
            (DecompMap::PhiP, Direction::Forward) => plain(phi_p(s)),
            (DecompMap::PhiP, _) => plain(phi_p_inv(s)),
            (DecompMap::XiS4, Direction::Forward) => xi_s4(s),
            (DecompMap::XiS4, _) => plain(xi_s4_inv(s, need_side()?)),
            (DecompMap::S2Reduce, Direction::Forward) => s2_reduce(s),
            (DecompMap::S2Reduce, _) => plain(s2_reduce_inv(s, need_side()?)),
            (DecompMap::S3Reduce, Direction::Forward) => s3_reduce(s),
            (DecompMap::S3Reduce, _) => plain(s3_reduce_inv(s, need_side()?)),
            (DecompMap::EalmShift, d) => plain(ealm_shift(s, d == Direction::Up)),
            (DecompMap::PsiF, Direction::Forward) => plain(psi_f(s)),
            (DecompMap::PsiF, _) => plain(psi_f_inv(s)),
            (DecompMap::MpairShift, d) => plain(mpair_shift(s, d == Direction::Up)),
            (DecompMap::Vartheta, Direction::Forward) => plain(vartheta(s, need_side()?)),
            (DecompMap::Vartheta, _) => vartheta_inv(s),
            (DecompMap::PhiG, Direction::Forward) => plain(phi_g(s)),
            (DecompMap::PhiG, _) => plain(phi_g_inv(s)),
            (DecompMap::ZpairShift, d) => plain(zpair_shift(s, d == Direction::Up)),
            (DecompMap::ThetaR, Direction::Forward) => plain(theta_r(s, need_side()?)),
            (DecompMap::ThetaR, _) => theta_r_inv(s),
        }
    }

    /// Intermediate rows of a forward application: the input, every
    /// intermediate step for the multi-step maps, then the output.
    pub fn trace(self, s: &Seq, direction: Direction, side: Option<u32>) -> Result<Vec<Seq>> {
        match (self, direction, side) {
            (DecompMap::Vartheta, Direction::Forward, Some(i)) => vartheta_trace(s, i),
            (DecompMap::ThetaR, Direction::Forward, Some(i)) => theta_r_trace(s, i),
            _ => {
                let out = self.apply(s, direction, side)?;
                Ok(vec![s.clone(), out.output])
            }
        }
    }
}

impl fmt::Display for DecompMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DecompMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DecompMap::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Usage(format!("unknown decomposition map {s:?}")))
    }
}
