//! Exact truncated generating functions.
//!
//! Identities are checked at exact rational specializations of the marker
//! variables rather than symbolically; [`interpolate_g`] recovers full
//! coefficient polynomials when they are wanted.

mod case;
mod eval;
mod formulas;
mod interp;
mod point;
mod series;

pub use case::{check_case_identity, CaseData, CaseReport};
pub use eval::{eval_gf, eval_table, marker_value, series_from_tables};
pub use formulas::{
    check_order, fishburn_series, series_asczero, series_g, series_zeromax, AsczeroVariant, DEFAULT_ORDER, MAX_ORDER,
};
pub use interp::{interpolate_g, Poly4, MAX_INTERP_ORDER};
pub use point::{parse_rational, SpecPoint};
pub use series::TruncSeries;
