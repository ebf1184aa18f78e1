//! Named verification checks with structured, reproducible reports.
//!
//! Every check walks lengths in ascending order and objects in
//! lexicographic order and stops at the first violation, so a failing
//! report carries the smallest counterexample.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;
use std::time::Instant;

use num_rational::BigRational;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bijection::{lehmer_code, phi, phi_inv, psi, psi_inv, upsilon};
use crate::class::{is_ascent, is_inversion, ClassId};
use crate::enumerate::{count, enumerate, Limits};
use crate::error::{Error, Result};
use crate::genfun::{
    fishburn_series, series_asczero, series_from_tables, series_g, series_zeromax, AsczeroVariant, CaseData, SpecPoint,
    TruncSeries, MAX_ORDER,
};
use crate::lemmas::lemma_suite;
use crate::seq::{Obj, Perm, Seq};
use crate::stats::{
    asc, asc_set, des_set, dist_set, ides_set, lmax_set, lmin_set, max, max_set, rep, rmax_set, rmin, rmin_set, zero,
    zero_set, StatName,
};
use crate::table::{dist_table, DistTable, TableCache};

/// Identifier of a check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckName {
    Conjecture1,
    UpsilonQuadruple,
    PsiSetvalued,
    PhiSetvalued,
    ZeromaxSym,
    Main3,
    TMain3,
    Foata,
    InvSym,
    LehmerQuadruple,
    GfG,
    GfZeromax,
    GfAsczero,
    CaseIdentities,
    LemmaSuite,
    ClassCounts,
}

impl CheckName {
    pub const ALL: [CheckName; 16] = [
        CheckName::Conjecture1,
        CheckName::UpsilonQuadruple,
        CheckName::PsiSetvalued,
        CheckName::PhiSetvalued,
        CheckName::ZeromaxSym,
        CheckName::Main3,
        CheckName::TMain3,
        CheckName::Foata,
        CheckName::InvSym,
        CheckName::LehmerQuadruple,
        CheckName::GfG,
        CheckName::GfZeromax,
        CheckName::GfAsczero,
        CheckName::CaseIdentities,
        CheckName::LemmaSuite,
        CheckName::ClassCounts,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckName::Conjecture1 => "conjecture1",
            CheckName::UpsilonQuadruple => "upsilon_quadruple",
            CheckName::PsiSetvalued => "psi_setvalued",
            CheckName::PhiSetvalued => "phi_setvalued",
            CheckName::ZeromaxSym => "zeromax_sym",
            CheckName::Main3 => "main3",
            CheckName::TMain3 => "t_main3",
            CheckName::Foata => "foata",
            CheckName::InvSym => "inv_sym",
            CheckName::LehmerQuadruple => "lehmer_quadruple",
            CheckName::GfG => "gf_G",
            CheckName::GfZeromax => "gf_zeromax",
            CheckName::GfAsczero => "gf_asczero",
            CheckName::CaseIdentities => "case_identities",
            CheckName::LemmaSuite => "lemma_suite",
            CheckName::ClassCounts => "class_counts",
        }
    }

    /// Default parameters: the exhaustive range, or order and point count
    /// for series checks.
    pub fn defaults(self) -> CheckParams {
        let (max_n, order, points) = match self {
            CheckName::Conjecture1 | CheckName::Main3 | CheckName::ClassCounts => (Some(10), None, None),
            CheckName::UpsilonQuadruple
            | CheckName::PsiSetvalued
            | CheckName::PhiSetvalued
            | CheckName::Foata
            | CheckName::InvSym
            | CheckName::LehmerQuadruple => (Some(8), None, None),
            CheckName::TMain3 => (Some(9), None, None),
            CheckName::ZeromaxSym => (Some(9), Some(9), Some(20)),
            CheckName::GfG | CheckName::GfZeromax | CheckName::GfAsczero => (None, Some(9), Some(20)),
            CheckName::CaseIdentities => (None, Some(8), Some(10)),
            CheckName::LemmaSuite => (Some(7), None, None),
        };
        let seed = points.map(|_| DEFAULT_SEED);
        CheckParams {
            max_n,
            order,
            points,
            seed,
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckName::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Usage(format!("unknown check {s:?}")))
    }
}

pub const DEFAULT_SEED: u64 = 20;

/// Parameters of a run. Unset fields take the check's defaults; fields
/// the check does not use are ignored.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl CheckParams {
    /// Fills unset fields from `defaults`, keeping only fields it uses.
    fn resolve(self, defaults: CheckParams) -> CheckParams {
        CheckParams {
            max_n: defaults.max_n.map(|d| self.max_n.unwrap_or(d)),
            order: defaults.order.map(|d| self.order.unwrap_or(d)),
            points: defaults.points.map(|d| self.points.unwrap_or(d)),
            seed: defaults.seed.map(|d| self.seed.unwrap_or(d)),
        }
    }
}

/// The first violation found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub object: String,
    pub expected: String,
    pub actual: String,
}

impl Counterexample {
    fn new(n: usize, object: impl fmt::Display, expected: impl fmt::Display, actual: impl fmt::Display) -> Self {
        Counterexample {
            n: Some(n),
            object: object.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.n {
            write!(f, "n={n} ")?;
        }
        write!(f, "{}: expected {}, got {}", self.object, self.expected, self.actual)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Result of one check. A failing report always has a counterexample.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub params: CheckParams,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    pub summary: String,
    pub elapsed_ms: u64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

type Outcome = std::result::Result<String, Counterexample>;

/// Table source for a run: cached when a cache is given, with one
/// seeded spot check against fresh enumeration at the end.
struct Tables {
    cache: Option<TableCache>,
    used: Mutex<Vec<(ClassId, usize, Vec<StatName>)>>,
}

impl Tables {
    fn get(&self, class: ClassId, n: usize, stats: &[StatName]) -> Result<DistTable> {
        match &self.cache {
            None => dist_table(class, n, stats),
            Some(c) => {
                self.used.lock().expect("unpoisoned").push((class, n, stats.to_vec()));
                c.get_or_compute(class, n, stats)
            }
        }
    }

    fn spot_check(&self, seed: u64) -> Result<Option<Counterexample>> {
        let used = self.used.lock().expect("unpoisoned");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let Some((class, n, stats)) = used.choose(&mut rng) else {
            return Ok(None);
        };
        let cache = self.cache.as_ref().expect("keys are only recorded with a cache");
        let cached = cache.get_or_compute(*class, *n, stats)?;
        let fresh = dist_table(*class, *n, stats)?;
        Ok((cached != fresh).then(|| {
            Counterexample::new(*n, format!("cached {class} table {stats:?}"), fresh.to_json(), cached.to_json())
        }))
    }
}

/// Runs a check with tables cached under `$ASCENT_CACHE_DIR`.
pub fn run_check(name: CheckName, params: CheckParams) -> Result<CheckReport> {
    run_check_with(name, params, Some(TableCache::from_env()))
}

/// Runs a check, optionally without a table cache.
pub fn run_check_with(name: CheckName, params: CheckParams, cache: Option<TableCache>) -> Result<CheckReport> {
    let params = params.resolve(name.defaults());
    let limits = Limits::default();
    if let Some(n) = params.max_n {
        limits.check(ClassId::Asc, n)?;
    }
    if let Some(o) = params.order {
        if o == 0 || o > MAX_ORDER {
            return Err(Error::ResourceLimit(format!("order must be 1 to {MAX_ORDER}")));
        }
    }
    let tables = Tables {
        cache,
        used: Mutex::new(Vec::new()),
    };
    let start = Instant::now();
    let max_n = params.max_n.unwrap_or(0);
    let order = params.order.unwrap_or(0);
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed.unwrap_or(DEFAULT_SEED));
    let points = params.points.unwrap_or(0);
    let mut outcome = match name {
        CheckName::Conjecture1 => conjecture1(&tables, max_n)?,
        CheckName::UpsilonQuadruple => upsilon_quadruple(max_n)?,
        CheckName::PsiSetvalued => setvalued(max_n, true)?,
        CheckName::PhiSetvalued => setvalued(max_n, false)?,
        CheckName::ZeromaxSym => zeromax_sym(&tables, max_n, order, points, &mut rng)?,
        CheckName::Main3 => main3(&tables, max_n)?,
        CheckName::TMain3 => t_main3(&tables, max_n)?,
        CheckName::Foata => foata(&tables, max_n)?,
        CheckName::InvSym => inv_sym(&tables, max_n)?,
        CheckName::LehmerQuadruple => lehmer_quadruple(max_n)?,
        CheckName::GfG => gf_g(&tables, order, points, &mut rng)?,
        CheckName::GfZeromax => gf_zeromax(&tables, order, points, &mut rng)?,
        CheckName::GfAsczero => gf_asczero(&tables, order, points, &mut rng)?,
        CheckName::CaseIdentities => case_identities(order, points, &mut rng)?,
        CheckName::LemmaSuite => lemmas(max_n),
        CheckName::ClassCounts => class_counts(max_n)?,
    };
    if outcome.is_ok() {
        if let Some(cx) = tables.spot_check(params.seed.unwrap_or(DEFAULT_SEED))? {
            outcome = Err(cx);
        }
    }
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let (verdict, counterexample, summary) = match outcome {
        Ok(s) => (Verdict::Pass, None, s),
        Err(cx) => (Verdict::Fail, Some(cx), "failed".to_string()),
    };
    Ok(CheckReport {
        name: name.name().to_string(),
        params,
        verdict,
        counterexample,
        summary,
        elapsed_ms,
    })
}

fn tuple(t: &[u32]) -> String {
    let parts: Vec<String> = t.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

fn set(s: &[usize]) -> String {
    let parts: Vec<String> = s.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

/// First tuple whose multiplicity differs between the tables.
fn compare(expected: &DistTable, actual: &DistTable, what: &str) -> std::result::Result<(), Counterexample> {
    let keys: BTreeSet<&Vec<u32>> = expected.counts.keys().chain(actual.counts.keys()).collect();
    for k in keys {
        let (e, a) = (expected.get(k), actual.get(k));
        if e != a {
            return Err(Counterexample::new(expected.n, format!("{what} tuple {}", tuple(k)), e, a));
        }
    }
    Ok(())
}

use StatName::{Asc as ASC, Des as DES, Ealm as EALM, Iasc as IASC, Max as MAX, Mpair as MPAIR, Rep as REP, Zero as ZERO, Zpair as ZPAIR};

fn conjecture1(tables: &Tables, max_n: usize) -> Result<Outcome> {
    for n in 1..=max_n {
        let t = tables.get(ClassId::Asc, n, &[ASC, REP, ZERO, MAX])?;
        if let Err(cx) = compare(&t, &t.project(&[REP, ASC, MAX, ZERO])?, "(asc,rep,zero,max) vs (rep,asc,max,zero)") {
            return Ok(Err(cx));
        }
    }
    Ok(Ok(format!("quadruple distribution bi-symmetric for n=1..{max_n}")))
}

fn seqs(class: ClassId, n: usize) -> Result<impl Iterator<Item = Seq>> {
    Ok(enumerate(class, n)?.map(|o| match o {
        Obj::Seq(s) => s,
        Obj::Perm(_) => unreachable!("sequence class"),
    }))
}

fn perms(class: ClassId, n: usize) -> Result<impl Iterator<Item = Perm>> {
    Ok(enumerate(class, n)?.map(|o| match o {
        Obj::Perm(p) => p,
        Obj::Seq(_) => unreachable!("permutation class"),
    }))
}

fn upsilon_quadruple(max_n: usize) -> Result<Outcome> {
    for n in 1..=max_n {
        let mut seen = HashSet::new();
        for s in seqs(ClassId::Asc, n)? {
            let t = match upsilon(&s) {
                Ok(t) => t,
                Err(e) => return Ok(Err(Counterexample::new(n, &s, "an ascent sequence", e))),
            };
            let (v, w) = (s.values(), t.values());
            if w.len() != n || !is_ascent(w) {
                return Ok(Err(Counterexample::new(n, &s, "an ascent sequence", &t)));
            }
            let before = [asc(v), rep(v), zero(v), max(v)];
            let after = [rep(w), asc(w), rmin(w), zero(w)];
            if before != after {
                return Ok(Err(Counterexample::new(
                    n,
                    format!("{s} -> {t}"),
                    format!("(rep,asc,rmin,zero)={}", tuple(&before)),
                    tuple(&after),
                )));
            }
            if !seen.insert(t.clone()) {
                return Ok(Err(Counterexample::new(n, &s, "a fresh image", format!("repeated image {t}"))));
            }
        }
    }
    Ok(Ok(format!("bijective and quadruple-transforming for n=1..{max_n}")))
}

fn perm_sets(p: &[u32], psi_side: bool) -> Vec<Vec<usize>> {
    let mut out = vec![des_set(p), ides_set(p)];
    if psi_side {
        out.push(lmin_set(p));
    }
    out.extend([lmax_set(p), rmax_set(p)]);
    out
}

fn seq_sets(s: &[u32], psi_side: bool) -> Vec<Vec<usize>> {
    let mut out = vec![asc_set(s), dist_set(s)];
    if psi_side {
        out.push(max_set(s));
    }
    out.extend([zero_set(s), rmin_set(s)]);
    out
}

fn render_sets(sets: &[Vec<usize>]) -> String {
    let parts: Vec<String> = sets.iter().map(|s| set(s)).collect();
    format!("({})", parts.join(", "))
}

/// Set-valued transport by `psi` (pattern A) or `phi` (pattern B), together
/// with bijectivity onto the ascent sequences and the inverse.
fn setvalued(max_n: usize, psi_side: bool) -> Result<Outcome> {
    let (class, fwd, inv): (ClassId, fn(&Perm) -> Result<Seq>, fn(&Seq) -> Result<Perm>) = if psi_side {
        (ClassId::PermAvoidA, psi, psi_inv)
    } else {
        (ClassId::PermAvoidB, phi, phi_inv)
    };
    Limits::default().check(class, max_n)?;
    for n in 1..=max_n {
        let mut seen = HashSet::new();
        for p in perms(class, n)? {
            let s = match fwd(&p) {
                Ok(s) => s,
                Err(e) => return Ok(Err(Counterexample::new(n, &p, "an ascent sequence", e))),
            };
            if !is_ascent(s.values()) || s.len() != n {
                return Ok(Err(Counterexample::new(n, &p, "an ascent sequence", &s)));
            }
            let (a, b) = (perm_sets(p.values(), psi_side), seq_sets(s.values(), psi_side));
            if a != b {
                return Ok(Err(Counterexample::new(n, format!("{p} -> {s}"), render_sets(&a), render_sets(&b))));
            }
            match inv(&s) {
                Ok(back) if back == p => {}
                Ok(back) => return Ok(Err(Counterexample::new(n, &s, format!("inverse {p}"), back))),
                Err(e) => return Ok(Err(Counterexample::new(n, &s, format!("inverse {p}"), e))),
            }
            if !seen.insert(s.clone()) {
                return Ok(Err(Counterexample::new(n, &p, "a fresh image", format!("repeated image {s}"))));
            }
        }
        let target = count(ClassId::Asc, n, &Limits::default())? as usize;
        if seen.len() != target {
            return Ok(Err(Counterexample::new(n, "image size", target, seen.len())));
        }
    }
    let sets = if psi_side { "(DES,IDES,LMIN,LMAX,RMAX)" } else { "(DES,IDES,LMAX,RMAX)" };
    Ok(Ok(format!("{sets} transported bijectively for n=1..{max_n}")))
}

fn zeromax_sym(tables: &Tables, max_n: usize, order: usize, points: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    for n in 1..=max_n {
        let t = tables.get(ClassId::Asc, n, &[ZERO, MAX])?;
        if let Err(cx) = compare(&t, &t.project(&[MAX, ZERO])?, "(zero,max) vs (max,zero)") {
            return Ok(Err(cx));
        }
    }
    for _ in 0..points {
        let p = SpecPoint::random(rng, |_| true);
        let a = series_zeromax(order, &p.q, &p.z)?;
        let b = series_zeromax(order, &p.z, &p.q)?;
        if let Err(cx) = compare_series(&a, &b, &format!("zero/max series at q={} z={} vs swapped", p.q, p.z)) {
            return Ok(Err(cx));
        }
    }
    Ok(Ok(format!("(zero,max) symmetric for n=1..{max_n}; series symmetric to t^{order} at {points} points")))
}

fn main3(tables: &Tables, max_n: usize) -> Result<Outcome> {
    for n in 1..=max_n {
        let a = tables.get(ClassId::Asc, n, &[REP, MAX])?;
        let t = tables.get(ClassId::T21, n, &[REP, MAX])?;
        let az = tables.get(ClassId::Asc, n, &[ASC, ZERO])?;
        if let Err(cx) = compare(&a, &t, "(rep,max) on ASC vs T21").and_then(|_| compare(&a, &az, "(rep,max) vs (asc,zero) on ASC")) {
            return Ok(Err(cx));
        }
    }
    Ok(Ok(format!("three pair tables coincide for n=1..{max_n}")))
}

fn t_main3(tables: &Tables, max_n: usize) -> Result<Outcome> {
    for n in 1..=max_n {
        let t = tables.get(ClassId::T21, n, &[REP, MAX, MPAIR])?;
        let a = tables.get(ClassId::Asc, n, &[REP, MAX, EALM])?;
        let z = tables.get(ClassId::Asc, n, &[ASC, ZERO, ZPAIR])?;
        if let Err(cx) = compare(&t, &a, "(rep,max,mpair) on T21 vs (rep,max,ealm) on ASC")
            .and_then(|_| compare(&t, &z, "(rep,max,mpair) on T21 vs (asc,zero,zpair) on ASC"))
        {
            return Ok(Err(cx));
        }
    }
    Ok(Ok(format!("three triple tables coincide for n=1..{max_n}")))
}

/// `rep` on inversion sequences pairs with `iasc = n - 1 - ides`, not with
/// `ides` itself: already at length 2 the pairs are `{(0,1), (1,0)}` versus
/// `(des, ides)` in `{(0,0), (1,1)}`.
fn foata(tables: &Tables, max_n: usize) -> Result<Outcome> {
    Limits::default().check(ClassId::PermAll, max_n)?;
    for n in 1..=max_n {
        let i = tables.get(ClassId::Inv, n, &[ASC, REP])?;
        let p = tables.get(ClassId::PermAll, n, &[DES, IASC])?;
        if let Err(cx) = compare(&i, &p, "(asc,rep) on INV vs (des,iasc) on PERM_ALL") {
            return Ok(Err(cx));
        }
    }
    Ok(Ok(format!("(asc,rep) on INV equidistributed with (des,iasc) on permutations for n=1..{max_n}")))
}

fn inv_sym(tables: &Tables, max_n: usize) -> Result<Outcome> {
    for n in 1..=max_n {
        let i = tables.get(ClassId::Inv, n, &[ASC, REP])?;
        if let Err(cx) = compare(&i, &i.project(&[REP, ASC])?, "(asc,rep) vs (rep,asc) on INV") {
            return Ok(Err(cx));
        }
    }
    Ok(Ok(format!("(asc,rep) symmetric on INV for n=1..{max_n}")))
}

fn lehmer_quadruple(max_n: usize) -> Result<Outcome> {
    Limits::default().check(ClassId::PermAll, max_n)?;
    for n in 1..=max_n {
        let mut seen = HashSet::new();
        for p in perms(ClassId::PermAll, n)? {
            let s = lehmer_code(&p);
            let (v, w) = (p.values(), s.values());
            if !is_inversion(w) || w.len() != n {
                return Ok(Err(Counterexample::new(n, &p, "an inversion sequence", &s)));
            }
            let before = [des_set(v).len(), lmax_set(v).len(), lmin_set(v).len(), rmax_set(v).len()].map(|k| k as u32);
            let after = [asc(w), zero(w), max(w), rmin(w)];
            if before != after {
                return Ok(Err(Counterexample::new(
                    n,
                    format!("{p} -> {s}"),
                    format!("(asc,zero,max,rmin)={}", tuple(&before)),
                    tuple(&after),
                )));
            }
            if !seen.insert(s.clone()) {
                return Ok(Err(Counterexample::new(n, &p, "a fresh code", format!("repeated code {s}"))));
            }
        }
    }
    Ok(Ok(format!("Lehmer code transports (des,lmax,lmin,rmax) for n=1..{max_n}")))
}

fn compare_series(expected: &TruncSeries, actual: &TruncSeries, what: &str) -> std::result::Result<(), Counterexample> {
    for (k, (e, a)) in expected.coeffs().iter().zip(actual.coeffs()).enumerate() {
        if e != a {
            return Err(Counterexample::new(k, format!("{what}, coefficient of t^{k}"), e, a));
        }
    }
    Ok(())
}

fn enumerated_series(tables: &Tables, order: usize, stats: &[StatName], p: &SpecPoint) -> Result<TruncSeries> {
    let ts = (1..=order).map(|n| tables.get(ClassId::Asc, n, stats)).collect::<Result<Vec<_>>>()?;
    series_from_tables(order, &ts, p)
}

fn gf_g(tables: &Tables, order: usize, points: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let sym_order = (order + 1).min(MAX_ORDER);
    for _ in 0..points {
        let p = SpecPoint::random(rng, SpecPoint::admissible_for_g);
        let closed = series_g(order, &p)?;
        let counted = enumerated_series(tables, order, &[REP, MAX, ASC, ZERO], &p)?;
        if let Err(cx) = compare_series(&counted, &closed, &format!("G closed form vs enumeration at {p}")) {
            return Ok(Err(cx));
        }
        let a = series_g(sym_order, &p)?;
        let b = series_g(sym_order, &p.swapped())?;
        if let Err(cx) = compare_series(&a, &b, &format!("G at {p} vs G with (x,q) and (u,z) exchanged")) {
            return Ok(Err(cx));
        }
    }
    Ok(Ok(format!(
        "closed form matches enumeration to t^{order} and is bi-symmetric to t^{sym_order} at {points} points"
    )))
}

fn gf_zeromax(tables: &Tables, order: usize, points: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    for _ in 0..points {
        let p = SpecPoint::random(rng, |_| true);
        let closed = series_zeromax(order, &p.q, &p.z)?;
        let counted = enumerated_series(tables, order, &[ZERO, MAX], &p)?;
        if let Err(cx) = compare_series(&counted, &closed, &format!("zero/max series at q={} z={}", p.q, p.z)) {
            return Ok(Err(cx));
        }
    }
    Ok(Ok(format!("zero/max series matches enumeration to t^{order} at {points} points")))
}

fn gf_asczero(tables: &Tables, order: usize, points: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    for _ in 0..points {
        let p = SpecPoint::random(rng, |_| true);
        let what = format!("asc/zero series at u={} z={}", p.u, p.z);
        let prim = series_asczero(order, &p.u, &p.z, AsczeroVariant::Primitive)?;
        let alt = series_asczero(order, &p.u, &p.z, AsczeroVariant::Alternative)?;
        let at_g = SpecPoint {
            x: BigRational::one(),
            q: BigRational::one(),
            ..p.clone()
        };
        let g = series_g(order, &at_g)?;
        let counted = enumerated_series(tables, order, &[ASC, ZERO], &p)?;
        let r = compare_series(&prim, &alt, &format!("{what}: primitive vs alternative"))
            .and_then(|_| compare_series(&g, &prim, &format!("{what}: G(t;1,1,u,z) vs primitive")))
            .and_then(|_| compare_series(&counted, &prim, &format!("{what}: enumeration vs primitive")));
        if let Err(cx) = r {
            return Ok(Err(cx));
        }
    }
    Ok(Ok(format!("both closed forms match G and enumeration to t^{order} at {points} points")))
}

fn case_identities(order: usize, points: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let data = CaseData::enumerate(order)?;
    let mut pts: Vec<SpecPoint> = (0..points).map(|_| SpecPoint::random(rng, SpecPoint::admissible_for_cases)).collect();
    pts.push(SpecPoint::from_ints(2, 3, 4, 1, 0));
    for p in &pts {
        for k in 1..=4u8 {
            let r = data.check(k, p)?;
            if !r.equal {
                if let Err(cx) = compare_series(&r.lhs, &r.rhs, &format!("subset identity {k} at {p}")) {
                    return Ok(Err(cx));
                }
            }
        }
    }
    Ok(Ok(format!("all four subset identities hold to t^{order} at {} points", pts.len())))
}

fn lemmas(max_n: usize) -> Outcome {
    match lemma_suite(max_n) {
        Ok(rows) => Ok(format!("{} map/length contracts hold for n=1..{max_n}", rows.len())),
        Err(f) => Err(Counterexample::new(f.n, format!("{} on {}", f.map, f.input), "contract holds", f.detail)),
    }
}

/// Sequence classes up to `max_n`; permutation classes up to
/// `min(max_n, 9)`. All must match the Fishburn coefficients.
pub const PERM_COUNT_CAP: usize = 9;

fn class_counts(max_n: usize) -> Result<Outcome> {
    let limits = Limits::default();
    let fish = fishburn_series(max_n.min(MAX_ORDER))?;
    let classes = [ClassId::Asc, ClassId::T21, ClassId::B, ClassId::C, ClassId::PermAvoidA, ClassId::PermAvoidB];
    let perm_max = max_n.min(PERM_COUNT_CAP);
    for n in 1..=max_n {
        let expected = fish.coeff(n).to_integer();
        for class in classes {
            if class.is_perm_class() && n > perm_max {
                continue;
            }
            let c = count(class, n, &limits)?;
            if expected != c.into() {
                return Ok(Err(Counterexample::new(n, format!("|{class}_{n}|"), &expected, c)));
            }
        }
    }
    Ok(Ok(format!(
        "six classes match the Fishburn numbers (sequences to n={max_n}, permutations to n={perm_max})"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(name: CheckName, max_n: Option<usize>, order: Option<usize>, points: Option<usize>) -> CheckReport {
        let params = CheckParams {
            max_n,
            order,
            points,
            seed: Some(3),
        };
        run_check_with(name, params, None).unwrap()
    }

    #[test]
    fn names_round_trip() {
        for c in CheckName::ALL {
            assert_eq!(c.name().parse::<CheckName>().unwrap(), c);
        }
        assert!(matches!("nope".parse::<CheckName>(), Err(Error::Usage(_))));
    }

    #[test]
    fn small_ranges_pass() {
        for c in CheckName::ALL {
            let r = quick(c, Some(5), Some(5), Some(2));
            assert!(r.passed(), "{c}: {:?}", r.counterexample);
        }
    }

    #[test]
    fn params_resolve_against_defaults() {
        let r = quick(CheckName::Main3, Some(3), Some(4), Some(9));
        assert_eq!(r.params, CheckParams { max_n: Some(3), ..Default::default() });
    }

    #[test]
    fn resource_limits() {
        let p = CheckParams {
            max_n: Some(13),
            ..Default::default()
        };
        assert!(matches!(run_check_with(CheckName::Main3, p, None), Err(Error::ResourceLimit(_))));
        let p = CheckParams {
            max_n: Some(11),
            ..Default::default()
        };
        assert!(matches!(run_check_with(CheckName::Foata, p, None), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn rep_does_not_pair_with_ides() {
        let i = dist_table(ClassId::Inv, 2, &[ASC, REP]).unwrap();
        let p = dist_table(ClassId::PermAll, 2, &[DES, StatName::Ides]).unwrap();
        assert!(!i.same_counts(&p));
        let q = dist_table(ClassId::PermAll, 2, &[DES, IASC]).unwrap();
        assert!(i.same_counts(&q));
    }

    #[test]
    fn table_mismatch_reports_first_tuple() {
        let a = dist_table(ClassId::Asc, 4, &[REP, MAX]).unwrap();
        let mut b = a.clone();
        b.counts.insert(vec![0, 0], 1u32.into());
        let cx = compare(&a, &b, "x").unwrap_err();
        assert_eq!(cx.object, "x tuple (0,0)");
        assert_eq!((cx.expected.as_str(), cx.actual.as_str()), ("0", "1"));
    }
}
