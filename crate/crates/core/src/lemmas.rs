//! Exhaustive contract checks for every decomposition map.
//!
//! For each length, a map is run over its whole enumerated domain, in
//! lexicographic order. The first violation is reported; checks stop there.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::Serialize;

use crate::class::{is_ascent, is_t21, ClassId};
use crate::decomp::{
    classify, ealm_shift, mpair_shift, phi_g, phi_g_inv, phi_p, phi_p_inv, psi_f, psi_f_inv, s2_reduce, s2_reduce_inv,
    s3_reduce, s3_reduce_inv, theta_r, theta_r_inv, vartheta, vartheta_inv, xi_s4, xi_s4_inv, zpair_shift, DecompMap,
    MapResult, SubsetLabel, SubsetScheme,
};
use crate::enumerate::{for_each, Limits};
use crate::error::Result;
use crate::seq::Seq;
use crate::stats::{asc, ealm, max, mpair, mpos, rep, zero, zpair, zpos};

/// A violated contract, with the offending input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaFailure {
    pub map: String,
    pub n: usize,
    pub input: String,
    pub detail: String,
}

impl fmt::Display for LemmaFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at n={} on {}: {}", self.map, self.n, self.input, self.detail)
    }
}

/// Domain and image sizes seen while checking one map at one length.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MapTally {
    pub domain: usize,
    pub image: usize,
}

type Outcome = std::result::Result<MapTally, LemmaFailure>;

fn members(class: ClassId, n: usize) -> Vec<Seq> {
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let limits = Limits {
        max_seq_len: n.max(1),
        max_perm_len: n.max(1),
    };
    for_each(class, n, &[], &limits, |s| out.push(Seq::from(s))).expect("within limits");
    out
}

fn label(s: &Seq, scheme: SubsetScheme) -> Option<SubsetLabel> {
    classify(s, scheme).ok()
}

struct Ctx {
    map: DecompMap,
    n: usize,
}

impl Ctx {
    fn fail(&self, input: impl fmt::Display, detail: impl Into<String>) -> LemmaFailure {
        LemmaFailure {
            map: self.map.name().to_string(),
            n: self.n,
            input: input.to_string(),
            detail: detail.into(),
        }
    }

    fn check(&self, ok: bool, input: impl fmt::Display, detail: impl FnOnce() -> String) -> std::result::Result<(), LemmaFailure> {
        if ok {
            Ok(())
        } else {
            Err(self.fail(input, detail()))
        }
    }

    fn run<T>(&self, input: impl fmt::Display, r: Result<T>) -> std::result::Result<T, LemmaFailure> {
        r.map_err(|e| self.fail(input, format!("map raised {e}")))
    }
}

fn chi(b: bool) -> u32 {
    b as u32
}

fn pair(r: &MapResult) -> String {
    match r.side_index {
        Some(i) => format!("({}, {i})", r.output),
        None => r.output.to_string(),
    }
}

/// Checks one map over its whole domain at length `n`.
pub fn verify_map(map: DecompMap, n: usize) -> Outcome {
    let ctx = Ctx { map, n };
    match map {
        DecompMap::PhiP => verify_phi_p(&ctx),
        DecompMap::XiS4 => verify_xi_s4(&ctx),
        DecompMap::S2Reduce => verify_s2(&ctx),
        DecompMap::S3Reduce => verify_s3(&ctx),
        DecompMap::EalmShift => verify_ealm_shift(&ctx),
        DecompMap::PsiF => verify_psi_f(&ctx),
        DecompMap::MpairShift => verify_mpair_shift(&ctx),
        DecompMap::Vartheta => verify_vartheta(&ctx),
        DecompMap::PhiG => verify_phi_g(&ctx),
        DecompMap::ZpairShift => verify_zpair_shift(&ctx),
        DecompMap::ThetaR => verify_theta_r(&ctx),
    }
}

/// Runs every map for lengths `1..=max_n`, ascending.
pub fn lemma_suite(max_n: usize) -> std::result::Result<Vec<(DecompMap, usize, MapTally)>, LemmaFailure> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for map in DecompMap::ALL {
            out.push((map, n, verify_map(map, n)?));
        }
    }
    Ok(out)
}

/// Shared tail of every check: injectivity, image size and inverse.
fn finish(
    ctx: &Ctx,
    seen: HashSet<MapResult>,
    domain: usize,
    expected_image: usize,
) -> Outcome {
    if seen.len() != domain {
        return Err(ctx.fail("<domain>", format!("{domain} inputs gave only {} distinct outputs", seen.len())));
    }
    if seen.len() != expected_image {
        return Err(ctx.fail("<domain>", format!("image has {} elements, codomain has {expected_image}", seen.len())));
    }
    Ok(MapTally { domain, image: seen.len() })
}

fn insert_unique(ctx: &Ctx, seen: &mut HashSet<MapResult>, s: &Seq, r: &MapResult) -> std::result::Result<(), LemmaFailure> {
    ctx.check(seen.insert(r.clone()), s, || format!("output {} is hit twice", pair(r)))
}

fn verify_phi_p(ctx: &Ctx) -> Outcome {
    let n = ctx.n;
    if n < 2 {
        return Ok(MapTally::default());
    }
    let mut seen = HashSet::new();
    let mut domain = 0;
    for s in members(ClassId::Asc, n) {
        if label(&s, SubsetScheme::AscP) != Some(SubsetLabel::P) {
            continue;
        }
        domain += 1;
        let t = ctx.run(&s, phi_p(&s))?;
        let (v, w) = (s.values(), t.values());
        ctx.check(w.len() == n - 1 && is_ascent(w), &s, || format!("output {t} is not in A_{}", n - 1))?;
        ctx.check(
            asc(v) == asc(w) + 1 && rep(v) == rep(w) && ealm(v) == ealm(w) && max(v) == max(w) + 1 && zero(v) == zero(w),
            &s,
            || format!("statistics of {t} break (asc+1, rep, ealm, max+1, zero)"),
        )?;
        let back = ctx.run(&t, phi_p_inv(&t))?;
        ctx.check(back == s, &s, || format!("inverse of {t} gave {back}"))?;
        insert_unique(ctx, &mut seen, &s, &MapResult::plain(t))?;
    }
    finish(ctx, seen, domain, members(ClassId::Asc, n - 1).len())
}

fn verify_xi_s4(ctx: &Ctx) -> Outcome {
    let n = ctx.n;
    let all = members(ClassId::Asc, n);
    let mut seen = HashSet::new();
    let mut domain = 0;
    for s in &all {
        if label(s, SubsetScheme::AscS) != Some(SubsetLabel::S4) {
            continue;
        }
        domain += 1;
        let r = ctx.run(s, xi_s4(s))?;
        let i = r.side_index.expect("pair output");
        let (v, w) = (s.values(), r.output.values());
        ctx.check(
            is_ascent(w) && label(&r.output, SubsetScheme::AscP) == Some(SubsetLabel::Pc) && i < ealm(w) && i == ealm(v),
            s,
            || format!("output {} is not a pair (s*, i) with s* outside P and i < ealm(s*)", pair(&r)),
        )?;
        ctx.check(
            asc(v) == asc(w) && rep(v) == rep(w) && max(v) + 1 == max(w) && zero(v) == zero(w) + chi(i == 0),
            s,
            || format!("statistics of {} break (asc, rep, max-1, zero+[i=0])", pair(&r)),
        )?;
        let back = ctx.run(&r.output, xi_s4_inv(&r.output, i))?;
        ctx.check(&back == s, s, || format!("inverse of {} gave {back}", pair(&r)))?;
        insert_unique(ctx, &mut seen, s, &r)?;
    }
    let codomain = all
        .iter()
        .filter(|t| label(t, SubsetScheme::AscP) == Some(SubsetLabel::Pc))
        .map(|t| ealm(t.values()) as usize)
        .sum();
    finish(ctx, seen, domain, codomain)
}

fn verify_s2(ctx: &Ctx) -> Outcome {
    let n = ctx.n;
    let mut seen = HashSet::new();
    let mut domain = 0;
    for s in members(ClassId::Asc, n) {
        if label(&s, SubsetScheme::AscS) != Some(SubsetLabel::S2) {
            continue;
        }
        domain += 1;
        let r = ctx.run(&s, s2_reduce(&s))?;
        let i = r.side_index.expect("pair output");
        let (v, w) = (s.values(), r.output.values());
        ctx.check(
            w.len() == n - 1 && is_ascent(w) && w.len() > max(w) as usize && ealm(w) <= i && i < max(w),
            &s,
            || format!("output {} is not a pair with ealm <= i < max", pair(&r)),
        )?;
        ctx.check(
            asc(v) == asc(w) && rep(v) == rep(w) + 1 && max(v) == max(w) && zero(v) == zero(w) + chi(i == 0),
            &s,
            || format!("statistics of {} break (asc, rep+1, max, zero+[i=0])", pair(&r)),
        )?;
        let back = ctx.run(&r.output, s2_reduce_inv(&r.output, i))?;
        ctx.check(back == s, &s, || format!("inverse of {} gave {back}", pair(&r)))?;
        insert_unique(ctx, &mut seen, &s, &r)?;
    }
    let codomain = members(ClassId::Asc, n - 1)
        .iter()
        .map(|t| t.values())
        .filter(|w| w.len() > max(w) as usize)
        .map(|w| (max(w) - ealm(w)) as usize)
        .sum();
    finish(ctx, seen, domain, codomain)
}

fn verify_s3(ctx: &Ctx) -> Outcome {
    let n = ctx.n;
    let mut seen = HashSet::new();
    let mut domain = 0;
    for s in members(ClassId::Asc, n) {
        if label(&s, SubsetScheme::AscS) != Some(SubsetLabel::S3) {
            continue;
        }
        domain += 1;
        let r = ctx.run(&s, s3_reduce(&s))?;
        let i = r.side_index.expect("pair output");
        let (v, w) = (s.values(), r.output.values());
        ctx.check(w.len() == n - 1 && is_ascent(w) && i < ealm(w), &s, || {
            format!("output {} is not a pair with i < ealm", pair(&r))
        })?;
        ctx.check(
            asc(v) == asc(w) + 1 && rep(v) == rep(w) + 1 && max(v) == max(w) && zero(v) == zero(w) + chi(i == 0),
            &s,
            || format!("statistics of {} break (asc+1, rep+1, max, zero+[i=0])", pair(&r)),
        )?;
        let back = ctx.run(&r.output, s3_reduce_inv(&r.output, i))?;
        ctx.check(back == s, &s, || format!("inverse of {} gave {back}", pair(&r)))?;
        insert_unique(ctx, &mut seen, &s, &r)?;
    }
    let codomain = members(ClassId::Asc, n - 1).iter().map(|t| ealm(t.values()) as usize).sum();
    finish(ctx, seen, domain, codomain)
}

fn in_s123(s: &Seq) -> bool {
    matches!(label(s, SubsetScheme::AscS), Some(SubsetLabel::S1 | SubsetLabel::S2 | SubsetLabel::S3))
}

/// Checks that a count keyed by `(side, k, p)` does not depend on `side`
/// for `side < p`, and matches `reference[(k, p)]`.
fn check_independent(
    ctx: &Ctx,
    counts: &HashMap<(u32, u32, u32), usize>,
    reference: &HashMap<(u32, u32), usize>,
    what: &str,
) -> std::result::Result<(), LemmaFailure> {
    let mut keys: Vec<(u32, u32)> = counts.keys().map(|&(_, k, p)| (k, p)).chain(reference.keys().copied()).collect();
    keys.sort_unstable();
    keys.dedup();
    for (k, p) in keys {
        let expected = reference.get(&(k, p)).copied().unwrap_or(0);
        for side in 0..p {
            let got = counts.get(&(side, k, p)).copied().unwrap_or(0);
            if got != expected {
                return Err(ctx.fail(
                    format!("{what}={side}, k={k}, p={p}"),
                    format!("class has {got} members, the shorter reference class has {expected}"),
                ));
            }
        }
    }
    Ok(())
}

fn tally<F: Fn(&[u32]) -> (u32, u32)>(class: ClassId, n: usize, key: F) -> HashMap<(u32, u32), usize> {
    let mut out = HashMap::new();
    for s in members(class, n) {
        *out.entry(key(s.values())).or_insert(0) += 1;
    }
    out
}

fn verify_ealm_shift(ctx: &Ctx) -> Outcome {
    let n = ctx.n;
    let mut seen = HashSet::new();
    let mut domain = 0;
    let mut counts = HashMap::new();
    let mut down_domain = 0;
    for s in members(ClassId::Asc, n) {
        if !in_s123(&s) {
            continue;
        }
        let v = s.values();
        let (i, p) = (ealm(v), max(v));
        *counts.entry((i, rep(v) - 1, p)).or_insert(0) += 1;
        if i >= 1 {
            down_domain += 1;
        }
        if i + 1 >= p {
            continue;
        }
        domain += 1;
        let t = ctx.run(&s, ealm_shift(&s, true))?;
        let w = t.values();
        ctx.check(is_ascent(w) && in_s123(&t), &s, || format!("output {t} left S1, S2, S3"))?;
        ctx.check(ealm(w) == i + 1 && rep(w) == rep(v) && max(w) == p, &s, || {
            format!("statistics of {t} break (ealm+1, rep, max)")
        })?;
        let back = ctx.run(&t, ealm_shift(&t, false))?;
        ctx.check(back == s, &s, || format!("shifting {t} down gave {back}"))?;
        insert_unique(ctx, &mut seen, &s, &MapResult::plain(t))?;
    }
    if n >= 2 {
        let reference = tally(ClassId::Asc, n - 1, |w| (rep(w), max(w)));
        check_independent(ctx, &counts, &reference, "ealm")?;
    }
    finish(ctx, seen, domain, down_domain)
}

fn verify_psi_f(ctx: &Ctx) -> Outcome {
    let n = ctx.n;
    if n < 2 {
        return Ok(MapTally::default());
    }
    let mut seen = HashSet::new();
    let mut domain = 0;
    for s in members(ClassId::T21, n) {
        if label(&s, SubsetScheme::TF) != Some(SubsetLabel::F) {
            continue;
        }
        domain += 1;
        let t = ctx.run(&s, psi_f(&s))?;
        let (v, w) = (s.values(), t.values());
        ctx.check(w.len() == n - 1 && is_t21(w), &s, || format!("output {t} is not in T_{}", n - 1))?;
        ctx.check(max(v) == max(w) + 1 && rep(v) == rep(w) && mpair(v) == mpair(w), &s, || {
            format!("statistics of {t} break (max-1, rep, mpair)")
        })?;
        let back = ctx.run(&t, psi_f_inv(&t))?;
        ctx.check(back == s, &s, || format!("inverse of {t} gave {back}"))?;
        insert_unique(ctx, &mut seen, &s, &MapResult::plain(t))?;
    }
    finish(ctx, seen, domain, members(ClassId::T21, n - 1).len())
}

fn in_j1(s: &Seq) -> bool {
    label(s, SubsetScheme::TJ) == Some(SubsetLabel::J1)
}

fn verify_mpair_shift(ctx: &Ctx) -> Outcome {
    let n = ctx.n;
    let mut seen = HashSet::new();
    let mut domain = 0;
    let mut counts = HashMap::new();
    let mut down_domain = 0;
    for s in members(ClassId::T21, n) {
        if !in_j1(&s) {
            continue;
        }
        let v = s.values();
        let (i, p) = (mpair(v).expect("mpair exists on J1"), max(v));
        *counts.entry((i, rep(v) - 1, p)).or_insert(0) += 1;
        if i >= 1 {
            down_domain += 1;
        }
        if i + 1 >= p {
            continue;
        }
        domain += 1;
        let t = ctx.run(&s, mpair_shift(&s, true))?;
        let w = t.values();
        ctx.check(w.len() == n && is_t21(w) && in_j1(&t), &s, || format!("output {t} left T_n and J1"))?;
        ctx.check(
            mpair(w) == Some(i + 1) && rep(w) == rep(v) && max(w) == p && mpos(w) == Some(0),
            &s,
            || format!("statistics of {t} break (mpair+1, rep, max, mpos=0)"),
        )?;
        let back = ctx.run(&t, mpair_shift(&t, false))?;
        ctx.check(back == s, &s, || format!("shifting {t} down gave {back}"))?;
        insert_unique(ctx, &mut seen, &s, &MapResult::plain(t))?;
    }
    if n >= 2 {
        let reference = tally(ClassId::T21, n - 1, |w| (rep(w), max(w)));
        check_independent(ctx, &counts, &reference, "mpair")?;
    }
    finish(ctx, seen, domain, down_domain)
}

fn verify_vartheta(ctx: &Ctx) -> Outcome {
    let n = ctx.n;
    let all = members(ClassId::T21, n);
    let mut seen = HashSet::new();
    let mut domain = 0;
    for s in &all {
        if label(s, SubsetScheme::TF) != Some(SubsetLabel::Fc) {
            continue;
        }
        let v = s.values();
        let j = mpair(v).expect("mpair exists outside the increasing sequence");
        for i in 0..j {
            domain += 1;
            let input = format!("({s}, {i})");
            let t = ctx.run(&input, vartheta(s, i))?;
            let w = t.values();
            ctx.check(
                w.len() == n && is_t21(w) && label(&t, SubsetScheme::TJ) == Some(SubsetLabel::J2),
                &input,
                || format!("output {t} is not in T_n and J2"),
            )?;
            ctx.check(
                mpair(w) == Some(i) && rep(w) == rep(v) && max(w) + 1 == max(v),
                &input,
                || format!("statistics of {t} break (mpair=i, rep, max-1)"),
            )?;
            let back = ctx.run(&t, vartheta_inv(&t))?;
            let expected = MapResult::with_side(s.clone(), i);
            ctx.check(back == expected, &input, || format!("inverse of {t} gave {}", pair(&back)))?;
            insert_unique(ctx, &mut seen, s, &MapResult::plain(t))?;
        }
    }
    let codomain = all
        .iter()
        .filter(|t| t.len() > max(t.values()) as usize && label(t, SubsetScheme::TJ) == Some(SubsetLabel::J2))
        .count();
    finish(ctx, seen, domain, codomain)
}

fn verify_phi_g(ctx: &Ctx) -> Outcome {
    let n = ctx.n;
    if n < 2 {
        return Ok(MapTally::default());
    }
    let mut seen = HashSet::new();
    let mut domain = 0;
    for s in members(ClassId::Asc, n) {
        if label(&s, SubsetScheme::AscG) != Some(SubsetLabel::G) {
            continue;
        }
        domain += 1;
        let t = ctx.run(&s, phi_g(&s))?;
        let (v, w) = (s.values(), t.values());
        ctx.check(w.len() == n - 1 && is_ascent(w), &s, || format!("output {t} is not in A_{}", n - 1))?;
        ctx.check(zero(v) == zero(w) + 1 && asc(v) == asc(w) && zpair(v) == zpair(w), &s, || {
            format!("statistics of {t} break (zero-1, asc, zpair)")
        })?;
        let back = ctx.run(&t, phi_g_inv(&t))?;
        ctx.check(back == s, &s, || format!("inverse of {t} gave {back}"))?;
        insert_unique(ctx, &mut seen, &s, &MapResult::plain(t))?;
    }
    finish(ctx, seen, domain, members(ClassId::Asc, n - 1).len())
}

fn in_r1(s: &Seq) -> bool {
    label(s, SubsetScheme::AscR) == Some(SubsetLabel::R1)
}

fn verify_zpair_shift(ctx: &Ctx) -> Outcome {
    let n = ctx.n;
    let mut seen = HashSet::new();
    let mut domain = 0;
    let mut counts = HashMap::new();
    let mut down_domain = 0;
    for s in members(ClassId::Asc, n) {
        if !in_r1(&s) {
            continue;
        }
        let v = s.values();
        let (i, p) = (zpair(v).expect("zpair exists on R1"), zero(v));
        *counts.entry((i, asc(v) - 1, p)).or_insert(0) += 1;
        if i >= 1 {
            down_domain += 1;
        }
        if i + 1 >= p {
            continue;
        }
        domain += 1;
        let t = ctx.run(&s, zpair_shift(&s, true))?;
        let w = t.values();
        ctx.check(w.len() == n && is_ascent(w) && in_r1(&t), &s, || format!("output {t} left A_n and R1"))?;
        ctx.check(
            zpair(w) == Some(i + 1) && asc(w) == asc(v) && zero(w) == p && zpos(w) == Some(0),
            &s,
            || format!("statistics of {t} break (zpair+1, asc, zero, zpos=0)"),
        )?;
        let back = ctx.run(&t, zpair_shift(&t, false))?;
        ctx.check(back == s, &s, || format!("shifting {t} down gave {back}"))?;
        insert_unique(ctx, &mut seen, &s, &MapResult::plain(t))?;
    }
    if n >= 2 {
        let reference = tally(ClassId::Asc, n - 1, |w| (asc(w), zero(w)));
        check_independent(ctx, &counts, &reference, "zpair")?;
    }
    finish(ctx, seen, domain, down_domain)
}

fn verify_theta_r(ctx: &Ctx) -> Outcome {
    let n = ctx.n;
    let all = members(ClassId::Asc, n);
    let mut seen = HashSet::new();
    let mut domain = 0;
    for s in &all {
        if label(s, SubsetScheme::AscG) != Some(SubsetLabel::Gc) {
            continue;
        }
        let v = s.values();
        let j = zpair(v).expect("zpair exists outside the zero sequence");
        for i in 0..j {
            domain += 1;
            let input = format!("({s}, {i})");
            let t = ctx.run(&input, theta_r(s, i))?;
            let w = t.values();
            ctx.check(
                w.len() == n && is_ascent(w) && label(&t, SubsetScheme::AscR) == Some(SubsetLabel::R2),
                &input,
                || format!("output {t} is not in A_n and R2"),
            )?;
            ctx.check(
                zpair(w) == Some(i) && asc(w) == asc(v) && zero(w) + 1 == zero(v),
                &input,
                || format!("statistics of {t} break (zpair=i, asc, zero-1)"),
            )?;
            let back = ctx.run(&t, theta_r_inv(&t))?;
            let expected = MapResult::with_side(s.clone(), i);
            ctx.check(back == expected, &input, || format!("inverse of {t} gave {}", pair(&back)))?;
            insert_unique(ctx, &mut seen, s, &MapResult::plain(t))?;
        }
    }
    let codomain = all
        .iter()
        .filter(|t| t.len() > zero(t.values()) as usize && label(t, SubsetScheme::AscR) == Some(SubsetLabel::R2))
        .count();
    finish(ctx, seen, domain, codomain)
}
