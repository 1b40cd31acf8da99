//! Numerical wall candidates for `v = (−R, 0, D, 0)` at β = 0.
//!
//! A candidate is a destabilizing character `A = (r, c, d, e)` with quotient
//! `B = v − A`. Its wall is the curve `(s + 1/6)·α² = e/c` in the `(α², s)`
//! slice. For fixed `(c, d, e)` every filter is linear in `r`, so the admissible
//! ranks form an interval that is computed directly rather than scanned.
//!
//! Both `A` and `B` must pass the integrality tests. For integral `v` the second
//! test is implied by the first; for half-integer `D` no split survives.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chern::ChernCharacter;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::slope::{q_form_at, SlicePoint};

/// What is known about a candidate beyond its numerics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum CandidateStatus {
    #[default]
    Numerical,
    Actual,
    Vanishing,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WallCandidate {
    pub sub: ChernCharacter,
    pub quot: ChernCharacter,
    pub wall_constant: Rational,
    pub alpha0_sq: Rational,
    pub rank_range: (i64, i64),
    pub status: CandidateStatus,
}

impl WallCandidate {
    pub fn rank(&self) -> i64 {
        self.sub.ch0.floor_i64().expect("rank fits in i64")
    }

    /// `(c, d, e, r)`, the canonical member order.
    fn sort_key(&self) -> (Rational, Rational, Rational, Rational) {
        (
            self.sub.ch1.clone(),
            self.sub.ch2.clone(),
            self.sub.ch3.clone(),
            self.sub.ch0.clone(),
        )
    }
}

/// Candidates sharing one wall constant, hence one curve in the slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallFamily {
    pub wall_constant: Rational,
    pub members: Vec<WallCandidate>,
}

/// One `(c, d, e)` class of a family with its whole rank interval.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankGroup {
    pub c: Rational,
    pub d: Rational,
    pub e: Rational,
    pub rank_range: (i64, i64),
}

impl WallFamily {
    pub fn alpha0_sq(&self) -> Rational {
        &self.wall_constant * 6
    }

    /// Distinct `(c, d, e)` classes in member order.
    pub fn groups(&self) -> Vec<RankGroup> {
        let mut out: Vec<RankGroup> = Vec::new();
        for m in &self.members {
            let g = RankGroup {
                c: m.sub.ch1.clone(),
                d: m.sub.ch2.clone(),
                e: m.sub.ch3.clone(),
                rank_range: m.rank_range,
            };
            if out.last() != Some(&g) {
                out.push(g);
            }
        }
        out
    }

    pub fn contains(&self, sub: &ChernCharacter) -> bool {
        self.members.iter().any(|m| &m.sub == sub)
    }

    /// Marks the member with the given subobject; returns false if absent.
    pub fn annotate(&mut self, sub: &ChernCharacter, status: CandidateStatus) -> bool {
        match self.members.iter_mut().find(|m| &m.sub == sub) {
            Some(m) => {
                m.status = status;
                true
            }
            None => false,
        }
    }
}

/// A destabilizer with `ch1 = 0`; its λ agrees with λ(v) everywhere.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegenerateCandidate {
    pub sub: ChernCharacter,
    pub quot: ChernCharacter,
}

impl DegenerateCandidate {
    pub const NOTE: &'static str = "coincides with λ(E) everywhere (no curve)";
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// The constant K of the support-property form.
    pub k: Rational,
    /// Drop candidates with `e/c < 1/6`, which lie inside the quiver region.
    pub innermost_cutoff: bool,
    /// Worker threads; `None` reads `WALLLAB_THREADS`, else uses rayon's default.
    pub threads: Option<usize>,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            k: Rational::one(),
            innermost_cutoff: true,
            threads: None,
        }
    }
}

/// Families of [`enumerate_with`], plus the candidates removed by the cutoff.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub families: Vec<WallFamily>,
    pub below_cutoff: Vec<WallCandidate>,
}

/// Checks `R ≥ 0`, `D > 0` and `2D ∈ ℤ`.
pub fn validate_input(rank: i64, degree: &Rational) -> Result<()> {
    if rank < 0 {
        return Err(Error::Parameter(format!("rank R must be nonnegative, got {rank}")));
    }
    if !degree.is_positive() {
        return Err(Error::Parameter(format!("degree D must be positive, got {degree}")));
    }
    if !(degree * 2).is_integer() {
        return Err(Error::Parameter(format!("degree D must be a half-integer, got {degree}")));
    }
    Ok(())
}

pub fn enumerate(rank: i64, degree: &Rational) -> Result<Vec<WallFamily>> {
    Ok(enumerate_with(rank, degree, &EnumerateOptions::default())?.families)
}

pub fn enumerate_with(rank: i64, degree: &Rational, opts: &EnumerateOptions) -> Result<Enumeration> {
    validate_input(rank, degree)?;
    let two_d = (degree * 2).floor_i64().ok_or_else(|| Error::Parameter("degree too large".into()))?;
    let half_steps: Vec<i64> = (1..two_d).collect();

    let work = || -> Result<Vec<WallCandidate>> {
        let chunks: Vec<Result<Vec<WallCandidate>>> = half_steps
            .par_iter()
            .map(|&dd| candidates_at(rank, degree, &Rational::new(dd, 2), &opts.k))
            .collect();
        let mut all = Vec::new();
        for chunk in chunks {
            all.extend(chunk?);
        }
        Ok(all)
    };

    let threads = opts.threads.or_else(threads_from_env);
    let all = match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?
            .install(work)?,
        None => work()?,
    };

    let cutoff = Rational::new(1, 6);
    let (kept, below_cutoff): (Vec<_>, Vec<_>) = all
        .into_iter()
        .partition(|m| !opts.innermost_cutoff || m.wall_constant >= cutoff);

    let mut below_cutoff = below_cutoff;
    below_cutoff.sort_by_key(|m| m.sort_key());
    Ok(Enumeration {
        families: group_families(kept),
        below_cutoff,
    })
}

fn threads_from_env() -> Option<usize> {
    std::env::var("WALLLAB_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
}

/// Groups by wall constant, descending, members by `(c, d, e, r)`.
fn group_families(members: Vec<WallCandidate>) -> Vec<WallFamily> {
    let mut by_w: BTreeMap<Rational, Vec<WallCandidate>> = BTreeMap::new();
    for m in members {
        by_w.entry(m.wall_constant.clone()).or_default().push(m);
    }
    by_w.into_iter()
        .rev()
        .map(|(w, mut members)| {
            members.sort_by_key(|m| m.sort_key());
            WallFamily { wall_constant: w, members }
        })
        .collect()
}

/// All candidates with the given `d`.
fn candidates_at(rank: i64, degree: &Rational, d: &Rational, k: &Rational) -> Result<Vec<WallCandidate>> {
    let dq = degree - d;
    let bound = (d * d * 4).min(&dq * &dq * 4);
    let c_max = bound.floor_i64().ok_or_else(|| Error::Parameter("degree too large".into()))?;
    let d_is_int = d.is_integer();
    let mut out = Vec::new();
    for c in 1..=c_max {
        if (c % 2 == 0) != d_is_int {
            continue;
        }
        let cq = Rational::from_integer(c);
        // e runs over c/6 + ℤ, starting at its least positive element.
        let mut six_e = c.rem_euclid(6);
        if six_e == 0 {
            six_e = 6;
        }
        while Rational::from_integer(c * six_e) <= bound {
            let e = Rational::new(six_e, 6);
            let probe = ChernCharacter::new(Rational::zero(), cq.clone(), d.clone(), e.clone());
            let probe_quot = ChernCharacter::new(Rational::zero(), -&cq, dq.clone(), -&e);
            if probe.integrality_beta0() && probe_quot.integrality_beta0() {
                if let Some((lo, hi)) = rank_interval(rank, degree, &cq, d, &e, k) {
                    let w = &e / &cq;
                    let a0 = &w * 6;
                    let v = ChernCharacter::v(rank, degree);
                    for r in lo..=hi {
                        let sub = ChernCharacter::new(Rational::from_integer(r), cq.clone(), d.clone(), e.clone());
                        let quot = &v - &sub;
                        out.push(WallCandidate {
                            sub,
                            quot,
                            wall_constant: w.clone(),
                            alpha0_sq: a0.clone(),
                            rank_range: (lo, hi),
                            status: CandidateStatus::Numerical,
                        });
                    }
                }
            }
            six_e += 6;
        }
    }
    Ok(out)
}

/// Affine constraint `slope·r + offset ≥ 0`.
struct Affine {
    slope: Rational,
    offset: Rational,
}

/// The filters on `r` for fixed `(c, d, e)`, evaluated at `α² = 6e/c`.
/// At `α² = 0` none of them depends on `r` and all reduce to the bounds on `d`
/// and `6ce` that the loops already enforce.
fn rank_constraints(rank: i64, degree: &Rational, c: &Rational, d: &Rational, e: &Rational, k: &Rational) -> Vec<Affine> {
    let a = e * 6 / c;
    let ka = k * &a;
    let rr = Rational::from_integer(rank);
    let dq = degree - d;
    let half_a = &a * Rational::new(1, 2);
    let base = c * e * 6;
    vec![
        // Q(A) = Ka(c² − 2rd) + 4d² − 6ce
        Affine {
            slope: -(&ka * d * 2),
            offset: &ka * c * c + d * d * 4 - &base,
        },
        // Q(B) with B = (−R−r, −c, D−d, −e)
        Affine {
            slope: &ka * &dq * 2,
            offset: &ka * c * c + &ka * &rr * &dq * 2 + &dq * &dq * 4 - &base,
        },
        // d − (a/2)r ≥ 0
        Affine {
            slope: -half_a.clone(),
            offset: d.clone(),
        },
        // D + (a/2)R − d + (a/2)r ≥ 0
        Affine {
            slope: half_a.clone(),
            offset: &dq + &half_a * &rr,
        },
    ]
}

/// The closed integer interval of ranks passing every filter, if nonempty.
pub fn rank_interval(
    rank: i64,
    degree: &Rational,
    c: &Rational,
    d: &Rational,
    e: &Rational,
    k: &Rational,
) -> Option<(i64, i64)> {
    let mut lo: Option<Rational> = None;
    let mut hi: Option<Rational> = None;
    for Affine { slope, offset } in rank_constraints(rank, degree, c, d, e, k) {
        match slope.signum() {
            0 => {
                if offset.is_negative() {
                    return None;
                }
            }
            1 => {
                let b = -offset / &slope;
                lo = Some(match lo {
                    Some(x) => x.max(b),
                    None => b,
                });
            }
            _ => {
                let b = -offset / &slope;
                hi = Some(match hi {
                    Some(x) => x.min(b),
                    None => b,
                });
            }
        }
    }
    // The category constraints always bound both sides since a = 6e/c > 0.
    let lo = lo?.ceil_i64()?;
    let hi = hi?.floor_i64()?;
    (lo <= hi).then_some((lo, hi))
}

/// The explicit rank bounds `−c(2D−2d)/(6e) − R ≤ r ≤ c(2d)/(6e)`.
pub fn explicit_rank_bounds(rank: i64, degree: &Rational, c: &Rational, d: &Rational, e: &Rational) -> (Rational, Rational) {
    let six_e = e * 6;
    let lo = -(c * (degree - d) * 2) / &six_e - rank;
    let hi = c * d * 2 / &six_e;
    (lo, hi)
}

/// Whether a full character passes every filter, checked directly with the
/// matrix form. Used as a cross-check of [`rank_interval`].
pub fn passes_filters(rank: i64, degree: &Rational, sub: &ChernCharacter, k: &Rational) -> bool {
    let (r, c, d, e) = (&sub.ch0, &sub.ch1, &sub.ch2, &sub.ch3);
    if !r.is_integer() || !c.is_integer() || !(d * 2).is_integer() || !(e * 6).is_integer() {
        return false;
    }
    if !d.is_positive() || d >= degree || !c.is_positive() || !e.is_positive() {
        return false;
    }
    let dq = degree - d;
    if c * e * 6 > (d * d * 4).min(&dq * &dq * 4) {
        return false;
    }
    let v = ChernCharacter::v(rank, degree);
    let quot = &v - sub;
    if !sub.integrality_beta0() || !quot.integrality_beta0() {
        return false;
    }
    let (lo, hi) = explicit_rank_bounds(rank, degree, c, d, e);
    if r < &lo || r > &hi {
        return false;
    }
    let zero = Rational::zero();
    let rr = Rational::from_integer(rank);
    for a in [Rational::zero(), e * 6 / c] {
        if q_form_at(sub, sub, &a, k, &zero).is_negative() || q_form_at(&quot, &quot, &a, k, &zero).is_negative() {
            return false;
        }
        let half_a = &a * Rational::new(1, 2);
        let x = d - &half_a * r;
        if x.is_negative() || x > degree + &half_a * &rr {
            return false;
        }
    }
    true
}

/// Candidates with `ch1 = 0`: `(r, 0, d, 0)` with `d ∈ ℤ`, `0 ≤ d ≤ D`, `0 ≤ −r ≤ R`,
/// excluding 0 and v.
pub fn degenerate_c0(rank: i64, degree: &Rational) -> Result<Vec<DegenerateCandidate>> {
    validate_input(rank, degree)?;
    let v = ChernCharacter::v(rank, degree);
    let d_max = degree.floor_i64().ok_or_else(|| Error::Parameter("degree too large".into()))?;
    let mut out = Vec::new();
    for d in 0..=d_max {
        for r in -rank..=0 {
            let sub = ChernCharacter::from_ints([r, 0, d, 0]);
            if sub.is_zero() || sub == v {
                continue;
            }
            let quot = &v - &sub;
            out.push(DegenerateCandidate { sub, quot });
        }
    }
    out.sort();
    Ok(out)
}

/// Points `(α², w/α² − 1/6)` on the wall with constant `w`.
pub fn wall_curve_samples(w: &Rational, alpha_sq_grid: &[Rational]) -> Result<Vec<SlicePoint>> {
    if !w.is_positive() {
        return Err(Error::Parameter(format!("wall constant must be positive, got {w}")));
    }
    let limit = w * 6;
    alpha_sq_grid
        .iter()
        .map(|a| {
            if !a.is_positive() || *a >= limit {
                return Err(Error::Parameter(format!(
                    "α² = {a} lies outside (0, {limit}) for wall constant {w}"
                )));
            }
            let s = w / a - Rational::new(1, 6);
            SlicePoint::new(a.clone(), s)
        })
        .collect()
}

/// Applies `(A, B) ↦ (B^∨[2], A^∨[2])` to every member.
pub fn dual_family(f: &WallFamily, rank: i64, degree: &Rational) -> WallFamily {
    let v = ChernCharacter::v(rank, degree);
    let mut members: Vec<WallCandidate> = f
        .members
        .iter()
        .map(|m| {
            let sub = m.quot.dual_shift2();
            let quot = &v - &sub;
            let (lo, hi) = m.rank_range;
            WallCandidate {
                sub,
                quot,
                wall_constant: m.wall_constant.clone(),
                alpha0_sq: m.alpha0_sq.clone(),
                rank_range: (-rank - hi, -rank - lo),
                status: m.status,
            }
        })
        .collect();
    members.sort_by_key(|m| m.sort_key());
    WallFamily {
        wall_constant: f.wall_constant.clone(),
        members,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomVanishing {
    /// Largest `α₀² = 6e/c` over all families, if there are any.
    pub max_alpha0_sq: Option<Rational>,
    /// Smallest positive integer `n` with `n² > max α₀²`.
    pub n_min: i64,
}

pub fn max_alpha0(rank: i64, degree: &Rational) -> Result<HomVanishing> {
    Ok(max_alpha0_of(&enumerate(rank, degree)?))
}

pub fn max_alpha0_of(families: &[WallFamily]) -> HomVanishing {
    let max = families.iter().map(|f| f.alpha0_sq()).max();
    let n_min = match &max {
        None => 1,
        Some(m) => {
            let mut n = 1;
            while Rational::from_integer(n * n) <= *m {
                n += 1;
            }
            n
        }
    };
    HomVanishing {
        max_alpha0_sq: max,
        n_min,
    }
}
