//! Behaviour of λ along a vertical line `β = β̄` as `α → ∞`, and the numerical
//! conditions for asymptotic stability.
//!
//! With `a = α²` and `k = s + 1/6`, `λ(X) = N_X(a)/D_X(a)` where
//! `N_X = x₃ − k·a·x₁` and `D_X = x₂ − a·x₀/2` in twisted coordinates. The
//! difference `λ(F) − λ(A)` is a ratio of polynomials of degree at most two.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize, Serializer};

use crate::chern::ChernCharacter;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::slope::{delta, mu, SlopeValue};

/// Polynomial in `a`, lowest degree first.
type Poly = [Rational; 3];

fn degree(p: &Poly) -> Option<usize> {
    (0..3).rev().find(|&i| !p[i].is_zero())
}

fn mul_linear(x: &Poly, y: &Poly) -> Poly {
    [
        &x[0] * &y[0],
        &x[0] * &y[1] + &x[1] * &y[0],
        &x[1] * &y[1],
    ]
}

fn sub(x: &Poly, y: &Poly) -> Poly {
    [&x[0] - &y[0], &x[1] - &y[1], &x[2] - &y[2]]
}

fn numerator_poly(t: &ChernCharacter, k: &Rational) -> Poly {
    [t.ch3.clone(), -(k * &t.ch1), Rational::zero()]
}

fn denominator_poly(t: &ChernCharacter) -> Poly {
    [t.ch2.clone(), -(&t.ch0 * Rational::new(1, 2)), Rational::zero()]
}

/// Power of α in the leading term, or the whole difference vanishing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeadingOrder {
    Exponent(i32),
    All,
}

impl Serialize for LeadingOrder {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            LeadingOrder::Exponent(n) => serializer.serialize_i32(*n),
            LeadingOrder::All => serializer.serialize_str("all"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AsymptoticSign {
    pub leading_exponent: LeadingOrder,
    pub leading_coeff: Rational,
    pub sign: i32,
}

/// Leading term of `λ(F) − λ(A)` as `α → ∞`.
pub fn lambda_diff_expansion(
    f: &ChernCharacter,
    a: &ChernCharacter,
    beta: &Rational,
    s: &Rational,
) -> Result<AsymptoticSign> {
    let k = s + Rational::new(1, 6);
    let tf = f.twist(beta);
    let ta = a.twist(beta);
    let (nf, df) = (numerator_poly(&tf, &k), denominator_poly(&tf));
    let (na, da) = (numerator_poly(&ta, &k), denominator_poly(&ta));
    for (d, x) in [(&df, f), (&da, a)] {
        if degree(d).is_none() {
            return Err(Error::UndefinedAtInfinity(format!("ρ of {x} vanishes identically")));
        }
    }
    let num = sub(&mul_linear(&nf, &da), &mul_linear(&na, &df));
    let den = mul_linear(&df, &da);
    let Some(dn) = degree(&num) else {
        return Ok(AsymptoticSign {
            leading_exponent: LeadingOrder::All,
            leading_coeff: Rational::zero(),
            sign: 0,
        });
    };
    let dd = degree(&den).expect("product of nonzero polynomials");
    let coeff = &num[dn] / &den[dd];
    Ok(AsymptoticSign {
        leading_exponent: LeadingOrder::Exponent(2 * (dn as i32 - dd as i32)),
        sign: coeff.signum(),
        leading_coeff: coeff,
    })
}

/// `(6s+1)/3·(μ(A) − β̄) + β̄`.
pub fn threshold(mu_a: &Rational, beta_bar: &Rational, s: &Rational) -> Rational {
    (s * 6 + 1) / 3 * (mu_a - beta_bar) + beta_bar
}

/// Quotient test: `ch3(P)/ch2(P) > threshold`, or `≥` when not strict.
/// Vacuously true when `ch2(P) = 0`.
pub fn check_quotient(p: &ChernCharacter, mu_a: &Rational, beta_bar: &Rational, s: &Rational, strict: bool) -> bool {
    if p.ch2.is_zero() {
        return true;
    }
    let ratio = &p.ch3 / &p.ch2;
    let t = threshold(mu_a, beta_bar, s);
    if strict {
        ratio > t
    } else {
        ratio >= t
    }
}

/// `(s+1/6)(μ(A) − β̄)·δ₂₀^β̄(F,A) − ½·δ₃₀^β̄(F,A) ≤ 0` for `μ(F) = μ(A)`.
pub fn check_sub_equal_slope(f: &ChernCharacter, a: &ChernCharacter, beta_bar: &Rational, s: &Rational) -> Result<bool> {
    if f.ch0.is_zero() || a.ch0.is_zero() {
        return Err(Error::Precondition("both ranks must be nonzero".into()));
    }
    let zero = Rational::zero();
    let (SlopeValue::Finite(mf), SlopeValue::Finite(ma)) = (mu(f, &zero), mu(a, &zero)) else {
        unreachable!("nonzero ranks give finite slopes");
    };
    if mf != ma {
        return Err(Error::Precondition(format!("μ(F) = {mf} differs from μ(A) = {ma}")));
    }
    let k = s + Rational::new(1, 6);
    let value = k * (&ma - beta_bar) * delta(2, 0, f, a, beta_bar)
        - delta(3, 0, f, a, beta_bar) * Rational::new(1, 2);
    Ok(!value.is_positive())
}

/// Subsheaf test: `ch3(R)/ch2(R) < threshold`, or `≤` when not strict.
pub fn check_subsheaf_qe(r: &ChernCharacter, mu_a: &Rational, beta_bar: &Rational, s: &Rational, strict: bool) -> Result<bool> {
    if !r.ch2.is_positive() {
        return Err(Error::Precondition(format!("ch2 of {r} must be positive")));
    }
    let ratio = &r.ch3 / &r.ch2;
    let t = threshold(mu_a, beta_bar, s);
    Ok(if strict { ratio < t } else { ratio <= t })
}

/// Which set of conditions to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Sufficient conditions for asymptotic stability, strict inequalities.
    Sufficient,
    /// Necessary conditions for asymptotic semistability, non-strict.
    Necessary,
    /// `v₀ < 0, v₁ = 0, v₂ > 0`, `s < 1/3`, β̄ slightly negative.
    SmallS,
    /// Same with `s > 1/3`.
    LargeS,
}

/// Character-level data for the five conditions.
///
/// Conditions (1) and (3) contain sheaf-level statements that cannot be read off
/// characters; `attested` records what the caller knows about them. A list left
/// as `None` means the data is missing; an empty list means there is nothing to
/// check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TheoremInput {
    pub mode: Mode,
    pub character: ChernCharacter,
    pub beta_bar: Rational,
    pub s: Rational,
    #[serde(default)]
    pub attested: BTreeMap<String, Option<bool>>,
    #[serde(default)]
    pub quotients: Option<Vec<ChernCharacter>>,
    #[serde(default)]
    pub equal_slope_subobjects: Option<Vec<ChernCharacter>>,
    #[serde(default)]
    pub double_dual_subsheaves: Option<Vec<ChernCharacter>>,
    #[serde(default)]
    pub lifted_subsheaves: Option<Vec<ChernCharacter>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConditionStatus {
    Pass,
    Fail,
    Attested,
    Indeterminate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub condition: String,
    pub status: ConditionStatus,
    pub witness: Option<String>,
}

/// `lower < β̄ < 0`, the explicit range where the small-β̄ variants apply.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidityInterval {
    pub lower: Rational,
    pub upper: Rational,
    pub contains_beta_bar: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub mode: Mode,
    pub threshold: Rational,
    pub conditions: Vec<ConditionReport>,
    pub validity: Option<ValidityInterval>,
    pub overall: ConditionStatus,
}

impl TheoremReport {
    pub fn any_failed(&self) -> bool {
        self.conditions.iter().any(|c| c.status == ConditionStatus::Fail)
    }
}

const SHEAF_LEVEL: &str = "sheaf-level condition, taken from caller attestation";

fn attestation(input: &TheoremInput, key: &str) -> Option<bool> {
    input.attested.get(key).copied().flatten()
}

/// Combines a numeric check over a list with an optional attestation.
fn combine(
    key: &str,
    input: &TheoremInput,
    items: Option<&Vec<ChernCharacter>>,
    sheaf_level: bool,
    mut check: impl FnMut(&ChernCharacter) -> Result<bool>,
) -> Result<ConditionReport> {
    let att = attestation(input, key);
    let report = |status, witness: Option<String>| ConditionReport {
        condition: key.to_string(),
        status,
        witness,
    };
    if att == Some(false) {
        return Ok(report(ConditionStatus::Fail, Some("attested false".into())));
    }
    let numeric = match items {
        None => None,
        Some(list) => {
            let mut failed = None;
            for x in list {
                if !check(x)? {
                    failed = Some(x.to_string());
                    break;
                }
            }
            Some(failed)
        }
    };
    if let Some(Some(w)) = numeric {
        return Ok(report(ConditionStatus::Fail, Some(w)));
    }
    if sheaf_level {
        return Ok(match att {
            Some(true) => report(ConditionStatus::Attested, Some(SHEAF_LEVEL.into())),
            _ => report(ConditionStatus::Indeterminate, Some(SHEAF_LEVEL.into())),
        });
    }
    Ok(match numeric {
        Some(_) => report(ConditionStatus::Pass, None),
        None if att == Some(true) => report(ConditionStatus::Attested, None),
        None => report(ConditionStatus::Indeterminate, Some("no data supplied".into())),
    })
}

/// Evaluates all five conditions for the chosen mode.
pub fn vert_theorem_report(input: &TheoremInput) -> Result<TheoremReport> {
    let a = &input.character;
    let s = &input.s;
    let bb = &input.beta_bar;
    if a.ch0.is_zero() {
        return Err(Error::Precondition("the object must have nonzero rank".into()));
    }
    if !s.is_positive() {
        return Err(Error::Parameter(format!("s must be positive, got {s}")));
    }
    let zero = Rational::zero();
    let mu_a = mu(a, &zero).finite().cloned().expect("nonzero rank");
    let t = threshold(&mu_a, bb, s);
    let third = Rational::new(1, 3);
    let small_beta = matches!(input.mode, Mode::SmallS | Mode::LargeS);
    if small_beta {
        if !(a.ch0.is_negative() && a.ch1.is_zero() && a.ch2.is_positive()) {
            return Err(Error::Precondition(format!("{a} must satisfy v0 < 0, v1 = 0, v2 > 0")));
        }
        let ok = match input.mode {
            Mode::SmallS => *s < third,
            _ => *s > third,
        };
        if !ok {
            return Err(Error::Precondition(format!("s = {s} is on the wrong side of 1/3 for this mode")));
        }
    }
    let strict = input.mode == Mode::Sufficient;

    let mut conditions = Vec::with_capacity(5);
    conditions.push(combine("1", input, None, true, |_| Ok(true))?);

    conditions.push(combine("2", input, input.quotients.as_ref(), false, |p| {
        Ok(match input.mode {
            Mode::Sufficient | Mode::Necessary => check_quotient(p, &mu_a, bb, s, strict),
            Mode::SmallS => p.ch2.is_negative() || !p.ch3.is_negative(),
            Mode::LargeS => !p.ch2.is_positive() || !p.ch3.is_negative(),
        })
    })?);

    let subs = match input.mode {
        Mode::Sufficient => None,
        _ => input.equal_slope_subobjects.as_ref(),
    };
    conditions.push(combine("3", input, subs, true, |f| match input.mode {
        Mode::Necessary => check_sub_equal_slope(f, a, bb, s),
        _ => {
            if !(f.ch1.is_zero() && a.ch0 < f.ch0 && f.ch0.is_negative()) {
                return Err(Error::Precondition(format!(
                    "subobject {f} must have μ = 0 and ch0(A) < ch0 < 0"
                )));
            }
            let d30 = delta(3, 0, f, a, &zero);
            let d20 = delta(2, 0, f, a, &zero);
            Ok(if d30.is_zero() {
                match input.mode {
                    Mode::SmallS => !d20.is_negative(),
                    _ => !d20.is_positive(),
                }
            } else {
                d30.is_positive()
            })
        }
    })?);

    conditions.push(combine("4", input, input.double_dual_subsheaves.as_ref(), false, |r| match input.mode {
        Mode::Sufficient | Mode::Necessary => check_subsheaf_qe(r, &mu_a, bb, s, strict),
        Mode::SmallS => Ok(r.ch3.is_negative()),
        Mode::LargeS => Ok(!r.ch3.is_positive()),
    })?);

    conditions.push(combine("5", input, input.lifted_subsheaves.as_ref(), false, |u| match input.mode {
        Mode::Sufficient | Mode::Necessary => {
            if u.ch2.is_positive() {
                check_subsheaf_qe(u, &mu_a, bb, s, strict)
            } else {
                Ok(false)
            }
        }
        Mode::SmallS => Ok(u.ch2.is_positive() && u.ch3.is_negative()),
        Mode::LargeS => Ok(u.ch2.is_positive() && !u.ch3.is_positive()),
    })?);

    let validity = small_beta.then(|| validity_interval(input));
    let overall = if conditions.iter().any(|c| c.status == ConditionStatus::Fail) {
        ConditionStatus::Fail
    } else if conditions.iter().any(|c| c.status == ConditionStatus::Indeterminate) {
        ConditionStatus::Indeterminate
    } else if conditions.iter().any(|c| c.status == ConditionStatus::Attested) {
        ConditionStatus::Attested
    } else {
        ConditionStatus::Pass
    };
    Ok(TheoremReport {
        mode: input.mode,
        threshold: t,
        conditions,
        validity,
        overall,
    })
}

/// `−3/(|2−6s|·ch2(A)) < β̄ < 0`, tightened by the δ₂₀ values of any supplied
/// subobjects whose sign could spoil condition (3).
fn validity_interval(input: &TheoremInput) -> ValidityInterval {
    let a = &input.character;
    let s = &input.s;
    let gap = (Rational::from_integer(2) - s * 6).abs();
    let mut lower = Rational::from_integer(-3) / (&gap * &a.ch2);
    let zero = Rational::zero();
    if let Some(subs) = &input.equal_slope_subobjects {
        for f in subs {
            let d20 = delta(2, 0, f, a, &zero);
            // β̄ must exceed 3/((6s−2)·δ₂₀) whenever that bound is negative.
            if !d20.is_zero() {
                let b = Rational::from_integer(3) / ((s * 6 - 2) * &d20);
                if b.is_negative() {
                    lower = lower.max(b);
                }
            }
        }
    }
    let upper = Rational::zero();
    let contains = input.beta_bar > lower && input.beta_bar < upper;
    ValidityInterval {
        lower,
        upper,
        contains_beta_bar: contains,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn ch(v: [(i64, i64); 4]) -> ChernCharacter {
        ChernCharacter::from_fracs(v)
    }

    #[test]
    fn expansion_examples() {
        let z = q(0, 1);
        let line = ch([(1, 1), (1, 1), (1, 2), (1, 6)]);
        let a = ChernCharacter::from_ints([-2, 0, 1, 0]);
        let x = lambda_diff_expansion(&line, &a, &z, &q(1, 3)).unwrap();
        assert_eq!(x.leading_exponent, LeadingOrder::Exponent(0));
        assert_eq!(x.leading_coeff, q(1, 1));
        assert_eq!(x.sign, 1);

        let same = lambda_diff_expansion(&a, &a, &z, &q(1, 2)).unwrap();
        assert_eq!(same.leading_exponent, LeadingOrder::All);
        assert_eq!(same.sign, 0);
    }

    #[test]
    fn torsion_against_positive_rank() {
        let (u2, u3) = (q(3, 1), q(-2, 1));
        let f = ChernCharacter::new(q(0, 1), q(0, 1), u2.clone(), u3.clone());
        let a = ch([(2, 1), (1, 1), (-1, 1), (1, 3)]);
        let beta = q(-1, 2);
        let s = q(2, 5);
        let mu_a = q(1, 2);
        // u₂, u₃ here are the twisted values; twisting a torsion sheaf by β shifts ch3 by −β·ch2.
        let tf = f.twist(&beta);
        let expected = &tf.ch3 / &tf.ch2 - (&s * 6 + 1) / 3 * (&mu_a - &beta);
        let x = lambda_diff_expansion(&f, &a, &beta, &s).unwrap();
        assert_eq!(x.leading_exponent, LeadingOrder::Exponent(0));
        assert_eq!(x.leading_coeff, expected);
        assert_eq!(x.leading_coeff, &u3 / &u2 - &beta - (&s * 6 + 1) / 3 * (&mu_a - &beta));
    }

    #[test]
    fn rank_zero_positive_degree_against_v() {
        let f = ch([(0, 1), (2, 1), (3, 2), (1, 5)]);
        let a = ChernCharacter::from_ints([-3, 0, 4, 0]);
        let s = q(1, 2);
        let x = lambda_diff_expansion(&f, &a, &q(0, 1), &s).unwrap();
        assert_eq!(x.leading_exponent, LeadingOrder::Exponent(2));
        assert_eq!(x.leading_coeff, -(&s * 6 + 1) / 6 * q(2, 1) / q(3, 2));
    }

    #[test]
    fn equal_low_parts_give_order_minus_two() {
        let a = ch([(-2, 1), (1, 1), (3, 2), (1, 6)]);
        let f = ch([(-2, 1), (1, 1), (3, 2), (5, 6)]);
        let x = lambda_diff_expansion(&f, &a, &q(0, 1), &q(1, 2)).unwrap();
        assert_eq!(x.leading_exponent, LeadingOrder::Exponent(-2));
        assert_eq!(x.leading_coeff, (&a.ch3 - &f.ch3) * 2 / &a.ch0);
    }

    #[test]
    fn undefined_at_infinity() {
        let zero_rho = ChernCharacter::from_ints([0, 1, 0, 0]);
        let a = ChernCharacter::from_ints([-2, 0, 1, 0]);
        assert!(matches!(
            lambda_diff_expansion(&zero_rho, &a, &q(0, 1), &q(1, 2)),
            Err(Error::UndefinedAtInfinity(_))
        ));
    }

    #[test]
    fn threshold_examples() {
        let bb = q(-3, 4);
        assert_eq!(threshold(&q(0, 1), &bb, &q(1, 2)), -(q(6, 2) - 2) / 3 * &bb);
        assert_eq!(threshold(&q(5, 7), &q(5, 7), &q(9, 1)), q(5, 7));
        assert_eq!(threshold(&q(0, 1), &q(0, 1), &q(1, 1)), q(0, 1));
        for b in [q(-5, 1), q(1, 3), q(7, 2)] {
            assert_eq!(threshold(&q(0, 1), &b, &q(1, 3)), q(0, 1));
        }
    }

    #[test]
    fn quotient_checks() {
        let z = q(0, 1);
        assert!(!check_quotient(&ChernCharacter::from_ints([0, 0, 1, 0]), &z, &q(-1, 1), &q(1, 2), true));
        assert!(check_quotient(&ChernCharacter::from_ints([0, 0, 1, 1]), &z, &z, &q(3, 1), true));
        let p = ChernCharacter::from_ints([0, 0, 4, 0]);
        assert!(check_quotient(&p, &z, &z, &q(1, 2), false));
        assert!(!check_quotient(&p, &z, &z, &q(1, 2), true));
        assert!(check_quotient(&ChernCharacter::from_ints([0, 0, 0, 5]), &z, &z, &q(1, 2), true));
    }

    #[test]
    fn equal_slope_checks() {
        for c in 1..=4 {
            for zz in 0..=4 {
                for p in 0..=zz {
                    let f = ChernCharacter::from_ints([-1, 0, c, p - zz]);
                    let a = ChernCharacter::from_ints([-2, 0, c, 0]);
                    for bb in [q(0, 1), q(-1, 2), q(-3, 1)] {
                        for s in [q(1, 3), q(1, 2), q(4, 1)] {
                            assert!(check_sub_equal_slope(&f, &a, &bb, &s).unwrap());
                        }
                    }
                }
            }
        }
        let a = ChernCharacter::from_ints([-2, 0, 1, 0]);
        assert!(check_sub_equal_slope(&a, &a, &q(-1, 3), &q(1, 2)).unwrap());
        let f = ChernCharacter::from_ints([-1, 0, 1, 1]);
        assert!(!check_sub_equal_slope(&f, &a, &q(0, 1), &q(1, 2)).unwrap());
        assert!(check_sub_equal_slope(&ChernCharacter::from_ints([-1, 1, 0, 0]), &a, &q(0, 1), &q(1, 2)).is_err());
        assert!(check_sub_equal_slope(&ChernCharacter::from_ints([0, 0, 1, 0]), &a, &q(0, 1), &q(1, 2)).is_err());
    }

    #[test]
    fn subsheaf_checks() {
        let z = q(0, 1);
        for x in [0, -1, -4] {
            for s in [q(1, 2), q(2, 1)] {
                let r = ChernCharacter::from_ints([0, 0, 3, x]);
                assert!(check_subsheaf_qe(&r, &z, &q(-1, 2), &s, true).unwrap());
            }
        }
        let r = ChernCharacter::from_ints([0, 0, 1, 0]);
        assert!(!check_subsheaf_qe(&r, &z, &z, &q(1, 2), true).unwrap());
        assert!(check_subsheaf_qe(&r, &z, &z, &q(1, 2), false).unwrap());
        assert!(check_subsheaf_qe(&ChernCharacter::from_ints([0, 0, 1, -1]), &z, &z, &q(1, 2), true).unwrap());
        assert!(check_subsheaf_qe(&ChernCharacter::from_ints([0, 0, 0, 1]), &z, &z, &q(1, 2), true).is_err());
    }

    fn input(mode: Mode, a: ChernCharacter, bb: Rational, s: Rational) -> TheoremInput {
        TheoremInput {
            mode,
            character: a,
            beta_bar: bb,
            s,
            attested: BTreeMap::new(),
            quotients: Some(vec![]),
            equal_slope_subobjects: Some(vec![]),
            double_dual_subsheaves: Some(vec![]),
            lifted_subsheaves: Some(vec![]),
        }
    }

    #[test]
    fn reflexive_stable_sheaf_is_vacuous() {
        let mut inp = input(Mode::Sufficient, ChernCharacter::from_ints([-2, 0, 1, 0]), q(-1, 2), q(1, 2));
        inp.attested.insert("1".into(), Some(true));
        inp.attested.insert("3".into(), Some(true));
        let rep = vert_theorem_report(&inp).unwrap();
        let statuses: Vec<_> = rep.conditions.iter().map(|c| c.status).collect();
        use ConditionStatus::*;
        assert_eq!(statuses, vec![Attested, Pass, Attested, Pass, Pass]);
        assert!(!rep.any_failed());
    }

    #[test]
    fn curve_ideal_violating_condition_four() {
        // I_L[1] for a line L has ch = (−1, 0, 1, −1) and O_L has (0, 0, 1, −1).
        // At s = 1/6, β̄ = −6 the bound −(6s−2)β̄/3 is −2 and −1 is not below it.
        let mut inp = input(Mode::Sufficient, ChernCharacter::from_ints([-1, 0, 1, -1]), q(-6, 1), q(1, 6));
        inp.double_dual_subsheaves = Some(vec![ChernCharacter::from_ints([0, 0, 1, -1])]);
        let rep = vert_theorem_report(&inp).unwrap();
        assert_eq!(rep.conditions[3].status, ConditionStatus::Fail);
        assert_eq!(rep.overall, ConditionStatus::Fail);
    }

    #[test]
    fn low_quotient_fails_condition_two() {
        let mut inp = input(Mode::Necessary, ChernCharacter::from_ints([-1, 0, 1, 0]), q(-1, 1), q(1, 2));
        inp.quotients = Some(vec![ChernCharacter::from_ints([0, 0, 1, 0])]);
        let rep = vert_theorem_report(&inp).unwrap();
        assert_eq!(rep.conditions[1].status, ConditionStatus::Fail);
    }

    #[test]
    fn missing_data_is_indeterminate() {
        let mut inp = input(Mode::Sufficient, ChernCharacter::from_ints([-2, 0, 1, 0]), q(-1, 2), q(1, 2));
        inp.quotients = None;
        let rep = vert_theorem_report(&inp).unwrap();
        assert_eq!(rep.conditions[0].status, ConditionStatus::Indeterminate);
        assert_eq!(rep.conditions[1].status, ConditionStatus::Indeterminate);
        assert_eq!(rep.overall, ConditionStatus::Indeterminate);
    }

    #[test]
    fn small_s_sign_tests() {
        let a = ChernCharacter::from_ints([-2, 0, 1, 0]);
        let mut inp = input(Mode::SmallS, a.clone(), q(-1, 10), q(1, 6));
        inp.double_dual_subsheaves = Some(vec![ChernCharacter::from_ints([0, 0, 1, 0])]);
        let rep = vert_theorem_report(&inp).unwrap();
        assert_eq!(rep.conditions[3].status, ConditionStatus::Fail);
        let v = rep.validity.unwrap();
        assert_eq!(v.lower, q(-3, 1));
        assert!(v.contains_beta_bar);

        let mut large = input(Mode::LargeS, a, q(-1, 10), q(1, 2));
        large.double_dual_subsheaves = Some(vec![ChernCharacter::from_ints([0, 0, 1, 0])]);
        large.equal_slope_subobjects = Some(vec![ChernCharacter::from_ints([-1, 0, 1, 0])]);
        let rep = vert_theorem_report(&large).unwrap();
        assert_eq!(rep.conditions[2].status, ConditionStatus::Indeterminate);
        assert_eq!(rep.conditions[3].status, ConditionStatus::Pass);
        assert!(!rep.any_failed());
    }

    #[test]
    fn mode_preconditions() {
        let a = ChernCharacter::from_ints([-2, 0, 1, 0]);
        assert!(vert_theorem_report(&input(Mode::SmallS, a.clone(), q(-1, 10), q(1, 2))).is_err());
        assert!(vert_theorem_report(&input(Mode::LargeS, a, q(-1, 10), q(1, 6))).is_err());
        let b = ChernCharacter::from_ints([0, 0, 1, 0]);
        assert!(vert_theorem_report(&input(Mode::Sufficient, b, q(0, 1), q(1, 2))).is_err());
    }

    #[test]
    fn input_parses_from_json() {
        let text = r#"{
            "mode": "large-s",
            "character": ["-2", "0", "1", "0"],
            "beta_bar": "-1/2",
            "s": "1/2",
            "attested": {"1": true, "3": null},
            "quotients": [],
            "double_dual_subsheaves": [["0","0","1","0"]]
        }"#;
        let inp: TheoremInput = serde_json::from_str(text).unwrap();
        assert_eq!(inp.mode, Mode::LargeS);
        assert_eq!(inp.attested.get("3"), Some(&None));
        assert!(inp.lifted_subsheaves.is_none());
    }
}
