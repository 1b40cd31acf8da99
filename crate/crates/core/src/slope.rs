//! Slope functions, central charge and the support-property form.
//!
//! α enters every formula only through α², so a slice point stores `alpha_sq`.
//! The tilt slope is the one quantity with an odd power of α; it is exposed as
//! the rational `α·ν`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::chern::ChernCharacter;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A point `(α², s)` of the vertical slice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SlicePoint {
    pub alpha_sq: Rational,
    pub s: Rational,
}

impl SlicePoint {
    pub fn new(alpha_sq: Rational, s: Rational) -> Result<Self> {
        if !alpha_sq.is_positive() {
            return Err(Error::Parameter(format!("α² must be positive, got {alpha_sq}")));
        }
        if !s.is_positive() {
            return Err(Error::Parameter(format!("s must be positive, got {s}")));
        }
        Ok(SlicePoint { alpha_sq, s })
    }

    /// `(6s+1)·α²`; equals 1 on the monad wall.
    pub fn monad_parameter(&self) -> Rational {
        (&self.s * 6 + 1) * &self.alpha_sq
    }

    /// `(s + 1/6)·α²`; equals the wall constant on the wall it lies on.
    pub fn wall_parameter(&self) -> Rational {
        (&self.s + Rational::new(1, 6)) * &self.alpha_sq
    }
}

/// A slope: finite, or `+∞` when the denominator vanishes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SlopeValue {
    Finite(Rational),
    PosInfinity,
}

impl SlopeValue {
    fn ratio(num: Rational, den: &Rational) -> SlopeValue {
        if den.is_zero() {
            SlopeValue::PosInfinity
        } else {
            SlopeValue::Finite(num / den)
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, SlopeValue::PosInfinity)
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            SlopeValue::Finite(x) => Some(x),
            SlopeValue::PosInfinity => None,
        }
    }

    /// Sign of the value; `+∞` counts as positive.
    pub fn signum(&self) -> i32 {
        match self {
            SlopeValue::Finite(x) => x.signum(),
            SlopeValue::PosInfinity => 1,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            SlopeValue::Finite(x) => x.to_f64(),
            SlopeValue::PosInfinity => f64::INFINITY,
        }
    }
}

impl PartialOrd for SlopeValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SlopeValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (SlopeValue::Finite(a), SlopeValue::Finite(b)) => a.cmp(b),
            (SlopeValue::Finite(_), SlopeValue::PosInfinity) => Ordering::Less,
            (SlopeValue::PosInfinity, SlopeValue::Finite(_)) => Ordering::Greater,
            (SlopeValue::PosInfinity, SlopeValue::PosInfinity) => Ordering::Equal,
        }
    }
}

impl fmt::Display for SlopeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlopeValue::Finite(x) => write!(f, "{x}"),
            SlopeValue::PosInfinity => f.write_str("+inf"),
        }
    }
}

impl Serialize for SlopeValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The tilt slope at a slice point, stored as the rational `α·ν`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TiltSlope {
    pub alpha_times_nu: SlopeValue,
    pub alpha_sq: Rational,
}

impl TiltSlope {
    pub fn signum(&self) -> i32 {
        self.alpha_times_nu.signum()
    }

    pub fn is_infinite(&self) -> bool {
        self.alpha_times_nu.is_infinite()
    }

    pub fn is_zero(&self) -> bool {
        self.signum() == 0
    }

    /// ν itself, which is irrational in general.
    pub fn to_f64(&self) -> f64 {
        self.alpha_times_nu.to_f64() / self.alpha_sq.to_f64().sqrt()
    }
}

/// `ch1^β / ch0`.
pub fn mu(v: &ChernCharacter, beta: &Rational) -> SlopeValue {
    let t = v.twist(beta);
    SlopeValue::ratio(t.ch1, &t.ch0)
}

/// `α·ν = (ch2^β − α²ch0/2) / ch1^β`.
pub fn nu(v: &ChernCharacter, p: &SlicePoint, beta: &Rational) -> TiltSlope {
    let t = v.twist(beta);
    TiltSlope {
        alpha_times_nu: SlopeValue::ratio(rho_twisted(&t, &p.alpha_sq), &t.ch1),
        alpha_sq: p.alpha_sq.clone(),
    }
}

/// `(ch3^β − (s+1/6)α²ch1^β) / (ch2^β − α²ch0/2)`.
pub fn lambda(v: &ChernCharacter, p: &SlicePoint, beta: &Rational) -> SlopeValue {
    lambda_at(v, &p.alpha_sq, &p.s, beta)
}

/// [`lambda`] at a raw `α²`, which may be zero or negative.
pub fn lambda_at(v: &ChernCharacter, alpha_sq: &Rational, s: &Rational, beta: &Rational) -> SlopeValue {
    let t = v.twist(beta);
    let k = s + Rational::new(1, 6);
    let num = &t.ch3 - k * alpha_sq * &t.ch1;
    SlopeValue::ratio(num, &rho_twisted(&t, alpha_sq))
}

/// `ch2^β − α²ch0/2`.
pub fn rho(v: &ChernCharacter, p: &SlicePoint, beta: &Rational) -> Rational {
    rho_at(v, &p.alpha_sq, beta)
}

pub fn rho_at(v: &ChernCharacter, alpha_sq: &Rational, beta: &Rational) -> Rational {
    rho_twisted(&v.twist(beta), alpha_sq)
}

fn rho_twisted(t: &ChernCharacter, alpha_sq: &Rational) -> Rational {
    &t.ch2 - alpha_sq * &t.ch0 * Rational::new(1, 2)
}

/// `ch_i^β(F)·ch_j^β(A) − ch_j^β(F)·ch_i^β(A)`.
pub fn delta(i: usize, j: usize, f: &ChernCharacter, a: &ChernCharacter, beta: &Rational) -> Rational {
    assert!(i < 4 && j < 4, "delta indices must lie in 0..4, got ({i}, {j})");
    let tf = f.twist(beta);
    let ta = a.twist(beta);
    &tf[i] * &ta[j] - &tf[j] * &ta[i]
}

/// Real and imaginary parts of `Z = −ch3^β + (s+1/6)α²ch1^β + i·ρ`.
pub fn central_charge(v: &ChernCharacter, p: &SlicePoint, beta: &Rational) -> (Rational, Rational) {
    let t = v.twist(beta);
    let k = &p.s + Rational::new(1, 6);
    let re = -&t.ch3 + k * &p.alpha_sq * &t.ch1;
    let im = rho_twisted(&t, &p.alpha_sq);
    (re, im)
}

/// The matrix `B_{α,K}` of the support-property form, with `a = α²`.
pub fn q_matrix(alpha_sq: &Rational, k: &Rational) -> [[Rational; 4]; 4] {
    let ka = k * alpha_sq;
    let z = Rational::zero;
    [
        [z(), z(), -&ka, z()],
        [z(), ka.clone(), z(), Rational::from_integer(-3)],
        [-&ka, z(), Rational::from_integer(4), z()],
        [z(), Rational::from_integer(-3), z(), z()],
    ]
}

/// `ch^β(F)ᵀ · B_{α,K} · ch^β(A)`.
pub fn q_form(
    f: &ChernCharacter,
    a: &ChernCharacter,
    p: &SlicePoint,
    k: &Rational,
    beta: &Rational,
) -> Rational {
    q_form_at(f, a, &p.alpha_sq, k, beta)
}

/// [`q_form`] at a raw `α²`; enumeration evaluates it at the limit `α² = 0`.
pub fn q_form_at(
    f: &ChernCharacter,
    a: &ChernCharacter,
    alpha_sq: &Rational,
    k: &Rational,
    beta: &Rational,
) -> Rational {
    let tf = f.twist(beta);
    let ta = a.twist(beta);
    let b = q_matrix(alpha_sq, k);
    let mut total = Rational::zero();
    for (i, row) in b.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            if !entry.is_zero() {
                total += entry * &tf[i] * &ta[j];
            }
        }
    }
    total
}

/// `Kα²(c² − 2rd) + 4d² − 6ce` for `A = (r,c,d,e)` in twisted coordinates.
pub fn q_form_closed(a: &ChernCharacter, alpha_sq: &Rational, k: &Rational) -> Rational {
    let (r, c, d, e) = (&a.ch0, &a.ch1, &a.ch2, &a.ch3);
    k * alpha_sq * (c * c - r * d * 2) + d * d * 4 - c * e * 6
}

/// Whether `1 ≤ K < 6s+1`, the range in which the form is known to work.
pub fn q_constant_in_range(k: &Rational, s: &Rational) -> bool {
    *k >= Rational::one() && *k < s * 6 + 1
}
