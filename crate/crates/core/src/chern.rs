//! Chern characters on P³ in H-power coordinates.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::rational::Rational;

/// `(ch0, ch1, ch2, ch3)`, serialized as a four-element array of rational strings.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[Rational; 4]", into = "[Rational; 4]")]
pub struct ChernCharacter {
    pub ch0: Rational,
    pub ch1: Rational,
    pub ch2: Rational,
    pub ch3: Rational,
}

impl ChernCharacter {
    pub fn new(ch0: Rational, ch1: Rational, ch2: Rational, ch3: Rational) -> Self {
        ChernCharacter { ch0, ch1, ch2, ch3 }
    }

    /// Builds a character from `(numerator, denominator)` pairs.
    pub fn from_fracs(v: [(i64, i64); 4]) -> Self {
        let [a, b, c, d] = v.map(|(n, d)| Rational::new(n, d));
        ChernCharacter::new(a, b, c, d)
    }

    pub fn from_ints(v: [i64; 4]) -> Self {
        let [a, b, c, d] = v.map(Rational::from_integer);
        ChernCharacter::new(a, b, c, d)
    }

    pub fn zero() -> Self {
        ChernCharacter::from_ints([0, 0, 0, 0])
    }

    /// `(-R, 0, D, 0)`.
    pub fn v(rank: i64, degree: &Rational) -> Self {
        ChernCharacter::new(
            Rational::from_integer(-rank),
            Rational::zero(),
            degree.clone(),
            Rational::zero(),
        )
    }

    pub fn components(&self) -> [&Rational; 4] {
        [&self.ch0, &self.ch1, &self.ch2, &self.ch3]
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(|x| x.is_zero())
    }

    /// `e^{-βH}·ch`.
    pub fn twist(&self, beta: &Rational) -> ChernCharacter {
        if beta.is_zero() {
            return self.clone();
        }
        let b2 = beta * beta;
        let b3 = &b2 * beta;
        let half = Rational::new(1, 2);
        let sixth = Rational::new(1, 6);
        ChernCharacter {
            ch0: self.ch0.clone(),
            ch1: &self.ch1 - beta * &self.ch0,
            ch2: &self.ch2 - beta * &self.ch1 + &half * &b2 * &self.ch0,
            ch3: &self.ch3 - beta * &self.ch2 + &half * &b2 * &self.ch1
                - &sixth * &b3 * &self.ch0,
        }
    }

    /// Character of `E[n]`.
    pub fn shift(&self, n: i64) -> ChernCharacter {
        if n.rem_euclid(2) == 0 {
            self.clone()
        } else {
            -self.clone()
        }
    }

    /// Character of `E^∨[2]`.
    pub fn dual_shift2(&self) -> ChernCharacter {
        ChernCharacter {
            ch0: self.ch0.clone(),
            ch1: -&self.ch1,
            ch2: self.ch2.clone(),
            ch3: -&self.ch3,
        }
    }

    /// Integrality of c₂, c₃ and χ for a character at β = 0.
    pub fn integrality_beta0(&self) -> bool {
        let v1 = &self.ch1;
        let v2 = &self.ch2;
        let v3 = &self.ch3;
        let v1sq = v1 * v1;
        let c2 = v2 - &v1sq * Rational::new(1, 2);
        let c3 = v3 * 2 - v1 * v2 + &v1sq * v1 * Rational::new(1, 6);
        let chi = v3 - v1 * Rational::new(1, 6);
        c2.is_integer() && c3.is_integer() && chi.is_integer()
    }

    pub fn bogomolov(&self) -> bool {
        self.discriminant().signum() >= 0
    }

    /// `ch1² − 2·ch0·ch2`.
    pub fn discriminant(&self) -> Rational {
        &self.ch1 * &self.ch1 - &self.ch0 * &self.ch2 * 2
    }
}

/// Free-function form of [`ChernCharacter::twist`].
pub fn twist(v: &ChernCharacter, beta: &Rational) -> ChernCharacter {
    v.twist(beta)
}

pub fn shift(v: &ChernCharacter, n: i64) -> ChernCharacter {
    v.shift(n)
}

pub fn dual_shift2(v: &ChernCharacter) -> ChernCharacter {
    v.dual_shift2()
}

pub fn integrality_beta0(v: &ChernCharacter) -> bool {
    v.integrality_beta0()
}

pub fn bogomolov(v: &ChernCharacter) -> bool {
    v.bogomolov()
}

impl From<[Rational; 4]> for ChernCharacter {
    fn from([a, b, c, d]: [Rational; 4]) -> Self {
        ChernCharacter::new(a, b, c, d)
    }
}

impl From<ChernCharacter> for [Rational; 4] {
    fn from(v: ChernCharacter) -> Self {
        [v.ch0, v.ch1, v.ch2, v.ch3]
    }
}

impl Index<usize> for ChernCharacter {
    type Output = Rational;

    fn index(&self, i: usize) -> &Rational {
        match i {
            0 => &self.ch0,
            1 => &self.ch1,
            2 => &self.ch2,
            3 => &self.ch3,
            _ => panic!("Chern character index {i} out of range 0..4"),
        }
    }
}

impl Add for ChernCharacter {
    type Output = ChernCharacter;
    fn add(self, o: ChernCharacter) -> ChernCharacter {
        &self + &o
    }
}

impl Add for &ChernCharacter {
    type Output = ChernCharacter;
    fn add(self, o: &ChernCharacter) -> ChernCharacter {
        ChernCharacter {
            ch0: &self.ch0 + &o.ch0,
            ch1: &self.ch1 + &o.ch1,
            ch2: &self.ch2 + &o.ch2,
            ch3: &self.ch3 + &o.ch3,
        }
    }
}

impl Sub for ChernCharacter {
    type Output = ChernCharacter;
    fn sub(self, o: ChernCharacter) -> ChernCharacter {
        &self - &o
    }
}

impl Sub for &ChernCharacter {
    type Output = ChernCharacter;
    fn sub(self, o: &ChernCharacter) -> ChernCharacter {
        ChernCharacter {
            ch0: &self.ch0 - &o.ch0,
            ch1: &self.ch1 - &o.ch1,
            ch2: &self.ch2 - &o.ch2,
            ch3: &self.ch3 - &o.ch3,
        }
    }
}

impl Neg for ChernCharacter {
    type Output = ChernCharacter;
    fn neg(self) -> ChernCharacter {
        ChernCharacter {
            ch0: -self.ch0,
            ch1: -self.ch1,
            ch2: -self.ch2,
            ch3: -self.ch3,
        }
    }
}

impl Mul<&ChernCharacter> for &Rational {
    type Output = ChernCharacter;
    fn mul(self, v: &ChernCharacter) -> ChernCharacter {
        ChernCharacter {
            ch0: self * &v.ch0,
            ch1: self * &v.ch1,
            ch2: self * &v.ch2,
            ch3: self * &v.ch3,
        }
    }
}

impl fmt::Display for ChernCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.ch0, self.ch1, self.ch2, self.ch3)
    }
}

impl fmt::Debug for ChernCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
